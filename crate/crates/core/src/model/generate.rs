//! Random instance generators for the three benchmark classes.
//!
//! All generators draw from a ChaCha8 stream seeded with `seed` (a
//! counter-based generator, so streams are reproducible across platforms).
//! Integers are uniform and inclusive of both endpoints. The draw order is
//! part of the contract and documented on each generator.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{ClassTag, Constraint, Instance, Sense};
use crate::error::{Error, Result};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn draw_vec(rng: &mut ChaCha8Rng, len: usize, lo: i64, hi: i64) -> Vec<i64> {
    (0..len).map(|_| rng.gen_range(lo..=hi)).collect()
}

/// Multidimensional knapsack, max sense.
///
/// Draw order: `c¹` (n values), `c²` (n), `w` (n), then for every extra row
/// `j`: its factor `r_j` followed by its n weights.
pub fn gen_knapsack(n: usize, m: usize, seed: u64) -> Result<Instance> {
    if n == 0 {
        return Err(Error::Parameter("knapsack needs n >= 1".into()));
    }
    if !(1..=3).contains(&m) {
        return Err(Error::Parameter(format!(
            "knapsack m must be 1, 2 or 3, got {m}"
        )));
    }
    let mut rng = rng(seed);
    let c1 = draw_vec(&mut rng, n, 50, 100);
    let c2 = draw_vec(&mut rng, n, 50, 100);
    let w = draw_vec(&mut rng, n, 5, 15);
    let mut rows = vec![Constraint::le(w, 5 * n as i64)];
    for _ in 1..m {
        let r: i64 = rng.gen_range(5..=15);
        let v = draw_vec(&mut rng, n, 5, 15);
        rows.push(Constraint::le(v, r * n as i64 / 2));
    }
    Instance::new(
        Sense::Max,
        [c1, c2],
        rows,
        ClassTag::Knapsack { m },
        Some(seed),
    )
}

/// Linear assignment with `l` agents and tasks, max sense.
///
/// Variable `x_ij` has index `i * l + j`. Rows: the `l` column sums, then
/// the `l` row sums. Draw order: all of `c¹` row-major, then `c²`.
pub fn gen_assignment(l: usize, seed: u64) -> Result<Instance> {
    if l < 2 {
        return Err(Error::Parameter("assignment needs l >= 2".into()));
    }
    let n = l * l;
    let mut rng = rng(seed);
    let c1 = draw_vec(&mut rng, n, 50, 100);
    let c2 = draw_vec(&mut rng, n, 50, 100);
    let mut rows = Vec::with_capacity(2 * l);
    for j in 0..l {
        let mut a = vec![0; n];
        for i in 0..l {
            a[i * l + j] = 1;
        }
        rows.push(Constraint::eq(a, 1));
    }
    for i in 0..l {
        let mut a = vec![0; n];
        a[i * l..(i + 1) * l].fill(1);
        rows.push(Constraint::eq(a, 1));
    }
    Instance::new(
        Sense::Max,
        [c1, c2],
        rows,
        ClassTag::Assignment { l },
        Some(seed),
    )
}

/// Uncapacitated discrete facility location with `l` customers and `q`
/// facilities, min sense.
///
/// Variables: `x_ij` at `i * q + j`, then `y_j` at `l * q + j`.
/// Draw order: customer coordinates (x, y per customer), facility
/// coordinates, `c²_ij` row-major, `f¹_j`, `f²_j`. The first objective uses
/// L1 distances rounded to the nearest integer.
pub fn gen_facility_location(l: usize, q: usize, seed: u64) -> Result<Instance> {
    if l == 0 || q == 0 {
        return Err(Error::Parameter(
            "facility location needs l >= 1 and q >= 1".into(),
        ));
    }
    let mut rng = rng(seed);
    let mut coords = |count: usize| -> Vec<(f64, f64)> {
        (0..count)
            .map(|_| (rng.gen_range(0.0..=200.0), rng.gen_range(0.0..=200.0)))
            .collect()
    };
    let customers = coords(l);
    let facilities = coords(q);
    let c2 = draw_vec(&mut rng, l * q, 1, 200);
    let f1 = draw_vec(&mut rng, q, 200, 400);
    let f2 = draw_vec(&mut rng, q, 200, 400);

    let n = (l + 1) * q;
    let mut obj1 = Vec::with_capacity(n);
    for &(cx, cy) in &customers {
        for &(fx, fy) in &facilities {
            obj1.push(l1_distance((cx, cy), (fx, fy)));
        }
    }
    obj1.extend_from_slice(&f1);
    let mut obj2 = c2;
    obj2.extend_from_slice(&f2);

    let y = |j: usize| l * q + j;
    let mut rows = Vec::with_capacity(l + l * q);
    for i in 0..l {
        let mut a = vec![0; n];
        a[i * q..(i + 1) * q].fill(1);
        rows.push(Constraint::eq(a, 1));
    }
    for i in 0..l {
        for j in 0..q {
            let mut a = vec![0; n];
            a[i * q + j] = 1;
            a[y(j)] = -1;
            rows.push(Constraint::le(a, 0));
        }
    }
    Instance::new(
        Sense::Min,
        [obj1, obj2],
        rows,
        ClassTag::FacilityLocation { l, q },
        Some(seed),
    )
}

fn l1_distance(a: (f64, f64), b: (f64, f64)) -> i64 {
    ((a.0 - b.0).abs() + (a.1 - b.1).abs()).round() as i64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::Relation;

    #[test]
    fn knapsack_shapes() {
        let inst = gen_knapsack(50, 1, 1).unwrap();
        assert_eq!(inst.constraints().len(), 1);
        assert_eq!(inst.constraints()[0].rhs, 250);
        assert_eq!(inst.sense(), Sense::Max);

        let inst = gen_knapsack(10, 3, 2).unwrap();
        assert_eq!(inst.constraints().len(), 3);
        for row in &inst.constraints()[1..] {
            assert!((25..=75).contains(&row.rhs), "rhs {}", row.rhs);
        }
    }

    #[test]
    fn knapsack_rejects_bad_m() {
        assert!(matches!(gen_knapsack(10, 4, 0), Err(Error::Parameter(_))));
        assert!(matches!(gen_knapsack(10, 0, 0), Err(Error::Parameter(_))));
    }

    #[test]
    fn generators_are_deterministic() {
        assert_eq!(
            gen_knapsack(20, 2, 9).unwrap(),
            gen_knapsack(20, 2, 9).unwrap()
        );
        assert_ne!(
            gen_knapsack(20, 2, 9).unwrap(),
            gen_knapsack(20, 2, 10).unwrap()
        );
        assert_eq!(gen_assignment(5, 3).unwrap(), gen_assignment(5, 3).unwrap());
        assert_eq!(
            gen_facility_location(6, 2, 4).unwrap(),
            gen_facility_location(6, 2, 4).unwrap()
        );
    }

    #[test]
    fn assignment_shapes() {
        let inst = gen_assignment(10, 0).unwrap();
        assert_eq!(inst.n(), 100);
        assert_eq!(inst.constraints().len(), 20);
        assert!(inst
            .constraints()
            .iter()
            .all(|c| c.relation == Relation::Eq));
    }

    #[test]
    fn assignment_l2_has_two_feasible_points() {
        let inst = gen_assignment(2, 5).unwrap();
        let feasible = (0u32..16)
            .filter(|mask| {
                let x: Vec<u8> = (0..4).map(|i| ((mask >> i) & 1) as u8).collect();
                inst.is_feasible(&x).unwrap()
            })
            .count();
        assert_eq!(feasible, 2);
    }

    #[test]
    fn assignment_permutation_matrix_is_feasible() {
        let inst = gen_assignment(2, 1).unwrap();
        assert!(inst.is_feasible(&[1, 0, 0, 1]).unwrap());
        assert!(inst.is_feasible(&[0, 1, 1, 0]).unwrap());
        assert!(!inst.is_feasible(&[1, 1, 0, 0]).unwrap());
    }

    #[test]
    fn facility_location_sizes() {
        assert_eq!(gen_facility_location(15, 3, 0).unwrap().n(), 48);
        assert_eq!(gen_facility_location(30, 6, 0).unwrap().n(), 186);
        let inst = gen_facility_location(4, 2, 0).unwrap();
        assert_eq!(inst.constraints().len(), 4 + 8);
        assert_eq!(inst.sense(), Sense::Min);
    }

    #[test]
    fn zero_distance_for_coincident_points() {
        assert_eq!(l1_distance((12.5, 80.25), (12.5, 80.25)), 0);
        assert_eq!(l1_distance((0.0, 0.0), (1.4, 1.3)), 3);
    }

    #[test]
    fn coefficient_ranges_hold_over_many_samples() {
        for seed in 0..1000u64 {
            let k = gen_knapsack(8, 1 + (seed % 3) as usize, seed).unwrap();
            for o in 0..2 {
                assert!(k
                    .original_objective(o)
                    .iter()
                    .all(|c| (50..=100).contains(c)));
            }
            for (j, row) in k.constraints().iter().enumerate() {
                assert!(row.coeffs.iter().all(|c| (5..=15).contains(c)));
                if j == 0 {
                    assert_eq!(row.rhs, 40);
                } else {
                    assert!((20..=60).contains(&row.rhs));
                }
            }

            let a = gen_assignment(3, seed).unwrap();
            for o in 0..2 {
                assert!(a
                    .original_objective(o)
                    .iter()
                    .all(|c| (50..=100).contains(c)));
            }

            let f = gen_facility_location(3, 2, seed).unwrap();
            let (l, q) = (3, 2);
            assert!(f.objective(0)[..l * q]
                .iter()
                .all(|c| (0..=400).contains(c)));
            assert!(f.objective(1)[..l * q]
                .iter()
                .all(|c| (1..=200).contains(c)));
            for o in 0..2 {
                assert!(f.objective(o)[l * q..]
                    .iter()
                    .all(|c| (200..=400).contains(c)));
            }
        }
    }
}
