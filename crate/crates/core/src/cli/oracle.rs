//! Exhaustive enumeration oracle, independent of the LP machinery.

use crate::model::{ClassTag, Image, Instance, Point2};
use crate::{Error, Result};

/// Largest `n` enumerated over all 0/1 vectors.
pub const MAX_ENUM_VARS: usize = 24;
/// Largest assignment size enumerated over permutations.
pub const MAX_ASSIGNMENT_L: usize = 8;
/// Largest facility count enumerated over open sets.
pub const MAX_FACILITIES: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleResult {
    /// Nondominated images in minimization sense, sorted by `z1`.
    pub frontier: Vec<Image>,
    /// Number of candidate images examined.
    pub enumerated: u64,
}

/// Nondominated subset of `points`, sorted by `z1` ascending.
pub fn pareto_filter(mut points: Vec<Image>) -> Vec<Image> {
    points.sort_unstable();
    points.dedup();
    let mut out: Vec<Image> = Vec::new();
    for p in points {
        // Sorted by (z1, z2): p is dominated iff some kept point has z2 <= p.z2.
        if out.last().is_none_or(|q| p.z2 < q.z2) {
            out.push(p);
        }
    }
    out
}

/// Exact nondominated set of `inst` by exhaustive enumeration.
pub fn brute_force_frontier(inst: &Instance) -> Result<OracleResult> {
    match inst.class() {
        ClassTag::Assignment { l } if inst.n() > MAX_ENUM_VARS => assignment(inst, l),
        ClassTag::FacilityLocation { l, q } if inst.n() > MAX_ENUM_VARS => facility(inst, l, q),
        _ => all_vectors(inst),
    }
}

/// Enumerates every 0/1 vector in Gray-code order, updating sums in O(m).
pub fn all_vectors(inst: &Instance) -> Result<OracleResult> {
    let n = inst.n();
    if n > MAX_ENUM_VARS {
        return Err(Error::OracleGuard(format!(
            "{n} variables exceed the enumeration limit of {MAX_ENUM_VARS}"
        )));
    }
    let rows = inst.constraints();
    let mut act = vec![0i64; rows.len()];
    let mut z = [0i64; 2];
    let mut x = vec![false; n];
    let mut found = Vec::new();
    let feasible = |act: &[i64]| rows.iter().zip(act).all(|(c, &a)| c.is_satisfied_by(a));
    if feasible(&act) {
        found.push(Point2::new(0, 0));
    }
    for k in 1u64..(1u64 << n) {
        let j = k.trailing_zeros() as usize;
        let sign = if x[j] { -1 } else { 1 };
        x[j] = !x[j];
        for (a, c) in act.iter_mut().zip(rows) {
            *a += sign * c.coeffs[j];
        }
        z[0] += sign * inst.objective(0)[j];
        z[1] += sign * inst.objective(1)[j];
        if feasible(&act) {
            found.push(Point2::new(z[0], z[1]));
            if found.len() > 1 << 16 {
                found = pareto_filter(found);
            }
        }
    }
    Ok(OracleResult {
        frontier: pareto_filter(found),
        enumerated: 1u64 << n,
    })
}

fn heap_permutations(l: usize, mut visit: impl FnMut(&[usize])) {
    let mut p: Vec<usize> = (0..l).collect();
    let mut c = vec![0; l];
    visit(&p);
    let mut i = 0;
    while i < l {
        if c[i] < i {
            if i % 2 == 0 {
                p.swap(0, i);
            } else {
                p.swap(c[i], i);
            }
            visit(&p);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Assignment: one image per permutation, `x_{i,π(i)} = 1`.
fn assignment(inst: &Instance, l: usize) -> Result<OracleResult> {
    if l > MAX_ASSIGNMENT_L {
        return Err(Error::OracleGuard(format!(
            "assignment size {l} exceeds the permutation limit of {MAX_ASSIGNMENT_L}"
        )));
    }
    let (c1, c2) = (inst.objective(0), inst.objective(1));
    let mut found = Vec::new();
    let mut count = 0u64;
    heap_permutations(l, |p| {
        count += 1;
        let z1 = (0..l).map(|i| c1[i * l + p[i]]).sum();
        let z2 = (0..l).map(|i| c2[i * l + p[i]]).sum();
        found.push(Point2::new(z1, z2));
    });
    Ok(OracleResult {
        frontier: pareto_filter(found),
        enumerated: count,
    })
}

/// Facility location: for every nonempty open set, the Pareto-filtered
/// Minkowski sum of each customer's options plus the opening costs.
fn facility(inst: &Instance, l: usize, q: usize) -> Result<OracleResult> {
    if q > MAX_FACILITIES {
        return Err(Error::OracleGuard(format!(
            "{q} facilities exceed the open-set limit of {MAX_FACILITIES}"
        )));
    }
    let (c1, c2) = (inst.objective(0), inst.objective(1));
    let mut found = Vec::new();
    let mut count = 0u64;
    for open in 1u32..(1 << q) {
        let js: Vec<usize> = (0..q).filter(|j| open >> j & 1 == 1).collect();
        let fixed = js.iter().fold(Point2::new(0, 0), |acc, &j| {
            Point2::new(acc.z1 + c1[l * q + j], acc.z2 + c2[l * q + j])
        });
        let mut sums = vec![fixed];
        for i in 0..l {
            let mut next = Vec::with_capacity(sums.len() * js.len());
            for s in &sums {
                for &j in &js {
                    next.push(Point2::new(s.z1 + c1[i * q + j], s.z2 + c2[i * q + j]));
                }
            }
            count += next.len() as u64;
            sums = pareto_filter(next);
        }
        found.extend(sums);
    }
    Ok(OracleResult {
        frontier: pareto_filter(found),
        enumerated: count,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{gen_assignment, gen_facility_location, gen_knapsack, Constraint, Sense};

    #[test]
    fn three_item_knapsack_has_three_points() {
        let inst = Instance::new(
            Sense::Max,
            [vec![3, 2, 1], vec![1, 2, 3]],
            vec![Constraint::le(vec![1, 1, 1], 1)],
            ClassTag::Generic,
            None,
        )
        .unwrap();
        let r = brute_force_frontier(&inst).unwrap();
        let orig: Vec<Image> = r.frontier.iter().map(|p| inst.to_original(*p)).collect();
        assert_eq!(
            orig,
            vec![Point2::new(3, 1), Point2::new(2, 2), Point2::new(1, 3)]
        );
        assert_eq!(r.enumerated, 8);
    }

    #[test]
    fn infeasible_and_identical_objectives() {
        let inf =
            Instance::generic_min([vec![1], vec![1]], vec![Constraint::le(vec![1], -1)]).unwrap();
        assert!(brute_force_frontier(&inf).unwrap().frontier.is_empty());
        let same = Instance::generic_min([vec![1, 2], vec![1, 2]], vec![]).unwrap();
        assert_eq!(
            brute_force_frontier(&same).unwrap().frontier,
            vec![Point2::new(0, 0)]
        );
    }

    #[test]
    fn guard_refuses_large_instances() {
        let inst = gen_knapsack(25, 1, 0).unwrap();
        assert!(matches!(
            brute_force_frontier(&inst),
            Err(Error::OracleGuard(_))
        ));
    }

    #[test]
    fn structured_enumerations_agree_with_all_vectors() {
        for seed in 0..4 {
            let a = gen_assignment(4, seed).unwrap();
            assert_eq!(
                assignment(&a, 4).unwrap().frontier,
                all_vectors(&a).unwrap().frontier
            );
            let f = gen_facility_location(5, 3, seed).unwrap();
            assert_eq!(
                facility(&f, 5, 3).unwrap().frontier,
                all_vectors(&f).unwrap().frontier
            );
        }
    }

    #[test]
    fn pareto_filter_drops_dominated_and_duplicates() {
        let pts = [(3, 3), (1, 5), (3, 3), (2, 5), (4, 1), (5, 1)].map(|(a, b)| Point2::new(a, b));
        let want = [(1, 5), (3, 3), (4, 1)].map(|(a, b)| Point2::new(a, b));
        assert_eq!(pareto_filter(pts.to_vec()), want.to_vec());
    }
}
