//! Lower bound sets from the bi-objective LP relaxation.
//!
//! The nondominated boundary of `{Cx : x ∈ LP relaxation}` is a convex,
//! monotone polyline. It is computed by the dichotomic scheme: solve the two
//! lexicographic endpoints, then repeatedly minimize the weighted sum whose
//! normal is perpendicular to the segment between two neighbouring points.

use std::cmp::Ordering;

use serde::Serialize;

use crate::error::Result;
use crate::lp::{dot, LpProblem, LpRow, RowRelation, Simplex};
use crate::model::{Image, Instance, Point2, Relation, Solution};
use crate::numeric::{cmp, Scalar};

/// Variable fixings of a subproblem: `None` free, `Some(v)` fixed to `v`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Fixings {
    state: Vec<Option<bool>>,
}

impl Fixings {
    pub fn free(n: usize) -> Self {
        Fixings {
            state: vec![None; n],
        }
    }

    pub fn n(&self) -> usize {
        self.state.len()
    }

    pub fn get(&self, i: usize) -> Option<bool> {
        self.state[i]
    }

    pub fn is_fixed(&self, i: usize) -> bool {
        self.state[i].is_some()
    }

    /// Returns a copy with `i` fixed to `value`.
    pub fn with(&self, i: usize, value: bool) -> Self {
        let mut f = self.clone();
        f.state[i] = Some(value);
        f
    }

    /// Indices fixed to 0 (`F0`).
    pub fn zeros(&self) -> Vec<usize> {
        self.indices(false)
    }

    /// Indices fixed to 1 (`F1`).
    pub fn ones(&self) -> Vec<usize> {
        self.indices(true)
    }

    fn indices(&self, v: bool) -> Vec<usize> {
        (0..self.state.len())
            .filter(|&i| self.state[i] == Some(v))
            .collect()
    }

    pub fn first_free(&self) -> Option<usize> {
        self.state.iter().position(Option::is_none)
    }

    pub fn fixed_count(&self) -> usize {
        self.state.iter().filter(|s| s.is_some()).count()
    }
}

/// Where a polyline vertex came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Origin {
    Relaxation,
    WsCut,
    AwtCut,
}

/// Monotone polyline `L`: z1 strictly increasing, z2 strictly decreasing.
///
/// It is read together with a vertical ray going up from the first vertex
/// and a horizontal ray going right from the last, so `L + R²≧` is the
/// closed region on or above-right of this staircase-free boundary.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundPolyline<S> {
    vertices: Vec<Point2<S>>,
    origins: Vec<Origin>,
    convex: bool,
}

impl<S: Scalar> BoundPolyline<S> {
    /// Builds a polyline; panics if the vertices are not strictly monotone.
    pub fn new(vertices: Vec<Point2<S>>, origins: Vec<Origin>) -> Self {
        assert!(!vertices.is_empty(), "a polyline needs at least one vertex");
        assert_eq!(vertices.len(), origins.len());
        for w in vertices.windows(2) {
            assert!(
                cmp(&w[0].z1, &w[1].z1) == Ordering::Less
                    && cmp(&w[0].z2, &w[1].z2) == Ordering::Greater,
                "polyline vertices must be strictly monotone: {:?} then {:?}",
                w[0],
                w[1]
            );
        }
        let convex = is_convex_chain(&vertices);
        BoundPolyline {
            vertices,
            origins,
            convex,
        }
    }

    /// Polyline whose vertices all come from the relaxation.
    pub fn from_relaxation(vertices: Vec<Point2<S>>) -> Self {
        let origins = vec![Origin::Relaxation; vertices.len()];
        Self::new(vertices, origins)
    }

    /// Relaxation polyline from `((num, den), (num, den))` coordinates.
    #[allow(clippy::type_complexity)]
    pub fn from_ratios(points: &[((i64, i64), (i64, i64))]) -> Self {
        Self::from_relaxation(
            points
                .iter()
                .map(|&((a, b), (c, d))| Point2::new(S::from_ratio(a, b), S::from_ratio(c, d)))
                .collect(),
        )
    }

    pub fn vertices(&self) -> &[Point2<S>] {
        &self.vertices
    }

    pub fn origins(&self) -> &[Origin] {
        &self.origins
    }

    pub fn is_convex(&self) -> bool {
        self.convex
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn first(&self) -> &Point2<S> {
        &self.vertices[0]
    }

    pub fn last(&self) -> &Point2<S> {
        self.vertices.last().expect("nonempty")
    }

    /// Lower envelope `f(z1)`: `None` (= +∞) left of the first vertex,
    /// constant right of the last.
    pub fn eval(&self, x: &S) -> Option<S> {
        let v = &self.vertices;
        if cmp(x, &v[0].z1) == Ordering::Less {
            return None;
        }
        let k = v.partition_point(|p| cmp(&p.z1, x) != Ordering::Greater);
        if k >= v.len() {
            return Some(self.last().z2.clone());
        }
        // v[k-1].z1 <= x < v[k].z1
        Some(interpolate(&v[k - 1], &v[k], x))
    }

    /// Leftmost `z1` with `f(z1) <= y`; `None` if `y` lies below the last
    /// vertex.
    pub fn inverse(&self, y: &S) -> Option<S> {
        let v = &self.vertices;
        if cmp(y, &v[0].z2) != Ordering::Less {
            return Some(v[0].z1.clone());
        }
        let last = self.last();
        match cmp(y, &last.z2) {
            Ordering::Less => return None,
            Ordering::Equal => return Some(last.z1.clone()),
            Ordering::Greater => {}
        }
        // first index whose z2 <= y
        let k = v.partition_point(|p| cmp(&p.z2, y) == Ordering::Greater);
        let (a, b) = (&v[k - 1], &v[k]);
        if cmp(&b.z2, y) == Ordering::Equal {
            return Some(b.z1.clone());
        }
        let t = (a.z2.clone() - y.clone()) / (a.z2.clone() - b.z2.clone());
        Some(a.z1.clone() + t * (b.z1.clone() - a.z1.clone()))
    }

    /// `p ∈ L + R²≧` (weak membership).
    pub fn contains(&self, p: &Point2<S>) -> bool {
        match self.eval(&p.z1) {
            None => false,
            Some(f) => cmp(&p.z2, &f) != Ordering::Less,
        }
    }

    pub fn contains_image(&self, p: &Image) -> bool {
        self.contains(&Point2::new(S::from_i64(p.z1), S::from_i64(p.z2)))
    }

    /// Minimum of `λ1·z1 + λ2·z2` over the polyline (attained at a vertex).
    pub fn min_weighted(&self, l1: &S, l2: &S) -> S {
        self.vertices
            .iter()
            .map(|p| l1.clone() * p.z1.clone() + l2.clone() * p.z2.clone())
            .reduce(crate::numeric::min_of)
            .expect("nonempty")
    }

    /// Vertices as floating point pairs (plots, logs).
    pub fn to_f64(&self) -> Vec<(f64, f64)> {
        self.vertices
            .iter()
            .map(|p| (p.z1.to_f64(), p.z2.to_f64()))
            .collect()
    }
}

pub(crate) fn interpolate<S: Scalar>(a: &Point2<S>, b: &Point2<S>, x: &S) -> S {
    if cmp(x, &a.z1) == Ordering::Equal {
        return a.z2.clone();
    }
    let slope = (b.z2.clone() - a.z2.clone()) / (b.z1.clone() - a.z1.clone());
    a.z2.clone() + slope * (x.clone() - a.z1.clone())
}

/// Slopes strictly increasing along the chain (each vertex a right turn).
pub(crate) fn is_convex_chain<S: Scalar>(v: &[Point2<S>]) -> bool {
    v.windows(3)
        .all(|w| turn(&w[0], &w[1], &w[2]) == Ordering::Greater)
}

/// Sign of the cross product `(b − a) × (c − b)`; `Greater` is a
/// counter-clockwise turn, which for a decreasing chain means the slope
/// increases.
pub(crate) fn turn<S: Scalar>(a: &Point2<S>, b: &Point2<S>, c: &Point2<S>) -> Ordering {
    let lhs = (b.z1.clone() - a.z1.clone()) * (c.z2.clone() - b.z2.clone());
    let rhs = (b.z2.clone() - a.z2.clone()) * (c.z1.clone() - b.z1.clone());
    cmp(&lhs, &rhs)
}

/// Basic solutions attaining the relaxation vertices, and how often each
/// variable is fractional among them.
#[derive(Clone, Debug, PartialEq)]
pub struct ExtremeSupport<S> {
    pub points: Vec<Point2<S>>,
    pub solutions: Vec<Vec<S>>,
    pub fractional_count: Vec<usize>,
}

impl<S: Scalar> ExtremeSupport<S> {
    fn new(n: usize, points: Vec<Point2<S>>, solutions: Vec<Vec<S>>) -> Self {
        let mut fractional_count = vec![0; n];
        for x in &solutions {
            for (j, v) in x.iter().enumerate() {
                if !v.is_integral() {
                    fractional_count[j] += 1;
                }
            }
        }
        ExtremeSupport {
            points,
            solutions,
            fractional_count,
        }
    }
}

/// LP relaxation of `inst` restricted by `fixings`, with objective `c`.
pub fn relaxation_lp<S: Scalar>(inst: &Instance, fixings: &Fixings, c: Vec<S>) -> LpProblem<S> {
    let n = inst.n();
    let mut lower = vec![S::zero(); n];
    let mut upper = vec![Some(S::one()); n];
    for j in 0..n {
        if let Some(v) = fixings.get(j) {
            let b = if v { S::one() } else { S::zero() };
            lower[j] = b.clone();
            upper[j] = Some(b);
        }
    }
    let rows = inst
        .constraints()
        .iter()
        .map(|c| LpRow {
            coeffs: c.coeffs.iter().map(|&a| S::from_i64(a)).collect(),
            relation: match c.relation {
                Relation::Le => RowRelation::Le,
                Relation::Eq => RowRelation::Eq,
            },
            rhs: S::from_i64(c.rhs),
        })
        .collect();
    LpProblem {
        objective: c,
        rows,
        lower,
        upper,
    }
}

pub(crate) fn objective_rows<S: Scalar>(inst: &Instance) -> [Vec<S>; 2] {
    [0, 1].map(|k| inst.objective(k).iter().map(|&c| S::from_i64(c)).collect())
}

fn image_of<S: Scalar>(c: &[Vec<S>; 2], x: &[S]) -> Point2<S> {
    Point2::new(dot(&c[0], x), dot(&c[1], x))
}

/// Lexicographic endpoint: minimize objective `primary` (1 or 2), then the
/// other one over the first stage's optimal face. `None` if infeasible.
pub fn lex_endpoint<S: Scalar>(
    inst: &Instance,
    fixings: &Fixings,
    primary: usize,
) -> Result<Option<(Point2<S>, Vec<S>)>> {
    assert!(primary == 1 || primary == 2, "primary objective is 1 or 2");
    let c = objective_rows::<S>(inst);
    let p = relaxation_lp(inst, fixings, c[0].clone());
    let Some(mut s) = Simplex::new(&p)? else {
        return Ok(None);
    };
    let (a, b) = if primary == 1 { (0, 1) } else { (1, 0) };
    s.minimize_lex(&[&c[a], &c[b]])?;
    let x = s.primal();
    Ok(Some((image_of(&c, &x), x)))
}

/// Full nondominated boundary of the node's LP relaxation. `None` if the
/// relaxation is infeasible.
pub fn dichotomic_frontier<S: Scalar>(
    inst: &Instance,
    fixings: &Fixings,
) -> Result<Option<(BoundPolyline<S>, ExtremeSupport<S>)>> {
    let c = objective_rows::<S>(inst);
    let p = relaxation_lp(inst, fixings, c[0].clone());
    let Some(mut s) = Simplex::new(&p)? else {
        return Ok(None);
    };

    s.minimize_lex(&[&c[0], &c[1]])?;
    let xl = s.primal();
    let zl = image_of(&c, &xl);
    s.minimize_lex(&[&c[1], &c[0]])?;
    let xr = s.primal();
    let zr = image_of(&c, &xr);

    // Endpoints sharing a coordinate (exactly, or within tolerance in float
    // mode) are one vertex: keep the one that is better in the other objective.
    let same_z2 = cmp(&zr.z2, &zl.z2) != Ordering::Less;
    let same_z1 = cmp(&zl.z1, &zr.z1) != Ordering::Less;
    if same_z1 || same_z2 {
        let (z, x) = if same_z2 { (zl, xl) } else { (zr, xr) };
        let support = ExtremeSupport::new(inst.n(), vec![z.clone()], vec![x]);
        return Ok(Some((BoundPolyline::from_relaxation(vec![z]), support)));
    }

    // `found` is kept sorted by z1; the stack holds index pairs to refine.
    let mut pts: Vec<(Point2<S>, Vec<S>)> = vec![(zl, xl), (zr, xr)];
    let mut stack: Vec<(Point2<S>, Point2<S>)> = vec![(pts[0].0.clone(), pts[1].0.clone())];
    while let Some((a, b)) = stack.pop() {
        let l1 = a.z2.clone() - b.z2.clone();
        let l2 = b.z1.clone() - a.z1.clone();
        if !(l1.is_positive() && l2.is_positive()) {
            continue;
        }
        let w: Vec<S> = c[0]
            .iter()
            .zip(&c[1])
            .map(|(u, v)| l1.clone() * u.clone() + l2.clone() * v.clone())
            .collect();
        s.minimize(&w)?;
        let x = s.primal();
        let z = image_of(&c, &x);
        let seg = l1.clone() * a.z1.clone() + l2.clone() * a.z2.clone();
        let val = l1 * z.z1.clone() + l2 * z.z2.clone();
        if cmp(&val, &seg) == Ordering::Less {
            stack.push((z.clone(), b));
            stack.push((a, z.clone()));
            pts.push((z, x));
        }
    }
    pts.sort_by(|p, q| cmp(&p.0.z1, &q.0.z1));

    // Drop vertices that are collinear with their neighbours.
    let mut kept: Vec<(Point2<S>, Vec<S>)> = Vec::with_capacity(pts.len());
    for p in pts {
        while kept.len() >= 2
            && turn(&kept[kept.len() - 2].0, &kept[kept.len() - 1].0, &p.0) != Ordering::Greater
        {
            kept.pop();
        }
        kept.push(p);
    }
    let (points, solutions): (Vec<_>, Vec<_>) = kept.into_iter().unzip();
    let support = ExtremeSupport::new(inst.n(), points.clone(), solutions);
    Ok(Some((BoundPolyline::from_relaxation(points), support)))
}

/// Stored basic solutions that are integral, as 0/1 solutions.
pub fn integer_extreme_points<S: Scalar>(
    inst: &Instance,
    sup: &ExtremeSupport<S>,
) -> Vec<Solution> {
    sup.solutions
        .iter()
        .filter_map(|x| {
            let bits: Option<Vec<u8>> = x
                .iter()
                .map(|v| match v.to_integer() {
                    Some(0) => Some(0),
                    Some(1) => Some(1),
                    _ => None,
                })
                .collect();
            bits.and_then(|b| Solution::new(inst, b).ok())
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{gen_assignment, gen_knapsack, Constraint};
    use crate::numeric::Rational;
    use proptest::prelude::*;

    fn q(n: i64) -> Rational {
        Rational::integer(n)
    }

    fn pt(a: i64, b: i64) -> Point2<Rational> {
        Point2::new(q(a), q(b))
    }

    #[test]
    fn all_fixed_gives_single_vertex() {
        let inst = gen_knapsack(4, 1, 1).unwrap();
        let mut f = Fixings::free(4);
        for i in 0..4 {
            f = f.with(i, i == 0);
        }
        let (poly, sup) = dichotomic_frontier::<Rational>(&inst, &f).unwrap().unwrap();
        assert_eq!(poly.len(), 1);
        let sols = integer_extreme_points(&inst, &sup);
        assert_eq!(sols.len(), 1);
        assert_eq!(sols[0].assignment, vec![1, 0, 0, 0]);
    }

    #[test]
    fn identical_objectives_collapse() {
        let inst = Instance::generic_min(
            [vec![-3, -1, -2], vec![-3, -1, -2]],
            vec![Constraint::le(vec![2, 1, 2], 3)],
        )
        .unwrap();
        let (poly, _) = dichotomic_frontier::<Rational>(&inst, &Fixings::free(3))
            .unwrap()
            .unwrap();
        assert_eq!(poly.len(), 1);
    }

    #[test]
    fn two_variable_triangle() {
        // x1 + x2 <= 1.5 cuts the corner (1,1) off the unit box.
        let inst = Instance::generic_min(
            [vec![-2, 0], vec![0, -2]],
            vec![Constraint::le(vec![2, 2], 3)],
        )
        .unwrap();
        let (poly, sup) = dichotomic_frontier::<Rational>(&inst, &Fixings::free(2))
            .unwrap()
            .unwrap();
        assert_eq!(poly.vertices(), &[pt(-2, -1), pt(-1, -2)]);
        assert_eq!(sup.fractional_count, vec![1, 1]);
    }

    #[test]
    fn includes_point_below_the_chord() {
        let inst = Instance::generic_min([vec![2, 2], vec![-3, -1]], vec![]).unwrap();
        let (poly, _) = dichotomic_frontier::<Rational>(&inst, &Fixings::free(2))
            .unwrap()
            .unwrap();
        // Box vertices map to (0,0),(2,-3),(2,-1),(4,-4); boundary is
        // (0,0) -> (2,-3) -> (4,-4), and (2,-3) is below the chord.
        assert_eq!(poly.vertices(), &[pt(0, 0), pt(2, -3), pt(4, -4)]);
    }

    #[test]
    fn lex_endpoint_small_knapsack() {
        let inst = Instance::generic_min(
            [vec![-3, -1], vec![-1, -3]],
            vec![Constraint::le(vec![1, 1], 1)],
        )
        .unwrap();
        let (z, x) = lex_endpoint::<Rational>(&inst, &Fixings::free(2), 1)
            .unwrap()
            .unwrap();
        assert_eq!(z, pt(-3, -1));
        assert_eq!(x, vec![q(1), q(0)]);
        let (z, _) = lex_endpoint::<Rational>(&inst, &Fixings::free(2), 2)
            .unwrap()
            .unwrap();
        assert_eq!(z, pt(-1, -3));
    }

    #[test]
    fn identity_objectives_lex_endpoints_at_origin() {
        let inst = Instance::generic_min([vec![1, 0], vec![0, 1]], vec![]).unwrap();
        for k in [1, 2] {
            let (z, _) = lex_endpoint::<Rational>(&inst, &Fixings::free(2), k)
                .unwrap()
                .unwrap();
            assert_eq!(z, pt(0, 0));
        }
    }

    #[test]
    fn infeasible_fixings() {
        let inst = Instance::generic_min(
            [vec![1, 1], vec![1, 1]],
            vec![Constraint::le(vec![1, 1], 1)],
        )
        .unwrap();
        let f = Fixings::free(2).with(0, true).with(1, true);
        assert!(lex_endpoint::<Rational>(&inst, &f, 1).unwrap().is_none());
        assert!(dichotomic_frontier::<Rational>(&inst, &f)
            .unwrap()
            .is_none());
    }

    #[test]
    fn assignment_root_extreme_points_are_integral() {
        for seed in 0..5 {
            let inst = gen_assignment(3, seed).unwrap();
            let (_, sup) = dichotomic_frontier::<Rational>(&inst, &Fixings::free(9))
                .unwrap()
                .unwrap();
            assert_eq!(
                integer_extreme_points(&inst, &sup).len(),
                sup.solutions.len(),
                "seed {seed}"
            );
        }
    }

    #[test]
    fn eval_and_inverse() {
        let poly = BoundPolyline::<Rational>::from_ratios(&[
            ((1, 2), (7, 1)),
            ((3, 2), (5, 2)),
            ((7, 2), (1, 1)),
            ((7, 1), (1, 2)),
        ]);
        assert_eq!(poly.eval(&q(0)), None);
        assert_eq!(poly.eval(&q(3)), Some(Rational::new(11, 8)));
        assert_eq!(poly.eval(&q(100)), Some(Rational::new(1, 2)));
        assert_eq!(poly.inverse(&q(6)), Some(Rational::new(13, 18)));
        assert_eq!(poly.inverse(&q(9)), Some(Rational::new(1, 2)));
        assert_eq!(poly.inverse(&Rational::new(1, 2)), Some(q(7)));
        assert_eq!(poly.inverse(&q(0)), None);
        assert!(poly.is_convex());
        assert!(poly.contains(&pt(2, 6)));
        assert!(!poly.contains(&pt(0, 100)));
    }

    fn brute_images(inst: &Instance) -> Vec<Image> {
        let n = inst.n();
        (0u32..(1 << n))
            .filter_map(|m| {
                let x: Vec<u8> = (0..n).map(|i| ((m >> i) & 1) as u8).collect();
                inst.is_feasible(&x)
                    .unwrap()
                    .then(|| inst.evaluate(&x).unwrap())
            })
            .collect()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]
        #[test]
        fn relaxation_is_a_valid_convex_lower_bound(seed in 0u64..10_000, n in 3usize..9, m in 1usize..3) {
            let inst = gen_knapsack(n, m, seed).unwrap();
            let (poly, sup) = dichotomic_frontier::<Rational>(&inst, &Fixings::free(n)).unwrap().unwrap();
            prop_assert!(poly.is_convex());
            for z in brute_images(&inst) {
                prop_assert!(poly.contains_image(&z), "{:?} below relaxation", z);
            }
            let c = objective_rows::<Rational>(&inst);
            for (p, x) in sup.points.iter().zip(&sup.solutions) {
                prop_assert_eq!(&image_of(&c, x), p);
            }
            // Re-running the recursion on the result adds nothing.
            let (again, _) = dichotomic_frontier::<Rational>(&inst, &Fixings::free(n)).unwrap().unwrap();
            prop_assert_eq!(again, poly.clone());
            // No weighted sum finds a point strictly below any edge.
            for w in poly.vertices().windows(2) {
                let l1 = w[0].z2.clone() - w[1].z2.clone();
                let l2 = w[1].z1.clone() - w[0].z1.clone();
                prop_assert!(l1.is_positive() && l2.is_positive());
                let p = relaxation_lp(&inst, &Fixings::free(n),
                    c[0].iter().zip(&c[1]).map(|(a, b)| l1.clone() * a.clone() + l2.clone() * b.clone()).collect());
                let r = crate::lp::lp_solve(&p, None).unwrap();
                let seg = l1.clone() * w[0].z1.clone() + l2.clone() * w[0].z2.clone();
                prop_assert_eq!(r.value, seg);
            }
        }
    }
}
