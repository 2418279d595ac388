//! Polyline geometry: membership, dominance fathoming and level-set cuts.
//!
//! A cut excludes the open region below a non-increasing boundary `φ`. The
//! clipped lower bound is the nondominated boundary of the envelope
//! `max(f, φ)` where `f` is the polyline. The envelope is sampled at every
//! breakpoint and crossing, using right-hand limits where `φ` jumps, and
//! horizontal runs are collapsed onto their leftmost point. Both
//! simplifications only lower the boundary, so the result stays valid.

use std::cmp::Ordering;

use super::incumbent::{Coord, Lub};
use crate::model::{Image, Point2};
use crate::numeric::{cmp, Scalar};
use crate::relax::{turn, BoundPolyline, Origin};
use crate::scalarize::AwtParams;

/// Incumbent images lying in `L + R²≧` (weak membership), order kept.
pub fn points_above<S: Scalar>(u: &[Image], l: &BoundPolyline<S>) -> Vec<Image> {
    u.iter().copied().filter(|z| l.contains_image(z)).collect()
}

/// True iff no local upper bound lies strictly above-right of some point of
/// `L`, i.e. every point of `L + R²≧` is weakly dominated by an incumbent.
pub fn fathom_by_dominance<S: Scalar>(l: &BoundPolyline<S>, lubs: &[Lub]) -> bool {
    !lubs.iter().any(|lu| lub_strictly_above(l, lu))
}

fn lub_strictly_above<S: Scalar>(l: &BoundPolyline<S>, lu: &Lub) -> bool {
    let a = &l.first().z1;
    match (lu.z1, lu.z2) {
        (Coord::Inf, Coord::Inf) => true,
        (Coord::Inf, Coord::Finite(y)) => cmp(&l.last().z2, &S::from_i64(y)) == Ordering::Less,
        (Coord::Finite(x), Coord::Inf) => cmp(&S::from_i64(x), a) == Ordering::Greater,
        (Coord::Finite(x), Coord::Finite(y)) => {
            let x = S::from_i64(x);
            if cmp(&x, a) != Ordering::Greater {
                return false;
            }
            let f = l.eval(&x).expect("x right of the first vertex");
            cmp(&f, &S::from_i64(y)) == Ordering::Less
        }
    }
}

/// Linear piece on `[lo, hi)`; `None` bounds are infinite.
#[derive(Clone, Debug)]
struct Piece<S> {
    lo: Option<S>,
    hi: Option<S>,
    anchor: Point2<S>,
    slope: S,
}

impl<S: Scalar> Piece<S> {
    fn covers(&self, x: &S) -> bool {
        self.lo
            .as_ref()
            .is_none_or(|lo| cmp(lo, x) != Ordering::Greater)
            && self
                .hi
                .as_ref()
                .is_none_or(|hi| cmp(x, hi) == Ordering::Less)
    }

    fn at(&self, x: &S) -> S {
        self.anchor.z2.clone() + self.slope.clone() * (x.clone() - self.anchor.z1.clone())
    }
}

/// Pieces of the polyline's envelope right of its first vertex.
fn polyline_pieces<S: Scalar>(l: &BoundPolyline<S>) -> Vec<Piece<S>> {
    let v = l.vertices();
    let mut out: Vec<Piece<S>> = v
        .windows(2)
        .map(|w| Piece {
            lo: Some(w[0].z1.clone()),
            hi: Some(w[1].z1.clone()),
            anchor: w[0].clone(),
            slope: (w[1].z2.clone() - w[0].z2.clone()) / (w[1].z1.clone() - w[0].z1.clone()),
        })
        .collect();
    out.push(Piece {
        lo: Some(l.last().z1.clone()),
        hi: None,
        anchor: l.last().clone(),
        slope: S::zero(),
    });
    out
}

/// Right-hand limit of a chain at `x`; `None` is −∞ (no piece covers `x`).
fn eval_right<S: Scalar>(pieces: &[Piece<S>], x: &S) -> Option<S> {
    pieces.iter().find(|p| p.covers(x)).map(|p| p.at(x))
}

fn crossing<S: Scalar>(p: &Piece<S>, q: &Piece<S>) -> Option<S> {
    if cmp(&p.slope, &q.slope) == Ordering::Equal {
        return None;
    }
    // p.z2 + p.m (x - p.z1) = q.z2 + q.m (x - q.z1)
    let num = q.anchor.z2.clone() - p.anchor.z2.clone() + p.slope.clone() * p.anchor.z1.clone()
        - q.slope.clone() * q.anchor.z1.clone();
    let x = num / (p.slope.clone() - q.slope.clone());
    let lo_ok = |b: &Option<S>| b.as_ref().is_none_or(|lo| cmp(lo, &x) != Ordering::Greater);
    let hi_ok = |b: &Option<S>| b.as_ref().is_none_or(|hi| cmp(&x, hi) != Ordering::Greater);
    (lo_ok(&p.lo) && lo_ok(&q.lo) && hi_ok(&p.hi) && hi_ok(&q.hi)).then_some(x)
}

/// Nondominated boundary of `(L + R²≧) ∖ {z : z2 < φ(z1)}`.
fn clip_with<S: Scalar>(l: &BoundPolyline<S>, phi: &[Piece<S>], tag: Origin) -> BoundPolyline<S> {
    let a = l.first().z1.clone();
    let f = polyline_pieces(l);

    let mut xs: Vec<S> = l.vertices().iter().map(|p| p.z1.clone()).collect();
    for p in phi {
        xs.extend(p.lo.iter().cloned());
        xs.extend(p.hi.iter().cloned());
    }
    for p in &f {
        for q in phi {
            xs.extend(crossing(p, q));
        }
    }
    xs.retain(|x| cmp(x, &a) != Ordering::Less);
    xs.sort_by(cmp);
    xs.dedup_by(|x, y| cmp(x, y) == Ordering::Equal);

    let mut pts: Vec<Point2<S>> = Vec::with_capacity(xs.len());
    for x in xs {
        let fx = eval_right(&f, &x).expect("f is defined right of its first vertex");
        let y = match eval_right(phi, &x) {
            Some(p) if cmp(&p, &fx) == Ordering::Greater => p,
            _ => fx,
        };
        // Keep the leftmost point of every horizontal run.
        if pts
            .last()
            .is_some_and(|prev: &Point2<S>| cmp(&y, &prev.z2) != Ordering::Less)
        {
            continue;
        }
        pts.push(Point2::new(x, y));
    }

    let mut kept: Vec<Point2<S>> = Vec::with_capacity(pts.len());
    for p in pts {
        while kept.len() >= 2
            && turn(&kept[kept.len() - 2], &kept[kept.len() - 1], &p) == Ordering::Equal
        {
            kept.pop();
        }
        kept.push(p);
    }

    let origins = kept
        .iter()
        .map(|p| {
            l.vertices()
                .iter()
                .position(|v| {
                    cmp(&v.z1, &p.z1) == Ordering::Equal && cmp(&v.z2, &p.z2) == Ordering::Equal
                })
                .map_or(tag, |i| l.origins()[i])
        })
        .collect();
    BoundPolyline::new(kept, origins)
}

/// Intersects `L + R²≧` with the half-plane `λ1 z1 + λ2 z2 ≥ c`.
pub fn clip_halfspace<S: Scalar>(l: &BoundPolyline<S>, lambda: (S, S), c: S) -> BoundPolyline<S> {
    let (l1, l2) = lambda;
    assert!(
        l1.is_positive() && l2.is_positive(),
        "weights must be positive"
    );
    if cmp(&l.min_weighted(&l1, &l2), &c) != Ordering::Less {
        return l.clone();
    }
    let x0 = l.first().z1.clone();
    let line = Piece {
        lo: None,
        hi: None,
        anchor: Point2::new(x0.clone(), (c - l1.clone() * x0) / l2.clone()),
        slope: -(l1 / l2),
    };
    clip_with(l, &[line], Origin::WsCut)
}

/// Breakpoints of the clamped AWT level set `{z : g(max(z, s)) = v}`:
/// the left end `P0` (with a horizontal ray to its left), the kink, and the
/// right end `P1` below which nothing is excluded.
pub fn awt_level_points<S: Scalar>(p: &AwtParams<S>, v: &S) -> [Point2<S>; 3] {
    let s1 = S::from_i64(p.s.z1);
    let s2 = S::from_i64(p.s.z2);
    let (w1, w2, tau) = (p.w1.clone(), p.w2.clone(), p.tau.clone());
    let p0 = Point2::new(
        s1.clone(),
        s2.clone() + v.clone() / (w2.clone() + tau.clone()),
    );
    let k1 = v.clone() / (w1.clone() + tau.clone() + tau.clone() * w1.clone() / w2.clone());
    let k2 = w1.clone() * k1.clone() / w2;
    let kink = Point2::new(s1.clone() + k1, s2.clone() + k2);
    let p1 = Point2::new(s1 + v.clone() / (w1 + tau), s2);
    [p0, kink, p1]
}

/// Intersects `L + R²≧` with the AWT level set `{z : g(max(z, s)) ≥ v}`.
///
/// The reference point is clamped so the cut is also valid for points left
/// of or below `s`; inside the box it is exactly the augmented Tchebycheff
/// level set.
pub fn clip_awt_levelset<S: Scalar>(
    l: &BoundPolyline<S>,
    p: &AwtParams<S>,
    v: S,
) -> BoundPolyline<S> {
    if !v.is_positive() {
        return l.clone();
    }
    let [p0, kink, p1] = awt_level_points(p, &v);
    let slope = |a: &Point2<S>, b: &Point2<S>| {
        (b.z2.clone() - a.z2.clone()) / (b.z1.clone() - a.z1.clone())
    };
    let phi = vec![
        Piece {
            lo: None,
            hi: Some(p0.z1.clone()),
            anchor: p0.clone(),
            slope: S::zero(),
        },
        Piece {
            lo: Some(p0.z1.clone()),
            hi: Some(kink.z1.clone()),
            anchor: p0.clone(),
            slope: slope(&p0, &kink),
        },
        Piece {
            lo: Some(kink.z1.clone()),
            hi: Some(p1.z1.clone()),
            anchor: kink.clone(),
            slope: slope(&kink, &p1),
        },
    ];
    clip_with(l, &phi, Origin::AwtCut)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::incumbent::rebuild_lubs;
    use crate::numeric::Rational;
    use proptest::prelude::*;

    fn q(n: i64) -> Rational {
        Rational::integer(n)
    }

    fn sample_bound() -> BoundPolyline<Rational> {
        BoundPolyline::from_ratios(&[
            ((1, 2), (7, 1)),
            ((3, 2), (5, 2)),
            ((7, 2), (1, 1)),
            ((7, 1), (1, 2)),
        ])
    }

    fn imgs(points: &[(i64, i64)]) -> Vec<Image> {
        points.iter().map(|&(a, b)| Point2::new(a, b)).collect()
    }

    fn near(p: &Point2<Rational>, x: f64, y: f64, tol: f64) -> bool {
        (p.z1.to_f64() - x).abs() <= tol && (p.z2.to_f64() - y).abs() <= tol
    }

    #[test]
    fn points_above_examples() {
        let u = imgs(&[(2, 6), (3, 5), (5, 3), (6, 1)]);
        assert_eq!(points_above(&u, &sample_bound()), u);
        let origin = BoundPolyline::<Rational>::from_ratios(&[((0, 1), (0, 1))]);
        assert_eq!(points_above(&u, &origin), u);
        let high = BoundPolyline::<Rational>::from_ratios(&[((10, 1), (10, 1))]);
        assert!(points_above(&imgs(&[(9, 9), (1, 2)]), &high).is_empty());
    }

    #[test]
    fn fathoming_examples() {
        let l = sample_bound();
        assert!(!fathom_by_dominance(&l, &rebuild_lubs(&[])));
        let u = imgs(&[(2, 6), (3, 5), (5, 3), (6, 1)]);
        assert!(!fathom_by_dominance(&l, &rebuild_lubs(&u)));

        let single = BoundPolyline::<Rational>::from_ratios(&[((4, 1), (4, 1))]);
        assert!(fathom_by_dominance(
            &single,
            &rebuild_lubs(&imgs(&[(4, 4)]))
        ));
        assert!(fathom_by_dominance(
            &single,
            &rebuild_lubs(&imgs(&[(1, 9), (4, 4), (9, 1)]))
        ));
        assert!(!fathom_by_dominance(
            &single,
            &rebuild_lubs(&imgs(&[(1, 9), (9, 1)]))
        ));
    }

    #[test]
    fn halfspace_cut_through_two_segments() {
        let out = clip_halfspace(&sample_bound(), (q(1), q(1)), q(6));
        let v = out.vertices();
        assert!(
            v.iter().any(|p| near(p, 0.9286, 5.0714, 1e-3)),
            "{:?}",
            out.to_f64()
        );
        assert!(
            v.iter().any(|p| near(p, 5.25, 0.75, 1e-3)),
            "{:?}",
            out.to_f64()
        );
        assert_eq!(v.len(), 4);
        assert_eq!(
            out.origins(),
            &[
                Origin::Relaxation,
                Origin::WsCut,
                Origin::WsCut,
                Origin::Relaxation
            ]
        );
        assert!(out.is_convex());
    }

    #[test]
    fn halfspace_below_polyline_is_a_no_op() {
        let l = sample_bound();
        assert_eq!(clip_halfspace(&l, (q(1), q(1)), q(4)), l);
        assert_eq!(clip_halfspace(&l, (q(1), q(1)), q(3)), l);
    }

    #[test]
    fn halfspace_on_single_vertex() {
        let l = BoundPolyline::<Rational>::from_ratios(&[((0, 1), (0, 1))]);
        let out = clip_halfspace(&l, (q(1), q(2)), q(4));
        // Cone rays z1 = 0 and z2 = 0 meet the line at (0,2) and (4,0).
        assert_eq!(
            out.vertices(),
            &[Point2::new(q(0), q(2)), Point2::new(q(4), q(0))]
        );
    }

    #[test]
    fn awt_cut_adds_reflex_kink() {
        let l = BoundPolyline::<Rational>::from_ratios(&[((1, 1), (7, 1)), ((7, 1), (1, 1))]);
        let p = AwtParams {
            s: Point2::new(1, 1),
            w1: Rational::new(1, 2),
            w2: Rational::new(1, 2),
            tau: Rational::new(1, 10),
            corners: (Point2::new(1, 7), Point2::new(7, 1)),
        };
        // v at z = (6, 4).
        let v = Rational::new(33, 10);
        let out = clip_awt_levelset(&l, &p, v);
        let f = out.to_f64();
        assert_eq!(out.len(), 5, "{f:?}");
        assert!(near(&out.vertices()[1], 1.599, 6.401, 0.02), "{f:?}");
        assert!(near(&out.vertices()[2], 5.72, 5.72, 0.02), "{f:?}");
        assert!(near(&out.vertices()[3], 6.401, 1.599, 0.02), "{f:?}");
        assert!(!out.is_convex());
        assert_eq!(out.origins()[0], Origin::Relaxation);
        assert_eq!(out.origins()[2], Origin::AwtCut);
    }

    #[test]
    fn awt_zero_level_is_a_no_op() {
        let l = sample_bound();
        let p = AwtParams::new(Point2::new(1, 7), Point2::new(7, 1)).unwrap();
        assert_eq!(clip_awt_levelset(&l, &p, q(0)), l);
    }

    #[test]
    fn awt_on_single_vertex_follows_level_set() {
        let l = BoundPolyline::<Rational>::from_ratios(&[((0, 1), (0, 1))]);
        let p = AwtParams::new(Point2::new(0, 6), Point2::new(6, 0)).unwrap();
        let v = Rational::new(2, 1);
        let [p0, kink, p1] = awt_level_points(&p, &v);
        let out = clip_awt_levelset(&l, &p, v);
        assert_eq!(out.vertices(), &[p0, kink, p1]);
    }

    fn awt_value(p: &AwtParams<Rational>, z: &Point2<Rational>) -> Rational {
        let s1 = crate::numeric::max_of(z.z1.clone() - q(p.s.z1), q(0));
        let s2 = crate::numeric::max_of(z.z2.clone() - q(p.s.z2), q(0));
        crate::numeric::max_of(p.w1.clone() * s1.clone(), p.w2.clone() * s2.clone())
            + p.tau.clone() * (s1 + s2)
    }

    fn arb_polyline() -> impl Strategy<Value = BoundPolyline<Rational>> {
        (
            proptest::collection::vec((1i64..6, 1i64..6), 1..5),
            0i64..10,
            10i64..30,
        )
            .prop_map(|(steps, x0, y0)| {
                let mut x = x0;
                let mut y = y0;
                let mut v = vec![Point2::new(q(x), q(y))];
                for (dx, dy) in steps {
                    x += dx;
                    y -= dy;
                    v.push(Point2::new(q(x), q(y)));
                }
                BoundPolyline::from_relaxation(v)
            })
    }

    proptest! {
        #[test]
        fn halfspace_clip_is_exact_on_grid(
            l in arb_polyline(),
            l1 in 1i64..5, l2 in 1i64..5, c in 0i64..120,
        ) {
            let out = clip_halfspace(&l, (q(l1), q(l2)), q(c));
            for w in out.vertices().windows(2) {
                prop_assert!(w[0].z1 < w[1].z1 && w[0].z2 > w[1].z2);
            }
            prop_assert!(out.is_convex() || !l.is_convex());
            // Every grid point in the clipped region is inside the result,
            // and result points are in both L + R² and the half-plane.
            for x in -2..45 {
                for y in -25..35 {
                    let z = Point2::new(q(x), q(y));
                    let inside = l.contains(&z) && l1 * x + l2 * y >= c;
                    if inside {
                        prop_assert!(out.contains(&z), "{:?} lost", (x, y));
                    }
                    if out.contains(&z) {
                        prop_assert!(l.contains(&z));
                    }
                }
            }
            for v in out.vertices() {
                prop_assert!(l.contains(v));
                prop_assert!(q(l1) * v.z1.clone() + q(l2) * v.z2.clone() >= q(c));
            }
        }

        #[test]
        fn awt_clip_keeps_every_point_of_the_level_set(
            l in arb_polyline(),
            a1 in 0i64..8, a2 in 1i64..8, b1 in 1i64..8, b2 in 0i64..8,
            num in 0i64..40,
        ) {
            let z1 = Point2::new(a1, a2 + b2 + 1);
            let z2 = Point2::new(a1 + b1, b2);
            let p = AwtParams::<Rational>::new(z1, z2).unwrap();
            let v = Rational::new(num, 4);
            let out = clip_awt_levelset(&l, &p, v.clone());
            for w in out.vertices().windows(2) {
                prop_assert!(w[0].z1 < w[1].z1 && w[0].z2 > w[1].z2);
            }
            for x in -2..45 {
                for y in -25..35 {
                    let z = Point2::new(q(x), q(y));
                    if l.contains(&z) && awt_value(&p, &z) >= v {
                        prop_assert!(out.contains(&z), "{:?} lost", (x, y));
                    }
                    if out.contains(&z) {
                        prop_assert!(l.contains(&z));
                    }
                }
            }
        }
    }
}
