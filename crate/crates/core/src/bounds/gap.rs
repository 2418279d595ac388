//! Approximated hypervolume gap between a lower bound polyline and the
//! incumbents above it.

use serde::Serialize;

use super::geometry::points_above;
use super::incumbent::interior_lubs;
use crate::model::{Image, Point2};
use crate::numeric::{cmp, Scalar};
use crate::relax::BoundPolyline;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GapKind {
    Total,
    Local,
}

#[derive(Clone, Debug, PartialEq)]
pub struct GapReport<S> {
    pub thg: S,
    pub lhg: S,
    /// Adjacent pair `(zⁱ, zⁱ⁺¹)` of `K` spanning the largest local gap.
    pub argmax: Option<(Image, Image)>,
    pub argmax_lub: Option<Image>,
    /// Incumbents above the polyline.
    pub k: Vec<Image>,
    /// `true` when `|K| < 2` and both values are the box proxy.
    pub proxy: bool,
}

impl<S: Scalar> GapReport<S> {
    pub fn score(&self, kind: GapKind) -> &S {
        match kind {
            GapKind::Total => &self.thg,
            GapKind::Local => &self.lhg,
        }
    }
}

/// Spanning points of `lu`: `(sp¹₁, sp²₂)`, i.e. the z1 where `L` reaches
/// height `lu₂` and the height of `L` at `lu₁`.
pub fn spanning_points<S: Scalar>(l: &BoundPolyline<S>, lu: &Image) -> (Point2<S>, Point2<S>) {
    let y = S::from_i64(lu.z2);
    let x = S::from_i64(lu.z1);
    let sp1 = l.inverse(&y).unwrap_or_else(|| l.last().z1.clone());
    let sp2 = l.eval(&x).unwrap_or_else(|| l.first().z2.clone());
    (Point2::new(sp1, y), Point2::new(x, sp2))
}

/// `hg(lu) = ½ |sp¹(lu)₁ − lu₁| · |sp²(lu)₂ − lu₂|`.
pub fn hg<S: Scalar>(l: &BoundPolyline<S>, lu: &Image) -> S {
    let (sp1, sp2) = spanning_points(l, lu);
    let w = (sp1.z1 - S::from_i64(lu.z1)).abs();
    let h = (sp2.z2 - S::from_i64(lu.z2)).abs();
    w * h / S::from_i64(2)
}

/// Half the box spanned by the extreme vertices of `l`.
pub fn box_proxy<S: Scalar>(l: &BoundPolyline<S>) -> S {
    let (a, b) = (l.first(), l.last());
    (b.z1.clone() - a.z1.clone()) * (a.z2.clone() - b.z2.clone()) / S::from_i64(2)
}

/// Total and largest local gap of `l` against the incumbent images `u`
/// (sorted by z1).
pub fn gap_report<S: Scalar>(l: &BoundPolyline<S>, u: &[Image]) -> GapReport<S> {
    let k = points_above(u, l);
    if k.len() < 2 {
        let p = box_proxy(l);
        return GapReport {
            thg: p.clone(),
            lhg: p,
            argmax: None,
            argmax_lub: None,
            k,
            proxy: true,
        };
    }
    let lubs = interior_lubs(&k);
    let two = S::from_i64(2);

    let mut lhg: Option<(S, usize)> = None;
    let mut thg = S::zero();
    let mut prev_sp2: Option<S> = None;
    for (i, lu) in lubs.iter().enumerate() {
        let (_, sp2) = spanning_points(l, lu);
        let h = hg(l, lu);
        if lhg
            .as_ref()
            .is_none_or(|(best, _)| cmp(&h, best) == std::cmp::Ordering::Greater)
        {
            lhg = Some((h.clone(), i));
        }
        match &prev_sp2 {
            None => thg = h,
            Some(prev) => {
                // Slice between zⁱ and luⁱ, with zⁱ = K[i] (0-based).
                let z = &k[i];
                let left = (S::from_i64(z.z2) - prev.clone()).abs();
                let right = (S::from_i64(lu.z2) - sp2.z2.clone()).abs();
                let width = S::from_i64((z.z1 - lu.z1).abs());
                thg = thg + (left + right) / two.clone() * width;
            }
        }
        prev_sp2 = Some(sp2.z2);
    }
    let (lhg, i) = lhg.expect("at least one interior lub");
    GapReport {
        thg,
        lhg,
        argmax: Some((k[i], k[i + 1])),
        argmax_lub: Some(lubs[i]),
        k,
        proxy: false,
    }
}
