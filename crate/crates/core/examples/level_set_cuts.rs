//! Clipping a lower bound with a weighted-sum half-plane and with an
//! augmented Tchebycheff level set.
//!
//!     cargo run --example level_set_cuts

use mobb::bounds::{awt_level_points, clip_awt_levelset, clip_halfspace};
use mobb::model::Point2;
use mobb::numeric::Rational;
use mobb::relax::BoundPolyline;
use mobb::scalarize::AwtParams;

fn show(name: &str, l: &BoundPolyline<Rational>) {
    let pts: Vec<String> = l
        .to_f64()
        .iter()
        .zip(l.origins())
        .map(|((x, y), o)| format!("({x:.4}, {y:.4}) {o:?}"))
        .collect();
    println!("{name}:\n  {}", pts.join("\n  "));
}

fn main() -> mobb::Result<()> {
    let q = Rational::integer;
    let l = BoundPolyline::<Rational>::from_ratios(&[
        ((1, 2), (7, 1)),
        ((3, 2), (5, 2)),
        ((7, 2), (1, 1)),
        ((7, 1), (1, 2)),
    ]);
    show("relaxation", &l);

    // z1 + z2 >= 6, e.g. after a weighted sum optimum with value 6.
    show(
        "after z1 + z2 >= 6",
        &clip_halfspace(&l, (q(1), q(1)), q(6)),
    );

    // Box spanned by (1, 6) and (6, 1), level of the point (3, 4).
    let p = AwtParams::<Rational>::new(Point2::new(1, 6), Point2::new(6, 1))?;
    let v = p.value(&Point2::new(3, 4));
    let [p0, kink, p1] = awt_level_points(&p, &v);
    println!("level set corners: {p0:?} {kink:?} {p1:?}");
    show("after the AWT level set", &clip_awt_levelset(&l, &p, v));
    Ok(())
}
