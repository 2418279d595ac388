//! Hypervolume gap of a lower bound polyline against four incumbents,
//! and the local upper bounds that drive dominance fathoming.
//!
//!     cargo run --example gap_geometry

use mobb::bounds::{fathom_by_dominance, gap_report, hg, spanning_points, IncumbentList};
use mobb::model::{Point2, Solution};
use mobb::numeric::{Rational, Scalar};
use mobb::relax::BoundPolyline;

fn main() {
    let l = BoundPolyline::<Rational>::from_ratios(&[
        ((1, 2), (7, 1)),
        ((3, 2), (5, 2)),
        ((7, 2), (1, 1)),
        ((7, 1), (1, 2)),
    ]);
    let mut u = IncumbentList::new();
    for (a, b) in [(2, 6), (3, 5), (5, 3), (6, 1)] {
        u.insert(Solution {
            assignment: vec![],
            image: Point2::new(a, b),
        });
    }

    for lu in u.lubs() {
        println!("lub ({}, {})", lu.z1, lu.z2);
    }
    let lu = Point2::new(3, 6);
    let (sp1, sp2) = spanning_points(&l, &lu);
    println!(
        "spanning points of (3, 6): ({}, {}) and ({}, {}), hg = {:.4}",
        sp1.z1,
        sp1.z2,
        sp2.z1,
        sp2.z2,
        hg(&l, &lu).to_f64()
    );

    let r = gap_report(&l, &u.images());
    println!("thg = {:.4}", r.thg.to_f64());
    println!(
        "lhg = {:.4} between {:?}",
        r.lhg.to_f64(),
        r.argmax.unwrap()
    );
    println!(
        "fathomed by dominance: {}",
        fathom_by_dominance(&l, &u.lubs())
    );
}
