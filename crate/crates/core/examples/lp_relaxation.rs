//! Bounded-variable simplex on a small LP, then the full bound set of a
//! knapsack relaxation from the dichotomic scheme.
//!
//!     cargo run --example lp_relaxation

use mobb::lp::{lp_solve, LpProblem, LpRow, RowRelation};
use mobb::model::gen_knapsack;
use mobb::numeric::Rational;
use mobb::relax::{dichotomic_frontier, Fixings};

fn main() -> mobb::Result<()> {
    // max 60x1 + 55x2 + 50x3  s.t.  10(x1 + x2 + x3) <= 15,  0 <= x <= 1
    let q = Rational::integer;
    let mut p = LpProblem::unit_box(vec![q(-60), q(-55), q(-50)]);
    p.rows.push(LpRow {
        coeffs: vec![q(10), q(10), q(10)],
        relation: RowRelation::Le,
        rhs: q(15),
    });
    let r = lp_solve(&p, None)?;
    let x: Vec<String> = r.primal.iter().map(|v| v.to_string()).collect();
    println!("LP optimum {} at x = ({})", -r.value.clone(), x.join(", "));

    let inst = gen_knapsack(12, 1, 3)?;
    let (bound, support) = dichotomic_frontier::<Rational>(&inst, &Fixings::free(inst.n()))?
        .expect("the empty knapsack is feasible");
    println!("root relaxation has {} extreme points:", bound.len());
    for (v, frac) in bound.vertices().iter().zip(&support.solutions) {
        let k = frac
            .iter()
            .filter(|x| !mobb::numeric::Scalar::is_integral(*x))
            .count();
        println!("  ({}, {})  fractional variables: {k}", v.z1, v.z2);
    }
    println!(
        "fractional counts per variable: {:?}",
        support.fractional_count
    );
    Ok(())
}
