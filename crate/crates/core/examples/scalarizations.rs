//! Weighted sum and augmented weighted Tchebycheff IPs on a knapsack.
//! The AWT box between two supported points finds an unsupported one.
//!
//!     cargo run --example scalarizations

use mobb::cli::brute_force_frontier;
use mobb::model::gen_knapsack;
use mobb::numeric::{Rational, Scalar};
use mobb::scalarize::{
    derive_lambda, solve_awt, solve_weighted_sum, AwtParams, ScalarCache, ScalarOutcome,
    WeightVector,
};

fn main() -> mobb::Result<()> {
    let inst = gen_knapsack(14, 1, 11)?;
    let frontier = brute_force_frontier(&inst)?.frontier;
    println!("{} nondominated points (min sense):", frontier.len());
    for z in &frontier {
        println!("  {z:?}");
    }

    let mut cache = ScalarCache::<Rational>::new();
    let lambda = WeightVector::new(1, 1).unwrap();
    if let ScalarOutcome::NewOptimum(o) = solve_weighted_sum(&inst, lambda, &mut cache, None)? {
        println!(
            "weighted sum (1, 1): value {} at {:?}",
            o.value, o.solution.image
        );
    }
    // Same weights again: served from the cache, no IP solved.
    let again = solve_weighted_sum(&inst, lambda, &mut cache, None)?;
    println!(
        "second call is a cache hit: {}",
        matches!(again, ScalarOutcome::CacheHit(_))
    );

    let (a, b) = (frontier[0], *frontier.last().unwrap());
    println!("weights for the outer pair: {:?}", derive_lambda(&a, &b));
    let p = AwtParams::<Rational>::new(a, b)?;
    if let ScalarOutcome::NewOptimum(o) = solve_awt(&inst, &p, &mut cache, None)? {
        println!(
            "AWT on the box {:?}-{:?}: {:?} with value {:.4}",
            a,
            b,
            o.solution.image,
            o.value.to_f64()
        );
    }
    Ok(())
}
