//! Solves one knapsack with a few versions and compares the statistics.
//!
//!     cargo run --release --example solve_knapsack

use mobb::cli::parse_version;
use mobb::model::gen_knapsack;
use mobb::search::{solve_with, Arithmetic, SolveOptions};

fn main() -> mobb::Result<()> {
    let inst = gen_knapsack(25, 1, 7)?;
    let mut reference = None;
    println!("{:10} {:>8} {:>5} {:>8}", "version", "nodes", "IPs", "time");
    for label in ["BB", "BS1", "BS2", "WS", "M1.1.1", "M2.1.1.1", "M2.1.1.2"] {
        let s = parse_version(label)?;
        let out = solve_with(&inst, &s, Arithmetic::Exact, &SolveOptions::default())?;
        println!(
            "{label:10} {:>8} {:>5} {:>7.3}s",
            out.stats.nodes, out.stats.ips, out.stats.time_s
        );
        let images = out.images();
        assert_eq!(reference.get_or_insert_with(|| images.clone()), &images);
    }
    let front = reference.unwrap_or_default();
    println!("{} nondominated points (original sense):", front.len());
    for z in front {
        let z = inst.to_original(z);
        println!("  {} {}", z.z1, z.z2);
    }
    Ok(())
}
