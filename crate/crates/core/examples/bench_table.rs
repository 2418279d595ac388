//! A small benchmark table in the CSV layout used by `mobb bench`.
//!
//!     cargo run --release --example bench_table

use mobb::cli::{cmd_bench, BenchArgs, InstanceSpec};
use mobb::search::{Arithmetic, Budget};

fn main() -> mobb::Result<()> {
    let args = BenchArgs {
        sizes: vec![
            InstanceSpec::Knapsack { n: 16, m: 1 },
            InstanceSpec::Knapsack { n: 20, m: 1 },
        ],
        versions: ["BB", "BS1", "BS2", "M1.1.1", "M2.1.1.2"]
            .map(String::from)
            .to_vec(),
        count: 5,
        seed: 0,
        budget: Budget {
            max_nodes: Some(200_000),
            max_seconds: None,
        },
        jobs: 1,
        arithmetic: Arithmetic::Float,
        out: None,
        plot: false,
    };
    for table in cmd_bench(&args)? {
        println!("# {}", table.spec);
        print!("{}", table.to_csv());
    }
    Ok(())
}
