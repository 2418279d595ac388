//! Checks every version against exhaustive enumeration on small instances
//! of all three classes.
//!
//!     cargo run --release --example oracle_verify

use mobb::cli::{verify_instance, version_labels, VerifyArgs, VerifyOutcome};
use mobb::model::{gen_assignment, gen_facility_location, gen_knapsack};

fn main() -> mobb::Result<()> {
    let args = VerifyArgs {
        versions: version_labels(),
        ..Default::default()
    };
    let cases = [
        ("knapsack n=12 m=2", gen_knapsack(12, 2, 1)?),
        ("assignment l=4", gen_assignment(4, 1)?),
        ("facility l=5 q=2", gen_facility_location(5, 2, 1)?),
    ];
    for (name, inst) in cases {
        match verify_instance(&inst, &args)? {
            VerifyOutcome::Pass { points } => println!("{name}: pass ({points} points)"),
            VerifyOutcome::Fail { version, diff } => {
                println!(
                    "{name}: FAIL {version}: missing {:?} extra {:?}",
                    diff.missing, diff.extra
                )
            }
            VerifyOutcome::Skipped(why) => println!("{name}: skipped ({why})"),
        }
    }
    Ok(())
}
