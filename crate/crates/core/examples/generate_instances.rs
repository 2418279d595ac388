//! Generates one instance of each class and prints it in the text format.
//!
//!     cargo run --example generate_instances

use mobb::model::{gen_assignment, gen_facility_location, gen_knapsack, serialize_instance};

fn main() -> mobb::Result<()> {
    let kp = gen_knapsack(6, 2, 42)?;
    print!("{}", serialize_instance(&kp));
    println!();

    let ap = gen_assignment(3, 42)?;
    println!(
        "assignment l=3 has {} variables and {} rows",
        ap.n(),
        ap.constraints().len()
    );

    let fl = gen_facility_location(4, 2, 42)?;
    println!(
        "facility l=4 q=2 has {} variables and {} rows",
        fl.n(),
        fl.constraints().len()
    );

    // Same seed, same instance.
    assert_eq!(gen_knapsack(6, 2, 42)?, kp);
    Ok(())
}
