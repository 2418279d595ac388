//! Command implementations behind the `mobb` binary.

mod bench;
mod commands;
mod instances;
mod oracle;
mod plot;
mod versions;

pub use bench::{cmd_bench, BenchArgs, BenchRow, BenchRun, BenchTable, BENCH_HEADER};
pub use commands::{
    cmd_generate, cmd_solve, cmd_verify, load_instance, verify_instance, FrontierDiff,
    OutputFormat, SolveArgs, SolveReport, VerifyArgs, VerifyOutcome, VerifyReport,
};
pub use instances::{parse_size_list, size_grid, InstanceSpec};
pub use oracle::{all_vectors, brute_force_frontier, pareto_filter, OracleResult, MAX_ENUM_VARS};
pub use plot::{line_chart, Series};
pub use versions::{parse_version, parse_version_list, version_labels};
