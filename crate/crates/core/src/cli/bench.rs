//! Batch benchmarks producing one table per instance size.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;

use super::instances::InstanceSpec;
use super::plot::{line_chart, Series};
use super::versions::parse_version;
use crate::search::{solve_with, Arithmetic, Budget, SolveOptions, SolveStatus};
use crate::{Error, Result};

pub const BENCH_HEADER: &str = "version,nodes,time (s),solved IPs";

#[derive(Clone, Debug)]
pub struct BenchArgs {
    pub sizes: Vec<InstanceSpec>,
    pub versions: Vec<String>,
    pub count: usize,
    pub seed: u64,
    pub budget: Budget,
    /// Worker threads; 1 runs everything serially.
    pub jobs: usize,
    pub arithmetic: Arithmetic,
    pub out: Option<PathBuf>,
    pub plot: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub version: String,
    pub nodes: f64,
    pub time_s: f64,
    pub ips: f64,
    /// Runs entering the means.
    pub runs: usize,
}

/// Per-instance measurement, kept for paired comparisons.
#[derive(Clone, Debug, PartialEq)]
pub struct BenchRun {
    pub version: String,
    pub instance: usize,
    pub nodes: u64,
    pub time_s: f64,
    pub ips: u64,
    pub complete: bool,
}

#[derive(Clone, Debug)]
pub struct BenchTable {
    pub spec: InstanceSpec,
    pub rows: Vec<BenchRow>,
    pub runs: Vec<BenchRun>,
}

impl BenchTable {
    /// CSV with the fixed header; excluded runs are listed in `#` footer lines.
    pub fn to_csv(&self) -> String {
        let mut s = String::new();
        s.push_str(BENCH_HEADER);
        s.push('\n');
        for r in &self.rows {
            if r.runs == 0 {
                let _ = writeln!(s, "{},NA,NA,NA", r.version);
            } else {
                let _ = writeln!(
                    s,
                    "{},{:.1},{:.3},{:.1}",
                    r.version, r.nodes, r.time_s, r.ips
                );
            }
        }
        for r in self.runs.iter().filter(|r| !r.complete) {
            let _ = writeln!(
                s,
                "# excluded: {} instance {} (budget exhausted after {} nodes)",
                r.version, r.instance, r.nodes
            );
        }
        s
    }

    pub fn row(&self, version: &str) -> Option<&BenchRow> {
        self.rows.iter().find(|r| r.version == version)
    }

    /// Per-instance runs of one version, ordered by instance.
    pub fn runs_of(&self, version: &str) -> Vec<&BenchRun> {
        self.runs.iter().filter(|r| r.version == version).collect()
    }
}

fn mean_rows(versions: &[String], runs: &[BenchRun]) -> Vec<BenchRow> {
    versions
        .iter()
        .map(|v| {
            let ok: Vec<&BenchRun> = runs
                .iter()
                .filter(|r| &r.version == v && r.complete)
                .collect();
            let k = ok.len().max(1) as f64;
            BenchRow {
                version: v.clone(),
                nodes: ok.iter().map(|r| r.nodes as f64).sum::<f64>() / k,
                time_s: ok.iter().map(|r| r.time_s).sum::<f64>() / k,
                ips: ok.iter().map(|r| r.ips as f64).sum::<f64>() / k,
                runs: ok.len(),
            }
        })
        .collect()
}

/// Runs every version on the same `count` instances of every size.
/// Instance `k` of a size uses seed `seed + k`, as `generate` does.
pub fn cmd_bench(args: &BenchArgs) -> Result<Vec<BenchTable>> {
    let strategies = args
        .versions
        .iter()
        .map(|v| parse_version(v))
        .collect::<Result<Vec<_>>>()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.jobs.max(1))
        .build()
        .map_err(|e| Error::Internal(e.to_string()))?;
    let opts = SolveOptions {
        budget: args.budget,
        ..Default::default()
    };

    let mut tables = Vec::with_capacity(args.sizes.len());
    for spec in &args.sizes {
        let instances = (0..args.count)
            .map(|k| spec.generate(args.seed + k as u64))
            .collect::<Result<Vec<_>>>()?;
        let tasks: Vec<(usize, usize)> = (0..strategies.len())
            .flat_map(|v| (0..instances.len()).map(move |k| (v, k)))
            .collect();
        let runs = pool.install(|| {
            tasks
                .par_iter()
                .map(|&(v, k)| {
                    let out = solve_with(&instances[k], &strategies[v], args.arithmetic, &opts)?;
                    Ok(BenchRun {
                        version: args.versions[v].clone(),
                        instance: k,
                        nodes: out.stats.nodes,
                        time_s: out.stats.time_s,
                        ips: out.stats.ips,
                        complete: out.status != SolveStatus::Incomplete,
                    })
                })
                .collect::<Result<Vec<_>>>()
        })?;
        log::info!("bench {spec}: {} runs", runs.len());
        tables.push(BenchTable {
            spec: *spec,
            rows: mean_rows(&args.versions, &runs),
            runs,
        });
    }

    if let Some(out) = &args.out {
        write_outputs(out, &tables, args.plot)?;
    }
    Ok(tables)
}

fn write_outputs(out: &Path, tables: &[BenchTable], plot: bool) -> Result<()> {
    fs::create_dir_all(out)?;
    for t in tables {
        let name = format!("bench_{}_{}.csv", t.spec.class_name(), t.spec.params());
        fs::write(out.join(name), t.to_csv())?;
    }
    if plot && !tables.is_empty() {
        let class = tables[0].spec.class_name();
        let labels: Vec<String> = tables.iter().map(|t| t.spec.params()).collect();
        let versions: Vec<String> = tables[0].rows.iter().map(|r| r.version.clone()).collect();
        for (metric, title) in [("nodes", "mean nodes"), ("time", "mean time (s)")] {
            let series: Vec<Series> = versions
                .iter()
                .map(|v| Series {
                    name: v.clone(),
                    values: tables
                        .iter()
                        .map(|t| {
                            t.row(v).filter(|r| r.runs > 0).map(|r| match metric {
                                "nodes" => r.nodes,
                                _ => r.time_s,
                            })
                        })
                        .collect(),
                })
                .collect();
            let svg = line_chart(&format!("{class}: {title}"), &labels, &series);
            fs::write(out.join(format!("bench_{class}_{metric}.svg")), svg)?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_shape_and_budget_footer() {
        let args = BenchArgs {
            sizes: vec![InstanceSpec::Knapsack { n: 10, m: 1 }],
            versions: vec!["BB".into(), "BS1".into()],
            count: 2,
            seed: 1,
            budget: Budget::default(),
            jobs: 2,
            arithmetic: Arithmetic::Float,
            out: None,
            plot: false,
        };
        let t = &cmd_bench(&args).unwrap()[0];
        let csv = t.to_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], BENCH_HEADER);
        assert_eq!(lines.len(), 3);
        assert!(lines[1].starts_with("BB,") && lines[1].ends_with(",0.0"));

        let tight = BenchArgs {
            budget: Budget {
                max_nodes: Some(2),
                max_seconds: None,
            },
            ..args
        };
        let t = &cmd_bench(&tight).unwrap()[0];
        let csv = t.to_csv();
        assert!(csv.contains("BB,NA,NA,NA"));
        assert_eq!(
            csv.lines().filter(|l| l.starts_with("# excluded")).count(),
            4
        );
    }
}
