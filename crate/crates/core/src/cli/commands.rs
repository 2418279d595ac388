//! `generate`, `solve` and `verify`.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use serde::Serialize;

use super::instances::InstanceSpec;
use super::oracle::brute_force_frontier;
use super::versions::parse_version;
use crate::model::{parse_instance, serialize_instance, Image, Instance};
use crate::search::{solve_with, Arithmetic, Budget, SolveOptions, SolveOutput, SolveStatus};
use crate::{Error, Result};

#[derive(Serialize)]
struct Manifest {
    class: &'static str,
    params: String,
    base_seed: u64,
    files: Vec<ManifestEntry>,
}

#[derive(Serialize)]
struct ManifestEntry {
    file: String,
    seed: u64,
}

/// Writes `count` instances (instance `k` uses `seed + k`) and a manifest.
/// Returns the instance paths followed by the manifest path.
pub fn cmd_generate(
    spec: &InstanceSpec,
    count: usize,
    seed: u64,
    out: &Path,
) -> Result<Vec<PathBuf>> {
    fs::create_dir_all(out)?;
    let mut paths = Vec::with_capacity(count + 1);
    let mut files = Vec::with_capacity(count);
    for k in 0..count {
        let s = seed + k as u64;
        let inst = spec.generate(s)?;
        let name = spec.file_name(k);
        let path = out.join(&name);
        fs::write(&path, serialize_instance(&inst))?;
        files.push(ManifestEntry {
            file: name,
            seed: s,
        });
        paths.push(path);
    }
    let manifest = Manifest {
        class: spec.class_name(),
        params: spec.params(),
        base_seed: seed,
        files,
    };
    let path = out.join(format!(
        "{}_{}_manifest.json",
        spec.class_name(),
        spec.params()
    ));
    let json =
        serde_json::to_string_pretty(&manifest).map_err(|e| Error::Internal(e.to_string()))?;
    fs::write(&path, json + "\n")?;
    paths.push(path);
    Ok(paths)
}

pub fn load_instance(path: &Path) -> Result<Instance> {
    parse_instance(&fs::read_to_string(path)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Csv,
    JsonLines,
}

#[derive(Clone, Debug, Default)]
pub struct SolveArgs {
    pub version: String,
    pub arithmetic: Arithmetic,
    pub budget: Budget,
    pub format: OutputFormat,
    pub verify: bool,
}

/// Frontier comparison against the oracle, in original orientation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrontierDiff {
    pub missing: Vec<Image>,
    pub extra: Vec<Image>,
}

impl FrontierDiff {
    pub fn new(inst: &Instance, got: &[Image], want: &[Image]) -> Self {
        let orig = |v: &[Image], other: &[Image]| -> Vec<Image> {
            let mut d: Vec<Image> = v
                .iter()
                .filter(|p| !other.contains(p))
                .map(|p| inst.to_original(*p))
                .collect();
            d.sort();
            d
        };
        FrontierDiff {
            missing: orig(want, got),
            extra: orig(got, want),
        }
    }

    pub fn is_match(&self) -> bool {
        self.missing.is_empty() && self.extra.is_empty()
    }
}

fn fmt_points(v: &[Image]) -> String {
    let items: Vec<String> = v.iter().map(|p| format!("({}, {})", p.z1, p.z2)).collect();
    format!("[{}]", items.join(", "))
}

#[derive(Clone, Debug)]
pub struct SolveReport {
    pub output: SolveOutput,
    /// `Some` when an oracle comparison was requested and possible.
    pub oracle: Option<FrontierDiff>,
    /// Oracle refusal message, if the guard fired.
    pub oracle_skipped: Option<String>,
    pub text: String,
}

impl SolveReport {
    /// False only when an oracle comparison ran and found a difference.
    pub fn ok(&self) -> bool {
        self.oracle.as_ref().is_none_or(FrontierDiff::is_match)
    }
}

#[derive(Serialize)]
struct PointLine<'a> {
    event: &'static str,
    z1: i64,
    z2: i64,
    x: &'a str,
}

#[derive(Serialize)]
struct SummaryLine<'a> {
    event: &'static str,
    version: &'a str,
    status: SolveStatus,
    points: usize,
    stats: &'a crate::search::RunStats,
    oracle: Option<&'static str>,
}

/// Solves one instance and renders the report.
pub fn cmd_solve(inst: &Instance, args: &SolveArgs) -> Result<SolveReport> {
    let strategy = parse_version(&args.version)?;
    let opts = SolveOptions {
        budget: args.budget,
        record_events: args.format == OutputFormat::JsonLines,
        ..Default::default()
    };
    let output = solve_with(inst, &strategy, args.arithmetic, &opts)?;
    let (oracle, oracle_skipped) = if args.verify {
        match brute_force_frontier(inst) {
            Ok(r) => (
                Some(FrontierDiff::new(inst, &output.images(), &r.frontier)),
                None,
            ),
            Err(Error::OracleGuard(m)) => (None, Some(m)),
            Err(e) => return Err(e),
        }
    } else {
        (None, None)
    };
    let oracle_word = oracle
        .as_ref()
        .map(|d| if d.is_match() { "match" } else { "mismatch" });
    let points: Vec<(Image, String)> = output
        .frontier
        .iter()
        .map(|s| {
            let bits: String = s.assignment.iter().map(|b| char::from(b'0' + b)).collect();
            (inst.to_original(s.image), bits)
        })
        .collect();
    let st = &output.stats;
    let status = match output.status {
        SolveStatus::Complete => "complete",
        SolveStatus::Incomplete => "incomplete (budget exhausted)",
        SolveStatus::Infeasible => "infeasible",
    };

    let mut text = String::new();
    match args.format {
        OutputFormat::Text => {
            let _ = writeln!(text, "version: {}", args.version);
            let _ = writeln!(text, "status: {status}");
            let _ = writeln!(text, "points: {}", points.len());
            for (p, _) in &points {
                let _ = writeln!(text, "  {} {}", p.z1, p.z2);
            }
            let _ = writeln!(text, "nodes: {}", st.nodes);
            let _ = writeln!(text, "solved IPs: {}", st.ips);
            let _ = writeln!(text, "time (s): {:.3}", st.time_s);
        }
        OutputFormat::Csv => {
            text.push_str("z1,z2,x\n");
            for (p, x) in &points {
                let _ = writeln!(text, "{},{},{x}", p.z1, p.z2);
            }
            let _ = writeln!(
                text,
                "# version={} status={} nodes={} ips={} time_s={:.3}",
                args.version, status, st.nodes, st.ips, st.time_s
            );
        }
        OutputFormat::JsonLines => {
            for e in &output.events {
                text.push_str(&json(e));
            }
            for (p, x) in &points {
                text.push_str(&json(&PointLine {
                    event: "point",
                    z1: p.z1,
                    z2: p.z2,
                    x,
                }));
            }
            text.push_str(&json(&SummaryLine {
                event: "summary",
                version: &args.version,
                status: output.status,
                points: points.len(),
                stats: st,
                oracle: oracle_word,
            }));
        }
    }
    if args.format != OutputFormat::JsonLines {
        let prefix = if args.format == OutputFormat::Csv {
            "# "
        } else {
            ""
        };
        if let Some(d) = &oracle {
            if d.is_match() {
                let _ = writeln!(text, "{prefix}oracle: match");
            } else {
                let _ = writeln!(
                    text,
                    "{prefix}oracle: mismatch; missing {} extra {}",
                    fmt_points(&d.missing),
                    fmt_points(&d.extra)
                );
            }
        }
        if let Some(m) = &oracle_skipped {
            let _ = writeln!(text, "{prefix}oracle: skipped ({m})");
        }
    }
    Ok(SolveReport {
        output,
        oracle,
        oracle_skipped,
        text,
    })
}

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("serializable") + "\n"
}

#[derive(Clone, Debug, Default)]
pub struct VerifyArgs {
    pub versions: Vec<String>,
    pub arithmetic: Arithmetic,
    #[doc(hidden)]
    pub corrupt_frontier: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VerifyOutcome {
    Pass { points: usize },
    Fail { version: String, diff: FrontierDiff },
    Skipped(String),
}

#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub results: Vec<(String, VerifyOutcome)>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        !self
            .results
            .iter()
            .any(|(_, o)| matches!(o, VerifyOutcome::Fail { .. }))
    }

    /// One line per instance, then a summary line.
    pub fn render(&self, versions: usize) -> String {
        let mut s = String::new();
        let mut failed = 0;
        for (name, o) in &self.results {
            match o {
                VerifyOutcome::Pass { points } => {
                    let _ = writeln!(s, "{name}: pass ({versions} versions, {points} points)");
                }
                VerifyOutcome::Fail { version, diff } => {
                    failed += 1;
                    let _ = writeln!(
                        s,
                        "{name}: fail {version}: missing {} extra {}",
                        fmt_points(&diff.missing),
                        fmt_points(&diff.extra)
                    );
                }
                VerifyOutcome::Skipped(m) => {
                    let _ = writeln!(s, "{name}: skipped ({m})");
                }
            }
        }
        if failed == 0 {
            let _ = writeln!(s, "verify: pass ({} instances)", self.results.len());
        } else {
            let _ = writeln!(
                s,
                "verify: fail ({failed} of {} instances)",
                self.results.len()
            );
        }
        s
    }
}

/// Checks one instance against the oracle for every version.
pub fn verify_instance(inst: &Instance, args: &VerifyArgs) -> Result<VerifyOutcome> {
    let want = match brute_force_frontier(inst) {
        Ok(r) => r.frontier,
        Err(Error::OracleGuard(m)) => return Ok(VerifyOutcome::Skipped(m)),
        Err(e) => return Err(e),
    };
    let opts = SolveOptions {
        corrupt_frontier: args.corrupt_frontier,
        ..Default::default()
    };
    for v in &args.versions {
        let out = solve_with(inst, &parse_version(v)?, args.arithmetic, &opts)?;
        let diff = FrontierDiff::new(inst, &out.images(), &want);
        if !diff.is_match() {
            return Ok(VerifyOutcome::Fail {
                version: v.clone(),
                diff,
            });
        }
    }
    Ok(VerifyOutcome::Pass { points: want.len() })
}

/// Verifies a single instance file or every `.boilp` file of a directory.
pub fn cmd_verify(path: &Path, args: &VerifyArgs) -> Result<VerifyReport> {
    let files = if path.is_dir() {
        let mut v: Vec<PathBuf> = fs::read_dir(path)?
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|x| x == "boilp"))
            .collect();
        v.sort();
        v
    } else {
        vec![path.to_path_buf()]
    };
    let mut results = Vec::with_capacity(files.len());
    for f in files {
        let name = f.file_name().map_or_else(
            || f.display().to_string(),
            |n| n.to_string_lossy().into_owned(),
        );
        let inst = load_instance(&f)?;
        results.push((name, verify_instance(&inst, args)?));
    }
    Ok(VerifyReport { results })
}
