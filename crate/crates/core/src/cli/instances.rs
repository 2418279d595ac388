//! Instance families addressed from the command line.

use std::fmt;

use crate::model::{gen_assignment, gen_facility_location, gen_knapsack, Instance};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum InstanceSpec {
    Knapsack { n: usize, m: usize },
    Assignment { l: usize },
    Facility { l: usize, q: usize },
}

impl InstanceSpec {
    /// Builds a spec from a class name and the size flags that apply to it.
    pub fn from_flags(
        class: &str,
        n: Option<usize>,
        m: Option<usize>,
        l: Option<usize>,
        q: Option<usize>,
    ) -> Result<Self> {
        let need = |v: Option<usize>, flag: &str| {
            v.ok_or_else(|| Error::Parameter(format!("class `{class}` needs --{flag}")))
        };
        match class {
            "knapsack" => Ok(InstanceSpec::Knapsack {
                n: need(n, "n")?,
                m: m.unwrap_or(1),
            }),
            "assignment" => Ok(InstanceSpec::Assignment { l: need(l, "l")? }),
            "facility" | "facility_location" => Ok(InstanceSpec::Facility {
                l: need(l, "l")?,
                q: need(q, "q")?,
            }),
            other => Err(Error::Parameter(format!(
                "unknown class `{other}`; expected knapsack, assignment or facility"
            ))),
        }
    }

    pub fn class_name(&self) -> &'static str {
        match self {
            InstanceSpec::Knapsack { .. } => "knapsack",
            InstanceSpec::Assignment { .. } => "assignment",
            InstanceSpec::Facility { .. } => "facility",
        }
    }

    /// Size parameters as used in file names, e.g. `n15_m2`.
    pub fn params(&self) -> String {
        match self {
            InstanceSpec::Knapsack { n, m } => format!("n{n}_m{m}"),
            InstanceSpec::Assignment { l } => format!("l{l}"),
            InstanceSpec::Facility { l, q } => format!("l{l}_q{q}"),
        }
    }

    /// Number of binary variables.
    pub fn n_vars(&self) -> usize {
        match *self {
            InstanceSpec::Knapsack { n, .. } => n,
            InstanceSpec::Assignment { l } => l * l,
            InstanceSpec::Facility { l, q } => (l + 1) * q,
        }
    }

    pub fn generate(&self, seed: u64) -> Result<Instance> {
        match *self {
            InstanceSpec::Knapsack { n, m } => gen_knapsack(n, m, seed),
            InstanceSpec::Assignment { l } => gen_assignment(l, seed),
            InstanceSpec::Facility { l, q } => gen_facility_location(l, q, seed),
        }
    }

    /// File name of the `k`-th instance of a batch.
    pub fn file_name(&self, k: usize) -> String {
        format!("{}_{}_{k}.boilp", self.class_name(), self.params())
    }
}

impl fmt::Display for InstanceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.class_name(), self.params())
    }
}

/// Parses `10,15,20` or a single value.
pub fn parse_size_list(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| Error::Parameter(format!("bad size `{t}`")))
        })
        .collect()
}

/// Cartesian product of the size lists that apply to `class`.
pub fn size_grid(
    class: &str,
    n: &[usize],
    m: &[usize],
    l: &[usize],
    q: &[usize],
) -> Result<Vec<InstanceSpec>> {
    let one = |v: &[usize]| -> Vec<Option<usize>> {
        if v.is_empty() {
            vec![None]
        } else {
            v.iter().copied().map(Some).collect()
        }
    };
    let mut out = Vec::new();
    match class {
        "knapsack" => {
            for &ni in &one(n) {
                for &mi in &one(m) {
                    out.push(InstanceSpec::from_flags(class, ni, mi, None, None)?);
                }
            }
        }
        _ => {
            for &li in &one(l) {
                for &qi in &one(q) {
                    out.push(InstanceSpec::from_flags(class, None, None, li, qi)?);
                }
            }
        }
    }
    Ok(out)
}
