//! Line-oriented instance files.
//!
//! ```text
//! BOILP 1
//! sense max
//! n 3
//! class knapsack 1
//! obj1 60 55 50
//! obj2 10 20 30
//! le 10 10 10 15
//! seed 7
//! ```
//!
//! Objective rows are written in the instance's original sense. Each
//! constraint line carries `n` coefficients followed by the right-hand side.
//! The `seed` line is optional and must come last.

use std::fmt::Write as _;

use super::{ClassTag, Constraint, Instance, Relation, Sense};
use crate::error::{Error, Result};

const MAGIC: &str = "BOILP";
const VERSION: &str = "1";

pub fn serialize_instance(inst: &Instance) -> String {
    let mut out = String::new();
    let join = |v: &[i64]| {
        v.iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    writeln!(out, "{MAGIC} {VERSION}").unwrap();
    let sense = match inst.sense() {
        Sense::Min => "min",
        Sense::Max => "max",
    };
    writeln!(out, "sense {sense}").unwrap();
    writeln!(out, "n {}", inst.n()).unwrap();
    let class = match inst.class() {
        ClassTag::Knapsack { m } => format!("knapsack {m}"),
        ClassTag::Assignment { l } => format!("assignment {l}"),
        ClassTag::FacilityLocation { l, q } => format!("facility_location {l} {q}"),
        ClassTag::Generic => "generic".to_string(),
    };
    writeln!(out, "class {class}").unwrap();
    writeln!(out, "obj1 {}", join(&inst.original_objective(0))).unwrap();
    writeln!(out, "obj2 {}", join(&inst.original_objective(1))).unwrap();
    for c in inst.constraints() {
        let rel = match c.relation {
            Relation::Le => "le",
            Relation::Eq => "eq",
        };
        writeln!(out, "{rel} {} {}", join(&c.coeffs), c.rhs).unwrap();
    }
    if let Some(seed) = inst.seed() {
        writeln!(out, "seed {seed}").unwrap();
    }
    out
}

struct Lines<'a> {
    inner: std::iter::Peekable<std::iter::Enumerate<std::str::Lines<'a>>>,
}

impl<'a> Lines<'a> {
    fn next_line(&mut self, field: &str) -> Result<(usize, Vec<&'a str>)> {
        for (idx, raw) in self.inner.by_ref() {
            let toks: Vec<&str> = raw.split_whitespace().collect();
            if !toks.is_empty() {
                return Ok((idx + 1, toks));
            }
        }
        Err(Error::Parse {
            line: 0,
            field: field.to_string(),
            message: "unexpected end of document".into(),
        })
    }
}

fn perr(line: usize, field: &str, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        field: field.to_string(),
        message: message.into(),
    }
}

fn int<T: std::str::FromStr>(line: usize, field: &str, tok: &str) -> Result<T> {
    tok.parse()
        .map_err(|_| perr(line, field, format!("expected an integer, found `{tok}`")))
}

fn expect_key(line: usize, toks: &[&str], key: &str, arity: usize) -> Result<()> {
    if toks[0] != key {
        return Err(perr(
            line,
            key,
            format!("expected `{key}`, found `{}`", toks[0]),
        ));
    }
    if toks.len() != arity + 1 {
        return Err(perr(
            line,
            key,
            format!("expected {arity} value(s), found {}", toks.len() - 1),
        ));
    }
    Ok(())
}

pub fn parse_instance(text: &str) -> Result<Instance> {
    let mut lines = Lines {
        inner: text.lines().enumerate().peekable(),
    };

    let (ln, toks) = lines.next_line("magic")?;
    if toks != [MAGIC, VERSION] {
        return Err(perr(ln, "magic", format!("expected `{MAGIC} {VERSION}`")));
    }

    let (ln, toks) = lines.next_line("sense")?;
    expect_key(ln, &toks, "sense", 1)?;
    let sense = match toks[1] {
        "min" => Sense::Min,
        "max" => Sense::Max,
        other => return Err(perr(ln, "sense", format!("unknown sense `{other}`"))),
    };

    let (ln, toks) = lines.next_line("n")?;
    expect_key(ln, &toks, "n", 1)?;
    let n: usize = int(ln, "n", toks[1])?;
    if n == 0 {
        return Err(perr(ln, "n", "n must be positive"));
    }

    let (ln, toks) = lines.next_line("class")?;
    if toks[0] != "class" || toks.len() < 2 {
        return Err(perr(ln, "class", "expected `class <tag> <params...>`"));
    }
    let params = &toks[2..];
    let class = match (toks[1], params.len()) {
        ("knapsack", 1) => ClassTag::Knapsack {
            m: int(ln, "class", params[0])?,
        },
        ("assignment", 1) => ClassTag::Assignment {
            l: int(ln, "class", params[0])?,
        },
        ("facility_location", 2) => ClassTag::FacilityLocation {
            l: int(ln, "class", params[0])?,
            q: int(ln, "class", params[1])?,
        },
        ("generic", 0) => ClassTag::Generic,
        (tag, k) => {
            return Err(perr(
                ln,
                "class",
                format!("unknown class `{tag}` with {k} parameter(s)"),
            ))
        }
    };

    let mut objectives: [Vec<i64>; 2] = [Vec::new(), Vec::new()];
    for (k, key) in ["obj1", "obj2"].into_iter().enumerate() {
        let (ln, toks) = lines.next_line(key)?;
        expect_key(ln, &toks, key, n)?;
        objectives[k] = toks[1..]
            .iter()
            .map(|t| int(ln, key, t))
            .collect::<Result<_>>()?;
    }

    let mut constraints = Vec::new();
    let mut seed = None;
    while lines.inner.peek().is_some() {
        let Ok((ln, toks)) = lines.next_line("constraint") else {
            break;
        };
        if seed.is_some() {
            return Err(perr(ln, toks[0], "nothing may follow the `seed` line"));
        }
        match toks[0] {
            "le" | "eq" => {
                let key = toks[0];
                expect_key(ln, &toks, key, n + 1)?;
                let vals: Vec<i64> = toks[1..]
                    .iter()
                    .map(|t| int(ln, key, t))
                    .collect::<Result<_>>()?;
                let relation = if key == "le" {
                    Relation::Le
                } else {
                    Relation::Eq
                };
                constraints.push(Constraint {
                    coeffs: vals[..n].to_vec(),
                    relation,
                    rhs: vals[n],
                });
            }
            "seed" => {
                expect_key(ln, &toks, "seed", 1)?;
                seed = Some(int(ln, "seed", toks[1])?);
            }
            other => return Err(perr(ln, other, format!("unknown line kind `{other}`"))),
        }
    }

    Instance::new(sense, objectives, constraints, class, seed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{gen_assignment, gen_facility_location, gen_knapsack};
    use proptest::prelude::*;

    #[test]
    fn round_trip_generated() {
        let inst = gen_knapsack(10, 1, 7).unwrap();
        assert_eq!(parse_instance(&serialize_instance(&inst)).unwrap(), inst);
        let inst = gen_facility_location(3, 2, 1).unwrap();
        assert_eq!(parse_instance(&serialize_instance(&inst)).unwrap(), inst);
    }

    #[test]
    fn empty_document_is_rejected() {
        assert!(matches!(parse_instance(""), Err(Error::Parse { .. })));
    }

    #[test]
    fn non_integer_objective_is_rejected() {
        let text = "BOILP 1\nsense min\nn 2\nclass generic\nobj1 1 2.5\nobj2 1 1\n";
        match parse_instance(text) {
            Err(Error::Parse { line, field, .. }) => {
                assert_eq!(line, 5);
                assert_eq!(field, "obj1");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn wrong_arity_reports_line() {
        let text = "BOILP 1\nsense min\nn 2\nclass generic\nobj1 1 2\nobj2 1 1\nle 1 1\n";
        assert!(matches!(
            parse_instance(text),
            Err(Error::Parse { line: 7, .. })
        ));
    }

    #[test]
    fn file_keeps_original_sense() {
        let inst = gen_assignment(2, 3).unwrap();
        let text = serialize_instance(&inst);
        let obj1 = text.lines().nth(4).unwrap();
        assert!(obj1
            .split_whitespace()
            .skip(1)
            .all(|t| t.parse::<i64>().unwrap() >= 50));
    }

    proptest! {
        #[test]
        fn round_trip_arbitrary(
            sense_max in any::<bool>(),
            n in 1usize..6,
            rows in 0usize..4,
            seed in proptest::option::of(any::<u64>()),
            vals in proptest::collection::vec(-1000i64..1000, 64),
        ) {
            let mut it = vals.into_iter().cycle();
            let mut take = |k: usize| -> Vec<i64> { (0..k).map(|_| it.next().unwrap()).collect() };
            let objectives = [take(n), take(n)];
            let constraints = (0..rows)
                .map(|r| {
                    let mut c = Constraint::le(take(n), take(1)[0]);
                    if r % 2 == 1 { c.relation = Relation::Eq; }
                    c
                })
                .collect();
            let sense = if sense_max { Sense::Max } else { Sense::Min };
            let inst = Instance::new(sense, objectives, constraints, ClassTag::Generic, seed).unwrap();
            prop_assert_eq!(parse_instance(&serialize_instance(&inst)).unwrap(), inst);
        }
    }
}
