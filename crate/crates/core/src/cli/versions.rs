//! The closed grid of version labels used in benchmark tables.

use crate::search::{AwtCutMode, NodeOrder, Scalarization, Strategy};
use crate::{Error, Result};

/// All 22 labels in table order.
pub fn version_labels() -> Vec<String> {
    let mut v: Vec<String> = ["BB", "BS1", "BS2", "WS"].map(String::from).to_vec();
    for a in 1..=3 {
        for b in 1..=2 {
            v.push(format!("M1.{a}.{b}"));
        }
    }
    for a in 1..=3 {
        for b in 1..=2 {
            for g in 1..=2 {
                v.push(format!("M2.{a}.{b}.{g}"));
            }
        }
    }
    v
}

fn unknown(label: &str) -> Error {
    Error::UnknownVersion {
        label: label.to_string(),
        known: version_labels().join(", "),
    }
}

/// Strategy for a version label.
pub fn parse_version(label: &str) -> Result<Strategy> {
    let base = Strategy::baseline();
    let fixed = match label {
        "BB" => Some(base),
        "BS1" => Some(Strategy {
            node_order: NodeOrder::MaxLhg,
            ..base
        }),
        "BS2" => Some(Strategy {
            node_order: NodeOrder::MaxThg,
            ..base
        }),
        // Weighted sums on a depth-first tree, every 10th iteration.
        "WS" => Some(Strategy {
            scalarization: Scalarization::WsOnly,
            ..base
        }),
        _ => None,
    };
    if let Some(s) = fixed {
        return Ok(s);
    }
    let mut parts = label.split('.');
    let family = parts.next().unwrap_or_default();
    let digits: Vec<u8> = parts
        .map(|p| p.parse::<u8>().map_err(|_| unknown(label)))
        .collect::<Result<_>>()?;
    let order = |b: u8| match b {
        1 => Ok(NodeOrder::MaxLhg),
        2 => Ok(NodeOrder::MaxThg),
        _ => Err(unknown(label)),
    };
    match (family, digits.as_slice()) {
        ("M1", &[a, b]) if (1..=3).contains(&a) => Ok(Strategy {
            node_order: order(b)?,
            scalarization: Scalarization::WsOnly,
            alpha: a,
            awt_cut: AwtCutMode::Skip,
        }),
        ("M2", &[a, b, g]) if (1..=3).contains(&a) => Ok(Strategy {
            node_order: order(b)?,
            scalarization: Scalarization::WsPlusAwt,
            alpha: a,
            awt_cut: match g {
                1 => AwtCutMode::Integrate,
                2 => AwtCutMode::Skip,
                _ => return Err(unknown(label)),
            },
        }),
        _ => Err(unknown(label)),
    }
}

/// Comma-separated labels; `all` expands to the full grid.
pub fn parse_version_list(list: &str) -> Result<Vec<String>> {
    if list.trim() == "all" {
        return Ok(version_labels());
    }
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| parse_version(s).map(|_| s.to_string()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_has_22_distinct_parsable_labels() {
        let labels = version_labels();
        assert_eq!(labels.len(), 22);
        let strategies: Vec<Strategy> = labels.iter().map(|l| parse_version(l).unwrap()).collect();
        for i in 0..22 {
            for j in i + 1..22 {
                assert_ne!(
                    strategies[i], strategies[j],
                    "{} vs {}",
                    labels[i], labels[j]
                );
            }
        }
    }

    #[test]
    fn labels_map_to_strategies() {
        let s = parse_version("M2.3.2.1").unwrap();
        assert_eq!(s.alpha, 3);
        assert_eq!(s.node_order, NodeOrder::MaxThg);
        assert_eq!(s.awt_cut, AwtCutMode::Integrate);
        assert_eq!(parse_version("BB").unwrap(), Strategy::baseline());
    }

    #[test]
    fn unknown_label_lists_the_grid() {
        for bad in ["M9", "M1.4.1", "M2.1.1", "M1.1.3", "bs1", ""] {
            let e = parse_version(bad).unwrap_err().to_string();
            assert!(e.contains("M2.3.2.2") && e.contains("BB"), "{bad}: {e}");
        }
        assert_eq!(parse_version_list("all").unwrap().len(), 22);
        assert_eq!(parse_version_list("BB, BS1").unwrap(), vec!["BB", "BS1"]);
    }
}
