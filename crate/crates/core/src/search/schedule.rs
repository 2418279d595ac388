//! Per-class schedules deciding when an IP scalarization is triggered.

use serde::Serialize;

use super::{Scalarization, Strategy};
use crate::model::ClassTag;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Trigger {
    Ws,
    Awt,
}

/// Iteration window and phase moduli of one instance class.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Table {
    /// Length `N` of the weighted-sum window for α = 2.
    window: u64,
    /// Phase `k` (1-based) of α = 3 covers `it · div ≤ k · window`.
    div: u64,
    moduli: [u64; 3],
    /// Iteration after which M2 switches on AWT for α = 3.
    awt_start_alpha3: u64,
}

fn table(class: ClassTag, n: usize) -> Table {
    let n = n as u64;
    match class {
        ClassTag::Assignment { l } => {
            let l = l as u64;
            let window = n * l;
            Table {
                window,
                div: 3,
                moduli: [10, l.max(1), n.max(1)],
                awt_start_alpha3: window,
            }
        }
        ClassTag::FacilityLocation { .. } => {
            let window = n * n / 4;
            Table {
                window,
                div: 1,
                moduli: [10, (n / 2).max(1), n.max(1)],
                awt_start_alpha3: 3 * window,
            }
        }
        ClassTag::Knapsack { .. } | ClassTag::Generic => {
            let window = n * n;
            Table {
                window,
                div: 3,
                moduli: [10, n.max(1), (2 * n).max(1)],
                awt_start_alpha3: window,
            }
        }
    }
}

fn ws_due(it: u64, alpha: u8, t: &Table) -> bool {
    match alpha {
        1 => it.is_multiple_of(10),
        2 => it <= t.window && it.is_multiple_of(10),
        _ => (1..=3u64)
            .find(|&k| it * t.div <= k * t.window)
            .is_some_and(|k| it.is_multiple_of(t.moduli[k as usize - 1])),
    }
}

fn awt_due(it: u64, alpha: u8, t: &Table) -> bool {
    let start = match alpha {
        1 => 0,
        2 => t.window,
        _ => t.awt_start_alpha3,
    };
    it > start && it.is_multiple_of(50)
}

/// Scalarization due at `iteration` (1-based). AWT takes precedence when
/// both are due.
pub fn schedule_trigger(
    iteration: u64,
    strategy: &Strategy,
    class: ClassTag,
    n: usize,
) -> Option<Trigger> {
    if strategy.scalarization == Scalarization::None || iteration == 0 {
        return None;
    }
    if class == ClassTag::Generic {
        log::debug!("generic instance: using the knapsack schedule");
    }
    let t = table(class, n);
    let alpha = strategy.alpha;
    if strategy.scalarization == Scalarization::WsPlusAwt && awt_due(iteration, alpha, &t) {
        return Some(Trigger::Awt);
    }
    ws_due(iteration, alpha, &t).then_some(Trigger::Ws)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::search::{AwtCutMode, NodeOrder};

    fn strat(s: Scalarization, alpha: u8) -> Strategy {
        Strategy {
            node_order: NodeOrder::MaxLhg,
            scalarization: s,
            alpha,
            awt_cut: AwtCutMode::Skip,
        }
    }

    const KP: ClassTag = ClassTag::Knapsack { m: 1 };

    #[test]
    fn awt_replaces_ws_every_fiftieth_iteration() {
        let m2 = strat(Scalarization::WsPlusAwt, 1);
        assert_eq!(schedule_trigger(50, &m2, KP, 30), Some(Trigger::Awt));
        assert_eq!(schedule_trigger(40, &m2, KP, 30), Some(Trigger::Ws));
        let m1 = strat(Scalarization::WsOnly, 1);
        assert_eq!(schedule_trigger(50, &m1, KP, 30), Some(Trigger::Ws));
    }

    #[test]
    fn alpha_two_window_closes_after_n_squared() {
        let m1 = strat(Scalarization::WsOnly, 2);
        assert_eq!(schedule_trigger(2500, &m1, KP, 50), Some(Trigger::Ws));
        assert_eq!(schedule_trigger(2510, &m1, KP, 50), None);
        let m2 = strat(Scalarization::WsPlusAwt, 2);
        assert_eq!(schedule_trigger(2500, &m2, KP, 50), Some(Trigger::Ws));
        assert_eq!(schedule_trigger(2550, &m2, KP, 50), Some(Trigger::Awt));
        assert_eq!(schedule_trigger(2510, &m2, KP, 50), None);
    }

    #[test]
    fn off_iterations_and_baseline() {
        for s in [Scalarization::WsOnly, Scalarization::WsPlusAwt] {
            for a in 1..=3 {
                assert_eq!(schedule_trigger(7, &strat(s, a), KP, 30), None);
            }
        }
        assert_eq!(
            schedule_trigger(10, &strat(Scalarization::None, 1), KP, 30),
            None
        );
    }

    #[test]
    fn alpha_three_knapsack_phases() {
        // n = 30, N = 900: phases end at 300, 600, 900.
        let s = strat(Scalarization::WsOnly, 3);
        assert_eq!(schedule_trigger(300, &s, KP, 30), Some(Trigger::Ws));
        assert_eq!(schedule_trigger(310, &s, KP, 30), None);
        assert_eq!(schedule_trigger(330, &s, KP, 30), Some(Trigger::Ws));
        assert_eq!(schedule_trigger(630, &s, KP, 30), None);
        assert_eq!(schedule_trigger(660, &s, KP, 30), Some(Trigger::Ws));
        assert_eq!(schedule_trigger(960, &s, KP, 30), None);
    }

    #[test]
    fn assignment_and_facility_tables() {
        let s = strat(Scalarization::WsOnly, 3);
        // l = 4, n = 16, N = 64: thresholds 21.3, 42.7, 64; moduli 10, 4, 16.
        let a = ClassTag::Assignment { l: 4 };
        assert_eq!(schedule_trigger(20, &s, a, 16), Some(Trigger::Ws));
        assert_eq!(schedule_trigger(24, &s, a, 16), Some(Trigger::Ws));
        assert_eq!(schedule_trigger(30, &s, a, 16), None);
        assert_eq!(schedule_trigger(48, &s, a, 16), Some(Trigger::Ws));
        assert_eq!(schedule_trigger(80, &s, a, 16), None);
        // l = 6, q = 2, n = 14, N = 49: moduli 10, 7, 14 over 49, 98, 147.
        let f = ClassTag::FacilityLocation { l: 6, q: 2 };
        assert_eq!(schedule_trigger(40, &s, f, 14), Some(Trigger::Ws));
        assert_eq!(schedule_trigger(56, &s, f, 14), Some(Trigger::Ws));
        assert_eq!(schedule_trigger(60, &s, f, 14), None);
        assert_eq!(schedule_trigger(140, &s, f, 14), Some(Trigger::Ws));
        assert_eq!(schedule_trigger(154, &s, f, 14), None);
        let m2 = strat(Scalarization::WsPlusAwt, 3);
        assert_eq!(schedule_trigger(150, &m2, f, 14), Some(Trigger::Awt));
        assert_eq!(schedule_trigger(100, &m2, f, 14), None);
    }
}
