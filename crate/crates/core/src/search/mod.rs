//! Bi-objective branch and bound with gap-driven node selection and
//! scheduled IP scalarizations.

mod schedule;

use std::cmp::Ordering;
use std::collections::{BTreeSet, BinaryHeap};
use std::sync::Arc;
use std::time::Instant;

use serde::Serialize;

pub use schedule::{schedule_trigger, Trigger};

use crate::bounds::{
    clip_awt_levelset, clip_halfspace, fathom_by_dominance, gap_report, GapKind, IncumbentList,
    InsertOutcome, Lub,
};
use crate::model::{Image, Instance, Solution};
use crate::numeric::{Rational, Scalar};
use crate::relax::{
    dichotomic_frontier, integer_extreme_points, BoundPolyline, ExtremeSupport, Fixings,
};
use crate::scalarize::{
    derive_lambda, solve_awt, solve_weighted_sum, AwtParams, ScalarCache, ScalarOutcome,
    WeightVector,
};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NodeOrder {
    DepthFirst,
    MaxLhg,
    MaxThg,
}

impl NodeOrder {
    fn gap_kind(self) -> Option<GapKind> {
        match self {
            NodeOrder::DepthFirst => None,
            NodeOrder::MaxLhg => Some(GapKind::Local),
            NodeOrder::MaxThg => Some(GapKind::Total),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Scalarization {
    None,
    WsOnly,
    WsPlusAwt,
}

/// Whether AWT level sets are applied as global cuts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AwtCutMode {
    Integrate,
    Skip,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Strategy {
    pub node_order: NodeOrder,
    pub scalarization: Scalarization,
    /// Schedule selector, 1 to 3.
    pub alpha: u8,
    pub awt_cut: AwtCutMode,
}

impl Strategy {
    /// Plain depth-first branch and bound without scalarizations.
    pub fn baseline() -> Self {
        Strategy {
            node_order: NodeOrder::DepthFirst,
            scalarization: Scalarization::None,
            alpha: 1,
            awt_cut: AwtCutMode::Skip,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub max_seconds: Option<f64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Arithmetic {
    #[default]
    Exact,
    Float,
}

#[derive(Clone, Debug, Default)]
pub struct SolveOptions {
    pub budget: Budget,
    pub record_events: bool,
    /// Span AWT boxes only between points confirmed by weighted sums
    /// instead of all confirmed points.
    pub awt_boxes_from_ws_only: bool,
    /// Shifts the first frontier point after solving. Only for negative
    /// tests of verification tooling.
    #[doc(hidden)]
    pub corrupt_frontier: bool,
}

#[derive(Clone, Debug)]
pub struct Node<S> {
    pub id: u64,
    pub parent: Option<u64>,
    pub depth: usize,
    pub fixings: Fixings,
    /// Gap score inherited from the parent.
    pub score: f64,
    /// Clipped lower bound of the parent, used for WS weights.
    pub parent_bound: Option<Arc<BoundPolyline<S>>>,
}

struct Scored<S>(Node<S>);

impl<S> PartialEq for Scored<S> {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl<S> Eq for Scored<S> {}
impl<S> PartialOrd for Scored<S> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl<S> Ord for Scored<S> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .score
            .total_cmp(&other.0.score)
            .then_with(|| other.0.id.cmp(&self.0.id))
    }
}

/// Open nodes: a stack for depth first, a max-heap on the score otherwise.
pub struct OpenSet<S> {
    stack: Vec<Node<S>>,
    heap: BinaryHeap<Scored<S>>,
    order: NodeOrder,
}

impl<S> OpenSet<S> {
    pub fn new(order: NodeOrder) -> Self {
        OpenSet {
            stack: Vec::new(),
            heap: BinaryHeap::new(),
            order,
        }
    }

    pub fn push(&mut self, node: Node<S>) {
        match self.order {
            NodeOrder::DepthFirst => self.stack.push(node),
            _ => self.heap.push(Scored(node)),
        }
    }

    pub fn len(&self) -> usize {
        self.stack.len() + self.heap.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Next node: the most recent for depth first, otherwise the largest score
/// with ties to the smaller id.
pub fn select_node<S>(open: &mut OpenSet<S>) -> Option<Node<S>> {
    match open.order {
        NodeOrder::DepthFirst => open.stack.pop(),
        _ => open.heap.pop().map(|s| s.0),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FathomReason {
    Infeasibility,
    Optimality,
    Dominance,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NodeOutcome {
    Fathomed(FathomReason),
    Branch(usize),
}

/// A global cut derived from a solved scalarization.
#[derive(Clone, Debug, PartialEq)]
pub enum Cut<S> {
    Ws { lambda: WeightVector, value: i64 },
    Awt { params: AwtParams<S>, value: S },
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct RunStats {
    pub nodes: u64,
    pub ips: u64,
    pub ws_ips: u64,
    pub awt_ips: u64,
    pub triggers_skipped: u64,
    pub fathomed_infeasibility: u64,
    pub fathomed_optimality: u64,
    pub fathomed_dominance: u64,
    pub branched: u64,
    pub max_depth: usize,
    pub time_s: f64,
    pub complete: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "event", rename_all = "snake_case")]
pub enum Event {
    Node {
        iteration: u64,
        id: u64,
        parent: Option<u64>,
        depth: usize,
        outcome: NodeOutcome,
        score: f64,
        vertices: usize,
        cuts_applied: usize,
        incumbents: usize,
    },
    Trigger {
        iteration: u64,
        kind: Trigger,
        applied: bool,
        reason: Option<&'static str>,
        lambda: Option<WeightVector>,
        corners: Option<(Image, Image)>,
        image: Option<Image>,
    },
}

/// A recorded global cut, identified by the scalarization and its optimal
/// image. The level is the scalarized value of `image`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CutRecord {
    Ws {
        lambda: WeightVector,
        image: Image,
    },
    Awt {
        corners: (Image, Image),
        image: Image,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SolveStatus {
    Complete,
    /// A budget ran out; the frontier is an approximation.
    Incomplete,
    /// The search finished without a feasible point.
    Infeasible,
}

#[derive(Clone, Debug)]
pub struct SolveOutput {
    pub status: SolveStatus,
    /// Nondominated solutions sorted by `z1`, images in minimization sense.
    pub frontier: Vec<Solution>,
    pub stats: RunStats,
    pub events: Vec<Event>,
    /// Global cuts in the order they were recorded.
    pub cuts: Vec<CutRecord>,
}

impl SolveOutput {
    pub fn images(&self) -> Vec<Image> {
        self.frontier.iter().map(|s| s.image).collect()
    }
}

struct Search<'a, S> {
    inst: &'a Instance,
    strategy: Strategy,
    u: IncumbentList,
    lubs: Vec<Lub>,
    cache: ScalarCache<S>,
    cuts: Vec<Cut<S>>,
    cut_log: Vec<CutRecord>,
    root_bound: Option<Arc<BoundPolyline<S>>>,
    ws_confirmed: BTreeSet<Image>,
    awt_boxes_from_ws_only: bool,
    stats: RunStats,
    events: Option<Vec<Event>>,
}

struct Explored<S> {
    outcome: NodeOutcome,
    score: f64,
    bound: Option<Arc<BoundPolyline<S>>>,
}

/// Variable fractional in the most extreme supported solutions, ties to the
/// smallest index. `None` if every count is zero.
pub fn most_fractional(counts: &[usize]) -> Option<usize> {
    let mut best: Option<(usize, usize)> = None;
    for (i, &c) in counts.iter().enumerate() {
        if c > 0 && best.is_none_or(|(_, b)| c > b) {
            best = Some((i, c));
        }
    }
    best.map(|(i, _)| i)
}

/// Children `x_var = 0` and `x_var = 1` of `node`, with ids `next` and
/// `next + 1`.
pub fn branch<S>(
    node: &Node<S>,
    var: usize,
    score: f64,
    bound: Option<Arc<BoundPolyline<S>>>,
    next: u64,
) -> Result<(Node<S>, Node<S>)> {
    if var >= node.fixings.n() || node.fixings.is_fixed(var) {
        return Err(Error::Internal(format!("cannot branch on variable {var}")));
    }
    let child = |value: bool, id: u64| Node {
        id,
        parent: Some(node.id),
        depth: node.depth + 1,
        fixings: node.fixings.with(var, value),
        score,
        parent_bound: bound.clone(),
    };
    Ok((child(false, next), child(true, next + 1)))
}

impl<'a, S: Scalar> Search<'a, S> {
    fn new(inst: &'a Instance, strategy: Strategy, opts: &SolveOptions) -> Self {
        Search {
            inst,
            strategy,
            u: IncumbentList::new(),
            lubs: IncumbentList::new().lubs(),
            cache: ScalarCache::new(),
            cuts: Vec::new(),
            cut_log: Vec::new(),
            root_bound: None,
            ws_confirmed: BTreeSet::new(),
            awt_boxes_from_ws_only: opts.awt_boxes_from_ws_only,
            stats: RunStats::default(),
            events: opts.record_events.then(Vec::new),
        }
    }

    fn insert(&mut self, s: Solution) -> InsertOutcome {
        let out = self.u.insert(s);
        if out.inserted() {
            self.lubs = self.u.lubs();
        }
        out
    }

    fn apply_cuts(&self, l: BoundPolyline<S>) -> BoundPolyline<S> {
        let mut l = l;
        for cut in &self.cuts {
            l = match cut {
                Cut::Ws { lambda, value } => clip_halfspace(
                    &l,
                    (S::from_i64(lambda.l1), S::from_i64(lambda.l2)),
                    S::from_i64(*value),
                ),
                Cut::Awt { params, value } => clip_awt_levelset(&l, params, value.clone()),
            };
        }
        l
    }

    fn explore(&mut self, node: &Node<S>) -> Result<Explored<S>> {
        let fathom = |r| Explored {
            outcome: NodeOutcome::Fathomed(r),
            score: 0.0,
            bound: None,
        };
        let Some((poly, sup)) = dichotomic_frontier::<S>(self.inst, &node.fixings)? else {
            return Ok(fathom(FathomReason::Infeasibility));
        };
        let ints = integer_extreme_points(self.inst, &sup);
        let single_integral = poly.len() == 1
            && ints.iter().any(|s| {
                let v = poly.first();
                v.z1 == S::from_i64(s.image.z1) && v.z2 == S::from_i64(s.image.z2)
            });
        for s in ints {
            self.insert(s);
        }
        if single_integral {
            return Ok(fathom(FathomReason::Optimality));
        }
        let clipped = self.apply_cuts(poly);
        if node.parent.is_none() {
            self.root_bound = Some(Arc::new(clipped.clone()));
        }
        if fathom_by_dominance(&clipped, &self.lubs) {
            return Ok(fathom(FathomReason::Dominance));
        }
        let score = match self.strategy.node_order.gap_kind() {
            None => 0.0,
            Some(kind) => self.score(&clipped, kind),
        };
        let var = branching_variable(&sup, &node.fixings);
        let Some(var) = var else {
            return Ok(fathom(FathomReason::Optimality));
        };
        Ok(Explored {
            outcome: NodeOutcome::Branch(var),
            score,
            bound: Some(Arc::new(clipped)),
        })
    }

    fn score(&self, l: &BoundPolyline<S>, kind: GapKind) -> f64 {
        let r = gap_report(l, &self.u.images());
        if r.proxy && self.u.is_empty() {
            if let Some(root) = &self.root_bound {
                return crate::bounds::box_proxy(root).to_f64();
            }
        }
        r.score(kind).to_f64()
    }

    fn trigger(&mut self, kind: Trigger, iteration: u64, active: &Node<S>) -> Result<()> {
        let (applied, reason, lambda, corners, image) = match kind {
            Trigger::Ws => self.trigger_ws(active)?,
            Trigger::Awt => self.trigger_awt()?,
        };
        if !applied {
            self.stats.triggers_skipped += 1;
        }
        if let Some(ev) = &mut self.events {
            ev.push(Event::Trigger {
                iteration,
                kind,
                applied,
                reason,
                lambda,
                corners,
                image,
            });
        }
        Ok(())
    }

    #[allow(clippy::type_complexity)]
    fn trigger_ws(
        &mut self,
        active: &Node<S>,
    ) -> Result<(
        bool,
        Option<&'static str>,
        Option<WeightVector>,
        Option<(Image, Image)>,
        Option<Image>,
    )> {
        let Some(bound) = active.parent_bound.clone() else {
            return Ok((false, Some("no parent bound"), None, None, None));
        };
        let r = gap_report(&bound, &self.u.images());
        let Some((a, b)) = r.argmax else {
            return Ok((
                false,
                Some("fewer than two incumbents above the bound"),
                None,
                None,
                None,
            ));
        };
        let Some(lambda) = derive_lambda(&a, &b) else {
            return Ok((false, Some("degenerate weights"), None, Some((a, b)), None));
        };
        if self.cache.has_ws(&lambda) {
            return Ok((false, Some("cached"), Some(lambda), Some((a, b)), None));
        }
        let hint = self
            .u
            .entries()
            .iter()
            .min_by_key(|e| lambda.apply(&e.image()))
            .map(|e| e.solution.clone());
        let opt = match solve_weighted_sum(self.inst, lambda, &mut self.cache, hint.as_ref()) {
            Ok(ScalarOutcome::NewOptimum(opt)) => opt,
            Ok(_) => return Ok((false, Some("cached"), Some(lambda), Some((a, b)), None)),
            Err(Error::Infeasible) => {
                return Ok((false, Some("infeasible"), Some(lambda), None, None))
            }
            Err(e) => return Err(e),
        };
        self.stats.ips += 1;
        self.stats.ws_ips += 1;
        let img = opt.solution.image;
        self.insert(opt.solution);
        self.u.confirm(&img);
        self.ws_confirmed.insert(img);
        self.cuts.push(Cut::Ws {
            lambda,
            value: opt.value,
        });
        self.cut_log.push(CutRecord::Ws { lambda, image: img });
        Ok((true, None, Some(lambda), Some((a, b)), Some(img)))
    }

    #[allow(clippy::type_complexity)]
    fn trigger_awt(
        &mut self,
    ) -> Result<(
        bool,
        Option<&'static str>,
        Option<WeightVector>,
        Option<(Image, Image)>,
        Option<Image>,
    )> {
        let mut conf = self.u.confirmed_images();
        if self.awt_boxes_from_ws_only {
            conf.retain(|z| self.ws_confirmed.contains(z));
        }
        let mut best: Option<((Image, Image), i128)> = None;
        for w in conf.windows(2) {
            let pair = (w[0], w[1]);
            if self.cache.has_awt(&pair) {
                continue;
            }
            let area = (w[1].z1 - w[0].z1) as i128 * (w[0].z2 - w[1].z2) as i128;
            if best.is_none_or(|(_, b)| area > b) {
                best = Some((pair, area));
            }
        }
        let Some(((a, b), _)) = best else {
            return Ok((false, Some("no uncached box"), None, None, None));
        };
        let params = AwtParams::<S>::new(a, b)?;
        let hint_img = if params.value(&a) <= params.value(&b) {
            a
        } else {
            b
        };
        let hint = self.u.find(&hint_img).map(|e| e.solution.clone());
        let opt = match solve_awt(self.inst, &params, &mut self.cache, hint.as_ref())? {
            ScalarOutcome::NewOptimum(opt) => opt,
            _ => return Ok((false, Some("cached"), None, Some((a, b)), None)),
        };
        self.stats.ips += 1;
        self.stats.awt_ips += 1;
        let img = opt.solution.image;
        self.insert(opt.solution);
        self.u.confirm(&img);
        if self.strategy.awt_cut == AwtCutMode::Integrate {
            self.cuts.push(Cut::Awt {
                params,
                value: opt.value,
            });
            self.cut_log.push(CutRecord::Awt {
                corners: (a, b),
                image: img,
            });
        }
        Ok((true, None, None, Some((a, b)), Some(img)))
    }
}

fn branching_variable<S: Scalar>(sup: &ExtremeSupport<S>, fixings: &Fixings) -> Option<usize> {
    most_fractional(&sup.fractional_count).or_else(|| fixings.first_free())
}

/// Runs the search on `inst` with arithmetic `S`.
pub fn solve<S: Scalar>(
    inst: &Instance,
    strategy: &Strategy,
    opts: &SolveOptions,
) -> Result<SolveOutput> {
    if !(1..=3).contains(&strategy.alpha) {
        return Err(Error::Parameter(format!(
            "alpha must be 1, 2 or 3, got {}",
            strategy.alpha
        )));
    }
    let start = Instant::now();
    let mut st = Search::<S>::new(inst, *strategy, opts);
    let mut open = OpenSet::new(strategy.node_order);
    open.push(Node {
        id: 0,
        parent: None,
        depth: 0,
        fixings: Fixings::free(inst.n()),
        score: 0.0,
        parent_bound: None,
    });
    let mut next_id = 1u64;
    let mut complete = true;
    let mut iteration = 0u64;

    while let Some(node) = {
        let out_of_budget = opts.budget.max_nodes.is_some_and(|m| st.stats.nodes >= m)
            || opts
                .budget
                .max_seconds
                .is_some_and(|s| start.elapsed().as_secs_f64() > s);
        if out_of_budget && !open.is_empty() {
            complete = false;
            None
        } else {
            select_node(&mut open)
        }
    } {
        iteration += 1;
        if let Some(kind) = schedule_trigger(iteration, strategy, inst.class(), inst.n()) {
            st.trigger(kind, iteration, &node)?;
        }
        st.stats.nodes += 1;
        st.stats.max_depth = st.stats.max_depth.max(node.depth);
        let ex = st.explore(&node)?;
        match ex.outcome {
            NodeOutcome::Fathomed(FathomReason::Infeasibility) => {
                st.stats.fathomed_infeasibility += 1
            }
            NodeOutcome::Fathomed(FathomReason::Optimality) => st.stats.fathomed_optimality += 1,
            NodeOutcome::Fathomed(FathomReason::Dominance) => st.stats.fathomed_dominance += 1,
            NodeOutcome::Branch(_) => st.stats.branched += 1,
        }
        if let Some(ev) = &mut st.events {
            ev.push(Event::Node {
                iteration,
                id: node.id,
                parent: node.parent,
                depth: node.depth,
                outcome: ex.outcome,
                score: ex.score,
                vertices: ex.bound.as_ref().map_or(0, |b| b.len()),
                cuts_applied: st.cuts.len(),
                incumbents: st.u.len(),
            });
        }
        if let NodeOutcome::Branch(var) = ex.outcome {
            let (c0, c1) = branch(&node, var, ex.score, ex.bound, next_id)?;
            next_id += 2;
            match strategy.node_order {
                NodeOrder::DepthFirst => {
                    open.push(c1);
                    open.push(c0);
                }
                _ => {
                    open.push(c0);
                    open.push(c1);
                }
            }
        }
    }

    st.stats.complete = complete;
    st.stats.time_s = start.elapsed().as_secs_f64();
    let mut u = st.u;
    if opts.corrupt_frontier && !u.is_empty() {
        let z = u.entries()[0].image();
        u.corrupt_for_testing(0, Image::new(z.z1 + 1, z.z2));
    }
    let frontier = u.into_solutions();
    let status = match (complete, frontier.is_empty()) {
        (false, _) => SolveStatus::Incomplete,
        (true, true) => SolveStatus::Infeasible,
        (true, false) => SolveStatus::Complete,
    };
    log::info!(
        "search finished: {} nodes, {} IPs, {} points, {:.3}s",
        st.stats.nodes,
        st.stats.ips,
        frontier.len(),
        st.stats.time_s
    );
    Ok(SolveOutput {
        status,
        frontier,
        stats: st.stats,
        events: st.events.unwrap_or_default(),
        cuts: st.cut_log,
    })
}

/// [`solve`] with the arithmetic chosen at run time.
pub fn solve_with(
    inst: &Instance,
    strategy: &Strategy,
    arithmetic: Arithmetic,
    opts: &SolveOptions,
) -> Result<SolveOutput> {
    match arithmetic {
        Arithmetic::Exact => solve::<Rational>(inst, strategy, opts),
        Arithmetic::Float => solve::<f64>(inst, strategy, opts),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{gen_knapsack, Constraint, Point2, Sense};

    fn all_strategies() -> Vec<Strategy> {
        let mut v = vec![Strategy::baseline()];
        for node_order in [NodeOrder::DepthFirst, NodeOrder::MaxLhg, NodeOrder::MaxThg] {
            for scalarization in [
                Scalarization::None,
                Scalarization::WsOnly,
                Scalarization::WsPlusAwt,
            ] {
                for alpha in 1..=3 {
                    for awt_cut in [AwtCutMode::Integrate, AwtCutMode::Skip] {
                        v.push(Strategy {
                            node_order,
                            scalarization,
                            alpha,
                            awt_cut,
                        });
                    }
                }
            }
        }
        v
    }

    fn brute(inst: &Instance) -> Vec<Image> {
        let n = inst.n();
        let mut u = IncumbentList::new();
        for mask in 0u32..(1 << n) {
            let x: Vec<u8> = (0..n).map(|j| ((mask >> j) & 1) as u8).collect();
            if inst.is_feasible(&x).unwrap() {
                u.insert(Solution::new(inst, x).unwrap());
            }
        }
        u.images()
    }

    #[test]
    fn most_fractional_ties_to_smallest_index() {
        assert_eq!(most_fractional(&[0, 0, 5]), Some(2));
        assert_eq!(most_fractional(&[0, 3, 3, 1]), Some(1));
        assert_eq!(most_fractional(&[0, 0]), None);
    }

    #[test]
    fn branch_rejects_fixed_variable() {
        let node: Node<f64> = Node {
            id: 0,
            parent: None,
            depth: 0,
            fixings: Fixings::free(3).with(1, true),
            score: 0.0,
            parent_bound: None,
        };
        assert!(branch(&node, 1, 0.0, None, 1).is_err());
        let (a, b) = branch(&node, 2, 0.0, None, 1).unwrap();
        assert_eq!((a.id, b.id), (1, 2));
        assert_eq!(a.fixings.get(2), Some(false));
        assert_eq!(b.fixings.get(2), Some(true));
    }

    #[test]
    fn heap_order_prefers_score_then_smaller_id() {
        let mk = |id, score| Node::<f64> {
            id,
            parent: None,
            depth: 0,
            fixings: Fixings::free(1),
            score,
            parent_bound: None,
        };
        let mut open = OpenSet::new(NodeOrder::MaxLhg);
        open.push(mk(3, 1.0));
        open.push(mk(2, 1.0));
        open.push(mk(1, 0.5));
        open.push(mk(4, 2.0));
        let ids: Vec<u64> = std::iter::from_fn(|| select_node(&mut open))
            .map(|n| n.id)
            .collect();
        assert_eq!(ids, vec![4, 2, 3, 1]);
    }

    #[test]
    fn every_strategy_matches_enumeration_on_small_knapsacks() {
        for seed in 0..3 {
            let inst = gen_knapsack(8, 1, seed).unwrap();
            let want = brute(&inst);
            for s in all_strategies() {
                let out = solve::<Rational>(&inst, &s, &SolveOptions::default()).unwrap();
                assert_eq!(out.status, SolveStatus::Complete);
                assert_eq!(out.images(), want, "seed {seed} strategy {s:?}");
                let f = solve::<f64>(&inst, &s, &SolveOptions::default()).unwrap();
                assert_eq!(f.images(), want, "float seed {seed} strategy {s:?}");
            }
        }
    }

    #[test]
    fn infeasible_problem_is_reported() {
        let inst = Instance::new(
            Sense::Min,
            [vec![1, 1], vec![1, 1]],
            vec![Constraint::le(vec![1, 1], -1)],
            crate::model::ClassTag::Generic,
            None,
        )
        .unwrap();
        let out =
            solve::<Rational>(&inst, &Strategy::baseline(), &SolveOptions::default()).unwrap();
        assert_eq!(out.status, SolveStatus::Infeasible);
        assert!(out.frontier.is_empty());
    }

    #[test]
    fn node_budget_marks_run_incomplete() {
        let inst = gen_knapsack(14, 1, 5).unwrap();
        let opts = SolveOptions {
            budget: Budget {
                max_nodes: Some(3),
                max_seconds: None,
            },
            ..Default::default()
        };
        let out = solve::<Rational>(&inst, &Strategy::baseline(), &opts).unwrap();
        assert_eq!(out.status, SolveStatus::Incomplete);
        assert_eq!(out.stats.nodes, 3);
    }

    #[test]
    fn event_log_is_deterministic() {
        let inst = gen_knapsack(10, 1, 2).unwrap();
        let s = Strategy {
            node_order: NodeOrder::MaxThg,
            scalarization: Scalarization::WsPlusAwt,
            alpha: 1,
            awt_cut: AwtCutMode::Integrate,
        };
        let opts = SolveOptions {
            record_events: true,
            ..Default::default()
        };
        let a = solve::<Rational>(&inst, &s, &opts).unwrap();
        let b = solve::<Rational>(&inst, &s, &opts).unwrap();
        assert_eq!(
            serde_json::to_string(&a.events).unwrap(),
            serde_json::to_string(&b.events).unwrap()
        );
        assert!(a.events.iter().any(|e| matches!(e, Event::Trigger { .. })));
        let _ = Point2::new(0, 0);
    }
}
