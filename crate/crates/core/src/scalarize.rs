//! Single-objective 0-1 IP scalarizations: weighted sum and augmented
//! weighted Tchebycheff, solved by a small LP-based branch and bound.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BinaryHeap};

use num::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lp::{lp_solve, LpRow, LpStatus, RowRelation};
use crate::model::{Image, Instance, Point2, Solution};
use crate::numeric::{cmp, max_of, Scalar};
use crate::relax::{objective_rows, relaxation_lp, Fixings};

/// Optimal solution of an IP with optional continuous auxiliary columns.
#[derive(Clone, Debug, PartialEq)]
pub struct IpOptimum<S> {
    pub value: S,
    pub solution: Solution,
    /// Values of the auxiliary columns.
    pub aux: Vec<S>,
    /// Branch-and-bound nodes processed.
    pub nodes: usize,
}

/// A known feasible point used as the starting incumbent.
#[derive(Clone, Debug)]
pub struct IpHint<S> {
    pub value: S,
    pub solution: Solution,
    pub aux: Vec<S>,
}

struct Open<S> {
    bound: S,
    depth: usize,
    id: usize,
    fixings: Fixings,
}

impl<S: Scalar> PartialEq for Open<S> {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl<S: Scalar> Eq for Open<S> {}
impl<S: Scalar> PartialOrd for Open<S> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl<S: Scalar> Ord for Open<S> {
    // Max-heap: smallest bound first, then deepest, then newest.
    fn cmp(&self, other: &Self) -> Ordering {
        cmp(&other.bound, &self.bound)
            .then(self.depth.cmp(&other.depth))
            .then(self.id.cmp(&other.id))
    }
}

/// Index closest to ½ among fractional entries; smallest index on ties.
fn most_fractional_index<S: Scalar>(x: &[S]) -> Option<usize> {
    let half = S::from_ratio(1, 2);
    let mut best: Option<(S, usize)> = None;
    for (j, v) in x.iter().enumerate() {
        if v.is_integral() {
            continue;
        }
        let d = (v.clone() - half.clone()).abs();
        if best
            .as_ref()
            .is_none_or(|(bd, _)| cmp(&d, bd) == Ordering::Less)
        {
            best = Some((d, j));
        }
    }
    best.map(|(_, j)| j)
}

/// Minimizes `objective · (x, aux)` over the 0/1 points of `inst` that also
/// satisfy `extra_rows`. Columns beyond `inst.n()` are continuous in
/// `[0, ∞)`. Returns `None` when no 0/1 point is feasible.
pub fn ip_solve<S: Scalar>(
    objective: &[S],
    inst: &Instance,
    extra_rows: &[LpRow<S>],
    hint: Option<IpHint<S>>,
) -> Result<Option<IpOptimum<S>>> {
    let n = inst.n();
    if objective.len() < n {
        return Err(Error::Dimension {
            expected: n,
            got: objective.len(),
        });
    }
    let aux = objective.len() - n;
    for r in extra_rows {
        if r.coeffs.len() != objective.len() {
            return Err(Error::Dimension {
                expected: objective.len(),
                got: r.coeffs.len(),
            });
        }
    }
    let integral_objective = aux == 0 && objective.iter().all(Scalar::is_integral);

    let build = |fixings: &Fixings| {
        let mut p = relaxation_lp(inst, fixings, objective.to_vec());
        for row in &mut p.rows {
            row.coeffs.resize(n + aux, S::zero());
        }
        p.lower.resize(n + aux, S::zero());
        p.upper.resize(n + aux, None);
        p.rows.extend(extra_rows.iter().cloned());
        p
    };
    let prunable = |bound: &S, inc: &Option<(S, Solution, Vec<S>)>| match inc {
        None => false,
        Some((v, _, _)) => {
            if integral_objective {
                cmp(bound, &(v.clone() - S::one())) == Ordering::Greater
            } else {
                cmp(bound, v) != Ordering::Less
            }
        }
    };

    let mut incumbent: Option<(S, Solution, Vec<S>)> = hint.map(|h| (h.value, h.solution, h.aux));
    let mut heap = BinaryHeap::new();
    let mut next_id = 0usize;
    heap.push(Open {
        bound: S::zero(),
        depth: 0,
        id: next_id,
        fixings: Fixings::free(n),
    });
    let mut nodes = 0usize;
    let mut first = true;
    while let Some(node) = heap.pop() {
        if !first && prunable(&node.bound, &incumbent) {
            continue;
        }
        first = false;
        nodes += 1;
        let r = lp_solve(&build(&node.fixings), None)?;
        if r.status == LpStatus::Infeasible || prunable(&r.value, &incumbent) {
            continue;
        }
        match most_fractional_index(&r.primal[..n]) {
            None => {
                let bits: Vec<u8> = r.primal[..n]
                    .iter()
                    .map(|v| u8::from(v.to_integer() == Some(1)))
                    .collect();
                let better = incumbent
                    .as_ref()
                    .is_none_or(|(v, _, _)| cmp(&r.value, v) == Ordering::Less);
                if better {
                    let sol = Solution::new(inst, bits)?;
                    incumbent = Some((r.value.clone(), sol, r.primal[n..].to_vec()));
                }
            }
            Some(j) => {
                for v in [true, false] {
                    next_id += 1;
                    heap.push(Open {
                        bound: r.value.clone(),
                        depth: node.depth + 1,
                        id: next_id,
                        fixings: node.fixings.with(j, v),
                    });
                }
            }
        }
    }
    Ok(incumbent.map(|(value, solution, aux)| IpOptimum {
        value,
        solution,
        aux,
        nodes,
    }))
}

/// Positive weights reduced to coprime integers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct WeightVector {
    pub l1: i64,
    pub l2: i64,
}

impl WeightVector {
    /// `None` unless both components are positive.
    pub fn new(l1: i64, l2: i64) -> Option<Self> {
        if l1 <= 0 || l2 <= 0 {
            return None;
        }
        let g = l1.gcd(&l2);
        Some(WeightVector {
            l1: l1 / g,
            l2: l2 / g,
        })
    }

    pub fn apply(&self, z: &Image) -> i64 {
        self.l1 * z.z1 + self.l2 * z.z2
    }
}

/// Normal of the segment between two incumbents, `a` left of `b`.
/// `None` for an axis-aligned (or misordered) pair.
pub fn derive_lambda(a: &Image, b: &Image) -> Option<WeightVector> {
    WeightVector::new(a.z2 - b.z2, b.z1 - a.z1)
}

/// Corner-equalizing AWT parameters for the box of two incumbents.
#[derive(Clone, Debug, PartialEq)]
pub struct AwtParams<S> {
    pub s: Image,
    pub w1: S,
    pub w2: S,
    pub tau: S,
    pub corners: (Image, Image),
}

impl<S: Scalar> AwtParams<S> {
    /// Parameters for the box spanned by `a` (left) and `b` (right).
    pub fn new(a: Image, b: Image) -> Result<Self> {
        let d1 = b.z1 - a.z1;
        let d2 = a.z2 - b.z2;
        if d1 <= 0 || d2 <= 0 {
            return Err(Error::Parameter(format!(
                "points {a:?} and {b:?} do not span a box"
            )));
        }
        let sum = d1 + d2;
        Ok(AwtParams {
            s: Point2::new(a.z1, b.z2),
            w1: S::from_ratio(d2, sum),
            w2: S::from_ratio(d1, sum),
            tau: S::from_ratio(1, 2 * sum * sum),
            corners: (a, b),
        })
    }

    /// `max(w1 σ1, w2 σ2) + τ(σ1 + σ2)` with `σ = max(z − s, 0)`.
    pub fn value(&self, z: &Image) -> S {
        let s1 = S::from_i64((z.z1 - self.s.z1).max(0));
        let s2 = S::from_i64((z.z2 - self.s.z2).max(0));
        max_of(self.w1.clone() * s1.clone(), self.w2.clone() * s2.clone())
            + self.tau.clone() * (s1 + s2)
    }
}

pub fn awt_params<S: Scalar>(a: Image, b: Image) -> Result<AwtParams<S>> {
    AwtParams::new(a, b)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WsOptimum {
    pub lambda: WeightVector,
    pub value: i64,
    pub solution: Solution,
}

#[derive(Clone, Debug, PartialEq)]
pub struct AwtOptimum<S> {
    pub params: AwtParams<S>,
    pub value: S,
    pub solution: Solution,
}

#[derive(Clone, Debug, PartialEq)]
pub enum ScalarOutcome<T> {
    NewOptimum(T),
    CacheHit(T),
    Skipped,
}

/// Solved scalarizations keyed by coprime weights or box corners.
#[derive(Clone, Debug, Default)]
pub struct ScalarCache<S> {
    ws: BTreeMap<WeightVector, WsOptimum>,
    awt: BTreeMap<(Image, Image), AwtOptimum<S>>,
}

impl<S: Scalar> ScalarCache<S> {
    pub fn new() -> Self {
        ScalarCache {
            ws: BTreeMap::new(),
            awt: BTreeMap::new(),
        }
    }

    pub fn has_ws(&self, l: &WeightVector) -> bool {
        self.ws.contains_key(l)
    }

    pub fn has_awt(&self, corners: &(Image, Image)) -> bool {
        self.awt.contains_key(corners)
    }

    pub fn ws_len(&self) -> usize {
        self.ws.len()
    }

    pub fn awt_len(&self) -> usize {
        self.awt.len()
    }
}

/// Solves `min λ·z(x)` over `X`. `hint` is any feasible solution.
pub fn solve_weighted_sum<S: Scalar>(
    inst: &Instance,
    lambda: WeightVector,
    cache: &mut ScalarCache<S>,
    hint: Option<&Solution>,
) -> Result<ScalarOutcome<WsOptimum>> {
    let Some(lambda) = WeightVector::new(lambda.l1, lambda.l2) else {
        return Ok(ScalarOutcome::Skipped);
    };
    if let Some(hit) = cache.ws.get(&lambda) {
        return Ok(ScalarOutcome::CacheHit(hit.clone()));
    }
    let c = objective_rows::<S>(inst);
    let (l1, l2) = (S::from_i64(lambda.l1), S::from_i64(lambda.l2));
    let obj: Vec<S> = c[0]
        .iter()
        .zip(&c[1])
        .map(|(a, b)| l1.clone() * a.clone() + l2.clone() * b.clone())
        .collect();
    let hint = hint.map(|s| IpHint {
        value: S::from_i64(lambda.apply(&s.image)),
        solution: s.clone(),
        aux: vec![],
    });
    let opt = ip_solve(&obj, inst, &[], hint)?.ok_or(Error::Infeasible)?;
    let found = WsOptimum {
        lambda,
        value: lambda.apply(&opt.solution.image),
        solution: opt.solution,
    };
    cache.ws.insert(lambda, found.clone());
    Ok(ScalarOutcome::NewOptimum(found))
}

/// Solves the AWT scalarization for the box of `p.corners`:
/// `min t + τ(z1 + z2)` s.t. `t ≥ wᵢ(zᵢ − sᵢ)`, `z ≥ s`, `x ∈ X`.
pub fn solve_awt<S: Scalar>(
    inst: &Instance,
    p: &AwtParams<S>,
    cache: &mut ScalarCache<S>,
    hint: Option<&Solution>,
) -> Result<ScalarOutcome<AwtOptimum<S>>> {
    if let Some(hit) = cache.awt.get(&p.corners) {
        return Ok(ScalarOutcome::CacheHit(hit.clone()));
    }
    let n = inst.n();
    let c = objective_rows::<S>(inst);
    let tau = p.tau.clone();
    let mut obj: Vec<S> = c[0]
        .iter()
        .zip(&c[1])
        .map(|(a, b)| tau.clone() * (a.clone() + b.clone()))
        .collect();
    obj.push(S::one());

    let with_t = |coeffs: &[S], t: S| {
        let mut v = coeffs.to_vec();
        v.push(t);
        v
    };
    let s = [S::from_i64(p.s.z1), S::from_i64(p.s.z2)];
    let w = [p.w1.clone(), p.w2.clone()];
    let mut rows = Vec::with_capacity(4);
    for k in 0..2 {
        let scaled: Vec<S> = c[k].iter().map(|a| w[k].clone() * a.clone()).collect();
        rows.push(LpRow {
            coeffs: with_t(&scaled, -S::one()),
            relation: RowRelation::Le,
            rhs: w[k].clone() * s[k].clone(),
        });
        rows.push(LpRow {
            coeffs: with_t(&c[k], S::zero()),
            relation: RowRelation::Ge,
            rhs: s[k].clone(),
        });
    }

    let hint = hint
        .filter(|h| h.image.z1 >= p.s.z1 && h.image.z2 >= p.s.z2)
        .map(|h| {
            let z = h.image;
            let t = max_of(
                p.w1.clone() * S::from_i64(z.z1 - p.s.z1),
                p.w2.clone() * S::from_i64(z.z2 - p.s.z2),
            );
            let value = t.clone() + tau.clone() * S::from_i64(z.z1 + z.z2);
            IpHint {
                value,
                solution: h.clone(),
                aux: vec![t],
            }
        });
    debug_assert_eq!(obj.len(), n + 1);
    let opt = ip_solve(&obj, inst, &rows, hint)?.ok_or(Error::Infeasible)?;
    let found = AwtOptimum {
        params: p.clone(),
        value: p.value(&opt.solution.image),
        solution: opt.solution,
    };
    cache.awt.insert(p.corners, found.clone());
    Ok(ScalarOutcome::NewOptimum(found))
}
