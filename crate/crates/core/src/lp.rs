//! Dense bounded-variable primal simplex.
//!
//! Every variable carries a finite lower bound and an optional upper bound.
//! Nonbasic variables sit at one of their bounds. Pricing is largest
//! coefficient until a run of degenerate pivots trips, after which Bland's
//! rule takes over for the rest of the solve.
//!
//! [`Simplex`] keeps its tableau between calls so the same feasible region
//! can be optimized for several objectives without repeating phase 1.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::numeric::Scalar;

/// Degenerate pivots tolerated before switching to Bland's rule.
const DEGENERACY_LIMIT: usize = 25;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RowRelation {
    Le,
    Eq,
    Ge,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LpRow<S> {
    pub coeffs: Vec<S>,
    pub relation: RowRelation,
    pub rhs: S,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LpProblem<S> {
    pub objective: Vec<S>,
    pub rows: Vec<LpRow<S>>,
    pub lower: Vec<S>,
    pub upper: Vec<Option<S>>,
}

impl<S: Scalar> LpProblem<S> {
    /// Problem over the unit box `[0, 1]^n` with no rows.
    pub fn unit_box(objective: Vec<S>) -> Self {
        let n = objective.len();
        LpProblem {
            objective,
            rows: Vec::new(),
            lower: vec![S::zero(); n],
            upper: vec![Some(S::one()); n],
        }
    }

    pub fn n(&self) -> usize {
        self.objective.len()
    }

    fn check(&self) -> Result<()> {
        let n = self.n();
        for len in [self.lower.len(), self.upper.len()]
            .into_iter()
            .chain(self.rows.iter().map(|r| r.coeffs.len()))
        {
            if len != n {
                return Err(Error::Dimension {
                    expected: n,
                    got: len,
                });
            }
        }
        for (l, u) in self.lower.iter().zip(&self.upper) {
            if let Some(u) = u {
                if crate::numeric::cmp(l, u) == Ordering::Greater {
                    return Err(Error::Parameter(format!("lower bound {l} above upper {u}")));
                }
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
}

/// Basis descriptor: basic columns and the nonbasic columns sitting at
/// their upper bound. Column indices count structural columns first, then
/// one slack per inequality row in row order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Basis {
    pub basic: Vec<usize>,
    pub at_upper: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LpResult<S> {
    pub status: LpStatus,
    pub value: S,
    pub primal: Vec<S>,
    pub basis: Option<Basis>,
}

impl<S: Scalar> LpResult<S> {
    fn infeasible(n: usize) -> Self {
        LpResult {
            status: LpStatus::Infeasible,
            value: S::zero(),
            primal: vec![S::zero(); n],
            basis: None,
        }
    }
}

/// Solves `min c·x` over the problem's rows and bounds.
///
/// With a warm basis the tableau is rebuilt directly on it and phase 1 is
/// skipped when that basis is primal feasible; otherwise the solve falls
/// back to a cold start.
pub fn lp_solve<S: Scalar>(p: &LpProblem<S>, warm: Option<&Basis>) -> Result<LpResult<S>> {
    let simplex = match warm {
        Some(b) => match Simplex::with_basis(p, b)? {
            Some(s) => Some(s),
            None => Simplex::new(p)?,
        },
        None => Simplex::new(p)?,
    };
    let Some(mut simplex) = simplex else {
        return Ok(LpResult::infeasible(p.n()));
    };
    simplex.minimize(&p.objective)?;
    Ok(simplex.result(&p.objective))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Col {
    Basic(usize),
    Lower,
    Upper,
}

#[derive(Clone, Debug)]
pub struct Simplex<S> {
    n_struct: usize,
    /// Structural plus slack columns.
    n_real: usize,
    /// Columns currently in the tableau (artificials included during phase 1).
    n_cols: usize,
    /// `m × (n_cols + 1)`; the last entry of each row is `B⁻¹b`.
    tab: Vec<Vec<S>>,
    beta: Vec<S>,
    basis: Vec<usize>,
    state: Vec<Col>,
    lower: Vec<S>,
    upper: Vec<Option<S>>,
    pivots: usize,
}

impl<S: Scalar> Simplex<S> {
    /// Builds the tableau and runs phase 1. `Ok(None)` means infeasible.
    pub fn new(p: &LpProblem<S>) -> Result<Option<Self>> {
        let mut s = Self::initial(p)?;
        if !s.phase_one()? {
            return Ok(None);
        }
        Ok(Some(s))
    }

    /// Builds the tableau on a given basis; `Ok(None)` if that basis is not
    /// primal feasible for `p`.
    pub fn with_basis(p: &LpProblem<S>, warm: &Basis) -> Result<Option<Self>> {
        let mut s = Self::initial(p)?;
        let mut wanted = vec![false; s.n_cols];
        for &j in &warm.basic {
            if j >= s.n_real {
                return Ok(None);
            }
            wanted[j] = true;
        }
        for &j in &warm.basic {
            if matches!(s.state[j], Col::Basic(_)) {
                continue;
            }
            let row = (0..s.tab.len())
                .filter(|&i| !wanted[s.basis[i]] && !s.tab[i][j].is_zero())
                .max_by_key(|&i| s.basis[i] >= s.n_real);
            match row {
                Some(i) => s.pivot(i, j),
                None => return Ok(None),
            }
        }
        for &j in &warm.at_upper {
            if j < s.n_real && !matches!(s.state[j], Col::Basic(_)) && s.upper[j].is_some() {
                s.state[j] = Col::Upper;
            }
        }
        s.recompute_beta();
        for (i, &b) in s.basis.iter().enumerate() {
            let v = &s.beta[i];
            let below = crate::numeric::cmp(v, &s.lower[b]) == Ordering::Less;
            let above = s.upper[b]
                .as_ref()
                .is_some_and(|u| crate::numeric::cmp(v, u) == Ordering::Greater);
            if below || above || (b >= s.n_real && !v.is_zero()) {
                return Ok(None);
            }
        }
        s.drop_artificials();
        Ok(Some(s))
    }

    fn initial(p: &LpProblem<S>) -> Result<Self> {
        p.check()?;
        let n = p.n();
        let m = p.rows.len();
        let n_slack = p
            .rows
            .iter()
            .filter(|r| r.relation != RowRelation::Eq)
            .count();
        let n_real = n + n_slack;

        let mut lower = p.lower.clone();
        let mut upper = p.upper.clone();
        lower.extend((0..n_slack).map(|_| S::zero()));
        upper.extend((0..n_slack).map(|_| None));

        // Decide each row's initial basic column before sizing the tableau.
        struct Plan<S> {
            sigma: bool,
            slack: Option<usize>,
            slack_sign_pos: bool,
            artificial: bool,
            residual: S,
        }
        let mut plans = Vec::with_capacity(m);
        let mut next_slack = n;
        for row in &p.rows {
            let mut residual = row.rhs.clone();
            for (a, l) in row.coeffs.iter().zip(&p.lower) {
                if !a.is_zero() && !l.is_zero() {
                    residual = residual - a.clone() * l.clone();
                }
            }
            let (slack, slack_sign_pos) = match row.relation {
                RowRelation::Eq => (None, true),
                RowRelation::Le => {
                    next_slack += 1;
                    (Some(next_slack - 1), true)
                }
                RowRelation::Ge => {
                    next_slack += 1;
                    (Some(next_slack - 1), false)
                }
            };
            let sign = residual.sign();
            let (sigma, artificial) = match (row.relation, sign) {
                (RowRelation::Le, Ordering::Greater | Ordering::Equal) => (true, false),
                (RowRelation::Ge, Ordering::Less | Ordering::Equal) => (false, false),
                (_, Ordering::Less) => (false, true),
                _ => (true, true),
            };
            plans.push(Plan {
                sigma,
                slack,
                slack_sign_pos,
                artificial,
                residual,
            });
        }
        let n_art = plans.iter().filter(|pl| pl.artificial).count();
        let n_cols = n_real + n_art;
        lower.extend((0..n_art).map(|_| S::zero()));
        upper.extend((0..n_art).map(|_| None));

        let mut tab = Vec::with_capacity(m);
        let mut beta = Vec::with_capacity(m);
        let mut basis = Vec::with_capacity(m);
        let mut state = vec![Col::Lower; n_cols];
        let mut next_art = n_real;
        for (i, (row, plan)) in p.rows.iter().zip(&plans).enumerate() {
            let flip = |v: S| if plan.sigma { v } else { -v };
            let mut t = vec![S::zero(); n_cols + 1];
            for (j, a) in row.coeffs.iter().enumerate() {
                if !a.is_zero() {
                    t[j] = flip(a.clone());
                }
            }
            if let Some(sj) = plan.slack {
                t[sj] = flip(if plan.slack_sign_pos {
                    S::one()
                } else {
                    -S::one()
                });
            }
            let b = if plan.artificial {
                t[next_art] = S::one();
                next_art += 1;
                next_art - 1
            } else {
                plan.slack
                    .expect("non-artificial rows start on their slack")
            };
            t[n_cols] = flip(row.rhs.clone());
            tab.push(t);
            beta.push(flip(plan.residual.clone()));
            basis.push(b);
            state[b] = Col::Basic(i);
        }

        Ok(Simplex {
            n_struct: n,
            n_real,
            n_cols,
            tab,
            beta,
            basis,
            state,
            lower,
            upper,
            pivots: 0,
        })
    }

    /// Minimizes the sum of artificials, then removes them. Returns `false`
    /// when the problem is infeasible.
    fn phase_one(&mut self) -> Result<bool> {
        if self.n_cols == self.n_real {
            return Ok(true);
        }
        let cost: Vec<S> = (0..self.n_cols)
            .map(|j| {
                if j >= self.n_real {
                    S::one()
                } else {
                    S::zero()
                }
            })
            .collect();
        self.optimize(&cost, None)?;
        let infeasibility = self
            .basis
            .iter()
            .zip(&self.beta)
            .filter(|(&b, _)| b >= self.n_real)
            .fold(S::zero(), |acc, (_, v)| acc + v.clone());
        if infeasibility.is_positive() {
            return Ok(false);
        }
        self.drop_artificials();
        Ok(true)
    }

    /// Pivots zero-valued artificials out of the basis, deletes redundant
    /// rows and the artificial columns.
    fn drop_artificials(&mut self) {
        if self.n_cols == self.n_real {
            return;
        }
        let mut i = 0;
        while i < self.tab.len() {
            if self.basis[i] < self.n_real {
                i += 1;
                continue;
            }
            let candidates = (0..self.n_real)
                .filter(|&j| !matches!(self.state[j], Col::Basic(_)) && !self.tab[i][j].is_zero());
            let best = candidates.min_by_key(|&j| self.is_fixed(j));
            match best {
                Some(j) => {
                    self.pivot(i, j);
                    i += 1;
                }
                None => {
                    self.tab.remove(i);
                    self.beta.remove(i);
                    self.basis.remove(i);
                    for (r, &b) in self.basis.iter().enumerate() {
                        self.state[b] = Col::Basic(r);
                    }
                }
            }
        }
        let (n_real, n_cols) = (self.n_real, self.n_cols);
        for row in &mut self.tab {
            row.drain(n_real..n_cols);
        }
        self.state.truncate(n_real);
        self.lower.truncate(n_real);
        self.upper.truncate(n_real);
        self.n_cols = n_real;
        self.recompute_beta();
    }

    fn is_fixed(&self, j: usize) -> bool {
        self.upper[j]
            .as_ref()
            .is_some_and(|u| crate::numeric::cmp(u, &self.lower[j]) == Ordering::Equal)
    }

    fn nonbasic_value(&self, j: usize) -> S {
        match self.state[j] {
            Col::Upper => self.upper[j]
                .clone()
                .expect("at-upper column has an upper bound"),
            _ => self.lower[j].clone(),
        }
    }

    fn recompute_beta(&mut self) {
        let rhs = self.n_cols;
        let nonbasic: Vec<(usize, S)> = (0..self.n_cols)
            .filter(|&j| !matches!(self.state[j], Col::Basic(_)))
            .map(|j| (j, self.nonbasic_value(j)))
            .filter(|(_, v)| !v.is_zero())
            .collect();
        for (i, row) in self.tab.iter().enumerate() {
            let mut v = row[rhs].clone();
            for (j, x) in &nonbasic {
                if !row[*j].is_zero() {
                    v = v - row[*j].clone() * x.clone();
                }
            }
            self.beta[i] = v;
        }
    }

    /// Gauss-Jordan pivot on `(r, e)`; updates basis bookkeeping but not
    /// the basic values.
    fn pivot(&mut self, r: usize, e: usize) {
        let piv = self.tab[r][e].clone();
        if piv != S::one() {
            for v in self.tab[r].iter_mut() {
                if !v.is_zero() {
                    *v = v.clone() / piv.clone();
                }
            }
        }
        let pivot_row = self.tab[r].clone();
        let nz: Vec<usize> = (0..pivot_row.len())
            .filter(|&j| !pivot_row[j].is_zero())
            .collect();
        for (i, row) in self.tab.iter_mut().enumerate() {
            if i == r || row[e].is_zero() {
                continue;
            }
            let f = row[e].clone();
            for &j in &nz {
                row[j] = row[j].clone() - f.clone() * pivot_row[j].clone();
            }
            // Exact zero in the pivot column even in floating mode.
            row[e] = S::zero();
        }
        let leaving = self.basis[r];
        self.state[leaving] = Col::Lower;
        self.basis[r] = e;
        self.state[e] = Col::Basic(r);
        self.pivots += 1;
    }

    fn reduced_costs(&self, cost: &[S]) -> Vec<S> {
        let mut d: Vec<S> = cost.to_vec();
        for (i, row) in self.tab.iter().enumerate() {
            let cb = &cost[self.basis[i]];
            if cb.is_zero() {
                continue;
            }
            for j in 0..self.n_cols {
                if !row[j].is_zero() {
                    d[j] = d[j].clone() - cb.clone() * row[j].clone();
                }
            }
        }
        for &b in &self.basis {
            d[b] = S::zero();
        }
        d
    }

    /// Core primal simplex loop for `cost` over all current columns.
    /// Columns flagged in `frozen` never enter. Returns final reduced costs.
    fn optimize(&mut self, cost: &[S], frozen: Option<&[bool]>) -> Result<Vec<S>> {
        let mut d = self.reduced_costs(cost);
        let mut degenerate_run = 0usize;
        let mut bland = false;
        let limit = 20_000 + 200 * (self.n_cols + self.tab.len());
        let mut iterations = 0usize;
        loop {
            iterations += 1;
            if iterations > limit {
                return Err(Error::IterationLimit {
                    iterations,
                    rows: self.tab.len(),
                    cols: self.n_cols,
                });
            }

            // Pricing.
            let mut entering: Option<(usize, bool)> = None;
            let mut best_mag: Option<S> = None;
            for j in 0..self.n_cols {
                if frozen.is_some_and(|f| j < f.len() && f[j]) || self.is_fixed(j) {
                    continue;
                }
                let dir_up = match (self.state[j], d[j].sign()) {
                    (Col::Lower, Ordering::Less) => true,
                    (Col::Upper, Ordering::Greater) => false,
                    _ => continue,
                };
                if bland {
                    entering = Some((j, dir_up));
                    break;
                }
                let mag = d[j].abs();
                if best_mag
                    .as_ref()
                    .is_none_or(|b| crate::numeric::cmp(&mag, b) == Ordering::Greater)
                {
                    best_mag = Some(mag);
                    entering = Some((j, dir_up));
                }
            }
            let Some((e, up)) = entering else {
                return Ok(d);
            };

            // Ratio test. `None` leaving row means a bound flip of `e`.
            let mut theta: Option<S> = match &self.upper[e] {
                Some(u) => Some(u.clone() - self.lower[e].clone()),
                None => None,
            };
            let mut leave: Option<(usize, bool)> = None;
            for i in 0..self.tab.len() {
                let a = &self.tab[i][e];
                if a.is_zero() {
                    continue;
                }
                let alpha = if up { a.clone() } else { -a.clone() };
                let b = self.basis[i];
                let (limit_i, to_lower) = if alpha.is_positive() {
                    ((self.beta[i].clone() - self.lower[b].clone()) / alpha, true)
                } else {
                    match &self.upper[b] {
                        Some(u) => ((u.clone() - self.beta[i].clone()) / (-alpha), false),
                        None => continue,
                    }
                };
                let limit_i = if limit_i.is_negative() {
                    S::zero()
                } else {
                    limit_i
                };
                let better = match &theta {
                    None => true,
                    Some(t) => match crate::numeric::cmp(&limit_i, t) {
                        Ordering::Less => true,
                        Ordering::Equal => {
                            leave.is_some_and(|(li, _)| self.basis[i] < self.basis[li])
                        }
                        Ordering::Greater => false,
                    },
                };
                if better {
                    theta = Some(limit_i);
                    leave = Some((i, to_lower));
                }
            }
            let Some(theta) = theta else {
                return Err(Error::Unbounded);
            };

            if theta.is_zero() {
                degenerate_run += 1;
                if degenerate_run > DEGENERACY_LIMIT {
                    bland = true;
                }
            } else {
                degenerate_run = 0;
            }

            let step = if up { theta.clone() } else { -theta.clone() };
            let entering_value = self.nonbasic_value(e) + step.clone();
            if !step.is_zero() {
                for i in 0..self.tab.len() {
                    let a = &self.tab[i][e];
                    if !a.is_zero() {
                        self.beta[i] = self.beta[i].clone() - step.clone() * a.clone();
                    }
                }
            }
            match leave {
                None => {
                    self.state[e] = if up { Col::Upper } else { Col::Lower };
                }
                Some((r, to_lower)) => {
                    let leaving = self.basis[r];
                    self.pivot(r, e);
                    self.state[leaving] = if to_lower { Col::Lower } else { Col::Upper };
                    self.beta[r] = entering_value;
                    let de = d[e].clone();
                    let row = &self.tab[r];
                    for j in 0..self.n_cols {
                        if !row[j].is_zero() {
                            d[j] = d[j].clone() - de.clone() * row[j].clone();
                        }
                    }
                    d[e] = S::zero();
                }
            }
        }
    }

    fn extend_cost(&self, objective: &[S]) -> Vec<S> {
        let mut cost = objective.to_vec();
        cost.resize(self.n_cols, S::zero());
        cost
    }

    /// Re-optimizes the current tableau for a new structural objective.
    pub fn minimize(&mut self, objective: &[S]) -> Result<()> {
        debug_assert_eq!(objective.len(), self.n_struct);
        let cost = self.extend_cost(objective);
        self.optimize(&cost, None)?;
        Ok(())
    }

    /// Lexicographic minimization: each later objective is optimized over
    /// the optimal face of the earlier ones.
    pub fn minimize_lex(&mut self, objectives: &[&[S]]) -> Result<()> {
        let mut frozen = vec![false; self.n_cols];
        for obj in objectives {
            let cost = self.extend_cost(obj);
            let d = self.optimize(&cost, Some(&frozen))?;
            for j in 0..self.n_cols {
                if !matches!(self.state[j], Col::Basic(_)) && !d[j].is_zero() {
                    frozen[j] = true;
                }
            }
        }
        Ok(())
    }

    pub fn primal(&self) -> Vec<S> {
        (0..self.n_struct)
            .map(|j| match self.state[j] {
                Col::Basic(i) => self.beta[i].clone(),
                _ => self.nonbasic_value(j),
            })
            .collect()
    }

    pub fn basis(&self) -> Basis {
        Basis {
            basic: self.basis.clone(),
            at_upper: (0..self.n_cols)
                .filter(|&j| self.state[j] == Col::Upper)
                .collect(),
        }
    }

    pub fn pivots(&self) -> usize {
        self.pivots
    }

    pub fn result(&self, objective: &[S]) -> LpResult<S> {
        let primal = self.primal();
        let value = dot(objective, &primal);
        LpResult {
            status: LpStatus::Optimal,
            value,
            primal,
            basis: Some(self.basis()),
        }
    }
}

pub fn dot<S: Scalar>(a: &[S], b: &[S]) -> S {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(S::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::Rational;
    use proptest::prelude::*;

    fn q(n: i64) -> Rational {
        Rational::integer(n)
    }

    fn row(coeffs: &[i64], relation: RowRelation, rhs: i64) -> LpRow<Rational> {
        LpRow {
            coeffs: coeffs.iter().map(|&c| q(c)).collect(),
            relation,
            rhs: q(rhs),
        }
    }

    #[test]
    fn covering_row() {
        let mut p = LpProblem::unit_box(vec![q(1), q(0)]);
        p.rows.push(row(&[1, 1], RowRelation::Ge, 1));
        let r = lp_solve(&p, None).unwrap();
        assert_eq!(r.status, LpStatus::Optimal);
        assert_eq!(r.value, q(0));
        assert_eq!(r.primal, vec![q(0), q(1)]);
    }

    #[test]
    fn fixings_make_it_infeasible() {
        let mut p = LpProblem::unit_box(vec![q(0), q(0)]);
        p.lower = vec![q(1), q(1)];
        p.rows.push(row(&[1, 1], RowRelation::Le, 1));
        assert_eq!(lp_solve(&p, None).unwrap().status, LpStatus::Infeasible);
    }

    #[test]
    fn knapsack_lp_has_one_fractional_variable() {
        let mut p = LpProblem::unit_box(vec![q(-60), q(-55), q(-50)]);
        p.rows.push(row(&[10, 10, 10], RowRelation::Le, 15));
        let r = lp_solve(&p, None).unwrap();
        assert_eq!(r.primal, vec![q(1), Rational::new(1, 2), q(0)]);
        assert_eq!(r.value, Rational::new(-175, 2));
    }

    #[test]
    fn equality_rows_use_phase_one() {
        // x1 + x2 + x3 = 2, minimize x1 - x3.
        let mut p = LpProblem::unit_box(vec![q(1), q(0), q(-1)]);
        p.rows.push(row(&[1, 1, 1], RowRelation::Eq, 2));
        let r = lp_solve(&p, None).unwrap();
        assert_eq!(r.primal, vec![q(0), q(1), q(1)]);
        assert_eq!(r.value, q(-1));
    }

    #[test]
    fn redundant_equalities_are_dropped() {
        let mut p = LpProblem::unit_box(vec![q(-1), q(-2)]);
        p.rows.push(row(&[1, 1], RowRelation::Eq, 1));
        p.rows.push(row(&[2, 2], RowRelation::Eq, 2));
        let r = lp_solve(&p, None).unwrap();
        assert_eq!(r.primal, vec![q(0), q(1)]);
        assert_eq!(r.basis.unwrap().basic.len(), 1);
    }

    #[test]
    fn unbounded_column_is_reported() {
        let p = LpProblem {
            objective: vec![q(-1)],
            rows: vec![],
            lower: vec![q(0)],
            upper: vec![None],
        };
        assert!(matches!(lp_solve(&p, None), Err(Error::Unbounded)));
    }

    #[test]
    fn warm_start_reuses_optimal_basis() {
        let mut p = LpProblem::unit_box(vec![q(-60), q(-55), q(-50)]);
        p.rows.push(row(&[10, 10, 10], RowRelation::Le, 15));
        let cold = lp_solve(&p, None).unwrap();
        let warm = lp_solve(&p, cold.basis.as_ref()).unwrap();
        assert_eq!(cold.primal, warm.primal);
        let s = Simplex::with_basis(&p, cold.basis.as_ref().unwrap())
            .unwrap()
            .unwrap();
        assert_eq!(s.primal(), cold.primal);
    }

    #[test]
    fn lexicographic_face() {
        // min x1 then min -x2 on x1 + x2 >= 1: the first stage leaves x2 free.
        let mut p = LpProblem::unit_box(vec![q(0), q(0)]);
        p.rows.push(row(&[1, 1], RowRelation::Ge, 1));
        let mut s = Simplex::new(&p).unwrap().unwrap();
        s.minimize_lex(&[&[q(1), q(0)], &[q(0), q(-1)]]).unwrap();
        assert_eq!(s.primal(), vec![q(0), q(1)]);
    }

    #[test]
    fn float_mode_agrees() {
        let mut p = LpProblem::<f64>::unit_box(vec![-60.0, -55.0, -50.0]);
        p.rows.push(LpRow {
            coeffs: vec![10.0, 10.0, 10.0],
            relation: RowRelation::Le,
            rhs: 15.0,
        });
        let r = lp_solve(&p, None).unwrap();
        assert!((r.value + 87.5).abs() < 1e-9);
    }

    fn brute_force_vertices(p: &LpProblem<Rational>) -> Option<Rational> {
        // Enumerate all box vertices with at most one fractional coordinate
        // solving a single row: sufficient for one-row problems.
        let n = p.n();
        let mut best: Option<Rational> = None;
        let feasible = |x: &[Rational]| {
            p.rows.iter().all(|r| {
                let a = dot(&r.coeffs, x);
                match r.relation {
                    RowRelation::Le => a <= r.rhs,
                    RowRelation::Ge => a >= r.rhs,
                    RowRelation::Eq => a == r.rhs,
                }
            })
        };
        for mask in 0u32..(1 << n) {
            let base: Vec<Rational> = (0..n).map(|i| q(((mask >> i) & 1) as i64)).collect();
            let mut candidates = vec![base.clone()];
            for r in &p.rows {
                for f in 0..n {
                    if r.coeffs[f].is_zero() {
                        continue;
                    }
                    let mut x = base.clone();
                    x[f] = q(0);
                    let rest = dot(&r.coeffs, &x);
                    let v = (r.rhs.clone() - rest) / r.coeffs[f].clone();
                    if v >= q(0) && v <= q(1) {
                        x[f] = v;
                        candidates.push(x);
                    }
                }
            }
            for x in candidates {
                if feasible(&x) {
                    let v = dot(&p.objective, &x);
                    if best.as_ref().is_none_or(|b| v < *b) {
                        best = Some(v);
                    }
                }
            }
        }
        best
    }

    proptest! {
        #[test]
        fn single_row_matches_vertex_enumeration(
            c in proptest::collection::vec(-20i64..20, 4),
            a in proptest::collection::vec(-10i64..10, 4),
            rhs in -10i64..20,
            rel in 0u8..3,
        ) {
            let relation = [RowRelation::Le, RowRelation::Ge, RowRelation::Eq][rel as usize];
            let mut p = LpProblem::unit_box(c.iter().map(|&v| q(v)).collect());
            p.rows.push(row(&a, relation, rhs));
            let r = lp_solve(&p, None).unwrap();
            match brute_force_vertices(&p) {
                None => prop_assert_eq!(r.status, LpStatus::Infeasible),
                Some(v) => {
                    prop_assert_eq!(r.status, LpStatus::Optimal);
                    prop_assert_eq!(r.value.clone(), v);
                    // Weak duality spot check against every feasible 0/1 point.
                    for mask in 0u32..16 {
                        let x: Vec<Rational> = (0..4).map(|i| q(((mask >> i) & 1) as i64)).collect();
                        let act = dot(&p.rows[0].coeffs, &x);
                        let ok = match relation {
                            RowRelation::Le => act <= p.rows[0].rhs,
                            RowRelation::Ge => act >= p.rows[0].rhs,
                            RowRelation::Eq => act == p.rows[0].rhs,
                        };
                        if ok {
                            prop_assert!(dot(&p.objective, &x) >= r.value);
                        }
                    }
                }
            }
        }
    }
}
