//! Bounded-variable primal simplex on a dense tableau.
//!
//! Two-phase method: rows get one slack each; rows whose slack cannot
//! start feasible get an artificial variable, and phase 1 minimizes the
//! artificial sum. Entering variables follow the steepest reduced cost
//! (lowest index on ties); after a run of degenerate pivots the rule
//! switches to Bland's, which guarantees termination. Everything is
//! index-ordered, so a fixed model always produces the same solution.
//!
//! The dense tableau keeps the implementation small and is comfortable
//! at the instance sizes the rest of the crate targets (a few thousand
//! rows). Larger models call for a revised simplex behind the same
//! [`solve`] contract.

use super::{LpModel, LpSolution, LpStatus, Relation};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum VarState {
    Basic,
    AtLower,
    AtUpper,
    Free,
}

enum PhaseOutcome {
    Optimal,
    Unbounded,
    IterationLimit,
}

struct Tableau<T> {
    num_structural: usize,
    num_slack: usize,
    rows: Vec<Vec<T>>,
    rhs: Vec<T>,
    basis: Vec<usize>,
    state: Vec<VarState>,
    value: Vec<T>,
    lo: Vec<T>,
    hi: Vec<T>,
    cost: Vec<T>,
    tol: T,
    pivot_eps: T,
    iterations: usize,
    iteration_cap: usize,
    stall: usize,
    bland: bool,
}

impl<T: Scalar> Tableau<T> {
    fn new(model: &LpModel<T>, tol: T) -> Self {
        let ns = model.num_vars;
        let m = model.constraints.len();

        let mut lo: Vec<T> = model.bounds.iter().map(|&(l, _)| l).collect();
        let mut hi: Vec<T> = model.bounds.iter().map(|&(_, h)| h).collect();
        let mut state = Vec::with_capacity(ns + m);
        let mut value = Vec::with_capacity(ns + m);
        for j in 0..ns {
            if lo[j].is_finite() {
                state.push(VarState::AtLower);
                value.push(lo[j]);
            } else if hi[j].is_finite() {
                state.push(VarState::AtUpper);
                value.push(hi[j]);
            } else {
                state.push(VarState::Free);
                value.push(T::zero());
            }
        }

        let mut rows: Vec<Vec<T>> = Vec::with_capacity(m);
        let mut rhs = Vec::with_capacity(m);
        let mut basis = Vec::with_capacity(m);
        let mut artificial: Vec<(usize, T, T)> = Vec::new(); // (row, sign, start value)

        for (i, con) in model.constraints.iter().enumerate() {
            let mut row = vec![T::zero(); ns + m];
            let mut lhs = T::zero();
            for &(j, c) in &con.coeffs {
                row[j] = row[j] + c;
            }
            for j in 0..ns {
                lhs = lhs + row[j] * value[j];
            }
            let slack = ns + i;
            row[slack] = T::one();
            let (slo, shi) = match con.relation {
                Relation::Le => (T::zero(), T::infinity()),
                Relation::Ge => (T::neg_infinity(), T::zero()),
                Relation::Eq => (T::zero(), T::zero()),
            };
            lo.push(slo);
            hi.push(shi);
            let s = con.rhs - lhs;
            if s >= slo - tol && s <= shi + tol {
                state.push(VarState::Basic);
                value.push(s.max(slo.max(T::neg_infinity())).min(shi));
                basis.push(slack);
            } else {
                // clamp the slack at its nearest bound; an artificial
                // variable absorbs the residual
                let clamped = if s < slo { slo } else { shi };
                state.push(if clamped == shi && shi.is_finite() && slo < shi {
                    VarState::AtUpper
                } else {
                    VarState::AtLower
                });
                value.push(clamped);
                let residual = s - clamped;
                let sign = if residual >= T::zero() { T::one() } else { -T::one() };
                artificial.push((i, sign, residual.abs()));
                basis.push(usize::MAX); // patched below
            }
            rhs.push(con.rhs);
            rows.push(row);
        }

        let num_art = artificial.len();
        let ncols = ns + m + num_art;
        for row in &mut rows {
            row.resize(ncols, T::zero());
        }
        for (a, &(i, sign, start)) in artificial.iter().enumerate() {
            let col = ns + m + a;
            rows[i][col] = sign;
            lo.push(T::zero());
            hi.push(T::infinity());
            state.push(VarState::Basic);
            value.push(start);
            basis[i] = col;
        }

        let iteration_cap = 1000 + 40 * (m + ncols);
        Self {
            num_structural: ns,
            num_slack: m,
            rows,
            rhs,
            basis,
            state,
            value,
            lo,
            hi,
            cost: vec![T::zero(); ncols],
            tol,
            pivot_eps: tol * T::of(1e-2),
            iterations: 0,
            iteration_cap,
            stall: 0,
            bland: false,
        }
    }

    fn ncols(&self) -> usize {
        self.state.len()
    }

    fn is_artificial(&self, j: usize) -> bool {
        j >= self.num_structural + self.num_slack
    }

    fn rebuild_cost(&mut self, full_cost: &[T]) {
        self.cost.copy_from_slice(full_cost);
        for (i, row) in self.rows.iter().enumerate() {
            let cb = full_cost[self.basis[i]];
            if cb != T::zero() {
                for (d, &a) in self.cost.iter_mut().zip(row.iter()) {
                    *d = *d - cb * a;
                }
            }
        }
    }

    /// Recompute basic values from the row-reduced system to purge the
    /// drift of incremental updates.
    fn refresh_basic_values(&mut self) {
        for i in 0..self.rows.len() {
            let mut v = self.rhs[i];
            for j in 0..self.ncols() {
                if self.state[j] != VarState::Basic && self.value[j] != T::zero() {
                    v = v - self.rows[i][j] * self.value[j];
                }
            }
            self.value[self.basis[i]] = v;
        }
    }

    fn choose_entering(&self, phase1: bool) -> Option<(usize, T)> {
        let mut best: Option<(usize, T)> = None; // (var, |reduced cost|)
        for j in 0..self.ncols() {
            if self.state[j] == VarState::Basic || self.lo[j] == self.hi[j] {
                continue;
            }
            if !phase1 && self.is_artificial(j) {
                continue;
            }
            let d = self.cost[j];
            let dir = match self.state[j] {
                VarState::AtLower => {
                    if d < -self.tol {
                        T::one()
                    } else {
                        continue;
                    }
                }
                VarState::AtUpper => {
                    if d > self.tol {
                        -T::one()
                    } else {
                        continue;
                    }
                }
                VarState::Free => {
                    if d < -self.tol {
                        T::one()
                    } else if d > self.tol {
                        -T::one()
                    } else {
                        continue;
                    }
                }
                VarState::Basic => unreachable!(),
            };
            if self.bland {
                return Some((j, dir));
            }
            let score = d.abs();
            if best.map_or(true, |(_, s)| score > s) {
                best = Some((j, score));
            }
        }
        best.map(|(j, _)| {
            let dir = match self.state[j] {
                VarState::AtUpper => -T::one(),
                VarState::Free if self.cost[j] > T::zero() => -T::one(),
                _ => T::one(),
            };
            (j, dir)
        })
    }

    fn run_phase(&mut self, phase1: bool) -> PhaseOutcome {
        loop {
            if self.iterations >= self.iteration_cap {
                return PhaseOutcome::IterationLimit;
            }
            let Some((enter, dir)) = self.choose_entering(phase1) else {
                return PhaseOutcome::Optimal;
            };
            self.iterations += 1;
            if self.iterations % 512 == 0 {
                self.refresh_basic_values();
            }

            // ratio test: how far can the entering variable move
            let range = self.hi[enter] - self.lo[enter];
            let mut t_best = if range.is_finite() { range } else { T::infinity() };
            let mut leave: Option<(usize, bool)> = None; // (row, leaves to lower)
            for i in 0..self.rows.len() {
                let alpha = self.rows[i][enter];
                if alpha.abs() <= self.pivot_eps {
                    continue;
                }
                let e = dir * alpha;
                let k = self.basis[i];
                let xk = self.value[k];
                let (t, to_lower) = if e > T::zero() {
                    if !self.lo[k].is_finite() {
                        continue;
                    }
                    (((xk - self.lo[k]) / e).max(T::zero()), true)
                } else {
                    if !self.hi[k].is_finite() {
                        continue;
                    }
                    (((self.hi[k] - xk) / (-e)).max(T::zero()), false)
                };
                let better = match leave {
                    None => t < t_best - self.pivot_eps,
                    Some((r, _)) => {
                        if t < t_best - self.pivot_eps {
                            true
                        } else if t > t_best + self.pivot_eps {
                            false
                        } else if self.bland {
                            self.basis[i] < self.basis[r]
                        } else {
                            alpha.abs() > self.rows[r][enter].abs()
                        }
                    }
                };
                if better {
                    t_best = t.min(t_best);
                    leave = Some((i, to_lower));
                }
            }

            if !t_best.is_finite() {
                return PhaseOutcome::Unbounded;
            }

            let step = dir * t_best;
            match leave {
                None => {
                    // bound flip: entering variable jumps to the other bound
                    for i in 0..self.rows.len() {
                        let k = self.basis[i];
                        self.value[k] = self.value[k] - step * self.rows[i][enter];
                    }
                    self.value[enter] = self.value[enter] + step;
                    self.state[enter] = match self.state[enter] {
                        VarState::AtLower => VarState::AtUpper,
                        VarState::AtUpper => VarState::AtLower,
                        other => other,
                    };
                }
                Some((r, to_lower)) => {
                    for i in 0..self.rows.len() {
                        let k = self.basis[i];
                        self.value[k] = self.value[k] - step * self.rows[i][enter];
                    }
                    let k = self.basis[r];
                    self.value[k] = if to_lower { self.lo[k] } else { self.hi[k] };
                    self.state[k] = if to_lower { VarState::AtLower } else { VarState::AtUpper };
                    self.value[enter] = self.value[enter] + step;
                    self.pivot(r, enter);
                }
            }

            // a run of degenerate pivots switches the rule to Bland's
            if t_best <= self.pivot_eps {
                self.stall += 1;
                if self.stall > 60 {
                    self.bland = true;
                }
            } else {
                self.stall = 0;
                self.bland = false;
            }
        }
    }

    fn pivot(&mut self, r: usize, enter: usize) {
        let piv = self.rows[r][enter];
        let inv = T::one() / piv;
        for v in self.rows[r].iter_mut() {
            *v = *v * inv;
        }
        self.rhs[r] = self.rhs[r] * inv;
        let pivot_row = self.rows[r].clone();
        let pivot_rhs = self.rhs[r];
        for i in 0..self.rows.len() {
            if i == r {
                continue;
            }
            let factor = self.rows[i][enter];
            if factor != T::zero() {
                for (v, &p) in self.rows[i].iter_mut().zip(pivot_row.iter()) {
                    *v = *v - factor * p;
                }
                self.rows[i][enter] = T::zero();
                self.rhs[i] = self.rhs[i] - factor * pivot_rhs;
            }
        }
        let cfactor = self.cost[enter];
        if cfactor != T::zero() {
            for (c, &p) in self.cost.iter_mut().zip(pivot_row.iter()) {
                *c = *c - cfactor * p;
            }
            self.cost[enter] = T::zero();
        }
        self.basis[r] = enter;
        self.state[enter] = VarState::Basic;
    }

    /// Drive basic artificials out of the basis after phase 1, or fix
    /// them at zero when their row turned out redundant.
    fn retire_artificials(&mut self) {
        for r in 0..self.rows.len() {
            let b = self.basis[r];
            if !self.is_artificial(b) {
                continue;
            }
            let col = (0..self.num_structural + self.num_slack)
                .find(|&j| self.state[j] != VarState::Basic && self.rows[r][j].abs() > self.pivot_eps);
            match col {
                Some(j) => {
                    let old = self.basis[r];
                    self.pivot(r, j);
                    self.value[old] = T::zero();
                    self.state[old] = VarState::AtLower;
                    self.lo[old] = T::zero();
                    self.hi[old] = T::zero();
                }
                None => {
                    // redundant row: the artificial stays basic at zero
                    // and no real column can ever move it
                    self.lo[b] = T::zero();
                    self.hi[b] = T::zero();
                }
            }
        }
        // artificials that left the basis can never re-enter
        for j in self.num_structural + self.num_slack..self.ncols() {
            if self.state[j] != VarState::Basic {
                self.lo[j] = T::zero();
                self.hi[j] = T::zero();
                self.value[j] = T::zero();
            }
        }
    }

    fn infeasibility(&self) -> T {
        (self.num_structural + self.num_slack..self.ncols())
            .map(|j| self.value[j].max(T::zero()))
            .sum()
    }

    fn structural_values(&self, model: &LpModel<T>) -> Vec<T> {
        (0..self.num_structural)
            .map(|j| {
                let v = self.value[j];
                let (lo, hi) = model.bounds[j];
                let snapped = if lo.is_finite() && (v - lo).abs() <= self.tol * T::of(10.0) {
                    lo
                } else if hi.is_finite() && (v - hi).abs() <= self.tol * T::of(10.0) {
                    hi
                } else {
                    v
                };
                snapped.max(if lo.is_finite() { lo } else { snapped })
                    .min(if hi.is_finite() { hi } else { snapped })
            })
            .collect()
    }
}

pub(super) fn solve<T: Scalar>(model: &LpModel<T>, tol: T) -> Result<LpSolution<T>> {
    if tol <= T::zero() || !tol.is_finite() {
        return Err(Error::Parameter(format!("tolerance must be positive, got {tol}")));
    }
    let mut tab = Tableau::new(model, tol);

    let ncols = tab.ncols();
    let has_artificials = ncols > tab.num_structural + tab.num_slack;
    if has_artificials {
        let mut phase1_cost = vec![T::zero(); ncols];
        for c in phase1_cost.iter_mut().skip(tab.num_structural + tab.num_slack) {
            *c = T::one();
        }
        tab.rebuild_cost(&phase1_cost);
        match tab.run_phase(true) {
            PhaseOutcome::IterationLimit => {
                return Ok(LpSolution {
                    x: tab.structural_values(model),
                    objective_value: T::nan(),
                    status: LpStatus::IterationLimit,
                });
            }
            // phase 1 has a finite optimum; unbounded cannot happen
            PhaseOutcome::Unbounded => {
                return Err(Error::Solver("phase 1 reported unbounded".into()));
            }
            PhaseOutcome::Optimal => {}
        }
        tab.refresh_basic_values();
        if tab.infeasibility() > tol * T::of(10.0) {
            return Ok(LpSolution {
                x: tab.structural_values(model),
                objective_value: T::nan(),
                status: LpStatus::Infeasible,
            });
        }
        tab.retire_artificials();
    }

    let mut phase2_cost = vec![T::zero(); tab.ncols()];
    phase2_cost[..model.num_vars].copy_from_slice(&model.objective);
    tab.rebuild_cost(&phase2_cost);
    tab.stall = 0;
    tab.bland = false;
    let outcome = tab.run_phase(false);
    tab.refresh_basic_values();
    let x = tab.structural_values(model);
    let status = match outcome {
        PhaseOutcome::Optimal => LpStatus::Optimal,
        PhaseOutcome::Unbounded => LpStatus::Unbounded,
        PhaseOutcome::IterationLimit => LpStatus::IterationLimit,
    };
    let objective_value = if status == LpStatus::Optimal {
        model.objective_at(&x)
    } else {
        T::nan()
    };
    Ok(LpSolution { x, objective_value, status })
}
