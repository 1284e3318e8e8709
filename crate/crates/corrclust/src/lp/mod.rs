//! Linear programs for the clustering relaxations and a reference solver.
//!
//! Builders produce [`LpModel`]s for the pairwise relaxation (triangle
//! constraints), the motif relaxation (hyperedge variables coupled to
//! pair variables), the mixed multi-size relaxation, and the
//! path-cycle formulation solved by cutting planes in [`neppc`].
//!
//! Variable layout invariant: every builder in this module places the
//! `C(n,2)` pair variables first, in canonical pair order (see
//! [`crate::instances::pair_index`]); hyperedge variables follow, grouped
//! by level. Rounding code relies on this layout.

mod simplex;
pub mod neppc;

pub use neppc::{
    build_neppc_lp_relaxed, neppc_separation, solve_neppc, NeppcConstraint, NeppcSolve,
};

use crate::error::{Error, Result};
use crate::instances::{
    pair_count, pair_index, pair_iter, MixedMotifInstance, SignedGraph, SignedHypergraph,
};
use crate::scalar::Scalar;

/// Relation of one linear constraint row.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

/// One sparse constraint row `coeffs . x  (rel)  rhs`.
#[derive(Clone, Debug)]
pub struct Constraint<T> {
    pub coeffs: Vec<(usize, T)>,
    pub relation: Relation,
    pub rhs: T,
}

/// Identity of an LP variable, for diagnostics and variable lookup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VarId {
    /// Separation variable of the unordered node pair `(i, j)`.
    Pair(usize, usize),
    /// Split variable of hyperedge `index` at tuple-size `level`.
    Hyperedge { level: usize, index: usize },
}

/// Minimization linear program with per-variable bounds.
///
/// The objective is `sum objective[j] * x[j] + constant`; carrying the
/// constant keeps reported optima equal to the full disagreement
/// objective including its fixed terms.
#[derive(Clone, Debug)]
pub struct LpModel<T> {
    pub num_vars: usize,
    pub objective: Vec<T>,
    pub constant: T,
    pub constraints: Vec<Constraint<T>>,
    /// Per-variable `[lo, hi]`; infinities mark absent bounds.
    pub bounds: Vec<(T, T)>,
    pub var_ids: Vec<VarId>,
}

/// Outcome status of one solve.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
    IterationLimit,
}

/// Fractional solution returned by [`solve_lp`].
#[derive(Clone, Debug)]
pub struct LpSolution<T> {
    pub x: Vec<T>,
    pub objective_value: T,
    pub status: LpStatus,
}

impl<T: Scalar> LpModel<T> {
    fn with_capacity(num_vars: usize) -> Self {
        Self {
            num_vars,
            objective: vec![T::zero(); num_vars],
            constant: T::zero(),
            constraints: Vec::new(),
            bounds: vec![(T::zero(), T::one()); num_vars],
            var_ids: Vec::with_capacity(num_vars),
        }
    }

    /// Index of a variable by identity; linear scan, intended for
    /// diagnostics and tests. Pair variables are at `pair_index` by the
    /// layout invariant, no lookup needed.
    pub fn var_index_of(&self, id: &VarId) -> Option<usize> {
        self.var_ids.iter().position(|v| v == id)
    }

    /// Objective value `c . x + constant` at an arbitrary point.
    pub fn objective_at(&self, x: &[T]) -> T {
        let linear: T = self
            .objective
            .iter()
            .zip(x.iter())
            .map(|(&c, &v)| c * v)
            .sum();
        linear + self.constant
    }

    /// Constraint and bound violations at a point, each as
    /// `(description, violation amount)` beyond `tol`.
    pub fn violations_at(&self, x: &[T], tol: T) -> Vec<(String, T)> {
        let mut out = Vec::new();
        for (j, &(lo, hi)) in self.bounds.iter().enumerate() {
            if x[j] < lo - tol {
                out.push((format!("var {j} below lower bound"), lo - x[j]));
            }
            if x[j] > hi + tol {
                out.push((format!("var {j} above upper bound"), x[j] - hi));
            }
        }
        for (r, row) in self.constraints.iter().enumerate() {
            let lhs: T = row.coeffs.iter().map(|&(j, c)| c * x[j]).sum();
            let violation = match row.relation {
                Relation::Le => lhs - row.rhs,
                Relation::Ge => row.rhs - lhs,
                Relation::Eq => (lhs - row.rhs).abs(),
            };
            if violation > tol {
                out.push((format!("row {r} violated"), violation));
            }
        }
        out
    }
}

fn push_triangle_rows<T: Scalar>(model: &mut LpModel<T>, n: usize) {
    let one = T::one();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let ij = pair_index(n, i, j);
                let ik = pair_index(n, i, k);
                let jk = pair_index(n, j, k);
                for (a, b, c) in [(ij, ik, jk), (ik, ij, jk), (jk, ij, ik)] {
                    model.constraints.push(Constraint {
                        coeffs: vec![(a, one), (b, -one), (c, -one)],
                        relation: Relation::Le,
                        rhs: T::zero(),
                    });
                }
            }
        }
    }
}

fn push_pair_vars<T: Scalar>(model: &mut LpModel<T>, n: usize) {
    for (i, j) in pair_iter(n) {
        model.var_ids.push(VarId::Pair(i, j));
    }
}

/// Relaxation of the pairwise disagreement objective: `C(n,2)` pair
/// variables in `[0,1]` under all `3 C(n,3)` triangle constraints. The
/// constant `sum w_minus` is folded into the objective constant.
pub fn build_cc_lp<T: Scalar>(sg: &SignedGraph<T>) -> LpModel<T> {
    let n = sg.n();
    let mut model = LpModel::with_capacity(pair_count(n));
    push_pair_vars(&mut model, n);
    for (i, j, wp, wm) in sg.pairs() {
        let idx = pair_index(n, i, j);
        model.objective[idx] = wp - wm;
        model.constant = model.constant + wm;
    }
    push_triangle_rows(&mut model, n);
    model
}

fn push_hyperedge_coupling<T: Scalar>(
    model: &mut LpModel<T>,
    n: usize,
    level: &SignedHypergraph<T>,
    var_base: usize,
) {
    let one = T::one();
    let k_minus_one = T::of_usize(level.k() - 1);
    for (e, edge) in level.hyperedges().iter().enumerate() {
        let y = var_base + e;
        let mut lower_row = vec![(y, k_minus_one)];
        for (a, &u) in edge.nodes.iter().enumerate() {
            for &v in &edge.nodes[a + 1..] {
                let p = pair_index(n, u, v);
                // x_uv <= y_e
                model.constraints.push(Constraint {
                    coeffs: vec![(p, one), (y, -one)],
                    relation: Relation::Le,
                    rhs: T::zero(),
                });
                lower_row.push((p, -one));
            }
        }
        // (k-1) y_e <= sum of pair variables inside the tuple
        model.constraints.push(Constraint {
            coeffs: lower_row,
            relation: Relation::Le,
            rhs: T::zero(),
        });
    }
}

/// Relaxation of the hyper-disagreement objective: pair variables plus
/// one split variable per hyperedge, coupled so the split variable is
/// sandwiched between the max and the scaled sum of its internal pair
/// variables.
pub fn build_motif_lp<T: Scalar>(h: &SignedHypergraph<T>) -> LpModel<T> {
    let n = h.n();
    let num_pairs = pair_count(n);
    let mut model = LpModel::with_capacity(num_pairs + h.hyperedges().len());
    push_pair_vars(&mut model, n);
    for (e, edge) in h.hyperedges().iter().enumerate() {
        model.var_ids.push(VarId::Hyperedge { level: h.k(), index: e });
        model.objective[num_pairs + e] = edge.w_plus - edge.w_minus;
        model.constant = model.constant + edge.w_minus;
    }
    push_triangle_rows(&mut model, n);
    push_hyperedge_coupling(&mut model, n, h, num_pairs);
    model
}

/// Relaxation of the mixed multi-size objective. Levels with zero
/// weight contribute nothing; the size-2 level is folded directly onto
/// the shared pair variables, larger levels get hyperedge variables.
pub fn build_mixed_lp<T: Scalar>(m: &MixedMotifInstance<T>) -> LpModel<T> {
    let n = m.n();
    let num_pairs = pair_count(n);
    let extra: usize = m
        .active_levels()
        .filter(|&(t, _, _)| t > 2)
        .map(|(_, level, _)| level.hyperedges().len())
        .sum();
    let mut model = LpModel::with_capacity(num_pairs + extra);
    push_pair_vars(&mut model, n);

    let mut var_base = num_pairs;
    for (t, level, rho) in m.active_levels() {
        if t == 2 {
            for (e, edge) in level.hyperedges().iter().enumerate() {
                let _ = e;
                let p = pair_index(n, edge.nodes[0], edge.nodes[1]);
                model.objective[p] = model.objective[p] + rho * (edge.w_plus - edge.w_minus);
                model.constant = model.constant + rho * edge.w_minus;
            }
        } else {
            for (e, edge) in level.hyperedges().iter().enumerate() {
                model.var_ids.push(VarId::Hyperedge { level: t, index: e });
                model.objective[var_base + e] = rho * (edge.w_plus - edge.w_minus);
                model.constant = model.constant + rho * edge.w_minus;
            }
            var_base += level.hyperedges().len();
        }
    }

    push_triangle_rows(&mut model, n);
    let mut var_base = num_pairs;
    for (t, level, _) in m.active_levels() {
        if t > 2 {
            push_hyperedge_coupling(&mut model, n, level, var_base);
            var_base += level.hyperedges().len();
        }
    }
    model
}

/// Solve a model with the reference bounded-variable primal simplex.
///
/// Deterministic for a fixed model; infeasible and unbounded models are
/// reported in the status, never as silently wrong values. `tol` is the
/// feasibility and optimality tolerance (1e-7 is the usual default for
/// `f64`).
pub fn solve_lp<T: Scalar>(model: &LpModel<T>, tol: T) -> Result<LpSolution<T>> {
    for (j, &(lo, hi)) in model.bounds.iter().enumerate() {
        if lo > hi {
            return Err(Error::Input(format!("variable {j} has lo > hi")));
        }
    }
    for row in &model.constraints {
        if !row.rhs.is_finite() {
            return Err(Error::Input("constraint rhs must be finite".into()));
        }
        if row.coeffs.iter().any(|&(j, c)| j >= model.num_vars || !c.is_finite()) {
            return Err(Error::Input("constraint coefficient invalid".into()));
        }
    }
    if model.objective.iter().any(|c| !c.is_finite()) {
        return Err(Error::Input("objective coefficient invalid".into()));
    }
    let mut solution = simplex::solve(model, tol)?;
    if solution.status == LpStatus::Optimal {
        let loose = tol * T::of(100.0);
        let violations = model.violations_at(&solution.x, loose);
        if !violations.is_empty() {
            return Err(Error::Solver(format!(
                "solver returned an infeasible point: {} violations, worst {:?}",
                violations.len(),
                violations
                    .iter()
                    .map(|&(_, v)| v)
                    .fold(T::zero(), |a, b| a.max(b))
            )));
        }
        solution.objective_value = model.objective_at(&solution.x);
    }
    Ok(solution)
}

/// All unordered triples violating a triangle inequality at `x` (a
/// pairwise vector in canonical order) beyond `tol`. Empty iff the
/// point is metric-feasible.
pub fn check_triangle_feasible<T: Scalar>(
    x: &[T],
    n: usize,
    tol: T,
) -> Vec<(usize, usize, usize)> {
    let mut violated = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let ij = x[pair_index(n, i, j)];
                let ik = x[pair_index(n, i, k)];
                let jk = x[pair_index(n, j, k)];
                if ij > ik + jk + tol || ik > ij + jk + tol || jk > ij + ik + tol {
                    violated.push((i, j, k));
                }
            }
        }
    }
    violated
}

fn var_name(id: &VarId) -> String {
    match id {
        VarId::Pair(i, j) => format!("x_{i}_{j}"),
        VarId::Hyperedge { level, index } => format!("y{level}_{index}"),
    }
}

/// Debug dump in a plain text LP interchange format: objective, one
/// constraint row per line, then bounds.
pub fn dump_lp<T: Scalar>(model: &LpModel<T>) -> String {
    use std::fmt::Write;
    let mut out = String::from("minimize\n  obj:");
    for (j, &c) in model.objective.iter().enumerate() {
        if c != T::zero() {
            let _ = write!(out, " {:+} {}", c, var_name(&model.var_ids[j]));
        }
    }
    if model.constant != T::zero() {
        let _ = write!(out, " {:+}", model.constant);
    }
    out.push_str("\nsubject to\n");
    for (r, row) in model.constraints.iter().enumerate() {
        let _ = write!(out, "  r{r}:");
        for &(j, c) in &row.coeffs {
            let _ = write!(out, " {:+} {}", c, var_name(&model.var_ids[j]));
        }
        let rel = match row.relation {
            Relation::Le => "<=",
            Relation::Ge => ">=",
            Relation::Eq => "=",
        };
        let _ = writeln!(out, " {rel} {}", row.rhs);
    }
    out.push_str("bounds\n");
    for (j, &(lo, hi)) in model.bounds.iter().enumerate() {
        let _ = writeln!(out, "  {lo} <= {} <= {hi}", var_name(&model.var_ids[j]));
    }
    out.push_str("end\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{build_lambdacc_instance, Clustering, Graph, LambdaParams};

    const TOL: f64 = 1e-7;

    fn conflict_triangle() -> SignedGraph<f64> {
        SignedGraph::with_pairs(
            3,
            &[(0, 1, 0.5, 0.0), (0, 2, 0.5, 0.0), (1, 2, 0.0, 0.5)],
        )
        .unwrap()
    }

    #[test]
    fn single_negative_pair_optimum_is_zero() {
        let sg = SignedGraph::with_pairs(2, &[(0, 1, 0.0, 0.4)]).unwrap();
        let model = build_cc_lp(&sg);
        assert_eq!(model.num_vars, 1);
        assert!(model.constraints.is_empty());
        let sol = solve_lp(&model, TOL).unwrap();
        assert_eq!(sol.status, LpStatus::Optimal);
        assert!((sol.x[0] - 1.0).abs() < 1e-6);
        assert!(sol.objective_value.abs() < 1e-6);
    }

    #[test]
    fn conflict_triangle_optimum_is_half() {
        let model = build_cc_lp(&conflict_triangle());
        let sol = solve_lp(&model, TOL).unwrap();
        assert_eq!(sol.status, LpStatus::Optimal);
        assert!((sol.objective_value - 0.5).abs() < 1e-6);

        // independent oracle: coarse grid over the metric polytope
        let mut best = f64::INFINITY;
        let steps = 20;
        for a in 0..=steps {
            for b in 0..=steps {
                for c in 0..=steps {
                    let x = [a as f64 / steps as f64, b as f64 / steps as f64, c as f64 / steps as f64];
                    if check_triangle_feasible(&x, 3, 1e-12).is_empty() {
                        best = best.min(model.objective_at(&x));
                    }
                }
            }
        }
        assert!((best - 0.5).abs() < 1e-9);
    }

    #[test]
    fn all_positive_instance_optimum_is_zero() {
        let g = Graph::complete(4);
        let sg = build_lambdacc_instance(&g, &LambdaParams::new(0.3).unwrap());
        let sol = solve_lp(&build_cc_lp(&sg), TOL).unwrap();
        assert_eq!(sol.status, LpStatus::Optimal);
        assert!(sol.objective_value.abs() < 1e-6);
        assert!(sol.x.iter().all(|&v| v.abs() < 1e-6));
    }

    #[test]
    fn motif_lp_single_edges() {
        let positive = SignedHypergraph::new(3, 3, vec![(vec![0, 1, 2], 1.0, 0.0)]).unwrap();
        let sol = solve_lp(&build_motif_lp(&positive), TOL).unwrap();
        assert!(sol.objective_value.abs() < 1e-6);
        assert!(sol.x.iter().all(|&v| v.abs() < 1e-6));

        let negative = SignedHypergraph::new(3, 3, vec![(vec![0, 1, 2], 0.0, 1.0)]).unwrap();
        let sol = solve_lp(&build_motif_lp(&negative), TOL).unwrap();
        assert!(sol.objective_value.abs() < 1e-6);
        // split variable must reach 1, which forces pair variables up
        assert!((sol.x[3] - 1.0).abs() < 1e-6);
    }

    #[test]
    fn lp_objective_matches_objective_at_integral_points() {
        let h = SignedHypergraph::new(
            3,
            4,
            vec![(vec![0, 1, 2], 1.0, 0.0), (vec![0, 1, 3], 0.0, 1.0)],
        )
        .unwrap();
        let model = build_motif_lp(&h);
        for labels in [vec![0, 0, 0, 0], vec![0, 0, 1, 1], vec![0, 1, 2, 3], vec![0, 0, 0, 1]] {
            let c = Clustering::from_labels(labels);
            let mut point: Vec<f64> = c.pair_indicators();
            for edge in h.hyperedges() {
                point.push(if c.splits(&edge.nodes) { 1.0 } else { 0.0 });
            }
            let direct = crate::instances::motif_objective(&h, &c).unwrap();
            assert!((model.objective_at(&point) - direct).abs() < 1e-12);
            assert!(model.violations_at(&point, 1e-9).is_empty());
        }
    }

    #[test]
    fn mixed_lp_degenerate_levels() {
        let pairs = SignedHypergraph::new(
            2,
            4,
            vec![(vec![0, 1], 0.5, 0.0), (vec![2, 3], 0.0, 0.5), (vec![0, 2], 0.5, 0.0)],
        )
        .unwrap();
        let triples = SignedHypergraph::new(
            3,
            4,
            vec![(vec![0, 1, 2], 1.0, 0.0), (vec![1, 2, 3], 0.0, 1.0)],
        )
        .unwrap();

        // only level 2 active: same shape and optimum as the pairwise LP
        let only2 =
            MixedMotifInstance::new(vec![pairs.clone(), triples.clone()], vec![(2, 1.0)])
                .unwrap();
        let mixed_model = build_mixed_lp(&only2);
        assert_eq!(mixed_model.num_vars, pair_count(4));
        let mut sg = SignedGraph::new(4);
        sg.set_pair(0, 1, 0.5, 0.0).unwrap();
        sg.set_pair(2, 3, 0.0, 0.5).unwrap();
        sg.set_pair(0, 2, 0.5, 0.0).unwrap();
        let cc_model = build_cc_lp(&sg);
        assert_eq!(mixed_model.constraints.len(), cc_model.constraints.len());
        let a = solve_lp(&mixed_model, TOL).unwrap();
        let b = solve_lp(&cc_model, TOL).unwrap();
        assert!((a.objective_value - b.objective_value).abs() < 1e-6);

        // only level 3 active: same as the plain motif LP
        let only3 =
            MixedMotifInstance::new(vec![pairs.clone(), triples.clone()], vec![(3, 1.0)])
                .unwrap();
        let m3 = build_mixed_lp(&only3);
        let motif = build_motif_lp(&triples);
        assert_eq!(m3.num_vars, motif.num_vars);
        assert_eq!(m3.constraints.len(), motif.constraints.len());
        let a = solve_lp(&m3, TOL).unwrap();
        let b = solve_lp(&motif, TOL).unwrap();
        assert!((a.objective_value - b.objective_value).abs() < 1e-6);

        // both levels: integral points evaluate to the mixed objective
        let both = MixedMotifInstance::new(
            vec![pairs.clone(), triples.clone()],
            vec![(2, 1.0), (3, 1.0)],
        )
        .unwrap();
        let model = build_mixed_lp(&both);
        for labels in [vec![0, 0, 0, 0], vec![0, 1, 0, 1], vec![0, 0, 1, 1]] {
            let c = Clustering::from_labels(labels);
            let mut point: Vec<f64> = c.pair_indicators();
            for edge in triples.hyperedges() {
                point.push(if c.splits(&edge.nodes) { 1.0 } else { 0.0 });
            }
            let direct = crate::instances::mixed_motif_objective(&both, &c).unwrap();
            assert!((model.objective_at(&point) - direct).abs() < 1e-12);
        }
    }

    #[test]
    fn solver_basic_contracts() {
        // minimize x subject to x >= 0.3
        let model = LpModel::<f64> {
            num_vars: 1,
            objective: vec![1.0],
            constant: 0.0,
            constraints: vec![Constraint {
                coeffs: vec![(0, 1.0)],
                relation: Relation::Ge,
                rhs: 0.3,
            }],
            bounds: vec![(0.0, 1.0)],
            var_ids: vec![VarId::Pair(0, 1)],
        };
        let sol = solve_lp(&model, TOL).unwrap();
        assert_eq!(sol.status, LpStatus::Optimal);
        assert!((sol.x[0] - 0.3).abs() < 1e-6);

        // no constraints: each variable sits at its favorable bound
        let free = LpModel::<f64> {
            num_vars: 2,
            objective: vec![1.0, -2.0],
            constant: 0.25,
            constraints: vec![],
            bounds: vec![(0.0, 1.0), (0.0, 1.0)],
            var_ids: vec![VarId::Pair(0, 1), VarId::Pair(0, 2)],
        };
        let sol = solve_lp(&free, TOL).unwrap();
        assert_eq!(sol.status, LpStatus::Optimal);
        assert!(sol.x[0].abs() < 1e-9);
        assert!((sol.x[1] - 1.0).abs() < 1e-9);
        assert!((sol.objective_value + 1.75).abs() < 1e-9);
    }

    #[test]
    fn solver_detects_infeasible_and_unbounded() {
        let infeasible = LpModel::<f64> {
            num_vars: 1,
            objective: vec![1.0],
            constant: 0.0,
            constraints: vec![Constraint {
                coeffs: vec![(0, 1.0)],
                relation: Relation::Ge,
                rhs: 2.0,
            }],
            bounds: vec![(0.0, 1.0)],
            var_ids: vec![VarId::Pair(0, 1)],
        };
        assert_eq!(solve_lp(&infeasible, TOL).unwrap().status, LpStatus::Infeasible);

        let unbounded = LpModel::<f64> {
            num_vars: 1,
            objective: vec![-1.0],
            constant: 0.0,
            constraints: vec![],
            bounds: vec![(0.0, f64::INFINITY)],
            var_ids: vec![VarId::Pair(0, 1)],
        };
        assert_eq!(solve_lp(&unbounded, TOL).unwrap().status, LpStatus::Unbounded);
    }

    #[test]
    fn solver_handles_equality_rows() {
        // minimize x + y subject to x + y = 1, x - y >= -0.2
        let model = LpModel::<f64> {
            num_vars: 2,
            objective: vec![2.0, 1.0],
            constant: 0.0,
            constraints: vec![
                Constraint { coeffs: vec![(0, 1.0), (1, 1.0)], relation: Relation::Eq, rhs: 1.0 },
                Constraint { coeffs: vec![(0, 1.0), (1, -1.0)], relation: Relation::Ge, rhs: -0.2 },
            ],
            bounds: vec![(0.0, 1.0), (0.0, 1.0)],
            var_ids: vec![VarId::Pair(0, 1), VarId::Pair(0, 2)],
        };
        let sol = solve_lp(&model, TOL).unwrap();
        assert_eq!(sol.status, LpStatus::Optimal);
        // optimum pushes y up and x down until x - y = -0.2
        assert!((sol.x[0] - 0.4).abs() < 1e-6);
        assert!((sol.x[1] - 0.6).abs() < 1e-6);
        assert!((sol.objective_value - 1.4).abs() < 1e-6);
    }

    #[test]
    fn solver_is_deterministic() {
        let model = build_cc_lp(&conflict_triangle());
        let a = solve_lp(&model, TOL).unwrap();
        let b = solve_lp(&model, TOL).unwrap();
        assert_eq!(a.x, b.x);
        assert_eq!(a.objective_value, b.objective_value);
    }

    #[test]
    fn triangle_check_flags_violations() {
        let indicators: Vec<f64> =
            Clustering::from_labels(vec![0, 1, 0, 2]).pair_indicators();
        assert!(check_triangle_feasible(&indicators, 4, 1e-9).is_empty());
        let bad = [1.0, 0.0, 0.0];
        assert_eq!(check_triangle_feasible(&bad, 3, 1e-9), vec![(0, 1, 2)]);
    }

    #[test]
    fn dump_mentions_every_section() {
        let model = build_cc_lp(&conflict_triangle());
        let text = dump_lp(&model);
        assert!(text.contains("minimize"));
        assert!(text.contains("subject to"));
        assert!(text.contains("bounds"));
        assert!(text.contains("x_0_1"));
        assert_eq!(text.lines().count(), 2 + 1 + model.constraints.len() + 1 + 3 + 1);
    }

    #[test]
    fn cc_lp_solves_in_f32() {
        let sg = SignedGraph::<f32>::with_pairs(
            3,
            &[(0, 1, 0.5, 0.0), (0, 2, 0.5, 0.0), (1, 2, 0.0, 0.5)],
        )
        .unwrap();
        let sol = solve_lp(&build_cc_lp(&sg), 1e-4f32).unwrap();
        assert_eq!(sol.status, LpStatus::Optimal);
        assert!((sol.objective_value - 0.5).abs() < 1e-3);
    }
}
