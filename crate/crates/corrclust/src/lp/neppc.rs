//! Path-cycle LP for the lambda weighting, solved by lazy constraint
//! generation.
//!
//! A constraint couples a non-edge to a path of edges joining its
//! endpoints: the non-edge variable may not exceed the path's total
//! length. Enumerating all paths is exponential, so [`solve_neppc`]
//! alternates solving a relaxed model with a shortest-path separation
//! oracle that emits the most violated constraint.

use super::{Constraint, LpModel, LpSolution, LpStatus, Relation, VarId};
use crate::error::{Error, Result};
use crate::instances::{pair_count, pair_index, pair_iter, Graph, LambdaParams};
use crate::scalar::Scalar;

/// One path-cycle constraint: `positive_path` walks edges of the graph
/// from one endpoint of `negative_pair` to the other.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NeppcConstraint {
    pub negative_pair: (usize, usize),
    pub positive_path: Vec<usize>,
}

impl NeppcConstraint {
    pub fn new(g: &Graph, positive_path: Vec<usize>) -> Result<Self> {
        if positive_path.len() < 3 {
            return Err(Error::Input(
                "a path-cycle needs at least two edges and a non-edge".into(),
            ));
        }
        for w in positive_path.windows(2) {
            if !g.has_edge(w[0], w[1]) {
                return Err(Error::Input(format!(
                    "({}, {}) along the path is not an edge",
                    w[0], w[1]
                )));
            }
        }
        let mut sorted = positive_path.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Input("path repeats a node".into()));
        }
        let first = *positive_path.first().unwrap();
        let last = *positive_path.last().unwrap();
        if g.has_edge(first, last) {
            return Err(Error::Input(format!(
                "endpoints ({first}, {last}) form an edge, not a non-edge"
            )));
        }
        let negative_pair = if first < last { (first, last) } else { (last, first) };
        Ok(Self { negative_pair, positive_path })
    }
}

/// Relaxed path-cycle model over all pairs: edges carry cost
/// `1 - lambda` and no upper bound; non-edges carry cost `lambda (1 - x)`
/// and are capped at 1. Only the supplied constraints are present.
pub fn build_neppc_lp_relaxed<T: Scalar>(
    g: &Graph,
    p: &LambdaParams<T>,
    active: &[NeppcConstraint],
) -> Result<LpModel<T>> {
    if !g.is_connected() {
        return Err(Error::Input(
            "graph is disconnected; solve each connected component separately".into(),
        ));
    }
    let n = g.n();
    let lambda = p.lambda();
    let mut model = LpModel {
        num_vars: pair_count(n),
        objective: Vec::with_capacity(pair_count(n)),
        constant: T::zero(),
        constraints: Vec::new(),
        bounds: Vec::with_capacity(pair_count(n)),
        var_ids: Vec::with_capacity(pair_count(n)),
    };
    for (i, j) in pair_iter(n) {
        model.var_ids.push(VarId::Pair(i, j));
        if g.has_edge(i, j) {
            model.objective.push(T::one() - lambda);
            model.bounds.push((T::zero(), T::infinity()));
        } else {
            model.objective.push(-lambda);
            model.bounds.push((T::zero(), T::one()));
            model.constant = model.constant + lambda;
        }
    }
    let one = T::one();
    for c in active {
        let (a, b) = c.negative_pair;
        let mut coeffs = vec![(pair_index(n, a, b), one)];
        for w in c.positive_path.windows(2) {
            coeffs.push((pair_index(n, w[0], w[1]), -one));
        }
        model.constraints.push(Constraint { coeffs, relation: Relation::Le, rhs: T::zero() });
    }
    Ok(model)
}

/// Deterministic dense Dijkstra under nonnegative per-edge lengths taken
/// from a pairwise vector. Returns distances and parents.
fn shortest_paths<T: Scalar>(g: &Graph, x: &[T], src: usize) -> (Vec<T>, Vec<usize>) {
    let n = g.n();
    let mut dist = vec![T::infinity(); n];
    let mut parent = vec![usize::MAX; n];
    let mut done = vec![false; n];
    dist[src] = T::zero();
    for _ in 0..n {
        let mut u = usize::MAX;
        let mut best = T::infinity();
        for v in 0..n {
            if !done[v] && dist[v] < best {
                best = dist[v];
                u = v;
            }
        }
        if u == usize::MAX {
            break;
        }
        done[u] = true;
        for &v in g.neighbors(u) {
            if done[v] {
                continue;
            }
            let len = x[pair_index(n, u, v)].max(T::zero());
            let candidate = dist[u] + len;
            if candidate < dist[v] {
                dist[v] = candidate;
                parent[v] = u;
            }
        }
    }
    (dist, parent)
}

/// Most violated path-cycle constraint at the point `x` (pairwise vector
/// in canonical order), or `None` if every non-edge satisfies its
/// shortest-path bound within `tol`.
pub fn neppc_separation<T: Scalar>(g: &Graph, x: &[T], tol: T) -> Option<NeppcConstraint> {
    let n = g.n();
    let mut best: Option<(T, NeppcConstraint)> = None;
    for s in 0..n {
        let (dist, parent) = shortest_paths(g, x, s);
        for t in s + 1..n {
            if g.has_edge(s, t) {
                continue;
            }
            let violation = x[pair_index(n, s, t)] - dist[t];
            if violation <= tol {
                continue;
            }
            if best.as_ref().map_or(true, |(v, _)| violation > *v) {
                let mut path = vec![t];
                let mut cur = t;
                while cur != s {
                    cur = parent[cur];
                    path.push(cur);
                }
                path.reverse();
                best = Some((
                    violation,
                    NeppcConstraint { negative_pair: (s, t), positive_path: path },
                ));
            }
        }
    }
    best.map(|(_, c)| c)
}

/// Result of the cutting-plane loop: the final solution, the active
/// constraint pool, and the relaxation optimum after each round.
#[derive(Clone, Debug)]
pub struct NeppcSolve<T> {
    pub solution: LpSolution<T>,
    pub active: Vec<NeppcConstraint>,
    pub objective_trace: Vec<T>,
}

/// Cutting-plane solve of the path-cycle LP: start from the
/// unconstrained relaxation, repeatedly add the most violated
/// constraint until the separation oracle is satisfied.
pub fn solve_neppc<T: Scalar>(g: &Graph, p: &LambdaParams<T>, tol: T) -> Result<NeppcSolve<T>> {
    let sep_tol = tol * T::of(10.0);
    let mut active: Vec<NeppcConstraint> = Vec::new();
    let mut trace = Vec::new();
    let round_cap = 200 + 20 * g.n() * g.n();
    for _ in 0..round_cap {
        let model = build_neppc_lp_relaxed(g, p, &active)?;
        let solution = super::solve_lp(&model, tol)?;
        if solution.status != LpStatus::Optimal {
            return Ok(NeppcSolve { solution, active, objective_trace: trace });
        }
        trace.push(solution.objective_value);
        match neppc_separation(g, &solution.x, sep_tol) {
            None => return Ok(NeppcSolve { solution, active, objective_trace: trace }),
            Some(constraint) => {
                if active.contains(&constraint) {
                    return Err(Error::Solver(
                        "separation re-emitted an active constraint; tolerances disagree".into(),
                    ));
                }
                active.push(constraint);
            }
        }
    }
    let model = build_neppc_lp_relaxed(g, p, &active)?;
    let mut solution = super::solve_lp(&model, tol)?;
    solution.status = LpStatus::IterationLimit;
    Ok(NeppcSolve { solution, active, objective_trace: trace })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lp::{build_cc_lp, solve_lp};
    use crate::instances::build_lambdacc_instance;

    const TOL: f64 = 1e-7;

    #[test]
    fn relaxed_model_without_constraints_sends_nonedges_to_one() {
        let g = Graph::path(3);
        let p = LambdaParams::new(0.5).unwrap();
        let model = build_neppc_lp_relaxed::<f64>(&g, &p, &[]).unwrap();
        let sol = solve_lp(&model, TOL).unwrap();
        assert_eq!(sol.status, LpStatus::Optimal);
        assert!(sol.objective_value.abs() < 1e-6);
        // edge variables at 0, the non-edge variable at 1
        assert!(sol.x[pair_index(3, 0, 1)].abs() < 1e-6);
        assert!(sol.x[pair_index(3, 1, 2)].abs() < 1e-6);
        assert!((sol.x[pair_index(3, 0, 2)] - 1.0).abs() < 1e-6);
    }

    #[test]
    fn relaxed_objective_at_zero_counts_nonedges() {
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let p = LambdaParams::new(0.3).unwrap();
        let model = build_neppc_lp_relaxed::<f64>(&g, &p, &[]).unwrap();
        let zeros = vec![0.0; model.num_vars];
        let expected = 0.3 * g.non_edges().len() as f64;
        assert!((model.objective_at(&zeros) - expected).abs() < 1e-12);
    }

    #[test]
    fn disconnected_input_is_rejected() {
        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        let p = LambdaParams::new(0.5).unwrap();
        assert!(build_neppc_lp_relaxed::<f64>(&g, &p, &[]).is_err());
    }

    #[test]
    fn single_constraint_on_path_gives_half() {
        let g = Graph::path(3);
        let p = LambdaParams::new(0.5).unwrap();
        let c = NeppcConstraint::new(&g, vec![0, 1, 2]).unwrap();
        assert_eq!(c.negative_pair, (0, 2));
        let model = build_neppc_lp_relaxed::<f64>(&g, &p, &[c]).unwrap();
        let sol = solve_lp(&model, TOL).unwrap();
        assert!((sol.objective_value - 0.5).abs() < 1e-6);
    }

    #[test]
    fn constraint_validation() {
        let g = Graph::path(4);
        assert!(NeppcConstraint::new(&g, vec![0, 1]).is_err());
        assert!(NeppcConstraint::new(&g, vec![0, 2, 3]).is_err()); // (0,2) not an edge
        assert!(NeppcConstraint::new(&g, vec![0, 1, 2]).is_ok());
        assert!(NeppcConstraint::new(&g, vec![1, 2, 3]).is_ok());
        // endpoints joined by an edge do not form a path cycle
        assert!(NeppcConstraint::new(&Graph::complete(3), vec![0, 1, 2]).is_err());
    }

    #[test]
    fn separation_finds_zero_length_path() {
        let g = Graph::path(3);
        let mut x = vec![0.0; 3];
        x[pair_index(3, 0, 2)] = 1.0;
        let found = neppc_separation(&g, &x, 1e-9).unwrap();
        assert_eq!(found.negative_pair, (0, 2));
        assert_eq!(found.positive_path, vec![0, 1, 2]);
        // a feasible point separates nothing
        let feasible = vec![0.5, 0.5, 1.0];
        assert!(neppc_separation(&g, &feasible, 1e-9).is_none());
    }

    #[test]
    fn cutting_plane_on_path_matches_triangle_lp() {
        let g = Graph::path(3);
        let p = LambdaParams::new(0.5).unwrap();
        let run = solve_neppc(&g, &p, TOL).unwrap();
        assert_eq!(run.solution.status, LpStatus::Optimal);
        assert!((run.solution.objective_value - 0.5).abs() < 1e-6);
        // relaxation optima never decrease as constraints accumulate
        for w in run.objective_trace.windows(2) {
            assert!(w[1] >= w[0] - 1e-9);
        }
        let sg = build_lambdacc_instance(&g, &p);
        let triangle = solve_lp(&build_cc_lp(&sg), TOL).unwrap();
        assert!((run.solution.objective_value - triangle.objective_value).abs() < 1e-5);
    }

    #[test]
    fn complete_graph_has_no_constraints() {
        let g = Graph::complete(4);
        let p = LambdaParams::new(0.4).unwrap();
        let run = solve_neppc(&g, &p, TOL).unwrap();
        assert_eq!(run.solution.status, LpStatus::Optimal);
        assert!(run.active.is_empty());
        assert!(run.solution.objective_value.abs() < 1e-6);
    }
}
