//! Instance and clustering data model plus objective evaluation.
//!
//! Holds the unsigned input graph, the pairwise signed graph (general
//! weighted correlation clustering), the k-uniform signed hypergraph
//! (motif clustering), the mixed multi-size instance, and the clustering
//! type with its induced separation indicators. All instances are
//! immutable after construction and objective evaluation is pure.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Number of unordered node pairs over `n` nodes.
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Canonical index of the unordered pair `(i, j)` with `i < j < n`.
///
/// Pairs are ordered `(0,1), (0,2), ..., (0,n-1), (1,2), ...`; every
/// pairwise array in this crate uses this layout.
pub fn pair_index(n: usize, i: usize, j: usize) -> usize {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    debug_assert!(i < j && j < n);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

/// Iterator over all unordered pairs `(i, j)` with `i < j < n` in
/// canonical order.
pub fn pair_iter(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
}

/// Unsigned simple graph on nodes `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    edge_mask: Vec<bool>,
}

impl Graph {
    /// Build a graph from an edge list. Rejects self-loops, duplicate
    /// edges and endpoints `>= n`.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut mask = vec![false; pair_count(n)];
        let mut sorted = Vec::with_capacity(edges.len());
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u == v {
                return Err(Error::Input(format!("self-loop at node {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::Input(format!("edge ({u}, {v}) out of range for n = {n}")));
            }
            let (a, b) = if u < v { (u, v) } else { (v, u) };
            let idx = pair_index(n, a, b);
            if mask[idx] {
                return Err(Error::Input(format!("duplicate edge ({a}, {b})")));
            }
            mask[idx] = true;
            sorted.push((a, b));
            adj[a].push(b);
            adj[b].push(a);
        }
        sorted.sort_unstable();
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Self { n, edges: sorted, adj, edge_mask: mask })
    }

    /// Complete graph on `n` nodes.
    pub fn complete(n: usize) -> Self {
        let edges: Vec<_> = pair_iter(n).collect();
        Self::new(n, &edges).expect("complete graph is valid")
    }

    /// Path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
        Self::new(n, &edges).expect("path graph is valid")
    }

    /// Cycle `0 - 1 - ... - (n-1) - 0` (requires `n >= 3`).
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 nodes");
        let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        edges.push((0, n - 1));
        Self::new(n, &edges).expect("cycle graph is valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as sorted `(i, j)` pairs with `i < j`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if u == v || u >= self.n || v >= self.n {
            return false;
        }
        self.edge_mask[pair_index(self.n, u, v)]
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    /// Non-edges as sorted `(i, j)` pairs with `i < j`.
    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        pair_iter(self.n).filter(|&(i, j)| !self.has_edge(i, j)).collect()
    }

    pub fn is_regular(&self, d: usize) -> bool {
        (0..self.n).all(|u| self.degree(u) == d)
    }

    /// Unweighted BFS distances from `src`; `None` for unreachable nodes.
    pub fn bfs_distances(&self, src: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[src] = Some(0);
        let mut queue = std::collections::VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &v in &self.adj[u] {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.bfs_distances(0).iter().all(|d| d.is_some())
    }

    /// BFS 2-coloring test.
    pub fn is_bipartite(&self) -> bool {
        let mut color = vec![None; self.n];
        for start in 0..self.n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for &v in &self.adj[u] {
                    match color[v] {
                        None => {
                            color[v] = Some(!cu);
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }
}

/// Parameters of the lambda edge-weighting scheme.
///
/// `lambda` must lie in the open interval (0, 1). `epsilon_perturb` is
/// only used by the gap harness when nudging lambda above the scaled
/// sparsest cut value.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LambdaParams<T> {
    lambda: T,
    epsilon_perturb: T,
}

impl<T: Scalar> LambdaParams<T> {
    pub fn new(lambda: T) -> Result<Self> {
        Self::with_perturbation(lambda, T::zero())
    }

    pub fn with_perturbation(lambda: T, epsilon_perturb: T) -> Result<Self> {
        if !(lambda > T::zero() && lambda < T::one()) {
            return Err(Error::Parameter(format!(
                "lambda must lie in (0, 1), got {lambda}"
            )));
        }
        if epsilon_perturb < T::zero() {
            return Err(Error::Parameter(format!(
                "epsilon_perturb must be nonnegative, got {epsilon_perturb}"
            )));
        }
        Ok(Self { lambda, epsilon_perturb })
    }

    pub fn lambda(&self) -> T {
        self.lambda
    }

    pub fn epsilon_perturb(&self) -> T {
        self.epsilon_perturb
    }
}

/// Pairwise signed graph: every unordered pair carries a nonnegative
/// similarity weight `w_plus` and dissimilarity weight `w_minus`.
///
/// Storage is dense (all `C(n,2)` pairs); unset pairs hold `(0, 0)`,
/// which is legal and contributes nothing to the objective.
#[derive(Clone, Debug, PartialEq)]
pub struct SignedGraph<T> {
    n: usize,
    w_plus: Vec<T>,
    w_minus: Vec<T>,
}

impl<T: Scalar> SignedGraph<T> {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            w_plus: vec![T::zero(); pair_count(n)],
            w_minus: vec![T::zero(); pair_count(n)],
        }
    }

    pub fn with_pairs(n: usize, pairs: &[(usize, usize, T, T)]) -> Result<Self> {
        let mut sg = Self::new(n);
        for &(i, j, wp, wm) in pairs {
            sg.set_pair(i, j, wp, wm)?;
        }
        Ok(sg)
    }

    pub fn set_pair(&mut self, i: usize, j: usize, w_plus: T, w_minus: T) -> Result<()> {
        if i == j || i >= self.n || j >= self.n {
            return Err(Error::Input(format!(
                "pair ({i}, {j}) out of range for n = {}",
                self.n
            )));
        }
        if w_plus < T::zero() || w_minus < T::zero() {
            return Err(Error::Input(format!(
                "pair ({i}, {j}) has a negative weight ({w_plus}, {w_minus})"
            )));
        }
        let idx = pair_index(self.n, i, j);
        self.w_plus[idx] = w_plus;
        self.w_minus[idx] = w_minus;
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `(w_plus, w_minus)` of the unordered pair `(i, j)`.
    pub fn weights(&self, i: usize, j: usize) -> (T, T) {
        let idx = pair_index(self.n, i, j);
        (self.w_plus[idx], self.w_minus[idx])
    }

    /// All pairs in canonical order as `(i, j, w_plus, w_minus)`.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize, T, T)> + '_ {
        pair_iter(self.n).map(move |(i, j)| {
            let idx = pair_index(self.n, i, j);
            (i, j, self.w_plus[idx], self.w_minus[idx])
        })
    }

    pub fn total_negative_weight(&self) -> T {
        self.w_minus.iter().copied().sum()
    }

    /// Detects the lambda weighting: returns `Some(lambda)` iff every
    /// pair is either `(1 - lambda, 0)` or `(0, lambda)` for a single
    /// consistent `lambda` in (0, 1), within `tol`.
    pub fn lambda_weighting(&self, tol: T) -> Option<T> {
        let mut lambda: Option<T> = None;
        let mut check = |candidate: T| -> bool {
            match lambda {
                None => {
                    lambda = Some(candidate);
                    true
                }
                Some(current) => (current - candidate).abs() <= tol,
            }
        };
        for (_, _, wp, wm) in self.pairs() {
            let positive = wm.abs() <= tol && wp > tol;
            let negative = wp.abs() <= tol && wm > tol;
            let ok = if positive {
                check(T::one() - wp)
            } else if negative {
                check(wm)
            } else {
                false
            };
            if !ok {
                return None;
            }
        }
        lambda.filter(|&l| l > T::zero() && l < T::one())
    }
}

/// One k-tuple with its weight pair. `nodes` is sorted ascending.
#[derive(Clone, Debug, PartialEq)]
pub struct Hyperedge<T> {
    pub nodes: Vec<usize>,
    pub w_plus: T,
    pub w_minus: T,
}

/// k-uniform signed hypergraph. A clustering pays `w_plus` for each
/// tuple it splits and `w_minus` for each tuple it keeps intact.
///
/// Hyperedges are stored sorted lexicographically by node tuple, which
/// makes storage canonical and duplicate detection cheap.
#[derive(Clone, Debug, PartialEq)]
pub struct SignedHypergraph<T> {
    k: usize,
    n: usize,
    hyperedges: Vec<Hyperedge<T>>,
    probability_constrained: bool,
    unweighted: bool,
}

impl<T: Scalar> SignedHypergraph<T> {
    pub fn new(k: usize, n: usize, edges: Vec<(Vec<usize>, T, T)>) -> Result<Self> {
        if k < 2 {
            return Err(Error::Parameter(format!("tuple size k must be >= 2, got {k}")));
        }
        let mut hyperedges = Vec::with_capacity(edges.len());
        for (mut nodes, w_plus, w_minus) in edges {
            nodes.sort_unstable();
            if nodes.len() != k {
                return Err(Error::Input(format!(
                    "tuple {nodes:?} has arity {} but k = {k}",
                    nodes.len()
                )));
            }
            if nodes.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::Input(format!("tuple {nodes:?} repeats a node")));
            }
            if *nodes.last().unwrap() >= n {
                return Err(Error::Input(format!("tuple {nodes:?} out of range for n = {n}")));
            }
            if w_plus < T::zero() || w_minus < T::zero() {
                return Err(Error::Input(format!(
                    "tuple {nodes:?} has a negative weight ({w_plus}, {w_minus})"
                )));
            }
            hyperedges.push(Hyperedge { nodes, w_plus, w_minus });
        }
        hyperedges.sort_by(|a, b| a.nodes.cmp(&b.nodes));
        if hyperedges.windows(2).any(|w| w[0].nodes == w[1].nodes) {
            let dup = hyperedges
                .windows(2)
                .find(|w| w[0].nodes == w[1].nodes)
                .map(|w| w[0].nodes.clone())
                .unwrap();
            return Err(Error::Input(format!("duplicate tuple {dup:?}")));
        }

        let prob_tol = T::of(1e-9).max(T::epsilon() * T::of(4.0));
        let probability_constrained = !hyperedges.is_empty()
            && hyperedges
                .iter()
                .all(|e| (e.w_plus + e.w_minus - T::one()).abs() <= prob_tol);
        let unweighted = !hyperedges.is_empty()
            && hyperedges.iter().all(|e| {
                (e.w_plus == T::one() && e.w_minus == T::zero())
                    || (e.w_plus == T::zero() && e.w_minus == T::one())
            });

        Ok(Self { k, n, hyperedges, probability_constrained, unweighted })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn hyperedges(&self) -> &[Hyperedge<T>] {
        &self.hyperedges
    }

    /// True iff `w_plus + w_minus = 1` (within 1e-9) for every hyperedge.
    pub fn probability_constrained(&self) -> bool {
        self.probability_constrained
    }

    /// True iff every weight pair is `(0, 1)` or `(1, 0)` exactly.
    pub fn unweighted(&self) -> bool {
        self.unweighted
    }

    /// Weight pair of a tuple, if present. The query tuple need not be
    /// sorted.
    pub fn weight_of(&self, tuple: &[usize]) -> Option<(T, T)> {
        let mut key = tuple.to_vec();
        key.sort_unstable();
        self.hyperedges
            .binary_search_by(|e| e.nodes.as_slice().cmp(key.as_slice()))
            .ok()
            .map(|idx| (self.hyperedges[idx].w_plus, self.hyperedges[idx].w_minus))
    }

    /// True iff the instance is unweighted and contains all `C(n, k)`
    /// tuples.
    pub fn complete_unweighted(&self) -> bool {
        self.unweighted && self.hyperedges.len() == binomial(self.n, self.k) as usize
    }

    /// Detects the lambda weighting on hyperedges: `Some(lambda)` iff
    /// every tuple is `(1 - lambda, 0)` or `(0, lambda)` for one
    /// consistent `lambda` in (0, 1), within `tol`.
    pub fn lambda_weighting(&self, tol: T) -> Option<T> {
        let mut lambda: Option<T> = None;
        for e in &self.hyperedges {
            let candidate = if e.w_minus.abs() <= tol && e.w_plus > tol {
                T::one() - e.w_plus
            } else if e.w_plus.abs() <= tol && e.w_minus > tol {
                e.w_minus
            } else {
                return None;
            };
            match lambda {
                None => lambda = Some(candidate),
                Some(current) => {
                    if (current - candidate).abs() > tol {
                        return None;
                    }
                }
            }
        }
        lambda.filter(|&l| l > T::zero() && l < T::one())
    }
}

/// Exact binomial coefficient; saturating at u128 range is irrelevant at
/// desk scale.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Multi-size motif instance: one k-uniform level per tuple size `t`,
/// combined with nonnegative level weights `rho_t`.
#[derive(Clone, Debug)]
pub struct MixedMotifInstance<T> {
    n: usize,
    levels: BTreeMap<usize, SignedHypergraph<T>>,
    rho: BTreeMap<usize, T>,
}

impl<T: Scalar> MixedMotifInstance<T> {
    /// `rho` entries refer to levels by tuple size; a positive weight on
    /// a missing level is an input error.
    pub fn new(levels: Vec<SignedHypergraph<T>>, rho: Vec<(usize, T)>) -> Result<Self> {
        let mut level_map = BTreeMap::new();
        let mut n = None;
        for level in levels {
            match n {
                None => n = Some(level.n()),
                Some(existing) if existing != level.n() => {
                    return Err(Error::Input(format!(
                        "levels disagree on node count: {existing} vs {}",
                        level.n()
                    )));
                }
                _ => {}
            }
            if level_map.insert(level.k(), level).is_some() {
                return Err(Error::Input("duplicate level for one tuple size".into()));
            }
        }
        let n = n.ok_or_else(|| Error::Input("mixed instance needs at least one level".into()))?;
        let mut rho_map = BTreeMap::new();
        for (t, weight) in rho {
            if weight < T::zero() {
                return Err(Error::Parameter(format!("rho_{t} must be nonnegative")));
            }
            if weight > T::zero() && !level_map.contains_key(&t) {
                return Err(Error::Input(format!("rho_{t} > 0 but no level of size {t}")));
            }
            rho_map.insert(t, weight);
        }
        if !rho_map.values().any(|&w| w > T::zero()) {
            return Err(Error::Parameter("at least one rho_t must be positive".into()));
        }
        Ok(Self { n, levels: level_map, rho: rho_map })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn levels(&self) -> &BTreeMap<usize, SignedHypergraph<T>> {
        &self.levels
    }

    pub fn rho(&self, t: usize) -> T {
        self.rho.get(&t).copied().unwrap_or_else(T::zero)
    }

    /// Levels with positive weight, ascending by tuple size.
    pub fn active_levels(&self) -> impl Iterator<Item = (usize, &SignedHypergraph<T>, T)> + '_ {
        self.levels.iter().filter_map(move |(&t, level)| {
            let w = self.rho(t);
            (w > T::zero()).then_some((t, level, w))
        })
    }

    /// Largest tuple size with positive weight.
    pub fn max_active_level(&self) -> usize {
        self.active_levels().map(|(t, _, _)| t).max().unwrap_or(2)
    }

    /// True iff every active level satisfies probability constraints.
    pub fn probability_constrained(&self) -> bool {
        self.active_levels().all(|(_, level, _)| level.probability_constrained())
    }
}

/// Node-to-cluster assignment. Induced indicators: a pair is separated
/// iff labels differ; a tuple is split iff any internal pair is
/// separated.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Clustering {
    labels: Vec<usize>,
}

impl Clustering {
    pub fn from_labels(labels: Vec<usize>) -> Self {
        Self { labels }
    }

    pub fn singletons(n: usize) -> Self {
        Self { labels: (0..n).collect() }
    }

    pub fn one_cluster(n: usize) -> Self {
        Self { labels: vec![0; n] }
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn separated(&self, i: usize, j: usize) -> bool {
        self.labels[i] != self.labels[j]
    }

    /// True iff some pair inside `nodes` is separated.
    pub fn splits(&self, nodes: &[usize]) -> bool {
        match nodes.first() {
            Some(&a) => nodes.iter().any(|&b| self.labels[b] != self.labels[a]),
            None => false,
        }
    }

    pub fn num_clusters(&self) -> usize {
        let mut seen = std::collections::BTreeSet::new();
        self.labels.iter().for_each(|&l| {
            seen.insert(l);
        });
        seen.len()
    }

    /// Canonical form: cluster ids relabeled contiguously from 0 in
    /// first-occurrence order. Two clusterings describe the same
    /// partition iff their normalized forms are equal.
    pub fn normalized(&self) -> Clustering {
        let mut map = BTreeMap::new();
        let mut next = 0;
        let labels = self
            .labels
            .iter()
            .map(|&l| {
                *map.entry(l).or_insert_with(|| {
                    let id = next;
                    next += 1;
                    id
                })
            })
            .collect();
        Clustering { labels }
    }

    /// Induced 0/1 separation indicators over all pairs in canonical
    /// order.
    pub fn pair_indicators<T: Scalar>(&self) -> Vec<T> {
        let n = self.n();
        pair_iter(n)
            .map(|(i, j)| if self.separated(i, j) { T::one() } else { T::zero() })
            .collect()
    }
}

/// A problem instance with an evaluable disagreement objective.
///
/// `cost_at_max_node` reports the cost of exactly the items (pairs or
/// tuples) whose highest-index node equals `node`; the exact solvers use
/// it to re-evaluate only the suffix that an enumeration step changed.
pub trait Objective<T: Scalar> {
    fn num_nodes(&self) -> usize;
    fn cost(&self, clustering: &Clustering) -> Result<T>;
    fn cost_at_max_node(&self, labels: &[usize], node: usize) -> T;
}

impl<T: Scalar> Objective<T> for SignedGraph<T> {
    fn num_nodes(&self) -> usize {
        self.n
    }

    fn cost(&self, clustering: &Clustering) -> Result<T> {
        if clustering.n() != self.n {
            return Err(Error::Input(format!(
                "clustering covers {} nodes but instance has {}",
                clustering.n(),
                self.n
            )));
        }
        let mut total = T::zero();
        for node in 0..self.n {
            total = total + self.cost_at_max_node(clustering.labels(), node);
        }
        Ok(total)
    }

    fn cost_at_max_node(&self, labels: &[usize], node: usize) -> T {
        let mut total = T::zero();
        for other in 0..node {
            let idx = pair_index(self.n, other, node);
            if labels[other] != labels[node] {
                total = total + self.w_plus[idx];
            } else {
                total = total + self.w_minus[idx];
            }
        }
        total
    }
}

impl<T: Scalar> Objective<T> for SignedHypergraph<T> {
    fn num_nodes(&self) -> usize {
        self.n
    }

    fn cost(&self, clustering: &Clustering) -> Result<T> {
        if clustering.n() != self.n {
            return Err(Error::Input(format!(
                "clustering covers {} nodes but instance has {}",
                clustering.n(),
                self.n
            )));
        }
        let mut total = T::zero();
        for e in &self.hyperedges {
            if clustering.splits(&e.nodes) {
                total = total + e.w_plus;
            } else {
                total = total + e.w_minus;
            }
        }
        Ok(total)
    }

    fn cost_at_max_node(&self, labels: &[usize], node: usize) -> T {
        let mut total = T::zero();
        for e in &self.hyperedges {
            if *e.nodes.last().unwrap() != node {
                continue;
            }
            let first = labels[e.nodes[0]];
            let split = e.nodes.iter().any(|&v| labels[v] != first);
            if split {
                total = total + e.w_plus;
            } else {
                total = total + e.w_minus;
            }
        }
        total
    }
}

impl<T: Scalar> Objective<T> for MixedMotifInstance<T> {
    fn num_nodes(&self) -> usize {
        self.n
    }

    fn cost(&self, clustering: &Clustering) -> Result<T> {
        let mut total = T::zero();
        for (_, level, weight) in self.active_levels() {
            total = total + weight * level.cost(clustering)?;
        }
        Ok(total)
    }

    fn cost_at_max_node(&self, labels: &[usize], node: usize) -> T {
        let mut total = T::zero();
        for (_, level, weight) in self.active_levels() {
            total = total + weight * level.cost_at_max_node(labels, node);
        }
        total
    }
}

/// Disagreement weight of a clustering on a signed graph: separated
/// pairs pay `w_plus`, intact pairs pay `w_minus`.
pub fn cc_objective<T: Scalar>(sg: &SignedGraph<T>, clustering: &Clustering) -> Result<T> {
    sg.cost(clustering)
}

/// Hyper-disagreement weight: split tuples pay `w_plus`, intact tuples
/// pay `w_minus`.
pub fn motif_objective<T: Scalar>(
    h: &SignedHypergraph<T>,
    clustering: &Clustering,
) -> Result<T> {
    h.cost(clustering)
}

/// Weighted sum of per-level hyper-disagreements.
pub fn mixed_motif_objective<T: Scalar>(
    m: &MixedMotifInstance<T>,
    clustering: &Clustering,
) -> Result<T> {
    m.cost(clustering)
}

/// Lambda weighting of an unsigned graph: edges become positive pairs of
/// weight `1 - lambda`, non-edges negative pairs of weight `lambda`.
pub fn build_lambdacc_instance<T: Scalar>(g: &Graph, p: &LambdaParams<T>) -> SignedGraph<T> {
    let lambda = p.lambda();
    let n = g.n();
    let mut sg = SignedGraph::new(n);
    for (i, j) in pair_iter(n) {
        let idx = pair_index(n, i, j);
        if g.has_edge(i, j) {
            sg.w_plus[idx] = T::one() - lambda;
        } else {
            sg.w_minus[idx] = lambda;
        }
    }
    sg
}

/// Lambda-weighted hypergraph built from a complete sign assignment:
/// positive tuples get `(1 - lambda, 0)`, negative tuples `(0, lambda)`.
#[derive(Clone, Debug)]
pub struct LambdaHypergraph<T> {
    pub hypergraph: SignedHypergraph<T>,
    /// The rounding guarantee is only established for `lambda >= 1/2`;
    /// below that the instance is still legal but flagged.
    pub guarantee_proven: bool,
}

pub fn build_lambda_hypergraph<T: Scalar>(
    signs: &[(Vec<usize>, bool)],
    n: usize,
    k: usize,
    p: &LambdaParams<T>,
) -> Result<LambdaHypergraph<T>> {
    let lambda = p.lambda();
    let edges = signs
        .iter()
        .map(|(nodes, positive)| {
            if *positive {
                (nodes.clone(), T::one() - lambda, T::zero())
            } else {
                (nodes.clone(), T::zero(), lambda)
            }
        })
        .collect();
    Ok(LambdaHypergraph {
        hypergraph: SignedHypergraph::new(k, n, edges)?,
        guarantee_proven: lambda >= T::of(0.5),
    })
}
