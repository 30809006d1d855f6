//! Simple undirected graphs with dense 0-based vertex indices.
//!
//! External string labels (the `v1`/`h2` names used in files and reports)
//! live in [`VertexLabeling`]; everything else works on indices so vertex
//! sets stay bitsets.

use std::collections::BTreeMap;
use std::collections::BTreeSet;

use thiserror::Error;

use crate::spectral::IntMatrix;
use crate::vset::{VertexSet, VERTEX_CAP};

/// Default order limit for [`are_isomorphic_bruteforce`]; factorial search
/// beyond this is rejected rather than attempted.
pub const DEFAULT_ISO_LIMIT: usize = 10;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph order {order} exceeds the vertex cap {cap}", cap = VERTEX_CAP)]
    OrderExceedsCap { order: usize },
    #[error("self-loop at vertex {v}")]
    SelfLoop { v: usize },
    #[error("vertex index {v} out of range for order {order}")]
    VertexOutOfRange { v: usize, order: usize },
    #[error("graphs have different orders ({left} vs {right})")]
    OrderMismatch { left: usize, right: usize },
    #[error("order {order} exceeds the isomorphism search limit {limit}")]
    OrderExceedsIsoLimit { order: usize, limit: usize },
    #[error("duplicate label {label:?}")]
    DuplicateLabel { label: String },
}

/// Shortest-path distance; pairs in different components are `Unreachable`.
///
/// The derived order puts every finite distance below `Unreachable`, which is
/// exactly the comparison the burning characterization needs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Distance {
    Finite(usize),
    Unreachable,
}

impl Distance {
    pub fn as_finite(&self) -> Option<usize> {
        match self {
            Distance::Finite(d) => Some(*d),
            Distance::Unreachable => None,
        }
    }
}

/// An undirected simple graph: no self-loops, no duplicate edges.
///
/// Immutable after construction; all queries are pure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    order: usize,
    edges: BTreeSet<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    nbr_sets: Vec<VertexSet>,
}

impl Graph {
    /// Builds a graph on `order` vertices from unordered index pairs.
    /// Duplicate pairs collapse (set semantics); self-loops are rejected.
    pub fn new(
        order: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Graph, GraphError> {
        if order > VERTEX_CAP {
            return Err(GraphError::OrderExceedsCap { order });
        }
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(GraphError::SelfLoop { v: u });
            }
            for w in [u, v] {
                if w >= order {
                    return Err(GraphError::VertexOutOfRange { v: w, order });
                }
            }
            set.insert((u.min(v), u.max(v)));
        }
        let mut adj = vec![Vec::new(); order];
        let mut nbr_sets = vec![VertexSet::EMPTY; order];
        for &(u, v) in &set {
            adj[u].push(v);
            adj[v].push(u);
            nbr_sets[u].insert(v);
            nbr_sets[v].insert(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            order,
            edges: set,
            adj,
            nbr_sets,
        })
    }

    pub fn empty(order: usize) -> Result<Graph, GraphError> {
        Graph::new(order, [])
    }

    /// Path `P_n` on vertices `0 — 1 — … — n-1`.
    pub fn path(n: usize) -> Result<Graph, GraphError> {
        Graph::new(n, (1..n).map(|i| (i - 1, i)))
    }

    /// Cycle `C_n` (requires `n ≥ 3`).
    pub fn cycle(n: usize) -> Result<Graph, GraphError> {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Result<Graph, GraphError> {
        Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
    }

    /// Star `K_{1,m}`: center 0, leaves `1..=m`.
    pub fn star(leaves: usize) -> Result<Graph, GraphError> {
        Graph::new(leaves + 1, (1..=leaves).map(|v| (0, v)))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Normalized edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn neighbor_set(&self, v: usize) -> VertexSet {
        self.nbr_sets[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::universe(self.order)
    }

    /// Union of the neighbor sets of `s`.
    pub fn neighborhood(&self, s: &VertexSet) -> VertexSet {
        let mut out = VertexSet::EMPTY;
        for v in s.iter() {
            out = out.union(&self.nbr_sets[v]);
        }
        out
    }

    /// One propagation step: `N_1[s] = s ∪ N(s)`.
    pub fn expand(&self, s: &VertexSet) -> VertexSet {
        s.union(&self.neighborhood(s))
    }

    /// Copy of the graph with one extra edge.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        Graph::new(self.order, self.edges().chain([(u, v)]))
    }

    /// Closed ball `N_r[v] = {u : d(u, v) ≤ r}`.
    pub fn closed_ball(&self, v: usize, r: usize) -> Result<VertexSet, GraphError> {
        self.check_vertex(v)?;
        let mut ball = VertexSet::singleton(v);
        for _ in 0..r.min(self.order) {
            let next = self.expand(&ball);
            if next == ball {
                break;
            }
            ball = next;
        }
        Ok(ball)
    }

    /// BFS distances from `v` to every vertex.
    pub fn distances_from(&self, v: usize) -> Result<Vec<Distance>, GraphError> {
        self.check_vertex(v)?;
        let mut dist = vec![Distance::Unreachable; self.order];
        dist[v] = Distance::Finite(0);
        let mut frontier = VertexSet::singleton(v);
        let mut seen = frontier;
        let mut d = 0;
        while !frontier.is_empty() {
            d += 1;
            let next = self.neighborhood(&frontier).difference(&seen);
            for u in next.iter() {
                dist[u] = Distance::Finite(d);
            }
            seen = seen.union(&next);
            frontier = next;
        }
        Ok(dist)
    }

    pub fn distance(&self, u: usize, v: usize) -> Result<Distance, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(self.distances_from(u)?[v])
    }

    /// Maximal connected vertex sets, ordered by smallest contained index.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::EMPTY;
        let mut comps = Vec::new();
        for v in 0..self.order {
            if seen.contains(v) {
                continue;
            }
            let mut comp = VertexSet::singleton(v);
            loop {
                let next = self.expand(&comp);
                if next == comp {
                    break;
                }
                comp = next;
            }
            seen = seen.union(&comp);
            comps.push(comp);
        }
        comps
    }

    /// Degrees sorted non-increasing.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degs: Vec<usize> = (0..self.order).map(|v| self.degree(v)).collect();
        degs.sort_unstable_by(|a, b| b.cmp(a));
        degs
    }

    /// Subgraph induced by `vs`, with vertices renumbered in ascending order.
    /// Returns the new graph and the new-index → old-index map.
    pub fn induced_subgraph(&self, vs: &VertexSet) -> (Graph, Vec<usize>) {
        let old: Vec<usize> = vs.to_vec();
        let mut new_of = BTreeMap::new();
        for (i, &v) in old.iter().enumerate() {
            new_of.insert(v, i);
        }
        let edges = self
            .edges()
            .filter(|&(u, v)| vs.contains(u) && vs.contains(v))
            .map(|(u, v)| (new_of[&u], new_of[&v]));
        let g = Graph::new(old.len(), edges).expect("induced subgraph of a valid graph");
        (g, old)
    }

    /// The 0/1 adjacency matrix.
    pub fn adjacency_matrix(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.order, self.order);
        for (u, v) in self.edges() {
            m.set(u, v, 1);
            m.set(v, u, 1);
        }
        m
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.order {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                v,
                order: self.order,
            })
        }
    }
}

/// Brute-force isomorphism test: searches for a vertex permutation mapping
/// the edges of `g` onto the edges of `h`, short-circuiting on a degree
/// sequence mismatch. Orders above `max_order` are rejected outright.
pub fn are_isomorphic_bruteforce(
    g: &Graph,
    h: &Graph,
    max_order: usize,
) -> Result<bool, GraphError> {
    if g.order() != h.order() {
        return Err(GraphError::OrderMismatch {
            left: g.order(),
            right: h.order(),
        });
    }
    let n = g.order();
    if n > max_order {
        return Err(GraphError::OrderExceedsIsoLimit {
            order: n,
            limit: max_order,
        });
    }
    if g.degree_sequence() != h.degree_sequence() {
        return Ok(false);
    }

    fn extend(g: &Graph, h: &Graph, map: &mut Vec<usize>, used: &mut VertexSet) -> bool {
        let i = map.len();
        if i == g.order() {
            return true;
        }
        for cand in 0..h.order() {
            if used.contains(cand) || g.degree(i) != h.degree(cand) {
                continue;
            }
            let consistent = (0..i).all(|j| g.has_edge(i, j) == h.has_edge(map[j], cand));
            if !consistent {
                continue;
            }
            map.push(cand);
            used.insert(cand);
            if extend(g, h, map, used) {
                return true;
            }
            map.pop();
            used.remove(cand);
        }
        false
    }

    let mut map = Vec::with_capacity(n);
    let mut used = VertexSet::EMPTY;
    Ok(extend(g, h, &mut map, &mut used))
}

/// Bidirectional map between external string labels and dense indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexLabeling {
    labels: Vec<String>,
    index: BTreeMap<String, usize>,
}

impl VertexLabeling {
    /// Builds a labeling from labels in index order; labels must be distinct.
    pub fn new(labels: Vec<String>) -> Result<VertexLabeling, GraphError> {
        let mut index = BTreeMap::new();
        for (i, label) in labels.iter().enumerate() {
            if index.insert(label.clone(), i).is_some() {
                return Err(GraphError::DuplicateLabel {
                    label: label.clone(),
                });
            }
        }
        Ok(VertexLabeling { labels, index })
    }

    /// The paper-style default labeling `v1, v2, …, vn`.
    pub fn default_vertices(n: usize) -> VertexLabeling {
        VertexLabeling::new((1..=n).map(|i| format!("v{i}")).collect())
            .expect("generated labels are distinct")
    }

    /// Labels for an incidence graph: `v1..vn` then `h1..hm`.
    pub fn incidence(n: usize, m: usize) -> VertexLabeling {
        let labels = (1..=n)
            .map(|i| format!("v{i}"))
            .chain((1..=m).map(|j| format!("h{j}")))
            .collect();
        VertexLabeling::new(labels).expect("generated labels are distinct")
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    /// Renders a set as its sorted labels.
    pub fn set_labels(&self, s: &VertexSet) -> Vec<String> {
        s.iter().map(|v| self.labels[v].clone()).collect()
    }

    /// Renders a sequence of indices as labels, preserving order.
    pub fn seq_labels(&self, seq: &[usize]) -> Vec<String> {
        seq.iter().map(|&v| self.labels[v].clone()).collect()
    }
}
