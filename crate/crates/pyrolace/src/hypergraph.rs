//! Hypergraphs and their incidence graphs.
//!
//! Hyperedges form an ordered list (a collection, not a set): duplicates are
//! legal and each list position becomes its own hyperedge-side vertex of the
//! incidence graph.

use thiserror::Error;

use crate::graph::{Graph, VertexLabeling};
use crate::vset::{VertexSet, VERTEX_CAP};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HypergraphError {
    #[error("hypergraph order {order} exceeds the vertex cap {cap}", cap = VERTEX_CAP)]
    OrderExceedsCap { order: usize },
    #[error("hyperedge {index} is empty")]
    EmptyHyperedge { index: usize },
    #[error("hyperedge {index} contains vertex {v}, out of range for order {order}")]
    VertexOutOfRange { index: usize, v: usize, order: usize },
    #[error("incidence graph would have {total} vertices, over the cap {cap}", cap = VERTEX_CAP)]
    IncidenceOverCap { total: usize },
}

/// A hypergraph: `order` vertices and an ordered list of non-empty hyperedges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    order: usize,
    hyperedges: Vec<VertexSet>,
}

/// One connected component of a hypergraph: its vertices and the (positional)
/// indices of the hyperedges it contains.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypergraphComponent {
    pub vertices: VertexSet,
    pub hyperedges: Vec<usize>,
}

impl HypergraphComponent {
    /// Whether the component contains a hyperedge of size ≥ 2.
    pub fn has_nonsingleton_edge(&self, h: &Hypergraph) -> bool {
        self.hyperedges.iter().any(|&j| h.hyperedges[j].len() >= 2)
    }
}

/// The bipartite incidence graph `IG(H)`: vertex-side indices `0..split`,
/// hyperedge-side indices `split..`, labeled `v1..vn, h1..hm`.
#[derive(Debug, Clone)]
pub struct IncidenceGraph {
    pub graph: Graph,
    pub split: usize,
    pub labeling: VertexLabeling,
}

impl IncidenceGraph {
    /// The hyperedge-side index set `{split, …, split+m-1}`.
    pub fn hyperedge_side(&self) -> VertexSet {
        (self.split..self.graph.order()).collect()
    }
}

impl Hypergraph {
    pub fn new(
        order: usize,
        hyperedges: impl IntoIterator<Item = impl IntoIterator<Item = usize>>,
    ) -> Result<Hypergraph, HypergraphError> {
        if order > VERTEX_CAP {
            return Err(HypergraphError::OrderExceedsCap { order });
        }
        let mut edges = Vec::new();
        for (index, edge) in hyperedges.into_iter().enumerate() {
            let mut set = VertexSet::EMPTY;
            for v in edge {
                if v >= order {
                    return Err(HypergraphError::VertexOutOfRange { index, v, order });
                }
                set.insert(v);
            }
            if set.is_empty() {
                return Err(HypergraphError::EmptyHyperedge { index });
            }
            edges.push(set);
        }
        Ok(Hypergraph {
            order,
            hyperedges: edges,
        })
    }

    /// The 2-uniform hypergraph of a graph: one size-2 hyperedge per edge.
    pub fn from_graph(g: &Graph) -> Hypergraph {
        Hypergraph::new(g.order(), g.edges().map(|(u, v)| [u, v]))
            .expect("graph edges are valid hyperedges")
    }

    /// One hyperedge containing all `order` vertices (the `H_n` family has
    /// `order = n + 1`).
    pub fn single_full_hyperedge(order: usize) -> Result<Hypergraph, HypergraphError> {
        Hypergraph::new(order, [0..order])
    }

    /// Disjoint union; vertices and hyperedges of later parts are shifted up.
    pub fn disjoint_union(parts: &[Hypergraph]) -> Result<Hypergraph, HypergraphError> {
        let order: usize = parts.iter().map(|p| p.order).sum();
        let mut edges: Vec<Vec<usize>> = Vec::new();
        let mut offset = 0;
        for p in parts {
            for e in &p.hyperedges {
                edges.push(e.iter().map(|v| v + offset).collect());
            }
            offset += p.order;
        }
        Hypergraph::new(order, edges)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn edge_count(&self) -> usize {
        self.hyperedges.len()
    }

    pub fn hyperedges(&self) -> &[VertexSet] {
        &self.hyperedges
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::universe(self.order)
    }

    /// Builds the incidence graph: vertex-side indices `0..order` precede the
    /// hyperedge-side indices `order..order+m`, one per hyperedge position.
    pub fn incidence_graph(&self) -> IncidenceGraph {
        let m = self.hyperedges.len();
        let total = self.order + m;
        assert!(
            total <= VERTEX_CAP,
            "incidence graph on {total} vertices exceeds the cap {VERTEX_CAP}"
        );
        let edges = self
            .hyperedges
            .iter()
            .enumerate()
            .flat_map(|(j, e)| e.iter().map(move |v| (v, self.order + j)));
        let graph = Graph::new(total, edges).expect("incidence edges are in range");
        IncidenceGraph {
            graph,
            split: self.order,
            labeling: VertexLabeling::incidence(self.order, m),
        }
    }

    /// Connected components under vertex–hyperedge incidence, ordered by
    /// smallest contained vertex. Isolated vertices form singleton components
    /// with no hyperedges.
    pub fn components(&self) -> Vec<HypergraphComponent> {
        let mut seen = VertexSet::EMPTY;
        let mut comps = Vec::new();
        for v in 0..self.order {
            if seen.contains(v) {
                continue;
            }
            let mut verts = VertexSet::singleton(v);
            loop {
                let mut next = verts;
                for e in &self.hyperedges {
                    if !e.is_disjoint(&verts) {
                        next = next.union(e);
                    }
                }
                if next == verts {
                    break;
                }
                verts = next;
            }
            let hyperedges = self
                .hyperedges
                .iter()
                .enumerate()
                .filter(|(_, e)| e.is_subset(&verts))
                .map(|(j, _)| j)
                .collect();
            seen = seen.union(&verts);
            comps.push(HypergraphComponent {
                vertices: verts,
                hyperedges,
            });
        }
        comps
    }

    /// Number of components containing at least one non-singleton hyperedge
    /// (the `k` in the improved zero-forcing bound).
    pub fn count_nonsingleton_components(&self) -> usize {
        self.components()
            .iter()
            .filter(|c| c.has_nonsingleton_edge(self))
            .count()
    }

    /// Extracts a component as a standalone hypergraph. Returns the
    /// sub-hypergraph plus the new-index → old-index vertex map.
    pub fn sub_hypergraph(&self, comp: &HypergraphComponent) -> (Hypergraph, Vec<usize>) {
        let old: Vec<usize> = comp.vertices.to_vec();
        let new_of = |v: usize| old.binary_search(&v).expect("component vertex");
        let edges: Vec<Vec<usize>> = comp
            .hyperedges
            .iter()
            .map(|&j| self.hyperedges[j].iter().map(new_of).collect())
            .collect();
        let h = Hypergraph::new(old.len(), edges).expect("component of a valid hypergraph");
        (h, old)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::{fig1_hypergraph, fig5_hypergraph, fig6_hypergraph};

    #[test]
    fn construction_rejects_bad_input() {
        assert!(matches!(
            Hypergraph::new(3, [vec![0usize], vec![]]),
            Err(HypergraphError::EmptyHyperedge { index: 1 })
        ));
        assert!(matches!(
            Hypergraph::new(2, [vec![0usize, 7]]),
            Err(HypergraphError::VertexOutOfRange { v: 7, .. })
        ));
        // duplicate hyperedges are legal and keep their positions
        let h = Hypergraph::new(2, [vec![0usize, 1], vec![0, 1]]).unwrap();
        assert_eq!(h.edge_count(), 2);
    }

    #[test]
    fn incidence_graph_of_fig1() {
        let ig = fig1_hypergraph().incidence_graph();
        assert_eq!(ig.graph.order(), 7);
        assert_eq!(ig.split, 4);
        // v1h1, v2h1, v3h1, v2h2, v4h2, v3h3, v4h3
        let expect = [(0, 4), (1, 4), (1, 5), (2, 4), (2, 6), (3, 5), (3, 6)];
        let edges: Vec<(usize, usize)> = ig.graph.edges().collect();
        assert_eq!(edges, expect);
        assert_eq!(ig.labeling.labels()[4], "h1");
        // bipartite across the split, hyperedge-side degree = hyperedge size
        for (u, v) in ig.graph.edges() {
            assert!(u < ig.split && v >= ig.split);
        }
        for (j, e) in fig1_hypergraph().hyperedges().iter().enumerate() {
            assert_eq!(ig.graph.degree(ig.split + j), e.len());
        }
    }

    #[test]
    fn incidence_graph_degenerate_cases() {
        let edgeless = Hypergraph::new(3, Vec::<Vec<usize>>::new()).unwrap();
        let ig = edgeless.incidence_graph();
        assert_eq!(ig.graph.order(), 3);
        assert_eq!(ig.graph.edge_count(), 0);

        // single hyperedge over all vertices gives a star
        let h = Hypergraph::single_full_hyperedge(5).unwrap();
        let ig = h.incidence_graph();
        assert_eq!(ig.graph.degree_sequence(), vec![5, 1, 1, 1, 1, 1]);
    }

    #[test]
    fn incidence_graph_round_trips_to_hyperedges() {
        for h in [fig1_hypergraph(), fig5_hypergraph(), fig6_hypergraph()] {
            let ig = h.incidence_graph();
            let rebuilt: Vec<VertexSet> = (ig.split..ig.graph.order())
                .map(|j| ig.graph.neighbor_set(j))
                .collect();
            assert_eq!(rebuilt, h.hyperedges());
        }
    }

    #[test]
    fn component_examples() {
        let comps = fig5_hypergraph().components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].vertices.to_vec(), vec![0, 1, 2]);
        assert_eq!(comps[0].hyperedges, vec![0]);
        assert_eq!(comps[1].vertices.to_vec(), vec![3, 4, 5, 6]);
        assert_eq!(comps[1].hyperedges, vec![1]);

        assert_eq!(fig6_hypergraph().components().len(), 1);

        let isolated = Hypergraph::new(3, Vec::<Vec<usize>>::new()).unwrap();
        let comps = isolated.components();
        assert_eq!(comps.len(), 3);
        assert!(comps.iter().all(|c| c.hyperedges.is_empty()));
    }

    #[test]
    fn components_partition_vertices_and_edges() {
        let h = Hypergraph::new(6, [vec![0usize, 2], vec![2, 4], vec![1], vec![1, 3]]).unwrap();
        let comps = h.components();
        let mut verts = VertexSet::EMPTY;
        let mut edges: Vec<usize> = Vec::new();
        for c in &comps {
            assert!(verts.is_disjoint(&c.vertices));
            verts = verts.union(&c.vertices);
            edges.extend(&c.hyperedges);
        }
        assert_eq!(verts, h.vertex_set());
        edges.sort_unstable();
        assert_eq!(edges, vec![0, 1, 2, 3]);
    }

    #[test]
    fn nonsingleton_component_counts() {
        assert_eq!(fig5_hypergraph().count_nonsingleton_components(), 2);
        assert_eq!(fig1_hypergraph().count_nonsingleton_components(), 1);
        let only_singleton = Hypergraph::new(1, [vec![0usize]]).unwrap();
        assert_eq!(only_singleton.count_nonsingleton_components(), 0);
    }

    #[test]
    fn sub_hypergraph_reindexes() {
        let h = fig5_hypergraph();
        let comps = h.components();
        let (second, old) = h.sub_hypergraph(&comps[1]);
        assert_eq!(old, vec![3, 4, 5, 6]);
        assert_eq!(second.order(), 4);
        assert_eq!(second.hyperedges()[0], second.vertex_set());
    }
}
