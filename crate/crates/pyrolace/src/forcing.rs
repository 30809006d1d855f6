//! Zero forcing: a blue vertex with exactly one white neighbor forces it
//! blue. Traces apply all forces of a round against the round-start coloring;
//! the solver uses the asynchronous scheduler, which reaches the same
//! closure.

use thiserror::Error;

use crate::graph::Graph;
use crate::subsets::combinations;
use crate::vset::VertexSet;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ForcingError {
    #[error("the neighbor lemma requires order ≥ 2, but the graph has order {order}")]
    OrderTooSmall { order: usize },
    #[error("the neighbor lemma requires minimum degree ≥ 1, but vertex {v} is isolated")]
    IsolatedVertex { v: usize },
}

/// A zero forcing run: the initial blue set, every force `u → w` in
/// round order (ascending forcer within a round), and the final coloring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForcingTrace {
    pub initial: VertexSet,
    pub forces: Vec<(usize, usize)>,
    pub final_blue: VertexSet,
}

/// Applies the color change rule to a fixpoint with synchronous rounds:
/// all forces valid against the round-start coloring fire together.
pub fn force_closure(g: &Graph, b: &VertexSet) -> ForcingTrace {
    debug_assert!(b.is_subset(&g.vertex_set()));
    let mut blue = *b;
    let mut forces = Vec::new();
    loop {
        let mut round: Vec<(usize, usize)> = Vec::new();
        let mut newly = VertexSet::EMPTY;
        for u in blue.iter() {
            let white = g.neighbor_set(u).difference(&blue);
            if white.len() == 1 {
                let w = white.min().expect("exactly one element");
                round.push((u, w));
                newly.insert(w);
            }
        }
        if newly.is_empty() {
            break;
        }
        blue = blue.union(&newly);
        forces.extend(round);
    }
    ForcingTrace {
        initial: *b,
        forces,
        final_blue: blue,
    }
}

/// Asynchronous closure: repeatedly applies the first applicable force
/// (smallest blue forcer). Same fixpoint as the synchronous rounds.
pub fn force_closure_worklist(g: &Graph, b: &VertexSet) -> VertexSet {
    let mut blue = *b;
    'outer: loop {
        for u in blue.iter() {
            let white = g.neighbor_set(u).difference(&blue);
            if white.len() == 1 {
                blue = blue.union(&white);
                continue 'outer;
            }
        }
        return blue;
    }
}

/// Whether `b` forces the whole graph blue.
pub fn is_zero_forcing_set(g: &Graph, b: &VertexSet) -> bool {
    force_closure_worklist(g, b) == g.vertex_set()
}

/// Exact zero forcing number with the lexicographically least minimum
/// witness. Solves per connected component (Z is additive over components)
/// and enumerates subsets by increasing cardinality within each; isolated
/// vertices are singleton components and force themselves into the witness.
pub fn zero_forcing_number(g: &Graph) -> (usize, VertexSet) {
    let mut total = 0;
    let mut witness = VertexSet::EMPTY;
    for comp in g.connected_components() {
        let (sub, old) = g.induced_subgraph(&comp);
        let (z, local) = component_zero_forcing(&sub);
        total += z;
        for v in local.iter() {
            witness.insert(old[v]);
        }
    }
    (total, witness)
}

fn component_zero_forcing(g: &Graph) -> (usize, VertexSet) {
    let n = g.order();
    for k in 0..=n {
        for combo in combinations(n, k) {
            let b: VertexSet = combo.into_iter().collect();
            if is_zero_forcing_set(g, &b) {
                return (k, b);
            }
        }
    }
    unreachable!("B = V(G) always forces")
}

/// Checks, for one computed minimum zero forcing set `B`, the printed lemma:
/// every vertex of the graph has a neighbor outside `B`. Requires order ≥ 2
/// and minimum degree ≥ 1. The lemma fails as printed on some graphs
/// (e.g. `K_2`), so the violation is reported as `false`, not an error.
pub fn min_zfs_neighbor_lemma_check(g: &Graph) -> Result<bool, ForcingError> {
    if g.order() < 2 {
        return Err(ForcingError::OrderTooSmall { order: g.order() });
    }
    for v in 0..g.order() {
        if g.degree(v) == 0 {
            return Err(ForcingError::IsolatedVertex { v });
        }
    }
    let (_, b) = zero_forcing_number(g);
    Ok((0..g.order()).all(|v| !g.neighbor_set(v).difference(&b).is_empty()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::{fig1_hypergraph, fig5_hypergraph, fig6_hypergraph};

    fn vs(elems: &[usize]) -> VertexSet {
        elems.iter().copied().collect()
    }

    #[test]
    fn forcing_chain_on_fig1_incidence_graph() {
        let ig = fig1_hypergraph().incidence_graph();
        let trace = force_closure(&ig.graph, &vs(&[0, 1]));
        assert_eq!(trace.final_blue, ig.graph.vertex_set());
        // round 1: v1→h1; round 2: v2→h2, h1→v3; round 3: v3→h3, h2→v4
        assert_eq!(
            trace.forces,
            vec![(0, 4), (1, 5), (4, 2), (2, 6), (5, 3)]
        );
    }

    #[test]
    fn degenerate_closures() {
        let ig = fig1_hypergraph().incidence_graph();
        let all = ig.graph.vertex_set();
        let trace = force_closure(&ig.graph, &all);
        assert!(trace.forces.is_empty());
        assert_eq!(trace.final_blue, all);

        // v4 alone has two white neighbors and stalls
        let trace = force_closure(&ig.graph, &VertexSet::singleton(3));
        assert!(trace.forces.is_empty());
        assert_eq!(trace.final_blue, VertexSet::singleton(3));
    }

    #[test]
    fn forcing_set_membership_examples() {
        let ig = fig1_hypergraph().incidence_graph();
        assert!(is_zero_forcing_set(&ig.graph, &vs(&[0, 1])));
        // {v2} ∪ E(H) \ {h2} = {v2, h1, h3}
        assert!(is_zero_forcing_set(&ig.graph, &vs(&[1, 4, 6])));
        let k2 = Graph::complete(2).unwrap();
        assert!(!is_zero_forcing_set(&k2, &VertexSet::EMPTY));
    }

    #[test]
    fn zero_forcing_numbers_of_incidence_graphs() {
        assert_eq!(
            zero_forcing_number(&fig1_hypergraph().incidence_graph().graph),
            (2, vs(&[0, 1]))
        );
        assert_eq!(
            zero_forcing_number(&fig5_hypergraph().incidence_graph().graph),
            (5, vs(&[0, 1, 3, 4, 5]))
        );
        assert_eq!(
            zero_forcing_number(&fig6_hypergraph().incidence_graph().graph),
            (3, vs(&[0, 1, 2]))
        );
    }

    #[test]
    fn star_zero_forcing_numbers() {
        for m in 2..=8 {
            let star = Graph::star(m).unwrap();
            assert_eq!(zero_forcing_number(&star).0, m - 1);
        }
    }

    #[test]
    fn component_solve_matches_whole_graph_enumeration() {
        // two paths and an isolated vertex
        let g = Graph::new(6, [(0, 1), (1, 2), (3, 4)]).unwrap();
        let (z, w) = zero_forcing_number(&g);
        assert_eq!(z, 3);
        assert_eq!(w, vs(&[0, 3, 5]));
        let naive = component_zero_forcing(&g);
        assert_eq!(naive.0, z);
        assert_eq!(naive.1, w);
    }

    #[test]
    fn schedulers_agree_on_small_sets() {
        let ig = fig6_hypergraph().incidence_graph();
        for bits in 0..(1u32 << ig.graph.order()) {
            let b: VertexSet = (0..ig.graph.order())
                .filter(|&v| bits & (1 << v) != 0)
                .collect();
            assert_eq!(
                force_closure(&ig.graph, &b).final_blue,
                force_closure_worklist(&ig.graph, &b)
            );
        }
    }

    #[test]
    fn neighbor_lemma_check_examples() {
        let ig = fig1_hypergraph().incidence_graph();
        assert_eq!(min_zfs_neighbor_lemma_check(&ig.graph), Ok(true));
        assert_eq!(min_zfs_neighbor_lemma_check(&Graph::cycle(4).unwrap()), Ok(true));
        assert_eq!(min_zfs_neighbor_lemma_check(&Graph::path(3).unwrap()), Ok(true));
        // as printed, the lemma fails on K_2: the witness is {v1} and v2's
        // only neighbor lies inside it
        assert_eq!(min_zfs_neighbor_lemma_check(&Graph::complete(2).unwrap()), Ok(false));
        assert!(matches!(
            min_zfs_neighbor_lemma_check(&Graph::complete(1).unwrap()),
            Err(ForcingError::OrderTooSmall { order: 1 })
        ));
        assert!(matches!(
            min_zfs_neighbor_lemma_check(&Graph::empty(3).unwrap()),
            Err(ForcingError::IsolatedVertex { .. })
        ));
    }
}
