//! Lazy burning: a single initial set, then monotone propagation to a
//! fixpoint. Traces use synchronous rounds (every eligible vertex burns at
//! once); the closure itself is scheduler-independent, so the solver runs an
//! asynchronous worklist internally.

use crate::burning::SingletonMode;
use crate::hypergraph::Hypergraph;
use crate::subsets::combinations;
use crate::vset::VertexSet;

/// One synchronous propagation round: the vertices newly burned and, per
/// vertex, the smallest-index hyperedge that fired it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LazyRound {
    pub burned: VertexSet,
    pub firings: Vec<(usize, usize)>,
}

/// Outcome of a lazy burning run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LazyBurnResult {
    pub initial: VertexSet,
    pub rounds: Vec<LazyRound>,
    pub closure: VertexSet,
}

fn eligible(edge: &VertexSet, mode: SingletonMode) -> bool {
    mode == SingletonMode::Vacuous || edge.len() >= 2
}

/// Propagates from `b` to the fixpoint, burning all simultaneously eligible
/// vertices each round. A hyperedge fires its last unburned vertex.
pub fn lazy_propagate(h: &Hypergraph, b: &VertexSet, mode: SingletonMode) -> LazyBurnResult {
    debug_assert!(b.is_subset(&h.vertex_set()));
    let mut burned = *b;
    let mut rounds = Vec::new();
    loop {
        let mut firings: Vec<(usize, usize)> = Vec::new();
        let mut newly = VertexSet::EMPTY;
        for v in h.vertex_set().difference(&burned).iter() {
            for (j, e) in h.hyperedges().iter().enumerate() {
                if eligible(e, mode) && e.contains(v) && e.difference(&burned) == VertexSet::singleton(v)
                {
                    firings.push((v, j));
                    newly.insert(v);
                    break;
                }
            }
        }
        if newly.is_empty() {
            break;
        }
        burned = burned.union(&newly);
        rounds.push(LazyRound {
            burned: newly,
            firings,
        });
    }
    LazyBurnResult {
        initial: *b,
        rounds,
        closure: burned,
    }
}

/// Asynchronous closure: applies one firing at a time until none applies.
/// Confluence of the monotone rule makes the result equal to the synchronous
/// closure; this variant is what the solver iterates.
pub fn lazy_closure_worklist(h: &Hypergraph, b: &VertexSet, mode: SingletonMode) -> VertexSet {
    let mut burned = *b;
    'outer: loop {
        for e in h.hyperedges() {
            if !eligible(e, mode) {
                continue;
            }
            let white = e.difference(&burned);
            if white.len() == 1 {
                burned = burned.union(&white);
                continue 'outer;
            }
        }
        return burned;
    }
}

/// Whether `b` eventually burns the whole hypergraph.
pub fn is_lazy_burning_set(h: &Hypergraph, b: &VertexSet, mode: SingletonMode) -> bool {
    lazy_closure_worklist(h, b, mode) == h.vertex_set()
}

/// Exact minimum lazy burning set, enumerating subsets by increasing
/// cardinality (lexicographic within each size); monotonicity justifies the
/// early exit. Vertices no eligible hyperedge covers can never burn by
/// propagation, so they are force-included before enumeration.
pub fn lazy_burning_number(h: &Hypergraph, mode: SingletonMode) -> (usize, VertexSet) {
    let full = h.vertex_set();
    let mut coverable = VertexSet::EMPTY;
    for e in h.hyperedges() {
        if eligible(e, mode) {
            coverable = coverable.union(e);
        }
    }
    let forced = full.difference(&coverable);
    let candidates: Vec<usize> = full.difference(&forced).to_vec();
    for k in 0..=candidates.len() {
        for combo in combinations(candidates.len(), k) {
            let mut b = forced;
            for i in combo {
                b.insert(candidates[i]);
            }
            if is_lazy_burning_set(h, &b, mode) {
                return (b.len(), b);
            }
        }
    }
    unreachable!("B = V(H) always closes over itself")
}

/// Checks component additivity of the lazy burning number:
/// `b_L(H) = Σ_i b_L(H_i)` over connected components (vacuous mode, the
/// default for lazy burning).
pub fn component_additivity_check(h: &Hypergraph) -> bool {
    let whole = lazy_burning_number(h, SingletonMode::Vacuous).0;
    let sum: usize = h
        .components()
        .iter()
        .map(|c| {
            let (sub, _) = h.sub_hypergraph(c);
            lazy_burning_number(&sub, SingletonMode::Vacuous).0
        })
        .sum();
    whole == sum
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::{fig1_hypergraph, fig5_hypergraph, fig6_hypergraph};

    fn vs(elems: &[usize]) -> VertexSet {
        elems.iter().copied().collect()
    }

    #[test]
    fn fig1_propagation_order() {
        let h = fig1_hypergraph();
        let res = lazy_propagate(&h, &VertexSet::singleton(1), SingletonMode::Vacuous);
        assert_eq!(res.closure, h.vertex_set());
        // v4 by h2, then v3 by h3, then v1 by h1
        let per_round: Vec<Vec<(usize, usize)>> =
            res.rounds.iter().map(|r| r.firings.clone()).collect();
        assert_eq!(per_round, vec![vec![(3, 1)], vec![(2, 2)], vec![(0, 0)]]);
    }

    #[test]
    fn degenerate_initial_sets() {
        let h = fig1_hypergraph();
        let res = lazy_propagate(&h, &h.vertex_set(), SingletonMode::Vacuous);
        assert!(res.rounds.is_empty());
        assert_eq!(res.closure, h.vertex_set());

        // no hyperedge of Fig. 6 has a single unburned vertex initially
        let res = lazy_propagate(&fig6_hypergraph(), &VertexSet::EMPTY, SingletonMode::Vacuous);
        assert!(res.closure.is_empty());
    }

    #[test]
    fn lazy_set_membership_examples() {
        let h = fig1_hypergraph();
        assert!(is_lazy_burning_set(&h, &vs(&[1]), SingletonMode::Vacuous));

        let h5 = fig5_hypergraph();
        assert!(is_lazy_burning_set(&h5, &vs(&[0, 1, 3, 4, 5]), SingletonMode::Vacuous));
        // no 4-subset suffices
        for a in 0..7 {
            for b in a + 1..7 {
                for c in b + 1..7 {
                    for d in c + 1..7 {
                        assert!(!is_lazy_burning_set(
                            &h5,
                            &vs(&[a, b, c, d]),
                            SingletonMode::Vacuous
                        ));
                    }
                }
            }
        }
    }

    #[test]
    fn minimum_lazy_sets_of_named_hypergraphs() {
        assert_eq!(
            lazy_burning_number(&fig1_hypergraph(), SingletonMode::Vacuous),
            (1, vs(&[1]))
        );
        assert_eq!(
            lazy_burning_number(&fig5_hypergraph(), SingletonMode::Vacuous),
            (5, vs(&[0, 1, 3, 4, 5]))
        );
        assert_eq!(
            lazy_burning_number(&fig6_hypergraph(), SingletonMode::Vacuous),
            (2, vs(&[1, 2]))
        );
    }

    #[test]
    fn forced_inclusion_of_uncoverable_vertices() {
        // vertex 2 sits in no hyperedge, so every lazy burning set holds it
        let h = Hypergraph::new(3, [vec![0usize, 1]]).unwrap();
        let (k, b) = lazy_burning_number(&h, SingletonMode::Vacuous);
        assert_eq!((k, b), (2, vs(&[0, 2])));

        // a lone singleton hyperedge burns by itself in vacuous mode only
        let s = Hypergraph::new(1, [vec![0usize]]).unwrap();
        assert_eq!(lazy_burning_number(&s, SingletonMode::Vacuous), (0, VertexSet::EMPTY));
        assert_eq!(lazy_burning_number(&s, SingletonMode::Strict), (1, vs(&[0])));
    }

    #[test]
    fn schedulers_agree_on_named_instances() {
        for h in [fig1_hypergraph(), fig5_hypergraph(), fig6_hypergraph()] {
            for bits in 0..(1u32 << h.order()) {
                let b: VertexSet = (0..h.order()).filter(|&v| bits & (1 << v) != 0).collect();
                let sync = lazy_propagate(&h, &b, SingletonMode::Vacuous).closure;
                let async_ = lazy_closure_worklist(&h, &b, SingletonMode::Vacuous);
                assert_eq!(sync, async_);
            }
        }
    }

    #[test]
    fn additivity_examples() {
        assert!(component_additivity_check(&fig5_hypergraph()));
        assert!(component_additivity_check(&fig6_hypergraph()));
        // components of Fig. 5 contribute 2 and 3
        let h = fig5_hypergraph();
        let parts: Vec<usize> = h
            .components()
            .iter()
            .map(|c| lazy_burning_number(&h.sub_hypergraph(c).0, SingletonMode::Vacuous).0)
            .collect();
        assert_eq!(parts, vec![2, 3]);
    }
}
