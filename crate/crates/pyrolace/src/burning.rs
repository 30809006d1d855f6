//! Round-based burning simulation and exact burning-number solvers.
//!
//! A round always places the new source first; only then does fire spread
//! from the vertices that were burned at the end of the previous round.
//! Sources must be unburned when chosen, so a sequence entry may name an
//! already-burned vertex only when nothing unburned is left.

use thiserror::Error;

use crate::graph::{Distance, Graph};
use crate::hypergraph::Hypergraph;
use crate::vset::VertexSet;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BurnError {
    #[error("source {v} repeats in the burning sequence")]
    RepeatedSource { v: usize },
    #[error("source index {v} out of range for order {order}")]
    VertexOutOfRange { v: usize, order: usize },
    #[error("source {v} chosen in round {round} is already burned while unburned vertices remain")]
    SourceAlreadyBurned { v: usize, round: usize },
    #[error("burning is undefined on an empty instance")]
    EmptyInstance,
    #[error("no burning sequence exists for this instance")]
    Unburnable,
}

/// Which hyperedges may propagate fire.
///
/// `Strict` follows the letter of the round-based definition: only
/// non-singleton hyperedges spread. `Vacuous` lets a singleton hyperedge
/// ignite its vertex spontaneously (the empty remainder is trivially burned),
/// which is the reading the lazy-burning/zero-forcing equivalence requires.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SingletonMode {
    Vacuous,
    Strict,
}

/// An ordered list of distinct source vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BurningSequence {
    entries: Vec<usize>,
}

impl BurningSequence {
    pub fn new(entries: Vec<usize>) -> Result<BurningSequence, BurnError> {
        let mut seen = VertexSet::EMPTY;
        for &v in &entries {
            if v >= crate::vset::VERTEX_CAP || seen.contains(v) {
                if v < crate::vset::VERTEX_CAP {
                    return Err(BurnError::RepeatedSource { v });
                }
                return Err(BurnError::VertexOutOfRange {
                    v,
                    order: crate::vset::VERTEX_CAP,
                });
            }
            seen.insert(v);
        }
        Ok(BurningSequence { entries })
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// One round of a burning run: the source placed first (if any) and the
/// vertices newly burned by propagation afterwards.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BurnRound {
    pub source: Option<usize>,
    pub spread: VertexSet,
}

/// A full burning run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BurnTrace {
    pub rounds: Vec<BurnRound>,
    pub final_burned: VertexSet,
}

impl BurnTrace {
    /// Burned set at the end of round `k` (round 0 is the initial state).
    pub fn burned_after(&self, k: usize) -> VertexSet {
        let mut burned = VertexSet::EMPTY;
        for round in self.rounds.iter().take(k) {
            if let Some(v) = round.source {
                burned.insert(v);
            }
            burned = burned.union(&round.spread);
        }
        burned
    }

    pub fn fully_burned_within(&self, k: usize, full: &VertexSet) -> bool {
        self.burned_after(k) == *full
    }

    /// Sources in placement order.
    pub fn sources(&self) -> Vec<usize> {
        self.rounds.iter().filter_map(|r| r.source).collect()
    }
}

fn check_entries(seq: &BurningSequence, order: usize) -> Result<(), BurnError> {
    for &v in seq.as_slice() {
        if v >= order {
            return Err(BurnError::VertexOutOfRange { v, order });
        }
    }
    Ok(())
}

/// Shared round loop: `fires(prev)` is everything propagation would ignite
/// from the previous round's burned set. Runs until all vertices are burned
/// or the sequence is exhausted and propagation stalls.
fn run_rounds(
    full: VertexSet,
    seq: &BurningSequence,
    fires: impl Fn(&VertexSet) -> VertexSet,
) -> Result<BurnTrace, BurnError> {
    let mut burned = VertexSet::EMPTY;
    let mut rounds = Vec::new();
    let mut next_entry = 0;
    while burned != full {
        let round_no = rounds.len() + 1;
        let prev = burned;
        let source = if next_entry < seq.len() {
            let v = seq.as_slice()[next_entry];
            next_entry += 1;
            if burned.contains(v) {
                // legal only when nothing unburned is left, which the loop
                // guard already excludes
                return Err(BurnError::SourceAlreadyBurned { v, round: round_no });
            }
            burned.insert(v);
            Some(v)
        } else {
            None
        };
        let spread = fires(&prev).difference(&burned);
        burned = burned.union(&spread);
        if source.is_none() && spread.is_empty() {
            break; // stalled without sources left
        }
        rounds.push(BurnRound { source, spread });
    }
    Ok(BurnTrace {
        rounds,
        final_burned: burned,
    })
}

/// Runs the burning process on a graph with the given source sequence.
/// Propagation continues after the sequence is exhausted until it stalls.
pub fn simulate_graph_burning(g: &Graph, seq: &BurningSequence) -> Result<BurnTrace, BurnError> {
    check_entries(seq, g.order())?;
    run_rounds(g.vertex_set(), seq, |prev| g.neighborhood(prev))
}

/// Everything an eligible hyperedge would ignite from `prev`: each edge with
/// exactly one vertex outside `prev` fires that vertex.
fn hyperedge_fires(h: &Hypergraph, prev: &VertexSet, mode: SingletonMode) -> VertexSet {
    let mut out = VertexSet::EMPTY;
    for e in h.hyperedges() {
            if mode == SingletonMode::Strict && e.len() < 2 {
                continue;
            }
            let white = e.difference(prev);
            if white.len() == 1 {
                out = out.union(&white);
            }
    }
    out
}

/// Runs the burning process on a hypergraph with the given source sequence.
pub fn simulate_hypergraph_burning(
    h: &Hypergraph,
    seq: &BurningSequence,
    mode: SingletonMode,
) -> Result<BurnTrace, BurnError> {
    check_entries(seq, h.order())?;
    run_rounds(h.vertex_set(), seq, |prev| hyperedge_fires(h, prev, mode))
}

/// The distance characterization of a burning sequence: pairwise
/// `d(v_i, v_j) ≥ |i − j|`, and the balls `N_{k−l}[v_l]` cover the graph.
/// Deliberately independent of the simulation path.
pub fn is_burning_sequence(g: &Graph, seq: &BurningSequence) -> Result<bool, BurnError> {
    check_entries(seq, g.order())?;
    let s = seq.as_slice();
    let k = s.len();
    for i in 0..k {
        let dists = g
            .distances_from(s[i])
            .expect("entries validated against order");
        for (j, &sj) in s.iter().enumerate().skip(i + 1) {
            if let Distance::Finite(d) = dists[sj] {
                if d < j - i {
                    return Ok(false);
                }
            }
        }
    }
    let mut covered = VertexSet::EMPTY;
    for (l, &v) in s.iter().enumerate() {
        let ball = g
            .closed_ball(v, k - 1 - l)
            .expect("entries validated against order");
        covered = covered.union(&ball);
    }
    Ok(covered == g.vertex_set())
}

/// Depth-first search for a length-`k` run that burns everything, trying
/// sources in ascending index order so the first hit is the
/// lexicographically smallest witness. `prune` may cut branches that
/// provably cannot finish.
fn search_depth(
    full: VertexSet,
    k: usize,
    burned: VertexSet,
    chosen: &mut Vec<usize>,
    fires: &dyn Fn(&VertexSet) -> VertexSet,
    prune: &dyn Fn(&VertexSet, usize) -> bool,
) -> Option<Vec<usize>> {
    let depth = chosen.len() + 1;
    let grown = burned.union(&fires(&burned));
    for v in full.difference(&burned).iter() {
        let mut after = grown;
        after.insert(v);
        if depth == k {
            if after == full {
                chosen.push(v);
                let hit = chosen.clone();
                chosen.pop();
                return Some(hit);
            }
            continue;
        }
        if prune(&after, k - depth) {
            continue;
        }
        chosen.push(v);
        if let Some(hit) = search_depth(full, k, after, chosen, fires, prune) {
            return Some(hit);
        }
        chosen.pop();
    }
    None
}

/// Largest closed-ball size per radius; used to bound what the remaining
/// sources could still cover.
fn max_ball_sizes(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut sizes = vec![0usize; n.max(1)];
    for v in 0..n {
        let mut ball = VertexSet::singleton(v);
        for r in 0..n {
            if r > 0 {
                ball = g.expand(&ball);
            }
            sizes[r] = sizes[r].max(ball.len());
        }
    }
    sizes
}

/// After `rounds_left` more rounds, the burned set is contained in the
/// `rounds_left`-ball of the current one plus one ball of radius
/// `rounds_left − 1 − i` per future source; prune when the uncovered
/// vertices cannot fit.
fn coverage_prune(g: &Graph, ball_max: &[usize], burned: &VertexSet, rounds_left: usize) -> bool {
    let mut reach = *burned;
    for _ in 0..rounds_left {
        let next = g.expand(&reach);
        if next == reach {
            break;
        }
        reach = next;
    }
    let uncovered = g.vertex_set().difference(&reach).len();
    let capacity: usize = (0..rounds_left).map(|r| ball_max[r]).sum();
    uncovered > capacity
}

/// Exact burning number via iterative deepening, with the lexicographically
/// smallest optimal burning sequence as witness.
pub fn burning_number(g: &Graph) -> Result<(usize, BurningSequence), BurnError> {
    burning_number_with_threads(g, 1)
}

/// Like [`burning_number`], optionally exploring first-source branches in
/// parallel. The reported witness is independent of the thread count: each
/// branch yields its own lexicographic minimum and the smallest first source
/// wins.
pub fn burning_number_with_threads(
    g: &Graph,
    threads: usize,
) -> Result<(usize, BurningSequence), BurnError> {
    if g.order() == 0 {
        return Err(BurnError::EmptyInstance);
    }
    let full = g.vertex_set();
    let ball_max = max_ball_sizes(g);
    let fires = |prev: &VertexSet| g.neighborhood(prev);
    let prune =
        |burned: &VertexSet, rounds_left: usize| coverage_prune(g, &ball_max, burned, rounds_left);
    for k in 1..=g.order() {
        let hit = if threads <= 1 || g.order() < 2 {
            search_depth(full, k, VertexSet::EMPTY, &mut Vec::new(), &fires, &prune)
        } else {
            search_first_source_parallel(g, k, threads, &fires, &prune)
        };
        if let Some(seq) = hit {
            return Ok((k, BurningSequence::new(seq).expect("distinct by search")));
        }
    }
    Err(BurnError::Unburnable)
}

fn search_first_source_parallel(
    g: &Graph,
    k: usize,
    threads: usize,
    fires: &(dyn Fn(&VertexSet) -> VertexSet + Sync),
    prune: &(dyn Fn(&VertexSet, usize) -> bool + Sync),
) -> Option<Vec<usize>> {
    let n = g.order();
    let full = g.vertex_set();
    let mut results: Vec<Option<Vec<usize>>> = vec![None; n];
    let workers = threads.min(n);
    std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for w in 0..workers {
            handles.push(scope.spawn(move || {
                let mut local: Vec<(usize, Option<Vec<usize>>)> = Vec::new();
                let mut first = w;
                while first < n {
                    let hit = if k == 1 {
                        let mut after = fires(&VertexSet::EMPTY);
                        after.insert(first);
                        (after == full).then(|| vec![first])
                    } else {
                        let mut after = VertexSet::EMPTY.union(&fires(&VertexSet::EMPTY));
                        after.insert(first);
                        if prune(&after, k - 1) {
                            None
                        } else {
                            search_depth(full, k, after, &mut vec![first], fires, prune)
                        }
                    };
                    local.push((first, hit));
                    first += workers;
                }
                local
            }));
        }
        for handle in handles {
            for (first, hit) in handle.join().expect("search worker panicked") {
                results[first] = hit;
            }
        }
    });
    results.into_iter().flatten().next()
}

/// Whether some optimal burning sequence ends with a redundant source, i.e.
/// the first `k−1` sources already cover the graph one propagation step
/// later: `∪_{j<k} N_{k−j}[v_j] = V(G)`. Returns the lexicographically
/// smallest such sequence as witness.
pub fn has_optimal_sequence_with_redundant_last_source(
    g: &Graph,
) -> Result<(bool, Option<BurningSequence>), BurnError> {
    let (k, _) = burning_number(g)?;
    let full = g.vertex_set();
    if k == 1 {
        // a first source is never redundant (nothing burned in round 0)
        return Ok((false, None));
    }
    let ball_max = max_ball_sizes(g);

    // Enumerate length-(k−1) prefixes in lexicographic order; a prefix works
    // when one more propagation round would finish the job. Any unburned
    // vertex then completes it as a valid k-th source.
    fn prefix_search(
        g: &Graph,
        ball_max: &[usize],
        k: usize,
        burned: VertexSet,
        chosen: &mut Vec<usize>,
    ) -> Option<Vec<usize>> {
        let full = g.vertex_set();
        let depth = chosen.len() + 1;
        let grown = g.expand(&burned);
        for v in full.difference(&burned).iter() {
            let mut after = grown;
            after.insert(v);
            if depth == k - 1 {
                if g.expand(&after) == full {
                    let last = full
                        .difference(&after)
                        .min()
                        .expect("a shorter full burn would contradict minimality of k");
                    let mut seq = chosen.clone();
                    seq.push(v);
                    seq.push(last);
                    return Some(seq);
                }
                continue;
            }
            // requirement: expanding the final prefix state once covers V
            let capacity: usize = (1..k - depth).map(|r| ball_max[r]).sum();
            let mut reach = after;
            for _ in 0..k - depth {
                reach = g.expand(&reach);
            }
            if full.difference(&reach).len() > capacity {
                continue;
            }
            chosen.push(v);
            if let Some(seq) = prefix_search(g, ball_max, k, after, chosen) {
                return Some(seq);
            }
            chosen.pop();
        }
        None
    }

    match prefix_search(g, &ball_max, k, VertexSet::EMPTY, &mut Vec::new()) {
        Some(seq) => {
            debug_assert_eq!(seq.len(), k);
            debug_assert!(full != VertexSet::EMPTY);
            Ok((
                true,
                Some(BurningSequence::new(seq).expect("distinct by search")),
            ))
        }
        None => Ok((false, None)),
    }
}

/// Exact hypergraph burning number (minimum rounds) via iterative deepening
/// over source choices, under the given singleton rule.
pub fn hypergraph_burning_number(
    h: &Hypergraph,
    mode: SingletonMode,
) -> Result<(usize, BurningSequence), BurnError> {
    if h.order() == 0 {
        return Err(BurnError::EmptyInstance);
    }
    let full = h.vertex_set();
    let fires = |prev: &VertexSet| hyperedge_fires(h, prev, mode);
    let no_prune = |_: &VertexSet, _: usize| false;
    for k in 1..=h.order() {
        if let Some(seq) = search_depth(full, k, VertexSet::EMPTY, &mut Vec::new(), &fires, &no_prune)
        {
            return Ok((k, BurningSequence::new(seq).expect("distinct by search")));
        }
    }
    // placing every vertex as a source burns everything, so this is
    // unreachable for non-empty instances
    Err(BurnError::Unburnable)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::{fig1_hypergraph, fig3_graph, fig6_hypergraph, fig7_g, fig7_h};

    fn seq(entries: &[usize]) -> BurningSequence {
        BurningSequence::new(entries.to_vec()).unwrap()
    }

    #[test]
    fn simulate_fig3_optimal_sequence() {
        let g = fig3_graph();
        // (v2, v5, v8)
        let trace = simulate_graph_burning(&g, &seq(&[1, 4, 7])).unwrap();
        assert_eq!(trace.rounds.len(), 3);
        assert!(trace.fully_burned_within(3, &g.vertex_set()));
        assert_eq!(trace.rounds[0].source, Some(1));
        assert!(trace.rounds[0].spread.is_empty());
        assert_eq!(trace.rounds[1].spread.to_vec(), vec![0, 2, 3, 5]);
        // round 3: v8 is placed as a source, propagation adds v7
        assert_eq!(trace.rounds[2].source, Some(7));
        assert_eq!(trace.rounds[2].spread.to_vec(), vec![6]);

        // (v6, v1, v5) also burns everything by round 3
        let trace = simulate_graph_burning(&g, &seq(&[5, 0, 4])).unwrap();
        assert!(trace.fully_burned_within(3, &g.vertex_set()));
    }

    #[test]
    fn simulate_single_vertex() {
        let g = Graph::complete(1).unwrap();
        let trace = simulate_graph_burning(&g, &seq(&[0])).unwrap();
        assert_eq!(trace.rounds.len(), 1);
        assert!(trace.fully_burned_within(1, &g.vertex_set()));
    }

    #[test]
    fn simulate_rejects_burned_source() {
        let g = fig3_graph();
        // after (v2, v1) the spread has burned v3 while v5, v7, v8 remain
        let err = simulate_graph_burning(&g, &seq(&[1, 0, 2])).unwrap_err();
        assert_eq!(err, BurnError::SourceAlreadyBurned { v: 2, round: 3 });
        assert!(matches!(
            simulate_graph_burning(&g, &seq(&[42])),
            Err(BurnError::VertexOutOfRange { v: 42, .. })
        ));
        assert!(matches!(
            BurningSequence::new(vec![1, 1]),
            Err(BurnError::RepeatedSource { v: 1 })
        ));
    }

    #[test]
    fn characterization_examples() {
        let g = fig3_graph();
        assert!(is_burning_sequence(&g, &seq(&[1, 4, 7])).unwrap());
        assert!(is_burning_sequence(&g, &seq(&[5, 0, 4])).unwrap());
        // d(v2, v3) = 1 < 2 breaks the distance condition
        assert!(!is_burning_sequence(&g, &seq(&[1, 0, 2])).unwrap());
        // (v2, v1, v5) passes both conditions
        assert!(is_burning_sequence(&g, &seq(&[1, 0, 4])).unwrap());
        assert!(!is_burning_sequence(&g, &seq(&[])).unwrap());
    }

    #[test]
    fn burning_numbers_of_named_graphs() {
        let (b, w) = burning_number(&fig3_graph()).unwrap();
        assert_eq!(b, 3);
        assert_eq!(w.as_slice(), &[0, 5, 4]); // (v1, v6, v5), lexicographic least

        assert_eq!(burning_number(&fig7_g()).unwrap().0, 2);
        assert_eq!(burning_number(&fig7_h()).unwrap().0, 3);
        assert_eq!(burning_number(&Graph::path(9).unwrap()).unwrap().0, 3);
        assert_eq!(burning_number(&Graph::complete(1).unwrap()).unwrap().0, 1);
        assert!(matches!(
            burning_number(&Graph::empty(0).unwrap()),
            Err(BurnError::EmptyInstance)
        ));
        // disconnected graphs are legal: each component needs its own sources
        let two_isolated = Graph::empty(2).unwrap();
        assert_eq!(burning_number(&two_isolated).unwrap().0, 2);
    }

    #[test]
    fn witness_is_thread_count_independent() {
        for g in [fig3_graph(), fig7_h(), Graph::path(9).unwrap()] {
            let sequential = burning_number_with_threads(&g, 1).unwrap();
            for threads in [2, 4] {
                assert_eq!(burning_number_with_threads(&g, threads).unwrap(), sequential);
            }
        }
    }

    #[test]
    fn redundant_last_source_examples() {
        let g = fig3_graph();
        let (flag, witness) = has_optimal_sequence_with_redundant_last_source(&g).unwrap();
        assert!(flag);
        let witness = witness.unwrap();
        // lexicographically least redundant-ending optimal sequence
        assert_eq!(witness.as_slice(), &[1, 0, 4]); // (v2, v1, v5)
        assert!(is_burning_sequence(&g, &witness).unwrap());

        // the paper's (v2, v5, v8) is also such a sequence: re-simulating the
        // first two sources alone still burns V(G) within 3 rounds
        assert!(is_burning_sequence(&g, &seq(&[1, 4, 7])).unwrap());
        let trace = simulate_graph_burning(&g, &seq(&[1, 4])).unwrap();
        assert!(trace.fully_burned_within(3, &g.vertex_set()));

        // P_9 has no optimal sequence ending in a redundant source
        let p9 = Graph::path(9).unwrap();
        assert_eq!(
            has_optimal_sequence_with_redundant_last_source(&p9).unwrap(),
            (false, None)
        );

        // on complete graphs every second-round source is redundant
        for n in 2..=5 {
            let kn = Graph::complete(n).unwrap();
            let (flag, w) = has_optimal_sequence_with_redundant_last_source(&kn).unwrap();
            assert!(flag);
            assert_eq!(w.unwrap().as_slice(), &[0, 1]);
        }
        let k1 = Graph::complete(1).unwrap();
        assert_eq!(
            has_optimal_sequence_with_redundant_last_source(&k1).unwrap(),
            (false, None)
        );
    }

    #[test]
    fn redundant_witness_prefix_burns_alone() {
        // whenever the predicate holds, dropping the last source still burns
        // the graph in k rounds
        for g in [fig3_graph(), fig7_g(), fig7_h(), Graph::complete(4).unwrap()] {
            let (flag, witness) = has_optimal_sequence_with_redundant_last_source(&g).unwrap();
            assert!(flag);
            let w = witness.unwrap();
            let k = w.len();
            let prefix = BurningSequence::new(w.as_slice()[..k - 1].to_vec()).unwrap();
            let trace = simulate_graph_burning(&g, &prefix).unwrap();
            assert!(trace.fully_burned_within(k, &g.vertex_set()));
        }
    }

    #[test]
    fn hypergraph_simulation_follows_the_firing_order() {
        let h = fig1_hypergraph();
        // lazy-style run from the single source v2: h2 fires v4, then h3
        // fires v3, then h1 fires v1
        let trace = simulate_hypergraph_burning(&h, &seq(&[1]), SingletonMode::Strict).unwrap();
        assert_eq!(trace.rounds.len(), 4);
        assert_eq!(trace.rounds[1].spread.to_vec(), vec![3]);
        assert_eq!(trace.rounds[2].spread.to_vec(), vec![2]);
        assert_eq!(trace.rounds[3].spread.to_vec(), vec![0]);
        assert_eq!(trace.final_burned, h.vertex_set());
    }

    #[test]
    fn vacuous_singleton_fires_immediately() {
        let h = Hypergraph::new(1, [vec![0usize]]).unwrap();
        let trace = simulate_hypergraph_burning(&h, &seq(&[]), SingletonMode::Vacuous).unwrap();
        assert_eq!(trace.rounds.len(), 1);
        assert_eq!(trace.rounds[0].source, None);
        assert_eq!(trace.rounds[0].spread.to_vec(), vec![0]);

        // in strict mode the same run stalls immediately
        let trace = simulate_hypergraph_burning(&h, &seq(&[]), SingletonMode::Strict).unwrap();
        assert!(trace.rounds.is_empty());
        assert!(trace.final_burned.is_empty());
    }

    #[test]
    fn two_uniform_hypergraph_burning_matches_graph_burning() {
        let g = fig3_graph();
        let h = Hypergraph::from_graph(&g);
        for s in [vec![1usize, 4, 7], vec![5, 0, 4], vec![0]] {
            let s = seq(&s);
            let gt = simulate_graph_burning(&g, &s).unwrap();
            let ht = simulate_hypergraph_burning(&h, &s, SingletonMode::Strict).unwrap();
            assert_eq!(gt, ht);
        }
    }

    #[test]
    fn hypergraph_burning_numbers() {
        // round-count semantics: (v4, v1) burns Fig. 1 in two rounds
        let (b, w) = hypergraph_burning_number(&fig1_hypergraph(), SingletonMode::Strict).unwrap();
        assert_eq!((b, w.as_slice()), (2, &[3usize, 0][..]));

        // a single hyperedge on 4 vertices only fires once 3 are burned, and
        // the mandatory fourth-round source arrives with the spread
        let h4 = Hypergraph::single_full_hyperedge(4).unwrap();
        let (b, w) = hypergraph_burning_number(&h4, SingletonMode::Strict).unwrap();
        assert_eq!((b, w.as_slice()), (4, &[0usize, 1, 2, 3][..]));

        let (b, _) = hypergraph_burning_number(&fig6_hypergraph(), SingletonMode::Strict).unwrap();
        assert_eq!(b, 3);

        // singleton rule changes the count
        let h = Hypergraph::new(2, [vec![0usize], vec![0, 1]]).unwrap();
        assert_eq!(
            hypergraph_burning_number(&h, SingletonMode::Strict)
                .unwrap()
                .0,
            2
        );
        assert_eq!(
            hypergraph_burning_number(&h, SingletonMode::Vacuous)
                .unwrap()
                .0,
            1
        );
    }
}
