//! Exact propagation-process solvers on graphs and hypergraphs.
//!
//! The crate covers four deterministic processes at desk scale:
//!
//! - **graph burning**: one new source per round, fire spreads to neighbors;
//! - **hypergraph burning**: fire spreads along a hyperedge once all but one
//!   of its vertices are burned;
//! - **lazy burning**: a single initial set, then pure propagation;
//! - **zero forcing**: a blue vertex with exactly one white neighbor forces it.
//!
//! On top of the solvers sit graph products with exact Kronecker-based
//! adjacency algebra, division-free integer characteristic polynomials for
//! cospectrality testing, and a [`harness`] that mechanically verifies the
//! bounds tying the processes together (e.g. `Z(IG(H)) ≤ b_L(H) + |E(H)| − k`)
//! and generates cospectral graph pairs with different burning numbers.
//!
//! All vertex sets are fixed-width bitsets capped at [`vset::VERTEX_CAP`]
//! vertices; every instance the solvers are meant for fits comfortably.

pub mod burning;
pub mod forcing;
pub mod graph;
pub mod harness;
pub mod hypergraph;
pub mod io;
pub mod lazy;
pub mod spectral;
mod subsets;
pub mod vset;

pub use burning::{
    burning_number, burning_number_with_threads,
    has_optimal_sequence_with_redundant_last_source, hypergraph_burning_number,
    is_burning_sequence, simulate_graph_burning, simulate_hypergraph_burning, BurnError,
    BurnRound, BurnTrace, BurningSequence, SingletonMode,
};
pub use forcing::{
    force_closure, is_zero_forcing_set, min_zfs_neighbor_lemma_check, zero_forcing_number,
    ForcingError, ForcingTrace,
};
pub use graph::{
    are_isomorphic_bruteforce, Distance, Graph, GraphError, VertexLabeling, DEFAULT_ISO_LIMIT,
};
pub use hypergraph::{Hypergraph, HypergraphComponent, HypergraphError, IncidenceGraph};
pub use lazy::{
    component_additivity_check, is_lazy_burning_set, lazy_burning_number, lazy_propagate,
    LazyBurnResult, LazyRound,
};
pub use spectral::{
    are_cospectral, cartesian_product, char_poly, kronecker, spectrum_approx, strong_product,
    strong_product_matrix_identity, strong_product_spectrum_formula, IntMatrix, IntPolynomial,
    ProductVertexMap, SpectralError, SpectrumApprox,
};
pub use vset::{VertexSet, VERTEX_CAP};
