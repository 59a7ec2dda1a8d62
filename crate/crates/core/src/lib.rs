//! Exact invariants of cographs and threshold graphs: recognition with
//! cotree certificates, the vicinal preorder and Dilworth number, and
//! integer-arithmetic spectral computations (characteristic polynomials,
//! eigenvalue multiplicities, equitable quotients). All linear algebra is
//! over arbitrary-precision integers; nothing here rounds.

pub mod codec;
pub mod cograph;
pub mod generators;
pub mod graph;
pub mod harness;
pub mod linalg;
pub mod search;
pub mod vicinal;

pub use cograph::{build_cotree, cotree_to_graph, find_induced_p4, is_cograph, Cotree};
pub use graph::{Graph, GraphError, VertexSet};
pub use linalg::{multiplicity_profile, IntMatrix, IntPolynomial, SpectralProfile};
pub use harness::{
    check_dilworth_bound, check_distinct_multipartite, check_glg_multiplicity,
    check_rank_property, check_threshold_simple, check_tightness, weight_two_null_basis,
    HarnessError, RankProperty, VerificationReport,
};
pub use search::{
    contains_induced, enumerate_graphs, find_counterexample, is_isomorphic, verify_theorem_4_3,
    SearchError, SearchMode, SearchSpec,
};
pub use vicinal::{dilworth_number, dilworth_report, is_threshold, DilworthReport};
