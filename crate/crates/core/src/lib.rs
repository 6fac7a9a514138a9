//! Exact two-terminal reliability of binary-state networks.
//!
//! Components (arcs or nodes) are either working or failed, independently.
//! The reliability is the probability that node 1 reaches node `n`, computed
//! by enumerating every state vector in binary-addition order and testing
//! each with a layered search. Components whose reliability is unknown can
//! be rated by experts on a linguistic scale; the [`fuzzy`] module turns
//! those ratings into crisp probabilities first.

pub mod connectivity;
pub mod enumeration;
pub mod error;
pub mod fuzzy;
pub mod model;
pub mod reliability;
pub mod summation;

pub use connectivity::{
    dfs_connected, plsa, plsa_aoa, plsa_aon, LayerTrace, LayeredSearch, Verdict,
};
pub use enumeration::{enumerate_aoa, enumerate_aon, vector_count, BatCursor};
pub use error::{Error, Result};
pub use fuzzy::{
    alpha_cut, average_fuzzy_number, fps, fps_left, fps_right, fps_to_ffr,
    resolve_uncertain_component, AlphaCutInterval, DefuzzificationResult, FailureRate,
    LinguisticVariable, TriangularFuzzyNumber,
};
pub use model::{
    vector_subgraph, ExpertRatingSet, Mode, Network, StateDistribution, StateVector, Subgraph,
};
pub use reliability::{
    exact_reliability, mc_reliability, mc_reliability_parallel, vector_probability, ExactOptions,
    McEstimate, ReliabilityReport, TraceRow, DEFAULT_MAX_BITS,
};
pub use summation::CompensatedSum;
