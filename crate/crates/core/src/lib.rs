//! Spectral-radius conditions for homeomorphically irreducible spanning
//! trees (HISTs): graph primitives, graph6 I/O, the adjacency spectral
//! radius and extremal quartics, exact HIST search, and exhaustive
//! verification drivers.

pub mod enumeration;
pub mod graph;
pub mod graph6;
pub mod hist;
pub mod spectral;

pub use enumeration::{
    audit_prescreens, enumerate_labeled, verify_certificates, verify_corollaries, verify_theorem1,
    verify_theorem2, Connectivity, Prescreen, Source, VerificationReport, VerifyError, VerifyOptions,
};
pub use graph::{matches_bn, matches_ln, Family, Graph, GraphError, VertexSet};
pub use graph6::{decode_graph6, encode_graph6, stream_graph6, Graph6Error};
pub use hist::{
    find_hist, no_hist_certificate, oracle_hist, proof_guided_hist, Certificate, HistOutcome,
    ProofTheorem, ProofTrace, SearchError,
};
pub use spectral::{
    charpoly_bn, charpoly_ln, delta_bound, hong_bound, slack_bounds, spectral_radius, ExtremalFamily,
    PowerOptions, QuarticPoly, SpectralError, SpectralResult,
};
