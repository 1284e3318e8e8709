//! Correlation clustering toolkit.
//!
//! Implements correlation clustering on signed graphs and k-uniform
//! signed hypergraphs (motif clustering), with a focus on the lambda
//! edge-weighting scheme for unsigned inputs:
//!
//! - [`instances`]: instance types, clusterings, and objective evaluation;
//! - [`lp`]: LP relaxations, a bounded-variable simplex reference solver,
//!   and a cutting-plane solver for the path-cycle formulation;
//! - [`rounding`]: LP-rounding algorithms (threshold pivoting, CGW
//!   threshold clustering) with guarantee certificates;
//! - [`two_cluster`]: two-cluster algorithms and the min-uncut reductions;
//! - [`exact`]: brute-force exact solvers over all set partitions;
//! - [`gap`]: the LP integrality-gap harness (sparsest cuts, expansion,
//!   feasible witnesses, gap reports).
//!
//! All numeric code is generic over [`Scalar`] (`f32` or `f64`); the
//! `*64` / `*32` aliases below pick a concrete scalar.

pub mod error;
pub mod exact;
pub mod gap;
pub mod instances;
pub mod lp;
pub mod rounding;
pub mod scalar;
pub mod two_cluster;

pub use error::{Error, Result};
pub use scalar::Scalar;

pub use instances::{
    build_lambda_hypergraph, build_lambdacc_instance, cc_objective, mixed_motif_objective,
    motif_objective, Clustering, Graph, Hyperedge, LambdaHypergraph, LambdaParams,
    MixedMotifInstance, Objective, SignedGraph, SignedHypergraph,
};

pub type SignedGraph64 = instances::SignedGraph<f64>;
pub type SignedGraph32 = instances::SignedGraph<f32>;
pub type SignedHypergraph64 = instances::SignedHypergraph<f64>;
pub type SignedHypergraph32 = instances::SignedHypergraph<f32>;
pub type MixedMotifInstance64 = instances::MixedMotifInstance<f64>;
pub type MixedMotifInstance32 = instances::MixedMotifInstance<f32>;
pub type LambdaParams64 = instances::LambdaParams<f64>;
pub type LambdaParams32 = instances::LambdaParams<f32>;
pub type LpModel64 = lp::LpModel<f64>;
pub type LpModel32 = lp::LpModel<f32>;
pub type LpSolution64 = lp::LpSolution<f64>;
pub type LpSolution32 = lp::LpSolution<f32>;
pub type CgwParams64 = rounding::CgwParams<f64>;
pub type CgwParams32 = rounding::CgwParams<f32>;
pub type RoundingCertificate64 = rounding::RoundingCertificate<f64>;
pub type RoundingCertificate32 = rounding::RoundingCertificate<f32>;
pub type WeightedCutGraph64 = two_cluster::WeightedCutGraph<f64>;
pub type WeightedCutGraph32 = two_cluster::WeightedCutGraph<f32>;
pub type GapReport64 = gap::GapReport<f64>;
pub type GapReport32 = gap::GapReport<f32>;
