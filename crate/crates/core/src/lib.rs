//! Generalized Zhang-Zhang polynomials of benzenoids, tubulenes and
//! fullerenes, generalized cube polynomials of their resonance graphs, and
//! the bijection between generalized Clar covers and convex `Q_{k,l}`
//! subgraphs that makes the two polynomials equal.

pub mod bijection;
pub mod chemgraph;
pub mod clarcover;
pub mod cli;
pub mod cubepoly;
pub mod graph;
pub mod matchings;
pub mod polynomial;
pub mod resonance;

pub use bijection::{clar_cover_to_subgraph, verify_bijection, verify_four_cycle_lemma};
pub use chemgraph::{ChemError, Family, MolecularGraph};
pub use clarcover::{enumerate_generalized_clar_covers, gzz_polynomial, zz_polynomial, GeneralizedClarCover};
pub use cubepoly::{count_induced_hypercubes, find_convex_qkl, gc_polynomial, QklEmbedding, QklShape};
pub use graph::SimpleGraph;
pub use matchings::{enumerate_perfect_matchings, PerfectMatching};
pub use polynomial::BivariatePolynomial;
pub use resonance::{build_resonance_graph, ResonanceGraph};
