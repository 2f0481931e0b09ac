//! Independent oracles used to check the detector, and seeded random graph
//! generators for tests and benchmarks.

mod bfs;
pub mod generate;
mod irreducible;
mod spectral;

pub use bfs::{components_bfs, max_degree};
pub use generate::gen_block_graph;
pub use irreducible::{is_irreducible_bruteforce, BRUTE_FORCE_LIMIT};
pub use spectral::{
    spectrum, zero_multiplicity, SpectralReport, DEFAULT_ZERO_TOLERANCE, SPECTRAL_LIMIT,
};
