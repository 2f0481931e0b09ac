//! Connected components of undirected graphs from the Reverse Cuthill-McKee
//! ordering of the graph Laplacian.
//!
//! The pipeline builds `L = D - A`, orders it with RCM, symmetrically
//! permutes it to `Lhat`, and takes the lower-triangular row sums of
//! `Lhat`. Their zeros sit exactly at the last row of each diagonal block,
//! and each block is one component.
//!
//! ```
//! use lrcm::{components_lrcm, Graph, IndexBase};
//!
//! let g = Graph::from_edges(4, &[(1, 3), (2, 4)], IndexBase::One, false).unwrap();
//! let out = components_lrcm(&g).unwrap();
//! assert_eq!(out.cuts.as_slice(), &[2, 4]);
//! assert_eq!(out.partition.to_one_based(), vec![vec![1, 3], vec![2, 4]]);
//! ```

pub mod bench;
pub mod detection;
mod error;
pub mod graph;
pub mod io;
pub mod matrix;
pub mod ordering;
pub mod permutation;
pub mod verify;

pub use detection::{
    components_lrcm, detect_blocks_evec, find_cuts, lower_tri_row_sums, CutVector, LrcmOutput,
    Partition, RowSums,
};
pub use error::{Error, Result};
pub use graph::{Graph, IndexBase};
pub use matrix::{bandwidth, build_laplacian, permute_symmetric, SparseSymMatrix};
pub use ordering::{cuthill_mckee, level_structure, pseudoperipheral, rcm_order, LevelStructure};
pub use permutation::Permutation;
