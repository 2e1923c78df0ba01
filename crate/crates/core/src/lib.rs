//! Approximate tree H-decompositions for hereditary, union-closed graph classes.
//!
//! The crate is `no_std` (it needs `alloc`). Everything here is a pure function
//! over immutable [`Graph`] values; file formats and the command-line front end
//! live in the `htw-cli` crate.
//!
//! The main entry points are:
//!
//! * [`decompose`]: either a tree H-decomposition of width at most `5k + 5`, or a
//!   certificate that the H-treewidth exceeds `k`.
//! * [`weak_coverage`]: a 2-approximation for finding an `(H, 2k)`-separation
//!   that weakly covers a vertex set.
//! * [`validate`]: checks the four conditions of a tree H-decomposition.
//! * [`exact`]: brute-force ground truth for small graphs.
//!
//! ```
//! use htw_core::{decompose, preset, validate, Graph, Outcome};
//!
//! let g = Graph::complete_bipartite(9, 11);
//! let class = preset("bipartite").unwrap();
//! match decompose(&g, 0, &*class)? {
//!     Outcome::Decomposed(d) => {
//!         assert!(validate(&g, &d, &*class).is_valid());
//!         assert!(d.width() <= 5);
//!     }
//!     Outcome::WidthExceeded => unreachable!("complete bipartite graphs are bipartite"),
//! }
//! # Ok::<(), htw_core::Error>(())
//! ```

#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

pub mod approx;
pub mod class;
pub mod coverage;
pub mod decomposition;
mod error;
pub mod exact;
pub mod flow;
pub mod graph;

pub use approx::{decompose, DecomposeRun, Decomposer, Outcome, SubroutineOutcome};
pub use class::{preset, ClassOracle, CountingOracle, DeletionAnswer, PRESET_NAMES};
pub use coverage::{weak_coverage, CoverageAnswer, HSeparation};
pub use decomposition::{validate, TreeHDecomposition, TreeNode, ValidationReport, Violation};
pub use error::{Error, Result};
pub use flow::{min_vertex_separator, FlowResult, PathFamily};
pub use graph::{Graph, Relabeling, Separation, VertexSet};
