//! Exact principal pivot transforms over GF(2) and the rationals.
//!
//! The crate covers the pivot `A * X` and its identities, graph pivots by
//! local and edge complementation, nullity partition sequences of principal
//! submatrices, the interlace polynomials `q` and `q'`, and closed walks of
//! 2-in 2-out digraphs given by double occurrence strings.
//!
//! ```
//! use ppt_core::{pivot, Matrix, Subset};
//!
//! let a = Matrix::parse("field q\na b c\n1 2 5\n1 4 2\n3 2 1\n").unwrap();
//! let x = Subset::parse(a.domain(), "a,b").unwrap();
//! let p = pivot(&a, &x).unwrap();
//! assert_eq!(p.entry("c", "c").unwrap().to_string(), "-20");
//! ```

pub mod circuits;
#[cfg(feature = "cli")]
pub mod cli;
pub mod dense;
pub mod domain;
pub mod error;
pub mod gf2;
pub mod graph;
pub mod interlace;
mod io;
pub mod matrix;
pub mod pivot;
pub mod random;
pub mod scalar;
pub mod set_systems;
pub mod verify;

pub use circuits::{
    cohn_lempel_check, digraph_of, overlap_graph, trace_partition, walk_distribution, walk_string,
    DoubleOccurrenceString, TwoInTwoOutDigraph, WalkPartition,
};
pub use domain::{Domain, Subset, MAX_LABELS};
pub use error::{Error, Result};
pub use graph::{elementary_decomposition, graph_from_set_system, pivot_orbit, pivot_orbit_with_cap, Graph, Move, Orbit};
pub use interlace::{
    q_direct, q_from_q_prime, q_general_recursive, q_prime_direct, q_prime_from_q, q_prime_naive, q_recursive,
    IntPolynomial, RecursionCheck,
};
pub use matrix::Matrix;
pub use pivot::{
    fiedler_check, nullity_after_pivot, pivot, pivot_composition, schur_nullity_check, sharp_composition_check,
    tucker_determinant_check, verify_partial_inverse, PivotComposition,
};
pub use scalar::{Field, Scalar};
pub use set_systems::{norm_of, partition_sequence_of, set_system_of, NormVector, PartitionSequence, SetSystem};
