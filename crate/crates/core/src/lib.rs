//! Signed complete graphs `(K_n, T⁻)` whose negative edges form a spanning tree.
//!
//! The crate is `no_std` and only needs `alloc`. It covers:
//!
//! * labelled trees, the Prüfer bijection, centroid-rooted canonical codes and
//!   the named families (star, path, double star, broom) in [`tree`],
//!   [`prufer`] and [`canon`];
//! * the signed complete graph built from a negative-edge tree in [`signed`];
//! * a cyclic Jacobi eigensolver and the index / least eigenvalue / spectral
//!   radius of the signed adjacency matrix in [`spectra`];
//! * balance, cycle signs and switching in [`balance`];
//! * the two sign-rotation moves, their eigenvector preconditions and a
//!   first-improvement hill climb in [`perturb`];
//! * free-tree enumeration, the exhaustive maximum-index verifier, the
//!   double-star chain and the structural audit in [`search`].
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod balance;
pub mod canon;
mod error;
pub mod perturb;
pub mod prufer;
pub mod search;
pub mod signed;
pub mod spectra;
pub mod tree;


pub use canon::{canonical_code, CanonicalTreeCode};
pub use error::{Error, Result};
pub use prufer::{prufer_decode, prufer_encode, PruferSequence};
pub use signed::{Sign, SignedCompleteGraph};
pub use spectra::{
    adjacency_matrix, eigen_decompose, index, least_eigenvalue, spectral_radius, spectrum,
    top_eigenvector, Spectrum, SymMatrix, TopEigenvector,
};
pub use tree::{Edge, Tree};
pub use balance::{balance_witness, cycle_sign, is_balanced, switch, BalanceWitness, SwitchSet};
pub use perturb::{
    apply_rotation, check_precondition, hill_climb, tree_moves, ClimbOutcome, ClimbStep,
    PreconditionReport, RotationKind, RotationMove,
};
pub use search::{
    chain_strictly_increasing, double_star_chain, enumerate_tree_classes,
    enumerate_tree_classes_by_prufer, enumerate_with_leaves, structural_audit, verify_mode,
    verify_theorem1, verify_with_classes, AuditCheck, ChainLink, ClassIndex, FreeTrees,
    SearchReport, StructuralAudit, TreeClass, VerifyMode,
};
