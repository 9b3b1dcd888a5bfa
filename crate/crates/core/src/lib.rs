//! Exact module theory and cohomology for finite group algebras `k[G]` over
//! prime fields.
//!
//! Everything here is pure computation over `F_p` with `p <= 97` and groups of
//! order at most 64, stored as Cayley tables. The crate is `no_std` and needs
//! only `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod algebra;
pub mod cohomology;
pub mod error;
pub mod field;
pub mod group;
pub mod matrix;
pub mod module;
pub mod poly;
pub mod resolve;

pub use algebra::{AlgebraElement, GroupAlgebra};
pub use cohomology::{CohomologyClass, GradedRingPresentation};
pub use error::{Error, Result};
pub use field::{Fp, PrimeField};
pub use group::{build_group, direct_product, FiniteGroup, SubgroupData};
pub use matrix::{EchelonBasis, FpMatrix, LinearSolver};
pub use module::{ModuleMap, ModuleRep};
pub use poly::{factor_xq_minus_1, FpPoly};
