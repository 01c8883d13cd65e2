//! Exact arithmetic for small permutation groups, outer commutator words and
//! their verbal subgroups, and the construction of large characteristic
//! subgroups satisfying an outer commutator law.
//!
//! Everything here is `no_std` with `alloc`. Groups are materialized in full
//! (default cap 10,000 elements), so every answer is exact.
//!
//! ```
//! use kmc_core::{catalog, khm, Limits, OuterWord};
//!
//! let limits = Limits::default();
//! let s3 = catalog::build("S3", &limits).unwrap();
//! let a3 = s3.subgroup(&[s3.generators()[1].clone()]).unwrap();
//! let word = OuterWord::parse("[x1,x2]").unwrap();
//! let trace = khm::construct(&s3, &a3, &word, &Default::default()).unwrap();
//! assert_eq!(trace.h.order(), 3);
//! assert!(trace.holds);
//! ```
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod catalog;
mod error;
pub mod group;
pub mod khm;
pub mod morphism;
pub mod oracle;
pub mod perm;
pub mod verbal;
pub mod word;

pub use error::{Error, Result};
pub use group::{Limits, PermGroup, SubgroupPair};
pub use morphism::GroupMap;
pub use perm::Permutation;
pub use word::OuterWord;
