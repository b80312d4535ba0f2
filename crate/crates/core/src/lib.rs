//! Exact categorification of finite groups, group extensions and finite
//! topological spaces.
//!
//! Groups become small categories in three ways (one object with the group
//! as morphisms, the discrete groupoid, and the contractible simplicial
//! groupoid). Extensions become fibered monoidal groupoids whose sections
//! give factor sets and quasi-actions. Nerves of these categories give
//! normalized chain complexes whose homology is computed exactly by Smith
//! normal form.
//!
//! The integer linear algebra is generic over [`linalg::ExactInt`]; the
//! aliases below fix the arbitrary-precision default used by the rest of the
//! crate.

pub mod categorify;
pub mod category;
pub mod cohomology;
pub mod extension;
pub mod group;
pub mod io;
pub mod linalg;
pub mod nerve;
pub mod smallgroups;
pub mod topology;

use std::env;

pub use category::{FinCategory, Functor, MonoidalStructure, NatTransformation};
pub use group::{FiniteGroup, GroupHom, GroupRef};

/// Arbitrary-precision integer used for all homology and cohomology.
pub type Int = num_bigint::BigInt;
/// Dense matrix over [`Int`].
pub type IntMatrix = linalg::Matrix<Int>;
/// Chain complex over [`Int`].
pub type IntChainComplex = nerve::ChainComplex<Int>;

/// Environment variable overriding [`SearchLimit::default`].
pub const MAX_CANDIDATES_ENV: &str = "CATKIT_MAX_CANDIDATES";

/// Upper bound on the size of any brute-force candidate space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimit(u128);

impl SearchLimit {
    pub const DEFAULT: u128 = 100_000_000;

    pub fn new(max_candidates: u128) -> Self {
        SearchLimit(max_candidates)
    }

    /// Reads `CATKIT_MAX_CANDIDATES`, falling back to the default.
    pub fn from_env() -> Self {
        env::var(MAX_CANDIDATES_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .map(SearchLimit)
            .unwrap_or_default()
    }

    pub fn get(self) -> u128 {
        self.0
    }

    /// Errors with the offending count if `candidates` exceeds the bound.
    pub fn check(self, candidates: u128) -> Result<(), SizeLimitExceeded> {
        if candidates > self.0 {
            Err(SizeLimitExceeded { candidates, limit: self.0 })
        } else {
            Ok(())
        }
    }
}

impl Default for SearchLimit {
    fn default() -> Self {
        SearchLimit(Self::DEFAULT)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("candidate space of {candidates} exceeds the limit of {limit}")]
pub struct SizeLimitExceeded {
    pub candidates: u128,
    pub limit: u128,
}

/// `base^exp`, saturating.
pub(crate) fn power(base: usize, exp: usize) -> u128 {
    u32::try_from(exp)
        .ok()
        .and_then(|e| (base as u128).checked_pow(e))
        .unwrap_or(u128::MAX)
}
