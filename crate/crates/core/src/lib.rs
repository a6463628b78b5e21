//! Fixed-point data of `(Z/2)^k`-actions with isolated fixed points.
//!
//! The crate works entirely with the combinatorial shadow of an action:
//! the multiset of characters appearing in the tangent representation at
//! each fixed point, and the colored regular multigraphs compatible with
//! that data. On top of this it provides
//!
//! * exact arithmetic in `Z/2[rho_1, ..., rho_k]` ([`f2algebra`]),
//! * fixed data and colored 1-skeleta, their validation and enumeration
//!   ([`skeleton`]),
//! * the prime tangent set, the localization (polynomiality) test and the
//!   diagonal/doubling/automorphism operations ([`cobordism`]),
//! * generators and recognizers for the three- and four-fixed-point
//!   families, fixed-point bounds and related counts ([`classify`]),
//! * the JSON file formats used by the command-line tool ([`io`]).

pub mod classify;
pub mod cobordism;
mod error;
pub mod f2algebra;
pub mod io;
pub mod skeleton;

pub use error::{Error, Result};

/// Resource guards shared by the operations that can blow up.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest admissible rank `k` of the group.
    pub max_k: usize,
    /// Largest total degree a polynomial may reach.
    pub max_degree: u64,
    /// Largest number of partial states explored by skeleton enumeration.
    pub max_states: u64,
    /// Largest number of vertex tuples produced by the diagonal product.
    pub max_tuples: u64,
    /// Largest number of monomials any intermediate polynomial may hold.
    pub max_terms: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_k: 16,
            max_degree: 1_000_000,
            max_states: 1_000_000,
            max_tuples: 1_000_000,
            max_terms: 5_000_000,
        }
    }
}
