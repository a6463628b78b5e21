//! The prime tangent set, the localization (polynomiality) test, and the
//! diagonal, doubling and automorphism operations on fixed data.

mod ops;
mod prime;
mod tdks;

pub use ops::{delta_diagonal, delta_product, omega, sigma_map};
pub use prime::{is_bounding, prime_tangent_set, PrimeSet};
pub use tdks::{
    partitions_graded, tdks_batch, tdks_f_hat, tdks_f_hat_with, BatchFailure, BatchReport,
    TdksVerdict,
};
