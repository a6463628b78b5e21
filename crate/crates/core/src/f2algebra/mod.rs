//! Characters of `(Z/2)^k`, polynomials over `Z/2[rho_1, ..., rho_k]` and
//! symmetric functions evaluated at multisets of linear forms.

mod auto;
mod character;
mod multiset;
mod poly;
mod symfn;

pub use auto::{apply_auto, Automorphism};
pub use character::{char_add, in_span, is_independent, odd_sums, span_dim, Character, MAX_RANK};
pub use multiset::{euler_class, euler_class_with, CharMultiset};
pub use poly::{
    divide_by_linear, divide_by_linear_full, divide_by_linear_with_pivot, poly_add, poly_mul,
    poly_pow, F2Poly, Monomial,
};
pub use symfn::{eval_sym, eval_sym_with, SymFactor, SymFnExpr};
