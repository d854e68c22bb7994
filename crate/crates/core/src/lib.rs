//! Exact arithmetic for the alternating power sum
//!
//! ```text
//! S_d(x) = x^d - (x+1)^d - (x+2)^d + (x+3)^d
//! ```
//!
//! and for identities equating it to sums of powers of a base `b`, such as
//! `1561^5 - 1562^5 - 1563^5 + 1564^5 = 5^7 + 5^16`.
//!
//! The central normal form is the substitution `u = 2x + 3`, which turns
//! `S_d` into a polynomial in `u` containing only powers with the parity of
//! `d` (see [`power_sum::UForm`]). Parametric families with argument
//! `u = b^k` are proven for every `k` by inspecting that polynomial's
//! coefficients ([`family::prove_symbolic`]), bounded searches invert it
//! exactly ([`search`]), and [`discover`] scans degrees and bases for every
//! family of this shape.

pub mod arith;
pub mod discover;
mod error;
pub mod family;
pub mod power_sum;
pub mod search;
pub(crate) mod serde_str;

pub use arith::{
    binomial_expand, poly_eval, poly_mul, ExactInt, HalfInt, IntPoly, Poly, RatPoly, Ratio,
};
pub use discover::discover_families;
pub use error::{Error, Result};
pub use family::{
    prove_symbolic, FamilyReport, FamilySpec, IdentityInstance, PowerTerm, ProofResult,
};
pub use power_sum::{alt_sum_naive, alt_sum_poly, to_u_form, Degree, UForm};
pub use search::{
    brute_force_search, invert_on_odd, padic_valuation, search_structured, Exponents, Parity,
    RhsForm, SearchConfig, SearchLimits, SearchMethod, SearchReport, SolutionRecord,
};
