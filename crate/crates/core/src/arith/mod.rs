//! Exact integers, rationals, half-integers and dense univariate polynomials.
//!
//! Integers and rationals are `num-bigint` / `num-rational` values; a
//! [`Ratio`] built through any public constructor is always reduced with a
//! positive denominator.

mod halfint;
mod poly;

pub use halfint::HalfInt;
pub use poly::{Coeff, IntPoly, Poly, RatPoly};

use num_traits::{One, Pow, Zero};

use crate::error::{Error, Result};

/// Signed integer of unbounded magnitude.
pub type ExactInt = num_bigint::BigInt;

/// Reduced rational with positive denominator.
pub type Ratio = num_rational::BigRational;

/// `base^exp` as an exact integer.
pub fn int_pow(base: u32, exp: u32) -> ExactInt {
    Pow::pow(ExactInt::from(base), exp)
}

pub fn parse_int(text: &str) -> Result<ExactInt> {
    text.trim()
        .parse()
        .map_err(|_| Error::parse("integer", text))
}

/// Parses `p/q` or a bare integer `p`.
pub fn parse_ratio(text: &str) -> Result<Ratio> {
    let text = text.trim();
    match text.split_once('/') {
        Some((num, den)) => {
            let num = parse_int(num)?;
            let den = parse_int(den)?;
            if den.is_zero() {
                return Err(Error::parse("rational", text));
            }
            Ok(Ratio::new(num, den))
        }
        None => Ok(Ratio::from_integer(parse_int(text)?)),
    }
}

/// The integer value of `r`, if its denominator is 1.
pub fn ratio_to_int(r: &Ratio) -> Option<ExactInt> {
    r.is_integer().then(|| r.to_integer())
}

/// Expands `(X + offset)^d`.
pub fn binomial_expand(offset: &Ratio, d: u32) -> RatPoly {
    let mut coeffs = Vec::with_capacity(d as usize + 1);
    let mut binom = ExactInt::one();
    for i in 0..=d {
        // coefficient of X^i is C(d, i) * offset^(d - i)
        coeffs.push(Ratio::from_integer(binom.clone()) * Pow::pow(offset, d - i));
        binom = binom * (d - i) / (i + 1);
    }
    RatPoly::new(coeffs)
}

pub fn poly_mul(a: &RatPoly, b: &RatPoly) -> RatPoly {
    a * b
}

pub fn poly_eval(p: &RatPoly, v: &Ratio) -> Ratio {
    p.eval(v)
}
