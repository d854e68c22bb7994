//! The alternating power sum `S_d(x) = x^d - (x+1)^d - (x+2)^d + (x+3)^d`,
//! computed three independent ways:
//!
//! * [`alt_sum_naive`] raises each term to the `d`-th power directly,
//! * [`alt_sum_poly`] expands the four binomials into one polynomial in `x`,
//! * [`to_u_form`] rewrites the sum in the centred variable `u = 2x + 3`:
//!
//! ```text
//! S_d = 2^-d [ (u+3)^d - (u+1)^d - (u-1)^d + (u-3)^d ]
//! ```
//!
//! Only powers `u^i` with `i ≡ d (mod 2)` survive in the u-form, and every
//! coefficient is nonnegative, so for `d >= 3` it is strictly increasing on
//! `u >= 1`. The search module relies on that.

use std::fmt;

use num_traits::{Pow, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{binomial_expand, ExactInt, HalfInt, IntPoly, RatPoly, Ratio};
use crate::error::{Error, Result};

/// Exponent `d >= 1` of the power sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct Degree(u32);

impl Degree {
    pub fn new(d: u32) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidDegree { got: d, min: 1 });
        }
        Ok(Degree(d))
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

impl TryFrom<u32> for Degree {
    type Error = Error;

    fn try_from(d: u32) -> Result<Self> {
        Degree::new(d)
    }
}

impl From<Degree> for u32 {
    fn from(d: Degree) -> u32 {
        d.0
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

const SIGNS: [(i64, i64); 4] = [(0, 1), (1, -1), (2, -1), (3, 1)];

/// Direct evaluation of `S_d(x)`. This is the reference every other route
/// is checked against.
pub fn alt_sum_naive(x: &HalfInt, d: Degree) -> Ratio {
    let x = x.to_ratio();
    SIGNS.iter().fold(Ratio::zero(), |acc, &(offset, sign)| {
        let term: Ratio = Pow::pow(&x + Ratio::from_integer(offset.into()), d.get());
        if sign > 0 {
            acc + term
        } else {
            acc - term
        }
    })
}

/// `S_d` expanded as a polynomial in `x` with integer coefficients.
pub fn alt_sum_poly(d: Degree) -> IntPoly {
    let sum = SIGNS.iter().fold(RatPoly::zero(), |acc, &(offset, sign)| {
        let term = binomial_expand(&Ratio::from_integer(offset.into()), d.get());
        if sign > 0 {
            &acc + &term
        } else {
            &acc - &term
        }
    });
    sum.to_int()
        .expect("binomials with integer offsets have integer coefficients")
}

/// `S_d` as a polynomial in `u = 2x + 3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UForm {
    d: Degree,
    poly: RatPoly,
}

pub fn to_u_form(d: Degree) -> UForm {
    // (u+3)^d - (u+1)^d - (u-1)^d + (u-3)^d, then divide by 2^d
    let shifted = [(3, 1), (1, -1), (-1, -1), (-3, 1)];
    let sum = shifted
        .iter()
        .fold(RatPoly::zero(), |acc, &(offset, sign)| {
            let term = binomial_expand(&Ratio::from_integer(ExactInt::from(offset)), d.get());
            if sign > 0 {
                &acc + &term
            } else {
                &acc - &term
            }
        });
    let scale = Ratio::new(1.into(), Pow::pow(ExactInt::from(2), d.get()));
    UForm {
        d,
        poly: sum.scale(&scale),
    }
}

impl UForm {
    pub fn degree(&self) -> Degree {
        self.d
    }

    pub fn poly(&self) -> &RatPoly {
        &self.poly
    }

    pub fn eval(&self, u: &Ratio) -> Ratio {
        self.poly.eval(u)
    }

    pub fn eval_int(&self, u: &ExactInt) -> Ratio {
        self.poly.eval(&Ratio::from_integer(u.clone()))
    }

    /// Substitutes `u = 2x + 3`, giving a polynomial in `x`.
    pub fn in_x(&self) -> RatPoly {
        let two = Ratio::from_integer(2.into());
        let three = Ratio::from_integer(3.into());
        self.poly.compose(&RatPoly::linear(two, three))
    }

    /// Nonnegative non-constant coefficients with at least one positive.
    pub fn is_increasing_on_positive(&self) -> bool {
        let mut rising = false;
        for c in self.poly.coeffs().iter().skip(1) {
            if c.is_negative() {
                return false;
            }
            rising |= c.is_positive();
        }
        rising
    }

    /// Every nonzero coefficient sits on a power with the parity of `d`.
    pub fn has_degree_parity(&self) -> bool {
        let parity = self.d.get() as usize % 2;
        self.poly
            .coeffs()
            .iter()
            .enumerate()
            .all(|(i, c)| c.is_zero() || i % 2 == parity)
    }

    pub(crate) fn ensure_increasing(&self) -> Result<()> {
        if self.is_increasing_on_positive() {
            Ok(())
        } else {
            Err(Error::NotMonotone(self.d.get()))
        }
    }
}

impl fmt::Display for UForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poly.render("u"))
    }
}
