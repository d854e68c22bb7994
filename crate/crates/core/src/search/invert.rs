use num_integer::Integer;
use num_traits::{One, Zero};

use super::Parity;
use crate::arith::{ExactInt, IntPoly};
use crate::error::{Error, Result};
use crate::power_sum::UForm;

/// Largest `e` with `p^e | n`.
///
/// Any `p >= 2` is accepted; for composite `p` this counts how often the
/// whole of `p` divides `n`.
pub fn padic_valuation(n: &ExactInt, p: u32) -> Result<u32> {
    if n.is_zero() {
        return Err(Error::ZeroValuation);
    }
    if p < 2 {
        return Err(Error::InvalidBase(p));
    }
    Ok(strip_base(n, p).0)
}

/// `(e, n / p^e)` with `e` the valuation. `n` must be nonzero.
pub(crate) fn strip_base(n: &ExactInt, p: u32) -> (u32, ExactInt) {
    let p = ExactInt::from(p);
    let mut rest = n.clone();
    let mut e = 0;
    loop {
        let (q, r) = rest.div_rem(&p);
        if !r.is_zero() {
            return (e, rest);
        }
        rest = q;
        e += 1;
    }
}

/// Exact inverse of an increasing u-form, working on `P(u) = D·g(u)` so no
/// rationals appear inside the bisection.
#[derive(Clone, Debug)]
pub(crate) struct Inverter {
    num: IntPoly,
    den: ExactInt,
}

impl Inverter {
    pub(crate) fn new(g: &UForm) -> Result<Self> {
        g.ensure_increasing()?;
        let (num, den) = g.poly().clear_denominators();
        Ok(Inverter { num, den })
    }

    pub(crate) fn numerator(&self) -> &IntPoly {
        &self.num
    }

    pub(crate) fn denominator(&self) -> &ExactInt {
        &self.den
    }

    /// `g(u)` if it is an integer.
    pub(crate) fn eval_int(&self, u: &ExactInt) -> Option<ExactInt> {
        let (q, r) = self.num.eval(u).div_rem(&self.den);
        r.is_zero().then_some(q)
    }

    /// The `u >= 1` of admissible parity with `g(u) = n`.
    pub(crate) fn invert(&self, n: &ExactInt, parity: Parity) -> Option<ExactInt> {
        let target = n * &self.den;
        let below = |u: &ExactInt| self.num.eval(u) < target;

        // doubling bracket: g(lo) < n <= g(hi), with lo = 0 standing in for
        // "nothing below"
        let mut lo = ExactInt::zero();
        let mut hi = ExactInt::one();
        while below(&hi) {
            lo = hi.clone();
            hi <<= 1;
        }
        while &hi - &lo > ExactInt::one() {
            let mid: ExactInt = (&lo + &hi) >> 1;
            if below(&mid) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        (self.num.eval(&hi) == target && parity.admits(&hi)).then_some(hi)
    }
}

/// Finds the unique `u >= 1` of the requested parity with `g(u) = n`, where
/// `g` must be strictly increasing on positive `u`.
pub fn invert_on_odd(g: &UForm, n: &ExactInt, parity: Parity) -> Result<Option<ExactInt>> {
    Ok(Inverter::new(g)?.invert(n, parity))
}
