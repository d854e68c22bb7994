use num_integer::Integer;
use num_traits::ToPrimitive;

use super::Parity;
use crate::arith::{ExactInt, IntPoly};

const MAX_PERIOD: u64 = 1 << 20;

/// Residues modulo `b^j` that an integer-valued `g(u) = P(u)/D` can reach.
///
/// `P(u) mod D·M` depends only on `u mod D·M`, so one sweep over a period of
/// `2·D·M` (doubled to fix the parity of `u`) lists every attainable class
/// of `g(u) mod M`. A target outside those classes has no preimage. With
/// `M = 5^3` and `g = 5u^3 + 25u` this rules out exactly the targets of
/// 5-adic valuation 0 or 2.
#[derive(Clone, Debug)]
pub(crate) struct ResidueSieve {
    modulus: u64,
    attainable: Vec<bool>,
}

impl ResidueSieve {
    pub(crate) fn new(num: &IntPoly, den: &ExactInt, b: u32, parity: Parity) -> Option<Self> {
        let den = den.to_u64()?;
        (1..=3u32).rev().find_map(|j| {
            let modulus = u64::from(b).checked_pow(j)?;
            let wide = den.checked_mul(modulus)?;
            let period = wide.checked_mul(2)?;
            (period <= MAX_PERIOD).then(|| Self::sweep(num, den, modulus, wide, period, parity))
        })
    }

    fn sweep(
        num: &IntPoly,
        den: u64,
        modulus: u64,
        wide: u64,
        period: u64,
        parity: Parity,
    ) -> Self {
        let wide_big = ExactInt::from(wide);
        let coeffs: Vec<u64> = num
            .coeffs()
            .iter()
            .map(|c| c.mod_floor(&wide_big).to_u64().expect("reduced below wide"))
            .collect();
        let mut attainable = vec![false; modulus as usize];
        for u in 0..period {
            if parity == Parity::Odd && u % 2 == 0 {
                continue;
            }
            let r = u % wide;
            let value = coeffs
                .iter()
                .rev()
                .fold(0u64, |acc, &c| (acc * r + c) % wide);
            if value % den == 0 {
                attainable[((value / den) % modulus) as usize] = true;
            }
        }
        ResidueSieve {
            modulus,
            attainable,
        }
    }

    pub(crate) fn admits(&self, n: &ExactInt) -> bool {
        let r = n
            .mod_floor(&ExactInt::from(self.modulus))
            .to_usize()
            .expect("residue below modulus");
        self.attainable[r]
    }

    #[cfg(test)]
    pub(crate) fn modulus(&self) -> u64 {
        self.modulus
    }
}
