//! Scans `(d, b)` pairs for every family `S_d((b^k - 3)/2) = Σ b^(ik+β) + c`.
//!
//! A pair yields a family exactly when each nonzero non-constant u-form
//! coefficient is an integer power `b^β` (with `b^0 = 1` allowed) and the
//! constant term is an integer, required to be zero unless `allow_const`.
//! Coefficients like `2·b^e` fall outside this grammar and disqualify the
//! pair.

use std::ops::RangeInclusive;

use rayon::prelude::*;

use crate::arith::ratio_to_int;
use crate::error::{Error, Result};
use crate::family::{exact_log, prove_symbolic, FamilySpec, PowerTerm, ProofResult};
use crate::power_sum::{to_u_form, Degree, UForm};

fn family_for(g: &UForm, b: u32, allow_const: bool) -> Option<FamilySpec> {
    let mut terms = Vec::new();
    let mut constant = Default::default();
    for (power, c) in g.poly().terms_descending() {
        let c = ratio_to_int(c)?;
        if power == 0 {
            if !allow_const {
                return None;
            }
            constant = c;
        } else {
            terms.push(PowerTerm::new(power as u32, i64::from(exact_log(&c, b)?)));
        }
    }
    let d = g.degree().get();
    FamilySpec::new(format!("d{d}-b{b}"), d, b, terms, constant).ok()
}

/// Every family over the given degrees and bases, sorted by `(d, b)`, each
/// paired with its (necessarily successful) proof.
pub fn discover_families(
    degrees: RangeInclusive<u32>,
    bases: RangeInclusive<u32>,
    allow_const: bool,
) -> Result<Vec<(FamilySpec, ProofResult)>> {
    if *degrees.start() < 3 {
        return Err(Error::InvalidDegree {
            got: *degrees.start(),
            min: 3,
        });
    }
    if *bases.start() < 2 {
        return Err(Error::InvalidBase(*bases.start()));
    }
    let forms: Vec<UForm> = degrees
        .map(|d| Degree::new(d).map(to_u_form))
        .collect::<Result<_>>()?;
    let pairs: Vec<(&UForm, u32)> = forms
        .iter()
        .flat_map(|g| bases.clone().map(move |b| (g, b)))
        .collect();
    Ok(pairs
        .into_par_iter()
        .filter_map(|(g, b)| family_for(g, b, allow_const))
        .map(|f| {
            let proof = prove_symbolic(&f);
            (f, proof)
        })
        .collect())
}
