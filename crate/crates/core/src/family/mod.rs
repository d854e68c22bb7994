//! Parametric identities `S_d((b^k - 3)/2) = Σ b^(αk+β) + c`.
//!
//! A family is proven for every `k` at once from the u-form: with
//! `u = b^k`, a coefficient `c_i = b^β` on `u^i` contributes exactly the
//! term `b^(ik+β)`. [`prove_symbolic`] checks that the coefficients induce
//! precisely the claimed terms and constant.

mod text;

use std::fmt;

use num_traits::{Pow, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{ratio_to_int, ExactInt, HalfInt, Ratio};
use crate::error::{Error, Result};
use crate::power_sum::{alt_sum_naive, to_u_form, Degree};

/// One right-side term `b^(alpha·k + beta)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PowerTerm {
    pub alpha: u32,
    pub beta: i64,
}

impl PowerTerm {
    pub fn new(alpha: u32, beta: i64) -> Self {
        PowerTerm { alpha, beta }
    }

    pub fn exponent_at(&self, k: u32) -> i64 {
        i64::from(self.alpha) * i64::from(k) + self.beta
    }
}

/// A parametric identity with argument `u_k = b^k`, i.e. `x_k = (b^k - 3)/2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawFamily", into = "RawFamily")]
pub struct FamilySpec {
    name: String,
    d: Degree,
    b: u32,
    terms: Vec<PowerTerm>,
    constant: ExactInt,
    k_min: u32,
}

/// Unvalidated mirror of [`FamilySpec`] used for the JSON form.
#[derive(Clone, Debug, Serialize, Deserialize)]
struct RawFamily {
    name: String,
    d: u32,
    b: u32,
    terms: Vec<PowerTerm>,
    #[serde(rename = "const", with = "crate::serde_str")]
    constant: ExactInt,
    #[serde(default = "default_k_min")]
    k_min: u32,
}

fn default_k_min() -> u32 {
    1
}

impl TryFrom<RawFamily> for FamilySpec {
    type Error = Error;

    fn try_from(raw: RawFamily) -> Result<Self> {
        FamilySpec::new(raw.name, raw.d, raw.b, raw.terms, raw.constant)?.with_k_min(raw.k_min)
    }
}

impl From<FamilySpec> for RawFamily {
    fn from(f: FamilySpec) -> Self {
        RawFamily {
            name: f.name,
            d: f.d.get(),
            b: f.b,
            terms: f.terms,
            constant: f.constant,
            k_min: f.k_min,
        }
    }
}

impl FamilySpec {
    /// Builds a family with `k_min = 1`. Terms may be given in any order
    /// but their alphas must be distinct.
    pub fn new(
        name: impl Into<String>,
        d: u32,
        b: u32,
        mut terms: Vec<PowerTerm>,
        constant: ExactInt,
    ) -> Result<Self> {
        let d = Degree::new(d)?;
        if b < 2 {
            return Err(Error::InvalidBase(b));
        }
        terms.sort();
        if terms.windows(2).any(|w| w[0].alpha == w[1].alpha) {
            return Err(Error::InvalidFamily(
                "right-side terms must have distinct k-coefficients".into(),
            ));
        }
        let spec = FamilySpec {
            name: name.into(),
            d,
            b,
            terms,
            constant,
            k_min: 1,
        };
        spec.check_exponents(1)?;
        Ok(spec)
    }

    pub fn with_k_min(mut self, k_min: u32) -> Result<Self> {
        self.check_exponents(k_min)?;
        self.k_min = k_min;
        Ok(self)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Alphas are nonnegative, so the smallest exponents occur at `k`.
    fn check_exponents(&self, k: u32) -> Result<()> {
        match self.terms.iter().find(|t| t.exponent_at(k) < 0) {
            Some(t) => Err(Error::NegativeExponent {
                alpha: t.alpha,
                beta: t.beta,
                k,
            }),
            None => Ok(()),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn degree(&self) -> Degree {
        self.d
    }

    pub fn base(&self) -> u32 {
        self.b
    }

    /// Sorted by ascending alpha.
    pub fn terms(&self) -> &[PowerTerm] {
        &self.terms
    }

    pub fn constant(&self) -> &ExactInt {
        &self.constant
    }

    pub fn k_min(&self) -> u32 {
        self.k_min
    }

    /// `u_k = b^k`
    pub fn u_at(&self, k: u32) -> ExactInt {
        Pow::pow(ExactInt::from(self.b), k)
    }

    /// Exponents `alpha·k + beta` of the right side, ascending alpha.
    pub fn exponents_at(&self, k: u32) -> Vec<u32> {
        self.terms.iter().map(|t| t.exponent_at(k) as u32).collect()
    }

    /// The claimed value `Σ b^(αk+β) + c`.
    pub fn rhs_at(&self, k: u32) -> ExactInt {
        let base = ExactInt::from(self.b);
        self.exponents_at(k)
            .into_iter()
            .fold(self.constant.clone(), |acc, e| acc + Pow::pow(&base, e))
    }

    /// Instantiates at `k >= k_min`.
    pub fn instantiate(&self, k: u32) -> Result<IdentityInstance> {
        if k < self.k_min {
            return Err(Error::KOutOfDomain {
                k,
                k_min: self.k_min,
            });
        }
        self.instantiate_relaxed(k)
    }

    /// Instantiates at any `k >= 0` whose exponents are all nonnegative,
    /// ignoring `k_min`.
    pub fn instantiate_relaxed(&self, k: u32) -> Result<IdentityInstance> {
        self.check_exponents(k)?;
        let x = HalfInt::from_u(&self.u_at(k));
        let lhs = alt_sum_naive(&x, self.d);
        let rhs = self.rhs_at(k);
        let holds = lhs == Ratio::from_integer(rhs.clone());
        Ok(IdentityInstance {
            k,
            x,
            lhs,
            rhs,
            exponents: self.exponents_at(k),
            holds,
        })
    }

    /// Checks every `k` in `k_min..=k_max`. Instances are evaluated in
    /// parallel; the report lists them in ascending `k`.
    pub fn verify_range(&self, k_max: u32) -> Result<FamilyReport> {
        if k_max < self.k_min {
            return Err(Error::InvalidFamily(format!(
                "k_max = {k_max} is below k_min = {}",
                self.k_min
            )));
        }
        let instances = (self.k_min..=k_max)
            .into_par_iter()
            .map(|k| self.instantiate(k))
            .collect::<Result<Vec<_>>>()?;
        let failures: Vec<_> = instances.into_iter().filter(|i| !i.holds).collect();
        let checked = (k_max - self.k_min + 1) as usize;
        Ok(FamilyReport {
            family: self.name.clone(),
            k_min: self.k_min,
            k_max,
            holds: checked - failures.len(),
            fails: failures.len(),
            first_failure: failures.first().map(|i| i.k),
            failures,
        })
    }
}

/// The families stated in the literature this crate reproduces.
///
/// `thm1-printed` carries the right side `5^(k+1) + 5^(3k+1)` as originally
/// printed; it is false (at `k = 1` the sum is 750, not 650).
/// `thm1-corrected` uses `5^(k+2)`, which matches every listed instance.
pub fn builtin_families() -> Vec<FamilySpec> {
    let t = PowerTerm::new;
    let zero = ExactInt::zero;
    [
        FamilySpec::new("thm1-printed", 5, 5, vec![t(1, 1), t(3, 1)], zero()),
        FamilySpec::new("thm1-corrected", 5, 5, vec![t(1, 2), t(3, 1)], zero()),
        FamilySpec::new("thm2", 3, 6, vec![t(1, 1)], zero()),
        FamilySpec::new("thm3", 4, 6, vec![t(2, 1)], ExactInt::from(10)),
    ]
    .into_iter()
    .map(|f| f.expect("built-in families are well formed"))
    .collect()
}

pub fn builtin_family(name: &str) -> Option<FamilySpec> {
    builtin_families().into_iter().find(|f| f.name == name)
}

/// One instance `S_d(x_k) = rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityInstance {
    k: u32,
    x: HalfInt,
    #[serde(with = "crate::serde_str")]
    lhs: Ratio,
    #[serde(with = "crate::serde_str")]
    rhs: ExactInt,
    exponents: Vec<u32>,
    holds: bool,
}

impl IdentityInstance {
    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn x(&self) -> &HalfInt {
        &self.x
    }

    /// `S_d(x)`; rational only for even bases with `d >= 6`.
    pub fn lhs(&self) -> &Ratio {
        &self.lhs
    }

    pub fn lhs_int(&self) -> Option<ExactInt> {
        ratio_to_int(&self.lhs)
    }

    pub fn rhs(&self) -> &ExactInt {
        &self.rhs
    }

    /// Right-side exponents at this `k`, ascending alpha.
    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn holds(&self) -> bool {
        self.holds
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyReport {
    pub family: String,
    pub k_min: u32,
    pub k_max: u32,
    pub holds: usize,
    pub fails: usize,
    pub first_failure: Option<u32>,
    pub failures: Vec<IdentityInstance>,
}

impl FamilyReport {
    pub fn all_hold(&self) -> bool {
        self.fails == 0
    }
}

/// One line of a coefficient certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CertificateEntry {
    /// `c_power = b^beta`, contributing `b^(power·k + beta)`.
    Power {
        power: u32,
        #[serde(with = "crate::serde_str")]
        coeff: ExactInt,
        beta: u32,
    },
    /// The u-form's constant term.
    Constant {
        #[serde(with = "crate::serde_str")]
        value: ExactInt,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProofResult {
    pub family: String,
    pub proven: bool,
    /// The u-form the certificate was read from, e.g. `5u^3 + 25u`.
    pub u_form: String,
    pub certificate: Vec<CertificateEntry>,
    pub failure_reason: Option<String>,
}

impl ProofResult {
    /// Terms induced by the certificate, ascending alpha.
    pub fn induced_terms(&self) -> Vec<PowerTerm> {
        let mut terms: Vec<_> = self
            .certificate
            .iter()
            .filter_map(|e| match e {
                CertificateEntry::Power { power, beta, .. } => {
                    Some(PowerTerm::new(*power, i64::from(*beta)))
                }
                CertificateEntry::Constant { .. } => None,
            })
            .collect();
        terms.sort();
        terms
    }
}

/// `Some(e)` with `c = b^e`, for `c >= 1` and `b >= 2`.
pub(crate) fn exact_log(c: &ExactInt, b: u32) -> Option<u32> {
    if c <= &ExactInt::zero() {
        return None;
    }
    let base = ExactInt::from(b);
    let mut rest = c.clone();
    let mut e = 0;
    while (&rest % &base).is_zero() {
        rest /= &base;
        e += 1;
    }
    (rest == ExactInt::from(1)).then_some(e)
}

/// Reads the coefficient certificate off `to_u_form(d)` and compares it
/// with the family's claimed right side.
pub fn prove_symbolic(f: &FamilySpec) -> ProofResult {
    let g = to_u_form(f.d);
    let mut certificate = Vec::new();
    let mut result = ProofResult {
        family: f.name.clone(),
        proven: false,
        u_form: g.to_string(),
        certificate: Vec::new(),
        failure_reason: None,
    };

    if f.d.get() <= 2 {
        result.failure_reason = Some(format!(
            "u-form of degree {} is constant and carries no k-dependence",
            f.d
        ));
        return result;
    }

    for (power, c) in g.poly().terms_descending() {
        let Some(c) = ratio_to_int(c) else {
            result.failure_reason = Some(format!("coefficient {c} of u^{power} is not an integer"));
            result.certificate = certificate;
            return result;
        };
        if power == 0 {
            certificate.push(CertificateEntry::Constant { value: c });
            continue;
        }
        match exact_log(&c, f.b) {
            Some(beta) => certificate.push(CertificateEntry::Power {
                power: power as u32,
                coeff: c,
                beta,
            }),
            None => {
                result.failure_reason = Some(format!(
                    "coefficient {c} of u^{power} is not a power of {}",
                    f.b
                ));
                result.certificate = certificate;
                return result;
            }
        }
    }
    result.certificate = certificate;

    let induced = result.induced_terms();
    let constant = result
        .certificate
        .iter()
        .find_map(|e| match e {
            CertificateEntry::Constant { value } => Some(value.clone()),
            CertificateEntry::Power { .. } => None,
        })
        .unwrap_or_default();

    if induced != f.terms {
        result.failure_reason = Some(format!(
            "u-form induces terms {} but the family claims {}",
            text::render_terms(&induced),
            text::render_terms(&f.terms),
        ));
    } else if constant != f.constant {
        result.failure_reason = Some(format!(
            "u-form constant is {constant} but the family claims {}",
            f.constant
        ));
    } else {
        result.proven = true;
    }
    result
}

impl fmt::Display for CertificateEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CertificateEntry::Power { power, coeff, beta } => {
                let term = PowerTerm::new(*power, i64::from(*beta));
                write!(f, "c{power} = {coeff} = b^{beta} -> b^({term})")
            }
            CertificateEntry::Constant { value } => write!(f, "c0 = {value} -> constant"),
        }
    }
}
