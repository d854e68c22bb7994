//! Bounded searches for `S_d(x) = RHS` with structured right sides.
//!
//! [`search_structured`] goes exponent-first: it enumerates every admissible
//! right side `N` within `n_max` and inverts the increasing u-form exactly,
//! so the unbounded `x` dimension never has to be scanned.
//! [`brute_force_search`] goes the other way, scanning `u` directly and
//! peeling powers of `b` off `S_d`; it exists to cross-check the first.

mod invert;
mod sieve;

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{One, Pow, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use invert::{invert_on_odd, padic_valuation};

use self::invert::{strip_base, Inverter};
use self::sieve::ResidueSieve;
use crate::arith::{parse_int, ExactInt, HalfInt, Ratio};
use crate::error::{Error, Result};
use crate::power_sum::{alt_sum_naive, to_u_form, Degree};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    /// Odd `u` only, i.e. integer `x`.
    Odd,
    /// Any positive `u`; `x` may be a half-integer.
    Any,
}

impl Parity {
    pub fn admits(self, u: &ExactInt) -> bool {
        match self {
            Parity::Odd => u.is_odd(),
            Parity::Any => true,
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Odd => "odd",
            Parity::Any => "any",
        })
    }
}

impl FromStr for Parity {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        match text {
            "odd" => Ok(Parity::Odd),
            "any" => Ok(Parity::Any),
            _ => Err(Error::parse("parity", text)),
        }
    }
}

/// Shape of the right side.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum RhsForm {
    /// `b^m + b^n`, `0 <= m <= n`
    TwoPowers,
    /// `b^m`
    OnePower,
    /// `b^m + c`
    PowerPlusConst(ExactInt),
}

/// Exponents of a right side; `m <= n` for two powers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Exponents {
    Two { m: u32, n: u32 },
    One { m: u32 },
}

impl Exponents {
    pub fn largest(&self) -> u32 {
        match *self {
            Exponents::Two { n, .. } => n,
            Exponents::One { m } => m,
        }
    }

    pub fn smallest(&self) -> u32 {
        match *self {
            Exponents::Two { m, .. } | Exponents::One { m } => m,
        }
    }
}

impl RhsForm {
    /// Evaluates the right side at the given exponents.
    pub fn value(&self, b: u32, exponents: Exponents) -> ExactInt {
        let base = ExactInt::from(b);
        let power = |e: u32| -> ExactInt { Pow::pow(&base, e) };
        match (self, exponents) {
            (RhsForm::PowerPlusConst(c), Exponents::One { m }) => power(m) + c,
            (_, Exponents::One { m }) => power(m),
            (_, Exponents::Two { m, n }) => power(m) + power(n),
        }
    }

    /// Writes `n` in this form, if possible. The representation is unique.
    pub fn decompose(&self, b: u32, n: &ExactInt) -> Option<Exponents> {
        match self {
            RhsForm::OnePower => single_power(b, n).map(|m| Exponents::One { m }),
            RhsForm::PowerPlusConst(c) => single_power(b, &(n - c)).map(|m| Exponents::One { m }),
            RhsForm::TwoPowers => two_powers(b, n),
        }
    }

    /// Every right side with exponents up to `n_max`, in exponent order.
    fn enumerate(&self, b: u32, n_max: u32) -> Vec<(Exponents, ExactInt)> {
        match self {
            RhsForm::TwoPowers => (0..=n_max)
                .flat_map(|n| (0..=n).map(move |m| Exponents::Two { m, n }))
                .map(|e| (e, self.value(b, e)))
                .collect(),
            _ => (0..=n_max)
                .map(|m| Exponents::One { m })
                .map(|e| (e, self.value(b, e)))
                .collect(),
        }
    }
}

fn single_power(b: u32, n: &ExactInt) -> Option<u32> {
    if n <= &ExactInt::zero() {
        return None;
    }
    let (e, rest) = strip_base(n, b);
    rest.is_one().then_some(e)
}

fn two_powers(b: u32, n: &ExactInt) -> Option<Exponents> {
    if n <= &ExactInt::zero() {
        return None;
    }
    // b^m (1 + b^(n-m)) has valuation exactly m unless n = m
    let (m, rest) = strip_base(n, b);
    if rest.is_one() {
        // 2^(m+1) = 2^m + 2^m is the only way a pure power splits in two
        return (b == 2 && m >= 1).then(|| Exponents::Two { m: m - 1, n: m - 1 });
    }
    if rest == ExactInt::from(2) {
        return Some(Exponents::Two { m, n: m });
    }
    match single_power(b, &(rest - 1u32)) {
        Some(j) if j >= 1 => Some(Exponents::Two { m, n: m + j }),
        _ => None,
    }
}

impl fmt::Display for RhsForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RhsForm::TwoPowers => f.write_str("two-powers"),
            RhsForm::OnePower => f.write_str("one-power"),
            RhsForm::PowerPlusConst(c) => write!(f, "power-plus-const:{c}"),
        }
    }
}

impl FromStr for RhsForm {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        match text {
            "two-powers" => Ok(RhsForm::TwoPowers),
            "one-power" => Ok(RhsForm::OnePower),
            _ => text
                .strip_prefix("power-plus-const:")
                .ok_or_else(|| Error::parse("right-side form", text))
                .and_then(parse_int)
                .map(RhsForm::PowerPlusConst),
        }
    }
}

impl From<RhsForm> for String {
    fn from(r: RhsForm) -> String {
        r.to_string()
    }
}

impl TryFrom<String> for RhsForm {
    type Error = Error;

    fn try_from(text: String) -> Result<Self> {
        text.parse()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchLimits {
    pub n_max: u32,
    #[serde(with = "crate::serde_str")]
    pub u_max: u64,
    pub parity: Parity,
}

impl SearchLimits {
    pub fn new(n_max: u32, u_max: u64, parity: Parity) -> Result<Self> {
        if u_max < 1 {
            return Err(Error::InvalidFamily("u_max must be at least 1".into()));
        }
        Ok(SearchLimits {
            n_max,
            u_max,
            parity,
        })
    }
}

/// Everything a search needs. `prune` enables the residue-class sieve in
/// the structured search; results never depend on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub d: Degree,
    pub b: u32,
    pub rhs: RhsForm,
    pub limits: SearchLimits,
    pub prune: bool,
}

impl SearchConfig {
    pub fn new(d: u32, b: u32, rhs: RhsForm, limits: SearchLimits) -> Result<Self> {
        let d = Degree::new(d)?;
        if d.get() < 3 {
            return Err(Error::InvalidDegree {
                got: d.get(),
                min: 3,
            });
        }
        if b < 2 {
            return Err(Error::InvalidBase(b));
        }
        Ok(SearchConfig {
            d,
            b,
            rhs,
            limits,
            prune: true,
        })
    }

    pub fn with_prune(mut self, prune: bool) -> Self {
        self.prune = prune;
        self
    }

    fn completeness(&self) -> String {
        let exponents = match self.rhs {
            RhsForm::TwoPowers => format!("0 <= m <= n <= {}", self.limits.n_max),
            _ => format!("0 <= m <= {}", self.limits.n_max),
        };
        let parity = match self.limits.parity {
            Parity::Odd => ", u odd",
            Parity::Any => "",
        };
        format!(
            "all solutions with {exponents} and 1 <= u <= {}{parity}",
            self.limits.u_max
        )
    }

    fn record(&self, u: u64, exponents: Exponents) -> SolutionRecord {
        let x = HalfInt::from_u(&ExactInt::from(u));
        let claimed = Ratio::from_integer(self.rhs.value(self.b, exponents));
        let verified = alt_sum_naive(&x, self.d) == claimed;
        SolutionRecord {
            d: self.d.get(),
            b: self.b,
            u,
            x,
            exponents,
            verified,
        }
    }

    fn report(
        &self,
        method: SearchMethod,
        candidates: u64,
        pruned: u64,
        mut solutions: Vec<SolutionRecord>,
    ) -> SearchReport {
        solutions.sort_by_key(SolutionRecord::sort_key);
        solutions.dedup_by_key(|s| s.sort_key());
        SearchReport {
            method,
            d: self.d.get(),
            b: self.b,
            rhs: self.rhs.clone(),
            limits: self.limits,
            prune: self.prune && method == SearchMethod::Structured,
            candidates,
            pruned,
            completeness: self.completeness(),
            solutions,
        }
    }
}

/// One solution `S_d((u - 3)/2) = RHS(exponents)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionRecord {
    pub d: u32,
    pub b: u32,
    #[serde(with = "crate::serde_str")]
    pub u: u64,
    pub x: HalfInt,
    pub exponents: Exponents,
    /// Re-checked with the naive power sum, independent of the search path.
    pub verified: bool,
}

impl SolutionRecord {
    /// `(n, m, u)`; for a single power both slots hold `m`.
    pub fn sort_key(&self) -> (u32, u32, u64) {
        (self.exponents.largest(), self.exponents.smallest(), self.u)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchMethod {
    Structured,
    BruteForce,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub method: SearchMethod,
    pub d: u32,
    pub b: u32,
    pub rhs: RhsForm,
    pub limits: SearchLimits,
    pub prune: bool,
    /// Exponent tuples (structured) or values of `u` (brute force) examined.
    #[serde(with = "crate::serde_str")]
    pub candidates: u64,
    /// Exponent tuples skipped by the residue sieve.
    #[serde(with = "crate::serde_str")]
    pub pruned: u64,
    pub completeness: String,
    /// Sorted by `(n, m, u)`.
    pub solutions: Vec<SolutionRecord>,
}

impl SearchReport {
    pub fn all_verified(&self) -> bool {
        self.solutions.iter().all(|s| s.verified)
    }
}

/// Enumerates every right side within `n_max`, inverts the u-form for each,
/// and keeps hits with `u <= u_max`.
pub fn search_structured(cfg: &SearchConfig) -> Result<SearchReport> {
    let inverter = Inverter::new(&to_u_form(cfg.d))?;
    let sieve = if cfg.prune {
        ResidueSieve::new(
            inverter.numerator(),
            inverter.denominator(),
            cfg.b,
            cfg.limits.parity,
        )
    } else {
        None
    };

    let all = cfg.rhs.enumerate(cfg.b, cfg.limits.n_max);
    let candidates = all.len() as u64;
    let kept: Vec<_> = match &sieve {
        Some(s) => all.into_iter().filter(|(_, n)| s.admits(n)).collect(),
        None => all,
    };
    let pruned = candidates - kept.len() as u64;

    let u_max = ExactInt::from(cfg.limits.u_max);
    let solutions = kept
        .par_iter()
        .filter_map(|(exponents, n)| {
            let u = inverter.invert(n, cfg.limits.parity)?;
            (u <= u_max).then(|| cfg.record(u.to_u64().expect("u <= u_max"), *exponents))
        })
        .collect();

    Ok(cfg.report(SearchMethod::Structured, candidates, pruned, solutions))
}

/// Scans every admissible `u` in `1..=u_max`, evaluates the u-form, and
/// keeps values of the requested form with exponents up to `n_max`.
pub fn brute_force_search(cfg: &SearchConfig) -> Result<SearchReport> {
    let inverter = Inverter::new(&to_u_form(cfg.d))?;
    let n_max = cfg.limits.n_max;
    let parity = cfg.limits.parity;
    let solutions: Vec<_> = (1..=cfg.limits.u_max)
        .into_par_iter()
        .filter_map(|u| {
            let u_big = ExactInt::from(u);
            if !parity.admits(&u_big) {
                return None;
            }
            let value = inverter.eval_int(&u_big)?;
            let exponents = cfg.rhs.decompose(cfg.b, &value)?;
            (exponents.largest() <= n_max).then(|| cfg.record(u, exponents))
        })
        .collect();
    let scanned = match parity {
        Parity::Odd => cfg.limits.u_max.div_ceil(2),
        Parity::Any => cfg.limits.u_max,
    };
    Ok(cfg.report(SearchMethod::BruteForce, scanned, 0, solutions))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int_pow;

    fn int(n: i64) -> ExactInt {
        n.into()
    }

    fn summary(r: &SearchReport) -> Vec<(u64, Exponents)> {
        r.solutions.iter().map(|s| (s.u, s.exponents)).collect()
    }

    fn two(m: u32, n: u32) -> Exponents {
        Exponents::Two { m, n }
    }

    #[test]
    fn decompositions() {
        let two_p = RhsForm::TwoPowers;
        assert_eq!(two_p.decompose(5, &int(750)), Some(two(3, 4)));
        assert_eq!(two_p.decompose(5, &int(30)), Some(two(1, 2)));
        assert_eq!(two_p.decompose(6, &int(12)), Some(two(1, 1)));
        assert_eq!(two_p.decompose(5, &int(2)), Some(two(0, 0)));
        assert_eq!(two_p.decompose(2, &int(8)), Some(two(2, 2)));
        assert_eq!(two_p.decompose(2, &int(12)), Some(two(2, 3)));
        assert_eq!(two_p.decompose(2, &int(1)), None);
        assert_eq!(two_p.decompose(5, &int(25)), None);
        assert_eq!(two_p.decompose(5, &int(3)), None);
        assert_eq!(two_p.decompose(5, &int(0)), None);
        assert_eq!(two_p.decompose(5, &int(-30)), None);

        assert_eq!(
            RhsForm::OnePower.decompose(6, &int(216)),
            Some(Exponents::One { m: 3 })
        );
        assert_eq!(
            RhsForm::OnePower.decompose(6, &int(1)),
            Some(Exponents::One { m: 0 })
        );
        assert_eq!(RhsForm::OnePower.decompose(6, &int(72)), None);

        let plus = RhsForm::PowerPlusConst(int(10));
        assert_eq!(plus.decompose(6, &int(226)), Some(Exponents::One { m: 3 }));
        assert_eq!(plus.decompose(6, &int(10)), None);
        assert_eq!(plus.value(6, Exponents::One { m: 3 }), int(226));
    }

    #[test]
    fn two_power_decomposition_is_inverse_of_value() {
        for b in 2..8 {
            for n in 0..9 {
                for m in 0..=n {
                    let v = RhsForm::TwoPowers.value(b, two(m, n));
                    assert_eq!(
                        RhsForm::TwoPowers.decompose(b, &v),
                        Some(two(m, n)),
                        "b={b}"
                    );
                }
            }
        }
    }

    #[test]
    fn rhs_text() {
        for text in [
            "two-powers",
            "one-power",
            "power-plus-const:10",
            "power-plus-const:-3",
        ] {
            assert_eq!(text.parse::<RhsForm>().unwrap().to_string(), text);
        }
        assert!("three-powers".parse::<RhsForm>().is_err());
        assert!("power-plus-const:x".parse::<RhsForm>().is_err());
    }

    #[test]
    fn quintic_base_five() {
        let limits = SearchLimits::new(16, 1_000_000, Parity::Odd).unwrap();
        let cfg = SearchConfig::new(5, 5, RhsForm::TwoPowers, limits).unwrap();
        let r = search_structured(&cfg).unwrap();
        let expected = vec![
            (1, two(1, 2)),
            (5, two(3, 4)),
            (25, two(4, 7)),
            (125, two(5, 10)),
            (625, two(6, 13)),
            (3125, two(7, 16)),
        ];
        assert_eq!(summary(&r), expected);
        assert!(r.all_verified());
        assert_eq!(r.candidates, 17 * 18 / 2);
        assert!(r.pruned > 0);
        assert_eq!(
            r.completeness,
            "all solutions with 0 <= m <= n <= 16 and 1 <= u <= 1000000, u odd"
        );
        let unpruned = search_structured(&cfg.clone().with_prune(false)).unwrap();
        assert_eq!(unpruned.solutions, r.solutions);
        assert_eq!(unpruned.pruned, 0);
    }

    #[test]
    fn quartic_plus_constant() {
        // 6u^2 + 10 = 6^m + 10; u = 1 (x = -1, m = 1) is a genuine solution
        let limits = SearchLimits::new(7, 1000, Parity::Any).unwrap();
        let cfg = SearchConfig::new(4, 6, RhsForm::PowerPlusConst(int(10)), limits).unwrap();
        let one = |m| Exponents::One { m };
        let expected = vec![(1, one(1)), (6, one(3)), (36, one(5)), (216, one(7))];
        assert_eq!(summary(&search_structured(&cfg).unwrap()), expected);
        assert_eq!(summary(&brute_force_search(&cfg).unwrap()), expected);
    }

    #[test]
    fn cubic_two_powers_any_parity() {
        let limits = SearchLimits::new(2, 100, Parity::Any).unwrap();
        let cfg = SearchConfig::new(3, 6, RhsForm::TwoPowers, limits).unwrap();
        let expected = vec![(2, two(1, 1)), (7, two(1, 2)), (12, two(2, 2))];
        assert_eq!(summary(&search_structured(&cfg).unwrap()), expected);
        assert_eq!(summary(&brute_force_search(&cfg).unwrap()), expected);
    }

    #[test]
    fn brute_force_quintic_larger_exponents() {
        let limits = SearchLimits::new(40, 10_000, Parity::Odd).unwrap();
        let cfg = SearchConfig::new(5, 5, RhsForm::TwoPowers, limits).unwrap();
        let us: Vec<u64> = brute_force_search(&cfg)
            .unwrap()
            .solutions
            .iter()
            .map(|s| s.u)
            .collect();
        assert_eq!(us, vec![1, 5, 25, 125, 625, 3125]);
    }

    #[test]
    fn tiny_brute_force_range() {
        let limits = SearchLimits::new(10, 1, Parity::Odd).unwrap();
        let cfg = SearchConfig::new(3, 7, RhsForm::TwoPowers, limits).unwrap();
        let r = brute_force_search(&cfg).unwrap();
        assert!(r.solutions.is_empty());
        assert_eq!(r.candidates, 1);
        assert!(SearchLimits::new(10, 0, Parity::Odd).is_err());
    }

    #[test]
    fn preconditions() {
        let limits = SearchLimits::new(3, 10, Parity::Odd).unwrap();
        assert_eq!(
            SearchConfig::new(2, 5, RhsForm::TwoPowers, limits),
            Err(Error::InvalidDegree { got: 2, min: 3 })
        );
        assert_eq!(
            SearchConfig::new(5, 1, RhsForm::TwoPowers, limits),
            Err(Error::InvalidBase(1))
        );
    }

    #[test]
    fn records_serialize_with_decimal_strings() {
        let cfg = SearchConfig::new(
            5,
            5,
            RhsForm::TwoPowers,
            SearchLimits::new(4, 10, Parity::Odd).unwrap(),
        )
        .unwrap();
        let r = search_structured(&cfg).unwrap();
        let json = serde_json::to_string(&r.solutions[1]).unwrap();
        assert_eq!(
            json,
            r#"{"d":5,"b":5,"u":"5","x":"1","exponents":{"m":3,"n":4},"verified":true}"#
        );
        let back: SearchReport = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn huge_exponent_grid_stays_exact() {
        let limits = SearchLimits::new(60, u64::MAX, Parity::Odd).unwrap();
        let cfg = SearchConfig::new(5, 5, RhsForm::TwoPowers, limits).unwrap();
        let r = search_structured(&cfg).unwrap();
        // every family member 5^k with 3k + 1 <= 60, plus nothing else
        let us: Vec<u64> = r.solutions.iter().map(|s| s.u).collect();
        let family: Vec<u64> = (0..=19).map(|k| 5u64.pow(k)).collect();
        assert_eq!(us, family);
        assert_eq!(int_pow(5, 19).to_u64(), Some(family[19]));
    }
}
