//! Text form of a family, e.g. `d=5 b=5 terms=(3k+1),(k+2) const=0`.
//!
//! Optional keys: `name=<id>` (default `custom`) and `kmin=<k>` (default 1).
//! Terms render highest alpha first; any order parses.

use std::fmt;
use std::str::FromStr;

use super::{builtin_family, FamilySpec, PowerTerm};
use crate::arith::{parse_int, ExactInt};
use crate::error::{Error, Result};

const DEFAULT_NAME: &str = "custom";

impl fmt::Display for PowerTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.alpha, self.beta) {
            (0, beta) => write!(f, "{beta}"),
            (1, 0) => f.write_str("k"),
            (1, beta) => write!(f, "k{beta:+}"),
            (alpha, 0) => write!(f, "{alpha}k"),
            (alpha, beta) => write!(f, "{alpha}k{beta:+}"),
        }
    }
}

impl FromStr for PowerTerm {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let err = || Error::parse("exponent term", text);
        let body = text.trim();
        let body = body
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .unwrap_or(body)
            .replace(' ', "");
        let Some((alpha, beta)) = body.split_once('k') else {
            return Ok(PowerTerm::new(0, body.parse().map_err(|_| err())?));
        };
        let alpha = match alpha {
            "" => 1,
            a if a.starts_with('+') => return Err(err()),
            a => a.parse().map_err(|_| err())?,
        };
        let beta = match beta {
            "" => 0,
            b if b.starts_with('+') || b.starts_with('-') => b.parse().map_err(|_| err())?,
            _ => return Err(err()),
        };
        Ok(PowerTerm::new(alpha, beta))
    }
}

pub(super) fn render_terms(terms: &[PowerTerm]) -> String {
    if terms.is_empty() {
        return "none".into();
    }
    terms
        .iter()
        .rev()
        .map(|t| format!("({t})"))
        .collect::<Vec<_>>()
        .join(",")
}

fn parse_terms(text: &str) -> Result<Vec<PowerTerm>> {
    if text == "none" || text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',').map(str::parse).collect()
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.name != DEFAULT_NAME {
            write!(f, "name={} ", self.name)?;
        }
        write!(
            f,
            "d={} b={} terms={} const={}",
            self.d,
            self.b,
            render_terms(&self.terms),
            self.constant
        )?;
        if self.k_min != 1 {
            write!(f, " kmin={}", self.k_min)?;
        }
        Ok(())
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut name = DEFAULT_NAME.to_string();
        let (mut d, mut b, mut terms, mut constant, mut k_min) = (None, None, None, None, 1);
        for token in text.split_whitespace() {
            let (key, value) = token
                .split_once('=')
                .ok_or_else(|| Error::parse("family key=value", token))?;
            let number = |v: &str| v.parse::<u32>().map_err(|_| Error::parse("count", v));
            match key {
                "name" => name = value.to_string(),
                "d" => d = Some(number(value)?),
                "b" => b = Some(number(value)?),
                "terms" => terms = Some(parse_terms(value)?),
                "const" => constant = Some(parse_int(value)?),
                "kmin" => k_min = number(value)?,
                _ => return Err(Error::parse("family key", key)),
            }
        }
        let missing = |key: &str| Error::InvalidFamily(format!("missing `{key}=` in {text:?}"));
        let spec = FamilySpec::new(
            name,
            d.ok_or_else(|| missing("d"))?,
            b.ok_or_else(|| missing("b"))?,
            terms.ok_or_else(|| missing("terms"))?,
            constant.unwrap_or_else(ExactInt::default),
        )?;
        spec.with_k_min(k_min)
    }
}

impl FamilySpec {
    /// Resolves a built-in name, a JSON object, or the `key=value` text form.
    pub fn resolve(text: &str) -> Result<Self> {
        let text = text.trim();
        if let Some(f) = builtin_family(text) {
            return Ok(f);
        }
        if text.starts_with('{') {
            return serde_json::from_str(text).map_err(|e| Error::InvalidFamily(e.to_string()));
        }
        if !text.contains('=') {
            return Err(Error::InvalidFamily(format!("unknown family {text:?}")));
        }
        text.parse()
    }
}
