use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{parse_int, ExactInt, Ratio};
use crate::error::{Error, Result};

/// A number of the form `n/2`, stored as `n`.
///
/// Text form is `n` for integers and `n/2` otherwise, e.g. `3/2`, `-1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct HalfInt {
    twice: ExactInt,
}

impl HalfInt {
    pub fn from_twice(twice: ExactInt) -> Self {
        HalfInt { twice }
    }

    pub fn from_int(n: ExactInt) -> Self {
        HalfInt { twice: n * 2 }
    }

    /// The argument `x = (u - 3) / 2` belonging to `u = 2x + 3`.
    pub fn from_u(u: &ExactInt) -> Self {
        HalfInt {
            twice: u - ExactInt::from(3),
        }
    }

    pub fn twice_value(&self) -> &ExactInt {
        &self.twice
    }

    /// `2x + 3`.
    pub fn u(&self) -> ExactInt {
        &self.twice + ExactInt::from(3)
    }

    pub fn is_integer(&self) -> bool {
        self.twice.is_even()
    }

    pub fn to_ratio(&self) -> Ratio {
        Ratio::new(self.twice.clone(), ExactInt::from(2))
    }

    /// Converts a rational whose denominator divides 2.
    pub fn from_ratio(r: &Ratio) -> Option<Self> {
        let doubled = r * Ratio::from_integer(ExactInt::from(2));
        doubled.is_integer().then(|| HalfInt {
            twice: doubled.to_integer(),
        })
    }
}

impl From<i64> for HalfInt {
    fn from(n: i64) -> Self {
        HalfInt::from_int(n.into())
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", &self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

impl FromStr for HalfInt {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        match text.split_once('/') {
            Some((num, den)) => {
                let den = parse_int(den)?;
                if den.is_zero() {
                    return Err(Error::parse("half-integer", text));
                }
                let r = Ratio::new(parse_int(num)?, den);
                HalfInt::from_ratio(&r).ok_or_else(|| Error::parse("half-integer", text))
            }
            None => Ok(HalfInt::from_int(parse_int(text)?)),
        }
    }
}

impl From<HalfInt> for String {
    fn from(h: HalfInt) -> String {
        h.to_string()
    }
}

impl TryFrom<String> for HalfInt {
    type Error = Error;

    fn try_from(text: String) -> Result<Self> {
        text.parse()
    }
}
