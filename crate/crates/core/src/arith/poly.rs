use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{ExactInt, Ratio};

/// Coefficient ring for [`Poly`].
pub trait Coeff:
    Clone
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
}

impl<T> Coeff for T where
    T: Clone
        + PartialEq
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
{
}

/// Dense univariate polynomial, coefficients in ascending powers.
///
/// Always canonical: the zero polynomial has no coefficients, otherwise the
/// last coefficient is nonzero. The variable carries no name.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

pub type IntPoly = Poly<ExactInt>;
pub type RatPoly = Poly<Ratio>;

impl<T: Coeff> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: T) -> Self {
        Poly::new(vec![c])
    }

    /// `a X + b`
    pub fn linear(a: T, b: T) -> Self {
        Poly::new(vec![b, a])
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `X^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn eval(&self, v: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * v.clone() + c.clone())
    }

    pub fn scale(&self, s: &T) -> Self {
        Poly::new(self.coeffs.iter().map(|c| c.clone() * s.clone()).collect())
    }

    /// `self(inner(X))`
    pub fn compose(&self, inner: &Poly<T>) -> Self {
        self.coeffs.iter().rev().fold(Poly::zero(), |acc, c| {
            &(&acc * inner) + &Poly::constant(c.clone())
        })
    }

    /// Nonzero terms as `(power, coefficient)`, highest power first.
    pub fn terms_descending(&self) -> impl Iterator<Item = (usize, &T)> {
        self.coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
    }
}

impl<T: Coeff> Add for &Poly<T> {
    type Output = Poly<T>;

    fn add(self, rhs: &Poly<T>) -> Poly<T> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<T: Coeff> Sub for &Poly<T> {
    type Output = Poly<T>;

    fn sub(self, rhs: &Poly<T>) -> Poly<T> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<T: Coeff> Neg for &Poly<T> {
    type Output = Poly<T>;

    fn neg(self) -> Poly<T> {
        Poly::new(self.coeffs.iter().cloned().map(Neg::neg).collect())
    }
}

impl<T: Coeff> Mul for &Poly<T> {
    type Output = Poly<T>;

    fn mul(self, rhs: &Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let term = a.clone() * b.clone();
                out[i + j] = std::mem::replace(&mut out[i + j], T::zero()) + term;
            }
        }
        Poly::new(out)
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $f:ident),*) => {$(
        impl<T: Coeff> $tr for Poly<T> {
            type Output = Poly<T>;
            fn $f(self, rhs: Poly<T>) -> Poly<T> {
                (&self).$f(&rhs)
            }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);

impl IntPoly {
    pub fn to_rat(&self) -> RatPoly {
        RatPoly::new(
            self.coeffs
                .iter()
                .cloned()
                .map(Ratio::from_integer)
                .collect(),
        )
    }
}

impl RatPoly {
    /// The same polynomial over the integers, if every coefficient is integral.
    pub fn to_int(&self) -> Option<IntPoly> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(IntPoly::new)
    }

    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// `(P, D)` with `self = P / D`, `D` the least common denominator.
    pub fn clear_denominators(&self) -> (IntPoly, ExactInt) {
        let den = self
            .coeffs
            .iter()
            .fold(ExactInt::one(), |acc, c| acc.lcm(c.denom()));
        let scaled = self
            .coeffs
            .iter()
            .map(|c| (c * Ratio::from_integer(den.clone())).to_integer())
            .collect();
        (IntPoly::new(scaled), den)
    }
}

/// Renders a polynomial in a named variable, highest power first.
pub struct Rendered<'a, T> {
    poly: &'a Poly<T>,
    var: &'a str,
}

impl<T: Coeff + Signed + fmt::Display> Poly<T> {
    pub fn render<'a>(&'a self, var: &'a str) -> Rendered<'a, T> {
        Rendered { poly: self, var }
    }
}

impl<T: Coeff + Signed + fmt::Display> fmt::Display for Rendered<'_, T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        for (n, (power, c)) in self.poly.terms_descending().enumerate() {
            let magnitude = c.abs();
            match (n, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if power == 0 {
                write!(f, "{magnitude}")?;
                continue;
            }
            if !magnitude.is_one() {
                let text = magnitude.to_string();
                if text.contains('/') {
                    write!(f, "({text})")?;
                } else {
                    f.write_str(&text)?;
                }
            }
            f.write_str(self.var)?;
            if power > 1 {
                write!(f, "^{power}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(cs: &[i64]) -> IntPoly {
        IntPoly::new(cs.iter().map(|&c| c.into()).collect())
    }

    #[test]
    fn canonical_form_trims_trailing_zeros() {
        let p = ip(&[1, 2, 0, 0]);
        assert_eq!(p.coeffs().len(), 2);
        assert_eq!(p.degree(), Some(1));
        assert!(ip(&[0, 0]).coeffs().is_empty());
        assert_eq!(ip(&[0]).degree(), None);
        assert_eq!(IntPoly::new(p.coeffs().to_vec()), p);
    }

    #[test]
    fn compose_with_linear() {
        // (X^2)(2X + 3) = 4X^2 + 12X + 9
        let sq = ip(&[0, 0, 1]);
        assert_eq!(sq.compose(&ip(&[3, 2])), ip(&[9, 12, 4]));
        assert!(IntPoly::zero().compose(&sq).is_zero());
    }

    #[test]
    fn subtraction_cancels_to_zero() {
        let p = ip(&[4, -1, 7]);
        assert!((&p - &p).is_zero());
        assert_eq!(&p + &(-&p), IntPoly::zero());
    }

    #[test]
    fn clear_denominators_of_rational_poly() {
        let half = |n: i64| Ratio::new(n.into(), 4.into());
        let p = RatPoly::new(vec![
            half(91),
            Ratio::new(75.into(), 2.into()),
            half(0),
            half(0),
            half(15),
        ]);
        let (num, den) = p.clear_denominators();
        assert_eq!(den, ExactInt::from(4));
        assert_eq!(num, ip(&[91, 150, 0, 0, 15]));
        assert!(p.to_int().is_none());
        assert!(!p.has_integer_coeffs());
    }

    #[test]
    fn rendering() {
        assert_eq!(
            ip(&[210, 320, 180, 40]).render("x").to_string(),
            "40x^3 + 180x^2 + 320x + 210"
        );
        assert_eq!(ip(&[-1, 0, 1]).render("X").to_string(), "X^2 - 1");
        assert_eq!(ip(&[0, -1]).render("u").to_string(), "-u");
        assert_eq!(IntPoly::zero().render("u").to_string(), "0");
        let r = RatPoly::new(vec![
            Ratio::new(91.into(), 4.into()),
            Ratio::from_integer(0.into()),
            Ratio::new(15.into(), 4.into()),
        ]);
        assert_eq!(r.render("u").to_string(), "(15/4)u^2 + 91/4");
    }
}
