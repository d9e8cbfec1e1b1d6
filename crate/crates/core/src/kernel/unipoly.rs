use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense univariate polynomial in `x` over the rationals.
///
/// `coeffs[i]` is the coefficient of `x^i`. The highest stored coefficient is
/// never zero, so the zero polynomial is the empty vector and equality is
/// structural.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct UniPoly {
    coeffs: Vec<BigRational>,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn x() -> Self {
        Self::monomial(BigRational::one(), 1)
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    pub fn monomial(c: BigRational, exp: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigRational::zero(); exp + 1];
        coeffs[exp] = c;
        UniPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigRational> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    /// Order of vanishing at `x = 0`; `None` for the zero polynomial.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn eval(&self, at: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * at + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rat(i as i64))
                .collect(),
        )
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigRational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UniPoly { coeffs }
    }

    /// Scales so the leading coefficient is one. Zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dlead = divisor.leading().ok_or(Error::ZeroPolynomialDivision)?;
        let ddeg = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= ddeg {
            return Ok((Self::zero(), self.clone()));
        }
        let inv = dlead.recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigRational::zero(); rem.len() - ddeg];
        for i in (ddeg..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let f = &rem[i] * &inv;
            let base = i - ddeg;
            for (j, d) in divisor.coeffs.iter().enumerate() {
                if !d.is_zero() {
                    rem[base + j] -= &f * d;
                }
            }
            quot[base] = f;
        }
        rem.truncate(ddeg);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Quotient of a division known to be exact.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(divisor)?;
        debug_assert!(r.is_zero(), "inexact division");
        Ok(q)
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(a: &Self, b: &Self) -> Self {
        super::modgcd::gcd(a, b)
    }

    pub fn from_bigints(c: &[BigInt]) -> Self {
        Self::new(c.iter().cloned().map(BigRational::from_integer).collect())
    }

    /// Content-free integer polynomial proportional to `self` with positive
    /// leading coefficient, plus the rational factor: `self = factor * prim`.
    pub fn primitive(&self) -> (BigRational, Vec<BigInt>) {
        use num_integer::Integer;
        if self.is_zero() {
            return (BigRational::zero(), Vec::new());
        }
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
            .collect();
        let mut content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if self.leading().is_some_and(Signed::is_negative) {
            content = -content;
        }
        let prim = ints.into_iter().map(|c| c / &content).collect();
        (BigRational::new(content, lcm), prim)
    }
}

impl From<BigRational> for UniPoly {
    fn from(c: BigRational) -> Self {
        Self::constant(c)
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, d) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += d;
        }
        UniPoly::new(coeffs)
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        UniPoly::new(coeffs)
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        UniPoly::new(coeffs)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        -&self
    }
}

macro_rules! forward_owned {
    ($ty:ty, $($tr:ident :: $m:ident),*) => {$(
        impl $tr<$ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty { (&self).$m(&rhs) }
        }
        impl $tr<&$ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: &$ty) -> $ty { (&self).$m(rhs) }
        }
        impl $tr<$ty> for &$ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty { self.$m(&rhs) }
        }
    )*};
}
pub(crate) use forward_owned;

forward_owned!(UniPoly, Add::add, Sub::sub, Mul::mul);

/// Writes `c*var^e` terms in descending order, e.g. `-3*x^2 - 2*x + 1`.
pub(crate) fn write_terms<'a, I>(f: &mut fmt::Formatter<'_>, terms: I) -> fmt::Result
where
    I: Iterator<Item = (&'a BigRational, String)>,
{
    let mut first = true;
    for (c, mono) in terms {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if first {
            if c.is_negative() {
                write!(f, "-")?;
            }
        } else if c.is_negative() {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        first = false;
        match (mag.is_one(), mono.is_empty()) {
            (_, true) => write!(f, "{mag}")?,
            (true, false) => write!(f, "{mono}")?,
            (false, false) => write!(f, "{mag}*{mono}")?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

pub(crate) fn power_string(var: &str, e: usize) -> String {
    match e {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{e}"),
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            self.coeffs
                .iter()
                .enumerate()
                .rev()
                .map(|(i, c)| (c, power_string("x", i))),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c)
    }

    #[test]
    fn trims_trailing_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[]).degree(), None);
    }

    #[test]
    fn derivative_of_motzkin_discriminant() {
        assert_eq!(p(&[1, -2, -3]).derivative(), p(&[-2, -6]));
        assert_eq!(p(&[5]).derivative(), UniPoly::zero());
        assert_eq!(p(&[0, 0, 0, 0, 1]).derivative(), p(&[0, 0, 0, 4]));
    }

    #[test]
    fn division_with_remainder() {
        // x^3 + 1 = (x + 1)(x^2 - x + 1)
        let (q, r) = p(&[1, 0, 0, 1]).div_rem(&p(&[1, 1])).unwrap();
        assert_eq!(q, p(&[1, -1, 1]));
        assert!(r.is_zero());
        let (q, r) = p(&[3, 0, 1]).div_rem(&p(&[0, 2])).unwrap();
        assert_eq!(q, UniPoly::new(vec![rat(0), BigRational::new(1.into(), 2.into())]));
        assert_eq!(r, p(&[3]));
        assert_eq!(p(&[1]).div_rem(&UniPoly::zero()), Err(Error::ZeroPolynomialDivision));
    }

    #[test]
    fn gcd_is_monic() {
        let a = &p(&[1, -1]) * &p(&[1, 2]);
        let b = &p(&[1, -1]) * &p(&[3, 0, 1]);
        assert_eq!(UniPoly::gcd(&a.scale(&rat(6)), &b), p(&[-1, 1]));
        assert_eq!(UniPoly::gcd(&p(&[1, 1]), &p(&[2, 1])), UniPoly::one());
        assert_eq!(UniPoly::gcd(&UniPoly::zero(), &p(&[0, 2])), p(&[0, 1]));
    }

    #[test]
    fn display_descending() {
        assert_eq!(p(&[1, -2, -3]).to_string(), "-3*x^2 - 2*x + 1");
        assert_eq!(UniPoly::zero().to_string(), "0");
        assert_eq!(p(&[0, 1]).to_string(), "x");
    }

    #[test]
    fn primitive_part() {
        let half = BigRational::new(1.into(), 2.into());
        let f = UniPoly::new(vec![half.clone(), rat(-1)]);
        let (c, prim) = f.primitive();
        assert_eq!(c, -half);
        assert_eq!(prim, vec![BigInt::from(-1), BigInt::from(2)]);
    }
}
