use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Polynomial in `q^(1/2)` with nonnegative integer coefficients.
///
/// Exponents are stored as a count of halves: key `e` means `q^(e/2)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct HalfQPoly {
    terms: BTreeMap<u64, BigUint>,
}

impl HalfQPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, BigUint::one())
    }

    /// `c * q^(halves/2)`.
    pub fn monomial(halves: u64, c: BigUint) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(halves, c);
        }
        HalfQPoly { terms }
    }

    /// Builds from `(exponent in halves, coefficient)` pairs, merging duplicates.
    pub fn from_terms<I: IntoIterator<Item = (u64, u64)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, &BigUint::from(c));
        }
        p
    }

    /// Integer-exponent polynomial from coefficients of `q^0, q^1, ...`.
    pub fn from_int_coeffs(coeffs: &[u64]) -> Self {
        Self::from_terms(coeffs.iter().enumerate().map(|(i, &c)| (2 * i as u64, c)))
    }

    fn add_term(&mut self, halves: u64, c: &BigUint) {
        if c.is_zero() {
            return;
        }
        *self.terms.entry(halves).or_insert_with(BigUint::zero) += c;
    }

    /// `self += q^(shift/2) * other`.
    pub fn add_shifted(&mut self, other: &HalfQPoly, shift: u64) {
        for (&e, c) in &other.terms {
            self.add_term(e + shift, c);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero terms as `(exponent in halves, coefficient)`, ascending.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (u64, &BigUint)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn coeff_halves(&self, halves: u64) -> BigUint {
        self.terms.get(&halves).cloned().unwrap_or_default()
    }

    pub fn has_half_exponent(&self) -> bool {
        self.terms.keys().any(|e| e % 2 == 1)
    }

    /// Value at `q = 1`: the number of paths.
    pub fn eval_q1(&self) -> BigUint {
        self.terms.values().sum()
    }

    /// Area -> count map, for integer-exponent polynomials.
    pub fn area_counts(&self) -> BTreeMap<BigRational, BigUint> {
        self.terms
            .iter()
            .map(|(&e, c)| (BigRational::new(BigInt::from(e), BigInt::from(2)), c.clone()))
            .collect()
    }
}

impl fmt::Display for HalfQPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (&e, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let power = match (e, e % 2) {
                (0, _) => String::new(),
                (2, _) => "q".to_string(),
                (_, 0) => format!("q^{}", e / 2),
                _ => format!("q^({e}/2)"),
            };
            match (c.is_one(), power.is_empty()) {
                (_, true) => write!(f, "{c}")?,
                (true, false) => write!(f, "{power}")?,
                (false, false) => write!(f, "{c}*{power}")?,
            }
        }
        Ok(())
    }
}

/// `d^k/dq^k p` at `q = 1`, i.e. `sum c * m (m-1) ... (m-k+1)` over terms `c q^m`.
pub fn factorial_moment_from_poly(p: &HalfQPoly, k: u32) -> Result<BigRational> {
    let mut total = BigInt::zero();
    for (e, c) in p.terms() {
        if e % 2 == 1 {
            return Err(Error::HalfIntegerExponent(e));
        }
        let m = (e / 2) as i64;
        let falling: BigInt = (0..k as i64).map(|t| BigInt::from(m - t)).product();
        total += falling * BigInt::from(c.clone());
    }
    Ok(BigRational::from_integer(total))
}
