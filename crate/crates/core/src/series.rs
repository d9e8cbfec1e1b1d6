//! Truncated Maclaurin series over the rationals.
//!
//! A [`Series`] of order `N` holds exactly the coefficients of `x^0 ..= x^N`.
//! Arithmetic between different orders is an error rather than a silent
//! truncation.

use std::fmt;

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::kernel::{power_string, rational_sqrt, write_terms, UniPoly};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Series {
    coeffs: Vec<BigRational>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SeriesOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl Series {
    /// Series whose order is `coeffs.len() - 1`. An empty vector gives the
    /// order-0 zero series.
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        if coeffs.is_empty() {
            coeffs.push(BigRational::zero());
        }
        Series { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    pub fn zero(order: usize) -> Self {
        Series {
            coeffs: vec![BigRational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::from_poly(&UniPoly::one(), order)
    }

    /// Truncation of a polynomial.
    pub fn from_poly(p: &UniPoly, order: usize) -> Self {
        Series {
            coeffs: (0..=order).map(|i| p.coeff(i)).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigRational> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &BigRational {
        &self.coeffs[i]
    }

    /// Index of the first nonzero coefficient within the truncation.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.valuation().is_none()
    }

    /// Keeps coefficients `0..=order`; the new order must not exceed the old.
    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a truncated series");
        Series {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    /// Divides by `x^k`, losing `k` orders of precision.
    fn lower(&self, k: usize) -> Self {
        Series::new(self.coeffs[k..].to_vec())
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch(self.order(), other.order()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Series {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Series {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let n = self.coeffs.len().min(other.coeffs.len());
        let mut coeffs = vec![BigRational::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate().take(n) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n - i) {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Series { coeffs }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Series {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplicative inverse; needs a nonzero constant term.
    pub fn recip(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let inv0 = c0.recip();
        let mut out: Vec<BigRational> = Vec::with_capacity(self.coeffs.len());
        out.push(inv0.clone());
        for n in 1..self.coeffs.len() {
            let mut acc = BigRational::zero();
            for k in 1..=n {
                acc += &self.coeffs[k] * &out[n - k];
            }
            out.push(-acc * &inv0);
        }
        Ok(Series { coeffs: out })
    }

    /// `self / other`. A common factor `x^w` (with `w` the valuation of the
    /// divisor) is cancelled first, so the quotient has order `N - w`.
    pub fn div(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let w = other.valuation().ok_or(Error::DivisionByZero)?;
        if self.valuation().is_some_and(|v| v < w) {
            return Err(Error::NotAnalytic);
        }
        let num = self.lower(w);
        let den = other.lower(w);
        Ok(num.mul_unchecked(&den.recip()?))
    }

    /// The square root with positive constant term.
    pub fn sqrt(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        let s0 = match rational_sqrt(c0) {
            Some(r) if r.is_positive() => r,
            _ => return Err(Error::NotASquare(c0.to_string())),
        };
        let two_s0_inv = (&s0 + &s0).recip();
        let mut out = vec![s0];
        for n in 1..self.coeffs.len() {
            let mut acc = self.coeffs[n].clone();
            for k in 1..n {
                acc -= &out[k] * &out[n - k];
            }
            out.push(acc * &two_s0_inv);
        }
        Ok(Series { coeffs: out })
    }

    /// Coefficients as integers when they all are.
    pub fn to_integers(&self) -> Option<Vec<num_bigint::BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (c, power_string("x", i))),
        )?;
        write!(f, " + O(x^{})", self.order() + 1)
    }
}

/// Binary series arithmetic at a common truncation order.
pub fn series_arith(op: SeriesOp, u: &Series, v: &Series) -> Result<Series> {
    match op {
        SeriesOp::Add => u.add(v),
        SeriesOp::Sub => u.sub(v),
        SeriesOp::Mul => u.mul(v),
        SeriesOp::Div => u.div(v),
    }
}

pub fn series_sqrt(u: &Series) -> Result<Series> {
    u.sqrt()
}

/// Power-series root of `f = P + Q f + R f^2` at `q = 1`, by iterating the
/// right-hand side from `f = P`.
///
/// Requires `Q(0) = R(0) = 0`: each pass then fixes at least one more
/// coefficient, so at most `N + 1` passes are needed and the result is the
/// unique formal solution, the combinatorial branch.
pub fn series_fixed_point_solve(p1: &UniPoly, q1: &UniPoly, r1: &UniPoly, order: usize) -> Result<Series> {
    for (name, poly) in [("Q(x,1)", q1), ("R(x,1)", r1)] {
        if poly.valuation() == Some(0) {
            return Err(Error::NoContraction(format!(
                "{name} = {poly} has a nonzero constant term"
            )));
        }
    }
    let p = Series::from_poly(p1, order);
    let q = Series::from_poly(q1, order);
    let r = Series::from_poly(r1, order);
    let mut f = p.clone();
    for _ in 0..=order + 1 {
        let next = p.add(&q.mul(&f)?)?.add(&r.mul(&f.mul(&f)?)?)?;
        if next == f {
            return Ok(f);
        }
        f = next;
    }
    unreachable!("contraction fixes one coefficient per pass")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{rat, UniPoly};

    fn s(c: &[i64]) -> Series {
        Series::from_ints(c)
    }

    #[test]
    fn product_and_quotient() {
        assert_eq!(
            series_arith(SeriesOp::Mul, &s(&[1, 1, 0, 0]), &s(&[1, -1, 0, 0])).unwrap(),
            s(&[1, 0, -1, 0])
        );
        // valuation lift: (x^2 + x^3) / x
        let q = series_arith(SeriesOp::Div, &s(&[0, 0, 1, 1]), &s(&[0, 1, 0, 0])).unwrap();
        assert_eq!(q, s(&[0, 1, 1]));
    }

    #[test]
    fn arithmetic_errors() {
        assert_eq!(s(&[1, 2]).add(&s(&[1])), Err(Error::OrderMismatch(1, 0)));
        assert_eq!(s(&[1, 2]).div(&s(&[0, 0])), Err(Error::DivisionByZero));
        assert_eq!(s(&[1, 2]).div(&s(&[0, 1])), Err(Error::NotAnalytic));
    }

    #[test]
    fn sqrt_of_catalan_discriminant() {
        let root = series_sqrt(&s(&[1, 0, -4, 0, 0, 0, 0, 0, 0])).unwrap();
        assert_eq!(root, s(&[1, 0, -2, 0, -2, 0, -4, 0, -10]));
        // squaring recovers the input
        assert_eq!(root.mul(&root).unwrap(), s(&[1, 0, -4, 0, 0, 0, 0, 0, 0]));
    }

    #[test]
    fn sqrt_of_constants() {
        assert_eq!(series_sqrt(&s(&[1, 0, 0, 0])).unwrap(), s(&[1, 0, 0, 0]));
        assert_eq!(series_sqrt(&s(&[9, 0, 0])).unwrap(), s(&[3, 0, 0]));
        assert!(matches!(series_sqrt(&s(&[0, 1])), Err(Error::NotASquare(_))));
        assert!(matches!(series_sqrt(&s(&[2, 1])), Err(Error::NotASquare(_))));
        assert!(matches!(series_sqrt(&s(&[-1, 1])), Err(Error::NotASquare(_))));
    }

    #[test]
    fn fixed_point_motzkin_and_dyck() {
        let one = UniPoly::one();
        let x = UniPoly::x();
        let x2 = UniPoly::monomial(rat(1), 2);
        let m = series_fixed_point_solve(&one, &x, &x2, 12).unwrap();
        assert_eq!(m, s(&[1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188, 5798, 15511]));
        let d = series_fixed_point_solve(&one, &UniPoly::zero(), &x2, 10).unwrap();
        assert_eq!(d, s(&[1, 0, 1, 0, 2, 0, 5, 0, 14, 0, 42]));
        let c = series_fixed_point_solve(&one, &UniPoly::zero(), &UniPoly::zero(), 5).unwrap();
        assert_eq!(c, Series::one(5));
    }

    #[test]
    fn fixed_point_needs_contraction() {
        let one = UniPoly::one();
        assert!(matches!(
            series_fixed_point_solve(&one, &one, &UniPoly::zero(), 3),
            Err(Error::NoContraction(_))
        ));
        assert!(matches!(
            series_fixed_point_solve(&one, &UniPoly::zero(), &one, 3),
            Err(Error::NoContraction(_))
        ));
    }

    #[test]
    fn motzkin_square_root_identity() {
        // (2x^2 M + (x - 1))^2 = 1 - 2x - 3x^2 through order 12
        let n = 12;
        let m = series_fixed_point_solve(&UniPoly::one(), &UniPoly::x(), &UniPoly::monomial(rat(1), 2), n).unwrap();
        let lin = Series::from_poly(&UniPoly::from_ints(&[-1, 1]), n);
        let two_x2 = Series::from_poly(&UniPoly::from_ints(&[0, 0, 2]), n);
        let root = two_x2.mul(&m).unwrap().add(&lin).unwrap();
        assert_eq!(
            root.mul(&root).unwrap(),
            Series::from_poly(&UniPoly::from_ints(&[1, -2, -3]), n)
        );
    }

    #[test]
    fn display() {
        assert_eq!(s(&[1, 0, -2, 3]).to_string(), "1 - 2*x^2 + 3*x^3 + O(x^4)");
    }
}
