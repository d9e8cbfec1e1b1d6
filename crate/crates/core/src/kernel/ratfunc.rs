use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::unipoly::{forward_owned, UniPoly};
use crate::error::{Error, Result};

/// Reduced quotient of univariate polynomials.
///
/// Always stored with `gcd(num, den) = 1` and a monic denominator, so two
/// equal rational functions have identical fields.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc {
    num: UniPoly,
    den: UniPoly,
}

impl RatFunc {
    /// Reduces `num / den` to its canonical representative.
    pub fn new(num: UniPoly, den: UniPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroPolynomialDivision);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = UniPoly::gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g)?, den.div_exact(&g)?)
        };
        Ok(Self::from_coprime(num, den))
    }

    /// Caller guarantees `gcd(num, den) = 1` and `den != 0`.
    fn from_coprime(num: UniPoly, den: UniPoly) -> Self {
        let lc = den.leading().expect("nonzero denominator").clone();
        if num.is_zero() {
            return Self::zero();
        }
        if lc.is_one() {
            return RatFunc { num, den };
        }
        let inv = lc.recip();
        RatFunc {
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
    }

    pub fn zero() -> Self {
        RatFunc {
            num: UniPoly::zero(),
            den: UniPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(UniPoly::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_poly(UniPoly::constant(c))
    }

    pub fn from_poly(p: UniPoly) -> Self {
        RatFunc {
            num: p,
            den: UniPoly::one(),
        }
    }

    pub fn num(&self) -> &UniPoly {
        &self.num
    }

    pub fn den(&self) -> &UniPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatFunc {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::from_coprime(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    /// `(n/d)' = (n' d - n d') / d^2`, reduced.
    pub fn derivative(&self) -> Self {
        if self.den.is_one() {
            return Self::from_poly(self.num.derivative());
        }
        // With g = gcd(d, d'), the reduced result has denominator d * (d/g).
        let dp = self.den.derivative();
        let g = UniPoly::gcd(&self.den, &dp);
        let dg = self.den.div_exact(&g).expect("gcd divides");
        let dpg = dp.div_exact(&g).expect("gcd divides");
        let num = &(&self.num.derivative() * &dg) - &(&self.num * &dpg);
        let den = &self.den * &dg;
        Self::new(num, den).expect("nonzero denominator")
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let num = &self.num + &rhs.num;
            return RatFunc::new(num, self.den.clone()).expect("nonzero denominator");
        }
        // a/b + c/d with g = gcd(b, d): only factors of g can cancel.
        let g = UniPoly::gcd(&self.den, &rhs.den);
        if g.is_one() {
            let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
            return RatFunc::from_coprime(num, &self.den * &rhs.den);
        }
        let b1 = self.den.div_exact(&g).expect("gcd divides");
        let d1 = rhs.den.div_exact(&g).expect("gcd divides");
        let num = &(&self.num * &d1) + &(&rhs.num * &b1);
        let den = &(&b1 * &d1) * &g;
        let h = UniPoly::gcd(&num, &g);
        if h.is_one() {
            RatFunc::from_coprime(num, den)
        } else {
            RatFunc::from_coprime(
                num.div_exact(&h).expect("gcd divides"),
                den.div_exact(&h).expect("gcd divides"),
            )
        }
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        // Cross-cancel before multiplying; both inputs are already reduced.
        let g1 = UniPoly::gcd(&self.num, &rhs.den);
        let g2 = UniPoly::gcd(&rhs.num, &self.den);
        let cancel = |p: &UniPoly, g: &UniPoly| {
            if g.is_one() {
                p.clone()
            } else {
                p.div_exact(g).expect("gcd divides")
            }
        };
        let num = &cancel(&self.num, &g1) * &cancel(&rhs.num, &g2);
        let den = &cancel(&self.den, &g2) * &cancel(&rhs.den, &g1);
        RatFunc::from_coprime(num, den)
    }
}

forward_owned!(RatFunc, Add::add, Sub::sub, Mul::mul);

impl From<UniPoly> for RatFunc {
    fn from(p: UniPoly) -> Self {
        Self::from_poly(p)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

/// Reduces `num / den`; errors on a zero denominator.
pub fn ratfunc_normalize(num: UniPoly, den: UniPoly) -> Result<RatFunc> {
    RatFunc::new(num, den)
}
