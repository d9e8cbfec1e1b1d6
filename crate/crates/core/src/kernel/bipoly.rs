use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::unipoly::{forward_owned, power_string, write_terms, UniPoly};

/// Sparse polynomial in `x` and `q` over the rationals.
///
/// Keys are `(x exponent, q exponent)`; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), BigRational>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::term(c, 0, 0)
    }

    pub fn x() -> Self {
        Self::term(BigRational::one(), 1, 0)
    }

    pub fn q() -> Self {
        Self::term(BigRational::one(), 0, 1)
    }

    /// `c * x^i * q^j`.
    pub fn term(c: BigRational, i: u32, j: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        BiPoly { terms }
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = ((u32, u32), BigRational)>,
    {
        let mut p = Self::zero();
        for (k, c) in terms {
            p.add_term(k, c);
        }
        p
    }

    fn add_term(&mut self, key: (u32, u32), c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(key).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn terms(&self) -> &BTreeMap<(u32, u32), BigRational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree_q(&self) -> u32 {
        self.terms.keys().map(|&(_, j)| j).max().unwrap_or(0)
    }

    pub fn degree_x(&self) -> u32 {
        self.terms.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// `p(x, 1)`.
    pub fn eval_q1(&self) -> UniPoly {
        let n = self.degree_x() as usize + 1;
        let mut coeffs = vec![BigRational::zero(); n];
        for (&(i, _), c) in &self.terms {
            coeffs[i as usize] += c;
        }
        UniPoly::new(coeffs)
    }

    /// Coefficients of `eps^0 .. eps^order` in `p(x, 1 + eps)`.
    pub fn eps_expand(&self, order: usize) -> Vec<UniPoly> {
        let n = self.degree_x() as usize + 1;
        let mut out = vec![vec![BigRational::zero(); n]; order + 1];
        for (&(i, j), c) in &self.terms {
            // (1 + eps)^j = sum_k C(j, k) eps^k
            let mut binom = BigInt::one();
            for (k, slot) in out.iter_mut().enumerate().take(j as usize + 1) {
                if k > 0 {
                    binom = binom * BigInt::from(j as usize - k + 1) / BigInt::from(k);
                }
                slot[i as usize] += c * BigRational::from_integer(binom.clone());
            }
        }
        out.into_iter().map(UniPoly::new).collect()
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.add_term(k, c.clone());
        }
        out
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        self + &(-rhs)
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &rhs.terms {
                out.add_term((i1 + i2, j1 + j2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }
}

impl Neg for BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        -&self
    }
}

forward_owned!(BiPoly, Add::add, Sub::sub, Mul::mul);

/// Canonical form, e.g. `x^2*q - 3/2*x + 1`, which parses back to the same value.
impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            self.terms.iter().rev().map(|(&(i, j), c)| {
                let xs = power_string("x", i as usize);
                let qs = power_string("q", j as usize);
                let mono = match (xs.is_empty(), qs.is_empty()) {
                    (false, false) => format!("{xs}*{qs}"),
                    (false, true) => xs,
                    _ => qs,
                };
                (c, mono)
            }),
        )
    }
}

/// `p(x, 1)`.
pub fn bipoly_eval_q1(p: &BiPoly) -> UniPoly {
    p.eval_q1()
}

/// Coefficients of `eps^k`, `k = 0..=order`, in `p(x, 1 + eps)`.
pub fn bipoly_eps_expand(p: &BiPoly, order: usize) -> Vec<UniPoly> {
    p.eps_expand(order)
}
