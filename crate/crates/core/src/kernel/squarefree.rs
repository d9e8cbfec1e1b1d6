use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::unipoly::UniPoly;
use crate::error::{Error, Result};

/// Square root of a rational that is a perfect square, if any.
pub fn rational_sqrt(c: &BigRational) -> Option<BigRational> {
    if c.is_negative() {
        return None;
    }
    let root = |n: &BigInt| {
        let r = n.sqrt();
        (&r * &r == *n).then_some(r)
    };
    Some(BigRational::new(root(c.numer())?, root(c.denom())?))
}

/// Yun's algorithm: monic squarefree factors `a_1, a_2, ...` of a monic `f`
/// with `f = prod a_i^i`.
fn yun(f: &UniPoly) -> Vec<UniPoly> {
    let df = f.derivative();
    let a0 = UniPoly::gcd(f, &df);
    let mut b = f.div_exact(&a0).expect("gcd divides");
    let mut c = df.div_exact(&a0).expect("gcd divides");
    let mut d = &c - &b.derivative();
    let mut factors = Vec::new();
    while !b.is_constant() {
        let a = UniPoly::gcd(&b, &d);
        b = b.div_exact(&a).expect("gcd divides");
        c = d.div_exact(&a).expect("gcd divides");
        d = &c - &b.derivative();
        factors.push(a);
    }
    factors
}

/// Splits `p = s^2 * sf` with `sf` squarefree.
///
/// The squarefree part is scaled to `sf(0) = 1` whenever the leftover
/// constant is a rational square, so `sqrt(sf)` has a rational power series
/// with constant term 1. Otherwise `sf` keeps the leading coefficient of `p`.
/// In both cases `s^2 * sf == p` exactly.
pub fn squarefree_decompose(p: &UniPoly) -> Result<(UniPoly, UniPoly)> {
    let lc = p.leading().ok_or(Error::SquarefreeOfZero)?.clone();
    let mut square = UniPoly::one();
    let mut free = UniPoly::one();
    for (i, a) in yun(&p.monic()).iter().enumerate() {
        let mult = i + 1;
        if mult >= 2 {
            square = &square * &a.pow((mult / 2) as u32);
        }
        if mult % 2 == 1 {
            free = &free * a;
        }
    }
    let g0 = free.coeff(0);
    if !g0.is_zero() {
        if let Some(r) = rational_sqrt(&(&lc * &g0)) {
            return Ok((square.scale(&r), free.scale(&g0.recip())));
        }
    }
    Ok((square, free.scale(&lc)))
}

/// True when `gcd(p, p') = 1`.
pub fn is_squarefree(p: &UniPoly) -> bool {
    UniPoly::gcd(p, &p.derivative()).is_one()
}
