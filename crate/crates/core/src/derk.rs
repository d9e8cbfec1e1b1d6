//! Closed forms for the q-derivatives of a weight enumerator at `q = 1`.
//!
//! The enumerator satisfies
//!
//! ```text
//! f(x,q) = P(x,q) + Q(x,q) f(x,q) + R(x,q) f(x,q) f(qx,q)
//! ```
//!
//! Writing `q = 1 + eps`, `f(x,1+eps) = sum_k g_k(x) eps^k` with
//! `g_k = f^(k)(x,1) / k!`. At `eps^0` this is a quadratic in `g_0`; its
//! analytic root lives in `Q(x)[√Δ]`. At each higher order the unknown
//! `g_m` enters linearly with coefficient `1 - Q(x,1) - 2 R(x,1) g_0`, which
//! is `±√Δ_raw`, so every `g_m` stays in the same field.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::kernel::{rational_sqrt, BiPoly, RatFunc, UniPoly};
use crate::quad::{qf_normalize, QuadElem};
use crate::series::series_fixed_point_solve;

/// Series order used to tell the two roots apart.
const BRANCH_CHECK_ORDER: usize = 10;

/// Truncated expansion in `eps = q - 1` with field coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EpsJet {
    coeffs: Vec<QuadElem>,
}

impl EpsJet {
    pub fn new(coeffs: Vec<QuadElem>) -> Self {
        assert!(!coeffs.is_empty(), "a jet needs at least the eps^0 entry");
        EpsJet { coeffs }
    }

    /// Jet of a polynomial given by its `eps` coefficients, padded or cut to
    /// `order`.
    pub fn from_polys(polys: &[UniPoly], order: usize, delta: &UniPoly) -> Self {
        let coeffs = (0..=order)
            .map(|m| match polys.get(m) {
                Some(p) => QuadElem::from_poly(p.clone(), delta),
                None => QuadElem::zero(delta),
            })
            .collect();
        EpsJet { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[QuadElem] {
        &self.coeffs
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_order(self, other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.add(b))
            .collect::<Result<_>>()?;
        Ok(EpsJet { coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        check_order(self, other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.sub(b))
            .collect::<Result<_>>()?;
        Ok(EpsJet { coeffs })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        check_order(self, other)?;
        let n = self.order();
        let delta = self.coeffs[0].delta();
        let mut coeffs = Vec::with_capacity(n + 1);
        for m in 0..=n {
            let mut acc = QuadElem::zero(delta);
            for i in 0..=m {
                let (a, b) = (&self.coeffs[i], &other.coeffs[m - i]);
                if a.is_zero() || b.is_zero() {
                    continue;
                }
                acc = acc.add(&a.mul(b)?)?;
            }
            coeffs.push(acc);
        }
        Ok(EpsJet { coeffs })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(QuadElem::is_zero)
    }
}

fn check_order(a: &EpsJet, b: &EpsJet) -> Result<()> {
    if a.order() != b.order() {
        return Err(Error::OrderMismatch(a.order(), b.order()));
    }
    Ok(())
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DerivationResult {
    /// Squarefree radicand shared by every entry of `f`.
    pub delta: UniPoly,
    /// `f[k] = f^(k)(x, 1)`.
    pub f: Vec<QuadElem>,
    pub p: BiPoly,
    pub q: BiPoly,
    pub r: BiPoly,
    /// Sign in `F0 = (1 - Q1 - sigma·√Δ_raw) / (2 R1)`; `+1` in the linear
    /// case, where `√Δ_raw` is read as `1 - Q1`.
    pub sigma: i8,
}

impl DerivationResult {
    pub fn order(&self) -> usize {
        self.f.len() - 1
    }
}

impl fmt::Display for DerivationResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in self.f.iter().enumerate() {
            writeln!(f, "F[{k}] = {v}")?;
        }
        Ok(())
    }
}

/// The root of `F0 = P1 + Q1 F0 + R1 F0^2` with a Maclaurin expansion at 0,
/// where `P1 = P(x,1)` and so on. Returns the squarefree radicand, the root,
/// and the branch sign.
pub fn solve_q1_branch(p: &BiPoly, q: &BiPoly, r: &BiPoly) -> Result<(UniPoly, QuadElem, i8)> {
    let (p1, q1, r1) = (p.eval_q1(), q.eval_q1(), r.eval_q1());
    if q1.valuation() == Some(0) {
        return Err(Error::NoContraction(format!("Q(x,1) = {q1} has a nonzero constant term")));
    }
    let one_minus_q = &UniPoly::one() - &q1;
    if r1.is_zero() {
        let delta = UniPoly::one();
        let f0 = RatFunc::new(p1, one_minus_q)?;
        return Ok((delta.clone(), QuadElem::rational(f0, &delta), 1));
    }
    if r1.valuation() == Some(0) {
        return Err(Error::NoContraction(format!("R(x,1) = {r1} has a nonzero constant term")));
    }
    let delta_raw = &(&one_minus_q * &one_minus_q) - &(&(&p1 * &r1) * &UniPoly::constant(BigRational::from_integer(4.into())));
    let d0 = delta_raw.coeff(0);
    if d0.is_zero() {
        return Err(Error::NoAnalyticBranch(format!("discriminant {delta_raw} vanishes at x = 0")));
    }
    if rational_sqrt(&d0).is_none() {
        return Err(Error::NoAnalyticBranch(format!(
            "discriminant {delta_raw} has value {d0} at x = 0, not a rational square"
        )));
    }
    let target = series_fixed_point_solve(&p1, &q1, &r1, BRANCH_CHECK_ORDER)?;
    let two_r = RatFunc::from_poly(r1.scale(&BigRational::from_integer(2.into())));
    let a = RatFunc::from_poly(one_minus_q).checked_div(&two_r)?;
    let mut found = Vec::new();
    for sigma in [1i8, -1] {
        let b = RatFunc::constant(BigRational::from_integer((-sigma).into())).checked_div(&two_r)?;
        let f0 = qf_normalize(a.clone(), b, &delta_raw)?;
        match f0.to_series(BRANCH_CHECK_ORDER) {
            Ok(s) if s == target => found.push((f0, sigma)),
            Ok(_) | Err(Error::NotAnalytic) => {}
            Err(e) => return Err(e),
        }
    }
    match found.len() {
        1 => {
            let (f0, sigma) = found.pop().expect("one branch");
            Ok((f0.delta().clone(), f0, sigma))
        }
        0 => Err(Error::NoAnalyticBranch(format!(
            "neither root of the quadratic with discriminant {delta_raw} matches the series solution"
        ))),
        _ => Err(Error::NoAnalyticBranch(format!(
            "both roots of the quadratic with discriminant {delta_raw} match the series solution"
        ))),
    }
}

/// `x`-derivatives of the Taylor-normalized jet entries, computed on demand.
struct DerivCache {
    rows: Vec<Vec<QuadElem>>,
}

impl DerivCache {
    fn new() -> Self {
        DerivCache { rows: Vec::new() }
    }

    fn push(&mut self, g: QuadElem) {
        self.rows.push(vec![g]);
    }

    /// `d^j/dx^j g_k`.
    fn get(&mut self, k: usize, j: usize) -> &QuadElem {
        let row = &mut self.rows[k];
        while row.len() <= j {
            let next = row.last().expect("row holds g_k").derivative_x();
            row.push(next);
        }
        &row[j]
    }

    /// `sum_{k+j=m} x^j/j! d^j g_k`, the `eps^m` entry of `f(qx,q)`. With
    /// `skip_top` the `g_m` term is left out, for when `g_m` is not known yet.
    fn shifted(&mut self, m: usize, skip_top: bool) -> Result<QuadElem> {
        let delta = self.rows[0][0].delta().clone();
        let mut acc = QuadElem::zero(&delta);
        let mut fact = BigInt::one();
        for j in 0..=m {
            if j > 0 {
                fact *= j;
            }
            let k = m - j;
            if skip_top && j == 0 {
                continue;
            }
            let d = self.get(k, j);
            if d.is_zero() {
                continue;
            }
            let weight = RatFunc::from_poly(UniPoly::monomial(BigRational::new(BigInt::one(), fact.clone()), j));
            acc = acc.add(&d.mul_rat(&weight))?;
        }
        Ok(acc)
    }
}

fn factorial(n: usize) -> BigRational {
    BigRational::from_integer((1..=n).fold(BigInt::one(), |acc, i| acc * i))
}

/// The `eps^m` coefficient of `f(qx, q)` given `F[k] = f^(k)(x,1)` for
/// `k <= m`:
///
/// ```text
/// sum_{k+j=m} (1/k!) (x^j/j!) d^j/dx^j F[k]
/// ```
pub fn jet_of_shifted_arg(f: &[QuadElem], m: usize) -> Result<QuadElem> {
    let mut cache = DerivCache::new();
    for (k, fk) in f.iter().enumerate().take(m + 1) {
        cache.push(fk.scale(&factorial(k).recip()));
    }
    cache.shifted(m, false)
}

/// `F[0..=K]` in closed form, solving the functional equation order by
/// order in `eps`.
///
/// At order `m` the right-hand side is evaluated with `g_m` set to zero,
/// and `g_m` is recovered by dividing by its known linear coefficient.
pub fn derk(p: &BiPoly, q: &BiPoly, r: &BiPoly, order: usize) -> Result<DerivationResult> {
    let (delta, f0, sigma) = solve_q1_branch(p, q, r)?;
    let pe = p.eps_expand(order);
    let qe = q.eps_expand(order);
    let re = r.eps_expand(order);
    let lift = |u: &UniPoly| QuadElem::from_poly(u.clone(), &delta);

    let two = QuadElem::constant(BigRational::from_integer(2.into()), &delta);
    let linear = QuadElem::one(&delta)
        .sub(&lift(&qe[0]))?
        .sub(&two.mul(&lift(&re[0]))?.mul(&f0)?)?;
    if !re[0].is_zero() {
        let one_minus_q = &UniPoly::one() - &qe[0];
        let delta_raw = &(&one_minus_q * &one_minus_q)
            - &(&(&pe[0] * &re[0]) * &UniPoly::constant(BigRational::from_integer(4.into())));
        let expected = qf_normalize(
            RatFunc::zero(),
            RatFunc::constant(BigRational::from_integer(sigma.into())),
            &delta_raw,
        )?;
        assert_eq!(linear, expected, "linear coefficient is not ±√Δ_raw");
    }
    let linear_inv = linear.inv()?;

    let mut cache = DerivCache::new();
    cache.push(f0.clone());
    let mut g = vec![f0.clone()];
    // h[l]: eps^l entry of f(qx,q), complete for l < m
    let mut h = vec![f0];
    for m in 1..=order {
        let h_partial = cache.shifted(m, true)?;
        // sum_{k+l=n} g_k h_l, with g_m and h_m's g_m term left out at n = m
        let conv = |n: usize, h_top: &QuadElem| -> Result<QuadElem> {
            let mut acc = QuadElem::zero(&delta);
            for (k, gk) in g.iter().enumerate().take(n + 1) {
                let l = n - k;
                if k == m {
                    continue;
                }
                let hl = if l == m { h_top } else { &h[l] };
                if gk.is_zero() || hl.is_zero() {
                    continue;
                }
                acc = acc.add(&gk.mul(hl)?)?;
            }
            Ok(acc)
        };
        let mut rhs = lift(&pe[m]);
        for i in 1..=m {
            if !qe[i].is_zero() {
                rhs = rhs.add(&lift(&qe[i]).mul(&g[m - i])?)?;
            }
        }
        for (i, ri) in re.iter().enumerate().take(m + 1) {
            if ri.is_zero() {
                continue;
            }
            rhs = rhs.add(&lift(ri).mul(&conv(m - i, &h_partial)?)?)?;
        }
        let gm = rhs.mul(&linear_inv)?;
        cache.push(gm.clone());
        g.push(gm.clone());
        h.push(h_partial.add(&gm)?);
    }

    let f = g
        .iter()
        .enumerate()
        .map(|(k, gk)| gk.scale(&factorial(k)))
        .collect();
    Ok(DerivationResult {
        delta,
        f,
        p: p.clone(),
        q: q.clone(),
        r: r.clone(),
        sigma,
    })
}

/// Rebuilds both sides of the functional equation as jets of order `K` from
/// the stored `F[k]` and checks that they agree exactly.
pub fn residual_check(result: &DerivationResult) -> bool {
    residual(result).is_ok_and(|r| r.is_zero())
}

fn residual(result: &DerivationResult) -> Result<EpsJet> {
    let order = result.order();
    let delta = &result.delta;
    let f = EpsJet::new(
        result
            .f
            .iter()
            .enumerate()
            .map(|(k, fk)| fk.scale(&factorial(k).recip()))
            .collect(),
    );
    let shifted = EpsJet::new(
        (0..=order)
            .map(|m| jet_of_shifted_arg(&result.f, m))
            .collect::<Result<_>>()?,
    );
    let p = EpsJet::from_polys(&result.p.eps_expand(order), order, delta);
    let q = EpsJet::from_polys(&result.q.eps_expand(order), order, delta);
    let r = EpsJet::from_polys(&result.r.eps_expand(order), order, delta);
    let rhs = p.add(&q.mul(&f)?)?.add(&r.mul(&f)?.mul(&shifted)?)?;
    f.sub(&rhs)
}
