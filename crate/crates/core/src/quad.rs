//! Elements `a + b·√Δ` of the quadratic extension `Q(x)[√Δ]`, with exact
//! arithmetic, `d/dx`, and Maclaurin expansion.
//!
//! `Δ` is squarefree, so `√Δ ∉ Q(x)` whenever `Δ` has positive degree and the
//! pair `(a, b)` is determined by the value. Equality is therefore plain
//! structural equality. All elements taking part in one computation share
//! the same `Δ`; combining different radicands is an error.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::kernel::{squarefree_decompose, RatFunc, UniPoly};
use crate::series::Series;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QuadElem {
    a: RatFunc,
    b: RatFunc,
    delta: UniPoly,
}

impl QuadElem {
    /// `a + b·√Δ` for an already squarefree, normalized `Δ` (as returned by
    /// [`squarefree_decompose`]). A constant `Δ = 1` folds `b` into `a`.
    pub fn from_parts(a: RatFunc, b: RatFunc, delta: UniPoly) -> Self {
        if delta.is_one() {
            return QuadElem {
                a: &a + &b,
                b: RatFunc::zero(),
                delta,
            };
        }
        QuadElem { a, b, delta }
    }

    pub fn rational(a: RatFunc, delta: &UniPoly) -> Self {
        QuadElem {
            a,
            b: RatFunc::zero(),
            delta: delta.clone(),
        }
    }

    pub fn from_poly(p: UniPoly, delta: &UniPoly) -> Self {
        Self::rational(RatFunc::from_poly(p), delta)
    }

    pub fn constant(c: BigRational, delta: &UniPoly) -> Self {
        Self::rational(RatFunc::constant(c), delta)
    }

    pub fn zero(delta: &UniPoly) -> Self {
        Self::rational(RatFunc::zero(), delta)
    }

    pub fn one(delta: &UniPoly) -> Self {
        Self::rational(RatFunc::one(), delta)
    }

    /// `√Δ` itself.
    pub fn sqrt_delta(delta: &UniPoly) -> Self {
        Self::from_parts(RatFunc::zero(), RatFunc::one(), delta.clone())
    }

    pub fn a(&self) -> &RatFunc {
        &self.a
    }

    pub fn b(&self) -> &RatFunc {
        &self.b
    }

    pub fn delta(&self) -> &UniPoly {
        &self.delta
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.b.is_zero() && self.a.is_one()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.delta != other.delta {
            return Err(Error::DeltaMismatch(self.delta.to_string(), other.delta.to_string()));
        }
        Ok(())
    }

    fn delta_rf(&self) -> RatFunc {
        RatFunc::from_poly(self.delta.clone())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(QuadElem {
            a: &self.a + &other.a,
            b: &self.b + &other.b,
            delta: self.delta.clone(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(QuadElem {
            a: &self.a - &other.a,
            b: &self.b - &other.b,
            delta: self.delta.clone(),
        })
    }

    pub fn neg(&self) -> Self {
        QuadElem {
            a: -&self.a,
            b: -&self.b,
            delta: self.delta.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        let (a1, b1, a2, b2) = (&self.a, &self.b, &other.a, &other.b);
        let a = if b1.is_zero() || b2.is_zero() {
            a1 * a2
        } else {
            &(a1 * a2) + &(&(b1 * b2) * &self.delta_rf())
        };
        let b = &(a1 * b2) + &(a2 * b1);
        Ok(QuadElem {
            a,
            b,
            delta: self.delta.clone(),
        })
    }

    /// Multiplies by an element of `Q(x)`.
    pub fn mul_rat(&self, r: &RatFunc) -> Self {
        QuadElem {
            a: &self.a * r,
            b: &self.b * r,
            delta: self.delta.clone(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        QuadElem {
            a: self.a.scale(c),
            b: self.b.scale(c),
            delta: self.delta.clone(),
        }
    }

    pub fn conjugate(&self) -> Self {
        QuadElem {
            a: self.a.clone(),
            b: -&self.b,
            delta: self.delta.clone(),
        }
    }

    /// `a^2 - b^2 Δ`, the product with the conjugate.
    pub fn norm(&self) -> RatFunc {
        let a2 = &self.a * &self.a;
        if self.b.is_zero() {
            return a2;
        }
        &a2 - &(&(&self.b * &self.b) * &self.delta_rf())
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let norm = self.norm();
        assert!(!norm.is_zero(), "nonzero element with zero norm: Δ is not squarefree");
        Ok(self.conjugate().mul_rat(&norm.inv()?))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        self.mul(&other.inv()?)
    }

    /// `d/dx`, using `(√Δ)' = Δ'/(2Δ) · √Δ`.
    pub fn derivative_x(&self) -> Self {
        let a = self.a.derivative();
        let b = if self.b.is_zero() {
            RatFunc::zero()
        } else {
            let dlog = RatFunc::new(self.delta.derivative(), self.delta.scale(&BigRational::from_integer(2.into())))
                .expect("nonzero radicand");
            &self.b.derivative() + &(&self.b * &dlog)
        };
        QuadElem {
            a,
            b,
            delta: self.delta.clone(),
        }
    }

    /// `(A + B√Δ) / C` with polynomials `A, B, C` and `C` monic.
    pub fn over_common_denominator(&self) -> (UniPoly, UniPoly, UniPoly) {
        let (ad, bd) = (self.a.den(), self.b.den());
        let g = UniPoly::gcd(ad, bd);
        let c = (ad * bd).div_exact(&g).expect("gcd divides");
        let big_a = self.a.num() * &c.div_exact(ad).expect("lcm");
        let big_b = self.b.num() * &c.div_exact(bd).expect("lcm");
        (big_a, big_b, c)
    }

    /// First `order + 1` Maclaurin coefficients, taking `√Δ` on the branch
    /// with positive value at `x = 0`.
    ///
    /// `a` and `b` may each have poles at 0 that cancel in the sum; the
    /// element is put over a common denominator and divided as series.
    pub fn to_series(&self, order: usize) -> Result<Series> {
        let (num_a, num_b, den) = self.over_common_denominator();
        let w = den.valuation().expect("nonzero denominator");
        let n = order + w;
        let mut num = Series::from_poly(&num_a, n);
        if !num_b.is_zero() {
            let root = Series::from_poly(&self.delta, n).sqrt()?;
            num = num.add(&Series::from_poly(&num_b, n).mul(&root)?)?;
        }
        if num.valuation().is_some_and(|v| v < w) {
            return Err(Error::NotAnalytic);
        }
        num.div(&Series::from_poly(&den, n))
    }

    /// `{"delta", "a_num", "a_den", "b_num", "b_den"}`, each an ascending list
    /// of coefficient strings `"p/q"` (or `"p"` for integers).
    pub fn to_json(&self) -> Value {
        json!({
            "delta": poly_json(&self.delta),
            "a_num": poly_json(self.a.num()),
            "a_den": poly_json(self.a.den()),
            "b_num": poly_json(self.b.num()),
            "b_den": poly_json(self.b.den()),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let field = |name: &str| -> Result<UniPoly> {
            let arr = v
                .get(name)
                .and_then(Value::as_array)
                .ok_or_else(|| Error::InvalidInput(format!("closed form is missing array '{name}'")))?;
            arr.iter()
                .map(|c| {
                    c.as_str()
                        .and_then(|s| s.parse::<BigRational>().ok())
                        .ok_or_else(|| Error::InvalidInput(format!("bad coefficient {c} in '{name}'")))
                })
                .collect::<Result<Vec<_>>>()
                .map(UniPoly::new)
        };
        let delta = field("delta")?;
        if delta.is_zero() {
            return Err(Error::DegenerateRoot);
        }
        let a = RatFunc::new(field("a_num")?, field("a_den")?)?;
        let b = RatFunc::new(field("b_num")?, field("b_den")?)?;
        Ok(Self::from_parts(a, b, delta))
    }
}

fn poly_json(p: &UniPoly) -> Value {
    Value::Array(p.coeffs().iter().map(|c| Value::String(c.to_string())).collect())
}

fn single_term(p: &UniPoly) -> bool {
    p.coeffs().iter().filter(|c| !c.is_zero()).count() <= 1
}

fn paren(p: &UniPoly) -> String {
    if single_term(p) {
        p.to_string()
    } else {
        format!("({p})")
    }
}

/// `(A, B, C)` scaled to integer coefficients with no common content and
/// `C` having positive leading coefficient.
fn integral_parts(u: &QuadElem) -> (UniPoly, UniPoly, UniPoly) {
    let (a, b, c) = u.over_common_denominator();
    let mut all: Vec<BigRational> = Vec::new();
    for p in [&a, &b, &c] {
        all.extend(p.coeffs().iter().cloned());
    }
    let (factor, _) = UniPoly::new(all).primitive();
    let inv = factor.abs().recip();
    (a.scale(&inv), b.scale(&inv), c.scale(&inv))
}

impl fmt::Display for QuadElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b, c) = integral_parts(self);
        let root = format!("sqrt({})", self.delta);
        let scaled_root = |b: &UniPoly| {
            if b.is_one() {
                root.clone()
            } else {
                format!("{}*{root}", paren(b))
            }
        };
        let top = if b.is_zero() {
            a.to_string()
        } else if a.is_zero() {
            if single_term(&b) && b.leading().is_some_and(|l| l.is_negative()) {
                format!("-{}", scaled_root(&-&b))
            } else {
                scaled_root(&b)
            }
        } else if single_term(&b) && b.leading().is_some_and(|l| l.is_negative()) {
            format!("{a} - {}", scaled_root(&-&b))
        } else {
            format!("{a} + {}", scaled_root(&b))
        };
        if c.is_one() {
            write!(f, "{top}")
        } else {
            let top = if a.is_zero() || b.is_zero() { paren_str(&top, &a, &b) } else { format!("({top})") };
            let den = if c.is_constant() || (single_term(&c) && c.leading().is_some_and(One::is_one)) {
                c.to_string()
            } else {
                format!("({c})")
            };
            write!(f, "{top}/{den}")
        }
    }
}

fn paren_str(top: &str, a: &UniPoly, b: &UniPoly) -> String {
    let nonzero = if a.is_zero() { b } else { a };
    if single_term(nonzero) {
        top.to_string()
    } else {
        format!("({top})")
    }
}

/// Brings `a + b·√Δ_raw` to canonical form: pulls square factors out of the
/// radicand into `b`, and drops the root entirely when it is rational.
pub fn qf_normalize(a: RatFunc, b: RatFunc, delta_raw: &UniPoly) -> Result<QuadElem> {
    if delta_raw.is_zero() {
        return Err(Error::DegenerateRoot);
    }
    let (s, sf) = squarefree_decompose(delta_raw)?;
    let b = &b * &RatFunc::from_poly(s);
    Ok(QuadElem::from_parts(a, b, sf))
}

pub fn qf_mul(u: &QuadElem, v: &QuadElem) -> Result<QuadElem> {
    u.mul(v)
}

pub fn qf_invert(u: &QuadElem) -> Result<QuadElem> {
    u.inv()
}

pub fn qf_derivative_x(u: &QuadElem) -> QuadElem {
    u.derivative_x()
}

pub fn qf_to_series(u: &QuadElem, order: usize) -> Result<Series> {
    u.to_series(order)
}

/// `Δ` for a session: the square root with value `+1` at `x = 0` whenever
/// that normalization exists.
pub fn canonical_delta(delta_raw: &UniPoly) -> Result<UniPoly> {
    Ok(squarefree_decompose(delta_raw)?.1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{rat, ratio};
    use crate::series::series_fixed_point_solve;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c)
    }

    fn rf(n: &[i64], d: &[i64]) -> RatFunc {
        RatFunc::new(p(n), p(d)).unwrap()
    }

    fn motzkin_delta() -> UniPoly {
        p(&[1, -2, -3])
    }

    fn motzkin_f0() -> QuadElem {
        QuadElem::from_parts(rf(&[1, -1], &[0, 0, 2]), rf(&[-1], &[0, 0, 2]), motzkin_delta())
    }

    #[test]
    fn normalize_pulls_out_squares() {
        let raw = &p(&[1, 0, -4]) * &p(&[1, -1]).pow(2);
        let u = qf_normalize(RatFunc::zero(), RatFunc::one(), &raw).unwrap();
        assert_eq!(u.delta(), &p(&[1, 0, -4]));
        assert!(u.b() == &rf(&[1, -1], &[1]) || u.b() == &rf(&[-1, 1], &[1]));
        assert!(u.a().is_zero());
    }

    #[test]
    fn normalize_folds_constant_square() {
        let u = qf_normalize(RatFunc::zero(), RatFunc::one(), &p(&[4])).unwrap();
        assert_eq!(u, QuadElem::constant(rat(2), &UniPoly::one()));
    }

    #[test]
    fn normalize_keeps_canonical_input() {
        let u = qf_normalize(rf(&[1, -1], &[0, 0, 2]), rf(&[-1], &[0, 0, 2]), &motzkin_delta()).unwrap();
        assert_eq!(u, motzkin_f0());
        assert_eq!(qf_normalize(RatFunc::one(), RatFunc::one(), &UniPoly::zero()), Err(Error::DegenerateRoot));
    }

    #[test]
    fn root_squared() {
        let d = p(&[1, 0, -4]);
        let r = QuadElem::sqrt_delta(&d);
        assert_eq!(qf_mul(&r, &r).unwrap(), QuadElem::from_poly(d.clone(), &d));
    }

    #[test]
    fn identity_and_mismatch() {
        let u = motzkin_f0();
        assert_eq!(u.mul(&QuadElem::one(&motzkin_delta())).unwrap(), u);
        let other = QuadElem::one(&p(&[1, 0, -4]));
        assert!(matches!(u.mul(&other), Err(Error::DeltaMismatch(_, _))));
    }

    #[test]
    fn motzkin_square_matches_series_square() {
        let m = motzkin_f0();
        let sq = m.mul(&m).unwrap().to_series(12).unwrap();
        let ms = m.to_series(12).unwrap();
        assert_eq!(sq, ms.mul(&ms).unwrap());
    }

    #[test]
    fn inverse_examples() {
        let d = p(&[1, 0, -4]);
        let r = QuadElem::sqrt_delta(&d);
        let want = QuadElem::from_parts(RatFunc::zero(), RatFunc::new(UniPoly::one(), d.clone()).unwrap(), d.clone());
        assert_eq!(qf_invert(&r).unwrap(), want);

        // 1 - x - 2x^2 M(x,1) = √Δ for Motzkin
        let m = motzkin_f0();
        let dm = motzkin_delta();
        let lin = QuadElem::from_poly(p(&[1, -1]), &dm).sub(&m.mul_rat(&rf(&[0, 0, 2], &[1]))).unwrap();
        assert_eq!(lin, QuadElem::sqrt_delta(&dm));
        let inv = qf_invert(&lin).unwrap();
        assert_eq!(
            inv,
            QuadElem::from_parts(RatFunc::zero(), RatFunc::new(UniPoly::one(), dm.clone()).unwrap(), dm.clone())
        );
        assert!(inv.mul(&lin).unwrap().is_one());

        let two = QuadElem::constant(rat(2), &dm);
        assert_eq!(qf_invert(&two).unwrap(), QuadElem::constant(ratio(1, 2), &dm));
        assert_eq!(qf_invert(&QuadElem::zero(&dm)), Err(Error::DivisionByZero));
    }

    #[test]
    fn derivative_examples() {
        let d = p(&[1, 0, -4]);
        let dr = qf_derivative_x(&QuadElem::sqrt_delta(&d));
        let want = QuadElem::from_parts(RatFunc::zero(), RatFunc::new(p(&[0, -4]), d.clone()).unwrap(), d.clone());
        assert_eq!(dr, want);
        assert!(qf_derivative_x(&QuadElem::constant(rat(7), &d)).is_zero());
    }

    #[test]
    fn derivative_of_motzkin_generating_function() {
        let dm = motzkin_f0().derivative_x().to_series(11).unwrap();
        let m = [1i64, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188, 5798, 15511];
        let want: Vec<i64> = (1..=12).map(|i| i as i64 * m[i]).collect();
        assert_eq!(dm, Series::from_ints(&want));
    }

    #[test]
    fn maclaurin_of_closed_forms() {
        assert_eq!(
            qf_to_series(&motzkin_f0(), 12).unwrap(),
            Series::from_ints(&[1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188, 5798, 15511])
        );
        let dd = p(&[1, 0, -4]);
        let dyck = QuadElem::from_parts(rf(&[1], &[0, 0, 2]), rf(&[-1], &[0, 0, 2]), dd.clone());
        assert_eq!(
            qf_to_series(&dyck, 16).unwrap(),
            Series::from_ints(&[1, 0, 1, 0, 2, 0, 5, 0, 14, 0, 42, 0, 132, 0, 429, 0, 1430])
        );
        assert_eq!(qf_to_series(&QuadElem::zero(&dd), 5).unwrap(), Series::zero(5));
        let fixed = series_fixed_point_solve(&UniPoly::one(), &UniPoly::zero(), &p(&[0, 0, 1]), 16).unwrap();
        assert_eq!(qf_to_series(&dyck, 16).unwrap(), fixed);
    }

    #[test]
    fn pole_detected() {
        // the other Motzkin root (1 - x + √Δ)/(2x^2) blows up at 0
        let other = motzkin_f0().conjugate();
        assert_eq!(other.to_series(5), Err(Error::NotAnalytic));
    }

    #[test]
    fn json_round_trip() {
        let u = motzkin_f0();
        let v = u.to_json();
        assert_eq!(v["delta"], json!(["1", "-2", "-3"]));
        assert_eq!(v["a_den"], json!(["0", "0", "1"]));
        assert_eq!(v["a_num"], json!(["1/2", "-1/2"]));
        assert_eq!(QuadElem::from_json(&v).unwrap(), u);
    }

    #[test]
    fn display_over_common_denominator() {
        assert_eq!(
            motzkin_f0().to_string(),
            "(-x + 1 - sqrt(-3*x^2 - 2*x + 1))/(2*x^2)"
        );
    }

    #[test]
    fn display_shapes() {
        let d = p(&[1, 0, -4]);
        assert_eq!(QuadElem::sqrt_delta(&d).to_string(), "sqrt(-4*x^2 + 1)");
        assert_eq!(QuadElem::sqrt_delta(&d).neg().scale(&rat(3)).to_string(), "-3*sqrt(-4*x^2 + 1)");
        assert_eq!(QuadElem::constant(ratio(1, 2), &d).to_string(), "1/2");
        let inv = QuadElem::from_poly(p(&[1, -1]), &d).inv().unwrap();
        assert_eq!(inv.to_string(), "-1/(x - 1)");
    }
}
