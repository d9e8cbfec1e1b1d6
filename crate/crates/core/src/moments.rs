//! Power moments of the area statistic.
//!
//! Factorial moments `sum area (area-1) ... (area-k+1)` are what the
//! q-derivatives produce; Stirling numbers of the second kind turn them into
//! power sums, `area^p = sum_j S(p,j) area^(j falling)`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::derk::DerivationResult;
use crate::dp::{MomentRow, MomentRows};
use crate::error::{Error, Result};
use crate::quad::QuadElem;
use crate::series::Series;
use crate::steps::StepSet;

/// Minimum sequence length accepted by [`growth_estimate`].
pub const MIN_GROWTH_TERMS: usize = 10;

/// Rows `0..=max_p` of the Stirling numbers of the second kind.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StirlingTable {
    rows: Vec<Vec<BigInt>>,
}

impl StirlingTable {
    pub fn new(max_p: usize) -> Self {
        let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::from(1)]];
        for p in 1..=max_p {
            let prev = &rows[p - 1];
            let row = (0..=p)
                .map(|j| {
                    let stay = if j < p { prev[j].clone() * j } else { BigInt::zero() };
                    let up = if j > 0 { prev[j - 1].clone() } else { BigInt::zero() };
                    stay + up
                })
                .collect();
            rows.push(row);
        }
        StirlingTable { rows }
    }

    pub fn max_p(&self) -> usize {
        self.rows.len() - 1
    }

    /// `S(p, j)`, zero outside `0 <= j <= p`.
    pub fn get(&self, p: usize, j: usize) -> BigInt {
        self.rows[p].get(j).cloned().unwrap_or_default()
    }

    /// `[S(p,0), ..., S(p,p)]`.
    pub fn row(&self, p: usize) -> &[BigInt] {
        &self.rows[p]
    }
}

pub fn stirling2(p: usize, j: usize) -> BigInt {
    StirlingTable::new(p).get(p, j)
}

/// `[S(p,1), ..., S(p,p)]`: the weights turning `f^(1..=p)(x,1)` into the
/// enumerator of `sum area^p`.
pub fn power_sum_coefficients(p: usize) -> Result<Vec<BigInt>> {
    if p == 0 {
        return Err(Error::ZeroPower);
    }
    Ok(StirlingTable::new(p).row(p)[1..].to_vec())
}

/// `sum_j S(p,j) F[j]` as a field element.
pub fn moment_closed_form(result: &DerivationResult, p: usize) -> Result<QuadElem> {
    let weights = power_sum_coefficients(p)?;
    if result.order() < p {
        return Err(Error::InsufficientOrder {
            have: result.order(),
            need: p,
        });
    }
    let mut acc = QuadElem::zero(&result.delta);
    for (j, w) in weights.iter().enumerate() {
        acc = acc.add(&result.f[j + 1].scale(&BigRational::from_integer(w.clone())))?;
    }
    Ok(acc)
}

/// Maclaurin series to order `n` of the enumerator of `sum area^p`.
pub fn moment_series(result: &DerivationResult, p: usize, n: usize) -> Result<Series> {
    moment_closed_form(result, p)?.to_series(n)
}

/// Count, total area and total squared area of the closed walks of length
/// `n`, with mean and variance when there is at least one walk.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StatsRow {
    pub n: usize,
    pub a0: BigInt,
    pub a1: BigInt,
    pub a2: BigInt,
    pub mean: Option<BigRational>,
    pub variance: Option<BigRational>,
}

impl StatsRow {
    fn from_moments(row: MomentRow) -> Self {
        let [a0, f1, f2]: [BigInt; 3] = row.moments.try_into().expect("three moments");
        let a1 = f1;
        let a2 = f2 + &a1;
        let (mean, variance) = if a0.is_zero() {
            (None, None)
        } else {
            let n0 = BigRational::from_integer(a0.clone());
            let mean = BigRational::from_integer(a1.clone()) / &n0;
            let var = BigRational::from_integer(a2.clone()) / &n0 - &mean * &mean;
            (Some(mean), Some(var))
        };
        StatsRow {
            n: row.n,
            a0,
            a1,
            a2,
            mean,
            variance,
        }
    }

    pub fn to_json(&self) -> Value {
        let opt = |v: &Option<BigRational>| v.as_ref().map_or(Value::Null, |r| Value::String(r.to_string()));
        json!({
            "n": self.n,
            "a0": self.a0.to_string(),
            "a1": self.a1.to_string(),
            "a2": self.a2.to_string(),
            "mean": opt(&self.mean),
            "variance": opt(&self.variance),
        })
    }
}

impl fmt::Display for StatsRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let opt = |v: &Option<BigRational>| v.as_ref().map_or("-".to_string(), ToString::to_string);
        write!(
            f,
            "{} {} {} {} {} {}",
            self.n,
            self.a0,
            self.a1,
            self.a2,
            opt(&self.mean),
            opt(&self.variance)
        )
    }
}

/// Streaming stats for lengths `0..=max_n`, one DP row in memory at a time.
pub fn stats_rows(steps: &StepSet, max_n: usize) -> impl Iterator<Item = StatsRow> {
    MomentRows::new(steps, 2, max_n).map(StatsRow::from_moments)
}

pub fn stats_sequences(steps: &StepSet, max_n: usize) -> Result<Vec<StatsRow>> {
    if max_n == 0 {
        return Err(Error::InvalidInput("max-n must be at least 1".into()));
    }
    Ok(stats_rows(steps, max_n).collect())
}

/// `v[i+1] / v[i]` in floating point.
pub fn ratio_sequence(values: &[BigRational]) -> Result<Vec<f64>> {
    if let Some(i) = values.iter().position(|v| v <= &BigRational::zero()) {
        return Err(Error::NonPositive(i));
    }
    Ok(values
        .windows(2)
        .map(|w| (&w[1] / &w[0]).to_f64().unwrap_or(f64::NAN))
        .collect())
}

/// Heuristic limit of the ratios `r_i = v[i+1]/v[i]`: one Richardson step,
/// `r_i + i (r_i - r_{i-1})` at the last `i`. This cancels a `1/i` term in
/// the ratios, so it suits sequences growing like `mu^n n^alpha`. It is a
/// numeric estimate, not a proof.
pub fn growth_estimate(values: &[BigRational]) -> Result<f64> {
    if values.len() < MIN_GROWTH_TERMS {
        return Err(Error::TooFewTerms(values.len()));
    }
    let r = ratio_sequence(values)?;
    let i = r.len() - 1;
    Ok(r[i] + i as f64 * (r[i] - r[i - 1]))
}
