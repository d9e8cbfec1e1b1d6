use num_bigint::BigInt;
use num_traits::Zero;

use crate::steps::StepSet;

/// Factorial moments of the closed-walk enumerator of one row:
/// `moments[k] = d^k/dq^k A_{0,n}(q)` at `q = 1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MomentRow {
    pub n: usize,
    pub moments: Vec<BigInt>,
}

/// The area dynamic program evaluated in `Z[eps]/eps^(K+1)` at `q = 1 + eps`
/// instead of over full polynomials in `q`.
///
/// Each cell stores `2^k A^(k)(1)` for `k = 0..=K`, which stays integral even
/// while heights are odd and areas are half-integers. Pushing a cell through
/// a step of area `e/2` uses Leibniz on `q^(e/2) A(q)`:
///
/// ```text
/// 2^k (q^(e/2) A)^(k)(1) = sum_i C(k,i) e(e-2)...(e-2i+2) * 2^(k-i) A^(k-i)(1)
/// ```
///
/// Memory is two rows of at most `N+1` heights, so this streams to lengths
/// where the full polynomials would be far too large.
#[derive(Clone, Debug)]
pub struct MomentRows {
    steps: Vec<i64>,
    down: usize,
    order: usize,
    horizon: usize,
    n: usize,
    cells: Vec<Option<Vec<BigInt>>>,
    binom: Vec<Vec<BigInt>>,
}

impl MomentRows {
    /// Rows `0..=horizon` carrying derivatives up to `order`.
    pub fn new(steps: &StepSet, order: usize, horizon: usize) -> Self {
        let mut one = vec![BigInt::zero(); order + 1];
        one[0] = BigInt::from(1);
        let mut binom = vec![vec![BigInt::zero(); order + 1]; order + 1];
        for k in 0..=order {
            binom[k][0] = BigInt::from(1);
            for i in 1..=k {
                binom[k][i] = &binom[k - 1][i - 1] + &binom[k - 1][i];
            }
        }
        MomentRows {
            steps: steps.iter().collect(),
            down: (-steps.min_step()).max(0) as usize,
            order,
            horizon,
            n: 0,
            cells: vec![Some(one)],
            binom,
        }
    }

    fn closed(&self) -> MomentRow {
        let moments = match self.cells.first().and_then(Option::as_ref) {
            Some(t) => t
                .iter()
                .enumerate()
                .map(|(k, v)| {
                    debug_assert!((v % (BigInt::from(1) << k)).is_zero());
                    v >> k
                })
                .collect(),
            None => vec![BigInt::zero(); self.order + 1],
        };
        MomentRow { n: self.n, moments }
    }

    fn advance(&mut self) {
        let next_n = self.n + 1;
        let cap = self.horizon.saturating_sub(next_n) * self.down;
        let max_up = self.steps.iter().copied().max().unwrap_or(0).max(0) as usize;
        let width = (self.cells.len() + max_up).min(cap + 1);
        let mut next: Vec<Option<Vec<BigInt>>> = vec![None; width];
        let mut coef = vec![BigInt::zero(); self.order + 1];
        for (h, cell) in self.cells.iter().enumerate() {
            let Some(t) = cell else { continue };
            for &s in &self.steps {
                let m = h as i64 + s;
                if m < 0 || m as usize >= width {
                    continue;
                }
                let e = 2 * h as i64 + s;
                let target = next[m as usize].get_or_insert_with(|| vec![BigInt::zero(); self.order + 1]);
                // falling products e (e-2) ... (e-2i+2)
                coef[0] = BigInt::from(1);
                for i in 1..=self.order {
                    coef[i] = &coef[i - 1] * (e - 2 * (i as i64 - 1));
                }
                for k in 0..=self.order {
                    for i in 0..=k {
                        if t[k - i].is_zero() || coef[i].is_zero() {
                            continue;
                        }
                        let c = &self.binom[k][i] * &coef[i];
                        target[k] += &t[k - i] * c;
                    }
                }
            }
        }
        while matches!(next.last(), Some(None)) {
            next.pop();
        }
        self.cells = next;
        self.n = next_n;
    }
}

impl Iterator for MomentRows {
    type Item = MomentRow;

    fn next(&mut self) -> Option<MomentRow> {
        if self.n > self.horizon {
            return None;
        }
        let row = self.closed();
        if self.n == self.horizon {
            self.n += 1;
        } else {
            self.advance();
        }
        Some(row)
    }
}
