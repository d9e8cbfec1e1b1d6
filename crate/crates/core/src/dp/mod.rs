//! Area weight enumerators of nonnegative unit-width walks by dynamic
//! programming over the final step.
//!
//! Row `n` maps each reachable height `m` to `A_{m,n}(q)`, the sum of
//! `q^area` over walks of length `n` that end at height `m` and never dip
//! below zero. A step `(1, s)` ending at height `m` contributes the trapezoid
//! area `(2m - s) / 2`, so
//!
//! ```text
//! A_{m,n}(q) = sum_{s in S, m - s >= 0} q^((2m - s)/2) A_{m-s,n-1}(q)
//! ```
//!
//! with `A_{0,0} = 1`. Closed walks (`m = 0`) always have integer area.

mod brute;
mod halfq;
mod moments;

use std::collections::BTreeMap;

pub use brute::{brute_force_area_multiset, BRUTE_FORCE_LIMIT};
pub use halfq::{factorial_moment_from_poly, HalfQPoly};
pub use moments::{MomentRow, MomentRows};

use crate::steps::StepSet;

/// One row of the dynamic program.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DPRow {
    pub n: usize,
    pub cells: BTreeMap<usize, HalfQPoly>,
}

impl DPRow {
    /// The empty walk: `A_{0,0} = 1`.
    pub fn base() -> Self {
        DPRow {
            n: 0,
            cells: BTreeMap::from([(0, HalfQPoly::one())]),
        }
    }

    /// `A_{m,n}`; zero when `m` is unreachable.
    pub fn at(&self, m: usize) -> HalfQPoly {
        self.cells.get(&m).cloned().unwrap_or_default()
    }

    /// `A_{0,n}`, the closed-walk enumerator.
    pub fn closed(&self) -> HalfQPoly {
        self.at(0)
    }
}

/// Advances a row by one step. Heights above `cap` are dropped when a cap is
/// given; without one every reachable height is kept.
fn advance(prev: &DPRow, steps: &StepSet, cap: Option<usize>) -> DPRow {
    let mut cells: BTreeMap<usize, HalfQPoly> = BTreeMap::new();
    for (&h, poly) in &prev.cells {
        for s in steps.iter() {
            let m = h as i64 + s;
            if m < 0 || cap.is_some_and(|c| m as usize > c) {
                continue;
            }
            // area halves of the last step: 2m - s = 2h + s
            let shift = (2 * h as i64 + s) as u64;
            cells
                .entry(m as usize)
                .or_default()
                .add_shifted(poly, shift);
        }
    }
    cells.retain(|_, p| !p.is_zero());
    DPRow {
        n: prev.n + 1,
        cells,
    }
}

/// Row `n` from row `n - 1`.
pub fn dp_step(prev: &DPRow, steps: &StepSet) -> DPRow {
    advance(prev, steps, None)
}

/// Streaming iterator over DP rows `0, 1, 2, ...`, holding one row at a time.
///
/// With a horizon `N`, heights that can no longer return to zero within `N`
/// total steps are pruned; the closed-walk enumerators of rows `0..=N` are
/// unchanged by this.
#[derive(Clone, Debug)]
pub struct DpRows {
    steps: StepSet,
    next: Option<DPRow>,
    horizon: Option<usize>,
}

impl DpRows {
    pub fn new(steps: StepSet) -> Self {
        DpRows {
            steps,
            next: Some(DPRow::base()),
            horizon: None,
        }
    }

    pub fn with_horizon(mut self, max_n: usize) -> Self {
        self.horizon = Some(max_n);
        self
    }

    fn cap_for(&self, n: usize) -> Option<usize> {
        let horizon = self.horizon?;
        let down = (-self.steps.min_step()).max(0) as usize;
        Some(horizon.saturating_sub(n) * down)
    }
}

impl Iterator for DpRows {
    type Item = DPRow;

    fn next(&mut self) -> Option<DPRow> {
        let row = self.next.take()?;
        if self.horizon.is_some_and(|h| row.n > h) {
            return None;
        }
        let cap = self.cap_for(row.n + 1);
        self.next = Some(advance(&row, &self.steps, cap));
        Some(row)
    }
}

/// `[A_{0,0}, A_{0,1}, ..., A_{0,K}]`.
pub fn area_enumerators_upto(steps: &StepSet, max_n: usize) -> Vec<HalfQPoly> {
    let mut out = Vec::with_capacity(max_n + 1);
    let mut row = DPRow::base();
    out.push(row.closed());
    for _ in 0..max_n {
        row = dp_step(&row, steps);
        out.push(row.closed());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    fn motzkin_rows(n: usize) -> Vec<DPRow> {
        DpRows::new(StepSet::motzkin()).take(n + 1).collect()
    }

    #[test]
    fn worked_motzkin_rows() {
        let rows = motzkin_rows(3);
        assert_eq!(rows[1].at(0), HalfQPoly::one());
        assert_eq!(rows[1].at(1), HalfQPoly::from_terms([(1, 1)]));
        assert_eq!(rows[2].at(0), HalfQPoly::from_int_coeffs(&[1, 1]));
        assert_eq!(
            rows[3].at(1),
            HalfQPoly::from_terms([(1, 1), (3, 2), (5, 1), (7, 1)])
        );
    }

    #[test]
    fn motzkin_upto_five() {
        let got = area_enumerators_upto(&StepSet::motzkin(), 5);
        let want = [
            vec![1],
            vec![1],
            vec![1, 1],
            vec![1, 2, 1],
            vec![1, 3, 3, 1, 1],
            vec![1, 4, 6, 4, 3, 2, 1],
        ];
        let want: Vec<_> = want.iter().map(|c| HalfQPoly::from_int_coeffs(c)).collect();
        assert_eq!(got, want);
    }

    #[test]
    fn dyck_upto_four() {
        let got = area_enumerators_upto(&StepSet::dyck(), 4);
        assert_eq!(
            got,
            vec![
                HalfQPoly::one(),
                HalfQPoly::zero(),
                HalfQPoly::from_int_coeffs(&[0, 1]),
                HalfQPoly::zero(),
                HalfQPoly::from_int_coeffs(&[0, 0, 1, 0, 1]),
            ]
        );
    }

    #[test]
    fn length_zero_is_empty_walk() {
        let steps = StepSet::new([2, -1]).unwrap();
        assert_eq!(area_enumerators_upto(&steps, 0), vec![HalfQPoly::one()]);
    }

    #[test]
    fn reachable_heights_only() {
        let steps = StepSet::new([2, -1]).unwrap();
        for row in DpRows::new(steps).take(8) {
            for &m in row.cells.keys() {
                assert!(m <= 2 * row.n);
            }
        }
    }

    #[test]
    fn horizon_pruning_keeps_closed_enumerators() {
        for steps in [StepSet::motzkin(), StepSet::new([1, -2]).unwrap(), StepSet::new([2, -1]).unwrap()] {
            let full = area_enumerators_upto(&steps, 14);
            let pruned: Vec<_> = DpRows::new(steps.clone())
                .with_horizon(14)
                .map(|r| r.closed())
                .collect();
            assert_eq!(full, pruned);
        }
    }

    #[test]
    fn motzkin_and_catalan_counts() {
        let motzkin = [1u64, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188, 5798, 15511];
        let got = area_enumerators_upto(&StepSet::motzkin(), 12);
        for (p, &c) in got.iter().zip(&motzkin) {
            assert_eq!(p.eval_q1(), BigUint::from(c));
        }
        let catalan = [1u64, 1, 2, 5, 14, 42, 132];
        let got = area_enumerators_upto(&StepSet::dyck(), 12);
        for (i, &c) in catalan.iter().enumerate() {
            assert_eq!(got[2 * i].eval_q1(), BigUint::from(c));
        }
    }
}
