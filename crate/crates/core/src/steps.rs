use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::kernel::{rat, BiPoly};

/// Finite set of unit-width steps `(1, s)`, stored by vertical displacement `s`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct StepSet {
    steps: BTreeSet<i64>,
}

impl StepSet {
    pub fn new<I: IntoIterator<Item = i64>>(steps: I) -> Result<Self> {
        let steps: BTreeSet<i64> = steps.into_iter().collect();
        if steps.is_empty() {
            return Err(Error::EmptyStepSet);
        }
        Ok(StepSet { steps })
    }

    /// `{U, D}`.
    pub fn dyck() -> Self {
        Self::new([1, -1]).expect("nonempty")
    }

    /// `{U, F, D}`.
    pub fn motzkin() -> Self {
        Self::new([1, 0, -1]).expect("nonempty")
    }

    pub fn iter(&self) -> impl Iterator<Item = i64> + '_ {
        self.steps.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn contains(&self, s: i64) -> bool {
        self.steps.contains(&s)
    }

    pub fn max_step(&self) -> i64 {
        *self.steps.last().expect("nonempty")
    }

    pub fn min_step(&self) -> i64 {
        *self.steps.first().expect("nonempty")
    }

    /// `(P, Q, R)` with `f = P + Q f + R f(x,q) f(qx,q)` when the step set has
    /// a first-return decomposition of that shape, i.e. `S ⊆ {-1, 0, 1}`.
    pub fn functional_equation(&self) -> Option<(BiPoly, BiPoly, BiPoly)> {
        if self.steps.iter().any(|s| !(-1..=1).contains(s)) {
            return None;
        }
        let p = BiPoly::one();
        let q = if self.contains(0) { BiPoly::x() } else { BiPoly::zero() };
        let r = if self.contains(1) && self.contains(-1) {
            BiPoly::term(rat(1), 2, 1)
        } else {
            BiPoly::zero()
        };
        Some((p, q, r))
    }
}

impl fmt::Display for StepSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, s) in self.steps.iter().rev().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[1,{s}]")?;
        }
        write!(f, "]")
    }
}
