use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::steps::StepSet;

/// Largest number of raw step sequences the exhaustive enumerator will visit.
pub const BRUTE_FORCE_LIMIT: u128 = 10_000_000;

/// Exhaustively walks every step sequence of length `n`, keeping those that
/// stay at height `>= 0` and end at height 0, and tallies their areas.
///
/// A step from height `h` by `s` covers area `h + s/2`. Intended as an
/// independent check on the dynamic program, so it shares no code with it.
pub fn brute_force_area_multiset(steps: &StepSet, n: usize) -> Result<BTreeMap<BigRational, u64>> {
    let total = (steps.len() as u128).checked_pow(n as u32);
    if total.is_none_or(|t| t > BRUTE_FORCE_LIMIT) {
        return Err(Error::BruteForceLimit(format!("{}^{}", steps.len(), n)));
    }
    let steps: Vec<i64> = steps.iter().collect();
    let mut tally: BTreeMap<i64, u64> = BTreeMap::new();
    walk(&steps, n, 0, 0, &mut tally);
    Ok(tally
        .into_iter()
        .map(|(halves, count)| (BigRational::new(BigInt::from(halves), BigInt::from(2)), count))
        .collect())
}

fn walk(steps: &[i64], left: usize, height: i64, area_halves: i64, tally: &mut BTreeMap<i64, u64>) {
    if left == 0 {
        if height == 0 {
            *tally.entry(area_halves).or_default() += 1;
        }
        return;
    }
    for &s in steps {
        let next = height + s;
        if next < 0 {
            continue;
        }
        walk(steps, left - 1, next, area_halves + 2 * height + s, tally);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rat;

    #[test]
    fn motzkin_length_four() {
        let got = brute_force_area_multiset(&StepSet::motzkin(), 4).unwrap();
        let want: BTreeMap<_, _> = [(0, 1), (1, 3), (2, 3), (3, 1), (4, 1)]
            .into_iter()
            .map(|(a, c)| (rat(a), c))
            .collect();
        assert_eq!(got, want);
    }

    #[test]
    fn dyck_odd_length_is_empty() {
        assert!(brute_force_area_multiset(&StepSet::dyck(), 3).unwrap().is_empty());
    }

    #[test]
    fn dyck_length_four() {
        let got = brute_force_area_multiset(&StepSet::dyck(), 4).unwrap();
        let want: BTreeMap<_, _> = [(rat(2), 1), (rat(4), 1)].into_iter().collect();
        assert_eq!(got, want);
    }

    #[test]
    fn guard() {
        assert!(matches!(
            brute_force_area_multiset(&StepSet::motzkin(), 30),
            Err(Error::BruteForceLimit(_))
        ));
    }
}
