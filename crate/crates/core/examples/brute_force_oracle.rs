//! Checks the dynamic program against exhaustive enumeration of every step
//! sequence for a few step sets.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use qew::dp::{area_enumerators_upto, brute_force_area_multiset};
use qew::steps::StepSet;

fn main() {
    for s in [vec![1, -1], vec![1, 0, -1], vec![1, -2], vec![1, 0, -1, 2]] {
        let steps = StepSet::new(s).unwrap();
        let polys = area_enumerators_upto(&steps, 9);
        let mut agree = 0;
        for (n, p) in polys.iter().enumerate() {
            let brute: BTreeMap<_, _> = brute_force_area_multiset(&steps, n)
                .unwrap()
                .into_iter()
                .map(|(a, c)| (a, BigUint::from(c)))
                .collect();
            assert_eq!(p.area_counts(), brute, "steps {steps}, n = {n}");
            agree += 1;
        }
        println!("{steps}: DP and brute force agree for n = 0..{}", agree - 1);
    }
    let p = &area_enumerators_upto(&StepSet::motzkin(), 4)[4];
    println!("\nMotzkin n = 4, area: count");
    for (area, count) in p.area_counts() {
        println!("  {area}: {count}");
    }
}
