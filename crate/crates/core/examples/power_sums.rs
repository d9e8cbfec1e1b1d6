//! Generating functions for sums of squares and cubes of areas, from
//! factorial moments combined with Stirling numbers.

use qew::derk::derk;
use qew::moments::{moment_closed_form, moment_series, power_sum_coefficients};
use qew::steps::StepSet;

fn main() {
    for (name, steps) in [("Motzkin", StepSet::motzkin()), ("Dyck", StepSet::dyck())] {
        let (p, q, r) = steps.functional_equation().unwrap();
        let res = derk(&p, &q, &r, 3).unwrap();
        for power in 1..=3 {
            let w = power_sum_coefficients(power).unwrap();
            println!("{name}, sum of area^{power} (weights {w:?}):");
            println!("  {}", moment_series(&res, power, 12).unwrap());
        }
        println!("  closed form for squares: {}\n", moment_closed_form(&res, 2).unwrap());
    }
}
