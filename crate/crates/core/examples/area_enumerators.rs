//! Area enumerators A_{0,n}(q) for Motzkin paths and for a step set with a
//! double up-step, plus the height profile of one DP row.

use qew::dp::{area_enumerators_upto, DpRows};
use qew::steps::StepSet;

fn main() {
    for (n, p) in area_enumerators_upto(&StepSet::motzkin(), 6).iter().enumerate() {
        println!("Motzkin A_(0,{n})(q) = {p}");
    }

    let steps = StepSet::new([2, -1]).unwrap();
    println!("\nsteps {steps}");
    for row in DpRows::new(steps).with_horizon(9) {
        let p = row.closed();
        if !p.is_zero() {
            println!("n = {}: {} walks, A = {p}", row.n, p.eval_q1());
        }
    }

    let row = DpRows::new(StepSet::motzkin()).nth(3).unwrap();
    println!("\nMotzkin row 3 by final height:");
    for (m, p) in &row.cells {
        println!("  A_({m},3)(q) = {p}");
    }
}
