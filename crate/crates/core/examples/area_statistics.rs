//! Exact mean and variance of the area per length, and numeric growth rates
//! of the path counts. Pass a maximum length (default 400).

use num_rational::BigRational;
use num_traits::ToPrimitive;
use qew::moments::{growth_estimate, ratio_sequence, stats_sequences};
use qew::steps::StepSet;

fn main() {
    let max_n: usize = std::env::args().nth(1).map_or(400, |s| s.parse().expect("length"));
    for (name, steps) in [
        ("Motzkin", StepSet::motzkin()),
        ("Dyck", StepSet::dyck()),
        ("up 2 / down 1", StepSet::new([2, -1]).unwrap()),
    ] {
        let rows = stats_sequences(&steps, max_n).unwrap();
        println!("{name}");
        for row in rows.iter().filter(|r| r.a0 > 0.into()).take(6) {
            println!("  {row}");
        }
        let last = rows.iter().rev().find(|r| r.mean.is_some()).unwrap();
        let mean = last.mean.as_ref().unwrap().to_f64().unwrap();
        let var = last.variance.as_ref().unwrap().to_f64().unwrap();
        println!("  n = {}: mean {mean:.3}, variance {var:.3}", last.n);
        println!("  mean / n^1.5 = {:.5}", mean / (last.n as f64).powf(1.5));

        let counts: Vec<BigRational> = rows
            .iter()
            .filter(|r| r.a0 > 0.into())
            .map(|r| BigRational::from_integer(r.a0.clone()))
            .collect();
        let ratios = ratio_sequence(&counts).unwrap();
        println!(
            "  last count ratio {:.6}, accelerated estimate {:.6}\n",
            ratios.last().unwrap(),
            growth_estimate(&counts).unwrap()
        );
    }
}
