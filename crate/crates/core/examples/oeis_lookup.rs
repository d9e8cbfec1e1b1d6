//! Identifies the sequences computed here on OEIS. Needs the network; run
//! with `--online`. QEW_OEIS_BASE_URL points it at another server.

use num_bigint::BigInt;
use qew::derk::derk;
use qew::moments::moment_series;
use qew::oeis::oeis_lookup;
use qew::steps::StepSet;

fn main() {
    let online = std::env::args().any(|a| a == "--online");
    let (p, q, r) = StepSet::motzkin().functional_equation().unwrap();
    let res = derk(&p, &q, &r, 2).unwrap();
    let counts = res.f[0].to_series(10).unwrap().to_integers().unwrap();
    let squares: Vec<BigInt> = moment_series(&res, 2, 12).unwrap().to_integers().unwrap()[2..].to_vec();
    for (what, terms) in [("Motzkin counts", counts), ("sums of squared areas", squares)] {
        match oeis_lookup(&terms, online) {
            Ok(hits) => {
                println!("{what}:");
                for h in hits.iter().take(5) {
                    println!("  {} {}", h.id, h.name);
                }
            }
            Err(e) => println!("{what}: {e}"),
        }
    }
}
