//! Closed forms of f^(k)(x,1) for Motzkin and Dyck paths and their Maclaurin
//! series. Pass an order as the first argument (default 3).

use std::time::Instant;

use qew::derk::{derk, residual_check};
use qew::parse::parse_poly_expr;

fn main() {
    let order: usize = std::env::args().nth(1).map_or(3, |s| s.parse().expect("order"));
    for (name, q) in [("Motzkin", "x"), ("Dyck", "0")] {
        let p = parse_poly_expr("1").unwrap();
        let q = parse_poly_expr(q).unwrap();
        let r = parse_poly_expr("x^2*q").unwrap();
        let t = Instant::now();
        let res = derk(&p, &q, &r, order).unwrap();
        println!("{name}: Delta = {}, derived to order {order} in {:.2?}", res.delta, t.elapsed());
        for (k, fk) in res.f.iter().enumerate().take(3) {
            println!("  F[{k}] = {fk}");
        }
        for (k, fk) in res.f.iter().enumerate() {
            println!("  F[{k}] = {}", fk.to_series(12).unwrap());
        }
        println!("  residual vanishes: {}\n", residual_check(&res));
    }
}
