//! Truncated power series: products, quotients, square roots, and the
//! combinatorial root of a quadratic by fixed-point iteration.

use qew::kernel::UniPoly;
use qew::series::{series_fixed_point_solve, Series};

fn main() {
    let n = 10;
    let one = UniPoly::one();
    let x = UniPoly::x();
    let x2 = UniPoly::from_ints(&[0, 0, 1]);

    let m = series_fixed_point_solve(&one, &x, &x2, n).unwrap();
    println!("Motzkin  M = {m}");
    let c = series_fixed_point_solve(&one, &UniPoly::zero(), &x2, n).unwrap();
    println!("Catalan  C = {c}");

    let root = Series::from_poly(&UniPoly::from_ints(&[1, 0, -4]), n).sqrt().unwrap();
    println!("sqrt(1 - 4x^2) = {root}");
    // 1 - 2x^2 C = sqrt(1 - 4x^2)
    let lhs = Series::one(n).sub(&Series::from_poly(&UniPoly::from_ints(&[0, 0, 2]), n).mul(&c).unwrap()).unwrap();
    println!("1 - 2x^2 C equals it: {}", lhs == root);

    let geometric = Series::one(n).div(&Series::from_poly(&UniPoly::from_ints(&[1, -1]), n)).unwrap();
    println!("1/(1 - x) = {geometric}");
    // dividing by x lowers the order by one
    let shifted = m.sub(&Series::one(n)).unwrap().div(&Series::from_poly(&x, n)).unwrap();
    println!("(M - 1)/x = {shifted}");
}
