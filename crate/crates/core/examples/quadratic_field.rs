//! Arithmetic in Q(x)[sqrt(1 - 2x - 3x^2)]: the Motzkin generating function,
//! its inverse and derivative, and their Maclaurin expansions.

use qew::kernel::{RatFunc, UniPoly};
use qew::quad::{canonical_delta, qf_normalize, QuadElem};

fn main() {
    let raw = UniPoly::from_ints(&[4, -8, -12]);
    let delta = canonical_delta(&raw).unwrap();
    println!("squarefree part of {raw}: {delta}");

    // M = (1 - x - sqrt(Delta)) / (2x^2)
    let two_x2 = RatFunc::from_poly(UniPoly::from_ints(&[0, 0, 2]));
    let a = RatFunc::from_poly(UniPoly::from_ints(&[1, -1])).checked_div(&two_x2).unwrap();
    let b = (-RatFunc::one()).checked_div(&two_x2).unwrap();
    let m = qf_normalize(a, b, &delta).unwrap();
    println!("M      = {m}");
    println!("       = {}", m.to_series(10).unwrap());

    let inv = m.inv().unwrap();
    println!("1/M    = {inv}");
    println!("       = {}", inv.to_series(8).unwrap());
    println!("M*M    = {}", m.mul(&m).unwrap().to_series(8).unwrap());
    println!("dM/dx  = {}", m.derivative_x());
    println!("       = {}", m.derivative_x().to_series(8).unwrap());

    // the other root has a pole at 0
    println!("conjugate expands: {:?}", m.conjugate().to_series(4).err());

    let json = m.to_json();
    println!("JSON   = {json}");
    assert_eq!(QuadElem::from_json(&json).unwrap(), m);
}
