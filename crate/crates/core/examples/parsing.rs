//! The text input formats: polynomials in x and q, and step-set literals.

use qew::parse::{parse_poly_expr, parse_step_set};

fn main() {
    for text in ["x^2*q", "1 - x*q + 3/2*x^2", "(x + q)^3", "-(x - 1)^2*q"] {
        let p = parse_poly_expr(text).unwrap();
        println!("{text:>20}  ->  {p}   (at q = 1: {})", p.eval_q1());
    }
    for text in ["[[1,1],[1,0],[1,-1]]", "{(1,2),(1,-1)}", "[[1,1],[1,1],[1,-1]]"] {
        let s = parse_step_set(text).unwrap();
        println!("{text:>22}  ->  {s}, functional equation: {}", s.functional_equation().is_some());
    }
    for bad in ["2x", "x^-1", "x^1/2", "y + 1", "x +", "[[2,1]]", "[]"] {
        match (parse_poly_expr(bad), parse_step_set(bad)) {
            (Err(e), Err(f)) => println!("{bad:>12}: {e} / {f}"),
            _ => println!("{bad:>12}: accepted"),
        }
    }
}
