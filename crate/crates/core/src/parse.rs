//! Text front door: polynomial expressions in `x` and `q`, and step-set
//! literals such as `[[1,1],[1,0],[1,-1]]`.
//!
//! Expression grammar, loosest binding first:
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' integer)*
//! atom   := integer | integer '/' integer | 'x' | 'q' | '(' expr ')'
//! ```
//!
//! There is no implicit multiplication and no division by anything but a
//! literal denominator.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::kernel::BiPoly;
use crate::steps::StepSet;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigRational),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    End,
}

fn syntax<T>(pos: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Syntax {
        pos,
        msg: msg.into(),
    })
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    let digits = |mut j: usize| {
        while j < bytes.len() && bytes[j].is_ascii_digit() {
            j += 1;
        }
        j
    };
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                let end = digits(i);
                let numer: BigInt = text[i..end].parse().expect("digits");
                // `a/b` is a single rational literal; whitespace is not allowed inside.
                if end + 1 < bytes.len() && bytes[end] == b'/' && bytes[end + 1].is_ascii_digit() {
                    let dend = digits(end + 1);
                    let denom: BigInt = text[end + 1..dend].parse().expect("digits");
                    if denom.is_zero() {
                        return syntax(end + 1, "zero denominator in rational literal");
                    }
                    i = dend;
                    toks.push((start, Tok::Num(BigRational::new(numer, denom))));
                } else {
                    i = end;
                    toks.push((start, Tok::Num(BigRational::from_integer(numer))));
                }
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                let mut j = i;
                while j < bytes.len() && (bytes[j].is_ascii_alphanumeric() || bytes[j] == b'_') {
                    j += 1;
                }
                toks.push((start, Tok::Ident(text[i..j].to_string())));
                i = j;
                continue;
            }
            b'/' => return syntax(i, "'/' is only allowed inside a rational literal a/b"),
            _ => {
                let ch = text[i..].chars().next().unwrap_or('?');
                return syntax(i, format!("unexpected character '{ch}'"));
            }
        };
        toks.push((start, tok));
        i += 1;
    }
    toks.push((text.len(), Tok::End));
    Ok(toks)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].1.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<BiPoly> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = acc + self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = acc - self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<BiPoly> {
        let mut acc = self.unary()?;
        while *self.peek() == Tok::Star {
            self.bump();
            acc = acc * self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<BiPoly> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<BiPoly> {
        let mut base = self.atom()?;
        while *self.peek() == Tok::Caret {
            self.bump();
            let pos = self.pos();
            let e = match self.bump() {
                Tok::Num(n) if n.is_integer() => n.to_integer(),
                Tok::Num(_) => return syntax(pos, "exponent must be a nonnegative integer"),
                Tok::Minus => return syntax(pos, "negative exponents are not allowed"),
                _ => return syntax(pos, "expected an integer exponent after '^'"),
            };
            let e: u32 = match e.try_into() {
                Ok(e) => e,
                Err(_) => return syntax(pos, "exponent too large"),
            };
            base = base.pow(e);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<BiPoly> {
        let pos = self.pos();
        match self.bump() {
            Tok::Num(n) => Ok(BiPoly::constant(n)),
            Tok::Ident(name) => match name.as_str() {
                "x" => Ok(BiPoly::x()),
                "q" => Ok(BiPoly::q()),
                _ => syntax(pos, format!("unknown variable '{name}' (only x and q are allowed)")),
            },
            Tok::LParen => {
                let inner = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return syntax(self.pos(), "expected ')'");
                }
                self.bump();
                Ok(inner)
            }
            Tok::End => syntax(pos, "unexpected end of input"),
            t => syntax(pos, format!("unexpected token {t:?}")),
        }
    }
}

/// Parses a polynomial in `x` and `q` and expands it exactly.
pub fn parse_poly_expr(text: &str) -> Result<BiPoly> {
    let mut p = Parser {
        toks: lex(text)?,
        at: 0,
    };
    let out = p.expr()?;
    match p.peek() {
        Tok::End => Ok(out),
        Tok::Ident(_) | Tok::Num(_) | Tok::LParen => {
            syntax(p.pos(), "implicit multiplication is not allowed; use '*'")
        }
        _ => syntax(p.pos(), "unexpected trailing input"),
    }
}

/// Parses `[[1,1],[1,0],[1,-1]]`, `{[1,1],[1,-1]}` or `[(1,2),(1,-1)]`.
/// Duplicate steps collapse.
pub fn parse_step_set(text: &str) -> Result<StepSet> {
    let chars: Vec<(usize, char)> = text
        .char_indices()
        .filter(|(_, c)| !c.is_whitespace())
        .collect();
    let mut i = 0;
    let end_pos = text.len();
    let pos_of = |i: usize| chars.get(i).map_or(end_pos, |&(p, _)| p);
    let expect = |i: &mut usize, want: &[char]| -> Result<char> {
        match chars.get(*i) {
            Some(&(_, c)) if want.contains(&c) => {
                *i += 1;
                Ok(c)
            }
            _ => syntax(pos_of(*i), format!("expected one of {want:?}")),
        }
    };
    let int = |i: &mut usize| -> Result<i64> {
        let start = *i;
        if chars.get(*i).is_some_and(|&(_, c)| c == '-' || c == '+') {
            *i += 1;
        }
        while chars.get(*i).is_some_and(|&(_, c)| c.is_ascii_digit()) {
            *i += 1;
        }
        let s: String = chars[start..*i].iter().map(|&(_, c)| c).collect();
        s.parse()
            .or_else(|_| syntax(pos_of(start), "expected an integer"))
    };

    let open = expect(&mut i, &['[', '{'])?;
    let close = if open == '[' { ']' } else { '}' };
    let mut steps = Vec::new();
    if chars.get(i).is_some_and(|&(_, c)| c == close) {
        return Err(Error::EmptyStepSet);
    }
    loop {
        let o = expect(&mut i, &['[', '('])?;
        let dx = int(&mut i)?;
        expect(&mut i, &[','])?;
        let dy = int(&mut i)?;
        expect(&mut i, if o == '[' { &[']'] } else { &[')'] })?;
        if dx != 1 {
            return Err(Error::NonUnitStep);
        }
        steps.push(dy);
        match expect(&mut i, &[',', close])? {
            ',' => continue,
            _ => break,
        }
    }
    if i != chars.len() {
        return syntax(pos_of(i), "unexpected trailing input");
    }
    StepSet::new(steps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rat;

    fn bp(terms: &[((u32, u32), i64)]) -> BiPoly {
        BiPoly::from_terms(terms.iter().map(|&(k, c)| (k, rat(c))))
    }

    #[test]
    fn motzkin_kernel_input() {
        assert_eq!(parse_poly_expr("x^2*q").unwrap(), bp(&[((2, 1), 1)]));
    }

    #[test]
    fn zero_literal() {
        assert!(parse_poly_expr("0").unwrap().is_zero());
    }

    #[test]
    fn expansion_matches_hand_oracle() {
        // (1+x)(1-q) - 1 + q = 1 - q + x - xq - 1 + q = x - xq
        let got = parse_poly_expr("(1+x)*(1-q) - 1 + q").unwrap();
        assert_eq!(got, bp(&[((1, 0), 1), ((1, 1), -1)]));
    }

    #[test]
    fn precedence() {
        // -x^2 is -(x^2); 2*x^2 is 2*(x^2)
        assert_eq!(parse_poly_expr("-x^2").unwrap(), bp(&[((2, 0), -1)]));
        assert_eq!(parse_poly_expr("2*x^2").unwrap(), bp(&[((2, 0), 2)]));
        assert_eq!(parse_poly_expr("1 - x - x").unwrap(), bp(&[((0, 0), 1), ((1, 0), -2)]));
        assert_eq!(parse_poly_expr("(x+q)^2").unwrap(), bp(&[((2, 0), 1), ((1, 1), 2), ((0, 2), 1)]));
    }

    #[test]
    fn rational_literals() {
        let p = parse_poly_expr("3/6*x").unwrap();
        assert_eq!(p.terms()[&(1, 0)], BigRational::new(1.into(), 2.into()));
    }

    #[test]
    fn errors_carry_positions() {
        match parse_poly_expr("x^-1") {
            Err(Error::Syntax { pos: 2, .. }) => {}
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_poly_expr("x^1/2"), Err(Error::Syntax { pos: 2, .. })));
        assert!(matches!(parse_poly_expr("x + y"), Err(Error::Syntax { pos: 4, .. })));
        assert!(matches!(parse_poly_expr("2x"), Err(Error::Syntax { pos: 1, .. })));
        assert!(matches!(parse_poly_expr("(x"), Err(Error::Syntax { pos: 2, .. })));
        assert!(matches!(parse_poly_expr(""), Err(Error::Syntax { pos: 0, .. })));
        assert!(matches!(parse_poly_expr("x / q"), Err(Error::Syntax { pos: 2, .. })));
        assert!(matches!(parse_poly_expr("1/0"), Err(Error::Syntax { .. })));
    }

    #[test]
    fn step_sets() {
        let m = parse_step_set("[[1,1],[1,0],[1,-1]]").unwrap();
        assert_eq!(m, StepSet::motzkin());
        assert_eq!(parse_step_set("[[1,1],[1,-1]]").unwrap(), StepSet::dyck());
        let s = parse_step_set("[(1,2), (1,-1)]").unwrap();
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![-1, 2]);
        assert_eq!(parse_step_set("{[1,1],[1,0],[1,-1]}").unwrap(), m);
    }

    #[test]
    fn step_set_errors() {
        assert_eq!(parse_step_set("[[2,1],[1,-1]]"), Err(Error::NonUnitStep));
        assert_eq!(parse_step_set("[]"), Err(Error::EmptyStepSet));
        assert!(matches!(parse_step_set("[[1,1]"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_step_set("[[1,a]]"), Err(Error::Syntax { .. })));
    }

    #[test]
    fn duplicate_steps_collapse() {
        let s = parse_step_set("[[1,1],[1,1],[1,-1]]").unwrap();
        assert_eq!(s.len(), 2);
    }
}
