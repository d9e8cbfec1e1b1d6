//! Polynomial gcd over `Q` by reduction modulo word-sized primes.
//!
//! Both inputs are made primitive over `Z`. For each prime `p` not dividing
//! either leading coefficient, the monic gcd mod `p` is scaled by
//! `gcd(lc A, lc B)` and combined with earlier images by the Chinese
//! remainder theorem. Images of too high degree come from unlucky primes and
//! are dropped; an image of lower degree restarts the combination. Once the
//! symmetric lift stops changing it is checked by trial division.
//!
//! A degree-0 image proves the inputs coprime, which is the common case.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::UniPoly;

pub(crate) fn gcd(a: &UniPoly, b: &UniPoly) -> UniPoly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return UniPoly::one();
    }
    let (_, pa) = a.primitive();
    let (_, pb) = b.primitive();
    let lc_gcd = pa.last().expect("nonzero").gcd(pb.last().expect("nonzero"));
    let (ia, ib) = (UniPoly::from_bigints(&pa), UniPoly::from_bigints(&pb));

    let mut image: Option<(Vec<BigInt>, BigInt)> = None;
    let mut lifted: Option<Vec<BigInt>> = None;
    for p in Primes::new() {
        let pb_big = BigInt::from(p);
        if (pa.last().expect("nonzero") % &pb_big).is_zero() || (pb.last().expect("nonzero") % &pb_big).is_zero() {
            continue;
        }
        let g = gcd_mod(&reduce(&pa, p), &reduce(&pb, p), p);
        if g.len() == 1 {
            return UniPoly::one();
        }
        let scale = reduce(std::slice::from_ref(&lc_gcd), p)[0];
        let g: Vec<u64> = g.iter().map(|&c| mul_mod(c, scale, p)).collect();
        image = match image.take() {
            Some((h, m)) if h.len() == g.len() => Some((crt(&h, &m, &g, p), m * &pb_big)),
            Some((h, m)) if h.len() < g.len() => {
                image = Some((h, m));
                continue;
            }
            _ => {
                lifted = None;
                Some((g.iter().map(|&c| BigInt::from(c)).collect(), pb_big))
            }
        };
        let (h, m) = image.as_ref().expect("just set");
        let sym = symmetric(h, m);
        if lifted.as_ref() == Some(&sym) {
            let cand = UniPoly::from_bigints(&sym);
            if divides(&cand, &ia) && divides(&cand, &ib) {
                return cand.monic();
            }
        }
        lifted = Some(sym);
    }
    unreachable!("prime supply is unbounded")
}

fn divides(d: &UniPoly, p: &UniPoly) -> bool {
    p.div_rem(d).expect("nonzero divisor").1.is_zero()
}

fn reduce(c: &[BigInt], p: u64) -> Vec<u64> {
    let pb = BigInt::from(p);
    c.iter()
        .map(|x| x.mod_floor(&pb).to_u64().expect("reduced below p"))
        .collect()
}

fn symmetric(h: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let half = m >> 1;
    h.iter().map(|c| if c > &half { c - m } else { c.clone() }).collect()
}

/// `x ≡ h (mod m)`, `x ≡ g (mod p)`, reduced into `[0, m p)`.
fn crt(h: &[BigInt], m: &BigInt, g: &[u64], p: u64) -> Vec<BigInt> {
    let m_inv = inv_mod(reduce(std::slice::from_ref(m), p)[0], p);
    h.iter()
        .zip(g)
        .map(|(hc, &gc)| {
            let hp = reduce(std::slice::from_ref(hc), p)[0];
            let t = mul_mod(sub_mod(gc, hp, p), m_inv, p);
            hc + m * BigInt::from(t)
        })
        .collect()
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

/// Monic gcd over `GF(p)`, ascending coefficients.
fn gcd_mod(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    trim(&mut a);
    trim(&mut b);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let inv = inv_mod(*b.last().expect("nonempty"), p);
        let db = b.len() - 1;
        while a.len() > db {
            let f = mul_mod(*a.last().expect("nonempty"), inv, p);
            let base = a.len() - 1 - db;
            for (j, &c) in b.iter().enumerate() {
                a[base + j] = sub_mod(a[base + j], mul_mod(f, c, p), p);
            }
            trim(&mut a);
        }
        std::mem::swap(&mut a, &mut b);
    }
    let inv = inv_mod(*a.last().expect("gcd of nonzero inputs"), p);
    a.iter().map(|&c| mul_mod(c, inv, p)).collect()
}

/// Primes below `2^62`, descending.
struct Primes {
    next: u64,
}

impl Primes {
    fn new() -> Self {
        Primes { next: (1 << 62) - 1 }
    }
}

impl Iterator for Primes {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        loop {
            let n = self.next;
            self.next -= 2;
            if is_prime(n) {
                return Some(n);
            }
        }
    }
}

/// Miller-Rabin with a base set that is deterministic for all `u64`.
fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'bases: for &b in &BASES {
        let mut x = pow_mod(b, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c)
    }

    fn euclid(a: &UniPoly, b: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (a.monic(), b.monic());
        while !b.is_zero() {
            let r = a.div_rem(&b).unwrap().1;
            a = b;
            b = r.monic();
        }
        a
    }

    proptest::proptest! {
        #[test]
        fn agrees_with_euclid(
            f in proptest::collection::vec(-20i64..20, 1..5),
            g in proptest::collection::vec(-20i64..20, 1..5),
            h in proptest::collection::vec(-20i64..20, 1..5),
        ) {
            let (f, g, h) = (p(&f), p(&g), p(&h));
            let (a, b) = (&f * &h, &g * &h);
            proptest::prop_assert_eq!(gcd(&a, &b), euclid(&a, &b));
        }
    }

    #[test]
    fn primes() {
        assert!(is_prime(2) && is_prime(97) && is_prime((1 << 61) - 1));
        assert!(!is_prime(1) && !is_prime(91) && !is_prime(3215031751));
        let first = Primes::new().next().unwrap();
        assert!(first < 1 << 62 && is_prime(first));
    }

    #[test]
    fn matches_known_gcds() {
        // (x - 1)(x + 2) and (x - 1)(3x + 5)
        assert_eq!(gcd(&p(&[-2, 1, 1]), &p(&[-5, 2, 3])), p(&[-1, 1]));
        assert_eq!(gcd(&p(&[1, 1]), &p(&[2, 1])), UniPoly::one());
        let big = p(&[1, -2, -3]).pow(5);
        let other = &p(&[1, -2, -3]).pow(2) * &p(&[7, 0, 11]);
        assert_eq!(gcd(&big, &other), p(&[1, -2, -3]).pow(2).monic());
    }

    #[test]
    fn large_coefficients() {
        let f = UniPoly::from_bigints(&[BigInt::from(10).pow(40) + 7, BigInt::from(3), BigInt::from(10).pow(30)]);
        let a = &f * &p(&[5, 0, 0, 9]);
        let b = &f.pow(2) * &p(&[-1, 4]);
        assert_eq!(gcd(&a, &b), f.monic());
    }
}
