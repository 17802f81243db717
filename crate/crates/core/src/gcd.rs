//! Polynomial gcd over the rationals.
//!
//! Coprime inputs (the common case for reduced rational functions) are
//! recognised with a gcd modulo a large prime: if the images stay coprime
//! modulo a prime that does not divide either leading coefficient, the
//! rational gcd is 1. Everything else goes through the primitive remainder
//! sequence over the integers, which keeps coefficient growth in check.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::poly::Polynomial;

const PRIMES: [u64; 2] = [2_305_843_009_213_693_951, 4_294_967_291];

pub(crate) fn gcd_nonzero(a: &Polynomial, b: &Polynomial) -> Polynomial {
    if a.is_constant() || b.is_constant() {
        return Polynomial::one();
    }
    let a = primitive_part(&a.integer_parts().0);
    let b = primitive_part(&b.integer_parts().0);
    if PRIMES.iter().any(|&p| coprime_mod(&a, &b, p)) {
        return Polynomial::one();
    }
    Polynomial::from_integers(primitive_prs(a, b)).monic()
}

fn content(coeffs: &[BigInt]) -> BigInt {
    coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
}

pub(crate) fn primitive_part(coeffs: &[BigInt]) -> Vec<BigInt> {
    let mut c = content(coeffs);
    if c.is_zero() {
        return Vec::new();
    }
    if coeffs.last().is_some_and(Signed::is_negative) {
        c = -c;
    }
    if c.is_one() {
        return coeffs.to_vec();
    }
    coeffs.iter().map(|x| x / &c).collect()
}

fn trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

/// Pseudo-remainder of `a` by `b` (both nonzero, `deg a >= deg b`).
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    while r.len() > db {
        let k = r.len() - 1;
        let lr = r[k].clone();
        let shift = k - db;
        for x in r.iter_mut() {
            *x *= lb;
        }
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                r[shift + j] -= &lr * bj;
            }
        }
        r.pop();
        trim(&mut r);
    }
    r
}

fn primitive_prs(mut a: Vec<BigInt>, mut b: Vec<BigInt>) -> Vec<BigInt> {
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        if b.len() == 1 {
            return vec![BigInt::one()];
        }
        let r = pseudo_rem(&a, &b);
        a = b;
        b = primitive_part(&r);
    }
    a
}

fn reduce_mod(coeffs: &[BigInt], p: u64) -> Vec<u64> {
    let modulus = BigInt::from(p);
    coeffs
        .iter()
        .map(|c| c.mod_floor(&modulus).to_u64().expect("residue fits in u64"))
        .collect()
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Degree of the gcd modulo `p`, or `None` when `p` divides a leading coefficient.
fn gcd_degree_mod(a: &[BigInt], b: &[BigInt], p: u64) -> Option<usize> {
    let mut x = reduce_mod(a, p);
    let mut y = reduce_mod(b, p);
    if *x.last()? == 0 || *y.last()? == 0 {
        return None;
    }
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    loop {
        while y.last() == Some(&0) {
            y.pop();
        }
        if y.is_empty() {
            return Some(x.len() - 1);
        }
        let dy = y.len() - 1;
        let inv = inv_mod(y[dy], p);
        while x.len() > dy {
            let k = x.len() - 1;
            let q = mul_mod(x[k], inv, p);
            if q != 0 {
                let shift = k - dy;
                for (j, &yj) in y.iter().enumerate() {
                    let t = mul_mod(q, yj, p);
                    x[shift + j] = (x[shift + j] + p - t) % p;
                }
            }
            x.pop();
        }
        std::mem::swap(&mut x, &mut y);
    }
}

fn coprime_mod(a: &[BigInt], b: &[BigInt], p: u64) -> bool {
    gcd_degree_mod(a, b, p) == Some(0)
}
