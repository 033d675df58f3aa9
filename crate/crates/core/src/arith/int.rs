//! Integer helpers: primes, square roots, squarefree parts, modular inverses
//! and rational reconstruction.

use alloc::vec::Vec;

use num_bigint::{BigInt, Sign};
use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::ring::{Integer, Rational};
use crate::{Error, Result};

/// Trial-division bound used by [`squarefree_part`]; inputs whose cube root
/// exceeds it are rejected with `LimitExceeded`.
pub const TRIAL_DIVISION_LIMIT: u64 = 20_000_000;

pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    // Deterministic Miller-Rabin for 64-bit inputs.
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod_u64(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub fn mul_mod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod_u64(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod_u64(acc, b, m);
        }
        b = mul_mod_u64(b, b, m);
        e >>= 1;
    }
    acc
}

pub fn inv_mod_u64(a: u64, m: u64) -> Option<u64> {
    let (g, x, _) = ext_gcd_i128(a as i128 % m as i128, m as i128);
    (g == 1).then(|| x.rem_euclid(m as i128) as u64)
}

fn ext_gcd_i128(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd_i128(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

/// Primes `p` with `start <= p`, in increasing order.
pub fn primes_from(start: u64) -> impl Iterator<Item = u64> {
    (start.max(2)..).filter(|&n| is_prime_u64(n))
}

pub fn primes_up_to(bound: u64) -> Vec<u64> {
    (2..=bound).filter(|&n| is_prime_u64(n)).collect()
}

/// Square root of a perfect square, `None` otherwise (negative input included).
pub fn exact_sqrt(n: &Integer) -> Option<Integer> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// Square root of a rational square.
pub fn rational_sqrt(q: &Rational) -> Option<Rational> {
    let n = exact_sqrt(q.numer())?;
    let d = exact_sqrt(q.denom())?;
    Some(Rational::new(n, d))
}

/// Squarefree part of a nonzero integer, sign included: the unique squarefree
/// `d` with `n = d · m²`.
///
/// Trial division runs up to `B = min(∛n, TRIAL_DIVISION_LIMIT)`. A cofactor
/// free of primes up to `B` and smaller than `B³` is `1`, a prime, a product
/// of two distinct primes, or a prime square, so the answer is exact; larger
/// cofactors raise `LimitExceeded` unless they are perfect squares.
pub fn squarefree_part(n: &Integer) -> Result<Integer> {
    if n.is_zero() {
        return Err(Error::InvalidArgument("squarefree part of zero".into()));
    }
    let mut m = n.abs();
    let bound = (m.cbrt() + 1u32).to_u64().unwrap_or(u64::MAX).min(TRIAL_DIVISION_LIMIT);
    let mut out = Integer::one();
    let mut p = 2u64;
    while p <= bound {
        let bp = Integer::from(p);
        if (&m % &bp).is_zero() {
            let mut e = 0u32;
            while (&m % &bp).is_zero() {
                m /= &bp;
                e += 1;
            }
            if e % 2 == 1 {
                out *= &bp;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if !m.is_one() && exact_sqrt(&m).is_none() {
        if m > Integer::from(bound).pow(3) {
            return Err(Error::LimitExceeded("cofactor too large to factor by trial division".into()));
        }
        out *= m;
    }
    if n.sign() == Sign::Minus {
        out = -out;
    }
    Ok(out)
}

/// Squarefree part of a nonzero rational (equal to that of `num · den`).
pub fn squarefree_part_rational(q: &Rational) -> Result<Integer> {
    squarefree_part(&(q.numer() * q.denom()))
}

/// Trial-division factorisation of a small positive integer.
pub fn factor_small(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn mod_inverse(a: &Integer, m: &Integer) -> Option<Integer> {
    let e = a.mod_floor(m).extended_gcd(m);
    e.gcd.is_one().then(|| e.x.mod_floor(m))
}

/// Smallest-denominator rational `n/d` with `n ≡ a·d (mod m)`, `|n| ≤ bound`
/// and `0 < d ≤ bound` (Wang's algorithm). `None` if none exists.
pub fn rational_reconstruct(a: &Integer, m: &Integer, bound: &Integer) -> Option<Rational> {
    let (mut r0, mut r1) = (m.clone(), a.mod_floor(m));
    let (mut t0, mut t1) = (Integer::zero(), Integer::one());
    while &r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = core::mem::replace(&mut r1, r2);
        t0 = core::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || t1.abs() > *bound || !r1.gcd(&t1).is_one() {
        return None;
    }
    Some(Rational::new(r1, t1))
}

/// Modular square root for an odd prime `p` (brute force for small primes,
/// Tonelli-Shanks otherwise).
pub fn sqrt_mod_u64(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    if a == 0 {
        return Some(0);
    }
    if p == 2 {
        return Some(a);
    }
    if pow_mod_u64(a, (p - 1) / 2, p) != 1 {
        return None;
    }
    let (mut q, mut s) = (p - 1, 0u32);
    while q % 2 == 0 {
        q /= 2;
        s += 1;
    }
    let mut z = 2;
    while pow_mod_u64(z, (p - 1) / 2, p) != p - 1 {
        z += 1;
    }
    let mut m = s;
    let mut c = pow_mod_u64(z, q, p);
    let mut t = pow_mod_u64(a, q, p);
    let mut r = pow_mod_u64(a, (q + 1) / 2, p);
    while t != 1 {
        let mut i = 0;
        let mut tt = t;
        while tt != 1 {
            tt = mul_mod_u64(tt, tt, p);
            i += 1;
        }
        let b = pow_mod_u64(c, 1u64 << (m - i - 1), p);
        m = i;
        c = mul_mod_u64(b, b, p);
        t = mul_mod_u64(t, c, p);
        r = mul_mod_u64(r, b, p);
    }
    Some(r)
}

pub fn bigint_mod_u64(n: &BigInt, p: u64) -> u64 {
    n.mod_floor(&BigInt::from(p)).to_u64().expect("residue fits u64")
}

/// Image of a rational in `Z/p`, `None` if `p` divides the denominator.
pub fn rational_mod_u64(q: &Rational, p: u64) -> Option<u64> {
    let d = bigint_mod_u64(q.denom(), p);
    let inv = inv_mod_u64(d, p)?;
    Some(mul_mod_u64(bigint_mod_u64(q.numer(), p), inv, p))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn squarefree_parts() {
        assert_eq!(squarefree_part(&BigInt::from(-4752)).unwrap(), BigInt::from(-33));
        assert_eq!(squarefree_part(&BigInt::from(99)).unwrap(), BigInt::from(11));
        assert_eq!(squarefree_part(&BigInt::from(1)).unwrap(), BigInt::from(1));
        assert_eq!(squarefree_part(&BigInt::from(-3 * 49 * 101 * 101)).unwrap(), BigInt::from(-3));
        // Two large primes above the trial bound of a small cofactor.
        let n = BigInt::from(1_000_003u64) * BigInt::from(1_000_033u64);
        assert_eq!(squarefree_part(&n).unwrap(), n);
        let sq = BigInt::from(1_000_003u64) * BigInt::from(1_000_003u64) * 7;
        assert_eq!(squarefree_part(&sq).unwrap(), BigInt::from(7));
        // Above the trial limit, but the cofactor after small primes is tiny.
        let big = BigInt::from(2u32).pow(101) * 3 * BigInt::from(5u32).pow(40);
        assert_eq!(squarefree_part(&big).unwrap(), BigInt::from(6));
        let p = BigInt::from(1_000_000_007u64);
        let huge = &p * &p * &p * BigInt::from(1_000_000_009u64);
        assert!(matches!(squarefree_part(&huge), Err(Error::LimitExceeded(_))));
    }

    #[test]
    fn primality() {
        let ps: Vec<u64> = primes_up_to(30);
        assert_eq!(ps, [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert!(is_prime_u64(1_000_000_007));
        assert!(!is_prime_u64(1_000_000_007 * 3));
    }

    #[test]
    fn reconstruction() {
        let m = BigInt::from(1_000_003u64) * BigInt::from(1_000_033u64);
        let q = Rational::new(BigInt::from(-37), BigInt::from(91));
        let a = (q.numer() * mod_inverse(q.denom(), &m).unwrap()).mod_floor(&m);
        let bound = BigInt::from(1000);
        assert_eq!(rational_reconstruct(&a, &m, &bound), Some(q));
    }

    #[test]
    fn modular_square_roots() {
        for p in [7u64, 13, 97, 1009, 7681] {
            let r = sqrt_mod_u64(p - 3, p).unwrap();
            assert_eq!(mul_mod_u64(r, r, p), p - 3);
        }
        assert!(sqrt_mod_u64(2, 5).is_none());
    }
}
