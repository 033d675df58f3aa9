//! The newforms `f₁` (level 15) and `f₂` (level 45) from point counts on
//! `X₀(15)`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::ToPrimitive;

use super::eta::QSeries;
use crate::arith::int::{bigint_mod_u64, is_prime_u64};
use crate::arith::{rat, Integer, Rational};
use crate::modular::ModularData;
use crate::{Error, Result};

/// `y² + a₁xy + a₃y = x³ + a₂x² + a₄x + a₆`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EllipticCurveW {
    pub a1: Integer,
    pub a2: Integer,
    pub a3: Integer,
    pub a4: Integer,
    pub a6: Integer,
}

impl EllipticCurveW {
    pub fn new(a: [i64; 5]) -> Self {
        let [a1, a2, a3, a4, a6] = a.map(Integer::from);
        EllipticCurveW { a1, a2, a3, a4, a6 }
    }

    /// The curve stored in the modular data (coefficients must be integers).
    pub fn x015(md: &ModularData) -> Result<Self> {
        let a = md.x015();
        let int = |q: &Rational| {
            q.is_integer()
                .then(|| q.to_integer())
                .ok_or_else(|| Error::InvalidData(format!("non-integral Weierstrass coefficient {q}")))
        };
        Ok(EllipticCurveW { a1: int(&a[0])?, a2: int(&a[1])?, a3: int(&a[2])?, a4: int(&a[3])?, a6: int(&a[4])? })
    }

    /// `[b₂, b₄, b₆, b₈]`.
    pub fn b_invariants(&self) -> [Integer; 4] {
        let (a1, a2, a3, a4, a6) = (&self.a1, &self.a2, &self.a3, &self.a4, &self.a6);
        let b2 = a1 * a1 + a2 * 4;
        let b4 = a1 * a3 + a4 * 2;
        let b6 = a3 * a3 + a6 * 4;
        let b8 = a1 * a1 * a6 + a2 * a6 * 4 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
        [b2, b4, b6, b8]
    }

    pub fn discriminant(&self) -> Integer {
        let [b2, b4, b6, b8] = self.b_invariants();
        -(&b2 * &b2 * &b8) - &b4 * &b4 * &b4 * 8 - &b6 * &b6 * 27 + &b2 * &b4 * &b6 * 9
    }
}

/// `a_p = p + 1 − #E(F_p)` by enumerating all affine points.
pub fn ap_by_counting(e: &EllipticCurveW, p: u64) -> Result<i64> {
    if !is_prime_u64(p) {
        return Err(Error::InvalidArgument(format!("{p} is not prime")));
    }
    if bigint_mod_u64(&e.discriminant(), p) == 0 {
        return Err(Error::InvalidArgument(format!("bad reduction at {p}")));
    }
    let r = |x: &Integer| bigint_mod_u64(x, p) as u128;
    let (a1, a2, a3, a4, a6) = (r(&e.a1), r(&e.a2), r(&e.a3), r(&e.a4), r(&e.a6));
    let pp = p as u128;
    let mut count: u64 = 1;
    for x in 0..pp {
        let rhs = (((x * x % pp) * x) + a2 * (x * x % pp) + a4 * x + a6) % pp;
        let lin = (a1 * x + a3) % pp;
        for y in 0..pp {
            if (y * y + lin * y) % pp == rhs {
                count += 1;
            }
        }
    }
    Ok(p as i64 + 1 - count as i64)
}

/// Which of the two newforms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Newform {
    F1,
    F2,
}

/// `a₁, …, a_{N−1}` of a normalized newform (`coeffs[0]` is unused and zero).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewformSeries {
    pub level: u32,
    pub coeffs: Vec<i64>,
}

impl NewformSeries {
    pub fn a(&self, n: usize) -> i64 {
        self.coeffs[n]
    }

    /// `Σ aₙ qⁿ` modulo `q^N`.
    pub fn to_series(&self) -> QSeries {
        let c: Vec<Rational> = self.coeffs.iter().map(|&x| rat(x)).collect();
        let n = c.len() as i64;
        QSeries::from_power_coeffs(c, n, &rat(0))
    }
}

/// Quadratic character of conductor 3.
pub fn chi_minus3(n: usize) -> i64 {
    match n % 3 {
        0 => 0,
        1 => 1,
        _ => -1,
    }
}

/// `f₁` from point counts on the stored `X₀(15)` equation and the Hecke
/// relations, with the bad-prime coefficients `a₃, a₅` taken from the stored
/// data; `f₂` as the twist of `f₁` by `χ₋₃`. Coefficients `a_n` for `n < prec`.
pub fn newform_series(md: &ModularData, which: Newform, prec: usize) -> Result<NewformSeries> {
    if prec < 2 {
        return Err(Error::InvalidArgument("newform precision must be at least 2".into()));
    }
    let e = EllipticCurveW::x015(md)?;
    let disc = e.discriminant();
    let small = |name: &str| {
        let q = md.c(name);
        q.is_integer()
            .then(|| q.to_integer().to_i64())
            .flatten()
            .ok_or_else(|| Error::InvalidData(format!("non-integral constant {name}")))
    };
    let bad = [(3u64, small("f1.a3")?), (5u64, small("f1.a5")?)];
    let mut a = vec![0i64; prec];
    a[1] = 1;
    // Prime powers first.
    for p in 2..prec as u64 {
        if !is_prime_u64(p) {
            continue;
        }
        let is_bad = bigint_mod_u64(&disc, p) == 0;
        let ap = if is_bad {
            bad.iter()
                .find(|(q, _)| *q == p)
                .map(|(_, v)| *v)
                .ok_or_else(|| Error::InvalidData(format!("no coefficient for bad prime {p}")))?
        } else {
            ap_by_counting(&e, p)?
        };
        let (mut prev, mut cur) = (1i64, ap);
        let mut pk = p as usize;
        while pk < prec {
            a[pk] = cur;
            let next = if is_bad { ap * cur } else { ap * cur - p as i64 * prev };
            prev = cur;
            cur = next;
            pk = match pk.checked_mul(p as usize) {
                Some(v) => v,
                None => break,
            };
        }
    }
    // Multiplicativity on coprime factorizations.
    for n in 2..prec {
        if is_prime_power(n) {
            continue;
        }
        let pp = smallest_prime_power(n);
        a[n] = a[pp] * a[n / pp];
    }
    if which == Newform::F2 {
        for (n, c) in a.iter_mut().enumerate() {
            *c *= chi_minus3(n);
        }
    }
    Ok(NewformSeries { level: if which == Newform::F1 { 15 } else { 45 }, coeffs: a })
}

fn is_prime_power(n: usize) -> bool {
    let pp = smallest_prime_power(n);
    pp == n
}

/// The full power of the smallest prime dividing `n`.
fn smallest_prime_power(n: usize) -> usize {
    let mut p = 2;
    while n % p != 0 {
        p += 1;
    }
    let mut pk = p;
    while n % (pk * p) == 0 {
        pk *= p;
    }
    pk
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn x015_counts() {
        let md = ModularData::builtin();
        let e = EllipticCurveW::x015(&md).unwrap();
        assert_eq!(e.discriminant(), Integer::from(50625));
        assert_eq!(ap_by_counting(&e, 2).unwrap(), -1);
        assert_eq!(ap_by_counting(&e, 7).unwrap(), 0);
        assert_eq!(ap_by_counting(&e, 11).unwrap(), -4);
        assert!(ap_by_counting(&e, 5).is_err());
    }

    #[test]
    fn hecke_at_two() {
        let md = ModularData::builtin();
        let f1 = newform_series(&md, Newform::F1, 20).unwrap();
        assert_eq!(f1.a(4), f1.a(2) * f1.a(2) - 2);
        assert_eq!(f1.a(6), f1.a(2) * f1.a(3));
    }
}
