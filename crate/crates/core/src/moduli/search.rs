//! Rational points of bounded height on a plane quartic.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::RangeInclusive;

use num_integer::Integer as _;
use num_traits::{Signed, Zero};

use crate::arith::int::bigint_mod_u64;
use crate::arith::mpoly::quartic_monomials;
use crate::arith::{Integer, Rational};
use crate::twist::PlaneQuartic;
use crate::{Error, Result};

/// A point `[a : b : c]` with coprime integer coordinates, first nonzero
/// coordinate positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjPoint {
    coords: [Integer; 3],
}

impl ProjPoint {
    pub fn new(coords: [Integer; 3]) -> Result<Self> {
        let g = coords.iter().fold(Integer::zero(), |acc, c| acc.gcd(c));
        if g.is_zero() {
            return Err(Error::InvalidArgument("the zero vector is not a projective point".into()));
        }
        let mut c = coords.map(|x| x / &g);
        if c.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
            c = c.map(|x| -x);
        }
        Ok(ProjPoint { coords: c })
    }

    pub fn from_i64(c: [i64; 3]) -> Result<Self> {
        Self::new(c.map(Integer::from))
    }

    /// The point with the given rational coordinates, scaled to integers.
    pub fn from_rationals(c: &[Rational; 3]) -> Result<Self> {
        let d = crate::arith::ring::denominator_lcm(c.iter());
        Self::new(core::array::from_fn(|i| (&c[i] * Rational::from_integer(d.clone())).to_integer()))
    }

    pub fn coords(&self) -> &[Integer; 3] {
        &self.coords
    }

    pub fn as_rationals(&self) -> [Rational; 3] {
        core::array::from_fn(|i| Rational::from_integer(self.coords[i].clone()))
    }

    /// `max |coordinate|`.
    pub fn height(&self) -> Integer {
        self.coords.iter().map(|c| c.abs()).max().expect("three coordinates")
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} : {} : {}]", self.coords[0], self.coords[1], self.coords[2])
    }
}

/// Primes whose zero tables make up the presieve.
const SIEVE_PRIMES: [u64; 4] = [5, 7, 11, 13];

/// `table[(x·q + y)·q + z]` is true iff `F(x, y, z) ≡ 0 (mod q)`.
struct ZeroTable {
    q: usize,
    table: Vec<bool>,
}

impl ZeroTable {
    fn new(f: &PlaneQuartic, q: u64) -> Self {
        let coeffs: Vec<u64> = f.coeffs().iter().map(|c| bigint_mod_u64(c, q)).collect();
        let mons = quartic_monomials();
        let qs = q as usize;
        let mut table = vec![false; qs * qs * qs];
        let pw = |x: u64, e: u32| (0..e).fold(1u64, |acc, _| acc * x % q);
        for x in 0..q {
            for y in 0..q {
                for z in 0..q {
                    let v = mons.iter().zip(&coeffs).fold(0u64, |acc, (e, c)| {
                        (acc + c * pw(x, e[0]) % q * pw(y, e[1]) % q * pw(z, e[2])) % q
                    });
                    table[((x as usize) * qs + y as usize) * qs + z as usize] = v == 0;
                }
            }
        }
        ZeroTable { q: qs, table }
    }

    fn admits(&self, a: i64, b: i64, c: i64) -> bool {
        let q = self.q as i64;
        let r = |v: i64| v.rem_euclid(q) as usize;
        self.table[(r(a) * self.q + r(b)) * self.q + r(c)]
    }
}

/// Presieve tables for a quartic, reusable across ranges of `a`.
pub struct Sieve {
    tables: Vec<ZeroTable>,
}

impl Sieve {
    pub fn new(f: &PlaneQuartic) -> Self {
        Sieve { tables: SIEVE_PRIMES.iter().map(|&q| ZeroTable::new(f, q)).collect() }
    }

    fn admits(&self, a: i64, b: i64, c: i64) -> bool {
        self.tables.iter().all(|t| t.admits(a, b, c))
    }
}

fn gcd3(a: i64, b: i64, c: i64) -> i64 {
    a.gcd(&b).gcd(&c)
}

/// Points `[a : b : c]` of `F = 0` with `a` in the given range and
/// `|b|, |c| ≤ h`, in increasing `(a, b, c)` order.
pub fn search_points_range(f: &PlaneQuartic, sieve: &Sieve, h: i64, a_range: RangeInclusive<i64>) -> Vec<ProjPoint> {
    let mut out = Vec::new();
    for a in a_range {
        let b_lo = if a == 0 { 0 } else { -h };
        for b in b_lo..=h {
            let c_lo = if a == 0 && b == 0 { 1 } else { -h };
            for c in c_lo..=h {
                if gcd3(a, b, c) != 1 || !sieve.admits(a, b, c) {
                    continue;
                }
                if f.eval_i64([a, b, c]).is_zero() {
                    out.push(ProjPoint::from_i64([a, b, c]).expect("nonzero"));
                }
            }
        }
    }
    out
}

/// All points of `F = 0` with coordinates bounded by `h` in absolute value.
pub fn search_points(f: &PlaneQuartic, h: u64) -> Result<Vec<ProjPoint>> {
    if h == 0 {
        return Err(Error::InvalidArgument("height bound must be at least 1".into()));
    }
    let h = i64::try_from(h).map_err(|_| Error::LimitExceeded(format!("height bound {h}")))?;
    let sieve = Sieve::new(f);
    Ok(search_points_range(f, &sieve, h, 0..=h))
}
