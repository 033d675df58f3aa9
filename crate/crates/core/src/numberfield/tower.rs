//! The splitting field of a monic integer quartic `g` as the tower
//! `Q(a)(b)(c)`, with `a, b, c` three of the roots of `g`.
//!
//! `b` is a root of `g₁(X) = (g(X) − g(a))/(X − a)` and `c` a root of
//! `g₂(X) = (g₁(X) − g₁(b))/(X − b)`; the fourth root is `−g₃ − a − b − c`.
//! When `g` has Galois group `S₄` the tower is a field of degree 24 with
//! Q-basis `aⁱ bʲ cᵏ` (`i < 4`, `j < 3`, `k < 2`), stored at index
//! `(3i + j)·2 + k`. Every structure constant in that basis is an integer,
//! so elements are kept as an integer vector over a common denominator.

use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use super::FiniteAlgebra;
use crate::arith::matrix::solve_integer_system;
use crate::arith::{Integer, QCoords, Rational, Ring};

/// Degree of the tower over Q.
pub const TOWER_DIM: usize = 24;

const RAW_I: usize = 7;
const RAW_J: usize = 5;
const RAW_K: usize = 3;

type Exp = (u32, u32, u32);

/// Index of the basis monomial `aⁱ bʲ cᵏ`.
pub fn monomial_index(i: usize, j: usize, k: usize) -> usize {
    (i * 3 + j) * 2 + k
}

/// Exponents of the basis monomial at `idx`.
pub fn monomial_exponents(idx: usize) -> (usize, usize, usize) {
    (idx / 6, (idx / 2) % 3, idx % 2)
}

fn raw_index(i: usize, j: usize, k: usize) -> usize {
    (i * RAW_J + j) * RAW_K + k
}

/// Multiplication data for the tower of a fixed monic quartic.
pub struct RootTower {
    g: [Integer; 4],
    // Reduced coordinates of every product monomial a^i b^j c^k with
    // i < 7, j < 5, k < 3.
    table: Vec<Vec<Integer>>,
    traces: Vec<Integer>,
}

impl fmt::Debug for RootTower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RootTower").field("g", &self.g).finish()
    }
}

fn add_term(map: &mut BTreeMap<Exp, Integer>, e: Exp, c: Integer) {
    if Zero::is_zero(&c) {
        return;
    }
    let entry = map.entry(e).or_insert_with(Integer::zero);
    *entry += c;
    if Zero::is_zero(entry) {
        map.remove(&e);
    }
}

impl RootTower {
    /// Tower for `g = X⁴ + g[3]X³ + g[2]X² + g[1]X + g[0]`.
    pub fn new(g: [Integer; 4]) -> Arc<Self> {
        let [c0, c1, c2, c3] = g.clone();
        let one = Integer::one();
        let rule_c: Vec<(Exp, Integer)> = vec![
            ((0, 1, 1), -&one),
            ((1, 0, 1), -&one),
            ((0, 0, 1), -&c3),
            ((0, 2, 0), -&one),
            ((1, 1, 0), -&one),
            ((0, 1, 0), -&c3),
            ((2, 0, 0), -&one),
            ((1, 0, 0), -&c3),
            ((0, 0, 0), -&c2),
        ];
        let rule_b: Vec<(Exp, Integer)> = vec![
            ((1, 2, 0), -&one),
            ((0, 2, 0), -&c3),
            ((2, 1, 0), -&one),
            ((1, 1, 0), -&c3),
            ((0, 1, 0), -&c2),
            ((3, 0, 0), -&one),
            ((2, 0, 0), -&c3),
            ((1, 0, 0), -&c2),
            ((0, 0, 0), -&c1),
        ];
        let rule_a: Vec<(Exp, Integer)> =
            vec![((3, 0, 0), -&c3), ((2, 0, 0), -&c2), ((1, 0, 0), -&c1), ((0, 0, 0), -&c0)];

        let reduce = |start: Exp| -> Vec<Integer> {
            let mut map = BTreeMap::new();
            map.insert(start, Integer::one());
            loop {
                let pick = map
                    .keys()
                    .find(|e: &&Exp| e.2 >= 2)
                    .map(|e| (*e, 2usize))
                    .or_else(|| map.keys().find(|e| e.1 >= 3).map(|e| (*e, 1)))
                    .or_else(|| map.keys().find(|e| e.0 >= 4).map(|e| (*e, 0)));
                let Some((e, var)) = pick else { break };
                let coeff = map.remove(&e).expect("picked key");
                let (rule, base) = match var {
                    2 => (&rule_c, (e.0, e.1, e.2 - 2)),
                    1 => (&rule_b, (e.0, e.1 - 3, e.2)),
                    _ => (&rule_a, (e.0 - 4, e.1, e.2)),
                };
                for (d, c) in rule {
                    add_term(&mut map, (base.0 + d.0, base.1 + d.1, base.2 + d.2), &coeff * c);
                }
            }
            let mut out = vec![Integer::zero(); TOWER_DIM];
            for ((i, j, k), c) in map {
                out[monomial_index(i as usize, j as usize, k as usize)] = c;
            }
            out
        };

        let mut table = Vec::with_capacity(RAW_I * RAW_J * RAW_K);
        for i in 0..RAW_I {
            for j in 0..RAW_J {
                for k in 0..RAW_K {
                    table.push(reduce((i as u32, j as u32, k as u32)));
                }
            }
        }
        let mut tower = RootTower { g, table, traces: Vec::new() };
        tower.traces = (0..TOWER_DIM)
            .map(|m| {
                let e = tower.basis_int(m);
                (0..TOWER_DIM)
                    .map(|n| tower.mul_int(&e, &tower.basis_int(n))[n].clone())
                    .fold(Integer::zero(), |acc, x| acc + x)
            })
            .collect();
        Arc::new(tower)
    }

    /// Coefficients `g₀, g₁, g₂, g₃` of the defining monic quartic.
    pub fn quartic(&self) -> &[Integer; 4] {
        &self.g
    }

    fn basis_int(&self, m: usize) -> Vec<Integer> {
        let mut v = vec![Integer::zero(); TOWER_DIM];
        v[m] = Integer::one();
        v
    }

    /// Product of two integer coordinate vectors.
    pub fn mul_int(&self, x: &[Integer], y: &[Integer]) -> Vec<Integer> {
        let mut raw = vec![Integer::zero(); RAW_I * RAW_J * RAW_K];
        for (m, xm) in x.iter().enumerate() {
            if Zero::is_zero(xm) {
                continue;
            }
            let (i1, j1, k1) = monomial_exponents(m);
            for (n, yn) in y.iter().enumerate() {
                if Zero::is_zero(yn) {
                    continue;
                }
                let (i2, j2, k2) = monomial_exponents(n);
                raw[raw_index(i1 + i2, j1 + j2, k1 + k2)] += xm * yn;
            }
        }
        self.reduce_raw(raw)
    }

    fn reduce_raw(&self, raw: Vec<Integer>) -> Vec<Integer> {
        let mut out = vec![Integer::zero(); TOWER_DIM];
        for (idx, c) in raw.into_iter().enumerate() {
            if Zero::is_zero(&c) {
                continue;
            }
            let (i, j, k) = (idx / (RAW_J * RAW_K), (idx / RAW_K) % RAW_J, idx % RAW_K);
            if i < 4 && j < 3 && k < 2 {
                out[monomial_index(i, j, k)] += c;
            } else {
                for (o, t) in out.iter_mut().zip(&self.table[idx]) {
                    if !Zero::is_zero(t) {
                        *o += &c * t;
                    }
                }
            }
        }
        out
    }

    /// Traces `Tr(aⁱbʲcᵏ)` of the basis monomials.
    pub fn trace_vector(&self) -> &[Integer] {
        &self.traces
    }
}

impl FiniteAlgebra for Arc<RootTower> {
    fn dim(&self) -> usize {
        TOWER_DIM
    }

    fn mul_coords(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        TowerElem::from_coords(x, self).mul(&TowerElem::from_coords(y, self)).coords()
    }

    fn one_coords(&self) -> Vec<Rational> {
        TowerElem::one(self).coords()
    }

    fn trace_vector(&self) -> Vec<Rational> {
        self.traces.iter().map(|t| Rational::from_integer(t.clone())).collect()
    }
}

/// An element of the tower: `num / den` coordinate-wise, in lowest terms.
#[derive(Clone)]
pub struct TowerElem {
    num: Vec<Integer>,
    den: Integer,
    tower: Arc<RootTower>,
}

impl PartialEq for TowerElem {
    fn eq(&self, other: &Self) -> bool {
        self.den == other.den && self.num == other.num
    }
}

impl fmt::Debug for TowerElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TowerElem").field("num", &self.num).field("den", &self.den).finish()
    }
}

impl TowerElem {
    pub fn from_parts(mut num: Vec<Integer>, mut den: Integer, tower: &Arc<RootTower>) -> Self {
        assert_eq!(num.len(), TOWER_DIM);
        assert!(!Zero::is_zero(&den), "zero denominator");
        if den.is_negative() {
            den = -den;
            for x in num.iter_mut() {
                *x = -&*x;
            }
        }
        let g = num.iter().fold(den.clone(), |acc, x| acc.gcd(x));
        if !One::is_one(&g) {
            for x in num.iter_mut() {
                *x = &*x / &g;
            }
            den = den / &g;
        }
        TowerElem { num, den, tower: tower.clone() }
    }

    pub fn from_coords(coords: &[Rational], tower: &Arc<RootTower>) -> Self {
        let den = coords.iter().fold(Integer::one(), |acc, q| acc.lcm(q.denom()));
        let num = coords.iter().map(|q| q.numer() * (&den / q.denom())).collect();
        Self::from_parts(num, den, tower)
    }

    pub fn from_rational(q: &Rational, tower: &Arc<RootTower>) -> Self {
        let mut num = vec![Integer::zero(); TOWER_DIM];
        num[0] = q.numer().clone();
        Self::from_parts(num, q.denom().clone(), tower)
    }

    pub fn zero(tower: &Arc<RootTower>) -> Self {
        Self::from_rational(&Rational::zero(), tower)
    }

    pub fn one(tower: &Arc<RootTower>) -> Self {
        Self::from_rational(&Rational::one(), tower)
    }

    /// The basis monomial `aⁱ bʲ cᵏ`.
    pub fn monomial(i: usize, j: usize, k: usize, tower: &Arc<RootTower>) -> Self {
        let mut num = vec![Integer::zero(); TOWER_DIM];
        num[monomial_index(i, j, k)] = Integer::one();
        TowerElem { num, den: Integer::one(), tower: tower.clone() }
    }

    /// The roots `a, b, c, −g₃ − a − b − c` of the defining quartic.
    pub fn tower_roots(tower: &Arc<RootTower>) -> [Self; 4] {
        let a = Self::monomial(1, 0, 0, tower);
        let b = Self::monomial(0, 1, 0, tower);
        let c = Self::monomial(0, 0, 1, tower);
        let g3 = Self::from_rational(&Rational::from_integer(tower.g[3].clone()), tower);
        let d = g3.add(&a).add(&b).add(&c).neg();
        [a, b, c, d]
    }

    pub fn tower(&self) -> &Arc<RootTower> {
        &self.tower
    }

    pub fn numerators(&self) -> &[Integer] {
        &self.num
    }

    pub fn denominator(&self) -> &Integer {
        &self.den
    }

    pub fn coords(&self) -> Vec<Rational> {
        self.num.iter().map(|x| Rational::new(x.clone(), self.den.clone())).collect()
    }

    /// Rational value if the element lies in Q.
    pub fn to_rational(&self) -> Option<Rational> {
        self.num[1..]
            .iter()
            .all(Zero::is_zero)
            .then(|| Rational::new(self.num[0].clone(), self.den.clone()))
    }

    pub fn trace(&self) -> Rational {
        let t = self
            .num
            .iter()
            .zip(&self.tower.traces)
            .fold(Integer::zero(), |acc, (x, t)| acc + x * t);
        Rational::new(t, self.den.clone())
    }

    /// Integer matrix (rows) of multiplication by `num`, i.e. by `den·self`.
    pub fn mult_matrix_int(&self) -> Vec<Vec<Integer>> {
        let cols: Vec<Vec<Integer>> = (0..TOWER_DIM)
            .map(|n| self.tower.mul_int(&self.num, &self.tower.basis_int(n)))
            .collect();
        (0..TOWER_DIM).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect()
    }

    /// Image under the Q-linear map with integer matrix `t` (rows).
    pub fn apply_int_matrix(&self, t: &[Vec<Integer>]) -> Self {
        let num = t
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&self.num)
                    .filter(|(a, b)| !Zero::is_zero(*a) && !Zero::is_zero(*b))
                    .fold(Integer::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect();
        Self::from_parts(num, self.den.clone(), &self.tower)
    }
}

impl Ring for TowerElem {
    fn zero_like(&self) -> Self {
        Self::zero(&self.tower)
    }
    fn one_like(&self) -> Self {
        Self::one(&self.tower)
    }
    fn is_zero_elem(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }
    fn add(&self, rhs: &Self) -> Self {
        if self.den == rhs.den {
            let num = self.num.iter().zip(&rhs.num).map(|(a, b)| a + b).collect();
            return Self::from_parts(num, self.den.clone(), &self.tower);
        }
        let num = self
            .num
            .iter()
            .zip(&rhs.num)
            .map(|(a, b)| a * &rhs.den + b * &self.den)
            .collect();
        Self::from_parts(num, &self.den * &rhs.den, &self.tower)
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }
    fn mul(&self, rhs: &Self) -> Self {
        let num = self.tower.mul_int(&self.num, &rhs.num);
        Self::from_parts(num, &self.den * &rhs.den, &self.tower)
    }
    fn neg(&self) -> Self {
        TowerElem { num: self.num.iter().map(|x| -x).collect(), den: self.den.clone(), tower: self.tower.clone() }
    }
    fn from_int_like(&self, n: &Integer) -> Self {
        Self::from_rational(&Rational::from_integer(n.clone()), &self.tower)
    }
    fn from_rational_like(&self, q: &Rational) -> Option<Self> {
        Some(Self::from_rational(q, &self.tower))
    }
    fn try_inv(&self) -> Option<Self> {
        if self.is_zero_elem() {
            return None;
        }
        let mut e0 = vec![Integer::zero(); TOWER_DIM];
        e0[0] = Integer::one();
        let z = solve_integer_system(&self.mult_matrix_int(), &e0)?;
        let scaled: Vec<Rational> = z.iter().map(|q| q * Rational::from_integer(self.den.clone())).collect();
        Some(Self::from_coords(&scaled, &self.tower))
    }
}

impl QCoords for TowerElem {
    fn q_coords(&self) -> Vec<Rational> {
        self.coords()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tower() -> Arc<RootTower> {
        // x^4 - 3x^2 + 2x + 3
        RootTower::new([3.into(), 2.into(), (-3).into(), 0.into()])
    }

    #[test]
    fn roots_satisfy_quartic_and_vieta() {
        let t = tower();
        let roots = TowerElem::tower_roots(&t);
        let g = |x: &TowerElem| {
            let x2 = x.square();
            x2.square().sub(&x2.scale_i64(3)).add(&x.scale_i64(2)).add(&x.from_i64_like(3))
        };
        for r in &roots {
            assert!(g(r).is_zero_elem());
        }
        let e2 = roots[0].mul(&roots[1]).add(&roots[0].mul(&roots[2])).add(&roots[0].mul(&roots[3]))
            .add(&roots[1].mul(&roots[2])).add(&roots[1].mul(&roots[3])).add(&roots[2].mul(&roots[3]));
        assert_eq!(e2, roots[0].from_i64_like(-3));
        let e4 = roots[0].mul(&roots[1]).mul(&roots[2]).mul(&roots[3]);
        assert_eq!(e4, roots[0].from_i64_like(3));
    }

    #[test]
    fn inverse_and_associativity() {
        let t = tower();
        let [a, b, c, _] = TowerElem::tower_roots(&t);
        let x = a.add(&b.scale_i64(2)).add(&c.mul(&a)).add(&a.from_i64_like(5));
        let y = b.mul(&c).sub(&a.square());
        assert_eq!(x.mul(&y).mul(&c), x.mul(&y.mul(&c)));
        let xi = x.try_inv().unwrap();
        assert!(x.mul(&xi).is_one_elem());
        assert_eq!(a.trace(), Rational::zero());
    }
}
