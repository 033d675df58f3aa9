//! Rational points of a twisted model lying over a given `t ∈ Q`.
//!
//! The condition `t(P) = t₀` is `T(P) = 0` with
//! `T = t_num(P·Θ) − t₀·t_den(P·Θ)`, a form of degree 32 over `K`. Instead
//! of expanding `T` and eliminating over `Q`, the field `K` is embedded in
//! `Q_p` at a prime splitting completely in `K`: the common zeros of `F`
//! and `T` over `F_p` are lifted to `Z/p^k` by Newton's method (derivatives
//! from first-order jets), rational points are recovered by rational
//! reconstruction, and every candidate is confirmed by exact evaluation of
//! the moduli map.
//!
//! A rational point of the fibre is found when its reduction is a
//! transversal intersection of `F = 0` and `T = 0` modulo one of the primes
//! used and its affine coordinates have height below the reconstruction
//! bound.

use alloc::sync::Arc;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::arith::int::{is_prime_u64, rational_reconstruct, sqrt_mod_u64};
use crate::arith::{Fp, Integer, Jet, MultiPoly, Rational, Ring, Zn};
use crate::modular::{projective_chain, ModularData};
use crate::numberfield::tower::monomial_exponents;
use crate::numberfield::{KElem, RootTower, TowerElem};
use crate::twist::{PlaneQuartic, ThetaMatrix};
use crate::{Error, Result};

use super::point::{moduli_point, Classification};
use super::search::ProjPoint;

#[derive(Clone, Debug)]
pub struct FiberConfig {
    /// Number of completely split primes to lift from.
    pub primes: usize,
    /// Smallest prime tried.
    pub min_prime: u64,
    /// Largest prime tried before giving up.
    pub max_prime: u64,
    /// Decimal digits of the affine coordinates that can be recovered.
    pub height_digits: u32,
}

impl Default for FiberConfig {
    fn default() -> Self {
        FiberConfig { primes: 2, min_prime: 50, max_prime: 20_000, height_digits: 60 }
    }
}

/// A ring map `K → Z/p^k` given by p-adic roots of the tower quartic and
/// of `−3`.
#[derive(Clone, Debug)]
pub struct PadicEmbedding {
    pub p: u64,
    pub modulus: Arc<Integer>,
    ys: [Zn; 3],
    sqrt_m3: Zn,
}

fn hensel_root(poly: &[Integer], r0: u64, modulus: &Arc<Integer>, steps: u32) -> Option<Zn> {
    let eval = |x: &Zn| poly.iter().rev().fold(x.zero_like(), |acc, c| acc.mul(x).add(&x.from_int_like(c)));
    let deriv: Vec<Integer> = poly.iter().enumerate().skip(1).map(|(i, c)| c * Integer::from(i)).collect();
    let eval_d = |x: &Zn| deriv.iter().rev().fold(x.zero_like(), |acc, c| acc.mul(x).add(&x.from_int_like(c)));
    let mut x = Zn::new(&Integer::from(r0), modulus);
    for _ in 0..steps {
        x = x.sub(&eval(&x).mul(&eval_d(&x).try_inv()?));
    }
    eval(&x).is_zero_elem().then_some(x)
}

impl PadicEmbedding {
    /// An embedding at `p` if `p ≡ 1 (mod 3)` and the tower quartic splits
    /// into distinct linear factors modulo `p`.
    pub fn at_prime(tower: &RootTower, p: u64, k: u32) -> Option<Self> {
        if p % 3 != 1 || !is_prime_u64(p) {
            return None;
        }
        let g = tower.quartic();
        let poly: Vec<Integer> = g.iter().cloned().chain(core::iter::once(Integer::one())).collect();
        let roots: Vec<u64> = (0..p)
            .filter(|&r| {
                let x = Fp::new(r, p);
                poly.iter().rev().fold(x.zero_like(), |acc, c| acc.mul(&x).add(&Fp::from_int(c, p))).is_zero_elem()
            })
            .collect();
        if roots.len() != 4 {
            return None;
        }
        let modulus = Arc::new(Integer::from(p).pow(k));
        let steps = 2 + 32 - k.leading_zeros();
        let ys = [0, 1, 2].map(|i| hensel_root(&poly, roots[i], &modulus, steps));
        let s = sqrt_mod_u64(p - 3, p)?;
        let sqrt_m3 = hensel_root(&[Integer::from(3), Integer::zero(), Integer::one()], s, &modulus, steps)?;
        Some(PadicEmbedding { p, modulus, ys: [ys[0].clone()?, ys[1].clone()?, ys[2].clone()?], sqrt_m3 })
    }

    pub fn tower(&self, x: &TowerElem) -> Option<Zn> {
        let z = self.ys[0].zero_like();
        let mut acc = z.clone();
        for (idx, c) in x.numerators().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (i, j, k) = monomial_exponents(idx);
            let m = self.ys[0].pow(i as u32).mul(&self.ys[1].pow(j as u32)).mul(&self.ys[2].pow(k as u32));
            acc = acc.add(&m.mul(&z.from_int_like(c)));
        }
        Some(acc.mul(&z.from_int_like(x.denominator()).try_inv()?))
    }

    pub fn k(&self, x: &KElem) -> Option<Zn> {
        Some(self.tower(&x.a)?.add(&self.tower(&x.b)?.mul(&self.sqrt_m3)))
    }

    pub fn theta(&self, theta: &ThetaMatrix) -> Option<[[Zn; 3]; 3]> {
        let rows: Vec<Vec<Zn>> = theta
            .entries
            .iter()
            .map(|r| r.iter().map(|e| self.k(e)).collect::<Option<Vec<_>>>())
            .collect::<Option<Vec<_>>>()?;
        Some(core::array::from_fn(|i| core::array::from_fn(|j| rows[i][j].clone())))
    }
}

/// `(F, T)` at a point given in jets.
fn residuals<R: Ring>(
    f: &MultiPoly<Rational>,
    theta: &[[R; 3]; 3],
    md: &ModularData,
    t0: &R,
    p: &[R; 3],
) -> Option<(R, R)> {
    let fv = f.eval_with(p, |c| p[0].from_rational_like(c).expect("unit denominator"));
    let z = p[0].zero_like();
    let omega: [R; 3] =
        core::array::from_fn(|j| (0..3).fold(z.clone(), |acc, k| acc.add(&p[k].mul(&theta[k][j]))));
    let chain = projective_chain(md, &omega).ok()?;
    Some((fv, chain.t_num.sub(&t0.mul(&chain.t_den))))
}

/// Unknown coordinates in each chart: the fixed coordinate is set to 1.
const CHARTS: [(usize, [usize; 2]); 3] = [(0, [1, 2]), (1, [0, 2]), (2, [0, 1])];

struct Lifter<'a> {
    f: MultiPoly<Rational>,
    md: &'a ModularData,
    emb: PadicEmbedding,
    theta: [[Zn; 3]; 3],
    t0: Zn,
    steps: u32,
}

impl Lifter<'_> {
    fn point(&self, chart: usize, a: &Jet<Zn>, b: &Jet<Zn>) -> [Jet<Zn>; 3] {
        let (fixed, free) = CHARTS[chart];
        let mut pt: [Jet<Zn>; 3] = core::array::from_fn(|_| a.one_like());
        pt[fixed] = a.one_like();
        pt[free[0]] = a.clone();
        pt[free[1]] = b.clone();
        pt
    }

    /// Newton iteration from `(a, b)` mod `p` to `Z/p^k`.
    fn lift(&self, chart: usize, a0: u64, b0: u64) -> Option<[Zn; 2]> {
        let m = &self.emb.modulus;
        let mut a = Zn::new(&Integer::from(a0), m);
        let mut b = Zn::new(&Integer::from(b0), m);
        let theta: [[Jet<Zn>; 3]; 3] =
            core::array::from_fn(|i| core::array::from_fn(|j| Jet::constant(self.theta[i][j].clone())));
        let t0 = Jet::constant(self.t0.clone());
        for _ in 0..self.steps {
            let pt = self.point(chart, &Jet::variable(a.clone(), 0), &Jet::variable(b.clone(), 1));
            let (fv, tv) = residuals(&self.f, &theta, self.md, &t0, &pt)?;
            if fv.v.is_zero_elem() && tv.v.is_zero_elem() {
                return Some([a, b]);
            }
            let det = fv.d[0].mul(&tv.d[1]).sub(&fv.d[1].mul(&tv.d[0]));
            let inv = det.try_inv()?;
            let da = tv.d[1].mul(&fv.v).sub(&fv.d[1].mul(&tv.v)).mul(&inv);
            let db = fv.d[0].mul(&tv.v).sub(&tv.d[0].mul(&fv.v)).mul(&inv);
            a = a.sub(&da);
            b = b.sub(&db);
        }
        None
    }

    /// Zeros of `F` and `T` over `F_p`, chart by chart.
    fn seeds(&self) -> Vec<(usize, u64, u64)> {
        let p = self.emb.p;
        let pm = Arc::new(Integer::from(p));
        let red = |x: &Zn| Zn::new(x.value(), &pm);
        let theta: [[Zn; 3]; 3] = core::array::from_fn(|i| core::array::from_fn(|j| red(&self.theta[i][j])));
        let t0 = red(&self.t0);
        let mut out = Vec::new();
        for (chart, (fixed, free)) in CHARTS.iter().enumerate() {
            // Chart `c` covers the points whose coordinates before `fixed`
            // vanish.
            let ranges: [u64; 2] = core::array::from_fn(|i| if free[i] < *fixed { 1 } else { p });
            for a in 0..ranges[0] {
                for b in 0..ranges[1] {
                    let mut pt: [Zn; 3] = core::array::from_fn(|_| Zn::new(&Integer::zero(), &pm));
                    pt[*fixed] = pt[0].one_like();
                    pt[free[0]] = Zn::new(&Integer::from(a), &pm);
                    pt[free[1]] = Zn::new(&Integer::from(b), &pm);
                    let fv = self.f.eval_with(&pt, |c| pt[0].from_rational_like(c).expect("unit"));
                    if !fv.is_zero_elem() {
                        continue;
                    }
                    if let Some((_, tv)) = residuals(&self.f, &theta, self.md, &t0, &pt) {
                        if tv.is_zero_elem() {
                            out.push((chart, a, b));
                        }
                    }
                }
            }
        }
        out
    }
}

/// Rational points `P` of `F = 0` with `t(P) = t₀`, sorted. `t0 = None`
/// stands for `t = ∞`, the image of the cusps, and is rejected.
pub fn fiber_over_t(
    f: &PlaneQuartic,
    theta: &ThetaMatrix,
    tower: &RootTower,
    md: &ModularData,
    radicand: Option<&Integer>,
    t0: Option<&Rational>,
    cfg: &FiberConfig,
) -> Result<Vec<ProjPoint>> {
    let t0 = t0.ok_or(Error::ChainPole)?;
    let fpoly = f.to_multipoly();
    let mut found: Vec<ProjPoint> = Vec::new();
    let mut used = 0;
    let mut p = cfg.min_prime;
    while used < cfg.primes {
        if p > cfg.max_prime {
            return Err(Error::DegenerateElimination("no usable completely split prime"));
        }
        p += 1;
        // p^k ≥ 2·B² for B = 10^digits.
        let target = Integer::from(10u32).pow(2 * cfg.height_digits) * 2u32;
        let mut k = 1u32;
        while Integer::from(p).pow(k) < target {
            k += 1;
        }
        let Some(emb) = PadicEmbedding::at_prime(tower, p, k) else { continue };
        let Some(theta_p) = emb.theta(theta) else { continue };
        let t0p = match emb.ys[0].from_rational_like(t0) {
            Some(v) => v,
            None => continue,
        };
        if f.coeffs().iter().all(|c| (c % Integer::from(p)).is_zero()) {
            continue;
        }
        used += 1;
        let lifter = Lifter { f: fpoly.clone(), md, steps: 4 + 32 - k.leading_zeros(), emb, theta: theta_p, t0: t0p };
        let bound = (&*lifter.emb.modulus / 2u32).sqrt();
        for (chart, a, b) in lifter.seeds() {
            let Some([x, y]) = lifter.lift(chart, a, b) else { continue };
            let (Some(xr), Some(yr)) = (
                rational_reconstruct(x.value(), &lifter.emb.modulus, &bound),
                rational_reconstruct(y.value(), &lifter.emb.modulus, &bound),
            ) else {
                continue;
            };
            let (fixed, free) = CHARTS[chart];
            let mut coords: [Rational; 3] = core::array::from_fn(|_| Rational::zero());
            coords[fixed] = Rational::one();
            coords[free[0]] = xr;
            coords[free[1]] = yr;
            let pt = ProjPoint::from_rationals(&coords)?;
            if found.contains(&pt) || !f.eval(pt.coords()).is_zero() {
                continue;
            }
            let m = moduli_point(&pt, theta, md, radicand)?;
            if m.classification == Classification::Ordinary && m.t.as_ref() == Some(t0) {
                found.push(pt);
            }
        }
    }
    found.sort();
    Ok(found)
}
