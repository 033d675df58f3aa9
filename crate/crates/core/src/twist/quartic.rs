//! Primitive integer plane quartics, the substitution `P((X, Y, Z)·Θ)` and a
//! smoothness certificate by resultants modulo primes.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use super::engine::ThetaMatrix;
use crate::arith::int::primes_from;
use crate::arith::matrix::primitive_vector;
use crate::arith::mpoly::{quartic_monomials, Exps};
use crate::arith::{rational_ratio, Fp, Integer, Matrix, MultiPoly, Rational, Ring, UniPoly};
use crate::modular::ModularData;
use crate::numberfield::KElem;
use crate::{Error, Result};

/// `Σ cᵢ mᵢ` over the 15 quartic monomials in graded lexicographic order
/// with `X > Y > Z`. Always primitive with its first nonzero coefficient
/// positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PlaneQuartic {
    coeffs: [Integer; 15],
}

impl PlaneQuartic {
    /// Normalizes a nonzero coefficient vector (content and sign).
    pub fn new(coeffs: [Integer; 15]) -> Result<Self> {
        let q: Vec<Rational> = coeffs.iter().map(|c| Rational::from_integer(c.clone())).collect();
        Self::from_rationals(&q)
    }

    pub fn from_i64(coeffs: [i64; 15]) -> Result<Self> {
        Self::new(coeffs.map(Integer::from))
    }

    /// The primitive integer quartic proportional to `q`.
    pub fn from_rationals(q: &[Rational]) -> Result<Self> {
        if q.len() != 15 {
            return Err(Error::InvalidArgument(format!("expected 15 coefficients, got {}", q.len())));
        }
        if q.iter().all(Zero::is_zero) {
            return Err(Error::ZeroPolynomial);
        }
        let mut ints = primitive_vector(q);
        if ints.iter().find(|c| !c.is_zero()).is_some_and(|c| c.is_negative()) {
            ints.iter_mut().for_each(|c| *c = -&*c);
        }
        Ok(PlaneQuartic { coeffs: core::array::from_fn(|i| ints[i].clone()) })
    }

    pub fn from_multipoly(p: &MultiPoly<Rational>) -> Result<Self> {
        if p.terms().any(|(e, _)| e.iter().sum::<u32>() != 4) {
            return Err(Error::InvalidArgument("not a homogeneous quartic".into()));
        }
        let q: Vec<Rational> = quartic_monomials().iter().map(|e| p.coeff(e)).collect();
        Self::from_rationals(&q)
    }

    pub fn coeffs(&self) -> &[Integer; 15] {
        &self.coeffs
    }

    pub fn coeff(&self, e: &Exps) -> Integer {
        quartic_monomials()
            .iter()
            .position(|m| m == e)
            .map_or_else(Integer::zero, |i| self.coeffs[i].clone())
    }

    pub fn to_multipoly(&self) -> MultiPoly<Rational> {
        MultiPoly::from_terms(
            quartic_monomials().into_iter().zip(&self.coeffs).map(|(e, c)| (e, Rational::from_integer(c.clone()))),
            &Rational::zero(),
        )
    }

    pub fn eval(&self, p: &[Integer; 3]) -> Integer {
        let pw = |x: &Integer| {
            let mut v = vec![Integer::one()];
            for i in 1..=4 {
                let next = &v[i - 1] * x;
                v.push(next);
            }
            v
        };
        let (px, py, pz) = (pw(&p[0]), pw(&p[1]), pw(&p[2]));
        quartic_monomials()
            .iter()
            .zip(&self.coeffs)
            .filter(|(_, c)| !c.is_zero())
            .fold(Integer::zero(), |acc, (e, c)| {
                acc + c * &px[e[0] as usize] * &py[e[1] as usize] * &pz[e[2] as usize]
            })
    }

    pub fn eval_i64(&self, p: [i64; 3]) -> Integer {
        self.eval(&p.map(Integer::from))
    }

    /// `F((X, Y, Z)·M)`, normalized. `M` acts on row vectors, so a point
    /// `P` of the result maps to the point `P·M` of `F`.
    pub fn substitute(&self, m: &[[Rational; 3]; 3]) -> Result<Self> {
        let zero = Rational::zero();
        let forms: [MultiPoly<Rational>; 3] = core::array::from_fn(|j| {
            MultiPoly::from_terms((0..3).map(|k| (unit_exps(k), m[k][j].clone())), &zero)
        });
        let g = self.to_multipoly().eval_with(&forms, |c| MultiPoly::constant(c.clone()));
        Self::from_multipoly(&g)
    }

    /// Searches for a prime at which the reduction is certified smooth; a
    /// smooth reduction at any prime `p > 3` implies smoothness over `Q`.
    /// Returns the certifying prime.
    pub fn smoothness_certificate(&self, attempts: usize) -> Option<u64> {
        primes_from(1009).take(attempts).find(|&p| smooth_mod_p(&self.coeffs, p))
    }

    pub fn is_smooth(&self) -> bool {
        self.smoothness_certificate(24).is_some()
    }
}

fn unit_exps(k: usize) -> Exps {
    let mut e = [0u32; 3];
    e[k] = 1;
    e
}

const VARS: [&str; 3] = ["X", "Y", "Z"];

impl fmt::Display for PlaneQuartic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in quartic_monomials().iter().zip(&self.coeffs) {
            if c.is_zero() {
                continue;
            }
            let mono: Vec<String> = e
                .iter()
                .zip(VARS)
                .filter(|(&k, _)| k > 0)
                .map(|(&k, v)| if k == 1 { String::from(v) } else { format!("{v}^{k}") })
                .collect();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let a = c.abs();
            if a.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{a}*{}", mono.join("*"))?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// `P((X, Y, Z)·Θ)` expanded over `K`.
pub fn substitute_theta(theta: &ThetaMatrix, p: &MultiPoly<Rational>) -> MultiPoly<KElem> {
    let z = theta.entries[0][0].zero_like();
    let forms: [MultiPoly<KElem>; 3] = core::array::from_fn(|j| {
        MultiPoly::from_terms((0..3).map(|k| (unit_exps(k), theta.entries[k][j].clone())), &z)
    });
    p.eval_with(&forms, |c| MultiPoly::constant(z.from_rational_like(c).expect("rational")))
}

/// A twisted model together with the scalar `μ ∈ K` such that
/// `P((X, Y, Z)·Θ) = μ·F(X, Y, Z)`.
#[derive(Clone, Debug)]
pub struct TwistedModel {
    pub quartic: PlaneQuartic,
    pub mu: KElem,
}

/// Substitutes `(ω̄₁, ω̄₂, ω̄₃) = (X, Y, Z)·Θ` into the model of `X₀(45)`
/// and extracts the rational quartic.
pub fn twisted_model(theta: &ThetaMatrix, md: &ModularData) -> Result<TwistedModel> {
    let g = substitute_theta(theta, &md.eq1_projective());
    let cs: Vec<KElem> = quartic_monomials().iter().map(|e| g.coeff(e)).collect();
    let c0 = cs.iter().find(|c| !c.is_zero_elem()).ok_or(Error::TwistInconsistent)?.clone();
    let ratios = cs
        .iter()
        .map(|c| rational_ratio(c, &c0).ok_or(Error::TwistInconsistent))
        .collect::<Result<Vec<_>>>()?;
    let quartic = PlaneQuartic::from_rationals(&ratios)?;
    // F = s·ratios, and the ratio at the first nonzero slot is 1.
    let i0 = cs.iter().position(|c| !c.is_zero_elem()).expect("nonzero");
    let s = Rational::from_integer(quartic.coeffs[i0].clone());
    let mu = c0.mul(&c0.from_rational_like(&s.recip()).expect("rational"));
    if !quartic.is_smooth() {
        return Err(Error::SingularModel);
    }
    Ok(TwistedModel { quartic, mu })
}

// Smoothness modulo p.

type FpPoly = UniPoly<Fp>;

/// The three partial derivatives as maps from exponents to `F_p`.
fn partials_mod_p(coeffs: &[Integer; 15], p: u64) -> [Vec<(Exps, Fp)>; 3] {
    core::array::from_fn(|v| {
        quartic_monomials()
            .iter()
            .zip(coeffs)
            .filter(|(e, _)| e[v] > 0)
            .map(|(e, c)| {
                let mut d = *e;
                d[v] -= 1;
                (d, Fp::from_int(&(c * Integer::from(e[v])), p))
            })
            .filter(|(_, c)| !c.is_zero_elem())
            .collect()
    })
}

fn eval_form(form: &[(Exps, Fp)], pt: [Fp; 3]) -> Fp {
    let zero = pt[0].zero_like();
    form.iter().fold(zero, |acc, (e, c)| {
        acc.add(&c.mul(&pt[0].pow(e[0])).mul(&pt[1].pow(e[1])).mul(&pt[2].pow(e[2])))
    })
}

/// Coefficients of `G(x, 1, Z)` in `Z` (degree ≤ 3, low first).
fn z_coeffs(form: &[(Exps, Fp)], x: Fp) -> [Fp; 4] {
    let mut out = [x.zero_like(); 4];
    for (e, c) in form {
        out[e[2] as usize] = out[e[2] as usize].add(&c.mul(&x.pow(e[0])));
    }
    out
}

/// Sylvester resultant of `a` and `b` as polynomials of degrees `da`, `db`
/// (their leading coefficients may vanish at the evaluation point).
fn sylvester(a: &[Fp; 4], da: usize, b: &[Fp; 4], db: usize) -> Fp {
    let zero = a[0].zero_like();
    let n = da + db;
    if n == 0 {
        return zero.one_like();
    }
    let mut rows = vec![vec![zero; n]; n];
    for r in 0..db {
        for k in 0..=da {
            rows[r][r + k] = a[da - k];
        }
    }
    for r in 0..da {
        for k in 0..=db {
            rows[db + r][r + k] = b[db - k];
        }
    }
    Matrix::from_rows(rows, &zero).det().expect("field")
}

/// Degree of a cubic form in `Z`.
fn z_degree(form: &[(Exps, Fp)]) -> usize {
    form.iter().map(|(e, _)| e[2] as usize).max().unwrap_or(0)
}

fn interpolate(xs: &[Fp], ys: &[Fp]) -> FpPoly {
    let zero = xs[0].zero_like();
    let mut acc = FpPoly::zero(zero);
    for (i, (xi, yi)) in xs.iter().zip(ys).enumerate() {
        if yi.is_zero_elem() {
            continue;
        }
        let mut basis = FpPoly::constant(zero.one_like());
        let mut denom = zero.one_like();
        for (j, xj) in xs.iter().enumerate() {
            if i != j {
                basis = basis.mul(&FpPoly::new(vec![xj.neg(), zero.one_like()], zero));
                denom = denom.mul(&xi.sub(xj));
            }
        }
        acc = acc.add(&basis.scale(&yi.mul(&denom.try_inv().expect("distinct nodes"))));
    }
    acc
}

fn gcd_all(ps: &[FpPoly]) -> Option<FpPoly> {
    let mut g = ps[0].clone();
    for q in &ps[1..] {
        g = g.gcd(q).ok()?;
    }
    Some(g)
}

fn is_constant_nonzero(p: &FpPoly) -> bool {
    p.degree() == Some(0)
}

/// Certifies that `F mod p` has no singular point over the algebraic
/// closure. `false` means either singular or not certified at this prime.
///
/// Points with `Y ≠ 0` are excluded by the pairwise resultants in `Z` of the
/// partials at `Y = 1`, points `(x : 0 : 1)` by the gcd of the partials on
/// that line, and `(1 : 0 : 0)` directly. For `p > 3` Euler's identity puts
/// every common zero of the partials on the curve.
fn smooth_mod_p(coeffs: &[Integer; 15], p: u64) -> bool {
    if coeffs.iter().all(|c| Fp::from_int(c, p).is_zero_elem()) {
        return false;
    }
    let parts = partials_mod_p(coeffs, p);
    let zero = Fp::new(0, p);
    let one = zero.one_like();
    // Resultants in Z have degree at most 18 in x.
    let xs: Vec<Fp> = (0..20).map(|i| Fp::new(i, p)).collect();
    let pairs = [(0, 1), (0, 2), (1, 2)];
    let res: Vec<FpPoly> = pairs
        .iter()
        .map(|&(a, b)| {
            let (da, db) = (z_degree(&parts[a]), z_degree(&parts[b]));
            let ys: Vec<Fp> = xs
                .iter()
                .map(|&x| {
                    let (ca, cb) = (z_coeffs(&parts[a], x), z_coeffs(&parts[b], x));
                    if da == 0 && db == 0 {
                        // Both free of Z: a common root in x is a whole line.
                        ca[0].mul(&ca[0]).add(&cb[0].mul(&cb[0]))
                    } else {
                        sylvester(&ca, da, &cb, db)
                    }
                })
                .collect();
            interpolate(&xs, &ys)
        })
        .collect();
    if res.iter().any(|r| r.is_zero_elem()) {
        return false;
    }
    match gcd_all(&res) {
        Some(g) if is_constant_nonzero(&g) => {}
        _ => return false,
    }
    // The line Y = 0, chart Z = 1.
    let line: Vec<FpPoly> = parts
        .iter()
        .map(|form| {
            let ys: Vec<Fp> = xs[..5].iter().map(|&x| eval_form(form, [x, zero, one])).collect();
            interpolate(&xs[..5], &ys)
        })
        .collect();
    let nonzero: Vec<FpPoly> = line.into_iter().filter(|q| !q.is_zero_elem()).collect();
    if nonzero.is_empty() {
        return false;
    }
    match gcd_all(&nonzero) {
        Some(g) if is_constant_nonzero(&g) => {}
        _ => return false,
    }
    parts.iter().any(|form| !eval_form(form, [one, zero, zero]).is_zero_elem())
}
