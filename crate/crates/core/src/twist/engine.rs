//! Kronecker products `Wᵢ = sᵢ ⊗ Σᵢ`, their common fixed space and the
//! basis change `Θ` over `K = L(√−3)`.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::arith::int::{inv_mod_u64, is_prime_u64, mul_mod_u64};
use crate::arith::lattice::lll_reduce;
use crate::arith::matrix::{adjugate3, det3, primitive_vector};
use crate::arith::{Integer, QMatrix, Rational, Ring};
use crate::numberfield::{KElem, QuadExt, SplittingContext};
use crate::{Error, Result};

/// Dimension of `Ω¹_{Q(√−3)}(X(5,3)) ⊗ L` over `Q`.
pub const TWIST_DIM: usize = 6 * 24;

/// Rational basis of the common fixed space of the `Wᵢ`, as primitive integer
/// vectors indexed by `24·r + j` (`r` runs over `ω̄₁, ω̄₂, ω̄₃, √−3ω̄₁, √−3ω̄₂,
/// √−3ω̄₃`, `j` over the order basis of `L`).
#[derive(Clone, Debug, PartialEq)]
pub struct TwistBasis {
    pub vectors: Vec<Vec<Integer>>,
    pub reduced: bool,
}

/// `(ω̄₁, ω̄₂, ω̄₃) = (X_ρ, Y_ρ, Z_ρ)·Θ`.
#[derive(Clone, Debug, PartialEq)]
pub struct ThetaMatrix {
    pub entries: [[KElem; 3]; 3],
}

/// The matrices `Σ₁, Σ₂, Σ₃` of `σ₁, σ₂, σ₃` on the order basis.
pub fn sigma_matrices(ctx: &SplittingContext) -> [QMatrix; 3] {
    ctx.sigma.map(|idx| ctx.automorphism_matrix(idx))
}

/// `Wᵢ = sᵢ ⊗ Σᵢ` with `Σ₄ = Id₂₄`.
pub fn build_w(s: &[QMatrix; 4], sigmas: &[QMatrix; 3]) -> [QMatrix; 4] {
    let n = sigmas[0].rows();
    let id = QMatrix::identity(n, &Rational::zero());
    core::array::from_fn(|i| s[i].kron(if i < 3 { &sigmas[i] } else { &id }))
}

/// `∩ ker(Wᵢ − Id)`, computed one matrix at a time starting from `W₄`.
/// The three vectors are made primitive, saturated to the full integer
/// lattice of the space, and LLL-reduced.
pub fn fixed_space(w: &[QMatrix; 4]) -> Result<TwistBasis> {
    let n = w[0].rows();
    let zero = Rational::zero();
    let id = QMatrix::identity(n, &zero);
    // Columns of `basis` span the space found so far.
    let mut basis = id.clone();
    for wi in [&w[3], &w[0], &w[1], &w[2]] {
        let m = wi.sub(&id).mul(&basis);
        let ker = m.kernel_basis();
        if ker.is_empty() {
            return Err(Error::DimensionMismatch(0));
        }
        basis = basis.mul(&QMatrix::from_cols(&ker, &zero));
    }
    let dim = basis.cols();
    if dim != 3 {
        return Err(Error::DimensionMismatch(dim));
    }
    let mut vectors: Vec<Vec<Integer>> = (0..dim).map(|c| primitive_vector(&basis.col(c))).collect();
    saturate(&mut vectors);
    lll_reduce(&mut vectors);
    for v in &mut vectors {
        if v.iter().find(|x| !x.is_zero()).is_some_and(|x| x < &Integer::zero()) {
            v.iter_mut().for_each(|x| *x = -&*x);
        }
    }
    Ok(TwistBasis { vectors, reduced: true })
}

/// Replaces a basis of a sublattice by one of its saturation
/// `span_Q(B) ∩ Zⁿ`, dividing out primes of the index one at a time.
pub fn saturate(vectors: &mut [Vec<Integer>]) {
    let k = vectors.len();
    let Some(cols) = pivot_columns(vectors) else { return };
    // The index of the lattice in its saturation divides this minor.
    let minor = QMatrix::from_rows(
        vectors.iter().map(|v| cols.iter().map(|&c| Rational::from_integer(v[c].clone())).collect()).collect(),
        &Rational::zero(),
    )
    .det_exact()
    .to_integer();
    let mut d = num_traits::Signed::abs(&minor);
    let mut p = 2u64;
    while !d.is_one() {
        let bp = Integer::from(p);
        if p > 1_000_000 {
            break;
        }
        if !is_prime_u64(p) || !(&d % &bp).is_zero() {
            p += 1;
            continue;
        }
        match relation_mod(vectors, p) {
            Some(c) => {
                // Σ cᵢvᵢ ≡ 0 (mod p) with cᵢ = 1: replacing vᵢ by the
                // quotient enlarges the lattice by exactly p.
                let i = (0..k).find(|&i| c[i] != 0).expect("nonzero relation");
                let inv = inv_mod_u64(c[i], p).expect("p prime");
                let c: Vec<u64> = c.iter().map(|&x| mul_mod_u64(x, inv, p)).collect();
                let mut w = vec![Integer::zero(); vectors[0].len()];
                for (j, v) in vectors.iter().enumerate() {
                    if c[j] != 0 {
                        for (wx, vx) in w.iter_mut().zip(v) {
                            *wx += vx * c[j];
                        }
                    }
                }
                vectors[i] = w.into_iter().map(|x| x / &bp).collect();
                d /= &bp;
            }
            None => {
                while (&d % &bp).is_zero() {
                    d /= &bp;
                }
                p += 1;
            }
        }
    }
}

/// Columns on which the rows are linearly independent.
fn pivot_columns(vectors: &[Vec<Integer>]) -> Option<Vec<usize>> {
    let q = QMatrix::from_rows(
        vectors.iter().map(|v| v.iter().map(|x| Rational::from_integer(x.clone())).collect()).collect(),
        &Rational::zero(),
    );
    let (_, pivots) = q.rref().ok()?;
    (pivots.len() == vectors.len()).then_some(pivots)
}

/// A nonzero `c ∈ F_p^k` with `Σ cᵢvᵢ ≡ 0 (mod p)`, entries in `[0, p)`.
fn relation_mod(vectors: &[Vec<Integer>], p: u64) -> Option<Vec<u64>> {
    use crate::arith::Fp;
    let k = vectors.len();
    let zero = Fp::new(0, p);
    // Columns of the transpose are the vectors; its kernel gives relations.
    let rows: Vec<Vec<Fp>> = (0..vectors[0].len())
        .map(|j| (0..k).map(|i| Fp::from_int(&vectors[i][j], p)).collect())
        .collect();
    let m = crate::arith::Matrix::from_rows(rows, &zero);
    let ker = m.kernel_gauss().ok()?;
    ker.first().map(|c| c.iter().map(|x| x.value()).collect())
}

/// The differentials `X_ρ, Y_ρ, Z_ρ` as rows `(A₁, A₂, A₃)` with
/// `X_ρ = Σⱼ Aⱼ ω̄ⱼ`, `Aⱼ ∈ K`.
pub fn basis_forms(basis: &TwistBasis, ctx: &SplittingContext) -> [[KElem; 3]; 3] {
    let n = ctx.basis.dim();
    core::array::from_fn(|k| {
        let v: Vec<Rational> = basis.vectors[k].iter().map(|x| Rational::from_integer(x.clone())).collect();
        core::array::from_fn(|j| {
            let a = ctx.from_basis_coords(&v[n * j..n * (j + 1)]);
            let b = ctx.from_basis_coords(&v[n * (j + 3)..n * (j + 4)]);
            QuadExt::new(a, b)
        })
    })
}

/// `Θ = (Mᵀ)⁻¹` for the matrix `M` of [`basis_forms`].
pub fn compute_theta(basis: &TwistBasis, ctx: &SplittingContext) -> Result<ThetaMatrix> {
    let m = basis_forms(basis, ctx);
    let mt: [[KElem; 3]; 3] = core::array::from_fn(|i| core::array::from_fn(|j| m[j][i].clone()));
    let det = det3(&mt);
    let inv_det = det.try_inv().ok_or(Error::SingularTheta)?;
    let adj = adjugate3(&mt);
    let entries = core::array::from_fn(|i| core::array::from_fn(|j| adj[i][j].mul(&inv_det)));
    Ok(ThetaMatrix { entries })
}

impl ThetaMatrix {
    /// `(ν∘σ₃)(θ) = θ` for every entry.
    pub fn fixed_by_nu_sigma3(&self, ctx: &SplittingContext) -> bool {
        let s3 = ctx.sigma[2];
        self.entries
            .iter()
            .flatten()
            .all(|e| e.apply_sigma(|x| ctx.apply(s3, x)).conj_nu() == *e)
    }

    /// `(ω̄₁, ω̄₂, ω̄₃)` at `(X, Y, Z) = (a, b, c)`.
    pub fn omega_at(&self, p: &[Rational; 3]) -> [KElem; 3] {
        let z = self.entries[0][0].zero_like();
        core::array::from_fn(|j| {
            (0..3).fold(z.clone(), |acc, k| {
                let c = z.from_rational_like(&p[k]).expect("rational");
                acc.add(&c.mul(&self.entries[k][j]))
            })
        })
    }

    /// `Θ′ = M·Θ`: the matrix attached to the basis `M⁻¹·(X_ρ, Y_ρ, Z_ρ)`
    /// when `M ∈ GL₃(Q)` acts on row vectors.
    pub fn left_mul_rational(&self, m: &[[Rational; 3]; 3]) -> ThetaMatrix {
        let z = self.entries[0][0].zero_like();
        let entries = core::array::from_fn(|i| {
            core::array::from_fn(|j| {
                (0..3).fold(z.clone(), |acc, k| {
                    acc.add(&self.entries[k][j].mul(&z.from_rational_like(&m[i][k]).expect("rational")))
                })
            })
        });
        ThetaMatrix { entries }
    }

    pub fn is_invertible(&self) -> bool {
        !det3(&self.entries).is_zero_elem()
    }

    pub fn one_elem(&self) -> KElem {
        self.entries[0][0].one_like()
    }
}

/// Forms the twisted action from a splitting context and the four
/// `s`-matrices and returns its fixed space.
pub fn twist_basis(ctx: &SplittingContext, s: &[QMatrix; 4]) -> Result<TwistBasis> {
    fixed_space(&build_w(s, &sigma_matrices(ctx)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::poly::zpoly;
    use crate::modular::ModularData;

    #[test]
    fn kronecker_mixed_product() {
        let a = QMatrix::from_i64_rows(&[&[1, 2], &[0, -1]]);
        let b = QMatrix::from_i64_rows(&[&[3, 0], &[1, 1]]);
        let c = QMatrix::from_i64_rows(&[&[2, 1, 0], &[0, 1, 0], &[1, 0, 1]]);
        let d = QMatrix::from_i64_rows(&[&[0, 1, 0], &[1, 0, 0], &[4, 0, -1]]);
        assert_eq!(a.kron(&c).mul(&b.kron(&d)), a.mul(&b).kron(&c.mul(&d)));
    }

    #[test]
    fn saturation_removes_index() {
        let mut v = vec![
            vec![Integer::from(2), Integer::from(0), Integer::from(2)],
            vec![Integer::from(1), Integer::from(3), Integer::from(4)],
        ];
        // (2,0,2) = 2·(1,0,1): the saturation contains (1,0,1).
        saturate(&mut v);
        let q: Vec<Vec<Rational>> = v.iter().map(|r| r.iter().map(|x| Rational::from_integer(x.clone())).collect()).collect();
        let m = QMatrix::from_rows(q, &Rational::zero());
        let minors: Vec<Integer> = [(0, 1), (0, 2), (1, 2)]
            .iter()
            .map(|&(i, j)| {
                (m.get(0, i) * m.get(1, j) - m.get(0, j) * m.get(1, i)).to_integer()
            })
            .collect();
        assert_eq!(crate::arith::ring::content(&minors), Integer::one());
    }

    #[test]
    fn example_fixed_space() {
        let f = zpoly(&[3, 2, -3, 0, 1]);
        let ctx = SplittingContext::new(&f, 100).unwrap();
        let md = ModularData::builtin();
        let w = build_w(&md.s_matrices(), &sigma_matrices(&ctx));
        assert!(w[3].pow(2).is_identity());
        assert!(w[0].pow(3).is_identity());
        let basis = fixed_space(&w).unwrap();
        for v in &basis.vectors {
            let q: Vec<Rational> = v.iter().map(|x| Rational::from_integer(x.clone())).collect();
            for wi in &w {
                assert_eq!(wi.mul_vec(&q), q);
            }
        }
        let theta = compute_theta(&basis, &ctx).unwrap();
        assert!(theta.fixed_by_nu_sigma3(&ctx));
        assert!(crate::twist::twisted_model(&theta, &md).unwrap().quartic.is_smooth());
    }
}
