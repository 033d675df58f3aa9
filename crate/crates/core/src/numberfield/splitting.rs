//! Validation of `S₄` quartics and their splitting fields with the Galois
//! group acting by explicit matrices.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::field::{NfElem, NumberField};
use super::order::{refine_up_to, OrderBasis};
use super::tower::{monomial_exponents, RootTower, TowerElem, TOWER_DIM};
use crate::arith::int::{primes_from, rational_sqrt, squarefree_part};
use crate::arith::poly::{discriminant, rational_roots, reduce_mod_p, to_qpoly};
use crate::arith::{Integer, QMatrix, Rational, Ring, UniPoly};
use crate::{Error, Result};

/// Invariants of a validated quartic.
#[derive(Clone, Debug, PartialEq)]
pub struct QuarticInfo {
    pub galois_group: String,
    pub discriminant: Integer,
    pub disc_squarefree: Integer,
    pub k_radicand: Integer,
}

fn has_quadratic_factor(a: &Rational, b: &Rational, c: &Rational, d: &Rational, y0: &Rational) -> bool {
    let two = Rational::from_integer(2.into());
    let four = Rational::from_integer(4.into());
    let Some(r1) = rational_sqrt(&(y0 * y0 - &four * d)) else { return false };
    let Some(r2) = rational_sqrt(&(a * a - &four * (b - y0))) else { return false };
    let q = (y0 + &r1) / &two;
    let s = (y0 - &r1) / &two;
    [r2.clone(), -r2].iter().any(|r| {
        let p = (a + r) / &two;
        let rr = a - &p;
        &p * &s + &q * &rr == *c
    })
}

/// Checks that `f` is an irreducible quartic with Galois group `S₄` whose
/// discriminant is not `−3` up to squares.
pub fn validate_quartic(f: &UniPoly<Integer>) -> Result<QuarticInfo> {
    if f.degree() != Some(4) {
        return Err(Error::NotQuartic);
    }
    let fq = to_qpoly(f);
    if !rational_roots(&fq)?.is_empty() {
        return Err(Error::NotIrreducible);
    }
    let disc = discriminant(&fq)?;
    if Zero::is_zero(&disc) {
        return Err(Error::NotIrreducible);
    }
    let m = fq.monic()?;
    let (a, b, c, d) = (m.coeff(3), m.coeff(2), m.coeff(1), m.coeff(0));
    let four = Rational::from_integer(4.into());
    let resolvent = UniPoly::new(
        vec![
            -(&a * &a * &d - &four * &b * &d + &c * &c),
            &a * &c - &four * &d,
            -b.clone(),
            Rational::one(),
        ],
        Rational::zero(),
    );
    let res_roots = rational_roots(&resolvent)?;
    if res_roots.iter().any(|y0| has_quadratic_factor(&a, &b, &c, &d, y0)) {
        return Err(Error::NotIrreducible);
    }
    if !res_roots.is_empty() {
        return Err(Error::NotS4("resolvent cubic is reducible"));
    }
    let disc = disc.to_integer();
    if rational_sqrt(&Rational::from_integer(disc.clone())).is_some() {
        return Err(Error::NotS4("discriminant is a square"));
    }
    let disc_squarefree = squarefree_part(&disc)?;
    if disc_squarefree == Integer::from(-3) {
        return Err(Error::CyclotomicDeterminant);
    }
    let k_radicand = squarefree_part(&(&disc_squarefree * Integer::from(-3)))?;
    Ok(QuarticInfo { galois_group: "S4".into(), discriminant: disc, disc_squarefree, k_radicand })
}

/// One element of `Gal(L/Q)`: `σ(αᵢ) = α_{perm[i]}`.
#[derive(Clone, Debug)]
pub struct Automorphism {
    pub perm: [usize; 4],
    pub image_of_theta: NfElem,
    matrix: Vec<Vec<Integer>>,
}

impl Automorphism {
    /// Integer matrix of `σ` on the tower basis.
    pub fn tower_matrix(&self) -> &[Vec<Integer>] {
        &self.matrix
    }
}

/// All permutations of `{0,1,2,3}` in lexicographic order.
pub fn permutations4() -> Vec<[usize; 4]> {
    let mut out = Vec::with_capacity(24);
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let p = [a, b, c, d];
                    if (0..4).all(|i| p.contains(&i)) {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

/// `(π∘τ)(i) = π(τ(i))`.
pub fn compose_perm(p: &[usize; 4], t: &[usize; 4]) -> [usize; 4] {
    core::array::from_fn(|i| p[t[i]])
}

/// The named generators: σ₁ = (1,2,3), σ₂ = (1,2)(3,4), σ₃ = (1,2).
pub const SIGMA_PERMS: [[usize; 4]; 3] = [[1, 2, 0, 3], [1, 0, 3, 2], [1, 0, 2, 3]];

/// Small coefficient vectors tried for the primitive element
/// `θ = c₁y₁ + c₂y₂ + c₃y₃`. Four distinct values among `(c₁, c₂, c₃, 0)`
/// already force primitivity.
const THETA_CANDIDATES: [[i64; 3]; 4] = [[1, 2, 3], [1, -1, 2], [2, -1, 1], [1, 3, -2]];

/// The splitting field `L` of a validated quartic `f`, in tower form over the
/// roots `yᵢ = lc(f)·αᵢ` of the monic `g(y) = lc³·f(y/lc)`, together with
/// its primitive-element model, Galois action and a chosen order.
#[derive(Clone, Debug)]
pub struct SplittingContext {
    pub f: UniPoly<Integer>,
    pub info: QuarticInfo,
    pub tower: Arc<RootTower>,
    /// The roots `α₁..α₄` of `f`.
    pub roots: [TowerElem; 4],
    /// `L = Q(θ)`.
    pub field: Arc<NumberField>,
    pub theta: TowerElem,
    pub theta_coeffs: [i64; 3],
    power_to_tower: QMatrix,
    tower_to_power: QMatrix,
    pub automorphisms: Vec<Automorphism>,
    /// Indices of σ₁, σ₂, σ₃ in `automorphisms`.
    pub sigma: [usize; 3],
    pub basis: OrderBasis,
}

impl SplittingContext {
    /// Builds the context. Orders are refined at primes up to `prime_bound`
    /// (0 keeps the root-monomial order `Z[y₁, y₂, y₃]`).
    pub fn new(f: &UniPoly<Integer>, prime_bound: u64) -> Result<Self> {
        let info = validate_quartic(f)?;
        let lc = f.lc();
        let g: [Integer; 4] = core::array::from_fn(|i| f.coeff(i) * lc.pow(3 - i as u32));
        let tower = RootTower::new(g);
        let ys = TowerElem::tower_roots(&tower);
        let inv_lc = Rational::new(Integer::one(), lc.clone());
        let roots = core::array::from_fn(|i| ys[i].mul(&TowerElem::from_rational(&inv_lc, &tower)));

        let automorphisms_raw: Vec<([usize; 4], Vec<Vec<Integer>>)> =
            permutations4().into_iter().map(|p| (p, permutation_matrix(&ys, &p))).collect();

        let mut chosen = None;
        for cand in THETA_CANDIDATES {
            let theta = ys[0]
                .scale_i64(cand[0])
                .add(&ys[1].scale_i64(cand[1]))
                .add(&ys[2].scale_i64(cand[2]));
            if let Some(minpoly) = squarefree_charpoly(&theta) {
                chosen = Some((cand, theta, minpoly));
                break;
            }
        }
        let (theta_coeffs, theta, minpoly) = chosen.ok_or(Error::NoPrimitiveElement)?;
        let field = NumberField::new(minpoly)?;

        let mut power = TowerElem::one(&tower);
        let mut cols = Vec::with_capacity(TOWER_DIM);
        for _ in 0..TOWER_DIM {
            cols.push(power.coords());
            power = power.mul(&theta);
        }
        let power_to_tower = QMatrix::from_cols(&cols, &Rational::zero());
        let tower_to_power = power_to_tower.inverse().map_err(|_| Error::NoPrimitiveElement)?;

        let automorphisms: Vec<Automorphism> = automorphisms_raw
            .into_iter()
            .map(|(perm, matrix)| {
                let image = theta.apply_int_matrix(&matrix);
                let image_of_theta = field.from_coords(&tower_to_power.mul_vec(&image.coords()));
                Automorphism { perm, image_of_theta, matrix }
            })
            .collect();
        let sigma = SIGMA_PERMS.map(|p| automorphisms.iter().position(|a| a.perm == p).expect("all of S4 present"));

        let mut basis = OrderBasis::standard(&tower)?;
        if prime_bound > 0 {
            basis = refine_up_to(&tower, &basis, prime_bound)?;
        }
        Ok(SplittingContext {
            f: f.clone(),
            info,
            tower,
            roots,
            field,
            theta,
            theta_coeffs,
            power_to_tower,
            tower_to_power,
            automorphisms,
            sigma,
            basis,
        })
    }

    pub fn perm_index(&self, perm: &[usize; 4]) -> Option<usize> {
        self.automorphisms.iter().position(|a| a.perm == *perm)
    }

    pub fn identity_index(&self) -> usize {
        self.perm_index(&[0, 1, 2, 3]).expect("identity present")
    }

    pub fn apply(&self, idx: usize, x: &TowerElem) -> TowerElem {
        x.apply_int_matrix(&self.automorphisms[idx].matrix)
    }

    /// Matrix of the automorphism `idx` on the order basis (column
    /// convention: column `j` holds the coordinates of `σ(b_j)`).
    pub fn automorphism_matrix(&self, idx: usize) -> QMatrix {
        let t = &self.automorphisms[idx].matrix;
        let tq = QMatrix::from_rows(
            t.iter().map(|r| r.iter().map(|x| Rational::from_integer(x.clone())).collect()).collect(),
            &Rational::zero(),
        );
        self.basis.inverse_matrix().mul(&tq).mul(&self.basis.matrix())
    }

    /// The `j`-th order basis element.
    pub fn basis_element(&self, j: usize) -> TowerElem {
        TowerElem::from_coords(&self.basis.elements()[j], &self.tower)
    }

    /// `Σⱼ cⱼ bⱼ` for coordinates in the order basis.
    pub fn from_basis_coords(&self, c: &[Rational]) -> TowerElem {
        TowerElem::from_coords(&self.basis.element_from(c), &self.tower)
    }

    pub fn to_basis_coords(&self, x: &TowerElem) -> Vec<Rational> {
        self.basis.coords_of(&x.coords())
    }

    /// Power-basis representation in `Q(θ)`.
    pub fn to_absolute(&self, x: &TowerElem) -> NfElem {
        self.field.from_coords(&self.tower_to_power.mul_vec(&x.coords()))
    }

    pub fn from_absolute(&self, x: &NfElem) -> TowerElem {
        TowerElem::from_coords(&self.power_to_tower.mul_vec(&x.coords()), &self.tower)
    }

    /// Order basis elements in power-basis coordinates.
    pub fn basis_absolute(&self) -> Vec<Vec<Rational>> {
        self.basis.elements().iter().map(|e| self.tower_to_power.mul_vec(e)).collect()
    }

    pub fn disc_squarefree(&self) -> &Integer {
        &self.info.disc_squarefree
    }

    pub fn k_radicand(&self) -> &Integer {
        &self.info.k_radicand
    }

    pub fn lc(&self) -> Integer {
        self.f.lc()
    }
}

/// Integer matrix (rows) of `yᵢ ↦ y_{perm[i]}` on the tower basis.
fn permutation_matrix(ys: &[TowerElem; 4], perm: &[usize; 4]) -> Vec<Vec<Integer>> {
    let powers: Vec<Vec<TowerElem>> = ys
        .iter()
        .map(|y| {
            let mut v = vec![y.one_like()];
            for e in 1..4 {
                let next = v[e - 1].mul(y);
                v.push(next);
            }
            v
        })
        .collect();
    let cols: Vec<Vec<Integer>> = (0..TOWER_DIM)
        .map(|m| {
            let (i, j, k) = monomial_exponents(m);
            let img = powers[perm[0]][i].mul(&powers[perm[1]][j]).mul(&powers[perm[2]][k]);
            debug_assert!(One::is_one(img.denominator()));
            img.numerators().to_vec()
        })
        .collect();
    (0..TOWER_DIM).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect()
}

/// Characteristic polynomial of multiplication by `theta` when it is
/// squarefree (certified modulo a prime), i.e. when `theta` is primitive.
fn squarefree_charpoly(theta: &TowerElem) -> Option<UniPoly<Integer>> {
    let rows = theta.mult_matrix_int();
    debug_assert!(One::is_one(theta.denominator()));
    let m = QMatrix::from_rows(
        rows.iter().map(|r| r.iter().map(|x| Rational::from_integer(x.clone())).collect()).collect(),
        &Rational::zero(),
    );
    let cp = m.charpoly().ok()?;
    let zp = UniPoly::new(cp.coeffs().iter().map(|q| q.to_integer()).collect(), Integer::zero());
    for p in primes_from(29).take(200) {
        let red = reduce_mod_p(&zp, p);
        let g = red.gcd(&red.derivative()).ok()?;
        if g.degree() == Some(0) {
            return Some(zp);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::poly::zpoly;

    #[test]
    fn validation_outcomes() {
        let info = validate_quartic(&zpoly(&[3, 2, -3, 0, 1])).unwrap();
        assert_eq!(info.disc_squarefree, Integer::from(-33));
        assert_eq!(info.k_radicand, Integer::from(11));
        assert_eq!(validate_quartic(&zpoly(&[1, 0, 0, 0, 1])), Err(Error::NotS4("resolvent cubic is reducible")));
        assert_eq!(validate_quartic(&zpoly(&[0, 0, -2, 0, 1])), Err(Error::NotIrreducible));
        assert_eq!(validate_quartic(&zpoly(&[6, 0, -5, 0, 1])), Err(Error::NotIrreducible));
        assert_eq!(validate_quartic(&zpoly(&[1, 1, 1])), Err(Error::NotQuartic));
    }
}
