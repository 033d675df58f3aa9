//! Dense matrices over an exact ring, with fraction-free elimination over Z
//! and Gaussian elimination over fields.

use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use super::poly::UniPoly;
use super::ring::{content, denominator_lcm, Integer, Rational, Ring};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<R: Ring> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
    zero: R,
}

pub type QMatrix = Matrix<Rational>;

impl<R: Ring> Matrix<R> {
    pub fn zeros(rows: usize, cols: usize, zero: &R) -> Self {
        Matrix { rows, cols, data: vec![zero.zero_like(); rows * cols], zero: zero.zero_like() }
    }

    pub fn identity(n: usize, template: &R) -> Self {
        let mut m = Self::zeros(n, n, template);
        for i in 0..n {
            m.set(i, i, template.one_like());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<R>>, zero: &R) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect(), zero: zero.zero_like() }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_cols(cols: &[Vec<R>], zero: &R) -> Self {
        let c = cols.len();
        let r = cols.first().map_or(0, Vec::len);
        let mut m = Self::zeros(r, c, zero);
        for (j, col) in cols.iter().enumerate() {
            for (i, x) in col.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn zero_elem(&self) -> &R {
        &self.zero
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vec<R> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn col(&self, j: usize) -> Vec<R> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<R>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows, &self.zero);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn map<S: Ring>(&self, zero: &S, f: impl Fn(&R) -> S) -> Matrix<S> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect(), zero: zero.zero_like() }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a.add(b)).collect();
        Matrix { data, ..self.clone() }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a.sub(b)).collect();
        Matrix { data, ..self.clone() }
    }

    pub fn scale(&self, c: &R) -> Self {
        Matrix { data: self.data.iter().map(|a| a.mul(c)).collect(), ..self.clone() }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let mut out = Self::zeros(self.rows, rhs.cols, &self.zero);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero_elem() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero_elem() {
                        let idx = i * rhs.cols + j;
                        out.data[idx] = out.data[idx].add(&a.mul(b));
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[R]) -> Vec<R> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                (0..self.cols).fold(self.zero.clone(), |acc, j| {
                    let a = self.get(i, j);
                    if a.is_zero_elem() || v[j].is_zero_elem() {
                        acc
                    } else {
                        acc.add(&a.mul(&v[j]))
                    }
                })
            })
            .collect()
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::identity(self.rows, &self.zero);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Kronecker product: block `(i, j)` of the result is `self[i][j] · rhs`.
    pub fn kron(&self, rhs: &Self) -> Self {
        let mut out = Self::zeros(self.rows * rhs.rows, self.cols * rhs.cols, &self.zero);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero_elem() {
                    continue;
                }
                for k in 0..rhs.rows {
                    for l in 0..rhs.cols {
                        out.set(i * rhs.rows + k, j * rhs.cols + l, a.mul(rhs.get(k, l)));
                    }
                }
            }
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = self.get(i, j);
                    if i == j { x.is_one_elem() } else { x.is_zero_elem() }
                })
            })
    }

    /// Reduced row echelon form over a field, with the pivot columns.
    pub fn rref(&self) -> Result<(Self, Vec<usize>)> {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero_elem()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).try_inv().ok_or(Error::DivisionByZero)?;
            for j in c..m.cols {
                let v = m.get(r, j).mul(&inv);
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero_elem() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in c..m.cols {
                    let v = m.get(i, j).sub(&f.mul(m.get(r, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Ok((m, pivots))
    }

    pub fn rank(&self) -> Result<usize> {
        Ok(self.rref()?.1.len())
    }

    /// Right null space over a field by plain Gaussian elimination.
    pub fn kernel_gauss(&self) -> Result<Vec<Vec<R>>> {
        let (m, pivots) = self.rref()?;
        Ok(kernel_from_rref(&m, &pivots))
    }

    /// Determinant over a field.
    pub fn det(&self) -> Result<R> {
        assert_eq!(self.rows, self.cols);
        let mut m = self.clone();
        let mut det = self.zero.one_like();
        for c in 0..m.cols {
            let Some(p) = (c..m.rows).find(|&i| !m.get(i, c).is_zero_elem()) else {
                return Ok(self.zero.clone());
            };
            if p != c {
                m.swap_rows(p, c);
                det = det.neg();
            }
            let piv = m.get(c, c).clone();
            det = det.mul(&piv);
            let inv = piv.try_inv().ok_or(Error::DivisionByZero)?;
            for i in c + 1..m.rows {
                if m.get(i, c).is_zero_elem() {
                    continue;
                }
                let f = m.get(i, c).mul(&inv);
                for j in c..m.cols {
                    let v = m.get(i, j).sub(&f.mul(m.get(c, j)));
                    m.set(i, j, v);
                }
            }
        }
        Ok(det)
    }

    /// Inverse over a field.
    pub fn inverse(&self) -> Result<Self> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n, &self.zero);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, self.zero.one_like());
        }
        let (r, pivots) = aug.rref()?;
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::DivisionByZero);
        }
        let mut inv = Self::zeros(n, n, &self.zero);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.get(i, n + j).clone());
            }
        }
        Ok(inv)
    }

    /// Characteristic polynomial `det(x·I − M)` over a field, via reduction
    /// to Hessenberg form.
    pub fn charpoly(&self) -> Result<UniPoly<R>> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut h = self.clone();
        for m in 1..n.saturating_sub(1) {
            let Some(i) = (m..n).find(|&i| !h.get(i, m - 1).is_zero_elem()) else {
                continue;
            };
            if i != m {
                h.swap_rows(i, m);
                h.swap_cols(i, m);
            }
            let inv = h.get(m, m - 1).try_inv().ok_or(Error::DivisionByZero)?;
            for j in m + 1..n {
                let u = h.get(j, m - 1).mul(&inv);
                if u.is_zero_elem() {
                    continue;
                }
                for k in 0..n {
                    let v = h.get(j, k).sub(&u.mul(h.get(m, k)));
                    h.set(j, k, v);
                }
                for k in 0..n {
                    let v = h.get(k, m).add(&u.mul(h.get(k, j)));
                    h.set(k, m, v);
                }
            }
        }
        let x = UniPoly::x(&self.zero);
        let mut ps: Vec<UniPoly<R>> = vec![UniPoly::constant(self.zero.one_like())];
        for m in 0..n {
            let mut next = x.sub(&UniPoly::constant(h.get(m, m).clone())).mul(&ps[m]);
            let mut t = self.zero.one_like();
            for i in (0..m).rev() {
                t = t.mul(h.get(i + 1, i));
                let c = t.mul(h.get(i, m));
                if !c.is_zero_elem() {
                    next = next.sub(&ps[i].scale(&c));
                }
            }
            ps.push(next);
        }
        Ok(ps.pop().expect("nonempty"))
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }
}

fn kernel_from_rref<R: Ring>(m: &Matrix<R>, pivots: &[usize]) -> Vec<Vec<R>> {
    let zero = m.zero_elem();
    let free: Vec<usize> = (0..m.cols()).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![zero.clone(); m.cols()];
            v[f] = zero.one_like();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = m.get(r, f).neg();
            }
            v
        })
        .collect()
}

impl QMatrix {
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&x| Rational::from_integer(x.into())).collect())
            .collect();
        Matrix::from_rows(rows, &Rational::zero())
    }

    /// Rows scaled by the lcm of their denominators.
    pub fn integer_rows(&self) -> Vec<Vec<Integer>> {
        (0..self.rows())
            .map(|i| {
                let row = self.row(i);
                let d = denominator_lcm(&row);
                row.iter().map(|x| (x * Rational::from_integer(d.clone())).to_integer()).collect()
            })
            .collect()
    }

    /// Basis of the right null space `{v : Mv = 0}`.
    ///
    /// Rows are cleared of denominators and brought to echelon form by
    /// fraction-free (Bareiss) elimination, pivoting on the first nonzero
    /// column and the smallest row index. Each free column `f` yields one
    /// vector with `v[f] = 1` and zeros at the other free columns, then
    /// scaled to a primitive integer vector with positive entry at `f`.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let (ech, pivots) = bareiss_echelon(self.integer_rows(), self.cols());
        let free: Vec<usize> = (0..self.cols()).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Rational::zero(); self.cols()];
                v[f] = Rational::one();
                for (r, &p) in pivots.iter().enumerate().rev() {
                    let mut s = Rational::zero();
                    for j in p + 1..self.cols() {
                        if !ech[r][j].is_zero_elem() && !v[j].is_zero_elem() {
                            s += Rational::from_integer(ech[r][j].clone()) * &v[j];
                        }
                    }
                    v[p] = -s / Rational::from_integer(ech[r][p].clone());
                }
                primitive_vector(&v).into_iter().map(Rational::from_integer).collect()
            })
            .collect()
    }

    pub fn rank_bareiss(&self) -> usize {
        bareiss_echelon(self.integer_rows(), self.cols()).1.len()
    }

    /// Determinant, computed fraction-free.
    pub fn det_exact(&self) -> Rational {
        assert_eq!(self.rows(), self.cols());
        let mut scale = Integer::one();
        let rows = (0..self.rows())
            .map(|i| {
                let row = self.row(i);
                let d = denominator_lcm(&row);
                scale *= &d;
                row.iter().map(|x| (x * Rational::from_integer(d.clone())).to_integer()).collect()
            })
            .collect();
        Rational::new(det_bareiss(rows), scale)
    }
}

/// Primitive integer multiple of a nonzero rational vector (zero vector
/// returned as zeros).
pub fn primitive_vector(v: &[Rational]) -> Vec<Integer> {
    let d = denominator_lcm(v);
    let ints: Vec<Integer> = v.iter().map(|x| (x * Rational::from_integer(d.clone())).to_integer()).collect();
    let g = content(&ints);
    if g.is_zero_elem() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}

/// Fraction-free row echelon form. Returns the echelon rows (rank many)
/// together with their pivot columns.
pub fn bareiss_echelon(mut m: Vec<Vec<Integer>>, cols: usize) -> (Vec<Vec<Integer>>, Vec<usize>) {
    let nrows = m.len();
    let mut pivots = Vec::new();
    let mut prev = Integer::one();
    let mut r = 0;
    for c in 0..cols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero_elem()) else {
            continue;
        };
        m.swap(r, p);
        let (top, bottom) = m.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let piv = pivot_row[c].clone();
        for row in bottom.iter_mut() {
            let f = row[c].clone();
            if f.is_zero_elem() {
                for x in row.iter_mut().skip(c + 1) {
                    *x = &*x * &piv;
                    if !prev.is_one_elem() {
                        *x = &*x / &prev;
                    }
                }
            } else {
                for j in c + 1..cols {
                    let v = &row[j] * &piv - &f * &pivot_row[j];
                    row[j] = if prev.is_one_elem() { v } else { v / &prev };
                }
                row[c] = Integer::zero();
            }
        }
        prev = piv;
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

/// Solution of the square nonsingular integer system `m·x = rhs`, `None` when
/// `m` is singular.
pub fn solve_integer_system(m: &[Vec<Integer>], rhs: &[Integer]) -> Option<Vec<Rational>> {
    let n = m.len();
    let aug: Vec<Vec<Integer>> = m
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let (ech, pivots) = bareiss_echelon(aug, n + 1);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    let mut x = vec![Rational::zero(); n];
    for r in (0..n).rev() {
        let mut s = Rational::from_integer(ech[r][n].clone());
        for j in r + 1..n {
            if !ech[r][j].is_zero_elem() {
                s -= Rational::from_integer(ech[r][j].clone()) * &x[j];
            }
        }
        x[r] = s / Rational::from_integer(ech[r][r].clone());
    }
    Some(x)
}

/// Determinant of a square integer matrix by Bareiss elimination.
pub fn det_bareiss(mut m: Vec<Vec<Integer>>) -> Integer {
    let n = m.len();
    let mut sign = false;
    let mut prev = Integer::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !m[i][k].is_zero_elem()) else {
            return Integer::zero();
        };
        if p != k {
            m.swap(p, k);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
            m[i][k] = Integer::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m.last().map_or(Integer::one(), |r| r[n - 1].clone());
    if sign { -d } else { d }
}

/// Hermite normal form of the row lattice: nonzero rows only, upper
/// triangular with positive pivots and entries above each pivot reduced into
/// `[0, pivot)`.
pub fn hnf(mut m: Vec<Vec<Integer>>, cols: usize) -> Vec<Vec<Integer>> {
    let nrows = m.len();
    let mut r = 0;
    for c in 0..cols {
        if r == nrows {
            break;
        }
        for i in r + 1..nrows {
            if m[i][c].is_zero_elem() {
                continue;
            }
            let e = m[r][c].extended_gcd(&m[i][c]);
            let a = &m[r][c] / &e.gcd;
            let b = &m[i][c] / &e.gcd;
            for j in c..cols {
                let top = &e.x * &m[r][j] + &e.y * &m[i][j];
                let bot = &a * &m[i][j] - &b * &m[r][j];
                m[r][j] = top;
                m[i][j] = bot;
            }
        }
        if m[r][c].is_zero_elem() {
            continue;
        }
        if m[r][c].is_negative() {
            for x in m[r].iter_mut() {
                *x = -&*x;
            }
        }
        for k in 0..r {
            let q = m[k][c].div_floor(&m[r][c]);
            if !q.is_zero_elem() {
                for j in c..cols {
                    let v = &m[r][j] * &q;
                    m[k][j] -= v;
                }
            }
        }
        r += 1;
    }
    m.truncate(r);
    m
}

/// Determinant of a 3×3 matrix over any ring.
pub fn det3<R: Ring>(m: &[[R; 3]; 3]) -> R {
    let minor = |a: usize, b: usize, c: usize, d: usize| m[1][a].mul(&m[2][b]).sub(&m[1][c].mul(&m[2][d]));
    m[0][0]
        .mul(&minor(1, 2, 2, 1))
        .sub(&m[0][1].mul(&minor(0, 2, 2, 0)))
        .add(&m[0][2].mul(&minor(0, 1, 1, 0)))
}

/// Adjugate of a 3×3 matrix over any ring: `adj(M)·M = M·adj(M) = det(M)·I`.
pub fn adjugate3<R: Ring>(m: &[[R; 3]; 3]) -> [[R; 3]; 3] {
    let c = |i: usize, j: usize| {
        let r: [usize; 2] = match i {
            0 => [1, 2],
            1 => [0, 2],
            _ => [0, 1],
        };
        let s: [usize; 2] = match j {
            0 => [1, 2],
            1 => [0, 2],
            _ => [0, 1],
        };
        let d = m[r[0]][s[0]].mul(&m[r[1]][s[1]]).sub(&m[r[0]][s[1]].mul(&m[r[1]][s[0]]));
        if (i + j) % 2 == 1 { d.neg() } else { d }
    };
    // adj(M)[i][j] is the (j, i) cofactor.
    core::array::from_fn(|i| core::array::from_fn(|j| c(j, i)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ring::rat;

    #[test]
    fn kernel_examples() {
        assert!(QMatrix::identity(2, &rat(0)).kernel_basis().is_empty());
        assert_eq!(QMatrix::zeros(2, 2, &rat(0)).kernel_basis(), vec![vec![rat(1), rat(0)], vec![rat(0), rat(1)]]);
        let m = QMatrix::from_i64_rows(&[&[1, 2, 3], &[2, 4, 6]]);
        let k = m.kernel_basis();
        assert_eq!(k, vec![vec![rat(-2), rat(1), rat(0)], vec![rat(-3), rat(0), rat(1)]]);
    }

    #[test]
    fn determinant_and_inverse() {
        let m = QMatrix::from_i64_rows(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        assert_eq!(m.det().unwrap(), rat(18));
        assert_eq!(m.det_exact(), rat(18));
        assert!(m.mul(&m.inverse().unwrap()).is_identity());
        let arr: [[Rational; 3]; 3] = core::array::from_fn(|i| core::array::from_fn(|j| m.get(i, j).clone()));
        assert_eq!(det3(&arr), rat(18));
        let adj = adjugate3(&arr);
        let adj_m = Matrix::from_rows(adj.iter().map(|r| r.to_vec()).collect(), &rat(0));
        assert_eq!(adj_m.mul(&m), QMatrix::identity(3, &rat(0)).scale(&rat(18)));
    }

    #[test]
    fn charpoly_companion() {
        // Companion matrix of x³ − 2x + 5.
        let m = QMatrix::from_i64_rows(&[&[0, 0, -5], &[1, 0, 2], &[0, 1, 0]]);
        assert_eq!(m.charpoly().unwrap(), crate::arith::poly::qpoly(&[5, -2, 0, 1]));
    }

    #[test]
    fn hermite_form() {
        let rows = vec![
            vec![Integer::from(4), Integer::from(6)],
            vec![Integer::from(6), Integer::from(9)],
            vec![Integer::from(0), Integer::from(3)],
        ];
        let h = hnf(rows, 2);
        assert_eq!(h, vec![vec![Integer::from(2), Integer::from(0)], vec![Integer::from(0), Integer::from(3)]]);
    }
}
