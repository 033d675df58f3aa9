//! Every constant of the fixed modular geometry, kept in one named table so
//! that each can be inspected, overridden and mutation-tested.
//!
//! Names follow `<formula>.<monomial>` (for instance `eq1.x^2*y^2`,
//! `Q.U^2*V`, `t.num.u^2*v`), `<matrix>[i][j]` for matrix entries and
//! `<matrix>[i][j].a` / `.b` for entries `a + b√−3`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::arith::mpoly::MultiPoly;
use crate::arith::{ratio, QMatrix, Rational, Ring, UniPoly};
use crate::numberfield::Eisenstein;
use crate::{Error, Result};

/// A polynomial in two variables with rational coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly2 {
    pub terms: Vec<([u32; 2], Rational)>,
}

impl Poly2 {
    pub fn eval<R: Ring>(&self, x: &R, y: &R) -> R {
        let mut acc = x.zero_like();
        for (e, c) in &self.terms {
            if c.is_zero_elem() {
                continue;
            }
            let coeff = x.from_rational_like(c).expect("coefficient embeds");
            acc = acc.add(&coeff.mul(&x.pow(e[0])).mul(&y.pow(e[1])));
        }
        acc
    }

    /// `S^w · P(a/S², b/S³)`, the weighted homogenization with `x` of weight
    /// 2 and `y` of weight 3. Requires `w` to bound the weighted degree.
    pub fn eval_weighted<R: Ring>(&self, a: &R, b: &R, s: &R, w: u32) -> R {
        let mut acc = a.zero_like();
        for (e, c) in &self.terms {
            if c.is_zero_elem() {
                continue;
            }
            let wt = 2 * e[0] + 3 * e[1];
            assert!(wt <= w, "weight bound too small");
            let coeff = a.from_rational_like(c).expect("coefficient embeds");
            acc = acc.add(&coeff.mul(&a.pow(e[0])).mul(&b.pow(e[1])).mul(&s.pow(w - wt)));
        }
        acc
    }

    pub fn weighted_degree(&self) -> u32 {
        self.terms
            .iter()
            .filter(|(_, c)| !c.is_zero_elem())
            .map(|(e, _)| 2 * e[0] + 3 * e[1])
            .max()
            .unwrap_or(0)
    }
}

fn mono_name(vars: [&str; 2], e: [u32; 2]) -> String {
    let part = |v: &str, k: u32| match k {
        0 => None,
        1 => Some(String::from(v)),
        _ => Some(format!("{v}^{k}")),
    };
    match (part(vars[0], e[0]), part(vars[1], e[1])) {
        (None, None) => "1".into(),
        (Some(a), None) => a,
        (None, Some(b)) => b,
        (Some(a), Some(b)) => format!("{a}*{b}"),
    }
}

// Equation (1) of X0(45) in x = ω1/ω3, y = ω2/ω3.
const EQ1: [([u32; 2], i64); 7] =
    [([4, 0], 1), ([2, 2], -2), ([0, 4], 81), ([2, 0], -2), ([1, 1], -16), ([0, 2], -18), ([0, 0], 1)];

const D_POLY: [([u32; 2], i64); 4] = [([0, 0], 10), ([1, 0], 2), ([2, 0], 3), ([0, 1], -2)];

const Q_POLY: [([u32; 2], i64); 8] = [
    ([0, 0], -1300),
    ([1, 0], -520),
    ([2, 0], -477),
    ([3, 0], 19),
    ([4, 0], -17),
    ([0, 1], 260),
    ([1, 1], 52),
    ([2, 1], 33),
];

// R = R.scale · (this polynomial).
const R_POLY: [([u32; 2], i64); 12] = [
    ([0, 0], 1000),
    ([1, 0], -1900),
    ([2, 0], -630),
    ([3, 0], -1237),
    ([4, 0], -39),
    ([5, 0], -121),
    ([6, 0], 2),
    ([0, 1], -200),
    ([1, 1], 420),
    ([2, 1], 82),
    ([3, 1], 131),
    ([4, 1], 2),
];

const G3_NUM: [([u32; 2], i64); 4] = [([1, 1], 1), ([2, 0], -1), ([1, 0], -9), ([0, 0], -8)];
const G3_DEN: [([u32; 2], i64); 2] = [([1, 0], 1), ([0, 0], 1)];

const T_NUM: [([u32; 2], i64); 7] =
    [([0, 0], 189), ([1, 0], 205), ([2, 0], 7), ([3, 0], 1), ([4, 0], 1), ([1, 1], -16), ([2, 1], -3)];
const T_DEN: [([u32; 2], i64); 4] = [([1, 1], 1), ([2, 0], -1), ([1, 0], -9), ([0, 0], -8)];

const JT_A: [i64; 6] = [614000, -38424, -13700, -310, 30, 1];
const JT_B: [i64; 3] = [5380, 260, 1];

const SCALARS: [(&str, i64, i64); 21] = [
    ("U.shift", 3, 1),
    ("U.y", 9, 1),
    ("U.den", 4, 1),
    ("V.scale", 9, 1),
    ("V.1", 3, 1),
    ("V.x^2", 1, 1),
    ("V.x*y", 18, 1),
    ("V.y^2", 81, 1),
    ("V.den", 4, 1),
    ("u.den", 2, 1),
    ("v.den", 2, 1),
    ("R.scale", 9, 1),
    ("H.shift", 1, 1),
    ("tG.c", 125, 1),
    ("X015.a1", 1, 1),
    ("X015.a2", 1, 1),
    ("X015.a3", 1, 1),
    ("X015.a4", -10, 1),
    ("X015.a6", -10, 1),
    ("f1.a3", -1, 1),
    ("f1.a5", 1, 1),
];

// Action on (ω1, ω2, ω3): row i is the image of ω_i; entries (a, b) mean
// a + b√−3, with halves written as (num, den) pairs.
type Entry = ((i64, i64), (i64, i64));
const W5: [[Entry; 3]; 3] = [
    [((-1, 1), (0, 1)), ((0, 1), (0, 1)), ((0, 1), (0, 1))],
    [((0, 1), (0, 1)), ((-1, 1), (0, 1)), ((0, 1), (0, 1))],
    [((0, 1), (0, 1)), ((0, 1), (0, 1)), ((1, 1), (0, 1))],
];
const W9: [[Entry; 3]; 3] = [
    [((0, 1), (0, 1)), ((3, 1), (0, 1)), ((0, 1), (0, 1))],
    [((1, 3), (0, 1)), ((0, 1), (0, 1)), ((0, 1), (0, 1))],
    [((0, 1), (0, 1)), ((0, 1), (0, 1)), ((-1, 1), (0, 1))],
];
const S_AUT: [[Entry; 3]; 3] = [
    [((-1, 2), (0, 1)), ((-3, 2), (0, 1)), ((0, 1), (1, 2))],
    [((0, 1), (0, 1)), ((1, 1), (0, 1)), ((0, 1), (0, 1))],
    [((0, 1), (1, 2)), ((0, 1), (1, 2)), ((-1, 2), (0, 1))],
];

// The matrices s1..s4 of σ1, σ2, σ3, ν on (ω̄1, ω̄2, ω̄3, √−3ω̄1, √−3ω̄2,
// √−3ω̄3), in the displayed orientation (column r = image of basis vector r).
const S_MATS: [[[(i64, i64); 6]; 6]; 4] = [
    [
        [(-1, 2), (0, 1), (0, 1), (0, 1), (0, 1), (-3, 2)],
        [(-3, 2), (1, 1), (0, 1), (0, 1), (0, 1), (-3, 2)],
        [(0, 1), (0, 1), (-1, 2), (-3, 2), (0, 1), (0, 1)],
        [(0, 1), (0, 1), (1, 2), (-1, 2), (0, 1), (0, 1)],
        [(0, 1), (0, 1), (1, 2), (-3, 2), (1, 1), (0, 1)],
        [(1, 2), (0, 1), (0, 1), (0, 1), (0, 1), (-1, 2)],
    ],
    [
        [(0, 1), (1, 3), (0, 1), (0, 1), (0, 1), (0, 1)],
        [(3, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1)],
        [(0, 1), (0, 1), (-1, 1), (0, 1), (0, 1), (0, 1)],
        [(0, 1), (0, 1), (0, 1), (0, 1), (1, 3), (0, 1)],
        [(0, 1), (0, 1), (0, 1), (3, 1), (0, 1), (0, 1)],
        [(0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (-1, 1)],
    ],
    [
        [(-1, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1)],
        [(0, 1), (-1, 1), (0, 1), (0, 1), (0, 1), (0, 1)],
        [(0, 1), (0, 1), (1, 1), (0, 1), (0, 1), (0, 1)],
        [(0, 1), (0, 1), (0, 1), (-1, 1), (0, 1), (0, 1)],
        [(0, 1), (0, 1), (0, 1), (0, 1), (-1, 1), (0, 1)],
        [(0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (1, 1)],
    ],
    [
        [(-1, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1)],
        [(0, 1), (-1, 1), (0, 1), (0, 1), (0, 1), (0, 1)],
        [(0, 1), (0, 1), (1, 1), (0, 1), (0, 1), (0, 1)],
        [(0, 1), (0, 1), (0, 1), (1, 1), (0, 1), (0, 1)],
        [(0, 1), (0, 1), (0, 1), (0, 1), (1, 1), (0, 1)],
        [(0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (-1, 1)],
    ],
];

/// The three automorphisms `w₅, w₉, S` on `(ω₁, ω₂, ω₃)`, row `i` being the
/// image of `ωᵢ`.
#[derive(Clone, Debug, PartialEq)]
pub struct AutMatrixSet {
    pub w5: [[Eisenstein; 3]; 3],
    pub w9: [[Eisenstein; 3]; 3],
    pub s: [[Eisenstein; 3]; 3],
}

/// Named constants of the modular data.
#[derive(Clone, Debug, PartialEq)]
pub struct ModularData {
    values: BTreeMap<String, Rational>,
}

impl Default for ModularData {
    fn default() -> Self {
        Self::builtin()
    }
}

impl ModularData {
    /// The published values.
    pub fn builtin() -> Self {
        let mut values = BTreeMap::new();
        let mut put = |name: String, n: i64, d: i64| {
            values.insert(name, ratio(n, d));
        };
        for (e, c) in EQ1 {
            put(format!("eq1.{}", mono_name(["x", "y"], e)), c, 1);
        }
        for (e, c) in D_POLY {
            put(format!("D.{}", mono_name(["U", "V"], e)), c, 1);
        }
        for (e, c) in Q_POLY {
            put(format!("Q.{}", mono_name(["U", "V"], e)), c, 1);
        }
        for (e, c) in R_POLY {
            put(format!("R.{}", mono_name(["U", "V"], e)), c, 1);
        }
        for (e, c) in G3_NUM {
            put(format!("G3.num.{}", mono_name(["u", "v"], e)), c, 1);
        }
        for (e, c) in G3_DEN {
            put(format!("G3.den.{}", mono_name(["u", "v"], e)), c, 1);
        }
        for (e, c) in T_NUM {
            put(format!("t.num.{}", mono_name(["u", "v"], e)), c, 1);
        }
        for (e, c) in T_DEN {
            put(format!("t.den.{}", mono_name(["u", "v"], e)), c, 1);
        }
        for (k, c) in JT_A.iter().enumerate() {
            put(format!("jt.A.{}", mono_name(["t", "_"], [k as u32, 0])), *c, 1);
        }
        for (k, c) in JT_B.iter().enumerate() {
            put(format!("jt.B.{}", mono_name(["t", "_"], [k as u32, 0])), *c, 1);
        }
        for (name, n, d) in SCALARS {
            put(name.into(), n, d);
        }
        for (label, m) in [("w5", &W5), ("w9", &W9), ("S", &S_AUT)] {
            for (i, row) in m.iter().enumerate() {
                for (j, ((an, ad), (bn, bd))) in row.iter().enumerate() {
                    put(format!("{label}[{i}][{j}].a"), *an, *ad);
                    put(format!("{label}[{i}][{j}].b"), *bn, *bd);
                }
            }
        }
        for (k, m) in S_MATS.iter().enumerate() {
            for (i, row) in m.iter().enumerate() {
                for (j, (n, d)) in row.iter().enumerate() {
                    put(format!("s{}[{i}][{j}]", k + 1), *n, *d);
                }
            }
        }
        ModularData { values }
    }

    pub fn get(&self, name: &str) -> Option<&Rational> {
        self.values.get(name)
    }

    /// Overrides an existing constant.
    pub fn set(&mut self, name: &str, value: Rational) -> Result<()> {
        match self.values.get_mut(name) {
            Some(v) => {
                *v = value;
                Ok(())
            }
            None => Err(Error::InvalidArgument(format!("unknown constant `{name}`"))),
        }
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.values.keys().map(String::as_str)
    }

    /// The value of a constant known to exist.
    pub fn c(&self, name: &str) -> Rational {
        self.values.get(name).cloned().unwrap_or_else(|| panic!("missing constant `{name}`"))
    }

    fn poly2(&self, prefix: &str, vars: [&str; 2], shape: &[[u32; 2]]) -> Poly2 {
        Poly2 {
            terms: shape
                .iter()
                .map(|e| (*e, self.c(&format!("{prefix}.{}", mono_name(vars, *e)))))
                .collect(),
        }
    }

    /// Left side of the plane quartic model of `X₀(45)` in `x, y`.
    pub fn eq1_affine(&self) -> Poly2 {
        self.poly2("eq1", ["x", "y"], &EQ1.map(|t| t.0))
    }

    /// The homogenization `P(X, Y, Z)` of the `X₀(45)` model.
    pub fn eq1_projective(&self) -> MultiPoly<Rational> {
        let terms = self.eq1_affine().terms.into_iter().map(|(e, c)| ([e[0], e[1], 4 - e[0] - e[1]], c));
        MultiPoly::from_terms(terms, &Rational::zero())
    }

    /// `10 + 2U + 3U² − 2V`.
    pub fn d_poly(&self) -> Poly2 {
        self.poly2("D", ["U", "V"], &D_POLY.map(|t| t.0))
    }

    pub fn q_poly(&self) -> Poly2 {
        self.poly2("Q", ["U", "V"], &Q_POLY.map(|t| t.0))
    }

    /// `R(U, V)` including its overall factor.
    pub fn r_poly(&self) -> Poly2 {
        let mut p = self.poly2("R", ["U", "V"], &R_POLY.map(|t| t.0));
        let s = self.c("R.scale");
        for (_, c) in p.terms.iter_mut() {
            *c = &*c * &s;
        }
        p
    }

    pub fn g3_num(&self) -> Poly2 {
        self.poly2("G3.num", ["u", "v"], &G3_NUM.map(|t| t.0))
    }

    pub fn g3_den(&self) -> Poly2 {
        self.poly2("G3.den", ["u", "v"], &G3_DEN.map(|t| t.0))
    }

    pub fn t_num(&self) -> Poly2 {
        self.poly2("t.num", ["u", "v"], &T_NUM.map(|t| t.0))
    }

    pub fn t_den(&self) -> Poly2 {
        self.poly2("t.den", ["u", "v"], &T_DEN.map(|t| t.0))
    }

    /// `A(t) = t⁵ + 30t⁴ − …`, the coefficient of `−j`.
    pub fn jt_a(&self) -> UniPoly<Rational> {
        let c = (0..JT_A.len()).map(|k| self.c(&format!("jt.A.{}", mono_name(["t", "_"], [k as u32, 0])))).collect();
        UniPoly::new(c, Rational::zero())
    }

    /// `b(t) = t² + 260t + 5380`, with constant term `b(t)³` in `j`.
    pub fn jt_b(&self) -> UniPoly<Rational> {
        let c = (0..JT_B.len()).map(|k| self.c(&format!("jt.B.{}", mono_name(["t", "_"], [k as u32, 0])))).collect();
        UniPoly::new(c, Rational::zero())
    }

    /// Long Weierstrass coefficients `[a1, a2, a3, a4, a6]` of `X₀(15)`.
    pub fn x015(&self) -> [Rational; 5] {
        ["a1", "a2", "a3", "a4", "a6"].map(|k| self.c(&format!("X015.{k}")))
    }

    fn eis_matrix(&self, label: &str) -> [[Eisenstein; 3]; 3] {
        core::array::from_fn(|i| {
            core::array::from_fn(|j| {
                Eisenstein::new(self.c(&format!("{label}[{i}][{j}].a")), self.c(&format!("{label}[{i}][{j}].b")))
            })
        })
    }

    pub fn aut_table(&self) -> AutMatrixSet {
        AutMatrixSet { w5: self.eis_matrix("w5"), w9: self.eis_matrix("w9"), s: self.eis_matrix("S") }
    }

    /// `s₁, s₂, s₃, s₄`.
    pub fn s_matrices(&self) -> [QMatrix; 4] {
        core::array::from_fn(|k| {
            let rows = (0..6)
                .map(|i| (0..6).map(|j| self.c(&format!("s{}[{i}][{j}]", k + 1))).collect())
                .collect();
            QMatrix::from_rows(rows, &Rational::zero())
        })
    }
}

/// The 6×6 rational matrix, on `(ω₁, ω₂, ω₃, √−3ω₁, √−3ω₂, √−3ω₃)` and in
/// column orientation, of the `Q(√−3)`-linear map whose row `i` is the image
/// of `ωᵢ`.
pub fn realify(m: &[[Eisenstein; 3]; 3]) -> QMatrix {
    let mut out = QMatrix::zeros(6, 6, &Rational::zero());
    let three = Rational::from_integer(3.into());
    for i in 0..3 {
        for j in 0..3 {
            let (a, b) = (&m[i][j].a, &m[i][j].b);
            out.set(j, i, a.clone());
            out.set(j + 3, i, b.clone());
            out.set(j, i + 3, -(b * &three));
            out.set(j + 3, i + 3, a.clone());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn names_and_override() {
        let mut md = ModularData::builtin();
        assert_eq!(md.get("eq1.y^4"), Some(&rat(81)));
        assert_eq!(md.get("Q.U^2*V"), Some(&rat(33)));
        assert_eq!(md.get("t.num.u^2*v"), Some(&rat(-3)));
        assert_eq!(md.get("jt.A.t^5"), Some(&rat(1)));
        assert_eq!(md.get("S[0][2].b"), Some(&ratio(1, 2)));
        md.set("eq1.y^4", rat(80)).unwrap();
        assert_eq!(md.eq1_affine().terms[2].1, rat(80));
        assert!(md.set("nope", rat(1)).is_err());
    }

    #[test]
    fn homogenized_eq1_restricts_to_affine() {
        let md = ModularData::builtin();
        let p = md.eq1_projective();
        assert!(p.is_homogeneous());
        let (x, y) = (ratio(3, 7), ratio(-2, 5));
        assert_eq!(p.eval(&[x.clone(), y.clone(), rat(1)]), md.eq1_affine().eval(&x, &y));
    }
}
