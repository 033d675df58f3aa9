//! Named identities between the stored constants and independent
//! q-expansions. Each identity reduces to a residual series that must vanish
//! to the requested precision.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::eta::{eta_quotient_series, j_series, EtaQuotientSpec, QSeries};
use super::newform::{newform_series, EllipticCurveW, Newform, NewformSeries};
use super::uvseries::uv_series;
use crate::arith::{rat, ratio, Ring, TruncSeries};
use crate::modular::aut::{aut_group_order, s_group_order, s_is_nu_semilinear, s_matrices_from_table};
use crate::modular::{uv_from_xy, x015_coordinates, ModularData};
use crate::numberfield::Eisenstein;
use crate::{Error, Result};

/// The checked identities.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Identity {
    /// `P(ω₁, ω₂, ω₃) = 0` for the quartic of `X₀(45)`.
    Eq1,
    /// `u = Q(U, V) / 2D²`.
    QrU,
    /// `v = R(U, V) / 2D³`.
    QrV,
    /// `u, v` on the `X₀(15)` equation, tied to the eta quotient `H − 1`.
    UvOnCurve,
    /// `H = u + 1`.
    HIsUPlus1,
    /// `(u + 1) G(3τ) = uv − u² − 9u − 8`.
    G3Def,
    /// `G(3τ) + 125/G(3τ)` equals the rational function of `u, v` for `t`.
    TEq3,
    /// The `j`–`t` relation on `(j(q), t(q))`.
    JtRelation,
    /// The `S` column of the automorphism table, via `q ↦ ζ₃q`.
    SColumn,
    /// `⟨w₅, w₉, S⟩` has order 24, `S³ = 1`, `^νS = S²`.
    AutGroup,
    /// The `s`-matrices agree with the table and generate a group of order 48.
    SMatrices,
}

impl Identity {
    /// The series identities of the acceptance suite.
    pub const SERIES: [Identity; 9] = [
        Identity::Eq1,
        Identity::QrU,
        Identity::QrV,
        Identity::UvOnCurve,
        Identity::HIsUPlus1,
        Identity::G3Def,
        Identity::TEq3,
        Identity::JtRelation,
        Identity::SColumn,
    ];

    pub const ALL: [Identity; 11] = [
        Identity::Eq1,
        Identity::QrU,
        Identity::QrV,
        Identity::UvOnCurve,
        Identity::HIsUPlus1,
        Identity::G3Def,
        Identity::TEq3,
        Identity::JtRelation,
        Identity::SColumn,
        Identity::AutGroup,
        Identity::SMatrices,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::Eq1 => "eq1",
            Identity::QrU => "qr_u",
            Identity::QrV => "qr_v",
            Identity::UvOnCurve => "uv_on_curve",
            Identity::HIsUPlus1 => "h_is_u_plus_1",
            Identity::G3Def => "g3_def",
            Identity::TEq3 => "t_eq3",
            Identity::JtRelation => "jt_relation",
            Identity::SColumn => "s_column",
            Identity::AutGroup => "aut_group",
            Identity::SMatrices => "s_matrices",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|i| i.name() == name)
    }

    fn is_series(self) -> bool {
        !matches!(self, Identity::AutGroup | Identity::SMatrices)
    }
}

/// Outcome of one identity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub identity: &'static str,
    /// Requested precision `N`.
    pub precision: i64,
    /// Precision to which the residual is actually known.
    pub achieved: i64,
    pub pass: bool,
    /// Lowest exponent of a nonzero residual coefficient, or an error.
    pub detail: Option<String>,
}

/// Every series the identities need, computed once at a working precision.
#[derive(Clone, Debug)]
pub struct OracleSeries {
    pub work: i64,
    pub f1n: NewformSeries,
    pub f2n: NewformSeries,
    pub f1: QSeries,
    pub f1_q3: QSeries,
    pub f2: QSeries,
    pub x: QSeries,
    pub y: QSeries,
    pub u: QSeries,
    pub v: QSeries,
    pub g: QSeries,
    pub g3: QSeries,
    pub h: QSeries,
    pub j: QSeries,
}

impl OracleSeries {
    pub fn compute(md: &ModularData, work: i64) -> Result<Self> {
        let n = (work + 6) as usize;
        let f1n = newform_series(md, Newform::F1, n)?;
        let f2n = newform_series(md, Newform::F2, n)?;
        let f1 = f1n.to_series();
        let f2 = f2n.to_series();
        let f1_q3 = f1.compose_power(3).truncate(f1.precision());
        let x = f1.div(&f2)?;
        let y = f1_q3.div(&f2)?;
        let e = EllipticCurveW::x015(md)?;
        let (u, v) = uv_series(&e, &f1, work)?;
        let g = eta_quotient_series(&EtaQuotientSpec::g(), work)?;
        let g3 = g.compose_power(3).truncate(work);
        let h = eta_quotient_series(&EtaQuotientSpec::h(), work)?;
        let j = j_series(work);
        Ok(OracleSeries { work, f1n, f2n, f1, f1_q3, f2, x, y, u, v, g, g3, h, j })
    }
}

struct Residual {
    zero: bool,
    precision: i64,
    first_nonzero: Option<i64>,
}

impl Residual {
    fn of<R: Ring>(s: &TruncSeries<R>) -> Self {
        let zero = s.is_zero_to_precision();
        Residual { zero, precision: s.precision(), first_nonzero: (!zero).then(|| s.valuation()) }
    }

    fn both(a: Residual, b: Residual) -> Self {
        if !a.zero {
            return Residual { precision: a.precision.min(b.precision), ..a };
        }
        Residual { precision: a.precision.min(b.precision), ..b }
    }
}

fn poly_residual(s: &OracleSeries, md: &ModularData, id: Identity) -> Result<Residual> {
    let k = |name: &str| s.u.from_rational_like(&md.c(name)).expect("rational constant");
    Ok(match id {
        Identity::Eq1 => Residual::of(&md.eq1_affine().eval(&s.x, &s.y)),
        Identity::QrU | Identity::QrV => {
            let (ub, vb) = uv_from_xy(md, &s.x, &s.y)?;
            let (u, v) = x015_coordinates(md, &ub, &vb)?;
            if id == Identity::QrU {
                Residual::of(&u.sub(&s.u))
            } else {
                Residual::of(&v.sub(&s.v))
            }
        }
        Identity::UvOnCurve => {
            let [a1, a2, a3, a4, a6] = md.x015().map(|c| s.u.from_rational_like(&c).expect("rational"));
            let (u, v) = (&s.u, &s.v);
            let lhs = v.square().add(&a1.mul(u).mul(v)).add(&a3.mul(v));
            let rhs = u.pow(3).add(&a2.mul(&u.square())).add(&a4.mul(u)).add(&a6);
            let anchor = s.h.sub(&u.add(&u.one_like()));
            Residual::both(Residual::of(&lhs.sub(&rhs)), Residual::of(&anchor))
        }
        Identity::HIsUPlus1 => Residual::of(&s.h.sub(&s.u.add(&k("H.shift")))),
        Identity::G3Def => {
            let lhs = md.g3_den().eval(&s.u, &s.v).mul(&s.g3);
            Residual::of(&lhs.sub(&md.g3_num().eval(&s.u, &s.v)))
        }
        Identity::TEq3 => {
            let t3 = s.g3.add(&k("tG.c").mul(&s.g3.inverse()?));
            let lhs = t3.mul(&md.t_den().eval(&s.u, &s.v));
            Residual::of(&lhs.sub(&md.t_num().eval(&s.u, &s.v)))
        }
        Identity::JtRelation => {
            let t = s.g.add(&k("tG.c").mul(&s.g.inverse()?));
            let a = md.jt_a().eval_with(&t, |c| t.from_rational_like(c).expect("rational"));
            let b = md.jt_b().eval_with(&t, |c| t.from_rational_like(c).expect("rational"));
            Residual::of(&s.j.square().sub(&a.mul(&s.j)).add(&b.pow(3)))
        }
        Identity::SColumn => s_column_residual(s, md),
        Identity::AutGroup | Identity::SMatrices => unreachable!("not a series identity"),
    })
}

fn s_column_residual(s: &OracleSeries, md: &ModularData) -> Residual {
    let zero = Eisenstein::from_base(rat(0));
    let zeta = Eisenstein::new(ratio(-1, 2), ratio(1, 2));
    let lift = |f: &QSeries| f.map(&zero, |c| Eisenstein::from_base(c.clone()));
    let omegas = [lift(&s.f1), lift(&s.f1_q3), lift(&s.f2)];
    let table = md.aut_table().s;
    let mut acc: Option<Residual> = None;
    for (i, w) in omegas.iter().enumerate() {
        let twisted = w.map_indexed(&zero, |n, c| c.mul(&zeta.pow(n.rem_euclid(3) as u32)));
        let mut image = w.zero_like();
        for (j, wj) in omegas.iter().enumerate() {
            image = image.add(&wj.scale(&table[i][j]));
        }
        let r = Residual::of(&twisted.sub(&image));
        acc = Some(match acc {
            None => r,
            Some(prev) => Residual::both(prev, r),
        });
    }
    acc.expect("three rows")
}

fn group_check(md: &ModularData, id: Identity) -> bool {
    let table = md.aut_table();
    match id {
        Identity::AutGroup => aut_group_order(&table) == Some(24) && s_is_nu_semilinear(&table),
        Identity::SMatrices => {
            let s = md.s_matrices();
            s_matrices_from_table(&table) == s
                && s_group_order(md) == Some(48)
                && (0..3).all(|i| s[3].mul(&s[i]) == s[i].mul(&s[3]))
        }
        _ => unreachable!("not a group identity"),
    }
}

fn report(id: Identity, n: i64, r: Result<Residual>) -> IdentityReport {
    match r {
        Ok(r) => IdentityReport {
            identity: id.name(),
            precision: n,
            achieved: r.precision,
            pass: r.zero && r.precision >= n,
            detail: r.first_nonzero.map(|k| format!("nonzero coefficient at q^{k}")),
        },
        Err(e) => IdentityReport {
            identity: id.name(),
            precision: n,
            achieved: 0,
            pass: false,
            detail: Some(format!("{e}")),
        },
    }
}

/// Checks one identity against precomputed series.
pub fn check_with(series: &OracleSeries, md: &ModularData, id: Identity, n: i64) -> IdentityReport {
    if !id.is_series() {
        let pass = group_check(md, id);
        return IdentityReport {
            identity: id.name(),
            precision: n,
            achieved: n,
            pass,
            detail: (!pass).then(|| String::from("group relations fail")),
        };
    }
    report(id, n, poly_residual(series, md, id))
}

/// Extra working precision beyond `N`; covers the losses from the cusp
/// valuations of `D(U, V)` and the powers of `t` in the `j`–`t` relation.
pub const DEFAULT_MARGIN: i64 = 16;

/// Checks the given identities at precision `N ≥ 20`, raising the working
/// precision when some residual vanishes but is known to less than `N`.
pub fn verify_identities(md: &ModularData, ids: &[Identity], n: i64) -> Result<Vec<IdentityReport>> {
    if n < 20 {
        return Err(Error::InvalidArgument("oracle precision must be at least 20".into()));
    }
    let mut margin = DEFAULT_MARGIN;
    loop {
        let series = OracleSeries::compute(md, n + margin);
        let reports: Vec<IdentityReport> = match &series {
            Ok(s) => ids.iter().map(|&id| check_with(s, md, id, n)).collect(),
            Err(e) => ids.iter().map(|&id| report(id, n, Err(e.clone()))).collect(),
        };
        let short = reports.iter().any(|r| !r.pass && r.detail.is_none() && r.achieved < n);
        if !short || margin > 4 * n {
            return Ok(reports);
        }
        margin *= 2;
    }
}

pub fn verify_identity(md: &ModularData, id: Identity, n: i64) -> Result<IdentityReport> {
    Ok(verify_identities(md, &[id], n)?.remove(0))
}

/// The constants an identity depends on, by name prefix; used to pair each
/// stored constant with the check that must notice its corruption.
pub fn owning_identity(constant: &str) -> Identity {
    let prefix = constant.split(['.', '[']).next().unwrap_or("");
    match prefix {
        "eq1" | "f1" => Identity::Eq1,
        "U" | "V" | "D" | "Q" | "u" => Identity::QrU,
        "R" | "v" => Identity::QrV,
        "X015" => Identity::UvOnCurve,
        "H" => Identity::HIsUPlus1,
        "G3" => Identity::G3Def,
        "t" | "tG" => Identity::TEq3,
        "jt" => Identity::JtRelation,
        "S" => Identity::SColumn,
        "w5" | "w9" => Identity::AutGroup,
        _ => Identity::SMatrices,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for id in Identity::ALL {
            assert_eq!(Identity::from_name(id.name()), Some(id));
        }
        assert_eq!(owning_identity("eq1.y^4"), Identity::Eq1);
        assert_eq!(owning_identity("S[0][2].b"), Identity::SColumn);
        assert_eq!(owning_identity("s3[1][1]"), Identity::SMatrices);
        assert_eq!(owning_identity("t.num.u^2*v"), Identity::TEq3);
    }

    #[test]
    fn all_identities_pass() {
        let md = ModularData::builtin();
        for r in verify_identities(&md, &Identity::ALL, 24).unwrap() {
            assert!(r.pass, "{r:?}");
        }
    }

    #[test]
    fn perturbed_quartic_fails() {
        let mut md = ModularData::builtin();
        md.set("eq1.y^4", rat(80)).unwrap();
        assert!(!verify_identity(&md, Identity::Eq1, 24).unwrap().pass);
    }
}
