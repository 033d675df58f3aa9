//! The model artifact: a self-contained JSON record of a computed twist.
//!
//! Big integers and rationals are decimal strings (`"num/den"` for
//! rationals). Polynomials are listed leading coefficient first; the 15
//! quartic coefficients follow graded lexicographic order with `X > Y > Z`.

use serde::{Deserialize, Serialize};

use twist53_core::arith::mpoly::quartic_monomials;
use twist53_core::arith::{Integer, Rational, UniPoly};
use twist53_core::numberfield::{KElem, QuadExt, SplittingContext};
use twist53_core::modular::ModularData;
use twist53_core::twist::{twisted_model, PlaneQuartic, ThetaMatrix};

use crate::error::{CliError, CliResult};
use crate::parse::{format_rational, parse_rational};

pub const FORMAT: &str = "twist53-model/1";
/// The pipeline is deterministic; the seed is recorded for completeness.
pub const DETERMINISM_SEED: u64 = 0;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ThetaEntry {
    /// Power-basis coordinates in `L = Q(θ)` of the rational part.
    pub a: Vec<String>,
    /// Same for the coefficient of `√−3`.
    pub b: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuarticRecord {
    pub monomial_order: String,
    pub monomials: Vec<String>,
    pub coefficients: Vec<String>,
    pub display: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ModelArtifact {
    pub format: String,
    pub tool_version: String,
    pub determinism_seed: u64,
    pub input_poly: Vec<String>,
    pub prime_bound: u64,
    #[serde(rename = "L_minpoly")]
    pub l_minpoly: Vec<String>,
    pub order_basis: Vec<Vec<String>>,
    pub theta: Vec<Vec<ThetaEntry>>,
    pub quartic: QuarticRecord,
    pub k_radicand: String,
    pub disc_squarefree: String,
}

/// An artifact turned back into pipeline objects.
pub struct LoadedModel {
    pub ctx: SplittingContext,
    pub theta: ThetaMatrix,
    pub quartic: PlaneQuartic,
}

fn poly_strings(p: &UniPoly<Integer>) -> Vec<String> {
    p.coeffs().iter().rev().map(|c| c.to_string()).collect()
}

fn rational_strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

fn monomial_name(e: &[u32; 3]) -> String {
    let parts: Vec<String> = ["X", "Y", "Z"]
        .iter()
        .zip(e)
        .filter(|(_, &k)| k > 0)
        .map(|(v, &k)| if k == 1 { v.to_string() } else { format!("{v}^{k}") })
        .collect();
    parts.join("*")
}

fn bad(msg: impl Into<String>) -> CliError {
    CliError::Artifact(msg.into())
}

fn parse_int(s: &str, field: &str) -> CliResult<Integer> {
    s.parse::<Integer>().map_err(|_| bad(format!("{field}: `{s}` is not an integer")))
}

fn parse_rationals(v: &[String], len: usize, field: &str) -> CliResult<Vec<Rational>> {
    if v.len() != len {
        return Err(bad(format!("{field}: expected {len} entries, found {}", v.len())));
    }
    v.iter().map(|s| parse_rational(s).map_err(|e| bad(format!("{field}: {e}")))).collect()
}

impl ModelArtifact {
    pub fn new(ctx: &SplittingContext, theta: &ThetaMatrix, quartic: &PlaneQuartic, prime_bound: u64) -> Self {
        let coords = |x: &twist53_core::numberfield::TowerElem| rational_strings(&ctx.to_absolute(x).coords());
        ModelArtifact {
            format: FORMAT.into(),
            tool_version: env!("CARGO_PKG_VERSION").into(),
            determinism_seed: DETERMINISM_SEED,
            input_poly: poly_strings(&ctx.f),
            prime_bound,
            l_minpoly: poly_strings(ctx.field.minpoly()),
            order_basis: ctx.basis_absolute().iter().map(|v| rational_strings(v)).collect(),
            theta: theta
                .entries
                .iter()
                .map(|row| row.iter().map(|e| ThetaEntry { a: coords(&e.a), b: coords(&e.b) }).collect())
                .collect(),
            quartic: QuarticRecord {
                monomial_order: "grlex X>Y>Z".into(),
                monomials: quartic_monomials().iter().map(monomial_name).collect(),
                coefficients: quartic.coeffs().iter().map(|c| c.to_string()).collect(),
                display: quartic.to_string(),
            },
            k_radicand: ctx.k_radicand().to_string(),
            disc_squarefree: ctx.disc_squarefree().to_string(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("artifact serializes");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> CliResult<Self> {
        let a: ModelArtifact = serde_json::from_str(s).map_err(|e| bad(e.to_string()))?;
        if a.format != FORMAT {
            return Err(bad(format!("unknown format `{}`", a.format)));
        }
        Ok(a)
    }

    pub fn input_polynomial(&self) -> CliResult<UniPoly<Integer>> {
        let mut c = self.input_poly.iter().map(|s| parse_int(s, "input_poly")).collect::<CliResult<Vec<_>>>()?;
        c.reverse();
        Ok(UniPoly::new(c, Integer::from(0)))
    }

    /// Rebuilds the splitting field from `input_poly` and checks every
    /// stored field against it, including the quartic against `Θ`.
    pub fn load(&self, md: &ModularData) -> CliResult<LoadedModel> {
        let f = self.input_polynomial()?;
        // The order basis does not enter Θ or the moduli map.
        let ctx = SplittingContext::new(&f, 0)?;
        if poly_strings(ctx.field.minpoly()) != self.l_minpoly {
            return Err(bad("L_minpoly does not match the splitting field of input_poly"));
        }
        if ctx.k_radicand().to_string() != self.k_radicand || ctx.disc_squarefree().to_string() != self.disc_squarefree {
            return Err(bad("k_radicand or disc_squarefree does not match input_poly"));
        }
        let n = ctx.field.degree();
        if self.order_basis.len() != n {
            return Err(bad(format!("order_basis: expected {n} vectors")));
        }
        for v in &self.order_basis {
            parse_rationals(v, n, "order_basis")?;
        }
        if self.theta.len() != 3 || self.theta.iter().any(|r| r.len() != 3) {
            return Err(bad("theta must be 3x3"));
        }
        let elem = |v: &[String]| -> CliResult<twist53_core::numberfield::TowerElem> {
            let c = parse_rationals(v, n, "theta")?;
            Ok(ctx.from_absolute(&ctx.field.from_coords(&c)))
        };
        let mut rows: Vec<Vec<KElem>> = Vec::with_capacity(3);
        for row in &self.theta {
            rows.push(row.iter().map(|e| Ok(QuadExt::new(elem(&e.a)?, elem(&e.b)?))).collect::<CliResult<Vec<_>>>()?);
        }
        let theta = ThetaMatrix { entries: core::array::from_fn(|i| core::array::from_fn(|j| rows[i][j].clone())) };
        if !theta.is_invertible() || !theta.fixed_by_nu_sigma3(&ctx) {
            return Err(bad("theta is singular or not fixed by the twisted Galois action"));
        }
        let coeffs = self.quartic.coefficients.iter().map(|s| parse_int(s, "quartic")).collect::<CliResult<Vec<_>>>()?;
        let coeffs: [Integer; 15] = coeffs.try_into().map_err(|_| bad("quartic: expected 15 coefficients"))?;
        let quartic = PlaneQuartic::new(coeffs.clone())?;
        if quartic.coeffs() != &coeffs {
            return Err(bad("quartic is not primitive and sign-normalized"));
        }
        if twisted_model(&theta, md)?.quartic != quartic {
            return Err(bad("quartic does not match theta"));
        }
        Ok(LoadedModel { ctx, theta, quartic })
    }
}
