//! The subcommands, as functions from parsed arguments to a report.

use std::path::{Path, PathBuf};
use std::thread;

use serde_json::{json, Value};

use twist53_core::arith::{Integer, QMatrix, Rational, Ring};
use twist53_core::modular::{t_from_j, JPair, ModularData};
use twist53_core::moduli::{
    fiber_over_t, moduli_point, search_points_range, FiberConfig, ModuliPoint, ProjPoint, Sieve,
};
use twist53_core::numberfield::{validate_quartic, QuadraticNumber, SplittingContext};
use twist53_core::oracle::{newform_series, verify_identities, Identity, IdentityReport, Newform};
use twist53_core::twist::{build_w, compute_theta, fixed_space, sigma_matrices, twisted_model, PlaneQuartic};
use twist53_core::Error;

use crate::artifact::{LoadedModel, ModelArtifact};
use crate::error::{CliError, CliResult, EXIT_INTERNAL, EXIT_OK};
use crate::parse::{format_rational, parse_poly};

#[derive(Clone, Debug)]
pub struct CommandConfig {
    pub precision: i64,
    pub height: u64,
    pub prime_bound: u64,
    pub strict: bool,
    pub out: Option<PathBuf>,
}

impl Default for CommandConfig {
    fn default() -> Self {
        CommandConfig { precision: 40, height: 100, prime_bound: 100, strict: false, out: None }
    }
}

impl CommandConfig {
    pub fn check(&self) -> CliResult<()> {
        if self.precision < 20 {
            return Err(Error::InvalidArgument(format!("precision {} is below 20", self.precision)).into());
        }
        if self.height < 1 {
            return Err(Error::InvalidArgument("height must be at least 1".into()).into());
        }
        Ok(())
    }
}

/// A command's result: JSON for `--json`, text otherwise, and the exit code.
#[derive(Clone, Debug)]
pub struct Report {
    pub json: Value,
    pub text: String,
    pub exit: i32,
}

impl Report {
    fn ok(json: Value, text: String) -> Self {
        Report { json, text, exit: EXIT_OK }
    }
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> CliError + '_ {
    move |source| CliError::Io { path: path.to_path_buf(), source }
}

pub fn read_artifact(path: &Path) -> CliResult<ModelArtifact> {
    ModelArtifact::from_json(&std::fs::read_to_string(path).map_err(io_err(path))?)
}

/// Applies `{"name": "num/den", ...}` overrides to the stock constants.
pub fn load_constants(path: Option<&Path>) -> CliResult<ModularData> {
    let mut md = ModularData::builtin();
    let Some(path) = path else { return Ok(md) };
    let text = std::fs::read_to_string(path).map_err(io_err(path))?;
    let map: std::collections::BTreeMap<String, String> =
        serde_json::from_str(&text).map_err(|e| CliError::parse("constants file", e.to_string()))?;
    for (name, value) in map {
        md.set(&name, crate::parse::parse_rational(&value)?)?;
    }
    Ok(md)
}

fn int_json(n: &Integer) -> Value {
    Value::String(n.to_string())
}

fn quadratic_json(q: &QuadraticNumber) -> Value {
    json!({ "a": format_rational(&q.a), "b": format_rational(&q.b), "radicand": int_json(&q.d), "display": q.to_string() })
}

fn point_json(p: &ProjPoint) -> Value {
    Value::Array(p.coords().iter().map(int_json).collect())
}

fn jpair_json(j: &JPair) -> Value {
    json!({ "t": format_rational(&j.t), "j": quadratic_json(&j.j), "j_conj": quadratic_json(&j.j_conj) })
}

fn moduli_json(m: &ModuliPoint) -> Value {
    json!({
        "point": point_json(&m.point),
        "classification": m.classification.as_str(),
        "t": m.t.as_ref().map(format_rational),
        "j_pair": m.j_pair.as_ref().map(jpair_json),
        "stage": m.stage,
    })
}

fn moduli_text(m: &ModuliPoint) -> String {
    match (&m.t, &m.j_pair) {
        (Some(t), Some(j)) => format!("{}  t = {}  j = {}", m.point, t, j.j),
        _ => format!("{}  {} ({})", m.point, m.classification.as_str(), m.stage.unwrap_or("")),
    }
}

fn reports_json(reports: &[IdentityReport]) -> Value {
    Value::Array(
        reports
            .iter()
            .map(|r| json!({ "identity": r.identity, "precision": r.precision, "achieved": r.achieved, "pass": r.pass, "detail": r.detail }))
            .collect(),
    )
}

pub fn validate(poly: &str) -> CliResult<Report> {
    let info = validate_quartic(&parse_poly(poly)?)?;
    let json = json!({
        "galois_group": info.galois_group,
        "discriminant": int_json(&info.discriminant),
        "disc_squarefree": int_json(&info.disc_squarefree),
        "k_radicand": int_json(&info.k_radicand),
    });
    let text = format!(
        "Galois group {}; discriminant {} (squarefree part {}); k = Q(sqrt({}))",
        info.galois_group, info.discriminant, info.disc_squarefree, info.k_radicand
    );
    Ok(Report::ok(json, text))
}

/// Runs every oracle identity; fails unless all pass.
fn strict_gate(md: &ModularData, precision: i64) -> CliResult<()> {
    let reports = verify_identities(md, &Identity::ALL, precision)?;
    let failed: Vec<&str> = reports.iter().filter(|r| !r.pass).map(|r| r.identity).collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(CliError::Oracle(failed.join(", ")))
    }
}

/// Builds the twist of `poly`. `corrupt_sigma` replaces `Σ₁` by the
/// identity, which must be caught by the fixed-space dimension check.
pub fn model(poly: &str, cfg: &CommandConfig, md: &ModularData, corrupt_sigma: bool) -> CliResult<Report> {
    cfg.check()?;
    let f = parse_poly(poly)?;
    validate_quartic(&f)?;
    if cfg.strict {
        strict_gate(md, cfg.precision)?;
    }
    let ctx = SplittingContext::new(&f, cfg.prime_bound)?;
    let mut sigmas = sigma_matrices(&ctx);
    if corrupt_sigma {
        sigmas[0] = QMatrix::identity(sigmas[0].rows(), &Rational::from_integer(0.into()));
    }
    let basis = fixed_space(&build_w(&md.s_matrices(), &sigmas))?;
    let theta = compute_theta(&basis, &ctx)?;
    if !theta.fixed_by_nu_sigma3(&ctx) {
        return Err(Error::TwistInconsistent.into());
    }
    let model = twisted_model(&theta, md)?;
    let artifact = ModelArtifact::new(&ctx, &theta, &model.quartic, cfg.prime_bound);
    let text = artifact.to_json();
    let json = serde_json::to_value(&artifact).expect("artifact serializes");
    match &cfg.out {
        Some(path) => {
            std::fs::write(path, &text).map_err(io_err(path))?;
            let summary = json!({
                "artifact": path.display().to_string(),
                "quartic": model.quartic.to_string(),
                "smoothness_prime": model.quartic.smoothness_certificate(24),
                "k_radicand": int_json(ctx.k_radicand()),
            });
            Ok(Report::ok(summary, format!("{} = 0\nwritten to {}", model.quartic, path.display())))
        }
        None => Ok(Report::ok(json, text.trim_end().to_string())),
    }
}

/// Point search with the `a`-range split across threads.
pub fn parallel_search(f: &PlaneQuartic, h: u64) -> CliResult<Vec<ProjPoint>> {
    let h = i64::try_from(h).map_err(|_| Error::LimitExceeded(format!("height bound {h}")))?;
    if h > 100_000 {
        return Err(Error::LimitExceeded(format!("height bound {h} is too large for exhaustive search")).into());
    }
    let sieve = Sieve::new(f);
    let workers = thread::available_parallelism().map_or(1, |n| n.get()).min(h as usize + 1) as i64;
    let chunk = (h + 1 + workers - 1) / workers;
    let mut pts: Vec<ProjPoint> = thread::scope(|s| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let (lo, hi) = (w * chunk, ((w + 1) * chunk - 1).min(h));
                let sieve = &sieve;
                s.spawn(move || if lo <= hi { search_points_range(f, sieve, h, lo..=hi) } else { Vec::new() })
            })
            .collect();
        handles.into_iter().flat_map(|t| t.join().expect("search worker")).collect()
    });
    pts.sort();
    Ok(pts)
}

fn moduli_report(loaded: &LoadedModel, md: &ModularData, pts: &[ProjPoint]) -> CliResult<(Vec<Value>, Vec<String>)> {
    let mut json = Vec::new();
    let mut text = Vec::new();
    for p in pts {
        let m = moduli_point(p, &loaded.theta, md, Some(loaded.ctx.k_radicand()))?;
        json.push(moduli_json(&m));
        text.push(moduli_text(&m));
    }
    Ok((json, text))
}

pub fn points(artifact: &ModelArtifact, cfg: &CommandConfig, md: &ModularData) -> CliResult<Report> {
    cfg.check()?;
    let loaded = artifact.load(md)?;
    let pts = parallel_search(&loaded.quartic, cfg.height)?;
    let (json, text) = moduli_report(&loaded, md, &pts)?;
    Ok(Report::ok(
        json!({ "quartic": loaded.quartic.to_string(), "height": cfg.height, "points": json }),
        format!("{} point(s) with height <= {}\n{}", pts.len(), cfg.height, text.join("\n")),
    ))
}

pub fn moduli(artifact: &ModelArtifact, pts: &[[Integer; 3]], md: &ModularData) -> CliResult<Report> {
    let loaded = artifact.load(md)?;
    let pts = pts.iter().map(|c| ProjPoint::new(c.clone())).collect::<Result<Vec<_>, _>>()?;
    for p in &pts {
        if !loaded.quartic.eval(p.coords()).is_zero_elem() {
            return Err(Error::NotOnCurve.into());
        }
    }
    let (json, text) = moduli_report(&loaded, md, &pts)?;
    Ok(Report::ok(json!({ "points": json }), text.join("\n")))
}

/// A requested fibre: an explicit `t` (or `None` for `t = ∞`), or the `t`
/// values under `j = a + b√k`.
#[derive(Clone, Debug)]
pub enum FiberTarget {
    T(Option<Rational>),
    J(Rational, Rational),
}

pub fn fiber(artifact: &ModelArtifact, targets: &[FiberTarget], md: &ModularData) -> CliResult<Report> {
    let loaded = artifact.load(md)?;
    let k = loaded.ctx.k_radicand().clone();
    let mut ts: Vec<(Option<Rational>, Option<QuadraticNumber>)> = Vec::new();
    for target in targets {
        match target {
            FiberTarget::T(t) => ts.push((t.clone(), None)),
            FiberTarget::J(a, b) => {
                let j = QuadraticNumber::new(a.clone(), b.clone(), k.clone());
                let found = t_from_j(md, &j)?;
                if found.is_empty() {
                    return Err(Error::InvalidArgument(format!("no rational t lies under j = {j}")).into());
                }
                ts.extend(found.into_iter().map(|t| (Some(t), Some(j.clone()))));
            }
        }
    }
    let cfg = FiberConfig::default();
    let mut json = Vec::new();
    let mut text = Vec::new();
    for (t, j) in ts {
        let pts = fiber_over_t(&loaded.quartic, &loaded.theta, &loaded.ctx.tower, md, Some(&k), t.as_ref(), &cfg)?;
        let (pj, pt) = moduli_report(&loaded, md, &pts)?;
        let t_str = t.as_ref().map(format_rational).expect("finite t after fiber_over_t");
        json.push(json!({ "t": t_str, "from_j": j.as_ref().map(quadratic_json), "points": pj }));
        text.push(format!("t = {}: {} point(s)\n{}", t_str, pts.len(), pt.join("\n")));
    }
    Ok(Report::ok(json!({ "fibers": json }), text.join("\n")))
}

pub fn oracle(md: &ModularData, cfg: &CommandConfig, ids: &[Identity]) -> CliResult<Report> {
    cfg.check()?;
    let ids = if ids.is_empty() { &Identity::ALL[..] } else { ids };
    let reports = verify_identities(md, ids, cfg.precision)?;
    let pass = reports.iter().all(|r| r.pass);
    let text = reports
        .iter()
        .map(|r| format!("{:<14} N={} {}", r.identity, r.precision, if r.pass { "pass" } else { "FAIL" }))
        .collect::<Vec<_>>()
        .join("\n");
    Ok(Report { json: reports_json(&reports), text, exit: if pass { EXIT_OK } else { EXIT_INTERNAL } })
}

/// Displayed coefficients `a₁..a₁₇` of the two newforms.
pub const F1_PREFIX: [i64; 17] = [1, -1, -1, -1, 1, 1, 0, 3, 1, -1, -4, 1, -2, 0, -1, -1, 2];
pub const F2_PREFIX: [i64; 17] = [1, 1, 0, -1, -1, 0, 0, -3, 0, -1, 4, 0, -2, 0, 0, -1, -2];

/// Oracle identities, newform prefixes, and the twist of
/// `x⁴ − 3x² + 2x + 3` through its rational points.
pub fn selftest(md: &ModularData) -> CliResult<Report> {
    let mut checks: Vec<(String, bool)> = Vec::new();
    let reports = verify_identities(md, &Identity::ALL, 40)?;
    checks.extend(reports.iter().map(|r| (format!("oracle:{}", r.identity), r.pass)));
    for (which, name, prefix) in [(Newform::F1, "f1", F1_PREFIX), (Newform::F2, "f2", F2_PREFIX)] {
        let ok = newform_series(md, which, 18).is_ok_and(|s| s.coeffs[1..] == prefix);
        checks.push((format!("newform:{name}"), ok));
    }
    let pipeline = (|| -> CliResult<bool> {
        let ctx = SplittingContext::new(&parse_poly("x^4-3*x^2+2*x+3")?, 100)?;
        let theta = compute_theta(&fixed_space(&build_w(&md.s_matrices(), &sigma_matrices(&ctx)))?, &ctx)?;
        let model = twisted_model(&theta, md)?;
        let pts = parallel_search(&model.quartic, 10)?;
        let ordinary = pts
            .iter()
            .map(|p| moduli_point(p, &theta, md, Some(ctx.k_radicand())))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(theta.fixed_by_nu_sigma3(&ctx) && !ordinary.is_empty() && ordinary.iter().all(|m| m.t.is_some()))
    })();
    checks.push(("pipeline:example".into(), matches!(pipeline, Ok(true))));
    let pass = checks.iter().all(|c| c.1);
    let json = Value::Array(checks.iter().map(|(n, p)| json!({ "check": n, "pass": p })).collect());
    let text = checks.iter().map(|(n, p)| format!("{n:<22} {}", if *p { "pass" } else { "FAIL" })).collect::<Vec<_>>().join("\n");
    Ok(Report { json, text, exit: if pass { EXIT_OK } else { EXIT_INTERNAL } })
}
