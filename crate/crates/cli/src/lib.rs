//! Command-line front end: argument parsing, report assembly and exit codes.
//!
//! Every command produces a [`RunReport`]. The JSON form goes to stdout (or
//! `--out`), a readable summary goes to stderr. Exit codes: 0 pass, 1
//! certified failure, 2 input error.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use nalgebra::DMatrix;
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use epsymp::exterior::norm2;
use epsymp::io::{format_matrix, parse_matrix, parse_points};
use epsymp::moser::{symplectify, FlowConfig};
use epsymp::polyform::{d, h, h_bound_check, homotopy_identity_check, PolyForm};
use epsymp::random::{random_ellipsoid, seeded_rng};
use epsymp::suite::{run_suite, Scale, DEFAULT_SEED};
use epsymp::symplectic::{
    anti_defect, c_rho, capacity_preservation_check, check_eps_nonexpanding,
    check_eps_nonsqueezing, cubic_z0, defect, defect_decomposition_check, lambda_mu_invariants,
    plane_scaling, rho, rigidity_bound, squeezing_params, Classification, SympContext,
};
use epsymp::Error;

#[derive(Debug, Parser)]
#[command(name = "epsymp", version, about = "Quantitative symplectic linear algebra toolkit")]
pub struct Cli {
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,

    /// Report format on stdout.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Print the wall time to stderr (never part of the report).
    #[arg(long, global = true)]
    pub timing: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ScaleArg {
    Smoke,
    Full,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Defect, λ/μ invariants, classification and decomposition residual.
    Analyze {
        matrix: PathBuf,
        #[arg(long)]
        eps: Option<f64>,
    },
    /// Width and capacity certificates on seeded random and canonical ellipsoids.
    Certify {
        matrix: PathBuf,
        #[arg(long)]
        eps: f64,
        /// Number of random ellipsoids.
        #[arg(long, default_value_t = 50)]
        trials: usize,
    },
    /// Moser correction ψ with all bound checks.
    Symplectify {
        matrix: PathBuf,
        #[arg(long)]
        eps: f64,
        #[arg(long, default_value_t = 1e-3)]
        step: f64,
        /// Write ψ in the matrix text format.
        #[arg(long)]
        psi: Option<PathBuf>,
    },
    /// Constants ρ, z_0, c_ρ, s_I, e_I and K(ε).
    Bounds {
        #[arg(long)]
        eps: f64,
        #[arg(long)]
        n: usize,
    },
    /// Homotopy operator on a polynomial form, with bound margins at points.
    Homotopy {
        polyform: PathBuf,
        /// JSON list of points.
        #[arg(long)]
        points: Option<PathBuf>,
    },
    /// All property suites.
    Suite {
        #[arg(long, value_enum, default_value_t = ScaleArg::Smoke)]
        scale: ScaleArg,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct RunReport {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: Vec<String>,
    pub seed: u64,
    pub inputs_digest: String,
    pub report: Value,
    pub pass: bool,
}

/// An error tied to an exit code.
#[derive(Debug)]
pub enum Failure {
    /// Exit 2.
    Input(String),
    /// Exit 1.
    Certified(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

/// The outcome of a command: the report plus a readable summary.
pub struct Outcome {
    pub report: RunReport,
    pub summary: String,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        if self.report.pass {
            0
        } else {
            1
        }
    }
}

struct Digest256(Sha256);

impl Digest256 {
    fn new(cmd: &str) -> Self {
        let mut s = Sha256::new();
        s.update(cmd.as_bytes());
        Digest256(s)
    }

    fn bytes(&mut self, label: &str, data: &[u8]) {
        self.0.update(label.as_bytes());
        self.0.update((data.len() as u64).to_le_bytes());
        self.0.update(data);
    }

    fn param(&mut self, label: &str, value: impl std::fmt::Debug) {
        self.bytes(label, format!("{value:?}").as_bytes());
    }

    fn finish(self) -> String {
        hex::encode(self.0.finalize())
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_matrix(path: &Path, digest: &mut Digest256) -> Result<DMatrix<f64>, Failure> {
    let text = read(path)?;
    digest.bytes("matrix", text.as_bytes());
    parse_matrix(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialize")
}

fn eps_range(eps: f64) -> Result<(), Failure> {
    if !(0.0..1.0 / std::f64::consts::SQRT_2).contains(&eps) {
        return Err(Failure::Input(format!("eps = {eps} is outside [0, 1/√2)")));
    }
    Ok(())
}

/// Runs a parsed command line; `argv` is echoed into the report.
pub fn run(cli: &Cli, argv: &[String]) -> Result<Outcome, Failure> {
    let command: Vec<String> = argv.iter().skip(1).cloned().collect();
    let build = |digest: Digest256, report: Value, pass: bool| RunReport {
        tool: "epsymp",
        version: env!("CARGO_PKG_VERSION"),
        command: command.clone(),
        seed: cli.seed,
        inputs_digest: digest.finish(),
        report,
        pass,
    };
    match &cli.command {
        Command::Analyze { matrix, eps } => {
            let mut digest = Digest256::new("analyze");
            let phi = load_matrix(matrix, &mut digest)?;
            digest.param("eps", eps);
            let (value, summary) = analyze(&phi, *eps)?;
            Ok(Outcome {
                report: build(digest, value, true),
                summary,
            })
        }
        Command::Certify {
            matrix,
            eps,
            trials,
        } => {
            let mut digest = Digest256::new("certify");
            let phi = load_matrix(matrix, &mut digest)?;
            digest.param("eps", eps);
            digest.param("trials", trials);
            digest.param("seed", cli.seed);
            eps_range(*eps)?;
            let (value, pass, summary) = certify(&phi, *eps, *trials, cli.seed)?;
            Ok(Outcome {
                report: build(digest, value, pass),
                summary,
            })
        }
        Command::Symplectify {
            matrix,
            eps,
            step,
            psi,
        } => {
            let mut digest = Digest256::new("symplectify");
            let phi = load_matrix(matrix, &mut digest)?;
            digest.param("eps", eps);
            digest.param("step", step);
            eps_range(*eps)?;
            let ctx = SympContext::for_matrix(&phi)?;
            let config = FlowConfig {
                step_size: *step,
                ..FlowConfig::default()
            };
            config.validate()?;
            let dfct = defect(&phi, &ctx)?;
            if dfct > *eps {
                return Err(Failure::Certified(format!(
                    "defect {dfct} exceeds eps {eps}"
                )));
            }
            let r = symplectify(&phi, *eps, &config, &ctx)?;
            if let Some(path) = psi {
                fs::write(path, format_matrix(&r.psi_matrix()))
                    .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
            }
            let mut s = String::new();
            let _ = writeln!(s, "input defect      {:.6e}", r.input_defect);
            let _ = writeln!(s, "rho               {:.9}", r.rho);
            let _ = writeln!(s, "steps             {}", r.steps);
            for (name, b) in [
                ("residual defect", r.residual_defect),
                ("|psi - I|", r.displacement),
                ("max column |psi - I|", r.column_displacement),
                ("sigma_min(psi)", r.sandwich_lower),
                ("sigma_max(psi)", r.sandwich_upper),
            ] {
                let _ = writeln!(
                    s,
                    "{name:<21} {:.6e}  bound {:.6e}  {}",
                    b.value,
                    b.bound,
                    verdict(b.pass)
                );
            }
            let pass = r.pass;
            Ok(Outcome {
                report: build(digest, to_value(&r), pass),
                summary: s,
            })
        }
        Command::Bounds { eps, n } => {
            let mut digest = Digest256::new("bounds");
            digest.param("eps", eps);
            digest.param("n", n);
            let (value, summary) = bounds(*eps, *n)?;
            Ok(Outcome {
                report: build(digest, value, true),
                summary,
            })
        }
        Command::Homotopy { polyform, points } => {
            let mut digest = Digest256::new("homotopy");
            let text = read(polyform)?;
            digest.bytes("polyform", text.as_bytes());
            let f: PolyForm = serde_json::from_str(&text)
                .map_err(|e| Failure::Input(format!("{}: {e}", polyform.display())))?;
            let pts = match points {
                Some(p) => {
                    let t = read(p)?;
                    digest.bytes("points", t.as_bytes());
                    parse_points(&t)?
                }
                None => Vec::new(),
            };
            let (value, pass, summary) = homotopy(&f, &pts)?;
            Ok(Outcome {
                report: build(digest, value, pass),
                summary,
            })
        }
        Command::Suite { scale } => {
            let mut digest = Digest256::new("suite");
            let scale = match scale {
                ScaleArg::Smoke => Scale::Smoke,
                ScaleArg::Full => Scale::Full,
            };
            digest.param("scale", scale);
            digest.param("seed", cli.seed);
            let r = run_suite(cli.seed, scale);
            let mut s = String::new();
            for c in &r.checks {
                let _ = writeln!(
                    s,
                    "{} {:<28} {:>6} cases  {:>3} failures  {} = {:.3e}",
                    verdict(c.pass),
                    c.name,
                    c.cases,
                    c.failures,
                    c.metric,
                    c.worst
                );
            }
            let pass = r.pass;
            Ok(Outcome {
                report: build(digest, to_value(&r), pass),
                summary: s,
            })
        }
    }
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn analyze(phi: &DMatrix<f64>, eps: Option<f64>) -> Result<(Value, String), Failure> {
    let ctx = SympContext::for_matrix(phi)?;
    let dfct = defect(phi, &ctx)?;
    let anti = anti_defect(phi, &ctx)?;
    let lm = lambda_mu_invariants(phi, &ctx)?;
    let mut s = String::new();
    let _ = writeln!(s, "n                 {}", ctx.n());
    let _ = writeln!(s, "defect            {dfct:.12}");
    let _ = writeln!(s, "anti-defect       {anti:.12}");
    let _ = writeln!(s, "classification    {:?}", lm.classification);
    let _ = writeln!(s, "  j   lambda         mu             sign");
    for j in 0..lm.lambdas.len() {
        let _ = writeln!(
            s,
            "  {:<3} {:<14.9} {:<14.9} {:+}",
            j + 1,
            lm.lambdas[j],
            lm.mus[j],
            lm.signs[j]
        );
    }
    let decomposition = if lm.classification == Classification::Singular {
        let _ = writeln!(s, "decomposition     skipped (singular matrix)");
        Value::Null
    } else {
        let c = defect_decomposition_check(phi, &ctx)?;
        let _ = writeln!(s, "decomposition     relative residual {:.3e}", c.rel_error);
        to_value(&c)
    };
    let within = eps.map(|e| dfct <= e);
    if let (Some(e), Some(w)) = (eps, within) {
        let _ = writeln!(s, "defect <= {e}     {w}");
    }
    let value = json!({
        "n": ctx.n(),
        "defect": dfct,
        "antiDefect": anti,
        "invariants": lm,
        "decomposition": decomposition,
        "eps": eps,
        "withinEps": within,
    });
    Ok((value, s))
}

/// `I` and the plane scalings `Δ(r_1, …, r_n)` with `r_j ∈ {0.5, 1, 2}`
/// (limited to 27 members).
fn canonical_ellipsoids(ctx: &SympContext) -> Vec<DMatrix<f64>> {
    let n = ctx.n();
    let grid = [0.5, 1.0, 2.0];
    let mut out = vec![DMatrix::identity(ctx.dim(), ctx.dim())];
    let total = 3usize.pow(n.min(3) as u32);
    for code in 0..total {
        let mut c = code;
        let radii: Vec<f64> = (0..n)
            .map(|j| {
                if j < 3 {
                    let r = grid[c % 3];
                    c /= 3;
                    r
                } else {
                    1.0
                }
            })
            .collect();
        out.push(plane_scaling(&radii));
    }
    out
}

fn certify(
    phi: &DMatrix<f64>,
    eps: f64,
    trials: usize,
    seed: u64,
) -> Result<(Value, bool, String), Failure> {
    let ctx = SympContext::for_matrix(phi)?;
    let mut rng = seeded_rng(seed);
    let mut batch = canonical_ellipsoids(&ctx);
    let canonical = batch.len();
    batch.extend((0..trials).map(|_| random_ellipsoid(&ctx, &mut rng)));
    let reports = [
        check_eps_nonsqueezing(phi, eps, &batch, &ctx)?,
        check_eps_nonexpanding(phi, eps, &batch, &ctx)?,
        capacity_preservation_check(phi, eps, &batch, &ctx)?,
    ];
    let pass = reports.iter().all(|r| r.pass);
    let mut s = String::new();
    let _ = writeln!(
        s,
        "ellipsoids        {canonical} canonical + {trials} random"
    );
    let _ = writeln!(s, "defect            {:.6e}", defect(phi, &ctx)?);
    for r in &reports {
        let failed = r.records.iter().filter(|x| !x.pass).count();
        let _ = writeln!(
            s,
            "{} {:<22} {} records, {} failed, {} skipped",
            verdict(r.pass),
            r.check,
            r.records.len(),
            failed,
            r.skipped
        );
        if let Some(f) = r.records.iter().find(|x| !x.pass) {
            let _ = writeln!(
                s,
                "     first failure: record {} {:?}  r1 = {:.6}  R1 = {:.6}  bound = {:.6}",
                f.index, f.clause, f.r1, f.big_r1, f.bound
            );
        }
    }
    let value = json!({
        "eps": eps,
        "canonicalEllipsoids": canonical,
        "randomEllipsoids": trials,
        "certificates": reports,
    });
    Ok((value, pass, s))
}

fn bounds(eps: f64, n: usize) -> Result<(Value, String), Failure> {
    let z = cubic_z0();
    if !(0.0..z.threshold).contains(&eps) {
        return Err(Failure::Input(format!(
            "eps = {eps} is outside [0, {:.6})",
            z.threshold
        )));
    }
    let ctx = SympContext::new(n)?;
    let rho_linear = rho(eps, n, true)?;
    let rho_nonlinear = rho(eps, n, false)?;
    let rho_cert = (1.0 - eps).sqrt();
    let c = c_rho(rho_cert)?;
    let id = DMatrix::identity(ctx.dim(), ctx.dim());
    let sq = squeezing_params(&id, eps, &ctx, true)?;
    let k = rigidity_bound(eps, n)?;
    let mut s = String::new();
    let _ = writeln!(s, "rho (linear)      {rho_linear:.12}");
    let _ = writeln!(s, "rho (nonlinear)   {rho_nonlinear:.12}");
    let _ = writeln!(s, "z0                {:.12}", z.bisection);
    let _ = writeln!(s, "1 - z0^2          {:.12}", z.threshold);
    let _ = writeln!(s, "c_rho             {c:.12}");
    let _ = writeln!(s, "s_I               {:.12}", sq.s_a);
    match sq.e_a {
        Some(e) => {
            let _ = writeln!(s, "e_I               {e:.12}");
        }
        None => {
            let _ = writeln!(s, "e_I               undefined");
        }
    }
    let _ = writeln!(s, "K(eps)            {:.12}", k.value);
    let value = json!({
        "eps": eps,
        "n": n,
        "rhoLinear": rho_linear,
        "rhoNonlinear": rho_nonlinear,
        "z0": z,
        "cRho": c,
        "sI": sq.s_a,
        "eI": sq.e_a,
        "rigidity": k,
    });
    Ok((value, s))
}

fn homotopy(f: &PolyForm, points: &[Vec<f64>]) -> Result<(Value, bool, String), Failure> {
    let (m, k) = (f.dim(), f.degree());
    if k == 0 || k >= m {
        return Err(Failure::Input(format!("degree {k} is outside 1 <= k < m = {m}")));
    }
    let hf = h(f)?;
    let identity = homotopy_identity_check(f)?;
    let df = d(f)?;
    let closed = df.is_zero();
    let primitive = closed && d(&hf)? == *f;
    let bound = if points.is_empty() {
        None
    } else {
        let radius = points
            .iter()
            .map(|p| p.iter().map(|v| v * v).sum::<f64>().sqrt())
            .fold(0.0, f64::max);
        Some(h_bound_check(f, points, radius)?)
    };
    let bound_ok = bound.as_ref().map_or(true, |b| b.pass);
    let pass = identity && bound_ok && (!closed || primitive);
    let mut s = String::new();
    let _ = writeln!(s, "f                 {f}");
    let _ = writeln!(s, "h f               {hf}");
    let _ = writeln!(s, "h d + d h = id    {identity}");
    if closed {
        let _ = writeln!(s, "f closed, d h f = f  {primitive}");
    }
    if let Some(b) = &bound {
        let _ = writeln!(
            s,
            "bounds            {} points, min margin {:.3e}  {}",
            b.points.len(),
            b.min_margin,
            verdict(b.pass)
        );
        for p in &b.points {
            let _ = writeln!(
                s,
                "  |x| = {:.4}  |h f(x)| = {:.6e}  margin = {:.6e}{}",
                p.x.iter().map(|v| v * v).sum::<f64>().sqrt(),
                p.lhs,
                p.margin,
                p.ray_margin
                    .map(|r| format!("  ray margin = {r:.6e}"))
                    .unwrap_or_default()
            );
        }
    }
    let evaluated: Vec<Value> = points
        .iter()
        .map(|p| {
            let c = hf.evaluate(p).expect("dimension checked by the bound check");
            json!({ "x": p, "hf": c, "norm": norm2(&c) })
        })
        .collect();
    let value = json!({
        "m": m,
        "k": k,
        "h": hf,
        "hText": hf.to_string(),
        "identity": identity,
        "closed": closed,
        "primitive": if closed { Some(primitive) } else { None },
        "bounds": bound,
        "values": evaluated,
    });
    Ok((value, pass, s))
}

/// Renders a report in the requested format.
pub fn render(report: &RunReport, summary: &str, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Text => {
            format!(
                "{}{}\n",
                summary,
                if report.pass { "PASS" } else { "FAIL" }
            )
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_batch_sizes() {
        for (n, len) in [(1, 4), (2, 10), (3, 28), (5, 28)] {
            let ctx = SympContext::new(n).unwrap();
            assert_eq!(canonical_ellipsoids(&ctx).len(), len);
        }
    }

    #[test]
    fn digest_depends_on_every_part() {
        let base = |cmd: &str, data: &[u8], eps: f64| {
            let mut d = Digest256::new(cmd);
            d.bytes("matrix", data);
            d.param("eps", eps);
            d.finish()
        };
        let a = base("certify", b"n 1\n1 0\n0 1\n", 0.1);
        assert_eq!(a, base("certify", b"n 1\n1 0\n0 1\n", 0.1));
        assert_ne!(a, base("analyze", b"n 1\n1 0\n0 1\n", 0.1));
        assert_ne!(a, base("certify", b"n 1\n1 0\n0 2\n", 0.1));
        assert_ne!(a, base("certify", b"n 1\n1 0\n0 1\n", 0.2));
    }

    #[test]
    fn eps_range_is_half_open() {
        assert!(eps_range(0.0).is_ok());
        assert!(eps_range(0.7).is_ok());
        assert!(eps_range(std::f64::consts::FRAC_1_SQRT_2).is_err());
        assert!(eps_range(-0.1).is_err());
    }

    #[test]
    fn homotopy_rejects_top_degree() {
        let f = PolyForm::zero(2, 2).unwrap();
        assert!(matches!(homotopy(&f, &[]), Err(Failure::Input(_))));
    }
}
