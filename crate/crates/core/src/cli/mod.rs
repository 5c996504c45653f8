//! Command-line front end.
//!
//! Every subcommand produces one JSON document on success or failure.
//! Exit codes: 0 success, 1 a verification failed, 2 bad usage or input.

pub mod catalog;
pub mod expr;
mod render;

use std::ffi::OsString;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::equivalence::{sacksteder_to_bourgain, EquivalenceError};
use crate::hypersurface::{Hypersurface, ParamMap, SurfaceError};
use crate::polyring::{rational_string, PolyError, Polynomial, Rational, VarContext};
use crate::projgeom::GeomError;
use crate::ruled::{
    envelope, focal_points_on_generator, focal_system, gauss_map, pencil_structure_report,
    LineFamily, RuledError,
};
use crate::sampling::{SampleConfig, DEFAULT_SEED};

use expr::ParseError;

#[derive(Parser, Debug)]
#[command(
    name = "torsal",
    version,
    about = "Exact analysis of tangentially degenerate cubic hypersurfaces"
)]
struct Cli {
    /// Seed for every sampled check.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Emit JSON (the default).
    #[arg(long, global = true, conflicts_with = "pretty")]
    json: bool,
    /// Emit aligned human-readable text instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse a polynomial and print its canonical form.
    ParseCheck {
        expr: String,
        #[arg(long, default_value = "z0,z1,z2,z3,z4")]
        vars: String,
    },
    /// Gradient generators and certified singular coordinate planes.
    SingularLocus(SurfaceArgs),
    /// Check that a parametrization lies on a surface.
    VerifyParametrization(MapArgs),
    /// Generic rank of the Gauss map along a parametrization.
    GaussRank(MapArgs),
    /// Envelope of a one-parameter family of lines.
    Envelope {
        #[arg(long, default_value = "p^2*z1 + p*z2 - z3")]
        family: String,
        #[arg(long, default_value = "p")]
        param: String,
        #[arg(long, default_value = "p,z1,z2,z3")]
        vars: String,
    },
    /// Focal points on the ruling through the frame at (p, q).
    Focal {
        #[command(flatten)]
        surface: SurfaceArgs,
        #[arg(long, default_value = "0", allow_hyphen_values = true, value_parser = parse_rational)]
        p: Rational,
        #[arg(long, default_value = "0", allow_hyphen_values = true, value_parser = parse_rational)]
        q: Rational,
    },
    /// Pencil structure of the rulings.
    PencilReport(SurfaceArgs),
    /// Identify the half-angle Sacksteder cubic with the Bourgain cubic.
    EquivalenceCheck,
    /// List the built-in surfaces.
    Catalog,
}

#[derive(Args, Debug)]
struct SurfaceArgs {
    /// Name of a built-in surface (see `catalog`).
    #[arg(long, default_value = "bourgain", conflicts_with = "poly")]
    surface: String,
    /// A homogeneous polynomial instead of a built-in surface.
    #[arg(long)]
    poly: Option<String>,
    /// Variables of `--poly`.
    #[arg(long, default_value = "z0,z1,z2,z3,z4", requires = "poly")]
    vars: String,
}

#[derive(Args, Debug)]
struct MapArgs {
    #[command(flatten)]
    surface: SurfaceArgs,
    /// Five comma-separated component expressions.
    #[arg(long, allow_hyphen_values = true)]
    param_map: String,
    /// Comma-separated parameter names.
    #[arg(long)]
    params: String,
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    s.trim()
        .parse::<Rational>()
        .map_err(|_| format!("`{s}` is not a rational number (expected n or n/d)"))
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Parse(String),
    Input(String),
    Verification(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Verification(_) => 1,
            _ => 2,
        }
    }

    fn to_json(&self) -> Value {
        let (kind, message) = match self {
            CliError::Usage(m) => ("usage", m),
            CliError::Parse(m) => ("parse", m),
            CliError::Input(m) => ("input", m),
            CliError::Verification(m) => ("verification", m),
        };
        json!({ "error": { "kind": kind, "message": message } })
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Parse(e.to_string())
    }
}

impl From<PolyError> for CliError {
    fn from(e: PolyError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<GeomError> for CliError {
    fn from(e: GeomError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<SurfaceError> for CliError {
    fn from(e: SurfaceError) -> Self {
        match e {
            SurfaceError::NotOnSurface(_) | SurfaceError::SingularPoint { .. } => {
                CliError::Verification(e.to_string())
            }
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<RuledError> for CliError {
    fn from(e: RuledError) -> Self {
        match e {
            RuledError::NotContained(_)
            | RuledError::Verification(_)
            | RuledError::AllSamplesDegenerate(_) => CliError::Verification(e.to_string()),
            RuledError::Surface(s) => s.into(),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<EquivalenceError> for CliError {
    fn from(e: EquivalenceError) -> Self {
        CliError::Verification(e.to_string())
    }
}

type CliResult = Result<(i32, Value), CliError>;

/// Parses `argv` (program name first), runs the subcommand, and returns
/// the exit code with the text to print.
pub fn run<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => (0, e.render().to_string()),
                _ => {
                    let err = CliError::Usage(e.render().to_string().trim_end().to_string());
                    (err.code(), err.to_json().to_string())
                }
            };
        }
    };
    let cfg = SampleConfig::with_seed(cli.seed.unwrap_or(DEFAULT_SEED));
    let (code, value) = match dispatch(&cli.command, &cfg) {
        Ok(ok) => ok,
        Err(e) => (e.code(), e.to_json()),
    };
    let text = if cli.pretty {
        render::pretty(&value)
    } else {
        value.to_string()
    };
    (code, text)
}

fn dispatch(cmd: &Command, cfg: &SampleConfig) -> CliResult {
    match cmd {
        Command::ParseCheck { expr, vars } => parse_check(expr, vars),
        Command::SingularLocus(s) => singular_locus(s),
        Command::VerifyParametrization(m) => verify_parametrization(m),
        Command::GaussRank(m) => gauss_rank(m, cfg),
        Command::Envelope {
            family,
            param,
            vars,
        } => envelope_cmd(family, param, vars),
        Command::Focal { surface, p, q } => focal(surface, p, q),
        Command::PencilReport(s) => pencil_report(s, cfg),
        Command::EquivalenceCheck => equivalence_check(),
        Command::Catalog => Ok((0, catalog_json())),
    }
}

fn context(list: &str) -> Result<VarContext, CliError> {
    VarContext::parse_list(list).map_err(|e| CliError::Usage(e.to_string()))
}

fn names(ctx: &VarContext) -> Vec<&str> {
    ctx.names().iter().map(String::as_str).collect()
}

fn strings(ps: &[Polynomial]) -> Vec<String> {
    ps.iter().map(Polynomial::to_string).collect()
}

fn rationals(rs: &[Rational]) -> Vec<String> {
    rs.iter().map(rational_string).collect()
}

fn surface(args: &SurfaceArgs) -> Result<(String, Hypersurface), CliError> {
    match &args.poly {
        Some(text) => {
            let f = expr::parse(text, &context(&args.vars)?)?;
            Ok(("custom".into(), Hypersurface::new(f)?))
        }
        None => {
            let entry = catalog::lookup(&args.surface).ok_or_else(|| {
                CliError::Usage(format!(
                    "unknown surface `{}`; known: {}",
                    args.surface,
                    catalog::names().join(", ")
                ))
            })?;
            Ok((entry.name.into(), entry.hypersurface()))
        }
    }
}

fn param_map(args: &MapArgs) -> Result<ParamMap, CliError> {
    let ctx = context(&args.params)?;
    let comps = args
        .param_map
        .split(',')
        .map(|c| expr::parse(c, &ctx))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ParamMap::new(comps)?)
}

fn parse_check(text: &str, vars: &str) -> CliResult {
    let ctx = context(vars)?;
    let f = expr::parse(text, &ctx)?;
    Ok((
        0,
        json!({
            "command": "parse-check",
            "variables": names(&ctx),
            "polynomial": f.to_string(),
            "terms": f.num_terms(),
            "total_degree": f.total_degree(),
            "homogeneous": f.is_homogeneous(),
        }),
    ))
}

fn singular_locus(args: &SurfaceArgs) -> CliResult {
    let (name, h) = surface(args)?;
    let ctx = h.context();
    let planes: Vec<Value> = h
        .certified_singular_subspaces()
        .iter()
        .map(|zs| {
            let vanishing: Vec<&str> = zs.iter().map(|&i| ctx.name(i)).collect();
            json!({
                "vanishing": vanishing,
                "dimension": 4 - zs.len(),
                "equations": format!("{} = 0", vanishing.join(" = ")),
            })
        })
        .collect();
    Ok((
        0,
        json!({
            "command": "singular-locus",
            "surface": name,
            "variables": names(ctx),
            "polynomial": h.polynomial().to_string(),
            "degree": h.degree(),
            "generators": strings(&h.singular_locus_generators()),
            "certified_singular_planes": planes,
        }),
    ))
}

fn verify_parametrization(args: &MapArgs) -> CliResult {
    let (name, h) = surface(&args.surface)?;
    let pm = param_map(args)?;
    let pullback = h.pullback(&pm);
    let contained = pullback.is_zero();
    Ok((
        if contained { 0 } else { 1 },
        json!({
            "command": "verify-parametrization",
            "surface": name,
            "params": pm.params(),
            "components": strings(pm.components()),
            "pullback": pullback.to_string(),
            "contained": contained,
        }),
    ))
}

fn gauss_rank(args: &MapArgs, cfg: &SampleConfig) -> CliResult {
    let (name, h) = surface(&args.surface)?;
    let pm = param_map(args)?;
    let g = gauss_map(&h, &pm)?;
    let report = g.generic_rank(cfg)?;
    Ok((
        0,
        json!({
            "command": "gauss-rank",
            "surface": name,
            "params": pm.params(),
            "gauss_map": strings(g.map().components()),
            "rank": report.rank,
            "per_sample": report.per_sample,
            "samples": report.config.count,
            "seed": report.config.seed,
        }),
    ))
}

fn envelope_cmd(family: &str, param: &str, vars: &str) -> CliResult {
    let ctx = context(vars)?;
    let lf = LineFamily::new(expr::parse(family, &ctx)?, param)?;
    let env = envelope(&lf)?;
    Ok((
        0,
        json!({
            "command": "envelope",
            "family": lf.polynomial().to_string(),
            "parameter": param,
            "method": env.method.to_string(),
            "envelope": env.polynomial.to_string(),
        }),
    ))
}

fn focal(args: &SurfaceArgs, p: &Rational, q: &Rational) -> CliResult {
    let (name, h) = surface(args)?;
    let system = focal_system()?;
    let report = focal_points_on_generator(&h, p, q)?;
    let roots: Vec<Value> = report
        .roots
        .iter()
        .map(|r| {
            json!({
                "lambda": rational_string(&r.lambda),
                "multiplicity": r.multiplicity,
                "point": rationals(r.point.coords()),
                "at_infinity": r.at_infinity,
                "on_conic": r.on_conic,
                "singular": r.singular,
            })
        })
        .collect();
    let matrix: Vec<Vec<String>> = system.matrix.iter().map(|row| strings(row)).collect();
    Ok((
        0,
        json!({
            "command": "focal",
            "surface": name,
            "p": rational_string(&report.p),
            "q": rational_string(&report.q),
            "focal_matrix": matrix,
            "symbolic_determinant": system.determinant.to_string(),
            "determinant": report.determinant.to_string(),
            "roots": roots,
            "residual": report.residual.to_string(),
            "chart_note": report.chart_note,
        }),
    ))
}

fn pencil_report(args: &SurfaceArgs, cfg: &SampleConfig) -> CliResult {
    let (name, h) = surface(args)?;
    let report = pencil_structure_report(&h, cfg)?;
    let checks: Vec<Value> = report
        .checks
        .iter()
        .map(|c| json!({ "name": c.name, "passed": c.passed }))
        .collect();
    Ok((
        0,
        json!({
            "command": "pencil-report",
            "surface": name,
            "seed": cfg.seed,
            "checks": checks,
            "verdict": report.verdict,
        }),
    ))
}

fn equivalence_check() -> CliResult {
    let report = sacksteder_to_bourgain()?;
    let ok = report.verify() && report.final_scalar != Rational::from_integer(0.into());
    let value = serde_json::to_value(&report).expect("plain data");
    Ok((
        if ok { 0 } else { 1 },
        json!({
            "command": "equivalence-check",
            "verified": ok,
            "report": value,
        }),
    ))
}

fn catalog_json() -> Value {
    let entries: Vec<Value> = catalog::CATALOG
        .iter()
        .map(|e| {
            let h = e.hypersurface();
            json!({
                "name": e.name,
                "variables": names(&e.context()),
                "polynomial": e.polynomial().to_string(),
                "hypersurface": h.polynomial().to_string(),
                "degree": h.degree(),
                "affine": e.affine,
                "description": e.description,
            })
        })
        .collect();
    json!({ "command": "catalog", "entries": entries })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, Value) {
        let (code, out) = run(std::iter::once("torsal").chain(args.iter().copied()));
        (
            code,
            serde_json::from_str(&out).unwrap_or_else(|_| panic!("not JSON: {out}")),
        )
    }

    #[test]
    fn singular_locus_of_bourgain() {
        let (code, v) = run_args(&["singular-locus", "--surface", "bourgain"]);
        assert_eq!(code, 0);
        assert_eq!(v["generators"].as_array().unwrap().len(), 5);
        assert_eq!(
            v["certified_singular_planes"][0]["equations"],
            "z0 = z4 = 0"
        );
    }

    #[test]
    fn gauss_rank_of_cylinder() {
        let (code, v) = run_args(&[
            "gauss-rank",
            "--surface",
            "cylinder-control",
            "--param-map",
            "1,t,u,v,t^2",
            "--params",
            "t,u,v",
        ]);
        assert_eq!(code, 0);
        assert_eq!(v["rank"], 1);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_args(&["parse-check", "2z1"]).0, 2);
        assert_eq!(
            run_args(&["parse-check", "z1 + w"]).1["error"]["kind"],
            "parse"
        );
        assert_eq!(run_args(&["singular-locus", "--surface", "nope"]).0, 2);
        assert_eq!(run_args(&["frobnicate"]).0, 2);
        assert_eq!(run_args(&["singular-locus", "--poly", "z0 + z1^2"]).0, 2);
        let (code, v) = run_args(&[
            "verify-parametrization",
            "--param-map",
            "1,u,v,p*v,p",
            "--params",
            "p,u,v",
        ]);
        assert_eq!(code, 1);
        assert_eq!(v["contained"], false);
        assert_eq!(run_args(&["focal", "--surface", "quadric-control"]).0, 1);
        assert_eq!(
            run_args(&["pencil-report", "--surface", "cylinder-control"]).0,
            1
        );
    }

    #[test]
    fn verify_ruling_parametrization() {
        let (code, v) = run_args(&[
            "verify-parametrization",
            "--surface",
            "bourgain",
            "--param-map",
            "1,u,v-p*u,p*v,p",
            "--params",
            "p,u,v",
        ]);
        assert_eq!(code, 0);
        assert_eq!(v["pullback"], "0");
    }

    #[test]
    fn focal_accepts_negative_fractions() {
        let (code, v) = run_args(&["focal", "--p", "-3/2", "--q", "2"]);
        assert_eq!(code, 0);
        assert_eq!(v["p"], "-3/2");
        assert_eq!(v["roots"][0]["multiplicity"], 2);
        assert_eq!(v["roots"][0]["at_infinity"], true);
    }

    #[test]
    fn envelope_default_family() {
        let (code, v) = run_args(&["envelope"]);
        assert_eq!(code, 0);
        assert_eq!(v["envelope"], "4*z1*z3 + z2^2");
        assert_eq!(v["method"], "discriminant");
    }

    #[test]
    fn seed_changes_samples_not_rank() {
        let a = run_args(&[
            "--seed",
            "1",
            "gauss-rank",
            "--param-map",
            "1,u,v-p*u,p*v,p",
            "--params",
            "p,u,v",
        ]);
        let b = run_args(&[
            "gauss-rank",
            "--param-map",
            "1,u,v-p*u,p*v,p",
            "--params",
            "p,u,v",
            "--seed",
            "2",
        ]);
        assert_eq!(a.1["seed"], 1);
        assert_eq!(b.1["seed"], 2);
        assert_eq!(a.1["rank"], 2);
        assert_eq!(b.1["rank"], 2);
    }

    #[test]
    fn pretty_output_is_text() {
        let (code, out) = run(["torsal", "--pretty", "catalog"]);
        assert_eq!(code, 0);
        assert!(out.contains("bourgain-affine"));
        assert!(serde_json::from_str::<Value>(&out).is_err());
        let (code, _) = run(["torsal", "--help"]);
        assert_eq!(code, 0);
    }
}
