//! `sbo`: generate, evaluate and verify standard block orthogonal polynomials.

mod error;
mod render;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use sbo_core::classical::{hermite_table, laguerre_table};
use sbo_core::exact::{fmt_pq, parse_rational};
use sbo_core::zeros::isolate_roots;
use sbo_core::{
    run_suite, sbo_hermite, sbo_laguerre, AlphaScalar, Grid, Poly, PolyFamily, Rational, RootReport, Status, Suite,
};

use error::{usage, CliError};
use render::{csv_field, fmt_float, label, latex_block, latex_label, Coefficient};

#[derive(Parser, Debug)]
#[command(name = "sbo", version, about = "Standard block orthogonal polynomials, exactly")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format; each subcommand has its own default.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Laguerre parameter: a rational such as 1/2, or "symbolic".
    #[arg(long, global = true)]
    alpha: Option<String>,

    /// Block index.
    #[arg(long, global = true)]
    i: Option<usize>,

    /// Degree, or the largest degree for `gen`.
    #[arg(long = "n", visible_alias = "n-max", global = true)]
    n: Option<usize>,

    /// Significant digits in float views.
    #[arg(long, global = true, default_value_t = 12)]
    float_digits: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print P_{i;i} .. P_{i;n_max} (or a classical table).
    Gen { family: FamilyArg },
    /// Evaluate one polynomial at a point.
    Eval {
        family: FamilyArg,
        /// Exact for `p/q` or integer input, float for decimal input.
        #[arg(long, allow_hyphen_values = true)]
        at: String,
    },
    /// Isolate and refine the real zeros of one polynomial.
    Zeros { family: FamilyArg },
    /// Run a verification suite; exit 1 on any failing check.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
        #[arg(long)]
        i_max: Option<usize>,
        /// `n - i` bound for SBO suites, degree bound otherwise.
        #[arg(long)]
        span: Option<usize>,
    },
    /// Tables of the value-at-zero numbers p_{i;n}.
    #[command(name = "table-p0")]
    TableP0 { family: ClassicalArg },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Latex,
    Pretty,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FamilyArg {
    HermiteSbo,
    LaguerreSbo,
    Hermite,
    Laguerre,
}

impl From<FamilyArg> for PolyFamily {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::HermiteSbo => PolyFamily::HermiteSbo,
            FamilyArg::LaguerreSbo => PolyFamily::LaguerreSbo,
            FamilyArg::Hermite => PolyFamily::Hermite,
            FamilyArg::Laguerre => PolyFamily::Laguerre,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ClassicalArg {
    Hermite,
    Laguerre,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SuiteArg {
    Exact,
    Classical,
    Measures,
    SboHermite,
    SboLaguerre,
    Bridge,
    Zeros,
    Oracle,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::Exact => Suite::Exact,
            SuiteArg::Classical => Suite::Classical,
            SuiteArg::Measures => Suite::Measures,
            SuiteArg::SboHermite => Suite::SboHermite,
            SuiteArg::SboLaguerre => Suite::SboLaguerre,
            SuiteArg::Bridge => Suite::Bridge,
            SuiteArg::Zeros => Suite::Zeros,
            SuiteArg::Oracle => Suite::Oracle,
            SuiteArg::All => Suite::All,
        }
    }
}

#[derive(Clone, Debug)]
enum Alpha {
    Symbolic,
    Value(Rational),
}

impl Alpha {
    fn value(&self) -> Option<&Rational> {
        match self {
            Alpha::Value(a) => Some(a),
            Alpha::Symbolic => None,
        }
    }

    fn text(&self) -> String {
        match self {
            Alpha::Value(a) => fmt_pq(a),
            Alpha::Symbolic => "symbolic".into(),
        }
    }
}

/// Resolved common options.
struct Ctx<W: Write> {
    family: PolyFamily,
    alpha: Option<Alpha>,
    format: Format,
    digits: usize,
    out: W,
}

fn parse_alpha(family: PolyFamily, raw: Option<&str>) -> Result<Option<Alpha>, CliError> {
    match (family.is_laguerre(), raw) {
        (false, None) => Ok(None),
        (false, Some(_)) => Err(usage("--alpha applies only to Laguerre families")),
        (true, None | Some("symbolic")) => Ok(Some(Alpha::Symbolic)),
        (true, Some(s)) => {
            let a = parse_rational(s).ok_or_else(|| usage(format!("--alpha: cannot parse '{s}'")))?;
            if a <= Rational::from_integer((-1).into()) {
                return Err(usage(format!("--alpha must exceed -1, got {s}")));
            }
            Ok(Some(Alpha::Value(a)))
        }
    }
}

fn need(v: Option<usize>, flag: &str) -> Result<usize, CliError> {
    v.ok_or_else(|| usage(format!("missing {flag}")))
}

/// Block index for SBO families; classical families take none.
fn block_index(family: PolyFamily, i: Option<usize>) -> Result<Option<usize>, CliError> {
    match (family.is_sbo(), i) {
        (true, Some(i)) => Ok(Some(i)),
        (true, None) => Err(usage("missing --i")),
        (false, None) => Ok(None),
        (false, Some(_)) => Err(usage("--i applies only to SBO families")),
    }
}

fn check_range(i: Option<usize>, n: usize) -> Result<(), CliError> {
    match i {
        Some(i) if i > n => Err(usage(format!("need i <= n, got i={i}, n={n}"))),
        _ => Ok(()),
    }
}

/// `(i, n, P)` rows for `gen`, ascending in `n`.
fn table<S: Coefficient>(family: PolyFamily, i: Option<usize>, n_max: usize, alpha: &S) -> Vec<(usize, Poly<S>)> {
    match family {
        PolyFamily::LaguerreSbo => {
            let i = i.unwrap_or(0);
            let t = sbo_laguerre::four_term_table(n_max, alpha);
            (i..=n_max).map(|n| (n, t.get(i, n).clone())).collect()
        }
        PolyFamily::Laguerre => laguerre_table(n_max, alpha).into_iter().enumerate().collect(),
        _ => unreachable!("Hermite tables are built without α"),
    }
}

fn hermite_rows(family: PolyFamily, i: Option<usize>, n_max: usize) -> Vec<(usize, Poly<Rational>)> {
    match family {
        PolyFamily::HermiteSbo => {
            let i = i.unwrap_or(0);
            let t = sbo_hermite::four_term_table(n_max);
            (i..=n_max).map(|n| (n, t.get(i, n).clone())).collect()
        }
        _ => hermite_table(n_max).into_iter().enumerate().collect(),
    }
}

fn emit_polys<S: Coefficient, W: Write>(
    ctx: &mut Ctx<W>,
    i: Option<usize>,
    rows: &[(usize, Poly<S>)],
) -> Result<(), CliError> {
    let family = ctx.family;
    let alpha = ctx.alpha.as_ref().and_then(Alpha::value).cloned();
    match ctx.format {
        Format::Pretty => {
            for (n, p) in rows {
                writeln!(ctx.out, "{} = {}", label(family, i, *n), p.pretty())?;
            }
        }
        Format::Latex => {
            let body: Vec<_> = rows
                .iter()
                .map(|(n, p)| (latex_label(family, i, *n), p.latex()))
                .collect();
            write!(ctx.out, "{}", latex_block(&body))?;
        }
        Format::Json => {
            let items: Vec<_> = rows
                .iter()
                .map(|(_, p)| S::serialize(family, i, alpha.as_ref(), p))
                .collect();
            writeln!(ctx.out, "{}", serde_json::to_string_pretty(&items)?)?;
        }
        Format::Csv => {
            writeln!(ctx.out, "family,i,n,alpha,degree,coeff_index,coeff")?;
            let a = alpha.as_ref().map(fmt_pq).unwrap_or_default();
            let i_text = i.map(|i| i.to_string()).unwrap_or_default();
            for (n, p) in rows {
                let degree = p.degree().unwrap_or(0);
                for (k, c) in p.coeffs().iter().enumerate() {
                    let v = c
                        .to_float()
                        .ok_or_else(|| usage("csv output needs a numeric --alpha"))?;
                    writeln!(
                        ctx.out,
                        "{family},{i_text},{n},{a},{degree},{k},{}",
                        fmt_float(v, ctx.digits)
                    )?;
                }
            }
        }
    }
    Ok(())
}

fn cmd_gen<W: Write>(ctx: &mut Ctx<W>, i: Option<usize>, n_max: usize) -> Result<(), CliError> {
    check_range(i, n_max)?;
    if ctx.format == Format::Csv && matches!(ctx.alpha, Some(Alpha::Symbolic)) {
        return Err(usage("csv output needs a numeric --alpha"));
    }
    match ctx.alpha.clone() {
        None => {
            let rows = hermite_rows(ctx.family, i, n_max);
            emit_polys(ctx, i, &rows)
        }
        Some(Alpha::Symbolic) => {
            let rows = table(ctx.family, i, n_max, &AlphaScalar::alpha());
            emit_polys(ctx, i, &rows)
        }
        Some(Alpha::Value(a)) => {
            let rows = table(ctx.family, i, n_max, &a);
            emit_polys(ctx, i, &rows)
        }
    }
}

fn single<S: Coefficient>(family: PolyFamily, i: Option<usize>, n: usize, alpha: &S) -> Result<Poly<S>, CliError> {
    Ok(match family {
        PolyFamily::LaguerreSbo => sbo_laguerre::sbo(i.unwrap_or(0), n, alpha)?,
        _ => laguerre_table(n, alpha).swap_remove(n),
    })
}

fn single_hermite(family: PolyFamily, i: Option<usize>, n: usize) -> Result<Poly<Rational>, CliError> {
    Ok(match family {
        PolyFamily::HermiteSbo => sbo_hermite::sbo(i.unwrap_or(0), n)?,
        _ => sbo_core::classical::hermite(n),
    })
}

/// Parsed `--at`: exact for rationals, float view for decimals.
fn parse_point(s: &str) -> Result<(Rational, bool), CliError> {
    if let Ok(r) = s.parse::<Rational>() {
        return Ok((r, true));
    }
    let r = parse_rational(s)
        .or_else(|| s.parse::<f64>().ok().and_then(sbo_core::exact::from_f64))
        .ok_or_else(|| usage(format!("--at: cannot parse '{s}'")))?;
    Ok((r, false))
}

fn emit_value<S: Coefficient, W: Write>(
    ctx: &mut Ctx<W>,
    i: Option<usize>,
    n: usize,
    at: &str,
    value: &S,
    exact: bool,
) -> Result<(), CliError> {
    let text = if exact {
        value.text()
    } else {
        let v = value
            .to_float()
            .ok_or_else(|| usage("float evaluation needs a numeric --alpha"))?;
        fmt_float(v, ctx.digits)
    };
    let alpha = ctx.alpha.as_ref().map(Alpha::text);
    match ctx.format {
        Format::Pretty | Format::Latex => writeln!(ctx.out, "{text}")?,
        Format::Json => {
            let v = if exact { value.json() } else { json!(value.to_float()) };
            let obj = json!({ "family": ctx.family, "i": i, "n": n, "alpha": alpha, "at": at, "value": v });
            writeln!(ctx.out, "{}", serde_json::to_string_pretty(&obj)?)?;
        }
        Format::Csv => {
            writeln!(ctx.out, "family,i,n,alpha,at,value")?;
            let i = i.map(|i| i.to_string()).unwrap_or_default();
            let a = alpha.unwrap_or_default();
            writeln!(
                ctx.out,
                "{},{i},{n},{a},{},{}",
                ctx.family,
                csv_field(at),
                csv_field(&text)
            )?;
        }
    }
    Ok(())
}

fn cmd_eval<W: Write>(ctx: &mut Ctx<W>, i: Option<usize>, n: usize, at: &str) -> Result<(), CliError> {
    check_range(i, n)?;
    let (x, exact) = parse_point(at)?;
    match ctx.alpha.clone() {
        None => {
            let v = single_hermite(ctx.family, i, n)?.eval(&x);
            emit_value(ctx, i, n, at, &v, exact)
        }
        Some(Alpha::Symbolic) => {
            let v = single(ctx.family, i, n, &AlphaScalar::alpha())?.eval_rational(&x);
            emit_value(ctx, i, n, at, &v, exact)
        }
        Some(Alpha::Value(a)) => {
            let v = single(ctx.family, i, n, &a)?.eval(&x);
            emit_value(ctx, i, n, at, &v, exact)
        }
    }
}

#[derive(Serialize)]
struct ZerosOut<'a> {
    family: PolyFamily,
    #[serde(skip_serializing_if = "Option::is_none")]
    i: Option<usize>,
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    alpha: Option<String>,
    #[serde(flatten)]
    report: &'a RootReport,
}

fn cmd_zeros<W: Write>(ctx: &mut Ctx<W>, i: Option<usize>, n: usize) -> Result<(), CliError> {
    check_range(i, n)?;
    let p = match &ctx.alpha {
        None => single_hermite(ctx.family, i, n)?,
        Some(Alpha::Value(a)) => single(ctx.family, i, n, a)?,
        Some(Alpha::Symbolic) => return Err(usage("zeros needs a numeric --alpha")),
    };
    let report = isolate_roots(&p)?;
    let alpha = ctx.alpha.as_ref().map(Alpha::text);
    match ctx.format {
        Format::Json => {
            let out = ZerosOut {
                family: ctx.family,
                i,
                n,
                alpha,
                report: &report,
            };
            writeln!(ctx.out, "{}", serde_json::to_string_pretty(&out)?)?;
        }
        Format::Csv => {
            writeln!(ctx.out, "family,i,n,alpha,root_index,lo,hi,approx")?;
            let i = i.map(|i| i.to_string()).unwrap_or_default();
            let a = alpha.unwrap_or_default();
            for (k, r) in report.roots.iter().enumerate() {
                let (lo, hi) = (fmt_pq(&r.lo), fmt_pq(&r.hi));
                writeln!(
                    ctx.out,
                    "{},{i},{n},{a},{k},{lo},{hi},{}",
                    ctx.family,
                    fmt_float(r.approx, ctx.digits)
                )?;
            }
        }
        Format::Pretty | Format::Latex => {
            writeln!(
                ctx.out,
                "{}: {} real root(s) of degree {}{}",
                label(ctx.family, i, n),
                report.real_root_count,
                report.degree,
                if report.all_simple { ", all simple" } else { "" }
            )?;
            for (k, r) in report.roots.iter().enumerate() {
                writeln!(ctx.out, "x_{} = {}", k + 1, fmt_float(r.approx, ctx.digits))?;
            }
        }
    }
    Ok(())
}

fn p0_rows<S: Coefficient>(i: usize, n: usize, alpha: &S) -> Result<Vec<(usize, S)>, CliError> {
    let t = sbo_laguerre::p_alpha_table(i, n, alpha)?;
    Ok(t.values.into_iter().enumerate().map(|(k, v)| (i + k, v)).collect())
}

fn emit_p0<S: Coefficient, W: Write>(ctx: &mut Ctx<W>, i: usize, rows: &[(usize, S)]) -> Result<(), CliError> {
    let sup = if ctx.family.is_laguerre() { "^(α)" } else { "" };
    let alpha = ctx.alpha.as_ref().map(Alpha::text);
    match ctx.format {
        Format::Pretty => {
            for (n, v) in rows {
                writeln!(ctx.out, "p_{{{i};{n}}}{sup} = {}", v.text())?;
            }
        }
        Format::Latex => {
            let sup = if ctx.family.is_laguerre() { "^{(\\alpha)}" } else { "" };
            let body: Vec<_> = rows
                .iter()
                .map(|(n, v)| (format!("p_{{{i};{n}}}{sup}"), Poly::constant(v.clone()).latex()))
                .collect();
            write!(ctx.out, "{}", latex_block(&body))?;
        }
        Format::Json => {
            let items: Vec<_> = rows
                .iter()
                .map(|(n, v)| json!({ "family": ctx.family, "i": i, "n": n, "alpha": alpha, "value": v.json() }))
                .collect();
            writeln!(ctx.out, "{}", serde_json::to_string_pretty(&items)?)?;
        }
        Format::Csv => {
            writeln!(ctx.out, "family,i,n,alpha,value")?;
            let a = alpha.unwrap_or_default();
            for (n, v) in rows {
                let f = v
                    .to_float()
                    .ok_or_else(|| usage("csv output needs a numeric --alpha"))?;
                writeln!(ctx.out, "{},{i},{n},{a},{}", ctx.family, fmt_float(f, ctx.digits))?;
            }
        }
    }
    Ok(())
}

fn cmd_table_p0<W: Write>(ctx: &mut Ctx<W>, family: ClassicalArg, i: usize, n: usize) -> Result<(), CliError> {
    check_range(Some(i), n)?;
    match (family, ctx.alpha.clone()) {
        (ClassicalArg::Hermite, _) => {
            let t = sbo_hermite::p_table(i, n)?;
            let rows: Vec<_> = t.values.into_iter().enumerate().map(|(k, v)| (i + k, v)).collect();
            emit_p0(ctx, i, &rows)
        }
        (ClassicalArg::Laguerre, Some(Alpha::Value(a))) => {
            let rows = p0_rows(i, n, &a)?;
            emit_p0(ctx, i, &rows)
        }
        (ClassicalArg::Laguerre, _) => {
            let rows = p0_rows(i, n, &AlphaScalar::alpha())?;
            emit_p0(ctx, i, &rows)
        }
    }
}

fn cmd_verify<W: Write>(ctx: &mut Ctx<W>, suite: Suite, grid: Grid) -> Result<bool, CliError> {
    let report = run_suite(suite, grid);
    let passed = report.passed();
    match ctx.format {
        Format::Json | Format::Latex => {
            let obj = json!({
                "suite": suite.name(),
                "passed": passed,
                "summary": {
                    "checks": report.checks.len(),
                    "pass": report.count(Status::Pass),
                    "fail": report.count(Status::Fail),
                    "expected_negative": report.count(Status::ExpectedNegative),
                },
                "checks": report.checks,
            });
            writeln!(ctx.out, "{}", serde_json::to_string_pretty(&obj)?)?;
        }
        Format::Csv => {
            writeln!(ctx.out, "suite,tag,instance,status")?;
            for c in &report.checks {
                let status = serde_json::to_value(c.status)?;
                let status = status.as_str().unwrap_or_default();
                writeln!(ctx.out, "{},{},{},{status}", c.suite, c.tag, csv_field(&c.instance))?;
            }
        }
        Format::Pretty => {
            writeln!(ctx.out, "{suite}: {}", report.summary())?;
            for c in report.failures() {
                writeln!(
                    ctx.out,
                    "FAIL {} [{}] {}",
                    c.tag,
                    c.instance,
                    c.detail.as_deref().unwrap_or("")
                )?;
            }
        }
    }
    Ok(passed)
}

fn run(cli: Cli) -> Result<bool, CliError> {
    let out = io::stdout().lock();
    match cli.command {
        Command::Verify { suite, i_max, span } => {
            let mut ctx = Ctx {
                family: PolyFamily::HermiteSbo,
                alpha: None,
                format: cli.format.unwrap_or(Format::Json),
                digits: cli.float_digits,
                out,
            };
            let grid = Grid {
                i_max,
                span: span.or(cli.n),
            };
            cmd_verify(&mut ctx, suite.into(), grid)
        }
        Command::TableP0 { family } => {
            let fam = match family {
                ClassicalArg::Hermite => PolyFamily::Hermite,
                ClassicalArg::Laguerre => PolyFamily::Laguerre,
            };
            let mut ctx = Ctx {
                family: fam,
                alpha: parse_alpha(fam, cli.alpha.as_deref())?,
                format: cli.format.unwrap_or(Format::Pretty),
                digits: cli.float_digits,
                out,
            };
            cmd_table_p0(&mut ctx, family, need(cli.i, "--i")?, need(cli.n, "--n")?).map(|_| true)
        }
        Command::Gen { family } | Command::Eval { family, .. } | Command::Zeros { family } => {
            let fam = PolyFamily::from(family);
            let i = block_index(fam, cli.i)?;
            let default_format = if matches!(cli.command, Command::Zeros { .. }) {
                Format::Json
            } else {
                Format::Pretty
            };
            let mut ctx = Ctx {
                family: fam,
                alpha: parse_alpha(fam, cli.alpha.as_deref())?,
                format: cli.format.unwrap_or(default_format),
                digits: cli.float_digits,
                out,
            };
            let n = need(cli.n, "--n")?;
            match &cli.command {
                Command::Gen { .. } => cmd_gen(&mut ctx, i, n),
                Command::Eval { at, .. } => cmd_eval(&mut ctx, i, n, at),
                _ => cmd_zeros(&mut ctx, i, n),
            }
            .map(|_| true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
