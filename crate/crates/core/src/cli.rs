//! Batch command-line front end.

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::Error;
use crate::expr::{eval_expr, expr_to_srpoly, parse_expr, parse_quaternion, print_expr, Expr, SRPoly};
use crate::oracle::RandomSpec;
use crate::quat::{default_probes, ImagUnit, ProbePair};
use crate::slice::{level_on_slice, qbar_taylor, restrict, split_poly, Level};
use crate::structure::{generic_index, level_json, osp_product, product_level, star_product};
use crate::verify::{run_suite, SuiteReport, SUITES};

#[derive(Parser, Debug)]
#[command(name = "polyreg", about = "Exact polyregularity analysis of quaternionic polynomials")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum ProductOp {
    Dot,
    Star,
    Osp,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Per-slice and global level of an expression.
    Level {
        #[arg(long)]
        expr: String,
        #[arg(long, default_value = "default")]
        probes: String,
    },
    /// qbar-Taylor decomposition on one slice.
    Linearize {
        #[arg(long)]
        expr: String,
        #[arg(long)]
        slice: String,
    },
    /// Splitting of the restriction to a slice along a perpendicular unit.
    Split {
        #[arg(long)]
        expr: String,
        #[arg(long)]
        slice: String,
        #[arg(long)]
        perp: String,
    },
    /// Levels of the generic element `q^n a q^m`.
    Index {
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        m: u32,
        #[arg(long, default_value = "default")]
        probes: String,
    },
    /// Dot, star or qbar-decomposition product of two polynomials.
    Product {
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
        #[arg(long, value_enum)]
        op: ProductOp,
        #[arg(long, default_value = "default")]
        probes: String,
        /// Restrict the `osp` product to a single slice.
        #[arg(long)]
        slice: Option<String>,
    },
    /// Run a verification suite, or `all`.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        trials: Option<u32>,
    },
    /// Evaluate an expression at a quaternion.
    Eval {
        #[arg(long)]
        expr: String,
        #[arg(long)]
        at: String,
    },
}

enum Failure {
    Usage(String),
    Math(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(format!("error: {e}"))
    }
}

/// Runs one command; returns the exit code and everything meant for stdout.
pub fn run<I, S>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let args = std::iter::once(std::ffi::OsString::from("polyreg")).chain(argv.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.render().to_string());
        }
    };
    match dispatch(&cli) {
        Ok(out) => (0, out),
        Err(Failure::Math(out)) => (1, out),
        Err(Failure::Usage(msg)) => (2, msg),
    }
}

fn expr_arg(text: &str) -> Result<Expr, Failure> {
    parse_expr(text).map_err(|e| Failure::Usage(format!("error in `{text}`: {e}")))
}

fn unit_arg(text: &str) -> Result<ImagUnit, Failure> {
    let q = parse_quaternion(text).map_err(|e| Failure::Usage(format!("error in `{text}`: {e}")))?;
    Ok(ImagUnit::new(q)?)
}

fn poly_arg(text: &str) -> Result<SRPoly, Failure> {
    Ok(expr_to_srpoly(&expr_arg(text)?)?)
}

/// `default`, or a file with one `I;J` pair per line (`#` starts a comment).
pub fn load_probes(arg: &str) -> Result<Vec<ProbePair>, Error> {
    if arg == "default" {
        return Ok(default_probes());
    }
    let text = std::fs::read_to_string(arg).map_err(|e| Error::InvalidArg(format!("{arg}: {e}")))?;
    parse_probe_file(&text)
}

pub fn parse_probe_file(text: &str) -> Result<Vec<ProbePair>, Error> {
    let mut out = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let bad = |msg: String| Error::InvalidArg(format!("probe file line {}: {msg}", n + 1));
        let (a, b) = line.split_once(';').ok_or_else(|| bad("expected `I;J`".into()))?;
        let i = parse_quaternion(a.trim()).map_err(|e| bad(e.to_string()))?;
        let j = parse_quaternion(b.trim()).map_err(|e| bad(e.to_string()))?;
        let i = ImagUnit::new(i).map_err(|e| bad(e.to_string()))?;
        let j = ImagUnit::new(j).map_err(|e| bad(e.to_string()))?;
        out.push(ProbePair::new(i, j).map_err(|e| bad(e.to_string()))?);
    }
    if out.is_empty() {
        return Err(Error::EmptyProbeSet);
    }
    Ok(out)
}

fn render(format: Format, value: Value, text: String) -> String {
    match format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&value).expect("serializable")),
        Format::Text => text,
    }
}

fn dispatch(cli: &Cli) -> Result<String, Failure> {
    let fmt = cli.format;
    match &cli.command {
        Command::Level { expr, probes } => {
            let e = expr_arg(expr)?;
            let probes = load_probes(probes)?;
            let levels: Vec<(ImagUnit, Level)> =
                probes.iter().map(|p| (p.i.clone(), level_on_slice(&restrict(&e, &p.i)))).collect();
            let global = levels.iter().map(|(_, l)| *l).max().expect("nonempty probe set");
            let per: Vec<Value> =
                levels.iter().map(|(u, l)| json!({"I": u.to_string(), "level": level_json(*l)})).collect();
            let mut text = format!("expr: {}\n", print_expr(&e));
            for (u, l) in &levels {
                text += &format!("I={u}: level {l}\n");
            }
            text += &format!("global level: {global}\n");
            let value = json!({"expr": print_expr(&e), "per_slice": per, "global": {"level": level_json(global)}});
            Ok(render(fmt, value, text))
        }
        Command::Linearize { expr, slice } => {
            let e = expr_arg(expr)?;
            let unit = unit_arg(slice)?;
            let d = qbar_taylor(&restrict(&e, &unit))?;
            let mut text = format!("expr: {}\nI={unit}\n", print_expr(&e));
            let mut parts = Vec::new();
            for (k, phi) in d.parts.iter().enumerate() {
                text += &format!("phi_{k} = {phi}\n");
                parts.push(json!({"k": k, "phi": phi.to_string()}));
            }
            let value = json!({"expr": print_expr(&e), "I": unit.to_string(), "parts": parts});
            Ok(render(fmt, value, text))
        }
        Command::Split { expr, slice, perp } => {
            let e = expr_arg(expr)?;
            let pair = ProbePair::new(unit_arg(slice)?, unit_arg(perp)?)?;
            let s = split_poly(&restrict(&e, &pair.i), &pair)?;
            let text = format!("I={} J={}\nF = {}\nG = {}\n", pair.i, pair.j, s.f_poly(), s.g_poly());
            Ok(render(fmt, s.to_json(), text))
        }
        Command::Index { alpha, m, probes } => {
            let a = parse_quaternion(alpha).map_err(|e| Failure::Usage(format!("error in `{alpha}`: {e}")))?;
            let probes = load_probes(probes)?;
            let r = generic_index(&a, *m, &probes);
            let mut text = format!("A(n,{m}|{a})\n");
            for (s, rho) in r.per_slice.iter().zip(&r.literal_rho) {
                text += &format!("I={}: level {} (rho {})\n", s.unit, s.value, rho.value);
            }
            text += &format!("global level: {}\n", r.global);
            Ok(render(fmt, r.to_json(), text))
        }
        Command::Product { f, g, op, probes, slice } => product(fmt, f, g, *op, probes, slice.as_deref()),
        Command::Verify { suite, seed, trials } => verify(fmt, suite, *seed, *trials),
        Command::Eval { expr, at } => {
            let e = expr_arg(expr)?;
            let q = parse_quaternion(at).map_err(|err| Failure::Usage(format!("error in `{at}`: {err}")))?;
            let v = eval_expr(&e, &q);
            let value = json!({"expr": print_expr(&e), "at": q.to_string(), "value": v.to_string()});
            Ok(render(fmt, value, format!("{v}\n")))
        }
    }
}

fn product(
    fmt: Format,
    f: &str,
    g: &str,
    op: ProductOp,
    probes: &str,
    slice: Option<&str>,
) -> Result<String, Failure> {
    let probes = load_probes(probes)?;
    match op {
        ProductOp::Dot => {
            let (fp, gp) = (poly_arg(f)?, poly_arg(g)?);
            let r = product_level(&fp, &gp, &probes)?;
            let mut text = format!("f = {fp}\ng = {gp}\n");
            for (s, p) in r.per_slice.iter().zip(&r.predicted) {
                text += &format!("I={}: level {} (predicted <= {})\n", s.unit, s.value, p.value);
            }
            text += &format!("global level: {}\n", r.global);
            if let Some(b) = r.predicted_bound {
                text += &format!("predicted bound: {b}\n");
            }
            Ok(render(fmt, r.to_json(), text))
        }
        ProductOp::Star => {
            let (fp, gp) = (poly_arg(f)?, poly_arg(g)?);
            let s = star_product(&fp, &gp);
            let levels: Vec<(ImagUnit, Level)> = probes
                .iter()
                .map(|p| (p.i.clone(), level_on_slice(&crate::slice::restrict_srpoly(&s, &p.i))))
                .collect();
            let mut text = format!("f * g = {s}\n");
            for (u, l) in &levels {
                text += &format!("I={u}: level {l}\n");
            }
            let per: Vec<Value> =
                levels.iter().map(|(u, l)| json!({"I": u.to_string(), "level": level_json(*l)})).collect();
            Ok(render(fmt, json!({"product": s.to_string(), "per_slice": per}), text))
        }
        ProductOp::Osp => {
            let (fe, ge) = (expr_arg(f)?, expr_arg(g)?);
            let units: Vec<ImagUnit> = match slice {
                Some(s) => vec![unit_arg(s)?],
                None => probes.iter().map(|p| p.i.clone()).collect(),
            };
            let mut text = String::new();
            let mut per = Vec::new();
            for unit in &units {
                let fd = qbar_taylor(&restrict(&fe, unit))?;
                let gd = qbar_taylor(&restrict(&ge, unit))?;
                let p = osp_product(&fd.parts, &gd.parts, unit);
                let l = level_on_slice(&p);
                text += &format!("I={unit}: {p} (level {l})\n");
                per.push(json!({"I": unit.to_string(), "product": p.to_json(), "level": level_json(l)}));
            }
            Ok(render(fmt, json!({"per_slice": per}), text))
        }
    }
}

fn suite_text(r: &SuiteReport) -> String {
    let status = if r.passed() { "PASS" } else { "FAIL" };
    let mut out = format!("{status} {}: {} trials, {} failures\n", r.suite, r.trials, r.failures.len());
    for f in r.failures.iter().take(5) {
        out += &format!("  {}: expected {}, got {}\n", f.instance, f.expected, f.actual);
    }
    for n in &r.notes {
        out += &format!("  note: {n}\n");
    }
    out
}

fn verify(fmt: Format, suite: &str, seed: Option<u64>, trials: Option<u32>) -> Result<String, Failure> {
    let names: Vec<&str> = if suite == "all" { SUITES.to_vec() } else { vec![suite] };
    let mut reports = Vec::new();
    for name in names {
        let mut spec = RandomSpec::for_suite(name);
        if let Some(s) = seed {
            spec.seed = s;
        }
        if let Some(t) = trials {
            spec.trials = t;
        }
        reports.push(run_suite(name, &spec)?);
    }
    let passed = reports.iter().all(SuiteReport::passed);
    let value = if reports.len() == 1 {
        reports[0].to_json()
    } else {
        json!({"suites": reports.iter().map(SuiteReport::to_json).collect::<Vec<_>>(), "passed": passed})
    };
    let text: String = reports.iter().map(suite_text).collect();
    let out = render(fmt, value, text);
    if passed {
        Ok(out)
    } else {
        Err(Failure::Math(out))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn level_of_generic() {
        let (code, out) = run(["level", "--expr", "A(1,1|i)", "--format", "json"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["global"]["level"], 1);
    }

    #[test]
    fn parse_error_exit() {
        let (code, out) = run(["level", "--expr", "q^"]);
        assert_eq!(code, 2);
        assert!(out.contains("offset 2"), "{out}");
    }

    #[test]
    fn bad_flags() {
        assert_eq!(run(["level"]).0, 2);
        assert_eq!(run(["frobnicate"]).0, 2);
        assert_eq!(run(["verify", "--suite", "nope"]).0, 2);
    }

    #[test]
    fn probe_file_parsing() {
        let ps = parse_probe_file("# frames\ni;j\n  k ; i # trailing\n\n").unwrap();
        assert_eq!(ps.len(), 2);
        assert!(parse_probe_file("i;i").is_err());
        assert!(parse_probe_file("2i;j").is_err());
        assert!(matches!(parse_probe_file("# nothing"), Err(Error::EmptyProbeSet)));
    }
}
