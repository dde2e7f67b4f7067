//! Command-line front end for `monres`.
//!
//! [`run`] is the whole program minus process I/O: it takes arguments and
//! stdin and returns the exit code with the complete stdout and stderr
//! text, so each invocation writes its output exactly once.

pub mod output;
pub mod parse;

use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use monres::classify::{classify, cohen_macaulay_aci, Classification};
use monres::corpus::{self, CorpusEntry};
use monres::formulas::{betti_ci_power, betti_formula_dispatch};
use monres::ideal::{alexander_dual, associated_primes, ideal_power, polarize};
use monres::resolutions::{oracle_betti, projective_dimension, scarf_betti, scarf_chain_complex, taylor_complex};
use monres::verify::verify_corpus;
use monres::{Error, Limits, MonomialIdeal, Result};
use serde_json::{json, Value};

pub use parse::{format_ideal, parse_corpus, parse_ideal};

#[derive(Debug, Parser)]
#[command(name = "monres", version, about = "Free resolutions and Betti numbers of monomial ideals")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Emit JSON (the default).
    #[arg(long, global = true, conflicts_with = "text")]
    pub json: bool,
    /// Emit plain text.
    #[arg(long, global = true)]
    pub text: bool,
    /// Generator cap for the homology oracle.
    #[arg(long, global = true, env = monres::limits::ENV_MAX_GENS)]
    pub max_gens: Option<usize>,
    /// Variable cap for the homology oracle.
    #[arg(long, global = true, env = monres::limits::ENV_MAX_VARS)]
    pub max_vars: Option<usize>,
}

/// Where the ideal comes from: inline text, a file, or stdin.
#[derive(Debug, Args)]
pub struct Input {
    /// Ideal text such as "x^2, x*y, y^2".
    pub ideal: Option<String>,
    /// Read the ideal from a file.
    #[arg(long, short, conflicts_with = "ideal")]
    pub file: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Formula,
    Oracle,
    Scarf,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Taylor,
    Scarf,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Complete/almost complete intersection, dominance and structural form.
    Classify(Input),
    /// Betti numbers of R/I.
    Betti {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "all")]
        method: Method,
    },
    /// Taylor or Scarf complex with its differentials.
    Resolution {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "taylor")]
        kind: Kind,
    },
    /// Minimal primes.
    Primes(Input),
    /// Associated primes.
    Ass(Input),
    /// Alexander dual of a squarefree ideal.
    Dual(Input),
    /// Polarization and its variable map.
    Polarize(Input),
    /// Generators of I^s.
    Power {
        #[command(flatten)]
        input: Input,
        #[arg(short, long)]
        s: u32,
        /// Also compute Betti numbers of the power.
        #[arg(long)]
        betti: bool,
    },
    /// Invariant suite over a corpus file or a seeded random corpus.
    Verify {
        /// One ideal per line; `#` starts a comment.
        #[arg(long)]
        corpus: Option<PathBuf>,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Size of the generated corpus when no file is given.
        #[arg(long, default_value_t = 200)]
        count: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn failure(e: &Error) -> Self {
        Outcome { code: e.exit_code(), stdout: String::new(), stderr: format!("error: {e}\n") }
    }
}

/// Rendered result of a command; `failure` turns a complete report into a
/// nonzero exit without suppressing it.
struct Report {
    json: Value,
    text: String,
    failure: Option<Error>,
}

impl Report {
    fn ok(json: Value, text: String) -> Self {
        Report { json, text, failure: None }
    }
}

pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let limits = limits(&cli);
    match execute(&cli.command, &limits, stdin) {
        Ok(report) => {
            let stdout = if cli.text {
                report.text
            } else {
                let mut s = serde_json::to_string_pretty(&report.json).expect("serializable");
                s.push('\n');
                s
            };
            match report.failure {
                None => Outcome { code: 0, stdout, stderr: String::new() },
                Some(e) => Outcome { code: e.exit_code(), stdout, stderr: format!("error: {e}\n") },
            }
        }
        Err(e) => Outcome::failure(&e),
    }
}

fn limits(cli: &Cli) -> Limits {
    let mut l = Limits::default();
    if let Some(g) = cli.max_gens {
        l.oracle_gens = g;
    }
    if let Some(v) = cli.max_vars {
        l.oracle_vars = v;
    }
    l
}

fn read_ideal(input: &Input, stdin: &mut dyn Read) -> Result<MonomialIdeal> {
    let text = match (&input.ideal, &input.file) {
        (Some(t), _) => t.clone(),
        (None, Some(path)) => std::fs::read_to_string(path)
            .map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?,
        (None, None) => {
            let mut s = String::new();
            stdin.read_to_string(&mut s).map_err(|e| Error::Input(format!("cannot read stdin: {e}")))?;
            s
        }
    };
    parse_ideal(&text)
}

fn execute(command: &Command, limits: &Limits, stdin: &mut dyn Read) -> Result<Report> {
    match command {
        Command::Classify(input) => cmd_classify(&read_ideal(input, stdin)?, limits),
        Command::Betti { input, method } => cmd_betti(&read_ideal(input, stdin)?, *method, limits),
        Command::Resolution { input, kind } => cmd_resolution(&read_ideal(input, stdin)?, *kind, limits),
        Command::Primes(input) => cmd_primes(&read_ideal(input, stdin)?),
        Command::Ass(input) => cmd_ass(&read_ideal(input, stdin)?),
        Command::Dual(input) => cmd_dual(&read_ideal(input, stdin)?),
        Command::Polarize(input) => cmd_polarize(&read_ideal(input, stdin)?),
        Command::Power { input, s, betti } => cmd_power(&read_ideal(input, stdin)?, *s, *betti, limits),
        Command::Verify { corpus, seed, count } => cmd_verify(corpus.as_ref(), *seed, *count, limits),
    }
}

fn bool_text(b: bool) -> &'static str {
    if b { "yes" } else { "no" }
}

/// Cohen–Macaulayness by the cheapest sound route. `None` when the oracle
/// is needed and over its caps.
fn cohen_macaulay(ideal: &MonomialIdeal, c: &Classification, limits: &Limits) -> Result<Value> {
    if c.is_ci {
        return Ok(json!({ "value": true, "method": "complete-intersection", "projective_dimension": c.height }));
    }
    if c.aci_split.is_some() {
        return match cohen_macaulay_aci(ideal, limits) {
            Ok(e) => Ok(json!({
                "value": e.cohen_macaulay,
                "method": "dominance",
                "projective_dimension": e.projective_dimension,
            })),
            Err(Error::Resource(_)) => Ok(json!({
                "value": !c.is_dominant,
                "method": "dominance",
                "projective_dimension": null,
            })),
            Err(e) => Err(e),
        };
    }
    match projective_dimension(ideal, limits) {
        Ok(pd) => Ok(json!({
            "value": pd == c.height,
            "method": "projective-dimension",
            "projective_dimension": pd,
        })),
        Err(Error::Resource(_)) => Ok(Value::Null),
        Err(e) => Err(e),
    }
}

fn cmd_classify(ideal: &MonomialIdeal, limits: &Limits) -> Result<Report> {
    let c = classify(ideal)?;
    let vars = ideal.vars();
    let cm = cohen_macaulay(ideal, &c, limits)?;
    let json = output::envelope(
        "classify",
        ideal,
        json!({
            "num_generators": ideal.num_gens(),
            "height": c.height,
            "is_ci": c.is_ci,
            "is_aci": c.is_aci,
            "aci_split": c.aci_split.as_ref().map(|s| output::split(s, vars)),
            "dominant_flags": c.dominant_flags,
            "is_dominant": c.is_dominant,
            "is_semidominant": c.is_semidominant,
            "cohen_macaulay": cm,
            "kty": c.kty.as_ref().map(output::kty),
        }),
    );
    let mut text = format!("ideal: {ideal}\ngenerators: {}\nheight: {}\n", ideal.num_gens(), c.height);
    text += &format!("complete intersection: {}\n", bool_text(c.is_ci));
    text += &format!("almost complete intersection: {}\n", bool_text(c.is_aci));
    if let Some(s) = &c.aci_split {
        let ci: Vec<String> = s.ci_part.iter().map(|m| m.display(vars).to_string()).collect();
        text += &format!("split: ({}) + {}\n", ci.join(", "), s.v.display(vars));
    }
    text += &format!("dominant: {}\nsemidominant: {}\n", bool_text(c.is_dominant), bool_text(c.is_semidominant));
    match cm.get("value").and_then(Value::as_bool) {
        Some(v) => text += &format!("Cohen-Macaulay: {}\n", bool_text(v)),
        None => text += "Cohen-Macaulay: unknown (oracle cap)\n",
    }
    if let Some(k) = &c.kty {
        text += &format!("form: {}", k.form.tag);
        if let Some(r) = k.form.r {
            text += &format!(" (r = {r})");
        }
        if k.polarized {
            text += " after polarization";
        }
        text.push('\n');
    }
    Ok(Report::ok(json, text))
}

fn cmd_betti(ideal: &MonomialIdeal, method: Method, limits: &Limits) -> Result<Report> {
    let vars = ideal.vars();
    let mut results = Vec::new();
    let mut skipped = Vec::new();
    let mut text = String::new();
    let mut all_totals: Vec<(String, Vec<String>)> = Vec::new();

    let want = |m: Method| method == m || method == Method::All;

    let oracle = if want(Method::Oracle) { Some(oracle_betti(ideal, limits)?) } else { None };
    if let Some(t) = &oracle {
        results.push(output::betti_table("oracle", t, vars));
        all_totals.push(("oracle".into(), t.totals().iter().map(u64::to_string).collect()));
    }

    let mut scarf = None;
    if want(Method::Scarf) {
        match scarf_betti(ideal, limits) {
            Ok(t) => {
                results.push(output::betti_table("scarf", &t, vars));
                all_totals.push(("scarf".into(), t.totals().iter().map(u64::to_string).collect()));
                scarf = Some(t);
            }
            Err(Error::Domain(m)) if method == Method::All => {
                skipped.push(json!({ "method": "scarf", "reason": m }));
            }
            Err(e) => return Err(e),
        }
    }

    if want(Method::Formula) {
        match betti_formula_dispatch(ideal) {
            Ok(f) => {
                results.push(output::formula(&f));
                all_totals.push(("formula".into(), f.totals.iter().map(ToString::to_string).collect()));
            }
            Err(Error::Domain(m)) if method == Method::All => {
                skipped.push(json!({ "method": "formula", "reason": m }));
            }
            Err(e) => return Err(e),
        }
    }

    let agree = all_totals.windows(2).all(|w| w[0].1 == w[1].1)
        && match (&oracle, &scarf) {
            (Some(o), Some(s)) => o == s,
            _ => true,
        };

    for (label, totals) in &all_totals {
        text += &format!("{label}\n{}", output::totals_text("total:", totals));
    }
    for s in &skipped {
        text += &format!("{}: skipped ({})\n", s["method"].as_str().unwrap_or(""), s["reason"].as_str().unwrap_or(""));
    }

    let mut body = json!({ "method": format!("{method:?}").to_lowercase(), "results": results });
    if method == Method::All {
        output::merge(&mut body, json!({ "agree": agree, "skipped": skipped }));
    }
    let mut report = Report::ok(output::envelope("betti", ideal, body), text);
    if !agree {
        report.failure = Some(Error::Invariant("Betti computations disagree".into()));
    }
    Ok(report)
}

fn cmd_resolution(ideal: &MonomialIdeal, kind: Kind, limits: &Limits) -> Result<Report> {
    let (name, complex) = match kind {
        Kind::Taylor => ("taylor", taylor_complex(ideal, limits)?),
        Kind::Scarf => ("scarf", scarf_chain_complex(ideal, limits)?),
    };
    let mut body = json!({ "kind": name });
    output::merge(&mut body, output::chain_complex(&complex, ideal.vars()));
    let ranks: Vec<String> = complex.ranks().iter().map(usize::to_string).collect();
    let text = format!("{name} complex\n{}", output::totals_text("rank:", &ranks));
    Ok(Report::ok(output::envelope("resolution", ideal, body), text))
}

fn cmd_primes(ideal: &MonomialIdeal) -> Result<Report> {
    let vars = ideal.vars();
    let min = ideal.minimal_primes();
    let primes: Vec<Vec<String>> = min.iter().map(|p| output::prime(p, vars)).collect();
    let text: String = primes.iter().map(|p| format!("({})\n", p.join(", "))).collect();
    let json = output::envelope("primes", ideal, json!({ "height": ideal.height(), "primes": primes }));
    Ok(Report::ok(json, text))
}

fn cmd_ass(ideal: &MonomialIdeal) -> Result<Report> {
    let vars = ideal.vars();
    let min = ideal.minimal_primes();
    let ass = associated_primes(ideal);
    let height = ideal.height();
    let entries: Vec<Value> = ass
        .iter()
        .map(|p| json!({ "variables": output::prime(p, vars), "minimal": min.contains(p) }))
        .collect();
    let text: String = ass
        .iter()
        .map(|p| {
            let tag = if min.contains(p) { "minimal" } else { "embedded" };
            format!("({}) {tag}\n", output::prime(p, vars).join(", "))
        })
        .collect();
    let json = output::envelope(
        "ass",
        ideal,
        json!({
            "height": height,
            "primes": entries,
            "unmixed": ass.iter().all(|p| p.height() == height),
            "ass_equals_min": ass == min,
        }),
    );
    Ok(Report::ok(json, text))
}

fn cmd_dual(ideal: &MonomialIdeal) -> Result<Report> {
    let dual = alexander_dual(ideal)?;
    let json = output::envelope("dual", ideal, json!({ "dual": output::ideal(&dual) }));
    Ok(Report::ok(json, format!("{dual}\n")))
}

fn cmd_polarize(ideal: &MonomialIdeal) -> Result<Report> {
    let (pol, map) = polarize(ideal);
    let json = output::envelope(
        "polarize",
        ideal,
        json!({ "polarized": output::ideal(&pol), "map": output::polarization_map(&map) }),
    );
    Ok(Report::ok(json, format!("{pol}\n")))
}

fn cmd_power(ideal: &MonomialIdeal, s: u32, betti: bool, limits: &Limits) -> Result<Report> {
    let power = ideal_power(ideal, s)?;
    let mut text = format!("{power}\n");
    let mut body = json!({ "s": s, "power": output::ideal(&power), "betti": null, "formula": null });
    if betti {
        let t = oracle_betti(&power, limits)?;
        let totals: Vec<String> = t.totals().iter().map(u64::to_string).collect();
        text += &format!("oracle\n{}", output::totals_text("total:", &totals));
        output::merge(&mut body, json!({ "betti": output::betti_table("oracle", &t, power.vars()) }));
        if monres::classify::is_complete_intersection(ideal) {
            let f = betti_ci_power(ideal.num_gens(), s)?;
            let ft: Vec<String> = f.totals.iter().map(ToString::to_string).collect();
            text += &format!("formula\n{}", output::totals_text("total:", &ft));
            let agree = f.totals_u64().as_deref() == Some(&t.totals()[..]);
            output::merge(&mut body, json!({ "formula": output::formula(&f), "agree": agree }));
            if !agree {
                let mut r = Report::ok(output::envelope("power", ideal, body), text);
                r.failure = Some(Error::Invariant("power formula disagrees with the oracle".into()));
                return Ok(r);
            }
        }
    }
    Ok(Report::ok(output::envelope("power", ideal, body), text))
}

fn cmd_verify(path: Option<&PathBuf>, seed: u64, count: usize, limits: &Limits) -> Result<Report> {
    let (source, entries) = match path {
        Some(p) => {
            let text = std::fs::read_to_string(p)
                .map_err(|e| Error::Input(format!("cannot read {}: {e}", p.display())))?;
            let entries: Vec<CorpusEntry> = parse_corpus(&text)?
                .into_iter()
                .map(|(line, ideal)| CorpusEntry { label: format!("line-{line}"), ideal })
                .collect();
            (json!({ "file": p.display().to_string() }), entries)
        }
        None => (json!({ "generated": { "seed": seed, "count": count } }), corpus::generate(seed, count)),
    };
    let report = verify_corpus(&entries, limits);
    let mut text = format!("ideals: {}\n", report.ideals);
    for (name, t) in &report.checks {
        text += &format!("{name:<24} passed {:>5}  failed {:>3}  skipped {:>5}\n", t.passed, t.failed, t.skipped);
    }
    for f in &report.failures {
        text += &format!("FAIL {} [{}] {}: {}\n", f.check, f.label, f.ideal, f.detail);
    }
    let json = json!({
        "schema": format!("monres/verify/v{}", output::SCHEMA_VERSION),
        "command": "verify",
        "source": source,
        "report": serde_json::to_value(&report).expect("serializable"),
        "passed": report.passed(),
    });
    let mut r = Report::ok(json, text);
    if !report.passed() {
        r.failure = Some(Error::Invariant(format!("{} invariant check(s) failed", report.failures.len())));
    }
    Ok(r)
}
