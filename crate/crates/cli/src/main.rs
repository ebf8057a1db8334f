mod args;

use std::fmt::Write as _;
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::Parser;
use serde::Serialize;
use serde_json::Value;

use args::{
    parse_seeds, Cli, Command, Format, HilbertArgs, OracleArgs, PredictArgs, SweepArgs, VerifyArgs,
};
use gin3_core::gin::{
    compare_closed_form, construct_gin_greedy, ClosedFormComparison, CorrectionTable, GinResultJson,
};
use gin3_core::hilbert::{DegreeTriple, HilbertReport};
use gin3_core::monomial::{minimalize, Monomial, MonomialIdeal};
use gin3_core::oracle::compare::Gate;
use gin3_core::oracle::{check_modulus, OracleConfig, OracleVerdict};
use gin3_core::sweep::{count_table, emit_catalogues, oracle_batch, sweep_structural, Execution};
use gin3_core::verify::{verify_ideal, Status, VerifyReport};
use gin3_core::Error;

const EXIT_CHECK: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_EXHAUSTED: u8 = 3;

/// An error carrying the exit code it should produce.
#[derive(Debug)]
struct Fail {
    code: u8,
    message: String,
}

type Outcome = Result<u8, Fail>;

fn usage(message: impl Into<String>) -> Fail {
    Fail {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

impl From<anyhow::Error> for Fail {
    fn from(e: anyhow::Error) -> Self {
        let code = match e.downcast_ref::<Error>() {
            Some(Error::RetriesExhausted { .. }) => EXIT_EXHAUSTED,
            Some(Error::InvalidDegrees(_) | Error::NotPrime(_) | Error::Parse(_)) => EXIT_USAGE,
            _ => EXIT_CHECK,
        };
        Fail {
            code,
            message: format!("{e:#}"),
        }
    }
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        anyhow::Error::from(e).into()
    }
}

struct Ctx {
    format: Format,
    table: CorrectionTable,
}

impl Ctx {
    fn emit<T: Serialize>(&self, value: &T, text: impl FnOnce() -> String) -> Result<(), Fail> {
        match self.format {
            Format::Json => {
                let s = serde_json::to_string_pretty(value).map_err(|e| anyhow!(e))?;
                println!("{s}");
            }
            Format::Text => print!("{}", text()),
        }
        Ok(())
    }
}

fn parse_degrees(s: &str) -> Result<DegreeTriple, Fail> {
    let parts: Vec<u32> = s
        .split(',')
        .map(|p| p.trim().parse::<u32>())
        .collect::<Result<_, _>>()
        .map_err(|_| usage(format!("--degrees expects three integers a,b,c, got {s:?}")))?;
    let [a, b, c] = parts[..] else {
        return Err(usage(format!(
            "--degrees expects three integers a,b,c, got {s:?}"
        )));
    };
    let d = DegreeTriple::new(a, b, c).map_err(|e| usage(e.to_string()))?;
    if d.as_array() != [a, b, c] {
        eprintln!("note: degrees reordered to {d}");
    }
    Ok(d)
}

fn prime(p: u64) -> Result<u32, Fail> {
    match check_modulus(p) {
        Ok(warning) => {
            if let Some(w) = warning {
                eprintln!("{w}");
            }
            Ok(p as u32)
        }
        Err(e) => Err(usage(format!("--prime: {e}"))),
    }
}

fn join<T: std::fmt::Display>(items: &[T]) -> String {
    items
        .iter()
        .map(|m| m.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

#[derive(Serialize)]
struct PredictOutput {
    #[serde(flatten)]
    result: GinResultJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    closed_form: Option<ClosedFormComparison>,
}

fn predict(ctx: &Ctx, args: &PredictArgs) -> Outcome {
    let d = parse_degrees(&args.degrees)?;
    let g = construct_gin_greedy(&d)?;
    let closed_form = if args.compare_closed_form {
        Some(compare_closed_form(&d, &ctx.table)?)
    } else {
        None
    };
    let out = PredictOutput {
        result: g.to_json(),
        closed_form,
    };
    ctx.emit(&out, || {
        let mut s = String::new();
        let _ = writeln!(s, "degrees {d}  case {}  mu {}", d.case(), g.mu());
        for (k, gens) in &g.new_by_degree {
            let _ = writeln!(s, "  degree {k:>2}: {}", join(gens));
        }
        if let Some(c) = &out.closed_form {
            let verdict = |ok: bool| if ok { "matches" } else { "differs" };
            let _ = writeln!(s, "closed form as printed: {}", verdict(c.raw_match));
            if !c.raw_match {
                let _ = writeln!(s, "  missing: {}", join(&c.raw_missing));
                let _ = writeln!(s, "  extra:   {}", join(&c.raw_extra));
            }
            for a in &c.raw_anomalies {
                let _ = writeln!(s, "  anomaly: {a}");
            }
            let _ = writeln!(s, "closed form normalized: {}", verdict(c.normalized_match));
            if !c.normalized_match {
                let _ = writeln!(s, "  missing: {}", join(&c.missing));
                let _ = writeln!(s, "  extra:   {}", join(&c.extra));
            }
            if !c.corrections_used.is_empty() {
                let _ = writeln!(s, "  corrections: {:?}", c.corrections_used);
            }
        }
        s
    })?;
    Ok(0)
}

fn monomial_from_json(v: &Value) -> Result<Monomial, Fail> {
    match v {
        Value::String(s) => s.parse().map_err(|e: Error| usage(e.to_string())),
        other => serde_json::from_value::<Monomial>(other.clone())
            .map_err(|e| usage(format!("bad generator {other}: {e}"))),
    }
}

/// Reads generators, and degrees if the file has them.
fn read_ideal_file(path: &std::path::Path) -> Result<(MonomialIdeal, Option<DegreeTriple>), Fail> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))
        .map_err(|e| usage(format!("{e:#}")))?;
    let v: Value =
        serde_json::from_str(&text).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    let gens = v
        .get("generators")
        .and_then(Value::as_array)
        .ok_or_else(|| usage(format!("{}: no \"generators\" array", path.display())))?;
    let gens = gens
        .iter()
        .map(monomial_from_json)
        .collect::<Result<Vec<_>, _>>()?;
    let degrees = match v.get("degrees") {
        Some(d) => Some(
            serde_json::from_value::<DegreeTriple>(d.clone())
                .map_err(|e| usage(format!("{}: bad degrees: {e}", path.display())))?,
        ),
        None => None,
    };
    let ideal = minimalize(gens);
    let ideal = match degrees {
        Some(d) => ideal.with_max_relevant_degree(d.terminal_degree()),
        None => ideal,
    };
    Ok((ideal, degrees))
}

fn verify_text(r: &VerifyReport) -> String {
    let mut s = String::new();
    let label = r
        .degrees
        .map(|d| d.to_string())
        .unwrap_or_else(|| "ideal".into());
    let _ = writeln!(
        s,
        "verify {label}: {}/{} checks pass (mu {})",
        r.passed(),
        r.checks.len(),
        r.mu
    );
    for c in &r.checks {
        let status = match c.status {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Skipped => "skip",
        };
        match &c.detail {
            Some(d) => {
                let _ = writeln!(s, "  {status}  {:<17} {d}", c.name);
            }
            None => {
                let _ = writeln!(s, "  {status}  {}", c.name);
            }
        }
    }
    s
}

#[derive(Serialize)]
struct VerifyOutput<'a> {
    #[serde(flatten)]
    report: &'a VerifyReport,
    all_pass: bool,
}

fn verify(ctx: &Ctx, args: &VerifyArgs) -> Outcome {
    let flag_degrees = args.degrees.as_deref().map(parse_degrees).transpose()?;
    let (ideal, degrees) = match &args.ideal_file {
        Some(path) => {
            let (ideal, file_degrees) = read_ideal_file(path)?;
            let degrees = flag_degrees.or(file_degrees);
            let ideal = match degrees {
                Some(d) => ideal.with_max_relevant_degree(d.terminal_degree()),
                None => ideal,
            };
            (ideal, degrees)
        }
        None => {
            let d = flag_degrees.expect("clap requires degrees without an ideal file");
            (construct_gin_greedy(&d)?.ideal, Some(d))
        }
    };
    let report = verify_ideal(&ideal, degrees.as_ref());
    let out = VerifyOutput {
        report: &report,
        all_pass: report.all_pass(),
    };
    ctx.emit(&out, || verify_text(&report))?;
    Ok(if report.all_pass() { 0 } else { EXIT_CHECK })
}

#[derive(Serialize)]
#[serde(untagged)]
enum OracleRow {
    Verdict(OracleVerdict),
    Exhausted {
        degrees: DegreeTriple,
        p: u32,
        seed: u64,
        error: String,
    },
}

fn oracle(ctx: &Ctx, args: &OracleArgs) -> Outcome {
    let d = parse_degrees(&args.degrees)?;
    let p = prime(args.prime)?;
    let seeds = parse_seeds(&args.seeds).map_err(usage)?;
    let config = OracleConfig {
        p,
        coordinate_change: !args.no_coordinate_change,
        monomial_input: args.monomial,
        max_retries: args.retries,
    };
    let results = oracle_batch(&[d], &seeds, &config, Execution::default());
    let mut rows = Vec::new();
    let mut exhausted = false;
    let mut all_match = true;
    for (seed, r) in seeds.iter().zip(results) {
        match r {
            Ok(v) => {
                all_match &= v.matches;
                rows.push(OracleRow::Verdict(v));
            }
            Err(e @ Error::RetriesExhausted { .. }) => {
                exhausted = true;
                rows.push(OracleRow::Exhausted {
                    degrees: d,
                    p,
                    seed: *seed,
                    error: e.to_string(),
                });
            }
            Err(e) => return Err(e.into()),
        }
    }
    ctx.emit(&rows, || {
        let mut s = String::new();
        for row in &rows {
            match row {
                OracleRow::Verdict(v) => {
                    let gate = match v.hilbert_gate {
                        Gate::Pass => "pass",
                        Gate::Fail => "fail",
                    };
                    let _ = writeln!(
                        s,
                        "{} p={} seed={}: {} (hilbert gate {gate}, retries {}, computed {} generators, predicted {})",
                        v.degrees,
                        v.p,
                        v.seed,
                        if v.matches { "match" } else { "MISMATCH" },
                        v.retries,
                        v.computed_generators.len(),
                        v.predicted_generators.len()
                    );
                    if !v.matches {
                        let _ = writeln!(s, "  computed:  ({})", join(&v.computed_generators));
                        let _ = writeln!(s, "  predicted: ({})", join(&v.predicted_generators));
                    }
                }
                OracleRow::Exhausted { seed, error, .. } => {
                    let _ = writeln!(s, "{d} seed={seed}: {error}");
                }
            }
        }
        s
    })?;
    Ok(if exhausted {
        EXIT_EXHAUSTED
    } else if all_match {
        0
    } else {
        EXIT_CHECK
    })
}

fn sweep(ctx: &Ctx, args: &SweepArgs) -> Outcome {
    let exec = if args.sequential {
        Execution::Sequential
    } else {
        Execution::default()
    };
    let p = prime(args.prime)?;
    let config = OracleConfig {
        p,
        ..OracleConfig::default()
    };
    if let Some(dir) = &args.emit_fixtures {
        emit_catalogues(dir, args.max, &config, exec)?;
        eprintln!("wrote discrepancy catalogues to {}", dir.display());
    }

    if args.counts_only {
        let rows = count_table(args.max, exec)?;
        let printed = rows.iter().filter(|r| r.printed_match).count();
        let normalized = rows.iter().filter(|r| r.normalized_match).count();
        let out = serde_json::json!({
            "max": args.max,
            "triples": rows.len(),
            "printed_matches": printed,
            "normalized_matches": normalized,
            "rows": rows,
        });
        ctx.emit(&out, || {
            let mut s = String::new();
            let _ = writeln!(s, "{:<12} {:<9} {:>6} {:>9} {:>10}", "degrees", "case", "greedy", "printed", "normalized");
            for r in &rows {
                let _ = writeln!(
                    s,
                    "{:<12} {:<9} {:>6} {:>9} {:>10}",
                    r.degrees.to_string(),
                    r.case.label(),
                    r.greedy,
                    r.printed_formula,
                    r.normalized_formula
                );
            }
            let _ = writeln!(
                s,
                "{} triples: printed formula matches {printed}, normalized formula matches {normalized}",
                rows.len()
            );
            s
        })?;
        return Ok(if normalized == rows.len() {
            0
        } else {
            EXIT_CHECK
        });
    }

    let rows = sweep_structural(args.max, exec)?;
    let passed = rows.iter().filter(|r| r.all_pass).count();

    let mut oracle_rows = Vec::new();
    let mut oracle_ok = true;
    let mut exhausted = false;
    if let Some(limit) = args.oracle_max_sum {
        let seeds = parse_seeds(&args.seeds).map_err(usage)?;
        let triples: Vec<DegreeTriple> = rows
            .iter()
            .map(|r| r.degrees)
            .filter(|d| d.sum() <= limit)
            .collect();
        for r in oracle_batch(&triples, &seeds, &config, exec) {
            match r {
                Ok(v) => {
                    oracle_ok &= v.matches;
                    oracle_rows.push(v);
                }
                Err(Error::RetriesExhausted { .. }) => exhausted = true,
                Err(e) => return Err(e.into()),
            }
        }
    }

    let out = serde_json::json!({
        "max": args.max,
        "triples": rows.len(),
        "passed": passed,
        "rows": rows,
        "oracle": oracle_rows,
    });
    ctx.emit(&out, || {
        let mut s = String::new();
        for r in &rows {
            let failed: Vec<&str> = r
                .checks
                .iter()
                .filter(|c| c.status != Status::Pass)
                .map(|c| c.name.as_str())
                .collect();
            if failed.is_empty() {
                let _ = writeln!(
                    s,
                    "{:<12} {:<9} mu {:>3}  pass",
                    r.degrees.to_string(),
                    r.case.label(),
                    r.mu
                );
            } else {
                let _ = writeln!(
                    s,
                    "{:<12} {:<9} mu {:>3}  FAIL {}",
                    r.degrees.to_string(),
                    r.case.label(),
                    r.mu,
                    failed.join(", ")
                );
            }
        }
        let _ = writeln!(
            s,
            "{passed}/{} triples pass all structural checks",
            rows.len()
        );
        if args.oracle_max_sum.is_some() {
            let matched = oracle_rows.iter().filter(|v| v.matches).count();
            let _ = writeln!(s, "oracle: {matched}/{} runs match", oracle_rows.len());
        }
        s
    })?;
    Ok(if exhausted {
        EXIT_EXHAUSTED
    } else if passed == rows.len() && oracle_ok {
        0
    } else {
        EXIT_CHECK
    })
}

fn hilbert(ctx: &Ctx, args: &HilbertArgs) -> Outcome {
    let d = parse_degrees(&args.degrees)?;
    let report = HilbertReport::new(d);
    ctx.emit(&report, || {
        let row = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(" ");
        format!(
            "degrees {d}  case {}\nH:     {}\n|J_k|: {}\n",
            d.case(),
            row(&report.h),
            row(&report.j_counts)
        )
    })?;
    Ok(0)
}

fn run(cli: &Cli) -> Outcome {
    let table = match &cli.fixtures {
        Some(path) => CorrectionTable::from_path(path),
        None => CorrectionTable::from_env(),
    }
    .map_err(|e| usage(e.to_string()))?;
    let ctx = Ctx {
        format: cli.format,
        table,
    };
    match &cli.command {
        Command::Predict(a) => predict(&ctx, a),
        Command::Verify(a) => verify(&ctx, a),
        Command::Oracle(a) => oracle(&ctx, a),
        Command::Sweep(a) => sweep(&ctx, a),
        Command::Hilbert(a) => hilbert(&ctx, a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
