//! Command-line front end.
//!
//! Every subcommand produces a report with the command name, an echo of the
//! parsed input, and a command-specific result. `--json` prints the report as
//! pretty JSON with sorted keys; otherwise a short human-readable summary is
//! printed. Exit codes: 0 success, 1 malformed input, 2 precondition or
//! dimension failures.

use std::ffi::OsString;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::asummability;
use crate::error::{Error, Result};
use crate::highorder;
use crate::multithreshold::{self, MultithresholdRep};
use crate::ptf::{self, Ptf};
use crate::table::{InputVector, TruthTable};
use crate::text::{self, format_rational, ptf_to_json, PtfJson};

#[derive(Debug, Parser)]
#[command(name = "ptfkit", version, about = "Analyze Boolean functions as high-order threshold functions")]
pub struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,

    /// Include elapsed_ms in the report (makes JSON output run-dependent).
    #[arg(long, global = true)]
    pub timing: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Minimal order, threshold test and a PTF witness.
    Analyze { table: String },
    /// High-order vectors: inputs whose flip changes the minimal order.
    Hov { table: String },
    /// Split an order >= 2 function into two threshold functions via one flip.
    Reduce {
        table: String,
        #[arg(long)]
        at: String,
    },
    /// Append a variable to f_n = f1 xor f2 and build a two-threshold witness.
    Extend { table: String, f1: PathBuf, f2: PathBuf },
    /// Bounded asummability test with certificate output.
    Asummable {
        table: String,
        #[arg(long, default_value_t = 4)]
        m: usize,
    },
    /// Sweep the threshold over fixed weights.
    Family {
        weights: PathBuf,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Search for a shared-weight multithreshold representation.
    #[command(name = "synth-mtf")]
    SynthMtf {
        table: String,
        #[arg(long, default_value_t = 3)]
        k_max: usize,
        #[arg(long, default_value_t = 2)]
        weight_bound: i64,
    },
    /// Evaluate a PTF or multithreshold representation at a vector or on all inputs.
    Eval(EvalArgs),
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct EvalTarget {
    /// PTF in text form or PTF JSON.
    #[arg(long)]
    pub ptf: Option<PathBuf>,
    /// Shared-weight object or XOR-list array, as JSON.
    #[arg(long)]
    pub rep: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[command(flatten)]
    pub target: EvalTarget,
    /// Input vector, x_1 first. Without it the whole truth table is printed.
    #[arg(long)]
    pub at: Option<String>,
}

/// What a run printed and how it exited.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Report {
    command: &'static str,
    input: Value,
    result: Value,
    human: String,
}

/// Parses `argv` (including the program name) and executes the subcommand.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
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
    let start = Instant::now();
    let name = command_name(&cli.command);
    match execute(&cli.command) {
        Ok(report) => {
            let elapsed_ms = start.elapsed().as_millis() as u64;
            let stdout = if cli.json {
                let mut obj = json!({
                    "command": report.command,
                    "input": report.input,
                    "result": report.result,
                });
                if cli.timing {
                    obj["elapsed_ms"] = json!(elapsed_ms);
                }
                pretty(&obj)
            } else {
                let mut s = report.human;
                if cli.timing {
                    s.push_str(&format!("elapsed: {elapsed_ms} ms\n"));
                }
                s
            };
            Outcome { code: 0, stdout, stderr: String::new() }
        }
        Err(e) => {
            let code = if e.is_parse() { 1 } else { 2 };
            let stdout = if cli.json {
                pretty(&json!({"command": name, "error": {"kind": error_kind(&e), "message": e.to_string()}}))
            } else {
                String::new()
            };
            Outcome { code, stdout, stderr: format!("error: {e}\n") }
        }
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report serializes");
    s.push('\n');
    s
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Analyze { .. } => "analyze",
        Command::Hov { .. } => "hov",
        Command::Reduce { .. } => "reduce",
        Command::Extend { .. } => "extend",
        Command::Asummable { .. } => "asummable",
        Command::Family { .. } => "family",
        Command::SynthMtf { .. } => "synth-mtf",
        Command::Eval(_) => "eval",
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::DimensionMismatch { .. } => "dimension_mismatch",
        Error::IndexOutOfRange { .. } => "index_out_of_range",
        Error::TooManyVariables { .. } => "too_many_variables",
        Error::InvalidArgument(_) => "invalid_argument",
        Error::Parse(_) => "parse",
        Error::Precondition(_) => "precondition",
    }
}

fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))
}

/// PTF from a file holding either the text form or PTF JSON.
fn read_ptf(path: &Path, n_hint: Option<usize>) -> Result<Ptf> {
    let src = read_file(path)?;
    let p = if src.trim_start().starts_with('{') {
        let j: PtfJson = serde_json::from_str(&src).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        Ptf::try_from(&j)?
    } else {
        text::parse_ptf(&src, n_hint)?
    };
    if let Some(n) = n_hint {
        if p.n() != n {
            return Err(Error::DimensionMismatch { expected: n, actual: p.n() });
        }
    }
    Ok(p)
}

fn table_echo(f: &TruthTable) -> Value {
    json!({"table": f.to_string(), "n": f.n()})
}

fn execute(command: &Command) -> Result<Report> {
    match command {
        Command::Analyze { table } => analyze(table),
        Command::Hov { table } => hov(table),
        Command::Reduce { table, at } => reduce(table, at),
        Command::Extend { table, f1, f2 } => extend(table, f1, f2),
        Command::Asummable { table, m } => asummable(table, *m),
        Command::Family { weights, n } => family(weights, *n),
        Command::SynthMtf { table, k_max, weight_bound } => synth(table, *k_max, *weight_bound),
        Command::Eval(args) => eval(args),
    }
}

fn analyze(table: &str) -> Result<Report> {
    let f = TruthTable::parse(table)?;
    let (order, witness) = ptf::minimal_realization(&f)?;
    let threshold = order <= 1;
    let human = format!(
        "n = {}\norder = {order}\nthreshold = {threshold}\nwitness:\n{}",
        f.n(),
        indent(&text::format_ptf(&witness))
    );
    Ok(Report {
        command: "analyze",
        input: table_echo(&f),
        result: json!({
            "n": f.n(),
            "order": order,
            "threshold": threshold,
            "witness": ptf_to_json(&witness),
        }),
        human,
    })
}

fn hov(table: &str) -> Result<Report> {
    let f = TruthTable::parse(table)?;
    let order = ptf::order(&f)?;
    let found = highorder::high_order_vectors(&f)?;
    let mut human = format!("order = {order}\nhigh-order vectors: {}\n", found.len());
    for r in &found {
        human.push_str(&format!("  Y = {}  r = {}  s = {}\n", r.y, r.order_before, r.order_after));
    }
    Ok(Report {
        command: "hov",
        input: table_echo(&f),
        result: json!({
            "order": order,
            "vectors": found.iter().map(highorder::HighOrderVectorResult::to_json).collect::<Vec<_>>(),
        }),
        human,
    })
}

fn reduce(table: &str, at: &str) -> Result<Report> {
    let g = TruthTable::parse(table)?;
    let y: InputVector = at.parse()?;
    let red = highorder::order_reduce(&g, &y)?;
    let human = format!(
        "g = {} (order {})\nY = {}\nf2 = {}\nf2 witness:\n{}f1 = {}\nf1 witness:\n{}",
        red.g,
        red.order_g,
        red.y,
        red.f2,
        indent(&text::format_ptf(&red.f2_witness)),
        red.f1,
        indent(&text::format_ptf(&red.f1_witness)),
    );
    Ok(Report {
        command: "reduce",
        input: json!({"table": g.to_string(), "n": g.n(), "at": y.to_u8s()}),
        result: json!({
            "order_g": red.order_g,
            "Y": red.y.to_u8s(),
            "f2": red.f2.to_string(),
            "f2_witness": ptf_to_json(&red.f2_witness),
            "f1": red.f1.to_string(),
            "f1_witness": ptf_to_json(&red.f1_witness),
        }),
        human,
    })
}

fn extend(table: &str, f1_path: &Path, f2_path: &Path) -> Result<Report> {
    let f_n = TruthTable::parse(table)?;
    let f1 = read_ptf(f1_path, Some(f_n.n()))?;
    let f2 = read_ptf(f2_path, Some(f_n.n()))?;
    let res = multithreshold::extend_order(&f_n, &f1, &f2)?;
    let human = format!(
        "f_n = {}\ng_next = {}\nf1_next = {}\nf2_next = {}\nf_next = {}\nlift W = {}\nwitness weights = [{}]\nwitness thresholds = [{}]\n",
        res.f_n,
        res.g_next,
        res.f1_next,
        res.f2_next,
        res.f_next,
        format_rational(&res.lift),
        res.witness.weight_vector().iter().map(format_rational).collect::<Vec<_>>().join(", "),
        res.witness.thresholds().iter().map(format_rational).collect::<Vec<_>>().join(", "),
    );
    Ok(Report {
        command: "extend",
        input: json!({
            "table": f_n.to_string(),
            "n": f_n.n(),
            "f1": ptf_to_json(&f1),
            "f2": ptf_to_json(&f2),
        }),
        result: res.to_json(),
        human,
    })
}

fn asummable(table: &str, m: usize) -> Result<Report> {
    let f = TruthTable::parse(table)?;
    let cert = asummability::find_certificate(&f, m)?;
    let human = match &cert {
        None => format!("asummable up to m = {m}\n"),
        Some(c) => format!(
            "summable: k = {}\n  true:  {}\n  false: {}\n",
            c.k,
            c.true_vectors.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "),
            c.false_vectors.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "),
        ),
    };
    let result = match &cert {
        None => json!({"m": m, "asummable": true, "certificate": null, "message": format!("asummable up to {m}")}),
        Some(c) => json!({"m": m, "asummable": false, "certificate": c.to_json()}),
    };
    Ok(Report { command: "asummable", input: json!({"table": f.to_string(), "n": f.n(), "m": m}), result, human })
}

fn family(path: &Path, n_hint: Option<usize>) -> Result<Report> {
    let parsed = text::parse_weights_text(&read_file(path)?)?;
    let n = parsed.resolve_n(n_hint)?;
    let fam = ptf::same_weight_family(&parsed.weights, n)?;
    let weights: serde_json::Map<String, Value> =
        fam.weights.iter().map(|(m, a)| (m.to_string(), json!(format_rational(a)))).collect();
    let members: Vec<Value> =
        fam.members.iter().map(|m| json!({"theta": format_rational(&m.theta), "table": m.table.to_string()})).collect();
    let mut human =
        format!("n = {n}\nlevels: {}\n", fam.levels.iter().map(format_rational).collect::<Vec<_>>().join(" "));
    for m in &fam.members {
        human.push_str(&format!("  theta = {:>6}  {}\n", format_rational(&m.theta), m.table));
    }
    Ok(Report {
        command: "family",
        input: json!({"n": n, "weights": weights}),
        result: json!({
            "levels": fam.levels.iter().map(format_rational).collect::<Vec<_>>(),
            "members": members,
        }),
        human,
    })
}

fn synth(table: &str, k_max: usize, weight_bound: i64) -> Result<Report> {
    let f = TruthTable::parse(table)?;
    let rep = multithreshold::synthesize_shared_weight(&f, k_max, weight_bound)?;
    let human = match &rep {
        None => format!("no shared-weight representation with k <= {k_max} and |w_i| <= {weight_bound}\n"),
        Some(sw) => format!(
            "k = {}\nweights = [{}]\nthresholds = [{}]\n",
            sw.k(),
            sw.weight_vector().iter().map(format_rational).collect::<Vec<_>>().join(", "),
            sw.thresholds().iter().map(format_rational).collect::<Vec<_>>().join(", "),
        ),
    };
    Ok(Report {
        command: "synth-mtf",
        input: json!({"table": f.to_string(), "n": f.n(), "k_max": k_max, "weight_bound": weight_bound}),
        result: json!({
            "found": rep.is_some(),
            "k": rep.as_ref().map(|r| r.k()),
            "rep": rep.as_ref().map_or(Value::Null, |r| r.to_json()),
        }),
        human,
    })
}

fn eval(args: &EvalArgs) -> Result<Report> {
    let at: Option<InputVector> = args.at.as_deref().map(str::parse).transpose()?;
    let n_hint = at.as_ref().map(InputVector::dim);
    enum Target {
        Ptf(Ptf),
        Rep(MultithresholdRep),
    }
    let target = match (&args.target.ptf, &args.target.rep) {
        (Some(p), _) => Target::Ptf(read_ptf(p, n_hint)?),
        (None, Some(r)) => {
            let v: Value =
                serde_json::from_str(&read_file(r)?).map_err(|e| Error::Parse(format!("{}: {e}", r.display())))?;
            Target::Rep(MultithresholdRep::from_json(&v)?)
        }
        (None, None) => unreachable!("clap requires one target"),
    };
    let (input, n) = match &target {
        Target::Ptf(p) => (json!({"ptf": ptf_to_json(p)}), p.n()),
        Target::Rep(r) => (json!({"rep": r.to_json()}), r.n()),
    };
    let (result, human) = match &at {
        Some(x) => {
            if x.dim() != n {
                return Err(Error::DimensionMismatch { expected: n, actual: x.dim() });
            }
            match &target {
                Target::Ptf(p) => {
                    let g = p.eval_g(x)?;
                    let value = u8::from(g >= *p.theta());
                    (
                        json!({"at": x.to_u8s(), "G": format_rational(&g), "value": value}),
                        format!("G({x}) = {}\nvalue = {value}\n", format_rational(&g)),
                    )
                }
                Target::Rep(r) => {
                    let value = u8::from(r.eval(x)?);
                    (json!({"at": x.to_u8s(), "value": value}), format!("value = {value}\n"))
                }
            }
        }
        None => {
            let t = match &target {
                Target::Ptf(p) => p.truth_table(),
                Target::Rep(r) => r.to_truth_table(),
            };
            (json!({"table": t.to_string()}), format!("{t}\n"))
        }
    };
    Ok(Report { command: "eval", input, result, human })
}

fn indent(s: &str) -> String {
    s.lines().map(|l| format!("  {l}\n")).collect()
}
