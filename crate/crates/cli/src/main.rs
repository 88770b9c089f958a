use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use schubert_core::chamber::DEFAULT_CHAMBER_BUDGET;
use schubert_core::io::{load_gcm, parse_weight, parse_word};
use schubert_core::relative::{l_minus, l_plus};
use schubert_core::weyl::length_counts;
use schubert_core::{
    chamber_of, predict_degrees, resolve, run_suite, tau_minus, tau_plus, Error, Mode, SuiteConfig, SuiteName, WeylElt,
    WeylGroup,
};

#[derive(Parser)]
#[command(name = "schubert", version, about = "Weyl-group combinatorics and Schubert cohomology checks")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Args)]
struct GcmArg {
    /// Preset name (A1, A2, A3, B2, G2, A1~, A2~) or path to a JSON matrix file.
    #[arg(long)]
    gcm: String,
}

#[derive(Subcommand)]
enum Command {
    /// List elements by length.
    Enumerate {
        #[command(flatten)]
        gcm: GcmArg,
        #[arg(long, default_value_t = 3)]
        max_length: usize,
    },
    /// Maximal elements of the relative sets W+(w, phi) and W-(w, phi).
    Tau {
        #[command(flatten)]
        gcm: GcmArg,
        #[arg(long)]
        w: String,
        #[arg(long)]
        phi: String,
        #[arg(long, value_enum, default_value_t = ModeArg::Recursive)]
        mode: ModeArg,
    },
    /// Predicted vanishing pattern for generic weights in the phi-chamber.
    Predict {
        #[command(flatten)]
        gcm: GcmArg,
        #[arg(long)]
        w: String,
        #[arg(long)]
        phi: String,
    },
    /// Run the cohomology oracle on one line bundle.
    Resolve {
        #[command(flatten)]
        gcm: GcmArg,
        #[arg(long)]
        w: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// Locate the dot-action chamber of a weight.
    Chamber {
        #[command(flatten)]
        gcm: GcmArg,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, default_value_t = DEFAULT_CHAMBER_BUDGET)]
        budget: usize,
    },
    /// Run a verification suite; exits 1 on any violation.
    Verify {
        #[command(flatten)]
        gcm: GcmArg,
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 4)]
        max_length: usize,
        #[arg(long, default_value_t = 10)]
        margin: i64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 5)]
        samples: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Recursive,
    Brute,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Weyl,
    Relative,
    Demazure,
    Cohomology,
    All,
}

impl From<SuiteArg> for SuiteName {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::Weyl => SuiteName::Weyl,
            SuiteArg::Relative => SuiteName::Relative,
            SuiteArg::Demazure => SuiteName::Demazure,
            SuiteArg::Cohomology => SuiteName::Cohomology,
            SuiteArg::All => SuiteName::All,
        }
    }
}

/// A finished run: the document to print and whether it counts as a failure.
struct Output {
    doc: Value,
    failed: bool,
}

impl Output {
    fn ok(doc: Value) -> Self {
        Output { doc, failed: false }
    }
}

fn group_for(arg: &GcmArg) -> Result<WeylGroup, Error> {
    Ok(WeylGroup::new(load_gcm(&arg.gcm)?))
}

fn element(group: &WeylGroup, text: &str) -> Result<WeylElt, Error> {
    group.element(&parse_word(text, group.rank())?)
}

fn run(command: Command) -> Result<Output, Error> {
    match command {
        Command::Enumerate { gcm, max_length } => {
            let group = group_for(&gcm)?;
            let elements = group.elements_up_to(max_length)?;
            let counts = length_counts(&elements, max_length);
            let listed: Vec<Value> =
                elements.iter().map(|w| json!({ "word": w.word_string(), "length": w.length() })).collect();
            Ok(Output::ok(json!({
                "gcm": gcm.gcm,
                "max_length": max_length,
                "counts": counts,
                "total": elements.len(),
                "elements": listed,
            })))
        }
        Command::Tau { gcm, w, phi, mode } => {
            let group = group_for(&gcm)?;
            let (w, phi) = (element(&group, &w)?, element(&group, &phi)?);
            let mode = match mode {
                ModeArg::Recursive => Mode::Recursive,
                ModeArg::Brute => Mode::Brute,
            };
            Ok(Output::ok(json!({
                "tau_plus": tau_plus(&group, &w, &phi, mode).word_string(),
                "tau_minus": tau_minus(&group, &w, &phi, mode).word_string(),
                "l_plus": l_plus(&group, &w, &phi),
                "l_minus": l_minus(&group, &w, &phi),
            })))
        }
        Command::Predict { gcm, w, phi } => {
            let group = group_for(&gcm)?;
            let (w, phi) = (element(&group, &w)?, element(&group, &phi)?);
            Ok(Output::ok(serde_json::to_value(predict_degrees(&group, &w, &phi)).expect("serializable")))
        }
        Command::Resolve { gcm, w, lambda } => {
            let group = group_for(&gcm)?;
            let w = element(&group, &w)?;
            let lambda = parse_weight(&lambda, group.rank())?;
            Ok(Output::ok(serde_json::to_value(resolve(&group, &w, &lambda)).expect("serializable")))
        }
        Command::Chamber { gcm, lambda, budget } => {
            let group = group_for(&gcm)?;
            let lambda = parse_weight(&lambda, group.rank())?;
            let chamber = chamber_of(&group, &lambda, budget)?;
            Ok(Output::ok(json!({
                "phi": chamber.phi.word_string(),
                "length": chamber.phi.length(),
                "dominant_image": chamber.dominant_image,
            })))
        }
        Command::Verify { gcm, suite, max_length, margin, seed, samples } => {
            let group = group_for(&gcm)?;
            let config = SuiteConfig::new(suite.into(), max_length).margin(margin).seed(seed).samples(samples);
            let report = run_suite(&group, &config)?;
            Ok(Output { failed: !report.ok(), doc: serde_json::to_value(&report).expect("serializable") })
        }
    }
}

/// Errors in the input itself exit 2; errors the mathematics raises exit 1.
fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Singular(_) | Error::NotFiniteType | Error::BudgetExceeded { .. } => 1,
        Error::NotGcm(_)
        | Error::NotSymmetrizable(_)
        | Error::IndexOutOfRange { .. }
        | Error::RankMismatch { .. }
        | Error::Parse(_)
        | Error::UnknownGcm(_) => 2,
    }
}

fn render_table(value: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match value {
        Value::Object(map) => {
            let width = map.keys().map(|k| k.len()).max().unwrap_or(0);
            for (k, v) in map {
                if is_scalar(v) {
                    out.push_str(&format!("{pad}{k:<width$}  {}\n", scalar(v)));
                } else {
                    out.push_str(&format!("{pad}{k}:\n"));
                    render_table(v, indent + 1, out);
                }
            }
        }
        Value::Array(items) if items.is_empty() => out.push_str(&format!("{pad}(none)\n")),
        Value::Array(items) if items.iter().all(is_scalar) => {
            let row: Vec<String> = items.iter().map(scalar).collect();
            out.push_str(&format!("{pad}{}\n", row.join(" ")));
        }
        Value::Array(items) => {
            for (n, item) in items.iter().enumerate() {
                out.push_str(&format!("{pad}[{n}]\n"));
                render_table(item, indent + 1, out);
            }
        }
        v => out.push_str(&format!("{pad}{}\n", scalar(v))),
    }
}

fn is_scalar(v: &Value) -> bool {
    match v {
        Value::Array(items) => items.iter().all(|x| !x.is_array() && !x.is_object()) && !items.is_empty(),
        Value::Object(_) => false,
        _ => true,
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) if s.is_empty() => "e".to_string(),
        Value::String(s) => s.clone(),
        Value::Array(items) => format!("({})", items.iter().map(scalar).collect::<Vec<_>>().join(",")),
        other => other.to_string(),
    }
}

fn emit(doc: &Value, format: Format) {
    let text = match format {
        Format::Json => format!("{doc}\n"),
        Format::Table => {
            let mut out = String::new();
            render_table(doc, 0, &mut out);
            out
        }
    };
    // a closed pipe downstream is not an error worth reporting
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(output) => {
            emit(&output.doc, cli.format);
            ExitCode::from(u8::from(output.failed))
        }
        Err(e) => {
            emit(&json!({ "error": { "code": e.code(), "message": e.to_string() } }), cli.format);
            eprintln!("schubert: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
