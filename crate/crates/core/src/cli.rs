//! The `nilpotentia` command line.
//!
//! Every command prints one JSON document (or JSON lines for `census`) on
//! standard output. Exit status is 0 on success, 1 when the analysis fails
//! and 2 when the input cannot be read or parsed; in both failure cases an
//! error object is written to standard error.

use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::catalog;
use crate::census::{self, CensusConfig, Filter, Modulo};
use crate::classify::{classify_structure, classify_with, ClassifyOptions};
use crate::error::Error;
use crate::formats::{
    classification_json, glue_spec_from_json, glue_spec_json, nilpotency_json, parse_semigroup,
    rees_spec_from_json, semigroup_json, verdict_json,
};
use crate::nilpotency::{decide_nilpotent, decide_nilpotent_with, Multipliers};
use crate::rees::{build_rees, glued_union, rees_nilpotency_criterion};
use crate::structure::{is_minimal_non_nilpotent_capped, MinimalityMode, DEFAULT_CAP};

pub const CAP_VAR: &str = "NILPOTENTIA_CAP";

#[derive(Debug, Parser)]
#[command(name = "nilpotentia", version, about = "Malcev nilpotency of finite semigroups")]
pub struct Cli {
    /// Worker threads for census and minimality sweeps.
    #[arg(long, global = true, default_value_t = 1)]
    pub threads: usize,
    /// Human-readable output instead of JSON.
    #[arg(long, global = true)]
    pub pretty: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    #[value(name = "4gen")]
    FourGen,
    Exhaustive,
}

impl From<ModeArg> for MinimalityMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::FourGen => MinimalityMode::FourGenerator,
            ModeArg::Exhaustive => MinimalityMode::Exhaustive,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModuloArg {
    Iso,
    Isoanti,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FilterArg {
    All,
    Mnn,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Nilpotency, minimality and type in one report.
    Analyze {
        file: String,
        #[arg(long, value_enum, default_value = "4gen")]
        mode: ModeArg,
    },
    /// Nilpotency class or a non-nilpotency witness.
    Class {
        file: String,
        /// Also report the variant with multipliers drawn from S only.
        #[arg(long)]
        s_only: bool,
    },
    /// Minimal non-nilpotency certificate.
    Minimal {
        file: String,
        #[arg(long, value_enum, default_value = "4gen")]
        mode: ModeArg,
    },
    /// Type of a minimal non-nilpotent semigroup.
    Classify {
        file: String,
        #[arg(long, value_enum, default_value = "4gen")]
        mode: ModeArg,
        /// Classify against every qualifying ideal and require agreement.
        #[arg(long)]
        verify_all_ideals: bool,
    },
    /// Rees matrix semigroups.
    Rees {
        #[command(subcommand)]
        command: ReesCommand,
    },
    /// Glued union of an inverse ideal and an acting semigroup.
    Glue { specfile: String },
    /// A named semigroup with its expected properties.
    Catalog { name: String },
    /// All semigroups of a given order, one per line.
    Census {
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum, default_value = "iso")]
        modulo: ModuloArg,
        #[arg(long, value_enum, default_value = "all")]
        filter: FilterArg,
        #[arg(long, default_value_t = 1)]
        shards: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum ReesCommand {
    /// Build the semigroup described by a specification.
    Build { specfile: String },
}

enum Failure {
    Input(Error),
    Analysis(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_input_error() {
            Failure::Input(e)
        } else {
            Failure::Analysis(e)
        }
    }
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
}

impl Io<'_> {
    fn read(&mut self, path: &str) -> Result<String, Failure> {
        let mut text = String::new();
        if path == "-" {
            self.stdin
                .read_to_string(&mut text)
                .map_err(|e| Failure::Input(Error::Parse(format!("stdin: {e}"))))?;
        } else {
            text = fs::read_to_string(path)
                .map_err(|e| Failure::Input(Error::Parse(format!("{path}: {e}"))))?;
        }
        Ok(text)
    }

    fn read_json(&mut self, path: &str) -> Result<Value, Failure> {
        let text = self.read(path)?;
        serde_json::from_str(&text).map_err(|e| Failure::Input(Error::Parse(e.to_string())))
    }
}

fn cap_from_env() -> Result<usize, Failure> {
    match std::env::var(CAP_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Input(Error::Parse(format!("{CAP_VAR} must be an integer")))),
        Err(_) => Ok(DEFAULT_CAP),
    }
}

/// Indented `key: value` rendering of a JSON document.
pub fn render_pretty(v: &Value) -> String {
    fn go(v: &Value, indent: usize, out: &mut String) {
        let pad = "  ".repeat(indent);
        match v {
            Value::Object(m) => {
                for (k, x) in m {
                    match x {
                        Value::Object(_) => {
                            out.push_str(&format!("{pad}{k}:\n"));
                            go(x, indent + 1, out);
                        }
                        Value::Array(xs) if xs.iter().any(|y| y.is_object() || y.is_array()) => {
                            out.push_str(&format!("{pad}{k}:\n"));
                            go(x, indent + 1, out);
                        }
                        _ => out.push_str(&format!("{pad}{k}: {}\n", scalar(x))),
                    }
                }
            }
            Value::Array(xs) => {
                for x in xs {
                    if x.is_object() {
                        out.push_str(&format!("{pad}-\n"));
                        go(x, indent + 1, out);
                    } else {
                        out.push_str(&format!("{pad}- {}\n", scalar(x)));
                    }
                }
            }
            other => out.push_str(&format!("{pad}{}\n", scalar(other))),
        }
    }
    fn scalar(v: &Value) -> String {
        match v {
            Value::String(s) => s.clone(),
            Value::Array(xs) => {
                let parts: Vec<String> = xs.iter().map(scalar).collect();
                format!("[{}]", parts.join(", "))
            }
            other => other.to_string(),
        }
    }
    let mut out = String::new();
    go(v, 0, &mut out);
    out
}

fn emit(out: &mut dyn Write, v: &Value, pretty: bool) -> Result<(), Failure> {
    let text = if pretty {
        render_pretty(v)
    } else {
        format!("{v}\n")
    };
    out.write_all(text.as_bytes())
        .map_err(|e| Failure::Analysis(Error::Parse(format!("write failed: {e}"))))
}

fn analyze(io: &mut Io<'_>, file: &str, mode: MinimalityMode, cap: usize) -> Result<Value, Failure> {
    let started = Instant::now();
    let s = parse_semigroup(&io.read(file)?)?;
    let nil = decide_nilpotent(&s);
    let mut report = json!({
        "tool": "nilpotentia",
        "version": env!("CARGO_PKG_VERSION"),
        "input": { "source": file, "order": s.order(), "elements": s.labels() },
        "nilpotency": nilpotency_json(&s, &nil),
    });
    if nil.is_nilpotent() {
        report["minimality"] = json!({ "minimal": false, "reason": "nilpotent" });
        report["classification"] = Value::Null;
    } else {
        let v = is_minimal_non_nilpotent_capped(&s, mode, cap)?;
        report["minimality"] = verdict_json(&s, &v);
        report["classification"] = if v.minimal {
            classification_json(&s, &classify_structure(&s, false)?)
        } else {
            Value::Null
        };
    }
    report["timing_ms"] = json!(started.elapsed().as_millis() as u64);
    Ok(report)
}

fn execute(cli: &Cli, io: &mut Io<'_>) -> Result<(), Failure> {
    let cap = cap_from_env()?;
    let pretty = cli.pretty;
    match &cli.command {
        Command::Analyze { file, mode } => {
            let report = analyze(io, file, (*mode).into(), cap)?;
            emit(io.stdout, &report, pretty)
        }
        Command::Class { file, s_only } => {
            let s = parse_semigroup(&io.read(file)?)?;
            let mut v = nilpotency_json(&s, &decide_nilpotent(&s));
            if *s_only {
                v["s_only"] = nilpotency_json(&s, &decide_nilpotent_with(&s, Multipliers::SemigroupOnly));
            }
            emit(io.stdout, &v, pretty)
        }
        Command::Minimal { file, mode } => {
            let s = parse_semigroup(&io.read(file)?)?;
            let v = is_minimal_non_nilpotent_capped(&s, (*mode).into(), cap)?;
            emit(io.stdout, &verdict_json(&s, &v), pretty)
        }
        Command::Classify {
            file,
            mode,
            verify_all_ideals,
        } => {
            let s = parse_semigroup(&io.read(file)?)?;
            let opts = ClassifyOptions {
                mode: (*mode).into(),
                verify_all_ideals: *verify_all_ideals,
                cap,
            };
            let c = classify_with(&s, opts)?;
            emit(io.stdout, &classification_json(&s, &c), pretty)
        }
        Command::Rees {
            command: ReesCommand::Build { specfile },
        } => {
            let v = io.read_json(specfile)?;
            let spec = rees_spec_from_json(&v)?;
            let (s, _) = build_rees(&spec)?;
            let out = json!({
                "semigroup": semigroup_json(&s),
                "monomial": spec.is_monomial(),
                "nilpotent_by_criterion": rees_nilpotency_criterion(&spec),
            });
            emit(io.stdout, &out, pretty)
        }
        Command::Glue { specfile } => {
            let v = io.read_json(specfile)?;
            let gs = glue_spec_from_json(&v)?;
            let s = glued_union(&gs)?;
            emit(io.stdout, &json!({ "semigroup": semigroup_json(&s) }), pretty)
        }
        Command::Catalog { name } => {
            let e = catalog::entry(name).map_err(Failure::Input)?;
            let out = json!({
                "name": e.name,
                "semigroup": semigroup_json(&e.semigroup),
                "expected": e.expected,
                "description": e.description,
                "expected_offender": e.expected_offender,
                "glue": e.glue.as_ref().map(glue_spec_json),
            });
            emit(io.stdout, &out, pretty)
        }
        Command::Census {
            order,
            modulo,
            filter,
            shards,
            out,
        } => {
            let cfg = CensusConfig {
                order: *order,
                modulo: match modulo {
                    ModuloArg::Iso => Modulo::Iso,
                    ModuloArg::Isoanti => Modulo::IsoAntiIso,
                },
                shards: *shards,
                filter: match filter {
                    FilterArg::All => Filter::All,
                    FilterArg::Mnn => Filter::MinimalNonNilpotent,
                },
            };
            let rows = census::run(&cfg)?;
            let mut text = String::new();
            for (s, c) in &rows {
                let mut line = semigroup_json(s);
                if let Some(c) = c {
                    line["type"] = json!(c.verdict.name());
                }
                text.push_str(&line.to_string());
                text.push('\n');
            }
            match out {
                Some(path) => fs::write(path, text)
                    .map_err(|e| Failure::Analysis(Error::Parse(format!("{}: {e}", path.display())))),
                None => io
                    .stdout
                    .write_all(text.as_bytes())
                    .map_err(|e| Failure::Analysis(Error::Parse(format!("write failed: {e}")))),
            }
        }
    }
}

fn error_json(e: &Error) -> Value {
    json!({ "error": e.kind(), "message": e.to_string() })
}

/// Runs the command line with explicit streams and returns the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 {
                write!(stdout, "{e}")
            } else {
                write!(stderr, "{e}")
            };
            return code;
        }
    };
    // A global pool can only be installed once per process.
    let _ = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads.max(1))
        .build_global();
    let mut io = Io { stdin, stdout };
    match execute(&cli, &mut io) {
        Ok(()) => 0,
        Err(Failure::Input(e)) => {
            let _ = writeln!(stderr, "{}", error_json(&e));
            2
        }
        Err(Failure::Analysis(e)) => {
            let _ = writeln!(stderr, "{}", error_json(&e));
            1
        }
    }
}

pub fn main_exit() -> ! {
    let code = run(
        std::env::args_os(),
        &mut std::io::stdin().lock(),
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    );
    std::process::exit(code)
}
