//! `mtz` — command-line front end for multitangent and multiple zeta
//! evaluation, reduction, and identity checking.
//!
//! Exit codes: 0 success, 1 at least one check failed, 2 parse error,
//! 3 domain error (divergent or inadmissible index, bad configuration),
//! 4 evaluation at a pole.

use std::fmt::Write as _;
use std::io::Write as _;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use num::complex::Complex64;
use tangentzeta::{
    check_kawashima, check_multitangent_formula, eval_multitangent_direct, eval_mzv,
    eval_product_combination, reduce_to_monotangents, run_suite, z_samples, CheckReport, Error,
    Index, PrecisionConfig, Result,
};

#[derive(Parser)]
#[command(
    name = "mtz",
    version,
    about = "Multitangent functions and symmetric multiple zeta values"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Target absolute error for zeta evaluations.
    #[arg(long, global = true, default_value_t = 1e-10)]
    prec: f64,

    /// Term cutoff for the polylogarithm fast path.
    #[arg(long, global = true, default_value_t = 400)]
    cutoff: usize,

    /// Truncation radius for direct-series oracles.
    #[arg(long = "oracle-cutoff", global = true, default_value_t = 100_000)]
    oracle_cutoff: usize,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Pretty)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Pretty,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Multiple zeta values.
    #[command(subcommand)]
    Mzv(MzvCommand),
    /// Multitangent functions.
    #[command(subcommand)]
    Mtgf(MtgfCommand),
    /// Identity checks.
    #[command(subcommand)]
    Check(CheckCommand),
}

#[derive(Subcommand)]
enum MzvCommand {
    /// Evaluate ζ at a tail-admissible index such as `1,2`.
    Eval { index: String },
}

#[derive(Subcommand)]
enum MtgfCommand {
    /// Write Ψ_k as a zeta-weighted combination of monotangents.
    Reduce { index: String },
    /// Evaluate Ψ_k at a non-integer point.
    Eval {
        index: String,
        /// Evaluation point as `re` or `re,im`.
        #[arg(long)]
        z: String,
        /// Also run the direct bilateral series and report its tail bound.
        #[arg(long)]
        oracle: bool,
    },
}

#[derive(Subcommand)]
enum CheckCommand {
    /// Symmetric-value formula against the direct series for one index.
    Main {
        #[arg(long)]
        k: String,
    },
    /// Kawashima-analogue relation for a pair of admissible indices.
    Kawashima {
        #[arg(long)]
        k: String,
        #[arg(long)]
        l: String,
    },
    /// Every check family within a weight cap.
    Suite {
        #[arg(long = "weight-cap", default_value_t = 5)]
        weight_cap: u32,
    },
}

/// Appends a line to the output buffer; writing into a `String` is
/// infallible.
macro_rules! outln {
    ($($arg:tt)*) => {
        writeln!($($arg)*).expect("string write")
    };
}

fn parse_index(text: &str) -> Result<Index> {
    Index::from_str(text.trim())
}

fn parse_complex(text: &str) -> Result<Complex64> {
    let bad = || Error::Parse(format!("expected `re` or `re,im`, got `{text}`"));
    let mut parts = text.trim().splitn(2, ',');
    let re: f64 = parts
        .next()
        .ok_or_else(bad)?
        .trim()
        .parse()
        .map_err(|_| bad())?;
    let im: f64 = match parts.next() {
        Some(s) => s.trim().parse().map_err(|_| bad())?,
        None => 0.0,
    };
    Ok(Complex64::new(re, im))
}

fn fmt_complex(z: Complex64) -> String {
    if z.im == 0.0 {
        format!("{}", z.re)
    } else if z.im < 0.0 {
        format!("{}{}i", z.re, z.im)
    } else {
        format!("{}+{}i", z.re, z.im)
    }
}

fn json_complex(z: Complex64) -> serde_json::Value {
    serde_json::json!({ "re": z.re, "im": z.im })
}

fn emit_reports(out: &mut String, reports: &[CheckReport], format: Format) -> ExitCode {
    match format {
        Format::Pretty => {
            for r in reports {
                outln!(out, "{r}");
            }
            let failed = reports.iter().filter(|r| !r.passed).count();
            outln!(out, "{} checks, {} failed", reports.len(), failed);
        }
        Format::Json => {
            for r in reports {
                outln!(out, "{}", r.to_json());
            }
        }
        Format::Csv => {
            outln!(out, "{}", CheckReport::CSV_HEADER);
            for r in reports {
                outln!(out, "{}", r.to_csv_row());
            }
        }
    }
    if reports.iter().all(|r| r.passed) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run_mzv(out: &mut String, cmd: &MzvCommand, cfg: &PrecisionConfig, format: Format) -> Result<ExitCode> {
    match cmd {
        MzvCommand::Eval { index } => {
            let k = parse_index(index)?;
            let value = eval_mzv(&k, cfg)?;
            match format {
                Format::Pretty => {
                    outln!(out, "ζ({k}) = {value}  (abs error ≤ {:e})", cfg.target_abs_error)
                }
                Format::Json => outln!(
                    out,
                    "{}",
                    serde_json::json!({
                        "index": k.to_string(),
                        "value": value,
                        "error_estimate": cfg.target_abs_error,
                    })
                ),
                Format::Csv => {
                    outln!(out, "index,value,error_estimate");
                    outln!(out, "\"{k}\",{value:e},{:e}", cfg.target_abs_error);
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn run_mtgf(out: &mut String, cmd: &MtgfCommand, cfg: &PrecisionConfig, format: Format) -> Result<ExitCode> {
    match cmd {
        MtgfCommand::Reduce { index } => {
            let k = parse_index(index)?;
            let combination = reduce_to_monotangents(&k)?;
            let mut numeric = Vec::new();
            for (s, c) in combination.iter() {
                numeric.push((*s, eval_product_combination(c, cfg)?));
            }
            match format {
                Format::Pretty => {
                    let lhs = format!("Ψ_{{{k}}}(z)");
                    outln!(out, "{lhs} = {combination}");
                    let flat = if numeric.is_empty() {
                        "0".to_string()
                    } else {
                        numeric
                            .iter()
                            .map(|(s, v)| format!("{v}·Ψ_{s}"))
                            .collect::<Vec<_>>()
                            .join(" + ")
                    };
                    outln!(out, "{:width$} = {flat}", "", width = lhs.chars().count());
                }
                Format::Json => {
                    let numeric_json: Vec<serde_json::Value> = numeric
                        .iter()
                        .map(|(s, v)| serde_json::json!({ "s": s, "coefficient": v }))
                        .collect();
                    outln!(
                        out,
                        "{}",
                        serde_json::json!({
                            "index": k.to_string(),
                            "symbolic": combination.to_string(),
                            "combination": combination.to_json(),
                            "numeric": numeric_json,
                        })
                    );
                }
                Format::Csv => {
                    outln!(out, "s,coefficient");
                    for (s, v) in &numeric {
                        outln!(out, "{s},{v:e}");
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        MtgfCommand::Eval { index, z, oracle } => {
            let k = parse_index(index)?;
            let z = parse_complex(z)?;
            let value = reduce_to_monotangents(&k)?.eval_at(z, cfg)?;
            let direct = if *oracle {
                Some(eval_multitangent_direct(&k, z, cfg)?)
            } else {
                None
            };
            match format {
                Format::Pretty => {
                    outln!(out, "Ψ_{{{k}}}({}) = {}", fmt_complex(z), fmt_complex(value));
                    if let Some(d) = &direct {
                        outln!(
                            out,
                            "direct series = {}  (tail bound {:e})",
                            fmt_complex(d.value),
                            d.tail_bound
                        );
                        outln!(out, "|difference|  = {:e}", (value - d.value).norm());
                    }
                }
                Format::Json => {
                    let mut obj = serde_json::json!({
                        "index": k.to_string(),
                        "z": json_complex(z),
                        "value": json_complex(value),
                    });
                    if let Some(d) = &direct {
                        obj["oracle"] = serde_json::json!({
                            "value": json_complex(d.value),
                            "tail_bound": d.tail_bound,
                            "difference": (value - d.value).norm(),
                        });
                    }
                    outln!(out, "{obj}");
                }
                Format::Csv => {
                    outln!(out, "index,z,value_re,value_im");
                    outln!(out, "\"{k}\",\"{}\",{:e},{:e}", fmt_complex(z), value.re, value.im);
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn run_check(out: &mut String, cmd: &CheckCommand, cfg: &PrecisionConfig, format: Format) -> Result<ExitCode> {
    let reports = match cmd {
        CheckCommand::Main { k } => {
            vec![check_multitangent_formula(&parse_index(k)?, &z_samples(), cfg)?]
        }
        CheckCommand::Kawashima { k, l } => {
            vec![check_kawashima(&parse_index(k)?, &parse_index(l)?, cfg)?]
        }
        CheckCommand::Suite { weight_cap } => run_suite(*weight_cap, cfg),
    };
    Ok(emit_reports(out, &reports, format))
}

fn run(cli: &Cli, out: &mut String) -> Result<ExitCode> {
    let cfg = PrecisionConfig {
        target_abs_error: cli.prec,
        series_cutoff: cli.cutoff,
        oracle_cutoff: cli.oracle_cutoff,
    };
    cfg.validate()?;
    match &cli.command {
        Command::Mzv(cmd) => run_mzv(out, cmd, &cfg, cli.format),
        Command::Mtgf(cmd) => run_mtgf(out, cmd, &cfg, cli.format),
        Command::Check(cmd) => run_check(out, cmd, &cfg, cli.format),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let code = match run(&cli, &mut out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Parse(_) => ExitCode::from(2),
                Error::Pole(_) => ExitCode::from(4),
                _ => ExitCode::from(3),
            }
        }
    };
    // a closed pipe (e.g. piping into `head`) is not an error
    if let Err(e) = std::io::stdout().write_all(out.as_bytes()) {
        if e.kind() != std::io::ErrorKind::BrokenPipe {
            eprintln!("error: {e}");
            return ExitCode::FAILURE;
        }
    }
    code
}
