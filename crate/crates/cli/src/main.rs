//! selfconv: compute, classify and cross-validate self-convolutive
//! sequences S(alpha1, alpha2, alpha3), and extract complex zeros of the
//! confluent hypergeometric U from moment residuals.

mod bfile;
mod report;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use log::debug;
use selfconv_core::exact::{derived_a005413, derived_a005416, generate_exact};
use selfconv_core::measure::Density;
use selfconv_core::moments::{
    asymptotic_estimate, ln_exact_u, verify_with_poles, MomentPipeline, PipelineForm,
};
use selfconv_core::params::{SequenceParams, ZeroCount};
use selfconv_core::poles::{expected_zero_count, newton_polish, prony_discover, prony_extract};
use selfconv_core::rational::{parse_rational, rat_display};
use selfconv_core::Error as CoreError;

use report::{format_float, Json};

#[derive(Parser)]
#[command(
    name = "selfconv",
    about = "Self-convolutive sequences: exact terms, spectral measures, moment verification, asymptotics and U-function zeros",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Args)]
struct AlphaArg {
    /// The triple a1,a2,a3; entries are exact rationals ("p/q" or decimal)
    #[arg(long, value_name = "A1,A2,A3", allow_hyphen_values = true)]
    alpha: String,
}

impl AlphaArg {
    fn parse(&self) -> Result<SequenceParams, String> {
        let parts: Vec<_> = self.alpha.split(',').collect();
        if parts.len() != 3 {
            return Err(format!(
                "--alpha needs three comma-separated values, got {:?}",
                self.alpha
            ));
        }
        let mut vals = Vec::with_capacity(3);
        for p in parts {
            vals.push(
                parse_rational(p)
                    .ok_or_else(|| format!("cannot parse {p:?} as an exact rational"))?,
            );
        }
        SequenceParams::new(vals[0].clone(), vals[1].clone(), vals[2].clone())
            .map_err(|e| e.to_string())
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print exact terms u_1..u_N (or a derived sequence)
    Gen {
        #[command(flatten)]
        alpha: AlphaArg,
        /// number of terms
        #[arg(long, default_value_t = 10)]
        n: u32,
        /// derived-sequence transform: a005413 (from S(2,-2,1)) or a005416 (from S(2,-3,1))
        #[arg(long)]
        derived: Option<String>,
    },
    /// Cross-validate exact terms against the Mellin-moment route
    Verify {
        #[command(flatten)]
        alpha: AlphaArg,
        #[arg(long, default_value_t = 8)]
        n: u32,
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Dump the spectral-measure density over a grid, plus atom lines
    Measure {
        #[command(flatten)]
        alpha: AlphaArg,
        /// grid lo:hi:count (log-spaced)
        #[arg(long, default_value = "0.01:20:50")]
        grid: String,
    },
    /// Classification report (class, origin residue, zero count)
    Classify {
        #[command(flatten)]
        alpha: AlphaArg,
    },
    /// Locate cut-plane zeros of U from moment residuals (Prony + Newton)
    Poles {
        #[command(flatten)]
        alpha: AlphaArg,
        /// residual rows to compute
        #[arg(long, default_value_t = 8)]
        n: u32,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// ln u_n beside the Gamma-formula asymptotic estimate
    Asymp {
        #[command(flatten)]
        alpha: AlphaArg,
        #[arg(long, default_value_t = 10)]
        n: u32,
    },
    /// Compare exact terms against an OEIS b-file
    OeisCompare {
        #[command(flatten)]
        alpha: AlphaArg,
        /// path to the b-file ("n a(n)" lines, '#' comments)
        #[arg(long)]
        bfile: std::path::PathBuf,
        /// OEIS offset: b-file index n corresponds to u_{n - offset + 1}
        #[arg(long, default_value_t = 1)]
        offset: i64,
        /// cap on the number of generated terms
        #[arg(long, default_value_t = 120)]
        n: u32,
        /// derived-sequence transform applied before comparing
        #[arg(long)]
        derived: Option<String>,
    },
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter("SELFCONV_LOG")).init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(AppError::Usage(msg)) => {
            eprintln!("error: usage: {msg}");
            ExitCode::from(2)
        }
        Err(AppError::Domain { code, msg }) => {
            eprintln!("error: {code}: {msg}");
            ExitCode::from(1)
        }
    }
}

enum AppError {
    Usage(String),
    Domain { code: &'static str, msg: String },
}

impl From<CoreError> for AppError {
    fn from(e: CoreError) -> Self {
        AppError::Domain {
            code: e.code(),
            msg: e.to_string(),
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, AppError> {
    match cli.command {
        Command::Gen { alpha, n, derived } => cmd_gen(alpha, n, derived),
        Command::Verify { alpha, n, tol, format } => cmd_verify(alpha, n, tol, format),
        Command::Measure { alpha, grid } => cmd_measure(alpha, &grid),
        Command::Classify { alpha } => cmd_classify(alpha),
        Command::Poles { alpha, n, tol } => cmd_poles(alpha, n, tol),
        Command::Asymp { alpha, n } => cmd_asymp(alpha, n),
        Command::OeisCompare { alpha, bfile, offset, n, derived } => {
            cmd_oeis_compare(alpha, &bfile, offset, n, derived)
        }
    }
}

fn parse_alpha(a: &AlphaArg) -> Result<SequenceParams, AppError> {
    a.parse().map_err(AppError::Usage)
}

fn apply_derived(
    seq: &selfconv_core::ExactSequence,
    derived: &str,
) -> Result<Vec<selfconv_core::Rat>, AppError> {
    match derived {
        "a005413" => Ok(derived_a005413(seq)?),
        "a005416" => Ok(derived_a005416(seq)?),
        other => Err(AppError::Usage(format!(
            "unknown derived sequence {other:?} (expected a005413 or a005416)"
        ))),
    }
}

fn cmd_gen(alpha: AlphaArg, n: u32, derived: Option<String>) -> Result<ExitCode, AppError> {
    if n == 0 {
        return Err(AppError::Usage("--n must be at least 1".into()));
    }
    let p = parse_alpha(&alpha)?;
    let seq = generate_exact(&p, n as usize);
    let values = match &derived {
        Some(name) => apply_derived(&seq, name)?,
        None => seq.values.clone(),
    };
    let line: Vec<String> = values.iter().map(rat_display).collect();
    println!("{}", line.join(" "));
    Ok(ExitCode::SUCCESS)
}

fn verify_report_json(rep: &selfconv_core::VerificationReport) -> Json {
    Json::obj(vec![
        ("params", Json::Str(rep.params.to_string())),
        ("tol", Json::Float(rep.tol)),
        (
            "rows",
            Json::Array(
                rep.rows
                    .iter()
                    .map(|r| {
                        Json::obj(vec![
                            ("n", Json::Int(r.n as i64)),
                            ("exact", Json::Str(rat_display(&r.exact))),
                            ("numeric", Json::Float(r.numeric)),
                            ("abs_err", Json::Float(r.abs_err)),
                            ("rel_err", Json::Float(r.rel_err)),
                            ("pass", Json::Bool(r.pass)),
                            ("subdivisions", Json::Int(r.subdivisions as i64)),
                            ("tail_fraction", Json::Float(r.tail_fraction)),
                        ])
                    })
                    .collect(),
            ),
        ),
        ("all_pass", Json::Bool(rep.all_pass)),
    ])
}

fn cmd_verify(alpha: AlphaArg, n: u32, tol: f64, format: Format) -> Result<ExitCode, AppError> {
    let p = parse_alpha(&alpha)?;
    // irregular sequences get their poles extracted first
    let classification = p.classify();
    let poles = match classification.zero_count {
        ZeroCount::Known(c) if c > 0 => {
            let pipeline = MomentPipeline::new(&p)?;
            if pipeline.known_poles.is_empty() {
                debug!("extracting {c} poles before verification");
                let ext = prony_extract(&p, c as usize, (2 * c + 4).max(n), tol.min(1e-8))?;
                let polished = newton_polish(
                    &p.sign_normalized().0.chgf_params()?,
                    &ext.pole_set.zeros,
                )?;
                let mut set = ext.pole_set;
                set.zeros = polished;
                Some(set)
            } else {
                None // the pipeline supplies them itself
            }
        }
        _ => None,
    };
    let rep = verify_with_poles(&p, n, tol, poles.as_ref())?;
    match format {
        Format::Json => println!("{}", verify_report_json(&rep).render()),
        Format::Csv => {
            println!("n,exact,numeric,abs_err,rel_err,pass");
            for r in &rep.rows {
                println!(
                    "{},{},{},{},{},{}",
                    r.n,
                    rat_display(&r.exact),
                    format_float(r.numeric),
                    format_float(r.abs_err),
                    format_float(r.rel_err),
                    r.pass
                );
            }
        }
        Format::Table => {
            println!(
                "{:>3} {:>24} {:>22} {:>12} {:>12} pass",
                "n", "exact", "numeric", "abs_err", "rel_err"
            );
            for r in &rep.rows {
                println!(
                    "{:>3} {:>24} {:>22.12e} {:>12.3e} {:>12.3e} {}",
                    r.n,
                    rat_display(&r.exact),
                    r.numeric,
                    r.abs_err,
                    r.rel_err,
                    if r.pass { "ok" } else { "FAIL" }
                );
            }
            println!("all_pass: {}", rep.all_pass);
        }
    }
    Ok(if rep.all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_measure(alpha: AlphaArg, grid: &str) -> Result<ExitCode, AppError> {
    let p = parse_alpha(&alpha)?;
    let parts: Vec<_> = grid.split(':').collect();
    if parts.len() != 3 {
        return Err(AppError::Usage(format!("--grid needs lo:hi:count, got {grid:?}")));
    }
    let lo: f64 = parts[0].parse().map_err(|_| AppError::Usage("bad grid lo".into()))?;
    let hi: f64 = parts[1].parse().map_err(|_| AppError::Usage("bad grid hi".into()))?;
    let count: usize = parts[2].parse().map_err(|_| AppError::Usage("bad grid count".into()))?;
    if !(lo > 0.0 && hi > lo && count >= 2) {
        return Err(AppError::Usage("grid needs 0 < lo < hi and count >= 2".into()));
    }
    let pipeline = MomentPipeline::new(&p)?;
    let measure = match &pipeline.form {
        PipelineForm::Measure(m) => m,
        PipelineForm::Contour(_) => {
            return Err(AppError::Domain {
                code: "complex-contour",
                msg: "this algebraic case has a complex contour, not a real density".into(),
            })
        }
    };
    println!("x,density");
    for i in 0..count {
        let x = lo * ((hi / lo).ln() * i as f64 / (count - 1) as f64).exp();
        let d = if matches!(measure.density, Density::None) {
            0.0
        } else {
            measure.density_at(x)
        };
        println!("{},{}", format_float(x), format_float(d));
    }
    for atom in &measure.atoms {
        println!("atom,{},{}", format_float(atom.location), format_float(atom.weight));
    }
    Ok(ExitCode::SUCCESS)
}

fn classification_json(p: &SequenceParams) -> Json {
    let rep = p.classify();
    let (count, source) = match rep.zero_count {
        ZeroCount::Known(c) => (Json::Int(c as i64), Json::Str("known-by-lemma".into())),
        ZeroCount::Unknown => (Json::Null, Json::Str("unknown-requires-numeric".into())),
    };
    let mut fields = vec![
        ("params", Json::Str(p.to_string())),
        ("class", Json::Str(rep.class.label().into())),
    ];
    if let Some(sub) = rep.class.sublabel() {
        fields.push(("subclass", Json::Str(sub.into())));
    }
    fields.push((
        "r_origin",
        match &rep.r_origin {
            Some(r) => Json::Str(rat_display(r)),
            None => Json::Null,
        },
    ));
    fields.push(("zero_count", count));
    fields.push(("zero_count_source", source));
    fields.push(("sign_flipped", Json::Bool(p.sign_normalized().1)));
    Json::obj(fields)
}

fn cmd_classify(alpha: AlphaArg) -> Result<ExitCode, AppError> {
    let p = parse_alpha(&alpha)?;
    println!("{}", classification_json(&p).render());
    Ok(ExitCode::SUCCESS)
}

fn cmd_poles(alpha: AlphaArg, n: u32, tol: f64) -> Result<ExitCode, AppError> {
    let p = parse_alpha(&alpha)?;
    let (norm, _) = p.sign_normalized();
    let c = norm.chgf_params()?;
    let expected = expected_zero_count(&c);
    let (count, ext) = match expected {
        Some(0) => {
            return Err(AppError::Domain {
                code: "no-zeros",
                msg: "classification reports no cut-plane zeros".into(),
            })
        }
        Some(k) => (k as usize, prony_extract(&p, k as usize, n, tol)?),
        None => {
            debug!("no predicted count; entering discovery mode");
            prony_discover(&p, n, tol)?
        }
    };
    let polished = newton_polish(&c, &ext.pole_set.zeros)?;
    let json = Json::obj(vec![
        ("params", Json::Str(p.to_string())),
        ("count", Json::Int(count as i64)),
        (
            "zeros",
            Json::Array(
                polished
                    .iter()
                    .map(|z| Json::obj(vec![("re", Json::Float(z.re)), ("im", Json::Float(z.im))]))
                    .collect(),
            ),
        ),
        ("residue", Json::Str(rat_display(&ext.pole_set.residue))),
        (
            "fit",
            Json::obj(vec![
                (
                    "coeffs",
                    Json::Array(ext.coefficients.iter().map(|&c| Json::Float(c)).collect()),
                ),
                ("residual", Json::Float(ext.fit_residual)),
            ]),
        ),
        (
            "table",
            Json::Array(
                ext.table
                    .iter()
                    .map(|r| {
                        Json::obj(vec![
                            ("n", Json::Int(r.n as i64)),
                            ("exact", Json::Float(r.exact)),
                            ("integral", Json::Float(r.integral)),
                            ("v", Json::Float(r.v)),
                        ])
                    })
                    .collect(),
            ),
        ),
    ]);
    println!("{}", json.render());
    Ok(ExitCode::SUCCESS)
}

fn cmd_asymp(alpha: AlphaArg, n: u32) -> Result<ExitCode, AppError> {
    let p = parse_alpha(&alpha)?;
    let c = p.chgf_params()?;
    let ln_exact = ln_exact_u(&p, n);
    println!("{:>3} {:>10} {:>10}", "n", "ln|u_n|", "asymptotic");
    for i in 1..=n {
        let (est, _) = asymptotic_estimate(&c, i)?;
        let le = ln_exact[i as usize - 1];
        println!("{i:>3} {le:>10.3} {est:>10.3}");
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_oeis_compare(
    alpha: AlphaArg,
    path: &std::path::Path,
    offset: i64,
    n_cap: u32,
    derived: Option<String>,
) -> Result<ExitCode, AppError> {
    let p = parse_alpha(&alpha)?;
    let text = std::fs::read_to_string(path).map_err(|e| AppError::Domain {
        code: "malformed-bfile",
        msg: bfile::BFileError::Io(e).to_string(),
    })?;
    let entries = bfile::parse_bfile(&text).map_err(|e| AppError::Domain {
        code: "malformed-bfile",
        msg: e.to_string(),
    })?;
    if entries.is_empty() {
        return Err(AppError::Domain {
            code: "malformed-bfile",
            msg: "b-file has no data lines".into(),
        });
    }
    // generate just enough terms, capped
    let max_idx = entries
        .iter()
        .map(|(n, _)| n - offset + 1)
        .max()
        .unwrap_or(1)
        .clamp(1, n_cap as i64) as usize;
    let seq = generate_exact(&p, max_idx.max(2));
    let values = match &derived {
        Some(name) => apply_derived(&seq, name)?,
        None => seq.values.clone(),
    };
    let res = bfile::compare(&entries, &values, offset);
    if res.compared == 0 {
        return Err(AppError::Domain {
            code: "index-mismatch",
            msg: format!(
                "no overlap between b-file indices and u_1..u_{} at offset {offset}",
                values.len()
            ),
        });
    }
    if res.mismatches.is_empty() {
        println!(
            "compared {} terms: all match ({} outside generated range)",
            res.compared, res.skipped_out_of_range
        );
        Ok(ExitCode::SUCCESS)
    } else {
        for (n, file_v, ours) in &res.mismatches {
            eprintln!("mismatch at b-file index {n}: file {file_v}, computed {ours}");
        }
        println!(
            "compared {} terms: {} mismatches",
            res.compared,
            res.mismatches.len()
        );
        Ok(ExitCode::from(1))
    }
}
