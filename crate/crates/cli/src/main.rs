//! `strata`: command-line front end for oper-strata.
//!
//! Exit status: 0 success, 1 usage error, 2 domain error (including a
//! failing entry in `check-type`), 3 I/O error. Errors are written to
//! standard error as one line `error[CODE]: message`.

mod args;
mod render;

use std::fs;
use std::io::{self, IsTerminal, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::Parser;
use serde::{Deserialize, Serialize};

use args::{Cli, Command, Format, Shape, TypeArgs};
use oper_strata::dims::{dim_component, extremal_report, moduli_dims, strata_table};
use oper_strata::simpson3::{iterate_step, simpson_limit_rank3, GradedType, Hn3Profile};
use oper_strata::vhs::{check_vhs_admissible, enumerate_vhs_types, AdmissibilityReport};
use oper_strata::{Genus, VhsType};

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Domain(#[from] oper_strata::Error),
    #[error("{path}: {message}")]
    InvalidInput { path: PathBuf, message: String },
    #[error("{count} of {total} types fail admissibility")]
    Inadmissible { count: usize, total: usize },
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
}

impl CliError {
    fn code(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "USAGE",
            CliError::Domain(e) => e.code(),
            CliError::InvalidInput { .. } => "INVALID_INPUT",
            CliError::Inadmissible { .. } => "NOT_ADMISSIBLE",
            CliError::Io { .. } => "IO",
        }
    }

    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Domain(_) | CliError::InvalidInput { .. } | CliError::Inadmissible { .. } => {
                2
            }
            CliError::Io { .. } => 3,
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

/// A rendered report plus an error to raise after it has been written.
struct Report {
    json: String,
    table: String,
    deferred: Option<CliError>,
}

impl Report {
    fn new<T: Serialize>(value: &T, table: String) -> Self {
        let json = serde_json::to_string_pretty(value).expect("reports serialize") + "\n";
        Report {
            json,
            table,
            deferred: None,
        }
    }
}

#[derive(Serialize)]
struct CheckedType<'a> {
    #[serde(rename = "type")]
    ty: &'a VhsType,
    #[serde(flatten)]
    report: &'a AdmissibilityReport,
}

#[derive(Deserialize)]
struct StepInput {
    graded: GradedType,
    destabilizer: GradedType,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum StepFile {
    One(StepInput),
    Many(Vec<StepInput>),
}

fn genus(g: i64) -> Result<Genus> {
    Ok(Genus::new(g)?)
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })?;
    serde_json::from_str(&text).map_err(|e| CliError::InvalidInput {
        path: path.to_owned(),
        message: e.to_string(),
    })
}

fn single_type(ty: &TypeArgs) -> Result<VhsType> {
    match (&ty.ranks, &ty.degrees) {
        (Some(r), Some(d)) => Ok(VhsType::new(r.clone(), d.clone())?),
        _ => Err(CliError::Usage(
            "both --ranks and --degrees are required".into(),
        )),
    }
}

fn required(value: Option<i64>, flag: &str, shape: &str) -> Result<i64> {
    value.ok_or_else(|| CliError::Usage(format!("--{flag} is required for --shape {shape}")))
}

fn profile(
    shape: Shape,
    [d, l, a1, a2, deg_i, deg_n, deg_j, deg_m]: [Option<i64>; 8],
) -> Result<Hn3Profile> {
    use oper_strata::Error::MissingSaturationDegree;
    Ok(match shape {
        Shape::Line => Hn3Profile::Line {
            d: required(d, "d", "line")?,
            deg_i: deg_i.ok_or(MissingSaturationDegree("deg_i"))?,
        },
        Shape::Plane => Hn3Profile::Plane {
            l: required(l, "l", "plane")?,
            deg_n: deg_n.ok_or(MissingSaturationDegree("deg_n"))?,
        },
        Shape::Full => Hn3Profile::Full {
            a1: required(a1, "a1", "full")?,
            a2: required(a2, "a2", "full")?,
            deg_j: deg_j.ok_or(MissingSaturationDegree("deg_j"))?,
            deg_m,
        },
    })
}

fn execute(command: &Command) -> Result<Report> {
    Ok(match command {
        Command::Enumerate(a) => {
            let types = enumerate_vhs_types(a.rank, genus(a.genus)?)?;
            Report::new(&types, render::types(&types))
        }
        Command::CheckType { ty, file, genus: g } => {
            let g = genus(*g)?;
            let (types, many) = match file {
                Some(path) => (read_json::<Vec<VhsType>>(path)?, true),
                None => (vec![single_type(ty)?], false),
            };
            let reports: Vec<(VhsType, AdmissibilityReport)> = types
                .into_iter()
                .map(|v| {
                    let rep = check_vhs_admissible(&v, g);
                    (v, rep)
                })
                .collect();
            let entries: Vec<CheckedType> = reports
                .iter()
                .map(|(ty, report)| CheckedType { ty, report })
                .collect();
            let mut report = if many {
                Report::new(&entries, render::admissibility(&reports))
            } else {
                Report::new(&entries[0], render::admissibility(&reports))
            };
            let count = reports.iter().filter(|(_, r)| !r.passed()).count();
            if count > 0 {
                report.deferred = Some(CliError::Inadmissible {
                    count,
                    total: reports.len(),
                });
            }
            report
        }
        Command::Dims { ty, genus: g } => {
            let v = single_type(ty)?;
            let rep = dim_component(&v, genus(*g)?)?;
            Report::new(&rep, render::dims(&v, &rep))
        }
        Command::Strata(a) => {
            let rows = strata_table(a.rank, genus(a.genus)?)?;
            Report::new(&rows, render::strata(&rows))
        }
        Command::Moduli(a) => {
            let m = moduli_dims(a.rank, genus(a.genus)?)?;
            Report::new(&m, render::moduli(&m))
        }
        Command::Extremal(a) => {
            let e = extremal_report(a.rank, genus(a.genus)?)?;
            Report::new(&e, render::extremal(&e))
        }
        Command::Simpson3 {
            shape,
            d,
            l,
            a1,
            a2,
            deg_i,
            deg_n,
            deg_j,
            deg_m,
            genus: g,
        } => {
            let g = genus(*g)?;
            let p = profile(*shape, [*d, *l, *a1, *a2, *deg_i, *deg_n, *deg_j, *deg_m])?;
            let out = simpson_limit_rank3(&p, g)?;
            Report::new(&out, render::simpson(&out))
        }
        Command::IterateStep { file } => match read_json::<StepFile>(file)? {
            StepFile::One(s) => {
                let next = iterate_step(&s.graded, &s.destabilizer)?;
                Report::new(&next, render::graded(std::slice::from_ref(&next)))
            }
            StepFile::Many(steps) => {
                let results = steps
                    .iter()
                    .map(|s| iterate_step(&s.graded, &s.destabilizer))
                    .collect::<oper_strata::Result<Vec<_>>>()?;
                Report::new(&results, render::graded(&results))
            }
        },
    })
}

fn emit(report: &Report, format: Format, output: Option<&Path>) -> Result<()> {
    let text = match format {
        Format::Json => &report.json,
        Format::Table => &report.table,
    };
    match output {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Io {
            path: path.to_owned(),
            source,
        }),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|()| out.flush())
                .map_err(|source| CliError::Io {
                    path: "<stdout>".into(),
                    source,
                })
        }
    }
}

fn run(cli: &Cli) -> Result<()> {
    let format = cli.format.unwrap_or_else(|| {
        if cli.output.is_none() && io::stdout().is_terminal() {
            Format::Table
        } else {
            Format::Json
        }
    });
    let report = execute(&cli.command)?;
    emit(&report, format, cli.output.as_deref())?;
    match report.deferred {
        Some(e) => Err(e),
        None => Ok(()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if !e.use_stderr() {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            // First paragraph of clap's message, on one line.
            let rendered = e.to_string();
            let summary: Vec<&str> = rendered
                .lines()
                .take_while(|l| !l.trim().is_empty())
                .map(str::trim)
                .collect();
            let summary = summary.join(" ");
            eprintln!("error[USAGE]: {}", summary.trim_start_matches("error: "));
            return ExitCode::from(1);
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error[{}]: {e}", e.code());
            ExitCode::from(e.exit_code())
        }
    }
}
