use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use arq::report::{HammockEntry, Report};
use arq::{dot, parse, ParseError};
use arq_core::ar_quiver::closed_form_rho_m;
use arq_core::coxeter::{coxeter_matrix, derived_dim_check, order_identity_check, CoxeterData};
use arq_core::dynkin::classify;
use arq_core::{oracle, ARQuiver, DerivedQuiver, DerivedVertex, ValuedQuiver};
use clap::{Parser, Subcommand};
use thiserror::Error;

/// Auslander-Reiten quivers of hereditary artin algebras of Dynkin type.
///
/// Every command reads a quiver file (`-` for stdin) in the format
/// `n <count>` followed by lines `arrow <src> <dst> [<a> <b>]`.
#[derive(Parser)]
#[command(name = "arq", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Dynkin type and the relabeling onto the canonical diagram.
    Classify { file: PathBuf },
    /// Build the full report; JSON goes to stdout unless --json is given.
    Build {
        file: PathBuf,
        /// Write the JSON report here.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Write a Graphviz diagram here.
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Include the hammock tables in the report.
        #[arg(long)]
        hammocks: bool,
    },
    /// Print the hammock starting at the projective P_k.
    Hammock {
        file: PathBuf,
        #[arg(short)]
        k: usize,
    },
    /// Print the Coxeter matrix and its order.
    Coxeter { file: PathBuf },
    /// Print the cluster category object count and the nilpotency indices.
    Cluster { file: PathBuf },
    /// Run every cross-check.
    Check { file: PathBuf },
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: ParseError },
    #[error(transparent)]
    Core(#[from] arq_core::Error),
    #[error("vertex {k} is out of range 1..={n}")]
    BadVertex { k: usize, n: usize },
    #[error("{0} check(s) failed")]
    Checks(usize),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Io { .. } | CliError::Parse { .. } | CliError::BadVertex { .. } => 2,
            CliError::Core(e) if e.is_input_error() => 2,
            CliError::Core(_) | CliError::Checks(_) => 1,
        }
    }
}

fn read_quiver(path: &Path) -> Result<ValuedQuiver, CliError> {
    let io_err = |source| CliError::Io {
        path: path.to_owned(),
        source,
    };
    let mut text = String::new();
    if path.as_os_str() == "-" {
        io::stdin().read_to_string(&mut text).map_err(io_err)?;
    } else {
        text = std::fs::read_to_string(path).map_err(io_err)?;
    }
    parse(&text).map_err(|source| CliError::Parse {
        path: path.to_owned(),
        source,
    })
}

fn write_out(path: &Path, contents: &str) -> Result<(), CliError> {
    if path.as_os_str() == "-" {
        print!("{contents}");
        Ok(())
    } else {
        std::fs::write(path, contents).map_err(|source| CliError::Io {
            path: path.to_owned(),
            source,
        })
    }
}

fn analyze(path: &Path) -> Result<(ARQuiver, CoxeterData), CliError> {
    let q = read_quiver(path)?;
    let arq = ARQuiver::build(&q)?;
    let cd = coxeter_matrix(&arq)?;
    Ok((arq, cd))
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Classify { file } => {
            let q = read_quiver(&file)?;
            let class = classify(&q.underlying_graph()).ok_or(arq_core::Error::NotDynkin)?;
            println!("{} {}", class.family(), class.rank());
            let labels: Vec<String> = class.relabel.iter().map(usize::to_string).collect();
            println!("relabel {}", labels.join(" "));
        }
        Command::Build {
            file,
            json,
            dot: dot_path,
            hammocks,
        } => {
            let (arq, cd) = analyze(&file)?;
            let report = Report::new(&arq, &cd, hammocks)?;
            write_out(json.as_deref().unwrap_or(Path::new("-")), &report.to_json())?;
            if let Some(p) = dot_path {
                write_out(&p, &dot::to_dot(&arq))?;
            }
        }
        Command::Hammock { file, k } => {
            let (arq, _) = analyze(&file)?;
            let h = arq
                .hammocks
                .get(k.wrapping_sub(1))
                .ok_or(CliError::BadVertex { k, n: arq.n() })?;
            let entry = HammockEntry::from(h);
            println!("hammock {k}");
            println!("terminator ({},{})", entry.terminator.r, entry.terminator.i);
            println!("injective ({},{})", entry.injective.r, entry.injective.i);
            let vs: Vec<String> = entry
                .vertices
                .iter()
                .map(|p| format!("({},{})", p.r, p.i))
                .collect();
            println!("vertices {}", vs.join(" "));
            for e in &entry.table {
                println!("({},{}) {}", e.r, e.i, e.h);
            }
        }
        Command::Coxeter { file } => {
            let (arq, cd) = analyze(&file)?;
            println!("{}", cd.cox);
            println!("order {}", cd.order);
            let ok = order_identity_check(&arq, &cd);
            println!("order identity {}", if ok { "holds" } else { "FAILS" });
            if !ok {
                return Err(CliError::Checks(1));
            }
        }
        Command::Cluster { file } => {
            let (arq, cd) = analyze(&file)?;
            let report = Report::new(&arq, &cd, false)?;
            println!("objects {}", report.counts.cluster);
            let n = &report.nilpotency;
            println!(
                "nilpotency module {} derived {} cluster {}",
                n.module, n.derived, n.cluster
            );
        }
        Command::Check { file } => {
            let (arq, cd) = analyze(&file)?;
            let failed = check(&arq, &cd);
            if failed > 0 {
                return Err(CliError::Checks(failed));
            }
        }
    }
    Ok(())
}

/// Prints one line per check and returns the number of failures.
fn check(arq: &ARQuiver, cd: &CoxeterData) -> usize {
    let mut results: Vec<(String, Option<String>)> = oracle::run_all(arq)
        .checks
        .into_iter()
        .map(|c| (c.name.to_string(), c.failure))
        .collect();
    let mut push = |name: &str, outcome: Result<bool, arq_core::Error>| {
        let failure = match outcome {
            Ok(true) => None,
            Ok(false) => Some("does not hold".to_string()),
            Err(e) => Some(e.to_string()),
        };
        results.push((name.to_string(), failure));
    };
    push("closed form matches knit", {
        closed_form_rho_m(&arq.q).map(|(m, rho)| m == arq.m && rho == arq.rho)
    });
    push("pi-index relation", Ok(arq.pi_index_relation_check()));
    push("order identity", Ok(order_identity_check(arq, cd)));
    push("module nilpotency", {
        arq.counts_and_nilpotency(cd.order)
            .map(|c| c.nilpotency + 1 == cd.order)
    });
    let dq = DerivedQuiver::new(arq);
    push(
        "derived nilpotency",
        dq.as_ref()
            .map_err(Clone::clone)
            .and_then(|d| d.derived_nilpotency(cd))
            .map(|_| true),
    );
    push(
        "cluster count",
        dq.as_ref()
            .map_err(Clone::clone)
            .and_then(|d| d.cluster_counts(cd))
            .map(|_| true),
    );
    let samples: Vec<(DerivedVertex, i64)> = arq
        .q
        .vertices()
        .flat_map(|i| {
            let t = i64::from(cd.order);
            [
                (DerivedVertex::new(0, i, 0), t),
                (DerivedVertex::new(0, i, 1), -1),
                (DerivedVertex::new(0, i, 0), 1 - t),
            ]
        })
        .collect();
    push(
        "derived translation follows Coxeter",
        derived_dim_check(arq, cd, &samples),
    );

    let mut failed = 0;
    for (name, failure) in &results {
        match failure {
            None => println!("PASS {name}"),
            Some(why) => {
                failed += 1;
                println!("FAIL {name}: {why}");
            }
        }
    }
    failed
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("arq: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
