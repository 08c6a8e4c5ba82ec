//! `verify`: runs lemma, theorem and crosscheck checks and reports them as
//! text on stdout and, with `--out`, as JSON lines.

use std::fs::{self, File};
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{ArgGroup, Parser, Subcommand};
use qdscott::checks::{self, GroupSpec, Mode, Settings, Suite};
use qdscott::report::{Status, VerificationReport};
use qdscott::Error;

#[derive(Parser, Debug)]
#[command(name = "verify", version, about = "Exhaustive checks for Scott modules of the regular wreath embedding")]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Seed for every randomized step.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Largest group the harness will enumerate.
    #[arg(long, global = true)]
    max_order: Option<u64>,
    /// Append JSON-lines reports to this file.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Write the coset and ι tables of the affine group here.
    #[arg(long, global = true)]
    dump_tables: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// One lemma at one prime.
    Lemma {
        #[arg(long)]
        id: String,
        #[arg(long)]
        p: u32,
    },
    /// The main theorem for the affine group, or the side theorem for a named group.
    #[command(group(ArgGroup::new("which").required(true).args(["main", "side"])))]
    Theorem {
        #[arg(long)]
        main: bool,
        #[arg(long)]
        side: bool,
        #[arg(long, requires = "main")]
        p: Option<u32>,
        #[arg(long, requires = "main", default_value = "direct")]
        mode: String,
        /// s4, qd:2, qd:3 or qd:5
        #[arg(long, requires = "side")]
        group: Option<String>,
    },
    /// Oracle comparisons and identity and property suites.
    Crosscheck {
        /// centralizer, brauer, iota, idempotents, identities, properties or all
        #[arg(long)]
        suite: String,
    },
}

enum Failure {
    Usage(String),
    Other(anyhow::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match &e {
            Error::InvalidArgument(_) | Error::InvalidPrime(_) => Failure::Usage(e.to_string()),
            _ => Failure::Other(e.into()),
        }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Other(e)
    }
}

fn settings(cli: &Cli) -> Settings {
    let mut s = Settings {
        seed: cli.seed,
        ..Settings::default()
    };
    if let Some(cap) = cli.max_order {
        s.cfg.max_order = cap;
    }
    s
}

/// The prime whose tables `--dump-tables` writes.
fn table_prime(cmd: &Command) -> Option<u32> {
    match cmd {
        Command::Lemma { p, .. } => Some(*p),
        Command::Theorem { main: true, p, .. } => *p,
        Command::Theorem { group, .. } => match group.as_deref().map(str::parse::<GroupSpec>) {
            Some(Ok(GroupSpec::Qd(p))) => Some(p),
            _ => None,
        },
        Command::Crosscheck { .. } => Some(2),
    }
}

fn dump_tables(dir: &Path, p: u32, s: &Settings) -> Result<(), Failure> {
    let (cosets, iota) = checks::tables(p, &s.cfg)?;
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    for (name, text) in [(format!("cosets-p{p}.txt"), cosets), (format!("iota-p{p}.txt"), iota)] {
        let path = dir.join(name);
        fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(())
}

fn run(cli: &Cli, s: &Settings) -> Result<Vec<VerificationReport>, Failure> {
    match &cli.command {
        Command::Lemma { id, p } => Ok(vec![checks::run_lemma(id, *p, s)?]),
        Command::Theorem {
            main: true, p, mode, ..
        } => {
            let p = p.ok_or_else(|| Failure::Usage("theorem --main needs --p".into()))?;
            let mode: Mode = mode.parse()?;
            Ok(vec![checks::run_theorem_main(p, mode, s)?])
        }
        Command::Theorem { group, .. } => {
            let spec: GroupSpec = group
                .as_deref()
                .ok_or_else(|| Failure::Usage("theorem --side needs --group".into()))?
                .parse()?;
            Ok(vec![checks::run_theorem_side(spec, s)?])
        }
        Command::Crosscheck { suite } if suite == "all" => {
            let mut out = Vec::new();
            for x in Suite::ALL {
                out.extend(checks::run_suite(x, s)?);
            }
            Ok(out)
        }
        Command::Crosscheck { suite } => Ok(checks::run_suite(suite.parse()?, s)?),
    }
}

fn print_human(r: &VerificationReport) {
    println!("{}", r.summary());
    let Some(w) = &r.witness else { return };
    if let Some(note) = w.get("note").and_then(|n| n.as_str()) {
        println!("    {note}");
    }
    if r.status == Status::Fail {
        println!("    witness: {w}");
    }
}

fn write_reports(path: &Path, reports: &[VerificationReport]) -> anyhow::Result<()> {
    let file = File::options()
        .create(true)
        .append(true)
        .open(path)
        .with_context(|| format!("opening {}", path.display()))?;
    let mut w = BufWriter::new(file);
    for r in reports {
        writeln!(w, "{}", r.to_json_line())?;
    }
    w.flush()?;
    Ok(())
}

fn exit_code(reports: &[VerificationReport]) -> u8 {
    if reports.iter().any(|r| r.status == Status::Fail) {
        1
    } else if reports.iter().any(|r| r.status == Status::SkippedCap) {
        3
    } else {
        0
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build_global() {
            eprintln!("verify: {e}");
            return ExitCode::from(2);
        }
    }
    let s = settings(&cli);
    let result = (|| {
        if let (Some(dir), Some(p)) = (&cli.dump_tables, table_prime(&cli.command)) {
            dump_tables(dir, p, &s)?;
        }
        let reports = run(&cli, &s)?;
        if let Some(path) = &cli.out {
            write_reports(path, &reports)?;
        }
        Ok(reports)
    })();
    match result {
        Ok(reports) => {
            reports.iter().for_each(print_human);
            ExitCode::from(exit_code(&reports))
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("verify: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Other(e)) => {
            eprintln!("verify: {e:#}");
            ExitCode::from(1)
        }
    }
}
