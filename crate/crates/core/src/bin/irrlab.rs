use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand};

use irrlab::pattern::{find_counterexamples, Pattern};
use irrlab::poly::bounded_slice_check;
use irrlab::report::{emit_report, Format, Report, RingSection};
use irrlab::ring::{build, check_axioms, check_derived};
use irrlab::verify::{builtin_catalog, parse_catalog, run_catalog, PropId};
use irrlab::{Error, FiniteRing, RingSpec};

#[derive(Debug, Parser)]
#[command(
    name = "irrlab",
    version,
    about = "Irreducible elements in finite commutative rings"
)]
struct Cli {
    /// Emit JSON instead of text tables.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Derived sets and principal ideals of one ring.
    Info { spec: String },
    /// Per-element flags: zero, unit, zd, harmless, irr, b_irr, f_irr.
    Classify {
        spec: String,
        /// Only classify the element with this label, e.g. "(1,0)".
        #[arg(long)]
        element: Option<String>,
    },
    /// Run the proposition suite over a catalog.
    #[command(group(ArgGroup::new("source").args(["catalog", "builtin"])))]
    Verify {
        /// Comma-separated proposition ids (P1..P7, C1); all by default.
        #[arg(long)]
        props: Option<String>,
        /// Catalog file, one spec per line, '#' comments.
        #[arg(long)]
        catalog: Option<PathBuf>,
        /// Use the builtin catalog (the default).
        #[arg(long)]
        builtin: bool,
    },
    /// List elements whose flags match a boolean pattern.
    Search {
        #[arg(long)]
        pattern: String,
        spec: String,
    },
    /// Check zero divisors of A[x] on polynomials of bounded degree.
    Polyslice {
        #[arg(long)]
        base: String,
        #[arg(long)]
        degree: usize,
    },
}

fn ring_from(text: &str) -> Result<FiniteRing, Error> {
    let ring = build(&RingSpec::parse(text)?)?;
    check_axioms(&ring)?;
    check_derived(&ring)?;
    Ok(ring)
}

fn run(cli: Cli) -> Result<(Report, i32), Error> {
    let mut report = Report::default();
    let mut status = 0;
    match cli.command {
        Command::Info { spec } => {
            let ring = ring_from(&spec)?;
            report
                .rings
                .push(RingSection::new(&ring).with_ideals(&ring));
        }
        Command::Classify { spec, element } => {
            let ring = ring_from(&spec)?;
            let only = match element {
                Some(label) => Some(ring.find_label(&label).ok_or_else(|| {
                    Error::Usage(format!("no element labelled '{label}' in {spec}"))
                })?),
                None => None,
            };
            report
                .rings
                .push(RingSection::new(&ring).with_elements(&ring, only));
        }
        Command::Verify { props, catalog, .. } => {
            let props = match props {
                Some(list) => PropId::parse_list(&list)?,
                None => PropId::ALL.to_vec(),
            };
            let specs = match catalog {
                Some(path) => {
                    let text = std::fs::read_to_string(&path).map_err(|e| {
                        Error::Usage(format!("cannot read {}: {e}", path.display()))
                    })?;
                    parse_catalog(&text)?
                }
                None => builtin_catalog(),
            };
            let verified = run_catalog(&specs, &props)?;
            status = verified.exit_code();
            report = verified.into();
        }
        Command::Search { pattern, spec } => {
            let ring = ring_from(&spec)?;
            let parsed = Pattern::parse(&pattern)?;
            let matches = find_counterexamples(&ring, &parsed);
            report
                .rings
                .push(RingSection::new(&ring).with_search(&ring, &pattern, &matches));
        }
        Command::Polyslice { base, degree } => {
            let ring = ring_from(&base)?;
            let slice = bounded_slice_check(&ring, degree)?;
            if !slice.passed() {
                status = 1;
            }
            report.slices.push(slice);
        }
    }
    Ok((report, status))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = if cli.json { Format::Json } else { Format::Text };
    match run(cli) {
        Ok((report, status)) => {
            print!("{}", emit_report(&report, format));
            ExitCode::from(status as u8)
        }
        Err(e) => {
            eprintln!("irrlab: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
