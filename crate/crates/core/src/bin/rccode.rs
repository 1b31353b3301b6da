use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};

use rccode::analysis;
use rccode::census::{self, OracleMode};
use rccode::report::{ClassifyRecord, Format, OracleRecord, RingInfo, RowRecord, TableRecord};
use rccode::{ChainRing, CyclicCode, Error, PolyRing, DEFAULT_ENUMERATION_BOUND};

/// Cyclic codes over finite chain rings: reversibility and (u,k) reversible
/// complement classification.
#[derive(Parser, Debug)]
#[command(name = "rccode", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify the code generated by one or more polynomials.
    Classify(CommonArgs),
    /// Classify every principal cyclic code of the given length.
    Enumerate(CommonArgs),
    /// Recompute the reference table for F2[v]/v^3, length 4, (u,k) = (1,1).
    ReproduceTable {
        #[command(flatten)]
        common: CommonArgs,
        /// Alternative table file (index;generator;yes|no per line).
        #[arg(long, hide = true)]
        fixture: Option<PathBuf>,
    },
    /// Print the structure of a chain ring.
    RingInfo(CommonArgs),
}

#[derive(Args, Debug, Clone)]
struct CommonArgs {
    /// Ring, e.g. "Z4", "F2[v]/v^3", "F4[v]/v^2;mod=x^2+x+1".
    #[arg(long)]
    ring: Option<String>,
    /// Code length.
    #[arg(long)]
    n: Option<usize>,
    /// Generator polynomial in z (h stands for z+1); repeat for several.
    #[arg(long = "gen")]
    generators: Vec<String>,
    #[arg(long, default_value = "1")]
    u: String,
    #[arg(long, default_value = "1")]
    k: String,
    /// Output format: csv, json or md.
    #[arg(long, default_value = "md")]
    format: Format,
    /// Skip the brute-force cross-check of theorem verdicts.
    #[arg(long)]
    no_oracle: bool,
    /// Largest |R|^n that may be enumerated.
    #[arg(long, default_value_t = DEFAULT_ENUMERATION_BOUND)]
    bound: u64,
}

impl CommonArgs {
    fn oracle_mode(&self) -> OracleMode {
        if self.no_oracle {
            OracleMode::Off
        } else {
            OracleMode::Audit
        }
    }

    fn ring(&self) -> Result<Arc<ChainRing>, Failure> {
        let spec = self
            .ring
            .as_deref()
            .ok_or_else(|| Failure::input("--ring is required"))?;
        Ok(Arc::new(ChainRing::parse(spec)?))
    }

    fn space(&self) -> Result<PolyRing, Failure> {
        let n = self.n.ok_or_else(|| Failure::input("--n is required"))?;
        Ok(PolyRing::new(self.ring()?, n)?)
    }
}

/// Exit code 1 for bad input, 2 for verification mismatches.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Failure {
        Failure {
            code: 1,
            message: message.into(),
        }
    }

    fn mismatch(message: impl Into<String>) -> Failure {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::Disagreement(_) => Failure::mismatch(e.to_string()),
            other => Failure::input(other.to_string()),
        }
    }
}

fn classify(args: &CommonArgs) -> Result<String, Failure> {
    let space = args.space()?;
    if args.generators.is_empty() {
        return Err(Failure::input("classify needs at least one --gen"));
    }
    let gens = args
        .generators
        .iter()
        .map(|g| space.parse(g))
        .collect::<Result<Vec<_>, _>>()?;
    let ring = space.ring();
    let (u, k) = (ring.parse_elem(&args.u)?, ring.parse_elem(&args.k)?);
    ring.complement(ring.zero(), u, k)?;
    let code = CyclicCode::span(&space, &gens, args.bound)?;
    for entry in code.generating_set() {
        rccode::code::leading_structure(&space, &entry.poly, entry.valuation)?;
    }
    let (reversible, rc) = census::classify_code(&code, u, k, args.oracle_mode())?;
    let oracle = match args.oracle_mode() {
        OracleMode::Off => None,
        OracleMode::Audit => {
            let lemma_identity = analysis::rc_identity_audit(&code, u, k)?;
            if !lemma_identity {
                return Err(Failure::mismatch("reverse-complement identity failed"));
            }
            Some(OracleRecord {
                reversible: reversible.holds,
                rc: rc.holds,
                lemma_identity,
            })
        }
    };
    let record = ClassifyRecord::new(
        &code,
        ring.render(u),
        ring.render(k),
        &reversible,
        &rc,
        oracle,
    );
    Ok(record.render(args.format))
}

fn enumerate(args: &CommonArgs) -> Result<String, Failure> {
    let space = args.space()?;
    let ring = space.ring();
    let (u, k) = (ring.parse_elem(&args.u)?, ring.parse_elem(&args.k)?);
    let mut rows = census::classify_all(&space, u, k, args.oracle_mode(), args.bound)?;
    if ring.to_string() == census::REFERENCE_RING && space.n() == census::REFERENCE_LENGTH {
        let table = census::parse_reference_table(census::REFERENCE_TABLE)?;
        let matched = census::match_reference_table(&space, &rows, &table, args.bound)?;
        census::apply_labels(&mut rows, &matched);
    }
    let records: Vec<RowRecord> = rows.iter().map(RowRecord::from_row).collect();
    Ok(rccode::report::render_rows(&records, args.format))
}

fn reproduce_table(args: &CommonArgs, fixture: Option<&PathBuf>) -> Result<String, Failure> {
    let text = match fixture {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| Failure::input(format!("{}: {e}", path.display())))?,
        None => census::REFERENCE_TABLE.to_string(),
    };
    let (rows, matched) = census::reproduce_reference_table(&text, args.oracle_mode(), args.bound)?;
    let record = TableRecord::new(&rows, &matched);
    let out = record.render(args.format);
    if matched.is_perfect() {
        Ok(out)
    } else {
        let bad: Vec<String> = record
            .rows
            .iter()
            .filter(|r| !r.agrees)
            .map(|r| r.index.to_string())
            .collect();
        print!("{out}");
        Err(Failure::mismatch(format!(
            "{}; mismatched rows: {}{}",
            record.summary(),
            bad.join(", "),
            if record.bijection {
                ""
            } else {
                " (not a bijection with the census)"
            }
        )))
    }
}

fn run(cli: &Cli) -> Result<String, Failure> {
    match &cli.command {
        Command::Classify(args) => classify(args),
        Command::Enumerate(args) => enumerate(args),
        Command::ReproduceTable { common, fixture } => reproduce_table(common, fixture.as_ref()),
        Command::RingInfo(args) => Ok(RingInfo::new(args.ring()?.as_ref()).render(args.format)),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
