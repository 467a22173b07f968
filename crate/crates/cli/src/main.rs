//! Command-line front end for the `macchroma` library.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use macchroma::chromatic::{llt_g, x_g, x_g_power, x_g_schur};
use macchroma::graphs::{attacking_data, GraphSelector};
use macchroma::jack::{jack_chromatic, jack_knop_sahi, jack_power, jack_schur};
use macchroma::macdonald::{j_chromatic, j_hhl, j_power, j_schur};
use macchroma::verify::{run_conjecture, run_suite, Conjecture, ItemReport, Status, Suite, VerifyReport};
use macchroma::{Basis, Coefficient, Error, Partition, SymFunc};

const EXIT_USAGE: u8 = 2;
const EXIT_IDENTITY: u8 = 3;
const EXIT_COUNTEREXAMPLE: u8 = 4;

/// Exact Macdonald and Jack polynomials through chromatic quasisymmetric
/// functions.
///
/// `--mu` always names the diagram shape μ; `jqt` and `jack` print the
/// polynomial indexed by its conjugate, J_{μ′}. Pass `--prime` to give μ′
/// directly instead.
#[derive(Parser)]
#[command(name = "macchroma", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisArg {
    Monomial,
    Schur,
    Power,
}

impl From<BasisArg> for Basis {
    fn from(b: BasisArg) -> Basis {
        match b {
            BasisArg::Monomial => Basis::Monomial,
            BasisArg::Schur => Basis::Schur,
            BasisArg::Power => Basis::Power,
        }
    }
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum JqtMethod {
    Hhl,
    Chromatic,
    Tableaux,
    Powersum,
}

#[derive(Clone, Copy, ValueEnum)]
enum JackMethod {
    KnopSahi,
    Chromatic,
    Tableaux,
    Subsets,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Macdonald,
    Jack,
    Chromatic,
    Llt,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConjectureArg {
    Haglund,
    Palindromic,
}

#[derive(clap::Args)]
struct ShapeArgs {
    /// Diagram shape μ as comma-separated parts, e.g. `3,2`.
    #[arg(long, value_parser = parse_partition)]
    mu: Partition,
    /// Treat `--mu` as μ′ and conjugate it.
    #[arg(long)]
    prime: bool,
}

impl ShapeArgs {
    fn diagram(&self) -> Partition {
        if self.prime {
            self.mu.conjugate()
        } else {
            self.mu.clone()
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Integral-form Macdonald polynomial J_{μ′}(x;q,t).
    Jqt {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long, value_enum, default_value = "schur")]
        basis: BasisArg,
        #[arg(long, value_enum, default_value = "hhl")]
        method: JqtMethod,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Integral-form Jack polynomial J^(α)_{μ′}(x).
    Jack {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long, value_enum, default_value = "schur")]
        basis: BasisArg,
        #[arg(long, value_enum, default_value = "knop-sahi")]
        method: JackMethod,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Chromatic quasisymmetric function X_H(x;t), or LLT_H(x;t) with
    /// `--llt`, of a sandwich graph of μ.
    Chromatic {
        #[arg(long, value_parser = parse_partition)]
        mu: Partition,
        /// `attacking`, `augmented`, or `mask:<bits>` over the down-edges.
        #[arg(long, default_value = "attacking", value_parser = parse_selector)]
        graph: GraphSelector,
        #[arg(long, value_enum, default_value = "monomial")]
        basis: BasisArg,
        #[arg(long)]
        llt: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Cross-check every formula over all μ ⊢ n ≤ max-n.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Scan the Schur-positivity conjectures over μ ⊢ n ≤ max-n, k ≤ max-k.
    Conjecture {
        #[arg(long, value_enum)]
        which: ConjectureArg,
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        #[arg(long, default_value_t = 3)]
        max_k: u32,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    let p: Partition = s.parse().map_err(|e: Error| e.to_string())?;
    if p.size() == 0 {
        return Err("partition must be nonempty".into());
    }
    Ok(p)
}

fn parse_selector(s: &str) -> Result<GraphSelector, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn emit<C: Coefficient>(f: &SymFunc<C>, header: &str, format: Format) {
    match format {
        Format::Json => println!("{}", f.to_json()),
        Format::Text => print!("{header}\n{f}"),
    }
}

fn emit_report(r: &VerifyReport, format: Format) {
    match format {
        Format::Json => println!("{}", r.to_json()),
        Format::Text => {
            println!(
                "{}: {} ({} items, {} ms)",
                r.suite,
                if r.passed { "pass" } else { "fail" },
                r.items.len(),
                r.wall_time_ms
            );
            if let Some(ce) = &r.counterexample {
                println!("first counterexample: μ = {}, check: {}", ce.mu, ce.check);
                println!("  index {} ({})", ce.index, ce.basis);
                println!("  expected: {}", ce.expected);
                println!("  actual:   {}", ce.actual);
            }
        }
    }
}

fn progress(item: &ItemReport) {
    let status = match item.status {
        Status::Pass => "pass",
        Status::Fail => "FAIL",
    };
    eprintln!("μ = {}: {status}", item.mu);
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Jqt { shape, basis, method, format } => {
            let mu = shape.diagram();
            let f = match method {
                JqtMethod::Hhl => j_hhl(&mu),
                JqtMethod::Chromatic => j_chromatic(&mu)?,
                JqtMethod::Tableaux => j_schur(&mu),
                JqtMethod::Powersum => j_power(&mu)?,
            };
            let header = format!("J_{{{}}}(x;q,t) from diagram μ = {}", mu.conjugate().to_csv(), mu);
            emit(&f.convert(basis.into())?, &header, format);
        }
        Command::Jack { shape, basis, method, format } => {
            let mu = shape.diagram();
            let f = match method {
                JackMethod::KnopSahi => jack_knop_sahi(&mu),
                JackMethod::Chromatic => jack_chromatic(&mu)?,
                JackMethod::Tableaux => jack_schur(&mu),
                JackMethod::Subsets => jack_power(&mu),
            };
            let header = format!("J^(α)_{{{}}}(x) from diagram μ = {}", mu.conjugate().to_csv(), mu);
            emit(&f.convert(basis.into())?, &header, format);
        }
        Command::Chromatic { mu, graph, basis, llt, format } => {
            let d = attacking_data(&mu);
            let h = d.select(&graph)?;
            let basis: Basis = basis.into();
            let f = if llt {
                llt_g(&h)?.convert(basis)?
            } else {
                match basis {
                    Basis::Monomial => x_g(&h, true)?,
                    Basis::Schur => x_g_schur(&h)?,
                    Basis::Power => x_g_power(&h).omega()?,
                }
            };
            let name = if llt { "LLT_H(x;t)" } else { "X_H(x;t)" };
            emit(&f, &format!("{name} for H = {h} on {} vertices", h.n()), format);
        }
        Command::Verify { suite, max_n, format } => {
            let suite = match suite {
                SuiteArg::Macdonald => Suite::Macdonald,
                SuiteArg::Jack => Suite::Jack,
                SuiteArg::Chromatic => Suite::Chromatic,
                SuiteArg::Llt => Suite::Llt,
                SuiteArg::All => Suite::All,
            };
            let report = run_suite(suite, max_n, Some(&progress))?;
            emit_report(&report, format);
            return Ok(if report.passed { 0 } else { EXIT_IDENTITY });
        }
        Command::Conjecture { which, max_n, max_k, format } => {
            let which = match which {
                ConjectureArg::Haglund => Conjecture::Haglund,
                ConjectureArg::Palindromic => Conjecture::Palindromic,
            };
            let report = run_conjecture(which, max_n, max_k, Some(&progress))?;
            emit_report(&report, format);
            return Ok(if report.passed { 0 } else { EXIT_COUNTEREXAMPLE });
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::IdentityViolated(_) => EXIT_IDENTITY,
                Error::Parse(_) | Error::InvalidArgument(_) | Error::Shape(_) => EXIT_USAGE,
                _ => 1,
            })
        }
    }
}
