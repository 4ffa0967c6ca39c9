use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use prym::decompose::{decompose_delta, reduce_lambda};
use prym::foxcover::{eta_chain, eta_fox, Endo};
use prym::predicates::{check, GroupTag};
use prym::selftest::{self, SelftestConfig};
use prym::{BlockMat, Error, RingMatrix, Word};

/// Prym representations of handlebody and twist groups over Z[ζ_d].
#[derive(Parser, Debug)]
#[command(name = "prym", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Shape {
    /// Cyclotomic modulus d (at least 2).
    #[arg(long)]
    d: u32,
    /// Genus g (at least 2); matrices are (2g-2)x(2g-2).
    #[arg(long)]
    g: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate a generator word to its matrix.
    Eval {
        #[command(flatten)]
        shape: Shape,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// Test a matrix for membership in one or all groups.
    Check {
        #[command(flatten)]
        shape: Shape,
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
        /// U, USharp, UrU, UrUSharp, UrSpZ, Lambda, Delta or Genus2Theta.
        #[arg(long)]
        group: Option<GroupTag>,
    },
    /// Write [[Id, B], [0, Id]] as a word in G1, G2, G3.
    DecomposeDelta {
        #[command(flatten)]
        shape: Shape,
        /// The self-adjoint (g-1)x(g-1) block.
        #[arg(long = "B", allow_hyphen_values = true)]
        b: String,
    },
    /// Write a Lambda element as a word, given a word for its lower-right block.
    ReduceLambda {
        #[command(flatten)]
        shape: Shape,
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
        /// Witness word whose matrix has the same lower-right block.
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// Compute eta of a free-group automorphism on the covering graph.
    Fox {
        #[command(flatten)]
        shape: Shape,
        /// Images, e.g. "x1 -> x2 x1 x2^-1 ; x2 -> x2".
        #[arg(long)]
        map: String,
        /// Images under the inverse automorphism, same format.
        #[arg(long)]
        inverse: String,
    },
    /// Run the exact self-test sweeps.
    Selftest {
        #[arg(long, default_value_t = 6)]
        max_d: u32,
        #[arg(long, default_value_t = 3)]
        max_g: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random samples per (d, g) cell.
        #[arg(long, default_value_t = 20)]
        samples: usize,
        #[arg(long, hide = true)]
        inject_failure: bool,
    },
}

const NEGATIVE: u8 = 1;
const USAGE: u8 = 2;

fn fail(e: Error) -> ExitCode {
    eprintln!("error: {e}");
    match e {
        Error::NotSelfAdjoint
        | Error::NotMember { .. }
        | Error::BlockMismatch
        | Error::NotInGamma(_)
        | Error::NoIntegerSolution(_) => ExitCode::from(NEGATIVE),
        _ => ExitCode::from(USAGE),
    }
}

fn run(cmd: Command) -> Result<ExitCode, Error> {
    match cmd {
        Command::Eval { shape, word } => {
            let w = Word::parse(&word)?;
            println!("{}", w.evaluate(shape.g, shape.d)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Check { shape, matrix, group } => {
            let m = BlockMat::parse(shape.g, shape.d, &matrix)?;
            let tags = match group {
                Some(t) => vec![t],
                None => GroupTag::ALL.to_vec(),
            };
            let mut all = true;
            for tag in &tags {
                match check(&m, *tag) {
                    Ok(()) => println!("{tag}: member"),
                    Err(reason) => {
                        all = false;
                        println!("{tag}: non-member ({reason})");
                    }
                }
            }
            Ok(if all { ExitCode::SUCCESS } else { ExitCode::from(NEGATIVE) })
        }
        Command::DecomposeDelta { shape, b } => {
            let b = RingMatrix::parse(shape.d, &b)?;
            let w = decompose_delta(&b, shape.g)?;
            println!("{w}");
            Ok(ExitCode::SUCCESS)
        }
        Command::ReduceLambda { shape, matrix, word } => {
            let m = BlockMat::parse(shape.g, shape.d, &matrix)?;
            let w_d = Word::parse(&word)?;
            println!("{}", reduce_lambda(&m, &w_d)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Fox { shape, map, inverse } => {
            let phi = Endo::from_text(shape.g, &map, &inverse)?;
            let eta = eta_chain(&phi, shape.d)?;
            if eta_fox(&phi, shape.d)? != eta {
                eprintln!("error: chain and Fox computations disagree");
                return Ok(ExitCode::from(NEGATIVE));
            }
            println!("{eta}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Selftest {
            max_d,
            max_g,
            seed,
            samples,
            inject_failure,
        } => {
            let config = SelftestConfig {
                max_d,
                max_g,
                seed,
                samples,
                inject_failure,
            };
            let reports = selftest::run(&config)?;
            let mut ok = true;
            for r in &reports {
                let status = if r.passed() { "PASS" } else { "FAIL" };
                println!("{status} {} ({} cases)", r.name, r.cases);
                for f in r.failures.iter().take(5) {
                    println!("    {f}");
                }
                if r.failures.len() > 5 {
                    println!("    ... {} more", r.failures.len() - 5);
                }
                ok &= r.passed();
            }
            Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(NEGATIVE) })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    run(cli.command).unwrap_or_else(fail)
}
