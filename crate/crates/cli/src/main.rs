//! `modp-lab` — batch CLI over the exact-arithmetic laboratory.
//!
//! Every subcommand prints one JSON envelope to stdout:
//!
//! ```json
//! { "schemaVersion": "...", "command": "...", "params": {...},
//!   "payload": {...}, "elapsedMs": 0 }
//! ```
//!
//! with the single exception of `breuil-enumerate --format csv`, which prints
//! bare CSV rows. Exit codes: `0` success / claim verified, `1` claim violated
//! (counterexamples or failed lemma checks), `2` bad input or unmet
//! preconditions, `3` a resource cap was hit.

mod breuil_cmd;
mod envelope;
mod fail;
mod group_cmd;
mod theorem_cmd;

use clap::{Parser, Subcommand};

use fail::Failure;

#[derive(Parser)]
#[command(
    name = "modp-lab",
    version,
    about = "Exact enumeration and verification for mod-p representation combinatorics"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate feasible rank-one profiles and cross-check both exponent routes.
    BreuilEnumerate(breuil_cmd::BreuilEnumerateArgs),
    /// Parse a representation and report its exponents and r-regularity.
    RepRegular(breuil_cmd::RepRegularArgs),
    /// Exhaustively screen candidate reps for an inertial type (or all types).
    VerifyTheorem(theorem_cmd::VerifyTheoremArgs),
    /// Finite matrix-group checks.
    #[command(subcommand)]
    Group(GroupCommand),
}

#[derive(Subcommand)]
enum GroupCommand {
    /// Close a generator file and test whether regular elements generate it.
    RegularGenerated(group_cmd::RegularGeneratedArgs),
    /// Check char-poly annihilation `charpoly(rho(g))(theta(g)) = 0` for all g.
    Annihilation(group_cmd::PairFileArgs),
    /// Check kernel containment (or, with --union, the union-of-kernels probe).
    Kernels(group_cmd::KernelsArgs),
    /// Verify the regular-criteria checklist on a monomial induction or a file.
    MonomialVerify(group_cmd::MonomialVerifyArgs),
    /// List weights passing the q-restricted determinant congruence.
    AdmissibleWeights(group_cmd::AdmissibleWeightsArgs),
    /// Search for an invertible intertwiner between two generator families.
    Intertwiner(group_cmd::IntertwinerArgs),
}

/// Parse a comma-separated list of i64 values (`"0,3,7"`).
pub(crate) fn parse_i64_list(text: &str, flag: &str) -> Result<Vec<i64>, Failure> {
    text.split(',')
        .map(|piece| {
            piece.trim().parse::<i64>().map_err(|_| {
                Failure::input(format!("{flag}: cannot parse {piece:?} as an integer"))
            })
        })
        .collect()
}

/// Parse a comma-separated list of u64 values (`"1,2,4"`).
pub(crate) fn parse_u64_list(text: &str, flag: &str) -> Result<Vec<u64>, Failure> {
    text.split(',')
        .map(|piece| {
            piece.trim().parse::<u64>().map_err(|_| {
                Failure::input(format!(
                    "{flag}: cannot parse {piece:?} as a non-negative integer"
                ))
            })
        })
        .collect()
}

fn dispatch(cli: &Cli) -> Result<i32, Failure> {
    match &cli.command {
        Command::BreuilEnumerate(args) => breuil_cmd::run_breuil_enumerate(args),
        Command::RepRegular(args) => breuil_cmd::run_rep_regular(args),
        Command::VerifyTheorem(args) => theorem_cmd::run_verify_theorem(args),
        Command::Group(group) => match group {
            GroupCommand::RegularGenerated(args) => group_cmd::run_regular_generated(args),
            GroupCommand::Annihilation(args) => group_cmd::run_annihilation(args),
            GroupCommand::Kernels(args) => group_cmd::run_kernels(args),
            GroupCommand::MonomialVerify(args) => group_cmd::run_monomial_verify(args),
            GroupCommand::AdmissibleWeights(args) => group_cmd::run_admissible_weights(args),
            GroupCommand::Intertwiner(args) => group_cmd::run_intertwiner(args),
        },
    }
}

fn main() {
    let cli = Cli::parse();
    let code = match dispatch(&cli) {
        Ok(code) => code,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            failure.code
        }
    };
    std::process::exit(code);
}
