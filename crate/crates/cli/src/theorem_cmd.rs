//! `verify-theorem` subcommand: the exhaustive non-regularity screen.

use std::time::Instant;

use clap::Args;
use modp_lab::{exhaustive_verify, exhaustive_verify_all_types};
use modp_lab::{InertialType, VerificationReport, VerifyOptions};
use serde::Serialize;

use crate::envelope;
use crate::fail::{Failure, EXIT_OK, EXIT_VIOLATION};
use crate::parse_i64_list;

/// Environment variable consulted when `--budget` is absent.
pub const BUDGET_ENV: &str = "MODP_LAB_BUDGET";

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("scope").required(true).args(["ty", "all_types"]))]
pub struct VerifyTheoremArgs {
    /// Odd prime p.
    #[arg(long)]
    pub p: i64,
    /// Dimension n (number of inertial exponents).
    #[arg(long)]
    pub n: usize,
    /// Regularity bound r.
    #[arg(long)]
    pub r: i64,
    /// One inertial type as comma-separated exponents, e.g. `0,3,7`.
    #[arg(long = "type", value_name = "EXPONENTS")]
    pub ty: Option<String>,
    /// Sweep every inertial type of size n instead of one `--type`.
    #[arg(long)]
    pub all_types: bool,
    /// Candidate budget per type (overrides the MODP_LAB_BUDGET environment
    /// variable; default 10000000).
    #[arg(long)]
    pub budget: Option<u64>,
    /// Diagnostic mode: drop the big-subquotient hypothesis so the boundary
    /// counterexamples it excludes become visible. Exit code stays 0.
    #[arg(long)]
    pub no_big_subquotient_filter: bool,
    /// Keep Frobenius-twin summands instead of deduplicating per orbit.
    #[arg(long)]
    pub no_orbit_dedup: bool,
    /// Worker threads for `--all-types` (default: available parallelism).
    #[arg(long)]
    pub workers: Option<usize>,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct TheoremParams {
    p: i64,
    n: usize,
    r: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    ty: Option<String>,
    all_types: bool,
    budget: u64,
    orbit_dedup: bool,
    big_subquotient_filter: bool,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct TheoremPayload {
    /// `None` in diagnostic mode, where counterexamples are expected output.
    #[serde(skip_serializing_if = "Option::is_none")]
    verified: Option<bool>,
    diagnostic: bool,
    report: VerificationReport,
}

/// Resolve the candidate budget: flag, then environment, then library default.
fn resolve_budget(flag: Option<u64>) -> Result<u64, Failure> {
    if let Some(value) = flag {
        return Ok(value);
    }
    match std::env::var(BUDGET_ENV) {
        Ok(text) => text.trim().parse::<u64>().map_err(|_| {
            Failure::input(format!(
                "{BUDGET_ENV} must be a non-negative integer, got {text:?}"
            ))
        }),
        Err(_) => Ok(VerifyOptions::default().budget),
    }
}

pub fn run_verify_theorem(args: &VerifyTheoremArgs) -> Result<i32, Failure> {
    let started = Instant::now();
    let budget = resolve_budget(args.budget)?;
    let options = VerifyOptions {
        budget,
        orbit_dedup: !args.no_orbit_dedup,
        skip_big_subquotient: args.no_big_subquotient_filter,
        workers: args.workers,
    };

    let report: VerificationReport = if let Some(text) = &args.ty {
        let exponents = parse_i64_list(text, "--type")?;
        if exponents.len() != args.n {
            return Err(Failure::input(format!(
                "--type has {} exponents but --n is {}",
                exponents.len(),
                args.n
            )));
        }
        let ty = InertialType::new(args.p, exponents)?;
        exhaustive_verify(&ty, args.r, &options)?
    } else {
        exhaustive_verify_all_types(args.p, args.n, args.r, &options)?
    };

    let diagnostic = args.no_big_subquotient_filter;
    let clean = report.counterexamples.is_empty();
    let payload = TheoremPayload {
        verified: if diagnostic { None } else { Some(clean) },
        diagnostic,
        report,
    };
    envelope::emit(
        "verify-theorem",
        TheoremParams {
            p: args.p,
            n: args.n,
            r: args.r,
            ty: args.ty.clone(),
            all_types: args.all_types,
            budget,
            orbit_dedup: options.orbit_dedup,
            big_subquotient_filter: !diagnostic,
        },
        payload,
        started,
    );

    if !diagnostic && !clean {
        eprintln!("error: counterexamples found; the non-regularity prediction failed");
        return Ok(EXIT_VIOLATION);
    }
    Ok(EXIT_OK)
}
