//! `breuil-enumerate` and `rep-regular` subcommands.

use std::time::Instant;

use clap::{Args, ValueEnum};
use modp_lab::breuil::enumerate_profiles;
use modp_lab::reps::SummandRecord;
use modp_lab::{ResidualRep, TameParams};
use serde::Serialize;

use crate::envelope;
use crate::fail::{Failure, EXIT_OK, EXIT_VIOLATION};
use crate::parse_i64_list;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct BreuilEnumerateArgs {
    /// Odd prime p.
    #[arg(long)]
    pub p: i64,
    /// Niveau d of the descent data (e = p^d - 1).
    #[arg(long, default_value_t = 1)]
    pub d: u32,
    /// Motivic weight r, in 0..=p-2.
    #[arg(long)]
    pub r: i64,
    /// Comma-separated list of allowed x-values (default: all of 0..=p-2).
    #[arg(long)]
    pub allowed: Option<String>,
    /// Output format; `csv` prints bare rows without the JSON envelope.
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    pub format: OutputFormat,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct BreuilParams {
    p: i64,
    d: u32,
    r: i64,
    allowed: Vec<i64>,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct ProfileRecord {
    x: Vec<i64>,
    y: Vec<i64>,
    /// Closed-form exponent computed from the profile alone.
    kappa_profile: i64,
    /// Exponent read off the generic fiber of the assembled rank-one module.
    kappa_module: i64,
    agree: bool,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct BreuilPayload {
    exponent_modulus: i64,
    count: usize,
    disagreements: usize,
    profiles: Vec<ProfileRecord>,
}

pub fn run_breuil_enumerate(args: &BreuilEnumerateArgs) -> Result<i32, Failure> {
    let started = Instant::now();
    let params = TameParams::new(args.p, args.d)?;
    let allowed: Vec<i64> = match &args.allowed {
        Some(text) => parse_i64_list(text, "--allowed")?,
        None => (0..=args.p - 2).collect(),
    };

    let mut profiles = Vec::new();
    let mut disagreements = 0usize;
    for profile in enumerate_profiles(params, args.r, &allowed)? {
        let kappa_profile = profile.kappa().value();
        let module = profile.to_rank_one().map_err(|err| Failure {
            message: format!("internal: feasible profile rejected by module assembly: {err}"),
            code: EXIT_VIOLATION,
        })?;
        let kappa_module = module.generic_fiber_exponent().value();
        let agree = kappa_profile == kappa_module;
        if !agree {
            disagreements += 1;
        }
        profiles.push(ProfileRecord {
            x: profile.x().to_vec(),
            y: profile.y().to_vec(),
            kappa_profile,
            kappa_module,
            agree,
        });
    }

    match args.format {
        OutputFormat::Csv => {
            println!("x,y,kappa_profile,kappa_module,agree");
            for record in &profiles {
                let join = |values: &[i64]| {
                    values
                        .iter()
                        .map(|v| v.to_string())
                        .collect::<Vec<_>>()
                        .join("|")
                };
                println!(
                    "{},{},{},{},{}",
                    join(&record.x),
                    join(&record.y),
                    record.kappa_profile,
                    record.kappa_module,
                    record.agree
                );
            }
        }
        OutputFormat::Json => {
            let payload = BreuilPayload {
                exponent_modulus: params.exponent_modulus(),
                count: profiles.len(),
                disagreements,
                profiles,
            };
            envelope::emit(
                "breuil-enumerate",
                BreuilParams {
                    p: args.p,
                    d: args.d,
                    r: args.r,
                    allowed,
                },
                payload,
                started,
            );
        }
    }

    // The two exponent routes are proved equal; a disagreement is an internal
    // invariant failure, reported after the offending rows are printed.
    if disagreements > 0 {
        eprintln!("error: {disagreements} profile(s) disagree between the closed-form and module exponents");
        return Ok(EXIT_VIOLATION);
    }
    Ok(EXIT_OK)
}

#[derive(Debug, Args)]
pub struct RepRegularArgs {
    /// Odd prime p.
    #[arg(long)]
    pub p: i64,
    /// Regularity bound r.
    #[arg(long)]
    pub r: i64,
    /// Representation as comma-separated `d:kappa` summands, e.g. `2:16,1:3`.
    #[arg(long)]
    pub rep: String,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct RepParams {
    p: i64,
    r: i64,
    rep: String,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct RepPayload {
    dimension: i64,
    summands: Vec<SummandRecord>,
    exponents: Vec<i64>,
    det_inertia_exponent: i64,
    has_big_subquotient: bool,
    r_regular: bool,
}

pub fn run_rep_regular(args: &RepRegularArgs) -> Result<i32, Failure> {
    let started = Instant::now();
    if args.r < 0 {
        return Err(Failure::input(format!(
            "r must be non-negative, got {}",
            args.r
        )));
    }
    let rep = ResidualRep::parse(args.p, &args.rep)?;
    let payload = RepPayload {
        dimension: rep.dimension(),
        summands: rep.summand_records(),
        exponents: rep.exponents(),
        det_inertia_exponent: rep.det_inertia_exponent(),
        has_big_subquotient: rep.has_big_subquotient(),
        r_regular: rep.is_r_regular(args.r),
    };
    envelope::emit(
        "rep-regular",
        RepParams {
            p: args.p,
            r: args.r,
            rep: args.rep.clone(),
        },
        payload,
        started,
    );
    Ok(EXIT_OK)
}
