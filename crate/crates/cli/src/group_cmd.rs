//! `group ...` subcommands: closures, annihilation/kernel checks, monomial
//! inductions, admissible weights, and intertwiner search.

use std::str::FromStr;
use std::time::Instant;

use clap::Args;
use modp_lab::matgroup::{
    admissible_weights, build_monomial_induction, factor_prime_power, find_intertwiner,
    load_generator_file, verify_regular_lemma, AnnihilationReport, FieldDescription, FiniteField,
    GeneratedGroup, KernelReport, LemmaMode, MatrixWitness, RegularLemmaReport,
    RepresentationPair, SquareMatrix, UnionOfKernelsReport, DEFAULT_CAP,
};
use serde::Serialize;

use crate::envelope;
use crate::fail::{Failure, EXIT_OK, EXIT_VIOLATION};
use crate::parse_u64_list;

fn load_named(path: &str) -> Result<(FiniteField, Vec<SquareMatrix>), Failure> {
    Ok(load_generator_file(path)?)
}

#[derive(Debug, Args)]
pub struct RegularGeneratedArgs {
    /// Generator file (JSON) defining the field and the generating matrices.
    #[arg(long)]
    pub gens: String,
    /// Closure element cap.
    #[arg(long, default_value_t = DEFAULT_CAP)]
    pub cap: usize,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct RegularGeneratedParams {
    gens: String,
    cap: usize,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct RegularGeneratedPayload {
    field: FieldDescription,
    dimension: usize,
    generator_count: usize,
    order: usize,
    regular_element_count: usize,
    regular_generated: bool,
}

pub fn run_regular_generated(args: &RegularGeneratedArgs) -> Result<i32, Failure> {
    let started = Instant::now();
    let (field, gens) = load_named(&args.gens)?;
    let n = gens[0].dim();
    let group = GeneratedGroup::generate(field.clone(), n, &gens, args.cap)?;
    let payload = RegularGeneratedPayload {
        field: field.describe(),
        dimension: n,
        generator_count: gens.len(),
        order: group.order(),
        regular_element_count: group.regular_indices().len(),
        regular_generated: group.is_regular_generated(args.cap)?,
    };
    envelope::emit(
        "group regular-generated",
        RegularGeneratedParams {
            gens: args.gens.clone(),
            cap: args.cap,
        },
        payload,
        started,
    );
    Ok(EXIT_OK)
}

#[derive(Debug, Args)]
pub struct PairFileArgs {
    /// Generator file for rho (one matrix per group generator).
    #[arg(long)]
    pub rho: String,
    /// Generator file for theta, listing images of the same generators in order.
    #[arg(long)]
    pub theta: String,
    /// Paired-closure element cap.
    #[arg(long, default_value_t = DEFAULT_CAP)]
    pub cap: usize,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct PairParams {
    rho: String,
    theta: String,
    cap: usize,
}

fn build_pair(args: &PairFileArgs) -> Result<RepresentationPair, Failure> {
    let (field, rho_gens) = load_named(&args.rho)?;
    let (_, theta_gens) = load_named(&args.theta)?;
    Ok(RepresentationPair::build(
        field, rho_gens, theta_gens, args.cap,
    )?)
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct AnnihilationPayload {
    pair_count: usize,
    rho_dim: usize,
    theta_dim: usize,
    report: AnnihilationReport,
}

pub fn run_annihilation(args: &PairFileArgs) -> Result<i32, Failure> {
    let started = Instant::now();
    let pair = build_pair(args)?;
    let payload = AnnihilationPayload {
        pair_count: pair.order(),
        rho_dim: pair.rho_dim(),
        theta_dim: pair.theta_dim(),
        report: pair.annihilation_holds(),
    };
    envelope::emit(
        "group annihilation",
        PairParams {
            rho: args.rho.clone(),
            theta: args.theta.clone(),
            cap: args.cap,
        },
        payload,
        started,
    );
    Ok(EXIT_OK)
}

#[derive(Debug, Args)]
pub struct KernelsArgs {
    #[command(flatten)]
    pub pair: PairFileArgs,
    /// Check the union-of-kernels containment (diagonal rho, 1-dim theta)
    /// instead of the kernel containment implied by annihilation.
    #[arg(long)]
    pub union: bool,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct KernelsParams {
    rho: String,
    theta: String,
    cap: usize,
    union: bool,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
#[serde(untagged)]
enum KernelsReportJson {
    Containment(KernelReport),
    Union(UnionOfKernelsReport),
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct KernelsPayload {
    variant: &'static str,
    pair_count: usize,
    report: KernelsReportJson,
}

pub fn run_kernels(args: &KernelsArgs) -> Result<i32, Failure> {
    let started = Instant::now();
    let pair = build_pair(&args.pair)?;
    let params = KernelsParams {
        rho: args.pair.rho.clone(),
        theta: args.pair.theta.clone(),
        cap: args.pair.cap,
        union: args.union,
    };
    let (variant, holds, report, violation_is_failure) = if args.union {
        let report = pair.union_of_kernels()?;
        // Union-of-kernels is a property probe, not a lemma: `holds = false`
        // is a legitimate finding, so it does not fail the process.
        (
            "union-of-kernels",
            report.holds,
            KernelsReportJson::Union(report),
            false,
        )
    } else {
        let report = pair.kernel_containment(args.pair.cap)?;
        ("containment", report.holds, KernelsReportJson::Containment(report), true)
    };
    let payload = KernelsPayload {
        variant,
        pair_count: pair.order(),
        report,
    };
    envelope::emit("group kernels", params, payload, started);
    if violation_is_failure && !holds {
        eprintln!("error: kernel containment violated despite its preconditions");
        return Ok(EXIT_VIOLATION);
    }
    Ok(EXIT_OK)
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("source").required(true).args(["q", "gens"]))]
pub struct MonomialVerifyArgs {
    /// Field size q (prime power >= 3); builds the standard monomial induction.
    #[arg(long)]
    pub q: Option<u64>,
    /// Character exponents e0,e1,e2 for the diagonal generator (requires --q).
    #[arg(long, requires = "q")]
    pub exponents: Option<String>,
    /// Generator file to verify instead of a built monomial induction.
    #[arg(long)]
    pub gens: Option<String>,
    /// Which criterion to check: `induced` or `unipotent`.
    #[arg(long, default_value = "induced")]
    pub mode: String,
    /// Closure element cap.
    #[arg(long, default_value_t = DEFAULT_CAP)]
    pub cap: usize,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct MonomialParams {
    #[serde(skip_serializing_if = "Option::is_none")]
    q: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    exponents: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    gens: Option<String>,
    mode: String,
    cap: usize,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct MonomialPayload {
    source: &'static str,
    field: FieldDescription,
    group_order: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    zeta: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    exponents: Option<[u64; 3]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    shift_invariant: Option<bool>,
    report: RegularLemmaReport,
}

pub fn run_monomial_verify(args: &MonomialVerifyArgs) -> Result<i32, Failure> {
    let started = Instant::now();
    let mode = LemmaMode::from_str(&args.mode).map_err(Failure::input)?;
    let params = MonomialParams {
        q: args.q,
        exponents: args.exponents.clone(),
        gens: args.gens.clone(),
        mode: args.mode.clone(),
        cap: args.cap,
    };

    let payload = if let Some(path) = &args.gens {
        let (field, gens) = load_named(path)?;
        let n = gens[0].dim();
        let group = GeneratedGroup::generate(field.clone(), n, &gens, args.cap)?;
        let report = verify_regular_lemma(&group, mode, args.cap)?;
        MonomialPayload {
            source: "file",
            field: field.describe(),
            group_order: group.order(),
            zeta: None,
            exponents: None,
            shift_invariant: None,
            report,
        }
    } else {
        let q = args.q.expect("clap group guarantees --q here");
        let text = args.exponents.as_deref().ok_or_else(|| {
            Failure::input("--exponents e0,e1,e2 is required together with --q")
        })?;
        let list = parse_u64_list(text, "--exponents")?;
        let exponents: [u64; 3] = list.try_into().map_err(|list: Vec<u64>| {
            Failure::input(format!("--exponents needs exactly 3 values, got {}", list.len()))
        })?;
        let (l, m) = factor_prime_power(q)
            .ok_or_else(|| Failure::input(format!("q = {q} is not a prime power")))?;
        let field = FiniteField::with_default_modulus(l, m)?;
        let induction = build_monomial_induction(field.clone(), exponents)?;
        let group = induction.close(args.cap)?;
        let report = verify_regular_lemma(&group, mode, args.cap)?;
        MonomialPayload {
            source: "monomial",
            field: field.describe(),
            group_order: group.order(),
            zeta: Some(induction.zeta()),
            exponents: Some(induction.exponents()),
            shift_invariant: Some(induction.shift_invariant()),
            report,
        }
    };

    let passed = payload.report.passed;
    envelope::emit("group monomial-verify", params, payload, started);
    if !passed {
        eprintln!("error: regular-criteria check failed");
        return Ok(EXIT_VIOLATION);
    }
    Ok(EXIT_OK)
}

#[derive(Debug, Args)]
pub struct AdmissibleWeightsArgs {
    /// Prime power q.
    #[arg(long)]
    pub q: u64,
    /// Dimension n in 3..=6.
    #[arg(long)]
    pub n: usize,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct WeightsParams {
    q: u64,
    n: usize,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct WeightsPayload {
    count: usize,
    weights: Vec<Vec<u64>>,
}

pub fn run_admissible_weights(args: &AdmissibleWeightsArgs) -> Result<i32, Failure> {
    let started = Instant::now();
    let weights: Vec<Vec<u64>> = admissible_weights(args.q, args.n)?.into_iter().collect();
    let payload = WeightsPayload {
        count: weights.len(),
        weights,
    };
    envelope::emit(
        "group admissible-weights",
        WeightsParams {
            q: args.q,
            n: args.n,
        },
        payload,
        started,
    );
    Ok(EXIT_OK)
}

#[derive(Debug, Args)]
pub struct IntertwinerArgs {
    /// Generator file for rho.
    #[arg(long)]
    pub rho: String,
    /// Generator file for theta (same generator order).
    #[arg(long)]
    pub theta: String,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct IntertwinerParams {
    rho: String,
    theta: String,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct IntertwinerPayload {
    found: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    intertwiner: Option<MatrixWitness>,
}

pub fn run_intertwiner(args: &IntertwinerArgs) -> Result<i32, Failure> {
    let started = Instant::now();
    let (_, rho_gens) = load_named(&args.rho)?;
    let (_, theta_gens) = load_named(&args.theta)?;
    let result = find_intertwiner(&rho_gens, &theta_gens)?;
    let payload = IntertwinerPayload {
        found: result.is_some(),
        intertwiner: result.map(|m| MatrixWitness {
            entries: m.entries().to_vec(),
            display: m.to_string(),
        }),
    };
    envelope::emit(
        "group intertwiner",
        IntertwinerParams {
            rho: args.rho.clone(),
            theta: args.theta.clone(),
        },
        payload,
        started,
    );
    Ok(EXIT_OK)
}
