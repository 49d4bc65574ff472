//! Command-line front end. [`run_command`] does all the work so the binary
//! only forwards `argv` and the exit code.

mod job;
mod output;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

pub use job::{Detail, DualSource, IdealSource, InputError, JobSpec, Source};
pub use output::{render, OutputFormat};

use crate::apolar::{annihilator_basis, hf_stats, HVector, HfStats};
use crate::error::Error;
use crate::jordan::{
    degree_type_from_profile, dominance_compare, jordan_strings, lefschetz_from_profile, partition_from_profile,
    rank_profile, strings_degree_type, Dominance, JordanDegreeType, Lefschetz, Partition,
};
use crate::linalg::{FieldElement, FieldSpec};
use crate::perazzo::{
    a_bounds, classify_linear_form, dominance_chain, perazzo_dim, perazzo_hf, predicted_jordan, top_power_coefficient,
    verify_full_perazzo, CaseTag, PerazzoParams, TheoremCase, VerificationReport, VerifyMode,
};
use job::{missing, split_generators, Context};

/// Written into every record.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

const DEFAULT_SAMPLES: usize = 200;
const DEFAULT_SEED: u64 = 1;

#[derive(Debug, Parser)]
#[command(name = "artinian", version, about = "Hilbert functions and Jordan types of Artinian algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Hilbert function and its shape statistics
    Hf(JobArgs),
    /// Jordan type of multiplication by a linear form
    Jordan(JobArgs),
    /// Jordan degree type, cross-checked against an explicit Jordan basis
    Jdt(JobArgs),
    /// Spanning set of the annihilator in one degree
    Ann(JobArgs),
    /// Theorem case of a linear form on a full Perazzo algebra
    Classify(JobArgs),
    /// Predicted Jordan type of a linear form on a full Perazzo algebra
    Predict(JobArgs),
    /// Compare predictions with computed Jordan types over many linear forms
    Verify(JobArgs),
    /// Chain of possible Jordan types and the position of a partition in it
    Chain(JobArgs),
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Hf(_) => "hf",
            Command::Jordan(_) => "jordan",
            Command::Jdt(_) => "jdt",
            Command::Ann(_) => "ann",
            Command::Classify(_) => "classify",
            Command::Predict(_) => "predict",
            Command::Verify(_) => "verify",
            Command::Chain(_) => "chain",
        }
    }

    fn args(&self) -> &JobArgs {
        match self {
            Command::Hf(a)
            | Command::Jordan(a)
            | Command::Jdt(a)
            | Command::Ann(a)
            | Command::Classify(a)
            | Command::Predict(a)
            | Command::Verify(a)
            | Command::Chain(a) => a,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    Sample,
    Enumerate,
}

#[derive(Debug, Args)]
struct JobArgs {
    /// TOML job description; flags override its entries
    #[arg(long)]
    spec: Option<PathBuf>,
    /// Full Perazzo parameters, `m=2,d=3`
    #[arg(long)]
    perazzo: Option<String>,
    /// Dual generator, e.g. `X^2*Y + Z^3`
    #[arg(long)]
    dual: Option<String>,
    /// Homogeneous ideal generators separated by `,` or `;`
    #[arg(long)]
    ideal: Option<String>,
    /// Degree in which the ideal quotient must vanish
    #[arg(long)]
    bound: Option<usize>,
    /// Variable names for --dual or --ideal, comma separated
    #[arg(long)]
    vars: Option<String>,
    /// Linear form: `x[2,0] + y1` or assignments `a[2,0]=1,b1=2`
    #[arg(long)]
    ell: Option<String>,
    /// `gfp:P` or `q`
    #[arg(long)]
    field: Option<String>,
    /// Degree for `ann`
    #[arg(long)]
    degree: Option<usize>,
    /// Partition for `chain`, e.g. `(4,2^3,1^2)`
    #[arg(long)]
    partition: Option<String>,
    /// Earlier JSON record whose partition `chain` should place
    #[arg(long)]
    record: Option<PathBuf>,
    /// Samples per case for `verify`
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, value_enum)]
    mode: Option<ModeArg>,
    /// Per-sample records printed by `verify` (default: flagged)
    #[arg(long, value_enum)]
    detail: Option<Detail>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    out: OutputFormat,
}

#[derive(Debug, Serialize)]
pub struct ResultRecord {
    pub version: &'static str,
    pub command: &'static str,
    pub job: JobSpec,
    pub payload: Payload,
}

#[derive(Debug, Serialize)]
pub struct HilbertPayload {
    pub h_vector: HVector,
    pub rendered: String,
    pub dim: usize,
    pub socle_degree: usize,
    pub stats: HfStats,
    /// Closed-form values for full Perazzo sources.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub closed_form: Option<HVector>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub closed_form_dim: Option<usize>,
}

#[derive(Debug, Serialize)]
pub struct StringRecord {
    pub degree: usize,
    pub length: usize,
    pub beads: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct JordanPayload {
    pub h_vector: HVector,
    pub partition: Partition,
    pub parts: usize,
    pub jdt: JordanDegreeType,
    pub lefschetz: Lefschetz,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub strings: Option<Vec<StringRecord>>,
    /// Whether the explicit Jordan basis has the same degree type.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub strings_agree: Option<bool>,
}

#[derive(Debug, Serialize)]
pub struct AnnPayload {
    pub degree: usize,
    pub count: usize,
    pub generators: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct ClassificationPayload {
    #[serde(flatten)]
    pub case: TheoremCase,
    pub top_power: FieldElement,
}

#[derive(Debug, Serialize)]
pub struct PredictionPayload {
    #[serde(flatten)]
    pub case: TheoremCase,
    pub partition: Partition,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub jdt: Option<JordanDegreeType>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<usize>,
}

#[derive(Debug, Serialize)]
pub struct ChainPayload {
    pub params: PerazzoParams,
    pub dim: usize,
    pub a_bounds: (usize, usize),
    pub chain: Vec<Partition>,
    pub lowest: Partition,
    pub highest: Partition,
    pub partition: Partition,
    pub member: bool,
    pub position: Option<usize>,
    pub case: Option<CaseTag>,
    pub a: Option<usize>,
    pub versus_lowest: Dominance,
    pub versus_highest: Dominance,
}

#[derive(Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Payload {
    HilbertFunction(HilbertPayload),
    Jordan(JordanPayload),
    AnnihilatorBasis(AnnPayload),
    Classification(ClassificationPayload),
    Prediction(PredictionPayload),
    Report(VerificationReport),
    Chain(ChainPayload),
}

/// Exit status and captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;

/// Parses `argv` (program name first), runs the subcommand and renders the
/// record. Exit 1 on malformed input, 2 when a verification finds a mismatch.
pub fn run_command<I, S>(argv: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: EXIT_INPUT, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: EXIT_OK, stdout: text, stderr: String::new() }
            };
        }
    };
    let args = cli.command.args();
    let result = build_job(args).and_then(|job| {
        let (payload, mismatch) = dispatch(&cli.command, args, &job)?;
        Ok((ResultRecord { version: VERSION, command: cli.command.name(), job, payload }, mismatch))
    });
    match result {
        Ok((record, mismatch)) => Outcome {
            code: if mismatch.is_some() { EXIT_MISMATCH } else { EXIT_OK },
            stdout: render(&record, args.out),
            stderr: mismatch.map(|m| format!("mismatch: {m}\n")).unwrap_or_default(),
        },
        Err(e) => Outcome { code: EXIT_INPUT, stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

fn parse_flag<T: std::str::FromStr<Err = Error>>(
    value: &Option<String>,
    name: &'static str,
) -> Result<Option<T>, InputError> {
    value.as_deref().map(str::parse).transpose().field(name)
}

fn build_job(args: &JobArgs) -> Result<JobSpec, InputError> {
    let mut job = match &args.spec {
        Some(path) => JobSpec::load(path)?,
        None => JobSpec::default(),
    };
    if let Some(f) = parse_flag::<FieldSpec>(&args.field, "--field")? {
        job.field = Some(f);
    }
    if let Some(p) = parse_flag::<PerazzoParams>(&args.perazzo, "--perazzo")? {
        job.perazzo = Some(p);
    }
    let vars = args.vars.as_deref().map(split_generators);
    if let Some(g) = &args.dual {
        job.dual = Some(DualSource { vars: vars.clone(), generator: g.clone() });
    }
    if let Some(g) = &args.ideal {
        job.ideal = Some(IdealSource { vars: vars.clone(), generators: split_generators(g), bound: args.bound });
    } else if let (Some(ideal), Some(b)) = (job.ideal.as_mut(), args.bound) {
        ideal.bound = Some(b);
    }
    if args.ell.is_some() {
        job.ell = args.ell.clone();
    }
    if args.degree.is_some() {
        job.degree = args.degree;
    }
    if let Some(p) = parse_flag::<Partition>(&args.partition, "--partition")? {
        job.partition = Some(p);
    }
    if args.samples.is_some() {
        job.samples = args.samples;
    }
    if args.seed.is_some() {
        job.seed = args.seed;
    }
    if let Some(m) = args.mode {
        job.mode = Some(match m {
            ModeArg::Sample => VerifyMode::Sample,
            ModeArg::Enumerate => VerifyMode::Enumerate,
        });
    }
    if args.detail.is_some() {
        job.detail = args.detail;
    }
    job.field = Some(job.field_or_default());
    Ok(job)
}

fn perazzo_params(job: &JobSpec) -> Result<PerazzoParams, InputError> {
    job.perazzo.ok_or_else(|| missing("--perazzo", "full Perazzo parameters"))
}

/// The payload, and a description of what disagreed when `verify` finds a mismatch.
fn dispatch(command: &Command, args: &JobArgs, job: &JobSpec) -> Result<(Payload, Option<String>), InputError> {
    let field = job.field_or_default();
    let payload = match command {
        Command::Hf(_) => {
            let source = job.source()?;
            let model = source.model(field)?;
            let h = model.hvector();
            let codim = (source.dual_generator(field).is_some()).then(|| (h.get(1), h.socle_degree()));
            let (closed_form, closed_form_dim) = match job.perazzo {
                Some(p) => (Some(perazzo_hf(&p)), Some(perazzo_dim(&p))),
                None => (None, None),
            };
            Payload::HilbertFunction(HilbertPayload {
                rendered: h.to_string(),
                dim: h.total(),
                socle_degree: h.socle_degree(),
                stats: hf_stats(&h, codim),
                h_vector: h,
                closed_form,
                closed_form_dim,
            })
        }
        Command::Jordan(_) | Command::Jdt(_) => {
            let source = job.source()?;
            let model = source.model(field)?;
            let ell = source.linear_form(job)?;
            let profile = rank_profile(&model, &ell).field("--ell")?;
            let partition = partition_from_profile(&profile);
            let jdt = degree_type_from_profile(&profile).field("--ell")?;
            let (strings, strings_agree) = if matches!(command, Command::Jdt(_)) {
                let s = jordan_strings(&model, &ell).field("--ell")?;
                let agree = strings_degree_type(&s) == jdt;
                let records = s
                    .iter()
                    .map(|js| StringRecord {
                        degree: js.degree,
                        length: js.beads.len(),
                        beads: js
                            .beads
                            .iter()
                            .enumerate()
                            .map(|(k, b)| model.element_polynomial(js.degree + k, b).to_string())
                            .collect(),
                    })
                    .collect();
                (Some(records), Some(agree))
            } else {
                (None, None)
            };
            Payload::Jordan(JordanPayload {
                h_vector: profile.hvector.clone(),
                parts: partition.num_parts(),
                partition,
                jdt,
                lefschetz: lefschetz_from_profile(&profile),
                strings,
                strings_agree,
            })
        }
        Command::Ann(_) => {
            let source = job.source()?;
            let f = source
                .dual_generator(field)
                .ok_or_else(|| missing("source", "a dual generator (--dual or --perazzo)"))?;
            let degree = job.degree.ok_or_else(|| missing("--degree", "a degree"))?;
            let ann = annihilator_basis(&f, degree).field("--degree")?;
            Payload::AnnihilatorBasis(AnnPayload {
                degree,
                count: ann.generators.len(),
                generators: ann.generators.iter().map(ToString::to_string).collect(),
            })
        }
        Command::Classify(_) | Command::Predict(_) => {
            let params = perazzo_params(job)?;
            let source = job.source()?;
            let ell = source.linear_form(job)?;
            field.check_characteristic(params.d()).field("--field")?;
            let case = classify_linear_form(&ell, &params).field("--ell")?;
            if matches!(command, Command::Classify(_)) {
                Payload::Classification(ClassificationPayload {
                    case,
                    top_power: top_power_coefficient(&ell, &params).field("--ell")?,
                })
            } else {
                let p = predicted_jordan(&case, &params, &ell).field("--ell")?;
                Payload::Prediction(PredictionPayload { case, partition: p.partition, jdt: p.jdt, a: p.a })
            }
        }
        Command::Verify(_) => {
            let params = perazzo_params(job)?;
            let report = verify_full_perazzo(
                &params,
                field,
                job.samples.unwrap_or(DEFAULT_SAMPLES),
                job.seed.unwrap_or(DEFAULT_SEED),
                job.mode.unwrap_or(VerifyMode::Sample),
            )
            .field("verify")?;
            let mismatch = (!report.ok()).then(|| {
                let mut what = vec![format!("{} sample(s) disagree with the prediction", report.summary.mismatches)];
                what.extend(report.checks.failed().iter().map(|c| format!("check {c} failed")));
                what.join(", ")
            });
            let mut report = report;
            match job.detail.unwrap_or_default() {
                Detail::Full => {}
                Detail::Flagged => report.samples.retain(|s| !s.matched || !s.literal_match),
                Detail::Summary => report.samples.clear(),
            }
            return Ok((Payload::Report(report), mismatch));
        }
        Command::Chain(_) => chain_payload(args, job)?,
    };
    Ok((payload, None))
}

/// Partition and parameters recorded by an earlier run.
fn read_record(path: &PathBuf) -> Result<(Partition, Option<PerazzoParams>), InputError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))
        .field("--record")?;
    let value: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string())).field("--record")?;
    let partition = value
        .pointer("/payload/partition")
        .or_else(|| value.pointer("/payload/summary/observed_maximum"))
        .ok_or_else(|| missing("--record", "a record with a partition"))?;
    let partition: Partition =
        serde_json::from_value(partition.clone()).map_err(|e| Error::Parse(e.to_string())).field("--record")?;
    let params = match value.pointer("/job/perazzo").or_else(|| value.pointer("/payload/params")) {
        Some(p) => Some(serde_json::from_value(p.clone()).map_err(|e| Error::Parse(e.to_string())).field("--record")?),
        None => None,
    };
    Ok((partition, params))
}

fn chain_payload(args: &JobArgs, job: &JobSpec) -> Result<Payload, InputError> {
    let (partition, recorded_params) = match (&args.record, &job.partition) {
        (Some(path), _) => {
            let (p, params) = read_record(path)?;
            (p, params)
        }
        (None, Some(p)) => (p.clone(), None),
        (None, None) => return Err(missing("--partition", "a partition or --record")),
    };
    let params = job.perazzo.or(recorded_params).ok_or_else(|| missing("--perazzo", "full Perazzo parameters"))?;
    let chain = dominance_chain(&params);
    let (lo, hi) = a_bounds(&params);
    let lowest = chain[0].clone();
    let highest = chain[chain.len() - 1].clone();
    let versus_lowest = dominance_compare(&partition, &lowest).field("--partition")?;
    let versus_highest = dominance_compare(&partition, &highest).field("--partition")?;
    let position = chain.iter().position(|p| *p == partition);
    let top = chain.len() - 1;
    let (case, a) = match position {
        Some(i) if i == top => (Some(CaseTag::CaseII), None),
        Some(i) if i == top - 1 => (Some(CaseTag::CaseI), None),
        Some(i) => (Some(CaseTag::CaseIII), Some(lo + i)),
        None => (None, None),
    };
    Ok(Payload::Chain(ChainPayload {
        params,
        dim: perazzo_dim(&params),
        a_bounds: (lo, hi),
        lowest,
        highest,
        member: position.is_some(),
        position,
        case,
        a,
        partition,
        chain,
        versus_lowest,
        versus_highest,
    }))
}
