use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::params::{a_bounds, full_perazzo_form, generic_part_count, PerazzoParams};
use super::theorem::{
    case_ii_degree_type, classify_linear_form, dominance_chain, predicted_jordan, CaseTag, PredictedJordan,
};
use crate::apolar::GradedAlgebraModel;
use crate::error::{Error, Result};
use crate::jordan::{
    degree_type_from_profile, dominance_compare, lefschetz_from_profile, partition_from_profile, profile_from_steps,
    step_matrices, Dominance, JordanDegreeType, Partition,
};
use crate::linalg::{FieldElement, FieldSpec};
use crate::poly::LinearForm;

/// Largest number of projective points walked in enumeration mode.
pub const ENUMERATION_CAP: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VerifyMode {
    Sample,
    Enumerate,
}

impl FromStr for VerifyMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sample" => Ok(VerifyMode::Sample),
            "enumerate" => Ok(VerifyMode::Enumerate),
            _ => Err(Error::Parse(format!("unknown mode {s:?}, expected sample or enumerate"))),
        }
    }
}

impl fmt::Display for VerifyMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VerifyMode::Sample => "sample",
            VerifyMode::Enumerate => "enumerate",
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SampleRecord {
    pub index: usize,
    pub ell: String,
    pub case: CaseTag,
    pub witness: Option<usize>,
    pub literal_match: bool,
    pub top_power_nonzero: bool,
    pub predicted: Partition,
    pub predicted_jdt: Option<JordanDegreeType>,
    pub computed: Partition,
    pub computed_jdt: JordanDegreeType,
    /// Computed data agrees with the prediction for the tagged case.
    #[serde(rename = "match")]
    pub matched: bool,
    pub weak_lefschetz: bool,
    pub strong_lefschetz: bool,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct CaseSummary {
    pub samples: usize,
    pub literal: usize,
    pub mismatches: usize,
    pub non_literal: usize,
    /// Non-literal samples whose computed data still equals the prediction.
    pub non_literal_matching: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub per_case: BTreeMap<CaseTag, CaseSummary>,
    pub mismatches: usize,
    pub non_literal: usize,
    /// Distinct computed Jordan types with their sample counts, in first-seen order.
    pub distinct_types: Vec<(Partition, usize)>,
    pub observed_maximum: Option<Partition>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Checks {
    /// Every `CASE_III` type is `(2^a, 1^b)` with `a_min ≤ a ≤ a_max`.
    pub case_iii_bounds: bool,
    /// Every observed type lies in the dominance chain.
    pub chain_membership: bool,
    /// The dominance-maximal observed type is the `CASE_II` type, with `2(n+1)` parts.
    pub maximum_is_generic: bool,
    pub no_strong_lefschetz: bool,
}

impl Checks {
    pub fn all(&self) -> bool {
        self.failed().is_empty()
    }

    pub fn failed(&self) -> Vec<&'static str> {
        [
            ("case_iii_bounds", self.case_iii_bounds),
            ("chain_membership", self.chain_membership),
            ("maximum_is_generic", self.maximum_is_generic),
            ("no_strong_lefschetz", self.no_strong_lefschetz),
        ]
        .into_iter()
        .filter(|&(_, ok)| !ok)
        .map(|(name, _)| name)
        .collect()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub params: PerazzoParams,
    pub field: FieldSpec,
    pub mode: VerifyMode,
    pub seed: u64,
    pub samples_per_case: usize,
    pub a_bounds: (usize, usize),
    pub chain: Vec<Partition>,
    pub samples: Vec<SampleRecord>,
    pub summary: Summary,
    pub checks: Checks,
}

impl VerificationReport {
    pub fn ok(&self) -> bool {
        self.summary.mismatches == 0 && self.checks.all()
    }
}

fn random_element<R: Rng>(rng: &mut R, field: FieldSpec) -> FieldElement {
    match field {
        FieldSpec::Prime(p) => field.from_u64(rng.gen_range(0..p)),
        FieldSpec::Rationals => field.from_i64(rng.gen_range(-20..=20)),
    }
}

fn random_nonzero<R: Rng>(rng: &mut R, field: FieldSpec) -> FieldElement {
    loop {
        let c = random_element(rng, field);
        if !c.is_zero() {
            return c;
        }
    }
}

/// Coefficient vectors `(a, b)` for sample `index`; every sample forces the
/// zero pattern of one case (`index / per_case` picks it).
fn structured_sample(params: &PerazzoParams, field: FieldSpec, seed: u64, index: usize, per_case: usize) -> LinearForm {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    let vars = params.vars();
    let (m, d) = (params.m(), params.d());
    let nx = params.n_plus_1();
    let pure_power = |k: usize| {
        let mut t = vec![0u32; m];
        t[k] = (d - 1) as u32;
        vars.x_index_of(&t).unwrap()
    };
    let mut a: Vec<FieldElement> = (0..nx).map(|_| random_element(&mut rng, field)).collect();
    let mut b: Vec<FieldElement> = (0..m).map(|_| random_element(&mut rng, field)).collect();
    let variant = index % 3;
    match index / per_case.max(1) {
        0 => match variant {
            // linear form in the y-variables only
            0 => {
                a.iter_mut().for_each(|c| *c = field.zero());
                if b.iter().all(FieldElement::is_zero) {
                    b[rng.gen_range(0..m)] = random_nonzero(&mut rng, field);
                }
            }
            // a single y-variable, with the matching pure-power x-coefficient zero
            1 => {
                let k = rng.gen_range(0..m);
                b.iter_mut().for_each(|c| *c = field.zero());
                b[k] = random_nonzero(&mut rng, field);
                a[pure_power(k)] = field.zero();
            }
            // several y-variables, avoiding every pure-power pattern
            _ => {
                for k in 0..m {
                    b[k] = random_nonzero(&mut rng, field);
                    a[pure_power(k)] = field.zero();
                }
            }
        },
        1 => {
            let k = rng.gen_range(0..m);
            a[pure_power(k)] = random_nonzero(&mut rng, field);
            b[k] = random_nonzero(&mut rng, field);
        }
        _ => {
            b.iter_mut().for_each(|c| *c = field.zero());
            if variant != 0 {
                // a-coefficients of a sum of r divided powers of linear forms in y
                let r = rng.gen_range(1..=nx.min(2 * m + 1));
                let ls: Vec<Vec<FieldElement>> =
                    (0..r).map(|_| (0..m).map(|_| random_element(&mut rng, field)).collect()).collect();
                for (c, alpha) in a.iter_mut().zip(vars.x_tuples().unwrap()) {
                    *c = ls.iter().fold(field.zero(), |acc, l| {
                        let t = l.iter().zip(alpha).fold(field.one(), |t, (li, &e)| &t * &li.pow(e));
                        &acc + &t
                    });
                }
            }
            if a.iter().all(FieldElement::is_zero) {
                a[rng.gen_range(0..nx)] = random_nonzero(&mut rng, field);
            }
        }
    }
    LinearForm::from_blocks(&vars, field, a, b).expect("block sizes match")
}

/// The `index`-th point of projective space over `GF(p)` in `len` coordinates,
/// normalized so that the first nonzero coordinate is 1.
fn projective_point(p: u64, len: usize, mut index: u64) -> Vec<u64> {
    for lead in 0..len {
        let free = (len - lead - 1) as u32;
        let block = p.pow(free);
        if index < block {
            let mut v = vec![0; len];
            v[lead] = 1;
            for slot in v.iter_mut().skip(lead + 1).rev() {
                *slot = index % p;
                index /= p;
            }
            return v;
        }
        index -= block;
    }
    unreachable!("index beyond projective space")
}

fn projective_size(p: u64, len: usize) -> Option<u64> {
    let mut total: u64 = 0;
    let mut block: u64 = 1;
    for _ in 0..len {
        total = total.checked_add(block)?;
        block = block.checked_mul(p)?;
    }
    Some(total)
}

fn evaluate(
    model: &GradedAlgebraModel,
    params: &PerazzoParams,
    index: usize,
    ell: &LinearForm,
) -> Result<SampleRecord> {
    let case = classify_linear_form(ell, params)?;
    let PredictedJordan { partition: predicted, jdt: predicted_jdt, .. } = predicted_jordan(&case, params, ell)?;
    let steps = step_matrices(model, ell)?;
    let profile = profile_from_steps(model, &steps)?;
    let computed = partition_from_profile(&profile);
    let computed_jdt = degree_type_from_profile(&profile)?;
    let lefschetz = lefschetz_from_profile(&profile);
    let matched = computed == predicted && predicted_jdt.as_ref().is_none_or(|j| *j == computed_jdt);
    Ok(SampleRecord {
        index,
        ell: ell.to_assignments(),
        case: case.tag,
        witness: case.witness,
        literal_match: case.literal_match,
        top_power_nonzero: case.top_power_nonzero,
        predicted,
        predicted_jdt,
        computed,
        computed_jdt,
        matched,
        weak_lefschetz: lefschetz.weak,
        strong_lefschetz: lefschetz.strong,
    })
}

/// Classifies, predicts and computes the Jordan data of many linear forms.
///
/// `Sample` mode draws `samples_per_case` forms for each case; sample `i` uses
/// its own random stream, so the report does not depend on scheduling.
/// `Enumerate` mode walks every linear form up to scalars over a prime field.
pub fn verify_full_perazzo(
    params: &PerazzoParams,
    field: FieldSpec,
    samples_per_case: usize,
    seed: u64,
    mode: VerifyMode,
) -> Result<VerificationReport> {
    field.check_characteristic(params.d())?;
    let f = full_perazzo_form(params, field);
    let model = GradedAlgebraModel::from_dual(&f)?;
    let vars = params.vars();
    let samples: Vec<SampleRecord> = match mode {
        VerifyMode::Sample => (0..3 * samples_per_case)
            .into_par_iter()
            .map(|i| evaluate(&model, params, i, &structured_sample(params, field, seed, i, samples_per_case)))
            .collect::<Result<_>>()?,
        VerifyMode::Enumerate => {
            let FieldSpec::Prime(p) = field else {
                return Err(Error::InvalidParams("enumeration needs a prime field".into()));
            };
            let len = vars.len();
            let total = projective_size(p, len).filter(|&t| t <= ENUMERATION_CAP).ok_or_else(|| {
                Error::InvalidParams(format!("enumerating GF({p})^{len} up to scalars exceeds {ENUMERATION_CAP} forms"))
            })?;
            (0..total)
                .into_par_iter()
                .map(|i| {
                    let coeffs = projective_point(p, len, i).into_iter().map(|c| field.from_u64(c)).collect();
                    let ell = LinearForm::new(&vars, field, coeffs)?;
                    evaluate(&model, params, i as usize, &ell)
                })
                .collect::<Result<_>>()?
        }
    };
    Ok(assemble(params, field, seed, samples_per_case, mode, samples))
}

fn assemble(
    params: &PerazzoParams,
    field: FieldSpec,
    seed: u64,
    samples_per_case: usize,
    mode: VerifyMode,
    samples: Vec<SampleRecord>,
) -> VerificationReport {
    let mut per_case: BTreeMap<CaseTag, CaseSummary> = BTreeMap::new();
    let mut distinct: Vec<(Partition, usize)> = Vec::new();
    for s in &samples {
        let c = per_case.entry(s.case).or_default();
        c.samples += 1;
        if s.literal_match {
            c.literal += 1;
            c.mismatches += usize::from(!s.matched);
        } else {
            c.non_literal += 1;
            c.non_literal_matching += usize::from(s.matched);
        }
        match distinct.iter_mut().find(|(p, _)| *p == s.computed) {
            Some((_, n)) => *n += 1,
            None => distinct.push((s.computed.clone(), 1)),
        }
    }
    let observed_maximum = distinct
        .iter()
        .find(|(p, _)| {
            distinct.iter().all(|(q, _)| matches!(dominance_compare(p, q), Ok(Dominance::Greater | Dominance::Equal)))
        })
        .map(|(p, _)| p.clone());
    let (lo, hi) = a_bounds(params);
    let chain = dominance_chain(params);
    let generic = case_ii_degree_type(params).partition();
    let checks = Checks {
        case_iii_bounds: samples.iter().filter(|s| s.case == CaseTag::CaseIII).all(|s| {
            let twos = s.computed.parts().iter().filter(|&&x| x == 2).count();
            s.computed.largest() <= 2 && (lo..=hi).contains(&twos)
        }),
        chain_membership: distinct.iter().all(|(p, _)| chain.contains(p)),
        maximum_is_generic: observed_maximum
            .as_ref()
            .is_some_and(|p| *p == generic && p.num_parts() == generic_part_count(params)),
        no_strong_lefschetz: samples.iter().all(|s| !s.strong_lefschetz),
    };
    let summary = Summary {
        mismatches: per_case.values().map(|c| c.mismatches).sum(),
        non_literal: per_case.values().map(|c| c.non_literal).sum(),
        per_case,
        distinct_types: distinct,
        observed_maximum,
    };
    VerificationReport {
        params: *params,
        field,
        mode,
        seed,
        samples_per_case,
        a_bounds: (lo, hi),
        chain,
        samples,
        summary,
        checks,
    }
}
