//! Full Perazzo forms, closed-form predictions for them, and the harness that
//! compares the predictions with computed Jordan data.

mod params;
mod theorem;
mod verify;

pub use params::{
    a_bounds, full_perazzo_form, generic_part_count, hankel_hf, perazzo_dim, perazzo_hf, symmetric_dual_generator,
    PerazzoParams,
};
pub use theorem::{
    case_i_degree_type, case_ii_degree_type, case_iii_partition, classify_linear_form, dominance_chain,
    predicted_jordan, top_power_coefficient, CaseTag, PredictedJordan, TheoremCase,
};
pub use verify::{
    verify_full_perazzo, CaseSummary, Checks, SampleRecord, Summary, VerificationReport, VerifyMode, ENUMERATION_CAP,
};
