//! Jordan types and Jordan degree types of multiplication by a linear form.

mod partition;
mod strings;
mod types;

pub use partition::{conjugate_partition, dominance_compare, Dominance, JordanDegreeType, Partition, StringShape};
pub use strings::{jordan_strings, strings_degree_type, JordanString};
pub use types::{
    degree_type_from_profile, jordan_degree_type, jordan_type, lefschetz_check, lefschetz_from_profile,
    partition_from_profile, rank_profile, Lefschetz, RankProfile,
};
pub(crate) use types::{profile_from_steps, step_matrices};
