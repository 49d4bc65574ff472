use serde::Serialize;

use super::partition::{conjugate_partition, JordanDegreeType, Partition, StringShape};
use crate::apolar::{GradedAlgebraModel, HVector};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::poly::LinearForm;

/// `r[i][k] = rank(×ℓ^k : A_i → A_{i+k})` for `0 ≤ i ≤ d`, `0 ≤ k ≤ d+1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RankProfile {
    pub hvector: HVector,
    pub r: Vec<Vec<usize>>,
}

impl RankProfile {
    /// `r[i][k]` with the conventions `r[-1][k] = 0` and zero past the table.
    pub fn get(&self, i: isize, k: usize) -> usize {
        if i < 0 {
            return 0;
        }
        self.r.get(i as usize).and_then(|row| row.get(k)).copied().unwrap_or(0)
    }

    pub fn socle_degree(&self) -> usize {
        self.hvector.socle_degree()
    }

    /// Total rank of `×ℓ^k` on the whole algebra.
    pub fn total_rank(&self, k: usize) -> usize {
        (0..self.r.len()).map(|i| self.get(i as isize, k)).sum()
    }
}

/// The step maps `×ℓ : A_t → A_{t+1}` for `t = 0..=d`.
pub(crate) fn step_matrices(model: &GradedAlgebraModel, ell: &LinearForm) -> Result<Vec<Matrix>> {
    model.check_linear_form(ell)?;
    Ok((0..=model.socle_degree()).map(|t| model.step_unchecked(ell, t)).collect())
}

pub(crate) fn profile_from_steps(model: &GradedAlgebraModel, steps: &[Matrix]) -> Result<RankProfile> {
    let d = model.socle_degree();
    let mut r = Vec::with_capacity(d + 1);
    for i in 0..=d {
        let mut row = vec![0; d + 2];
        let mut m = Matrix::identity(model.field(), model.piece_dim(i));
        row[0] = model.piece_dim(i);
        for k in 1..=d - i {
            m = steps[i + k - 1].mul(&m)?;
            row[k] = m.rank();
            if row[k] == 0 {
                break;
            }
        }
        r.push(row);
    }
    Ok(RankProfile { hvector: model.hvector(), r })
}

pub fn rank_profile(model: &GradedAlgebraModel, ell: &LinearForm) -> Result<RankProfile> {
    profile_from_steps(model, &step_matrices(model, ell)?)
}

/// Parts from total ranks: the number of parts `≥ k` is `R_{k-1} - R_k`.
pub fn partition_from_profile(profile: &RankProfile) -> Partition {
    let d = profile.socle_degree();
    let at_least: Vec<usize> = (1..=d + 2).map(|k| profile.total_rank(k - 1) - profile.total_rank(k)).collect();
    let mut parts = Vec::new();
    for k in (1..=at_least.len()).rev() {
        let exactly = at_least[k - 1] - at_least.get(k).copied().unwrap_or(0);
        parts.extend(std::iter::repeat_n(k, exactly));
    }
    Partition::from_unsorted(parts)
}

/// Multiplicity of `(p, i)` is `(r[i][p-1] - r[i][p]) - (r[i-1][p] - r[i-1][p+1])`.
pub fn degree_type_from_profile(profile: &RankProfile) -> Result<JordanDegreeType> {
    let d = profile.socle_degree();
    let mut entries = Vec::new();
    for i in 0..=d as isize {
        for p in 1..=d + 1 {
            let here = profile.get(i, p - 1) as isize - profile.get(i, p) as isize;
            let before = profile.get(i - 1, p) as isize - profile.get(i - 1, p + 1) as isize;
            let s = here - before;
            if s < 0 {
                return Err(Error::Internal(format!("negative string count {s} for length {p} in degree {i}")));
            }
            entries.extend(std::iter::repeat_n(StringShape { length: p, degree: i as usize }, s as usize));
        }
    }
    Ok(entries.into())
}

pub fn jordan_type(model: &GradedAlgebraModel, ell: &LinearForm) -> Result<Partition> {
    Ok(partition_from_profile(&rank_profile(model, ell)?))
}

pub fn jordan_degree_type(model: &GradedAlgebraModel, ell: &LinearForm) -> Result<JordanDegreeType> {
    degree_type_from_profile(&rank_profile(model, ell)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Lefschetz {
    pub weak: bool,
    pub strong: bool,
}

pub fn lefschetz_from_profile(profile: &RankProfile) -> Lefschetz {
    let h = &profile.hvector;
    let weak = (0..=profile.socle_degree()).all(|i| profile.get(i as isize, 1) == h.get(i).min(h.get(i + 1)));
    let strong =
        partition_from_profile(profile) == conjugate_partition(&Partition::from_unsorted(h.entries().to_vec()));
    Lefschetz { weak, strong }
}

pub fn lefschetz_check(model: &GradedAlgebraModel, ell: &LinearForm) -> Result<Lefschetz> {
    Ok(lefschetz_from_profile(&rank_profile(model, ell)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::FieldSpec;
    use crate::poly::{parse_linear_form, parse_polynomial, Side, VariableSet};

    fn cubic_ideal() -> GradedAlgebraModel {
        let v = VariableSet::generic(&["x", "y"]).unwrap();
        let gens: Vec<_> = ["x^3", "x*y^2", "y^3"]
            .iter()
            .map(|g| parse_polynomial(g, &v, Side::Ring, FieldSpec::Rationals).unwrap())
            .collect();
        GradedAlgebraModel::from_ideal(&gens, 6).unwrap()
    }

    fn toy() -> GradedAlgebraModel {
        let v = VariableSet::perazzo(2, 3).unwrap();
        let f =
            parse_polynomial("X[2,0]*Y1^2 + X[1,1]*Y1*Y2 + X[0,2]*Y2^2", &v, Side::Dual, FieldSpec::Rationals).unwrap();
        GradedAlgebraModel::from_dual(&f).unwrap()
    }

    fn ell(m: &GradedAlgebraModel, s: &str) -> LinearForm {
        parse_linear_form(s, m.vars(), m.field()).unwrap()
    }

    #[test]
    fn cubic_ideal_profile() {
        let m = cubic_ideal();
        let l = ell(&m, "x + y");
        let r = rank_profile(&m, &l).unwrap();
        assert_eq!(r.get(0, 3), 1);
        assert_eq!(r.get(1, 2), 1);
        assert_eq!(r.get(3, 1), 0);
        assert_eq!(jordan_type(&m, &l).unwrap().parts(), &[4, 2, 1]);
        assert_eq!(jordan_degree_type(&m, &l).unwrap().to_string(), "4_0,2_1,1_2");
    }

    #[test]
    fn toy_types() {
        let m = toy();
        let cases = [
            ("y1", "(3^2,2^2,1^2)", Some("3_0,3_1,2_1^2,1_1,1_2")),
            ("x[2,0] + y1", "(4,2^3,1^2)", Some("4_0,2_1^3,1_1,1_2")),
            ("x[2,0]", "(2^3,1^6)", None),
        ];
        for (l, p, j) in cases {
            let l = ell(&m, l);
            assert_eq!(jordan_type(&m, &l).unwrap().to_string(), p);
            let jdt = jordan_degree_type(&m, &l).unwrap();
            assert_eq!(jdt.partition().to_string(), p);
            assert_eq!(jdt.bead_counts(4), vec![1, 5, 5, 1]);
            if let Some(j) = j {
                assert_eq!(jdt.to_string(), j);
            }
        }
    }

    #[test]
    fn lefschetz() {
        let m = toy();
        let l = ell(&m, "x[2,0] + y1");
        assert_eq!(rank_profile(&m, &l).unwrap().get(1, 1), 4);
        assert_eq!(lefschetz_check(&m, &l).unwrap(), Lefschetz { weak: false, strong: false });
        let v = VariableSet::generic(&["x"]).unwrap();
        let x4 = parse_polynomial("x^4", &v, Side::Ring, FieldSpec::Rationals).unwrap();
        let ci = GradedAlgebraModel::from_ideal(&[x4], 5).unwrap();
        let x = ell(&ci, "x");
        assert_eq!(lefschetz_check(&ci, &x).unwrap(), Lefschetz { weak: true, strong: true });
        assert_eq!(jordan_type(&ci, &x).unwrap().parts(), &[4]);
    }

    #[test]
    fn trivial_algebra() {
        let v = VariableSet::generic(&["x"]).unwrap();
        let f = parse_polynomial("1", &v, Side::Dual, FieldSpec::Rationals).unwrap();
        let m = GradedAlgebraModel::from_dual(&f).unwrap();
        let x = ell(&m, "x");
        assert_eq!(jordan_type(&m, &x).unwrap().parts(), &[1]);
        assert_eq!(jordan_degree_type(&m, &x).unwrap().to_string(), "1_0");
    }
}
