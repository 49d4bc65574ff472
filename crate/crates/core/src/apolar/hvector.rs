use std::fmt;

use serde::Serialize;

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Hilbert function `(h_0, ..., h_d)` of a graded Artinian algebra.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct HVector(Vec<usize>);

impl HVector {
    pub fn new(entries: Vec<usize>) -> Self {
        HVector(entries)
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn get(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Last index, `d`.
    pub fn socle_degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    /// Dimension of the algebra.
    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn sperner(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn is_symmetric(&self) -> bool {
        self.0.iter().eq(self.0.iter().rev())
    }

    /// Weakly increasing up to some index and weakly decreasing after it.
    pub fn is_unimodal(&self) -> bool {
        let mut i = 0;
        while i + 1 < self.0.len() && self.0[i] <= self.0[i + 1] {
            i += 1;
        }
        self.0[i..].windows(2).all(|w| w[0] >= w[1])
    }
}

impl fmt::Display for HVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Largest possible Hilbert function of a Gorenstein algebra of codimension
/// `c` and socle degree `d`: `h_i = min(C(i+c-1, c-1), C(d-i+c-1, c-1))`.
pub fn compressed_hf(c: usize, d: usize) -> HVector {
    HVector((0..=d).map(|i| binomial(i + c - 1, c - 1).min(binomial(d - i + c - 1, c - 1))).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HfStats {
    pub sperner: usize,
    pub unimodal: bool,
    pub symmetric: bool,
    /// Equality with [`compressed_hf`] for the given `(c, d)`, when supplied.
    pub compressed: Option<bool>,
}

pub fn hf_stats(h: &HVector, codim_and_degree: Option<(usize, usize)>) -> HfStats {
    HfStats {
        sperner: h.sperner(),
        unimodal: h.is_unimodal(),
        symmetric: h.is_symmetric(),
        compressed: codim_and_degree.map(|(c, d)| c >= 1 && *h == compressed_hf(c, d)),
    }
}
