use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Weakly decreasing list of positive integers.
///
/// Serialized as `{"parts": [...], "notation": "(...)"}`; deserializes from
/// that object, a bare array, or the notation string.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition("parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition("parts must be weakly decreasing".into()));
        }
        Ok(Partition(parts))
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// `(p^count)` blocks, e.g. `[(2, a), (1, b)]` for `(2^a, 1^b)`.
    pub fn from_blocks(blocks: &[(usize, usize)]) -> Self {
        Partition::from_unsorted(blocks.iter().flat_map(|&(p, count)| std::iter::repeat_n(p, count)).collect())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn num_parts(&self) -> usize {
        self.0.len()
    }

    pub fn largest(&self) -> usize {
        self.0.first().copied().unwrap_or(0)
    }

    /// Runs of equal parts, largest first: `(part, multiplicity)`.
    pub fn blocks(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((q, n)) if *q == p => *n += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Partition", 2)?;
        st.serialize_field("parts", &self.0)?;
        st.serialize_field("notation", &self.to_string())?;
        st.end()
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum PartitionRepr {
    Parts(Vec<usize>),
    Text(String),
    Object { parts: Vec<usize> },
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        match PartitionRepr::deserialize(d)? {
            PartitionRepr::Parts(p) | PartitionRepr::Object { parts: p } => Partition::new(p),
            PartitionRepr::Text(t) => t.parse(),
        }
        .map_err(serde::de::Error::custom)
    }
}

fn with_exponent(base: String, count: usize) -> String {
    if count == 1 {
        base
    } else {
        format!("{base}^{count}")
    }
}

/// Exponent notation, `(4,2^3,1^2)`.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.blocks().into_iter().map(|(p, n)| with_exponent(p.to_string(), n)).collect();
        write!(f, "({})", items.join(","))
    }
}

/// Accepts `(4,2^3,1^2)`, `4,2,2,2,1,1` or `[4, 2, 2]`. Parts must already be
/// weakly decreasing.
impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']).trim();
        let bad = || Error::InvalidPartition(format!("cannot parse {s:?}"));
        let mut parts = Vec::new();
        if inner.is_empty() {
            return Partition::new(parts);
        }
        for item in inner.split(',') {
            let (base, exp) = match item.split_once('^') {
                Some((b, e)) => (b, e.trim().parse::<usize>().map_err(|_| bad())?),
                None => (item, 1),
            };
            let base = base.trim().parse::<usize>().map_err(|_| bad())?;
            parts.extend(std::iter::repeat_n(base, exp));
        }
        Partition::new(parts)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Dominance {
    Greater,
    Less,
    Equal,
    Incomparable,
}

/// Compares prefix sums, padding the shorter partition with zeros.
pub fn dominance_compare(p: &Partition, q: &Partition) -> Result<Dominance> {
    if p.total() != q.total() {
        return Err(Error::IncomparableUniverse(p.total(), q.total()));
    }
    let len = p.num_parts().max(q.num_parts());
    let (mut sp, mut sq) = (0, 0);
    let (mut ge, mut le) = (true, true);
    for i in 0..len {
        sp += p.0.get(i).copied().unwrap_or(0);
        sq += q.0.get(i).copied().unwrap_or(0);
        match sp.cmp(&sq) {
            Ordering::Greater => le = false,
            Ordering::Less => ge = false,
            Ordering::Equal => {}
        }
    }
    Ok(match (ge, le) {
        (true, true) => Dominance::Equal,
        (true, false) => Dominance::Greater,
        (false, true) => Dominance::Less,
        (false, false) => Dominance::Incomparable,
    })
}

/// Transpose of the Young diagram.
pub fn conjugate_partition(p: &Partition) -> Partition {
    Partition((1..=p.largest()).map(|k| p.0.iter().take_while(|&&x| x >= k).count()).collect())
}

/// One entry of a Jordan degree type: a string of `length` beads starting in `degree`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StringShape {
    pub length: usize,
    pub degree: usize,
}

impl Ord for StringShape {
    fn cmp(&self, other: &Self) -> Ordering {
        other.length.cmp(&self.length).then(self.degree.cmp(&other.degree))
    }
}

impl PartialOrd for StringShape {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Multiset of `(length, starting degree)` pairs, kept sorted by decreasing
/// length and then increasing degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct JordanDegreeType(Vec<StringShape>);

impl Serialize for JordanDegreeType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("JordanDegreeType", 2)?;
        st.serialize_field("entries", &self.0)?;
        st.serialize_field("notation", &self.to_string())?;
        st.end()
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum DegreeTypeRepr {
    Entries(Vec<StringShape>),
    Text(String),
    Object { entries: Vec<StringShape> },
}

impl<'de> Deserialize<'de> for JordanDegreeType {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        match DegreeTypeRepr::deserialize(d)? {
            DegreeTypeRepr::Entries(e) | DegreeTypeRepr::Object { entries: e } => Ok(e.into()),
            DegreeTypeRepr::Text(t) => t.parse().map_err(serde::de::Error::custom),
        }
    }
}

impl From<Vec<StringShape>> for JordanDegreeType {
    fn from(mut entries: Vec<StringShape>) -> Self {
        entries.sort();
        JordanDegreeType(entries)
    }
}

impl JordanDegreeType {
    /// From `(length, degree, multiplicity)` triples.
    pub fn from_counts(counts: &[(usize, usize, usize)]) -> Self {
        counts
            .iter()
            .flat_map(|&(length, degree, n)| std::iter::repeat_n(StringShape { length, degree }, n))
            .collect::<Vec<_>>()
            .into()
    }

    pub fn entries(&self) -> &[StringShape] {
        &self.0
    }

    pub fn partition(&self) -> Partition {
        Partition::from_unsorted(self.0.iter().map(|s| s.length).collect())
    }

    /// Number of beads in each degree `0..len`.
    pub fn bead_counts(&self, len: usize) -> Vec<usize> {
        let mut counts = vec![0; len];
        for s in &self.0 {
            for c in counts.iter_mut().skip(s.degree).take(s.length) {
                *c += 1;
            }
        }
        counts
    }

    fn runs(&self) -> Vec<(StringShape, usize)> {
        let mut out: Vec<(StringShape, usize)> = Vec::new();
        for s in &self.0 {
            match out.last_mut() {
                Some((t, n)) if t == s => *n += 1,
                _ => out.push((*s, 1)),
            }
        }
        out
    }
}

/// `4_0,2_1^3,1_1,1_2`.
impl fmt::Display for JordanDegreeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> =
            self.runs().into_iter().map(|(s, n)| with_exponent(format!("{}_{}", s.length, s.degree), n)).collect();
        write!(f, "{}", items.join(","))
    }
}

impl FromStr for JordanDegreeType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("cannot parse Jordan degree type {s:?}"));
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        let mut entries = Vec::new();
        if inner.is_empty() {
            return Ok(JordanDegreeType(entries));
        }
        for item in inner.split(',') {
            let (shape, n) = match item.split_once('^') {
                Some((a, e)) => (a, e.trim().parse::<usize>().map_err(|_| bad())?),
                None => (item, 1),
            };
            let (p, nu) = shape.split_once('_').ok_or_else(bad)?;
            let length = p.trim().parse::<usize>().map_err(|_| bad())?;
            let degree = nu.trim().parse::<usize>().map_err(|_| bad())?;
            if length == 0 {
                return Err(bad());
            }
            entries.extend(std::iter::repeat_n(StringShape { length, degree }, n));
        }
        Ok(entries.into())
    }
}
