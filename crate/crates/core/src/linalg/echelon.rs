use super::field::{FieldElement, FieldSpec};

/// Incrementally built semi-echelon basis of a subspace of `K^len`.
///
/// Rows are stored in insertion order, each normalized to 1 at its pivot and
/// zero at the pivots of earlier rows, so reducing against the rows in order
/// clears every pivot position.
#[derive(Debug, Clone)]
pub struct EchelonBasis {
    field: FieldSpec,
    len: usize,
    rows: Vec<(usize, Vec<FieldElement>)>,
}

impl EchelonBasis {
    pub fn new(field: FieldSpec, len: usize) -> Self {
        EchelonBasis { field, len, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn reduce(&self, v: &[FieldElement]) -> Vec<FieldElement> {
        debug_assert_eq!(v.len(), self.len);
        let mut v = v.to_vec();
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let factor = v[*p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x = &*x - &(&factor * r);
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[FieldElement]) -> bool {
        self.reduce(v).iter().all(FieldElement::is_zero)
    }

    /// Adds `v` if it is independent of the current rows; reports whether it was.
    pub fn insert(&mut self, v: &[FieldElement]) -> bool {
        let r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[p].inverse().expect("nonzero pivot");
        let r: Vec<FieldElement> = r.iter().map(|x| x * &inv).collect();
        self.rows.push((p, r));
        true
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }
}
