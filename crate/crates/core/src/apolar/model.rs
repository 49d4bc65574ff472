use std::sync::Arc;

use super::hvector::HVector;
use crate::error::{Error, Result};
use crate::linalg::{row_reduce, EchelonBasis, FieldElement, FieldSpec, Matrix};
use crate::poly::{same_vars, LinearForm, Monomial, MonomialBasis, Polynomial, Side, VariableSet};

#[derive(Debug, Clone)]
pub enum ModelSource {
    DualGenerator(Polynomial),
    Ideal { generators: Vec<Polynomial>, bound: usize },
}

/// Coordinates for the graded pieces `A_t` of `R/Ann(F)` or `R/I`.
///
/// The basis of `A_t` is a list of monomial classes (`tags`). For a dual
/// generator these are the first monomials `x^α` in canonical order whose
/// contractions `x^α ∘ F` are independent; multiplication by `ℓ` is then
/// contraction by `ℓ` on those images. For an ideal they are the standard
/// monomials left over after reducing by `I_t`.
#[derive(Debug, Clone)]
pub struct GradedAlgebraModel {
    field: FieldSpec,
    vars: Arc<VariableSet>,
    source: ModelSource,
    socle_degree: usize,
    pieces: Vec<Piece>,
}

#[derive(Debug, Clone)]
struct Piece {
    tags: Vec<Monomial>,
    repr: PieceRepr,
}

#[derive(Debug, Clone)]
enum PieceRepr {
    Dual {
        /// `x^{tag_j} ∘ F` as dense vectors over `S_{d-t}`.
        images: Vec<Vec<FieldElement>>,
        /// RREF of `images`: row `k` has its pivot at `pivots[k]` and equals
        /// `Σ_j transform[k][j] * images[j]`.
        pivots: Vec<usize>,
        transform: Vec<Vec<FieldElement>>,
        /// Per monomial of `S_{d-t}`: `(variable, index in S_{d-t-1})`.
        lower: Vec<Vec<(usize, usize)>>,
    },
    Ideal {
        reducer: Vec<(usize, Vec<FieldElement>)>,
        standard: Vec<usize>,
        /// Per standard monomial: `(variable, index in R_{t+1})`.
        raise: Vec<Vec<(usize, usize)>>,
    },
}

fn lowering_table(nvars: usize, degree: usize) -> Vec<Vec<(usize, usize)>> {
    let src = MonomialBasis::new(nvars, degree);
    if degree == 0 {
        return vec![Vec::new(); src.len()];
    }
    let dst = MonomialBasis::new(nvars, degree - 1);
    src.monomials()
        .iter()
        .map(|m| {
            (0..nvars)
                .filter_map(|v| {
                    m.checked_sub(&Monomial::variable(nvars, v)).map(|lower| (v, dst.index_of(&lower).unwrap()))
                })
                .collect()
        })
        .collect()
}

impl GradedAlgebraModel {
    /// Model of `A_F = R/Ann_R(F)` for a nonzero homogeneous dual generator.
    pub fn from_dual(form: &Polynomial) -> Result<Self> {
        if form.side() != Side::Dual {
            return Err(Error::WrongSide("dual"));
        }
        let d = form.form_degree()?;
        let field = form.field();
        field.check_characteristic(d)?;
        let vars = form.vars().clone();
        let n = vars.len();
        let mut pieces = Vec::with_capacity(d + 1);
        for t in 0..=d {
            let source = MonomialBasis::new(n, t);
            let target = MonomialBasis::new(n, d - t);
            let mut echelon = EchelonBasis::new(field, target.len());
            let mut tags = Vec::new();
            let mut images = Vec::new();
            for alpha in source.monomials() {
                let mut img = vec![field.zero(); target.len()];
                let mut nonzero = false;
                for (mono, c) in form.terms() {
                    if let Some(beta) = mono.checked_sub(alpha) {
                        img[target.index_of(&beta).unwrap()] = c.clone();
                        nonzero = true;
                    }
                }
                if nonzero && echelon.insert(&img) {
                    tags.push(alpha.clone());
                    images.push(img);
                }
            }
            let h = images.len();
            let mut transform: Vec<Vec<FieldElement>> =
                (0..h).map(|i| (0..h).map(|j| if i == j { field.one() } else { field.zero() }).collect()).collect();
            let (_, pivots, rank) = row_reduce(images.clone(), target.len(), Some(&mut transform));
            debug_assert_eq!(rank, h);
            pieces.push(Piece {
                tags,
                repr: PieceRepr::Dual { images, pivots, transform, lower: lowering_table(n, d - t) },
            });
        }
        Ok(GradedAlgebraModel {
            field,
            vars,
            source: ModelSource::DualGenerator(form.clone()),
            socle_degree: d,
            pieces,
        })
    }

    /// Model of `R/I` for homogeneous generators, computing `I_t` as the span
    /// of monomial multiples. Fails if `A_bound` is nonzero.
    pub fn from_ideal(generators: &[Polynomial], bound: usize) -> Result<Self> {
        let first =
            generators.first().ok_or_else(|| Error::InvalidParams("ideal needs at least one generator".into()))?;
        let vars = first.vars().clone();
        let field = first.field();
        let n = vars.len();
        let mut gens = Vec::new();
        for g in generators {
            if g.side() != Side::Ring {
                return Err(Error::WrongSide("ring"));
            }
            if !same_vars(g.vars(), &vars) {
                return Err(Error::VariableSetMismatch);
            }
            if g.field() != field {
                return Err(Error::FieldMismatch(field, g.field()));
            }
            if let Some(e) = g.homogeneous_degree()? {
                gens.push((e, g));
            }
        }
        let mut pieces = Vec::new();
        let mut next_basis = MonomialBasis::new(n, 0);
        for t in 0..=bound {
            let basis = next_basis;
            next_basis = MonomialBasis::new(n, t + 1);
            let mut spanning = Vec::new();
            for (e, g) in &gens {
                if *e > t {
                    continue;
                }
                for mu in MonomialBasis::new(n, t - e).monomials() {
                    let mut v = vec![field.zero(); basis.len()];
                    for (m, c) in g.terms() {
                        v[basis.index_of(&m.mul(mu)).unwrap()] = c.clone();
                    }
                    spanning.push(v);
                }
            }
            let (rows, pivots, _) = row_reduce(spanning, basis.len(), None);
            let mut is_pivot = vec![false; basis.len()];
            for &p in &pivots {
                is_pivot[p] = true;
            }
            let standard: Vec<usize> = (0..basis.len()).filter(|&i| !is_pivot[i]).collect();
            if standard.is_empty() {
                break;
            }
            if t == bound {
                return Err(Error::NotArtinian(bound));
            }
            let raise = standard
                .iter()
                .map(|&i| {
                    (0..n)
                        .map(|v| {
                            let up = basis.get(i).mul(&Monomial::variable(n, v));
                            (v, next_basis.index_of(&up).unwrap())
                        })
                        .collect()
                })
                .collect();
            pieces.push(Piece {
                tags: standard.iter().map(|&i| basis.get(i).clone()).collect(),
                repr: PieceRepr::Ideal { reducer: pivots.into_iter().zip(rows).collect(), standard, raise },
            });
        }
        if pieces.is_empty() {
            return Err(Error::InvalidParams("the ideal is the whole ring".into()));
        }
        let socle_degree = pieces.len() - 1;
        field.check_characteristic(socle_degree)?;
        Ok(GradedAlgebraModel {
            field,
            vars,
            source: ModelSource::Ideal { generators: generators.to_vec(), bound },
            socle_degree,
            pieces,
        })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn vars(&self) -> &Arc<VariableSet> {
        &self.vars
    }

    pub fn source(&self) -> &ModelSource {
        &self.source
    }

    pub fn socle_degree(&self) -> usize {
        self.socle_degree
    }

    /// `dim A_t`, zero above the socle degree.
    pub fn piece_dim(&self, t: usize) -> usize {
        self.pieces.get(t).map_or(0, |p| p.tags.len())
    }

    pub fn hvector(&self) -> HVector {
        HVector::new(self.pieces.iter().map(|p| p.tags.len()).collect())
    }

    pub fn dim(&self) -> usize {
        self.pieces.iter().map(|p| p.tags.len()).sum()
    }

    /// Monomials whose classes form the basis of `A_t`.
    pub fn basis_monomials(&self, t: usize) -> &[Monomial] {
        self.pieces.get(t).map_or(&[], |p| &p.tags)
    }

    /// Ring-side representative `Σ c_j x^{tag_j}` of a coordinate vector of `A_t`.
    pub fn element_polynomial(&self, t: usize, coords: &[FieldElement]) -> Polynomial {
        Polynomial::from_terms(
            &self.vars,
            Side::Ring,
            self.field,
            self.basis_monomials(t).iter().cloned().zip(coords.iter().cloned()),
        )
        .expect("coordinates over the model field")
    }

    pub fn check_linear_form(&self, ell: &LinearForm) -> Result<()> {
        if !ell.compatible_with(&self.vars) {
            return Err(Error::VariableSetMismatch);
        }
        if ell.field() != self.field {
            return Err(Error::FieldMismatch(self.field, ell.field()));
        }
        if ell.is_zero() {
            return Err(Error::ZeroLinearForm);
        }
        Ok(())
    }

    /// Coordinates in `A_t` of a dense vector (over `S_{d-t}` for dual
    /// models, over `R_t` for ideal models).
    fn coordinates(&self, t: usize, v: &[FieldElement]) -> Vec<FieldElement> {
        let Some(piece) = self.pieces.get(t) else {
            return Vec::new();
        };
        match &piece.repr {
            PieceRepr::Dual { pivots, transform, .. } => {
                let h = piece.tags.len();
                let mut c = vec![self.field.zero(); h];
                for (k, &p) in pivots.iter().enumerate() {
                    if v[p].is_zero() {
                        continue;
                    }
                    for (cj, tk) in c.iter_mut().zip(&transform[k]) {
                        *cj = &*cj + &(&v[p] * tk);
                    }
                }
                c
            }
            PieceRepr::Ideal { reducer, standard, .. } => {
                let mut v = v.to_vec();
                for (p, row) in reducer {
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
                standard.iter().map(|&i| v[i].clone()).collect()
            }
        }
    }

    /// Matrix of `×ℓ : A_t → A_{t+1}`; its columns are images of basis elements.
    pub fn step_matrix(&self, ell: &LinearForm, t: usize) -> Result<Matrix> {
        self.check_linear_form(ell)?;
        Ok(self.step_unchecked(ell, t))
    }

    pub(crate) fn step_unchecked(&self, ell: &LinearForm, t: usize) -> Matrix {
        let h_src = self.piece_dim(t);
        let h_dst = self.piece_dim(t + 1);
        if h_src == 0 || h_dst == 0 {
            return Matrix::zeros(self.field, h_dst, h_src);
        }
        let coeffs = ell.coeffs();
        let piece = &self.pieces[t];
        let columns: Vec<Vec<FieldElement>> = match &piece.repr {
            PieceRepr::Dual { images, lower, .. } => {
                let len = MonomialBasis::new(self.vars.len(), self.socle_degree - t - 1).len();
                images
                    .iter()
                    .map(|u| {
                        let mut out = vec![self.field.zero(); len];
                        for (i, ui) in u.iter().enumerate() {
                            if ui.is_zero() {
                                continue;
                            }
                            for &(var, dst) in &lower[i] {
                                if !coeffs[var].is_zero() {
                                    out[dst] = &out[dst] + &(&coeffs[var] * ui);
                                }
                            }
                        }
                        self.coordinates(t + 1, &out)
                    })
                    .collect()
            }
            PieceRepr::Ideal { raise, .. } => {
                let len = MonomialBasis::new(self.vars.len(), t + 1).len();
                raise
                    .iter()
                    .map(|targets| {
                        let mut out = vec![self.field.zero(); len];
                        for &(var, dst) in targets {
                            out[dst] = &out[dst] + &coeffs[var];
                        }
                        self.coordinates(t + 1, &out)
                    })
                    .collect()
            }
        };
        Matrix::from_columns(self.field, h_dst, &columns).expect("consistent shapes")
    }

    /// Matrix of `×ℓ^k : A_i → A_{i+k}`; identity for `k = 0` and a matrix
    /// with no rows when `i + k` exceeds the socle degree.
    pub fn mult_matrix(&self, ell: &LinearForm, i: usize, k: usize) -> Result<Matrix> {
        self.check_linear_form(ell)?;
        let mut m = Matrix::identity(self.field, self.piece_dim(i));
        for t in i..i + k {
            m = self.step_unchecked(ell, t).mul(&m)?;
        }
        Ok(m)
    }
}
