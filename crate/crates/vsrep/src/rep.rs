//! Linear representations as generator-indexed lists of invertible matrices,
//! with the standard constructions: permutation modules, sum-zero
//! submodules, tensor products, conjugation (adjoint) modules, character
//! twists, duals, induced modules from block-monomial data, and restriction
//! to subgroups given by generator words.
//!
//! The representation file format
//! `{"field": {"p": …, "e": …}, "dim": n, "generators": [nested lists]}`
//! is normative for the command-line tools.

use crate::field::Field;
use crate::linalg::{Matrix, Subspace};
use crate::perm::{PermGroup, Permutation};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum RepError {
    #[error("generator {0} is not invertible")]
    NotInvertible(usize),
    #[error("generator {index} is {rows}×{cols}, expected {dim}×{dim}")]
    WrongShape { index: usize, rows: usize, cols: usize, dim: usize },
    #[error("matrices belong to a different field than the representation")]
    FieldMismatch,
    #[error("representations have {0} and {1} generators; counts must agree")]
    GeneratorCountMismatch(usize, usize),
    #[error("expected a permutation representation (0/1 matrices with one 1 per row and column)")]
    NotAPermutationRepresentation,
    #[error("sum-zero construction needs dimension at least 2, got {0}")]
    DimensionTooSmall(usize),
    #[error("character twist scalar {0} is zero or out of range")]
    BadScalar(u8),
    #[error("malformed block-monomial data: {0}")]
    BadMonomialData(String),
    #[error("field construction failed: {0}")]
    Field(#[from] crate::field::FieldError),
    #[error("word refers to generator {0}, but there are only {1}")]
    WordOutOfRange(usize, usize),
    #[error(transparent)]
    Linalg(#[from] crate::linalg::LinalgError),
}

/// A representation of a finitely generated group: one invertible `dim×dim`
/// matrix per abstract generator. The group itself is never materialized;
/// every question asked here is decidable from generator action.
#[derive(Clone, PartialEq, Eq)]
pub struct Representation {
    field: Field,
    dim: usize,
    gens: Vec<Matrix>,
    labels: Option<Vec<String>>,
}

impl std::fmt::Debug for Representation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Representation(dim {} over GF({}), {} generators)",
            self.dim,
            self.field.q(),
            self.gens.len()
        )
    }
}

#[derive(Serialize, Deserialize)]
struct FieldSpecDto {
    p: u32,
    e: u32,
}

#[derive(Serialize, Deserialize)]
struct RepDto {
    field: FieldSpecDto,
    dim: usize,
    generators: Vec<Vec<Vec<u8>>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    labels: Option<Vec<String>>,
}

impl Serialize for Representation {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        RepDto {
            field: FieldSpecDto { p: self.field.p(), e: self.field.e() },
            dim: self.dim,
            generators: self.gens.iter().map(|m| m.to_nested()).collect(),
            labels: self.labels.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Representation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Representation, D::Error> {
        let dto = RepDto::deserialize(d)?;
        let field = Field::new(dto.field.p, dto.field.e).map_err(D::Error::custom)?;
        let gens = dto
            .generators
            .iter()
            .map(|rows| Matrix::from_rows(&field, rows))
            .collect::<Result<Vec<_>, _>>()
            .map_err(D::Error::custom)?;
        let rep = Representation::new(&field, dto.dim, gens).map_err(D::Error::custom)?;
        Ok(match dto.labels {
            Some(l) => rep.with_labels(l),
            None => rep,
        })
    }
}

impl Representation {
    pub fn new(field: &Field, dim: usize, gens: Vec<Matrix>) -> Result<Representation, RepError> {
        for (index, m) in gens.iter().enumerate() {
            if m.field() != field {
                return Err(RepError::FieldMismatch);
            }
            if m.rows() != dim || m.cols() != dim {
                return Err(RepError::WrongShape { index, rows: m.rows(), cols: m.cols(), dim });
            }
            if m.inverse().is_err() {
                return Err(RepError::NotInvertible(index));
            }
        }
        Ok(Representation { field: field.clone(), dim, gens, labels: None })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Representation {
        assert_eq!(labels.len(), self.gens.len(), "one label per generator");
        self.labels = Some(labels);
        self
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Matrix] {
        &self.gens
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Product `g_{w₀}·g_{w₁}·…` of generator matrices (the empty word is
    /// the identity). Matches the permutation-word convention: the rightmost
    /// letter acts first on vectors.
    pub fn evaluate_word(&self, word: &[usize]) -> Result<Matrix, RepError> {
        let mut acc = Matrix::identity(&self.field, self.dim);
        for &i in word {
            let g = self.gens.get(i).ok_or(RepError::WordOutOfRange(i, self.gens.len()))?;
            acc = acc.mul(g)?;
        }
        Ok(acc)
    }

    /// Restriction to the subgroup generated by the given words: a new
    /// representation whose generators are the evaluated words.
    pub fn restrict(&self, words: &[Vec<usize>]) -> Result<Representation, RepError> {
        let gens = words.iter().map(|w| self.evaluate_word(w)).collect::<Result<Vec<_>, _>>()?;
        Representation::new(&self.field, self.dim, gens)
    }
}

/// The permutation matrix of `s`: `M[s(j)][j] = 1`, so columns are indicator
/// functions of images and `M·e_j = e_{s(j)}`.
pub fn perm_matrix(field: &Field, s: &Permutation) -> Matrix {
    let n = s.degree();
    let mut m = Matrix::zeros(field, n, n);
    for j in 0..n {
        m.set(s.apply(j), j, 1);
    }
    m
}

/// The permutation module `k^B`: each generator becomes its permutation
/// matrix in the basis of point indicators.
pub fn perm_to_rep(group: &PermGroup, field: &Field) -> Representation {
    let gens = group.generators().iter().map(|s| perm_matrix(field, s)).collect();
    Representation::new(field, group.degree(), gens).expect("permutation matrices are invertible")
}

/// Fixed basis of the sum-zero hyperplane: rows `f_i = e_i − e_{n−1}` for
/// `i = 0, …, n−2`.
pub fn sum_zero_basis(field: &Field, n: usize) -> Matrix {
    let neg1 = field.neg_code(1);
    Matrix::from_fn(field, n - 1, n, |i, j| {
        if j == i {
            1
        } else if j == n - 1 {
            neg1
        } else {
            0
        }
    })
}

/// The action induced on the sum-zero hyperplane `{h : Σ h(b) = 0}` of a
/// permutation representation, in the fixed basis `e_i − e_{n−1}`;
/// dimension drops by one.
pub fn sum_zero_submodule(r: &Representation) -> Result<Representation, RepError> {
    let n = r.dim();
    if n < 2 {
        return Err(RepError::DimensionTooSmall(n));
    }
    let perms = permutations_of(r)?;
    let field = r.field();
    let neg1 = field.neg_code(1);
    let gens = perms
        .iter()
        .map(|s| {
            // f_i ↦ e_{s(i)} − e_{s(n−1)} = f_{s(i)} − f_{s(n−1)} with f_{n−1} = 0.
            let mut m = Matrix::zeros(field, n - 1, n - 1);
            let drop = s.apply(n - 1);
            for i in 0..n - 1 {
                let si = s.apply(i);
                if si != n - 1 {
                    m.set(si, i, 1);
                }
                if drop != n - 1 {
                    let cur = m.get(drop, i);
                    m.set(drop, i, field.add_code(cur, neg1));
                }
            }
            m
        })
        .collect();
    Representation::new(field, n - 1, gens)
}

/// Recovers the permutations behind a permutation representation, or fails.
fn permutations_of(r: &Representation) -> Result<Vec<Permutation>, RepError> {
    r.generators()
        .iter()
        .map(|m| {
            let n = m.rows();
            let mut images = vec![usize::MAX; n];
            for (j, image) in images.iter_mut().enumerate() {
                let mut hits = (0..n).filter(|&i| m.get(i, j) != 0);
                let i = hits.next().ok_or(RepError::NotAPermutationRepresentation)?;
                if hits.next().is_some() || m.get(i, j) != 1 {
                    return Err(RepError::NotAPermutationRepresentation);
                }
                *image = i;
            }
            Permutation::from_images(images).map_err(|_| RepError::NotAPermutationRepresentation)
        })
        .collect()
}

/// Generator-wise Kronecker product; both inputs must be indexed by the same
/// abstract generator list.
pub fn rep_tensor(a: &Representation, b: &Representation) -> Result<Representation, RepError> {
    if a.field() != b.field() {
        return Err(RepError::FieldMismatch);
    }
    if a.generators().len() != b.generators().len() {
        return Err(RepError::GeneratorCountMismatch(a.generators().len(), b.generators().len()));
    }
    let gens = a
        .generators()
        .iter()
        .zip(b.generators())
        .map(|(x, y)| x.kron(y))
        .collect::<Result<Vec<_>, _>>()?;
    Representation::new(a.field(), a.dim() * b.dim(), gens)
}

/// The conjugation action on `End(V)` in the row-major `vec` basis:
/// generator `g` acts on `vec(X)` as `ρ(g) ⊗ (ρ(g)⁻¹)ᵀ`, so that
/// `Ad(g)·vec(X) = vec(ρ(g)·X·ρ(g)⁻¹)`.
pub fn rep_adjoint(r: &Representation) -> Representation {
    let gens: Vec<Matrix> = r
        .generators()
        .iter()
        .map(|g| {
            let ginv_t = g.inverse().expect("generators are invertible").transpose();
            g.kron(&ginv_t).expect("same field")
        })
        .collect();
    Representation::new(r.field(), r.dim() * r.dim(), gens).expect("conjugation preserves invertibility")
}

/// One nonzero scalar per generator: a one-dimensional character to twist by.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTwist {
    field: Field,
    scalars: Vec<u8>,
}

impl CharacterTwist {
    pub fn new(field: &Field, scalars: Vec<u8>) -> Result<CharacterTwist, RepError> {
        for &c in &scalars {
            if c == 0 || (c as u32) >= field.q() {
                return Err(RepError::BadScalar(c));
            }
        }
        Ok(CharacterTwist { field: field.clone(), scalars })
    }

    pub fn scalars(&self) -> &[u8] {
        &self.scalars
    }

    pub fn inverse(&self) -> CharacterTwist {
        let scalars = self
            .scalars
            .iter()
            .map(|&c| self.field.inv_code(c).expect("nonzero scalar"))
            .collect();
        CharacterTwist { field: self.field.clone(), scalars }
    }
}

/// Scales generator `i` by `twist.scalars[i]`.
pub fn rep_twist(r: &Representation, twist: &CharacterTwist) -> Result<Representation, RepError> {
    if twist.field != *r.field() {
        return Err(RepError::FieldMismatch);
    }
    if twist.scalars.len() != r.generators().len() {
        return Err(RepError::GeneratorCountMismatch(twist.scalars.len(), r.generators().len()));
    }
    let gens =
        r.generators().iter().zip(&twist.scalars).map(|(m, &c)| m.scale(c)).collect::<Vec<_>>();
    Representation::new(r.field(), r.dim(), gens)
}

/// The dual (contragredient) representation `g ↦ (ρ(g)⁻¹)ᵀ`.
pub fn rep_dual(r: &Representation) -> Representation {
    let gens = r
        .generators()
        .iter()
        .map(|g| g.inverse().expect("generators are invertible").transpose())
        .collect();
    Representation::new(r.field(), r.dim(), gens).expect("duals stay invertible")
}

/// Block-monomial generator data for an induced module: `block_count`
/// summands of dimension `block_dim`; each generator permutes the summands
/// by `π` and maps summand `i` into summand `π(i)` through the `i`-th block
/// entry.
#[derive(Clone, Debug)]
pub struct MonomialData {
    field: Field,
    block_count: usize,
    block_dim: usize,
    gens: Vec<(Permutation, Vec<Matrix>)>,
}

impl MonomialData {
    pub fn new(
        field: &Field,
        block_count: usize,
        block_dim: usize,
        gens: Vec<(Permutation, Vec<Matrix>)>,
    ) -> Result<MonomialData, RepError> {
        for (pi, blocks) in &gens {
            if pi.degree() != block_count {
                return Err(RepError::BadMonomialData(format!(
                    "block permutation degree {} ≠ block count {block_count}",
                    pi.degree()
                )));
            }
            if blocks.len() != block_count {
                return Err(RepError::BadMonomialData(format!(
                    "{} block entries, expected {block_count}",
                    blocks.len()
                )));
            }
            for b in blocks {
                if b.field() != field {
                    return Err(RepError::FieldMismatch);
                }
                if b.rows() != block_dim || b.cols() != block_dim {
                    return Err(RepError::BadMonomialData(format!(
                        "block entry is {}×{}, expected {block_dim}×{block_dim}",
                        b.rows(),
                        b.cols()
                    )));
                }
                if b.inverse().is_err() {
                    return Err(RepError::BadMonomialData("block entry not invertible".into()));
                }
            }
        }
        Ok(MonomialData { field: field.clone(), block_count, block_dim, gens })
    }

    pub fn block_count(&self) -> usize {
        self.block_count
    }

    pub fn block_dim(&self) -> usize {
        self.block_dim
    }
}

/// Assembles the block-monomial matrices: summand `i` occupies coordinates
/// `i·m … (i+1)·m − 1`, and generator blocks land at block row `π(i)`,
/// block column `i` — the block analogue of the permutation-matrix
/// convention `M[s(j)][j] = 1`.
pub fn induced_rep(data: &MonomialData) -> Result<Representation, RepError> {
    let (r, m) = (data.block_count, data.block_dim);
    let dim = r * m;
    let gens = data
        .gens
        .iter()
        .map(|(pi, blocks)| {
            let mut big = Matrix::zeros(&data.field, dim, dim);
            for (i, block) in blocks.iter().enumerate() {
                let row0 = pi.apply(i) * m;
                let col0 = i * m;
                for a in 0..m {
                    for b in 0..m {
                        let v = block.get(a, b);
                        if v != 0 {
                            big.set(row0 + a, col0 + b, v);
                        }
                    }
                }
            }
            big
        })
        .collect();
    Representation::new(&data.field, dim, gens)
}

/// The block-support permutation of a block-monomial matrix (block column
/// `i` maps onto block row `π(i)`), if the matrix has exactly that shape.
pub fn block_permutation(m: &Matrix, block_dim: usize) -> Option<Permutation> {
    if block_dim == 0 || m.rows() != m.cols() || !m.rows().is_multiple_of(block_dim) {
        return None;
    }
    let r = m.rows() / block_dim;
    let mut images = vec![usize::MAX; r];
    for (bc, image) in images.iter_mut().enumerate() {
        let mut support = (0..r).filter(|&br| {
            (0..block_dim).any(|a| {
                (0..block_dim).any(|b| m.get(br * block_dim + a, bc * block_dim + b) != 0)
            })
        });
        let target = support.next()?;
        if support.next().is_some() {
            return None;
        }
        *image = target;
    }
    Permutation::from_images(images).ok()
}

/// The sum-zero hyperplane as a subspace of the ambient permutation module.
pub fn sum_zero_subspace(field: &Field, n: usize) -> Subspace {
    Subspace::from_span(&sum_zero_basis(field, n))
}
