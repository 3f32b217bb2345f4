//! Heart modules of permutation actions over GF(2): the sum-zero subspace
//! of the permutation module, additionally quotiented by the all-ones line
//! when the degree is even. These are the smallest interesting GF(2)-modules
//! a permutation group carries, and their very-simplicity is tightly linked
//! to double transitivity; the checks here make that link testable.

use crate::field::Field;
use crate::linalg::{LinalgError, Matrix, QuotientMap, Subspace};
use crate::meataxe::{endomorphism_algebra, MeataxeError};
use crate::normalg::Diagnosis;
use crate::perm::{PermError, PermGroup, Permutation};
use crate::rep::{
    perm_matrix, perm_to_rep, sum_zero_submodule, sum_zero_subspace, RepError, Representation,
};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum HeartError {
    #[error("heart construction needs degree at least 3, got {degree}")]
    DegreeTooSmall { degree: usize },
    #[error("this check requires odd degree, got {degree}")]
    EvenDegree { degree: usize },
    #[error("this check requires a transitive group")]
    NotTransitive,
    #[error("bad point subset: {0}")]
    BadSubset(String),
    #[error("permutation degree {got} does not match the heart degree {expected}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Meataxe(#[from] MeataxeError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Whether the degree is odd (heart = sum-zero hyperplane) or even (heart =
/// sum-zero hyperplane modulo the all-ones line, which lies inside it).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Odd,
    Even,
}

/// The heart of a permutation group acting on `n` points, over GF(2).
///
/// For odd `n` this is the sum-zero hyperplane of the permutation module,
/// of dimension `n−1`; for even `n` the all-ones vector is itself sum-zero
/// and the heart is the quotient by its span, of dimension `n−2`. The
/// generator matrices use the fixed bases described in [`heart`].
#[derive(Clone)]
pub struct HeartModule {
    group: PermGroup,
    rep: Representation,
    parity: Parity,
    sum_zero: Subspace,
    qmap: Option<QuotientMap>,
}

impl HeartModule {
    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    /// The heart as a representation (one matrix per group generator).
    pub fn rep(&self) -> &Representation {
        &self.rep
    }

    /// Number of permuted points.
    pub fn degree(&self) -> usize {
        self.group.degree()
    }

    pub fn dim(&self) -> usize {
        self.rep.dim()
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    /// Matrix of an arbitrary group element on the heart, in the same basis
    /// as the generator matrices. Agrees with products of generator matrices
    /// whenever `s` is expressed as the corresponding generator word.
    pub fn heart_matrix(&self, s: &Permutation) -> Result<Matrix, HeartError> {
        let n = self.group.degree();
        if s.degree() != n {
            return Err(HeartError::DegreeMismatch { expected: n, got: s.degree() });
        }
        let full = perm_matrix(self.rep.field(), s);
        let restricted = self.sum_zero.restrict_operator(&full)?;
        match &self.qmap {
            None => Ok(restricted),
            Some(q) => Ok(q.push_operator(&restricted)?),
        }
    }
}

/// Builds the heart of a permutation group over GF(2).
///
/// Odd degree `n`: the sum-zero hyperplane in the basis `f_i = e_i − e_{n−1}`
/// (`i = 0, …, n−2`), dimension `n−1`. Even degree: the all-ones vector of
/// the permutation module is sum-zero (its coordinates in the `f_i` basis
/// are all ones), and the heart is the quotient of the hyperplane by its
/// span, in the complement basis `f_0, …, f_{n−3}`, dimension `n−2`.
///
/// Fails when the degree is below 3.
pub fn heart(group: &PermGroup) -> Result<HeartModule, HeartError> {
    let n = group.degree();
    if n < 3 {
        return Err(HeartError::DegreeTooSmall { degree: n });
    }
    let f2 = Field::gf(2).expect("GF(2) is a valid field");
    let perm_rep = perm_to_rep(group, &f2);
    let sum_zero = sum_zero_subspace(&f2, n);
    let restricted = sum_zero_submodule(&perm_rep)?;
    if n % 2 == 1 {
        assert_eq!(restricted.dim(), n - 1, "odd-degree heart must have dimension n−1");
        return Ok(HeartModule {
            group: group.clone(),
            rep: restricted,
            parity: Parity::Odd,
            sum_zero,
            qmap: None,
        });
    }
    // Even degree: Σ f_i = Σ_{i<n−1} e_i + (n−1)·e_{n−1} = 1_B over GF(2),
    // so the all-ones coordinate vector spans the line to kill.
    let line = Subspace::from_rows(&f2, n - 1, &[vec![1u8; n - 1]]);
    let candidates: Vec<Vec<u8>> = (0..n - 1)
        .map(|i| {
            let mut e = vec![0u8; n - 1];
            e[i] = 1;
            e
        })
        .collect();
    let qmap = QuotientMap::new(&line, &candidates)?;
    let gens = restricted
        .generators()
        .iter()
        .map(|m| qmap.push_operator(m))
        .collect::<Result<Vec<Matrix>, LinalgError>>()?;
    let rep = Representation::new(&f2, n - 2, gens)?;
    assert_eq!(rep.dim(), n - 2, "even-degree heart must have dimension n−2");
    Ok(HeartModule { group: group.clone(), rep, parity: Parity::Even, sum_zero, qmap: Some(qmap) })
}

/// Whether the group acts faithfully on its heart, by enumerating all
/// elements (refusing when the group order exceeds `order_bound`) and
/// checking that only the identity acts as the identity matrix.
pub fn heart_faithful(h: &HeartModule, order_bound: u64) -> Result<bool, HeartError> {
    let elements = h.group().enumerate_elements(order_bound)?;
    for s in &elements {
        if !s.is_identity() && h.heart_matrix(s)?.is_identity() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// For a transitive group of odd degree: checks the equivalence "the heart
/// has scalar endomorphism ring exactly when the group is doubly
/// transitive". Returns whether the two sides agree (they always should;
/// this is a property-test hook, not a decision procedure).
pub fn remark_odd_check(group: &PermGroup) -> Result<bool, HeartError> {
    let n = group.degree();
    if n.is_multiple_of(2) {
        return Err(HeartError::EvenDegree { degree: n });
    }
    if !group.is_transitive() {
        return Err(HeartError::NotTransitive);
    }
    let h = heart(group)?;
    let end = endomorphism_algebra(h.rep());
    let two_transitive = group.is_two_transitive()?;
    Ok((end.dim() == 1) == two_transitive)
}

/// Consistency check between a heart diagnosis and the group's action: a
/// very simple heart forces degree ≥ 5 together with double transitivity,
/// either on all points or — for even degree with exactly one fixed point —
/// on the non-fixed points. Non-very-simple diagnoses pass vacuously.
/// Returns whether the implication holds (it always should).
pub fn theorem_simple_check(group: &PermGroup, diagnosis: &Diagnosis) -> Result<bool, HeartError> {
    if !diagnosis.is_very_simple() {
        return Ok(true);
    }
    let n = group.degree();
    if n < 5 {
        return Ok(false);
    }
    if group.is_two_transitive()? {
        return Ok(true);
    }
    if n.is_multiple_of(2) {
        let fixed = group.fixed_points();
        if fixed.len() == 1 {
            let rest: Vec<usize> = (0..n).filter(|&p| p != fixed[0]).collect();
            let moved = restrict_to_points(group, &rest)?;
            return Ok(moved.is_two_transitive()?);
        }
    }
    Ok(false)
}

/// The action of the group on an invariant set of points, relabeled to
/// `0..points.len()` in the given order. Fails when the set is not
/// invariant under every generator.
fn restrict_to_points(group: &PermGroup, points: &[usize]) -> Result<PermGroup, HeartError> {
    let mut index = vec![usize::MAX; group.degree()];
    for (new, &old) in points.iter().enumerate() {
        if old >= group.degree() || index[old] != usize::MAX {
            return Err(HeartError::BadSubset("points out of range or repeated".into()));
        }
        index[old] = new;
    }
    let mut gens = Vec::with_capacity(group.generators().len());
    for g in group.generators() {
        let mut images = Vec::with_capacity(points.len());
        for &old in points {
            let img = index[g.apply(old)];
            if img == usize::MAX {
                return Err(HeartError::BadSubset(
                    "point set is not invariant under the generators".into(),
                ));
            }
            images.push(img);
        }
        gens.push(Permutation::from_images(images)?);
    }
    Ok(PermGroup::new(points.len(), gens)?)
}

/// The linear map GF(2)^{B₁} → GF(2)^B sending `h` to the vector that
/// agrees with `h` on `B₁` and is the constant `Σ_{b∈B₁} h(b)` on the
/// complement `B₂`, as an `|B₁| × |B|` matrix acting on row vectors
/// (`v ↦ v·K`). Row `i` is `e_{b1[i]} + 1_{B₂}`. Every image vector is
/// sum-zero exactly when `|B₂|` is odd. `b1` must be a nonempty proper
/// subset, in range and without repeats.
pub fn kappa_embed(degree: usize, b1: &[usize]) -> Result<Matrix, HeartError> {
    if b1.is_empty() || b1.len() >= degree {
        return Err(HeartError::BadSubset("B₁ must be a nonempty proper subset".into()));
    }
    let mut in_b1 = vec![false; degree];
    for &p in b1 {
        if p >= degree {
            return Err(HeartError::BadSubset(format!("point {p} out of range for degree {degree}")));
        }
        if in_b1[p] {
            return Err(HeartError::BadSubset(format!("point {p} repeated")));
        }
        in_b1[p] = true;
    }
    let f2 = Field::gf(2).expect("GF(2) is a valid field");
    Ok(Matrix::from_fn(&f2, b1.len(), degree, |i, j| {
        if j == b1[i] || !in_b1[j] {
            1
        } else {
            0
        }
    }))
}
