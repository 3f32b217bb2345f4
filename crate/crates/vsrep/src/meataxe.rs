//! Module-theoretic analysis over an explicit acting set of matrices:
//! spinning, irreducibility with verifiable certificates (Norton's
//! criterion), endomorphism algebras with finite-field identification,
//! composition factors, complete minimal-submodule enumeration, and
//! isotypic decomposition over a subalgebra.
//!
//! Everything is deterministic: random draws use an explicit seed through a
//! fixed counter-based ChaCha stream, and searches escalate to exhaustive
//! deterministic enumeration.

use crate::field::Field;
use crate::linalg::{minpoly_of_matrix, Echelon, LinalgError, Matrix, Poly, QuotientMap, Subspace};
use crate::rep::{RepError, Representation};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Default cap on minimal submodules enumerated per homogeneous type.
pub const MINIMAL_CAP_DEFAULT: u64 = 4096;

/// Hard bound on raw coefficient-vector enumeration inside the socle search.
const ENUM_CAP: u128 = 1 << 22;

/// Seeded attempts before the irreducibility search turns deterministic.
const NORTON_RANDOM_ATTEMPTS: u64 = 64;

/// Longest generator word tried in the deterministic escalation phase.
const NORTON_WORD_LENGTH: usize = 8;

/// Candidate cap for the deterministic word phase.
const NORTON_WORD_BUDGET: usize = 5000;

#[derive(Debug, Error)]
pub enum MeataxeError {
    #[error(
        "a simple type of dimension {simple_dim} has {count} minimal submodules, over the cap {cap}"
    )]
    MinimalCountExceedsCap { simple_dim: usize, count: u128, cap: u64 },
    #[error("matrix list does not span a unital, multiplicatively closed algebra")]
    AlgebraNotClosed,
    #[error("module is not semisimple over the given algebra")]
    NotSemisimple,
    #[error("acting matrices must be square of the module dimension, over the module field")]
    BadActingSet,
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Rep(#[from] RepError),
}

/// A proper nonzero invariant subspace, re-verified before being handed out.
#[derive(Clone, Debug)]
pub struct SubmoduleWitness {
    pub subspace: Subspace,
}

impl SubmoduleWitness {
    /// Direct invariance check, independent of how the witness was found.
    pub fn verify(&self, acting: &[Matrix]) -> bool {
        is_invariant(acting, &self.subspace)
            && self.subspace.dim() > 0
            && self.subspace.dim() < self.subspace.ambient()
    }
}

/// An algebra element recorded as a sum of coefficient-weighted generator
/// words, so certificates can be re-evaluated from scratch.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraElementRecord {
    pub terms: Vec<WordTerm>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordTerm {
    pub coeff: u8,
    pub word: Vec<usize>,
}

impl AlgebraElementRecord {
    /// Re-evaluates the recorded element over an acting set (the empty word
    /// is the identity).
    pub fn evaluate(&self, field: &Field, dim: usize, acting: &[Matrix]) -> Matrix {
        let mut acc = Matrix::zeros(field, dim, dim);
        for term in &self.terms {
            let mut prod = Matrix::identity(field, dim);
            for &i in &term.word {
                prod = prod.mul(&acting[i]).expect("acting matrices share shape");
            }
            acc = acc.add(&prod.scale(term.coeff)).expect("same shape");
        }
        acc
    }
}

/// Everything needed to re-check an irreducibility verdict: the algebra
/// element, the irreducible factor of its minimal polynomial whose nullity
/// equals its degree, and the seed that led there.
#[derive(Clone, Debug)]
pub struct NortonCertificate {
    pub seed: u64,
    pub element: AlgebraElementRecord,
    pub factor: Poly,
    pub nullity: usize,
}

#[derive(Debug)]
pub enum IrreducibilityResult {
    Irreducible(NortonCertificate),
    Reducible(SubmoduleWitness),
}

impl IrreducibilityResult {
    pub fn is_irreducible(&self) -> bool {
        matches!(self, IrreducibilityResult::Irreducible(_))
    }
}

/// Smallest subspace containing the seeds and invariant under every acting
/// matrix (breadth-first closure).
pub fn spin(field: &Field, ambient: usize, acting: &[Matrix], seeds: &[Vec<u8>]) -> Subspace {
    let mut ech = Echelon::new(field, ambient);
    let mut queue: Vec<Vec<u8>> = Vec::new();
    for s in seeds {
        if ech.insert(s) {
            queue.push(s.clone());
        }
    }
    let mut head = 0usize;
    while head < queue.len() {
        let v = queue[head].clone();
        head += 1;
        for a in acting {
            let img = a.act(&v);
            if ech.insert(&img) {
                queue.push(img);
            }
        }
    }
    ech.to_subspace()
}

/// True when the subspace is carried into itself by every acting matrix.
pub fn is_invariant(acting: &[Matrix], sub: &Subspace) -> bool {
    sub.basis_rows().iter().all(|v| acting.iter().all(|a| sub.contains_vec(&a.act(v))))
}

/// Irreducibility of the module of a representation under its generators.
pub fn norton_irreducible(rep: &Representation, seed: u64) -> IrreducibilityResult {
    norton_irreducible_acting(rep.field(), rep.dim(), rep.generators(), seed)
}

/// Norton's criterion over an arbitrary acting set.
///
/// For an algebra element θ and an irreducible factor f of its minimal
/// polynomial: any vector of null f(θ) spinning to a proper subspace is a
/// reducibility witness, as is the perp of a proper transpose-spin of a
/// vector of null f(θᵀ). When nullity f(θ) = deg f, null f(θ) is a simple
/// module for the subalgebra generated by θ, so all its nonzero vectors
/// have equal spins; if one spins to the whole space and one dual vector
/// does too, every proper submodule U would need null f(θ) ∩ U ≠ 0 or
/// null f(θᵀ) ∩ U⊥ ≠ 0 (f divides the minimal polynomial on U or on the
/// dual of M/U), which both checks exclude — hence irreducible.
pub fn norton_irreducible_acting(
    field: &Field,
    dim: usize,
    acting: &[Matrix],
    seed: u64,
) -> IrreducibilityResult {
    assert!(dim >= 1, "irreducibility of a zero module is not defined");
    // Scalar algebras see every coordinate line as a submodule.
    if acting.iter().all(|a| a.as_scalar().is_some()) {
        if dim == 1 {
            let cert = scalar_certificate(field, dim, acting, seed);
            return IrreducibilityResult::Irreducible(cert);
        }
        let mut line = vec![0u8; dim];
        line[0] = 1;
        let witness =
            SubmoduleWitness { subspace: Subspace::from_rows(field, dim, &[line]) };
        assert!(witness.verify(acting));
        return IrreducibilityResult::Reducible(witness);
    }

    let mut transposed: Option<Vec<Matrix>> = None;
    let try_theta = |record: &AlgebraElementRecord,
                         theta: &Matrix,
                         transposed: &mut Option<Vec<Matrix>>|
     -> Option<IrreducibilityResult> {
        if dim > 1 && theta.as_scalar().is_some() {
            return None;
        }
        let mp = minpoly_of_matrix(theta);
        for f in mp.distinct_irreducible_factors() {
            let null = f.eval_matrix(theta).nullspace();
            debug_assert!(null.dim() >= 1, "factors of the minimal polynomial have null vectors");
            for v in null.basis_rows() {
                let w = spin(field, dim, acting, &[v]);
                if w.dim() < dim {
                    let witness = SubmoduleWitness { subspace: w };
                    assert!(witness.verify(acting), "reducibility witness re-verification");
                    return Some(IrreducibilityResult::Reducible(witness));
                }
            }
            if null.dim() == f.deg() {
                let tr = transposed
                    .get_or_insert_with(|| acting.iter().map(|a| a.transpose()).collect());
                let dual_null = f.eval_matrix(&theta.transpose()).nullspace();
                let w = spin(field, dim, tr, &[dual_null.basis_rows()[0].clone()]);
                if w.dim() < dim {
                    // A transpose-invariant subspace has an invariant perp.
                    let witness = SubmoduleWitness { subspace: w.perp() };
                    assert!(witness.verify(acting), "dual witness re-verification");
                    return Some(IrreducibilityResult::Reducible(witness));
                }
                return Some(IrreducibilityResult::Irreducible(NortonCertificate {
                    seed,
                    element: record.clone(),
                    factor: f,
                    nullity: null.dim(),
                }));
            }
        }
        None
    };

    // Phase 1: seeded random sums of short words.
    for attempt in 0..NORTON_RANDOM_ATTEMPTS {
        let record = random_element_record(field, acting.len(), seed, attempt);
        let theta = record.evaluate(field, dim, acting);
        if let Some(res) = try_theta(&record, &theta, &mut transposed) {
            return res;
        }
    }
    // Phase 2: deterministic single words, shortest first, lexicographic.
    let mut budget = NORTON_WORD_BUDGET;
    for len in 1..=NORTON_WORD_LENGTH {
        let mut word = vec![0usize; len];
        'words: loop {
            if budget == 0 {
                break;
            }
            budget -= 1;
            let record =
                AlgebraElementRecord { terms: vec![WordTerm { coeff: 1, word: word.clone() }] };
            let theta = record.evaluate(field, dim, acting);
            if let Some(res) = try_theta(&record, &theta, &mut transposed) {
                return res;
            }
            // Advance the word odometer.
            for pos in (0..len).rev() {
                word[pos] += 1;
                if word[pos] < acting.len() {
                    continue 'words;
                }
                word[pos] = 0;
            }
            break;
        }
        if budget == 0 {
            break;
        }
    }
    // Phase 3: a spanning set of the generated algebra, then pairwise sums.
    let basis = word_algebra_basis(field, dim, acting);
    for (m, w) in &basis {
        let record = AlgebraElementRecord { terms: vec![WordTerm { coeff: 1, word: w.clone() }] };
        if let Some(res) = try_theta(&record, m, &mut transposed) {
            return res;
        }
    }
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let record = AlgebraElementRecord {
                terms: vec![
                    WordTerm { coeff: 1, word: basis[i].1.clone() },
                    WordTerm { coeff: 1, word: basis[j].1.clone() },
                ],
            };
            let theta = basis[i].0.add(&basis[j].0).expect("same shape");
            if let Some(res) = try_theta(&record, &theta, &mut transposed) {
                return res;
            }
        }
    }
    unreachable!(
        "irreducibility search exhausted random draws, {NORTON_WORD_BUDGET} deterministic words, \
         and the full algebra basis without finding a factor of full nullity"
    )
}

/// Certificate for a scalar-acting one-dimensional module (minimal honest
/// certificate: θ = identity-word sum with its linear minimal polynomial).
fn scalar_certificate(
    field: &Field,
    dim: usize,
    acting: &[Matrix],
    seed: u64,
) -> NortonCertificate {
    let record = AlgebraElementRecord { terms: vec![WordTerm { coeff: 1, word: vec![] }] };
    let theta = record.evaluate(field, dim, acting);
    let mp = minpoly_of_matrix(&theta);
    let factor = mp.distinct_irreducible_factors().remove(0);
    NortonCertificate { seed, element: record, factor, nullity: 1 }
}

/// Seeded draw: 1–3 terms, each a word of length ≤ 4 with a nonzero
/// coefficient, from a counter-based ChaCha stream.
fn random_element_record(
    field: &Field,
    gen_count: usize,
    seed: u64,
    attempt: u64,
) -> AlgebraElementRecord {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ attempt.wrapping_mul(0x9E37_79B9_7F4A_7C15));
    let terms = (0..rng.gen_range(1..=3))
        .map(|_| {
            let len = rng.gen_range(0..=4);
            let word = (0..len).map(|_| rng.gen_range(0..gen_count)).collect();
            let coeff = rng.gen_range(1..field.q()) as u8;
            WordTerm { coeff, word }
        })
        .collect();
    AlgebraElementRecord { terms }
}

/// Spanning set of the unital algebra generated by the acting matrices,
/// each element tagged with a producing word. Breadth-first from the
/// identity, keeping only span-growing products; the span of all word
/// products is closed under right multiplication by generators, so the
/// discarded dependent words contribute nothing new.
pub fn word_algebra_basis(
    field: &Field,
    dim: usize,
    acting: &[Matrix],
) -> Vec<(Matrix, Vec<usize>)> {
    let mut ech = Echelon::new(field, dim * dim);
    let mut out: Vec<(Matrix, Vec<usize>)> = Vec::new();
    let id = Matrix::identity(field, dim);
    ech.insert(&id.flatten());
    out.push((id, vec![]));
    let mut head = 0usize;
    while head < out.len() {
        let (m, w) = out[head].clone();
        head += 1;
        for (i, a) in acting.iter().enumerate() {
            let prod = m.mul(a).expect("same shape");
            if ech.insert(&prod.flatten()) {
                let mut word = w.clone();
                word.push(i);
                out.push((prod, word));
            }
        }
    }
    out
}

/// Span-closure of the unital algebra generated by the seeds, as matrices.
pub fn algebra_span(field: &Field, dim: usize, seeds: &[Matrix]) -> Vec<Matrix> {
    word_algebra_basis(field, dim, seeds).into_iter().map(|(m, _)| m).collect()
}

/// Checks that the given matrices span a unital, multiplicatively closed
/// subspace of End(V) (the span, not the list, is what is checked).
pub fn is_algebra_closed(field: &Field, dim: usize, basis: &[Matrix]) -> bool {
    let mut ech = Echelon::new(field, dim * dim);
    for b in basis {
        ech.insert(&b.flatten());
    }
    if !ech.contains(&Matrix::identity(field, dim).flatten()) {
        return false;
    }
    for a in basis {
        for b in basis {
            let prod = a.mul(b).expect("same shape");
            if !ech.contains(&prod.flatten()) {
                return false;
            }
        }
    }
    true
}

/// The commutant of a representation, with an optional identification of
/// the endomorphism ring as a finite field.
#[derive(Clone, Debug)]
pub struct EndAlgebra {
    pub basis: Vec<Matrix>,
    pub ext: Option<EndFieldInfo>,
}

/// Proof that the endomorphism algebra is the field GF(q^degree): a basis
/// element combination whose minimal polynomial is irreducible of degree
/// equal to the algebra dimension, forcing End = k[generator].
#[derive(Clone, Debug)]
pub struct EndFieldInfo {
    pub degree: usize,
    pub generator: Matrix,
    pub min_poly: Poly,
}

impl EndAlgebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Basis of `{X : ρ(g)·X = X·ρ(g) for all generators}` via one nullspace
/// computation on the stacked systems `(ρ(g) ⊗ I − I ⊗ ρ(g)ᵀ)·vec(X) = 0`
/// (row-major vec). Also attempts to identify the algebra as a field.
pub fn endomorphism_algebra(rep: &Representation) -> EndAlgebra {
    let field = rep.field();
    let n = rep.dim();
    let basis = commutant(field, n, rep.generators());
    for x in &basis {
        for g in rep.generators() {
            debug_assert_eq!(
                g.mul(x).expect("same shape"),
                x.mul(g).expect("same shape"),
                "commutant element must commute"
            );
        }
    }
    let ext = identify_field_in_span(field, n, &basis);
    EndAlgebra { basis, ext }
}

/// Basis of the joint commutant of an arbitrary matrix list.
pub fn commutant(field: &Field, n: usize, acting: &[Matrix]) -> Vec<Matrix> {
    if acting.is_empty() {
        return (0..n * n)
            .map(|k| Matrix::from_fn(field, n, n, |i, j| u8::from(i * n + j == k)))
            .collect();
    }
    let id = Matrix::identity(field, n);
    let blocks: Vec<Matrix> = acting
        .iter()
        .map(|g| {
            let left = g.kron(&id).expect("same field");
            let right = id.kron(&g.transpose()).expect("same field");
            left.sub(&right).expect("same shape")
        })
        .collect();
    let stacked = vstack(field, &blocks);
    let null = stacked.nullspace();
    null.basis_rows()
        .into_iter()
        .map(|r| Matrix::from_flat(field, n, n, &r).expect("codes in range"))
        .collect()
}

/// Vertical stack of equally wide matrices.
fn vstack(field: &Field, blocks: &[Matrix]) -> Matrix {
    let cols = blocks[0].cols();
    let rows: usize = blocks.iter().map(|b| b.rows()).sum();
    let mut flat = Vec::with_capacity(rows * cols);
    for b in blocks {
        flat.extend(b.flatten());
    }
    Matrix::from_flat(field, rows, cols, &flat).expect("codes in range")
}

/// Searches the span of the basis for an element whose minimal polynomial
/// is irreducible of degree = dim(span); any hit proves the span is the
/// field GF(q^dim) (the element generates, and the span is closed).
pub fn identify_field_in_span(field: &Field, n: usize, basis: &[Matrix]) -> Option<EndFieldInfo> {
    let e = basis.len();
    if e == 0 {
        return None;
    }
    let mut candidates: Vec<Matrix> = basis.to_vec();
    for i in 0..e {
        for j in i + 1..e {
            candidates.push(basis[i].add(&basis[j]).expect("same shape"));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for _ in 0..32 {
        let mut acc = Matrix::zeros(field, n, n);
        for b in basis {
            let c = rng.gen_range(0..field.q()) as u8;
            if c != 0 {
                acc = acc.add(&b.scale(c)).expect("same shape");
            }
        }
        candidates.push(acc);
    }
    for c in candidates {
        let mp = minpoly_of_matrix(&c);
        if mp.deg() == e && mp.is_irreducible() {
            return Some(EndFieldInfo { degree: e, generator: c, min_poly: mp });
        }
    }
    None
}

/// True iff the module is irreducible with endomorphism ring equal to the
/// scalars — over a finite field this is absolute irreducibility.
pub fn is_absolutely_irreducible(rep: &Representation) -> bool {
    norton_irreducible(rep, 0).is_irreducible() && endomorphism_algebra(rep).dim() == 1
}

/// An abstract module: a dimension and matrices acting on `k^dim`, indexed
/// like the acting set it was derived from.
#[derive(Clone, Debug)]
pub struct ActedModule {
    pub dim: usize,
    pub acting: Vec<Matrix>,
}

/// Composition factors (as abstract acted modules, multiplicities kept) by
/// recursive chopping: find a proper submodule, restrict and quotient,
/// recurse. Factor order is deterministic: submodule factors first.
pub fn composition_factors(
    field: &Field,
    dim: usize,
    acting: &[Matrix],
    seed: u64,
) -> Vec<ActedModule> {
    match norton_irreducible_acting(field, dim, acting, seed) {
        IrreducibilityResult::Irreducible(_) => {
            vec![ActedModule { dim, acting: acting.to_vec() }]
        }
        IrreducibilityResult::Reducible(w) => {
            let sub = &w.subspace;
            let restricted: Vec<Matrix> = acting
                .iter()
                .map(|a| sub.restrict_operator(a).expect("witness is invariant"))
                .collect();
            let std_basis: Vec<Vec<u8>> = (0..dim)
                .map(|i| {
                    let mut v = vec![0u8; dim];
                    v[i] = 1;
                    v
                })
                .collect();
            let qmap = QuotientMap::new(sub, &std_basis).expect("standard basis spans");
            let pushed: Vec<Matrix> = acting
                .iter()
                .map(|a| qmap.push_operator(a).expect("witness is invariant"))
                .collect();
            let mut out = composition_factors(field, sub.dim(), &restricted, seed);
            out.extend(composition_factors(field, qmap.dim(), &pushed, seed));
            out
        }
    }
}

/// Basis of `Hom(S, M)` for modules over the same indexed acting set:
/// matrices `F` (dim_M × dim_S, column action `v ↦ F·vᵀ`) with
/// `F·ρ_S(a) = ρ_M(a)·F` for every index, via the stacked nullspace of
/// `ρ_M(a) ⊗ I − I ⊗ ρ_S(a)ᵀ`.
pub fn hom_space(
    field: &Field,
    m_dim: usize,
    m_acting: &[Matrix],
    s_dim: usize,
    s_acting: &[Matrix],
) -> Vec<Matrix> {
    assert_eq!(m_acting.len(), s_acting.len(), "acting sets must be index-aligned");
    if m_acting.is_empty() {
        return (0..m_dim * s_dim)
            .map(|k| Matrix::from_fn(field, m_dim, s_dim, |i, j| u8::from(i * s_dim + j == k)))
            .collect();
    }
    let im = Matrix::identity(field, m_dim);
    let is = Matrix::identity(field, s_dim);
    let blocks: Vec<Matrix> = m_acting
        .iter()
        .zip(s_acting)
        .map(|(gm, gs)| {
            let left = gm.kron(&is).expect("same field");
            let right = im.kron(&gs.transpose()).expect("same field");
            left.sub(&right).expect("same shape")
        })
        .collect();
    let null = vstack(field, &blocks).nullspace();
    null.basis_rows()
        .into_iter()
        .map(|r| Matrix::from_flat(field, m_dim, s_dim, &r).expect("codes in range"))
        .collect()
}

/// The distinct simple types among composition factors (nonzero Hom between
/// simples means isomorphic).
fn distinct_simple_types(field: &Field, factors: Vec<ActedModule>) -> Vec<ActedModule> {
    let mut types: Vec<ActedModule> = Vec::new();
    for f in factors {
        let known = types.iter().any(|t| {
            t.dim == f.dim && !hom_space(field, f.dim, &f.acting, t.dim, &t.acting).is_empty()
        });
        if !known {
            types.push(f);
        }
    }
    types
}

/// Complete list of minimal submodules of the module of `rep`, sorted by
/// canonical basis; fails when any homogeneous type holds more than `cap`.
pub fn socle_minimal_submodules(
    rep: &Representation,
    cap: u64,
) -> Result<Vec<Subspace>, MeataxeError> {
    socle_minimal_submodules_acting(rep.field(), rep.dim(), rep.generators(), cap, 0)
}

/// Minimal submodules over an arbitrary acting set. For each simple type S,
/// the images of the nonzero elements of Hom(S, M) are exactly the minimal
/// submodules of type S, and two homomorphisms share an image iff they
/// differ by an automorphism of S; hence the per-type count is
/// `(q^h − 1)/(q^e − 1)` with h = dim Hom(S, M) and e = dim End(S).
pub fn socle_minimal_submodules_acting(
    field: &Field,
    dim: usize,
    acting: &[Matrix],
    cap: u64,
    seed: u64,
) -> Result<Vec<Subspace>, MeataxeError> {
    let factors = composition_factors(field, dim, acting, seed);
    let types = distinct_simple_types(field, factors);
    let q = field.q() as u128;
    let mut out: Vec<Subspace> = Vec::new();
    for s in &types {
        let homs = hom_space(field, dim, acting, s.dim, &s.acting);
        let h = homs.len();
        if h == 0 {
            continue;
        }
        let e = hom_space(field, s.dim, &s.acting, s.dim, &s.acting).len();
        debug_assert!(e >= 1 && h.is_multiple_of(e));
        let count = match (checked_pow(q, h), checked_pow(q, e)) {
            (Some(qh), Some(qe)) => (qh - 1) / (qe - 1),
            _ => u128::MAX,
        };
        if count > cap as u128 {
            return Err(MeataxeError::MinimalCountExceedsCap { simple_dim: s.dim, count, cap });
        }
        let candidates = match checked_pow(q, h) {
            Some(qh) => (qh - 1) / (q - 1),
            None => u128::MAX,
        };
        if candidates > ENUM_CAP {
            return Err(MeataxeError::MinimalCountExceedsCap { simple_dim: s.dim, count, cap });
        }
        let mut seen = std::collections::BTreeSet::new();
        let mut found: Vec<Subspace> = Vec::new();
        for coeffs in projective_coefficients(field, h) {
            let mut f = Matrix::zeros(field, dim, s.dim);
            for (c, basis_hom) in coeffs.iter().zip(&homs) {
                if *c != 0 {
                    f = f.add(&basis_hom.scale(*c)).expect("same shape");
                }
            }
            let image = Subspace::from_span(&f.transpose());
            debug_assert_eq!(image.dim(), s.dim, "nonzero homs from a simple are injective");
            if seen.insert(image.sort_key()) {
                found.push(image);
            }
        }
        assert_eq!(found.len() as u128, count, "image count must match the orbit formula");
        out.extend(found);
    }
    out.sort_by_key(|s| s.sort_key());
    for m in &out {
        debug_assert!(is_invariant(acting, m));
    }
    Ok(out)
}

fn checked_pow(base: u128, exp: usize) -> Option<u128> {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base)?;
    }
    Some(acc)
}

/// Nonzero coefficient vectors of length `h` with leading nonzero entry 1
/// (one representative per scalar line), in lexicographic order.
fn projective_coefficients(field: &Field, h: usize) -> Vec<Vec<u8>> {
    let q = field.q() as usize;
    let mut out = Vec::new();
    // Leading-one position `lead`: zeros before, 1 at lead, free after.
    for lead in 0..h {
        let free = h - lead - 1;
        let total = q.pow(free as u32);
        for mut idx in 0..total {
            let mut v = vec![0u8; h];
            v[lead] = 1;
            for slot in 0..free {
                v[lead + 1 + slot] = (idx % q) as u8;
                idx /= q;
            }
            out.push(v);
        }
    }
    out
}

/// A homogeneous component of a module over a subalgebra.
#[derive(Clone, Debug)]
pub struct IsotypicComponent {
    pub component: Subspace,
    pub simple_dim: usize,
    pub multiplicity: usize,
}

/// Decomposes the module of `rep` into homogeneous components as a module
/// over the algebra spanned by `alg` (which must be unital and closed).
/// Each component is the sum of all simple submodules of one isomorphism
/// type — canonical regardless of basis choices.
pub fn isotypic_components(
    rep: &Representation,
    alg: &[Matrix],
) -> Result<Vec<IsotypicComponent>, MeataxeError> {
    isotypic_components_acting(rep.field(), rep.dim(), alg)
}

pub fn isotypic_components_acting(
    field: &Field,
    dim: usize,
    alg: &[Matrix],
) -> Result<Vec<IsotypicComponent>, MeataxeError> {
    for a in alg {
        if a.rows() != dim || a.cols() != dim || a.field() != field {
            return Err(MeataxeError::BadActingSet);
        }
    }
    if !is_algebra_closed(field, dim, alg) {
        return Err(MeataxeError::AlgebraNotClosed);
    }
    let factors = composition_factors(field, dim, alg, 0);
    let types = distinct_simple_types(field, factors);
    let mut comps: Vec<IsotypicComponent> = Vec::new();
    let mut total = 0usize;
    let mut union_rows: Vec<Vec<u8>> = Vec::new();
    for s in &types {
        let homs = hom_space(field, dim, alg, s.dim, &s.acting);
        if homs.is_empty() {
            continue;
        }
        // The component is the joint image of a Hom-space basis: every
        // simple submodule of type S is the image of some hom, and each
        // such image lies inside the span of the basis images.
        let mut rows: Vec<Vec<u8>> = Vec::new();
        for f in &homs {
            rows.extend(f.transpose().to_nested());
        }
        let component = Subspace::from_rows(field, dim, &rows);
        if !component.dim().is_multiple_of(s.dim) {
            return Err(MeataxeError::NotSemisimple);
        }
        total += component.dim();
        union_rows.extend(component.basis_rows());
        comps.push(IsotypicComponent {
            multiplicity: component.dim() / s.dim,
            simple_dim: s.dim,
            component,
        });
    }
    let union = Subspace::from_rows(field, dim, &union_rows);
    if total != dim || union.dim() != dim {
        return Err(MeataxeError::NotSemisimple);
    }
    comps.sort_by_key(|c| (c.simple_dim, c.component.sort_key()));
    Ok(comps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{PermGroup, Permutation};
    use crate::rep::{perm_to_rep, sum_zero_submodule, sum_zero_subspace};

    fn gf(q: u32) -> Field {
        Field::gf(q).unwrap()
    }

    fn cyclic_group(n: usize) -> PermGroup {
        let cycle: Vec<usize> = (1..n).chain([0]).collect();
        PermGroup::new(n, vec![Permutation::from_images(cycle).unwrap()]).unwrap()
    }

    fn sym_group(n: usize) -> PermGroup {
        let cycle: Vec<usize> = (1..n).chain([0]).collect();
        let mut swap: Vec<usize> = (0..n).collect();
        swap.swap(0, 1);
        PermGroup::new(
            n,
            vec![Permutation::from_images(cycle).unwrap(), Permutation::from_images(swap).unwrap()],
        )
        .unwrap()
    }

    fn gl2f2_natural() -> Representation {
        let f = gf(2);
        let s = Matrix::from_rows(&f, &[vec![0, 1], vec![1, 0]]).unwrap();
        let t = Matrix::from_rows(&f, &[vec![1, 1], vec![0, 1]]).unwrap();
        Representation::new(&f, 2, vec![s, t]).unwrap()
    }

    fn heart_odd(group: &PermGroup, q: u32) -> Representation {
        sum_zero_submodule(&perm_to_rep(group, &gf(q))).unwrap()
    }

    /// Block-diagonal direct sum of two representations with aligned
    /// generator lists.
    fn direct_sum(a: &Representation, b: &Representation) -> Representation {
        let f = a.field();
        let n = a.dim() + b.dim();
        let gens: Vec<Matrix> = a
            .generators()
            .iter()
            .zip(b.generators())
            .map(|(x, y)| {
                Matrix::from_fn(f, n, n, |i, j| {
                    if i < a.dim() && j < a.dim() {
                        x.get(i, j)
                    } else if i >= a.dim() && j >= a.dim() {
                        y.get(i - a.dim(), j - a.dim())
                    } else {
                        0
                    }
                })
            })
            .collect();
        Representation::new(f, n, gens).unwrap()
    }

    fn trivial_rep(f: &Field, gens: usize) -> Representation {
        Representation::new(f, 1, vec![Matrix::identity(f, 1); gens]).unwrap()
    }

    #[test]
    fn spin_of_zero_seed_is_zero() {
        let r = gl2f2_natural();
        let z = spin(r.field(), 2, r.generators(), &[vec![0, 0]]);
        assert!(z.is_zero());
        let nothing = spin(r.field(), 2, r.generators(), &[]);
        assert!(nothing.is_zero());
    }

    #[test]
    fn spin_of_point_indicator_in_transitive_permutation_module_is_full() {
        let r = perm_to_rep(&sym_group(5), &gf(2));
        let mut e0 = vec![0u8; 5];
        e0[0] = 1;
        let s = spin(r.field(), 5, r.generators(), &[e0]);
        assert!(s.is_full());
    }

    #[test]
    fn spin_in_cyclic_permutation_module_reaches_exactly_the_sum_zero_space() {
        // Orbit of e₀+e₁ under the 5-cycle: all eᵢ+eᵢ₊₁, which span the
        // 4-dimensional sum-zero hyperplane and nothing more.
        let r = perm_to_rep(&cyclic_group(5), &gf(2));
        let s = spin(r.field(), 5, r.generators(), &[vec![1, 1, 0, 0, 0]]);
        assert_eq!(s.dim(), 4);
        assert_eq!(s, sum_zero_subspace(&gf(2), 5));
    }

    #[test]
    fn one_dimensional_modules_are_irreducible() {
        let f = gf(3);
        let r = Representation::new(&f, 1, vec![Matrix::from_rows(&f, &[vec![2]]).unwrap()])
            .unwrap();
        assert!(norton_irreducible(&r, 0).is_irreducible());
    }

    #[test]
    fn permutation_module_of_s5_is_reducible_with_a_known_witness() {
        let f = gf(2);
        let r = perm_to_rep(&sym_group(5), &f);
        match norton_irreducible(&r, 0) {
            IrreducibilityResult::Reducible(w) => {
                assert!(w.verify(r.generators()));
                // The only proper submodules here are the all-ones line and
                // the sum-zero hyperplane.
                let ones = Subspace::from_rows(&f, 5, &[vec![1; 5]]);
                let sz = sum_zero_subspace(&f, 5);
                assert!(w.subspace == ones || w.subspace == sz);
            }
            IrreducibilityResult::Irreducible(_) => panic!("permutation module is reducible"),
        }
    }

    #[test]
    fn heart_of_s5_is_irreducible_with_a_checkable_certificate() {
        let r = heart_odd(&sym_group(5), 2);
        match norton_irreducible(&r, 0) {
            IrreducibilityResult::Irreducible(cert) => {
                // Re-verify the certificate from its record.
                let theta = cert.element.evaluate(r.field(), r.dim(), r.generators());
                let mp = minpoly_of_matrix(&theta);
                assert!(mp.rem(&cert.factor).is_zero());
                assert!(cert.factor.is_irreducible());
                let null = cert.factor.eval_matrix(&theta).nullspace();
                assert_eq!(null.dim(), cert.factor.deg());
                assert_eq!(null.dim(), cert.nullity);
                for v in null.basis_rows() {
                    assert!(spin(r.field(), r.dim(), r.generators(), &[v]).is_full());
                }
            }
            IrreducibilityResult::Reducible(_) => panic!("heart of S5 is irreducible"),
        }
    }

    #[test]
    fn scalar_acting_sets_split_immediately() {
        let f = gf(2);
        let r = Representation::new(&f, 3, vec![Matrix::identity(&f, 3)]).unwrap();
        match norton_irreducible(&r, 0) {
            IrreducibilityResult::Reducible(w) => assert_eq!(w.subspace.dim(), 1),
            _ => panic!("trivial action on dim 3 is reducible"),
        }
    }

    #[test]
    fn endomorphism_algebra_of_c5_heart_is_gf16() {
        let r = heart_odd(&cyclic_group(5), 2);
        let end = endomorphism_algebra(&r);
        assert_eq!(end.dim(), 4);
        let info = end.ext.expect("irreducible: End is a field");
        assert_eq!(info.degree, 4);
        assert!(info.min_poly.is_irreducible());
        assert_eq!(info.min_poly.deg(), 4);
        // Independent oracle: brute-force count of commuting 4×4 matrices
        // over GF(2) equals |GF(16)| = 16.
        let g = &r.generators()[0];
        let f = r.field();
        let mut count = 0u32;
        for code in 0u32..(1 << 16) {
            let x = Matrix::from_fn(f, 4, 4, |i, j| ((code >> (4 * i + j)) & 1) as u8);
            if x.mul(g).unwrap() == g.mul(&x).unwrap() {
                count += 1;
            }
        }
        assert_eq!(count, 16);
    }

    #[test]
    fn endomorphism_algebra_of_s5_heart_is_scalars() {
        let r = heart_odd(&sym_group(5), 2);
        let end = endomorphism_algebra(&r);
        assert_eq!(end.dim(), 1);
        assert!(end.basis[0].as_scalar().is_some());
    }

    #[test]
    fn endomorphism_algebra_of_d5_heart_is_gf4() {
        // Dihedral group on 5 points: rotation + reflection.
        let rot = Permutation::from_cycles(5, &[vec![0, 1, 2, 3, 4]]).unwrap();
        let refl = Permutation::from_cycles(5, &[vec![1, 4], vec![2, 3]]).unwrap();
        let d5 = PermGroup::new(5, vec![rot, refl]).unwrap();
        let r = heart_odd(&d5, 2);
        let end = endomorphism_algebra(&r);
        assert_eq!(end.dim(), 2);
        assert_eq!(end.ext.expect("field").degree, 2);
        // Independent oracle: brute-force commutant count = |GF(4)| = 4.
        let f = r.field();
        let mut count = 0u32;
        for code in 0u32..(1 << 16) {
            let x = Matrix::from_fn(f, 4, 4, |i, j| ((code >> (4 * i + j)) & 1) as u8);
            if r.generators().iter().all(|g| x.mul(g).unwrap() == g.mul(&x).unwrap()) {
                count += 1;
            }
        }
        assert_eq!(count, 4);
    }

    #[test]
    fn absolute_irreducibility_judgments() {
        assert!(is_absolutely_irreducible(&heart_odd(&sym_group(5), 2)));
        assert!(!is_absolutely_irreducible(&heart_odd(&cyclic_group(5), 2)));
        assert!(is_absolutely_irreducible(&gl2f2_natural()));
    }

    #[test]
    fn socle_of_irreducible_module_is_the_full_space() {
        let r = gl2f2_natural();
        let socle = socle_minimal_submodules(&r, MINIMAL_CAP_DEFAULT).unwrap();
        assert_eq!(socle.len(), 1);
        assert!(socle[0].is_full());
    }

    #[test]
    fn socle_of_sum_of_two_distinct_simples_has_two_minimals() {
        let f = gf(2);
        let s = gl2f2_natural();
        let t = trivial_rep(&f, 2);
        let m = direct_sum(&s, &t);
        let socle = socle_minimal_submodules(&m, MINIMAL_CAP_DEFAULT).unwrap();
        assert_eq!(socle.len(), 2);
        let dims: Vec<usize> = socle.iter().map(|s| s.dim()).collect();
        assert!(dims.contains(&1) && dims.contains(&2));
    }

    #[test]
    fn socle_of_s_plus_s_has_three_minimals_matching_exhaustive_search() {
        let s = gl2f2_natural();
        let m = direct_sum(&s, &s);
        let socle = socle_minimal_submodules(&m, MINIMAL_CAP_DEFAULT).unwrap();
        assert_eq!(socle.len(), 3);
        // Oracle: enumerate ALL subspaces of GF(2)^4, keep the invariant
        // ones, and take the minimal nonzero elements of that lattice.
        let invariant = exhaustive_invariant_subspaces(&m);
        let minimal: Vec<&Subspace> = invariant
            .iter()
            .filter(|u| {
                u.dim() > 0
                    && !invariant.iter().any(|w| w.dim() > 0 && w.dim() < u.dim() && u.contains(w))
            })
            .collect();
        assert_eq!(minimal.len(), 3);
        for m in &socle {
            assert!(minimal.contains(&m));
        }
    }

    /// All invariant subspaces of a GF(2) module of dimension ≤ 4, by
    /// spanning every subset of the nonzero vectors.
    fn exhaustive_invariant_subspaces(r: &Representation) -> Vec<Subspace> {
        let f = r.field();
        let n = r.dim();
        assert!(f.q() == 2 && n <= 4);
        let vectors: Vec<Vec<u8>> = (1u32..(1 << n))
            .map(|mask| (0..n).map(|i| ((mask >> i) & 1) as u8).collect())
            .collect();
        let mut seen = std::collections::BTreeSet::new();
        let mut out = Vec::new();
        for subset in 0u32..(1 << vectors.len()) {
            let rows: Vec<Vec<u8>> = vectors
                .iter()
                .enumerate()
                .filter(|(i, _)| (subset >> i) & 1 == 1)
                .map(|(_, v)| v.clone())
                .collect();
            let sub = Subspace::from_rows(f, n, &rows);
            if seen.insert(sub.sort_key()) && is_invariant(r.generators(), &sub) {
                out.push(sub);
            }
        }
        out
    }

    #[test]
    fn norton_agrees_with_exhaustive_subspace_enumeration_on_small_modules() {
        // Seeded random acting sets plus the catalog examples, dims 2–4.
        let f = gf(2);
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        let mut cases: Vec<Representation> = vec![
            gl2f2_natural(),
            direct_sum(&gl2f2_natural(), &trivial_rep(&f, 2)),
            perm_to_rep(&cyclic_group(4), &f),
            perm_to_rep(&cyclic_group(3), &f),
        ];
        for n in 2..=4usize {
            let mut found = 0;
            while found < 6 {
                let a = Matrix::random(&f, n, n, &mut rng);
                let b = Matrix::random(&f, n, n, &mut rng);
                if a.inverse().is_ok() && b.inverse().is_ok() {
                    cases.push(Representation::new(&f, n, vec![a, b]).unwrap());
                    found += 1;
                }
            }
        }
        for (idx, r) in cases.iter().enumerate() {
            let invariant = exhaustive_invariant_subspaces(r);
            let has_proper =
                invariant.iter().any(|u| u.dim() > 0 && u.dim() < r.dim());
            match norton_irreducible(r, 0) {
                IrreducibilityResult::Irreducible(_) => {
                    assert!(!has_proper, "case {idx}: oracle found a proper submodule")
                }
                IrreducibilityResult::Reducible(w) => {
                    assert!(has_proper, "case {idx}: oracle says irreducible");
                    assert!(invariant.contains(&w.subspace), "case {idx}: witness not invariant");
                }
            }
            // Minimal submodules agree with the lattice minimals.
            let socle = socle_minimal_submodules(r, MINIMAL_CAP_DEFAULT).unwrap();
            let minimal: Vec<&Subspace> = invariant
                .iter()
                .filter(|u| {
                    u.dim() > 0
                        && !invariant
                            .iter()
                            .any(|w| w.dim() > 0 && w.dim() < u.dim() && u.contains(w))
                })
                .collect();
            assert_eq!(socle.len(), minimal.len(), "case {idx}: minimal counts differ");
            for s in &socle {
                assert!(minimal.contains(&s), "case {idx}: extra minimal");
            }
        }
    }

    #[test]
    fn isotypic_over_scalars_is_one_component_of_lines() {
        let f = gf(2);
        let r = perm_to_rep(&cyclic_group(3), &f);
        let comps = isotypic_components(&r, &[Matrix::identity(&f, 3)]).unwrap();
        assert_eq!(comps.len(), 1);
        assert!(comps[0].component.is_full());
        assert_eq!(comps[0].simple_dim, 1);
        assert_eq!(comps[0].multiplicity, 3);
    }

    #[test]
    fn isotypic_over_full_matrix_algebra_is_one_simple() {
        let f = gf(2);
        let units: Vec<Matrix> = (0..4)
            .map(|k| Matrix::from_fn(&f, 2, 2, |i, j| u8::from(2 * i + j == k)))
            .collect();
        let r = gl2f2_natural();
        let comps = isotypic_components(&r, &units).unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].simple_dim, 2);
        assert_eq!(comps[0].multiplicity, 1);
    }

    #[test]
    fn isotypic_separates_distinct_types_and_merges_repeats() {
        let f = gf(2);
        let s = gl2f2_natural();
        // S ⊕ S over its own group algebra: one component, multiplicity 2.
        let m = direct_sum(&s, &s);
        let alg = algebra_span(&f, 4, m.generators());
        let comps = isotypic_components(&m, &alg).unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!((comps[0].simple_dim, comps[0].multiplicity), (2, 2));
        // S ⊕ trivial: two components.
        let mixed = direct_sum(&s, &trivial_rep(&f, 2));
        let alg = algebra_span(&f, 3, mixed.generators());
        let comps = isotypic_components(&mixed, &alg).unwrap();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].simple_dim, 1);
        assert_eq!(comps[1].simple_dim, 2);
        assert_eq!(comps[0].component.dim() + comps[1].component.dim(), 3);
    }

    #[test]
    fn isotypic_rejects_unclosed_lists() {
        let f = gf(2);
        let r = gl2f2_natural();
        // span{Id, s, t} is 3-dimensional but s·t falls outside it.
        let s = Matrix::from_rows(&f, &[vec![0, 1], vec![1, 0]]).unwrap();
        let t = Matrix::from_rows(&f, &[vec![1, 1], vec![0, 1]]).unwrap();
        let bad = vec![Matrix::identity(&f, 2), s.clone(), t.clone()];
        assert!(!is_algebra_closed(&f, 2, &bad));
        assert!(matches!(
            isotypic_components(&r, &bad),
            Err(MeataxeError::AlgebraNotClosed)
        ));
        // The span-closure of the same generators passes.
        let closed = algebra_span(&f, 2, &[s, t]);
        assert!(is_algebra_closed(&f, 2, &closed));
    }

    #[test]
    fn word_algebra_basis_of_gl2f2_is_the_full_matrix_algebra() {
        let r = gl2f2_natural();
        let basis = word_algebra_basis(r.field(), 2, r.generators());
        assert_eq!(basis.len(), 4);
        for (m, w) in &basis {
            assert_eq!(&r.evaluate_word(w).unwrap(), m);
        }
    }

    #[test]
    fn commutant_of_empty_acting_set_is_everything() {
        let f = gf(3);
        assert_eq!(commutant(&f, 2, &[]).len(), 4);
    }

    #[test]
    fn composition_factors_count_multiplicity() {
        let f = gf(2);
        let s = gl2f2_natural();
        let m = direct_sum(&direct_sum(&s, &s), &trivial_rep(&f, 2));
        let factors = composition_factors(&f, 5, m.generators(), 0);
        let mut dims: Vec<usize> = factors.iter().map(|x| x.dim).collect();
        dims.sort();
        assert_eq!(dims, vec![1, 2, 2]);
    }

    #[test]
    fn hom_space_dimension_between_isomorphic_simples_is_end_dimension() {
        let f = gf(2);
        let s = gl2f2_natural();
        let h = hom_space(&f, 2, s.generators(), 2, s.generators());
        assert_eq!(h.len(), 1);
        let c5 = heart_odd(&cyclic_group(5), 2);
        let h = hom_space(&f, 4, c5.generators(), 4, c5.generators());
        assert_eq!(h.len(), 4);
    }
}
