//! Permutation groups given by generators: orbits, transitivity and double
//! transitivity, stabilizer chains (deterministic Schreier–Sims with the
//! fixed base 0, 1, 2, …), exact orders, membership, element enumeration,
//! and generator-word search.
//!
//! The group file format `{"degree": n, "generators": [[images…], …]}` with
//! 0-indexed image lists is normative for the command-line tools.

use num_bigint::BigUint;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::{HashMap, VecDeque};
use thiserror::Error;

/// Maximum permutation degree accepted by stabilizer-chain routines.
pub const MAX_CHAIN_DEGREE: usize = 64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PermError {
    #[error("images are not a bijection on 0..{0}")]
    NotABijection(usize),
    #[error("permutations have mismatched degrees {0} and {1}")]
    DegreeMismatch(usize, usize),
    #[error("a permutation group needs at least one generator")]
    EmptyGenerators,
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("operation needs degree at least {needed}, got {got}")]
    DegreeTooSmall { needed: usize, got: usize },
    #[error("degree {0} exceeds the stabilizer-chain bound {MAX_CHAIN_DEGREE}")]
    DegreeExceedsBound(usize),
    #[error("group order {order} exceeds the requested bound {bound}")]
    OrderExceedsBound { order: BigUint, bound: u64 },
    #[error("cycle entry {point} out of range or repeated (degree {degree})")]
    BadCycle { point: usize, degree: usize },
}

/// A permutation of `{0, …, n−1}`, stored as its image list.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl std::fmt::Debug for Permutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        // Cycle notation, fixed points suppressed (identity prints as `()`).
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut wrote = false;
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                continue;
            }
            write!(f, "(")?;
            let mut p = start;
            let mut first = true;
            while !seen[p] {
                seen[p] = true;
                if !first {
                    write!(f, " ")?;
                }
                first = false;
                write!(f, "{p}")?;
                p = self.images[p];
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

impl Permutation {
    pub fn identity(degree: usize) -> Permutation {
        Permutation { images: (0..degree).collect() }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Permutation, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &img in &images {
            if img >= n || seen[img] {
                return Err(PermError::NotABijection(n));
            }
            seen[img] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds from disjoint cycles: `(p₀ p₁ … p_k)` maps `p₀ ↦ p₁ ↦ … ↦ p₀`.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Permutation, PermError> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (i, &p) in cycle.iter().enumerate() {
                if p >= degree || touched[p] {
                    return Err(PermError::BadCycle { point: p, degree });
                }
                touched[p] = true;
                images[p] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Composition applying `other` first: `(self ∘ other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "composing mismatched degrees");
        Permutation { images: other.images.iter().map(|&p| self.images[p]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0usize; self.images.len()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img] = i;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| i == img)
    }

    pub fn fixes(&self, point: usize) -> bool {
        self.images[point] == point
    }

    /// Sign of the permutation: `true` for even.
    pub fn is_even(&self) -> bool {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut transpositions = 0usize;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0usize;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                len += 1;
                p = self.images[p];
            }
            transpositions += len - 1;
        }
        transpositions.is_multiple_of(2)
    }
}

/// A subgroup of the symmetric group on `{0, …, degree−1}`, given by a
/// nonempty generator list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
}

#[derive(Serialize, Deserialize)]
struct PermGroupDto {
    degree: usize,
    generators: Vec<Vec<usize>>,
}

impl Serialize for PermGroup {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PermGroupDto {
            degree: self.degree,
            generators: self.generators.iter().map(|g| g.images.clone()).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for PermGroup {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<PermGroup, D::Error> {
        let dto = PermGroupDto::deserialize(d)?;
        let gens = dto
            .generators
            .into_iter()
            .map(Permutation::from_images)
            .collect::<Result<Vec<_>, _>>()
            .map_err(D::Error::custom)?;
        PermGroup::new(dto.degree, gens).map_err(D::Error::custom)
    }
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<PermGroup, PermError> {
        if generators.is_empty() {
            return Err(PermError::EmptyGenerators);
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(PermError::DegreeMismatch(degree, g.degree()));
            }
        }
        Ok(PermGroup { degree, generators })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// The orbit of a point, as a sorted list.
    pub fn orbit(&self, point: usize) -> Result<Vec<usize>, PermError> {
        if point >= self.degree {
            return Err(PermError::PointOutOfRange { point, degree: self.degree });
        }
        let mut seen = vec![false; self.degree];
        seen[point] = true;
        let mut queue = VecDeque::from([point]);
        while let Some(p) = queue.pop_front() {
            for g in &self.generators {
                let q = g.apply(p);
                if !seen[q] {
                    seen[q] = true;
                    queue.push_back(q);
                }
            }
        }
        Ok((0..self.degree).filter(|&p| seen[p]).collect())
    }

    /// All orbits, each sorted, ordered by their smallest point. They
    /// partition `{0, …, degree−1}`.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut assigned = vec![false; self.degree];
        let mut out = Vec::new();
        for p in 0..self.degree {
            if assigned[p] {
                continue;
            }
            let orb = self.orbit(p).expect("point in range");
            for &q in &orb {
                assigned[q] = true;
            }
            out.push(orb);
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.degree <= 1 || self.orbit(0).expect("in range").len() == self.degree
    }

    /// True iff the orbit of the ordered pair `(0, 1)` under the
    /// componentwise action covers all `n(n−1)` ordered pairs.
    pub fn is_two_transitive(&self) -> Result<bool, PermError> {
        let n = self.degree;
        if n < 2 {
            return Err(PermError::DegreeTooSmall { needed: 2, got: n });
        }
        let idx = |a: usize, b: usize| a * n + b;
        let mut seen = vec![false; n * n];
        seen[idx(0, 1)] = true;
        let mut count = 1usize;
        let mut queue = VecDeque::from([(0usize, 1usize)]);
        while let Some((a, b)) = queue.pop_front() {
            for g in &self.generators {
                let (c, d) = (g.apply(a), g.apply(b));
                if !seen[idx(c, d)] {
                    seen[idx(c, d)] = true;
                    count += 1;
                    queue.push_back((c, d));
                }
            }
        }
        Ok(count == n * (n - 1))
    }

    /// Points fixed by every generator.
    pub fn fixed_points(&self) -> Vec<usize> {
        (0..self.degree).filter(|&p| self.generators.iter().all(|g| g.fixes(p))).collect()
    }

    /// Deterministic Schreier–Sims stabilizer chain along the fixed base
    /// 0, 1, 2, …, degree−1. Requires degree ≤ [`MAX_CHAIN_DEGREE`].
    pub fn schreier_sims(&self) -> Result<StabChain, PermError> {
        StabChain::build(self)
    }

    /// Exact group order.
    pub fn order(&self) -> Result<BigUint, PermError> {
        Ok(self.schreier_sims()?.order())
    }

    /// All group elements in deterministic breadth-first order starting at
    /// the identity; errors when the order exceeds `bound`.
    pub fn enumerate_elements(&self, bound: u64) -> Result<Vec<Permutation>, PermError> {
        let order = self.order()?;
        if order > BigUint::from(bound) {
            return Err(PermError::OrderExceedsBound { order, bound });
        }
        let mut seen: HashMap<Vec<usize>, ()> = HashMap::new();
        let id = Permutation::identity(self.degree);
        seen.insert(id.images.clone(), ());
        let mut out = vec![id.clone()];
        let mut queue = VecDeque::from([id]);
        while let Some(p) = queue.pop_front() {
            for g in &self.generators {
                let q = p.compose(g);
                if !seen.contains_key(&q.images) {
                    seen.insert(q.images.clone(), ());
                    out.push(q.clone());
                    queue.push_back(q);
                }
            }
        }
        Ok(out)
    }

    /// A word `[i₀, i₁, …]` of generator indices whose product
    /// `g_{i₀} ∘ g_{i₁} ∘ …` (rightmost applied first) equals `target`, or
    /// `None` when the target is not in the group. Breadth-first, so the
    /// word is shortest and deterministic. Errors when the group order
    /// exceeds `bound`.
    pub fn word_for(
        &self,
        target: &Permutation,
        bound: u64,
    ) -> Result<Option<Vec<usize>>, PermError> {
        if target.degree() != self.degree {
            return Err(PermError::DegreeMismatch(self.degree, target.degree()));
        }
        let order = self.order()?;
        if order > BigUint::from(bound) {
            return Err(PermError::OrderExceedsBound { order, bound });
        }
        let id = Permutation::identity(self.degree);
        let mut words: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
        words.insert(id.images.clone(), vec![]);
        if target.is_identity() {
            return Ok(Some(vec![]));
        }
        let mut queue = VecDeque::from([id]);
        while let Some(p) = queue.pop_front() {
            let base_word = words[&p.images].clone();
            for (i, g) in self.generators.iter().enumerate() {
                let q = p.compose(g);
                if !words.contains_key(&q.images) {
                    let mut w = base_word.clone();
                    w.push(i);
                    if q == *target {
                        return Ok(Some(w));
                    }
                    words.insert(q.images.clone(), w);
                    queue.push_back(q);
                }
            }
        }
        Ok(None)
    }

    /// Evaluates a generator word back to a permutation (rightmost letter
    /// applied first; the empty word is the identity).
    pub fn evaluate_word(&self, word: &[usize]) -> Permutation {
        let mut acc = Permutation::identity(self.degree);
        for &i in word {
            acc = acc.compose(&self.generators[i]);
        }
        acc
    }
}

/// A stabilizer chain along the fixed base 0, 1, …, degree−1: level `i`
/// holds generators fixing all points < `i`, the orbit of `i` under them,
/// and a transversal of coset representatives.
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

struct Level {
    point: usize,
    gens: Vec<Permutation>,
    /// `transversal[p]` maps `point` to `p` (present for orbit points).
    transversal: Vec<Option<Permutation>>,
    orbit: Vec<usize>,
}

impl Level {
    fn new(point: usize, degree: usize) -> Level {
        let mut transversal = vec![None; degree];
        transversal[point] = Some(Permutation::identity(degree));
        Level { point, gens: vec![], transversal, orbit: vec![point] }
    }

    /// Recomputes orbit and transversal by breadth-first search.
    fn recompute(&mut self, degree: usize) {
        let mut transversal: Vec<Option<Permutation>> = vec![None; degree];
        transversal[self.point] = Some(Permutation::identity(degree));
        let mut orbit = vec![self.point];
        let mut head = 0usize;
        while head < orbit.len() {
            let p = orbit[head];
            head += 1;
            let rep = transversal[p].clone().expect("orbit point has a representative");
            for g in &self.gens {
                let q = g.apply(p);
                if transversal[q].is_none() {
                    transversal[q] = Some(g.compose(&rep));
                    orbit.push(q);
                }
            }
        }
        self.transversal = transversal;
        self.orbit = orbit;
    }
}

impl StabChain {
    fn build(group: &PermGroup) -> Result<StabChain, PermError> {
        let degree = group.degree();
        if degree > MAX_CHAIN_DEGREE {
            return Err(PermError::DegreeExceedsBound(degree));
        }
        let mut chain = StabChain {
            degree,
            levels: (0..degree).map(|p| Level::new(p, degree)).collect(),
        };
        for g in group.generators() {
            chain.add_generator(0, g.clone());
        }
        Ok(chain)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.point).collect()
    }

    /// Orbit sizes along the base; their product is the group order.
    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> BigUint {
        let mut acc = BigUint::from(1u32);
        for l in &self.levels {
            acc *= BigUint::from(l.orbit.len());
        }
        acc
    }

    /// Membership by sifting: the permutation lies in the group iff its
    /// residue after dividing out transversal representatives is trivial.
    pub fn contains(&self, p: &Permutation) -> bool {
        p.degree() == self.degree && self.sift(p.clone()).is_none()
    }

    /// Sifts `p`; returns `None` on success (member) or the level at which
    /// the base-point image left the orbit.
    fn sift(&self, mut p: Permutation) -> Option<usize> {
        for (i, level) in self.levels.iter().enumerate() {
            let image = p.apply(level.point);
            match &level.transversal[image] {
                None => return Some(i),
                Some(rep) => {
                    p = rep.inverse().compose(&p);
                }
            }
        }
        // A residue fixing every base point 0..degree−1 is the identity.
        debug_assert!(p.is_identity());
        None
    }

    /// Adds a generator known to fix all base points below `level`, then
    /// restores the Schreier condition by sifting every Schreier generator
    /// of the updated level.
    fn add_generator(&mut self, level: usize, g: Permutation) {
        if g.is_identity() {
            return;
        }
        debug_assert!((0..level).all(|p| g.fixes(p)));
        self.levels[level].gens.push(g);
        self.levels[level].recompute(self.degree);
        // Process Schreier generators u_q⁻¹ ∘ s ∘ u_p for orbit points p and
        // level generators s; each fixes the base point of this level.
        let orbit = self.levels[level].orbit.clone();
        let gens = self.levels[level].gens.clone();
        for &p in &orbit {
            let rep_p = self.levels[level].transversal[p].clone().expect("orbit point");
            for s in &gens {
                let q = s.apply(p);
                let rep_q = self.levels[level].transversal[q].clone().expect("orbit point");
                let schreier = rep_q.inverse().compose(s).compose(&rep_p);
                if schreier.is_identity() {
                    continue;
                }
                if let Some(fail_level) = self.sift_from(level + 1, schreier.clone()) {
                    let residue = self.residue_at(level + 1, fail_level, schreier);
                    self.add_generator(fail_level, residue);
                }
            }
        }
    }

    /// Sifts starting at `start`; returns the failing level if any.
    fn sift_from(&self, start: usize, mut p: Permutation) -> Option<usize> {
        for (i, level) in self.levels.iter().enumerate().skip(start) {
            let image = p.apply(level.point);
            match &level.transversal[image] {
                None => return Some(i),
                Some(rep) => p = rep.inverse().compose(&p),
            }
        }
        None
    }

    /// The partial sift residue of `p` from `start` up to (excluding) `stop`.
    fn residue_at(&self, start: usize, stop: usize, mut p: Permutation) -> Permutation {
        for level in &self.levels[start..stop] {
            let image = p.apply(level.point);
            let rep = level.transversal[image].as_ref().expect("sift reached this level");
            p = rep.inverse().compose(&p);
        }
        p
    }
}
