//! Subspaces of row-vector space, kept in canonical reduced row-echelon form,
//! and coordinate maps onto quotients by a subspace.

use super::matrix::Matrix;
use super::LinalgError;
use crate::field::Field;

/// A subspace of `GF(q)^ambient`, stored as its unique reduced row-echelon
/// basis. Equal subspaces therefore compare equal structurally.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    /// `dim × ambient`, full row rank, reduced row echelon.
    basis: Matrix,
    pivots: Vec<usize>,
}

impl std::fmt::Debug for Subspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subspace(dim {} of GF({})^{})", self.dim(), self.field.q(), self.ambient)
    }
}

impl Subspace {
    /// Span of the given row vectors (each of length `ambient`).
    pub fn from_rows(field: &Field, ambient: usize, rows: &[Vec<u8>]) -> Subspace {
        let m = Matrix::from_fn(field, rows.len(), ambient, |i, j| rows[i][j]);
        Subspace::from_span(&m)
    }

    /// Span of the rows of `m`.
    pub fn from_span(m: &Matrix) -> Subspace {
        let r = m.rref();
        let basis = Matrix::from_fn(m.field(), r.rank, m.cols(), |i, j| r.matrix.get(i, j));
        Subspace { field: m.field().clone(), ambient: m.cols(), basis, pivots: r.pivots }
    }

    pub fn zero(field: &Field, ambient: usize) -> Subspace {
        Subspace {
            field: field.clone(),
            ambient,
            basis: Matrix::zeros(field, 0, ambient),
            pivots: vec![],
        }
    }

    pub fn full(field: &Field, ambient: usize) -> Subspace {
        Subspace::from_span(&Matrix::identity(field, ambient))
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// The canonical reduced row-echelon basis, one row per dimension.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_rows(&self) -> Vec<Vec<u8>> {
        self.basis.to_nested()
    }

    /// Residue of `v` after reduction against the basis; zero iff contained.
    pub fn reduce(&self, v: &[u8]) -> Vec<u8> {
        assert_eq!(v.len(), self.ambient);
        let mut w = v.to_vec();
        for (r, &p) in self.pivots.iter().enumerate() {
            let c = w[p];
            if c != 0 {
                for (wj, bj) in w.iter_mut().zip(self.basis.row(r)) {
                    *wj = self.field.sub_code(*wj, self.field.mul_code(c, bj));
                }
            }
        }
        w
    }

    pub fn contains_vec(&self, v: &[u8]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        other.basis_rows().iter().all(|r| self.contains_vec(r))
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the subspace.
    pub fn coords_of(&self, v: &[u8]) -> Result<Vec<u8>, LinalgError> {
        assert_eq!(v.len(), self.ambient);
        let mut w = v.to_vec();
        let mut coords = vec![0u8; self.dim()];
        for (r, &p) in self.pivots.iter().enumerate() {
            let c = w[p];
            coords[r] = c;
            if c != 0 {
                for (wj, bj) in w.iter_mut().zip(self.basis.row(r)) {
                    *wj = self.field.sub_code(*wj, self.field.mul_code(c, bj));
                }
            }
        }
        if w.iter().any(|&x| x != 0) {
            return Err(LinalgError::NotInSubspace);
        }
        Ok(coords)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_compatible(other)?;
        let mut rows = self.basis_rows();
        rows.extend(other.basis_rows());
        Ok(Subspace::from_rows(&self.field, self.ambient, &rows))
    }

    /// Intersection by the Zassenhaus block trick: reduce
    /// `[[U U],[W 0]]`; rows with zero left half carry the intersection in
    /// their right half.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_compatible(other)?;
        let n = self.ambient;
        let du = self.dim();
        let dw = other.dim();
        let mut block = Matrix::zeros(&self.field, du + dw, 2 * n);
        for i in 0..du {
            for j in 0..n {
                let v = self.basis.get(i, j);
                if v != 0 {
                    block.set(i, j, v);
                    block.set(i, n + j, v);
                }
            }
        }
        for i in 0..dw {
            for j in 0..n {
                let v = other.basis.get(i, j);
                if v != 0 {
                    block.set(du + i, j, v);
                }
            }
        }
        let r = block.rref();
        let mut rows = Vec::new();
        for i in 0..r.rank {
            if (0..n).all(|j| r.matrix.get(i, j) == 0) {
                rows.push((0..n).map(|j| r.matrix.get(i, n + j)).collect::<Vec<u8>>());
            }
        }
        Ok(Subspace::from_rows(&self.field, n, &rows))
    }

    /// Matrix of the operator `a` restricted to this invariant subspace,
    /// in the echelon basis. Fails when the subspace is not invariant.
    pub fn restrict_operator(&self, a: &Matrix) -> Result<Matrix, LinalgError> {
        if a.cols() != self.ambient || a.rows() != self.ambient {
            return Err(LinalgError::DimMismatch("operator vs ambient".into()));
        }
        let k = self.dim();
        let mut out = Matrix::zeros(&self.field, k, k);
        for i in 0..k {
            let image = a.act(&self.basis.row(i));
            let coords = self.coords_of(&image).map_err(|_| LinalgError::NotInvariant)?;
            for (r, &c) in coords.iter().enumerate() {
                if c != 0 {
                    out.set(r, i, c);
                }
            }
        }
        Ok(out)
    }

    /// Image of this subspace under the operator `a` (column-action).
    pub fn apply_operator(&self, a: &Matrix) -> Subspace {
        let rows: Vec<Vec<u8>> = (0..self.dim()).map(|i| a.act(&self.basis.row(i))).collect();
        Subspace::from_rows(&self.field, a.rows(), &rows)
    }

    /// Orthogonal complement `{v : b·vᵀ = 0 for all basis rows b}`.
    pub fn perp(&self) -> Subspace {
        self.basis.nullspace()
    }

    /// Deterministic sort key (dimension, then basis bytes).
    pub fn sort_key(&self) -> Vec<u8> {
        self.basis.sort_key()
    }

    fn check_compatible(&self, other: &Subspace) -> Result<(), LinalgError> {
        if self.field != other.field {
            return Err(LinalgError::FieldMismatch);
        }
        if self.ambient != other.ambient {
            return Err(LinalgError::AmbientMismatch);
        }
        Ok(())
    }
}

/// A growing echelon basis: rows are pivot-normalized on insertion but not
/// fully reduced upward, making repeated inserts cheap. Used by spinning
/// and Krylov loops; convert with [`Echelon::to_subspace`] for a canonical
/// basis.
pub struct Echelon {
    field: Field,
    ambient: usize,
    rows: Vec<Vec<u8>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(field: &Field, ambient: usize) -> Echelon {
        Echelon { field: field.clone(), ambient, rows: vec![], pivots: vec![] }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn row(&self, i: usize) -> &[u8] {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn pivot_columns(&self) -> &[usize] {
        &self.pivots
    }

    /// Residue of `v` after reduction against the stored rows.
    pub fn reduce(&self, v: &[u8]) -> Vec<u8> {
        assert_eq!(v.len(), self.ambient);
        let mut w = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = w[p];
            if c != 0 {
                for j in 0..self.ambient {
                    let t = self.field.mul_code(c, row[j]);
                    w[j] = self.field.sub_code(w[j], t);
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[u8]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Reduces `v` and stores the residue if nonzero; reports whether the
    /// dimension grew.
    pub fn insert(&mut self, v: &[u8]) -> bool {
        let red = self.reduce(v);
        match red.iter().position(|&x| x != 0) {
            None => false,
            Some(pivot) => {
                let inv = self.field.inv_code(red[pivot]).expect("nonzero pivot");
                let norm = red.iter().map(|&x| self.field.mul_code(x, inv)).collect();
                self.insert_prereduced(norm, pivot);
                true
            }
        }
    }

    /// Stores an already-reduced row with pivot coefficient 1 at `pivot`.
    pub fn insert_prereduced(&mut self, row: Vec<u8>, pivot: usize) {
        debug_assert_eq!(row[pivot], 1);
        self.rows.push(row);
        self.pivots.push(pivot);
    }

    /// Canonicalizes into a [`Subspace`].
    pub fn to_subspace(&self) -> Subspace {
        Subspace::from_rows(&self.field, self.ambient, &self.rows)
    }
}

/// Coordinates on the quotient `V / W` relative to a preferred complement
/// basis. The complement is chosen greedily from the candidate rows, in
/// order, keeping those independent modulo `W`; construction fails unless
/// the candidates together with `W` span the ambient space.
#[derive(Clone)]
pub struct QuotientMap {
    field: Field,
    ambient: usize,
    sub: Subspace,
    /// `k × ambient`: the chosen complement representatives.
    complement: Matrix,
    /// Inverse of the square matrix `[complement; sub_basis]`.
    inv: Matrix,
}

impl QuotientMap {
    pub fn new(sub: &Subspace, candidates: &[Vec<u8>]) -> Result<QuotientMap, LinalgError> {
        let field = sub.field().clone();
        let n = sub.ambient();
        let k = n - sub.dim();
        let mut chosen: Vec<Vec<u8>> = Vec::with_capacity(k);
        let mut span = sub.clone();
        for cand in candidates {
            if chosen.len() == k {
                break;
            }
            if cand.len() != n {
                return Err(LinalgError::DimMismatch("candidate length".into()));
            }
            if !span.contains_vec(cand) {
                chosen.push(cand.clone());
                span = span.sum(&Subspace::from_rows(&field, n, std::slice::from_ref(cand)))?;
            }
        }
        if chosen.len() != k {
            return Err(LinalgError::BadComplement);
        }
        let mut square = Matrix::zeros(&field, n, n);
        for (i, row) in chosen.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                if v != 0 {
                    square.set(i, j, v);
                }
            }
        }
        for i in 0..sub.dim() {
            for j in 0..n {
                let v = sub.basis().get(i, j);
                if v != 0 {
                    square.set(k + i, j, v);
                }
            }
        }
        let inv = square.inverse().map_err(|_| LinalgError::BadComplement)?;
        let complement = Matrix::from_fn(&field, k, n, |i, j| chosen[i][j]);
        Ok(QuotientMap { field, ambient: n, sub: sub.clone(), complement, inv })
    }

    /// Dimension of the quotient.
    pub fn dim(&self) -> usize {
        self.complement.rows()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn subspace(&self) -> &Subspace {
        &self.sub
    }

    /// Quotient coordinates of an ambient vector.
    pub fn coords(&self, v: &[u8]) -> Vec<u8> {
        assert_eq!(v.len(), self.ambient);
        // Solve x · [complement; sub] = v; the first k entries of x are the
        // quotient coordinates.
        let x = self.inv.row_times(v);
        x[..self.dim()].to_vec()
    }

    /// The chosen representative of a coordinate vector.
    pub fn lift(&self, coords: &[u8]) -> Vec<u8> {
        assert_eq!(coords.len(), self.dim());
        self.complement.row_times(coords)
    }

    /// Matrix of the operator induced on the quotient by `a`; requires the
    /// subspace to be invariant under `a`.
    pub fn push_operator(&self, a: &Matrix) -> Result<Matrix, LinalgError> {
        for i in 0..self.sub.dim() {
            let image = a.act(&self.sub.basis().row(i));
            if !self.sub.contains_vec(&image) {
                return Err(LinalgError::NotInvariant);
            }
        }
        let k = self.dim();
        let mut out = Matrix::zeros(&self.field, k, k);
        for i in 0..k {
            let image = a.act(&self.complement.row(i));
            let coords = self.coords(&image);
            for (r, &c) in coords.iter().enumerate() {
                if c != 0 {
                    out.set(r, i, c);
                }
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn gf(q: u32) -> Field {
        Field::gf(q).unwrap()
    }

    #[test]
    fn canonical_basis_is_representation_independent() {
        let f = gf(2);
        let a = Subspace::from_rows(&f, 3, &[vec![1, 1, 0], vec![0, 1, 1]]);
        let b = Subspace::from_rows(&f, 3, &[vec![1, 0, 1], vec![1, 1, 0], vec![0, 1, 1]]);
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
    }

    #[test]
    fn dimension_formula_seed_11() {
        // dim(U+W) + dim(U∩W) = dim U + dim W, ambient dimension 6.
        let mut rng = StdRng::seed_from_u64(11);
        for q in [2u32, 3, 4] {
            let f = gf(q);
            for _ in 0..25 {
                let du = rng.gen_range(0..=4);
                let dw = rng.gen_range(0..=4);
                let mk = |rng: &mut StdRng, d: usize| {
                    let rows: Vec<Vec<u8>> =
                        (0..d).map(|_| (0..6).map(|_| rng.gen_range(0..q) as u8).collect()).collect();
                    Subspace::from_rows(&f, 6, &rows)
                };
                let u = mk(&mut rng, du);
                let w = mk(&mut rng, dw);
                let s = u.sum(&w).unwrap();
                let i = u.intersect(&w).unwrap();
                assert_eq!(s.dim() + i.dim(), u.dim() + w.dim(), "GF({q})");
                assert!(u.contains(&i) && w.contains(&i));
                assert!(s.contains(&u) && s.contains(&w));
            }
        }
    }

    #[test]
    fn containment_and_coords() {
        let f = gf(3);
        let u = Subspace::from_rows(&f, 4, &[vec![1, 0, 2, 0], vec![0, 1, 1, 0]]);
        let v = vec![2, 1, 2, 0]; // 2·row0 + 1·row1
        assert!(u.contains_vec(&v));
        assert_eq!(u.coords_of(&v).unwrap(), vec![2, 1]);
        assert!(!u.contains_vec(&[0, 0, 0, 1]));
        assert_eq!(u.coords_of(&[0, 0, 0, 1]).unwrap_err(), LinalgError::NotInSubspace);
    }

    #[test]
    fn quotient_map_round_trip() {
        let f = gf(2);
        // W = span{(1,1,1)} inside GF(2)^3, complement e0, e1.
        let w = Subspace::from_rows(&f, 3, &[vec![1, 1, 1]]);
        let qm = QuotientMap::new(&w, &[vec![1, 0, 0], vec![0, 1, 0]]).unwrap();
        assert_eq!(qm.dim(), 2);
        // coords(v + w) = coords(v) for w in W.
        let v = vec![0, 1, 1];
        let shifted = vec![1, 0, 0];
        assert_eq!(qm.coords(&v), qm.coords(&shifted));
        // lift picks a representative with the same coordinates.
        let c = qm.coords(&v);
        assert_eq!(qm.coords(&qm.lift(&c)), c);
    }

    #[test]
    fn quotient_map_rejects_non_spanning_complement() {
        let f = gf(2);
        let w = Subspace::from_rows(&f, 3, &[vec![1, 1, 1]]);
        assert!(matches!(
            QuotientMap::new(&w, &[vec![1, 0, 0]]),
            Err(LinalgError::BadComplement)
        ));
    }

    #[test]
    fn push_operator_commutes_with_projection() {
        let f = gf(2);
        // Cyclic shift on GF(2)^3 fixes the all-ones line.
        let shift = Matrix::from_rows(&f, &[vec![0, 0, 1], vec![1, 0, 0], vec![0, 1, 0]]).unwrap();
        let w = Subspace::from_rows(&f, 3, &[vec![1, 1, 1]]);
        let qm = QuotientMap::new(&w, &[vec![1, 0, 0], vec![0, 1, 0]]).unwrap();
        let q = qm.push_operator(&shift).unwrap();
        for v in [[1u8, 0, 0], [0, 1, 0], [1, 1, 0], [1, 0, 1]] {
            let lhs = q.act(&qm.coords(&v));
            let rhs = qm.coords(&shift.act(&v));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn restrict_operator_and_invariance() {
        let f = gf(2);
        let shift = Matrix::from_rows(&f, &[vec![0, 0, 1], vec![1, 0, 0], vec![0, 1, 0]]).unwrap();
        let line = Subspace::from_rows(&f, 3, &[vec![1, 1, 1]]);
        let r = line.restrict_operator(&shift).unwrap();
        assert!(r.is_identity());
        let not_inv = Subspace::from_rows(&f, 3, &[vec![1, 0, 0]]);
        assert_eq!(not_inv.restrict_operator(&shift).unwrap_err(), LinalgError::NotInvariant);
    }

    #[test]
    fn perp_dimensions() {
        let f = gf(2);
        let u = Subspace::from_rows(&f, 4, &[vec![1, 1, 0, 0], vec![0, 0, 1, 1]]);
        let p = u.perp();
        assert_eq!(p.dim(), 2);
        for b in p.basis_rows() {
            for r in u.basis_rows() {
                let dot: u8 = r.iter().zip(&b).fold(0, |acc, (&x, &y)| acc ^ (x & y));
                assert_eq!(dot, 0);
            }
        }
    }
}
