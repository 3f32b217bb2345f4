//! The dense matrix type with its two storage backends.

use std::fmt;

use rand::Rng;

use super::subspace::Subspace;
use super::LinalgError;
use crate::field::Field;

/// Bit-packed rows for GF(2): one `u64` word per 64 columns, row-major.
/// Unused high bits of the last word of each row are kept at zero.
#[derive(Clone, PartialEq, Eq)]
struct BitStore {
    wpr: usize,
    words: Vec<u64>,
}

#[derive(Clone, PartialEq, Eq)]
enum Store {
    Bit(BitStore),
    Gen(Vec<u8>),
}

/// A dense `rows × cols` matrix over a [`Field`].
#[derive(Clone)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    store: Store,
}

impl PartialEq for Matrix {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.rows == other.rows
            && self.cols == other.cols
            && self.store == other.store
    }
}
impl Eq for Matrix {}

/// Result of reduced row-echelon elimination.
pub struct Rref {
    pub matrix: Matrix,
    pub rank: usize,
    /// Pivot column of each of the first `rank` rows, strictly increasing.
    pub pivots: Vec<usize>,
}

/// Row reduction of `m` carried out on `[m | I]`: `transform · m = matrix`.
pub struct RrefAug {
    pub matrix: Matrix,
    pub transform: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Matrix {
        let store = if field.q() == 2 {
            let wpr = cols.div_ceil(64);
            Store::Bit(BitStore { wpr, words: vec![0; rows * wpr] })
        } else {
            Store::Gen(vec![0; rows * cols])
        };
        Matrix { field: field.clone(), rows, cols, store }
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Build from a closure giving the code at each position.
    pub fn from_fn(field: &Field, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> u8) -> Matrix {
        let mut m = Matrix::zeros(field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    /// Build from nested rows of codes; all rows must have equal length and
    /// every code must be a valid element of the field.
    pub fn from_rows(field: &Field, data: &[Vec<u8>]) -> Result<Matrix, LinalgError> {
        let rows = data.len();
        let cols = data.first().map_or(0, |r| r.len());
        for r in data {
            if r.len() != cols {
                return Err(LinalgError::DimMismatch("ragged rows".into()));
            }
            for &c in r {
                if (c as u32) >= field.q() {
                    return Err(LinalgError::DimMismatch(format!(
                        "code {c} out of range for GF({})",
                        field.q()
                    )));
                }
            }
        }
        Ok(Matrix::from_fn(field, rows, cols, |i, j| data[i][j]))
    }

    /// Row-major flattening of a code list into a matrix.
    pub fn from_flat(field: &Field, rows: usize, cols: usize, codes: &[u8]) -> Result<Matrix, LinalgError> {
        if codes.len() != rows * cols {
            return Err(LinalgError::DimMismatch(format!(
                "expected {} codes, got {}",
                rows * cols,
                codes.len()
            )));
        }
        Ok(Matrix::from_fn(field, rows, cols, |i, j| codes[i * cols + j]))
    }

    /// Uniformly random matrix (used by the randomized decision mode).
    pub fn random(field: &Field, rows: usize, cols: usize, rng: &mut impl Rng) -> Matrix {
        let q = field.q();
        Matrix::from_fn(field, rows, cols, |_, _| rng.gen_range(0..q) as u8)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u8 {
        debug_assert!(i < self.rows && j < self.cols);
        match &self.store {
            Store::Bit(b) => ((b.words[i * b.wpr + j / 64] >> (j % 64)) & 1) as u8,
            Store::Gen(v) => v[i * self.cols + j],
        }
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, code: u8) {
        debug_assert!(i < self.rows && j < self.cols);
        debug_assert!((code as u32) < self.field.q());
        match &mut self.store {
            Store::Bit(b) => {
                let w = &mut b.words[i * b.wpr + j / 64];
                let mask = 1u64 << (j % 64);
                if code & 1 == 1 {
                    *w |= mask;
                } else {
                    *w &= !mask;
                }
            }
            Store::Gen(v) => v[i * self.cols + j] = code,
        }
    }

    /// Codes of row `i`.
    pub fn row(&self, i: usize) -> Vec<u8> {
        (0..self.cols).map(|j| self.get(i, j)).collect()
    }

    /// Row-major code list of the whole matrix — also the `vec(·)` flattening
    /// used by the adjoint (conjugation) module.
    pub fn flatten(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(self.rows * self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.push(self.get(i, j));
            }
        }
        out
    }

    /// Nested code lists, for serialization.
    pub fn to_nested(&self) -> Vec<Vec<u8>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    fn check_same_shape(&self, rhs: &Matrix) -> Result<(), LinalgError> {
        if self.field != rhs.field {
            return Err(LinalgError::FieldMismatch);
        }
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(LinalgError::DimMismatch(format!(
                "{}×{} vs {}×{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(())
    }

    pub fn add(&self, rhs: &Matrix) -> Result<Matrix, LinalgError> {
        self.check_same_shape(rhs)?;
        let mut out = self.clone();
        match (&mut out.store, &rhs.store) {
            (Store::Bit(a), Store::Bit(b)) => {
                for (x, y) in a.words.iter_mut().zip(&b.words) {
                    *x ^= y;
                }
            }
            (Store::Gen(a), Store::Gen(b)) => {
                for (x, &y) in a.iter_mut().zip(b) {
                    *x = self.field.add_code(*x, y);
                }
            }
            _ => unreachable!("same field implies same storage"),
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &Matrix) -> Result<Matrix, LinalgError> {
        self.check_same_shape(rhs)?;
        let mut out = self.clone();
        match (&mut out.store, &rhs.store) {
            (Store::Bit(a), Store::Bit(b)) => {
                for (x, y) in a.words.iter_mut().zip(&b.words) {
                    *x ^= y;
                }
            }
            (Store::Gen(a), Store::Gen(b)) => {
                for (x, &y) in a.iter_mut().zip(b) {
                    *x = self.field.sub_code(*x, y);
                }
            }
            _ => unreachable!("same field implies same storage"),
        }
        Ok(out)
    }

    pub fn scale(&self, code: u8) -> Matrix {
        let mut out = self.clone();
        match &mut out.store {
            Store::Bit(b) => {
                if code & 1 == 0 {
                    b.words.iter_mut().for_each(|w| *w = 0);
                }
            }
            Store::Gen(v) => {
                for x in v.iter_mut() {
                    *x = self.field.mul_code(*x, code);
                }
            }
        }
        out
    }

    pub fn neg(&self) -> Matrix {
        let mut out = self.clone();
        if let Store::Gen(v) = &mut out.store {
            for x in v.iter_mut() {
                *x = self.field.neg_code(*x);
            }
        }
        out
    }

    /// Matrix product `self · rhs`.
    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix, LinalgError> {
        if self.field != rhs.field {
            return Err(LinalgError::FieldMismatch);
        }
        if self.cols != rhs.rows {
            return Err(LinalgError::DimMismatch(format!(
                "{}×{} · {}×{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Matrix::zeros(&self.field, self.rows, rhs.cols);
        match (&self.store, &rhs.store, &mut out.store) {
            (Store::Bit(a), Store::Bit(b), Store::Bit(o)) => {
                for i in 0..self.rows {
                    let arow = &a.words[i * a.wpr..(i + 1) * a.wpr];
                    let orow = i * o.wpr;
                    for (jw, &aw) in arow.iter().enumerate() {
                        let mut w = aw;
                        while w != 0 {
                            let j = jw * 64 + w.trailing_zeros() as usize;
                            w &= w - 1;
                            let brow = j * b.wpr;
                            for k in 0..b.wpr {
                                o.words[orow + k] ^= b.words[brow + k];
                            }
                        }
                    }
                }
            }
            (_, _, _) => {
                for i in 0..self.rows {
                    for k in 0..self.cols {
                        let aik = self.get(i, k);
                        if aik == 0 {
                            continue;
                        }
                        for j in 0..rhs.cols {
                            let prod = self.field.mul_code(aik, rhs.get(k, j));
                            let cur = out.get(i, j);
                            out.set(i, j, self.field.add_code(cur, prod));
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// Image of the row vector `v` under this operator: `(self · vᵀ)ᵀ`.
    pub fn act(&self, v: &[u8]) -> Vec<u8> {
        assert_eq!(v.len(), self.cols, "operator applied to vector of wrong length");
        match &self.store {
            Store::Bit(b) => {
                let mut packed = vec![0u64; b.wpr];
                for (j, &x) in v.iter().enumerate() {
                    if x & 1 == 1 {
                        packed[j / 64] |= 1 << (j % 64);
                    }
                }
                (0..self.rows)
                    .map(|i| {
                        let row = &b.words[i * b.wpr..(i + 1) * b.wpr];
                        let mut acc = 0u64;
                        for (a, b) in row.iter().zip(&packed) {
                            acc ^= a & b;
                        }
                        (acc.count_ones() & 1) as u8
                    })
                    .collect()
            }
            Store::Gen(_) => (0..self.rows)
                .map(|i| {
                    let mut acc = 0u8;
                    for (j, &x) in v.iter().enumerate() {
                        acc = self.field.add_code(acc, self.field.mul_code(self.get(i, j), x));
                    }
                    acc
                })
                .collect(),
        }
    }

    /// Row-vector times matrix: `v · self`.
    pub fn row_times(&self, v: &[u8]) -> Vec<u8> {
        assert_eq!(v.len(), self.rows, "row vector of wrong length");
        let mut out = vec![0u8; self.cols];
        for (i, &x) in v.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                *o = self.field.add_code(*o, self.field.mul_code(x, self.get(i, j)));
            }
        }
        out
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(&self.field, self.cols, self.rows, |i, j| self.get(j, i))
    }

    /// Kronecker product with entries `(a⊗b)[(i₁,i₂),(j₁,j₂)] = a[i₁,j₁]·b[i₂,j₂]`
    /// and index packing `(i₁,i₂) ↦ i₁·rows(b)+i₂`.
    pub fn kron(&self, rhs: &Matrix) -> Result<Matrix, LinalgError> {
        if self.field != rhs.field {
            return Err(LinalgError::FieldMismatch);
        }
        let (br, bc) = (rhs.rows, rhs.cols);
        let mut out = Matrix::zeros(&self.field, self.rows * br, self.cols * bc);
        for i1 in 0..self.rows {
            for j1 in 0..self.cols {
                let a = self.get(i1, j1);
                if a == 0 {
                    continue;
                }
                for i2 in 0..br {
                    for j2 in 0..bc {
                        let v = self.field.mul_code(a, rhs.get(i2, j2));
                        if v != 0 {
                            out.set(i1 * br + i2, j1 * bc + j2, v);
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// Reduced row echelon form. Canonical: any two row-equivalent matrices
    /// produce identical output.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0usize;
        match &mut m.store {
            Store::Bit(b) => {
                let wpr = b.wpr;
                for c in 0..m.cols {
                    let (wi, bit) = (c / 64, 1u64 << (c % 64));
                    let Some(pr) = (r..m.rows).find(|&i| b.words[i * wpr + wi] & bit != 0) else {
                        continue;
                    };
                    if pr != r {
                        for k in 0..wpr {
                            b.words.swap(r * wpr + k, pr * wpr + k);
                        }
                    }
                    for i in 0..m.rows {
                        if i != r && b.words[i * wpr + wi] & bit != 0 {
                            for k in 0..wpr {
                                let w = b.words[r * wpr + k];
                                b.words[i * wpr + k] ^= w;
                            }
                        }
                    }
                    pivots.push(c);
                    r += 1;
                    if r == m.rows {
                        break;
                    }
                }
            }
            Store::Gen(v) => {
                let cols = m.cols;
                for c in 0..cols {
                    let Some(pr) = (r..m.rows).find(|&i| v[i * cols + c] != 0) else {
                        continue;
                    };
                    if pr != r {
                        for k in 0..cols {
                            v.swap(r * cols + k, pr * cols + k);
                        }
                    }
                    let inv = m.field.inv_code(v[r * cols + c]).expect("pivot is nonzero");
                    if inv != 1 {
                        for k in 0..cols {
                            v[r * cols + k] = m.field.mul_code(v[r * cols + k], inv);
                        }
                    }
                    for i in 0..m.rows {
                        let factor = v[i * cols + c];
                        if i != r && factor != 0 {
                            for k in 0..cols {
                                let t = m.field.mul_code(factor, v[r * cols + k]);
                                v[i * cols + k] = m.field.sub_code(v[i * cols + k], t);
                            }
                        }
                    }
                    pivots.push(c);
                    r += 1;
                    if r == m.rows {
                        break;
                    }
                }
            }
        }
        Rref { matrix: m, rank: r, pivots }
    }

    /// Row reduction carried out on the augmented matrix `[self | I]`,
    /// returning the transform with `transform · self = matrix`.
    pub fn rref_augmented(&self) -> RrefAug {
        let n = self.rows;
        let mut aug = Matrix::zeros(&self.field, n, self.cols + n);
        for i in 0..n {
            for j in 0..self.cols {
                let v = self.get(i, j);
                if v != 0 {
                    aug.set(i, j, v);
                }
            }
            aug.set(i, self.cols + i, 1);
        }
        // Eliminate on the left block only; the pivot scan in rref() walks
        // columns left to right, so pivots land in the left block first and
        // the right block never produces a pivot before rank is exhausted —
        // but guard anyway by stopping at self.cols.
        let mut m = aug;
        let mut pivots = Vec::new();
        let mut r = 0usize;
        for c in 0..self.cols {
            let Some(pr) = (r..n).find(|&i| m.get(i, c) != 0) else {
                continue;
            };
            if pr != r {
                for k in 0..m.cols {
                    let (a, b) = (m.get(r, k), m.get(pr, k));
                    m.set(r, k, b);
                    m.set(pr, k, a);
                }
            }
            let inv = self.field.inv_code(m.get(r, c)).expect("pivot is nonzero");
            if inv != 1 {
                for k in 0..m.cols {
                    let v = self.field.mul_code(m.get(r, k), inv);
                    m.set(r, k, v);
                }
            }
            for i in 0..n {
                let factor = m.get(i, c);
                if i != r && factor != 0 {
                    for k in 0..m.cols {
                        let t = self.field.mul_code(factor, m.get(r, k));
                        let v = self.field.sub_code(m.get(i, k), t);
                        m.set(i, k, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == n {
                break;
            }
        }
        let left = Matrix::from_fn(&self.field, n, self.cols, |i, j| m.get(i, j));
        let right = Matrix::from_fn(&self.field, n, n, |i, j| m.get(i, self.cols + j));
        RrefAug { matrix: left, transform: right, rank: r, pivots }
    }

    /// Basis of `{v : self · vᵀ = 0}` as a canonical subspace of row vectors.
    pub fn nullspace(&self) -> Subspace {
        let Rref { matrix: r, rank, pivots } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &fc in &free {
            let mut v = vec![0u8; self.cols];
            v[fc] = 1;
            for (ri, &pc) in pivots.iter().enumerate().take(rank) {
                let coef = r.get(ri, fc);
                if coef != 0 {
                    v[pc] = self.field.neg_code(coef);
                }
            }
            basis.push(v);
        }
        Subspace::from_rows(&self.field, self.cols, &basis)
    }

    /// Inverse of a square matrix, or `LinalgError::Singular`.
    pub fn inverse(&self) -> Result<Matrix, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::NotSquare);
        }
        let aug = self.rref_augmented();
        if aug.rank != self.rows {
            return Err(LinalgError::Singular);
        }
        Ok(aug.transform)
    }

    pub fn is_zero(&self) -> bool {
        match &self.store {
            Store::Bit(b) => b.words.iter().all(|&w| w == 0),
            Store::Gen(v) => v.iter().all(|&x| x == 0),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..self.cols).all(|j| self.get(i, j) == u8::from(i == j)))
    }

    /// `Some(c)` when the matrix equals `c · Id` (squares only).
    pub fn as_scalar(&self) -> Option<u8> {
        if self.rows != self.cols || self.rows == 0 {
            return None;
        }
        let c = self.get(0, 0);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let want = if i == j { c } else { 0 };
                if self.get(i, j) != want {
                    return None;
                }
            }
        }
        Some(c)
    }

    pub fn pow(&self, mut k: u64) -> Result<Matrix, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::NotSquare);
        }
        let mut acc = Matrix::identity(&self.field, self.rows);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            base = base.mul(&base)?;
            k >>= 1;
        }
        Ok(acc)
    }

    /// Deterministic sort key: shape then row-major codes.
    pub fn sort_key(&self) -> Vec<u8> {
        let mut key = Vec::with_capacity(self.rows * self.cols + 8);
        key.extend_from_slice(&(self.rows as u32).to_be_bytes());
        key.extend_from_slice(&(self.cols as u32).to_be_bytes());
        key.extend(self.flatten());
        key
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}×{} over GF({}) [", self.rows, self.cols, self.field.q())?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    fn gf(q: u32) -> Field {
        Field::gf(q).unwrap()
    }

    #[test]
    fn gl2_generator_squares_to_identity_over_gf2() {
        let f = gf(2);
        let m = Matrix::from_rows(&f, &[vec![1, 1], vec![0, 1]]).unwrap();
        assert!(m.mul(&m).unwrap().is_identity());
    }

    #[test]
    fn rref_of_rank_two_example() {
        let f = gf(2);
        let m = Matrix::from_rows(&f, &[vec![1, 1, 0], vec![1, 1, 1]]).unwrap();
        let r = m.rref();
        assert_eq!(r.rank, 2);
        assert_eq!(r.pivots, vec![0, 2]);
        assert_eq!(r.matrix.to_nested(), vec![vec![1, 1, 0], vec![0, 0, 1]]);
    }

    #[test]
    fn nullspace_of_sum_map() {
        let f = gf(2);
        let m = Matrix::from_rows(&f, &[vec![1, 1]]).unwrap();
        let ns = m.nullspace();
        assert_eq!(ns.dim(), 1);
        assert_eq!(ns.basis().to_nested(), vec![vec![1, 1]]);
    }

    /// Independent schoolbook product used as the multiplication oracle.
    fn schoolbook(f: &Field, a: &Matrix, b: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(f, a.rows(), b.cols());
        for i in 0..a.rows() {
            for j in 0..b.cols() {
                let mut acc = 0u8;
                for k in 0..a.cols() {
                    acc = f.add_code(acc, f.mul_code(a.get(i, k), b.get(k, j)));
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    #[test]
    fn product_matches_schoolbook_oracle_seed_42() {
        let mut rng = StdRng::seed_from_u64(42);
        for q in [2u32, 3, 4, 9] {
            let f = gf(q);
            for _ in 0..20 {
                let a = Matrix::random(&f, 3, 3, &mut rng);
                let b = Matrix::random(&f, 3, 3, &mut rng);
                assert_eq!(a.mul(&b).unwrap(), schoolbook(&f, &a, &b), "GF({q})");
            }
        }
    }

    #[test]
    fn bit_packed_product_matches_schoolbook_on_wide_matrices() {
        // Exercises multi-word rows (cols > 64).
        let f = gf(2);
        let mut rng = StdRng::seed_from_u64(7);
        let a = Matrix::random(&f, 70, 130, &mut rng);
        let b = Matrix::random(&f, 130, 65, &mut rng);
        assert_eq!(a.mul(&b).unwrap(), schoolbook(&f, &a, &b));
    }

    #[test]
    fn kron_mixed_product_identity_seed_7() {
        // (a⊗b)(c⊗d) = ac ⊗ bd over GF(3).
        let f = gf(3);
        let mut rng = StdRng::seed_from_u64(7);
        let a = Matrix::random(&f, 2, 3, &mut rng);
        let b = Matrix::random(&f, 3, 2, &mut rng);
        let c = Matrix::random(&f, 3, 2, &mut rng);
        let d = Matrix::random(&f, 2, 3, &mut rng);
        let lhs = a.kron(&b).unwrap().mul(&c.kron(&d).unwrap()).unwrap();
        let rhs = a.mul(&c).unwrap().kron(&b.mul(&d).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn kron_of_one_by_one_is_scalar_multiplication() {
        let f = gf(5);
        let a = Matrix::from_rows(&f, &[vec![3]]).unwrap();
        let b = Matrix::from_rows(&f, &[vec![2, 4], vec![1, 0]]).unwrap();
        assert_eq!(a.kron(&b).unwrap(), b.scale(3));
    }

    #[test]
    fn kron_index_convention_is_first_factor_major() {
        let f = gf(2);
        let a = Matrix::from_rows(&f, &[vec![1, 0], vec![0, 0]]).unwrap();
        let b = Matrix::from_rows(&f, &[vec![0, 1], vec![0, 0]]).unwrap();
        let k = a.kron(&b).unwrap();
        // (i1,i2),(j1,j2) = (0,0),(0,1) → row 0·2+0 = 0, col 0·2+1 = 1.
        assert_eq!(k.get(0, 1), 1);
        assert_eq!(k.flatten().iter().filter(|&&x| x != 0).count(), 1);
    }

    #[test]
    fn inverse_round_trip() {
        let mut rng = StdRng::seed_from_u64(3);
        for q in [2u32, 4, 9] {
            let f = gf(q);
            let mut found = 0;
            while found < 5 {
                let m = Matrix::random(&f, 4, 4, &mut rng);
                if let Ok(inv) = m.inverse() {
                    assert!(m.mul(&inv).unwrap().is_identity());
                    assert!(inv.mul(&m).unwrap().is_identity());
                    found += 1;
                }
            }
        }
        let f = gf(2);
        let sing = Matrix::from_rows(&f, &[vec![1, 1], vec![1, 1]]).unwrap();
        assert_eq!(sing.inverse().unwrap_err(), LinalgError::Singular);
    }

    #[test]
    fn rref_is_canonical_under_row_operations() {
        let mut rng = StdRng::seed_from_u64(11);
        for q in [2u32, 3, 4] {
            let f = gf(q);
            for _ in 0..25 {
                let m = Matrix::random(&f, 4, 6, &mut rng);
                // Left-multiplying by an invertible matrix preserves the row
                // space, so the canonical form must not change.
                let t = loop {
                    let t = Matrix::random(&f, 4, 4, &mut rng);
                    if t.inverse().is_ok() {
                        break t;
                    }
                };
                let a = m.rref();
                let b = t.mul(&m).unwrap().rref();
                assert_eq!(a.matrix, b.matrix);
                assert_eq!(a.rank, b.rank);
                assert_eq!(a.pivots, b.pivots);
                // Idempotence.
                let again = a.matrix.rref();
                assert_eq!(again.matrix, a.matrix);
            }
        }
    }

    #[test]
    fn rank_plus_nullity_is_column_count() {
        let mut rng = StdRng::seed_from_u64(19);
        for q in [2u32, 5, 8] {
            let f = gf(q);
            for _ in 0..20 {
                let m = Matrix::random(&f, 3, 5, &mut rng);
                let r = m.rref();
                assert_eq!(r.rank + m.nullspace().dim(), 5);
            }
        }
    }

    #[test]
    fn rref_augmented_transform_reproduces_reduction() {
        let mut rng = StdRng::seed_from_u64(23);
        let f = gf(9);
        for _ in 0..10 {
            let m = Matrix::random(&f, 4, 5, &mut rng);
            let aug = m.rref_augmented();
            assert_eq!(aug.transform.mul(&m).unwrap(), aug.matrix);
            assert!(aug.transform.inverse().is_ok());
        }
    }

    #[test]
    fn act_matches_explicit_matrix_vector_product() {
        let mut rng = StdRng::seed_from_u64(31);
        for q in [2u32, 4] {
            let f = gf(q);
            let m = Matrix::random(&f, 4, 4, &mut rng);
            let v: Vec<u8> = (0..4).map(|_| rng.gen_range(0..q) as u8).collect();
            let out = m.act(&v);
            for (i, &outi) in out.iter().enumerate() {
                let mut acc = 0u8;
                for (j, &vj) in v.iter().enumerate() {
                    acc = f.add_code(acc, f.mul_code(m.get(i, j), vj));
                }
                assert_eq!(outi, acc);
            }
            // v·M agrees with Mᵀ acting on v.
            assert_eq!(m.row_times(&v), m.transpose().act(&v));
        }
    }
}
