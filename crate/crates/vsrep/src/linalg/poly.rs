//! Dense univariate polynomials over a small finite field, with the
//! factorization and minimal-polynomial routines the module-theory layers
//! rely on: gcd/lcm, squarefree radical in characteristic `p`, a
//! deterministic Berlekamp split into distinct irreducible factors, and
//! Krylov-based minimal polynomials of square matrices.

use super::matrix::Matrix;
use super::subspace::Echelon;
use crate::field::Field;

/// Polynomial with coefficient codes in ascending degree order and no
/// trailing zeros; the zero polynomial stores no coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    coeffs: Vec<u8>,
}

impl std::fmt::Debug for Poly {
    /// Prints like `x^3 + 2*x + 1` with codes as coefficients.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c) {
                (0, _) => write!(f, "{c}")?,
                (1, 1) => write!(f, "x")?,
                (1, _) => write!(f, "{c}*x")?,
                (_, 1) => write!(f, "x^{i}")?,
                _ => write!(f, "{c}*x^{i}")?,
            }
        }
        Ok(())
    }
}

impl Poly {
    pub fn new(field: &Field, mut coeffs: Vec<u8>) -> Poly {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        for &c in &coeffs {
            assert!((c as u32) < field.q(), "coefficient code out of range");
        }
        Poly { field: field.clone(), coeffs }
    }

    pub fn zero(field: &Field) -> Poly {
        Poly::new(field, vec![])
    }

    pub fn one(field: &Field) -> Poly {
        Poly::new(field, vec![1])
    }

    pub fn x(field: &Field) -> Poly {
        Poly::new(field, vec![0, 1])
    }

    pub fn constant(field: &Field, c: u8) -> Poly {
        Poly::new(field, vec![c])
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree, treating the zero polynomial as degree 0.
    pub fn deg(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, i: usize) -> u8 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[u8] {
        &self.coeffs
    }

    pub fn leading(&self) -> u8 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn monic(&self) -> Poly {
        let lead = self.leading();
        if lead == 0 || lead == 1 {
            return self.clone();
        }
        let inv = self.field.inv_code(lead).expect("nonzero leading coefficient");
        self.scale(inv)
    }

    pub fn scale(&self, c: u8) -> Poly {
        Poly::new(&self.field, self.coeffs.iter().map(|&a| self.field.mul_code(a, c)).collect())
    }

    pub fn add(&self, rhs: &Poly) -> Poly {
        self.check_field(rhs);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new(
            &self.field,
            (0..n).map(|i| self.field.add_code(self.coeff(i), rhs.coeff(i))).collect(),
        )
    }

    pub fn sub(&self, rhs: &Poly) -> Poly {
        self.check_field(rhs);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new(
            &self.field,
            (0..n).map(|i| self.field.sub_code(self.coeff(i), rhs.coeff(i))).collect(),
        )
    }

    pub fn mul(&self, rhs: &Poly) -> Poly {
        self.check_field(rhs);
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(&self.field);
        }
        let mut out = vec![0u8; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                let t = self.field.mul_code(a, b);
                out[i + j] = self.field.add_code(out[i + j], t);
            }
        }
        Poly::new(&self.field, out)
    }

    /// Quotient and remainder; panics on a zero divisor.
    pub fn divrem(&self, divisor: &Poly) -> (Poly, Poly) {
        self.check_field(divisor);
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let dd = divisor.deg();
        if self.coeffs.len() < divisor.coeffs.len() {
            return (Poly::zero(&self.field), self.clone());
        }
        let lead_inv = self.field.inv_code(divisor.leading()).expect("nonzero leading");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u8; rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let c = self.field.mul_code(rem[k], lead_inv);
            if c == 0 {
                continue;
            }
            quot[k - dd] = c;
            for (i, &dc) in divisor.coeffs.iter().enumerate() {
                let t = self.field.mul_code(c, dc);
                rem[k - dd + i] = self.field.sub_code(rem[k - dd + i], t);
            }
        }
        (Poly::new(&self.field, quot), Poly::new(&self.field, rem))
    }

    pub fn rem(&self, divisor: &Poly) -> Poly {
        self.divrem(divisor).1
    }

    pub fn div_exact(&self, divisor: &Poly) -> Poly {
        let (q, r) = self.divrem(divisor);
        assert!(r.is_zero(), "division was not exact");
        q
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(&self, rhs: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }

    /// Monic least common multiple.
    pub fn lcm(&self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(&self.field);
        }
        let g = self.gcd(rhs);
        self.mul(rhs).div_exact(&g).monic()
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero(&self.field);
        }
        let p = self.field.p();
        let out: Vec<u8> = (1..self.coeffs.len())
            .map(|i| {
                let mult = (i as u32 % p) as u8;
                let mut acc = 0u8;
                for _ in 0..mult {
                    acc = self.field.add_code(acc, self.coeffs[i]);
                }
                acc
            })
            .collect();
        Poly::new(&self.field, out)
    }

    /// `self^exp mod modulus` by square-and-multiply.
    pub fn pow_mod(&self, mut exp: u64, modulus: &Poly) -> Poly {
        assert!(modulus.deg() >= 1, "modulus must be non-constant");
        let mut base = self.rem(modulus);
        let mut acc = Poly::one(&self.field);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base).rem(modulus);
            }
            base = base.mul(&base).rem(modulus);
            exp >>= 1;
        }
        acc
    }

    pub fn eval_code(&self, a: u8) -> u8 {
        let mut acc = 0u8;
        for &c in self.coeffs.iter().rev() {
            acc = self.field.add_code(self.field.mul_code(acc, a), c);
        }
        acc
    }

    /// Horner evaluation at a square matrix: constants act as scalar matrices.
    pub fn eval_matrix(&self, m: &Matrix) -> Matrix {
        assert_eq!(m.rows(), m.cols(), "polynomial evaluation needs a square matrix");
        let n = m.rows();
        let mut acc = Matrix::zeros(&self.field, n, n);
        for &c in self.coeffs.iter().rev() {
            acc = acc.mul(m).expect("same field and size");
            if c != 0 {
                let scaled = Matrix::identity(&self.field, n).scale(c);
                acc = acc.add(&scaled).expect("same shape");
            }
        }
        acc
    }

    /// Largest squarefree divisor (monic): the product of the distinct
    /// irreducible factors, handling the characteristic-`p` case where the
    /// derivative vanishes by extracting `p`-th roots of coefficients.
    pub fn squarefree_radical(&self) -> Poly {
        assert!(!self.is_zero(), "radical of the zero polynomial");
        if self.is_constant() {
            return Poly::one(&self.field);
        }
        let d = self.derivative();
        if d.is_zero() {
            return self.pth_root_poly().squarefree_radical();
        }
        let g = self.gcd(&d);
        if g.is_constant() {
            return self.monic();
        }
        let rest = self.div_exact(&g);
        rest.squarefree_radical().lcm(&g.squarefree_radical())
    }

    /// For `f` with zero derivative, the polynomial `h` with `h(x)^p = f(x)`.
    fn pth_root_poly(&self) -> Poly {
        let p = self.field.p() as usize;
        // p-th root in GF(p^e) is the (e−1)-fold Frobenius: a ↦ a^(p^(e−1)).
        let root_exp = (self.field.p() as u64).pow(self.field.e() - 1);
        let out: Vec<u8> = (0..=self.deg() / p)
            .map(|i| {
                let c = self.coeff(i * p);
                self.field.pow_code(c, root_exp)
            })
            .collect();
        Poly::new(&self.field, out)
    }

    /// Distinct monic irreducible factors, sorted by degree then by
    /// coefficient codes. Input must be non-constant.
    pub fn distinct_irreducible_factors(&self) -> Vec<Poly> {
        assert!(self.deg() >= 1, "factoring a constant");
        let mut factors = berlekamp_split(&self.squarefree_radical());
        factors.sort_by(|a, b| {
            (a.deg(), &a.coeffs).cmp(&(b.deg(), &b.coeffs))
        });
        factors
    }

    /// True when this polynomial is irreducible over its coefficient field.
    pub fn is_irreducible(&self) -> bool {
        if self.deg() == 0 {
            return false;
        }
        if self.deg() == 1 {
            return true;
        }
        let d = self.derivative();
        if d.is_zero() || !self.gcd(&d).is_constant() {
            return false;
        }
        berlekamp_factor_count(&self.monic()) == 1
    }

    fn check_field(&self, rhs: &Poly) {
        assert!(self.field == rhs.field, "mixed-field polynomial arithmetic");
    }
}

/// Frobenius matrix of `F_q[x]/(f)` in the basis `1, x, …, x^{n−1}`:
/// row `i` holds `x^{i·q} mod f`.
fn berlekamp_matrix(f: &Poly) -> Matrix {
    let field = f.field();
    let n = f.deg();
    let q = field.q() as u64;
    let xq = Poly::x(field).pow_mod(q, f);
    let mut rows: Vec<Vec<u8>> = Vec::with_capacity(n);
    let mut cur = Poly::one(field);
    for _ in 0..n {
        let mut row = vec![0u8; n];
        for (j, r) in row.iter_mut().enumerate() {
            *r = cur.coeff(j);
        }
        rows.push(row);
        cur = cur.mul(&xq).rem(f);
    }
    Matrix::from_rows(field, &rows).expect("well-formed rows")
}

/// Basis of `{h : h^q ≡ h mod f}` as polynomials of degree `< deg f`.
fn berlekamp_algebra_basis(f: &Poly) -> Vec<Poly> {
    let field = f.field();
    let q = berlekamp_matrix(f);
    let diff = q.sub(&Matrix::identity(field, f.deg())).expect("same shape");
    // Row vectors h with h·(Q−I) = 0 form the left null space.
    let null = diff.transpose().nullspace();
    null.basis_rows().into_iter().map(|r| Poly::new(field, r)).collect()
}

fn berlekamp_factor_count(f: &Poly) -> usize {
    berlekamp_algebra_basis(f).len()
}

/// Splits a squarefree monic polynomial into its irreducible factors by
/// deterministic gcds with `h − c` over all Berlekamp-basis `h` and all
/// field codes `c`.
fn berlekamp_split(f: &Poly) -> Vec<Poly> {
    let field = f.field().clone();
    let f = f.monic();
    if f.deg() == 1 {
        return vec![f];
    }
    let basis = berlekamp_algebra_basis(&f);
    let target = basis.len();
    let mut factors = vec![f];
    'outer: for h in &basis {
        if h.is_constant() {
            continue;
        }
        for c in 0..field.q() as u8 {
            let shifted = h.sub(&Poly::constant(&field, c));
            let mut next = Vec::with_capacity(factors.len());
            for u in factors {
                if u.deg() <= 1 {
                    next.push(u);
                    continue;
                }
                let g = u.gcd(&shifted);
                if g.is_constant() || g.deg() == u.deg() {
                    next.push(u);
                } else {
                    next.push(g.clone());
                    next.push(u.div_exact(&g).monic());
                }
            }
            factors = next;
            if factors.len() == target {
                break 'outer;
            }
        }
    }
    assert_eq!(factors.len(), target, "Berlekamp split is complete");
    factors
}

/// Minimal polynomial of a square matrix via seeded Krylov chains: relative
/// minimal polynomials of standard basis vectors are combined by lcm, and
/// seeds already inside the span of earlier chains are skipped (the running
/// lcm annihilates that span).
pub fn minpoly_of_matrix(a: &Matrix) -> Poly {
    assert_eq!(a.rows(), a.cols(), "minimal polynomial of a non-square matrix");
    let field = a.field().clone();
    let n = a.rows();
    if n == 0 {
        return Poly::one(&field);
    }
    let mut glob = Echelon::new(&field, n);
    let mut result = Poly::one(&field);
    for s in 0..n {
        let mut seed = vec![0u8; n];
        seed[s] = 1;
        if glob.reduce(&seed).iter().all(|&x| x == 0) {
            continue;
        }
        let (mp, chain) = seed_minpoly(a, &seed);
        result = result.lcm(&mp);
        for v in chain {
            glob.insert(&v);
        }
        if glob.dim() == n && result.deg() == n {
            break;
        }
    }
    result.monic()
}

/// Minimal polynomial of `v` under the action `v ↦ a.act(v)`, together with
/// the Krylov vectors spanning the cyclic subspace generated by `v`.
fn seed_minpoly(a: &Matrix, v: &[u8]) -> (Poly, Vec<Vec<u8>>) {
    let field = a.field().clone();
    let n = a.rows();
    let mut local = Echelon::new(&field, n);
    // Reduced rows carry the combination of raw Krylov vectors producing them.
    let mut combos: Vec<Vec<u8>> = Vec::new();
    let mut raw: Vec<Vec<u8>> = Vec::new();
    let mut w = v.to_vec();
    loop {
        let k = raw.len();
        let mut red = w.clone();
        let mut combo = vec![0u8; k + 1];
        combo[k] = 1;
        for (idx, pivot) in local.pivot_columns().iter().enumerate() {
            let c = red[*pivot];
            if c != 0 {
                for (rj, &bj) in red.iter_mut().zip(local.row(idx)) {
                    *rj = field.sub_code(*rj, field.mul_code(c, bj));
                }
                for (cj, oj) in combo.iter_mut().zip(&combos[idx]) {
                    *cj = field.sub_code(*cj, field.mul_code(c, *oj));
                }
            }
        }
        if red.iter().all(|&x| x == 0) {
            // combo expresses 0 = Σ combo[j]·a^j·v; the top coefficient is 1.
            let mp = Poly::new(&field, combo);
            return (mp, raw);
        }
        // Normalize the new echelon row to pivot 1 before storing.
        let pivot = red.iter().position(|&x| x != 0).expect("nonzero residue");
        let inv = field.inv_code(red[pivot]).expect("nonzero pivot");
        let norm: Vec<u8> = red.iter().map(|&x| field.mul_code(x, inv)).collect();
        let combo_norm: Vec<u8> = combo.iter().map(|&x| field.mul_code(x, inv)).collect();
        local.insert_prereduced(norm, pivot);
        let mut padded = combo_norm;
        padded.resize(k + 1, 0);
        combos.push(padded);
        raw.push(w.clone());
        w = a.act(&w);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(q: u32) -> Field {
        Field::gf(q).unwrap()
    }

    fn poly(q: u32, coeffs: &[u8]) -> Poly {
        Poly::new(&gf(q), coeffs.to_vec())
    }

    #[test]
    fn arithmetic_matches_hand_expansion_over_gf3() {
        // (x+1)(x+2) = x² + 3x + 2 = x² + 2 over GF(3).
        let a = poly(3, &[1, 1]);
        let b = poly(3, &[2, 1]);
        assert_eq!(a.mul(&b), poly(3, &[2, 0, 1]));
        let (q, r) = poly(3, &[2, 0, 1]).divrem(&a);
        assert_eq!(q, b);
        assert!(r.is_zero());
    }

    #[test]
    fn gcd_of_products_recovers_common_factor() {
        let f = gf(2);
        let p = Poly::new(&f, vec![1, 1]); // x+1
        let a = p.mul(&Poly::new(&f, vec![1, 1, 1])); // (x+1)(x²+x+1)
        let b = p.mul(&Poly::new(&f, vec![0, 1])); // (x+1)·x
        assert_eq!(a.gcd(&b), p);
        assert_eq!(a.lcm(&b), a.mul(&Poly::new(&f, vec![0, 1])));
    }

    #[test]
    fn derivative_in_characteristic_two_kills_even_powers() {
        // d/dx (x⁴ + x³ + x + 1) = 3x² + 1 = x² + 1 over GF(2).
        let p = poly(2, &[1, 1, 0, 1, 1]);
        assert_eq!(p.derivative(), poly(2, &[1, 0, 1]));
    }

    #[test]
    fn squarefree_radical_strips_multiplicity() {
        let f = gf(2);
        let x1 = Poly::new(&f, vec![1, 1]); // x+1
        let quad = Poly::new(&f, vec![1, 1, 1]); // x²+x+1
        let input = x1.mul(&x1).mul(&x1).mul(&quad).mul(&quad);
        assert_eq!(input.squarefree_radical(), x1.mul(&quad));
        // Pure p-th power: (x²+x+1)² = x⁴+x²+1 has zero derivative.
        let sq = quad.mul(&quad);
        assert!(sq.derivative().is_zero());
        assert_eq!(sq.squarefree_radical(), quad);
    }

    #[test]
    fn factors_of_x8_minus_x_over_gf2_are_all_irreducibles_of_degree_dividing_3() {
        // x⁸ + x = x(x+1)(x³+x+1)(x³+x²+1) over GF(2).
        let f = gf(2);
        let p = Poly::new(&f, vec![0, 1, 0, 0, 0, 0, 0, 0, 1]);
        let factors = p.distinct_irreducible_factors();
        let expect = [
            vec![0u8, 1],
            vec![1, 1],
            vec![1, 0, 1, 1],
            vec![1, 1, 0, 1],
        ];
        assert_eq!(factors.len(), 4);
        for (got, want) in factors.iter().zip(expect.iter()) {
            assert_eq!(got.coeffs(), &want[..]);
        }
    }

    #[test]
    fn factorization_over_gf4_splits_rational_quadratics() {
        // Over GF(4) = {0,1,ω,ω+1}, x²+x+1 = (x+ω)(x+ω+1) with ω = code 2.
        let p = poly(4, &[1, 1, 1]);
        assert!(!p.is_irreducible());
        let factors = p.distinct_irreducible_factors();
        assert_eq!(factors.len(), 2);
        assert_eq!(factors[0].coeffs(), &[2, 1]);
        assert_eq!(factors[1].coeffs(), &[3, 1]);
    }

    #[test]
    fn irreducibility_spot_checks() {
        assert!(poly(2, &[1, 1, 1]).is_irreducible()); // x²+x+1 over GF(2)
        assert!(!poly(2, &[1, 0, 1]).is_irreducible()); // (x+1)²
        assert!(poly(3, &[1, 0, 1]).is_irreducible()); // x²+1 over GF(3)
        assert!(!poly(5, &[1, 0, 1]).is_irreducible()); // (x+2)(x+3) over GF(5)
        assert!(poly(2, &[1, 1, 0, 0, 1]).is_irreducible()); // x⁴+x+1
        assert!(!poly(2, &[1, 1]).mul(&poly(2, &[1, 1, 1])).is_irreducible());
    }

    #[test]
    fn eval_matrix_satisfies_cayley_hamilton_for_a_2x2_example() {
        // a = [[0,1],[1,1]] over GF(2) has characteristic polynomial x²+x+1.
        let f = gf(2);
        let a = Matrix::from_rows(&f, &[vec![0, 1], vec![1, 1]]).unwrap();
        let chi = Poly::new(&f, vec![1, 1, 1]);
        assert!(chi.eval_matrix(&a).is_zero());
        assert_eq!(Poly::new(&f, vec![0, 1]).eval_matrix(&a), a);
    }

    #[test]
    fn minpoly_of_companion_matrix_is_its_polynomial() {
        // Companion matrix of x³+x+1 over GF(2), acting on row vectors via
        // act(): columns carry the defining recursion.
        let f = gf(2);
        let c = Matrix::from_rows(
            &f,
            &[vec![0, 0, 1], vec![1, 0, 1], vec![0, 1, 0]],
        )
        .unwrap();
        let mp = minpoly_of_matrix(&c);
        assert_eq!(mp.coeffs(), &[1, 1, 0, 1]);
    }

    #[test]
    fn minpoly_of_identity_and_zero() {
        let f = gf(3);
        let id = Matrix::identity(&f, 4);
        assert_eq!(minpoly_of_matrix(&id).coeffs(), &[2, 1]); // x − 1 = x + 2
        let z = Matrix::zeros(&f, 4, 4);
        assert_eq!(minpoly_of_matrix(&z).coeffs(), &[0, 1]); // x
    }

    #[test]
    fn minpoly_divides_characteristic_and_annihilates() {
        use rand::SeedableRng;
        let mut rng = rand::rngs::StdRng::seed_from_u64(5);
        for q in [2u32, 3, 4, 9] {
            let f = gf(q);
            for n in [1usize, 2, 3, 5] {
                let a = Matrix::random(&f, n, n, &mut rng);
                let mp = minpoly_of_matrix(&a);
                assert!(mp.deg() <= n);
                assert!(mp.eval_matrix(&a).is_zero(), "minpoly annihilates, q={q} n={n}");
                assert_eq!(mp.leading(), 1);
            }
        }
    }

    #[test]
    fn minpoly_of_block_diagonal_is_lcm_of_blocks() {
        // Blocks with minimal polynomials x+1 and x²+x+1 over GF(2).
        let f = gf(2);
        let m = Matrix::from_rows(
            &f,
            &[vec![1, 0, 0], vec![0, 0, 1], vec![0, 1, 1]],
        )
        .unwrap();
        let mp = minpoly_of_matrix(&m);
        let expect = Poly::new(&f, vec![1, 1]).mul(&Poly::new(&f, vec![1, 1, 1]));
        assert_eq!(mp, expect);
    }

    #[test]
    fn pow_mod_computes_frobenius_images() {
        // x^4 mod x⁴+x+1 = x+1 over GF(2).
        let f = gf(2);
        let modulus = Poly::new(&f, vec![1, 1, 0, 0, 1]);
        let xq = Poly::x(&f).pow_mod(4, &modulus);
        assert_eq!(xq.coeffs(), &[1, 1]);
    }
}
