//! Independent cross-checks backing the main decision procedures.
//!
//! Everything in this module is deliberately redundant. The star exhibit is a
//! brute-force oracle for the "only scalars and the full matrix algebra are
//! conjugation-stable" property: modules over GF(2) of dimension at most 4 are
//! small enough that *every* single matrix can be used as a seed, its closure
//! under products and generator conjugation computed by exhaustion, and the
//! result compared against [`crate::normalg::very_simple_exact`]. The oracle
//! is a self-contained u16-bitboard implementation — its matrix product,
//! inversion, and span bookkeeping share no code with [`crate::linalg`] — so
//! an agreement between the two is evidence, not an echo.
//!
//! The remaining suites exhaust finite-field laws over every supported field
//! size, probe row-reduction canonicity with randomized row operations, and
//! replay the permutation-module facts (dimension formula, endomorphism rings
//! of odd-degree hearts, alternating restrictions) across the whole catalog.
//! The command-line `selftest` subcommand and the acceptance tests both run
//! [`run_all`].

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::catalog;
use crate::field::Field;
use crate::heart;
use crate::linalg::Matrix;
use crate::meataxe::is_absolutely_irreducible;
use crate::normalg::very_simple_exact;
use crate::rep::{perm_to_rep, sum_zero_submodule, Representation};

/// Errors from the brute-force oracle's preconditions.
#[derive(Debug, Error)]
pub enum SelfcheckError {
    #[error("the brute-force oracle only handles GF(2); got GF({0})")]
    UnsupportedField(u32),
    #[error("the brute-force oracle only handles dimension ≤ 4; got {0}")]
    DimensionTooLarge(usize),
    #[error(transparent)]
    Field(#[from] crate::field::FieldError),
    #[error(transparent)]
    Rep(#[from] crate::rep::RepError),
    #[error(transparent)]
    Catalog(#[from] catalog::CatalogError),
    #[error(transparent)]
    Heart(#[from] heart::HeartError),
}

/// Outcome of one self-check suite: a name, a verdict, and a human-readable
/// account of what was swept.
#[derive(Clone, Debug)]
pub struct SuiteOutcome {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

impl SuiteOutcome {
    fn from(name: &'static str, result: Result<String, String>) -> SuiteOutcome {
        match result {
            Ok(detail) => SuiteOutcome { name, pass: true, detail },
            Err(detail) => SuiteOutcome { name, pass: false, detail },
        }
    }
}

// ---------------------------------------------------------------------------
// The u16-bitboard oracle core.
//
// A GF(2) matrix of dimension n ≤ 4 fits in one u16: bit i·n + j holds entry
// (i, j). Everything below works directly on those words.
// ---------------------------------------------------------------------------

fn id16(n: usize) -> u16 {
    let mut m = 0u16;
    for i in 0..n {
        m |= 1 << (i * n + i);
    }
    m
}

fn mul16(a: u16, b: u16, n: usize) -> u16 {
    let row_mask = (1u16 << n) - 1;
    let mut c = 0u16;
    for i in 0..n {
        let arow = (a >> (i * n)) & row_mask;
        let mut crow = 0u16;
        for k in 0..n {
            if arow & (1 << k) != 0 {
                crow ^= (b >> (k * n)) & row_mask;
            }
        }
        c |= crow << (i * n);
    }
    c
}

/// Inverse over GF(2) by Gauss–Jordan on `[A | I]`, or `None` if singular.
fn inv16(a: u16, n: usize) -> Option<u16> {
    let row_mask = (1u16 << n) - 1;
    let mut arows = [0u16; 4];
    let mut irows = [0u16; 4];
    for i in 0..n {
        arows[i] = (a >> (i * n)) & row_mask;
        irows[i] = 1 << i;
    }
    for col in 0..n {
        let pivot = (col..n).find(|&r| arows[r] & (1 << col) != 0)?;
        arows.swap(col, pivot);
        irows.swap(col, pivot);
        for r in 0..n {
            if r != col && arows[r] & (1 << col) != 0 {
                arows[r] ^= arows[col];
                irows[r] ^= irows[col];
            }
        }
    }
    let mut out = 0u16;
    for (i, &row) in irows.iter().take(n).enumerate() {
        out |= row << (i * n);
    }
    Some(out)
}

/// A GF(2) span of u16 words, kept pairwise-reduced so each leading bit
/// appears in exactly one stored row.
#[derive(Clone, Default)]
struct Span16 {
    rows: Vec<u16>,
}

fn high_bit(v: u16) -> u16 {
    debug_assert!(v != 0);
    1 << (15 - v.leading_zeros())
}

impl Span16 {
    fn reduce(&self, mut v: u16) -> u16 {
        for &r in &self.rows {
            if v & high_bit(r) != 0 {
                v ^= r;
            }
        }
        v
    }

    /// Adds `v` to the span; returns the new independent direction, if any.
    fn insert(&mut self, v: u16) -> Option<u16> {
        let v = self.reduce(v);
        if v == 0 {
            return None;
        }
        let hv = high_bit(v);
        for r in self.rows.iter_mut() {
            if *r & hv != 0 {
                *r ^= v;
            }
        }
        self.rows.push(v);
        Some(v)
    }

    fn dim(&self) -> usize {
        self.rows.len()
    }
}

/// Dimension of the smallest unital subalgebra of n×n matrices over GF(2)
/// containing `seed` and stable under conjugation by the given generators.
/// Stops early once the span is all of End(V).
fn closure_dim16(seed: u16, gens: &[u16], invs: &[u16], n: usize) -> usize {
    let full = n * n;
    let mut span = Span16::default();
    let mut queue: Vec<u16> = Vec::new();
    for start in [id16(n), seed] {
        if let Some(v) = span.insert(start) {
            queue.push(v);
        }
    }
    let mut processed: Vec<u16> = Vec::new();
    while let Some(u) = queue.pop() {
        if span.dim() == full {
            return full;
        }
        let feed = |x: u16, span: &mut Span16, queue: &mut Vec<u16>| {
            if let Some(v) = span.insert(x) {
                queue.push(v);
            }
        };
        for (&g, &gi) in gens.iter().zip(invs) {
            feed(mul16(mul16(g, u, n), gi, n), &mut span, &mut queue);
        }
        for &v in processed.iter().chain(std::iter::once(&u)) {
            feed(mul16(u, v, n), &mut span, &mut queue);
            feed(mul16(v, u, n), &mut span, &mut queue);
        }
        processed.push(u);
    }
    span.dim()
}

fn rep_to_bits(rep: &Representation) -> Result<(Vec<u16>, Vec<u16>, usize), SelfcheckError> {
    if rep.field().q() != 2 {
        return Err(SelfcheckError::UnsupportedField(rep.field().q()));
    }
    let n = rep.dim();
    if n > 4 {
        return Err(SelfcheckError::DimensionTooLarge(n));
    }
    let mut gens = Vec::new();
    let mut invs = Vec::new();
    for g in rep.generators() {
        let mut w = 0u16;
        for i in 0..n {
            for j in 0..n {
                if g.get(i, j) != 0 {
                    w |= 1 << (i * n + j);
                }
            }
        }
        gens.push(w);
        invs.push(inv16(w, n).expect("representation generators are invertible"));
    }
    Ok((gens, invs, n))
}

/// Brute-force verdict: true iff every single-element closure is the scalars
/// or all of End(V).
///
/// This decides the "very simple" property: any conjugation-stable unital
/// subalgebra strictly between the scalars and End(V) contains a non-scalar
/// element whose own closure is again strictly between them, so sweeping all
/// `2^(n²)` single seeds cannot miss one.
pub fn brute_force_very_simple(rep: &Representation) -> Result<bool, SelfcheckError> {
    let (gens, invs, n) = rep_to_bits(rep)?;
    let full = n * n;
    for seed in 0..(1u32 << full) {
        let d = closure_dim16(seed as u16, &gens, &invs, n);
        if d > 1 && d < full {
            return Ok(false);
        }
    }
    Ok(true)
}

// ---------------------------------------------------------------------------
// The GF(2) test-module roster for the oracle suite.
// ---------------------------------------------------------------------------

fn rep_from_rows(dim: usize, gens: &[&[&[u8]]]) -> Result<Representation, SelfcheckError> {
    let f2 = Field::gf(2)?;
    let mats = gens
        .iter()
        .map(|rows| {
            let data: Vec<Vec<u8>> = rows.iter().map(|r| r.to_vec()).collect();
            Matrix::from_rows(&f2, &data).expect("roster matrices are well-formed")
        })
        .collect();
    Ok(Representation::new(&f2, dim, mats)?)
}

fn catalog_rep(name: &str, params: &[u32]) -> Result<Representation, SelfcheckError> {
    Ok(catalog::build(name, params)?
        .into_rep()
        .expect("catalog entry yields a representation"))
}

fn catalog_heart_rep(name: &str, params: &[u32]) -> Result<Representation, SelfcheckError> {
    let group = catalog::build(name, params)?
        .into_group()
        .expect("catalog entry yields a group");
    Ok(heart::heart(&group)?.rep().clone())
}

/// Deterministic roster of GF(2) modules for the exhaustive-seed oracle,
/// labelled for failure reports. Dimension 3 contributes exactly eight
/// modules (8 × 512 = 4096 seeds); each dimension-4 module sweeps 65536.
pub fn gf2_test_modules(max_dim: usize) -> Result<Vec<(String, Representation)>, SelfcheckError> {
    let f2 = Field::gf(2)?;
    let mut out: Vec<(String, Representation)> = Vec::new();
    let push = |label: &str, rep: Representation, out: &mut Vec<(String, Representation)>| {
        out.push((label.to_string(), rep));
    };

    push("trivial_1", rep_from_rows(1, &[&[&[1]]])?, &mut out);

    if max_dim >= 2 {
        push("gl2f2_natural", catalog_rep("gl2f2_natural", &[])?, &mut out);
        push("identity_2", rep_from_rows(2, &[&[&[1, 0], &[0, 1]]])?, &mut out);
        push("transvection_2", rep_from_rows(2, &[&[&[1, 1], &[0, 1]]])?, &mut out);
        push("swap_2", rep_from_rows(2, &[&[&[0, 1], &[1, 0]]])?, &mut out);
        push("c3_companion_2", rep_from_rows(2, &[&[&[0, 1], &[1, 1]]])?, &mut out);
    }

    if max_dim >= 3 {
        let sym3 = catalog::build("sym", &[3])?.into_group().expect("group");
        push("sym3_perm_3", perm_to_rep(&sym3, &f2), &mut out);
        let c3 = catalog::build("cyclic", &[3])?.into_group().expect("group");
        push("c3_perm_3", perm_to_rep(&c3, &f2), &mut out);
        push(
            "c7_companion_3",
            rep_from_rows(3, &[&[&[0, 0, 1], &[1, 0, 1], &[0, 1, 0]]])?,
            &mut out,
        );
        push(
            "gl3f2_natural",
            rep_from_rows(
                3,
                &[
                    &[&[0, 0, 1], &[1, 0, 0], &[0, 1, 0]],
                    &[&[1, 1, 0], &[0, 1, 0], &[0, 0, 1]],
                ],
            )?,
            &mut out,
        );
        push(
            "upper_unitriangular_3",
            rep_from_rows(
                3,
                &[
                    &[&[1, 1, 0], &[0, 1, 0], &[0, 0, 1]],
                    &[&[1, 0, 0], &[0, 1, 1], &[0, 0, 1]],
                ],
            )?,
            &mut out,
        );
        let sym4 = catalog::build("sym", &[4])?.into_group().expect("group");
        push("s4_sum_zero_3", sum_zero_submodule(&perm_to_rep(&sym4, &f2))?, &mut out);
        push(
            "identity_3",
            rep_from_rows(3, &[&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]])?,
            &mut out,
        );
        push(
            "swap_plus_fixed_3",
            rep_from_rows(3, &[&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]])?,
            &mut out,
        );
    }

    if max_dim >= 4 {
        push("tensor_2x2", catalog_rep("tensor_2x2", &[])?, &mut out);
        push("wreath_2x2", catalog_rep("wreath_2x2", &[])?, &mut out);
        push("heart_sym5", catalog_heart_rep("sym", &[5])?, &mut out);
        push("heart_alt5", catalog_heart_rep("alt", &[5])?, &mut out);
        push("heart_cyclic5", catalog_heart_rep("cyclic", &[5])?, &mut out);
        push("heart_dihedral5", catalog_heart_rep("dihedral", &[5])?, &mut out);
        push("heart_agl1_5", catalog_heart_rep("agl1", &[5])?, &mut out);
        push(
            "c15_companion_4",
            rep_from_rows(
                4,
                &[&[
                    &[0, 0, 0, 1],
                    &[1, 0, 0, 1],
                    &[0, 1, 0, 0],
                    &[0, 0, 1, 0],
                ]],
            )?,
            &mut out,
        );
        push(
            "identity_4",
            rep_from_rows(
                4,
                &[&[
                    &[1, 0, 0, 0],
                    &[0, 1, 0, 0],
                    &[0, 0, 1, 0],
                    &[0, 0, 0, 1],
                ]],
            )?,
            &mut out,
        );
    }

    Ok(out)
}

// ---------------------------------------------------------------------------
// Suites.
// ---------------------------------------------------------------------------

/// Exhaustive-seed agreement between the bitboard oracle and the exact
/// decision procedure, over every roster module of dimension ≤ `max_dim`.
pub fn seed_oracle_suite(max_dim: usize) -> SuiteOutcome {
    SuiteOutcome::from("exhaustive-seed oracle", seed_oracle_detail(max_dim.min(4)))
}

fn seed_oracle_detail(max_dim: usize) -> Result<String, String> {
    let modules = gf2_test_modules(max_dim).map_err(|e| format!("roster construction: {e}"))?;
    let mut seeds: u64 = 0;
    for (label, rep) in &modules {
        let brute = brute_force_very_simple(rep).map_err(|e| format!("oracle on {label}: {e}"))?;
        let exact = very_simple_exact(rep)
            .map_err(|e| format!("exact decision on {label}: {e}"))?
            .is_very_simple();
        seeds += 1u64 << (rep.dim() * rep.dim());
        if brute != exact {
            return Err(format!(
                "disagreement on {label}: brute force says very_simple={brute}, exact says {exact}"
            ));
        }
    }
    Ok(format!(
        "{} modules of dimension ≤ {max_dim}, {seeds} seed closures, full agreement",
        modules.len()
    ))
}

fn prime_powers(limit: u32) -> Vec<(u32, u32)> {
    let is_prime = |n: u32| n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d));
    let mut out = Vec::new();
    for p in 2..=limit {
        if !is_prime(p) {
            continue;
        }
        let mut q = p;
        let mut e = 1;
        while q <= limit {
            out.push((p, e));
            match q.checked_mul(p) {
                Some(next) => q = next,
                None => break,
            }
            e += 1;
        }
    }
    out.sort_by_key(|&(p, e)| p.pow(e));
    out
}

/// Exhausts the field laws on every supported field size: pairwise laws
/// (commutativity, subtraction/negation consistency, inverses, Frobenius) for
/// all q ≤ 256, and triple laws (associativity, distributivity) for q ≤ 49.
pub fn field_axiom_suite() -> SuiteOutcome {
    SuiteOutcome::from("field-axiom exhaustion", field_axiom_detail())
}

fn field_axiom_detail() -> Result<String, String> {
    const TRIPLE_LIMIT: u32 = 49;
    let sizes = prime_powers(256);
    let mut checks: u64 = 0;
    let mut failures: Vec<String> = Vec::new();
    let check = |ok: bool, what: &str, q: u32, failures: &mut Vec<String>| {
        if !ok && failures.len() < 5 {
            failures.push(format!("GF({q}): {what}"));
        }
    };
    for &(p, e) in &sizes {
        let f = Field::new(p, e).map_err(|err| format!("GF({}) construction: {err}", p.pow(e)))?;
        let q = f.q();
        let codes: Vec<u8> = f.codes().collect();
        let one = 1u8;
        for &a in &codes {
            check(f.add_code(a, f.neg_code(a)) == 0, "a + (−a) ≠ 0", q, &mut failures);
            check(f.mul_code(a, one) == a, "a·1 ≠ a", q, &mut failures);
            check(f.pow_code(a, q as u64) == a, "a^q ≠ a", q, &mut failures);
            if a != 0 {
                let ai = f.inv_code(a).map_err(|err| format!("GF({q}) inverse: {err}"))?;
                check(f.mul_code(a, ai) == one, "a·a⁻¹ ≠ 1", q, &mut failures);
            }
            for i in 0..e {
                let frob = f.frobenius_code(a, i).map_err(|err| format!("GF({q}): {err}"))?;
                check(
                    frob == f.pow_code(a, (p as u64).pow(i)),
                    "a^(p^i) disagrees with the Frobenius table",
                    q,
                    &mut failures,
                );
            }
            checks += 3 + e as u64;
        }
        for &a in &codes {
            for &b in &codes {
                check(f.add_code(a, b) == f.add_code(b, a), "a+b ≠ b+a", q, &mut failures);
                check(f.mul_code(a, b) == f.mul_code(b, a), "a·b ≠ b·a", q, &mut failures);
                check(
                    f.sub_code(a, b) == f.add_code(a, f.neg_code(b)),
                    "a−b ≠ a+(−b)",
                    q,
                    &mut failures,
                );
                check(
                    f.pow_code(f.add_code(a, b), p as u64)
                        == f.add_code(f.pow_code(a, p as u64), f.pow_code(b, p as u64)),
                    "(a+b)^p ≠ a^p + b^p",
                    q,
                    &mut failures,
                );
                checks += 4;
            }
        }
        if q <= TRIPLE_LIMIT {
            for &a in &codes {
                for &b in &codes {
                    for &c in &codes {
                        check(
                            f.add_code(f.add_code(a, b), c) == f.add_code(a, f.add_code(b, c)),
                            "(a+b)+c ≠ a+(b+c)",
                            q,
                            &mut failures,
                        );
                        check(
                            f.mul_code(f.mul_code(a, b), c) == f.mul_code(a, f.mul_code(b, c)),
                            "(a·b)·c ≠ a·(b·c)",
                            q,
                            &mut failures,
                        );
                        check(
                            f.mul_code(a, f.add_code(b, c))
                                == f.add_code(f.mul_code(a, b), f.mul_code(a, c)),
                            "a·(b+c) ≠ a·b + a·c",
                            q,
                            &mut failures,
                        );
                        checks += 3;
                    }
                }
            }
        }
    }
    if failures.is_empty() {
        Ok(format!(
            "{} field sizes q ≤ 256, {checks} law instances (triples exhausted for q ≤ {TRIPLE_LIMIT})",
            sizes.len()
        ))
    } else {
        Err(failures.join("; "))
    }
}

/// Row reduction canonicity: reduced form is idempotent, invariant under
/// invertible row mixing, has strictly increasing pivots, and annihilates
/// exactly a complement of the stated rank.
pub fn rref_canonicity_suite() -> SuiteOutcome {
    SuiteOutcome::from("row-reduction canonicity", rref_canonicity_detail())
}

fn rref_canonicity_detail() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5252_4546);
    let mut trials: u64 = 0;
    for q in [2u32, 3, 4, 5, 8, 9] {
        let f = Field::gf(q).map_err(|e| format!("GF({q}): {e}"))?;
        for _ in 0..40 {
            let m = rng.gen_range(1..=7);
            let n = rng.gen_range(1..=7);
            let a = Matrix::random(&f, m, n, &mut rng);
            let r1 = a.rref();
            if r1.matrix.rref().matrix != r1.matrix {
                return Err(format!("GF({q}) {m}×{n}: reduction is not idempotent"));
            }
            if r1.rank != r1.pivots.len()
                || r1.pivots.windows(2).any(|w| w[0] >= w[1])
            {
                return Err(format!("GF({q}) {m}×{n}: pivot bookkeeping inconsistent"));
            }
            let t = loop {
                let cand = Matrix::random(&f, m, m, &mut rng);
                if cand.rref().rank == m {
                    break cand;
                }
            };
            let mixed = t.mul(&a).map_err(|e| e.to_string())?.rref();
            if mixed.matrix != r1.matrix {
                return Err(format!(
                    "GF({q}) {m}×{n}: reduced form changed under an invertible row mix"
                ));
            }
            let ns = a.nullspace();
            if ns.dim() != n - r1.rank {
                return Err(format!("GF({q}) {m}×{n}: rank–nullity mismatch"));
            }
            for row in ns.basis_rows() {
                if a.act(&row).iter().any(|&x| x != 0) {
                    return Err(format!("GF({q}) {m}×{n}: nullspace vector not annihilated"));
                }
            }
            trials += 1;
        }
    }
    Ok(format!("{trials} randomized matrices over six field sizes, all canonical"))
}

/// Every transitive catalog group of degree ≥ 3 yields a heart of dimension
/// n−1 (n odd) or n−2 (n even).
pub fn heart_dimension_suite() -> SuiteOutcome {
    SuiteOutcome::from("heart dimension formula", heart_dimension_detail())
}

fn heart_instances() -> Vec<(&'static str, Vec<u32>)> {
    let mut out: Vec<(&'static str, Vec<u32>)> = Vec::new();
    for n in 3..=16 {
        out.push(("sym", vec![n]));
        out.push(("alt", vec![n]));
        out.push(("cyclic", vec![n]));
        out.push(("dihedral", vec![n]));
    }
    for q in [2u32, 4, 8, 16] {
        out.push(("psl2", vec![q]));
    }
    for q in [3u32, 4, 5, 7, 8, 9, 11, 13, 16] {
        out.push(("agl1", vec![q]));
    }
    out
}

fn heart_dimension_detail() -> Result<String, String> {
    let mut count = 0u32;
    for (name, params) in heart_instances() {
        let label = format!("{name}({})", params[0]);
        let group = catalog::build(name, &params)
            .map_err(|e| format!("{label}: {e}"))?
            .into_group()
            .expect("group families only");
        let h = heart::heart(&group).map_err(|e| format!("{label}: {e}"))?;
        let n = group.degree();
        let expect = if n % 2 == 1 { n - 1 } else { n - 2 };
        if h.dim() != expect {
            return Err(format!("{label}: heart dimension {} ≠ {expect}", h.dim()));
        }
        count += 1;
    }
    Ok(format!("{count} catalog hearts match the n−1 / n−2 formula"))
}

/// For every transitive catalog group of odd degree 5, 7, 9, or 11, the heart
/// has scalar endomorphism ring exactly when the group is 2-transitive.
pub fn odd_degree_suite() -> SuiteOutcome {
    SuiteOutcome::from("odd-degree endomorphism rings", odd_degree_detail())
}

fn odd_degree_detail() -> Result<String, String> {
    let mut groups: Vec<(&'static str, Vec<u32>)> = Vec::new();
    for d in [5u32, 7, 9, 11] {
        groups.push(("sym", vec![d]));
        groups.push(("alt", vec![d]));
        groups.push(("cyclic", vec![d]));
        groups.push(("dihedral", vec![d]));
        groups.push(("agl1", vec![d]));
    }
    groups.push(("psl2", vec![8]));
    let mut count = 0u32;
    for (name, params) in groups {
        let label = format!("{name}({})", params[0]);
        let group = catalog::build(name, &params)
            .map_err(|e| format!("{label}: {e}"))?
            .into_group()
            .expect("group families only");
        let ok = heart::remark_odd_check(&group).map_err(|e| format!("{label}: {e}"))?;
        if !ok {
            return Err(format!(
                "{label}: scalar endomorphism ring does not track 2-transitivity"
            ));
        }
        count += 1;
    }
    Ok(format!("{count} odd-degree groups: End = scalars ⟺ 2-transitive"))
}

/// Hearts of S_n (n = 5..8) are very simple, and their restrictions to the
/// alternating group stay absolutely irreducible.
pub fn alternating_restriction_suite() -> SuiteOutcome {
    SuiteOutcome::from("alternating restrictions", alternating_restriction_detail())
}

fn alternating_restriction_detail() -> Result<String, String> {
    let mut count = 0u32;
    for n in 5u32..=8 {
        let sym_heart = catalog_heart_rep("sym", &[n]).map_err(|e| format!("sym({n}): {e}"))?;
        let diag = very_simple_exact(&sym_heart).map_err(|e| format!("sym({n}): {e}"))?;
        if !diag.is_very_simple() {
            return Err(format!("sym({n}) heart unexpectedly diagnosed {}", diag.bucket()));
        }
        let alt_heart = catalog_heart_rep("alt", &[n]).map_err(|e| format!("alt({n}): {e}"))?;
        if !is_absolutely_irreducible(&alt_heart) {
            return Err(format!("alt({n}) restriction is not absolutely irreducible"));
        }
        count += 1;
    }
    Ok(format!("{count} symmetric hearts very simple; alternating restrictions absolutely irreducible"))
}

/// Runs every suite; `include_slow` extends the seed oracle to dimension 4
/// (65536 seeds per module).
pub fn run_all(include_slow: bool) -> Vec<SuiteOutcome> {
    let oracle_dim = if include_slow { 4 } else { 3 };
    vec![
        field_axiom_suite(),
        rref_canonicity_suite(),
        seed_oracle_suite(oracle_dim),
        heart_dimension_suite(),
        odd_degree_suite(),
        alternating_restriction_suite(),
    ]
}
