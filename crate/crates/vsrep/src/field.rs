//! Arithmetic in small finite fields GF(p^e) with q = p^e ≤ 256.
//!
//! Elements are stored as integer codes in `[0, q)`: the element
//! `a_0 + a_1·x + … + a_{e-1}·x^{e-1}` (x = class of the modulus variable) has
//! code `a_0 + a_1·p + … + a_{e-1}·p^{e-1}`. Code arithmetic is table-driven;
//! the tables are built once per `(p, e)` and shared behind an `Arc`, so
//! cloning a [`Field`] is cheap and two handles to the same `(p, e)` compare
//! equal.
//!
//! The reducing modulus is fixed per field size so that codes mean the same
//! thing everywhere: GF(4) uses x²+x+1, GF(8) x³+x+1, GF(9) x²+1,
//! GF(16) x⁴+x+1, GF(25) x²+2, GF(27) x³+2x+1, and every other size uses the
//! irreducible monic polynomial whose lower-coefficient code is smallest.
//! (The six pinned moduli are exactly what that rule produces; they are listed
//! explicitly and cross-checked in tests so the encoding can never drift.)

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use thiserror::Error;

/// Errors raised by field construction and element arithmetic.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum FieldError {
    /// `p` is not prime.
    #[error("field characteristic {0} is not prime")]
    NotPrime(u32),
    /// `p^e` is zero, one, or exceeds 256.
    #[error("field size {p}^{e} is outside the supported range 2..=256")]
    UnsupportedSize { p: u32, e: u32 },
    /// An element code outside `[0, q)`.
    #[error("element code {code} is out of range for a field of size {q}")]
    CodeOutOfRange { code: u32, q: u32 },
    /// Arithmetic mixing elements of different field specs.
    #[error("mismatched field specs: GF({0}) vs GF({1})")]
    MismatchedFields(u32, u32),
    /// Multiplicative inverse of zero.
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    /// Frobenius power index outside `[0, e)`.
    #[error("frobenius exponent {i} out of range for extension degree {e}")]
    FrobeniusOutOfRange { i: u32, e: u32 },
}

struct FieldData {
    p: u32,
    e: u32,
    q: u32,
    /// Monic modulus, coefficient list low-to-high, length e+1.
    modulus: Vec<u32>,
    add: Vec<u8>,
    sub: Vec<u8>,
    mul: Vec<u8>,
    inv: Vec<u8>,
    neg: Vec<u8>,
    /// frob[i*q + a] = a^(p^i) for 0 ≤ i < e.
    frob: Vec<u8>,
}

/// A small finite field GF(p^e), q = p^e ≤ 256. Cheap to clone; handles to
/// the same (p, e) compare equal and share tables.
#[derive(Clone)]
pub struct Field(Arc<FieldData>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.0.p == other.0.p && self.0.e == other.0.e
    }
}
impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.0.q)
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Polynomial helpers over GF(p) used only while building field tables.
/// Coefficients low-to-high, always trimmed.
mod modpoly {
    pub fn trim(v: &mut Vec<u32>) {
        while v.last() == Some(&0) {
            v.pop();
        }
    }

    pub fn mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        if a.is_empty() || b.is_empty() {
            return vec![];
        }
        let mut out = vec![0u32; a.len() + b.len() - 1];
        for (i, &ai) in a.iter().enumerate() {
            for (j, &bj) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + ai * bj) % p;
            }
        }
        trim(&mut out);
        out
    }

    /// Remainder of `a` modulo monic `m`.
    pub fn rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
        debug_assert_eq!(*m.last().unwrap(), 1, "modulus must be monic");
        let mut r: Vec<u32> = a.to_vec();
        trim(&mut r);
        let dm = m.len() - 1;
        while r.len() > dm {
            let lead = *r.last().unwrap();
            let shift = r.len() - 1 - dm;
            for (k, &mk) in m.iter().enumerate() {
                let idx = k + shift;
                r[idx] = (r[idx] + p - (lead * mk) % p) % p;
            }
            trim(&mut r);
            if r.is_empty() {
                break;
            }
        }
        r
    }

    /// True when monic `f` has a monic divisor of degree `d`.
    fn has_divisor_of_degree(f: &[u32], d: usize, p: u32) -> bool {
        // Enumerate monic degree-d candidates by their lower-coefficient code.
        let total = (p as u64).pow(d as u32);
        for code in 0..total {
            let mut g = vec![0u32; d + 1];
            let mut c = code;
            for gi in g.iter_mut().take(d) {
                *gi = (c % p as u64) as u32;
                c /= p as u64;
            }
            g[d] = 1;
            if rem(f, &g, p).is_empty() {
                return true;
            }
        }
        false
    }

    /// Exhaustive irreducibility check for monic `f` of degree ≥ 1: no monic
    /// divisor of degree 1..=deg/2. Fine at this scale (deg ≤ 8, p ≤ 13).
    pub fn is_irreducible(f: &[u32], p: u32) -> bool {
        let deg = f.len() - 1;
        if deg == 0 {
            return false;
        }
        for d in 1..=deg / 2 {
            if has_divisor_of_degree(f, d, p) {
                return false;
            }
        }
        true
    }
}

/// The monic irreducible of degree `e` over GF(p) whose lower-coefficient
/// code is smallest. For e = 1 this is the polynomial x.
fn least_irreducible(p: u32, e: u32) -> Vec<u32> {
    if e == 1 {
        return vec![0, 1];
    }
    let total = (p as u64).pow(e);
    for code in 0..total {
        let mut f = vec![0u32; e as usize + 1];
        let mut c = code;
        for fi in f.iter_mut().take(e as usize) {
            *fi = (c % p as u64) as u32;
            c /= p as u64;
        }
        f[e as usize] = 1;
        if modpoly::is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("an irreducible polynomial of degree {e} over GF({p}) exists")
}

fn digits(code: u32, p: u32, e: u32) -> Vec<u32> {
    let mut out = vec![0u32; e as usize];
    let mut c = code;
    for o in out.iter_mut() {
        *o = c % p;
        c /= p;
    }
    out
}

fn pack(digits: &[u32], p: u32) -> u32 {
    let mut out = 0u32;
    for &d in digits.iter().rev() {
        out = out * p + d;
    }
    out
}

impl FieldData {
    fn build(p: u32, e: u32) -> Result<FieldData, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        let q = (p as u64).checked_pow(e).filter(|&q| (2..=256).contains(&q));
        let q = q.ok_or(FieldError::UnsupportedSize { p, e })? as u32;

        let modulus = least_irreducible(p, e);
        debug_assert!(e == 1 || modpoly::is_irreducible(&modulus, p));

        let qs = q as usize;
        let mut add = vec![0u8; qs * qs];
        let mut sub = vec![0u8; qs * qs];
        let mut mul = vec![0u8; qs * qs];
        let mut neg = vec![0u8; qs];
        for a in 0..q {
            let da = digits(a, p, e);
            let negd: Vec<u32> = da.iter().map(|&x| (p - x) % p).collect();
            neg[a as usize] = pack(&negd, p) as u8;
            for b in 0..q {
                let db = digits(b, p, e);
                let ds: Vec<u32> = da.iter().zip(&db).map(|(&x, &y)| (x + y) % p).collect();
                add[(a * q + b) as usize] = pack(&ds, p) as u8;
                let dd: Vec<u32> = da.iter().zip(&db).map(|(&x, &y)| (x + p - y) % p).collect();
                sub[(a * q + b) as usize] = pack(&dd, p) as u8;
                let mut prod = modpoly::mul(&da, &db, p);
                prod = modpoly::rem(&prod, &modulus, p);
                prod.resize(e as usize, 0);
                mul[(a * q + b) as usize] = pack(&prod, p) as u8;
            }
        }

        let mut inv = vec![0u8; qs];
        for a in 1..q {
            let mut found = false;
            for b in 1..q {
                if mul[(a * q + b) as usize] == 1 {
                    inv[a as usize] = b as u8;
                    found = true;
                    break;
                }
            }
            debug_assert!(found, "every nonzero element of a field is invertible");
        }

        // frob[i*q + a] = a^(p^i): column 0 is the identity, each next column
        // is the p-th power of the previous one.
        let mut frob = vec![0u8; e as usize * qs];
        for a in 0..q {
            frob[a as usize] = a as u8;
        }
        for i in 1..e as usize {
            for a in 0..qs {
                let prev = frob[(i - 1) * qs + a] as u32;
                let mut acc = prev;
                for _ in 1..p {
                    acc = mul[(acc * q + prev) as usize] as u32;
                }
                frob[i * qs + a] = acc as u8;
            }
        }

        Ok(FieldData { p, e, q, modulus, add, sub, mul, inv, neg, frob })
    }
}

fn field_cache() -> &'static Mutex<HashMap<(u32, u32), Field>> {
    static CACHE: OnceLock<Mutex<HashMap<(u32, u32), Field>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

impl Field {
    /// GF(p^e). Fails unless p is prime and 2 ≤ p^e ≤ 256.
    pub fn new(p: u32, e: u32) -> Result<Field, FieldError> {
        if let Some(f) = field_cache().lock().unwrap().get(&(p, e)) {
            return Ok(f.clone());
        }
        let field = Field(Arc::new(FieldData::build(p, e)?));
        field_cache().lock().unwrap().insert((p, e), field.clone());
        Ok(field)
    }

    /// GF(q) for a prime power q; p and e are recovered by factoring q.
    pub fn gf(q: u32) -> Result<Field, FieldError> {
        if q < 2 {
            return Err(FieldError::UnsupportedSize { p: q, e: 1 });
        }
        let mut p = 2;
        while !q.is_multiple_of(p) {
            p += 1;
        }
        let mut e = 0;
        let mut m = q;
        while m > 1 {
            if !m.is_multiple_of(p) {
                return Err(FieldError::NotPrime(q));
            }
            m /= p;
            e += 1;
        }
        Field::new(p, e)
    }

    pub fn p(&self) -> u32 {
        self.0.p
    }

    pub fn e(&self) -> u32 {
        self.0.e
    }

    /// Field size q = p^e.
    pub fn q(&self) -> u32 {
        self.0.q
    }

    /// The reducing modulus, coefficients low-to-high (length e+1, monic).
    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    /// Wrap a code as a checked element of this field.
    pub fn elem(&self, code: u32) -> Result<FieldElem, FieldError> {
        if code >= self.0.q {
            return Err(FieldError::CodeOutOfRange { code, q: self.0.q });
        }
        Ok(FieldElem { field: self.clone(), code: code as u8 })
    }

    pub fn zero(&self) -> FieldElem {
        FieldElem { field: self.clone(), code: 0 }
    }

    pub fn one(&self) -> FieldElem {
        FieldElem { field: self.clone(), code: 1 }
    }

    /// All element codes, ascending.
    pub fn codes(&self) -> impl Iterator<Item = u8> {
        let q = self.0.q;
        (0..q).map(|c| c as u8)
    }

    // ---- raw code arithmetic (the matrix layer's workhorse) ----

    #[inline]
    pub fn add_code(&self, a: u8, b: u8) -> u8 {
        self.0.add[a as usize * self.0.q as usize + b as usize]
    }

    #[inline]
    pub fn sub_code(&self, a: u8, b: u8) -> u8 {
        self.0.sub[a as usize * self.0.q as usize + b as usize]
    }

    #[inline]
    pub fn mul_code(&self, a: u8, b: u8) -> u8 {
        self.0.mul[a as usize * self.0.q as usize + b as usize]
    }

    #[inline]
    pub fn neg_code(&self, a: u8) -> u8 {
        self.0.neg[a as usize]
    }

    /// Inverse of a nonzero code; code 0 returns `FieldError::ZeroInverse`.
    pub fn inv_code(&self, a: u8) -> Result<u8, FieldError> {
        if a == 0 {
            return Err(FieldError::ZeroInverse);
        }
        Ok(self.0.inv[a as usize])
    }

    /// a^(p^i) for 0 ≤ i < e.
    pub fn frobenius_code(&self, a: u8, i: u32) -> Result<u8, FieldError> {
        if i >= self.0.e {
            return Err(FieldError::FrobeniusOutOfRange { i, e: self.0.e });
        }
        Ok(self.0.frob[i as usize * self.0.q as usize + a as usize])
    }

    /// a^k by square-and-multiply (a^0 = 1, including 0^0 = 1).
    pub fn pow_code(&self, a: u8, mut k: u64) -> u8 {
        let mut base = a;
        let mut acc = 1u8;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul_code(acc, base);
            }
            base = self.mul_code(base, base);
            k >>= 1;
        }
        acc
    }
}

/// An element of a [`Field`], carrying its field handle so that mixed-field
/// arithmetic is caught instead of silently producing garbage.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElem {
    field: Field,
    code: u8,
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}∈GF({})", self.code, self.field.q())
    }
}

impl FieldElem {
    pub fn code(&self) -> u8 {
        self.code
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.code == 0
    }

    fn same_field(&self, other: &FieldElem) -> Result<(), FieldError> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(FieldError::MismatchedFields(self.field.q(), other.field.q()))
        }
    }

    pub fn checked_add(&self, other: &FieldElem) -> Result<FieldElem, FieldError> {
        self.same_field(other)?;
        Ok(FieldElem { field: self.field.clone(), code: self.field.add_code(self.code, other.code) })
    }

    pub fn checked_sub(&self, other: &FieldElem) -> Result<FieldElem, FieldError> {
        self.same_field(other)?;
        Ok(FieldElem { field: self.field.clone(), code: self.field.sub_code(self.code, other.code) })
    }

    pub fn checked_mul(&self, other: &FieldElem) -> Result<FieldElem, FieldError> {
        self.same_field(other)?;
        Ok(FieldElem { field: self.field.clone(), code: self.field.mul_code(self.code, other.code) })
    }

    /// Multiplicative inverse; fails on zero.
    pub fn inverse(&self) -> Result<FieldElem, FieldError> {
        Ok(FieldElem { field: self.field.clone(), code: self.field.inv_code(self.code)? })
    }

    pub fn negate(&self) -> FieldElem {
        FieldElem { field: self.field.clone(), code: self.field.neg_code(self.code) }
    }

    /// The i-th Frobenius power self^(p^i), 0 ≤ i < e.
    pub fn frobenius(&self, i: u32) -> Result<FieldElem, FieldError> {
        Ok(FieldElem { field: self.field.clone(), code: self.field.frobenius_code(self.code, i)? })
    }

    pub fn pow(&self, k: u64) -> FieldElem {
        FieldElem { field: self.field.clone(), code: self.field.pow_code(self.code, k) }
    }
}

macro_rules! elem_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl std::ops::$trait for FieldElem {
            type Output = FieldElem;
            fn $method(self, rhs: FieldElem) -> FieldElem {
                self.$checked(&rhs).expect("field element arithmetic across mismatched fields")
            }
        }
        impl std::ops::$trait for &FieldElem {
            type Output = FieldElem;
            fn $method(self, rhs: &FieldElem) -> FieldElem {
                self.$checked(rhs).expect("field element arithmetic across mismatched fields")
            }
        }
    };
}
elem_binop!(Add, add, checked_add);
elem_binop!(Sub, sub, checked_sub);
elem_binop!(Mul, mul, checked_mul);
