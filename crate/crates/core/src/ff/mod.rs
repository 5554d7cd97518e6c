//! Exact arithmetic in prime and prime-power finite fields, and univariate
//! polynomial algebra over them.
//!
//! A field is described by an [`Fq`] context (characteristic `p`, extension
//! degree `e`, defining polynomial). Elements are packed integer codes: the
//! element with power-basis coordinates `(c_0, ..., c_{e-1})` has code
//! `sum c_i p^i`, so for prime fields the code is just the residue. All
//! operations are methods on the context; contexts and polynomials are
//! immutable and freely shareable across threads.

pub mod factor;
pub mod nt;
pub mod poly;

pub use factor::{count_irreducibles, is_irreducible, is_separable, random_irreducible};
pub use poly::Poly;

use std::fmt;
use std::sync::Arc;
use thiserror::Error;

/// Largest supported extension degree. Extension contexts are only used at
/// enumeration scale, far below this.
pub const MAX_EXT_DEGREE: u32 = 16;

/// Characteristic bound: products of two reduced residues must fit in u128.
pub const MAX_PRIME: u64 = 1 << 62;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum FfError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime {0} exceeds the 2^62 bound")]
    PrimeTooLarge(u64),
    #[error("extension degree must be between 1 and {MAX_EXT_DEGREE}")]
    BadDegree,
    #[error("field cardinality p^e does not fit the element representation")]
    FieldTooLarge,
    #[error("defining polynomial must be monic irreducible of the stated degree")]
    BadModulus,
    #[error("element code {0} is out of range for this field")]
    BadElement(u64),
    #[error("cannot invert zero")]
    ZeroInversion,
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial must have nonzero constant term")]
    ZeroConstantTerm,
    #[error("lambda0 must be nonzero")]
    ZeroLambda,
    #[error("polynomials belong to different fields")]
    FieldMismatch,
    #[error("enumeration guard exceeded: {0}")]
    Guard(String),
    #[error("malformed serialization: {0}")]
    Parse(String),
}

/// An element of `F_q`, stored as its packed integer code. Codes are only
/// meaningful relative to the [`Fq`] context that produced them.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct FqElement(u64);

impl FqElement {
    pub const ZERO: FqElement = FqElement(0);

    #[inline]
    pub fn code(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

struct FqRepr {
    p: u64,
    e: u32,
    q: u64,
    /// Coefficients of the defining polynomial over `F_p`, constant first,
    /// length `e + 1`, monic. For `e = 1` this is the trivial `X`.
    modulus: Vec<u64>,
    /// `xpow[i]` holds the coefficients of `X^{e+i} mod modulus`, `i < e-1`.
    xpow: Vec<Vec<u64>>,
}

/// A finite field `F_{p^e}`. Cheap to clone; equality compares the field
/// description, not the handle.
#[derive(Clone)]
pub struct Fq(Arc<FqRepr>);

impl PartialEq for Fq {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.e == other.0.e && self.0.modulus == other.0.modulus)
    }
}
impl Eq for Fq {}

impl fmt::Debug for Fq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.e == 1 {
            write!(f, "F_{}", self.0.p)
        } else {
            write!(f, "F_{}^{}", self.0.p, self.0.e)
        }
    }
}

impl fmt::Display for Fq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Fq {
    /// The prime field `F_p`.
    pub fn prime(p: u64) -> Result<Fq, FfError> {
        if !nt::is_prime(p) {
            return Err(FfError::NotPrime(p));
        }
        if p >= MAX_PRIME {
            return Err(FfError::PrimeTooLarge(p));
        }
        Ok(Fq(Arc::new(FqRepr {
            p,
            e: 1,
            q: p,
            modulus: vec![0, 1],
            xpow: Vec::new(),
        })))
    }

    /// `F_{p^e}` with the lexicographically least monic irreducible defining
    /// polynomial of degree `e` (coefficients compared constant term first).
    pub fn extension(p: u64, e: u32) -> Result<Fq, FfError> {
        if e == 0 || e > MAX_EXT_DEGREE {
            return Err(FfError::BadDegree);
        }
        if e == 1 {
            return Fq::prime(p);
        }
        let base = Fq::prime(p)?;
        let fits = (0..e).try_fold(1u64, |acc, _| acc.checked_mul(p).filter(|&v| v < MAX_PRIME));
        if fits.is_none() {
            return Err(FfError::FieldTooLarge);
        }
        // Odometer over (c_0, ..., c_{e-1}) with the last coordinate fastest
        // walks candidates in increasing lexicographic order.
        let mut c = vec![0u64; e as usize];
        loop {
            let mut coeffs: Vec<FqElement> = c.iter().map(|&v| FqElement(v)).collect();
            coeffs.push(FqElement(1));
            let cand = Poly::new(base.clone(), coeffs);
            if factor::is_irreducible(&cand)? {
                let mut modulus = c.clone();
                modulus.push(1);
                return Fq::with_modulus(p, &modulus);
            }
            let mut i = e as usize;
            loop {
                if i == 0 {
                    return Err(FfError::BadModulus); // unreachable: irreducibles exist
                }
                i -= 1;
                c[i] += 1;
                if c[i] < p {
                    break;
                }
                c[i] = 0;
            }
        }
    }

    /// Field with an explicitly given defining polynomial (constant first,
    /// monic, irreducible over `F_p`).
    pub fn with_modulus(p: u64, modulus: &[u64]) -> Result<Fq, FfError> {
        if !nt::is_prime(p) {
            return Err(FfError::NotPrime(p));
        }
        if p >= MAX_PRIME {
            return Err(FfError::PrimeTooLarge(p));
        }
        if modulus.len() < 2 || modulus.len() as u32 - 1 > MAX_EXT_DEGREE {
            return Err(FfError::BadDegree);
        }
        let e = (modulus.len() - 1) as u32;
        if modulus.iter().any(|&c| c >= p) || *modulus.last().unwrap() != 1 {
            return Err(FfError::BadModulus);
        }
        if e == 1 {
            if modulus != [0, 1] {
                return Err(FfError::BadModulus);
            }
            return Fq::prime(p);
        }
        let base = Fq::prime(p)?;
        let m_poly = Poly::new(base, modulus.iter().map(|&c| FqElement(c)).collect());
        if !factor::is_irreducible(&m_poly)? {
            return Err(FfError::BadModulus);
        }
        let mut q = 1u64;
        for _ in 0..e {
            q = q.checked_mul(p).filter(|&v| v < MAX_PRIME).ok_or(FfError::FieldTooLarge)?;
        }
        // xpow[i] = X^{e+i} mod modulus, computed by shifting and reducing.
        let eu = e as usize;
        let mut xpow: Vec<Vec<u64>> = Vec::with_capacity(eu - 1);
        let mut cur: Vec<u64> = modulus[..eu].iter().map(|&c| (p - c) % p).collect();
        xpow.push(cur.clone());
        for _ in 1..eu - 1 {
            // multiply by X: shift, then fold the top coefficient back in
            let top = cur[eu - 1];
            let mut next = vec![0u64; eu];
            for j in (1..eu).rev() {
                next[j] = cur[j - 1];
            }
            if top != 0 {
                for j in 0..eu {
                    next[j] = (next[j] + nt::mul_mod(top, xpow[0][j], p)) % p;
                }
            }
            xpow.push(next.clone());
            cur = next;
        }
        Ok(Fq(Arc::new(FqRepr {
            p,
            e,
            q,
            modulus: modulus.to_vec(),
            xpow,
        })))
    }

    #[inline]
    pub fn p(&self) -> u64 {
        self.0.p
    }

    #[inline]
    pub fn ext_degree(&self) -> u32 {
        self.0.e
    }

    /// Field cardinality `q = p^e`.
    #[inline]
    pub fn order(&self) -> u64 {
        self.0.q
    }

    /// Coefficients of the defining polynomial, constant term first.
    pub fn modulus_coeffs(&self) -> &[u64] {
        &self.0.modulus
    }

    /// Header for the serialization format: `q=<p>^<e>;modulus=<coeffs>`.
    pub fn header(&self) -> String {
        let coeffs: Vec<String> = self.0.modulus.iter().map(|c| c.to_string()).collect();
        format!("q={}^{};modulus={}", self.0.p, self.0.e, coeffs.join(","))
    }

    /// Parse a header produced by [`Fq::header`].
    pub fn from_header(s: &str) -> Result<Fq, FfError> {
        let err = |m: &str| FfError::Parse(m.to_string());
        let rest = s.strip_prefix("q=").ok_or_else(|| err("missing q="))?;
        let (qpart, mpart) = rest.split_once(";modulus=").ok_or_else(|| err("missing modulus="))?;
        let (ps, es) = qpart.split_once('^').ok_or_else(|| err("missing ^"))?;
        let p: u64 = ps.parse().map_err(|_| err("bad prime"))?;
        let _e: u32 = es.parse().map_err(|_| err("bad degree"))?;
        let modulus: Result<Vec<u64>, _> = mpart.split(',').map(|t| t.trim().parse::<u64>()).collect();
        Fq::with_modulus(p, &modulus.map_err(|_| err("bad modulus coefficient"))?)
    }

    pub fn zero(&self) -> FqElement {
        FqElement(0)
    }

    pub fn one(&self) -> FqElement {
        FqElement(1 % self.0.q)
    }

    /// Element from a validated packed code.
    pub fn elem(&self, code: u64) -> Result<FqElement, FfError> {
        if code < self.0.q {
            Ok(FqElement(code))
        } else {
            Err(FfError::BadElement(code))
        }
    }

    /// Embed an integer into the prime subfield.
    pub fn from_int(&self, n: i64) -> FqElement {
        FqElement((n as i128).rem_euclid(self.0.p as i128) as u64)
    }

    /// Element from power-basis coordinates (length at most `e`).
    pub fn from_coeffs(&self, coords: &[u64]) -> Result<FqElement, FfError> {
        if coords.len() > self.0.e as usize || coords.iter().any(|&c| c >= self.0.p) {
            return Err(FfError::BadElement(u64::MAX));
        }
        let mut code = 0u64;
        for &c in coords.iter().rev() {
            code = code * self.0.p + c;
        }
        Ok(FqElement(code))
    }

    /// Power-basis coordinates of an element, length `e`.
    pub fn coeffs(&self, a: FqElement) -> Vec<u64> {
        let mut v = a.0;
        (0..self.0.e)
            .map(|_| {
                let c = v % self.0.p;
                v /= self.0.p;
                c
            })
            .collect()
    }

    /// All field elements in code order.
    pub fn elements(&self) -> impl Iterator<Item = FqElement> {
        (0..self.0.q).map(FqElement)
    }

    /// Nonzero field elements in code order.
    pub fn units(&self) -> impl Iterator<Item = FqElement> {
        (1..self.0.q).map(FqElement)
    }

    #[inline]
    fn decode(&self, a: FqElement, out: &mut [u64]) {
        let mut v = a.0;
        for slot in out.iter_mut() {
            *slot = v % self.0.p;
            v /= self.0.p;
        }
    }

    #[inline]
    fn encode(&self, digits: &[u64]) -> FqElement {
        let mut code = 0u64;
        for &c in digits.iter().rev() {
            code = code * self.0.p + c;
        }
        FqElement(code)
    }

    pub fn add(&self, a: FqElement, b: FqElement) -> FqElement {
        let r = &*self.0;
        if r.e == 1 {
            let s = a.0 + b.0;
            return FqElement(if s >= r.p { s - r.p } else { s });
        }
        let e = r.e as usize;
        let mut da = [0u64; MAX_EXT_DEGREE as usize];
        let mut db = [0u64; MAX_EXT_DEGREE as usize];
        self.decode(a, &mut da[..e]);
        self.decode(b, &mut db[..e]);
        for i in 0..e {
            da[i] += db[i];
            if da[i] >= r.p {
                da[i] -= r.p;
            }
        }
        self.encode(&da[..e])
    }

    pub fn neg(&self, a: FqElement) -> FqElement {
        let r = &*self.0;
        if r.e == 1 {
            return FqElement(if a.0 == 0 { 0 } else { r.p - a.0 });
        }
        let e = r.e as usize;
        let mut da = [0u64; MAX_EXT_DEGREE as usize];
        self.decode(a, &mut da[..e]);
        for d in da[..e].iter_mut() {
            if *d != 0 {
                *d = r.p - *d;
            }
        }
        self.encode(&da[..e])
    }

    pub fn sub(&self, a: FqElement, b: FqElement) -> FqElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FqElement, b: FqElement) -> FqElement {
        let r = &*self.0;
        if r.e == 1 {
            return FqElement(nt::mul_mod(a.0, b.0, r.p));
        }
        if a.0 == 0 || b.0 == 0 {
            return FqElement(0);
        }
        let e = r.e as usize;
        let mut da = [0u64; MAX_EXT_DEGREE as usize];
        let mut db = [0u64; MAX_EXT_DEGREE as usize];
        self.decode(a, &mut da[..e]);
        self.decode(b, &mut db[..e]);
        let mut prod = [0u64; 2 * MAX_EXT_DEGREE as usize];
        for i in 0..e {
            if da[i] == 0 {
                continue;
            }
            for j in 0..e {
                if db[j] != 0 {
                    prod[i + j] = (prod[i + j] + nt::mul_mod(da[i], db[j], r.p)) % r.p;
                }
            }
        }
        for k in (e..2 * e - 1).rev() {
            let c = prod[k];
            if c != 0 {
                let row = &r.xpow[k - e];
                for j in 0..e {
                    prod[j] = (prod[j] + nt::mul_mod(c, row[j], r.p)) % r.p;
                }
            }
        }
        self.encode(&prod[..e])
    }

    pub fn pow(&self, a: FqElement, mut exp: u64) -> FqElement {
        let mut base = a;
        let mut acc = self.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: FqElement) -> Result<FqElement, FfError> {
        if a.0 == 0 {
            return Err(FfError::ZeroInversion);
        }
        if self.0.e == 1 {
            return Ok(FqElement(nt::inv_mod(a.0, self.0.p).expect("nonzero residue")));
        }
        Ok(self.pow(a, self.0.q - 2))
    }

    pub fn div(&self, a: FqElement, b: FqElement) -> Result<FqElement, FfError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// The inverse of the Frobenius map, `a -> a^(p^(e-1))`.
    pub fn pth_root(&self, a: FqElement) -> FqElement {
        if self.0.e == 1 {
            return a;
        }
        self.pow(a, self.0.q / self.0.p)
    }
}
