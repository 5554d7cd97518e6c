//! Elliptic curves over `F_p` obtained by reducing a fixed long-Weierstrass
//! model over Q, with exact point counting and the Elkies test for a
//! prime `l`.
//!
//! The default model is `y^2 + y = x^3 - x^2` (Cremona 11a3), whose only bad
//! prime is 11. Primes 2 and 3 are excluded throughout: the internal
//! short-form transformation divides by 2 and 3.

pub mod count;
pub mod elkies;

use std::collections::BTreeSet;
use std::sync::OnceLock;

use thiserror::Error;

use crate::ff::nt;

pub use count::{count_points_bsgs, count_points_naive, NAIVE_COUNT_CAP};
pub use elkies::{elkies_count, is_elkies, legendre};

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum EcError {
    #[error("discriminant vanishes: not an elliptic curve")]
    SingularCurve,
    #[error("cannot factor the discriminant; pass the bad primes explicitly")]
    UnfactoredDiscriminant,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime {0} is excluded (2 and 3 are out of scope)")]
    SmallPrime(u64),
    #[error("bad reduction at {0}")]
    BadReduction(u64),
    #[error("naive count requires p <= {NAIVE_COUNT_CAP}, got {0}")]
    NaiveGuard(u64),
    #[error("baby-step giant-step requires p > 229, got {0}")]
    BsgsGuard(u64),
    #[error("prime {0} is excluded from the Elkies range")]
    ExcludedEll(u64),
    #[error("order search did not converge")]
    OrderSearch,
}

/// A long-Weierstrass model `y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6`
/// over Q with integer coefficients, together with its set of bad primes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlobalCurve {
    a: [i64; 5],
    bad_primes: BTreeSet<u64>,
}

impl GlobalCurve {
    /// Coefficients in the order `(a1, a2, a3, a4, a6)`. When `bad_primes`
    /// is `None` they are derived by factoring the discriminant.
    pub fn new(a: [i64; 5], bad_primes: Option<BTreeSet<u64>>) -> Result<GlobalCurve, EcError> {
        let disc = discriminant(&a);
        if disc == 0 {
            return Err(EcError::SingularCurve);
        }
        let bad = match bad_primes {
            Some(b) => b,
            None => factor_abs(disc)?,
        };
        Ok(GlobalCurve { a, bad_primes: bad })
    }

    /// The curve `y^2 + y = x^3 - x^2` (Cremona 11a3), bad prime 11.
    pub fn curve_11a3() -> GlobalCurve {
        GlobalCurve::new([0, -1, 1, 0, 0], None).expect("11a3 is nonsingular")
    }

    pub fn coefficients(&self) -> [i64; 5] {
        self.a
    }

    pub fn bad_primes(&self) -> &BTreeSet<u64> {
        &self.bad_primes
    }

    pub fn discriminant(&self) -> i128 {
        discriminant(&self.a)
    }

    /// Good reduction: prime, at least 5, not a bad prime, and the
    /// discriminant stays nonzero mod p.
    pub fn is_good_prime(&self, p: u64) -> bool {
        p >= 5
            && nt::is_prime(p)
            && !self.bad_primes.contains(&p)
            && self.discriminant().rem_euclid(p as i128) != 0
    }

    /// Reduction mod a good prime.
    pub fn reduce(&self, p: u64) -> Result<CurveModP, EcError> {
        if !nt::is_prime(p) {
            return Err(EcError::NotPrime(p));
        }
        if p < 5 {
            return Err(EcError::SmallPrime(p));
        }
        if self.bad_primes.contains(&p) || self.discriminant().rem_euclid(p as i128) == 0 {
            return Err(EcError::BadReduction(p));
        }
        Ok(CurveModP::reduce_unchecked(self, p))
    }
}

/// Standard invariants `b2, b4, b6, b8` and the discriminant of a
/// long-Weierstrass model, exactly over Z.
fn discriminant(a: &[i64; 5]) -> i128 {
    let [a1, a2, a3, a4, a6] = a.map(i128::from);
    let b2 = a1 * a1 + 4 * a2;
    let b4 = 2 * a4 + a1 * a3;
    let b6 = a3 * a3 + 4 * a6;
    let b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6
}

fn factor_abs(disc: i128) -> Result<BTreeSet<u64>, EcError> {
    let mut n = disc.unsigned_abs();
    let mut out = BTreeSet::new();
    let mut d = 2u128;
    while d * d <= n && d < 10_000_000 {
        if n % d == 0 {
            out.insert(d as u64);
            while n % d == 0 {
                n /= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        if n < u64::MAX as u128 && nt::is_prime(n as u64) {
            out.insert(n as u64);
        } else {
            return Err(EcError::UnfactoredDiscriminant);
        }
    }
    Ok(out)
}

/// The reduction of a [`GlobalCurve`] modulo a good prime `p >= 5`, with the
/// group order cached once computed.
#[derive(Debug)]
pub struct CurveModP {
    p: u64,
    /// `(a1, a2, a3, a4, a6)` reduced mod p.
    a: [u64; 5],
    /// Short-form coefficients `(A, B)` of the isomorphic model
    /// `y^2 = x^3 + A x + B`.
    short: (u64, u64),
    order_cache: OnceLock<u64>,
}

impl Clone for CurveModP {
    fn clone(&self) -> Self {
        let cache = OnceLock::new();
        if let Some(&n) = self.order_cache.get() {
            let _ = cache.set(n);
        }
        CurveModP { p: self.p, a: self.a, short: self.short, order_cache: cache }
    }
}

impl PartialEq for CurveModP {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.a == other.a
    }
}
impl Eq for CurveModP {}

impl CurveModP {
    fn reduce_unchecked(curve: &GlobalCurve, p: u64) -> CurveModP {
        let pm = p as i128;
        let a: Vec<u64> = curve.a.iter().map(|&v| (v as i128).rem_euclid(pm) as u64).collect();
        let a: [u64; 5] = a.try_into().unwrap();
        let short = short_form(&a, p);
        CurveModP { p, a, short, order_cache: OnceLock::new() }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// Reduced coefficients `(a1, a2, a3, a4, a6)`.
    pub fn coefficients(&self) -> [u64; 5] {
        self.a
    }

    /// Coefficients of the isomorphic short model `y^2 = x^3 + Ax + B`.
    pub fn short_coefficients(&self) -> (u64, u64) {
        self.short
    }

    /// Right-hand side minus left-hand side residual at an affine point.
    pub fn residual(&self, x: u64, y: u64) -> u64 {
        let p = self.p as u128;
        let [a1, a2, a3, a4, a6] = self.a.map(u128::from);
        let (x, y) = (x as u128 % p, y as u128 % p);
        let rhs = (((x + a2) % p * x % p + a4) % p * x % p + a6) % p;
        let lhs = (y * y % p + a1 * x % p * y % p + a3 * y % p) % p;
        ((rhs + p - lhs) % p) as u64
    }

    pub fn contains(&self, pt: ProjPoint) -> bool {
        match pt {
            ProjPoint::Infinity => true,
            ProjPoint::Affine(x, y) => self.residual(x, y) == 0,
        }
    }

    /// Group order `#E(F_p)`, cached: naive scan for small `p`, Mestre-style
    /// baby-step giant-step above.
    pub fn order(&self, seed: u64) -> Result<u64, EcError> {
        if let Some(&n) = self.order_cache.get() {
            return Ok(n);
        }
        let n = if self.p <= 400 {
            count::count_points_naive(self)?
        } else {
            count::count_points_bsgs(self, seed)?
        };
        Ok(*self.order_cache.get_or_init(|| n))
    }

    /// Trace of Frobenius `t = p + 1 - #E(F_p)`.
    pub fn trace(&self, seed: u64) -> Result<i64, EcError> {
        let n = self.order(seed)?;
        Ok(self.p as i64 + 1 - n as i64)
    }
}

/// Short Weierstrass coefficients of the isomorphic curve for `p >= 5`:
/// completing the square and depressing the cubic sends the model to
/// `y^2 = x^3 - 27 c4 x - 54 c6`, preserving the point count.
fn short_form(a: &[u64; 5], p: u64) -> (u64, u64) {
    let pm = p as i128;
    let [a1, a2, a3, a4, a6] = a.map(i128::from);
    let b2 = (a1 * a1 + 4 * a2).rem_euclid(pm);
    let b4 = (2 * a4 + a1 * a3).rem_euclid(pm);
    let b6 = (a3 * a3 + 4 * a6).rem_euclid(pm);
    let c4 = (b2 * b2 - 24 * b4).rem_euclid(pm);
    let c6 = (-b2 * b2 % pm * b2 - 216 * b6 + 36 * b2 * b4 % pm).rem_euclid(pm);
    let aa = (-27 * c4).rem_euclid(pm) as u64;
    let bb = (-54 * c6).rem_euclid(pm) as u64;
    (aa, bb)
}

/// A point on a reduced curve: infinity or affine coordinates.
#[derive(Copy, Clone, PartialEq, Eq, Debug, Hash)]
pub enum ProjPoint {
    Infinity,
    Affine(u64, u64),
}

impl ProjPoint {
    pub fn is_infinity(self) -> bool {
        self == ProjPoint::Infinity
    }
}

/// Negation on the long model: `-(x, y) = (x, -y - a1 x - a3)`.
pub fn neg(curve: &CurveModP, pt: ProjPoint) -> ProjPoint {
    match pt {
        ProjPoint::Infinity => ProjPoint::Infinity,
        ProjPoint::Affine(x, y) => {
            let p = curve.p as u128;
            let [a1, _, a3, _, _] = curve.a.map(u128::from);
            let ny = (3 * p - y as u128 - a1 * x as u128 % p - a3) % p;
            ProjPoint::Affine(x, ny as u64)
        }
    }
}

/// Addition on the long model, Silverman's group-law formulas.
pub fn add(curve: &CurveModP, lhs: ProjPoint, rhs: ProjPoint) -> ProjPoint {
    let p = curve.p;
    let pm = p as u128;
    let [a1, a2, a3, a4, _] = curve.a.map(u128::from);
    let (x1, y1) = match lhs {
        ProjPoint::Infinity => return rhs,
        ProjPoint::Affine(x, y) => (x as u128, y as u128),
    };
    let (x2, y2) = match rhs {
        ProjPoint::Infinity => return lhs,
        ProjPoint::Affine(x, y) => (x as u128, y as u128),
    };
    debug_assert!(curve.contains(lhs) && curve.contains(rhs));

    let lambda = if x1 != x2 {
        let num = (y2 + pm - y1) % pm;
        let den = (x2 + pm - x1) % pm;
        num * nt::inv_mod(den as u64, p).expect("x1 != x2") as u128 % pm
    } else {
        // x1 == x2: either opposite points or a doubling
        let neg_y1 = (3 * pm - y1 - a1 * x1 % pm - a3) % pm;
        if y2 == neg_y1 {
            return ProjPoint::Infinity;
        }
        let num = (3 * (x1 * x1 % pm) % pm + 2 * a2 * x1 % pm + a4 + pm - a1 * y1 % pm) % pm;
        let den = (2 * y1 + a1 * x1 % pm + a3) % pm;
        num * nt::inv_mod(den as u64, p).expect("nonzero tangent denominator") as u128 % pm
    };
    let nu = (y1 + pm - lambda * x1 % pm) % pm;
    let x3 = (lambda * lambda % pm + a1 * lambda % pm + 2 * pm - a2 % pm + 2 * pm - x1 - x2) % pm;
    let y3 = (pm - (lambda + a1) * x3 % pm + pm - nu + pm - a3) % pm;
    ProjPoint::Affine(x3 as u64, y3 as u64)
}

/// `n * pt` by double-and-add.
pub fn scalar_mul(curve: &CurveModP, n: u64, pt: ProjPoint) -> ProjPoint {
    let mut acc = ProjPoint::Infinity;
    let mut base = pt;
    let mut k = n;
    while k > 0 {
        if k & 1 == 1 {
            acc = add(curve, acc, base);
        }
        base = add(curve, base, base);
        k >>= 1;
    }
    acc
}
