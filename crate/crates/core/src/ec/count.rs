//! Exact point counting: a direct quadratic-solution scan for small `p`, and
//! Mestre-style order finding for larger `p`.
//!
//! The baby-step giant-step route samples random x-coordinates, lands each
//! on the curve or its quadratic twist, computes the point order inside the
//! Hasse interval, and intersects lcm constraints from both curves (using
//! `#E + #E^twist = 2p + 2`) until a unique group order remains. For
//! `p > 229` the group exponents are large enough that this always resolves.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::ff::nt;

use super::elkies::{legendre, sqrt_mod};
use super::{CurveModP, EcError};

/// Guard for the direct scan.
pub const NAIVE_COUNT_CAP: u64 = 100_000;

/// `#E(F_p) = 1 + sum_x (1 + chi(D(x)))` where `D(x)` is the discriminant of
/// the quadratic in `y`; exact for odd `p`.
pub fn count_points_naive(curve: &CurveModP) -> Result<u64, EcError> {
    let p = curve.p();
    if p > NAIVE_COUNT_CAP {
        return Err(EcError::NaiveGuard(p));
    }
    let pm = p as u128;
    let [a1, a2, a3, a4, a6] = curve.coefficients().map(u128::from);
    let mut n = 1 + p; // infinity plus one solution baseline per x
    for x in 0..p {
        let x = x as u128;
        // complete the square: (2y + a1 x + a3)^2 = (a1 x + a3)^2 + 4 f(x)
        let fx = (((x + a2) % pm * x % pm + a4) % pm * x % pm + a6) % pm;
        let lin = (a1 * x % pm + a3) % pm;
        let d = ((lin * lin % pm + 4 * fx) % pm) as u64;
        match legendre(d as i64, p) {
            1 => n += 1,
            -1 => n -= 1,
            _ => {}
        }
    }
    Ok(n)
}

/// Affine arithmetic on `y^2 = x^3 + a x + b`.
#[derive(Clone, Copy)]
struct ShortCurve {
    p: u64,
    a: u64,
    b: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
enum Pt {
    Inf,
    Aff(u64, u64),
}

impl ShortCurve {
    fn rhs(&self, x: u64) -> u64 {
        let p = self.p as u128;
        let x = x as u128;
        ((x * x % p * x + self.a as u128 * x + self.b as u128) % p) as u64
    }

    fn neg(&self, pt: Pt) -> Pt {
        match pt {
            Pt::Inf => Pt::Inf,
            Pt::Aff(x, y) => Pt::Aff(x, if y == 0 { 0 } else { self.p - y }),
        }
    }

    fn add(&self, lhs: Pt, rhs: Pt) -> Pt {
        let p = self.p;
        let pm = p as u128;
        let (x1, y1) = match lhs {
            Pt::Inf => return rhs,
            Pt::Aff(x, y) => (x as u128, y as u128),
        };
        let (x2, y2) = match rhs {
            Pt::Inf => return lhs,
            Pt::Aff(x, y) => (x as u128, y as u128),
        };
        let lambda = if x1 != x2 {
            let num = (y2 + pm - y1) % pm;
            let den = ((x2 + pm - x1) % pm) as u64;
            num * nt::inv_mod(den, p).expect("x1 != x2") as u128 % pm
        } else {
            if (y1 + y2) % pm == 0 {
                return Pt::Inf;
            }
            let num = (3 * (x1 * x1 % pm) + self.a as u128) % pm;
            let den = ((2 * y1) % pm) as u64;
            num * nt::inv_mod(den, p).expect("not order 2") as u128 % pm
        };
        let x3 = (lambda * lambda % pm + 2 * pm - x1 - x2) % pm;
        let y3 = (lambda * ((x1 + pm - x3) % pm) % pm + pm - y1) % pm;
        Pt::Aff(x3 as u64, y3 as u64)
    }

    fn mul(&self, mut k: u64, pt: Pt) -> Pt {
        let mut acc = Pt::Inf;
        let mut base = pt;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add(acc, base);
            }
            base = self.add(base, base);
            k >>= 1;
        }
        acc
    }
}

/// Finds some `m` in `[lo, hi]` with `m * pt = Inf` by baby-step giant-step,
/// then strips prime factors to get the exact order of `pt`.
fn point_order(curve: &ShortCurve, pt: Pt, lo: u64, hi: u64) -> Result<u64, EcError> {
    if pt == Pt::Inf {
        return Ok(1);
    }
    let width = hi - lo + 1;
    let s = nt::isqrt(width) + 1;
    // baby steps: j * pt for j in 0..s
    let mut baby: HashMap<Pt, u64> = HashMap::with_capacity(s as usize);
    let mut cur = Pt::Inf;
    for j in 0..s {
        baby.entry(cur).or_insert(j);
        cur = curve.add(cur, pt);
    }
    // solve (lo + k) pt = Inf as k pt = -lo pt, k = i s + j
    let target = curve.neg(curve.mul(lo, pt));
    let giant = curve.mul(s, pt); // s * pt
    let mut probe = target;
    let mut multiple = None;
    'outer: for i in 0..=width / s + 1 {
        if let Some(&j) = baby.get(&probe) {
            let k = i * s + j;
            if k <= hi - lo {
                multiple = Some(lo + k);
                break 'outer;
            }
        }
        probe = curve.add(probe, curve.neg(giant));
    }
    let m = multiple.ok_or(EcError::OrderSearch)?;
    debug_assert_eq!(curve.mul(m, pt), Pt::Inf);
    // exact order from the found multiple
    let mut order = m;
    for f in nt::prime_factors(m) {
        while order % f == 0 && curve.mul(order / f, pt) == Pt::Inf {
            order /= f;
        }
    }
    Ok(order)
}

/// Exact `#E(F_p)` for `p > 229` by intersecting order information from the
/// curve and its quadratic twist; deterministic given the seed.
pub fn count_points_bsgs(curve: &CurveModP, seed: u64) -> Result<u64, EcError> {
    let p = curve.p();
    if p <= 229 {
        return Err(EcError::BsgsGuard(p));
    }
    let (a, b) = curve.short_coefficients();
    let e = ShortCurve { p, a, b };
    // least quadratic nonresidue, for the twist map
    let d = (2..p).find(|&v| legendre(v as i64, p) == -1).expect("nonresidue exists");
    let d2 = nt::mul_mod(d, d, p);
    let d3 = nt::mul_mod(d2, d, p);
    let twist = ShortCurve { p, a: nt::mul_mod(a, d2, p), b: nt::mul_mod(b, d3, p) };

    let w = nt::isqrt(4 * p);
    let (lo, hi) = (p + 1 - w, p + 1 + w);
    let mut lcm_e = 1u64;
    let mut lcm_t = 1u64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    for _ in 0..512 {
        // candidate orders: multiples of lcm_e in the Hasse interval whose
        // twist complement is a multiple of lcm_t
        let first = lo.div_ceil(lcm_e) * lcm_e;
        let mut candidates = (first..=hi)
            .step_by(lcm_e as usize)
            .filter(|n| (2 * p + 2 - n) % lcm_t == 0);
        if let (Some(n), None) = (candidates.next(), candidates.next()) {
            return Ok(n);
        }

        let x = rng.gen_range(0..p);
        let fx = e.rhs(x);
        if fx == 0 {
            // (x, 0) has order 2 on E; the twisted point likewise
            lcm_e = num_integer::lcm(lcm_e, 2);
            lcm_t = num_integer::lcm(lcm_t, 2);
            continue;
        }
        if legendre(fx as i64, p) == 1 {
            let y = sqrt_mod(fx, p).expect("quadratic residue");
            let ord = point_order(&e, Pt::Aff(x, y), lo, hi)?;
            lcm_e = num_integer::lcm(lcm_e, ord);
        } else {
            // (d x, sqrt(d^3 f(x))) lies on the twist
            let ty = sqrt_mod(nt::mul_mod(d3, fx, p), p).expect("twisted residue");
            let ord = point_order(&twist, Pt::Aff(nt::mul_mod(d, x, p), ty), lo, hi)?;
            lcm_t = num_integer::lcm(lcm_t, ord);
        }
    }
    Err(EcError::OrderSearch)
}
