//! The Elkies test: an odd prime `l` (good for the curve, different from
//! `p`) is Elkies for `E/F_p` exactly when the Frobenius characteristic
//! polynomial `X^2 - t X + p` has a root mod `l`, i.e. when `t^2 - 4p` is a
//! square mod `l` — zero included, since a repeated eigenvalue still spans a
//! stable line.

use crate::ff::nt;

use super::{EcError, GlobalCurve};

/// Legendre symbol by Euler's criterion; `a` may be any integer, `p` an odd
/// prime. Returns 0, 1, or -1.
pub fn legendre(a: i64, p: u64) -> i32 {
    let r = (a as i128).rem_euclid(p as i128) as u64;
    if r == 0 {
        return 0;
    }
    let e = nt::pow_mod(r, (p - 1) / 2, p);
    if e == 1 {
        1
    } else {
        -1
    }
}

/// Tonelli-Shanks square root mod an odd prime; `None` for nonresidues.
pub fn sqrt_mod(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    if a == 0 {
        return Some(0);
    }
    if legendre(a as i64, p) != 1 {
        return None;
    }
    if p % 4 == 3 {
        return Some(nt::pow_mod(a, (p + 1) / 4, p));
    }
    // write p - 1 = q * 2^s with q odd
    let s = (p - 1).trailing_zeros();
    let q = (p - 1) >> s;
    let z = (2..p).find(|&v| legendre(v as i64, p) == -1).expect("nonresidue exists");
    let mut m = s;
    let mut c = nt::pow_mod(z, q, p);
    let mut t = nt::pow_mod(a, q, p);
    let mut r = nt::pow_mod(a, (q + 1) / 2, p);
    while t != 1 {
        let mut i = 0u32;
        let mut t2 = t;
        while t2 != 1 {
            t2 = nt::mul_mod(t2, t2, p);
            i += 1;
        }
        let mut b = c;
        for _ in 0..m - i - 1 {
            b = nt::mul_mod(b, b, p);
        }
        m = i;
        c = nt::mul_mod(b, b, p);
        t = nt::mul_mod(t, c, p);
        r = nt::mul_mod(r, b, p);
    }
    Some(r)
}

/// `t^2 - 4p mod l` for the Legendre test, with exact signed arithmetic.
#[inline]
fn frobenius_disc_mod(t: i64, p: u64, ell: u64) -> u64 {
    let disc = (t as i128) * (t as i128) - 4 * p as i128;
    disc.rem_euclid(ell as i128) as u64
}

/// Elkies test without precondition checks; `ell` must be an odd prime
/// distinct from `p`.
#[inline]
pub(crate) fn is_elkies_unchecked(t: i64, p: u64, ell: u64) -> bool {
    legendre(frobenius_disc_mod(t, p, ell) as i64, ell) >= 0
}

/// Whether the odd prime `ell` is Elkies for a curve over `F_p` with trace
/// `t`. Rejects `ell = 2`, `ell = p`, non-primes, and bad primes of the
/// ambient curve when one is supplied.
pub fn is_elkies(t: i64, p: u64, ell: u64, curve: Option<&GlobalCurve>) -> Result<bool, EcError> {
    if ell == 2 || !nt::is_prime(ell) || ell == p {
        return Err(EcError::ExcludedEll(ell));
    }
    if let Some(c) = curve {
        if c.bad_primes().contains(&ell) {
            return Err(EcError::ExcludedEll(ell));
        }
    }
    Ok(is_elkies_unchecked(t, p, ell))
}

/// Primes in `[lo, hi]` by trial division; intended for the small `l`-ranges
/// of the Elkies count.
pub(crate) fn small_primes_in(lo: u64, hi: u64) -> Vec<u64> {
    (lo.max(2)..=hi).filter(|&n| nt::is_prime(n)).collect()
}

/// `N_e(p, L)`: the number of Elkies primes `l` in `[L, 2L]`, over odd good
/// primes. Requires `p > 2L` so that `l = p` cannot occur.
pub fn elkies_count(curve: &GlobalCurve, p: u64, l_anchor: u64, seed: u64) -> Result<u32, EcError> {
    if l_anchor < 3 || p <= 2 * l_anchor {
        return Err(EcError::ExcludedEll(l_anchor));
    }
    let reduced = curve.reduce(p)?;
    let t = reduced.trace(seed)?;
    let mut n = 0u32;
    for ell in small_primes_in(l_anchor, 2 * l_anchor) {
        if ell == 2 || curve.bad_primes().contains(&ell) {
            continue;
        }
        if is_elkies_unchecked(t, p, ell) {
            n += 1;
        }
    }
    Ok(n)
}
