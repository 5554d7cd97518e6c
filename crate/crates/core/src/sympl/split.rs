//! Split detection through the characteristic polynomial: `m` stabilizes a
//! Lagrangian iff `chi_m` factors as `P * Ptilde^{lambda0}` — unconditionally
//! in one direction, and conversely whenever `chi_m` is separable, or in any
//! case for `h <= 2`. For `h >= 3` with inseparable `chi_m` the converse is
//! an open question, so the test reports `Unknown` there rather than
//! guessing.

use std::collections::BTreeMap;

use crate::ff::{factor, FfError, FqElement, Poly};

use super::SymplecticMatrix;

/// Three-valued outcome of the characteristic-polynomial route.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum SplitVerdict {
    Split,
    NotSplit,
    /// `chi_m` inseparable with `h >= 3`: the polynomial criterion is not
    /// known to decide; use the Lagrangian brute force.
    Unknown,
}

impl SplitVerdict {
    pub fn as_bool(self) -> Option<bool> {
        match self {
            SplitVerdict::Split => Some(true),
            SplitVerdict::NotSplit => Some(false),
            SplitVerdict::Unknown => None,
        }
    }
}

/// True iff the multiset of irreducible factors of `chi` can be perfectly
/// matched into reciprocal pairs `{Q, Qtilde^{lambda0}}`, i.e. iff
/// `chi = P * Ptilde^{lambda0}` for some `P`. Self-reciprocal factors must
/// occur with even multiplicity; the reciprocal map is an involution on
/// monic irreducibles, so matching multiplicities pairwise is exact.
pub fn has_reciprocal_pairing(chi: &Poly, lambda0: FqElement) -> Result<bool, FfError> {
    let facs = factor::factor(chi)?;
    let mut mult: BTreeMap<Vec<u64>, (Poly, u32)> = BTreeMap::new();
    for (p, m) in facs {
        let key: Vec<u64> = p.coeffs().iter().map(|c| c.code()).collect();
        mult.insert(key, (p, m));
    }
    let keys: Vec<Vec<u64>> = mult.keys().cloned().collect();
    for key in keys {
        let Some(&(ref p, m)) = mult.get(&key) else {
            continue;
        };
        if m == 0 {
            continue;
        }
        let p = p.clone();
        if p.coeff(0).is_zero() {
            // X divides chi: impossible for an invertible matrix, and such a
            // factor has no reciprocal partner
            return Ok(false);
        }
        let rec = p.lambda_reciprocal(lambda0)?;
        if rec == p {
            if m % 2 != 0 {
                return Ok(false);
            }
            mult.get_mut(&key).unwrap().1 = 0;
        } else {
            let rkey: Vec<u64> = rec.coeffs().iter().map(|c| c.code()).collect();
            match mult.get(&rkey) {
                Some(&(_, rm)) if rm == m => {
                    mult.get_mut(&key).unwrap().1 = 0;
                    mult.get_mut(&rkey).unwrap().1 = 0;
                }
                _ => return Ok(false),
            }
        }
    }
    Ok(true)
}

/// The characteristic-polynomial split test.
///
/// * `chi_m` separable: the pairing criterion decides exactly.
/// * `chi_m` inseparable, `h <= 2`: the converse holds class by class in
///   `GSp_4`, so the pairing criterion still decides.
/// * `chi_m` inseparable, `h >= 3`: returns [`SplitVerdict::Unknown`].
pub fn is_split_charpoly(m: &SymplecticMatrix) -> SplitVerdict {
    let chi = m.char_poly();
    let separable = factor::is_separable(&chi).expect("chi is nonzero");
    if !separable && m.half_dim() > 2 {
        return SplitVerdict::Unknown;
    }
    let paired = has_reciprocal_pairing(&chi, m.multiplier()).expect("chi has unit constant term");
    if paired {
        SplitVerdict::Split
    } else {
        SplitVerdict::NotSplit
    }
}
