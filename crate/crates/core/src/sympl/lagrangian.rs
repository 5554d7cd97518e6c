//! Enumeration of maximal isotropic (Lagrangian) subspaces and the
//! brute-force split test.
//!
//! Subspaces are walked in reduced row-echelon form: a choice of `h` pivot
//! columns plus arbitrary values in the free positions, which visits every
//! `h`-dimensional subspace of `F_q^{2h}` exactly once. Isotropy is then a
//! matter of `h(h-1)/2` pairings (the form is alternating, so single vectors
//! are automatically null).

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::ff::{Fq, FqElement};

use super::matrix;
use super::{SymplError, SymplecticMatrix};

/// Brute-force enumeration cap: reject when the number of `h`-dimensional
/// subspaces to scan exceeds this.
pub const SUBSPACE_ENUMERATION_CAP: u64 = 10_000_000;

/// One Lagrangian subspace: `h` RREF basis rows of length `2h`, with their
/// pivot columns.
#[derive(Clone, Debug)]
pub struct LagrangianBasis {
    rows: Vec<FqElement>,
    pivots: Vec<usize>,
}

/// All Lagrangian subspaces of `F_q^{2h}`, reusable across many stability
/// queries.
pub struct LagrangianSet {
    field: Fq,
    h: usize,
    bases: Vec<LagrangianBasis>,
}

/// Gaussian binomial coefficient: the number of `k`-dimensional subspaces of
/// `F_q^n`.
pub fn gaussian_binomial(n: u32, k: u32, q: u64) -> BigUint {
    let qb = BigUint::from(q);
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..k {
        num *= qb.pow(n - i) - BigUint::one();
        den *= qb.pow(i + 1) - BigUint::one();
    }
    num / den
}

/// Number of Lagrangian subspaces of `F_q^{2h}`: `prod_{i=1}^h (q^i + 1)`.
pub fn lagrangian_count(h: u32, q: u64) -> BigUint {
    let qb = BigUint::from(q);
    (1..=h).fold(BigUint::one(), |acc, i| acc * (qb.pow(i) + BigUint::one()))
}

impl LagrangianSet {
    /// Enumerates every Lagrangian subspace, guarded by the total number of
    /// `h`-dimensional subspaces to scan.
    pub fn enumerate(field: &Fq, h: usize) -> Result<LagrangianSet, SymplError> {
        let q = field.order();
        let scan = gaussian_binomial(2 * h as u32, h as u32, q);
        if scan > BigUint::from(SUBSPACE_ENUMERATION_CAP) {
            return Err(SymplError::Guard(format!(
                "{scan} subspaces to scan exceeds cap {SUBSPACE_ENUMERATION_CAP}"
            )));
        }
        let n = 2 * h;
        let mut bases = Vec::new();
        let mut pivots = vec![0usize; h];
        enumerate_pivot_sets(n, h, 0, 0, &mut pivots, &mut |pivots| {
            collect_rref(field, h, pivots, &mut bases);
        });
        let expected = lagrangian_count(h as u32, q);
        debug_assert_eq!(BigUint::from(bases.len()), expected);
        if BigUint::from(bases.len()) != expected {
            return Err(SymplError::Guard("lagrangian count mismatch".into()));
        }
        Ok(LagrangianSet { field: field.clone(), h, bases })
    }

    pub fn len(&self) -> usize {
        self.bases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bases.is_empty()
    }

    pub fn bases(&self) -> &[LagrangianBasis] {
        &self.bases
    }

    /// True iff some enumerated Lagrangian is stable under `m`.
    pub fn any_stable_under(&self, m: &SymplecticMatrix) -> bool {
        assert!(m.field() == &self.field && m.half_dim() == self.h);
        let mut scratch = StabilityScratch::new(self.h);
        self.any_stable_raw(m.entries(), &mut scratch)
    }

    pub(crate) fn any_stable_raw(&self, entries: &[FqElement], scratch: &mut StabilityScratch) -> bool {
        self.bases
            .iter()
            .any(|b| is_stable(&self.field, self.h, b, entries, scratch))
    }
}

pub(crate) struct StabilityScratch {
    image: Vec<FqElement>,
}

impl StabilityScratch {
    pub(crate) fn new(h: usize) -> StabilityScratch {
        StabilityScratch { image: vec![FqElement::ZERO; 2 * h] }
    }
}

/// A subspace is stable under `m` iff the image of each basis row reduces to
/// zero against the RREF basis.
fn is_stable(
    f: &Fq,
    h: usize,
    basis: &LagrangianBasis,
    entries: &[FqElement],
    scratch: &mut StabilityScratch,
) -> bool {
    let n = 2 * h;
    for r in 0..h {
        let row = &basis.rows[r * n..(r + 1) * n];
        matrix::matvec_into(f, n, entries, row, &mut scratch.image);
        // subtract image[pivot_j] * row_j; RREF rows vanish at the other pivots
        for j in 0..h {
            let c = scratch.image[basis.pivots[j]];
            if c.is_zero() {
                continue;
            }
            let rj = &basis.rows[j * n..(j + 1) * n];
            for k in 0..n {
                if !rj[k].is_zero() {
                    scratch.image[k] = f.sub(scratch.image[k], f.mul(c, rj[k]));
                }
            }
        }
        if scratch.image.iter().any(|x| !x.is_zero()) {
            return false;
        }
    }
    true
}

fn enumerate_pivot_sets(
    n: usize,
    h: usize,
    start: usize,
    depth: usize,
    pivots: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]),
) {
    if depth == h {
        visit(pivots);
        return;
    }
    for c in start..=n - (h - depth) {
        pivots[depth] = c;
        enumerate_pivot_sets(n, h, c + 1, depth + 1, pivots, visit);
    }
}

/// Walks all RREF bases with the given pivot columns and keeps the isotropic
/// ones.
fn collect_rref(field: &Fq, h: usize, pivots: &[usize], out: &mut Vec<LagrangianBasis>) {
    let n = 2 * h;
    let q = field.order();
    let is_pivot: Vec<bool> = {
        let mut v = vec![false; n];
        for &p in pivots {
            v[p] = true;
        }
        v
    };
    // free positions: (row, col) with col > pivot(row), col not a pivot
    let mut free: Vec<(usize, usize)> = Vec::new();
    for (r, &p) in pivots.iter().enumerate() {
        for c in p + 1..n {
            if !is_pivot[c] {
                free.push((r, c));
            }
        }
    }
    let mut rows = vec![field.zero(); h * n];
    for (r, &p) in pivots.iter().enumerate() {
        rows[r * n + p] = field.one();
    }
    let mut odometer = vec![0u64; free.len()];
    loop {
        for (slot, &(r, c)) in free.iter().enumerate() {
            rows[r * n + c] = field.elem(odometer[slot]).unwrap();
        }
        if is_isotropic(field, h, &rows) {
            out.push(LagrangianBasis { rows: rows.clone(), pivots: pivots.to_vec() });
        }
        // advance
        let mut i = 0;
        while i < odometer.len() {
            odometer[i] += 1;
            if odometer[i] < q {
                break;
            }
            odometer[i] = 0;
            i += 1;
        }
        if i == odometer.len() {
            break;
        }
    }
}

/// Pairwise `psi(r_i, r_j) = 0` for the standard form.
fn is_isotropic(field: &Fq, h: usize, rows: &[FqElement]) -> bool {
    let n = 2 * h;
    for i in 0..h {
        for j in i + 1..h {
            let ri = &rows[i * n..(i + 1) * n];
            let rj = &rows[j * n..(j + 1) * n];
            let mut acc = field.zero();
            for k in 0..h {
                acc = field.add(acc, field.mul(ri[k], rj[h + k]));
                acc = field.sub(acc, field.mul(ri[h + k], rj[k]));
            }
            if !acc.is_zero() {
                return false;
            }
        }
    }
    true
}

/// Decides splitness by scanning all Lagrangian subspaces for one stable
/// under `m`. Guarded by [`SUBSPACE_ENUMERATION_CAP`]; callers doing many
/// queries should build a [`LagrangianSet`] once instead.
pub fn is_split_bruteforce(m: &SymplecticMatrix) -> Result<bool, SymplError> {
    let set = LagrangianSet::enumerate(m.field(), m.half_dim())?;
    Ok(set.any_stable_under(m))
}

/// Total subspace scan count for the guard, as used by the enumeration.
pub fn subspace_scan_count(h: u32, q: u64) -> Option<u64> {
    gaussian_binomial(2 * h, h, q).to_u64()
}
