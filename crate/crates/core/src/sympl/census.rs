//! Exhaustive census of the split locus, and the exact/asymptotic counts it
//! cross-validates.
//!
//! For `2h = 2` the census scans all `q^4` matrices (every invertible 2x2
//! matrix is a similitude with multiplier its determinant). For `2h >= 4`
//! scanning all matrices is infeasible, so `Sp_{2h}(F_q)` is enumerated by
//! breadth-first closure of a transvection generating set — verified against
//! the order formula — and each multiplier fiber is swept as a coset
//! `Diag(mu I_h, I_h) * Sp`. Every element is classified with the Lagrangian
//! brute force, never the polynomial criterion, so the census is an
//! independent oracle for the counting formulas.

use std::collections::{HashSet, VecDeque};
use std::io::Write as _;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::comb::{self, Partition};
use crate::ff::{self, nt, Fq, FqElement, Poly};

use super::lagrangian::{LagrangianSet, StabilityScratch};
use super::matrix;
use super::{multiplier_section, transvection, SymplError};

/// Census guard on the number of group elements to classify.
pub const GROUP_ORDER_CAP: u64 = 200_000_000;

/// One line of the census: exact split counts for a multiplier fiber.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusRow {
    pub q: u64,
    pub h: u32,
    /// Packed element code of the multiplier.
    pub lambda0: u64,
    pub split_sep: u64,
    pub split_insep: u64,
    pub total: u64,
}

impl CensusRow {
    pub fn split_total(&self) -> u64 {
        self.split_sep + self.split_insep
    }
}

/// Sum of split counts across rows (all multipliers).
pub fn sum_split(rows: &[CensusRow]) -> u64 {
    rows.iter().map(CensusRow::split_total).sum()
}

/// Exact census of `Split_{2h}(F_q)(lambda0)`, one row per multiplier (or a
/// single row when `lambda0` is fixed). `shards` controls how the
/// enumeration space is partitioned; the result is independent of it.
pub fn count_split_exhaustive(
    field: &Fq,
    h: u32,
    lambda0: Option<FqElement>,
    shards: usize,
) -> Result<Vec<CensusRow>, SymplError> {
    let q = field.order();
    let order = comb::gsp_order(q, h);
    if order > BigUint::from(GROUP_ORDER_CAP) {
        return Err(SymplError::Guard(format!(
            "#GSp_{}(F_{q}) = {order} exceeds census cap {GROUP_ORDER_CAP}",
            2 * h
        )));
    }
    if let Some(l0) = lambda0 {
        if l0.is_zero() {
            return Err(SymplError::Field(ff::FfError::ZeroLambda));
        }
    }
    let shards = shards.max(1);
    match h {
        1 => census_h1(field, lambda0, shards),
        2 | 3 => census_coset(field, h, lambda0, shards),
        _ => Err(SymplError::Guard("census supports h <= 3".into())),
    }
}

fn census_h1(field: &Fq, lambda0: Option<FqElement>, shards: usize) -> Result<Vec<CensusRow>, SymplError> {
    let q = field.order();
    let lagr = LagrangianSet::enumerate(field, 1)?;
    let total = q * q * q * q;
    let chunk = total.div_ceil(shards as u64);
    let ranges: Vec<(u64, u64)> = (0..shards as u64)
        .map(|s| (s * chunk, ((s + 1) * chunk).min(total)))
        .filter(|(lo, hi)| lo < hi)
        .collect();
    let partials: Vec<Vec<[u64; 3]>> = ranges
        .par_iter()
        .map(|&(lo, hi)| {
            let f = field;
            let mut counts = vec![[0u64; 3]; q as usize];
            let mut scratch = StabilityScratch::new(1);
            let mut entries = [f.zero(); 4];
            for code in lo..hi {
                let mut v = code;
                for slot in entries.iter_mut() {
                    *slot = f.elem(v % q).unwrap();
                    v /= q;
                }
                // multiplier of a 2x2 similitude is its determinant
                let det = f.sub(f.mul(entries[0], entries[3]), f.mul(entries[1], entries[2]));
                if det.is_zero() {
                    continue;
                }
                if lambda0.map_or(false, |l0| det != l0) {
                    continue;
                }
                classify(f, 1, &entries, &lagr, &mut scratch, &mut counts[det.code() as usize]);
            }
            counts
        })
        .collect();
    Ok(merge_rows(field, 1, lambda0, partials))
}

fn census_coset(field: &Fq, h: u32, lambda0: Option<FqElement>, shards: usize) -> Result<Vec<CensusRow>, SymplError> {
    let q = field.order();
    let n = 2 * h as usize;
    let sp = enumerate_sp(field, h)?;
    let lagr = LagrangianSet::enumerate(field, h as usize)?;
    let lambdas: Vec<FqElement> = field
        .units()
        .filter(|&mu| lambda0.map_or(true, |l0| mu == l0))
        .collect();
    let sections: Vec<Vec<FqElement>> = lambdas
        .iter()
        .map(|&mu| multiplier_section(field, h as usize, mu).entries().to_vec())
        .collect();
    let chunk = sp.len().div_ceil(shards);
    let partials: Vec<Vec<[u64; 3]>> = sp
        .par_chunks(chunk.max(1))
        .map(|codes| {
            let f = field;
            let mut counts = vec![[0u64; 3]; q as usize];
            let mut scratch = StabilityScratch::new(h as usize);
            let mut s_entries = vec![f.zero(); n * n];
            let mut m_entries = vec![f.zero(); n * n];
            for &code in codes {
                unpack(f, q, code, &mut s_entries);
                for (mu, section) in lambdas.iter().zip(&sections) {
                    // section * s scales the top h rows of s by mu
                    for r in 0..n {
                        let scale = section[matrix::idx(n, r, r)];
                        for c in 0..n {
                            let v = s_entries[matrix::idx(n, r, c)];
                            m_entries[matrix::idx(n, r, c)] =
                                if r < h as usize { f.mul(scale, v) } else { v };
                        }
                    }
                    classify(f, h as usize, &m_entries, &lagr, &mut scratch, &mut counts[mu.code() as usize]);
                }
            }
            counts
        })
        .collect();
    Ok(merge_rows(field, h, lambda0, partials))
}

/// Classify one group element: Lagrangian stability for splitness, gcd with
/// the derivative of the characteristic polynomial for separability.
#[inline]
fn classify(
    f: &Fq,
    h: usize,
    entries: &[FqElement],
    lagr: &LagrangianSet,
    scratch: &mut StabilityScratch,
    slot: &mut [u64; 3],
) {
    slot[2] += 1;
    if lagr.any_stable_raw(entries, scratch) {
        let chi = matrix::char_poly_raw(f, 2 * h, entries);
        if ff::is_separable(&chi).expect("chi nonzero") {
            slot[0] += 1;
        } else {
            slot[1] += 1;
        }
    }
}

fn merge_rows(field: &Fq, h: u32, lambda0: Option<FqElement>, partials: Vec<Vec<[u64; 3]>>) -> Vec<CensusRow> {
    let q = field.order();
    let mut merged = vec![[0u64; 3]; q as usize];
    for partial in partials {
        for (slot, add) in merged.iter_mut().zip(partial) {
            slot[0] += add[0];
            slot[1] += add[1];
            slot[2] += add[2];
        }
    }
    field
        .units()
        .filter(|&mu| lambda0.map_or(true, |l0| mu == l0))
        .map(|mu| {
            let slot = merged[mu.code() as usize];
            CensusRow {
                q,
                h,
                lambda0: mu.code(),
                split_sep: slot[0],
                split_insep: slot[1],
                total: slot[2],
            }
        })
        .collect()
}

/// Enumerates `Sp_{2h}(F_q)` as sorted packed matrix codes, by breadth-first
/// closure of symplectic transvections in the coordinate directions `e_i`
/// and `e_i + e_j`, with transvection scalars running over a power basis of
/// `F_q`. The closure size is checked against the order formula, so an
/// insufficient generating set fails loudly instead of undercounting.
pub fn enumerate_sp(field: &Fq, h: u32) -> Result<Vec<u64>, SymplError> {
    let q = field.order();
    let n = 2 * h as usize;
    let mut pack_cap = 1u64;
    for _ in 0..n * n {
        pack_cap = pack_cap
            .checked_mul(q)
            .ok_or_else(|| SymplError::Guard("matrix codes do not fit in u64".into()))?;
    }
    let expected = comb::sp_order(q, h);
    let expected = expected
        .to_u64()
        .filter(|&v| v <= GROUP_ORDER_CAP)
        .ok_or_else(|| SymplError::Guard(format!("#Sp exceeds census cap {GROUP_ORDER_CAP}")))?;

    let mut gens: Vec<Vec<FqElement>> = Vec::new();
    let mut dirs: Vec<Vec<FqElement>> = Vec::new();
    for i in 0..n {
        let mut v = vec![field.zero(); n];
        v[i] = field.one();
        dirs.push(v);
    }
    for i in 0..n {
        for j in i + 1..n {
            let mut v = vec![field.zero(); n];
            v[i] = field.one();
            v[j] = field.one();
            dirs.push(v);
        }
    }
    let basis_scalars: Vec<FqElement> = (0..field.ext_degree())
        .map(|j| field.elem(field.p().pow(j)).unwrap())
        .collect();
    for v in &dirs {
        for &c in &basis_scalars {
            gens.push(transvection(field, h as usize, v, c).entries().to_vec());
        }
    }

    let start = pack(q, &matrix::identity(field, n));
    let mut visited: HashSet<u64> = HashSet::with_capacity(expected as usize * 2);
    let mut queue: VecDeque<u64> = VecDeque::new();
    visited.insert(start);
    queue.push_back(start);
    let mut m = vec![field.zero(); n * n];
    let mut prod = vec![field.zero(); n * n];
    while let Some(code) = queue.pop_front() {
        unpack(field, q, code, &mut m);
        for g in &gens {
            mul_into(field, n, &m, g, &mut prod);
            let pc = pack(q, &prod);
            if visited.insert(pc) {
                queue.push_back(pc);
            }
        }
    }
    if visited.len() as u64 != expected {
        return Err(SymplError::Guard(format!(
            "transvection closure produced {} elements, expected {expected}",
            visited.len()
        )));
    }
    let mut out: Vec<u64> = visited.into_iter().collect();
    out.sort_unstable();
    Ok(out)
}

fn mul_into(f: &Fq, n: usize, a: &[FqElement], b: &[FqElement], out: &mut [FqElement]) {
    for v in out.iter_mut() {
        *v = f.zero();
    }
    for r in 0..n {
        for k in 0..n {
            let v = a[matrix::idx(n, r, k)];
            if v.is_zero() {
                continue;
            }
            for c in 0..n {
                out[matrix::idx(n, r, c)] =
                    f.add(out[matrix::idx(n, r, c)], f.mul(v, b[matrix::idx(n, k, c)]));
            }
        }
    }
}

pub(crate) fn pack(q: u64, entries: &[FqElement]) -> u64 {
    let mut code = 0u64;
    for e in entries.iter().rev() {
        code = code * q + e.code();
    }
    code
}

pub(crate) fn unpack(field: &Fq, q: u64, mut code: u64, out: &mut [FqElement]) {
    for slot in out.iter_mut() {
        *slot = field.elem(code % q).unwrap();
        code /= q;
    }
}

/// Counts `#I` — tuples of irreducible polynomials `(P_1, ..., P_r)` with
/// `deg P_i = d_i` whose product `P_1 ... P_r Ptilde_1 ... Ptilde_r` is
/// separable — by exhaustive enumeration, and derives `#D = #I / (2^r *
/// prod_k #{j : d_j = k}!)`, the number of separable split conjugacy classes
/// with that degree partition.
pub fn separable_class_counts(
    field: &Fq,
    partition: &Partition,
    lambda0: FqElement,
) -> Result<(u64, u64), SymplError> {
    if lambda0.is_zero() {
        return Err(SymplError::Field(ff::FfError::ZeroLambda));
    }
    let q = field.order();
    let max_d = *partition.parts().iter().max().unwrap();
    if q.checked_pow(max_d).map_or(true, |v| v > 10_000_000) {
        return Err(SymplError::Guard(format!("q^max_d = {q}^{max_d} exceeds 10^7")));
    }
    // irreducibles by degree, excluding X (no reciprocal)
    let mut lists: Vec<Vec<Poly>> = Vec::new();
    let mut recs: Vec<Vec<Poly>> = Vec::new();
    for &d in partition.parts() {
        let list: Vec<Poly> = ff::factor::enumerate_irreducibles(field, d, 10_000_000)
            .map_err(SymplError::Field)?
            .into_iter()
            .filter(|p| !p.coeff(0).is_zero())
            .collect();
        let rec: Result<Vec<Poly>, _> = list.iter().map(|p| p.lambda_reciprocal(lambda0)).collect();
        recs.push(rec.map_err(SymplError::Field)?);
        lists.push(list);
    }
    let tuple_count: u128 = lists.iter().map(|l| l.len() as u128).product();
    if tuple_count > 100_000_000 {
        return Err(SymplError::Guard(format!("{tuple_count} tuples to scan")));
    }
    let r = partition.len();
    let mut indices = vec![0usize; r];
    let mut i_count = 0u64;
    if lists.iter().all(|l| !l.is_empty()) {
        'outer: loop {
            // all 2r polynomials pairwise distinct <=> the product is separable
            let mut ok = true;
            'check: for a in 0..r {
                let pa = &lists[a][indices[a]];
                let ra = &recs[a][indices[a]];
                if pa == ra {
                    ok = false;
                    break;
                }
                for b in 0..a {
                    let pb = &lists[b][indices[b]];
                    let rb = &recs[b][indices[b]];
                    if pa == pb || pa == rb || ra == pb || ra == rb {
                        ok = false;
                        break 'check;
                    }
                }
            }
            if ok {
                i_count += 1;
            }
            let mut k = 0;
            loop {
                if k == r {
                    break 'outer;
                }
                indices[k] += 1;
                if indices[k] < lists[k].len() {
                    break;
                }
                indices[k] = 0;
                k += 1;
            }
        }
    }
    let mut fiber = 1u64 << r;
    for k in 1..=partition.sum() {
        let cnt = partition.count_of(k) as u64;
        fiber *= (1..=cnt).product::<u64>().max(1);
    }
    if i_count % fiber != 0 {
        return Err(SymplError::Guard(format!(
            "fiber size {fiber} does not divide #I = {i_count}"
        )));
    }
    Ok((i_count, i_count / fiber))
}

/// Centralizer order of a separable split class with the given degree
/// partition: `(q - 1) * prod_i (q^{d_i} - 1)`. The class size is
/// `#GSp_{2h}(F_q)` divided by this.
pub fn centralizer_order_split_separable(partition: &Partition, q: u64) -> BigUint {
    let qb = BigUint::from(q);
    let mut order = &qb - BigUint::one();
    for &d in partition.parts() {
        order *= qb.pow(d) - BigUint::one();
    }
    order
}

/// Exact cardinality of `Split_4(F_ell)` over all multipliers, for odd prime
/// `ell`: `(3 ell^3 + 7 ell^2 + 7 ell + 11)(ell + 1)(ell - 1)^3 ell^4 / 8`.
pub fn count_split_gsp4_formula(ell: u64) -> Result<BigUint, SymplError> {
    if ell == 2 || !nt::is_prime(ell) {
        return Err(SymplError::Guard("formula requires an odd prime".into()));
    }
    let l = BigUint::from(ell);
    let head = BigUint::from(3u32) * l.pow(3)
        + BigUint::from(7u32) * l.pow(2)
        + BigUint::from(7u32) * &l
        + BigUint::from(11u32);
    let num = head * (&l + BigUint::one()) * (&l - BigUint::one()).pow(3) * l.pow(4);
    let (quo, rem) = num_integer::Integer::div_rem(&num, &BigUint::from(8u32));
    debug_assert!(rem.is_zero());
    Ok(quo)
}

/// Leading term of the per-multiplier split count:
/// `alpha_h * q^{f(h) - 1}` as an exact rational.
pub fn count_split_asymptotic(q: u64, h: u32) -> BigRational {
    let a = comb::alpha(h).expect("h >= 1");
    let scale = BigUint::from(q).pow((comb::gsp_order_degree(h) - 1) as u32);
    a * BigRational::from_integer(scale.into())
}

/// Census CSV: field header line, column header, one row per multiplier.
pub fn census_csv_string(field: &Fq, rows: &[CensusRow]) -> String {
    let mut s = String::new();
    s.push_str(&format!("# {}\n", field.header()));
    s.push_str("q,h,lambda0,split_sep,split_insep,total\n");
    for r in rows {
        s.push_str(&format!(
            "{},{},{},{},{},{}\n",
            r.q, r.h, r.lambda0, r.split_sep, r.split_insep, r.total
        ));
    }
    s
}

pub fn write_census_csv(path: &str, field: &Fq, rows: &[CensusRow]) -> std::io::Result<()> {
    let mut file = std::fs::File::create(path)?;
    file.write_all(census_csv_string(field, rows).as_bytes())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sympl::multiplier_of;

    #[test]
    fn h1_determinant_is_the_multiplier() {
        // the det fast path agrees with the general similitude check on all
        // of GL_2(F_3)
        let f3 = Fq::prime(3).unwrap();
        let mut n_invertible = 0;
        for code in 0..81u64 {
            let mut entries = [f3.zero(); 4];
            unpack(&f3, 3, code, &mut entries);
            let det = f3.sub(f3.mul(entries[0], entries[3]), f3.mul(entries[1], entries[2]));
            match multiplier_of(&f3, 1, &entries) {
                Ok(lam) => {
                    assert_eq!(lam, det);
                    n_invertible += 1;
                }
                Err(_) => assert!(det.is_zero()),
            }
        }
        assert_eq!(n_invertible, 48);
    }

    #[test]
    fn census_h1_f3_totals() {
        let f3 = Fq::prime(3).unwrap();
        let rows = count_split_exhaustive(&f3, 1, None, 3).unwrap();
        assert_eq!(rows.len(), 2);
        // each multiplier fiber is a coset of SL_2(F_3), order 24
        for row in &rows {
            assert_eq!(row.total, 24);
            assert!(row.split_total() <= row.total);
        }
        // split counts per fiber: 18 for lambda0 = 1, 12 for lambda0 = 2
        assert_eq!(rows[0].split_total(), 18);
        assert_eq!(rows[1].split_total(), 12);
        // single-lambda filtering matches
        let only = count_split_exhaustive(&f3, 1, Some(f3.from_int(2)), 1).unwrap();
        assert_eq!(only, vec![rows[1].clone()]);
    }

    #[test]
    fn census_shard_independence() {
        let f5 = Fq::prime(5).unwrap();
        let a = count_split_exhaustive(&f5, 1, None, 1).unwrap();
        let b = count_split_exhaustive(&f5, 1, None, 4).unwrap();
        let c = count_split_exhaustive(&f5, 1, None, 16).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, c);
    }

    #[test]
    fn lambda_fiber_uniformity_h1() {
        for q in [3u64, 5] {
            let f = Fq::prime(q).unwrap();
            let rows = count_split_exhaustive(&f, 1, None, 2).unwrap();
            let sl2 = q * (q * q - 1);
            for row in &rows {
                assert_eq!(row.total, sl2, "q={q} lambda0={}", row.lambda0);
            }
        }
    }

    #[test]
    fn enumerate_sp_small() {
        let f3 = Fq::prime(3).unwrap();
        let sp = enumerate_sp(&f3, 1).unwrap();
        assert_eq!(sp.len(), 24); // |Sp_2(F_3)| = |SL_2(F_3)|
        let sp4 = enumerate_sp(&f3, 2).unwrap();
        assert_eq!(sp4.len(), 51840);
        // membership spot check: each packed code is a valid Sp element
        let mut entries = [f3.zero(); 16];
        for &code in sp4.iter().step_by(5000) {
            unpack(&f3, 3, code, &mut entries);
            assert_eq!(multiplier_of(&f3, 2, &entries).unwrap(), f3.one());
        }
    }

    #[test]
    fn enumerate_sp_extension_field() {
        // F_4 at h = 1: |Sp_2(F_4)| = 60
        let f4 = Fq::extension(2, 2).unwrap();
        let sp = enumerate_sp(&f4, 1).unwrap();
        assert_eq!(sp.len(), 60);
    }

    #[test]
    fn separable_class_counts_spec_examples() {
        let f3 = Fq::prime(3).unwrap();
        let p1 = Partition::new(vec![1]).unwrap();
        // q=3, lambda0=1: both linear candidates are self-reciprocal
        assert_eq!(separable_class_counts(&f3, &p1, f3.one()).unwrap(), (0, 0));

        let f5 = Fq::prime(5).unwrap();
        // q=5, lambda0=1: a in {2,3} pair with each other
        assert_eq!(separable_class_counts(&f5, &p1, f5.one()).unwrap(), (2, 1));

        // q=3, h=2: hand-checked values
        let p11 = Partition::new(vec![1, 1]).unwrap();
        let p2 = Partition::new(vec![2]).unwrap();
        assert_eq!(separable_class_counts(&f3, &p11, f3.from_int(2)).unwrap(), (0, 0));
        assert_eq!(separable_class_counts(&f3, &p2, f3.one()).unwrap(), (2, 1));
        assert_eq!(separable_class_counts(&f3, &p2, f3.from_int(2)).unwrap(), (0, 0));
    }

    #[test]
    fn centralizer_orders_spec_examples() {
        let p1 = Partition::new(vec![1]).unwrap();
        assert_eq!(centralizer_order_split_separable(&p1, 3), BigUint::from(4u32));
        // class size |GSp_2(F_3)| / 4 = 12
        let class = comb::gsp_order(3, 1) / centralizer_order_split_separable(&p1, 3);
        assert_eq!(class, BigUint::from(12u32));

        let p11 = Partition::new(vec![1, 1]).unwrap();
        assert_eq!(centralizer_order_split_separable(&p11, 3), BigUint::from(8u32));
        let p2 = Partition::new(vec![2]).unwrap();
        assert_eq!(centralizer_order_split_separable(&p2, 3), BigUint::from(16u32));
    }

    #[test]
    fn gsp4_formula_values() {
        assert_eq!(count_split_gsp4_formula(3).unwrap(), BigUint::from(57024u32));
        // ell = 5: (375 + 175 + 35 + 11) * 6 * 64 * 625 / 8
        let expect = BigUint::from(596u32 * 6) * BigUint::from(64u32) * BigUint::from(625u32)
            / BigUint::from(8u32);
        assert_eq!(count_split_gsp4_formula(5).unwrap(), expect);
        assert!(count_split_gsp4_formula(2).is_err());
        assert!(count_split_gsp4_formula(9).is_err());
    }

    #[test]
    fn asymptotic_values() {
        use num_bigint::BigInt;
        // h=1: q^3 / 2
        let a = count_split_asymptotic(7, 1);
        assert_eq!(a, BigRational::new(BigInt::from(343), BigInt::from(2)));
        // h=2, q=3: (3/8) * 3^10
        let a = count_split_asymptotic(3, 2);
        assert_eq!(a, BigRational::new(BigInt::from(3 * 59049), BigInt::from(8)));
        // h=3, q=2: (5/16) * 2^21
        let a = count_split_asymptotic(2, 3);
        assert_eq!(a, BigRational::new(BigInt::from(5) * BigInt::from(2097152u64), BigInt::from(16)));
    }

    #[test]
    fn formula_leading_term_ratio() {
        // formula(101) / (alpha_2 * 101^10 * 100) within 5% of 1
        let total = count_split_gsp4_formula(101).unwrap();
        let per_fiber_leading = count_split_asymptotic(101, 2);
        let denom = per_fiber_leading * BigRational::from_integer(100.into());
        let ratio = BigRational::from_integer(BigUint::to_string(&total).parse().unwrap()) / denom;
        let v = ratio.numer().to_f64().unwrap() / ratio.denom().to_f64().unwrap();
        assert!((v - 1.0).abs() < 0.05, "ratio = {v}");
    }

    #[test]
    fn census_cap_guard() {
        let f7 = Fq::prime(7).unwrap();
        assert!(matches!(
            count_split_exhaustive(&f7, 2, None, 1),
            Err(SymplError::Guard(_))
        ));
    }

    #[test]
    fn csv_format() {
        let f3 = Fq::prime(3).unwrap();
        let rows = count_split_exhaustive(&f3, 1, None, 1).unwrap();
        let csv = census_csv_string(&f3, &rows);
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("# q=3^1;modulus=0,1"));
        assert_eq!(lines.next(), Some("q,h,lambda0,split_sep,split_insep,total"));
        assert_eq!(lines.count(), 2);
    }
}
