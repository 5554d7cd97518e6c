//! Exact combinatorial constants: integer partitions, the split-matrix
//! density `alpha(h)`, symplectic group orders, Gaussian moments, and the
//! ordered-pairing counts used by the moment analysis.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum CombError {
    #[error("argument must be at least 1")]
    BadInput,
}

/// An unordered partition, stored as a non-decreasing tuple of positive parts.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Builds a partition from parts in any order.
    pub fn new(mut parts: Vec<u32>) -> Result<Partition, CombError> {
        if parts.is_empty() || parts.iter().any(|&d| d == 0) {
            return Err(CombError::BadInput);
        }
        parts.sort_unstable();
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of parts, `r`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false // a partition always has at least one part
    }

    pub fn sum(&self) -> u32 {
        self.0.iter().sum()
    }

    /// How many parts equal `k`.
    pub fn count_of(&self, k: u32) -> usize {
        self.0.iter().filter(|&&d| d == k).count()
    }
}

/// All partitions of `h`, each exactly once, in lexicographic order on the
/// sorted tuples.
pub fn partitions(h: u32) -> Result<Vec<Partition>, CombError> {
    if h < 1 {
        return Err(CombError::BadInput);
    }
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    fn rec(remaining: u32, min: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for d in min..=remaining {
            prefix.push(d);
            rec(remaining - d, d, prefix, out);
            prefix.pop();
        }
    }
    rec(h, 1, &mut prefix, &mut out);
    Ok(out)
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// The density constant
/// `alpha_h = sum over partitions (d_1..d_r) of h of
///  1/2^r * prod 1/d_i * prod_k 1/(#{j : d_j = k})!`,
/// as an exact reduced rational.
pub fn alpha(h: u32) -> Result<BigRational, CombError> {
    let mut total = BigRational::zero();
    for part in partitions(h)? {
        let r = part.len() as u32;
        let mut denom = BigUint::one() << r; // 2^r
        for &d in part.parts() {
            denom *= BigUint::from(d);
        }
        for k in 1..=h {
            denom *= factorial(part.count_of(k) as u64);
        }
        total += BigRational::new(BigInt::one(), BigInt::from(denom));
    }
    Ok(total)
}

/// Degree of `#GSp_{2h}(F_q)` as a polynomial in `q`: `2h^2 + h + 1`.
pub fn gsp_order_degree(h: u32) -> u64 {
    let h = h as u64;
    2 * h * h + h + 1
}

/// `#Sp_{2h}(F_q) = q^{h^2} * prod_{i=1}^{h} (q^{2i} - 1)`.
pub fn sp_order(q: u64, h: u32) -> BigUint {
    let qb = BigUint::from(q);
    let mut order = qb.pow(h * h);
    for i in 1..=h {
        order *= qb.pow(2 * i) - BigUint::one();
    }
    order
}

/// `#GSp_{2h}(F_q) = (q - 1) * #Sp_{2h}(F_q)`.
pub fn gsp_order(q: u64, h: u32) -> BigUint {
    BigUint::from(q - 1) * sp_order(q, h)
}

/// Moments of the standard Gaussian: `(k-1)!!` for even `k`, zero for odd.
pub fn gauss_moment(k: u32) -> BigUint {
    if k % 2 == 1 {
        return BigUint::zero();
    }
    let mut acc = BigUint::one();
    let mut j = 1u64;
    while j < k as u64 {
        acc *= BigUint::from(j);
        j += 2;
    }
    acc
}

/// Number of ordered tuples `(A_1, ..., A_nu)` of disjoint 2-element sets
/// covering `{1, ..., 2 nu}`: `nu! * (2 nu - 1)!!`.
pub fn pairing_count(nu: u32) -> Result<BigUint, CombError> {
    if nu < 1 {
        return Err(CombError::BadInput);
    }
    Ok(factorial(nu as u64) * gauss_moment(2 * nu))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn partition_enumeration() {
        let p1 = partitions(1).unwrap();
        assert_eq!(p1, vec![Partition::new(vec![1]).unwrap()]);
        let p2 = partitions(2).unwrap();
        assert_eq!(
            p2,
            vec![Partition::new(vec![1, 1]).unwrap(), Partition::new(vec![2]).unwrap()]
        );
        let p4 = partitions(4).unwrap();
        assert_eq!(p4.len(), 5);
        let tuples: Vec<&[u32]> = p4.iter().map(|p| p.parts()).collect();
        assert_eq!(tuples, vec![&[1u32, 1, 1, 1][..], &[1, 1, 2], &[1, 3], &[2, 2], &[4]]);
        // p(1..8) = 1, 2, 3, 5, 7, 11, 15, 22
        let counts: Vec<usize> = (1..=8).map(|h| partitions(h).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22]);
        assert!(partitions(0).is_err());
    }

    #[test]
    fn alpha_small_values() {
        assert_eq!(alpha(1).unwrap(), rat(1, 2));
        assert_eq!(alpha(2).unwrap(), rat(3, 8));
        assert_eq!(alpha(8).unwrap(), rat(6435, 32768));
        assert!(alpha(0).is_err());
    }

    #[test]
    fn alpha_monotone_and_dyadic() {
        let mut prev = BigRational::one();
        for h in 1..=12 {
            let a = alpha(h).unwrap();
            assert!(a < prev, "alpha must decrease at h={h}");
            assert!(a > BigRational::zero());
            prev = a;
        }
        for h in 1..=8 {
            let d = alpha(h).unwrap().denom().clone();
            let d = d.to_biguint().unwrap();
            assert_eq!(d.count_ones(), 1, "denominator of alpha({h}) is a power of 2");
        }
    }

    #[test]
    fn dimension_polynomial() {
        assert_eq!(gsp_order_degree(1), 4);
        assert_eq!(gsp_order_degree(2), 11);
        assert_eq!(gsp_order_degree(3), 22);
    }

    #[test]
    fn group_orders() {
        assert_eq!(gsp_order(3, 1), BigUint::from(48u32));
        assert_eq!(gsp_order(3, 2), BigUint::from(103680u32));
        // #GSp_6(F_2) = #Sp_6(F_2) since F_2 has a single unit
        assert_eq!(gsp_order(2, 3), BigUint::from(1451520u32));
        for (q, h) in [(3u64, 1u32), (5, 2), (2, 3), (7, 2)] {
            assert_eq!(gsp_order(q, h), BigUint::from(q - 1) * sp_order(q, h));
        }
    }

    #[test]
    fn gauss_moments() {
        assert_eq!(gauss_moment(0), BigUint::one());
        assert_eq!(gauss_moment(2), BigUint::from(1u32));
        assert_eq!(gauss_moment(3), BigUint::zero());
        assert_eq!(gauss_moment(4), BigUint::from(3u32));
        assert_eq!(gauss_moment(6), BigUint::from(15u32));
        for k in (2..=20u32).step_by(2) {
            assert_eq!(gauss_moment(k), BigUint::from(k as u64 - 1) * gauss_moment(k - 2));
        }
    }

    #[test]
    fn pairing_counts() {
        assert_eq!(pairing_count(1).unwrap(), BigUint::from(1u32));
        assert_eq!(pairing_count(2).unwrap(), BigUint::from(6u32));
        assert_eq!(pairing_count(3).unwrap(), BigUint::from(90u32));
        assert!(pairing_count(0).is_err());
    }

    /// Brute-force enumeration of ordered tuples of disjoint pairs covering
    /// {0, ..., 2 nu - 1}.
    pub fn enumerate_ordered_pairings(nu: u32) -> u64 {
        fn rec(free: &mut Vec<usize>, slots: u32) -> u64 {
            if slots == 0 {
                return if free.is_empty() { 1 } else { 0 };
            }
            let mut total = 0;
            let n = free.len();
            for i in 0..n {
                for j in i + 1..n {
                    let (a, b) = (free[j], free[i]);
                    free.remove(j);
                    free.remove(i);
                    total += rec(free, slots - 1);
                    free.insert(i, b);
                    free.insert(j, a);
                }
            }
            total
        }
        let mut free: Vec<usize> = (0..2 * nu as usize).collect();
        rec(&mut free, nu)
    }

    #[test]
    fn pairing_count_matches_enumeration() {
        for nu in 1..=4u32 {
            assert_eq!(
                pairing_count(nu).unwrap(),
                BigUint::from(enumerate_ordered_pairings(nu)),
                "nu={nu}"
            );
        }
    }

    #[test]
    fn alpha_decimal_approximations() {
        let approx = [0.5, 0.375, 0.3125, 0.2734, 0.2461, 0.2256, 0.2095, 0.1964];
        for (h, &expect) in (1..=8u32).zip(approx.iter()) {
            let a = alpha(h).unwrap();
            let v = a.numer().to_f64().unwrap() / a.denom().to_f64().unwrap();
            assert!((v - expect).abs() < 5e-5, "h={h}: {v} vs {expect}");
        }
    }
}
