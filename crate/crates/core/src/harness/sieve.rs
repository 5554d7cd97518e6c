//! Segmented sieve of Eratosthenes over an inclusive range, with memory
//! proportional to `sqrt(hi)` plus one segment.

use super::HarnessError;

/// Upper bound on sieved ranges.
pub const SIEVE_RANGE_CAP: u64 = 1 << 40;

const SEGMENT_LEN: u64 = 1 << 17;

/// The primes in `[lo, hi]`, iterable segment by segment.
#[derive(Clone, Debug)]
pub struct PrimeRange {
    lo: u64,
    hi: u64,
    base: Vec<u64>,
}

/// Simple sieve for the base primes up to `limit` inclusive.
fn simple_sieve(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize + 1;
    let mut composite = vec![false; n];
    let mut primes = Vec::new();
    for p in 2..n {
        if composite[p] {
            continue;
        }
        primes.push(p as u64);
        let mut k = p * p;
        while k < n {
            composite[k] = true;
            k += p;
        }
    }
    primes
}

impl PrimeRange {
    pub fn new(lo: u64, hi: u64) -> Result<PrimeRange, HarnessError> {
        if lo < 2 || lo > hi || hi > SIEVE_RANGE_CAP {
            return Err(HarnessError::RangeGuard { lo, hi });
        }
        let base = simple_sieve(crate::ff::nt::isqrt(hi));
        Ok(PrimeRange { lo, hi, base })
    }

    pub fn lo(&self) -> u64 {
        self.lo
    }

    pub fn hi(&self) -> u64 {
        self.hi
    }

    pub fn iter(&self) -> PrimeIter<'_> {
        PrimeIter {
            range: self,
            next_seg: self.lo,
            seg_start: self.lo,
            seg: Vec::new(),
            pos: 0,
        }
    }

    pub fn count(&self) -> u64 {
        self.iter().count() as u64
    }

    pub fn collect_vec(&self) -> Vec<u64> {
        self.iter().collect()
    }
}

impl<'a> IntoIterator for &'a PrimeRange {
    type Item = u64;
    type IntoIter = PrimeIter<'a>;
    fn into_iter(self) -> PrimeIter<'a> {
        self.iter()
    }
}

pub struct PrimeIter<'a> {
    range: &'a PrimeRange,
    /// Start of the next segment to load.
    next_seg: u64,
    /// Start of the segment currently in `seg`.
    seg_start: u64,
    /// `seg[i]` is true when `seg_start + i` is composite.
    seg: Vec<bool>,
    pos: usize,
}

impl PrimeIter<'_> {
    fn load_segment(&mut self) {
        let lo = self.seg_start;
        let hi = (lo + SEGMENT_LEN - 1).min(self.range.hi);
        let len = (hi - lo + 1) as usize;
        self.seg.clear();
        self.seg.resize(len, false);
        for &p in &self.range.base {
            if p * p > hi {
                break;
            }
            let mut k = lo.div_ceil(p) * p;
            if k < p * p {
                k = p * p;
            }
            while k <= hi {
                self.seg[(k - lo) as usize] = true;
                k += p;
            }
        }
        self.pos = 0;
    }
}

impl Iterator for PrimeIter<'_> {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        loop {
            if self.pos < self.seg.len() {
                let i = self.pos;
                self.pos += 1;
                if !self.seg[i] {
                    return Some(self.seg_start + i as u64);
                }
                continue;
            }
            if self.next_seg > self.range.hi {
                return None;
            }
            self.seg_start = self.next_seg;
            self.load_segment();
            self.next_seg = self.seg_start + self.seg.len() as u64;
        }
    }
}

/// Convenience: the primes of `[lo, hi]` as a vector.
pub fn primes_in(lo: u64, hi: u64) -> Result<Vec<u64>, HarnessError> {
    Ok(PrimeRange::new(lo, hi)?.collect_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn spec_examples() {
        assert_eq!(primes_in(10, 20).unwrap(), vec![11, 13, 17, 19]);
        assert_eq!(primes_in(2, 2).unwrap(), vec![2]);
        assert!(PrimeRange::new(1, 10).is_err());
        assert!(PrimeRange::new(10, 5).is_err());
        assert!(PrimeRange::new(2, (1 << 40) + 1).is_err());
    }

    #[test]
    fn matches_simple_sieve_small() {
        let all = simple_sieve(10_000);
        let ranged = primes_in(2, 10_000).unwrap();
        assert_eq!(all, ranged);
    }

    #[test]
    fn crosses_segment_boundaries() {
        // a range spanning several segments agrees with trial division
        let lo = (SEGMENT_LEN * 3) - 500;
        let hi = (SEGMENT_LEN * 3) + 500;
        let got = primes_in(lo, hi).unwrap();
        let expect: Vec<u64> = (lo..=hi).filter(|&n| crate::ff::nt::is_prime(n)).collect();
        assert_eq!(got, expect);
    }

    #[test]
    fn count_in_window_above_million() {
        // pi(1,100,000) - pi(1,000,000) computed independently
        let got = PrimeRange::new(1_000_000, 1_100_000).unwrap().count();
        let expect = (1_000_000u64..=1_100_000).filter(|&n| crate::ff::nt::is_prime(n)).count() as u64;
        assert_eq!(got, expect);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]
        #[test]
        fn agrees_with_trial_division(lo in 2u64..5000, span in 0u64..400) {
            let hi = lo + span;
            let got = primes_in(lo, hi).unwrap();
            let expect: Vec<u64> = (lo..=hi).filter(|&n| crate::ff::nt::is_prime(n)).collect();
            prop_assert_eq!(got, expect);
        }
    }
}
