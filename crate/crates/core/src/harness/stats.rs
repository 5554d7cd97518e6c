//! Streaming power sums, exact standardized moments, the binomial reference
//! model, and a chi-square goodness-of-fit test against it.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use statrs::distribution::{ChiSquared, ContinuousCDF};

use super::HarnessError;

/// Exact raw power sums `S_j = sum v^j` for `j = 0..=k_max`, accumulated in
/// 128-bit integers (overflow-free for the populations and counts at play:
/// `N_e <= ~100`, populations up to ~10^7, `k <= 8`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSums {
    sums: Vec<u128>,
}

impl PowerSums {
    pub fn new(k_max: u32) -> PowerSums {
        PowerSums { sums: vec![0; k_max as usize + 1] }
    }

    pub fn k_max(&self) -> u32 {
        (self.sums.len() - 1) as u32
    }

    pub fn count(&self) -> u64 {
        self.sums[0] as u64
    }

    pub fn push(&mut self, v: u64) {
        let mut pw = 1u128;
        for slot in self.sums.iter_mut() {
            *slot += pw;
            pw *= v as u128;
        }
    }

    /// Associative, commutative merge of partial sums.
    pub fn merge(&mut self, other: &PowerSums) {
        assert_eq!(self.sums.len(), other.sums.len());
        for (a, b) in self.sums.iter_mut().zip(&other.sums) {
            *a += b;
        }
    }

    pub fn raw(&self, j: u32) -> u128 {
        self.sums[j as usize]
    }

    /// Rebuild from a histogram; identical to streaming the values.
    pub fn from_histogram(hist: &BTreeMap<u32, u64>, k_max: u32) -> PowerSums {
        let mut ps = PowerSums::new(k_max);
        for (&v, &count) in hist {
            let mut pw = 1u128;
            for slot in ps.sums.iter_mut() {
                *slot += pw * count as u128;
                pw *= v as u128;
            }
        }
        ps
    }
}

fn big_binomial(n: u32, k: u32) -> BigUint {
    num_integer::binomial(BigUint::from(n), BigUint::from(k))
}

/// Standardized moments `E[((V - mu)/sigma)^k]` from exact power sums:
/// the central sums are expanded binomially in exact rational arithmetic,
/// and only the final division by the (possibly irrational) odd power of
/// `sigma` happens in floating point.
pub fn standardized_moments(
    ps: &PowerSums,
    mu: &BigRational,
    sigma_sq: &BigRational,
    ks: &[u32],
) -> Result<Vec<(u32, f64)>, HarnessError> {
    let n = ps.count();
    if n == 0 {
        return Err(HarnessError::EmptyPopulation);
    }
    if !sigma_sq.is_positive() {
        return Err(HarnessError::DegenerateStatistic);
    }
    let nb = BigRational::from_integer(BigInt::from(n));
    let sigma = rational_to_f64(sigma_sq).sqrt();
    let mut out = Vec::with_capacity(ks.len());
    for &k in ks {
        if k > ps.k_max() {
            return Err(HarnessError::BadConfig(format!(
                "moment order {k} exceeds accumulated maximum {}",
                ps.k_max()
            )));
        }
        // C_k = sum_j C(k, j) S_j (-mu)^(k-j), exactly
        let mut central = BigRational::zero();
        for j in 0..=k {
            let s_j = BigRational::from_integer(u128_to_bigint(ps.raw(j)));
            let c = BigRational::from_integer(BigInt::from(big_binomial(k, j)));
            central += c * s_j * (-mu.clone()).pow((k - j) as i32);
        }
        let central_moment = central / nb.clone();
        // divide by sigma^k: exact through the floor(k/2) power of sigma^2
        let denom_exact = sigma_sq.pow((k / 2) as i32);
        let ratio = central_moment / denom_exact;
        let value = if k % 2 == 0 {
            rational_to_f64(&ratio)
        } else {
            rational_to_f64(&ratio) / sigma
        };
        out.push((k, value));
    }
    Ok(out)
}

/// Two-pass reference route: expand the histogram and average
/// `((v - mu)/sigma)^k` in floating point.
pub fn two_pass_standardized(
    hist: &BTreeMap<u32, u64>,
    mu: f64,
    sigma: f64,
    ks: &[u32],
) -> Result<Vec<(u32, f64)>, HarnessError> {
    let n: u64 = hist.values().sum();
    if n == 0 {
        return Err(HarnessError::EmptyPopulation);
    }
    let mut out = Vec::with_capacity(ks.len());
    for &k in ks {
        let mut acc = 0.0f64;
        for (&v, &count) in hist {
            let x = (v as f64 - mu) / sigma;
            acc += count as f64 * x.powi(k as i32);
        }
        out.push((k, acc / n as f64));
    }
    Ok(out)
}

fn u128_to_bigint(v: u128) -> BigInt {
    BigInt::from(v)
}

pub fn rational_to_f64(r: &BigRational) -> f64 {
    // num's to_f64 handles magnitudes far beyond our use
    r.to_f64().expect("finite rational")
}

/// The reference model `B(n, 1/2)` with exact probability masses.
#[derive(Clone, Debug)]
pub struct BinomialModel {
    pub n: u32,
    pub mean: f64,
    pub sd: f64,
    pmf: Vec<BigRational>,
}

impl BinomialModel {
    /// Exact `C(n, j) / 2^n`.
    pub fn pmf(&self, j: u32) -> BigRational {
        self.pmf.get(j as usize).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn pmf_f64(&self, j: u32) -> f64 {
        self.pmf.get(j as usize).map(rational_to_f64).unwrap_or(0.0)
    }
}

/// Builds `B(n, 1/2)` for `n` trials.
pub fn binomial_model(n: u32) -> BinomialModel {
    let denom = BigInt::one() << n;
    let pmf: Vec<BigRational> = (0..=n)
        .map(|j| BigRational::new(BigInt::from(big_binomial(n, j)), denom.clone()))
        .collect();
    BinomialModel {
        n,
        mean: n as f64 / 2.0,
        sd: (n as f64).sqrt() / 2.0,
        pmf,
    }
}

/// Outcome of the goodness-of-fit test.
#[derive(Clone, Debug, PartialEq)]
pub struct ChiSquareOutcome {
    pub statistic: f64,
    pub dof: u32,
    pub p_value: f64,
    /// Number of pooled buckets entering the statistic.
    pub buckets: u32,
}

/// Pearson chi-square of the observed histogram against `population *
/// pmf(j)`, pooling adjacent buckets until each expected count reaches
/// `min_expected`. The model is fully specified, so dof = buckets - 1.
pub fn chi_square_vs_binomial(
    hist: &BTreeMap<u32, u64>,
    population: u64,
    model: &BinomialModel,
    min_expected: f64,
) -> Result<ChiSquareOutcome, HarnessError> {
    if population == 0 {
        return Err(HarnessError::EmptyPopulation);
    }
    let mut pooled: Vec<(f64, f64)> = Vec::new(); // (observed, expected)
    let mut acc_obs = 0.0f64;
    let mut acc_exp = 0.0f64;
    for j in 0..=model.n {
        acc_obs += hist.get(&j).copied().unwrap_or(0) as f64;
        acc_exp += population as f64 * model.pmf_f64(j);
        if acc_exp >= min_expected {
            pooled.push((acc_obs, acc_exp));
            acc_obs = 0.0;
            acc_exp = 0.0;
        }
    }
    // fold the right tail into the last bucket
    if acc_exp > 0.0 || acc_obs > 0.0 {
        match pooled.last_mut() {
            Some(last) => {
                last.0 += acc_obs;
                last.1 += acc_exp;
            }
            None => pooled.push((acc_obs, acc_exp)),
        }
    }
    if pooled.len() < 2 {
        return Err(HarnessError::DegenerateStatistic);
    }
    let statistic: f64 = pooled.iter().map(|&(o, e)| (o - e) * (o - e) / e).sum();
    let dof = pooled.len() as u32 - 1;
    let chi = ChiSquared::new(dof as f64).expect("dof >= 1");
    let p_value = 1.0 - chi.cdf(statistic);
    Ok(ChiSquareOutcome {
        statistic,
        dof,
        p_value,
        buckets: pooled.len() as u32,
    })
}
