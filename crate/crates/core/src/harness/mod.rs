//! The experiment engine: sieve the prime windows, compute `N_e(p, L)` for
//! every good `p` in `[P, 2P]`, and compare the standardized statistic
//! `X = (N_e - mu)/sigma` against the Gaussian / binomial reference.
//!
//! The sweep is a map-reduce over the `p`-window: workers own disjoint prime
//! chunks and produce partial (trace, histogram, power-sum) data; merging is
//! associative and commutative, and per-prime seeds are derived from the
//! global seed, so the output is bit-identical for any shard count.

pub mod report;
pub mod sieve;
pub mod stats;

use std::collections::BTreeMap;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use thiserror::Error;

use crate::comb;
use crate::ec::{is_elkies, EcError, GlobalCurve};

pub use report::{ConfigEcho, ExperimentReport, ModelEcho, MomentRow};
pub use sieve::{primes_in, PrimeRange};
pub use stats::{binomial_model, chi_square_vs_binomial, BinomialModel, ChiSquareOutcome, PowerSums};

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("range [{lo}, {hi}] outside the sieve bounds")]
    RangeGuard { lo: u64, hi: u64 },
    #[error("invalid configuration: {0}")]
    BadConfig(String),
    #[error("empty population")]
    EmptyPopulation,
    #[error("standard deviation is zero; statistic undefined")]
    DegenerateStatistic,
    #[error(transparent)]
    Curve(#[from] EcError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Configuration of one `(P, L)` sweep.
#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub curve: GlobalCurve,
    /// Prime window `[P, 2P]` for the reductions.
    pub p_anchor: u64,
    /// Prime window `[L, 2L]` for the Elkies candidates.
    pub l_anchor: u64,
    /// Moment orders to report.
    pub moments: Vec<u32>,
    pub seed: u64,
    pub shards: usize,
    pub out_json: Option<String>,
    pub out_csv: Option<String>,
    pub out_svg: Option<String>,
}

impl SweepConfig {
    pub fn new(curve: GlobalCurve, p_anchor: u64, l_anchor: u64) -> SweepConfig {
        SweepConfig {
            curve,
            p_anchor,
            l_anchor,
            moments: vec![1, 2, 3, 4],
            seed: 42,
            shards: 1,
            out_json: None,
            out_csv: None,
            out_svg: None,
        }
    }

    fn validate(&self) -> Result<(), HarnessError> {
        if self.l_anchor < 3 {
            return Err(HarnessError::BadConfig("L must be at least 3".into()));
        }
        if self.p_anchor <= 2 * self.l_anchor {
            return Err(HarnessError::BadConfig(format!(
                "P = {} must exceed 2L = {}",
                self.p_anchor,
                2 * self.l_anchor
            )));
        }
        if self.moments.is_empty() || self.moments.iter().any(|&k| k == 0 || k > 16) {
            return Err(HarnessError::BadConfig("moment orders must lie in 1..=16".into()));
        }
        if self.shards == 0 {
            return Err(HarnessError::BadConfig("shard count must be positive".into()));
        }
        Ok(())
    }

    fn echo(&self) -> ConfigEcho {
        ConfigEcho {
            curve: self.curve.coefficients(),
            bad_primes: self.curve.bad_primes().iter().copied().collect(),
            p_anchor: self.p_anchor,
            l_anchor: self.l_anchor,
            moments: self.moments.clone(),
            seed: self.seed,
            shards: self.shards,
            out_json: self.out_json.clone(),
            out_csv: self.out_csv.clone(),
            out_svg: self.out_svg.clone(),
        }
    }
}

/// SplitMix-style mixer deriving a per-prime RNG seed from the global seed.
pub fn derive_seed(global: u64, p: u64) -> u64 {
    let mut z = global ^ p.wrapping_mul(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Traces of Frobenius for every good prime in `[P, 2P]`, in prime order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceTable {
    pub p_anchor: u64,
    pub entries: Vec<(u64, i64)>,
}

/// Computes the trace table with workers owning disjoint prime chunks.
pub fn compute_traces(
    curve: &GlobalCurve,
    p_anchor: u64,
    seed: u64,
    shards: usize,
) -> Result<TraceTable, HarnessError> {
    let primes: Vec<u64> = PrimeRange::new(p_anchor, 2 * p_anchor)?
        .iter()
        .filter(|&p| curve.is_good_prime(p))
        .collect();
    if primes.is_empty() {
        return Err(HarnessError::EmptyPopulation);
    }
    let chunk = primes.len().div_ceil(shards.max(1));
    let partials: Vec<Result<Vec<(u64, i64)>, EcError>> = primes
        .par_chunks(chunk.max(1))
        .map(|chunk| {
            chunk
                .iter()
                .map(|&p| {
                    let reduced = curve.reduce(p)?;
                    let t = reduced.trace(derive_seed(seed, p))?;
                    Ok((p, t))
                })
                .collect()
        })
        .collect();
    let mut entries = Vec::with_capacity(primes.len());
    for part in partials {
        entries.extend(part?);
    }
    Ok(TraceTable { p_anchor, entries })
}

/// The odd good primes in `[L, 2L]` used as Elkies candidates.
pub fn ell_candidates(curve: &GlobalCurve, l_anchor: u64) -> Result<Vec<u64>, HarnessError> {
    let ells: Vec<u64> = PrimeRange::new(l_anchor, 2 * l_anchor)?
        .iter()
        .filter(|&l| l != 2 && !curve.bad_primes().contains(&l))
        .collect();
    Ok(ells)
}

/// The standardized statistic `X(N_e) = (N_e - mu)/sigma` with
/// `mu = alpha_1 n` and `sigma^2 = alpha_1 (1 - alpha_1) n`.
#[derive(Clone, Debug, PartialEq)]
pub struct StandardizedStatistic {
    pub n_primes_ell: u32,
    pub mu: f64,
    pub sigma: f64,
}

impl StandardizedStatistic {
    pub fn new(n_primes_ell: u32) -> Result<StandardizedStatistic, HarnessError> {
        if n_primes_ell == 0 {
            return Err(HarnessError::DegenerateStatistic);
        }
        let (mu, sigma_sq) = exact_mu_sigma_sq(n_primes_ell);
        Ok(StandardizedStatistic {
            n_primes_ell,
            mu: stats::rational_to_f64(&mu),
            sigma: stats::rational_to_f64(&sigma_sq).sqrt(),
        })
    }

    pub fn x(&self, ne: u32) -> f64 {
        (ne as f64 - self.mu) / self.sigma
    }
}

/// Exact `mu = alpha_1 n` and `sigma^2 = alpha_1 (1 - alpha_1) n` as
/// rationals (`alpha_1 = 1/2` for elliptic curves).
fn exact_mu_sigma_sq(n: u32) -> (BigRational, BigRational) {
    let alpha = comb::alpha(1).expect("h = 1");
    let nb = BigRational::from_integer(BigInt::from(n));
    let mu = alpha.clone() * nb.clone();
    let one = BigRational::from_integer(BigInt::from(1));
    let sigma_sq = alpha.clone() * (one - alpha) * nb;
    (mu, sigma_sq)
}

/// Full sweep: trace table plus the `N_e`-statistics pass.
pub fn sweep(config: &SweepConfig) -> Result<ExperimentReport, HarnessError> {
    config.validate()?;
    let started = Instant::now();
    let traces = compute_traces(&config.curve, config.p_anchor, config.seed, config.shards)?;
    let mut report = sweep_from_traces(config, &traces)?;
    report.elapsed_ms = started.elapsed().as_millis() as u64;
    Ok(report)
}

/// The statistics pass over a precomputed trace table (reusable across
/// different `L` values for the same `P`).
pub fn sweep_from_traces(
    config: &SweepConfig,
    traces: &TraceTable,
) -> Result<ExperimentReport, HarnessError> {
    config.validate()?;
    if traces.p_anchor != config.p_anchor {
        return Err(HarnessError::BadConfig("trace table anchored at a different P".into()));
    }
    if traces.entries.is_empty() {
        return Err(HarnessError::EmptyPopulation);
    }
    let started = Instant::now();
    let ells = ell_candidates(&config.curve, config.l_anchor)?;
    let n_ell = ells.len() as u32;
    let stat = StandardizedStatistic::new(n_ell)?;
    let k_max = config.moments.iter().copied().max().unwrap();

    // map: disjoint chunks produce partial (histogram, power sums)
    let chunk = traces.entries.len().div_ceil(config.shards);
    let partials: Vec<(BTreeMap<u32, u64>, PowerSums)> = traces
        .entries
        .par_chunks(chunk.max(1))
        .map(|entries| {
            let mut hist: BTreeMap<u32, u64> = BTreeMap::new();
            let mut sums = PowerSums::new(k_max);
            for &(p, t) in entries {
                let ne = ells
                    .iter()
                    .filter(|&&l| crate::ec::elkies::is_elkies_unchecked(t, p, l))
                    .count() as u32;
                *hist.entry(ne).or_default() += 1;
                sums.push(ne as u64);
            }
            (hist, sums)
        })
        .collect();
    // reduce
    let mut histogram: BTreeMap<u32, u64> = BTreeMap::new();
    let mut sums = PowerSums::new(k_max);
    for (hist, ps) in partials {
        for (ne, count) in hist {
            *histogram.entry(ne).or_default() += count;
        }
        sums.merge(&ps);
    }

    let (mu_exact, sigma_sq_exact) = exact_mu_sigma_sq(n_ell);
    let standardized = stats::standardized_moments(&sums, &mu_exact, &sigma_sq_exact, &config.moments)?;
    let moments = standardized
        .iter()
        .map(|&(k, empirical)| {
            let gaussian = gauss_moment_f64(k);
            MomentRow { k, empirical, gaussian, abs_delta: (empirical - gaussian).abs() }
        })
        .collect();
    let model = stats::binomial_model(n_ell);
    Ok(ExperimentReport {
        config: config.echo(),
        population: sums.count(),
        n_primes_ell: n_ell,
        mu: stat.mu,
        sigma: stat.sigma,
        histogram,
        moments,
        model: ModelEcho {
            n: model.n,
            p_success: 0.5,
            mean: model.mean,
            sd: model.sd,
        },
        elapsed_ms: started.elapsed().as_millis() as u64,
    })
}

fn gauss_moment_f64(k: u32) -> f64 {
    comb::gauss_moment(k).to_f64().expect("small moment")
}

/// Recomputes standardized moments for arbitrary orders from a report's
/// histogram, paired with the Gaussian reference moments.
pub fn moments(report: &ExperimentReport, ks: &[u32]) -> Result<Vec<MomentRow>, HarnessError> {
    if report.population == 0 {
        return Err(HarnessError::EmptyPopulation);
    }
    let k_max = ks.iter().copied().max().ok_or(HarnessError::EmptyPopulation)?;
    let sums = PowerSums::from_histogram(&report.histogram, k_max);
    let (mu, sigma_sq) = exact_mu_sigma_sq(report.n_primes_ell);
    let rows = stats::standardized_moments(&sums, &mu, &sigma_sq, ks)?
        .into_iter()
        .map(|(k, empirical)| {
            let gaussian = gauss_moment_f64(k);
            MomentRow { k, empirical, gaussian, abs_delta: (empirical - gaussian).abs() }
        })
        .collect();
    Ok(rows)
}

/// Materializes the per-`l` deviations `delta_{p,l}` (`1 - alpha` when `l`
/// is Elkies, `-alpha` otherwise) for one prime, for spot checks of the
/// identity `N_e - mu = sum_l delta_{p,l}`.
pub fn delta_terms(curve: &GlobalCurve, p: u64, t: i64, ells: &[u64]) -> Result<Vec<f64>, HarnessError> {
    let alpha = 0.5f64;
    ells.iter()
        .map(|&l| {
            let e = is_elkies(t, p, l, Some(curve))?;
            Ok(if e { 1.0 - alpha } else { -alpha })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn curve() -> GlobalCurve {
        GlobalCurve::curve_11a3()
    }

    #[test]
    fn config_validation() {
        let mut cfg = SweepConfig::new(curve(), 100, 60);
        assert!(matches!(cfg.validate(), Err(HarnessError::BadConfig(_))));
        cfg.l_anchor = 2;
        assert!(matches!(cfg.validate(), Err(HarnessError::BadConfig(_))));
        cfg = SweepConfig::new(curve(), 1000, 10);
        assert!(cfg.validate().is_ok());
        cfg.moments = vec![];
        assert!(cfg.validate().is_err());
    }

    #[test]
    fn degenerate_single_bucket_sweep() {
        // thin both windows down to a single prime each: l-range {3} and
        // p-range {23}
        let bad: BTreeSet<u64> = [5, 11, 29, 31, 37, 41, 43].into_iter().collect();
        let thin = GlobalCurve::new([0, -1, 1, 0, 0], Some(bad)).unwrap();
        let mut cfg = SweepConfig::new(thin, 23, 3);
        cfg.moments = vec![1, 2];
        let report = sweep(&cfg).unwrap();
        assert_eq!(report.population, 1);
        assert_eq!(report.n_primes_ell, 1);
        assert_eq!(report.histogram.len(), 1);
        let (&ne, &count) = report.histogram.iter().next().unwrap();
        assert_eq!(count, 1);
        assert!(ne <= 1);
    }

    #[test]
    fn shard_independence() {
        let mut base = SweepConfig::new(curve(), 2_000, 20);
        base.moments = vec![1, 2, 3, 4];
        let r1 = sweep(&base).unwrap();
        for shards in [4usize, 16] {
            let mut cfg = base.clone();
            cfg.shards = shards;
            let r = sweep(&cfg).unwrap();
            // identical up to the config echo and timing
            assert_eq!(r.histogram, r1.histogram);
            assert_eq!(r.moments, r1.moments);
            assert_eq!(r.population, r1.population);
        }
    }

    #[test]
    fn histogram_support_and_identity() {
        let mut cfg = SweepConfig::new(curve(), 5_000, 30);
        cfg.moments = vec![1, 2];
        let report = sweep(&cfg).unwrap();
        // support within [0, n_ell]
        for &ne in report.histogram.keys() {
            assert!(ne <= report.n_primes_ell);
        }
        let total: u64 = report.histogram.values().sum();
        assert_eq!(total, report.population);

        // delta identity on a few primes
        let ells = ell_candidates(&curve(), 30).unwrap();
        for p in [5003u64, 5009, 6007] {
            let reduced = curve().reduce(p).unwrap();
            let t = reduced.trace(derive_seed(cfg.seed, p)).unwrap();
            let deltas = delta_terms(&curve(), p, t, &ells).unwrap();
            let ne = ells
                .iter()
                .filter(|&&l| crate::ec::elkies::is_elkies_unchecked(t, p, l))
                .count() as f64;
            let sum: f64 = deltas.iter().sum();
            let mu = ells.len() as f64 / 2.0;
            assert!((sum - (ne - mu)).abs() < 1e-9);
        }
    }

    #[test]
    fn moments_recompute_from_histogram() {
        let mut cfg = SweepConfig::new(curve(), 3_000, 15);
        cfg.moments = vec![1, 2, 3, 4];
        let report = sweep(&cfg).unwrap();
        let again = moments(&report, &[1, 2, 3, 4]).unwrap();
        for (a, b) in report.moments.iter().zip(&again) {
            assert_eq!(a.k, b.k);
            assert!((a.empirical - b.empirical).abs() < 1e-12);
        }
        // two-pass route agrees to ten significant digits
        let two = stats::two_pass_standardized(&report.histogram, report.mu, report.sigma, &[1, 2, 3, 4]).unwrap();
        for (a, b) in report.moments.iter().zip(&two) {
            let scale = a.empirical.abs().max(b.1.abs()).max(1e-9);
            assert!((a.empirical - b.1).abs() / scale < 1e-10);
        }
    }

    #[test]
    fn report_round_trips_through_json() {
        let mut cfg = SweepConfig::new(curve(), 1_000, 10);
        cfg.moments = vec![1, 2];
        cfg.out_json = Some("unused.json".into());
        let report = sweep(&cfg).unwrap();
        let json = report.to_json();
        let back = ExperimentReport::from_json(&json).unwrap();
        assert_eq!(back, report);
    }

    #[test]
    fn csv_bucket_counts_sum_to_population() {
        let mut cfg = SweepConfig::new(curve(), 1_000, 10);
        cfg.moments = vec![1, 2];
        let report = sweep(&cfg).unwrap();
        let model = binomial_model(report.n_primes_ell);
        let csv = report.to_csv(&model);
        let mut total = 0u64;
        for line in csv.lines().skip(1) {
            if line.starts_with('k') {
                break;
            }
            let fields: Vec<&str> = line.split(',').collect();
            total += fields[1].parse::<u64>().unwrap();
        }
        assert_eq!(total, report.population);
    }

    #[test]
    fn svg_is_well_formed_enough() {
        let mut cfg = SweepConfig::new(curve(), 1_000, 10);
        cfg.moments = vec![1, 2];
        let report = sweep(&cfg).unwrap();
        let svg = report.to_svg();
        assert!(svg.starts_with("<svg"));
        assert!(svg.trim_end().ends_with("</svg>"));
        assert!(svg.contains("polyline"));
        assert!(svg.matches("<rect").count() >= 2);
    }

    #[test]
    fn trace_table_reuse_across_l() {
        let traces = compute_traces(&curve(), 2_000, 42, 2).unwrap();
        for l in [10u64, 20, 40] {
            let mut cfg = SweepConfig::new(curve(), 2_000, l);
            cfg.moments = vec![2];
            let direct = sweep(&cfg).unwrap();
            let reused = sweep_from_traces(&cfg, &traces).unwrap();
            assert_eq!(direct.histogram, reused.histogram);
            assert_eq!(direct.moments, reused.moments);
        }
    }
}
