//! The `elkies-lab` command line: exact density constants, the split-matrix
//! census, and the `(P, L)` sweep.

use std::collections::BTreeSet;

use clap::{Args, Parser, Subcommand};
use num_traits::ToPrimitive;

use crate::comb;
use crate::ec::GlobalCurve;
use crate::ff::{nt, Fq};
use crate::harness::{self, SweepConfig};
use crate::sympl::census;

#[derive(Parser, Debug)]
#[command(name = "elkies-lab", version, about = "Split matrices in GSp_2h(F_q) and the distribution of Elkies primes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the exact split density alpha(h).
    Alpha(AlphaArgs),
    /// Exhaustive census of split matrices in GSp_2h(F_q).
    Census(CensusArgs),
    /// Run the (P, L) sweep over reductions of a curve.
    Sweep(SweepArgs),
}

#[derive(Args, Debug)]
pub struct AlphaArgs {
    /// Half-dimension h.
    #[arg(long = "h", value_name = "H", default_value_t = 1)]
    pub h: u32,
    /// Print the whole table for h = 1..8.
    #[arg(long)]
    pub table: bool,
}

#[derive(Args, Debug)]
pub struct CensusArgs {
    /// Field size q = p^e.
    #[arg(long = "q")]
    pub q: u64,
    /// Half-dimension h (1, 2, or 3).
    #[arg(long = "h")]
    pub h: u32,
    /// Restrict to one multiplier (element code); all units otherwise.
    #[arg(long = "lambda")]
    pub lambda: Option<u64>,
    /// Number of enumeration shards.
    #[arg(long, default_value_t = 8)]
    pub shards: usize,
    /// Output CSV path.
    #[arg(long)]
    pub out: String,
}

#[derive(Args, Debug)]
pub struct SweepArgs {
    /// Prime window anchor: p ranges over [P, 2P].
    #[arg(long = "P")]
    pub p_anchor: u64,
    /// Elkies window anchor: l ranges over [L, 2L].
    #[arg(long = "L")]
    pub l_anchor: u64,
    /// Curve coefficients a1,a2,a3,a4,a6.
    #[arg(long, value_parser = parse_curve, default_value = "0,-1,1,0,0")]
    pub curve: CurveCoeffs,
    /// Bad primes (comma separated); derived from the discriminant if omitted.
    #[arg(long = "bad-primes", value_parser = parse_primes)]
    pub bad_primes: Option<PrimeList>,
    /// Moment orders to report.
    #[arg(long, value_parser = parse_moments, default_value = "1,2,3,4")]
    pub moments: MomentList,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    #[arg(long, default_value_t = 8)]
    pub shards: usize,
    /// JSON report path.
    #[arg(long)]
    pub out: String,
    /// Optional CSV path.
    #[arg(long)]
    pub csv: Option<String>,
    /// Optional SVG histogram path.
    #[arg(long)]
    pub svg: Option<String>,
}

#[derive(Clone, Debug)]
pub struct CurveCoeffs(pub [i64; 5]);

#[derive(Clone, Debug)]
pub struct PrimeList(pub Vec<u64>);

#[derive(Clone, Debug)]
pub struct MomentList(pub Vec<u32>);

fn parse_curve(s: &str) -> Result<CurveCoeffs, String> {
    let parts: Result<Vec<i64>, _> = s.split(',').map(|t| t.trim().parse::<i64>()).collect();
    let parts = parts.map_err(|e| format!("bad coefficient: {e}"))?;
    let arr: [i64; 5] = parts
        .try_into()
        .map_err(|_| "expected five coefficients a1,a2,a3,a4,a6".to_string())?;
    Ok(CurveCoeffs(arr))
}

fn parse_primes(s: &str) -> Result<PrimeList, String> {
    let parts: Result<Vec<u64>, _> = s.split(',').map(|t| t.trim().parse::<u64>()).collect();
    let parts = parts.map_err(|e| format!("bad prime: {e}"))?;
    for &p in &parts {
        if !nt::is_prime(p) {
            return Err(format!("{p} is not prime"));
        }
    }
    Ok(PrimeList(parts))
}

fn parse_moments(s: &str) -> Result<MomentList, String> {
    let parts: Result<Vec<u32>, _> = s.split(',').map(|t| t.trim().parse::<u32>()).collect();
    Ok(MomentList(parts.map_err(|e| format!("bad moment order: {e}"))?))
}

/// Runs a parsed command; returns a process exit code.
pub fn run(cli: Cli) -> i32 {
    match dispatch(cli) {
        Ok(()) => 0,
        Err(msg) => {
            eprintln!("error: {msg}");
            1
        }
    }
}

fn dispatch(cli: Cli) -> Result<(), String> {
    match cli.command {
        Command::Alpha(args) => run_alpha(args),
        Command::Census(args) => run_census(args),
        Command::Sweep(args) => run_sweep(args),
    }
}

fn alpha_line(h: u32) -> Result<String, String> {
    let a = comb::alpha(h).map_err(|e| e.to_string())?;
    let v = a.numer().to_f64().unwrap() / a.denom().to_f64().unwrap();
    Ok(format!("alpha({h}) = {}/{} = {v:.6}", a.numer(), a.denom()))
}

fn run_alpha(args: AlphaArgs) -> Result<(), String> {
    if args.table {
        for h in 1..=8 {
            println!("{}", alpha_line(h)?);
        }
        Ok(())
    } else {
        println!("{}", alpha_line(args.h)?);
        Ok(())
    }
}

fn run_census(args: CensusArgs) -> Result<(), String> {
    let (p, e) = nt::as_prime_power(args.q).ok_or_else(|| format!("{} is not a prime power", args.q))?;
    let field = Fq::extension(p, e).map_err(|e| e.to_string())?;
    let lambda = match args.lambda {
        None => None,
        Some(code) => Some(field.elem(code).map_err(|e| e.to_string())?),
    };
    let rows = census::count_split_exhaustive(&field, args.h, lambda, args.shards)
        .map_err(|e| e.to_string())?;
    census::write_census_csv(&args.out, &field, &rows).map_err(|e| e.to_string())?;
    let split: u64 = census::sum_split(&rows);
    let total: u64 = rows.iter().map(|r| r.total).sum();
    println!(
        "census q={} h={}: {} split of {} elements across {} multiplier fibers -> {}",
        args.q,
        args.h,
        split,
        total,
        rows.len(),
        args.out
    );
    Ok(())
}

fn run_sweep(args: SweepArgs) -> Result<(), String> {
    let bad = args.bad_primes.map(|b| b.0.into_iter().collect::<BTreeSet<u64>>());
    let curve = GlobalCurve::new(args.curve.0, bad).map_err(|e| e.to_string())?;
    let mut cfg = SweepConfig::new(curve, args.p_anchor, args.l_anchor);
    cfg.moments = args.moments.0;
    cfg.seed = args.seed;
    cfg.shards = args.shards;
    cfg.out_json = Some(args.out.clone());
    cfg.out_csv = args.csv.clone();
    cfg.out_svg = args.svg.clone();
    let report = harness::sweep(&cfg).map_err(|e| e.to_string())?;
    report.write_json(&args.out).map_err(|e| e.to_string())?;
    let model = harness::binomial_model(report.n_primes_ell);
    if let Some(path) = &args.csv {
        report.write_csv(path, &model).map_err(|e| e.to_string())?;
    }
    if let Some(path) = &args.svg {
        report.write_svg(path).map_err(|e| e.to_string())?;
    }
    println!(
        "sweep P={} L={}: {} primes, n_ell={}, mu={:.3}, sigma={:.3} ({} ms) -> {}",
        args.p_anchor,
        args.l_anchor,
        report.population,
        report.n_primes_ell,
        report.mu,
        report.sigma,
        report.elapsed_ms,
        args.out
    );
    for m in &report.moments {
        println!("  E[X^{}] = {:+.6}   (gaussian {:+.1}, |delta| {:.6})", m.k, m.empirical, m.gaussian, m.abs_delta);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_documented_invocations() {
        let cli = Cli::try_parse_from([
            "elkies-lab", "sweep", "--P", "100000", "--L", "100", "--curve", "0,-1,1,0,0",
            "--bad-primes", "11", "--moments", "1,2,3,4", "--seed", "42", "--shards", "8",
            "--out", "report.json", "--csv", "report.csv", "--svg", "hist.svg",
        ])
        .unwrap();
        match cli.command {
            Command::Sweep(args) => {
                assert_eq!(args.p_anchor, 100000);
                assert_eq!(args.l_anchor, 100);
                assert_eq!(args.curve.0, [0, -1, 1, 0, 0]);
                assert_eq!(args.bad_primes.unwrap().0, vec![11]);
                assert_eq!(args.moments.0, vec![1, 2, 3, 4]);
                assert_eq!(args.svg.as_deref(), Some("hist.svg"));
            }
            _ => panic!("expected sweep"),
        }

        let cli = Cli::try_parse_from([
            "elkies-lab", "census", "--q", "3", "--h", "2", "--lambda", "1", "--shards", "4",
            "--out", "census.csv",
        ])
        .unwrap();
        match cli.command {
            Command::Census(args) => {
                assert_eq!((args.q, args.h, args.lambda), (3, 2, Some(1)));
            }
            _ => panic!("expected census"),
        }

        let cli = Cli::try_parse_from(["elkies-lab", "alpha", "--h", "8", "--table"]).unwrap();
        match cli.command {
            Command::Alpha(args) => assert!(args.table && args.h == 8),
            _ => panic!("expected alpha"),
        }
    }

    #[test]
    fn rejects_malformed_arguments() {
        assert!(Cli::try_parse_from(["elkies-lab", "sweep", "--P", "x", "--L", "10", "--out", "r.json"]).is_err());
        assert!(parse_curve("1,2,3").is_err());
        assert!(parse_primes("4").is_err());
    }
}
