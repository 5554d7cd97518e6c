//! Polynomial factorization over finite fields: squarefree decomposition,
//! distinct-degree splitting, and randomized equal-degree splitting, plus the
//! Rabin irreducibility test and the Moebius-sum count of monic irreducibles.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::nt;
use super::poly::Poly;
use super::{FfError, Fq};

/// Seed used by [`factor`] so that randomized splitting is reproducible.
pub const DEFAULT_FACTOR_SEED: u64 = 0x5eed_fac7;

/// True iff `gcd(P, P')` is constant, i.e. `P` has only simple roots over an
/// algebraic closure.
pub fn is_separable(p: &Poly) -> Result<bool, FfError> {
    if p.is_zero() {
        return Err(FfError::ZeroPolynomial);
    }
    let g = p.gcd(&p.derivative());
    Ok(g.degree() == Some(0))
}

/// Rabin's test: `f` of degree `n` is irreducible iff `X^{q^n} = X (mod f)`
/// and `gcd(X^{q^{n/r}} - X, f) = 1` for every prime `r | n`.
pub fn is_irreducible(f: &Poly) -> Result<bool, FfError> {
    let n = f.degree().ok_or(FfError::ZeroPolynomial)?;
    if n == 0 {
        return Ok(false);
    }
    if n == 1 {
        return Ok(true);
    }
    let field = f.field();
    let q = BigUint::from(field.order());
    let f = f.make_monic();
    let x = Poly::x(field);

    // frob[j] = X^{q^j} mod f, built one Frobenius step at a time
    let mut frob = x.clone();
    let mut frob_at = vec![x.clone()];
    for _ in 0..n {
        frob = frob.pow_mod(&q, &f)?;
        frob_at.push(frob.clone());
    }
    if frob_at[n] != x.rem(&f)? {
        return Ok(false);
    }
    for r in nt::prime_factors(n as u64) {
        let k = n / r as usize;
        let g = frob_at[k].sub(&x).gcd(&f);
        if g.degree() != Some(0) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Factors a nonzero polynomial into monic irreducibles with multiplicities,
/// using the fixed [`DEFAULT_FACTOR_SEED`]. The product of the factors equals
/// the input up to its leading unit. Output is sorted by degree, then by
/// coefficient codes.
pub fn factor(p: &Poly) -> Result<Vec<(Poly, u32)>, FfError> {
    factor_seeded(p, DEFAULT_FACTOR_SEED)
}

/// [`factor`] with an explicit seed for the equal-degree splitting.
pub fn factor_seeded(p: &Poly, seed: u64) -> Result<Vec<(Poly, u32)>, FfError> {
    if p.is_zero() {
        return Err(FfError::ZeroPolynomial);
    }
    if p.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let monic = p.make_monic();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<(Poly, u32)> = Vec::new();
    for (part, mult) in squarefree_decomposition(&monic) {
        for (prod, d) in distinct_degree(&part)? {
            let mut pieces = Vec::new();
            equal_degree(&prod, d, &mut rng, &mut pieces)?;
            for piece in pieces {
                out.push((piece, mult));
            }
        }
    }
    out.sort_by(|a, b| {
        let ka: Vec<u64> = a.0.coeffs().iter().map(|c| c.code()).collect();
        let kb: Vec<u64> = b.0.coeffs().iter().map(|c| c.code()).collect();
        (ka.len(), ka).cmp(&(kb.len(), kb))
    });
    Ok(out)
}

/// Yun-style squarefree decomposition adapted to characteristic `p`:
/// returns pairwise-coprime squarefree monic parts with their multiplicities.
fn squarefree_decomposition(f: &Poly) -> Vec<(Poly, u32)> {
    let field = f.field().clone();
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let deriv = f.derivative();
    if deriv.is_zero() {
        // f = g(X^p); in F_q the p-th root of g's coefficients recovers
        // h with h^p = f.
        let root = pth_root_poly(f);
        for (g, m) in squarefree_decomposition(&root) {
            out.push((g, m * field.p() as u32));
        }
        return out;
    }
    let mut c = f.gcd(&deriv);
    let mut w = f.div_exact(&c);
    let mut i = 1u32;
    while w.degree() != Some(0) {
        let y = w.gcd(&c);
        let fac = w.div_exact(&y);
        if fac.degree().unwrap_or(0) > 0 {
            out.push((fac, i));
        }
        w = y;
        c = c.div_exact(&w);
        i += 1;
    }
    if c.degree().unwrap_or(0) > 0 {
        // the part killed by the derivative is a p-th power
        let root = pth_root_poly(&c);
        for (g, m) in squarefree_decomposition(&root) {
            out.push((g, m * field.p() as u32));
        }
    }
    out
}

/// For `f` with zero derivative, `f = sum a_j X^{pj}`; returns
/// `sum a_j^{1/p} X^j`, the polynomial whose p-th power is `f`.
fn pth_root_poly(f: &Poly) -> Poly {
    let field = f.field();
    let p = field.p() as usize;
    let deg = f.degree().expect("nonzero");
    debug_assert_eq!(deg % p, 0);
    let coeffs = (0..=deg / p).map(|j| field.pth_root(f.coeff(p * j))).collect();
    Poly::new(field.clone(), coeffs)
}

/// Splits a monic squarefree polynomial into products of irreducibles of
/// equal degree: returns `(product, d)` pairs.
fn distinct_degree(f: &Poly) -> Result<Vec<(Poly, usize)>, FfError> {
    let field = f.field();
    let q = BigUint::from(field.order());
    let x = Poly::x(field);
    let mut out = Vec::new();
    let mut g = f.clone();
    let mut h = x.rem(&g)?;
    let mut d = 0usize;
    while g.degree().map_or(false, |n| n >= 2 * (d + 1)) {
        d += 1;
        h = h.pow_mod(&q, &g)?;
        let fac = h.sub(&x).gcd(&g);
        if fac.degree().unwrap_or(0) > 0 {
            g = g.div_exact(&fac);
            h = h.rem(&g)?;
            out.push((fac, d));
        }
    }
    if g.degree().unwrap_or(0) > 0 {
        let d = g.degree().unwrap();
        out.push((g, d));
    }
    Ok(out)
}

/// Cantor-Zassenhaus equal-degree splitting of a monic squarefree product of
/// irreducibles of degree `d`. Uses the quadratic-residue split for odd `q`
/// and the trace map in characteristic 2.
fn equal_degree(f: &Poly, d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<Poly>) -> Result<(), FfError> {
    let deg = f.degree().expect("nonzero");
    if deg == 0 {
        return Ok(());
    }
    if deg == d {
        out.push(f.make_monic());
        return Ok(());
    }
    let field = f.field().clone();
    let q = field.order();
    loop {
        let codes: Vec<u64> = (0..deg).map(|_| rng.gen_range(0..q)).collect();
        let t = Poly::from_codes(&field, &codes)?;
        if t.degree().map_or(true, |n| n == 0) {
            continue;
        }
        let shared = t.gcd(f);
        if shared.degree().unwrap_or(0) > 0 && shared.degree() < f.degree() {
            let rest = f.div_exact(&shared);
            equal_degree(&shared, d, rng, out)?;
            equal_degree(&rest, d, rng, out)?;
            return Ok(());
        }
        let s = if field.p() == 2 {
            // trace map over F_{2^(e*d)}
            let steps = field.ext_degree() as usize * d;
            let two = BigUint::from(2u32);
            let mut acc = t.rem(f)?;
            let mut cur = t.rem(f)?;
            for _ in 1..steps {
                cur = cur.pow_mod(&two, f)?;
                acc = acc.add(&cur).rem(f)?;
            }
            acc
        } else {
            let exp = (BigUint::from(q).pow(d as u32) - BigUint::one()) / BigUint::from(2u32);
            let pw = t.pow_mod(&exp, f)?;
            pw.sub(&Poly::one(&field))
        };
        let g = s.gcd(f);
        let gd = g.degree().unwrap_or(0);
        if gd > 0 && gd < deg {
            let rest = f.div_exact(&g);
            equal_degree(&g, d, rng, out)?;
            equal_degree(&rest, d, rng, out)?;
            return Ok(());
        }
    }
}

/// Number of monic irreducible polynomials of degree `d` over `F_q`, by the
/// Moebius sum `(1/d) sum_{e | d} mu(d/e) q^e`.
pub fn count_irreducibles(q: u64, d: u32) -> Result<BigUint, FfError> {
    if d < 1 {
        return Err(FfError::BadDegree);
    }
    let mut acc = BigInt::zero();
    for e in 1..=d {
        if d % e != 0 {
            continue;
        }
        let mu = moebius(d / e);
        if mu == 0 {
            continue;
        }
        let term = BigInt::from(q).pow(e);
        acc += BigInt::from(mu) * term;
    }
    debug_assert!(!acc.is_negative());
    let (quo, rem) = num_integer::Integer::div_rem(&acc, &BigInt::from(d));
    debug_assert!(rem.is_zero());
    Ok(quo.to_biguint().expect("nonnegative count"))
}

fn moebius(mut n: u32) -> i32 {
    let mut mu = 1i32;
    let mut d = 2u32;
    while d * d <= n {
        if n % d == 0 {
            n /= d;
            if n % d == 0 {
                return 0;
            }
            mu = -mu;
        }
        d += 1;
    }
    if n > 1 {
        mu = -mu;
    }
    mu
}

/// Deterministic-per-seed sampler for a monic irreducible of degree `d`.
pub fn random_irreducible(field: &Fq, d: u32, seed: u64) -> Result<Poly, FfError> {
    if d < 1 {
        return Err(FfError::BadDegree);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let q = field.order();
    loop {
        let mut codes: Vec<u64> = (0..d).map(|_| rng.gen_range(0..q)).collect();
        codes.push(1);
        let cand = Poly::from_codes(field, &codes)?;
        if is_irreducible(&cand)? {
            return Ok(cand);
        }
    }
}

/// All monic irreducibles of degree `d`, in coefficient-code order. Guarded
/// by the enumeration cost `q^d`.
pub fn enumerate_irreducibles(field: &Fq, d: u32, cap: u64) -> Result<Vec<Poly>, FfError> {
    let q = field.order();
    let total = q.checked_pow(d).filter(|&t| t <= cap).ok_or_else(|| {
        FfError::Guard(format!("q^d = {}^{} exceeds enumeration cap {}", q, d, cap))
    })?;
    let mut out = Vec::new();
    let du = d as usize;
    let mut codes = vec![0u64; du + 1];
    codes[du] = 1;
    for _ in 0..total {
        let cand = Poly::from_codes(field, &codes)?;
        if is_irreducible(&cand)? {
            out.push(cand);
        }
        let mut i = 0;
        while i < du {
            codes[i] += 1;
            if codes[i] < q {
                break;
            }
            codes[i] = 0;
            i += 1;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    use proptest::prelude::*;

    fn poly(f: &Fq, codes: &[u64]) -> Poly {
        Poly::from_codes(f, codes).unwrap()
    }

    /// Independent irreducibility check: no divisor among all monic
    /// polynomials of smaller positive degree, by trial division.
    fn irreducible_by_trial_division(f: &Poly) -> bool {
        let field = f.field();
        let q = field.order();
        let n = match f.degree() {
            Some(n) if n >= 1 => n,
            _ => return false,
        };
        for d in 1..=n / 2 {
            let mut codes = vec![0u64; d + 1];
            codes[d] = 1;
            let total = q.pow(d as u32);
            for _ in 0..total {
                let cand = Poly::from_codes(field, &codes).unwrap();
                if f.rem(&cand).unwrap().is_zero() {
                    return false;
                }
                let mut i = 0;
                while i < d {
                    codes[i] += 1;
                    if codes[i] < q {
                        break;
                    }
                    codes[i] = 0;
                    i += 1;
                }
            }
        }
        true
    }

    #[test]
    fn factor_spec_examples() {
        let f5 = Fq::prime(5).unwrap();
        // X^2 - 1 = (X+1)(X+4) over F_5
        let facs = factor(&poly(&f5, &[4, 0, 1])).unwrap();
        assert_eq!(
            facs,
            vec![(poly(&f5, &[1, 1]), 1), (poly(&f5, &[4, 1]), 1)]
        );

        let f3 = Fq::prime(3).unwrap();
        // X^2 + 1 is irreducible over F_3: no root among 0, 1, 2
        let p = poly(&f3, &[1, 0, 1]);
        assert!(p.roots_in_field().is_empty());
        assert_eq!(factor(&p).unwrap(), vec![(p.clone(), 1)]);

        let f2 = Fq::prime(2).unwrap();
        // X^4 + X^2 + 1 = (X^2 + X + 1)^2 over F_2
        let facs = factor(&poly(&f2, &[1, 0, 1, 0, 1])).unwrap();
        assert_eq!(facs, vec![(poly(&f2, &[1, 1, 1]), 2)]);

        assert_eq!(factor(&Poly::zero(&f5)).unwrap_err(), FfError::ZeroPolynomial);
    }

    #[test]
    fn separability_spec_examples() {
        let f5 = Fq::prime(5).unwrap();
        assert!(is_separable(&poly(&f5, &[4, 0, 1])).unwrap()); // X^2 - 1
        let f3 = Fq::prime(3).unwrap();
        assert!(!is_separable(&poly(&f3, &[0, 0, 1])).unwrap()); // X^2
        // X^3 - 1 = (X-1)^3 over F_3: derivative vanishes
        assert!(!is_separable(&poly(&f3, &[2, 0, 0, 1])).unwrap());
        assert_eq!(is_separable(&Poly::zero(&f3)).unwrap_err(), FfError::ZeroPolynomial);
    }

    #[test]
    fn count_irreducibles_matches_enumeration() {
        for q in [2u64, 3, 5] {
            let f = Fq::prime(q).unwrap();
            for d in 1..=4u32 {
                let listed = enumerate_irreducibles(&f, d, 10_000_000).unwrap();
                for p in &listed {
                    assert!(irreducible_by_trial_division(p), "{p:?}");
                }
                let counted = count_irreducibles(q, d).unwrap();
                assert_eq!(counted, BigUint::from(listed.len()), "q={q} d={d}");
            }
        }
        assert_eq!(count_irreducibles(2, 3).unwrap(), BigUint::from(2u32));
        assert_eq!(count_irreducibles(3, 1).unwrap(), BigUint::from(3u32));
        assert_eq!(count_irreducibles(5, 2).unwrap(), BigUint::from(10u32));
        assert!(count_irreducibles(5, 0).is_err());
    }

    #[test]
    fn random_irreducible_deterministic() {
        let f2 = Fq::prime(2).unwrap();
        let p = random_irreducible(&f2, 1, 7).unwrap();
        assert!(p == poly(&f2, &[0, 1]) || p == poly(&f2, &[1, 1]));

        let f3 = Fq::prime(3).unwrap();
        let a = random_irreducible(&f3, 2, 0).unwrap();
        let b = random_irreducible(&f3, 2, 0).unwrap();
        assert_eq!(a, b);
        assert_eq!(factor(&a).unwrap(), vec![(a.clone(), 1)]);

        let c = random_irreducible(&f2, 3, 1).unwrap();
        let d = random_irreducible(&f2, 3, 1).unwrap();
        assert_eq!(c, d);
        assert!(irreducible_by_trial_division(&c));
    }

    #[test]
    fn factorization_over_extension_field() {
        let f9 = Fq::extension(3, 2).unwrap();
        // X^2 + 1 splits over F_9: it has the roots +-x
        let p = poly(&f9, &[1, 0, 1]);
        let facs = factor(&p).unwrap();
        assert_eq!(facs.len(), 2);
        let recomposed = facs.iter().fold(Poly::one(&f9), |acc, (f, _)| acc.mul(f));
        assert_eq!(recomposed, p);
    }

    #[test]
    fn char2_equal_degree_split() {
        let f2 = Fq::prime(2).unwrap();
        // (X^2+X+1)(X^3+X+1)(X^3+X^2+1): distinct irreducibles
        let a = poly(&f2, &[1, 1, 1]);
        let b = poly(&f2, &[1, 1, 0, 1]);
        let c = poly(&f2, &[1, 0, 1, 1]);
        let prod = a.mul(&b).mul(&c);
        let facs = factor(&prod).unwrap();
        assert_eq!(facs.len(), 3);
        for (f, m) in &facs {
            assert_eq!(*m, 1);
            assert!(irreducible_by_trial_division(f));
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn factor_recomposes(codes in proptest::collection::vec(0u64..5, 1..9), qi in 0usize..3) {
            let qs = [2u64, 3, 5];
            let q = qs[qi];
            let f = Fq::prime(q).unwrap();
            let codes: Vec<u64> = codes.iter().map(|c| c % q).collect();
            let p = Poly::from_codes(&f, &codes).unwrap();
            prop_assume!(!p.is_zero() && p.degree() != Some(0));
            let facs = factor(&p).unwrap();
            let lead = p.leading().unwrap();
            let mut recomposed = Poly::constant(&f, lead);
            for (g, m) in &facs {
                prop_assert!(g.is_monic());
                prop_assert!(irreducible_by_trial_division(g));
                for _ in 0..*m {
                    recomposed = recomposed.mul(g);
                }
            }
            prop_assert_eq!(recomposed, p);
        }
    }

    #[test]
    fn inseparable_power_factorization() {
        let f3 = Fq::prime(3).unwrap();
        // (X+1)^3 has zero derivative; the p-th-root path must find it
        let p = Poly::x_minus(&f3, f3.from_int(-1));
        let cube = p.mul(&p).mul(&p);
        assert_eq!(factor(&cube).unwrap(), vec![(p, 3)]);

        // (X^2+1)^3 * (X+1) over F_3
        let q = poly(&f3, &[1, 0, 1]);
        let mixed = q.mul(&q).mul(&q).mul(&poly(&f3, &[1, 1]));
        let facs = factor(&mixed).unwrap();
        assert_eq!(facs, vec![(poly(&f3, &[1, 1]), 1), (q, 3)]);
    }

    #[test]
    fn rabin_agrees_with_trial_division() {
        let f4 = Fq::extension(2, 2).unwrap();
        let mut n_irr = 0u32;
        for c0 in 0..4u64 {
            for c1 in 0..4u64 {
                for c2 in 0..4u64 {
                    let p = poly(&f4, &[c0, c1, c2, 1]);
                    let fast = is_irreducible(&p).unwrap();
                    assert_eq!(fast, irreducible_by_trial_division(&p), "{p:?}");
                    n_irr += fast as u32;
                }
            }
        }
        // Gauss count: (4^3 - 4)/3 = 20 monic irreducible cubics over F_4
        assert_eq!(n_irr, 20);
        assert_eq!(count_irreducibles(4, 3).unwrap(), BigUint::from(20u32));
    }
}
