//! `GSp_{2h}(F_q)`: symplectic-similitude membership and multipliers,
//! characteristic polynomials, split-matrix detection by two independent
//! routes, companion-block construction, and exact counting of the split
//! locus.
//!
//! A matrix `m` belongs to the similitude group when `m^T J_{2h} m =
//! lambda(m) J_{2h}` for a nonzero scalar, where `J_{2h}` is the standard
//! alternating form. `m` is *split* when it stabilizes some maximal
//! isotropic (Lagrangian) subspace; [`lagrangian`] decides this by direct
//! enumeration, [`split`] by factoring the characteristic polynomial into
//! reciprocal pairs.

pub mod census;
pub mod lagrangian;
mod matrix;
pub mod split;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::ff::{FfError, Fq, FqElement, Poly};

#[derive(Debug, Error, PartialEq, Clone)]
pub enum SymplError {
    #[error("matrix is not a symplectic similitude")]
    NotSymplectic,
    #[error("entry vector has wrong length for dimension 2h = {0}")]
    BadShape(usize),
    #[error("factor degrees must sum to h and have nonzero constant terms")]
    BadFactors,
    #[error("enumeration guard exceeded: {0}")]
    Guard(String),
    #[error(transparent)]
    Field(#[from] FfError),
}

/// An element of `GSp_{2h}(F_q)` with its cached multiplier.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymplecticMatrix {
    field: Fq,
    h: usize,
    entries: Vec<FqElement>,
    multiplier: FqElement,
}

/// Computes the multiplier of a candidate matrix, rejecting anything that is
/// not a symplectic similitude: the matrix must satisfy
/// `m^T J m = lambda J` with `lambda != 0`.
pub fn multiplier_of(field: &Fq, h: usize, entries: &[FqElement]) -> Result<FqElement, SymplError> {
    let n = 2 * h;
    if h == 0 || entries.len() != n * n {
        return Err(SymplError::BadShape(n));
    }
    // b = m^T (J m); J m is a signed row permutation of m
    let mut jm = vec![field.zero(); n * n];
    for i in 0..h {
        for c in 0..n {
            jm[matrix::idx(n, i, c)] = entries[matrix::idx(n, h + i, c)];
            jm[matrix::idx(n, h + i, c)] = field.neg(entries[matrix::idx(n, i, c)]);
        }
    }
    let mt = matrix::transpose(n, entries);
    let b = matrix::mul(field, n, &mt, &jm);
    let lambda = b[matrix::idx(n, 0, h)];
    if lambda.is_zero() {
        return Err(SymplError::NotSymplectic);
    }
    let j = matrix::standard_form(field, h);
    for k in 0..n * n {
        if b[k] != field.mul(lambda, j[k]) {
            return Err(SymplError::NotSymplectic);
        }
    }
    Ok(lambda)
}

impl SymplecticMatrix {
    /// Validates membership in `GSp_{2h}` and caches the multiplier.
    pub fn new(field: Fq, h: usize, entries: Vec<FqElement>) -> Result<Self, SymplError> {
        let multiplier = multiplier_of(&field, h, &entries)?;
        Ok(SymplecticMatrix { field, h, entries, multiplier })
    }

    pub fn from_codes(field: &Fq, h: usize, codes: &[u64]) -> Result<Self, SymplError> {
        let entries: Result<Vec<FqElement>, FfError> = codes.iter().map(|&c| field.elem(c)).collect();
        SymplecticMatrix::new(field.clone(), h, entries?)
    }

    /// Signed integer entries, embedded via the prime subfield.
    pub fn from_ints(field: &Fq, h: usize, ints: &[i64]) -> Result<Self, SymplError> {
        let entries: Vec<FqElement> = ints.iter().map(|&v| field.from_int(v)).collect();
        SymplecticMatrix::new(field.clone(), h, entries)
    }

    pub fn identity(field: &Fq, h: usize) -> Self {
        let n = 2 * h;
        SymplecticMatrix {
            field: field.clone(),
            h,
            entries: matrix::identity(field, n),
            multiplier: field.one(),
        }
    }

    pub fn field(&self) -> &Fq {
        &self.field
    }

    pub fn half_dim(&self) -> usize {
        self.h
    }

    pub fn dim(&self) -> usize {
        2 * self.h
    }

    pub fn entries(&self) -> &[FqElement] {
        &self.entries
    }

    pub fn entry(&self, r: usize, c: usize) -> FqElement {
        self.entries[matrix::idx(2 * self.h, r, c)]
    }

    pub fn multiplier(&self) -> FqElement {
        self.multiplier
    }

    /// Monic characteristic polynomial, degree `2h`.
    pub fn char_poly(&self) -> Poly {
        matrix::char_poly_raw(&self.field, 2 * self.h, &self.entries)
    }

    /// Group product; multipliers multiply.
    pub fn mul(&self, other: &SymplecticMatrix) -> SymplecticMatrix {
        assert!(self.field == other.field && self.h == other.h, "mixed groups");
        let entries = matrix::mul(&self.field, 2 * self.h, &self.entries, &other.entries);
        SymplecticMatrix {
            field: self.field.clone(),
            h: self.h,
            entries,
            multiplier: self.field.mul(self.multiplier, other.multiplier),
        }
    }

    /// The standard form `J_{2h}` itself, an element with multiplier 1.
    pub fn standard_form(field: &Fq, h: usize) -> SymplecticMatrix {
        let entries = matrix::standard_form(field, h);
        SymplecticMatrix {
            field: field.clone(),
            h,
            entries,
            multiplier: field.one(),
        }
    }
}

/// Block matrix `Diag(c_{P_1}, ..., c_{P_r}, lambda0 c_{P_1}^{-T}, ...,
/// lambda0 c_{P_r}^{-T})` built from monic factors with nonzero constant
/// terms whose degrees sum to `h`. The result lies in `GSp_{2h}` with
/// multiplier `lambda0` and stabilizes the span of the first `h` basis
/// vectors.
pub fn companion_block(
    field: &Fq,
    factors: &[Poly],
    lambda0: FqElement,
) -> Result<SymplecticMatrix, SymplError> {
    if lambda0.is_zero() {
        return Err(SymplError::Field(FfError::ZeroLambda));
    }
    let mut h = 0usize;
    for p in factors {
        let d = p.degree().ok_or(SymplError::BadFactors)?;
        if d == 0 || !p.is_monic() || p.coeff(0).is_zero() || p.field() != field {
            return Err(SymplError::BadFactors);
        }
        h += d;
    }
    if h == 0 {
        return Err(SymplError::BadFactors);
    }
    let n = 2 * h;
    let mut entries = vec![field.zero(); n * n];
    let mut offset = 0usize;
    for p in factors {
        let d = p.degree().unwrap();
        let comp = companion_matrix(field, p);
        let inv = matrix::inverse(field, d, &comp).expect("nonzero constant term");
        let inv_t = matrix::transpose(d, &inv);
        for r in 0..d {
            for c in 0..d {
                entries[matrix::idx(n, offset + r, offset + c)] = comp[matrix::idx(d, r, c)];
                entries[matrix::idx(n, h + offset + r, h + offset + c)] =
                    field.mul(lambda0, inv_t[matrix::idx(d, r, c)]);
            }
        }
        offset += d;
    }
    SymplecticMatrix::new(field.clone(), h, entries)
}

/// Companion matrix of a monic polynomial: ones on the subdiagonal, negated
/// coefficients in the last column.
pub fn companion_matrix(field: &Fq, p: &Poly) -> Vec<FqElement> {
    let d = p.degree().expect("nonzero polynomial");
    assert!(d >= 1 && p.is_monic());
    let mut m = vec![field.zero(); d * d];
    for i in 0..d - 1 {
        m[matrix::idx(d, i + 1, i)] = field.one();
    }
    for i in 0..d {
        m[matrix::idx(d, i, d - 1)] = field.neg(p.coeff(i));
    }
    m
}

/// Symplectic transvection `x -> x + c psi(x, v) v` as a matrix
/// `I + c v (J v)^T`; always an element of `Sp_{2h}`.
pub fn transvection(field: &Fq, h: usize, v: &[FqElement], c: FqElement) -> SymplecticMatrix {
    let n = 2 * h;
    assert_eq!(v.len(), n);
    let mut jv = vec![field.zero(); n];
    for i in 0..h {
        jv[i] = v[h + i];
        jv[h + i] = field.neg(v[i]);
    }
    let mut entries = matrix::identity(field, n);
    for i in 0..n {
        if v[i].is_zero() {
            continue;
        }
        let cv = field.mul(c, v[i]);
        for j in 0..n {
            let t = field.mul(cv, jv[j]);
            entries[matrix::idx(n, i, j)] = field.add(entries[matrix::idx(n, i, j)], t);
        }
    }
    SymplecticMatrix {
        field: field.clone(),
        h,
        entries,
        multiplier: field.one(),
    }
}

/// The multiplier section `Diag(mu I_h, I_h)`, an element with
/// multiplier `mu`.
pub fn multiplier_section(field: &Fq, h: usize, mu: FqElement) -> SymplecticMatrix {
    assert!(!mu.is_zero());
    let n = 2 * h;
    let mut entries = matrix::identity(field, n);
    for i in 0..h {
        entries[matrix::idx(n, i, i)] = mu;
    }
    SymplecticMatrix {
        field: field.clone(),
        h,
        entries,
        multiplier: mu,
    }
}

/// Seeded random element of `GSp_{2h}(F_q)`: a walk of random symplectic
/// transvections followed by a random multiplier section.
pub fn random_element(field: &Fq, h: usize, rng: &mut ChaCha8Rng) -> SymplecticMatrix {
    let n = 2 * h;
    let q = field.order();
    let steps = 8 * n;
    let mut acc = SymplecticMatrix::identity(field, h);
    for _ in 0..steps {
        let mut v: Vec<FqElement> = (0..n).map(|_| field.elem(rng.gen_range(0..q)).unwrap()).collect();
        if v.iter().all(|x| x.is_zero()) {
            v[rng.gen_range(0..n)] = field.one();
        }
        let c = field.elem(rng.gen_range(1..q)).unwrap();
        acc = acc.mul(&transvection(field, h, &v, c));
    }
    let mu = field.elem(rng.gen_range(1..q)).unwrap();
    acc.mul(&multiplier_section(field, h, mu))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn multiplier_spec_examples() {
        let f3 = Fq::prime(3).unwrap();
        for h in 1..=2usize {
            let id = SymplecticMatrix::identity(&f3, h);
            assert_eq!(multiplier_of(&f3, h, id.entries()).unwrap(), f3.one());
        }
        // scalar matrix aI at h = 1 has multiplier a^2
        let f7 = Fq::prime(7).unwrap();
        for a in 1..7i64 {
            let m = SymplecticMatrix::from_ints(&f7, 1, &[a, 0, 0, a]).unwrap();
            assert_eq!(m.multiplier(), f7.mul(f7.from_int(a), f7.from_int(a)));
        }
        // rotation over F_3
        let rot = SymplecticMatrix::from_ints(&f3, 1, &[0, -1, 1, 0]).unwrap();
        assert_eq!(rot.multiplier(), f3.one());
        // the form matrix itself is a similitude with multiplier 1
        for h in 1..=3usize {
            let j = SymplecticMatrix::standard_form(&f3, h);
            assert_eq!(multiplier_of(&f3, h, j.entries()).unwrap(), f3.one());
        }
        // singular matrices are rejected
        assert_eq!(
            SymplecticMatrix::from_ints(&f3, 1, &[1, 1, 0, 0]).unwrap_err(),
            SymplError::NotSymplectic
        );
        // a 4x4 invertible non-similitude is rejected
        let bad = SymplecticMatrix::from_ints(
            &f3,
            2,
            &[1, 1, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 1, 1],
        );
        assert_eq!(bad.unwrap_err(), SymplError::NotSymplectic);
    }

    #[test]
    fn multiplier_is_homomorphism() {
        let f5 = Fq::prime(5).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for h in 1..=2usize {
            for _ in 0..50 {
                let a = random_element(&f5, h, &mut rng);
                let b = random_element(&f5, h, &mut rng);
                let ab = a.mul(&b);
                assert_eq!(ab.multiplier(), f5.mul(a.multiplier(), b.multiplier()));
                assert_eq!(multiplier_of(&f5, h, ab.entries()).unwrap(), ab.multiplier());
            }
        }
    }

    #[test]
    fn char_poly_spec_examples() {
        let f3 = Fq::prime(3).unwrap();
        let id = SymplecticMatrix::identity(&f3, 1);
        // (X - 1)^2 = X^2 + X + 1 over F_3
        assert_eq!(id.char_poly(), Poly::from_codes(&f3, &[1, 1, 1]).unwrap());

        let rot = SymplecticMatrix::from_ints(&f3, 1, &[0, -1, 1, 0]).unwrap();
        assert_eq!(rot.char_poly(), Poly::from_codes(&f3, &[1, 0, 1]).unwrap());

        // companion block of P = X - 2 with lambda0 = 3 over F_5: diag(2, 4)
        let f5 = Fq::prime(5).unwrap();
        let p = Poly::x_minus(&f5, f5.from_int(2));
        let m = companion_block(&f5, &[p], f5.from_int(3)).unwrap();
        assert_eq!(m.entries()[0].code(), 2);
        assert_eq!(m.entries()[3].code(), 4);
        assert_eq!(m.multiplier(), f5.from_int(3));
        // characteristic polynomial (X - 2)(X - 4)
        let expect = Poly::x_minus(&f5, f5.from_int(2)).mul(&Poly::x_minus(&f5, f5.from_int(4)));
        assert_eq!(m.char_poly(), expect);
    }

    #[test]
    fn char_poly_matches_permutation_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for (q, h) in [(3u64, 1usize), (5, 1), (3, 2), (5, 2), (2, 3)] {
            let (p, e) = crate::ff::nt::as_prime_power(q).unwrap();
            let f = Fq::extension(p, e).unwrap();
            for _ in 0..25 {
                let m = random_element(&f, h, &mut rng);
                let fast = m.char_poly();
                let slow = matrix::char_poly_permanent_oracle(&f, 2 * h, m.entries());
                assert_eq!(fast, slow, "q={q} h={h}");
                assert!(fast.is_monic());
                assert_eq!(fast.degree(), Some(2 * h));
            }
        }
        // also over an extension field
        let f9 = Fq::extension(3, 2).unwrap();
        for _ in 0..25 {
            let m = random_element(&f9, 1, &mut rng);
            assert_eq!(
                m.char_poly(),
                matrix::char_poly_permanent_oracle(&f9, 2, m.entries())
            );
        }
    }

    #[test]
    fn char_poly_functional_equation() {
        // chi_m is its own lambda0-reciprocal for every similitude
        let mut rng = ChaCha8Rng::seed_from_u64(37);
        for (q, h) in [(3u64, 1usize), (7, 1), (3, 2), (5, 2)] {
            let f = Fq::prime(q).unwrap();
            for _ in 0..40 {
                let m = random_element(&f, h, &mut rng);
                let chi = m.char_poly();
                assert_eq!(chi.lambda_reciprocal(m.multiplier()).unwrap(), chi);
            }
        }
    }

    #[test]
    fn companion_block_spec_examples() {
        let f3 = Fq::prime(3).unwrap();
        // (P = X - 1, lambda0 = 1) gives the identity
        let p = Poly::x_minus(&f3, f3.one());
        let m = companion_block(&f3, &[p.clone()], f3.one()).unwrap();
        assert_eq!(m, SymplecticMatrix::identity(&f3, 1));

        // (X - 1, X - 1, lambda0 = 2) over F_3: diag(1, 1, 2, 2)
        let m = companion_block(&f3, &[p.clone(), p], f3.from_int(2)).unwrap();
        let diag: Vec<u64> = (0..4).map(|i| m.entry(i, i).code()).collect();
        assert_eq!(diag, vec![1, 1, 2, 2]);
        assert_eq!(m.multiplier(), f3.from_int(2));

        // degree mismatch and zero constant terms are rejected
        let f5 = Fq::prime(5).unwrap();
        let x = Poly::x(&f5);
        assert!(companion_block(&f5, &[x], f5.one()).is_err());
        assert!(companion_block(&f5, &[], f5.one()).is_err());
    }

    #[test]
    fn transvections_preserve_the_form() {
        let f4 = Fq::extension(2, 2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for h in 1..=2usize {
            for _ in 0..30 {
                let n = 2 * h;
                let v: Vec<FqElement> =
                    (0..n).map(|_| f4.elem(rng.gen_range(0..4)).unwrap()).collect();
                if v.iter().all(|x| x.is_zero()) {
                    continue;
                }
                let c = f4.elem(rng.gen_range(1..4)).unwrap();
                let t = transvection(&f4, h, &v, c);
                assert_eq!(multiplier_of(&f4, h, t.entries()).unwrap(), f4.one());
            }
        }
    }
}
