//! Dense univariate polynomials over a fixed finite field.

use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;

use super::{FfError, Fq, FqElement};

/// A polynomial with coefficients in one [`Fq`], constant term first, no
/// trailing zeros. The zero polynomial has an empty coefficient vector.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    field: Fq,
    coeffs: Vec<FqElement>,
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} over {}", self.field)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c.code()) {
                (0, v) => write!(f, "{v}")?,
                (1, 1) => write!(f, "X")?,
                (1, v) => write!(f, "{v}X")?,
                (_, 1) => write!(f, "X^{i}")?,
                (_, v) => write!(f, "{v}X^{i}")?,
            }
        }
        Ok(())
    }
}

impl Poly {
    /// Builds a polynomial, trimming trailing zeros.
    pub fn new(field: Fq, mut coeffs: Vec<FqElement>) -> Poly {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn from_codes(field: &Fq, codes: &[u64]) -> Result<Poly, FfError> {
        let coeffs: Result<Vec<FqElement>, _> = codes.iter().map(|&c| field.elem(c)).collect();
        Ok(Poly::new(field.clone(), coeffs?))
    }

    pub fn zero(field: &Fq) -> Poly {
        Poly { field: field.clone(), coeffs: Vec::new() }
    }

    pub fn one(field: &Fq) -> Poly {
        Poly::new(field.clone(), vec![field.one()])
    }

    pub fn constant(field: &Fq, c: FqElement) -> Poly {
        Poly::new(field.clone(), vec![c])
    }

    /// The monomial `X`.
    pub fn x(field: &Fq) -> Poly {
        Poly::new(field.clone(), vec![field.zero(), field.one()])
    }

    /// `X - a`.
    pub fn x_minus(field: &Fq, a: FqElement) -> Poly {
        Poly::new(field.clone(), vec![field.neg(a), field.one()])
    }

    pub fn field(&self) -> &Fq {
        &self.field
    }

    pub fn coeffs(&self) -> &[FqElement] {
        &self.coeffs
    }

    /// Coefficient of `X^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> FqElement {
        self.coeffs.get(i).copied().unwrap_or(FqElement::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<FqElement> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Some(self.field.one())
    }

    fn check_field(&self, other: &Poly) {
        assert!(self.field == other.field, "polynomials from different fields");
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.check_field(other);
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.field.add(self.coeff(i), other.coeff(i))).collect();
        Poly::new(self.field.clone(), coeffs)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.check_field(other);
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.field.sub(self.coeff(i), other.coeff(i))).collect();
        Poly::new(self.field.clone(), coeffs)
    }

    pub fn neg(&self) -> Poly {
        let coeffs = self.coeffs.iter().map(|&c| self.field.neg(c)).collect();
        Poly::new(self.field.clone(), coeffs)
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        self.check_field(other);
        if self.is_zero() || other.is_zero() {
            return Poly::zero(&self.field);
        }
        let f = &self.field;
        let mut coeffs = vec![f.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = f.add(coeffs[i + j], f.mul(a, b));
            }
        }
        Poly::new(f.clone(), coeffs)
    }

    pub fn scale(&self, c: FqElement) -> Poly {
        let coeffs = self.coeffs.iter().map(|&a| self.field.mul(a, c)).collect();
        Poly::new(self.field.clone(), coeffs)
    }

    /// Quotient and remainder; errors on division by zero.
    pub fn divrem(&self, divisor: &Poly) -> Result<(Poly, Poly), FfError> {
        self.check_field(divisor);
        let d = divisor.degree().ok_or(FfError::ZeroPolynomial)?;
        let f = &self.field;
        let lead_inv = f.inv(divisor.leading().unwrap())?;
        if self.degree().map_or(true, |n| n < d) {
            return Ok((Poly::zero(f), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let n = rem.len() - 1;
        let mut quo = vec![f.zero(); n - d + 1];
        for k in (d..=n).rev() {
            let c = rem[k];
            if c.is_zero() {
                continue;
            }
            let qc = f.mul(c, lead_inv);
            quo[k - d] = qc;
            for j in 0..=d {
                let sub = f.mul(qc, divisor.coeffs[j]);
                rem[k - d + j] = f.sub(rem[k - d + j], sub);
            }
        }
        Ok((Poly::new(f.clone(), quo), Poly::new(f.clone(), rem)))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly, FfError> {
        Ok(self.divrem(divisor)?.1)
    }

    /// Exact division; panics if the remainder is nonzero.
    pub fn div_exact(&self, divisor: &Poly) -> Poly {
        let (q, r) = self.divrem(divisor).expect("division by zero polynomial");
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Poly {
        self.check_field(other);
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.make_monic()
        }
    }

    /// Divides by the leading coefficient; the zero polynomial is unchanged.
    pub fn make_monic(&self) -> Poly {
        match self.leading() {
            None => self.clone(),
            Some(l) if l == self.field.one() => self.clone(),
            Some(l) => {
                let inv = self.field.inv(l).expect("nonzero leading coefficient");
                self.scale(inv)
            }
        }
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero(&self.field);
        }
        let f = &self.field;
        let coeffs = self.coeffs[1..]
            .iter()
            .enumerate()
            .map(|(i, &c)| f.mul(f.from_int((i + 1) as i64), c))
            .collect();
        Poly::new(f.clone(), coeffs)
    }

    pub fn eval(&self, x: FqElement) -> FqElement {
        let f = &self.field;
        let mut acc = f.zero();
        for &c in self.coeffs.iter().rev() {
            acc = f.add(f.mul(acc, x), c);
        }
        acc
    }

    /// Roots among the elements of `F_q` (multiplicity-free scan; meant for
    /// small fields).
    pub fn roots_in_field(&self) -> Vec<FqElement> {
        self.field.elements().filter(|&x| self.eval(x).is_zero()).collect()
    }

    /// `self^exp mod modulus` by square-and-multiply on the exponent bits.
    pub fn pow_mod(&self, exp: &BigUint, modulus: &Poly) -> Result<Poly, FfError> {
        self.check_field(modulus);
        if modulus.is_zero() {
            return Err(FfError::ZeroPolynomial);
        }
        let mut acc = Poly::one(&self.field);
        let mut base = self.rem(modulus)?;
        let bits = exp.bits();
        for i in 0..bits {
            if exp.bit(i) {
                acc = acc.mul(&base).rem(modulus)?;
            }
            if i + 1 < bits {
                base = base.mul(&base).rem(modulus)?;
            }
        }
        if exp.is_zero() {
            acc = Poly::one(&self.field).rem(modulus)?;
        }
        Ok(acc)
    }

    /// The lambda0-reciprocal of a monic polynomial `P` of degree `r` with
    /// nonzero constant term: the monic polynomial `X^r P(lambda0/X) / P(0)`.
    /// Its roots are `lambda0 / rho` for `rho` a root of `P`, and applying
    /// the map twice gives `P` back.
    pub fn lambda_reciprocal(&self, lambda0: FqElement) -> Result<Poly, FfError> {
        let f = &self.field;
        let r = self.degree().ok_or(FfError::ZeroPolynomial)?;
        if !self.is_monic() {
            return Err(FfError::Guard("lambda_reciprocal requires a monic polynomial".into()));
        }
        let a0 = self.coeff(0);
        if a0.is_zero() {
            return Err(FfError::ZeroConstantTerm);
        }
        if lambda0.is_zero() {
            return Err(FfError::ZeroLambda);
        }
        let a0_inv = f.inv(a0)?;
        // coefficient of X^j is a_{r-j} * lambda0^{r-j} / a_0
        let coeffs = (0..=r)
            .map(|j| {
                let t = f.mul(self.coeff(r - j), f.pow(lambda0, (r - j) as u64));
                f.mul(t, a0_inv)
            })
            .collect();
        Ok(Poly::new(f.clone(), coeffs))
    }

    /// Wire format: comma-separated coefficient codes, constant term first.
    /// The zero polynomial serializes as the empty string.
    pub fn to_coeff_string(&self) -> String {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.code().to_string()).collect();
        parts.join(",")
    }

    pub fn from_coeff_string(field: &Fq, s: &str) -> Result<Poly, FfError> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Poly::zero(field));
        }
        let codes: Result<Vec<u64>, _> = s.split(',').map(|t| t.trim().parse::<u64>()).collect();
        let codes = codes.map_err(|_| FfError::Parse(format!("bad coefficient list: {s}")))?;
        Poly::from_codes(field, &codes)
    }
}
