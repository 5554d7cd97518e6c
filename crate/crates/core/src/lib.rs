//! Exact arithmetic in finite fields, split-matrix detection and counting in
//! general symplectic groups, and a reproducible statistical experiment on
//! the distribution of Elkies primes for reductions of an elliptic curve
//! over Q.
//!
//! The crate is organized in five layers:
//!
//! * [`ff`] — prime and prime-power finite fields, dense univariate
//!   polynomials, factorization.
//! * [`comb`] — exact combinatorial constants: partitions, the split density
//!   `alpha(h)`, group orders, Gaussian moments.
//! * [`sympl`] — `GSp_{2h}(F_q)` membership, Lagrangian brute force, the
//!   characteristic-polynomial split test, and exhaustive census counts.
//! * [`ec`] — elliptic curves over `F_p` from a fixed global Weierstrass
//!   model, point counting, the Elkies test for a prime `l`.
//! * [`harness`] — prime sieving, the `(P, L)` sweep, standardized moments,
//!   model comparison and report emission.

pub mod comb;
pub mod ec;
pub mod ff;
pub mod harness;
pub mod sympl;

pub mod cli;
