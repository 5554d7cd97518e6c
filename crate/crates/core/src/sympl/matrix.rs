//! Square-matrix helpers over a finite field, row-major flat storage.

use crate::ff::{Fq, FqElement, Poly};

#[inline]
pub(crate) fn idx(n: usize, r: usize, c: usize) -> usize {
    r * n + c
}

pub(crate) fn identity(f: &Fq, n: usize) -> Vec<FqElement> {
    let mut m = vec![f.zero(); n * n];
    for i in 0..n {
        m[idx(n, i, i)] = f.one();
    }
    m
}

/// The standard alternating form `J_{2h}`: top-right block `I_h`,
/// bottom-left block `-I_h`.
pub(crate) fn standard_form(f: &Fq, h: usize) -> Vec<FqElement> {
    let n = 2 * h;
    let mut j = vec![f.zero(); n * n];
    for i in 0..h {
        j[idx(n, i, h + i)] = f.one();
        j[idx(n, h + i, i)] = f.neg(f.one());
    }
    j
}

pub(crate) fn mul(f: &Fq, n: usize, a: &[FqElement], b: &[FqElement]) -> Vec<FqElement> {
    let mut out = vec![f.zero(); n * n];
    for r in 0..n {
        for k in 0..n {
            let v = a[idx(n, r, k)];
            if v.is_zero() {
                continue;
            }
            for c in 0..n {
                out[idx(n, r, c)] = f.add(out[idx(n, r, c)], f.mul(v, b[idx(n, k, c)]));
            }
        }
    }
    out
}

pub(crate) fn transpose(n: usize, a: &[FqElement]) -> Vec<FqElement> {
    let mut out = a.to_vec();
    for r in 0..n {
        for c in 0..n {
            out[idx(n, r, c)] = a[idx(n, c, r)];
        }
    }
    out
}

/// `out[r] = sum_c a[r][c] * v[c]`.
pub(crate) fn matvec_into(f: &Fq, n: usize, a: &[FqElement], v: &[FqElement], out: &mut [FqElement]) {
    for r in 0..n {
        let mut acc = f.zero();
        for c in 0..n {
            let m = a[idx(n, r, c)];
            if !m.is_zero() && !v[c].is_zero() {
                acc = f.add(acc, f.mul(m, v[c]));
            }
        }
        out[r] = acc;
    }
}

/// Gauss-Jordan inverse; `None` when singular.
pub(crate) fn inverse(f: &Fq, n: usize, a: &[FqElement]) -> Option<Vec<FqElement>> {
    let mut m = a.to_vec();
    let mut inv = identity(f, n);
    for col in 0..n {
        let pivot_row = (col..n).find(|&r| !m[idx(n, r, col)].is_zero())?;
        if pivot_row != col {
            for c in 0..n {
                m.swap(idx(n, pivot_row, c), idx(n, col, c));
                inv.swap(idx(n, pivot_row, c), idx(n, col, c));
            }
        }
        let piv_inv = f.inv(m[idx(n, col, col)]).ok()?;
        for c in 0..n {
            m[idx(n, col, c)] = f.mul(m[idx(n, col, c)], piv_inv);
            inv[idx(n, col, c)] = f.mul(inv[idx(n, col, c)], piv_inv);
        }
        for r in 0..n {
            if r == col {
                continue;
            }
            let factor = m[idx(n, r, col)];
            if factor.is_zero() {
                continue;
            }
            for c in 0..n {
                let t = f.mul(factor, m[idx(n, col, c)]);
                m[idx(n, r, c)] = f.sub(m[idx(n, r, c)], t);
                let t = f.mul(factor, inv[idx(n, col, c)]);
                inv[idx(n, r, c)] = f.sub(inv[idx(n, r, c)], t);
            }
        }
    }
    Some(inv)
}

/// Characteristic polynomial `det(X I - a)` by similarity reduction to upper
/// Hessenberg form followed by the leading-minor recurrence. Exact over any
/// field, including characteristic 2 and 3.
pub(crate) fn char_poly_raw(f: &Fq, n: usize, a: &[FqElement]) -> Poly {
    let mut m = a.to_vec();
    for col in 0..n.saturating_sub(2) {
        let Some(pr) = (col + 1..n).find(|&r| !m[idx(n, r, col)].is_zero()) else {
            continue;
        };
        if pr != col + 1 {
            for c in 0..n {
                m.swap(idx(n, pr, c), idx(n, col + 1, c));
            }
            for r in 0..n {
                m.swap(idx(n, r, pr), idx(n, r, col + 1));
            }
        }
        let piv_inv = f.inv(m[idx(n, col + 1, col)]).expect("nonzero pivot");
        for row in col + 2..n {
            let factor = f.mul(m[idx(n, row, col)], piv_inv);
            if factor.is_zero() {
                continue;
            }
            for c in 0..n {
                let t = f.mul(factor, m[idx(n, col + 1, c)]);
                m[idx(n, row, c)] = f.sub(m[idx(n, row, c)], t);
            }
            for r in 0..n {
                let t = f.mul(factor, m[idx(n, r, row)]);
                m[idx(n, r, col + 1)] = f.add(m[idx(n, r, col + 1)], t);
            }
        }
    }
    // p_k = (X - H[k-1][k-1]) p_{k-1}
    //       - sum_{s=1}^{k-1} H[k-1-s][k-1] (prod_{i=k-s}^{k-1} H[i][i-1]) p_{k-1-s}
    let mut ps: Vec<Poly> = Vec::with_capacity(n + 1);
    ps.push(Poly::one(f));
    for k in 1..=n {
        let mut pk = Poly::x_minus(f, m[idx(n, k - 1, k - 1)]).mul(&ps[k - 1]);
        let mut beta = f.one();
        for s in 1..k {
            beta = f.mul(beta, m[idx(n, k - s, k - s - 1)]);
            if beta.is_zero() {
                break;
            }
            let coef = f.mul(m[idx(n, k - 1 - s, k - 1)], beta);
            if !coef.is_zero() {
                pk = pk.sub(&ps[k - 1 - s].scale(coef));
            }
        }
        ps.push(pk);
    }
    ps.pop().expect("n >= 0")
}

/// Reference characteristic polynomial by the permutation expansion of
/// `det(X I - a)`; exponential cost, used as a test oracle.
#[cfg(test)]
pub(crate) fn char_poly_permanent_oracle(f: &Fq, n: usize, a: &[FqElement]) -> Poly {
    fn visit(
        f: &Fq,
        n: usize,
        entries: &[Poly],
        used: &mut Vec<bool>,
        row: usize,
        sign_flip: bool,
        acc: Poly,
        total: &mut Poly,
    ) {
        if row == n {
            *total = if sign_flip { total.sub(&acc) } else { total.add(&acc) };
            return;
        }
        for c in 0..n {
            if used[c] {
                continue;
            }
            let cell = &entries[row * n + c];
            if cell.is_zero() {
                continue;
            }
            // assigning row -> c adds one inversion per previously assigned
            // column greater than c
            let smaller = used[..c].iter().filter(|&&u| u).count();
            let flip = sign_flip ^ ((row - smaller) % 2 == 1);
            used[c] = true;
            visit(f, n, entries, used, row + 1, flip, acc.mul(cell), total);
            used[c] = false;
        }
    }
    let entries: Vec<Poly> = (0..n * n)
        .map(|k| {
            let (r, c) = (k / n, k % n);
            if r == c {
                Poly::x_minus(f, a[k])
            } else {
                Poly::constant(f, f.neg(a[k]))
            }
        })
        .collect();
    let mut total = Poly::zero(f);
    let mut used = vec![false; n];
    visit(f, n, &entries, &mut used, 0, false, Poly::one(f), &mut total);
    total
}
