//! Dense linear algebra over `GF(p)`.

use crate::ring::modp;

#[derive(Debug, PartialEq, Eq)]
pub(crate) enum Solve {
    Unique(Vec<u64>),
    Underdetermined,
    Inconsistent,
}

/// Solves `A x = b` for a tall matrix given as rows.
pub(crate) fn solve(mut rows: Vec<Vec<u64>>, mut rhs: Vec<u64>, ncols: usize, p: u64) -> Solve {
    let nrows = rows.len();
    let mut pivot_row = 0;
    let mut pivots = Vec::with_capacity(ncols);
    for col in 0..ncols {
        let Some(r) = (pivot_row..nrows).find(|&r| rows[r][col] != 0) else {
            return Solve::Underdetermined;
        };
        rows.swap(pivot_row, r);
        rhs.swap(pivot_row, r);
        let inv = modp::inv(rows[pivot_row][col], p).expect("nonzero pivot");
        for c in col..ncols {
            rows[pivot_row][c] = modp::mul(rows[pivot_row][c], inv, p);
        }
        rhs[pivot_row] = modp::mul(rhs[pivot_row], inv, p);
        for r in 0..nrows {
            if r == pivot_row || rows[r][col] == 0 {
                continue;
            }
            let f = rows[r][col];
            for c in col..ncols {
                let t = modp::mul(f, rows[pivot_row][c], p);
                rows[r][c] = modp::sub(rows[r][c], t, p);
            }
            let t = modp::mul(f, rhs[pivot_row], p);
            rhs[r] = modp::sub(rhs[r], t, p);
        }
        pivots.push(pivot_row);
        pivot_row += 1;
    }
    if rhs[pivot_row..].iter().any(|v| *v != 0) {
        return Solve::Inconsistent;
    }
    Solve::Unique(pivots.iter().map(|&r| rhs[r]).collect())
}

/// Solves `Σ_j c_j b_j^k = v_k` for `k = 0..n` given distinct nonzero nodes `b`.
pub(crate) fn transposed_vandermonde(nodes: &[u64], values: &[u64], p: u64) -> Vec<u64> {
    let n = nodes.len();
    // master polynomial M(z) = Π (z − b_j), coefficients low to high
    let mut master = vec![1u64];
    for &b in nodes {
        let mut next = vec![0u64; master.len() + 1];
        for (i, &c) in master.iter().enumerate() {
            next[i + 1] = modp::add(next[i + 1], c, p);
            next[i] = modp::sub(next[i], modp::mul(c, b, p), p);
        }
        master = next;
    }
    let mut out = Vec::with_capacity(n);
    let mut q = vec![0u64; n];
    for &b in nodes {
        // synthetic division M(z) / (z − b)
        let mut carry = 0u64;
        for i in (0..n).rev() {
            carry = modp::add(master[i + 1], modp::mul(carry, b, p), p);
            q[i] = carry;
        }
        let mut num = 0u64;
        let mut den = 0u64;
        let mut bp = 1u64;
        for i in 0..n {
            num = modp::add(num, modp::mul(q[i], values[i], p), p);
            den = modp::add(den, modp::mul(q[i], bp, p), p);
            bp = modp::mul(bp, b, p);
        }
        out.push(modp::mul(num, modp::inv(den, p).expect("distinct nodes"), p));
    }
    out
}
