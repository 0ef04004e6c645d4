//! Dense symmetric integer matrices and exact (arbitrary-precision) walk
//! counting. Floating point enters only in the spectral engine; everything
//! here is exact so walk-count and Krylov-rank identities can be tested as
//! integer equalities.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

/// Dense symmetric matrix with integer entries, row-major storage.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntSymMatrix {
    n: usize,
    entries: Vec<i64>,
}

impl IntSymMatrix {
    pub fn zeros(n: usize) -> Self {
        IntSymMatrix {
            n,
            entries: vec![0; n * n],
        }
    }

    /// Builds from row-major rows, rejecting non-square or asymmetric input.
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for r in &rows {
            if r.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: r.len(),
                });
            }
            entries.extend_from_slice(r);
        }
        let m = IntSymMatrix { n, entries };
        for i in 0..n {
            for j in i + 1..n {
                if m.get(i, j) != m.get(j, i) {
                    return Err(Error::NotSymmetric { row: i, col: j });
                }
            }
        }
        Ok(m)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.n + j]
    }

    /// Sets both (i,j) and (j,i).
    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.entries[i * self.n + j] = v;
        self.entries[j * self.n + i] = v;
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn max_abs_entry(&self) -> i64 {
        self.entries.iter().map(|e| e.abs()).max().unwrap_or(0)
    }

    /// Row-major copy as f64, for the floating-point engine.
    pub fn to_f64(&self) -> Vec<f64> {
        self.entries.iter().map(|&e| e as f64).collect()
    }

    /// Exact matrix product (used by test oracles as the brute-force route).
    pub fn mul_big(&self, other: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
        let n = self.n;
        let mut out = vec![vec![BigInt::zero(); n]; n];
        for i in 0..n {
            for kk in 0..n {
                let a = self.get(i, kk);
                if a == 0 {
                    continue;
                }
                let a = BigInt::from(a);
                for j in 0..n {
                    let t = &a * &other[kk][j];
                    out[i][j] += t;
                }
            }
        }
        out
    }

    /// Identity lifted to BigInt rows (companion to `mul_big`).
    pub fn big_identity(n: usize) -> Vec<Vec<BigInt>> {
        let mut m = vec![vec![BigInt::zero(); n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = BigInt::from(1);
        }
        m
    }

    /// Plain-text dump: first line n, then n rows of integers.
    pub fn dump(&self) -> String {
        let mut s = format!("{}\n", self.n);
        for i in 0..self.n {
            let row: Vec<String> = self.row(i).iter().map(|e| e.to_string()).collect();
            s.push_str(&row.join(" "));
            s.push('\n');
        }
        s
    }
}

/// Adjacency matrix: `a_ij` counts the hyperedges containing both `v_i` and
/// `v_j` (multiset semantics), zero diagonal.
pub fn adjacency_matrix(h: &Hypergraph) -> IntSymMatrix {
    let mut a = IntSymMatrix::zeros(h.order());
    for e in h.edges() {
        for (idx, &u) in e.iter().enumerate() {
            for &v in &e[idx + 1..] {
                let c = a.get(u, v);
                a.set(u, v, c + 1);
            }
        }
    }
    a
}

/// Seidel matrix `S = J - I - 2A`, zero diagonal.
pub fn seidel_matrix(h: &Hypergraph) -> IntSymMatrix {
    let n = h.order();
    let a = adjacency_matrix(h);
    let mut s = IntSymMatrix::zeros(n);
    for i in 0..n {
        for j in i + 1..n {
            s.set(i, j, 1 - 2 * a.get(i, j));
        }
    }
    s
}

/// Applies the Seidel matrix to a vector via edge-local sums:
/// `(Sx)_v = x(V−{v}) − 2·Σ_{e∋v} x(e−{v})`.
///
/// For integer-valued inputs within f64-exact range this is bit-identical to
/// the dense matrix product.
pub fn seidel_apply(h: &Hypergraph, x: &[f64]) -> Result<Vec<f64>> {
    let n = h.order();
    if x.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: x.len(),
        });
    }
    let total: f64 = x.iter().sum();
    let mut out = vec![0.0; n];
    for (v, o) in out.iter_mut().enumerate() {
        *o = total - x[v];
    }
    for e in h.edges() {
        let esum: f64 = e.iter().map(|&u| x[u]).sum();
        for &v in e {
            out[v] -= 2.0 * (esum - x[v]);
        }
    }
    Ok(out)
}

/// Table of total walk counts `N_0..N_L`, exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkTable {
    pub counts: Vec<BigInt>,
}

impl WalkTable {
    /// Lossy view for comparisons against spectral reconstructions.
    pub fn as_f64(&self) -> Vec<f64> {
        use num_traits::ToPrimitive;
        self.counts
            .iter()
            .map(|c| c.to_f64().unwrap_or(f64::INFINITY))
            .collect()
    }
}

/// `N_0..N_L` by iterated exact matrix-vector accumulation:
/// `N_l` is the sum of all entries of `A^l`.
pub fn walk_table(h: &Hypergraph, max_len: usize) -> WalkTable {
    let n = h.order();
    let a = adjacency_matrix(h);
    let mut v: Vec<BigInt> = vec![BigInt::from(1); n];
    let mut counts = Vec::with_capacity(max_len + 1);
    counts.push(BigInt::from(n as i64));
    for _ in 1..=max_len {
        let mut next = vec![BigInt::zero(); n];
        for i in 0..n {
            let mut acc = BigInt::zero();
            for j in 0..n {
                let c = a.get(i, j);
                if c != 0 {
                    acc += BigInt::from(c) * &v[j];
                }
            }
            next[i] = acc;
        }
        v = next;
        counts.push(v.iter().sum());
    }
    WalkTable { counts }
}

/// Total number of walks of length `l`, exact.
pub fn walk_count(h: &Hypergraph, l: usize) -> BigInt {
    walk_table(h, l).counts.pop().expect("table is nonempty")
}

/// Krylov walk matrix: columns `j, Mj, M²j, …, M^{n-1}j` in exact integers,
/// returned row-major (`result[r][c] = (M^c j)_r`).
pub fn krylov_walk_matrix(m: &IntSymMatrix) -> Vec<Vec<BigInt>> {
    let n = m.n();
    let mut col: Vec<BigInt> = vec![BigInt::from(1); n];
    let mut rows = vec![Vec::with_capacity(n); n];
    for c in 0..n {
        for (r, row) in rows.iter_mut().enumerate() {
            row.push(col[r].clone());
        }
        if c + 1 == n {
            break;
        }
        let mut next = vec![BigInt::zero(); n];
        for (i, slot) in next.iter_mut().enumerate() {
            let mut acc = BigInt::zero();
            for j in 0..n {
                let e = m.get(i, j);
                if e != 0 {
                    acc += BigInt::from(e) * &col[j];
                }
            }
            *slot = acc;
        }
        col = next;
    }
    rows
}

/// Exact integer rank by Bareiss fraction-free Gaussian elimination
/// (row pivoting, zero columns skipped). No tolerances involved.
pub fn exact_rank(matrix: &[Vec<BigInt>]) -> usize {
    let rows = matrix.len();
    if rows == 0 {
        return 0;
    }
    let cols = matrix[0].len();
    let mut a: Vec<Vec<BigInt>> = matrix.to_vec();
    let mut prev = BigInt::from(1);
    let mut rank = 0usize;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        for i in rank + 1..rows {
            for j in c + 1..cols {
                let num = &a[rank][c] * &a[i][j] - &a[i][c] * &a[rank][j];
                debug_assert!((&num % &prev).is_zero(), "Bareiss division must be exact");
                a[i][j] = num / &prev;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[rank][c].clone();
        rank += 1;
    }
    rank
}
