//! Floating-point spectral engine: cyclic Jacobi eigendecomposition for
//! symmetric matrices, tolerance-based spectrum grouping, determinant-based
//! characteristic polynomial evaluation, Seidel energy, main-eigenvalue
//! detection (projection and exact Krylov rank), interlacing checks, and
//! walk-generating-function reconstruction from an adjacency spectrum.
//!
//! The matrices here are small and dense, and the walk-coefficient and
//! projection tests need eigenvectors orthogonal to near machine precision;
//! cyclic Jacobi delivers both.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::matrix::{exact_rank, krylov_walk_matrix, seidel_matrix, IntSymMatrix};

/// Default absolute tolerance for grouping nearby eigenvalues.
pub const DEFAULT_GROUP_TOL: f64 = 1e-7;
/// Default threshold factor for the main-eigenvalue projection test.
pub const DEFAULT_MAIN_TOL: f64 = 1e-6;

const JACOBI_MAX_SWEEPS: usize = 100;

/// Eigendecomposition of a real symmetric matrix.
#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    /// Eigenvalues sorted descending.
    pub values: Vec<f64>,
    /// `vectors[i]` is the orthonormal eigenvector paired with `values[i]`.
    pub vectors: Vec<Vec<f64>>,
    /// max over pairs of ‖M·x − λx‖∞, measured against the input matrix.
    pub residual: f64,
}

/// Eigendecomposition of an integer symmetric matrix.
pub fn eigen_symmetric(m: &IntSymMatrix) -> Result<EigenDecomposition> {
    jacobi_eigen(m.n(), &m.to_f64())
}

/// Cyclic Jacobi on a dense row-major symmetric matrix.
///
/// Sweeps run until every off-diagonal magnitude drops below
/// `1e-12 · (1 + max|entry|)` of the input, failing after 100 sweeps.
pub fn jacobi_eigen(n: usize, data: &[f64]) -> Result<EigenDecomposition> {
    if data.len() != n * n {
        return Err(Error::DimensionMismatch {
            expected: n * n,
            got: data.len(),
        });
    }
    for i in 0..n {
        for j in i + 1..n {
            if data[i * n + j] != data[j * n + i] {
                return Err(Error::NotSymmetric { row: i, col: j });
            }
        }
    }
    if n == 0 {
        return Ok(EigenDecomposition {
            values: vec![],
            vectors: vec![],
            residual: 0.0,
        });
    }

    let max_abs = data.iter().fold(0.0f64, |m, &v| m.max(v.abs()));
    let off_tol = 1e-12 * (1.0 + max_abs);

    let mut a = data.to_vec();
    // v is column-major: v[c*n + r] = entry r of eigenvector c
    let mut v = vec![0.0f64; n * n];
    for c in 0..n {
        v[c * n + c] = 1.0;
    }

    let mut converged = false;
    for _sweep in 0..JACOBI_MAX_SWEEPS {
        let mut off_max = 0.0f64;
        for p in 0..n {
            for q in p + 1..n {
                off_max = off_max.max(a[p * n + q].abs());
            }
        }
        if off_max < off_tol {
            converged = true;
            break;
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq.abs() < off_tol * 1e-3 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                // smaller-magnitude rotation root for stability
                let t = if theta >= 0.0 {
                    1.0 / (theta + (1.0 + theta * theta).sqrt())
                } else {
                    -1.0 / (-theta + (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);

                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for r in 0..n {
                    if r == p || r == q {
                        continue;
                    }
                    let arp = a[r * n + p];
                    let arq = a[r * n + q];
                    let new_p = arp - s * (arq + tau * arp);
                    let new_q = arq + s * (arp - tau * arq);
                    a[r * n + p] = new_p;
                    a[p * n + r] = new_p;
                    a[r * n + q] = new_q;
                    a[q * n + r] = new_q;
                }
                for r in 0..n {
                    let vrp = v[p * n + r];
                    let vrq = v[q * n + r];
                    v[p * n + r] = vrp - s * (vrq + tau * vrp);
                    v[q * n + r] = vrq + s * (vrp - tau * vrq);
                }
            }
        }
    }
    if !converged {
        return Err(Error::NoConvergence {
            sweeps: JACOBI_MAX_SWEEPS,
        });
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        let vi = a[i * n + i];
        let vj = a[j * n + j];
        vj.partial_cmp(&vi).unwrap().then_with(|| {
            // deterministic tie-break for exactly equal values only
            let ci = &v[i * n..(i + 1) * n];
            let cj = &v[j * n..(j + 1) * n];
            ci.partial_cmp(cj).unwrap()
        })
    });

    let mut values = Vec::with_capacity(n);
    let mut vectors = Vec::with_capacity(n);
    for &c in &order {
        values.push(a[c * n + c]);
        let mut col = v[c * n..(c + 1) * n].to_vec();
        // fix the sign so the largest-magnitude entry is positive
        let mut lead = 0.0f64;
        for &x in &col {
            if x.abs() > lead.abs() {
                lead = x;
            }
        }
        if lead < 0.0 {
            for x in col.iter_mut() {
                *x = -*x;
            }
        }
        vectors.push(col);
    }

    let mut residual = 0.0f64;
    for (lam, x) in values.iter().zip(&vectors) {
        for r in 0..n {
            let mut mx = 0.0;
            for cc in 0..n {
                mx += data[r * n + cc] * x[cc];
            }
            residual = residual.max((mx - lam * x[r]).abs());
        }
    }

    Ok(EigenDecomposition {
        values,
        vectors,
        residual,
    })
}

/// One grouped eigenvalue.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpectrumEntry {
    pub value: f64,
    pub multiplicity: usize,
}

/// Eigenvalues grouped by tolerance; multiplicities sum to the matrix order.
#[derive(Debug, Clone, Serialize)]
pub struct Spectrum {
    pub entries: Vec<SpectrumEntry>,
    pub tol: f64,
}

impl Spectrum {
    /// Expands back to a descending value-per-eigenvalue list.
    pub fn expanded(&self) -> Vec<f64> {
        let mut out = Vec::new();
        for e in &self.entries {
            out.extend(std::iter::repeat_n(e.value, e.multiplicity));
        }
        out
    }

    pub fn total_multiplicity(&self) -> usize {
        self.entries.iter().map(|e| e.multiplicity).sum()
    }
}

/// Greedy left-to-right clustering of descending values: a value joins the
/// current group iff it lies within `tol` of the group's running mean; the
/// group's value is the mean of its members.
pub fn group_spectrum(values: &[f64], tol: f64) -> Spectrum {
    let mut entries: Vec<SpectrumEntry> = Vec::new();
    let mut sum = 0.0f64;
    let mut count = 0usize;
    for &v in values {
        if count > 0 && (v - sum / count as f64).abs() <= tol {
            sum += v;
            count += 1;
        } else {
            if count > 0 {
                entries.push(SpectrumEntry {
                    value: sum / count as f64,
                    multiplicity: count,
                });
            }
            sum = v;
            count = 1;
        }
    }
    if count > 0 {
        entries.push(SpectrumEntry {
            value: sum / count as f64,
            multiplicity: count,
        });
    }
    Spectrum { entries, tol }
}

/// `det(λI − M)` by LU factorization with partial pivoting (monic convention).
pub fn char_poly_eval(m: &IntSymMatrix, lambda: f64) -> f64 {
    char_poly_eval_dense(m.n(), &m.to_f64(), lambda)
}

/// Dense row-major variant of [`char_poly_eval`].
pub fn char_poly_eval_dense(n: usize, data: &[f64], lambda: f64) -> f64 {
    let mut b = vec![0.0f64; n * n];
    for i in 0..n {
        for j in 0..n {
            b[i * n + j] = -data[i * n + j];
        }
        b[i * n + i] += lambda;
    }
    let mut det = 1.0f64;
    for col in 0..n {
        let mut piv = col;
        for r in col + 1..n {
            if b[r * n + col].abs() > b[piv * n + col].abs() {
                piv = r;
            }
        }
        let pval = b[piv * n + col];
        if pval == 0.0 {
            return 0.0;
        }
        if piv != col {
            for j in 0..n {
                b.swap(col * n + j, piv * n + j);
            }
            det = -det;
        }
        det *= b[col * n + col];
        for r in col + 1..n {
            let f = b[r * n + col] / b[col * n + col];
            if f == 0.0 {
                continue;
            }
            for j in col..n {
                b[r * n + j] -= f * b[col * n + j];
            }
        }
    }
    det
}

/// Seidel energy: the sum of absolute values of the Seidel eigenvalues.
pub fn seidel_energy(h: &Hypergraph) -> Result<f64> {
    if h.order() == 0 {
        return Ok(0.0);
    }
    let d = eigen_symmetric(&seidel_matrix(h))?;
    Ok(d.values.iter().map(|v| v.abs()).sum())
}

/// A grouped eigenvalue with its main flag.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MainEigenvalue {
    pub value: f64,
    pub multiplicity: usize,
    pub is_main: bool,
}

/// Flags each grouped eigenvalue as main iff the projection of the all-ones
/// vector onto its eigenspace has norm exceeding `main_tol·√n`.
pub fn main_eigenvalues(
    decomp: &EigenDecomposition,
    group_tol: f64,
    main_tol: f64,
) -> Vec<MainEigenvalue> {
    let n = decomp.values.len();
    let spectrum = group_spectrum(&decomp.values, group_tol);
    let threshold = main_tol * (n as f64).sqrt();
    let mut out = Vec::with_capacity(spectrum.entries.len());
    let mut idx = 0usize;
    for e in &spectrum.entries {
        let mut proj_sq = 0.0f64;
        for x in &decomp.vectors[idx..idx + e.multiplicity] {
            let dot: f64 = x.iter().sum();
            proj_sq += dot * dot;
        }
        idx += e.multiplicity;
        out.push(MainEigenvalue {
            value: e.value,
            multiplicity: e.multiplicity,
            is_main: proj_sq.sqrt() > threshold,
        });
    }
    out
}

/// Number of main eigenvalues as the exact integer rank of the Krylov walk
/// matrix `[j, Mj, …, M^{n-1}j]`. No tolerance: the count is an integer.
pub fn main_count_via_rank(m: &IntSymMatrix) -> usize {
    exact_rank(&krylov_walk_matrix(m))
}

/// Cauchy interlacing test: with both lists sorted descending and
/// `m = child.len() <= n = parent.len()`, checks
/// `parent[i] ≥ child[i] ≥ parent[n-m+i]` with `1e-9` slack for round-off.
pub fn check_interlacing(parent: &[f64], child: &[f64]) -> Result<bool> {
    let n = parent.len();
    let m = child.len();
    if m > n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: m,
        });
    }
    const SLACK: f64 = 1e-9;
    for i in 0..m {
        if !(parent[i] + SLACK >= child[i] && child[i] + SLACK >= parent[n - m + i]) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Walk generating function reconstructed from an adjacency eigendecomposition:
/// coefficients `C_j = (Σ_i x_ij)²` so that `H(t) = Σ_j C_j / (1 − tλ_j)` and
/// `N_l = Σ_j C_j λ_j^l`.
#[derive(Debug, Clone)]
pub struct WalkGenEval {
    /// `(λ_j, C_j)` pairs, one per eigenvector.
    pub terms: Vec<(f64, f64)>,
}

pub fn walk_gen_from_spectrum(decomp: &EigenDecomposition) -> WalkGenEval {
    let terms = decomp
        .values
        .iter()
        .zip(&decomp.vectors)
        .map(|(&lam, x)| {
            let dot: f64 = x.iter().sum();
            (lam, dot * dot)
        })
        .collect();
    WalkGenEval { terms }
}

impl WalkGenEval {
    /// Evaluates `H(t)`, refusing points within `1e-12` of a pole `1/λ_j`.
    pub fn eval(&self, t: f64) -> Result<f64> {
        const RADIUS: f64 = 1e-12;
        let mut acc = 0.0;
        for &(lam, c) in &self.terms {
            let denom = 1.0 - t * lam;
            if denom.abs() < RADIUS {
                return Err(Error::PoleProximity {
                    point: t,
                    radius: RADIUS,
                });
            }
            acc += c / denom;
        }
        Ok(acc)
    }

    /// Reconstructed walk count `Σ_j C_j λ_j^l` (floating point).
    pub fn walk_count(&self, l: u32) -> f64 {
        self.terms
            .iter()
            .map(|&(lam, c)| c * lam.powi(l as i32))
            .sum()
    }

    /// `Σ_j C_j`, which must equal the order `n`.
    pub fn coefficient_sum(&self) -> f64 {
        self.terms.iter().map(|&(_, c)| c).sum()
    }
}
