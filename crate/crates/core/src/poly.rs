//! Integer polynomials with exact arithmetic and a real-root finder for
//! polynomials known to have only real roots (characteristic polynomials of
//! symmetric matrices).
//!
//! Roots are isolated by recursing on the derivative — a polynomial is
//! strictly monotone between consecutive critical points, so each bracketing
//! interval holds exactly one simple root, and a critical point where the
//! polynomial vanishes is a multiple root whose multiplicity is one more than
//! its multiplicity in the derivative. Bracketed roots are bisected and then
//! polished with safeguarded Newton steps on the exact coefficients.

use serde::Serialize;

use crate::error::{Error, Result};

/// Dense integer polynomial, ascending coefficients (`coeffs[i]·x^i`),
/// no trailing zeros. The zero polynomial has an empty coefficient list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntPoly {
    coeffs: Vec<i128>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<i128>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    /// Builds from descending coefficients (leading term first).
    pub fn from_descending(mut coeffs: Vec<i128>) -> Self {
        coeffs.reverse();
        IntPoly::new(coeffs)
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        IntPoly { coeffs: vec![1] }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[i128] {
        &self.coeffs
    }

    pub fn leading(&self) -> i128 {
        *self.coeffs.last().unwrap_or(&0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    /// Horner evaluation in f64.
    pub fn eval(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for &c in self.coeffs.iter().rev() {
            acc = acc * x + c as f64;
        }
        acc
    }

    /// `Σ |c_i|·|x|^i`, the natural magnitude scale at `x` for round-off tests.
    pub fn eval_scale(&self, x: f64) -> f64 {
        let ax = x.abs();
        let mut acc = 0.0;
        for &c in self.coeffs.iter().rev() {
            acc = acc * ax + (c as f64).abs();
        }
        acc
    }

    pub fn derivative(&self) -> IntPoly {
        if self.coeffs.len() <= 1 {
            return IntPoly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| c * i as i128)
            .collect();
        IntPoly::new(coeffs)
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![0i128; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    pub fn pow(&self, e: usize) -> IntPoly {
        let mut acc = IntPoly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|&c| -c).collect())
    }

    /// Exact long division by a divisor with leading coefficient ±1.
    /// Errors if the remainder is nonzero.
    pub fn div_exact(&self, divisor: &IntPoly) -> Result<IntPoly> {
        if divisor.is_zero() || divisor.leading().abs() != 1 {
            return Err(Error::InvalidParameter(
                "divisor must have leading coefficient ±1".into(),
            ));
        }
        if self.is_zero() {
            return Ok(IntPoly::zero());
        }
        if self.degree() < divisor.degree() {
            return Err(Error::InvalidParameter(
                "division is not exact (degree too small)".into(),
            ));
        }
        let lead = divisor.leading();
        let mut rem = self.coeffs.clone();
        let qlen = self.degree() - divisor.degree() + 1;
        let mut quot = vec![0i128; qlen];
        for qi in (0..qlen).rev() {
            let top = rem[qi + divisor.degree()];
            let q = top / lead; // lead is ±1, so this is exact
            quot[qi] = q;
            if q != 0 {
                for (di, &dc) in divisor.coeffs.iter().enumerate() {
                    rem[qi + di] -= q * dc;
                }
            }
        }
        if rem.iter().any(|&c| c != 0) {
            return Err(Error::InvalidParameter("division is not exact".into()));
        }
        Ok(IntPoly::new(quot))
    }
}

/// A real root and its multiplicity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RealRoot {
    pub value: f64,
    pub multiplicity: usize,
}

/// All real roots (with multiplicity) of a polynomial whose roots are all
/// real, sorted ascending. Total multiplicity equals the degree.
pub fn real_roots(p: &IntPoly) -> Vec<RealRoot> {
    match p.degree() {
        0 => vec![],
        1 => {
            let value = -(p.coeffs()[0] as f64) / (p.coeffs()[1] as f64);
            vec![RealRoot {
                value,
                multiplicity: 1,
            }]
        }
        2 => quadratic_roots(p),
        _ => {
            let crit = real_roots(&p.derivative());
            let bound = cauchy_bound(p);
            let mut endpoints = vec![-bound];
            for r in &crit {
                if (r.value - endpoints.last().unwrap()).abs() > 1e-12 * bound.max(1.0) {
                    endpoints.push(r.value);
                }
            }
            endpoints.push(bound);

            let near_zero = |x: f64, fx: f64| fx.abs() <= 1e-9 * p.eval_scale(x).max(1.0);
            let mut roots: Vec<RealRoot> = Vec::new();
            for w in endpoints.windows(2) {
                let (a, b) = (w[0], w[1]);
                let (fa, fb) = (p.eval(a), p.eval(b));
                // an endpoint that is itself a root is a multiple root of p
                // and is accounted for via the critical points; p is strictly
                // monotone inside the interval, so no further root hides there
                if near_zero(a, fa) || near_zero(b, fb) {
                    continue;
                }
                if fa.signum() * fb.signum() < 0.0 {
                    roots.push(RealRoot {
                        value: refine_root(p, a, b),
                        multiplicity: 1,
                    });
                }
            }
            for r in &crit {
                let scale = p.eval_scale(r.value).max(1.0);
                if p.eval(r.value).abs() <= 1e-9 * scale {
                    roots.push(RealRoot {
                        value: r.value,
                        multiplicity: r.multiplicity + 1,
                    });
                }
            }
            roots.sort_by(|x, y| x.value.partial_cmp(&y.value).unwrap());
            debug_assert_eq!(
                roots.iter().map(|r| r.multiplicity).sum::<usize>(),
                p.degree(),
                "a polynomial with all-real roots must yield degree-many roots"
            );
            roots
        }
    }
}

/// Roots expanded by multiplicity and sorted descending.
pub fn real_roots_descending(p: &IntPoly) -> Vec<f64> {
    let mut out = Vec::with_capacity(p.degree());
    for r in real_roots(p) {
        out.extend(std::iter::repeat_n(r.value, r.multiplicity));
    }
    out.reverse();
    out
}

fn quadratic_roots(p: &IntPoly) -> Vec<RealRoot> {
    let (c, b, a) = (
        p.coeffs()[0] as f64,
        p.coeffs()[1] as f64,
        p.coeffs()[2] as f64,
    );
    let disc = b * b - 4.0 * a * c;
    if disc < 0.0 {
        // all-real-rooted by contract; tiny negative discriminants are round-off
        debug_assert!(disc > -1e-9 * (b * b + 4.0 * (a * c).abs()).max(1.0));
        return vec![RealRoot {
            value: -b / (2.0 * a),
            multiplicity: 2,
        }];
    }
    if disc == 0.0 {
        return vec![RealRoot {
            value: -b / (2.0 * a),
            multiplicity: 2,
        }];
    }
    let sq = disc.sqrt();
    // avoid cancellation: compute the larger-magnitude root first
    let q = -0.5 * (b + b.signum() * sq);
    let (r1, r2) = if b == 0.0 {
        (sq / (2.0 * a), -sq / (2.0 * a))
    } else {
        (q / a, c / q)
    };
    let (lo, hi) = if r1 <= r2 { (r1, r2) } else { (r2, r1) };
    vec![
        RealRoot {
            value: lo,
            multiplicity: 1,
        },
        RealRoot {
            value: hi,
            multiplicity: 1,
        },
    ]
}

fn cauchy_bound(p: &IntPoly) -> f64 {
    let lead = (p.leading() as f64).abs();
    let max = p
        .coeffs()
        .iter()
        .take(p.degree())
        .fold(0.0f64, |m, &c| m.max((c as f64).abs()));
    1.0 + max / lead
}

/// Bisection to near machine precision followed by safeguarded Newton steps
/// on the exact integer coefficients. Requires a sign change on `[a, b]`.
fn refine_root(p: &IntPoly, mut a: f64, mut b: f64) -> f64 {
    let mut fa = p.eval(a);
    for _ in 0..200 {
        let mid = 0.5 * (a + b);
        if mid <= a || mid >= b {
            break; // interval no longer representable
        }
        let fm = p.eval(mid);
        if fm == 0.0 {
            return mid;
        }
        if fa.signum() * fm.signum() < 0.0 {
            b = mid;
        } else {
            a = mid;
            fa = fm;
        }
    }
    let mut x = 0.5 * (a + b);
    let d = p.derivative();
    for _ in 0..3 {
        let fx = p.eval(x);
        let dx = d.eval(x);
        if dx.abs() < 1e-300 {
            break;
        }
        let step = fx / dx;
        let next = x - step;
        if next.is_finite() && next >= a && next <= b {
            x = next;
        } else {
            break;
        }
    }
    x
}

/// Exact characteristic polynomial `det(λI − M)` of a small integer matrix
/// via the Faddeev–LeVerrier recurrence (monic, integer coefficients).
pub fn char_poly_exact(n: usize, entries: &[i128]) -> IntPoly {
    assert_eq!(entries.len(), n * n);
    // c[n] = 1; M_1 = A; c_{n-k} = -tr(A·M_k)/k; M_{k+1} = A·M_k + c_{n-k}·I
    let mut coeffs = vec![0i128; n + 1];
    coeffs[n] = 1;
    let mut m: Vec<i128> = entries.to_vec();
    for k in 1..=n {
        let trace: i128 = (0..n).map(|i| m[i * n + i]).sum();
        debug_assert_eq!(trace % k as i128, 0, "Faddeev-LeVerrier trace divisibility");
        let c = -trace / k as i128;
        coeffs[n - k] = c;
        if k == n {
            break;
        }
        for i in 0..n {
            m[i * n + i] += c;
        }
        let mut next = vec![0i128; n * n];
        for i in 0..n {
            for l in 0..n {
                let a = entries[i * n + l];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    next[i * n + j] += a * m[l * n + j];
                }
            }
        }
        m = next;
    }
    IntPoly::new(coeffs)
}
