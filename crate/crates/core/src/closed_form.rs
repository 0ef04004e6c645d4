//! Closed-form spectra, energies, and characteristic polynomials for the
//! generator families, kept symbolic (rationals, quadratic surds, integer
//! polynomial roots) so algebraic identities can be asserted exactly, and
//! evaluable to floats for comparison against the numeric engine.

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::matrix::seidel_matrix;
use crate::poly::{char_poly_exact, real_roots_descending, IntPoly};
use crate::structure::{canonical_partition, quotient_matrix};

/// Choice of branch in a quadratic surd.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SurdSign {
    Plus,
    Minus,
}

/// Symbolic description of one eigenvalue.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum EigKind {
    /// `num / den`.
    Rational { num: i64, den: i64 },
    /// `(a ± √d) / c` with integers `a, d ≥ 0, c`.
    Surd {
        a: i64,
        d: i64,
        c: i64,
        sign: SurdSign,
    },
    /// A root of a monic integer polynomial, indexed in descending real order
    /// (multiple roots occupy consecutive indices).
    PolyRoot { poly: IntPoly, index: usize },
}

/// One eigenvalue descriptor with its multiplicity.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EigDescriptor {
    pub kind: EigKind,
    pub multiplicity: usize,
}

impl EigDescriptor {
    pub fn rational(value: i64, multiplicity: usize) -> Self {
        EigDescriptor {
            kind: EigKind::Rational { num: value, den: 1 },
            multiplicity,
        }
    }

    pub fn surd(a: i64, d: i64, c: i64, sign: SurdSign, multiplicity: usize) -> Self {
        debug_assert!(d >= 0);
        EigDescriptor {
            kind: EigKind::Surd { a, d, c, sign },
            multiplicity,
        }
    }

    /// Numeric value of the described eigenvalue.
    pub fn value(&self) -> f64 {
        match &self.kind {
            EigKind::Rational { num, den } => *num as f64 / *den as f64,
            EigKind::Surd { a, d, c, sign } => {
                let root = (*d as f64).sqrt();
                let signed = match sign {
                    SurdSign::Plus => *a as f64 + root,
                    SurdSign::Minus => *a as f64 - root,
                };
                signed / *c as f64
            }
            EigKind::PolyRoot { poly, index } => real_roots_descending(poly)[*index],
        }
    }
}

/// A full closed-form spectrum: descriptors whose multiplicities sum to the
/// order of the underlying matrix.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClosedFormSpectrum {
    pub descriptors: Vec<EigDescriptor>,
    pub order: usize,
}

impl ClosedFormSpectrum {
    /// Builds after checking the multiplicity bookkeeping. Descriptors with
    /// multiplicity zero are dropped.
    pub fn new(order: usize, descriptors: Vec<EigDescriptor>) -> Result<Self> {
        let descriptors: Vec<EigDescriptor> = descriptors
            .into_iter()
            .filter(|d| d.multiplicity > 0)
            .collect();
        let total: usize = descriptors.iter().map(|d| d.multiplicity).sum();
        if total != order {
            return Err(Error::InvalidParameter(format!(
                "descriptor multiplicities sum to {total}, expected order {order}"
            )));
        }
        Ok(ClosedFormSpectrum { descriptors, order })
    }

    /// The evaluated multiset as a descending list of length `order`.
    pub fn values_descending(&self) -> Vec<f64> {
        let mut out = Vec::with_capacity(self.order);
        // poly-root descriptors sharing one polynomial are solved once
        let mut cache: Vec<(&IntPoly, Vec<f64>)> = Vec::new();
        for d in &self.descriptors {
            let v = match &d.kind {
                EigKind::PolyRoot { poly, index } => {
                    let roots = match cache.iter().find(|(p, _)| *p == poly) {
                        Some((_, r)) => r.clone(),
                        None => {
                            let r = real_roots_descending(poly);
                            cache.push((poly, r.clone()));
                            r
                        }
                    };
                    roots[*index]
                }
                _ => d.value(),
            };
            out.extend(std::iter::repeat_n(v, d.multiplicity));
        }
        out.sort_by(|a, b| b.partial_cmp(a).unwrap());
        out
    }

    /// `Σ |value| · multiplicity` — the energy of the described matrix.
    pub fn energy(&self) -> f64 {
        self.values_descending().iter().map(|v| v.abs()).sum()
    }

    /// `Σ value · multiplicity` — the trace of the described matrix.
    pub fn trace(&self) -> f64 {
        self.values_descending().iter().sum()
    }
}

fn check_bounds(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParameter(msg.to_string()))
    }
}

// ---------------------------------------------------------------------------
// hyperstar
// ---------------------------------------------------------------------------

/// Adjacency spectrum of the hyperstar:
/// `{−1: (n−1)(k−2), k−2: n−2}` plus the two roots of
/// `λ² − (k−2)λ − (n−1)(k−1)`.
pub fn hyperstar_adjacency(n: usize, k: usize) -> Result<ClosedFormSpectrum> {
    check_bounds(
        n >= 3 && k >= 2,
        "hyperstar closed form needs n >= 3, k >= 2",
    )?;
    let (ni, ki) = (n as i64, k as i64);
    let order = (n - 1) * (k - 1) + 1;
    let disc = (ki - 2) * (ki - 2) + 4 * (ni - 1) * (ki - 1);
    ClosedFormSpectrum::new(
        order,
        vec![
            EigDescriptor::surd(ki - 2, disc, 2, SurdSign::Plus, 1),
            EigDescriptor::rational(ki - 2, n - 2),
            EigDescriptor::rational(-1, (n - 1) * (k - 2)),
            EigDescriptor::surd(ki - 2, disc, 2, SurdSign::Minus, 1),
        ],
    )
}

/// Seidel spectrum of the hyperstar:
/// `{1: (n−1)(k−2), 3−2k: n−2}` plus the two roots of
/// `λ² − ((k−1)(n−3)+1)λ − (n−1)(k−1)`.
pub fn hyperstar_seidel(n: usize, k: usize) -> Result<ClosedFormSpectrum> {
    check_bounds(
        n >= 3 && k >= 2,
        "hyperstar closed form needs n >= 3, k >= 2",
    )?;
    let (ni, ki) = (n as i64, k as i64);
    let order = (n - 1) * (k - 1) + 1;
    let b = (ki - 1) * (ni - 3) + 1;
    let disc = b * b + 4 * (ni - 1) * (ki - 1);
    ClosedFormSpectrum::new(
        order,
        vec![
            EigDescriptor::surd(b, disc, 2, SurdSign::Plus, 1),
            EigDescriptor::rational(1, (n - 1) * (k - 2)),
            EigDescriptor::rational(3 - 2 * ki, n - 2),
            EigDescriptor::surd(b, disc, 2, SurdSign::Minus, 1),
        ],
    )
}

/// Seidel energy of the hyperstar:
/// `(n−1)(3k−5) − (2k−3) + √((k−1)²(n−3)² + 2(k−1)(3n−5) + 1)`.
pub fn hyperstar_seidel_energy(n: usize, k: usize) -> Result<f64> {
    check_bounds(
        n >= 3 && k >= 2,
        "hyperstar closed form needs n >= 3, k >= 2",
    )?;
    let (nf, kf) = (n as f64, k as f64);
    let radicand =
        (kf - 1.0).powi(2) * (nf - 3.0).powi(2) + 2.0 * (kf - 1.0) * (3.0 * nf - 5.0) + 1.0;
    Ok((nf - 1.0) * (3.0 * kf - 5.0) - (2.0 * kf - 3.0) + radicand.sqrt())
}

/// The two main Seidel eigenvalues of the hyperstar, `r1 ≥ r2`.
pub fn hyperstar_main_seidel(n: usize, k: usize) -> Result<(EigDescriptor, EigDescriptor)> {
    check_bounds(
        n >= 3 && k >= 2,
        "hyperstar closed form needs n >= 3, k >= 2",
    )?;
    let (ni, ki) = (n as i64, k as i64);
    let b = (ki - 1) * (ni - 3) + 1;
    let disc = b * b + 4 * (ni - 1) * (ki - 1);
    Ok((
        EigDescriptor::surd(b, disc, 2, SurdSign::Plus, 1),
        EigDescriptor::surd(b, disc, 2, SurdSign::Minus, 1),
    ))
}

// ---------------------------------------------------------------------------
// complete r-uniform and (k,r)-regular results
// ---------------------------------------------------------------------------

fn binomial(n: usize, k: usize) -> i64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as i128 / (i + 1) as i128;
    }
    i64::try_from(acc).expect("binomial fits i64 at desk scale")
}

/// Adjacency spectrum of the complete r-uniform hypergraph:
/// `{(n−1)·C(n−2,r−2): 1, −C(n−2,r−2): n−1}`.
pub fn complete_uniform_adjacency(n: usize, r: usize) -> Result<ClosedFormSpectrum> {
    check_bounds(r >= 2 && r <= n, "complete uniform needs 2 <= r <= n")?;
    let c = binomial(n - 2, r - 2);
    ClosedFormSpectrum::new(
        n,
        vec![
            EigDescriptor::rational((n as i64 - 1) * c, 1),
            EigDescriptor::rational(-c, n - 1),
        ],
    )
}

/// Seidel spectrum of the complete r-uniform hypergraph:
/// `{(n−1)(1−2C(n−2,r−2)): 1, 2C(n−2,r−2)−1: n−1}`.
pub fn complete_uniform_seidel(n: usize, r: usize) -> Result<ClosedFormSpectrum> {
    check_bounds(r >= 2 && r <= n, "complete uniform needs 2 <= r <= n")?;
    let c = binomial(n - 2, r - 2);
    ClosedFormSpectrum::new(
        n,
        vec![
            EigDescriptor::rational((n as i64 - 1) * (1 - 2 * c), 1),
            EigDescriptor::rational(2 * c - 1, n - 1),
        ],
    )
}

/// Maps a (k,r)-regular adjacency spectrum to the Seidel spectrum:
/// `λ1 ↦ n−1−2λ1` (Perron) and `λ_i ↦ −1−2λ_i` otherwise, preserving the
/// input order. Rejects input whose top value is not `r(k−1)`.
pub fn regular_seidel_from_adjacency(
    adj_values: &[f64],
    n: usize,
    k: usize,
    r: usize,
) -> Result<Vec<f64>> {
    let perron = (r * (k - 1)) as f64;
    match adj_values.first() {
        Some(&top) if (top - perron).abs() <= 1e-8 => Ok(adj_values
            .iter()
            .enumerate()
            .map(|(i, &l)| {
                if i == 0 {
                    n as f64 - 1.0 - 2.0 * l
                } else {
                    -1.0 - 2.0 * l
                }
            })
            .collect()),
        Some(&top) => Err(Error::NotRegular(format!(
            "leading adjacency eigenvalue {top} differs from r(k-1) = {perron}"
        ))),
        None => Ok(vec![]),
    }
}

/// Exact walk count of a (k,r)-regular hypergraph: `N_l = n·(r(k−1))^l`.
pub fn regular_walk_count(n: usize, k: usize, r: usize, l: usize) -> BigInt {
    let base = BigInt::from((r * (k - 1)) as u64);
    let mut acc = BigInt::from(n as u64);
    for _ in 0..l {
        acc *= &base;
    }
    acc
}

// ---------------------------------------------------------------------------
// uniform double hyperstar
// ---------------------------------------------------------------------------

/// The monic quintic whose roots complete the double-hyperstar adjacency
/// spectrum, transcribed coefficient by coefficient.
pub fn double_hyperstar_quintic(n1: usize, n2: usize, k: usize) -> IntPoly {
    let (n1, n2, k) = (n1 as i128, n2 as i128, k as i128);
    let c4 = -(-7 + 3 * k);
    let c3 = 17 + 3 * k * k + n2 + n1 - k * (14 + n2 + n1);
    let c2 = -(-5 * (3 + n2 + n1) + k * (17 + 7 * n2 + 7 * n1) - k * k * (7 + 2 * n2 + 2 * n1)
        + k * k * k);
    let c1 = -(-1
        + (-7 + 12 * k - 6 * k * k + k * k * k) * n1
        + (7 - 5 * k + k * k + (1 - k) * n1) * (-1 + k) * n2);
    let c0 = -(-1 + k) * (-1 + n2 + n1 + (3 - 4 * k + k * k) * n2 * n1);
    IntPoly::from_descending(vec![1, c4, c3, c2, c1, c0])
}

/// The same quintic derived independently from the block-determinant
/// structure: `[(q1·s − u)(q2·s − u) − (1+λ)²(k−2−λ)²] / s`, normalized
/// monic, with `s = k−3−λ`, `u = (k−2)(k−2−λ)` and
/// `q_i = λ²−(k−2)λ−(n_i−1)(k−1)`.
pub fn double_hyperstar_quintic_derived(n1: usize, n2: usize, k: usize) -> Result<IntPoly> {
    let (n1, n2, k) = (n1 as i128, n2 as i128, k as i128);
    let q1 = IntPoly::new(vec![-(n1 - 1) * (k - 1), -(k - 2), 1]);
    let q2 = IntPoly::new(vec![-(n2 - 1) * (k - 1), -(k - 2), 1]);
    let s = IntPoly::new(vec![k - 3, -1]);
    let u = IntPoly::new(vec![(k - 2) * (k - 2), -(k - 2)]);
    let cross = IntPoly::new(vec![1, 1]).mul(&IntPoly::new(vec![k - 2, -1]));
    let term = |q: &IntPoly| {
        let mut t = q.mul(&s);
        t = IntPoly::new(
            t.coeffs()
                .iter()
                .zip(u.coeffs().iter().chain(std::iter::repeat(&0)))
                .map(|(a, b)| a - b)
                .collect(),
        );
        t
    };
    let numer_lhs = term(&q1).mul(&term(&q2));
    let cross_sq = cross.mul(&cross);
    let numer = IntPoly::new(
        numer_lhs
            .coeffs()
            .iter()
            .zip(cross_sq.coeffs().iter().chain(std::iter::repeat(&0)))
            .map(|(a, b)| a - b)
            .collect(),
    );
    let quintic = numer.div_exact(&s)?;
    Ok(if quintic.leading() < 0 {
        quintic.neg()
    } else {
        quintic
    })
}

/// Adjacency spectrum of the uniform double hyperstar:
/// `{−1: (k−2)(n1+n2−1)−1, k−2: n1+n2−4}` plus the five quintic roots.
pub fn double_hyperstar_adjacency(n1: usize, n2: usize, k: usize) -> Result<ClosedFormSpectrum> {
    check_bounds(
        n1 >= 2 && n2 >= 2 && k >= 3,
        "double hyperstar closed form needs n1,n2 >= 2 and k >= 3",
    )?;
    let order = n1 + n2 + (n1 + n2 - 1) * (k - 2);
    let quintic = double_hyperstar_quintic(n1, n2, k);
    let mut descriptors = vec![
        EigDescriptor::rational(-1, (k - 2) * (n1 + n2 - 1) - 1),
        EigDescriptor::rational(k as i64 - 2, n1 + n2 - 4),
    ];
    for index in 0..5 {
        descriptors.push(EigDescriptor {
            kind: EigKind::PolyRoot {
                poly: quintic.clone(),
                index,
            },
            multiplicity: 1,
        });
    }
    ClosedFormSpectrum::new(order, descriptors)
}

/// Recomputed 5×5 Seidel quotient of the double hyperstar over the canonical
/// partition `{c1 | star-1 block | c2 | star-2 block | bridge fill}`.
/// Errors if the partition fails to be equitable (a construction bug).
pub fn double_hyperstar_seidel_quotient(n1: usize, n2: usize, k: usize) -> Result<Vec<Vec<i64>>> {
    let h = Hypergraph::double_hyperstar(n1, n2, k)?;
    let family = h.family().expect("generator sets family");
    let p = canonical_partition(&family)?;
    let q = quotient_matrix(&seidel_matrix(&h), &p)?;
    match (q.q_int, q.witness) {
        (Some(qi), _) => Ok(qi),
        (None, Some(w)) => Err(Error::NotEquitable {
            block_row: w.block_row,
            block_col: w.block_col,
            row_a: w.row_a,
            row_b: w.row_b,
            sum_a: w.sum_a,
            sum_b: w.sum_b,
        }),
        (None, None) => unreachable!("inequitable quotient always has a witness"),
    }
}

/// Seidel spectrum of the uniform double hyperstar:
/// `{1: (k−2)(n1+n2−1)−1, 3−2k: n1+n2−4}` plus the five eigenvalues of the
/// recomputed 5×5 quotient (as roots of its exact characteristic polynomial).
pub fn double_hyperstar_seidel(n1: usize, n2: usize, k: usize) -> Result<ClosedFormSpectrum> {
    check_bounds(
        n1 >= 2 && n2 >= 2 && k >= 3,
        "double hyperstar closed form needs n1,n2 >= 2 and k >= 3",
    )?;
    let order = n1 + n2 + (n1 + n2 - 1) * (k - 2);
    let q = double_hyperstar_seidel_quotient(n1, n2, k)?;
    let flat: Vec<i128> = q.iter().flatten().map(|&e| e as i128).collect();
    let quintic = char_poly_exact(5, &flat);
    let mut descriptors = vec![
        EigDescriptor::rational(1, (k - 2) * (n1 + n2 - 1) - 1),
        EigDescriptor::rational(3 - 2 * k as i64, n1 + n2 - 4),
    ];
    for index in 0..5 {
        descriptors.push(EigDescriptor {
            kind: EigKind::PolyRoot {
                poly: quintic.clone(),
                index,
            },
            multiplicity: 1,
        });
    }
    ClosedFormSpectrum::new(order, descriptors)
}

// ---------------------------------------------------------------------------
// sunflower
// ---------------------------------------------------------------------------

/// Factored characteristic polynomial of the sunflower adjacency matrix,
/// normalized so the product is monic (equal to `det(λI − A)`):
/// `(1+λ)^{(k−1)(k−2)} · (λ³+(4−2k)λ²+(6−6k+k²)λ+(2−3k+k²)) ·
///  (λ²−(k−3)λ−(2k−3))^{k−2}`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SunflowerCharPoly {
    pub linear: IntPoly,
    pub linear_exponent: usize,
    pub cubic: IntPoly,
    pub quadratic: IntPoly,
    pub quadratic_exponent: usize,
}

impl SunflowerCharPoly {
    /// Evaluates the factored form (numerically preferable to expansion).
    pub fn eval(&self, lambda: f64) -> f64 {
        self.linear.eval(lambda).powi(self.linear_exponent as i32)
            * self.cubic.eval(lambda)
            * self
                .quadratic
                .eval(lambda)
                .powi(self.quadratic_exponent as i32)
    }

    /// Expands to a single monic integer polynomial.
    pub fn expand(&self) -> IntPoly {
        self.linear
            .pow(self.linear_exponent)
            .mul(&self.cubic)
            .mul(&self.quadratic.pow(self.quadratic_exponent))
    }
}

/// The factored sunflower characteristic polynomial.
pub fn sunflower_char_poly(k: usize) -> Result<SunflowerCharPoly> {
    check_bounds(k >= 2, "sunflower closed form needs k >= 2")?;
    let ki = k as i128;
    Ok(SunflowerCharPoly {
        linear: IntPoly::new(vec![1, 1]),
        linear_exponent: (k - 1) * (k - 2),
        cubic: IntPoly::new(vec![
            2 - 3 * ki + ki * ki,
            6 - 6 * ki + ki * ki,
            4 - 2 * ki,
            1,
        ]),
        quadratic: IntPoly::new(vec![-(2 * ki - 3), -(ki - 3), 1]),
        quadratic_exponent: k - 2,
    })
}

/// Adjacency spectrum of the sunflower:
/// `{−1: (k−1)(k−2), (k−3±√((k+3)(k−1)))/2: k−2 each}` plus the three
/// cubic roots.
pub fn sunflower_adjacency(k: usize) -> Result<ClosedFormSpectrum> {
    check_bounds(k >= 2, "sunflower closed form needs k >= 2")?;
    let ki = k as i64;
    let order = k * (k - 1) + 1;
    let cubic = sunflower_char_poly(k)?.cubic;
    let d = (ki + 3) * (ki - 1);
    let mut descriptors = vec![
        EigDescriptor::rational(-1, (k - 1) * (k - 2)),
        EigDescriptor::surd(ki - 3, d, 2, SurdSign::Plus, k - 2),
        EigDescriptor::surd(ki - 3, d, 2, SurdSign::Minus, k - 2),
    ];
    for index in 0..3 {
        descriptors.push(EigDescriptor {
            kind: EigKind::PolyRoot {
                poly: cubic.clone(),
                index,
            },
            multiplicity: 1,
        });
    }
    ClosedFormSpectrum::new(order, descriptors)
}

/// The three cubic roots of the sunflower adjacency spectrum in trigonometric
/// form: `r_i = (2/3)((k−2) + √(k²+2k−2)·cos((θ+2(i−1)π)/3))` with
/// `θ = arccos((34−51k+21k²−2k³)/(2√((k²+2k−2)³)))`.
pub fn sunflower_trig_roots(k: usize) -> Result<[f64; 3]> {
    check_bounds(k >= 2, "sunflower closed form needs k >= 2")?;
    let kf = k as f64;
    let d = kf * kf + 2.0 * kf - 2.0;
    let arg = (34.0 - 51.0 * kf + 21.0 * kf * kf - 2.0 * kf * kf * kf) / (2.0 * d.powi(3).sqrt());
    if arg.abs() > 1.0 + 1e-12 {
        return Err(Error::InvalidParameter(format!(
            "arccos argument {arg} escapes [-1, 1]"
        )));
    }
    let theta = arg.clamp(-1.0, 1.0).acos();
    let amp = d.sqrt();
    let mut roots = [0.0f64; 3];
    for (i, r) in roots.iter_mut().enumerate() {
        let angle = (theta + 2.0 * i as f64 * std::f64::consts::PI) / 3.0;
        *r = (2.0 / 3.0) * ((kf - 2.0) + amp * angle.cos());
    }
    Ok(roots)
}

/// The monic cubic carrying the three non-structural Seidel eigenvalues of
/// the sunflower.
pub fn sunflower_seidel_cubic(k: usize) -> IntPoly {
    let ki = k as i128;
    IntPoly::new(vec![
        2 * ki * ki * ki - 11 * ki * ki + 17 * ki - 8,
        -(2 * ki * ki * ki - 12 * ki * ki + 26 * ki - 17),
        -(ki * ki - 5 * ki + 6),
        1,
    ])
}

/// The 3×3 Seidel quotient of the sunflower over the canonical partition
/// `{core | anchors | outer}`.
pub fn sunflower_seidel_quotient(k: usize) -> [[i64; 3]; 3] {
    let ki = k as i64;
    [
        [0, 1 - ki, (ki - 1) * (ki - 1)],
        [-1, 2 - ki, (ki - 1) * (ki - 3)],
        [1, ki - 3, (ki - 2) * (ki - 2)],
    ]
}

/// Seidel spectrum of the sunflower:
/// `{1: (k−1)(k−2), 2−k±√((k+3)(k−1)): k−2 each}` plus the three roots of
/// [`sunflower_seidel_cubic`] (equivalently, the eigenvalues of the 3×3
/// quotient).
pub fn sunflower_seidel(k: usize) -> Result<ClosedFormSpectrum> {
    check_bounds(k >= 2, "sunflower closed form needs k >= 2")?;
    let ki = k as i64;
    let order = k * (k - 1) + 1;
    let cubic = sunflower_seidel_cubic(k);
    let d = (ki + 3) * (ki - 1);
    let mut descriptors = vec![
        EigDescriptor::rational(1, (k - 1) * (k - 2)),
        EigDescriptor::surd(2 - ki, d, 1, SurdSign::Plus, k - 2),
        EigDescriptor::surd(2 - ki, d, 1, SurdSign::Minus, k - 2),
    ];
    for index in 0..3 {
        descriptors.push(EigDescriptor {
            kind: EigKind::PolyRoot {
                poly: cubic.clone(),
                index,
            },
            multiplicity: 1,
        });
    }
    ClosedFormSpectrum::new(order, descriptors)
}
