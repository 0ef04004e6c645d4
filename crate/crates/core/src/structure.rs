//! Twin-vertex classes, equitable partitions with quotient matrices, and the
//! global verifiers: the Seidel–adjacency characteristic-polynomial identity,
//! its regular-hypergraph specialization, and multiplicity transfer from the
//! adjacency spectrum into the Seidel spectrum.

use serde::Serialize;

use crate::eigen::{
    char_poly_eval, eigen_symmetric, group_spectrum, walk_gen_from_spectrum, Spectrum,
};
use crate::error::{Error, Result};
use crate::hypergraph::{Family, Hypergraph};
use crate::matrix::{adjacency_matrix, seidel_matrix, IntSymMatrix};

/// A partition of `0..n` into nonempty disjoint blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    blocks: Vec<Vec<usize>>,
    block_of: Vec<usize>,
}

impl Partition {
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut block_of = vec![usize::MAX; n];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::InvalidPartition(format!("block {b} is empty")));
            }
            for &v in block {
                if v >= n {
                    return Err(Error::InvalidPartition(format!(
                        "block {b} contains {v}, but the index set is 0..{n}"
                    )));
                }
                if block_of[v] != usize::MAX {
                    return Err(Error::InvalidPartition(format!(
                        "vertex {v} appears in blocks {} and {b}",
                        block_of[v]
                    )));
                }
                block_of[v] = b;
            }
        }
        if let Some(v) = block_of.iter().position(|&b| b == usize::MAX) {
            return Err(Error::InvalidPartition(format!("vertex {v} is uncovered")));
        }
        Ok(Partition { blocks, block_of })
    }

    pub fn singletons(n: usize) -> Self {
        Partition {
            blocks: (0..n).map(|v| vec![v]).collect(),
            block_of: (0..n).collect(),
        }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_of(&self, v: usize) -> usize {
        self.block_of[v]
    }

    pub fn n(&self) -> usize {
        self.block_of.len()
    }

    /// True when every block of `self` lies inside a single block of `other`.
    pub fn refines(&self, other: &Partition) -> bool {
        self.blocks
            .iter()
            .all(|b| b.iter().all(|&v| other.block_of(v) == other.block_of(b[0])))
    }
}

/// Groups vertices by the exact set of hyperedges containing them.
/// Blocks are ordered by their smallest vertex.
pub fn twin_classes(h: &Hypergraph) -> Partition {
    let n = h.order();
    let mut memberships: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (ei, e) in h.edges().iter().enumerate() {
        for &v in e {
            memberships[v].push(ei);
        }
    }
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut keys: Vec<&Vec<usize>> = Vec::new();
    let mut block_of = vec![usize::MAX; n];
    for v in 0..n {
        match keys.iter().position(|k| **k == memberships[v]) {
            Some(b) => {
                blocks[b].push(v);
                block_of[v] = b;
            }
            None => {
                keys.push(&memberships[v]);
                block_of[v] = blocks.len();
                blocks.push(vec![v]);
            }
        }
    }
    Partition { blocks, block_of }
}

/// Witness that a partition fails to be equitable: two rows of one block pair
/// with different sums.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EquitabilityWitness {
    pub block_row: usize,
    pub block_col: usize,
    pub row_a: usize,
    pub row_b: usize,
    pub sum_a: i64,
    pub sum_b: i64,
}

/// Quotient of an integer symmetric matrix under a partition.
#[derive(Debug, Clone)]
pub struct QuotientResult {
    /// Average block row sums (exact integers when equitable).
    pub q: Vec<Vec<f64>>,
    /// The common row sums as integers, present iff the partition is equitable.
    pub q_int: Option<Vec<Vec<i64>>>,
    pub equitable: bool,
    pub witness: Option<EquitabilityWitness>,
}

impl QuotientResult {
    /// Eigenvalues of the quotient, descending. Uses the block-size
    /// symmetrization `D^{1/2} Q D^{-1/2}` (similar to `Q`, symmetric for
    /// equitable quotients of symmetric matrices) and falls back to the
    /// explicitly symmetrized average otherwise.
    pub fn eigenvalues(&self, partition: &Partition) -> Result<Vec<f64>> {
        let m = self.q.len();
        let sizes: Vec<f64> = partition.blocks().iter().map(|b| b.len() as f64).collect();
        let mut sym = vec![0.0f64; m * m];
        for i in 0..m {
            for j in 0..m {
                let scaled = self.q[i][j] * (sizes[i] / sizes[j]).sqrt();
                sym[i * m + j] = scaled;
            }
        }
        for i in 0..m {
            for j in i + 1..m {
                let avg = 0.5 * (sym[i * m + j] + sym[j * m + i]);
                sym[i * m + j] = avg;
                sym[j * m + i] = avg;
            }
        }
        Ok(crate::eigen::jacobi_eigen(m, &sym)?.values)
    }
}

/// Block row sums of `m` under `p`. `q[i][j]` is the common row sum when the
/// partition is equitable and the average row sum otherwise (with a witness).
pub fn quotient_matrix(m: &IntSymMatrix, p: &Partition) -> Result<QuotientResult> {
    if p.n() != m.n() {
        return Err(Error::DimensionMismatch {
            expected: m.n(),
            got: p.n(),
        });
    }
    let nb = p.blocks().len();
    let mut q = vec![vec![0.0f64; nb]; nb];
    let mut q_int = vec![vec![0i64; nb]; nb];
    let mut equitable = true;
    let mut witness = None;
    for (bi, rows) in p.blocks().iter().enumerate() {
        for (bj, cols) in p.blocks().iter().enumerate() {
            let mut first_sum = 0i64;
            let mut total = 0i64;
            for (ri, &r) in rows.iter().enumerate() {
                let sum: i64 = cols.iter().map(|&c| m.get(r, c)).sum();
                total += sum;
                if ri == 0 {
                    first_sum = sum;
                } else if sum != first_sum && witness.is_none() {
                    equitable = false;
                    witness = Some(EquitabilityWitness {
                        block_row: bi,
                        block_col: bj,
                        row_a: rows[0],
                        row_b: r,
                        sum_a: first_sum,
                        sum_b: sum,
                    });
                } else if sum != first_sum {
                    equitable = false;
                }
            }
            q[bi][bj] = total as f64 / rows.len() as f64;
            q_int[bi][bj] = first_sum;
        }
    }
    Ok(QuotientResult {
        q,
        q_int: equitable.then_some(q_int),
        equitable,
        witness,
    })
}

/// Canonical equitable partition shipped with each generator family:
/// hyperstar `{center | rest}`, sunflower `{core | anchors | outer}`,
/// double hyperstar `{c1 | star-1 block | c2 | star-2 block | bridge fill}`,
/// complete `{V}`.
pub fn canonical_partition(family: &Family) -> Result<Partition> {
    match *family {
        Family::Hyperstar { n, k } => {
            let order = (n - 1) * (k - 1) + 1;
            Partition::new(order, vec![vec![0], (1..order).collect()])
        }
        Family::Sunflower { k } => {
            let order = k * (k - 1) + 1;
            let anchors: Vec<usize> = (0..k - 1).map(|i| 1 + i * k).collect();
            let outer: Vec<usize> = (1..order).filter(|v| (v - 1) % k != 0).collect();
            Partition::new(order, vec![vec![0], anchors, outer])
        }
        Family::DoubleHyperstar { n1, n2, k } => {
            let s1 = (n1 - 1) * (k - 1);
            let s2 = (n2 - 1) * (k - 1);
            let order = n1 + n2 + (n1 + n2 - 1) * (k - 2);
            Partition::new(
                order,
                vec![
                    vec![0],
                    (2..2 + s1).collect(),
                    vec![1],
                    (2 + s1..2 + s1 + s2).collect(),
                    (2 + s1 + s2..order).collect(),
                ],
            )
        }
        Family::Complete { n, .. } => Partition::new(n, vec![(0..n).collect()]),
    }
}

/// True iff every eigenvalue of the quotient matches a distinct eigenvalue of
/// the parent within `tol` (both lists sorted descending; multiset matching).
pub fn spectrum_containment(q_values: &[f64], m_values: &[f64], tol: f64) -> bool {
    let mut i = 0usize;
    for &qv in q_values {
        while i < m_values.len() && m_values[i] > qv + tol {
            i += 1;
        }
        if i >= m_values.len() || (m_values[i] - qv).abs() > tol {
            return false;
        }
        i += 1;
    }
    true
}

/// splitmix64; the fixed-seed deterministic source for sample points.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform draw from `[lo, hi)`.
    pub fn next_f64(&mut self, lo: f64, hi: f64) -> f64 {
        let u = (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64;
        lo + u * (hi - lo)
    }
}

/// Draws `count` points from `[lo, hi)`, rejecting any candidate within
/// `radius` of an excluded value. Deterministic given the seed.
pub fn sample_points(
    seed: u64,
    count: usize,
    lo: f64,
    hi: f64,
    exclusions: &[f64],
    radius: f64,
) -> Vec<f64> {
    let mut rng = SplitMix64::new(seed);
    let mut out = Vec::with_capacity(count);
    let mut attempts = 0usize;
    while out.len() < count && attempts < 100_000 {
        attempts += 1;
        let x = rng.next_f64(lo, hi);
        if exclusions.iter().all(|&e| (x - e).abs() >= radius) {
            out.push(x);
        }
    }
    out
}

/// Rejection radius used when drawing identity sample points: wide enough to
/// keep both sides of the identity away from their common zeros.
pub const SAMPLE_EXCLUSION_RADIUS: f64 = 0.05;
/// Hard skip radius near poles, applied to caller-supplied points.
pub const POLE_SKIP_RADIUS: f64 = 1e-8;

/// Default sample points for [`verify_char_poly_identity`] on `h`: 20 draws
/// from `[-10, 10]` avoiding `λ = −1`, the transformed adjacency eigenvalues
/// `−1−2λ_j` (poles of the reconstructed walk series), and the Seidel
/// eigenvalues (zeros of both sides).
pub fn identity_sample_points(h: &Hypergraph, seed: u64, count: usize) -> Result<Vec<f64>> {
    let adj = eigen_symmetric(&adjacency_matrix(h))?;
    let sei = eigen_symmetric(&seidel_matrix(h))?;
    let mut exclusions = vec![-1.0];
    exclusions.extend(adj.values.iter().map(|&l| -1.0 - 2.0 * l));
    exclusions.extend(&sei.values);
    Ok(sample_points(
        seed,
        count,
        -10.0,
        10.0,
        &exclusions,
        SAMPLE_EXCLUSION_RADIUS,
    ))
}

/// Outcome of a pointwise identity check.
#[derive(Debug, Clone, Serialize)]
pub struct IdentityReport {
    pub check: String,
    pub points_used: Vec<f64>,
    pub skipped_points: Vec<f64>,
    pub max_rel_error: f64,
}

fn rel_error(lhs: f64, rhs: f64) -> f64 {
    (lhs - rhs).abs() / lhs.abs().max(rhs.abs()).max(1.0)
}

/// Checks `P_S(λ) = (−2)^n · P_A(−(λ+1)/2) · (−H(−2/(λ+1))/(λ+1) + 1)`
/// pointwise, where `H` is the walk generating function reconstructed from
/// the adjacency eigendecomposition. Points within [`POLE_SKIP_RADIUS`] of
/// `λ = −1` or a pole of `H` are skipped and reported.
pub fn verify_char_poly_identity(h: &Hypergraph, points: &[f64]) -> Result<IdentityReport> {
    let n = h.order();
    let a = adjacency_matrix(h);
    let s = seidel_matrix(h);
    let decomp = eigen_symmetric(&a)?;
    let walk_gen = walk_gen_from_spectrum(&decomp);
    let scale = (-2.0f64).powi(n as i32);

    let mut report = IdentityReport {
        check: "char-poly-identity".into(),
        points_used: Vec::new(),
        skipped_points: Vec::new(),
        max_rel_error: 0.0,
    };
    for &lambda in points {
        let near_pole = (lambda + 1.0).abs() < POLE_SKIP_RADIUS
            || decomp
                .values
                .iter()
                .any(|&l| (lambda + 1.0 + 2.0 * l).abs() < POLE_SKIP_RADIUS);
        if near_pole {
            report.skipped_points.push(lambda);
            continue;
        }
        let lhs = char_poly_eval(&s, lambda);
        let t = -2.0 / (lambda + 1.0);
        let h_val = walk_gen.eval(t)?;
        let rhs =
            scale * char_poly_eval(&a, -(lambda + 1.0) / 2.0) * (-h_val / (lambda + 1.0) + 1.0);
        report.max_rel_error = report.max_rel_error.max(rel_error(lhs, rhs));
        report.points_used.push(lambda);
    }
    Ok(report)
}

/// Regular-hypergraph specialization:
/// `P_S(λ) = (−2)^n · (λ+1−n+2r(k−1))/(λ+1+2r(k−1)) · P_A(−(λ+1)/2)`.
/// Requires the input to be (k,r)-regular.
pub fn verify_regular_identity(h: &Hypergraph, points: &[f64]) -> Result<IdentityReport> {
    let report = h.validate();
    let (Some(k), Some(r)) = (report.uniform_k, report.regular_r) else {
        return Err(Error::NotRegular(
            "the characteristic-polynomial shortcut needs a (k,r)-regular hypergraph".into(),
        ));
    };
    let n = h.order();
    let a = adjacency_matrix(h);
    let s = seidel_matrix(h);
    let shift = 2.0 * (r * (k - 1)) as f64;
    let scale = (-2.0f64).powi(n as i32);

    let mut out = IdentityReport {
        check: "regular-identity".into(),
        points_used: Vec::new(),
        skipped_points: Vec::new(),
        max_rel_error: 0.0,
    };
    for &lambda in points {
        if (lambda + 1.0 + shift).abs() < POLE_SKIP_RADIUS {
            out.skipped_points.push(lambda);
            continue;
        }
        let lhs = char_poly_eval(&s, lambda);
        let rational = (lambda + 1.0 - n as f64 + shift) / (lambda + 1.0 + shift);
        let rhs = scale * rational * char_poly_eval(&a, -(lambda + 1.0) / 2.0);
        out.max_rel_error = out.max_rel_error.max(rel_error(lhs, rhs));
        out.points_used.push(lambda);
    }
    Ok(out)
}

/// One adjacency→Seidel multiplicity transfer observation.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct TransferTriple {
    pub adjacency_value: f64,
    pub adjacency_multiplicity: usize,
    pub seidel_value: f64,
    pub seidel_multiplicity: usize,
}

/// Report for the multiplicity-transfer check.
#[derive(Debug, Clone, Serialize)]
pub struct TransferReport {
    pub transfers: Vec<TransferTriple>,
    /// Triples failing `m_q ≥ m_p − 1` (empty on success).
    pub violations: Vec<TransferTriple>,
}

impl TransferReport {
    pub fn pass(&self) -> bool {
        self.violations.is_empty()
    }
}

/// For every adjacency eigenvalue group `(λ0, m_p)` with `m_p ≥ 2`, looks for
/// a Seidel group at `−2λ0−1` and records whether `m_q ≥ m_p − 1`.
/// Violations are reported, not thrown.
pub fn verify_multiplicity_transfer(h: &Hypergraph, tol: f64) -> Result<TransferReport> {
    let adj = group_spectrum(&eigen_symmetric(&adjacency_matrix(h))?.values, tol);
    let sei = group_spectrum(&eigen_symmetric(&seidel_matrix(h))?.values, tol);
    Ok(multiplicity_transfer_from_spectra(&adj, &sei, tol))
}

/// Spectrum-level core of [`verify_multiplicity_transfer`].
pub fn multiplicity_transfer_from_spectra(
    adjacency: &Spectrum,
    seidel: &Spectrum,
    tol: f64,
) -> TransferReport {
    let match_tol = 50.0 * tol;
    let mut transfers = Vec::new();
    let mut violations = Vec::new();
    for g in &adjacency.entries {
        if g.multiplicity < 2 {
            continue;
        }
        let target = -2.0 * g.value - 1.0;
        let found = seidel
            .entries
            .iter()
            .find(|e| (e.value - target).abs() <= match_tol);
        let (sv, sm) = match found {
            Some(e) => (e.value, e.multiplicity),
            None => (target, 0),
        };
        let triple = TransferTriple {
            adjacency_value: g.value,
            adjacency_multiplicity: g.multiplicity,
            seidel_value: sv,
            seidel_multiplicity: sm,
        };
        transfers.push(triple);
        if sm + 1 < g.multiplicity {
            violations.push(triple);
        }
    }
    TransferReport {
        transfers,
        violations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eigen::DEFAULT_GROUP_TOL;

    fn worked_example() -> Hypergraph {
        Hypergraph::new(5, vec![vec![0, 1, 2], vec![1, 2, 3, 4], vec![0, 1, 3]]).unwrap()
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::new(3, vec![vec![0, 1], vec![2]]).is_ok());
        assert!(Partition::new(3, vec![vec![0, 1]]).is_err()); // uncovered
        assert!(Partition::new(3, vec![vec![0, 1], vec![1, 2]]).is_err()); // overlap
        assert!(Partition::new(3, vec![vec![0, 1, 2], vec![]]).is_err()); // empty
        assert!(Partition::new(2, vec![vec![0, 1, 2]]).is_err()); // out of range
    }

    #[test]
    fn twin_classes_hyperstar() {
        let h = Hypergraph::hyperstar(4, 3).unwrap();
        let p = twin_classes(&h);
        // center alone, one class of two leaves per edge
        assert_eq!(p.blocks().len(), 4);
        assert_eq!(p.blocks()[0], vec![0]);
        assert!(p.blocks()[1..].iter().all(|b| b.len() == 2));
    }

    #[test]
    fn twin_classes_edgeless_and_worked() {
        let p = twin_classes(&Hypergraph::edgeless(4));
        assert_eq!(p.blocks().len(), 1);
        // the worked example has pairwise distinct memberships
        let p = twin_classes(&worked_example());
        assert_eq!(p.blocks().len(), 5);
    }

    #[test]
    fn twin_classes_refine_canonical_partitions() {
        for h in [
            Hypergraph::hyperstar(5, 4).unwrap(),
            Hypergraph::sunflower(4).unwrap(),
            Hypergraph::double_hyperstar(3, 4, 3).unwrap(),
        ] {
            let canon = canonical_partition(&h.family().unwrap()).unwrap();
            assert!(twin_classes(&h).refines(&canon));
        }
    }

    #[test]
    fn quotient_hyperstar_two_block() {
        let h = Hypergraph::hyperstar(4, 3).unwrap();
        let s = seidel_matrix(&h);
        let p = canonical_partition(&h.family().unwrap()).unwrap();
        let q = quotient_matrix(&s, &p).unwrap();
        assert!(q.equitable);
        let qi = q.q_int.unwrap();
        // [[0, −(n−1)(k−1)], [−1, (n−2)(k−1)−(k−2)]]
        assert_eq!(qi, vec![vec![0, -6], vec![-1, 3]]);
    }

    #[test]
    fn quotient_singletons_is_matrix_itself() {
        let h = worked_example();
        let s = seidel_matrix(&h);
        let p = Partition::singletons(5);
        let q = quotient_matrix(&s, &p).unwrap();
        assert!(q.equitable);
        let qi = q.q_int.unwrap();
        for i in 0..5 {
            for j in 0..5 {
                assert_eq!(qi[i][j], s.get(i, j));
            }
        }
    }

    #[test]
    fn quotient_sunflower_matches_printed_matrix() {
        for k in 2..7usize {
            let h = Hypergraph::sunflower(k).unwrap();
            let s = seidel_matrix(&h);
            let p = canonical_partition(&h.family().unwrap()).unwrap();
            let q = quotient_matrix(&s, &p).unwrap();
            assert!(q.equitable, "k={k}");
            let ki = k as i64;
            let expected = vec![
                vec![0, 1 - ki, (ki - 1) * (ki - 1)],
                vec![-1, 2 - ki, (ki - 1) * (ki - 3)],
                vec![1, ki - 3, (ki - 2) * (ki - 2)],
            ];
            assert_eq!(q.q_int.unwrap(), expected, "k={k}");
        }
    }

    #[test]
    fn quotient_not_equitable_has_witness() {
        let h = worked_example();
        let s = seidel_matrix(&h);
        let p = Partition::new(5, vec![vec![0, 1], vec![2, 3, 4]]).unwrap();
        let q = quotient_matrix(&s, &p).unwrap();
        assert!(!q.equitable);
        assert!(q.q_int.is_none());
        let w = q.witness.unwrap();
        assert_ne!(w.sum_a, w.sum_b);
    }

    #[test]
    fn containment_hyperstar_quotient() {
        let h = Hypergraph::hyperstar(4, 3).unwrap();
        let s = seidel_matrix(&h);
        let p = canonical_partition(&h.family().unwrap()).unwrap();
        let q = quotient_matrix(&s, &p).unwrap();
        let qe = q.eigenvalues(&p).unwrap();
        let r1 = (3.0 + 33f64.sqrt()) / 2.0;
        let r2 = (3.0 - 33f64.sqrt()) / 2.0;
        assert!((qe[0] - r1).abs() < 1e-9 && (qe[1] - r2).abs() < 1e-9);
        let me = eigen_symmetric(&s).unwrap().values;
        assert!(spectrum_containment(&qe, &me, 1e-8));
        // a corrupted quotient value must fail
        let bad = vec![qe[0] + 1.0, qe[1]];
        assert!(!spectrum_containment(&bad, &me, 1e-8));
    }

    #[test]
    fn containment_singletons_trivial() {
        let h = worked_example();
        let me = eigen_symmetric(&seidel_matrix(&h)).unwrap().values;
        assert!(spectrum_containment(&me, &me, 1e-12));
    }

    #[test]
    fn containment_respects_multiplicity() {
        let parent = [3.0, 3.0, 3.0, -9.0];
        assert!(spectrum_containment(&[3.0, 3.0], &parent, 1e-9));
        assert!(spectrum_containment(&[3.0, -9.0], &parent, 1e-9));
        // a fourth copy of 3 is not available
        assert!(!spectrum_containment(&[3.0, 3.0, 3.0, 3.0], &parent, 1e-9));
        assert!(!spectrum_containment(&[4.0], &parent, 1e-9));
    }

    #[test]
    fn sample_points_deterministic_and_clear_of_exclusions() {
        let a = sample_points(7, 20, -10.0, 10.0, &[0.0], 0.5);
        let b = sample_points(7, 20, -10.0, 10.0, &[0.0], 0.5);
        assert_eq!(a, b);
        assert_eq!(a.len(), 20);
        assert!(a.iter().all(|&x| x.abs() >= 0.5));
    }

    #[test]
    fn identity_on_small_families() {
        for (name, h) in [
            ("complete", Hypergraph::complete_uniform(4, 3).unwrap()),
            ("hyperstar", Hypergraph::hyperstar(4, 3).unwrap()),
            ("sunflower", Hypergraph::sunflower(3).unwrap()),
            ("worked", worked_example()),
        ] {
            let pts = identity_sample_points(&h, 11, 20).unwrap();
            let rep = verify_char_poly_identity(&h, &pts).unwrap();
            assert_eq!(rep.points_used.len(), 20, "{name}");
            assert!(rep.max_rel_error < 1e-7, "{name}: {}", rep.max_rel_error);
        }
    }

    #[test]
    fn identity_single_vertex() {
        let h = Hypergraph::edgeless(1);
        let pts = identity_sample_points(&h, 5, 10).unwrap();
        let rep = verify_char_poly_identity(&h, &pts).unwrap();
        assert!(rep.max_rel_error < 1e-10);
    }

    #[test]
    fn identity_skips_points_near_poles() {
        let h = Hypergraph::complete_uniform(4, 3).unwrap();
        let rep = verify_char_poly_identity(&h, &[-1.0, 0.5]).unwrap();
        assert_eq!(rep.skipped_points, vec![-1.0]);
        assert_eq!(rep.points_used, vec![0.5]);
    }

    #[test]
    fn regular_identity_on_completes() {
        for (n, r) in [(4usize, 3usize), (5, 3), (6, 2)] {
            let h = Hypergraph::complete_uniform(n, r).unwrap();
            let rep = verify_regular_identity(&h, &[0.0, 1.0, 4.0]).unwrap();
            assert!(rep.max_rel_error < 1e-8, "({n},{r}): {}", rep.max_rel_error);
        }
    }

    #[test]
    fn regular_identity_vanishes_at_seidel_perron() {
        let h = Hypergraph::complete_uniform(4, 3).unwrap();
        let s = seidel_matrix(&h);
        let a = adjacency_matrix(&h);
        let lambda = 4.0 - 1.0 - 2.0 * 6.0; // n−1−2r(k−1)
        let lhs = char_poly_eval(&s, lambda);
        let rational = (lambda + 1.0 - 4.0 + 12.0) / (lambda + 1.0 + 12.0);
        let rhs = (-2.0f64).powi(4) * rational * char_poly_eval(&a, -(lambda + 1.0) / 2.0);
        assert!(lhs.abs() < 1e-6 && rhs.abs() < 1e-6);
    }

    #[test]
    fn regular_identity_rejects_irregular() {
        assert!(verify_regular_identity(&worked_example(), &[0.0]).is_err());
    }

    #[test]
    fn multiplicity_transfer_hyperstar() {
        let h = Hypergraph::hyperstar(4, 3).unwrap();
        let rep = verify_multiplicity_transfer(&h, DEFAULT_GROUP_TOL).unwrap();
        assert!(rep.pass());
        // λ0 = −1 (m=3) → Seidel 1 with m=3; λ0 = 1 (m=2) → Seidel −3 with m=2
        let by_value = |v: f64| {
            rep.transfers
                .iter()
                .find(|t| (t.adjacency_value - v).abs() < 1e-6)
                .copied()
                .unwrap()
        };
        let t1 = by_value(-1.0);
        assert_eq!(t1.adjacency_multiplicity, 3);
        assert_eq!(t1.seidel_multiplicity, 3);
        let t2 = by_value(1.0);
        assert_eq!(t2.adjacency_multiplicity, 2);
        assert_eq!(t2.seidel_multiplicity, 2);
    }

    #[test]
    fn multiplicity_transfer_edgeless_and_sunflower() {
        let rep =
            verify_multiplicity_transfer(&Hypergraph::edgeless(5), DEFAULT_GROUP_TOL).unwrap();
        assert!(rep.pass());
        assert_eq!(rep.transfers[0].seidel_multiplicity, 4); // J−I keeps −1 with n−1

        let rep =
            verify_multiplicity_transfer(&Hypergraph::sunflower(4).unwrap(), DEFAULT_GROUP_TOL)
                .unwrap();
        assert!(rep.pass());
        let t = rep
            .transfers
            .iter()
            .find(|t| (t.adjacency_value + 1.0).abs() < 1e-6)
            .unwrap();
        assert_eq!(t.adjacency_multiplicity, 6);
        assert_eq!(t.seidel_multiplicity, 6);
    }
}
