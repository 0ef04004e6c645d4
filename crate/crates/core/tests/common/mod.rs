#![allow(dead_code)] // each test target compiles its own copy and uses a subset

//! Helpers shared by the integration suites.

use hyperspectra::hypergraph::Hypergraph;
use hyperspectra::structure::SplitMix64;

/// Seeded random hypergraph: 2..=max_n vertices, 1..=4 edges of size
/// 2..=min(n,5) with distinct vertices.
pub fn random_hypergraph(rng: &mut SplitMix64, max_n: usize) -> Hypergraph {
    let n = 2 + (rng.next_u64() as usize) % (max_n - 1);
    let m = 1 + (rng.next_u64() as usize) % 4;
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let max_size = n.min(5);
        let size = 2 + (rng.next_u64() as usize) % (max_size - 1);
        let mut pool: Vec<usize> = (0..n).collect();
        for i in 0..size {
            let j = i + (rng.next_u64() as usize) % (n - i);
            pool.swap(i, j);
        }
        let mut e = pool[..size].to_vec();
        e.sort_unstable();
        edges.push(e);
    }
    Hypergraph::new(n, edges).expect("generated edges are valid")
}

/// The 5-vertex mixed-rank example used throughout the matrix tests.
pub fn worked_example() -> Hypergraph {
    Hypergraph::new(5, vec![vec![0, 1, 2], vec![1, 2, 3, 4], vec![0, 1, 3]]).unwrap()
}

/// Every generated family member used by the sweeps, with a short name.
pub fn family_sweep() -> Vec<(String, Hypergraph)> {
    let mut out = Vec::new();
    for n in 3..=8 {
        for k in 2..=6 {
            out.push((
                format!("hyperstar({n},{k})"),
                Hypergraph::hyperstar(n, k).unwrap(),
            ));
        }
    }
    for n in 3..=8 {
        for r in 2..=n {
            out.push((
                format!("complete({n},{r})"),
                Hypergraph::complete_uniform(n, r).unwrap(),
            ));
        }
    }
    for n1 in 2..=5 {
        for n2 in 2..=5 {
            for k in 3..=5 {
                out.push((
                    format!("double-hyperstar({n1},{n2},{k})"),
                    Hypergraph::double_hyperstar(n1, n2, k).unwrap(),
                ));
            }
        }
    }
    for k in 2..=8 {
        out.push((format!("sunflower({k})"), Hypergraph::sunflower(k).unwrap()));
    }
    out
}

pub fn assert_multisets_close(name: &str, a: &[f64], b: &[f64], tol: f64) {
    assert_eq!(a.len(), b.len(), "{name}: lengths differ");
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort_by(|x, y| y.partial_cmp(x).unwrap());
    b.sort_by(|x, y| y.partial_cmp(x).unwrap());
    for (x, y) in a.iter().zip(&b) {
        assert!(
            (x - y).abs() <= tol,
            "{name}: {x} vs {y} exceeds tolerance {tol}"
        );
    }
}
