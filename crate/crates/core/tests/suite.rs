//! Deterministic invariants over the full generator sweep: canonical
//! partitions stay equitable with contained quotient spectra, twin classes
//! refine them and commute with eigenspace projectors, walk counts are
//! reconstructed from spectra, and the two main-eigenvalue counters agree.

mod common;

use common::{assert_multisets_close, family_sweep};
use num_traits::ToPrimitive;

use hyperspectra::eigen::{
    eigen_symmetric, main_count_via_rank, main_eigenvalues, walk_gen_from_spectrum,
    DEFAULT_GROUP_TOL, DEFAULT_MAIN_TOL,
};
use hyperspectra::matrix::{adjacency_matrix, seidel_matrix, walk_table};
use hyperspectra::structure::{
    canonical_partition, quotient_matrix, spectrum_containment, twin_classes,
};

#[test]
fn canonical_partitions_are_equitable_with_contained_spectra() {
    for (name, h) in family_sweep() {
        let p = canonical_partition(&h.family().unwrap()).unwrap();
        let s = seidel_matrix(&h);
        let q = quotient_matrix(&s, &p).unwrap();
        assert!(q.equitable, "{name}: canonical partition must be equitable");
        let q_values = q.eigenvalues(&p).unwrap();
        let m_values = eigen_symmetric(&s).unwrap().values;
        assert!(
            spectrum_containment(&q_values, &m_values, 1e-8),
            "{name}: quotient spectrum must embed in the parent spectrum"
        );
    }
}

#[test]
fn twin_classes_refine_canonical_partitions() {
    for (name, h) in family_sweep() {
        let canon = canonical_partition(&h.family().unwrap()).unwrap();
        let twins = twin_classes(&h);
        assert!(twins.refines(&canon), "{name}");
    }
}

#[test]
fn twin_swaps_commute_with_nonmain_eigenprojectors() {
    // twins with equal degree leave S invariant under their transposition,
    // so each eigenspace projector must commute with the swap
    for (name, h) in family_sweep() {
        if h.order() > 25 {
            continue;
        }
        let n = h.order();
        let s = seidel_matrix(&h);
        let d = eigen_symmetric(&s).unwrap();
        let mains = main_eigenvalues(&d, DEFAULT_GROUP_TOL, DEFAULT_MAIN_TOL);
        let twins = twin_classes(&h);
        let mut idx = 0usize;
        for group in &mains {
            let vectors = &d.vectors[idx..idx + group.multiplicity];
            idx += group.multiplicity;
            if group.is_main {
                continue;
            }
            // projector P = Σ x xᵀ over the group
            let mut proj = vec![0.0f64; n * n];
            for x in vectors {
                for i in 0..n {
                    for j in 0..n {
                        proj[i * n + j] += x[i] * x[j];
                    }
                }
            }
            for block in twins.blocks() {
                if block.len() < 2 {
                    continue;
                }
                let (u, v) = (block[0], block[1]);
                // commutator of the swap (u v) with the projector
                let mut max_comm = 0.0f64;
                for i in 0..n {
                    for j in 0..n {
                        let si = if i == u {
                            v
                        } else if i == v {
                            u
                        } else {
                            i
                        };
                        let sj = if j == u {
                            v
                        } else if j == v {
                            u
                        } else {
                            j
                        };
                        let lhs = proj[si * n + j]; // (P_swap · proj)[i][j]
                        let rhs = proj[i * n + sj]; // (proj · P_swap)[i][j]
                        max_comm = max_comm.max((lhs - rhs).abs());
                    }
                }
                assert!(
                    max_comm <= 1e-8,
                    "{name}: projector at {} fails to commute with twin swap ({u},{v}): {max_comm}",
                    group.value
                );
            }
        }
    }
}

#[test]
fn walk_reconstruction_matches_exact_counts() {
    for (name, h) in family_sweep() {
        if h.order() > 40 {
            continue;
        }
        let d = eigen_symmetric(&adjacency_matrix(&h)).unwrap();
        let gen = walk_gen_from_spectrum(&d);
        let exact = walk_table(&h, 6);
        for (l, count) in exact.counts.iter().enumerate() {
            let want = count.to_f64().unwrap();
            let got = gen.walk_count(l as u32);
            assert!(
                (got - want).abs() <= 1e-6 * want.max(1.0),
                "{name} l={l}: {got} vs {want}"
            );
        }
    }
}

#[test]
fn main_counters_agree_across_sweep() {
    for (name, h) in family_sweep() {
        if h.order() > 25 {
            continue;
        }
        let s = seidel_matrix(&h);
        let d = eigen_symmetric(&s).unwrap();
        let proj = main_eigenvalues(&d, DEFAULT_GROUP_TOL, DEFAULT_MAIN_TOL)
            .iter()
            .filter(|m| m.is_main)
            .count();
        assert_eq!(proj, main_count_via_rank(&s), "{name}");
    }
}

#[test]
fn seidel_spectrum_construction_is_idempotent() {
    // rebuilding S from scratch reproduces the same numeric spectrum exactly
    for (name, h) in family_sweep().into_iter().take(12) {
        let a = eigen_symmetric(&seidel_matrix(&h)).unwrap().values;
        let b = eigen_symmetric(&seidel_matrix(&h.clone())).unwrap().values;
        assert_multisets_close(&name, &a, &b, 0.0);
    }
}
