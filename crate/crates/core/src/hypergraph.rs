//! Hypergraph representation, validation, vertex deletion, and the named
//! generator families (hyperstar, double hyperstar, sunflower, complete
//! r-uniform, and power hypergraphs of 2-uniform base graphs).
//!
//! Vertices are dense 0-based indices so matrix rows have a fixed order.
//! Hyperedges are stored as an ordered multiset: two edges with the same
//! vertex set are distinct edges, and adjacency counts them both.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which generator produced a hypergraph, with its parameters.
///
/// Carried as optional metadata so downstream code can attach closed-form
/// spectra and canonical partitions to generated instances.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "name", rename_all = "kebab-case")]
pub enum Family {
    Hyperstar { n: usize, k: usize },
    DoubleHyperstar { n1: usize, n2: usize, k: usize },
    Sunflower { k: usize },
    Complete { n: usize, r: usize },
}

impl Family {
    /// Order of the generated hypergraph.
    pub fn order(&self) -> usize {
        match *self {
            Family::Hyperstar { n, k } => (n - 1) * (k - 1) + 1,
            Family::DoubleHyperstar { n1, n2, k } => n1 + n2 + (n1 + n2 - 1) * (k - 2),
            Family::Sunflower { k } => k * (k - 1) + 1,
            Family::Complete { n, .. } => n,
        }
    }
}

/// Display label `v_{i,j}` mirroring the construction-time naming of a vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexLabel {
    pub i: usize,
    pub j: usize,
}

/// A hypergraph: `n` vertices indexed `0..n` and an ordered multiset of
/// hyperedges, each a sorted duplicate-free list of vertex indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Vec<usize>>,
    labels: Option<Vec<VertexLabel>>,
    family: Option<Family>,
}

/// Structural summary of a hypergraph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    /// Maximum edge cardinality (0 when there are no edges).
    pub rank: usize,
    /// Minimum edge cardinality (0 when there are no edges).
    pub corank: usize,
    /// `Some(k)` when every edge has cardinality `k` (requires at least one edge).
    pub uniform_k: Option<usize>,
    /// `Some(r)` when every vertex lies in exactly `r` edges.
    pub regular_r: Option<usize>,
    /// Per-vertex degrees: `degrees[v]` = number of edges containing `v`.
    pub degrees: Vec<usize>,
}

impl ValidationReport {
    /// True when the hypergraph is k-uniform and r-regular for some k, r.
    pub fn is_regular(&self) -> bool {
        self.uniform_k.is_some() && self.regular_r.is_some()
    }
}

impl Hypergraph {
    /// Builds a hypergraph, normalizing each edge to sorted order.
    ///
    /// Rejects out-of-range indices, repeated vertices inside one edge, and
    /// edges with fewer than two vertices. Duplicate edges (same vertex set
    /// appearing as distinct hyperedges) are allowed.
    pub fn new(n: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        let mut sorted_edges = Vec::with_capacity(edges.len());
        for (idx, mut e) in edges.into_iter().enumerate() {
            e.sort_unstable();
            for &v in &e {
                if v >= n {
                    return Err(Error::VertexOutOfRange {
                        vertex: v,
                        edge: idx,
                        order: n,
                    });
                }
            }
            if let Some(w) = e.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateVertexInEdge {
                    vertex: w[0],
                    edge: idx,
                });
            }
            if e.len() < 2 {
                return Err(Error::EdgeTooSmall {
                    edge: idx,
                    len: e.len(),
                });
            }
            sorted_edges.push(e);
        }
        Ok(Hypergraph {
            n,
            edges: sorted_edges,
            labels: None,
            family: None,
        })
    }

    /// An edgeless hypergraph on `n` vertices.
    pub fn edgeless(n: usize) -> Self {
        Hypergraph {
            n,
            edges: Vec::new(),
            labels: None,
            family: None,
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn labels(&self) -> Option<&[VertexLabel]> {
        self.labels.as_deref()
    }

    pub fn family(&self) -> Option<Family> {
        self.family
    }

    pub(crate) fn set_family(&mut self, family: Option<Family>) {
        self.family = family;
    }

    /// Number of edges containing vertex `v`.
    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|e| e.binary_search(&v).is_ok())
            .count()
    }

    /// Structural summary: rank, corank, uniformity, regularity, degrees.
    pub fn validate(&self) -> ValidationReport {
        let mut degrees = vec![0usize; self.n];
        let mut rank = 0usize;
        let mut corank = usize::MAX;
        for e in &self.edges {
            rank = rank.max(e.len());
            corank = corank.min(e.len());
            for &v in e {
                degrees[v] += 1;
            }
        }
        if self.edges.is_empty() {
            rank = 0;
            corank = 0;
        }
        let uniform_k = if !self.edges.is_empty() && rank == corank {
            Some(rank)
        } else {
            None
        };
        let regular_r = match degrees.first() {
            Some(&d0) if degrees.iter().all(|&d| d == d0) => Some(d0),
            None => Some(0),
            _ => None,
        };
        ValidationReport {
            rank,
            corank,
            uniform_k,
            regular_r,
            degrees,
        }
    }

    /// Removes vertex `v`, reindexing the remaining vertices order-preservingly.
    ///
    /// `v` is dropped from every edge; edges whose cardinality falls below 2
    /// are dropped entirely (they contribute nothing to the adjacency matrix).
    /// The adjacency matrix of the result equals the principal submatrix of
    /// the original with row/column `v` deleted.
    pub fn delete_vertex(&self, v: usize) -> Result<Hypergraph> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                edge: usize::MAX,
                order: self.n,
            });
        }
        let reindex = |u: usize| if u > v { u - 1 } else { u };
        let mut edges = Vec::new();
        for e in &self.edges {
            let reduced: Vec<usize> = e.iter().filter(|&&u| u != v).map(|&u| reindex(u)).collect();
            if reduced.len() >= 2 {
                edges.push(reduced);
            }
        }
        let labels = self.labels.as_ref().map(|ls| {
            ls.iter()
                .enumerate()
                .filter(|&(u, _)| u != v)
                .map(|(_, &l)| l)
                .collect()
        });
        Ok(Hypergraph {
            n: self.n - 1,
            edges,
            labels,
            family: None,
        })
    }

    /// Relabels vertices by first appearance in edge-order traversal; isolated
    /// vertices keep their relative order at the end. Two hypergraphs built
    /// from the same abstract construction compare equal after this.
    pub fn canonical_form(&self) -> (usize, Vec<Vec<usize>>) {
        let mut map = vec![usize::MAX; self.n];
        let mut next = 0usize;
        let mut edges = Vec::with_capacity(self.edges.len());
        for e in &self.edges {
            for &u in e {
                if map[u] == usize::MAX {
                    map[u] = next;
                    next += 1;
                }
            }
            let mut img: Vec<usize> = e.iter().map(|&u| map[u]).collect();
            img.sort_unstable();
            edges.push(img);
        }
        (self.n, edges)
    }

    /// Hyperstar: `n-1` hyperedges of size `k` sharing exactly one center.
    ///
    /// Vertex 0 is the center `v_{0,0}`; edge `i` (1-based) covers the
    /// `k-1` leaves `v_{i,1}..v_{i,k-1}` at indices `1+(i-1)(k-1)..=i(k-1)`.
    /// Order is `(n-1)(k-1)+1`.
    pub fn hyperstar(n: usize, k: usize) -> Result<Hypergraph> {
        if n < 2 || k < 2 {
            return Err(Error::InvalidParameter(format!(
                "hyperstar needs n >= 2 and k >= 2, got n={n}, k={k}"
            )));
        }
        let order = (n - 1) * (k - 1) + 1;
        let mut labels = vec![VertexLabel { i: 0, j: 0 }];
        let mut edges = Vec::with_capacity(n - 1);
        let mut nextv = 1usize;
        for i in 1..n {
            let mut e = vec![0usize];
            for j in 1..k {
                labels.push(VertexLabel { i, j });
                e.push(nextv);
                nextv += 1;
            }
            edges.push(e);
        }
        debug_assert_eq!(nextv, order);
        let mut h = Hypergraph::new(order, edges)?;
        h.labels = Some(labels);
        h.family = Some(Family::Hyperstar { n, k });
        Ok(h)
    }

    /// Uniform double hyperstar: the k-th power of a double star.
    ///
    /// Vertices 0 and 1 are the two centers. Edges: `n1-1` star-1 edges
    /// `{0} ∪ (k-1 fresh)`, then `n2-1` star-2 edges `{1} ∪ (k-1 fresh)`,
    /// then the bridge edge `{0,1} ∪ (k-2 fresh)`. Order is
    /// `n1+n2+(n1+n2-1)(k-2)`.
    pub fn double_hyperstar(n1: usize, n2: usize, k: usize) -> Result<Hypergraph> {
        if n1 < 2 || n2 < 2 || k < 3 {
            return Err(Error::InvalidParameter(format!(
                "double hyperstar needs n1,n2 >= 2 and k >= 3, got n1={n1}, n2={n2}, k={k}"
            )));
        }
        let order = n1 + n2 + (n1 + n2 - 1) * (k - 2);
        let mut edges = Vec::with_capacity(n1 + n2 - 1);
        let mut nextv = 2usize;
        for _ in 1..n1 {
            let e: Vec<usize> = std::iter::once(0).chain(nextv..nextv + k - 1).collect();
            nextv += k - 1;
            edges.push(e);
        }
        for _ in 1..n2 {
            let e: Vec<usize> = std::iter::once(1).chain(nextv..nextv + k - 1).collect();
            nextv += k - 1;
            edges.push(e);
        }
        let bridge: Vec<usize> = [0, 1].into_iter().chain(nextv..nextv + k - 2).collect();
        nextv += k - 2;
        edges.push(bridge);
        debug_assert_eq!(nextv, order);
        let mut h = Hypergraph::new(order, edges)?;
        h.family = Some(Family::DoubleHyperstar { n1, n2, k });
        Ok(h)
    }

    /// Sunflower: `k-1` petal edges plus one core edge, all of size `k`.
    ///
    /// Vertex 0 is the core `v_{0,0}`. Petal `i` (1-based) occupies a
    /// contiguous block starting at its anchor `v_{i,1}`; the core edge joins
    /// vertex 0 with every anchor. Order is `k(k-1)+1`.
    pub fn sunflower(k: usize) -> Result<Hypergraph> {
        if k < 2 {
            return Err(Error::InvalidParameter(format!(
                "sunflower needs k >= 2, got k={k}"
            )));
        }
        let order = k * (k - 1) + 1;
        let mut labels = vec![VertexLabel { i: 0, j: 0 }];
        let mut edges = Vec::with_capacity(k);
        let mut anchors = Vec::with_capacity(k - 1);
        let mut nextv = 1usize;
        for i in 1..k {
            let anchor = nextv;
            anchors.push(anchor);
            let e: Vec<usize> = (nextv..nextv + k).collect();
            for j in 1..=k {
                labels.push(VertexLabel { i, j });
            }
            nextv += k;
            edges.push(e);
        }
        let core: Vec<usize> = std::iter::once(0).chain(anchors).collect();
        edges.push(core);
        debug_assert_eq!(nextv, order);
        let mut h = Hypergraph::new(order, edges)?;
        h.labels = Some(labels);
        h.family = Some(Family::Sunflower { k });
        Ok(h)
    }

    /// Complete r-uniform hypergraph: every r-subset of `0..n` is an edge,
    /// in lexicographic order. (r, C(n-1,r-1))-regular.
    pub fn complete_uniform(n: usize, r: usize) -> Result<Hypergraph> {
        if r < 2 || r > n {
            return Err(Error::InvalidParameter(format!(
                "complete uniform needs 2 <= r <= n, got n={n}, r={r}"
            )));
        }
        let mut edges = Vec::new();
        let mut current: Vec<usize> = (0..r).collect();
        loop {
            edges.push(current.clone());
            // next lexicographic r-combination of 0..n
            let mut i = r;
            loop {
                if i == 0 {
                    let mut h = Hypergraph::new(n, edges)?;
                    h.family = Some(Family::Complete { n, r });
                    return Ok(h);
                }
                i -= 1;
                if current[i] != i + n - r {
                    break;
                }
            }
            current[i] += 1;
            for j in i + 1..r {
                current[j] = current[j - 1] + 1;
            }
        }
    }

    /// k-th power of a 2-uniform base graph: each base edge gains `k-2`
    /// fresh vertices. With `k = 2` the graph is unchanged. The hyperstar and
    /// double hyperstar generators agree with powers of the star and double
    /// star up to canonical relabeling.
    pub fn power(base_edges: &[(usize, usize)], base_n: usize, k: usize) -> Result<Hypergraph> {
        if k < 2 {
            return Err(Error::InvalidParameter(format!(
                "power needs k >= 2, got k={k}"
            )));
        }
        for (idx, &(a, b)) in base_edges.iter().enumerate() {
            if a >= base_n || b >= base_n {
                return Err(Error::VertexOutOfRange {
                    vertex: a.max(b),
                    edge: idx,
                    order: base_n,
                });
            }
            if a == b {
                return Err(Error::EdgeTooSmall { edge: idx, len: 1 });
            }
        }
        let order = base_n + base_edges.len() * (k - 2);
        let mut nextv = base_n;
        let mut edges = Vec::with_capacity(base_edges.len());
        for &(a, b) in base_edges {
            let e: Vec<usize> = [a, b].into_iter().chain(nextv..nextv + k - 2).collect();
            nextv += k - 2;
            edges.push(e);
        }
        debug_assert_eq!(nextv, order);
        Hypergraph::new(order, edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::adjacency_matrix;

    fn worked_example() -> Hypergraph {
        // 5 vertices, edges {v1,v2,v3}, {v2,v3,v4,v5}, {v1,v2,v4} in 0-based form
        Hypergraph::new(5, vec![vec![0, 1, 2], vec![1, 2, 3, 4], vec![0, 1, 3]]).unwrap()
    }

    #[test]
    fn validate_worked_example() {
        let r = worked_example().validate();
        assert_eq!(r.rank, 4);
        assert_eq!(r.corank, 3);
        assert_eq!(r.uniform_k, None);
        assert_eq!(r.regular_r, None);
        assert_eq!(r.degrees, vec![2, 3, 2, 2, 1]);
    }

    #[test]
    fn validate_single_edge() {
        let h = Hypergraph::new(2, vec![vec![0, 1]]).unwrap();
        let r = h.validate();
        assert_eq!(r.rank, 2);
        assert_eq!(r.corank, 2);
        assert_eq!(r.uniform_k, Some(2));
        assert_eq!(r.regular_r, Some(1));
    }

    #[test]
    fn validate_complete_4_3() {
        let h = Hypergraph::complete_uniform(4, 3).unwrap();
        let r = h.validate();
        assert_eq!(h.edges().len(), 4);
        assert_eq!(r.uniform_k, Some(3));
        // each vertex lies in C(3,2) = 3 of the 3-subsets
        assert_eq!(r.regular_r, Some(3));
    }

    #[test]
    fn new_rejects_bad_index() {
        let err = Hypergraph::new(4, vec![vec![0, 5]]).unwrap_err();
        match err {
            Error::VertexOutOfRange {
                vertex,
                edge,
                order,
            } => {
                assert_eq!((vertex, edge, order), (5, 0, 4));
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn new_rejects_small_edge() {
        assert!(Hypergraph::new(4, vec![vec![2]]).is_err());
        assert!(matches!(
            Hypergraph::new(4, vec![vec![2, 2]]),
            Err(Error::DuplicateVertexInEdge { vertex: 2, edge: 0 })
        ));
        assert!(matches!(
            Hypergraph::new(4, vec![vec![0, 1], vec![0, 1, 0]]),
            Err(Error::DuplicateVertexInEdge { vertex: 0, edge: 1 })
        ));
    }

    #[test]
    fn delete_vertex_matches_principal_submatrix() {
        let h = worked_example();
        let g = h.delete_vertex(4).unwrap();
        assert_eq!(g.edges(), &[vec![0, 1, 2], vec![1, 2, 3], vec![0, 1, 3]]);
        let a = adjacency_matrix(&h);
        let b = adjacency_matrix(&g);
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(a.get(i, j), b.get(i, j));
            }
        }
    }

    #[test]
    fn delete_only_vertex() {
        let h = Hypergraph::edgeless(1);
        let g = h.delete_vertex(0).unwrap();
        assert_eq!(g.order(), 0);
        assert!(g.edges().is_empty());
    }

    #[test]
    fn delete_leaf_of_hyperstar() {
        let h = Hypergraph::hyperstar(4, 3).unwrap();
        // vertex 1 is a degree-1 leaf of the first edge
        let g = h.delete_vertex(1).unwrap();
        let r = g.validate();
        assert_eq!(r.rank, 3);
        assert_eq!(r.corank, 2);
    }

    #[test]
    fn hyperstar_shapes() {
        let h = Hypergraph::hyperstar(4, 3).unwrap();
        assert_eq!(h.order(), 7);
        assert_eq!(h.edges().len(), 3);
        assert_eq!(h.validate().uniform_k, Some(3));
        assert_eq!(h.labels().unwrap()[0], VertexLabel { i: 0, j: 0 });

        // single edge of size k
        let h = Hypergraph::hyperstar(2, 5).unwrap();
        assert_eq!(h.edges(), &[vec![0, 1, 2, 3, 4]]);

        // k = 2 is the ordinary star
        let h = Hypergraph::hyperstar(5, 2).unwrap();
        assert_eq!(h.order(), 5);
        assert!(h.edges().iter().all(|e| e.len() == 2 && e[0] == 0));

        assert!(Hypergraph::hyperstar(1, 3).is_err());
        assert!(Hypergraph::hyperstar(3, 1).is_err());
    }

    #[test]
    fn double_hyperstar_shapes() {
        let h = Hypergraph::double_hyperstar(4, 5, 3).unwrap();
        assert_eq!(h.order(), 17);
        assert_eq!(h.edges().len(), 8);
        assert_eq!(h.validate().uniform_k, Some(3));

        let h = Hypergraph::double_hyperstar(2, 2, 3).unwrap();
        assert_eq!(h.order(), 7);
        assert_eq!(h.edges().len(), 3);

        let h = Hypergraph::double_hyperstar(3, 3, 3).unwrap();
        assert_eq!(h.order(), 11);
        assert_eq!(h.edges().len(), 5);
        let deg = h.validate().degrees;
        assert_eq!(deg[0], 3);
        assert_eq!(deg[1], 3);

        assert!(Hypergraph::double_hyperstar(1, 2, 3).is_err());
        assert!(Hypergraph::double_hyperstar(2, 2, 2).is_err());
    }

    #[test]
    fn sunflower_shapes() {
        let h = Hypergraph::sunflower(4).unwrap();
        assert_eq!(h.order(), 13);
        assert_eq!(h.edges().len(), 4);
        assert_eq!(h.validate().uniform_k, Some(4));

        let h = Hypergraph::sunflower(2).unwrap();
        assert_eq!(h.order(), 3);
        assert_eq!(h.edges().len(), 2);
        assert!(h.edges().iter().all(|e| e.len() == 2));

        let h = Hypergraph::sunflower(3).unwrap();
        let deg = h.validate().degrees;
        assert_eq!(deg[0], 1); // core vertex
        assert_eq!(deg[1], 2); // petal anchor
        assert_eq!(deg[2], 1); // outer vertex

        assert!(Hypergraph::sunflower(1).is_err());
    }

    #[test]
    fn complete_uniform_shapes() {
        let h = Hypergraph::complete_uniform(4, 3).unwrap();
        assert_eq!(h.edges().len(), 4);
        assert!(h.validate().degrees.iter().all(|&d| d == 3));

        let h = Hypergraph::complete_uniform(5, 5).unwrap();
        assert_eq!(h.edges(), &[vec![0, 1, 2, 3, 4]]);

        let h = Hypergraph::complete_uniform(3, 2).unwrap();
        assert_eq!(h.edges(), &[vec![0, 1], vec![0, 2], vec![1, 2]]);

        assert!(Hypergraph::complete_uniform(3, 4).is_err());
        assert!(Hypergraph::complete_uniform(3, 1).is_err());
    }

    #[test]
    fn power_of_star_is_hyperstar() {
        let star: Vec<(usize, usize)> = vec![(0, 1), (0, 2), (0, 3)];
        let p = Hypergraph::power(&star, 4, 3).unwrap();
        let h = Hypergraph::hyperstar(4, 3).unwrap();
        assert_eq!(p.canonical_form(), h.canonical_form());
    }

    #[test]
    fn power_k2_is_identity() {
        let edges: Vec<(usize, usize)> = vec![(0, 1), (1, 2), (0, 3)];
        let p = Hypergraph::power(&edges, 4, 2).unwrap();
        assert_eq!(p.order(), 4);
        assert_eq!(p.edges(), &[vec![0, 1], vec![1, 2], vec![0, 3]]);
    }

    #[test]
    fn power_of_double_star_is_double_hyperstar() {
        // P_4 viewed as double star S_{2,2}: centers 0,1, leaves 2,3
        let base: Vec<(usize, usize)> = vec![(0, 2), (1, 3), (0, 1)];
        let p = Hypergraph::power(&base, 4, 3).unwrap();
        let h = Hypergraph::double_hyperstar(2, 2, 3).unwrap();
        assert_eq!(p.canonical_form(), h.canonical_form());
    }

    #[test]
    fn power_rejects_bad_pairs() {
        assert!(Hypergraph::power(&[(0, 4)], 4, 3).is_err());
        assert!(Hypergraph::power(&[(1, 1)], 4, 3).is_err());
    }

    #[test]
    fn generator_orders_match_family() {
        for n in 2..7 {
            for k in 2..6 {
                let h = Hypergraph::hyperstar(n, k).unwrap();
                assert_eq!(h.order(), h.family().unwrap().order());
                assert_eq!(h.validate().uniform_k, Some(k));
            }
        }
        for k in 2..7 {
            let h = Hypergraph::sunflower(k).unwrap();
            assert_eq!(h.order(), h.family().unwrap().order());
        }
        for n1 in 2..5 {
            for n2 in 2..5 {
                for k in 3..6 {
                    let h = Hypergraph::double_hyperstar(n1, n2, k).unwrap();
                    assert_eq!(h.order(), h.family().unwrap().order());
                }
            }
        }
    }
}
