//! Graph family constructors used for tests, lower-bound experiments, and
//! benchmarks: pattern blow-ups, a handful of extremal families, seeded
//! random graphs, and the doubled point/line incidence graph of a projective
//! plane over a prime field.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pattern::PatternInfo;

/// A named family instance, as accepted by the CLI `generate` command.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FamilySpec {
    /// Star `K_{1,t}` with center 0.
    Star { t: usize },
    /// Two adjacent centers (0 and 1), each with `t` private leaves.
    DoubleStar { t: usize },
    /// Clique `K_k` on `0..k` with `t` degree-one vertices attached to
    /// vertex 0.
    CliquePendants { k: usize, t: usize },
    /// `K_{2,n-2}` with the two high-degree vertices (0 and 1) made adjacent.
    K2BipartitePlusEdge { n: usize },
    /// Disjoint union of an independent set on `n/2` vertices and a star
    /// `K_{1,n/2-1}`.
    IsPlusStar { n: usize },
    /// Seeded Erdős–Rényi random graph.
    Gnp { n: usize, p: f64, seed: u64 },
}

pub fn gen_family(spec: FamilySpec) -> Result<Graph> {
    match spec {
        FamilySpec::Star { t } => star(t),
        FamilySpec::DoubleStar { t } => double_star(t),
        FamilySpec::CliquePendants { k, t } => clique_pendants(k, t),
        FamilySpec::K2BipartitePlusEdge { n } => k2_bipartite_plus_edge(n),
        FamilySpec::IsPlusStar { n } => is_plus_star(n),
        FamilySpec::Gnp { n, p, seed } => {
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::InvalidParameter(format!(
                    "edge probability {p} outside [0, 1]"
                )));
            }
            Ok(gnp(n, p, seed))
        }
    }
}

pub fn star(t: usize) -> Result<Graph> {
    if t == 0 {
        return Err(Error::InvalidParameter("star needs at least one leaf".into()));
    }
    Graph::from_edges(t + 1, (1..=t).map(|v| (0, v)))
}

pub fn double_star(t: usize) -> Result<Graph> {
    if t == 0 {
        return Err(Error::InvalidParameter(
            "double star needs at least one leaf per center".into(),
        ));
    }
    let n = 2 + 2 * t;
    let mut edges = vec![(0, 1)];
    edges.extend((2..2 + t).map(|v| (0, v)));
    edges.extend((2 + t..n).map(|v| (1, v)));
    Graph::from_edges(n, edges)
}

pub fn clique_pendants(k: usize, t: usize) -> Result<Graph> {
    if k < 2 {
        return Err(Error::InvalidParameter(
            "clique-pendants needs a clique of order >= 2".into(),
        ));
    }
    let n = k + t;
    let mut edges = Vec::new();
    for u in 0..k {
        for v in u + 1..k {
            edges.push((u, v));
        }
    }
    edges.extend((k..n).map(|v| (0, v)));
    Graph::from_edges(n, edges)
}

pub fn k2_bipartite_plus_edge(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(
            "K_{2,n-2} plus edge needs n >= 3".into(),
        ));
    }
    let mut edges = vec![(0, 1)];
    for v in 2..n {
        edges.push((0, v));
        edges.push((1, v));
    }
    Graph::from_edges(n, edges)
}

pub fn is_plus_star(n: usize) -> Result<Graph> {
    if n < 4 || n % 2 != 0 {
        return Err(Error::InvalidParameter(
            "independent-set-plus-star needs even n >= 4".into(),
        ));
    }
    // Vertices 0..n/2 independent; n/2 is the star center with the rest as
    // leaves.
    let center = n / 2;
    Graph::from_edges(n, (center + 1..n).map(|v| (center, v)))
}

/// Replaces each pattern vertex by a clique of `n / order` vertices and each
/// pattern edge by a complete join between the corresponding cliques. The
/// result is 1-closed whenever the pattern is a cluster graph.
pub fn blowup(h: &PatternInfo, n: usize) -> Result<Graph> {
    let k = h.order;
    if n == 0 || n % k != 0 {
        return Err(Error::IndivisibleBlowup { n, order: k });
    }
    let b = n / k;
    let vertex = |block: usize, slot: usize| block * b + slot;
    let mut edges = Vec::new();
    for block in 0..k {
        for a in 0..b {
            for c in a + 1..b {
                edges.push((vertex(block, a), vertex(block, c)));
            }
        }
    }
    for &(i, j) in h.edges {
        for a in 0..b {
            for c in 0..b {
                edges.push((vertex(i, a), vertex(j, c)));
            }
        }
    }
    Graph::from_edges(n, edges)
}

/// Seeded Erdős–Rényi graph over an explicitly specified splitmix64 stream,
/// so identical seeds reproduce identical graphs on every platform. Pairs
/// are visited in lexicographic order, consuming one draw each.
pub fn gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut state = seed;
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if next_f64(&mut state) < p {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("generated pairs are in range")
}

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e3779b97f4a7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

fn next_f64(state: &mut u64) -> f64 {
    (splitmix64(state) >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Doubled point/line incidence graph of the projective plane over the prime
/// field of order `p`: two adjacent vertices per point, two per line, and a
/// complete join between a point pair and a line pair when point and line
/// are incident. The result has `4(p^2+p+1)` vertices and is 3-closed.
pub fn projective(p: usize) -> Result<Graph> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let points = plane_points(p);
    let n_prime = points.len();
    debug_assert_eq!(n_prime, p * p + p + 1);
    // Vertices: 2i, 2i+1 for point i; 2n' + 2j, 2n' + 2j + 1 for line j.
    // Lines use the same coordinate triples; incidence is a zero dot product.
    let n = 4 * n_prime;
    let point_vertex = |i: usize, side: usize| 2 * i + side;
    let line_vertex = |j: usize, side: usize| 2 * n_prime + 2 * j + side;
    let mut edges = Vec::new();
    for i in 0..n_prime {
        edges.push((point_vertex(i, 0), point_vertex(i, 1)));
        edges.push((line_vertex(i, 0), line_vertex(i, 1)));
    }
    for (i, pt) in points.iter().enumerate() {
        for (j, ln) in points.iter().enumerate() {
            if dot(pt, ln, p) == 0 {
                for a in 0..2 {
                    for b in 0..2 {
                        edges.push((point_vertex(i, a), line_vertex(j, b)));
                    }
                }
            }
        }
    }
    Graph::from_edges(n, edges)
}

/// Canonical representatives of the projective points over GF(p): triples
/// whose first nonzero coordinate is 1.
fn plane_points(p: usize) -> Vec<[usize; 3]> {
    let mut points = Vec::with_capacity(p * p + p + 1);
    for y in 0..p {
        for z in 0..p {
            points.push([1, y, z]);
        }
    }
    for z in 0..p {
        points.push([0, 1, z]);
    }
    points.push([0, 0, 1]);
    points
}

fn dot(a: &[usize; 3], b: &[usize; 3], p: usize) -> usize {
    (a[0] * b[0] + a[1] * b[1] + a[2] * b[2]) % p
}

fn is_prime(p: usize) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::PatternId;

    #[test]
    fn star_shape() {
        let g = star(4).unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.degree(0), 4);
        assert!(star(0).is_err());
    }

    #[test]
    fn double_star_shape() {
        let g = double_star(3).unwrap();
        assert_eq!(g.vertex_count(), 8);
        assert_eq!(g.degree(0), 4);
        assert_eq!(g.degree(1), 4);
        assert_eq!(g.edge_count(), 7);
    }

    #[test]
    fn clique_pendants_shape() {
        let g = clique_pendants(4, 2).unwrap();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.degree(0), 5);
        assert_eq!(g.edge_count(), 8);
    }

    #[test]
    fn is_plus_star_shape() {
        let g = is_plus_star(8).unwrap();
        assert_eq!(g.vertex_count(), 8);
        assert_eq!(g.degree(4), 3);
        assert_eq!(g.edge_count(), 3);
        assert!(is_plus_star(7).is_err());
    }

    #[test]
    fn blowup_cosquare_is_two_k4() {
        let g = blowup(PatternId::CoSquare.info(), 8).unwrap();
        assert_eq!(g.vertex_count(), 8);
        assert_eq!(g.edge_count(), 12);
        let comps = g.components();
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.len() == 4 && g.is_clique(c)));
        // One edge from each component, 6 x 6 by the oracle.
        let census = crate::enumerate::subset_census(&g, 60).unwrap();
        assert_eq!(census.count(PatternId::CoSquare), 36);
    }

    #[test]
    fn blowup_empty3_counts() {
        // Three disjoint K2s; an independent triple takes one vertex per
        // block.
        let g = blowup(PatternId::Empty3.info(), 6).unwrap();
        let census = crate::enumerate::subset_census(&g, 60).unwrap();
        assert_eq!(census.count(PatternId::Empty3), 8);
    }

    #[test]
    fn k2_bipartite_plus_edge_closure() {
        for n in 4..=10 {
            let g = k2_bipartite_plus_edge(n).unwrap();
            let report =
                crate::index::compute_closure(&g, &mut crate::steps::StepCounter::new());
            assert_eq!(report.c, 3, "n = {n}");
        }
    }

    #[test]
    fn blowup_rejects_indivisible() {
        assert!(blowup(PatternId::K3.info(), 8).is_err());
    }

    #[test]
    fn gnp_is_deterministic() {
        let a = gnp(20, 0.3, 42);
        let b = gnp(20, 0.3, 42);
        assert_eq!(a, b);
        let c = gnp(20, 0.3, 43);
        assert_ne!(a, c);
    }

    #[test]
    fn projective_fano_counts() {
        let g = projective(2).unwrap();
        assert_eq!(g.vertex_count(), 28);
        assert_eq!(g.edge_count(), 98);
        let g = projective(3).unwrap();
        assert_eq!(g.vertex_count(), 52);
        assert_eq!(g.edge_count(), 234);
        assert!(projective(4).is_err());
        assert!(projective(1).is_err());
    }

    #[test]
    fn projective_plane_axioms() {
        for p in [2usize, 3] {
            let points = plane_points(p);
            // Every pair of distinct points lies on exactly one common line.
            for (i, a) in points.iter().enumerate() {
                for b in points.iter().skip(i + 1) {
                    let common = points
                        .iter()
                        .filter(|l| dot(a, l, p) == 0 && dot(b, l, p) == 0)
                        .count();
                    assert_eq!(common, 1);
                }
                // Each point is incident with exactly p + 1 lines.
                let inc = points.iter().filter(|l| dot(a, l, p) == 0).count();
                assert_eq!(inc, p + 1);
            }
        }
    }

    #[test]
    fn projective_point_doublings_share_two_neighbors() {
        let g = projective(2).unwrap();
        let n_prime = 7;
        for i in 0..n_prime {
            for j in i + 1..n_prime {
                for a in 0..2 {
                    for b in 0..2 {
                        let (u, v) = (2 * i + a, 2 * j + b);
                        assert!(!g.has_edge(u, v));
                        assert_eq!(g.common_neighbors(u, v).len(), 2);
                    }
                }
            }
        }
    }
}
