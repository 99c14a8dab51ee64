//! One detection operation per catalog pattern. Every detector returns a
//! witness (the vertices of a found occurrence, ascending) or a clean
//! absence, optionally with a structural certificate.

mod co_diamond;
mod co_square;
mod diamond;
mod four;
mod three;

pub use co_diamond::co_diamond;
pub use co_square::co_square;
pub use diamond::{
    diamond_baseline, diamond_gem_free, neighborhood_independent_or_p3, NeighborhoodStructure,
};
pub use four::{claw, co_claw, co_paw, gem, p4, paw, square};
pub use three::{co_p3, independent_set, star, triangle_dense, triangle_sparse, clique};

use crate::graph::Graph;
use crate::steps::StepCounter;

/// Symbolic reason for a certified absence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// The vertex set splits into two cliques, which excludes a co-diamond
    /// (it needs three pairwise nonadjacent vertices).
    TwoCliquePartition {
        first: Vec<usize>,
        second: Vec<usize>,
    },
}

/// Outcome of a detection: a witness vertex tuple (ascending) when the
/// pattern is present, otherwise nothing, possibly with a certificate
/// explaining the absence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DetectionResult {
    pub witness: Option<Vec<usize>>,
    pub certificate: Option<Certificate>,
}

impl DetectionResult {
    pub fn found(&self) -> bool {
        self.witness.is_some()
    }

    pub(crate) fn hit(mut vertices: Vec<usize>) -> Self {
        vertices.sort_unstable();
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        Self {
            witness: Some(vertices),
            certificate: None,
        }
    }

    pub(crate) fn none() -> Self {
        Self {
            witness: None,
            certificate: None,
        }
    }

    pub(crate) fn certified(certificate: Certificate) -> Self {
        Self {
            witness: None,
            certificate: Some(certificate),
        }
    }
}

/// Counted adjacency probe.
pub(crate) fn probe(g: &Graph, steps: &mut StepCounter, u: usize, v: usize) -> bool {
    steps.edge_probes += 1;
    g.has_edge(u, v)
}

/// Linear-time detection of an induced path on three vertices.
pub fn p3_linear(g: &Graph, steps: &mut StepCounter) -> DetectionResult {
    match find_p3(g, steps) {
        Some((a, mid, b)) => DetectionResult::hit(vec![a, mid, b]),
        None => DetectionResult::none(),
    }
}

/// An induced path on three vertices, `(end, middle, end)`, or `None` if the
/// graph is a cluster graph. Linear time: a connected component contains
/// such a path iff it is not a clique, and then a breadth-first search from
/// a non-universal vertex of the component reaches depth two.
pub(crate) fn find_p3(g: &Graph, steps: &mut StepCounter) -> Option<(usize, usize, usize)> {
    for comp in g.components() {
        let internal: usize = comp.iter().map(|&v| g.degree(v)).sum();
        steps.neighbor_scans += comp.len() as u64;
        if internal / 2 == comp.len() * (comp.len() - 1) / 2 {
            continue; // clique component
        }
        let start = *comp
            .iter()
            .find(|&&v| g.degree(v) < comp.len() - 1)
            .expect("a non-clique component has a non-universal vertex");
        let mut dist = vec![usize::MAX; g.vertex_count()];
        let mut parent = vec![usize::MAX; g.vertex_count()];
        let mut queue = std::collections::VecDeque::from([start]);
        dist[start] = 0;
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                steps.neighbor_scans += 1;
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    if dist[w] == 2 {
                        return Some((start, parent[w], w));
                    }
                    queue.push_back(w);
                }
            }
        }
        unreachable!("non-clique connected component has a vertex at depth two");
    }
    None
}

/// First independent set of size `k` within `candidates` (vertices of `g`),
/// by branching on a vertex of minimum degree inside the candidate set:
/// either it joins the set (recurse on its non-neighborhood) or it does not
/// (recurse without it). A candidate with no candidate neighbors always
/// joins. Lowest vertex id breaks ties, so results are deterministic.
pub(crate) fn independent_in(
    g: &Graph,
    steps: &mut StepCounter,
    candidates: &[usize],
    k: usize,
) -> Option<Vec<usize>> {
    if k == 0 {
        return Some(Vec::new());
    }
    if candidates.len() < k {
        return None;
    }
    let mut in_set = vec![false; g.vertex_count()];
    for &v in candidates {
        in_set[v] = true;
    }
    let mut pick = usize::MAX;
    let mut pick_deg = usize::MAX;
    for &v in candidates {
        let deg = g
            .neighbors(v)
            .iter()
            .filter(|&&w| in_set[w])
            .count();
        steps.neighbor_scans += g.degree(v) as u64;
        if deg < pick_deg {
            pick = v;
            pick_deg = deg;
            if deg == 0 {
                break;
            }
        }
    }
    if pick_deg == 0 {
        // Isolated within the candidates: always safe to take.
        let rest: Vec<usize> = candidates.iter().copied().filter(|&v| v != pick).collect();
        return independent_in(g, steps, &rest, k - 1).map(|mut set| {
            set.push(pick);
            set.sort_unstable();
            set
        });
    }
    // Branch 1: pick joins the set.
    let mut excluded = vec![false; g.vertex_count()];
    excluded[pick] = true;
    for &w in g.neighbors(pick) {
        excluded[w] = true;
    }
    let rest: Vec<usize> = candidates
        .iter()
        .copied()
        .filter(|&v| !excluded[v])
        .collect();
    if let Some(mut set) = independent_in(g, steps, &rest, k - 1) {
        set.push(pick);
        set.sort_unstable();
        return Some(set);
    }
    // Branch 2: pick stays out.
    let rest: Vec<usize> = candidates.iter().copied().filter(|&v| v != pick).collect();
    independent_in(g, steps, &rest, k)
}

/// First (lexicographic) independent set of size `k` within `candidates` by
/// plain combination search; used where the candidate set is already small.
pub(crate) fn exhaustive_independent_in(
    g: &Graph,
    steps: &mut StepCounter,
    candidates: &[usize],
    k: usize,
) -> Option<Vec<usize>> {
    fn search(
        g: &Graph,
        steps: &mut StepCounter,
        candidates: &[usize],
        start: usize,
        chosen: &mut Vec<usize>,
        k: usize,
    ) -> bool {
        if chosen.len() == k {
            return true;
        }
        for i in start..candidates.len() {
            let v = candidates[i];
            if chosen.iter().all(|&u| !probe(g, steps, u, v)) {
                chosen.push(v);
                if search(g, steps, candidates, i + 1, chosen, k) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    let mut chosen = Vec::with_capacity(k);
    search(g, steps, candidates, 0, &mut chosen, k).then_some(chosen)
}

/// A nonadjacent pair within `verts`, or `None` when they induce a clique.
/// Linear in the candidate degrees: the first member missing a neighbor
/// inside the set exposes the pair.
pub(crate) fn nonadjacent_pair_in(
    g: &Graph,
    steps: &mut StepCounter,
    verts: &[usize],
) -> Option<(usize, usize)> {
    let mut inside = vec![false; g.vertex_count()];
    for &v in verts {
        inside[v] = true;
    }
    for &v in verts {
        let mut within = 0;
        for &w in g.neighbors(v) {
            steps.neighbor_scans += 1;
            if inside[w] {
                within += 1;
            }
        }
        if within + 1 < verts.len() {
            let mut adjacent = vec![false; g.vertex_count()];
            for &w in g.neighbors(v) {
                adjacent[w] = true;
            }
            let partner = verts
                .iter()
                .copied()
                .find(|&u| u != v && !adjacent[u])
                .expect("a vertex with a missing inside neighbor has a non-neighbor");
            return Some((v.min(partner), v.max(partner)));
        }
    }
    None
}

/// Calls `f` on every ascending `k`-subset of `0..n` until it breaks.
pub(crate) fn for_each_combination(
    n: usize,
    k: usize,
    f: &mut dyn FnMut(&[usize]) -> crate::Visit,
) -> crate::Visit {
    if k > n {
        return crate::Visit::Continue(());
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if f(&idx).is_break() {
            return crate::Visit::Break(());
        }
        let mut i = k;
        loop {
            if i == 0 {
                return crate::Visit::Continue(());
            }
            i -= 1;
            if idx[i] != i + n - k {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}
