//! Diamond detection: the neighborhood characterization baseline, the
//! independent-set-or-path neighborhood routine, and the gem-free detector
//! built on it.

use super::{find_p3, probe, DetectionResult};
use crate::graph::Graph;
use crate::index::compute_closure;
use crate::steps::StepCounter;

/// Baseline via the neighborhood characterization: a graph is diamond-free
/// iff every vertex neighborhood induces a cluster graph. The witness is the
/// vertex plus the induced path found inside its neighborhood.
pub fn diamond_baseline(g: &Graph, steps: &mut StepCounter) -> DetectionResult {
    for v in 0..g.vertex_count() {
        if g.degree(v) < 3 {
            continue;
        }
        let (sub, map) = g.induced(g.neighbors(v));
        if let Some((a, mid, b)) = find_p3(&sub, steps) {
            return DetectionResult::hit(vec![v, map[a], map[mid], map[b]]);
        }
    }
    DetectionResult::none()
}

/// What the scan of one vertex's neighborhood produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NeighborhoodStructure {
    /// A maximal independent set inside the neighborhood whose members have
    /// pairwise disjoint co-neighborhoods there (no two share a common
    /// neighbor inside the scanned neighborhood).
    IndependentSet(Vec<usize>),
    /// An induced path inside the neighborhood: `middle` adjacent to both
    /// ends, which are nonadjacent.
    Path {
        ends: (usize, usize),
        middle: usize,
    },
}

/// Grows an independent set `I` inside `N(v)` greedily (lowest id first),
/// discarding the closed neighborhood of each pick from the pool. A scanned
/// neighbor that is inside `N(v)` but already discarded is adjacent to an
/// earlier pick, giving an induced path. Works directly on the adjacency
/// lists of `g`; the neighborhood subgraph is never materialized.
pub fn neighborhood_independent_or_p3(
    g: &Graph,
    v: usize,
    steps: &mut StepCounter,
) -> NeighborhoodStructure {
    let n = g.vertex_count();
    let mut in_nv = vec![false; n];
    let mut in_pool = vec![false; n];
    for &u in g.neighbors(v) {
        in_nv[u] = true;
        in_pool[u] = true;
    }
    let mut removed_by = vec![usize::MAX; n];
    let mut set = Vec::new();
    for &u in g.neighbors(v) {
        if !in_pool[u] {
            continue;
        }
        in_pool[u] = false;
        set.push(u);
        for &w in g.neighbors(u) {
            steps.neighbor_scans += 1;
            if !in_nv[w] {
                continue;
            }
            if in_pool[w] {
                in_pool[w] = false;
                removed_by[w] = u;
            } else {
                // w was discarded by an earlier pick, which is nonadjacent
                // to u: path (earlier, w, u) inside N(v).
                let earlier = removed_by[w];
                debug_assert_ne!(earlier, usize::MAX, "picks never reappear as neighbors");
                return NeighborhoodStructure::Path {
                    ends: (earlier, u),
                    middle: w,
                };
            }
        }
    }
    NeighborhoodStructure::IndependentSet(set)
}

/// Diamond detection for gem-free graphs. Per vertex: the neighborhood scan
/// either yields a path (immediate diamond) or an independent set whose
/// shared-neighbor blocks partition the neighborhood; gem-freeness rules out
/// edges between blocks, so only each block's cliqueness is left to check.
/// Blocks larger than the closure value are verified against a seed of
/// exactly `c` members — full adjacency to a clique of that size certifies
/// cliqueness by the closure bound.
///
/// The precondition is not checked here; on a graph with a gem the result
/// may be a false negative, though any returned witness is still a diamond.
/// Callers can validate with [`super::gem`].
pub fn diamond_gem_free(g: &Graph, steps: &mut StepCounter) -> DetectionResult {
    let mut setup = StepCounter::new();
    let c = compute_closure(g, &mut setup).c;
    steps.charge_setup(&setup);
    for v in 0..g.vertex_count() {
        if g.degree(v) < 3 {
            continue;
        }
        let set = match neighborhood_independent_or_p3(g, v, steps) {
            NeighborhoodStructure::Path { ends, middle } => {
                return DetectionResult::hit(vec![v, ends.0, middle, ends.1]);
            }
            NeighborhoodStructure::IndependentSet(set) => set,
        };
        for &u in &set {
            let block = g.common_neighbors(u, v);
            steps.neighbor_scans += (g.degree(u) + g.degree(v)) as u64;
            if block.len() <= c {
                for (i, &w) in block.iter().enumerate() {
                    for &x in &block[i + 1..] {
                        if !probe(g, steps, w, x) {
                            return DetectionResult::hit(vec![v, u, w, x]);
                        }
                    }
                }
            } else {
                let seed = &block[..c];
                for (i, &w) in seed.iter().enumerate() {
                    for &x in &seed[i + 1..] {
                        if !probe(g, steps, w, x) {
                            return DetectionResult::hit(vec![v, u, w, x]);
                        }
                    }
                }
                for &x in &block[c..] {
                    for &w in seed {
                        if !probe(g, steps, w, x) {
                            return DetectionResult::hit(vec![v, u, w, x]);
                        }
                    }
                }
                // Every member beyond the seed is fully adjacent to the
                // seed clique of size c, so the whole block is a clique.
            }
        }
    }
    DetectionResult::none()
}
