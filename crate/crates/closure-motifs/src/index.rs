//! Induced-path enumeration, the common-neighborhood index for nonadjacent
//! vertex pairs, and closure computation.
//!
//! The sweep at the heart of this module visits, for every edge `uv`, each
//! vertex of `N(u) ∪ N(v)` once via a sorted merge. A merged element lies in
//! both lists for a triangle and in exactly one for an induced path on three
//! vertices, so the total work is `O(m + #P3 + #K3)`.

use crate::graph::Graph;
use crate::pattern::{Occurrence, PatternId};
use crate::steps::StepCounter;
use crate::Visit;

/// Closure value of a graph: the smallest `c` such that every nonadjacent
/// vertex pair has fewer than `c` common neighbors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureReport {
    pub c: usize,
    /// A nonadjacent pair attaining `c - 1` common neighbors; present
    /// exactly when `c > 1`.
    pub witness_pair: Option<(usize, usize)>,
}

/// Core sweep shared by the path enumerator, the index builder, and the
/// dense triangle detector. For every edge and every merged neighbor it
/// reports either a path (`on_path(endpoint_on_edge, midpoint, far_end)`,
/// called exactly once per path, from the edge whose free endpoint is the
/// larger path endpoint) or a triangle (`on_triangle`, called once per edge
/// of the triangle).
pub(crate) fn path_sweep(
    g: &Graph,
    steps: &mut StepCounter,
    on_path: &mut dyn FnMut(usize, usize, usize) -> Visit,
    on_triangle: &mut dyn FnMut(usize, usize, usize) -> Visit,
) -> Visit {
    for (u, v) in g.edges() {
        let (nu, nv) = (g.neighbors(u), g.neighbors(v));
        let (mut i, mut j) = (0, 0);
        loop {
            let flow = match (nu.get(i).copied(), nv.get(j).copied()) {
                (None, None) => break,
                (Some(a), None) => {
                    i += 1;
                    steps.neighbor_scans += 1;
                    // a adjacent to u only: path v - u - a.
                    if a != v && v < a {
                        on_path(v, u, a)
                    } else {
                        Visit::Continue(())
                    }
                }
                (None, Some(b)) => {
                    j += 1;
                    steps.neighbor_scans += 1;
                    if b != u && u < b {
                        on_path(u, v, b)
                    } else {
                        Visit::Continue(())
                    }
                }
                (Some(a), Some(b)) => {
                    steps.neighbor_scans += 1;
                    match a.cmp(&b) {
                        std::cmp::Ordering::Less => {
                            i += 1;
                            if a != v && v < a {
                                on_path(v, u, a)
                            } else {
                                Visit::Continue(())
                            }
                        }
                        std::cmp::Ordering::Greater => {
                            j += 1;
                            if b != u && u < b {
                                on_path(u, v, b)
                            } else {
                                Visit::Continue(())
                            }
                        }
                        std::cmp::Ordering::Equal => {
                            i += 1;
                            j += 1;
                            on_triangle(u, v, a)
                        }
                    }
                }
            };
            if flow.is_break() {
                return flow;
            }
        }
    }
    Visit::Continue(())
}

/// Enumerates every induced path on three vertices exactly once, streaming
/// canonical occurrences. Triangles encountered by the sweep are skipped
/// here; listing them is a separate operation.
pub fn enumerate_p3(
    g: &Graph,
    steps: &mut StepCounter,
    visitor: &mut dyn FnMut(&Occurrence) -> Visit,
) -> u64 {
    let mut count = 0;
    let mut occ = Occurrence {
        pattern: PatternId::P3,
        vertices: vec![0; 3],
    };
    let _ = path_sweep(
        g,
        steps,
        &mut |near, mid, far| {
            occ.vertices.clear();
            occ.vertices.extend([near, mid, far]);
            occ.vertices.sort_unstable();
            count += 1;
            visitor(&occ)
        },
        &mut |_, _, _| Visit::Continue(()),
    );
    count
}

/// For every nonadjacent pair with at least one common neighbor, the
/// ascending list of common neighbors. Total stored entries equal the number
/// of induced paths on three vertices, and every list is shorter than the
/// closure value.
#[derive(Debug, Clone)]
pub struct CommonNeighborIndex {
    /// Nonadjacent endpoint pairs (min, max), lexicographically sorted.
    keys: Vec<(usize, usize)>,
    /// `offsets[r]..offsets[r + 1]` delimits the run of `keys[r]`.
    offsets: Vec<usize>,
    /// Common neighbors, ascending within each run.
    middles: Vec<usize>,
}

impl CommonNeighborIndex {
    /// Builds the index by grouping the path sweep's output per endpoint
    /// pair with three stable counting sorts (by midpoint, then larger, then
    /// smaller endpoint), which is linear in the number of paths.
    pub fn build(g: &Graph, steps: &mut StepCounter) -> Self {
        let mut triples: Vec<(usize, usize, usize)> = Vec::new();
        let _ = path_sweep(
            g,
            steps,
            &mut |near, mid, far| {
                let (a, b) = if near < far { (near, far) } else { (far, near) };
                triples.push((a, b, mid));
                Visit::Continue(())
            },
            &mut |_, _, _| Visit::Continue(()),
        );
        let n = g.vertex_count();
        for key in [2, 1, 0] {
            triples = counting_sort_by(triples, n, key, steps);
        }
        let mut keys = Vec::new();
        let mut offsets = vec![0];
        let mut middles = Vec::with_capacity(triples.len());
        for (a, b, mid) in triples {
            if keys.last() != Some(&(a, b)) {
                keys.push((a, b));
                offsets.push(middles.len());
            }
            middles.push(mid);
            *offsets.last_mut().unwrap() = middles.len();
        }
        Self {
            keys,
            offsets,
            middles,
        }
    }

    /// Common neighbors of the nonadjacent pair `{u, v}`; empty when the
    /// pair has none (or is adjacent).
    pub fn common_list(&self, u: usize, v: usize) -> &[usize] {
        let key = (u.min(v), u.max(v));
        match self.keys.binary_search(&key) {
            Ok(r) => &self.middles[self.offsets[r]..self.offsets[r + 1]],
            Err(_) => &[],
        }
    }

    /// Number of stored (pair, common neighbor) entries; equals the number
    /// of induced paths on three vertices.
    pub fn entry_count(&self) -> usize {
        self.middles.len()
    }

    /// Nonadjacent pairs with at least one common neighbor, with their
    /// lists.
    pub fn pairs(&self) -> impl Iterator<Item = ((usize, usize), &[usize])> + '_ {
        self.keys
            .iter()
            .enumerate()
            .map(move |(r, &k)| (k, &self.middles[self.offsets[r]..self.offsets[r + 1]]))
    }

    pub fn closure_report(&self) -> ClosureReport {
        let mut best = 0;
        let mut witness = None;
        for (r, &key) in self.keys.iter().enumerate() {
            let len = self.offsets[r + 1] - self.offsets[r];
            if len > best {
                best = len;
                witness = Some(key);
            }
        }
        ClosureReport {
            c: best + 1,
            witness_pair: witness,
        }
    }
}

fn counting_sort_by(
    triples: Vec<(usize, usize, usize)>,
    n: usize,
    key: usize,
    steps: &mut StepCounter,
) -> Vec<(usize, usize, usize)> {
    let mut buckets = vec![0usize; n + 1];
    let field = |t: &(usize, usize, usize)| match key {
        0 => t.0,
        1 => t.1,
        _ => t.2,
    };
    for t in &triples {
        buckets[field(t) + 1] += 1;
    }
    for i in 1..buckets.len() {
        buckets[i] += buckets[i - 1];
    }
    let mut out = vec![(0, 0, 0); triples.len()];
    for t in triples {
        steps.index_touches += 1;
        let slot = &mut buckets[field(&t)];
        out[*slot] = t;
        *slot += 1;
    }
    out
}

/// Closure via path enumeration: one more than the longest common-neighbor
/// list over nonadjacent pairs.
pub fn compute_closure(g: &Graph, steps: &mut StepCounter) -> ClosureReport {
    CommonNeighborIndex::build(g, steps).closure_report()
}

/// Oracle for [`compute_closure`]: probe every vertex pair directly.
pub fn compute_closure_naive(g: &Graph, steps: &mut StepCounter) -> ClosureReport {
    let n = g.vertex_count();
    let mut best = 0;
    let mut witness = None;
    for u in 0..n {
        for v in u + 1..n {
            steps.edge_probes += 1;
            if g.has_edge(u, v) {
                continue;
            }
            steps.neighbor_scans += (g.degree(u) + g.degree(v)) as u64;
            let shared = g.common_neighbors(u, v).len();
            if shared > best {
                best = shared;
                witness = Some((u, v));
            }
        }
    }
    ClosureReport {
        c: best + 1,
        witness_pair: witness,
    }
}
