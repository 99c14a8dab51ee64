//! Triangle and edge-plus-isolated-vertex enumeration.

use super::Emitter;
use crate::graph::Graph;
use crate::pattern::{Occurrence, PatternId};
use crate::steps::StepCounter;
use crate::Visit;

/// Lists every triangle once via degree ordering: each edge is oriented
/// toward the endpoint of higher (degree, id) rank, and triangles are read
/// off the sorted intersections of out-neighborhoods. Out-degrees stay in
/// `O(sqrt(m))`, giving `O(m^(3/2))` steps overall.
pub fn triangles(
    g: &Graph,
    steps: &mut StepCounter,
    visitor: &mut dyn FnMut(&Occurrence) -> Visit,
) -> u64 {
    let n = g.vertex_count();
    let mut rank = vec![0usize; n];
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (g.degree(v), v));
    for (r, &v) in order.iter().enumerate() {
        rank[v] = r;
    }
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (u, v) in g.edges() {
        steps.neighbor_scans += 1;
        if rank[u] < rank[v] {
            out[u].push(v);
        } else {
            out[v].push(u);
        }
    }
    // Neighbor lists arrive sorted by id, so the out-lists stay sorted.
    let mut emitter = Emitter::new(PatternId::K3, visitor);
    'outer: for v in 0..n {
        for &u in &out[v] {
            let (a, b) = (&out[v], &out[u]);
            let (mut i, mut j) = (0, 0);
            while i < a.len() && j < b.len() {
                steps.neighbor_scans += 1;
                match a[i].cmp(&b[j]) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => {
                        if emitter.emit(&[v, u, a[i]]).is_break() {
                            break 'outer;
                        }
                        i += 1;
                        j += 1;
                    }
                }
            }
        }
    }
    emitter.count
}

/// Lists every edge-plus-isolated-vertex once: all (edge, vertex)
/// combinations, filtered.
pub fn co_p3s(
    g: &Graph,
    steps: &mut StepCounter,
    visitor: &mut dyn FnMut(&Occurrence) -> Visit,
) -> u64 {
    let n = g.vertex_count();
    let mut emitter = Emitter::new(PatternId::CoP3, visitor);
    'outer: for (u, v) in g.edges() {
        for w in 0..n {
            if w == u || w == v {
                continue;
            }
            steps.edge_probes += 2;
            if !g.has_edge(w, u) && !g.has_edge(w, v) {
                if emitter.emit(&[u, v, w]).is_break() {
                    break 'outer;
                }
            }
        }
    }
    emitter.count
}
