//! Co-square detection (two disjoint edges with no edge between them).

use super::{nonadjacent_pair_in, probe, DetectionResult};
use crate::graph::Graph;
use crate::index::compute_closure;
use crate::steps::StepCounter;

/// The detection splits on the set `C` of vertices of degree at least
/// `2c - 1`. A nonadjacent pair inside `C` already forces a co-square, which
/// the closure bound makes explicit. Otherwise `C` is a clique and the
/// components of `G - C` drive the case analysis; what survives is a
/// residual on `O(c^3)` vertices that an exhaustive two-edge scan settles.
pub fn co_square(g: &Graph, steps: &mut StepCounter) -> DetectionResult {
    let n = g.vertex_count();
    let mut setup = StepCounter::new();
    let c = compute_closure(g, &mut setup).c;
    steps.charge_setup(&setup);

    let core: Vec<usize> = (0..n).filter(|&v| g.degree(v) + 1 >= 2 * c).collect();
    if let Some((u, v)) = nonadjacent_pair_in(g, steps, &core) {
        // deg(u) >= 2c - 1 >= c and deg(v) >= 2c - 1: walk the constructive
        // proof. Some neighbor w of u avoids v; then some neighbor v' of v
        // avoids both u and w, because v's overlaps with each of them stay
        // below c.
        let w = g
            .neighbors(u)
            .iter()
            .copied()
            .find(|&w| !probe(g, steps, w, v))
            .expect("deg(u) >= c exceeds the common-neighbor bound");
        let vp = g
            .neighbors(v)
            .iter()
            .copied()
            .find(|&x| x != u && x != w && !probe(g, steps, x, u) && !probe(g, steps, x, w))
            .expect("deg(v) >= 2c - 1 exceeds both common-neighbor bounds");
        return DetectionResult::hit(vec![u, w, v, vp]);
    }

    // C is a clique; classify the components of G - C.
    let rest: Vec<usize> = (0..n).filter(|&v| g.degree(v) + 1 < 2 * c).collect();
    let (sub, map) = g.induced(&rest);
    let comps = sub.components();
    let nontrivial: Vec<&Vec<usize>> = comps.iter().filter(|comp| comp.len() >= 2).collect();
    if nontrivial.is_empty() {
        // Every edge meets the clique C, and two C-endpoints are adjacent.
        return DetectionResult::none();
    }
    if nontrivial.len() >= 2 {
        let e1 = first_edge_in(&sub, steps, nontrivial[0]);
        let e2 = first_edge_in(&sub, steps, nontrivial[1]);
        return DetectionResult::hit(vec![map[e1.0], map[e1.1], map[e2.0], map[e2.1]]);
    }
    let body: Vec<usize> = nontrivial[0].iter().map(|&v| map[v]).collect();

    if core.len() >= 2 * c {
        // Each body vertex has at most c - 1 neighbors in the clique, so two
        // clique vertices avoid any body edge.
        let (a, b) = {
            let e = first_edge_in(&sub, steps, nontrivial[0]);
            (map[e.0], map[e.1])
        };
        let mut picks = core
            .iter()
            .copied()
            .filter(|&w| !probe(g, steps, w, a) && !probe(g, steps, w, b));
        let w1 = picks.next().expect("core of order >= 2c avoids a body edge twice");
        let w2 = picks.next().expect("core of order >= 2c avoids a body edge twice");
        return DetectionResult::hit(vec![a, b, w1, w2]);
    }

    // Co-squares through an isolated vertex of G - C: its matched partner
    // must sit in C, and the far edge inside the body.
    let mut in_body = vec![false; n];
    for &v in &body {
        in_body[v] = true;
    }
    let mut in_core = vec![false; n];
    for &v in &core {
        in_core[v] = true;
    }
    let body_edges: Vec<(usize, usize)> = body
        .iter()
        .flat_map(|&x| {
            g.neighbors(x)
                .iter()
                .copied()
                .filter(move |&y| x < y)
                .map(move |y| (x, y))
        })
        .filter(|&(x, y)| in_body[x] && in_body[y])
        .collect();
    for &v in &core {
        let partner = g
            .neighbors(v)
            .iter()
            .copied()
            .find(|&w| !in_core[w] && !in_body[w]);
        steps.neighbor_scans += g.degree(v) as u64;
        if let Some(vp) = partner {
            for &(x, y) in &body_edges {
                if !probe(g, steps, v, x) && !probe(g, steps, v, y) {
                    return DetectionResult::hit(vec![v, vp, x, y]);
                }
            }
        }
    }

    // Residual: everything inside C plus the single nontrivial body, small
    // enough for the exhaustive disjoint-edge scan.
    let residual: Vec<usize> = core.iter().chain(body.iter()).copied().collect();
    let (rsub, rmap) = g.induced(&residual);
    match exhaustive_co_square(&rsub, steps) {
        Some(verts) => DetectionResult::hit(verts.into_iter().map(|v| rmap[v]).collect()),
        None => DetectionResult::none(),
    }
}

fn first_edge_in(
    sub: &Graph,
    steps: &mut StepCounter,
    comp: &[usize],
) -> (usize, usize) {
    for &v in comp {
        steps.neighbor_scans += 1;
        if let Some(&w) = sub.neighbors(v).first() {
            return (v.min(w), v.max(w));
        }
    }
    unreachable!("nontrivial component has an edge")
}

/// Scan all pairs of disjoint edges for an induced pair.
fn exhaustive_co_square(g: &Graph, steps: &mut StepCounter) -> Option<Vec<usize>> {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    for (i, &(a, b)) in edges.iter().enumerate() {
        for &(x, y) in &edges[i + 1..] {
            if a == x || a == y || b == x || b == y {
                continue;
            }
            if !probe(g, steps, a, x)
                && !probe(g, steps, a, y)
                && !probe(g, steps, b, x)
                && !probe(g, steps, b, y)
            {
                return Some(vec![a, b, x, y]);
            }
        }
    }
    None
}
