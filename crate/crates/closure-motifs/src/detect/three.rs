//! Detectors for the three-vertex patterns, stars, and cliques.

use super::{
    exhaustive_independent_in, find_p3, for_each_combination, independent_in, probe,
    DetectionResult,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::index::{compute_closure, path_sweep};
use crate::steps::StepCounter;
use crate::Visit;

/// Finds an edge plus a vertex nonadjacent to both in linear time.
///
/// Case analysis over a degree split at `n/2 - 1`: an edge between two
/// low-degree vertices leaves a vertex uncovered; a low-degree vertex not
/// joined to the whole high side yields a witness through any missing high
/// neighbor; otherwise the low side is irrelevant and the search reduces to
/// an induced path in the complement of the high side, which is dense
/// enough to materialize.
pub fn co_p3(g: &Graph, steps: &mut StepCounter) -> DetectionResult {
    let n = g.vertex_count();
    if g.edge_count() == 0 {
        return DetectionResult::none();
    }
    if let Some(iso) = (0..n).find(|&v| g.degree(v) == 0) {
        let (u, v) = g.edges().next().expect("nonzero edge count");
        return DetectionResult::hit(vec![u, v, iso]);
    }
    // low(v) <=> deg(v) < n/2 - 1 <=> 2 deg(v) + 2 < n
    let low = |v: usize| 2 * g.degree(v) + 2 < n;
    for (u, v) in g.edges() {
        if low(u) && low(v) {
            // deg(u) + deg(v) < n - 2 leaves a vertex outside N[{u, v}].
            let mut covered = vec![false; n];
            covered[u] = true;
            covered[v] = true;
            for &w in g.neighbors(u).iter().chain(g.neighbors(v)) {
                steps.neighbor_scans += 1;
                covered[w] = true;
            }
            let w = (0..n)
                .find(|&w| !covered[w])
                .expect("two low-degree endpoints cannot dominate the graph");
            return DetectionResult::hit(vec![u, v, w]);
        }
    }
    // The low side is now independent.
    let high_count = (0..n).filter(|&v| !low(v)).count();
    for v in (0..n).filter(|&v| low(v)) {
        if g.degree(v) == high_count {
            continue; // joined to the whole high side
        }
        let mut adjacent = vec![false; n];
        for &w in g.neighbors(v) {
            steps.neighbor_scans += 1;
            adjacent[w] = true;
        }
        let u = (0..n)
            .find(|&u| !low(u) && !adjacent[u])
            .expect("degree below the high count leaves a missing high neighbor");
        let w = g
            .neighbors(u)
            .iter()
            .copied()
            .find(|&w| !adjacent[w] && w != v)
            .expect("a high vertex out-degrees any low vertex");
        steps.neighbor_scans += g.degree(u) as u64;
        return DetectionResult::hit(vec![v, u, w]);
    }
    // Every low vertex is joined to the whole high side, so a witness lives
    // entirely in the high side: an induced path in its complement.
    let high: Vec<usize> = (0..n).filter(|&v| !low(v)).collect();
    let (sub, map) = g.induced(&high);
    steps.neighbor_scans += sub.edge_count() as u64;
    let co = sub.complement();
    match find_p3(&co, steps) {
        Some((a, mid, b)) => DetectionResult::hit(vec![map[a], map[mid], map[b]]),
        None => DetectionResult::none(),
    }
}

/// Finds `k` pairwise nonadjacent vertices for `k` in {3, 4} by
/// non-neighborhood branching. Correct on every graph; no closure-dependent
/// running-time bound is claimed for this route.
pub fn independent_set(g: &Graph, k: usize, steps: &mut StepCounter) -> Result<DetectionResult> {
    if !(3..=4).contains(&k) {
        return Err(Error::InvalidParameter(format!(
            "independent-set detection supports k in {{3, 4}}, got {k}"
        )));
    }
    let all: Vec<usize> = (0..g.vertex_count()).collect();
    Ok(match independent_in(g, steps, &all, k) {
        Some(set) => DetectionResult::hit(set),
        None => DetectionResult::none(),
    })
}

/// Finds an induced star with `k >= 2` leaves. Centers of degree below
/// `m^(1/k)` are handled by exhaustive leaf search inside their
/// neighborhood; for the remaining high-degree centers the problem is an
/// independent-set search in the neighborhood.
pub fn star(g: &Graph, k: usize, steps: &mut StepCounter) -> Result<DetectionResult> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!(
            "a star needs at least two leaves, got {k}"
        )));
    }
    let m = g.edge_count();
    if m == 0 {
        return Ok(DetectionResult::none());
    }
    let threshold = (m as f64).powf(1.0 / k as f64);
    let high = |v: usize| g.degree(v) as f64 >= threshold;
    for center in 0..g.vertex_count() {
        if g.degree(center) < k {
            continue;
        }
        let leaves = if high(center) {
            independent_in(g, steps, g.neighbors(center), k)
        } else {
            exhaustive_independent_in(g, steps, g.neighbors(center), k)
        };
        if let Some(mut witness) = leaves {
            witness.push(center);
            return Ok(DetectionResult::hit(witness));
        }
    }
    Ok(DetectionResult::none())
}

/// First triangle hit by the edge/neighborhood sweep, which costs one step
/// per edge, induced path, and triangle seen before the hit.
pub fn triangle_dense(g: &Graph, steps: &mut StepCounter) -> DetectionResult {
    let mut witness = None;
    let _ = path_sweep(
        g,
        steps,
        &mut |_, _, _| Visit::Continue(()),
        &mut |u, v, w| {
            witness = Some(vec![u, v, w]);
            Visit::Break(())
        },
    );
    match witness {
        Some(t) => DetectionResult::hit(t),
        None => DetectionResult::none(),
    }
}

/// Triangle detection tuned for sparse graphs: a degree split at
/// `(c * m)^(1/3)` (ties high). Triangles entirely above the split are found
/// by the dense sweep on the induced subgraph; a triangle touching a vertex
/// below the split is exposed by scanning that vertex's neighbors for each
/// of its edges.
pub fn triangle_sparse(g: &Graph, steps: &mut StepCounter) -> DetectionResult {
    let mut setup = StepCounter::new();
    let c = compute_closure(g, &mut setup).c;
    steps.charge_setup(&setup);
    let m = g.edge_count();
    if m == 0 {
        return DetectionResult::none();
    }
    let threshold = ((c * m) as f64).powf(1.0 / 3.0);
    let high = |v: usize| g.degree(v) as f64 >= threshold;
    let hi: Vec<usize> = (0..g.vertex_count()).filter(|&v| high(v)).collect();
    let (sub, map) = g.induced(&hi);
    if let Some(t) = triangle_dense(&sub, steps).witness {
        return DetectionResult::hit(t.into_iter().map(|v| map[v]).collect());
    }
    for (u, v) in g.edges() {
        let x = if !high(u) {
            u
        } else if !high(v) {
            v
        } else {
            continue;
        };
        let y = if x == u { v } else { u };
        for &w in g.neighbors(x) {
            steps.neighbor_scans += 1;
            if w != y && probe(g, steps, w, y) {
                return DetectionResult::hit(vec![x, y, w]);
            }
        }
    }
    DetectionResult::none()
}

/// Finds a clique on `k >= 3` vertices: for every clique on `k - 3` vertices,
/// search a triangle inside the common neighborhood.
pub fn clique(g: &Graph, k: usize, steps: &mut StepCounter) -> Result<DetectionResult> {
    if k < 3 {
        return Err(Error::InvalidParameter(format!(
            "clique detection needs k >= 3, got {k}"
        )));
    }
    if k == 3 {
        return Ok(triangle_dense(g, steps));
    }
    let n = g.vertex_count();
    let mut result = DetectionResult::none();
    let _ = for_each_combination(n, k - 3, &mut |base| {
        if !base
            .iter()
            .enumerate()
            .all(|(i, &u)| base[i + 1..].iter().all(|&v| probe(g, steps, u, v)))
        {
            return Visit::Continue(());
        }
        let mut shared: Vec<usize> = g.neighbors(base[0]).to_vec();
        steps.neighbor_scans += shared.len() as u64;
        for &v in &base[1..] {
            let nv = g.neighbors(v);
            steps.neighbor_scans += nv.len() as u64;
            shared = shared
                .iter()
                .copied()
                .filter(|w| nv.binary_search(w).is_ok())
                .collect();
        }
        let (sub, map) = g.induced(&shared);
        if let Some(t) = triangle_dense(&sub, steps).witness {
            let mut verts: Vec<usize> = base.to_vec();
            verts.extend(t.into_iter().map(|v| map[v]));
            result = DetectionResult::hit(verts);
            return Visit::Break(());
        }
        Visit::Continue(())
    });
    Ok(result)
}
