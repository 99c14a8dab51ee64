//! Induced four-cycle enumeration in `O(c m^(3/2))` around a degree split at
//! `sqrt(c) * m^(1/4)`.
//!
//! Every square either has two adjacent low-degree vertices (phase one finds
//! it from that edge) or two opposite high-degree vertices (phase two finds
//! it inside the common-neighborhood list of that pair). The two cases are
//! mutually exclusive: in a four-cycle with no adjacent low pair the low
//! vertices form an independent set, so one opposite pair is entirely
//! high-degree, and conversely every cycle edge of a phase-two square
//! touches a high vertex.

use super::Emitter;
use crate::graph::Graph;
use crate::index::compute_closure;
use crate::pattern::{Occurrence, PatternId};
use crate::steps::StepCounter;
use crate::Visit;

pub fn squares(
    g: &Graph,
    steps: &mut StepCounter,
    visitor: &mut dyn FnMut(&Occurrence) -> Visit,
) -> u64 {
    let mut setup = StepCounter::new();
    let c = compute_closure(g, &mut setup).c;
    steps.charge_setup(&setup);
    let m = g.edge_count();
    if m == 0 {
        return 0;
    }
    let threshold = (c as f64).sqrt() * (m as f64).powf(0.25);
    let high = |v: usize| g.degree(v) as f64 >= threshold;
    let mut emitter = Emitter::new(PatternId::Square, visitor);

    // Phase one: squares owned by a low-low cycle edge; emitted from the
    // lexicographically smallest such edge.
    'phase1: for (u, v) in g.edges() {
        if high(u) || high(v) {
            continue;
        }
        for &up in g.neighbors(u) {
            steps.neighbor_scans += 1;
            if up == v {
                continue;
            }
            for &vp in g.neighbors(v) {
                steps.neighbor_scans += 1;
                if vp == u || vp == up {
                    continue;
                }
                steps.edge_probes += 3;
                if g.has_edge(u, vp) || g.has_edge(v, up) || !g.has_edge(up, vp) {
                    continue;
                }
                // Square u - v - vp - up. Ownership: (u, v) must be the
                // smallest low-low cycle edge.
                let cycle = [
                    (u, v),
                    ordered(v, vp),
                    ordered(vp, up),
                    ordered(up, u),
                ];
                let owner = cycle
                    .iter()
                    .filter(|&&(a, b)| !high(a) && !high(b))
                    .min()
                    .copied();
                if owner == Some((u, v)) {
                    if emitter.emit(&[u, v, vp, up]).is_break() {
                        break 'phase1;
                    }
                }
            }
        }
    }

    // Phase two: collect, per nonadjacent high-degree pair, all common
    // neighbors, by restricting the path sweep to paths with two high ends.
    let mut triples: Vec<(usize, usize, usize)> = Vec::new();
    for (x, y) in g.edges() {
        for (hi_end, mid) in [(x, y), (y, x)] {
            if !high(hi_end) {
                continue;
            }
            for &w in g.neighbors(mid) {
                steps.neighbor_scans += 1;
                if w <= hi_end || !high(w) {
                    continue;
                }
                steps.edge_probes += 1;
                if !g.has_edge(hi_end, w) {
                    triples.push((hi_end, w, mid));
                }
            }
        }
    }
    triples.sort_unstable();
    steps.index_touches += triples.len() as u64;
    let mut run_start = 0;
    while run_start < triples.len() {
        let (a, b, _) = triples[run_start];
        let mut run_end = run_start;
        while run_end < triples.len() && triples[run_end].0 == a && triples[run_end].1 == b {
            run_end += 1;
        }
        for i in run_start..run_end {
            for j in i + 1..run_end {
                let (v1, v2) = (triples[i].2, triples[j].2);
                steps.edge_probes += 1;
                if g.has_edge(v1, v2) {
                    continue;
                }
                // Square a - v1 - b - v2; every cycle edge touches a high
                // vertex, so phase one cannot own it.
                debug_assert!(
                    [(a, v1), (v1, b), (b, v2), (v2, a)]
                        .iter()
                        .all(|&(p, q)| high(p) || high(q))
                );
                // Emit from the smaller of the (up to two) high opposite
                // pairs.
                if high(v1) && high(v2) && ordered(v1, v2) < (a, b) {
                    continue;
                }
                if emitter.emit(&[a, v1, b, v2]).is_break() {
                    return emitter.count;
                }
            }
        }
        run_start = run_end;
    }
    emitter.count
}

fn ordered(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}
