//! Anchor-set enumeration: place a minimum anchor set by brute force, then
//! pull every remaining pattern vertex out of the common-neighborhood index
//! of its two nonadjacent anchors, where fewer than `c` candidates live.

use super::Emitter;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::index::CommonNeighborIndex;
use crate::pattern::{
    classify_induced, is_minimal_placement, placement_induces, Occurrence, PatternId, PatternInfo,
};
use crate::steps::StepCounter;
use crate::Visit;

/// Enumerates induced copies of a 3- or 4-vertex pattern. With anchor size
/// `s` and closure `c` this costs `O(c^(order - s) n^s)` placements on top
/// of building the index once. A vertex set is emitted exactly once, from
/// its lexicographically minimal inducing placement.
pub fn by_anchor(
    g: &Graph,
    pattern: PatternId,
    steps: &mut StepCounter,
    visitor: &mut dyn FnMut(&Occurrence) -> Visit,
) -> Result<u64> {
    let info = pattern.info();
    if info.order > 4 {
        return Err(Error::UnsupportedPattern(pattern.name().into()));
    }
    let mut emitter = Emitter::new(pattern, visitor);
    if info.anchor_size == info.order {
        // The anchor set is the whole pattern: plain ordered subset scan.
        let _ = crate::detect::for_each_combination(g.vertex_count(), info.order, &mut |verts| {
            steps.edge_probes += (info.order * (info.order - 1) / 2) as u64;
            if classify_induced(g, verts).expect("valid size") == pattern {
                emitter.emit(verts)
            } else {
                Visit::Continue(())
            }
        });
        return Ok(emitter.count);
    }
    let index = CommonNeighborIndex::build(g, steps);
    let mut placement = vec![usize::MAX; info.order];
    let _ = place_anchors(g, info, &index, steps, &mut placement, 0, &mut emitter);
    Ok(emitter.count)
}

fn place_anchors(
    g: &Graph,
    info: &PatternInfo,
    index: &CommonNeighborIndex,
    steps: &mut StepCounter,
    placement: &mut Vec<usize>,
    slot: usize,
    emitter: &mut Emitter,
) -> Visit {
    if slot == info.anchor_set.len() {
        return place_free(g, info, index, steps, placement, 0, emitter);
    }
    let pv = info.anchor_set[slot];
    'host: for host in 0..g.vertex_count() {
        for &earlier in &info.anchor_set[..slot] {
            if placement[earlier] == host {
                continue 'host;
            }
            steps.edge_probes += 1;
            if g.has_edge(placement[earlier], host) != info.has_edge(earlier, pv) {
                continue 'host;
            }
        }
        placement[pv] = host;
        if place_anchors(g, info, index, steps, placement, slot + 1, emitter).is_break() {
            return Visit::Break(());
        }
    }
    placement[pv] = usize::MAX;
    Visit::Continue(())
}

fn place_free(
    g: &Graph,
    info: &PatternInfo,
    index: &CommonNeighborIndex,
    steps: &mut StepCounter,
    placement: &mut Vec<usize>,
    free_slot: usize,
    emitter: &mut Emitter,
) -> Visit {
    if free_slot == info.anchor_pairs.len() {
        if placement_induces(g, info, placement) && is_minimal_placement(g, info, placement) {
            steps.edge_probes += (info.order * (info.order - 1)) as u64;
            return emitter.emit(placement);
        }
        return Visit::Continue(());
    }
    let (pv, (a, b)) = info.anchor_pairs[free_slot];
    let candidates = index.common_list(placement[a], placement[b]);
    steps.index_touches += candidates.len() as u64;
    for &host in candidates {
        if placement[..info.order]
            .iter()
            .enumerate()
            .any(|(slot, &p)| slot != pv && p == host)
        {
            continue;
        }
        placement[pv] = host;
        if place_free(g, info, index, steps, placement, free_slot + 1, emitter).is_break() {
            return Visit::Break(());
        }
    }
    placement[pv] = usize::MAX;
    Visit::Continue(())
}

/// Edge-anchored enumeration of four-paths and paws in `O(c n m)`: an edge
/// and a loose vertex fix three pattern vertices; the fourth comes from the
/// common-neighborhood index list of a nonadjacent pair among them, which
/// the closure bounds below `c`.
pub fn edge_anchored(
    g: &Graph,
    pattern: PatternId,
    steps: &mut StepCounter,
    visitor: &mut dyn FnMut(&Occurrence) -> Visit,
) -> Result<u64> {
    if pattern != PatternId::P4 && pattern != PatternId::Paw {
        return Err(Error::UnsupportedPattern(pattern.name().into()));
    }
    let info = pattern.info();
    let index = CommonNeighborIndex::build(g, steps);
    let mut emitter = Emitter::new(pattern, visitor);
    let n = g.vertex_count();
    'outer: for (x, y) in g.edges() {
        for (c, d) in [(x, y), (y, x)] {
            for far in 0..n {
                if far == c || far == d {
                    continue;
                }
                steps.edge_probes += 2;
                if g.has_edge(far, c) || g.has_edge(far, d) {
                    continue;
                }
                let candidates = index.common_list(far, c);
                steps.index_touches += candidates.len() as u64;
                for &fourth in candidates {
                    if fourth == d {
                        continue;
                    }
                    steps.edge_probes += 1;
                    let placement = if pattern == PatternId::P4 {
                        // Path far - fourth - c - d: the diagonal to d must
                        // be absent.
                        if g.has_edge(fourth, d) {
                            continue;
                        }
                        [far, fourth, c, d]
                    } else {
                        // Paw apex `fourth` over triangle edge (c, d) with
                        // pendant `far`: the apex must close the triangle.
                        if !g.has_edge(fourth, d) {
                            continue;
                        }
                        [fourth, c, d, far]
                    };
                    debug_assert!(placement_induces(g, info, &placement));
                    if is_minimal_placement(g, info, &placement) {
                        if emitter.emit(&placement).is_break() {
                            break 'outer;
                        }
                    }
                }
            }
        }
    }
    Ok(emitter.count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    fn collect_anchor(g: &Graph, p: PatternId) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        by_anchor(g, p, &mut StepCounter::new(), &mut |occ| {
            out.push(occ.vertices.clone());
            Visit::Continue(())
        })
        .unwrap();
        out.sort();
        out
    }

    fn collect_edge_anchored(g: &Graph, p: PatternId) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        edge_anchored(g, p, &mut StepCounter::new(), &mut |occ| {
            out.push(occ.vertices.clone());
            Visit::Continue(())
        })
        .unwrap();
        out.sort();
        out
    }

    #[test]
    fn square_on_c4() {
        let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert_eq!(collect_anchor(&c4, PatternId::Square), vec![vec![0, 1, 2, 3]]);
    }

    #[test]
    fn diamonds_in_lower_bound_family() {
        let g = generators::k2_bipartite_plus_edge(6).unwrap();
        assert_eq!(collect_anchor(&g, PatternId::Diamond).len(), 6);
    }

    #[test]
    fn claws_on_star() {
        let g = generators::star(5).unwrap();
        assert_eq!(collect_anchor(&g, PatternId::Claw).len(), 10);
    }

    #[test]
    fn rejects_gem() {
        let g = Graph::complete(5);
        assert!(by_anchor(&g, PatternId::Gem, &mut StepCounter::new(), &mut |_| {
            Visit::Continue(())
        })
        .is_err());
    }

    #[test]
    fn edge_anchored_p4_on_double_star() {
        let g = generators::double_star(3).unwrap();
        assert_eq!(collect_edge_anchored(&g, PatternId::P4).len(), 9);
    }

    #[test]
    fn edge_anchored_paw_on_clique_pendants() {
        let g = generators::clique_pendants(4, 2).unwrap();
        assert_eq!(collect_edge_anchored(&g, PatternId::Paw).len(), 6);
    }

    #[test]
    fn edge_anchored_p4_on_k4_is_empty() {
        assert!(collect_edge_anchored(&Graph::complete(4), PatternId::P4).is_empty());
    }

    #[test]
    fn edge_anchored_rejects_other_patterns() {
        let g = Graph::complete(4);
        assert!(edge_anchored(&g, PatternId::Square, &mut StepCounter::new(), &mut |_| {
            Visit::Continue(())
        })
        .is_err());
    }

    #[test]
    fn anchor_matches_oracle_on_random_graph() {
        let g = generators::gnp(14, 0.35, 21);
        for p in crate::pattern::ALL_PATTERNS {
            if p.info().order > 4 {
                continue;
            }
            let mut expected = Vec::new();
            super::super::subsets_oracle(&g, p, 60, &mut StepCounter::new(), &mut |occ| {
                expected.push(occ.vertices.clone());
                Visit::Continue(())
            })
            .unwrap();
            assert_eq!(collect_anchor(&g, p), expected, "pattern {p}");
        }
    }
}
