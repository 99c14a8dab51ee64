//! Streaming enumerators for the small patterns plus the exhaustive subset
//! oracle every fast route is tested against. Each enumerator visits every
//! occurrence exactly once as a canonical ascending tuple and returns the
//! emission count; visitors may break to abort early.

mod anchor;
mod basic;
mod brute;
mod squares;

pub use anchor::{by_anchor, edge_anchored};
pub use basic::{co_p3s, triangles};
pub use brute::brute_force_matching;
pub use squares::squares;

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pattern::{classify_induced, first_placement_exists, Occurrence, PatternId};
use crate::steps::StepCounter;
use crate::Visit;

/// Default vertex-count cap for the exhaustive oracle; the CLI overrides it
/// via the `ORACLE_CAP` environment variable.
pub const DEFAULT_ORACLE_CAP: usize = 60;

/// Reusable emission buffer shared by the enumerators.
pub(crate) struct Emitter<'a> {
    occ: Occurrence,
    pub count: u64,
    visitor: &'a mut dyn FnMut(&Occurrence) -> Visit,
}

impl<'a> Emitter<'a> {
    pub(crate) fn new(
        pattern: PatternId,
        visitor: &'a mut dyn FnMut(&Occurrence) -> Visit,
    ) -> Self {
        Self {
            occ: Occurrence {
                pattern,
                vertices: Vec::with_capacity(5),
            },
            count: 0,
            visitor,
        }
    }

    pub(crate) fn emit(&mut self, vertices: &[usize]) -> Visit {
        self.occ.vertices.clear();
        self.occ.vertices.extend_from_slice(vertices);
        self.occ.vertices.sort_unstable();
        self.count += 1;
        (self.visitor)(&self.occ)
    }
}

/// Ground truth: classify every 3- and 4-subset once and bucket the
/// occurrences per pattern (ascending lexicographic order by construction).
#[derive(Debug, Default)]
pub struct SubsetCensus {
    occurrences: BTreeMap<PatternId, Vec<Vec<usize>>>,
}

impl SubsetCensus {
    pub fn count(&self, pattern: PatternId) -> u64 {
        self.occurrences
            .get(&pattern)
            .map_or(0, |v| v.len() as u64)
    }

    pub fn occurrences(&self, pattern: PatternId) -> &[Vec<usize>] {
        self.occurrences
            .get(&pattern)
            .map_or(&[], |v| v.as_slice())
    }
}

pub fn subset_census(g: &Graph, cap: usize) -> Result<SubsetCensus> {
    let n = g.vertex_count();
    if n > cap {
        return Err(Error::OracleCapExceeded { n, cap });
    }
    let mut census = SubsetCensus::default();
    for k in [3usize, 4] {
        let _ = crate::detect::for_each_combination(n, k, &mut |verts| {
            let id = classify_induced(g, verts).expect("valid subset size");
            census
                .occurrences
                .entry(id)
                .or_default()
                .push(verts.to_vec());
            Visit::Continue(())
        });
    }
    Ok(census)
}

/// Exhaustive per-pattern oracle: classify all subsets of the pattern's
/// order. Complete, canonical, and duplicate-free by construction; refuses
/// graphs above the cap.
pub fn subsets_oracle(
    g: &Graph,
    pattern: PatternId,
    cap: usize,
    steps: &mut StepCounter,
    visitor: &mut dyn FnMut(&Occurrence) -> Visit,
) -> Result<u64> {
    let n = g.vertex_count();
    if n > cap {
        return Err(Error::OracleCapExceeded { n, cap });
    }
    let info = pattern.info();
    let mut emitter = Emitter::new(pattern, visitor);
    let _ = crate::detect::for_each_combination(n, info.order, &mut |verts| {
        steps.edge_probes += (info.order * (info.order - 1) / 2) as u64;
        let matches = if info.order <= 4 {
            classify_induced(g, verts).expect("valid subset size") == pattern
        } else {
            first_placement_exists(g, info, verts)
        };
        if matches {
            emitter.emit(verts)
        } else {
            Visit::Continue(())
        }
    });
    Ok(emitter.count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn oracle_examples() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let mut steps = StepCounter::new();
        let count = subsets_oracle(&g, PatternId::P3, 60, &mut steps, &mut |_| {
            Visit::Continue(())
        })
        .unwrap();
        assert_eq!(count, 1);
        let count = subsets_oracle(
            &Graph::complete(4),
            PatternId::Square,
            60,
            &mut steps,
            &mut |_| Visit::Continue(()),
        )
        .unwrap();
        assert_eq!(count, 0);
    }

    #[test]
    fn oracle_refuses_above_cap() {
        let g = Graph::empty(61);
        let mut steps = StepCounter::new();
        let err = subsets_oracle(&g, PatternId::P3, 60, &mut steps, &mut |_| {
            Visit::Continue(())
        })
        .unwrap_err();
        assert_eq!(err, Error::OracleCapExceeded { n: 61, cap: 60 });
        assert!(subset_census(&g, 60).is_err());
    }

    #[test]
    fn census_counts_sum_to_binomials() {
        let g = generators::gnp(12, 0.4, 9);
        let census = subset_census(&g, 60).unwrap();
        let three: u64 = [
            PatternId::Empty3,
            PatternId::CoP3,
            PatternId::P3,
            PatternId::K3,
        ]
        .iter()
        .map(|&p| census.count(p))
        .sum();
        assert_eq!(three, 220); // C(12, 3)
        let four: u64 = crate::pattern::ALL_PATTERNS
            .iter()
            .filter(|p| p.info().order == 4)
            .map(|&p| census.count(p))
            .sum();
        assert_eq!(four, 495); // C(12, 4)
    }

    #[test]
    fn oracle_handles_gem() {
        let info = PatternId::Gem.info();
        let g = Graph::from_edges(5, info.edges.iter().copied()).unwrap();
        let mut steps = StepCounter::new();
        let count = subsets_oracle(&g, PatternId::Gem, 60, &mut steps, &mut |_| {
            Visit::Continue(())
        })
        .unwrap();
        assert_eq!(count, 1);
    }
}
