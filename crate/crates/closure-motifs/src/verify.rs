//! Differential verification: run every fast detector and enumerator on one
//! graph and compare against the exhaustive subset oracle.

use crate::detect::{self, Certificate, DetectionResult};
use crate::enumerate::{self, subset_census, SubsetCensus};
use crate::error::Result;
use crate::graph::Graph;
use crate::index::{compute_closure, compute_closure_naive, CommonNeighborIndex};
use crate::pattern::{classify_induced, first_placement_exists, PatternId, ALL_PATTERNS};
use crate::steps::StepCounter;
use crate::Visit;

#[derive(Debug, Clone)]
pub struct EnumerationCheck {
    pub algorithm: &'static str,
    pub count: u64,
    pub agree: bool,
}

#[derive(Debug, Clone)]
pub struct DetectionCheck {
    pub algorithm: &'static str,
    pub found: bool,
    pub agree: bool,
    pub witness_valid: bool,
}

#[derive(Debug, Clone)]
pub struct PatternReport {
    pub pattern: PatternId,
    pub oracle_count: u64,
    pub enumerations: Vec<EnumerationCheck>,
    pub detections: Vec<DetectionCheck>,
}

impl PatternReport {
    pub fn ok(&self) -> bool {
        self.enumerations.iter().all(|e| e.agree)
            && self.detections.iter().all(|d| d.agree && d.witness_valid)
    }
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub patterns: Vec<PatternReport>,
    pub closure: usize,
    pub closure_consistent: bool,
    pub index_consistent: bool,
}

impl VerifyReport {
    pub fn all_ok(&self) -> bool {
        self.closure_consistent && self.index_consistent && self.patterns.iter().all(|p| p.ok())
    }
}

pub fn verify_graph(g: &Graph, cap: usize) -> Result<VerifyReport> {
    verify_graph_with_fault(g, cap, false)
}

/// As [`verify_graph`], optionally dropping the first emitted triangle from
/// the triangle enumerator's stream, to demonstrate that corrupted
/// enumerations are caught.
pub fn verify_graph_with_fault(g: &Graph, cap: usize, drop_first_triangle: bool) -> Result<VerifyReport> {
    let census = subset_census(g, cap)?;
    let mut patterns = Vec::new();
    for pattern in ALL_PATTERNS {
        if pattern == PatternId::Gem {
            continue;
        }
        patterns.push(verify_pattern(g, pattern, &census, drop_first_triangle));
    }

    let mut steps = StepCounter::new();
    let fast = compute_closure(g, &mut steps);
    let naive = compute_closure_naive(g, &mut steps);
    let closure_consistent = fast.c == naive.c
        && match fast.witness_pair {
            Some((u, v)) => {
                !g.has_edge(u, v) && g.common_neighbors(u, v).len() == fast.c - 1
            }
            None => fast.c == 1,
        };

    let index = CommonNeighborIndex::build(g, &mut steps);
    let mut index_consistent = index
        .pairs()
        .all(|((u, v), list)| {
            !g.has_edge(u, v)
                && list.len() < fast.c
                && list == g.common_neighbors(u, v).as_slice()
        });
    let p3_total = crate::index::enumerate_p3(g, &mut steps, &mut |_| Visit::Continue(()));
    index_consistent &= index.entry_count() as u64 == p3_total;

    Ok(VerifyReport {
        patterns,
        closure: fast.c,
        closure_consistent,
        index_consistent,
    })
}

fn collect(
    out: &mut Vec<Vec<usize>>,
) -> impl FnMut(&crate::pattern::Occurrence) -> Visit + '_ {
    |occ| {
        out.push(occ.vertices.clone());
        Visit::Continue(())
    }
}

fn verify_pattern(
    g: &Graph,
    pattern: PatternId,
    census: &SubsetCensus,
    drop_first_triangle: bool,
) -> PatternReport {
    let expected = census.occurrences(pattern);
    let oracle_count = expected.len() as u64;
    let mut enumerations = Vec::new();
    let mut check_enum = |algorithm: &'static str, mut got: Vec<Vec<usize>>, count: u64| {
        got.sort();
        let agree = got == expected && count == oracle_count;
        enumerations.push(EnumerationCheck {
            algorithm,
            count,
            agree,
        });
    };

    let mut steps = StepCounter::new();
    {
        let mut got = Vec::new();
        let count = enumerate::by_anchor(g, pattern, &mut steps, &mut collect(&mut got))
            .expect("catalog pattern of order <= 4");
        check_enum("anchor", got, count);
    }
    {
        let mut got = Vec::new();
        let count = enumerate::brute_force_matching(g, pattern, &mut steps, &mut collect(&mut got))
            .expect("catalog pattern of order <= 4");
        check_enum("brute-matching", got, count);
    }
    match pattern {
        PatternId::P3 => {
            let mut got = Vec::new();
            let count = crate::index::enumerate_p3(g, &mut steps, &mut collect(&mut got));
            check_enum("path-sweep", got, count);
        }
        PatternId::K3 => {
            let mut got = Vec::new();
            let mut skipped = false;
            let count = enumerate::triangles(g, &mut steps, &mut |occ| {
                if drop_first_triangle && !skipped {
                    skipped = true;
                } else {
                    got.push(occ.vertices.clone());
                }
                Visit::Continue(())
            });
            let count = if drop_first_triangle && skipped { count - 1 } else { count };
            check_enum("degree-ordered", got, count);
        }
        PatternId::CoP3 => {
            let mut got = Vec::new();
            let count = enumerate::co_p3s(g, &mut steps, &mut collect(&mut got));
            check_enum("edge-vertex-sweep", got, count);
        }
        PatternId::Square => {
            let mut got = Vec::new();
            let count = enumerate::squares(g, &mut steps, &mut collect(&mut got));
            check_enum("two-phase", got, count);
        }
        PatternId::P4 | PatternId::Paw => {
            let mut got = Vec::new();
            let count = enumerate::edge_anchored(g, pattern, &mut steps, &mut collect(&mut got))
                .expect("supported pattern");
            check_enum("edge-anchored", got, count);
        }
        _ => {}
    }

    let mut detections = Vec::new();
    let mut check_detect = |algorithm: &'static str, result: DetectionResult| {
        let found = result.found();
        let witness_valid = match &result.witness {
            Some(w) => {
                (w.len() == pattern.info().order)
                    && classify_induced(g, w).map_or_else(
                        |_| first_placement_exists(g, pattern.info(), w),
                        |id| id == pattern,
                    )
            }
            None => true,
        };
        let mut agree = found == (oracle_count > 0);
        if let Some(Certificate::TwoCliquePartition { first, second }) = &result.certificate {
            agree &= g.is_clique(first)
                && g.is_clique(second)
                && first.len() + second.len() == g.vertex_count();
        }
        detections.push(DetectionCheck {
            algorithm,
            found,
            agree,
            witness_valid,
        });
    };

    let mut steps = StepCounter::new();
    match pattern {
        PatternId::Empty3 => {
            check_detect(
                "branching",
                detect::independent_set(g, 3, &mut steps).expect("k = 3"),
            );
        }
        PatternId::Empty4 => {
            check_detect(
                "branching",
                detect::independent_set(g, 4, &mut steps).expect("k = 4"),
            );
        }
        PatternId::CoP3 => check_detect("degree-split", detect::co_p3(g, &mut steps)),
        PatternId::P3 => {
            check_detect("linear", detect::p3_linear(g, &mut steps));
            check_detect("star", detect::star(g, 2, &mut steps).expect("k = 2"));
        }
        PatternId::K3 => {
            check_detect("dense", detect::triangle_dense(g, &mut steps));
            check_detect("sparse", detect::triangle_sparse(g, &mut steps));
            check_detect("clique", detect::clique(g, 3, &mut steps).expect("k = 3"));
        }
        PatternId::CoDiamond => check_detect("case-analysis", detect::co_diamond(g, &mut steps)),
        PatternId::CoPaw => check_detect("co-component", detect::co_paw(g, &mut steps)),
        PatternId::CoSquare => check_detect("degree-core", detect::co_square(g, &mut steps)),
        PatternId::P4 => check_detect("edge-extension", detect::p4(g, &mut steps)),
        PatternId::Claw => check_detect("star", detect::claw(g, &mut steps)),
        PatternId::CoClaw => check_detect("triangle-scan", detect::co_claw(g, &mut steps)),
        PatternId::Paw => check_detect("component", detect::paw(g, &mut steps)),
        PatternId::Square => check_detect("enumerate-first", detect::square(g, &mut steps)),
        PatternId::Diamond => {
            check_detect("neighborhood", detect::diamond_baseline(g, &mut steps));
            if !detect::gem(g, &mut steps).found() {
                check_detect("gem-free", detect::diamond_gem_free(g, &mut steps));
            }
        }
        PatternId::K4 => {
            check_detect("clique", detect::clique(g, 4, &mut steps).expect("k = 4"));
        }
        PatternId::Gem => unreachable!("gem skipped above"),
    }

    PatternReport {
        pattern,
        oracle_count,
        enumerations,
        detections,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn clean_graph_verifies() {
        let g = generators::gnp(16, 0.3, 77);
        let report = verify_graph(&g, 60).unwrap();
        assert!(report.all_ok());
        assert!(report.patterns.len() == 15);
    }

    #[test]
    fn fault_injection_is_caught() {
        let g = generators::gnp(16, 0.5, 78);
        let report = verify_graph_with_fault(&g, 60, true).unwrap();
        assert!(!report.all_ok());
        let k3 = report
            .patterns
            .iter()
            .find(|p| p.pattern == PatternId::K3)
            .unwrap();
        assert!(k3
            .enumerations
            .iter()
            .any(|e| e.algorithm == "degree-ordered" && !e.agree));
    }

    #[test]
    fn certificate_validated_when_present() {
        // Complete graph: co-diamond absent; dense route.
        let report = verify_graph(&Graph::complete(12), 60).unwrap();
        assert!(report.all_ok());
    }
}
