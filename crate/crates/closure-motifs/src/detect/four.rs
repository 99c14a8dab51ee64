//! Detectors for paws, co-paws, co-claws, paths on four vertices, claws,
//! squares, and gems.

use super::{find_p3, independent_in, probe, DetectionResult};
use crate::enumerate;
use crate::graph::Graph;
use crate::index::enumerate_p3;
use crate::steps::StepCounter;
use crate::Visit;

/// Paw detection via the component-wise characterization: a connected graph
/// contains a paw iff it contains both a triangle and an edge-plus-isolated-
/// vertex (i.e. it is neither triangle-free nor complete multipartite). The
/// characterization is false read globally — a triangle plus two isolated
/// vertices has both certificates but no paw — so each component is decided
/// on its own.
pub fn paw(g: &Graph, steps: &mut StepCounter) -> DetectionResult {
    for comp in g.components() {
        if comp.len() < 4 {
            continue;
        }
        let (sub, map) = g.induced(&comp);
        let triangle = match super::triangle_dense(&sub, steps).witness {
            Some(t) => t,
            None => continue,
        };
        if !super::co_p3(&sub, steps).found() {
            continue;
        }
        // Both certificates present: a paw exists in this component. Local
        // search first: a vertex adjacent to exactly one triangle corner is
        // a pendant.
        if let Some(w) = pendant_for_triangle(&sub, steps, &triangle) {
            let mut verts = triangle;
            verts.push(w);
            return DetectionResult::hit(verts.into_iter().map(|v| map[v]).collect());
        }
        // Fall back to scanning every triangle of the component; some
        // triangle is the body of a paw.
        let mut witness = None;
        let mut inner = StepCounter::new();
        enumerate::triangles(&sub, steps, &mut |occ| {
            if let Some(w) = pendant_for_triangle(&sub, &mut inner, &occ.vertices) {
                let mut verts = occ.vertices.clone();
                verts.push(w);
                witness = Some(verts);
                return Visit::Break(());
            }
            Visit::Continue(())
        });
        steps.absorb(&inner);
        let verts = witness.expect("component with triangle and co-P3 contains a paw");
        return DetectionResult::hit(verts.into_iter().map(|v| map[v]).collect());
    }
    DetectionResult::none()
}

fn pendant_for_triangle(
    g: &Graph,
    steps: &mut StepCounter,
    triangle: &[usize],
) -> Option<usize> {
    (0..g.vertex_count()).find(|&w| {
        !triangle.contains(&w)
            && triangle
                .iter()
                .filter(|&&t| probe(g, steps, w, t))
                .count()
                == 1
    })
}

/// Co-paw detection in the complement view: a co-paw lives inside one
/// co-component and exists there iff the co-component holds both three
/// pairwise nonadjacent vertices and an induced path on three vertices.
pub fn co_paw(g: &Graph, steps: &mut StepCounter) -> DetectionResult {
    for cc in g.co_components() {
        if cc.len() < 4 {
            continue;
        }
        let independent = match independent_in(g, steps, &cc, 3) {
            Some(set) => set,
            None => continue,
        };
        let (sub, map) = g.induced(&cc);
        if find_p3(&sub, steps).is_none() {
            continue;
        }
        // A vertex adjacent to exactly two of the independent triple turns
        // it into path-plus-isolated-vertex.
        for &v in &cc {
            if independent.contains(&v) {
                continue;
            }
            let adj = independent
                .iter()
                .filter(|&&u| probe(g, steps, v, u))
                .count();
            if adj == 2 {
                let mut verts = independent.clone();
                verts.push(v);
                return DetectionResult::hit(verts);
            }
        }
        // Fallback: some induced path of the co-component plus a fourth
        // vertex nonadjacent to all of it.
        let mut witness = None;
        let mut inner = StepCounter::new();
        enumerate_p3(&sub, steps, &mut |occ| {
            let path = &occ.vertices;
            for w in 0..sub.vertex_count() {
                if !path.contains(&w) && path.iter().all(|&x| !probe(&sub, &mut inner, w, x)) {
                    let mut verts = path.clone();
                    verts.push(w);
                    witness = Some(verts);
                    return Visit::Break(());
                }
            }
            Visit::Continue(())
        });
        steps.absorb(&inner);
        let verts = witness.expect("co-component with both certificates contains a co-paw");
        return DetectionResult::hit(verts.into_iter().map(|v| map[v]).collect());
    }
    DetectionResult::none()
}

/// Co-claw (triangle plus isolated vertex): enumerate triangles and test
/// whether some vertex avoids the union of their neighborhoods.
pub fn co_claw(g: &Graph, steps: &mut StepCounter) -> DetectionResult {
    let n = g.vertex_count();
    let mut marked = vec![false; n];
    let mut witness = None;
    let mut inner = StepCounter::new();
    enumerate::triangles(g, steps, &mut |occ| {
        let t = &occ.vertices;
        let mut covered = 0;
        for &v in t {
            for &w in g.neighbors(v) {
                inner.neighbor_scans += 1;
                if !marked[w] {
                    marked[w] = true;
                    covered += 1;
                }
            }
        }
        let result = if covered < n {
            let w = (0..n).find(|&w| !marked[w]).expect("coverage below n");
            let mut verts = t.clone();
            verts.push(w);
            witness = Some(verts);
            Visit::Break(())
        } else {
            Visit::Continue(())
        };
        for &v in t {
            for &w in g.neighbors(v) {
                marked[w] = false;
            }
        }
        result
    });
    steps.absorb(&inner);
    match witness {
        Some(verts) => DetectionResult::hit(verts),
        None => DetectionResult::none(),
    }
}

/// Induced path on four vertices by bidirectional extension of each edge.
pub fn p4(g: &Graph, steps: &mut StepCounter) -> DetectionResult {
    for (u, v) in g.edges() {
        for &a in g.neighbors(u) {
            steps.neighbor_scans += 1;
            if a == v || probe(g, steps, a, v) {
                continue;
            }
            for &b in g.neighbors(v) {
                steps.neighbor_scans += 1;
                if b == u || b == a || probe(g, steps, b, u) {
                    continue;
                }
                if !probe(g, steps, a, b) {
                    return DetectionResult::hit(vec![a, u, v, b]);
                }
            }
        }
    }
    DetectionResult::none()
}

/// Claw detection: a star with three leaves.
pub fn claw(g: &Graph, steps: &mut StepCounter) -> DetectionResult {
    super::star(g, 3, steps).expect("k = 3 is valid")
}

/// Square detection: early-exit wrapper around the square enumerator.
pub fn square(g: &Graph, steps: &mut StepCounter) -> DetectionResult {
    let mut witness = None;
    enumerate::squares(g, steps, &mut |occ| {
        witness = Some(occ.vertices.clone());
        Visit::Break(())
    });
    match witness {
        Some(verts) => DetectionResult::hit(verts),
        None => DetectionResult::none(),
    }
}

/// Gem detection (path on four vertices plus a universal vertex), used to
/// validate the precondition of the gem-free diamond detector. Anchored at
/// the universal vertex: search an induced four-path inside each
/// neighborhood.
pub fn gem(g: &Graph, steps: &mut StepCounter) -> DetectionResult {
    for v in 0..g.vertex_count() {
        if g.degree(v) < 4 {
            continue;
        }
        let (sub, map) = g.induced(g.neighbors(v));
        if let Some(path) = p4(&sub, steps).witness {
            let mut verts: Vec<usize> = path.into_iter().map(|w| map[w]).collect();
            verts.push(v);
            return DetectionResult::hit(verts);
        }
    }
    DetectionResult::none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::pattern::{classify_induced, PatternId};

    fn steps() -> StepCounter {
        StepCounter::new()
    }

    fn c5() -> Graph {
        Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap()
    }

    #[test]
    fn paw_examples() {
        let g = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2)]).unwrap();
        let r = paw(&g, &mut steps());
        assert_eq!(r.witness, Some(vec![0, 1, 2, 3]));
        // Triangle plus two isolated vertices: certificates exist globally
        // but in different components.
        let g = Graph::from_edges(5, [(0, 1), (0, 2), (1, 2)]).unwrap();
        assert!(!paw(&g, &mut steps()).found());
        assert!(!paw(&c5(), &mut steps()).found());
    }

    #[test]
    fn paw_witness_valid_on_random_graphs() {
        for seed in 0..10 {
            let g = generators::gnp(18, 0.25, seed);
            if let Some(w) = paw(&g, &mut steps()).witness {
                assert_eq!(classify_induced(&g, &w), Ok(PatternId::Paw));
            }
        }
    }

    #[test]
    fn co_paw_examples() {
        // Path plus isolated vertex is itself a co-paw.
        let g = Graph::from_edges(4, [(0, 1), (1, 2)]).unwrap();
        let r = co_paw(&g, &mut steps());
        assert_eq!(r.witness, Some(vec![0, 1, 2, 3]));
        let g = generators::is_plus_star(8).unwrap();
        let r = co_paw(&g, &mut steps());
        assert_eq!(classify_induced(&g, &r.witness.unwrap()), Ok(PatternId::CoPaw));
        assert!(!co_paw(&Graph::complete(4), &mut steps()).found());
        // Complement of triangle-plus-two-isolated-vertices has no co-paw.
        let g = Graph::from_edges(5, [(0, 1), (0, 2), (1, 2)])
            .unwrap()
            .complement();
        assert!(!co_paw(&g, &mut steps()).found());
    }

    #[test]
    fn co_claw_examples() {
        let g = Graph::from_edges(4, [(0, 1), (0, 2), (1, 2)]).unwrap();
        let r = co_claw(&g, &mut steps());
        assert_eq!(r.witness, Some(vec![0, 1, 2, 3]));
        assert!(!co_claw(&Graph::complete(4), &mut steps()).found());
        assert!(!co_claw(&c5(), &mut steps()).found());
    }

    #[test]
    fn p4_examples() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let r = p4(&g, &mut steps());
        assert_eq!(r.witness, Some(vec![0, 1, 2, 3]));
        // Complete tripartite K_{2,2,2} is P4-free.
        let edges = [
            (0, 2), (0, 3), (0, 4), (0, 5),
            (1, 2), (1, 3), (1, 4), (1, 5),
            (2, 4), (2, 5), (3, 4), (3, 5),
        ];
        let g = Graph::from_edges(6, edges).unwrap();
        assert!(!p4(&g, &mut steps()).found());
    }

    #[test]
    fn claw_example() {
        let g = generators::star(3).unwrap();
        assert!(claw(&g, &mut steps()).found());
        assert!(!claw(&Graph::complete(4), &mut steps()).found());
    }

    #[test]
    fn square_examples() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let r = square(&g, &mut steps());
        assert_eq!(r.witness, Some(vec![0, 1, 2, 3]));
        assert!(!square(&Graph::complete(4), &mut steps()).found());
        // K_{2,3} holds three squares.
        let edges = (2..5).flat_map(|v| [(0, v), (1, v)]);
        let g = Graph::from_edges(5, edges).unwrap();
        let r = square(&g, &mut steps());
        assert_eq!(classify_induced(&g, &r.witness.unwrap()), Ok(PatternId::Square));
        // The doubled projective incidence graph is square-free.
        let g = generators::projective(2).unwrap();
        assert!(!square(&g, &mut steps()).found());
    }

    #[test]
    fn gem_examples() {
        let info = PatternId::Gem.info();
        let g = Graph::from_edges(5, info.edges.iter().copied()).unwrap();
        let r = gem(&g, &mut steps());
        assert_eq!(r.witness, Some(vec![0, 1, 2, 3, 4]));
        let g = generators::k2_bipartite_plus_edge(6).unwrap();
        assert!(!gem(&g, &mut steps()).found());
        assert!(!gem(&c5(), &mut steps()).found());
    }
}
