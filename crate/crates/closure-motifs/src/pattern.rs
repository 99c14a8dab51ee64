//! Catalog of the small patterns, classification of induced subgraphs, and
//! canonical occurrence tuples.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// The 15 graphs on three or four vertices, plus the gem (used only as a
/// precondition check for the gem-free diamond detector).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PatternId {
    Empty3,
    CoP3,
    P3,
    K3,
    Empty4,
    CoDiamond,
    CoPaw,
    CoSquare,
    P4,
    Claw,
    CoClaw,
    Paw,
    Square,
    Diamond,
    K4,
    Gem,
}

pub const ALL_PATTERNS: [PatternId; 16] = [
    PatternId::Empty3,
    PatternId::CoP3,
    PatternId::P3,
    PatternId::K3,
    PatternId::Empty4,
    PatternId::CoDiamond,
    PatternId::CoPaw,
    PatternId::CoSquare,
    PatternId::P4,
    PatternId::Claw,
    PatternId::CoClaw,
    PatternId::Paw,
    PatternId::Square,
    PatternId::Diamond,
    PatternId::K4,
    PatternId::Gem,
];

impl PatternId {
    pub fn name(self) -> &'static str {
        match self {
            PatternId::Empty3 => "empty3",
            PatternId::CoP3 => "co-p3",
            PatternId::P3 => "p3",
            PatternId::K3 => "triangle",
            PatternId::Empty4 => "empty4",
            PatternId::CoDiamond => "co-diamond",
            PatternId::CoPaw => "co-paw",
            PatternId::CoSquare => "co-square",
            PatternId::P4 => "p4",
            PatternId::Claw => "claw",
            PatternId::CoClaw => "co-claw",
            PatternId::Paw => "paw",
            PatternId::Square => "square",
            PatternId::Diamond => "diamond",
            PatternId::K4 => "k4",
            PatternId::Gem => "gem",
        }
    }

    pub fn from_name(name: &str) -> Option<PatternId> {
        let key = name.to_ascii_lowercase();
        ALL_PATTERNS
            .iter()
            .copied()
            .find(|p| p.name() == key || (key == "k3" && *p == PatternId::K3))
    }

    pub fn info(self) -> &'static PatternInfo {
        &CATALOG[ALL_PATTERNS.iter().position(|&p| p == self).unwrap()]
    }
}

impl std::fmt::Display for PatternId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Static description of one catalog pattern.
///
/// `anchor_set` is a minimum vertex set such that every pattern vertex
/// outside it has two nonadjacent neighbors inside it; `anchor_pairs` fixes,
/// for each outside vertex, one such nonadjacent neighbor pair. Both are
/// constants here and are cross-checked against [`min_anchor_set_size`] and a
/// brute-force matching computation in the tests.
#[derive(Debug)]
pub struct PatternInfo {
    pub id: PatternId,
    pub order: usize,
    pub edges: &'static [(usize, usize)],
    /// Minimum anchor-set size.
    pub anchor_size: usize,
    /// Maximum matching size.
    pub matching_number: usize,
    /// A fixed optimal anchor set (ascending).
    pub anchor_set: &'static [usize],
    /// For each vertex outside `anchor_set`: (vertex, (two nonadjacent
    /// anchors adjacent to it)).
    pub anchor_pairs: &'static [(usize, (usize, usize))],
}

impl PatternInfo {
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges
            .iter()
            .any(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u))
    }

    /// Whether the pattern contains an induced path on three vertices.
    /// Patterns without one are cluster graphs; their blow-ups are 1-closed.
    pub fn is_p3_free(&self) -> bool {
        for mid in 0..self.order {
            for a in 0..self.order {
                for b in a + 1..self.order {
                    if a != mid
                        && b != mid
                        && self.has_edge(mid, a)
                        && self.has_edge(mid, b)
                        && !self.has_edge(a, b)
                    {
                        return false;
                    }
                }
            }
        }
        true
    }
}

pub static CATALOG: [PatternInfo; 16] = [
    PatternInfo {
        id: PatternId::Empty3,
        order: 3,
        edges: &[],
        anchor_size: 3,
        matching_number: 0,
        anchor_set: &[0, 1, 2],
        anchor_pairs: &[],
    },
    PatternInfo {
        id: PatternId::CoP3,
        order: 3,
        edges: &[(0, 1)],
        anchor_size: 3,
        matching_number: 1,
        anchor_set: &[0, 1, 2],
        anchor_pairs: &[],
    },
    PatternInfo {
        id: PatternId::P3,
        order: 3,
        edges: &[(0, 1), (1, 2)],
        anchor_size: 2,
        matching_number: 1,
        anchor_set: &[0, 2],
        anchor_pairs: &[(1, (0, 2))],
    },
    PatternInfo {
        id: PatternId::K3,
        order: 3,
        edges: &[(0, 1), (0, 2), (1, 2)],
        anchor_size: 3,
        matching_number: 1,
        anchor_set: &[0, 1, 2],
        anchor_pairs: &[],
    },
    PatternInfo {
        id: PatternId::Empty4,
        order: 4,
        edges: &[],
        anchor_size: 4,
        matching_number: 0,
        anchor_set: &[0, 1, 2, 3],
        anchor_pairs: &[],
    },
    PatternInfo {
        id: PatternId::CoDiamond,
        order: 4,
        edges: &[(0, 1)],
        anchor_size: 4,
        matching_number: 1,
        anchor_set: &[0, 1, 2, 3],
        anchor_pairs: &[],
    },
    PatternInfo {
        id: PatternId::CoPaw,
        order: 4,
        edges: &[(0, 1), (1, 2)],
        anchor_size: 3,
        matching_number: 1,
        anchor_set: &[0, 2, 3],
        anchor_pairs: &[(1, (0, 2))],
    },
    PatternInfo {
        id: PatternId::CoSquare,
        order: 4,
        edges: &[(0, 1), (2, 3)],
        anchor_size: 4,
        matching_number: 2,
        anchor_set: &[0, 1, 2, 3],
        anchor_pairs: &[],
    },
    PatternInfo {
        id: PatternId::P4,
        order: 4,
        edges: &[(0, 1), (1, 2), (2, 3)],
        anchor_size: 3,
        matching_number: 2,
        anchor_set: &[0, 2, 3],
        anchor_pairs: &[(1, (0, 2))],
    },
    PatternInfo {
        id: PatternId::Claw,
        order: 4,
        edges: &[(0, 1), (0, 2), (0, 3)],
        anchor_size: 3,
        matching_number: 1,
        anchor_set: &[1, 2, 3],
        anchor_pairs: &[(0, (1, 2))],
    },
    PatternInfo {
        id: PatternId::CoClaw,
        order: 4,
        edges: &[(0, 1), (0, 2), (1, 2)],
        anchor_size: 4,
        matching_number: 1,
        anchor_set: &[0, 1, 2, 3],
        anchor_pairs: &[],
    },
    PatternInfo {
        id: PatternId::Paw,
        order: 4,
        edges: &[(0, 1), (0, 2), (0, 3), (1, 2)],
        anchor_size: 3,
        matching_number: 2,
        anchor_set: &[1, 2, 3],
        anchor_pairs: &[(0, (1, 3))],
    },
    PatternInfo {
        id: PatternId::Square,
        order: 4,
        edges: &[(0, 1), (1, 2), (2, 3), (0, 3)],
        anchor_size: 2,
        matching_number: 2,
        anchor_set: &[0, 2],
        anchor_pairs: &[(1, (0, 2)), (3, (0, 2))],
    },
    PatternInfo {
        id: PatternId::Diamond,
        order: 4,
        edges: &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)],
        anchor_size: 2,
        matching_number: 2,
        anchor_set: &[2, 3],
        anchor_pairs: &[(0, (2, 3)), (1, (2, 3))],
    },
    PatternInfo {
        id: PatternId::K4,
        order: 4,
        edges: &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
        anchor_size: 4,
        matching_number: 2,
        anchor_set: &[0, 1, 2, 3],
        anchor_pairs: &[],
    },
    PatternInfo {
        id: PatternId::Gem,
        order: 5,
        edges: &[(0, 1), (1, 2), (2, 3), (0, 4), (1, 4), (2, 4), (3, 4)],
        anchor_size: 3,
        matching_number: 2,
        anchor_set: &[0, 2, 3],
        anchor_pairs: &[(1, (0, 2)), (4, (0, 2))],
    },
];

/// A canonical witness: the pattern it realizes and the host vertices in
/// ascending order. The ascending tuple is the dedup key for enumeration;
/// internal pattern roles (e.g. which vertex is a path's midpoint) are
/// recoverable from the graph and not stored.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Occurrence {
    pub pattern: PatternId,
    pub vertices: Vec<usize>,
}

impl Occurrence {
    pub fn new(pattern: PatternId, mut vertices: Vec<usize>) -> Self {
        vertices.sort_unstable();
        Self { pattern, vertices }
    }
}

/// Classifies the subgraph induced by 3 or 4 distinct vertices.
///
/// Edge count plus the sorted degree sequence separates all eleven
/// four-vertex graphs, so no explicit isomorphism search is needed; the
/// tests cross-check this against one anyway.
pub fn classify_induced(g: &Graph, verts: &[usize]) -> Result<PatternId> {
    match verts.len() {
        3 => {
            let e = induced_edge_count(g, verts);
            Ok(match e {
                0 => PatternId::Empty3,
                1 => PatternId::CoP3,
                2 => PatternId::P3,
                _ => PatternId::K3,
            })
        }
        4 => {
            let mut deg = [0usize; 4];
            let mut e = 0;
            for i in 0..4 {
                for j in i + 1..4 {
                    if g.has_edge(verts[i], verts[j]) {
                        e += 1;
                        deg[i] += 1;
                        deg[j] += 1;
                    }
                }
            }
            deg.sort_unstable();
            Ok(match (e, deg) {
                (0, _) => PatternId::Empty4,
                (1, _) => PatternId::CoDiamond,
                (2, [0, 1, 1, 2]) => PatternId::CoPaw,
                (2, _) => PatternId::CoSquare,
                (3, [1, 1, 2, 2]) => PatternId::P4,
                (3, [1, 1, 1, 3]) => PatternId::Claw,
                (3, _) => PatternId::CoClaw,
                (4, [1, 2, 2, 3]) => PatternId::Paw,
                (4, _) => PatternId::Square,
                (5, _) => PatternId::Diamond,
                _ => PatternId::K4,
            })
        }
        k => Err(Error::InvalidParameter(format!(
            "induced classification takes 3 or 4 vertices, got {k}"
        ))),
    }
}

fn induced_edge_count(g: &Graph, verts: &[usize]) -> usize {
    let mut e = 0;
    for (i, &u) in verts.iter().enumerate() {
        for &v in &verts[i + 1..] {
            if g.has_edge(u, v) {
                e += 1;
            }
        }
    }
    e
}

/// Whether `placement` (pattern vertex i at host `placement[i]`) realizes the
/// pattern as an induced subgraph.
pub fn placement_induces(g: &Graph, info: &PatternInfo, placement: &[usize]) -> bool {
    debug_assert_eq!(placement.len(), info.order);
    for u in 0..info.order {
        for v in u + 1..info.order {
            if g.has_edge(placement[u], placement[v]) != info.has_edge(u, v) {
                return false;
            }
        }
    }
    true
}

/// Whether `placement` is the lexicographically smallest placement that
/// induces the pattern on this vertex set. Enumerators emit an occurrence
/// only from its minimal placement, which yields exactly one emission per
/// vertex set regardless of the pattern's automorphisms.
pub fn is_minimal_placement(g: &Graph, info: &PatternInfo, placement: &[usize]) -> bool {
    let mut verts = placement.to_vec();
    verts.sort_unstable();
    let mut candidate = vec![0usize; info.order];
    let mut used = vec![false; info.order];
    match first_valid_placement(g, info, &verts, &mut candidate, &mut used, 0) {
        Some(min) => min == placement,
        None => false,
    }
}

// Depth-first over placements trying hosts in ascending order; the first
// complete valid placement is the lexicographic minimum.
fn first_valid_placement(
    g: &Graph,
    info: &PatternInfo,
    verts: &[usize],
    candidate: &mut Vec<usize>,
    used: &mut Vec<bool>,
    depth: usize,
) -> Option<Vec<usize>> {
    if depth == info.order {
        return Some(candidate.clone());
    }
    'next: for i in 0..verts.len() {
        if used[i] {
            continue;
        }
        for prev in 0..depth {
            if g.has_edge(candidate[prev], verts[i]) != info.has_edge(prev, depth) {
                continue 'next;
            }
        }
        candidate[depth] = verts[i];
        used[i] = true;
        let found = first_valid_placement(g, info, verts, candidate, used, depth + 1);
        used[i] = false;
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Whether the vertex set hosts the pattern under some bijection.
pub fn first_placement_exists(g: &Graph, info: &PatternInfo, verts: &[usize]) -> bool {
    let mut sorted = verts.to_vec();
    sorted.sort_unstable();
    let mut candidate = vec![0usize; info.order];
    let mut used = vec![false; info.order];
    first_valid_placement(g, info, &sorted, &mut candidate, &mut used, 0).is_some()
}

/// Exact minimum anchor-set size by subset enumeration, together with one
/// witness set. Every vertex outside the set must have two nonadjacent
/// neighbors inside it. Supports patterns up to order 5.
pub fn min_anchor_set(info: &PatternInfo) -> (usize, Vec<usize>) {
    assert!(info.order <= 5, "anchor search supports order <= 5");
    let mut best: Option<Vec<usize>> = None;
    for mask in 0u32..(1 << info.order) {
        let set: Vec<usize> = (0..info.order).filter(|&v| mask >> v & 1 == 1).collect();
        if let Some(ref b) = best {
            if set.len() >= b.len() {
                continue;
            }
        }
        if anchor_set_valid(info, &set) {
            best = Some(set);
        }
    }
    let set = best.expect("the full vertex set is always a valid anchor set");
    (set.len(), set)
}

fn anchor_set_valid(info: &PatternInfo, set: &[usize]) -> bool {
    'vertex: for v in 0..info.order {
        if set.contains(&v) {
            continue;
        }
        for (i, &a) in set.iter().enumerate() {
            for &b in &set[i + 1..] {
                if info.has_edge(v, a) && info.has_edge(v, b) && !info.has_edge(a, b) {
                    continue 'vertex;
                }
            }
        }
        return false;
    }
    true
}
