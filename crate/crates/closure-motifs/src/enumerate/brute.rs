//! Brute-force enumeration over matchings: choose as many edges as the
//! pattern's matching number plus loose vertices for the rest, check the
//! induced subgraph, and emit each vertex set from its lexicographically
//! smallest producing choice.

use super::Emitter;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pattern::{classify_induced, Occurrence, PatternId};
use crate::steps::StepCounter;
use crate::Visit;

pub fn brute_force_matching(
    g: &Graph,
    pattern: PatternId,
    steps: &mut StepCounter,
    visitor: &mut dyn FnMut(&Occurrence) -> Visit,
) -> Result<u64> {
    let info = pattern.info();
    if info.order > 4 {
        return Err(Error::UnsupportedPattern(pattern.name().into()));
    }
    let matched = info.matching_number;
    let loose = info.order - 2 * matched;
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut emitter = Emitter::new(pattern, visitor);
    let mut edge_choice: Vec<usize> = Vec::with_capacity(matched);
    let _ = choose_edges(
        g,
        info.id,
        &edges,
        loose,
        matched,
        0,
        &mut edge_choice,
        steps,
        &mut emitter,
    );
    Ok(emitter.count)
}

#[allow(clippy::too_many_arguments)]
fn choose_edges(
    g: &Graph,
    pattern: PatternId,
    edges: &[(usize, usize)],
    loose: usize,
    matched: usize,
    start: usize,
    edge_choice: &mut Vec<usize>,
    steps: &mut StepCounter,
    emitter: &mut Emitter,
) -> Visit {
    if edge_choice.len() == matched {
        let mut base: Vec<usize> = edge_choice
            .iter()
            .flat_map(|&i| [edges[i].0, edges[i].1])
            .collect();
        base.sort_unstable();
        if base.windows(2).any(|w| w[0] == w[1]) {
            return Visit::Continue(()); // chosen edges overlap
        }
        return choose_loose(g, pattern, edges, loose, &base, edge_choice, 0, &mut Vec::new(), steps, emitter);
    }
    for i in start..edges.len() {
        edge_choice.push(i);
        if choose_edges(
            g,
            pattern,
            edges,
            loose,
            matched,
            i + 1,
            edge_choice,
            steps,
            emitter,
        )
        .is_break()
        {
            return Visit::Break(());
        }
        edge_choice.pop();
    }
    Visit::Continue(())
}

#[allow(clippy::too_many_arguments)]
fn choose_loose(
    g: &Graph,
    pattern: PatternId,
    edges: &[(usize, usize)],
    loose: usize,
    base: &[usize],
    edge_choice: &[usize],
    start: usize,
    loose_choice: &mut Vec<usize>,
    steps: &mut StepCounter,
    emitter: &mut Emitter,
) -> Visit {
    if loose_choice.len() == loose {
        let mut verts: Vec<usize> = base.to_vec();
        verts.extend_from_slice(loose_choice);
        verts.sort_unstable();
        steps.edge_probes += (verts.len() * (verts.len() - 1) / 2) as u64;
        if classify_induced(g, &verts).expect("valid size") != pattern {
            return Visit::Continue(());
        }
        if is_minimal_choice(g, edges, edge_choice, loose_choice, &verts) {
            return emitter.emit(&verts);
        }
        return Visit::Continue(());
    }
    for v in start..g.vertex_count() {
        if base.contains(&v) {
            continue;
        }
        loose_choice.push(v);
        if choose_loose(
            g,
            pattern,
            edges,
            loose,
            base,
            edge_choice,
            v + 1,
            loose_choice,
            steps,
            emitter,
        )
        .is_break()
        {
            return Visit::Break(());
        }
        loose_choice.pop();
    }
    Visit::Continue(())
}

/// The same vertex set is produced by every matching of the right size
/// inside it (with the leftover vertices as the loose choice); only the
/// lexicographically smallest producing choice emits.
fn is_minimal_choice(
    g: &Graph,
    edges: &[(usize, usize)],
    edge_choice: &[usize],
    loose_choice: &[usize],
    verts: &[usize],
) -> bool {
    let matched = edge_choice.len();
    let inner: Vec<usize> = verts
        .iter()
        .enumerate()
        .flat_map(|(i, &u)| verts[i + 1..].iter().map(move |&v| (u, v)))
        .filter(|&(u, v)| g.has_edge(u, v))
        .map(|e| edges.binary_search(&e).expect("edge exists"))
        .collect();
    let mut best: Option<(Vec<usize>, Vec<usize>)> = None;
    let mut stack: Vec<usize> = Vec::with_capacity(matched);
    pick_matchings(edges, &inner, verts, matched, 0, &mut stack, &mut best);
    match best {
        Some((e, l)) => e.as_slice() == edge_choice && l == loose_choice,
        None => false,
    }
}

fn pick_matchings(
    edges: &[(usize, usize)],
    inner: &[usize],
    verts: &[usize],
    matched: usize,
    start: usize,
    stack: &mut Vec<usize>,
    best: &mut Option<(Vec<usize>, Vec<usize>)>,
) {
    if stack.len() == matched {
        let mut used: Vec<usize> = stack
            .iter()
            .flat_map(|&i| [edges[i].0, edges[i].1])
            .collect();
        used.sort_unstable();
        if used.windows(2).any(|w| w[0] == w[1]) {
            return;
        }
        let rest: Vec<usize> = verts.iter().copied().filter(|v| !used.contains(v)).collect();
        let candidate = (stack.clone(), rest);
        if best.as_ref().map_or(true, |b| candidate < *b) {
            *best = Some(candidate);
        }
        return;
    }
    for idx in start..inner.len() {
        stack.push(inner[idx]);
        pick_matchings(edges, inner, verts, matched, idx + 1, stack, best);
        stack.pop();
    }
}
