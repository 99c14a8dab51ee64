//! Immutable simple undirected graph with sorted adjacency lists.
//!
//! Vertices are dense integers `0..n`. All algorithms in this crate index by
//! vertex, share graphs freely across threads, and rely on the adjacency
//! lists being strictly ascending.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate pairs (in either
    /// orientation) are collapsed; out-of-range endpoints and self-loops are
    /// rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut m = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            m += list.len();
        }
        Ok(Self { adj, m: m / 2 })
    }

    pub fn empty(n: usize) -> Self {
        Self {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    pub fn complete(n: usize) -> Self {
        let adj = (0..n)
            .map(|v| (0..n).filter(|&u| u != v).collect())
            .collect();
        Self {
            adj,
            m: n * n.saturating_sub(1) / 2,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Neighbors of `v` in strictly ascending order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// Adjacency test via binary search on the shorter list.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if u == v {
            return false;
        }
        let (a, b) = if self.adj[u].len() <= self.adj[v].len() {
            (u, v)
        } else {
            (v, u)
        };
        self.adj[a].binary_search(&b).is_ok()
    }

    /// All edges as ascending pairs, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    /// Vertices adjacent to both `u` and `v`, by merging the two sorted
    /// neighbor lists in `O(deg(u) + deg(v))` time.
    pub fn common_neighbors(&self, u: usize, v: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let (a, b) = (&self.adj[u], &self.adj[v]);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out
    }

    /// Induced subgraph on `verts` plus the map from new vertex ids back to
    /// the originals. `verts` must contain distinct in-range vertices; they
    /// are sorted ascending so that `mapping` is monotone.
    pub fn induced(&self, verts: &[usize]) -> (Graph, Vec<usize>) {
        let mut mapping: Vec<usize> = verts.to_vec();
        mapping.sort_unstable();
        mapping.dedup();
        let mut position = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in mapping.iter().enumerate() {
            position[v] = i;
        }
        let mut adj = vec![Vec::new(); mapping.len()];
        let mut m = 0;
        for (i, &v) in mapping.iter().enumerate() {
            for &w in &self.adj[v] {
                let p = position[w];
                if p != usize::MAX {
                    adj[i].push(p);
                    m += 1;
                }
            }
        }
        (Graph { adj, m: m / 2 }, mapping)
    }

    pub fn complement(&self) -> Graph {
        let n = self.vertex_count();
        let mut adj = vec![Vec::new(); n];
        for v in 0..n {
            let mut it = self.adj[v].iter().copied().peekable();
            for u in 0..n {
                if it.peek() == Some(&u) {
                    it.next();
                } else if u != v {
                    adj[v].push(u);
                }
            }
        }
        let m = n * n.saturating_sub(1) / 2 - self.m;
        Graph { adj, m }
    }

    /// Connected components; each component's vertex list ascending, the
    /// components ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            stack.push(s);
            let mut comp = Vec::new();
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Connected components of the complement graph, computed without
    /// materializing the complement: a BFS step partitions the pool of
    /// still-unvisited vertices into neighbors (kept) and non-neighbors
    /// (reached), so each vertex is removed from the pool exactly once.
    pub fn co_components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut pool: Vec<usize> = (0..n).collect();
        let mut out = Vec::new();
        let mut queue = std::collections::VecDeque::new();
        let mut is_neighbor = vec![false; n];
        while let Some(start) = pool.pop() {
            let mut comp = vec![start];
            queue.push_back(start);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adj[v] {
                    is_neighbor[w] = true;
                }
                let mut kept = Vec::with_capacity(pool.len());
                for &u in &pool {
                    if is_neighbor[u] {
                        kept.push(u);
                    } else {
                        comp.push(u);
                        queue.push_back(u);
                    }
                }
                pool = kept;
                for &w in &self.adj[v] {
                    is_neighbor[w] = false;
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out.sort_by_key(|c| c[0]);
        out
    }

    /// Whether `verts` (distinct vertices) induce a clique.
    pub fn is_clique(&self, verts: &[usize]) -> bool {
        for (i, &u) in verts.iter().enumerate() {
            for &v in &verts[i + 1..] {
                if !self.has_edge(u, v) {
                    return false;
                }
            }
        }
        true
    }
}
