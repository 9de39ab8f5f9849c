//! Isomorph-free enumeration of edge-ordered graphs and bigraphs.
//!
//! States are built by appending edges in increasing rank, so the rank-k
//! prefix of a state is intrinsic: the parent of a state is the state minus
//! its largest edge.  A rank-preserving isomorphism fixes every edge, hence
//! every vertex of degree >= 2, and in a bigraph the sides pin down degree-1
//! ends as well; the only freedom in a plain graph is swapping the two ends
//! of an isolated edge.  Distinct extension moves of one state therefore
//! yield non-isomorphic children as long as moves that differ only by such a
//! swap are merged, which `shadow` handles.  The DFS below thus visits every
//! isomorphism class exactly once, with no canonical-form bookkeeping.
//!
//! Vertices appear only as edge endpoints, so states have no isolated
//! vertices; callers pad with isolated vertices where they matter.

use crate::graph::{Edge, EdgeOrderedBigraph, EdgeOrderedGraph, Side, Vertex};
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Flow {
    /// Keep going: visit the children of this state.
    Extend,
    /// Skip the subtree below this state.
    Prune,
    /// Stop the whole enumeration.
    Abort,
}

#[derive(Clone, Copy, Debug)]
pub struct Limits {
    pub max_vertices: usize,
    pub max_edges: usize,
    /// Refuse moves that close a cycle.
    pub forests_only: bool,
}

impl Limits {
    pub fn new(max_vertices: usize, max_edges: usize) -> Self {
        Self {
            max_vertices,
            max_edges,
            forests_only: false,
        }
    }

    pub fn forests(max_vertices: usize, max_edges: usize) -> Self {
        Self {
            max_vertices,
            max_edges,
            forests_only: true,
        }
    }
}

/// A state of the plain-graph enumeration: edges in rank order.
#[derive(Clone, Debug, Default)]
pub struct GraphState {
    pub edges: Vec<(Vertex, Vertex)>,
    pub n: usize,
}

impl GraphState {
    pub fn to_graph(&self) -> EdgeOrderedGraph {
        let edges = self
            .edges
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| Edge {
                u,
                v,
                label: i as u64 + 1,
            })
            .collect();
        EdgeOrderedGraph::from_sorted_unchecked(self.n, edges)
    }

    fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    fn components(&self) -> Vec<usize> {
        let mut comp: Vec<usize> = (0..self.n).collect();
        // Tiny union-find, path halving.
        fn find(comp: &mut [usize], mut v: usize) -> usize {
            while comp[v] != v {
                comp[v] = comp[comp[v]];
                v = comp[v];
            }
            v
        }
        for &(u, v) in &self.edges {
            let (a, b) = (find(&mut comp, u), find(&mut comp, v));
            if a != b {
                comp[a.max(b)] = a.min(b);
            }
        }
        (0..self.n).map(|v| find(&mut comp, v)).collect()
    }

    /// The larger end of an isolated edge; the move sets below skip it, its
    /// partner stands for both.
    fn shadow(&self, deg: &[usize], v: Vertex) -> bool {
        if deg[v] != 1 {
            return false;
        }
        let &(a, b) = self
            .edges
            .iter()
            .find(|&&(a, b)| a == v || b == v)
            .expect("degree-1 vertex has an edge");
        let other = if a == v { b } else { a };
        deg[other] == 1 && v > other
    }

    fn children(&self, limits: &Limits) -> Vec<GraphState> {
        if self.edges.len() >= limits.max_edges {
            return Vec::new();
        }
        let deg = self.degrees();
        let comp = self.components();
        let adjacent = |u: Vertex, v: Vertex| {
            self.edges
                .iter()
                .any(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u))
        };
        let mut out = Vec::new();
        let mut push = |edges: &Vec<(Vertex, Vertex)>, u, v, n| {
            let mut e = edges.clone();
            e.push((u, v));
            out.push(GraphState { edges: e, n });
        };
        for u in 0..self.n {
            if self.shadow(&deg, u) {
                continue;
            }
            for v in u + 1..self.n {
                if self.shadow(&deg, v) || adjacent(u, v) {
                    continue;
                }
                if limits.forests_only && comp[u] == comp[v] {
                    continue;
                }
                push(&self.edges, u, v, self.n);
            }
        }
        if self.n < limits.max_vertices {
            for u in 0..self.n {
                if !self.shadow(&deg, u) {
                    push(&self.edges, u, self.n, self.n + 1);
                }
            }
        }
        if self.n + 2 <= limits.max_vertices {
            push(&self.edges, self.n, self.n + 1, self.n + 2);
        }
        out
    }
}

/// A state of the bigraph enumeration.  Sides make every vertex
/// distinguishable, so there is no shadow rule at all.
#[derive(Clone, Debug, Default)]
pub struct BigraphState {
    pub edges: Vec<(Vertex, Vertex)>,
    pub side: Vec<Side>,
}

impl BigraphState {
    pub fn to_bigraph(&self) -> EdgeOrderedBigraph {
        let g = GraphState {
            edges: self.edges.clone(),
            n: self.side.len(),
        }
        .to_graph();
        EdgeOrderedBigraph::new(g, self.side.clone()).expect("enumeration keeps sides proper")
    }

    fn components(&self) -> Vec<usize> {
        GraphState {
            edges: self.edges.clone(),
            n: self.side.len(),
        }
        .components()
    }

    fn children(&self, limits: &Limits) -> Vec<BigraphState> {
        if self.edges.len() >= limits.max_edges {
            return Vec::new();
        }
        let n = self.side.len();
        let comp = self.components();
        let adjacent = |u: Vertex, v: Vertex| {
            self.edges
                .iter()
                .any(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u))
        };
        let mut out = Vec::new();
        let mut push = |edges: &Vec<(Vertex, Vertex)>, side: &Vec<Side>, u, v, new: &[Side]| {
            let mut e = edges.clone();
            e.push((u, v));
            let mut s = side.clone();
            s.extend_from_slice(new);
            out.push(BigraphState { edges: e, side: s });
        };
        for u in 0..n {
            if self.side[u] != Side::Left {
                continue;
            }
            for v in 0..n {
                if self.side[v] != Side::Right || adjacent(u, v) {
                    continue;
                }
                if limits.forests_only && comp[u] == comp[v] {
                    continue;
                }
                push(&self.edges, &self.side, u, v, &[]);
            }
        }
        if n < limits.max_vertices {
            for u in 0..n {
                match self.side[u] {
                    Side::Left => push(&self.edges, &self.side, u, n, &[Side::Right]),
                    Side::Right => push(&self.edges, &self.side, n, u, &[Side::Left]),
                }
            }
        }
        if n + 2 <= limits.max_vertices {
            push(&self.edges, &self.side, n, n + 1, &[Side::Left, Side::Right]);
        }
        out
    }
}

fn dfs_graph(
    state: &GraphState,
    limits: &Limits,
    visit: &mut impl FnMut(&GraphState) -> Flow,
) -> Flow {
    for child in state.children(limits) {
        match visit(&child) {
            Flow::Extend => {
                if dfs_graph(&child, limits, visit) == Flow::Abort {
                    return Flow::Abort;
                }
            }
            Flow::Prune => {}
            Flow::Abort => return Flow::Abort,
        }
    }
    Flow::Extend
}

/// Visits one representative per isomorphism class of edge-ordered graphs
/// with 1..=max_edges edges, no isolated vertices, at most `max_vertices`
/// vertices, in a fixed depth-first order.
pub fn enumerate_graphs(limits: Limits, mut visit: impl FnMut(&GraphState) -> Flow) {
    assert!(limits.max_vertices >= 2);
    dfs_graph(&GraphState::default(), &limits, &mut visit);
}

fn dfs_bigraph(
    state: &BigraphState,
    limits: &Limits,
    visit: &mut impl FnMut(&BigraphState) -> Flow,
) -> Flow {
    for child in state.children(limits) {
        match visit(&child) {
            Flow::Extend => {
                if dfs_bigraph(&child, limits, visit) == Flow::Abort {
                    return Flow::Abort;
                }
            }
            Flow::Prune => {}
            Flow::Abort => return Flow::Abort,
        }
    }
    Flow::Extend
}

/// Bigraph counterpart of [`enumerate_graphs`].
pub fn enumerate_bigraphs(limits: Limits, mut visit: impl FnMut(&BigraphState) -> Flow) {
    assert!(limits.max_vertices >= 2);
    dfs_bigraph(&BigraphState::default(), &limits, &mut visit);
}

/// Parallel exhaustive sweep over bigraphs: `check` runs on every state and
/// returns per-state output collected in deterministic enumeration order.
/// Intended for full sweeps, so there is no pruning or abort.
pub fn par_sweep_bigraphs<T: Send>(
    limits: Limits,
    seed_depth: usize,
    check: impl Fn(&EdgeOrderedBigraph) -> Option<T> + Sync,
) -> Vec<T> {
    let mut shallow = Vec::new();
    let mut seeds = Vec::new();
    enumerate_bigraphs(limits, |state| {
        if state.edges.len() < seed_depth {
            if let Some(t) = check(&state.to_bigraph()) {
                shallow.push(t);
            }
            Flow::Extend
        } else {
            seeds.push(state.clone());
            Flow::Prune
        }
    });
    let deep: Vec<Vec<T>> = seeds
        .par_iter()
        .map(|seed| {
            let mut out = Vec::new();
            if let Some(t) = check(&seed.to_bigraph()) {
                out.push(t);
            }
            dfs_bigraph(seed, &limits, &mut |state| {
                if let Some(t) = check(&state.to_bigraph()) {
                    out.push(t);
                }
                Flow::Extend
            });
            out
        })
        .collect();
    shallow.into_iter().chain(deep.into_iter().flatten()).collect()
}

/// Parallel sweep over plain graphs, same contract as [`par_sweep_bigraphs`].
pub fn par_sweep_graphs<T: Send>(
    limits: Limits,
    seed_depth: usize,
    check: impl Fn(&EdgeOrderedGraph) -> Option<T> + Sync,
) -> Vec<T> {
    let mut shallow = Vec::new();
    let mut seeds = Vec::new();
    enumerate_graphs(limits, |state| {
        if state.edges.len() < seed_depth {
            if let Some(t) = check(&state.to_graph()) {
                shallow.push(t);
            }
            Flow::Extend
        } else {
            seeds.push(state.clone());
            Flow::Prune
        }
    });
    let deep: Vec<Vec<T>> = seeds
        .par_iter()
        .map(|seed| {
            let mut out = Vec::new();
            if let Some(t) = check(&seed.to_graph()) {
                out.push(t);
            }
            dfs_graph(seed, &limits, &mut |state| {
                if let Some(t) = check(&state.to_graph()) {
                    out.push(t);
                }
                Flow::Extend
            });
            out
        })
        .collect();
    shallow.into_iter().chain(deep.into_iter().flatten()).collect()
}

/// Advance `p` to its lexicographic successor in place. Returns false once `p`
/// is the last permutation. Shared by the brute-force test oracles.
#[cfg(test)]
pub(crate) fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::{canonical_key, canonical_key_bigraph};
    use std::collections::HashSet;

    fn count_graphs(limits: Limits, pred: impl Fn(&EdgeOrderedGraph) -> bool) -> usize {
        let mut count = 0;
        enumerate_graphs(limits, |s| {
            if pred(&s.to_graph()) {
                count += 1;
            }
            Flow::Extend
        });
        count
    }

    #[test]
    fn one_and_two_edge_classes() {
        // Two edges either share a vertex or not: two classes.
        assert_eq!(count_graphs(Limits::new(8, 1), |_| true), 1);
        assert_eq!(count_graphs(Limits::new(8, 2), |g| g.edge_count() == 2), 2);
    }

    #[test]
    fn triangle_class_is_unique() {
        // All 3! label orders of the triangle are isomorphic.
        let count = count_graphs(Limits::new(3, 3), |g| {
            g.edge_count() == 3 && g.vertex_count() == 3
        });
        assert_eq!(count, 1);
    }

    #[test]
    fn three_edge_path_classes() {
        // Edge-ordered paths on 4 vertices: 123, 132, 213 up to reading
        // direction (231, 312, 321 are re-reads), so three classes.
        let count = count_graphs(Limits::forests(4, 3), |g| {
            g.edge_count() == 3 && g.path_vertices().is_some()
        });
        assert_eq!(count, 3);
    }

    #[test]
    fn five_edge_path_classes() {
        // 5! orderings, reading direction halves them, no palindromes.
        let count = count_graphs(Limits::forests(6, 5), |g| {
            g.edge_count() == 5 && g.path_vertices().is_some()
        });
        assert_eq!(count, 60);
    }

    #[test]
    fn no_duplicate_classes_among_small_graphs() {
        let mut seen = HashSet::new();
        let mut total = 0;
        enumerate_graphs(Limits::new(10, 4), |s| {
            let key = canonical_key(&s.to_graph());
            assert!(seen.insert(key), "duplicate class visited");
            total += 1;
            Flow::Extend
        });
        assert!(total > 0);
    }

    #[test]
    fn no_duplicate_classes_among_small_bigraphs() {
        let mut seen = HashSet::new();
        enumerate_bigraphs(Limits::new(10, 4), |s| {
            let key = canonical_key_bigraph(&s.to_bigraph());
            assert!(seen.insert(key), "duplicate bigraph class visited");
            Flow::Extend
        });
    }

    #[test]
    fn bigraph_counts_small() {
        // By hand: one single-edge class; two edges share a Left vertex,
        // share a Right vertex, or nothing: three classes.
        let mut per_m = [0usize; 3];
        enumerate_bigraphs(Limits::new(8, 2), |s| {
            per_m[s.edges.len()] += 1;
            Flow::Extend
        });
        assert_eq!(per_m[1], 1);
        assert_eq!(per_m[2], 3);
    }

    #[test]
    fn exhaustiveness_against_brute_force_quotient() {
        // Count 3-edge classes a second way: generate every labeled graph on
        // exactly the vertices that its edges cover, quotient by canonical
        // key, and compare.
        let mut brute = HashSet::new();
        let pairs: Vec<(usize, usize)> = (0..6).flat_map(|u| (u + 1..6).map(move |v| (u, v))).collect();
        for i in 0..pairs.len() {
            for j in 0..pairs.len() {
                for k in 0..pairs.len() {
                    if i == j || j == k || i == k {
                        continue;
                    }
                    let picked = [pairs[i], pairs[j], pairs[k]];
                    let mut verts: Vec<usize> = picked.iter().flat_map(|&(u, v)| [u, v]).collect();
                    verts.sort_unstable();
                    verts.dedup();
                    let relabel = |x: usize| verts.iter().position(|&y| y == x).unwrap();
                    let edges: Vec<(usize, usize, u64)> = picked
                        .iter()
                        .enumerate()
                        .map(|(r, &(u, v))| (relabel(u), relabel(v), r as u64 + 1))
                        .collect();
                    let g = EdgeOrderedGraph::new(verts.len(), edges).unwrap();
                    brute.insert(canonical_key(&g));
                }
            }
        }
        let counted = count_graphs(Limits::new(6, 3), |g| g.edge_count() == 3);
        assert_eq!(counted, brute.len());
    }

    #[test]
    fn par_sweep_matches_sequential() {
        let limits = Limits::new(10, 4);
        let seq = {
            let mut v = Vec::new();
            enumerate_bigraphs(limits, |s| {
                v.push(s.edges.len());
                Flow::Extend
            });
            v
        };
        let par = par_sweep_bigraphs(limits, 2, |b| Some(b.edge_count()));
        assert_eq!(seq.len(), par.len());
        // Same multiset of edge counts (order differs between phases).
        let mut a = seq.clone();
        let mut b = par.clone();
        a.sort_unstable();
        b.sort_unstable();
        assert_eq!(a, b);
    }
}
