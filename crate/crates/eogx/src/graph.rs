//! Core types: edge-ordered graphs and their properly two-colored variant.

use crate::{Error, Result};

pub type Vertex = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub u: Vertex,
    pub v: Vertex,
    pub label: u64,
}

impl Edge {
    pub fn touches(&self, v: Vertex) -> bool {
        self.u == v || self.v == v
    }

    pub fn other_end(&self, v: Vertex) -> Vertex {
        debug_assert!(self.touches(v));
        if self.u == v {
            self.v
        } else {
            self.u
        }
    }
}

/// A simple graph with injectively labeled edges.  Edges are stored in
/// ascending label order, so the index of an edge is its rank minus one.
/// Vertex names are kept only for I/O; algorithms use indices.
#[derive(Clone, Debug)]
pub struct EdgeOrderedGraph {
    names: Option<Vec<String>>,
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<usize>>,
}

impl EdgeOrderedGraph {
    pub fn new(n: usize, edges: Vec<(Vertex, Vertex, u64)>) -> Result<Self> {
        Self::build(None, n, edges)
    }

    pub fn with_names(names: Vec<String>, edges: Vec<(Vertex, Vertex, u64)>) -> Result<Self> {
        let n = names.len();
        Self::build(Some(names), n, edges)
    }

    fn build(
        names: Option<Vec<String>>,
        n: usize,
        raw: Vec<(Vertex, Vertex, u64)>,
    ) -> Result<Self> {
        let mut edges: Vec<Edge> = Vec::with_capacity(raw.len());
        for (u, v, label) in raw {
            if u >= n {
                return Err(Error::VertexRange(u));
            }
            if v >= n {
                return Err(Error::VertexRange(v));
            }
            edges.push(Edge { u, v, label });
        }
        let name_of = |g: &Self, v: Vertex| g.name(v);
        let mut g = Self {
            names,
            n,
            edges,
            adj: Vec::new(),
        };
        for e in &g.edges {
            if e.u == e.v {
                return Err(Error::SelfLoop(name_of(&g, e.u)));
            }
        }
        g.edges.sort_by_key(|e| e.label);
        for w in g.edges.windows(2) {
            if w[0].label == w[1].label {
                return Err(Error::DuplicateLabel(w[0].label));
            }
        }
        let mut pairs: Vec<(Vertex, Vertex)> = g
            .edges
            .iter()
            .map(|e| (e.u.min(e.v), e.u.max(e.v)))
            .collect();
        pairs.sort_unstable();
        for w in pairs.windows(2) {
            if w[0] == w[1] {
                return Err(Error::ParallelEdge(name_of(&g, w[0].0), name_of(&g, w[0].1)));
            }
        }
        g.adj = build_adjacency(g.n, &g.edges);
        Ok(g)
    }

    /// Construction fast path for the enumerator: `edges` must already be
    /// ascending by label and free of loops, parallels and duplicates.
    pub(crate) fn from_sorted_unchecked(n: usize, edges: Vec<Edge>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0].label < w[1].label));
        let adj = build_adjacency(n, &edges);
        Self {
            names: None,
            n,
            edges,
            adj,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in ascending label order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> &Edge {
        &self.edges[i]
    }

    pub fn name(&self, v: Vertex) -> String {
        match &self.names {
            Some(names) => names[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn has_names(&self) -> bool {
        self.names.is_some()
    }

    /// Indices of the edges at `v`, ascending by label.
    pub fn incident(&self, v: Vertex) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn edges_adjacent(&self, i: usize, j: usize) -> bool {
        let (a, b) = (&self.edges[i], &self.edges[j]);
        a.touches(b.u) || a.touches(b.v)
    }

    /// Same graph with labels replaced by ranks `1..=m`.
    pub fn normalized(&self) -> Self {
        let edges = self
            .edges
            .iter()
            .enumerate()
            .map(|(i, e)| Edge {
                u: e.u,
                v: e.v,
                label: i as u64 + 1,
            })
            .collect();
        Self {
            names: self.names.clone(),
            n: self.n,
            edges,
            adj: self.adj.clone(),
        }
    }

    /// Same underlying graph with the edge order reversed: the edge of rank
    /// `r` gets label `m + 1 - r`.
    pub fn reversed(&self) -> Self {
        let m = self.edges.len() as u64;
        let edges = self
            .edges
            .iter()
            .enumerate()
            .rev()
            .map(|(i, e)| Edge {
                u: e.u,
                v: e.v,
                label: m - i as u64,
            })
            .collect();
        let mut g = Self {
            names: self.names.clone(),
            n: self.n,
            edges,
            adj: Vec::new(),
        };
        g.adj = build_adjacency(g.n, &g.edges);
        g
    }

    /// A vertex is close when its incident edges form an interval of the
    /// edge order.  Vertices of degree at most one are close.
    pub fn is_close(&self, v: Vertex) -> bool {
        let inc = &self.adj[v];
        match (inc.first(), inc.last()) {
            (Some(&lo), Some(&hi)) => hi - lo == inc.len() - 1,
            _ => true,
        }
    }

    pub fn close_vertices(&self) -> Vec<Vertex> {
        (0..self.n).filter(|&v| self.is_close(v)).collect()
    }

    /// Pairs of edge indices adjacent in the edge order.
    pub fn consecutive_pairs(&self) -> impl Iterator<Item = (usize, usize)> {
        (0..self.edges.len().saturating_sub(1)).map(|i| (i, i + 1))
    }

    /// Component id per vertex, numbered by first appearance.
    pub fn components(&self) -> Vec<usize> {
        let mut comp = vec![usize::MAX; self.n];
        let mut next = 0;
        let mut stack = Vec::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = next;
            stack.push(s);
            while let Some(v) = stack.pop() {
                for &ei in &self.adj[v] {
                    let w = self.edges[ei].other_end(v);
                    if comp[w] == usize::MAX {
                        comp[w] = next;
                        stack.push(w);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().iter().all(|&c| c == 0)
    }

    pub fn is_forest(&self) -> bool {
        let comp = self.components();
        let comps = comp.iter().copied().max().map_or(0, |c| c + 1);
        // Acyclic iff every component is a tree: n - #components == m.
        self.n - comps == self.edges.len()
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.n == self.edges.len() + 1
    }

    /// The vertices in path order if the graph is a path (possibly trivial).
    /// Starts at the endpoint with the smaller index.
    pub fn path_vertices(&self) -> Option<Vec<Vertex>> {
        if self.n == 0 || !self.is_connected() || !self.is_forest() {
            return None;
        }
        if (0..self.n).any(|v| self.degree(v) > 2) {
            return None;
        }
        if self.n == 1 {
            return Some(vec![0]);
        }
        let start = (0..self.n).find(|&v| self.degree(v) == 1)?;
        let mut order = Vec::with_capacity(self.n);
        let mut prev = usize::MAX;
        let mut cur = start;
        loop {
            order.push(cur);
            let next = self.adj[cur]
                .iter()
                .map(|&ei| self.edges[ei].other_end(cur))
                .find(|&w| w != prev);
            match next {
                Some(w) => {
                    prev = cur;
                    cur = w;
                }
                None => break,
            }
        }
        if order.len() == self.n {
            Some(order)
        } else {
            None
        }
    }

    /// Edge ranks (1-based) read along the path.
    pub fn path_ranks(&self) -> Option<Vec<usize>> {
        let order = self.path_vertices()?;
        let mut ranks = Vec::with_capacity(order.len().saturating_sub(1));
        for w in order.windows(2) {
            let ei = self.adj[w[0]]
                .iter()
                .copied()
                .find(|&ei| self.edges[ei].other_end(w[0]) == w[1])
                .expect("consecutive path vertices are adjacent");
            ranks.push(ei + 1);
        }
        Some(ranks)
    }

    /// The two proper two-colorings of a connected bipartite graph, as
    /// bigraphs.  The first colors vertex 0 `Left`, the second `Right`.
    pub fn bipartitions(&self) -> Result<[EdgeOrderedBigraph; 2]> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let side = self.two_color().ok_or(Error::NotBipartite)?;
        let flipped: Vec<Side> = side.iter().map(|s| s.flipped()).collect();
        Ok([
            EdgeOrderedBigraph::new(self.clone(), side)?,
            EdgeOrderedBigraph::new(self.clone(), flipped)?,
        ])
    }

    /// A proper 2-coloring with vertex 0 of each component `Left`, if one exists.
    pub(crate) fn two_color(&self) -> Option<Vec<Side>> {
        let mut side: Vec<Option<Side>> = vec![None; self.n];
        let mut stack = Vec::new();
        for s in 0..self.n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(Side::Left);
            stack.push(s);
            while let Some(v) = stack.pop() {
                let sv = side[v].unwrap();
                for &ei in &self.adj[v] {
                    let w = self.edges[ei].other_end(v);
                    match side[w] {
                        None => {
                            side[w] = Some(sv.flipped());
                            stack.push(w);
                        }
                        Some(sw) if sw == sv => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(Option::unwrap).collect())
    }

    /// Subgraph keeping the flagged edges and every vertex.  Labels are kept,
    /// so ranks renumber while relative order is preserved.
    pub fn edge_subgraph(&self, keep: &[bool]) -> Self {
        debug_assert_eq!(keep.len(), self.edges.len());
        let edges: Vec<Edge> = self
            .edges
            .iter()
            .enumerate()
            .filter(|(i, _)| keep[*i])
            .map(|(_, e)| *e)
            .collect();
        let adj = build_adjacency(self.n, &edges);
        Self {
            names: self.names.clone(),
            n: self.n,
            edges,
            adj,
        }
    }

    /// Same graph without isolated vertices; returns the old-to-new vertex map.
    pub fn shed_isolated(&self) -> (Self, Vec<Option<Vertex>>) {
        let mut map: Vec<Option<Vertex>> = vec![None; self.n];
        let mut names = Vec::new();
        let mut next = 0;
        for v in 0..self.n {
            if !self.adj[v].is_empty() {
                map[v] = Some(next);
                if self.names.is_some() {
                    names.push(self.name(v));
                }
                next += 1;
            }
        }
        let edges: Vec<Edge> = self
            .edges
            .iter()
            .map(|e| Edge {
                u: map[e.u].unwrap(),
                v: map[e.v].unwrap(),
                label: e.label,
            })
            .collect();
        let adj = build_adjacency(next, &edges);
        (
            Self {
                names: self.names.as_ref().map(|_| names),
                n: next,
                edges,
                adj,
            },
            map,
        )
    }
}

fn build_adjacency(n: usize, edges: &[Edge]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for (i, e) in edges.iter().enumerate() {
        adj[e.u].push(i);
        adj[e.v].push(i);
    }
    adj
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn flipped(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

/// An edge-ordered graph with a proper Left/Right coloring, so every edge has
/// exactly one end on each side.
#[derive(Clone, Debug)]
pub struct EdgeOrderedBigraph {
    graph: EdgeOrderedGraph,
    side: Vec<Side>,
}

impl EdgeOrderedBigraph {
    pub fn new(graph: EdgeOrderedGraph, side: Vec<Side>) -> Result<Self> {
        debug_assert_eq!(side.len(), graph.vertex_count());
        for e in graph.edges() {
            if side[e.u] == side[e.v] {
                return Err(Error::ImproperColoring(graph.name(e.u), graph.name(e.v)));
            }
        }
        Ok(Self { graph, side })
    }

    pub fn graph(&self) -> &EdgeOrderedGraph {
        &self.graph
    }

    pub fn side(&self, v: Vertex) -> Side {
        self.side[v]
    }

    pub fn sides(&self) -> &[Side] {
        &self.side
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    pub fn left_end(&self, edge_idx: usize) -> Vertex {
        let e = self.graph.edge(edge_idx);
        if self.side[e.u] == Side::Left {
            e.u
        } else {
            e.v
        }
    }

    pub fn right_end(&self, edge_idx: usize) -> Vertex {
        let e = self.graph.edge(edge_idx);
        if self.side[e.u] == Side::Right {
            e.u
        } else {
            e.v
        }
    }

    pub fn end(&self, edge_idx: usize, s: Side) -> Vertex {
        match s {
            Side::Left => self.left_end(edge_idx),
            Side::Right => self.right_end(edge_idx),
        }
    }

    pub fn normalized(&self) -> Self {
        Self {
            graph: self.graph.normalized(),
            side: self.side.clone(),
        }
    }

    pub fn reversed(&self) -> Self {
        Self {
            graph: self.graph.reversed(),
            side: self.side.clone(),
        }
    }

    /// Same order, sides exchanged.
    pub fn side_swapped(&self) -> Self {
        Self {
            graph: self.graph.clone(),
            side: self.side.iter().map(|s| s.flipped()).collect(),
        }
    }

    pub fn edge_subgraph(&self, keep: &[bool]) -> Self {
        Self {
            graph: self.graph.edge_subgraph(keep),
            side: self.side.clone(),
        }
    }

    pub fn shed_isolated(&self) -> (Self, Vec<Option<Vertex>>) {
        let (graph, map) = self.graph.shed_isolated();
        let mut side = vec![Side::Left; graph.vertex_count()];
        for v in 0..self.side.len() {
            if let Some(nv) = map[v] {
                side[nv] = self.side[v];
            }
        }
        (Self { graph, side }, map)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_path;

    fn graph(n: usize, edges: &[(usize, usize, u64)]) -> EdgeOrderedGraph {
        EdgeOrderedGraph::new(n, edges.to_vec()).unwrap()
    }

    #[test]
    fn builder_rejects_invalid_input() {
        assert!(matches!(
            EdgeOrderedGraph::new(2, vec![(0, 0, 1)]),
            Err(Error::SelfLoop(_))
        ));
        assert!(matches!(
            EdgeOrderedGraph::new(2, vec![(0, 1, 1), (1, 0, 2)]),
            Err(Error::ParallelEdge(_, _))
        ));
        assert!(matches!(
            EdgeOrderedGraph::new(3, vec![(0, 1, 5), (1, 2, 5)]),
            Err(Error::DuplicateLabel(5))
        ));
        assert!(matches!(
            EdgeOrderedGraph::new(2, vec![(0, 3, 1)]),
            Err(Error::VertexRange(3))
        ));
    }

    #[test]
    fn edges_are_sorted_by_label() {
        let g = graph(3, &[(1, 2, 30), (0, 1, 10)]);
        let labels: Vec<u64> = g.edges().iter().map(|e| e.label).collect();
        assert_eq!(labels, vec![10, 30]);
        assert_eq!(g.normalized().edges()[1].label, 2);
    }

    #[test]
    fn reverse_flips_ranks() {
        let g = graph(4, &[(0, 1, 2), (1, 2, 7), (2, 3, 40)]);
        let r = g.reversed();
        // Smallest edge of the reverse is the old largest.
        assert_eq!(r.edge(0).u.min(r.edge(0).v), 2);
        let rr = r.reversed().normalized();
        let gn = g.normalized();
        for (a, b) in rr.edges().iter().zip(gn.edges()) {
            assert_eq!(a, b);
        }
    }

    #[test]
    fn close_vertices_on_p4_213() {
        // Path a-b-c-d with labels 2,1,3: the shared vertex of edges 1 and 3
        // is not close, everything else is.
        let g = parse_path("P:213").unwrap();
        assert_eq!(g.close_vertices(), vec![0, 1, 3]);
        assert!(!g.is_close(2));
    }

    #[test]
    fn degree_one_and_isolated_are_close() {
        let g = graph(4, &[(0, 1, 1), (1, 2, 3)]);
        assert!(g.is_close(0));
        assert!(g.is_close(3));
    }

    #[test]
    fn structure_queries() {
        let path = parse_path("P:132").unwrap();
        assert!(path.is_tree());
        assert!(path.is_forest());
        assert_eq!(path.path_vertices(), Some(vec![0, 1, 2, 3]));
        assert_eq!(path.path_ranks(), Some(vec![1, 3, 2]));

        let triangle = graph(3, &[(0, 1, 1), (1, 2, 2), (0, 2, 3)]);
        assert!(triangle.is_connected());
        assert!(!triangle.is_forest());
        assert_eq!(triangle.path_vertices(), None);

        let forest = graph(5, &[(0, 1, 1), (2, 3, 2)]);
        assert!(!forest.is_connected());
        assert!(forest.is_forest());
        assert!(!forest.is_tree());

        let star = graph(4, &[(0, 1, 1), (0, 2, 2), (0, 3, 3)]);
        assert_eq!(star.path_vertices(), None);
    }

    #[test]
    fn bipartitions_of_a_path() {
        let g = parse_path("P:213").unwrap();
        let [a, b] = g.bipartitions().unwrap();
        assert_eq!(a.side(0), Side::Left);
        assert_eq!(b.side(0), Side::Right);
        for v in 0..4 {
            assert_eq!(a.side(v).flipped(), b.side(v));
        }
    }

    #[test]
    fn bipartitions_reject_odd_cycles_and_disconnected() {
        let triangle = graph(3, &[(0, 1, 1), (1, 2, 2), (0, 2, 3)]);
        assert!(matches!(triangle.bipartitions(), Err(Error::NotBipartite)));
        let forest = graph(4, &[(0, 1, 1), (2, 3, 2)]);
        assert!(matches!(forest.bipartitions(), Err(Error::Disconnected)));
    }

    #[test]
    fn bigraph_ends_follow_sides() {
        let g = parse_path("P:12").unwrap();
        let [a, _] = g.bipartitions().unwrap();
        assert_eq!(a.left_end(0), 0);
        assert_eq!(a.right_end(0), 1);
        assert_eq!(a.left_end(1), 2);
        let swapped = a.side_swapped();
        assert_eq!(swapped.left_end(0), 1);
    }

    #[test]
    fn bigraph_rejects_improper_coloring() {
        let g = parse_path("P:12").unwrap();
        let bad = vec![Side::Left, Side::Left, Side::Right];
        assert!(matches!(
            EdgeOrderedBigraph::new(g, bad),
            Err(Error::ImproperColoring(_, _))
        ));
    }

    #[test]
    fn edge_subgraph_keeps_vertices_and_order() {
        let g = parse_path("P:3142").unwrap();
        let keep = vec![true, false, true, true];
        let s = g.edge_subgraph(&keep);
        assert_eq!(s.vertex_count(), 5);
        assert_eq!(s.edge_count(), 3);
        let labels: Vec<u64> = s.edges().iter().map(|e| e.label).collect();
        assert_eq!(labels, vec![1, 3, 4]);
        // Dropping label 2 = the last path edge isolates the far endpoint.
        let (shed, _) = s.shed_isolated();
        assert_eq!(shed.vertex_count(), 4);
    }

    #[test]
    fn shed_isolated_drops_only_isolated() {
        let g = graph(5, &[(1, 3, 4), (3, 4, 9)]);
        let (s, map) = g.shed_isolated();
        assert_eq!(s.vertex_count(), 3);
        assert_eq!(map[0], None);
        assert_eq!(map[1], Some(0));
        assert_eq!(map[3], Some(1));
    }
}
