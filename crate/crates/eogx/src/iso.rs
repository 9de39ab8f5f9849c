//! Isomorphism of edge-ordered graphs via a cheap canonical code.
//!
//! An isomorphism must map the rank-k edge to the rank-k edge, so it
//! preserves each vertex's set of incident ranks.  Two distinct vertices can
//! share that set only when it is a singleton, i.e. they are the two ends of
//! an isolated edge; in every other case the set pins the vertex down.  Sorting
//! vertices by incident-rank set therefore yields positions that are unique up
//! to swapping ends of isolated edges, and such a swap exchanges two adjacent
//! positions appearing in exactly one (sorted) code entry.  The code below is
//! hence a true canonical form, computed in near-linear time.
//!
//! In a bigraph the two ends of an edge lie on different sides, so sorting by
//! (side, incident ranks) leaves no ambiguity at all.

use crate::graph::{EdgeOrderedBigraph, EdgeOrderedGraph, Side};

/// Canonical key: vertex count, edge count, code.
pub type Key = (usize, usize, Vec<(u32, u32)>);

pub fn canonical_key(g: &EdgeOrderedGraph) -> Key {
    let mut order: Vec<usize> = (0..g.vertex_count())
        .filter(|&v| g.degree(v) > 0)
        .collect();
    order.sort_by(|&a, &b| g.incident(a).cmp(g.incident(b)));
    let mut pos = vec![0u32; g.vertex_count()];
    for (p, &v) in order.iter().enumerate() {
        pos[v] = p as u32;
    }
    let code = g
        .edges()
        .iter()
        .map(|e| {
            let (a, b) = (pos[e.u], pos[e.v]);
            (a.min(b), a.max(b))
        })
        .collect();
    (g.vertex_count(), g.edge_count(), code)
}

pub fn isomorphic(a: &EdgeOrderedGraph, b: &EdgeOrderedGraph) -> bool {
    canonical_key(a) == canonical_key(b)
}

/// Canonical key of a bigraph; the third component counts Left vertices and
/// code entries are (left position, right position).
pub type BigraphKey = (usize, usize, usize, Vec<(u32, u32)>);

pub fn canonical_key_bigraph(b: &EdgeOrderedBigraph) -> BigraphKey {
    let g = b.graph();
    let mut order: Vec<usize> = (0..g.vertex_count())
        .filter(|&v| g.degree(v) > 0)
        .collect();
    order.sort_by(|&x, &y| (b.side(x), g.incident(x)).cmp(&(b.side(y), g.incident(y))));
    let mut pos = vec![0u32; g.vertex_count()];
    for (p, &v) in order.iter().enumerate() {
        pos[v] = p as u32;
    }
    let left_total = (0..g.vertex_count())
        .filter(|&v| b.side(v) == Side::Left)
        .count();
    let code = (0..g.edge_count())
        .map(|i| (pos[b.left_end(i)], pos[b.right_end(i)]))
        .collect();
    (g.vertex_count(), g.edge_count(), left_total, code)
}

pub fn isomorphic_bigraphs(a: &EdgeOrderedBigraph, b: &EdgeOrderedBigraph) -> bool {
    canonical_key_bigraph(a) == canonical_key_bigraph(b)
}
