//! Order-preserving subgraph containment.
//!
//! `G` contains `H` when some injection of `V(H)` into `V(G)` maps edges to
//! edges so that the relative order of any two edge labels is preserved.
//! Equivalently the k-th smallest edge of `H` maps to a `G`-edge, and those
//! images are ascending in rank.  The search places `H`'s edges in rank order,
//! scanning `G`'s edges in rank order past the previous image, which makes
//! prefixes prunable: once a partial placement fails there is no need to look
//! at larger ranks for earlier edges again on that branch.

use crate::graph::{EdgeOrderedBigraph, EdgeOrderedGraph, Vertex};
use crate::{Error, Result};

/// A witness embedding: `vertex_map[h_vertex] = g_vertex` and
/// `edge_map[h_edge_idx] = g_edge_idx` (both by rank index).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    pub vertex_map: Vec<Vertex>,
    pub edge_map: Vec<usize>,
}

impl Embedding {
    /// Re-checks the embedding against the two graphs.
    pub fn is_valid(&self, g: &EdgeOrderedGraph, h: &EdgeOrderedGraph) -> bool {
        if self.vertex_map.len() != h.vertex_count() || self.edge_map.len() != h.edge_count() {
            return false;
        }
        let mut used = vec![false; g.vertex_count()];
        for &gv in &self.vertex_map {
            if gv >= g.vertex_count() || used[gv] {
                return false;
            }
            used[gv] = true;
        }
        let mut prev = None;
        for (hi, &gi) in self.edge_map.iter().enumerate() {
            if gi >= g.edge_count() || prev.is_some_and(|p| gi <= p) {
                return false;
            }
            prev = Some(gi);
            let he = h.edge(hi);
            let ge = g.edge(gi);
            let (a, b) = (self.vertex_map[he.u], self.vertex_map[he.v]);
            if !(ge.u == a && ge.v == b || ge.u == b && ge.v == a) {
                return false;
            }
        }
        true
    }

    pub fn is_valid_bigraph(&self, g: &EdgeOrderedBigraph, h: &EdgeOrderedBigraph) -> bool {
        self.is_valid(g.graph(), h.graph())
            && self
                .vertex_map
                .iter()
                .enumerate()
                .all(|(hv, &gv)| h.side(hv) == g.side(gv))
    }
}

struct Search<'a> {
    g: &'a EdgeOrderedGraph,
    h: &'a EdgeOrderedGraph,
    /// Sides of g/h vertices when matching bigraphs.
    g_side: Option<&'a [crate::graph::Side]>,
    h_side: Option<&'a [crate::graph::Side]>,
    /// When set, the largest edge of `h` must map to the largest edge of `g`.
    anchor_top: bool,
    vmap: Vec<Option<Vertex>>,
    used: Vec<bool>,
    emap: Vec<usize>,
    /// Collected vertex maps; search stops when `limit` is reached.
    found: Vec<Embedding>,
    limit: usize,
}

impl<'a> Search<'a> {
    fn sides_ok(&self, hv: Vertex, gv: Vertex) -> bool {
        match (self.h_side, self.g_side) {
            (Some(hs), Some(gs)) => hs[hv] == gs[gv],
            _ => true,
        }
    }

    /// `None` on conflict, otherwise whether this call created the binding.
    fn try_assign(&mut self, hv: Vertex, gv: Vertex) -> Option<bool> {
        match self.vmap[hv] {
            Some(cur) => (cur == gv).then_some(false),
            None => {
                if self.used[gv] || !self.sides_ok(hv, gv) {
                    return None;
                }
                self.vmap[hv] = Some(gv);
                self.used[gv] = true;
                Some(true)
            }
        }
    }

    fn unassign(&mut self, hv: Vertex, created: bool) {
        if created {
            let gv = self.vmap[hv].take().unwrap();
            self.used[gv] = false;
        }
    }

    /// Places h-edge `hi` onto some g-edge with index > the previous image.
    fn place(&mut self, hi: usize) -> bool {
        if hi == self.h.edge_count() {
            return self.finish();
        }
        let lo = if hi == 0 { 0 } else { self.emap[hi - 1] + 1 };
        let hm = self.h.edge_count();
        let gm = self.g.edge_count();
        // Not enough larger edges left in g for the rest of h.
        if gm < hm || lo > gm - (hm - hi) {
            return false;
        }
        let (glo, ghi) = if self.anchor_top && hi == hm - 1 {
            (lo.max(gm - 1), gm)
        } else {
            (lo, gm - (hm - hi) + 1)
        };
        let he = *self.h.edge(hi);
        for gi in glo..ghi {
            let ge = *self.g.edge(gi);
            for (a, b) in [(ge.u, ge.v), (ge.v, ge.u)] {
                if let Some(created_u) = self.try_assign(he.u, a) {
                    if let Some(created_v) = self.try_assign(he.v, b) {
                        self.emap[hi] = gi;
                        let stop = self.place(hi + 1);
                        self.unassign(he.v, created_v);
                        if stop {
                            self.unassign(he.u, created_u);
                            return true;
                        }
                    }
                    self.unassign(he.u, created_u);
                }
            }
        }
        false
    }

    /// All edges placed; extend the map over h's isolated vertices.
    fn finish(&mut self) -> bool {
        let isolated: Vec<Vertex> = (0..self.h.vertex_count())
            .filter(|&v| self.vmap[v].is_none())
            .collect();
        self.assign_isolated(&isolated, 0)
    }

    fn assign_isolated(&mut self, isolated: &[Vertex], k: usize) -> bool {
        if k == isolated.len() {
            self.found.push(Embedding {
                vertex_map: self.vmap.iter().map(|m| m.unwrap()).collect(),
                edge_map: self.emap.clone(),
            });
            return self.found.len() >= self.limit;
        }
        let hv = isolated[k];
        for gv in 0..self.g.vertex_count() {
            if !self.used[gv] && self.sides_ok(hv, gv) {
                self.vmap[hv] = Some(gv);
                self.used[gv] = true;
                let stop = self.assign_isolated(isolated, k + 1);
                self.vmap[hv] = None;
                self.used[gv] = false;
                if stop {
                    return true;
                }
            }
        }
        false
    }
}

fn run(
    g: &EdgeOrderedGraph,
    h: &EdgeOrderedGraph,
    g_side: Option<&[crate::graph::Side]>,
    h_side: Option<&[crate::graph::Side]>,
    anchor_top: bool,
    limit: usize,
) -> Result<Vec<Embedding>> {
    if h.edge_count() == 0 {
        return Err(Error::TrivialPattern);
    }
    let mut s = Search {
        g,
        h,
        g_side,
        h_side,
        anchor_top,
        vmap: vec![None; h.vertex_count()],
        used: vec![false; g.vertex_count()],
        emap: vec![0; h.edge_count()],
        found: Vec::new(),
        limit,
    };
    s.place(0);
    Ok(s.found)
}

pub fn contains(g: &EdgeOrderedGraph, h: &EdgeOrderedGraph) -> Result<bool> {
    Ok(!run(g, h, None, None, false, 1)?.is_empty())
}

pub fn find_embedding(g: &EdgeOrderedGraph, h: &EdgeOrderedGraph) -> Result<Option<Embedding>> {
    Ok(run(g, h, None, None, false, 1)?.into_iter().next())
}

/// Every embedding of `h` into `g`; distinct vertex maps count separately, so
/// automorphic placements of `h` all appear.
pub fn enumerate_embeddings(g: &EdgeOrderedGraph, h: &EdgeOrderedGraph) -> Result<Vec<Embedding>> {
    run(g, h, None, None, false, usize::MAX)
}

/// Containment where the largest edge of `h` must sit on the largest edge of
/// `g`.  Supports incremental avoid-checks: after appending a top edge, any
/// new embedding must use it.
pub fn contains_anchored_at_top(g: &EdgeOrderedGraph, h: &EdgeOrderedGraph) -> Result<bool> {
    Ok(!run(g, h, None, None, true, 1)?.is_empty())
}

pub fn contains_bigraph(g: &EdgeOrderedBigraph, h: &EdgeOrderedBigraph) -> Result<bool> {
    Ok(!run(
        g.graph(),
        h.graph(),
        Some(g.sides()),
        Some(h.sides()),
        false,
        1,
    )?
    .is_empty())
}

pub fn find_embedding_bigraph(
    g: &EdgeOrderedBigraph,
    h: &EdgeOrderedBigraph,
) -> Result<Option<Embedding>> {
    Ok(run(
        g.graph(),
        h.graph(),
        Some(g.sides()),
        Some(h.sides()),
        false,
        1,
    )?
    .into_iter()
    .next())
}

pub fn enumerate_embeddings_bigraph(
    g: &EdgeOrderedBigraph,
    h: &EdgeOrderedBigraph,
) -> Result<Vec<Embedding>> {
    run(
        g.graph(),
        h.graph(),
        Some(g.sides()),
        Some(h.sides()),
        false,
        usize::MAX,
    )
}

pub fn contains_bigraph_anchored_at_top(
    g: &EdgeOrderedBigraph,
    h: &EdgeOrderedBigraph,
) -> Result<bool> {
    Ok(!run(
        g.graph(),
        h.graph(),
        Some(g.sides()),
        Some(h.sides()),
        true,
        1,
    )?
    .is_empty())
}
