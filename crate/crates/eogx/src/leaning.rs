//! Leaning edges, their iterate chains, the constructive caterpillar
//! embedding they certify, and the inclined-edge decomposition.
//!
//! An edge leans toward a side when that end carries a block of smaller
//! edges sitting entirely below a block at the other end.  Repeatedly
//! restricting to one side's leaning edges thins a bigraph out slowly, and
//! an edge surviving enough rounds anchors a caterpillar embedding built
//! by walking the rounds back down.

use crate::classify::peel_extensions;
use crate::containment::{contains_bigraph, Embedding};
use crate::graph::{EdgeOrderedBigraph, Side, Vertex};
use crate::parse::parse_signed_path;
use crate::{Error, Result};

/// Certificate that an edge leans: `c` edges on each end, everything below
/// the witnessed edge, one end's block entirely below the other's.  Indices
/// are rank positions in the ambient bigraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeaningWitness {
    pub at_left_end: Vec<usize>,
    pub at_right_end: Vec<usize>,
}

impl LeaningWitness {
    /// Re-checks the certificate against the bigraph.
    pub fn certifies(
        &self,
        b: &EdgeOrderedBigraph,
        e: usize,
        c: usize,
        toward: Side,
    ) -> bool {
        if self.at_left_end.len() != c || self.at_right_end.len() != c {
            return false;
        }
        let g = b.graph();
        let on = |set: &[usize], v: Vertex| {
            set.iter().all(|&k| k < e && g.edge(k).touches(v))
        };
        if !on(&self.at_left_end, b.left_end(e)) || !on(&self.at_right_end, b.right_end(e)) {
            return false;
        }
        let (low, high) = match toward {
            Side::Left => (&self.at_left_end, &self.at_right_end),
            Side::Right => (&self.at_right_end, &self.at_left_end),
        };
        low.iter().max() < high.iter().min()
    }
}

#[derive(Clone, Debug, Default)]
pub struct LeaningClass {
    pub left: Option<LeaningWitness>,
    pub right: Option<LeaningWitness>,
}

/// Incident edges of `v` below rank `e` and inside the member set, ascending.
fn ranks_at(b: &EdgeOrderedBigraph, v: Vertex, member: &[bool], e: usize) -> Vec<usize> {
    b.graph()
        .incident(v)
        .iter()
        .copied()
        .filter(|&k| k < e && member[k])
        .collect()
}

/// Greedy witness that `e` leans toward `toward` inside the member set.  The
/// extreme choice is complete: lowest block at the lower end, highest block
/// at the upper end, so if any witness exists this one does.
fn witness_within(
    b: &EdgeOrderedBigraph,
    member: &[bool],
    e: usize,
    c: usize,
    toward: Side,
) -> Option<LeaningWitness> {
    let (lo_end, hi_end) = match toward {
        Side::Left => (b.left_end(e), b.right_end(e)),
        Side::Right => (b.right_end(e), b.left_end(e)),
    };
    let lows = ranks_at(b, lo_end, member, e);
    let highs = ranks_at(b, hi_end, member, e);
    if lows.len() < c || highs.len() < c {
        return None;
    }
    let low = lows[..c].to_vec();
    let high = highs[highs.len() - c..].to_vec();
    if low[c - 1] > high[0] {
        return None;
    }
    Some(match toward {
        Side::Left => LeaningWitness {
            at_left_end: low,
            at_right_end: high,
        },
        Side::Right => LeaningWitness {
            at_left_end: high,
            at_right_end: low,
        },
    })
}

/// Whether edge `e` is c-left-leaning or c-right-leaning, with witnesses.
/// An edge can be both, one, or neither.
pub fn leaning_class(b: &EdgeOrderedBigraph, e: usize, c: usize) -> Result<LeaningClass> {
    if e >= b.edge_count() {
        return Err(Error::BadArgument(format!("no edge with rank index {e}")));
    }
    if c == 0 {
        return Err(Error::BadArgument("leaning block size must be positive".into()));
    }
    let member = vec![true; b.edge_count()];
    Ok(LeaningClass {
        left: witness_within(b, &member, e, c, Side::Left),
        right: witness_within(b, &member, e, c, Side::Right),
    })
}

/// Edges that lean neither way.  There are at most 2cn of them: any edge
/// outside the 2c-1 smallest at both its ends leans toward one side.
pub fn non_leaning_edges(b: &EdgeOrderedBigraph, c: usize) -> Result<Vec<usize>> {
    if c == 0 {
        return Err(Error::BadArgument("leaning block size must be positive".into()));
    }
    let member = vec![true; b.edge_count()];
    Ok((0..b.edge_count())
        .filter(|&e| {
            witness_within(b, &member, e, c, Side::Left).is_none()
                && witness_within(b, &member, e, c, Side::Right).is_none()
        })
        .collect())
}

/// Decreasing chain of edge subsets: level 0 is the whole bigraph, each
/// later level the edges leaning toward `side` within the previous one.
#[derive(Clone, Debug)]
pub struct IterateChain {
    pub side: Side,
    pub c: usize,
    /// levels[j] holds the rank indices of the j-th iterate, ascending.
    pub levels: Vec<Vec<usize>>,
}

impl IterateChain {
    pub fn last(&self) -> &[usize] {
        self.levels.last().expect("level 0 always present")
    }
}

pub fn iterate(b: &EdgeOrderedBigraph, c: usize, i: usize, side: Side) -> Result<IterateChain> {
    if c == 0 {
        return Err(Error::BadArgument("leaning block size must be positive".into()));
    }
    let m = b.edge_count();
    let mut member = vec![true; m];
    let mut levels = vec![(0..m).collect::<Vec<_>>()];
    for _ in 0..i {
        let next: Vec<usize> = levels
            .last()
            .unwrap()
            .iter()
            .copied()
            .filter(|&e| witness_within(b, &member, e, c, side).is_some())
            .collect();
        member = vec![false; m];
        for &e in &next {
            member[e] = true;
        }
        levels.push(next);
    }
    Ok(IterateChain { side, c, levels })
}

/// Edges surviving in neither side's i-th iterate.  At most 2i²cn of them:
/// each such edge is non-leaning in some mixed iterate.
pub fn residual_edges(b: &EdgeOrderedBigraph, c: usize, i: usize) -> Result<Vec<usize>> {
    let left = iterate(b, c, i, Side::Left)?;
    let right = iterate(b, c, i, Side::Right)?;
    let mut member = vec![false; b.edge_count()];
    for &e in left.last().iter().chain(right.last()) {
        member[e] = true;
    }
    Ok((0..b.edge_count()).filter(|&e| !member[e]).collect())
}

/// Embeds the right caterpillar `t` into `b` by the iterate-chain descent,
/// whenever the left chain at (|V(t)|, depth) is non-empty.  `t` must be a
/// right caterpillar; an empty final level yields None with no claim about
/// containment either way.
///
/// The top edge of `t` goes to the smallest surviving edge of the final
/// level.  Each growth step of the certificate is then realized one level
/// down: the current smallest image leans there, and its witness supplies
/// the pendant edges, lowest first, skipping far ends already in use.  The
/// counting in the witness always leaves enough room.
pub fn extract_caterpillar(
    b: &EdgeOrderedBigraph,
    t: &EdgeOrderedBigraph,
) -> Result<Option<Embedding>> {
    let seq = peel_extensions(t)?.ok_or(Error::UncertifiedCaterpillar)?;
    let c = t.vertex_count();
    let depth = seq.depth();
    let chain = iterate(b, c, depth, Side::Left)?;
    if chain.levels[depth].is_empty() {
        return Ok(None);
    }
    let masks: Vec<Vec<bool>> = chain
        .levels
        .iter()
        .map(|lv| {
            let mut mk = vec![false; b.edge_count()];
            for &e in lv {
                mk[e] = true;
            }
            mk
        })
        .collect();
    let tg = t.graph();
    let m = tg.edge_count();
    let mut vmap = vec![usize::MAX; tg.vertex_count()];
    let mut emap = vec![usize::MAX; m];
    let mut used = vec![false; b.vertex_count()];
    let top = chain.levels[depth][0];
    vmap[t.left_end(m - 1)] = b.left_end(top);
    vmap[t.right_end(m - 1)] = b.right_end(top);
    used[b.left_end(top)] = true;
    used[b.right_end(top)] = true;
    emap[m - 1] = top;
    let mut cur = top;
    for (j, step) in seq.steps.iter().enumerate() {
        debug_assert_eq!(emap[step.base], cur);
        let w = witness_within(b, &masks[depth - 1 - j], cur, c, Side::Left)
            .expect("membership one level up means the edge leans here");
        for (added, candidates, b_attach, t_attach) in [
            (
                &step.left_added,
                &w.at_left_end,
                b.left_end(cur),
                t.left_end(step.base),
            ),
            (
                &step.right_added,
                &w.at_right_end,
                b.right_end(cur),
                t.right_end(step.base),
            ),
        ] {
            let mut picked = Vec::new();
            for &e in candidates {
                if picked.len() == added.len() {
                    break;
                }
                let far = b.graph().edge(e).other_end(b_attach);
                if !used[far] {
                    picked.push((e, far));
                }
            }
            assert_eq!(picked.len(), added.len(), "witness cannot run out");
            for (&tr, &(be, far)) in added.iter().zip(&picked) {
                vmap[tg.edge(tr).other_end(t_attach)] = far;
                used[far] = true;
                emap[tr] = be;
            }
        }
        let new_min = *step
            .left_added
            .first()
            .or(step.right_added.first())
            .expect("steps add at least one edge");
        cur = emap[new_min];
    }
    let emb = Embedding {
        vertex_map: vmap,
        edge_map: emap,
    };
    assert!(emb.is_valid_bigraph(b, t), "descent produced a broken embedding");
    Ok(Some(emb))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Incline {
    LeftInclined,
    RightInclined,
    NonInclined,
}

/// Every edge classified by comparing the second-lowest labels at its ends
/// with its own.  At most 2n edges are non-inclined: an edge outside the
/// two smallest at both ends satisfies one of the two inequality chains.
#[derive(Clone, Debug)]
pub struct InclinedPartition {
    /// Second-lowest incident label; vertices of degree at most 1 get none,
    /// and their edges are non-inclined by fiat.
    pub vertex_label: Vec<Option<u64>>,
    pub classes: Vec<Incline>,
}

impl InclinedPartition {
    pub fn edges_in(&self, class: Incline) -> Vec<usize> {
        (0..self.classes.len())
            .filter(|&i| self.classes[i] == class)
            .collect()
    }
}

pub fn inclined_partition(b: &EdgeOrderedBigraph) -> InclinedPartition {
    let g = b.graph();
    let vertex_label: Vec<Option<u64>> = (0..g.vertex_count())
        .map(|v| g.incident(v).get(1).map(|&k| g.edge(k).label))
        .collect();
    let classes = (0..g.edge_count())
        .map(|i| {
            let own = g.edge(i).label;
            match (
                vertex_label[b.left_end(i)],
                vertex_label[b.right_end(i)],
            ) {
                (Some(lx), Some(ly)) if lx < ly && ly <= own => Incline::LeftInclined,
                (Some(lx), Some(ly)) if ly < lx && lx <= own => Incline::RightInclined,
                _ => Incline::NonInclined,
            }
        })
        .collect();
    InclinedPartition {
        vertex_label,
        classes,
    }
}

fn inclined_subgraph(b: &EdgeOrderedBigraph, class: Incline) -> EdgeOrderedBigraph {
    let part = inclined_partition(b);
    let keep: Vec<bool> = part.classes.iter().map(|&c| c == class).collect();
    b.edge_subgraph(&keep)
}

/// Subgraph of the left-inclined edges, on all vertices.
pub fn left_inclined_subgraph(b: &EdgeOrderedBigraph) -> EdgeOrderedBigraph {
    inclined_subgraph(b, Incline::LeftInclined)
}

pub fn right_inclined_subgraph(b: &EdgeOrderedBigraph) -> EdgeOrderedBigraph {
    inclined_subgraph(b, Incline::RightInclined)
}

/// The six-vertex path whose avoidance forces the conclusion below.
pub fn inclined_premise_pattern(side: Side) -> EdgeOrderedBigraph {
    let spec = match side {
        Side::Left => "P:+13254",
        Side::Right => "P:-13254",
    };
    parse_signed_path(spec).expect("fixed pattern parses")
}

/// The five-vertex path the matching inclined subgraph then avoids.
pub fn inclined_conclusion_pattern(side: Side) -> EdgeOrderedBigraph {
    let spec = match side {
        Side::Left => "P:-2143",
        Side::Right => "P:+2143",
    };
    parse_signed_path(spec).expect("fixed pattern parses")
}

/// Whether `b` avoids the premise pattern for `side`.
pub fn inclined_premise(b: &EdgeOrderedBigraph, side: Side) -> Result<bool> {
    Ok(!contains_bigraph(b, &inclined_premise_pattern(side))?)
}

/// Whether the side's inclined subgraph avoids its conclusion pattern.
/// Reported unconditionally; the implication from the premise is checked by
/// the verification suites.
pub fn inclined_conclusion(b: &EdgeOrderedBigraph, side: Side) -> Result<bool> {
    let sub = inclined_subgraph(
        b,
        match side {
            Side::Left => Incline::LeftInclined,
            Side::Right => Incline::RightInclined,
        },
    );
    Ok(!contains_bigraph(&sub, &inclined_conclusion_pattern(side))?)
}

/// Half split with per-vertex extremes stripped and the survivors filtered
/// to the left-inclined part of their union.
#[derive(Clone, Debug)]
pub struct HalvesDecomposition {
    /// Lower-half survivors: below the median, not among the two highest
    /// lower-half edges at either end, left inclined within the stripped
    /// union.
    pub lower_kept: Vec<usize>,
    /// Upper-half survivors, stripped at the two smallest per vertex.
    pub upper_kept: Vec<usize>,
    pub leftover: Vec<usize>,
    /// No vertex touches both survivor sets.  Guaranteed when the bigraph
    /// avoids both the right premise pattern and the left conclusion
    /// pattern; reported as found otherwise.
    pub separated: bool,
    /// Non-isolated vertex counts of the two survivor sets.
    pub lower_active: usize,
    pub upper_active: usize,
}

pub fn halves_decomposition(b: &EdgeOrderedBigraph) -> HalvesDecomposition {
    let g = b.graph();
    let m = g.edge_count();
    let half = m / 2;
    let mut keep = vec![false; m];
    for k in 0..m {
        keep[k] = true;
    }
    for v in 0..g.vertex_count() {
        let inc = g.incident(v);
        let lows: Vec<usize> = inc.iter().copied().filter(|&k| k < half).collect();
        for &k in lows.iter().rev().take(2) {
            keep[k] = false;
        }
        let ups: Vec<usize> = inc.iter().copied().filter(|&k| k >= half).collect();
        for &k in ups.iter().take(2) {
            keep[k] = false;
        }
    }
    let sub = b.edge_subgraph(&keep);
    let part = inclined_partition(&sub);
    let survivors: Vec<usize> = (0..m).filter(|&k| keep[k]).collect();
    let mut lower_kept = Vec::new();
    let mut upper_kept = Vec::new();
    for (si, &oi) in survivors.iter().enumerate() {
        if part.classes[si] == Incline::LeftInclined {
            if oi < half {
                lower_kept.push(oi);
            } else {
                upper_kept.push(oi);
            }
        }
    }
    let mut in_lower = vec![false; g.vertex_count()];
    let mut in_upper = vec![false; g.vertex_count()];
    for &k in &lower_kept {
        in_lower[g.edge(k).u] = true;
        in_lower[g.edge(k).v] = true;
    }
    for &k in &upper_kept {
        in_upper[g.edge(k).u] = true;
        in_upper[g.edge(k).v] = true;
    }
    let taken = |set: &[usize]| {
        let mut t = vec![false; m];
        for &k in set {
            t[k] = true;
        }
        t
    };
    let (tl, tu) = (taken(&lower_kept), taken(&upper_kept));
    HalvesDecomposition {
        separated: (0..g.vertex_count()).all(|v| !(in_lower[v] && in_upper[v])),
        lower_active: in_lower.iter().filter(|&&x| x).count(),
        upper_active: in_upper.iter().filter(|&&x| x).count(),
        lower_kept,
        upper_kept,
        leftover: (0..m).filter(|&k| !tl[k] && !tu[k]).collect(),
    }
}
