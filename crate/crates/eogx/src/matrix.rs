//! 0-1 matrices: pattern containment, staircase certificates, boundary
//! growth operations, and an exact small-size extremal oracle.
//!
//! The dichotomy mirrors the graph side: a connected matrix either carries
//! a staircase description, in which case it grows from the single-entry
//! matrix by boundary operations and its extremal function stays linear,
//! or it contains one of nine fixed patterns forcing superlinear growth.

use std::collections::HashSet;
use std::fmt;
use std::time::Instant;

use crate::turan::{Budget, Status};
use crate::{Error, Result};

/// Dense 0-1 matrix, one u64 bitmask per row.  Width is capped at 64
/// columns, far beyond the sizes the oracles handle.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix01 {
    rows: usize,
    cols: usize,
    bits: Vec<u64>,
}

impl Matrix01 {
    pub fn zeros(rows: usize, cols: usize) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::EmptyMatrix);
        }
        if cols > 64 {
            return Err(Error::BadArgument(format!(
                "matrix width {cols} exceeds the 64-column limit"
            )));
        }
        Ok(Self {
            rows,
            cols,
            bits: vec![0; rows],
        })
    }

    pub fn n_rows(&self) -> usize {
        self.rows
    }

    pub fn n_cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        debug_assert!(i < self.rows && j < self.cols);
        self.bits[i] >> j & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        debug_assert!(i < self.rows && j < self.cols);
        if value {
            self.bits[i] |= 1 << j;
        } else {
            self.bits[i] &= !(1 << j);
        }
    }

    pub fn row_mask(&self, i: usize) -> u64 {
        self.bits[i]
    }

    pub fn ones(&self) -> usize {
        self.bits.iter().map(|r| r.count_ones() as usize).sum()
    }

    pub fn is_all_zero(&self) -> bool {
        self.bits.iter().all(|&r| r == 0)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows).unwrap();
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    /// Clockwise quarter turn; dimensions swap.
    pub fn rotate90(&self) -> Self {
        let mut r = Self::zeros(self.cols, self.rows).unwrap();
        for i in 0..self.rows {
            for j in 0..self.cols {
                r.set(j, self.rows - 1 - i, self.get(i, j));
            }
        }
        r
    }

    pub fn column_reversed(&self) -> Self {
        let mut r = Self::zeros(self.rows, self.cols).unwrap();
        for i in 0..self.rows {
            for j in 0..self.cols {
                r.set(i, self.cols - 1 - j, self.get(i, j));
            }
        }
        r
    }

    /// Every column holds exactly one 1.
    pub fn is_light(&self) -> bool {
        (0..self.cols).all(|j| (0..self.rows).filter(|&i| self.get(i, j)).count() == 1)
    }
}

impl fmt::Display for Matrix01 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            if i > 0 {
                writeln!(f)?;
            }
            for j in 0..self.cols {
                write!(f, "{}", if self.get(i, j) { '1' } else { '0' })?;
            }
        }
        Ok(())
    }
}

/// One row of 0/1 characters per line.
pub fn parse_matrix(text: &str) -> Result<Matrix01> {
    let lines: Vec<&str> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .collect();
    if lines.is_empty() {
        return Err(Error::EmptyMatrix);
    }
    let cols = lines[0].len();
    let mut m = Matrix01::zeros(lines.len(), cols)?;
    for (i, line) in lines.iter().enumerate() {
        if line.len() != cols {
            return Err(Error::Parse {
                line: i + 1,
                msg: format!("row has {} entries, expected {cols}", line.len()),
            });
        }
        for (j, ch) in line.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => m.set(i, j, true),
                other => {
                    return Err(Error::Parse {
                        line: i + 1,
                        msg: format!("unexpected character {other:?}"),
                    })
                }
            }
        }
    }
    Ok(m)
}

/// Whether `a` contains `b`: rows and columns of `a` can be selected, in
/// order, so that `a` has a 1 wherever `b` does.
pub fn contains_pattern(a: &Matrix01, b: &Matrix01) -> Result<bool> {
    if b.is_all_zero() {
        return Err(Error::EmptyPattern);
    }
    if b.rows > a.rows || b.cols > a.cols {
        return Ok(false);
    }
    let mut chosen = Vec::with_capacity(b.rows);
    Ok(choose_rows(a, b, 0, &mut chosen, None))
}

/// DFS over increasing host-row selections; `anchor` pins the final
/// pattern row to a specific host row.  Columns are matched greedily left
/// to right, which is complete once the rows are fixed.
fn choose_rows(
    a: &Matrix01,
    b: &Matrix01,
    from: usize,
    chosen: &mut Vec<usize>,
    anchor: Option<usize>,
) -> bool {
    if chosen.len() == b.rows {
        return columns_embed(a, b, chosen);
    }
    if chosen.len() + 1 == b.rows {
        if let Some(r) = anchor {
            if r < from {
                return false;
            }
            chosen.push(r);
            let ok = columns_embed(a, b, chosen);
            chosen.pop();
            return ok;
        }
    }
    // non-final rows stay below the anchor
    let limit = anchor.unwrap_or(a.rows);
    for r in from..limit {
        chosen.push(r);
        if choose_rows(a, b, r + 1, chosen, anchor) {
            chosen.pop();
            return true;
        }
        chosen.pop();
    }
    false
}

fn columns_embed(a: &Matrix01, b: &Matrix01, rows: &[usize]) -> bool {
    let mut next = 0;
    for bj in 0..b.cols {
        let mut found = false;
        for c in next..a.cols {
            if (0..b.rows).all(|bi| !b.get(bi, bj) || a.get(rows[bi], c)) {
                next = c + 1;
                found = true;
                break;
            }
        }
        if !found {
            return false;
        }
    }
    true
}

/// Bipartite graph on rows and columns, edges at 1 entries, connected.
pub fn is_connected_matrix(a: &Matrix01) -> bool {
    let n = a.rows + a.cols;
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        if v < a.rows {
            for j in 0..a.cols {
                if a.get(v, j) && !seen[a.rows + j] {
                    seen[a.rows + j] = true;
                    stack.push(a.rows + j);
                }
            }
        } else {
            for i in 0..a.rows {
                if a.get(i, v - a.rows) && !seen[i] {
                    seen[i] = true;
                    stack.push(i);
                }
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Monotone grid walk whose cells, together with an entry arm at the start
/// and an exit arm at the end, describe an entire matrix.  Positions are
/// 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Staircase {
    pub positions: Vec<(usize, usize)>,
}

impl Staircase {
    /// Consecutive positions differ by one in exactly one coordinate.
    pub fn is_walk(&self) -> bool {
        !self.positions.is_empty()
            && self.positions.windows(2).all(|w| {
                let ((a, b), (c, d)) = (w[0], w[1]);
                (c == a + 1 && d == b) || (c == a && d == b + 1)
            })
    }

    /// The matrix this walk describes: walk cells are 1, the first row and
    /// column carry 1s up to the start, the last row and column from the
    /// end, and everything else is 0.
    pub fn described(&self, rows: usize, cols: usize) -> Result<Matrix01> {
        if !self.is_walk() {
            return Err(Error::BadArgument("positions do not form a walk".into()));
        }
        let (i1, j1) = self.positions[0];
        let (it, jt) = *self.positions.last().unwrap();
        if it >= rows || jt >= cols {
            return Err(Error::BadArgument("walk leaves the matrix".into()));
        }
        let mut m = Matrix01::zeros(rows, cols)?;
        for &(i, j) in &self.positions {
            m.set(i, j, true);
        }
        for j in 0..j1 {
            m.set(i1, j, true);
        }
        for i in 0..i1 {
            m.set(i, j1, true);
        }
        for j in jt + 1..cols {
            m.set(it, j, true);
        }
        for i in it + 1..rows {
            m.set(i, jt, true);
        }
        Ok(m)
    }

    pub fn describes(&self, a: &Matrix01) -> bool {
        self.described(a.rows, a.cols)
            .map(|m| m == *a)
            .unwrap_or(false)
    }
}

/// Searches both column orientations for a describing walk.  Walk lengths
/// are tried shortest first, start positions in row-major order, and at
/// each step the column move before the row move, so the first certificate
/// is deterministic.
pub fn staircase_certificate(a: &Matrix01) -> Result<Option<(Staircase, bool)>> {
    if a.is_all_zero() {
        return Err(Error::EmptyMatrix);
    }
    for (reversed, m) in [(false, a.clone()), (true, a.column_reversed())] {
        if let Some(sc) = search_staircase(&m) {
            return Ok(Some((sc, reversed)));
        }
    }
    Ok(None)
}

fn search_staircase(m: &Matrix01) -> Option<Staircase> {
    // Any described matrix has exactly rows + cols - 1 ones.
    if m.ones() != m.rows + m.cols - 1 {
        return None;
    }
    for t in 1..=(m.rows + m.cols - 1) {
        for si in 0..m.rows {
            for sj in 0..m.cols {
                if !m.get(si, sj) {
                    continue;
                }
                let mut pos = vec![(si, sj)];
                if extend_walk(m, &mut pos, t) {
                    return Some(Staircase { positions: pos });
                }
            }
        }
    }
    None
}

fn extend_walk(m: &Matrix01, pos: &mut Vec<(usize, usize)>, t: usize) -> bool {
    if pos.len() == t {
        return Staircase {
            positions: pos.clone(),
        }
        .describes(m);
    }
    let (i, j) = *pos.last().unwrap();
    if j + 1 < m.cols && m.get(i, j + 1) {
        pos.push((i, j + 1));
        if extend_walk(m, pos, t) {
            return true;
        }
        pos.pop();
    }
    if i + 1 < m.rows && m.get(i + 1, j) {
        pos.push((i + 1, j));
        if extend_walk(m, pos, t) {
            return true;
        }
        pos.pop();
    }
    false
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Growth {
    Top,
    Bottom,
    Left,
    Right,
}

/// New boundary line with its single 1 at `index`, which must sit directly
/// next to an existing 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Placement {
    pub side: Growth,
    pub index: usize,
}

pub fn elementary_op(a: &Matrix01, p: Placement) -> Result<Matrix01> {
    let (horizontal, limit) = match p.side {
        Growth::Top | Growth::Bottom => (true, a.cols),
        Growth::Left | Growth::Right => (false, a.rows),
    };
    if p.index >= limit {
        return Err(Error::BadArgument(format!(
            "placement index {} out of range",
            p.index
        )));
    }
    let touching = match p.side {
        Growth::Top => a.get(0, p.index),
        Growth::Bottom => a.get(a.rows - 1, p.index),
        Growth::Left => a.get(p.index, 0),
        Growth::Right => a.get(p.index, a.cols - 1),
    };
    if !touching {
        return Err(Error::DetachedPlacement);
    }
    let (rows, cols) = if horizontal {
        (a.rows + 1, a.cols)
    } else {
        (a.rows, a.cols + 1)
    };
    let mut m = Matrix01::zeros(rows, cols)?;
    let (row_off, col_off) = match p.side {
        Growth::Top => (1, 0),
        Growth::Left => (0, 1),
        _ => (0, 0),
    };
    for i in 0..a.rows {
        for j in 0..a.cols {
            m.set(i + row_off, j + col_off, a.get(i, j));
        }
    }
    match p.side {
        Growth::Top => m.set(0, p.index, true),
        Growth::Bottom => m.set(rows - 1, p.index, true),
        Growth::Left => m.set(p.index, 0, true),
        Growth::Right => m.set(p.index, cols - 1, true),
    }
    Ok(m)
}

/// Searches for a boundary-growth sequence from the single-entry matrix to
/// `a`, by peeling boundary lines that carry exactly one 1 resting against
/// the remainder.  Returns the operations in application order.
pub fn reach_from_unit(a: &Matrix01) -> Option<Vec<Placement>> {
    if a.ones() != a.rows + a.cols - 1 {
        return None;
    }
    let mut dead = HashSet::new();
    peel(a, &mut dead)
}

fn peel(m: &Matrix01, dead: &mut HashSet<Matrix01>) -> Option<Vec<Placement>> {
    if m.rows == 1 && m.cols == 1 {
        return m.get(0, 0).then(Vec::new);
    }
    if dead.contains(m) {
        return None;
    }
    for side in [Growth::Top, Growth::Bottom, Growth::Left, Growth::Right] {
        let Some((index, smaller)) = strip_line(m, side) else {
            continue;
        };
        if let Some(mut ops) = peel(&smaller, dead) {
            ops.push(Placement { side, index });
            return Some(ops);
        }
    }
    dead.insert(m.clone());
    None
}

/// Removes the boundary line on `side` when it has a single 1 directly
/// next to a 1 of the remainder.
fn strip_line(m: &Matrix01, side: Growth) -> Option<(usize, Matrix01)> {
    let horizontal = matches!(side, Growth::Top | Growth::Bottom);
    if horizontal && m.rows == 1 || !horizontal && m.cols == 1 {
        return None;
    }
    let line: Vec<bool> = if horizontal {
        let r = if side == Growth::Top { 0 } else { m.rows - 1 };
        (0..m.cols).map(|j| m.get(r, j)).collect()
    } else {
        let c = if side == Growth::Left { 0 } else { m.cols - 1 };
        (0..m.rows).map(|i| m.get(i, c)).collect()
    };
    let ones: Vec<usize> = (0..line.len()).filter(|&k| line[k]).collect();
    let &[index] = &ones[..] else {
        return None;
    };
    let touching = match side {
        Growth::Top => m.get(1, index),
        Growth::Bottom => m.get(m.rows - 2, index),
        Growth::Left => m.get(index, 1),
        Growth::Right => m.get(index, m.cols - 2),
    };
    if !touching {
        return None;
    }
    let (rows, cols) = if horizontal {
        (m.rows - 1, m.cols)
    } else {
        (m.rows, m.cols - 1)
    };
    let (row_off, col_off) = match side {
        Growth::Top => (1, 0),
        Growth::Left => (0, 1),
        _ => (0, 0),
    };
    let mut s = Matrix01::zeros(rows, cols).unwrap();
    for i in 0..rows {
        for j in 0..cols {
            s.set(i, j, m.get(i + row_off, j + col_off));
        }
    }
    Some((index, s))
}

/// The nine patterns whose presence pins a connected matrix to the
/// superlinear side: the 2x2 all-ones block plus the eight images of a
/// fixed 2x3 matrix under quarter turns and transposition.
pub fn forbidden_family() -> Vec<Matrix01> {
    let base = parse_matrix("110\n101").unwrap();
    let mut family = vec![parse_matrix("11\n11").unwrap()];
    for start in [base.clone(), base.transpose()] {
        let mut m = start;
        for _ in 0..4 {
            if !family.contains(&m) {
                family.push(m.clone());
            }
            m = m.rotate90();
        }
    }
    assert_eq!(family.len(), 9);
    family
}

#[derive(Clone, Debug)]
pub enum MatrixClass {
    /// A describing walk exists, possibly after column reversal; the
    /// extremal function is linear.
    Linear {
        certificate: Staircase,
        column_reversed: bool,
    },
    /// No walk; the contained family member forces at least n log n.
    OmegaNLogN { evidence: Matrix01 },
}

pub fn classify_matrix(a: &Matrix01) -> Result<MatrixClass> {
    if a.is_all_zero() {
        return Err(Error::EmptyMatrix);
    }
    if !is_connected_matrix(a) {
        return Err(Error::Disconnected);
    }
    if let Some((certificate, column_reversed)) = staircase_certificate(a)? {
        return Ok(MatrixClass::Linear {
            certificate,
            column_reversed,
        });
    }
    let evidence = forbidden_family()
        .into_iter()
        .find(|f| contains_pattern(a, f).unwrap())
        .expect("a connected matrix without a walk contains a family member");
    Ok(MatrixClass::OmegaNLogN { evidence })
}

#[derive(Clone, Debug)]
pub struct MatrixExtremalResult {
    pub value: usize,
    /// An n x n avoider with `value` ones, re-checked before returning.
    pub witness: Matrix01,
    pub status: Status,
    pub nodes_explored: u64,
}

/// Maximum number of 1s in an n x n matrix avoiding `b`, by row-by-row
/// branch and bound.  Rows are tried densest first; a new row only needs a
/// containment check anchored at itself.
pub fn eex_exact(n: usize, b: &Matrix01, budget: &Budget) -> Result<MatrixExtremalResult> {
    if n == 0 {
        return Err(Error::BadArgument("host size must be positive".into()));
    }
    if n > 16 {
        return Err(Error::BadArgument("host size above the search scale".into()));
    }
    if b.is_all_zero() {
        return Err(Error::EmptyPattern);
    }
    let mut full = Matrix01::zeros(n, n)?;
    for i in 0..n {
        for j in 0..n {
            full.set(i, j, true);
        }
    }
    if !contains_pattern(&full, b)? {
        return Ok(MatrixExtremalResult {
            value: n * n,
            witness: full,
            status: Status::Exact,
            nodes_explored: 0,
        });
    }
    let mut masks: Vec<u64> = (0..1u64 << n).collect();
    masks.sort_by_key(|&m| (std::cmp::Reverse(m.count_ones()), m));
    let mut search = EexSearch {
        n,
        b,
        masks,
        rows: Vec::with_capacity(n),
        ones: 0,
        best: 0,
        witness: vec![0; n],
        nodes: 0,
        start: Instant::now(),
        budget,
        aborted: false,
    };
    search.dfs();
    let mut witness = Matrix01::zeros(n, n)?;
    for (i, &mask) in search.witness.iter().enumerate() {
        witness.bits[i] = mask;
    }
    assert!(!contains_pattern(&witness, b)?, "witness must avoid the pattern");
    assert_eq!(witness.ones(), search.best);
    Ok(MatrixExtremalResult {
        value: search.best,
        witness,
        status: if search.aborted {
            Status::LowerBoundOnly
        } else {
            Status::Exact
        },
        nodes_explored: search.nodes,
    })
}

struct EexSearch<'a> {
    n: usize,
    b: &'a Matrix01,
    masks: Vec<u64>,
    rows: Vec<u64>,
    ones: usize,
    best: usize,
    witness: Vec<u64>,
    nodes: u64,
    start: Instant,
    budget: &'a Budget,
    aborted: bool,
}

impl EexSearch<'_> {
    fn dfs(&mut self) {
        let depth = self.rows.len();
        if depth == self.n {
            if self.ones > self.best {
                self.best = self.ones;
                self.witness.clear();
                self.witness.extend_from_slice(&self.rows);
            }
            return;
        }
        if self.ones + self.n * (self.n - depth) <= self.best {
            return;
        }
        for idx in 0..self.masks.len() {
            let mask = self.masks[idx];
            self.nodes += 1;
            self.rows.push(mask);
            self.ones += mask.count_ones() as usize;
            if !self.anchored_contains() {
                self.dfs();
            }
            self.ones -= mask.count_ones() as usize;
            self.rows.pop();
            if self.aborted || self.budget.spent(self.nodes, self.start) {
                self.aborted = true;
                return;
            }
        }
    }

    /// Containment using the newest row as the last pattern row; older
    /// rows were checked when they were newest.
    fn anchored_contains(&self) -> bool {
        let host = Matrix01 {
            rows: self.rows.len(),
            cols: self.n,
            bits: self.rows.clone(),
        };
        if self.b.rows > host.rows || self.b.cols > host.cols {
            return false;
        }
        let mut chosen = Vec::with_capacity(self.b.rows);
        choose_rows(&host, self.b, 0, &mut chosen, Some(host.rows - 1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(text: &str) -> Matrix01 {
        parse_matrix(text).unwrap()
    }

    #[test]
    fn parse_and_display_round_trip() {
        let a = m("110\n101");
        assert_eq!((a.n_rows(), a.n_cols(), a.ones()), (2, 3, 4));
        assert_eq!(a.to_string(), "110\n101");
        assert!(matches!(parse_matrix(""), Err(Error::EmptyMatrix)));
        assert!(matches!(
            parse_matrix("11\n1"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_matrix("1x"),
            Err(Error::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn containment_matches_the_examples() {
        let block = m("11\n11");
        assert!(contains_pattern(&block, &m("11")).unwrap());
        assert!(!contains_pattern(&m("10\n01"), &m("11")).unwrap());
        assert!(contains_pattern(&block, &block).unwrap());
        assert!(contains_pattern(&block, &m("10\n01")).unwrap());
        assert!(matches!(
            contains_pattern(&block, &m("00")),
            Err(Error::EmptyPattern)
        ));
        assert!(!contains_pattern(&m("11"), &block).unwrap());
    }

    /// Containment oracle trying every row and column subset.
    fn brute_contains(a: &Matrix01, b: &Matrix01) -> bool {
        fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
            let mut out = Vec::new();
            let mut cur = Vec::new();
            fn go(from: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
                if cur.len() == k {
                    out.push(cur.clone());
                    return;
                }
                for v in from..n {
                    cur.push(v);
                    go(v + 1, n, k, cur, out);
                    cur.pop();
                }
            }
            go(0, n, k, &mut cur, &mut out);
            out
        }
        subsets(a.n_rows(), b.n_rows()).iter().any(|rs| {
            subsets(a.n_cols(), b.n_cols()).iter().any(|cs| {
                (0..b.n_rows()).all(|i| {
                    (0..b.n_cols()).all(|j| !b.get(i, j) || a.get(rs[i], cs[j]))
                })
            })
        })
    }

    #[test]
    fn containment_agrees_with_subset_oracle() {
        let patterns = [m("11\n11"), m("110\n101"), m("11"), m("1\n1"), m("10\n01")];
        for bits in 0u64..1 << 9 {
            let mut a = Matrix01::zeros(3, 3).unwrap();
            for c in 0..9 {
                if bits >> c & 1 == 1 {
                    a.set(c / 3, c % 3, true);
                }
            }
            for p in &patterns {
                assert_eq!(contains_pattern(&a, p).unwrap(), brute_contains(&a, p));
            }
        }
    }

    #[test]
    fn connectivity_follows_the_bipartite_graph() {
        assert!(is_connected_matrix(&m("11\n01")));
        assert!(!is_connected_matrix(&m("10\n01")));
        assert!(is_connected_matrix(&m("1")));
        assert!(!is_connected_matrix(&m("0")));
    }

    #[test]
    fn staircase_certificates_on_the_known_cases() {
        let (sc, rev) = staircase_certificate(&m("1")).unwrap().unwrap();
        assert_eq!((sc.positions.len(), rev), (1, false));
        let a = m("11\n01");
        let (sc, rev) = staircase_certificate(&a).unwrap().unwrap();
        assert!(!rev);
        assert!(sc.describes(&a));
        assert!(staircase_certificate(&m("11\n11")).unwrap().is_none());
        assert!(matches!(
            staircase_certificate(&m("00")),
            Err(Error::EmptyMatrix)
        ));
    }

    #[test]
    fn reversal_only_staircase_is_detected() {
        let a = m("011\n110");
        let (sc, rev) = staircase_certificate(&a).unwrap().unwrap();
        assert!(rev);
        assert!(sc.describes(&a.column_reversed()));
        assert!(matches!(
            classify_matrix(&a).unwrap(),
            MatrixClass::Linear { .. }
        ));
    }

    /// All describable matrices of the given shape, built forward from
    /// every walk, in both column orientations.
    fn brute_staircase_set(rows: usize, cols: usize) -> HashSet<Matrix01> {
        let mut out = HashSet::new();
        for t in 1..=(rows + cols - 1) {
            for si in 0..rows {
                for sj in 0..cols {
                    for steps in 0u32..1 << (t - 1) {
                        let mut pos = vec![(si, sj)];
                        let mut ok = true;
                        for s in 0..t - 1 {
                            let (i, j) = *pos.last().unwrap();
                            let (ni, nj) = if steps >> s & 1 == 1 {
                                (i, j + 1)
                            } else {
                                (i + 1, j)
                            };
                            if ni >= rows || nj >= cols {
                                ok = false;
                                break;
                            }
                            pos.push((ni, nj));
                        }
                        if !ok {
                            continue;
                        }
                        let sc = Staircase { positions: pos };
                        let d = sc.described(rows, cols).unwrap();
                        out.insert(d.column_reversed());
                        out.insert(d);
                    }
                }
            }
        }
        out
    }

    #[test]
    fn staircase_search_agrees_with_forward_enumeration() {
        for (rows, cols) in [(2, 2), (2, 3), (3, 2), (3, 3)] {
            let described = brute_staircase_set(rows, cols);
            for bits in 0u64..1 << (rows * cols) {
                let mut a = Matrix01::zeros(rows, cols).unwrap();
                for c in 0..rows * cols {
                    if bits >> c & 1 == 1 {
                        a.set(c / cols, c % cols, true);
                    }
                }
                if a.is_all_zero() {
                    continue;
                }
                let cert = staircase_certificate(&a).unwrap();
                assert_eq!(cert.is_some(), described.contains(&a), "{a}");
                if let Some((sc, rev)) = cert {
                    let target = if rev { a.column_reversed() } else { a.clone() };
                    assert!(sc.describes(&target));
                }
            }
        }
    }

    /// Caterpillar check: a tree whose non-leaf vertices form a path.
    fn bipartite_is_caterpillar(a: &Matrix01) -> bool {
        let n = a.n_rows() + a.n_cols();
        let mut adj = vec![Vec::new(); n];
        let mut edges = 0;
        for i in 0..a.n_rows() {
            for j in 0..a.n_cols() {
                if a.get(i, j) {
                    adj[i].push(a.n_rows() + j);
                    adj[a.n_rows() + j].push(i);
                    edges += 1;
                }
            }
        }
        if !is_connected_matrix(a) || edges != n - 1 {
            return false;
        }
        let spine: Vec<usize> = (0..n).filter(|&v| adj[v].len() >= 2).collect();
        spine.iter().all(|&v| {
            adj[v].iter().filter(|&&w| adj[w].len() >= 2).count() <= 2
        }) && {
            // the spine must be connected; count its internal edges
            let internal: usize = spine
                .iter()
                .map(|&v| adj[v].iter().filter(|&&w| adj[w].len() >= 2).count())
                .sum();
            spine.is_empty() || internal / 2 == spine.len() - 1
        }
    }

    #[test]
    fn staircase_matrices_are_caterpillar_adjacency_matrices() {
        for (rows, cols) in [(2, 2), (2, 3), (3, 3), (4, 3)] {
            for a in brute_staircase_set(rows, cols) {
                assert!(is_connected_matrix(&a), "{a}");
                assert!(bipartite_is_caterpillar(&a), "{a}");
            }
        }
    }

    #[test]
    fn elementary_ops_grow_matrices() {
        let one = m("1");
        let grown = elementary_op(&one, Placement { side: Growth::Right, index: 0 }).unwrap();
        assert_eq!(grown, m("11"));
        let tall = elementary_op(&grown, Placement { side: Growth::Bottom, index: 1 }).unwrap();
        assert_eq!(tall, m("11\n01"));
        assert!(matches!(
            elementary_op(&m("10\n01"), Placement { side: Growth::Bottom, index: 0 }),
            Err(Error::DetachedPlacement)
        ));
        assert!(matches!(
            elementary_op(&one, Placement { side: Growth::Top, index: 5 }),
            Err(Error::BadArgument(_))
        ));
    }

    #[test]
    fn growth_sequences_replay_to_their_targets() {
        let a = m("11\n01");
        let ops = reach_from_unit(&a).unwrap();
        assert_eq!(ops.len(), 2);
        let mut cur = m("1");
        for op in ops {
            cur = elementary_op(&cur, op).unwrap();
        }
        assert_eq!(cur, a);
        assert_eq!(reach_from_unit(&m("1")), Some(vec![]));
        assert!(reach_from_unit(&m("11\n11")).is_none());
        assert!(reach_from_unit(&m("110\n101")).is_none());
        let reversal_only = m("111\n100");
        assert_eq!(reach_from_unit(&reversal_only).map(|o| o.len()), Some(3));
    }

    #[test]
    fn every_small_staircase_grows_from_the_unit() {
        for (rows, cols) in [(2, 2), (2, 3), (3, 3)] {
            for a in brute_staircase_set(rows, cols) {
                let ops = reach_from_unit(&a)
                    .unwrap_or_else(|| panic!("unreachable staircase\n{a}"));
                let mut cur = m("1");
                for op in ops {
                    cur = elementary_op(&cur, op).unwrap();
                }
                assert_eq!(cur, a);
            }
        }
    }

    #[test]
    fn family_has_nine_distinct_members() {
        let family = forbidden_family();
        assert_eq!(family.len(), 9);
        assert!(family.contains(&m("110\n101")));
        assert!(family.contains(&m("101\n011")));
        assert!(family.contains(&m("11\n11")));
        let distinct: HashSet<&Matrix01> = family.iter().collect();
        assert_eq!(distinct.len(), 9);
    }

    #[test]
    fn classification_on_the_known_cases() {
        assert!(matches!(
            classify_matrix(&m("11\n01")).unwrap(),
            MatrixClass::Linear { .. }
        ));
        match classify_matrix(&m("11\n11")).unwrap() {
            MatrixClass::OmegaNLogN { evidence } => assert_eq!(evidence, m("11\n11")),
            other => panic!("expected superlinear, got {other:?}"),
        }
        assert!(matches!(
            classify_matrix(&m("110\n101")).unwrap(),
            MatrixClass::OmegaNLogN { .. }
        ));
        assert!(matches!(
            classify_matrix(&m("10\n01")),
            Err(Error::Disconnected)
        ));
    }

    #[test]
    fn connected_matrices_split_cleanly_up_to_three_by_three() {
        // Mirrors the dichotomy on every small connected matrix: a walk or
        // a family member, never neither; and column reversal never flips
        // the side.
        for (rows, cols) in [(2, 2), (2, 3), (3, 2), (3, 3)] {
            for bits in 0u64..1 << (rows * cols) {
                let mut a = Matrix01::zeros(rows, cols).unwrap();
                for c in 0..rows * cols {
                    if bits >> c & 1 == 1 {
                        a.set(c / cols, c % cols, true);
                    }
                }
                if a.is_all_zero() || !is_connected_matrix(&a) {
                    continue;
                }
                let here = classify_matrix(&a).unwrap();
                let there = classify_matrix(&a.column_reversed()).unwrap();
                assert_eq!(
                    matches!(here, MatrixClass::Linear { .. }),
                    matches!(there, MatrixClass::Linear { .. })
                );
                if let MatrixClass::OmegaNLogN { evidence } = here {
                    assert!(contains_pattern(&a, &evidence).unwrap());
                }
            }
        }
    }

    /// Extremal oracle over every n x n matrix.
    fn brute_eex(n: usize, b: &Matrix01) -> usize {
        (0u64..1 << (n * n))
            .filter_map(|bits| {
                let mut a = Matrix01::zeros(n, n).unwrap();
                for c in 0..n * n {
                    if bits >> c & 1 == 1 {
                        a.set(c / n, c % n, true);
                    }
                }
                (!contains_pattern(&a, b).unwrap()).then(|| a.ones())
            })
            .max()
            .unwrap()
    }

    #[test]
    fn extremal_values_match_brute_force() {
        let block = m("11\n11");
        for n in 1..=3 {
            assert_eq!(eex_exact(n, &m("1"), &Budget::unlimited()).unwrap().value, 0);
        }
        assert_eq!(eex_exact(2, &block, &Budget::unlimited()).unwrap().value, 3);
        assert_eq!(eex_exact(3, &block, &Budget::unlimited()).unwrap().value, 6);
        for n in 1..=3 {
            for b in [&block, &m("11"), &m("1\n1"), &m("110\n101"), &m("10\n01")] {
                let got = eex_exact(n, b, &Budget::unlimited()).unwrap();
                assert_eq!(got.value, brute_eex(n, b), "n={n} pattern\n{b}");
                assert_eq!(got.status, Status::Exact);
                assert!(!contains_pattern(&got.witness, b).unwrap());
            }
        }
    }

    #[test]
    fn oversized_patterns_allow_the_full_matrix() {
        let big = m("111\n111\n111");
        let r = eex_exact(2, &big, &Budget::unlimited()).unwrap();
        assert_eq!((r.value, r.nodes_explored), (4, 0));
        assert_eq!(r.witness.ones(), 4);
    }

    #[test]
    fn exhausted_budget_reports_a_lower_bound() {
        let r = eex_exact(4, &m("11\n11"), &Budget::nodes(3)).unwrap();
        assert_eq!(r.status, Status::LowerBoundOnly);
        assert!(r.nodes_explored <= 4);
        assert!(!contains_pattern(&r.witness, &m("11\n11")).unwrap());
    }

    #[test]
    fn extremal_search_is_deterministic() {
        let a = eex_exact(4, &m("11\n11"), &Budget::unlimited()).unwrap();
        let b = eex_exact(4, &m("11\n11"), &Budget::unlimited()).unwrap();
        assert_eq!(a.value, b.value);
        assert_eq!(a.witness, b.witness);
        assert_eq!(a.nodes_explored, b.nodes_explored);
    }

    #[test]
    fn boundary_growth_never_lowers_the_extremal_value() {
        let seeds = [m("1"), m("11"), m("11\n01")];
        for a in &seeds {
            for side in [Growth::Top, Growth::Bottom, Growth::Left, Growth::Right] {
                let limit = match side {
                    Growth::Top | Growth::Bottom => a.n_cols(),
                    _ => a.n_rows(),
                };
                for index in 0..limit {
                    let Ok(grown) = elementary_op(a, Placement { side, index }) else {
                        continue;
                    };
                    for n in 1..=3 {
                        assert!(brute_eex(n, a) <= brute_eex(n, &grown));
                    }
                }
            }
        }
    }

    #[test]
    fn light_matrices_are_recognized() {
        assert!(m("10\n01").is_light());
        assert!(m("1").is_light());
        assert!(!m("11\n01").is_light());
        assert!(!m("11\n11").is_light());
    }
}
