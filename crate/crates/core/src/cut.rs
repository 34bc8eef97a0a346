//! `(i, j)`-factor cuts: bipartitions `(V1, V2)` where every vertex of `V1`
//! has at most `i` crossing edges and every vertex of `V2` at most `j`.
//! The `(1, 1)` case is a matching cut.
//!
//! Search assigns vertices in id order to a side and prunes as soon as an
//! assigned vertex exceeds its side's crossing-degree bound. Crossing
//! degrees only grow as more vertices are placed, so the pruning is exact.

use std::fmt;

use thiserror::Error;

use crate::graph::{Graph, VertexSet};

/// Vertex bound for [`enumerate_factor_cuts`] and [`are_factor_roots`].
pub const DEFAULT_ENUMERATION_BOUND: usize = 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CutError {
    #[error("need 1 <= i <= j, got i = {i}, j = {j}")]
    BadParameters { i: usize, j: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("parts do not partition the vertex set: {0}")]
    NotAPartition(String),
    #[error("enumeration bound exceeded: {n} vertices, bound {bound}")]
    BoundExceeded { n: usize, bound: usize },
    #[error("roots must be distinct in-range vertices, got {s} and {t}")]
    BadRoots { s: usize, t: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorCut {
    pub part1: VertexSet,
    pub part2: VertexSet,
    pub i: usize,
    pub j: usize,
}

impl FactorCut {
    pub fn from_part1(n: usize, part1: &[usize], i: usize, j: usize) -> Self {
        let p1 = VertexSet::from_iter_with_capacity(n, part1.iter().copied());
        FactorCut { part2: p1.complement(), part1: p1, i, j }
    }

    /// Whether `s` and `t` lie in different parts; with `oriented` also
    /// requires `s ∈ V1`.
    pub fn separates(&self, s: usize, t: usize, oriented: bool) -> bool {
        if oriented {
            self.part1.contains(s) && self.part2.contains(t)
        } else {
            self.part1.contains(s) != self.part1.contains(t)
        }
    }

    /// Edges with one end in each part.
    pub fn crossing_edges(&self, g: &Graph) -> Vec<(usize, usize)> {
        g.edges()
            .filter(|&(u, v)| self.part1.contains(u) != self.part1.contains(v))
            .collect()
    }

    /// Two lines, `V1: ...` / `V2: ...`, 1-based ascending ids.
    pub fn to_text(&self) -> String {
        let ids = |s: &VertexSet| s.iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(" ");
        format!("V1: {}\nV2: {}\n", ids(&self.part1), ids(&self.part2))
    }
}

impl fmt::Display for FactorCut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})-cut {:?} | {:?}", self.i, self.j, self.part1, self.part2)
    }
}

fn check_params(i: usize, j: usize) -> Result<(), CutError> {
    if i == 0 || i > j {
        return Err(CutError::BadParameters { i, j });
    }
    Ok(())
}

/// Validates a cut against `g`. Empty parts make the cut invalid (`false`);
/// parts that overlap or miss vertices are an error.
pub fn check_factor_cut(g: &Graph, cut: &FactorCut) -> Result<bool, CutError> {
    let n = g.n();
    if cut.part1.capacity() != n || cut.part2.capacity() != n {
        return Err(CutError::NotAPartition(format!(
            "parts sized for {} / {} vertices, graph has {n}",
            cut.part1.capacity(),
            cut.part2.capacity()
        )));
    }
    if !cut.part1.is_disjoint(&cut.part2) {
        return Err(CutError::NotAPartition("parts overlap".into()));
    }
    if cut.part1.len() + cut.part2.len() != n {
        return Err(CutError::NotAPartition("parts do not cover every vertex".into()));
    }
    if cut.part1.is_empty() || cut.part2.is_empty() {
        return Ok(false);
    }
    for v in 0..n {
        let in1 = cut.part1.contains(v);
        let crossing = g.neighbors(v).filter(|&w| cut.part1.contains(w) != in1).count();
        if crossing > if in1 { cut.i } else { cut.j } {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Decides whether `g` has an `(i, j)`-factor cut. A vertex of degree at
/// most `j` yields the trivial cut `(V \ {v}, {v})`; otherwise the first cut
/// in search order is returned.
pub fn find_factor_cut(g: &Graph, i: usize, j: usize) -> Result<Option<FactorCut>, CutError> {
    check_params(i, j)?;
    if !g.is_connected() {
        return Err(CutError::Disconnected);
    }
    let n = g.n();
    if n < 2 {
        return Ok(None);
    }
    if let Some(v) = (0..n).find(|&v| g.degree(v) <= j) {
        let rest: Vec<usize> = (0..n).filter(|&u| u != v).collect();
        return Ok(Some(FactorCut::from_part1(n, &rest, i, j)));
    }
    let mut found = None;
    CutSearch::new(g, i, j).run(&mut |part1| {
        found = Some(FactorCut::from_part1(n, part1, i, j));
        false
    });
    Ok(found)
}

/// Every `(i, j)`-factor cut of `g`, with the default vertex bound.
pub fn enumerate_factor_cuts(g: &Graph, i: usize, j: usize) -> Result<Vec<FactorCut>, CutError> {
    enumerate_factor_cuts_bounded(g, i, j, DEFAULT_ENUMERATION_BOUND)
}

/// Every `(i, j)`-factor cut of `g`. When `i == j` each cut is emitted once,
/// with vertex 0 in `part1`; when `i < j` both orientations are distinct
/// cuts and are emitted separately.
pub fn enumerate_factor_cuts_bounded(
    g: &Graph,
    i: usize,
    j: usize,
    bound: usize,
) -> Result<Vec<FactorCut>, CutError> {
    check_params(i, j)?;
    let n = g.n();
    if n > bound {
        return Err(CutError::BoundExceeded { n, bound });
    }
    let mut cuts = Vec::new();
    if n < 2 {
        return Ok(cuts);
    }
    CutSearch::new(g, i, j).run(&mut |part1| {
        cuts.push(FactorCut::from_part1(n, part1, i, j));
        true
    });
    Ok(cuts)
}

/// Whether every `(i, j)`-factor cut separates `s` and `t` (with `s ∈ V1`
/// when `i < j`). Vacuously true when no cut exists.
pub fn are_factor_roots(g: &Graph, i: usize, j: usize, s: usize, t: usize) -> Result<bool, CutError> {
    are_factor_roots_bounded(g, i, j, s, t, DEFAULT_ENUMERATION_BOUND)
}

pub fn are_factor_roots_bounded(
    g: &Graph,
    i: usize,
    j: usize,
    s: usize,
    t: usize,
    bound: usize,
) -> Result<bool, CutError> {
    if s == t || s >= g.n() || t >= g.n() {
        return Err(CutError::BadRoots { s, t });
    }
    let oriented = i < j;
    Ok(enumerate_factor_cuts_bounded(g, i, j, bound)?
        .iter()
        .all(|c| c.separates(s, t, oriented)))
}

struct CutSearch<'a> {
    g: &'a Graph,
    i: usize,
    j: usize,
    /// `Some(true)` for part 1.
    side: Vec<Option<bool>>,
    crossing: Vec<usize>,
}

impl<'a> CutSearch<'a> {
    fn new(g: &'a Graph, i: usize, j: usize) -> Self {
        CutSearch { g, i, j, side: vec![None; g.n()], crossing: vec![0; g.n()] }
    }

    fn limit(&self, in_part1: bool) -> usize {
        if in_part1 {
            self.i
        } else {
            self.j
        }
    }

    fn run(&mut self, emit: &mut dyn FnMut(&[usize]) -> bool) {
        self.descend(0, emit);
    }

    fn descend(&mut self, v: usize, emit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        let n = self.g.n();
        if v == n {
            let part1: Vec<usize> = (0..n).filter(|&u| self.side[u] == Some(true)).collect();
            if part1.is_empty() || part1.len() == n {
                return true;
            }
            return emit(&part1);
        }
        let choices: &[bool] = if v == 0 && self.i == self.j { &[true] } else { &[true, false] };
        for &in1 in choices {
            if self.place(v, in1) && !self.descend(v + 1, emit) {
                return false;
            }
            self.unplace(v);
        }
        true
    }

    /// Puts `v` on a side; returns false if any bound is exceeded (the
    /// placement is still recorded and must be undone by the caller).
    fn place(&mut self, v: usize, in1: bool) -> bool {
        self.side[v] = Some(in1);
        let mut ok = true;
        for w in self.g.neighbors(v) {
            if let Some(sw) = self.side[w] {
                if sw != in1 {
                    self.crossing[w] += 1;
                    self.crossing[v] += 1;
                    if self.crossing[w] > self.limit(sw) {
                        ok = false;
                    }
                }
            }
        }
        ok && self.crossing[v] <= self.limit(in1)
    }

    fn unplace(&mut self, v: usize) {
        let in1 = self.side[v].take().expect("placed");
        for w in self.g.neighbors(v) {
            if let Some(sw) = self.side[w] {
                if sw != in1 {
                    self.crossing[w] -= 1;
                }
            }
        }
        self.crossing[v] = 0;
    }
}
