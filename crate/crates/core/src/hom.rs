//! Exact backtracking search for homomorphisms `G → H` under five contracts:
//! plain, vertex-surjective, compaction (every non-loop target edge
//! realised), retraction (an induced copy of `H` fixed pointwise) and list
//! homomorphism.
//!
//! Variables are the vertices of `G`, taken in a fixed order (descending
//! degree, ties by id); values are tried in ascending id. Domains are bit
//! masks over `V(H)` maintained by arc consistency after every assignment,
//! so the first witness found is always the lexicographically least one in
//! that order regardless of how much pruning fires.

use std::fmt;

use thiserror::Error;

use crate::graph::Graph;

/// Target graphs are limited to 64 vertices so domains fit in a `u64`.
pub const MAX_TARGET_VERTICES: usize = 64;

/// A total map `V(G) → V(H)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexMapping {
    image: Vec<usize>,
}

impl VertexMapping {
    pub fn new(image: Vec<usize>) -> Self {
        VertexMapping { image }
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn get(&self, u: usize) -> usize {
        self.image[u]
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    /// `<u> -> <x>` per line, 1-based, sorted by `u`.
    pub fn to_text(&self) -> String {
        self.image
            .iter()
            .enumerate()
            .map(|(u, x)| format!("{} -> {}\n", u + 1, x + 1))
            .collect()
    }

    pub fn parse_text(text: &str) -> Result<Self, String> {
        let mut pairs = Vec::new();
        for (idx, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let (u, x) = line
                .split_once("->")
                .and_then(|(a, b)| Some((a.trim().parse::<usize>().ok()?, b.trim().parse::<usize>().ok()?)))
                .filter(|&(u, x)| u > 0 && x > 0)
                .ok_or_else(|| format!("line {}: expected `<u> -> <x>`", idx + 1))?;
            pairs.push((u - 1, x - 1));
        }
        pairs.sort_unstable();
        for (k, &(u, _)) in pairs.iter().enumerate() {
            if u != k {
                return Err(format!("mapping is not total: vertex {} missing or repeated", k + 1));
            }
        }
        Ok(VertexMapping::new(pairs.into_iter().map(|(_, x)| x).collect()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HomVariant {
    Plain,
    Surjective,
    Compaction,
    /// `(g_vertex, h_vertex)` pairs; every `H` vertex appears once and the
    /// anchored `G` vertices induce a copy of `H` under this map.
    Retraction { anchors: Vec<(usize, usize)> },
    /// One list of allowed `H` vertices per `G` vertex.
    List { lists: Vec<Vec<usize>> },
}

impl HomVariant {
    pub fn name(&self) -> &'static str {
        match self {
            HomVariant::Plain => "hom",
            HomVariant::Surjective => "surj",
            HomVariant::Compaction => "comp",
            HomVariant::Retraction { .. } => "retr",
            HomVariant::List { .. } => "list",
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HomError {
    #[error("target has {0} vertices; at most {MAX_TARGET_VERTICES} are supported")]
    TargetTooLarge(usize),
    #[error("input vertex {0} has a self-loop; inputs must be irreflexive for this variant")]
    ReflexiveInput(usize),
    #[error("invalid retraction anchors: {0}")]
    InvalidAnchors(String),
    #[error("invalid lists: {0}")]
    InvalidLists(String),
    #[error("solver produced a witness that fails verification: {0}")]
    SelfCheckFailed(WitnessViolation),
}

/// Why a mapping is not a witness.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WitnessViolation {
    #[error("mapping has {got} entries, input has {expected} vertices")]
    WrongLength { expected: usize, got: usize },
    #[error("vertex {vertex} maps to {image}, outside the target")]
    ImageOutOfRange { vertex: usize, image: usize },
    #[error("edge {{{0}, {1}}} maps to non-edge {{{2}, {3}}}")]
    EdgeNotPreserved(usize, usize, usize, usize),
    #[error("target vertex {0} is not hit")]
    VertexNotHit(usize),
    #[error("target edge {{{0}, {1}}} is not realised")]
    EdgeNotCovered(usize, usize),
    #[error("anchor {vertex} maps to {image}, expected {expected}")]
    AnchorMoved { vertex: usize, image: usize, expected: usize },
    #[error("vertex {vertex} maps to {image}, not in its list")]
    NotInList { vertex: usize, image: usize },
    #[error("malformed variant data: {0}")]
    Malformed(String),
}

/// Why no witness was returned.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Infeasibility {
    /// A list-homomorphism list was empty.
    EmptyList { vertex: usize },
    /// The search space was exhausted.
    Exhausted,
}

impl fmt::Display for Infeasibility {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Infeasibility::EmptyList { vertex } => write!(f, "empty list at vertex {}", vertex + 1),
            Infeasibility::Exhausted => write!(f, "search exhausted"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveOutcome {
    Found(VertexMapping),
    Infeasible(Infeasibility),
}

impl SolveOutcome {
    pub fn witness(&self) -> Option<&VertexMapping> {
        match self {
            SolveOutcome::Found(f) => Some(f),
            SolveOutcome::Infeasible(_) => None,
        }
    }

    pub fn into_witness(self) -> Option<VertexMapping> {
        match self {
            SolveOutcome::Found(f) => Some(f),
            SolveOutcome::Infeasible(_) => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, SolveOutcome::Found(_))
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct SolveOptions {
    /// Permit self-loops in `G` for the plain, surjective and compaction
    /// variants. A looped input vertex must map to a looped target vertex.
    pub allow_reflexive_input: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enumeration {
    pub mappings: Vec<VertexMapping>,
    /// Set when the limit cut the enumeration short.
    pub truncated: bool,
}

/// Checks edge preservation plus the variant's extra clause.
pub fn verify_witness(
    g: &Graph,
    h: &Graph,
    f: &VertexMapping,
    variant: &HomVariant,
) -> Result<(), WitnessViolation> {
    if f.len() != g.n() {
        return Err(WitnessViolation::WrongLength { expected: g.n(), got: f.len() });
    }
    for (u, &x) in f.image().iter().enumerate() {
        if x >= h.n() {
            return Err(WitnessViolation::ImageOutOfRange { vertex: u, image: x });
        }
    }
    for (u, v) in g.edges() {
        let (x, y) = (f.get(u), f.get(v));
        if !h.has_edge(x, y) {
            return Err(WitnessViolation::EdgeNotPreserved(u, v, x, y));
        }
    }
    match variant {
        HomVariant::Plain => {}
        HomVariant::Surjective => {
            let mut hit = vec![false; h.n()];
            for &x in f.image() {
                hit[x] = true;
            }
            if let Some(x) = hit.iter().position(|&b| !b) {
                return Err(WitnessViolation::VertexNotHit(x));
            }
        }
        HomVariant::Compaction => {
            for (x, y) in h.edges().filter(|(x, y)| x != y) {
                let covered = g.edges().any(|(u, v)| {
                    let (a, b) = (f.get(u), f.get(v));
                    (a, b) == (x, y) || (a, b) == (y, x)
                });
                if !covered {
                    return Err(WitnessViolation::EdgeNotCovered(x, y));
                }
            }
        }
        HomVariant::Retraction { anchors } => {
            for &(u, x) in anchors {
                if u >= g.n() {
                    return Err(WitnessViolation::Malformed(format!("anchor vertex {u} out of range")));
                }
                if f.get(u) != x {
                    return Err(WitnessViolation::AnchorMoved { vertex: u, image: f.get(u), expected: x });
                }
            }
        }
        HomVariant::List { lists } => {
            if lists.len() != g.n() {
                return Err(WitnessViolation::Malformed(format!(
                    "{} lists for {} vertices",
                    lists.len(),
                    g.n()
                )));
            }
            for (u, list) in lists.iter().enumerate() {
                if !list.contains(&f.get(u)) {
                    return Err(WitnessViolation::NotInList { vertex: u, image: f.get(u) });
                }
            }
        }
    }
    Ok(())
}

pub fn check_witness(g: &Graph, h: &Graph, f: &VertexMapping, variant: &HomVariant) -> bool {
    verify_witness(g, h, f, variant).is_ok()
}

pub fn solve(g: &Graph, h: &Graph, variant: &HomVariant) -> Result<SolveOutcome, HomError> {
    solve_with(g, h, variant, &SolveOptions::default())
}

pub fn solve_with(
    g: &Graph,
    h: &Graph,
    variant: &HomVariant,
    options: &SolveOptions,
) -> Result<SolveOutcome, HomError> {
    let mut search = match Search::prepare(g, h, variant, options)? {
        Ok(s) => s,
        Err(why) => return Ok(SolveOutcome::Infeasible(why)),
    };
    let mut found = None;
    search.run(&mut |image| {
        found = Some(VertexMapping::new(image.to_vec()));
        false
    });
    match found {
        Some(f) => {
            verify_witness(g, h, &f, variant).map_err(HomError::SelfCheckFailed)?;
            Ok(SolveOutcome::Found(f))
        }
        None => Ok(SolveOutcome::Infeasible(Infeasibility::Exhausted)),
    }
}

/// All witnesses in search order, up to `limit`.
pub fn enumerate_all(
    g: &Graph,
    h: &Graph,
    variant: &HomVariant,
    limit: usize,
) -> Result<Enumeration, HomError> {
    enumerate_all_with(g, h, variant, limit, &SolveOptions::default())
}

pub fn enumerate_all_with(
    g: &Graph,
    h: &Graph,
    variant: &HomVariant,
    limit: usize,
    options: &SolveOptions,
) -> Result<Enumeration, HomError> {
    let mut search = match Search::prepare(g, h, variant, options)? {
        Ok(s) => s,
        Err(_) => return Ok(Enumeration { mappings: Vec::new(), truncated: false }),
    };
    let mut mappings = Vec::new();
    let mut truncated = false;
    search.run(&mut |image| {
        if mappings.len() == limit {
            truncated = true;
            return false;
        }
        mappings.push(VertexMapping::new(image.to_vec()));
        true
    });
    Ok(Enumeration { mappings, truncated })
}

fn bit(x: usize) -> u64 {
    1u64 << x
}

struct Search {
    order: Vec<usize>,
    nbrs: Vec<Vec<usize>>,
    g_edges: Vec<(usize, usize)>,
    h_adj: Vec<u64>,
    h_n: usize,
    h_all: u64,
    h_edges: Vec<(usize, usize)>,
    surjective: bool,
    compaction: bool,
    domains: Vec<u64>,
    assigned: Vec<bool>,
}

impl Search {
    /// Builds the initial state, or reports immediate infeasibility.
    fn prepare(
        g: &Graph,
        h: &Graph,
        variant: &HomVariant,
        options: &SolveOptions,
    ) -> Result<Result<Search, Infeasibility>, HomError> {
        if h.n() > MAX_TARGET_VERTICES {
            return Err(HomError::TargetTooLarge(h.n()));
        }
        let loops_checked = matches!(variant, HomVariant::Plain | HomVariant::Surjective | HomVariant::Compaction);
        if loops_checked && !options.allow_reflexive_input {
            if let Some(u) = g.reflexive_vertices().first() {
                return Err(HomError::ReflexiveInput(*u));
            }
        }
        let h_n = h.n();
        let h_all = if h_n == 64 { u64::MAX } else { bit(h_n) - 1 };
        let h_adj: Vec<u64> = (0..h_n)
            .map(|x| (0..h_n).filter(|&y| h.has_edge(x, y)).fold(0, |m, y| m | bit(y)))
            .collect();
        let refl_mask = h.reflexive_vertices().into_iter().fold(0, |m, x| m | bit(x));

        let mut domains = vec![h_all; g.n()];
        match variant {
            HomVariant::Retraction { anchors } => {
                validate_anchors(g, h, anchors)?;
                for &(u, x) in anchors {
                    domains[u] = bit(x);
                }
            }
            HomVariant::List { lists } => {
                if lists.len() != g.n() {
                    return Err(HomError::InvalidLists(format!("{} lists for {} vertices", lists.len(), g.n())));
                }
                for (u, list) in lists.iter().enumerate() {
                    if let Some(&x) = list.iter().find(|&&x| x >= h_n) {
                        return Err(HomError::InvalidLists(format!("vertex {x} not in target")));
                    }
                    if list.is_empty() {
                        return Ok(Err(Infeasibility::EmptyList { vertex: u }));
                    }
                    domains[u] = list.iter().fold(0, |m, &x| m | bit(x));
                }
            }
            _ => {}
        }
        for u in g.reflexive_vertices() {
            domains[u] &= refl_mask;
        }

        let mut order: Vec<usize> = (0..g.n()).collect();
        order.sort_by_key(|&u| (std::cmp::Reverse(g.degree(u)), u));

        Ok(Ok(Search {
            order,
            nbrs: (0..g.n()).map(|u| g.neighbors(u).collect()).collect(),
            g_edges: g.edges().filter(|(u, v)| u != v).collect(),
            h_adj,
            h_n,
            h_all,
            h_edges: h.edges().filter(|(x, y)| x != y).collect(),
            surjective: matches!(variant, HomVariant::Surjective),
            compaction: matches!(variant, HomVariant::Compaction),
            domains,
            assigned: vec![false; g.n()],
        }))
    }

    /// Calls `emit` on each witness in order until it returns `false`.
    fn run(&mut self, emit: &mut dyn FnMut(&[usize]) -> bool) {
        let all: Vec<usize> = (0..self.domains.len()).collect();
        if !self.propagate(all) || !self.bounds_ok(0) {
            return;
        }
        self.descend(0, emit);
    }

    fn descend(&mut self, depth: usize, emit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if depth == self.order.len() {
            let image: Vec<usize> = self.domains.iter().map(|d| d.trailing_zeros() as usize).collect();
            return emit(&image);
        }
        let u = self.order[depth];
        let mut values = self.domains[u];
        while values != 0 {
            let x = values.trailing_zeros() as usize;
            values &= values - 1;
            let saved = self.domains.clone();
            self.domains[u] = bit(x);
            self.assigned[u] = true;
            if self.propagate(vec![u]) && self.bounds_ok(depth + 1) && !self.descend(depth + 1, emit) {
                return false;
            }
            self.assigned[u] = false;
            self.domains = saved;
        }
        true
    }

    /// Arc consistency over the edges of `G`, seeded with changed vertices.
    fn propagate(&mut self, mut queue: Vec<usize>) -> bool {
        while let Some(z) = queue.pop() {
            let support = self.support_of(self.domains[z]);
            for &w in &self.nbrs[z] {
                let narrowed = self.domains[w] & support;
                if narrowed != self.domains[w] {
                    if narrowed == 0 {
                        return false;
                    }
                    self.domains[w] = narrowed;
                    queue.push(w);
                }
            }
        }
        true
    }

    /// Target vertices adjacent to at least one member of `dom`.
    fn support_of(&self, mut dom: u64) -> u64 {
        let mut s = 0;
        while dom != 0 {
            let x = dom.trailing_zeros() as usize;
            dom &= dom - 1;
            s |= self.h_adj[x];
            if s == self.h_all {
                break;
            }
        }
        s
    }

    /// Counting bounds for the surjective and compaction contracts.
    fn bounds_ok(&self, depth: usize) -> bool {
        let unassigned = self.order.len() - depth;
        if self.surjective {
            let mut hit = 0u64;
            let mut reachable = 0u64;
            for (u, &d) in self.domains.iter().enumerate() {
                reachable |= d;
                if self.assigned[u] || d.count_ones() == 1 {
                    hit |= d;
                }
            }
            if reachable != self.h_all {
                return false;
            }
            let unhit = self.h_n - hit.count_ones() as usize;
            if unhit > unassigned {
                return false;
            }
        }
        if self.compaction {
            let mut open_edges = 0usize;
            let mut uncovered = 0usize;
            for &(u, v) in &self.g_edges {
                if self.domains[u].count_ones() > 1 || self.domains[v].count_ones() > 1 {
                    open_edges += 1;
                }
            }
            for &(x, y) in &self.h_edges {
                let (bx, by) = (bit(x), bit(y));
                let mut possible = false;
                let mut done = false;
                for &(u, v) in &self.g_edges {
                    let (du, dv) = (self.domains[u], self.domains[v]);
                    let fits = (du & bx != 0 && dv & by != 0) || (du & by != 0 && dv & bx != 0);
                    if fits {
                        possible = true;
                        if du.count_ones() == 1 && dv.count_ones() == 1 {
                            done = true;
                            break;
                        }
                    }
                }
                if !possible {
                    return false;
                }
                if !done {
                    uncovered += 1;
                }
            }
            if uncovered > open_edges {
                return false;
            }
        }
        true
    }
}

fn validate_anchors(g: &Graph, h: &Graph, anchors: &[(usize, usize)]) -> Result<(), HomError> {
    let bad = |msg: String| Err(HomError::InvalidAnchors(msg));
    if anchors.len() != h.n() {
        return bad(format!("{} anchors for a target on {} vertices", anchors.len(), h.n()));
    }
    let mut g_seen = vec![false; g.n()];
    let mut h_seen = vec![false; h.n()];
    for &(u, x) in anchors {
        if u >= g.n() || x >= h.n() {
            return bad(format!("anchor ({}, {}) out of range", u + 1, x + 1));
        }
        if std::mem::replace(&mut g_seen[u], true) || std::mem::replace(&mut h_seen[x], true) {
            return bad(format!("anchor ({}, {}) repeats a vertex", u + 1, x + 1));
        }
    }
    for &(u, x) in anchors {
        for &(v, y) in anchors {
            if g.has_edge(u, v) != h.has_edge(x, y) {
                return bad(format!(
                    "anchored vertices do not induce the target: {{{}, {}}} vs {{{}, {}}}",
                    u + 1,
                    v + 1,
                    x + 1,
                    y + 1
                ));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    /// Independent oracle: every map in `V(H)^V(G)`, filtered by the checker.
    fn brute_force(g: &Graph, h: &Graph, variant: &HomVariant) -> Vec<VertexMapping> {
        let total = h.n().pow(g.n() as u32);
        (0..total)
            .map(|mut code| {
                let image = (0..g.n())
                    .map(|_| {
                        let x = code % h.n();
                        code /= h.n();
                        x
                    })
                    .collect();
                VertexMapping::new(image)
            })
            .filter(|f| check_witness(g, h, f, variant))
            .collect()
    }

    #[test]
    fn check_witness_examples() {
        let k2 = complete(2);
        assert!(check_witness(&k2, &k2, &VertexMapping::new(vec![0, 1]), &HomVariant::Surjective));

        let p3 = path(3);
        let f = VertexMapping::new(vec![0, 1]);
        assert_eq!(
            verify_witness(&k2, &p3, &f, &HomVariant::Compaction),
            Err(WitnessViolation::EdgeNotCovered(1, 2))
        );

        let id = VertexMapping::new(vec![0, 1, 2, 3]);
        assert!(check_witness(&cycle(4), &c4_star(), &id, &HomVariant::Surjective));

        assert!(matches!(
            verify_witness(&k2, &k2, &VertexMapping::new(vec![0]), &HomVariant::Plain),
            Err(WitnessViolation::WrongLength { .. })
        ));
        assert!(matches!(
            verify_witness(&k2, &k2, &VertexMapping::new(vec![0, 5]), &HomVariant::Plain),
            Err(WitnessViolation::ImageOutOfRange { .. })
        ));
    }

    #[test]
    fn solve_examples() {
        let out = solve(&path(3), &complete(2), &HomVariant::Surjective).unwrap();
        // the centre has the highest degree and is assigned first
        assert_eq!(out.witness().unwrap().image(), &[1, 0, 1]);
        assert_eq!(
            solve(&complete(3), &complete(2), &HomVariant::Plain).unwrap(),
            SolveOutcome::Infeasible(Infeasibility::Exhausted)
        );
        assert!(!solve(&complete(2), &path(3), &HomVariant::Surjective).unwrap().is_found());
    }

    #[test]
    fn retraction_of_five_cycle_onto_path_fails() {
        // C5 = 0-1-2-3-4-0; the path 0-1-2 is induced.
        let c5 = cycle(5);
        let p3 = path(3);
        let variant = HomVariant::Retraction { anchors: vec![(0, 0), (1, 1), (2, 2)] };
        assert!(brute_force(&c5, &p3, &variant).is_empty());
        assert!(!solve(&c5, &p3, &variant).unwrap().is_found());
    }

    #[test]
    fn retraction_anchor_validation() {
        let c5 = cycle(5);
        let p3 = path(3);
        // 0,1,3 do not induce a path 0-1-2 under this map
        let variant = HomVariant::Retraction { anchors: vec![(0, 0), (1, 1), (3, 2)] };
        assert!(matches!(solve(&c5, &p3, &variant), Err(HomError::InvalidAnchors(_))));
        let variant = HomVariant::Retraction { anchors: vec![(0, 0), (1, 1)] };
        assert!(matches!(solve(&c5, &p3, &variant), Err(HomError::InvalidAnchors(_))));
    }

    #[test]
    fn empty_list_is_immediately_infeasible() {
        let variant = HomVariant::List { lists: vec![vec![0, 1], vec![]] };
        assert_eq!(
            solve(&complete(2), &complete(2), &variant).unwrap(),
            SolveOutcome::Infeasible(Infeasibility::EmptyList { vertex: 1 })
        );
    }

    #[test]
    fn reflexive_input_is_rejected_unless_allowed() {
        let g = with_loops_at(&path(2), &[0]);
        let h = with_loops_at(&complete(2), &[1]);
        assert_eq!(solve(&g, &h, &HomVariant::Plain), Err(HomError::ReflexiveInput(0)));
        let opts = SolveOptions { allow_reflexive_input: true };
        let f = solve_with(&g, &h, &HomVariant::Plain, &opts).unwrap().into_witness().unwrap();
        assert_eq!(f.image(), &[1, 0]);
    }

    #[test]
    fn enumeration_examples() {
        let k2 = complete(2);
        assert_eq!(enumerate_all(&k2, &k2, &HomVariant::Plain, 100).unwrap().mappings.len(), 2);
        let k1 = Graph::new(1);
        let k1r = reflexive(&Graph::new(1));
        assert_eq!(enumerate_all(&k1, &k1r, &HomVariant::Plain, 100).unwrap().mappings.len(), 1);
        let p3 = path(3);
        assert_eq!(brute_force(&p3, &k2, &HomVariant::Plain).len(), 2);
        assert_eq!(enumerate_all(&p3, &k2, &HomVariant::Plain, 100).unwrap().mappings.len(), 2);

        let e = enumerate_all(&p3, &k2, &HomVariant::Plain, 1).unwrap();
        assert!(e.truncated);
        assert_eq!(e.mappings.len(), 1);
    }

    #[test]
    fn enumeration_matches_brute_force_on_small_pairs() {
        let targets = [c4_star(), paw_star(), diamond(), with_loops_at(&path(3), &[0, 2]), complete(3)];
        let inputs = [path(4), cycle(4), cycle(5), complete(3), diamond()];
        for h in &targets {
            for g in &inputs {
                for variant in [HomVariant::Plain, HomVariant::Surjective, HomVariant::Compaction] {
                    let expected = brute_force(g, h, &variant);
                    let mut got = enumerate_all(g, h, &variant, usize::MAX).unwrap().mappings;
                    got.sort_by(|a, b| a.image().iter().rev().cmp(b.image().iter().rev()));
                    let mut exp = expected.clone();
                    exp.sort_by(|a, b| a.image().iter().rev().cmp(b.image().iter().rev()));
                    assert_eq!(got, exp, "{variant:?} {g:?} -> {h:?}");
                    let solved = solve(g, h, &variant).unwrap();
                    assert_eq!(solved.is_found(), !expected.is_empty());
                }
            }
        }
    }

    #[test]
    fn witness_text_round_trip() {
        let f = VertexMapping::new(vec![2, 0, 1]);
        assert_eq!(f.to_text(), "1 -> 3\n2 -> 1\n3 -> 2\n");
        assert_eq!(VertexMapping::parse_text(&f.to_text()).unwrap(), f);
        assert!(VertexMapping::parse_text("1 -> 1\n3 -> 1\n").is_err());
    }
}
