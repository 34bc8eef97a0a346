//! Undirected finite graphs with optional self-loops.
//!
//! Vertices are `0..n`. An edge is an unordered pair; the pair `{u, u}` is a
//! self-loop and marks `u` as reflexive. Loops never count towards degrees or
//! distances.

mod io;
mod iso;
mod vertex_set;

use std::collections::VecDeque;

use thiserror::Error;

pub use io::{parse_graph, serialize_graph, ParseError};
pub use iso::{are_isomorphic, MAX_ISOMORPHISM_VERTICES};
pub use vertex_set::VertexSet;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("graph has no vertices")]
    Empty,
    #[error("cannot identify vertex {0} with itself")]
    SelfIdentification(usize),
    #[error("isomorphism test supports at most {max} vertices, got {n}")]
    TooLargeForIsomorphism { n: usize, max: usize },
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    /// `rows[u]` holds every `v` with `{u, v}` an edge, including `u` itself
    /// when `u` carries a loop.
    rows: Vec<VertexSet>,
    edge_count: usize,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            rows: (0..n).map(|_| VertexSet::new(n)).collect(),
            edge_count: 0,
        }
    }

    /// Builds a graph from an edge list, rejecting duplicates and
    /// out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if !g.add_edge(u, v) {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
        }
        Ok(g)
    }

    /// Builds a graph from an edge list plus a list of looped vertices.
    pub fn with_loops(
        n: usize,
        edges: &[(usize, usize)],
        loops: &[usize],
    ) -> Result<Self, GraphError> {
        let mut all: Vec<_> = edges.to_vec();
        all.extend(loops.iter().map(|&u| (u, u)));
        Graph::from_edges(n, &all)
    }

    /// Inserts `{u, v}`; returns `false` if it was already present.
    /// Panics on out-of-range endpoints.
    pub fn add_edge(&mut self, u: usize, v: usize) -> bool {
        let n = self.n();
        assert!(u < n && v < n, "edge {{{u}, {v}}} out of range for n = {n}");
        if !self.rows[u].insert(v) {
            return false;
        }
        self.rows[v].insert(u);
        self.edge_count += 1;
        true
    }

    /// Appends a fresh isolated vertex and returns its id.
    pub fn add_vertex(&mut self) -> usize {
        let n = self.n() + 1;
        let mut rows: Vec<VertexSet> = Vec::with_capacity(n);
        for row in &self.rows {
            rows.push(VertexSet::from_iter_with_capacity(n, row.iter()));
        }
        rows.push(VertexSet::new(n));
        self.rows = rows;
        n - 1
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    /// Number of edges, loops included.
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.rows[u].contains(v)
    }

    pub fn is_reflexive(&self, u: usize) -> bool {
        self.has_edge(u, u)
    }

    pub fn reflexive_vertices(&self) -> Vec<usize> {
        (0..self.n()).filter(|&u| self.is_reflexive(u)).collect()
    }

    pub fn is_irreflexive(&self) -> bool {
        (0..self.n()).all(|u| !self.is_reflexive(u))
    }

    pub fn is_fully_reflexive(&self) -> bool {
        (0..self.n()).all(|u| self.is_reflexive(u))
    }

    /// Edges as `(u, v)` with `u <= v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| self.rows[u].iter().filter(move |&v| v >= u).map(move |v| (u, v)))
    }

    /// Non-loop neighbours of `u`, ascending.
    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.rows[u].iter().filter(move |&v| v != u)
    }

    /// Closed neighbourhood of `u` ignoring loops: `N(u) ∪ {u}`.
    pub fn closed_neighborhood(&self, u: usize) -> VertexSet {
        let mut s = self.rows[u].clone();
        s.insert(u);
        s
    }

    /// Number of non-loop edges at `u`.
    pub fn degree(&self, u: usize) -> usize {
        self.rows[u].len() - usize::from(self.is_reflexive(u))
    }

    /// Breadth-first distances from `source`; `None` marks unreachable
    /// vertices. Loops never shorten a path.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for v in self.neighbors(u) {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// All-pairs distance table.
    pub fn distance_matrix(&self) -> Vec<Vec<Option<usize>>> {
        (0..self.n()).map(|u| self.distances_from(u)).collect()
    }

    /// Components as ascending vertex lists, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for start in 0..self.n() {
            if seen[start] {
                continue;
            }
            let mut comp = Vec::new();
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(u) = stack.pop() {
                comp.push(u);
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Subgraph induced by `vertices`; new vertex `k` is `vertices[k]`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::new(vertices.len());
        for (a, &u) in vertices.iter().enumerate() {
            for (b, &v) in vertices.iter().enumerate().skip(a) {
                if self.has_edge(u, v) {
                    g.add_edge(a, b);
                }
            }
        }
        g
    }

    /// Size of a largest set of pairwise adjacent distinct vertices.
    pub fn max_clique_size(&self) -> Result<usize, GraphError> {
        if self.n() == 0 {
            return Err(GraphError::Empty);
        }
        Ok(self.max_clique_within(&VertexSet::full(self.n())))
    }

    /// Largest clique using only vertices of `allowed`; 0 if `allowed` is empty.
    pub fn max_clique_within(&self, allowed: &VertexSet) -> usize {
        let mut best = 0;
        let candidates: Vec<usize> = allowed.iter().collect();
        self.clique_branch(&mut 0, &candidates, &mut best);
        best
    }

    fn clique_branch(&self, size: &mut usize, candidates: &[usize], best: &mut usize) {
        if candidates.is_empty() {
            *best = (*best).max(*size);
            return;
        }
        for (idx, &v) in candidates.iter().enumerate() {
            // bound: even taking every remaining candidate cannot beat best
            if *size + candidates.len() - idx <= *best {
                return;
            }
            let next: Vec<usize> = candidates[idx + 1..]
                .iter()
                .copied()
                .filter(|&w| self.has_edge(v, w))
                .collect();
            *size += 1;
            self.clique_branch(size, &next, best);
            *size -= 1;
        }
    }

    /// Two-colourability of the loop-free part.
    pub fn is_bipartite(&self) -> bool {
        let mut side: Vec<Option<bool>> = vec![None; self.n()];
        for start in 0..self.n() {
            if side[start].is_some() {
                continue;
            }
            side[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let su = side[u].unwrap();
                for v in self.neighbors(u) {
                    match side[v] {
                        None => {
                            side[v] = Some(!su);
                            queue.push_back(v);
                        }
                        Some(sv) if sv == su => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    /// Irreflexive and every pair of distinct vertices adjacent.
    pub fn is_irreflexive_complete(&self) -> bool {
        self.is_irreflexive() && (0..self.n()).all(|u| self.degree(u) + 1 == self.n())
    }

    /// Connected with no cycle of length at least three (loops allowed).
    pub fn is_tree(&self) -> bool {
        let loops = self.reflexive_vertices().len();
        self.n() > 0 && self.is_connected() && self.edge_count - loops + 1 == self.n()
    }

    /// Whether the reflexive vertices among `component` induce a connected
    /// subgraph. Zero or one reflexive vertex counts as connected.
    pub fn component_is_loop_connected(&self, component: &[usize]) -> bool {
        let refl: Vec<usize> = component.iter().copied().filter(|&u| self.is_reflexive(u)).collect();
        refl.len() <= 1 || self.induced_subgraph(&refl).is_connected()
    }

    /// Loop-connectivity of each connected component, in component order.
    pub fn loop_connected_components(&self) -> Vec<bool> {
        self.connected_components()
            .iter()
            .map(|c| self.component_is_loop_connected(c))
            .collect()
    }

    /// True iff every connected component is loop-connected.
    pub fn is_loop_connected(&self) -> bool {
        self.loop_connected_components().into_iter().all(|b| b)
    }

    /// Merges `u` and `v` into one vertex adjacent to the union of their
    /// neighbourhoods. The merged vertex is reflexive iff `u` or `v` was, or
    /// `uv` was an edge. The merged vertex takes id `min(u, v)`; ids above
    /// `max(u, v)` shift down by one. Returns the new graph and the old→new
    /// id map.
    pub fn identify_vertices(&self, u: usize, v: usize) -> Result<(Graph, Vec<usize>), GraphError> {
        let n = self.n();
        for x in [u, v] {
            if x >= n {
                return Err(GraphError::VertexOutOfRange { vertex: x, n });
            }
        }
        if u == v {
            return Err(GraphError::SelfIdentification(u));
        }
        let (keep, drop) = (u.min(v), u.max(v));
        let map: Vec<usize> = (0..n)
            .map(|x| match x.cmp(&drop) {
                std::cmp::Ordering::Less => x,
                std::cmp::Ordering::Equal => keep,
                std::cmp::Ordering::Greater => x - 1,
            })
            .collect();
        let mut g = Graph::new(n - 1);
        for (a, b) in self.edges() {
            g.add_edge(map[a], map[b]);
        }
        Ok((g, map))
    }

    /// Adds a true twin of `v`: a new vertex adjacent to `v` and to every
    /// neighbour of `v`. Returns the new graph; the twin has id `n`.
    pub fn add_true_twin(&self, v: usize, make_reflexive: bool) -> Graph {
        assert!(v < self.n(), "vertex {v} out of range");
        let mut g = self.clone();
        let twin = g.add_vertex();
        let nbrs: Vec<usize> = self.neighbors(v).collect();
        g.add_edge(twin, v);
        for w in nbrs {
            g.add_edge(twin, w);
        }
        if make_reflexive {
            g.add_edge(twin, twin);
        }
        g
    }

    /// Adjacent vertices with equal neighbourhoods outside the pair.
    pub fn are_true_twins(&self, u: usize, v: usize) -> bool {
        u != v && self.has_edge(u, v) && self.closed_neighborhood(u) == self.closed_neighborhood(v)
    }

    /// Partitions `vertices` into maximal classes of mutual true twins.
    /// Classes are ascending and ordered by smallest member.
    pub fn true_twin_classes(&self, vertices: &[usize]) -> Vec<Vec<usize>> {
        let mut sorted = vertices.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let mut classes: Vec<Vec<usize>> = Vec::new();
        'outer: for u in sorted {
            for class in classes.iter_mut() {
                if self.are_true_twins(class[0], u) {
                    class.push(u);
                    continue 'outer;
                }
            }
            classes.push(vec![u]);
        }
        classes
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges().collect::<Vec<_>>())
    }
}

/// Named small graphs used throughout tests and the classifier.
pub mod named {
    use super::Graph;

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn with_loops_at(g: &Graph, loops: &[usize]) -> Graph {
        let mut g = g.clone();
        for &u in loops {
            g.add_edge(u, u);
        }
        g
    }

    pub fn reflexive(g: &Graph) -> Graph {
        let all: Vec<usize> = (0..g.n()).collect();
        with_loops_at(g, &all)
    }

    /// Reflexive 4-cycle.
    pub fn c4_star() -> Graph {
        reflexive(&cycle(4))
    }

    /// Irreflexive diamond: K4 minus the edge {1, 2}.
    pub fn diamond() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 3), (2, 3)]).unwrap()
    }

    /// Triangle 0-1-2 with pendant 3 attached to 2.
    pub fn paw() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (2, 3)]).unwrap()
    }

    /// Paw with a loop on the pendant vertex.
    pub fn paw_star() -> Graph {
        with_loops_at(&paw(), &[3])
    }
}

#[cfg(test)]
mod tests {
    use super::named::*;
    use super::*;

    #[test]
    fn distances_on_path_and_disconnected() {
        assert_eq!(path(3).distances_from(0), vec![Some(0), Some(1), Some(2)]);
        assert_eq!(Graph::new(2).distances_from(0), vec![Some(0), None]);
    }

    #[test]
    fn loops_do_not_change_distances_or_degree() {
        let g = c4_star();
        assert_eq!(g.distances_from(0), cycle(4).distances_from(0));
        assert_eq!(g.degree(0), 2);
    }

    #[test]
    fn clique_sizes() {
        assert_eq!(complete(2).max_clique_size().unwrap(), 2);
        assert_eq!(c4_star().max_clique_size().unwrap(), 2);
        assert_eq!(Graph::new(3).max_clique_size().unwrap(), 1);
        assert_eq!(diamond().max_clique_size().unwrap(), 3);
        assert_eq!(Graph::new(0).max_clique_size(), Err(GraphError::Empty));
    }

    #[test]
    fn loop_connectivity_examples() {
        assert!(reflexive(&path(3)).is_loop_connected());
        assert!(!with_loops_at(&path(3), &[0, 2]).is_loop_connected());
        assert!(cycle(4).is_loop_connected());
        // per-component answers
        let mut g = with_loops_at(&path(3), &[0, 2]);
        g.add_vertex();
        assert_eq!(g.loop_connected_components(), vec![false, true]);
    }

    #[test]
    fn identify_examples() {
        let (g, map) = path(3).identify_vertices(0, 2).unwrap();
        assert_eq!(g, complete(2));
        assert_eq!(map, vec![0, 1, 0]);

        let (g, _) = complete(2).identify_vertices(0, 1).unwrap();
        assert_eq!(g.n(), 1);
        assert!(g.is_reflexive(0));

        // 4-cycle 0-1-2-3, fold 0 onto 2: path 1 - x - 3 with x = 0
        let (g, map) = cycle(4).identify_vertices(0, 2).unwrap();
        assert_eq!(map, vec![0, 1, 0, 2]);
        assert_eq!(g, Graph::from_edges(3, &[(0, 1), (0, 2)]).unwrap());
        assert!(!g.is_reflexive(0));

        assert_eq!(path(3).identify_vertices(1, 1), Err(GraphError::SelfIdentification(1)));
    }

    #[test]
    fn true_twin_examples() {
        let single = Graph::with_loops(1, &[], &[0]).unwrap();
        let twin = single.add_true_twin(0, true);
        assert_eq!(twin, reflexive(&complete(2)));

        let p3 = with_loops_at(&path(3), &[0, 2]);
        let lifted = p3.add_true_twin(0, true);
        assert_eq!(lifted.n(), 4);
        assert!(lifted.has_edge(3, 0) && lifted.has_edge(3, 1) && lifted.is_reflexive(3));
        assert!(!lifted.has_edge(3, 2));
        assert_eq!(lifted.true_twin_classes(&[0, 1, 2, 3]), vec![vec![0, 3], vec![1], vec![2]]);
    }

    #[test]
    fn bipartite_and_complete() {
        assert!(cycle(4).is_bipartite());
        assert!(c4_star().is_bipartite());
        assert!(!cycle(5).is_bipartite());
        assert!(complete(3).is_irreflexive_complete());
        assert!(!with_loops_at(&complete(3), &[0]).is_irreflexive_complete());
        assert!(complete(1).is_irreflexive_complete());
    }

    #[test]
    fn tree_detection_ignores_loops() {
        assert!(reflexive(&path(5)).is_tree());
        assert!(!cycle(3).is_tree());
        assert!(!Graph::new(2).is_tree());
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        assert_eq!(
            Graph::from_edges(2, &[(0, 2)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, n: 2 })
        );
        assert_eq!(
            Graph::from_edges(2, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
    }
}
