use super::TargetError;
use crate::graph::{Graph, VertexSet};

/// A graph built from part of a target with one target vertex blown up into
/// a clique of root vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedGraph {
    pub graph: Graph,
    /// The clique that replaced the reflexive vertex, in index order.
    pub roots: Vec<usize>,
    /// Target vertex each vertex stands for.
    pub origin: Vec<usize>,
}

/// Derived quantities of a connected target with exactly two non-adjacent
/// reflexive vertices `p < q`.
#[derive(Clone, Debug)]
pub struct TargetAnalysis {
    pub target: Graph,
    pub p: usize,
    pub q: usize,
    /// `dist(p, q)`, at least 2.
    pub ell: usize,
    /// Largest clique size of the target.
    pub omega: usize,
    /// Vertices strictly closer to `p` than to `q`.
    pub h1: VertexSet,
    /// Vertices at least as close to `q` as to `p`.
    pub h2: VertexSet,
    /// Induced `h1` with `p` replaced by `omega` roots.
    pub f1: RootedGraph,
    /// Induced `h2` with `q` replaced by `omega` roots.
    pub f2: RootedGraph,
    /// Neighbours of `p` lying on a shortest `p`–`q` path.
    pub n_p: VertexSet,
    pub n_q: VertexSet,
    /// Largest clique inside `n_p` / `n_q`.
    pub r_p: usize,
    pub r_q: usize,
}

pub fn analyze_target(h: &Graph) -> Result<TargetAnalysis, TargetError> {
    let refl = h.reflexive_vertices();
    if refl.len() != 2 {
        return Err(TargetError::ReflexiveCount(refl.len()));
    }
    let (p, q) = (refl[0], refl[1]);
    if h.has_edge(p, q) {
        return Err(TargetError::ReflexiveAdjacent(p, q));
    }
    if !h.is_connected() {
        return Err(TargetError::NotConnected);
    }
    let n = h.n();
    let dp: Vec<usize> = h.distances_from(p).into_iter().map(|d| d.unwrap()).collect();
    let dq: Vec<usize> = h.distances_from(q).into_iter().map(|d| d.unwrap()).collect();
    let ell = dp[q];
    let omega = h.max_clique_size().expect("non-empty");

    let h1 = VertexSet::from_iter_with_capacity(n, (0..n).filter(|&v| dp[v] < dq[v]));
    let h2 = h1.complement();
    check_split(h, &h1, p, &dp)?;
    check_split(h, &h2, q, &dq)?;

    let n_p = VertexSet::from_iter_with_capacity(n, h.neighbors(p).filter(|&x| dq[x] + 1 == ell));
    let n_q = VertexSet::from_iter_with_capacity(n, h.neighbors(q).filter(|&x| dp[x] + 1 == ell));
    let r_p = h.max_clique_within(&n_p);
    let r_q = h.max_clique_within(&n_q);

    Ok(TargetAnalysis {
        f1: rooted(h, &h1, p, omega),
        f2: rooted(h, &h2, q, omega),
        target: h.clone(),
        p,
        q,
        ell,
        omega,
        h1,
        h2,
        n_p,
        n_q,
        r_p,
        r_q,
    })
}

/// Each side of the split is connected and keeps distances to its
/// reflexive vertex. This always holds for connected targets; a failure is
/// a bug.
fn check_split(h: &Graph, side: &VertexSet, root: usize, dist: &[usize]) -> Result<(), TargetError> {
    let members = side.to_vec();
    let sub = h.induced_subgraph(&members);
    if !sub.is_connected() {
        return Err(TargetError::SplitInvariant(format!(
            "side containing {} is disconnected",
            root + 1
        )));
    }
    let local_root = members.iter().position(|&v| v == root).ok_or_else(|| {
        TargetError::SplitInvariant(format!("vertex {} not on its own side", root + 1))
    })?;
    let local = sub.distances_from(local_root);
    for (k, &v) in members.iter().enumerate() {
        if local[k] != Some(dist[v]) {
            return Err(TargetError::SplitInvariant(format!(
                "distance from {} to {} changes inside its side",
                root + 1,
                v + 1
            )));
        }
    }
    Ok(())
}

fn rooted(h: &Graph, side: &VertexSet, root: usize, omega: usize) -> RootedGraph {
    let mut origin = vec![root; omega];
    origin.extend(side.iter().filter(|&v| v != root));
    let mut graph = Graph::new(origin.len());
    for a in 0..origin.len() {
        for b in a + 1..origin.len() {
            if h.has_edge(origin[a], origin[b]) {
                graph.add_edge(a, b);
            }
        }
    }
    RootedGraph { graph, roots: (0..omega).collect(), origin }
}

/// Adds `i` reflexive true twins of `p` and then `j` of `q`.
pub fn lift_target(ta: &TargetAnalysis, i: usize, j: usize) -> Graph {
    let mut g = ta.target.clone();
    for _ in 0..i {
        g = g.add_true_twin(ta.p, true);
    }
    for _ in 0..j {
        g = g.add_true_twin(ta.q, true);
    }
    g
}
