use super::{check_source, GadgetError, GadgetInstance, GadgetKind, KClique, Role};
use crate::graph::Graph;

/// Builds the `(1, j)`-factor cut instance from a matching-cut instance
/// `(g, s, t)`. Adds a clique `K` on `k = max((n-1)(j-1), 1+j)` vertices,
/// joins `s` to all of it, and gives every other vertex `j-1` private
/// neighbours in `K`. With `j = 1` the input is returned unchanged.
pub fn build_factorcut_case1(g: &Graph, s: usize, t: usize, j: usize) -> Result<GadgetInstance, GadgetError> {
    check_source(g, s, t)?;
    if j < 1 {
        return Err(GadgetError::BadParameters(format!("j = {j}, need j >= 1")));
    }
    let n = g.n();
    if j == 1 {
        return Ok(GadgetInstance {
            graph: g.clone(),
            provenance: (0..n).map(|vertex| Role::Original { vertex }).collect(),
            kind: GadgetKind::FactorCutPassThrough { s, t },
            source_vertices: n,
            source_edges: g.edge_count(),
        });
    }
    let k = ((n - 1) * (j - 1)).max(1 + j);
    let mut out = Builder::new(g);
    let clique = out.add_clique(KClique::Single, k);
    out.attach(s, &clique, j - 1);
    Ok(out.finish(GadgetKind::FactorCutCase1 { s, t, j, k }))
}

/// Builds the `(i, j)`-factor cut instance for `i >= 2`. Two cliques of
/// size `k = max((n-1)(j-1), i+j)` hang off `s` and `t`; every vertex other
/// than `s` gets `j-1` private neighbours in `K_s` and every vertex other
/// than `t` gets `i-1` private neighbours in `K_t`.
pub fn build_factorcut_case2(
    g: &Graph,
    s: usize,
    t: usize,
    i: usize,
    j: usize,
) -> Result<GadgetInstance, GadgetError> {
    check_source(g, s, t)?;
    if i < 2 || j < i {
        return Err(GadgetError::BadParameters(format!("i = {i}, j = {j}, need 2 <= i <= j")));
    }
    let n = g.n();
    let k = ((n - 1) * (j - 1)).max(i + j);
    let mut out = Builder::new(g);
    let ks = out.add_clique(KClique::AtS, k);
    let kt = out.add_clique(KClique::AtT, k);
    out.attach(s, &ks, j - 1);
    out.attach(t, &kt, i - 1);
    Ok(out.finish(GadgetKind::FactorCutCase2 { s, t, i, j, k }))
}

/// Vertices of `G` in the order they receive clique neighbours, skipping the
/// root the clique hangs off.
pub fn clique_order(n: usize, root: usize) -> impl Iterator<Item = usize> {
    (0..n).filter(move |&v| v != root)
}

struct Builder {
    graph: Graph,
    roles: Vec<Role>,
    n_source: usize,
    m_source: usize,
}

impl Builder {
    fn new(g: &Graph) -> Self {
        Builder {
            graph: g.clone(),
            roles: (0..g.n()).map(|vertex| Role::Original { vertex }).collect(),
            n_source: g.n(),
            m_source: g.edge_count(),
        }
    }

    fn add_clique(&mut self, clique: KClique, k: usize) -> Vec<usize> {
        let start = self.graph.n();
        let mut g = Graph::new(start + k);
        for (u, v) in self.graph.edges() {
            g.add_edge(u, v);
        }
        for a in start..start + k {
            for b in a + 1..start + k {
                g.add_edge(a, b);
            }
        }
        self.graph = g;
        self.roles.extend((0..k).map(|index| Role::KVertex { clique, index }));
        (start..start + k).collect()
    }

    /// Joins `root` to the whole clique, then hands out `per_vertex` clique
    /// vertices to each other source vertex, round-robin in id order.
    fn attach(&mut self, root: usize, clique: &[usize], per_vertex: usize) {
        for &c in clique {
            self.graph.add_edge(root, c);
        }
        let mut next = 0;
        for v in clique_order(self.n_source, root) {
            for _ in 0..per_vertex {
                self.graph.add_edge(v, clique[next % clique.len()]);
                next += 1;
            }
        }
    }

    fn finish(self, kind: GadgetKind) -> GadgetInstance {
        GadgetInstance {
            graph: self.graph,
            provenance: self.roles,
            kind,
            source_vertices: self.n_source,
            source_edges: self.m_source,
        }
    }
}
