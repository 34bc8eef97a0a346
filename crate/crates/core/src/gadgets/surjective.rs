use super::{check_source, GadgetError, GadgetInstance, GadgetKind, Role, TargetAnalysis};
use crate::graph::Graph;

/// Vertex count of the colouring instance built from a source with `n`
/// vertices and `m` edges.
pub fn expected_surjective_size(ta: &TargetAnalysis, n: usize, m: usize, clique_size: usize) -> usize {
    clique_size * n + 2 * (ta.ell - 1) * m + ta.target.n() - 2
}

/// Builds the surjective colouring instance for `(g, s, t)` against the
/// analysed target.
///
/// Every source vertex `u` becomes a clique `C_u` of `clique_size` vertices
/// (default `omega`). Every source edge `uv` becomes two paths of length
/// `ell - 2`, one from a red neighbour of `C_u` to a blue neighbour of
/// `C_v` and one the other way round. Red neighbours of a clique form a
/// clique, blue neighbours stay independent. The `p`-side graph is glued
/// onto the first `omega` members of `C_s` and the `q`-side graph onto
/// those of `C_t`.
pub fn build_surjective_instance(
    ta: &TargetAnalysis,
    g: &Graph,
    s: usize,
    t: usize,
    clique_size: Option<usize>,
) -> Result<GadgetInstance, GadgetError> {
    check_source(g, s, t)?;
    let size = clique_size.unwrap_or(ta.omega);
    if size < ta.omega {
        return Err(GadgetError::CliqueTooSmall { size, omega: ta.omega });
    }
    let n = g.n();
    let mut roles: Vec<Role> = Vec::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let push = |roles: &mut Vec<Role>, r: Role| {
        roles.push(r);
        roles.len() - 1
    };

    let cliques: Vec<Vec<usize>> = (0..n)
        .map(|owner| (0..size).map(|index| push(&mut roles, Role::CliqueMember { owner, index })).collect())
        .collect();

    let mut red: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut blue: Vec<Vec<usize>> = vec![Vec::new(); n];
    let source_edges: Vec<(usize, usize)> = g.edges().collect();
    for (e, &(u, v)) in source_edges.iter().enumerate() {
        if ta.ell == 2 {
            let a = push(&mut roles, Role::RedBlue { red_owner: u, blue_owner: v, edge: e });
            let b = push(&mut roles, Role::RedBlue { red_owner: v, blue_owner: u, edge: e });
            red[u].push(a);
            blue[v].push(a);
            red[v].push(b);
            blue[u].push(b);
            continue;
        }
        let ru = push(&mut roles, Role::Red { owner: u, edge: e });
        let bu = push(&mut roles, Role::Blue { owner: u, edge: e });
        let rv = push(&mut roles, Role::Red { owner: v, edge: e });
        let bv = push(&mut roles, Role::Blue { owner: v, edge: e });
        red[u].push(ru);
        blue[u].push(bu);
        red[v].push(rv);
        blue[v].push(bv);
        for (path, from, to) in [(1u8, ru, bv), (2u8, rv, bu)] {
            let mut prev = from;
            for position in 1..ta.ell - 2 {
                let x = push(&mut roles, Role::PathInner { edge: e, path, position });
                edges.push((prev, x));
                prev = x;
            }
            edges.push((prev, to));
        }
    }

    for u in 0..n {
        for (a, &x) in cliques[u].iter().enumerate() {
            for &y in &cliques[u][a + 1..] {
                edges.push((x, y));
            }
            for &w in red[u].iter().chain(&blue[u]) {
                edges.push((x, w));
            }
        }
        for (a, &x) in red[u].iter().enumerate() {
            for &y in &red[u][a + 1..] {
                edges.push((x, y));
            }
        }
    }

    glue(&mut roles, &mut edges, &ta.f1, &cliques[s], |x| Role::F1Vertex { x });
    glue(&mut roles, &mut edges, &ta.f2, &cliques[t], |x| Role::F2Vertex { x });

    let mut graph = Graph::new(roles.len());
    for (a, b) in edges {
        graph.add_edge(a, b);
    }
    Ok(GadgetInstance {
        graph,
        provenance: roles,
        kind: GadgetKind::Surjective {
            s,
            t,
            p: ta.p,
            q: ta.q,
            ell: ta.ell,
            omega: ta.omega,
            clique_size: size,
            r_p: ta.r_p,
            r_q: ta.r_q,
        },
        source_vertices: n,
        source_edges: source_edges.len(),
    })
}

/// Copies a rooted side graph into the instance, mapping its roots onto the
/// leading members of `clique`.
fn glue(
    roles: &mut Vec<Role>,
    edges: &mut Vec<(usize, usize)>,
    side: &super::RootedGraph,
    clique: &[usize],
    tag: impl Fn(usize) -> Role,
) {
    let mut id = vec![0; side.graph.n()];
    for (k, &r) in side.roots.iter().enumerate() {
        id[r] = clique[k];
    }
    for v in 0..side.graph.n() {
        if !side.roots.contains(&v) {
            roles.push(tag(side.origin[v]));
            id[v] = roles.len() - 1;
        }
    }
    for (a, b) in side.graph.edges() {
        if !(side.roots.contains(&a) && side.roots.contains(&b)) {
            edges.push((id[a], id[b]));
        }
    }
}
