use super::{Graph, GraphError};

pub const MAX_ISOMORPHISM_VERTICES: usize = 8;

/// Exact isomorphism test by permutation search. Vertices may only map to
/// vertices with the same (degree, loop) signature, and loops map to loops.
pub fn are_isomorphic(g1: &Graph, g2: &Graph) -> Result<bool, GraphError> {
    for g in [g1, g2] {
        if g.n() > MAX_ISOMORPHISM_VERTICES {
            return Err(GraphError::TooLargeForIsomorphism {
                n: g.n(),
                max: MAX_ISOMORPHISM_VERTICES,
            });
        }
    }
    if g1.n() != g2.n() || g1.edge_count() != g2.edge_count() {
        return Ok(false);
    }
    let sig = |g: &Graph, u: usize| (g.degree(u), g.is_reflexive(u));
    let mut s1: Vec<_> = (0..g1.n()).map(|u| sig(g1, u)).collect();
    let mut s2: Vec<_> = (0..g2.n()).map(|u| sig(g2, u)).collect();
    s1.sort_unstable();
    s2.sort_unstable();
    if s1 != s2 {
        return Ok(false);
    }
    let mut image = vec![usize::MAX; g1.n()];
    let mut used = vec![false; g2.n()];
    Ok(extend(g1, g2, 0, &mut image, &mut used))
}

fn extend(g1: &Graph, g2: &Graph, u: usize, image: &mut [usize], used: &mut [bool]) -> bool {
    if u == g1.n() {
        return true;
    }
    for x in 0..g2.n() {
        if used[x] || g1.degree(u) != g2.degree(x) || g1.is_reflexive(u) != g2.is_reflexive(x) {
            continue;
        }
        let consistent = (0..u).all(|w| g1.has_edge(u, w) == g2.has_edge(x, image[w]));
        if !consistent {
            continue;
        }
        image[u] = x;
        used[x] = true;
        if extend(g1, g2, u + 1, image, used) {
            return true;
        }
        used[x] = false;
    }
    false
}
