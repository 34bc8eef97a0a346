//! Reduction gadgets.
//!
//! * Matching cut → `(i, j)`-factor cut, by hanging one or two large cliques
//!   off the roots ([`build_factorcut_case1`], [`build_factorcut_case2`]).
//! * `(r_p, r_q)`-factor cut → surjective `H`-colouring for a connected
//!   target with two non-adjacent reflexive vertices
//!   ([`build_surjective_instance`]).
//! * The true-twin lift of such a target ([`lift_target`]).
//!
//! Every built vertex carries a [`Role`] recording which part of the
//! construction produced it.

mod factor;
mod surjective;
mod target;

use serde_json::{json, Value};
use thiserror::Error;

use crate::graph::Graph;

pub use factor::{build_factorcut_case1, build_factorcut_case2, clique_order};
pub use surjective::{build_surjective_instance, expected_surjective_size};
pub use target::{analyze_target, lift_target, RootedGraph, TargetAnalysis};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TargetError {
    #[error("target must have exactly two reflexive vertices, found {0}")]
    ReflexiveCount(usize),
    #[error("reflexive vertices {} and {} are adjacent", .0 + 1, .1 + 1)]
    ReflexiveAdjacent(usize, usize),
    #[error("target is not connected")]
    NotConnected,
    #[error("internal invariant violated while splitting the target: {0}")]
    SplitInvariant(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GadgetError {
    #[error(transparent)]
    Target(#[from] TargetError),
    #[error("input graph must be connected")]
    InputDisconnected,
    #[error("input graph must be irreflexive (vertex {} has a loop)", .0 + 1)]
    InputReflexive(usize),
    #[error("input graph needs at least two vertices")]
    InputTooSmall,
    #[error("roots must be distinct in-range vertices, got {} and {}", .s + 1, .t + 1)]
    BadRoots { s: usize, t: usize },
    #[error("invalid parameters: {0}")]
    BadParameters(String),
    #[error("clique size {size} is below the target clique number {omega}")]
    CliqueTooSmall { size: usize, omega: usize },
}

/// Which clique a clique vertex of a factor-cut gadget belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum KClique {
    /// The single clique of the `i = 1` construction.
    Single,
    AtS,
    AtT,
}

/// Provenance tag of one gadget vertex. Vertex ids inside tags refer to the
/// source graph `G` or target `H`; `edge` indexes `G`'s canonical edge list.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Role {
    Original { vertex: usize },
    KVertex { clique: KClique, index: usize },
    /// Member `index` of the clique `C_owner`.
    CliqueMember { owner: usize, index: usize },
    Red { owner: usize, edge: usize },
    Blue { owner: usize, edge: usize },
    /// Path of length zero: red neighbour of one clique, blue of another.
    RedBlue { red_owner: usize, blue_owner: usize, edge: usize },
    /// Inner vertex `position` (1-based) of path 1 or 2 of `edge`.
    PathInner { edge: usize, path: u8, position: usize },
    /// Non-root vertex of the `p`-side graph standing for target vertex `x`.
    F1Vertex { x: usize },
    F2Vertex { x: usize },
}

impl Role {
    fn to_json(self, id: usize) -> Value {
        let mut v = match self {
            Role::Original { vertex } => json!({"role": "original", "vertex": vertex + 1}),
            Role::KVertex { clique, index } => json!({
                "role": "k_vertex",
                "clique": match clique { KClique::Single => "K", KClique::AtS => "K_s", KClique::AtT => "K_t" },
                "index": index + 1,
            }),
            Role::CliqueMember { owner, index } => json!({"role": "clique", "owner": owner + 1, "index": index + 1}),
            Role::Red { owner, edge } => json!({"role": "red", "owner": owner + 1, "edge": edge + 1}),
            Role::Blue { owner, edge } => json!({"role": "blue", "owner": owner + 1, "edge": edge + 1}),
            Role::RedBlue { red_owner, blue_owner, edge } => json!({
                "role": "red_blue", "red_owner": red_owner + 1, "blue_owner": blue_owner + 1, "edge": edge + 1,
            }),
            Role::PathInner { edge, path, position } => {
                json!({"role": "path_inner", "edge": edge + 1, "path": path, "position": position})
            }
            Role::F1Vertex { x } => json!({"role": "f1", "target_vertex": x + 1}),
            Role::F2Vertex { x } => json!({"role": "f2", "target_vertex": x + 1}),
        };
        v["id"] = json!(id + 1);
        v
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GadgetKind {
    /// `j = 1` with `i = 1`: the instance already is a matching-cut instance.
    FactorCutPassThrough { s: usize, t: usize },
    FactorCutCase1 { s: usize, t: usize, j: usize, k: usize },
    FactorCutCase2 { s: usize, t: usize, i: usize, j: usize, k: usize },
    Surjective {
        s: usize,
        t: usize,
        p: usize,
        q: usize,
        ell: usize,
        omega: usize,
        clique_size: usize,
        r_p: usize,
        r_q: usize,
    },
}

#[derive(Clone, Debug)]
pub struct GadgetInstance {
    pub graph: Graph,
    /// One role per vertex of `graph`.
    pub provenance: Vec<Role>,
    pub kind: GadgetKind,
    pub source_vertices: usize,
    pub source_edges: usize,
}

impl GadgetInstance {
    /// Vertices whose role matches `pred`, ascending.
    pub fn vertices_where(&self, pred: impl Fn(&Role) -> bool) -> Vec<usize> {
        (0..self.provenance.len()).filter(|&v| pred(&self.provenance[v])).collect()
    }

    /// Members of `C_owner` in index order.
    pub fn clique_of(&self, owner: usize) -> Vec<usize> {
        let mut members: Vec<(usize, usize)> = self
            .provenance
            .iter()
            .enumerate()
            .filter_map(|(v, r)| match *r {
                Role::CliqueMember { owner: o, index } if o == owner => Some((index, v)),
                _ => None,
            })
            .collect();
        members.sort_unstable();
        members.into_iter().map(|(_, v)| v).collect()
    }

    /// Structured sidecar with 1-based ids.
    pub fn sidecar_json(&self) -> Value {
        let (kind, params) = match self.kind {
            GadgetKind::FactorCutPassThrough { s, t } => (
                "factorcut_pass_through",
                json!({"s": s + 1, "t": t + 1, "pass_through": true}),
            ),
            GadgetKind::FactorCutCase1 { s, t, j, k } => (
                "factorcut_case1",
                json!({"s": s + 1, "t": t + 1, "i": 1, "j": j, "k": k}),
            ),
            GadgetKind::FactorCutCase2 { s, t, i, j, k } => (
                "factorcut_case2",
                json!({"s": s + 1, "t": t + 1, "i": i, "j": j, "k": k}),
            ),
            GadgetKind::Surjective { s, t, p, q, ell, omega, clique_size, r_p, r_q } => (
                "surjective_colouring",
                json!({
                    "s": s + 1, "t": t + 1, "p": p + 1, "q": q + 1, "ell": ell, "omega": omega,
                    "clique_size": clique_size, "r_p": r_p, "r_q": r_q,
                }),
            ),
        };
        json!({
            "kind": kind,
            "params": params,
            "source": {"vertices": self.source_vertices, "edges": self.source_edges},
            "vertices": self.graph.n(),
            "roles": self.provenance.iter().enumerate().map(|(v, r)| r.to_json(v)).collect::<Vec<_>>(),
        })
    }
}

fn check_source(g: &Graph, s: usize, t: usize) -> Result<(), GadgetError> {
    if g.n() < 2 {
        return Err(GadgetError::InputTooSmall);
    }
    if let Some(&u) = g.reflexive_vertices().first() {
        return Err(GadgetError::InputReflexive(u));
    }
    if !g.is_connected() {
        return Err(GadgetError::InputDisconnected);
    }
    if s == t || s >= g.n() || t >= g.n() {
        return Err(GadgetError::BadRoots { s, t });
    }
    Ok(())
}

#[cfg(test)]
mod tests;
