//! Labelled small targets with known verdicts, and an isomorphism-free
//! oracle for graphs on at most four vertices.

use crate::dichotomy::Verdict;
use crate::graph::Graph;

/// One labelled target: vertices `a, b, c, d` are ids `0..4`.
#[derive(Clone, Debug)]
pub struct FigureCase {
    pub family: &'static str,
    pub loops: &'static [usize],
    pub expected: Verdict,
}

impl FigureCase {
    pub fn graph(&self) -> Graph {
        Graph::with_loops(4, family_edges(self.family), self.loops).expect("fixture is well formed")
    }

    pub fn label(&self) -> String {
        let names: Vec<String> = self.loops.iter().map(|&v| ((b'a' + v as u8) as char).to_string()).collect();
        format!("{} loops={{{}}}", self.family, names.join(","))
    }
}

pub fn family_edges(family: &str) -> &'static [(usize, usize)] {
    match family {
        "cycle" => &[(0, 1), (0, 2), (1, 3), (2, 3)],
        "complete" => &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
        // b and c non-adjacent
        "diamond" => &[(0, 1), (0, 2), (0, 3), (1, 3), (2, 3)],
        // triangle a b c, pendant d on c
        "paw" => &[(0, 1), (0, 2), (1, 2), (2, 3)],
        _ => panic!("unknown family {family}"),
    }
}

const P: Verdict = Verdict::PolynomialTime;
const NPC: Verdict = Verdict::NPComplete;

macro_rules! cases {
    ($family:literal: $([$($l:literal),*] => $v:ident),* $(,)?) => {
        [$(FigureCase { family: $family, loops: &[$($l),*], expected: $v }),*]
    };
}

/// The 32 labelled connected four-vertex targets that are not trees.
pub fn figure_cases() -> Vec<FigureCase> {
    let mut out = Vec::new();
    out.extend(cases!("cycle":
        [] => P, [0] => P, [0, 1] => P, [0, 3] => NPC, [1, 2, 3] => P, [0, 1, 2, 3] => NPC,
    ));
    out.extend(cases!("complete":
        [] => NPC, [0] => P, [0, 1] => P, [1, 2, 3] => P, [0, 1, 2, 3] => P,
    ));
    out.extend(cases!("diamond":
        [] => NPC, [0] => P, [1] => P, [0, 1] => P, [0, 3] => P, [1, 2] => NPC,
        [1, 2, 3] => P, [0, 2, 3] => P, [0, 1, 2, 3] => P,
    ));
    out.extend(cases!("paw":
        [] => NPC, [2] => P, [3] => NPC, [0] => P, [0, 1] => P, [2, 3] => P,
        [0, 2] => P, [0, 3] => NPC, [1, 2, 3] => P, [0, 1, 2] => P, [0, 1, 3] => NPC,
        [0, 1, 2, 3] => P,
    ));
    out
}

/// Canonical code of a graph on at most four vertices: the lexicographically
/// smallest adjacency bit string (loops included) over all relabellings.
pub fn canonical_code(g: &Graph) -> (usize, u32) {
    let n = g.n();
    assert!(n <= 4, "canonical code is for tiny graphs");
    let mut best = u32::MAX;
    let mut perm: Vec<usize> = (0..n).collect();
    permute(&mut perm, 0, &mut |p| {
        let mut code = 0u32;
        for a in 0..n {
            for b in a..n {
                code <<= 1;
                if g.has_edge(p[a], p[b]) {
                    code |= 1;
                }
            }
        }
        best = best.min(code);
    });
    (n, best)
}

fn permute(perm: &mut Vec<usize>, k: usize, visit: &mut dyn FnMut(&[usize])) {
    if k == perm.len() {
        visit(perm);
        return;
    }
    for x in k..perm.len() {
        perm.swap(k, x);
        permute(perm, k + 1, visit);
        perm.swap(k, x);
    }
}

/// Every labelled graph on `n` vertices, loops included.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a..n).map(move |b| (a, b))).collect();
    (0u32..1 << pairs.len()).map(move |mask| {
        let mut g = Graph::new(n);
        for (k, &(a, b)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                g.add_edge(a, b);
            }
        }
        g
    })
}

/// Verdict for any graph on at most four vertices, from the two hard
/// three-vertex graphs, the tree rule, and the figure table.
pub struct SmallOracle {
    hard_small: Vec<(usize, u32)>,
    figures: Vec<((usize, u32), Verdict)>,
}

impl Default for SmallOracle {
    fn default() -> Self {
        Self::new()
    }
}

impl SmallOracle {
    pub fn new() -> Self {
        let k3 = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let p3 = Graph::with_loops(3, &[(0, 1), (1, 2)], &[0, 2]).unwrap();
        SmallOracle {
            hard_small: vec![canonical_code(&k3), canonical_code(&p3)],
            figures: figure_cases().iter().map(|c| (canonical_code(&c.graph()), c.expected)).collect(),
        }
    }

    /// `None` means the graph fell outside every case the oracle knows,
    /// which would mean the figure table is incomplete.
    pub fn verdict(&self, h: &Graph) -> Option<Verdict> {
        let comps = components(h);
        if comps.len() > 1 || h.n() <= 3 {
            let hard = comps.iter().any(|c| {
                let sub = h.induced_subgraph(c);
                self.hard_small.contains(&canonical_code(&sub)) || (sub.n() <= 4 && self.tree_hard(&sub))
            });
            return Some(if hard { NPC } else { P });
        }
        if is_tree(h) {
            return Some(if self.tree_hard(h) { NPC } else { P });
        }
        let code = canonical_code(h);
        self.figures.iter().find(|(c, _)| *c == code).map(|&(_, v)| v)
    }

    fn tree_hard(&self, t: &Graph) -> bool {
        is_tree(t) && !reflexive_part_connected(t)
    }
}

fn components(h: &Graph) -> Vec<Vec<usize>> {
    let n = h.n();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut comp = vec![s];
        seen[s] = true;
        let mut k = 0;
        while k < comp.len() {
            let u = comp[k];
            k += 1;
            for v in 0..n {
                if v != u && !seen[v] && h.has_edge(u, v) {
                    seen[v] = true;
                    comp.push(v);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

fn is_tree(h: &Graph) -> bool {
    let n = h.n();
    let proper = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).filter(|&(a, b)| h.has_edge(a, b)).count();
    n > 0 && components(h).len() == 1 && proper + 1 == n
}

fn reflexive_part_connected(h: &Graph) -> bool {
    let refl: Vec<usize> = (0..h.n()).filter(|&v| h.has_edge(v, v)).collect();
    refl.len() <= 1 || components(&h.induced_subgraph(&refl)).len() == 1
}
