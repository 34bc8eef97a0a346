use rand::seq::SliceRandom;
use rand::Rng;

use super::fixtures::{all_graphs, figure_cases, SmallOracle};
use super::{Outcome, Suite, Trial};
use crate::cut::{enumerate_factor_cuts_bounded, FactorCut};
use crate::dichotomy::{classify, Verdict};
use crate::gadgets::{
    analyze_target, build_factorcut_case1, build_factorcut_case2, build_surjective_instance, lift_target,
    GadgetInstance, TargetAnalysis,
};
use crate::generate::{random_connected_graph_with, random_graph};
use crate::graph::{named, serialize_graph, Graph};
use crate::hom::{check_witness, enumerate_all, solve, solve_with, HomVariant, SolveOptions};

/// Built factor-cut instances reach about 31 vertices at `n = 7`.
const GADGET_CUT_BOUND: usize = 64;
const HOM_ENUMERATION_LIMIT: usize = 20_000;
const THM1_SETTINGS: [(usize, usize); 4] = [(1, 2), (1, 3), (2, 2), (2, 3)];
const LIFTS: [(usize, usize); 3] = [(1, 0), (0, 1), (1, 1)];

const FIGURE_CASES: usize = 32;
/// Labelled graphs on one to three vertices: 2 + 8 + 64.
const UP_TO_THREE: usize = 74;
const FOUR_VERTEX: usize = 1024;

pub(super) fn trial_count(suite: Suite, trials: usize) -> usize {
    match suite {
        Suite::Classifier => FIGURE_CASES + UP_TO_THREE + FOUR_VERTEX + trials,
        _ => trials,
    }
}

pub(super) fn run(suite: Suite, t: &mut Trial) -> Outcome {
    match suite {
        Suite::Lemma1 => lemma1(t),
        Suite::Lemma2 => lemma2(t),
        Suite::Implications => implications(t),
        Suite::Thm1 => thm1(t),
        Suite::Thm2 => thm2(t),
        Suite::Lemma4 => lemma4(t),
        Suite::Lift => lift(t),
        Suite::Classifier => classifier(t),
    }
}

fn fail(message: impl Into<String>, instance: String) -> Outcome {
    Outcome::Fail { message: message.into(), instance }
}

/// Targets of the gadget suites.
pub fn two_reflexive_c4() -> Graph {
    named::with_loops_at(&named::cycle(4), &[0, 2])
}

pub fn reflexive_end_p3() -> Graph {
    named::with_loops_at(&named::path(3), &[0, 2])
}

/// Diamond with loops on its two non-adjacent vertices.
pub fn two_reflexive_diamond() -> Graph {
    named::with_loops_at(&named::diamond(), &[1, 2])
}

/// Every bipartition with `side[v] = true` for the part bounded by `i`.
fn brute_cuts(g: &Graph, i: usize, j: usize) -> Vec<Vec<bool>> {
    let n = g.n();
    assert!(n < 20, "bipartition oracle is exponential");
    let mut out = Vec::new();
    for mask in 1u32..(1u32 << n) - 1 {
        let side: Vec<bool> = (0..n).map(|v| mask >> v & 1 == 1).collect();
        let ok = (0..n).all(|v| {
            let cross = g.neighbors(v).filter(|&w| side[w] != side[v]).count();
            cross <= if side[v] { i } else { j }
        });
        if ok {
            out.push(side);
        }
    }
    out
}

fn separates(side: &[bool], s: usize, t: usize, oriented: bool) -> bool {
    side[s] != side[t] && (!oriented || side[s])
}

fn connected_source(t: &mut Trial, lo: usize, hi: usize, max_edges: usize) -> Graph {
    loop {
        let n = t.rng.gen_range(lo..=hi.max(lo));
        let p = t.rng.gen_range(0.2..0.8);
        let g = random_connected_graph_with(n, p, &mut t.rng).expect("n >= 2");
        if g.edge_count() <= max_edges {
            return g;
        }
    }
}

fn distinct_pair(t: &mut Trial, n: usize) -> (usize, usize) {
    let s = t.rng.gen_range(0..n);
    let mut u = t.rng.gen_range(0..n - 1);
    if u >= s {
        u += 1;
    }
    (s, u)
}

fn describe(parts: &[(&str, &Graph)], extra: &str) -> String {
    let mut out = String::new();
    for (name, g) in parts {
        out.push_str(&format!("c {name}\n{}", serialize_graph(g)));
        let loops = g.reflexive_vertices();
        if !loops.is_empty() {
            let ids: Vec<String> = loops.iter().map(|v| (v + 1).to_string()).collect();
            out.push_str(&format!("c loops at {}\n", ids.join(" ")));
        }
    }
    if !extra.is_empty() {
        out.push_str(extra);
        out.push('\n');
    }
    out
}

fn lemma1(t: &mut Trial) -> Outcome {
    let i = t.rng.gen_range(1..=2);
    let j = t.rng.gen_range(i..=3);
    let k = i + j + 1;
    let lo = k.max(4).min(t.max_n);
    if t.max_n < k {
        return Outcome::Skip(format!("max_n below clique size {k}"));
    }
    let n = t.rng.gen_range(lo..=t.max_n);
    let p = t.rng.gen_range(0.1..0.45);
    let mut g = random_connected_graph_with(n, p, &mut t.rng).expect("n >= 2");
    let mut vertices: Vec<usize> = (0..n).collect();
    vertices.shuffle(&mut t.rng);
    let clique = &vertices[..k];
    for (a, &x) in clique.iter().enumerate() {
        for &y in &clique[a + 1..] {
            g.add_edge(x, y);
        }
    }
    let cuts = match enumerate_factor_cuts_bounded(&g, i, j, n.max(16)) {
        Ok(c) => c,
        Err(e) => return fail(format!("enumeration failed: {e}"), describe(&[("graph", &g)], "")),
    };
    // cross-check the enumeration size against every bipartition
    let brute = brute_cuts(&g, i, j).into_iter().filter(|s| i < j || s[0]).count();
    if brute != cuts.len() {
        return fail(
            format!("enumerated {} cuts, bipartition oracle finds {brute}", cuts.len()),
            describe(&[("graph", &g)], &format!("c i={i} j={j}")),
        );
    }
    t.bump("cuts_checked", cuts.len() as u64);
    if !cuts.is_empty() {
        t.bump("trials_with_cuts", 1);
    }
    for cut in &cuts {
        let first = cut.part1.contains(clique[0]);
        if clique.iter().any(|&v| cut.part1.contains(v) != first) {
            return fail(
                format!("a ({i},{j})-factor cut splits the planted clique of size {k}"),
                describe(&[("graph", &g)], &format!("c clique {:?}\n{}", clique, cut.to_text())),
            );
        }
    }
    Outcome::Pass
}

/// Vertices of `set` reachable from `from` inside `set`, with distances.
fn bfs_within(h: &Graph, set: &[usize], from: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; h.n()];
    dist[from] = Some(0);
    let mut queue = std::collections::VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        for &v in set {
            if dist[v].is_none() && v != u && h.has_edge(u, v) {
                dist[v] = Some(dist[u].unwrap() + 1);
                queue.push_back(v);
            }
        }
    }
    dist
}

fn lemma2(t: &mut Trial) -> Outcome {
    let max_n = t.max_n.max(3);
    let (h, a, b) = loop {
        let g = connected_source(t, 3, max_n, usize::MAX);
        let pairs: Vec<(usize, usize)> =
            (0..g.n()).flat_map(|a| (a + 1..g.n()).map(move |b| (a, b))).filter(|&(a, b)| !g.has_edge(a, b)).collect();
        if let Some(&(a, b)) = pairs.choose(&mut t.rng) {
            break (named::with_loops_at(&g, &[a, b]), a, b);
        }
    };
    let inst = describe(&[("target", &h)], "");
    let ta = match analyze_target(&h) {
        Ok(ta) => ta,
        Err(e) => return fail(format!("analysis rejected a valid target: {e}"), inst),
    };
    let all: Vec<usize> = (0..h.n()).collect();
    let da = bfs_within(&h, &all, a);
    let db = bfs_within(&h, &all, b);
    let side_a: Vec<usize> = all.iter().copied().filter(|&v| da[v] < db[v]).collect();
    let side_b: Vec<usize> = all.iter().copied().filter(|&v| da[v] >= db[v]).collect();
    if ta.h1.to_vec() != side_a || ta.h2.to_vec() != side_b {
        return fail("split differs from the distance definition", inst);
    }
    for (side, root, full) in [(&side_a, a, &da), (&side_b, b, &db)] {
        let inside = bfs_within(&h, side, root);
        for &v in side.iter() {
            if inside[v].is_none() {
                return fail(format!("side of {} is disconnected", root + 1), inst);
            }
            if inside[v] != full[v] {
                return fail(format!("distance from {} to {} not preserved", root + 1, v + 1), inst);
            }
        }
    }
    t.bump("targets_checked", 1);
    t.bump("vertices_checked", h.n() as u64);
    Outcome::Pass
}

fn implications(t: &mut Trial) -> Outcome {
    let max_h = 4.min(t.max_n);
    if max_h < 2 {
        return Outcome::Skip("max_n below 2".into());
    }
    // target without vertices lacking a non-loop edge
    let h = loop {
        let nh = t.rng.gen_range(2..=max_h);
        let mut h = random_graph(nh, 0.5, &mut t.rng);
        for v in 0..nh {
            if t.rng.gen_bool(0.4) {
                h.add_edge(v, v);
            }
        }
        if (0..nh).all(|v| h.degree(v) > 0) {
            break h;
        }
    };
    let nh = h.n();
    let ng = t.rng.gen_range(nh..=t.max_n.max(nh));
    let p = t.rng.gen_range(0.2..0.8);
    let mut planted = Graph::new(ng);
    for (u, v) in h.edges() {
        planted.add_edge(u, v);
    }
    for u in 0..ng {
        for v in (u + 1).max(nh)..ng {
            if t.rng.gen_bool(p) {
                planted.add_edge(u, v);
            }
        }
    }
    let plain_n = t.rng.gen_range(1..=t.max_n.max(1));
    let plain_g = random_graph(plain_n, p, &mut t.rng);

    let anchors: Vec<(usize, usize)> = (0..nh).map(|k| (k, k)).collect();
    let loops_ok = SolveOptions { allow_reflexive_input: true };
    let inst = describe(&[("input", &planted), ("target", &h), ("second input", &plain_g)], "");
    let chain: Vec<(&Graph, Vec<HomVariant>)> = vec![
        (
            &planted,
            vec![
                HomVariant::Retraction { anchors },
                HomVariant::Compaction,
                HomVariant::Surjective,
                HomVariant::Plain,
            ],
        ),
        (&plain_g, vec![HomVariant::Compaction, HomVariant::Surjective, HomVariant::Plain]),
    ];
    for (g, variants) in chain {
        let mut previous: Option<&str> = None;
        for variant in &variants {
            let outcome = match solve_with(g, &h, variant, &loops_ok) {
                Ok(o) => o,
                Err(e) => return fail(format!("{} solver error: {e}", variant.name()), inst),
            };
            if let Some(w) = outcome.witness() {
                if !check_witness(g, &h, w, variant) {
                    return fail(format!("{} witness rejected by the checker", variant.name()), inst);
                }
                t.bump(&format!("{}_found", variant.name()), 1);
            }
            if let Some(stronger) = previous {
                if !outcome.is_found() {
                    return fail(format!("{stronger} exists but {} does not", variant.name()), inst);
                }
            }
            previous = outcome.is_found().then(|| variant.name());
        }
        t.bump("pairs", 1);
    }
    Outcome::Pass
}

/// Pairs `s < t` that every matching cut separates.
fn matching_cut_roots(cuts: &[Vec<bool>], n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|s| (s + 1..n).map(move |t| (s, t)))
        .filter(|&(s, t)| cuts.iter().all(|c| separates(c, s, t, false)))
        .collect()
}

fn thm1(t: &mut Trial) -> Outcome {
    let g = connected_source(t, 2, t.max_n.max(2), usize::MAX);
    let matching = brute_cuts(&g, 1, 1);
    let roots = matching_cut_roots(&matching, g.n());
    if roots.is_empty() {
        return Outcome::Skip("no root pair satisfies the promise".into());
    }
    t.bump("graphs", 1);
    if !matching.is_empty() {
        t.bump("graphs_with_matching_cut", 1);
    }
    for &(s, r) in &roots {
        for (i, j) in THM1_SETTINGS {
            let built = if i == 1 { build_factorcut_case1(&g, s, r, j) } else { build_factorcut_case2(&g, s, r, i, j) };
            let inst = match built {
                Ok(x) => x,
                Err(e) => return fail(format!("build failed: {e}"), describe(&[("graph", &g)], "")),
            };
            let ctx = || describe(&[("graph", &g)], &format!("c roots {} {} i={i} j={j}", s + 1, r + 1));
            let cuts: Vec<FactorCut> = match enumerate_factor_cuts_bounded(&inst.graph, i, j, GADGET_CUT_BOUND) {
                Ok(c) => c,
                Err(e) => return fail(format!("enumeration failed: {e}"), ctx()),
            };
            if cuts.is_empty() != matching.is_empty() {
                return fail(
                    format!(
                        "matching cut {} but built instance has {} ({i},{j})-factor cuts",
                        if matching.is_empty() { "absent" } else { "present" },
                        cuts.len()
                    ),
                    ctx(),
                );
            }
            if let Some(bad) = cuts.iter().find(|c| !c.separates(s, r, i < j)) {
                return fail(format!("factor cut does not separate the roots as required\n{}", bad.to_text()), ctx());
            }
            t.bump("instances", 1);
            t.bump("gadget_cuts_checked", cuts.len() as u64);
        }
    }
    Outcome::Pass
}

fn size_check(t: &mut Trial, inst: &GadgetInstance, ta: &TargetAnalysis, g: &Graph, size: usize) -> Result<(), String> {
    let expected = size * g.n() + 2 * (ta.ell - 1) * g.edge_count() + ta.target.n() - 2;
    t.bump("size_formula_checked", 1);
    if inst.graph.n() != expected {
        t.bump("size_formula_mismatch", 1);
        return Err(format!("built instance has {} vertices, formula gives {expected}", inst.graph.n()));
    }
    Ok(())
}

fn thm2(t: &mut Trial) -> Outcome {
    let (label, h) = match t.index % 3 {
        0 => ("c4", two_reflexive_c4()),
        1 => ("p3", reflexive_end_p3()),
        _ => ("diamond", two_reflexive_diamond()),
    };
    let ta = analyze_target(&h).expect("fixed two-reflexive target");
    let g = connected_source(t, 2, t.max_n.max(2), 5);
    let (i, j) = (ta.r_p, ta.r_q);
    let cuts = brute_cuts(&g, i, j);
    // first ordered root pair, in a random order, that every cut separates
    let mut pairs: Vec<(usize, usize)> =
        (0..g.n()).flat_map(|a| (0..g.n()).map(move |b| (a, b))).filter(|&(a, b)| a != b).collect();
    pairs.shuffle(&mut t.rng);
    let Some(&(s, r)) = pairs.iter().find(|&&(a, b)| cuts.iter().all(|c| separates(c, a, b, i < j))) else {
        return Outcome::Skip("no root pair satisfies the factor-cut promise".into());
    };
    let ctx = || describe(&[("graph", &g), ("target", &h)], &format!("c roots {} {}", s + 1, r + 1));
    let inst = match build_surjective_instance(&ta, &g, s, r, None) {
        Ok(x) => x,
        Err(e) => return fail(format!("build failed: {e}"), ctx()),
    };
    if let Err(m) = size_check(t, &inst, &ta, &g, ta.omega) {
        return fail(m, ctx());
    }
    let found = match solve(&inst.graph, &h, &HomVariant::Surjective) {
        Ok(o) => o.is_found(),
        Err(e) => return fail(format!("solver error: {e}"), ctx()),
    };
    if found != !cuts.is_empty() {
        return fail(
            format!("({i},{j})-factor cut exists: {}, surjective colouring exists: {found}", !cuts.is_empty()),
            ctx(),
        );
    }
    t.bump(&format!("instances_{label}"), 1);
    if found {
        t.bump(&format!("yes_instances_{label}"), 1);
    }
    Outcome::Pass
}

fn small_target(t: &Trial) -> Graph {
    if t.index % 2 == 0 {
        two_reflexive_c4()
    } else {
        reflexive_end_p3()
    }
}

fn lemma4(t: &mut Trial) -> Outcome {
    let h = small_target(t);
    let ta = analyze_target(&h).expect("fixed two-reflexive target");
    let g = connected_source(t, 2, t.max_n.max(2), usize::MAX);
    let (s, r) = distinct_pair(t, g.n());
    let ctx = || describe(&[("graph", &g), ("target", &h)], &format!("c roots {} {}", s + 1, r + 1));
    let inst = match build_surjective_instance(&ta, &g, s, r, None) {
        Ok(x) => x,
        Err(e) => return fail(format!("build failed: {e}"), ctx()),
    };
    if let Err(m) = size_check(t, &inst, &ta, &g, ta.omega) {
        return fail(m, ctx());
    }
    let dg = inst.graph.distance_matrix();
    let dh = h.distance_matrix();
    let cliques: Vec<Vec<usize>> = (0..g.n()).map(|u| inst.clique_of(u)).collect();

    let all = match enumerate_all(&inst.graph, &h, &HomVariant::Plain, HOM_ENUMERATION_LIMIT) {
        Ok(e) => e,
        Err(e) => return fail(format!("enumeration error: {e}"), ctx()),
    };
    if all.truncated {
        t.bump("enumerations_truncated", 1);
    }
    let n = inst.graph.n();
    for f in &all.mappings {
        for x in 0..n {
            for y in 0..n {
                let (Some(a), Some(b)) = (dg[x][y], dh[f.get(x)][f.get(y)]) else {
                    return fail("distance undefined on a connected pair", ctx());
                };
                if b > a {
                    return fail(format!("homomorphism stretches distance between {} and {}", x + 1, y + 1), ctx());
                }
            }
        }
        if !clique_hits(&cliques, f.image(), ta.p) || !clique_hits(&cliques, f.image(), ta.q) {
            t.bump("non_surjective_missing_clique_image", 1);
        }
    }
    t.bump("homomorphisms_checked", all.mappings.len() as u64);

    let surj = match enumerate_all(&inst.graph, &h, &HomVariant::Surjective, HOM_ENUMERATION_LIMIT) {
        Ok(e) => e,
        Err(e) => return fail(format!("enumeration error: {e}"), ctx()),
    };
    for f in &surj.mappings {
        for (x, name) in [(ta.p, "p"), (ta.q, "q")] {
            if !clique_hits(&cliques, f.image(), x) {
                return fail(format!("surjective homomorphism puts {name} on no clique"), ctx());
            }
        }
    }
    t.bump("surjective_checked", surj.mappings.len() as u64);
    if !surj.mappings.is_empty() {
        t.bump("instances_with_surjective", 1);
    }
    Outcome::Pass
}

fn clique_hits(cliques: &[Vec<usize>], image: &[usize], x: usize) -> bool {
    cliques.iter().any(|c| c.iter().any(|&v| image[v] == x))
}

fn lift(t: &mut Trial) -> Outcome {
    let h = small_target(t);
    let ta = analyze_target(&h).expect("fixed two-reflexive target");
    let g = connected_source(t, 2, t.max_n.max(2), usize::MAX);
    let (s, r) = distinct_pair(t, g.n());
    let ctx = |extra: String| describe(&[("graph", &g), ("target", &h)], &format!("c roots {} {}{extra}", s + 1, r + 1));
    let base = match build_surjective_instance(&ta, &g, s, r, None) {
        Ok(x) => x,
        Err(e) => return fail(format!("build failed: {e}"), ctx(String::new())),
    };
    if let Err(m) = size_check(t, &base, &ta, &g, ta.omega) {
        return fail(m, ctx(String::new()));
    }
    let base_found = match solve(&base.graph, &h, &HomVariant::Surjective) {
        Ok(o) => o.is_found(),
        Err(e) => return fail(format!("solver error: {e}"), ctx(String::new())),
    };
    for (i, j) in LIFTS {
        let lifted = lift_target(&ta, i, j);
        let size = ta.omega + i.max(j);
        let extra = format!(" lift {i} {j}");
        let inst = match build_surjective_instance(&ta, &g, s, r, Some(size)) {
            Ok(x) => x,
            Err(e) => return fail(format!("build failed: {e}"), ctx(extra)),
        };
        if let Err(m) = size_check(t, &inst, &ta, &g, size) {
            return fail(m, ctx(extra));
        }
        let found = match solve(&inst.graph, &lifted, &HomVariant::Surjective) {
            Ok(o) => o.is_found(),
            Err(e) => return fail(format!("solver error: {e}"), ctx(extra)),
        };
        if found != base_found {
            return fail(format!("base answer {base_found}, lifted ({i},{j}) answer {found}"), ctx(extra));
        }
        t.bump("lifted_instances", 1);
    }
    if base_found {
        t.bump("yes_instances", 1);
    }
    Outcome::Pass
}

fn classifier(t: &mut Trial) -> Outcome {
    let k = t.index;
    if k < FIGURE_CASES {
        let case = &figure_cases()[k];
        let got = classify(&case.graph()).verdict;
        t.bump("figure_cases", 1);
        if got != case.expected {
            return fail(format!("{}: expected {}, got {got}", case.label(), case.expected), describe(&[("target", &case.graph())], ""));
        }
        return Outcome::Pass;
    }
    let oracle = SmallOracle::new();
    if k < FIGURE_CASES + UP_TO_THREE + FOUR_VERTEX {
        let mut m = k - FIGURE_CASES;
        let mut n = 1;
        while m >= 1 << (n * (n + 1) / 2) {
            m -= 1 << (n * (n + 1) / 2);
            n += 1;
        }
        let h = all_graphs(n).nth(m).expect("index within range");
        let got = classify(&h).verdict;
        t.bump(if n <= 3 { "up_to_three_vertex_graphs" } else { "four_vertex_graphs" }, 1);
        if got == Verdict::Unknown {
            return fail("classifier is not total on four vertices", describe(&[("target", &h)], ""));
        }
        let expected = oracle.verdict(&h).expect("oracle covers every graph on at most four vertices");
        if got != expected {
            return fail(format!("expected {expected}, got {got}"), describe(&[("target", &h)], ""));
        }
        return Outcome::Pass;
    }
    // relabelling invariance on random targets up to seven vertices
    let n = t.rng.gen_range(1..=t.max_n.max(7));
    let mut h = random_graph(n, t.rng.gen_range(0.2..0.8), &mut t.rng);
    for v in 0..n {
        if t.rng.gen_bool(0.3) {
            h.add_edge(v, v);
        }
    }
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut t.rng);
    let mut relabelled = Graph::new(n);
    for (u, v) in h.edges() {
        relabelled.add_edge(perm[u], perm[v]);
    }
    let (a, b) = (classify(&h), classify(&relabelled));
    t.bump("relabelings", 1);
    if a.verdict != b.verdict {
        return fail(
            format!("relabelling changed the verdict: {} vs {}", a.verdict, b.verdict),
            describe(&[("target", &h), ("relabelled", &relabelled)], ""),
        );
    }
    Outcome::Pass
}
