use std::collections::BTreeSet;

use super::*;
use crate::graph::named;
use crate::hom::{solve, HomVariant};

fn two_reflexive_c4() -> Graph {
    named::with_loops_at(&named::cycle(4), &[0, 2])
}

fn reflexive_end_p3() -> Graph {
    named::with_loops_at(&named::path(3), &[0, 2])
}

// a b c f h s t u v w x y, loops on a and h.
fn two_sided_example() -> Graph {
    let edges = [
        (0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (3, 4), (0, 5), (0, 6),
        (5, 7), (6, 8), (4, 9), (4, 10), (9, 10), (11, 9), (11, 10),
    ];
    Graph::with_loops(12, &edges, &[0, 4]).unwrap()
}

/// Every bipartition checked directly.
fn brute_factor_cuts(g: &Graph, i: usize, j: usize) -> Vec<Vec<bool>> {
    let n = g.n();
    let mut out = Vec::new();
    for mask in 1u64..(1u64 << n) - 1 {
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

#[test]
fn analysis_of_c4() {
    let ta = analyze_target(&two_reflexive_c4()).unwrap();
    assert_eq!((ta.p, ta.q, ta.ell, ta.omega), (0, 2, 2, 2));
    assert_eq!((ta.r_p, ta.r_q), (1, 1));
    assert_eq!(ta.n_p.to_vec(), vec![1, 3]);
    assert_eq!(ta.h1.to_vec(), vec![0]);
    assert_eq!(ta.h2.to_vec(), vec![1, 2, 3]);
    assert_eq!(ta.f1.graph.n(), 2);
    assert_eq!(ta.f2.graph.n(), 4);
    assert!(ta.f1.graph.is_irreflexive() && ta.f2.graph.is_irreflexive());
}

#[test]
fn analysis_of_two_sided_example() {
    let ta = analyze_target(&two_sided_example()).unwrap();
    assert_eq!((ta.ell, ta.omega), (3, 3));
    assert_eq!(ta.h1.to_vec(), vec![0, 1, 2, 5, 6, 7, 8]);
    assert!(ta.h2.contains(3));
    assert_eq!((ta.r_p, ta.r_q), (2, 1));
    // roots of f1 form a triangle joined to b and c
    let f1 = &ta.f1;
    for &r in &f1.roots {
        for &r2 in &f1.roots {
            assert_eq!(f1.graph.has_edge(r, r2), r != r2);
        }
    }
}

#[test]
fn analysis_rejections() {
    let k2 = named::reflexive(&named::path(2));
    assert_eq!(analyze_target(&k2).unwrap_err(), TargetError::ReflexiveAdjacent(0, 1));
    assert_eq!(
        analyze_target(&named::with_loops_at(&named::path(3), &[0])).unwrap_err(),
        TargetError::ReflexiveCount(1)
    );
    let split = Graph::with_loops(4, &[(0, 1), (2, 3)], &[0, 2]).unwrap();
    assert_eq!(analyze_target(&split).unwrap_err(), TargetError::NotConnected);
}

#[test]
fn case1_on_triangle() {
    let inst = build_factorcut_case1(&named::complete(3), 0, 1, 2).unwrap();
    assert_eq!(inst.graph.n(), 6);
    assert_eq!(inst.kind, GadgetKind::FactorCutCase1 { s: 0, t: 1, j: 2, k: 3 });
    assert!(brute_factor_cuts(&named::complete(3), 1, 1).is_empty());
    assert!(brute_factor_cuts(&inst.graph, 1, 2).is_empty());
}

#[test]
fn case1_on_path_has_cut() {
    let inst = build_factorcut_case1(&named::path(4), 0, 3, 2).unwrap();
    assert!(!brute_factor_cuts(&inst.graph, 1, 2).is_empty());
}

#[test]
fn case1_orients_cuts_when_roots_are_valid() {
    // every matching cut of P3 separates its ends
    let inst = build_factorcut_case1(&named::path(3), 0, 2, 3).unwrap();
    let cuts = brute_factor_cuts(&inst.graph, 1, 3);
    assert!(!cuts.is_empty());
    for side in cuts {
        assert!(side[0] && !side[2], "{side:?}");
    }
}

#[test]
fn case1_pass_through() {
    let g = named::cycle(4);
    let inst = build_factorcut_case1(&g, 0, 2, 1).unwrap();
    assert_eq!(inst.graph, g);
    assert_eq!(inst.kind, GadgetKind::FactorCutPassThrough { s: 0, t: 2 });
    assert_eq!(inst.sidecar_json()["params"]["pass_through"], true);
}

#[test]
fn case2_on_triangle_and_path() {
    let inst = build_factorcut_case2(&named::complete(3), 0, 1, 2, 2).unwrap();
    assert_eq!(inst.graph.n(), 11);
    assert!(brute_factor_cuts(&inst.graph, 2, 2).is_empty());

    let inst = build_factorcut_case2(&named::path(3), 0, 2, 2, 2).unwrap();
    let ks = inst.vertices_where(|r| matches!(r, Role::KVertex { clique: KClique::AtS, .. }));
    // matching cut {0} | {1, 2} lifted with the cliques on their roots' sides
    let mut part1 = vec![0];
    part1.extend(ks);
    let cut = crate::cut::FactorCut::from_part1(inst.graph.n(), &part1, 2, 2);
    assert!(crate::cut::check_factor_cut(&inst.graph, &cut).unwrap());
}

#[test]
fn k_vertices_have_one_outside_neighbour() {
    let g = named::cycle(5);
    for (i, j) in [(1, 3), (2, 3), (3, 3)] {
        let inst = if i == 1 {
            build_factorcut_case1(&g, 1, 3, j).unwrap()
        } else {
            build_factorcut_case2(&g, 1, 3, i, j).unwrap()
        };
        for v in inst.vertices_where(|r| matches!(r, Role::KVertex { .. })) {
            let root = match inst.provenance[v] {
                Role::KVertex { clique: KClique::AtT, .. } => 3,
                _ => 1,
            };
            let outside = inst.graph.neighbors(v).filter(|&w| w < 5 && w != root).count();
            assert!(outside <= 1);
            assert!(inst.graph.has_edge(v, root));
        }
        for v in 0..5 {
            let count = |which: KClique| {
                inst.graph
                    .neighbors(v)
                    .filter(|&w| matches!(inst.provenance[w], Role::KVertex { clique, .. } if clique == which))
                    .count()
            };
            if i == 1 {
                let k = inst.graph.n() - 5;
                assert_eq!(count(KClique::Single), if v == 1 { k } else { j - 1 });
            } else {
                let k = (inst.graph.n() - 5) / 2;
                assert_eq!(count(KClique::AtS), if v == 1 { k } else { j - 1 });
                assert_eq!(count(KClique::AtT), if v == 3 { k } else { i - 1 });
            }
        }
    }
}

#[test]
fn factor_builders_reject_bad_input() {
    let g = named::path(3);
    assert!(matches!(build_factorcut_case1(&g, 0, 0, 2), Err(GadgetError::BadRoots { .. })));
    assert!(matches!(build_factorcut_case1(&g, 0, 2, 0), Err(GadgetError::BadParameters(_))));
    assert!(matches!(build_factorcut_case2(&g, 0, 2, 1, 2), Err(GadgetError::BadParameters(_))));
    assert!(matches!(
        build_factorcut_case1(&named::with_loops_at(&g, &[1]), 0, 2, 2),
        Err(GadgetError::InputReflexive(1))
    ));
    let split = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
    assert_eq!(build_factorcut_case1(&split, 0, 2, 2).unwrap_err(), GadgetError::InputDisconnected);
    assert_eq!(build_factorcut_case1(&Graph::new(1), 0, 0, 2).unwrap_err(), GadgetError::InputTooSmall);
}

#[test]
fn surjective_instance_size_and_roles() {
    let ta = analyze_target(&two_reflexive_c4()).unwrap();
    let g = named::path(3);
    let inst = build_surjective_instance(&ta, &g, 0, 2, None).unwrap();
    assert_eq!(inst.graph.n(), 12);
    assert_eq!(expected_surjective_size(&ta, 3, 2, 2), 12);
    assert!(inst.graph.is_irreflexive());

    let c0 = inst.clique_of(0);
    let red0 = inst.vertices_where(|r| matches!(r, Role::RedBlue { red_owner: 0, .. }));
    let blue0 = inst.vertices_where(|r| matches!(r, Role::RedBlue { blue_owner: 0, .. }));
    for &c in &c0 {
        for &x in red0.iter().chain(&blue0) {
            assert!(inst.graph.has_edge(c, x));
        }
    }
    let blue1 = inst.vertices_where(|r| matches!(r, Role::RedBlue { blue_owner: 1, .. }));
    assert_eq!(blue1.len(), 2);
    assert!(!inst.graph.has_edge(blue1[0], blue1[1]));
    let red1 = inst.vertices_where(|r| matches!(r, Role::RedBlue { red_owner: 1, .. }));
    assert!(inst.graph.has_edge(red1[0], red1[1]));
}

#[test]
fn surjective_instance_with_long_paths() {
    let h = two_sided_example();
    let ta = analyze_target(&h).unwrap();
    let g = named::cycle(4);
    for size in [3, 5] {
        let inst = build_surjective_instance(&ta, &g, 0, 2, Some(size)).unwrap();
        assert_eq!(inst.graph.n(), expected_surjective_size(&ta, 4, 4, size));
        assert_eq!(inst.graph.n(), size * 4 + 2 * 2 * 4 + 12 - 2);
        // ell = 3: each red endpoint is joined straight to the opposite blue one
        let inner = inst.vertices_where(|r| matches!(r, Role::PathInner { .. }));
        assert!(inner.is_empty());
        for v in inst.vertices_where(|r| matches!(r, Role::Red { .. })) {
            let opposite = inst
                .graph
                .neighbors(v)
                .filter(|&w| matches!(inst.provenance[w], Role::Blue { .. }))
                .count();
            assert_eq!(opposite, 1);
        }
    }
}

#[test]
fn path_inner_vertices_for_distance_four() {
    let h = named::with_loops_at(&named::path(5), &[0, 4]);
    let ta = analyze_target(&h).unwrap();
    assert_eq!(ta.ell, 4);
    let inst = build_surjective_instance(&ta, &named::path(2), 0, 1, None).unwrap();
    assert_eq!(inst.graph.n(), expected_surjective_size(&ta, 2, 1, 2));
    let inner = inst.vertices_where(|r| matches!(r, Role::PathInner { .. }));
    assert_eq!(inner.len(), 2);
    for &x in &inner {
        assert_eq!(inst.graph.degree(x), 2);
    }
}

#[test]
fn provenance_reconstructs_sources() {
    let h = two_sided_example();
    let ta = analyze_target(&h).unwrap();
    let inst = build_surjective_instance(&ta, &named::path(3), 0, 2, None).unwrap();
    assert_eq!(inst.provenance.len(), inst.graph.n());
    let f1: BTreeSet<usize> = inst
        .provenance
        .iter()
        .filter_map(|r| if let Role::F1Vertex { x } = r { Some(*x) } else { None })
        .collect();
    let f2: BTreeSet<usize> = inst
        .provenance
        .iter()
        .filter_map(|r| if let Role::F2Vertex { x } = r { Some(*x) } else { None })
        .collect();
    let mut h1 = ta.h1.to_vec();
    h1.retain(|&v| v != ta.p);
    let mut h2 = ta.h2.to_vec();
    h2.retain(|&v| v != ta.q);
    assert_eq!(f1.into_iter().collect::<Vec<_>>(), h1);
    assert_eq!(f2.into_iter().collect::<Vec<_>>(), h2);
    // F-vertices of one side carry the target's adjacency
    let tagged: Vec<(usize, usize, u8)> = inst
        .provenance
        .iter()
        .enumerate()
        .filter_map(|(v, r)| match r {
            Role::F1Vertex { x } => Some((v, *x, 1)),
            Role::F2Vertex { x } => Some((v, *x, 2)),
            _ => None,
        })
        .collect();
    for &(a, x, side_a) in &tagged {
        for &(b, y, side_b) in &tagged {
            if a != b && side_a == side_b {
                assert_eq!(inst.graph.has_edge(a, b), h.has_edge(x, y));
            }
        }
    }

    let g = named::cycle(5);
    let inst = build_factorcut_case2(&g, 0, 2, 2, 3).unwrap();
    let originals = inst.vertices_where(|r| matches!(r, Role::Original { .. }));
    assert_eq!(inst.graph.induced_subgraph(&originals), g);
}

#[test]
fn sidecar_ids_are_one_based() {
    let ta = analyze_target(&two_reflexive_c4()).unwrap();
    let inst = build_surjective_instance(&ta, &named::path(3), 0, 2, None).unwrap();
    let json = inst.sidecar_json();
    let roles = json["roles"].as_array().unwrap();
    assert_eq!(roles.len(), 12);
    assert_eq!(roles[0]["id"], 1);
    assert_eq!(roles[0]["role"], "clique");
    assert_eq!(roles[0]["owner"], 1);
    assert_eq!(json["params"]["ell"], 2);
    assert_eq!(json["kind"], "surjective_colouring");
}

#[test]
fn surjective_equivalence_examples() {
    let h = two_reflexive_c4();
    let ta = analyze_target(&h).unwrap();
    let inst = build_surjective_instance(&ta, &named::path(3), 0, 2, None).unwrap();
    assert!(solve(&inst.graph, &h, &HomVariant::Surjective).unwrap().is_found());

    let inst = build_surjective_instance(&ta, &named::complete(3), 0, 1, None).unwrap();
    assert!(!solve(&inst.graph, &h, &HomVariant::Surjective).unwrap().is_found());
}

#[test]
fn surjective_builder_rejections() {
    let ta = analyze_target(&two_reflexive_c4()).unwrap();
    assert_eq!(
        build_surjective_instance(&ta, &named::path(3), 0, 2, Some(1)).unwrap_err(),
        GadgetError::CliqueTooSmall { size: 1, omega: 2 }
    );
    assert!(matches!(
        build_surjective_instance(&ta, &named::path(3), 1, 1, None),
        Err(GadgetError::BadRoots { .. })
    ));
    assert_eq!(
        build_surjective_instance(&ta, &Graph::new(1), 0, 0, None).unwrap_err(),
        GadgetError::InputTooSmall
    );
}

#[test]
fn lift_adds_reflexive_twins() {
    let h = reflexive_end_p3();
    let ta = analyze_target(&h).unwrap();
    assert_eq!(lift_target(&ta, 0, 0), h);
    let lifted = lift_target(&ta, 1, 0);
    assert_eq!(lifted.n(), 4);
    assert!(lifted.is_reflexive(3) && lifted.are_true_twins(0, 3));
    assert_eq!(lifted.true_twin_classes(&[0, 1, 2, 3]).len(), 3);
    assert_eq!(lifted.edge_count(), h.edge_count() + 3);

    let both = lift_target(&ta, 1, 1);
    assert!(both.are_true_twins(2, 4));
    assert!(!both.are_true_twins(3, 4));
}

#[test]
fn lift_preserves_surjective_answer_on_small_case() {
    let h = reflexive_end_p3();
    let ta = analyze_target(&h).unwrap();
    let g = named::path(3);
    let base = build_surjective_instance(&ta, &g, 0, 2, None).unwrap();
    let base_found = solve(&base.graph, &h, &HomVariant::Surjective).unwrap().is_found();
    for (i, j) in [(1, 0), (0, 1), (1, 1)] {
        let lifted = lift_target(&ta, i, j);
        let inst = build_surjective_instance(&ta, &g, 0, 2, Some(ta.omega + i.max(j))).unwrap();
        let found = solve(&inst.graph, &lifted, &HomVariant::Surjective).unwrap().is_found();
        assert_eq!(found, base_found, "lift ({i}, {j})");
    }
}
