//! Complexity classifier for surjective `H`-colouring.
//!
//! Targets on at most four vertices get an exact verdict. Larger targets
//! get NP-completeness from component rules, polynomial time only for
//! loop-connected trees, and `Unknown` otherwise.

use std::fmt;

use crate::gadgets::analyze_target;
use crate::graph::{are_isomorphic, named, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    PolynomialTime,
    NPComplete,
    Unknown,
}

impl Verdict {
    pub fn short(self) -> &'static str {
        match self {
            Verdict::PolynomialTime => "P",
            Verdict::NPComplete => "NPC",
            Verdict::Unknown => "UNKNOWN",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    IrreflexiveNonBipartite,
    TreeNotLoopConnected,
    TwoReflexive,
    LiftedTwoReflexive,
    ReflexiveFourCycle,
    IrreflexiveDiamond,
    PawStar,
    /// A non-loop-connected component on at most four vertices not caught
    /// by a more specific rule.
    SmallNotLoopConnected,
    LoopConnectedTree,
    /// At most four vertices and no hardness rule applies.
    SmallCompactionPolynomial,
    NoRule,
}

impl Rule {
    pub fn id(self) -> &'static str {
        match self {
            Rule::IrreflexiveNonBipartite => "irreflexive-non-bipartite",
            Rule::TreeNotLoopConnected => "tree-not-loop-connected",
            Rule::TwoReflexive => "two-reflexive",
            Rule::LiftedTwoReflexive => "lifted-two-reflexive",
            Rule::ReflexiveFourCycle => "reflexive-c4",
            Rule::IrreflexiveDiamond => "irreflexive-diamond",
            Rule::PawStar => "paw-star",
            Rule::SmallNotLoopConnected => "small-not-loop-connected",
            Rule::LoopConnectedTree => "loop-connected-tree",
            Rule::SmallCompactionPolynomial => "small-compaction-p",
            Rule::NoRule => "no-rule",
        }
    }

    pub fn citation(self) -> &'static str {
        match self {
            Rule::IrreflexiveNonBipartite => {
                "NP-complete for every irreflexive non-bipartite target, by reduction from H-colouring (Hell-Nesetril dichotomy)"
            }
            Rule::TreeNotLoopConnected => {
                "trees: polynomial when loop-connected, NP-complete otherwise (known classification of surjective tree colouring)"
            }
            Rule::TwoReflexive => {
                "NP-complete for every connected target with exactly two reflexive vertices that are non-adjacent (reduction from factor cut with roots)"
            }
            Rule::LiftedTwoReflexive => {
                "NP-complete for connected two-reflexive targets with reflexive true twins added to either reflexive vertex"
            }
            Rule::ReflexiveFourCycle => "NP-complete for the reflexive 4-cycle (known result)",
            Rule::IrreflexiveDiamond => {
                "NP-complete for the irreflexive diamond, which is non-bipartite"
            }
            Rule::PawStar => {
                "NP-complete for the paw with a loop on its pendant vertex; the compaction reduction from C3-retraction only uses vertex surjectivity"
            }
            Rule::SmallNotLoopConnected => "NP-complete: a component on at most four vertices is not loop-connected",
            Rule::LoopConnectedTree => "polynomial for loop-connected trees (known classification of surjective tree colouring)",
            Rule::SmallCompactionPolynomial => {
                "polynomial: compaction to this target is polynomial on at most four vertices, and polynomial compaction implies polynomial surjective colouring; compaction and retraction are polynomially equivalent here"
            }
            Rule::NoRule => "no implemented rule decides this target",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub rule: Rule,
    /// Set when the rule fired on one component of a disconnected target;
    /// hardness then transfers to the whole target.
    pub component: Option<Vec<usize>>,
}

impl Certificate {
    pub fn citation(&self) -> String {
        match &self.component {
            None => self.rule.citation().to_string(),
            Some(c) => {
                let ids: Vec<String> = c.iter().map(|v| (v + 1).to_string()).collect();
                format!(
                    "{}; applied to component {{{}}}, and hardness of one component carries over to the whole target",
                    self.rule.citation(),
                    ids.join(",")
                )
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentVerdict {
    pub vertices: Vec<usize>,
    pub verdict: Verdict,
    pub rule: Rule,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub verdict: Verdict,
    pub certificate: Certificate,
    pub components: Vec<ComponentVerdict>,
}

impl Classification {
    /// `VERDICT <v> RULE <id>` followed by the citation line.
    pub fn to_text(&self) -> String {
        format!(
            "VERDICT {} RULE {}\n{}\n",
            self.verdict.short(),
            self.certificate.rule.id(),
            self.certificate.citation()
        )
    }
}

/// A lifted two-reflexive target recovered from its twin structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftedTarget {
    pub base: Graph,
    /// Twins added to the class holding the smallest reflexive id.
    pub i: usize,
    pub j: usize,
    /// Ids of the kept vertices in `h`, ascending; base vertex `k` is `kept[k]`.
    pub kept: Vec<usize>,
}

/// Recognises `h` as a connected two-reflexive graph with reflexive true
/// twins added to its reflexive vertices.
pub fn recognize_lifted_target(h: &Graph) -> Option<LiftedTarget> {
    if h.n() == 0 || !h.is_connected() {
        return None;
    }
    let classes = h.true_twin_classes(&h.reflexive_vertices());
    if classes.len() != 2 {
        return None;
    }
    if classes[0].iter().any(|&a| classes[1].iter().any(|&b| h.has_edge(a, b))) {
        return None;
    }
    let dropped: Vec<usize> = classes.iter().flat_map(|c| c[1..].iter().copied()).collect();
    let kept: Vec<usize> = (0..h.n()).filter(|v| !dropped.contains(v)).collect();
    let base = h.induced_subgraph(&kept);
    analyze_target(&base).ok()?;
    Some(LiftedTarget { base, i: classes[0].len() - 1, j: classes[1].len() - 1, kept })
}

pub fn classify(h: &Graph) -> Classification {
    let comps = h.connected_components();
    let small = h.n() <= 4;
    let components: Vec<ComponentVerdict> = comps
        .iter()
        .map(|c| {
            let sub = h.induced_subgraph(c);
            let (verdict, rule) = classify_component(&sub);
            ComponentVerdict { vertices: c.clone(), verdict, rule }
        })
        .collect();
    let split = comps.len() > 1;

    if let Some(hard) = components.iter().find(|c| c.verdict == Verdict::NPComplete) {
        return Classification {
            verdict: Verdict::NPComplete,
            certificate: Certificate { rule: hard.rule, component: split.then(|| hard.vertices.clone()) },
            components,
        };
    }
    if small {
        return Classification {
            verdict: Verdict::PolynomialTime,
            certificate: Certificate { rule: Rule::SmallCompactionPolynomial, component: None },
            components,
        };
    }
    if !split && components.first().is_some_and(|c| c.rule == Rule::LoopConnectedTree) {
        return Classification {
            verdict: Verdict::PolynomialTime,
            certificate: Certificate { rule: Rule::LoopConnectedTree, component: None },
            components,
        };
    }
    Classification {
        verdict: Verdict::Unknown,
        certificate: Certificate { rule: Rule::NoRule, component: None },
        components,
    }
}

fn matches_special(h: &Graph, rule: Rule) -> bool {
    if h.n() != 4 {
        return false;
    }
    let reference = match rule {
        Rule::ReflexiveFourCycle => named::c4_star(),
        Rule::IrreflexiveDiamond => named::diamond(),
        Rule::PawStar => named::paw_star(),
        _ => return false,
    };
    are_isomorphic(h, &reference).unwrap_or(false)
}

/// Verdict for one connected component. Components on at most four
/// vertices get the exact small-target table.
fn classify_component(c: &Graph) -> (Verdict, Rule) {
    if c.n() == 4 {
        for special in [Rule::ReflexiveFourCycle, Rule::IrreflexiveDiamond, Rule::PawStar] {
            if matches_special(c, special) {
                return (Verdict::NPComplete, special);
            }
        }
    }
    let loop_connected = c.is_loop_connected();
    if c.is_tree() {
        return if loop_connected {
            (Verdict::PolynomialTime, Rule::LoopConnectedTree)
        } else {
            (Verdict::NPComplete, Rule::TreeNotLoopConnected)
        };
    }
    if c.is_irreflexive() && !c.is_bipartite() {
        return (Verdict::NPComplete, Rule::IrreflexiveNonBipartite);
    }
    if analyze_target(c).is_ok() {
        return (Verdict::NPComplete, Rule::TwoReflexive);
    }
    if recognize_lifted_target(c).is_some() {
        return (Verdict::NPComplete, Rule::LiftedTwoReflexive);
    }
    if c.n() <= 4 {
        if !loop_connected {
            return (Verdict::NPComplete, Rule::SmallNotLoopConnected);
        }
        return (Verdict::PolynomialTime, Rule::SmallCompactionPolynomial);
    }
    (Verdict::Unknown, Rule::NoRule)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gadgets::lift_target;
    use named::*;

    fn verdict(h: &Graph) -> Verdict {
        classify(h).verdict
    }

    #[test]
    fn named_examples() {
        assert_eq!(verdict(&c4_star()), Verdict::NPComplete);
        assert_eq!(classify(&c4_star()).certificate.rule, Rule::ReflexiveFourCycle);
        assert_eq!(verdict(&with_loops_at(&cycle(4), &[0])), Verdict::PolynomialTime);
        assert_eq!(verdict(&with_loops_at(&cycle(4), &[0, 2])), Verdict::NPComplete);
        assert_eq!(classify(&with_loops_at(&cycle(4), &[0, 2])).certificate.rule, Rule::TwoReflexive);
        assert_eq!(verdict(&complete(4)), Verdict::NPComplete);
        assert_eq!(verdict(&diamond()), Verdict::NPComplete);
        assert_eq!(verdict(&paw_star()), Verdict::NPComplete);
        assert_eq!(classify(&paw_star()).certificate.rule, Rule::PawStar);
        assert_eq!(verdict(&with_loops_at(&path(3), &[0, 2])), Verdict::NPComplete);
        assert_eq!(verdict(&reflexive(&path(1))), Verdict::PolynomialTime);
        assert_eq!(verdict(&reflexive(&path(5))), Verdict::PolynomialTime);
        assert_eq!(classify(&reflexive(&path(5))).certificate.rule, Rule::LoopConnectedTree);
        let c5 = classify(&reflexive(&cycle(5)));
        assert_eq!(c5.verdict, Verdict::Unknown);
        assert_eq!(c5.certificate.rule, Rule::NoRule);
    }

    #[test]
    fn text_output() {
        let text = classify(&complete(3)).to_text();
        assert!(text.starts_with("VERDICT NPC RULE irreflexive-non-bipartite\n"));
        let text = classify(&path(2)).to_text();
        assert!(text.starts_with("VERDICT P RULE "));
    }

    #[test]
    fn disconnected_targets() {
        // K3 plus an isolated reflexive vertex
        let h = Graph::with_loops(4, &[(0, 1), (1, 2), (0, 2)], &[3]).unwrap();
        let c = classify(&h);
        assert_eq!(c.verdict, Verdict::NPComplete);
        assert_eq!(c.certificate.component, Some(vec![0, 1, 2]));
        assert!(c.certificate.citation().contains("component {1,2,3}"));
        assert_eq!(c.components.len(), 2);

        let h = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(verdict(&h), Verdict::PolynomialTime);

        // two loop-connected trees on more than four vertices
        let h = Graph::from_edges(6, &[(0, 1), (1, 2), (3, 4), (4, 5)]).unwrap();
        assert_eq!(verdict(&h), Verdict::Unknown);
        // reflexive 4-cycle as a component of a larger target
        let mut edges = vec![(0, 1), (1, 2), (2, 3), (3, 0)];
        edges.push((4, 5));
        let h = Graph::with_loops(6, &edges, &[0, 1, 2, 3]).unwrap();
        let c = classify(&h);
        assert_eq!(c.verdict, Verdict::NPComplete);
        assert_eq!(c.certificate.rule, Rule::ReflexiveFourCycle);
    }

    #[test]
    fn larger_hardness_rules() {
        let tree = with_loops_at(&path(6), &[0, 5]);
        assert_eq!(classify(&tree).certificate.rule, Rule::TreeNotLoopConnected);
        assert_eq!(classify(&complete(5)).certificate.rule, Rule::IrreflexiveNonBipartite);
        let two = with_loops_at(&cycle(6), &[0, 3]);
        assert_eq!(classify(&two).certificate.rule, Rule::TwoReflexive);
        let ta = analyze_target(&two).unwrap();
        let lifted = lift_target(&ta, 2, 1);
        assert_eq!(classify(&lifted).certificate.rule, Rule::LiftedTwoReflexive);
        // even irreflexive cycles are bipartite and outside every rule
        assert_eq!(verdict(&cycle(6)), Verdict::Unknown);
    }

    #[test]
    fn lifted_recognition() {
        let h = with_loops_at(&path(3), &[0, 2]);
        let ta = analyze_target(&h).unwrap();
        let lifted = lift_target(&ta, 1, 0);
        let rec = recognize_lifted_target(&lifted).unwrap();
        assert_eq!((rec.i, rec.j), (1, 0));
        assert_eq!(rec.base, h);
        assert!(recognize_lifted_target(&c4_star()).is_none());
        let rec = recognize_lifted_target(&h).unwrap();
        assert_eq!((rec.base.clone(), rec.i, rec.j), (h, 0, 0));
        // adjacent reflexive classes are not a lift
        assert!(recognize_lifted_target(&reflexive(&path(2))).is_none());
    }

    #[test]
    fn lifted_recognition_inverts_lifts() {
        let bases = [
            with_loops_at(&cycle(4), &[0, 2]),
            with_loops_at(&path(4), &[0, 3]),
            with_loops_at(&diamond(), &[1, 2]),
        ];
        for base in bases {
            let ta = analyze_target(&base).unwrap();
            for (i, j) in [(0, 0), (1, 0), (0, 2), (2, 3)] {
                let rec = recognize_lifted_target(&lift_target(&ta, i, j)).unwrap();
                assert_eq!((rec.i, rec.j), (i, j));
                assert!(are_isomorphic(&rec.base, &base).unwrap());
            }
        }
    }
}
