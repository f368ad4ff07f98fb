use itertools::Itertools;
use pqcolor::graph::{enumerate_labeled, Family, Graph, VertexSet};
use pqcolor::properties::{
    check, clique_bound, co_clique_bound, contains_induced, parse_spec, PropertySpec,
};

fn spec(text: &str) -> PropertySpec {
    parse_spec(text).unwrap()
}

const BUILT_INS: [&str; 7] = [
    "edgeless",
    "complete",
    "cluster",
    "complete_multipartite",
    "bipartite",
    "co_bipartite",
    "complete_bipartite",
];

fn all_specs() -> Vec<PropertySpec> {
    BUILT_INS
        .iter()
        .copied()
        .chain([
            "free(K3,P3)",
            "free(2K2,C4,C5)",
            "free(P4)",
            "free(2K2,P4)",
            "co(free(K3,P3))",
            "co(bipartite)",
            "co(cluster)",
            "edgeless∘complete",
        ])
        .map(spec)
        .collect()
}

/// Independent matcher: every vertex subset of the right size, every
/// bijection onto the pattern, on materialized induced subgraphs.
fn contains_induced_brute(g: &Graph, h: &Graph) -> bool {
    let k = h.order();
    (0..g.order()).combinations(k).any(|subset| {
        let sub = g
            .induced(&VertexSet::from_indices(g.order(), subset).unwrap())
            .unwrap();
        (0..k).permutations(k).any(|perm| {
            (0..k).all(|i| (i + 1..k).all(|j| sub.has_edge(perm[i], perm[j]) == h.has_edge(i, j)))
        })
    })
}

#[test]
fn matcher_agrees_with_brute_force() {
    let patterns: Vec<Graph> = ["K3", "Kbar3", "P3", "P4", "C4", "2K2"]
        .iter()
        .map(|a| {
            let PropertySpec::FreeOf(list) = spec(&format!("free({a})")) else {
                unreachable!()
            };
            list[0].clone()
        })
        .collect();
    for p in 0..=5 {
        for g in enumerate_labeled(p).unwrap() {
            for h in &patterns {
                assert_eq!(
                    contains_induced(&g, h),
                    contains_induced_brute(&g, h),
                    "{g:?} {h:?}"
                );
            }
        }
    }
}

#[test]
fn every_class_is_hereditary() {
    let specs = all_specs();
    for p in 0..=6 {
        for g in enumerate_labeled(p).unwrap() {
            for s in &specs {
                if !check(s, &g).unwrap() {
                    continue;
                }
                for mask in 0..1u64 << p {
                    let sub = g.induced(&VertexSet::from_mask(p, mask)).unwrap();
                    assert!(
                        check(s, &sub).unwrap(),
                        "{s} not hereditary on {g:?} mask {mask:b}"
                    );
                }
            }
        }
    }
}

#[test]
fn complement_duality() {
    let specs = all_specs();
    for p in 0..=6 {
        for g in enumerate_labeled(p).unwrap() {
            let co = g.complement();
            for s in &specs {
                let dual = PropertySpec::complement_of(s.clone());
                assert_eq!(
                    check(&dual, &g).unwrap(),
                    check(s, &co).unwrap(),
                    "{s} on {g:?}"
                );
            }
        }
    }
}

#[test]
fn built_ins_agree_with_forbidden_subgraph_engine() {
    let pairs = [
        ("cluster", "free(P3)"),
        (
            "complete_multipartite",
            &format!(
                "free(g6:{})",
                pqcolor::graph::format::to_graph6(
                    &Family::Path(3).generate().unwrap().complement()
                )
            ),
        ),
        ("edgeless", "free(K2)"),
        ("complete", "free(Kbar2)"),
        ("co_bipartite", "co(bipartite)"),
        ("edgeless∘complete", "free(2K2,C4,C5)"),
    ];
    for p in 0..=6 {
        for g in enumerate_labeled(p).unwrap() {
            for (a, b) in &pairs {
                assert_eq!(
                    check(&spec(a), &g).unwrap(),
                    check(&spec(b), &g).unwrap(),
                    "{a} vs {b} on {g:?}"
                );
            }
        }
    }
}

#[test]
fn bipartite_is_odd_cycle_free_on_small_graphs() {
    let odd = spec("free(C3,C5,C7)");
    for p in 0..=7 {
        for g in enumerate_labeled(p)
            .unwrap()
            .step_by(if p == 7 { 13 } else { 1 })
        {
            assert_eq!(
                check(&PropertySpec::Bipartite, &g).unwrap(),
                check(&odd, &g).unwrap()
            );
        }
    }
}

#[test]
fn complete_bipartite_matches_its_definition() {
    // a bipartition (X, Y), either side possibly empty, with both sides
    // independent and every X-Y pair adjacent
    for p in 0..=6 {
        for g in enumerate_labeled(p).unwrap() {
            let by_definition = (0..1u64 << p).any(|mask| {
                let x = VertexSet::from_mask(p, mask);
                let y = x.complement();
                let independent =
                    |s: &VertexSet| s.iter().all(|u| s.iter().all(|v| !g.has_edge(u, v)));
                independent(&x)
                    && independent(&y)
                    && x.iter().all(|u| y.iter().all(|v| g.has_edge(u, v)))
            });
            assert_eq!(
                check(&PropertySpec::CompleteBipartite, &g).unwrap(),
                by_definition,
                "{g:?}"
            );
        }
    }
}

#[test]
fn clique_bound_duality_for_built_ins() {
    for name in BUILT_INS {
        let s = spec(name);
        assert_eq!(
            clique_bound(&s),
            co_clique_bound(&PropertySpec::complement_of(s.clone())),
            "{name}"
        );
    }
}

#[test]
fn canonical_names_parse_back() {
    for s in all_specs() {
        assert_eq!(spec(&s.to_string()), s);
    }
}
