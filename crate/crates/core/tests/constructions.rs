mod common;

use std::collections::BTreeSet;

use bicay_core::aut::{automorphism_group, bipartition_kernel, is_normal_in};
use bicay_core::cartesian::{is_prime, relatively_prime};
use bicay_core::constructions::*;
use bicay_core::graph::{cayley_graph, right_regular_group};
use bicay_core::group::are_isomorphic;
use bicay_core::group::catalog::{catalog_small_groups, class_e_members, lookup};
use bicay_core::{Graph, GroupTable};

#[test]
fn half_cube_subgroup_is_kernel_meet_translations() {
    for n in 1..=5 {
        let q = hypercube(n).unwrap();
        let kernel = bipartition_kernel(&q.graph).unwrap();
        let translations: BTreeSet<Vec<usize>> = q
            .translations
            .elements(1 << n)
            .unwrap()
            .into_iter()
            .filter(|p| kernel.contains(p))
            .map(|p| p.images().to_vec())
            .collect();
        let even: BTreeSet<Vec<usize>> = q
            .even
            .elements(1 << n)
            .unwrap()
            .into_iter()
            .map(|p| p.images().to_vec())
            .collect();
        assert_eq!(translations, even, "n = {n}");
    }
}

#[test]
fn moebius_kantor_permutations_verbatim() {
    let mk = moebius_kantor();
    let expected = [
        (ALPHA, &mk.alpha, [4, 4, 4, 4].as_slice()),
        (BETA, &mk.beta, [3, 3, 3, 3].as_slice()),
        (GAMMA, &mk.gamma, [2; 8].as_slice()),
        (DELTA, &mk.delta, [2; 8].as_slice()),
    ];
    for (text, p, lengths) in expected {
        assert_eq!(&parse_gp_cycles(text).unwrap(), p);
        let mut got: Vec<usize> = p.cycles().iter().map(Vec::len).collect();
        got.sort_unstable();
        assert_eq!(got, lengths, "{text}");
    }
    let (q8_table, _) = GroupTable::from_generators(mk.q8.generators(), 8).unwrap();
    assert!(are_isomorphic(&q8_table, &lookup("Q8").unwrap().table).is_some());
    assert!(is_prime(&mk.graph).unwrap());
}

#[test]
fn classification_matches_grr_existence() {
    let budget = SearchBudget::default();
    for e in catalog_small_groups(16)
        .into_iter()
        .filter(|e| e.order() >= 3)
    {
        let has_grr = grr_search(&e.table, budget).unwrap().found().is_some();
        let tagged = classify_group(&e.table) == GroupClass::HasGrr;
        assert_eq!(has_grr, tagged, "{}", e.name);
    }
}

#[test]
fn class_e_cayley_graphs() {
    for e in class_e_members() {
        let c = class_e_connection_set(&e.name).unwrap();
        let g = cayley_graph(&c.entry.table, &c.connection_set).unwrap();
        if c.item == 8 {
            // the set generates only the cyclic factor: |Q8| copies of C_n
            assert_eq!(g.components().len(), 8, "{}", e.name);
            continue;
        }
        assert!(g.is_connected(), "{}", e.name);
        let aut = automorphism_group(&g).unwrap();
        let normal = is_normal_in(&aut, &g, &right_regular_group(&c.entry.table)).unwrap();
        assert_eq!(normal, e.name != "E6", "{}", e.name);
    }
}

#[test]
fn measured_valencies() {
    let valency = |name: &str| {
        let c = class_e_connection_set(name).unwrap();
        cayley_graph(&c.entry.table, &c.connection_set)
            .unwrap()
            .regular_degree()
    };
    assert_eq!(valency("E4"), Some(3));
    assert_eq!(valency("E6"), Some(3));
    assert_eq!(valency("E7"), Some(4));
    let d8 = class_e_connection_set("D8").unwrap();
    let cycle = cayley_graph(&d8.entry.table, &d8.connection_set).unwrap();
    assert!(are_isomorphic_graphs(&cycle, &Graph::cycle(8)));
    assert!(relatively_prime(&cycle, &Graph::complete(2)).unwrap());
}

fn are_isomorphic_graphs(a: &Graph, b: &Graph) -> bool {
    bicay_core::aut::are_graphs_isomorphic(a, b)
        .unwrap()
        .is_some()
}

/// The Pappus graph from the exceptional group of order 18: the engine's
/// non-normality verdict agrees with explicit enumeration of all automorphisms.
#[test]
fn e6_prescribed_graph_is_not_normal() {
    let c = class_e_connection_set("E6").unwrap();
    let g = cayley_graph(&c.entry.table, &c.connection_set).unwrap();
    let all = common::enumerate_automorphisms(&g);
    assert_eq!(all.len(), 216);
    let rg = right_regular_group(&c.entry.table);
    let regular: BTreeSet<Vec<usize>> = (0..18)
        .map(|x| c.entry.table.right_regular(x).images().to_vec())
        .collect();
    let normal_by_oracle = all.iter().all(|a| {
        let a = bicay_core::Permutation::from_images(a.clone()).unwrap();
        rg.generators()
            .iter()
            .all(|x| regular.contains(x.conjugate_by(&a).images()))
    });
    assert!(!normal_by_oracle);
    let aut = automorphism_group(&g).unwrap();
    assert!(!is_normal_in(&aut, &g, &rg).unwrap());
}

#[test]
fn bicayley_search_over_q8() {
    let q8 = lookup("Q8").unwrap().table;
    let t = normal_bicayley_search(&q8, SearchBudget::default(), false)
        .unwrap()
        .found()
        .cloned()
        .expect("a witness exists");
    let graph = t.graph();
    assert!(graph.is_connected());
    assert!(is_normal_in(
        &automorphism_group(&graph).unwrap(),
        &graph,
        &t.br_generators()
    )
    .unwrap());
    assert!(t.s().contains(&0));
}

#[test]
fn bicayley_search_over_c2() {
    let c2 = GroupTable::cyclic(2);
    let t = normal_bicayley_search(&c2, SearchBudget::default(), true).unwrap();
    let t = t.found().unwrap();
    assert_eq!(t.graph().order(), 4);
    assert_eq!(t.br_generators().order_u64(), Some(2));
}

#[test]
fn searches_reject_large_groups() {
    let big = GroupTable::cyclic(MAX_SEARCH_ORDER + 1);
    assert!(grr_search(&big, SearchBudget::default()).is_err());
    assert!(normal_cayley_search(&big, SearchBudget::default()).is_err());
}
