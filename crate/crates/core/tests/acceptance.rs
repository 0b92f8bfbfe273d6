//! End-to-end acceptance run: one PASS/FAIL line per criterion.

mod common;

use std::collections::BTreeMap;
use std::time::Instant;

use bicay_core::aut::{action_report, automorphism_group, is_normal_in};
use bicay_core::cartesian::{cartesian_product, prime_factorization, relatively_prime};
use bicay_core::constructions::{
    class_e_connection_set, classify_group, grr_search, hypercube, moebius_kantor,
    normal_cayley_search, GroupClass, SearchBudget, SearchOutcome,
};
use bicay_core::graph::{cayley_graph, graph6_decode, right_regular_group};
use bicay_core::group::are_isomorphic;
use bicay_core::group::catalog::{catalog_small_groups, lookup, COMPLETE_UP_TO, GROUP_COUNTS};
use bicay_core::pipeline::{
    construct_normal_bicayley, theorem_sweep, verify_certificate_text, PipelineOptions,
};
use bicay_core::{Graph, PermGroup};
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn big(n: u64) -> BigUint {
    BigUint::from(n)
}

fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

fn theorem_sweep_16() -> Outcome {
    let catalog = catalog_small_groups(16);
    let mut by_order: BTreeMap<usize, Vec<&str>> = BTreeMap::new();
    for e in &catalog {
        by_order.entry(e.order()).or_default().push(&e.name);
    }
    for n in 1..=COMPLETE_UP_TO {
        let have = by_order.get(&n).map_or(0, Vec::len);
        ensure(have == GROUP_COUNTS[n - 1], || {
            format!("order {n}: {have} groups, expected {}", GROUP_COUNTS[n - 1])
        })?;
    }
    for (i, a) in catalog.iter().enumerate() {
        for b in &catalog[i + 1..] {
            ensure(
                a.order() != b.order() || are_isomorphic(&a.table, &b.table).is_none(),
                || format!("{} and {} are isomorphic", a.name, b.name),
            )?;
        }
    }
    let report = theorem_sweep(16, &PipelineOptions::default()).map_err(|e| e.to_string())?;
    ensure(report.rows.len() == 42, || {
        format!("{} rows", report.rows.len())
    })?;
    for row in &report.rows {
        ensure(row.valid, || format!("{} invalid", row.group))?;
        let c = &row.certificate;
        ensure(
            c.br_semiregular
                && c.br_orbits == 2
                && c.br_normal
                && c.connected
                && c.vertex_transitive,
            || format!("{}: flags {c:?}", row.group),
        )?;
        let check = verify_certificate_text(&c.to_text()).map_err(|e| e.to_string())?;
        ensure(check.passed(), || {
            format!("{}: re-verification failed", row.group)
        })?;
    }
    Ok(format!("{} groups certified", report.rows.len()))
}

fn gp83_suite() -> Outcome {
    let mk = moebius_kantor();
    let g = &mk.graph;
    ensure(g.order() == 16, || "order".into())?;
    ensure(g.girth() == Some(6), || format!("girth {:?}", g.girth()))?;
    let (b1, b2) = g.bipartition().ok_or("not bipartite")?;
    ensure(b1.len() == 8 && b2.len() == 8, || "part sizes".into())?;
    let ab = PermGroup::new(16, vec![mk.alpha.clone(), mk.beta.clone()]).unwrap();
    ensure(ab.order() == big(24), || {
        format!("<alpha, beta> order {}", ab.order())
    })?;
    let aut = automorphism_group(g).map_err(|e| e.to_string())?;
    ensure(mk.q8.order() == big(8), || "Q8 order".into())?;
    ensure(is_normal_in(&aut, g, &mk.q8).unwrap(), || {
        "Q8 not normal".into()
    })?;
    let oracle = common::enumerate_automorphisms(g).len() as u64;
    ensure(oracle == 96 && aut.order() == big(oracle), || {
        format!("engine {} vs brute force {oracle}", aut.order())
    })?;
    Ok("girth 6, parts 8+8, |<a,b>| = 24, Q8 normal, |Aut| = 96 (brute force agrees)".into())
}

fn hypercube_suite() -> Outcome {
    for n in 1..=5u32 {
        let q = hypercube(n as usize).map_err(|e| e.to_string())?;
        let aut = automorphism_group(&q.graph).map_err(|e| e.to_string())?;
        let expected = big((1u64 << n) * factorial(u64::from(n)));
        ensure(aut.order() == expected, || {
            format!("Q{n}: |Aut| = {}", aut.order())
        })?;
        ensure(q.even.order() == big(1 << (n - 1)), || {
            format!("Q{n}: |E| = {}", q.even.order())
        })?;
        let report = action_report(&q.even);
        ensure(report.semiregular && report.orbit_count() == 2, || {
            format!("Q{n}: E orbits")
        })?;
        ensure(is_normal_in(&aut, &q.graph, &q.even).unwrap(), || {
            format!("Q{n}: E not normal")
        })?;
    }
    Ok("n = 1..5: |Aut| = 2^n n!, |E| = 2^(n-1), E normal with 2 orbits".into())
}

fn grr_cross_check() -> Outcome {
    let budget = SearchBudget::default();
    let none = [
        "C3", "C4", "C2^2", "C2^3", "C2^4", "D6", "D8", "D10", "Alt4", "Q8", "C4xC2",
    ];
    for name in none {
        let g = lookup(name).unwrap().table;
        ensure(classify_group(&g) != GroupClass::HasGrr, || {
            format!("{name} classified HasGrr")
        })?;
        let out = grr_search(&g, budget).map_err(|e| e.to_string())?;
        ensure(out.is_exhausted(), || format!("{name}: {out:?}"))?;
    }
    let mut found = Vec::new();
    for e in catalog_small_groups(16) {
        if e.order() < 3 || classify_group(&e.table) != GroupClass::HasGrr {
            continue;
        }
        if let SearchOutcome::Found(s) = grr_search(&e.table, budget).map_err(|e| e.to_string())? {
            let cay = cayley_graph(&e.table, &s).unwrap();
            let aut = automorphism_group(&cay).unwrap();
            ensure(
                cay.is_connected() && aut.order() == big(e.order() as u64),
                || format!("{}: bad GRR", e.name),
            )?;
            found.push(e.name);
        }
    }
    ensure(found.len() >= 3, || format!("only {found:?}"))?;
    Ok(format!(
        "no GRR for {} groups; GRR found for {}",
        none.len(),
        found.join(", ")
    ))
}

fn normal_cayley_exceptions() -> Outcome {
    let budget = SearchBudget::default();
    let exceptions = ["C4xC2", "Q8", "Q8xC2"];
    for name in exceptions {
        let g = lookup(name).unwrap().table;
        let out = normal_cayley_search(&g, budget).map_err(|e| e.to_string())?;
        ensure(out.is_exhausted(), || format!("{name}: {out:?}"))?;
    }
    let mut count = 0;
    for e in catalog_small_groups(8) {
        if exceptions.contains(&e.name.as_str()) {
            continue;
        }
        let out = normal_cayley_search(&e.table, budget).map_err(|e| e.to_string())?;
        let s = out.found().ok_or_else(|| format!("{}: {out:?}", e.name))?;
        let cay = cayley_graph(&e.table, s).unwrap();
        let aut = automorphism_group(&cay).unwrap();
        ensure(
            cay.is_connected() && is_normal_in(&aut, &cay, &right_regular_group(&e.table)).unwrap(),
            || format!("{}: witness fails", e.name),
        )?;
        count += 1;
    }
    Ok(format!(
        "none for C4xC2, Q8, Q8xC2; witnesses for the other {count} groups of order <= 8"
    ))
}

fn class_e_replications() -> Outcome {
    let k2 = Graph::complete(2);
    let e5 = class_e_connection_set("E5").map_err(|e| e.to_string())?;
    let gamma = cayley_graph(&e5.entry.table, &e5.connection_set).unwrap();
    let product = cartesian_product(&gamma, &k2).unwrap();
    let aut_gamma = automorphism_group(&gamma).unwrap();
    let aut_product = automorphism_group(&product).unwrap();
    ensure(aut_product.order() == big(2) * aut_gamma.order(), || {
        format!(
            "|Aut(G□K2)| = {}, |Aut(G)| = {}",
            aut_product.order(),
            aut_gamma.order()
        )
    })?;
    ensure(relatively_prime(&gamma, &k2).unwrap(), || {
        "E5 graph has a K2 factor".into()
    })?;
    // Aut(Γ) × Z2 acting coordinatewise is all of Aut(Γ□K2)
    let decomposition = prime_factorization(&product).unwrap();
    let split = bicay_core::cartesian::aut_of_product(&decomposition).unwrap();
    ensure(
        split.order() == aut_product.order() && split.is_subgroup_of(&aut_product),
        || "coordinatewise split differs".into(),
    )?;

    let alt4 = construct_normal_bicayley("Alt4", &lookup("Alt4").unwrap().table)
        .map_err(|e| e.to_string())?;
    ensure(
        alt4.certificate.construction == "class-e3-cayley-times-k2" && alt4.certificate.is_valid(),
        || format!("Alt4: {}", alt4.certificate.construction),
    )?;

    for name in ["E4", "E6"] {
        let c = class_e_connection_set(name).unwrap();
        let g = cayley_graph(&c.entry.table, &c.connection_set).unwrap();
        ensure(g.girth() == Some(6), || {
            format!("{name}: girth {:?}", g.girth())
        })?;
    }
    Ok(format!(
        "|Aut(Cay(E5,S)□K2)| = {} = 2·{}, Alt4 certificate valid, E4/E6 girth 6",
        aut_product.order(),
        aut_gamma.order()
    ))
}

fn factorization_oracle() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut graphs = Vec::new();
    while graphs.len() < 150 {
        let n = rng.gen_range(1..=12);
        let p = rng.gen_range(0.05..0.5);
        graphs.push(common::random_connected_graph(&mut rng, n, p));
    }
    while graphs.len() < 200 {
        let a = rng.gen_range(2..=4);
        let b = rng.gen_range(2..=12 / a);
        let x = common::random_connected_graph(&mut rng, a, 0.4);
        let y = common::random_connected_graph(&mut rng, b, 0.4);
        let xy = cartesian_product(&x, &y).unwrap();
        let xyz = if a * b <= 6 && rng.gen_bool(0.5) {
            cartesian_product(&xy, &Graph::complete(2)).unwrap()
        } else {
            xy
        };
        graphs.push(common::shuffled(&mut rng, &xyz));
    }
    let mut composite = 0;
    for (i, g) in graphs.iter().enumerate() {
        let d = prime_factorization(g).map_err(|e| format!("graph {i}: {e}"))?;
        ensure(d.reassemble().unwrap() == *g, || {
            format!("graph {i}: reassembly")
        })?;
        let oracle = common::brute_force_factors(g);
        ensure(common::same_graph_multiset(&d.factors, &oracle), || {
            format!("graph {i}: {} factors vs oracle {}", d.len(), oracle.len())
        })?;
        if d.len() > 1 {
            composite += 1;
        }
    }
    Ok(format!("200 graphs agree ({composite} composite)"))
}

fn aut_oracle() -> Outcome {
    let corpus = include_str!("data/aut_corpus.g6");
    let mut count = 0;
    for line in corpus.lines().filter(|l| !l.trim().is_empty()) {
        let g = graph6_decode(line).map_err(|e| e.to_string())?;
        ensure(g.order() <= 8, || format!("{line}: too large"))?;
        let engine = automorphism_group(&g).map_err(|e| e.to_string())?.order();
        let oracle = common::count_automorphisms_by_permutations(&g);
        ensure(engine == big(oracle), || {
            format!("{line}: engine {engine}, n! filter {oracle}")
        })?;
        count += 1;
    }
    ensure(count == 100, || format!("corpus has {count} graphs"))?;
    Ok("100 corpus graphs agree with the n! filter".into())
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("theorem sweep, order <= 16", theorem_sweep_16),
        ("GP(8,3) suite", gp83_suite),
        ("hypercube suite", hypercube_suite),
        ("GRR classification cross-check", grr_cross_check),
        ("normal Cayley exceptions", normal_cayley_exceptions),
        ("exceptional-group replications", class_e_replications),
        ("factorization oracle equivalence", factorization_oracle),
        ("automorphism oracle equivalence", aut_oracle),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS {name} ({detail}) [{secs:.1}s]", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL {name}: {why} [{secs:.1}s]", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
