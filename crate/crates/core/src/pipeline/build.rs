use crate::aut::{automorphism_group, is_normal_in};
use crate::cartesian::{
    cartesian_power_product, cartesian_product, prime_factorization, product_permutation,
    relatively_prime,
};
use crate::constructions::{
    class_e_connection_set, classify_group, grr_search, hypercube, moebius_kantor,
    normal_bicayley_search, normal_cayley_search, ClassEPartner, GroupClass, SearchBudget,
};
use crate::error::{Error, Result};
use crate::graph::{cayley_graph, right_regular_group, BiCayleyTriple, Graph};
use crate::group::{are_isomorphic, GroupTable};
use crate::perm::Permutation;
use crate::permgroup::PermGroup;

use super::certificate::Certificate;

/// Default bound on the order of a group passed to the pipeline.
pub const DEFAULT_MAX_BUILD_ORDER: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PipelineOptions {
    pub max_order: usize,
    pub budget: SearchBudget,
}

impl Default for PipelineOptions {
    fn default() -> Self {
        PipelineOptions {
            max_order: DEFAULT_MAX_BUILD_ORDER,
            budget: SearchBudget::default(),
        }
    }
}

/// A verified vertex-transitive normal bi-Cayley graph over a group.
#[derive(Clone, Debug)]
pub struct Witness {
    pub class: GroupClass,
    pub graph: Graph,
    /// Semiregular with two orbits and isomorphic to the input group.
    pub br: PermGroup,
    pub certificate: Certificate,
}

pub fn construct_normal_bicayley(name: &str, g: &GroupTable) -> Result<Witness> {
    construct_with(name, g, &PipelineOptions::default())
}

pub fn construct_with(name: &str, g: &GroupTable, options: &PipelineOptions) -> Result<Witness> {
    if g.order() > options.max_order {
        return Err(Error::resource(
            format!("order of group {name}"),
            options.max_order,
        ));
    }
    let class = classify_group(g);
    let (graph, br, construction) = match g.order() {
        1 => {
            let k2 = BiCayleyTriple::new(g.clone(), &[], &[], &[0])?;
            (k2.graph(), PermGroup::trivial(2), "trivial-k2".to_string())
        }
        2 => {
            let c4 = BiCayleyTriple::new(g.clone(), &[], &[], &[0, 1])?;
            (c4.graph(), c4.br_generators(), "c2-four-cycle".to_string())
        }
        _ => match &class {
            GroupClass::HasGrr => {
                let s = grr_search(g, options.budget)?
                    .into_result("GRR search")?
                    .ok_or_else(|| {
                        Error::Verification(format!("{name} has no GRR in the scanned space"))
                    })?;
                grr_branch(g, &s)?
            }
            GroupClass::ClassC => class_c(g, options)?,
            GroupClass::ClassD => class_d(g, options)?,
            GroupClass::ClassE { member, .. } => class_e(member, options)?,
        },
    };
    finish(name, g, class, graph, br, &construction)
}

/// The witness built from a given GRR connection set of `g`.
pub fn from_grr(name: &str, g: &GroupTable, s: &[usize]) -> Result<Witness> {
    let (graph, br, construction) = grr_branch(g, s)?;
    finish(name, g, classify_group(g), graph, br, &construction)
}

fn finish(
    name: &str,
    g: &GroupTable,
    class: GroupClass,
    graph: Graph,
    br: PermGroup,
    construction: &str,
) -> Result<Witness> {
    check_isomorphic(&br, g)?;
    let certificate = Certificate::compute(name, &graph, &br, construction)?;
    if !certificate.is_valid() {
        let failed: Vec<&str> = [
            ("semiregular", certificate.br_semiregular),
            ("two orbits", certificate.br_orbits == 2),
            ("normal", certificate.br_normal),
            ("connected", certificate.connected),
            ("vertex-transitive", certificate.vertex_transitive),
        ]
        .iter()
        .filter(|(_, ok)| !ok)
        .map(|(what, _)| *what)
        .collect();
        return Err(Error::Verification(format!(
            "{name} via {construction}: not {}",
            failed.join(", ")
        )));
    }
    Ok(Witness {
        class,
        graph,
        br,
        certificate,
    })
}

fn check_isomorphic(br: &PermGroup, g: &GroupTable) -> Result<()> {
    let ok = if br.generators().is_empty() {
        g.order() == 1
    } else {
        match GroupTable::from_generators(br.generators(), g.order()) {
            Ok((table, _)) => are_isomorphic(&table, g).is_some(),
            Err(Error::Resource { .. }) => false,
            Err(e) => return Err(e),
        }
    };
    if ok {
        Ok(())
    } else {
        Err(Error::Verification(
            "the semiregular group is not isomorphic to the input group".into(),
        ))
    }
}

fn lift(group: &PermGroup, other_degree: usize, left: bool) -> Vec<Permutation> {
    let id = Permutation::identity(other_degree);
    group
        .generators()
        .iter()
        .map(|p| {
            if left {
                product_permutation(p, &id)
            } else {
                product_permutation(&id, p)
            }
        })
        .collect()
}

/// `X □ Y` with `A × B` acting coordinatewise.
fn product_witness(
    x: &Graph,
    a: &PermGroup,
    y: &Graph,
    b: &PermGroup,
) -> Result<(Graph, PermGroup)> {
    let graph = cartesian_product(x, y)?;
    let mut gens = lift(a, y.order(), true);
    gens.extend(lift(b, x.order(), false));
    let group = PermGroup::new(graph.order(), gens)?;
    Ok((graph, group))
}

fn grr_branch(g: &GroupTable, s: &[usize]) -> Result<(Graph, PermGroup, String)> {
    let gamma = cayley_graph(g, s)?;
    let k2 = Graph::complete(2);
    if relatively_prime(&gamma, &k2)? {
        let (graph, br) =
            product_witness(&gamma, &right_regular_group(g), &k2, &PermGroup::trivial(2))?;
        return Ok((graph, br, "grr-times-k2".into()));
    }
    let decomposition = prime_factorization(&gamma)?;
    let k2_at = decomposition
        .factors
        .iter()
        .position(|f| f.order() == 2)
        .expect("a factor isomorphic to K2");
    let rest: Vec<Graph> = decomposition
        .factors
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != k2_at)
        .map(|(_, f)| f.clone())
        .collect();
    let gamma1 = cartesian_power_product(&rest)?;
    let q2 = hypercube(2)?;
    let (graph, br) = product_witness(&gamma1, &automorphism_group(&gamma1)?, &q2.graph, &q2.even)?;
    Ok((graph, br, "grr-k2-factor-times-q2".into()))
}

fn class_c(g: &GroupTable, options: &PipelineOptions) -> Result<(Graph, PermGroup, String)> {
    let h = GroupTable::semidirect_by_inversion(g)?;
    if let Some(s) =
        grr_search(&h, options.budget)?.into_result("GRR search of the inversion extension")?
    {
        let graph = cayley_graph(&h, &s)?;
        // G sits in H as the indices 0..|G|
        let gens = g
            .small_generating_set()
            .iter()
            .map(|&x| h.right_regular(x))
            .collect();
        let br = PermGroup::new(h.order(), gens)?;
        return Ok((graph, br, "inversion-extension-grr".into()));
    }
    let triple = normal_bicayley_search(g, options.budget, true)?
        .into_result("normal bi-Cayley search")?
        .ok_or_else(|| {
            Error::Verification("no vertex-transitive normal bi-Cayley graph found".into())
        })?;
    Ok((
        triple.graph(),
        triple.br_generators(),
        "direct-bicayley-search".into(),
    ))
}

fn class_d(g: &GroupTable, options: &PipelineOptions) -> Result<(Graph, PermGroup, String)> {
    let (g1, _, r) = g.split_off_elementary_abelian_2();
    let r = r as usize;
    if g1.order() == 8 && are_isomorphic(&g1, &GroupTable::dicyclic(2)).is_some() {
        let mk = moebius_kantor();
        if r == 0 {
            return Ok((mk.graph, mk.q8, "moebius-kantor".into()));
        }
        let cube = hypercube(r)?;
        let (graph, br) = product_witness(&mk.graph, &mk.q8, &cube.graph, &cube.translations)?;
        return Ok((graph, br, "moebius-kantor-times-hypercube".into()));
    }
    let s = normal_cayley_search(&g1, options.budget)?
        .into_result("normal Cayley search")?
        .ok_or_else(|| {
            Error::Verification("no normal Cayley graph for the non-elementary factor".into())
        })?;
    let sigma = cayley_graph(&g1, &s)?;
    if !relatively_prime(&sigma, &Graph::complete(2))? {
        return Err(Error::Verification(
            "the normal Cayley graph has a K2 factor".into(),
        ));
    }
    let cube = hypercube(r + 1)?;
    let (graph, br) = product_witness(&sigma, &right_regular_group(&g1), &cube.graph, &cube.even)?;
    Ok((graph, br, "normal-cayley-times-hypercube".into()))
}

fn class_e(member: &str, options: &PipelineOptions) -> Result<(Graph, PermGroup, String)> {
    let c = class_e_connection_set(member)?;
    let g = &c.entry.table;
    let item = c.item;
    match c.partner {
        ClassEPartner::Hypercube => {
            let cube = hypercube(g.order().trailing_zeros() as usize + 1)?;
            Ok((cube.graph, cube.even, format!("class-e{item}-hypercube")))
        }
        ClassEPartner::K2 => {
            let k2 = Graph::complete(2);
            let rg = right_regular_group(g);
            let mut gamma = cayley_graph(g, &c.connection_set)?;
            let mut construction = format!("class-e{item}-cayley-times-k2");
            let prescribed_ok = is_normal_in(&automorphism_group(&gamma)?, &gamma, &rg)?
                && relatively_prime(&gamma, &k2)?;
            if !prescribed_ok {
                let s = normal_cayley_search(g, options.budget)?
                    .into_result("normal Cayley search")?
                    .ok_or_else(|| {
                        Error::Verification(format!("{member}: no normal Cayley graph"))
                    })?;
                gamma = cayley_graph(g, &s)?;
                if !relatively_prime(&gamma, &k2)? {
                    return Err(Error::Verification(format!(
                        "{member}: the searched normal Cayley graph has a K2 factor"
                    )));
                }
                construction = format!("class-e{item}-searched-cayley-times-k2");
            }
            let (graph, br) = product_witness(&gamma, &rg, &k2, &PermGroup::trivial(2))?;
            Ok((graph, br, construction))
        }
        ClassEPartner::MoebiusKantorCycle(n) => {
            let mk = moebius_kantor();
            let cycle = Graph::cycle(n);
            let rotation = Permutation::from_images((0..n).map(|i| (i + 1) % n).collect())?;
            let rotations = PermGroup::new(n, vec![rotation])?;
            let (graph, br) = product_witness(&mk.graph, &mk.q8, &cycle, &rotations)?;
            Ok((
                graph,
                br,
                format!("class-e{item}-moebius-kantor-times-cycle"),
            ))
        }
    }
}
