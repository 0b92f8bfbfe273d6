//! Automorphism groups of graphs and the group-action predicates built on
//! them: normality, semiregularity, transitivity, blocks and the kernel of
//! the action on a bipartition.

mod search;

use std::collections::{BTreeSet, HashSet};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::perm::Permutation;
use crate::permgroup::PermGroup;

/// Default bound on the vertex count accepted by [`automorphism_group`].
pub const DEFAULT_MAX_VERTICES: usize = 256;

/// The full automorphism group, with generators sorted by image list.
pub fn automorphism_group(g: &Graph) -> Result<PermGroup> {
    automorphism_group_bounded(g, DEFAULT_MAX_VERTICES)
}

pub fn automorphism_group_bounded(g: &Graph, max_vertices: usize) -> Result<PermGroup> {
    if g.order() > max_vertices {
        return Err(Error::resource("graph vertex count", max_vertices));
    }
    let found = search::search_automorphisms(g);
    if let Some(p) = found.generators.iter().find(|p| !g.is_automorphism(p)) {
        return Err(Error::Verification(format!(
            "search produced a non-automorphism {p:?}"
        )));
    }
    let group = PermGroup::new(g.order(), found.generators)?;
    if group.order() != found.order {
        return Err(Error::Verification(format!(
            "orbit product {} disagrees with stabilizer chain order {}",
            found.order,
            group.order()
        )));
    }
    Ok(group)
}

/// `|Aut(g)|` from the search alone, without building a stabilizer chain.
pub fn automorphism_order(g: &Graph) -> Result<num_bigint::BigUint> {
    if g.order() > DEFAULT_MAX_VERTICES {
        return Err(Error::resource("graph vertex count", DEFAULT_MAX_VERTICES));
    }
    Ok(search::search_automorphisms(g).order)
}

/// An isomorphism `a → b` as a vertex map, verified edge by edge.
pub fn are_graphs_isomorphic(a: &Graph, b: &Graph) -> Result<Option<Permutation>> {
    let bound = DEFAULT_MAX_VERTICES;
    if a.order() > bound || b.order() > bound {
        return Err(Error::resource("graph vertex count", bound));
    }
    Ok(search::find_isomorphism(a, b))
}

/// Whether `b` is normal in `Aut(g)`. Every generator of `b` must be an
/// automorphism of `g`.
pub fn is_normal_in_aut(g: &Graph, b: &PermGroup) -> Result<bool> {
    let aut = automorphism_group(g)?;
    is_normal_in(&aut, g, b)
}

/// As [`is_normal_in_aut`] with `Aut(g)` already computed.
pub fn is_normal_in(aut: &PermGroup, g: &Graph, b: &PermGroup) -> Result<bool> {
    if b.degree() != g.order() || b.generators().iter().any(|p| !g.is_automorphism(p)) {
        return Err(Error::Precondition(
            "the group is not a subgroup of the automorphism group".into(),
        ));
    }
    Ok(aut.generators().iter().all(|a| {
        b.generators()
            .iter()
            .all(|x| b.contains(&x.conjugate_by(a)))
    }))
}

/// Orbit structure of a permutation group on its points.
#[derive(Clone, Debug)]
pub struct ActionReport {
    pub group: PermGroup,
    pub orbits: Vec<Vec<usize>>,
    pub semiregular: bool,
    pub transitive: bool,
}

impl ActionReport {
    pub fn orbit_count(&self) -> usize {
        self.orbits.len()
    }

    pub fn regular(&self) -> bool {
        self.semiregular && self.transitive
    }
}

/// Semiregular exactly when every orbit has the size of the group.
pub fn action_report(b: &PermGroup) -> ActionReport {
    let orbits = b.orbits();
    let order = b.order();
    let semiregular = orbits
        .iter()
        .all(|o| num_bigint::BigUint::from(o.len()) == order);
    let transitive = orbits.len() <= 1;
    ActionReport {
        group: b.clone(),
        orbits,
        semiregular,
        transitive,
    }
}

pub fn is_vertex_transitive(g: &Graph) -> Result<bool> {
    Ok(automorphism_group(g)?.orbits().len() <= 1)
}

/// The subgroup of `Aut(g)` fixing both bipartition classes setwise.
pub fn bipartition_kernel(g: &Graph) -> Result<PermGroup> {
    let (b1, _) = g
        .bipartition()
        .ok_or_else(|| Error::Precondition("graph is not bipartite".into()))?;
    if !g.is_connected() {
        return Err(Error::Precondition("graph is not connected".into()));
    }
    let aut = automorphism_group(g)?;
    let mut in_b1 = vec![false; g.order()];
    for &v in &b1 {
        in_b1[v] = true;
    }
    // connected: an automorphism either keeps or swaps the classes, decided at vertex 0
    let keeps = |p: &Permutation| g.order() == 0 || in_b1[p.apply(0)] == in_b1[0];
    let (keep, swap): (Vec<&Permutation>, Vec<&Permutation>) =
        aut.generators().iter().partition(|p| keeps(p));
    // Schreier generators for the transversal {1, t}
    let mut gens: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut add = |p: Permutation| {
        if !p.is_identity() {
            gens.insert(p.images().to_vec());
        }
    };
    match swap.first() {
        None => keep.iter().for_each(|p| add((*p).clone())),
        Some(&t) => {
            let t_inv = t.inverse();
            for p in &keep {
                add((*p).clone());
                add(t.then(p).then(&t_inv));
            }
            for s in &swap {
                add(s.then(&t_inv));
                add(t.then(s));
            }
        }
    }
    let gens = gens
        .into_iter()
        .map(|images| Permutation::from_images(images).expect("permutation"))
        .collect();
    PermGroup::new(g.order(), gens)
}

/// Whether `subset` is a block of `Aut(g)`.
pub fn is_block(g: &Graph, subset: &[usize]) -> Result<bool> {
    let aut = automorphism_group(g)?;
    is_block_of(&aut, subset)
}

/// Whether every image of `subset` under `group` equals it or misses it.
pub fn is_block_of(group: &PermGroup, subset: &[usize]) -> Result<bool> {
    if subset.is_empty() {
        return Err(Error::Precondition("a block must be non-empty".into()));
    }
    if subset.iter().any(|&v| v >= group.degree()) {
        return Err(Error::Validation(
            "subset has points outside the domain".into(),
        ));
    }
    let start: BTreeSet<usize> = subset.iter().copied().collect();
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut queue = vec![start.clone()];
    seen.insert(start.iter().copied().collect());
    while let Some(set) = queue.pop() {
        for p in group.generators() {
            let image: BTreeSet<usize> = set.iter().map(|&v| p.apply(v)).collect();
            if image != start && !image.is_disjoint(&start) {
                return Ok(false);
            }
            if seen.insert(image.iter().copied().collect()) {
                queue.push(image);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order(g: &PermGroup) -> u64 {
        g.order_u64().unwrap()
    }

    #[test]
    fn small_groups() {
        assert_eq!(order(&automorphism_group(&Graph::cycle(4)).unwrap()), 8);
        assert_eq!(order(&automorphism_group(&Graph::complete(2)).unwrap()), 2);
        assert_eq!(order(&automorphism_group(&Graph::path(3)).unwrap()), 2);
        assert!(automorphism_group_bounded(&Graph::cycle(10), 8).is_err());
    }

    #[test]
    fn rotations_are_normal_in_dihedral() {
        let c4 = Graph::cycle(4);
        let rot = PermGroup::new(4, vec!["1 2 3 0".parse().unwrap()]).unwrap();
        assert!(is_normal_in_aut(&c4, &rot).unwrap());
        let refl = PermGroup::new(4, vec!["0 3 2 1".parse().unwrap()]).unwrap();
        assert!(!is_normal_in_aut(&c4, &refl).unwrap());
        let bad = PermGroup::new(4, vec!["1 0 2 3".parse().unwrap()]).unwrap();
        assert!(is_normal_in_aut(&c4, &bad).is_err());
    }

    #[test]
    fn action_reports() {
        let trivial = action_report(&PermGroup::trivial(3));
        assert_eq!(trivial.orbit_count(), 3);
        assert!(trivial.semiregular);
        let rot = action_report(&PermGroup::new(4, vec!["1 2 3 0".parse().unwrap()]).unwrap());
        assert!(rot.regular());
        let refl = action_report(&PermGroup::new(4, vec!["0 3 2 1".parse().unwrap()]).unwrap());
        assert!(!refl.semiregular);
    }

    #[test]
    fn transitivity() {
        assert!(is_vertex_transitive(&Graph::cycle(5)).unwrap());
        assert!(!is_vertex_transitive(&Graph::path(3)).unwrap());
    }

    #[test]
    fn kernels() {
        let k2 = bipartition_kernel(&Graph::complete(2)).unwrap();
        assert_eq!(order(&k2), 1);
        let c6 = bipartition_kernel(&Graph::cycle(6)).unwrap();
        assert_eq!(order(&c6), 6);
        assert!(bipartition_kernel(&Graph::cycle(5)).is_err());
    }

    #[test]
    fn blocks() {
        let c6 = Graph::cycle(6);
        assert!(is_block(&c6, &[0, 3]).unwrap());
        assert!(is_block(&c6, &[0, 2, 4]).unwrap());
        assert!(!is_block(&c6, &[0, 1]).unwrap());
        assert!(!is_block(&Graph::cycle(5), &[0, 2]).unwrap());
        assert!(is_block(&c6, &[]).is_err());
    }
}
