use std::collections::BTreeMap;

use super::GroupTable;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructuralInvariants {
    pub abelian: bool,
    pub exponent: usize,
    pub center_order: usize,
    /// element order → number of elements of that order
    pub order_spectrum: BTreeMap<usize, usize>,
}

pub(super) fn structural_invariants(g: &GroupTable) -> StructuralInvariants {
    let orders = g.element_orders();
    let mut order_spectrum = BTreeMap::new();
    for &k in &orders {
        *order_spectrum.entry(k).or_insert(0) += 1;
    }
    let exponent = orders
        .iter()
        .fold(1, |acc, &k| acc / crate::perm::gcd(acc, k) * k);
    StructuralInvariants {
        abelian: g.is_abelian(),
        exponent,
        center_order: g.center().len(),
        order_spectrum,
    }
}

/// Index-2 subgroups are the kernels of the surjections onto C2; they all
/// contain the subgroup `M` generated by squares, and `G/M` is elementary
/// abelian, so they correspond to the non-zero linear functionals on `G/M`.
pub(super) fn index_two_subgroups(g: &GroupTable) -> Vec<Vec<usize>> {
    let n = g.order();
    let squares: Vec<usize> = (0..n).map(|x| g.mul(x, x)).collect();
    let in_m = g.subgroup_mask(&squares);

    // coset of M containing each element
    let mut coset = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for x in 0..n {
        if coset[x] != usize::MAX {
            continue;
        }
        let id = reps.len();
        reps.push(x);
        for m in 0..n {
            if in_m[m] {
                coset[g.mul(x, m)] = id;
            }
        }
    }

    // coordinates of each coset over a greedily chosen basis of G/M
    let mut coords: Vec<Option<u32>> = vec![None; reps.len()];
    coords[coset[0]] = Some(0);
    let mut known = vec![0usize];
    let mut rank = 0u32;
    for x in 0..n {
        if coords[coset[x]].is_some() {
            continue;
        }
        let bit = 1u32 << rank;
        rank += 1;
        let snapshot = known.clone();
        for r in snapshot {
            let y = g.mul(r, x);
            let c = coords[coset[r]].expect("known") ^ bit;
            if coords[coset[y]].is_none() {
                coords[coset[y]] = Some(c);
                known.push(y);
            }
        }
    }

    (1u32..(1 << rank))
        .map(|functional| {
            (0..n)
                .filter(|&x| {
                    (coords[coset[x]].expect("spanned") & functional)
                        .count_ones()
                        .is_multiple_of(2)
                })
                .collect()
        })
        .collect()
}

/// Witness that a group is generalized dicyclic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DicyclicWitness {
    /// The abelian index-2 subgroup, sorted.
    pub subgroup: Vec<usize>,
    /// The order-4 element outside it that inverts it by conjugation.
    pub element: usize,
}

pub(super) fn is_generalized_dicyclic(g: &GroupTable) -> Option<DicyclicWitness> {
    if g.is_abelian() {
        return None;
    }
    let n = g.order();
    for subgroup in index_two_subgroups(g) {
        let abelian = subgroup
            .iter()
            .all(|&a| subgroup.iter().all(|&b| g.commute(a, b)));
        if !abelian {
            continue;
        }
        let mut inside = vec![false; n];
        for &x in &subgroup {
            inside[x] = true;
        }
        let found = (0..n).find(|&b| {
            !inside[b]
                && g.element_order(b) == 4
                && subgroup.iter().all(|&x| g.conjugate(x, b) == g.inv(x))
        });
        if let Some(element) = found {
            return Some(DicyclicWitness { subgroup, element });
        }
    }
    None
}

pub(super) fn split_off_elementary_abelian_2(g: &GroupTable) -> (GroupTable, Vec<usize>, u32) {
    let mut current = g.clone();
    let mut embedding: Vec<usize> = (0..g.order()).collect();
    let mut rank = 0;
    'peel: loop {
        let center = current.center();
        for &z in center.iter().filter(|&&z| current.element_order(z) == 2) {
            for k in index_two_subgroups(&current) {
                if k.binary_search(&z).is_err() {
                    // z central of order 2 outside a normal index-2 subgroup K: G = K × ⟨z⟩
                    let (sub, embed) = current.subgroup_table(&k).expect("index-2 subgroup");
                    embedding = embed.iter().map(|&x| embedding[x]).collect();
                    current = sub;
                    rank += 1;
                    continue 'peel;
                }
            }
        }
        break;
    }
    (current, embedding, rank)
}
