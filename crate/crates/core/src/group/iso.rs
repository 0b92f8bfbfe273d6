use super::GroupTable;

/// Per-element isomorphism invariant: (order, centralizer size).
fn element_classes(g: &GroupTable) -> Vec<(usize, usize)> {
    (0..g.order())
        .map(|a| {
            let centralizer = (0..g.order()).filter(|&b| g.commute(a, b)).count();
            (g.element_order(a), centralizer)
        })
        .collect()
}

/// Returns an isomorphism `A → B` (as an index map) if one exists.
///
/// Cheap invariants are compared first; then images of a fixed generating
/// set of `A` are chosen by backtracking, extending the partial map over the
/// generated subgroup after each choice and rejecting conflicts early. Any
/// returned map is re-checked against the full tables.
pub fn are_isomorphic(a: &GroupTable, b: &GroupTable) -> Option<Vec<usize>> {
    if a.order() != b.order() {
        return None;
    }
    if a.structural_invariants() != b.structural_invariants() {
        return None;
    }
    let class_a = element_classes(a);
    let class_b = element_classes(b);
    let mut sorted_a = class_a.clone();
    let mut sorted_b = class_b.clone();
    sorted_a.sort_unstable();
    sorted_b.sort_unstable();
    if sorted_a != sorted_b {
        return None;
    }

    // prefer generators with few candidate images
    let candidates_for = |x: usize| -> Vec<usize> {
        (0..b.order())
            .filter(|&y| class_b[y] == class_a[x])
            .collect()
    };
    let mut gens = Vec::new();
    let mut covered = a.subgroup_mask(&gens);
    let mut pool: Vec<usize> = (1..a.order()).collect();
    pool.sort_by_key(|&x| {
        (
            candidates_for(x).len(),
            std::cmp::Reverse(a.element_order(x)),
            x,
        )
    });
    for x in pool {
        if covered.iter().all(|&c| c) {
            break;
        }
        if !covered[x] {
            gens.push(x);
            covered = a.subgroup_mask(&gens);
        }
    }
    let candidates: Vec<Vec<usize>> = gens.iter().map(|&x| candidates_for(x)).collect();

    let mut state = PartialMap::new(a.order());
    let map = extend(a, b, &gens, &candidates, 0, &mut state)?;
    let ok =
        (0..a.order()).all(|x| (0..a.order()).all(|y| map[a.mul(x, y)] == b.mul(map[x], map[y])));
    assert!(ok, "backtracking produced a non-homomorphism");
    Some(map)
}

#[derive(Clone)]
struct PartialMap {
    forward: Vec<Option<usize>>,
    backward: Vec<Option<usize>>,
    domain: Vec<usize>,
}

impl PartialMap {
    fn new(n: usize) -> Self {
        let mut forward = vec![None; n];
        let mut backward = vec![None; n];
        forward[0] = Some(0);
        backward[0] = Some(0);
        PartialMap {
            forward,
            backward,
            domain: vec![0],
        }
    }

    fn set(&mut self, x: usize, y: usize) -> bool {
        match (self.forward[x], self.backward[y]) {
            (Some(fx), _) => fx == y,
            (None, Some(_)) => false,
            (None, None) => {
                self.forward[x] = Some(y);
                self.backward[y] = Some(x);
                self.domain.push(x);
                true
            }
        }
    }
}

/// Closes the partial map under right multiplication by `gens[..=depth]`.
fn close(
    a: &GroupTable,
    b: &GroupTable,
    gens: &[usize],
    depth: usize,
    state: &mut PartialMap,
) -> bool {
    let mut head = 0;
    while head < state.domain.len() {
        let x = state.domain[head];
        head += 1;
        let fx = state.forward[x].expect("domain is mapped");
        for &g in &gens[..=depth] {
            let fg = state.forward[g].expect("generator is mapped");
            if !state.set(a.mul(x, g), b.mul(fx, fg)) {
                return false;
            }
        }
    }
    true
}

fn extend(
    a: &GroupTable,
    b: &GroupTable,
    gens: &[usize],
    candidates: &[Vec<usize>],
    depth: usize,
    state: &mut PartialMap,
) -> Option<Vec<usize>> {
    if depth == gens.len() {
        return Some(state.forward.iter().map(|y| y.expect("total")).collect());
    }
    for &y in &candidates[depth] {
        let mut next = state.clone();
        if !next.set(gens[depth], y) {
            continue;
        }
        if !close(a, b, gens, depth, &mut next) {
            continue;
        }
        if let Some(map) = extend(a, b, gens, candidates, depth + 1, &mut next) {
            return Some(map);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dihedral_six_is_symmetric_three() {
        let d6 = GroupTable::dihedral(3);
        let c3: crate::perm::Permutation = "1 2 0".parse().unwrap();
        let t: crate::perm::Permutation = "1 0 2".parse().unwrap();
        let (s3, _) = GroupTable::from_generators(&[c3, t], 10).unwrap();
        assert!(are_isomorphic(&d6, &s3).is_some());
    }

    #[test]
    fn quaternion_is_not_dihedral() {
        assert!(are_isomorphic(&GroupTable::dicyclic(2), &GroupTable::dihedral(4)).is_none());
        let c4c2 = GroupTable::direct_product(&GroupTable::cyclic(4), &GroupTable::cyclic(2));
        assert!(are_isomorphic(&c4c2, &GroupTable::elementary_abelian_2(3)).is_none());
    }

    #[test]
    fn relabelled_tables_are_isomorphic() {
        // conjugate the table of Q8 x C3 by a fixed relabelling that keeps 0
        let g = GroupTable::direct_product(&GroupTable::dicyclic(2), &GroupTable::cyclic(3));
        let n = g.order();
        let relabel: Vec<usize> = std::iter::once(0)
            .chain((1..n).map(|x| (x * 7) % (n - 1) + 1))
            .collect();
        let mut back = vec![0; n];
        for (x, &y) in relabel.iter().enumerate() {
            back[y] = x;
        }
        let mul = (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .map(|(x, y)| relabel[g.mul(back[x], back[y])])
            .collect();
        let h = GroupTable::from_table(n, mul).unwrap();
        let map = are_isomorphic(&g, &h).expect("isomorphic");
        for x in 0..n {
            for y in 0..n {
                assert_eq!(map[g.mul(x, y)], h.mul(map[x], map[y]));
            }
        }
    }
}
