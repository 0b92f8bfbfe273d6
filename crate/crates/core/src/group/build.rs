use std::collections::HashMap;

use super::GroupTable;
use crate::error::{Error, Result};
use crate::perm::Permutation;

pub const DEFAULT_MAX_GROUP_ORDER: usize = 4096;

pub(super) fn from_generators(
    gens: &[Permutation],
    max_order: usize,
) -> Result<(GroupTable, Vec<Permutation>)> {
    let degree = match gens.first() {
        Some(g) => g.degree(),
        None => {
            return Err(Error::Precondition(
                "at least one generator is required".into(),
            ))
        }
    };
    if gens.iter().any(|g| g.degree() != degree) {
        return Err(Error::Precondition("generators differ in degree".into()));
    }

    // breadth-first closure under right multiplication by generators;
    // `step[x][k]` is the index of `x * gens[k]`
    let mut elements = vec![Permutation::identity(degree)];
    let mut index: HashMap<Permutation, usize> = HashMap::new();
    index.insert(elements[0].clone(), 0);
    let mut step: Vec<Vec<usize>> = Vec::new();
    let mut parent: Vec<(usize, usize)> = vec![(0, 0)];
    let mut head = 0;
    while head < elements.len() {
        let x = elements[head].clone();
        let mut row = Vec::with_capacity(gens.len());
        for (k, g) in gens.iter().enumerate() {
            let y = x.then(g);
            let id = match index.get(&y) {
                Some(&id) => id,
                None => {
                    let id = elements.len();
                    if id >= max_order {
                        return Err(Error::resource("generated group order", max_order));
                    }
                    index.insert(y.clone(), id);
                    elements.push(y);
                    parent.push((head, k));
                    id
                }
            };
            row.push(id);
        }
        step.push(row);
        head += 1;
    }

    // row a of the table: a * e for e in BFS order, via e = parent(e) * g_k
    let n = elements.len();
    let mut mul = vec![0; n * n];
    for a in 0..n {
        mul[a * n] = a;
        for e in 1..n {
            let (p, k) = parent[e];
            mul[a * n + e] = step[mul[a * n + p]][k];
        }
    }
    Ok((GroupTable::from_table_unchecked(n, mul), elements))
}

pub(super) fn cyclic(n: usize) -> GroupTable {
    assert!(n >= 1);
    let mul = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a + b) % n))
        .collect();
    GroupTable::from_table_unchecked(n, mul)
}

pub(super) fn direct_product(a: &GroupTable, b: &GroupTable) -> GroupTable {
    let (na, nb) = (a.order(), b.order());
    let n = na * nb;
    let mut mul = Vec::with_capacity(n * n);
    for x in 0..n {
        let (xa, xb) = (x / nb, x % nb);
        for y in 0..n {
            let (ya, yb) = (y / nb, y % nb);
            mul.push(a.mul(xa, ya) * nb + b.mul(xb, yb));
        }
    }
    let mut table = GroupTable::from_table_unchecked(n, mul);
    if let (Some(la), Some(lb)) = (a.labels(), b.labels()) {
        let labels = (0..n)
            .map(|x| format!("({},{})", la[x / nb], lb[x % nb]))
            .collect();
        table = table.with_labels(labels);
    }
    table
}

pub(super) fn semidirect_by_inversion(a: &GroupTable) -> Result<GroupTable> {
    if !a.is_abelian() {
        return Err(Error::Precondition(
            "inversion is an automorphism only of abelian groups".into(),
        ));
    }
    let n = a.order();
    let inv: Vec<usize> = (0..n).map(|x| a.inv(x)).collect();
    semidirect(a, &cyclic(2), &[(0..n).collect(), inv])
}

pub(super) fn semidirect(
    a: &GroupTable,
    b: &GroupTable,
    action: &[Vec<usize>],
) -> Result<GroupTable> {
    let (na, nb) = (a.order(), b.order());
    if action.len() != nb || action.iter().any(|phi| phi.len() != na) {
        return Err(Error::Validation("action has the wrong shape".into()));
    }
    for phi in action {
        for x in 0..na {
            for y in 0..na {
                if phi[a.mul(x, y)] != a.mul(phi[x], phi[y]) {
                    return Err(Error::Validation(
                        "action map is not an automorphism".into(),
                    ));
                }
            }
        }
    }
    for s in 0..nb {
        for t in 0..nb {
            let st = b.mul(s, t);
            if (0..na).any(|x| action[st][x] != action[s][action[t][x]]) {
                return Err(Error::Validation("action is not a homomorphism".into()));
            }
        }
    }
    let n = na * nb;
    let mut mul = Vec::with_capacity(n * n);
    for x in 0..n {
        let (xa, xb) = (x % na, x / na);
        for y in 0..n {
            let (ya, yb) = (y % na, y / na);
            mul.push(a.mul(xa, action[xb][ya]) + b.mul(xb, yb) * na);
        }
    }
    GroupTable::from_table(n, mul)
}

pub(super) fn dicyclic(m: usize) -> GroupTable {
    assert!(m >= 1);
    let k = 2 * m;
    let n = 2 * k;
    let mut mul = Vec::with_capacity(n * n);
    for x in 0..n {
        let (i, e) = (x % k, x / k);
        for y in 0..n {
            let (j, f) = (y % k, y / k);
            let (power, xs) = match (e, f) {
                (0, _) => (i + j, f),
                // x a^j = a^{-j} x, x^2 = a^m
                (_, 0) => (i + k - j, 1),
                _ => (i + k - j + m, 0),
            };
            mul.push(power % k + xs * k);
        }
    }
    GroupTable::from_table_unchecked(n, mul)
}
