//! Finite groups as dense multiplication tables.
//!
//! Elements are the indices `0..order` and `0` is always the identity.
//! `mul(a, b)` is the product `ab`; when a table comes from permutations the
//! product applies `a` first, matching [`Permutation::then`].

mod build;
pub mod catalog;
mod iso;
mod props;
pub mod relations;

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::perm::Permutation;

pub use build::DEFAULT_MAX_GROUP_ORDER;
pub use iso::are_isomorphic;
pub use props::{DicyclicWitness, StructuralInvariants};

#[derive(Clone, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    mul: Vec<usize>,
    inv: Vec<usize>,
    labels: Option<Vec<String>>,
}

/// Exhaustive associativity check below this order; sampled above it.
const EXHAUSTIVE_ASSOCIATIVITY: usize = 64;

impl GroupTable {
    /// Validates a row-major multiplication table with identity `0`.
    pub fn from_table(order: usize, mul: Vec<usize>) -> Result<Self> {
        if order == 0 {
            return Err(Error::Validation("a group has at least one element".into()));
        }
        if mul.len() != order * order {
            return Err(Error::Validation(format!(
                "table has {} entries, expected {}",
                mul.len(),
                order * order
            )));
        }
        for a in 0..order {
            if mul[a] != a || mul[a * order] != a {
                return Err(Error::Validation("element 0 is not the identity".into()));
            }
        }
        // latin square
        for a in 0..order {
            let mut row = vec![false; order];
            let mut col = vec![false; order];
            for b in 0..order {
                let r = mul[a * order + b];
                let c = mul[b * order + a];
                if r >= order || c >= order || row[r] || col[c] {
                    return Err(Error::Validation(format!(
                        "row or column {a} is not a permutation of the elements"
                    )));
                }
                row[r] = true;
                col[c] = true;
            }
        }
        let inv: Vec<usize> = (0..order)
            .map(|a| {
                (0..order)
                    .find(|&b| mul[a * order + b] == 0)
                    .expect("latin")
            })
            .collect();
        let table = GroupTable {
            order,
            mul,
            inv,
            labels: None,
        };
        table.check_associative()?;
        Ok(table)
    }

    pub(crate) fn from_table_unchecked(order: usize, mul: Vec<usize>) -> Self {
        let inv = (0..order)
            .map(|a| {
                (0..order)
                    .find(|&b| mul[a * order + b] == 0)
                    .expect("latin")
            })
            .collect();
        GroupTable {
            order,
            mul,
            inv,
            labels: None,
        }
    }

    fn check_associative(&self) -> Result<()> {
        let n = self.order;
        let bad = |a: usize, b: usize, c: usize| {
            self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c))
        };
        if n <= EXHAUSTIVE_ASSOCIATIVITY {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if bad(a, b, c) {
                            return Err(Error::Validation(format!(
                                "not associative at ({a}, {b}, {c})"
                            )));
                        }
                    }
                }
            }
        } else {
            // fixed-seed linear congruential sample
            let mut state: u64 = 0x9e37_79b9_7f4a_7c15;
            let mut next = || {
                state = state
                    .wrapping_mul(6364136223846793005)
                    .wrapping_add(1442695040888963407);
                (state >> 33) as usize % n
            };
            for _ in 0..20_000 {
                let (a, b, c) = (next(), next(), next());
                if bad(a, b, c) {
                    return Err(Error::Validation(format!(
                        "not associative at ({a}, {b}, {c})"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.order);
        self.labels = Some(labels);
        self
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    /// Product of a word of element indices, left to right.
    pub fn product(&self, word: &[usize]) -> usize {
        word.iter().fold(0, |acc, &x| self.mul(acc, x))
    }

    pub fn pow(&self, a: usize, exp: i64) -> usize {
        let base = if exp < 0 { self.inv(a) } else { a };
        (0..exp.unsigned_abs()).fold(0, |acc, _| self.mul(acc, base))
    }

    /// `b⁻¹ a b`.
    pub fn conjugate(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(b), a), b)
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn element_orders(&self) -> Vec<usize> {
        (0..self.order).map(|a| self.element_order(a)).collect()
    }

    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.commute(a, b)))
    }

    /// Membership mask of the subgroup generated by `gens`.
    pub fn subgroup_mask(&self, gens: &[usize]) -> Vec<bool> {
        let mut mask = vec![false; self.order];
        mask[0] = true;
        let mut elems = vec![0];
        let mut head = 0;
        while head < elems.len() {
            let x = elems[head];
            head += 1;
            for &g in gens {
                let y = self.mul(x, g);
                if !mask[y] {
                    mask[y] = true;
                    elems.push(y);
                }
            }
        }
        mask
    }

    /// Sorted elements of the subgroup generated by `gens`.
    pub fn subgroup(&self, gens: &[usize]) -> Vec<usize> {
        mask_to_elements(&self.subgroup_mask(gens))
    }

    pub fn generates(&self, gens: &[usize]) -> bool {
        self.subgroup_mask(gens).iter().all(|&b| b)
    }

    pub fn is_subgroup(&self, elements: &[usize]) -> bool {
        let mut mask = vec![false; self.order];
        for &x in elements {
            mask[x] = true;
        }
        mask[0]
            && elements
                .iter()
                .all(|&a| elements.iter().all(|&b| mask[self.mul(a, b)]))
    }

    /// The subgroup on `elements` as a table of its own, plus the embedding
    /// (sub-index → index here). The identity stays first; the rest keep
    /// their relative order.
    pub fn subgroup_table(&self, elements: &[usize]) -> Result<(GroupTable, Vec<usize>)> {
        let mut embed: Vec<usize> = elements.to_vec();
        embed.sort_unstable();
        embed.dedup();
        if embed.first() != Some(&0) || !self.is_subgroup(&embed) {
            return Err(Error::Precondition("element set is not a subgroup".into()));
        }
        let mut index = vec![usize::MAX; self.order];
        for (k, &x) in embed.iter().enumerate() {
            index[x] = k;
        }
        let m = embed.len();
        let mut mul = Vec::with_capacity(m * m);
        for &a in &embed {
            for &b in &embed {
                mul.push(index[self.mul(a, b)]);
            }
        }
        let mut table = GroupTable::from_table_unchecked(m, mul);
        if let Some(labels) = &self.labels {
            table.labels = Some(embed.iter().map(|&x| labels[x].clone()).collect());
        }
        Ok((table, embed))
    }

    /// A generating set chosen greedily, preferring elements of large order.
    pub fn small_generating_set(&self) -> Vec<usize> {
        let orders = self.element_orders();
        let mut candidates: Vec<usize> = (1..self.order).collect();
        candidates.sort_by_key(|&a| (std::cmp::Reverse(orders[a]), a));
        let mut gens = Vec::new();
        let mut mask = self.subgroup_mask(&gens);
        for a in candidates {
            if mask.iter().all(|&b| b) {
                break;
            }
            if !mask[a] {
                gens.push(a);
                mask = self.subgroup_mask(&gens);
            }
        }
        gens
    }

    /// Right-regular permutation `R(g): x ↦ xg` on `0..order`.
    pub fn right_regular(&self, g: usize) -> Permutation {
        Permutation::from_images_unchecked((0..self.order).map(|x| self.mul(x, g)).collect())
    }

    /// Builds the group generated by permutations; returns the table and
    /// the embedding (element index → permutation).
    pub fn from_generators(
        gens: &[Permutation],
        max_order: usize,
    ) -> Result<(GroupTable, Vec<Permutation>)> {
        build::from_generators(gens, max_order)
    }

    pub fn cyclic(n: usize) -> GroupTable {
        build::cyclic(n)
    }

    pub fn direct_product(a: &GroupTable, b: &GroupTable) -> GroupTable {
        build::direct_product(a, b)
    }

    /// `A ⋊ ⟨α⟩` where `α` inverts every element of the abelian group `A`.
    /// Elements `(a, αᵉ)` have index `a + e·|A|`.
    pub fn semidirect_by_inversion(a: &GroupTable) -> Result<GroupTable> {
        build::semidirect_by_inversion(a)
    }

    /// `A ⋊ B` with `action[b]` the automorphism of `A` (as an index map)
    /// attached to `b`. Elements `(a, b)` have index `a + b·|A|`.
    pub fn semidirect(a: &GroupTable, b: &GroupTable, action: &[Vec<usize>]) -> Result<GroupTable> {
        build::semidirect(a, b, action)
    }

    /// `⟨a, x | a^{2m} = 1, x² = a^m, x⁻¹ax = a⁻¹⟩`, of order `4m`.
    pub fn dicyclic(m: usize) -> GroupTable {
        build::dicyclic(m)
    }

    pub fn dihedral(n: usize) -> GroupTable {
        let c = GroupTable::cyclic(n);
        let inv: Vec<usize> = (0..n).map(|a| c.inv(a)).collect();
        let action = vec![(0..n).collect(), inv];
        GroupTable::semidirect(&c, &GroupTable::cyclic(2), &action).expect("dihedral action")
    }

    pub fn elementary_abelian_2(rank: u32) -> GroupTable {
        let n = 1usize << rank;
        let mul = (0..n).flat_map(|a| (0..n).map(move |b| a ^ b)).collect();
        GroupTable::from_table_unchecked(n, mul)
    }

    pub fn structural_invariants(&self) -> StructuralInvariants {
        props::structural_invariants(self)
    }

    pub fn center(&self) -> Vec<usize> {
        (0..self.order)
            .filter(|&a| (0..self.order).all(|b| self.commute(a, b)))
            .collect()
    }

    /// Every subgroup of index two, as sorted element lists.
    pub fn index_two_subgroups(&self) -> Vec<Vec<usize>> {
        props::index_two_subgroups(self)
    }

    pub fn is_generalized_dicyclic(&self) -> Option<DicyclicWitness> {
        props::is_generalized_dicyclic(self)
    }

    /// Splits `self ≅ G1 × C2^r` with `r` maximal; returns `G1` (as a
    /// subgroup table with its embedding) and `r`.
    pub fn split_off_elementary_abelian_2(&self) -> (GroupTable, Vec<usize>, u32) {
        props::split_off_elementary_abelian_2(self)
    }
}

impl std::fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("GroupTable")
            .field("order", &self.order)
            .finish_non_exhaustive()
    }
}

pub(crate) fn mask_to_elements(mask: &[bool]) -> Vec<usize> {
    mask.iter()
        .enumerate()
        .filter_map(|(k, &b)| b.then_some(k))
        .collect()
}

/// Index of every element of a permutation embedding, for lookups.
pub(crate) fn embedding_index(embedding: &[Permutation]) -> HashMap<&[usize], usize> {
    embedding
        .iter()
        .enumerate()
        .map(|(k, p)| (p.images(), k))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_broken_tables() {
        assert!(GroupTable::from_table(2, vec![0, 1, 1, 1]).is_err());
        assert!(GroupTable::from_table(2, vec![1, 0, 0, 1]).is_err());
        // latin square with identity that is not associative (order 5 loop)
        let loop5 = vec![
            0, 1, 2, 3, 4, //
            1, 0, 3, 4, 2, //
            2, 4, 0, 1, 3, //
            3, 2, 4, 0, 1, //
            4, 3, 1, 2, 0,
        ];
        assert!(GroupTable::from_table(5, loop5).is_err());
    }

    #[test]
    fn cyclic_basics() {
        let c6 = GroupTable::cyclic(6);
        assert_eq!(c6.element_order(1), 6);
        assert_eq!(c6.inv(2), 4);
        assert!(c6.is_abelian());
        assert_eq!(c6.subgroup(&[2]), vec![0, 2, 4]);
        assert!(c6.generates(&[5]));
        assert!(!c6.generates(&[2, 4]));
    }

    #[test]
    fn subgroup_table_keeps_identity_first() {
        let d8 = GroupTable::dihedral(4);
        let rot = d8.subgroup(&[1]);
        let (sub, embed) = d8.subgroup_table(&rot).unwrap();
        assert_eq!(sub.order(), 4);
        assert_eq!(embed[0], 0);
        assert!(sub.is_abelian());
        assert!(d8.subgroup_table(&[0, 1]).is_err());
    }

    #[test]
    fn right_regular_is_a_homomorphism() {
        let q8 = GroupTable::dicyclic(2);
        for a in 0..8 {
            for b in 0..8 {
                assert_eq!(
                    q8.right_regular(a).then(&q8.right_regular(b)),
                    q8.right_regular(q8.mul(a, b))
                );
            }
        }
    }
}
