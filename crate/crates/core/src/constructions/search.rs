//! Exhaustive witness searches over connection sets.
//!
//! Connection sets are inverse-closed and identity-free. Candidates are
//! visited by increasing size and, within a size, in lexicographic order of
//! their sorted element indices; the first witness in that order is
//! returned even when candidates are tested in parallel. Bi-Cayley triples
//! are ordered by `|R| + |L| + |S|`, then by `(R, L, S)` lexicographically,
//! and only triples with the identity in `S` are visited: replacing `S` by
//! `xS` and `L` by `xLx⁻¹` gives an isomorphic graph (via `h₁ ↦ (xh)₁`)
//! that commutes with `BR(H)`, so no witness is lost.

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::aut::{automorphism_group, automorphism_order, is_normal_in};
use crate::error::{Error, Result};
use crate::graph::{cayley_graph, right_regular_group, BiCayleyTriple};
use crate::group::GroupTable;

/// Largest group order the searches accept.
pub const MAX_SEARCH_ORDER: usize = 128;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    /// Candidates that may be enumerated before giving up.
    pub max_candidates: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_candidates: 2_000_000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome<T> {
    Found(T),
    /// The whole space was scanned without a witness.
    Exhausted {
        examined: u64,
    },
    /// The budget ran out first.
    Inconclusive {
        examined: u64,
    },
}

impl<T> SearchOutcome<T> {
    pub fn found(&self) -> Option<&T> {
        match self {
            SearchOutcome::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn is_exhausted(&self) -> bool {
        matches!(self, SearchOutcome::Exhausted { .. })
    }

    /// `Found` → `Some`, `Exhausted` → `None`, `Inconclusive` → error.
    pub fn into_result(self, what: &str) -> Result<Option<T>> {
        match self {
            SearchOutcome::Found(t) => Ok(Some(t)),
            SearchOutcome::Exhausted { .. } => Ok(None),
            SearchOutcome::Inconclusive { examined } => Err(Error::Inconclusive(format!(
                "{what}: budget exhausted after {examined} candidates"
            ))),
        }
    }
}

/// `{x, x⁻¹}` for every non-identity `x`, ordered by smallest element.
fn units(g: &GroupTable) -> Vec<Vec<usize>> {
    (1..g.order())
        .filter(|&x| x <= g.inv(x))
        .map(|x| {
            if x == g.inv(x) {
                vec![x]
            } else {
                vec![x, g.inv(x)]
            }
        })
        .collect()
}

/// Number of unions of units with each total size.
fn count_by_size(units: &[Vec<usize>], max: usize) -> Vec<u64> {
    let mut counts = vec![0u64; max + 1];
    counts[0] = 1;
    for u in units {
        for s in (u.len()..=max).rev() {
            counts[s] = counts[s].saturating_add(counts[s - u.len()]);
        }
    }
    counts
}

/// Unions of units with total size `size`, each sorted, in lexicographic order.
fn sets_of_size(units: &[Vec<usize>], size: usize) -> Vec<Vec<usize>> {
    fn go(
        units: &[Vec<usize>],
        k: usize,
        left: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if left == 0 {
            let mut s = cur.clone();
            s.sort_unstable();
            out.push(s);
            return;
        }
        if k == units.len() {
            return;
        }
        if units[k].len() <= left {
            cur.extend(&units[k]);
            go(units, k + 1, left - units[k].len(), cur, out);
            cur.truncate(cur.len() - units[k].len());
        }
        go(units, k + 1, left, cur, out);
    }
    let mut out = Vec::new();
    go(units, 0, size, &mut Vec::new(), &mut out);
    out.sort_unstable();
    out
}

fn check_order(g: &GroupTable) -> Result<()> {
    if g.order() > MAX_SEARCH_ORDER {
        return Err(Error::resource("search group order", MAX_SEARCH_ORDER));
    }
    Ok(())
}

/// First generating connection set satisfying `accept`.
fn scan_connection_sets<F>(
    g: &GroupTable,
    budget: SearchBudget,
    accept: F,
) -> Result<SearchOutcome<Vec<usize>>>
where
    F: Fn(&[usize]) -> Result<bool> + Sync,
{
    check_order(g)?;
    let units = units(g);
    let max = g.order() - 1;
    let counts = count_by_size(&units, max);
    let mut examined = 0u64;
    for (size, &count) in counts.iter().enumerate().take(max + 1) {
        if count == 0 {
            continue;
        }
        if examined.saturating_add(count) > budget.max_candidates {
            return Ok(SearchOutcome::Inconclusive { examined });
        }
        examined += count;
        let hit = sets_of_size(&units, size)
            .into_par_iter()
            .filter(|s| g.generates(s))
            .find_map_first(|s| match accept(&s) {
                Ok(true) => Some(Ok(s)),
                Ok(false) => None,
                Err(e) => Some(Err(e)),
            });
        if let Some(result) = hit {
            return result.map(SearchOutcome::Found);
        }
    }
    Ok(SearchOutcome::Exhausted { examined })
}

/// A connection set whose Cayley graph is a GRR: connected with
/// `|Aut| = |G|`.
pub fn grr_search(g: &GroupTable, budget: SearchBudget) -> Result<SearchOutcome<Vec<usize>>> {
    let n = BigUint::from(g.order());
    scan_connection_sets(g, budget, |s| {
        let cay = cayley_graph(g, s)?;
        Ok(automorphism_order(&cay)? == n)
    })
}

/// A connection set whose Cayley graph is connected with `R(G)` normal in
/// the automorphism group.
pub fn normal_cayley_search(
    g: &GroupTable,
    budget: SearchBudget,
) -> Result<SearchOutcome<Vec<usize>>> {
    let rg = right_regular_group(g);
    scan_connection_sets(g, budget, |s| {
        let cay = cayley_graph(g, s)?;
        let aut = automorphism_group(&cay)?;
        is_normal_in(&aut, &cay, &rg)
    })
}

/// A triple whose bi-Cayley graph is connected with `BR(H)` normal in the
/// automorphism group and, if requested, vertex-transitive.
pub fn normal_bicayley_search(
    h: &GroupTable,
    budget: SearchBudget,
    require_vertex_transitive: bool,
) -> Result<SearchOutcome<BiCayleyTriple>> {
    check_order(h)?;
    let n = h.order();
    let units = units(h);
    let side_counts = count_by_size(&units, n - 1);
    // S = {1} ∪ T with T any subset of the other elements
    let others: Vec<Vec<usize>> = (1..n).map(|x| vec![x]).collect();
    let s_counts = count_by_size(&others, n - 1);
    let max_total = 2 * (n - 1) + n;
    let mut examined = 0u64;
    for total in 1..=max_total {
        let mut count = 0u64;
        for r in 0..=(n - 1).min(total - 1) {
            for l in 0..=(n - 1).min(total - 1 - r) {
                let t = total - 1 - r - l;
                if t < n {
                    count = count.saturating_add(
                        side_counts[r]
                            .saturating_mul(side_counts[l])
                            .saturating_mul(s_counts[t]),
                    );
                }
            }
        }
        if count == 0 {
            continue;
        }
        if examined.saturating_add(count) > budget.max_candidates {
            return Ok(SearchOutcome::Inconclusive { examined });
        }
        examined += count;
        let mut triples: Vec<(Vec<usize>, Vec<usize>, Vec<usize>)> = Vec::new();
        for r in 0..=(n - 1).min(total - 1) {
            for l in 0..=(n - 1).min(total - 1 - r) {
                let t = total - 1 - r - l;
                if t > n - 1 {
                    continue;
                }
                let rs = sets_of_size(&units, r);
                let ls = sets_of_size(&units, l);
                let ss = sets_of_size(&others, t);
                for rr in &rs {
                    for ll in &ls {
                        for tt in &ss {
                            let mut s = vec![0];
                            s.extend(tt);
                            triples.push((rr.clone(), ll.clone(), s));
                        }
                    }
                }
            }
        }
        triples.sort_unstable();
        let hit = triples.into_par_iter().find_map_first(|(r, l, s)| {
            let result = (|| -> Result<Option<BiCayleyTriple>> {
                let triple = BiCayleyTriple::new(h.clone(), &r, &l, &s)?;
                let graph = triple.graph();
                if !graph.is_connected() {
                    return Ok(None);
                }
                let aut = automorphism_group(&graph)?;
                if require_vertex_transitive && aut.orbits().len() != 1 {
                    return Ok(None);
                }
                let br = triple.br_generators();
                Ok(is_normal_in(&aut, &graph, &br)?.then_some(triple))
            })();
            result.transpose()
        });
        if let Some(result) = hit {
            return result.map(SearchOutcome::Found);
        }
    }
    Ok(SearchOutcome::Exhausted { examined })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_order() {
        let c4 = GroupTable::cyclic(4);
        let u = units(&c4);
        assert_eq!(u, vec![vec![1, 3], vec![2]]);
        assert_eq!(count_by_size(&u, 3), vec![1, 1, 1, 1]);
        assert_eq!(sets_of_size(&u, 3), vec![vec![1, 2, 3]]);
        let e8 = GroupTable::elementary_abelian_2(3);
        let sets = sets_of_size(&units(&e8), 2);
        assert_eq!(sets.len(), 21);
        assert_eq!(sets[0], vec![1, 2]);
        assert!(sets.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn grr_examples() {
        let b = SearchBudget::default();
        assert!(grr_search(&GroupTable::cyclic(3), b)
            .unwrap()
            .is_exhausted());
        assert!(grr_search(&GroupTable::elementary_abelian_2(2), b)
            .unwrap()
            .is_exhausted());
        assert_eq!(
            grr_search(&GroupTable::cyclic(1), b).unwrap(),
            SearchOutcome::Found(vec![])
        );
        assert_eq!(
            grr_search(&GroupTable::cyclic(2), b).unwrap(),
            SearchOutcome::Found(vec![1])
        );
        let tight = SearchBudget { max_candidates: 1 };
        assert!(matches!(
            grr_search(&GroupTable::cyclic(5), tight).unwrap(),
            SearchOutcome::Inconclusive { .. }
        ));
    }

    #[test]
    fn normal_cayley_examples() {
        let b = SearchBudget::default();
        let d6 = GroupTable::dihedral(3);
        let s = normal_cayley_search(&d6, b).unwrap();
        assert!(s.found().is_some());
        let c4c2 = GroupTable::direct_product(&GroupTable::cyclic(4), &GroupTable::cyclic(2));
        assert!(normal_cayley_search(&c4c2, b).unwrap().is_exhausted());
    }

    #[test]
    fn bicayley_examples() {
        let b = SearchBudget::default();
        let t = normal_bicayley_search(&GroupTable::cyclic(1), b, true).unwrap();
        let t = t.found().unwrap();
        assert_eq!(t.s(), &[0]);
        let t = normal_bicayley_search(&GroupTable::cyclic(2), b, true).unwrap();
        assert_eq!(t.found().unwrap().graph().order(), 4);
    }
}
