use super::Graph;
use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::perm::Permutation;
use crate::permgroup::PermGroup;

fn normalize_set(g: &GroupTable, set: &[usize], what: &str) -> Result<Vec<usize>> {
    if let Some(&x) = set.iter().find(|&&x| x >= g.order()) {
        return Err(Error::Validation(format!(
            "{what} contains {x}, outside a group of order {}",
            g.order()
        )));
    }
    let mut s = set.to_vec();
    s.sort_unstable();
    s.dedup();
    Ok(s)
}

fn check_connection_set(g: &GroupTable, s: &[usize], what: &str) -> Result<()> {
    if s.contains(&g.identity()) {
        return Err(Error::Validation(format!("{what} contains the identity")));
    }
    if let Some(&x) = s.iter().find(|&&x| s.binary_search(&g.inv(x)).is_err()) {
        return Err(Error::Validation(format!(
            "{what} is not inverse-closed: {x} is present but its inverse is not"
        )));
    }
    Ok(())
}

/// `Cay(G, S)`: vertices are element indices, `g ~ sg` for `s ∈ S`.
pub fn cayley_graph(g: &GroupTable, s: &[usize]) -> Result<Graph> {
    let s = normalize_set(g, s, "connection set")?;
    check_connection_set(g, &s, "connection set")?;
    let edges: Vec<_> = (0..g.order())
        .flat_map(|x| s.iter().map(move |&y| (x, y)))
        .map(|(x, y)| (x, g.mul(y, x)))
        .filter(|&(x, y)| x < y)
        .collect();
    Graph::from_edges(g.order(), &edges)
}

/// A bi-Cayley triple `(R, L, S)` over `H`, with `h₀ ↦ h` and `h₁ ↦ |H| + h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiCayleyTriple {
    h: GroupTable,
    r: Vec<usize>,
    l: Vec<usize>,
    s: Vec<usize>,
}

impl BiCayleyTriple {
    pub fn new(h: GroupTable, r: &[usize], l: &[usize], s: &[usize]) -> Result<Self> {
        let r = normalize_set(&h, r, "R")?;
        let l = normalize_set(&h, l, "L")?;
        let s = normalize_set(&h, s, "S")?;
        check_connection_set(&h, &r, "R")?;
        check_connection_set(&h, &l, "L")?;
        if s.is_empty() {
            return Err(Error::Validation("S must be non-empty".into()));
        }
        Ok(BiCayleyTriple { h, r, l, s })
    }

    pub fn group(&self) -> &GroupTable {
        &self.h
    }

    pub fn r(&self) -> &[usize] {
        &self.r
    }

    pub fn l(&self) -> &[usize] {
        &self.l
    }

    pub fn s(&self) -> &[usize] {
        &self.s
    }

    /// Vertex index of `h_side`.
    pub fn vertex(&self, h: usize, side: usize) -> usize {
        assert!(side < 2);
        side * self.h.order() + h
    }

    /// Right edges `h₀ ~ (rh)₀`, left edges `h₁ ~ (lh)₁`, spokes `h₀ ~ (sh)₁`.
    pub fn graph(&self) -> Graph {
        let n = self.h.order();
        let mut edges = Vec::new();
        for h in 0..n {
            for &r in &self.r {
                edges.push((h, self.h.mul(r, h)));
            }
            for &l in &self.l {
                edges.push((n + h, n + self.h.mul(l, h)));
            }
            for &s in &self.s {
                edges.push((h, n + self.h.mul(s, h)));
            }
        }
        Graph::from_edges(2 * n, &edges).expect("valid triple")
    }

    /// `BR(g): h_i ↦ (hg)_i`.
    pub fn br(&self, g: usize) -> Permutation {
        let n = self.h.order();
        let images = (0..2 * n)
            .map(|v| (v / n) * n + self.h.mul(v % n, g))
            .collect();
        Permutation::from_images(images).expect("right translation")
    }

    /// `BR(H)` generated by the images of a small generating set of `H`.
    pub fn br_generators(&self) -> PermGroup {
        let gens = self
            .h
            .small_generating_set()
            .into_iter()
            .map(|g| self.br(g))
            .collect();
        PermGroup::new(2 * self.h.order(), gens).expect("same degree")
    }
}
