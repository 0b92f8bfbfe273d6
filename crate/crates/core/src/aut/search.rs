//! Colour refinement and individualization search.
//!
//! A colouring is a vector of colours `0..k`, ordered so that refining or
//! individualizing never reorders existing cells. Every operation depends
//! only on the graph structure and the current colours, so an isomorphism
//! between graphs maps refinement traces and leaves onto each other.

use num_bigint::BigUint;

use crate::graph::Graph;
use crate::perm::Permutation;

/// A node of the search tree: an equitable colouring and the invariant of
/// the refinement that produced it.
#[derive(Clone, Debug)]
pub(crate) struct Node {
    pub color: Vec<usize>,
    pub cells: usize,
    pub invariant: u64,
}

fn mix(h: u64, x: u64) -> u64 {
    let mut z = h ^ x
        .wrapping_add(0x9e37_79b9_7f4a_7c15)
        .wrapping_add(h << 6)
        .wrapping_add(h >> 2);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Refines until stable. New colour = rank of (old colour, sorted
/// neighbour colours) among all vertices.
pub(crate) fn refine(g: &Graph, mut color: Vec<usize>) -> Node {
    let n = g.order();
    let mut cells = color.iter().copied().max().map_or(0, |m| m + 1);
    let mut invariant = mix(0, cells as u64);
    loop {
        let mut sigs: Vec<(usize, Vec<usize>, usize)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|&u| color[u]).collect();
                nb.sort_unstable();
                (color[v], nb, v)
            })
            .collect();
        sigs.sort_unstable();
        let mut next = vec![0; n];
        let mut rank = 0;
        for k in 0..n {
            let boundary = k > 0 && (sigs[k].0 != sigs[k - 1].0 || sigs[k].1 != sigs[k - 1].1);
            if boundary {
                rank += 1;
            }
            if k == 0 || boundary {
                invariant = mix(invariant, k as u64);
                invariant = mix(invariant, sigs[k].0 as u64);
                for &c in &sigs[k].1 {
                    invariant = mix(invariant, c as u64);
                }
            }
            next[sigs[k].2] = rank;
        }
        let new_cells = if n == 0 { 0 } else { rank + 1 };
        invariant = mix(invariant, new_cells as u64);
        color = next;
        if new_cells == cells {
            break;
        }
        cells = new_cells;
    }
    Node {
        color,
        cells,
        invariant,
    }
}

impl Node {
    /// Smallest colour whose cell has more than one vertex, with its vertices
    /// in increasing order.
    pub fn target_cell(&self) -> Option<Vec<usize>> {
        let mut size = vec![0usize; self.cells];
        for &c in &self.color {
            size[c] += 1;
        }
        let c = (0..self.cells).find(|&c| size[c] > 1)?;
        Some(
            (0..self.color.len())
                .filter(|&v| self.color[v] == c)
                .collect(),
        )
    }

    /// Gives `v` its own cell in front of the rest of its old cell, then refines.
    pub fn individualize(&self, g: &Graph, v: usize) -> Node {
        let c = self.color[v];
        let color = self
            .color
            .iter()
            .enumerate()
            .map(|(u, &x)| {
                if x > c || (x == c && u != v) {
                    x + 1
                } else {
                    x
                }
            })
            .collect();
        let mut node = refine(g, color);
        node.invariant = mix(node.invariant, self.invariant);
        node
    }

    /// For a discrete colouring: the vertex carrying each colour.
    pub fn inverse_labelling(&self) -> Vec<usize> {
        let mut inv = vec![0; self.color.len()];
        for (v, &c) in self.color.iter().enumerate() {
            inv[c] = v;
        }
        inv
    }
}

/// The path of first choices down to a leaf.
struct FirstPath {
    /// `nodes[d]` is the node at depth `d`; the last one is discrete.
    nodes: Vec<Node>,
    /// Target cell at each non-leaf depth.
    cells: Vec<Vec<usize>>,
}

fn first_path(g: &Graph, root: Node) -> FirstPath {
    let mut nodes = vec![root];
    let mut cells = Vec::new();
    while let Some(cell) = nodes.last().expect("non-empty").target_cell() {
        let next = nodes.last().expect("non-empty").individualize(g, cell[0]);
        cells.push(cell);
        nodes.push(next);
    }
    FirstPath { nodes, cells }
}

/// Depth-first search below `node` (a node for `b` at `depth`) for a leaf
/// that, matched colour by colour with the reference leaf of `a`, gives an
/// isomorphism `a → b`. Nodes whose invariant differs from the reference
/// path at the same depth are pruned.
fn find_leaf(
    a: &Graph,
    b: &Graph,
    reference: &FirstPath,
    node: &Node,
    depth: usize,
) -> Option<Permutation> {
    if node.invariant != reference.nodes[depth].invariant
        || node.cells != reference.nodes[depth].cells
    {
        return None;
    }
    match node.target_cell() {
        None => {
            // σ(v) = the vertex of b carrying v's colour in the reference leaf
            let leaf = reference.nodes.last().expect("leaf");
            if depth + 1 != reference.nodes.len() {
                return None;
            }
            let target = node.inverse_labelling();
            let images: Vec<usize> = leaf.color.iter().map(|&c| target[c]).collect();
            let sigma = Permutation::from_images(images).expect("bijection of leaves");
            maps_onto(a, b, &sigma).then_some(sigma)
        }
        Some(cell) => {
            if depth + 1 >= reference.nodes.len() {
                return None;
            }
            cell.iter()
                .find_map(|&w| find_leaf(a, b, reference, &node.individualize(b, w), depth + 1))
        }
    }
}

fn maps_onto(a: &Graph, b: &Graph, sigma: &Permutation) -> bool {
    a.edge_count() == b.edge_count()
        && a.edges()
            .iter()
            .all(|&(u, v)| b.has_edge(sigma.apply(u), sigma.apply(v)))
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, x: usize, y: usize) {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx != ry {
            let (lo, hi) = (rx.min(ry), rx.max(ry));
            self.0[hi] = lo;
        }
    }
}

pub(crate) struct AutSearch {
    pub generators: Vec<Permutation>,
    pub order: BigUint,
}

/// Generators of the full automorphism group and its order as the product
/// of the orbit lengths along the first path.
pub(crate) fn search_automorphisms(g: &Graph) -> AutSearch {
    let n = g.order();
    let root = refine(g, vec![0; n]);
    let path = first_path(g, root);
    let mut generators: Vec<Permutation> = Vec::new();
    let mut order = BigUint::from(1u32);
    for depth in (0..path.cells.len()).rev() {
        let cell = &path.cells[depth];
        let v = cell[0];
        let mut orbits = UnionFind::new(n);
        for p in &generators {
            for x in 0..n {
                orbits.union(x, p.apply(x));
            }
        }
        let mut failed: Vec<usize> = Vec::new();
        for &w in &cell[1..] {
            let rw = orbits.find(w);
            if rw == orbits.find(v) || failed.contains(&rw) {
                continue;
            }
            let child = path.nodes[depth].individualize(g, w);
            match find_leaf(g, g, &path, &child, depth + 1) {
                Some(sigma) => {
                    for x in 0..n {
                        orbits.union(x, sigma.apply(x));
                    }
                    generators.push(sigma);
                }
                None => failed.push(rw),
            }
        }
        let rv = orbits.find(v);
        let orbit_len = cell.iter().filter(|&&x| orbits.find(x) == rv).count();
        order *= BigUint::from(orbit_len);
    }
    generators.sort_by(|p, q| p.images().cmp(q.images()));
    AutSearch { generators, order }
}

/// An isomorphism `a → b` as a vertex map, if one exists.
pub(crate) fn find_isomorphism(a: &Graph, b: &Graph) -> Option<Permutation> {
    if a.order() != b.order()
        || a.edge_count() != b.edge_count()
        || a.degree_sequence() != b.degree_sequence()
    {
        return None;
    }
    let n = a.order();
    let path = first_path(a, refine(a, vec![0; n]));
    let root_b = refine(b, vec![0; n]);
    find_leaf(a, b, &path, &root_b, 0)
}
