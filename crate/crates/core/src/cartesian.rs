//! Cartesian products and prime factorization with respect to them.
//!
//! Product vertices are numbered row-major: `(u, v) ↦ u·|V(Y)| + v`.

use std::collections::HashMap;

use num_bigint::BigUint;

use crate::aut::automorphism_group;
use crate::error::{Error, Result};
use crate::graph::{are_graphs_isomorphic, graph6_encode, Graph};
use crate::perm::Permutation;
use crate::permgroup::PermGroup;

/// Bound on the vertex count of products built here.
pub const MAX_PRODUCT_VERTICES: usize = 4096;

/// Bound on the number of class subsets tried in one splitting step.
const MAX_SPLIT_CANDIDATES: u64 = 1 << 20;

pub fn cartesian_product(x: &Graph, y: &Graph) -> Result<Graph> {
    let (nx, ny) = (x.order(), y.order());
    let n = nx
        .checked_mul(ny)
        .filter(|&n| n <= MAX_PRODUCT_VERTICES)
        .ok_or_else(|| Error::resource("product vertex count", MAX_PRODUCT_VERTICES))?;
    let mut edges = Vec::with_capacity(x.edge_count() * ny + y.edge_count() * nx);
    for (u, w) in x.edges() {
        for v in 0..ny {
            edges.push((u * ny + v, w * ny + v));
        }
    }
    for (v, w) in y.edges() {
        for u in 0..nx {
            edges.push((u * ny + v, u * ny + w));
        }
    }
    Graph::from_edges(n, &edges)
}

/// The product of the graphs in order, `((g0 □ g1) □ g2) …`; `K1` for none.
pub fn cartesian_power_product(graphs: &[Graph]) -> Result<Graph> {
    graphs
        .iter()
        .try_fold(Graph::empty(1), |acc, g| cartesian_product(&acc, g))
}

/// `(u, v) ↦ (p(u), q(v))` on the row-major product of the two domains.
pub fn product_permutation(p: &Permutation, q: &Permutation) -> Permutation {
    let ny = q.degree();
    let images = (0..p.degree() * ny)
        .map(|x| p.apply(x / ny) * ny + q.apply(x % ny))
        .collect();
    Permutation::from_images(images).expect("product of bijections")
}

/// A graph written as a Cartesian product of prime factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorDecomposition {
    pub factors: Vec<Graph>,
    /// `coordinates[v][i]` is the vertex of factor `i` that `v` projects to.
    pub coordinates: Vec<Vec<usize>>,
}

impl FactorDecomposition {
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Row-major index in the product of the factors.
    fn product_index(&self, coords: &[usize]) -> usize {
        coords
            .iter()
            .zip(&self.factors)
            .fold(0, |acc, (&c, f)| acc * f.order() + c)
    }

    /// Vertex with the given coordinates.
    pub fn vertex_at(&self, coords: &[usize]) -> Option<usize> {
        self.coordinates.iter().position(|c| c == coords)
    }

    /// The product of the factors relabelled through the coordinates, which
    /// equals the factored graph exactly when the decomposition is correct.
    pub fn reassemble(&self) -> Result<Graph> {
        let product = cartesian_power_product(&self.factors)?;
        let n = self.coordinates.len();
        if product.order() != n {
            return Err(Error::Verification("coordinate count mismatch".into()));
        }
        let mut back = vec![usize::MAX; n];
        for (v, c) in self.coordinates.iter().enumerate() {
            let k = self.product_index(c);
            if k >= n || back[k] != usize::MAX {
                return Err(Error::Verification(
                    "coordinates are not a bijection".into(),
                ));
            }
            back[k] = v;
        }
        let edges: Vec<_> = product
            .edges()
            .iter()
            .map(|&(a, b)| (back[a], back[b]))
            .collect();
        Graph::from_edges(n, &edges)
    }

    /// Text report: `factors <k>`, one graph6 line per factor, then `coords`
    /// and one `v: (c1,...,ck)` line per vertex.
    pub fn report(&self) -> String {
        let mut out = format!("factors {}\n", self.factors.len());
        for f in &self.factors {
            out.push_str(&graph6_encode(f));
            out.push('\n');
        }
        out.push_str("coords\n");
        for (v, c) in self.coordinates.iter().enumerate() {
            let parts: Vec<String> = c.iter().map(usize::to_string).collect();
            out.push_str(&format!("{v}: ({})\n", parts.join(",")));
        }
        out
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        self.0[x] = r;
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Classes of the transitive closure of the square relation on edges:
/// opposite edges of a 4-cycle are related, and incident edges are related
/// unless they span exactly one chordless square. Returns the class of each
/// edge (numbered by first occurrence) and the edge list.
fn edge_classes(g: &Graph) -> (Vec<usize>, Vec<(usize, usize)>) {
    let edges = g.edges();
    let index: HashMap<(usize, usize), usize> =
        edges.iter().enumerate().map(|(k, &e)| (e, k)).collect();
    let id = |a: usize, b: usize| index[&(a.min(b), a.max(b))];
    let mut uf = UnionFind((0..edges.len()).collect());
    for u in 0..g.order() {
        let nb = g.neighbors(u);
        for (i, &v) in nb.iter().enumerate() {
            for &w in &nb[i + 1..] {
                let common: Vec<usize> = g
                    .neighbors(v)
                    .iter()
                    .copied()
                    .filter(|&x| x != u && g.has_edge(x, w))
                    .collect();
                for &x in &common {
                    uf.union(id(u, v), id(w, x));
                    uf.union(id(u, w), id(v, x));
                }
                let one_chordless_square =
                    !g.has_edge(v, w) && common.len() == 1 && !g.has_edge(u, common[0]);
                if !one_chordless_square {
                    uf.union(id(u, v), id(u, w));
                }
            }
        }
    }
    let mut number = HashMap::new();
    let classes = (0..edges.len())
        .map(|k| {
            let r = uf.find(k);
            let next = number.len();
            *number.entry(r).or_insert(next)
        })
        .collect();
    (classes, edges)
}

/// Components of the spanning subgraph with the selected edges.
fn layer_of(n: usize, edges: &[(usize, usize)], keep: &[bool]) -> Vec<usize> {
    let mut uf = UnionFind((0..n).collect());
    for (k, &(a, b)) in edges.iter().enumerate() {
        if keep[k] {
            uf.union(a, b);
        }
    }
    (0..n).map(|v| uf.find(v)).collect()
}

/// A split `G ≅ X □ Y` where `X`-edges are those selected by `in_x`.
struct Split {
    x_vertices: Vec<usize>,
    y_vertices: Vec<usize>,
    /// (index in x_vertices, index in y_vertices) for every vertex
    coords: Vec<(usize, usize)>,
    x: Graph,
    y: Graph,
}

fn try_split(g: &Graph, edges: &[(usize, usize)], in_x: &[bool]) -> Option<Split> {
    let n = g.order();
    let not_x: Vec<bool> = in_x.iter().map(|&b| !b).collect();
    let x_layer = layer_of(n, edges, in_x);
    let y_layer = layer_of(n, edges, &not_x);
    let x_vertices: Vec<usize> = (0..n).filter(|&v| x_layer[v] == x_layer[0]).collect();
    let y_vertices: Vec<usize> = (0..n).filter(|&v| y_layer[v] == y_layer[0]).collect();
    if x_vertices.len() < 2 || y_vertices.len() < 2 || x_vertices.len() * y_vertices.len() != n {
        return None;
    }
    // a(w): the vertex of X0 sharing w's Y-layer; b(w): of Y0 sharing w's X-layer
    let mut x_of_ylayer = HashMap::new();
    for (i, &v) in x_vertices.iter().enumerate() {
        if x_of_ylayer.insert(y_layer[v], i).is_some() {
            return None;
        }
    }
    let mut y_of_xlayer = HashMap::new();
    for (j, &v) in y_vertices.iter().enumerate() {
        if y_of_xlayer.insert(x_layer[v], j).is_some() {
            return None;
        }
    }
    let mut seen = vec![false; n];
    let mut coords = Vec::with_capacity(n);
    for w in 0..n {
        let i = *x_of_ylayer.get(&y_layer[w])?;
        let j = *y_of_xlayer.get(&x_layer[w])?;
        let k = i * y_vertices.len() + j;
        if seen[k] {
            return None;
        }
        seen[k] = true;
        coords.push((i, j));
    }
    let x = g.induced_subgraph(&x_vertices);
    let y = g.induced_subgraph(&y_vertices);
    if g.edge_count() != x.edge_count() * y.order() + y.edge_count() * x.order() {
        return None;
    }
    let consistent = edges.iter().all(|&(a, b)| {
        let ((ia, ja), (ib, jb)) = (coords[a], coords[b]);
        (ia == ib && y.has_edge(ja, jb)) || (ja == jb && x.has_edge(ia, ib))
    });
    consistent.then_some(Split {
        x_vertices,
        y_vertices,
        coords,
        x,
        y,
    })
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1u64, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// Next k-subset of `0..n` in lexicographic order.
fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    for i in (0..k).rev() {
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Splits off one prime factor, or returns `None` if `g` is prime.
fn split_prime_factor(g: &Graph) -> Result<Option<Split>> {
    let (classes, edges) = edge_classes(g);
    let k = classes.iter().copied().max().map_or(0, |m| m + 1);
    let mut budget = MAX_SPLIT_CANDIDATES;
    for size in 1..=k / 2 {
        let count = binomial(k as u64, size as u64);
        if count > budget {
            return Err(Error::Inconclusive(format!(
                "{k} edge classes exceed the factorization search budget"
            )));
        }
        budget -= count;
        let mut chosen: Vec<usize> = (0..size).collect();
        loop {
            let mut selected = vec![false; k];
            for &c in &chosen {
                selected[c] = true;
            }
            let in_x: Vec<bool> = classes.iter().map(|&c| selected[c]).collect();
            if let Some(split) = try_split(g, &edges, &in_x) {
                return Ok(Some(split));
            }
            if !next_combination(&mut chosen, k) {
                break;
            }
        }
    }
    Ok(None)
}

/// Prime factorization of a connected graph. `K1` has no factors.
pub fn prime_factorization(g: &Graph) -> Result<FactorDecomposition> {
    if g.order() == 0 || !g.is_connected() {
        return Err(Error::Precondition(
            "factorization needs a connected non-empty graph".into(),
        ));
    }
    let decomposition = factor_rec(g)?;
    if decomposition.reassemble()? != *g {
        return Err(Error::Verification(
            "reassembled product differs from the input".into(),
        ));
    }
    Ok(decomposition)
}

fn factor_rec(g: &Graph) -> Result<FactorDecomposition> {
    if g.order() == 1 {
        return Ok(FactorDecomposition {
            factors: Vec::new(),
            coordinates: vec![Vec::new()],
        });
    }
    match split_prime_factor(g)? {
        None => Ok(FactorDecomposition {
            factors: vec![g.clone()],
            coordinates: (0..g.order()).map(|v| vec![v]).collect(),
        }),
        Some(split) => {
            let rest = factor_rec(&split.y)?;
            let mut factors = vec![split.x];
            factors.extend(rest.factors);
            let coordinates = split
                .coords
                .iter()
                .map(|&(i, j)| {
                    let mut c = vec![i];
                    c.extend_from_slice(&rest.coordinates[j]);
                    c
                })
                .collect();
            debug_assert_eq!(split.x_vertices.len() * split.y_vertices.len(), g.order());
            Ok(FactorDecomposition {
                factors,
                coordinates,
            })
        }
    }
}

/// Whether a connected graph with at least two vertices is prime.
pub fn is_prime(g: &Graph) -> Result<bool> {
    Ok(g.order() >= 2 && prime_factorization(g)?.len() == 1)
}

/// Whether no prime factor of `x` is isomorphic to a prime factor of `y`.
pub fn relatively_prime(x: &Graph, y: &Graph) -> Result<bool> {
    let fx = prime_factorization(x)?;
    let fy = prime_factorization(y)?;
    for a in &fx.factors {
        for b in &fy.factors {
            if are_graphs_isomorphic(a, b)?.is_some() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `Aut(Γ1) × … × Aut(Γk)` acting coordinatewise; needs pairwise
/// non-isomorphic prime factors.
pub fn aut_of_product(decomp: &FactorDecomposition) -> Result<PermGroup> {
    let k = decomp.len();
    for i in 0..k {
        for j in i + 1..k {
            if are_graphs_isomorphic(&decomp.factors[i], &decomp.factors[j])?.is_some() {
                return Err(Error::Precondition(format!(
                    "factors {i} and {j} are isomorphic, so the product formula does not apply"
                )));
            }
        }
    }
    let n = decomp.coordinates.len();
    let lookup: HashMap<&[usize], usize> = decomp
        .coordinates
        .iter()
        .enumerate()
        .map(|(v, c)| (c.as_slice(), v))
        .collect();
    let mut generators = Vec::new();
    let mut expected = BigUint::from(1u32);
    for (i, factor) in decomp.factors.iter().enumerate() {
        let aut = automorphism_group(factor)?;
        expected *= aut.order();
        for p in aut.generators() {
            let images = (0..n)
                .map(|v| {
                    let mut c = decomp.coordinates[v].clone();
                    c[i] = p.apply(c[i]);
                    lookup[c.as_slice()]
                })
                .collect();
            generators.push(Permutation::from_images(images)?);
        }
    }
    let group = PermGroup::new(n, generators)?;
    debug_assert_eq!(group.order(), expected);
    Ok(group)
}

/// The fibres `V_{x_i}` through `base`: vertices agreeing with `base` in
/// every coordinate except `i`.
pub fn fiber_blocks(decomp: &FactorDecomposition, base: usize) -> Vec<Vec<usize>> {
    let b = &decomp.coordinates[base];
    (0..decomp.len())
        .map(|i| {
            (0..decomp.coordinates.len())
                .filter(|&v| {
                    let c = &decomp.coordinates[v];
                    (0..c.len()).all(|j| j == i || c[j] == b[j])
                })
                .collect()
        })
        .collect()
}
