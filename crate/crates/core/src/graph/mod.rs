//! Finite simple undirected graphs.

mod bicayley;
mod format;

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::perm::Permutation;

pub use crate::aut::are_graphs_isomorphic;
pub use bicayley::{cayley_graph, BiCayleyTriple};
pub use format::{edge_list_decode, edge_list_encode, graph6_decode, graph6_encode};

/// A simple undirected graph on `0..n` with sorted adjacency lists and an
/// adjacency bit matrix.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    words: usize,
    matrix: Vec<u64>,
    labels: Option<Vec<String>>,
}

impl Graph {
    pub fn empty(n: usize) -> Graph {
        let words = n.div_ceil(64).max(1);
        Graph {
            n,
            adj: vec![Vec::new(); n],
            words,
            matrix: vec![0; n * words],
            labels: None,
        }
    }

    /// Builds a graph from an edge list; duplicates are merged, loops and
    /// out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Validation(format!(
                    "edge ({u}, {v}) has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::Validation(format!("loop at vertex {u}")));
            }
            g.insert(u, v);
        }
        for list in &mut g.adj {
            list.sort_unstable();
        }
        Ok(g)
    }

    fn insert(&mut self, u: usize, v: usize) {
        if !self.has_edge(u, v) {
            self.matrix[u * self.words + v / 64] |= 1 << (v % 64);
            self.matrix[v * self.words + u / 64] |= 1 << (u % 64);
            self.adj[u].push(v);
            self.adj[v].push(u);
        }
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).expect("cycle")
    }

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).expect("path")
    }

    pub fn complete(n: usize) -> Graph {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Graph::from_edges(n, &edges).expect("complete graph")
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Graph {
        assert_eq!(labels.len(), self.n);
        self.labels = Some(labels);
        self
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.matrix[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| {
                self.adj[u]
                    .iter()
                    .filter(move |&&v| u < v)
                    .map(move |&v| (u, v))
            })
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        d.sort_unstable();
        d
    }

    /// The common degree, if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.adj.first().map_or(0, Vec::len);
        self.adj.iter().all(|l| l.len() == d).then_some(d)
    }

    /// The image of the graph under the vertex map `v ↦ p(v)`.
    pub fn relabel(&self, p: &Permutation) -> Graph {
        assert_eq!(p.degree(), self.n);
        let edges: Vec<_> = self
            .edges()
            .iter()
            .map(|&(u, v)| (p.apply(u), p.apply(v)))
            .collect();
        Graph::from_edges(self.n, &edges).expect("relabelled")
    }

    pub fn is_automorphism(&self, p: &Permutation) -> bool {
        p.degree() == self.n
            && (0..self.n).all(|u| {
                let pu = p.apply(u);
                self.adj[u].len() == self.adj[pu].len()
                    && self.adj[u].iter().all(|&v| self.has_edge(pu, p.apply(v)))
            })
    }

    /// Subgraph induced on `vertices`, renumbered in the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (k, &v) in vertices.iter().enumerate() {
            index[v] = k;
        }
        let mut edges = Vec::new();
        for (k, &u) in vertices.iter().enumerate() {
            for &v in &self.adj[u] {
                if index[v] != usize::MAX && k < index[v] {
                    edges.push((k, index[v]));
                }
            }
        }
        Graph::from_edges(vertices.len(), &edges).expect("induced")
    }

    /// Breadth-first distances from `source`; `None` when unreachable.
    pub fn distances(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].expect("queued") + 1;
            for &v in &self.adj[u] {
                if dist[v].is_none() {
                    dist[v] = Some(d);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut head = 0;
            while head < comp.len() {
                let u = comp[head];
                head += 1;
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Two-colouring classes `(B1, B2)` with vertex 0 in `B1` (per component,
    /// the smallest vertex goes to `B1`); `None` if there is an odd cycle.
    pub fn bipartition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let mut side: Vec<Option<bool>> = vec![None; self.n];
        for s in 0..self.n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let su = side[u].expect("queued");
                for &v in &self.adj[u] {
                    match side[v] {
                        None => {
                            side[v] = Some(!su);
                            queue.push_back(v);
                        }
                        Some(sv) if sv == su => return None,
                        _ => {}
                    }
                }
            }
        }
        let b1 = (0..self.n).filter(|&v| side[v] == Some(false)).collect();
        let b2 = (0..self.n).filter(|&v| side[v] == Some(true)).collect();
        Some((b1, b2))
    }

    /// Length of a shortest cycle; `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for s in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            let mut parent = vec![usize::MAX; self.n];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                if best.is_some_and(|b| 2 * dist[u] + 1 >= b) {
                    break;
                }
                for &v in &self.adj[u] {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    } else if parent[u] != v {
                        let len = dist[u] + dist[v] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }
}

impl PartialEq for Graph {
    /// Labels are ignored.
    fn eq(&self, other: &Graph) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({})", graph6_encode(self))
    }
}

/// `R(G)` as a permutation group on the element indices, which are also the
/// vertices of any Cayley graph of `G`.
pub fn right_regular_group(g: &GroupTable) -> crate::permgroup::PermGroup {
    let gens = g
        .small_generating_set()
        .iter()
        .map(|&x| g.right_regular(x))
        .collect();
    crate::permgroup::PermGroup::new(g.order(), gens).expect("same degree")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_queries() {
        let c4 = Graph::cycle(4);
        assert_eq!(c4.edge_count(), 4);
        assert_eq!(c4.regular_degree(), Some(2));
        assert!(c4.has_edge(3, 0));
        assert_eq!(c4.girth(), Some(4));
        assert_eq!(c4.bipartition(), Some((vec![0, 2], vec![1, 3])));
        assert_eq!(Graph::complete(2).girth(), None);
        assert_eq!(Graph::cycle(5).bipartition(), None);
        assert_eq!(Graph::cycle(5).girth(), Some(5));
        assert_eq!(Graph::complete(4).girth(), Some(3));
    }

    #[test]
    fn connectivity() {
        let two_edges = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!two_edges.is_connected());
        assert_eq!(two_edges.components(), vec![vec![0, 1], vec![2, 3]]);
        assert!(Graph::path(3).is_connected());
        assert!(Graph::empty(0).is_connected());
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(Graph::from_edges(2, &[(0, 0)]).is_err());
        assert!(Graph::from_edges(2, &[(0, 2)]).is_err());
        let g = Graph::from_edges(3, &[(0, 1), (1, 0), (1, 2)]).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn relabel_and_automorphisms() {
        let c5 = Graph::cycle(5);
        let rot: Permutation = "1 2 3 4 0".parse().unwrap();
        assert!(c5.is_automorphism(&rot));
        let swap: Permutation = "1 0 2 3 4".parse().unwrap();
        assert!(!c5.is_automorphism(&swap));
        assert_eq!(c5.relabel(&rot), c5);
        let p3 = Graph::path(3);
        let sub = Graph::cycle(6).induced_subgraph(&[0, 1, 2]);
        assert_eq!(sub, p3);
    }
}
