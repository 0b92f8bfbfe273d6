//! Brute-force oracles shared by the integration tests. None of these use
//! the refinement engine or the square-property factorizer.
#![allow(dead_code)]

use bicay_core::aut::are_graphs_isomorphic;
use bicay_core::cartesian::cartesian_product;
use bicay_core::Graph;
use rand::Rng;

/// Counts automorphisms by testing all `n!` permutations (Heap's algorithm).
pub fn count_automorphisms_by_permutations(g: &Graph) -> u64 {
    let n = g.order();
    let edges = g.edges();
    let preserves = |p: &[usize]| edges.iter().all(|&(u, v)| g.has_edge(p[u], p[v]));
    let mut p: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    let mut count = u64::from(preserves(&p));
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                p.swap(0, i);
            } else {
                p.swap(c[i], i);
            }
            count += u64::from(preserves(&p));
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    count
}

/// Every automorphism as an image list, by plain backtracking that checks
/// adjacency against all previously mapped vertices.
pub fn enumerate_automorphisms(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut order: Vec<usize> = Vec::new();
    let mut placed = vec![false; n];
    for start in 0..n {
        if placed[start] {
            continue;
        }
        let mut queue = std::collections::VecDeque::from([start]);
        placed[start] = true;
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &w in g.neighbors(v) {
                if !placed[w] {
                    placed[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let mut out = Vec::new();
    fn go(
        g: &Graph,
        order: &[usize],
        k: usize,
        image: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if k == order.len() {
            out.push(image.clone());
            return;
        }
        let v = order[k];
        for w in 0..g.order() {
            if used[w] || g.degree(w) != g.degree(v) {
                continue;
            }
            let ok = order[..k]
                .iter()
                .all(|&u| g.has_edge(u, v) == g.has_edge(image[u], w));
            if ok {
                image[v] = w;
                used[w] = true;
                go(g, order, k + 1, image, used, out);
                used[w] = false;
                image[v] = usize::MAX;
            }
        }
    }
    go(g, &order, 0, &mut image, &mut used, &mut out);
    out
}

fn induced(g: &Graph, mask: u32) -> Graph {
    let vertices: Vec<usize> = (0..g.order()).filter(|&v| mask >> v & 1 == 1).collect();
    g.induced_subgraph(&vertices)
}

fn induced_edge_count(g: &Graph, mask: u32) -> usize {
    g.edges()
        .iter()
        .filter(|&&(u, v)| mask >> u & 1 == 1 && mask >> v & 1 == 1)
        .count()
}

/// Prime factors of a connected graph on at most 16 vertices, found by
/// trying every pair of layers `A, B` through vertex 0 and testing
/// `G ≅ G[A] □ G[B]` by isomorphism.
pub fn brute_force_factors(g: &Graph) -> Vec<Graph> {
    let n = g.order();
    assert!(n <= 16 && g.is_connected());
    if n == 1 {
        return Vec::new();
    }
    let m = g.edge_count();
    let nbrs: u32 = g.neighbors(0).iter().map(|&v| 1u32 << v).sum();
    let rest = ((1u32 << n) - 1) & !1;
    let mut a_sub = rest;
    loop {
        let a_mask = a_sub | 1;
        let a = a_mask.count_ones() as usize;
        if a >= 2 && a < n && n.is_multiple_of(a) && induced(g, a_mask).is_connected() {
            let b = n / a;
            let ma = induced_edge_count(g, a_mask);
            let free = rest & !a_mask;
            let mut b_sub = free;
            loop {
                let b_mask = b_sub | 1;
                if b_mask.count_ones() as usize == b && nbrs & !(a_mask | b_mask) == 0 {
                    let mb = induced_edge_count(g, b_mask);
                    if a * mb + b * ma == m {
                        let ga = induced(g, a_mask);
                        let gb = induced(g, b_mask);
                        if gb.is_connected() {
                            let product = cartesian_product(&ga, &gb).unwrap();
                            if are_graphs_isomorphic(&product, g).unwrap().is_some() {
                                let mut out = brute_force_factors(&ga);
                                out.extend(brute_force_factors(&gb));
                                return out;
                            }
                        }
                    }
                }
                if b_sub == 0 {
                    break;
                }
                b_sub = (b_sub - 1) & free;
            }
        }
        if a_sub == 0 {
            break;
        }
        a_sub = (a_sub - 1) & rest;
    }
    vec![g.clone()]
}

/// Whether two lists of graphs agree up to isomorphism and reordering.
pub fn same_graph_multiset(a: &[Graph], b: &[Graph]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut used = vec![false; b.len()];
    a.iter().all(|x| {
        let hit =
            (0..b.len()).find(|&j| !used[j] && are_graphs_isomorphic(x, &b[j]).unwrap().is_some());
        match hit {
            Some(j) => {
                used[j] = true;
                true
            }
            None => false,
        }
    })
}

/// A connected graph: a random spanning tree plus independent extra edges.
pub fn random_connected_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// A uniformly shuffled copy of a graph.
pub fn shuffled<R: Rng>(rng: &mut R, g: &Graph) -> Graph {
    use rand::seq::SliceRandom;
    let mut images: Vec<usize> = (0..g.order()).collect();
    images.shuffle(rng);
    g.relabel(&bicay_core::Permutation::from_images(images).unwrap())
}
