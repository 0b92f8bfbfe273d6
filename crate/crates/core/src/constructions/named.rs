use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::perm::Permutation;
use crate::permgroup::PermGroup;

/// Largest hypercube dimension built here (4096 vertices).
pub const MAX_HYPERCUBE_DIMENSION: usize = 12;

/// `Q_n` on bit vectors, with its translation group `N` and the subgroup
/// `E` of even-weight translations.
#[derive(Clone, Debug)]
pub struct Hypercube {
    pub graph: Graph,
    pub translations: PermGroup,
    pub even: PermGroup,
}

fn translation(n: usize, mask: usize) -> Permutation {
    Permutation::from_images((0..1 << n).map(|x| x ^ mask).collect()).expect("translation")
}

/// `Q_n` with vertex `x ∈ 0..2ⁿ` adjacent to `x ^ 2ⁱ`.
pub fn hypercube(n: usize) -> Result<Hypercube> {
    if n == 0 {
        return Err(Error::Precondition(
            "hypercube dimension must be positive".into(),
        ));
    }
    if n > MAX_HYPERCUBE_DIMENSION {
        return Err(Error::resource(
            "hypercube dimension",
            MAX_HYPERCUBE_DIMENSION,
        ));
    }
    let edges: Vec<_> = (0..1usize << n)
        .flat_map(|x| (0..n).map(move |i| (x, x ^ (1 << i))))
        .filter(|&(x, y)| x < y)
        .collect();
    let graph = Graph::from_edges(1 << n, &edges)?;
    let translations = PermGroup::new(1 << n, (0..n).map(|i| translation(n, 1 << i)).collect())?;
    let even = PermGroup::new(1 << n, (1..n).map(|i| translation(n, 1 | 1 << i)).collect())?;
    Ok(Hypercube {
        graph,
        translations,
        even,
    })
}

/// The Möbius–Kantor graph GP(8,3): outer vertex `i` has index `i`, inner
/// vertex `i'` has index `8 + i`.
#[derive(Clone, Debug)]
pub struct MoebiusKantor {
    pub graph: Graph,
    pub alpha: Permutation,
    pub beta: Permutation,
    pub gamma: Permutation,
    pub delta: Permutation,
    /// `⟨α, β⁻¹αβ⟩`, a quaternion group acting with two orbits.
    pub q8: PermGroup,
}

pub const ALPHA: &str = "(1 3 5 7)(0 2 4 6)(1' 3' 5' 7')(0' 2' 4' 6')";
pub const BETA: &str = "(0 1' 2)(0' 6' 3)(4 5' 6)(7 4' 2')";
pub const GAMMA: &str = "(1 1')(2 6')(3 3')(4 0')(5 5')(6 2')(7 7')(0 4')";
pub const DELTA: &str = "(1 1')(2 4')(3 7')(4 2')(5 5')(6 0')(7 3')(0 6')";

/// Parses cycle notation over outer (`i`) and inner (`i'`) vertices.
pub fn parse_gp_cycles(text: &str) -> Result<Permutation> {
    let mut cycles = Vec::new();
    let mut offset = 0;
    for chunk in text.split_inclusive(')') {
        let body = chunk.trim();
        if body.is_empty() {
            offset += chunk.len();
            continue;
        }
        let inner = body
            .strip_prefix('(')
            .and_then(|b| b.strip_suffix(')'))
            .ok_or_else(|| Error::parse(offset, "expected a parenthesized cycle"))?;
        let cycle = inner
            .split_whitespace()
            .map(|tok| {
                let (digits, shift) = match tok.strip_suffix('\'') {
                    Some(d) => (d, 8),
                    None => (tok, 0),
                };
                match digits.parse::<usize>() {
                    Ok(i) if i < 8 => Ok(i + shift),
                    _ => Err(Error::parse(offset, format!("bad vertex `{tok}`"))),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        cycles.push(cycle);
        offset += chunk.len();
    }
    Permutation::from_cycles(16, &cycles)
}

pub fn moebius_kantor() -> MoebiusKantor {
    let mut edges = Vec::new();
    for i in 0..8 {
        edges.push((i, (i + 1) % 8));
        edges.push((8 + i, 8 + (i + 3) % 8));
        edges.push((i, 8 + i));
    }
    let graph = Graph::from_edges(16, &edges).expect("GP(8,3)");
    let [alpha, beta, gamma, delta] =
        [ALPHA, BETA, GAMMA, DELTA].map(|s| parse_gp_cycles(s).expect("stored cycles"));
    for p in [&alpha, &beta, &gamma, &delta] {
        assert!(
            graph.is_automorphism(p),
            "stored permutation is not an automorphism"
        );
    }
    let q8 = PermGroup::new(16, vec![alpha.clone(), alpha.conjugate_by(&beta)]).expect("degree 16");
    MoebiusKantor {
        graph,
        alpha,
        beta,
        gamma,
        delta,
        q8,
    }
}
