use std::fmt::Write as _;

use num_bigint::BigUint;

use crate::aut::{action_report, automorphism_group, is_normal_in};
use crate::error::{Error, Result};
use crate::graph::{graph6_decode, graph6_encode, Graph};
use crate::perm::Permutation;
use crate::permgroup::PermGroup;

/// The claims made about a witness graph and its semiregular group.
///
/// Text form is one `key: value` line per field in a fixed order, with
/// `br-generator` repeated once per generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub group: String,
    pub group_order: usize,
    pub graph_order: usize,
    pub graph6: String,
    pub br_generators: Vec<Permutation>,
    pub br_semiregular: bool,
    pub br_orbits: usize,
    pub aut_order: BigUint,
    pub br_normal: bool,
    pub vertex_transitive: bool,
    pub connected: bool,
    pub construction: String,
}

const KEYS: [&str; 12] = [
    "group",
    "group-order",
    "graph-order",
    "graph6",
    "br-generator",
    "br-semiregular",
    "br-orbits",
    "aut-order",
    "br-normal",
    "vertex-transitive",
    "connected",
    "construction",
];

impl Certificate {
    /// Computes every field from the graph and group.
    pub fn compute(group: &str, graph: &Graph, br: &PermGroup, construction: &str) -> Result<Self> {
        if br.degree() != graph.order() {
            return Err(Error::Precondition(format!(
                "group of degree {} on a graph with {} vertices",
                br.degree(),
                graph.order()
            )));
        }
        let aut = automorphism_group(graph)?;
        let report = action_report(br);
        let group_order = br
            .order()
            .try_into()
            .map_err(|_| Error::resource("group order", usize::MAX))?;
        Ok(Certificate {
            group: group.to_string(),
            group_order,
            graph_order: graph.order(),
            graph6: graph6_encode(graph),
            br_generators: br.generators().to_vec(),
            br_semiregular: report.semiregular,
            br_orbits: report.orbit_count(),
            aut_order: aut.order(),
            br_normal: is_normal_in(&aut, graph, br)?,
            vertex_transitive: aut.orbits().len() <= 1,
            connected: graph.is_connected(),
            construction: construction.to_string(),
        })
    }

    /// Semiregular with two orbits, normal, connected and vertex-transitive.
    pub fn is_valid(&self) -> bool {
        self.br_semiregular
            && self.br_orbits == 2
            && self.br_normal
            && self.connected
            && self.vertex_transitive
    }

    pub fn graph(&self) -> Result<Graph> {
        graph6_decode(&self.graph6)
    }

    pub fn br_group(&self) -> Result<PermGroup> {
        PermGroup::new(self.graph_order, self.br_generators.clone())
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "group: {}", self.group);
        let _ = writeln!(out, "group-order: {}", self.group_order);
        let _ = writeln!(out, "graph-order: {}", self.graph_order);
        let _ = writeln!(out, "graph6: {}", self.graph6);
        for p in &self.br_generators {
            let _ = writeln!(out, "br-generator: {p}");
        }
        let _ = writeln!(out, "br-semiregular: {}", self.br_semiregular);
        let _ = writeln!(out, "br-orbits: {}", self.br_orbits);
        let _ = writeln!(out, "aut-order: {}", self.aut_order);
        let _ = writeln!(out, "br-normal: {}", self.br_normal);
        let _ = writeln!(out, "vertex-transitive: {}", self.vertex_transitive);
        let _ = writeln!(out, "connected: {}", self.connected);
        let _ = writeln!(out, "construction: {}", self.construction);
        out
    }

    /// Parses [`Certificate::to_text`] output. Keys must appear in order;
    /// blank lines are ignored.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut fields: Vec<(usize, &str, &str)> = Vec::new();
        let mut offset = 0;
        for line in text.split('\n') {
            let here = offset;
            offset += line.len() + 1;
            let line = line.trim_end_matches('\r');
            if line.trim().is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once(':')
                .ok_or_else(|| Error::parse(here, "expected `key: value`"))?;
            fields.push((here, key.trim(), value.trim()));
        }
        let end = text.len();
        let mut it = fields.into_iter().peekable();
        let group = expect_key(&mut it, KEYS[0], end)?.1.to_string();
        let group_order = num(expect_key(&mut it, KEYS[1], end)?)?;
        let graph_order = num(expect_key(&mut it, KEYS[2], end)?)?;
        let graph6 = expect_key(&mut it, KEYS[3], end)?.1.to_string();
        let mut br_generators = Vec::new();
        while let Some(&(off, k, v)) = it.peek() {
            if k != KEYS[4] {
                break;
            }
            let p: Permutation = v
                .parse()
                .map_err(|e: Error| Error::parse(off, format!("bad generator: {e}")))?;
            br_generators.push(p);
            it.next();
        }
        let mut next = |key: &str| expect_key(&mut it, key, end);
        let cert = Certificate {
            group,
            group_order,
            graph_order,
            graph6,
            br_generators,
            br_semiregular: flag(next(KEYS[5])?)?,
            br_orbits: num(next(KEYS[6])?)?,
            aut_order: num(next(KEYS[7])?)?,
            br_normal: flag(next(KEYS[8])?)?,
            vertex_transitive: flag(next(KEYS[9])?)?,
            connected: flag(next(KEYS[10])?)?,
            construction: next(KEYS[11])?.1.to_string(),
        };
        if let Some((off, k, _)) = it.next() {
            return Err(Error::parse(off, format!("unexpected key `{k}`")));
        }
        Ok(cert)
    }
}

type Fields<'a> = std::iter::Peekable<std::vec::IntoIter<(usize, &'a str, &'a str)>>;

fn expect_key<'a>(it: &mut Fields<'a>, key: &str, end: usize) -> Result<(usize, &'a str)> {
    match it.next() {
        Some((off, k, v)) if k == key => Ok((off, v)),
        Some((off, k, _)) => Err(Error::parse(off, format!("expected `{key}`, found `{k}`"))),
        None => Err(Error::parse(end, format!("missing `{key}`"))),
    }
}

fn num<T: std::str::FromStr>((off, v): (usize, &str)) -> Result<T> {
    v.parse()
        .map_err(|_| Error::parse(off, format!("bad number `{v}`")))
}

fn flag((off, v): (usize, &str)) -> Result<bool> {
    match v {
        "true" => Ok(true),
        "false" => Ok(false),
        _ => Err(Error::parse(
            off,
            format!("expected true or false, found `{v}`"),
        )),
    }
}

/// One compared field of a certificate check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckItem {
    pub field: &'static str,
    pub claimed: String,
    pub actual: String,
}

impl CheckItem {
    pub fn passed(&self) -> bool {
        self.claimed == self.actual
    }
}

/// Field-by-field result of [`verify_certificate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub items: Vec<CheckItem>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.items.iter().all(CheckItem::passed)
    }

    pub fn failures(&self) -> Vec<&CheckItem> {
        self.items.iter().filter(|i| !i.passed()).collect()
    }

    /// One `PASS <field>` or `FAIL <field>: claimed .., actual ..` line per item.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for i in &self.items {
            if i.passed() {
                let _ = writeln!(out, "PASS {}", i.field);
            } else {
                let _ = writeln!(
                    out,
                    "FAIL {}: claimed {}, actual {}",
                    i.field, i.claimed, i.actual
                );
            }
        }
        let _ = writeln!(out, "{}", if self.passed() { "PASS" } else { "FAIL" });
        out
    }
}

/// Recomputes every claimed field from `graph` and `br`. The final `valid`
/// item requires the recomputed certificate to be valid, so a consistent
/// certificate for a non-witness still fails.
pub fn verify_certificate(
    graph: &Graph,
    br: &PermGroup,
    claimed: &Certificate,
) -> Result<VerificationReport> {
    let mut items = Vec::new();
    let mut push = |field, claimed: String, actual: String| {
        items.push(CheckItem {
            field,
            claimed,
            actual,
        })
    };
    push(
        "graph-order",
        claimed.graph_order.to_string(),
        graph.order().to_string(),
    );
    push("graph6", claimed.graph6.clone(), graph6_encode(graph));
    let gens_ok =
        br.degree() == graph.order() && br.generators().iter().all(|p| graph.is_automorphism(p));
    push("br-automorphisms", "true".into(), gens_ok.to_string());
    if !gens_ok {
        return Ok(VerificationReport { items });
    }
    let actual = Certificate::compute(&claimed.group, graph, br, &claimed.construction)?;
    push(
        "group-order",
        claimed.group_order.to_string(),
        actual.group_order.to_string(),
    );
    push(
        "br-semiregular",
        claimed.br_semiregular.to_string(),
        actual.br_semiregular.to_string(),
    );
    push(
        "br-orbits",
        claimed.br_orbits.to_string(),
        actual.br_orbits.to_string(),
    );
    push(
        "aut-order",
        claimed.aut_order.to_string(),
        actual.aut_order.to_string(),
    );
    push(
        "br-normal",
        claimed.br_normal.to_string(),
        actual.br_normal.to_string(),
    );
    push(
        "vertex-transitive",
        claimed.vertex_transitive.to_string(),
        actual.vertex_transitive.to_string(),
    );
    push(
        "connected",
        claimed.connected.to_string(),
        actual.connected.to_string(),
    );
    push("valid", "true".into(), actual.is_valid().to_string());
    Ok(VerificationReport { items })
}

/// Checks a certificate against the graph and generators it carries.
pub fn verify_certificate_text(text: &str) -> Result<VerificationReport> {
    let cert = Certificate::from_text(text)?;
    let graph = cert.graph()?;
    let br = PermGroup::new(graph.order(), cert.br_generators.clone())?;
    verify_certificate(&graph, &br, &cert)
}
