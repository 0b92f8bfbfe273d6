use crate::error::{Error, Result};
use crate::group::catalog::{class_e_members, CatalogEntry};

/// What the Cayley graph on the connection set is combined with.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassEPartner {
    /// `Cay(G, S)` is `Q_k`; the witness is `Q_{k+1}` over its even translations.
    Hypercube,
    /// The witness is `Cay(G, S) □ K2`.
    K2,
    /// The witness is `GP(8,3) □ C_n`, with `Cay(G, S)` the cycle on the `C_n` factor.
    MoebiusKantorCycle(usize),
}

#[derive(Clone, Debug)]
pub struct ClassEConstruction {
    pub entry: CatalogEntry,
    pub item: u8,
    /// Sorted element indices in `entry.table`.
    pub connection_set: Vec<usize>,
    pub partner: ClassEPartner,
}

/// The connection set prescribed for an exceptional group, by catalog name.
///
/// The set is inverse-closed and generates the group, except for item 8,
/// where it generates the cyclic factor only.
pub fn class_e_connection_set(member: &str) -> Result<ClassEConstruction> {
    let entry = class_e_members()
        .into_iter()
        .find(|e| e.name == member)
        .ok_or_else(|| Error::Validation(format!("`{member}` is not an exceptional group")))?;
    let m = entry.class_e.clone().expect("class E member");
    let g = &entry.table;
    let x = |c: char| m.generator(c);
    let inv = |e: usize| g.inv(e);
    let mul = |a: usize, b: usize| g.mul(a, b);
    let (mut s, partner) = match m.item {
        1 => (
            m.generators.iter().map(|&(_, e)| e).collect(),
            ClassEPartner::Hypercube,
        ),
        2 => (vec![mul(x('a'), x('b')), x('b')], ClassEPartner::K2),
        3 | 7 => {
            let (a, b) = (x('a'), x('b'));
            (vec![a, inv(a), b, inv(b)], ClassEPartner::K2)
        }
        4 => (vec![x('a'), x('b'), x('c')], ClassEPartner::K2),
        5 => {
            let (a, b) = (x('a'), x('b'));
            let a4 = g.pow(a, 4);
            (vec![a, inv(a), b, a4, mul(a4, b)], ClassEPartner::K2)
        }
        6 => {
            let c = x('c');
            (vec![c, mul(c, x('a')), mul(c, x('b'))], ClassEPartner::K2)
        }
        8 => {
            let c = x('c');
            let n = g.element_order(c);
            (vec![c, inv(c)], ClassEPartner::MoebiusKantorCycle(n))
        }
        other => unreachable!("class E item {other}"),
    };
    s.sort_unstable();
    s.dedup();
    if s.contains(&g.identity()) || s.iter().any(|&e| !s.contains(&g.inv(e))) {
        return Err(Error::Verification(format!(
            "{member}: connection set is not inverse-closed and identity-free"
        )));
    }
    if m.item != 8 && !g.generates(&s) {
        return Err(Error::Verification(format!(
            "{member}: connection set does not generate"
        )));
    }
    Ok(ClassEConstruction {
        item: m.item,
        entry,
        connection_set: s,
        partner,
    })
}
