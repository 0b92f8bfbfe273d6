//! Named small groups.
//!
//! [`catalog_small_groups`] lists one representative of every isomorphism
//! class of order at most 16 (42 groups), followed by the exceptional groups
//! of larger order (`E6`, `Q8xC3`, `E7`, `Q8xC4`) when the bound admits them.
//! [`lookup`] additionally resolves the families `C<n>`, `D<2n>`, `Dic<4m>`,
//! `C2^<k>`, `Q8xC2^<r>` and direct products written `AxB`.

use std::collections::HashMap;
use std::sync::OnceLock;

use super::relations::check_relations;
use super::{embedding_index, GroupTable, DEFAULT_MAX_GROUP_ORDER};
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Orders up to which the catalog is complete.
pub const COMPLETE_UP_TO: usize = 16;

/// Number of isomorphism classes of each order `1..=16`.
pub const GROUP_COUNTS: [usize; 16] = [1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14];

/// One of the thirteen groups without a GRR outside the abelian and
/// generalized dicyclic families.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassEMember {
    /// Item number `1..=8` of the exceptional list.
    pub item: u8,
    /// Defining relations checked against the realization.
    pub relations: String,
    /// Element index of each named generator.
    pub generators: Vec<(char, usize)>,
}

impl ClassEMember {
    pub fn generator(&self, name: char) -> usize {
        self.generators
            .iter()
            .find(|(c, _)| *c == name)
            .map(|&(_, x)| x)
            .unwrap_or_else(|| panic!("no generator named `{name}`"))
    }

    pub fn names(&self) -> HashMap<char, usize> {
        self.generators.iter().copied().collect()
    }
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub table: GroupTable,
    /// A faithful permutation realization: generating the group from these
    /// reproduces `table.order()` elements.
    pub generators: Vec<Permutation>,
    pub class_e: Option<ClassEMember>,
}

impl CatalogEntry {
    pub fn order(&self) -> usize {
        self.table.order()
    }

    fn from_table(name: &str, table: GroupTable) -> Self {
        let mut generators: Vec<Permutation> = table
            .small_generating_set()
            .into_iter()
            .map(|g| table.right_regular(g))
            .collect();
        if generators.is_empty() {
            generators.push(Permutation::identity(table.order()));
        }
        CatalogEntry {
            name: name.to_string(),
            table,
            generators,
            class_e: None,
        }
    }

    fn with_class_e(mut self, item: u8, relations: String, generators: Vec<(char, usize)>) -> Self {
        let member = ClassEMember {
            item,
            relations,
            generators,
        };
        if let Err(e) = check_relations(&self.table, &member.names(), &member.relations) {
            panic!("catalog entry {}: {e}", self.name);
        }
        let gens: Vec<usize> = member.generators.iter().map(|&(_, x)| x).collect();
        assert!(
            self.table.generates(&gens),
            "{}: named generators",
            self.name
        );
        self.class_e = Some(member);
        self
    }
}

/// Realizes a group from stored image lists and checks its relations.
fn realize(name: &str, order: usize, images: &[&str], item: u8, relations: &str) -> CatalogEntry {
    let gens: Vec<Permutation> = images
        .iter()
        .map(|s| s.parse().expect("stored permutation"))
        .collect();
    let (table, embedding) =
        GroupTable::from_generators(&gens, order + 1).expect("stored realization");
    assert_eq!(table.order(), order, "{name}: realized order");
    let index = embedding_index(&embedding);
    let named = "abc"
        .chars()
        .zip(&gens)
        .map(|(c, g)| (c, index[g.images()]))
        .collect();
    CatalogEntry {
        name: name.to_string(),
        table,
        generators: gens,
        class_e: None,
    }
    .with_class_e(item, relations.to_string(), named)
}

const E4_IMAGES: [&str; 3] = [
    "1 0 6 8 10 12 2 11 3 13 4 7 5 9 15 14",
    "2 4 0 9 1 13 14 12 11 3 15 8 7 5 6 10",
    "3 5 7 0 11 1 13 2 14 10 9 4 15 6 8 12",
];
const E5_IMAGES: [&str; 2] = [
    "1 4 0 8 10 12 2 13 11 3 15 7 9 5 6 14",
    "3 5 7 0 11 1 12 2 14 10 9 4 6 15 8 13",
];
const E6_IMAGES: [&str; 3] = [
    "1 2 0 6 7 11 9 10 5 3 4 8 16 17 12 13 14 15",
    "3 6 9 4 0 13 7 1 15 10 2 17 5 12 8 14 11 16",
    "5 8 11 12 13 0 14 15 1 16 17 2 3 4 6 7 9 10",
];
const E7_IMAGES: [&str; 3] = [
    "1 2 0 15 19 9 10 23 25 13 14 18 21 5 6 16 3 7 24 20 4 26 8 17 11 22 12",
    "3 7 11 4 0 17 18 8 1 24 15 12 2 16 23 26 25 21 22 9 14 5 6 20 19 13 10",
    "5 9 13 17 21 6 0 24 19 10 1 16 25 14 2 7 23 18 3 26 12 22 4 11 15 20 8",
];

pub const E4_RELATIONS: &str = "a^2=b^2=c^2=1, abc=bca=cab";
pub const E5_RELATIONS: &str = "a^8=b^2=1, bab=a^5";
pub const E6_RELATIONS: &str = "a^3=b^3=c^2=1, ab=ba, (ac)^2=(bc)^2=1";
pub const E7_RELATIONS: &str = "a^3=b^3=c^3=1, ac=ca, bc=cb, c=a^-1b^-1ab";

fn e4() -> CatalogEntry {
    realize("E4", 16, &E4_IMAGES, 4, E4_RELATIONS)
}

fn e5() -> CatalogEntry {
    realize("E5", 16, &E5_IMAGES, 5, E5_RELATIONS)
}

fn e6() -> CatalogEntry {
    realize("E6", 18, &E6_IMAGES, 6, E6_RELATIONS)
}

fn e7() -> CatalogEntry {
    realize("E7", 27, &E7_IMAGES, 7, E7_RELATIONS)
}

fn alt4() -> CatalogEntry {
    let x = Permutation::from_cycles(4, &[vec![0, 1, 2]]).expect("3-cycle");
    let y = Permutation::from_cycles(4, &[vec![0, 1, 3]]).expect("3-cycle");
    let (table, embedding) =
        GroupTable::from_generators(&[x.clone(), y.clone()], 13).expect("Alt4");
    let labels = embedding.iter().map(|p| format!("{p:?}")).collect();
    let index = embedding_index(&embedding);
    let named = vec![('a', index[x.images()]), ('b', index[y.images()])];
    CatalogEntry {
        name: "Alt4".into(),
        table: table.with_labels(labels),
        generators: vec![x, y],
        class_e: None,
    }
    .with_class_e(3, "a^3=b^3=(ab)^2=1".into(), named)
}

fn dihedral(n: usize) -> CatalogEntry {
    let entry = CatalogEntry::from_table(&format!("D{}", 2 * n), GroupTable::dihedral(n));
    if (3..=5).contains(&n) {
        // rotation 1, reflection n in the semidirect indexing
        let relations = format!("a^{n}=b^2=1, b^-1ab=a^-1");
        entry.with_class_e(2, relations, vec![('a', 1), ('b', n)])
    } else {
        entry
    }
}

fn elementary(k: u32) -> CatalogEntry {
    let entry = CatalogEntry::from_table(&format!("C2^{k}"), GroupTable::elementary_abelian_2(k));
    if (2..=4).contains(&k) {
        let letters: Vec<char> = "abcd".chars().take(k as usize).collect();
        let mut rels: Vec<String> = letters.iter().map(|c| format!("{c}^2=1")).collect();
        for (i, x) in letters.iter().enumerate() {
            for y in &letters[i + 1..] {
                rels.push(format!("{x}{y}={y}{x}"));
            }
        }
        let named = letters
            .iter()
            .enumerate()
            .map(|(i, &c)| (c, 1 << i))
            .collect();
        entry.with_class_e(1, rels.join(", "), named)
    } else {
        entry
    }
}

fn q8_times_cyclic(n: usize) -> CatalogEntry {
    let table = GroupTable::direct_product(&GroupTable::dicyclic(2), &GroupTable::cyclic(n));
    let entry = CatalogEntry::from_table(&format!("Q8xC{n}"), table);
    // a = i (index 1 of Q8), b = j (index 4), c generates C_n
    let relations = format!("a^4=c^{n}=1, a^2=b^2, b^-1ab=a^-1, ac=ca, bc=cb");
    entry.with_class_e(8, relations, vec![('a', n), ('b', 4 * n), ('c', 1)])
}

fn cyclic(n: usize) -> CatalogEntry {
    CatalogEntry::from_table(&format!("C{n}"), GroupTable::cyclic(n))
}

fn product(name: &str, a: &GroupTable, b: &GroupTable) -> CatalogEntry {
    CatalogEntry::from_table(name, GroupTable::direct_product(a, b))
}

fn semidirect_cyclic(name: &str, n: usize, m: usize, r: usize) -> CatalogEntry {
    // C_n ⋊ C_m with the generator of C_m acting as x ↦ x^r
    let c = GroupTable::cyclic(n);
    let action: Vec<Vec<usize>> = (0..m)
        .map(|k| {
            let factor = (0..k).fold(1, |acc, _| acc * r % n);
            (0..n).map(|x| x * factor % n).collect()
        })
        .collect();
    let table = GroupTable::semidirect(&c, &GroupTable::cyclic(m), &action).expect("cyclic action");
    CatalogEntry::from_table(name, table)
}

fn c4c2_by_c2() -> CatalogEntry {
    // (C4 x C2) ⋊ C2 with a ↦ ab, b ↦ b; C4 x C2 indexed x·2 + y
    let base = GroupTable::direct_product(&GroupTable::cyclic(4), &GroupTable::cyclic(2));
    let twist: Vec<usize> = (0..8).map(|i| (i / 2) * 2 + (i % 2 + i / 2) % 2).collect();
    let table = GroupTable::semidirect(&base, &GroupTable::cyclic(2), &[(0..8).collect(), twist])
        .expect("twist action");
    CatalogEntry::from_table("(C4xC2):C2", table)
}

fn build_catalog() -> Vec<CatalogEntry> {
    let c = GroupTable::cyclic;
    let q8 = GroupTable::dicyclic(2);
    let mut v = vec![
        cyclic(1),
        cyclic(2),
        cyclic(3),
        cyclic(4),
        elementary(2),
        cyclic(5),
        cyclic(6),
        dihedral(3),
        cyclic(7),
        cyclic(8),
        product("C4xC2", &c(4), &c(2)),
        elementary(3),
        dihedral(4),
        CatalogEntry::from_table("Q8", q8.clone()),
        cyclic(9),
        product("C3^2", &c(3), &c(3)),
        cyclic(10),
        dihedral(5),
        cyclic(11),
        cyclic(12),
        product("C6xC2", &c(6), &c(2)),
        dihedral(6),
        CatalogEntry::from_table("Dic12", GroupTable::dicyclic(3)),
        alt4(),
        cyclic(13),
        cyclic(14),
        dihedral(7),
        cyclic(15),
        cyclic(16),
        product("C8xC2", &c(8), &c(2)),
        product("C4xC4", &c(4), &c(4)),
        product("C4xC2^2", &c(4), &GroupTable::elementary_abelian_2(2)),
        elementary(4),
        c4c2_by_c2(),
        semidirect_cyclic("C4:C4", 4, 4, 3),
        e5(),
        dihedral(8),
        semidirect_cyclic("SD16", 8, 2, 3),
        CatalogEntry::from_table("Q16", GroupTable::dicyclic(4)),
        product("D8xC2", &GroupTable::dihedral(4), &c(2)),
        product("Q8xC2", &q8, &c(2)),
        e4(),
    ];
    v.extend([e6(), q8_times_cyclic(3), e7(), q8_times_cyclic(4)]);
    v
}

fn full_catalog() -> &'static [CatalogEntry] {
    static CATALOG: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    CATALOG.get_or_init(build_catalog)
}

/// Catalog groups of order at most `max_order`, in catalog order.
pub fn catalog_small_groups(max_order: usize) -> Vec<CatalogEntry> {
    full_catalog()
        .iter()
        .filter(|e| e.order() <= max_order)
        .cloned()
        .collect()
}

/// The thirteen exceptional groups, in list order.
pub fn class_e_members() -> Vec<CatalogEntry> {
    let mut members: Vec<CatalogEntry> = full_catalog()
        .iter()
        .filter(|e| e.class_e.is_some())
        .cloned()
        .collect();
    members.sort_by_key(|e| (e.class_e.as_ref().map(|m| m.item), e.order()));
    members
}

const ALIASES: [(&str, &str); 8] = [
    ("C4oD8", "E4"),
    ("M16", "E5"),
    ("A4", "Alt4"),
    ("S3", "D6"),
    ("Q12", "Dic12"),
    ("C1xC1", "C1"),
    ("V4", "C2^2"),
    ("Q8xC2^1", "Q8xC2"),
];

/// Resolves a group name; see the module documentation for accepted forms.
pub fn lookup(name: &str) -> Result<CatalogEntry> {
    lookup_bounded(name, DEFAULT_MAX_GROUP_ORDER)
}

pub fn lookup_bounded(name: &str, max_order: usize) -> Result<CatalogEntry> {
    let name = name.trim();
    let canonical = ALIASES
        .iter()
        .find(|(alias, _)| *alias == name)
        .map_or(name, |&(_, target)| target);
    if let Some(entry) = full_catalog().iter().find(|e| e.name == canonical) {
        return Ok(entry.clone());
    }
    let entry = family(canonical, max_order)?;
    if entry.order() > max_order {
        return Err(Error::resource(format!("order of group {name}"), max_order));
    }
    Ok(entry)
}

fn number(s: &str) -> Option<usize> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

fn family(name: &str, max_order: usize) -> Result<CatalogEntry> {
    let unknown = || Error::Validation(format!("unknown group `{name}`"));
    let too_big = |order: usize| {
        if order > max_order {
            Err(Error::resource(format!("order of group {name}"), max_order))
        } else {
            Ok(())
        }
    };
    if let Some(k) = name.strip_prefix("C2^").and_then(number) {
        too_big(
            1usize
                .checked_shl(k as u32)
                .filter(|_| k < 40)
                .unwrap_or(usize::MAX),
        )?;
        return Ok(elementary(k as u32));
    }
    if let Some(r) = name.strip_prefix("Q8xC2^").and_then(number) {
        too_big(
            8usize
                .checked_shl(r as u32)
                .filter(|_| r < 40)
                .unwrap_or(usize::MAX),
        )?;
        let table = GroupTable::direct_product(
            &GroupTable::dicyclic(2),
            &GroupTable::elementary_abelian_2(r as u32),
        );
        return Ok(CatalogEntry::from_table(name, table));
    }
    if let Some(n) = name.strip_prefix('C').and_then(number) {
        if n == 0 {
            return Err(unknown());
        }
        too_big(n)?;
        return Ok(cyclic(n));
    }
    if let Some(n) = name.strip_prefix('D').and_then(number) {
        if n < 6 || n % 2 == 1 {
            return Err(unknown());
        }
        too_big(n)?;
        return Ok(dihedral(n / 2));
    }
    if let Some(n) = name.strip_prefix("Dic").and_then(number) {
        if n < 8 || n % 4 != 0 {
            return Err(unknown());
        }
        too_big(n)?;
        return Ok(CatalogEntry::from_table(name, GroupTable::dicyclic(n / 4)));
    }
    // direct products, split at the first top-level `x`
    let bytes = name.as_bytes();
    let mut depth = 0i32;
    for (i, &b) in bytes.iter().enumerate() {
        match b {
            b'(' => depth += 1,
            b')' => depth -= 1,
            b'x' if depth == 0 && i > 0 && i + 1 < bytes.len() => {
                let left = lookup_bounded(&name[..i], max_order)?;
                let right = lookup_bounded(&name[i + 1..], max_order)?;
                too_big(left.order().saturating_mul(right.order()))?;
                let table = GroupTable::direct_product(&left.table, &right.table);
                return Ok(CatalogEntry::from_table(name, table));
            }
            _ => {}
        }
    }
    Err(unknown())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_the_sequence() {
        let cat = catalog_small_groups(COMPLETE_UP_TO);
        assert_eq!(cat.len(), 42);
        for (k, &expected) in GROUP_COUNTS.iter().enumerate() {
            let got = cat.iter().filter(|e| e.order() == k + 1).count();
            assert_eq!(got, expected, "order {}", k + 1);
        }
        assert_eq!(catalog_small_groups(1).len(), 1);
        assert_eq!(catalog_small_groups(8).len(), 14);
    }

    #[test]
    fn exceptional_members() {
        let members = class_e_members();
        assert_eq!(members.len(), 13);
        let names: Vec<&str> = members.iter().map(|e| e.name.as_str()).collect();
        assert_eq!(
            names,
            [
                "C2^2", "C2^3", "C2^4", "D6", "D8", "D10", "Alt4", "E4", "E5", "E6", "E7", "Q8xC3",
                "Q8xC4"
            ]
        );
        let orders: Vec<usize> = members.iter().map(|e| e.order()).collect();
        assert_eq!(orders, [4, 8, 16, 6, 8, 10, 12, 16, 16, 18, 27, 24, 32]);
    }

    #[test]
    fn stored_generators_reproduce_orders() {
        for e in catalog_small_groups(64) {
            let (t, _) = GroupTable::from_generators(&e.generators, 100).unwrap();
            assert_eq!(t.order(), e.order(), "{}", e.name);
        }
    }

    #[test]
    fn names_resolve() {
        assert_eq!(lookup("Q8").unwrap().order(), 8);
        assert_eq!(lookup("C4oD8").unwrap().name, "E4");
        assert_eq!(lookup("C20").unwrap().order(), 20);
        assert_eq!(lookup("D18").unwrap().order(), 18);
        assert_eq!(lookup("Q8xC2^3").unwrap().order(), 64);
        assert_eq!(lookup("C2^5").unwrap().order(), 32);
        assert_eq!(lookup("Dic20").unwrap().order(), 20);
        let p = lookup("D8xC3").unwrap();
        assert_eq!(p.order(), 24);
        assert!(!p.table.is_abelian());
        assert!(matches!(lookup("Nope"), Err(Error::Validation(_))));
        assert!(matches!(lookup("D7"), Err(Error::Validation(_))));
        assert!(matches!(lookup("C0"), Err(Error::Validation(_))));
        assert!(matches!(
            lookup_bounded("C100", 64),
            Err(Error::Resource { .. })
        ));
        assert!(matches!(
            lookup_bounded("C2^50", 64),
            Err(Error::Resource { .. })
        ));
    }
}
