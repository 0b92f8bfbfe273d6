use std::fmt;

use crate::group::catalog::class_e_members;
use crate::group::{are_isomorphic, GroupTable};

/// Which family of the GRR classification a group belongs to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupClass {
    /// The group admits a GRR.
    HasGrr,
    /// Abelian of exponent greater than two.
    ClassC,
    /// Generalized dicyclic.
    ClassD,
    /// One of the thirteen exceptional groups.
    ClassE { item: u8, member: String },
}

impl fmt::Display for GroupClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupClass::HasGrr => write!(f, "has-grr"),
            GroupClass::ClassC => write!(f, "class-c"),
            GroupClass::ClassD => write!(f, "class-d"),
            GroupClass::ClassE { item, member } => write!(f, "class-e({item}) {member}"),
        }
    }
}

/// Classes are tested in the order C, D, E; anything else has a GRR.
pub fn classify_group(g: &GroupTable) -> GroupClass {
    let inv = g.structural_invariants();
    if inv.abelian && inv.exponent > 2 {
        return GroupClass::ClassC;
    }
    if g.is_generalized_dicyclic().is_some() {
        return GroupClass::ClassD;
    }
    for member in class_e_members() {
        if member.order() == g.order() && are_isomorphic(&member.table, g).is_some() {
            let item = member.class_e.as_ref().expect("class E member").item;
            return GroupClass::ClassE {
                item,
                member: member.name,
            };
        }
    }
    GroupClass::HasGrr
}
