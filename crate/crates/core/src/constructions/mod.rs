//! Named graphs, witness searches, the exceptional connection sets and the
//! GRR classification.

mod class_e;
mod classify;
mod named;
mod search;

pub use class_e::{class_e_connection_set, ClassEConstruction, ClassEPartner};
pub use classify::{classify_group, GroupClass};
pub use named::{
    hypercube, moebius_kantor, parse_gp_cycles, Hypercube, MoebiusKantor, ALPHA, BETA, DELTA,
    GAMMA, MAX_HYPERCUBE_DIMENSION,
};
pub use search::{
    grr_search, normal_bicayley_search, normal_cayley_search, SearchBudget, SearchOutcome,
    MAX_SEARCH_ORDER,
};
