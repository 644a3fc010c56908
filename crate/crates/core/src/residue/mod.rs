//! The residue conditions on the arrow space of a level graph and the flag
//! of subspaces they cut out, with the dimension and codimension bookkeeping.

mod constraints;
mod flag;
mod lemmas;
mod report;

pub use constraints::{
    build_constraints, global_support, local_support, ConstraintSet, Constraints, Family, GlobalKey,
};
pub use flag::{
    build_flag, build_flag_with_constraints, residue_space, FlagCounts, IdentityCheck, ResidueFlag,
};
pub use lemmas::{lemma_checks, LemmaReport, RelationCheck};
pub use report::{
    block_collections, per_component_report, BlockCollections, ComponentReport, ComponentRow,
    LevelRow,
};
