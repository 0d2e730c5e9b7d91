//! Exact arithmetic for fusion rings: tensor-product decomposition, closure
//! and connectedness analysis, subring lattices, normality and centrality of
//! quantum subgroups, quotients, and simplicity reports, with a small corpus
//! of finite-group oracles for cross-checking.

pub mod corpus;
pub mod error;
pub mod finite_group;
pub mod io;
pub mod label;
pub mod model;
pub mod models;
pub mod qnum;
pub mod simplicity;
pub mod subgroup;
pub mod sum;

pub use error::{FusionError, Result};
pub use label::{Label, Letter, Payload, Word};
pub use model::{closure, verify_model, Budget, ClosureResult, FusionModel};
pub use models::{
    AbelianSpec, CharTableModel, FreeUnitaryModel, GroupDualModel, So3TypeModel, Su2TypeModel,
};
pub use simplicity::{
    enumerate_subrings, is_connected, simplicity_report, Connectedness, SimplicityReport,
    SimplicityVerdict, SubringLattice,
};
pub use subgroup::{
    is_central, is_normal, quotient, same_imbedding, verify_restriction, NormalityReport,
    NormalityVerdict, RestrictionData,
};
pub use sum::FormalSum;
