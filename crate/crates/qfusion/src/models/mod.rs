//! Concrete fusion models: SU(2)-type, SO(3)-type, free unitary, duals of
//! discrete groups, and finite-group character tables.

mod char_table;
mod free;
mod group_dual;
mod so3;
mod su2;

pub use char_table::{chartable_restriction_matrix, CharTableModel};
pub use free::{free_dim, free_tensor_words, FreeUnitaryModel};
pub use group_dual::{AbelianSpec, GroupDualModel};
pub use so3::{so3_dim, So3TypeModel};
pub use su2::{su2_dim, su2_tensor_indices, Su2TypeModel};
