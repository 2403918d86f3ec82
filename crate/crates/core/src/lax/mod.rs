//! Parametric R-matrices, universal Lax operators and the relations tying them
//! together.

mod avm;
mod golden;
mod operators;
mod relations;
mod rmatrix;

pub use avm::{AlgebraValuedMatrix, LaxPlacement};
pub use golden::{derived_l, golden_l_tables, GoldenTable, LaxFamily};
pub use operators::{universal_lax_2, universal_lax_3, LaxSource};
pub use relations::{
    check_parametric_ybe, check_rll, check_universal_lax, LaxFactors, RelationReport, RllFactors,
    Status, Witness, YbeFactors,
};
pub use rmatrix::{r_matrix_2, r_matrix_3};
