//! Recursive constructions that combine verified ingredients into larger
//! nested designs.

mod compose;
mod matrix;
mod registry;

pub use compose::{fill_groups, inflation_warning, pbd_closure, rbibd_inflate, truncate_td, wilson_weight3};
pub use matrix::{hdm_from_field, hdm_product, DifferenceMatrix, MatrixFile};
pub use registry::{parse_ingredient, validate, Ingredient, IngredientRegistry, Key, Role};
