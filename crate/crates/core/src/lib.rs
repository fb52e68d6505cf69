//! Construction, composition and exhaustive verification of nested
//! (v,4,1)-BIBDs, nested group divisible designs and Banff relative
//! difference families.

pub mod catalog;
pub mod design;
pub mod direct;
pub mod error;
pub mod family;
pub mod group;
pub mod nesting;
pub mod plan;
pub mod recursive;
pub mod report;
pub mod search;

pub use error::{Error, Result};
