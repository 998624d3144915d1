//! Two-colored partitions, the categories they generate, the linear maps
//! `T_p` they induce and the matrix relations `R(p)` attached to them.
//!
//! The crate is organised along the usual pipeline:
//!
//! * [`partition`], [`literal`], [`base`]: partitions, their text form and the
//!   named generators;
//! * [`category`], [`catalog`]: bounded generation of categories, membership,
//!   classification and the list of known categories;
//! * [`maps`], [`exact`]: the maps `T_p`, functor laws, Gram matrices and their
//!   exact ranks;
//! * [`relation`], [`sample`]: symbolic relations and their numeric check on
//!   sampled group elements.

pub mod base;
pub mod catalog;
pub mod category;
pub mod enumerate;
pub mod error;
pub mod exact;
pub mod literal;
pub mod maps;
pub mod partition;
pub mod relation;
pub mod sample;
mod unionfind;

pub use error::PartitionError;
pub use literal::{parse_partition, render_partition};
pub use partition::{Color, ColoredPartition, Corner, PlainPartition, Point};
