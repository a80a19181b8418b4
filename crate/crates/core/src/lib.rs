//! Ext-quivers of weight-2 blocks of symmetric groups whose p-cores are
//! hook partitions.
//!
//! The quiver of the principal block of F𝔖_{2p} is built from closed-form
//! decomposition data ([`principal_seed`]); quivers of the remaining hook
//! blocks follow by induction along (2:1)- and (2:2)-pairs ([`quiver`]).
//! [`classification`] provides the reference graph family, an isomorphism
//! engine and the Scopes/Morita censuses.

pub mod abacus;
pub mod classification;
pub mod cli;
pub mod error;
pub mod pairs;
pub mod partitions;
pub mod principal_seed;
pub mod quiver;
pub mod weight2;

pub use abacus::{p_core_and_weight, AbacusDisplay, Weight2Label};
pub use error::{Error, Result};
pub use partitions::Partition;
