pub mod abelian;
pub mod algebra;
pub mod artin;
pub mod census;
pub mod cli;
pub mod corpus;
pub mod error;
pub mod group_zeta;
pub mod mass;
pub mod rank2;
pub mod yoshida;
pub mod zeros;

pub use error::{Error, Result};
