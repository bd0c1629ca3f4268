mod arith;
pub mod builder;
pub mod cochain;
pub mod config;
pub mod error;
pub mod group;
pub mod qz;
pub mod quad;
mod solver;
pub use config::Caps;
pub use error::{Error, Result};
