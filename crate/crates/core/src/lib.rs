pub mod error;
pub mod f2;
pub mod graph;
pub mod codespace;
pub mod pauli;
pub mod metrics;
pub mod cayley;
pub mod families;
pub mod model;
pub mod cli;

pub use error::{Error, Result};
