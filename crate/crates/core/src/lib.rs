pub mod bounds;
pub mod cli;
pub mod error;
pub mod lp;
pub mod model;
pub mod numeric;
pub mod relax;
pub mod scalarize;
pub mod search;

pub use error::{Error, Result};
