pub mod circuit;
pub mod cli;
pub mod error;
pub mod frft;
pub mod funcsynth;
pub mod matcore;

pub use error::{Error, Result};
