//! io companion to `shiftlab-core`: json document formats, text rendering,
//! the command line, and the observational table explorer.

pub mod cli;
pub mod doc;
pub mod explore;
pub mod render;

pub use cli::{run, Outcome};
