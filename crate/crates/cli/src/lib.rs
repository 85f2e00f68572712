//! I/O building blocks of the `cpsimplex` binary: JSON input files, the
//! record CSV schema, and the scatter SVG.

pub mod config;
pub mod csvio;
pub mod svg;
