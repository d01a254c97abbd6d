//! File formats, report rendering and the command-line front end for
//! `esnkit-core`.

pub mod app;
pub mod format;
pub mod render;
