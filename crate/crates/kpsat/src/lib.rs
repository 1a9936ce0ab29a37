//! IO, file formats and the command-line front end for `kpsat-core`.

pub mod cli;
pub mod driver;
pub mod graph6;
pub mod hypertext;
pub mod report;
