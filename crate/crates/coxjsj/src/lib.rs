//! File formats, DOT export, random corpora and the command line for
//! `coxjsj-core`.

pub mod cli;
pub mod dot;
pub mod format;
pub mod random;
pub mod verify;
