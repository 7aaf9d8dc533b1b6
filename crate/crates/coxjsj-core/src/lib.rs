//! Combinatorics of Coxeter presentation diagrams.
//!
//! A Coxeter system is described here purely by its presentation diagram: a
//! finite generator set together with a symmetric order map `m(s,t)` taking
//! values in `{2, 3, ...} ∪ {∞}`. The diagram has an edge exactly where the
//! order is finite. On top of that this crate computes:
//!
//! * [`separators`]: separations of the diagram, minimal and relative
//!   minimal separators, and the complete (clique) ones among them;
//! * [`jsj`]: the canonical decomposition of a system as a tree of generator
//!   subsets glued over complete separators, slide moves between such trees,
//!   and the closure of a tree under slides;
//! * [`chordal`]: chordality of the diagram and its relation to the
//!   decomposition's vertex labels;
//! * [`twist`]: elementary twists, conjugating one side of a separation by
//!   the longest element of the subgroup generated by the cut;
//! * [`oracle`]: slow, independent recomputations (exhaustive subset
//!   enumeration and coset enumeration) used to cross-check everything else.
//!
//! The crate is `no_std` (with `alloc`); parsing, file formats and the
//! command line live in the companion `coxjsj` crate.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

mod error;
mod iso;
mod mcs;
mod report;

pub mod chordal;
pub mod classify;
pub mod jsj;
pub mod oracle;
pub mod separators;
pub mod system;
pub mod twist;

pub use classify::FiniteTypeLabel;
pub use error::Error;
pub use report::{Check, VerificationReport};
pub use system::{CoxeterSystem, GeneratorId, GeneratorSubset, OrderLabel};
