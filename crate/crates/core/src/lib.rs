//! Rainbow-connecting edge colourings of 2-connected graphs with at most
//! `⌈n/2⌉` colours, together with independent verifiers and exact oracles
//! for small graphs.
//!
//! The pipeline: [`graph::find_even_cycle`] seeds a core which
//! [`structure::build_h_star`] grows by odd ears and even ear pairs; the
//! rest of the graph splits into weak bridges, each covered by a path
//! sequence. [`painter::construct`] colours all of it and removes one
//! colour when there are one or two bridges. [`checker`] and [`oracle`]
//! verify results without sharing the construction's logic.

pub mod checker;
pub mod colouring;
pub mod exec;
pub mod graph;
pub mod oracle;
pub mod painter;
pub mod structure;
pub mod sweep;

pub use checker::{Checker, RainbowQuery, Report, SafetyReport};
pub use colouring::{ColourId, Colouring, Roles};
pub use exec::Execution;
pub use graph::{Cycle, Graph, GraphError, VPath};
pub use painter::{construct, rainbow_colouring, spanning_tree_colouring, Construction, PaintError};
