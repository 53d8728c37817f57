//! File formats, reports, parallel sweeps and the command-line front end for
//! [`sigtree_core`].

pub mod cli;
pub mod io;
pub mod report;
pub mod sweep;

pub use cli::run;
