//! Command-line front end for the `kli` interpolation library.
//!
//! The binary is called `interp` and exposes three subcommands:
//!
//! * `interp kli` — integrate the relaxation flow from a start to a target
//!   rotation and write the sampled curve as CSV or JSON;
//! * `interp slerp` — sample the closed-form geodesic between the same
//!   endpoints on a uniform grid;
//! * `interp compare` — run both and report how far the flow trajectory
//!   strays from the geodesic arc.
//!
//! Inputs are unit quaternions in scalar-first component order (`w,x,y,z`),
//! given inline via `--p`/`--r` or in bulk via `--pairs <file>`. Exit codes:
//! `0` success, `2` bad input or I/O, `3` the flow failed to converge or the
//! endpoints were antipodal. Set `INTERP_LOG=debug|info|quiet` to control
//! stderr logging.

pub mod args;
pub mod error;
pub mod io;
pub mod run;

pub use args::Cli;
pub use error::CliError;
pub use run::run;
