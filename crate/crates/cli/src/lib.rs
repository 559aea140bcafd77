//! Library surface of the `rado` command-line tool: the argument-driven
//! entry point and the certificate format with its verifier.

mod app;
pub mod cert;

pub use app::{run, EXIT_ERROR, EXIT_NEGATIVE, EXIT_OK, EXIT_UNKNOWN};
