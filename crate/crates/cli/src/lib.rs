//! Command-line surface for the exact/numerical constructive complex
//! analysis toolkit: JSON schemas, numerical defaults, and one entry
//! point per subcommand. The binary in `main.rs` is a thin argument
//! parser over [`commands`].

pub mod commands;
pub mod config;
pub mod error;
pub mod schema;
