// SPDX-License-Identifier: Apache-2.0

//! File formats, table caching and the `ncv` command line.

pub mod cache;
pub mod cli;
pub mod error;
pub mod format;
pub mod report;
pub mod table_io;

pub use cli::run;
pub use error::CliError;
