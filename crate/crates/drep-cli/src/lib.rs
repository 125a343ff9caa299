//! File formats and report rendering for the `drep` command-line tool.
//! The computational work lives in `drep-core`; this crate parses algebra
//! and representation files, prints them back out, and formats results.

pub mod dsl;
pub mod repfile;
pub mod report;
