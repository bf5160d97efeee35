//! Doc-test harness for the book.
//!
//! mdbook cannot run snippets that depend on external crates, so each
//! chapter is included here as module documentation and `cargo test --doc`
//! compiles and runs every Rust code block. One module per chapter keeps
//! failures attributable to the file they came from.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/tstrings.md")]
pub mod tstrings {}

#[doc = include_str!("../../../book/src/discrepancies.md")]
pub mod discrepancies {}

#[doc = include_str!("../../../book/src/hirzebruch.md")]
pub mod hirzebruch {}

#[doc = include_str!("../../../book/src/hilbert.md")]
pub mod hilbert {}

#[doc = include_str!("../../../book/src/census.md")]
pub mod census {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
