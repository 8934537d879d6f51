//! Sudoku colourings of graphs.
//!
//! A partial proper colouring of a graph is a *`k`-Sudoku colouring* when it
//! extends to exactly one proper `k`-colouring of the whole graph. The
//! *`k`-Sudoku number* `sn(G, k)` is the fewest coloured vertices such a
//! colouring can have. This crate counts extensions, computes `sn(G, k)`
//! exactly for small graphs with a checkable certificate, and checks closed
//! formulas for several graph families against the exact values.
//!
//! ```
//! use sudoku_chroma::graph::build_path;
//! use sudoku_chroma::search::sudoku_number;
//!
//! let p6 = build_path(6)?;
//! let r = sudoku_number(&p6, 3)?;
//! assert_eq!(r.sn, 4);
//! r.certificate.verify(&p6).unwrap();
//! # Ok::<(), sudoku_chroma::Error>(())
//! ```

pub mod coloring;
mod error;
pub mod graph;
pub mod search;
pub mod theorems;

pub use error::{Error, Result};

// The guide in `book/` is compiled here so its snippets run as doctests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/colourings.md")]
    mod colourings {}
    #[doc = include_str!("../../../book/src/sudoku-numbers.md")]
    mod sudoku_numbers {}
    #[doc = include_str!("../../../book/src/checks.md")]
    mod checks {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
