//! Combinatorics of t-spread strongly stable monomial ideals.
//!
//! Everything here is index combinatorics: a squarefree monomial
//! `x_{i_1} x_{i_2} ... x_{i_d}` is stored as its strictly increasing support
//! `[i_1, ..., i_d]`, and no polynomial arithmetic is ever performed.
//!
//! The crate covers
//!
//! * [`monomial`]: t-spread monomials, the squarefree lexicographic order,
//!   gap profiles and single Borel moves;
//! * [`enumeration`]: the sets `M_{n,d,t}` and `A^t(k,l)`, slex successors,
//!   segment ranks and the binomial decompositions behind them;
//! * [`borel`]: t-shadows, Borel closures, Borel t-shadows and the closed form
//!   for their slex minimum;
//! * [`betti`]: graded Betti numbers of t-spread strongly stable ideals,
//!   Betti tables, extremal Betti numbers and corner sequences;
//! * [`solver`]: deciding whether prescribed corners and corner values are
//!   realizable and constructing a realizing ideal;
//! * [`io`]: the JSON schemas shared with the command-line tool.

pub mod betti;
pub mod binom;
pub mod borel;
pub mod enumeration;
mod error;
pub mod io;
pub mod monomial;
pub mod solver;


pub use betti::{BettiTable, CornerData, TIdeal};
pub use borel::TMonomialSet;
pub use enumeration::SlexSegment;
pub use error::{Error, Result};
pub use monomial::{Ambient, GapProfile, TMonomial};
pub use solver::{Corner, CornerSpec, SolveReport, Verdict};

