//! Exact normal forms and centers of skew PBW extensions.
//!
//! An algebra is given by generators in a fixed PBW order and one rewrite
//! rule per descending pair. The [`engine`] reduces words to standard
//! monomials, [`center`] computes commutators and degree-bounded centers by
//! exact linear algebra, [`catalog`] ships the known algebras with their
//! expected central elements, and [`cli`] exposes everything as commands.

pub mod catalog;
pub mod center;
pub mod cli;
pub mod coeff;
pub mod engine;
pub mod error;
pub mod exec;

pub use error::{Error, Result};
