//! Powers in partial words.
//!
//! A partial word is a word over a finite alphabet that may also contain
//! holes, wildcard positions compatible with every letter. This crate
//! provides:
//!
//! - [`word`]: the [`PartialWord`] value type with containment,
//!   compatibility, join and strong periods;
//! - [`powers`]: r-th power detection and enumeration of occurrences;
//! - [`constructions`]: explicit words with several powers all starting at
//!   the first position;
//! - [`verify`]: exhaustive checkers for periodicity and power-counting
//!   statements on bounded instance spaces;
//! - [`search`]: a symmetry-reduced, pruned search for words with the most
//!   r-th powers when at most `t` positions may start one.
//!
//! Positions are 1-indexed throughout the public API.

pub mod constructions;
pub mod enumerate;
pub mod error;
pub mod powers;
pub mod search;
pub mod verify;
pub mod word;

pub use error::{Error, Result};
pub use powers::{Exponent, PowerOccurrence, PowerProfile};
pub use word::{Alphabet, PartialWord, Symbol};
