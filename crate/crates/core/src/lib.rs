//! Enumeration, bijections and statistics for Stoimenow matchings and the
//! other Fishburn structures: (2+2)-free posets, ascent sequences, Fishburn
//! permutations, plus Dyck paths on the Catalan side.
//!
//! Everything here is exhaustive and exact. Objects are small (a few dozen
//! arcs at most) and most routines use `u64` bitmasks over arcs or poset
//! elements.

pub mod bijections;
pub mod error;
pub mod graph;
pub mod matching;
pub mod pattern;
pub mod poset;
pub mod seqperm;
pub mod series;
pub mod verify;

pub use bijections::dyck::DyckPath;
pub use error::{Error, Result};
pub use matching::{ArcRelation, Matching};
pub use pattern::{Pattern, PatternName};
pub use poset::{CanonicalForm, Poset, PosetStats};
pub use seqperm::{AscentSeq, Perm};
pub use series::{Poly, Series};
