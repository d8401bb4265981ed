//! Deciding primeness of homogeneous braid closures from their words, with
//! connected-sum factorizations, trees of open books, combinatorial page
//! surfaces, and chord-witness search.

pub mod braid;
pub mod chord;
pub mod primeness;
pub mod report;
pub mod surface;
pub mod trace;
pub mod tree;

pub mod fixtures;
