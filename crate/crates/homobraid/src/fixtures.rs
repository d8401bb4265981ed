//! Recurring example words shared by the test suites and documentation.

use crate::braid::{parse_word, BraidWord};

/// A 14-letter homogeneous word on 5 strands whose closure is a prime knot of
/// genus 5. All seesaw numbers are at least 4.
pub fn beta_prime() -> BraidWord {
    parse_word("3 -4 1^-2 3^2 2^2 -4 -1 3^2 2 -4", Some(5)).expect("fixture")
}

/// A 14-letter homogeneous word on 5 strands whose closure is a connected sum
/// of four torus links. All seesaw numbers equal 2.
pub fn beta_comp() -> BraidWord {
    parse_word("3^5 1^-3 2^3 4^-3", Some(5)).expect("fixture")
}

/// A 6-letter homogeneous word on 3 strands closing to the knot 6_3.
pub fn knot_6_3() -> BraidWord {
    parse_word("1^-2 2 1^-1 2^2", Some(3)).expect("fixture")
}
