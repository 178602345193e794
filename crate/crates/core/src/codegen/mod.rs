//! Code constructions: Reed-Solomon codes, shortening, binary expansion,
//! parameter search and random codes.

mod binary;
mod params;
mod qary;
mod random;

pub use binary::BinaryCode;
pub use params::{dcode_condition_check, ks_search, CodeParams};
pub use qary::{binary_expand, rs_extended, rs_shortened, shorten, QaryCode, RsMeta, MAX_SYMBOLS};
pub use random::random_code;
