#![cfg_attr(not(test), no_std)]
extern crate alloc;

pub mod chevalley;
pub mod derivations;
pub mod gf8;
pub mod linalg;
pub mod octonion;
pub mod rng;
pub mod scalar;
pub mod standard_rep;
pub mod verify;
pub mod weyl;
