//! Hit problem, lambda algebra and Singer transfer computations over F2.
//!
//! Everything here is `no_std` with `alloc`. IO, the command line and the
//! result cache live in the companion `cohitlab` crate.

#![no_std]

extern crate alloc;

pub mod binom;
pub mod cohit;
pub mod error;
pub mod f2linalg;
pub mod glaction;
pub mod lambda;
pub mod polyspace;
pub mod steenrod;
pub mod transferlab;

pub use error::Error;
