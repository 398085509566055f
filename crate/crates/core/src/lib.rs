#![no_std]

extern crate alloc;

pub mod cf;
pub mod error;
pub mod exact;
pub mod partition;
pub mod subshift;
pub mod towers;
pub mod word;

pub use error::{Error, Result};
