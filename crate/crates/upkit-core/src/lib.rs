//! Combinatorics of weak Arthur packets for split `Sp_{2n}` and `SO_{2n+1}`:
//! partition classes, component groups, special pieces, integral parameters,
//! Moeglin labels, `W_n` representations and the Springer correspondence.
#![no_std]

extern crate alloc;

pub mod check;
pub mod components;
pub mod error;
pub mod moeglin;
pub mod oracle;
pub mod params;
pub mod partition;
pub mod pieces;
pub mod springer;
pub mod wreps;

pub use error::{Error, Result};
