//! File formats, exports, sequence generation and verification sweeps for
//! the `oddcycles-core` systems; the `oddcycles` binary is a thin front end.

pub mod doc;
pub mod error;
pub mod export;
pub mod format;
pub mod golden;
pub mod seq;
pub mod verify;

pub use error::{Error, Result};
