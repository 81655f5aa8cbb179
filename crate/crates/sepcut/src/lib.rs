//! File formats, JSON records and the driver behind the `sepcut` binary.

pub mod error;
pub mod io;
pub mod records;

pub use error::IoError;
