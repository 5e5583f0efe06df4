pub mod error;
pub mod gf;
pub mod linalg;
pub mod linearized;
pub mod codes;
pub mod designs;
pub mod lrc;
pub mod report;
pub mod reproduce;

pub use error::{Error, Result};
