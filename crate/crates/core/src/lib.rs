//! Finite, executable versions of monads, Kleisli categories, internal
//! categories and Burroni T-categories, with certificates for every law.

pub mod catkit;
pub mod cli;
pub mod cert;
pub mod corpus;
pub mod error;
pub mod kleisli;
pub mod monadkit;
pub mod setcat;
pub mod suites;
pub mod tcat;

pub use cert::{Certificate, Check};
pub use error::{Error, Result};
