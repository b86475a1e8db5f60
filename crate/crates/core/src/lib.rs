//! Exact computation of the joint `UD`/`UUD` factor distribution over Dyck paths
//! and certification of the real-rootedness and interlacing properties of its
//! generating polynomials `W_{n,k}(x)`.
//!
//! Every quantity is an arbitrary-precision integer or rational; no floating
//! point is used anywhere in computation or certification.

pub mod dyck;
pub mod error;
pub mod polyarith;
pub mod rootcert;
pub mod triangle;

pub use error::{Error, Result};
