//! Laguerre series, their rearrangement into power series, and the nonlinear
//! sequence transformations needed to sum the divergent inner series.
//!
//! Everything is generic over [`Real`], implemented for `f64` and for the
//! software [`DoubleDouble`] type (about 32 digits). The crate is `no_std` and
//! only needs `alloc`.
//!
//! ```
//! use lagsum_core::seqtransform::{delta_transform, InputSequence};
//! use lagsum_core::PrecisionContext;
//!
//! // Partial sums of the divergent Euler series 0! - 1! + 2! - ...
//! let mut sums = Vec::new();
//! let (mut s, mut term) = (0.0_f64, 1.0_f64);
//! for n in 0..20 {
//!     s += term;
//!     sums.push(s);
//!     term *= -((n + 1) as f64);
//! }
//! let seq = InputSequence::new(sums).unwrap();
//! let result = delta_transform(&seq, 1.0, &PrecisionContext::hardware()).unwrap();
//! assert!((result.value - 0.596_347_362_323_194).abs() < 1e-10);
//! ```

#![cfg_attr(not(test), no_std)]
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

pub mod analyzer;
mod error;
pub mod families;
pub mod hypergeom;
pub mod laguerre;
pub mod numkernel;
pub mod seqtransform;

pub use error::{Error, Result};
pub use numkernel::{DoubleDouble, PrecisionContext, Real};
