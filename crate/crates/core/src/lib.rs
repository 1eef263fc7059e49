//! Minimal graded free resolutions of powers of lexsegment ideals with
//! linear quotients.
//!
//! For `u = x1*x_{l+1}^{a_{l+1}}..x_n^{a_n}` and `v = x_l*x_n^{d-1}` the
//! powers `I^k` of `I = (L(u, v))` have linear quotients in increasing
//! revlex order, and their decomposition function has a closed form. This
//! crate builds the resulting mapping-cone resolution explicitly and ships
//! independent checks for it.
//!
//! ```
//! use lexres::pipeline::Instance;
//!
//! let inst = Instance::parse(4, "x1x3", "x2x4").unwrap();
//! let rc = inst.resolve(1, false).unwrap();
//! assert_eq!(rc.betti_numbers(), &[1, 5, 6, 2]);
//! ```

pub mod decomposition;
pub mod error;
pub mod export;
pub mod lexsegment;
pub mod monomial;
pub mod parse;
pub mod pipeline;
pub mod powers;
pub mod quotients;
pub mod resolution;
pub mod verify;

pub use error::{Error, Result};
pub use monomial::{Monomial, RingContext};
