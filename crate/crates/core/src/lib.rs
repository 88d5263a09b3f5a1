//! Numerical toolkit for convolutions and convex combinations of planar
//! harmonic mappings `f = h + conj(g)` on the unit disk.
//!
//! The crate is `no_std` and only needs `alloc`. Everything here is a pure
//! function over immutable values:
//!
//! * [`cpoly`]: complex polynomials, the reciprocal adjoint `p*`, Cohn's
//!   degree-reduction rule and a Durand–Kerner root oracle.
//! * [`series`]: truncated power series with the Hadamard product.
//! * [`hmap`]: harmonic maps, the shearing construction and the canonical
//!   half-plane, strip and `f_{α,n}` families.
//! * [`convo`]: harmonic convolution, closed-form convolution dilatations as
//!   exact rational functions, convex combinations and boundedness
//!   certificates.
//! * [`geochk`]: grid checks for local univalence, the Hengartner–Schober
//!   positivity functional, directional convexity and parameter sweeps.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod convo;
pub mod cpoly;
mod error;
pub mod geochk;
mod grid;
pub mod hmap;
pub mod series;

pub use error::{Error, Result};
pub use num_complex::Complex64;

/// Shorthand used throughout the crate.
pub type C64 = Complex64;

/// `e^{iθ}`.
#[inline]
pub fn cis(theta: f64) -> C64 {
    C64::new(libm::cos(theta), libm::sin(theta))
}
