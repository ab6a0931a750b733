//! Dunkl-Pauli equation for a spin-1/2 particle in a uniform magnetic field
//! in two dimensions.
//!
//! - [`dunkl`]: exact Cartesian polynomial algebra with reflections and Dunkl derivatives.
//! - [`angular`]: the angular operators J_θ = iG and B_θ and the parity-sector eigenproblem.
//! - [`spectrum`]: closed-form energies, the Kummer function and radial wavefunctions.
//! - [`oracle`]: an independent finite-difference eigenvalue solver for the radial equation.
//! - [`thermo`]: canonical-ensemble Z, F, U, C and S for a fixed-ℓ level ladder.
//! - [`figures`] and [`verify`]: figure sweeps and the full verification suite.

pub mod angular;
pub mod dunkl;
pub mod error;
pub mod figures;
pub mod params;
pub mod oracle;
pub mod poly;
pub mod spectrum;
pub mod thermo;
pub mod verify;

pub use error::{Error, Result};
pub use params::{Axis, Branch, Ell, Parity, Sector, Spin, WignerParams};
