//! Exact solver for the large-nuclear-charge limit of the first ten
//! iso-electronic atomic sequences (H through Ne).
//!
//! The physical model is first-order degenerate perturbation theory in 1/Z:
//! the full Coulomb Hamiltonian is projected onto the degenerate ground
//! eigenspace `V0(N)` of the non-interacting hydrogenic Hamiltonian and the
//! resulting finite rational matrix is diagonalized in closed form. Every
//! intermediate quantity (determinant algebra, symmetry eigenspaces,
//! Slater-Condon matrix elements, two-electron integrals, 2x2 eigenvalues)
//! is kept exact: rationals, Gaussian rationals, or quadratic surds.
//!
//! Module map:
//! - [`rational`]: arbitrary-precision rational and Gaussian-rational scalars.
//! - [`surd`]: exact `a + b*sqrt(d)` arithmetic, comparison, decimal rendering.
//! - [`linalg`]: fraction-free integer kernel computation.
//! - [`determinant`]: Slater determinants over the ten n<=2 spin-orbitals,
//!   second-quantized operators, particle-hole duality.
//! - [`operators`]: one-body maps on the orbital space and their lifts.
//! - [`symmetry`]: exact L^2, S^2, L3, S3, parity matrices and the
//!   decomposition of `V0(N)` into simultaneous eigenspaces.
//! - [`integrals`]: the eleven exact Coulomb/exchange integrals, a symbolic
//!   re-derivation through Fourier space, and a numerical quadrature oracle.
//! - [`hamiltonian`]: Slater-Condon rules and the per-sector interaction
//!   blocks of the projected Hamiltonian.
//! - [`spectra`]: closed-form spectra, ground-state reports, gap curves,
//!   comparison against bundled experimental data.

pub mod determinant;
pub mod hamiltonian;
pub mod integrals;
pub mod linalg;
pub mod operators;
pub mod rational;
pub mod spectra;
pub mod surd;
pub mod symmetry;

pub use determinant::{DeterminantExpansion, SlaterDeterminant, SpinOrbital};
pub use rational::{GaussianRational, Rational};
pub use surd::QuadraticSurd;
