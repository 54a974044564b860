//! Numerical toolkit for the fully nonlocal semilinear heat equation
//!
//! ```text
//!     d_t^alpha u + (-Delta)^beta u = |u|^(p-1) u,   u(.,0) = u0,
//! ```
//!
//! with a Caputo time derivative of order `alpha in (0,1]` and a fractional
//! Laplacian acting through the Fourier symbol `|xi|^(2 beta)`.
//!
//! The crate provides:
//!
//! * [`special`] — the two-parameter Mittag-Leffler function on the negative
//!   real axis and the time-integrated weights used by the solver,
//! * [`kernels`] — tabulated self-similar profiles of the fundamental
//!   kernels `Z` and `Y`, with pointwise evaluation, radial norms and an
//!   empirical verification of their pointwise/`L^r` envelopes,
//! * [`solver`] — a pseudospectral mild-solution solver on a periodic box
//!   (Mittag-Leffler product integration of the memory integral), with
//!   Picard iteration and exact run continuation,
//! * [`criteria`] — the critical exponents, range classification, weighted
//!   mass functionals and blow-up certificates that govern the
//!   global-existence / blow-up dichotomy,
//! * [`experiments`] — phase diagrams, decay-rate fits, blow-up time
//!   studies and convergence studies,
//! * [`config`] / [`report`] — JSON run configuration and deterministic
//!   result emission.

pub mod bessel;
pub mod config;
pub mod criteria;
pub mod error;
pub mod experiments;
pub mod field;
pub mod kernels;
pub mod quad;
pub mod report;
pub mod solver;
pub mod special;

pub use error::CoreError;
