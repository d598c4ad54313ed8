//! Numerics for the Dirichlet divisor problem.
//!
//! * [`arith`]: the divisor sieve, D(x) and harmonic sums.
//! * [`periodic`]: ψ, the periodized Bernoulli functions ψ_r, their Fourier
//!   series, cotangent residue sums and ∫_T^∞ ψ₂(t)/t³ dt.
//! * [`remainder`]: Δ(x) and its split into A(x) + B(x), plus the
//!   trigonometric form of A(x) at integers.
//! * [`dsum`]: Σ_{a<n≤b} d(n) f(n) rewritten as eight integral and boundary
//!   terms, evaluated with breakpoint-aware quadrature.
//! * [`zeta_afe`]: real-s zeta tails E₁(s, x), E₂(s, x) and the relations
//!   tying E₂ to E₁ and Δ(x).

pub mod arith;
pub mod dsum;
pub mod error;
pub mod gauss;
pub mod oscillatory;
pub mod periodic;
pub mod quad;
pub mod remainder;
pub mod summation;
pub mod zeta_afe;

pub use arith::{DivisorSieve, HarmonicExpansion, EULER_GAMMA};
pub use dsum::{DivisorSumBreakdown, DivisorSumReport, SmoothFn, TailMode};
pub use error::{Error, Result};
pub use periodic::TailIntegral;
pub use quad::QuadConfig;
pub use remainder::{RemainderBreakdown, TrigMode, TrigTable};
pub use zeta_afe::AfeRecord;
