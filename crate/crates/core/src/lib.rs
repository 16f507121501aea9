//! Exact computations on the hyperplanes `W_f = ker f` of the space `c` of
//! convergent sequences, for finitely supported `f ∈ ℓ₁` with `‖f‖₁ = 1`.
//!
//! * [`seq`]: sequences and the `c`/`ℓ₁` pairing.
//! * [`hyperplane`]: projections onto `W_f`, their norms, the projection
//!   constant and the four-way classification.
//! * [`isometry`]: explicit isometries `c → W_f` and `W_f = c₀`.
//! * [`duality`]: `W_f* ≅ ℓ₁`, the weak*-limit of the basis and predual
//!   recovery.
//! * [`ordinal`]: measures on `[0, ω·n]` realizing `W_f` as a quotient of
//!   `C(ω·n)`.
//! * [`oracles`]: independent brute-force and numerical cross-checks.
//! * [`strategy`]: runtime registry of interchangeable norm and constant
//!   computations.

pub mod corpus;
pub mod duality;
pub mod error;
pub mod hyperplane;
pub mod isometry;
pub mod oracles;
pub mod ordinal;
pub mod rational;
pub mod seq;
pub mod strategy;

pub use error::{Error, Result};
pub use hyperplane::{HyperplaneClass, ProjectionSpec};
pub use rational::Rational;
pub use seq::{ConvergentSeq, L1Functional, L1Vector};
