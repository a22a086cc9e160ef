//! Approximate kernelization for Connected η-Treedepth Deletion.
//!
//! The pipeline reduces an instance `(G, k)` to a smaller `(G', k)` and
//! lifts any solution of the reduced instance back to one of `G`, losing at
//! most a `1 + ε` factor when the guaranteed constants are used.

pub mod decompose;
pub mod error;
pub mod flow;
pub mod graph;
pub mod kernel;
pub mod lift;
pub mod oracle;
pub mod params;
pub mod scalar;
pub mod steiner;
pub mod treedepth;

pub use error::{Error, Result};
pub use graph::{Graph, Vertex, VertexSet};
pub use scalar::Scalar;
pub use treedepth::{build_decomposition, td_at_most, treedepth, TdDecomposition};

/// Exact rational scalar used by default.
pub type Rational = num_rational::BigRational;

pub use kernel::{reduce, KernelState, Outcome};
pub use lift::{lift, verify_ctds, Solution, SolutionKind};
pub use params::{derive_params, Params, Profile};

/// Parameters over exact rationals.
pub type ExactParams = Params<Rational>;
/// Parameters over `f64`, for quick experiments.
pub type FloatParams = Params<f64>;
/// Kernel state over exact rationals.
pub type ExactKernelState = KernelState<Rational>;
