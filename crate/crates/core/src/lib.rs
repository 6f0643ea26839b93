//! Sinc quadrature and Sinc indefinite integration on `(−∞, ∞)` and
//! `(0, ∞)` with single- and double-exponential variable transformations.
//!
//! Every approximation can be paired with an a-priori error bound
//! `C · rate(n)` whose constant `C` is fully explicit, given decay data
//! `(K, α, β, d)` for the integrand. [`auto_tol`] inverts these bounds to
//! choose the number of nodes for a requested tolerance.
//!
//! ```
//! use sinc_core::{engine, experiments::Example, bounds::Family};
//!
//! let (id, params) = Example::Two.setup(Family::De);
//! let f = Example::Two.integrand();
//! let r = engine::integrate(&f, id, &params, 20).unwrap();
//! assert!((r.value - 1.0).abs() <= r.bound.unwrap());
//! ```

pub mod auto_tol;
pub mod bounds;
pub mod engine;
pub mod error;
pub mod experiments;
pub mod mesh;
pub mod special;
pub mod transforms;

pub use error::{Result, SincError};
