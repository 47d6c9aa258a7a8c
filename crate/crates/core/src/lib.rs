//! Algebraic Weyl curvature tensors and the cubic invariant
//! `Q = 2 W_pqrs W_ptru W_qtsu + ½ W_pqrs W_pqtu W_rstu`.
//!
//! The crate estimates the sharp constant `C(n)` in `|Q| ≤ C(n)|W|³` by
//! multi-start ascent on the unit sphere of the Weyl subspace, and checks
//! curvature data of symmetric Einstein spaces against the identity
//! `Q = (S/n)|W|²` and the Yamabe-type bounds that depend on it.
//!
//! Modules:
//! - [`weyl_space`]: tensors, constraints, orthonormal Weyl coordinates.
//! - [`q_functional`]: `Q`, its gradient and the ratio `Q/|W|³`.
//! - [`optimizer`]: Riemannian gradient ascent and the multi-start search.
//! - [`catalog`]: model-space curvature, curvature tables and bound checks.

pub mod catalog;
pub mod constants;
pub mod error;
pub mod optimizer;
pub mod q_functional;
pub mod weyl_space;

pub use error::{Error, Result};
pub use q_functional::{q_gradient, q_value, ratio, ratio_gradient, QReport};
pub use weyl_space::{Sym2, Tensor4, WeylBasis, WeylCoords};
