//! Algebraic curvature tensors in an orthonormal frame and the linear
//! subspace of algebraic Weyl tensors.

mod basis;
mod constraints;
mod tensor;

pub use basis::{constraint_rank, nullspace_basis, WeylBasis, WeylCoords, PIVOT_TOL};
pub use constraints::{
    build_constraints, is_algebraic_weyl, ConstraintKind, ConstraintSystem, ResidualReport,
    SparseRow,
};
pub use tensor::{
    curvature_symmetry_residual, flatten_index, frame_rotate, inner, kulkarni_nomizu, norm_sq,
    orthogonality_defect, random_orthogonal, ricci, scalar, unflatten_index, weyl_dimension,
    weyl_from_riemann, Sym2, Tensor4, SYMMETRY_TOL,
};
