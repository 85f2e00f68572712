#![forbid(unsafe_code)]

//! Complex exterior algebra and simplices in complex projective space.
//!
//! The crate implements, over `C^{n+1}` with the bilinear (non-Hermitian)
//! dot product:
//!
//! - dense exterior powers with wedge products, Gramian determinants, and
//!   the Hadamard-type norm bound ([`exterior`]);
//! - the grade-lowering isometry onto `C^{n+1}` that generalizes the cross
//!   product, with the box-product, Lagrange, and iterated-cross
//!   identities ([`hodge`]);
//! - Fubini-Study point and hyperplane distances and projective simplices
//!   built from vertex or face generators, whose minimum distance `d_min`
//!   and determinant modulus `|D|` obey `d_min^n <= |D| <= d_min`
//!   ([`projective`]);
//! - deterministic random sampling, scatter-figure data, and a
//!   derivative-free search for the largest `d_min` at fixed `|D|`
//!   ([`experiments`]);
//! - randomized verification suites for all of the identities above
//!   ([`verify`]).

pub mod algebra;
pub mod error;
pub mod experiments;
pub mod exterior;
pub mod hodge;
pub mod projective;
pub mod tol;
pub mod verify;

pub use algebra::{
    determinant, determinant_cofactor, dot, herm_norm, mat_vec, CMatrix, CVector, Cplx,
};
pub use error::{Error, Result};
pub use exterior::{blade_dot, blade_herm_norm, gram_det, hadamard_report, wedge, Blade};
pub use hodge::{box_det, generalized_cross, l_map, lagrange_vector, multicross};
pub use projective::{
    check_inequalities, fs_point_distance, fs_point_hyperplane_distance, make_isosceles,
    make_regular, normalize, vertex_opposite_distance, IsoscelesParams, ProjHyperplane, ProjPoint,
    RegularParams, Simplex, SimplexMode,
};
pub use tol::Tolerances;
