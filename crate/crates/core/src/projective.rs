//! Points, hyperplanes, and simplices in complex projective space, with
//! Fubini-Study distances and the determinant bounds that constrain them.
//!
//! A point (or a hyperplane, via the coefficients of its defining linear
//! form) is represented by a unit vector in `C^{n+1}`, unique up to phase.
//! A simplex is cut out by `n + 1` independent unit generators read either
//! as vertices or as faces; in both readings the distance from generator
//! `j` to the opposite feature is `|det| / |wedge of the others|`, and the
//! minimum distance `d_min` satisfies `d_min^n <= |det| <= d_min`.

use num_complex::Complex64 as Cplx;

use crate::algebra::{determinant, dot, herm_norm, CMatrix, CVector};
use crate::error::{Error, Result};
use crate::exterior::{blade_herm_norm, wedge};
use crate::hodge::{box_det, l_map};
use crate::tol::Tolerances;

/// A point of `CP^n`, held as a unit representative vector.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjPoint {
    rep: CVector,
}

/// A hyperplane of `CP^n`: the locus `rep . x = 0`, held as a unit
/// coefficient vector.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjHyperplane {
    rep: CVector,
}

macro_rules! unit_rep_impl {
    ($ty:ident) => {
        impl $ty {
            /// Wraps a representative, rejecting vectors whose Hermitian
            /// norm falls outside the unit band. Inputs are not silently
            /// renormalized; use [`normalize`] first if needed.
            pub fn new(rep: CVector) -> Result<Self> {
                Self::with_tolerances(rep, &Tolerances::standard())
            }

            /// [`Self::new`] with an explicit tolerance record.
            pub fn with_tolerances(rep: CVector, tol: &Tolerances) -> Result<Self> {
                let norm = herm_norm(&rep);
                if (norm - 1.0).abs() > tol.unit_norm {
                    return Err(Error::NotUnit { index: 0, norm });
                }
                Ok(Self { rep })
            }

            /// The unit representative.
            pub fn rep(&self) -> &CVector {
                &self.rep
            }

            /// Ambient vector dimension `n + 1`.
            pub fn dim(&self) -> usize {
                self.rep.dim()
            }
        }
    };
}

unit_rep_impl!(ProjPoint);
unit_rep_impl!(ProjHyperplane);

/// Scales a vector to unit Hermitian norm.
pub fn normalize(v: &CVector) -> Result<CVector> {
    let norm = herm_norm(v);
    if norm == 0.0 {
        return Err(Error::Degenerate {
            what: "vector norm",
            value: 0.0,
            threshold: 0.0,
        });
    }
    Ok(v.scaled(Cplx::new(1.0 / norm, 0.0)))
}

/// Fubini-Study distance `|p ^ q|` between two points; phase-invariant
/// and confined to `[0, 1]`.
///
/// # Panics
/// Panics if the ambient dimensions differ.
pub fn fs_point_distance(p: &ProjPoint, q: &ProjPoint) -> f64 {
    assert_eq!(
        p.dim(),
        q.dim(),
        "fs_point_distance: dimension mismatch ({} vs {})",
        p.dim(),
        q.dim()
    );
    // Mathematically <= 1 for unit representatives; clamp roundoff.
    blade_herm_norm(&wedge(&[p.rep.clone(), q.rep.clone()])).min(1.0)
}

/// Fubini-Study distance from a point to a hyperplane: the minimum of
/// `|u ^ x|` over unit `x` with `v . x = 0`, which closes to `|u . v|`.
///
/// # Panics
/// Panics if the ambient dimensions differ.
pub fn fs_point_hyperplane_distance(u: &ProjPoint, v: &ProjHyperplane) -> f64 {
    assert_eq!(
        u.dim(),
        v.dim(),
        "fs_point_hyperplane_distance: dimension mismatch ({} vs {})",
        u.dim(),
        v.dim()
    );
    dot(&u.rep, &v.rep).norm().min(1.0)
}

/// Distance from the point `a` to the hyperplane spanned by `bs`:
/// `|det(a, bs)| / |wedge(bs)|`.
///
/// Always at least `|det(a, bs)|`, with equality exactly when the `bs`
/// are pairwise Hermitian-orthogonal.
///
/// # Panics
/// Panics if the counts and dimensions are inconsistent.
pub fn vertex_opposite_distance(a: &CVector, bs: &[CVector]) -> Result<f64> {
    let tol = Tolerances::standard();
    let m = a.dim();
    assert_eq!(
        bs.len(),
        m - 1,
        "vertex_opposite_distance: need {} spanning vectors in dimension {m}, got {}",
        m - 1,
        bs.len()
    );
    for (index, v) in std::iter::once(a).chain(bs).enumerate() {
        assert_eq!(v.dim(), m, "vertex_opposite_distance: mixed dimensions");
        let norm = herm_norm(v);
        if (norm - 1.0).abs() > tol.unit_norm {
            return Err(Error::NotUnit { index, norm });
        }
    }
    let span_norm = blade_herm_norm(&wedge(bs));
    if span_norm <= tol.indep {
        return Err(Error::Degenerate {
            what: "spanning wedge norm",
            value: span_norm,
            threshold: tol.indep,
        });
    }
    let abs_det = box_det(a, bs).norm();
    if abs_det <= tol.indep {
        return Err(Error::Degenerate {
            what: "|det|",
            value: abs_det,
            threshold: tol.indep,
        });
    }
    Ok((abs_det / span_norm).min(1.0))
}

/// Whether the generators of a [`Simplex`] are read as vertices or as the
/// coefficient vectors of its faces.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SimplexMode {
    Vertices,
    Faces,
}

/// A projective simplex: `n + 1` independent unit generators with the
/// determinant, the per-index distances to the opposite features, and
/// their minimum cached at construction.
#[derive(Debug, Clone, PartialEq)]
pub struct Simplex {
    mode: SimplexMode,
    gens: Vec<CVector>,
    det: Cplx,
    dists: Vec<f64>,
    d_min: f64,
}

impl Simplex {
    /// Builds a vertex-mode simplex from `n + 1` unit vectors.
    pub fn from_vertices(gens: Vec<CVector>) -> Result<Self> {
        Self::build(SimplexMode::Vertices, gens, &Tolerances::standard())
    }

    /// [`Self::from_vertices`] with an explicit tolerance record.
    pub fn from_vertices_with(gens: Vec<CVector>, tol: &Tolerances) -> Result<Self> {
        Self::build(SimplexMode::Vertices, gens, tol)
    }

    /// Builds a face-mode simplex from the unit coefficient vectors of
    /// `n + 1` linear forms. The distances come out of the same formula
    /// as in vertex mode; the vertices themselves are recovered by
    /// [`Self::dual_vertices`].
    pub fn from_faces(gens: Vec<CVector>) -> Result<Self> {
        Self::build(SimplexMode::Faces, gens, &Tolerances::standard())
    }

    /// [`Self::from_faces`] with an explicit tolerance record.
    pub fn from_faces_with(gens: Vec<CVector>, tol: &Tolerances) -> Result<Self> {
        Self::build(SimplexMode::Faces, gens, tol)
    }

    fn build(mode: SimplexMode, gens: Vec<CVector>, tol: &Tolerances) -> Result<Self> {
        let m = gens.len();
        if m < 2 {
            return Err(Error::Empty {
                what: "simplex generator list (need at least two)",
            });
        }
        for g in &gens {
            assert_eq!(
                g.dim(),
                m,
                "simplex: {m} generators require dimension {m}, got {}",
                g.dim()
            );
        }
        for (index, g) in gens.iter().enumerate() {
            let norm = herm_norm(g);
            if (norm - 1.0).abs() > tol.unit_norm {
                return Err(Error::NotUnit { index, norm });
            }
        }
        let det = determinant(&CMatrix::from_rows(gens.clone()).expect("square by construction"));
        let abs_det = det.norm();
        if abs_det <= tol.indep {
            return Err(Error::Degenerate {
                what: "|det|",
                value: abs_det,
                threshold: tol.indep,
            });
        }
        let dists: Vec<f64> = (0..m)
            .map(|j| {
                let others = Self::others(&gens, j);
                // Mathematically <= 1; clamp roundoff.
                (abs_det / blade_herm_norm(&wedge(&others))).min(1.0)
            })
            .collect();
        let d_min = dists.iter().copied().fold(f64::INFINITY, f64::min);
        debug_assert!(
            d_min.powi((m - 1) as i32) <= abs_det * (1.0 + tol.sandwich_slack)
                && abs_det <= d_min * (1.0 + tol.sandwich_slack),
            "determinant bounds violated: d_min={d_min}, |D|={abs_det}"
        );
        Ok(Self {
            mode,
            gens,
            det,
            dists,
            d_min,
        })
    }

    fn others(gens: &[CVector], skip: usize) -> Vec<CVector> {
        gens.iter()
            .enumerate()
            .filter(|&(i, _)| i != skip)
            .map(|(_, g)| g.clone())
            .collect()
    }

    /// Projective dimension `n`.
    pub fn n(&self) -> usize {
        self.gens.len() - 1
    }

    pub fn mode(&self) -> SimplexMode {
        self.mode
    }

    pub fn generators(&self) -> &[CVector] {
        &self.gens
    }

    /// Determinant of the generator matrix.
    pub fn det(&self) -> Cplx {
        self.det
    }

    pub fn abs_det(&self) -> f64 {
        self.det.norm()
    }

    /// Distance from each generator to the opposite feature.
    pub fn dists(&self) -> &[f64] {
        &self.dists
    }

    pub fn d_min(&self) -> f64 {
        self.d_min
    }

    /// For each index `j`, the normalized image under the isometry of the
    /// wedge of the other `n` generators. In face mode these represent
    /// the vertices of the simplex, vertex `j` being the one opposite
    /// face `j`.
    pub fn dual_vertices(&self) -> Vec<ProjPoint> {
        (0..self.gens.len())
            .map(|j| {
                let others = Self::others(&self.gens, j);
                let rep = normalize(&l_map(&wedge(&others)))
                    .expect("wedge norm bounded below by |det| > 0");
                ProjPoint::new(rep).expect("normalized representative")
            })
            .collect()
    }
}

/// Margins of the determinant bounds for one simplex, plus the number of
/// distances tied with the minimum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InequalityReport {
    /// `|D| - d_min^n`; nonnegative up to roundoff slack.
    pub lower_margin: f64,
    /// `d_min - |D|`; nonnegative up to roundoff slack.
    pub upper_margin: f64,
    /// Number of indices whose distance is within the tie band of `d_min`.
    pub near_equality_count: usize,
}

/// Evaluates both determinant bounds on a simplex.
pub fn check_inequalities(sx: &Simplex) -> InequalityReport {
    check_inequalities_with(sx, &Tolerances::standard())
}

/// [`check_inequalities`] with an explicit tolerance record.
pub fn check_inequalities_with(sx: &Simplex, tol: &Tolerances) -> InequalityReport {
    let abs_det = sx.abs_det();
    let d_min = sx.d_min();
    let near_equality_count = sx
        .dists()
        .iter()
        .filter(|&&d| d <= d_min + tol.near_equality)
        .count();
    InequalityReport {
        lower_margin: abs_det - d_min.powi(sx.n() as i32),
        upper_margin: d_min - abs_det,
        near_equality_count,
    }
}

/// Side length parameter of the isosceles triangle family in `CP^2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IsoscelesParams {
    s: f64,
}

impl IsoscelesParams {
    /// Requires `0 < s <= 1`.
    pub fn new(s: f64) -> Result<Self> {
        if !(s > 0.0 && s <= 1.0) {
            return Err(Error::Parameter {
                name: "s",
                value: s,
                range: "(0, 1]",
            });
        }
        Ok(Self { s })
    }

    pub fn s(&self) -> f64 {
        self.s
    }
}

/// Dimension and common Hermitian pairing magnitude of a regular simplex.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegularParams {
    n: usize,
    c: f64,
}

impl RegularParams {
    /// Requires `n >= 1` and `0 <= c < 1`.
    pub fn new(n: usize, c: f64) -> Result<Self> {
        if n == 0 {
            return Err(Error::Parameter {
                name: "n",
                value: 0.0,
                range: ">= 1",
            });
        }
        if !(0.0..1.0).contains(&c) {
            return Err(Error::Parameter {
                name: "c",
                value: c,
                range: "[0, 1)",
            });
        }
        Ok(Self { n, c })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn c(&self) -> f64 {
        self.c
    }
}

/// The isosceles triangle with vertices
/// `[sqrt((1-s^2)/2), sqrt((1-s^2)/2), s]`, `e_0`, `e_1` in `C^3`.
///
/// Satisfies `|D| = d_min = s` exactly, so the family traces the upper
/// bound line `|D| = d_min`.
pub fn make_isosceles(params: &IsoscelesParams) -> Result<Simplex> {
    let s = params.s;
    let q = ((1.0 - s * s) / 2.0).sqrt();
    let apex = CVector::from_reals(&[q, q, s]).expect("finite entries");
    Simplex::from_vertices(vec![
        apex,
        CVector::standard_basis(3, 0),
        CVector::standard_basis(3, 1),
    ])
}

/// A regular simplex: `n + 1` unit vectors whose Hermitian Gram matrix is
/// `(1-c) I + c J`, realized by the symmetric square root of that matrix.
///
/// Its determinant modulus and common distance follow the closed forms
/// [`regular_abs_det`] and [`regular_d_min`].
pub fn make_regular(params: &RegularParams) -> Result<Simplex> {
    let (n, c) = (params.n, params.c);
    let m = n + 1;
    // sqrt((1-c) I + c J) = a I + b J with the same eigenvectors.
    let a = (1.0 - c).sqrt();
    let b = ((1.0 + n as f64 * c).sqrt() - a) / m as f64;
    let gens = (0..m)
        .map(|i| {
            CVector::new_unchecked(
                (0..m)
                    .map(|j| Cplx::new(if i == j { a + b } else { b }, 0.0))
                    .collect(),
            )
        })
        .collect();
    Simplex::from_vertices(gens)
}

/// Closed form `sqrt((1-c)^n (1+nc))` for the determinant modulus of the
/// regular simplex.
pub fn regular_abs_det(n: usize, c: f64) -> f64 {
    ((1.0 - c).powi(n as i32) * (1.0 + n as f64 * c)).sqrt()
}

/// Closed form `sqrt((1-c)(1+nc) / (1+(n-1)c))` for every distance of the
/// regular simplex.
pub fn regular_d_min(n: usize, c: f64) -> f64 {
    ((1.0 - c) * (1.0 + n as f64 * c) / (1.0 + (n as f64 - 1.0) * c)).sqrt()
}

/// Inverts [`regular_abs_det`] in `c` by bisection; the map is strictly
/// decreasing from 1 to 0 on `[0, 1)`.
pub fn regular_c_for_abs_det(n: usize, target: f64) -> Result<f64> {
    if !(target > 0.0 && target <= 1.0) {
        return Err(Error::Parameter {
            name: "target",
            value: target,
            range: "(0, 1]",
        });
    }
    let mut lo = 0.0_f64;
    let mut hi = 1.0_f64 - f64::EPSILON;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if regular_abs_det(n, mid) >= target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exterior::hadamard_report;

    fn cv(entries: &[(f64, f64)]) -> CVector {
        CVector::new(entries.iter().map(|&(re, im)| Cplx::new(re, im)).collect()).unwrap()
    }

    fn basis_point(m: usize, i: usize) -> ProjPoint {
        ProjPoint::new(CVector::standard_basis(m, i)).unwrap()
    }

    #[test]
    fn point_distance_is_phase_invariant() {
        let u = normalize(&cv(&[(0.3, 0.4), (-0.5, 0.1), (0.2, 0.6)])).unwrap();
        let theta = 1.234_f64;
        let rotated = u.scaled(Cplx::new(theta.cos(), theta.sin()));
        let p = ProjPoint::new(u).unwrap();
        let q = ProjPoint::new(rotated).unwrap();
        assert!(fs_point_distance(&p, &q) <= 1e-12);
    }

    #[test]
    fn orthogonal_points_are_at_distance_one() {
        let d = fs_point_distance(&basis_point(3, 0), &basis_point(3, 1));
        assert!((d - 1.0).abs() < 1e-15);
    }

    #[test]
    fn isosceles_side_lengths() {
        for &s in &[0.25, 0.6, 0.9] {
            let sx = make_isosceles(&IsoscelesParams::new(s).unwrap()).unwrap();
            let pts: Vec<ProjPoint> = sx
                .generators()
                .iter()
                .map(|g| ProjPoint::new(g.clone()).unwrap())
                .collect();
            let leg = ((1.0 + s * s) / 2.0).sqrt();
            let mut sides = [
                fs_point_distance(&pts[1], &pts[2]),
                fs_point_distance(&pts[0], &pts[1]),
                fs_point_distance(&pts[0], &pts[2]),
            ];
            sides.sort_by(f64::total_cmp);
            let mut expected = [1.0, leg, leg];
            expected.sort_by(f64::total_cmp);
            for (got, want) in sides.iter().zip(&expected) {
                assert!((got - want).abs() <= 1e-12, "s={s}");
            }
        }
    }

    #[test]
    fn point_hyperplane_distance_closed_form() {
        let u = basis_point(3, 0);
        let v = ProjHyperplane::new(CVector::standard_basis(3, 0)).unwrap();
        assert!((fs_point_hyperplane_distance(&u, &v) - 1.0).abs() < 1e-15);

        // A point in the hyperplane: v . x = 0.
        let x = basis_point(3, 1);
        assert!(fs_point_hyperplane_distance(&x, &v) < 1e-15);
    }

    #[test]
    fn vertex_opposite_distance_orthonormal_case() {
        let a = CVector::standard_basis(4, 0);
        let bs: Vec<CVector> = (1..4).map(|i| CVector::standard_basis(4, i)).collect();
        let d = vertex_opposite_distance(&a, &bs).unwrap();
        assert!((d - 1.0).abs() < 1e-15);
    }

    #[test]
    fn vertex_opposite_distance_matches_isosceles_determinant() {
        let s = 0.6;
        let sx = make_isosceles(&IsoscelesParams::new(s).unwrap()).unwrap();
        let gens = sx.generators();
        let d = vertex_opposite_distance(&gens[0], &gens[1..]).unwrap();
        assert!((d - s).abs() <= 1e-15);
        // Equality d = |det| holds because the opposite side is
        // Hermitian-orthonormal.
        let det = box_det(&gens[0], &gens[1..]).norm();
        assert!((d - det).abs() <= 1e-15);
        assert!(hadamard_report(&gens[1..]).equality);
    }

    #[test]
    fn vertex_opposite_distance_equality_requires_orthogonal_span() {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let a = CVector::standard_basis(3, 2);
        let bs = [cv(&[(1.0, 0.0), (0.0, 0.0), (0.0, 0.0)]), cv(&[(s, 0.0), (s, 0.0), (0.0, 0.0)])];
        let d = vertex_opposite_distance(&a, &bs).unwrap();
        let det = box_det(&a, &bs).norm();
        assert!(d > det + 1e-3);
        assert!(!hadamard_report(&bs).equality);
    }

    #[test]
    fn vertex_opposite_distance_rejects_non_unit_input() {
        let a = cv(&[(2.0, 0.0), (0.0, 0.0), (0.0, 0.0)]);
        let bs: Vec<CVector> = (1..3).map(|i| CVector::standard_basis(3, i)).collect();
        assert!(matches!(
            vertex_opposite_distance(&a, &bs),
            Err(Error::NotUnit { index: 0, .. })
        ));
    }

    #[test]
    fn simplex_from_standard_basis() {
        let gens: Vec<CVector> = (0..4).map(|i| CVector::standard_basis(4, i)).collect();
        let sx = Simplex::from_vertices(gens).unwrap();
        assert_eq!(sx.n(), 3);
        assert!((sx.abs_det() - 1.0).abs() < 1e-15);
        assert!((sx.d_min() - 1.0).abs() < 1e-15);
        for &d in sx.dists() {
            assert!((d - 1.0).abs() < 1e-15);
        }
        let report = check_inequalities(&sx);
        assert!(report.lower_margin.abs() < 1e-12);
        assert!(report.upper_margin.abs() < 1e-12);
        assert_eq!(report.near_equality_count, 4);
    }

    #[test]
    fn simplex_isosceles_example_values() {
        let sx = make_isosceles(&IsoscelesParams::new(0.6).unwrap()).unwrap();
        assert!((sx.abs_det() - 0.6).abs() <= 1e-15);
        assert!((sx.d_min() - 0.6).abs() <= 1e-15);
        let report = check_inequalities(&sx);
        assert!(report.upper_margin.abs() <= 1e-12);
    }

    #[test]
    fn simplex_rejects_degenerate_generators() {
        let v = normalize(&cv(&[(1.0, 0.0), (1.0, 0.0), (0.0, 0.0)])).unwrap();
        let gens = vec![v.clone(), v, CVector::standard_basis(3, 2)];
        assert!(matches!(
            Simplex::from_vertices(gens),
            Err(Error::Degenerate { .. })
        ));
    }

    #[test]
    fn simplex_rejects_non_unit_generators() {
        let gens = vec![
            cv(&[(0.5, 0.0), (0.0, 0.0), (0.0, 0.0)]),
            CVector::standard_basis(3, 1),
            CVector::standard_basis(3, 2),
        ];
        assert!(matches!(
            Simplex::from_vertices(gens),
            Err(Error::NotUnit { index: 0, .. })
        ));
    }

    #[test]
    fn face_mode_distances_match_vertex_mode() {
        let gens = vec![
            normalize(&cv(&[(0.4, 0.2), (-0.6, 0.1), (0.3, 0.5)])).unwrap(),
            normalize(&cv(&[(0.9, -0.3), (0.2, 0.7), (-0.1, 0.4)])).unwrap(),
            normalize(&cv(&[(-0.2, 0.5), (0.8, 0.0), (0.6, -0.2)])).unwrap(),
        ];
        let faces = Simplex::from_faces(gens.clone()).unwrap();
        let vertices = Simplex::from_vertices(gens).unwrap();
        assert_eq!(faces.mode(), SimplexMode::Faces);
        for (a, b) in faces.dists().iter().zip(vertices.dists()) {
            assert!((a - b).abs() <= 1e-12 * (1.0 + b.abs()));
        }
    }

    #[test]
    fn face_mode_distance_matches_dual_vertex_distance() {
        let gens = vec![
            normalize(&cv(&[(0.7, 0.1), (0.2, -0.4), (0.5, 0.3)])).unwrap(),
            normalize(&cv(&[(-0.3, 0.6), (0.9, 0.2), (0.1, -0.5)])).unwrap(),
            normalize(&cv(&[(0.2, -0.2), (0.4, 0.8), (-0.6, 0.1)])).unwrap(),
        ];
        let sx = Simplex::from_faces(gens.clone()).unwrap();
        let duals = sx.dual_vertices();
        for j in 0..gens.len() {
            let face = ProjHyperplane::new(gens[j].clone()).unwrap();
            let d = fs_point_hyperplane_distance(&duals[j], &face);
            assert!(
                (d - sx.dists()[j]).abs() <= 1e-10 * (1.0 + sx.dists()[j]),
                "face {j}"
            );
        }
    }

    #[test]
    fn standard_basis_faces_are_self_dual() {
        let gens: Vec<CVector> = (0..3).map(|i| CVector::standard_basis(3, i)).collect();
        let sx = Simplex::from_faces(gens).unwrap();
        for &d in sx.dists() {
            assert!((d - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn isosceles_at_s_one_is_orthonormal() {
        let sx = make_isosceles(&IsoscelesParams::new(1.0).unwrap()).unwrap();
        let apex = &sx.generators()[0];
        assert!((apex[2] - Cplx::new(1.0, 0.0)).norm() < 1e-15);
        assert!(apex[0].norm() < 1e-15 && apex[1].norm() < 1e-15);
        for &d in sx.dists() {
            assert!((d - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn isosceles_params_reject_out_of_range() {
        assert!(IsoscelesParams::new(0.0).is_err());
        assert!(IsoscelesParams::new(-0.5).is_err());
        assert!(IsoscelesParams::new(1.5).is_err());
        assert!(IsoscelesParams::new(f64::NAN).is_err());
    }

    #[test]
    fn regular_simplex_at_c_zero_is_orthonormal_up_to_unitary() {
        let sx = make_regular(&RegularParams::new(3, 0.0).unwrap()).unwrap();
        assert!((sx.abs_det() - 1.0).abs() <= 1e-12);
        assert!((sx.d_min() - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn regular_simplex_matches_closed_forms() {
        let sx = make_regular(&RegularParams::new(2, 0.5).unwrap()).unwrap();
        assert!((sx.abs_det() - 0.5_f64.sqrt()).abs() <= 1e-12);
        assert!((sx.d_min() - (2.0_f64 / 3.0).sqrt()).abs() <= 1e-12);
        // All pairwise Hermitian pairings equal c.
        let gens = sx.generators();
        for i in 0..3 {
            for j in 0..3 {
                if i != j {
                    let p = dot(&gens[i], &gens[j].conj()).norm();
                    assert!((p - 0.5).abs() <= 1e-12);
                }
            }
        }
        let ratio = sx.abs_det() / (sx.d_min() * sx.d_min());
        assert!((ratio - 1.5 / 2.0_f64.sqrt()).abs() <= 1e-10);
    }

    #[test]
    fn regular_simplex_strict_lower_bound_for_positive_c() {
        for &c in &[0.1, 0.4, 0.8] {
            let sx = make_regular(&RegularParams::new(2, c).unwrap()).unwrap();
            assert!(sx.d_min().powi(2) < sx.abs_det());
        }
    }

    #[test]
    fn regular_params_reject_out_of_range() {
        assert!(RegularParams::new(0, 0.5).is_err());
        assert!(RegularParams::new(2, 1.0).is_err());
        assert!(RegularParams::new(2, -0.1).is_err());
    }

    #[test]
    fn regular_inverse_recovers_c() {
        for n in 1..=4 {
            for k in 1..=9 {
                let c = k as f64 / 10.0;
                let target = regular_abs_det(n, c);
                let back = regular_c_for_abs_det(n, target).unwrap();
                assert!((back - c).abs() <= 1e-12, "n={n} c={c}");
            }
        }
    }

    #[test]
    fn normalize_rejects_zero_vector() {
        assert!(matches!(
            normalize(&CVector::zero(3)),
            Err(Error::Degenerate { .. })
        ));
    }

    #[test]
    fn proj_point_rejects_non_unit_representative() {
        assert!(matches!(
            ProjPoint::new(cv(&[(0.5, 0.0), (0.0, 0.0)])),
            Err(Error::NotUnit { .. })
        ));
    }
}
