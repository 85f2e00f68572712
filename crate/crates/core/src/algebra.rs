//! Complex scalars, dense vectors, square matrices, the bilinear dot
//! product, Hermitian norms, and determinants.
//!
//! The dot product here is `sum a_i b_i` without conjugation; Hermitian
//! pairings are spelled out explicitly as `dot(a, &b.conj())`.

use std::ops::Index;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Complex scalar in double precision.
pub type Cplx = Complex64;

/// Largest size accepted by [`determinant_cofactor`].
pub const COFACTOR_MAX_SIZE: usize = 6;

/// Dense complex vector of fixed positive dimension.
///
/// All stored components are finite; the checked constructors reject NaN
/// and infinities.
#[derive(Debug, Clone, PartialEq)]
pub struct CVector {
    coeffs: Vec<Cplx>,
}

impl CVector {
    /// Builds a vector, rejecting empty input and non-finite entries.
    pub fn new(coeffs: Vec<Cplx>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Empty { what: "vector" });
        }
        for (index, c) in coeffs.iter().enumerate() {
            if !c.re.is_finite() || !c.im.is_finite() {
                return Err(Error::NonFinite { index });
            }
        }
        Ok(Self { coeffs })
    }

    /// Builds a vector from real parts only.
    pub fn from_reals(values: &[f64]) -> Result<Self> {
        Self::new(values.iter().map(|&re| Cplx::new(re, 0.0)).collect())
    }

    pub(crate) fn new_unchecked(coeffs: Vec<Cplx>) -> Self {
        debug_assert!(!coeffs.is_empty());
        Self { coeffs }
    }

    /// The zero vector of the given dimension.
    pub fn zero(dim: usize) -> Self {
        assert!(dim > 0, "vector dimension must be positive");
        Self {
            coeffs: vec![Cplx::new(0.0, 0.0); dim],
        }
    }

    /// The standard basis vector `e_index`.
    pub fn standard_basis(dim: usize, index: usize) -> Self {
        assert!(
            index < dim,
            "basis index {index} out of range for dimension {dim}"
        );
        let mut v = Self::zero(dim);
        v.coeffs[index] = Cplx::new(1.0, 0.0);
        v
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Cplx] {
        &self.coeffs
    }

    /// Componentwise complex conjugate.
    pub fn conj(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(Cplx::conj).collect(),
        }
    }

    /// This vector scaled by `alpha`.
    pub fn scaled(&self, alpha: Cplx) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c * alpha).collect(),
        }
    }

    /// In-place `self += alpha * other`.
    ///
    /// # Panics
    /// Panics if the dimensions differ.
    pub fn add_scaled(&mut self, other: &Self, alpha: Cplx) {
        assert_eq!(
            self.dim(),
            other.dim(),
            "add_scaled: dimension mismatch ({} vs {})",
            self.dim(),
            other.dim()
        );
        for (s, o) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *s += alpha * o;
        }
    }
}

impl Index<usize> for CVector {
    type Output = Cplx;

    fn index(&self, index: usize) -> &Cplx {
        &self.coeffs[index]
    }
}

/// Square complex matrix stored as rows.
#[derive(Debug, Clone, PartialEq)]
pub struct CMatrix {
    rows: Vec<CVector>,
}

impl CMatrix {
    /// Builds a square matrix from its rows.
    pub fn from_rows(rows: Vec<CVector>) -> Result<Self> {
        let size = rows.len();
        if size == 0 {
            return Err(Error::Empty { what: "matrix" });
        }
        for (row, r) in rows.iter().enumerate() {
            if r.dim() != size {
                return Err(Error::NotSquare {
                    rows: size,
                    row,
                    len: r.dim(),
                });
            }
        }
        Ok(Self { rows })
    }

    /// The identity matrix of the given size.
    pub fn identity(size: usize) -> Self {
        assert!(size > 0, "matrix size must be positive");
        let rows = (0..size)
            .map(|i| CVector::standard_basis(size, i))
            .collect();
        Self { rows }
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[CVector] {
        &self.rows
    }

    pub fn get(&self, row: usize, col: usize) -> Cplx {
        self.rows[row][col]
    }
}

/// Bilinear dot product `sum a_i b_i` (no conjugation).
///
/// # Panics
/// Panics if the dimensions differ.
pub fn dot(a: &CVector, b: &CVector) -> Cplx {
    assert_eq!(
        a.dim(),
        b.dim(),
        "dot: dimension mismatch ({} vs {})",
        a.dim(),
        b.dim()
    );
    a.coeffs
        .iter()
        .zip(&b.coeffs)
        .map(|(x, y)| x * y)
        .sum()
}

/// Hermitian norm `sqrt(sum |a_i|^2)`.
pub fn herm_norm(a: &CVector) -> f64 {
    a.coeffs.iter().map(Cplx::norm_sqr).sum::<f64>().sqrt()
}

/// Matrix-vector product `m * v`.
///
/// # Panics
/// Panics if the dimensions differ.
pub fn mat_vec(m: &CMatrix, v: &CVector) -> CVector {
    assert_eq!(
        m.size(),
        v.dim(),
        "mat_vec: dimension mismatch ({} vs {})",
        m.size(),
        v.dim()
    );
    CVector::new_unchecked(m.rows.iter().map(|row| dot(row, v)).collect())
}

/// Determinant by row elimination with partial pivoting on modulus.
///
/// Singular matrices are not an error at this layer; they produce a value
/// of modulus close to zero and callers enforce their own independence
/// thresholds.
pub fn determinant(m: &CMatrix) -> Cplx {
    let mut rows: Vec<Vec<Cplx>> = m.rows.iter().map(|r| r.coeffs.clone()).collect();
    det_pivoted_in_place(&mut rows)
}

/// Determinant by recursive cofactor expansion along the first row.
///
/// Independent oracle for [`determinant`]; factorial cost, so inputs are
/// limited to size [`COFACTOR_MAX_SIZE`].
pub fn determinant_cofactor(m: &CMatrix) -> Result<Cplx> {
    if m.size() > COFACTOR_MAX_SIZE {
        return Err(Error::OracleSize {
            size: m.size(),
            max: COFACTOR_MAX_SIZE,
        });
    }
    let rows: Vec<Vec<Cplx>> = m.rows.iter().map(|r| r.coeffs.clone()).collect();
    Ok(det_cofactor_rows(&rows))
}

pub(crate) fn det_pivoted_in_place(rows: &mut [Vec<Cplx>]) -> Cplx {
    let n = rows.len();
    let mut det = Cplx::new(1.0, 0.0);
    for col in 0..n {
        let (pivot_row, pivot_mag) = (col..n)
            .map(|r| (r, rows[r][col].norm_sqr()))
            .max_by(|a, b| a.1.total_cmp(&b.1))
            .expect("non-empty pivot range");
        if pivot_mag == 0.0 {
            return Cplx::new(0.0, 0.0);
        }
        if pivot_row != col {
            rows.swap(pivot_row, col);
            det = -det;
        }
        let pivot = rows[col][col];
        det *= pivot;
        for r in col + 1..n {
            let factor = rows[r][col] / pivot;
            if factor == Cplx::new(0.0, 0.0) {
                continue;
            }
            for c in col + 1..n {
                let sub = factor * rows[col][c];
                rows[r][c] -= sub;
            }
        }
    }
    det
}

pub(crate) fn det_cofactor_rows(rows: &[Vec<Cplx>]) -> Cplx {
    let n = rows.len();
    if n == 1 {
        return rows[0][0];
    }
    let mut acc = Cplx::new(0.0, 0.0);
    let mut sign = 1.0;
    for (j, &lead) in rows[0].iter().enumerate() {
        let minor: Vec<Vec<Cplx>> = rows[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, &v)| v)
                    .collect()
            })
            .collect();
        acc += lead * det_cofactor_rows(&minor) * sign;
        sign = -sign;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cvec(entries: &[(f64, f64)]) -> CVector {
        CVector::new(entries.iter().map(|&(re, im)| Cplx::new(re, im)).collect()).unwrap()
    }

    #[test]
    fn dot_of_basis_vector_with_itself_is_one() {
        let e0 = CVector::standard_basis(3, 0);
        assert_eq!(dot(&e0, &e0), Cplx::new(1.0, 0.0));
    }

    #[test]
    fn dot_is_bilinear_not_hermitian() {
        // [i, 0] . [i, 0] = -1 under the bilinear convention.
        let v = cvec(&[(0.0, 1.0), (0.0, 0.0)]);
        let d = dot(&v, &v);
        assert!((d.re + 1.0).abs() < 1e-15 && d.im.abs() < 1e-15);
    }

    #[test]
    fn dot_of_integer_vectors() {
        let a = CVector::from_reals(&[1.0, 2.0, 3.0]).unwrap();
        let b = CVector::from_reals(&[4.0, 5.0, 6.0]).unwrap();
        assert_eq!(dot(&a, &b), Cplx::new(32.0, 0.0));
    }

    #[test]
    #[should_panic(expected = "dimension mismatch")]
    fn dot_panics_on_dimension_mismatch() {
        let a = CVector::zero(2);
        let b = CVector::zero(3);
        let _ = dot(&a, &b);
    }

    #[test]
    fn herm_norm_examples() {
        assert_eq!(herm_norm(&CVector::zero(3)), 0.0);
        let i0 = cvec(&[(0.0, 1.0), (0.0, 0.0), (0.0, 0.0)]);
        assert!((herm_norm(&i0) - 1.0).abs() < 1e-15);
        let v = cvec(&[(3.0, 0.0), (0.0, 4.0)]);
        assert!((herm_norm(&v) - 5.0).abs() < 1e-15);
    }

    #[test]
    fn vector_constructor_rejects_bad_input() {
        assert!(matches!(
            CVector::new(vec![]),
            Err(Error::Empty { .. })
        ));
        assert!(matches!(
            CVector::new(vec![Cplx::new(f64::NAN, 0.0)]),
            Err(Error::NonFinite { index: 0 })
        ));
        assert!(matches!(
            CVector::new(vec![Cplx::new(0.0, f64::INFINITY)]),
            Err(Error::NonFinite { index: 0 })
        ));
    }

    #[test]
    fn matrix_constructor_rejects_ragged_rows() {
        let rows = vec![CVector::zero(2), CVector::zero(3)];
        assert!(matches!(
            CMatrix::from_rows(rows),
            Err(Error::NotSquare { row: 1, .. })
        ));
    }

    #[test]
    fn determinant_of_identity_is_one() {
        let d = determinant(&CMatrix::identity(4));
        assert!((d - Cplx::new(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn determinant_of_repeated_row_is_zero() {
        let row = cvec(&[(1.0, 2.0), (-0.5, 0.3), (4.0, 0.0)]);
        let other = cvec(&[(0.0, 1.0), (2.0, -1.0), (1.0, 1.0)]);
        let m = CMatrix::from_rows(vec![row.clone(), other, row]).unwrap();
        assert!(determinant(&m).norm() <= 1e-12);
    }

    #[test]
    fn cofactor_closed_forms() {
        let a = Cplx::new(2.0, -1.0);
        let m1 = CMatrix::from_rows(vec![CVector::new(vec![a]).unwrap()]).unwrap();
        assert_eq!(determinant_cofactor(&m1).unwrap(), a);

        let b = Cplx::new(0.5, 3.0);
        let c = Cplx::new(-1.0, 1.0);
        let d = Cplx::new(4.0, 0.25);
        let m2 = CMatrix::from_rows(vec![
            CVector::new(vec![a, b]).unwrap(),
            CVector::new(vec![c, d]).unwrap(),
        ])
        .unwrap();
        let expected = a * d - b * c;
        assert!((determinant_cofactor(&m2).unwrap() - expected).norm() < 1e-15);
    }

    #[test]
    fn cofactor_of_three_cycle_permutation_is_one() {
        // Rows e_1, e_2, e_0: an even permutation.
        let m = CMatrix::from_rows(vec![
            CVector::standard_basis(3, 1),
            CVector::standard_basis(3, 2),
            CVector::standard_basis(3, 0),
        ])
        .unwrap();
        assert_eq!(determinant_cofactor(&m).unwrap(), Cplx::new(1.0, 0.0));
    }

    #[test]
    fn cofactor_rejects_large_matrices() {
        let m = CMatrix::identity(7);
        assert!(matches!(
            determinant_cofactor(&m),
            Err(Error::OracleSize { size: 7, max: 6 })
        ));
    }

    #[test]
    fn pivoted_determinant_matches_cofactor_on_fixed_input() {
        let m = CMatrix::from_rows(vec![
            cvec(&[(1.0, 1.0), (2.0, -0.5), (0.0, 3.0)]),
            cvec(&[(-1.0, 0.0), (0.5, 0.5), (2.0, 2.0)]),
            cvec(&[(3.0, -2.0), (1.0, 0.0), (-0.25, 1.0)]),
        ])
        .unwrap();
        let lu = determinant(&m);
        let co = determinant_cofactor(&m).unwrap();
        assert!((lu - co).norm() <= 1e-12 * (1.0 + co.norm()));
    }
}
