//! Exterior powers of `C^m`: blades, wedge products, the orthonormal-basis
//! inner product, Gramian determinants, and the Hadamard-type bound.
//!
//! Coefficients of a grade-`k` blade are indexed by the k-subsets of
//! `{0, ..., m-1}` in lexicographic order.

use num_complex::Complex64 as Cplx;

use crate::algebra::{det_cofactor_rows, det_pivoted_in_place, dot, herm_norm, CMatrix, CVector};
use crate::error::{Error, Result};
use crate::tol::Tolerances;

/// Minors up to this size go through cofactor expansion; larger ones use
/// pivoted elimination. Keeping both paths live gives an internal
/// cross-check between the two determinant routines.
const MINOR_COFACTOR_MAX: usize = 4;

/// Binomial coefficient `C(n, k)`; zero when `k > n`.
pub(crate) fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut c: u128 = 1;
    for i in 1..=k {
        c = c * (n - k + i) as u128 / i as u128;
    }
    usize::try_from(c).expect("exterior power too large to index")
}

/// Lexicographic rank of a strictly increasing `k`-subset of `{0..m-1}`.
pub(crate) fn subset_rank(m: usize, subset: &[usize]) -> usize {
    let k = subset.len();
    let mut rank = 0;
    let mut prev: isize = -1;
    for (j, &c) in subset.iter().enumerate() {
        debug_assert!(c < m && c as isize > prev);
        for skipped in (prev + 1) as usize..c {
            rank += binomial(m - 1 - skipped, k - 1 - j);
        }
        prev = c as isize;
    }
    rank
}

/// Advances `subset` to its lexicographic successor among the k-subsets of
/// `{0..m-1}`; returns false once the last subset is reached.
pub(crate) fn next_subset(subset: &mut [usize], m: usize) -> bool {
    let k = subset.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if subset[i] < m - k + i {
            subset[i] += 1;
            for j in i + 1..k {
                subset[j] = subset[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Element of the `grade`-th exterior power of `C^ambient_dim`, stored as
/// dense coefficients over lexicographically ordered subsets.
#[derive(Debug, Clone, PartialEq)]
pub struct Blade {
    ambient_dim: usize,
    grade: usize,
    coeffs: Vec<Cplx>,
}

impl Blade {
    /// Builds a blade from explicit coefficients.
    pub fn new(ambient_dim: usize, grade: usize, coeffs: Vec<Cplx>) -> Result<Self> {
        if ambient_dim == 0 {
            return Err(Error::Empty { what: "blade ambient space" });
        }
        if grade > ambient_dim {
            return Err(Error::Parameter {
                name: "grade",
                value: grade as f64,
                range: "0 <= grade <= ambient dimension",
            });
        }
        let expected = binomial(ambient_dim, grade);
        if coeffs.len() != expected {
            return Err(Error::Parameter {
                name: "coefficient count",
                value: coeffs.len() as f64,
                range: "C(ambient_dim, grade) entries",
            });
        }
        for (index, c) in coeffs.iter().enumerate() {
            if !c.re.is_finite() || !c.im.is_finite() {
                return Err(Error::NonFinite { index });
            }
        }
        Ok(Self {
            ambient_dim,
            grade,
            coeffs,
        })
    }

    pub(crate) fn new_unchecked(ambient_dim: usize, grade: usize, coeffs: Vec<Cplx>) -> Self {
        debug_assert_eq!(coeffs.len(), binomial(ambient_dim, grade));
        Self {
            ambient_dim,
            grade,
            coeffs,
        }
    }

    /// The zero blade of the given grade.
    pub fn zero(ambient_dim: usize, grade: usize) -> Result<Self> {
        let len = if ambient_dim == 0 {
            0
        } else {
            binomial(ambient_dim, grade)
        };
        Self::new(ambient_dim, grade, vec![Cplx::new(0.0, 0.0); len])
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn grade(&self) -> usize {
        self.grade
    }

    /// Coefficients over lexicographically ordered subsets.
    pub fn coeffs(&self) -> &[Cplx] {
        &self.coeffs
    }

    /// Coefficient on a specific strictly increasing subset.
    ///
    /// # Panics
    /// Panics if the subset is not a strictly increasing sequence of
    /// `grade` indices below the ambient dimension.
    pub fn coeff(&self, subset: &[usize]) -> Cplx {
        assert_eq!(
            subset.len(),
            self.grade,
            "coeff: subset size {} does not match grade {}",
            subset.len(),
            self.grade
        );
        assert!(
            subset.windows(2).all(|w| w[0] < w[1])
                && subset.last().is_none_or(|&c| c < self.ambient_dim),
            "coeff: subset must be strictly increasing and within range"
        );
        self.coeffs[subset_rank(self.ambient_dim, subset)]
    }
}

/// Wedge product of `k` vectors in `C^m`.
///
/// The coefficient on the subset `{i_1 < ... < i_k}` is the determinant of
/// the k-by-k matrix whose `(r, c)` entry is `vs[r][i_c]`.
///
/// # Panics
/// Panics if the list is empty, if the vectors do not share a dimension,
/// or if there are more vectors than the dimension.
pub fn wedge(vs: &[CVector]) -> Blade {
    let k = vs.len();
    assert!(k >= 1, "wedge: grade must be at least 1");
    let m = vs[0].dim();
    for v in vs {
        assert_eq!(
            v.dim(),
            m,
            "wedge: mixed dimensions ({} vs {m})",
            v.dim()
        );
    }
    assert!(k <= m, "wedge: grade {k} exceeds ambient dimension {m}");

    let count = binomial(m, k);
    let mut coeffs = Vec::with_capacity(count);
    let mut subset: Vec<usize> = (0..k).collect();
    loop {
        coeffs.push(minor_det(vs, &subset));
        if !next_subset(&mut subset, m) {
            break;
        }
    }
    Blade::new_unchecked(m, k, coeffs)
}

fn minor_det(vs: &[CVector], cols: &[usize]) -> Cplx {
    let k = vs.len();
    let mut rows: Vec<Vec<Cplx>> = vs
        .iter()
        .map(|v| cols.iter().map(|&c| v[c]).collect())
        .collect();
    if k <= MINOR_COFACTOR_MAX {
        det_cofactor_rows(&rows)
    } else {
        det_pivoted_in_place(&mut rows)
    }
}

/// Bilinear pairing `sum_S x_S y_S` of two blades — the extension of the
/// vector dot product under which the subset basis is orthonormal.
///
/// # Panics
/// Panics if the ambient dimensions or grades differ.
pub fn blade_dot(x: &Blade, y: &Blade) -> Cplx {
    assert_eq!(
        (x.ambient_dim, x.grade),
        (y.ambient_dim, y.grade),
        "blade_dot: ambient/grade mismatch"
    );
    x.coeffs
        .iter()
        .zip(&y.coeffs)
        .map(|(a, b)| a * b)
        .sum()
}

/// Hermitian norm `sqrt(sum_S |x_S|^2)` of a blade.
pub fn blade_herm_norm(x: &Blade) -> f64 {
    x.coeffs.iter().map(Cplx::norm_sqr).sum::<f64>().sqrt()
}

/// Determinant of the Gramian matrix with entries `vs[i] . ws[j]`, the
/// second family conjugated first when the flag is set.
///
/// With the flag set and `ws = vs` this equals the squared Hermitian norm
/// of `wedge(vs)`.
///
/// # Panics
/// Panics if the families are empty or do not share counts and dimensions.
pub fn gram_det(vs: &[CVector], ws: &[CVector], conjugate_second: bool) -> Cplx {
    assert!(!vs.is_empty(), "gram_det: empty family");
    assert_eq!(vs.len(), ws.len(), "gram_det: family size mismatch");
    let m = vs[0].dim();
    for v in vs.iter().chain(ws) {
        assert_eq!(v.dim(), m, "gram_det: mixed dimensions");
    }
    let ws: Vec<CVector> = if conjugate_second {
        ws.iter().map(CVector::conj).collect()
    } else {
        ws.to_vec()
    };
    let rows: Vec<CVector> = vs
        .iter()
        .map(|v| CVector::new_unchecked(ws.iter().map(|w| dot(v, w)).collect()))
        .collect();
    let gram = CMatrix::from_rows(rows).expect("square by construction");
    crate::algebra::determinant(&gram)
}

/// Outcome of the Hadamard-type comparison `|v_1 ^ ... ^ v_k| <= prod |v_i|`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HadamardReport {
    /// Hermitian norm of the wedge of the family.
    pub lhs: f64,
    /// Product of the Hermitian norms of the family.
    pub rhs: f64,
    /// True when the bound is attained: some vector is zero, or every
    /// Hermitian cross pairing is below the orthogonality threshold.
    pub equality: bool,
}

/// Compares the wedge norm of a family against the product of its norms.
///
/// # Panics
/// Panics if the family is empty or mixes dimensions.
pub fn hadamard_report(vs: &[CVector]) -> HadamardReport {
    hadamard_report_with(vs, Tolerances::standard().orth)
}

/// [`hadamard_report`] with an explicit orthogonality threshold.
pub fn hadamard_report_with(vs: &[CVector], tol_orth: f64) -> HadamardReport {
    assert!(!vs.is_empty(), "hadamard_report: empty family");
    let m = vs[0].dim();
    for v in vs {
        assert_eq!(v.dim(), m, "hadamard_report: mixed dimensions");
    }

    let rhs = vs.iter().map(herm_norm).product();
    // More vectors than the dimension means a dependent family: wedge is 0.
    let lhs = if vs.len() > m {
        0.0
    } else {
        blade_herm_norm(&wedge(vs))
    };

    let has_zero = vs.iter().any(|v| herm_norm(v) == 0.0);
    let all_orth = (0..vs.len()).all(|i| {
        (0..vs.len())
            .filter(|&j| j != i)
            .all(|j| dot(&vs[i], &vs[j].conj()).norm() <= tol_orth)
    });
    HadamardReport {
        lhs,
        rhs,
        equality: has_zero || all_orth,
    }
}
