//! The grade-lowering isometry `L` from the top-minus-one exterior power of
//! `C^m` onto `C^m`, the generalized cross product it induces, the
//! box-product determinant identity, the generalized Lagrange formula, and
//! the iterated-cross identity.

use num_complex::Complex64 as Cplx;

use crate::algebra::{determinant, dot, CMatrix, CVector};
use crate::error::{Error, Result};
use crate::exterior::{blade_herm_norm, wedge, Blade};
use crate::tol::Tolerances;

/// The isometric isomorphism sending the basis blade that omits index `j`
/// to `(-1)^j e_j`, extended linearly.
///
/// Preserves Hermitian norms: the image has the same norm as the blade.
///
/// # Panics
/// Panics unless the blade grade is one less than the ambient dimension.
pub fn l_map(x: &Blade) -> CVector {
    let m = x.ambient_dim();
    assert_eq!(
        x.grade(),
        m - 1,
        "l_map: grade {} but ambient dimension {m} requires grade {}",
        x.grade(),
        m - 1
    );
    // The (m-1)-subset omitting j sits at lexicographic rank m-1-j.
    let coeffs = (0..m)
        .map(|j| {
            let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
            x.coeffs()[m - 1 - j] * sign
        })
        .collect();
    CVector::new_unchecked(coeffs)
}

/// Generalized cross product: `l_map(wedge(bs))` of `m - 1` vectors in
/// `C^m`. The result is orthogonal (bilinear dot) to every input.
///
/// # Panics
/// Panics unless exactly `m - 1` vectors of shared dimension `m` are given.
pub fn generalized_cross(bs: &[CVector]) -> CVector {
    assert!(!bs.is_empty(), "generalized_cross: empty family");
    let m = bs[0].dim();
    assert_eq!(
        bs.len(),
        m - 1,
        "generalized_cross: need {} vectors in dimension {m}, got {}",
        m - 1,
        bs.len()
    );
    l_map(&wedge(bs))
}

/// Box product `a . l_map(wedge(bs))`, equal to the determinant of the
/// matrix with rows `a, bs[0], ..., bs[n-1]`.
///
/// # Panics
/// Panics on dimension mismatches (see [`generalized_cross`]).
pub fn box_det(a: &CVector, bs: &[CVector]) -> Cplx {
    dot(a, &generalized_cross(bs))
}

/// Generalized Lagrange formula.
///
/// For `n - 1` vectors `vs` and `n` vectors `ws` in `C^{n+1}`, returns
/// `l_map(wedge(vs, l_map(wedge(ws))))` evaluated by the vector-valued
/// determinant whose first row holds the `ws` and whose later rows hold
/// the pairings `vs[i] . ws[j]`, scaled by `(-1)^n`. The direct
/// composition is kept as an independent route in tests.
///
/// # Panics
/// Panics on count or dimension mismatches.
pub fn lagrange_vector(vs: &[CVector], ws: &[CVector]) -> Result<CVector> {
    assert!(!ws.is_empty(), "lagrange_vector: empty second family");
    let m = ws[0].dim();
    let n = m - 1;
    assert!(n >= 2, "lagrange_vector: ambient dimension must be at least 3");
    assert_eq!(
        ws.len(),
        n,
        "lagrange_vector: expected {n} vectors in the second family, got {}",
        ws.len()
    );
    assert_eq!(
        vs.len(),
        n - 1,
        "lagrange_vector: expected {} vectors in the first family, got {}",
        n - 1,
        vs.len()
    );
    for v in vs.iter().chain(ws) {
        assert_eq!(v.dim(), m, "lagrange_vector: mixed dimensions");
    }
    let tol = Tolerances::standard().indep;
    let vs_norm = blade_herm_norm(&wedge(vs));
    if vs_norm <= tol {
        return Err(Error::Degenerate {
            what: "first-family wedge norm",
            value: vs_norm,
            threshold: tol,
        });
    }
    let ws_norm = blade_herm_norm(&wedge(ws));
    if ws_norm <= tol {
        return Err(Error::Degenerate {
            what: "second-family wedge norm",
            value: ws_norm,
            threshold: tol,
        });
    }

    // Pairing matrix (n-1) x n; the minor dropping column j multiplies ws[j].
    let pairings: Vec<Vec<Cplx>> = vs
        .iter()
        .map(|v| ws.iter().map(|w| dot(v, w)).collect())
        .collect();
    let overall = if n % 2 == 0 { 1.0 } else { -1.0 };
    let mut out = CVector::zero(m);
    for (j, w) in ws.iter().enumerate() {
        let mut minor: Vec<Vec<Cplx>> = pairings
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, &p)| p)
                    .collect()
            })
            .collect();
        let cof = crate::algebra::det_pivoted_in_place(&mut minor);
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        out.add_scaled(w, cof * (overall * sign));
    }
    Ok(out)
}

/// Iterated cross product.
///
/// Given `a` and `n` further vectors `us` in `C^{n+1}`, forms
/// `v_j = l_map(wedge(a, us without us[j]))` and returns
/// `(l_map(wedge(v_1, ..., v_n)), det(a, us))`. The result equals the
/// original `a` scaled by the determinant to the power `n - 1`, up to a
/// sign depending only on `n`; only the modulus and the Hermitian
/// collinearity with `a` are guaranteed here.
///
/// # Panics
/// Panics on count or dimension mismatches.
pub fn multicross(a: &CVector, us: &[CVector]) -> Result<(CVector, Cplx)> {
    let m = a.dim();
    let n = m - 1;
    assert!(n >= 1, "multicross: ambient dimension must be at least 2");
    assert_eq!(
        us.len(),
        n,
        "multicross: expected {n} vectors, got {}",
        us.len()
    );
    for u in us {
        assert_eq!(u.dim(), m, "multicross: mixed dimensions");
    }

    let mut rows = Vec::with_capacity(m);
    rows.push(a.clone());
    rows.extend(us.iter().cloned());
    let det = determinant(&CMatrix::from_rows(rows).expect("square by construction"));
    let tol = Tolerances::standard().indep;
    if det.norm() <= tol {
        return Err(Error::Degenerate {
            what: "|det(a, us)|",
            value: det.norm(),
            threshold: tol,
        });
    }

    let crosses: Vec<CVector> = (0..n)
        .map(|j| {
            let mut family = Vec::with_capacity(n);
            family.push(a.clone());
            family.extend(
                us.iter()
                    .enumerate()
                    .filter(|&(i, _)| i != j)
                    .map(|(_, u)| u.clone()),
            );
            l_map(&wedge(&family))
        })
        .collect();
    Ok((l_map(&wedge(&crosses)), det))
}
