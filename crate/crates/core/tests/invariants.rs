//! Property tests for the structural identities of the library.

use cpsimplex::experiments::{random_unitary, rng_for, sample_random_simplex};
use cpsimplex::{
    blade_dot, blade_herm_norm, box_det, check_inequalities, determinant, determinant_cofactor,
    dot, gram_det, hadamard_report, herm_norm, l_map, lagrange_vector, make_isosceles,
    make_regular, mat_vec, multicross, normalize, vertex_opposite_distance, wedge, CMatrix,
    CVector, Cplx, IsoscelesParams, RegularParams, Simplex,
};
use proptest::prelude::*;

fn cplx() -> impl Strategy<Value = Cplx> {
    (-1.0..1.0f64, -1.0..1.0f64).prop_map(|(re, im)| Cplx::new(re, im))
}

fn cvector(m: usize) -> impl Strategy<Value = CVector> {
    prop::collection::vec(cplx(), m).prop_map(|v| CVector::new(v).unwrap())
}

fn family(m: usize, k: usize) -> impl Strategy<Value = Vec<CVector>> {
    prop::collection::vec(cvector(m), k)
}

fn square(m: usize) -> impl Strategy<Value = CMatrix> {
    family(m, m).prop_map(|rows| CMatrix::from_rows(rows).unwrap())
}

fn rel(got: f64, want: f64) -> f64 {
    (got - want).abs() / (1.0 + want.abs())
}

fn crel(got: Cplx, want: Cplx) -> f64 {
    (got - want).norm() / (1.0 + want.norm())
}

proptest! {
    #[test]
    fn pivoted_determinant_matches_cofactor_oracle(
        m in (1..=6usize).prop_flat_map(square),
    ) {
        let lu = determinant(&m);
        let oracle = determinant_cofactor(&m).unwrap();
        prop_assert!((lu - oracle).norm() <= 1e-10 * (1.0 + oracle.norm()));
    }

    #[test]
    fn determinant_is_alternating(
        (m, i, j) in (2..=6usize).prop_flat_map(|s| (square(s), 0..s, 0..s)),
    ) {
        prop_assume!(i != j);
        let mut rows = m.rows().to_vec();
        rows.swap(i, j);
        let swapped = CMatrix::from_rows(rows).unwrap();
        prop_assert!(crel(determinant(&swapped), -determinant(&m)) <= 1e-12);
    }

    #[test]
    fn dot_is_symmetric_and_bilinear(
        (a, b, c, alpha) in (2..=6usize)
            .prop_flat_map(|m| (cvector(m), cvector(m), cvector(m), cplx())),
    ) {
        prop_assert!(crel(dot(&a, &b), dot(&b, &a)) <= 1e-12);
        let mut combo = a.scaled(alpha);
        combo.add_scaled(&b, Cplx::new(1.0, 0.0));
        let expanded = alpha * dot(&a, &c) + dot(&b, &c);
        prop_assert!(crel(dot(&combo, &c), expanded) <= 1e-12);
    }

    #[test]
    fn herm_norm_is_absolutely_homogeneous(
        (a, alpha) in (2..=6usize).prop_flat_map(|m| (cvector(m), cplx())),
    ) {
        prop_assert!(rel(herm_norm(&a.scaled(alpha)), alpha.norm() * herm_norm(&a)) <= 1e-12);
    }

    #[test]
    fn gramian_identity_holds(
        (vs, ws) in (2..=6usize)
            .prop_flat_map(|m| (1..=m).prop_flat_map(move |k| (family(m, k), family(m, k)))),
    ) {
        let pairing = blade_dot(&wedge(&vs), &wedge(&ws));
        let gram = gram_det(&vs, &ws, false);
        prop_assert!(crel(pairing, gram) <= 1e-10);
    }

    #[test]
    fn hermitian_gramian_matches_squared_wedge_norm(
        vs in (2..=6usize)
            .prop_flat_map(|m| (1..=m).prop_flat_map(move |k| family(m, k))),
    ) {
        let gram = gram_det(&vs, &vs, true);
        let norm2 = blade_herm_norm(&wedge(&vs)).powi(2);
        prop_assert!(rel(norm2, gram.re) <= 1e-10);
        prop_assert!(gram.im.abs() <= 1e-10 * (1.0 + gram.re.abs()));
    }

    #[test]
    fn wedge_is_antisymmetric(
        (vs, i, j) in (2..=5usize)
            .prop_flat_map(|m| (2..=m).prop_flat_map(move |k| (family(m, k), 0..k, 0..k))),
    ) {
        prop_assume!(i != j);
        let original = wedge(&vs);
        let mut swapped = vs.clone();
        swapped.swap(i, j);
        let negated = wedge(&swapped);
        for (a, b) in original.coeffs().iter().zip(negated.coeffs()) {
            prop_assert!((a + b).norm() <= 1e-12 * (1.0 + a.norm()));
        }
    }

    #[test]
    fn hadamard_bound_holds_and_scales(
        (vs, alpha) in (2..=5usize)
            .prop_flat_map(|m| (1..=m).prop_flat_map(move |k| (family(m, k), cplx()))),
    ) {
        let base = hadamard_report(&vs);
        prop_assert!(base.lhs <= base.rhs * (1.0 + 1e-12));

        let mut scaled = vs.clone();
        scaled[0] = scaled[0].scaled(alpha);
        let after = hadamard_report(&scaled);
        prop_assert!(rel(after.lhs, alpha.norm() * base.lhs) <= 1e-12);
        prop_assert!(rel(after.rhs, alpha.norm() * base.rhs) <= 1e-12);
    }

    #[test]
    fn l_map_is_an_isometry(
        vs in (2..=6usize).prop_flat_map(|m| family(m, m - 1)),
    ) {
        let x = wedge(&vs);
        prop_assert!(rel(herm_norm(&l_map(&x)), blade_herm_norm(&x)) <= 1e-12);
    }

    #[test]
    fn box_product_matches_determinant(
        (a, bs) in (2..=6usize).prop_flat_map(|m| (cvector(m), family(m, m - 1))),
    ) {
        let mut rows = vec![a.clone()];
        rows.extend(bs.iter().cloned());
        let oracle = determinant(&CMatrix::from_rows(rows).unwrap());
        prop_assert!(crel(box_det(&a, &bs), oracle) <= 1e-10);
    }

    #[test]
    fn lagrange_paths_agree(
        (vs, ws) in (3..=6usize)
            .prop_flat_map(|m| (family(m, m - 2), family(m, m - 1))),
    ) {
        let formula = match lagrange_vector(&vs, &ws) {
            Ok(v) => v,
            // Dependent draws are a measure-zero event; skip them.
            Err(_) => return Ok(()),
        };
        let mut direct_family = vs.clone();
        direct_family.push(l_map(&wedge(&ws)));
        let direct = l_map(&wedge(&direct_family));
        let mut diff = formula.clone();
        diff.add_scaled(&direct, Cplx::new(-1.0, 0.0));
        prop_assert!(herm_norm(&diff) <= 1e-10 * (1.0 + herm_norm(&direct)));
    }

    #[test]
    fn multicross_norm_and_collinearity(
        (a, us, n) in (2..=4usize).prop_flat_map(|n| {
            let m = n + 1;
            (cvector(m), family(m, n), Just(n))
        }),
    ) {
        let a = match normalize(&a) {
            Ok(v) => v,
            Err(_) => return Ok(()),
        };
        let us: Vec<CVector> = match us.iter().map(normalize).collect::<Result<_, _>>() {
            Ok(v) => v,
            Err(_) => return Ok(()),
        };
        let (result, det) = match multicross(&a, &us) {
            Ok(r) => r,
            Err(_) => return Ok(()),
        };
        let expected = det.norm().powi(n as i32 - 1) * herm_norm(&a);
        prop_assert!(rel(herm_norm(&result), expected) <= 1e-8);
        let overlap = dot(&result, &a.conj()).norm();
        prop_assert!(rel(overlap, herm_norm(&result) * herm_norm(&a)) <= 1e-8);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn sampled_simplices_obey_the_sandwich(
        (n, seed) in ((1..=4usize), any::<u64>()),
    ) {
        let mut rng = rng_for(seed, 0);
        let sx = sample_random_simplex(n, &mut rng).unwrap();
        let abs_det = sx.abs_det();
        prop_assert!(sx.d_min().powi(n as i32) <= abs_det * (1.0 + 1e-9));
        prop_assert!(abs_det <= sx.d_min() * (1.0 + 1e-9));
    }

    #[test]
    fn phase_rotation_is_a_gauge_symmetry(
        (n, seed, thetas) in (1..=4usize)
            .prop_flat_map(|n| {
                (Just(n), any::<u64>(), prop::collection::vec(0.0..std::f64::consts::TAU, n + 1))
            }),
    ) {
        let mut rng = rng_for(seed, 1);
        let sx = sample_random_simplex(n, &mut rng).unwrap();
        let rotated: Vec<CVector> = sx
            .generators()
            .iter()
            .zip(&thetas)
            .map(|(g, &t)| g.scaled(Cplx::new(t.cos(), t.sin())))
            .collect();
        let other = Simplex::from_vertices(rotated).unwrap();
        prop_assert!(rel(other.abs_det(), sx.abs_det()) <= 1e-12);
        for (a, b) in other.dists().iter().zip(sx.dists()) {
            prop_assert!(rel(*a, *b) <= 1e-12);
        }
    }

    #[test]
    fn hermitian_unitaries_are_gauge_symmetries(
        (n, seed) in ((1..=4usize), any::<u64>()),
    ) {
        let mut rng = rng_for(seed, 2);
        let sx = sample_random_simplex(n, &mut rng).unwrap();
        let q = random_unitary(n + 1, &mut rng);
        let transformed: Vec<CVector> =
            sx.generators().iter().map(|g| mat_vec(&q, g)).collect();
        let other = Simplex::from_vertices(transformed).unwrap();
        prop_assert!(rel(other.abs_det(), sx.abs_det()) <= 1e-10);
        for (a, b) in other.dists().iter().zip(sx.dists()) {
            prop_assert!(rel(*a, *b) <= 1e-10);
        }
    }

    #[test]
    fn stored_distances_match_the_box_determinant_route(
        (n, seed) in ((1..=4usize), any::<u64>()),
    ) {
        let mut rng = rng_for(seed, 3);
        let sx = sample_random_simplex(n, &mut rng).unwrap();
        let gens = sx.generators();
        for j in 0..gens.len() {
            let others: Vec<CVector> = gens
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != j)
                .map(|(_, g)| g.clone())
                .collect();
            let direct = vertex_opposite_distance(&gens[j], &others).unwrap();
            prop_assert!(rel(direct, sx.dists()[j]) <= 1e-12);
        }
    }

    #[test]
    fn hermitian_orthogonal_spans_give_equality_with_the_determinant(
        (n, thetas, shuffle_seed) in (1..=4usize).prop_flat_map(|n| {
            (
                Just(n),
                prop::collection::vec(0.0..std::f64::consts::TAU, n + 1),
                any::<u64>(),
            )
        }),
    ) {
        // Phase-rotated permuted basis vectors stay pairwise
        // Hermitian-orthogonal, so every distance equals |D|.
        let m = n + 1;
        let mut order: Vec<usize> = (0..m).collect();
        let mut state = shuffle_seed;
        for i in (1..m).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            order.swap(i, (state >> 33) as usize % (i + 1));
        }
        let gens: Vec<CVector> = order
            .iter()
            .zip(&thetas)
            .map(|(&i, &t)| CVector::standard_basis(m, i).scaled(Cplx::new(t.cos(), t.sin())))
            .collect();
        let others: Vec<CVector> = gens[1..].to_vec();
        prop_assert!(hadamard_report(&others).equality);
        let sx = Simplex::from_vertices(gens).unwrap();
        for &d in sx.dists() {
            prop_assert!((d - sx.abs_det()).abs() <= 1e-9);
        }
    }

    #[test]
    fn isosceles_family_traces_the_upper_bound_line(s in 1e-3..=1.0f64) {
        let sx = make_isosceles(&IsoscelesParams::new(s).unwrap()).unwrap();
        prop_assert!(rel(sx.abs_det(), sx.d_min()) <= 1e-12);
        prop_assert!((sx.abs_det() - s).abs() <= 1e-12);
        let report = check_inequalities(&sx);
        prop_assert!(report.upper_margin.abs() <= 1e-12);
    }

    #[test]
    fn regular_family_ratio_in_dimension_two(c in 0.0..0.95f64) {
        let sx = make_regular(&RegularParams::new(2, c).unwrap()).unwrap();
        let ratio = sx.abs_det() / (sx.d_min() * sx.d_min());
        let expected = (1.0 + c) / (1.0 + 2.0 * c).sqrt();
        prop_assert!(rel(ratio, expected) <= 1e-10);
    }
}
