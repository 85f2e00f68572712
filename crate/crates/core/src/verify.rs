//! Randomized verification suites behind the `verify` command.
//!
//! Each suite replays one of the crate's structural identities on random
//! inputs and reports its worst residual together with the sub-seed that
//! produced it, so any failure can be replayed in isolation.

use num_complex::Complex64 as Cplx;

use crate::algebra::{determinant, dot, herm_norm, mat_vec, CMatrix, CVector};
use crate::experiments::{
    derive_seed, random_unit_vector, random_unitary, random_vector, rng_for,
    sample_random_simplex, sample_random_simplex_in_mode,
};
use crate::exterior::{binomial, blade_dot, blade_herm_norm, gram_det, wedge, Blade};
use crate::hodge::{box_det, l_map, lagrange_vector, multicross};
use crate::projective::{
    fs_point_hyperplane_distance, vertex_opposite_distance, ProjHyperplane, Simplex, SimplexMode,
};
use rand::Rng;

/// Default relative tolerance of the Gramian-identity suite.
pub const GRAMIAN_TOL: f64 = 1e-10;
/// Default relative tolerance of the isometry suite.
pub const ISOMETRY_TOL: f64 = 1e-12;
/// Default relative tolerance of the box-product suite.
pub const BOX_PRODUCT_TOL: f64 = 1e-10;
/// Default relative tolerance of the Lagrange-formula suite.
pub const LAGRANGE_TOL: f64 = 1e-10;
/// Default relative tolerance of the iterated-cross suite.
pub const MULTICROSS_TOL: f64 = 1e-8;
/// Default slack of the determinant-bounds suite.
pub const SANDWICH_SLACK: f64 = 1e-9;
/// Default relative tolerance of the face/vertex duality suite.
pub const DUALITY_TOL: f64 = 1e-10;
/// Default relative tolerance of the gauge-invariance suite.
pub const GAUGE_TOL: f64 = 1e-10;

/// Outcome of one randomized suite.
#[derive(Debug, Clone, PartialEq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub cases: usize,
    pub failures: usize,
    pub worst_residual: f64,
    /// Sub-seed of the worst case; replays it deterministically.
    pub worst_seed: u64,
    pub tolerance: f64,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

struct Runner {
    report: SuiteReport,
}

impl Runner {
    fn new(name: &'static str, tolerance: f64) -> Self {
        Self {
            report: SuiteReport {
                name,
                cases: 0,
                failures: 0,
                worst_residual: f64::NEG_INFINITY,
                worst_seed: 0,
                tolerance,
            },
        }
    }

    fn record(&mut self, case_seed: u64, residual: f64) {
        self.report.cases += 1;
        if residual > self.report.worst_residual {
            self.report.worst_residual = residual;
            self.report.worst_seed = case_seed;
        }
        if residual > self.report.tolerance {
            self.report.failures += 1;
        }
    }

    fn finish(mut self) -> SuiteReport {
        if self.report.cases == 0 {
            self.report.worst_residual = 0.0;
        }
        self.report
    }
}

fn rel(got: f64, want: f64) -> f64 {
    (got - want).abs() / (1.0 + want.abs())
}

fn crel(got: Cplx, want: Cplx) -> f64 {
    (got - want).norm() / (1.0 + want.norm())
}

fn vrel(got: &CVector, want: &CVector) -> f64 {
    let mut diff = got.clone();
    diff.add_scaled(want, Cplx::new(-1.0, 0.0));
    herm_norm(&diff) / (1.0 + herm_norm(want))
}

fn cycle_n(max_n: usize, case: usize) -> usize {
    1 + case % max_n.max(1)
}

fn cycle_n_from_two(max_n: usize, case: usize) -> usize {
    if max_n <= 2 {
        2
    } else {
        2 + case % (max_n - 1)
    }
}

/// Pairing of wedges against the Gramian determinant, plus the Hermitian
/// variant against the squared wedge norm.
pub fn gramian_suite(max_n: usize, samples: usize, seed: u64, tolerance: f64) -> SuiteReport {
    let mut runner = Runner::new("gramian", tolerance);
    for case in 0..samples {
        let case_seed = derive_seed(seed, case as u64);
        let mut rng = rng_for(case_seed, 1);
        let m = cycle_n(max_n, case) + 1;
        let k = rng.gen_range(1..=m);
        let vs: Vec<CVector> = (0..k).map(|_| random_vector(m, &mut rng)).collect();
        let ws: Vec<CVector> = (0..k).map(|_| random_vector(m, &mut rng)).collect();

        let pairing = blade_dot(&wedge(&vs), &wedge(&ws));
        let gram = gram_det(&vs, &ws, false);
        let r1 = crel(pairing, gram);

        let herm = gram_det(&vs, &vs, true);
        let norm2 = blade_herm_norm(&wedge(&vs)).powi(2);
        let r2 = rel(norm2, herm.re);
        let r3 = herm.im.abs() / (1.0 + herm.re.abs());
        runner.record(case_seed, r1.max(r2).max(r3));
    }
    runner.finish()
}

/// Norm preservation of the grade-lowering isometry on random blades.
pub fn isometry_suite(max_n: usize, samples: usize, seed: u64, tolerance: f64) -> SuiteReport {
    let mut runner = Runner::new("isometry", tolerance);
    for case in 0..samples {
        let case_seed = derive_seed(seed, case as u64);
        let mut rng = rng_for(case_seed, 2);
        let m = cycle_n(max_n, case) + 1;
        let coeffs: Vec<Cplx> = (0..binomial(m, m - 1))
            .map(|_| Cplx::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            .collect();
        let x = Blade::new(m, m - 1, coeffs).expect("valid blade");
        runner.record(case_seed, rel(herm_norm(&l_map(&x)), blade_herm_norm(&x)));
    }
    runner.finish()
}

/// Box product against the pivoted determinant on random rows.
pub fn box_product_suite(max_n: usize, samples: usize, seed: u64, tolerance: f64) -> SuiteReport {
    let mut runner = Runner::new("box-product", tolerance);
    for case in 0..samples {
        let case_seed = derive_seed(seed, case as u64);
        let mut rng = rng_for(case_seed, 3);
        let m = cycle_n(max_n, case) + 1;
        let a = random_vector(m, &mut rng);
        let bs: Vec<CVector> = (1..m).map(|_| random_vector(m, &mut rng)).collect();
        let mut rows = vec![a.clone()];
        rows.extend(bs.iter().cloned());
        let oracle = determinant(&CMatrix::from_rows(rows).expect("square by construction"));
        runner.record(case_seed, crel(box_det(&a, &bs), oracle));
    }
    runner.finish()
}

/// Vector-determinant route of the Lagrange formula against the direct
/// composition, plus the scalar-projection identity.
pub fn lagrange_suite(max_n: usize, samples: usize, seed: u64, tolerance: f64) -> SuiteReport {
    let mut runner = Runner::new("lagrange", tolerance);
    for case in 0..samples {
        let case_seed = derive_seed(seed, case as u64);
        let mut rng = rng_for(case_seed, 4);
        let n = cycle_n_from_two(max_n, case);
        let m = n + 1;
        let vs: Vec<CVector> = (0..n - 1).map(|_| random_vector(m, &mut rng)).collect();
        let ws: Vec<CVector> = (0..n).map(|_| random_vector(m, &mut rng)).collect();
        let Ok(formula) = lagrange_vector(&vs, &ws) else {
            // Dependent Gaussian draws have probability zero; skip rather
            // than fail the suite on a vanishing-measure event.
            continue;
        };

        let a = l_map(&wedge(&ws));
        let mut family = vs.clone();
        family.push(a);
        let direct = l_map(&wedge(&family));
        let r1 = vrel(&formula, &direct);

        let z = random_vector(m, &mut rng);
        let mut rows = Vec::with_capacity(n);
        rows.push(CVector::new(ws.iter().map(|w| dot(&z, w)).collect()).expect("finite"));
        for v in &vs {
            rows.push(CVector::new(ws.iter().map(|w| dot(v, w)).collect()).expect("finite"));
        }
        let scal = determinant(&CMatrix::from_rows(rows).expect("square by construction"));
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        let r2 = crel(dot(&z, &formula), scal * sign);
        runner.record(case_seed, r1.max(r2));
    }
    runner.finish()
}

/// Norm relation and Hermitian collinearity of the iterated cross product.
pub fn multicross_suite(max_n: usize, samples: usize, seed: u64, tolerance: f64) -> SuiteReport {
    let mut runner = Runner::new("multicross", tolerance);
    for case in 0..samples {
        let case_seed = derive_seed(seed, case as u64);
        let mut rng = rng_for(case_seed, 5);
        let n = cycle_n_from_two(max_n, case);
        let m = n + 1;
        let a = random_unit_vector(m, &mut rng);
        let us: Vec<CVector> = (0..n).map(|_| random_unit_vector(m, &mut rng)).collect();
        let Ok((result, det)) = multicross(&a, &us) else {
            continue;
        };
        let expected_norm = det.norm().powi(n as i32 - 1) * herm_norm(&a);
        let r1 = rel(herm_norm(&result), expected_norm);
        let overlap = dot(&result, &a.conj()).norm();
        let r2 = rel(overlap, herm_norm(&result) * herm_norm(&a));
        runner.record(case_seed, r1.max(r2));
    }
    runner.finish()
}

/// Both determinant bounds on random simplices; the residual is the worst
/// signed violation, normally negative.
pub fn sandwich_suite(max_n: usize, samples: usize, seed: u64, slack: f64) -> SuiteReport {
    let mut runner = Runner::new("sandwich", slack);
    for case in 0..samples {
        let case_seed = derive_seed(seed, case as u64);
        let mut rng = rng_for(case_seed, 6);
        let n = cycle_n(max_n, case);
        let Ok(sx) = sample_random_simplex(n, &mut rng) else {
            continue;
        };
        let abs_det = sx.abs_det();
        let lower = sx.d_min().powi(n as i32) - abs_det;
        let upper = abs_det - sx.d_min();
        runner.record(case_seed, lower.max(upper) / (1.0 + abs_det));
    }
    runner.finish()
}

/// Face-mode distances against the box-determinant route and against the
/// dual-vertex point-hyperplane distances.
pub fn duality_suite(max_n: usize, samples: usize, seed: u64, tolerance: f64) -> SuiteReport {
    let mut runner = Runner::new("duality", tolerance);
    for case in 0..samples {
        let case_seed = derive_seed(seed, case as u64);
        let mut rng = rng_for(case_seed, 7);
        let n = cycle_n(max_n, case);
        let Ok(sx) = sample_random_simplex_in_mode(n, SimplexMode::Faces, &mut rng) else {
            continue;
        };
        let gens = sx.generators();
        let duals = sx.dual_vertices();
        let mut worst = 0.0_f64;
        for j in 0..gens.len() {
            let others: Vec<CVector> = gens
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != j)
                .map(|(_, g)| g.clone())
                .collect();
            let formula = vertex_opposite_distance(&gens[j], &others).expect("valid simplex");
            worst = worst.max(rel(formula, sx.dists()[j]));

            let face = ProjHyperplane::new(gens[j].clone()).expect("unit generator");
            let via_dual = fs_point_hyperplane_distance(&duals[j], &face);
            worst = worst.max(rel(via_dual, sx.dists()[j]));
        }
        runner.record(case_seed, worst);
    }
    runner.finish()
}

/// Invariance of all distances and the determinant modulus under
/// per-generator phases and a global Hermitian unitary.
pub fn gauge_suite(max_n: usize, samples: usize, seed: u64, tolerance: f64) -> SuiteReport {
    let mut runner = Runner::new("gauge", tolerance);
    for case in 0..samples {
        let case_seed = derive_seed(seed, case as u64);
        let mut rng = rng_for(case_seed, 8);
        let n = cycle_n(max_n, case);
        let Ok(sx) = sample_random_simplex(n, &mut rng) else {
            continue;
        };
        let gens = sx.generators();

        let rotated: Vec<CVector> = gens
            .iter()
            .map(|g| {
                let theta: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
                g.scaled(Cplx::new(theta.cos(), theta.sin()))
            })
            .collect();
        let q = random_unitary(n + 1, &mut rng);
        let transformed: Vec<CVector> = gens.iter().map(|g| mat_vec(&q, g)).collect();

        let mut worst = 0.0_f64;
        for variant in [rotated, transformed] {
            let Ok(other) = Simplex::from_vertices(variant) else {
                worst = worst.max(f64::INFINITY);
                continue;
            };
            worst = worst.max(rel(other.abs_det(), sx.abs_det()));
            for (a, b) in other.dists().iter().zip(sx.dists()) {
                worst = worst.max(rel(*a, *b));
            }
        }
        runner.record(case_seed, worst);
    }
    runner.finish()
}

/// Runs every suite at its default tolerance.
pub fn run_all(max_n: usize, samples: usize, seed: u64) -> Vec<SuiteReport> {
    run_all_scaled(max_n, samples, seed, 1.0)
}

/// [`run_all`] with every tolerance multiplied by `scale`; a diagnostic
/// knob for probing how much headroom the suites have.
pub fn run_all_scaled(max_n: usize, samples: usize, seed: u64, scale: f64) -> Vec<SuiteReport> {
    vec![
        gramian_suite(max_n, samples, seed, GRAMIAN_TOL * scale),
        isometry_suite(max_n, samples, seed, ISOMETRY_TOL * scale),
        box_product_suite(max_n, samples, seed, BOX_PRODUCT_TOL * scale),
        lagrange_suite(max_n, samples, seed, LAGRANGE_TOL * scale),
        multicross_suite(max_n, samples, seed, MULTICROSS_TOL * scale),
        sandwich_suite(max_n, samples, seed, SANDWICH_SLACK * scale),
        duality_suite(max_n, samples, seed, DUALITY_TOL * scale),
        gauge_suite(max_n, samples, seed, GAUGE_TOL * scale),
    ]
}
