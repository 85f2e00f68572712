//! Random simplex sampling, scatter-figure records, the near-equality
//! census, and the determinant-constrained search for extremal simplices.
//!
//! Everything here is deterministic: work item `i` of a run draws its
//! random stream from `(master_seed, i)`, so results are reproducible and
//! independent of how many worker threads execute them.

mod optim;

use num_complex::Complex64 as Cplx;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;

use crate::algebra::{determinant, dot, herm_norm, CMatrix, CVector};
use crate::error::{Error, Result};
use crate::exterior::{blade_herm_norm, wedge};
use crate::projective::{
    check_inequalities, make_isosceles, make_regular, IsoscelesParams, RegularParams, Simplex,
    SimplexMode,
};

/// Samples whose determinant modulus falls at or below this are rejected
/// and redrawn.
pub const SAMPLE_MIN_ABS_DET: f64 = 1e-6;

/// Bound on redraws before sampling reports failure.
const SAMPLE_MAX_TRIES: usize = 1000;

/// Feasibility band on `| |D| - target |` for the conjecture search.
pub const DET_TOL: f64 = 1e-6;

/// Records with `lower_margin` at or below this enter the near-equality
/// census.
pub const CENSUS_LOWER_MARGIN: f64 = 1e-6;

/// Penalty weight of the primary search stage. Later stages re-run the
/// local search with the weight escalated so the determinant constraint
/// tightens into the [`DET_TOL`] band, which a single fixed-weight penalty
/// cannot reach.
const PENALTY_LAMBDA: f64 = 1e3;

/// `(penalty weight, share of the budget, initial simplex step)` per stage.
const PENALTY_STAGES: [(f64, f64, f64); 4] = [
    (PENALTY_LAMBDA, 0.45, 0.5),
    (1e5, 0.20, 0.1),
    (1e7, 0.20, 0.02),
    (1e9, 0.15, 0.005),
];

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Sub-seed for work item `index` of a run keyed by `master`.
pub fn derive_seed(master: u64, index: u64) -> u64 {
    splitmix64(splitmix64(master) ^ index.wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

/// Deterministic generator for work item `index` of a run keyed by
/// `master`.
pub fn rng_for(master: u64, index: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(derive_seed(master, index))
}

/// Vector with independent standard complex Gaussian coordinates.
pub fn random_vector(dim: usize, rng: &mut impl Rng) -> CVector {
    assert!(dim > 0, "random_vector: dimension must be positive");
    CVector::new_unchecked(
        (0..dim)
            .map(|_| Cplx::new(rng.sample(StandardNormal), rng.sample(StandardNormal)))
            .collect(),
    )
}

/// Complex-Gaussian direction normalized to the unit sphere; the induced
/// point distribution on projective space is Fubini-Study uniform.
pub fn random_unit_vector(dim: usize, rng: &mut impl Rng) -> CVector {
    loop {
        let v = random_vector(dim, rng);
        let norm = herm_norm(&v);
        if norm > 1e-6 {
            return v.scaled(Cplx::new(1.0 / norm, 0.0));
        }
    }
}

/// Haar-ish random unitary built by Hermitian Gram-Schmidt on a complex
/// Gaussian matrix.
pub fn random_unitary(dim: usize, rng: &mut impl Rng) -> CMatrix {
    'outer: loop {
        let mut rows: Vec<CVector> = Vec::with_capacity(dim);
        for _ in 0..dim {
            let mut v = random_vector(dim, rng);
            for q in &rows {
                let overlap = dot(&v, &q.conj());
                v.add_scaled(q, -overlap);
            }
            let norm = herm_norm(&v);
            if norm < 1e-8 {
                continue 'outer;
            }
            rows.push(v.scaled(Cplx::new(1.0 / norm, 0.0)));
        }
        return CMatrix::from_rows(rows).expect("square by construction");
    }
}

/// Draws a vertex-mode simplex with Fubini-Study-uniform vertices,
/// redrawing while the configuration is too close to degenerate.
pub fn sample_random_simplex(n: usize, rng: &mut impl Rng) -> Result<Simplex> {
    sample_random_simplex_in_mode(n, SimplexMode::Vertices, rng)
}

/// [`sample_random_simplex`] with a caller-chosen generator reading.
pub fn sample_random_simplex_in_mode(
    n: usize,
    mode: SimplexMode,
    rng: &mut impl Rng,
) -> Result<Simplex> {
    assert!(n >= 1, "sample_random_simplex: n must be at least 1");
    let m = n + 1;
    for _ in 0..SAMPLE_MAX_TRIES {
        let gens: Vec<CVector> = (0..m).map(|_| random_unit_vector(m, rng)).collect();
        let det = determinant(&CMatrix::from_rows(gens.clone()).expect("square by construction"));
        if det.norm() <= SAMPLE_MIN_ABS_DET {
            continue;
        }
        return match mode {
            SimplexMode::Vertices => Simplex::from_vertices(gens),
            SimplexMode::Faces => Simplex::from_faces(gens),
        };
    }
    Err(Error::Sampling {
        tries: SAMPLE_MAX_TRIES,
    })
}

/// How a scatter record was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RecordKind {
    Random,
    Isosceles,
    Regular,
}

impl RecordKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            RecordKind::Random => "random",
            RecordKind::Isosceles => "isosceles",
            RecordKind::Regular => "regular",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "random" => Some(RecordKind::Random),
            "isosceles" => Some(RecordKind::Isosceles),
            "regular" => Some(RecordKind::Regular),
            _ => None,
        }
    }
}

/// One scatter point: the minimum distance and determinant modulus of a
/// single simplex.
///
/// For random records `seed` is the derived sub-seed that regenerates the
/// simplex; for sweep records it is the sweep index `k` of the parameter
/// (`s = k/20` for the isosceles family, `c = k/20` for the regular one).
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentRecord {
    pub kind: RecordKind,
    pub n: usize,
    pub seed: u64,
    pub d_min: f64,
    pub abs_det: f64,
}

impl ExperimentRecord {
    fn from_simplex(kind: RecordKind, seed: u64, sx: &Simplex) -> Self {
        Self {
            kind,
            n: sx.n(),
            seed,
            d_min: sx.d_min(),
            abs_det: sx.abs_det(),
        }
    }
}

/// Scatter data behind the `figure` command: `count` random simplices in
/// dimension `n`, plus the isosceles sweep `s = 0.05..1.0` (dimension 2
/// only) and the regular sweep `c = 0.05..0.95`, both in steps of `0.05`.
pub fn run_figure(n: usize, count: usize, seed: u64) -> Result<Vec<ExperimentRecord>> {
    if n < 1 {
        return Err(Error::Parameter {
            name: "n",
            value: n as f64,
            range: ">= 1",
        });
    }
    if count < 1 {
        return Err(Error::Parameter {
            name: "count",
            value: count as f64,
            range: ">= 1",
        });
    }
    let mut records = (0..count)
        .into_par_iter()
        .map(|i| {
            let sub_seed = derive_seed(seed, i as u64);
            let mut rng = ChaCha8Rng::seed_from_u64(sub_seed);
            let sx = sample_random_simplex(n, &mut rng)?;
            Ok(ExperimentRecord::from_simplex(
                RecordKind::Random,
                sub_seed,
                &sx,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    if n == 2 {
        for k in 1..=20u64 {
            let s = k as f64 / 20.0;
            let sx = make_isosceles(&IsoscelesParams::new(s)?)?;
            records.push(ExperimentRecord::from_simplex(RecordKind::Isosceles, k, &sx));
        }
    }
    for k in 1..=19u64 {
        let c = k as f64 / 20.0;
        let sx = make_regular(&RegularParams::new(n, c)?)?;
        records.push(ExperimentRecord::from_simplex(RecordKind::Regular, k, &sx));
    }
    Ok(records)
}

/// Census of how often the lower determinant bound is nearly attained and
/// whether those cases carry the required number of tied distances.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CensusReport {
    pub n: usize,
    pub samples: usize,
    /// Cases with `lower_margin <= CENSUS_LOWER_MARGIN`.
    pub near_lower_bound: usize,
    /// Of those, cases where at least `n` distances tie with the minimum.
    pub with_required_ties: usize,
}

impl CensusReport {
    /// Fraction of near-equality cases carrying at least `n` tied
    /// distances; `None` when no case came near the bound.
    pub fn fraction_with_ties(&self) -> Option<f64> {
        (self.near_lower_bound > 0)
            .then(|| self.with_required_ties as f64 / self.near_lower_bound as f64)
    }
}

/// Runs the census over the given simplices.
pub fn census_of_simplices<'a, I>(n: usize, simplices: I) -> CensusReport
where
    I: IntoIterator<Item = &'a Simplex>,
{
    let mut report = CensusReport {
        n,
        samples: 0,
        near_lower_bound: 0,
        with_required_ties: 0,
    };
    for sx in simplices {
        report.samples += 1;
        let ineq = check_inequalities(sx);
        if ineq.lower_margin <= CENSUS_LOWER_MARGIN {
            report.near_lower_bound += 1;
            if ineq.near_equality_count >= n {
                report.with_required_ties += 1;
            }
        }
    }
    report
}

/// Runs the census over `count` random simplices in dimension `n`.
pub fn equality_census(n: usize, count: usize, seed: u64) -> Result<CensusReport> {
    if count < 1 {
        return Err(Error::Parameter {
            name: "count",
            value: count as f64,
            range: ">= 1",
        });
    }
    let simplices = (0..count)
        .into_par_iter()
        .map(|i| {
            let mut rng = rng_for(seed, i as u64);
            sample_random_simplex(n, &mut rng)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(census_of_simplices(n, simplices.iter()))
}

/// Best configuration found by [`conjecture_search`].
#[derive(Debug, Clone, PartialEq)]
pub struct OptResult {
    pub n: usize,
    pub target_det: f64,
    pub best_d_min: f64,
    pub achieved_det: f64,
    pub restarts: usize,
    pub evaluations: usize,
    pub best_generators: Vec<CVector>,
}

struct RestartOutcome {
    evals: usize,
    /// `(d_min, achieved |D|, generators)` of the polished endpoint, when
    /// it forms a valid simplex.
    candidate: Option<(f64, f64, Vec<CVector>)>,
}

/// Maximizes `d_min` over configurations of `n + 1` unit vectors whose
/// determinant modulus is pinned to `target_det`, by a penalized
/// derivative-free local search restarted from random configurations.
///
/// Returns the best endpoint inside the [`DET_TOL`] feasibility band, or a
/// [`Error::SearchFailure`] carrying the best infeasible attempt.
/// Deterministic for fixed arguments regardless of worker threads.
pub fn conjecture_search(
    n: usize,
    target_det: f64,
    restarts: usize,
    budget_per_restart: usize,
    seed: u64,
) -> Result<OptResult> {
    if n < 1 {
        return Err(Error::Parameter {
            name: "n",
            value: n as f64,
            range: ">= 1",
        });
    }
    if !(target_det > 0.0 && target_det <= 1.0) {
        return Err(Error::Parameter {
            name: "target_det",
            value: target_det,
            range: "(0, 1]",
        });
    }
    if restarts < 1 {
        return Err(Error::Parameter {
            name: "restarts",
            value: restarts as f64,
            range: ">= 1",
        });
    }

    let outcomes: Vec<RestartOutcome> = (0..restarts)
        .into_par_iter()
        .map(|r| run_restart(n, target_det, budget_per_restart, seed, r as u64))
        .collect();

    let evaluations: usize = outcomes.iter().map(|o| o.evals).sum();
    let mut best_feasible: Option<(f64, f64, Vec<CVector>)> = None;
    let mut best_infeasible: Option<(f64, f64, f64, Vec<CVector>)> = None;
    for outcome in outcomes {
        let Some((d_min, achieved, gens)) = outcome.candidate else {
            continue;
        };
        let gap = (achieved - target_det).abs();
        if gap <= DET_TOL {
            if best_feasible.as_ref().is_none_or(|(best, _, _)| d_min > *best) {
                best_feasible = Some((d_min, achieved, gens));
            }
        } else if best_infeasible.as_ref().is_none_or(|(g, ..)| gap < *g) {
            best_infeasible = Some((gap, d_min, achieved, gens));
        }
    }

    match best_feasible {
        Some((best_d_min, achieved_det, best_generators)) => Ok(OptResult {
            n,
            target_det,
            best_d_min,
            achieved_det,
            restarts,
            evaluations,
            best_generators,
        }),
        None => {
            let (gap, best_d_min, achieved_det, best_generators) =
                best_infeasible.unwrap_or((target_det, 0.0, 0.0, Vec::new()));
            Err(Error::SearchFailure {
                best: Box::new(OptResult {
                    n,
                    target_det,
                    best_d_min,
                    achieved_det,
                    restarts,
                    evaluations,
                    best_generators,
                }),
                gap,
            })
        }
    }
}

fn run_restart(n: usize, target: f64, budget: usize, seed: u64, index: u64) -> RestartOutcome {
    let m = n + 1;
    let dim = 2 * m * m;
    let mut rng = rng_for(seed, index);
    let mut x: Vec<f64> = (0..dim).map(|_| rng.sample(StandardNormal)).collect();

    let mut evals = 0usize;
    for (lambda, share, step) in PENALTY_STAGES {
        let stage_budget = ((budget as f64 * share) as usize).max(dim + 2);
        let out = optim::minimize(
            |p| penalized_objective(n, target, lambda, p),
            &x,
            step,
            stage_budget,
        );
        x = out.x;
        evals += out.evals;
    }

    let candidate = generators_from_params(n, &x)
        .and_then(Simplex::from_vertices)
        .ok()
        .map(|sx| (sx.d_min(), sx.abs_det(), sx.generators().to_vec()));
    RestartOutcome { evals, candidate }
}

/// `lambda (|D| - target)^2 - d_min` over the raw real parameters of
/// `n + 1` vectors, normalized per evaluation.
fn penalized_objective(n: usize, target: f64, lambda: f64, params: &[f64]) -> f64 {
    const INVALID: f64 = 1e9;
    let m = n + 1;
    let Ok(gens) = generators_from_params(n, params) else {
        return INVALID;
    };
    let abs_det = determinant(&CMatrix::from_rows(gens.clone()).expect("square by construction"))
        .norm();
    let mut d_min = f64::INFINITY;
    for j in 0..m {
        let others: Vec<CVector> = gens
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != j)
            .map(|(_, g)| g.clone())
            .collect();
        let span = blade_herm_norm(&wedge(&others));
        if !(span > 1e-14) {
            return INVALID;
        }
        d_min = d_min.min(abs_det / span);
    }
    lambda * (abs_det - target) * (abs_det - target) - d_min
}

fn generators_from_params(n: usize, params: &[f64]) -> Result<Vec<CVector>> {
    let m = n + 1;
    assert_eq!(params.len(), 2 * m * m, "parameter vector length mismatch");
    params
        .chunks_exact(2 * m)
        .map(|chunk| {
            let v = CVector::new(
                chunk
                    .chunks_exact(2)
                    .map(|p| Cplx::new(p[0], p[1]))
                    .collect(),
            )?;
            let norm = herm_norm(&v);
            if !(norm > 1e-12) {
                return Err(Error::Degenerate {
                    what: "parameter vector norm",
                    value: norm,
                    threshold: 1e-12,
                });
            }
            Ok(v.scaled(Cplx::new(1.0 / norm, 0.0)))
        })
        .collect()
}
