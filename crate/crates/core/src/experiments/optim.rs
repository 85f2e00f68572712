//! Derivative-free simplex descent used by the conjecture search.

pub(crate) struct Outcome {
    pub x: Vec<f64>,
    #[allow(dead_code)] // read by the unit tests
    pub fx: f64,
    pub evals: usize,
}

/// Minimizes `f` by the Nelder-Mead method with the textbook coefficients
/// (reflection 1, expansion 2, contraction 1/2, shrink 1/2).
///
/// The initial simplex is `x0` plus a step along each coordinate. Stops
/// when the evaluation budget runs out or when both the value spread and
/// the simplex diameter collapse.
pub(crate) fn minimize<F>(mut f: F, x0: &[f64], initial_step: f64, max_evals: usize) -> Outcome
where
    F: FnMut(&[f64]) -> f64,
{
    const ALPHA: f64 = 1.0;
    const GAMMA: f64 = 2.0;
    const RHO: f64 = 0.5;
    const SIGMA: f64 = 0.5;
    const F_SPREAD_TOL: f64 = 1e-13;
    const X_SPREAD_TOL: f64 = 1e-10;

    let dim = x0.len();
    let mut evals = 0usize;
    let mut eval = |x: &[f64], evals: &mut usize| -> f64 {
        *evals += 1;
        f(x)
    };

    let mut points: Vec<(Vec<f64>, f64)> = Vec::with_capacity(dim + 1);
    let fx0 = eval(x0, &mut evals);
    points.push((x0.to_vec(), fx0));
    for i in 0..dim {
        let mut xi = x0.to_vec();
        xi[i] += initial_step;
        let fxi = eval(&xi, &mut evals);
        points.push((xi, fxi));
    }

    loop {
        points.sort_by(|a, b| a.1.total_cmp(&b.1));
        if evals >= max_evals {
            break;
        }
        let spread = points[dim].1 - points[0].1;
        let diameter = points[1..]
            .iter()
            .map(|(x, _)| {
                x.iter()
                    .zip(&points[0].0)
                    .map(|(a, b)| (a - b).abs())
                    .fold(0.0, f64::max)
            })
            .fold(0.0, f64::max);
        if spread.abs() <= F_SPREAD_TOL * (1.0 + points[0].1.abs()) && diameter <= X_SPREAD_TOL {
            break;
        }

        let centroid: Vec<f64> = (0..dim)
            .map(|c| points[..dim].iter().map(|(x, _)| x[c]).sum::<f64>() / dim as f64)
            .collect();
        let worst = points[dim].clone();
        let reflected: Vec<f64> = centroid
            .iter()
            .zip(&worst.0)
            .map(|(c, w)| c + ALPHA * (c - w))
            .collect();
        let fr = eval(&reflected, &mut evals);

        if fr < points[0].1 {
            let expanded: Vec<f64> = centroid
                .iter()
                .zip(&worst.0)
                .map(|(c, w)| c + GAMMA * (c - w))
                .collect();
            let fe = eval(&expanded, &mut evals);
            points[dim] = if fe < fr {
                (expanded, fe)
            } else {
                (reflected, fr)
            };
        } else if fr < points[dim - 1].1 {
            points[dim] = (reflected, fr);
        } else {
            let (contracted, fc) = if fr < worst.1 {
                let outside: Vec<f64> = centroid
                    .iter()
                    .zip(&reflected)
                    .map(|(c, r)| c + RHO * (r - c))
                    .collect();
                let fc = eval(&outside, &mut evals);
                if fc <= fr {
                    (outside, fc)
                } else {
                    shrink(&mut points, SIGMA, &mut eval, &mut evals);
                    continue;
                }
            } else {
                let inside: Vec<f64> = centroid
                    .iter()
                    .zip(&worst.0)
                    .map(|(c, w)| c + RHO * (w - c))
                    .collect();
                let fc = eval(&inside, &mut evals);
                if fc < worst.1 {
                    (inside, fc)
                } else {
                    shrink(&mut points, SIGMA, &mut eval, &mut evals);
                    continue;
                }
            };
            points[dim] = (contracted, fc);
        }
    }

    points.sort_by(|a, b| a.1.total_cmp(&b.1));
    let (x, fx) = points.swap_remove(0);
    Outcome { x, fx, evals }
}

fn shrink<E>(points: &mut [(Vec<f64>, f64)], sigma: f64, eval: &mut E, evals: &mut usize)
where
    E: FnMut(&[f64], &mut usize) -> f64,
{
    let best = points[0].0.clone();
    for p in points.iter_mut().skip(1) {
        for (x, b) in p.0.iter_mut().zip(&best) {
            *x = b + sigma * (*x - b);
        }
        p.1 = eval(&p.0, evals);
    }
}
