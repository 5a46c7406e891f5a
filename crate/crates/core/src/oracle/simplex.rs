//! Reflection-based simplex descent (Nelder–Mead) with restarts.

/// Result of a local minimization.
#[derive(Debug, Clone)]
pub struct Minimum {
    pub x: Vec<f64>,
    pub value: f64,
    pub evaluations: usize,
}

#[derive(Debug, Clone, Copy)]
pub struct SimplexOptions {
    pub initial_step: f64,
    pub max_iterations: usize,
    pub tolerance: f64,
    /// Fresh simplices built around the incumbent once a run stalls.
    pub restarts: usize,
}

impl Default for SimplexOptions {
    fn default() -> Self {
        Self { initial_step: 0.25, max_iterations: 200, tolerance: 1e-9, restarts: 6 }
    }
}

/// Minimizes `f` from `x0`. Each run stops after `max_iterations` or once the
/// spread of simplex values and the simplex diameter fall below `tolerance`;
/// the search then restarts with a halved step until a restart no longer
/// improves the value.
pub fn minimize<F: Fn(&[f64]) -> f64>(f: F, x0: &[f64], opts: SimplexOptions) -> Minimum {
    let mut best = Minimum { x: x0.to_vec(), value: f(x0), evaluations: 1 };
    let mut step = opts.initial_step;
    for _ in 0..=opts.restarts {
        let run = single_run(&f, &best.x, step, opts.max_iterations, opts.tolerance);
        let evaluations = best.evaluations + run.evaluations;
        let improved = run.value < best.value - opts.tolerance;
        if run.value < best.value {
            best = Minimum { evaluations, ..run };
        } else {
            best.evaluations = evaluations;
        }
        if !improved && step < 1e-3 {
            break;
        }
        step *= 0.5;
    }
    best
}

fn single_run<F: Fn(&[f64]) -> f64>(f: &F, x0: &[f64], step: f64, max_iter: usize, tol: f64) -> Minimum {
    let n = x0.len();
    let mut pts: Vec<Vec<f64>> = Vec::with_capacity(n + 1);
    pts.push(x0.to_vec());
    for i in 0..n {
        let mut p = x0.to_vec();
        p[i] += if p[i] > 0.0 { -step } else { step };
        pts.push(p);
    }
    let mut vals: Vec<f64> = pts.iter().map(|p| f(p)).collect();
    let mut evaluations = n + 1;

    for _ in 0..max_iter {
        let mut order: Vec<usize> = (0..=n).collect();
        order.sort_by(|&a, &b| vals[a].total_cmp(&vals[b]));
        pts = order.iter().map(|&i| pts[i].clone()).collect();
        vals = order.iter().map(|&i| vals[i]).collect();

        let spread = vals[n] - vals[0];
        let diameter = pts[1..]
            .iter()
            .map(|p| p.iter().zip(&pts[0]).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max))
            .fold(0.0, f64::max);
        if spread <= tol && diameter <= tol {
            break;
        }

        let centroid: Vec<f64> = (0..n).map(|j| pts[..n].iter().map(|p| p[j]).sum::<f64>() / n as f64).collect();
        let along = |t: f64| -> Vec<f64> { (0..n).map(|j| centroid[j] + t * (pts[n][j] - centroid[j])).collect() };

        let xr = along(-1.0);
        let fr = f(&xr);
        evaluations += 1;
        if fr < vals[0] {
            let xe = along(-2.0);
            let fe = f(&xe);
            evaluations += 1;
            if fe < fr {
                pts[n] = xe;
                vals[n] = fe;
            } else {
                pts[n] = xr;
                vals[n] = fr;
            }
        } else if fr < vals[n - 1] {
            pts[n] = xr;
            vals[n] = fr;
        } else {
            let (xc, fc) = if fr < vals[n] {
                let xc = along(-0.5);
                let fc = f(&xc);
                (xc, fc)
            } else {
                let xc = along(0.5);
                let fc = f(&xc);
                (xc, fc)
            };
            evaluations += 1;
            if fc < vals[n].min(fr) {
                pts[n] = xc;
                vals[n] = fc;
            } else {
                for i in 1..=n {
                    let shrunk: Vec<f64> = (0..n).map(|j| pts[0][j] + 0.5 * (pts[i][j] - pts[0][j])).collect();
                    vals[i] = f(&shrunk);
                    pts[i] = shrunk;
                }
                evaluations += n;
            }
        }
    }

    let i = (0..=n).min_by(|&a, &b| vals[a].total_cmp(&vals[b])).unwrap_or(0);
    Minimum { x: pts[i].clone(), value: vals[i], evaluations }
}
