use super::system::System;

/// Gradient descent with Armijo backtracking. Stops at `target` or after
/// `max_iters` accepted steps. Iterates stay in the box `|x_i| <= bound`.
pub(crate) fn descend(sys: &System, x: &mut [f64], bound: f64, max_iters: usize, target: f64) -> f64 {
    let mut t: f64 = 1e-2;
    let (mut f, mut g) = sys.value_grad(x);
    let mut trial = vec![0.0; x.len()];
    for _ in 0..max_iters {
        if !f.is_finite() || f < target {
            break;
        }
        let gg: f64 = g.iter().map(|v| v * v).sum();
        if gg == 0.0 {
            break;
        }
        t = (t * 2.0).min(1e3);
        let accepted = loop {
            for i in 0..x.len() {
                trial[i] = (x[i] - t * g[i]).clamp(-bound, bound);
            }
            let ft = sys.value(&trial);
            if ft.is_finite() && ft <= f - 1e-4 * t * gg {
                break true;
            }
            t *= 0.5;
            if t < 1e-18 {
                break false;
            }
        };
        if !accepted {
            break;
        }
        x.copy_from_slice(&trial);
        (f, g) = sys.value_grad(x);
    }
    f
}

/// Levenberg-Marquardt on the `free` coordinates; the others stay put.
pub(crate) fn polish(sys: &System, x: &mut [f64], bound: f64, free: &[usize], max_iters: usize) -> f64 {
    let mut f = sys.value(x);
    if free.is_empty() || !f.is_finite() {
        return f;
    }
    let mut mu = 1e-3;
    let (mut r, mut jac) = sys.jacobian(x, free);
    let mut trial = x.to_vec();
    for _ in 0..max_iters {
        if f < 1e-28 {
            break;
        }
        let a = jac.transpose() * &jac;
        let g = jac.transpose() * &r;
        let mut improved = false;
        while mu < 1e12 {
            let mut m = a.clone();
            for i in 0..free.len() {
                m[(i, i)] += mu * (a[(i, i)] + 1e-9);
            }
            let step = match m.clone().cholesky() {
                Some(c) => c.solve(&(-&g)),
                None => match m.lu().solve(&(-&g)) {
                    Some(s) => s,
                    None => {
                        mu *= 4.0;
                        continue;
                    }
                },
            };
            trial.copy_from_slice(x);
            for (c, &v) in free.iter().enumerate() {
                trial[v] = (trial[v] + step[c]).clamp(-bound, bound);
            }
            let ft = sys.value(&trial);
            if ft.is_finite() && ft < f {
                x.copy_from_slice(&trial);
                f = ft;
                mu = (mu / 3.0).max(1e-15);
                improved = true;
                break;
            }
            mu *= 4.0;
        }
        if !improved {
            break;
        }
        (r, jac) = sys.jacobian(x, free);
    }
    f
}
