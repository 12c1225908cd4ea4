//! Extends a partial action `J(u_k) = v_k` to a full generalized complex
//! structure.
//!
//! Linear conditions (the quoted images, `J(v_k) = -u_k`, skewness for the
//! neutral pairing) cut out an affine family `J(t)`. Constraints of
//! `J^2 = -1` and `N_J = 0` that are linear in `t` are solved exactly; what
//! is left is searched on a small lattice, smallest points first.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::gcs::{gcs_type, nijenhuis, verify, GCSCandidate};
use crate::lie::{cotangent, neutral_gram, LieAlgebra};
use crate::matrix::Matrix;
use crate::poly::{Polynomial, Var};
use crate::scalar::{frac, int, Rational};

const MAX_POINTS: usize = 200_000;

fn free_var(i: usize) -> Var {
    Var::new(&format!("t_{i}"))
}

/// Solves the affine system `sum_i c_i x_i = d`; returns a particular
/// solution and a kernel basis, or `None` when inconsistent.
fn solve_affine(rows: &[(Vec<Rational>, Rational)], n: usize) -> Option<(Vec<Rational>, Vec<Vec<Rational>>)> {
    if rows.is_empty() {
        let kernel = (0..n)
            .map(|i| (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect())
            .collect();
        return Some((vec![Rational::zero(); n], kernel));
    }
    let aug = Matrix::from_fn(rows.len(), n + 1, |r, c| {
        if c < n {
            rows[r].0[c].clone()
        } else {
            rows[r].1.clone()
        }
    });
    let red = aug.rref();
    if red.pivots.contains(&n) {
        return None;
    }
    let mut x = vec![Rational::zero(); n];
    for (r, &p) in red.pivots.iter().enumerate() {
        x[p] = red.rref[(r, n)].clone();
    }
    let coef = Matrix::from_fn(rows.len(), n, |r, c| rows[r].0[c].clone());
    Some((x, coef.kernel()))
}

/// Linear part of a polynomial of degree at most one in `vars`.
fn linear_row(p: &Polynomial, vars: &[Var]) -> Option<(Vec<Rational>, Rational)> {
    if p.degree() > 1 {
        return None;
    }
    let mut row = vec![Rational::zero(); vars.len()];
    let mut rhs = Rational::zero();
    for (m, c) in p.terms() {
        match m.powers() {
            [] => rhs = -c.clone(),
            [(v, 1)] => {
                let i = vars.iter().position(|w| w == v)?;
                row[i] = c.clone();
            }
            _ => return None,
        }
    }
    Some((row, rhs))
}

fn constraints(l: &LieAlgebra<Polynomial>, j: &Matrix<Polynomial>) -> Vec<Polynomial> {
    let n = j.rows();
    let sq = &(j * j) + &Matrix::identity(n);
    let mut out: Vec<Polynomial> = sq.entries().map(|(_, _, p)| p.clone()).filter(|p| !p.is_zero()).collect();
    out.extend(nijenhuis(l, j).nonzero().map(|(_, _, _, p)| p.clone()));
    out
}

fn lattice_values() -> Vec<Rational> {
    vec![int(0), int(1), int(-1), int(2), int(-2), frac(1, 2), frac(-1, 2)]
}

/// Completes `J(u_k) = v_k` to a verified structure of type `type_k`.
pub fn complete(
    l: &LieAlgebra,
    pairs: &[(Vec<Rational>, Vec<Rational>)],
    type_k: usize,
) -> Result<GCSCandidate> {
    let m = l.dim();
    let n = 2 * m;
    let idx = |r: usize, c: usize| r * n + c;
    let mut rows: Vec<(Vec<Rational>, Rational)> = Vec::new();
    for (u, v) in pairs {
        if u.len() != n || v.len() != n {
            return Err(Error::pre("image vectors must live in the cotangent algebra"));
        }
        let neg_u: Vec<Rational> = u.iter().map(|x| -x.clone()).collect();
        for (a, b) in [(u, v.clone()), (v, neg_u)] {
            for r in 0..n {
                let mut row = vec![Rational::zero(); n * n];
                for (c, x) in a.iter().enumerate() {
                    row[idx(r, c)] = x.clone();
                }
                rows.push((row, b[r].clone()));
            }
        }
    }
    // G J + J^T G = 0
    let g = neutral_gram::<Rational>(m);
    for r in 0..n {
        for c in r..n {
            let mut row = vec![Rational::zero(); n * n];
            for k in 0..n {
                if !g[(r, k)].is_zero() {
                    row[idx(k, c)] = row[idx(k, c)].clone() + g[(r, k)].clone();
                }
                if !g[(k, c)].is_zero() {
                    row[idx(k, r)] = row[idx(k, r)].clone() + g[(k, c)].clone();
                }
            }
            rows.push((row, Rational::zero()));
        }
    }
    let (x0, kernel) = solve_affine(&rows, n * n)
        .ok_or_else(|| Error::pre("quoted images are inconsistent with an orthogonal J"))?;
    let mut vars: Vec<Var> = (0..kernel.len()).map(free_var).collect();
    let mut j = Matrix::from_fn(n, n, |r, c| {
        let mut p = Polynomial::constant(x0[idx(r, c)].clone());
        for (t, k) in vars.iter().zip(&kernel) {
            if !k[idx(r, c)].is_zero() {
                p = p + Polynomial::from_var(*t).scale(&k[idx(r, c)]);
            }
        }
        p
    });
    let lp: LieAlgebra<Polynomial> = cotangent(&l.lift::<Polynomial>()).total;

    // eliminate linear constraints until none remain
    loop {
        let cons = constraints(&lp, &j);
        let lin: Vec<(Vec<Rational>, Rational)> =
            cons.iter().filter_map(|p| linear_row(p, &vars)).collect();
        if lin.is_empty() {
            break;
        }
        let (x, ker) = solve_affine(&lin, vars.len())
            .ok_or_else(|| Error::pre("no completion: linear constraints are inconsistent"))?;
        let new_vars: Vec<Var> = (0..ker.len()).map(|i| free_var(vars.len() + i)).collect();
        let map: HashMap<Var, Polynomial> = vars
            .iter()
            .enumerate()
            .map(|(i, v)| {
                let mut p = Polynomial::constant(x[i].clone());
                for (w, k) in new_vars.iter().zip(&ker) {
                    if !k[i].is_zero() {
                        p = p + Polynomial::from_var(*w).scale(&k[i]);
                    }
                }
                (*v, p)
            })
            .collect();
        j = j.map(|p| p.substitute(&map));
        vars = new_vars;
    }

    let cons = constraints(&lp, &j);
    let vals = lattice_values();
    let total = vals.len().checked_pow(vars.len() as u32).unwrap_or(usize::MAX);
    if total > MAX_POINTS {
        return Err(Error::Unsupported(format!(
            "completion search space too large ({} free directions)",
            vars.len()
        )));
    }
    let mut points: Vec<Vec<usize>> = (0..total)
        .map(|mut code| {
            (0..vars.len())
                .map(|_| {
                    let d = code % vals.len();
                    code /= vals.len();
                    d
                })
                .collect()
        })
        .collect();
    points.sort_by_key(|p| (p.iter().filter(|&&d| d != 0).count(), p.iter().sum::<usize>(), p.clone()));
    for p in points {
        let env: HashMap<Var, Rational> =
            vars.iter().zip(&p).map(|(v, &d)| (*v, vals[d].clone())).collect();
        if !cons.iter().all(|c| c.eval(&env).is_zero()) {
            continue;
        }
        let jr = j.map(|e| e.eval(&env).as_constant().expect("all variables assigned"));
        let cand = GCSCandidate::new(jr)?;
        if m % 2 == 0 && gcs_type(&cand)? != type_k {
            continue;
        }
        if m % 2 == 1 || verify(l, &cand)?.passed() {
            return Ok(cand);
        }
    }
    Err(Error::pre(format!(
        "no completion of type {type_k} found on the search lattice"
    )))
}
