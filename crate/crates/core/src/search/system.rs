//! The residual system: `J^2 + I`, the Nijenhuis components and the rank
//! penalties, compiled to sparse `f64` polynomials in the free entries.

use std::collections::HashMap;

use nalgebra::{DMatrix, DVector};
use num_traits::Zero;
use smallvec::SmallVec;

use crate::lie::LieAlgebra;
use crate::matrix::Matrix;
use crate::poly::{Polynomial, Var};
use crate::scalar::{to_f64, Rational};
use crate::symbolic::{generators, symbolic_gcs_m, Mode};

#[derive(Debug, Clone)]
struct Term {
    coeff: f64,
    powers: SmallVec<[(u16, u8); 4]>,
}

#[derive(Debug, Clone)]
pub(crate) struct CPoly {
    terms: Vec<Term>,
}

impl CPoly {
    fn compile(p: &Polynomial, index: &HashMap<Var, u16>) -> CPoly {
        let terms = p
            .terms()
            .map(|(m, c)| Term {
                coeff: to_f64(c),
                powers: m.powers().iter().map(|(v, e)| (index[v], *e as u8)).collect(),
            })
            .collect();
        CPoly { terms }
    }

    pub(crate) fn eval(&self, x: &[f64]) -> f64 {
        self.terms
            .iter()
            .map(|t| t.coeff * t.powers.iter().map(|&(v, e)| x[v as usize].powi(e as i32)).product::<f64>())
            .sum()
    }

    /// Adds `scale * grad p(x)` to `out`.
    fn add_grad(&self, x: &[f64], scale: f64, out: &mut [f64]) {
        for t in &self.terms {
            for (i, &(v, e)) in t.powers.iter().enumerate() {
                let mut d = t.coeff * e as f64 * x[v as usize].powi(e as i32 - 1);
                for (k, &(w, f)) in t.powers.iter().enumerate() {
                    if k != i {
                        d *= x[w as usize].powi(f as i32);
                    }
                }
                out[v as usize] += scale * d;
            }
        }
    }
}

/// Where each free variable sits in `J`, with its sign.
#[derive(Debug, Clone)]
pub(crate) struct Layout {
    pub m: usize,
    pub slots: Vec<Vec<(usize, usize, bool)>>,
    pub names: Vec<String>,
}

impl Layout {
    pub(crate) fn matrix(&self, x: &[Rational]) -> Matrix<Rational> {
        let mut j = Matrix::zeros(2 * self.m, 2 * self.m);
        for (v, slots) in self.slots.iter().enumerate() {
            for &(r, c, neg) in slots {
                j[(r, c)] = if neg { -x[v].clone() } else { x[v].clone() };
            }
        }
        j
    }
}

/// Lower bound on the summed squares of the minors that certify the rank
/// of `J_2`. Small values let the search slide toward structures of higher
/// type; large ones push typed solutions out of the box.
const RANK_FLOOR: f64 = 16.0;

pub(crate) struct System {
    pub layout: Layout,
    pub n: usize,
    /// Squared as they stand: the integrability conditions, then the
    /// minors that cap the rank of `J_2`.
    equations: Vec<CPoly>,
    /// Minors whose squares must stay above `delta` (rank floor).
    floor: Vec<CPoly>,
    delta: f64,
}

fn minors(b: &Matrix<Polynomial>, order: usize) -> Vec<Polynomial> {
    let m = b.rows();
    if order == 0 || order > m {
        return Vec::new();
    }
    let subsets = subsets(m, order);
    let mut out = Vec::new();
    for rows in &subsets {
        for cols in &subsets {
            let d = b.submatrix(rows, cols).determinant_expansion();
            if !d.is_zero() {
                out.push(d);
            }
        }
    }
    out
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

impl System {
    /// `type_k` adds the rank conditions `rank J_2 = m - 2k`.
    pub(crate) fn new(l: &LieAlgebra, type_k: Option<usize>) -> System {
        let m = l.dim();
        let sym = symbolic_gcs_m(m);
        let mut names = Vec::new();
        let mut index = HashMap::new();
        let mut slots: Vec<Vec<(usize, usize, bool)>> = Vec::new();
        for r in 0..2 * m {
            for c in 0..2 * m {
                let p = &sym[(r, c)];
                let Some((mono, coeff)) = p.terms().next() else { continue };
                let v = mono.powers()[0].0;
                let k = *index.entry(v).or_insert_with(|| {
                    names.push(v.name());
                    slots.push(Vec::new());
                    (names.len() - 1) as u16
                });
                slots[k as usize].push((r, c, coeff < &Rational::zero()));
            }
        }
        let lp: LieAlgebra<Polynomial> = l.lift();
        let mut equations: Vec<CPoly> = generators(&lp, Mode::Gcs)
            .values()
            .filter(|p| !p.is_zero())
            .map(|p| CPoly::compile(p, &index))
            .collect();
        let mut floor = Vec::new();
        if let Some(k) = type_k {
            let rank = m - 2 * k;
            let b = sym.block(0, m, m, m);
            equations.extend(minors(&b, rank + 2).iter().map(|p| CPoly::compile(p, &index)));
            floor = minors(&b, rank).iter().map(|p| CPoly::compile(p, &index)).collect();
        }
        System {
            n: names.len(),
            layout: Layout { m, slots, names },
            equations,
            floor,
            delta: RANK_FLOOR,
        }
    }

    fn floor_sum(&self, x: &[f64]) -> (f64, Vec<f64>) {
        let vals: Vec<f64> = self.floor.iter().map(|p| p.eval(x)).collect();
        (vals.iter().map(|v| v * v).sum(), vals)
    }

    fn barrier(&self, x: &[f64]) -> Option<(f64, Vec<f64>)> {
        if self.floor.is_empty() {
            return None;
        }
        let (s, vals) = self.floor_sum(x);
        Some(((self.delta - s).max(0.0), vals))
    }

    pub(crate) fn residuals(&self, x: &[f64]) -> Vec<f64> {
        let mut r: Vec<f64> = self.equations.iter().map(|p| p.eval(x)).collect();
        if let Some((b, _)) = self.barrier(x) {
            r.push(b);
        }
        r
    }

    pub(crate) fn value(&self, x: &[f64]) -> f64 {
        self.residuals(x).iter().map(|v| v * v).sum()
    }

    pub(crate) fn value_grad(&self, x: &[f64]) -> (f64, Vec<f64>) {
        let mut g = vec![0.0; self.n];
        let mut f = 0.0;
        for p in &self.equations {
            let v = p.eval(x);
            f += v * v;
            if v != 0.0 {
                p.add_grad(x, 2.0 * v, &mut g);
            }
        }
        if let Some((b, vals)) = self.barrier(x) {
            f += b * b;
            if b > 0.0 {
                // d(b^2) = -2b * sum 2 m_i dm_i
                for (p, v) in self.floor.iter().zip(&vals) {
                    p.add_grad(x, -4.0 * b * v, &mut g);
                }
            }
        }
        (f, g)
    }

    /// Residuals and their Jacobian restricted to the `free` columns.
    pub(crate) fn jacobian(&self, x: &[f64], free: &[usize]) -> (DVector<f64>, DMatrix<f64>) {
        let rows = self.equations.len() + usize::from(!self.floor.is_empty());
        let mut jac = DMatrix::zeros(rows, free.len());
        let mut r = DVector::zeros(rows);
        let mut g = vec![0.0; self.n];
        let put = |row: usize, g: &[f64], jac: &mut DMatrix<f64>| {
            for (c, &v) in free.iter().enumerate() {
                jac[(row, c)] = g[v];
            }
        };
        for (i, p) in self.equations.iter().enumerate() {
            r[i] = p.eval(x);
            g.iter_mut().for_each(|v| *v = 0.0);
            p.add_grad(x, 1.0, &mut g);
            put(i, &g, &mut jac);
        }
        if let Some((b, vals)) = self.barrier(x) {
            let i = rows - 1;
            r[i] = b;
            g.iter_mut().for_each(|v| *v = 0.0);
            if b > 0.0 {
                for (p, v) in self.floor.iter().zip(&vals) {
                    p.add_grad(x, -2.0 * v, &mut g);
                }
            }
            put(i, &g, &mut jac);
        }
        (r, jac)
    }
}
