//! Chevalley-Eilenberg cohomology with trivial coefficients, and the
//! closed-2-form analysis used to decide whether an algebra is symplectic.
//!
//! Cochains of degree k use the basis `alpha^S` over k-subsets `S`, ordered
//! lexicographically. The differential is
//! `d w(x_0..x_k) = sum_{i<j} (-1)^{i+j} w([x_i, x_j], x_0..^i..^j..x_k)`,
//! which in degree 1 is `d alpha(x, y) = -alpha([x, y])`.

use std::collections::HashMap;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::matrix::Matrix;
use crate::poly::Polynomial;
use crate::scalar::{int, Field, Rational};

/// Lexicographically ordered k-subsets of `0..m`.
pub fn subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            if m - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, m, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= m {
        rec(0, m, k, &mut Vec::new(), &mut out);
    }
    out
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Matrix of `d : Lambda^k g* -> Lambda^{k+1} g*`.
pub fn ce_differential<F: Field>(l: &LieAlgebra<F>, k: usize) -> Result<Matrix<F>> {
    let m = l.dim();
    if k > m {
        return Err(Error::pre(format!("degree {k} exceeds dimension {m}")));
    }
    let src = subsets(m, k);
    let dst = subsets(m, k + 1);
    let index: HashMap<&[usize], usize> = src.iter().enumerate().map(|(n, s)| (s.as_slice(), n)).collect();
    let mut d: Matrix<F> = Matrix::zeros(dst.len(), src.len());
    for (row, t) in dst.iter().enumerate() {
        for i in 0..t.len() {
            for j in i + 1..t.len() {
                let rest: Vec<usize> = t
                    .iter()
                    .enumerate()
                    .filter(|&(p, _)| p != i && p != j)
                    .map(|(_, &x)| x)
                    .collect();
                let outer_sign = (i + j) % 2 == 1;
                for lidx in 0..m {
                    let c = l.c(t[i], t[j], lidx);
                    if c.is_zero() || rest.contains(&lidx) {
                        continue;
                    }
                    let below = rest.iter().filter(|&&x| x < lidx).count();
                    let mut s: Vec<usize> = rest.clone();
                    s.insert(below, lidx);
                    let col = index[s.as_slice()];
                    let negative = outer_sign ^ (below % 2 == 1);
                    let v = if negative {
                        d[(row, col)].clone() - c.clone()
                    } else {
                        d[(row, col)].clone() + c.clone()
                    };
                    d[(row, col)] = v;
                }
            }
        }
    }
    Ok(d)
}

/// The full complex with `d_{k+1} d_k = 0` checked.
#[derive(Debug, Clone)]
pub struct CEComplex<F = Rational> {
    pub dim: usize,
    pub differentials: Vec<Matrix<F>>,
}

impl<F: Field> CEComplex<F> {
    pub fn new(l: &LieAlgebra<F>) -> Result<Self> {
        let m = l.dim();
        let differentials = (0..=m)
            .map(|k| ce_differential(l, k))
            .collect::<Result<Vec<_>>>()?;
        for k in 0..m {
            if !(&differentials[k + 1] * &differentials[k]).is_zero() {
                return Err(Error::pre(format!("d^2 != 0 in degree {k}; is the algebra valid?")));
            }
        }
        Ok(CEComplex { dim: m, differentials })
    }

    pub fn betti_numbers(&self) -> Vec<usize> {
        let ranks: Vec<usize> = self.differentials.iter().map(Matrix::rank).collect();
        (0..=self.dim)
            .map(|k| binomial(self.dim, k) - ranks[k] - if k > 0 { ranks[k - 1] } else { 0 })
            .collect()
    }
}

pub fn betti<F: Field>(l: &LieAlgebra<F>, k: usize) -> Result<usize> {
    let m = l.dim();
    if k > m {
        return Err(Error::pre(format!("degree {k} exceeds dimension {m}")));
    }
    let r = ce_differential(l, k)?.rank();
    let r_prev = if k > 0 { ce_differential(l, k - 1)?.rank() } else { 0 };
    Ok(binomial(m, k) - r - r_prev)
}

pub fn betti_numbers<F: Field>(l: &LieAlgebra<F>) -> Result<Vec<usize>> {
    Ok(CEComplex::new(l)?.betti_numbers())
}

/// Coordinates of a skew matrix in the `alpha^{ij}` basis.
pub fn two_form_vector<F: Field>(w: &Matrix<F>) -> Vec<F> {
    subsets(w.rows(), 2).into_iter().map(|s| w[(s[0], s[1])].clone()).collect()
}

pub fn two_form_matrix<F: Field>(m: usize, v: &[F]) -> Matrix<F> {
    let mut w = Matrix::zeros(m, m);
    for (s, x) in subsets(m, 2).into_iter().zip(v) {
        w[(s[0], s[1])] = x.clone();
        w[(s[1], s[0])] = -x.clone();
    }
    w
}

pub fn is_closed_two_form<F: Field>(l: &LieAlgebra<F>, w: &Matrix<F>) -> bool {
    let d2 = ce_differential(l, 2).expect("degree 2 exists when dim >= 2");
    d2.mul_vec(&two_form_vector(w)).iter().all(F::is_zero)
}

/// Basis of `ker d_2`, as skew matrices `W_ij = w(e_i, e_j)`.
pub fn closed_two_forms<F: Field>(l: &LieAlgebra<F>) -> Vec<Matrix<F>> {
    let m = l.dim();
    if m < 2 {
        return Vec::new();
    }
    ce_differential(l, 2)
        .expect("degree 2 exists")
        .kernel()
        .into_iter()
        .map(|v| two_form_matrix(m, &v))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Outcome {
    /// A closed, nondegenerate 2-form.
    Witness {
        #[serde(serialize_with = "crate::io::ser_matrix")]
        form: Matrix<Rational>,
        #[serde(serialize_with = "crate::io::ser_rational")]
        pfaffian: Rational,
    },
    /// The Pfaffian of the generic closed 2-form vanishes identically.
    Obstructed {
        #[serde(serialize_with = "crate::io::ser_display")]
        pfaffian: Polynomial,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ObstructionVerdict {
    pub closed_two_form_dim: usize,
    #[serde(serialize_with = "crate::io::ser_display")]
    pub generic_pfaffian: Polynomial,
    pub outcome: Outcome,
}

impl ObstructionVerdict {
    pub fn is_obstructed(&self) -> bool {
        matches!(self.outcome, Outcome::Obstructed { .. })
    }
}

/// Integer tuples of length `n` with entries in `[-bound, bound]`, by
/// increasing L1 norm, each shell in lexicographic order.
fn shells(n: usize, bound: i64) -> impl Iterator<Item = Vec<i64>> {
    let max = bound * n as i64;
    (1..=max).flat_map(move |s| {
        let mut out = Vec::new();
        fn rec(n: usize, s: i64, bound: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
            if cur.len() == n {
                if s == 0 {
                    out.push(cur.clone());
                }
                return;
            }
            let left = (n - cur.len() - 1) as i64 * bound;
            for x in -bound.min(s)..=bound.min(s) {
                let r = s - x.abs();
                if r < 0 || r > left {
                    continue;
                }
                cur.push(x);
                rec(n, r, bound, cur, out);
                cur.pop();
            }
        }
        rec(n, s, bound, &mut Vec::new(), &mut out);
        out
    })
}

/// Decides whether `L` carries a symplectic form, with a certificate either way.
pub fn symplectic_obstruction(l: &LieAlgebra<Rational>) -> Result<ObstructionVerdict> {
    let m = l.dim();
    if m % 2 == 1 {
        return Err(Error::pre(format!("symplectic forms need even dimension, got {m}")));
    }
    let basis = closed_two_forms(l);
    let r = basis.len();
    let vars: Vec<Polynomial> = (1..=r).map(|i| Polynomial::var(&format!("c{i}"))).collect();
    let generic = Matrix::from_fn(m, m, |i, j| {
        basis
            .iter()
            .zip(&vars)
            .fold(Polynomial::zero(), |acc, (w, c)| &acc + &c.scale(&w[(i, j)]))
    });
    let pf = generic.pfaffian();
    if pf.is_zero() {
        return Ok(ObstructionVerdict {
            closed_two_form_dim: r,
            generic_pfaffian: pf.clone(),
            outcome: Outcome::Obstructed { pfaffian: pf },
        });
    }
    let form_at = |t: &[i64]| {
        let mut w = Matrix::zeros(m, m);
        for (b, &x) in basis.iter().zip(t) {
            if x != 0 {
                w = &w + &b.scale(&int(x));
            }
        }
        w
    };
    for bound in [3, 6, 12] {
        for t in shells(r, bound) {
            let w = form_at(&t);
            let p = w.pfaffian();
            if !p.is_zero() {
                return Ok(ObstructionVerdict {
                    closed_two_form_dim: r,
                    generic_pfaffian: pf,
                    outcome: Outcome::Witness { form: w, pfaffian: p },
                });
            }
        }
    }
    Err(Error::Unsupported(
        "nonzero Pfaffian without a small integer witness".into(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subset_order_and_counts() {
        assert_eq!(subsets(4, 2).len(), 6);
        assert_eq!(subsets(3, 2), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(subsets(3, 0), vec![Vec::<usize>::new()]);
        assert!(subsets(2, 3).is_empty());
        assert_eq!(binomial(8, 3), 56);
    }

    #[test]
    fn abelian_betti_is_binomial() {
        let l = LieAlgebra::<Rational>::abelian("a4", 4);
        assert_eq!(betti_numbers(&l).unwrap(), vec![1, 4, 6, 4, 1]);
        assert_eq!(closed_two_forms(&l).len(), 6);
        assert!(ce_differential(&l, 0).unwrap().is_zero());
    }

    #[test]
    fn aff_r_two_forms_and_witness() {
        let l = LieAlgebra::from_brackets("aff(R)", 2, [(0, 1, vec![int(0), int(1)])]).unwrap();
        assert_eq!(closed_two_forms(&l).len(), 1);
        // d alpha^1 = -alpha^01 since [e0,e1] = e1
        let d1 = ce_differential(&l, 1).unwrap();
        assert_eq!(d1.to_rows(), vec![vec![int(0), int(-1)]]);
        assert!(!symplectic_obstruction(&l).unwrap().is_obstructed());
    }

    #[test]
    fn shells_cover_small_box_in_norm_order() {
        let v: Vec<Vec<i64>> = shells(2, 1).collect();
        assert_eq!(v.len(), 8);
        assert_eq!(v[0].iter().map(|x| x.abs()).sum::<i64>(), 1);
        assert_eq!(v[7].iter().map(|x| x.abs()).sum::<i64>(), 2);
    }

    #[test]
    fn abelian_four_has_a_witness() {
        let l = LieAlgebra::<Rational>::abelian("a4", 4);
        let v = symplectic_obstruction(&l).unwrap();
        match v.outcome {
            Outcome::Witness { form, pfaffian } => {
                assert!(!pfaffian.is_zero());
                assert_eq!(form.pfaffian(), pfaffian);
            }
            _ => panic!("abelian algebra is symplectic"),
        }
        assert!(symplectic_obstruction(&LieAlgebra::<Rational>::abelian("a3", 3)).is_err());
    }
}
