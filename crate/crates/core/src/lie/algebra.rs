use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{FromRational, Rational, Ring};

/// Finite-dimensional Lie algebra given by structure constants
/// `[e_i, e_j] = sum_k c(i, j, k) e_k`.
#[derive(Clone, PartialEq)]
pub struct LieAlgebra<R = Rational> {
    name: String,
    labels: Vec<String>,
    consts: Vec<R>,
}

/// A Jacobi triple whose cyclic sum does not vanish.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct JacobiViolation {
    pub i: usize,
    pub j: usize,
    pub k: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Default)]
pub struct ValidationReport {
    pub violations: Vec<JacobiViolation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl<R: Ring> fmt::Debug for LieAlgebra<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LieAlgebra {:?} (dim {})", self.name, self.dim())?;
        for (i, j, v) in self.nonzero_brackets() {
            write!(f, "\n  [{}, {}] = {:?}", self.labels[i], self.labels[j], v)?;
        }
        Ok(())
    }
}

impl<R: Ring> LieAlgebra<R> {
    pub fn abelian(name: impl Into<String>, dim: usize) -> Self {
        LieAlgebra {
            name: name.into(),
            labels: (0..dim).map(|i| format!("e{i}")).collect(),
            consts: vec![R::zero(); dim * dim * dim],
        }
    }

    /// Builds an algebra from the brackets `[e_i, e_j]` for `i < j` (or any
    /// ordered pair; the opposite pair is filled in by antisymmetry).
    pub fn from_brackets(
        name: impl Into<String>,
        dim: usize,
        brackets: impl IntoIterator<Item = (usize, usize, Vec<R>)>,
    ) -> Result<Self> {
        let mut l = Self::abelian(name, dim);
        for (i, j, v) in brackets {
            if i >= dim || j >= dim || v.len() != dim {
                return Err(Error::Input(format!("bracket [{i},{j}] out of range for dim {dim}")));
            }
            if i == j {
                if v.iter().any(|x| !x.is_zero()) {
                    return Err(Error::Input(format!("nonzero self-bracket [{i},{i}]")));
                }
                continue;
            }
            l.set_bracket(i, j, v);
        }
        Ok(l)
    }

    pub fn set_bracket(&mut self, i: usize, j: usize, v: Vec<R>) {
        let m = self.dim();
        for (k, x) in v.into_iter().enumerate() {
            self.consts[(j * m + i) * m + k] = -x.clone();
            self.consts[(i * m + j) * m + k] = x;
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.dim());
        self.labels = labels;
        self
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    /// Coefficient of `e_k` in `[e_i, e_j]`.
    pub fn c(&self, i: usize, j: usize, k: usize) -> &R {
        let m = self.dim();
        &self.consts[(i * m + j) * m + k]
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<R> {
        let m = self.dim();
        self.consts[(i * m + j) * m..(i * m + j + 1) * m].to_vec()
    }

    pub fn bracket(&self, x: &[R], y: &[R]) -> Vec<R> {
        let m = self.dim();
        let mut out = vec![R::zero(); m];
        for i in 0..m {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..m {
                if y[j].is_zero() || i == j {
                    continue;
                }
                let s = x[i].clone() * y[j].clone();
                for (k, o) in out.iter_mut().enumerate() {
                    let c = self.c(i, j, k);
                    if !c.is_zero() {
                        *o = o.clone() + s.clone() * c.clone();
                    }
                }
            }
        }
        out
    }

    /// Matrix of `ad(e_i)` acting on column vectors.
    pub fn ad(&self, i: usize) -> Matrix<R> {
        let m = self.dim();
        Matrix::from_fn(m, m, |k, j| self.c(i, j, k).clone())
    }

    pub fn ad_vec(&self, x: &[R]) -> Matrix<R> {
        let m = self.dim();
        let mut out = Matrix::zeros(m, m);
        for (i, xi) in x.iter().enumerate() {
            if !xi.is_zero() {
                out = &out + &self.ad(i).scale(xi);
            }
        }
        out
    }

    /// Nonzero brackets `[e_i, e_j]` with `i < j`.
    pub fn nonzero_brackets(&self) -> Vec<(usize, usize, Vec<R>)> {
        let m = self.dim();
        let mut out = Vec::new();
        for i in 0..m {
            for j in i + 1..m {
                let v = self.bracket_basis(i, j);
                if v.iter().any(|x| !x.is_zero()) {
                    out.push((i, j, v));
                }
            }
        }
        out
    }

    pub fn is_abelian(&self) -> bool {
        self.consts.iter().all(R::is_zero)
    }

    /// Reports every triple `i < j < k` whose Jacobi cyclic sum is nonzero.
    pub fn validate(&self) -> ValidationReport {
        let m = self.dim();
        let e = |i: usize| {
            let mut v = vec![R::zero(); m];
            v[i] = R::one();
            v
        };
        let mut violations = Vec::new();
        for i in 0..m {
            for j in i + 1..m {
                for k in j + 1..m {
                    let a = self.bracket(&e(i), &self.bracket_basis(j, k));
                    let b = self.bracket(&e(j), &self.bracket_basis(k, i));
                    let c = self.bracket(&e(k), &self.bracket_basis(i, j));
                    if a.into_iter()
                        .zip(b)
                        .zip(c)
                        .any(|((x, y), z)| !(x + y + z).is_zero())
                    {
                        violations.push(JacobiViolation { i, j, k });
                    }
                }
            }
        }
        ValidationReport { violations }
    }

    pub fn map_scalars<S: Ring>(&self, f: impl Fn(&R) -> S) -> LieAlgebra<S> {
        LieAlgebra {
            name: self.name.clone(),
            labels: self.labels.clone(),
            consts: self.consts.iter().map(f).collect(),
        }
    }

    /// Trace of `ad(e_i)` for each basis vector.
    pub fn ad_traces(&self) -> Vec<R> {
        (0..self.dim()).map(|i| self.ad(i).trace()).collect()
    }

    /// Checks `<[x,y],z> + <y,[x,z]> = 0` on all basis triples.
    pub fn ad_invariance_check(&self, g: &Matrix<R>) -> bool {
        let m = self.dim();
        if g.rows() != m || g.cols() != m {
            return false;
        }
        let pair = |u: &[R], w: &[R]| -> R {
            let gw = g.mul_vec(w);
            u.iter().zip(gw).fold(R::zero(), |acc, (a, b)| acc + a.clone() * b)
        };
        let e = |i: usize| {
            let mut v = vec![R::zero(); m];
            v[i] = R::one();
            v
        };
        for x in 0..m {
            for y in 0..m {
                let xy = self.bracket_basis(x, y);
                for z in 0..m {
                    let xz = self.bracket_basis(x, z);
                    if !(pair(&xy, &e(z)) + pair(&e(y), &xz)).is_zero() {
                        return false;
                    }
                }
            }
        }
        true
    }
}

impl LieAlgebra<Rational> {
    pub fn lift<S: FromRational>(&self) -> LieAlgebra<S> {
        self.map_scalars(S::from_rational)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    pub(crate) fn aff_r() -> LieAlgebra {
        LieAlgebra::from_brackets("aff(R)", 2, [(0, 1, vec![int(0), int(1)])]).unwrap()
    }

    #[test]
    fn abelian_is_valid() {
        assert!(LieAlgebra::<Rational>::abelian("a4", 4).validate().is_valid());
    }

    #[test]
    fn aff_r_is_valid() {
        assert!(aff_r().validate().is_valid());
    }

    #[test]
    fn jacobi_violation_is_located() {
        // [e0,e1]=e1, [e0,e2]=e2, [e1,e2]=e0 fails Jacobi on (0,1,2)
        let l = LieAlgebra::from_brackets(
            "bad",
            3,
            [
                (0, 1, vec![int(0), int(1), int(0)]),
                (0, 2, vec![int(0), int(0), int(1)]),
                (1, 2, vec![int(1), int(0), int(0)]),
            ],
        )
        .unwrap();
        // oracle: cyclic sum computed by hand
        // [e0,[e1,e2]] = [e0,e0] = 0; [e1,[e2,e0]] = [e1,-e2] = -e0;
        // [e2,[e0,e1]] = [e2,e1] = -e0; total -2 e0
        let rep = l.validate();
        assert_eq!(rep.violations, vec![JacobiViolation { i: 0, j: 1, k: 2 }]);
    }

    #[test]
    fn identity_gram_is_not_invariant_on_aff_r() {
        assert!(!aff_r().ad_invariance_check(&Matrix::identity(2)));
    }
}
