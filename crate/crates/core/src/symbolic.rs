//! Generic (symbolic) structures and the polynomial identities they must
//! satisfy.
//!
//! Two shapes are supported:
//! * the generic orthogonal endomorphism of `T*g` (`dim g = m`), with entries
//!   `a_{rc}` in column convention, `J(X_c) = sum_r a_{rc} X_r`;
//! * the generic endomorphism `j` of `g` itself in row convention,
//!   `j(X_i) = sum_k a_{ik} X_k`, used for complex structures on `g`.

use std::collections::BTreeMap;

use num_traits::One;

use crate::gcs::{nijenhuis, NijenhuisTensor};
use crate::lie::LieAlgebra;
use crate::matrix::Matrix;
use crate::poly::Polynomial;

/// Variable name for the entry in row `r`, column `c` (1-based).
pub fn entry_name(prefix: &str, r: usize, c: usize) -> String {
    if r >= 10 || c >= 10 {
        format!("{prefix}{r}_{c}")
    } else {
        format!("{prefix}{r}{c}")
    }
}

fn a(r: usize, c: usize) -> Polynomial {
    Polynomial::var(&entry_name("a", r, c))
}

/// Generic orthogonal endomorphism of `T*g` with `dim g = m`: free `J_1`,
/// skew `J_2`, `J_3`, and `J_4 = -J_1^T`.
pub fn symbolic_gcs_m(m: usize) -> Matrix<Polynomial> {
    let mut j = Matrix::zeros(2 * m, 2 * m);
    for r in 0..m {
        for c in 0..m {
            j[(r, c)] = a(r + 1, c + 1);
            j[(m + r, m + c)] = -a(c + 1, r + 1);
        }
    }
    for i in 0..m {
        for k in i + 1..m {
            let upper = a(i + 1, m + k + 1);
            j[(i, m + k)] = upper.clone();
            j[(k, m + i)] = -upper;
            let lower = a(m + k + 1, i + 1);
            j[(m + k, i)] = lower.clone();
            j[(m + i, k)] = -lower;
        }
    }
    j
}

/// `symbolic_gcs_m(2n)`.
pub fn symbolic_gcs(n: usize) -> Matrix<Polynomial> {
    symbolic_gcs_m(2 * n)
}

/// Free `m x m` matrix `A = (a_{ik})`; the operator `j` with
/// `j(X_i) = sum_k a_{ik} X_k` has column matrix `A^T`.
pub fn symbolic_row_matrix(m: usize) -> Matrix<Polynomial> {
    Matrix::from_fn(m, m, |r, c| a(r + 1, c + 1))
}

pub fn symbolic_nijenhuis(l: &LieAlgebra<Polynomial>) -> NijenhuisTensor<Polynomial> {
    let m = l.dim() / 2;
    nijenhuis(l, &symbolic_gcs_m(m))
}

pub fn count_variables(j: &Matrix<Polynomial>) -> usize {
    let mut vars = std::collections::BTreeSet::new();
    for (_, _, p) in j.entries() {
        vars.extend(p.variables());
    }
    vars.len()
}

/// How the generic structure relates to the algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    /// Generic orthogonal `J` on the cotangent algebra.
    Gcs,
    /// Generic `j` on the algebra itself, row convention.
    Complex,
}

/// Name of the generator `N_{ij}^k` (1-based).
pub fn nijenhuis_name(i: usize, j: usize, k: usize) -> String {
    if i >= 10 || j >= 10 || k >= 10 {
        format!("N{i}_{j}^{k}")
    } else {
        format!("N{i}{j}^{k}")
    }
}

pub fn involution_name(i: usize, j: usize) -> String {
    if i >= 10 || j >= 10 {
        format!("Jsq{i}_{j}")
    } else {
        format!("Jsq{i}^{j}")
    }
}

/// All polynomials that vanish for an integrable almost complex structure
/// of the given shape: `N_ij^k` for `i < j`, and `(D^2 + I)_i^j` where `D`
/// is the displayed matrix.
pub fn generators(l: &LieAlgebra<Polynomial>, mode: Mode) -> BTreeMap<String, Polynomial> {
    let (algebra, operator, display) = match mode {
        Mode::Gcs => {
            let t = crate::lie::cotangent(l).total;
            let j = symbolic_gcs_m(l.dim());
            (t, j.clone(), j)
        }
        Mode::Complex => {
            let a = symbolic_row_matrix(l.dim());
            (l.clone(), a.transpose(), a)
        }
    };
    let mut out = BTreeMap::new();
    let n = nijenhuis(&algebra, &operator);
    for (i, j, k, p) in n.iter() {
        out.insert(nijenhuis_name(i + 1, j + 1, k + 1), p.clone());
    }
    let sq = &display * &display;
    for (i, j, p) in sq.entries() {
        let v = if i == j { p + &Polynomial::one() } else { p.clone() };
        out.insert(involution_name(i + 1, j + 1), v);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::neutral_gram;
    use num_traits::Zero;
    use crate::scalar::{FromRational, Rational};

    #[test]
    fn variable_counts() {
        assert_eq!(count_variables(&symbolic_gcs(2)), 28);
        assert_eq!(count_variables(&symbolic_gcs(1)), 6);
        assert_eq!(count_variables(&symbolic_gcs_m(6)), 66);
    }

    #[test]
    fn generic_shape_is_orthogonal() {
        for n in 1..=2 {
            let j = symbolic_gcs(n);
            let g: Matrix<Polynomial> = neutral_gram::<Rational>(2 * n).map(|q| Polynomial::from_rational(q));
            let lhs = &(&j.transpose() * &g) * &j;
            // J^T G J = G only after J^2 = -1; the linear condition G J + J^T G = 0 holds identically
            let skew = &(&g * &j) + &(&j.transpose() * &g);
            assert!(skew.is_zero());
            assert_eq!(lhs.rows(), 4 * n);
        }
    }

    #[test]
    fn aff_r_shape() {
        let j = symbolic_gcs(1);
        assert_eq!(j[(0, 0)].to_string(), "a11");
        assert_eq!(j[(0, 1)].to_string(), "a12");
        assert!(j[(0, 2)].is_zero());
        assert_eq!(j[(0, 3)].to_string(), "a14");
        assert_eq!(j[(3, 0)].to_string(), "a41");
        assert_eq!(j[(2, 1)].to_string(), "-a41");
        assert_eq!(j[(3, 3)].to_string(), "-a22");
    }

    #[test]
    fn names() {
        assert_eq!(entry_name("a", 1, 12), "a1_12");
        assert_eq!(nijenhuis_name(7, 8, 2), "N78^2");
        assert_eq!(involution_name(2, 2), "Jsq2^2");
    }
}
