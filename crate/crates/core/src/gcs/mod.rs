//! Generalized complex structures on a Lie algebra `g`, realized as
//! endomorphisms of the cotangent algebra `T*g`.
//!
//! Matrices act on column vectors in the basis
//! `X_i = (e_{i-1}, 0)`, `X_{i+m} = (0, alpha^{i-1})`: column `j` holds the
//! coordinates of `J(X_{j+1})`.

mod eigenspace;
mod kahler;
mod lifts;

pub use eigenspace::{gcs_from_subalgebra, i_eigenspace, IsotropicSubalgebra};
pub use kahler::{generalized_kahler_check, KahlerReport};
pub use lifts::{b_field, cybe_check, lift_complex, lift_symplectic};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lie::{cotangent, neutral_gram, LieAlgebra};
use crate::matrix::Matrix;
use crate::scalar::{format_rational, Rational, Ring};

#[derive(Debug, Clone, PartialEq)]
pub struct GCSCandidate<R = Rational> {
    base_dim: usize,
    matrix: Matrix<R>,
}

impl<R: Ring> GCSCandidate<R> {
    pub fn new(matrix: Matrix<R>) -> Result<Self> {
        if !matrix.is_square() || matrix.rows() % 2 == 1 {
            return Err(Error::Input(format!(
                "a candidate needs an even-order square matrix, got {}x{}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        Ok(GCSCandidate {
            base_dim: matrix.rows() / 2,
            matrix,
        })
    }

    pub fn from_blocks(j1: &Matrix<R>, j2: &Matrix<R>, j3: &Matrix<R>, j4: &Matrix<R>) -> Self {
        GCSCandidate {
            base_dim: j1.rows(),
            matrix: Matrix::from_blocks(j1, j2, j3, j4),
        }
    }

    pub fn base_dim(&self) -> usize {
        self.base_dim
    }

    pub fn matrix(&self) -> &Matrix<R> {
        &self.matrix
    }

    pub fn into_matrix(self) -> Matrix<R> {
        self.matrix
    }

    pub fn j1(&self) -> Matrix<R> {
        let m = self.base_dim;
        self.matrix.block(0, 0, m, m)
    }

    pub fn j2(&self) -> Matrix<R> {
        let m = self.base_dim;
        self.matrix.block(0, m, m, m)
    }

    pub fn j3(&self) -> Matrix<R> {
        let m = self.base_dim;
        self.matrix.block(m, 0, m, m)
    }

    pub fn j4(&self) -> Matrix<R> {
        let m = self.base_dim;
        self.matrix.block(m, m, m, m)
    }

    /// Image of the basis vector `X_{j+1}`.
    pub fn image(&self, j: usize) -> Vec<R> {
        self.matrix.column(j)
    }
}

/// A located failure of one of the defining conditions.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Violation {
    pub condition: String,
    pub i: usize,
    pub j: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    pub residual: String,
}

fn entry_violations(condition: &str, m: &Matrix<Rational>) -> Vec<Violation> {
    m.entries()
        .filter(|(_, _, x)| !num_traits::Zero::is_zero(*x))
        .map(|(i, j, x)| Violation {
            condition: condition.to_string(),
            i,
            j,
            k: None,
            residual: format_rational(x),
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OrthogonalityReport {
    /// `J^T G J = G` for the neutral Gram matrix `G`.
    pub orthogonal: bool,
    pub j4_is_minus_j1_dual: bool,
    pub j2_skew: bool,
    pub j3_skew: bool,
    pub violations: Vec<Violation>,
}

pub fn check_orthogonal(j: &GCSCandidate) -> OrthogonalityReport {
    let m = j.base_dim();
    let g = neutral_gram::<Rational>(m);
    let jm = j.matrix();
    let gram = &(&(&jm.transpose() * &g) * jm) - &g;
    let b4 = &j.j4() + &j.j1().transpose();
    let b2 = &j.j2() + &j.j2().transpose();
    let b3 = &j.j3() + &j.j3().transpose();
    let mut violations = entry_violations("gram", &gram);
    violations.extend(entry_violations("J4 = -J1*", &b4));
    violations.extend(entry_violations("J2 = -J2*", &b2));
    violations.extend(entry_violations("J3 = -J3*", &b3));
    OrthogonalityReport {
        orthogonal: gram.is_zero(),
        j4_is_minus_j1_dual: b4.is_zero(),
        j2_skew: b2.is_zero(),
        j3_skew: b3.is_zero(),
        violations,
    }
}

/// `J^2 + I`, zero exactly for almost complex `J`.
pub fn involution_residual<R: Ring>(j: &Matrix<R>) -> Matrix<R> {
    &(j * j) + &Matrix::identity(j.rows())
}

pub fn check_involution(j: &GCSCandidate) -> (bool, Matrix<Rational>) {
    let r = involution_residual(j.matrix());
    (r.is_zero(), r)
}

/// Coefficients `N_ij^k` of the Nijenhuis tensor of `J` on `L`, for `i < j`.
#[derive(Debug, Clone, PartialEq)]
pub struct NijenhuisTensor<R> {
    dim: usize,
    coeffs: Vec<R>,
}

impl<R: Ring> NijenhuisTensor<R> {
    fn slot(&self, i: usize, j: usize) -> usize {
        // position of (i, j), i < j, in row-major upper-triangle order
        i * (2 * self.dim - i - 1) / 2 + (j - i - 1)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Coefficient of `X_{k+1}` in `N(X_{i+1}, X_{j+1})` (0-based indices,
    /// any order).
    pub fn get(&self, i: usize, j: usize, k: usize) -> R {
        match i.cmp(&j) {
            std::cmp::Ordering::Equal => R::zero(),
            std::cmp::Ordering::Less => self.coeffs[self.slot(i, j) * self.dim + k].clone(),
            std::cmp::Ordering::Greater => -self.coeffs[self.slot(j, i) * self.dim + k].clone(),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, usize, &R)> {
        let n = self.dim;
        (0..n)
            .flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
            .enumerate()
            .flat_map(move |(s, (i, j))| (0..n).map(move |k| (i, j, k, &self.coeffs[s * n + k])))
    }

    pub fn nonzero(&self) -> impl Iterator<Item = (usize, usize, usize, &R)> {
        self.iter().filter(|t| !t.3.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(R::is_zero)
    }
}

/// `N(x,y) = [x,y] + J[Jx,y] + J[x,Jy] - [Jx,Jy]` on basis pairs, over any
/// commutative ring.
pub fn nijenhuis<R: Ring>(l: &LieAlgebra<R>, j: &Matrix<R>) -> NijenhuisTensor<R> {
    let n = l.dim();
    assert_eq!(j.rows(), n, "J must act on the algebra");
    let cols: Vec<Vec<R>> = (0..n).map(|c| j.column(c)).collect();
    let e = |i: usize| {
        let mut v = vec![R::zero(); n];
        v[i] = R::one();
        v
    };
    let mut coeffs = Vec::with_capacity(n * (n - 1) / 2 * n);
    for a in 0..n {
        for b in a + 1..n {
            let xy = l.bracket_basis(a, b);
            let jx_y = l.bracket(&cols[a], &e(b));
            let x_jy = l.bracket(&e(a), &cols[b]);
            let inner: Vec<R> = jx_y.into_iter().zip(x_jy).map(|(p, q)| p + q).collect();
            let j_inner = j.mul_vec(&inner);
            let jx_jy = l.bracket(&cols[a], &cols[b]);
            for k in 0..n {
                coeffs.push(xy[k].clone() + j_inner[k].clone() - jx_jy[k].clone());
            }
        }
    }
    NijenhuisTensor { dim: n, coeffs }
}

/// Type `k = n - rank(J_2)/2` where `dim g = 2n`.
pub fn gcs_type(j: &GCSCandidate) -> Result<usize> {
    let m = j.base_dim();
    if m % 2 == 1 {
        return Err(Error::Unsupported(format!(
            "type is only defined for even-dimensional algebras, got dim {m}"
        )));
    }
    if !check_orthogonal(j).orthogonal || !check_involution(j).0 {
        return Err(Error::pre("type needs an orthogonal J with J^2 = -1"));
    }
    let r = j.j2().rank();
    Ok(m / 2 - r / 2)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub orthogonal: bool,
    pub involutive: bool,
    pub integrable: bool,
    pub type_k: Option<usize>,
    pub failures: Vec<Violation>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.orthogonal && self.involutive && self.integrable
    }
}

/// Orthogonality, `J^2 = -1` and integrability on `T*L`.
pub fn verify(l: &LieAlgebra, j: &GCSCandidate) -> Result<VerificationReport> {
    let m = l.dim();
    if j.base_dim() != m {
        return Err(Error::pre(format!(
            "structure has order {} but the algebra has dimension {m}",
            2 * j.base_dim()
        )));
    }
    let mut failures = Vec::new();
    let orth = check_orthogonal(j);
    if !orth.orthogonal {
        failures.extend(orth.violations.into_iter().filter(|v| v.condition == "gram"));
    }
    let (involutive, res) = check_involution(j);
    failures.extend(entry_violations("J^2 = -1", &res));
    let t = cotangent(l).total;
    let n = nijenhuis(&t, j.matrix());
    let integrable = n.is_zero();
    failures.extend(n.nonzero().map(|(i, jj, k, x)| Violation {
        condition: "nijenhuis".into(),
        i,
        j: jj,
        k: Some(k),
        residual: format_rational(x),
    }));
    let type_k = if orth.orthogonal && involutive && integrable && m % 2 == 0 {
        Some(gcs_type(j)?)
    } else {
        None
    };
    Ok(VerificationReport {
        orthogonal: orth.orthogonal,
        involutive,
        integrable,
        type_k,
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    pub(crate) fn rmat(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()).unwrap()
    }

    fn aff_r() -> LieAlgebra {
        LieAlgebra::from_brackets("aff(R)", 2, [(0, 1, vec![int(0), int(1)])]).unwrap()
    }

    #[test]
    fn identity_is_orthogonal_but_not_almost_complex() {
        let j = GCSCandidate::new(Matrix::<Rational>::identity(4)).unwrap();
        let o = check_orthogonal(&j);
        assert!(o.orthogonal);
        assert!(!o.j4_is_minus_j1_dual);
        assert!(!check_involution(&j).0);
    }

    #[test]
    fn aff_r_symplectic_family_point() {
        // a11 = 0, a14 = 1, a41 = -1
        let j = GCSCandidate::new(rmat(&[&[0, 0, 0, 1], &[0, 0, -1, 0], &[0, 1, 0, 0], &[-1, 0, 0, 0]])).unwrap();
        assert!(check_orthogonal(&j).orthogonal);
        let rep = verify(&aff_r(), &j).unwrap();
        assert!(rep.passed(), "{rep:?}");
        assert_eq!(rep.type_k, Some(0));
    }

    #[test]
    fn aff_r_complex_family_point() {
        // a11 = 0, a12 = -1, a21 = 1
        let j = GCSCandidate::new(rmat(&[&[0, -1, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, -1], &[0, 0, 1, 0]])).unwrap();
        assert!(check_involution(&j).0);
        let rep = verify(&aff_r(), &j).unwrap();
        assert!(rep.passed());
        assert_eq!(rep.type_k, Some(1));
    }

    #[test]
    fn injected_skew_violation_is_located() {
        let mut m = rmat(&[&[0, 0, 0, 1], &[0, 0, -1, 0], &[0, 1, 0, 0], &[-1, 0, 0, 0]]);
        m[(0, 3)] = int(2);
        let o = check_orthogonal(&GCSCandidate::new(m).unwrap());
        assert!(!o.orthogonal && !o.j2_skew);
        assert!(o.violations.iter().any(|v| v.condition == "J2 = -J2*" && v.i == 0 && v.j == 1));
    }

    #[test]
    fn abelian_nijenhuis_vanishes() {
        let l = LieAlgebra::<Rational>::abelian("a4", 4);
        let j = Matrix::from_fn(4, 4, |r, c| int((r * 3 + c) as i64));
        assert!(nijenhuis(&l, &j).is_zero());
    }

    #[test]
    fn odd_dimension_type_is_unsupported() {
        let j = GCSCandidate::new(Matrix::<Rational>::identity(6)).unwrap();
        assert!(matches!(gcs_type(&j), Err(Error::Unsupported(_))));
    }

    #[test]
    fn nijenhuis_indexing() {
        let l = aff_r();
        let t = cotangent(&l).total;
        let j = Matrix::from_fn(4, 4, |r, c| int((r + 2 * c) as i64 % 3 - 1));
        let n = nijenhuis(&t, &j);
        for (i, jj, k, x) in n.iter() {
            assert_eq!(&n.get(jj, i, k), &-x.clone());
        }
        assert_eq!(n.iter().count(), 6 * 4);
    }
}
