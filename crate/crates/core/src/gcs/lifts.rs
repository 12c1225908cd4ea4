use crate::cohomology::is_closed_two_form;
use crate::error::{Error, Result};
use crate::gcs::{involution_residual, nijenhuis, GCSCandidate};
use crate::lie::{unit, LieAlgebra};
use crate::matrix::Matrix;
use crate::scalar::Rational;

/// `J(x, a) = (j x, -j^* a)` for a complex structure `j` on `L`.
pub fn lift_complex(l: &LieAlgebra, j: &Matrix<Rational>) -> Result<GCSCandidate> {
    let m = l.dim();
    if j.rows() != m || j.cols() != m {
        return Err(Error::pre("j must be a square matrix of the algebra's dimension"));
    }
    if !involution_residual(j).is_zero() {
        return Err(Error::pre("j is not almost complex (j^2 != -1)"));
    }
    if !nijenhuis(l, j).is_zero() {
        return Err(Error::pre("j is not integrable on the algebra"));
    }
    let z = Matrix::zeros(m, m);
    Ok(GCSCandidate::from_blocks(j, &z, &z, &-&j.transpose()))
}

/// `w([x,y]) = w(x) o ad(y) - w(y) o ad(x)` on all basis pairs, where
/// `w(x) = W(., x)`.
pub fn cybe_check(l: &LieAlgebra, w: &Matrix<Rational>) -> Result<bool> {
    let m = l.dim();
    if w.rows() != m || !w.is_skew() {
        return Err(Error::pre("w must be skew-symmetric of the algebra's dimension"));
    }
    let form = |x: &[Rational], y: &[Rational]| {
        let wy = w.mul_vec(y);
        x.iter().zip(wy).fold(Rational::from_integer(0.into()), |acc, (a, b)| acc + a * b)
    };
    for x in 0..m {
        for y in 0..m {
            let xy = l.bracket_basis(x, y);
            for z in 0..m {
                let lhs = form(&unit(m, z), &xy);
                let rhs = form(&l.bracket_basis(y, z), &unit(m, x))
                    - form(&l.bracket_basis(x, z), &unit(m, y));
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// `J(x, a) = (-w^{-1} a, w x)`.
pub fn lift_symplectic(l: &LieAlgebra, w: &Matrix<Rational>) -> Result<GCSCandidate> {
    if !cybe_check(l, w)? {
        return Err(Error::pre("w does not satisfy the CYBE condition (not closed)"));
    }
    let inv = w
        .inverse()
        .ok_or_else(|| Error::pre("w is degenerate"))?;
    let m = l.dim();
    let z = Matrix::zeros(m, m);
    Ok(GCSCandidate::from_blocks(&z, &-&inv, w, &z))
}

/// Conjugation by `(x, a) -> (x, a + B x)` for a closed 2-form `B`.
pub fn b_field(j: &GCSCandidate, b: &Matrix<Rational>, l: &LieAlgebra) -> Result<GCSCandidate> {
    let m = l.dim();
    if j.base_dim() != m || b.rows() != m || !b.is_skew() {
        return Err(Error::pre("B must be skew-symmetric of the algebra's dimension"));
    }
    if m >= 2 && !is_closed_two_form(l, b) {
        return Err(Error::pre("B is not closed"));
    }
    let i = Matrix::identity(m);
    let z = Matrix::zeros(m, m);
    let e = Matrix::from_blocks(&i, &z, b, &i);
    let e_inv = Matrix::from_blocks(&i, &z, &-b, &i);
    GCSCandidate::new(&(&e * j.matrix()) * &e_inv)
}
