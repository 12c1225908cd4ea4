use num_traits::Zero;

use crate::error::{Error, Result};
use crate::gcs::GCSCandidate;
use crate::lie::{cotangent, neutral_gram, LieAlgebra, Subspace};
use crate::matrix::Matrix;
use crate::scalar::{imag_unit, Gaussian, Rational};

/// A complex subspace `q` of `(T*g)^C` meant to be the `+i` eigenspace of a
/// generalized complex structure.
#[derive(Debug, Clone, PartialEq)]
pub struct IsotropicSubalgebra {
    pub base_dim: usize,
    pub space: Subspace<Gaussian>,
}

fn conj(v: &[Gaussian]) -> Vec<Gaussian> {
    v.iter().map(|z| z.conj()).collect()
}

impl IsotropicSubalgebra {
    pub fn is_subalgebra(&self, l: &LieAlgebra) -> bool {
        let t = cotangent(&l.lift::<Gaussian>()).total;
        let b = self.space.basis();
        (0..b.len()).all(|i| (i + 1..b.len()).all(|j| self.space.contains(&t.bracket(&b[i], &b[j]))))
    }

    /// The complex-bilinear extension of the neutral pairing vanishes on `q`.
    pub fn is_isotropic(&self) -> bool {
        let g = neutral_gram::<Rational>(self.base_dim).lift::<Gaussian>();
        let b = self.space.basis();
        b.iter().all(|u| {
            b.iter().all(|v| {
                let gv = g.mul_vec(v);
                u.iter().zip(gv).fold(Gaussian::zero(), |acc, (x, y)| acc + x.clone() * y).is_zero()
            })
        })
    }

    pub fn meets_conjugate_trivially(&self) -> bool {
        let conj_space = Subspace::span(
            self.space.ambient(),
            self.space.basis().iter().map(|v| conj(v)),
        );
        self.space.intersection(&conj_space).dim() == 0
    }

    /// Returns the name of the first failed invariant.
    pub fn check(&self, l: &LieAlgebra) -> Result<()> {
        let m = self.base_dim;
        if l.dim() != m || self.space.ambient() != 2 * m {
            return Err(Error::pre("subspace does not live in the cotangent algebra"));
        }
        if self.space.dim() != m {
            return Err(Error::pre(format!(
                "wrong dimension: complex dimension {} instead of {m}",
                self.space.dim()
            )));
        }
        if !self.is_subalgebra(l) {
            return Err(Error::pre("not a subalgebra"));
        }
        if !self.is_isotropic() {
            return Err(Error::pre("not isotropic"));
        }
        if !self.meets_conjugate_trivially() {
            return Err(Error::pre("q meets its conjugate"));
        }
        Ok(())
    }
}

/// `q = ker(J - i)` over the Gaussian rationals.
pub fn i_eigenspace(l: &LieAlgebra, j: &GCSCandidate) -> Result<IsotropicSubalgebra> {
    let m = l.dim();
    if j.base_dim() != m {
        return Err(Error::pre("structure order does not match the algebra"));
    }
    let jc = j.matrix().lift::<Gaussian>();
    let shifted = &jc - &Matrix::identity(2 * m).scale(&imag_unit());
    Ok(IsotropicSubalgebra {
        base_dim: m,
        space: Subspace::span(2 * m, shifted.kernel()),
    })
}

/// The real structure with `J z = i z` on `q` and `J w = -i w` on its conjugate.
pub fn gcs_from_subalgebra(l: &LieAlgebra, q: &IsotropicSubalgebra) -> Result<GCSCandidate> {
    q.check(l)?;
    let n = 2 * q.base_dim;
    let basis = q.space.basis();
    let cols: Vec<Vec<Gaussian>> = basis.iter().cloned().chain(basis.iter().map(|v| conj(v))).collect();
    let p = Matrix::from_fn(n, n, |r, c| cols[c][r].clone());
    let i = imag_unit();
    let d = Matrix::from_fn(n, n, |r, c| match (r == c, r < n / 2) {
        (false, _) => Gaussian::zero(),
        (true, true) => i.clone(),
        (true, false) => -i.clone(),
    });
    let p_inv = p.inverse().ok_or_else(|| Error::pre("q meets its conjugate"))?;
    let jc = &(&p * &d) * &p_inv;
    if jc.entries().any(|(_, _, z)| !z.im.is_zero()) {
        return Err(Error::pre("eigen-decomposition does not give a real matrix"));
    }
    GCSCandidate::new(jc.map(|z| z.re.clone()))
}
