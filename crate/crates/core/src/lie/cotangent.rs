use crate::lie::subspace::semidirect;
use crate::lie::LieAlgebra;
use crate::matrix::Matrix;
use crate::scalar::{frac, Ring, FromRational, Rational};

/// `T*g = g x g*` with the coadjoint action, in the basis
/// `X_i = (e_{i-1}, 0)`, `X_{i+m} = (0, alpha^{i-1})`.
#[derive(Debug, Clone, PartialEq)]
pub struct CotangentAlgebra<F: Ring = Rational> {
    pub base: LieAlgebra<F>,
    pub total: LieAlgebra<F>,
}

impl<F: Ring> CotangentAlgebra<F> {
    pub fn m(&self) -> usize {
        self.base.dim()
    }
}

/// Coadjoint matrices `ad*(e_i) = -ad(e_i)^T`.
pub fn coadjoint<F: Ring>(l: &LieAlgebra<F>) -> Vec<Matrix<F>> {
    (0..l.dim()).map(|i| -&l.ad(i).transpose()).collect()
}

pub fn cotangent<F: Ring>(l: &LieAlgebra<F>) -> CotangentAlgebra<F> {
    let m = l.dim();
    let total = semidirect(l, &coadjoint(l), m)
        .expect("the coadjoint action of a Lie algebra is a representation")
        .with_name(format!("T*({})", l.name()))
        .with_labels((1..=2 * m).map(|i| format!("X{i}")).collect());
    CotangentAlgebra {
        base: l.clone(),
        total,
    }
}

/// Gram matrix of `<(x,a),(y,b)> = (a(y) + b(x)) / 2`.
pub fn neutral_gram<F: FromRational>(m: usize) -> Matrix<F> {
    let half = F::from_rational(&frac(1, 2));
    Matrix::from_fn(2 * m, 2 * m, |r, c| {
        if r + m == c || c + m == r {
            half.clone()
        } else {
            F::zero()
        }
    })
}
