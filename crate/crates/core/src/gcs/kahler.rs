use serde::Serialize;

use crate::error::{Error, Result};
use crate::gcs::GCSCandidate;
use crate::lie::neutral_gram;
use crate::matrix::Matrix;
use crate::scalar::{is_positive, Rational};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct KahlerReport {
    pub commute: bool,
    pub involution_g: bool,
    pub positive_definite: bool,
}

impl KahlerReport {
    pub fn is_generalized_kahler(&self) -> bool {
        self.commute && self.involution_g && self.positive_definite
    }
}

/// Checks whether `G = -Ja Jb` defines a generalized metric: `Ja`, `Jb`
/// commute, `G^2 = 1`, and `v -> <G v, v>` is positive definite.
pub fn generalized_kahler_check(ja: &GCSCandidate, jb: &GCSCandidate) -> Result<KahlerReport> {
    if ja.base_dim() != jb.base_dim() {
        return Err(Error::pre("structures live on different algebras"));
    }
    let (a, b) = (ja.matrix(), jb.matrix());
    let ab = a * b;
    let commute = ab == b * a;
    let g = -&ab;
    let involution_g = &g * &g == Matrix::identity(g.rows());
    let n = neutral_gram::<Rational>(ja.base_dim());
    let gt_n = &g.transpose() * &n;
    let s = (&gt_n + &gt_n.transpose()).scale(&crate::scalar::frac(1, 2));
    let positive_definite = s.leading_principal_minors().iter().all(is_positive);
    Ok(KahlerReport {
        commute,
        involution_g,
        positive_definite,
    })
}
