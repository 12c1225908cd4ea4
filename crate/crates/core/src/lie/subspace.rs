use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::matrix::Matrix;
use crate::scalar::{Field, Rational, Ring};

/// Linear subspace of `F^n` with its basis kept in reduced row echelon form,
/// so that equal subspaces have equal representations.
#[derive(Debug, Clone, PartialEq)]
pub struct Subspace<F = Rational> {
    ambient: usize,
    basis: Vec<Vec<F>>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self::span(ambient, (0..ambient).map(|i| unit(ambient, i)))
    }

    pub fn span(ambient: usize, vectors: impl IntoIterator<Item = Vec<F>>) -> Self {
        let rows: Vec<Vec<F>> = vectors.into_iter().collect();
        if rows.is_empty() {
            return Self::zero(ambient);
        }
        let red = Matrix::from_rows(rows).expect("vectors of equal length").rref();
        let basis = (0..red.rank).map(|r| red.rref.row(r).to_vec()).collect();
        Subspace {
            ambient,
            basis,
            pivots: red.pivots,
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<F>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates not used as pivots, in increasing order.
    pub fn complement_indices(&self) -> Vec<usize> {
        (0..self.ambient).filter(|c| !self.pivots.contains(c)).collect()
    }

    /// Reduces `v` against the echelon basis; the result is zero iff `v` lies
    /// in the subspace.
    pub fn reduce(&self, v: &[F]) -> Vec<F> {
        let mut w = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if w[p].is_zero() {
                continue;
            }
            let f = w[p].clone();
            for (x, b) in w.iter_mut().zip(row) {
                if !b.is_zero() {
                    *x = x.clone() - f.clone() * b.clone();
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.reduce(v).iter().all(F::is_zero)
    }

    pub fn contains_subspace(&self, o: &Subspace<F>) -> bool {
        o.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, o: &Subspace<F>) -> Subspace<F> {
        Self::span(self.ambient, self.basis.iter().chain(&o.basis).cloned())
    }

    pub fn intersection(&self, o: &Subspace<F>) -> Subspace<F> {
        if self.dim() == 0 || o.dim() == 0 {
            return Self::zero(self.ambient);
        }
        // solve sum a_i u_i = sum b_j w_j
        let k = self.dim() + o.dim();
        let m = Matrix::from_fn(self.ambient, k, |r, c| {
            if c < self.dim() {
                self.basis[c][r].clone()
            } else {
                -o.basis[c - self.dim()][r].clone()
            }
        });
        let vecs = m.kernel().into_iter().map(|coef| {
            let mut v = vec![F::zero(); self.ambient];
            for (a, u) in coef.iter().zip(&self.basis) {
                for (x, y) in v.iter_mut().zip(u) {
                    *x = x.clone() + a.clone() * y.clone();
                }
            }
            v
        });
        Self::span(self.ambient, vecs)
    }
}

pub(crate) fn unit<F: Field>(n: usize, i: usize) -> Vec<F> {
    let mut v = vec![F::zero(); n];
    v[i] = F::one();
    v
}

/// Derived algebra, center, and centralizer of the derived algebra.
#[derive(Debug, Clone, PartialEq)]
pub struct CharacteristicSubspaces<F> {
    pub derived: Subspace<F>,
    pub center: Subspace<F>,
    pub centralizer_of_derived: Subspace<F>,
}

/// Subspace `{x : [x, y] = 0 for all y in ys}`.
fn centralizer<F: Field>(l: &LieAlgebra<F>, ys: &[Vec<F>]) -> Subspace<F> {
    let m = l.dim();
    if ys.is_empty() {
        return Subspace::full(m);
    }
    // rows (y, k), columns a: coefficient of e_k in [e_a, y]
    let cols: Vec<Vec<F>> = (0..m).map(|a| {
        ys.iter().flat_map(|y| l.bracket(&unit(m, a), y)).collect()
    }).collect();
    let mat = Matrix::from_fn(ys.len() * m, m, |r, a| cols[a][r].clone());
    Subspace::span(m, mat.kernel())
}

pub fn characteristic_subspaces<F: Field>(l: &LieAlgebra<F>) -> CharacteristicSubspaces<F> {
    let m = l.dim();
    let derived = Subspace::span(m, l.nonzero_brackets().into_iter().map(|(_, _, v)| v));
    let all: Vec<Vec<F>> = (0..m).map(|i| unit(m, i)).collect();
    let center = centralizer(l, &all);
    let centralizer_of_derived = centralizer(l, derived.basis());
    CharacteristicSubspaces {
        derived,
        center,
        centralizer_of_derived,
    }
}

pub fn is_ideal<F: Field>(l: &LieAlgebra<F>, ideal: &Subspace<F>) -> Result<()> {
    let m = l.dim();
    for a in 0..m {
        for (idx, v) in ideal.basis().iter().enumerate() {
            if !ideal.contains(&l.bracket(&unit(m, a), v)) {
                return Err(Error::NotIdeal { basis: a, vector: idx });
            }
        }
    }
    Ok(())
}

/// Quotient by an ideal, in the basis of unit vectors at the non-pivot
/// coordinates of the ideal's echelon basis.
pub fn quotient<F: Field>(l: &LieAlgebra<F>, ideal: &Subspace<F>) -> Result<LieAlgebra<F>> {
    is_ideal(l, ideal)?;
    let m = l.dim();
    let keep = ideal.complement_indices();
    let n = keep.len();
    let mut q = LieAlgebra::abelian(format!("{}/I", l.name()), n)
        .with_labels(keep.iter().map(|&i| l.labels()[i].clone()).collect());
    for s in 0..n {
        for t in s + 1..n {
            let w = ideal.reduce(&l.bracket(&unit(m, keep[s]), &unit(m, keep[t])));
            let v: Vec<F> = keep.iter().map(|&c| w[c].clone()).collect();
            if v.iter().any(|x| !x.is_zero()) {
                q.set_bracket(s, t, v);
            }
        }
    }
    Ok(q)
}

/// Semidirect product `L x_rho V` with `[x, v] = rho(x) v`.
pub fn semidirect<F: Ring>(
    l: &LieAlgebra<F>,
    rho: &[Matrix<F>],
    module_dim: usize,
) -> Result<LieAlgebra<F>> {
    let m = l.dim();
    if rho.len() != m || rho.iter().any(|r| r.rows() != module_dim || r.cols() != module_dim) {
        return Err(Error::pre("rho must give one module_dim square matrix per basis vector"));
    }
    let rho_of = |v: &[F]| {
        let mut out = Matrix::zeros(module_dim, module_dim);
        for (c, r) in v.iter().zip(rho) {
            if !c.is_zero() {
                out = &out + &r.scale(c);
            }
        }
        out
    };
    for i in 0..m {
        for j in i + 1..m {
            let lhs = rho_of(&l.bracket_basis(i, j));
            let rhs = &(&rho[i] * &rho[j]) - &(&rho[j] * &rho[i]);
            if lhs != rhs {
                return Err(Error::pre(format!(
                    "rho is not a homomorphism on the pair ({i}, {j})"
                )));
            }
        }
    }
    let n = m + module_dim;
    let mut out = LieAlgebra::abelian(l.name().to_string(), n);
    for i in 0..m {
        for j in i + 1..m {
            let mut v = l.bracket_basis(i, j);
            v.resize(n, F::zero());
            out.set_bracket(i, j, v);
        }
        for a in 0..module_dim {
            let mut v = vec![F::zero(); n];
            for b in 0..module_dim {
                v[m + b] = rho[i][(b, a)].clone();
            }
            if v.iter().any(|x| !x.is_zero()) {
                out.set_bracket(i, m + a, v);
            }
        }
    }
    let mut labels = l.labels().to_vec();
    labels.extend((0..module_dim).map(|a| format!("v{a}")));
    Ok(out.with_labels(labels))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn q(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn subspace_membership_and_intersection() {
        let a = Subspace::span(3, [q(&[1, 1, 0]), q(&[0, 1, 1])]);
        let b = Subspace::span(3, [q(&[1, 0, 0]), q(&[0, 0, 1])]);
        assert!(a.contains(&q(&[1, 2, 1])));
        assert!(!a.contains(&q(&[1, 0, 0])));
        let i = a.intersection(&b);
        assert_eq!(i, Subspace::span(3, [q(&[1, 0, -1])]));
        assert_eq!(a.sum(&b).dim(), 3);
    }

    #[test]
    fn quotient_by_zero_is_a_copy() {
        let l = LieAlgebra::from_brackets("aff(R)", 2, [(0, 1, q(&[0, 1]))]).unwrap();
        let qt = quotient(&l, &Subspace::zero(2)).unwrap();
        assert_eq!(qt.nonzero_brackets(), l.nonzero_brackets());
    }

    #[test]
    fn non_ideal_is_rejected() {
        let l = LieAlgebra::from_brackets("aff(R)", 2, [(0, 1, q(&[0, 1]))]).unwrap();
        let err = quotient(&l, &Subspace::span(2, [q(&[1, 0])])).unwrap_err();
        assert!(matches!(err, Error::NotIdeal { basis: 1, vector: 0 }));
    }

    #[test]
    fn zero_representation_gives_direct_sum() {
        let l = LieAlgebra::from_brackets("aff(R)", 2, [(0, 1, q(&[0, 1]))]).unwrap();
        let s = semidirect(&l, &[Matrix::zeros(1, 1), Matrix::zeros(1, 1)], 1).unwrap();
        assert_eq!(s.dim(), 3);
        assert_eq!(s.nonzero_brackets(), vec![(0, 1, q(&[0, 1, 0]))]);
        let a = LieAlgebra::<Rational>::abelian("a2", 2);
        let s = semidirect(&a, &[Matrix::zeros(1, 1), Matrix::zeros(1, 1)], 1).unwrap();
        assert!(s.is_abelian() && s.dim() == 3);
    }

    #[test]
    fn non_homomorphism_is_rejected() {
        let l = LieAlgebra::from_brackets("aff(R)", 2, [(0, 1, q(&[0, 1]))]).unwrap();
        let rho = [Matrix::identity(1), Matrix::zeros(1, 1)];
        // rho([e0,e1]) = rho(e1) = 0 = [rho0, rho1]; fine. Break it:
        assert!(semidirect(&l, &rho, 1).is_ok());
        let rho = [Matrix::zeros(1, 1), Matrix::identity(1)];
        assert!(semidirect(&l, &rho, 1).is_err());
    }
}
