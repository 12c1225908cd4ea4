//! Maurer-Cartan (structure equation) form of a Lie algebra.
//!
//! With the convention `d alpha(x, y) = -alpha([x, y])`, the coefficient of
//! `alpha^i ^ alpha^j` (`i < j`) in `d alpha^k` is `-c(i, j, k)`.

use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::scalar::Ring;

#[derive(Debug, Clone, PartialEq)]
pub struct StructureEquations<R> {
    pub dim: usize,
    /// `mc[k]` lists `(i, j, c)` with `i < j`, meaning `d alpha^k += c alpha^i ^ alpha^j`.
    pub mc: Vec<Vec<(usize, usize, R)>>,
}

impl<R: Ring> StructureEquations<R> {
    pub fn new(dim: usize) -> Self {
        StructureEquations {
            dim,
            mc: vec![Vec::new(); dim],
        }
    }

    /// Adds `c alpha^i ^ alpha^j` to `d alpha^k`; `i > j` is normalized by
    /// antisymmetry.
    pub fn push(&mut self, k: usize, i: usize, j: usize, c: R) -> Result<()> {
        if i == j || i >= self.dim || j >= self.dim || k >= self.dim {
            return Err(Error::Input(format!("bad structure-equation term d a^{k} : a^{i}^a^{j}")));
        }
        let (i, j, c) = if i < j { (i, j, c) } else { (j, i, -c) };
        if let Some(t) = self.mc[k].iter_mut().find(|t| t.0 == i && t.1 == j) {
            t.2 = t.2.clone() + c;
        } else {
            self.mc[k].push((i, j, c));
        }
        self.mc[k].retain(|t| !t.2.is_zero());
        Ok(())
    }

    pub fn to_algebra(&self, name: &str) -> Result<LieAlgebra<R>> {
        let m = self.dim;
        let mut l = LieAlgebra::abelian(name, m);
        let mut table = vec![vec![R::zero(); m]; m * m];
        for (k, terms) in self.mc.iter().enumerate() {
            for (i, j, c) in terms {
                if *i >= *j || *j >= m {
                    return Err(Error::Input(format!("structure-equation index ({i},{j}) invalid")));
                }
                let v = &mut table[i * m + j][k];
                *v = v.clone() - c.clone();
            }
        }
        for i in 0..m {
            for j in i + 1..m {
                let v = std::mem::take(&mut table[i * m + j]);
                if v.iter().any(|x| !x.is_zero()) {
                    l.set_bracket(i, j, v);
                }
            }
        }
        Ok(l)
    }

    pub fn from_algebra(l: &LieAlgebra<R>) -> Self {
        let m = l.dim();
        let mut s = StructureEquations::new(m);
        for (i, j, v) in l.nonzero_brackets() {
            for (k, c) in v.into_iter().enumerate() {
                if !c.is_zero() {
                    s.mc[k].push((i, j, -c));
                }
            }
        }
        s.normalize();
        s
    }

    /// Sorts each `d alpha^k` by `(i, j)` so equality is representation equality.
    pub fn normalize(&mut self) {
        for terms in &mut self.mc {
            terms.sort_by_key(|t| (t.0, t.1));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, Rational};
    use proptest::prelude::*;

    #[test]
    fn abelian_equations_give_zero_brackets() {
        let s = StructureEquations::<Rational>::new(3);
        assert!(s.to_algebra("a3").unwrap().is_abelian());
    }

    #[test]
    fn sign_convention_on_a_single_term() {
        // d a^2 = a^0 ^ a^1  <=>  [e0, e1] = -e2
        let mut s = StructureEquations::new(3);
        s.push(2, 0, 1, int(1)).unwrap();
        let l = s.to_algebra("h").unwrap();
        assert_eq!(l.bracket_basis(0, 1), vec![int(0), int(0), int(-1)]);
    }

    proptest! {
        #[test]
        fn round_trip(dim in 1usize..5, raw in proptest::collection::vec((0usize..4, 0usize..4, 0usize..4, -3i64..4), 0..8)) {
            let mut s = StructureEquations::new(dim);
            for (k, i, j, c) in raw {
                if k < dim && i < dim && j < dim && i != j {
                    s.push(k, i, j, int(c)).unwrap();
                }
            }
            s.normalize();
            let back = StructureEquations::from_algebra(&s.to_algebra("x").unwrap());
            prop_assert_eq!(back, s);
        }
    }
}
