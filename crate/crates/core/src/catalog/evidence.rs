//! Evidence for complete solvability: every sampled `ad(x)` has a
//! real-rooted characteristic polynomial, decided exactly with Sturm
//! sequences on the square-free parts.

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::lie::LieAlgebra;
use crate::matrix::Matrix;
use crate::scalar::{format_rational, int, Rational};

/// Univariate polynomial, coefficients from degree 0 upwards, no trailing
/// zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly(pub Vec<Rational>);

impl UniPoly {
    pub fn new(mut c: Vec<Rational>) -> Self {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        UniPoly(c)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; the zero polynomial has degree 0 here.
    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn lead(&self) -> Rational {
        self.0.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn derivative(&self) -> Self {
        UniPoly::new(
            self.0.iter().enumerate().skip(1).map(|(i, c)| c * int(i as i64)).collect(),
        )
    }

    fn monic(&self) -> Self {
        let l = self.lead();
        UniPoly(self.0.iter().map(|c| c / &l).collect())
    }

    /// Quotient and remainder.
    pub fn div_rem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let mut r = self.0.clone();
        let dd = d.degree();
        if r.len() < d.0.len() {
            return (UniPoly(Vec::new()), self.clone());
        }
        let mut q = vec![Rational::zero(); r.len() - dd];
        let l = d.lead();
        for k in (0..q.len()).rev() {
            let c = &r[k + dd] / &l;
            if !c.is_zero() {
                for (i, x) in d.0.iter().enumerate() {
                    r[k + i] = &r[k + i] - &c * x;
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        (UniPoly::new(q), UniPoly::new(r))
    }

    pub fn gcd(&self, o: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }

    fn sign_at_infinity(&self, negative: bool) -> i32 {
        let l = self.lead();
        let mut s = if l.is_positive() { 1 } else if l.is_negative() { -1 } else { 0 };
        if negative && self.degree() % 2 == 1 {
            s = -s;
        }
        s
    }
}

impl std::fmt::Display for UniPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut p = crate::poly::Polynomial::zero();
        let t = crate::poly::Polynomial::var("t");
        for (i, c) in self.0.iter().enumerate() {
            p = p + t.pow(i as u32).scale(c);
        }
        write!(f, "{p}")
    }
}

/// `det(t I - A)` by the Faddeev-LeVerrier recursion.
pub fn characteristic_polynomial(a: &Matrix<Rational>) -> UniPoly {
    let n = a.rows();
    let mut c = vec![Rational::zero(); n + 1];
    c[n] = Rational::one();
    let mut mk: Matrix<Rational> = Matrix::zeros(n, n);
    for k in 1..=n {
        mk = &(a * &mk) + &Matrix::identity(n).scale(&c[n + 1 - k]);
        c[n - k] = -(a * &mk).trace() / int(k as i64);
    }
    UniPoly::new(c)
}

fn sub(a: &UniPoly, b: &UniPoly) -> UniPoly {
    let len = a.0.len().max(b.0.len());
    let at = |p: &UniPoly, i: usize| p.0.get(i).cloned().unwrap_or_else(Rational::zero);
    UniPoly::new((0..len).map(|i| at(a, i) - at(b, i)).collect())
}

/// Yun's square-free decomposition: `p = lc * prod f_i^i`, monic `f_i`.
pub fn square_free_factors(p: &UniPoly) -> Vec<(UniPoly, usize)> {
    let mut out = Vec::new();
    if p.degree() == 0 {
        return out;
    }
    let dp = p.derivative();
    let a0 = p.gcd(&dp);
    let mut b = p.div_rem(&a0).0;
    let c = dp.div_rem(&a0).0;
    let mut d = sub(&c, &b.derivative());
    let mut i = 1;
    while b.degree() > 0 {
        let a = b.gcd(&d);
        if a.degree() > 0 {
            out.push((a.clone(), i));
        }
        b = b.div_rem(&a).0;
        let c = d.div_rem(&a).0;
        d = sub(&c, &b.derivative());
        i += 1;
    }
    out
}

/// Number of distinct real roots, by Sturm's theorem.
pub fn real_root_count(p: &UniPoly) -> usize {
    if p.degree() == 0 {
        return 0;
    }
    let mut seq = vec![p.clone(), p.derivative()];
    loop {
        let k = seq.len();
        let r = seq[k - 2].div_rem(&seq[k - 1]).1;
        if r.is_zero() {
            break;
        }
        seq.push(UniPoly(r.0.iter().map(|x| -x.clone()).collect()));
    }
    let changes = |neg: bool| {
        let signs: Vec<i32> = seq.iter().map(|q| q.sign_at_infinity(neg)).filter(|&s| s != 0).collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    };
    changes(true) - changes(false)
}

#[derive(Debug, Clone, Serialize)]
pub struct EvidenceSample {
    pub x: Vec<String>,
    pub characteristic_polynomial: String,
    /// Real roots counted with multiplicity.
    pub real_roots: usize,
    pub degree: usize,
    pub all_real: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct EvidenceReport {
    pub algebra: String,
    pub samples: Vec<EvidenceSample>,
    pub all_real: bool,
}

/// Checks `ad(e_i)` for every basis vector and 20 seeded random integer
/// combinations.
pub fn completely_solvable_evidence(l: &LieAlgebra) -> EvidenceReport {
    let m = l.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0f_ad);
    let mut xs: Vec<Vec<Rational>> = (0..m)
        .map(|i| (0..m).map(|j| if i == j { int(1) } else { int(0) }).collect())
        .collect();
    for _ in 0..20 {
        xs.push((0..m).map(|_| int(rng.gen_range(-5..=5))).collect());
    }
    let samples: Vec<EvidenceSample> = xs
        .into_iter()
        .map(|x| {
            let cp = characteristic_polynomial(&l.ad_vec(&x));
            let real_roots = square_free_factors(&cp)
                .iter()
                .map(|(f, mult)| real_root_count(f) * mult)
                .sum();
            EvidenceSample {
                x: x.iter().map(format_rational).collect(),
                characteristic_polynomial: cp.to_string(),
                real_roots,
                degree: cp.degree(),
                all_real: real_roots == cp.degree(),
            }
        })
        .collect();
    EvidenceReport {
        algebra: l.name().to_string(),
        all_real: samples.iter().all(|s| s.all_real),
        samples,
    }
}
