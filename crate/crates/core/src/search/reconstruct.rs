//! From a float point to an exact structure: continued-fraction rounding,
//! and coordinate-by-coordinate snapping when the nearby solutions are
//! not rational.

use num_bigint::BigInt;
use num_traits::Zero;

use super::optimize::polish;
use super::system::System;
use crate::gcs::{verify, GCSCandidate};
use crate::lie::LieAlgebra;
use crate::scalar::Rational;

pub const MAX_DENOMINATOR: u64 = 10_000;

/// Below this the snapped point counts as an exact zero of the system.
const SNAP_TOLERANCE: f64 = 1e-18;
/// Denominators tried when snapping a single coordinate.
const SNAP_DENOMINATOR: u64 = 12;
const SNAP_ATTEMPTS: usize = 8;
/// A coordinate this close to a rational of bounded denominator is taken
/// to be forced onto it.
const FORCED_TOLERANCE: f64 = 1e-10;

/// Continued-fraction convergents of `x` with denominator at most
/// `max_den`, as `(denominator, value)`.
pub fn convergents(x: f64, max_den: u64) -> Vec<(u64, Rational)> {
    let mut out = Vec::new();
    if !x.is_finite() || x.abs() > 1e12 {
        return out;
    }
    let (mut h0, mut h1) = (0i128, 1i128);
    let (mut k0, mut k1) = (1i128, 0i128);
    let mut y = x;
    for _ in 0..64 {
        let a = y.floor();
        let ai = a as i128;
        let h2 = ai * h1 + h0;
        let k2 = ai * k1 + k0;
        if k2 > max_den as i128 {
            break;
        }
        out.push((k2 as u64, Rational::new(BigInt::from(h2), BigInt::from(k2))));
        (h0, h1, k0, k1) = (h1, h2, k1, k2);
        let frac = y - a;
        if frac.abs() < 1e-12 {
            break;
        }
        y = 1.0 / frac;
    }
    out
}

/// Best continued-fraction approximation with denominator at most `max_den`.
pub fn approximate(x: f64, max_den: u64) -> Rational {
    convergents(x, max_den).pop().map(|(_, q)| q).unwrap_or_else(Rational::zero)
}

pub(crate) struct Exact {
    pub candidate: GCSCandidate,
    pub type_k: usize,
}

fn exact_check(sys: &System, l: &LieAlgebra, q: &[Rational], type_k: Option<usize>) -> Option<Exact> {
    let candidate = GCSCandidate::new(sys.layout.matrix(q)).ok()?;
    let rep = verify(l, &candidate).ok()?;
    if !rep.passed() {
        return None;
    }
    let t = rep.type_k?;
    if type_k.is_some_and(|k| k != t) {
        return None;
    }
    Some(Exact { candidate, type_k: t })
}

fn to_f64(q: &[Rational]) -> Vec<f64> {
    q.iter().map(crate::scalar::to_f64).collect()
}

/// Rounds every coordinate with a common denominator bound, for the bounds
/// `1, 2, ..., MAX_DENOMINATOR` in turn; bounds that give the same vector
/// as a smaller one are skipped.
pub(crate) fn round(sys: &System, l: &LieAlgebra, x: &[f64], type_k: Option<usize>) -> Option<Exact> {
    let conv: Vec<Vec<(u64, Rational)>> = x.iter().map(|&v| convergents(v, MAX_DENOMINATOR)).collect();
    if conv.iter().any(Vec::is_empty) {
        return None;
    }
    let mut bounds: Vec<u64> = conv.iter().flatten().map(|(d, _)| *d).collect();
    bounds.sort_unstable();
    bounds.dedup();
    for d in bounds {
        let q: Vec<Rational> = conv
            .iter()
            .map(|c| c.iter().take_while(|(k, _)| *k <= d).last().map(|(_, q)| q.clone()).unwrap_or_else(Rational::zero))
            .collect();
        if sys.value(&to_f64(&q)) > 1e-12 {
            continue;
        }
        if let Some(e) = exact_check(sys, l, &q, type_k) {
            return Some(e);
        }
    }
    None
}

/// Fixes one coordinate at a time to a nearby rational,
/// re-solving the others, until everything is rational.
pub(crate) fn snap(sys: &System, l: &LieAlgebra, x: &[f64], bound: f64, type_k: Option<usize>) -> Option<Exact> {
    let mut x = x.to_vec();
    let mut fixed: Vec<Option<Rational>> = vec![None; x.len()];
    while fixed.iter().any(Option::is_none) {
        let open: Vec<usize> = (0..x.len()).filter(|&v| fixed[v].is_none()).collect();
        let candidates = |den: u64| {
            let mut c: Vec<(f64, usize, Rational)> = open
                .iter()
                .map(|&v| {
                    let q = approximate(x[v], den);
                    ((x[v] - crate::scalar::to_f64(&q)).abs(), v, q)
                })
                .collect();
            c.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
            c
        };
        // Coordinates the other choices already force onto a rational come
        // first, then zeros (sparse points are more often rational), then
        // the small-denominator guesses.
        let mut order: Vec<(f64, usize, Rational)> =
            candidates(MAX_DENOMINATOR).into_iter().filter(|c| c.0 < FORCED_TOLERANCE).collect();
        let mut zeros: Vec<(f64, usize, Rational)> = open.iter().map(|&v| (x[v].abs(), v, Rational::zero())).collect();
        zeros.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
        order.extend(zeros.into_iter().take(SNAP_ATTEMPTS));
        order.extend(candidates(SNAP_DENOMINATOR).into_iter().take(SNAP_ATTEMPTS));
        let mut done = false;
        for (_, v, q) in order {
            let mut y = x.clone();
            y[v] = crate::scalar::to_f64(&q);
            let free: Vec<usize> = (0..x.len()).filter(|&w| w != v && fixed[w].is_none()).collect();
            if polish(sys, &mut y, bound, &free, 60) < SNAP_TOLERANCE {
                x = y;
                fixed[v] = Some(q);
                done = true;
                break;
            }
        }
        if !done {
            return None;
        }
    }
    let q: Vec<Rational> = fixed.into_iter().map(Option::unwrap).collect();
    exact_check(sys, l, &q, type_k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::frac;

    #[test]
    fn convergents_of_simple_values() {
        assert_eq!(approximate(0.5, 10), frac(1, 2));
        assert_eq!(approximate(-1.0 / 3.0 + 1e-13, 100), frac(-1, 3));
        assert_eq!(approximate(std::f64::consts::PI, 10), frac(22, 7));
        assert_eq!(approximate(std::f64::consts::PI, 200), frac(355, 113));
        assert_eq!(approximate(2.0, 1), frac(2, 1));
        let c = convergents(0.6180339887, 100);
        let dens: Vec<u64> = c.iter().map(|(d, _)| *d).collect();
        assert_eq!(dens, vec![1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89]);
    }
}
