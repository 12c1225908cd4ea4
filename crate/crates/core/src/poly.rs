//! Sparse multivariate polynomials with rational coefficients.
//!
//! Variables are interned in a process-wide registry, so a [`Var`] is a
//! small integer and monomials compare cheaply. Printing always goes through
//! the variable names, which makes the canonical string form independent of
//! interning order.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{LazyLock, RwLock};

use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::scalar::{format_rational, int, parse_rational, Rational};

struct Registry {
    names: Vec<String>,
    index: HashMap<String, u32>,
}

static REGISTRY: LazyLock<RwLock<Registry>> = LazyLock::new(|| {
    RwLock::new(Registry {
        names: Vec::new(),
        index: HashMap::new(),
    })
});

/// Interned variable.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Var(u32);

impl Var {
    pub fn new(name: &str) -> Var {
        if let Some(&i) = REGISTRY.read().unwrap().index.get(name) {
            return Var(i);
        }
        let mut reg = REGISTRY.write().unwrap();
        if let Some(&i) = reg.index.get(name) {
            return Var(i);
        }
        let i = reg.names.len() as u32;
        reg.names.push(name.to_string());
        reg.index.insert(name.to_string(), i);
        Var(i)
    }

    pub fn lookup(name: &str) -> Option<Var> {
        REGISTRY.read().unwrap().index.get(name).map(|&i| Var(i))
    }

    pub fn name(self) -> String {
        REGISTRY.read().unwrap().names[self.0 as usize].clone()
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// Product of variable powers, sorted by variable id, exponents positive.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(SmallVec<[(Var, u32); 4]>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(SmallVec::new())
    }

    pub fn var(v: Var) -> Self {
        Monomial(smallvec::smallvec![(v, 1)])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn powers(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0.iter().find(|&&(w, _)| w == v).map_or(0, |&(_, e)| e)
    }

    fn mul(&self, o: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &o.0);
        let mut out = SmallVec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// `self / o` when `o` divides `self`.
    fn div(&self, o: &Monomial) -> Option<Monomial> {
        let mut out: SmallVec<[(Var, u32); 4]> = SmallVec::new();
        let mut j = 0;
        for &(v, e) in &self.0 {
            if j < o.0.len() && o.0[j].0 < v {
                return None;
            }
            if j < o.0.len() && o.0[j].0 == v {
                let f = o.0[j].1;
                j += 1;
                match e.cmp(&f) {
                    Ordering::Less => return None,
                    Ordering::Equal => {}
                    Ordering::Greater => out.push((v, e - f)),
                }
            } else {
                out.push((v, e));
            }
        }
        (j == o.0.len()).then_some(Monomial(out))
    }

    /// Name-sorted powers, used for printing and canonical ordering.
    fn named(&self) -> Vec<(String, u32)> {
        let mut v: Vec<(String, u32)> = self.0.iter().map(|&(x, e)| (x.name(), e)).collect();
        v.sort();
        v
    }
}

/// Graded lexicographic order on variable ids; a monomial order, used
/// for storage and division.
impl Ord for Monomial {
    fn cmp(&self, o: &Self) -> Ordering {
        self.degree().cmp(&o.degree()).then_with(|| {
            for (a, b) in self.0.iter().zip(o.0.iter()) {
                if a.0 != b.0 {
                    // the side holding the smaller variable has a positive
                    // exponent where the other has zero
                    return if a.0 < b.0 { Ordering::Greater } else { Ordering::Less };
                }
                if a.1 != b.1 {
                    return a.1.cmp(&b.1);
                }
            }
            self.0.len().cmp(&o.0.len())
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .named()
            .into_iter()
            .map(|(n, e)| if e == 1 { n } else { format!("{n}^{e}") })
            .collect();
        f.write_str(&parts.join("*"))
    }
}

/// Ordering used by the canonical string form: total degree ascending,
/// then lexicographic on exponent vectors with variables sorted by name.
fn display_order(a: &[(String, u32)], b: &[(String, u32)]) -> Ordering {
    let da: u32 = a.iter().map(|x| x.1).sum();
    let db: u32 = b.iter().map(|x| x.1).sum();
    da.cmp(&db).then_with(|| {
        let (mut i, mut j) = (0, 0);
        loop {
            match (a.get(i), b.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(x), Some(y)) => match x.0.cmp(&y.0) {
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => {
                        if x.1 != y.1 {
                            return x.1.cmp(&y.1);
                        }
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    })
}

#[derive(Clone, PartialEq, Eq, Default, Hash)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        Polynomial { terms }
    }

    pub fn int(n: i64) -> Self {
        Self::constant(int(n))
    }

    pub fn var(name: &str) -> Self {
        Self::from_var(Var::new(name))
    }

    pub fn from_var(v: Var) -> Self {
        Self::monomial(Monomial::var(v), Rational::one())
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// The value of a constant polynomial.
    pub fn as_constant(&self) -> Option<Rational> {
        if self.is_constant() {
            Some(self.constant_term())
        } else {
            None
        }
    }

    pub fn constant_term(&self) -> Rational {
        self.terms.get(&Monomial::one()).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn variables(&self) -> BTreeSet<Var> {
        self.terms
            .keys()
            .flat_map(|m| m.0.iter().map(|&(v, _)| v))
            .collect()
    }

    pub fn variable_names(&self) -> Vec<String> {
        let mut v: Vec<String> = self.variables().into_iter().map(Var::name).collect();
        v.sort();
        v
    }

    pub fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let s = e.get() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    /// Simultaneous substitution of polynomials for variables.
    pub fn substitute(&self, map: &HashMap<Var, Polynomial>) -> Polynomial {
        if map.is_empty() {
            return self.clone();
        }
        let mut out = Polynomial::zero();
        let mut cache: HashMap<(Var, u32), Polynomial> = HashMap::new();
        for (m, c) in &self.terms {
            let mut kept = Monomial::one();
            let mut factor = Polynomial::constant(c.clone());
            for &(v, e) in &m.0 {
                match map.get(&v) {
                    Some(p) => {
                        let pe = cache.entry((v, e)).or_insert_with(|| p.pow(e));
                        factor = &factor * pe;
                    }
                    None => kept = kept.mul(&Monomial(smallvec::smallvec![(v, e)])),
                }
            }
            if kept.is_one() {
                out = &out + &factor;
            } else {
                for (fm, fc) in factor.terms {
                    out.add_term(fm.mul(&kept), fc);
                }
            }
        }
        out
    }

    pub fn substitute_one(&self, v: Var, value: &Polynomial) -> Polynomial {
        let mut map = HashMap::new();
        map.insert(v, value.clone());
        self.substitute(&map)
    }

    /// Evaluation at rational values for a subset of the variables.
    pub fn eval(&self, assignment: &HashMap<Var, Rational>) -> Polynomial {
        let map = assignment
            .iter()
            .map(|(&v, q)| (v, Polynomial::constant(q.clone())))
            .collect();
        self.substitute(&map)
    }

    /// Evaluation by variable name; fails unless the result is constant.
    pub fn eval_named(&self, assignment: &HashMap<String, Rational>) -> Result<Rational> {
        let map: HashMap<Var, Rational> = assignment
            .iter()
            .map(|(k, v)| (Var::new(k), v.clone()))
            .collect();
        let p = self.eval(&map);
        p.as_constant().ok_or_else(|| {
            Error::Input(format!(
                "unbound variable(s) {} in expression {self}",
                p.variable_names().join(", ")
            ))
        })
    }

    pub fn eval_f64(&self, values: &HashMap<Var, f64>) -> f64 {
        self.terms
            .iter()
            .map(|(m, c)| {
                m.0.iter().fold(crate::scalar::to_f64(c), |acc, &(v, e)| {
                    acc * values.get(&v).copied().unwrap_or(0.0).powi(e as i32)
                })
            })
            .sum()
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Polynomial) -> Option<Polynomial> {
        let (dm, dc) = d.leading()?;
        let (dm, dc) = (dm.clone(), dc.clone());
        let mut rem = self.clone();
        let mut q = Polynomial::zero();
        while let Some((m, c)) = rem.leading() {
            let qm = m.div(&dm)?;
            let qc = c / &dc;
            let t = Polynomial::monomial(qm, qc);
            rem = &rem - &(&t * d);
            q = &q + &t;
        }
        Some(q)
    }

    /// Partial derivative.
    pub fn derivative(&self, v: Var) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            if e == 0 {
                continue;
            }
            let powers = m
                .0
                .iter()
                .filter_map(|&(w, f)| match (w == v, f) {
                    (true, 1) => None,
                    (true, f) => Some((w, f - 1)),
                    _ => Some((w, f)),
                })
                .collect();
            out.add_term(Monomial(powers), c * int(e as i64));
        }
        out
    }

    /// Terms in canonical display order.
    fn sorted_terms(&self) -> Vec<(Vec<(String, u32)>, &Monomial, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().map(|(m, c)| (m.named(), m, c)).collect();
        v.sort_by(|a, b| display_order(&a.0, &b.0));
        v
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (_, m, c)) in self.sorted_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if n == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            if m.is_one() {
                write!(f, "{}", format_rational(&a))?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", format_rational(&a))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl std::str::FromStr for Polynomial {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse(s)
    }
}

impl Zero for Polynomial {
    fn zero() -> Self {
        Polynomial::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for Polynomial {
    fn one() -> Self {
        Polynomial::int(1)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, o: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, o: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, o: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $f(self, o: Polynomial) -> Polynomial {
                (&self).$f(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl crate::scalar::FromRational for Polynomial {
    fn from_rational(q: &Rational) -> Self {
        Polynomial::constant(q.clone())
    }
}

impl From<Rational> for Polynomial {
    fn from(c: Rational) -> Self {
        Polynomial::constant(c)
    }
}

// ---- parser ----

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(Rational),
    Ident(String),
    Op(char),
}

fn lex(s: &str) -> Result<Vec<Tok>> {
    let cs: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < cs.len() {
        let c = cs[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let st = i;
            while i < cs.len() && cs[i].is_ascii_digit() {
                i += 1;
            }
            if i + 1 < cs.len() && cs[i] == '/' && cs[i + 1].is_ascii_digit() {
                i += 1;
                while i < cs.len() && cs[i].is_ascii_digit() {
                    i += 1;
                }
            }
            let lit: String = cs[st..i].iter().collect();
            out.push(Tok::Num(parse_rational(&lit)?));
        } else if c.is_alphabetic() || c == '_' {
            let st = i;
            while i < cs.len() && (cs[i].is_alphanumeric() || cs[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(cs[st..i].iter().collect()));
        } else if "+-*^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character {c:?} in {s:?}")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    src: &'a str,
}

impl Parser<'_> {
    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at token {} in {:?}", self.pos, self.src))
    }

    fn peek_op(&self, c: char) -> bool {
        self.toks.get(self.pos) == Some(&Tok::Op(c))
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        loop {
            if self.peek_op('+') {
                self.pos += 1;
                acc = &acc + &self.term()?;
            } else if self.peek_op('-') {
                self.pos += 1;
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.unary()?;
        while self.peek_op('*') {
            self.pos += 1;
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial> {
        if self.peek_op('-') {
            self.pos += 1;
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.peek_op('^') {
            self.pos += 1;
            match self.toks.get(self.pos) {
                Some(Tok::Num(q)) if q.is_integer() && !q.is_negative() => {
                    let e: u32 = q
                        .to_integer()
                        .try_into()
                        .map_err(|_| self.err("exponent too large"))?;
                    self.pos += 1;
                    return Ok(base.pow(e));
                }
                _ => return Err(self.err("expected a nonnegative integer exponent")),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        match t {
            Some(Tok::Num(q)) => Ok(Polynomial::constant(q)),
            Some(Tok::Ident(n)) => Ok(Polynomial::var(&n)),
            Some(Tok::Op('(')) => {
                let e = self.expr()?;
                if !self.peek_op(')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            _ => {
                self.pos -= 1;
                Err(self.err("expected a number, name or '('"))
            }
        }
    }
}

/// Parses an expression in the grammar
/// `expr := literal | name | expr (+|-|*) expr | expr ^ int | (expr) | -expr`.
pub fn parse(s: &str) -> Result<Polynomial> {
    let toks = lex(s)?;
    if toks.is_empty() {
        return Err(Error::Parse(format!("empty expression {s:?}")));
    }
    let mut p = Parser { toks, pos: 0, src: s };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input"));
    }
    Ok(e)
}

/// Parses and evaluates an expression whose variables are all parameters.
pub fn eval_expr(s: &str, params: &HashMap<String, Rational>) -> Result<Rational> {
    parse(s)?.eval_named(params)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::frac;
    use proptest::prelude::*;

    fn p(s: &str) -> Polynomial {
        parse(s).unwrap()
    }

    #[test]
    fn canonical_strings() {
        assert_eq!(p("a13*a31 + a33^2 + 1").to_string(), "1 + a33^2 + a13*a31");
        assert_eq!(p("a28*a28").to_string(), "a28^2");
        assert_eq!(p("-a16*a24").to_string(), "-a16*a24");
        assert_eq!(p("1/2*(1 + a44^2) - a38*a83").to_string(), "1/2 + 1/2*a44^2 - a38*a83");
        assert_eq!(p("x - x").to_string(), "0");
        for s in ["1 + a33^2 + a13*a31", "-a16*a24", "1/2 + 1/2*a44^2 - a38*a83", "0"] {
            assert_eq!(p(s).to_string(), s);
        }
    }

    #[test]
    fn evaluation() {
        let a28 = Var::new("a28");
        let mut m = HashMap::new();
        m.insert(a28, int(0));
        assert!(p("a28^2").eval(&m).is_zero());
        let a33 = Var::new("a33");
        let mut m = HashMap::new();
        m.insert(a33, int(2));
        assert_eq!(p("1 + a33^2").eval(&m).as_constant(), Some(int(5)));
    }

    #[test]
    fn parser_errors() {
        for s in ["", "1 +", "(a", "a ^ b", "a $ b", "1/0"] {
            assert!(parse(s).is_err(), "{s}");
        }
    }

    #[test]
    fn exact_division() {
        let f = p("(a + b)*(a - 2*c + 1)");
        assert_eq!(f.div_exact(&p("a + b")).unwrap(), p("a - 2*c + 1"));
        assert!(f.div_exact(&p("a + c")).is_none());
        assert!(p("a^2 + 1").div_exact(&p("a")).is_none());
    }

    #[test]
    fn derivative() {
        assert_eq!(p("x^3*y + 2*y").derivative(Var::new("x")), p("3*x^2*y"));
    }

    fn small_poly() -> impl Strategy<Value = Polynomial> {
        let names = ["u", "v", "w"];
        proptest::collection::vec((-3i64..4, 1i64..3, 0u32..3, 0u32..3, 0u32..2), 0..5).prop_map(move |ts| {
            ts.into_iter().fold(Polynomial::zero(), |acc, (a, b, e0, e1, e2)| {
                let m = Polynomial::var(names[0]).pow(e0)
                    * Polynomial::var(names[1]).pow(e1)
                    * Polynomial::var(names[2]).pow(e2);
                &acc + &m.scale(&frac(a, b))
            })
        })
    }

    proptest! {
        #[test]
        fn ring_laws(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) - &b, a.clone());
        }

        #[test]
        fn display_round_trips(a in small_poly()) {
            prop_assert_eq!(parse(&a.to_string()).unwrap(), a);
        }

        #[test]
        fn division_inverts_product(a in small_poly(), b in small_poly()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!((&a * &b).div_exact(&b), Some(a));
        }
    }
}
