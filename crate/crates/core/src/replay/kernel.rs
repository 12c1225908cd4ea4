use std::collections::{BTreeMap, HashMap};

use num_traits::{Signed, Zero};
use serde::Serialize;

use super::{Branch, DeductionScript, Multiple, Source, SquareTerm, Step};
use crate::catalog;
use crate::error::{Error, Result};
use crate::io::{params_strings, Params};
use crate::poly::{parse, Polynomial, Var};
use crate::scalar::{int, Rational};
use crate::symbolic::{generators, Mode};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Verdict {
    Proved,
    /// `step` is a path such as `7[2].3`: step 7, its second branch,
    /// third step there. Lemma bodies continue the path with `.`.
    Failed { step: String, reason: String },
}

impl Verdict {
    pub fn is_proved(&self) -> bool {
        matches!(self, Verdict::Proved)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Stats {
    pub asserts: usize,
    pub squares: usize,
    pub splits: usize,
    pub branches_closed: usize,
    pub lemmas: usize,
    pub contradictions: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScriptReport {
    pub schema: &'static str,
    pub script: String,
    pub algebra: String,
    pub mode: Mode,
    pub params: BTreeMap<String, String>,
    /// Parameters left as polynomial variables.
    pub symbolic: Vec<String>,
    pub verdict: Verdict,
    pub stats: Stats,
}

type Fail = (String, String);
type Flow = std::result::Result<bool, Fail>;

#[derive(Clone, Default)]
struct State {
    subs: HashMap<Var, Polynomial>,
    hyps: BTreeMap<String, Polynomial>,
    goal: Option<Polynomial>,
    fresh: usize,
}

struct Kernel {
    gens: BTreeMap<String, Polynomial>,
    params: HashMap<Var, Polynomial>,
    facts: Vec<Polynomial>,
    stats: Stats,
}

fn fail<T>(path: &str, reason: impl Into<String>) -> std::result::Result<T, Fail> {
    Err((path.to_string(), reason.into()))
}

impl Kernel {
    fn expr(&self, s: &str, st: &State, path: &str) -> std::result::Result<Polynomial, Fail> {
        match parse(s) {
            Ok(p) => Ok(p.substitute(&self.params).substitute(&st.subs)),
            Err(e) => fail(path, format!("cannot parse {s:?}: {e}")),
        }
    }

    fn constant(&self, s: &str, st: &State, path: &str) -> std::result::Result<Rational, Fail> {
        let p = self.expr(s, st, path)?;
        match p.as_constant() {
            Some(c) => Ok(c),
            None => fail(path, format!("coefficient {p} is not a rational constant")),
        }
    }

    fn resolve(&self, name: &str, st: &State, path: &str) -> std::result::Result<Polynomial, Fail> {
        let raw = match self.gens.get(name).or_else(|| st.hyps.get(name)) {
            Some(p) => p,
            None => return fail(path, format!("unresolved generator {name:?}")),
        };
        Ok(raw.substitute(&self.params).substitute(&st.subs))
    }

    fn combination(&self, terms: &[Multiple], st: &State, path: &str) -> std::result::Result<Polynomial, Fail> {
        let mut acc = Polynomial::zero();
        for t in terms {
            acc = acc + &self.expr(&t.multiplier, st, path)? * &self.resolve(&t.of, st, path)?;
        }
        Ok(acc)
    }

    fn source(&self, s: &Source, st: &State, path: &str) -> std::result::Result<Polynomial, Fail> {
        match s {
            Source::Named(n) => self.resolve(n, st, path),
            Source::Combination { combination } => self.combination(combination, st, path),
        }
    }

    /// `sum c_i q_i^2` with the sign shared by all nonzero `c_i`
    /// (`0` when every coefficient vanishes).
    fn squares(&self, terms: &[SquareTerm], st: &State, path: &str) -> std::result::Result<(Polynomial, i8), Fail> {
        let mut sum = Polynomial::zero();
        let mut sign = 0i8;
        for t in terms {
            let c = self.constant(&t.coeff, st, path)?;
            let s = if c.is_positive() { 1 } else if c.is_negative() { -1 } else { 0 };
            if s != 0 {
                if sign != 0 && s != sign {
                    return fail(path, "square coefficients of mixed sign");
                }
                sign = s;
            }
            let q = self.expr(&t.square, st, path)?;
            sum = sum + (&q * &q).scale(&c);
        }
        Ok((sum, sign))
    }

    /// Nonzero by the target's hypotheses: a nonzero constant, a divisor
    /// of a fact, or a fact times something nonzero.
    fn backed(&self, f: &Polynomial) -> bool {
        if let Some(c) = f.as_constant() {
            return !c.is_zero();
        }
        self.facts.iter().any(|fact| {
            if fact.is_zero() {
                return false;
            }
            if fact.as_constant().is_none() && fact.div_exact(f).is_some() {
                return true;
            }
            match f.div_exact(fact) {
                Some(q) if fact.as_constant().is_none() => self.backed(&q),
                _ => false,
            }
        })
    }

    fn apply_sub(st: &mut State, v: Var, value: Polynomial, path: &str) -> std::result::Result<(), Fail> {
        let value = value.substitute(&st.subs);
        if value.variables().contains(&v) {
            return fail(path, format!("cannot eliminate {v}: it occurs in {value}"));
        }
        for p in st.subs.values_mut() {
            *p = p.substitute_one(v, &value);
        }
        st.subs.insert(v, value);
        Ok(())
    }

    /// Solves `f = 0` for `v`, which must occur once, linearly, with a
    /// constant coefficient.
    fn solve(f: &Polynomial, v: Var, path: &str) -> std::result::Result<Polynomial, Fail> {
        let mut coeff = None;
        let mut rest = Polynomial::zero();
        for (m, c) in f.terms() {
            let e = m.exponent(v);
            if e == 0 {
                rest = rest + Polynomial::monomial(m.clone(), c.clone());
            } else if e == 1 && m.degree() == 1 && coeff.is_none() {
                coeff = Some(c.clone());
            } else {
                return fail(path, format!("{f} is not linear in {v} with a constant coefficient"));
            }
        }
        match coeff {
            Some(c) => Ok(rest.scale(&(-int(1) / c))),
            None => fail(path, format!("{v} does not occur in {f}")),
        }
    }

    /// Records `f = 0`; returns whether that closes the branch.
    fn establish(
        st: &mut State,
        f: Polynomial,
        solve_for: Option<&str>,
        name: Option<&str>,
        path: &str,
    ) -> std::result::Result<bool, Fail> {
        if f.is_zero() {
            return Ok(false);
        }
        if f.as_constant().is_some() {
            return Ok(true);
        }
        if let Some(v) = solve_for {
            let v = Var::new(v);
            let value = Self::solve(&f, v, path)?;
            Self::apply_sub(st, v, value, path)?;
            return Ok(false);
        }
        let single = f.num_terms() == 1 && {
            let (m, _) = f.terms().next().expect("one term");
            m.degree() == 1
        };
        if single {
            let v = f.variables().into_iter().next().expect("one variable");
            Self::apply_sub(st, v, Polynomial::zero(), path)?;
            return Ok(false);
        }
        let key = match name {
            Some(n) => n.to_string(),
            None => {
                st.fresh += 1;
                format!("assumption{}", st.fresh)
            }
        };
        st.hyps.insert(key, f);
        Ok(false)
    }

    fn run(&mut self, steps: &[Step], st: &mut State, prefix: &str) -> Flow {
        // An empty branch inside a lemma closes once the goal vanishes.
        if steps.is_empty() && st.goal.as_ref().is_some_and(|g| g.substitute(&st.subs).is_zero()) {
            return Ok(true);
        }
        let mut closed = false;
        let mut last = format!("{prefix}0");
        for (i, step) in steps.iter().enumerate() {
            let path = format!("{prefix}{}", i + 1);
            if closed {
                return fail(&path, "step after the branch is closed");
            }
            closed = self.step(step, st, &path)?;
            last = path;
        }
        if !closed {
            let what = if st.goal.is_some() {
                "derivation ends without reaching the goal or a contradiction"
            } else {
                "derivation ends without a contradiction"
            };
            return fail(&last, what);
        }
        Ok(true)
    }

    fn branch(&mut self, b: &Branch, k: usize, st: &State, path: &str) -> Flow {
        let bpath = format!("{path}[{}]", k + 1);
        let f = self.expr(&b.factor, st, &bpath)?;
        if b.nonzero {
            if !b.steps.is_empty() {
                return fail(&bpath, "a branch closed by a nonzero factor takes no steps");
            }
            if !self.backed(&f) {
                return fail(&bpath, format!("factor {f} tagged nonzero without a hypothesis backing it"));
            }
            self.stats.branches_closed += 1;
            return Ok(true);
        }
        let mut inner = st.clone();
        if Self::establish(&mut inner, f, b.solve_for.as_deref(), b.name.as_deref(), &bpath)? {
            self.stats.branches_closed += 1;
            return Ok(true);
        }
        self.run(&b.steps, &mut inner, &format!("{bpath}."))?;
        self.stats.branches_closed += 1;
        Ok(true)
    }

    fn step(&mut self, step: &Step, st: &mut State, path: &str) -> Flow {
        match step {
            Step::Assert { generator, expected, .. } => {
                self.stats.asserts += 1;
                let got = self.resolve(generator, st, path)?;
                let want = self.expr(expected, st, path)?;
                if got != want {
                    return fail(path, format!("identity mismatch: {generator} = {got}, expected {want}"));
                }
                Ok(false)
            }
            Step::Squares { source, terms } => {
                self.stats.squares += 1;
                let p = self.source(source, st, path)?;
                let (sum, sign) = self.squares(terms, st, path)?;
                if sign == 0 || p != sum {
                    return fail(path, format!("witness does not reproduce {p}"));
                }
                let mut closed = false;
                for t in terms {
                    let q = self.expr(&t.square, st, path)?;
                    closed |= Self::establish(st, q, None, None, path)?;
                }
                Ok(closed)
            }
            Step::Combine { name, terms, result } => {
                let got = self.combination(terms, st, path)?;
                let want = self.expr(result, st, path)?;
                if got != want {
                    return fail(path, format!("combination is {got}, not {want}"));
                }
                st.hyps.insert(name.clone(), want);
                Ok(false)
            }
            Step::Split { source, branches } => {
                self.stats.splits += 1;
                let p = self.source(source, st, path)?;
                let mut prod = Polynomial::int(1);
                for b in branches {
                    prod = &prod * &self.expr(&b.factor, st, path)?;
                }
                let c = if prod.is_zero() { None } else { p.div_exact(&prod).and_then(|q| q.as_constant()) };
                if !c.is_some_and(|c| !c.is_zero()) {
                    return fail(path, format!("{p} is not a nonzero multiple of {prod}"));
                }
                for (k, b) in branches.iter().enumerate() {
                    self.branch(b, k, st, path)?;
                }
                Ok(true)
            }
            Step::Lemma { goal, solve_for, name, steps } => {
                self.stats.lemmas += 1;
                let g = self.expr(goal, st, path)?;
                let mut inner = st.clone();
                inner.goal = Some(g.clone());
                self.run(steps, &mut inner, &format!("{path}."))?;
                Self::establish(st, g, solve_for.as_deref(), name.as_deref(), path)
            }
            Step::Conclude => match &st.goal {
                None => fail(path, "conclude outside a lemma"),
                Some(g) => {
                    let g = g.substitute(&st.subs);
                    if g.is_zero() {
                        Ok(true)
                    } else {
                        fail(path, format!("goal {g} does not vanish"))
                    }
                }
            },
            Step::Substitute { variable, value, by } => {
                let h = self.resolve(by, st, path)?;
                let v = Var::new(variable);
                let val = self.expr(value, st, path)?;
                let d = Polynomial::from_var(v).substitute(&st.subs) - val.clone();
                let ok = !d.is_zero() && h.div_exact(&d).and_then(|q| q.as_constant()).is_some_and(|c| !c.is_zero());
                if !ok {
                    return fail(path, format!("{by} = {h} does not justify {variable} = {val}"));
                }
                Self::apply_sub(st, v, val, path)?;
                Ok(false)
            }
            Step::Contradiction { source, constant, terms } => {
                let p = self.source(source, st, path)?;
                let c = self.constant(constant, st, path)?;
                let (sum, sign) = self.squares(terms, st, path)?;
                let cs = if c.is_positive() { 1 } else if c.is_negative() { -1 } else { 0 };
                if cs == 0 || (sign != 0 && sign != cs) {
                    return fail(path, "witness is not of constant sign");
                }
                if p != sum + Polynomial::from(c) {
                    return fail(path, format!("witness does not reproduce {p}"));
                }
                self.stats.contradictions += 1;
                Ok(true)
            }
            Step::NonzeroContradiction { source, factor, constant, terms } => {
                let p = self.source(source, st, path)?;
                let f = self.expr(factor, st, path)?;
                if !self.backed(&f) {
                    return fail(path, format!("factor {f} tagged nonzero without a hypothesis backing it"));
                }
                let c = self.constant(constant, st, path)?;
                let (sum, sign) = self.squares(terms, st, path)?;
                let cs = if c.is_positive() { 1 } else if c.is_negative() { -1 } else { 0 };
                if cs == 0 || (sign != 0 && sign != cs) {
                    return fail(path, "witness is not of constant sign");
                }
                if p != &f * &(sum + Polynomial::from(c)) {
                    return fail(path, format!("witness does not reproduce {p}"));
                }
                self.stats.contradictions += 1;
                Ok(true)
            }
        }
    }
}

fn check(script: &DeductionScript, given: &Params, symbolic: bool) -> Result<ScriptReport> {
    let entry = catalog::entry(&script.target.algebra)?;
    let mut params = script.fixed_params()?;
    for (k, v) in given {
        if !entry.params().contains(&k.as_str()) {
            return Err(Error::Input(format!("{} has no parameter {k:?}", entry.name())));
        }
        params.insert(k.clone(), v.clone());
    }
    let free: Vec<String> = entry
        .params()
        .iter()
        .filter(|p| !params.contains_key(**p))
        .map(|p| p.to_string())
        .collect();
    if !symbolic {
        if let Some(p) = free.first() {
            return Err(Error::Input(format!("missing value for parameter {p:?}")));
        }
        entry.check_params(&params)?;
    }
    let l = entry.symbolic(&params)?;
    let param_map: HashMap<Var, Polynomial> =
        params.iter().map(|(k, v)| (Var::new(k), Polynomial::from(v.clone()))).collect();
    let facts = entry.nonzero_facts().iter().map(|f| f.substitute(&param_map)).collect();
    let mut kernel = Kernel {
        gens: generators(&l, script.target.mode),
        params: param_map,
        facts,
        stats: Stats::default(),
    };
    let mut st = State::default();
    let verdict = match kernel.run(&script.steps, &mut st, "") {
        Ok(_) => Verdict::Proved,
        Err((step, reason)) => Verdict::Failed { step, reason },
    };
    Ok(ScriptReport {
        schema: "replay-report/1",
        script: script.name.clone(),
        algebra: script.target.algebra.clone(),
        mode: script.target.mode,
        params: params_strings(&params),
        symbolic: free,
        verdict,
        stats: kernel.stats,
    })
}

/// Checks a script at concrete parameter values; every parameter of the
/// target must be fixed by the script or by `params`.
pub fn check_script(script: &DeductionScript, params: &Params) -> Result<ScriptReport> {
    check(script, params, false)
}

/// Checks a script with the parameters not in `params` kept symbolic;
/// divisions by parameter expressions must be backed by the target's
/// constraints.
pub fn check_script_symbolic(script: &DeductionScript, params: &Params) -> Result<ScriptReport> {
    check(script, params, true)
}
