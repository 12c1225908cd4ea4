//! One line per acceptance criterion. Criteria 1 and 8 fail for reasons
//! recorded in the README; the test asserts that exactly those fail, and
//! that they fail in exactly the documented way.

use std::collections::BTreeSet;
use std::time::Instant;

use cotangent_gcs::catalog;
use cotangent_gcs::cohomology::{betti_numbers, ce_differential, closed_two_forms, is_closed_two_form};
use cotangent_gcs::gcs::{
    b_field, cybe_check, gcs_from_subalgebra, gcs_type, generalized_kahler_check, i_eigenspace, verify,
    GCSCandidate,
};
use cotangent_gcs::io::{parse_params, Params};
use cotangent_gcs::lie::{cotangent, neutral_gram, LieAlgebra};
use cotangent_gcs::poly::parse;
use cotangent_gcs::replay::{check_script, check_script_symbolic, manifest, shipped_script, Step, Verdict};
use cotangent_gcs::scalar::int;
use cotangent_gcs::search::{find_gcs, find_gcs_of_type, SearchConfig};
use cotangent_gcs::{Matrix, Rational};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

const BETTI_ERRATA: [&str; 3] = ["R x r'3,0", "aff(R) x aff(R)", "r4,-1,-1"];

fn structures() -> Vec<(String, LieAlgebra, GCSCandidate)> {
    let mut out = Vec::new();
    for r in catalog::rows() {
        for p in r.samples() {
            let l = r.algebra(&p).unwrap();
            for c in r.cells() {
                out.push((format!("{} type {}", r.label(), c.type_k), l.clone(), r.structure(c.type_k, &p).unwrap()));
            }
        }
    }
    out
}

fn betti_reproduction() -> Outcome {
    let rows = catalog::table1_report();
    let n: usize = rows.iter().map(|r| r.samples.len()).sum();
    let bad: BTreeSet<&str> = rows
        .iter()
        .filter(|r| r.samples.iter().any(|s| s.betti_computed != s.betti_expected))
        .map(|r| r.label.as_str())
        .collect();
    if bad.is_empty() {
        Ok(format!("{n} samples agree"))
    } else {
        Err(format!("Betti pairs differ on {bad:?}"))
    }
}

fn structure_verification() -> Outcome {
    let rows = catalog::table1_report();
    let mut n = 0;
    for r in rows.iter().filter(|r| r.in_table) {
        for s in &r.samples {
            for c in &s.cells {
                if !c.passed() {
                    return Err(format!("{} type {} at {:?}", r.label, c.type_k, s.params));
                }
                n += 1;
            }
        }
    }
    Ok(format!("{n} structure x sample verifications"))
}

fn theorem() -> Outcome {
    let rep = catalog::theorem_main_check().map_err(|e| e.to_string())?;
    match rep.interpretation {
        Some(i) if rep.mismatches_centralizer.is_empty() => {
            Ok(format!("{} samples, no mismatch, interpretation {i:?}", rep.records.len()))
        }
        _ => Err(format!("mismatches {:?}", rep.mismatches_centralizer)),
    }
}

fn corollary() -> Outcome {
    let recs = catalog::corollary_type1_check().map_err(|e| e.to_string())?;
    let bad: Vec<&str> = recs.iter().filter(|r| !r.agrees).map(|r| r.row.as_str()).collect();
    let exception = recs.iter().any(|r| r.row == "d'4,lambda" && !r.completely_solvable && !r.no_type1);
    if bad.is_empty() && exception {
        Ok(format!("{} samples agree", recs.len()))
    } else {
        Err(format!("mismatches {bad:?}, exception covered {exception}"))
    }
}

fn asserts(s: &cotangent_gcs::replay::DeductionScript) -> Vec<Step> {
    s.walk().into_iter().filter(|st| matches!(st, Step::Assert { .. })).cloned().collect()
}

fn replay_proofs() -> Outcome {
    let mut runs = 0;
    let mut mutants = 0;
    for e in &manifest().scripts {
        let s = shipped_script(&e.script).map_err(|x| x.to_string())?;
        let mut samples: Vec<Params> = e.samples.iter().map(|p| parse_params(p).unwrap()).collect();
        if e.symbolic {
            let r = check_script_symbolic(&s, &Params::new()).map_err(|x| x.to_string())?;
            if r.verdict != Verdict::Proved {
                return Err(format!("{} symbolic: {:?}", e.script, r.verdict));
            }
            runs += 1;
        }
        for p in &samples {
            let r = check_script(&s, p).map_err(|x| x.to_string())?;
            if r.verdict != Verdict::Proved {
                return Err(format!("{} at {p:?}: {:?}", e.script, r.verdict));
            }
            runs += 1;
        }
        // coverage of every displayed identity
        let all = asserts(&s);
        for d in &e.displays {
            let want = parse(d.erratum.as_ref().map_or(&d.text, |x| &x.expected)).unwrap();
            let hit = all.iter().any(|st| match st {
                Step::Assert { generator, expected, display } => {
                    display.as_deref().unwrap_or(generator) == d.label && parse(expected).unwrap() == want
                }
                _ => false,
            });
            if !hit {
                return Err(format!("{}: {} not asserted", e.script, d.label));
            }
        }
        // every single corrupted expectation is caught
        let p = if e.symbolic { None } else { Some(samples.remove(0)) };
        for n in 0..s.assert_count() {
            let mut m = s.clone();
            if let Some(Step::Assert { expected, .. }) = m.assert_mut(n) {
                *expected = format!("{expected} + a11*a22");
            }
            let r = match &p {
                None => check_script_symbolic(&m, &Params::new()),
                Some(p) => check_script(&m, p),
            }
            .map_err(|x| x.to_string())?;
            if r.verdict.is_proved() {
                return Err(format!("{}: corrupted assert {n} still proves", e.script));
            }
            mutants += 1;
        }
    }
    Ok(format!("{runs} runs proved, {mutants} mutants rejected"))
}

fn obstruction() -> Outcome {
    for mu in ["1", "-2"] {
        let p = parse_params(&[("mu".to_string(), mu.to_string())].into()).unwrap();
        let l = catalog::get("g6", &p).map_err(|e| e.to_string())?;
        let v = cotangent_gcs::cohomology::symplectic_obstruction(&l).map_err(|e| e.to_string())?;
        if !v.is_obstructed() || !v.generic_pfaffian.is_zero() || v.closed_two_form_dim != 7 {
            return Err(format!("g6 at mu = {mu}: {v:?}"));
        }
    }
    let recs = catalog::obstruction_agreement().map_err(|e| e.to_string())?;
    let bad: Vec<&str> = recs.iter().filter(|r| !r.agrees).map(|r| r.row.as_str()).collect();
    if bad.is_empty() {
        Ok(format!("g6 obstructed at both samples; {} rows agree with type 0", recs.len()))
    } else {
        Err(format!("type-0 column disagrees on {bad:?}"))
    }
}

fn correspondence() -> Outcome {
    let all = structures();
    for (tag, l, j) in &all {
        let q = i_eigenspace(l, j).map_err(|e| format!("{tag}: {e}"))?;
        let ok = q.space.dim() == l.dim()
            && q.is_isotropic()
            && q.is_subalgebra(l)
            && q.meets_conjugate_trivially()
            && gcs_from_subalgebra(l, &q).map(|k| k.matrix() == j.matrix()).unwrap_or(false);
        if !ok {
            return Err(tag.clone());
        }
    }
    Ok(format!("{} structures round trip", all.len()))
}

fn kahler_pair(a: Rational, b: Rational, x: Rational, y: Rational) -> (Rational, bool, bool) {
    let o = Rational::zero();
    let c = -(Rational::one() + a.clone() * a.clone()) / b.clone();
    let z = -(Rational::one() + x.clone() * x.clone()) / y.clone();
    let ja = Matrix::from_rows(vec![
        vec![a.clone(), o.clone(), o.clone(), b.clone()],
        vec![o.clone(), a.clone(), -b.clone(), o.clone()],
        vec![o.clone(), -c.clone(), -a.clone(), o.clone()],
        vec![c.clone(), o.clone(), o.clone(), -a.clone()],
    ])
    .unwrap();
    let jb = Matrix::from_rows(vec![
        vec![x.clone(), y.clone(), o.clone(), o.clone()],
        vec![z.clone(), -x.clone(), o.clone(), o.clone()],
        vec![o.clone(), o.clone(), -x.clone(), -z.clone()],
        vec![o.clone(), o.clone(), -y.clone(), x.clone()],
    ])
    .unwrap();
    let rep = generalized_kahler_check(&GCSCandidate::new(ja).unwrap(), &GCSCandidate::new(jb).unwrap()).unwrap();
    (c * z, rep.commute && rep.involution_g, rep.positive_definite)
}

const KAHLER_PICKS: [(i64, i64, i64, i64); 4] = [(0, 1, 0, -1), (0, 1, 0, 1), (1, 2, -1, 3), (2, -1, 1, -1)];

fn kahler() -> Outcome {
    let mut wrong = Vec::new();
    for (a, b, x, y) in KAHLER_PICKS {
        let (cz, involutive, pd) = kahler_pair(int(a), int(b), int(x), int(y));
        if !involutive {
            return Err(format!("pair {:?} does not commute", (a, b, x, y)));
        }
        if pd != (cz < Rational::zero()) {
            wrong.push(format!("cz = {cz}: positive definite {pd}"));
        }
    }
    if wrong.is_empty() {
        Ok("positive definite exactly when cz < 0".into())
    } else {
        Err(format!("sign reversed: {}", wrong.join(", ")))
    }
}

/// The documented failure: positivity holds exactly when `cz > 0`.
fn kahler_sign_is_reversed() -> bool {
    KAHLER_PICKS.iter().all(|&(a, b, x, y)| {
        let (cz, involutive, pd) = kahler_pair(int(a), int(b), int(x), int(y));
        involutive && pd == (cz > Rational::zero())
    })
}

fn random_combination(rng: &mut ChaCha8Rng, basis: &[Matrix<Rational>], m: usize) -> Matrix<Rational> {
    basis.iter().fold(Matrix::zeros(m, m), |acc, b| &acc + &b.scale(&int(rng.gen_range(-3..=3))))
}

fn properties() -> Outcome {
    let algebras: Vec<LieAlgebra> = catalog::entries()
        .flat_map(|e| e.samples().into_iter().map(move |p| e.instantiate(&p).unwrap()))
        .collect();
    for l in &algebras {
        let t = cotangent(l).total;
        let targets: Vec<&LieAlgebra> = if l.dim() <= 4 { vec![l, &t] } else { vec![l] };
        for a in targets {
            for k in 0..a.dim() {
                let d = &ce_differential(a, k + 1).unwrap() * &ce_differential(a, k).unwrap();
                if !d.is_zero() {
                    return Err(format!("d^2 != 0 on {} in degree {k}", a.name()));
                }
            }
        }
        if !t.ad_invariance_check(&neutral_gram(l.dim())) {
            return Err(format!("neutral form not invariant on T*{}", l.name()));
        }
        if l.dim() == 4 {
            let b = betti_numbers(&t).unwrap();
            let euler: i64 = b.iter().enumerate().map(|(k, &x)| if k % 2 == 0 { x as i64 } else { -(x as i64) }).sum();
            if (0..=8).any(|k| b[k] != b[8 - k]) || euler != 0 {
                return Err(format!("duality or Euler characteristic fails on T*{}: {b:?}", l.name()));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let mut forms = 0;
    for n in 0..120 {
        let l = &algebras[rng.gen_range(0..algebras.len())];
        let m = l.dim();
        let w = if n % 2 == 0 {
            random_combination(&mut rng, &closed_two_forms(l), m)
        } else {
            let mut w = Matrix::zeros(m, m);
            for i in 0..m {
                for j in i + 1..m {
                    let v = int(rng.gen_range(-3..=3));
                    w[(j, i)] = -v.clone();
                    w[(i, j)] = v;
                }
            }
            w
        };
        if cybe_check(l, &w).unwrap() != is_closed_two_form(l, &w) {
            return Err(format!("CYBE and closedness disagree on {}", l.name()));
        }
        forms += 1;
    }
    let all = structures();
    let mut pairs = 0;
    for _ in 0..60 {
        let (tag, l, j) = &all[rng.gen_range(0..all.len())];
        let b = random_combination(&mut rng, &closed_two_forms(l), l.dim());
        let jb = b_field(j, &b, l).map_err(|e| e.to_string())?;
        let rep = verify(l, &jb).map_err(|e| e.to_string())?;
        if !rep.passed() || rep.type_k != Some(gcs_type(j).unwrap()) {
            return Err(format!("B-field changes {tag}"));
        }
        pairs += 1;
    }
    Ok(format!("{} algebras, {forms} forms, {pairs} B-field pairs", algebras.len()))
}

const NEGATIVE_FLOOR: f64 = 1e-3;

fn search_evidence() -> Outcome {
    let cfg = SearchConfig::default();
    let mut cells = 0;
    let mut worst = 0;
    for r in catalog::table_rows() {
        for p in r.samples() {
            let l = r.algebra(&p).unwrap();
            for c in r.cells() {
                let rep = find_gcs_of_type(&l, c.type_k, &cfg).map_err(|e| e.to_string())?;
                if rep.certified.is_none() {
                    return Err(format!("{} type {} at {p:?} not certified", r.label(), c.type_k));
                }
                worst = worst.max(rep.restarts_run);
                cells += 1;
            }
        }
    }
    let mut lowest = f64::INFINITY;
    let mut negatives = 0;
    let mut check = |what: String, best: f64| -> Result<(), String> {
        lowest = lowest.min(best);
        negatives += 1;
        if best < NEGATIVE_FLOOR {
            Err(format!("{what}: residual {best:e}"))
        } else {
            Ok(())
        }
    };
    for name in ["R x r3", "R x r3,lambda", "r4", "r4,lambda", "r4,mu,lambda"] {
        let e = catalog::entry(name).unwrap();
        for p in e.samples() {
            let rep = find_gcs(&e.instantiate(&p).unwrap(), &cfg).map_err(|e| e.to_string())?;
            check(format!("{name} at {p:?}"), rep.best_residual)?;
        }
    }
    for (label, types) in [("d4", &[0, 1][..]), ("h4", &[1]), ("d4,lambda", &[1])] {
        let r = catalog::row(label).unwrap();
        for p in r.samples() {
            let l = r.algebra(&p).unwrap();
            for &k in types {
                let rep = find_gcs_of_type(&l, k, &cfg).map_err(|e| e.to_string())?;
                check(format!("{label} type {k} at {p:?}"), rep.best_residual)?;
            }
        }
    }
    Ok(format!(
        "{cells} cells certified (at most {worst} restarts); {negatives} negative runs, lowest residual {lowest:.2e}"
    ))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("Betti numbers of the table", betti_reproduction),
        ("stored structures verify with their types", structure_verification),
        ("theorem on completely solvable algebras", theorem),
        ("corollary on type 1", corollary),
        ("replayed non-existence proofs", replay_proofs),
        ("symplectic obstruction", obstruction),
        ("eigenspace correspondence", correspondence),
        ("generalized Kahler pairs on aff(R)", kahler),
        ("property suites", properties),
        ("search evidence", search_evidence),
    ];
    let mut failed = BTreeSet::new();
    for (n, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let out = run();
        let secs = t.elapsed().as_secs_f64();
        match &out {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} ({secs:.1}s)", n + 1),
            Err(why) => {
                println!("criterion {:>2} FAIL  {name}: {why} ({secs:.1}s)", n + 1);
                failed.insert(n + 1);
            }
        }
    }

    // Known failures, each in exactly its documented form.
    assert_eq!(failed, BTreeSet::from([1, 8]), "unexpected criterion outcome");
    let bad: BTreeSet<String> = catalog::table1_report()
        .into_iter()
        .filter(|r| r.samples.iter().any(|s| s.betti_computed != s.betti_expected))
        .map(|r| r.label)
        .collect();
    assert_eq!(bad, BETTI_ERRATA.iter().map(|s| s.to_string()).collect());
    assert!(kahler_sign_is_reversed());
}
