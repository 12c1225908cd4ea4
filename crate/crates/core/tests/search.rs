use cotangent_gcs::catalog;
use cotangent_gcs::io::parse_params;
use cotangent_gcs::replay;
use cotangent_gcs::symbolic::Mode;
use cotangent_gcs::error::Error;
use cotangent_gcs::gcs::verify;
use cotangent_gcs::lie::LieAlgebra;
use cotangent_gcs::search::*;
use cotangent_gcs::scalar::frac;

fn named(name: &str) -> LieAlgebra {
    let e = catalog::entry(name).unwrap();
    e.instantiate(&e.samples()[0]).unwrap()
}

fn cfg(restarts: usize, seed: u64) -> SearchConfig {
    SearchConfig { restarts, master_seed: seed, ..Default::default() }
}

#[test]
fn abelian_four_dimensional_is_certified() {
    let l = LieAlgebra::abelian("a4", 4);
    for k in 0..=2 {
        let rep = find_gcs_of_type(&l, k, &cfg(200, 3)).unwrap();
        let c = rep.certified.as_ref().unwrap_or_else(|| panic!("type {k}: {} {:e}", rep.restarts_run, rep.best_residual));
        assert_eq!(c.type_k, k);
        assert!(verify(&l, &c.candidate()).unwrap().passed());
    }
}

#[test]
fn r_x_h3_has_all_three_types() {
    let l = named("R x h3");
    for k in 0..=2 {
        let rep = find_gcs_of_type(&l, k, &cfg(100, 11)).unwrap();
        let c = rep.certified.expect("certified");
        let v = verify(&l, &c.candidate()).unwrap();
        assert!(v.passed());
        assert_eq!(v.type_k, Some(k));
    }
}

#[test]
fn d4_type_two_is_certified() {
    let l = named("d4");
    let rep = find_gcs_of_type(&l, 2, &cfg(100, 0)).unwrap();
    let c = rep.certified.expect("certified");
    assert_eq!(verify(&l, &c.candidate()).unwrap().type_k, Some(2));
    assert!(rep.best_residual < 1e-10);
    assert_eq!(rep.history.len(), rep.restarts_run);
    assert_eq!(c.restart, rep.restarts_run - 1);
}

#[test]
fn untyped_search_certifies_some_type() {
    let l = named("n4");
    let rep = find_gcs(&l, &SearchConfig { type_constraint: Some(2), ..cfg(100, 5) }).unwrap();
    assert_eq!(rep.config.type_constraint, None);
    let c = rep.certified.expect("certified");
    assert!(c.type_k <= 2);
}

#[test]
fn same_seed_same_report() {
    let l = named("R x r3,lambda[-1,0,1]");
    let a = find_gcs_of_type(&l, 1, &cfg(20, 42)).unwrap();
    let b = find_gcs_of_type(&l, 1, &cfg(20, 42)).unwrap();
    assert_eq!(a, b);
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
}

#[test]
fn restart_seeds_are_independent_of_the_run() {
    let s: Vec<u64> = (0..5).map(|i| restart_seed(9, i)).collect();
    assert_eq!(s, (0..5).map(|i| restart_seed(9, i)).collect::<Vec<_>>());
    let mut d = s.clone();
    d.sort();
    d.dedup();
    assert_eq!(d.len(), 5);
    assert_ne!(restart_seed(9, 0), restart_seed(10, 0));
}

#[test]
fn odd_dimension_is_refused() {
    let l = LieAlgebra::abelian("a3", 3);
    assert!(matches!(find_gcs(&l, &cfg(5, 0)), Err(Error::Precondition(_))));
}

#[test]
fn bad_configurations_are_refused() {
    let l = LieAlgebra::abelian("a4", 4);
    assert!(matches!(find_gcs_of_type(&l, 3, &cfg(5, 0)), Err(Error::Precondition(_))));
    let c = SearchConfig { bound: 0.5, ..cfg(5, 0) };
    assert!(matches!(find_gcs(&l, &c), Err(Error::Input(_))));
}

#[test]
fn report_floats_round_trip() {
    let l = named("r4");
    let rep = find_gcs(&l, &cfg(3, 1)).unwrap();
    assert!(rep.certified.is_none());
    let v: serde_json::Value = serde_json::to_value(&rep).unwrap();
    let back = v["best_residual"].as_f64().unwrap();
    assert_eq!(back.to_bits(), rep.best_residual.to_bits());
    assert_eq!(v["schema"], "search-report/1");
    assert!(v["note"].as_str().unwrap().contains("evidence"));
}

#[test]
fn convergents_recover_small_fractions() {
    for (p, q) in [(3, 7), (-22, 9), (1, 9999), (0, 1)] {
        let x = p as f64 / q as f64;
        assert_eq!(approximate(x, MAX_DENOMINATOR), frac(p, q));
    }
}

/// Where a replay script proves there is no structure, the search must not
/// get close either.
#[test]
fn no_near_solution_where_a_proof_exists() {
    for entry in replay::manifest().scripts {
        let script = replay::shipped_script(&entry.script).unwrap();
        if script.target.mode != Mode::Gcs {
            continue;
        }
        let e = catalog::entry(&script.target.algebra).unwrap();
        for raw in &entry.samples {
            let mut p = script.fixed_params().unwrap();
            p.extend(parse_params(raw).unwrap());
            let l = e.instantiate(&p).unwrap();
            let rep = find_gcs(&l, &cfg(20, 2)).unwrap();
            assert!(rep.certified.is_none());
            assert!(rep.best_residual > 1e-6, "{} {raw:?}: {}", script.name, rep.best_residual);
        }
    }
}
