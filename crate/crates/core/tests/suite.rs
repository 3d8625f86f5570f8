use mutvis::harness::{run_verification_suite, suite, Scope, Status, SuiteConfig};

fn config(scope: Scope) -> SuiteConfig {
    SuiteConfig {
        scope,
        ..SuiteConfig::default()
    }
}

#[test]
fn report_follows_declaration_order() {
    for scope in [Scope::Double, Scope::Mycielskian, Scope::Bounds] {
        let report = run_verification_suite(&config(scope));
        let names: Vec<String> = report.checks.iter().map(|c| c.name.clone()).collect();
        assert_eq!(names, suite::check_names(scope));
    }
}

#[test]
fn summary_matches_tallies() {
    let report = run_verification_suite(&config(Scope::All));
    let s = report.summary();
    assert_eq!(s.pass + s.fail + s.timeout + s.skip, report.checks.len());
    for c in &report.checks {
        if let Some(a) = c.actual {
            if c.status == Status::Pass || c.status == Status::Fail {
                assert_eq!(
                    c.status == Status::Pass,
                    c.expected.accepts(a),
                    "{}",
                    c.name
                );
            }
        }
    }
}

#[test]
fn headline_checks_are_present() {
    let double = run_verification_suite(&config(Scope::Double));
    let c = double.get("mu_D_C7").unwrap();
    assert_eq!((c.actual, c.status), (Some(7), Status::Pass));
    let myc = run_verification_suite(&config(Scope::Mycielskian));
    let c = myc.get("mu_M_C8").unwrap();
    assert_eq!((c.actual, c.status), (Some(10), Status::Pass));
    let bounds = run_verification_suite(&config(Scope::Bounds));
    assert!(bounds.all_passed(), "{}", bounds.table());
}

#[test]
fn deterministic_given_seed() {
    let a = run_verification_suite(&SuiteConfig {
        workers: 1,
        ..config(Scope::Bounds)
    });
    let b = run_verification_suite(&SuiteConfig {
        workers: 4,
        ..config(Scope::Bounds)
    });
    assert_eq!(a.machine_lines(), b.machine_lines());
    let other = run_verification_suite(&SuiteConfig {
        seed: 99,
        ..config(Scope::Bounds)
    });
    assert_eq!(other.checks.len(), a.checks.len());
}

#[test]
fn only_the_kminus_double_values_disagree() {
    // gp(D(K_n^-)) comes out as n - 1 for every n in range (see README)
    let report = run_verification_suite(&config(Scope::All));
    let failing: Vec<(&str, Option<usize>)> = report
        .checks
        .iter()
        .filter(|c| c.status != Status::Pass)
        .map(|c| (c.name.as_str(), c.actual))
        .collect();
    assert_eq!(
        failing,
        vec![
            ("gp_D_Kminus5", Some(4)),
            ("gp_D_Kminus6", Some(5)),
            ("gp_D_Kminus7", Some(6)),
            ("gp_D_Kminus8", Some(7))
        ]
    );
    assert_eq!(report.exit_code(), 1);
}

#[test]
fn order_cap_marks_skips() {
    let report = run_verification_suite(&SuiteConfig {
        max_n: 12,
        ..config(Scope::Double)
    });
    assert_eq!(report.get("mu_D_C7").unwrap().status, Status::Skip);
    assert_eq!(report.get("mu_D_C5").unwrap().status, Status::Pass);
}
