//! Acceptance run: one line per criterion.
//!
//! Exits nonzero when any criterion fails, except the example-table comparison, whose
//! mismatch is a known and recorded discrepancy; it is still printed as FAIL.

use braidkit::actions::{
    check_intertwining, check_spinorial, classical_limit_table, compare_example_table, verify_cross_relations,
    verify_gaussian, verify_metric_scaling, Context,
};
use braidkit::hopf::{verify_conjugation_identity, verify_module_algebra_all, verify_relations};
use braidkit::ncalg::{check_confluence, NCPoly, Orientation, RelationSet};
use braidkit::qcoeff::{division_stats, QPoly, QRat};
use braidkit::report::VerificationReport;
use braidkit::rtensor::{build_euclidean_gauge, build_minkowski_gauge, check_hecke, check_ybe, standard_su2};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use std::time::Instant;

/// Criteria allowed to fail without failing the run.
const KNOWN_DISCREPANCIES: [usize; 1] = [1];

struct Outcome {
    pass: bool,
    detail: String,
}

fn from_report(r: &VerificationReport) -> Outcome {
    let mut detail = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(", ");
    if let Some(w) = &r.witness {
        detail = format!("{detail}; witness: {w}");
    }
    Outcome {
        pass: r.passed(),
        detail,
    }
}

fn all_of(parts: Vec<(&str, Outcome)>) -> Outcome {
    Outcome {
        pass: parts.iter().all(|(_, o)| o.pass),
        detail: parts
            .iter()
            .map(|(name, o)| format!("{name}: {} ({})", if o.pass { "ok" } else { "FAIL" }, o.detail))
            .collect::<Vec<_>>()
            .join("; "),
    }
}

fn euclid() -> Context {
    Context::new(build_euclidean_gauge(&standard_su2()).expect("Hecke input")).expect("context")
}

fn c1_example_table(ctx: &Context) -> Outcome {
    match compare_example_table(ctx) {
        Ok(c) => Outcome {
            pass: c.passed(),
            detail: format!(
                "{}/{} entries match (generator rows), {}/{} (coordinate rows)",
                c.generator_rows, c.total, c.coordinate_rows, c.total
            ),
        },
        Err(e) => Outcome {
            pass: false,
            detail: e.to_string(),
        },
    }
}

fn c2_classical(ctx: &Context) -> Outcome {
    match classical_limit_table(ctx) {
        Ok(t) => Outcome {
            pass: t.formula_matches() == t.total() && t.golden_matches() == t.total(),
            detail: format!(
                "formula {}/{}, table {}/{}",
                t.formula_matches(),
                t.total(),
                t.golden_matches(),
                t.total()
            ),
        },
        Err(e) => Outcome {
            pass: false,
            detail: e.to_string(),
        },
    }
}

fn c3_rmatrices() -> Outcome {
    let su2 = standard_su2();
    let e = build_euclidean_gauge(&su2).expect("euclidean gauge");
    let m = build_minkowski_gauge(&su2).expect("minkowski gauge");
    all_of(vec![
        ("su2 ybe", from_report(&check_ybe(&su2))),
        ("su2 hecke", from_report(&check_hecke(&su2))),
        ("euclidean ybe", from_report(&check_ybe(&e.r))),
        ("minkowski ybe", from_report(&check_ybe(&m.r))),
    ])
}

fn c6_scaling(ctx: &Context) -> Outcome {
    let r = verify_metric_scaling(ctx, 3);
    let h = QRat::qdiff();
    let limits_ok = (1..=3i64).all(|m| {
        let coef = &(QRat::one() - ctx.lambda().pow(-2 * m as i32)) / &h;
        coef.eval_q1().map(|v| QRat::from_ratio(&v) == QRat::from_int(-m)).unwrap_or(false)
    });
    let m1_ok = r.params.get("coefficient_m1").map(String::as_str) == Some("-q");
    all_of(vec![
        ("identity", from_report(&r)),
        (
            "coefficients",
            Outcome {
                pass: limits_ok && m1_ok,
                detail: format!("m=1 is -q: {m1_ok}, q=1 limits are -m: {limits_ok}"),
            },
        ),
    ])
}

fn c8_conjugate(ctx: &Context) -> Outcome {
    // closed conjugate formula against the derivation rule run with R_21^{-1} as the braiding
    let mut pair = ctx.pair.clone();
    pair.r = ctx.r21inv.clone();
    let bar = match Context::new(pair) {
        Ok(c) => c,
        Err(e) => {
            return Outcome {
                pass: false,
                detail: e.to_string(),
            }
        }
    };
    let mut cases = 0;
    let mut witness = None;
    for m in ctx.basis_upto(3) {
        let p = NCPoly::monomial(m.clone(), QRat::one());
        for i in 1..=ctx.n() {
            cases += 1;
            let (a, b) = (ctx.act_c_conjugate(i, &p), bar.act_c_recursive(i, &p));
            if witness.is_none() && !matches!((&a, &b), (Ok(x), Ok(y)) if x == y) {
                witness = Some(format!("c{i} on {m}"));
            }
        }
    }
    all_of(vec![
        (
            "conjugate formula",
            Outcome {
                pass: witness.is_none(),
                detail: witness.unwrap_or_else(|| format!("{cases} cases up to degree 3")),
            },
        ),
        ("intertwining", from_report(&check_intertwining(ctx, 3))),
    ])
}

fn c11_gaussian(ctx: &Context) -> Outcome {
    let r = verify_gaussian(ctx, 3);
    let recorded = r.params.contains_key("convention");
    let mut o = from_report(&r);
    o.pass &= recorded;
    o
}

fn qrat() -> impl Strategy<Value = QRat> {
    (
        prop::collection::vec(-5i64..=5, 0..4),
        prop::collection::vec(-5i64..=5, 1..4).prop_filter("nonzero", |v| v.iter().any(|&c| c != 0)),
        -3i32..=3,
    )
        .prop_map(|(n, d, k)| {
            let r = QRat::new(QPoly::from_i64s(&n), QPoly::from_i64s(&d)).expect("nonzero denominator");
            &r * &QRat::q_pow(k)
        })
}

fn field_axioms() -> Outcome {
    let mut runner = TestRunner::new(Config {
        cases: 1000,
        failure_persistence: None,
        ..Config::default()
    });
    let res = runner.run(&(qrat(), qrat(), qrat()), |(a, b, c)| {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &QRat::zero(), a.clone());
        prop_assert_eq!(&a * &QRat::one(), a.clone());
        prop_assert!((&(&a + &b) - &b) == a);
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inv().unwrap(), QRat::one());
        }
        Ok(())
    });
    Outcome {
        pass: res.is_ok(),
        detail: match res {
            Ok(()) => "1000 random triples".into(),
            Err(e) => e.to_string(),
        },
    }
}

fn c12_infrastructure(ctx: &Context) -> Outcome {
    let fa = field_axioms();
    let rels = RelationSet::build(&ctx.pair.r_prime, Orientation::Covector);
    let idempotent = (0..=4)
        .flat_map(|d| {
            // all words of degree d, normal or not
            let mut words: Vec<Vec<u8>> = vec![vec![]];
            for _ in 0..d {
                words = words.into_iter().flat_map(|w| (1..=4u8).map(move |i| [w.clone(), vec![i]].concat())).collect();
            }
            words
        })
        .all(|w| {
            let once = rels.reduce(&NCPoly::word(&w));
            rels.reduce(&once) == once
        });
    let (calls, bad) = division_stats();
    all_of(vec![
        ("field axioms", fa),
        (
            "reduce idempotent",
            Outcome {
                pass: idempotent,
                detail: "every word of degree <= 4".into(),
            },
        ),
        ("confluence", from_report(&check_confluence(&rels, 3))),
        (
            "exact division",
            Outcome {
                pass: bad == 0 && calls > 0,
                detail: format!("{calls} quotients by q-q^-1, {bad} not exact"),
            },
        ),
    ])
}

fn main() {
    let ctx = euclid();
    type Criterion<'a> = (&'a str, Box<dyn Fn() -> Outcome + 'a>);
    let criteria: Vec<Criterion> = vec![
        ("example table", Box::new(|| c1_example_table(&ctx))),
        ("classical limit", Box::new(|| c2_classical(&ctx))),
        ("R-matrix validity", Box::new(c3_rmatrices)),
        ("relation suite", Box::new(|| from_report(&verify_relations(&ctx, 3)))),
        ("module algebra", Box::new(|| from_report(&verify_module_algebra_all(&ctx, 3)))),
        ("metric scaling", Box::new(|| c6_scaling(&ctx))),
        ("cross relations", Box::new(|| from_report(&verify_cross_relations(&ctx, 3)))),
        ("conjugate action", Box::new(|| c8_conjugate(&ctx))),
        ("spinorial action", Box::new(|| from_report(&check_spinorial(&ctx, 2)))),
        ("conjugation identity", Box::new(|| from_report(&verify_conjugation_identity(&ctx, 2)))),
        ("gaussian", Box::new(|| c11_gaussian(&ctx))),
        ("infrastructure", Box::new(|| c12_infrastructure(&ctx))),
    ];
    let mut unexpected = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let id = k + 1;
        let start = Instant::now();
        let o = run();
        let ms = start.elapsed().as_millis();
        let tag = if o.pass { "PASS" } else { "FAIL" };
        let known = !o.pass && KNOWN_DISCREPANCIES.contains(&id);
        println!(
            "[{tag}] {id:>2} {name} ({ms} ms): {}{}",
            o.detail,
            if known { " [known discrepancy]" } else { "" }
        );
        if !o.pass && !known {
            unexpected += 1;
        }
    }
    if unexpected > 0 {
        println!("{unexpected} criteria failed");
        std::process::exit(1);
    }
}
