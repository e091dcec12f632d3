use braidkit::actions::{Context, Generator};
use braidkit::hopf::{act_u, coproduct, UElement};
use braidkit::ncalg::{parse_ncpoly, render, NCPoly, Orientation, RelationSet, Word};
use braidkit::qcoeff::{parse_qrat, QPoly, QRat};
use braidkit::rtensor::{build_euclidean_gauge, standard_su2};
use proptest::prelude::*;
use std::sync::OnceLock;

fn ctx() -> &'static Context {
    static CTX: OnceLock<Context> = OnceLock::new();
    CTX.get_or_init(|| Context::new(build_euclidean_gauge(&standard_su2()).unwrap()).unwrap())
}

fn qrat() -> impl Strategy<Value = QRat> {
    (
        prop::collection::vec(-4i64..=4, 0..4),
        prop::collection::vec(-4i64..=4, 1..3).prop_filter("nonzero", |v| v.iter().any(|&c| c != 0)),
        -2i32..=2,
    )
        .prop_map(|(n, d, k)| &QRat::new(QPoly::from_i64s(&n), QPoly::from_i64s(&d)).unwrap() * &QRat::q_pow(k))
}

fn laurent() -> impl Strategy<Value = QRat> {
    (prop::collection::vec(-3i64..=3, 0..3), -2i32..=2)
        .prop_map(|(n, k)| &QRat::from_poly(QPoly::from_i64s(&n)) * &QRat::q_pow(k))
}

fn poly(max_deg: usize) -> impl Strategy<Value = NCPoly> {
    prop::collection::vec((prop::collection::vec(1u8..=4, 0..=max_deg), laurent()), 0..4).prop_map(|ts| {
        let mut p = NCPoly::zero();
        for (w, c) in ts {
            p.add_term(Word(w), &c);
        }
        p
    })
}

fn generator() -> impl Strategy<Value = Generator> {
    prop_oneof![
        (1usize..=4).prop_map(Generator::P),
        (1usize..=4).prop_map(Generator::C),
        (1usize..=4, 1usize..=4).prop_map(|(i, j)| Generator::Lplus(i, j)),
        (1usize..=4, 1usize..=4).prop_map(|(i, j)| Generator::Lminus(i, j)),
        prop_oneof![Just(1), Just(-1), Just(2)].prop_map(Generator::Varsigma),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn qrat_text_roundtrip(a in qrat()) {
        prop_assert_eq!(parse_qrat(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn eval_q1_is_a_ring_map(a in laurent(), b in laurent()) {
        let e = |x: &QRat| x.eval_q1().unwrap();
        prop_assert_eq!(e(&(&a * &b)), e(&a) * e(&b));
        prop_assert_eq!(e(&(&a + &b)), e(&a) + e(&b));
    }

    #[test]
    fn qdiff_quotient_is_exact_on_multiples(a in laurent()) {
        let m = &a * &QRat::qdiff();
        prop_assert_eq!(m.div_qdiff_exact().unwrap(), a);
    }

    #[test]
    fn ncpoly_text_roundtrip(p in poly(3)) {
        prop_assert_eq!(parse_ncpoly(&render(&p)).unwrap(), p);
    }

    #[test]
    fn reduce_is_linear_and_idempotent(a in poly(3), b in poly(3), c in laurent()) {
        let rels = &ctx().rels;
        let ra = rels.reduce(&a);
        prop_assert_eq!(rels.reduce(&ra), ra.clone());
        let mut sum = a.clone();
        sum.add_scaled(&b, &c);
        let mut want = ra;
        want.add_scaled(&rels.reduce(&b), &c);
        prop_assert_eq!(rels.reduce(&sum), want);
    }

    #[test]
    fn reduction_respects_products(a in poly(2), b in poly(2)) {
        let rels = &ctx().rels;
        prop_assert_eq!(rels.reduce(&a.mul(&b)), rels.reduce(&rels.reduce(&a).mul(&rels.reduce(&b))));
    }

    #[test]
    fn reduced_output_is_normal(a in poly(4)) {
        let rels = RelationSet::build(&ctx().pair.r_prime, Orientation::Covector);
        for (w, _) in rels.reduce(&a).terms() {
            prop_assert!(rels.is_normal(w), "{}", w);
        }
    }

    #[test]
    fn generator_text_roundtrip(g in generator()) {
        prop_assert_eq!(g.to_string().parse::<Generator>().unwrap(), g);
    }

    #[test]
    fn action_respects_products(g in generator(), a in poly(2), b in poly(1)) {
        let ctx = ctx();
        let (a, b) = (ctx.reduce(&a), ctx.reduce(&b));
        let lhs = ctx.act(&g, &ctx.reduce(&a.mul(&b))).unwrap();
        let mut rhs = NCPoly::zero();
        for ((u, v), c) in coproduct(&g, 4).terms() {
            let left = act_u(ctx, &UElement::word(u.clone()), &a).unwrap();
            let right = act_u(ctx, &UElement::word(v.clone()), &b).unwrap();
            rhs.add_scaled(&left.mul(&right), c);
        }
        prop_assert_eq!(lhs, ctx.reduce(&rhs));
    }

    #[test]
    fn c_closed_form_matches_recursion(i in 1usize..=4, a in poly(3)) {
        let ctx = ctx();
        let a = ctx.reduce(&a);
        prop_assert_eq!(ctx.act_c(i, &a).unwrap(), ctx.act_c_recursive(i, &a).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn q1_limit_agrees_with_nearby_values(a in qrat()) {
        use num_traits::ToPrimitive;
        if let Ok(v) = a.eval_q1() {
            let v = v.to_f64().unwrap();
            for x in [1.0 - 1e-6, 1.0 + 1e-6] {
                prop_assert!((a.eval_f64(x) - v).abs() < 1e-3 * (1.0 + v.abs()), "{} at {}: {}", a, x, v);
            }
        }
    }
}
