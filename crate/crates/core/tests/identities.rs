mod common;

use proptest::prelude::*;

use common::{twist, word};
use malcev_core::field::FieldElement;
use malcev_core::free_group::ReducedWord;
use malcev_core::identities::{
    build_u_v, build_w, check_identity, eval_expr, h_chain_generators, chain_rewrites, mutated_phi_1, phi_n,
    phi_n_without_trailing_g, verify_alpha_containment, verify_lemma5_numeric, verify_lemma5_numeric_with_phi,
    verify_lemma5_symbolic, verify_lemma5_symbolic_with_phi, Env, FreeGroupTarget, Level, S3Target,
    SeriesShapeDescriptor, SeriesTarget, WordExpr, CONJUGATE_IDENTITY, SIXTH_POWER_COMMUTATOR,
};
use malcev_core::parse::{parse_expr, parse_word};
use malcev_core::sampling;
use malcev_core::series::{truncated_inverse, ApproxSeries, Series};
use malcev_core::subgroups::{GroupHomToS3, Permutation};

fn desc(s: &str) -> SeriesShapeDescriptor {
    s.parse().unwrap()
}

fn x(i: u32) -> ReducedWord {
    ReducedWord::generator(i)
}

fn target(depth: usize) -> SeriesTarget {
    SeriesTarget { twist: twist(), depth }
}

fn all_descriptors(max_len: usize) -> Vec<SeriesShapeDescriptor> {
    SeriesShapeDescriptor::enumerate(&[Level::Normal, Level::FiniteIndex(2), Level::FiniteIndex(3)], max_len)
}

#[test]
fn descriptors_parse_and_validate() {
    assert_eq!(desc("N,F2,N").to_string(), "N,F2,N");
    assert_eq!(desc("F3").level(1), Level::FiniteIndex(3));
    assert_eq!(desc("F3").level(5), Level::Normal);
    for bad in ["", "F1", "F21", "N,,F2", "G"] {
        assert!(bad.parse::<SeriesShapeDescriptor>().is_err(), "{bad}");
    }
    assert_eq!(all_descriptors(4).len(), 3 + 9 + 27 + 81);
}

#[test]
fn w_recursion_examples() {
    assert_eq!(build_w(0, &desc("N")), WordExpr::var("x"));
    assert_eq!(build_w(1, &desc("N")), parse_expr("[?x,?y]").unwrap());
    assert_eq!(build_w(1, &desc("F3")), parse_expr("?x^6").unwrap());
    assert_eq!(build_w(2, &desc("F2")), parse_expr("[?x^2,?y]").unwrap());
}

#[test]
fn phi_recursion_examples() {
    assert_eq!(phi_n(0, &desc("N")), WordExpr::var("h"));
    assert_eq!(phi_n(1, &desc("N")), parse_expr("[?h,?g]").unwrap());
    assert_eq!(phi_n(1, &desc("F2")), parse_expr("?h^2").unwrap());
    assert_eq!(phi_n_without_trailing_g(1, &desc("N")), parse_expr("?h*?g*?h^-1").unwrap());
}

#[test]
fn s3_evaluation_examples() {
    let t = S3Target::default();
    let (a, b) = (Permutation::TRANSPOSITION_12, Permutation::CYCLE_123);
    let v = eval_expr(&parse_expr("[?x,?y]").unwrap(), &t, &Env::new().with_var("x", a).with_var("y", b)).unwrap();
    assert_eq!(v, a.compose(&b).compose(&a.inverse()).compose(&b.inverse()));
    assert_eq!(v.order(), 3);
    let e = build_w(3, &desc("N,F3"));
    let one = Permutation::IDENTITY;
    let v = eval_expr(&e, &t, &Env::new().with_var("x", one).with_var("y", one)).unwrap();
    assert!(v.is_identity());
}

#[test]
fn conjugate_identity_examples() {
    let e = parse_expr(CONJUGATE_IDENTITY).unwrap();
    let r = parse_word("x1*x2^-1").unwrap();
    let commuting = check_identity(
        &e,
        &FreeGroupTarget,
        |t| Env::new().with_const("a", r.power(t as i64 % 3 + 1)).with_var("x", r.power(2 - t as i64)),
        10,
    )
    .unwrap();
    assert!(commuting.holds());
    let free = check_identity(&e, &FreeGroupTarget, |_| Env::new().with_const("a", x(1)).with_var("x", x(2)), 1).unwrap();
    assert!(!free.holds());
}

#[test]
fn sixth_powers_commute_in_s3() {
    let e = parse_expr(SIXTH_POWER_COMMUTATOR).unwrap();
    let all = Permutation::all();
    let v = check_identity(&e, &S3Target::default(), |t| Env::new().with_var("x", all[t / 6]).with_var("y", all[t % 6]), 36)
        .unwrap();
    assert!(v.holds());
}

#[test]
fn chain_examples() {
    let a = parse_word("x1*x3").unwrap();
    assert_eq!(h_chain_generators(1, &desc("N"), &a, &[ReducedWord::identity()]), vec![a.clone()]);
    assert_eq!(h_chain_generators(1, &desc("F2"), &a, &[x(1)]), vec![x(1).power(2)]);
    assert_eq!(h_chain_generators(2, &desc("F2"), &a, &[x(2)]), vec![a.conjugate_by(&x(2))]);
}

#[test]
fn symbolic_normal_form_holds_exhaustively() {
    for d in all_descriptors(4) {
        for n in 0..=4 {
            let rep = verify_lemma5_symbolic(n, &d).unwrap();
            assert!(rep.holds(), "{d} n={n}: {rep:?}");
        }
    }
}

#[test]
fn commutator_form_holds_on_small_cases() {
    for d in all_descriptors(2) {
        for n in 0..=3 {
            assert!(verify_alpha_containment(n, &d).unwrap(), "{d} n={n}");
        }
    }
}

#[test]
fn symbolic_controls_fail() {
    let n = desc("N");
    assert!(!verify_lemma5_symbolic_with_phi(1, &n, &mutated_phi_1()).unwrap().holds());
    assert!(!verify_lemma5_symbolic_with_phi(1, &n, &phi_n_without_trailing_g(1, &n)).unwrap().u_form_holds);
    assert!(!verify_lemma5_symbolic_with_phi(2, &desc("F2,N"), &phi_n_without_trailing_g(2, &desc("F2,N"))).unwrap().holds());
}

#[test]
fn u0_is_the_conjugate_of_h() {
    let h = Series::monomial(FieldElement::s(), x(1));
    let g = Series::monomial(FieldElement::from_int(3), x(2).power(-1));
    let t = target(3);
    let (u0, v0) = build_u_v(0, &desc("N"), &h, &g, &t).unwrap();
    let opg = ApproxSeries::exact(Series::one().add(&g));
    let h = ApproxSeries::exact(h);
    let delta = u0.mul(&opg, &t.twist).unwrap().sub(&opg.mul(&h, &t.twist).unwrap()).unwrap();
    assert!(delta.terms().is_zero());
    let delta = opg.mul(&v0, &t.twist).unwrap().sub(&h.mul(&opg, &t.twist).unwrap()).unwrap();
    assert!(delta.terms().is_zero());
}

#[test]
fn trivial_h_gives_trivial_u() {
    let g = Series::monomial(FieldElement::from_int(-2), x(3));
    for d in ["N", "F2", "F3,N"] {
        for n in 0..=2 {
            let (u, v) = build_u_v(n, &desc(d), &Series::one(), &g, &target(3)).unwrap();
            assert!(u.is_one_at_truncation().unwrap(), "{d} n={n}");
            assert!(v.is_one_at_truncation().unwrap(), "{d} n={n}");
        }
    }
}

#[test]
fn numeric_normal_form_examples() {
    let phi = GroupHomToS3::make_maximal_subgroup(&x(1));
    let h = Series::word(x(1));
    let g = Series::word(x(phi.lambda));
    for n in 0..=1 {
        let rep = verify_lemma5_numeric(n, &desc("N"), &h, &g, &target(3)).unwrap();
        assert!(rep.success, "{rep:?}");
    }
    let rep = verify_lemma5_numeric(2, &desc("N,F2,N"), &h, &g, &target(4)).unwrap();
    assert!(rep.success, "{rep:?}");
    let bad = verify_lemma5_numeric_with_phi(1, &desc("N"), &mutated_phi_1(), &h, &g, &target(3)).unwrap();
    assert!(!bad.success);
    assert!(bad.u_side.residual_min.is_some());
}

#[test]
fn minus_one_cannot_be_g() {
    let g = Series::monomial(FieldElement::from_int(-1), ReducedWord::identity());
    assert!(build_u_v(1, &desc("N"), &Series::word(x(1)), &g, &target(2)).is_err());
}

#[test]
fn inverse_of_one_plus_g_is_a_two_sided_approximation() {
    let g = Series::monomial(FieldElement::s(), x(2));
    let opg = Series::one().add(&g);
    let inv = truncated_inverse(&opg, 4, &twist()).unwrap();
    let p = ApproxSeries::exact(opg.clone()).mul(&inv, &twist()).unwrap();
    assert!(p.is_one_at_truncation().unwrap());
    let p = inv.mul(&ApproxSeries::exact(opg), &twist()).unwrap();
    assert!(p.is_one_at_truncation().unwrap());
}

#[test]
fn cascade_lands_in_h_image() {
    let t = S3Target::default();
    for d in [desc("F3"), desc("F3,N"), desc("F2,F3")] {
        for n in d.depth()..=4 {
            let w = build_w(n, &d);
            for a in Permutation::all() {
                for b in [Permutation::IDENTITY, Permutation::TRANSPOSITION_12] {
                    let v = eval_expr(&w, &t, &Env::new().with_var("x", a).with_var("y", b)).unwrap();
                    assert!(malcev_core::subgroups::in_h_image(&v), "{d} n={n}: {a}, {b}");
                }
            }
        }
    }
}

fn expression() -> impl Strategy<Value = WordExpr> {
    any::<u64>().prop_map(|seed| sampling::expression(&mut sampling::rng(seed, 0), &["x", "y"], 3))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn phi_pushes_forward_through_expressions(e in expression(), a in word(4, 5), b in word(4, 5)) {
        let phi = GroupHomToS3::new(1, 2);
        let in_g = eval_expr(&e, &FreeGroupTarget, &Env::new().with_var("x", a.clone()).with_var("y", b.clone())).unwrap();
        let env = Env::new().with_var("x", phi.eval(&a)).with_var("y", phi.eval(&b));
        let in_s3 = eval_expr(&e, &S3Target::default(), &env).unwrap();
        prop_assert_eq!(phi.eval(&in_g), in_s3);
    }

    #[test]
    fn d_pushes_forward_through_expressions(seed in any::<u64>(), a in word(3, 3), b in word(3, 3)) {
        let mut r = sampling::rng(seed, 1);
        let e = sampling::expression(&mut r, &["x", "y"], 2);
        let alpha = Series::word(a.clone()).add(&Series::word(a.multiply(&x(1))));
        let beta = Series::word(b.clone()).add(&Series::monomial(FieldElement::from_int(2), b.multiply(&x(2))));
        let env = Env::new().with_var("x", ApproxSeries::exact(alpha.clone())).with_var("y", ApproxSeries::exact(beta.clone()));
        let v = eval_expr(&e, &target(3), &env).unwrap();
        let in_g = eval_expr(&e, &FreeGroupTarget, &Env::new().with_var("x", alpha.d().unwrap()).with_var("y", beta.d().unwrap())).unwrap();
        prop_assert_eq!(v.d().unwrap(), in_g);
    }

    #[test]
    fn expressions_print_and_parse_back(e in expression(), a in word(3, 4), b in word(3, 4)) {
        // printing flattens nested products, so compare printed forms and values
        let back = parse_expr(&e.to_string()).unwrap();
        prop_assert_eq!(back.to_string(), e.to_string());
        let env = Env::new().with_var("x", a).with_var("y", b);
        prop_assert_eq!(eval_expr(&back, &FreeGroupTarget, &env).unwrap(), eval_expr(&e, &FreeGroupTarget, &env).unwrap());
    }

    #[test]
    fn chain_rewrites_hold_for_commuting_a_and_c(
        root in word(4, 4), i in -3i64..=3, j in -3i64..=3, b in word(4, 4), f in prop::sample::select(vec![2i64, 6]),
    ) {
        let rep = chain_rewrites(&root.power(i), &b, &root.power(j), f);
        prop_assert!(rep.conjugation_holds);
        prop_assert!(rep.power_holds);
    }

    #[test]
    fn power_rewrite_holds_for_any_c(a in word(4, 4), b in word(4, 4), c in word(4, 4)) {
        prop_assert!(chain_rewrites(&a, &b, &c, 6).power_holds);
    }
}
