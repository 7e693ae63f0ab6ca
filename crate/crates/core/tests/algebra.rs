use num_bigint::BigInt;
use painleve_core::algebra::{
    divides, int, parse_fraction, parse_polynomial, rat, reduce_by_constraint, Fraction, LinearForm, Monomial,
    Polynomial, Rational, Var, VAR_COUNT,
};
use painleve_core::systems::{system, SystemName};
use proptest::prelude::*;

fn p(s: &str) -> Polynomial {
    parse_polynomial(s).unwrap()
}

fn f(s: &str) -> Fraction {
    parse_fraction(s).unwrap()
}

/// Term-by-term evaluation with plain rationals, independent of the
/// engine's own evaluator.
fn eval_naive(poly: &Polynomial, pt: &[Rational; VAR_COUNT]) -> Rational {
    let mut acc = int(0);
    for (m, c) in poly.terms() {
        let mut term = c.clone();
        for (i, e) in m.exponents().iter().enumerate() {
            for _ in 0..*e {
                term *= &pt[i];
            }
        }
        acc += term;
    }
    acc
}

const VARS: [Var; 6] = [Var::X, Var::Y, Var::Q, Var::P, Var::T, Var::A0];

fn small_poly() -> impl Strategy<Value = Polynomial> {
    let term = (prop::array::uniform6(0u8..3), -5i64..=5, 1i64..=3);
    prop::collection::vec(term, 0..5).prop_map(|ts| {
        let mut acc = Polynomial::zero();
        for (es, n, d) in ts {
            let mut e = [0u8; VAR_COUNT];
            for (v, k) in VARS.iter().zip(es) {
                e[v.index()] = k;
            }
            acc = &acc + &Polynomial::term(Monomial::from_exponents(&e), rat(n, d));
        }
        acc
    })
}

fn nonzero_poly() -> impl Strategy<Value = Polynomial> {
    small_poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn point() -> impl Strategy<Value = [Rational; VAR_COUNT]> {
    prop::array::uniform14((-9i64..=9, 1i64..=7)).prop_map(|a| a.map(|(n, d)| rat(n, d)))
}

#[test]
fn ring_examples() {
    assert_eq!(&p("x+1") * &p("x-1"), p("x^2-1"));
    let xy = p("x*y");
    assert!((&xy + &(-&xy)).is_zero());
    assert!((&xy + &(-&xy)).terms().is_empty());
    let h = &(&(&(&p("q") * &p("q")) * &(&p("p") * &p("p"))) + &(&p("a1") * &p("q*p"))) + &(&p("q") + &p("t*p"));
    assert_eq!(h.len(), 4);
    assert_eq!(h, p("q^2*p^2 + a1*q*p + q + t*p"));
}

#[test]
fn derivative_examples() {
    let h = p("q^2*p^2 + a1*q*p + q + t*p");
    assert_eq!(h.derivative(Var::P), p("2*q^2*p + a1*q + t"));
    assert!(h.derivative(Var::X).is_zero());
    assert_eq!(f("1/q").derivative(Var::Q), f("-1/q^2"));
}

#[test]
fn substitution_examples() {
    let qp = f("q*p");
    let tr2 = [(Var::Q, f("-t*p")), (Var::P, f("q/t"))];
    assert_eq!(qp.substitute(&tr2).unwrap(), f("-q*p"));
    assert_eq!(qp.substitute(&[(Var::Q, f("q")), (Var::P, f("p"))]).unwrap(), qp);
    assert_eq!(f("x*y^2").substitute(&[(Var::Y, f("1/y"))]).unwrap(), f("x/y^2"));
}

#[test]
fn divides_examples() {
    assert_eq!(divides(&p("y^2"), &p("x*y^2")), Some(p("x")));
    assert_eq!(divides(&p("y"), &p("x+1")), None);
    assert_eq!(divides(&p("t"), &p("t*q^2*p^2 + t^2*p")), Some(p("q^2*p^2 + t*p")));
}

#[test]
fn constraint_reduction_examples() {
    let d5 = system(SystemName::D5);
    assert_eq!(
        reduce_by_constraint(&p("a3"), &d5.constraint, 3),
        p("1/2 - a0/2 - a1/2 - a2 - a4/2 - a5/2")
    );
    let free = p("a0*x + a4^2");
    assert_eq!(reduce_by_constraint(&free, &d5.constraint, 3), free);
    let d62 = system(SystemName::D62);
    assert_eq!(
        reduce_by_constraint(&p("2*a3 + a4"), &d62.constraint, 3),
        p("2*(1/2 - a0 - a1 - a2 - a4 - a5) + a4")
    );
}

#[test]
fn fractions_are_reduced() {
    let a = f("(x^2 - 1)/(x - 1)");
    assert_eq!(a, f("x + 1"));
    assert!(a.is_polynomial());
    let b = &f("1/(x+1)") + &f("x/(x+1)");
    assert_eq!(b, Fraction::one());
}

/// Chain rule on catalog-built expressions and substitutions:
/// `d(f o s)/dv = sum_u (df/du o s) ds_u/dv`.
#[test]
fn chain_rule_on_catalog_expressions() {
    let exprs = [
        system(SystemName::D5).hamiltonian.clone(),
        system(SystemName::HIIID7).hamiltonian.clone(),
        system(SystemName::H1).hamiltonian.clone(),
        f("(x*y - a0)*y + z/(q + 1)"),
    ];
    let subs: [Vec<(Var, Fraction)>; 5] = [
        vec![(Var::Q, f("-t*p")), (Var::P, f("q/t"))],
        vec![(Var::Y, f("1/y")), (Var::X, f("-(x*y + a0)*y"))],
        vec![(Var::Q, f("q + a4/p"))],
        vec![(Var::X, f("x + a2*w/(y*w + 1)")), (Var::Z, f("z + a2/(y*w+1)"))],
        vec![(Var::P, f("p - 2*a5/q + t/q^2")), (Var::Q, f("1/q"))],
    ];
    let mut n = 0;
    for e in &exprs {
        for s in &subs {
            for v in [Var::X, Var::Q, Var::P, Var::T].iter().take(1 + n % 2) {
                let lhs = e.substitute(s).unwrap().derivative(*v);
                let mut rhs = Fraction::zero();
                for u in e.support().iter() {
                    let du = e.derivative(u).substitute(s).unwrap();
                    let su = s.iter().find(|(w, _)| *w == u).map(|(_, g)| g.clone()).unwrap_or_else(|| Fraction::var(u));
                    rhs = &rhs + &(&du * &su.derivative(*v));
                }
                assert_eq!(lhs, rhs, "{e} under {s:?} in {v}");
                n += 1;
            }
        }
    }
    assert!(n >= 20);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&(&a - &b) + &b - a.clone()).is_zero());
    }

    #[test]
    fn arithmetic_commutes_with_evaluation(a in small_poly(), b in small_poly(), pt in point()) {
        prop_assert_eq!(eval_naive(&(&a * &b), &pt), eval_naive(&a, &pt) * eval_naive(&b, &pt));
        prop_assert_eq!(eval_naive(&(&a + &b), &pt), eval_naive(&a, &pt) + eval_naive(&b, &pt));
        prop_assert_eq!(a.evaluate(&pt), eval_naive(&a, &pt));
    }

    #[test]
    fn fraction_equality_is_an_equivalence(
        a in small_poly(), b in nonzero_poly(), k in nonzero_poly(), m in nonzero_poly()
    ) {
        // x = a/b, y = (a k)/(b k), z = (a k m)/(b k m) represent one value.
        let x = Fraction::new(a.clone(), b.clone()).unwrap();
        let y = Fraction::new(&a * &k, &b * &k).unwrap();
        let z = Fraction::new(&(&a * &k) * &m, &(&b * &k) * &m).unwrap();
        prop_assert_eq!(&x == &y, &y == &x);
        prop_assert!(x == y && y == z && x == z);
        let other = &x + &Fraction::one();
        prop_assert_eq!(&x == &other, &other == &x);
        prop_assert!(x != other);
    }

    #[test]
    fn divides_has_a_witness(d in nonzero_poly(), q in small_poly(), r in small_poly()) {
        let n = &(&d * &q) + &r;
        if let Some(quot) = divides(&d, &n) {
            prop_assert!((&n - &(&d * &quot)).is_zero());
        }
        let exact = divides(&d, &(&d * &q));
        prop_assert_eq!(exact, Some(q));
    }

    #[test]
    fn constraint_reduction_is_idempotent_and_sound(
        a in small_poly(), alpha in prop::array::uniform6((-6i64..=6, 1i64..=5))
    ) {
        let c = LinearForm::from_integers([1, 1, 2, 2, 1, 1], int(1));
        let a = &a * &p("a3 + a5");
        let once = reduce_by_constraint(&a, &c, 3);
        prop_assert_eq!(reduce_by_constraint(&once, &c, 3), once.clone());
        prop_assert!(!once.contains_var(Var::A3));
        let alpha = c.complete(&alpha.map(|(n, d)| rat(n, d)), 3);
        prop_assert!(c.is_satisfied(&alpha));
        let mut pt: [Rational; VAR_COUNT] = core::array::from_fn(|i| rat(i as i64 + 2, 3));
        for (i, v) in painleve_core::algebra::PARAMS.iter().enumerate() {
            pt[v.index()] = alpha[i].clone();
        }
        prop_assert_eq!(eval_naive(&a, &pt), eval_naive(&once, &pt));
    }

    #[test]
    fn canonical_text_round_trips(a in small_poly()) {
        prop_assert_eq!(parse_polynomial(&a.to_string()).unwrap(), a);
    }
}

#[test]
fn big_coefficients_survive() {
    let big = Rational::new(BigInt::from(10).pow(40) + 1, BigInt::from(3));
    let q = Polynomial::term(Monomial::var(Var::Q), big.clone());
    assert_eq!((&q * &q).coefficient(Monomial::one_var(Var::Q, 2)), &big * &big);
}
