use painleve_core::algebra::{parse_fraction, rat, Fraction, Var, VAR_COUNT};
use painleve_core::systems::system;
use painleve_core::weyl::{
    compose, compose_word, get_chart, get_diagram, get_map, map_names, order_of, reflection_names, chart_names,
    ExtendedMap, GroupId, WeylError,
};
use proptest::prelude::*;

fn f(s: &str) -> Fraction {
    parse_fraction(s).unwrap()
}

fn map(g: GroupId, n: &str) -> ExtendedMap {
    get_map(g, n).unwrap()
}

#[test]
fn catalog_entries() {
    let s4 = map(GroupId::D5, "s4");
    assert_eq!(s4.phase[Var::Q.index()], f("q + a4/p"));
    assert_eq!(s4.phase[Var::P.index()], f("p"));
    assert_eq!(map(GroupId::D5, "pi3").time, f("-t"));
    let sigma = map(GroupId::A1, "sigma");
    assert_eq!(sigma.phase[Var::Q.index()], f("t*p"));
    assert_eq!(sigma.phase[Var::P.index()], f("-q/t"));
    assert_eq!(sigma.time, f("-t"));
    assert!(matches!(get_map(GroupId::D5, "s9"), Err(WeylError::UnknownMap { .. })));
}

#[test]
fn composition_examples() {
    let s4 = map(GroupId::D5, "s4");
    assert!(compose(&s4, &s4).unwrap().is_identity());
    let id = ExtendedMap::identity();
    for g in GroupId::SIX_DIM {
        for n in map_names(g) {
            let m = map(g, n);
            assert!(compose(&id, &m).unwrap().equals(&m), "{g} {n}");
            assert!(compose(&m, &id).unwrap().equals(&m), "{g} {n}");
        }
    }
}

#[test]
fn composition_order_is_f_after_g() {
    // (f o g)(P) = f(g(P)) at a rational point, against pointwise evaluation.
    let f_ = map(GroupId::D5, "s2");
    let g_ = map(GroupId::D5, "pi3");
    let pt: [_; VAR_COUNT] = core::array::from_fn(|i| rat(i as i64 + 2, 2 * i as i64 + 3));
    let direct = f_.evaluate(&g_.evaluate(&pt).unwrap()).unwrap();
    assert_eq!(compose(&f_, &g_).unwrap().evaluate(&pt).unwrap(), direct);
}

#[test]
fn orders() {
    assert_eq!(order_of(&map(GroupId::D5, "s0"), 8).unwrap(), Some(2));
    assert_eq!(order_of(&ExtendedMap::identity(), 8).unwrap(), Some(1));
    for g in GroupId::ALL {
        for n in reflection_names(g) {
            assert_eq!(order_of(&map(g, n), 8).unwrap(), Some(2), "{g} {n}");
        }
    }
}

#[test]
fn diagrams() {
    let d5 = get_diagram(GroupId::D5).unwrap();
    assert_eq!((d5.m(0, 2), d5.m(0, 1)), (3, 2));
    assert_eq!(get_diagram(GroupId::B5a).unwrap().m(0, 1), 4);
    let d62 = get_diagram(GroupId::D62).unwrap();
    assert_eq!((d62.m(0, 1), d62.m(4, 5)), (4, 4));
    for g in GroupId::SIX_DIM {
        let d = get_diagram(g).unwrap();
        assert!(d.is_well_formed());
        for i in 0..6 {
            assert_eq!(d.m(i, i), 1);
            for j in 0..6 {
                assert_eq!(d.m(i, j), d.m(j, i));
                if i != j {
                    assert!([2, 3, 4].contains(&d.m(i, j)));
                }
            }
        }
    }
    assert!(get_diagram(GroupId::A1).is_err());
}

#[test]
fn charts() {
    let r4 = get_chart(GroupId::D5, "r4").unwrap();
    assert_eq!(r4.forward[Var::Q.index()], f("1/q"));
    let r5 = get_chart(GroupId::D62, "r5").unwrap();
    assert_eq!(r5.forward[Var::P.index()], f("p - 2*a5/q + t/q^2"));
    let r0 = get_chart(GroupId::D5, "r0").unwrap();
    assert!(compose(&r0.backward_map(), &r0.forward_map()).unwrap().is_identity());
    for g in GroupId::SIX_DIM {
        for n in chart_names(g) {
            let c = get_chart(g, n).unwrap();
            assert!(c.round_trip().unwrap(), "{g} {n}");
            assert!(c.forward_map().params.is_identity());
        }
    }
    assert!(get_chart(GroupId::D5, "r9").is_err());
}

#[test]
fn parameter_actions_preserve_normalizations() {
    for g in GroupId::ALL {
        let c = system(g.system()).constraint;
        for n in map_names(g) {
            assert!(map(g, n).preserves(&c), "{g} {n}");
        }
    }
}

#[test]
fn stored_inverses() {
    for g in GroupId::ALL {
        for n in map_names(g) {
            let m = map(g, n);
            if let Some(inv) = m.inverse() {
                assert!(compose(&m, inv).unwrap().is_identity(), "{g} {n}");
                assert!(compose(inv, &m).unwrap().is_identity(), "{g} {n} (left)");
            }
        }
    }
}

#[test]
fn a1_relations() {
    let g = GroupId::A1;
    let (s0, s1, sigma, pi) = (map(g, "s0"), map(g, "s1"), map(g, "sigma"), map(g, "pi"));
    assert!(compose(&sigma, &s1).unwrap().equals(&pi));
    let conj0 = compose_word(&[&sigma, &s0, &sigma]).unwrap();
    let conj1 = compose_word(&[&sigma, &s1, &sigma]).unwrap();
    assert_eq!(conj0.params, s1.params);
    assert_eq!(conj1.params, s0.params);
}

fn word_maps(g: GroupId) -> Vec<ExtendedMap> {
    map_names(g).into_iter().map(|n| map(g, n)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10))]

    #[test]
    fn composition_is_associative(gi in 0usize..4, a in 0usize..7, b in 0usize..7, c in 0usize..7) {
        let g = GroupId::SIX_DIM[gi];
        let ms = word_maps(g);
        let (x, y, z) = (&ms[a % ms.len()], &ms[b % ms.len()], &ms[c % ms.len()]);
        let left = compose(&compose(x, y).unwrap(), z).unwrap();
        let right = compose(x, &compose(y, z).unwrap()).unwrap();
        prop_assert!(left.equals(&right));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reflections_square_to_identity_on_parameters(
        gi in 0usize..5, i in 0usize..6, alpha in prop::array::uniform6((-20i64..=20, 1i64..=9))
    ) {
        let g = GroupId::ALL[gi];
        let names = reflection_names(g);
        let s = map(g, names[i % names.len()]);
        let alpha = alpha.map(|(n, d)| rat(n, d));
        prop_assert_eq!(s.params.apply(&s.params.apply(&alpha)), alpha);
    }
}
