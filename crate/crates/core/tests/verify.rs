use painleve_core::algebra::{int, rat, Rational, Var};
use painleve_core::report::{Budget, Status, VerificationReport};
use painleve_core::systems::{system, SystemName};
use painleve_core::verify::{
    catalog_coefficients, check_first_integral, check_hamiltonian_relations, check_holomorphy,
    check_involutions_and_braid, check_equivalence_suite, check_symmetry, check_symmetry_closure,
    check_symmetry_suite, check_symplectic, check_symplectic_suite, oracle_point, random_point, reference_point,
    seeded_params, solve_on_charts, symmetry_subjects, TWindow,
};
use painleve_core::weyl::{chart_names, get_chart, get_map, ExtendedMap, GroupId};

fn budget() -> Budget {
    Budget::default()
}

fn symbolic_reports() -> Vec<(GroupId, VerificationReport)> {
    let b = budget();
    let mut out = Vec::new();
    for g in GroupId::ALL {
        let mut rep = VerificationReport::new();
        rep.extend(check_involutions_and_braid(g, &b));
        rep.extend(check_symmetry_suite(g, &b));
        rep.extend(check_symplectic_suite(g, &b));
        if g != GroupId::A1 {
            rep.extend(check_holomorphy(g, &b));
        }
        rep.extend(check_equivalence_suite(g, &b));
        out.push((g, rep));
    }
    let mut a1 = VerificationReport::new();
    a1.extend(check_first_integral(&b));
    a1.extend(check_hamiltonian_relations(&b));
    out.push((GroupId::A1, a1));
    out
}

#[test]
fn pass_records_carry_the_zero_witness() {
    for (g, rep) in symbolic_reports() {
        assert!(!rep.records.is_empty(), "{g}");
        for r in &rep.records {
            assert_eq!(r.status, Status::Pass, "{} ({}): {} {}", r.check_id, g, r.witness, r.detail);
            assert_eq!(r.witness, "0", "{}", r.check_id);
        }
    }
}

#[test]
fn d5_coxeter_counts() {
    let rep = check_involutions_and_braid(GroupId::D5, &budget());
    assert_eq!(rep.records.len(), 21);
    assert!(rep.all_passed());
    assert!(rep.find("coxeter.d5.braid.s0s1").unwrap().detail.contains("m = 2"));
    let b5b = check_involutions_and_braid(GroupId::B5b, &budget());
    let r = b5b.find("coxeter.b5b.braid.s4s5").unwrap();
    assert_eq!(r.status, Status::Pass);
    assert!(r.detail.contains("m = 4"));
}

#[test]
fn symmetry_examples() {
    let d5 = system(SystemName::D5);
    let s2 = get_map(GroupId::D5, "s2").unwrap();
    assert!(check_symmetry(&d5, &s2, "x", &budget()).passed());
    assert!(check_symmetry(&d5, &ExtendedMap::identity(), "x", &budget()).passed());
    // The oracle agrees at the fixed reference point.
    let pt = reference_point(&d5);
    assert_eq!(pt[Var::A3.index()], rat(1, 2) * (int(1) - rat(1, 2) - rat(1, 3) - rat(2, 5) - rat(1, 7) - rat(1, 11)));
    let f = d5.vector_field();
    let res = oracle_point(&f, &f, &s2, &pt).unwrap();
    assert!(res.iter().all(|r| *r == int(0)));
}

#[test]
fn wrong_maps_fail_with_witness() {
    let hiii = system(SystemName::HIIID7);
    for n in ["s0_printed", "s1_printed"] {
        let m = get_map(GroupId::A1, n).unwrap();
        let r = check_symmetry(&hiii, &m, n, &budget());
        assert_eq!(r.status, Status::Fail, "{n}");
        assert!(!r.witness.is_empty() && r.witness != "0");
    }
    // s4 of D5 used with the wrong parameter action.
    let d5 = system(SystemName::D5);
    let mut m = get_map(GroupId::D5, "s4").unwrap();
    m.params = get_map(GroupId::D5, "s5").unwrap().params;
    assert_eq!(check_symmetry(&d5, &m, "bad", &budget()).status, Status::Fail);
}

/// Wherever a symmetry passes symbolically, every admissible rational point
/// gives zero residuals.
#[test]
fn oracle_never_contradicts_symbolic_verdict() {
    for g in GroupId::ALL {
        let sys = system(g.system());
        let f = sys.vector_field();
        for n in symmetry_subjects(g) {
            let m = get_map(g, n).unwrap();
            assert!(check_symmetry(&sys, &m, n, &budget()).passed());
            let mut evaluated = 0;
            for seed in 0..12 {
                let pt = random_point(&sys, seed);
                if let Some(res) = oracle_point(&f, &f, &m, &pt) {
                    evaluated += 1;
                    assert!(res.iter().all(|r| *r == int(0)), "{g} {n} seed {seed}");
                }
            }
            assert!(evaluated >= 6, "{g} {n}");
        }
    }
}

#[test]
fn closure_under_composition() {
    for g in GroupId::ALL {
        let rep = check_symmetry_closure(g, &budget());
        assert_eq!(rep.records.len(), 5);
        assert!(rep.all_passed(), "{g}");
    }
}

#[test]
fn relations_and_negative_control() {
    let rep = check_hamiltonian_relations(&budget());
    for id in ["relations.a1.tr1", "relations.a1.tr2_tr1", "relations.a1.tr3", "relations.a1.orientation"] {
        assert_eq!(rep.find(id).unwrap().status, Status::Pass, "{id}");
    }
    assert!(rep.observations.iter().any(|o| o.key == "relations.a1.orientation"));
    let control = rep.observations.iter().find(|o| o.key == "relations.a1.control.tr2").unwrap();
    assert!(!control.value.contains("PASS"), "{}", control.value);
    // Independently: tr2 alone does not carry H1 to H3 at a rational point.
    let h1 = system(SystemName::H1);
    let tr2 = get_map(GroupId::A1, "tr2").unwrap();
    let pt = random_point(&h1, 3);
    let res = oracle_point(&h1.vector_field(), &system(SystemName::H3).vector_field(), &tr2, &pt).unwrap();
    assert!(res.iter().any(|r| *r != int(0)));
    // tr1 under the side condition, at a rational point.
    let tr1 = get_map(GroupId::A1, "tr1").unwrap();
    let res = oracle_point(&h1.vector_field(), &system(SystemName::H2).vector_field(), &tr1, &pt).unwrap();
    assert!(res.iter().all(|r| *r == int(0)));
}

#[test]
fn symplectic_examples() {
    assert!(check_symplectic(&get_map(GroupId::A1, "tr2").unwrap(), "tr2", &budget()).passed());
    assert!(check_symplectic(&ExtendedMap::identity(), "id", &budget()).passed());
    let mut scaled = ExtendedMap::identity();
    scaled.phase[Var::Q.index()] = painleve_core::algebra::parse_fraction("2*q").unwrap();
    assert_eq!(check_symplectic(&scaled, "2q", &budget()).status, Status::Fail);
}

fn t_free_charts(g: GroupId) -> Vec<&'static str> {
    chart_names(g)
        .into_iter()
        .filter(|n| {
            let c = get_chart(g, n).unwrap();
            c.forward.iter().chain(&c.backward).all(|f| !f.support().contains(Var::T))
        })
        .collect()
}

#[test]
fn ansatz_at_the_reference_specialization() {
    let p = seeded_params(GroupId::D5, 0);
    let expected: [Rational; 6] = [rat(1, 7), rat(2, 7), rat(1, 14), rat(1, 14), rat(1, 7), rat(1, 7)];
    assert_eq!(p, expected);
    let w = TWindow::default();
    let names = chart_names(GroupId::D5);
    let space = solve_on_charts(GroupId::D5, &p, w, &names, &budget()).unwrap().unwrap();
    let h = catalog_coefficients(GroupId::D5, &p, w).unwrap();
    assert!(space.contains(&h));
    let dirs = space.t_only_directions();
    assert_eq!(dirs.len(), w.len());
    assert!(dirs.iter().all(|d| space.admits_direction(d)));
    let dim = space.dimension().unwrap();
    assert!(dim >= 2);
    assert!(space.round_trip().unwrap());
    let again = solve_on_charts(GroupId::D5, &p, w, &names, &budget()).unwrap().unwrap();
    assert_eq!(again.dimension(), Some(dim));
}

#[test]
fn zero_hamiltonian_on_t_free_charts() {
    for g in GroupId::SIX_DIM {
        let names = t_free_charts(g);
        assert!(!names.is_empty() && names.len() < chart_names(g).len(), "{g}");
        let p = seeded_params(g, 1);
        let space = solve_on_charts(g, &p, TWindow::default(), &names, &budget()).unwrap().unwrap();
        assert!(space.homogeneous, "{g}");
        assert!(space.contains(&vec![int(0); space.basis.len()]), "{g}");
        let h = catalog_coefficients(g, &p, TWindow::default()).unwrap();
        assert!(space.contains(&h), "{g}");
    }
}

#[test]
fn ansatz_dimension_is_stable_across_seeds() {
    for g in GroupId::SIX_DIM {
        let names = chart_names(g);
        let dims: Vec<_> = (0..3)
            .map(|s| {
                let p = seeded_params(g, s);
                assert!(system(g.system()).constraint.is_satisfied(&p));
                solve_on_charts(g, &p, TWindow::default(), &names, &budget()).unwrap().unwrap().dimension()
            })
            .collect();
        assert!(dims.iter().all(|d| d.is_some() && *d == dims[0]), "{g}: {dims:?}");
    }
}

#[test]
fn tiny_budget_is_indeterminate() {
    let b = Budget { monomial_cap: 3, ..Budget::default() };
    let rep = check_involutions_and_braid(GroupId::D5, &b);
    assert!(rep.records.iter().any(|r| r.status == Status::Indeterminate));
    assert!(rep.records.iter().all(|r| r.status != Status::Fail));
}
