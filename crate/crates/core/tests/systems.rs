use painleve_core::algebra::{
    int, parse_fraction, parse_polynomial, rat, Fraction, LinearForm, Monomial, Polynomial, Rational, Var, VarSet,
    PHASE, VAR_COUNT,
};
use painleve_core::report::Status;
use painleve_core::systems::{
    check_catalog_consistency, compare_field, displayed_ode, get_system, h1_first_integral,
    hamiltonian_vector_field, scalar_piii_reduction, scalar_sides_at, system, HamiltonSystem, SystemName,
};
use proptest::prelude::*;

fn eval(poly: &Polynomial, pt: &[Rational; VAR_COUNT]) -> Rational {
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

/// Five-point central stencil with unit spacing: exact for polynomials of
/// degree at most 4 in `v`.
fn stencil(poly: &Polynomial, pt: &[Rational; VAR_COUNT], v: Var) -> Rational {
    let at = |k: i64| {
        let mut q = pt.clone();
        q[v.index()] += int(k);
        eval(poly, &q)
    };
    (at(-2) - at(-1) * int(8) + at(1) * int(8) - at(2)) / int(12)
}

fn sample_point(seed: i64) -> [Rational; VAR_COUNT] {
    core::array::from_fn(|i| rat(((i as i64 + 3) * (seed + 5)) % 11 - 5, 1 + (i as i64 + seed) % 4))
}

#[test]
fn hiii_d7_hamiltonian_text() {
    let s = system(SystemName::HIIID7);
    assert_eq!(s.hamiltonian, parse_fraction("(q^2*p^2 + a1*q*p + q + t*p)/t").unwrap());
    assert_eq!(s.pairs, vec![(Var::Q, Var::P)]);
}

#[test]
fn normalizations() {
    let d5 = system(SystemName::D5);
    assert_eq!(d5.constraint, LinearForm::from_integers([1, 1, 2, 2, 1, 1], int(1)));
    let d62 = system(SystemName::D62);
    assert_eq!(d62.constraint, LinearForm::from_integers([1, 1, 1, 1, 1, 1], rat(1, 2)));
    let b5a = system(SystemName::B5a);
    assert_eq!(b5a.constraint, LinearForm::from_integers([2, 2, 2, 2, 1, 1], int(1)));
    let b5b = system(SystemName::B5b);
    assert_eq!(b5b.constraint, LinearForm::from_integers([1, 1, 2, 2, 2, 2], int(1)));
}

#[test]
fn lookup_by_name() {
    assert_eq!(get_system("B5b").unwrap().name, SystemName::B5b);
    assert!(get_system("B7").is_err());
}

#[test]
fn six_dimensional_hamiltonians_are_quartic_over_t() {
    for n in SystemName::SIX_DIM {
        let s = system(n);
        let th = s.hamiltonian.numer();
        assert_eq!(*s.hamiltonian.denom(), Polynomial::var(Var::T), "{n}");
        assert_eq!(th.degree_in_set(VarSet::PHASE), 4, "{n}");
        assert_eq!(s.pairs, vec![(Var::X, Var::Y), (Var::Z, Var::W), (Var::Q, Var::P)]);
    }
}

#[test]
fn h1_integral_is_t_times_h1() {
    let h1 = system(SystemName::H1);
    let th = h1.hamiltonian.numer().clone();
    assert!((&th - &h1_first_integral()).is_zero());
    // Conserved along the flow: dI/dt = sum dI/dv F_v + dI/dt.
    let field = hamiltonian_vector_field(&h1);
    let i = Fraction::from_poly(h1_first_integral());
    let mut total = i.derivative(Var::T);
    for v in [Var::Q, Var::P] {
        total = &total + &(&i.derivative(v) * &field[v]);
    }
    assert!(total.is_zero());
}

/// Hamilton's equations from the catalog agree with the stencil oracle on
/// `t * H` at scattered rational points.
#[test]
fn field_matches_stencil_oracle() {
    for n in SystemName::ALL {
        let s = system(n);
        let th = s.hamiltonian.numer().clone();
        let field = hamiltonian_vector_field(&s);
        for seed in 0..6 {
            let pt = sample_point(seed);
            let t = &pt[Var::T.index()];
            for (c, m) in &s.pairs {
                let dc = field[*c].evaluate(&pt).unwrap();
                let dm = field[*m].evaluate(&pt).unwrap();
                assert_eq!(&dc * t, stencil(&th, &pt, *m), "{n} d{c}");
                assert_eq!(-(&dm * t), stencil(&th, &pt, *c), "{n} d{m}");
            }
            for v in PHASE {
                if !s.phase_vars().contains(&v) {
                    assert!(field[v].is_zero());
                }
            }
        }
    }
}

#[test]
fn catalog_consistency_passes() {
    let rep = check_catalog_consistency();
    assert_eq!(rep.records.len(), 24);
    for r in &rep.records {
        assert_eq!(r.status, Status::Pass, "{}", r.check_id);
        assert_eq!(r.witness, "0");
    }
}

#[test]
fn corrupted_display_fails_with_witness() {
    let s = system(SystemName::D62);
    let mut ode = displayed_ode(SystemName::D62).unwrap();
    ode[Var::W.index()] = &ode[Var::W.index()] + &parse_fraction("a2/t").unwrap();
    let recs = compare_field(&s, &ode);
    let failed: Vec<_> = recs.iter().filter(|r| r.status == Status::Fail).collect();
    assert_eq!(failed.len(), 1);
    assert_eq!(failed[0].check_id, "catalog.d62.dw");
    assert_eq!(parse_fraction(&failed[0].witness).unwrap(), parse_fraction("-a2/t").unwrap());
}

#[test]
fn constant_hamiltonian_has_zero_field() {
    let s = HamiltonSystem::with_hamiltonian(SystemName::D5, parse_fraction("a0*a1 + 7/t").unwrap());
    let f = hamiltonian_vector_field(&s);
    assert!(f.components.iter().all(Fraction::is_zero));
}

#[test]
fn scalar_reduction_constants() {
    let (rep, consts) = scalar_piii_reduction();
    assert!(rep.all_passed(), "{:?}", rep.records);
    let c = consts.unwrap();
    assert_eq!(c.a, Polynomial::constant(int(-8)));
    assert_eq!(c.b, parse_polynomial("4*(1 - a1)").unwrap());
    assert!(c.c.is_zero());
    assert_eq!(c.d, Polynomial::constant(int(-4)));
}

#[test]
fn scalar_spot_check() {
    for p in [rat(7, 3), int(-2), rat(1, 5)] {
        let (lhs, rhs) = scalar_sides_at(&rat(1, 3), &int(2), &int(5), &p).unwrap();
        assert_eq!(lhs, rhs, "p = {p}");
    }
    // A different `b` would break the equality.
    let (lhs, rhs) = scalar_sides_at(&rat(1, 3), &int(2), &int(5), &int(1)).unwrap();
    assert_ne!(lhs + int(1), rhs);
}

fn qp_poly() -> impl Strategy<Value = Polynomial> {
    let term = (0u8..4, 0u8..4, 0u8..2, -4i64..=4);
    prop::collection::vec(term, 0..6).prop_map(|ts| {
        let mut acc = Polynomial::zero();
        for (a, b, c, k) in ts {
            let mut e = [0u8; VAR_COUNT];
            e[Var::Q.index()] = a;
            e[Var::P.index()] = b;
            e[Var::A2.index()] = c;
            acc = &acc + &Polynomial::term(Monomial::from_exponents(&e), int(k));
        }
        acc
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn field_is_linear_in_the_hamiltonian(g in qp_poly(), h in qp_poly(), c in -5i64..=5) {
        let t = Polynomial::var(Var::T);
        let gf = Fraction::new(g.clone(), t.clone()).unwrap();
        let hf = Fraction::new(h.clone(), t.clone()).unwrap();
        let k = Fraction::constant(int(c));
        let combo = &gf + &(&k * &hf);
        let field = |e: Fraction| hamiltonian_vector_field(&HamiltonSystem::with_hamiltonian(SystemName::H2, e));
        let lhs = field(combo);
        let fg = field(gf);
        let fh = field(hf);
        for i in 0..6 {
            prop_assert_eq!(&lhs.components[i], &(&fg.components[i] + &(&k * &fh.components[i])));
        }
    }
}
