use foliate::canonical::UkDecomposition;
use foliate::corpus;
use foliate::exterior::{clifford_act, Form, GVector};
use foliate::generalized::GeneralizedStructure;
use foliate::homology::theorem_square;
use foliate::lie::LieModel;
use foliate::scalar::Scalar;
use foliate::symplectic::{symplectic_battery, SymplecticModel};
use proptest::prelude::*;

fn small() -> impl Strategy<Value = Scalar> {
    (-3i64..=3, 1i64..=2).prop_map(|(n, d)| Scalar::ratio(n, d))
}

fn nonzero() -> impl Strategy<Value = Scalar> {
    prop_oneof![
        small().prop_filter("nonzero", |c| !c.is_zero()),
        small().prop_map(|c| &Scalar::s() + &c),
    ]
}

fn form(n: usize) -> impl Strategy<Value = Form> {
    prop::collection::vec(small(), 1 << n).prop_map(move |c| Form::from_vector(n, &c))
}

fn two_form(n: usize) -> impl Strategy<Value = Form> {
    let pairs = n * (n - 1) / 2;
    prop::collection::vec(small(), pairs).prop_map(move |c| {
        let mut f = Form::zero(n);
        let mut it = c.into_iter();
        for i in 0..n {
            for j in i + 1..n {
                f = f.add(&Form::basis(n, &[i, j]).scale(&it.next().unwrap())).unwrap();
            }
        }
        f
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn star_is_an_involution(a in form(4), which in 0usize..2) {
        let name = ["abelian-torus-4", "kodaira-thurston"][which];
        let m = corpus::load(name).unwrap();
        let lo = m.structure.as_ref().unwrap().symplectic.as_ref().unwrap().operators();
        prop_assert_eq!(lo.apply_star(&lo.apply_star(&a)), a);
    }

    #[test]
    fn random_symplectic_forms_on_the_abelian_model(w in two_form(4)) {
        let h = LieModel::abelian(4);
        prop_assume!(!w.wedge(&w).unwrap().is_zero());
        let sm = SymplecticModel::new(h, w).unwrap();
        let lo = sm.operators();
        prop_assert!(lo.sl2_holds());
        let b = symplectic_battery(&sm).unwrap();
        prop_assert!(b.verdict() && b.d_lambda_is_dj);
        prop_assert_eq!(sm.structure().unwrap().structure_type(), 0);
    }

    #[test]
    fn verdicts_ignore_rescaling_omega(c in nonzero()) {
        let m = corpus::load("kodaira-thurston").unwrap();
        let sm = m.structure.as_ref().unwrap().symplectic.as_ref().unwrap();
        let scaled = SymplecticModel::new(sm.base().clone(), sm.omega().scale(&c)).unwrap();
        let a = symplectic_battery(sm).unwrap();
        let b = symplectic_battery(&scaled).unwrap();
        prop_assert_eq!(a.verdicts, b.verdicts);
        let ranks = |x: &foliate::symplectic::SymplecticBattery| x.lefschetz.iter().map(|l| l.rank).collect::<Vec<_>>();
        prop_assert_eq!(ranks(&a), ranks(&b));
    }

    #[test]
    fn b_fields_preserve_type_and_invert(b in two_form(4)) {
        let m = corpus::load("abelian-torus-4").unwrap();
        let gs = &m.structure.as_ref().unwrap().gs;
        let moved = gs.b_field_transform(&b).unwrap();
        prop_assert_eq!(moved.structure_type(), 0);
        let back = moved.b_field_transform(&b.neg()).unwrap();
        prop_assert_eq!(back.matrix(), gs.matrix());
        let phi = moved.spinor().unwrap();
        for v in moved.eigenbundle().basis() {
            prop_assert!(clifford_act(&GVector::from_coords(v), &phi).unwrap().is_zero());
        }
    }

    #[test]
    fn square_agreement_under_b_fields(b in two_form(4)) {
        // A B-field moves the pieces but not the verdicts.
        let m = corpus::load("kodaira-thurston").unwrap();
        let h = m.h.as_ref().unwrap();
        prop_assume!(h.d(&b).unwrap().is_zero());
        let gs: GeneralizedStructure = m.structure.as_ref().unwrap().gs.b_field_transform(&b).unwrap();
        let dec = UkDecomposition::new(&gs).unwrap();
        let ops = dec.split(&h.d_matrix()).unwrap();
        prop_assert!(ops.identities().all_hold());
        let sq = theorem_square(&dec, &ops).unwrap();
        prop_assert!(sq.agree());
        prop_assert!(!sq.verdict());
    }
}
