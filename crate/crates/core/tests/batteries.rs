use foliate::canonical::UkDecomposition;
use foliate::corpus;
use foliate::exterior::Form;
use foliate::homology::{theorem_square, SquareReport};
use foliate::model::Model;
use foliate::scalar::Scalar;
use foliate::symplectic::symplectic_battery;

fn square(m: &Model) -> (UkDecomposition, SquareReport) {
    let s = m.structure.as_ref().unwrap();
    let dec = UkDecomposition::new(&s.gs).unwrap();
    let ops = dec.split(&m.h.as_ref().unwrap().d_matrix()).unwrap();
    assert!(ops.identities().all_hold(), "{}", m.name());
    let sq = theorem_square(&dec, &ops).unwrap();
    (dec, sq)
}

const HOLDS: &[&str] = &[
    "abelian-torus-2",
    "abelian-torus-4",
    "abelian-torus-6",
    "abelian-torus-2-bfield",
    "abelian-complex-2",
    "heisenberg-center",
];
const FAILS: &[&str] = &["kodaira-thurston", "kodaira-thurston-6", "complex-heisenberg", "wade-example"];

#[test]
fn four_verdicts_agree_on_every_structured_model() {
    for name in HOLDS.iter().chain(FAILS) {
        let m = corpus::load(name).unwrap();
        let (dec, sq) = square(&m);
        assert_eq!(dec.dims().iter().sum::<usize>(), 1 << (2 * dec.q()), "{name}");
        assert!(sq.agree(), "{name}: {:?}", sq.verdicts);
        assert!(sq.lemma_symmetric, "{name}");
        assert_eq!(sq.verdict(), HOLDS.contains(name), "{name}");
    }
}

#[test]
fn degeneration_page() {
    for name in HOLDS.iter().chain(FAILS) {
        let (_, sq) = square(&corpus::load(name).unwrap());
        let late = *name == "complex-heisenberg";
        assert_eq!(sq.spectral.degenerates_at > 1, late, "{name}");
        assert_eq!(sq.spectral.infinity_total(), sq.spectral.page_total(sq.spectral.degenerates_at));
    }
    let (_, sq) = square(&corpus::load("complex-heisenberg").unwrap());
    assert_eq!(sq.spectral.pages[0], vec![1, 5, 11, 14, 11, 5, 1]);
}

#[test]
fn kodaira_thurston_witness_is_stable() {
    let m = corpus::load("kodaira-thurston").unwrap();
    let (_, a) = square(&m);
    let (_, b) = square(&m);
    let w = a.ddj.witness.clone().unwrap();
    assert_eq!(w, b.ddj.witness.unwrap());
    assert_eq!(Form::from_vector(4, &w).to_string(), "x1*x2");
}

#[test]
fn wade_decomposition_misses_classes() {
    let (_, sq) = square(&corpus::load("wade-example").unwrap());
    assert!(!sq.decomposition.holds);
    assert!(!sq.verdict());
}

#[test]
fn symplectic_batteries() {
    let expected: &[(&str, bool, &[usize])] = &[
        ("abelian-torus-2", true, &[1]),
        ("abelian-torus-4", true, &[4, 1]),
        ("abelian-torus-6", true, &[15, 6, 1]),
        ("heisenberg-center", true, &[1]),
        ("kodaira-thurston", false, &[2, 1]),
        ("kodaira-thurston-6", false, &[9, 4, 1]),
    ];
    for (name, holds, ranks) in expected {
        let m = corpus::load(name).unwrap();
        let sm = m.structure.as_ref().unwrap().symplectic.as_ref().unwrap();
        let b = symplectic_battery(sm).unwrap();
        assert!(b.d_lambda_is_dj, "{name}");
        assert_eq!(b.verdicts, [*holds; 4], "{name}");
        assert_eq!(b.spectral.degenerates_at, 1, "{name}");
        let got: Vec<usize> = b.lefschetz.iter().map(|l| l.rank).collect();
        assert_eq!(got, ranks.to_vec(), "{name}");
        if *holds {
            assert!(b.lefschetz.iter().all(|l| l.injective && l.surjective), "{name}");
        }
        assert!(!b.verdict() || b.lefschetz_surjective(), "{name}");
        let (_, sq) = square(&m);
        assert_eq!(sq.verdict(), b.verdict(), "{name}");
    }
}

#[test]
fn kodaira_thurston_lefschetz_and_lambda() {
    let m = corpus::load("kodaira-thurston").unwrap();
    let sm = m.structure.as_ref().unwrap().symplectic.as_ref().unwrap();
    let b = symplectic_battery(sm).unwrap();
    let l1 = &b.lefschetz[0];
    assert_eq!((l1.source, l1.target, l1.rank), (3, 3, 2));
    assert!(!l1.surjective);

    let lo = sm.operators();
    let dec = UkDecomposition::new(&sm.structure().unwrap()).unwrap();
    let ops = dec.split(&lo.d).unwrap();
    let a = Form::basis(4, &[1, 2]).to_vector();
    assert_eq!(lo.d_lambda.apply(&a), ops.d_j.apply(&a));
    lo.check_transport(&ops).unwrap();
    for k in -2..=2 {
        assert_eq!(*dec.piece(k).unwrap(), lo.uk(k));
    }
}

#[test]
fn lambda_of_omega_is_q() {
    for (name, q) in [("abelian-torus-2", 1), ("abelian-torus-4", 2), ("abelian-torus-6", 3)] {
        let m = corpus::load(name).unwrap();
        let sm = m.structure.as_ref().unwrap().symplectic.as_ref().unwrap();
        let lo = sm.operators();
        let got = Form::from_vector(sm.base().dim(), &lo.lambda.apply(&sm.omega().to_vector()));
        assert_eq!(got, Form::constant(sm.base().dim(), Scalar::from_int(q)), "{name}");
        assert!(lo.sl2_holds());
    }
}
