//! The transcribed representations and the character list.

use hecke_b2::analysis::{
    burnside_irreducible, composition_factors, same_semisimplification, BaseRegime,
};
use hecke_b2::catalog::{check_u, check_v, Catalog, Entry};
use hecke_b2::module::{is_calibrated, principal_series};
use hecke_b2::weyl::Simple;
use hecke_b2::{Error, QCatalog, QCharacter, QParameters, Q};

fn n(k: i64) -> Q {
    Q::from_int(k)
}

fn frac(a: i64, b: i64) -> Q {
    Q::from_parts(a, b, 0, 1)
}

fn catalog(regime: BaseRegime) -> QCatalog {
    let ps = match regime {
        BaseRegime::Generic => QParameters::new(n(5), n(3)),
        BaseRegime::PEqQ => QParameters::new(n(3), n(3)),
        BaseRegime::PEqQ2 => QParameters::new(n(9), n(3)),
        BaseRegime::P2EqNegQ2 => QParameters::new(Q::from_parts(0, 1, 3, 1), n(3)),
    }
    .unwrap();
    Catalog::new(&ps, regime, n(2), n(2)).unwrap()
}

const REGIMES: [BaseRegime; 4] = [
    BaseRegime::Generic,
    BaseRegime::PEqQ,
    BaseRegime::PEqQ2,
    BaseRegime::P2EqNegQ2,
];

#[test]
fn first_one_dimensional_rep() {
    let m = catalog(BaseRegime::Generic).module("onedim_1").unwrap();
    let vals = [m.x1(), m.x2(), m.t1(), m.t2()].map(|x| x.get(0, 0).clone());
    assert_eq!(vals, [n(45), n(5), n(3), n(5)]);
}

#[test]
fn family_rep_f() {
    let rho = catalog(BaseRegime::Generic)
        .build("rho_1^f")
        .unwrap()
        .rep()
        .unwrap();
    assert_eq!(rho.subalgebra(), Simple::S2);
    assert_eq!((rho.x1(), rho.x2(), rho.t()), (&n(10), &n(5), &n(5)));
}

#[test]
fn character_values() {
    let cat = catalog(BaseRegime::Generic);
    assert_eq!(
        cat.character("chi_b").unwrap().values(),
        (frac(9, 5), frac(1, 5))
    );
    assert_eq!(
        cat.character("chi_d2").unwrap().values(),
        (n(3), frac(1, 3))
    );
    assert_eq!(cat.character("chi_g").unwrap().values(), (n(18), n(2)));
    let names: Vec<String> = cat
        .characters()
        .unwrap()
        .into_iter()
        .map(|(s, _)| s)
        .collect();
    assert_eq!(names.len(), 18);
    assert!(!names.contains(&"-chi_g".to_string()));
    assert!(!names.contains(&"-chi_c".to_string()));
    assert!(matches!(
        cat.character("-chi_g"),
        Err(Error::UnknownLabel(_))
    ));
}

#[test]
fn d2_branches_when_p_squared_is_minus_q_squared() {
    let cat = catalog(BaseRegime::P2EqNegQ2);
    let ps = cat.params().clone();
    let chi = cat.character("chi_d2").unwrap();
    assert_eq!(chi.values(), (n(3), frac(1, 3)));
    let pi = ps.p().clone() * &Q::i();
    let minus = QCharacter::new(-pi.clone(), -pi.clone(), &ps).unwrap();
    let plus = QCharacter::new(pi.clone(), pi, &ps).unwrap();
    // Only one sign of the printed ±p√−1 lies in the W-orbit of (q, q⁻¹);
    // the other is the orbit of the negated character.
    assert!(chi.orbit().contains(&minus));
    assert!(!chi.orbit().contains(&plus));
    assert!(chi.negate().orbit().contains(&plus));
    let m = principal_series(&chi).unwrap();
    assert!(same_semisimplification(&m, &[&principal_series(&minus).unwrap()]).unwrap());
    assert!(!same_semisimplification(&m, &[&principal_series(&plus).unwrap()]).unwrap());
}

#[test]
fn family_parameter_exclusions() {
    let ps = QParameters::new(n(5), n(3)).unwrap();
    for bad in [n(1), n(-1), frac(1, 5), frac(-1, 25), n(9), frac(9, 25)] {
        assert!(
            matches!(check_v(&ps, &bad), Err(Error::ExcludedFamilyParameter(_))),
            "v = {bad}"
        );
    }
    for bad in [
        n(5),
        frac(-1, 5),
        frac(1, 9),
        frac(-1, 3),
        frac(5, 9),
        frac(1, 45),
    ] {
        assert!(
            matches!(check_u(&ps, &bad), Err(Error::ExcludedFamilyParameter(_))),
            "u = {bad}"
        );
    }
    assert!(check_v(&ps, &n(2)).is_ok() && check_u(&ps, &n(2)).is_ok());
    assert!(Catalog::new(&ps, BaseRegime::Generic, n(1), n(2)).is_err());
}

#[test]
fn every_entry_satisfies_the_relations_in_every_regime() {
    for regime in REGIMES {
        let cat = catalog(regime);
        for label in cat.labels() {
            // Modules are relation-checked on construction; reps on theirs.
            match cat.build(&label) {
                Ok(Entry::Module(m)) => assert!(m.relation_report().passed()),
                Ok(Entry::Rep(_)) => {}
                Err(e) => panic!("{regime:?} {label}: {e}"),
            }
        }
    }
}

#[test]
fn u_b_is_absent_when_p_squared_is_minus_q_squared() {
    let cat = catalog(BaseRegime::P2EqNegQ2);
    assert!(!cat.labels().iter().any(|l| l.contains("_b")));
    assert!(cat.build("U_b^1").is_err());
}

#[test]
fn irreducible_entries_are_irreducible() {
    for regime in REGIMES {
        let cat = catalog(regime);
        for m in cat.irreducibles().unwrap() {
            assert!(burnside_irreducible(&m).0, "{regime:?} {}", m.label());
        }
    }
}

#[test]
fn u_b_calibration_depends_on_the_regime() {
    assert!(is_calibrated(&catalog(BaseRegime::Generic).module("U_b^1").unwrap()).unwrap());
    for regime in [BaseRegime::PEqQ, BaseRegime::PEqQ2] {
        for i in 1..=2 {
            let m = catalog(regime).module(&format!("U_b^{i}")).unwrap();
            assert!(!is_calibrated(&m).unwrap(), "{regime:?} U_b^{i}");
            assert!(burnside_irreducible(&m).0);
        }
    }
}

#[test]
fn u_c_splits_into_listed_one_dimensional_reps() {
    let cat = catalog(BaseRegime::P2EqNegQ2);
    let ones: Vec<_> = (1..=8)
        .map(|k| cat.module(&format!("onedim_{k}")).unwrap())
        .collect();
    for (label, expected) in [("U_c^3", [7, 4]), ("U_c^4", [3, 8])] {
        let m = cat.module(label).unwrap();
        assert!(!burnside_irreducible(&m).0);
        let factors = composition_factors(&m).unwrap();
        assert_eq!(factors.len(), 2);
        let parts = [&ones[expected[0] - 1], &ones[expected[1] - 1]];
        assert!(same_semisimplification(&m, &parts).unwrap(), "{label}");
    }
}

#[test]
fn eight_distinct_one_dimensional_reps() {
    for regime in REGIMES {
        let cat = catalog(regime);
        let mut seen = Vec::new();
        for k in 1..=8 {
            let m = cat.module(&format!("onedim_{k}")).unwrap();
            let vals = [m.x1(), m.x2(), m.t1(), m.t2()].map(|x| x.get(0, 0).clone());
            assert!(!seen.contains(&vals), "{regime:?} onedim_{k}");
            seen.push(vals);
        }
    }
}

#[test]
fn unknown_labels_are_rejected() {
    let cat = catalog(BaseRegime::Generic);
    for bad in ["onedim_9", "U_z^1", "rho_3^a", "Ind(rho_1^zz)", "nonsense"] {
        assert!(
            matches!(
                cat.build(bad),
                Err(Error::UnknownLabel(_)) | Err(Error::IncompatibleRep(_))
            ),
            "{bad}"
        );
    }
}
