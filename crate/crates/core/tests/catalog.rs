use skewpbw::catalog::{
    build, catalog, classify_cancellation, entry, expected_facts, lemma_oracle, lemma_oracles, list_algebras, Classification, FactKind, FieldMode,
    Params,
};
use skewpbw::center::{associated_graded, center_basis, is_central, is_quasi_commutative};
use skewpbw::cli::{parse_algebra_file, unparse};
use skewpbw::coeff::Field;
use skewpbw::engine::Presentation;
use skewpbw::Error;

fn same(p: &Presentation, a: &str, b: &str) {
    assert_eq!(p.parse(a).unwrap(), p.parse(b).unwrap(), "{a} != {b}");
}

#[test]
fn every_entry_builds_and_validates() {
    for e in catalog() {
        let p = e.build_default().unwrap_or_else(|err| panic!("{}: {err}", e.id));
        assert!(p.validate().is_ok(), "{}", e.id);
        let gr = associated_graded(&p);
        assert!(gr.validate().is_ok() && is_quasi_commutative(&gr), "{}", e.id);
        for fact in e.facts() {
            e.build(&e.fact_params(&fact)).unwrap_or_else(|err| panic!("{} / {}: {err}", e.id, fact.label));
        }
    }
}

#[test]
fn files_round_trip_for_every_entry() {
    for e in catalog() {
        for fact in e.facts().iter().map(Some).chain([None]) {
            let params = fact.map_or_else(|| e.default_params(), |f| e.fact_params(f));
            let p = e.build(&params).unwrap();
            let text = unparse(&p);
            assert_eq!(parse_algebra_file(&text).unwrap(), p, "{}\n{text}", e.id);
        }
    }
}

#[test]
fn listing_signatures() {
    let list = list_algebras();
    let sig = |id: &str| list.iter().find(|(i, _, _)| *i == id).map(|(_, s, _)| s.clone()).unwrap();
    assert_eq!(sig("dispin"), "dispin()");
    assert_eq!(sig("two_var_generic").matches('=').count(), 4);
    let diffusion = sig("diffusion");
    assert!(diffusion.contains("n=") && diffusion.contains("c*="), "{diffusion}");
    for id in [
        "weyl", "shift", "mixed_dh", "qdiff_dqh", "dilation", "qdifferential", "difference", "discrete_linear", "additive_weyl",
        "multiparam_quantum_space", "quantum_plane", "jordan_plane", "usl2", "uso3", "solvable_lie3", "uprime_so3", "dispin", "woronowicz",
        "algebra_u", "qheisenberg", "mq2", "qsymplectic", "maltsiniotis_weyl", "multiparam_weyl_sym", "two_var_generic", "quadratic_a1",
        "quadratic_a2", "quadratic_a3", "conformal", "witten_7param", "diffusion",
    ] {
        assert!(list.iter().any(|(i, _, _)| *i == id), "missing {id}");
    }
    let ids: Vec<_> = list.iter().map(|(i, _, _)| *i).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    sorted.dedup();
    assert_eq!(sorted.len(), ids.len());
}

#[test]
fn defining_relations() {
    let weyl = build("weyl", &Params::new(Field::Rational).with("n", "1")).unwrap();
    assert_eq!(weyl.names(), ["t", "x"]);
    same(&weyl, "x*t", "t*x + 1");

    let qp = build("quantum_plane", &Params::new(Field::RationalFunction)).unwrap();
    same(&qp, "y*x", "p*x*y");

    let conf = build("conformal", &Params::new(Field::Rational).with("a", "2").with("b", "1").with("c", "3")).unwrap();
    assert_eq!(conf.names(), ["x", "z", "y"]);
    same(&conf, "y*x", "3*x*y + z^2 + z");
    same(&conf, "z*x", "1/2*x*z - 1/2*x");
    same(&conf, "z*y", "2*y*z + y");

    let dispin = entry("dispin").unwrap().build_default().unwrap();
    same(&dispin, "y*x", "x*y - x");
    same(&dispin, "z*x", "-x*z + y");
    same(&dispin, "z*y", "y*z - z");

    let a2 = entry("quadratic_a2").unwrap().build_default().unwrap();
    assert_eq!(a2.weights(), [1, 4, 2]);

    let mq2 = entry("mq2").unwrap().build_default().unwrap();
    assert_eq!(mq2.names(), ["u", "v", "x", "y"]);
}

#[test]
fn parameter_errors() {
    assert!(matches!(build("nope", &Params::new(Field::Rational)), Err(Error::UnknownAlgebra(_))));
    assert!(matches!(build("quantum_plane", &Params::new(Field::RationalFunction).with("q", "0")), Err(Error::BadParameter(_))));
    assert!(matches!(build("conformal", &Params::new(Field::Rational).with("a", "0")), Err(Error::BadParameter(_))));
    assert!(matches!(build("weyl", &Params::new(Field::Rational).with("zz", "1")), Err(Error::BadParameter(_))));
}

#[test]
fn expected_fact_examples() {
    let dispin = expected_facts("dispin", FieldMode::Generic).unwrap();
    assert!(dispin.iter().any(|f| f.kind == FactKind::CentralElement("4*x^2*z^2 - y^2 - 2*x*z - y".into())));

    let heis = expected_facts("qheisenberg", FieldMode::Generic).unwrap();
    assert!(heis.iter().any(|f| f.kind == FactKind::CentralElement("(p^2 - 1)*x*y*z - y^2".into())));

    let wor = expected_facts("woronowicz", FieldMode::Generic).unwrap();
    assert!(wor.iter().any(|f| f.kind == FactKind::TrivialUpTo(5)));

    assert!(matches!(expected_facts("nope", FieldMode::Generic), Err(Error::UnknownAlgebra(_))));
}

#[test]
fn central_element_facts_hold() {
    for e in catalog() {
        for fact in e.facts() {
            if let FactKind::CentralElement(expr) = &fact.kind {
                let p = e.build(&e.fact_params(&fact)).unwrap();
                let f = p.parse(expr).unwrap();
                assert!(is_central(&p, &f).unwrap().is_central(), "{} / {}", e.id, fact.label);
            }
        }
    }
}

#[test]
fn cancellation_examples() {
    let weyl = entry("weyl").unwrap().build_default().unwrap();
    let c = classify_cancellation("weyl", &center_basis(&weyl, 4).unwrap(), Field::Rational).unwrap();
    assert_eq!(c, Classification::UniversallyCancellative { degree: 4 });
    assert_eq!(c.describe(), "universally cancellative (trivial center; corroborated to degree 4)");

    let dispin = entry("dispin").unwrap().build_default().unwrap();
    let c = classify_cancellation("dispin", &center_basis(&dispin, 4).unwrap(), Field::Rational).unwrap();
    assert_eq!(c, Classification::NotClassified);

    let field = Field::Cyclotomic(3);
    let qp = build("quantum_plane", &Params::new(field)).unwrap();
    let c = classify_cancellation("quantum_plane", &center_basis(&qp, 3).unwrap(), field).unwrap();
    assert_eq!(c, Classification::NotClassifiedRootOfUnity);
}

#[test]
fn lemma_oracle_examples() {
    let (left, right) = lemma_oracle("dispin", "power_rules", 6, &[3]).unwrap();
    assert_eq!(left, right);
    let p = entry("dispin").unwrap().build_default().unwrap();
    assert_eq!(right, p.parse("y*z^3 - 3*z^3").unwrap());

    let (left, right) = lemma_oracle("two_var_generic", "power_rules_special", 1, &[4]).unwrap();
    assert_eq!(left, right);

    assert!(matches!(lemma_oracle("dispin", "power_rules", 99, &[1]), Err(Error::UnknownLemma(_))));
    assert!(matches!(lemma_oracle("dispin", "power_rules", 6, &[0]), Err(Error::BadArgument(_))));
}

#[test]
fn lemma_oracles_agree_with_the_engine() {
    for o in lemma_oracles() {
        for args in o.sweep(8) {
            let (left, right) = o.evaluate(&args).unwrap();
            assert_eq!(left, right, "{} at {args:?}", o.id());
        }
    }
}
