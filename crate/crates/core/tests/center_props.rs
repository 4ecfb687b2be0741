use std::sync::OnceLock;

use proptest::prelude::*;
use skewpbw::catalog::{build, Params};
use skewpbw::center::{center_basis, center_basis_with, echelon, gr_compatible, in_span, is_central, nullspace, CenterBasis, CenterOptions, ExactMatrix};
use skewpbw::coeff::Field;
use skewpbw::engine::{Element, Presentation};
use skewpbw::exec::Exec;

type Overrides = &'static [(&'static str, &'static str)];

#[derive(Debug)]
struct Case {
    pres: Presentation,
    degree: u32,
    center: CenterBasis,
}

fn cases() -> &'static [Case] {
    static CASES: OnceLock<Vec<Case>> = OnceLock::new();
    CASES.get_or_init(|| {
        let list: [(&str, Field, Overrides, u32); 8] = [
            ("usl2", Field::Rational, &[], 3),
            ("uso3", Field::Rational, &[], 2),
            ("dispin", Field::Rational, &[], 4),
            ("quantum_plane", Field::Cyclotomic(3), &[], 4),
            ("two_var_generic", Field::Cyclotomic(2), &[("q2", "0"), ("q3", "0"), ("q4", "1")], 4),
            ("mq2", Field::Cyclotomic(2), &[], 2),
            ("diffusion", Field::Rational, &[], 2),
            ("solvable_lie3", Field::Rational, &[("q2", "-1")], 3),
        ];
        list.iter()
            .map(|(id, field, kv, d)| {
                let mut params = Params::new(*field);
                for (k, v) in kv.iter() {
                    params.set(k, v);
                }
                let pres = build(id, &params).unwrap();
                let center = center_basis(&pres, *d).unwrap();
                Case { pres, degree: *d, center }
            })
            .collect()
    })
}

fn case() -> impl Strategy<Value = &'static Case> {
    (0..cases().len()).prop_map(|k| &cases()[k])
}

#[test]
fn basis_is_central_echelon_and_starts_with_one() {
    for c in cases() {
        let p = &c.pres;
        assert_eq!(c.center.basis[0], p.one());
        assert_eq!(echelon(&c.center.basis), c.center.basis);
        for b in &c.center.basis {
            assert!(is_central(p, b).unwrap().is_central(), "{}", p.show(b));
            assert!(gr_compatible(p, b).unwrap(), "{}", p.show(b));
        }
    }
}

#[test]
fn bases_grow_with_the_degree_bound() {
    for c in cases() {
        let bigger = center_basis(&c.pres, c.degree + 1).unwrap();
        for b in &c.center.basis {
            assert!(in_span(&bigger.basis, b));
        }
        assert!(bigger.basis.len() >= c.center.basis.len());
    }
}

#[test]
fn execution_mode_does_not_change_the_result() {
    for c in cases() {
        let seq = CenterOptions { exec: Exec::Sequential, ..CenterOptions::default() };
        let par = CenterOptions { exec: Exec::Parallel, ..CenterOptions::default() };
        let a = center_basis_with(&c.pres, c.degree, &seq).unwrap();
        let b = center_basis_with(&c.pres, c.degree, &par).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, c.center);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn centrality_matches_span_membership(
        c in case(),
        weights in prop::collection::vec(-3i64..=3, 8),
        noise in prop::option::of((0usize..64, 1i64..=3)),
    ) {
        let p = &c.pres;
        let field = p.field();
        let mut f = Element::zero();
        for (b, w) in c.center.basis.iter().zip(&weights) {
            f = f.add(&b.scale(&field.from_int(*w)));
        }
        if let Some((k, w)) = noise {
            let mons = p.monomials_up_to(c.degree);
            f = f.add(&Element::monomial(mons[k % mons.len()].clone(), field.from_int(w)));
        }
        prop_assert_eq!(is_central(p, &f).unwrap().is_central(), in_span(&c.center.basis, &f));
    }

    #[test]
    fn nullspace_vectors_are_annihilated(rows in 1usize..=5, cols in 1usize..=6, data in prop::collection::vec(-3i64..=3, 30)) {
        let table: Vec<Vec<i64>> = (0..rows).map(|r| data[r * cols..(r + 1) * cols].to_vec()).collect();
        let refs: Vec<&[i64]> = table.iter().map(Vec::as_slice).collect();
        let m = ExactMatrix::from_ints(&refs);
        let null = nullspace(&m);
        for v in &null {
            prop_assert!(m.mul_vec(v).iter().all(|x| x.is_zero()));
        }
        prop_assert_eq!(m.rank() + null.len(), cols);
    }
}
