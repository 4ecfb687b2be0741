//! Commutators, centrality tests, bounded centers and associated graded rings.

mod linalg;

use std::collections::BTreeMap;

use crate::engine::{Element, Monomial, Presentation, RawPoly};
use crate::error::{Error, Result};
use crate::exec::Exec;

pub use linalg::{nullspace, ExactMatrix};

/// Default cap on the number of unknowns in a center computation.
pub const DEFAULT_MONOMIAL_CAP: usize = 20_000;

/// `f g - g f` in normal form.
pub fn commutator(p: &Presentation, f: &Element, g: &Element) -> Result<Element> {
    Ok(p.mul(f, g)?.sub(&p.mul(g, f)?))
}

/// `[x_g, m]` for a standard monomial, normalized in one pass.
fn generator_commutator(p: &Presentation, g: usize, m: &Monomial) -> Result<Element> {
    let w = m.word();
    let mut left = vec![g];
    left.extend_from_slice(&w);
    let mut right = w;
    right.push(g);
    let mut raw = RawPoly::new();
    if left == right {
        return Ok(Element::zero());
    }
    raw.insert(left, p.field().one());
    raw.insert(right, -&p.field().one());
    p.normalize(&raw)
}

/// A generator that fails to commute with the tested element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommutatorWitness {
    pub generator: usize,
    /// `x_g f - f x_g`, nonzero.
    pub commutator: Element,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Centrality {
    Central,
    NotCentral(CommutatorWitness),
}

impl Centrality {
    pub fn is_central(&self) -> bool {
        matches!(self, Centrality::Central)
    }
}

/// Tests `x_g f = f x_g` for every generator in order; reports the first failure.
pub fn is_central(p: &Presentation, f: &Element) -> Result<Centrality> {
    for g in 0..p.ngens() {
        let c = commutator(p, &p.generator(g), f)?;
        if !c.is_zero() {
            return Ok(Centrality::NotCentral(CommutatorWitness { generator: g, commutator: c }));
        }
    }
    Ok(Centrality::Central)
}

/// Degree-bounded center `Z(A) ∩ F_D`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CenterBasis {
    pub degree_bound: u32,
    /// Reduced echelon form, pivots ascending, so `1` comes first.
    pub basis: Vec<Element>,
}

impl CenterBasis {
    pub fn is_trivial(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].len() == 1 && self.basis[0].leading_term().is_some_and(|(m, c)| m.is_one() && c.is_one())
    }
}

#[derive(Debug, Clone, Copy)]
pub struct CenterOptions {
    pub exec: Exec,
    pub max_monomials: usize,
}

impl Default for CenterOptions {
    fn default() -> Self {
        CenterOptions { exec: Exec::default(), max_monomials: DEFAULT_MONOMIAL_CAP }
    }
}

pub fn center_basis(p: &Presentation, d: u32) -> Result<CenterBasis> {
    center_basis_with(p, d, &CenterOptions::default())
}

/// Solves `[x_g, Σ c_m m] = 0` over all monomials `m` of degree at most `d`.
pub fn center_basis_with(p: &Presentation, d: u32, opts: &CenterOptions) -> Result<CenterBasis> {
    let mons = p.monomials_up_to(d);
    if mons.len() > opts.max_monomials {
        return Err(Error::ResourceLimit { what: "monomial count", actual: mons.len(), limit: opts.max_monomials });
    }
    let jobs: Vec<(usize, usize)> = (0..p.ngens()).flat_map(|g| (0..mons.len()).map(move |k| (g, k))).collect();
    let columns = opts.exec.map(&jobs, |&(g, k)| generator_commutator(p, g, &mons[k]));

    // Rows are (generator, target monomial), numbered by first appearance in
    // job order so the matrix does not depend on scheduling.
    let mut row_of: BTreeMap<(usize, Monomial), usize> = BTreeMap::new();
    let mut entries = Vec::new();
    for (&(g, k), col) in jobs.iter().zip(columns) {
        for (m, c) in col?.into_terms() {
            let next = row_of.len();
            let r = *row_of.entry((g, m)).or_insert(next);
            entries.push((r, k, c));
        }
    }
    let mut matrix = ExactMatrix::zeros(p.field(), row_of.len(), mons.len());
    for (r, k, c) in entries {
        matrix.set(r, k, c);
    }
    let elements: Vec<Element> = nullspace(&matrix)
        .into_iter()
        .map(|v| Element::from_terms(mons.iter().cloned().zip(v)))
        .collect();
    Ok(CenterBasis { degree_bound: d, basis: echelon(&elements) })
}

/// Reduced echelon form of a family of elements with respect to grlex:
/// each result has a distinct grlex-leading monomial with coefficient 1 that
/// appears in no other result. Sorted by leading monomial, ascending.
pub fn echelon(elements: &[Element]) -> Vec<Element> {
    let Some(field) = elements.iter().find_map(|e| e.leading_term().map(|(_, c)| c.field())) else {
        return Vec::new();
    };
    let mut cols: Vec<Monomial> = elements.iter().flat_map(|e| e.terms().keys().cloned()).collect();
    cols.sort_by(|a, b| b.cmp(a));
    cols.dedup();
    let index: BTreeMap<&Monomial, usize> = cols.iter().enumerate().map(|(k, m)| (m, k)).collect();
    let rows = elements
        .iter()
        .map(|e| {
            let mut row = vec![field.zero(); cols.len()];
            for (m, c) in e.terms() {
                row[index[m]] = c.clone();
            }
            row
        })
        .collect();
    let mut m = ExactMatrix::from_rows(field, cols.len(), rows);
    let rank = m.rref().len();
    let mut out: Vec<Element> = (0..rank)
        .map(|r| Element::from_terms(cols.iter().cloned().zip(m.row(r).iter().cloned())))
        .collect();
    out.reverse();
    out
}

/// True when `f` lies in the span of `basis`.
pub fn in_span(basis: &[Element], f: &Element) -> bool {
    let mut all = basis.to_vec();
    all.push(f.clone());
    echelon(&all).len() == echelon(basis).len()
}

/// Keeps only the top-weight part of every relation.
pub fn associated_graded(p: &Presentation) -> Presentation {
    let mut g = p.clone();
    let rels: Vec<_> = p.relations().cloned().collect();
    for mut rel in rels {
        let top = p.word_weight(&[rel.i, rel.j]);
        rel.tail.retain(|w, _| p.word_weight(w) == top);
        g.set_relation(rel);
    }
    g
}

/// Every relation reads `x_j x_i = c_ij x_i x_j` plus top-weight quadratic words.
pub fn is_quasi_commutative(p: &Presentation) -> bool {
    p.relations().all(|rel| {
        let top = p.word_weight(&[rel.i, rel.j]);
        rel.tail.keys().all(|w| w.len() == 2 && p.word_weight(w) == top)
    })
}

/// Checks that the top-weight part of `f` is central in the associated graded ring.
pub fn gr_compatible(p: &Presentation, f: &Element) -> Result<bool> {
    let gr = associated_graded(p);
    Ok(is_central(&gr, &f.top_weight_part(&p.weights()))?.is_central())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::Field;
    use crate::engine::PresentationBuilder;

    fn weyl() -> Presentation {
        PresentationBuilder::new(Field::Rational, &["t", "x"]).rel("x*t = t*x + 1").unwrap().build().unwrap()
    }

    fn dispin() -> Presentation {
        PresentationBuilder::new(Field::Rational, &["x", "y", "z"])
            .rel("y*x = x*y - x")
            .unwrap()
            .rel("z*x = -x*z + y")
            .unwrap()
            .rel("z*y = y*z - z")
            .unwrap()
            .build()
            .unwrap()
    }

    fn usl2() -> Presentation {
        PresentationBuilder::new(Field::Rational, &["x", "y", "z"])
            .rel("y*x = x*y - z")
            .unwrap()
            .rel("z*x = x*z + 2*x")
            .unwrap()
            .rel("z*y = y*z - 2*y")
            .unwrap()
            .build()
            .unwrap()
    }

    #[test]
    fn commutators() {
        let p = weyl();
        let c = commutator(&p, &p.generator(1), &p.generator(0)).unwrap();
        assert_eq!(c, p.one());
        let d = dispin();
        let c = commutator(&d, &d.generator(1), &d.generator(0)).unwrap();
        assert_eq!(d.show(&c), "-x");
        let f = d.parse("x*y + z").unwrap();
        assert!(commutator(&d, &f, &f).unwrap().is_zero());
    }

    #[test]
    fn dispin_casimir() {
        let d = dispin();
        let f = d.parse("4*x*x*z*z - y*y - 2*x*z - y").unwrap();
        assert!(is_central(&d, &f).unwrap().is_central());
        assert!(is_central(&d, &d.one()).unwrap().is_central());
    }

    #[test]
    fn quantum_plane_witness() {
        let p = PresentationBuilder::new(Field::RationalFunction, &["x", "y"])
            .rel("y*x = p*x*y")
            .unwrap()
            .build()
            .unwrap();
        match is_central(&p, &p.generator(0)).unwrap() {
            Centrality::NotCentral(w) => {
                assert_eq!(w.generator, 1);
                assert_eq!(p.show(&w.commutator), "(p - 1)*x*y");
            }
            Centrality::Central => panic!("x is not central"),
        }
    }

    #[test]
    fn weyl_center_is_trivial() {
        let cb = center_basis(&weyl(), 4).unwrap();
        assert!(cb.is_trivial());
    }

    #[test]
    fn sl2_center() {
        let p = usl2();
        let cb = center_basis(&p, 2).unwrap();
        let shown: Vec<String> = cb.basis.iter().map(|e| p.show(e)).collect();
        assert_eq!(shown, vec!["1", "x*y + 1/4*z^2 - 1/2*z"]);
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let p = usl2();
        let a = center_basis_with(&p, 3, &CenterOptions { exec: Exec::Sequential, ..Default::default() }).unwrap();
        let b = center_basis_with(&p, 3, &CenterOptions { exec: Exec::Parallel, ..Default::default() }).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn resource_cap() {
        let opts = CenterOptions { max_monomials: 5, ..Default::default() };
        assert!(matches!(center_basis_with(&usl2(), 2, &opts), Err(Error::ResourceLimit { .. })));
    }

    #[test]
    fn graded_forms() {
        let w = associated_graded(&weyl());
        assert!(w.relation(1, 0).is_trivial());
        assert!(is_quasi_commutative(&w));
        assert!(!is_quasi_commutative(&weyl()));
        let d = associated_graded(&dispin());
        assert!(is_quasi_commutative(&d));
        assert_eq!(d.relation(2, 0).leading, Field::Rational.from_int(-1));
        assert!(d.relation(2, 0).tail.is_empty());
    }
}
