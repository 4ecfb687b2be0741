//! Runs every expected fact, lemma sweep and structural check of an entry.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{classify_cancellation, lemma_oracles, CatalogEntry, CenterFact, FactKind};
use crate::center::{associated_graded, center_basis_with, echelon, gr_compatible, is_central, is_quasi_commutative, CenterBasis, CenterOptions, Centrality};
use crate::coeff::Field;
use crate::engine::{Element, Monomial, Presentation};
use crate::error::Result;
use crate::exec::Exec;

/// Entries used for the associativity spot checks.
pub const ASSOCIATIVITY_ALGEBRAS: [&str; 8] =
    ["dispin", "usl2", "woronowicz", "algebra_u", "mq2", "conformal", "quadratic_a2", "maltsiniotis_weyl"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub expected: String,
    pub actual: String,
}

impl Check {
    fn new(name: impl Into<String>, ok: bool, expected: impl Into<String>, actual: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            expected: expected.into(),
            actual: actual.into(),
        }
    }

    fn error(name: impl Into<String>, expected: impl Into<String>, e: &crate::Error) -> Self {
        Check::new(name, false, expected, format!("error: {e}"))
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    /// Overrides the degree of every triviality and cancellation check.
    pub max_degree: Option<u32>,
    pub exec: Exec,
    pub max_monomials: usize,
    pub associativity_triples: usize,
    pub lemma_max: u32,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            max_degree: None,
            exec: Exec::default(),
            max_monomials: crate::center::DEFAULT_MONOMIAL_CAP,
            associativity_triples: 20,
            lemma_max: 8,
            seed: 7,
        }
    }
}

fn random_element(p: &Presentation, rng: &mut ChaCha8Rng, max_degree: u32) -> Element {
    let field = p.field();
    let mut out = Element::zero();
    for _ in 0..rng.gen_range(1..=3) {
        let mut exps = vec![0u32; p.ngens()];
        for _ in 0..rng.gen_range(0..=max_degree) {
            exps[rng.gen_range(0..p.ngens())] += 1;
        }
        let mut c = field.from_int(rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 });
        if field.has_param() && rng.gen_bool(0.5) {
            c = &c * &field.param().expect("parametric field");
        }
        out = out.add(&Element::monomial(Monomial::new(exps), c));
    }
    out
}

/// Compares `(f g) h` with `f (g h)` on seeded random triples of degree at
/// most 3. Returns the first failing triple, rendered.
pub fn associativity_check(p: &Presentation, triples: usize, seed: u64) -> Result<Option<String>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..triples {
        let f = random_element(p, &mut rng, 3);
        let g = random_element(p, &mut rng, 3);
        let h = random_element(p, &mut rng, 3);
        let left = p.mul(&p.mul(&f, &g)?, &h)?;
        let right = p.mul(&f, &p.mul(&g, &h)?)?;
        if left != right {
            return Ok(Some(format!("f = {}, g = {}, h = {}", p.show(&f), p.show(&g), p.show(&h))));
        }
    }
    Ok(None)
}

fn suffix(field: Field, params: &[(&str, &str)]) -> String {
    let mut s = field.to_string();
    if !params.is_empty() {
        let kv: Vec<String> = params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        s.push_str(&format!("[{}]", kv.join(",")));
    }
    s
}

fn show_list(p: &Presentation, els: &[Element]) -> String {
    let parts: Vec<String> = els.iter().map(|e| p.show(e)).collect();
    format!("{{{}}}", parts.join(", "))
}

struct Runner<'a> {
    entry: &'a CatalogEntry,
    opts: &'a VerifyOptions,
    centers: BTreeMap<(String, u32), CenterBasis>,
    checks: Vec<Check>,
}

impl Runner<'_> {
    fn center(&mut self, key: &str, p: &Presentation, d: u32) -> Result<CenterBasis> {
        let k = (key.to_string(), d);
        if let Some(c) = self.centers.get(&k) {
            return Ok(c.clone());
        }
        let opts = CenterOptions { exec: self.opts.exec, max_monomials: self.opts.max_monomials };
        let c = center_basis_with(p, d, &opts)?;
        self.centers.insert(k, c.clone());
        Ok(c)
    }

    fn structure(&mut self, p: &Presentation) {
        let id = self.entry.id;
        let gr = associated_graded(p);
        let report = gr.validate();
        let ok = report.is_ok() && is_quasi_commutative(&gr);
        let actual = if !report.is_ok() {
            format!("inadmissible: {}", report.violations.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))
        } else if ok {
            "admissible, quasi-commutative".into()
        } else {
            "not quasi-commutative".into()
        };
        self.checks.push(Check::new(format!("{id}/graded"), ok, "admissible, quasi-commutative", actual));

        let n = self.opts.associativity_triples;
        if n > 0 {
            let name = format!("{id}/associativity");
            let expected = format!("{n} random triples associate");
            self.checks.push(match associativity_check(p, n, self.opts.seed) {
                Ok(None) => Check::new(name, true, expected.clone(), expected),
                Ok(Some(t)) => Check::new(name, false, expected, format!("fails at {t}")),
                Err(e) => Check::error(name, expected, &e),
            });
        }
    }

    fn fact(&mut self, fact: &CenterFact) {
        let id = self.entry.id;
        let tag = suffix(fact.field, &fact.params);
        let params = self.entry.fact_params(fact);
        let p = match self.entry.build(&params) {
            Ok(p) => p,
            Err(e) => {
                self.checks.push(Check::error(format!("{id}/build/{tag}"), "presentation", &e));
                return;
            }
        };
        match &fact.kind {
            FactKind::CentralElement(text) => self.central(&p, &tag, text),
            FactKind::BoundedCenterBasis { degree, basis } => {
                let d = *degree;
                let name = format!("{id}/center/{tag}/D{d}");
                let expected: Result<Vec<Element>> = basis.iter().map(|t| p.parse(t)).collect();
                let expected = match expected {
                    Ok(e) => echelon(&e),
                    Err(e) => return self.checks.push(Check::error(name, "parsable basis", &e)),
                };
                let want = show_list(&p, &expected);
                match self.center(&tag, &p, d) {
                    Ok(c) => {
                        let got = show_list(&p, &c.basis);
                        self.checks.push(Check::new(name, c.basis == expected, want, got));
                        self.graded_basis(&p, &tag, &c);
                    }
                    Err(e) => self.checks.push(Check::error(name, want, &e)),
                }
            }
            FactKind::TrivialUpTo(d) => {
                let d = self.opts.max_degree.unwrap_or(*d);
                let name = format!("{id}/center/{tag}/D{d}");
                match self.center(&tag, &p, d) {
                    Ok(c) => self.checks.push(Check::new(name, c.is_trivial(), "{1}", show_list(&p, &c.basis))),
                    Err(e) => self.checks.push(Check::error(name, "{1}", &e)),
                }
            }
        }
    }

    fn central(&mut self, p: &Presentation, tag: &str, text: &str) {
        let id = self.entry.id;
        let name = format!("{id}/central/{tag}/{text}");
        let f = match p.parse(text) {
            Ok(f) => f,
            Err(e) => return self.checks.push(Check::error(name, "central", &e)),
        };
        let check = match is_central(p, &f) {
            Ok(Centrality::Central) => Check::new(name, true, "central", "central"),
            Ok(Centrality::NotCentral(w)) => Check::new(
                name,
                false,
                "central",
                format!("[{}, f] = {}", p.name(w.generator), p.show(&w.commutator)),
            ),
            Err(e) => Check::error(name, "central", &e),
        };
        let central = check.passed();
        self.checks.push(check);
        if central {
            let name = format!("{id}/gr/{tag}/{text}");
            self.checks.push(match gr_compatible(p, &f) {
                Ok(ok) => Check::new(name, ok, "leading part central in Gr", if ok { "central in Gr" } else { "not central in Gr" }),
                Err(e) => Check::error(name, "leading part central in Gr", &e),
            });
        }
    }

    fn graded_basis(&mut self, p: &Presentation, tag: &str, c: &CenterBasis) {
        let mut bad = Vec::new();
        for f in &c.basis {
            match gr_compatible(p, f) {
                Ok(true) => {}
                Ok(false) => bad.push(p.show(f)),
                Err(e) => bad.push(format!("{}: {e}", p.show(f))),
            }
        }
        let name = format!("{}/gr/{tag}/D{}", self.entry.id, c.degree_bound);
        let expected = "leading parts central in Gr";
        let actual = if bad.is_empty() { expected.to_string() } else { format!("fails for {}", bad.join(", ")) };
        self.checks.push(Check::new(name, bad.is_empty(), expected, actual));
    }

    fn lemmas(&mut self) {
        for o in lemma_oracles().iter().filter(|o| o.algebra == self.entry.id) {
            let name = o.id();
            let sweep = o.sweep(self.opts.lemma_max);
            let expected = match o.note {
                Some(n) => format!("closed form holds for {} argument tuples ({n})", sweep.len()),
                None => format!("closed form holds for {} argument tuples", sweep.len()),
            };
            let mut failure = None;
            for args in &sweep {
                match o.evaluate(args) {
                    Ok((l, r)) if l == r => {}
                    Ok((l, r)) => {
                        failure = Some(format!("at {args:?}: engine {:?} vs closed form {:?}", l.len(), r.len()));
                        break;
                    }
                    Err(e) => {
                        failure = Some(format!("at {args:?}: error: {e}"));
                        break;
                    }
                }
            }
            self.checks.push(match failure {
                None => Check::new(name, true, expected, format!("{} tuples agree", sweep.len())),
                Some(f) => Check::new(name, false, expected, f),
            });
        }
    }

    fn cancellation(&mut self, p: &Presentation) {
        let id = self.entry.id;
        let d = self.opts.max_degree.unwrap_or(self.entry.cancel_degree);
        let name = format!("{id}/cancellation");
        let expected = match self.entry.cancellation {
            super::Cancellation::UniversallyCancellative { .. } => "universally cancellative",
            super::Cancellation::Unclassified => "not classified",
        };
        let tag = suffix(p.field(), &[]);
        let check = self
            .center(&tag, p, d)
            .and_then(|c| classify_cancellation(id, &c, p.field()))
            .map(|cls| Check::new(name.clone(), !cls.is_conflict(), expected, cls.describe()));
        self.checks.push(check.unwrap_or_else(|e| Check::error(name, expected, &e)));
    }
}

/// All checks for one entry, in a fixed order.
pub fn verify_entry(entry: &CatalogEntry, opts: &VerifyOptions) -> Vec<Check> {
    let mut r = Runner { entry, opts, centers: BTreeMap::new(), checks: Vec::new() };
    let id = entry.id;
    let p = match entry.build_default() {
        Ok(p) => p,
        Err(e) => return vec![Check::error(format!("{id}/admissible"), "admissible presentation", &e)],
    };
    r.checks.push(Check::new(format!("{id}/admissible"), true, "admissible presentation", "admissible presentation"));
    r.structure(&p);
    for fact in entry.facts() {
        r.fact(&fact);
    }
    r.lemmas();
    r.cancellation(&p);
    r.checks
}

/// Verifies several entries, one task per entry; output is ordered by id.
pub fn verify_entries(entries: &[&CatalogEntry], opts: &VerifyOptions) -> Vec<Check> {
    let mut sorted = entries.to_vec();
    sorted.sort_by_key(|e| e.id);
    let inner = VerifyOptions { exec: Exec::Sequential, ..*opts };
    opts.exec.map(&sorted, |e| verify_entry(e, &inner)).into_iter().flatten().collect()
}
