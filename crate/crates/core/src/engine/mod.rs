//! Presentations of skew PBW extensions and their PBW normal forms.
//!
//! Generators are numbered `0..n` in PBW order. A word is a sequence of
//! generator indices; it is standard when nondecreasing. Every relation
//! rewrites a descent `x_j x_i` (`i < j`) into `c_ij x_i x_j + tail`.

mod element;
pub mod expr;
mod normal;

use std::collections::BTreeMap;
use std::fmt;

use crate::coeff::{Field, FieldElement};
use crate::error::{Error, Result};

pub use element::{Degree, Element, Monomial};
pub use expr::{parse_expr, ParamEnv, RawPoly};

/// Default rewrite-step budget for one normalization.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

pub type Word = Vec<usize>;

pub fn is_standard(word: &[usize]) -> bool {
    word.windows(2).all(|w| w[0] <= w[1])
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneratorInfo {
    pub name: String,
    pub weight: u32,
}

/// `x_j x_i -> leading * x_i x_j + tail`, with `i < j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub j: usize,
    pub i: usize,
    pub leading: FieldElement,
    pub tail: BTreeMap<Word, FieldElement>,
}

impl Relation {
    pub fn commuting(field: Field, j: usize, i: usize) -> Self {
        Relation { j, i, leading: field.one(), tail: BTreeMap::new() }
    }

    /// Plain commutation `x_j x_i = x_i x_j`.
    pub fn is_trivial(&self) -> bool {
        self.leading.is_one() && self.tail.is_empty()
    }
}

/// One failed admissibility condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub pair: (String, String),
    pub reason: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*{}: {}", self.pair.0, self.pair.1, self.reason)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    field: Field,
    gens: Vec<GeneratorInfo>,
    /// Dense, indexed by `pair_index(j, i)`.
    relations: Vec<Relation>,
    budget: u64,
}

fn pair_index(j: usize, i: usize) -> usize {
    debug_assert!(i < j);
    j * (j - 1) / 2 + i
}

impl Presentation {
    /// Presentation with every pair commuting: the polynomial ring.
    pub fn commutative(field: Field, gens: Vec<GeneratorInfo>) -> Self {
        let n = gens.len();
        let mut relations = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for j in 1..n {
            for i in 0..j {
                relations.push(Relation::commuting(field, j, i));
            }
        }
        Presentation { field, gens, relations, budget: DEFAULT_BUDGET }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ngens(&self) -> usize {
        self.gens.len()
    }

    pub fn generators(&self) -> &[GeneratorInfo] {
        &self.gens
    }

    pub fn name(&self, i: usize) -> &str {
        &self.gens[i].name
    }

    pub fn weight(&self, i: usize) -> u32 {
        self.gens[i].weight
    }

    pub fn weights(&self) -> Vec<u32> {
        self.gens.iter().map(|g| g.weight).collect()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.gens.iter().position(|g| g.name == name)
    }

    pub fn budget(&self) -> u64 {
        self.budget
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    pub fn relation(&self, j: usize, i: usize) -> &Relation {
        &self.relations[pair_index(j, i)]
    }

    pub fn relations(&self) -> impl Iterator<Item = &Relation> {
        self.relations.iter()
    }

    /// Replaces the relation for the pair `(j, i)` without validating.
    pub fn set_relation(&mut self, rel: Relation) {
        assert!(rel.i < rel.j && rel.j < self.ngens(), "relation pair out of range");
        let k = pair_index(rel.j, rel.i);
        self.relations[k] = rel;
    }

    pub fn word_weight(&self, word: &[usize]) -> u64 {
        word.iter().map(|&g| u64::from(self.gens[g].weight)).sum()
    }

    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        let mut seen = std::collections::HashSet::new();
        for g in &self.gens {
            if !seen.insert(g.name.as_str()) {
                violations.push(Violation { pair: (g.name.clone(), g.name.clone()), reason: "duplicate generator name".into() });
            }
            if g.weight == 0 {
                violations.push(Violation { pair: (g.name.clone(), g.name.clone()), reason: "weight must be positive".into() });
            }
        }
        for rel in &self.relations {
            let pair = (self.name(rel.j).to_string(), self.name(rel.i).to_string());
            let mut bad = |reason: String| violations.push(Violation { pair: pair.clone(), reason });
            if rel.leading.field() != self.field {
                bad(format!("leading coefficient lives in {}", rel.leading.field()));
            }
            if rel.leading.is_zero() {
                bad("leading coefficient is zero".into());
            }
            let top = self.word_weight(&[rel.i, rel.j]);
            let lead_word = [rel.i, rel.j];
            for (word, c) in &rel.tail {
                let shown = self.word_string(word);
                if c.field() != self.field {
                    bad(format!("coefficient of {shown} lives in {}", c.field()));
                }
                if c.is_zero() {
                    bad(format!("zero coefficient stored for {shown}"));
                }
                if word.iter().any(|&g| g >= self.ngens()) {
                    bad("tail word uses an unknown generator".to_string());
                    continue;
                }
                if !is_standard(word) {
                    bad(format!("tail word {shown} is not standard"));
                }
                if word.len() > 2 {
                    bad(format!("tail word {shown} has length above 2"));
                }
                let w = self.word_weight(word);
                if w > top {
                    bad(format!("tail word {shown} has weight {w} above {top}"));
                } else if w == top {
                    if word.len() != 2 {
                        bad(format!("tail word {shown} has top weight but length {}", word.len()));
                    } else if word.as_slice() >= lead_word.as_slice() {
                        bad(format!(
                            "tail word {shown} has top weight and is not lex-smaller than {}",
                            self.word_string(&lead_word)
                        ));
                    }
                }
            }
        }
        ValidationReport { violations }
    }

    pub fn word_string(&self, word: &[usize]) -> String {
        if word.is_empty() {
            return "1".into();
        }
        word.iter().map(|&g| self.name(g)).collect::<Vec<_>>().join("*")
    }

    /// The single-generator element `x_i`.
    pub fn generator(&self, i: usize) -> Element {
        let mut exps = vec![0; self.ngens()];
        exps[i] = 1;
        Element::monomial(Monomial::new(exps), self.field.one())
    }

    pub fn one(&self) -> Element {
        self.scalar(self.field.one())
    }

    pub fn scalar(&self, c: FieldElement) -> Element {
        Element::constant(self.ngens(), c)
    }

    /// Every standard monomial of total degree at most `d`: ascending degree,
    /// and within one degree `x1` before `x2` (lex-descending).
    pub fn monomials_up_to(&self, d: u32) -> Vec<Monomial> {
        monomials_up_to(self.ngens(), d)
    }

    /// Parses an expression in this presentation's generators.
    pub fn parse(&self, text: &str) -> Result<Element> {
        self.parse_with(text, &ParamEnv::new())
    }

    pub fn parse_with(&self, text: &str, env: &ParamEnv) -> Result<Element> {
        let raw = parse_expr(text, self.field, &self.names(), env)?;
        self.normalize(&raw)
    }

    pub fn names(&self) -> Vec<String> {
        self.gens.iter().map(|g| g.name.clone()).collect()
    }

    /// Printed form of an element; reparses to the same element.
    pub fn show(&self, el: &Element) -> String {
        el.display_with(&self.names())
    }
}

pub fn monomials_up_to(n: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    for deg in 0..=d {
        let mut exps = vec![0u32; n];
        compositions(&mut exps, 0, deg, &mut out);
    }
    out
}

fn compositions(exps: &mut Vec<u32>, pos: usize, left: u32, out: &mut Vec<Monomial>) {
    let n = exps.len();
    if n == 0 {
        if left == 0 {
            out.push(Monomial::new(Vec::new()));
        }
        return;
    }
    if pos == n - 1 {
        exps[pos] = left;
        out.push(Monomial::new(exps.clone()));
        exps[pos] = 0;
        return;
    }
    for e in (0..=left).rev() {
        exps[pos] = e;
        compositions(exps, pos + 1, left - e, out);
    }
    exps[pos] = 0;
}

/// Incremental construction of presentations from relation strings.
///
/// ```
/// use skewpbw::coeff::Field;
/// use skewpbw::engine::PresentationBuilder;
///
/// let weyl = PresentationBuilder::new(Field::Rational, &["t", "x"])
///     .rel("x*t = t*x + 1")
///     .unwrap()
///     .build()
///     .unwrap();
/// let x = weyl.generator(1);
/// let t = weyl.generator(0);
/// assert_eq!(weyl.show(&weyl.mul(&x, &t).unwrap()), "t*x + 1");
/// ```
#[derive(Debug, Clone)]
pub struct PresentationBuilder {
    pres: Presentation,
    env: ParamEnv,
    given: std::collections::BTreeSet<(usize, usize)>,
}

impl PresentationBuilder {
    pub fn new(field: Field, names: &[&str]) -> Self {
        let gens = names.iter().map(|n| GeneratorInfo { name: n.to_string(), weight: 1 }).collect();
        PresentationBuilder { pres: Presentation::commutative(field, gens), env: ParamEnv::new(), given: Default::default() }
    }

    pub fn from_names(field: Field, names: Vec<String>) -> Self {
        let gens = names.into_iter().map(|name| GeneratorInfo { name, weight: 1 }).collect();
        PresentationBuilder { pres: Presentation::commutative(field, gens), env: ParamEnv::new(), given: Default::default() }
    }

    pub fn field(&self) -> Field {
        self.pres.field
    }

    pub fn names(&self) -> Vec<String> {
        self.pres.names()
    }

    pub fn weights(mut self, weights: &[u32]) -> Self {
        assert_eq!(weights.len(), self.pres.gens.len(), "one weight per generator");
        for (g, &w) in self.pres.gens.iter_mut().zip(weights) {
            g.weight = w;
        }
        self
    }

    /// Binds a named scalar usable inside relation strings.
    pub fn param(mut self, name: &str, value: FieldElement) -> Self {
        self.env.insert(name.to_string(), value);
        self
    }

    pub fn env(&self) -> &ParamEnv {
        &self.env
    }

    /// Adds `lhs = rhs` where `lhs` is a descent `v*u` and `rhs` is a sum of
    /// scalar multiples of standard words.
    pub fn rel(mut self, text: &str) -> Result<Self> {
        self.add_rel(text)?;
        Ok(self)
    }

    pub fn add_rel(&mut self, text: &str) -> Result<(usize, usize)> {
        let Some(eq) = text.find('=') else {
            return Err(Error::parse(1, "relation needs `=`"));
        };
        let (lhs, rhs) = (&text[..eq], &text[eq + 1..]);
        let names = self.pres.names();
        let field = self.pres.field;
        let lhs_raw = parse_expr(lhs, field, &names, &self.env)?;
        let (j, i) = match lhs_raw.iter().collect::<Vec<_>>().as_slice() {
            [(w, c)] if w.len() == 2 && c.is_one() && w[0] > w[1] => (w[0], w[1]),
            _ => {
                return Err(Error::parse(1, format!("left side `{}` must be a descending pair v*u", lhs.trim())));
            }
        };
        if !self.given.insert((j, i)) {
            return Err(Error::parse(1, format!("duplicate relation for {}*{}", names[j], names[i])));
        }
        let rhs_raw = parse_expr(rhs, field, &names, &self.env)
            .map_err(|e| shift_column(e, eq + 1))?;
        let mut tail = BTreeMap::new();
        let mut leading = field.zero();
        for (w, c) in rhs_raw {
            if !is_standard(&w) {
                return Err(Error::parse(
                    eq + 2,
                    format!("right-hand word {} is not written in standard order", self.pres.word_string(&w)),
                ));
            }
            if w == [i, j] {
                leading = c;
            } else {
                tail.insert(w, c);
            }
        }
        self.pres.set_relation(Relation { j, i, leading, tail });
        Ok((j, i))
    }

    pub fn set_relation(&mut self, rel: Relation) {
        self.given.insert((rel.j, rel.i));
        self.pres.set_relation(rel);
    }

    /// Fails with [`Error::Inadmissible`] when validation reports violations.
    pub fn build(self) -> Result<Presentation> {
        let report = self.pres.validate();
        if report.is_ok() {
            Ok(self.pres)
        } else {
            Err(Error::Inadmissible(report.violations))
        }
    }

    pub fn build_unchecked(self) -> Presentation {
        self.pres
    }
}

fn shift_column(e: Error, by: usize) -> Error {
    match e {
        Error::Parse { line, column, message } => Error::Parse { line, column: column + by, message },
        other => other,
    }
}

/// Admissibility check.
pub fn validate_presentation(p: &Presentation) -> ValidationReport {
    p.validate()
}

pub fn el_add(_p: &Presentation, f: &Element, g: &Element) -> Element {
    f.add(g)
}

pub fn el_mul(p: &Presentation, f: &Element, g: &Element) -> Result<Element> {
    p.mul(f, g)
}

pub fn el_deg(f: &Element) -> Degree {
    f.degree()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn weyl() -> Presentation {
        PresentationBuilder::new(Field::Rational, &["t", "x"]).rel("x*t = t*x + 1").unwrap().build().unwrap()
    }

    #[test]
    fn weyl_validates() {
        assert!(weyl().validate().is_ok());
        let rel = weyl().relation(1, 0).clone();
        assert!(rel.leading.is_one());
        assert_eq!(rel.tail.len(), 1);
    }

    #[test]
    fn quadratic_a2_needs_weights() {
        let rels = ["y*x = x*y + x*z + z*z", "z*x = x*z", "z*y = y*z - z*z"];
        let mut b = PresentationBuilder::new(Field::Rational, &["x", "y", "z"]);
        for r in rels {
            b = b.rel(r).unwrap();
        }
        let report = b.clone().build_unchecked().validate();
        assert!(report
            .violations
            .iter()
            .any(|v| v.pair == ("y".to_string(), "x".to_string()) && v.reason.contains("z*z")));
        assert!(b.weights(&[1, 4, 2]).build().is_ok());
    }

    #[test]
    fn zero_leading_is_rejected() {
        let b = PresentationBuilder::new(Field::Rational, &["x", "y"]).rel("y*x = x").unwrap();
        assert!(matches!(b.build(), Err(Error::Inadmissible(_))));
    }

    #[test]
    fn bad_relations_are_parse_errors() {
        let b = PresentationBuilder::new(Field::Rational, &["x", "y"]);
        assert!(matches!(b.clone().rel("x*y = y*x"), Err(Error::Parse { .. })));
        assert!(matches!(b.clone().rel("y*x = y*x"), Err(Error::Parse { .. })));
        let b = b.rel("y*x = x*y").unwrap();
        assert!(matches!(b.rel("y*x = 2*x*y"), Err(Error::Parse { .. })));
    }

    #[test]
    fn monomial_listing() {
        let one = monomials_up_to(1, 2);
        assert_eq!(one.iter().map(|m| m.exponents().to_vec()).collect::<Vec<_>>(), vec![vec![0], vec![1], vec![2]]);
        let two = monomials_up_to(2, 1);
        assert_eq!(
            two.iter().map(|m| m.exponents().to_vec()).collect::<Vec<_>>(),
            vec![vec![0, 0], vec![1, 0], vec![0, 1]]
        );
        assert_eq!(monomials_up_to(3, 2).len(), 10);
        assert_eq!(monomials_up_to(4, 3).len(), 35);
    }
}
