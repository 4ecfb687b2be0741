use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::coeff::FieldElement;

/// Exponent vector of a standard monomial `x1^a1 ... xn^an`.
///
/// Ordered graded-lexicographically: total degree first, then the exponent
/// of `x1`, then `x2`, and so on.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn one(n: usize) -> Self {
        Monomial { exps: vec![0; n] }
    }

    /// Monomial of a standard word.
    pub fn from_word(n: usize, word: &[usize]) -> Self {
        let mut exps = vec![0; n];
        for &g in word {
            exps[g] += 1;
        }
        Monomial { exps }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn weight(&self, weights: &[u32]) -> u64 {
        self.exps.iter().zip(weights).map(|(&e, &w)| u64::from(e) * u64::from(w)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// The standard word `x1..x1 x2..x2 ...`.
    pub fn word(&self) -> Vec<usize> {
        let mut w = Vec::with_capacity(self.degree() as usize);
        for (g, &e) in self.exps.iter().enumerate() {
            w.extend(std::iter::repeat_n(g, e as usize));
        }
        w
    }

    pub fn display_with(&self, names: &[String]) -> String {
        let parts: Vec<String> = self
            .exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(g, &e)| if e == 1 { names[g].clone() } else { format!("{}^{}", names[g], e) })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Degree of an element; the zero element has degree minus infinity.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Degree {
    MinusInfinity,
    Finite(u32),
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::MinusInfinity => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// Linear combination of standard monomials with nonzero coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Element {
    terms: BTreeMap<Monomial, FieldElement>,
}

impl Element {
    pub fn zero() -> Self {
        Element { terms: BTreeMap::new() }
    }

    pub fn constant(n: usize, c: FieldElement) -> Self {
        Self::monomial(Monomial::one(n), c)
    }

    pub fn monomial(m: Monomial, c: FieldElement) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Element { terms }
    }

    /// Builds from terms, combining duplicates and dropping zeros.
    pub fn from_terms(it: impl IntoIterator<Item = (Monomial, FieldElement)>) -> Self {
        let mut el = Element::zero();
        for (m, c) in it {
            el.add_term(m, c);
        }
        el
    }

    pub fn add_term(&mut self, m: Monomial, c: FieldElement) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, FieldElement> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Monomial, FieldElement> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Option<&FieldElement> {
        self.terms.get(m)
    }

    pub fn degree(&self) -> Degree {
        self.terms.keys().map(Monomial::degree).max().map_or(Degree::MinusInfinity, Degree::Finite)
    }

    /// Grlex-largest monomial with its coefficient.
    pub fn leading_term(&self) -> Option<(&Monomial, &FieldElement)> {
        self.terms.iter().next_back()
    }

    pub fn add(&self, other: &Element) -> Element {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Element {
        Element { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }

    pub fn sub(&self, other: &Element) -> Element {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &FieldElement) -> Element {
        if c.is_zero() {
            return Element::zero();
        }
        Element { terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    /// Terms of maximal weight, the image in the associated graded ring.
    pub fn top_weight_part(&self, weights: &[u32]) -> Element {
        let Some(top) = self.terms.keys().map(|m| m.weight(weights)).max() else {
            return Element::zero();
        };
        Element {
            terms: self.terms.iter().filter(|(m, _)| m.weight(weights) == top).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    /// Terms of maximal total degree.
    pub fn top_degree_part(&self) -> Element {
        let Degree::Finite(top) = self.degree() else {
            return Element::zero();
        };
        Element {
            terms: self.terms.iter().filter(|(m, _)| m.degree() == top).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    /// Terms largest first, e.g. `4*x*y + z^2 - 2*z`.
    pub fn display_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let (neg, mag, unit) = c.term_parts();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if m.is_one() {
                out.push_str(&mag);
            } else {
                if !unit {
                    out.push_str(&mag);
                    out.push('*');
                }
                out.push_str(&m.display_with(names));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::Field;

    fn names() -> Vec<String> {
        vec!["x".into(), "y".into(), "z".into()]
    }

    #[test]
    fn grlex_order() {
        let m = |e: &[u32]| Monomial::new(e.to_vec());
        assert!(m(&[0, 0, 2]) > m(&[1, 0, 0]));
        assert!(m(&[1, 1, 0]) > m(&[0, 0, 2]));
        assert!(m(&[1, 0, 0]) > m(&[0, 1, 0]));
    }

    #[test]
    fn display_order_and_signs() {
        let q = Field::Rational;
        let m = |e: &[u32]| Monomial::new(e.to_vec());
        let el = Element::from_terms([
            (m(&[0, 0, 1]), q.from_int(-2)),
            (m(&[1, 1, 0]), q.from_int(4)),
            (m(&[0, 0, 2]), q.one()),
        ]);
        assert_eq!(el.display_with(&names()), "4*x*y + z^2 - 2*z");
        assert_eq!(el.degree(), Degree::Finite(2));
        assert_eq!(Element::zero().degree(), Degree::MinusInfinity);
        assert_eq!(Element::zero().display_with(&names()), "0");
    }

    #[test]
    fn like_terms_cancel() {
        let q = Field::Rational;
        let x = Element::monomial(Monomial::new(vec![1, 0, 0]), q.one());
        let y = Element::monomial(Monomial::new(vec![0, 1, 0]), q.one());
        let s = x.add(&y).add(&x.sub(&y));
        assert_eq!(s, x.scale(&q.from_int(2)));
    }
}
