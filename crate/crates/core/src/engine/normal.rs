use std::cmp::Ordering;
use std::collections::BTreeMap;

use super::{is_standard, Element, Monomial, Presentation, RawPoly};
use crate::coeff::FieldElement;
use crate::error::{Error, Result};

/// Words ordered by weight, then length, then letters. Every rewrite step
/// replaces a word by strictly smaller ones, so popping the largest pending
/// word first lets each word be expanded once with all its contributions
/// already combined.
#[derive(Clone, PartialEq, Eq, Debug)]
struct Key {
    weight: u64,
    word: Vec<usize>,
}

impl Ord for Key {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight
            .cmp(&other.weight)
            .then_with(|| self.word.len().cmp(&other.word.len()))
            .then_with(|| self.word.cmp(&other.word))
    }
}

impl PartialOrd for Key {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn push(pending: &mut BTreeMap<Key, FieldElement>, key: Key, c: FieldElement) {
    if c.is_zero() {
        return;
    }
    match pending.entry(key) {
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

impl Presentation {
    /// PBW normal form of a linear combination of arbitrary words.
    ///
    /// Rewrites the leftmost descent of each word until every word is
    /// standard. Fails with [`Error::BudgetExceeded`] after `budget` steps.
    pub fn normalize(&self, raw: &RawPoly) -> Result<Element> {
        let n = self.ngens();
        let mut pending = BTreeMap::new();
        for (w, c) in raw {
            if let Some(&g) = w.iter().find(|&&g| g >= n) {
                return Err(Error::BadArgument(format!("generator index {g} out of range")));
            }
            let key = Key { weight: self.word_weight(w), word: w.clone() };
            push(&mut pending, key, c.clone());
        }
        let mut out = Element::zero();
        let mut steps: u64 = 0;
        while let Some((key, c)) = pending.pop_last() {
            let word = key.word;
            let Some(k) = word.windows(2).position(|p| p[0] > p[1]) else {
                out.add_term(Monomial::from_word(n, &word), c);
                continue;
            };
            steps += 1;
            if steps > self.budget() {
                return Err(Error::BudgetExceeded(self.budget()));
            }
            let (j, i) = (word[k], word[k + 1]);
            let rel = self.relation(j, i);
            let splice = |mid: &[usize]| {
                let mut w = Vec::with_capacity(word.len() - 2 + mid.len());
                w.extend_from_slice(&word[..k]);
                w.extend_from_slice(mid);
                w.extend_from_slice(&word[k + 2..]);
                w
            };
            let swapped = Key { weight: key.weight, word: splice(&[i, j]) };
            push(&mut pending, swapped, &c * &rel.leading);
            for (t, tc) in &rel.tail {
                let w = splice(t);
                let weight = self.word_weight(&w);
                push(&mut pending, Key { weight, word: w }, &c * tc);
            }
        }
        Ok(out)
    }

    /// Normal form of a single word.
    pub fn normalize_word(&self, word: &[usize]) -> Result<Element> {
        if is_standard(word) {
            return Ok(Element::monomial(Monomial::from_word(self.ngens(), word), self.field().one()));
        }
        let mut raw = RawPoly::new();
        raw.insert(word.to_vec(), self.field().one());
        self.normalize(&raw)
    }

    pub fn mul(&self, f: &Element, g: &Element) -> Result<Element> {
        let mut raw = RawPoly::new();
        for (m1, c1) in f.terms() {
            let w1 = m1.word();
            for (m2, c2) in g.terms() {
                let mut w = w1.clone();
                w.extend(m2.word());
                let c = c1 * c2;
                match raw.entry(w) {
                    std::collections::btree_map::Entry::Vacant(v) => {
                        v.insert(c);
                    }
                    std::collections::btree_map::Entry::Occupied(mut o) => {
                        let s = o.get() + &c;
                        *o.get_mut() = s;
                    }
                }
            }
        }
        self.normalize(&raw)
    }

    pub fn pow(&self, f: &Element, e: u32) -> Result<Element> {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, f)?;
        }
        Ok(acc)
    }

    /// `x_g^e` as an element.
    pub fn gen_pow(&self, g: usize, e: u32) -> Element {
        let mut exps = vec![0; self.ngens()];
        exps[g] = e;
        Element::monomial(Monomial::new(exps), self.field().one())
    }
}

#[cfg(test)]
mod tests {
    use crate::coeff::Field;
    use crate::engine::PresentationBuilder;

    #[test]
    fn weyl_word() {
        let p = PresentationBuilder::new(Field::Rational, &["t", "x"]).rel("x*t = t*x + 1").unwrap().build().unwrap();
        assert_eq!(p.show(&p.normalize_word(&[1, 0]).unwrap()), "t*x + 1");
        assert_eq!(p.show(&p.normalize_word(&[0, 1, 1]).unwrap()), "t*x^2");
        // x t^2 = t^2 x + 2t
        assert_eq!(p.show(&p.normalize_word(&[1, 0, 0]).unwrap()), "t^2*x + 2*t");
    }

    #[test]
    fn quantum_plane_word() {
        let p = PresentationBuilder::new(Field::RationalFunction, &["x", "y"])
            .rel("y*x = p*x*y")
            .unwrap()
            .build()
            .unwrap();
        assert_eq!(p.show(&p.normalize_word(&[1, 0, 0]).unwrap()), "p^2*x^2*y");
    }

    #[test]
    fn dispin_product() {
        let p = PresentationBuilder::new(Field::Rational, &["x", "y", "z"])
            .rel("y*x = x*y - x")
            .unwrap()
            .rel("z*x = -x*z + y")
            .unwrap()
            .rel("z*y = y*z - z")
            .unwrap()
            .build()
            .unwrap();
        let (y, z) = (p.generator(1), p.generator(2));
        assert_eq!(p.show(&p.mul(&z, &y).unwrap()), "y*z - z");
    }

    #[test]
    fn budget_is_enforced() {
        let p = PresentationBuilder::new(Field::Rational, &["t", "x"])
            .rel("x*t = t*x + 1")
            .unwrap()
            .build()
            .unwrap()
            .with_budget(3);
        assert!(p.normalize_word(&[1, 1, 1, 0, 0, 0]).is_err());
    }
}
