//! Closed-form power rules, each paired with the word product it describes.

use crate::coeff::{binomial, geometric_sum, Field, FieldElement};
use crate::engine::expr::parse_scalar;
use crate::engine::{Element, Monomial, ParamEnv, Presentation};
use crate::error::{Error, Result};

use super::Params;

/// Exponent arguments an oracle accepts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Arity {
    One,
    Two,
    /// The argument is the root-of-unity order `l`; the field is `Cyclo(l)`.
    Order,
}

/// Both sides of an identity: the normalized product and the closed form.
pub type Sides = (Element, Element);

#[derive(Clone)]
pub struct LemmaOracle {
    pub algebra: &'static str,
    pub lemma: &'static str,
    pub item: u32,
    pub arity: Arity,
    pub field: Field,
    pub params: &'static [(&'static str, &'static str)],
    /// Correction folded into the closed form, if any.
    pub note: Option<&'static str>,
    eval: fn(&Ctx, &[u32]) -> Result<Sides>,
}

impl LemmaOracle {
    pub fn id(&self) -> String {
        format!("{}/{}/{}", self.algebra, self.lemma, self.item)
    }

    /// Argument tuples covering exponents `1..=max`.
    pub fn sweep(&self, max: u32) -> Vec<Vec<u32>> {
        match self.arity {
            Arity::One => (1..=max).map(|m| vec![m]).collect(),
            Arity::Two => (1..=max).flat_map(|n| (1..=max).map(move |m| vec![n, m])).collect(),
            Arity::Order => vec![vec![3], vec![4]],
        }
    }

    pub fn evaluate(&self, args: &[u32]) -> Result<(Element, Element)> {
        let want = if self.arity == Arity::Two { 2 } else { 1 };
        if args.len() != want || args.contains(&0) {
            return Err(Error::BadArgument(format!("{} takes {want} positive exponent(s), got {args:?}", self.id())));
        }
        if self.arity == Arity::Order && args[0] < 3 {
            return Err(Error::BadArgument(format!("{} needs a root-of-unity order of at least 3", self.id())));
        }
        let field = if self.arity == Arity::Order { Field::Cyclotomic(args[0]) } else { self.field };
        let ctx = Ctx::new(self.algebra, field, self.params)?;
        (self.eval)(&ctx, args)
    }
}

pub fn lemma_oracles() -> &'static [LemmaOracle] {
    ORACLES
}

/// `(normal form of the word product, closed form)` for one oracle item.
pub fn lemma_oracle(algebra: &str, lemma: &str, item: u32, args: &[u32]) -> Result<(Element, Element)> {
    let o = ORACLES
        .iter()
        .find(|o| o.algebra == algebra && o.lemma == lemma && o.item == item)
        .ok_or_else(|| Error::UnknownLemma(format!("{algebra}/{lemma}/{item}")))?;
    o.evaluate(args)
}

struct Ctx {
    p: Presentation,
    env: ParamEnv,
}

impl Ctx {
    fn new(algebra: &str, field: Field, params: &[(&str, &str)]) -> Result<Self> {
        let mut ps = Params::new(field);
        let mut env = ParamEnv::new();
        for (k, v) in params {
            ps.set(k, v);
            env.insert(k.to_string(), parse_scalar(v, field, &ParamEnv::new())?);
        }
        let p = super::build(algebra, &ps)?;
        Ok(Ctx { p, env })
    }

    fn field(&self) -> Field {
        self.p.field()
    }

    fn s(&self, name: &str) -> FieldElement {
        if name == "q" && !self.env.contains_key("q") {
            return self.field().param().expect("parametric field");
        }
        self.env[name].clone()
    }

    fn int(&self, n: i64) -> FieldElement {
        self.field().from_int(n)
    }

    fn binom(&self, n: u32, k: u32) -> FieldElement {
        self.field().from_bigint(binomial(n.into(), k.into()))
    }

    fn gen(&self, name: &str) -> usize {
        self.p.index_of(name).expect("generator exists")
    }

    /// Normal form of `a^i b^j ...`.
    fn word(&self, parts: &[(&str, u32)]) -> Result<Element> {
        let w: Vec<usize> = parts.iter().flat_map(|&(g, e)| std::iter::repeat_n(self.gen(g), e as usize)).collect();
        self.p.normalize_word(&w)
    }

    /// `c * a^i b^j ...` read as a standard monomial.
    fn mono(&self, c: FieldElement, parts: &[(&str, u32)]) -> Element {
        let mut exps = vec![0; self.p.ngens()];
        for &(g, e) in parts {
            exps[self.gen(g)] += e;
        }
        Element::monomial(Monomial::new(exps), c)
    }
}

fn pw(a: &FieldElement, e: i64) -> FieldElement {
    a.pow(e).expect("nonzero base")
}

/// `Σ_{i=lo}^{hi} C(i + j - 1, j - 1) q^i` style sums.
fn binom_sum(c: &Ctx, q: &FieldElement, upto: i64, shift: u32, k: u32) -> FieldElement {
    (0..=upto).fold(c.int(0), |acc, i| &acc + &(&c.binom(i as u32 + shift, k) * &pw(q, i)))
}

/// `y x^n` (or its mirror `y^n x` when `swap`) in `y x = q1 x y + q2 x + q3 y + q4`.
fn two_var(c: &Ctx, n: u32, swap: bool) -> Result<(Element, Element)> {
    let (q1, q4) = (c.s("q1"), c.s("q4"));
    let (mut q2, mut q3) = (c.s("q2"), c.s("q3"));
    if swap {
        std::mem::swap(&mut q2, &mut q3);
    }
    let left = if swap { c.word(&[("y", n), ("x", 1)])? } else { c.word(&[("y", 1), ("x", n)])? };
    let mut right = Element::zero();
    for j in 0..=n {
        let lead = &(&c.binom(n, j) * &pw(&q1, (n - j) as i64)) * &pw(&q3, j as i64);
        let mut lower = &(&q2 * &pw(&q3, j as i64)) * &binom_sum(c, &q1, n as i64 - j as i64 - 1, j, j);
        if j >= 1 {
            lower = &lower + &(&(&pw(&q3, j as i64 - 1) * &q4) * &binom_sum(c, &q1, (n - j) as i64, j - 1, j - 1));
        }
        if swap {
            right = right.add(&c.mono(lead, &[("x", 1), ("y", n - j)])).add(&c.mono(lower, &[("y", n - j)]));
        } else {
            right = right.add(&c.mono(lead, &[("x", n - j), ("y", 1)])).add(&c.mono(lower, &[("x", n - j)]));
        }
    }
    Ok((left, right))
}

fn two_var_1(c: &Ctx, a: &[u32]) -> Result<(Element, Element)> {
    two_var(c, a[0], false)
}

fn two_var_2(c: &Ctx, a: &[u32]) -> Result<(Element, Element)> {
    two_var(c, a[0], true)
}

fn two_var_special_1(c: &Ctx, a: &[u32]) -> Result<(Element, Element)> {
    let n = a[0];
    let (q1, q4) = (c.s("q1"), c.s("q4"));
    let right = c.mono(pw(&q1, n as i64), &[("x", n), ("y", 1)]).add(&c.mono(&q4 * &geometric_sum(&q1, n), &[("x", n - 1)]));
    Ok((c.word(&[("y", 1), ("x", n)])?, right))
}

fn two_var_special_2(c: &Ctx, a: &[u32]) -> Result<(Element, Element)> {
    let n = a[0];
    let (q1, q4) = (c.s("q1"), c.s("q4"));
    let right = c.mono(pw(&q1, n as i64), &[("x", 1), ("y", n)]).add(&c.mono(&q4 * &geometric_sum(&q1, n), &[("y", n - 1)]));
    Ok((c.word(&[("y", n), ("x", 1)])?, right))
}

fn operator_1(c: &Ctx, a: &[u32]) -> Result<(Element, Element)> {
    let m = a[0];
    let (q, d, aa) = (c.s("q"), c.s("d"), c.s("a"));
    let mut right = Element::zero();
    for j in 0..=m {
        let lead = &(&c.binom(m, j) * &pw(&q, (m - j) as i64)) * &pw(&d, j as i64);
        right = right.add(&c.mono(lead, &[("x", m - j), ("y", 1)]));
        if j >= 1 {
            let low = &(&aa * &pw(&d, j as i64 - 1)) * &binom_sum(c, &q, (m - j) as i64, j - 1, j - 1);
            right = right.add(&c.mono(low, &[("x", m - j)]));
        }
    }
    Ok((c.word(&[("y", 1), ("x", m)])?, right))
}

fn operator_2(c: &Ctx, a: &[u32]) -> Result<(Element, Element)> {
    let m = a[0];
    let (q, d, aa) = (c.s("q"), c.s("d"), c.s("a"));
    let s = geometric_sum(&q, m);
    let right = c
        .mono(pw(&q, m as i64), &[("x", 1), ("y", m)])
        .add(&c.mono(&d * &s, &[("y", m)]))
        .add(&c.mono(&aa * &s, &[("y", m - 1)]));
    Ok((c.word(&[("y", m), ("x", 1)])?, right))
}

/// Coefficient polynomial shared by the two `y`/`x` identities of the Woronowicz algebra.
fn woronowicz_poly(c: &Ctx, m: u32) -> FieldElement {
    let q = c.s("q");
    let mut acc = c.int(0);
    for i in 1..m {
        acc = &acc + &(&c.int(i as i64) * &pw(&q, 2 * (i as i64 - 1)));
    }
    for i in m..=2 * m - 2 {
        acc = &acc + &(&c.int((2 * m - 1 - i) as i64) * &pw(&q, 2 * (i as i64 - 1)));
    }
    acc
}

fn woronowicz_1(c: &Ctx, a: &[u32]) -> Result<(Element, Element)> {
    let m = a[0];
    let q = c.s("q");
    let q2 = pw(&q, 2);
    let right = c
        .mono(pw(&q, -2 * m as i64), &[("x", 1), ("y", m)])
        .sub(&c.mono(&geometric_sum(&q2, m) * &pw(&q, -1), &[("y", m - 1), ("z", 1)]))
        .sub(&c.mono(&woronowicz_poly(c, m) * &pw(&q, 1 - 2 * m as i64), &[("y", m - 1)]));
    Ok((c.word(&[("y", m), ("x", 1)])?, right))
}

fn woronowicz_2(c: &Ctx, a: &[u32]) -> Result<(Element, Element)> {
    let m = a[0];
    let q = c.s("q");
    let q2 = pw(&q, 2);
    let den = pw(&q, 3 - 4 * m as i64);
    let right = c
        .mono(pw(&q, -2 * m as i64), &[("x", m), ("y", 1)])
        .sub(&c.mono(&geometric_sum(&q2, m) * &den, &[("x", m - 1), ("z", 1)]))
        .add(&c.mono(&woronowicz_poly(c, m) * &den, &[("x", m - 1)]));
    Ok((c.word(&[("y", 1), ("x", m)])?, right))
}

fn woronowicz_3(c: &Ctx, a: &[u32]) -> Result<(Element, Element)> {
    let m = a[0];
    let q = c.s("q");
    let base = &pw(&q, 2) + &c.int(1);
    let scale = pw(&q, -4 * m as i64);
    let mut right = Element::zero();
    for i in 0..=m {
        let sign = c.int(if i % 2 == 0 { 1 } else { -1 });
        let coef = &(&(&sign * &c.binom(m, i)) * &pw(&base, i as i64)) * &scale;
        right = right.add(&c.mono(coef, &[("x", 1), ("z", m - i)]));
    }
    Ok((c.word(&[("z", m), ("x", 1)])?, right))
}

fn woronowicz_4(c: &Ctx, a: &[u32]) -> Result<(Element, Element)> {
    let m = a[0];
    let q = c.s("q");
    let scale = pw(&q, -4 * m as i64);
    let right = c
        .mono(scale.clone(), &[("x", m), ("z", 1)])
        .sub(&c.mono(&scale * &geometric_sum(&pw(&q, 2), 2 * m), &[("x", m)]));
    Ok((c.word(&[("z", 1), ("x", m)])?, right))
}

fn woronowicz_5(c: &Ctx, a: &[u32]) -> Result<(Element, Element)> {
    let m = a[0];
    let q = c.s("q");
    let (q4, base) = (pw(&q, 4), &pw(&q, 2) + &c.int(1));
    let mut right = Element::zero();
    for k in 0..=m {
        let coef = &(&c.binom(m, k) * &pw(&q4, k as i64)) * &pw(&base, (m - k) as i64);
        right = right.add(&c.mono(coef, &[("y", 1), ("z", k)]));
    }
    Ok((c.word(&[("z", m), ("y", 1)])?, right))
}

fn woronowicz_6(c: &Ctx, a: &[u32]) -> Result<(Element, Element)> {
    let m = a[0];
    let q = c.s("q");
    let right = c
        .mono(pw(&q, 4 * m as i64), &[("y", m), ("z", 1)])
        .add(&c.mono(geometric_sum(&pw(&q, 2), 2 * m), &[("y", m)]));
    Ok((c.word(&[("z", 1), ("y", m)])?, right))
}

fn algebra_u_1(c: &Ctx, a: &[u32]) -> Result<(Element, Element)> {
    let m = a[0];
    let q = c.s("q");
    let right = c
        .mono(pw(&q, 2 * m as i64), &[("y", m), ("z", 1)])
        .sub(&c.mono(&pw(&q, 2) * &geometric_sum(&pw(&q, 4), m), &[("x", 2), ("y", m - 1)]));
    Ok((c.word(&[("z", 1), ("y", m)])?, right))
}

fn algebra_u_2(c: &Ctx, a: &[u32]) -> Result<(Element, Element)> {
    let m = a[0];
    let q = c.s("q");
    let right = c
        .mono(pw(&q, 2 * m as i64), &[("y", 1), ("z", m)])
        .sub(&c.mono(&pw(&q, 4 - 2 * m as i64) * &geometric_sum(&pw(&q, 4), m), &[("x", 2), ("z", m - 1)]));
    Ok((c.word(&[("z", m), ("y", 1)])?, right))
}

fn algebra_u_3(c: &Ctx, a: &[u32]) -> Result<(Element, Element)> {
    let m = a[0];
    Ok((c.word(&[("y", m), ("x", 1)])?, c.mono(pw(&c.s("q"), m as i64), &[("x", 1), ("y", m)])))
}

fn algebra_u_4(c: &Ctx, a: &[u32]) -> Result<(Element, Element)> {
    let m = a[0];
    Ok((c.word(&[("z", m), ("x", 1)])?, c.mono(pw(&c.s("q"), -(m as i64)), &[("x", 1), ("z", m)])))
}

/// `Σ_k C(n, k) (-s)^(n-k) lhs y^k rhs`, the expansion of `lhs (y - s)^n rhs`.
fn shifted_power(c: &Ctx, n: u32, s: i64, before: &[(&str, u32)], after: &[(&str, u32)]) -> Element {
    let mut out = Element::zero();
    for k in 0..=n {
        let coef = &c.binom(n, k) * &pw(&c.int(-s), (n - k) as i64);
        let mut parts = before.to_vec();
        parts.push(("y", k));
        parts.extend_from_slice(after);
        out = out.add(&c.mono(coef, &parts));
    }
    out
}

fn dispin_1(c: &Ctx, a: &[u32]) -> Result<(Element, Element)> {
    let n = a[0];
    let right = c.mono(c.int(1), &[("x", n), ("y", 1)]).sub(&c.mono(c.int(n as i64), &[("x", n)]));
    Ok((c.word(&[("y", 1), ("x", n)])?, right))
}

fn dispin_2(c: &Ctx, a: &[u32]) -> Result<(Element, Element)> {
    let n = a[0];
    Ok((c.word(&[("y", n), ("x", 1)])?, shifted_power(c, n, 1, &[("x", 1)], &[])))
}

fn dispin_3(c: &Ctx, a: &[u32]) -> Result<(Element, Element)> {
    let (n, m) = (a[0], a[1]);
    Ok((c.word(&[("y", n), ("x", m)])?, shifted_power(c, n, m as i64, &[("x", m)], &[])))
}

fn dispin_4(c: &Ctx, a: &[u32]) -> Result<(Element, Element)> {
    let n = a[0];
    let sign = if n.is_multiple_of(2) { 1 } else { -1 };
    let mut right = c.mono(c.int(sign), &[("x", 1), ("z", n)]).sub(&c.mono(c.int((n / 2) as i64), &[("z", n - 1)]));
    if n % 2 == 1 {
        right = right.add(&c.mono(c.int(1), &[("y", 1), ("z", n - 1)]));
    }
    Ok((c.word(&[("z", n), ("x", 1)])?, right))
}

fn dispin_5(c: &Ctx, a: &[u32]) -> Result<(Element, Element)> {
    let n = a[0];
    Ok((c.word(&[("z", 1), ("y", n)])?, shifted_power(c, n, 1, &[], &[("z", 1)])))
}

fn dispin_6(c: &Ctx, a: &[u32]) -> Result<(Element, Element)> {
    let n = a[0];
    Ok((c.word(&[("z", n), ("y", 1)])?, shifted_power(c, 1, n as i64, &[], &[("z", n)])))
}

fn dispin_7(c: &Ctx, a: &[u32]) -> Result<(Element, Element)> {
    let (n, m) = (a[0], a[1]);
    Ok((c.word(&[("z", n), ("y", m)])?, shifted_power(c, m, n as i64, &[], &[("z", n)])))
}

fn mq2_1(c: &Ctx, a: &[u32]) -> Result<(Element, Element)> {
    let l = a[0];
    let q = c.s("q");
    let k = &(&q - &pw(&q, -1)) * &geometric_sum(&pw(&q, 2), l);
    let right = c.mono(c.int(1), &[("x", l), ("y", 1)]).sub(&c.mono(k, &[("u", 1), ("v", 1), ("x", l - 1)]));
    Ok((c.word(&[("y", 1), ("x", l)])?, right))
}

fn mq2_2(c: &Ctx, a: &[u32]) -> Result<(Element, Element)> {
    let l = a[0];
    let q = c.s("q");
    let k = &(&q - &pw(&q, -1)) * &geometric_sum(&pw(&q, -2), l);
    let right = c.mono(c.int(1), &[("x", 1), ("y", l)]).sub(&c.mono(k, &[("u", 1), ("v", 1), ("y", l - 1)]));
    Ok((c.word(&[("y", l), ("x", 1)])?, right))
}

fn mq2_vanish_1(c: &Ctx, a: &[u32]) -> Result<(Element, Element)> {
    let l = a[0];
    Ok((c.word(&[("y", 1), ("x", l)])?, c.mono(c.int(1), &[("x", l), ("y", 1)])))
}

fn mq2_vanish_2(c: &Ctx, a: &[u32]) -> Result<(Element, Element)> {
    let l = a[0];
    Ok((c.word(&[("y", l), ("x", 1)])?, c.mono(c.int(1), &[("x", 1), ("y", l)])))
}

fn quadratic_a2_1(c: &Ctx, a: &[u32]) -> Result<(Element, Element)> {
    let m = a[0];
    let mm = c.int(m as i64);
    let right = c
        .mono(c.int(1), &[("x", m), ("y", 1)])
        .add(&c.mono(&mm * &c.s("a"), &[("x", m), ("z", 1)]))
        .add(&c.mono(&mm * &c.s("b"), &[("x", m - 1), ("z", 2)]));
    Ok((c.word(&[("y", 1), ("x", m)])?, right))
}

fn quadratic_a2_2(c: &Ctx, a: &[u32]) -> Result<(Element, Element)> {
    let m = a[0];
    let cc = c.s("c");
    let mut right = Element::zero();
    let mut falling = c.int(1);
    for i in 0..=m {
        right = right.add(&c.mono(&falling * &pw(&cc, i as i64), &[("y", m - i), ("z", 1 + i)]));
        falling = &falling * &c.int((m - i) as i64);
    }
    Ok((c.word(&[("z", 1), ("y", m)])?, right))
}

fn quadratic_a2_3(c: &Ctx, a: &[u32]) -> Result<(Element, Element)> {
    let m = a[0];
    let right = c.mono(c.int(1), &[("y", 1), ("z", m)]).add(&c.mono(&c.int(m as i64) * &c.s("c"), &[("z", m + 1)]));
    Ok((c.word(&[("z", m), ("y", 1)])?, right))
}

const QP: Field = Field::RationalFunction;
const TWO_VAR: &[(&str, &str)] = &[("q1", "p"), ("q2", "2"), ("q3", "3"), ("q4", "5")];
const TWO_VAR_SPECIAL: &[(&str, &str)] = &[("q1", "p"), ("q2", "0"), ("q3", "0"), ("q4", "5")];
const OPERATOR: &[(&str, &str)] = &[("q", "p"), ("d", "2"), ("a", "3")];
const A2: &[(&str, &str)] = &[("a", "2"), ("b", "3"), ("c", "-5")];

macro_rules! oracle {
    ($alg:literal, $lemma:literal, $item:literal, $arity:ident, $field:expr, $params:expr, $note:expr, $eval:ident) => {
        LemmaOracle {
            algebra: $alg,
            lemma: $lemma,
            item: $item,
            arity: Arity::$arity,
            field: $field,
            params: $params,
            note: $note,
            eval: $eval,
        }
    };
}

static ORACLES: &[LemmaOracle] = &[
    oracle!("two_var_generic", "power_rules", 1, One, QP, TWO_VAR, None, two_var_1),
    oracle!("two_var_generic", "power_rules", 2, One, QP, TWO_VAR,
        Some("binomial factor C(i+1,1) and powers q1^i in the lower terms; mirror image of item 1"), two_var_2),
    oracle!("two_var_generic", "power_rules_special", 1, One, QP, TWO_VAR_SPECIAL, None, two_var_special_1),
    oracle!("two_var_generic", "power_rules_special", 2, One, QP, TWO_VAR_SPECIAL, None, two_var_special_2),
    oracle!("operator", "step_one", 1, One, QP, OPERATOR, None, operator_1),
    oracle!("operator", "step_one", 2, One, QP, OPERATOR, None, operator_2),
    oracle!("woronowicz", "identities", 1, One, QP, &[], None, woronowicz_1),
    oracle!("woronowicz", "identities", 2, One, QP, &[], None, woronowicz_2),
    oracle!("woronowicz", "identities", 3, One, QP, &[], None, woronowicz_3),
    oracle!("woronowicz", "identities", 4, One, QP, &[],
        Some("the x^m term carries a minus sign: z x^m = q^-4m x^m z - q^-4m (sum_{i<2m} q^2i) x^m"), woronowicz_4),
    oracle!("woronowicz", "identities", 5, One, QP, &[], None, woronowicz_5),
    oracle!("woronowicz", "identities", 6, One, QP, &[], None, woronowicz_6),
    oracle!("algebra_u", "power_rules", 1, One, QP, &[],
        Some("coefficient of x^2 y^(m-1) is q^2 (sum_{k<m} q^4k), not m q^2"), algebra_u_1),
    oracle!("algebra_u", "power_rules", 2, One, QP, &[],
        Some("coefficient of x^2 z^(m-1) is q^(4-2m) (sum_{k<m} q^4k), not m q^2m"), algebra_u_2),
    oracle!("algebra_u", "power_rules", 3, One, QP, &[], None, algebra_u_3),
    oracle!("algebra_u", "power_rules", 4, One, QP, &[], None, algebra_u_4),
    oracle!("dispin", "power_rules", 1, One, Field::Rational, &[], None, dispin_1),
    oracle!("dispin", "power_rules", 2, One, Field::Rational, &[], None, dispin_2),
    oracle!("dispin", "power_rules", 3, Two, Field::Rational, &[], None, dispin_3),
    oracle!("dispin", "power_rules", 4, One, Field::Rational, &[],
        Some("z^n x = (-1)^n x z^n - floor(n/2) z^(n-1) + [n odd] y z^(n-1)"), dispin_4),
    oracle!("dispin", "power_rules", 5, One, Field::Rational, &[], None, dispin_5),
    oracle!("dispin", "power_rules", 6, One, Field::Rational, &[], None, dispin_6),
    oracle!("dispin", "power_rules", 7, Two, Field::Rational, &[], None, dispin_7),
    oracle!("mq2", "power_rules", 1, One, QP, &[], None, mq2_1),
    oracle!("mq2", "power_rules", 2, One, QP, &[], None, mq2_2),
    oracle!("mq2", "root_of_unity", 1, Order, QP, &[], None, mq2_vanish_1),
    oracle!("mq2", "root_of_unity", 2, Order, QP, &[], None, mq2_vanish_2),
    oracle!("quadratic_a2", "power_rules", 1, One, Field::Rational, A2, None, quadratic_a2_1),
    oracle!("quadratic_a2", "power_rules", 2, One, Field::Rational, A2, None, quadratic_a2_2),
    oracle!("quadratic_a2", "power_rules", 3, One, Field::Rational, A2, None, quadratic_a2_3),
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dispin_item_six_at_three() {
        let (l, r) = lemma_oracle("dispin", "power_rules", 6, &[3]).unwrap();
        assert_eq!(l, r);
        let p = super::super::build("dispin", &Params::new(Field::Rational)).unwrap();
        assert_eq!(p.show(&r), "y*z^3 - 3*z^3");
    }

    #[test]
    fn special_two_var_at_four() {
        let (l, r) = lemma_oracle("two_var_generic", "power_rules_special", 1, &[4]).unwrap();
        assert_eq!(l, r);
        let p = super::super::build("two_var_generic", &Params::new(QP)).unwrap();
        assert_eq!(p.show(&r), "p^4*x^4*y + (5*p^3 + 5*p^2 + 5*p + 5)*x^3");
    }

    #[test]
    fn argument_errors() {
        assert!(matches!(lemma_oracle("dispin", "power_rules", 9, &[1]), Err(Error::UnknownLemma(_))));
        assert!(matches!(lemma_oracle("dispin", "power_rules", 3, &[1]), Err(Error::BadArgument(_))));
        assert!(matches!(lemma_oracle("dispin", "power_rules", 1, &[0]), Err(Error::BadArgument(_))));
    }

    #[test]
    fn every_oracle_holds_for_small_exponents() {
        for o in lemma_oracles() {
            for args in o.sweep(4) {
                let (l, r) = o.evaluate(&args).unwrap();
                assert_eq!(l, r, "{} at {args:?}", o.id());
            }
        }
    }
}
