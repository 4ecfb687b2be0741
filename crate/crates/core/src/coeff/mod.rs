//! Exact coefficient arithmetic.
//!
//! Three coefficient fields are supported: ℚ, the rational function field
//! ℚ(p) in one formal parameter, and the cyclotomic fields ℚ(ζₙ). A
//! [`FieldElement`] always carries its field tag; mixing tags is an error.

mod cyclo;
mod poly;
mod ratfunc;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use cyclo::{cyclotomic_polynomial, CyclotomicElement};
pub use poly::UniPoly;
pub use ratfunc::RationalFunction;

pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoeffError {
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(Field, Field),
    #[error("division by zero")]
    DivisionByZero,
    #[error("the field {0} has no formal parameter")]
    NoParameter(Field),
}

/// Descriptor of a coefficient field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    /// ℚ
    Rational,
    /// ℚ(p)
    RationalFunction,
    /// ℚ(ζₙ), with `p` denoting ζₙ.
    Cyclotomic(u32),
}

impl Field {
    pub fn zero(self) -> FieldElement {
        self.from_rational(Rational::zero())
    }

    pub fn one(self) -> FieldElement {
        self.from_rational(Rational::one())
    }

    pub fn from_int(self, n: i64) -> FieldElement {
        self.from_rational(Rational::from_integer(n.into()))
    }

    pub fn from_bigint(self, n: BigInt) -> FieldElement {
        self.from_rational(Rational::from_integer(n))
    }

    pub fn from_ratio(self, num: i64, den: i64) -> FieldElement {
        self.from_rational(Rational::new(num.into(), den.into()))
    }

    pub fn from_rational(self, r: Rational) -> FieldElement {
        match self {
            Field::Rational => FieldElement::Rational(r),
            Field::RationalFunction => FieldElement::RationalFunction(RationalFunction::from_rational(r)),
            Field::Cyclotomic(n) => FieldElement::Cyclotomic(CyclotomicElement::new(n, UniPoly::constant(r))),
        }
    }

    /// Embeds a polynomial in `p`; fails over ℚ unless it is constant.
    pub fn from_poly(self, poly: UniPoly) -> Result<FieldElement, CoeffError> {
        match self {
            Field::Rational => poly.as_constant().map(FieldElement::Rational).ok_or(CoeffError::NoParameter(self)),
            Field::RationalFunction => Ok(FieldElement::RationalFunction(RationalFunction::from_poly(poly))),
            Field::Cyclotomic(n) => Ok(FieldElement::Cyclotomic(CyclotomicElement::new(n, poly))),
        }
    }

    /// The formal parameter `p` (ζₙ for cyclotomic fields).
    pub fn param(self) -> Result<FieldElement, CoeffError> {
        self.from_poly(UniPoly::param())
    }

    pub fn has_param(self) -> bool {
        !matches!(self, Field::Rational)
    }

    pub fn is_root_of_unity(self) -> bool {
        matches!(self, Field::Cyclotomic(_))
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::RationalFunction => write!(f, "Q(p)"),
            Field::Cyclotomic(n) => write!(f, "Cyclo({n})"),
        }
    }
}

impl std::str::FromStr for Field {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        match t.as_str() {
            "Q" => Ok(Field::Rational),
            "Q(p)" => Ok(Field::RationalFunction),
            _ => {
                let inner = t
                    .strip_prefix("Cyclo(")
                    .and_then(|r| r.strip_suffix(')'))
                    .ok_or_else(|| format!("unknown field `{s}` (expected Q, Q(p) or Cyclo(n))"))?;
                let n: u32 = inner.parse().map_err(|_| format!("bad cyclotomic order `{inner}`"))?;
                if n == 0 {
                    return Err("cyclotomic order must be positive".into());
                }
                Ok(Field::Cyclotomic(n))
            }
        }
    }
}

/// Exact scalar tagged with its field.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum FieldElement {
    Rational(Rational),
    RationalFunction(RationalFunction),
    Cyclotomic(CyclotomicElement),
}

impl FieldElement {
    pub fn field(&self) -> Field {
        match self {
            FieldElement::Rational(_) => Field::Rational,
            FieldElement::RationalFunction(_) => Field::RationalFunction,
            FieldElement::Cyclotomic(c) => Field::Cyclotomic(c.order()),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Rational(r) => r.is_zero(),
            FieldElement::RationalFunction(r) => r.is_zero(),
            FieldElement::Cyclotomic(c) => c.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElement::Rational(r) => r.is_one(),
            FieldElement::RationalFunction(r) => r.is_one(),
            FieldElement::Cyclotomic(c) => c.is_one(),
        }
    }

    /// The value as a rational number, if it is one.
    pub fn as_rational(&self) -> Option<Rational> {
        match self {
            FieldElement::Rational(r) => Some(r.clone()),
            FieldElement::RationalFunction(r) => r.as_rational(),
            FieldElement::Cyclotomic(c) => c.as_rational(),
        }
    }

    fn check(&self, other: &Self) -> Result<(), CoeffError> {
        let (a, b) = (self.field(), other.field());
        if a == b {
            Ok(())
        } else {
            Err(CoeffError::FieldMismatch(a, b))
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, CoeffError> {
        self.check(other)?;
        Ok(match (self, other) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => FieldElement::Rational(a + b),
            (FieldElement::RationalFunction(a), FieldElement::RationalFunction(b)) => {
                FieldElement::RationalFunction(a.add(b))
            }
            (FieldElement::Cyclotomic(a), FieldElement::Cyclotomic(b)) => FieldElement::Cyclotomic(a.add(b)),
            _ => unreachable!(),
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, CoeffError> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, CoeffError> {
        self.check(other)?;
        Ok(match (self, other) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => FieldElement::Rational(a * b),
            (FieldElement::RationalFunction(a), FieldElement::RationalFunction(b)) => {
                FieldElement::RationalFunction(a.mul(b))
            }
            (FieldElement::Cyclotomic(a), FieldElement::Cyclotomic(b)) => FieldElement::Cyclotomic(a.mul(b)),
            _ => unreachable!(),
        })
    }

    pub fn inverse(&self) -> Result<Self, CoeffError> {
        match self {
            FieldElement::Rational(r) if r.is_zero() => Err(CoeffError::DivisionByZero),
            FieldElement::Rational(r) => Ok(FieldElement::Rational(r.recip())),
            FieldElement::RationalFunction(r) => {
                r.inverse().map(FieldElement::RationalFunction).ok_or(CoeffError::DivisionByZero)
            }
            FieldElement::Cyclotomic(c) => c.inverse().map(FieldElement::Cyclotomic).ok_or(CoeffError::DivisionByZero),
        }
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, CoeffError> {
        self.checked_mul(&other.inverse()?)
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, e: i64) -> Result<Self, CoeffError> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = self.field().one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// Splits the value into a sign and a printable magnitude for use as a
    /// coefficient in a sum. Returns `(negative, magnitude, magnitude_is_one)`;
    /// compound magnitudes come parenthesized so that `magnitude*x` parses back.
    pub(crate) fn term_parts(&self) -> (bool, String, bool) {
        fn poly_parts(p: &UniPoly) -> (bool, String, bool) {
            if p.term_count() <= 1 {
                let neg = p.leading().is_some_and(Signed::is_negative);
                let mag = if neg { -p } else { p.clone() };
                (neg, mag.to_string(), mag.is_one())
            } else {
                (false, format!("({p})"), false)
            }
        }
        match self {
            FieldElement::Rational(r) => {
                let mag = r.abs();
                let mut s = String::new();
                if mag.denom().is_one() {
                    s.push_str(&mag.numer().to_string());
                } else {
                    s.push_str(&format!("{}/{}", mag.numer(), mag.denom()));
                }
                (r.is_negative(), s, mag.is_one())
            }
            FieldElement::Cyclotomic(c) => poly_parts(c.residue()),
            FieldElement::RationalFunction(r) if r.denom().is_one() => poly_parts(r.numer()),
            FieldElement::RationalFunction(r) => {
                let (neg, num, _) = poly_parts(r.numer());
                let den = if r.denom().term_count() > 1 { format!("({})", r.denom()) } else { r.denom().to_string() };
                (neg, format!("{num}/{den}"), false)
            }
        }
    }

    /// True when the printed form needs no parentheses inside a product.
    pub fn is_atomic(&self) -> bool {
        match self {
            FieldElement::Rational(_) => true,
            FieldElement::RationalFunction(r) => r.is_atomic(),
            FieldElement::Cyclotomic(c) => c.is_atomic(),
        }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Rational(r) => poly::fmt_rational(r, f),
            FieldElement::RationalFunction(r) => write!(f, "{r}"),
            FieldElement::Cyclotomic(c) => write!(f, "{c}"),
        }
    }
}

// Operator forms panic on a field mismatch. The engine only combines
// coefficients that come from one presentation, so a mismatch there is a bug.

impl Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        self.checked_add(rhs).expect("coefficient field mismatch")
    }
}

impl Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        self.checked_sub(rhs).expect("coefficient field mismatch")
    }
}

impl Mul for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        self.checked_mul(rhs).expect("coefficient field mismatch")
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        match self {
            FieldElement::Rational(r) => FieldElement::Rational(-r),
            FieldElement::RationalFunction(r) => FieldElement::RationalFunction(r.neg()),
            FieldElement::Cyclotomic(c) => FieldElement::Cyclotomic(c.neg()),
        }
    }
}

/// Σ_{i=0}^{m-1} aⁱ by repeated addition (well defined at a = 1).
pub fn geometric_sum(a: &FieldElement, m: u32) -> FieldElement {
    let field = a.field();
    let mut sum = field.zero();
    let mut power = field.one();
    for _ in 0..m {
        sum = &sum + &power;
        power = &power * a;
    }
    sum
}

/// Binomial coefficient C(n, k) as an exact integer.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_sum() {
        let f = Field::Rational;
        assert_eq!(f.from_ratio(1, 2).checked_add(&f.from_ratio(1, 3)).unwrap(), f.from_ratio(5, 6));
        assert_eq!(f.from_ratio(2, 3).checked_mul(&f.from_ratio(3, 4)).unwrap(), f.from_ratio(1, 2));
        assert_eq!(f.from_ratio(5, 7).inverse().unwrap(), f.from_ratio(7, 5));
    }

    #[test]
    fn mismatch_is_reported() {
        let a = Field::Rational.one();
        let b = Field::RationalFunction.one();
        assert_eq!(a.checked_add(&b), Err(CoeffError::FieldMismatch(Field::Rational, Field::RationalFunction)));
        let c = Field::Cyclotomic(3).one();
        let d = Field::Cyclotomic(4).one();
        assert!(matches!(c.checked_mul(&d), Err(CoeffError::FieldMismatch(..))));
    }

    #[test]
    fn zero_has_no_inverse() {
        for f in [Field::Rational, Field::RationalFunction, Field::Cyclotomic(5)] {
            assert_eq!(f.zero().inverse(), Err(CoeffError::DivisionByZero));
        }
    }

    #[test]
    fn ratfunc_examples() {
        let f = Field::RationalFunction;
        let q = f.param().unwrap();
        let one = f.one();
        // q/(q-1) + 1/(1-q) = 1
        let a = q.checked_div(&(&q - &one)).unwrap();
        let b = one.checked_div(&(&one - &q)).unwrap();
        assert!((&a + &b).is_one());
        // (q+1)(q-1) = q^2 - 1
        let prod = &(&q + &one) * &(&q - &one);
        assert_eq!(prod, f.from_poly(UniPoly::from_ints(&[-1, 0, 1])).unwrap());
        // 1/q^2
        let q2 = &q * &q;
        assert_eq!(q2.inverse().unwrap().to_string(), "1/p^2");
    }

    #[test]
    fn cyclotomic_examples() {
        let f4 = Field::Cyclotomic(4);
        let i = f4.param().unwrap();
        let i3 = i.pow(3).unwrap();
        assert!((&i + &i3).is_zero());
        assert_eq!(i.inverse().unwrap(), -&i);
        let f3 = Field::Cyclotomic(3);
        let w = f3.param().unwrap();
        assert!((&w * &(&w * &w)).is_one());
        assert!(geometric_sum(&w, 3).is_zero());
    }

    #[test]
    fn geometric_sums() {
        let f = Field::Rational;
        assert_eq!(geometric_sum(&f.one(), 4), f.from_int(4));
        let q = Field::RationalFunction.param().unwrap();
        assert_eq!(
            geometric_sum(&q, 3),
            Field::RationalFunction.from_poly(UniPoly::from_ints(&[1, 1, 1])).unwrap()
        );
        assert!(geometric_sum(&q, 0).is_zero());
    }

    #[test]
    fn field_parsing() {
        assert_eq!("Q".parse::<Field>().unwrap(), Field::Rational);
        assert_eq!("Q(p)".parse::<Field>().unwrap(), Field::RationalFunction);
        assert_eq!("Cyclo(12)".parse::<Field>().unwrap(), Field::Cyclotomic(12));
        assert!("Cyclo(0)".parse::<Field>().is_err());
        assert!("R".parse::<Field>().is_err());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(8, 0), BigInt::from(1));
        assert_eq!(binomial(3, 4), BigInt::from(0));
    }

    #[test]
    fn term_parts_round_trip_shapes() {
        let f = Field::RationalFunction;
        let q = f.param().unwrap();
        let neg = -&(&q * &f.from_int(2));
        assert_eq!(neg.term_parts(), (true, "2*p".to_string(), false));
        let compound = &q - &f.one();
        assert_eq!(compound.term_parts(), (false, "(p - 1)".to_string(), false));
        let r = Field::Rational.from_ratio(-3, 4);
        assert_eq!(r.term_parts(), (true, "3/4".to_string(), false));
    }
}
