use std::fmt;

use super::poly::UniPoly;
use super::Rational;

/// Element of ℚ(p) kept in lowest terms with a monic denominator, so that
/// equal values have identical representations.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RationalFunction {
    num: UniPoly,
    den: UniPoly,
}

impl RationalFunction {
    /// Panics if `den` is zero.
    pub fn new(num: UniPoly, den: UniPoly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_one() { (num, den) } else { (num.div_rem(&g).0, den.div_rem(&g).0) };
        let lc = den.leading().cloned().expect("nonzero denominator");
        if !num_traits::One::is_one(&lc) {
            let inv = lc.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        RationalFunction { num, den }
    }

    pub fn from_poly(num: UniPoly) -> Self {
        RationalFunction { num, den: UniPoly::one() }
    }

    pub fn from_rational(c: Rational) -> Self {
        Self::from_poly(UniPoly::constant(c))
    }

    pub fn zero() -> Self {
        Self::from_poly(UniPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(UniPoly::one())
    }

    pub fn numer(&self) -> &UniPoly {
        &self.num
    }

    pub fn denom(&self) -> &UniPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.den == other.den {
            return Self::new(&self.num + &other.num, self.den.clone());
        }
        let num = &(&self.num * &other.den) + &(&other.num * &self.den);
        Self::new(num, &self.den * &other.den)
    }

    pub fn neg(&self) -> Self {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        Self::new(&self.num * &other.num, &self.den * &other.den)
    }

    /// `None` for zero.
    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::new(self.den.clone(), self.num.clone()))
        }
    }

    pub fn as_rational(&self) -> Option<Rational> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    /// True when the value can be printed without surrounding parentheses
    /// inside a product.
    pub(crate) fn is_atomic(&self) -> bool {
        self.den.is_one() && self.num.term_count() <= 1
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |p: &UniPoly| {
            if p.term_count() > 1 {
                format!("({p})")
            } else {
                p.to_string()
            }
        };
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c)
    }

    #[test]
    fn canonical_form() {
        // (p^2 - 1)/(2p + 2) = (p - 1)/2 with monic denominator: (1/2 p - 1/2)/1
        let r = RationalFunction::new(p(&[-1, 0, 1]), p(&[2, 2]));
        assert!(r.denom().is_one());
        assert_eq!(r.numer(), &p(&[-1, 1]).scale(&Rational::new(1.into(), 2.into())));
    }

    #[test]
    fn sum_collapses_to_one() {
        // q/(q-1) + 1/(1-q) = 1
        let a = RationalFunction::new(p(&[0, 1]), p(&[-1, 1]));
        let b = RationalFunction::new(p(&[1]), p(&[1, -1]));
        assert!(a.add(&b).is_one());
    }

    #[test]
    fn display_forms() {
        let r = RationalFunction::new(p(&[-1, 0, 1]), p(&[0, 0, 0, 1]));
        assert_eq!(r.to_string(), "(p^2 - 1)/p^3");
    }
}
