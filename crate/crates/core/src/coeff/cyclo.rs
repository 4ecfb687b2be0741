//! Cyclotomic polynomials and arithmetic in ℚ(ζₙ) = ℚ[p]/Φₙ(p).

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use super::poly::UniPoly;
use super::Rational;

/// Φₙ, the minimal polynomial of a primitive n-th root of unity.
///
/// Computed as (pⁿ − 1) divided by Φ_d for every proper divisor d of n, and
/// memoized process-wide.
pub fn cyclotomic_polynomial(n: u32) -> Arc<UniPoly> {
    assert!(n >= 1, "cyclotomic order must be positive");
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<UniPoly>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(phi) = cache.lock().expect("cyclotomic cache poisoned").get(&n) {
        return phi.clone();
    }
    let mut acc = &UniPoly::monomial(Rational::from_integer(1.into()), n as usize) - &UniPoly::one();
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        let (q, r) = acc.div_rem(&cyclotomic_polynomial(d));
        debug_assert!(r.is_zero());
        acc = q;
    }
    let phi = Arc::new(acc);
    cache.lock().expect("cyclotomic cache poisoned").insert(n, phi.clone());
    phi
}

/// Element of ℚ(ζₙ), stored as the reduced residue modulo Φₙ.
#[derive(Clone, Debug)]
pub struct CyclotomicElement {
    order: u32,
    residue: UniPoly,
    modulus: Arc<UniPoly>,
}

impl PartialEq for CyclotomicElement {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.residue == other.residue
    }
}

impl Eq for CyclotomicElement {}

impl std::hash::Hash for CyclotomicElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.order.hash(state);
        self.residue.hash(state);
    }
}

impl CyclotomicElement {
    pub fn new(order: u32, value: UniPoly) -> Self {
        let modulus = cyclotomic_polynomial(order);
        let residue = value.rem(&modulus);
        CyclotomicElement { order, residue, modulus }
    }

    fn with_residue(&self, value: UniPoly) -> Self {
        CyclotomicElement { order: self.order, residue: value.rem(&self.modulus), modulus: self.modulus.clone() }
    }

    /// The primitive root ζₙ itself.
    pub fn generator(order: u32) -> Self {
        Self::new(order, UniPoly::param())
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn residue(&self) -> &UniPoly {
        &self.residue
    }

    pub fn is_zero(&self) -> bool {
        self.residue.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.residue.is_one()
    }

    /// Callers guarantee equal orders.
    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.order, other.order);
        CyclotomicElement {
            order: self.order,
            residue: &self.residue + &other.residue,
            modulus: self.modulus.clone(),
        }
    }

    pub fn neg(&self) -> Self {
        CyclotomicElement { order: self.order, residue: -&self.residue, modulus: self.modulus.clone() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.order, other.order);
        self.with_residue(&self.residue * &other.residue)
    }

    /// Extended Euclid against Φₙ; `None` for zero.
    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let (g, s, _) = self.residue.ext_gcd(&self.modulus);
        debug_assert!(g.is_one(), "Φₙ is irreducible, so every nonzero residue is a unit");
        Some(self.with_residue(s))
    }

    pub fn as_rational(&self) -> Option<Rational> {
        self.residue.as_constant()
    }

    pub(crate) fn is_atomic(&self) -> bool {
        self.residue.term_count() <= 1
    }
}

impl fmt::Display for CyclotomicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.residue)
    }
}
