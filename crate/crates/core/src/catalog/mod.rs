//! Named algebras with their expected center facts and closed-form lemmas.

mod entries;
mod lemmas;
mod verify;

use std::collections::BTreeMap;

use crate::center::CenterBasis;
use crate::coeff::{Field, FieldElement};
use crate::engine::expr::parse_scalar;
use crate::engine::{ParamEnv, Presentation};
use crate::error::{Error, Result};

pub use lemmas::{lemma_oracle, lemma_oracles, LemmaOracle};
pub use verify::{
    associativity_check, verify_entry, verify_entries, Check, Status, VerifyOptions, ASSOCIATIVITY_ALGEBRAS,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParamKind {
    Int,
    Scalar,
}

/// One parameter slot. A `family` slot also accepts indexed names such as
/// `q12` for the slot `q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParamSpec {
    pub name: &'static str,
    pub kind: ParamKind,
    pub default: &'static str,
    pub family: bool,
}

const fn int(name: &'static str, default: &'static str) -> ParamSpec {
    ParamSpec { name, kind: ParamKind::Int, default, family: false }
}

const fn scalar(name: &'static str, default: &'static str) -> ParamSpec {
    ParamSpec { name, kind: ParamKind::Scalar, default, family: false }
}

const fn family(name: &'static str, default: &'static str) -> ParamSpec {
    ParamSpec { name, kind: ParamKind::Scalar, default, family: true }
}

/// Cancellation status asserted for an entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cancellation {
    /// Trivial center claimed, hence universally cancellative. With
    /// `generic_only` the claim is for parameters that are not roots of unity.
    UniversallyCancellative { generic_only: bool },
    Unclassified,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FactKind {
    /// The expression commutes with every generator.
    CentralElement(String),
    /// `Z(A) ∩ F_D` is spanned exactly by the listed expressions.
    BoundedCenterBasis { degree: u32, basis: Vec<String> },
    /// `Z(A) ∩ F_D = K`.
    TrivialUpTo(u32),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CenterFact {
    pub kind: FactKind,
    pub field: Field,
    /// Parameter overrides relative to the entry defaults.
    pub params: Vec<(&'static str, &'static str)>,
    /// Short human label used in check names.
    pub label: String,
}

impl CenterFact {
    pub fn mode(&self) -> FieldMode {
        FieldMode::of(self.field)
    }
}

/// Generic parameters versus a primitive root of unity of order `l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldMode {
    Generic,
    RootOfUnity(u32),
}

impl FieldMode {
    pub fn of(field: Field) -> Self {
        match field {
            Field::Cyclotomic(l) => FieldMode::RootOfUnity(l),
            _ => FieldMode::Generic,
        }
    }
}

pub struct CatalogEntry {
    pub id: &'static str,
    pub params: &'static [ParamSpec],
    pub default_field: Field,
    pub description: &'static str,
    pub cancellation: Cancellation,
    /// Degree used to corroborate the cancellation claim.
    pub cancel_degree: u32,
    builder: fn(&Params) -> Result<Presentation>,
    facts: fn() -> Vec<CenterFact>,
}

impl CatalogEntry {
    pub fn signature(&self) -> String {
        let parts: Vec<String> = self
            .params
            .iter()
            .map(|p| {
                let suffix = if p.family { "*" } else { "" };
                format!("{}{}={}", p.name, suffix, p.default)
            })
            .collect();
        format!("{}({})", self.id, parts.join(", "))
    }

    pub fn build(&self, params: &Params) -> Result<Presentation> {
        (self.builder)(params)
    }

    pub fn build_default(&self) -> Result<Presentation> {
        self.build(&self.default_params())
    }

    pub fn default_params(&self) -> Params {
        Params::new(self.default_field)
    }

    /// Parameters for `fact`: its field and overrides on top of the defaults.
    pub fn fact_params(&self, fact: &CenterFact) -> Params {
        let mut p = Params::new(fact.field);
        for (k, v) in &fact.params {
            p.set(k, v);
        }
        p
    }

    pub fn facts(&self) -> Vec<CenterFact> {
        (self.facts)()
    }

    fn accepts(&self, key: &str) -> bool {
        self.params.iter().any(|p| {
            p.name == key
                || (p.family
                    && key.strip_prefix(p.name).is_some_and(|rest| !rest.is_empty() && rest.chars().all(|c| c.is_ascii_digit())))
        })
    }

    /// Checks override names against the signature.
    pub fn check_params(&self, params: &Params) -> Result<()> {
        for k in params.values.keys() {
            if !self.accepts(k) {
                return Err(Error::BadParameter(format!("`{}` has no parameter `{k}`; signature {}", self.id, self.signature())));
            }
        }
        Ok(())
    }
}

/// Parameter values for a build: the coefficient field plus textual overrides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Params {
    pub field: Field,
    values: BTreeMap<String, String>,
}

impl Params {
    pub fn new(field: Field) -> Self {
        Params { field, values: BTreeMap::new() }
    }

    pub fn set(&mut self, key: &str, value: &str) {
        self.values.insert(key.to_string(), value.to_string());
    }

    pub fn with(mut self, key: &str, value: &str) -> Self {
        self.set(key, value);
        self
    }

    pub fn overrides(&self) -> &BTreeMap<String, String> {
        &self.values
    }

    fn raw<'a>(&'a self, key: &str, default: &'a str) -> &'a str {
        self.values.get(key).map_or(default, String::as_str)
    }

    pub fn int(&self, key: &str, default: &str) -> Result<u32> {
        let text = self.raw(key, default);
        text.trim().parse().map_err(|_| Error::BadParameter(format!("`{key}` must be a nonnegative integer, got `{text}`")))
    }

    pub fn scalar(&self, key: &str, default: &str) -> Result<FieldElement> {
        let text = self.raw(key, default);
        parse_scalar(text, self.field, &ParamEnv::new())
            .map_err(|e| Error::BadParameter(format!("`{key}` = `{text}` is not a scalar of {}: {e}", self.field)))
    }

    pub fn nonzero(&self, key: &str, default: &str) -> Result<FieldElement> {
        let v = self.scalar(key, default)?;
        if v.is_zero() {
            return Err(Error::BadParameter(format!("`{key}` must be nonzero")));
        }
        Ok(v)
    }
}

pub fn catalog() -> &'static [CatalogEntry] {
    entries::ENTRIES
}

pub fn entry(id: &str) -> Result<&'static CatalogEntry> {
    catalog().iter().find(|e| e.id == id).ok_or_else(|| Error::UnknownAlgebra(id.to_string()))
}

/// `(id, signature, description)` for every entry, in catalog order.
pub fn list_algebras() -> Vec<(&'static str, String, &'static str)> {
    catalog().iter().map(|e| (e.id, e.signature(), e.description)).collect()
}

pub fn build(id: &str, params: &Params) -> Result<Presentation> {
    let e = entry(id)?;
    e.check_params(params)?;
    e.build(params)
}

/// Facts of an entry that apply in the given mode.
pub fn expected_facts(id: &str, mode: FieldMode) -> Result<Vec<CenterFact>> {
    Ok(entry(id)?.facts().into_iter().filter(|f| f.mode() == mode).collect())
}

/// Outcome of comparing a computed center with the cancellation claim.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    UniversallyCancellative { degree: u32 },
    Conflict { degree: u32 },
    NotClassified,
    NotClassifiedRootOfUnity,
}

impl Classification {
    pub fn describe(&self) -> String {
        match self {
            Classification::UniversallyCancellative { degree } => {
                format!("universally cancellative (trivial center; corroborated to degree {degree})")
            }
            Classification::Conflict { degree } => {
                format!("CONFLICT: trivial center claimed but a nonconstant central element exists in degree <= {degree}")
            }
            Classification::NotClassified => "not classified".into(),
            Classification::NotClassifiedRootOfUnity => "not classified (root-of-unity parameters)".into(),
        }
    }

    pub fn is_conflict(&self) -> bool {
        matches!(self, Classification::Conflict { .. })
    }
}

/// Compares the cancellation marker of `id` with a computed bounded center.
pub fn classify_cancellation(id: &str, center: &CenterBasis, field: Field) -> Result<Classification> {
    let e = entry(id)?;
    Ok(match e.cancellation {
        Cancellation::Unclassified => Classification::NotClassified,
        Cancellation::UniversallyCancellative { generic_only: true } if field.is_root_of_unity() => {
            Classification::NotClassifiedRootOfUnity
        }
        Cancellation::UniversallyCancellative { .. } if center.is_trivial() => {
            Classification::UniversallyCancellative { degree: center.degree_bound }
        }
        Cancellation::UniversallyCancellative { .. } => Classification::Conflict { degree: center.degree_bound },
    })
}
