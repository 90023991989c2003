//! Canonical rendering of results as text or JSON.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::algebra::TPoly;
use crate::partition::Partition;
use crate::universal::UCIndex;
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Basis {
    Schur,
    Hl,
    Uc,
}

impl Basis {
    pub fn name(self) -> &'static str {
        match self {
            Basis::Schur => "schur",
            Basis::Hl => "hl",
            Basis::Uc => "uc",
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            Basis::Schur => "S",
            Basis::Hl => "Q",
            Basis::Uc => "S",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Key {
    Part(Partition),
    Pair(UCIndex),
}

impl Key {
    fn to_json(&self) -> Value {
        match self {
            Key::Part(p) => json!(p.parts()),
            Key::Pair(k) => json!({"la": k.la.parts(), "mu": k.mu.parts()}),
        }
    }

    fn label(&self, basis: Basis) -> String {
        match self {
            Key::Part(p) => format!("{}{p}", basis.symbol()),
            Key::Pair(k) => format!("{}{k}", basis.symbol()),
        }
    }
}

/// A result ready for printing: terms in canonical order (keys descending).
#[derive(Clone, Debug)]
pub struct Rendered {
    pub basis: Basis,
    pub terms: Vec<(Key, TPoly)>,
}

impl Rendered {
    /// Drops zero terms and sorts keys descending.
    pub fn new(basis: Basis, terms: impl IntoIterator<Item = (Key, TPoly)>) -> Self {
        let mut terms: Vec<(Key, TPoly)> = terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        Self { basis, terms }
    }

    /// A single coefficient; kept even when zero.
    pub fn single(basis: Basis, key: Key, c: TPoly) -> Self {
        Self { basis, terms: vec![(key, c)] }
    }

    /// Every coefficient evaluated at `t`; vanishing terms dropped unless this
    /// is a single-coefficient result.
    pub fn eval_at(self, t: i64) -> Self {
        let single = self.terms.len() == 1;
        let t = BigInt::from(t);
        let terms = self
            .terms
            .into_iter()
            .map(|(k, c)| (k, TPoly::constant(c.eval(&t))))
            .filter(|(_, c)| single || !c.is_zero())
            .collect();
        Self { basis: self.basis, terms }
    }

    pub fn render(&self, format: Format) -> Result<String, Error> {
        match format {
            Format::Text => Ok(self.text()),
            Format::Json => self.json().map(|v| v.to_string()),
        }
    }

    fn text(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .map(|(k, c)| format!("{}: {c}", k.label(self.basis)))
            .collect::<Vec<_>>()
            .join("\n")
    }

    fn json(&self) -> Result<Value, Error> {
        let terms = self
            .terms
            .iter()
            .map(|(k, c)| Ok(json!({"key": k.to_json(), "coeff": coeff_json(c)?})))
            .collect::<Result<Vec<Value>, Error>>()?;
        Ok(json!({"basis": self.basis.name(), "terms": terms}))
    }
}

fn coeff_json(c: &TPoly) -> Result<Value, Error> {
    if c.is_zero() {
        return Ok(json!([0]));
    }
    let ints = c
        .coeffs()
        .iter()
        .map(|x| x.to_i64().ok_or_else(|| Error::Invariant(format!("coefficient {x} exceeds 64 bits"))))
        .collect::<Result<Vec<i64>, Error>>()?;
    Ok(json!(ints))
}
