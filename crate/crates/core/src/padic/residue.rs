use std::fmt;

use super::Prime;

/// A point of the residue sphere ℙ¹(𝔽_p).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ResidueElement {
    Finite { p: Prime, value: u64 },
    Infinity,
}

impl ResidueElement {
    pub fn new(p: Prime, value: i64) -> Self {
        ResidueElement::Finite { p, value: value.rem_euclid(p.get() as i64) as u64 }
    }

    pub fn value(self) -> Option<u64> {
        match self {
            ResidueElement::Finite { value, .. } => Some(value),
            ResidueElement::Infinity => None,
        }
    }

    /// Field addition; `None` when either side is ∞.
    pub fn checked_add(self, rhs: Self) -> Option<Self> {
        match (self, rhs) {
            (ResidueElement::Finite { p, value: a }, ResidueElement::Finite { value: b, .. }) => {
                Some(ResidueElement::Finite { p, value: (a + b) % p.get() })
            }
            _ => None,
        }
    }

    pub fn checked_mul(self, rhs: Self) -> Option<Self> {
        match (self, rhs) {
            (ResidueElement::Finite { p, value: a }, ResidueElement::Finite { value: b, .. }) => {
                Some(ResidueElement::Finite { p, value: (a * b) % p.get() })
            }
            _ => None,
        }
    }
}

impl fmt::Display for ResidueElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ResidueElement::Finite { value, .. } => write!(f, "{value}"),
            ResidueElement::Infinity => f.write_str("inf"),
        }
    }
}

impl serde::Serialize for ResidueElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
