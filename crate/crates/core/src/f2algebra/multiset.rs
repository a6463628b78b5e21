use std::collections::BTreeMap;
use std::fmt;

use super::character::Character;
use super::poly::F2Poly;
use crate::{Error, Limits, Result};

/// A multiset of characters, kept sorted so that equality, ordering and
/// hashing are structural.
///
/// This is the data attached to one fixed point: the characters of the
/// irreducible summands of its tangent representation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CharMultiset {
    k: usize,
    entries: Vec<(Character, usize)>,
}

impl CharMultiset {
    pub fn empty(k: usize) -> Self {
        CharMultiset {
            k,
            entries: Vec::new(),
        }
    }

    pub fn from_chars(k: usize, chars: impl IntoIterator<Item = Character>) -> Result<Self> {
        let mut counts: BTreeMap<Character, usize> = BTreeMap::new();
        for c in chars {
            if c.k() != k {
                return Err(Error::Dimension {
                    expected: k,
                    found: c.k(),
                });
            }
            *counts.entry(c).or_default() += 1;
        }
        Ok(CharMultiset {
            k,
            entries: counts.into_iter().collect(),
        })
    }

    pub fn from_counts(
        k: usize,
        counts: impl IntoIterator<Item = (Character, usize)>,
    ) -> Result<Self> {
        let mut acc: BTreeMap<Character, usize> = BTreeMap::new();
        for (c, m) in counts {
            if c.k() != k {
                return Err(Error::Dimension {
                    expected: k,
                    found: c.k(),
                });
            }
            if m > 0 {
                *acc.entry(c).or_default() += m;
            }
        }
        Ok(CharMultiset {
            k,
            entries: acc.into_iter().collect(),
        })
    }

    /// Parses bitstrings, one per copy.
    pub fn parse<S: AsRef<str>>(k: usize, chars: &[S]) -> Result<Self> {
        let parsed = chars
            .iter()
            .map(|s| s.as_ref().parse::<Character>())
            .collect::<Result<Vec<_>>>()?;
        CharMultiset::from_chars(k, parsed)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Total multiplicity.
    pub fn size(&self) -> usize {
        self.entries.iter().map(|(_, m)| m).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn mult(&self, c: Character) -> usize {
        self.entries
            .binary_search_by(|(x, _)| x.cmp(&c))
            .map(|i| self.entries[i].1)
            .unwrap_or(0)
    }

    /// `(character, multiplicity)` pairs in bitstring order.
    pub fn counts(&self) -> &[(Character, usize)] {
        &self.entries
    }

    /// Distinct characters in bitstring order.
    pub fn support(&self) -> Vec<Character> {
        self.entries.iter().map(|(c, _)| *c).collect()
    }

    /// Every copy, in bitstring order.
    pub fn iter(&self) -> impl Iterator<Item = Character> + '_ {
        self.entries
            .iter()
            .flat_map(|&(c, m)| std::iter::repeat_n(c, m))
    }

    pub fn to_vec(&self) -> Vec<Character> {
        self.iter().collect()
    }

    pub fn contains_zero(&self) -> bool {
        self.entries.iter().any(|(c, _)| c.is_zero())
    }

    /// Multiset sum `self ⊎ other`.
    pub fn union(&self, other: &CharMultiset) -> Result<CharMultiset> {
        self.check_k(other)?;
        CharMultiset::from_counts(
            self.k,
            self.entries.iter().chain(other.entries.iter()).copied(),
        )
    }

    /// Multiset intersection (pointwise minimum).
    pub fn intersection(&self, other: &CharMultiset) -> Result<CharMultiset> {
        self.check_k(other)?;
        CharMultiset::from_counts(
            self.k,
            self.entries.iter().map(|&(c, m)| (c, m.min(other.mult(c)))),
        )
    }

    /// Multiset difference (pointwise truncated subtraction).
    pub fn difference(&self, other: &CharMultiset) -> Result<CharMultiset> {
        self.check_k(other)?;
        CharMultiset::from_counts(
            self.k,
            self.entries
                .iter()
                .map(|&(c, m)| (c, m.saturating_sub(other.mult(c)))),
        )
    }

    /// Every multiplicity multiplied by `times`.
    pub fn repeated(&self, times: usize) -> CharMultiset {
        CharMultiset {
            k: self.k,
            entries: if times == 0 {
                Vec::new()
            } else {
                self.entries.iter().map(|&(c, m)| (c, m * times)).collect()
            },
        }
    }

    /// Image under a map of characters (possibly into another rank).
    pub fn map(
        &self,
        k: usize,
        f: impl Fn(Character) -> Result<Character>,
    ) -> Result<CharMultiset> {
        let mapped = self
            .entries
            .iter()
            .map(|&(c, m)| f(c).map(|d| (d, m)))
            .collect::<Result<Vec<_>>>()?;
        CharMultiset::from_counts(k, mapped)
    }

    fn check_k(&self, other: &CharMultiset) -> Result<()> {
        if self.k != other.k {
            return Err(Error::Dimension {
                expected: self.k,
                found: other.k,
            });
        }
        Ok(())
    }
}

impl fmt::Display for CharMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, c) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for CharMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Product of the members of `s` as linear forms: the equivariant Euler
/// class of the representation.
pub fn euler_class(s: &CharMultiset) -> Result<F2Poly> {
    euler_class_with(s, &Limits::default())
}

pub fn euler_class_with(s: &CharMultiset, limits: &Limits) -> Result<F2Poly> {
    if s.contains_zero() {
        return Err(Error::InvalidRepresentation(format!(
            "{s} contains the trivial character"
        )));
    }
    let mut acc = F2Poly::one(s.k());
    for &(c, m) in s.counts() {
        let factor = F2Poly::linear(c).checked_pow(m as u64, limits)?;
        acc = acc.checked_mul(&factor, limits)?;
    }
    Ok(acc)
}
