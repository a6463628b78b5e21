use std::collections::HashSet;
use std::fmt;

use crate::f2algebra::{span_dim, CharMultiset, Character};
use crate::{Error, Result};

/// A fixed point: a label and the characters of its tangent representation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vertex {
    pub label: String,
    pub chars: CharMultiset,
}

impl Vertex {
    pub fn new(label: impl Into<String>, chars: CharMultiset) -> Self {
        Vertex {
            label: label.into(),
            chars,
        }
    }
}

/// The tangent representations at all fixed points of an action of
/// `(Z/2)^k` on an `n`-manifold.
///
/// Construction only enforces a common `k` and distinct labels; the size
/// and spanning conditions are reported by [`FixedData::validate`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FixedData {
    k: usize,
    n: usize,
    vertices: Vec<Vertex>,
}

impl FixedData {
    pub fn new(k: usize, n: usize, vertices: Vec<Vertex>) -> Result<Self> {
        let mut seen = HashSet::new();
        for v in &vertices {
            if v.chars.k() != k {
                return Err(Error::Dimension {
                    expected: k,
                    found: v.chars.k(),
                });
            }
            if !seen.insert(v.label.as_str()) {
                return Err(Error::Input(format!(
                    "duplicate vertex label {:?}",
                    v.label
                )));
            }
        }
        Ok(FixedData { k, n, vertices })
    }

    /// Labels the multisets `prefix0`, `prefix1`, ...
    pub fn from_multisets(
        k: usize,
        n: usize,
        prefix: &str,
        sets: Vec<CharMultiset>,
    ) -> Result<Self> {
        let vertices = sets
            .into_iter()
            .enumerate()
            .map(|(i, s)| Vertex::new(format!("{prefix}{i}"), s))
            .collect();
        FixedData::new(k, n, vertices)
    }

    pub fn empty(k: usize, n: usize) -> Self {
        FixedData {
            k,
            n,
            vertices: Vec::new(),
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v.label == label)
    }

    pub fn multiset(&self, i: usize) -> &CharMultiset {
        &self.vertices[i].chars
    }

    /// Vertex multisets sorted: the data as an unordered family.
    pub fn family(&self) -> Vec<CharMultiset> {
        let mut v: Vec<CharMultiset> = self.vertices.iter().map(|v| v.chars.clone()).collect();
        v.sort();
        v
    }

    /// Whether the vertex multisets are pairwise distinct.
    pub fn has_distinct_multisets(&self) -> bool {
        let f = self.family();
        f.windows(2).all(|w| w[0] != w[1])
    }

    pub fn validate(&self) -> FixedDataReport {
        validate_fixed_data(self)
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_valid()
    }

    /// Whether (P2) holds between two vertices for the color `c`.
    pub fn check_p2(&self, p: &str, q: &str, c: Character) -> Result<bool> {
        let lookup = |l: &str| {
            self.index_of(l)
                .ok_or_else(|| Error::Input(format!("unknown vertex label {l:?}")))
        };
        let (a, b) = (lookup(p)?, lookup(q)?);
        if c.k() != self.k {
            return Err(Error::Dimension {
                expected: self.k,
                found: c.k(),
            });
        }
        if c.is_zero() {
            return Err(Error::Input("(P2) needs a nonzero color".into()));
        }
        Ok(congruent_mod(self.multiset(a), self.multiset(b), c))
    }
}

impl fmt::Display for FixedData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "k = {}, n = {}, {} fixed points",
            self.k,
            self.n,
            self.len()
        )?;
        for v in &self.vertices {
            writeln!(f, "  {}: {}", v.label, v.chars)?;
        }
        Ok(())
    }
}

/// `a ≡ b mod c`: for every character `t`,
/// `mult_a(t) + mult_a(t + c) = mult_b(t) + mult_b(t + c)`.
///
/// Taking `t = c` forces the multiplicities of `c` itself to agree.
pub fn congruent_mod(a: &CharMultiset, b: &CharMultiset, c: Character) -> bool {
    let class = |s: &CharMultiset, t: Character| s.mult(t) + s.mult(t + c);
    a.support()
        .into_iter()
        .chain(b.support())
        .all(|t| class(a, t) == class(b, t))
}

/// The `check_p2` operation.
pub fn check_p2(d: &FixedData, p: &str, q: &str, c: Character) -> Result<bool> {
    d.check_p2(p, q, c)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FixedDataIssue {
    WrongSize {
        label: String,
        size: usize,
        n: usize,
    },
    ZeroCharacter {
        label: String,
    },
    NotSpanning {
        label: String,
        span: usize,
        k: usize,
    },
}

impl FixedDataIssue {
    pub fn label(&self) -> &str {
        match self {
            FixedDataIssue::WrongSize { label, .. }
            | FixedDataIssue::ZeroCharacter { label }
            | FixedDataIssue::NotSpanning { label, .. } => label,
        }
    }
}

impl fmt::Display for FixedDataIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FixedDataIssue::WrongSize { label, size, n } => {
                write!(f, "vertex {label}: multiset has size {size}, expected {n}")
            }
            FixedDataIssue::ZeroCharacter { label } => {
                write!(f, "vertex {label}: contains the trivial character")
            }
            FixedDataIssue::NotSpanning { label, span, k } => {
                write!(f, "vertex {label}: characters span dimension {span} < {k}")
            }
        }
    }
}

/// Outcome of [`validate_fixed_data`], issues in vertex order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FixedDataReport {
    pub issues: Vec<FixedDataIssue>,
}

impl FixedDataReport {
    pub fn is_valid(&self) -> bool {
        self.issues.is_empty()
    }

    pub fn first_failing_vertex(&self) -> Option<&str> {
        self.issues.first().map(FixedDataIssue::label)
    }
}

/// Per-vertex checks: size `n`, no trivial character, and (P1).
pub fn validate_fixed_data(d: &FixedData) -> FixedDataReport {
    let mut issues = Vec::new();
    for v in d.vertices() {
        let size = v.chars.size();
        if size != d.n() {
            issues.push(FixedDataIssue::WrongSize {
                label: v.label.clone(),
                size,
                n: d.n(),
            });
        }
        if v.chars.contains_zero() {
            issues.push(FixedDataIssue::ZeroCharacter {
                label: v.label.clone(),
            });
        }
        let span = span_dim(&v.chars.support()).expect("vertex characters share k");
        if span != d.k() {
            issues.push(FixedDataIssue::NotSpanning {
                label: v.label.clone(),
                span,
                k: d.k(),
            });
        }
    }
    FixedDataReport { issues }
}
