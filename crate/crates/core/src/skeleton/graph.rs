use std::collections::BTreeMap;
use std::fmt;
use std::fmt::Write as _;

use super::fixed::{congruent_mod, FixedData};
use crate::f2algebra::{span_dim, Character};
use crate::{Error, Result};

/// One edge, endpoints given as vertex indices into the fixed data.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub color: Character,
}

impl Edge {
    /// Stores the endpoints with `u <= v`.
    pub fn new(u: usize, v: usize, color: Character) -> Self {
        Edge {
            u: u.min(v),
            v: u.max(v),
            color,
        }
    }
}

/// A colored multigraph on the fixed points. Edges are kept sorted, so two
/// skeletons with the same edge multiset compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ColoredSkeleton {
    data: FixedData,
    edges: Vec<Edge>,
}

impl ColoredSkeleton {
    pub fn new(data: FixedData, edges: Vec<Edge>) -> Result<Self> {
        for e in &edges {
            if e.u >= data.len() || e.v >= data.len() {
                return Err(Error::Input(format!(
                    "edge ({}, {}) refers to a missing vertex",
                    e.u, e.v
                )));
            }
            if e.color.k() != data.k() {
                return Err(Error::Dimension {
                    expected: data.k(),
                    found: e.color.k(),
                });
            }
        }
        let mut edges: Vec<Edge> = edges
            .into_iter()
            .map(|e| Edge::new(e.u, e.v, e.color))
            .collect();
        edges.sort();
        Ok(ColoredSkeleton { data, edges })
    }

    /// Builds from `(label, label, color)` triples.
    pub fn from_labeled_edges(data: FixedData, edges: &[(&str, &str, Character)]) -> Result<Self> {
        let idx = |l: &str| {
            data.index_of(l)
                .ok_or_else(|| Error::Input(format!("unknown vertex label {l:?}")))
        };
        let edges = edges
            .iter()
            .map(|&(u, v, c)| Ok(Edge::new(idx(u)?, idx(v)?, c)))
            .collect::<Result<Vec<_>>>()?;
        ColoredSkeleton::new(data, edges)
    }

    pub fn data(&self) -> &FixedData {
        &self.data
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.data.len()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.data.vertices()[i].label
    }

    pub fn degree(&self, i: usize) -> usize {
        self.edges
            .iter()
            .map(|e| usize::from(e.u == i) + usize::from(e.v == i))
            .sum()
    }

    /// Number of `c`-colored edge endpoints at vertex `i`.
    pub fn color_degree(&self, i: usize, c: Character) -> usize {
        self.edges
            .iter()
            .filter(|e| e.color == c)
            .map(|e| usize::from(e.u == i) + usize::from(e.v == i))
            .sum()
    }

    /// Number of parallel edges between each joined pair `u < v`.
    pub fn pair_multiplicities(&self) -> BTreeMap<(usize, usize), usize> {
        let mut m = BTreeMap::new();
        for e in &self.edges {
            *m.entry((e.u, e.v)).or_insert(0) += 1;
        }
        m
    }

    /// Component index of every vertex, restricted to edges accepted by `keep`.
    fn components_by(&self, keep: impl Fn(&Edge) -> bool) -> Vec<usize> {
        let mut parent: Vec<usize> = (0..self.vertex_count()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for e in self.edges.iter().filter(|e| keep(e)) {
            let (a, b) = (find(&mut parent, e.u), find(&mut parent, e.v));
            if a != b {
                parent[a] = b;
            }
        }
        (0..self.vertex_count())
            .map(|x| find(&mut parent, x))
            .collect()
    }

    pub fn component_count(&self) -> usize {
        let mut roots = self.components_by(|_| true);
        roots.sort_unstable();
        roots.dedup();
        roots.len()
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// Distinct edge colors in bitstring order.
    pub fn colors(&self) -> Vec<Character> {
        let mut c: Vec<Character> = self.edges.iter().map(|e| e.color).collect();
        c.sort();
        c.dedup();
        c
    }

    pub fn validate(&self) -> SkeletonReport {
        validate_skeleton(self)
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_valid()
    }

    /// Graphviz rendering: one line per parallel edge, labeled by its color.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "graph {} {{", dot_id(name));
        for v in self.data.vertices() {
            let _ = writeln!(
                out,
                "  {} [label={}];",
                dot_id(&v.label),
                dot_id(&v.chars.to_string())
            );
        }
        for e in &self.edges {
            let _ = writeln!(
                out,
                "  {} -- {} [label=\"{}\"];",
                dot_id(self.label(e.u)),
                dot_id(self.label(e.v)),
                e.color
            );
        }
        out.push_str("}\n");
        out
    }
}

fn dot_id(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

impl fmt::Display for ColoredSkeleton {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .edges
            .iter()
            .map(|e| format!("{}-{}:{}", self.label(e.u), self.label(e.v), e.color))
            .collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SkeletonIssue {
    Loop {
        label: String,
    },
    ZeroColor {
        u: String,
        v: String,
    },
    Degree {
        label: String,
        degree: usize,
        n: usize,
    },
    ColorDegree {
        label: String,
        color: Character,
        degree: usize,
        mult: usize,
    },
    NotSpanning {
        label: String,
        span: usize,
        k: usize,
    },
    P2 {
        u: String,
        v: String,
        color: Character,
    },
    UnevenColorComponent {
        color: Character,
    },
    Disconnected {
        components: usize,
    },
}

impl fmt::Display for SkeletonIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SkeletonIssue::Loop { label } => write!(f, "loop at {label}"),
            SkeletonIssue::ZeroColor { u, v } => write!(f, "edge {u}-{v} has the trivial color"),
            SkeletonIssue::Degree { label, degree, n } => {
                write!(f, "vertex {label} has degree {degree}, expected {n}")
            }
            SkeletonIssue::ColorDegree {
                label,
                color,
                degree,
                mult,
            } => write!(
                f,
                "vertex {label} meets {degree} edges colored {color}, but its multiset has {mult}"
            ),
            SkeletonIssue::NotSpanning { label, span, k } => {
                write!(f, "vertex {label}: colors span dimension {span} < {k}")
            }
            SkeletonIssue::P2 { u, v, color } => {
                write!(
                    f,
                    "edge {u}-{v} colored {color}: endpoint multisets differ modulo {color}"
                )
            }
            SkeletonIssue::UnevenColorComponent { color } => write!(
                f,
                "the {color}-colored subgraph has non-constant degree on a component"
            ),
            SkeletonIssue::Disconnected { components } => {
                write!(f, "graph has {components} connected components")
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SkeletonReport {
    pub issues: Vec<SkeletonIssue>,
}

impl SkeletonReport {
    pub fn is_valid(&self) -> bool {
        self.issues.is_empty()
    }
}

/// Checks looplessness, nonzero colors, regularity color by color,
/// connectivity, (P1), (P2) on every edge, and constant color-degree on the
/// components of each color class.
pub fn validate_skeleton(g: &ColoredSkeleton) -> SkeletonReport {
    let d = g.data();
    let mut issues = Vec::new();
    for e in g.edges() {
        if e.u == e.v {
            issues.push(SkeletonIssue::Loop {
                label: g.label(e.u).to_string(),
            });
        }
        if e.color.is_zero() {
            issues.push(SkeletonIssue::ZeroColor {
                u: g.label(e.u).to_string(),
                v: g.label(e.v).to_string(),
            });
        }
    }
    let mut colors = g.colors();
    for v in d.vertices() {
        colors.extend(v.chars.support());
    }
    colors.sort();
    colors.dedup();

    for (i, v) in d.vertices().iter().enumerate() {
        let degree = g.degree(i);
        if degree != d.n() {
            issues.push(SkeletonIssue::Degree {
                label: v.label.clone(),
                degree,
                n: d.n(),
            });
        }
        for &c in &colors {
            let (deg, mult) = (g.color_degree(i, c), v.chars.mult(c));
            if deg != mult {
                issues.push(SkeletonIssue::ColorDegree {
                    label: v.label.clone(),
                    color: c,
                    degree: deg,
                    mult,
                });
            }
        }
        let span = span_dim(&v.chars.support()).expect("vertex characters share k");
        if span != d.k() {
            issues.push(SkeletonIssue::NotSpanning {
                label: v.label.clone(),
                span,
                k: d.k(),
            });
        }
    }

    for e in g.edges() {
        if e.u != e.v
            && !e.color.is_zero()
            && !congruent_mod(d.multiset(e.u), d.multiset(e.v), e.color)
        {
            issues.push(SkeletonIssue::P2 {
                u: g.label(e.u).to_string(),
                v: g.label(e.v).to_string(),
                color: e.color,
            });
        }
    }

    for c in g.colors() {
        let comp = g.components_by(|e| e.color == c);
        let mut seen: BTreeMap<usize, usize> = BTreeMap::new();
        let uneven = (0..g.vertex_count()).any(|i| {
            let deg = g.color_degree(i, c);
            deg > 0 && *seen.entry(comp[i]).or_insert(deg) != deg
        });
        if uneven {
            issues.push(SkeletonIssue::UnevenColorComponent { color: c });
        }
    }

    let components = g.component_count();
    if components > 1 {
        issues.push(SkeletonIssue::Disconnected { components });
    }
    SkeletonReport { issues }
}

/// A vertex pair with distinct multisets joined by too many parallel edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeBoundViolation {
    pub u: String,
    pub v: String,
    pub count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeBoundReport {
    pub bound: i64,
    pub violations: Vec<EdgeBoundViolation>,
}

impl EdgeBoundReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Parallel edges between vertices with different multisets number at most
/// `n - k + 1`.
pub fn edge_bound_check(g: &ColoredSkeleton) -> EdgeBoundReport {
    let d = g.data();
    let bound = d.n() as i64 - d.k() as i64 + 1;
    let violations = g
        .pair_multiplicities()
        .into_iter()
        .filter(|&((u, v), count)| d.multiset(u) != d.multiset(v) && count as i64 > bound)
        .map(|((u, v), count)| EdgeBoundViolation {
            u: g.label(u).to_string(),
            v: g.label(v).to_string(),
            count,
        })
        .collect();
    EdgeBoundReport { bound, violations }
}
