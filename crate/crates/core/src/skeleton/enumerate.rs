use std::collections::HashMap;

use super::fixed::{congruent_mod, FixedData};
use super::graph::{ColoredSkeleton, Edge};
use crate::f2algebra::Character;
use crate::{Error, Limits, Result};

/// Result of [`enumerate_skeletons`]: the labeled skeletons in generation
/// order plus the number of disconnected candidates that were dropped.
#[derive(Clone, Debug)]
pub struct Enumeration {
    pub skeletons: Vec<ColoredSkeleton>,
    pub disconnected_discarded: usize,
}

impl Enumeration {
    /// Isomorphism classes as lists of indices into `skeletons`.
    pub fn classes(&self, mode: IsoMode) -> Result<Vec<Vec<usize>>> {
        isomorphism_classes(&self.skeletons, mode)
    }
}

/// Which vertex relabelings count as the same skeleton.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IsoMode {
    /// Forget colors and compare the underlying multigraphs.
    Underlying,
    /// Relabelings must carry each edge to an edge of the same color.
    Colored,
}

/// Edges of one color as vertex-index pairs.
type PairList = Vec<(usize, usize)>;

struct Budget {
    used: usize,
    max: usize,
}

impl Budget {
    fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.max {
            return Err(Error::Resource(format!(
                "skeleton enumeration exceeded {} partial states",
                self.max
            )));
        }
        Ok(())
    }
}

/// Every connected colored multigraph compatible with `d`.
///
/// Colors are handled independently in bitstring order. For a color `c`,
/// edges may join only pairs `p != q` whose multisets agree modulo `c`, and
/// each vertex gets exactly `mult(c)` of them; the per-color edge multisets
/// come out in lexicographic order of their sorted pair lists.
pub fn enumerate_skeletons(d: &FixedData, limits: &Limits) -> Result<Enumeration> {
    let report = d.validate();
    if !report.is_valid() {
        return Err(Error::Precondition(format!(
            "fixed data is invalid: {}",
            report.issues[0]
        )));
    }
    let mut budget = Budget {
        used: 0,
        max: usize::try_from(limits.max_states).unwrap_or(usize::MAX),
    };
    let mut colors: Vec<Character> = d
        .vertices()
        .iter()
        .flat_map(|v| v.chars.support())
        .collect();
    colors.sort();
    colors.dedup();

    let mut per_color: Vec<(Character, Vec<PairList>)> = Vec::new();
    for &c in &colors {
        let choices = color_realizations(d, c, &mut budget)?;
        if choices.is_empty() {
            return Ok(Enumeration {
                skeletons: Vec::new(),
                disconnected_discarded: 0,
            });
        }
        per_color.push((c, choices));
    }

    let mut skeletons = Vec::new();
    let mut discarded = 0;
    let mut odometer = vec![0usize; per_color.len()];
    loop {
        budget.tick()?;
        let edges: Vec<Edge> = per_color
            .iter()
            .zip(&odometer)
            .flat_map(|((c, choices), &i)| {
                choices[i].iter().map(move |&(u, v)| Edge::new(u, v, *c))
            })
            .collect();
        let g = ColoredSkeleton::new(d.clone(), edges)?;
        if g.is_connected() {
            skeletons.push(g);
        } else {
            discarded += 1;
        }
        // advance the last color fastest so the output is lexicographic by color
        let mut pos = per_color.len();
        loop {
            if pos == 0 {
                return Ok(Enumeration {
                    skeletons,
                    disconnected_discarded: discarded,
                });
            }
            pos -= 1;
            odometer[pos] += 1;
            if odometer[pos] < per_color[pos].1.len() {
                break;
            }
            odometer[pos] = 0;
        }
    }
}

/// All loopless `c`-colored edge multisets on allowed pairs realizing the
/// prescribed `c`-degrees.
fn color_realizations(d: &FixedData, c: Character, budget: &mut Budget) -> Result<Vec<PairList>> {
    let need: Vec<usize> = (0..d.len()).map(|i| d.multiset(i).mult(c)).collect();
    if need.iter().sum::<usize>() % 2 == 1 {
        return Ok(Vec::new());
    }
    let partners: Vec<Vec<usize>> = (0..d.len())
        .map(|u| {
            (u + 1..d.len())
                .filter(|&v| {
                    need[u] > 0 && need[v] > 0 && congruent_mod(d.multiset(u), d.multiset(v), c)
                })
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut remaining = need;
    let mut current = Vec::new();
    fill_vertex(0, &partners, &mut remaining, &mut current, &mut out, budget)?;
    Ok(out)
}

/// Saturates vertex `u` using partners after it, then moves on.
fn fill_vertex(
    u: usize,
    partners: &[Vec<usize>],
    remaining: &mut Vec<usize>,
    current: &mut Vec<(usize, usize)>,
    out: &mut Vec<Vec<(usize, usize)>>,
    budget: &mut Budget,
) -> Result<()> {
    budget.tick()?;
    let Some(u) = (u..remaining.len()).find(|&x| remaining[x] > 0) else {
        out.push(current.clone());
        return Ok(());
    };
    distribute(u, 0, partners, remaining, current, out, budget)
}

/// Chooses how many of `u`'s remaining edges go to `partners[u][j]`, larger
/// counts first.
fn distribute(
    u: usize,
    j: usize,
    partners: &[Vec<usize>],
    remaining: &mut Vec<usize>,
    current: &mut Vec<(usize, usize)>,
    out: &mut Vec<Vec<(usize, usize)>>,
    budget: &mut Budget,
) -> Result<()> {
    if remaining[u] == 0 {
        return fill_vertex(u + 1, partners, remaining, current, out, budget);
    }
    let Some(&v) = partners[u].get(j) else {
        return Ok(());
    };
    budget.tick()?;
    let most = remaining[u].min(remaining[v]);
    for t in (0..=most).rev() {
        remaining[u] -= t;
        remaining[v] -= t;
        current.extend(std::iter::repeat_n((u, v), t));
        let r = distribute(u, j + 1, partners, remaining, current, out, budget);
        current.truncate(current.len() - t);
        remaining[u] += t;
        remaining[v] += t;
        r?;
    }
    Ok(())
}

/// Vertex-count ceiling for brute-force isomorphism testing.
pub const MAX_ISO_VERTICES: usize = 8;

/// Groups skeletons into isomorphism classes, in order of first appearance.
pub fn isomorphism_classes(
    skeletons: &[ColoredSkeleton],
    mode: IsoMode,
) -> Result<Vec<Vec<usize>>> {
    let mut index: HashMap<Vec<(usize, usize, u32)>, usize> = HashMap::new();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (i, g) in skeletons.iter().enumerate() {
        let key = canonical_form(g, mode)?;
        match index.get(&key) {
            Some(&c) => classes[c].push(i),
            None => {
                index.insert(key, classes.len());
                classes.push(vec![i]);
            }
        }
    }
    Ok(classes)
}

/// Lexicographically least relabeled edge list over all vertex permutations.
pub fn canonical_form(g: &ColoredSkeleton, mode: IsoMode) -> Result<Vec<(usize, usize, u32)>> {
    let nv = g.vertex_count();
    if nv > MAX_ISO_VERTICES {
        return Err(Error::Resource(format!(
            "isomorphism testing is limited to {MAX_ISO_VERTICES} vertices, got {nv}"
        )));
    }
    let relabel = |perm: &[usize]| {
        let mut e: Vec<(usize, usize, u32)> = g
            .edges()
            .iter()
            .map(|e| {
                let (a, b) = (perm[e.u], perm[e.v]);
                let color = match mode {
                    IsoMode::Colored => e.color.bits(),
                    IsoMode::Underlying => 0,
                };
                (a.min(b), a.max(b), color)
            })
            .collect();
        e.sort_unstable();
        e
    };
    let mut perm: Vec<usize> = (0..nv).collect();
    let mut best = relabel(&perm);
    while next_permutation(&mut perm) {
        let cand = relabel(&perm);
        if cand < best {
            best = cand;
        }
    }
    Ok(best)
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len())
        .rev()
        .find(|&j| p[j] > p[i - 1])
        .expect("a larger element exists");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutations_are_exhaustive() {
        let mut p = vec![0, 1, 2, 3];
        let mut count = 1;
        while next_permutation(&mut p) {
            count += 1;
        }
        assert_eq!(count, 24);
        assert_eq!(p, vec![3, 2, 1, 0]);
    }
}
