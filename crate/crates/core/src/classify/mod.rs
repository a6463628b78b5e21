//! Existence and minimality results for few fixed points, and the
//! generators and recognizers of three- and four-point fixed data.

mod bounds;
mod four;
mod orbit;
mod three;

pub use bounds::{
    conner_floyd_count, exists_four, exists_three, four_point_ells, lattice_i, lower_bound,
    min_fixed_points, MinFixed, MinFixedSource,
};
pub use four::{generate_four, recognize_four, FourPointStructure};
pub use orbit::{enumerate_three_classes, gl_orbit, OrbitMethod};
pub use three::{generate_three, recognize_three, ThreePointStructure, MAX_ELL};

use crate::f2algebra::{is_independent, CharMultiset, Character};

/// A recognized structure and the vertex assignment it was found with:
/// `order[i]` is the index in the input of the vertex playing the `i`-th
/// role of the generated data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Recognized<T> {
    pub structure: T,
    pub order: Vec<usize>,
}

/// The common multiplicity of a nonempty multiset, if there is one.
fn uniform_multiplicity(s: &CharMultiset) -> Option<usize> {
    let (&(_, m), rest) = s.counts().split_first()?;
    rest.iter().all(|&(_, x)| x == m).then_some(m)
}

/// Greedily picks `count` independent characters, scanning in order.
fn first_independent(chars: &[Character], count: usize) -> Option<Vec<Character>> {
    let mut out: Vec<Character> = Vec::with_capacity(count);
    for &c in chars {
        if out.len() == count {
            break;
        }
        out.push(c);
        if !is_independent(&out).unwrap_or(false) {
            out.pop();
        }
    }
    (out.len() == count).then_some(out)
}

/// Permutations of `0..n` in lexicographic order.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for i in 0..n {
            if !prefix.contains(&i) {
                prefix.push(i);
                rec(prefix, n, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), n, &mut out);
    out
}
