use super::fixed::{FixedData, Vertex};
use super::graph::{ColoredSkeleton, Edge};
use crate::f2algebra::{CharMultiset, Character, MAX_RANK};
use crate::{Error, Result};

/// The standard linear action of `(Z/2)^n` on `RP^n` and its 1-skeleton,
/// the complete graph on the `n + 1` coordinate points.
///
/// Vertex `p0` has tangent characters `rho_1, ..., rho_n`; vertex `pj` has
/// `rho_j` together with `rho_i + rho_j` for every `i != j`. The edge
/// `p0 pj` is colored `rho_j` and the edge `pi pj` is colored `rho_i + rho_j`.
pub fn builtin_rpn(n: usize) -> Result<(FixedData, ColoredSkeleton)> {
    if n < 2 {
        return Err(Error::Input(format!("RP^n needs n >= 2, got {n}")));
    }
    if n > MAX_RANK {
        return Err(Error::Input(format!("RP^n needs n <= {MAX_RANK}, got {n}")));
    }
    let rho = |i: usize| Character::rho(n, i).expect("index in range");
    let mut vertices = vec![Vertex::new(
        "p0",
        CharMultiset::from_chars(n, (1..=n).map(rho))?,
    )];
    for j in 1..=n {
        let chars = (1..=n).map(|i| if i == j { rho(j) } else { rho(i) + rho(j) });
        vertices.push(Vertex::new(
            format!("p{j}"),
            CharMultiset::from_chars(n, chars)?,
        ));
    }
    let data = FixedData::new(n, n, vertices)?;
    let mut edges = Vec::new();
    for j in 1..=n {
        edges.push(Edge::new(0, j, rho(j)));
        for i in 1..j {
            edges.push(Edge::new(i, j, rho(i) + rho(j)));
        }
    }
    let skeleton = ColoredSkeleton::new(data.clone(), edges)?;
    Ok((data, skeleton))
}
