use crate::f2algebra::{Automorphism, CharMultiset, MAX_RANK};
use crate::skeleton::{FixedData, Vertex};
use crate::{Error, Limits, Result};

/// The `i`-fold diagonal action on the `i`-fold product: one vertex per
/// `i`-tuple of vertices (lexicographic), carrying the union of their
/// multisets. Tuple labels join the component labels with commas.
pub fn delta_product(d: &FixedData, i: usize, limits: &Limits) -> Result<FixedData> {
    if i == 0 {
        return Err(Error::Input("the diagonal product needs i >= 1".into()));
    }
    let tuples = u32::try_from(i)
        .ok()
        .and_then(|e| (d.len() as u64).checked_pow(e))
        .filter(|&t| t <= limits.max_tuples)
        .ok_or_else(|| {
            Error::Resource(format!(
                "{}^{i} vertex tuples exceed the limit of {}",
                d.len(),
                limits.max_tuples
            ))
        })?;
    let mut vertices: Vec<Vertex> = d.vertices().to_vec();
    for _ in 1..i {
        let mut next = Vec::with_capacity(vertices.len() * d.len());
        for a in &vertices {
            for b in d.vertices() {
                next.push(Vertex::new(
                    format!("{},{}", a.label, b.label),
                    a.chars.union(&b.chars)?,
                ));
            }
        }
        vertices = next;
    }
    debug_assert_eq!(vertices.len() as u64, tuples);
    FixedData::new(d.k(), i * d.n(), vertices)
}

/// Each vertex multiset repeated `i` times, `i` a power of two.
///
/// For such `i` this is what survives of [`delta_product`] after pairs
/// cancel.
pub fn delta_diagonal(d: &FixedData, i: usize) -> Result<FixedData> {
    if !i.is_power_of_two() {
        return Err(Error::Precondition(format!("{i} is not a power of two")));
    }
    let vertices = d
        .vertices()
        .iter()
        .map(|v| Vertex::new(v.label.clone(), v.chars.repeated(i)))
        .collect();
    FixedData::new(d.k(), i * d.n(), vertices)
}

/// Product with the extra `Z/2` acting by `+1` and `-1` on two copies.
///
/// Every character `rho` becomes `(rho, 0)` and `(rho, 1)` in rank `k + 1`,
/// the new coordinate being the last one.
pub fn omega(d: &FixedData) -> Result<FixedData> {
    let k = d.k() + 1;
    if k > MAX_RANK {
        return Err(Error::Input(format!(
            "omega would raise k beyond {MAX_RANK}"
        )));
    }
    let vertices = d
        .vertices()
        .iter()
        .map(|v| {
            let low = v.chars.map(k, |c| c.extend(false))?;
            let high = v.chars.map(k, |c| c.extend(true))?;
            Ok(Vertex::new(v.label.clone(), low.union(&high)?))
        })
        .collect::<Result<Vec<_>>>()?;
    FixedData::new(k, 2 * d.n(), vertices)
}

/// Relabels every character through the automorphism `m`.
pub fn sigma_map(d: &FixedData, m: &Automorphism) -> Result<FixedData> {
    if m.k() != d.k() {
        return Err(Error::Dimension {
            expected: d.k(),
            found: m.k(),
        });
    }
    let vertices = d
        .vertices()
        .iter()
        .map(|v| Ok(Vertex::new(v.label.clone(), map_multiset(&v.chars, m)?)))
        .collect::<Result<Vec<_>>>()?;
    FixedData::new(d.k(), d.n(), vertices)
}

pub(crate) fn map_multiset(s: &CharMultiset, m: &Automorphism) -> Result<CharMultiset> {
    s.map(s.k(), |c| m.apply(c))
}
