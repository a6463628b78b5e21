use std::collections::BTreeMap;

use crate::f2algebra::CharMultiset;
use crate::skeleton::{FixedData, Vertex};

/// Fixed data with pairwise distinct vertex multisets, sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PrimeSet {
    data: FixedData,
}

impl PrimeSet {
    pub fn data(&self) -> &FixedData {
        &self.data
    }

    pub fn into_data(self) -> FixedData {
        self.data
    }

    pub fn multisets(&self) -> Vec<CharMultiset> {
        self.data
            .vertices()
            .iter()
            .map(|v| v.chars.clone())
            .collect()
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }
}

/// Cancels equal multisets in pairs.
///
/// A multiset survives iff it occurs an odd number of times; the survivor
/// keeps the label of its first occurrence. Survivors are sorted by
/// multiset, which makes the operation idempotent.
pub fn prime_tangent_set(d: &FixedData) -> PrimeSet {
    let mut groups: BTreeMap<&CharMultiset, (usize, &str)> = BTreeMap::new();
    for v in d.vertices() {
        groups.entry(&v.chars).or_insert((0, &v.label)).0 += 1;
    }
    let vertices = groups
        .into_iter()
        .filter(|(_, (count, _))| count % 2 == 1)
        .map(|(chars, (_, label))| Vertex::new(label, chars.clone()))
        .collect();
    let data =
        FixedData::new(d.k(), d.n(), vertices).expect("labels and rank come from valid data");
    PrimeSet { data }
}

/// Whether the action bounds equivariantly: the prime tangent set is empty.
pub fn is_bounding(d: &FixedData) -> bool {
    prime_tangent_set(d).is_empty()
}
