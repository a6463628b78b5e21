use std::collections::{BTreeMap, VecDeque};

use crate::cobordism::sigma_map;
use crate::f2algebra::{Automorphism, CharMultiset};
use crate::skeleton::FixedData;
use crate::{Error, Limits, Result};

use super::bounds::exists_three;
use super::three::{generate_three, ThreePointStructure};

/// How the `GL(k, F_2)` orbit of some fixed data is explored.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrbitMethod {
    /// Apply every group element; only for `k <= 4`.
    BruteForce,
    /// Breadth-first closure under elementary transvections.
    Generators,
    /// Brute force for `k <= 4`, generators otherwise.
    Auto,
}

/// The distinct images of `d` under `GL(k, F_2)`, compared as unordered
/// families of multisets and returned sorted by family.
pub fn gl_orbit(d: &FixedData, method: OrbitMethod, limits: &Limits) -> Result<Vec<FixedData>> {
    let k = d.k();
    let method = match method {
        OrbitMethod::Auto if k <= 4 => OrbitMethod::BruteForce,
        OrbitMethod::Auto => OrbitMethod::Generators,
        m => m,
    };
    let cap = usize::try_from(limits.max_states).unwrap_or(usize::MAX);
    let mut seen: BTreeMap<Vec<CharMultiset>, FixedData> = BTreeMap::new();
    match method {
        OrbitMethod::BruteForce => {
            for m in Automorphism::all(k)? {
                let image = sigma_map(d, &m)?;
                seen.entry(image.family()).or_insert(image);
            }
        }
        _ => {
            let generators = Automorphism::generators(k);
            let mut queue = VecDeque::from([d.clone()]);
            seen.insert(d.family(), d.clone());
            while let Some(current) = queue.pop_front() {
                for g in &generators {
                    let image = sigma_map(&current, g)?;
                    let key = image.family();
                    if !seen.contains_key(&key) {
                        if seen.len() >= cap {
                            return Err(Error::Resource(format!("orbit exceeds {cap} elements")));
                        }
                        seen.insert(key, image.clone());
                        queue.push_back(image);
                    }
                }
            }
        }
    }
    Ok(seen.into_values().collect())
}

/// All three-point fixed data of type `(2^l, k)` up to cobordism: the
/// orbit of the standard structure under automorphisms.
pub fn enumerate_three_classes(
    k: usize,
    ell: u32,
    method: OrbitMethod,
    limits: &Limits,
) -> Result<Vec<FixedData>> {
    let n = 1u64.checked_shl(ell).unwrap_or(0);
    if !exists_three(n, k as u64) {
        return Err(Error::Precondition(format!(
            "no three-point actions for k = {k}, l = {ell}"
        )));
    }
    let base = generate_three(&ThreePointStructure::standard(k, ell)?)?;
    gl_orbit(&base, method, limits)
}
