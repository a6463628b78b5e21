use crate::f2algebra::{is_independent, odd_sums, CharMultiset, Character, MAX_RANK};
use crate::skeleton::{FixedData, Vertex};
use crate::{Error, Result};

use super::{first_independent, permutations, uniform_multiplicity, Recognized};

/// Parameters of a three-fixed-point action: rank `k`, dimension `2^l`,
/// and an ordered basis `beta_1, ..., beta_{k-1}, gamma`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ThreePointStructure {
    k: usize,
    ell: u32,
    basis: Vec<Character>,
}

/// Largest supported `l`; keeps every multiplicity well inside `usize`.
pub const MAX_ELL: u32 = 40;

impl ThreePointStructure {
    pub fn new(k: usize, ell: u32, basis: Vec<Character>) -> Result<Self> {
        if !(2..=MAX_RANK).contains(&k) {
            return Err(Error::Input(format!(
                "three-point structures need 2 <= k <= {MAX_RANK}, got {k}"
            )));
        }
        if (ell as usize) + 1 < k || ell > MAX_ELL {
            return Err(Error::Input(format!(
                "need k - 1 <= l <= {MAX_ELL}, got k = {k}, l = {ell}"
            )));
        }
        if basis.len() != k {
            return Err(Error::Input(format!(
                "basis has {} elements, expected {k}",
                basis.len()
            )));
        }
        if !is_independent(&basis)? || basis.iter().any(|b| b.k() != k) {
            return Err(Error::Input("basis elements are not independent".into()));
        }
        Ok(ThreePointStructure { k, ell, basis })
    }

    /// The structure on the standard basis `rho_1, ..., rho_k`.
    pub fn standard(k: usize, ell: u32) -> Result<Self> {
        let basis = (1..=k)
            .map(|i| Character::rho(k, i))
            .collect::<Result<Vec<_>>>()?;
        ThreePointStructure::new(k, ell, basis)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn ell(&self) -> u32 {
        self.ell
    }

    pub fn basis(&self) -> &[Character] {
        &self.basis
    }

    pub fn n(&self) -> usize {
        1usize << self.ell
    }

    /// Common multiplicity `2^(l-k+1)` of the characters in `beta-hat`.
    pub fn multiplicity(&self) -> usize {
        1usize << (self.ell as usize + 1 - self.k)
    }

    /// `(beta-hat, gamma-hat, delta-hat)`.
    pub fn parts(&self) -> (CharMultiset, CharMultiset, CharMultiset) {
        let k = self.k;
        let betas = &self.basis[..k - 1];
        let gamma = self.basis[k - 1];
        let sums = odd_sums(betas).expect("basis is independent");
        let m = self.multiplicity();
        let build = |shift: Character| {
            CharMultiset::from_counts(k, sums.iter().map(|&b| (b + shift, m))).expect("ranks agree")
        };
        (
            build(Character::zero(k)),
            build(gamma + betas[0]),
            build(gamma),
        )
    }
}

/// Vertices `p`, `q`, `r` with multisets `beta ∪ gamma`, `beta ∪ delta`
/// and `delta ∪ gamma`.
pub fn generate_three(s: &ThreePointStructure) -> Result<FixedData> {
    let (beta, gamma, delta) = s.parts();
    let vertices = vec![
        Vertex::new("p", beta.union(&gamma)?),
        Vertex::new("q", beta.union(&delta)?),
        Vertex::new("r", delta.union(&gamma)?),
    ];
    FixedData::new(s.k(), s.n(), vertices)
}

/// Finds a structure generating exactly the vertex multisets of `d`.
///
/// Vertex roles are tried in lexicographic order of permutations; within a
/// role assignment the `beta`'s are the first independent characters of
/// `beta-hat` in bitstring order and `gamma` is the smallest consistent
/// choice.
pub fn recognize_three(d: &FixedData) -> Option<Recognized<ThreePointStructure>> {
    let k = d.k();
    if d.len() != 3 || k < 2 || !d.n().is_power_of_two() || !d.is_valid() {
        return None;
    }
    let ell = d.n().trailing_zeros();
    for order in permutations(3) {
        let e = |i: usize| d.multiset(order[i]);
        let Ok(beta) = e(0).intersection(e(1)) else {
            continue;
        };
        let Some(m) = uniform_multiplicity(&beta) else {
            continue;
        };
        let support = beta.support();
        if !m.is_power_of_two() || support.len() != 1 << (k - 2) {
            continue;
        }
        let Some(betas) = first_independent(&support, k - 1) else {
            continue;
        };
        let Ok(delta) = e(1).difference(&beta) else {
            continue;
        };
        let Some(&d0) = delta.support().first() else {
            continue;
        };
        let mut gammas: Vec<Character> = support.iter().map(|&b| d0 + b).collect();
        gammas.sort();
        for gamma in gammas {
            let mut basis = betas.clone();
            basis.push(gamma);
            let Ok(s) = ThreePointStructure::new(k, ell, basis) else {
                continue;
            };
            let Ok(g) = generate_three(&s) else { continue };
            if (0..3).all(|i| g.multiset(i) == e(i)) {
                return Some(Recognized {
                    structure: s,
                    order,
                });
            }
        }
    }
    None
}
