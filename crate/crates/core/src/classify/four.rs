use crate::f2algebra::{is_independent, odd_sums, CharMultiset, Character, MAX_RANK};
use crate::skeleton::{FixedData, Vertex};
use crate::{Error, Result};

use super::three::MAX_ELL;
use super::{first_independent, permutations, uniform_multiplicity, Recognized};

/// Parameters of a four-fixed-point action: rank `k`, exponent `l`, an
/// ordered basis `beta_1, ..., beta_{k-2}, gamma, delta` and the
/// multiplicities `v` of the optional characters `gamma + delta + beta`.
///
/// `v` is indexed by those `2^(k-3)` characters in bitstring order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FourPointStructure {
    k: usize,
    ell: u32,
    basis: Vec<Character>,
    v: Vec<u64>,
}

impl FourPointStructure {
    /// An empty `v` stands for the zero vector.
    pub fn new(k: usize, ell: u32, basis: Vec<Character>, v: Vec<u64>) -> Result<Self> {
        if !(3..=MAX_RANK).contains(&k) {
            return Err(Error::Input(format!(
                "four-point structures need 3 <= k <= {MAX_RANK}, got {k}"
            )));
        }
        if (ell as usize) + 3 < k || ell > MAX_ELL {
            return Err(Error::Input(format!(
                "need k - 3 <= l <= {MAX_ELL}, got k = {k}, l = {ell}"
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
        let len = 1usize << (k - 3);
        let v = if v.is_empty() { vec![0; len] } else { v };
        if v.len() != len {
            return Err(Error::Input(format!(
                "v has {} entries, expected {len}",
                v.len()
            )));
        }
        let cap = 1u64 << (ell as usize + 4 - k);
        if let Some(x) = v.iter().find(|&&x| x > cap) {
            return Err(Error::Input(format!(
                "multiplicity {x} in v exceeds 2^(l-k+4) = {cap}"
            )));
        }
        Ok(FourPointStructure { k, ell, basis, v })
    }

    pub fn standard(k: usize, ell: u32, v: Vec<u64>) -> Result<Self> {
        let basis = (1..=k)
            .map(|i| Character::rho(k, i))
            .collect::<Result<Vec<_>>>()?;
        FourPointStructure::new(k, ell, basis, v)
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

    pub fn v(&self) -> &[u64] {
        &self.v
    }

    /// `t = n - 3 * 2^l`.
    pub fn t(&self) -> u64 {
        self.v.iter().sum()
    }

    pub fn n(&self) -> usize {
        3 * (1usize << self.ell) + self.t() as usize
    }

    /// Common multiplicity `2^(l-k+3)` of the characters in `beta-hat`.
    pub fn multiplicity(&self) -> usize {
        1usize << (self.ell as usize + 3 - self.k)
    }

    fn betas(&self) -> &[Character] {
        &self.basis[..self.k - 2]
    }

    fn gamma(&self) -> Character {
        self.basis[self.k - 2]
    }

    fn delta(&self) -> Character {
        self.basis[self.k - 1]
    }

    /// The characters `gamma + delta + beta` indexing `v`, in bitstring order.
    pub fn omega_candidates(&self) -> Vec<Character> {
        let shift = self.gamma() + self.delta();
        let mut c: Vec<Character> = odd_sums(self.betas())
            .expect("basis is independent")
            .into_iter()
            .map(|b| b + shift)
            .collect();
        c.sort();
        c
    }

    /// `[beta, gamma, delta, epsilon, eta, lambda, omega]`-hat.
    pub fn parts(&self) -> [CharMultiset; 7] {
        let k = self.k;
        let sums = odd_sums(self.betas()).expect("basis is independent");
        let m = self.multiplicity();
        let (b1, g, d) = (self.betas()[0], self.gamma(), self.delta());
        let build = |shift: Character| {
            CharMultiset::from_counts(k, sums.iter().map(|&b| (b + shift, m))).expect("ranks agree")
        };
        let omega = CharMultiset::from_counts(
            k,
            self.omega_candidates()
                .into_iter()
                .zip(&self.v)
                .map(|(c, &x)| (c, x as usize)),
        )
        .expect("ranks agree");
        [
            build(Character::zero(k)),
            build(g + b1),
            build(d + b1),
            build(g),
            build(d),
            build(g + d + b1),
            omega,
        ]
    }
}

/// Vertices `p, q, r, s` with multisets `beta gamma delta omega`,
/// `beta eta epsilon omega`, `gamma epsilon lambda omega` and
/// `delta eta lambda omega`.
pub fn generate_four(s: &FourPointStructure) -> Result<FixedData> {
    let [beta, gamma, delta, epsilon, eta, lambda, omega] = s.parts();
    let join = |a: &CharMultiset, b: &CharMultiset, c: &CharMultiset| -> Result<CharMultiset> {
        a.union(b)?.union(c)?.union(&omega)
    };
    let vertices = vec![
        Vertex::new("p", join(&beta, &gamma, &delta)?),
        Vertex::new("q", join(&beta, &eta, &epsilon)?),
        Vertex::new("r", join(&gamma, &epsilon, &lambda)?),
        Vertex::new("s", join(&delta, &eta, &lambda)?),
    ];
    FixedData::new(s.k(), s.n(), vertices)
}

/// Finds a structure generating exactly the vertex multisets of `d`.
///
/// For each assignment of the roles `p, q, r, s`: `omega-hat` is the common
/// part of all four multisets, `beta-hat` the rest of `E_p ∩ E_q`; `gamma`
/// and `delta` are read off `E_q ∩ E_r` and `E_q ∩ E_s`, taking the
/// bitstring-smallest consistent choices.
pub fn recognize_four(d: &FixedData) -> Option<Recognized<FourPointStructure>> {
    let k = d.k();
    if d.len() != 4 || k < 3 || !d.is_valid() {
        return None;
    }
    for order in permutations(4) {
        let e = |i: usize| d.multiset(order[i]);
        let Some(omega) = (1..4).try_fold(e(0).clone(), |acc, i| acc.intersection(e(i)).ok())
        else {
            continue;
        };
        let without_omega = |a: usize, b: usize| -> Option<CharMultiset> {
            e(a).intersection(e(b)).ok()?.difference(&omega).ok()
        };
        let (Some(beta), Some(epsilon), Some(eta)) = (
            without_omega(0, 1),
            without_omega(1, 2),
            without_omega(1, 3),
        ) else {
            continue;
        };
        let Some(m) = uniform_multiplicity(&beta) else {
            continue;
        };
        let support = beta.support();
        if !m.is_power_of_two() || support.len() != 1 << (k - 3) {
            continue;
        }
        let ell = m.trailing_zeros() as usize + k - 3;
        let Ok(ell) = u32::try_from(ell) else {
            continue;
        };
        let Some(betas) = first_independent(&support, k - 2) else {
            continue;
        };
        let (Some(&e0), Some(&h0)) = (epsilon.support().first(), eta.support().first()) else {
            continue;
        };
        let candidates = |base: Character| {
            let mut c: Vec<Character> = support.iter().map(|&b| base + b).collect();
            c.sort();
            c
        };
        for gamma in candidates(e0) {
            for delta in candidates(h0) {
                let mut basis = betas.clone();
                basis.extend([gamma, delta]);
                let Ok(probe) = FourPointStructure::new(k, ell, basis.clone(), Vec::new()) else {
                    continue;
                };
                let slots = probe.omega_candidates();
                if omega.support().iter().any(|c| !slots.contains(c)) {
                    continue;
                }
                let v = slots.iter().map(|&c| omega.mult(c) as u64).collect();
                let Ok(s) = FourPointStructure::new(k, ell, basis, v) else {
                    continue;
                };
                let Ok(g) = generate_four(&s) else { continue };
                if (0..4).all(|i| g.multiset(i) == e(i)) {
                    return Some(Recognized {
                        structure: s,
                        order,
                    });
                }
            }
        }
    }
    None
}
