use std::fmt;
use std::ops::Add;
use std::str::FromStr;

use crate::{Error, Result};

/// Hard ceiling on `k`: characters are packed into one `u32`.
pub const MAX_RANK: usize = 32;

/// A homomorphism `(Z/2)^k -> Z/2`, i.e. a vector in `F_2^k`.
///
/// Coordinate `i` (1-based) is the coefficient of `rho_i`. The packed form
/// stores `rho_1` in the most significant of the `k` low bits, so the
/// derived ordering on `(k, bits)` is the lexicographic order of the
/// bitstring text form `b_1 b_2 ... b_k`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Character {
    k: u8,
    bits: u32,
}

impl Character {
    /// Builds a character from its packed bits (`rho_1` = bit `k-1`).
    pub fn new(k: usize, bits: u32) -> Result<Self> {
        check_rank(k)?;
        if k < MAX_RANK && bits >> k != 0 {
            return Err(Error::Input(format!(
                "bits {bits:#b} do not fit in k = {k} coordinates"
            )));
        }
        Ok(Character { k: k as u8, bits })
    }

    pub(crate) fn from_raw(k: usize, bits: u32) -> Self {
        debug_assert!(k <= MAX_RANK && (k == MAX_RANK || bits >> k == 0));
        Character { k: k as u8, bits }
    }

    pub fn zero(k: usize) -> Self {
        Character::from_raw(k, 0)
    }

    /// The basis character `rho_i`, `i` in `1..=k`.
    pub fn rho(k: usize, i: usize) -> Result<Self> {
        check_rank(k)?;
        if i == 0 || i > k {
            return Err(Error::Input(format!("rho_{i} does not exist for k = {k}")));
        }
        Ok(Character::from_raw(k, 1 << (k - i)))
    }

    /// Builds a character from the 1-based indices of the `rho_i` it sums.
    pub fn from_indices(k: usize, indices: &[usize]) -> Result<Self> {
        let mut c = Character::zero(k);
        for &i in indices {
            c = c + Character::rho(k, i)?;
        }
        Ok(c)
    }

    pub fn k(&self) -> usize {
        self.k as usize
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    /// Coefficient of `rho_i`, `i` in `1..=k`.
    pub fn coeff(&self, i: usize) -> bool {
        debug_assert!(i >= 1 && i <= self.k());
        (self.bits >> (self.k() - i)) & 1 == 1
    }

    /// 1-based indices `i` with a nonzero coefficient, ascending.
    pub fn support(&self) -> Vec<usize> {
        (1..=self.k()).filter(|&i| self.coeff(i)).collect()
    }

    /// Componentwise sum; fails when the ambient ranks differ.
    pub fn try_add(self, other: Character) -> Result<Character> {
        if self.k != other.k {
            return Err(Error::Dimension {
                expected: self.k(),
                found: other.k(),
            });
        }
        Ok(Character::from_raw(self.k(), self.bits ^ other.bits))
    }

    /// Appends one coordinate `rho_{k+1}` with the given coefficient.
    pub fn extend(self, last: bool) -> Result<Character> {
        check_rank(self.k() + 1)?;
        Ok(Character::from_raw(
            self.k() + 1,
            (self.bits << 1) | last as u32,
        ))
    }

    /// All `2^k - 1` nonzero characters in bitstring order.
    pub fn all_nonzero(k: usize) -> impl Iterator<Item = Character> {
        let top: u64 = 1u64 << k;
        (1..top).map(move |b| Character::from_raw(k, b as u32))
    }
}

fn check_rank(k: usize) -> Result<()> {
    if k == 0 || k > MAX_RANK {
        return Err(Error::Input(format!("rank k = {k} outside 1..={MAX_RANK}")));
    }
    Ok(())
}

/// Componentwise XOR.
///
/// Panics when the operands live in different ranks; use
/// [`Character::try_add`] for a checked sum.
impl Add for Character {
    type Output = Character;

    fn add(self, rhs: Character) -> Character {
        match self.try_add(rhs) {
            Ok(c) => c,
            Err(e) => panic!("{e}"),
        }
    }
}

/// The `char_add` operation: checked componentwise sum.
pub fn char_add(a: Character, b: Character) -> Result<Character> {
    a.try_add(b)
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.k() {
            f.write_str(if self.coeff(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Character({self})")
    }
}

impl FromStr for Character {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty character bitstring".into()));
        }
        let k = s.len();
        check_rank(k).map_err(|_| {
            Error::Parse(format!("bitstring {s:?} has length outside 1..={MAX_RANK}"))
        })?;
        let mut bits = 0u32;
        for ch in s.chars() {
            bits = match ch {
                '0' => bits << 1,
                '1' => (bits << 1) | 1,
                other => {
                    return Err(Error::Parse(format!(
                        "unexpected {other:?} in character bitstring {s:?}"
                    )))
                }
            };
        }
        Ok(Character::from_raw(k, bits))
    }
}

/// Rank over `F_2` of a family of characters sharing one `k`.
pub fn span_dim(chars: &[Character]) -> Result<usize> {
    let Some(first) = chars.first() else {
        return Ok(0);
    };
    let mut basis: Vec<u32> = Vec::new();
    for c in chars {
        if c.k != first.k {
            return Err(Error::Dimension {
                expected: first.k(),
                found: c.k(),
            });
        }
        if let Some(r) = reduce(&basis, c.bits) {
            basis.push(r);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    Ok(basis.len())
}

/// Reduces `v` against an echelon basis (distinct leading bits, sorted
/// descending); returns the nonzero residue if `v` is independent.
fn reduce(basis: &[u32], mut v: u32) -> Option<u32> {
    for &b in basis {
        let lead = 31 - b.leading_zeros();
        if (v >> lead) & 1 == 1 {
            v ^= b;
        }
    }
    (v != 0).then_some(v)
}

/// Whether the characters are linearly independent.
pub fn is_independent(chars: &[Character]) -> Result<bool> {
    Ok(span_dim(chars)? == chars.len())
}

/// Whether `c` lies in the span of `gens`.
pub fn in_span(gens: &[Character], c: Character) -> Result<bool> {
    let mut all = gens.to_vec();
    let before = span_dim(&all)?;
    all.push(c);
    Ok(span_dim(&all)? == before)
}

/// All sums of an odd number of distinct generators, in bitstring order.
///
/// The generators must be independent, so the result has `2^(j-1)`
/// elements.
pub fn odd_sums(gens: &[Character]) -> Result<Vec<Character>> {
    if gens.is_empty() {
        return Err(Error::Precondition(
            "odd_sums needs at least one generator".into(),
        ));
    }
    if !is_independent(gens)? {
        return Err(Error::Precondition(format!(
            "generators {gens:?} are linearly dependent"
        )));
    }
    if gens.len() > 24 {
        return Err(Error::Resource(format!(
            "2^{} odd sums requested",
            gens.len() - 1
        )));
    }
    let k = gens[0].k();
    let mut out = Vec::with_capacity(1 << (gens.len() - 1));
    for mask in 1u32..(1u32 << gens.len()) {
        if mask.count_ones() % 2 == 1 {
            let mut c = Character::zero(k);
            for (i, g) in gens.iter().enumerate() {
                if (mask >> i) & 1 == 1 {
                    c = c + *g;
                }
            }
            out.push(c);
        }
    }
    out.sort_unstable();
    Ok(out)
}
