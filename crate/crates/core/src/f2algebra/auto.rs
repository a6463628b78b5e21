use std::fmt;
use std::str::FromStr;

use super::character::{Character, MAX_RANK};
use crate::{Error, Result};

/// An invertible `k x k` matrix over `F_2` acting on characters.
///
/// Characters are column vectors of `rho`-coefficients and transform as
/// `x -> M x`. Each row is packed like a [`Character`]: entry `(i, j)`
/// sits at the position of `rho_j` in row `i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Automorphism {
    k: usize,
    rows: Vec<u32>,
}

impl Automorphism {
    /// Builds the matrix from its rows; rejects singular matrices.
    pub fn from_rows(rows: &[Character]) -> Result<Self> {
        let k = rows.len();
        if k == 0 || k > MAX_RANK {
            return Err(Error::Input(format!("matrix of size {k} is out of range")));
        }
        for r in rows {
            if r.k() != k {
                return Err(Error::Dimension {
                    expected: k,
                    found: r.k(),
                });
            }
        }
        let m = Automorphism {
            k,
            rows: rows.iter().map(|r| r.bits()).collect(),
        };
        if rank(&m.rows) != k {
            return Err(Error::Input("matrix is singular over F_2".into()));
        }
        Ok(m)
    }

    fn from_raw_rows(k: usize, rows: Vec<u32>) -> Self {
        Automorphism { k, rows }
    }

    pub fn identity(k: usize) -> Self {
        Automorphism::from_raw_rows(k, (0..k).map(|i| 1u32 << (k - 1 - i)).collect())
    }

    /// The permutation matrix exchanging `rho_i` and `rho_j` (1-based).
    pub fn swap(k: usize, i: usize, j: usize) -> Result<Self> {
        if i == 0 || j == 0 || i > k || j > k {
            return Err(Error::Input(format!(
                "swap({i},{j}) out of range for k = {k}"
            )));
        }
        let mut m = Automorphism::identity(k);
        m.rows.swap(i - 1, j - 1);
        Ok(m)
    }

    /// The elementary transvection adding row `j` into row `i` (0-based).
    fn transvection(k: usize, i: usize, j: usize) -> Self {
        let mut m = Automorphism::identity(k);
        m.rows[i] ^= m.rows[j];
        m
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn rows(&self) -> Vec<Character> {
        self.rows
            .iter()
            .map(|&r| Character::from_raw(self.k, r))
            .collect()
    }

    /// Matrix-vector product `M x` over `F_2`.
    pub fn apply(&self, x: Character) -> Result<Character> {
        if x.k() != self.k {
            return Err(Error::Dimension {
                expected: self.k,
                found: x.k(),
            });
        }
        let mut out = 0u32;
        for &row in &self.rows {
            out = (out << 1) | ((row & x.bits()).count_ones() & 1);
        }
        Ok(Character::from_raw(self.k, out))
    }

    /// `self * other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Automorphism) -> Result<Automorphism> {
        if self.k != other.k {
            return Err(Error::Dimension {
                expected: self.k,
                found: other.k,
            });
        }
        // row i of the product = sum over t of self[i][t] * other.row(t)
        let k = self.k;
        let mut rows = vec![0u32; k];
        for (i, &srow) in self.rows.iter().enumerate() {
            let mut acc = 0u32;
            for t in 0..k {
                if (srow >> (k - 1 - t)) & 1 == 1 {
                    acc ^= other.rows[t];
                }
            }
            rows[i] = acc;
        }
        Ok(Automorphism::from_raw_rows(k, rows))
    }

    /// Inverse by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Automorphism {
        let k = self.k;
        let mut a = self.rows.clone();
        let mut inv = Automorphism::identity(k).rows;
        for col in 0..k {
            let bit = 1u32 << (k - 1 - col);
            let pivot = (col..k)
                .find(|&r| a[r] & bit != 0)
                .expect("automorphisms are invertible by construction");
            a.swap(col, pivot);
            inv.swap(col, pivot);
            for r in 0..k {
                if r != col && a[r] & bit != 0 {
                    a[r] ^= a[col];
                    inv[r] ^= inv[col];
                }
            }
        }
        Automorphism::from_raw_rows(k, inv)
    }

    /// Every element of `GL(k, F_2)`, in increasing row order.
    ///
    /// Only for small `k`: the group has 168 elements for `k = 3` and
    /// 20160 for `k = 4`.
    pub fn all(k: usize) -> Result<Vec<Automorphism>> {
        if k == 0 || k > 4 {
            return Err(Error::Resource(format!(
                "brute-force enumeration of GL({k}, F_2) is limited to k <= 4"
            )));
        }
        let mut out = Vec::new();
        let mut rows = vec![0u32; k];
        fill_rows(k, 0, &mut rows, &mut out);
        Ok(out)
    }

    /// A generating set of `GL(k, F_2)`: all elementary transvections.
    pub fn generators(k: usize) -> Vec<Automorphism> {
        let mut out = Vec::new();
        for i in 0..k {
            for j in 0..k {
                if i != j {
                    out.push(Automorphism::transvection(k, i, j));
                }
            }
        }
        if out.is_empty() {
            out.push(Automorphism::identity(k));
        }
        out
    }
}

/// Depth-first fill keeping the partial row set independent.
fn fill_rows(k: usize, i: usize, rows: &mut Vec<u32>, out: &mut Vec<Automorphism>) {
    if i == k {
        out.push(Automorphism::from_raw_rows(k, rows.clone()));
        return;
    }
    for r in 1u32..(1u32 << k) {
        rows[i] = r;
        if rank(&rows[..=i]) == i + 1 {
            fill_rows(k, i + 1, rows, out);
        }
    }
}

fn rank(rows: &[u32]) -> usize {
    let mut a = rows.to_vec();
    let mut r = 0;
    for bit in (0..32).rev() {
        let mask = 1u32 << bit;
        if let Some(p) = (r..a.len()).find(|&i| a[i] & mask != 0) {
            a.swap(r, p);
            for i in 0..a.len() {
                if i != r && a[i] & mask != 0 {
                    a[i] ^= a[r];
                }
            }
            r += 1;
        }
    }
    r
}

/// The `apply_auto` operation.
pub fn apply_auto(m: &Automorphism, x: Character) -> Result<Character> {
    m.apply(x)
}

impl fmt::Display for Automorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.rows().iter().map(|r| r.to_string()).collect();
        f.write_str(&rows.join(","))
    }
}

impl fmt::Debug for Automorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Automorphism[{self}]")
    }
}

/// Parses comma- or semicolon-separated row bitstrings, e.g. `"10,11"`.
impl FromStr for Automorphism {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let rows = s
            .split([',', ';'])
            .map(|r| r.trim().parse::<Character>())
            .collect::<Result<Vec<_>>>()?;
        Automorphism::from_rows(&rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> Character {
        s.parse().unwrap()
    }

    #[test]
    fn examples() {
        let id = Automorphism::identity(3);
        assert_eq!(id.apply(c("101")).unwrap(), c("101"));
        let sw = Automorphism::swap(3, 1, 2).unwrap();
        assert_eq!(sw.apply(c("100")).unwrap(), c("010"));
        let m: Automorphism = "10,11".parse().unwrap();
        assert_eq!(m.apply(c("10")).unwrap(), c("11"));
    }

    #[test]
    fn singular_matrices_are_rejected() {
        assert!("11,11".parse::<Automorphism>().is_err());
        assert!("100,010,110".parse::<Automorphism>().is_err());
    }

    #[test]
    fn group_orders() {
        assert_eq!(Automorphism::all(2).unwrap().len(), 6);
        assert_eq!(Automorphism::all(3).unwrap().len(), 168);
    }

    #[test]
    fn inverse_and_compose() {
        for m in Automorphism::all(3).unwrap() {
            let inv = m.inverse();
            assert_eq!(m.compose(&inv).unwrap(), Automorphism::identity(3));
            for x in Character::all_nonzero(3) {
                assert_eq!(inv.apply(m.apply(x).unwrap()).unwrap(), x);
            }
        }
        let a: Automorphism = "110,010,001".parse().unwrap();
        let b: Automorphism = "001,100,010".parse().unwrap();
        let ab = a.compose(&b).unwrap();
        for x in Character::all_nonzero(3) {
            assert_eq!(ab.apply(x).unwrap(), a.apply(b.apply(x).unwrap()).unwrap());
        }
    }
}
