use std::fmt;

use crate::f2algebra::F2Poly;
use crate::{Error, Limits, Result};

/// `1 + ceil(n / (n - k + 1))`: no action of `(Z/2)^k` on a closed
/// `n`-manifold with isolated fixed points and pairwise distinct tangent
/// representations has fewer fixed points.
pub fn lower_bound(n: u64, k: u64) -> Result<u64> {
    if k < 2 || n < k {
        return Err(Error::Input(format!(
            "lower_bound needs n >= k >= 2, got n = {n}, k = {k}"
        )));
    }
    Ok(1 + n.div_ceil(n - k + 1))
}

fn power_of_two_exponent(n: u64) -> Option<u32> {
    n.is_power_of_two().then(|| n.trailing_zeros())
}

/// Whether a nonbounding action with exactly three fixed points exists:
/// `k >= 2` and `n = 2^l >= 2^(k-1)`.
pub fn exists_three(n: u64, k: u64) -> bool {
    k >= 2 && power_of_two_exponent(n).is_some_and(|l| u64::from(l) + 1 >= k)
}

/// Whether a nonbounding action with exactly four fixed points exists:
/// `k >= 3` and `3 * 2^l <= n <= 5 * 2^l` for some `l >= k - 3`.
pub fn exists_four(n: u64, k: u64) -> bool {
    four_point_ells(n, k).next().is_some()
}

/// All `l >= k - 3` with `3 * 2^l <= n <= 5 * 2^l`, ascending.
pub fn four_point_ells(n: u64, k: u64) -> impl Iterator<Item = u32> {
    let start = if k >= 3 { (k - 3).min(64) as u32 } else { 64 };
    (start..62).filter(move |&l| {
        let p = 1u64 << l;
        3 * p <= n && n <= 5 * p
    })
}

/// Which known result determines the minimum number of fixed points.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MinFixedSource {
    /// `n = 2^l >= 2^(k-1)`: three fixed points suffice.
    ThreePoints,
    /// Four fixed points are possible, three are not.
    FourPoints,
    /// `n = 2^l >= 2^(k-2) >= 4` outside the first two regions.
    FivePoints,
    /// `n = k`: the standard action on `RP^n` is optimal.
    Simplex,
    /// `k = 2`, `n` even: `3^r` with `r` the binary digit sum of `n`.
    ConnerFloyd,
    /// Not determined; only the lower bound is known.
    Unknown,
}

impl fmt::Display for MinFixedSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MinFixedSource::ThreePoints => "three-point region",
            MinFixedSource::FourPoints => "four-point region",
            MinFixedSource::FivePoints => "five-point region",
            MinFixedSource::Simplex => "n = k",
            MinFixedSource::ConnerFloyd => "k = 2",
            MinFixedSource::Unknown => "unknown",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MinFixed {
    pub value: Option<u64>,
    pub source: MinFixedSource,
    pub lower_bound: u64,
}

/// The least number of fixed points of a nonbounding action of `(Z/2)^k`
/// on an `n`-manifold, where known.
pub fn min_fixed_points(n: u64, k: u64) -> Result<MinFixed> {
    let lower_bound = lower_bound(n, k)?;
    let (value, source) = if exists_three(n, k) {
        (Some(3), MinFixedSource::ThreePoints)
    } else if exists_four(n, k) {
        (Some(4), MinFixedSource::FourPoints)
    } else if k >= 4 && power_of_two_exponent(n).is_some_and(|l| u64::from(l) + 2 >= k) {
        (Some(5), MinFixedSource::FivePoints)
    } else if n == k {
        (Some(n + 1), MinFixedSource::Simplex)
    } else if k == 2 && n.is_multiple_of(2) {
        (Some(3u64.pow(n.count_ones())), MinFixedSource::ConnerFloyd)
    } else {
        (None, MinFixedSource::Unknown)
    };
    Ok(MinFixed {
        value,
        source,
        lower_bound,
    })
}

/// Number of monomials of `(r1 r2 + r2 r3 + r3 r1)^m` over `Z/2`.
pub fn conner_floyd_count(m: u64, limits: &Limits) -> Result<usize> {
    if m == 0 {
        return Err(Error::Input("conner_floyd_count needs m >= 1".into()));
    }
    let base = F2Poly::parse(3, "r1*r2+r2*r3+r1*r3")?;
    Ok(base.checked_pow(m, limits)?.len())
}

/// The vectors `(v_1, ..., v_{2^(k-3)})` with entries in
/// `0..=2^(l-k+4)` summing to `t`, in lexicographic order.
pub fn lattice_i(k: usize, ell: usize, t: u64, limits: &Limits) -> Result<Vec<Vec<u64>>> {
    if k < 3 || ell + 3 < k {
        return Err(Error::Input(format!(
            "lattice_I needs k >= 3 and l >= k - 3, got k = {k}, l = {ell}"
        )));
    }
    if k - 3 >= 20 || ell + 4 - k >= 62 {
        return Err(Error::Resource(
            "lattice dimensions are out of range".into(),
        ));
    }
    let len = 1usize << (k - 3);
    let cap = 1u64 << (ell + 4 - k);
    if t > cap * len as u64 {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(len);
    fill_lattice(len, cap, t, &mut current, &mut out, limits.max_tuples)?;
    Ok(out)
}

fn fill_lattice(
    len: usize,
    cap: u64,
    rest: u64,
    current: &mut Vec<u64>,
    out: &mut Vec<Vec<u64>>,
    max: u64,
) -> Result<()> {
    let slots = (len - current.len()) as u64;
    if slots == 0 {
        if rest == 0 {
            if out.len() as u64 >= max {
                return Err(Error::Resource(format!("more than {max} lattice vectors")));
            }
            out.push(current.clone());
        }
        return Ok(());
    }
    let room_after = cap * (slots - 1);
    let low = rest.saturating_sub(room_after);
    for x in low..=cap.min(rest) {
        current.push(x);
        fill_lattice(len, cap, rest - x, current, out, max)?;
        current.pop();
    }
    Ok(())
}
