//! Fixtures and brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use z2fixed::f2algebra::{CharMultiset, Character, F2Poly, Monomial};
use z2fixed::skeleton::{builtin_rpn, FixedData, Vertex};

pub fn c(s: &str) -> Character {
    s.parse().unwrap()
}

pub fn ms(k: usize, chars: &[&str]) -> CharMultiset {
    CharMultiset::parse(k, chars).unwrap()
}

pub fn data(k: usize, n: usize, sets: &[&[&str]]) -> FixedData {
    let sets = sets.iter().map(|s| ms(k, s)).collect();
    FixedData::from_multisets(k, n, "v", sets).unwrap()
}

/// The seven `(Z/2)^3` three-point classes of type `(4,3)`, as printed.
pub const SEVEN_CLASSES: [[[&str; 4]; 3]; 7] = [
    [
        ["100", "010", "001", "111"],
        ["010", "001", "110", "101"],
        ["100", "110", "101", "111"],
    ],
    [
        ["100", "010", "001", "111"],
        ["100", "001", "110", "011"],
        ["010", "110", "011", "111"],
    ],
    [
        ["100", "010", "001", "111"],
        ["100", "010", "101", "011"],
        ["001", "101", "011", "111"],
    ],
    [
        ["100", "110", "101", "111"],
        ["100", "010", "101", "011"],
        ["010", "110", "011", "111"],
    ],
    [
        ["010", "110", "011", "111"],
        ["010", "001", "110", "101"],
        ["001", "101", "011", "111"],
    ],
    [
        ["001", "101", "011", "111"],
        ["100", "001", "110", "011"],
        ["100", "110", "101", "111"],
    ],
    [
        ["100", "010", "101", "011"],
        ["100", "001", "110", "011"],
        ["010", "001", "110", "101"],
    ],
];

pub fn seven_class(row: usize) -> FixedData {
    let sets: Vec<&[&str]> = SEVEN_CLASSES[row].iter().map(|s| &s[..]).collect();
    data(3, 4, &sets)
}

/// RP^3 data with `extra` copies of `rho_1 + rho_2 + rho_3` at every vertex.
pub fn rp3_plus(extra: usize) -> FixedData {
    let (d, _) = builtin_rpn(3).unwrap();
    let sigma = CharMultiset::from_chars(3, std::iter::repeat_n(c("111"), extra)).unwrap();
    let vertices = d
        .vertices()
        .iter()
        .map(|v| Vertex::new(v.label.clone(), v.chars.union(&sigma).unwrap()))
        .collect();
    FixedData::new(3, 3 + extra, vertices).unwrap()
}

/// Multiset of vertex multisets, order-free.
pub fn family(d: &FixedData) -> Vec<CharMultiset> {
    d.family()
}

/// Naive pair cancellation by counting occurrences.
pub fn cancel_pairs(d: &FixedData) -> Vec<CharMultiset> {
    let all: Vec<&CharMultiset> = d.vertices().iter().map(|v| &v.chars).collect();
    let mut out: Vec<CharMultiset> = Vec::new();
    for s in &all {
        let count = all.iter().filter(|t| *t == s).count();
        if count % 2 == 1 && !out.contains(s) {
            out.push((*s).clone());
        }
    }
    out.sort();
    out
}

/// `m_lambda(x_1..x_n)` as the plain sum over distinct exponent
/// arrangements.
pub fn monomial_symmetric_bruteforce(parts: &[usize], xs: &[Character]) -> F2Poly {
    let k = xs[0].k();
    let mut exps: Vec<usize> = parts.to_vec();
    exps.resize(xs.len(), 0);
    exps.sort_unstable();
    let mut total = F2Poly::zero(k);
    loop {
        let mut term = F2Poly::one(k);
        for (x, &e) in xs.iter().zip(&exps) {
            for _ in 0..e {
                term = &term * &F2Poly::linear(*x);
            }
        }
        total += &term;
        if !next_permutation(&mut exps) {
            return total;
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Largest `t` with `c^t` dividing `p`, found by the substitution that
/// turns `c` into its lowest-index variable and reading off the least
/// exponent of that variable. `None` for the zero polynomial.
pub fn vanishing_order(p: &F2Poly, c: Character) -> Option<u32> {
    if p.is_zero() {
        return None;
    }
    let k = p.k();
    let pivot = c.support()[0];
    // rho_pivot -> rho_pivot + (c - rho_pivot) sends c to rho_pivot
    let image = F2Poly::linear(c);
    let mut out = F2Poly::zero(k);
    for m in p.monomials() {
        let mut term = F2Poly::one(k);
        for (i, &e) in m.exponents().iter().enumerate() {
            let base = if i + 1 == pivot {
                image.clone()
            } else {
                F2Poly::var(k, i + 1)
            };
            for _ in 0..e {
                term = &term * &base;
            }
        }
        out += &term;
    }
    out.monomials()
        .iter()
        .map(|m| m.exponents()[pivot - 1])
        .min()
}

/// Product of `c^e` over the given forms.
pub fn product_of_powers(k: usize, forms: &[(Character, usize)]) -> F2Poly {
    let mut acc = F2Poly::one(k);
    for &(c, e) in forms {
        for _ in 0..e {
            acc = &acc * &F2Poly::linear(c);
        }
    }
    acc
}

pub fn monomial(exps: &[u32]) -> Monomial {
    Monomial::new(exps.to_vec())
}
