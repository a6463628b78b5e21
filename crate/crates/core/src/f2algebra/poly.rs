use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::ops::{Add, AddAssign, Mul};

use super::character::Character;
use crate::{Error, Limits, Result};

/// Exponent vector of a monomial `rho_1^{e_1} ... rho_k^{e_k}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Box<[u32]>);

impl Monomial {
    pub fn one(k: usize) -> Self {
        Monomial(vec![0; k].into_boxed_slice())
    }

    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents.into_boxed_slice())
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    fn times(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    /// Graded lexicographic comparison: higher degree first, then larger
    /// exponent of `rho_1`, then of `rho_2`, and so on.
    fn grlex(&self, other: &Monomial) -> Ordering {
        other
            .degree()
            .cmp(&self.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", MonoText(self))
    }
}

struct MonoText<'a>(&'a Monomial);

impl fmt::Display for MonoText<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0 .0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "r{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// An element of `Z/2[rho_1, ..., rho_k]`: the set of monomials with
/// coefficient 1.
#[derive(Clone, PartialEq, Eq)]
pub struct F2Poly {
    k: usize,
    terms: HashSet<Monomial>,
}

impl F2Poly {
    pub fn zero(k: usize) -> Self {
        F2Poly {
            k,
            terms: HashSet::new(),
        }
    }

    pub fn one(k: usize) -> Self {
        F2Poly::from_monomial(k, Monomial::one(k))
    }

    pub fn from_monomial(k: usize, m: Monomial) -> Self {
        debug_assert_eq!(m.0.len(), k);
        let mut terms = HashSet::with_capacity(1);
        terms.insert(m);
        F2Poly { k, terms }
    }

    /// The variable `rho_i`, `i` in `1..=k`.
    pub fn var(k: usize, i: usize) -> Self {
        let mut e = vec![0; k];
        e[i - 1] = 1;
        F2Poly::from_monomial(k, Monomial::new(e))
    }

    /// A character viewed as a homogeneous linear form.
    pub fn linear(c: Character) -> Self {
        let k = c.k();
        let mut p = F2Poly::zero(k);
        for i in c.support() {
            p.toggle(Monomial::new({
                let mut e = vec![0; k];
                e[i - 1] = 1;
                e
            }));
        }
        p
    }

    pub fn from_monomials(k: usize, monos: impl IntoIterator<Item = Monomial>) -> Self {
        let mut p = F2Poly::zero(k);
        for m in monos {
            debug_assert_eq!(m.0.len(), k);
            p.toggle(m);
        }
        p
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.iter().all(|m| m.degree() == 0)
    }

    /// Number of monomials.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u64> {
        self.terms.iter().map(Monomial::degree).max()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.terms.contains(m)
    }

    /// Monomials in graded-lex order (highest degree first).
    pub fn monomials(&self) -> Vec<&Monomial> {
        let mut v: Vec<&Monomial> = self.terms.iter().collect();
        v.sort_by(|a, b| a.grlex(b));
        v
    }

    fn toggle(&mut self, m: Monomial) {
        if !self.terms.remove(&m) {
            self.terms.insert(m);
        }
    }

    fn check_k(&self, other: &F2Poly) -> Result<()> {
        if self.k != other.k {
            return Err(Error::Dimension {
                expected: self.k,
                found: other.k,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &F2Poly) -> Result<F2Poly> {
        self.check_k(other)?;
        let mut out = self.clone();
        for m in &other.terms {
            out.toggle(m.clone());
        }
        Ok(out)
    }

    /// Exact product, guarded by the degree and term limits.
    pub fn checked_mul(&self, other: &F2Poly, limits: &Limits) -> Result<F2Poly> {
        self.check_k(other)?;
        let (Some(da), Some(db)) = (self.degree(), other.degree()) else {
            return Ok(F2Poly::zero(self.k));
        };
        if da + db > limits.max_degree {
            return Err(Error::Resource(format!(
                "product degree {} exceeds guard {}",
                da + db,
                limits.max_degree
            )));
        }
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = F2Poly::zero(self.k);
        for a in &small.terms {
            for b in &large.terms {
                out.toggle(a.times(b));
            }
            if out.len() > limits.max_terms {
                return Err(Error::Resource(format!(
                    "intermediate product exceeds {} monomials",
                    limits.max_terms
                )));
            }
        }
        Ok(out)
    }

    /// `P^(2^s)`: every exponent scaled by `2^s`.
    pub fn frobenius(&self, s: u32) -> F2Poly {
        F2Poly {
            k: self.k,
            terms: self
                .terms
                .iter()
                .map(|m| Monomial(m.0.iter().map(|&e| e << s).collect()))
                .collect(),
        }
    }

    /// `P^e` by square-and-multiply; squaring is the Frobenius map.
    pub fn checked_pow(&self, e: u64, limits: &Limits) -> Result<F2Poly> {
        if e == 0 {
            return Ok(F2Poly::one(self.k));
        }
        if let Some(d) = self.degree() {
            if d.saturating_mul(e) > limits.max_degree {
                return Err(Error::Resource(format!(
                    "power degree {} exceeds guard {}",
                    d.saturating_mul(e),
                    limits.max_degree
                )));
            }
        } else {
            return Ok(F2Poly::zero(self.k));
        }
        let mut acc = F2Poly::one(self.k);
        let mut base = self.clone();
        let mut e = e;
        loop {
            if e & 1 == 1 {
                acc = acc.checked_mul(&base, limits)?;
            }
            e >>= 1;
            if e == 0 {
                break;
            }
            base = base.frobenius(1);
        }
        Ok(acc)
    }

    /// Splits `P = sum_j a_j * rho_i^j`; entry `j` holds `a_j`.
    fn coefficients_in(&self, i: usize) -> Vec<F2Poly> {
        let mut out: Vec<F2Poly> = Vec::new();
        for m in &self.terms {
            let j = m.0[i - 1] as usize;
            if out.len() <= j {
                out.resize(j + 1, F2Poly::zero(self.k));
            }
            let mut e = m.0.clone();
            e[i - 1] = 0;
            out[j].toggle(Monomial(e));
        }
        out
    }

    fn shifted(&self, i: usize, by: u32) -> F2Poly {
        F2Poly {
            k: self.k,
            terms: self
                .terms
                .iter()
                .map(|m| {
                    let mut e = m.0.clone();
                    e[i - 1] += by;
                    Monomial(e)
                })
                .collect(),
        }
    }

    /// Parses text like `r1^2*r2+r3+1`; `0` is the zero polynomial.
    pub fn parse(k: usize, s: &str) -> Result<F2Poly> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut p = F2Poly::zero(k);
        if s == "0" {
            return Ok(p);
        }
        for term in s.split('+') {
            let mut e = vec![0u32; k];
            for factor in term.split('*') {
                if factor == "1" {
                    continue;
                }
                let body = factor
                    .strip_prefix('r')
                    .ok_or_else(|| Error::Parse(format!("bad factor {factor:?}")))?;
                let (var, exp) = match body.split_once('^') {
                    Some((v, x)) => (v, x),
                    None => (body, "1"),
                };
                let var: usize = var
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad variable in {factor:?}")))?;
                let exp: u32 = exp
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad exponent in {factor:?}")))?;
                if var == 0 || var > k {
                    return Err(Error::Parse(format!("variable r{var} outside 1..={k}")));
                }
                e[var - 1] += exp;
            }
            p.toggle(Monomial::new(e));
        }
        Ok(p)
    }
}

impl fmt::Display for F2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, m) in self.monomials().into_iter().enumerate() {
            if idx > 0 {
                f.write_str("+")?;
            }
            write!(f, "{}", MonoText(m))?;
        }
        Ok(())
    }
}

impl fmt::Debug for F2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F2Poly({self})")
    }
}

impl Add for &F2Poly {
    type Output = F2Poly;

    fn add(self, rhs: &F2Poly) -> F2Poly {
        self.try_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl AddAssign<&F2Poly> for F2Poly {
    fn add_assign(&mut self, rhs: &F2Poly) {
        if let Err(e) = self.check_k(rhs) {
            panic!("{e}");
        }
        for m in &rhs.terms {
            self.toggle(m.clone());
        }
    }
}

/// Product under the default [`Limits`]; panics if a guard trips.
impl Mul for &F2Poly {
    type Output = F2Poly;

    fn mul(self, rhs: &F2Poly) -> F2Poly {
        self.checked_mul(rhs, &Limits::default())
            .unwrap_or_else(|e| panic!("{e}"))
    }
}

pub fn poly_add(p: &F2Poly, q: &F2Poly) -> Result<F2Poly> {
    p.try_add(q)
}

pub fn poly_mul(p: &F2Poly, q: &F2Poly, limits: &Limits) -> Result<F2Poly> {
    p.checked_mul(q, limits)
}

pub fn poly_pow(p: &F2Poly, e: u64, limits: &Limits) -> Result<F2Poly> {
    p.checked_pow(e, limits)
}

/// Divides `P` by the linear form `l`, pivoting on the lowest-index
/// variable of its support.
///
/// Returns the quotient and whether the division was exact. The remainder
/// is `P` with the pivot variable replaced by the rest of `l`; see
/// [`divide_by_linear_full`].
pub fn divide_by_linear(p: &F2Poly, l: Character) -> Result<(F2Poly, bool)> {
    let (q, r) = divide_by_linear_full(p, l)?;
    Ok((q, r.is_zero()))
}

/// Like [`divide_by_linear`], returning the remainder itself.
pub fn divide_by_linear_full(p: &F2Poly, l: Character) -> Result<(F2Poly, F2Poly)> {
    let pivot = *l
        .support()
        .first()
        .ok_or_else(|| Error::Input("division by the zero linear form".into()))?;
    divide_by_linear_with_pivot(p, l, pivot)
}

/// Synthetic division of `P` by `rho_pivot + s` where `s` is the rest of
/// `l`, treating `P` as a polynomial in `rho_pivot`.
///
/// `P = Q * l + R` with `R` free of `rho_pivot`.
pub fn divide_by_linear_with_pivot(
    p: &F2Poly,
    l: Character,
    pivot: usize,
) -> Result<(F2Poly, F2Poly)> {
    if l.k() != p.k() {
        return Err(Error::Dimension {
            expected: p.k(),
            found: l.k(),
        });
    }
    if l.is_zero() {
        return Err(Error::Input("division by the zero linear form".into()));
    }
    if pivot == 0 || pivot > l.k() || !l.coeff(pivot) {
        return Err(Error::Input(format!(
            "rho_{pivot} is not in the support of {l}"
        )));
    }
    let k = p.k();
    let rest = F2Poly::linear(l + Character::rho(k, pivot)?);
    let coeffs = p.coefficients_in(pivot);
    if coeffs.is_empty() {
        return Ok((F2Poly::zero(k), F2Poly::zero(k)));
    }
    // Horner: q_{d-1} = a_d, q_{j-1} = a_j + s q_j, remainder = a_0 + s q_0.
    let d = coeffs.len() - 1;
    let mut quotient = F2Poly::zero(k);
    let mut carry = F2Poly::zero(k);
    for j in (1..=d).rev() {
        let mut qj = coeffs[j].clone();
        qj += &(&rest * &carry);
        quotient += &qj.shifted(pivot, (j - 1) as u32);
        carry = qj;
    }
    let mut remainder = coeffs[0].clone();
    remainder += &(&rest * &carry);
    Ok((quotient, remainder))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(k: usize, s: &str) -> F2Poly {
        F2Poly::parse(k, s).unwrap()
    }

    fn c(s: &str) -> Character {
        s.parse().unwrap()
    }

    #[test]
    fn multiplication_examples() {
        let s = p(2, "r1+r2");
        assert_eq!(&s * &s, p(2, "r1^2+r2^2"));
        let q = p(3, "r1*r2+r2^3+r3");
        assert_eq!(&q * &F2Poly::one(3), q);
        let e2 = p(3, "r1*r2+r2*r3+r3*r1");
        assert_eq!(&e2 * &e2, p(3, "r1^2*r2^2+r2^2*r3^2+r3^2*r1^2"));
    }

    #[test]
    fn add_cancels() {
        let q = p(3, "r1*r2+r3+1");
        assert!((&q + &q).is_zero());
    }

    #[test]
    fn display_is_graded_lex() {
        assert_eq!(p(3, "r3+r1*r2+r1^2+1").to_string(), "r1^2+r1*r2+r3+1");
        assert_eq!(F2Poly::zero(2).to_string(), "0");
        assert_eq!(F2Poly::one(2).to_string(), "1");
    }

    #[test]
    fn degree_guard() {
        let limits = Limits {
            max_degree: 5,
            ..Limits::default()
        };
        let x = p(2, "r1^3");
        assert!(matches!(
            x.checked_mul(&x, &limits),
            Err(Error::Resource(_))
        ));
        assert!(matches!(x.checked_pow(2, &limits), Err(Error::Resource(_))));
    }

    #[test]
    fn pow_matches_repeated_product() {
        let q = p(3, "r1+r2*r3+r3^2");
        let mut acc = F2Poly::one(3);
        for e in 0..7u64 {
            assert_eq!(q.checked_pow(e, &Limits::default()).unwrap(), acc);
            acc = &acc * &q;
        }
    }

    #[test]
    fn division_examples() {
        let (q, exact) = divide_by_linear(&p(2, "r1^2+r2^2"), c("11")).unwrap();
        assert!(exact);
        assert_eq!(q, p(2, "r1+r2"));

        let (_, exact) = divide_by_linear(&p(2, "r1^2"), c("11")).unwrap();
        assert!(!exact);
        let (_, rem) = divide_by_linear_full(&p(2, "r1^2"), c("11")).unwrap();
        assert_eq!(rem, p(2, "r2^2"));

        let prod = &p(3, "r1+r2") * &p(3, "r1+r3");
        let (q, exact) = divide_by_linear(&prod, c("101")).unwrap();
        assert!(exact);
        assert_eq!(q, p(3, "r1+r2"));
    }

    #[test]
    fn division_by_zero_form_is_an_error() {
        assert!(matches!(
            divide_by_linear(&p(2, "r1"), c("00")),
            Err(Error::Input(_))
        ));
    }

    #[test]
    fn parse_errors() {
        assert!(F2Poly::parse(2, "r3").is_err());
        assert!(F2Poly::parse(2, "x1").is_err());
        assert!(F2Poly::parse(2, "").is_err());
        assert!(F2Poly::parse(2, "r1^a").is_err());
    }
}
