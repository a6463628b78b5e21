use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use super::character::Character;
use super::multiset::CharMultiset;
use super::poly::F2Poly;
use crate::{Error, Limits, Result};

/// One generator of the ring of symmetric functions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SymFactor {
    /// The constant `1`.
    One,
    /// Elementary symmetric function `e_j`, `j >= 1`.
    Elementary(usize),
    /// Monomial symmetric function `m_lambda`; parts stored descending.
    Monomial(Vec<usize>),
}

impl SymFactor {
    pub fn degree(&self) -> usize {
        match self {
            SymFactor::One => 0,
            SymFactor::Elementary(j) => *j,
            SymFactor::Monomial(parts) => parts.iter().sum(),
        }
    }

    /// Number of variables the factor needs to be meaningful.
    fn arity(&self) -> usize {
        match self {
            SymFactor::One => 0,
            SymFactor::Elementary(j) => *j,
            SymFactor::Monomial(parts) => parts.len(),
        }
    }

    /// `m_lambda` with parts sorted descending.
    pub fn monomial(mut parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::Input(format!(
                "partition {parts:?} must be nonempty with positive parts"
            )));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(SymFactor::Monomial(parts))
    }
}

impl fmt::Display for SymFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymFactor::One => f.write_str("1"),
            SymFactor::Elementary(j) => write!(f, "e{j}"),
            SymFactor::Monomial(parts) => {
                let p: Vec<String> = parts.iter().map(|x| x.to_string()).collect();
                write!(f, "m[{}]", p.join(","))
            }
        }
    }
}

/// A formal sum of products of `e_j`, `m[lambda]` and `1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymFnExpr {
    terms: Vec<Vec<SymFactor>>,
}

impl SymFnExpr {
    pub fn one() -> Self {
        SymFnExpr {
            terms: vec![vec![SymFactor::One]],
        }
    }

    pub fn from_factor(f: SymFactor) -> Self {
        SymFnExpr {
            terms: vec![vec![f]],
        }
    }

    pub fn from_terms(terms: Vec<Vec<SymFactor>>) -> Result<Self> {
        if terms.is_empty() || terms.iter().any(|t| t.is_empty()) {
            return Err(Error::Input("empty symmetric-function term".into()));
        }
        for f in terms.iter().flatten() {
            if let SymFactor::Elementary(0) = f {
                return Err(Error::Input("e0 is not a generator; use 1".into()));
            }
            if let SymFactor::Monomial(parts) = f {
                if parts.is_empty() || parts.contains(&0) {
                    return Err(Error::Input(format!("bad partition {parts:?}")));
                }
            }
        }
        Ok(SymFnExpr { terms })
    }

    /// `e_a * e_b`.
    pub fn elementary_product(a: usize, b: usize) -> Result<Self> {
        SymFnExpr::from_terms(vec![vec![
            SymFactor::Elementary(a),
            SymFactor::Elementary(b),
        ]])
    }

    pub fn terms(&self) -> &[Vec<SymFactor>] {
        &self.terms
    }

    /// Largest term degree.
    pub fn degree(&self) -> usize {
        self.terms
            .iter()
            .map(|t| t.iter().map(SymFactor::degree).sum())
            .max()
            .unwrap_or(0)
    }

    /// Checks that every factor makes sense in `n` variables.
    pub fn check_arity(&self, n: usize) -> Result<()> {
        for f in self.terms.iter().flatten() {
            if f.arity() > n {
                return Err(Error::Input(format!(
                    "{f} needs at least {} variables, only {n} available",
                    f.arity()
                )));
            }
        }
        Ok(())
    }
}

impl fmt::Display for SymFnExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, term) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            for (j, factor) in term.iter().enumerate() {
                if j > 0 {
                    f.write_str("*")?;
                }
                write!(f, "{factor}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for SymFnExpr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut parser = Parser {
            src: text.as_bytes(),
            pos: 0,
        };
        let expr = parser.expr()?;
        if parser.pos != parser.src.len() {
            return Err(parser.error("trailing input"));
        }
        Ok(expr)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, what: &str) -> Error {
        Error::Parse(format!(
            "{what} at offset {} in symmetric-function expression",
            self.pos
        ))
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<SymFnExpr> {
        let mut terms = vec![self.term()?];
        while self.eat(b'+') {
            terms.push(self.term()?);
        }
        SymFnExpr::from_terms(terms)
    }

    fn term(&mut self) -> Result<Vec<SymFactor>> {
        let mut factors = vec![self.factor()?];
        while self.eat(b'*') {
            factors.push(self.factor()?);
        }
        Ok(factors)
    }

    fn factor(&mut self) -> Result<SymFactor> {
        match self.peek() {
            Some(b'1') if !matches!(self.src.get(self.pos + 1), Some(b'0'..=b'9')) => {
                self.pos += 1;
                Ok(SymFactor::One)
            }
            Some(b'e') => {
                self.pos += 1;
                let j = self.int()?;
                if j == 0 {
                    return Err(self.error("e0 is not allowed"));
                }
                Ok(SymFactor::Elementary(j))
            }
            Some(b'm') => {
                self.pos += 1;
                if !self.eat(b'[') {
                    return Err(self.error("expected '['"));
                }
                let mut parts = vec![self.int()?];
                while self.eat(b',') {
                    parts.push(self.int()?);
                }
                if !self.eat(b']') {
                    return Err(self.error("expected ']'"));
                }
                SymFactor::monomial(parts)
                    .map_err(|_| self.error("partition parts must be positive"))
            }
            _ => Err(self.error("expected 'e<int>', 'm[...]' or '1'")),
        }
    }

    fn int(&mut self) -> Result<usize> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .expect("ascii digits")
            .parse()
            .map_err(|_| self.error("integer out of range"))
    }
}

/// Substitutes the members of `s` for the variables of `f`.
pub fn eval_sym(f: &SymFnExpr, s: &CharMultiset) -> Result<F2Poly> {
    eval_sym_with(f, s, &Limits::default())
}

pub fn eval_sym_with(f: &SymFnExpr, s: &CharMultiset, limits: &Limits) -> Result<F2Poly> {
    f.check_arity(s.size())?;
    let mut evaluator = Evaluator::new(s, limits);
    let mut total = F2Poly::zero(s.k());
    for term in &f.terms {
        let mut acc = F2Poly::one(s.k());
        for factor in term {
            let value = match factor {
                SymFactor::One => continue,
                SymFactor::Elementary(j) => evaluator.monomial_symmetric(&vec![1; *j])?,
                SymFactor::Monomial(parts) => evaluator.monomial_symmetric(parts)?,
            };
            acc = acc.checked_mul(&value, limits)?;
        }
        total += &acc;
    }
    Ok(total)
}

/// Evaluates monomial symmetric functions at a multiset of linear forms.
///
/// With distinct characters `c_1..c_r` of multiplicities `mu_1..mu_r`, each
/// distinct exponent arrangement splits into a sub-multiset of parts per
/// character; the arrangements inside the `mu_j` copies of `c_j` number
/// `mu_j! / (prod t_v! (mu_j - |t|)!)`, which is odd exactly when the
/// binary digits of those counts do not overlap.
pub(crate) struct Evaluator<'a> {
    chars: Vec<(Character, usize)>,
    limits: &'a Limits,
    k: usize,
    powers: HashMap<(usize, u64), F2Poly>,
}

impl<'a> Evaluator<'a> {
    pub(crate) fn new(s: &CharMultiset, limits: &'a Limits) -> Self {
        Evaluator {
            chars: s.counts().to_vec(),
            limits,
            k: s.k(),
            powers: HashMap::new(),
        }
    }

    fn power(&mut self, j: usize, e: u64) -> Result<F2Poly> {
        if let Some(p) = self.powers.get(&(j, e)) {
            return Ok(p.clone());
        }
        let p = F2Poly::linear(self.chars[j].0).checked_pow(e, self.limits)?;
        self.powers.insert((j, e), p.clone());
        Ok(p)
    }

    pub(crate) fn monomial_symmetric(&mut self, parts: &[usize]) -> Result<F2Poly> {
        let n: usize = self.chars.iter().map(|(_, m)| m).sum();
        if parts.len() > n {
            return Ok(F2Poly::zero(self.k));
        }
        // distinct part values (descending) and their counts
        let mut values: Vec<usize> = parts.to_vec();
        values.sort_unstable_by(|a, b| b.cmp(a));
        values.dedup();
        let counts: Vec<usize> = values
            .iter()
            .map(|v| parts.iter().filter(|p| *p == v).count())
            .collect();
        let mut memo: HashMap<(usize, Vec<usize>), F2Poly> = HashMap::new();
        self.split(0, &values, counts, &mut memo)
    }

    fn split(
        &mut self,
        j: usize,
        values: &[usize],
        remaining: Vec<usize>,
        memo: &mut HashMap<(usize, Vec<usize>), F2Poly>,
    ) -> Result<F2Poly> {
        if j == self.chars.len() {
            return Ok(if remaining.iter().all(|&r| r == 0) {
                F2Poly::one(self.k)
            } else {
                F2Poly::zero(self.k)
            });
        }
        let key = (j, remaining.clone());
        if let Some(p) = memo.get(&key) {
            return Ok(p.clone());
        }
        let mu = self.chars[j].1;
        let later: usize = self.chars[j + 1..].iter().map(|(_, m)| m).sum();
        let left: usize = remaining.iter().sum();
        let mut total = F2Poly::zero(self.k);
        let mut take = vec![0usize; remaining.len()];
        loop {
            let taken: usize = take.iter().sum();
            if taken <= mu && left - taken <= later && arrangement_count_is_odd(mu, &take) {
                let rest: Vec<usize> = remaining.iter().zip(&take).map(|(r, t)| r - t).collect();
                let tail = self.split(j + 1, values, rest, memo)?;
                if !tail.is_zero() {
                    let exponent: u64 = take.iter().zip(values).map(|(t, v)| (t * v) as u64).sum();
                    let head = self.power(j, exponent)?;
                    total += &head.checked_mul(&tail, self.limits)?;
                    if total.len() > self.limits.max_terms {
                        return Err(Error::Resource(format!(
                            "symmetric evaluation exceeds {} monomials",
                            self.limits.max_terms
                        )));
                    }
                }
            }
            // odometer over 0..=remaining[i]
            let mut i = 0;
            loop {
                if i == take.len() {
                    memo.insert(key, total.clone());
                    return Ok(total);
                }
                if take[i] < remaining[i] {
                    take[i] += 1;
                    break;
                }
                take[i] = 0;
                i += 1;
            }
        }
    }
}

/// Parity of `mu! / (prod t_i! * (mu - sum t)!)`.
fn arrangement_count_is_odd(mu: usize, take: &[usize]) -> bool {
    let taken: usize = take.iter().sum();
    let mut seen = mu - taken;
    for &t in take {
        if seen & t != 0 {
            return false;
        }
        seen |= t;
    }
    true
}
