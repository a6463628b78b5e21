use std::collections::BTreeMap;
use std::fmt;

use crate::f2algebra::{
    divide_by_linear_full, eval_sym_with, Character, F2Poly, SymFactor, SymFnExpr,
};
use crate::skeleton::FixedData;
use crate::{Error, Limits, Result};

/// Outcome of the localization test for one symmetric function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TdksVerdict {
    /// The sum of localized contributions is this polynomial.
    Polynomial(F2Poly),
    /// Division by `form` at division step `stage` (1-based, counted over
    /// all steps) left the nonzero `remainder`.
    Witness {
        form: Character,
        stage: usize,
        remainder: F2Poly,
    },
}

impl TdksVerdict {
    pub fn is_polynomial(&self) -> bool {
        matches!(self, TdksVerdict::Polynomial(_))
    }

    pub fn polynomial(&self) -> Option<&F2Poly> {
        match self {
            TdksVerdict::Polynomial(p) => Some(p),
            TdksVerdict::Witness { .. } => None,
        }
    }
}

impl fmt::Display for TdksVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TdksVerdict::Polynomial(p) => write!(f, "polynomial {p}"),
            TdksVerdict::Witness {
                form,
                stage,
                remainder,
            } => {
                write!(
                    f,
                    "not polynomial: dividing by {form} at step {stage} leaves {remainder}"
                )
            }
        }
    }
}

/// Data shared by every symmetric function tested against the same `D`:
/// the least common multiple of the vertex Euler classes, as a list of
/// linear forms with exponents, and each vertex's complementary factor.
struct Localization<'a> {
    data: &'a FixedData,
    limits: &'a Limits,
    forms: Vec<(Character, usize)>,
    cofactors: Vec<F2Poly>,
}

impl<'a> Localization<'a> {
    fn new(data: &'a FixedData, limits: &'a Limits) -> Result<Self> {
        let report = data.validate();
        if !report.is_valid() {
            return Err(Error::Precondition(format!(
                "fixed data is invalid: {}",
                report.issues[0]
            )));
        }
        let mut mu: BTreeMap<Character, usize> = BTreeMap::new();
        for v in data.vertices() {
            for &(c, m) in v.chars.counts() {
                let e = mu.entry(c).or_insert(0);
                *e = (*e).max(m);
            }
        }
        let forms: Vec<(Character, usize)> = mu.into_iter().collect();
        let cofactors = data
            .vertices()
            .iter()
            .map(|v| {
                let mut acc = F2Poly::one(data.k());
                for &(c, m) in &forms {
                    let e = (m - v.chars.mult(c)) as u64;
                    if e > 0 {
                        acc =
                            acc.checked_mul(&F2Poly::linear(c).checked_pow(e, limits)?, limits)?;
                    }
                }
                Ok(acc)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Localization {
            data,
            limits,
            forms,
            cofactors,
        })
    }

    fn verdict(&self, f: &SymFnExpr) -> Result<TdksVerdict> {
        let k = self.data.k();
        let mut numerator = F2Poly::zero(k);
        for (v, cof) in self.data.vertices().iter().zip(&self.cofactors) {
            let value = eval_sym_with(f, &v.chars, self.limits)?;
            if !value.is_zero() {
                numerator += &value.checked_mul(cof, self.limits)?;
            }
        }
        let mut stage = 0;
        for &(c, m) in &self.forms {
            for _ in 0..m {
                stage += 1;
                if numerator.is_zero() {
                    continue;
                }
                let (q, r) = divide_by_linear_full(&numerator, c)?;
                if !r.is_zero() {
                    return Ok(TdksVerdict::Witness {
                        form: c,
                        stage,
                        remainder: r,
                    });
                }
                numerator = q;
            }
        }
        Ok(TdksVerdict::Polynomial(numerator))
    }
}

/// Tests whether `sum_p f(alpha(E_p)) / e(alpha(E_p))` is a polynomial.
///
/// The contributions are brought over the least common multiple of the
/// Euler classes and the numerator is divided by each linear form in
/// bitstring order, as many times as its largest multiplicity at a vertex.
pub fn tdks_f_hat(d: &FixedData, f: &SymFnExpr) -> Result<TdksVerdict> {
    tdks_f_hat_with(d, f, &Limits::default())
}

pub fn tdks_f_hat_with(d: &FixedData, f: &SymFnExpr, limits: &Limits) -> Result<TdksVerdict> {
    f.check_arity(d.n())?;
    Localization::new(d, limits)?.verdict(f)
}

/// The first symmetric function of a batch whose localized sum is not a
/// polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BatchFailure {
    pub f: SymFnExpr,
    pub form: Character,
    pub stage: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BatchReport {
    pub dmax: usize,
    /// Number of functions tested, including the failing one.
    pub checked: usize,
    pub failure: Option<BatchFailure>,
}

impl BatchReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Runs [`tdks_f_hat`] on `1` and on every `m_lambda` with
/// `1 <= |lambda| <= dmax`, stopping at the first failure.
///
/// Partitions with more than `n` parts are skipped since `m_lambda` then
/// vanishes identically. `dmax` defaults to `n`.
pub fn tdks_batch(d: &FixedData, dmax: Option<usize>, limits: &Limits) -> Result<BatchReport> {
    let dmax = dmax.unwrap_or(d.n());
    let loc = Localization::new(d, limits)?;
    let mut functions = vec![SymFnExpr::one()];
    for lambda in partitions_graded(dmax, d.n()) {
        functions.push(SymFnExpr::from_factor(SymFactor::monomial(lambda)?));
    }
    let mut checked = 0;
    for f in functions {
        checked += 1;
        if let TdksVerdict::Witness { form, stage, .. } = loc.verdict(&f)? {
            return Ok(BatchReport {
                dmax,
                checked,
                failure: Some(BatchFailure { f, form, stage }),
            });
        }
    }
    Ok(BatchReport {
        dmax,
        checked,
        failure: None,
    })
}

/// Partitions of `1..=dmax` with at most `max_parts` parts, by degree and
/// then lexicographically on the descending part lists.
pub fn partitions_graded(dmax: usize, max_parts: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for d in 1..=dmax {
        let mut of_d = Vec::new();
        let mut current = Vec::new();
        partitions_into(d, d, max_parts, &mut current, &mut of_d);
        of_d.sort();
        out.extend(of_d);
    }
    out
}

fn partitions_into(
    rest: usize,
    largest: usize,
    max_parts: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if rest == 0 {
        out.push(current.clone());
        return;
    }
    if current.len() == max_parts {
        return;
    }
    for part in (1..=largest.min(rest)).rev() {
        current.push(part);
        partitions_into(rest - part, part, max_parts, current, out);
        current.pop();
    }
}
