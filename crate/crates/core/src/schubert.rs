//! Schubert polynomials as sums over pipe dreams, bumpless pipe dreams and
//! flagged tableaux.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign};

use serde::{Deserialize, Serialize};

use crate::bpd::enumerate_bpd;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::pipedream::enumerate_pd;
use crate::tableau::enumerate_flagged;

/// Polynomial in `x1, x2, ..` with integer coefficients. Exponent vectors
/// carry no trailing zeros and no stored coefficient is zero.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "PolyRepr", try_from = "PolyRepr")]
pub struct SparsePolynomial {
    terms: BTreeMap<Vec<usize>, i64>,
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    terms: Vec<TermRepr>,
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    exp: Vec<usize>,
    coeff: i64,
}

impl From<SparsePolynomial> for PolyRepr {
    fn from(p: SparsePolynomial) -> Self {
        PolyRepr { terms: p.terms().into_iter().map(|(exp, coeff)| TermRepr { exp: exp.to_vec(), coeff }).collect() }
    }
}

impl TryFrom<PolyRepr> for SparsePolynomial {
    type Error = Error;

    fn try_from(repr: PolyRepr) -> Result<Self> {
        let mut p = SparsePolynomial::zero();
        for t in repr.terms {
            p.add_term(t.exp, t.coeff);
        }
        Ok(p)
    }
}

fn trimmed(mut exp: Vec<usize>) -> Vec<usize> {
    while exp.last() == Some(&0) {
        exp.pop();
    }
    exp
}

/// Higher total degree first, then lexicographically larger exponents first.
fn graded_lex(a: &[usize], b: &[usize]) -> Ordering {
    let (da, db): (usize, usize) = (a.iter().sum(), b.iter().sum());
    db.cmp(&da).then_with(|| b.cmp(a))
}

impl SparsePolynomial {
    pub fn zero() -> Self {
        SparsePolynomial::default()
    }

    pub fn one() -> Self {
        SparsePolynomial::monomial(Vec::new())
    }

    pub fn monomial(exp: Vec<usize>) -> Self {
        let mut p = SparsePolynomial::zero();
        p.add_term(exp, 1);
        p
    }

    /// Product `x_{i_1} x_{i_2} ..` of 1-based variable indices.
    pub fn from_variables(indices: impl IntoIterator<Item = usize>) -> Self {
        let mut exp = Vec::new();
        for i in indices {
            if exp.len() < i {
                exp.resize(i, 0);
            }
            exp[i - 1] += 1;
        }
        SparsePolynomial::monomial(exp)
    }

    pub fn add_term(&mut self, exp: Vec<usize>, coeff: i64) {
        let exp = trimmed(exp);
        let entry = self.terms.entry(exp.clone()).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.terms.remove(&exp);
        }
    }

    pub fn coefficient(&self, exp: &[usize]) -> i64 {
        self.terms.get(&trimmed(exp.to_vec())).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    /// Terms in graded lexicographic order.
    pub fn terms(&self) -> Vec<(&[usize], i64)> {
        let mut out: Vec<(&[usize], i64)> = self.terms.iter().map(|(e, &c)| (e.as_slice(), c)).collect();
        out.sort_by(|a, b| graded_lex(a.0, b.0));
        out
    }

    /// Value at `x = (1, 1, ..)`.
    pub fn coefficient_sum(&self) -> i64 {
        self.terms.values().sum()
    }
}

impl AddAssign<&SparsePolynomial> for SparsePolynomial {
    fn add_assign(&mut self, rhs: &SparsePolynomial) {
        for (exp, &c) in &rhs.terms {
            self.add_term(exp.clone(), c);
        }
    }
}

impl Add for SparsePolynomial {
    type Output = SparsePolynomial;

    fn add(mut self, rhs: SparsePolynomial) -> SparsePolynomial {
        self += &rhs;
        self
    }
}

impl std::iter::Sum for SparsePolynomial {
    fn sum<I: Iterator<Item = SparsePolynomial>>(iter: I) -> Self {
        iter.fold(SparsePolynomial::zero(), Add::add)
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, exp: &[usize]) -> fmt::Result {
    let mut first = true;
    for (i, &e) in exp.iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        write!(f, "x{}", i + 1)?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (exp, c)) in self.terms().into_iter().enumerate() {
            let sign = if c < 0 { "-" } else { "+" };
            match (k, c < 0) {
                (0, false) => {}
                (0, true) => write!(f, "-")?,
                _ => write!(f, " {sign} ")?,
            }
            let magnitude = c.unsigned_abs();
            if exp.is_empty() {
                write!(f, "{magnitude}")?;
            } else {
                if magnitude != 1 {
                    write!(f, "{magnitude}*")?;
                }
                write_monomial(f, exp)?;
            }
        }
        Ok(())
    }
}

/// Sum of `x_{r_1} .. x_{r_ℓ}` over the compatible sequences of `w`.
pub fn schubert_pd(w: &Permutation) -> SparsePolynomial {
    enumerate_pd(w).iter().map(|pd| SparsePolynomial::from_variables(pd.to_biword().rows)).sum()
}

/// Sum over `BPD(w)` of the product of `x_i` over blank tiles in row `i`.
pub fn schubert_bpd(w: &Permutation) -> SparsePolynomial {
    enumerate_bpd(w).iter().map(|b| SparsePolynomial::monomial(b.weight())).sum()
}

/// Flagged Schur polynomial of `λ(v)` with flag `φ(v)`.
pub fn flagged_schur(v: &Permutation) -> Result<SparsePolynomial> {
    let flag = v.flag()?;
    let tableaux = enumerate_flagged(&v.shape(), &flag)?;
    Ok(tableaux.iter().map(|t| SparsePolynomial::from_variables(t.rows().iter().flatten().copied())).sum())
}
