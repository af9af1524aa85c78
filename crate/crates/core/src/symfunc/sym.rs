use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::partition::{enumerate_partitions, rearrangements, IntComposition, IntPartition};
use super::poly::IntPolynomial;
use crate::error::{invalid, Error, Result};
use crate::limits::{self, Limits};

/// A symmetric function with integer coefficients in the monomial basis.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct SymFunc {
    terms: BTreeMap<IntPartition, i64>,
}

fn overflow() -> Error {
    invalid("symmetric function coefficient overflow")
}

impl SymFunc {
    pub fn zero() -> SymFunc {
        SymFunc::default()
    }

    pub fn one() -> SymFunc {
        SymFunc::monomial(IntPartition::empty())
    }

    /// `m_λ`.
    pub fn monomial(lambda: IntPartition) -> SymFunc {
        SymFunc {
            terms: BTreeMap::from([(lambda, 1)]),
        }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (IntPartition, i64)>) -> Result<SymFunc> {
        let mut f = SymFunc::zero();
        for (p, c) in terms {
            f.add_term(p, c)?;
        }
        Ok(f)
    }

    pub(crate) fn add_term(&mut self, p: IntPartition, c: i64) -> Result<()> {
        if c == 0 {
            return Ok(());
        }
        match self.terms.entry(p) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get().checked_add(c).ok_or_else(overflow)?;
                if sum == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
        Ok(())
    }

    pub fn coeff(&self, p: &IntPartition) -> i64 {
        self.terms.get(p).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&IntPartition, i64)> {
        self.terms.iter().map(|(p, &c)| (p, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest degree present; 0 for the zero function.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(|p| p.weight()).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut w = self.terms.keys().map(|p| p.weight());
        match w.next() {
            None => true,
            Some(d) => w.all(|x| x == d),
        }
    }

    pub fn add(&self, other: &SymFunc) -> Result<SymFunc> {
        let mut out = self.clone();
        for (p, c) in other.terms() {
            out.add_term(p.clone(), c)?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &SymFunc) -> Result<SymFunc> {
        self.add(&other.scale(-1)?)
    }

    pub fn scale(&self, c: i64) -> Result<SymFunc> {
        let mut out = SymFunc::zero();
        for (p, v) in self.terms() {
            out.add_term(p.clone(), v.checked_mul(c).ok_or_else(overflow)?)?;
        }
        Ok(out)
    }

    pub fn multiply(&self, other: &SymFunc) -> Result<SymFunc> {
        self.multiply_with(other, &limits::current())
    }

    pub fn multiply_with(&self, other: &SymFunc, lim: &Limits) -> Result<SymFunc> {
        limits::check("symmetric function degree", self.degree() + other.degree(), lim.sym_degree_cap)?;
        let mut out = SymFunc::zero();
        let mut cache: HashMap<(IntPartition, IntPartition), Vec<(IntPartition, i64)>> = HashMap::new();
        for (a, ca) in self.terms() {
            for (b, cb) in other.terms() {
                let key = if a <= b { (a.clone(), b.clone()) } else { (b.clone(), a.clone()) };
                let prod = cache
                    .entry(key)
                    .or_insert_with(|| monomial_product(a, b));
                let c = ca.checked_mul(cb).ok_or_else(overflow)?;
                for (nu, k) in prod.iter() {
                    out.add_term(nu.clone(), c.checked_mul(*k).ok_or_else(overflow)?)?;
                }
            }
        }
        Ok(out)
    }

    /// Value at `x_1 = … = x_m = 1`, all other variables 0.
    pub fn specialize_ones(&self, m: u64) -> BigInt {
        self.terms()
            .map(|(p, c)| monomial_at_ones(p, m) * BigInt::from(c))
            .sum()
    }

    /// The polynomial in `m` agreeing with [`SymFunc::specialize_ones`].
    pub fn specialize_polynomial(&self) -> IntPolynomial {
        let mut out = IntPolynomial::zero();
        for (p, c) in self.terms() {
            // m_λ(1^m) = C(m, ℓ) · ℓ! / Π r_j!
            let term = IntPolynomial::binomial_term(p.len(), multinomial(p) * BigInt::from(c));
            out = out.add(&term);
        }
        out
    }
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |a, b| a * BigInt::from(b))
}

fn multiplicity_factor(p: &IntPartition) -> BigInt {
    p.multiplicities().into_iter().map(factorial).product()
}

/// `ℓ! / Π r_j!` for the part multiplicities of `p`.
fn multinomial(p: &IntPartition) -> BigInt {
    factorial(p.len()) / multiplicity_factor(p)
}

fn monomial_at_ones(p: &IntPartition, m: u64) -> BigInt {
    let l = p.len() as u64;
    if l > m {
        return BigInt::zero();
    }
    let falling: BigInt = (0..l).map(|i| BigInt::from(m - i)).product();
    falling / multiplicity_factor(p)
}

/// `m_a · m_b` in `ℓ(a)+ℓ(b)` variables: the coefficient of `m_ν` counts
/// ways to split the exponent vector of `ν` as a rearrangement of `a` plus a
/// rearrangement of `b`.
fn monomial_product(a: &IntPartition, b: &IntPartition) -> Vec<(IntPartition, i64)> {
    let nvars = a.len() + b.len();
    let mut out = Vec::new();
    for nu in enumerate_partitions(a.weight() + b.weight()) {
        if nu.len() > nvars {
            continue;
        }
        let mut x = nu.parts().to_vec();
        x.resize(nvars, 0);
        let mut count = 0i64;
        let mut alpha = vec![0usize; nvars];
        place(a.parts(), 0, &x, &mut alpha, b, &mut count);
        if count != 0 {
            out.push((nu, count));
        }
    }
    out
}

fn place(parts: &[usize], min_slot: usize, x: &[usize], alpha: &mut [usize], b: &IntPartition, count: &mut i64) {
    let Some((&p, rest)) = parts.split_first() else {
        let left: Vec<usize> = x.iter().zip(alpha.iter()).map(|(u, v)| u - v).collect();
        if IntPartition::from_unsorted(left) == *b {
            *count += 1;
        }
        return;
    };
    for i in min_slot..x.len() {
        if alpha[i] == 0 && x[i] >= p {
            alpha[i] = p;
            // equal parts go into increasing slots so each vector is seen once
            let next = if rest.first() == Some(&p) { i + 1 } else { 0 };
            place(rest, next, x, alpha, b, count);
            alpha[i] = 0;
        }
    }
}

/// Schur function `s_λ = Σ_μ K_{λμ} m_μ`.
pub fn schur(lambda: &IntPartition) -> Result<SymFunc> {
    schur_with(lambda, &limits::current())
}

pub fn schur_with(lambda: &IntPartition, lim: &Limits) -> Result<SymFunc> {
    limits::check("symmetric function degree", lambda.weight(), lim.sym_degree_cap)?;
    let mut out = SymFunc::zero();
    for mu in enumerate_partitions(lambda.weight()) {
        let k = kostka(lambda, &mu);
        out.add_term(mu, k)?;
    }
    Ok(out)
}

/// Number of semistandard tableaux of shape `lambda` and content `mu`,
/// built by adding one horizontal strip per entry value.
pub fn kostka(lambda: &IntPartition, mu: &IntPartition) -> i64 {
    if lambda.weight() != mu.weight() {
        return 0;
    }
    let mut memo = HashMap::new();
    strips(lambda.parts(), mu.parts(), &mut memo)
}

fn strips(shape: &[usize], content: &[usize], memo: &mut HashMap<(Vec<usize>, usize), i64>) -> i64 {
    let Some((&last, rest)) = content.split_last() else {
        return i64::from(shape.iter().all(|&s| s == 0));
    };
    let key = (shape.to_vec(), content.len());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    // remove a horizontal strip of size `last`: new row i length in
    // [shape[i+1], shape[i]]
    let mut total = 0;
    let mut inner = vec![0usize; shape.len()];
    fn go(
        i: usize,
        left: usize,
        shape: &[usize],
        inner: &mut Vec<usize>,
        rest: &[usize],
        memo: &mut HashMap<(Vec<usize>, usize), i64>,
        total: &mut i64,
    ) {
        if i == shape.len() {
            if left == 0 {
                let mut s = inner.clone();
                while s.last() == Some(&0) {
                    s.pop();
                }
                *total += strips(&s, rest, memo);
            }
            return;
        }
        let lo = shape.get(i + 1).copied().unwrap_or(0);
        for r in lo..=shape[i] {
            let take = shape[i] - r;
            if take > left {
                continue;
            }
            inner[i] = r;
            go(i + 1, left - take, shape, inner, rest, memo, total);
        }
    }
    go(0, last, shape, &mut inner, rest, memo, &mut total);
    memo.insert(key, total);
    total
}

/// Collect per-composition coefficients into a symmetric function, checking
/// that every rearrangement of a composition carries the same coefficient.
/// Compositions missing from the map count as 0.
pub fn assemble_from_quasi(coeffs: &BTreeMap<IntComposition, i64>) -> Result<SymFunc> {
    let mut by_class: BTreeMap<IntPartition, i64> = BTreeMap::new();
    for (alpha, &c) in coeffs {
        if c != 0 {
            by_class.insert(alpha.sorted(), c);
        }
    }
    let mut out = SymFunc::zero();
    for (lambda, c) in by_class {
        for r in rearrangements(lambda.parts()) {
            let comp = IntComposition::new(r).expect("rearranged partition is a composition");
            let got = coeffs.get(&comp).copied().unwrap_or(0);
            if got != c {
                return Err(Error::SymmetryViolation(format!(
                    "coefficient of {comp} is {got} but another rearrangement of {lambda} has {c}"
                )));
            }
        }
        out.add_term(lambda, c)?;
    }
    Ok(out)
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (p, c)) in self.terms().enumerate() {
            let sign = if c < 0 { "-" } else { "+" };
            if i == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let a = c.unsigned_abs();
            if a != 1 {
                write!(f, "{a}*")?;
            }
            write!(f, "m{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymFunc({self})")
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    partition: IntPartition,
    coeff: i64,
}

impl Serialize for SymFunc {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<TermJson> = self
            .terms()
            .map(|(p, c)| TermJson {
                partition: p.clone(),
                coeff: c,
            })
            .collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for SymFunc {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v: Vec<TermJson> = Vec::deserialize(d)?;
        SymFunc::from_terms(v.into_iter().map(|t| (t.partition, t.coeff))).map_err(serde::de::Error::custom)
    }
}
