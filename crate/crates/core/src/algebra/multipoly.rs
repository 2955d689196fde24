use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};


use super::field::{write_terms, Field};
use super::laurent::Laurent;
use crate::error::{Error, Result};

/// Default variable names for the four-variable ring of the embedding.
pub const XYZS: [&str; 4] = ["x", "y", "z", "s"];

/// Exponent vector ordered graded-lexicographically (total degree first,
/// then the first variable dominates).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn weighted_degree(&self, weights: &[i64]) -> i64 {
        self.0.iter().zip(weights).map(|(&e, &w)| i64::from(e) * w).sum()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Per-variable integer weights. Nonpositive entries are allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightVector(pub Vec<i64>);

impl WeightVector {
    pub fn all_positive(&self) -> bool {
        self.0.iter().all(|&w| w > 0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WeightedDegree {
    Homogeneous(i64),
    /// Every term with its weighted degree, in canonical descending order.
    NotHomogeneous(Vec<(Monomial, i64)>),
}

/// Sparse polynomial in a fixed number of variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly<F> {
    nvars: usize,
    terms: BTreeMap<Monomial, F>,
}

impl<F: Field> MultiPoly<F> {
    pub fn zero(nvars: usize) -> Self {
        Self { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: F) -> Self {
        Self::term(c, vec![0; nvars])
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, F::one())
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[index] = 1;
        Self::term(F::one(), exps)
    }

    pub fn term(c: F, exps: Vec<u32>) -> Self {
        let nvars = exps.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial(exps), c);
        }
        Self { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical (descending) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &F)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, exps: &[u32]) -> F {
        self.terms
            .get(&Monomial(exps.to_vec()))
            .cloned()
            .unwrap_or_else(F::zero)
    }

    fn insert_add(&mut self, mono: Monomial, c: F) {
        match self.terms.remove(&mono) {
            Some(old) => {
                let sum = old + c;
                if !sum.is_zero() {
                    self.terms.insert(mono, sum);
                }
            }
            None => {
                if !c.is_zero() {
                    self.terms.insert(mono, c);
                }
            }
        }
    }

    pub fn scale(&self, by: &F) -> Self {
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            out.insert_add(m.clone(), c.clone() * by.clone());
        }
        out
    }

    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(Self::one(self.nvars), |acc, _| &acc * self)
    }

    /// Sets variable `index` to `value`.
    pub fn specialize(&self, index: usize, value: &F) -> Self {
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut exps = m.0.clone();
            let e = std::mem::replace(&mut exps[index], 0);
            let factor = (0..e).fold(F::one(), |acc, _| acc * value.clone());
            out.insert_add(Monomial(exps), c.clone() * factor);
        }
        out
    }

    /// Drops a variable that does not occur.
    pub fn remove_var(&self, index: usize) -> Result<Self> {
        let mut out = Self::zero(self.nvars - 1);
        for (m, c) in &self.terms {
            if m.0[index] != 0 {
                return Err(Error::InvalidArgument(format!(
                    "variable {index} occurs and cannot be removed"
                )));
            }
            let mut exps = m.0.clone();
            exps.remove(index);
            out.insert_add(Monomial(exps), c.clone());
        }
        Ok(out)
    }

    /// Occurrences of variable `index` as `(monomial, coefficient)` pairs.
    pub fn terms_with(&self, index: usize) -> Vec<(&Monomial, &F)> {
        self.terms().filter(|(m, _)| m.0[index] > 0).collect()
    }

    pub fn weighted_degree(&self, weights: &WeightVector) -> Result<WeightedDegree> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial("weighted degree"));
        }
        if weights.0.len() != self.nvars {
            return Err(Error::InvalidArgument(format!(
                "{} weights for {} variables",
                weights.0.len(),
                self.nvars
            )));
        }
        let degrees: Vec<(Monomial, i64)> = self
            .terms()
            .map(|(m, _)| (m.clone(), m.weighted_degree(&weights.0)))
            .collect();
        let first = degrees[0].1;
        if degrees.iter().all(|(_, d)| *d == first) {
            Ok(WeightedDegree::Homogeneous(first))
        } else {
            Ok(WeightedDegree::NotHomogeneous(degrees))
        }
    }

    /// Evaluates with each variable replaced by a Laurent element.
    pub fn eval_laurent(&self, values: &[Laurent<F>]) -> Result<Laurent<F>> {
        if values.len() != self.nvars {
            return Err(Error::InvalidArgument("one value per variable required".into()));
        }
        let mut acc = Laurent::zero();
        for (m, c) in &self.terms {
            let mut term = Laurent::constant(c.clone());
            for (v, &e) in values.iter().zip(&m.0) {
                if e > 0 {
                    term = &term * &v.pow(i64::from(e))?;
                }
            }
            acc = &acc + &term;
        }
        Ok(acc)
    }

    pub fn display_with<'a>(&'a self, names: &'a [&'a str]) -> impl fmt::Display + 'a {
        DisplayWith { poly: self, names }
    }
}

struct DisplayWith<'a, F> {
    poly: &'a MultiPoly<F>,
    names: &'a [&'a str],
}

fn monomial_string(m: &Monomial, names: &[&str]) -> String {
    m.0.iter()
        .zip(names)
        .filter(|(&e, _)| e > 0)
        .map(|(&e, n)| if e == 1 { n.to_string() } else { format!("{n}^{e}") })
        .collect::<Vec<_>>()
        .join("*")
}

impl<F: Field> fmt::Display for DisplayWith<'_, F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = self.names;
        write_terms(
            f,
            self.poly.terms().map(|(m, c)| (c.clone(), monomial_string(m, names))),
        )
    }
}

impl<F: Field> fmt::Display for MultiPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.nvars <= XYZS.len() {
            self.display_with(&XYZS[..self.nvars]).fmt(f)
        } else {
            let owned: Vec<String> = (0..self.nvars).map(|i| format!("x{i}")).collect();
            let names: Vec<&str> = owned.iter().map(String::as_str).collect();
            DisplayWith { poly: self, names: &names }.fmt(f)
        }
    }
}

impl<F: Field> Add for &MultiPoly<F> {
    type Output = MultiPoly<F>;
    fn add(self, rhs: Self) -> MultiPoly<F> {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.insert_add(m.clone(), c.clone());
        }
        out
    }
}

impl<F: Field> Neg for &MultiPoly<F> {
    type Output = MultiPoly<F>;
    fn neg(self) -> MultiPoly<F> {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl<F: Field> Sub for &MultiPoly<F> {
    type Output = MultiPoly<F>;
    fn sub(self, rhs: Self) -> MultiPoly<F> {
        self + &(-rhs)
    }
}

impl<F: Field> Mul for &MultiPoly<F> {
    type Output = MultiPoly<F>;
    fn mul(self, rhs: Self) -> MultiPoly<F> {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = MultiPoly::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let exps = ma.0.iter().zip(&mb.0).map(|(a, b)| a + b).collect();
                out.insert_add(Monomial(exps), ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<F: Field> Add for MultiPoly<F> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl<F: Field> Sub for MultiPoly<F> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl<F: Field> Mul for MultiPoly<F> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}
