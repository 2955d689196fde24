use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::field::{write_terms, Field};
use crate::error::{Error, Result};

/// Dense univariate polynomial, coefficients stored from the constant term up.
///
/// The coefficient vector never carries trailing zeros, so structural
/// equality is equality of polynomials.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UniPoly<F> {
    coeffs: Vec<F>,
}

impl<F: Field> UniPoly<F> {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The indeterminate itself.
    pub fn var() -> Self {
        Self::monomial(F::one(), 1)
    }

    pub fn monomial(c: F, exp: usize) -> Self {
        let mut coeffs = vec![F::zero(); exp + 1];
        coeffs[exp] = c;
        Self::from_coeffs(coeffs)
    }

    /// `t - root`
    pub fn linear_root(root: F) -> Self {
        Self::from_coeffs(vec![-root, F::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn coeff(&self, exp: usize) -> F {
        self.coeffs.get(exp).cloned().unwrap_or_else(F::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading_coeff(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(|c| c.is_one())
    }

    pub fn eval(&self, at: &F) -> F {
        self.coeffs
            .iter()
            .rev()
            .fold(F::zero(), |acc, c| acc * at.clone() + c.clone())
    }

    pub fn scale(&self, by: &F) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c.clone() * by.clone()).collect())
    }

    /// Divides by the leading coefficient; the zero polynomial is returned unchanged.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            Some(lc) if !lc.is_one() => {
                let inv = F::one() / lc.clone();
                self.scale(&inv)
            }
            _ => self.clone(),
        }
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * F::from_count(i))
                .collect(),
        )
    }

    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lc = divisor.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![F::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = rem[i + dd].clone() / lc.clone();
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = rem[i + j].clone() - c.clone() * dc.clone();
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// Quotient when `divisor` divides `self` exactly.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        match self.div_rem(divisor) {
            Ok((q, r)) if r.is_zero() => Some(q),
            _ => None,
        }
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.exact_div(self).is_some()
    }

    /// Monic greatest common divisor.
    pub fn gcd(a: &Self, b: &Self) -> Result<Self> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::ZeroPolynomial("gcd of two zero polynomials"));
        }
        let (mut x, mut y) = (a.monic(), b.monic());
        while !y.is_zero() {
            let (_, r) = x.div_rem(&y)?;
            x = y;
            y = r.monic();
        }
        Ok(x.monic())
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `self(inner)`
    pub fn compose(&self, inner: &Self) -> Self {
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| {
            &(&acc * inner) + &Self::constant(c.clone())
        })
    }

    /// `self(t^d)`
    pub fn compose_power(&self, d: usize) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidArgument("compose_power needs d >= 1".into()));
        }
        let Some(deg) = self.degree() else {
            return Ok(Self::zero());
        };
        let mut coeffs = vec![F::zero(); deg * d + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * d] = c.clone();
        }
        Ok(Self::from_coeffs(coeffs))
    }

    /// `self(alpha*t + beta)`
    pub fn compose_affine(&self, alpha: &F, beta: &F) -> Self {
        self.compose(&Self::from_coeffs(vec![beta.clone(), alpha.clone()]))
    }

    /// True iff `gcd(q, q') = 1`.
    pub fn is_squarefree(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial("squarefree test"));
        }
        Ok(Self::gcd(self, &self.derivative())?.is_one())
    }

    /// Yun's algorithm. The input is made monic first; factors are monic,
    /// squarefree, pairwise coprime, and listed by increasing multiplicity.
    pub fn squarefree_decompose(&self) -> Result<Vec<(Self, u32)>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial("squarefree decomposition"));
        }
        let f = self.monic();
        if f.is_constant() {
            return Ok(Vec::new());
        }
        let df = f.derivative();
        let a0 = Self::gcd(&f, &df)?;
        let mut b = f.exact_div(&a0).expect("gcd divides");
        let c = df.exact_div(&a0).expect("gcd divides");
        let mut d = &c - &b.derivative();
        let mut out = Vec::new();
        let mut mult = 1u32;
        while !b.is_constant() {
            let a = Self::gcd(&b, &d)?;
            let nb = b.exact_div(&a).expect("gcd divides");
            let nc = d.exact_div(&a).expect("gcd divides");
            if !a.is_constant() {
                out.push((a, mult));
            }
            d = &nc - &nb.derivative();
            b = nb;
            mult += 1;
        }
        Ok(out)
    }

    pub fn display_var<'a>(&'a self, var: &'a str) -> impl fmt::Display + 'a {
        DisplayVar { poly: self, var }
    }
}

struct DisplayVar<'a, F> {
    poly: &'a UniPoly<F>,
    var: &'a str,
}

impl<F: Field> fmt::Display for DisplayVar<'_, F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .poly
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                let mono = match i {
                    0 => String::new(),
                    1 => self.var.to_string(),
                    _ => format!("{}^{}", self.var, i),
                };
                (c.clone(), mono)
            });
        write_terms(f, terms)
    }
}

impl<F: Field> fmt::Display for UniPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display_var("t").fmt(f)
    }
}

/// Canonical order: by degree, then coefficients compared from the leading one down.
impl<F: Field> Ord for UniPoly<F> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl<F: Field> PartialOrd for UniPoly<F> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<F: Field> Add for &UniPoly<F> {
    type Output = UniPoly<F>;
    fn add(self, rhs: Self) -> UniPoly<F> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<F: Field> Sub for &UniPoly<F> {
    type Output = UniPoly<F>;
    fn sub(self, rhs: Self) -> UniPoly<F> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<F: Field> Mul for &UniPoly<F> {
    type Output = UniPoly<F>;
    fn mul(self, rhs: Self) -> UniPoly<F> {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![F::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        UniPoly::from_coeffs(out)
    }
}

impl<F: Field> Neg for &UniPoly<F> {
    type Output = UniPoly<F>;
    fn neg(self) -> UniPoly<F> {
        UniPoly::from_coeffs(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<F: Field> $tr for UniPoly<F> {
            type Output = UniPoly<F>;
            fn $m(self, rhs: Self) -> UniPoly<F> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<F: Field> Neg for UniPoly<F> {
    type Output = UniPoly<F>;
    fn neg(self) -> UniPoly<F> {
        -&self
    }
}

impl<F: Field> Zero for UniPoly<F> {
    fn zero() -> Self {
        UniPoly::zero()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<F: Field> One for UniPoly<F> {
    fn one() -> Self {
        UniPoly::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::{BigRational, Ratio};

    type P = UniPoly<BigRational>;

    fn p(coeffs: &[i64]) -> P {
        P::from_coeffs(coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    fn t_minus(r: i64) -> P {
        p(&[-r, 1])
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(P::gcd(&p(&[-1, 0, 1]), &t_minus(1)).unwrap(), t_minus(1));
        assert_eq!(P::gcd(&p(&[0, 1]), &P::one()).unwrap(), P::one());
        // (t-1)^2 (t-2) against (t-1)(t-3)
        let a = &(&t_minus(1) * &t_minus(1)) * &t_minus(2);
        let b = &t_minus(1) * &t_minus(3);
        assert_eq!(P::gcd(&a, &b).unwrap(), t_minus(1));
        assert!(P::gcd(&P::zero(), &P::zero()).is_err());
    }

    #[test]
    fn squarefree_examples() {
        assert!(t_minus(1).is_squarefree().unwrap());
        assert!(!t_minus(1).pow(2).is_squarefree().unwrap());
        assert!(p(&[-2, 0, 1]).is_squarefree().unwrap());
        assert!(P::zero().is_squarefree().is_err());
    }

    #[test]
    fn yun_examples() {
        let q = &t_minus(1).pow(2) * &p(&[1, 1]);
        assert_eq!(
            q.squarefree_decompose().unwrap(),
            vec![(p(&[1, 1]), 1), (t_minus(1), 2)]
        );
        assert_eq!(p(&[-2, 0, 1]).squarefree_decompose().unwrap(), vec![(p(&[-2, 0, 1]), 1)]);
        assert!(P::one().squarefree_decompose().unwrap().is_empty());
        // t^3 (t-1)^2 (t+2)
        let q = &(&p(&[0, 0, 0, 1]) * &t_minus(1).pow(2)) * &p(&[2, 1]);
        assert_eq!(
            q.squarefree_decompose().unwrap(),
            vec![(p(&[2, 1]), 1), (t_minus(1), 2), (p(&[0, 1]), 3)]
        );
    }

    #[test]
    fn compose_power_examples() {
        assert_eq!(t_minus(1).compose_power(2).unwrap(), p(&[-1, 0, 1]));
        assert_eq!(P::one().compose_power(5).unwrap(), P::one());
        assert_eq!(p(&[-2, 0, 1]).compose_power(3).unwrap(), p(&[-2, 0, 0, 0, 0, 0, 1]));
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = p(&[3, -1, 4, 1, -5]);
        let b = p(&[2, 0, 7]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree().unwrap() < 2);
        assert!(a.div_rem(&P::zero()).is_err());
    }

    #[test]
    fn printing() {
        assert_eq!(p(&[-2, 0, 1]).to_string(), "t^2 - 2");
        assert_eq!(p(&[1, -1]).to_string(), "-t + 1");
        assert_eq!(P::zero().to_string(), "0");
        let half = P::from_coeffs(vec![BigRational::new(3.into(), 4.into()), BigRational::new(1.into(), 2.into())]);
        assert_eq!(half.display_var("s").to_string(), "1/2*s + 3/4");
    }

    #[test]
    fn works_over_machine_rationals() {
        type Q64 = UniPoly<Ratio<i64>>;
        let a = Q64::from_coeffs(vec![Ratio::from(-1), Ratio::from(0), Ratio::from(1)]);
        let b = Q64::from_coeffs(vec![Ratio::from(-1), Ratio::from(1)]);
        assert_eq!(Q64::gcd(&a, &b).unwrap(), b);
    }
}
