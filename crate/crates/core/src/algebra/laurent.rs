use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::field::Field;
use super::ratfunc::RationalFunction;
use super::unipoly::UniPoly;
use crate::error::{Error, Result};

/// Element of `K(t)[u, u^-1]`: finitely many powers of `u` with
/// rational-function coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Laurent<F> {
    terms: BTreeMap<i64, RationalFunction<F>>,
}

impl<F: Field> Laurent<F> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        Self::term(RationalFunction::constant(c), 0)
    }

    /// `coeff * u^exp`
    pub fn term(coeff: RationalFunction<F>, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        Self { terms }
    }

    pub fn poly_term(coeff: UniPoly<F>, exp: i64) -> Self {
        Self::term(RationalFunction::from_poly(coeff), exp)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> RationalFunction<F> {
        self.terms.get(&exp).cloned().unwrap_or_else(RationalFunction::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &RationalFunction<F>)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    /// The single `(exponent, coefficient)` pair of a monomial element.
    pub fn as_monomial(&self) -> Option<(i64, &RationalFunction<F>)> {
        if self.terms.len() == 1 {
            self.terms().next()
        } else {
            None
        }
    }

    fn insert_add(&mut self, exp: i64, c: RationalFunction<F>) {
        let sum = match self.terms.remove(&exp) {
            Some(old) => &old + &c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(exp, sum);
        }
    }

    /// Integer powers; negative exponents need a monomial with nonzero coefficient.
    pub fn pow(&self, exp: i64) -> Result<Self> {
        if exp < 0 {
            let (e, c) = self.as_monomial().ok_or_else(|| {
                Error::NotInvertible("only monomials have inverses in the Laurent ring".into())
            })?;
            let e = e
                .checked_mul(exp)
                .ok_or_else(|| Error::Overflow("Laurent exponent".into()))?;
            return Ok(Self::term(c.pow(exp)?, e));
        }
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        Ok(acc)
    }

    /// Replaces `u` by `scale * u^j`.
    pub fn substitute_u(&self, scale: &RationalFunction<F>, j: i64) -> Result<Self> {
        let mut out = Self::zero();
        for (&e, c) in &self.terms {
            if scale.is_zero() && e < 0 {
                return Err(Error::DivisionByZero);
            }
            let factor = scale.pow(e)?;
            out.insert_add(e * j, c * &factor);
        }
        Ok(out)
    }

    pub fn display_var<'a>(&'a self, var: &'a str) -> impl fmt::Display + 'a {
        DisplayVar { el: self, var }
    }
}

struct DisplayVar<'a, F> {
    el: &'a Laurent<F>,
    var: &'a str,
}

impl<F: Field> fmt::Display for DisplayVar<'_, F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.el.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .el
            .terms
            .iter()
            .rev()
            .map(|(e, c)| format!("({})*u^{}", c.display_var(self.var), e))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl<F: Field> fmt::Display for Laurent<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display_var("t").fmt(f)
    }
}

impl<F: Field> Add for &Laurent<F> {
    type Output = Laurent<F>;
    fn add(self, rhs: Self) -> Laurent<F> {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.insert_add(e, c.clone());
        }
        out
    }
}

impl<F: Field> Neg for &Laurent<F> {
    type Output = Laurent<F>;
    fn neg(self) -> Laurent<F> {
        Laurent { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

impl<F: Field> Sub for &Laurent<F> {
    type Output = Laurent<F>;
    fn sub(self, rhs: Self) -> Laurent<F> {
        self + &(-rhs)
    }
}

impl<F: Field> Mul for &Laurent<F> {
    type Output = Laurent<F>;
    fn mul(self, rhs: Self) -> Laurent<F> {
        let mut out = Laurent::zero();
        for (&ea, ca) in &self.terms {
            for (&eb, cb) in &rhs.terms {
                out.insert_add(ea + eb, ca * cb);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type P = UniPoly<BigRational>;
    type R = RationalFunction<BigRational>;
    type L = Laurent<BigRational>;

    fn p(coeffs: &[i64]) -> P {
        P::from_coeffs(coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    #[test]
    fn generator_product() {
        let u_plus = L::poly_term(p(&[0, 1]), 1);
        let u_minus = L::poly_term(p(&[-1, 1]), -1);
        assert_eq!(&u_plus * &u_minus, L::poly_term(p(&[0, -1, 1]), 0));
        assert_eq!(u_plus.pow(2).unwrap(), L::poly_term(p(&[0, 0, 1]), 2));
    }

    #[test]
    fn inverse_of_monomial() {
        let tu = L::poly_term(p(&[0, 1]), 1);
        let inv = tu.pow(-1).unwrap();
        assert_eq!(inv, L::term(R::new(P::one(), p(&[0, 1])).unwrap(), -1));
        assert_eq!(&tu * &inv, L::one());
        let two_terms = &tu + &L::one();
        assert!(two_terms.pow(-1).is_err());
        assert!(L::zero().pow(-1).is_err());
    }

    #[test]
    fn substitution() {
        // t u + u^-1 with u -> t u^2
        let el = &L::poly_term(p(&[0, 1]), 1) + &L::poly_term(P::one(), -1);
        let sub = el.substitute_u(&R::var(), 2).unwrap();
        let expected = &L::poly_term(p(&[0, 0, 1]), 2) + &L::term(R::var().inv().unwrap(), -2);
        assert_eq!(sub, expected);
        assert!(el.substitute_u(&R::zero(), 1).is_err());
    }
}
