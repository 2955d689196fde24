//! Q-divisors on the affine line.
//!
//! A divisor is stored as a list of `(P, c)` with `P` monic, squarefree and
//! of positive degree, the `P` pairwise coprime, and `c` a nonzero rational.
//! The entry stands for `c * div(P)`: every root of `P` carries coefficient
//! `c`. Points that are not rational are therefore handled through their
//! minimal-polynomial bundles and never enumerated.
//!
//! Without factoring, the basis is not unique: `div(t^2 - t)` and
//! `div(t) + div(t - 1)` are the same divisor. Equality is therefore
//! semantic (the difference refines to zero), while printing follows the
//! stored basis.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::util::{floor_i64, int};
use crate::{QPoly, QRatFunc, Rational};

#[derive(Clone, Debug)]
pub struct QDivisor {
    basis: Vec<(QPoly, Rational)>,
}

impl PartialEq for QDivisor {
    fn eq(&self, other: &Self) -> bool {
        self.basis == other.basis || self.sub(other).is_zero()
    }
}

impl Eq for QDivisor {}

fn check_entry(p: &QPoly) -> Result<()> {
    if p.degree().unwrap_or(0) == 0 {
        return Err(Error::InvalidBasis(format!("{p} has degree < 1")));
    }
    if !p.is_monic() {
        return Err(Error::InvalidBasis(format!("{p} is not monic")));
    }
    if !p.is_squarefree()? {
        return Err(Error::InvalidBasis(format!("{p} is not squarefree")));
    }
    Ok(())
}

/// Rewrites a formal sum `sum c_i div(P_i)` over a pairwise coprime basis,
/// merging coefficients and dropping zero entries. Output is in canonical
/// order (degree, then coefficients from the leading one down).
pub fn coprime_refine(entries: Vec<(QPoly, Rational)>) -> Result<Vec<(QPoly, Rational)>> {
    for (p, _) in &entries {
        check_entry(p)?;
    }
    Ok(refine_unchecked(entries))
}

fn refine_unchecked(mut work: Vec<(QPoly, Rational)>) -> Vec<(QPoly, Rational)> {
    // Each split strictly lowers the total degree of the list, so this terminates.
    'outer: loop {
        for i in 0..work.len() {
            for j in (i + 1)..work.len() {
                let g = QPoly::gcd(&work[i].0, &work[j].0).expect("basis entries nonzero");
                if g.is_one() {
                    continue;
                }
                let (pj, cj) = work.swap_remove(j);
                let (pi, ci) = work.swap_remove(i);
                let rest_i = pi.exact_div(&g).expect("gcd divides");
                let rest_j = pj.exact_div(&g).expect("gcd divides");
                if !rest_i.is_constant() {
                    work.push((rest_i, ci.clone()));
                }
                if !rest_j.is_constant() {
                    work.push((rest_j, cj.clone()));
                }
                work.push((g, ci + cj));
                continue 'outer;
            }
        }
        break;
    }
    work.retain(|(_, c)| !c.is_zero());
    work.sort_by(|a, b| a.0.cmp(&b.0));
    work
}

impl QDivisor {
    pub fn zero() -> Self {
        Self { basis: Vec::new() }
    }

    /// `c * [p]`, i.e. `c * div(t - p)`.
    pub fn point(p: Rational, c: Rational) -> Self {
        Self::from_refined(vec![(QPoly::linear_root(p), c)])
    }

    /// `c * div(P)` for any nonzero polynomial; constants contribute nothing
    /// and repeated factors are split off by squarefree decomposition.
    pub fn from_poly(p: &QPoly, c: Rational) -> Result<Self> {
        let parts = p
            .squarefree_decompose()?
            .into_iter()
            .map(|(f, m)| (f, c.clone() * int(i64::from(m))))
            .collect();
        Ok(Self::from_refined(parts))
    }

    /// Builds a divisor from arbitrary valid entries, refining them.
    pub fn from_entries(entries: Vec<(QPoly, Rational)>) -> Result<Self> {
        Ok(Self { basis: coprime_refine(entries)? })
    }

    fn from_refined(entries: Vec<(QPoly, Rational)>) -> Self {
        Self { basis: refine_unchecked(entries) }
    }

    pub fn entries(&self) -> &[(QPoly, Rational)] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::from_refined(self.basis.iter().chain(&other.basis).cloned().collect())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        Self { basis: self.basis.iter().map(|(p, c)| (p.clone(), c * q)).collect() }
    }

    /// Principal divisor of a nonzero rational function.
    pub fn div_of(f: &QRatFunc) -> Result<Self> {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial("divisor of the zero function"));
        }
        let num = Self::from_poly(f.num(), Rational::one())?;
        let den = Self::from_poly(f.den(), Rational::one())?;
        Ok(num.sub(&den))
    }

    /// Coefficient-wise floor.
    pub fn floor(&self) -> Self {
        Self {
            basis: self
                .basis
                .iter()
                .map(|(p, c)| (p.clone(), c.floor()))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }

    pub fn fractional_part(&self) -> Self {
        Self {
            basis: self
                .basis
                .iter()
                .map(|(p, c)| (p.clone(), c - c.floor()))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }

    /// Coefficient at the rational point `p`.
    pub fn eval_at(&self, p: &Rational) -> Rational {
        self.basis
            .iter()
            .filter(|(q, _)| q.eval(p).is_zero())
            .map(|(_, c)| c.clone())
            .fold(Rational::zero(), |a, b| a + b)
    }

    /// Pullback along the covering `s -> s^d`.
    pub fn pullback_power(&self, d: usize) -> Result<Self> {
        let mut parts = Vec::new();
        for (p, c) in &self.basis {
            for (f, m) in p.compose_power(d)?.squarefree_decompose()? {
                parts.push((f, c * int(i64::from(m))));
            }
        }
        Ok(Self::from_refined(parts))
    }

    /// Transport along the automorphism `t -> alpha*t + beta`; the point `p`
    /// moves to `(p - beta)/alpha`.
    pub fn affine_transport(&self, alpha: &Rational, beta: &Rational) -> Result<Self> {
        if alpha.is_zero() {
            return Err(Error::InvalidArgument("affine transport needs alpha != 0".into()));
        }
        Ok(Self::from_refined(
            self.basis
                .iter()
                .map(|(p, c)| (p.compose_affine(alpha, beta).monic(), c.clone()))
                .collect(),
        ))
    }

    pub fn is_integral(&self) -> bool {
        self.basis.iter().all(|(_, c)| c.is_integer())
    }

    pub fn is_leq_zero(&self) -> bool {
        self.basis.iter().all(|(_, c)| !c.is_positive())
    }

    pub fn is_effective(&self) -> bool {
        self.basis.iter().all(|(_, c)| !c.is_negative())
    }

    /// Sum of the coefficients of all entries whose polynomial shares a root
    /// with `b`. For `b` taken from a common refinement this is the
    /// coefficient of the divisor along every root of `b`.
    pub fn coefficient_along(&self, b: &QPoly) -> Rational {
        self.basis
            .iter()
            .filter(|(p, _)| !QPoly::gcd(p, b).expect("nonzero").is_one())
            .map(|(_, c)| c.clone())
            .fold(Rational::zero(), |a, b| a + b)
    }

    /// `self <= other` coefficient-wise.
    pub fn le(&self, other: &Self) -> bool {
        other.sub(self).is_effective()
    }

    /// `sum c * deg P`
    pub fn degree(&self) -> Rational {
        self.basis
            .iter()
            .map(|(p, c)| c * int(p.degree().unwrap_or(0) as i64))
            .fold(Rational::zero(), |a, b| a + b)
    }

    /// `prod P^c` for an integral divisor. The basis is coprime, so numerator
    /// and denominator need no reduction.
    pub fn to_rational_function(&self) -> Result<QRatFunc> {
        let mut num = QPoly::one();
        let mut den = QPoly::one();
        for (p, c) in &self.basis {
            if !c.is_integer() {
                return Err(Error::InvalidArgument(format!(
                    "divisor {self} is not integral"
                )));
            }
            let e = floor_i64(c)?;
            let pow = p.pow(
                u32::try_from(e.unsigned_abs()).map_err(|_| Error::Overflow(c.to_string()))?,
            );
            if e > 0 {
                num = &num * &pow;
            } else {
                den = &den * &pow;
            }
        }
        Ok(QRatFunc::from_coprime(num, den))
    }
}

/// Pairwise coprime squarefree polynomials such that every basis polynomial
/// of every input is a product of some of them.
pub fn common_refinement(divisors: &[&QDivisor]) -> Vec<QPoly> {
    let polys = divisors
        .iter()
        .flat_map(|d| d.basis.iter().map(|(p, _)| (p.clone(), Rational::one())))
        .collect();
    refine_unchecked(polys).into_iter().map(|(p, _)| p).collect()
}

/// Compact polynomial form used inside `div(...)`.
pub(crate) fn compact(p: &QPoly) -> String {
    p.to_string().replace(' ', "")
}

impl fmt::Display for QDivisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.basis.is_empty() {
            return f.write_str("0");
        }
        for (i, (p, c)) in self.basis.iter().enumerate() {
            let abs = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            write!(f, "{abs}*div({})", compact(p))?;
        }
        Ok(())
    }
}
