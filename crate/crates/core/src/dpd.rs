//! DPD pairs `(D+, D-)` on the affine line and the graded ring they present.
//!
//! The degree `i` piece of the ring is `{f : div f + i*D+ >= 0} u^i` for
//! `i >= 0` and `{f : div f + |i|*D- >= 0} u^i` for `i < 0`. Each piece is a
//! free module of rank one over `Q[t]`, generated by [`DpdPair::section_generator`].

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::divisor::{common_refinement, QDivisor};
use crate::error::{Error, Result};
use crate::util::{int, parts, rat, to_i64};
use crate::{QPoly, QRatFunc, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DpdPair {
    pub plus: QDivisor,
    pub minus: QDivisor,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<String>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Data `(d, e+, e-, k, Q)` of the normal form
/// `D+ = -(e+/d)[0]`, `D- = -(e-/d)[0] - (1/k) div(Q)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NormalFormData {
    d: i64,
    e_plus: i64,
    e_minus: i64,
    k: i64,
    q: QPoly,
}

/// How an input pair was moved to its normal form: optional interchange,
/// then `t -> alpha*t + beta`, then `(D+, D-) -> (D+ - div f, D- + div f)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transcript {
    pub interchanged: bool,
    pub alpha: Rational,
    pub beta: Rational,
    pub witness: QRatFunc,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SmoothnessFlags {
    /// The criterion evaluated at `0` only.
    pub literal: bool,
    /// The same criterion at every locus where `D+ + D- < 0`.
    pub pointwise: bool,
}

impl NormalFormData {
    pub fn new(d: i64, e_plus: i64, e_minus: i64, k: i64, q: QPoly) -> Result<Self> {
        let bad = |m: String| Err(Error::InvalidNormalForm(m));
        if d < 1 {
            return bad(format!("d = {d} must be positive"));
        }
        if !(0 < e_plus && e_plus <= d) {
            return bad(format!("e+ = {e_plus} must satisfy 0 < e+ <= d = {d}"));
        }
        if e_plus + e_minus < 0 {
            return bad(format!("e+ + e- = {} is negative", e_plus + e_minus));
        }
        if k < 1 {
            return bad(format!("k = {k} must be positive"));
        }
        if !q.is_monic() {
            return bad(format!("Q = {q} must be monic"));
        }
        if q.eval(&Rational::zero()).is_zero() {
            return bad(format!("Q = {q} vanishes at 0"));
        }
        Ok(Self { d, e_plus, e_minus, k, q })
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn e_plus(&self) -> i64 {
        self.e_plus
    }

    pub fn e_minus(&self) -> i64 {
        self.e_minus
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn q(&self) -> &QPoly {
        &self.q
    }

    pub fn deg_q(&self) -> i64 {
        self.q.degree().unwrap_or(0) as i64
    }

    pub fn is_toric(&self) -> bool {
        self.q.is_one()
    }

    pub fn with_k(&self, k: i64) -> Result<Self> {
        Self::new(self.d, self.e_plus, self.e_minus, k, self.q.clone())
    }

    /// The pair this data stands for.
    pub fn to_pair(&self) -> DpdPair {
        let zero = Rational::zero();
        let plus = QDivisor::point(zero.clone(), rat(-self.e_plus, self.d));
        let d0 = QDivisor::from_poly(&self.q, rat(-1, self.k)).expect("Q is nonzero");
        let minus = QDivisor::point(zero, rat(-self.e_minus, self.d)).add(&d0);
        DpdPair::new(plus, minus)
    }
}

impl Transcript {
    pub fn replay(&self, input: &DpdPair) -> Result<DpdPair> {
        let oriented = if self.interchanged { input.interchange() } else { input.clone() };
        let moved = oriented.affine_transport(&self.alpha, &self.beta)?;
        let shift = QDivisor::div_of(&self.witness)?;
        Ok(DpdPair::new(moved.plus.sub(&shift), moved.minus.add(&shift)))
    }
}

fn lcm_of_denominators<'a>(coeffs: impl IntoIterator<Item = &'a Rational>) -> Result<i64> {
    coeffs
        .into_iter()
        .try_fold(1i64, |acc, c| Ok(acc.lcm(&to_i64(c.denom())?)))
}

impl DpdPair {
    pub fn new(plus: QDivisor, minus: QDivisor) -> Self {
        Self { plus, minus }
    }

    /// Checks `D+ + D- <= 0`.
    pub fn check(&self) -> ValidationReport {
        let sum = self.plus.add(&self.minus);
        let violations = sum
            .entries()
            .iter()
            .filter(|(_, c)| c.is_positive())
            .map(|(p, c)| {
                format!("D+ + D- has coefficient {c} > 0 along div({})", crate::divisor::compact(p))
            })
            .collect();
        ValidationReport { violations }
    }

    fn require_valid(&self) -> Result<()> {
        let report = self.check();
        if report.is_valid() {
            Ok(())
        } else {
            Err(Error::InvalidPair(report.violations.join("; ")))
        }
    }

    pub fn interchange(&self) -> Self {
        Self::new(self.minus.clone(), self.plus.clone())
    }

    pub fn affine_transport(&self, alpha: &Rational, beta: &Rational) -> Result<Self> {
        Ok(Self::new(
            self.plus.affine_transport(alpha, beta)?,
            self.minus.affine_transport(alpha, beta)?,
        ))
    }

    /// A function `f` with `D+ = D'+ + div f` and `D- = D'- - div f`, if any.
    pub fn are_equivalent(&self, other: &Self) -> Option<QRatFunc> {
        let diff = self.plus.sub(&other.plus);
        if !diff.is_integral() || self.minus.sub(&other.minus) != diff.neg() {
            return None;
        }
        diff.to_rational_function().ok()
    }

    /// Generator `g_i = prod P^(-floor(|i| c))` of the degree `i` piece.
    pub fn section_generator(&self, i: i64) -> QRatFunc {
        let (div, n) = if i >= 0 { (&self.plus, i) } else { (&self.minus, -i) };
        div.scale(&int(n))
            .floor()
            .neg()
            .to_rational_function()
            .expect("floor is integral")
    }

    /// `div(g_i) + |i| D >= 0`, with `div(g_i)` read off the polynomial `g_i`.
    pub fn generator_bound_check(&self, i: i64) -> Result<bool> {
        let (div, n) = if i >= 0 { (&self.plus, i) } else { (&self.minus, -i) };
        let basis = self.basis();
        let Some(v) = valuations(&self.section_generator(i), &basis) else {
            return Ok(false);
        };
        let div_g = QDivisor::from_entries(
            basis.into_iter().zip(v).filter(|(_, e)| *e != 0).map(|(p, e)| (p, int(e))).collect(),
        )?;
        Ok(div_g.add(&div.scale(&int(n))).is_effective())
    }

    /// Common coprime squarefree basis of `D+` and `D-`.
    fn basis(&self) -> Vec<QPoly> {
        common_refinement(&[&self.plus, &self.minus])
    }

    /// Membership of `f u^i` in the ring.
    pub fn contains(&self, f: &QRatFunc, i: i64) -> Result<bool> {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial("membership test"));
        }
        Ok(f.checked_div(&self.section_generator(i))?.is_polynomial())
    }

    /// `g_i g_j` is a polynomial multiple of `g_(i+j)` for all `|i|, |j|, |i+j| <= n`.
    ///
    /// Every `g_i` is supported on the common basis, so the quotient is a
    /// polynomial iff its valuation along each basis polynomial is `>= 0`.
    /// Valuations are measured on the generators by exact division.
    pub fn ring_closure_check(&self, n: i64) -> Result<bool> {
        self.require_valid()?;
        let basis = self.basis();
        let mut vals = Vec::new();
        for i in -n..=n {
            match valuations(&self.section_generator(i), &basis) {
                Some(v) => vals.push(v),
                None => return Ok(false),
            }
        }
        let v = |i: i64| &vals[(i + n) as usize];
        for i in -n..=n {
            for j in -n..=n {
                if (i + j).abs() > n {
                    continue;
                }
                let (a, b, c) = (v(i), v(j), v(i + j));
                if (0..basis.len()).any(|k| a[k] + b[k] - c[k] < 0) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Normal form after optional interchange, transport of the fractional
    /// point of `D+` to 0, and an integral equivalence shift.
    pub fn to_normal_form(&self) -> Result<(NormalFormData, Transcript)> {
        self.require_valid()?;
        match self.normalize_oriented(false) {
            Ok(res) => Ok(res),
            Err(first) => self.interchange().normalize_oriented(true).map_err(|_| first),
        }
    }

    fn normalize_oriented(&self, interchanged: bool) -> Result<(NormalFormData, Transcript)> {
        let frac = self.plus.fractional_part();
        let p0 = match frac.entries() {
            [] => Rational::zero(),
            [(p, _)] if p.degree() == Some(1) => -p.coeff(0),
            [(p, _)] => {
                return Err(Error::NotNormalizable(format!(
                    "fractional part of D+ sits on the irrational locus div({})",
                    crate::divisor::compact(p)
                )))
            }
            _ => {
                return Err(Error::NotNormalizable(format!(
                    "fractional part {frac} of D+ is supported at more than one point"
                )))
            }
        };
        let alpha = Rational::one();
        let moved = self.affine_transport(&alpha, &p0)?;

        let zero = Rational::zero();
        let c0 = moved.plus.eval_at(&zero);
        let d = c0.denom().lcm(moved.minus.eval_at(&zero).denom());
        let d = to_i64(&d)?;
        // c0 - n0 lies in [-1, 0)
        let reduced = &c0 - (c0.floor() + Rational::one());
        let e_plus = to_i64(&(-&reduced * int(d)).to_integer())?;

        let new_plus = QDivisor::point(zero.clone(), reduced);
        let shift = moved.plus.sub(&new_plus);
        let witness = shift.to_rational_function()?;
        let new_minus = moved.minus.add(&shift);

        let c_minus = new_minus.eval_at(&zero);
        let e_minus = to_i64(&(-&c_minus * int(d)).to_integer())?;
        let rest = new_minus.sub(&QDivisor::point(zero, c_minus));
        let k = lcm_of_denominators(rest.entries().iter().map(|(_, c)| c))?;
        let d0 = rest.scale(&int(-k));
        if !d0.is_effective() {
            return Err(Error::NotNormalizable(format!(
                "D- = {new_minus} is positive away from 0 after the shift"
            )));
        }
        let q = d0
            .to_rational_function()?
            .as_polynomial()
            .cloned()
            .expect("effective integral divisor gives a polynomial");
        let nf = NormalFormData::new(d, e_plus, e_minus, k, q)?;
        Ok((nf, Transcript { interchanged, alpha, beta: p0, witness }))
    }

    /// Smoothness criterion `-m+ m- (D+(p) + D-(p)) = 1` together with
    /// `D0` reduced, read at 0 and at every locus with `D+ + D- < 0`.
    pub fn smoothness_check(&self) -> Result<SmoothnessFlags> {
        let (nf, _) = self.to_normal_form()?;
        let reduced = nf.q.is_squarefree()?;
        let pair = nf.to_pair();
        let criterion = |cp: &Rational, cm: &Rational| -> Result<bool> {
            let (_, mp) = parts(cp)?;
            let (_, mm) = parts(cm)?;
            Ok(-(int(mp * mm) * (cp + cm)) == Rational::one())
        };
        let zero = Rational::zero();
        let literal = reduced && criterion(&pair.plus.eval_at(&zero), &pair.minus.eval_at(&zero))?;
        let mut pointwise = reduced;
        for b in common_refinement(&[&pair.plus, &pair.minus]) {
            let cp = pair.plus.coefficient_along(&b);
            let cm = pair.minus.coefficient_along(&b);
            if (&cp + &cm).is_negative() && !criterion(&cp, &cm)? {
                pointwise = false;
            }
        }
        Ok(SmoothnessFlags { literal, pointwise })
    }
}

/// Multiplicity of `b` in `p` and the cofactor.
fn strip(mut p: QPoly, b: &QPoly) -> (i64, QPoly) {
    let mut count = 0;
    while let Some(q) = p.exact_div(b) {
        p = q;
        count += 1;
    }
    (count, p)
}

/// Exponents of `f` along a coprime squarefree `basis`, when `f` is a
/// constant times a product of powers of basis polynomials.
fn valuations(f: &QRatFunc, basis: &[QPoly]) -> Option<Vec<i64>> {
    let (mut num, mut den) = (f.num().clone(), f.den().clone());
    let mut out = Vec::with_capacity(basis.len());
    for b in basis {
        let (a, rest) = strip(num, b);
        num = rest;
        let (c, rest) = strip(den, b);
        den = rest;
        out.push(a - c);
    }
    (num.is_constant() && den.is_constant()).then_some(out)
}

impl fmt::Display for DpdPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; {})", self.plus, self.minus)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::util::rat;

    fn p(coeffs: &[i64]) -> QPoly {
        QPoly::from_coeffs(coeffs.iter().map(|&c| int(c)).collect())
    }

    fn at(point: i64, c: Rational) -> QDivisor {
        QDivisor::point(int(point), c)
    }

    fn dg_pair(n: i64, d: i64) -> DpdPair {
        DpdPair::new(at(0, rat(-1, d)), at(1, rat(-1, n - d)))
    }

    /// `(-(e/d)[0], (e/d)[0] - (1/k)[1])`
    fn pseudo_plane(e: i64, d: i64, k: i64) -> DpdPair {
        DpdPair::new(at(0, rat(-e, d)), at(0, rat(e, d)).add(&at(1, rat(-1, k))))
    }

    /// `(-(e/m)[0], (e/m)[0] - c[1])`
    fn gizatullin_pair(e: i64, m: i64, c: i64) -> DpdPair {
        DpdPair::new(at(0, rat(-e, m)), at(0, rat(e, m)).add(&at(1, int(-c))))
    }

    #[test]
    fn check_pair_examples() {
        assert!(pseudo_plane(1, 2, 1).check().is_valid());
        let bad = DpdPair::new(at(0, int(1)), QDivisor::zero());
        assert_eq!(bad.check().violations.len(), 1);
        assert!(DpdPair::new(at(0, int(-1)), at(0, int(-1))).check().is_valid());
    }

    #[test]
    fn equivalence_examples() {
        let base = dg_pair(5, 2);
        let shift = at(0, int(1));
        let shifted = DpdPair::new(base.plus.add(&shift), base.minus.sub(&shift));
        assert_eq!(shifted.are_equivalent(&base), Some(QRatFunc::var()));
        assert_eq!(base.are_equivalent(&base), Some(QRatFunc::one()));
        let other = DpdPair::new(at(0, rat(-1, 3)), base.minus.clone());
        assert_eq!(base.are_equivalent(&other), None);
    }

    #[test]
    fn interchange_is_involutive() {
        let a = pseudo_plane(1, 2, 3);
        assert_eq!(a.interchange().interchange(), a);
        assert_ne!(a.interchange(), a);
        let sym = DpdPair::new(at(0, int(-1)), at(0, int(-1)));
        assert_eq!(sym.interchange(), sym);
    }

    #[test]
    fn normal_form_examples() {
        let (nf, tr) = dg_pair(5, 2).to_normal_form().unwrap();
        assert_eq!((nf.d(), nf.e_plus(), nf.e_minus(), nf.k()), (2, 1, 0, 3));
        assert_eq!(nf.q(), &p(&[-1, 1]));
        assert!(!tr.interchanged);

        let (nf, _) = pseudo_plane(1, 2, 3).to_normal_form().unwrap();
        assert_eq!((nf.d(), nf.e_plus(), nf.e_minus(), nf.k()), (2, 1, -1, 3));
        assert_eq!(nf.q(), &p(&[-1, 1]));

        let (nf, _) = DpdPair::new(at(0, int(-1)), QDivisor::zero()).to_normal_form().unwrap();
        assert_eq!((nf.d(), nf.e_plus(), nf.e_minus(), nf.k()), (1, 1, 0, 1));
        assert!(nf.q().is_one());
    }

    #[test]
    fn normal_form_transports_and_shifts() {
        // fractional point at 3, integral junk elsewhere on D+
        let plus = at(3, rat(-5, 2)).add(&at(7, int(2)));
        let minus = at(3, rat(3, 2)).add(&at(7, int(-2))).add(&at(-1, rat(-2, 3)));
        let input = DpdPair::new(plus, minus);
        let (nf, tr) = input.to_normal_form().unwrap();
        assert_eq!((nf.d(), nf.e_plus(), nf.e_minus()), (2, 1, 1));
        assert_eq!(tr.replay(&input).unwrap(), nf.to_pair());
        let moved = input.affine_transport(&tr.alpha, &tr.beta).unwrap();
        assert_eq!(moved.are_equivalent(&nf.to_pair()), Some(tr.witness.clone()));
    }

    #[test]
    fn normal_form_interchanges_when_needed() {
        let input = DpdPair::new(at(0, rat(-1, 3)).add(&at(1, rat(-1, 2))), at(2, rat(-1, 2)));
        let (nf, tr) = input.to_normal_form().unwrap();
        assert!(tr.interchanged);
        assert_eq!(tr.replay(&input).unwrap(), nf.to_pair());
    }

    #[test]
    fn normal_form_errors() {
        let multi = DpdPair::new(at(0, rat(-1, 3)).add(&at(1, rat(-1, 2))), at(0, rat(-1, 3)).add(&at(1, rat(-1, 2))));
        assert!(matches!(multi.to_normal_form(), Err(Error::NotNormalizable(_))));
        let irr = QDivisor::from_poly(&p(&[-2, 0, 1]), rat(-1, 2)).unwrap();
        let irrational = DpdPair::new(irr.clone(), irr);
        assert!(matches!(irrational.to_normal_form(), Err(Error::NotNormalizable(_))));
        let invalid = DpdPair::new(at(0, int(1)), QDivisor::zero());
        assert!(matches!(invalid.to_normal_form(), Err(Error::InvalidPair(_))));
    }

    #[test]
    fn section_generator_examples() {
        let (e, m, c) = (1, 2, 3);
        let pair = gizatullin_pair(e, m, c);
        let t = QRatFunc::var();
        let t1 = QRatFunc::from_poly(p(&[-1, 1]));
        assert_eq!(pair.section_generator(1), t);
        assert_eq!(pair.section_generator(-1), t1.pow(c).unwrap());
        assert_eq!(pair.section_generator(m), t.pow(e).unwrap());
        assert_eq!(
            pair.section_generator(-m),
            &t1.pow(c * m).unwrap() * &t.pow(-e).unwrap()
        );
        assert_eq!(pair.section_generator(0), QRatFunc::one());
    }

    #[test]
    fn contains_examples() {
        let pair = gizatullin_pair(1, 2, 1);
        let t = QRatFunc::var();
        assert!(pair.contains(&t.pow(2).unwrap(), 1).unwrap());
        assert!(!pair.contains(&QRatFunc::one(), 1).unwrap());
        for i in -4..=4 {
            assert!(pair.contains(&pair.section_generator(i), i).unwrap());
        }
        assert!(pair.contains(&QRatFunc::zero(), 1).is_err());
    }

    #[test]
    fn ring_closure_examples() {
        assert!(pseudo_plane(1, 2, 2).ring_closure_check(6).unwrap());
        assert!(dg_pair(7, 3).ring_closure_check(1).unwrap());
        let invalid = DpdPair::new(at(0, int(1)), QDivisor::zero());
        assert!(invalid.ring_closure_check(3).is_err());
    }

    #[test]
    fn toric_flag() {
        let nf = NormalFormData::new(2, 1, 1, 3, QPoly::one()).unwrap();
        assert!(nf.is_toric());
        let (dg, _) = dg_pair(5, 2).to_normal_form().unwrap();
        assert!(!dg.is_toric());
        assert!(!NormalFormData::new(2, 1, 1, 3, p(&[-2, 1])).unwrap().is_toric());
    }

    #[test]
    fn smoothness_examples() {
        for n in 2..=6 {
            for d in 1..n {
                let flags = dg_pair(n, d).smoothness_check().unwrap();
                assert!(flags.literal && flags.pointwise, "DG({n},{d})");
            }
        }
        let nonreduced = DpdPair::new(at(0, rat(-1, 2)), at(2, int(-2)));
        let flags = nonreduced.smoothness_check().unwrap();
        assert!(!flags.literal && !flags.pointwise);
        let flags = pseudo_plane(1, 2, 2).smoothness_check().unwrap();
        assert_eq!(flags, SmoothnessFlags { literal: false, pointwise: true });
    }

    #[test]
    fn normal_form_validation() {
        assert!(NormalFormData::new(0, 1, 0, 1, QPoly::one()).is_err());
        assert!(NormalFormData::new(2, 3, 0, 1, QPoly::one()).is_err());
        assert!(NormalFormData::new(2, 1, -2, 1, QPoly::one()).is_err());
        assert!(NormalFormData::new(2, 1, 0, 0, QPoly::one()).is_err());
        assert!(NormalFormData::new(2, 1, 0, 1, p(&[0, 1])).is_err());
        assert!(NormalFormData::new(2, 1, 0, 1, p(&[-2, 2])).is_err());
    }
}
