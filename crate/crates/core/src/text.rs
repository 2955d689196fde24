//! Textual input: divisors, pairs and polynomials.
//!
//! ```text
//! pair    := '(' divisor ';' divisor ')'
//! divisor := '0' | ['-'] term (('+' | '-') term)*
//! term    := [coeff '*'] atom
//! coeff   := integer | integer '/' positive-integer
//! atom    := '[' rational ']' | 'div(' poly ')'
//! poly    := ['-'] mono (('+' | '-') mono)*     (variable t)
//! mono    := rational ['*' power] | power
//! power   := var ['^' integer]
//! ```
//!
//! Whitespace is insignificant. `[p]` is `div(t - p)`. A `div` argument that
//! is not squarefree is decomposed; the zero polynomial is rejected. Every
//! printed form produced by this crate parses back to the same value.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::Monomial;
use crate::divisor::QDivisor;
use crate::dpd::DpdPair;
use crate::error::{Error, Result};
use crate::{QMultiPoly, QPoly, Rational};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Self { src: text.as_bytes(), pos: 0 }
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse { position: self.pos, message: message.into() })
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected '{}'", c as char))
        }
    }

    fn eat_keyword(&mut self, kw: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(kw.as_bytes()) {
            self.pos += kw.len();
            true
        } else {
            false
        }
    }

    fn finish(&mut self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(c) => self.err(format!("unexpected '{}' after end of expression", c as char)),
        }
    }

    fn digits(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("digit string"))
    }

    fn at_digit(&mut self) -> bool {
        self.peek().is_some_and(|c| c.is_ascii_digit())
    }

    /// `integer ['/' positive-integer]`, unsigned.
    fn unsigned_rational(&mut self) -> Result<Rational> {
        let num = self.digits()?;
        if self.eat(b'/') {
            let at = self.pos;
            let den = self.digits()?;
            if den.is_zero() {
                return Err(Error::Parse { position: at, message: "zero denominator".into() });
            }
            Ok(Rational::new(num, den))
        } else {
            Ok(Rational::from_integer(num))
        }
    }

    fn signed_rational(&mut self) -> Result<Rational> {
        let neg = self.eat(b'-');
        let r = self.unsigned_rational()?;
        Ok(if neg { -r } else { r })
    }

    fn exponent(&mut self) -> Result<u32> {
        if !self.eat(b'^') {
            return Ok(1);
        }
        let at = self.pos;
        let n = self.digits()?;
        u32::try_from(n).map_err(|_| Error::Parse { position: at, message: "exponent too large".into() })
    }

    fn identifier(&mut self, vars: &[&str]) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self
            .src
            .get(self.pos)
            .is_some_and(|c| c.is_ascii_alphanumeric() || *c == b'_' || *c == b'\'')
        {
            if self.pos == start && self.src[self.pos].is_ascii_digit() {
                break;
            }
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii identifier");
        match vars.iter().position(|v| *v == name) {
            Some(i) => Ok(i),
            None => {
                self.pos = start;
                self.err(format!("expected one of the variables {}", vars.join(", ")))
            }
        }
    }

    /// `mono := rational ['*' power ('*' power)*] | power ('*' power)*`
    fn mono(&mut self, vars: &[&str]) -> Result<QMultiPoly> {
        let mut coeff = Rational::one();
        let mut exps = vec![0u32; vars.len()];
        if self.at_digit() {
            coeff = self.unsigned_rational()?;
            if !self.eat(b'*') {
                return Ok(QMultiPoly::term(coeff, exps));
            }
        }
        loop {
            let v = self.identifier(vars)?;
            exps[v] += self.exponent()?;
            if !self.eat(b'*') {
                break;
            }
        }
        Ok(QMultiPoly::term(coeff, exps))
    }

    fn multipoly(&mut self, vars: &[&str]) -> Result<QMultiPoly> {
        let mut acc = QMultiPoly::zero(vars.len());
        let mut neg = self.eat(b'-');
        loop {
            let m = self.mono(vars)?;
            acc = if neg { &acc - &m } else { &acc + &m };
            neg = match self.peek() {
                Some(b'+') => false,
                Some(b'-') => true,
                _ => return Ok(acc),
            };
            self.pos += 1;
        }
    }

    fn unipoly(&mut self) -> Result<QPoly> {
        to_unipoly(&self.multipoly(&["t"])?)
    }

    fn atom(&mut self) -> Result<QDivisor> {
        if self.eat(b'[') {
            let p = self.signed_rational()?;
            self.expect(b']')?;
            return Ok(QDivisor::point(p, Rational::one()));
        }
        if self.eat_keyword("div") {
            self.expect(b'(')?;
            let at = self.pos;
            let p = self.unipoly()?;
            self.expect(b')')?;
            if p.is_zero() {
                return Err(Error::Parse { position: at, message: "div of the zero polynomial".into() });
            }
            return QDivisor::div_of(&crate::QRatFunc::from_poly(p))
                .map_err(|e| Error::Parse { position: at, message: e.to_string() });
        }
        self.err("expected '[' or 'div('")
    }

    fn term(&mut self) -> Result<QDivisor> {
        if self.at_digit() {
            let c = self.unsigned_rational()?;
            self.expect(b'*')?;
            Ok(self.atom()?.scale(&c))
        } else {
            self.atom()
        }
    }

    fn divisor(&mut self) -> Result<QDivisor> {
        // a lone "0" is the zero divisor
        let save = self.pos;
        if self.eat(b'0') && matches!(self.peek(), None | Some(b';') | Some(b')')) {
            return Ok(QDivisor::zero());
        }
        self.pos = save;
        let mut acc = QDivisor::zero();
        let mut neg = self.eat(b'-');
        loop {
            let t = self.term()?;
            acc = if neg { acc.sub(&t) } else { acc.add(&t) };
            neg = match self.peek() {
                Some(b'+') => false,
                Some(b'-') => true,
                _ => return Ok(acc),
            };
            self.pos += 1;
        }
    }
}

fn to_unipoly(p: &QMultiPoly) -> Result<QPoly> {
    let mut coeffs: Vec<Rational> = Vec::new();
    for (m, c) in p.terms() {
        let j = m.0[0] as usize;
        if coeffs.len() <= j {
            coeffs.resize(j + 1, Rational::zero());
        }
        coeffs[j] = c.clone();
    }
    Ok(QPoly::from_coeffs(coeffs))
}

/// Polynomial in the given variables.
pub fn parse_poly(text: &str, vars: &[&str]) -> Result<QMultiPoly> {
    let mut p = Parser::new(text);
    let out = p.multipoly(vars)?;
    p.finish()?;
    Ok(out)
}

/// Univariate polynomial in `t`.
pub fn parse_unipoly(text: &str) -> Result<QPoly> {
    let mut p = Parser::new(text);
    let out = p.unipoly()?;
    p.finish()?;
    Ok(out)
}

pub fn parse_rational(text: &str) -> Result<Rational> {
    let mut p = Parser::new(text);
    let out = p.signed_rational()?;
    p.finish()?;
    Ok(out)
}

pub fn parse_divisor(text: &str) -> Result<QDivisor> {
    let mut p = Parser::new(text);
    let out = p.divisor()?;
    p.finish()?;
    Ok(out)
}

pub fn parse_pair(text: &str) -> Result<DpdPair> {
    let mut p = Parser::new(text);
    p.expect(b'(')?;
    let plus = p.divisor()?;
    p.expect(b';')?;
    let minus = p.divisor()?;
    p.expect(b')')?;
    p.finish()?;
    Ok(DpdPair::new(plus, minus))
}

/// The exponent vector of a single-term polynomial, for callers that build
/// monomials from text.
pub fn parse_monomial(text: &str, vars: &[&str]) -> Result<Monomial> {
    let p = parse_poly(text, vars)?;
    match p.terms().collect::<Vec<_>>().as_slice() {
        [(m, c)] if c.is_one() => Ok((*m).clone()),
        _ => Err(Error::Parse { position: 0, message: "expected a single monic monomial".into() }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::util::{int, rat};

    #[test]
    fn divisor_examples() {
        assert_eq!(parse_divisor("-1/2*[0]").unwrap(), QDivisor::point(int(0), rat(-1, 2)));
        let d = parse_divisor("1/2*[0] - 3*div(t-1)").unwrap();
        assert_eq!(d.entries().len(), 2);
        assert_eq!(d.eval_at(&int(1)), int(-3));
        let d = parse_divisor("div(t^2-2) + [0]").unwrap();
        assert_eq!(
            d.entries(),
            &[(QPoly::from_coeffs(vec![int(0), int(1)]), int(1)), (QPoly::from_coeffs(vec![int(-2), int(0), int(1)]), int(1))]
        );
        assert!(parse_divisor("0").unwrap().is_zero());
        assert!(parse_divisor("[0] - [0]").unwrap().is_zero());
    }

    #[test]
    fn squarefree_decomposition_of_arguments() {
        let d = parse_divisor("2*div(t^3 - t^2)").unwrap();
        assert_eq!(d.eval_at(&int(0)), int(4));
        assert_eq!(d.eval_at(&int(1)), int(2));
        assert_eq!(parse_divisor("div(3*t - 3)").unwrap(), QDivisor::point(int(1), int(1)));
    }

    #[test]
    fn errors_carry_positions() {
        match parse_divisor("div(0)") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 4),
            other => panic!("{other:?}"),
        }
        match parse_divisor("1/2*[x]") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 5),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_divisor("1/0*[1]"), Err(Error::Parse { position: 2, .. })));
        assert!(parse_divisor("[1] +").is_err());
        assert!(parse_divisor("[1] [2]").is_err());
        assert!(parse_pair("(0, 0)").is_err());
    }

    #[test]
    fn pair_and_poly() {
        let pair = parse_pair("(-1/2*[0]; -1/3*[1])").unwrap();
        assert_eq!(pair.plus, QDivisor::point(int(0), rat(-1, 2)));
        assert_eq!(pair.minus, QDivisor::point(int(1), rat(-1, 3)));
        let pair = parse_pair("( 0 ; 0 )").unwrap();
        assert!(pair.plus.is_zero() && pair.minus.is_zero());

        let f = parse_poly("x^2*y + z*s^2 - s^3", &crate::algebra::XYZS).unwrap();
        assert_eq!(f.to_string(), "x^2*y + z*s^2 - s^3");
        let g = parse_poly("x*y' - s^2", &["x", "y'", "z", "s"]).unwrap();
        assert_eq!(g.display_with(&["x", "y'", "z", "s"]).to_string(), "x*y' - s^2");
        assert_eq!(parse_unipoly("1/2*t + 3/4").unwrap().to_string(), "1/2*t + 3/4");
        assert_eq!(parse_unipoly("-t^2*t + 1").unwrap().to_string(), "-t^3 + 1");
        assert_eq!(parse_rational("-7/3").unwrap(), rat(-7, 3));
    }

    #[test]
    fn printed_forms_round_trip() {
        for text in ["1*div(t-1) - 1/2*div(t)", "-1/2*div(t)", "0", "3*div(t^2-2)"] {
            let d = parse_divisor(text).unwrap();
            assert_eq!(parse_divisor(&d.to_string()).unwrap(), d);
        }
        let pair = parse_pair("(-1/2*[0]; 1/2*[0] - 2*[1])").unwrap();
        assert_eq!(parse_pair(&pair.to_string()).unwrap(), pair);
    }
}
