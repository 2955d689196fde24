use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::Rational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn to_i64(n: &BigInt) -> Result<i64> {
    n.to_i64().ok_or_else(|| Error::Overflow(n.to_string()))
}

pub fn floor_i64(q: &Rational) -> Result<i64> {
    to_i64(&q.floor().to_integer())
}

/// `(numerator, denominator)` of a rational in lowest terms, denominator positive.
pub fn parts(q: &Rational) -> Result<(i64, i64)> {
    Ok((to_i64(q.numer())?, to_i64(q.denom())?))
}

pub fn is_integer(q: &Rational) -> bool {
    q.denom().is_one()
}
