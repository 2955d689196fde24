use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{FromPrimitive, One, Zero};

/// Exact coefficient field.
///
/// Totally ordered so canonical forms and sign-aware printing are well defined.
/// `BigRational` and `Ratio<i64>` qualify; floating point types do not.
pub trait Field:
    Clone
    + Debug
    + Display
    + Ord
    + Zero
    + One
    + FromPrimitive
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
    fn is_negative(&self) -> bool {
        *self < Self::zero()
    }

    fn from_count(n: usize) -> Self {
        Self::from_usize(n).expect("count fits the coefficient field")
    }
}

impl<T> Field for T where
    T: Clone
        + Debug
        + Display
        + Ord
        + Zero
        + One
        + FromPrimitive
        + Neg<Output = T>
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Div<Output = T>
{
}

/// Writes `c*mono` terms joined by ` + ` / ` - `, omitting unit coefficients.
pub(crate) fn write_terms<F: Field>(
    f: &mut std::fmt::Formatter<'_>,
    terms: impl IntoIterator<Item = (F, String)>,
) -> std::fmt::Result {
    let mut first = true;
    for (coeff, mono) in terms {
        let neg = coeff.is_negative();
        let abs = if neg { -coeff } else { coeff };
        if first {
            if neg {
                f.write_str("-")?;
            }
        } else {
            f.write_str(if neg { " - " } else { " + " })?;
        }
        first = false;
        if mono.is_empty() {
            write!(f, "{abs}")?;
        } else if abs.is_one() {
            f.write_str(&mono)?;
        } else {
            write!(f, "{abs}*{mono}")?;
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}
