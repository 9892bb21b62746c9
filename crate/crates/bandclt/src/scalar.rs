//! Numeric tower shared by the model, series and closed-form engines.
//!
//! Every quantity in those modules is generic over [`Scalar`], which has two
//! implementations: `f64` (float mode) and [`num::BigRational`] (exact mode).
//! Exact mode is what lets the combinatorial and series acceptance checks
//! assert equality instead of closeness.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Signed, Zero};

/// A real scalar that all model/series/closed-form computations run over.
///
/// Implementors must form a field under the std ops. `EXACT` selects the
/// comparison semantics declared by each operation: exact equality for
/// rationals, a stated tolerance for floats.
pub trait Scalar:
    Clone
    + std::fmt::Debug
    + std::fmt::Display
    + PartialEq
    + PartialOrd
    + std::ops::Add<Output = Self>
    + std::ops::Sub<Output = Self>
    + std::ops::Mul<Output = Self>
    + std::ops::Div<Output = Self>
    + std::ops::Neg<Output = Self>
    + num_traits::Zero
    + num_traits::One
    + Send
    + Sync
    + 'static
{
    const EXACT: bool;

    fn from_int(v: i64) -> Self;

    /// Exact ratio `num/den`. Panics if `den == 0`.
    fn from_ratio(num: i64, den: i64) -> Self;

    fn to_f64(&self) -> f64;

    fn abs(&self) -> Self;

    /// The exact square root, when one exists in the scalar type.
    ///
    /// For floats this is any nonnegative argument; for rationals only
    /// perfect squares of rationals. Irrational square roots are the one
    /// place the exact tower refuses to go (Wishart α, β for non-square
    /// weight ratios force float mode).
    fn sqrt_exact(&self) -> Option<Self>;

    /// Mode-aware comparison: exact equality in rational mode, absolute
    /// tolerance in float mode.
    fn eq_within(&self, other: &Self, tol: f64) -> bool {
        if Self::EXACT {
            self == other
        } else {
            (self.to_f64() - other.to_f64()).abs() <= tol
        }
    }

    fn is_nonneg(&self) -> bool {
        *self >= Self::zero()
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn from_int(v: i64) -> Self {
        v as f64
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        num as f64 / den as f64
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn abs(&self) -> Self {
        f64::abs(*self)
    }

    fn sqrt_exact(&self) -> Option<Self> {
        if *self >= 0.0 {
            Some(self.sqrt())
        } else {
            None
        }
    }
}

impl Scalar for BigRational {
    const EXACT: bool = true;

    fn from_int(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    fn to_f64(&self) -> f64 {
        num::ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn abs(&self) -> Self {
        Signed::abs(self)
    }

    fn sqrt_exact(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let num = self.numer();
        let den = self.denom();
        let ns = num.sqrt();
        let ds = den.sqrt();
        if &(&ns * &ns) == num && &(&ds * &ds) == den {
            Some(BigRational::new(ns, ds))
        } else {
            None
        }
    }
}

/// Shorthand used throughout tests and the CLI's exact mode.
pub type Rat = BigRational;

/// Exact rational from an integer pair; convenience for tests.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::from_ratio(num, den)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_sqrt_detects_perfect_squares() {
        assert_eq!(rat(4, 25).sqrt_exact(), Some(rat(2, 5)));
        assert_eq!(rat(9, 1).sqrt_exact(), Some(rat(3, 1)));
        assert_eq!(rat(2, 1).sqrt_exact(), None);
        assert_eq!(rat(1, 3).sqrt_exact(), None);
        assert_eq!(rat(-4, 1).sqrt_exact(), None);
        assert_eq!(rat(0, 5).sqrt_exact(), Some(rat(0, 1)));
    }

    #[test]
    fn float_sqrt() {
        assert_eq!(2.0f64.sqrt_exact(), Some(std::f64::consts::SQRT_2));
        assert_eq!((-1.0f64).sqrt_exact(), None);
    }

    #[test]
    fn eq_within_modes() {
        assert!(rat(1, 3).eq_within(&rat(1, 3), 0.0));
        assert!(!rat(1, 3).eq_within(&rat(1, 2), 1.0));
        assert!(0.1f64.eq_within(&0.100000000001, 1e-9));
    }
}
