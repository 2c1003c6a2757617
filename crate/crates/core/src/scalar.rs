use std::fmt::Debug;

use num_traits::{FromPrimitive, Num, ToPrimitive};

/// Number type usable by the generic numeric code.
///
/// Algorithms that divide by a known factor (fraction-free elimination)
/// assume the quotient is exact. That holds for fields and for integers on
/// exact quotients, and approximately for floats.
pub trait Scalar: Num + FromPrimitive + Clone + Debug + Send + Sync {
    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("i64 is representable")
    }
}

impl<T: Num + FromPrimitive + Clone + Debug + Send + Sync> Scalar for T {}

/// `base^exp` for a non-negative exponent, by squaring.
pub fn pow_u<T: Scalar>(base: &T, mut exp: u32) -> T {
    let mut acc = T::one();
    let mut b = base.clone();
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b.clone();
        }
        exp >>= 1;
        if exp > 0 {
            b = b.clone() * b;
        }
    }
    acc
}

/// Lossy conversion to `f64` for presentation.
pub fn rational_to_f64(r: &crate::Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

pub fn rat(n: i64, d: i64) -> crate::Rational {
    crate::Rational::new(n.into(), d.into())
}

pub fn rint(n: i64) -> crate::Rational {
    crate::Rational::from_integer(n.into())
}
