//! Scalar abstraction used by every numeric routine in the crate.
//!
//! All instance types, LP machinery and guarantees are generic over a
//! floating-point scalar so the same code runs in `f32` or `f64`. The
//! crate root exports `*64` / `*32` aliases for the common types.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FromPrimitive};

/// Floating-point scalar: `f32` or `f64` (or anything float-like that
/// satisfies the bounds).
pub trait Scalar:
    Float + FromPrimitive + Sum + Debug + Display + Default + Send + Sync + 'static
{
    /// Cast an `f64` algorithm constant into the scalar type.
    fn of(value: f64) -> Self {
        Self::from_f64(value).expect("constant not representable in scalar type")
    }

    /// Cast a count into the scalar type.
    fn of_usize(value: usize) -> Self {
        Self::from_usize(value).expect("count not representable in scalar type")
    }
}

impl<T> Scalar for T where
    T: Float + FromPrimitive + Sum + Debug + Display + Default + Send + Sync + 'static
{
}
