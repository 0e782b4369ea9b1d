//! Floating-point scalar abstraction.
//!
//! All geometry and quadrature routines are generic over [`Real`] so the same
//! code runs at `f32` or `f64`. Selection rules and winding numbers never go
//! through this trait; they stay in exact integer/rational arithmetic.

use std::fmt::{Debug, Display};
use std::ops::AddAssign;

use num_traits::{Float, FloatConst, FromPrimitive};

/// Scalar type for everything measured in lengths, angles or action units.
pub trait Real:
    Float + FloatConst + FromPrimitive + AddAssign + Debug + Display + Send + Sync + 'static
{
    /// Convert an `f64` literal; panics only for values outside the type's
    /// range, which never happens for the constants used here.
    fn of(v: f64) -> Self {
        Self::from_f64(v).expect("literal not representable")
    }
}

impl Real for f32 {}
impl Real for f64 {}
