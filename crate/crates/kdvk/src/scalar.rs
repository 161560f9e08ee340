//! Scalar abstraction: the numerical core is generic over the floating type.

use num_traits::{Float, FloatConst, NumAssign, NumCast};
use rand::Rng;
use rand_distr::{Distribution, StandardNormal};

/// Floating scalar usable by every kernel in this crate: `f32` or `f64`.
pub trait Real:
    Float + FloatConst + NumAssign + rustfft::FftNum + std::iter::Sum<Self> + 'static
{
    /// Shorthand conversion from an `f64` literal; panics only on NaN-free
    /// out-of-range casts, which do not occur for the constants used here.
    fn of(v: f64) -> Self {
        <Self as NumCast>::from(v).expect("representable constant")
    }

    fn to_f64(self) -> f64 {
        num_traits::ToPrimitive::to_f64(&self).expect("finite scalar")
    }

    fn standard_normal<R: Rng + ?Sized>(rng: &mut R) -> Self;
}

impl Real for f32 {
    fn standard_normal<R: Rng + ?Sized>(rng: &mut R) -> Self {
        StandardNormal.sample(rng)
    }
}

impl Real for f64 {
    fn standard_normal<R: Rng + ?Sized>(rng: &mut R) -> Self {
        StandardNormal.sample(rng)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conversions_roundtrip() {
        assert_eq!(f64::of(0.5), 0.5);
        assert_eq!(f32::of(0.5), 0.5f32);
        assert_eq!(2.0f64.to_f64(), 2.0);
    }
}
