use std::fmt::{Debug, Display};

/// Coordinate scalar: `f32` or `f64`.
///
/// Every algorithmic decision in this crate is a comparison, so any IEEE
/// float works; arithmetic is only used for tie perturbation and for the
/// triangle/octant change of coordinates.
pub trait Scalar: num_traits::Float + Debug + Display + 'static {
    /// Smallest value strictly greater than `self` (next representable).
    ///
    /// Used as a last-resort separator when an additive perturbation
    /// underflows the float's precision.
    fn next_toward_inf(self) -> Self;
}

impl Scalar for f32 {
    fn next_toward_inf(self) -> Self {
        self.next_up()
    }
}

impl Scalar for f64 {
    fn next_toward_inf(self) -> Self {
        self.next_up()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn next_toward_inf_is_strictly_greater() {
        for v in [0.0f64, -0.0, 1.0, -1.0, 1e300, -1e-300, f64::MIN_POSITIVE] {
            assert!(v.next_toward_inf() > v, "failed for {v}");
        }
        assert!(0.5f32.next_toward_inf() > 0.5f32);
    }
}
