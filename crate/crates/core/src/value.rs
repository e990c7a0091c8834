//! Sample value types that interpolants and series operate on.
//!
//! Interpolation and Chebyshev arithmetic are linear in the sample values,
//! so they are written once against [`LinearValue`] and reused for scalars,
//! 3-vectors (gyro axes share the barycentric denominator) and quaternion
//! coefficients.

use crate::quaternion::Quaternion;

/// Three-component sample, e.g. an angular increment in radians.
pub type Vec3 = [f64; 3];

/// Values that support the vector-space operations the numerics need.
pub trait LinearValue: Copy {
    const ZERO: Self;

    fn add(self, other: Self) -> Self;
    fn sub(self, other: Self) -> Self;
    fn scale(self, s: f64) -> Self;
    /// Largest component magnitude; used for convergence checks.
    fn abs_max(self) -> f64;
}

impl LinearValue for f64 {
    const ZERO: Self = 0.0;

    #[inline]
    fn add(self, other: Self) -> Self {
        self + other
    }

    #[inline]
    fn sub(self, other: Self) -> Self {
        self - other
    }

    #[inline]
    fn scale(self, s: f64) -> Self {
        self * s
    }

    #[inline]
    fn abs_max(self) -> f64 {
        self.abs()
    }
}

impl LinearValue for Vec3 {
    const ZERO: Self = [0.0; 3];

    #[inline]
    fn add(self, o: Self) -> Self {
        [self[0] + o[0], self[1] + o[1], self[2] + o[2]]
    }

    #[inline]
    fn sub(self, o: Self) -> Self {
        [self[0] - o[0], self[1] - o[1], self[2] - o[2]]
    }

    #[inline]
    fn scale(self, s: f64) -> Self {
        [self[0] * s, self[1] * s, self[2] * s]
    }

    #[inline]
    fn abs_max(self) -> f64 {
        self[0].abs().max(self[1].abs()).max(self[2].abs())
    }
}

impl LinearValue for Quaternion {
    const ZERO: Self = Quaternion::new(0.0, 0.0, 0.0, 0.0);

    #[inline]
    fn add(self, o: Self) -> Self {
        Quaternion::new(self.w + o.w, self.x + o.x, self.y + o.y, self.z + o.z)
    }

    #[inline]
    fn sub(self, o: Self) -> Self {
        Quaternion::new(self.w - o.w, self.x - o.x, self.y - o.y, self.z - o.z)
    }

    #[inline]
    fn scale(self, s: f64) -> Self {
        Quaternion::new(self.w * s, self.x * s, self.y * s, self.z * s)
    }

    #[inline]
    fn abs_max(self) -> f64 {
        self.w
            .abs()
            .max(self.x.abs())
            .max(self.y.abs())
            .max(self.z.abs())
    }
}

/// Values with a bilinear product, needed by series multiplication.
///
/// Scalar series use the ordinary product; quaternion series use the
/// Hamilton product (non-commutative).
pub trait ProductValue: LinearValue {
    fn mul(self, other: Self) -> Self;
}

impl ProductValue for f64 {
    #[inline]
    fn mul(self, other: Self) -> Self {
        self * other
    }
}

impl ProductValue for Quaternion {
    #[inline]
    fn mul(self, other: Self) -> Self {
        self.hamilton(other)
    }
}
