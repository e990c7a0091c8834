//! Unit quaternions, scalar-first, Hamilton product convention.

/// Quaternion `w + xi + yj + zk` with the scalar part first.
///
/// Attitude quaternions rotate the body frame into the reference frame and
/// obey the kinematic equation `q̇ = ½ q ∘ ω` with the angular velocity
/// expressed in the body frame as a pure quaternion.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quaternion {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Quaternion {
    pub const IDENTITY: Self = Self::new(1.0, 0.0, 0.0, 0.0);

    #[inline]
    pub const fn new(w: f64, x: f64, y: f64, z: f64) -> Self {
        Self { w, x, y, z }
    }

    /// Pure quaternion `(0, v)`.
    #[inline]
    pub const fn pure(v: [f64; 3]) -> Self {
        Self::new(0.0, v[0], v[1], v[2])
    }

    /// Rotation of `angle` radians about the (unit) `axis`.
    pub fn from_axis_angle(axis: [f64; 3], angle: f64) -> Self {
        let n = (axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]).sqrt();
        let (s, c) = ((angle / 2.0).sin(), (angle / 2.0).cos());
        Self::new(c, s * axis[0] / n, s * axis[1] / n, s * axis[2] / n)
    }

    /// Hamilton product `self ∘ other`.
    #[inline]
    pub fn hamilton(self, o: Self) -> Self {
        Self::new(
            self.w * o.w - self.x * o.x - self.y * o.y - self.z * o.z,
            self.w * o.x + self.x * o.w + self.y * o.z - self.z * o.y,
            self.w * o.y - self.x * o.z + self.y * o.w + self.z * o.x,
            self.w * o.z + self.x * o.y - self.y * o.x + self.z * o.w,
        )
    }

    #[inline]
    pub fn conjugate(self) -> Self {
        Self::new(self.w, -self.x, -self.y, -self.z)
    }

    #[inline]
    pub fn norm(self) -> f64 {
        (self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z).sqrt()
    }

    /// Euclidean norm of the vector part.
    #[inline]
    pub fn vector_norm(self) -> f64 {
        (self.x * self.x + self.y * self.y + self.z * self.z).sqrt()
    }

    #[inline]
    pub fn normalized(self) -> Self {
        let n = self.norm();
        Self::new(self.w / n, self.x / n, self.y / n, self.z / n)
    }

    /// Representative of the same rotation with a nonnegative scalar part.
    #[inline]
    pub fn canonicalized(self) -> Self {
        if self.w < 0.0 {
            Self::new(-self.w, -self.x, -self.y, -self.z)
        } else {
            self
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn identity_is_neutral() {
        let q = Quaternion::new(0.3, -0.4, 0.5, 0.7).normalized();
        let p = Quaternion::IDENTITY.hamilton(q);
        assert_eq!(p, q);
        assert_eq!(q.hamilton(Quaternion::IDENTITY), q);
    }

    #[test]
    fn product_is_norm_multiplicative() {
        let a = Quaternion::new(1.0, 2.0, -3.0, 0.5);
        let b = Quaternion::new(-0.7, 0.1, 0.9, 2.0);
        let p = a.hamilton(b);
        assert!(close(p.norm(), a.norm() * b.norm(), 1e-13 * p.norm()));
    }

    #[test]
    fn product_is_associative() {
        let a = Quaternion::new(0.9, 0.1, -0.2, 0.3);
        let b = Quaternion::new(-0.5, 0.7, 0.2, -0.1);
        let c = Quaternion::new(0.2, -0.8, 0.4, 0.6);
        let lhs = a.hamilton(b).hamilton(c);
        let rhs = a.hamilton(b.hamilton(c));
        for (l, r) in [
            (lhs.w, rhs.w),
            (lhs.x, rhs.x),
            (lhs.y, rhs.y),
            (lhs.z, rhs.z),
        ] {
            assert!(close(l, r, 1e-13));
        }
    }

    #[test]
    fn conjugate_inverts_unit_quaternions() {
        let q = Quaternion::from_axis_angle([1.0, 2.0, 2.0], 0.83);
        let p = q.hamilton(q.conjugate());
        assert!(close(p.w, 1.0, 1e-15));
        assert!(p.vector_norm() < 1e-15);
    }

    #[test]
    fn ij_equals_k() {
        let i = Quaternion::new(0.0, 1.0, 0.0, 0.0);
        let j = Quaternion::new(0.0, 0.0, 1.0, 0.0);
        assert_eq!(i.hamilton(j), Quaternion::new(0.0, 0.0, 0.0, 1.0));
        assert_eq!(j.hamilton(i), Quaternion::new(0.0, 0.0, 0.0, -1.0));
    }

    #[test]
    fn canonicalization_flips_negative_scalar() {
        let q = Quaternion::new(-0.5, 0.1, 0.2, 0.3);
        let c = q.canonicalized();
        assert_eq!(c, Quaternion::new(0.5, -0.1, -0.2, -0.3));
        assert_eq!(c.canonicalized(), c);
    }
}
