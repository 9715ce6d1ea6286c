//! Real 3-vectors for momenta, field directions and rotation axes.

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Tolerance for the unit-norm check on directions.
pub const UNIT_TOL: f64 = 1e-12;

/// A real 3-vector.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Vec3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Vec3 {
    pub const ZERO: Vec3 = Vec3 { x: 0.0, y: 0.0, z: 0.0 };
    pub const X: Vec3 = Vec3 { x: 1.0, y: 0.0, z: 0.0 };
    pub const Y: Vec3 = Vec3 { x: 0.0, y: 1.0, z: 0.0 };
    pub const Z: Vec3 = Vec3 { x: 0.0, y: 0.0, z: 1.0 };

    pub fn new(x: f64, y: f64, z: f64) -> Self {
        Vec3 { x, y, z }
    }

    pub fn dot(&self, other: &Vec3) -> f64 {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    pub fn cross(&self, other: &Vec3) -> Vec3 {
        Vec3 {
            x: self.y * other.z - self.z * other.y,
            y: self.z * other.x - self.x * other.z,
            z: self.x * other.y - self.y * other.x,
        }
    }

    pub fn norm_sq(&self) -> f64 {
        self.dot(self)
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    /// Scaled copy.
    pub fn scale(&self, s: f64) -> Vec3 {
        Vec3::new(self.x * s, self.y * s, self.z * s)
    }

    /// Unit vector along `self`; error when the norm vanishes.
    pub fn normalized(&self) -> Result<Vec3> {
        let n = self.norm();
        if n == 0.0 || !n.is_finite() {
            return Err(Error::InvalidArgument(format!(
                "cannot normalize vector with norm {n}"
            )));
        }
        Ok(self.scale(1.0 / n))
    }

    /// Checks `| |v| - 1 | < UNIT_TOL`, returning the vector on success.
    pub fn require_unit(&self) -> Result<Vec3> {
        let n = self.norm();
        if (n - 1.0).abs() >= UNIT_TOL || !self.is_finite() {
            return Err(Error::NonUnitVector { norm: n });
        }
        Ok(*self)
    }

    /// Polar angle θ = acos(z) and azimuth φ = atan2(y, x) of a unit vector.
    pub fn polar_angles(&self) -> (f64, f64) {
        let theta = self.z.clamp(-1.0, 1.0).acos();
        let phi = if self.x == 0.0 && self.y == 0.0 {
            0.0
        } else {
            self.y.atan2(self.x)
        };
        (theta, phi)
    }

    /// Unit vector from polar angle θ and azimuth φ.
    pub fn from_polar(theta: f64, phi: f64) -> Vec3 {
        Vec3::new(
            phi.cos() * theta.sin(),
            phi.sin() * theta.sin(),
            theta.cos(),
        )
    }
}

impl Add for Vec3 {
    type Output = Vec3;
    fn add(self, rhs: Vec3) -> Vec3 {
        Vec3::new(self.x + rhs.x, self.y + rhs.y, self.z + rhs.z)
    }
}

impl Sub for Vec3 {
    type Output = Vec3;
    fn sub(self, rhs: Vec3) -> Vec3 {
        Vec3::new(self.x - rhs.x, self.y - rhs.y, self.z - rhs.z)
    }
}

impl Neg for Vec3 {
    type Output = Vec3;
    fn neg(self) -> Vec3 {
        Vec3::new(-self.x, -self.y, -self.z)
    }
}

impl Mul<f64> for Vec3 {
    type Output = Vec3;
    fn mul(self, rhs: f64) -> Vec3 {
        self.scale(rhs)
    }
}

impl Mul<Vec3> for f64 {
    type Output = Vec3;
    fn mul(self, rhs: Vec3) -> Vec3 {
        rhs.scale(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polar_roundtrip() {
        let v = Vec3::from_polar(1.1, 2.3);
        let (theta, phi) = v.polar_angles();
        assert!((theta - 1.1).abs() < 1e-12);
        assert!((phi - 2.3).abs() < 1e-12);
        assert!((v.norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn z_axis_angles() {
        let (theta, phi) = Vec3::Z.polar_angles();
        assert_eq!(theta, 0.0);
        assert_eq!(phi, 0.0);
    }

    #[test]
    fn require_unit_rejects() {
        assert!(Vec3::new(0.0, 0.0, 2.0).require_unit().is_err());
        assert!(Vec3::Z.require_unit().is_ok());
    }

    #[test]
    fn cross_is_orthogonal() {
        let a = Vec3::new(0.3, -1.2, 0.5);
        let b = Vec3::new(1.0, 0.4, -2.0);
        let c = a.cross(&b);
        assert!(c.dot(&a).abs() < 1e-12);
        assert!(c.dot(&b).abs() < 1e-12);
    }
}
