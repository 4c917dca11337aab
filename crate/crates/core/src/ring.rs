//! Exact arithmetic in `Z`, `Z[√2]` and `Z[φ]`.
//!
//! Every bond of a supported Coxeter system gives a matrix entry
//! `2cos(π/m)` in one of these rings, so reflection matrices never need
//! floating point.

use std::cmp::Ordering;
use std::ops::{Add, Neg, Sub};

/// Which quadratic ring a system computes in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Ring {
    /// Plain integers (simply-laced systems and infinite bonds).
    Int,
    /// `a + b√2`.
    Sqrt2,
    /// `a + bφ` with `φ = (1 + √5) / 2`.
    Phi,
}

/// The number `a + b·θ` where `θ` is `0`, `√2` or `φ` depending on the ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct RingScalar {
    pub a: i64,
    pub b: i64,
}

impl RingScalar {
    pub const ZERO: Self = Self { a: 0, b: 0 };
    pub const ONE: Self = Self { a: 1, b: 0 };

    pub const fn new(a: i64, b: i64) -> Self {
        Self { a, b }
    }

    pub fn is_zero(self) -> bool {
        self.a == 0 && self.b == 0
    }
}

impl Add for RingScalar {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.a + o.a, self.b + o.b)
    }
}

impl Sub for RingScalar {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.a - o.a, self.b - o.b)
    }
}

impl Neg for RingScalar {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.a, -self.b)
    }
}

impl Ring {
    pub fn mul(self, x: RingScalar, y: RingScalar) -> RingScalar {
        match self {
            Ring::Int => RingScalar::new(x.a * y.a, 0),
            Ring::Sqrt2 => RingScalar::new(x.a * y.a + 2 * x.b * y.b, x.a * y.b + x.b * y.a),
            // φ² = φ + 1
            Ring::Phi => RingScalar::new(x.a * y.a + x.b * y.b, x.a * y.b + x.b * y.a + x.b * y.b),
        }
    }

    /// Exact sign of the real number `x`.
    pub fn sign(self, x: RingScalar) -> i8 {
        let (a, b) = (x.a as i128, x.b as i128);
        match self {
            Ring::Int => sign_of(a),
            // a + b√2
            Ring::Sqrt2 => sign_of_sum_with_root(a, b, 2),
            // a + bφ = ((2a + b) + b√5) / 2
            Ring::Phi => sign_of_sum_with_root(2 * a + b, b, 5),
        }
    }

    /// `2cos(π/m)` for the bond `m`, where `None` means `m = ∞`.
    ///
    /// Returns `None` when the value is not in this ring.
    pub fn bond_scalar(self, bond: Option<u32>) -> Option<RingScalar> {
        match (bond, self) {
            (None, _) => Some(RingScalar::new(2, 0)),
            (Some(2), _) => Some(RingScalar::ZERO),
            (Some(3), _) => Some(RingScalar::ONE),
            (Some(4), Ring::Sqrt2) => Some(RingScalar::new(0, 1)),
            (Some(5), Ring::Phi) => Some(RingScalar::new(0, 1)),
            _ => None,
        }
    }

    /// Real approximation, for display and sanity checks only.
    pub fn to_f64(self, x: RingScalar) -> f64 {
        let theta = match self {
            Ring::Int => 0.0,
            Ring::Sqrt2 => 2f64.sqrt(),
            Ring::Phi => (1.0 + 5f64.sqrt()) / 2.0,
        };
        x.a as f64 + x.b as f64 * theta
    }
}

fn sign_of(v: i128) -> i8 {
    match v.cmp(&0) {
        Ordering::Less => -1,
        Ordering::Equal => 0,
        Ordering::Greater => 1,
    }
}

/// Sign of `p + q√d` for a non-square `d > 0`.
fn sign_of_sum_with_root(p: i128, q: i128, d: i128) -> i8 {
    let (sp, sq) = (sign_of(p), sign_of(q));
    if sp == 0 {
        return sq;
    }
    if sq == 0 || sp == sq {
        return sp;
    }
    // Opposite signs: the larger magnitude wins, and p² ≠ d q² since d is not a square.
    if p * p > d * q * q {
        sp
    } else {
        sq
    }
}

/// Sign of the real number `x` read in `ring`.
pub fn ring_sign(ring: Ring, x: RingScalar) -> i8 {
    ring.sign(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn sqrt2_signs() {
        assert_eq!(ring_sign(Ring::Sqrt2, RingScalar::new(1, -1)), -1);
        assert_eq!(ring_sign(Ring::Sqrt2, RingScalar::new(3, -2)), 1);
        assert_eq!(ring_sign(Ring::Sqrt2, RingScalar::ZERO), 0);
        assert_eq!(ring_sign(Ring::Phi, RingScalar::ZERO), 0);
    }

    #[test]
    fn phi_squares_to_phi_plus_one() {
        let phi = RingScalar::new(0, 1);
        assert_eq!(Ring::Phi.mul(phi, phi), RingScalar::new(1, 1));
        let r2 = RingScalar::new(0, 1);
        assert_eq!(Ring::Sqrt2.mul(r2, r2), RingScalar::new(2, 0));
    }

    #[test]
    fn phi_sign_near_zero() {
        // φ - 2 < 0, 2φ - 3 > 0, 5φ - 8 > 0, 8φ - 13 < 0
        assert_eq!(ring_sign(Ring::Phi, RingScalar::new(-2, 1)), -1);
        assert_eq!(ring_sign(Ring::Phi, RingScalar::new(-3, 2)), 1);
        assert_eq!(ring_sign(Ring::Phi, RingScalar::new(-8, 5)), 1);
        assert_eq!(ring_sign(Ring::Phi, RingScalar::new(13, -8)), 1);
        assert_eq!(ring_sign(Ring::Phi, RingScalar::new(-13, 8)), -1);
    }

    proptest! {
        #[test]
        fn sign_agrees_with_floating_point(a in -1000i64..1000, b in -1000i64..1000, phi in any::<bool>()) {
            let ring = if phi { Ring::Phi } else { Ring::Sqrt2 };
            let x = RingScalar::new(a, b);
            let approx = ring.to_f64(x);
            // far from zero the float answer is trustworthy
            prop_assume!(approx.abs() > 1e-6);
            prop_assert_eq!(ring.sign(x), if approx > 0.0 { 1 } else { -1 });
        }

        #[test]
        fn multiplication_is_commutative_and_matches_floats(
            a in -50i64..50, b in -50i64..50, c in -50i64..50, d in -50i64..50, phi in any::<bool>()
        ) {
            let ring = if phi { Ring::Phi } else { Ring::Sqrt2 };
            let (x, y) = (RingScalar::new(a, b), RingScalar::new(c, d));
            prop_assert_eq!(ring.mul(x, y), ring.mul(y, x));
            let lhs = ring.to_f64(ring.mul(x, y));
            let rhs = ring.to_f64(x) * ring.to_f64(y);
            prop_assert!((lhs - rhs).abs() < 1e-6 * (1.0 + rhs.abs()));
        }
    }
}
