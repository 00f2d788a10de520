//! Rigorous complex disk arithmetic over dyadic numbers.
//!
//! A ball is a closed disk `{z : |z - center| <= radius}`. Every operation
//! returns a ball that contains the exact image of its inputs: centers are
//! rounded to the working precision and all rounding errors are folded into
//! the radius, which itself is only ever rounded upward.

use num_rational::BigRational;

use crate::dyadic::Dyadic;

/// Radius mantissas carry no information; keep them short.
const RADIUS_BITS: u32 = 32;

#[derive(Clone, PartialEq, Eq)]
pub struct ComplexBall {
    re: Dyadic,
    im: Dyadic,
    rad: Dyadic,
}

impl std::fmt::Debug for ComplexBall {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Ball({} + {}i ± {:e})",
            self.re.to_f64(),
            self.im.to_f64(),
            self.rad.to_f64()
        )
    }
}

impl ComplexBall {
    pub fn new(re: Dyadic, im: Dyadic, rad: Dyadic) -> ComplexBall {
        debug_assert!(!rad.is_negative());
        ComplexBall { re, im, rad }
    }

    pub fn exact_point(re: Dyadic, im: Dyadic) -> ComplexBall {
        ComplexBall {
            re,
            im,
            rad: Dyadic::zero(),
        }
    }

    pub fn zero() -> ComplexBall {
        ComplexBall::exact_point(Dyadic::zero(), Dyadic::zero())
    }

    pub fn one() -> ComplexBall {
        ComplexBall::exact_point(Dyadic::one(), Dyadic::zero())
    }

    pub fn from_f64(re: f64, im: f64, rad: f64) -> ComplexBall {
        ComplexBall::new(
            Dyadic::from_f64(re),
            Dyadic::from_f64(im),
            Dyadic::from_f64(rad),
        )
    }

    /// Encloses an exact rational point at the given precision.
    pub fn from_rational(q: &BigRational, prec: u32) -> ComplexBall {
        let (re, err) = Dyadic::from_rational(q, prec);
        ComplexBall {
            re,
            im: Dyadic::zero(),
            rad: err,
        }
    }

    pub fn re(&self) -> &Dyadic {
        &self.re
    }

    pub fn im(&self) -> &Dyadic {
        &self.im
    }

    pub fn rad(&self) -> &Dyadic {
        &self.rad
    }

    pub fn is_exact(&self) -> bool {
        self.rad.is_zero()
    }

    /// Center as an exact-point ball.
    pub fn center(&self) -> ComplexBall {
        ComplexBall::exact_point(self.re.clone(), self.im.clone())
    }

    pub fn conj(&self) -> ComplexBall {
        ComplexBall {
            re: self.re.clone(),
            im: self.im.neg(),
            rad: self.rad.clone(),
        }
    }

    pub fn neg(&self) -> ComplexBall {
        ComplexBall {
            re: self.re.neg(),
            im: self.im.neg(),
            rad: self.rad.clone(),
        }
    }

    fn round_center(re: Dyadic, im: Dyadic, rad: Dyadic, prec: u32) -> ComplexBall {
        let (re, e1) = re.round(prec);
        let (im, e2) = im.round(prec);
        let rad = rad.add(&e1).add(&e2).round_up_mag(RADIUS_BITS);
        ComplexBall { re, im, rad }
    }

    pub fn add(&self, other: &ComplexBall, prec: u32) -> ComplexBall {
        Self::round_center(
            self.re.add(&other.re),
            self.im.add(&other.im),
            self.rad.add(&other.rad),
            prec,
        )
    }

    pub fn sub(&self, other: &ComplexBall, prec: u32) -> ComplexBall {
        self.add(&other.neg(), prec)
    }

    /// Squared modulus of the center, exact.
    fn center_abs_sq(&self) -> Dyadic {
        self.re.mul(&self.re).add(&self.im.mul(&self.im))
    }

    /// Upper bound on |center|.
    pub fn center_abs_upper(&self) -> Dyadic {
        let (r, e) = self.center_abs_sq().sqrt(RADIUS_BITS);
        r.add(&e).round_up_mag(RADIUS_BITS)
    }

    /// Lower bound on |center| (zero when the bound would go negative).
    pub fn center_abs_lower(&self) -> Dyadic {
        let (r, _) = self.center_abs_sq().sqrt(64);
        // Truncated sqrt is already a lower bound.
        if r.is_negative() {
            Dyadic::zero()
        } else {
            r
        }
    }

    /// Upper bound on sup |z| over the ball.
    pub fn abs_upper(&self) -> Dyadic {
        self.center_abs_upper().add(&self.rad).round_up_mag(RADIUS_BITS)
    }

    /// Lower bound on inf |z| over the ball (zero if the ball may contain 0).
    pub fn abs_lower(&self) -> Dyadic {
        let lo = self.center_abs_lower().sub(&self.rad);
        if lo.is_negative() {
            Dyadic::zero()
        } else {
            lo
        }
    }

    pub fn mul(&self, other: &ComplexBall, prec: u32) -> ComplexBall {
        let re = self.re.mul(&other.re).sub(&self.im.mul(&other.im));
        let im = self.re.mul(&other.im).add(&self.im.mul(&other.re));
        let a = self.center_abs_upper();
        let b = other.center_abs_upper();
        let rad = a
            .mul(&other.rad)
            .add(&b.mul(&self.rad))
            .add(&self.rad.mul(&other.rad));
        Self::round_center(re, im, rad, prec)
    }

    pub fn mul_int(&self, k: i64, prec: u32) -> ComplexBall {
        Self::round_center(
            self.re.mul_int(k),
            self.im.mul_int(k),
            self.rad.mul_int(k.abs()),
            prec,
        )
    }

    /// Exact test for `0` in the closed disk.
    pub fn contains_zero(&self) -> bool {
        self.center_abs_sq().le(&self.rad.mul(&self.rad))
    }

    /// Exact disjointness of closed disks.
    pub fn is_disjoint(&self, other: &ComplexBall) -> bool {
        let dre = self.re.sub(&other.re);
        let dim = self.im.sub(&other.im);
        let dist_sq = dre.mul(&dre).add(&dim.mul(&dim));
        let r = self.rad.add(&other.rad);
        r.mul(&r).lt(&dist_sq)
    }

    /// Exact containment: `other` inside `self`.
    pub fn contains_ball(&self, other: &ComplexBall) -> bool {
        if self.rad.lt(&other.rad) {
            return false;
        }
        let dre = self.re.sub(&other.re);
        let dim = self.im.sub(&other.im);
        let dist_sq = dre.mul(&dre).add(&dim.mul(&dim));
        let slack = self.rad.sub(&other.rad);
        dist_sq.le(&slack.mul(&slack))
    }

    /// Disk inversion `1/z`. The image of a disk not containing zero is
    /// again a disk: center `conj(c) / (|c|^2 - r^2)`, radius `r / (|c|^2 - r^2)`.
    pub fn inv(&self, prec: u32) -> Option<ComplexBall> {
        let denom = self.center_abs_sq().sub(&self.rad.mul(&self.rad));
        if !denom.is_positive() {
            return None;
        }
        let (re, e1) = self.re.div(&denom, prec);
        let (im_neg, e2) = self.im.div(&denom, prec);
        let (rad, e3) = self.rad.div(&denom, RADIUS_BITS);
        let rad = rad.add(&e3).add(&e1).add(&e2).round_up_mag(RADIUS_BITS);
        Some(ComplexBall {
            re,
            im: im_neg.neg(),
            rad,
        })
    }

    pub fn div(&self, other: &ComplexBall, prec: u32) -> Option<ComplexBall> {
        Some(self.mul(&other.inv(prec)?, prec))
    }

    /// Upper bound on the distance between the two centers.
    pub fn center_distance_upper(&self, other: &ComplexBall) -> Dyadic {
        let dre = self.re.sub(&other.re);
        let dim = self.im.sub(&other.im);
        let (r, e) = dre.mul(&dre).add(&dim.mul(&dim)).sqrt(RADIUS_BITS);
        r.add(&e)
    }

    /// Upper bound on `sup |z - w|` over the two balls.
    pub fn distance_upper(&self, other: &ComplexBall) -> Dyadic {
        self.center_distance_upper(other)
            .add(&self.rad)
            .add(&other.rad)
            .round_up_mag(RADIUS_BITS)
    }

    /// The smallest ball (up to rounding) containing both.
    pub fn hull(&self, other: &ComplexBall, prec: u32) -> ComplexBall {
        // Midpoint center with radius covering both disks.
        let re = self.re.add(&other.re).shr(1);
        let im = self.im.add(&other.im).shr(1);
        let half_d = self.center_distance_upper(other).shr(1);
        let rad = half_d.add(&self.rad.max(&other.rad));
        Self::round_center(re, im, rad, prec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const P: u32 = 128;

    fn b(re: f64, im: f64, rad: f64) -> ComplexBall {
        ComplexBall::from_f64(re, im, rad)
    }

    #[test]
    fn mul_encloses_product() {
        // (1+2i)(3-i) = 5 + 5i.
        let z = b(1.0, 2.0, 0.0).mul(&b(3.0, -1.0, 0.0), P);
        assert_eq!(z.re().to_f64(), 5.0);
        assert_eq!(z.im().to_f64(), 5.0);
        assert!(z.rad().to_f64() <= 1e-30);
    }

    #[test]
    fn radius_grows_with_inputs() {
        let z = b(1.0, 0.0, 0.25).mul(&b(2.0, 0.0, 0.5), P);
        // Worst case |e| = 1*0.5 + 2*0.25 + 0.125 = 1.125.
        assert!(z.rad().to_f64() >= 1.125);
        assert!(z.rad().to_f64() <= 1.13);
    }

    #[test]
    fn inversion_is_rigorous() {
        let z = b(2.0, 0.0, 0.5);
        let inv = z.inv(P).unwrap();
        // 1/[1.5, 2.5] = [0.4, 2/3]; disk center 2/(4-0.25), radius 0.5/3.75.
        let lo = inv.re().sub(inv.rad()).to_f64();
        let hi = inv.re().add(inv.rad()).to_f64();
        assert!(lo <= 0.4 + 1e-9 && 2.0 / 3.0 <= hi + 1e-9);
        assert!(b(0.0, 0.0, 1.0).inv(P).is_none());
    }

    #[test]
    fn zero_membership_and_disjointness() {
        assert!(b(0.5, 0.0, 0.5).contains_zero());
        assert!(!b(0.51, 0.0, 0.5).contains_zero());
        assert!(b(0.0, 0.0, 1.0).is_disjoint(&b(3.0, 0.0, 1.0)));
        assert!(!b(0.0, 0.0, 1.5).is_disjoint(&b(3.0, 0.0, 1.6)));
        assert!(b(0.0, 0.0, 2.0).contains_ball(&b(1.0, 0.0, 0.5)));
        assert!(!b(0.0, 0.0, 2.0).contains_ball(&b(1.9, 0.0, 0.5)));
    }

    #[test]
    fn division_round_trip_contains_one() {
        let z = b(3.0, 4.0, 1e-6);
        let q = z.div(&z, P).unwrap();
        let one = ComplexBall::one();
        let d = q.sub(&one, P);
        assert!(d.contains_zero());
    }

    #[test]
    fn conj_mul_is_real_nonnegative() {
        let z = b(1.25, -2.5, 0.0);
        let m = z.mul(&z.conj(), P);
        assert_eq!(m.im().to_f64(), 0.0);
        assert_eq!(m.re().to_f64(), 1.25 * 1.25 + 2.5 * 2.5);
    }
}
