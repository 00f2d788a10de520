//! Arbitrary-precision dyadic numbers `mantissa * 2^exp`.
//!
//! Addition, subtraction, and multiplication are exact; division and square
//! root truncate toward zero and report a one-ulp error bound. The complex
//! ball layer keeps its centers rounded and folds every reported error into
//! the ball radius, so nothing here needs a global rounding mode.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct Dyadic {
    man: BigInt,
    exp: i64,
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Dyadic({} * 2^{} ~ {})", self.man, self.exp, self.to_f64())
    }
}

impl Dyadic {
    pub fn new(man: BigInt, exp: i64) -> Dyadic {
        Dyadic { man, exp }.normalized()
    }

    fn normalized(mut self) -> Dyadic {
        if self.man.is_zero() {
            self.exp = 0;
            return self;
        }
        let tz = self.man.trailing_zeros().unwrap_or(0);
        if tz > 0 {
            self.man >>= tz;
            self.exp += tz as i64;
        }
        self
    }

    pub fn zero() -> Dyadic {
        Dyadic {
            man: BigInt::zero(),
            exp: 0,
        }
    }

    pub fn one() -> Dyadic {
        Dyadic {
            man: BigInt::one(),
            exp: 0,
        }
    }

    pub fn from_int(n: i64) -> Dyadic {
        Dyadic::new(BigInt::from(n), 0)
    }

    pub fn from_bigint(n: BigInt) -> Dyadic {
        Dyadic::new(n, 0)
    }

    /// Exact: every finite f64 is dyadic.
    pub fn from_f64(x: f64) -> Dyadic {
        assert!(x.is_finite(), "non-finite seed");
        if x == 0.0 {
            return Dyadic::zero();
        }
        let bits = x.to_bits();
        let sign = if bits >> 63 == 1 { -1 } else { 1 };
        let exponent = ((bits >> 52) & 0x7ff) as i64;
        let fraction = bits & 0xf_ffff_ffff_ffff;
        let (man, exp) = if exponent == 0 {
            (fraction, -1074)
        } else {
            (fraction | (1 << 52), exponent - 1075)
        };
        Dyadic::new(BigInt::from(sign * man as i64), exp)
    }

    pub fn to_f64(&self) -> f64 {
        if self.man.is_zero() {
            return 0.0;
        }
        let bits = self.man.bits() as i64;
        if bits <= 62 {
            return self.man.to_i64().unwrap() as f64 * (self.exp as f64).exp2();
        }
        let cut = bits - 62;
        let top: BigInt = &self.man >> cut;
        top.to_i64().unwrap() as f64 * ((self.exp + cut) as f64).exp2()
    }

    /// 2^e.
    pub fn pow2(e: i64) -> Dyadic {
        Dyadic {
            man: BigInt::one(),
            exp: e,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.man.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.man.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.man.is_positive()
    }

    pub fn abs(&self) -> Dyadic {
        Dyadic {
            man: self.man.abs(),
            exp: self.exp,
        }
    }

    pub fn neg(&self) -> Dyadic {
        Dyadic {
            man: -&self.man,
            exp: self.exp,
        }
    }

    /// Exponent of the most significant bit: `2^(magnitude_exp-1) <= |x| < 2^magnitude_exp`.
    pub fn magnitude_exp(&self) -> i64 {
        debug_assert!(!self.man.is_zero());
        self.exp + self.man.bits() as i64
    }

    pub fn add(&self, other: &Dyadic) -> Dyadic {
        if self.man.is_zero() {
            return other.clone();
        }
        if other.man.is_zero() {
            return self.clone();
        }
        let (lo, hi) = if self.exp <= other.exp {
            (self, other)
        } else {
            (other, self)
        };
        let shift = (hi.exp - lo.exp) as u64;
        Dyadic::new((&hi.man << shift) + &lo.man, lo.exp)
    }

    pub fn sub(&self, other: &Dyadic) -> Dyadic {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Dyadic) -> Dyadic {
        if self.man.is_zero() || other.man.is_zero() {
            return Dyadic::zero();
        }
        Dyadic::new(&self.man * &other.man, self.exp + other.exp)
    }

    pub fn mul_int(&self, k: i64) -> Dyadic {
        Dyadic::new(&self.man * BigInt::from(k), self.exp)
    }

    pub fn shr(&self, k: i64) -> Dyadic {
        Dyadic {
            man: self.man.clone(),
            exp: self.exp - k,
        }
    }

    /// Truncates the mantissa to `prec` bits (toward zero) and returns the
    /// result together with a one-ulp error bound (zero when exact).
    pub fn round(&self, prec: u32) -> (Dyadic, Dyadic) {
        let bits = self.man.bits();
        if bits <= prec as u64 {
            return (self.clone(), Dyadic::zero());
        }
        let cut = (bits - prec as u64) as i64;
        let man = &self.man >> cut;
        let err = Dyadic::pow2(self.exp + cut);
        (Dyadic::new(man, self.exp + cut), err)
    }

    /// Rounds |x| upward to `prec` bits; used for radii.
    pub fn round_up_mag(&self, prec: u32) -> Dyadic {
        let bits = self.man.bits();
        if bits <= prec as u64 {
            return self.clone();
        }
        let cut = (bits - prec as u64) as i64;
        let mut man: BigInt = self.man.abs() >> cut;
        man += 1;
        let man = if self.man.is_negative() { -man } else { man };
        Dyadic::new(man, self.exp + cut)
    }

    /// Truncated quotient with `prec` significant bits plus a one-ulp bound.
    pub fn div(&self, other: &Dyadic, prec: u32) -> (Dyadic, Dyadic) {
        assert!(!other.man.is_zero(), "dyadic division by zero");
        if self.man.is_zero() {
            return (Dyadic::zero(), Dyadic::zero());
        }
        let sa = self.man.bits() as i64;
        let sb = other.man.bits() as i64;
        let shift = (prec as i64 + sb - sa + 2).max(0);
        let t: BigInt = &self.man << shift;
        let q = t / &other.man;
        let exp = self.exp - other.exp - shift;
        let err = Dyadic::pow2(exp);
        (Dyadic::new(q, exp), err)
    }

    /// Truncated square root (`self >= 0`) with a one-ulp bound.
    pub fn sqrt(&self, prec: u32) -> (Dyadic, Dyadic) {
        assert!(!self.man.is_negative(), "sqrt of negative dyadic");
        if self.man.is_zero() {
            return (Dyadic::zero(), Dyadic::zero());
        }
        let mut man = self.man.clone();
        let mut exp = self.exp;
        if exp % 2 != 0 {
            man <<= 1;
            exp -= 1;
        }
        let bits = man.bits() as i64;
        let want = 2 * (prec as i64 + 2);
        let mut t = (want - bits).max(0);
        if t % 2 != 0 {
            t += 1;
        }
        let scaled: BigInt = man << t;
        let r = scaled.sqrt();
        let rexp = exp / 2 - t / 2;
        (Dyadic::new(r, rexp), Dyadic::pow2(rexp))
    }

    pub fn cmp(&self, other: &Dyadic) -> Ordering {
        let diff = self.sub(other);
        if diff.man.is_zero() {
            Ordering::Equal
        } else if diff.man.is_negative() {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }

    pub fn lt(&self, other: &Dyadic) -> bool {
        self.cmp(other) == Ordering::Less
    }

    pub fn le(&self, other: &Dyadic) -> bool {
        self.cmp(other) != Ordering::Greater
    }

    pub fn max(&self, other: &Dyadic) -> Dyadic {
        if self.lt(other) {
            other.clone()
        } else {
            self.clone()
        }
    }

    /// Rounds a rational to `prec` bits with a one-ulp bound.
    pub fn from_rational(q: &BigRational, prec: u32) -> (Dyadic, Dyadic) {
        if q.is_zero() {
            return (Dyadic::zero(), Dyadic::zero());
        }
        if q.denom().is_one() {
            let (v, e) = Dyadic::from_bigint(q.numer().clone()).round(prec);
            return (v, e);
        }
        let a = Dyadic::from_bigint(q.numer().clone());
        let b = Dyadic::from_bigint(q.denom().clone());
        a.div(&b, prec)
    }

    /// Exact rational value.
    pub fn to_rational(&self) -> BigRational {
        if self.exp >= 0 {
            BigRational::from_integer(&self.man << self.exp as u64)
        } else {
            BigRational::new(self.man.clone(), BigInt::one() << (-self.exp) as u64)
        }
    }

    /// Exact decimal rendering (every dyadic has a finite decimal form).
    pub fn to_decimal_string(&self) -> String {
        if self.man.is_zero() {
            return "0".to_string();
        }
        if self.exp >= 0 {
            let v: BigInt = &self.man << self.exp as u64;
            return v.to_string();
        }
        let k = (-self.exp) as u32;
        let five = BigInt::from(5).pow(k);
        let scaled = self.man.abs() * five;
        let digits = scaled.to_string();
        let k = k as usize;
        let (int_part, frac_part) = if digits.len() > k {
            (digits[..digits.len() - k].to_string(), digits[digits.len() - k..].to_string())
        } else {
            ("0".to_string(), format!("{digits:0>k$}"))
        };
        let frac_part = frac_part.trim_end_matches('0');
        let sign = if self.man.is_negative() { "-" } else { "" };
        if frac_part.is_empty() {
            format!("{sign}{int_part}")
        } else {
            format!("{sign}{int_part}.{frac_part}")
        }
    }
}

/// Parses a plain decimal string ("-12.5", "0.0312") into an exact rational.
pub fn decimal_to_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    let (sign, body) = match s.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, s.strip_prefix('+').unwrap_or(s)),
    };
    if body.is_empty() {
        return None;
    }
    let (int_part, frac_part) = match body.split_once('.') {
        Some((i, f)) => (i, f),
        None => (body, ""),
    };
    if !int_part.chars().all(|c| c.is_ascii_digit()) || !frac_part.chars().all(|c| c.is_ascii_digit())
    {
        return None;
    }
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    let digits = format!("{int_part}{frac_part}");
    let numer: BigInt = if digits.is_empty() {
        BigInt::zero()
    } else {
        digits.parse().ok()?
    };
    let denom = BigInt::from(10).pow(frac_part.len() as u32);
    Some(BigRational::new(BigInt::from(sign) * numer, denom))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(x: f64) -> Dyadic {
        Dyadic::from_f64(x)
    }

    #[test]
    fn exact_ring_ops() {
        let a = d(1.5);
        let b = d(0.25);
        assert_eq!(a.add(&b), d(1.75));
        assert_eq!(a.sub(&b), d(1.25));
        assert_eq!(a.mul(&b), d(0.375));
    }

    #[test]
    fn rounding_reports_error() {
        let big = Dyadic::new(BigInt::from((1u64 << 40) + 1), 0);
        let (r, e) = big.round(20);
        assert!(!e.is_zero());
        // r <= big <= r + ulp in magnitude.
        assert!(r.le(&big) && big.le(&r.add(&e)));
    }

    #[test]
    fn division_brackets_quotient() {
        let a = d(1.0);
        let b = d(3.0);
        let (q, e) = a.div(&b, 64);
        let third = BigRational::new(BigInt::one(), BigInt::from(3));
        let qr = q.to_rational();
        let er = e.to_rational();
        assert!(qr <= third && third <= qr + er);
    }

    #[test]
    fn sqrt_brackets_root() {
        let (r, e) = d(2.0).sqrt(100);
        let v = r.to_rational();
        let hi = &v + e.to_rational();
        assert!(&v * &v <= BigRational::from_integer(BigInt::from(2)));
        assert!(&hi * &hi >= BigRational::from_integer(BigInt::from(2)));
    }

    #[test]
    fn decimal_round_trip() {
        let x = Dyadic::new(BigInt::from(-355), -7); // -355/128
        let s = x.to_decimal_string();
        assert_eq!(s, "-2.7734375");
        let back = decimal_to_rational(&s).unwrap();
        assert_eq!(back, x.to_rational());
        assert_eq!(decimal_to_rational("7"), Some(BigRational::from_integer(BigInt::from(7))));
        assert!(decimal_to_rational("1e5").is_none());
    }

    #[test]
    fn f64_round_trip() {
        for x in [0.0, 1.0, -3.5, 0.1, 1e-12, -123456.789] {
            let dy = Dyadic::from_f64(x);
            assert_eq!(dy.to_f64(), x);
        }
    }

    #[test]
    fn round_up_mag_grows_magnitude() {
        let x = Dyadic::new(BigInt::from(0b1010_1011), 0);
        let up = x.round_up_mag(4);
        assert!(x.le(&up));
        let neg = x.neg().round_up_mag(4);
        assert!(neg.le(&x.neg()));
    }
}
