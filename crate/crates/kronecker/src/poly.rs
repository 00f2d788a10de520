//! Dense univariate polynomials with exact rational coefficients.
//!
//! Coefficients are stored in ascending order: index `i` holds the
//! coefficient of `X^i`. The zero polynomial is the empty vector; any
//! nonzero polynomial has a nonzero last entry. All arithmetic is exact.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::ArithError;

/// Arbitrary-precision integer (sign + magnitude, canonical zero).
pub type Integer = BigInt;
/// Arbitrary-precision rational, always reduced, denominator > 0.
pub type Rational = BigRational;

/// Convenience constructor for a rational from two machine integers.
pub fn rat(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Convenience constructor for a rational integer.
pub fn rat_int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// A dense univariate polynomial over the rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    /// Builds a polynomial from ascending coefficients, trimming leading zeros.
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::new(vec![c])
    }

    /// The monomial `c * X^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        if c.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Polynomial { coeffs }
    }

    /// The identity polynomial `X`.
    pub fn x() -> Self {
        Polynomial::monomial(Rational::one(), 1)
    }

    /// Builds a polynomial from ascending machine-integer coefficients.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Polynomial::new(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    /// Builds `X^q - a` for a rational `a`.
    pub fn binomial(q: usize, a: Rational) -> Self {
        let mut coeffs = vec![Rational::zero(); q + 1];
        coeffs[0] = -a;
        coeffs[q] = Rational::one();
        Polynomial::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree of a nonzero polynomial; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree, treating the zero polynomial as degree 0.
    pub fn degree_or_zero(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Coefficient of `X^i` (zero beyond the stored length).
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_coeff(&self) -> Rational {
        self.coeff(0)
    }

    /// Multiplies by a rational scalar.
    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Divides all coefficients by the leading one.
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let lc = self.leading_coeff();
        if lc.is_one() {
            return self.clone();
        }
        self.scale(&lc.recip())
    }

    /// Horner evaluation at a rational point.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Polynomial::zero();
        }
        Polynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rat_int(i as i64))
                .collect(),
        )
    }

    /// Substitutes `X -> X + shift`.
    pub fn shift_argument(&self, shift: &Rational) -> Self {
        // Synthetic division: repeatedly divide by (X - (-shift)).
        let mut work = self.coeffs.clone();
        let n = work.len();
        let mut out = vec![Rational::zero(); n];
        for slot in out.iter_mut().take(n) {
            for i in (0..work.len() - 1).rev() {
                let add = &work[i + 1] * shift;
                work[i] = &work[i] + add;
            }
            *slot = work.remove(0);
            if work.is_empty() {
                break;
            }
        }
        Polynomial::new(out)
    }

    /// Substitutes `X -> c * X`.
    pub fn scale_argument(&self, c: &Rational) -> Self {
        let mut pow = Rational::one();
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| {
                let r = a * &pow;
                pow = &pow * c;
                r
            })
            .collect();
        Polynomial::new(coeffs)
    }

    /// Euclidean division: `self = q*g + r` with `deg r < deg g`.
    pub fn div_rem(&self, g: &Polynomial) -> Result<(Polynomial, Polynomial), ArithError> {
        if g.is_zero() {
            return Err(ArithError::DivisionByZeroPolynomial);
        }
        let dg = g.degree().unwrap();
        if self.is_zero() || self.degree().unwrap() < dg {
            return Ok((Polynomial::zero(), self.clone()));
        }
        let df = self.degree().unwrap();
        let lc_inv = g.leading_coeff().recip();
        let mut rem = self.coeffs.clone();
        let mut quo = vec![Rational::zero(); df - dg + 1];
        for k in (dg..=df).rev() {
            let c = &rem[k] * &lc_inv;
            if !c.is_zero() {
                for i in 0..dg {
                    let sub = &c * &g.coeffs[i];
                    rem[k - dg + i] = &rem[k - dg + i] - sub;
                }
            }
            rem[k] = Rational::zero();
            quo[k - dg] = c;
        }
        Ok((Polynomial::new(quo), Polynomial::new(rem)))
    }

    /// Exact division; errors if the remainder is nonzero.
    pub fn exact_div(&self, g: &Polynomial) -> Result<Polynomial, ArithError> {
        let (q, r) = self.div_rem(g)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(ArithError::InexactDivision)
        }
    }

    /// Monic greatest common divisor. Errors on `gcd(0, 0)`.
    ///
    /// Internally clears denominators and runs a primitive-remainder
    /// sequence over the integers to keep coefficient growth in check.
    pub fn gcd(&self, other: &Polynomial) -> Result<Polynomial, ArithError> {
        if self.is_zero() && other.is_zero() {
            return Err(ArithError::GcdOfZeroPolynomials);
        }
        if self.is_zero() {
            return Ok(other.monic());
        }
        if other.is_zero() {
            return Ok(self.monic());
        }
        let (a, _, _) = crate::zpoly::clear_denominators(self);
        let (b, _, _) = crate::zpoly::clear_denominators(other);
        let g = crate::zpoly::gcd(&a, &b);
        Ok(crate::zpoly::to_rational(&g).monic())
    }

    /// Extended Euclid over the rationals: returns `(g, s, t)` with
    /// `s*self + t*other = g`, `g` monic (or zero when both inputs are zero).
    pub fn extended_gcd(&self, other: &Polynomial) -> (Polynomial, Polynomial, Polynomial) {
        let mut r0 = self.clone();
        let mut r1 = other.clone();
        let mut s0 = Polynomial::one();
        let mut s1 = Polynomial::zero();
        let mut t0 = Polynomial::zero();
        let mut t1 = Polynomial::one();
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1).expect("r1 nonzero");
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let lc_inv = r0.leading_coeff().recip();
        (
            r0.scale(&lc_inv),
            s0.scale(&lc_inv),
            t0.scale(&lc_inv),
        )
    }

    /// Squarefree part `f / gcd(f, f')`, monic-normalized.
    pub fn squarefree_part(&self) -> Result<Polynomial, ArithError> {
        if self.is_zero() {
            return Err(ArithError::ZeroPolynomial);
        }
        if self.is_constant() {
            return Ok(Polynomial::one());
        }
        let g = self.gcd(&self.derivative())?;
        Ok(self.exact_div(&g)?.monic())
    }

    /// True when `gcd(f, f')` is constant.
    pub fn is_squarefree(&self) -> bool {
        if self.is_constant() {
            return true;
        }
        self.gcd(&self.derivative())
            .map(|g| g.is_constant())
            .unwrap_or(false)
    }

    /// Resultant of two nonzero polynomials, computed by a fraction-free
    /// subresultant remainder sequence after clearing denominators.
    pub fn resultant(&self, other: &Polynomial) -> Result<Rational, ArithError> {
        crate::zpoly::resultant_rational(self, other)
    }

    /// Discriminant `(-1)^(n(n-1)/2) * Res(f, f') / lc(f)` for `deg f >= 1`.
    pub fn discriminant(&self) -> Result<Rational, ArithError> {
        let n = match self.degree() {
            None | Some(0) => return Err(ArithError::ConstantDiscriminant),
            Some(n) => n,
        };
        if n == 1 {
            return Ok(Rational::one());
        }
        let res = self.resultant(&self.derivative())?;
        let sign = if (n * (n - 1) / 2) % 2 == 0 {
            Rational::one()
        } else {
            -Rational::one()
        };
        Ok(sign * res / self.leading_coeff())
    }

    /// `self^k` by repeated squaring.
    pub fn pow(&self, mut k: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Composition `self(g)`.
    pub fn compose(&self, g: &Polynomial) -> Polynomial {
        let mut acc = Polynomial::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc * g + Polynomial::constant(c.clone());
        }
        acc
    }

    /// Least common multiple of coefficient denominators.
    pub fn denominator_lcm(&self) -> Integer {
        let mut l = BigInt::one();
        for c in &self.coeffs {
            l = l.lcm(c.denom());
        }
        l
    }

    /// True when every coefficient is an integer.
    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| c.denom().is_one())
    }

    /// Cauchy root bound `1 + max |a_i| / |a_n|`; every complex root has
    /// absolute value below it. Errors on constant polynomials.
    pub fn cauchy_bound(&self) -> Result<Rational, ArithError> {
        if self.degree().unwrap_or(0) == 0 {
            return Err(ArithError::ZeroPolynomial);
        }
        let lc = self.leading_coeff().abs();
        let mut m = Rational::zero();
        for c in &self.coeffs[..self.coeffs.len() - 1] {
            let a = c.abs();
            if a > m {
                m = a;
            }
        }
        Ok(Rational::one() + m / lc)
    }

    /// Deterministic ordering used for canonical factor lists: by degree,
    /// then coefficients from the constant term up.
    pub fn canonical_cmp(&self, other: &Polynomial) -> std::cmp::Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({})", crate::parse::format_polynomial(self))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::parse::format_polynomial(self))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + rhs.coeff(i));
        }
        Polynomial::new(out)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - rhs.coeff(i));
        }
        Polynomial::new(out)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = &out[i + j] + a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;

    fn p(s: &str) -> Polynomial {
        parse_polynomial(s).unwrap()
    }

    #[test]
    fn add_cancels() {
        assert_eq!(p("X+1") + p("X-1"), p("2X"));
    }

    #[test]
    fn mul_telescopes() {
        assert_eq!(p("X-1") * p("X^2+X+1"), p("X^3-1"));
    }

    #[test]
    fn add_zero_is_identity() {
        let f = p("3/2 X^4 - X + 7");
        assert_eq!(&f + &Polynomial::zero(), f);
    }

    #[test]
    fn div_rem_exact_cases() {
        let (q, r) = p("X^3-1").div_rem(&p("X-1")).unwrap();
        assert_eq!(q, p("X^2+X+1"));
        assert!(r.is_zero());

        let (q, r) = p("X^2+1").div_rem(&p("X")).unwrap();
        assert_eq!(q, p("X"));
        assert_eq!(r, p("1"));
    }

    #[test]
    fn div_by_zero_errors() {
        assert!(p("X^2+1").div_rem(&Polynomial::zero()).is_err());
    }

    #[test]
    fn gcd_basics() {
        assert_eq!(p("X^2-1").gcd(&p("X^3-1")).unwrap(), p("X-1"));
        assert_eq!(
            p("(X-1)*(X-1)").gcd(&p("(X-1)*(X+1)")).unwrap(),
            p("X-1")
        );
        assert!(Polynomial::zero().gcd(&Polynomial::zero()).is_err());
    }

    #[test]
    fn quintic_is_squarefree() {
        let f = p("X^5-4X-2");
        assert!(f.gcd(&f.derivative()).unwrap().is_constant());
        assert_eq!(f.squarefree_part().unwrap(), f);
    }

    #[test]
    fn derivative_cases() {
        assert_eq!(p("X^5-4X-2").derivative(), p("5X^4-4"));
        assert_eq!(p("7").derivative(), Polynomial::zero());
        assert_eq!(p("X^3+X^2-2X-1").derivative(), p("3X^2+2X-2"));
    }

    #[test]
    fn eval_cases() {
        assert_eq!(p("X^5-4X-2").eval(&rat_int(0)), rat_int(-2));
        assert_eq!(p("X^3+X^2-2X-1").eval(&rat_int(1)), rat_int(-1));
    }

    #[test]
    fn squarefree_part_drops_multiplicity() {
        let f = p("(X-1)*(X-1)*(X+2)");
        assert_eq!(f.squarefree_part().unwrap(), p("(X-1)*(X+2)"));
    }

    #[test]
    fn shift_argument_matches_composition() {
        let f = p("X^3 - 2X + 5");
        let shifted = f.shift_argument(&rat_int(3));
        assert_eq!(shifted, f.compose(&p("X+3")));
        assert_eq!(f.shift_argument(&rat_int(0)), f);
    }

    #[test]
    fn extended_gcd_bezout() {
        let f = p("X^2-1");
        let g = p("X^3-1");
        let (d, s, t) = f.extended_gcd(&g);
        assert_eq!(d, p("X-1"));
        assert_eq!(&(&s * &f) + &(&t * &g), d);
    }

    #[test]
    fn cauchy_bound_exceeds_roots() {
        // X^2 - 4 has roots +-2; bound is 1 + 4 = 5.
        assert_eq!(p("X^2-4").cauchy_bound().unwrap(), rat_int(5));
    }
}
