//! Integer-coefficient polynomial kernel.
//!
//! The rational-facing operations in [`crate::poly`] clear denominators and
//! come through here for the heavy lifting: primitive-remainder-sequence
//! gcd and the fraction-free subresultant resultant, which keep coefficient
//! growth polynomial instead of exponential.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::ArithError;
use crate::poly::{Polynomial, Rational};

/// Dense integer polynomial, ascending coefficients, trimmed.
pub type ZPoly = Vec<BigInt>;

pub fn trim(mut p: ZPoly) -> ZPoly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

pub fn degree(p: &[BigInt]) -> Option<usize> {
    p.len().checked_sub(1)
}

pub fn lc(p: &[BigInt]) -> BigInt {
    p.last().cloned().unwrap_or_else(BigInt::zero)
}

pub fn neg(p: &[BigInt]) -> ZPoly {
    p.iter().map(|c| -c).collect()
}

pub fn add(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_else(BigInt::zero)
            + b.get(i).cloned().unwrap_or_else(BigInt::zero);
        out.push(x);
    }
    trim(out)
}

pub fn sub(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    add(a, &neg(b))
}

pub fn mul(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

pub fn scale(p: &[BigInt], c: &BigInt) -> ZPoly {
    if c.is_zero() {
        return Vec::new();
    }
    p.iter().map(|x| x * c).collect()
}

/// Divides every coefficient exactly; panics if any division is inexact,
/// which would indicate a broken remainder-sequence invariant.
fn exact_scalar_div(p: &[BigInt], c: &BigInt) -> ZPoly {
    p.iter()
        .map(|x| {
            let (q, r) = x.div_rem(c);
            debug_assert!(r.is_zero(), "inexact scalar division in PRS");
            q
        })
        .collect()
}

/// Content: gcd of coefficients, with the sign of the leading coefficient.
pub fn content(p: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in p {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    if lc(p).is_negative() {
        -g
    } else {
        g
    }
}

/// Primitive part `p / content(p)`; leading coefficient becomes positive.
pub fn primitive_part(p: &[BigInt]) -> ZPoly {
    if p.is_empty() {
        return Vec::new();
    }
    exact_scalar_div(p, &content(p))
}

/// Pseudo-remainder: the unique `R` with
/// `lc(B)^(deg A - deg B + 1) * A = Q*B + R`, `deg R < deg B`.
pub fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let db = degree(b).expect("pseudo_rem by zero");
    let da = match degree(a) {
        Some(d) if d >= db => d,
        _ => {
            // deg A < deg B: R = lc(B)^(delta+1) * A with delta+1 clamped to 0 steps.
            return a.to_vec();
        }
    };
    let lb = lc(b);
    let mut rem: ZPoly = a.to_vec();
    let mut steps = 0usize;
    while let Some(dr) = degree(&rem) {
        if dr < db {
            break;
        }
        let lead = lc(&rem);
        rem = scale(&rem, &lb);
        let shift = dr - db;
        for (i, c) in b.iter().enumerate() {
            rem[i + shift] -= &lead * c;
        }
        rem = trim(rem);
        steps += 1;
    }
    // The loop may finish early when degrees drop by more than one; pad the
    // missing lc(B) powers so the defining identity holds exactly.
    let needed = da - db + 1;
    for _ in steps..needed {
        rem = scale(&rem, &lb);
    }
    trim(rem)
}

/// Polynomial gcd over the integers via a primitive remainder sequence.
/// Returns a primitive polynomial with positive leading coefficient
/// (times the integer content gcd of the inputs).
pub fn gcd(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() {
        return b.to_vec();
    }
    if b.is_empty() {
        return a.to_vec();
    }
    let ca = content(a).abs();
    let cb = content(b).abs();
    let cg = ca.gcd(&cb);
    let mut f = primitive_part(a);
    let mut g = primitive_part(b);
    if degree(&f) < degree(&g) {
        std::mem::swap(&mut f, &mut g);
    }
    while !g.is_empty() {
        let r = pseudo_rem(&f, &g);
        f = g;
        g = if r.is_empty() {
            Vec::new()
        } else {
            primitive_part(&r)
        };
    }
    if degree(&f) == Some(0) {
        return vec![cg];
    }
    scale(&f, &cg)
}

/// Resultant of two nonzero integer polynomials by the subresultant
/// (fraction-free) remainder sequence.
pub fn resultant(a_in: &[BigInt], b_in: &[BigInt]) -> BigInt {
    assert!(!a_in.is_empty() && !b_in.is_empty(), "resultant of zero");
    let mut a = a_in.to_vec();
    let mut b = b_in.to_vec();
    let mut sign = 1i32;
    if degree(&a) < degree(&b) {
        let da = degree(&a).unwrap();
        let db = degree(&b).unwrap();
        if da % 2 == 1 && db % 2 == 1 {
            sign = -sign;
        }
        std::mem::swap(&mut a, &mut b);
    }
    let ca = content(&a);
    let cb = content(&b);
    a = exact_scalar_div(&a, &ca);
    b = exact_scalar_div(&b, &cb);
    let da0 = degree(&a).unwrap();
    let db0 = degree(&b).unwrap();
    let mut t = ca.pow(db0 as u32) * cb.pow(da0 as u32);
    if sign < 0 {
        t = -t;
    }
    if db0 == 0 {
        // b normalized to the constant 1.
        return t;
    }
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let da = degree(&a).unwrap();
        let db = degree(&b).unwrap();
        let delta = (da - db) as u32;
        if da % 2 == 1 && db % 2 == 1 {
            t = -t;
        }
        let r = pseudo_rem(&a, &b);
        a = b;
        let divisor = &g * h.pow(delta);
        b = if r.is_empty() {
            Vec::new()
        } else {
            exact_scalar_div(&r, &divisor)
        };
        if b.is_empty() {
            // Nontrivial common factor.
            return BigInt::zero();
        }
        g = lc(&a);
        h = match delta {
            0 => h,
            1 => g.clone(),
            _ => {
                let (q, rem) = g.pow(delta).div_rem(&h.pow(delta - 1));
                debug_assert!(rem.is_zero());
                q
            }
        };
        if degree(&b) == Some(0) {
            let da = degree(&a).unwrap() as u32;
            let num = lc(&b).pow(da);
            if da <= 1 {
                return t * num;
            }
            let (q, rem) = num.div_rem(&h.pow(da - 1));
            debug_assert!(rem.is_zero());
            return t * q;
        }
    }
}

/// Splits a rational polynomial as `content * primitive_integer_part`.
/// Returns `(primitive, numerator, denominator)` with
/// `f = (numerator/denominator) * primitive` and `lc(primitive) > 0`.
pub fn clear_denominators(f: &Polynomial) -> (ZPoly, BigInt, BigInt) {
    if f.is_zero() {
        return (Vec::new(), BigInt::zero(), BigInt::one());
    }
    let den = f.denominator_lcm();
    let ints: ZPoly = f
        .coeffs()
        .iter()
        .map(|c| {
            let scaled = c * BigRational::from_integer(den.clone());
            debug_assert!(scaled.denom().is_one());
            scaled.numer().clone()
        })
        .collect();
    let cont = content(&ints);
    let prim = exact_scalar_div(&ints, &cont);
    (prim, cont, den)
}

/// Lifts an integer polynomial back into the rational type.
pub fn to_rational(p: &[BigInt]) -> Polynomial {
    Polynomial::new(
        p.iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect(),
    )
}

/// Resultant over the rationals, delegating to the integer subresultant.
pub fn resultant_rational(f: &Polynomial, g: &Polynomial) -> Result<Rational, ArithError> {
    if f.is_zero() || g.is_zero() {
        return Err(ArithError::ZeroPolynomial);
    }
    if f.is_constant() && g.is_constant() {
        return Ok(Rational::one());
    }
    if f.is_constant() {
        let e = g.degree().unwrap() as i32;
        return Ok(pow_rational(&f.coeff(0), e));
    }
    if g.is_constant() {
        let e = f.degree().unwrap() as i32;
        return Ok(pow_rational(&g.coeff(0), e));
    }
    let (fp, fn_, fd) = clear_denominators(f);
    let (gp, gn, gd) = clear_denominators(g);
    let res = resultant(&fp, &gp);
    let cf = BigRational::new(fn_, fd);
    let cg = BigRational::new(gn, gd);
    let df = f.degree().unwrap() as i32;
    let dg = g.degree().unwrap() as i32;
    Ok(pow_rational(&cf, dg) * pow_rational(&cg, df) * BigRational::from_integer(res))
}

fn pow_rational(c: &Rational, e: i32) -> Rational {
    if e == 0 {
        return Rational::one();
    }
    let mut acc = Rational::one();
    for _ in 0..e.unsigned_abs() {
        acc *= c;
    }
    if e < 0 {
        acc.recip()
    } else {
        acc
    }
}

/// Max-norm of the coefficient vector.
pub fn max_norm(p: &[BigInt]) -> BigInt {
    p.iter().map(|c| c.abs()).max().unwrap_or_else(BigInt::zero)
}

/// Ceiling of the Euclidean norm of the coefficient vector.
pub fn l2_norm_ceil(p: &[BigInt]) -> BigInt {
    let sum: BigInt = p.iter().map(|c| c * c).sum();
    let r = sum.sqrt();
    if &r * &r == sum {
        r
    } else {
        r + 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;

    fn zp(coeffs: &[i64]) -> ZPoly {
        trim(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn pseudo_rem_identity() {
        // lc(b)^(da-db+1) * a = q*b + r, spot-checked by degree and eval.
        let a = zp(&[1, 0, 0, 2, 3]); // 3x^4 + 2x^3 + 1
        let b = zp(&[2, 5]); // 5x + 2
        let r = pseudo_rem(&a, &b);
        assert!(degree(&r) < degree(&b) || r.is_empty());
        // At x = -2/5 the remainder equals lc^4 * a(-2/5).
        // 5^4 * a(-2/5) = 625 * (3*16/625 - 2*8/125 + 1) = 48 - 80 + 625 = 593.
        assert_eq!(r, zp(&[593]));
    }

    #[test]
    fn resultant_linear_pair() {
        // Res(X-2, X-3) = (2) - (3) evaluated: g(2) = -1.
        assert_eq!(resultant(&zp(&[-2, 1]), &zp(&[-3, 1])), BigInt::from(-1));
    }

    #[test]
    fn resultant_circle_and_axis() {
        // Res(X^2+1, X) = 1.
        assert_eq!(resultant(&zp(&[1, 0, 1]), &zp(&[0, 1])), BigInt::from(1));
    }

    #[test]
    fn resultant_swap_symmetry() {
        let a = zp(&[3, -1, 0, 2, 7]);
        let b = zp(&[1, 4, -5, 1]);
        let lhs = resultant(&a, &b);
        let rhs = resultant(&b, &a);
        // deg a * deg b = 12 even: resultants agree.
        assert_eq!(lhs, rhs);
        let c = zp(&[2, 1, 1, 1]); // degree 3
        let d = zp(&[5, 0, -2, 0, 0, 1]); // degree 5
        assert_eq!(resultant(&c, &d), -resultant(&d, &c));
    }

    #[test]
    fn resultant_with_common_factor_is_zero() {
        let a = mul(&zp(&[-1, 1]), &zp(&[1, 1, 1]));
        let b = mul(&zp(&[-1, 1]), &zp(&[7, 1]));
        assert_eq!(resultant(&a, &b), BigInt::zero());
    }

    #[test]
    fn discriminants_match_known_formulas() {
        let p = |s: &str| parse_polynomial(s).unwrap();
        // b^2 - 4c for X^2 + bX + c.
        assert_eq!(p("X^2+1").discriminant().unwrap(), crate::poly::rat_int(-4));
        assert_eq!(
            p("X^3+X^2-2X-1").discriminant().unwrap(),
            crate::poly::rat_int(49)
        );
        assert_eq!(
            p("X^5-4X-2").discriminant().unwrap(),
            crate::poly::rat_int(-212144)
        );
    }

    #[test]
    fn gcd_primitive_prs() {
        let a = mul(&zp(&[-1, 1]), &zp(&[1, 1])); // x^2 - 1
        let b = mul(&zp(&[-1, 1]), &zp(&[1, 1, 1])); // x^3 - 1
        assert_eq!(gcd(&a, &b), zp(&[-1, 1]));
    }

    #[test]
    fn content_sign_follows_leading() {
        assert_eq!(content(&zp(&[4, -6])), BigInt::from(-2));
        assert_eq!(primitive_part(&zp(&[4, -6])), zp(&[-2, 3]));
    }
}
