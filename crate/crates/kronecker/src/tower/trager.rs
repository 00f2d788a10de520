//! Factorization over a tower by the norm method.
//!
//! The tower is flattened to a simple extension Q(gamma); for a squarefree
//! polynomial f over that field, the norm Res_Y(m(Y), f(X - sY)) is taken
//! with the first shift s = 0, 1, 2, ... that makes it squarefree. The norm
//! factors over the rationals, and gcds over Q(gamma) pull the factors
//! back. The norm itself is computed by evaluation at integer points and
//! exact interpolation, with the pointwise resultants done by the integer
//! subresultant kernel.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::FieldError;
use crate::gfp::{self, Gf};
use crate::poly::{rat_int, Polynomial, Rational};
use crate::zpoly;

use super::flatten::{flattening, Flattening};
use super::{c_cmp, Coord, Element, FieldPoly, Tower};

const NORM_SHIFT_BUDGET: i64 = 40;

/// A factorization over a tower: `unit * prod factor_i^mult_i = input`,
/// factors monic irreducible over the tower, canonically ordered.
#[derive(Debug, Clone)]
pub struct FieldFactorization {
    pub unit: Element,
    pub factors: Vec<(FieldPoly, u32)>,
}

impl FieldFactorization {
    pub fn is_single(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }

    pub fn expand(&self) -> FieldPoly {
        let t = self.unit.tower();
        let mut acc = FieldPoly::new(t, vec![self.unit.clone()]);
        for (f, m) in &self.factors {
            for _ in 0..*m {
                acc = acc.mul(f);
            }
        }
        acc
    }

    /// Degrees of the irreducible factors, with multiplicity, ascending.
    pub fn factor_degrees(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (f, m) in &self.factors {
            for _ in 0..*m {
                out.push(f.degree());
            }
        }
        out.sort_unstable();
        out
    }

    /// Roots in the field: negated constant coefficients of linear factors.
    pub fn linear_roots(&self) -> Vec<Element> {
        let mut out: Vec<Element> = self
            .factors
            .iter()
            .filter(|(f, _)| f.degree() == 1)
            .map(|(f, _)| f.coeff(0).neg())
            .collect();
        out.sort_by(|a, b| a.canonical_cmp(b));
        out
    }
}

// Arithmetic in H = Q[Y]/(m), elements as rational polynomials of degree < n.

fn s_mul(m: &Polynomial, a: &Polynomial, b: &Polynomial) -> Polynomial {
    (a * b).div_rem(m).expect("minpoly nonzero").1
}

fn s_inv(m: &Polynomial, a: &Polynomial) -> Result<Polynomial, FieldError> {
    if a.is_zero() {
        return Err(FieldError::InverseOfZero);
    }
    let (g, s, _) = a.extended_gcd(m);
    debug_assert!(g.is_one(), "minpoly must be irreducible");
    Ok(s.div_rem(m).expect("minpoly nonzero").1)
}

// Polynomials over H: ascending coefficient vectors.

type SPoly = Vec<Polynomial>;

fn sp_trim(mut v: SPoly) -> SPoly {
    while v.last().is_some_and(Polynomial::is_zero) {
        v.pop();
    }
    v
}

fn sp_mul(m: &Polynomial, a: &[Polynomial], b: &[Polynomial]) -> SPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Polynomial::zero(); a.len() + b.len() - 1];
    for (i, p) in a.iter().enumerate() {
        if p.is_zero() {
            continue;
        }
        for (j, q) in b.iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            out[i + j] = &out[i + j] + &s_mul(m, p, q);
        }
    }
    sp_trim(out)
}

fn sp_divrem(m: &Polynomial, a: &[Polynomial], b: &[Polynomial]) -> Result<(SPoly, SPoly), FieldError> {
    if b.is_empty() {
        return Err(FieldError::ZeroPolynomial);
    }
    let db = b.len() - 1;
    if a.len() <= db {
        return Ok((Vec::new(), a.to_vec()));
    }
    let da = a.len() - 1;
    let lb_inv = s_inv(m, b.last().unwrap())?;
    let mut rem: SPoly = a.to_vec();
    let mut quo = vec![Polynomial::zero(); da - db + 1];
    for k in (db..=da).rev() {
        let c = s_mul(m, &rem[k], &lb_inv);
        if !c.is_zero() {
            for i in 0..db {
                let s = s_mul(m, &c, &b[i]);
                rem[k - db + i] = &rem[k - db + i] - &s;
            }
        }
        rem[k] = Polynomial::zero();
        quo[k - db] = c;
    }
    Ok((sp_trim(quo), sp_trim(rem)))
}

fn sp_gcd(m: &Polynomial, a: &[Polynomial], b: &[Polynomial]) -> Result<SPoly, FieldError> {
    let mut f = sp_trim(a.to_vec());
    let mut g = sp_trim(b.to_vec());
    while !g.is_empty() {
        let (_, r) = sp_divrem(m, &f, &g)?;
        f = g;
        g = r;
    }
    if f.is_empty() {
        return Ok(f);
    }
    let inv = s_inv(m, f.last().unwrap())?;
    Ok(f.iter().map(|c| s_mul(m, c, &inv)).collect())
}

fn sp_derivative(v: &[Polynomial]) -> SPoly {
    if v.len() <= 1 {
        return Vec::new();
    }
    sp_trim(
        v.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.scale(&rat_int(i as i64)))
            .collect(),
    )
}

/// Norm of the shifted polynomial: `Res_Y(m(Y), f(X - sY))`, by evaluation
/// at integer points and exact interpolation. `f` must be monic over H.
fn norm_shifted(m: &Polynomial, f: &[Polynomial], s: i64) -> Polynomial {
    let n = m.degree().unwrap();
    let degf = f.len() - 1;
    let d = n * degf;
    let points: Vec<Rational> = interpolation_points(d + 1);
    let mut values = Vec::with_capacity(d + 1);
    for x in &points {
        // F(x, Y) = sum_i c_i(Y) (x - sY)^i.
        let base = Polynomial::new(vec![x.clone(), rat_int(-s)]);
        let mut pow = Polynomial::one();
        let mut fx = Polynomial::zero();
        for c in f.iter() {
            if !c.is_zero() {
                fx = &fx + &(c * &pow);
            }
            pow = &pow * &base;
        }
        let value = if fx.is_zero() {
            Rational::zero()
        } else {
            m.resultant(&fx).expect("both nonzero")
        };
        values.push(value);
    }
    let norm = interpolate(&points, &values);
    debug_assert_eq!(norm.degree(), Some(d), "monic input yields a degree-nd norm");
    norm
}

fn interpolation_points(count: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(count);
    let mut k = 0i64;
    while out.len() < count {
        if k == 0 {
            out.push(rat_int(0));
        } else {
            out.push(rat_int(k));
            if out.len() < count {
                out.push(rat_int(-k));
            }
        }
        k += 1;
    }
    out
}

/// Newton divided-difference interpolation, exact over the rationals.
fn interpolate(xs: &[Rational], ys: &[Rational]) -> Polynomial {
    let n = xs.len();
    let mut coef: Vec<Rational> = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            let num = &coef[i] - &coef[i - 1];
            let den = &xs[i] - &xs[i - j];
            coef[i] = num / den;
        }
    }
    let mut poly = Polynomial::zero();
    for i in (0..n).rev() {
        let lin = Polynomial::new(vec![-xs[i].clone(), Rational::one()]);
        poly = &(&poly * &lin) + &Polynomial::constant(coef[i].clone());
    }
    poly
}

/// Modular squarefreeness probe. `true` is rigorous (a prime not dividing
/// the leading coefficient with constant gcd(f, f') certifies gcd = 1 over
/// the rationals); `false` after three undecided primes just discards the
/// shift, which is harmless.
fn norm_is_squarefree(r: &Polynomial) -> bool {
    let (prim, _, _) = zpoly::clear_denominators(r);
    let lc = zpoly::lc(&prim);
    let mut p = 9973u64;
    let mut tried = 0;
    while tried < 3 {
        p = next_prime(p);
        if (&lc % BigInt::from(p)).is_zero() {
            continue;
        }
        tried += 1;
        let gf = Gf::new(p);
        let fp = gfp::from_zpoly(&prim, gf);
        if gfp::is_squarefree(gf, &fp) {
            return true;
        }
    }
    false
}

fn next_prime(n: u64) -> u64 {
    let mut c = n + 1 + (n % 2);
    loop {
        if gfp::is_prime_u64(c) {
            return c;
        }
        c += 2;
    }
}

/// Complete factorization of a nonzero polynomial over the tower.
pub fn factor_over_field(f: &FieldPoly, k: &Tower) -> Result<FieldFactorization, FieldError> {
    assert!(f.tower().same_field(k), "polynomial lives over another tower");
    if f.is_zero() {
        return Err(FieldError::ZeroPolynomial);
    }
    if k.is_rationals() {
        return factor_rational_base(f, k);
    }
    let unit = f.leading_coeff();
    if f.degree() == 0 {
        return Ok(FieldFactorization {
            unit,
            factors: Vec::new(),
        });
    }
    if f.degree() == 1 {
        return Ok(FieldFactorization {
            unit,
            factors: vec![(f.monic()?, 1)],
        });
    }

    let flat = flattening(k)?;
    let m = &flat.minpoly;

    // Map into the simple extension and normalize monic.
    let mut fh: SPoly = f
        .coeffs
        .iter()
        .map(|c| flat.to_simple(k, c))
        .collect::<Vec<_>>();
    fh = sp_trim(fh);
    let lc_inv = s_inv(m, fh.last().unwrap())?;
    let fh: SPoly = fh.iter().map(|c| s_mul(m, c, &lc_inv)).collect();

    // Squarefree part.
    let g = sp_gcd(m, &fh, &sp_derivative(&fh))?;
    let fsf = if g.len() == 1 {
        fh.clone()
    } else {
        sp_divrem(m, &fh, &g)?.0
    };

    // Shifted norm, first squarefree shift wins.
    let mut chosen: Option<(i64, Polynomial)> = None;
    for s in 0..=NORM_SHIFT_BUDGET {
        let norm = norm_shifted(m, &fsf, s);
        if norm_is_squarefree(&norm) {
            chosen = Some((s, norm));
            break;
        }
    }
    let Some((shift, norm)) = chosen else {
        return Err(FieldError::NormShiftExhausted);
    };

    // Factor the norm over the rationals and pull each factor back.
    let rational_factors = crate::factorq::factor_over_q(&norm);
    let mut parts: Vec<SPoly> = Vec::new();
    if rational_factors.factors.len() == 1 {
        parts.push(fsf.clone());
    } else {
        for (ri, _) in &rational_factors.factors {
            // h = r_i(X + shift*gamma) mod fsf, by Horner over H.
            let h = eval_shifted_mod(m, ri, shift, &fsf)?;
            let gi = sp_gcd(m, &fsf, &h)?;
            if gi.len() > 1 {
                parts.push(gi);
            }
        }
    }

    // Multiplicities against the full (non-squarefree) fh.
    let mut factors: Vec<(FieldPoly, u32)> = Vec::new();
    let mut rest = fh;
    for g in parts {
        let mut mult = 0u32;
        loop {
            let (q, r) = sp_divrem(m, &rest, &g)?;
            if !r.is_empty() {
                break;
            }
            rest = if q.is_empty() { vec![Polynomial::one()] } else { q };
            mult += 1;
        }
        debug_assert!(mult >= 1);
        let coeffs: Vec<Coord> = g.iter().map(|c| flat.from_simple(k, c)).collect();
        factors.push((
            FieldPoly {
                tower: k.clone(),
                coeffs,
            },
            mult,
        ));
    }
    debug_assert!(rest.len() == 1, "all factors accounted for");
    factors.sort_by(field_poly_cmp);
    Ok(FieldFactorization { unit, factors })
}

fn field_poly_cmp(a: &(FieldPoly, u32), b: &(FieldPoly, u32)) -> std::cmp::Ordering {
    a.0.coeffs.len().cmp(&b.0.coeffs.len()).then_with(|| {
        for (x, y) in a.0.coeffs.iter().zip(b.0.coeffs.iter()) {
            let c = c_cmp(x, y);
            if c != std::cmp::Ordering::Equal {
                return c;
            }
        }
        std::cmp::Ordering::Equal
    })
}

/// `r(X + shift*gamma) mod fsf` over H, with `r` a rational polynomial.
fn eval_shifted_mod(
    m: &Polynomial,
    r: &Polynomial,
    shift: i64,
    fsf: &[Polynomial],
) -> Result<SPoly, FieldError> {
    // x_plus: the polynomial (X + shift*gamma) over H.
    let gamma_term = Polynomial::x().scale(&rat_int(shift)); // shift * Y, as an H element
    let x_plus: SPoly = sp_trim(vec![gamma_term, Polynomial::one()]);
    let mut acc: SPoly = Vec::new();
    for c in r.coeffs().iter().rev() {
        acc = sp_mul(m, &acc, &x_plus);
        if !c.is_zero() {
            let constant = vec![Polynomial::constant(c.clone())];
            let n = acc.len().max(1);
            let mut padded = acc;
            padded.resize(n, Polynomial::zero());
            padded[0] = &padded[0] + &constant[0];
            acc = sp_trim(padded);
        }
        acc = sp_divrem(m, &acc, fsf)?.1;
    }
    Ok(acc)
}

/// Base-case factorization over the rationals, wrapped in tower types.
fn factor_rational_base(f: &FieldPoly, k: &Tower) -> Result<FieldFactorization, FieldError> {
    let q = f.to_rational_poly().expect("height-0 coefficients are rational");
    let fact = crate::factorq::factor_over_q(&q);
    Ok(FieldFactorization {
        unit: k.rational_element(fact.unit.clone()),
        factors: fact
            .factors
            .into_iter()
            .map(|(p, m)| (FieldPoly::from_rational_poly(k, &p), m))
            .collect(),
    })
}

/// All roots of `f` lying in the tower, canonically ordered.
pub fn roots_in_field(f: &FieldPoly, k: &Tower) -> Result<Vec<Element>, FieldError> {
    Ok(factor_over_field(f, k)?.linear_roots())
}

/// Searches for an element `r` with `r^q = a` in the field of `a`, for
/// prime `q`: the linear factors of `X^q - a`. Returns the canonically
/// smallest root when one exists.
pub fn is_qth_power(a: &Element, q: u64) -> Result<Option<Element>, FieldError> {
    if !gfp::is_prime_u64(q) {
        return Err(FieldError::NotPrime(q));
    }
    if a.is_zero() {
        return Err(FieldError::InverseOfZero);
    }
    let k = a.tower().clone();
    if k.is_rationals() {
        let v = a.to_rational().expect("height 0");
        return Ok(rational_qth_root(&v, q).map(|r| k.rational_element(r)));
    }
    let binomial = FieldPoly::binomial(q as usize, a);
    let roots = roots_in_field(&binomial, &k)?;
    Ok(roots.into_iter().next())
}

/// Exact q-th root of a rational, if any (q prime; negative values allowed
/// for odd q).
pub(crate) fn rational_qth_root(v: &Rational, q: u64) -> Option<Rational> {
    if v.is_zero() {
        return Some(Rational::zero());
    }
    let negative = v < &Rational::zero();
    if negative && q == 2 {
        return None;
    }
    let av = if negative { -v.clone() } else { v.clone() };
    let nr = av.numer().nth_root(q as u32);
    let dr = av.denom().nth_root(q as u32);
    if nr.pow(q as u32) == *av.numer() && dr.pow(q as u32) == *av.denom() {
        let root = Rational::new(nr, dr);
        Some(if negative { -root } else { root })
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ball::ComplexBall;
    use crate::parse::parse_polynomial;

    fn p(s: &str) -> Polynomial {
        parse_polynomial(s).unwrap()
    }

    fn gaussian() -> Tower {
        Tower::rationals(128)
            .extend_rational(&p("X^2+1"), &ComplexBall::from_f64(0.0, 1.0, 0.3))
            .unwrap()
    }

    #[test]
    fn splits_over_gaussian_field() {
        let k = gaussian();
        let f = FieldPoly::from_rational_poly(&k, &p("X^2+1"));
        let fact = factor_over_field(&f, &k).unwrap();
        assert_eq!(fact.factor_degrees(), vec![1, 1]);
        let roots = fact.linear_roots();
        let i = k.generator(1);
        assert!(roots.contains(&i));
        assert!(roots.contains(&i.neg()));
        assert_eq!(fact.expand(), f);
    }

    #[test]
    fn roots_in_field_finds_both_gaussian_units() {
        let k = gaussian();
        let f = FieldPoly::from_rational_poly(&k, &p("X^2+1"));
        let roots = roots_in_field(&f, &k).unwrap();
        assert_eq!(roots.len(), 2);
    }

    #[test]
    fn cube_root_in_rationals() {
        let q = Tower::rationals(64);
        let eight = q.rational_element(rat_int(8));
        let r = is_qth_power(&eight, 3).unwrap().unwrap();
        assert_eq!(r, q.rational_element(rat_int(2)));
        let eleven = q.rational_element(rat_int(11));
        assert!(is_qth_power(&eleven, 7).unwrap().is_none());
        assert!(is_qth_power(&eleven, 6).is_err());
    }

    #[test]
    fn irreducible_stays_irreducible_over_sqrt2() {
        // X^3 - 2 over Q(sqrt2): degree 3 is coprime to 2.
        let k = Tower::rationals(128)
            .extend_rational(&p("X^2-2"), &ComplexBall::from_f64(1.414, 0.0, 0.1))
            .unwrap();
        let f = FieldPoly::from_rational_poly(&k, &p("X^3-2"));
        let fact = factor_over_field(&f, &k).unwrap();
        assert!(fact.is_single());
    }

    #[test]
    fn splits_with_multiplicity_over_field() {
        // (X - sqrt2)^2 (X + sqrt2) over Q(sqrt2).
        let k = Tower::rationals(128)
            .extend_rational(&p("X^2-2"), &ComplexBall::from_f64(1.414, 0.0, 0.1))
            .unwrap();
        let r = k.generator(1);
        let lin_minus = FieldPoly::new(&k, vec![r.neg(), k.one_element()]);
        let lin_plus = FieldPoly::new(&k, vec![r.clone(), k.one_element()]);
        let f = lin_minus.mul(&lin_minus).mul(&lin_plus);
        let fact = factor_over_field(&f, &k).unwrap();
        let mults: Vec<u32> = fact.factors.iter().map(|(_, m)| *m).collect();
        assert_eq!(fact.factors.len(), 2);
        assert!(mults.contains(&2) && mults.contains(&1));
        assert_eq!(fact.expand(), f);
    }

    #[test]
    fn rational_root_extraction() {
        assert_eq!(rational_qth_root(&rat_int(8), 3), Some(rat_int(2)));
        assert_eq!(rational_qth_root(&rat_int(-8), 3), Some(rat_int(-2)));
        assert_eq!(rational_qth_root(&rat_int(-4), 2), None);
        assert_eq!(
            rational_qth_root(&crate::poly::rat(27, 8), 3),
            Some(crate::poly::rat(3, 2))
        );
    }
}
