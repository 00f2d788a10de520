//! Multifactor Hensel lifting.
//!
//! Lifts a factorization of a monic polynomial modulo p to a factorization
//! modulo p^k via quadratic steps on a balanced binary factor tree. All
//! node polynomials stay monic; the caller is responsible for making the
//! target monic modulo p^k (the chosen prime never divides the leading
//! coefficient, so it is invertible).

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Zero};

use crate::gfp::{self, Gf, GpPoly};
use crate::zpoly::{self, ZPoly};

/// Arithmetic on polynomials with coefficients reduced into `[0, m)`.
struct ModCtx {
    m: BigInt,
}

impl ModCtx {
    fn red(&self, c: &BigInt) -> BigInt {
        c.mod_floor(&self.m)
    }

    fn reduce(&self, f: &[BigInt]) -> ZPoly {
        zpoly::trim(f.iter().map(|c| self.red(c)).collect())
    }

    fn add(&self, a: &[BigInt], b: &[BigInt]) -> ZPoly {
        self.reduce(&zpoly::add(a, b))
    }

    fn sub(&self, a: &[BigInt], b: &[BigInt]) -> ZPoly {
        self.reduce(&zpoly::sub(a, b))
    }

    fn mul(&self, a: &[BigInt], b: &[BigInt]) -> ZPoly {
        self.reduce(&zpoly::mul(a, b))
    }

    /// Division by a monic divisor, exact in the quotient ring.
    fn div_rem_monic(&self, a: &[BigInt], b: &[BigInt]) -> (ZPoly, ZPoly) {
        debug_assert!(zpoly::lc(b).is_one(), "divisor must be monic");
        let db = zpoly::degree(b).expect("monic divisor nonzero");
        let da = match zpoly::degree(a) {
            Some(d) if d >= db => d,
            _ => return (Vec::new(), a.to_vec()),
        };
        let mut rem: ZPoly = a.to_vec();
        let mut quo = vec![BigInt::zero(); da - db + 1];
        for k in (db..=da).rev() {
            let c = self.red(&rem[k]);
            if !c.is_zero() {
                quo[k - db] = c.clone();
                for i in 0..=db {
                    let t = &c * &b[i];
                    rem[k - db + i] = self.red(&(&rem[k - db + i] - t));
                }
            } else {
                rem[k] = BigInt::zero();
            }
        }
        (zpoly::trim(quo), self.reduce(&rem))
    }
}

/// One quadratic Hensel step: given `f = g*h (mod m)` with Bezout pair
/// `s*g + t*h = 1 (mod m)`, `g`, `h`, `f` monic, produces the same data
/// modulo `m^2` (or modulo `cap` if that is smaller).
#[allow(clippy::too_many_arguments)]
fn hensel_step(
    f: &[BigInt],
    g: &[BigInt],
    h: &[BigInt],
    s: &[BigInt],
    t: &[BigInt],
    m: &BigInt,
    cap: &BigInt,
) -> (ZPoly, ZPoly, ZPoly, ZPoly) {
    let m2 = (m * m).min(cap.clone());
    let ctx = ModCtx { m: m2 };
    let e = ctx.sub(f, &ctx.mul(g, h));
    let se = ctx.mul(s, &e);
    let (q, r) = ctx.div_rem_monic(&se, h);
    let g_new = ctx.add(&ctx.add(g, &ctx.mul(t, &e)), &ctx.mul(&q, g));
    let h_new = ctx.add(h, &r);
    let b = ctx.sub(&ctx.add(&ctx.mul(s, &g_new), &ctx.mul(t, &h_new)), &[BigInt::one()]);
    let sb = ctx.mul(s, &b);
    let (c, d) = ctx.div_rem_monic(&sb, &h_new);
    let s_new = ctx.sub(s, &d);
    let t_new = ctx.sub(&ctx.sub(t, &ctx.mul(t, &b)), &ctx.mul(&c, &g_new));
    (g_new, h_new, s_new, t_new)
}

/// Lifts the factor pair `(g, h)` of `target` from mod p up to mod `modulus`
/// (a power of p), starting from a Bezout pair computed over GF(p).
fn lift_pair(
    target: &[BigInt],
    g0: &GpPoly,
    h0: &GpPoly,
    p: u64,
    modulus: &BigInt,
) -> (ZPoly, ZPoly) {
    let gf = Gf::new(p);
    let (d, s0, t0) = gfp::extended_gcd(gf, g0, h0);
    debug_assert!(gfp::is_one(&d), "tree factors must be coprime mod p");
    let mut g = gfp::to_zpoly(g0);
    let mut h = gfp::to_zpoly(h0);
    let mut s = gfp::to_zpoly(&s0);
    let mut t = gfp::to_zpoly(&t0);
    let mut m = BigInt::from(p);
    while &m < modulus {
        let (g2, h2, s2, t2) = hensel_step(target, &g, &h, &s, &t, &m, modulus);
        g = g2;
        h = h2;
        s = s2;
        t = t2;
        m = (&m * &m).min(modulus.clone());
    }
    (g, h)
}

/// Lifts all modular factors of the monic `target` (mod `modulus = p^k`)
/// from their reductions mod p. `factors` must be monic, coprime, and
/// multiply to `target mod p`.
pub fn lift_factors(
    target: &[BigInt],
    factors: &[GpPoly],
    p: u64,
    modulus: &BigInt,
) -> Vec<ZPoly> {
    if factors.len() == 1 {
        return vec![ModCtx { m: modulus.clone() }.reduce(target)];
    }
    let gf = Gf::new(p);
    // Balance by degree sum.
    let total: usize = factors.iter().map(|f| f.len() - 1).sum();
    let mut left_deg = 0;
    let mut split = 0;
    for (i, f) in factors.iter().enumerate() {
        if left_deg * 2 >= total && i > 0 {
            break;
        }
        left_deg += f.len() - 1;
        split = i + 1;
    }
    let (lf, rf) = factors.split_at(split.max(1).min(factors.len() - 1));
    let prod = |fs: &[GpPoly]| -> GpPoly {
        let mut acc: GpPoly = vec![1];
        for f in fs {
            acc = gfp::mul(gf, &acc, f);
        }
        acc
    };
    let g0 = prod(lf);
    let h0 = prod(rf);
    let (g, h) = lift_pair(target, &g0, &h0, p, modulus);
    let mut out = lift_factors(&g, lf, p, modulus);
    out.extend(lift_factors(&h, rf, p, modulus));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn zp(coeffs: &[i64]) -> ZPoly {
        zpoly::trim(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn lifts_quadratic_split() {
        // f = (X - 1)(X + 4) = X^2 + 3X - 4; factor mod 7 then lift to 7^4.
        let f = zp(&[-4, 3, 1]);
        let p = 7u64;
        let gf = Gf::new(p);
        let fp = gfp::from_zpoly(&f, gf);
        let factors = gfp::factor_squarefree(gf, &fp);
        assert_eq!(factors.len(), 2);
        let modulus = BigInt::from(p).pow(4);
        let ctx = ModCtx { m: modulus.clone() };
        let target = ctx.reduce(&f);
        let lifted = lift_factors(&target, &factors, p, &modulus);
        let mut prod: ZPoly = vec![BigInt::one()];
        for g in &lifted {
            prod = ctx.mul(&prod, g);
        }
        assert_eq!(prod, target);
        // Centered representatives recover the true factors.
        let centered: Vec<ZPoly> = lifted
            .iter()
            .map(|g| {
                zpoly::trim(
                    g.iter()
                        .map(|c| {
                            if c * 2 > modulus.clone() {
                                c - &modulus
                            } else {
                                c.clone()
                            }
                        })
                        .collect(),
                )
            })
            .collect();
        assert!(centered.contains(&zp(&[-1, 1])));
        assert!(centered.contains(&zp(&[4, 1])));
    }

    #[test]
    fn lifts_three_factors() {
        // (X-1)(X-2)(X-3) lifted mod 7^5.
        let f = zp(&[-6, 11, -6, 1]);
        let p = 7u64;
        let gf = Gf::new(p);
        let fp = gfp::from_zpoly(&f, gf);
        let factors = gfp::factor_squarefree(gf, &fp);
        assert_eq!(factors.len(), 3);
        let modulus = BigInt::from(p).pow(5);
        let ctx = ModCtx { m: modulus.clone() };
        let target = ctx.reduce(&f);
        let lifted = lift_factors(&target, &factors, p, &modulus);
        let mut prod: ZPoly = vec![BigInt::one()];
        for g in &lifted {
            prod = ctx.mul(&prod, g);
        }
        assert_eq!(prod, target);
    }
}
