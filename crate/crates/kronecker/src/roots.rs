//! Certified complex roots of polynomials with ball coefficients.
//!
//! Approximations come from an Aberth-Ehrlich sweep on the coefficient
//! centers; each is then certified by a Rouché-type disk test that bounds
//! the tail of the Taylor expansion at the approximation: if
//! `|b_0| + sum_{k>=2} |b_k| r^k < |b_1| r`, the disk of radius `r` holds
//! exactly one root of every polynomial inside the coefficient balls. The
//! test is evaluated with outward-rounded bounds, so a passing disk is a
//! rigorous enclosure no matter how sloppy the approximation was.

use crate::ball::ComplexBall;
use crate::dyadic::Dyadic;
use crate::poly::Polynomial;

pub type BallPoly = Vec<ComplexBall>;

/// Root-finding failure; the caller decides whether to retry at a higher
/// working precision.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootError {
    /// The leading coefficient ball contains zero, so the degree is unclear.
    AmbiguousDegree,
    /// Certification failed at this precision.
    NeedMorePrecision,
}

/// Converts a rational polynomial to ball coefficients.
pub fn from_polynomial(f: &Polynomial, prec: u32) -> BallPoly {
    f.coeffs()
        .iter()
        .map(|c| ComplexBall::from_rational(c, prec))
        .collect()
}

/// Horner evaluation; encloses `p(z)` for every instance of `p` and `z`.
pub fn eval(poly: &[ComplexBall], z: &ComplexBall, prec: u32) -> ComplexBall {
    let mut acc = ComplexBall::zero();
    for c in poly.iter().rev() {
        acc = acc.mul(z, prec).add(c, prec);
    }
    acc
}

pub fn derivative(poly: &[ComplexBall], prec: u32) -> BallPoly {
    poly.iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c.mul_int(i as i64, prec))
        .collect()
}

/// One-root disk certificate at center `c` (an exact point) and radius `r`.
pub fn certifies_single_root(poly: &[ComplexBall], c: &ComplexBall, r: &Dyadic, prec: u32) -> bool {
    let shifted = taylor_shift(poly, c, prec);
    let lb1 = shifted[1].abs_lower();
    if !lb1.is_positive() {
        return false;
    }
    let mut lhs = shifted[0].abs_upper();
    let mut rpow = r.mul(r);
    for b in shifted.iter().skip(2) {
        lhs = lhs.add(&b.abs_upper().mul(&rpow));
        rpow = rpow.mul(r);
    }
    lhs.lt(&lb1.mul(r))
}

/// Coefficients of `p(c + T)` as a polynomial in `T` (synthetic division).
pub fn taylor_shift(poly: &[ComplexBall], c: &ComplexBall, prec: u32) -> BallPoly {
    let n = poly.len();
    let mut work: BallPoly = poly.to_vec();
    let mut out: BallPoly = Vec::with_capacity(n);
    for _ in 0..n {
        for i in (0..work.len() - 1).rev() {
            let t = work[i + 1].mul(c, prec);
            work[i] = work[i].add(&t, prec);
        }
        out.push(work.remove(0));
        if work.is_empty() {
            break;
        }
    }
    out
}

fn point(re: Dyadic, im: Dyadic) -> ComplexBall {
    ComplexBall::exact_point(re, im)
}

/// Plain Newton iteration on the coefficient centers, as a refinement
/// heuristic. Returns the last iterate and the magnitude of the final step.
fn newton_polish(
    centers: &[ComplexBall],
    deriv: &[ComplexBall],
    start: &ComplexBall,
    steps: usize,
    prec: u32,
) -> (ComplexBall, Dyadic) {
    let mut z = start.center();
    let mut last_step = Dyadic::pow2(16);
    for _ in 0..steps {
        let pv = eval(centers, &z, prec);
        let dv = eval(deriv, &z, prec);
        if dv.center().contains_zero() {
            break;
        }
        let Some(w) = pv.center().div(&dv.center(), prec) else {
            break;
        };
        let znew = z.sub(&w, prec).center();
        last_step = w.center_abs_upper();
        z = znew;
        if last_step.is_zero() {
            break;
        }
    }
    (z, last_step)
}

/// All complex roots of a ball-coefficient polynomial as pairwise-disjoint
/// certified disks, each of radius at most `2^target_rad_exp` (when the
/// coefficient radii allow; otherwise as tight as they permit while still
/// certifying). Requires the leading coefficient to exclude zero.
pub fn certified_roots(
    poly: &[ComplexBall],
    prec: u32,
    target_rad_exp: i64,
) -> Result<Vec<ComplexBall>, RootError> {
    let n = poly.len();
    if n == 0 || poly[n - 1].contains_zero() {
        return Err(RootError::AmbiguousDegree);
    }
    let deg = n - 1;
    if deg == 0 {
        return Ok(Vec::new());
    }
    let centers: BallPoly = poly.iter().map(|c| c.center()).collect();
    let deriv_centers = derivative(&centers, prec);

    let approx = aberth(&centers, &deriv_centers, prec);

    // Polish each approximation, then certify.
    let mut balls: Vec<ComplexBall> = Vec::with_capacity(deg);
    for z0 in &approx {
        let (z, step) = newton_polish(&centers, &deriv_centers, z0, 64, prec);
        let ball = certify_near(poly, &z, &step, prec, target_rad_exp)
            .ok_or(RootError::NeedMorePrecision)?;
        balls.push(ball);
    }
    for i in 0..balls.len() {
        for j in i + 1..balls.len() {
            if !balls[i].is_disjoint(&balls[j]) {
                return Err(RootError::NeedMorePrecision);
            }
        }
    }
    Ok(balls)
}

/// Tries disks of growing radius around `z` until one certifies, starting
/// near the target radius.
fn certify_near(
    poly: &[ComplexBall],
    z: &ComplexBall,
    last_step: &Dyadic,
    prec: u32,
    target_rad_exp: i64,
) -> Option<ComplexBall> {
    let base = if last_step.is_zero() {
        Dyadic::pow2(target_rad_exp)
    } else {
        last_step.max(&Dyadic::pow2(target_rad_exp))
    };
    let mut r = base.round_up_mag(8);
    for _ in 0..64 {
        if certifies_single_root(poly, &z.center(), &r, prec) {
            return Some(ComplexBall::new(z.re().clone(), z.im().clone(), r));
        }
        r = r.mul_int(4);
    }
    None
}

/// Shrinks a certified root ball to radius at most `2^target_rad_exp` by
/// Newton polishing against the (possibly refreshed) coefficients.
pub fn refine_root(
    poly: &[ComplexBall],
    ball: &ComplexBall,
    prec: u32,
    target_rad_exp: i64,
) -> Result<ComplexBall, RootError> {
    if ball.rad().le(&Dyadic::pow2(target_rad_exp)) {
        return Ok(ball.clone());
    }
    let centers: BallPoly = poly.iter().map(|c| c.center()).collect();
    let deriv_centers = derivative(&centers, prec);
    let (z, step) = newton_polish(&centers, &deriv_centers, &ball.center(), 128, prec);
    let refined = certify_near(poly, &z, &step, prec, target_rad_exp)
        .ok_or(RootError::NeedMorePrecision)?;
    // The refined disk must still be the same root.
    if refined.is_disjoint(ball) {
        return Err(RootError::NeedMorePrecision);
    }
    Ok(refined)
}

/// Aberth-Ehrlich simultaneous iteration on the coefficient centers.
fn aberth(centers: &[ComplexBall], deriv: &[ComplexBall], prec: u32) -> Vec<ComplexBall> {
    let deg = centers.len() - 1;
    // Initial guesses on a circle inside the Cauchy bound.
    let lead_lb = centers[deg].abs_lower();
    let mut maxc = Dyadic::zero();
    for c in &centers[..deg] {
        let u = c.abs_upper();
        if maxc.lt(&u) {
            maxc = u;
        }
    }
    let radius = if lead_lb.is_positive() {
        let (q, e) = maxc.div(&lead_lb, 32);
        1.0 + q.add(&e).to_f64().min(1e12)
    } else {
        2.0
    };
    let r0 = 0.65 * radius.max(0.5);
    let mut zs: Vec<ComplexBall> = (0..deg)
        .map(|k| {
            let theta = 2.0 * std::f64::consts::PI * (k as f64) / (deg as f64) + 0.3941;
            point(
                Dyadic::from_f64(r0 * theta.cos()),
                Dyadic::from_f64(r0 * theta.sin()),
            )
        })
        .collect();

    let tol = Dyadic::pow2(-(prec as i64) + 8);
    for _ in 0..400 {
        let mut max_step = Dyadic::zero();
        for i in 0..deg {
            let zi = zs[i].clone();
            let pv = eval(centers, &zi, prec);
            if pv.center().contains_zero() {
                continue;
            }
            let dv = eval(deriv, &zi, prec);
            let w = match pv.center().div(&dv.center(), prec) {
                Some(w) => w.center(),
                None => {
                    // Derivative vanished at the guess; nudge it.
                    zs[i] = zi.add(&point(Dyadic::pow2(-7), Dyadic::pow2(-9)), prec).center();
                    continue;
                }
            };
            // sum of 1/(z_i - z_j)
            let mut s = ComplexBall::zero();
            let mut degenerate = false;
            for (j, zj) in zs.iter().enumerate() {
                if j == i {
                    continue;
                }
                let d = zi.sub(zj, prec).center();
                match d.inv(prec) {
                    Some(inv) => s = s.add(&inv.center(), prec).center(),
                    None => {
                        degenerate = true;
                        break;
                    }
                }
            }
            if degenerate {
                zs[i] = zi.add(&point(Dyadic::pow2(-6), Dyadic::pow2(-8)), prec).center();
                continue;
            }
            let denom = ComplexBall::one().sub(&w.mul(&s, prec), prec).center();
            let corr = match w.div(&denom, prec) {
                Some(c) => c.center(),
                None => w.clone(),
            };
            zs[i] = zi.sub(&corr, prec).center();
            let step = corr.center_abs_upper();
            if max_step.lt(&step) {
                max_step = step;
            }
        }
        if max_step.lt(&tol) {
            break;
        }
    }
    zs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;

    const P: u32 = 128;

    fn roots_of(s: &str) -> Vec<ComplexBall> {
        let f = parse_polynomial(s).unwrap();
        let poly = from_polynomial(&f, P);
        certified_roots(&poly, P, -100).unwrap()
    }

    #[test]
    fn square_root_of_two() {
        let roots = roots_of("X^2-2");
        assert_eq!(roots.len(), 2);
        let sqrt2 = 2.0_f64.sqrt();
        let mut res: Vec<f64> = roots.iter().map(|b| b.re().to_f64()).collect();
        res.sort_by(f64::total_cmp);
        assert!((res[0] + sqrt2).abs() < 1e-15);
        assert!((res[1] - sqrt2).abs() < 1e-15);
        for r in &roots {
            assert!(r.rad().to_f64() <= 2f64.powi(-100));
        }
    }

    #[test]
    fn imaginary_pair() {
        let roots = roots_of("X^2+1");
        assert_eq!(roots.len(), 2);
        for r in &roots {
            assert!(r.re().to_f64().abs() < 1e-20);
            assert!((r.im().to_f64().abs() - 1.0).abs() < 1e-20);
        }
    }

    #[test]
    fn seventh_roots_of_unity_polynomial() {
        let roots = roots_of("X^6+X^5+X^4+X^3+X^2+X+1");
        assert_eq!(roots.len(), 6);
        for r in &roots {
            let m = r.re().to_f64().hypot(r.im().to_f64());
            assert!((m - 1.0).abs() < 1e-12);
        }
        // All disjoint was already certified; also none real.
        for r in &roots {
            assert!(r.im().to_f64().abs() > 0.4);
        }
    }

    #[test]
    fn quintic_real_root_count_matches() {
        let roots = roots_of("X^5-4X-2");
        let real = roots
            .iter()
            .filter(|r| {
                // A disjoint certified disk of a real-coefficient polynomial
                // crossing the real axis must hold a real root: its conjugate
                // is also a root and would otherwise split the disk.
                let conj = r.conj();
                !r.is_disjoint(&conj)
            })
            .count();
        assert_eq!(real, 3);
    }

    #[test]
    fn refinement_shrinks_radius() {
        let f = parse_polynomial("X^3-2").unwrap();
        let poly = from_polynomial(&f, 256);
        let roots = certified_roots(&poly, 256, -60).unwrap();
        let real = roots
            .iter()
            .find(|r| r.im().to_f64().abs() < 1e-10)
            .unwrap();
        let tight = refine_root(&poly, real, 256, -200).unwrap();
        assert!(tight.rad().to_f64() <= 2f64.powi(-200));
        let c = 2.0_f64.powf(1.0 / 3.0);
        assert!((tight.re().to_f64() - c).abs() < 1e-14);
    }
}
