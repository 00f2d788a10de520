//! Certified complex embeddings of tower elements.
//!
//! Each level stores one certified ball for its generator. Higher-precision
//! balls are derived on demand in doubling stages (up to 16x the initial
//! precision) and memoized per tower node, so escalation is deterministic.
//! A stage-j generator ball is obtained by Newton refinement inside the
//! stage-(j-1) ball; a hull certificate guarantees the refined disk still
//! encloses the same root.

use std::sync::Arc;

use crate::ball::ComplexBall;
use crate::dyadic::Dyadic;
use crate::error::FieldError;
use crate::roots::{self, BallPoly, RootError};

use super::{Coord, Element, Tower, MAX_STAGES};

pub(crate) fn stage_prec(t: &Tower, j: usize) -> u32 {
    t.0.prec << j
}

fn stage_target_exp(t: &Tower, j: usize) -> i64 {
    -((stage_prec(t, j) as i64) - 32).max(32)
}

/// Generator balls for levels 1..=height at stage `j`, memoized.
pub(crate) fn gen_balls(t: &Tower, j: usize) -> Result<Arc<Vec<ComplexBall>>, FieldError> {
    assert!(j < MAX_STAGES);
    if t.height() == 0 {
        return Ok(Arc::new(Vec::new()));
    }
    t.0.balls[j]
        .get_or_init(|| compute_gen_balls(t, j))
        .clone()
}

fn compute_gen_balls(t: &Tower, j: usize) -> Result<Arc<Vec<ComplexBall>>, FieldError> {
    let parent = t.0.parent.as_ref().expect("height > 0");
    let par_balls = gen_balls(parent, j)?;
    let level = t.0.level.as_ref().unwrap();
    let top = if j == 0 {
        level.ball.clone()
    } else {
        let prev = gen_balls(t, j - 1)?;
        let prev_ball = prev.last().unwrap();
        let prec = stage_prec(t, j);
        let embedded = embed_poly(parent, &level.minpoly, &par_balls, prec)?;
        refine_within(&embedded, prev_ball, prec, stage_target_exp(t, j))?
    };
    let mut v: Vec<ComplexBall> = par_balls.as_ref().clone();
    v.push(top);
    Ok(Arc::new(v))
}

/// Newton-refines the unique root inside `old`, then certifies via a hull
/// disk that the refined enclosure still holds the same root.
fn refine_within(
    poly: &[ComplexBall],
    old: &ComplexBall,
    prec: u32,
    target_exp: i64,
) -> Result<ComplexBall, FieldError> {
    let refined = roots::refine_root(poly, old, prec, target_exp)
        .map_err(|_| FieldError::PrecisionExhausted { bits: prec })?;
    if old.contains_ball(&refined) {
        return Ok(refined);
    }
    let hull = old.hull(&refined, prec);
    if roots::certifies_single_root(poly, &hull.center(), hull.rad(), prec) {
        Ok(refined)
    } else {
        Err(FieldError::PrecisionExhausted { bits: prec })
    }
}

/// Embeds the coefficients of a polynomial over `t` (coefficients at level
/// `t.height()`) as complex balls.
pub(crate) fn embed_poly(
    t: &Tower,
    coeffs: &[Coord],
    balls: &[ComplexBall],
    prec: u32,
) -> Result<BallPoly, FieldError> {
    Ok(coeffs
        .iter()
        .map(|c| embed_coord(c, t.height(), balls, prec))
        .collect())
}

/// Horner evaluation of nested coordinates against the generator balls.
pub(crate) fn embed_coord(c: &Coord, level: usize, balls: &[ComplexBall], prec: u32) -> ComplexBall {
    match c {
        Coord::Rat(q) => ComplexBall::from_rational(q, prec),
        Coord::Ext(v) => {
            let g = &balls[level - 1];
            let mut acc = ComplexBall::zero();
            for c in v.iter().rev() {
                let lower = embed_coord(c, level - 1, balls, prec);
                acc = acc.mul(g, prec).add(&lower, prec);
            }
            acc
        }
    }
}

/// Embedding of an element at stage `j`.
pub(crate) fn embed_element(e: &Element, j: usize) -> Result<ComplexBall, FieldError> {
    let t = &e.tower;
    let balls = gen_balls(t, j)?;
    Ok(embed_coord(&e.coords, t.height(), &balls, stage_prec(t, j)))
}

/// Embedding refined until the radius is at most `2^target_exp`.
pub(crate) fn embed_element_refined(e: &Element, target_exp: i64) -> Result<ComplexBall, FieldError> {
    let want = Dyadic::pow2(target_exp);
    for j in 0..MAX_STAGES {
        let b = embed_element(e, j)?;
        if b.rad().le(&want) {
            return Ok(b);
        }
    }
    Err(FieldError::PrecisionExhausted {
        bits: stage_prec(&e.tower, MAX_STAGES - 1),
    })
}

/// All complex roots of a polynomial over `t` as certified disjoint disks,
/// at stage `j`.
pub(crate) fn poly_roots_at_stage(
    t: &Tower,
    coeffs: &[Coord],
    j: usize,
) -> Result<Vec<ComplexBall>, FieldError> {
    let prec = stage_prec(t, j);
    let balls = gen_balls(t, j)?;
    let embedded = embed_poly(t, coeffs, &balls, prec)?;
    roots::certified_roots(&embedded, prec, stage_target_exp(t, j)).map_err(|e| match e {
        RootError::AmbiguousDegree => FieldError::PrecisionExhausted { bits: prec },
        RootError::NeedMorePrecision => FieldError::PrecisionExhausted { bits: prec },
    })
}

/// Certifies that `selector` isolates exactly one root of the minimal
/// polynomial `minpoly` over `base`, returning a tight certified ball for
/// that root (contained in the selector).
pub(crate) fn certify_selected_root(
    base: &Tower,
    minpoly: &[Coord],
    selector: &ComplexBall,
) -> Result<ComplexBall, FieldError> {
    for j in 0..MAX_STAGES {
        let all = match poly_roots_at_stage(base, minpoly, j) {
            Ok(r) => r,
            Err(FieldError::PrecisionExhausted { .. }) if j + 1 < MAX_STAGES => continue,
            Err(e) => return Err(e),
        };
        let candidates: Vec<&ComplexBall> =
            all.iter().filter(|r| !r.is_disjoint(selector)).collect();
        match candidates.len() {
            0 => return Err(FieldError::AmbiguousRootSelector),
            1 => {
                let c = candidates[0];
                if selector.contains_ball(c) {
                    return Ok(c.clone());
                }
                // The certified disk pokes past the selector boundary; a
                // tighter stage may settle it.
            }
            _ => {}
        }
    }
    Err(FieldError::AmbiguousRootSelector)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;

    #[test]
    fn refined_embedding_reaches_target() {
        let q = Tower::rationals(64);
        let k = q
            .extend_rational(
                &parse_polynomial("X^2-2").unwrap(),
                &ComplexBall::from_f64(1.4, 0.0, 0.2),
            )
            .unwrap();
        let r = k.generator(1);
        let b = r.embedding_refined(-200).unwrap();
        assert!(b.rad().to_f64() <= 2f64.powi(-200));
        assert!((b.re().to_f64() - 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn nested_embedding() {
        let q = Tower::rationals(96);
        let k1 = q
            .extend_rational(
                &parse_polynomial("X^2-2").unwrap(),
                &ComplexBall::from_f64(1.4, 0.0, 0.2),
            )
            .unwrap();
        let k2 = k1
            .extend(
                &super::super::FieldPoly::from_rational_poly(
                    &k1,
                    &parse_polynomial("X^2-3").unwrap(),
                ),
                &ComplexBall::from_f64(1.73, 0.0, 0.1),
            )
            .unwrap();
        let x = k2.generator(1).add(&k2.generator(2));
        let b = x.embedding_refined(-80).unwrap();
        let expect = 2f64.sqrt() + 3f64.sqrt();
        assert!((b.re().to_f64() - expect).abs() < 1e-14);
        assert!(b.im().to_f64().abs() < 1e-14);
    }
}
