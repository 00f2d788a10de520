//! Exact real-root counting and isolation via Sturm chains.
//!
//! The chain is the signed remainder sequence of (f, f'). Chain entries are
//! rescaled by the reciprocal of the absolute value of their leading
//! coefficient after each remainder step; the scaling is positive, so sign
//! variations are unchanged while coefficient growth stays flat.

use num_traits::{Signed, Zero};
use std::cmp::Ordering;

use crate::error::SturmError;
use crate::poly::{Polynomial, Rational};

/// An open interval with rational endpoints, `lo < hi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    lo: Rational,
    hi: Rational,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Option<Interval> {
        if lo < hi {
            Some(Interval { lo, hi })
        } else {
            None
        }
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / crate::poly::rat_int(2)
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }
}

/// Evaluation point for sign-variation counts.
#[derive(Debug, Clone)]
pub enum Point {
    NegInfinity,
    Finite(Rational),
    PosInfinity,
}

/// The signed remainder sequence of a squarefree polynomial.
#[derive(Debug, Clone)]
pub struct SturmChain {
    polys: Vec<Polynomial>,
}

impl SturmChain {
    /// Builds the chain for a squarefree `f` of degree >= 1. Non-squarefree
    /// input is rejected, carrying the repeated-factor witness.
    pub fn new(f: &Polynomial) -> Result<SturmChain, SturmError> {
        if f.degree().unwrap_or(0) == 0 {
            return Err(SturmError::ConstantPolynomial);
        }
        let gcd = f.gcd(&f.derivative())?;
        if !gcd.is_constant() {
            return Err(SturmError::NotSquarefree {
                witness: crate::parse::format_polynomial(&gcd),
            });
        }
        Ok(Self::new_unchecked(f))
    }

    fn new_unchecked(f: &Polynomial) -> SturmChain {
        let mut polys = vec![normalize(f)];
        let d = f.derivative();
        if d.is_zero() {
            return SturmChain { polys };
        }
        polys.push(normalize(&d));
        loop {
            let n = polys.len();
            let (_, r) = polys[n - 2]
                .div_rem(&polys[n - 1])
                .expect("chain entries are nonzero");
            if r.is_zero() {
                break;
            }
            polys.push(normalize(&-&r));
        }
        SturmChain { polys }
    }

    pub fn polynomials(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    /// Number of sign variations of the chain at a point.
    pub fn variations(&self, at: &Point) -> usize {
        let mut signs: Vec<Ordering> = Vec::with_capacity(self.polys.len());
        for p in &self.polys {
            let s = match at {
                Point::Finite(x) => rational_sign(&p.eval(x)),
                Point::PosInfinity => rational_sign(&p.leading_coeff()),
                Point::NegInfinity => {
                    let lc_sign = rational_sign(&p.leading_coeff());
                    if p.degree().unwrap_or(0) % 2 == 1 {
                        lc_sign.reverse()
                    } else {
                        lc_sign
                    }
                }
            };
            if s != Ordering::Equal {
                signs.push(s);
            }
        }
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }

    /// Root count in the open interval `(lo, hi)`, assuming non-root endpoints.
    fn count_between(&self, lo: &Rational, hi: &Rational) -> usize {
        let a = self.variations(&Point::Finite(lo.clone()));
        let b = self.variations(&Point::Finite(hi.clone()));
        a.saturating_sub(b)
    }
}

fn rational_sign(q: &Rational) -> Ordering {
    if q.is_zero() {
        Ordering::Equal
    } else if q.is_positive() {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}

/// Positive rescaling: divides by |lc| so signs are preserved.
fn normalize(f: &Polynomial) -> Polynomial {
    if f.is_zero() {
        return Polynomial::zero();
    }
    let lc = f.leading_coeff().abs();
    f.scale(&lc.recip())
}

/// Number of distinct real roots of `f` (squarefree part taken internally).
pub fn count_real_roots(f: &Polynomial) -> Result<usize, SturmError> {
    if f.degree().unwrap_or(0) == 0 {
        return if f.is_zero() {
            Err(SturmError::ConstantPolynomial)
        } else {
            Ok(0)
        };
    }
    let sf = f.squarefree_part()?;
    if sf.degree().unwrap_or(0) == 0 {
        return Ok(0);
    }
    let chain = SturmChain::new_unchecked(&sf);
    Ok(chain
        .variations(&Point::NegInfinity)
        .saturating_sub(chain.variations(&Point::PosInfinity)))
}

/// Number of distinct real roots of `f` inside the open interval.
/// Errors if either endpoint is itself a root.
pub fn count_real_roots_in(f: &Polynomial, iv: &Interval) -> Result<usize, SturmError> {
    if f.degree().unwrap_or(0) == 0 {
        return Ok(0);
    }
    if f.eval(iv.lo()).is_zero() {
        return Err(SturmError::RootAtEndpoint {
            endpoint: iv.lo().to_string(),
        });
    }
    if f.eval(iv.hi()).is_zero() {
        return Err(SturmError::RootAtEndpoint {
            endpoint: iv.hi().to_string(),
        });
    }
    let sf = f.squarefree_part()?;
    if sf.degree().unwrap_or(0) == 0 {
        return Ok(0);
    }
    let chain = SturmChain::new_unchecked(&sf);
    Ok(chain.count_between(iv.lo(), iv.hi()))
}

/// Isolates the distinct real roots of `f`: pairwise-disjoint open rational
/// intervals, each containing exactly one root, together covering all of
/// them. The initial bound is the Cauchy bound `1 + max|a_i| / |a_n|`.
pub fn isolate_real_roots(f: &Polynomial) -> Result<Vec<Interval>, SturmError> {
    if f.is_zero() {
        return Err(SturmError::ConstantPolynomial);
    }
    let sf = f.squarefree_part()?;
    if sf.degree().unwrap_or(0) == 0 {
        return Ok(Vec::new());
    }
    let chain = SturmChain::new_unchecked(&sf);
    let bound = sf.cauchy_bound()?;
    let lo = -bound.clone();
    let hi = bound;
    // Endpoints are strict bounds on all roots, so they are never roots.
    let mut out = Vec::new();
    let mut stack = vec![(lo, hi)];
    while let Some((lo, hi)) = stack.pop() {
        let n = chain.count_between(&lo, &hi);
        match n {
            0 => {}
            1 => out.push(Interval { lo, hi }),
            _ => {
                let mut mid = (&lo + &hi) / crate::poly::rat_int(2);
                if sf.eval(&mid).is_zero() {
                    // Nudge the split point off the root; the roots are
                    // finitely many, so some dyadic offset works.
                    let mut delta = (&hi - &lo) / crate::poly::rat_int(4);
                    loop {
                        let cand = &mid + &delta;
                        if cand < hi && !sf.eval(&cand).is_zero() {
                            mid = cand;
                            break;
                        }
                        delta = delta / crate::poly::rat_int(2);
                    }
                }
                stack.push((lo, mid.clone()));
                stack.push((mid, hi));
            }
        }
    }
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    Ok(out)
}

/// Narrows an isolating interval for the unique root of `f` inside it until
/// its width is below `width`, by plain sign bisection.
pub fn refine_interval(f: &Polynomial, iv: &Interval, width: &Rational) -> Interval {
    let mut lo = iv.lo.clone();
    let mut hi = iv.hi.clone();
    let slo = rational_sign(&f.eval(&lo));
    while &(&hi - &lo) > width {
        let mid = (&lo + &hi) / crate::poly::rat_int(2);
        let smid = rational_sign(&f.eval(&mid));
        if smid == Ordering::Equal {
            // The midpoint is the root; shrink symmetrically around it.
            let quarter = (&hi - &lo) / crate::poly::rat_int(4);
            lo = &mid - &quarter;
            hi = &mid + &quarter;
            if &(&hi - &lo) <= width {
                break;
            }
            continue;
        }
        if smid == slo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Interval { lo, hi }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;
    use crate::poly::{rat, rat_int};

    fn p(s: &str) -> Polynomial {
        parse_polynomial(s).unwrap()
    }

    #[test]
    fn chain_for_x2_minus_2() {
        let chain = SturmChain::new(&p("X^2-2")).unwrap();
        // Normalized entries of [X^2-2, 2X, 2].
        assert_eq!(chain.len(), 3);
        assert_eq!(chain.polynomials()[0], p("X^2-2"));
        assert_eq!(chain.polynomials()[1], p("X"));
        assert_eq!(chain.polynomials()[2], p("1"));
    }

    #[test]
    fn chain_for_x2_plus_1() {
        let chain = SturmChain::new(&p("X^2+1")).unwrap();
        assert_eq!(chain.len(), 3);
        assert_eq!(chain.polynomials()[2], p("-1"));
    }

    #[test]
    fn chain_rejects_repeated_factor() {
        let err = SturmChain::new(&p("(X-1)*(X-1)")).unwrap_err();
        match err {
            SturmError::NotSquarefree { witness } => assert_eq!(witness, "X - 1"),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn counts_match_known_examples() {
        assert_eq!(count_real_roots(&p("X^5-4X-2")).unwrap(), 3);
        assert_eq!(count_real_roots(&p("X^2+1")).unwrap(), 0);
        assert_eq!(count_real_roots(&p("X^3+X^2-2X-1")).unwrap(), 3);
    }

    #[test]
    fn interval_counts() {
        let iv = |a: i64, b: i64| Interval::new(rat_int(a), rat_int(b)).unwrap();
        assert_eq!(count_real_roots_in(&p("X^2-2"), &iv(0, 2)).unwrap(), 1);
        assert_eq!(count_real_roots_in(&p("X^2-2"), &iv(-2, 2)).unwrap(), 2);
        assert_eq!(count_real_roots_in(&p("X^5-4X-2"), &iv(-1, 0)).unwrap(), 1);
    }

    #[test]
    fn endpoint_root_is_an_error() {
        let iv = Interval::new(rat_int(1), rat_int(3)).unwrap();
        assert!(matches!(
            count_real_roots_in(&p("X^2-1"), &iv),
            Err(SturmError::RootAtEndpoint { .. })
        ));
    }

    #[test]
    fn isolation_for_sqrt_2() {
        let ivs = isolate_real_roots(&p("X^2-2")).unwrap();
        assert_eq!(ivs.len(), 2);
        // Refine and check the positive root lands inside (1, 1.5).
        let pos = refine_interval(&p("X^2-2"), &ivs[1], &rat(1, 100));
        assert!(pos.lo() >= &rat_int(1) && pos.hi() <= &rat(3, 2));
        let neg = refine_interval(&p("X^2-2"), &ivs[0], &rat(1, 100));
        assert!(neg.lo() >= &rat(-3, 2) && neg.hi() <= &rat_int(-1));
    }

    #[test]
    fn isolation_counts_and_signs() {
        for s in ["X^5-4X-2", "X^3+X^2-2X-1", "X^2+1", "X^3-2"] {
            let f = p(s);
            let ivs = isolate_real_roots(&f).unwrap();
            assert_eq!(ivs.len(), count_real_roots(&f).unwrap());
            for iv in &ivs {
                let a = f.eval(iv.lo());
                let b = f.eval(iv.hi());
                assert!(
                    (a * b).is_negative(),
                    "isolating interval endpoints must straddle the root"
                );
            }
            // Pairwise disjoint.
            for w in ivs.windows(2) {
                assert!(w[0].hi() <= w[1].lo());
            }
        }
    }

    #[test]
    fn non_squarefree_counting_uses_distinct_roots() {
        // (X-1)^2 (X+2): distinct roots {1, -2}.
        assert_eq!(count_real_roots(&p("(X-1)*(X-1)*(X+2)")).unwrap(), 2);
    }
}
