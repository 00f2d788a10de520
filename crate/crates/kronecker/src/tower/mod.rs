//! Towers of simple algebraic extensions of the rationals.
//!
//! A tower is a chain Q = K_0 ⊆ K_1 ⊆ ... ⊆ K_h where each level adjoins a
//! root of a monic polynomial irreducible over the level below, identified
//! among its complex siblings by a certified embedding ball. Elements carry
//! nested coordinates in the per-level power bases; by the simple-extension
//! basis theorem the representation is unique, so equality is structural.
//!
//! Tower values are immutable and shared; expensive derived data (complex
//! embeddings at higher precision, the primitive-element flattening, the
//! conjugation map) is memoized per tower node behind `OnceLock`, which
//! keeps results identical under any interleaving.

use num_traits::{One, Signed, Zero};
use std::sync::{Arc, OnceLock};

use crate::ball::ComplexBall;
use crate::error::FieldError;
use crate::poly::{Polynomial, Rational};

pub mod conj;
pub mod embed;
pub mod flatten;
pub mod io;
pub mod trager;

pub use conj::is_conjugation_invariant;
pub use flatten::minimal_polynomial;
pub use trager::{factor_over_field, is_qth_power, roots_in_field, FieldFactorization};

/// Number of precision-doubling stages; the last stage is 16x the initial
/// working precision, after which refinement gives up.
pub const MAX_STAGES: usize = 5;

/// Nested coordinates of a tower element. `Rat` lives at level 0; at level
/// k the vector has exactly `deg_k` entries, each a level-(k-1) coordinate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Coord {
    Rat(Rational),
    Ext(Vec<Coord>),
}

/// One tower level: a monic minimal polynomial over the level below and a
/// certified ball isolating the adjoined root among its conjugates.
#[derive(Debug, Clone)]
pub struct Level {
    pub(crate) minpoly: Vec<Coord>,
    pub(crate) ball: ComplexBall,
}

pub(crate) struct Node {
    pub(crate) parent: Option<Tower>,
    /// `None` exactly at the root (the rationals).
    pub(crate) level: Option<Level>,
    pub(crate) height: usize,
    pub(crate) degree: usize,
    pub(crate) prec: u32,
    pub(crate) balls: [OnceLock<Result<Arc<Vec<ComplexBall>>, FieldError>>; MAX_STAGES],
    pub(crate) flatten: OnceLock<Result<Arc<flatten::Flattening>, FieldError>>,
    pub(crate) conj: OnceLock<Result<Option<Arc<conj::ConjData>>, FieldError>>,
}

/// A tower of simple extensions of the rationals.
#[derive(Clone)]
pub struct Tower(pub(crate) Arc<Node>);

impl std::fmt::Debug for Tower {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Tower(height {}, degree {})", self.height(), self.degree())
    }
}

impl Tower {
    /// The base field: the rationals, with the given embedding precision
    /// in bits (the environment default is 256).
    pub fn rationals(prec: u32) -> Tower {
        Tower(Arc::new(Node {
            parent: None,
            level: None,
            height: 0,
            degree: 1,
            prec,
            balls: Default::default(),
            flatten: OnceLock::new(),
            conj: OnceLock::new(),
        }))
    }

    pub fn height(&self) -> usize {
        self.0.height
    }

    /// Degree over the rationals: the product of the level degrees.
    pub fn degree(&self) -> usize {
        self.0.degree
    }

    pub fn precision(&self) -> u32 {
        self.0.prec
    }

    pub fn is_rationals(&self) -> bool {
        self.0.height == 0
    }

    /// The subtower of the first `h` levels.
    pub fn prefix(&self, h: usize) -> Tower {
        assert!(h <= self.height());
        let mut t = self.clone();
        while t.height() > h {
            t = t.0.parent.clone().expect("height > 0 has a parent");
        }
        t
    }

    pub(crate) fn level(&self, k: usize) -> &Level {
        assert!(k >= 1 && k <= self.height(), "level index out of range");
        let mut node = &self.0;
        while node.height > k {
            node = &node.parent.as_ref().unwrap().0;
        }
        node.level.as_ref().unwrap()
    }

    /// Degree of level `k` (1-based).
    pub fn level_degree(&self, k: usize) -> usize {
        self.level(k).minpoly.len() - 1
    }

    /// Minimal polynomial of the level-`k` generator over the level below.
    pub fn level_minpoly(&self, k: usize) -> FieldPoly {
        FieldPoly {
            tower: self.prefix(k - 1),
            coeffs: self.level(k).minpoly.clone(),
        }
    }

    /// Stored certified ball of the level-`k` generator.
    pub fn level_ball(&self, k: usize) -> &ComplexBall {
        &self.level(k).ball
    }

    /// Structural equality: same minimal polynomials and same selected
    /// roots. Pointer equality is the fast path.
    pub fn same_field(&self, other: &Tower) -> bool {
        if Arc::ptr_eq(&self.0, &other.0) {
            return true;
        }
        if self.height() != other.height() {
            return false;
        }
        for k in 1..=self.height() {
            let a = self.level(k);
            let b = other.level(k);
            if a.minpoly != b.minpoly || a.ball != b.ball {
                return false;
            }
        }
        true
    }

    /// The generator of level `k` (1-based) as an element of this tower.
    pub fn generator(&self, k: usize) -> Element {
        assert!(k >= 1 && k <= self.height());
        let mut c = gen_coord_at_level(self, k);
        for lvl in k + 1..=self.height() {
            c = lift_once(self, lvl, c);
        }
        Element {
            tower: self.clone(),
            coords: c,
        }
    }

    /// Embeds a rational as an element.
    pub fn rational_element(&self, q: Rational) -> Element {
        Element {
            tower: self.clone(),
            coords: lift_rat(self, self.height(), q),
        }
    }

    pub fn zero_element(&self) -> Element {
        self.rational_element(Rational::zero())
    }

    pub fn one_element(&self) -> Element {
        self.rational_element(Rational::one())
    }

    /// Extends the tower by a root of `minpoly` (a polynomial over this
    /// tower), verified irreducible, with the root selected by `selector`.
    /// The selector must isolate exactly one complex root of the embedded
    /// minimal polynomial.
    pub fn extend(&self, minpoly: &FieldPoly, selector: &ComplexBall) -> Result<Tower, FieldError> {
        assert!(minpoly.tower.same_field(self), "minpoly lives over another field");
        let monic = minpoly.monic()?;
        if monic.degree() < 2 {
            return Err(FieldError::TrivialMinpoly);
        }
        // Irreducibility over the base.
        if self.is_rationals() {
            let q = monic.to_rational_poly().expect("rational coefficients");
            let fact = crate::factorq::factor_over_q(&q);
            if !fact.is_single() {
                let witness = &fact.factors[0].0;
                return Err(FieldError::ReducibleMinpoly {
                    factor: crate::parse::format_polynomial(witness),
                });
            }
        } else {
            let fact = trager::factor_over_field(&monic, self)?;
            if !fact.is_single() {
                let witness = &fact.factors[0].0;
                return Err(FieldError::ReducibleMinpoly {
                    factor: io::format_field_poly(witness),
                });
            }
        }
        self.extend_unchecked(&monic, selector)
    }

    /// Extension without the irreducibility check, for minimal polynomials
    /// that are already known irreducible (factors of verified
    /// factorizations). Root selection is still certified.
    pub(crate) fn extend_unchecked(
        &self,
        monic: &FieldPoly,
        selector: &ComplexBall,
    ) -> Result<Tower, FieldError> {
        let ball = embed::certify_selected_root(self, &monic.coeffs, selector)?;
        let level = Level {
            minpoly: monic.coeffs.clone(),
            ball,
        };
        let degree = self.degree() * (monic.coeffs.len() - 1);
        Ok(Tower(Arc::new(Node {
            parent: Some(self.clone()),
            level: Some(level),
            height: self.height() + 1,
            degree,
            prec: self.0.prec,
            balls: Default::default(),
            flatten: OnceLock::new(),
            conj: OnceLock::new(),
        })))
    }

    /// Convenience: extend by a polynomial with rational coefficients.
    pub fn extend_rational(
        &self,
        minpoly: &Polynomial,
        selector: &ComplexBall,
    ) -> Result<Tower, FieldError> {
        self.extend(&FieldPoly::from_rational_poly(self, minpoly), selector)
    }
}

/// An element of a tower, as nested power-basis coordinates.
#[derive(Clone)]
pub struct Element {
    pub(crate) tower: Tower,
    pub(crate) coords: Coord,
}

impl std::fmt::Debug for Element {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Element({})", io::format_element(self))
    }
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        self.tower.same_field(&other.tower) && self.coords == other.coords
    }
}

impl Eq for Element {}

impl Element {
    pub fn tower(&self) -> &Tower {
        &self.tower
    }

    pub fn coords(&self) -> &Coord {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        c_is_zero(&self.coords)
    }

    /// The rational value, when the element is rational.
    pub fn to_rational(&self) -> Option<Rational> {
        c_to_rational(&self.coords)
    }

    fn binop(&self, other: &Element, f: impl FnOnce(&Tower, usize, &Coord, &Coord) -> Coord) -> Element {
        assert!(
            self.tower.same_field(&other.tower),
            "elements belong to different towers"
        );
        Element {
            tower: self.tower.clone(),
            coords: f(&self.tower, self.tower.height(), &self.coords, &other.coords),
        }
    }

    pub fn add(&self, other: &Element) -> Element {
        self.binop(other, |t, k, a, b| c_add(t, k, a, b))
    }

    pub fn sub(&self, other: &Element) -> Element {
        self.binop(other, |t, k, a, b| c_sub(t, k, a, b))
    }

    pub fn mul(&self, other: &Element) -> Element {
        self.binop(other, |t, k, a, b| c_mul(t, k, a, b))
    }

    pub fn neg(&self) -> Element {
        Element {
            tower: self.tower.clone(),
            coords: c_neg(&self.coords),
        }
    }

    /// Multiplicative inverse; errors on zero.
    pub fn inverse(&self) -> Result<Element, FieldError> {
        Ok(Element {
            tower: self.tower.clone(),
            coords: c_inv(&self.tower, self.tower.height(), &self.coords)?,
        })
    }

    pub fn div(&self, other: &Element) -> Result<Element, FieldError> {
        Ok(self.mul(&other.inverse()?))
    }

    pub fn pow(&self, mut e: u32) -> Element {
        let mut base = self.clone();
        let mut acc = self.tower.one_element();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn scale(&self, q: &Rational) -> Element {
        Element {
            tower: self.tower.clone(),
            coords: c_scale(&self.coords, q),
        }
    }

    /// Certified complex embedding at the tower's stored precision.
    pub fn embedding(&self) -> Result<ComplexBall, FieldError> {
        embed::embed_element(self, 0)
    }

    /// Embedding refined until the ball radius is at most `2^target_exp`,
    /// escalating the working precision up to the 16x cap.
    pub fn embedding_refined(&self, target_exp: i64) -> Result<ComplexBall, FieldError> {
        embed::embed_element_refined(self, target_exp)
    }

    /// Canonical ordering on coordinates, used for deterministic output.
    pub fn canonical_cmp(&self, other: &Element) -> std::cmp::Ordering {
        c_cmp(&self.coords, &other.coords)
    }
}

/// A polynomial in one variable with coefficients in a tower.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldPoly {
    pub(crate) tower: Tower,
    pub(crate) coeffs: Vec<Coord>,
}

impl std::fmt::Debug for FieldPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FieldPoly({})", io::format_field_poly(self))
    }
}

impl FieldPoly {
    pub fn new(tower: &Tower, coeffs: Vec<Element>) -> FieldPoly {
        for c in &coeffs {
            assert!(c.tower.same_field(tower), "coefficient from another tower");
        }
        let mut coords: Vec<Coord> = coeffs.into_iter().map(|e| e.coords).collect();
        while coords.last().is_some_and(c_is_zero) {
            coords.pop();
        }
        FieldPoly {
            tower: tower.clone(),
            coeffs: coords,
        }
    }

    pub fn from_rational_poly(tower: &Tower, f: &Polynomial) -> FieldPoly {
        FieldPoly {
            tower: tower.clone(),
            coeffs: f
                .coeffs()
                .iter()
                .map(|q| lift_rat(tower, tower.height(), q.clone()))
                .collect(),
        }
    }

    /// `X^q - a` over the tower of `a`.
    pub fn binomial(q: usize, a: &Element) -> FieldPoly {
        let tower = a.tower.clone();
        let mut coeffs = vec![lift_rat(&tower, tower.height(), Rational::zero()); q + 1];
        coeffs[0] = c_neg(&a.coords);
        coeffs[q] = lift_rat(&tower, tower.height(), Rational::one());
        FieldPoly { tower, coeffs }
    }

    pub fn tower(&self) -> &Tower {
        &self.tower
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, i: usize) -> Element {
        let h = self.tower.height();
        Element {
            tower: self.tower.clone(),
            coords: self
                .coeffs
                .get(i)
                .cloned()
                .unwrap_or_else(|| lift_rat(&self.tower, h, Rational::zero())),
        }
    }

    pub fn leading_coeff(&self) -> Element {
        self.coeff(self.coeffs.len().saturating_sub(1))
    }

    /// When every coefficient is rational, the underlying rational poly.
    pub fn to_rational_poly(&self) -> Option<Polynomial> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c_to_rational(c)?);
        }
        Some(Polynomial::new(out))
    }

    pub fn monic(&self) -> Result<FieldPoly, FieldError> {
        if self.is_zero() {
            return Err(FieldError::ZeroPolynomial);
        }
        let t = &self.tower;
        let k = t.height();
        let lc = self.coeffs.last().unwrap();
        if c_is_one(lc) {
            return Ok(self.clone());
        }
        let inv = c_inv(t, k, lc)?;
        Ok(FieldPoly {
            tower: t.clone(),
            coeffs: self.coeffs.iter().map(|c| c_mul(t, k, c, &inv)).collect(),
        })
    }

    pub fn eval(&self, x: &Element) -> Element {
        assert!(x.tower.same_field(&self.tower));
        let t = &self.tower;
        let k = t.height();
        let mut acc = lift_rat(t, k, Rational::zero());
        for c in self.coeffs.iter().rev() {
            acc = c_add(t, k, &c_mul(t, k, &acc, &x.coords), c);
        }
        Element {
            tower: t.clone(),
            coords: acc,
        }
    }

    pub fn derivative(&self) -> FieldPoly {
        if self.coeffs.len() <= 1 {
            return FieldPoly {
                tower: self.tower.clone(),
                coeffs: Vec::new(),
            };
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c_scale(c, &crate::poly::rat_int(i as i64)))
            .collect();
        FieldPoly {
            tower: self.tower.clone(),
            coeffs: ep_trim(coeffs),
        }
    }

    pub fn mul(&self, other: &FieldPoly) -> FieldPoly {
        FieldPoly {
            tower: self.tower.clone(),
            coeffs: ep_mul(&self.tower, &self.coeffs, &other.coeffs),
        }
    }

    pub fn add(&self, other: &FieldPoly) -> FieldPoly {
        FieldPoly {
            tower: self.tower.clone(),
            coeffs: ep_add(&self.tower, &self.coeffs, &other.coeffs),
        }
    }

    pub fn div_rem(&self, other: &FieldPoly) -> Result<(FieldPoly, FieldPoly), FieldError> {
        let (q, r) = ep_divrem(&self.tower, &self.coeffs, &other.coeffs)?;
        Ok((
            FieldPoly {
                tower: self.tower.clone(),
                coeffs: q,
            },
            FieldPoly {
                tower: self.tower.clone(),
                coeffs: r,
            },
        ))
    }

    /// Monic gcd over the tower.
    pub fn gcd(&self, other: &FieldPoly) -> Result<FieldPoly, FieldError> {
        let g = ep_gcd(&self.tower, &self.coeffs, &other.coeffs)?;
        Ok(FieldPoly {
            tower: self.tower.clone(),
            coeffs: g,
        })
    }

    pub fn coeff_elements(&self) -> Vec<Element> {
        (0..self.coeffs.len()).map(|i| self.coeff(i)).collect()
    }
}

// ---------------------------------------------------------------------------
// Nested coordinate arithmetic.
// ---------------------------------------------------------------------------

/// Zero coordinate at level `k` of the tower (full nested form).
pub(crate) fn lift_rat(t: &Tower, k: usize, q: Rational) -> Coord {
    if k == 0 {
        return Coord::Rat(q);
    }
    let deg = t.level_degree(k);
    let mut v = vec![lift_rat(t, k - 1, Rational::zero()); deg];
    v[0] = lift_rat(t, k - 1, q);
    Coord::Ext(v)
}

/// Lifts a level-(k-1) coordinate to level k.
pub(crate) fn lift_once(t: &Tower, k: usize, c: Coord) -> Coord {
    let deg = t.level_degree(k);
    let mut v = vec![lift_rat(t, k - 1, Rational::zero()); deg];
    v[0] = c;
    Coord::Ext(v)
}

/// The level-`k` generator as a level-`k` coordinate.
pub(crate) fn gen_coord_at_level(t: &Tower, k: usize) -> Coord {
    let deg = t.level_degree(k);
    debug_assert!(deg >= 2);
    let mut v = vec![lift_rat(t, k - 1, Rational::zero()); deg];
    v[1] = lift_rat(t, k - 1, Rational::one());
    Coord::Ext(v)
}

pub(crate) fn c_is_zero(c: &Coord) -> bool {
    match c {
        Coord::Rat(q) => q.is_zero(),
        Coord::Ext(v) => v.iter().all(c_is_zero),
    }
}

pub(crate) fn c_is_one(c: &Coord) -> bool {
    match c {
        Coord::Rat(q) => q.is_one(),
        Coord::Ext(v) => c_is_one(&v[0]) && v[1..].iter().all(c_is_zero),
    }
}

pub(crate) fn c_to_rational(c: &Coord) -> Option<Rational> {
    match c {
        Coord::Rat(q) => Some(q.clone()),
        Coord::Ext(v) => {
            if v[1..].iter().all(c_is_zero) {
                c_to_rational(&v[0])
            } else {
                None
            }
        }
    }
}

pub(crate) fn c_add(t: &Tower, k: usize, a: &Coord, b: &Coord) -> Coord {
    match (a, b) {
        (Coord::Rat(x), Coord::Rat(y)) => Coord::Rat(x + y),
        (Coord::Ext(x), Coord::Ext(y)) => {
            debug_assert_eq!(x.len(), y.len());
            Coord::Ext(
                x.iter()
                    .zip(y.iter())
                    .map(|(p, q)| c_add(t, k - 1, p, q))
                    .collect(),
            )
        }
        _ => unreachable!("coords at mismatched levels"),
    }
}

pub(crate) fn c_neg(c: &Coord) -> Coord {
    match c {
        Coord::Rat(q) => Coord::Rat(-q),
        Coord::Ext(v) => Coord::Ext(v.iter().map(c_neg).collect()),
    }
}

pub(crate) fn c_sub(t: &Tower, k: usize, a: &Coord, b: &Coord) -> Coord {
    c_add(t, k, a, &c_neg(b))
}

pub(crate) fn c_scale(c: &Coord, q: &Rational) -> Coord {
    match c {
        Coord::Rat(x) => Coord::Rat(x * q),
        Coord::Ext(v) => Coord::Ext(v.iter().map(|x| c_scale(x, q)).collect()),
    }
}

pub(crate) fn c_mul(t: &Tower, k: usize, a: &Coord, b: &Coord) -> Coord {
    match (a, b) {
        (Coord::Rat(x), Coord::Rat(y)) => Coord::Rat(x * y),
        (Coord::Ext(x), Coord::Ext(y)) => {
            let deg = x.len();
            debug_assert_eq!(deg, y.len());
            // Schoolbook product, then reduction modulo the level minpoly.
            let mut prod = vec![lift_rat(t, k - 1, Rational::zero()); 2 * deg - 1];
            for (i, p) in x.iter().enumerate() {
                if c_is_zero(p) {
                    continue;
                }
                for (j, q) in y.iter().enumerate() {
                    if c_is_zero(q) {
                        continue;
                    }
                    let add = c_mul(t, k - 1, p, q);
                    prod[i + j] = c_add(t, k - 1, &prod[i + j], &add);
                }
            }
            reduce_mod_level(t, k, prod)
        }
        _ => unreachable!("coords at mismatched levels"),
    }
}

/// Reduces a raw coefficient vector (length possibly >= deg) modulo the
/// monic level-k minimal polynomial, returning a full-form coordinate.
pub(crate) fn reduce_mod_level(t: &Tower, k: usize, mut v: Vec<Coord>) -> Coord {
    let m = &t.level(k).minpoly;
    let deg = m.len() - 1;
    while v.len() > deg {
        let top = v.pop().unwrap();
        if c_is_zero(&top) {
            continue;
        }
        let shift = v.len() - deg;
        for (j, mc) in m.iter().take(deg).enumerate() {
            let sub = c_mul(t, k - 1, &top, mc);
            v[shift + j] = c_sub(t, k - 1, &v[shift + j], &sub);
        }
    }
    while v.len() < deg {
        v.push(lift_rat(t, k - 1, Rational::zero()));
    }
    Coord::Ext(v)
}

/// Inverse at level `k` by extended Euclid against the level minpoly,
/// recursing into lower-level inverses for the leading coefficients.
pub(crate) fn c_inv(t: &Tower, k: usize, a: &Coord) -> Result<Coord, FieldError> {
    if c_is_zero(a) {
        return Err(FieldError::InverseOfZero);
    }
    match a {
        Coord::Rat(q) => Ok(Coord::Rat(q.recip())),
        Coord::Ext(v) => {
            // Work in (level k-1)[Y] / (m_k).
            let m = &t.level(k).minpoly;
            let mut r0: Vec<Coord> = m.clone();
            let mut r1: Vec<Coord> = ep_trim(v.clone());
            let mut s0: Vec<Coord> = Vec::new();
            let mut s1: Vec<Coord> = vec![lift_rat(t, k - 1, Rational::one())];
            while !r1.is_empty() {
                let (q, r) = ep_divrem_level(t, k - 1, &r0, &r1)?;
                let qs1 = ep_mul_level(t, k - 1, &q, &s1);
                let s = ep_sub_level(t, k - 1, &s0, &qs1);
                r0 = r1;
                r1 = r;
                s0 = s1;
                s1 = s;
                if r0.len() == 1 {
                    break;
                }
            }
            debug_assert_eq!(r0.len(), 1, "minpoly must be irreducible");
            let c = c_inv(t, k - 1, &r0[0])?;
            let inv: Vec<Coord> = s0.iter().map(|x| c_mul(t, k - 1, x, &c)).collect();
            Ok(reduce_mod_level(t, k, inv))
        }
    }
}

/// Canonical deterministic ordering on coordinates.
pub(crate) fn c_cmp(a: &Coord, b: &Coord) -> std::cmp::Ordering {
    match (a, b) {
        (Coord::Rat(x), Coord::Rat(y)) => x.cmp(y),
        (Coord::Ext(x), Coord::Ext(y)) => {
            for (p, q) in x.iter().zip(y.iter()) {
                let c = c_cmp(p, q);
                if c != std::cmp::Ordering::Equal {
                    return c;
                }
            }
            x.len().cmp(&y.len())
        }
        (Coord::Rat(_), Coord::Ext(_)) => std::cmp::Ordering::Less,
        (Coord::Ext(_), Coord::Rat(_)) => std::cmp::Ordering::Greater,
    }
}

// Polynomial helpers over a level: coefficients are level-`lvl` coords.

pub(crate) fn ep_trim(mut v: Vec<Coord>) -> Vec<Coord> {
    while v.last().is_some_and(c_is_zero) {
        v.pop();
    }
    v
}

pub(crate) fn ep_add_level(t: &Tower, lvl: usize, a: &[Coord], b: &[Coord]) -> Vec<Coord> {
    let n = a.len().max(b.len());
    let zero = lift_rat(t, lvl, Rational::zero());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).unwrap_or(&zero);
        let y = b.get(i).unwrap_or(&zero);
        out.push(c_add(t, lvl, x, y));
    }
    ep_trim(out)
}

pub(crate) fn ep_sub_level(t: &Tower, lvl: usize, a: &[Coord], b: &[Coord]) -> Vec<Coord> {
    let nb: Vec<Coord> = b.iter().map(c_neg).collect();
    ep_add_level(t, lvl, a, &nb)
}

pub(crate) fn ep_mul_level(t: &Tower, lvl: usize, a: &[Coord], b: &[Coord]) -> Vec<Coord> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let zero = lift_rat(t, lvl, Rational::zero());
    let mut out = vec![zero; a.len() + b.len() - 1];
    for (i, p) in a.iter().enumerate() {
        if c_is_zero(p) {
            continue;
        }
        for (j, q) in b.iter().enumerate() {
            if c_is_zero(q) {
                continue;
            }
            let add = c_mul(t, lvl, p, q);
            out[i + j] = c_add(t, lvl, &out[i + j], &add);
        }
    }
    ep_trim(out)
}

pub(crate) fn ep_divrem_level(
    t: &Tower,
    lvl: usize,
    a: &[Coord],
    b: &[Coord],
) -> Result<(Vec<Coord>, Vec<Coord>), FieldError> {
    if b.is_empty() {
        return Err(FieldError::ZeroPolynomial);
    }
    let db = b.len() - 1;
    if a.len() <= db {
        return Ok((Vec::new(), a.to_vec()));
    }
    let da = a.len() - 1;
    let lb_inv = c_inv(t, lvl, b.last().unwrap())?;
    let zero = lift_rat(t, lvl, Rational::zero());
    let mut rem: Vec<Coord> = a.to_vec();
    let mut quo = vec![zero; da - db + 1];
    for k in (db..=da).rev() {
        let c = c_mul(t, lvl, &rem[k], &lb_inv);
        if !c_is_zero(&c) {
            for i in 0..db {
                let s = c_mul(t, lvl, &c, &b[i]);
                rem[k - db + i] = c_sub(t, lvl, &rem[k - db + i], &s);
            }
        }
        rem[k] = lift_rat(t, lvl, Rational::zero());
        quo[k - db] = c;
    }
    Ok((ep_trim(quo), ep_trim(rem)))
}

// Top-level (tower height) polynomial helpers.

pub(crate) fn ep_add(t: &Tower, a: &[Coord], b: &[Coord]) -> Vec<Coord> {
    ep_add_level(t, t.height(), a, b)
}

pub(crate) fn ep_mul(t: &Tower, a: &[Coord], b: &[Coord]) -> Vec<Coord> {
    ep_mul_level(t, t.height(), a, b)
}

pub(crate) fn ep_divrem(
    t: &Tower,
    a: &[Coord],
    b: &[Coord],
) -> Result<(Vec<Coord>, Vec<Coord>), FieldError> {
    ep_divrem_level(t, t.height(), a, b)
}

/// Monic gcd of polynomials over the tower.
pub(crate) fn ep_gcd(t: &Tower, a: &[Coord], b: &[Coord]) -> Result<Vec<Coord>, FieldError> {
    let lvl = t.height();
    let mut f = ep_trim(a.to_vec());
    let mut g = ep_trim(b.to_vec());
    while !g.is_empty() {
        let (_, r) = ep_divrem_level(t, lvl, &f, &g)?;
        f = g;
        g = r;
    }
    if f.is_empty() {
        return Ok(f);
    }
    // Normalize monic.
    let inv = c_inv(t, lvl, f.last().unwrap())?;
    Ok(f.iter().map(|c| c_mul(t, lvl, c, &inv)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;

    fn sqrt2_tower() -> Tower {
        let q = Tower::rationals(128);
        q.extend_rational(
            &parse_polynomial("X^2-2").unwrap(),
            &ComplexBall::from_f64(1.4, 0.0, 0.2),
        )
        .unwrap()
    }

    #[test]
    fn sqrt2_arithmetic() {
        let k = sqrt2_tower();
        assert_eq!(k.degree(), 2);
        let r = k.generator(1);
        // (1 + sqrt2)(-1 + sqrt2) = 1.
        let a = k.one_element().add(&r);
        let b = r.sub(&k.one_element());
        assert_eq!(a.mul(&b), k.one_element());
        // sqrt2^2 = 2.
        assert_eq!(r.mul(&r), k.rational_element(crate::poly::rat_int(2)));
        // inverse: 1/sqrt2 = sqrt2/2.
        let inv = r.inverse().unwrap();
        assert_eq!(inv.mul(&r), k.one_element());
    }

    #[test]
    fn reducible_minpoly_rejected() {
        let q = Tower::rationals(128);
        let err = q
            .extend_rational(
                &parse_polynomial("X^2-1").unwrap(),
                &ComplexBall::from_f64(1.0, 0.0, 0.2),
            )
            .unwrap_err();
        match err {
            FieldError::ReducibleMinpoly { factor } => {
                assert_eq!(factor, "X - 1");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn ambiguous_selector_rejected() {
        let q = Tower::rationals(128);
        // Ball containing both roots of X^2 - 2.
        let err = q
            .extend_rational(
                &parse_polynomial("X^2-2").unwrap(),
                &ComplexBall::from_f64(0.0, 0.0, 3.0),
            )
            .unwrap_err();
        assert_eq!(err, FieldError::AmbiguousRootSelector);
    }

    #[test]
    fn seventh_root_of_unity_mul() {
        let q = Tower::rationals(128);
        let phi7 = parse_polynomial("X^6+X^5+X^4+X^3+X^2+X+1").unwrap();
        let zeta = ComplexBall::from_f64(0.6234898018587336, 0.7818314824680298, 0.2);
        let k = q.extend_rational(&phi7, &zeta).unwrap();
        assert_eq!(k.degree(), 6);
        let z = k.generator(1);
        // zeta * zeta^6 = zeta^7 = 1.
        assert_eq!(z.mul(&z.pow(6)), k.one_element());
    }

    #[test]
    fn second_level_arithmetic() {
        // Q(sqrt2)(sqrt3): (sqrt2*sqrt3)^2 = 6.
        let k1 = sqrt2_tower();
        let k2 = k1
            .extend(
                &FieldPoly::from_rational_poly(&k1, &parse_polynomial("X^2-3").unwrap()),
                &ComplexBall::from_f64(1.73, 0.0, 0.1),
            )
            .unwrap();
        assert_eq!(k2.degree(), 4);
        let s2 = k2.generator(1);
        let s3 = k2.generator(2);
        let prod = s2.mul(&s3);
        assert_eq!(
            prod.mul(&prod),
            k2.rational_element(crate::poly::rat_int(6))
        );
        let inv = prod.inverse().unwrap();
        assert_eq!(inv.mul(&prod), k2.one_element());
    }

    #[test]
    fn embedding_satisfies_minpoly() {
        let k = sqrt2_tower();
        let r = k.generator(1);
        let b = r.embedding().unwrap();
        let two = b.mul(&b, 128);
        let err = two.sub(&ComplexBall::from_f64(2.0, 0.0, 0.0), 128);
        assert!(err.contains_zero());
        assert!(b.re().to_f64() > 0.0);
    }

    #[test]
    fn field_poly_eval_and_divrem() {
        let k = sqrt2_tower();
        let f = FieldPoly::from_rational_poly(&k, &parse_polynomial("X^2-2").unwrap());
        let r = k.generator(1);
        assert!(f.eval(&r).is_zero());
        // Divide X^2 - 2 by (X - sqrt2): remainder zero.
        let lin = FieldPoly::new(&k, vec![r.neg(), k.one_element()]);
        let (q, rem) = f.div_rem(&lin).unwrap();
        assert!(rem.is_zero());
        assert_eq!(q.degree(), 1);
    }
}
