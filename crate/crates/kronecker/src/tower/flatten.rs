//! Flattening towers onto a single primitive element.
//!
//! Elements of a height-h tower live in the product basis of all generator
//! powers, a rational vector space of dimension equal to the tower degree.
//! The minimal polynomial of any element falls out of the kernel of its
//! powers in that space; a primitive element gamma = g_h + c * gamma' is
//! found by searching the smallest multiplier c whose powers span the whole
//! space. The change of basis between the product basis and the powers of
//! gamma is kept in both directions and cached per tower.

use num_traits::{One, Zero};
use std::sync::Arc;

use crate::error::FieldError;
use crate::poly::{Polynomial, Rational};

use super::{c_add, c_scale, gen_coord_at_level, lift_once, lift_rat, Coord, Element, Tower};

/// Budget for the primitive-element multiplier search.
pub const PRIMITIVE_SEARCH_BUDGET: u32 = 50;

/// Cached flattening data for a tower.
#[derive(Debug)]
pub struct Flattening {
    /// Monic irreducible minimal polynomial of gamma over the rationals.
    pub minpoly: Polynomial,
    /// gamma as a tower element (coordinates at the tower height).
    pub gamma: Coord,
    /// Multiplier used: gamma = g_h + multiplier * gamma_parent.
    pub multiplier: u32,
    /// Product-basis coords -> gamma-power coords.
    to_power: Vec<Vec<Rational>>,
    /// gamma-power coords -> product-basis coords.
    from_power: Vec<Vec<Rational>>,
}

/// Flattens nested coordinates into the rational product basis.
pub(crate) fn flatten_coord(t: &Tower, level: usize, c: &Coord) -> Vec<Rational> {
    match c {
        Coord::Rat(q) => vec![q.clone()],
        Coord::Ext(v) => {
            let mut out = Vec::with_capacity(t.prefix(level).degree());
            for part in v {
                out.extend(flatten_coord(t, level - 1, part));
            }
            out
        }
    }
}

/// Inverse of `flatten_coord`.
pub(crate) fn unflatten_coord(t: &Tower, level: usize, v: &[Rational]) -> Coord {
    if level == 0 {
        debug_assert_eq!(v.len(), 1);
        return Coord::Rat(v[0].clone());
    }
    let block = t.prefix(level - 1).degree();
    let deg = t.level_degree(level);
    debug_assert_eq!(v.len(), block * deg);
    Coord::Ext(
        (0..deg)
            .map(|j| unflatten_coord(t, level - 1, &v[j * block..(j + 1) * block]))
            .collect(),
    )
}

/// Incremental row reduction with dependency extraction: feeds vectors one
/// by one; a dependent vector comes back as its combination over the
/// previously added ones.
pub(crate) struct RowReducer {
    dim: usize,
    rows: Vec<(Vec<Rational>, Vec<Rational>)>,
    pivots: Vec<usize>,
    count: usize,
}

impl RowReducer {
    pub fn new(dim: usize) -> RowReducer {
        RowReducer {
            dim,
            rows: Vec::new(),
            pivots: Vec::new(),
            count: 0,
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Adds a vector. `None` if independent (vector retained); otherwise
    /// the coefficients expressing it over the previously added vectors.
    pub fn try_add(&mut self, v: Vec<Rational>) -> Option<Vec<Rational>> {
        debug_assert_eq!(v.len(), self.dim);
        let m = self.count;
        let mut r = v;
        let mut d = vec![Rational::zero(); m];
        for ((row, combo), &p) in self.rows.iter().zip(self.pivots.iter()) {
            if r[p].is_zero() {
                continue;
            }
            let alpha = r[p].clone();
            for (ri, rowi) in r.iter_mut().zip(row.iter()) {
                *ri = &*ri - &(&alpha * rowi);
            }
            for (di, ci) in d.iter_mut().zip(combo.iter()) {
                *di = &*di - &(&alpha * ci);
            }
        }
        match r.iter().position(|x| !x.is_zero()) {
            None => Some(d.into_iter().map(|x| -x).collect()),
            Some(p) => {
                let inv = r[p].clone().recip();
                let row: Vec<Rational> = r.iter().map(|x| x * &inv).collect();
                // combo for the normalized row: (e_m - d)/r[p] over originals 0..=m.
                let mut combo: Vec<Rational> = d.iter().map(|x| -(x * &inv)).collect();
                combo.push(inv);
                self.rows.push((row, combo));
                self.pivots.push(p);
                self.count += 1;
                None
            }
        }
    }
}

/// Monic minimal polynomial over the rationals of a tower element, via the
/// kernel of its powers on the flattened basis. The result is irreducible
/// by minimality.
pub fn minimal_polynomial(x: &Element) -> Polynomial {
    let t = &x.tower;
    let n = t.degree();
    let h = t.height();
    let mut reducer = RowReducer::new(n);
    let mut power = lift_rat(t, h, Rational::one());
    for j in 0..=n {
        let v = flatten_coord(t, h, &power);
        if let Some(combo) = reducer.try_add(v) {
            let mut coeffs: Vec<Rational> = combo.into_iter().map(|c| -c).collect();
            coeffs.resize(j, Rational::zero());
            coeffs.push(Rational::one());
            return Polynomial::new(coeffs);
        }
        power = super::c_mul(t, h, &power, &x.coords);
    }
    unreachable!("an element of a degree-n field has degree at most n");
}

/// Cached primitive-element flattening for the tower.
pub(crate) fn flattening(t: &Tower) -> Result<Arc<Flattening>, FieldError> {
    t.0.flatten.get_or_init(|| compute_flattening(t)).clone()
}

fn compute_flattening(t: &Tower) -> Result<Arc<Flattening>, FieldError> {
    let n = t.degree();
    let h = t.height();
    if h == 0 {
        return Ok(Arc::new(Flattening {
            minpoly: Polynomial::x(),
            gamma: Coord::Rat(Rational::zero()),
            multiplier: 0,
            to_power: vec![vec![Rational::one()]],
            from_power: vec![vec![Rational::one()]],
        }));
    }
    if h == 1 {
        let minpoly = t
            .level_minpoly(1)
            .to_rational_poly()
            .expect("level-1 minpoly has rational coefficients");
        let ident: Vec<Vec<Rational>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                    .collect()
            })
            .collect();
        return Ok(Arc::new(Flattening {
            minpoly,
            gamma: gen_coord_at_level(t, 1),
            multiplier: 0,
            to_power: ident.clone(),
            from_power: ident,
        }));
    }

    let parent = t.0.parent.as_ref().unwrap();
    let par = flattening(parent)?;
    let gamma_parent = lift_once(t, h, par.gamma.clone());
    let g_top = gen_coord_at_level(t, h);

    for c in 1..=PRIMITIVE_SEARCH_BUDGET {
        let gamma = c_add(
            t,
            h,
            &g_top,
            &c_scale(&gamma_parent, &crate::poly::rat_int(c as i64)),
        );
        if let Some(flat) = try_candidate(t, n, &gamma, c) {
            return Ok(Arc::new(flat));
        }
    }
    Err(FieldError::PrimitiveSearchExhausted {
        budget: PRIMITIVE_SEARCH_BUDGET,
    })
}

fn try_candidate(t: &Tower, n: usize, gamma: &Coord, multiplier: u32) -> Option<Flattening> {
    let h = t.height();
    let mut reducer = RowReducer::new(n);
    let mut columns: Vec<Vec<Rational>> = Vec::with_capacity(n + 1);
    let mut power = lift_rat(t, h, Rational::one());
    for j in 0..=n {
        let v = flatten_coord(t, h, &power);
        columns.push(v.clone());
        if let Some(combo) = reducer.try_add(v) {
            if j < n {
                return None; // gamma has degree j < n: not primitive
            }
            let mut coeffs: Vec<Rational> = combo.into_iter().map(|c| -c).collect();
            coeffs.resize(n, Rational::zero());
            coeffs.push(Rational::one());
            let minpoly = Polynomial::new(coeffs);
            // from_power: column j is the product-basis vector of gamma^j.
            let from_power = transpose(&columns[..n]);
            let to_power = invert(&from_power)?;
            return Some(Flattening {
                minpoly,
                gamma: gamma.clone(),
                multiplier,
                to_power,
                from_power,
            });
        }
        power = super::c_mul(t, h, &power, gamma);
    }
    unreachable!("power sequence must become dependent by degree n");
}

fn transpose(cols: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = cols.len();
    (0..n)
        .map(|i| (0..n).map(|j| cols[j][i].clone()).collect())
        .collect()
}

/// Exact Gauss-Jordan inverse; `None` for singular input.
fn invert(m: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m.to_vec();
    let mut inv: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let d = a[col][col].clone().recip();
        for x in a[col].iter_mut() {
            *x = &*x * &d;
        }
        for x in inv[col].iter_mut() {
            *x = &*x * &d;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            for cix in 0..n {
                let s = &factor * &a[col][cix];
                a[r][cix] = &a[r][cix] - s;
                let s = &factor * &inv[col][cix];
                inv[r][cix] = &inv[r][cix] - s;
            }
        }
    }
    Some(inv)
}

fn matvec(m: &[Vec<Rational>], v: &[Rational]) -> Vec<Rational> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(v.iter())
                .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
        })
        .collect()
}

impl Flattening {
    /// Tower element -> polynomial in gamma of degree < n.
    pub(crate) fn to_simple(&self, t: &Tower, c: &Coord) -> Polynomial {
        let v = flatten_coord(t, t.height(), c);
        Polynomial::new(matvec(&self.to_power, &v))
    }

    /// Polynomial in gamma -> tower element.
    pub(crate) fn from_simple(&self, t: &Tower, p: &Polynomial) -> Coord {
        let n = t.degree();
        let mut coeffs: Vec<Rational> = p.coeffs().to_vec();
        assert!(coeffs.len() <= n, "value not reduced modulo the minpoly");
        coeffs.resize(n, Rational::zero());
        let v = matvec(&self.from_power, &coeffs);
        unflatten_coord(t, t.height(), &v)
    }
}

/// Primitive element of a tower with exact conversion maps both ways.
pub struct PrimitiveElement {
    tower: Tower,
    flat: Arc<Flattening>,
}

impl PrimitiveElement {
    pub fn gamma(&self) -> Element {
        Element {
            tower: self.tower.clone(),
            coords: self.flat.gamma.clone(),
        }
    }

    pub fn minpoly(&self) -> &Polynomial {
        &self.flat.minpoly
    }

    pub fn multiplier(&self) -> u32 {
        self.flat.multiplier
    }

    /// Expresses a tower element as a polynomial in gamma (degree < n).
    pub fn express(&self, x: &Element) -> Polynomial {
        assert!(x.tower.same_field(&self.tower));
        self.flat.to_simple(&self.tower, &x.coords)
    }

    /// Maps a polynomial in gamma back to a tower element.
    pub fn lift(&self, p: &Polynomial) -> Element {
        let reduced = if p.degree().unwrap_or(0) >= self.tower.degree() {
            p.div_rem(&self.flat.minpoly).expect("minpoly nonzero").1
        } else {
            p.clone()
        };
        Element {
            tower: self.tower.clone(),
            coords: self.flat.from_simple(&self.tower, &reduced),
        }
    }
}

/// Computes (and caches) the primitive element of the tower.
pub fn primitive_element(t: &Tower) -> Result<PrimitiveElement, FieldError> {
    let flat = flattening(t)?;
    Ok(PrimitiveElement {
        tower: t.clone(),
        flat,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ball::ComplexBall;
    use crate::parse::parse_polynomial;

    fn sqrt2_sqrt3() -> Tower {
        let q = Tower::rationals(128);
        let k1 = q
            .extend_rational(
                &parse_polynomial("X^2-2").unwrap(),
                &ComplexBall::from_f64(1.4142, 0.0, 0.05),
            )
            .unwrap();
        k1.extend(
            &super::super::FieldPoly::from_rational_poly(&k1, &parse_polynomial("X^2-3").unwrap()),
            &ComplexBall::from_f64(1.7320, 0.0, 0.05),
        )
        .unwrap()
    }

    #[test]
    fn minpoly_of_constant() {
        let k = sqrt2_sqrt3();
        let five = k.rational_element(crate::poly::rat_int(5));
        assert_eq!(minimal_polynomial(&five), parse_polynomial("X-5").unwrap());
    }

    #[test]
    fn minpoly_of_sum_of_roots() {
        let k = sqrt2_sqrt3();
        let x = k.generator(1).add(&k.generator(2));
        assert_eq!(
            minimal_polynomial(&x),
            parse_polynomial("X^4-10X^2+1").unwrap()
        );
    }

    #[test]
    fn minpoly_of_generator() {
        let k = sqrt2_sqrt3();
        assert_eq!(
            minimal_polynomial(&k.generator(2)),
            parse_polynomial("X^2-3").unwrap()
        );
    }

    #[test]
    fn primitive_element_of_biquadratic() {
        let k = sqrt2_sqrt3();
        let pe = primitive_element(&k).unwrap();
        // gamma = sqrt3 + 1*sqrt2 works on the first try.
        assert_eq!(pe.multiplier(), 1);
        assert_eq!(pe.minpoly(), &parse_polynomial("X^4-10X^2+1").unwrap());
        // Round-trip each generator through the simple form.
        for gk in [k.generator(1), k.generator(2)] {
            let p = pe.express(&gk);
            let back = pe.lift(&p);
            assert_eq!(back, gk);
        }
        // gamma itself maps to X.
        assert_eq!(pe.express(&pe.gamma()), parse_polynomial("X").unwrap());
    }

    #[test]
    fn row_reducer_extracts_dependency() {
        let one = crate::poly::rat_int(1);
        let two = crate::poly::rat_int(2);
        let mut r = RowReducer::new(2);
        assert!(r.try_add(vec![one.clone(), crate::poly::rat_int(0)]).is_none());
        assert!(r.try_add(vec![crate::poly::rat_int(0), one.clone()]).is_none());
        let combo = r.try_add(vec![two.clone(), two.clone()]).unwrap();
        assert_eq!(combo, vec![two.clone(), two]);
    }
}
