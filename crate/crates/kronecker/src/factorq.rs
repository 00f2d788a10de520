//! Irreducibility testing and complete factorization over the rationals.
//!
//! The baseline path factors the squarefree parts modulo a prime not
//! dividing lc * disc (distinct-degree plus equal-degree splitting), Hensel
//! lifts to a Landau-Mignotte coefficient bound, and recombines subsets of
//! the lifted factors. Irreducibility mod p is used as an early exit, and
//! the Schoenemann-Eisenstein criterion provides a cheap certificate when
//! it applies.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;

use crate::gfp::{self, Gf};
use crate::hensel;
use crate::poly::{Integer, Polynomial, Rational};
use crate::zpoly::{self, ZPoly};

/// A complete factorization: `unit * prod factor_i ^ mult_i` equals the
/// input exactly; factors are monic, irreducible, pairwise distinct, and
/// listed in canonical order (degree, then coefficients).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub unit: Rational,
    pub factors: Vec<(Polynomial, u32)>,
}

impl Factorization {
    /// Multiplies the factorization back out.
    pub fn expand(&self) -> Polynomial {
        let mut acc = Polynomial::constant(self.unit.clone());
        for (f, m) in &self.factors {
            acc = &acc * &f.pow(*m);
        }
        acc
    }

    /// True when the factorization is a single monic irreducible of
    /// multiplicity one.
    pub fn is_single(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }

    /// All factors of degree 1, as roots.
    pub fn linear_roots(&self) -> Vec<(Rational, u32)> {
        self.factors
            .iter()
            .filter(|(f, _)| f.degree() == Some(1))
            .map(|(f, m)| (-f.coeff(0), *m))
            .collect()
    }
}

/// Witness for the Schoenemann-Eisenstein criterion applied to `f(X + shift)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EisensteinWitness {
    pub prime: Integer,
    pub shift: Integer,
}

/// How irreducibility (or its failure) was decided.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IrreducibilityCertificate {
    Eisenstein(EisensteinWitness),
    DegreeOne,
    FullFactorization,
}

impl IrreducibilityCertificate {
    pub fn tag(&self) -> &'static str {
        match self {
            IrreducibilityCertificate::Eisenstein(_) => "eisenstein",
            IrreducibilityCertificate::DegreeOne => "degree<=1",
            IrreducibilityCertificate::FullFactorization => "full-factorization",
        }
    }
}

/// Result of the irreducibility decision, carrying the cheapest certificate
/// that settled it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrreducibilityTest {
    pub irreducible: bool,
    pub certificate: IrreducibilityCertificate,
}

/// Default shift budget for the Eisenstein search.
pub const EISENSTEIN_SHIFT_BOUND: i64 = 10;

const FIRST_FACTOR_PRIME: u64 = 1009;
const CANDIDATE_PRIMES: usize = 3;

fn next_prime_after(n: u64) -> u64 {
    let mut c = n + 1 + (n % 2);
    if c <= 2 {
        return 2;
    }
    loop {
        if gfp::is_prime_u64(c) {
            return c;
        }
        c += 2;
    }
}

/// Complete factorization over the rationals. The zero polynomial maps to
/// unit 0 with no factors; constants map to themselves as units.
pub fn factor_over_q(f: &Polynomial) -> Factorization {
    if f.is_zero() {
        return Factorization {
            unit: Rational::zero(),
            factors: Vec::new(),
        };
    }
    if f.is_constant() {
        return Factorization {
            unit: f.coeff(0),
            factors: Vec::new(),
        };
    }
    let unit = f.leading_coeff();
    let monic = f.monic();

    let mut factors: Vec<(Polynomial, u32)> = Vec::new();

    // Strip powers of X first.
    let mut rest = monic;
    let mut x_mult = 0u32;
    while !rest.is_zero() && rest.coeff(0).is_zero() {
        rest = rest.exact_div(&Polynomial::x()).expect("X divides");
        x_mult += 1;
    }
    if x_mult > 0 {
        factors.push((Polynomial::x(), x_mult));
    }

    for (part, mult) in yun_squarefree_decomposition(&rest) {
        for g in factor_squarefree(&part) {
            factors.push((g, mult));
        }
    }

    factors.sort_by(|a, b| a.0.canonical_cmp(&b.0));
    let result = Factorization { unit, factors };
    debug_assert_eq!(result.expand(), *f);
    result
}

/// Yun's squarefree decomposition of a monic polynomial with the powers of
/// X already stripped: returns `(a_i, i)` with `f = prod a_i^i`, each `a_i`
/// monic squarefree, omitting trivial parts.
fn yun_squarefree_decomposition(f: &Polynomial) -> Vec<(Polynomial, u32)> {
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let df = f.derivative();
    let g = f.gcd(&df).expect("nonzero");
    let mut c = f.exact_div(&g).expect("gcd divides").monic();
    let mut d = &df.exact_div(&g).expect("gcd divides f'") - &c.derivative();
    let mut i = 1u32;
    while c.degree().unwrap_or(0) > 0 {
        let a = c.gcd(&d).expect("nonzero");
        if a.degree().unwrap_or(0) > 0 {
            out.push((a.clone(), i));
        }
        c = c.exact_div(&a).expect("a divides c").monic();
        d = &d.exact_div(&a).expect("a divides d") - &c.derivative();
        i += 1;
    }
    out
}

/// Factors a monic squarefree polynomial of degree >= 1 into monic
/// irreducibles over the rationals via Zassenhaus.
fn factor_squarefree(f: &Polynomial) -> Vec<Polynomial> {
    let deg = f.degree().expect("nonzero");
    if deg == 0 {
        return Vec::new();
    }
    if deg == 1 {
        return vec![f.monic()];
    }
    let (prim, _, _) = zpoly::clear_denominators(f);
    factor_squarefree_primitive(&prim)
        .into_iter()
        .map(|g| zpoly::to_rational(&g).monic())
        .collect()
}

/// Zassenhaus on a primitive squarefree integer polynomial; returns
/// primitive integer factors with positive leading coefficients.
fn factor_squarefree_primitive(f: &ZPoly) -> Vec<ZPoly> {
    let deg = zpoly::degree(f).expect("nonzero");
    if deg == 1 {
        return vec![f.clone()];
    }
    let lc = zpoly::lc(f);

    // Choose a few good primes; keep the one with the fewest modular
    // factors. A single modular factor proves irreducibility outright.
    let mut best: Option<(u64, Vec<gfp::GpPoly>)> = None;
    let mut p = FIRST_FACTOR_PRIME - 2;
    let mut found = 0;
    while found < CANDIDATE_PRIMES {
        p = next_prime_after(p);
        let gf = Gf::new(p);
        if (&lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = gfp::from_zpoly(f, gf);
        if !gfp::is_squarefree(gf, &fp) {
            continue;
        }
        found += 1;
        let factors = gfp::factor_squarefree(gf, &gfp::monic(gf, &fp));
        if factors.len() == 1 {
            return vec![f.clone()];
        }
        if best.as_ref().map_or(true, |(_, b)| factors.len() < b.len()) {
            best = Some((p, factors));
        }
    }
    let (p, modular) = best.expect("a usable prime always exists");

    // Landau-Mignotte bound on factor coefficients, with leading
    // coefficient headroom; lift to the first power of p past 2B.
    let bound: BigInt = zpoly::l2_norm_ceil(f) * (BigInt::one() << deg) * lc.abs();
    let target: BigInt = bound * 2 + 1;
    let mut modulus = BigInt::from(p);
    while modulus < target {
        modulus = modulus * BigInt::from(p);
    }

    // Lift the factorization of the monic image of f.
    let lc_inv = modinv(&lc, &modulus);
    let monic_target: ZPoly = zpoly::trim(
        f.iter()
            .map(|c| (c * &lc_inv).mod_floor(&modulus))
            .collect(),
    );
    let mut lifted = hensel::lift_factors(&monic_target, &modular, p, &modulus);
    lifted.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));

    recombine(f, lifted, &modulus)
}

/// Modular inverse of `a` modulo `m` (gcd(a, m) = 1).
fn modinv(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.extended_gcd(m);
    debug_assert!(e.gcd.is_one());
    e.x.mod_floor(m)
}

fn centered(f: &[BigInt], modulus: &BigInt) -> ZPoly {
    let half = modulus / 2;
    zpoly::trim(
        f.iter()
            .map(|c| {
                let r = c.mod_floor(modulus);
                if r > half {
                    r - modulus
                } else {
                    r
                }
            })
            .collect(),
    )
}

/// Subset recombination of lifted modular factors into true factors.
fn recombine(f: &ZPoly, mut avail: Vec<ZPoly>, modulus: &BigInt) -> Vec<ZPoly> {
    let mut remaining = f.clone();
    let mut out: Vec<ZPoly> = Vec::new();
    let mut size = 1usize;
    'sizes: while 2 * size <= avail.len() {
        let mut combo = Combinations::new(avail.len(), size);
        while let Some(subset) = combo.next() {
            if let Some(g) = try_subset(&remaining, &avail, subset, modulus) {
                let q = exact_zpoly_div(&remaining, &g).expect("verified divisor");
                remaining = q;
                // Remove used modular factors (descending index order).
                for &i in subset.iter().rev() {
                    avail.remove(i);
                }
                out.push(g);
                continue 'sizes;
            }
        }
        size += 1;
    }
    if zpoly::degree(&remaining).unwrap_or(0) >= 1 {
        out.push(zpoly::primitive_part(&remaining));
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// Builds the candidate factor for a subset and tests divisibility.
fn try_subset(
    remaining: &ZPoly,
    avail: &[ZPoly],
    subset: &[usize],
    modulus: &BigInt,
) -> Option<ZPoly> {
    let deg: usize = subset.iter().map(|&i| avail[i].len() - 1).sum();
    if deg >= zpoly::degree(remaining)? + 1 {
        return None;
    }
    let lc = zpoly::lc(remaining);
    // Quick screen: the product of constant terms (times lc, centered) must
    // divide lc * remaining(0).
    let c0 = &remaining[0];
    if !c0.is_zero() {
        let mut prod = lc.clone();
        for &i in subset {
            prod = (prod * &avail[i][0]).mod_floor(modulus);
        }
        let half = modulus / 2;
        if prod > half {
            prod -= modulus;
        }
        if prod.is_zero() {
            return None;
        }
        if !(c0 * &lc).mod_floor(&prod.abs()).is_zero() {
            return None;
        }
    }
    let mut acc: ZPoly = vec![lc];
    for &i in subset {
        acc = zpoly::trim(
            zpoly::mul(&acc, &avail[i])
                .into_iter()
                .map(|c| c.mod_floor(modulus))
                .collect(),
        );
    }
    let candidate = zpoly::primitive_part(&centered(&acc, modulus));
    exact_zpoly_div(remaining, &candidate).map(|_| candidate)
}

/// Exact division of integer polynomials; `None` if not a divisor.
fn exact_zpoly_div(a: &ZPoly, b: &ZPoly) -> Option<ZPoly> {
    let db = zpoly::degree(b)?;
    let da = zpoly::degree(a)?;
    if db > da {
        return None;
    }
    let lb = zpoly::lc(b);
    let mut rem = a.clone();
    let mut quo = vec![BigInt::zero(); da - db + 1];
    for k in (db..=da).rev() {
        let (c, r) = rem[k].div_rem(&lb);
        if !r.is_zero() {
            return None;
        }
        if !c.is_zero() {
            for i in 0..=db {
                rem[k - db + i] -= &c * &b[i];
            }
        }
        quo[k - db] = c;
    }
    if zpoly::trim(rem).is_empty() {
        Some(zpoly::trim(quo))
    } else {
        None
    }
}

/// Lexicographic subset enumerator over `0..n`.
struct Combinations {
    n: usize,
    idx: Vec<usize>,
    started: bool,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Combinations {
        Combinations {
            n,
            idx: (0..k).collect(),
            started: false,
        }
    }

    fn next(&mut self) -> Option<&[usize]> {
        let k = self.idx.len();
        if k > self.n {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.idx);
        }
        let mut i = k;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if self.idx[i] + (k - i) < self.n {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                return Some(&self.idx);
            }
        }
    }
}

/// Decides irreducibility over the rationals, preferring cheap certificates.
pub fn is_irreducible_over_q(f: &Polynomial) -> IrreducibilityTest {
    let deg = f.degree().unwrap_or(0);
    if deg == 0 {
        return IrreducibilityTest {
            irreducible: false,
            certificate: IrreducibilityCertificate::FullFactorization,
        };
    }
    if deg == 1 {
        return IrreducibilityTest {
            irreducible: true,
            certificate: IrreducibilityCertificate::DegreeOne,
        };
    }
    // Only the unshifted criterion counts as "cheap" here; a shift search
    // is a separate choice exposed through eisenstein_witness.
    if let Some(w) = eisenstein_witness(f, 0) {
        return IrreducibilityTest {
            irreducible: true,
            certificate: IrreducibilityCertificate::Eisenstein(w),
        };
    }
    let fact = factor_over_q(f);
    IrreducibilityTest {
        irreducible: fact.is_single(),
        certificate: IrreducibilityCertificate::FullFactorization,
    }
}

/// Searches for an Eisenstein witness among shifts `|s| <= bound`, trying
/// primes dividing the gcd of the shifted non-leading coefficients.
/// Absence of a witness proves nothing.
pub fn eisenstein_witness(f: &Polynomial, bound: i64) -> Option<EisensteinWitness> {
    if f.degree().unwrap_or(0) < 1 {
        return None;
    }
    let (prim, _, _) = zpoly::clear_denominators(f);
    let mut shifts = vec![0i64];
    for s in 1..=bound {
        shifts.push(s);
        shifts.push(-s);
    }
    for s in shifts {
        let shifted = shift_zpoly(&prim, s);
        if let Some(p) = eisenstein_prime(&shifted) {
            return Some(EisensteinWitness {
                prime: p,
                shift: BigInt::from(s),
            });
        }
    }
    None
}

fn shift_zpoly(f: &ZPoly, s: i64) -> ZPoly {
    if s == 0 {
        return f.clone();
    }
    let shift = BigInt::from(s);
    let mut work = f.clone();
    let n = work.len();
    let mut out = vec![BigInt::zero(); n];
    for slot in out.iter_mut().take(n) {
        for i in (0..work.len() - 1).rev() {
            let add = &work[i + 1] * &shift;
            work[i] += add;
        }
        *slot = work.remove(0);
        if work.is_empty() {
            break;
        }
    }
    zpoly::trim(out)
}

fn eisenstein_prime(f: &ZPoly) -> Option<BigInt> {
    let n = zpoly::degree(f)?;
    if n < 1 {
        return None;
    }
    let constant = &f[0];
    if constant.is_zero() {
        // p^2 divides 0 for every p; the criterion cannot hold.
        return None;
    }
    let mut g = BigInt::zero();
    for c in &f[..n] {
        g = g.gcd(c);
        if g.is_one() {
            return None;
        }
    }
    let lc = zpoly::lc(f);
    for p in factor_integer(&g.abs()).keys() {
        if (&lc % p).is_zero() {
            continue;
        }
        if (constant % (p * p)).is_zero() {
            continue;
        }
        return Some(p.clone());
    }
    None
}

/// All rational roots of a nonzero polynomial, with multiplicity, from the
/// p/q candidates over the constant and leading coefficients of the
/// primitive integer form.
pub fn rational_roots(f: &Polynomial) -> Vec<(Rational, u32)> {
    if f.is_zero() || f.is_constant() {
        return Vec::new();
    }
    let (mut prim, _, _) = zpoly::clear_denominators(f);
    let mut out: Vec<(Rational, u32)> = Vec::new();

    // Root at zero.
    let mut zero_mult = 0u32;
    while prim.first().is_some_and(Zero::is_zero) {
        prim.remove(0);
        zero_mult += 1;
    }
    if zero_mult > 0 {
        out.push((Rational::zero(), zero_mult));
    }
    if zpoly::degree(&prim).unwrap_or(0) == 0 {
        return out;
    }

    let num_divs = divisors(&prim[0].abs());
    let den_divs = divisors(&zpoly::lc(&prim).abs());
    let mut candidates: Vec<Rational> = Vec::new();
    for p in &num_divs {
        for q in &den_divs {
            let r = BigRational::new(p.clone(), q.clone());
            if !candidates.contains(&r) {
                candidates.push(r.clone());
                candidates.push(-r);
            }
        }
    }
    let mut current = zpoly::to_rational(&prim);
    for r in candidates {
        if !current.eval(&r).is_zero() {
            continue;
        }
        let lin = Polynomial::new(vec![-r.clone(), Rational::one()]);
        let mut mult = 0u32;
        while current.eval(&r).is_zero() {
            current = current.exact_div(&lin).expect("root divides");
            mult += 1;
        }
        out.push((r, mult));
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

/// All positive divisors of `n > 0`.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut out = vec![BigInt::one()];
    for (p, e) in factor_integer(n) {
        let base = out.clone();
        let mut power = BigInt::one();
        for _ in 0..e {
            power = &power * &p;
            for d in &base {
                out.push(d * &power);
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Prime factorization by trial division plus Pollard rho with
/// deterministic parameters.
pub fn factor_integer(n: &BigInt) -> BTreeMap<BigInt, u32> {
    let mut out = BTreeMap::new();
    let mut n = n.abs();
    if n <= BigInt::one() {
        return out;
    }
    for small in 2u64..=4096 {
        let p = BigInt::from(small);
        if &p * &p > n {
            break;
        }
        while (&n % &p).is_zero() {
            *out.entry(p.clone()).or_insert(0) += 1;
            n = n / &p;
        }
    }
    if n > BigInt::one() {
        let mut stack = vec![n];
        while let Some(m) = stack.pop() {
            if is_probable_prime(&m) {
                *out.entry(m).or_insert(0) += 1;
                continue;
            }
            let d = pollard_rho(&m);
            stack.push(m / &d);
            stack.push(d);
        }
    }
    out
}

/// Miller-Rabin with the first twelve prime bases; deterministic for all
/// inputs below 3.3 * 10^24 and overwhelmingly reliable beyond.
pub fn is_probable_prime(n: &BigInt) -> bool {
    if let Some(small) = n.to_u64_digits().1.first().copied().filter(|_| n.bits() <= 63) {
        return gfp::is_prime_u64(small);
    }
    let one = BigInt::one();
    let two = BigInt::from(2);
    if (n % &two).is_zero() {
        return false;
    }
    let n1 = n - &one;
    let mut d = n1.clone();
    let mut s = 0u32;
    while (&d % &two).is_zero() {
        d /= &two;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let a = BigInt::from(a);
        if &a >= n {
            continue;
        }
        let mut x = a.modpow(&d, n);
        if x == one || x == n1 {
            continue;
        }
        for _ in 0..s.saturating_sub(1) {
            x = x.modpow(&two, n);
            if x == n1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_rho(n: &BigInt) -> BigInt {
    // n is odd, composite, and has no factor <= 4096.
    let one = BigInt::one();
    for c in 1u64..64 {
        let c = BigInt::from(c);
        let mut x = BigInt::from(2);
        let mut y = BigInt::from(2);
        let mut d = BigInt::one();
        let step = |v: &BigInt| (v * v + &c) % n;
        while d == one {
            x = step(&x);
            y = step(&step(&y));
            let diff = (&x - &y).abs();
            if diff.is_zero() {
                break;
            }
            d = diff.gcd(n);
        }
        if d != one && &d != n {
            return d;
        }
    }
    // Astronomically unlikely for the sizes this crate handles.
    panic!("pollard rho failed to split a composite");
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
    fn factors_biquadratic() {
        let f = p("X^4+4");
        let fact = factor_over_q(&f);
        assert_eq!(fact.factors.len(), 2);
        assert_eq!(fact.factors[0].0, p("X^2-2X+2"));
        assert_eq!(fact.factors[1].0, p("X^2+2X+2"));
        assert_eq!(fact.expand(), f);
    }

    #[test]
    fn cubic_is_irreducible() {
        let fact = factor_over_q(&p("X^3+X^2-2X-1"));
        assert!(fact.is_single());
        let t = is_irreducible_over_q(&p("X^3+X^2-2X-1"));
        assert!(t.irreducible);
        assert_eq!(t.certificate.tag(), "full-factorization");
    }

    #[test]
    fn factors_with_multiplicity() {
        let f = p("(X-1)*(X-1)*(X^2+1)");
        let fact = factor_over_q(&f);
        assert_eq!(
            fact.factors,
            vec![(p("X-1"), 2), (p("X^2+1"), 1)]
        );
    }

    #[test]
    fn eisenstein_on_quintic() {
        let w = eisenstein_witness(&p("X^5-4X-2"), 10).unwrap();
        assert_eq!(w.prime, BigInt::from(2));
        assert_eq!(w.shift, BigInt::from(0));
        let t = is_irreducible_over_q(&p("X^5-4X-2"));
        assert!(t.irreducible);
        assert_eq!(t.certificate.tag(), "eisenstein");
    }

    #[test]
    fn eisenstein_on_binomial() {
        let w = eisenstein_witness(&p("X^7-11"), 10).unwrap();
        assert_eq!(w.prime, BigInt::from(11));
        assert_eq!(w.shift, BigInt::from(0));
    }

    #[test]
    fn eisenstein_needs_shift_for_cyclotomic() {
        let w = eisenstein_witness(&p("X^2+X+1"), 10).unwrap();
        assert_eq!(w.prime, BigInt::from(3));
        assert_eq!(w.shift, BigInt::from(1));
    }

    #[test]
    fn quartic_multiple_of_cyclotomic_splits() {
        // X^5 + X + 1 = (X^2 + X + 1)(X^3 - X^2 + 1).
        let fact = factor_over_q(&p("X^5+X+1"));
        assert_eq!(fact.factors.len(), 2);
        assert_eq!(fact.factors[0].0, p("X^2+X+1"));
        assert_eq!(fact.factors[1].0, p("X^3-X^2+1"));
    }

    #[test]
    fn rational_roots_examples() {
        assert!(rational_roots(&p("X^7-11")).is_empty());
        let roots = rational_roots(&p("X^2-X-2"));
        assert_eq!(roots, vec![(rat_int(-1), 1), (rat_int(2), 1)]);
        assert_eq!(rational_roots(&p("2X-3")), vec![(rat(3, 2), 1)]);
    }

    #[test]
    fn rational_roots_with_multiplicity_and_zero() {
        let f = p("X^2 (X-1) (X-1) (3X+2)");
        let roots = rational_roots(&f);
        assert_eq!(
            roots,
            vec![(rat(-2, 3), 1), (rat_int(0), 2), (rat_int(1), 2)]
        );
    }

    #[test]
    fn scaling_leaves_factors_fixed() {
        let f = p("X^4+4");
        let a = factor_over_q(&f);
        let b = factor_over_q(&f.scale(&rat(-7, 3)));
        assert_eq!(a.factors, b.factors);
        assert_eq!(b.unit, rat(-7, 3));
    }

    #[test]
    fn unit_times_factors_reconstructs() {
        let f = p("6X^4 - 6");
        let fact = factor_over_q(&f);
        assert_eq!(fact.expand(), f);
        assert_eq!(fact.unit, rat_int(6));
    }

    #[test]
    fn integer_factorizer() {
        let f = factor_integer(&BigInt::from(2u64 * 2 * 3 * 97 * 10007));
        assert_eq!(f.get(&BigInt::from(2)), Some(&2));
        assert_eq!(f.get(&BigInt::from(3)), Some(&1));
        assert_eq!(f.get(&BigInt::from(97)), Some(&1));
        assert_eq!(f.get(&BigInt::from(10007)), Some(&1));
        // A larger semiprime forces the rho path.
        let a = BigInt::from(1_000_003u64);
        let b = BigInt::from(999_983u64);
        let f = factor_integer(&(&a * &b));
        assert_eq!(f.get(&b), Some(&1));
        assert_eq!(f.get(&a), Some(&1));
    }

    #[test]
    fn combinations_enumerate_lexicographically() {
        let mut c = Combinations::new(4, 2);
        let mut all = Vec::new();
        while let Some(s) = c.next() {
            all.push(s.to_vec());
        }
        assert_eq!(
            all,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
    }
}
