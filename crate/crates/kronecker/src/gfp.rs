//! Polynomial arithmetic over prime fields GF(p), p < 2^31.
//!
//! Used by the rational factorizer: distinct-degree and equal-degree
//! splitting of squarefree polynomials modulo a well-chosen prime, plus the
//! small helpers the Hensel lift needs (Bezout pairs mod p). Equal-degree
//! splitting is randomized internally but seeded deterministically, so the
//! overall factorization is reproducible.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{Signed, ToPrimitive};

use crate::zpoly::ZPoly;

/// Dense polynomial over GF(p): ascending coefficients in `[0, p)`, trimmed.
pub type GpPoly = Vec<u64>;

#[derive(Debug, Clone, Copy)]
pub struct Gf {
    pub p: u64,
}

impl Gf {
    pub fn new(p: u64) -> Gf {
        debug_assert!(p < (1 << 31), "prime exceeds the supported range");
        Gf { p }
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    #[inline]
    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(a % self.p != 0);
        self.pow(a, self.p - 2)
    }

    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }
}

pub fn trim(mut f: GpPoly) -> GpPoly {
    while f.last() == Some(&0) {
        f.pop();
    }
    f
}

pub fn degree(f: &[u64]) -> Option<usize> {
    f.len().checked_sub(1)
}

pub fn lc(f: &[u64]) -> u64 {
    f.last().copied().unwrap_or(0)
}

pub fn is_one(f: &[u64]) -> bool {
    f.len() == 1 && f[0] == 1
}

/// Reduces an integer polynomial mod p.
pub fn from_zpoly(f: &[BigInt], gf: Gf) -> GpPoly {
    let p = BigInt::from(gf.p);
    trim(
        f.iter()
            .map(|c| {
                let r = c.mod_floor(&p);
                r.to_u64().expect("residue fits u64")
            })
            .collect(),
    )
}

pub fn add(gf: Gf, a: &[u64], b: &[u64]) -> GpPoly {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        out.push(gf.add(
            a.get(i).copied().unwrap_or(0),
            b.get(i).copied().unwrap_or(0),
        ));
    }
    trim(out)
}

pub fn sub(gf: Gf, a: &[u64], b: &[u64]) -> GpPoly {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        out.push(gf.sub(
            a.get(i).copied().unwrap_or(0),
            b.get(i).copied().unwrap_or(0),
        ));
    }
    trim(out)
}

pub fn mul(gf: Gf, a: &[u64], b: &[u64]) -> GpPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = gf.add(out[i + j], gf.mul(x, y));
        }
    }
    trim(out)
}

pub fn scale(gf: Gf, f: &[u64], c: u64) -> GpPoly {
    if c == 0 {
        return Vec::new();
    }
    trim(f.iter().map(|&x| gf.mul(x, c)).collect())
}

pub fn monic(gf: Gf, f: &[u64]) -> GpPoly {
    if f.is_empty() {
        return Vec::new();
    }
    let inv = gf.inv(lc(f));
    scale(gf, f, inv)
}

pub fn div_rem(gf: Gf, a: &[u64], b: &[u64]) -> (GpPoly, GpPoly) {
    let db = degree(b).expect("division by zero polynomial");
    let da = match degree(a) {
        Some(d) if d >= db => d,
        _ => return (Vec::new(), a.to_vec()),
    };
    let lb_inv = gf.inv(lc(b));
    let mut rem: Vec<u64> = a.to_vec();
    let mut quo = vec![0u64; da - db + 1];
    for k in (db..=da).rev() {
        let c = gf.mul(rem[k], lb_inv);
        if c != 0 {
            quo[k - db] = c;
            for i in 0..=db {
                let t = gf.mul(c, b[i]);
                rem[k - db + i] = gf.sub(rem[k - db + i], t);
            }
        }
    }
    (trim(quo), trim(rem))
}

pub fn rem(gf: Gf, a: &[u64], b: &[u64]) -> GpPoly {
    div_rem(gf, a, b).1
}

pub fn gcd(gf: Gf, a: &[u64], b: &[u64]) -> GpPoly {
    let mut f = a.to_vec();
    let mut g = b.to_vec();
    while !g.is_empty() {
        let r = rem(gf, &f, &g);
        f = g;
        g = r;
    }
    if f.is_empty() {
        f
    } else {
        monic(gf, &f)
    }
}

/// Extended Euclid: returns `(d, s, t)` monic with `s*a + t*b = d`.
pub fn extended_gcd(gf: Gf, a: &[u64], b: &[u64]) -> (GpPoly, GpPoly, GpPoly) {
    let mut r0 = a.to_vec();
    let mut r1 = b.to_vec();
    let mut s0: GpPoly = vec![1];
    let mut s1: GpPoly = Vec::new();
    let mut t0: GpPoly = Vec::new();
    let mut t1: GpPoly = vec![1];
    while !r1.is_empty() {
        let (q, r) = div_rem(gf, &r0, &r1);
        let s = sub(gf, &s0, &mul(gf, &q, &s1));
        let t = sub(gf, &t0, &mul(gf, &q, &t1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
        t0 = t1;
        t1 = t;
    }
    if r0.is_empty() {
        return (r0, s0, t0);
    }
    let inv = gf.inv(lc(&r0));
    (scale(gf, &r0, inv), scale(gf, &s0, inv), scale(gf, &t0, inv))
}

pub fn derivative(gf: Gf, f: &[u64]) -> GpPoly {
    if f.len() <= 1 {
        return Vec::new();
    }
    trim(
        f.iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| gf.mul(c, (i as u64) % gf.p))
            .collect(),
    )
}

pub fn is_squarefree(gf: Gf, f: &[u64]) -> bool {
    if f.len() <= 1 {
        return true;
    }
    let d = derivative(gf, f);
    if d.is_empty() {
        return false;
    }
    gcd(gf, f, &d).len() == 1
}

/// `g^e mod f` with a big-integer exponent.
pub fn pow_mod_big(gf: Gf, g: &[u64], e: &BigInt, f: &[u64]) -> GpPoly {
    debug_assert!(!e.is_negative());
    let mut acc: GpPoly = vec![1];
    let mut base = rem(gf, g, f);
    let (_, bits) = e.to_radix_le(2);
    for (i, bit) in bits.iter().enumerate() {
        if *bit == 1 {
            acc = rem(gf, &mul(gf, &acc, &base), f);
        }
        if i + 1 < bits.len() {
            base = rem(gf, &mul(gf, &base, &base), f);
        }
    }
    acc
}

pub fn pow_mod(gf: Gf, g: &[u64], e: u64, f: &[u64]) -> GpPoly {
    pow_mod_big(gf, g, &BigInt::from(e), f)
}

/// Deterministic splitmix64 stream for equal-degree splitting.
struct SplitMix(u64);

impl SplitMix {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }
}

/// Distinct-degree factorization of a squarefree monic polynomial:
/// returns `(d, product of all irreducible factors of degree d)` pairs in
/// increasing `d`.
pub fn distinct_degree(gf: Gf, f: &[u64]) -> Vec<(usize, GpPoly)> {
    let mut out = Vec::new();
    let mut f = monic(gf, f);
    let x: GpPoly = vec![0, 1];
    let mut h = x.clone(); // X^(p^d) mod f, starting at d = 0
    let mut d = 0usize;
    while f.len() > 1 {
        d += 1;
        if 2 * d > degree(&f).unwrap() {
            // What remains is irreducible.
            out.push((degree(&f).unwrap(), f.clone()));
            break;
        }
        h = pow_mod(gf, &h, gf.p, &f);
        let g = gcd(gf, &sub(gf, &h, &x), &f);
        if g.len() > 1 {
            out.push((d, g.clone()));
            f = div_rem(gf, &f, &g).0;
            h = rem(gf, &h, &f);
        }
    }
    out
}

/// Cantor-Zassenhaus equal-degree splitting: factors a monic squarefree
/// product of irreducibles all of degree `d`. Requires odd `p`.
pub fn equal_degree(gf: Gf, f: &[u64], d: usize, rng: &mut impl FnMut() -> u64) -> Vec<GpPoly> {
    let n = degree(f).unwrap();
    if n == d {
        return vec![f.to_vec()];
    }
    let exponent = (BigInt::from(gf.p).pow(d as u32) - 1) / 2;
    loop {
        let h: GpPoly = trim((0..n).map(|_| rng() % gf.p).collect());
        if h.len() < 2 {
            continue;
        }
        let g = gcd(gf, &h, f);
        let split = if g.len() > 1 && g.len() <= n {
            g
        } else {
            let w = pow_mod_big(gf, &h, &exponent, f);
            let w1 = sub(gf, &w, &[1]);
            let g = gcd(gf, &w1, f);
            if g.len() > 1 && degree(&g).unwrap() < n {
                g
            } else {
                continue;
            }
        };
        let qf = div_rem(gf, f, &split).0;
        let mut left = equal_degree(gf, &split, d, rng);
        let right = equal_degree(gf, &qf, d, rng);
        left.extend(right);
        return left;
    }
}

/// Full factorization of a squarefree monic polynomial into monic
/// irreducibles, deterministic output order (degree, then coefficients).
pub fn factor_squarefree(gf: Gf, f: &[u64]) -> Vec<GpPoly> {
    let mut seed = SplitMix(0x5eed_0000 ^ gf.p ^ ((f.len() as u64) << 32));
    let mut rng = move || seed.next();
    let mut out = Vec::new();
    for (d, block) in distinct_degree(gf, f) {
        out.extend(equal_degree(gf, &block, d, &mut rng));
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// Converts a GF(p) polynomial to an integer polynomial in `[0, p)`.
pub fn to_zpoly(f: &[u64]) -> ZPoly {
    f.iter().map(|&c| BigInt::from(c)).collect()
}

/// Symmetric (centered) lift into `(-p/2, p/2]`, for recombination tests.
pub fn to_zpoly_centered(f: &[u64], p: u64) -> ZPoly {
    crate::zpoly::trim(
        f.iter()
            .map(|&c| {
                if c > p / 2 {
                    BigInt::from(c) - BigInt::from(p)
                } else {
                    BigInt::from(c)
                }
            })
            .collect(),
    )
}

/// Deterministic primality test for u64 (Miller-Rabin with fixed bases).
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut a: u64, mut e: u64| {
        let mut acc = 1u64;
        a %= n;
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(acc, a);
            }
            a = mulmod(a, a);
            e >>= 1;
        }
        acc
    };
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_field_ops() {
        let gf = Gf::new(101);
        assert_eq!(gf.mul(50, 50), 2500 % 101);
        assert_eq!(gf.mul(7, gf.inv(7)), 1);
    }

    #[test]
    fn division_round_trip() {
        let gf = Gf::new(101);
        let a: GpPoly = vec![3, 0, 5, 0, 0, 7, 1];
        let b: GpPoly = vec![2, 0, 1];
        let (q, r) = div_rem(gf, &a, &b);
        let back = add(gf, &mul(gf, &q, &b), &r);
        assert_eq!(back, a);
        assert!(degree(&r) < degree(&b));
    }

    #[test]
    fn factors_product_of_linears() {
        let gf = Gf::new(101);
        // (X-1)(X-2)(X-3) mod 101
        let f = mul(gf, &mul(gf, &[100, 1], &[99, 1]), &[98, 1]);
        let factors = factor_squarefree(gf, &f);
        assert_eq!(factors.len(), 3);
        let mut prod: GpPoly = vec![1];
        for g in &factors {
            prod = mul(gf, &prod, g);
        }
        assert_eq!(prod, monic(gf, &f));
    }

    #[test]
    fn detects_irreducible_quadratic() {
        let gf = Gf::new(7);
        // X^2 + 1 is irreducible mod 7 (since -1 is not a QR mod 7).
        let f: GpPoly = vec![1, 0, 1];
        let factors = factor_squarefree(gf, &f);
        assert_eq!(factors.len(), 1);
    }

    #[test]
    fn squarefree_detection() {
        let gf = Gf::new(13);
        let f = mul(gf, &[1, 1], &[1, 1]);
        assert!(!is_squarefree(gf, &f));
        assert!(is_squarefree(gf, &[12, 0, 1]));
    }

    #[test]
    fn primality_checks() {
        assert!(is_prime_u64(1009));
        assert!(is_prime_u64((1 << 31) - 1));
        assert!(!is_prime_u64(1007));
        assert!(!is_prime_u64(1));
    }

    #[test]
    fn frobenius_power() {
        let gf = Gf::new(5);
        // X^5 mod (X^2 - 2) = X * (X^2)^2 = X * 4 = 4X mod 5... compute and
        // verify via direct exponentiation identity instead.
        let f: GpPoly = vec![3, 0, 1]; // X^2 + 3 = X^2 - 2 mod 5
        let h = pow_mod(gf, &[0, 1], 5, &f);
        // Check h(alpha) = alpha^5 by computing alpha^5 through repeated mul.
        let mut acc: GpPoly = vec![0, 1];
        for _ in 0..4 {
            acc = rem(gf, &mul(gf, &acc, &[0, 1]), &f);
        }
        assert_eq!(h, acc);
    }
}
