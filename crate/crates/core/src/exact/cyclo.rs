//! Exact arithmetic in cyclotomic fields Q(ζ_n).
//!
//! An element is stored in the power basis 1, ζ, …, ζ^{φ(n)-1} of Q(ζ_n)
//! with integer numerators and one positive common denominator. Rational
//! elements are always normalised to conductor 1, so two equal rationals
//! compare and hash identically regardless of where they came from.

use num_integer::Integer;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

/// Euler's totient.
pub fn totient(n: u32) -> u32 {
    let mut m = n;
    let mut out = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            out -= out / p;
        }
        p += 1;
    }
    if m > 1 {
        out -= out / m;
    }
    out
}

fn lcm(a: u32, b: u32) -> u32 {
    a / a.gcd(&b) * b
}

fn poly_cache() -> &'static Mutex<HashMap<u32, Arc<Vec<i128>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<i128>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The n-th cyclotomic polynomial, coefficients from degree 0 upwards.
pub fn cyclotomic_poly(n: u32) -> Arc<Vec<i128>> {
    if let Some(p) = poly_cache().lock().unwrap().get(&n) {
        return p.clone();
    }
    // x^n - 1 divided by Φ_d for every proper divisor d.
    let mut num = vec![0i128; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            let div = cyclotomic_poly(d);
            num = exact_div(&num, &div);
        }
    }
    let p = Arc::new(num);
    poly_cache().lock().unwrap().insert(n, p.clone());
    p
}

/// Division of integer polynomials by a monic divisor, remainder must vanish.
fn exact_div(num: &[i128], den: &[i128]) -> Vec<i128> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let qn = num.len() - 1 - dn;
    let mut q = vec![0i128; qn + 1];
    for k in (0..=qn).rev() {
        let c = rem[k + dn];
        q[k] = c;
        if c != 0 {
            for (j, &d) in den.iter().enumerate() {
                rem[k + j] -= c * d;
            }
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    q
}

/// Reduces a polynomial in ζ_n (any length) modulo Φ_n.
fn reduce_mod_phi(mut p: Vec<i128>, n: u32) -> Vec<i128> {
    let phi = cyclotomic_poly(n);
    let deg = phi.len() - 1;
    for k in (deg..p.len()).rev() {
        let c = p[k];
        if c != 0 {
            for (j, &f) in phi.iter().enumerate() {
                p[k - deg + j] -= c * f;
            }
        }
    }
    p.truncate(deg);
    p.resize(deg, 0);
    p
}

/// An element of Q(ζ_n).
#[derive(Clone, Debug)]
pub struct Cyc {
    n: u32,
    num: Vec<i128>,
    den: i128,
}

impl Cyc {
    fn from_parts(n: u32, num: Vec<i128>, den: i128) -> Self {
        let mut c = Cyc { n, num, den };
        c.normalize();
        c
    }

    fn normalize(&mut self) {
        if self.den < 0 {
            self.den = -self.den;
            for x in &mut self.num {
                *x = -*x;
            }
        }
        let mut g = self.den;
        for &x in &self.num {
            g = g.gcd(&x);
            if g == 1 {
                break;
            }
        }
        if g > 1 {
            self.den /= g;
            for x in &mut self.num {
                *x /= g;
            }
        }
        if self.n != 1 && self.num[1..].iter().all(|&x| x == 0) {
            self.n = 1;
            self.num.truncate(1);
        }
        if self.num[0] == 0 && self.n == 1 {
            self.den = 1;
        }
    }

    pub fn zero() -> Self {
        Cyc { n: 1, num: vec![0], den: 1 }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(a: i128) -> Self {
        Cyc { n: 1, num: vec![a], den: 1 }
    }

    pub fn from_ratio(a: i128, b: i128) -> Self {
        assert!(b != 0, "zero denominator");
        Self::from_parts(1, vec![a], b)
    }

    /// ζ_n^k.
    pub fn zeta(n: u32, k: i64) -> Self {
        assert!(n > 0);
        let k = k.rem_euclid(n as i64) as usize;
        let mut p = vec![0i128; n as usize];
        p[k] = 1;
        Self::from_parts(n, reduce_mod_phi(p, n), 1)
    }

    /// Σ_k coeffs[k] ζ_n^k for arbitrary-length coefficient lists.
    pub fn from_zeta_coeffs(n: u32, coeffs: &[i128]) -> Self {
        let mut p = vec![0i128; n as usize];
        for (k, &c) in coeffs.iter().enumerate() {
            p[k % n as usize] += c;
        }
        Self::from_parts(n, reduce_mod_phi(p, n), 1)
    }

    /// 2cos(2πk/n) = ζ_n^k + ζ_n^{-k}.
    pub fn two_cos(n: u32, k: i64) -> Self {
        Self::zeta(n, k) + Self::zeta(n, -k)
    }

    /// √−1.
    pub fn i() -> Self {
        Self::zeta(4, 1)
    }

    /// √m for a positive integer m, via quadratic Gauss sums.
    pub fn sqrt_int(m: u64) -> Self {
        assert!(m > 0);
        let mut out = Cyc::one();
        let mut rest = m;
        let mut p = 2u64;
        while rest > 1 {
            if p * p > rest {
                p = rest;
            }
            let mut e = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                e += 1;
            }
            if e > 0 {
                out = out * Cyc::from_int(p.pow(e / 2) as i128);
                if e % 2 == 1 {
                    out = out * Self::sqrt_prime(p);
                }
            }
            p += 1;
        }
        out
    }

    fn sqrt_prime(p: u64) -> Self {
        if p == 2 {
            return Self::zeta(8, 1) + Self::zeta(8, -1);
        }
        // g = Σ (a|p) ζ_p^a, g² = (−1)^{(p−1)/2} p.
        let pp = p as u32;
        let mut coeffs = vec![0i128; pp as usize];
        for a in 1..p {
            coeffs[a as usize] = legendre(a, p) as i128;
        }
        let g = Self::from_zeta_coeffs(pp, &coeffs);
        if p % 4 == 1 {
            g
        } else {
            // g = i√p, so √p = −i·g.
            -(Self::i() * g)
        }
    }

    /// (conductor, power-basis numerators, common denominator).
    pub fn raw(&self) -> (u32, &[i128], i128) {
        (self.n, &self.num, self.den)
    }

    pub fn conductor(&self) -> u32 {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.n == 1 && self.num[0] == 0
    }

    pub fn is_one(&self) -> bool {
        self.n == 1 && self.num[0] == 1 && self.den == 1
    }

    /// Returns (numerator, denominator) if the element is rational.
    pub fn as_rational(&self) -> Option<(i128, i128)> {
        (self.n == 1).then(|| (self.num[0], self.den))
    }

    /// Returns the integer value if the element is a rational integer.
    pub fn as_integer(&self) -> Option<i128> {
        (self.n == 1 && self.den == 1).then(|| self.num[0])
    }

    /// Coefficients over the power basis of Q(ζ_m), m a multiple of the conductor.
    fn lifted(&self, m: u32) -> Vec<i128> {
        if self.n == m {
            return self.num.clone();
        }
        assert!(m.is_multiple_of(self.n), "cannot lift conductor {} to {}", self.n, m);
        let step = (m / self.n) as usize;
        let mut p = vec![0i128; m as usize];
        for (k, &c) in self.num.iter().enumerate() {
            p[k * step] += c;
        }
        reduce_mod_phi(p, m)
    }

    /// Complex conjugation ζ ↦ ζ^{-1}.
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    /// The Galois automorphism ζ_n ↦ ζ_n^a (a coprime to n).
    pub fn galois(&self, a: i64) -> Self {
        if self.n == 1 {
            return self.clone();
        }
        let n = self.n as i64;
        let mut p = vec![0i128; self.n as usize];
        for (k, &c) in self.num.iter().enumerate() {
            p[(k as i64 * a).rem_euclid(n) as usize] += c;
        }
        Self::from_parts(self.n, reduce_mod_phi(p, self.n), self.den)
    }

    pub fn scale(&self, a: i128, b: i128) -> Self {
        assert!(b != 0);
        Self::from_parts(self.n, self.num.iter().map(|&x| x * a).collect(), self.den * b)
    }

    /// Numerical value as (re, im).
    pub fn to_complex(&self) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        let t = 2.0 * std::f64::consts::PI / self.n as f64;
        for (k, &c) in self.num.iter().enumerate() {
            re += c as f64 * (t * k as f64).cos();
            im += c as f64 * (t * k as f64).sin();
        }
        (re / self.den as f64, im / self.den as f64)
    }

    pub fn re_f64(&self) -> f64 {
        self.to_complex().0
    }

    /// Lifts both operands to a common field.
    fn common(&self, other: &Self) -> (u32, Vec<i128>, Vec<i128>) {
        let m = lcm(self.n, other.n);
        (m, self.lifted(m), other.lifted(m))
    }

    fn add_impl(&self, other: &Self, sign: i128) -> Self {
        let (m, a, b) = self.common(other);
        let num = a.iter().zip(&b).map(|(&x, &y)| x * other.den + sign * y * self.den).collect();
        Self::from_parts(m, num, self.den * other.den)
    }

    fn mul_impl(&self, other: &Self) -> Self {
        if self.n == 1 {
            return other.scale(self.num[0], self.den);
        }
        if other.n == 1 {
            return self.scale(other.num[0], other.den);
        }
        let (m, a, b) = self.common(other);
        let mut p = vec![0i128; 2 * a.len()];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                p[i + j] += x * y;
            }
        }
        Self::from_parts(m, reduce_mod_phi(p, m), self.den * other.den)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Cyc::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Textual form: rationals as `a` or `a/b`, otherwise a sum of `c*E(n)^k`.
    pub fn to_text(&self) -> String {
        if let Some((a, b)) = self.as_rational() {
            return if b == 1 { a.to_string() } else { format!("{a}/{b}") };
        }
        let mut s = String::new();
        for (k, &c) in self.num.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let term = match k {
                0 => c.abs().to_string(),
                1 => format!("E({})", self.n),
                _ => format!("E({})^{}", self.n, k),
            };
            let coef = if k > 0 && c.abs() != 1 { format!("{}*", c.abs()) } else { String::new() };
            if s.is_empty() {
                if c < 0 {
                    s.push('-');
                }
            } else {
                s.push_str(if c < 0 { "-" } else { "+" });
            }
            s.push_str(&coef);
            s.push_str(&term);
        }
        if self.den != 1 {
            format!("({s})/{}", self.den)
        } else {
            s
        }
    }
}

fn legendre(a: u64, p: u64) -> i64 {
    let mut r = 1u64;
    let mut b = a % p;
    let mut e = (p - 1) / 2;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    if r == 1 {
        1
    } else if r == 0 {
        0
    } else {
        -1
    }
}

impl PartialEq for Cyc {
    fn eq(&self, other: &Self) -> bool {
        if self.n == other.n {
            return self.den == other.den && self.num == other.num;
        }
        if self.n == 1 || other.n == 1 {
            return false;
        }
        let (_, a, b) = self.common(other);
        a.iter().zip(&b).all(|(&x, &y)| x * other.den == y * self.den)
    }
}

impl Eq for Cyc {}

/// Hashing is only consistent among elements that share a conductor, which
/// is the case for every keyed use (roots of one system, rationals).
impl Hash for Cyc {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.num.hash(state);
        self.den.hash(state);
    }
}

impl fmt::Display for Cyc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl From<i64> for Cyc {
    fn from(a: i64) -> Self {
        Cyc::from_int(a as i128)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&Cyc> for &Cyc {
            type Output = Cyc;
            fn $m(self, o: &Cyc) -> Cyc {
                $body(self, o)
            }
        }
        impl $tr<Cyc> for Cyc {
            type Output = Cyc;
            fn $m(self, o: Cyc) -> Cyc {
                $body(&self, &o)
            }
        }
        impl $tr<&Cyc> for Cyc {
            type Output = Cyc;
            fn $m(self, o: &Cyc) -> Cyc {
                $body(&self, o)
            }
        }
        impl $tr<Cyc> for &Cyc {
            type Output = Cyc;
            fn $m(self, o: Cyc) -> Cyc {
                $body(self, &o)
            }
        }
    };
}

binop!(Add, add, |a: &Cyc, b: &Cyc| a.add_impl(b, 1));
binop!(Sub, sub, |a: &Cyc, b: &Cyc| a.add_impl(b, -1));
binop!(Mul, mul, |a: &Cyc, b: &Cyc| a.mul_impl(b));

impl Neg for Cyc {
    type Output = Cyc;
    fn neg(self) -> Cyc {
        self.scale(-1, 1)
    }
}

impl Neg for &Cyc {
    type Output = Cyc;
    fn neg(self) -> Cyc {
        self.scale(-1, 1)
    }
}

impl std::iter::Sum for Cyc {
    fn sum<I: Iterator<Item = Cyc>>(iter: I) -> Cyc {
        iter.fold(Cyc::zero(), |a, b| a + b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polys() {
        assert_eq!(*cyclotomic_poly(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_poly(4), vec![1, 0, 1]);
        assert_eq!(*cyclotomic_poly(6), vec![1, -1, 1]);
        assert_eq!(*cyclotomic_poly(12), vec![1, 0, -1, 0, 1]);
        for n in 1..60 {
            assert_eq!(cyclotomic_poly(n).len() as u32 - 1, totient(n));
        }
    }

    #[test]
    fn roots_of_unity() {
        for n in 1..40u32 {
            let z = Cyc::zeta(n, 1);
            assert!(z.pow(n).is_one(), "n={n}");
            let s: Cyc = (0..n).map(|k| Cyc::zeta(n, k as i64)).sum();
            assert_eq!(s, if n == 1 { Cyc::one() } else { Cyc::zero() });
        }
        assert_eq!(Cyc::zeta(2, 1), Cyc::from_int(-1));
        assert_eq!(Cyc::zeta(6, 2), Cyc::zeta(3, 1));
        assert_eq!(Cyc::zeta(12, 3), Cyc::i());
    }

    #[test]
    fn square_roots() {
        for m in [2u64, 3, 5, 6, 7, 8, 12, 13, 15, 20] {
            let r = Cyc::sqrt_int(m);
            assert_eq!(&r * &r, Cyc::from_int(m as i128), "m={m}");
            assert!((r.re_f64() - (m as f64).sqrt()).abs() < 1e-9);
        }
    }

    #[test]
    fn golden_ratio() {
        let tau = (Cyc::one() + Cyc::sqrt_int(5)).scale(1, 2);
        assert_eq!(&tau * &tau, &tau + &Cyc::one());
        assert_eq!(tau, -(Cyc::zeta(5, 2) + Cyc::zeta(5, 3)));
        assert_eq!(Cyc::two_cos(5, 1), &tau - &Cyc::one());
    }

    #[test]
    fn conjugation_and_rationals() {
        let z = Cyc::zeta(7, 3);
        assert!((&z * &z.conj()).is_one());
        let half = Cyc::from_ratio(3, 6);
        assert_eq!(half.as_rational(), Some((1, 2)));
        assert_eq!((half.clone() + half).as_integer(), Some(1));
        let t = Cyc::two_cos(9, 2);
        assert_eq!(t.conj(), t);
        assert!(t.as_rational().is_none());
        assert_eq!(Cyc::from_ratio(-4, 3).to_text(), "-4/3");
    }
}
