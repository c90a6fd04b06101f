//! Arithmetic and linear algebra over a prime field F_p (p < 2^32).

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Fp {
    pub p: u64,
}

impl Fp {
    pub fn new(p: u64) -> Self {
        assert!(p < (1 << 32) && is_prime(p));
        Fp { p }
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
        a * b % self.p
    }

    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn pow(&self, mut b: u64, mut e: u64) -> u64 {
        let mut r = 1;
        b %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        r
    }

    pub fn inv(&self, a: u64) -> u64 {
        assert!(!a.is_multiple_of(self.p), "inverse of zero");
        self.pow(a, self.p - 2)
    }

    /// Reduces a signed integer.
    pub fn from_i128(&self, a: i128) -> u64 {
        a.rem_euclid(self.p as i128) as u64
    }

    /// Symmetric lift to (−p/2, p/2].
    pub fn lift(&self, a: u64) -> i64 {
        if a > self.p / 2 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }

    /// A generator of F_p^×.
    pub fn primitive_root(&self) -> u64 {
        let m = self.p - 1;
        let factors = prime_factors(m);
        (2..self.p)
            .find(|&g| factors.iter().all(|&q| self.pow(g, m / q) != 1))
            .expect("prime field has a primitive root")
    }

    /// A primitive n-th root of unity; n must divide p − 1.
    pub fn root_of_unity(&self, n: u64) -> u64 {
        assert_eq!((self.p - 1) % n, 0, "{n} does not divide p-1");
        self.pow(self.primitive_root(), (self.p - 1) / n)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Smallest prime p > lower with p ≡ 1 (mod modulus).
pub fn smallest_prime_above(lower: u64, modulus: u64) -> Option<u64> {
    let mut p = lower + 1;
    p += (modulus - (p - 1) % modulus) % modulus;
    while p < (1 << 32) {
        if is_prime(p) {
            return Some(p);
        }
        p += modulus;
    }
    None
}

/// Dense matrix over F_p, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<u64>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }
}

/// Row-reduces in place to reduced echelon form; returns pivot columns.
pub fn rref(f: &Fp, m: &mut Mat) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..m.cols {
        if r == m.rows {
            break;
        }
        let Some(pr) = (r..m.rows).find(|&i| m.get(i, c) != 0) else {
            continue;
        };
        if pr != r {
            for j in 0..m.cols {
                m.data.swap(pr * m.cols + j, r * m.cols + j);
            }
        }
        let inv = f.inv(m.get(r, c));
        for j in 0..m.cols {
            let v = f.mul(m.get(r, j), inv);
            m.set(r, j, v);
        }
        for i in 0..m.rows {
            if i != r {
                let factor = m.get(i, c);
                if factor != 0 {
                    for j in 0..m.cols {
                        let v = f.sub(m.get(i, j), f.mul(factor, m.get(r, j)));
                        m.set(i, j, v);
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Basis of the right null space {x : m x = 0}, one vector per free column.
pub fn nullspace(f: &Fp, m: &Mat) -> Vec<Vec<u64>> {
    let mut a = m.clone();
    let pivots = rref(f, &mut a);
    let free: Vec<usize> = (0..a.cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![0u64; a.cols];
            v[fc] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(a.get(r, fc));
            }
            v
        })
        .collect()
}

/// Characteristic polynomial det(xI − m) via Hessenberg reduction,
/// coefficients from degree 0 upwards.
pub fn char_poly(f: &Fp, m: &Mat) -> Vec<u64> {
    let n = m.rows;
    let mut h = m.clone();
    // Reduce to upper Hessenberg form by similarity transforms.
    for c in 0..n.saturating_sub(2) {
        let Some(pr) = (c + 1..n).find(|&i| h.get(i, c) != 0) else {
            continue;
        };
        if pr != c + 1 {
            for j in 0..n {
                h.data.swap(pr * n + j, (c + 1) * n + j);
            }
            for i in 0..n {
                h.data.swap(i * n + pr, i * n + c + 1);
            }
        }
        let inv = f.inv(h.get(c + 1, c));
        for i in c + 2..n {
            let u = f.mul(h.get(i, c), inv);
            if u == 0 {
                continue;
            }
            for j in 0..n {
                let v = f.sub(h.get(i, j), f.mul(u, h.get(c + 1, j)));
                h.set(i, j, v);
            }
            for k in 0..n {
                let v = f.add(h.get(k, c + 1), f.mul(u, h.get(k, i)));
                h.set(k, c + 1, v);
            }
        }
    }
    // Recurrence on leading principal submatrices.
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for k in 0..n {
        // p_{k+1} = (x − h_kk) p_k − Σ_{i<k} h_ik (∏_{j=i+1}^{k} h_{j,j−1}) p_i
        let mut next = vec![0u64; k + 2];
        for (d, &c) in polys[k].iter().enumerate() {
            next[d + 1] = f.add(next[d + 1], c);
            next[d] = f.sub(next[d], f.mul(h.get(k, k), c));
        }
        let mut prod = 1u64;
        for i in (0..k).rev() {
            prod = f.mul(prod, h.get(i + 1, i));
            let coef = f.mul(h.get(i, k), prod);
            if coef != 0 {
                for (d, &c) in polys[i].iter().enumerate() {
                    next[d] = f.sub(next[d], f.mul(coef, c));
                }
            }
        }
        polys.push(next);
    }
    polys.pop().unwrap()
}

/// All roots in F_p of a polynomial (coefficients low to high), by exhaustive evaluation.
pub fn roots(f: &Fp, poly: &[u64]) -> Vec<u64> {
    (0..f.p)
        .filter(|&x| {
            let mut acc = 0u64;
            for &c in poly.iter().rev() {
                acc = f.add(f.mul(acc, x), c);
            }
            acc == 0
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_and_roots() {
        assert_eq!(smallest_prime_above(12, 6), Some(13));
        assert_eq!(smallest_prime_above(1152, 12), Some(1153));
        let f = Fp::new(61);
        let z = f.root_of_unity(12);
        assert_eq!(f.pow(z, 12), 1);
        assert!((1..12).all(|k| f.pow(z, k) != 1));
        assert_eq!(f.lift(60), -1);
    }

    #[test]
    fn char_poly_and_nullspace() {
        let f = Fp::new(101);
        // [[2,1,0],[0,2,0],[0,0,5]] has char poly (x-2)^2 (x-5).
        let m = Mat { rows: 3, cols: 3, data: vec![2, 1, 0, 0, 2, 0, 0, 0, 5] };
        let cp = char_poly(&f, &m);
        let expected = [f.neg(20), 24, f.neg(9), 1];
        assert_eq!(cp, expected);
        assert_eq!(roots(&f, &cp), vec![2, 5]);
        let mut a = m.clone();
        for i in 0..3 {
            a.set(i, i, f.sub(a.get(i, i), 2));
        }
        assert_eq!(nullspace(&f, &a), vec![vec![1, 0, 0]]);
        // Dense example against a direct determinant.
        let m = Mat { rows: 3, cols: 3, data: vec![1, 2, 3, 4, 5, 6, 7, 8, 10] };
        let cp = char_poly(&f, &m);
        // det(xI - M) = x^3 - 16x^2 - 12x + 3 for this matrix.
        assert_eq!(cp, vec![3, f.neg(12), f.neg(16), 1]);
    }
}
