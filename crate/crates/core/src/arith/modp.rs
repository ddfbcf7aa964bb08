//! Arithmetic over a prime field `F_p` with a word-sized prime: dense
//! polynomials, Berlekamp factorization, root finding and the linear algebra
//! needed by the maximal-order code.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fp {
    pub p: u64,
}

pub type PolyP = Vec<u64>;
pub type MatP = Vec<Vec<u64>>;

impl Fp {
    pub fn new(p: u64) -> Self {
        assert!(p >= 2 && p < (1 << 62));
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
        ((a as u128 * b as u128) % self.p as u128) as u64
    }
    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }
    pub fn pow(&self, mut a: u64, mut e: u128) -> u64 {
        let mut r = 1 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }
    pub fn inv(&self, a: u64) -> u64 {
        assert!(a != 0, "inverse of zero mod {}", self.p);
        self.pow(a, (self.p - 2) as u128)
    }
    pub fn reduce(&self, n: &BigInt) -> u64 {
        n.mod_floor(&BigInt::from(self.p)).to_u64().unwrap()
    }
    pub fn reduce_i64(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }

    // ---- polynomials ----

    pub fn trim(&self, a: &mut PolyP) {
        while a.last() == Some(&0) {
            a.pop();
        }
    }

    pub fn poly_from_ints(&self, coeffs: &[BigInt]) -> PolyP {
        let mut v: PolyP = coeffs.iter().map(|c| self.reduce(c)).collect();
        self.trim(&mut v);
        v
    }

    pub fn poly_add(&self, a: &[u64], b: &[u64]) -> PolyP {
        let n = a.len().max(b.len());
        let mut out: PolyP = (0..n)
            .map(|i| self.add(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
            .collect();
        self.trim(&mut out);
        out
    }

    pub fn poly_sub(&self, a: &[u64], b: &[u64]) -> PolyP {
        let n = a.len().max(b.len());
        let mut out: PolyP = (0..n)
            .map(|i| self.sub(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
            .collect();
        self.trim(&mut out);
        out
    }

    pub fn poly_mul(&self, a: &[u64], b: &[u64]) -> PolyP {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = self.add(out[i + j], self.mul(x, y));
            }
        }
        self.trim(&mut out);
        out
    }

    pub fn poly_scale(&self, a: &[u64], c: u64) -> PolyP {
        let mut out: PolyP = a.iter().map(|&x| self.mul(x, c)).collect();
        self.trim(&mut out);
        out
    }

    pub fn poly_divmod(&self, a: &[u64], b: &[u64]) -> (PolyP, PolyP) {
        assert!(!b.is_empty(), "division by zero polynomial mod p");
        if a.len() < b.len() {
            return (Vec::new(), a.to_vec());
        }
        let inv = self.inv(*b.last().unwrap());
        let mut r = a.to_vec();
        let mut q = vec![0u64; a.len() - b.len() + 1];
        while r.len() >= b.len() {
            let shift = r.len() - b.len();
            let c = self.mul(*r.last().unwrap(), inv);
            for (j, &bj) in b.iter().enumerate() {
                r[shift + j] = self.sub(r[shift + j], self.mul(c, bj));
            }
            q[shift] = c;
            r.pop();
            self.trim(&mut r);
        }
        self.trim(&mut q);
        (q, r)
    }

    pub fn poly_rem(&self, a: &[u64], b: &[u64]) -> PolyP {
        self.poly_divmod(a, b).1
    }

    pub fn poly_monic(&self, a: &[u64]) -> PolyP {
        match a.last() {
            None => Vec::new(),
            Some(&lc) => self.poly_scale(a, self.inv(lc)),
        }
    }

    pub fn poly_gcd(&self, a: &[u64], b: &[u64]) -> PolyP {
        let (mut x, mut y) = (a.to_vec(), b.to_vec());
        while !y.is_empty() {
            let r = self.poly_rem(&x, &y);
            x = y;
            y = r;
        }
        self.poly_monic(&x)
    }

    /// `(g, s, t)` with `s*a + t*b = g`, `g` monic.
    pub fn poly_ext_gcd(&self, a: &[u64], b: &[u64]) -> (PolyP, PolyP, PolyP) {
        let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
        let (mut s0, mut s1) = (vec![1u64], Vec::new());
        let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
        while !r1.is_empty() {
            let (q, r) = self.poly_divmod(&r0, &r1);
            let s2 = self.poly_sub(&s0, &self.poly_mul(&q, &s1));
            let t2 = self.poly_sub(&t0, &self.poly_mul(&q, &t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        let inv = self.inv(*r0.last().unwrap());
        (
            self.poly_scale(&r0, inv),
            self.poly_scale(&s0, inv),
            self.poly_scale(&t0, inv),
        )
    }

    pub fn poly_derivative(&self, a: &[u64]) -> PolyP {
        let mut out: PolyP = a
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| self.mul(c, (i as u64) % self.p))
            .collect();
        self.trim(&mut out);
        out
    }

    pub fn poly_powmod(&self, base: &[u64], mut e: u128, m: &[u64]) -> PolyP {
        let mut result = self.poly_rem(&[1], m);
        let mut b = self.poly_rem(base, m);
        while e > 0 {
            if e & 1 == 1 {
                result = self.poly_rem(&self.poly_mul(&result, &b), m);
            }
            b = self.poly_rem(&self.poly_mul(&b, &b), m);
            e >>= 1;
        }
        result
    }

    pub fn poly_eval(&self, a: &[u64], x: u64) -> u64 {
        a.iter().rev().fold(0, |acc, &c| self.add(self.mul(acc, x), c))
    }

    pub fn is_squarefree(&self, f: &[u64]) -> bool {
        let d = self.poly_derivative(f);
        !d.is_empty() && self.poly_gcd(f, &d).len() == 1
    }

    /// Berlekamp factorization of a monic squarefree polynomial into monic
    /// irreducibles. Splitting tries every constant, so `p` should be small.
    pub fn berlekamp(&self, f: &[u64]) -> Vec<PolyP> {
        let n = f.len() - 1;
        if n <= 1 {
            return vec![f.to_vec()];
        }
        // rows: x^{i p} mod f
        let xp = self.poly_powmod(&[0, 1], self.p as u128, f);
        let mut q_rows: MatP = Vec::with_capacity(n);
        let mut cur = vec![1u64];
        for _ in 0..n {
            let mut row = cur.clone();
            row.resize(n, 0);
            q_rows.push(row);
            cur = self.poly_rem(&self.poly_mul(&cur, &xp), f);
        }
        // kernel of (Q - I)^T: vectors v with v (Q - I) = 0
        let mut m = vec![vec![0u64; n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut v = q_rows[j][i];
                if i == j {
                    v = self.sub(v, 1);
                }
                m[i][j] = v;
            }
        }
        let basis = self.kernel(&m);
        let r = basis.len();
        let mut factors = vec![f.to_vec()];
        if r == 1 {
            return factors;
        }
        for v in basis.iter() {
            let mut v = v.clone();
            self.trim(&mut v);
            if v.len() <= 1 {
                continue;
            }
            let mut next = Vec::new();
            for u in factors.into_iter() {
                if u.len() <= 2 {
                    next.push(u);
                    continue;
                }
                let mut u = u;
                for s in 0..self.p {
                    if u.len() <= 2 {
                        break;
                    }
                    let mut vs = v.clone();
                    vs[0] = self.sub(vs[0], s);
                    self.trim(&mut vs);
                    let g = self.poly_gcd(&u, &vs);
                    if g.len() > 1 && g.len() < u.len() {
                        u = self.poly_divmod(&u, &g).0;
                        next.push(g);
                    }
                }
                next.push(u);
            }
            factors = next;
            if factors.len() == r {
                break;
            }
        }
        debug_assert_eq!(factors.len(), r);
        factors
    }

    /// Distinct roots of `f` in `F_p`, ascending.
    pub fn roots(&self, f: &[u64]) -> Vec<u64> {
        if f.len() <= 1 {
            return Vec::new();
        }
        let f = self.poly_monic(f);
        let xp = self.poly_powmod(&[0, 1], self.p as u128, &f);
        let g = self.poly_gcd(&f, &self.poly_sub(&xp, &[0, 1]));
        let mut out = Vec::new();
        self.split_linear(&g, 1, &mut out);
        out.sort_unstable();
        out
    }

    // Equal-degree splitting of a product of distinct linear factors, using a
    // fixed deterministic sequence of shifts.
    fn split_linear(&self, g: &[u64], mut shift: u64, out: &mut Vec<u64>) {
        match g.len() {
            0 | 1 => return,
            2 => {
                out.push(self.neg(self.mul(g[0], self.inv(g[1]))));
                return;
            }
            _ => {}
        }
        if self.p == 2 {
            for x in 0..2 {
                if self.poly_eval(g, x) == 0 {
                    out.push(x);
                }
            }
            return;
        }
        loop {
            let h = self.poly_powmod(&[shift % self.p, 1], ((self.p - 1) / 2) as u128, g);
            let d = self.poly_gcd(g, &self.poly_sub(&h, &[1]));
            shift += 1;
            if d.len() > 1 && d.len() < g.len() {
                let rest = self.poly_divmod(g, &d).0;
                self.split_linear(&d, shift, out);
                self.split_linear(&rest, shift, out);
                return;
            }
        }
    }

    // ---- linear algebra; vectors are columns, matrices row-major ----

    /// Basis of the right kernel `{v : M v = 0}`.
    pub fn kernel(&self, m: &MatP) -> MatP {
        let rows = m.len();
        if rows == 0 {
            return Vec::new();
        }
        let cols = m[0].len();
        let mut a = m.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            let Some(pr) = (r..rows).find(|&i| a[i][c] != 0) else {
                continue;
            };
            a.swap(r, pr);
            let inv = self.inv(a[r][c]);
            for x in a[r].iter_mut() {
                *x = self.mul(*x, inv);
            }
            for i in 0..rows {
                if i != r && a[i][c] != 0 {
                    let f = a[i][c];
                    for j in 0..cols {
                        let t = self.mul(f, a[r][j]);
                        a[i][j] = self.sub(a[i][j], t);
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == rows {
                break;
            }
        }
        let mut basis = Vec::new();
        for free in (0..cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![0u64; cols];
            v[free] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = self.neg(a[i][free]);
            }
            basis.push(v);
        }
        basis
    }

    pub fn rank(&self, m: &MatP) -> usize {
        if m.is_empty() {
            return 0;
        }
        m[0].len() - self.kernel(m).len()
    }

    pub fn mat_mul(&self, a: &MatP, b: &MatP) -> MatP {
        let n = a.len();
        let k = b.len();
        let m = if k == 0 { 0 } else { b[0].len() };
        let mut out = vec![vec![0u64; m]; n];
        for i in 0..n {
            for l in 0..k {
                let x = a[i][l];
                if x == 0 {
                    continue;
                }
                for j in 0..m {
                    out[i][j] = self.add(out[i][j], self.mul(x, b[l][j]));
                }
            }
        }
        out
    }

    pub fn mat_vec(&self, a: &MatP, v: &[u64]) -> Vec<u64> {
        a.iter()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .fold(0, |acc, (&x, &y)| self.add(acc, self.mul(x, y)))
            })
            .collect()
    }

    pub fn identity(&self, n: usize) -> MatP {
        (0..n)
            .map(|i| (0..n).map(|j| u64::from(i == j)).collect())
            .collect()
    }

    /// Characteristic polynomial `det(x I - M)` via Hessenberg reduction.
    pub fn charpoly(&self, m: &MatP) -> PolyP {
        let n = m.len();
        let mut h = m.clone();
        for col in 1..n.saturating_sub(1) {
            let Some(i) = (col..n).find(|&i| h[i][col - 1] != 0) else {
                continue;
            };
            if i != col {
                h.swap(i, col);
                for row in h.iter_mut() {
                    row.swap(i, col);
                }
            }
            let t_inv = self.inv(h[col][col - 1]);
            for i in col + 1..n {
                let u = self.mul(h[i][col - 1], t_inv);
                if u == 0 {
                    continue;
                }
                for j in 0..n {
                    let s = self.mul(u, h[col][j]);
                    h[i][j] = self.sub(h[i][j], s);
                }
                for row in h.iter_mut() {
                    let s = self.mul(u, row[i]);
                    row[col] = self.add(row[col], s);
                }
            }
        }
        // recurrence on leading principal submatrices (1-indexed in the formulas)
        let mut polys: Vec<PolyP> = vec![vec![1]];
        for mm in 1..=n {
            let mut pm = self.poly_mul(&[self.neg(h[mm - 1][mm - 1]), 1], &polys[mm - 1]);
            let mut t = 1u64;
            for i in (1..mm).rev() {
                t = self.mul(t, h[i][i - 1]);
                let coef = self.mul(h[i - 1][mm - 1], t);
                if coef != 0 {
                    pm = self.poly_sub(&pm, &self.poly_scale(&polys[i - 1], coef));
                }
            }
            polys.push(pm);
        }
        polys.pop().unwrap()
    }
}
