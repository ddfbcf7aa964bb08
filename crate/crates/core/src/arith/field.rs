//! A minimal field abstraction and dense polynomial routines over it.
//!
//! Field elements may carry context (a number field element knows its
//! modulus), so constants are always produced from an existing element via
//! the `*_like` constructors. Polynomials are plain coefficient vectors,
//! lowest degree first, without trailing zeros.

use std::fmt;

use num_traits::{One, Zero};

use super::Rational;

pub trait Field: Clone + PartialEq + fmt::Debug {
    fn fis_zero(&self) -> bool;
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn from_rational_like(&self, q: &Rational) -> Self;
    fn fadd(&self, rhs: &Self) -> Self;
    fn fsub(&self, rhs: &Self) -> Self;
    fn fmul(&self, rhs: &Self) -> Self;
    fn fneg(&self) -> Self;
    /// Multiplicative inverse, `None` for zero.
    fn finv(&self) -> Option<Self>;

    fn fis_one(&self) -> bool {
        *self == self.one_like()
    }
}

impl Field for Rational {
    fn fis_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn from_rational_like(&self, q: &Rational) -> Self {
        q.clone()
    }
    fn fadd(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn fsub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn fmul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn fneg(&self) -> Self {
        -self
    }
    fn finv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn fis_one(&self) -> bool {
        One::is_one(self)
    }
}

pub fn trim<F: Field>(v: &mut Vec<F>) {
    while v.last().is_some_and(|c| c.fis_zero()) {
        v.pop();
    }
}

pub fn poly_add<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        out.push(match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => x.fadd(y),
            (Some(x), None) => x.clone(),
            (None, Some(y)) => y.clone(),
            (None, None) => unreachable!(),
        });
    }
    trim(&mut out);
    out
}

pub fn poly_sub<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        out.push(match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => x.fsub(y),
            (Some(x), None) => x.clone(),
            (None, Some(y)) => y.fneg(),
            (None, None) => unreachable!(),
        });
    }
    trim(&mut out);
    out
}

pub fn poly_mul<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let zero = a[0].zero_like();
    let mut out = vec![zero; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.fis_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].fadd(&x.fmul(y));
        }
    }
    trim(&mut out);
    out
}

pub fn poly_scale<F: Field>(a: &[F], c: &F) -> Vec<F> {
    let mut out: Vec<F> = a.iter().map(|x| x.fmul(c)).collect();
    trim(&mut out);
    out
}

/// Euclidean division `a = q*b + r`, `deg r < deg b`. Panics on empty `b`.
pub fn poly_divmod<F: Field>(a: &[F], b: &[F]) -> (Vec<F>, Vec<F>) {
    assert!(!b.is_empty(), "polynomial division by zero");
    if a.len() < b.len() {
        return (Vec::new(), a.to_vec());
    }
    let lead_inv = b.last().unwrap().finv().expect("nonzero leading coefficient");
    let mut r = a.to_vec();
    let zero = b[0].zero_like();
    let mut q = vec![zero; a.len() - b.len() + 1];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = r.last().unwrap().fmul(&lead_inv);
        for (j, bj) in b.iter().enumerate() {
            r[shift + j] = r[shift + j].fsub(&c.fmul(bj));
        }
        q[shift] = c;
        r.pop();
        trim(&mut r);
    }
    trim(&mut q);
    (q, r)
}

pub fn poly_rem<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    poly_divmod(a, b).1
}

pub fn poly_monic<F: Field>(a: &[F]) -> Vec<F> {
    match a.last() {
        None => Vec::new(),
        Some(lc) => poly_scale(a, &lc.finv().unwrap()),
    }
}

/// Monic gcd; empty when both inputs are zero.
pub fn poly_gcd<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    while !y.is_empty() {
        let r = poly_rem(&x, &y);
        x = y;
        y = r;
    }
    poly_monic(&x)
}

/// Extended Euclid: returns monic `g` with `s*a + t*b = g`.
pub fn poly_ext_gcd<F: Field>(a: &[F], b: &[F]) -> (Vec<F>, Vec<F>, Vec<F>) {
    let sample = a.first().or(b.first()).expect("not both zero").clone();
    let one = vec![sample.one_like()];
    let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
    let (mut s0, mut s1) = (one.clone(), Vec::new());
    let (mut t0, mut t1) = (Vec::new(), one);
    while !r1.is_empty() {
        let (q, r) = poly_divmod(&r0, &r1);
        let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
        let t2 = poly_sub(&t0, &poly_mul(&q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    let inv = r0.last().unwrap().finv().unwrap();
    (poly_scale(&r0, &inv), poly_scale(&s0, &inv), poly_scale(&t0, &inv))
}

pub fn poly_eval<F: Field>(a: &[F], x: &F) -> F {
    let mut acc = x.zero_like();
    for c in a.iter().rev() {
        acc = acc.fmul(x).fadd(c);
    }
    acc
}

pub fn poly_derivative<F: Field>(a: &[F]) -> Vec<F> {
    let mut out = Vec::with_capacity(a.len().saturating_sub(1));
    for (i, c) in a.iter().enumerate().skip(1) {
        out.push(c.fmul(&c.from_rational_like(&Rational::from_integer((i as i64).into()))));
    }
    trim(&mut out);
    out
}
