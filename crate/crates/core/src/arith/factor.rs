//! Complete factorization in `Q[x]`: squarefree decomposition, Berlekamp
//! modulo a small good prime, Hensel lifting, and exhaustive Zassenhaus
//! recombination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::modp::{Fp, PolyP};
use super::ratpoly::{squarefree_decomposition, RatPoly};
use super::Rational;
use crate::error::{Error, Result};

/// `content * prod factor_i^mult_i`, factors monic irreducible and sorted.
#[derive(Debug, Clone, PartialEq)]
pub struct RatFactorization {
    pub content: Rational,
    pub factors: Vec<(RatPoly, u32)>,
}

impl RatFactorization {
    pub fn expand(&self) -> RatPoly {
        let mut acc = RatPoly::constant(self.content.clone());
        for (f, e) in &self.factors {
            acc = &acc * &f.pow(*e);
        }
        acc
    }

    /// True when the input was a single irreducible factor to the first power.
    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }
}

pub fn rp_factor(p: &RatPoly) -> Result<RatFactorization> {
    if p.is_zero() {
        return Err(Error::DegenerateInput("cannot factor the zero polynomial".into()));
    }
    let content = p.lc();
    let mut factors = Vec::new();
    for (s, e) in squarefree_decomposition(p) {
        for f in factor_squarefree(&s) {
            factors.push((f, e));
        }
    }
    factors.sort_by(|a, b| a.0.canonical_cmp(&b.0).then(a.1.cmp(&b.1)));
    Ok(RatFactorization { content, factors })
}

/// Monic irreducible factors of a squarefree nonconstant polynomial.
pub fn factor_squarefree(p: &RatPoly) -> Vec<RatPoly> {
    if p.deg() <= 1 {
        return vec![p.monic()];
    }
    let f = p.primitive_integer();
    zassenhaus(&f)
        .into_iter()
        .map(|g| RatPoly::from_integers(&g).monic())
        .collect()
}

fn int_poly_trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn int_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    int_poly_trim(&mut out);
    out
}

fn symmetric_mod(a: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let half = m / 2u32;
    let mut v: Vec<BigInt> = a
        .iter()
        .map(|c| {
            let r = c.mod_floor(m);
            if r > half {
                r - m
            } else {
                r
            }
        })
        .collect();
    int_poly_trim(&mut v);
    v
}

/// Exact division of integer polynomials; `None` unless the quotient exists
/// with integer coefficients.
fn int_div_exact(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    if b.is_empty() || a.len() < b.len() {
        return if a.is_empty() { Some(Vec::new()) } else { None };
    }
    let lb = b.last().unwrap();
    let mut r = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len() - b.len() + 1];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let (c, rem) = r.last().unwrap().div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        for (j, bj) in b.iter().enumerate() {
            r[shift + j] -= &c * bj;
        }
        q[shift] = c;
        r.pop();
        int_poly_trim(&mut r);
    }
    if r.is_empty() {
        int_poly_trim(&mut q);
        Some(q)
    } else {
        None
    }
}

fn to_modp(f: &Fp, a: &[BigInt]) -> PolyP {
    f.poly_from_ints(a)
}

fn from_modp(a: &[u64]) -> Vec<BigInt> {
    a.iter().map(|&c| BigInt::from(c)).collect()
}

/// Smallest prime `p >= 3` with `p ∤ lc(f)` and `f mod p` squarefree.
fn good_prime(f: &[BigInt]) -> Fp {
    let lc = f.last().unwrap();
    let mut p = 3u64;
    loop {
        if super::integer::is_small_prime(p) && !(lc % BigInt::from(p)).is_zero() {
            let fp = Fp::new(p);
            let g = to_modp(&fp, f);
            if fp.is_squarefree(&g) {
                return fp;
            }
        }
        p += 2;
    }
}

/// Lift `f ≡ lc(f) * g * h (mod p)`, with `g`, `h` monic and coprime mod p,
/// to the same congruence modulo `p^k`. Returns `(g, h)` monic mod `p^k`.
fn hensel_two(
    fp: &Fp,
    f: &[BigInt],
    g: &[u64],
    h: &[u64],
    k: u32,
) -> (Vec<BigInt>, Vec<BigInt>) {
    let p = BigInt::from(fp.p);
    let lc = f.last().unwrap().clone();
    let lc_p = fp.reduce(&lc);
    let (one, _, t) = fp.poly_ext_gcd(g, h);
    debug_assert_eq!(one, vec![1]);
    let mut gk = from_modp(g);
    let mut hk = from_modp(h);
    let mut pj = p.clone();
    let lc_inv = fp.inv(lc_p);
    for _ in 1..k {
        let modulus = &pj * &p;
        // e = (f - lc * g * h) / p^j  (mod p)
        let prod = int_mul(&int_mul(&gk, &hk), &[lc.clone()]);
        let n = f.len().max(prod.len());
        let diff: Vec<BigInt> = (0..n)
            .map(|i| {
                f.get(i).cloned().unwrap_or_default() - prod.get(i).cloned().unwrap_or_default()
            })
            .collect();
        let e: Vec<BigInt> = diff.iter().map(|c| c / &pj).collect();
        let e_p = fp.poly_scale(&to_modp(fp, &e), lc_inv);
        // dg*h + g*dh = e with deg dg < deg g, deg dh < deg h
        let dg = fp.poly_rem(&fp.poly_mul(&e_p, &t), g);
        let dh = fp.poly_divmod(&fp.poly_sub(&e_p, &fp.poly_mul(&dg, h)), g).0;
        let dg_big = from_modp(&dg);
        let dh_big = from_modp(&dh);
        gk = add_scaled(&gk, &dg_big, &pj, &modulus);
        hk = add_scaled(&hk, &dh_big, &pj, &modulus);
        pj = modulus;
    }
    (gk, hk)
}

fn add_scaled(a: &[BigInt], d: &[BigInt], scale: &BigInt, m: &BigInt) -> Vec<BigInt> {
    let n = a.len().max(d.len());
    let mut out: Vec<BigInt> = (0..n)
        .map(|i| {
            (a.get(i).cloned().unwrap_or_default() + d.get(i).cloned().unwrap_or_default() * scale)
                .mod_floor(m)
        })
        .collect();
    int_poly_trim(&mut out);
    out
}

/// Multifactor lifting by recursive two-factor splits.
fn hensel_multi(fp: &Fp, f: &[BigInt], factors: &[PolyP], k: u32) -> Vec<Vec<BigInt>> {
    if factors.len() == 1 {
        // f ≡ lc * g: g = lc^{-1} f mod p^k
        let m = BigInt::from(fp.p).pow(k);
        let lc_inv = super::integer::mod_inverse(f.last().unwrap(), &m).unwrap();
        let g: Vec<BigInt> = f.iter().map(|c| (c * &lc_inv).mod_floor(&m)).collect();
        return vec![g];
    }
    let mid = factors.len() / 2;
    let g = factors[..mid]
        .iter()
        .fold(vec![1u64], |acc, x| fp.poly_mul(&acc, x));
    let h = factors[mid..]
        .iter()
        .fold(vec![1u64], |acc, x| fp.poly_mul(&acc, x));
    let (gk, hk) = hensel_two(fp, f, &g, &h, k);
    let mut out = hensel_multi(fp, &gk, &factors[..mid], k);
    // hk carries no leading coefficient: re-attach lc so that f ≡ gk * (lc*hk)
    let lc = f.last().unwrap().clone();
    let m = BigInt::from(fp.p).pow(k);
    let h_full: Vec<BigInt> = hk.iter().map(|c| (c * &lc).mod_floor(&m)).collect();
    out.extend(hensel_multi(fp, &h_full, &factors[mid..], k));
    out
}

fn norm2_ceil(f: &[BigInt]) -> BigInt {
    let s: BigInt = f.iter().map(|c| c * c).sum();
    s.sqrt() + 1u32
}

/// Irreducible factors (primitive, positive leading coefficient) of a
/// squarefree primitive integer polynomial of degree >= 2.
fn zassenhaus(f: &[BigInt]) -> Vec<Vec<BigInt>> {
    let n = f.len() - 1;
    let fp = good_prime(f);
    let lc = f.last().unwrap().clone();
    let f_mod = fp.poly_monic(&to_modp(&fp, f));
    let modular = fp.berlekamp(&f_mod);
    if modular.len() == 1 {
        return vec![f.to_vec()];
    }
    // coefficients of any factor of lc*f are bounded by |lc| * 2^n * ||f||_2
    let bound = lc.abs() * (BigInt::one() << n) * norm2_ceil(f);
    let p = BigInt::from(fp.p);
    let mut k = 1u32;
    let mut pk = p.clone();
    while pk <= &bound * 2u32 {
        pk *= &p;
        k += 1;
    }
    let lifted = hensel_multi(&fp, f, &modular, k);

    let mut remaining: Vec<usize> = (0..lifted.len()).collect();
    let mut g = f.to_vec();
    let mut found = Vec::new();
    let mut size = 1;
    while 2 * size <= remaining.len() {
        let mut hit = None;
        for subset in combinations(&remaining, size) {
            let lcg = g.last().unwrap().clone();
            let mut cand = vec![lcg.clone()];
            for &i in &subset {
                cand = symmetric_mod(&int_mul(&cand, &lifted[i]), &pk);
            }
            let cand = primitive(&cand);
            if let Some(q) = int_div_exact(&g, &cand) {
                hit = Some((subset, cand, q));
                break;
            }
        }
        match hit {
            Some((subset, cand, q)) => {
                remaining.retain(|i| !subset.contains(i));
                found.push(cand);
                g = q;
            }
            None => size += 1,
        }
    }
    found.push(primitive(&g));
    found
}

fn primitive(a: &[BigInt]) -> Vec<BigInt> {
    let g = a.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let mut out: Vec<BigInt> = a.iter().map(|c| c / &g).collect();
    if out.last().is_some_and(|c| c.is_negative()) {
        out = out.into_iter().map(|c| -c).collect();
    }
    out
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(items: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(items[i]);
            rec(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(items, k, 0, &mut cur, &mut out);
    out
}
