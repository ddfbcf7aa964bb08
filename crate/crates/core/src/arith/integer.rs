//! Integer number theory: primality, factorization, Legendre symbols and
//! modular square roots.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

const SMALL_PRIMES: [u64; 20] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
];

/// Miller-Rabin with the first twenty prime bases. Deterministic far beyond
/// 64 bits; probabilistic (but reproducible) above that.
pub fn is_probable_prime(n: &BigInt) -> bool {
    let n = n.abs();
    if n < BigInt::from(2) {
        return false;
    }
    for &p in &SMALL_PRIMES {
        let p = BigInt::from(p);
        if n == p {
            return true;
        }
        if (&n % &p).is_zero() {
            return false;
        }
    }
    let n1 = &n - 1u32;
    let s = n1.trailing_zeros().unwrap_or(0);
    let d = &n1 >> s;
    'witness: for &a in &SMALL_PRIMES {
        let mut x = BigInt::from(a).modpow(&d, &n);
        if x.is_one() || x == n1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % &n;
            if x == n1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_brent(n: &BigInt, c: u64) -> Option<BigInt> {
    let c = BigInt::from(c);
    let f = |x: &BigInt| (x * x + &c) % n;
    let mut y = BigInt::from(2);
    let mut r: u64 = 1;
    let m: u64 = 64;
    let mut q = BigInt::one();
    let mut g = BigInt::one();
    let mut x = y.clone();
    let mut ys = y.clone();
    while g.is_one() {
        x = y.clone();
        for _ in 0..r {
            y = f(&y);
        }
        let mut k = 0;
        while k < r && g.is_one() {
            ys = y.clone();
            for _ in 0..m.min(r - k) {
                y = f(&y);
                q = (&q * (&x - &y).abs()) % n;
            }
            g = q.gcd(n);
            k += m;
        }
        r *= 2;
        if r > 1 << 24 {
            return None;
        }
    }
    if &g == n {
        loop {
            ys = f(&ys);
            g = (&x - &ys).abs().gcd(n);
            if !g.is_one() {
                break;
            }
        }
    }
    if &g == n {
        None
    } else {
        Some(g)
    }
}

fn split_into(n: BigInt, out: &mut Vec<BigInt>) {
    if n.is_one() {
        return;
    }
    if is_probable_prime(&n) {
        out.push(n);
        return;
    }
    let r = n.sqrt();
    if &r * &r == n {
        split_into(r.clone(), out);
        split_into(r, out);
        return;
    }
    for c in 1..64u64 {
        if let Some(d) = pollard_brent(&n, c) {
            let other = &n / &d;
            split_into(d, out);
            split_into(other, out);
            return;
        }
    }
    panic!("integer factorization failed for {n}");
}

/// Prime factorization of `|n|`, primes ascending. `n` must be nonzero.
pub fn factor_integer(n: &BigInt) -> Vec<(BigInt, u32)> {
    assert!(!n.is_zero(), "cannot factor zero");
    let mut n = n.abs();
    let mut primes = Vec::new();
    let mut p = 2u64;
    while p < 1 << 14 {
        let bp = BigInt::from(p);
        if &bp * &bp > n {
            break;
        }
        while (&n % &bp).is_zero() {
            n /= &bp;
            primes.push(bp.clone());
        }
        p += if p == 2 { 1 } else { 2 };
    }
    split_into(n, &mut primes);
    primes.sort();
    let mut out: Vec<(BigInt, u32)> = Vec::new();
    for q in primes {
        match out.last_mut() {
            Some((last, e)) if *last == q => *e += 1,
            _ => out.push((q, 1)),
        }
    }
    out
}

/// Distinct prime divisors of `|n|`.
pub fn prime_divisors(n: &BigInt) -> Vec<BigInt> {
    factor_integer(n).into_iter().map(|(p, _)| p).collect()
}

/// Writes `n = s * k^2` with `s` squarefree (carrying the sign of `n`).
pub fn squarefree_split(n: &BigInt) -> (BigInt, BigInt) {
    let mut s = BigInt::from(n.signum());
    let mut k = BigInt::one();
    for (p, e) in factor_integer(n) {
        if e % 2 == 1 {
            s *= &p;
        }
        k *= p.pow(e / 2);
    }
    (s, k)
}

/// `(v, m)` with `n = p^v * m`, `p ∤ m`. `n` must be nonzero.
pub fn valuation(n: &BigInt, p: &BigInt) -> (u32, BigInt) {
    let mut v = 0;
    let mut m = n.clone();
    loop {
        let (q, r) = m.div_rem(p);
        if !r.is_zero() {
            return (v, m);
        }
        m = q;
        v += 1;
    }
}

/// Legendre symbol `(a/p)` for an odd prime `p`; zero when `p | a`.
pub fn legendre(a: &BigInt, p: &BigInt) -> i32 {
    let a = a.mod_floor(p);
    if a.is_zero() {
        return 0;
    }
    let e = (p - 1u32) / 2u32;
    if a.modpow(&e, p).is_one() {
        1
    } else {
        -1
    }
}

pub fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let g = a.extended_gcd(m);
    if g.gcd.is_one() {
        Some(g.x.mod_floor(m))
    } else {
        None
    }
}

/// Tonelli-Shanks square root modulo a prime.
pub fn sqrt_mod_prime(a: &BigInt, p: &BigInt) -> Option<BigInt> {
    let a = a.mod_floor(p);
    if a.is_zero() {
        return Some(BigInt::zero());
    }
    if *p == BigInt::from(2) {
        return Some(a);
    }
    if legendre(&a, p) != 1 {
        return None;
    }
    let p1 = p - 1u32;
    let s = p1.trailing_zeros().unwrap();
    let q = &p1 >> s;
    let mut z = BigInt::from(2);
    while legendre(&z, p) != -1 {
        z += 1;
    }
    let mut m = s;
    let mut c = z.modpow(&q, p);
    let mut t = a.modpow(&q, p);
    let mut r = a.modpow(&((&q + 1u32) / 2u32), p);
    while !t.is_one() {
        let mut i = 0;
        let mut t2 = t.clone();
        while !t2.is_one() {
            t2 = (&t2 * &t2) % p;
            i += 1;
        }
        let b = c.modpow(&(BigInt::one() << (m - i - 1)), p);
        m = i;
        c = (&b * &b) % p;
        t = (&t * &c) % p;
        r = (&r * &b) % p;
    }
    Some(r)
}

/// Square root of `a` modulo a squarefree `n > 0`, by Tonelli-Shanks and
/// CRT. Returns the representative in `[0, n/2]`.
pub fn sqrt_mod_squarefree(a: &BigInt, n: &BigInt) -> Option<BigInt> {
    if n.is_one() {
        return Some(BigInt::zero());
    }
    let mut x = BigInt::zero();
    let mut m = BigInt::one();
    for (p, e) in factor_integer(n) {
        debug_assert_eq!(e, 1);
        let r = sqrt_mod_prime(a, &p)?;
        // combine x mod m with r mod p
        let inv = mod_inverse(&m, &p).expect("coprime moduli");
        let k = ((&r - &x) * inv).mod_floor(&p);
        x += &m * k;
        m *= &p;
    }
    let x = x.mod_floor(n);
    let other = n - &x;
    Some(if other < x { other } else { x })
}

pub fn to_u64(n: &BigInt) -> Option<u64> {
    n.to_u64()
}

pub fn is_square(n: &BigInt) -> bool {
    if n.sign() == Sign::Minus {
        return false;
    }
    let r = n.sqrt();
    &r * &r == *n
}

/// Primes in ascending order starting at `from`.
pub fn primes_from(from: u64) -> impl Iterator<Item = u64> {
    (from.max(2)..).filter(|&n| is_small_prime(n))
}

pub fn is_small_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn factors_small_and_large() {
        assert_eq!(factor_integer(&b(360)), vec![(b(2), 3), (b(3), 2), (b(5), 1)]);
        let n = BigInt::from(1_000_000_007u64) * BigInt::from(998_244_353u64);
        assert_eq!(
            factor_integer(&n),
            vec![(b(998_244_353), 1), (b(1_000_000_007), 1)]
        );
        assert_eq!(factor_integer(&b(-49)), vec![(b(7), 2)]);
    }

    #[test]
    fn squarefree_split_keeps_sign() {
        assert_eq!(squarefree_split(&b(-72)), (b(-2), b(6)));
        assert_eq!(squarefree_split(&b(1)), (b(1), b(1)));
    }

    #[test]
    fn tonelli_shanks_matches_brute_force() {
        for p in [3i64, 5, 7, 13, 17, 41, 97, 113] {
            for a in 0..p {
                let r = sqrt_mod_prime(&b(a), &b(p));
                let exists = (0..p).any(|x| (x * x) % p == a);
                assert_eq!(r.is_some(), exists, "a={a} p={p}");
                if let Some(r) = r {
                    assert_eq!((&r * &r).mod_floor(&b(p)), b(a));
                }
            }
        }
    }

    #[test]
    fn crt_square_root() {
        let n = b(3 * 5 * 7 * 11);
        let r = sqrt_mod_squarefree(&b(4), &n).unwrap();
        assert_eq!((&r * &r).mod_floor(&n), b(4));
        assert!(sqrt_mod_squarefree(&b(2), &b(15)).is_none());
    }
}
