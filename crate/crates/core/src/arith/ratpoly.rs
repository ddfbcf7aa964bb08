//! Dense univariate polynomials over the rationals.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::field::{self, poly_divmod};
use super::Rational;
use crate::error::{Error, Result};

/// A polynomial in `Q[x]`, coefficients lowest degree first, no trailing
/// zeros. The zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RatPoly {
    coeffs: Vec<Rational>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        field::trim(&mut coeffs);
        RatPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn x() -> Self {
        Self::from_ints(&[0, 1])
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^n`
    pub fn monomial(c: Rational, n: usize) -> Self {
        let mut v = vec![Rational::zero(); n];
        v.push(c);
        Self::new(v)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `x^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0.
    pub fn deg(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn lc(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn monic(&self) -> Self {
        Self::new(field::poly_monic(&self.coeffs))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(field::poly_scale(&self.coeffs, c))
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        field::poly_eval(&self.coeffs, x)
    }

    pub fn derivative(&self) -> Self {
        Self::new(field::poly_derivative(&self.coeffs))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut r = Self::one();
        for _ in 0..e {
            r = &r * self;
        }
        r
    }

    /// `self(c * x)`
    pub fn scale_variable(&self, c: &Rational) -> Self {
        let mut pw = Rational::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a * &pw);
            pw *= c;
        }
        Self::new(out)
    }

    /// `self(g(x))`
    pub fn compose(&self, g: &RatPoly) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * g) + &Self::constant(c.clone());
        }
        acc
    }

    pub fn div_rem(&self, d: &RatPoly) -> Result<(RatPoly, RatPoly)> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (q, r) = poly_divmod(&self.coeffs, &d.coeffs);
        Ok((Self::new(q), Self::new(r)))
    }

    /// Remainder on division by a nonzero polynomial.
    pub fn rem(&self, d: &RatPoly) -> RatPoly {
        self.div_rem(d).expect("nonzero divisor").1
    }

    /// Exact quotient; `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &RatPoly) -> Option<RatPoly> {
        let (q, r) = self.div_rem(d).ok()?;
        r.is_zero().then_some(q)
    }

    pub fn divides(&self, other: &RatPoly) -> bool {
        !self.is_zero() && other.rem(self).is_zero()
    }

    /// Monic gcd of two polynomials, not both zero.
    pub fn gcd(&self, other: &RatPoly) -> Result<RatPoly> {
        rp_gcd(self, other)
    }

    /// `(g, s, t)` with `s*self + t*other = g`, `g` monic.
    pub fn ext_gcd(&self, other: &RatPoly) -> Result<(RatPoly, RatPoly, RatPoly)> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::DegenerateInput("gcd of two zero polynomials".into()));
        }
        let (g, s, t) = field::poly_ext_gcd(&self.coeffs, &other.coeffs);
        Ok((Self::new(g), Self::new(s), Self::new(t)))
    }

    /// Least common denominator of the coefficients.
    pub fn denominator_lcm(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    /// Rational content: the positive rational `c` such that `self / c` has
    /// coprime integer coefficients.
    pub fn content(&self) -> Rational {
        if self.is_zero() {
            return Rational::one();
        }
        let den = self.denominator_lcm();
        let g = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(den.clone())).to_integer())
            .fold(BigInt::zero(), |acc, n| acc.gcd(&n));
        Rational::new(g, den)
    }

    /// Primitive integer polynomial with positive leading coefficient, equal
    /// to `self` up to a rational factor.
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let mut c = self.content();
        if self.lc().is_negative() {
            c = -c;
        }
        self.coeffs.iter().map(|a| (a / &c).to_integer()).collect()
    }

    pub fn from_integers(coeffs: &[BigInt]) -> Self {
        Self::new(coeffs.iter().cloned().map(Rational::from_integer).collect())
    }

    pub fn is_squarefree(&self) -> bool {
        match self.degree() {
            None => false,
            Some(0) => true,
            Some(_) => rp_gcd(self, &self.derivative()).map(|g| g.is_constant()).unwrap_or(false),
        }
    }

    /// Total order used to sort factor lists: by degree, then the coefficient
    /// sequence lowest degree first.
    pub fn canonical_cmp(&self, other: &RatPoly) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

/// Monic greatest common divisor.
pub fn rp_gcd(a: &RatPoly, b: &RatPoly) -> Result<RatPoly> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::DegenerateInput("gcd of two zero polynomials".into()));
    }
    Ok(RatPoly::new(field::poly_gcd(&a.coeffs, &b.coeffs)))
}

/// Resultant over `Q` via the Euclidean remainder sequence.
pub fn rp_resultant(a: &RatPoly, b: &RatPoly) -> Rational {
    if a.is_zero() || b.is_zero() {
        return Rational::zero();
    }
    let (mut a, mut b) = (a.clone(), b.clone());
    let mut acc = Rational::one();
    loop {
        let m = a.deg();
        let n = b.deg();
        if n == 0 {
            return acc * pow_rat(&b.lc(), m);
        }
        if m == 0 {
            return acc * pow_rat(&a.lc(), n);
        }
        let r = a.rem(&b);
        if r.is_zero() {
            return Rational::zero();
        }
        let k = r.deg();
        if (m * n) % 2 == 1 {
            acc = -acc;
        }
        acc *= pow_rat(&b.lc(), m - k);
        a = b;
        b = r;
    }
}

fn pow_rat(x: &Rational, e: usize) -> Rational {
    let mut r = Rational::one();
    for _ in 0..e {
        r *= x;
    }
    r
}

/// `disc(p) = (-1)^{n(n-1)/2} Res(p, p') / lc(p)`.
pub fn rp_discriminant(p: &RatPoly) -> Result<Rational> {
    let n = match p.degree() {
        None | Some(0) => {
            return Err(Error::DegenerateInput(
                "discriminant of a constant polynomial".into(),
            ))
        }
        Some(n) => n,
    };
    let mut d = rp_resultant(p, &p.derivative()) / p.lc();
    if (n * (n - 1) / 2) % 2 == 1 {
        d = -d;
    }
    Ok(d)
}

/// Yun's squarefree decomposition of a monic polynomial:
/// `p = prod s_i^i`, returned as `(s_i, i)` with nonconstant `s_i`.
pub fn squarefree_decomposition(p: &RatPoly) -> Vec<(RatPoly, u32)> {
    let p = p.monic();
    if p.is_constant() {
        return Vec::new();
    }
    let dp = p.derivative();
    let mut a = rp_gcd(&p, &dp).unwrap();
    let mut b = p.div_exact(&a).unwrap();
    let mut c = dp.div_exact(&a).unwrap();
    let mut d = &c - &b.derivative();
    let mut out = Vec::new();
    let mut i = 1;
    loop {
        a = rp_gcd(&b, &d).unwrap();
        if !a.is_constant() {
            out.push((a.clone(), i));
        }
        b = b.div_exact(&a).unwrap();
        if b.is_constant() {
            break;
        }
        c = d.div_exact(&a).unwrap();
        d = &c - &b.derivative();
        i += 1;
    }
    out
}

/// Number of distinct real roots of a squarefree nonconstant polynomial,
/// counted with a Sturm sequence.
pub fn rp_real_root_count(p: &RatPoly) -> Result<usize> {
    if p.is_constant() {
        return Err(Error::DegenerateInput("constant polynomial".into()));
    }
    if !p.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let mut seq = vec![p.clone(), p.derivative()];
    loop {
        let n = seq.len();
        let r = seq[n - 2].rem(&seq[n - 1]);
        if r.is_zero() {
            break;
        }
        seq.push(-&r);
    }
    let sign_at = |q: &RatPoly, plus: bool| -> i32 {
        let s = if q.lc().is_positive() { 1 } else { -1 };
        if plus || q.deg() % 2 == 0 {
            s
        } else {
            -s
        }
    };
    let changes = |plus: bool| -> usize {
        let signs: Vec<i32> = seq.iter().map(|q| sign_at(q, plus)).collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    };
    Ok(changes(false) - changes(true))
}

impl fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = i == 0 || !a.is_one();
            if show_coeff {
                write!(f, "{a}")?;
                if i > 0 {
                    write!(f, "*")?;
                }
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl Add for &RatPoly {
    type Output = RatPoly;
    fn add(self, rhs: &RatPoly) -> RatPoly {
        RatPoly::new(field::poly_add(&self.coeffs, &rhs.coeffs))
    }
}

impl Sub for &RatPoly {
    type Output = RatPoly;
    fn sub(self, rhs: &RatPoly) -> RatPoly {
        RatPoly::new(field::poly_sub(&self.coeffs, &rhs.coeffs))
    }
}

impl Mul for &RatPoly {
    type Output = RatPoly;
    fn mul(self, rhs: &RatPoly) -> RatPoly {
        RatPoly::new(field::poly_mul(&self.coeffs, &rhs.coeffs))
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        RatPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Add for RatPoly {
    type Output = RatPoly;
    fn add(self, rhs: RatPoly) -> RatPoly {
        &self + &rhs
    }
}

impl Sub for RatPoly {
    type Output = RatPoly;
    fn sub(self, rhs: RatPoly) -> RatPoly {
        &self - &rhs
    }
}

impl Mul for RatPoly {
    type Output = RatPoly;
    fn mul(self, rhs: RatPoly) -> RatPoly {
        &self * &rhs
    }
}

impl Neg for RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> RatPoly {
        RatPoly::from_ints(c)
    }

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    // Sylvester-matrix determinant by rational Gaussian elimination.
    fn sylvester_resultant(a: &RatPoly, b: &RatPoly) -> Rational {
        let m = a.deg();
        let n = b.deg();
        let size = m + n;
        let mut mat = vec![vec![Rational::zero(); size]; size];
        for i in 0..n {
            for (j, c) in a.coeffs().iter().rev().enumerate() {
                mat[i][i + j] = c.clone();
            }
        }
        for i in 0..m {
            for (j, c) in b.coeffs().iter().rev().enumerate() {
                mat[n + i][i + j] = c.clone();
            }
        }
        let mut det = Rational::one();
        for c in 0..size {
            let Some(pr) = (c..size).find(|&r| !mat[r][c].is_zero()) else {
                return Rational::zero();
            };
            if pr != c {
                mat.swap(pr, c);
                det = -det;
            }
            det *= &mat[c][c];
            for r in c + 1..size {
                let f = &mat[r][c] / &mat[c][c];
                for k in c..size {
                    let t = &f * &mat[c][k];
                    mat[r][k] -= t;
                }
            }
        }
        det
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(rp_gcd(&p(&[-1, 0, 1]), &p(&[-1, 1])).unwrap(), p(&[-1, 1]));
        assert_eq!(rp_gcd(&p(&[1, 0, 1]), &p(&[1, 0, 1])).unwrap(), p(&[1, 0, 1]));
        assert!(matches!(
            rp_gcd(&RatPoly::zero(), &RatPoly::zero()),
            Err(Error::DegenerateInput(_))
        ));
    }

    #[test]
    fn discriminant_examples() {
        assert_eq!(rp_discriminant(&p(&[1, 0, 1])).unwrap(), q(-4));
        assert_eq!(rp_discriminant(&p(&[-2, 0, 1])).unwrap(), q(8));
        let f = p(&[6, 16, 11, 0, 1]);
        let n = 4;
        let mut oracle = sylvester_resultant(&f, &f.derivative()) / f.lc();
        if (n * (n - 1) / 2) % 2 == 1 {
            oracle = -oracle;
        }
        assert_eq!(rp_discriminant(&f).unwrap(), oracle);
        // frozen value from the Sylvester oracle (= 2^5 * 23 * 277)
        assert_eq!(oracle, q(203_872));
        assert!(rp_discriminant(&p(&[3])).is_err());
    }

    #[test]
    fn resultant_agrees_with_sylvester() {
        let pairs = [
            (p(&[1, 2, 3]), p(&[-1, 0, 0, 2])),
            (p(&[5, 0, -1, 1]), p(&[2, 7])),
            (p(&[1, 1, 1, 1, 1]), p(&[-3, 0, 1, 0, 0, 1])),
        ];
        for (a, b) in pairs {
            assert_eq!(rp_resultant(&a, &b), sylvester_resultant(&a, &b));
        }
    }

    #[test]
    fn sturm_counts() {
        assert_eq!(rp_real_root_count(&p(&[1, 0, 1])).unwrap(), 0);
        assert_eq!(rp_real_root_count(&p(&[-2, 0, 1])).unwrap(), 2);
        assert_eq!(rp_real_root_count(&p(&[-2, 0, 0, 1])).unwrap(), 1);
        assert_eq!(
            rp_real_root_count(&p(&[1, 2, 1])),
            Err(Error::NotSquarefree)
        );
    }

    #[test]
    fn yun_decomposition() {
        // (x-1)^3 (x+2) (x^2+1)^2
        let f = &(&p(&[-1, 1]).pow(3) * &p(&[2, 1])) * &p(&[1, 0, 1]).pow(2);
        let d = squarefree_decomposition(&f);
        assert_eq!(
            d,
            vec![(p(&[2, 1]), 1), (p(&[1, 0, 1]), 2), (p(&[-1, 1]), 3)]
        );
    }

    #[test]
    fn display() {
        assert_eq!(p(&[6, 16, 11, 0, 1]).to_string(), "x^4 + 11*x^2 + 16*x + 6");
        assert_eq!(p(&[0, -1]).to_string(), "-x");
    }
}
