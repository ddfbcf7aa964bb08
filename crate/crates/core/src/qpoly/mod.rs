//! Polynomials `c_0 + c_1 x + ... + c_n x^n` over a quaternion algebra with a
//! central indeterminate. Coefficients sit to the left of the powers of `x`;
//! division, GCRD and LCLM act on the right.

mod factor;
mod roots;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed};

use crate::arith::{rp_gcd, RatPoly, Rational};
use crate::error::{Error, Result};
use crate::quatalg::{q_inv, Quaternion, QuaternionAlgebra};

pub use factor::{
    factor, factor_central_irreducible, factor_central_irreducible_traced, is_irreducible,
    subfield_factor, swap_factors, CentralRoute, CentralTrace, CertStore, Factorization,
};
pub use roots::{roots, RootSet};

#[derive(Clone, PartialEq)]
pub struct QPoly {
    alg: QuaternionAlgebra,
    c: Vec<Quaternion>,
}

impl QPoly {
    pub fn new(alg: &QuaternionAlgebra, mut c: Vec<Quaternion>) -> Self {
        debug_assert!(c.iter().all(|q| q.algebra() == alg));
        while c.last().is_some_and(|q| q.is_zero()) {
            c.pop();
        }
        QPoly { alg: alg.clone(), c }
    }

    pub fn zero(alg: &QuaternionAlgebra) -> Self {
        Self::new(alg, Vec::new())
    }

    pub fn one(alg: &QuaternionAlgebra) -> Self {
        Self::constant(&alg.one())
    }

    pub fn x(alg: &QuaternionAlgebra) -> Self {
        Self::new(alg, vec![alg.zero(), alg.one()])
    }

    pub fn constant(c: &Quaternion) -> Self {
        Self::new(c.algebra(), vec![c.clone()])
    }

    /// `x - a`.
    pub fn linear(a: &Quaternion) -> Self {
        Self::new(a.algebra(), vec![-a, a.algebra().one()])
    }

    /// A polynomial with rational coefficients viewed in `A[x]`.
    pub fn from_central(alg: &QuaternionAlgebra, p: &RatPoly) -> Self {
        Self::new(alg, p.coeffs().iter().map(|c| alg.scalar(c.clone())).collect())
    }

    /// `p0 + p1 i + p2 j + p3 k` for rational polynomials `p_r`.
    pub fn from_coords(alg: &QuaternionAlgebra, p: &[RatPoly; 4]) -> Self {
        let n = p.iter().map(|q| q.coeffs().len()).max().unwrap_or(0);
        let c = (0..n)
            .map(|i| alg.element(p[0].coeff(i), p[1].coeff(i), p[2].coeff(i), p[3].coeff(i)))
            .collect();
        Self::new(alg, c)
    }

    /// The four coordinate polynomials with respect to `1, i, j, k`.
    pub fn coords(&self) -> [RatPoly; 4] {
        std::array::from_fn(|r| RatPoly::new(self.c.iter().map(|q| q.coords()[r].clone()).collect()))
    }

    pub fn algebra(&self) -> &QuaternionAlgebra {
        &self.alg
    }

    pub fn coeffs(&self) -> &[Quaternion] {
        &self.c
    }

    pub fn coeff(&self, i: usize) -> Quaternion {
        self.c.get(i).cloned().unwrap_or_else(|| self.alg.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    /// Degree, with `0` for the zero polynomial.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn is_constant(&self) -> bool {
        self.c.len() <= 1
    }

    pub fn lc(&self) -> Quaternion {
        self.c.last().cloned().unwrap_or_else(|| self.alg.zero())
    }

    pub fn is_monic(&self) -> bool {
        self.c.last().is_some_and(|q| *q == self.alg.one())
    }

    /// True when every coefficient is central.
    pub fn is_central(&self) -> bool {
        self.c.iter().all(|q| q.is_central())
    }

    /// The scalar parts as a rational polynomial.
    pub fn central_part(&self) -> RatPoly {
        RatPoly::new(self.c.iter().map(|q| q.coords()[0].clone()).collect())
    }

    /// `a * self`.
    pub fn scale_left(&self, a: &Quaternion) -> Self {
        Self::new(&self.alg, self.c.iter().map(|q| a * q).collect())
    }

    /// `self * a`.
    pub fn scale_right(&self, a: &Quaternion) -> Self {
        Self::new(&self.alg, self.c.iter().map(|q| q * a).collect())
    }

    pub fn scale_rational(&self, s: &Rational) -> Self {
        Self::new(&self.alg, self.c.iter().map(|q| q.scale(s)).collect())
    }

    /// Left-multiplies by the inverse of the leading coefficient.
    pub fn monic(&self) -> Result<Self> {
        let inv = q_inv(&self.lc())?;
        Ok(self.scale_left(&inv))
    }

    pub fn mul_central(&self, p: &RatPoly) -> Self {
        self * &Self::from_central(&self.alg, p)
    }

    /// Coordinatewise remainder modulo a central polynomial.
    pub fn rem_central(&self, q: &RatPoly) -> Self {
        Self::from_coords(&self.alg, &self.coords().map(|c| c.rem(q)))
    }

    /// Coordinatewise exact quotient by a central polynomial.
    pub fn div_central_exact(&self, q: &RatPoly) -> Option<Self> {
        let [a, b, c, d] = self.coords();
        Some(Self::from_coords(
            &self.alg,
            &[a.div_exact(q)?, b.div_exact(q)?, c.div_exact(q)?, d.div_exact(q)?],
        ))
    }

    /// Positive rational `c` such that the coordinates of `self / c` are
    /// integral with coprime coefficients.
    pub fn rational_content(&self) -> Rational {
        let coeffs: Vec<Rational> =
            self.c.iter().flat_map(|q| q.coords().iter().cloned()).collect();
        RatPoly::new(coeffs).content()
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.alg == other.alg {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }
}

/// Standard involution applied coefficientwise.
pub fn qp_conj(p: &QPoly) -> QPoly {
    QPoly::new(&p.alg, p.c.iter().map(|q| q.conj()).collect())
}

/// `p * conj(p)`, which is central; computed from the coordinates as
/// `p0^2 - alpha p1^2 - beta p2^2 + alpha beta p3^2`.
pub fn qp_norm(p: &QPoly) -> RatPoly {
    let [a, b, c, d] = p.coords();
    let al = p.alg.alpha();
    let be = p.alg.beta();
    let ab = al * be;
    &(&(&(&a * &a) - &(&b * &b).scale(al)) - &(&c * &c).scale(be)) + &(&d * &d).scale(&ab)
}

/// `(quot, rem)` with `p = quot * d + rem` and `deg rem < deg d`.
pub fn qp_right_divmod(p: &QPoly, d: &QPoly) -> Result<(QPoly, QPoly)> {
    p.check_same(d)?;
    if d.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let alg = &p.alg;
    let n = d.deg();
    let lc_inv = q_inv(&d.lc())?;
    let mut r = p.c.clone();
    let mut quot = vec![alg.zero(); r.len().saturating_sub(n)];
    while r.len() > n {
        let m = r.len() - 1;
        let t = &r[m] * &lc_inv;
        for (i, di) in d.c.iter().enumerate() {
            r[m - n + i] = &r[m - n + i] - &(&t * di);
        }
        debug_assert!(r[m].is_zero());
        r.pop();
        quot[m - n] = t;
    }
    Ok((QPoly::new(alg, quot), QPoly::new(alg, r)))
}

/// `p * d^{-1}` when `d` right-divides `p`.
pub fn qp_right_div_exact(p: &QPoly, d: &QPoly) -> Result<QPoly> {
    let (q, r) = qp_right_divmod(p, d)?;
    if r.is_zero() {
        Ok(q)
    } else {
        Err(Error::InternalInvariantViolation(format!("{d} does not right-divide {p}")))
    }
}

/// Extended right Euclid: `(g, u, v)` with `u p + v q = g`, `g` the monic
/// GCRD, plus the final cofactor pair `(u', v')` with `u' p + v' q = 0`.
fn right_euclid(p: &QPoly, q: &QPoly) -> Result<((QPoly, QPoly, QPoly), (QPoly, QPoly))> {
    p.check_same(q)?;
    if p.is_zero() && q.is_zero() {
        return Err(Error::DegenerateInput("gcrd of two zero polynomials".into()));
    }
    let alg = &p.alg;
    let (mut r0, mut r1) = (p.clone(), q.clone());
    let (mut u0, mut u1) = (QPoly::one(alg), QPoly::zero(alg));
    let (mut v0, mut v1) = (QPoly::zero(alg), QPoly::one(alg));
    while !r1.is_zero() {
        let (t, r) = qp_right_divmod(&r0, &r1)?;
        let u = &u0 - &(&t * &u1);
        let v = &v0 - &(&t * &v1);
        r0 = std::mem::replace(&mut r1, r);
        u0 = std::mem::replace(&mut u1, u);
        v0 = std::mem::replace(&mut v1, v);
    }
    let inv = q_inv(&r0.lc())?;
    Ok((
        (r0.scale_left(&inv), u0.scale_left(&inv), v0.scale_left(&inv)),
        (u1, v1),
    ))
}

/// Monic greatest common right divisor with Bezout cofactors `u p + v q = g`.
pub fn qp_gcrd_bezout(p: &QPoly, q: &QPoly) -> Result<(QPoly, QPoly, QPoly)> {
    Ok(right_euclid(p, q)?.0)
}

pub fn qp_gcrd(p: &QPoly, q: &QPoly) -> Result<QPoly> {
    Ok(qp_gcrd_bezout(p, q)?.0)
}

/// Monic least common left multiple, read off the last cofactor of the
/// right Euclidean algorithm.
pub fn qp_lclm(p: &QPoly, q: &QPoly) -> Result<QPoly> {
    if p.is_zero() || q.is_zero() {
        return Err(Error::DegenerateInput("lclm with a zero polynomial".into()));
    }
    let (_, (u, _)) = right_euclid(p, q)?;
    (&u * p).monic()
}

/// `sum c_i a^i`, the right remainder of `p` modulo `x - a`.
pub fn qp_evaluate(p: &QPoly, a: &Quaternion) -> Result<Quaternion> {
    if p.alg != *a.algebra() {
        return Err(Error::AlgebraMismatch);
    }
    let mut acc = p.alg.zero();
    let mut pow = p.alg.one();
    for c in &p.c {
        acc = &acc + &(c * &pow);
        pow = &pow * a;
    }
    Ok(acc)
}

/// `p = leading * central_free * central` with `central` the monic gcd of
/// the coordinates of `leading^{-1} p`.
#[derive(Debug, Clone, PartialEq)]
pub struct BeckDecomposition {
    pub leading: Quaternion,
    pub central_free: QPoly,
    pub central: RatPoly,
}

impl BeckDecomposition {
    pub fn expand(&self) -> QPoly {
        self.central_free.scale_left(&self.leading).mul_central(&self.central)
    }
}

pub fn beck_decompose(p: &QPoly) -> Result<BeckDecomposition> {
    if p.is_zero() {
        return Err(Error::DegenerateInput("zero polynomial".into()));
    }
    let leading = p.lc();
    let monic = p.scale_left(&q_inv(&leading)?);
    let coords = monic.coords();
    let mut g = RatPoly::zero();
    for c in &coords {
        g = if g.is_zero() { c.monic() } else { rp_gcd(&g, c)? };
    }
    let central_free = monic.div_central_exact(&g).ok_or_else(|| {
        Error::InternalInvariantViolation("gcd does not divide the coordinates".into())
    })?;
    Ok(BeckDecomposition { leading, central_free, central: g })
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let n = self.c.len().max(rhs.c.len());
        QPoly::new(&self.alg, (0..n).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect())
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let n = self.c.len().max(rhs.c.len());
        QPoly::new(&self.alg, (0..n).map(|i| &self.coeff(i) - &rhs.coeff(i)).collect())
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        assert!(self.alg == rhs.alg, "polynomials over different algebras");
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero(&self.alg);
        }
        let mut out = vec![self.alg.zero(); self.c.len() + rhs.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.c.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        QPoly::new(&self.alg, out)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly::new(&self.alg, self.c.iter().map(|q| -q).collect())
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for QPoly {
    /// Descending powers; non-scalar coefficients in parentheses, e.g.
    /// `(1+k)*x^2 - 3*x + (1/2-j)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (n, c) in self.c.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match n {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{n}"),
            };
            let (neg, body) = if c.is_central() {
                let s = &c.coords()[0];
                let a = s.abs();
                let body = if n == 0 {
                    a.to_string()
                } else if a.is_one() {
                    mono
                } else {
                    format!("{a}*{mono}")
                };
                (s.is_negative(), body)
            } else if n == 0 {
                (false, format!("({c})"))
            } else {
                (false, format!("({c})*{mono}"))
            };
            match (first, neg) {
                (true, true) => write!(f, "-{body}")?,
                (true, false) => write!(f, "{body}")?,
                (false, true) => write!(f, " - {body}")?,
                (false, false) => write!(f, " + {body}")?,
            }
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests;
