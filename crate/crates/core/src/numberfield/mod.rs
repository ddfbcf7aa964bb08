//! Number fields `L = Q[x]/(f)` for monic irreducible `f`: element
//! arithmetic, square roots of rationals, quadratic subfields, prime
//! splitting, and factorization over quadratic fields.

mod hnf;
mod order;

use std::cmp::Ordering;
use std::fmt;
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::field::{self, Field};
use crate::arith::integer::{self, is_square, legendre, prime_divisors, squarefree_split};
use crate::arith::modp::Fp;
use crate::arith::{int, rp_discriminant, rp_factor, RatPoly, Rational};
use crate::error::{Error, Result};
use crate::quadform;

pub use order::{nf_local_splitting, SplittingType};

struct Inner {
    minpoly: RatPoly,
    degree: usize,
    quadratic_subfields: OnceLock<Vec<BigInt>>,
    // unramified small primes q with a flag telling whether f mod q has a
    // factor of odd degree
    residue_parity: OnceLock<Vec<(u64, bool)>>,
}

/// `Q[x]/(minpoly)`. Cheap to clone; clones share cached data.
#[derive(Clone)]
pub struct NumberField(Arc<Inner>);

impl NumberField {
    /// Checks that `minpoly` is monic and irreducible over `Q`.
    pub fn new(minpoly: RatPoly) -> Result<Self> {
        if minpoly.degree().unwrap_or(0) == 0 {
            return Err(Error::DegenerateInput("minimal polynomial must be nonconstant".into()));
        }
        if !minpoly.is_monic() {
            return Err(Error::PreconditionViolation("minimal polynomial must be monic".into()));
        }
        if !rp_factor(&minpoly)?.is_irreducible() {
            return Err(Error::PreconditionViolation(format!(
                "{minpoly} is reducible over Q"
            )));
        }
        Ok(Self::new_unchecked(minpoly))
    }

    /// Skips the irreducibility check; the caller vouches for it.
    pub fn new_unchecked(minpoly: RatPoly) -> Self {
        let degree = minpoly.deg();
        NumberField(Arc::new(Inner {
            minpoly,
            degree,
            quadratic_subfields: OnceLock::new(),
            residue_parity: OnceLock::new(),
        }))
    }

    /// `Q(sqrt d)` presented as `Q[t]/(t^2 - d)`; `d` must not be a square.
    pub fn quadratic(d: &BigInt) -> Self {
        debug_assert!(!is_square(d));
        let d = Rational::from_integer(d.clone());
        Self::new_unchecked(RatPoly::new(vec![-d, Rational::zero(), Rational::one()]))
    }

    pub fn minpoly(&self) -> &RatPoly {
        &self.0.minpoly
    }

    pub fn degree(&self) -> usize {
        self.0.degree
    }

    /// The class of `x`.
    pub fn gen(&self) -> NFElement {
        self.element(&RatPoly::x())
    }

    pub fn zero(&self) -> NFElement {
        NFElement { field: self.clone(), coords: vec![Rational::zero(); self.degree()] }
    }

    pub fn one(&self) -> NFElement {
        self.from_rational(&Rational::one())
    }

    pub fn from_rational(&self, q: &Rational) -> NFElement {
        let mut e = self.zero();
        e.coords[0] = q.clone();
        e
    }

    /// The class of `g` modulo the minimal polynomial.
    pub fn element(&self, g: &RatPoly) -> NFElement {
        let r = g.rem(self.minpoly());
        let mut coords = r.into_coeffs();
        coords.resize(self.degree(), Rational::zero());
        NFElement { field: self.clone(), coords }
    }

    pub fn from_coords(&self, coords: Vec<Rational>) -> Result<NFElement> {
        if coords.len() != self.degree() {
            return Err(Error::PreconditionViolation(format!(
                "expected {} coordinates, got {}",
                self.degree(),
                coords.len()
            )));
        }
        Ok(NFElement { field: self.clone(), coords })
    }

    /// Monic integral polynomial of `c * x` where `c` is the least common
    /// denominator of the minimal polynomial, together with `c`.
    pub fn integral_minpoly(&self) -> (BigInt, Vec<BigInt>) {
        let f = self.minpoly();
        let c = f.denominator_lcm();
        let n = self.degree();
        let coeffs = f
            .coeffs()
            .iter()
            .enumerate()
            .map(|(i, a)| (a * Rational::from_integer(c.pow((n - i) as u32))).to_integer())
            .collect();
        (c, coeffs)
    }

    fn residue_parity(&self) -> &[(u64, bool)] {
        self.0.residue_parity.get_or_init(|| {
            let (_, f) = self.integral_minpoly();
            let disc = rp_discriminant(&RatPoly::from_integers(&f))
                .map(|d| d.to_integer())
                .unwrap_or_else(|_| BigInt::one());
            let mut out = Vec::new();
            for q in integer::primes_from(3) {
                if out.len() == 24 || q > 2000 {
                    break;
                }
                if (&disc % BigInt::from(q)).is_zero() {
                    continue;
                }
                let fp = Fp::new(q);
                let g = fp.poly_from_ints(&f);
                let odd = fp.berlekamp(&g).iter().any(|h| (h.len() - 1) % 2 == 1);
                out.push((q, odd));
            }
            out
        })
    }
}

impl PartialEq for NumberField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.minpoly == other.0.minpoly
    }
}

impl fmt::Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[x]/({})", self.minpoly())
    }
}

/// An element of a number field, as coordinates on `1, t, ..., t^(n-1)`.
#[derive(Clone, PartialEq)]
pub struct NFElement {
    field: NumberField,
    coords: Vec<Rational>,
}

impl NFElement {
    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn to_poly(&self) -> RatPoly {
        RatPoly::new(self.coords.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.coords[1..].iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &Rational) -> NFElement {
        NFElement {
            field: self.field.clone(),
            coords: self.coords.iter().map(|a| a * c).collect(),
        }
    }

    pub fn pow(&self, mut e: u64) -> NFElement {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.fmul(&base);
            }
            base = base.fmul(&base);
            e >>= 1;
        }
        acc
    }

    /// Characteristic polynomial over `Q` of multiplication by `self`.
    pub fn charpoly(&self) -> RatPoly {
        let n = self.field.degree();
        let mut rows = Vec::with_capacity(n);
        let mut basis = self.field.one();
        let t = self.field.gen();
        for _ in 0..n {
            rows.push(basis.fmul(self).coords);
            basis = basis.fmul(&t);
        }
        rational_charpoly(&rows)
    }
}

/// `det(x I - M)` over `Q` via Hessenberg reduction.
pub(crate) fn rational_charpoly(m: &[Vec<Rational>]) -> RatPoly {
    let n = m.len();
    let mut h: Vec<Vec<Rational>> = m.to_vec();
    for col in 1..n.saturating_sub(1) {
        let Some(i) = (col..n).find(|&i| !Zero::is_zero(&h[i][col - 1])) else {
            continue;
        };
        if i != col {
            h.swap(i, col);
            for row in h.iter_mut() {
                row.swap(i, col);
            }
        }
        let t_inv = h[col][col - 1].recip();
        for i in col + 1..n {
            let u = &h[i][col - 1] * &t_inv;
            if Zero::is_zero(&u) {
                continue;
            }
            for j in 0..n {
                let s = &u * &h[col][j];
                h[i][j] -= s;
            }
            for row in h.iter_mut() {
                let s = &u * &row[i];
                row[col] += s;
            }
        }
    }
    // p_k = charpoly of leading k x k block
    let mut polys: Vec<RatPoly> = vec![RatPoly::one()];
    for k in 0..n {
        let x_minus = RatPoly::new(vec![-h[k][k].clone(), Rational::one()]);
        let mut pk = &x_minus * &polys[k];
        let mut prod = Rational::one();
        for i in (0..k).rev() {
            prod *= &h[i + 1][i];
            let term = polys[i].scale(&(&prod * &h[i][k]));
            pk = &pk - &term;
        }
        polys.push(pk);
    }
    polys.pop().unwrap()
}

impl fmt::Debug for NFElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for NFElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly().to_string().replace('x', "t"))
    }
}

impl Field for NFElement {
    fn fis_zero(&self) -> bool {
        self.is_zero()
    }
    fn zero_like(&self) -> Self {
        self.field.zero()
    }
    fn one_like(&self) -> Self {
        self.field.one()
    }
    fn from_rational_like(&self, q: &Rational) -> Self {
        self.field.from_rational(q)
    }
    fn fadd(&self, rhs: &Self) -> Self {
        NFElement {
            field: self.field.clone(),
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect(),
        }
    }
    fn fsub(&self, rhs: &Self) -> Self {
        NFElement {
            field: self.field.clone(),
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect(),
        }
    }
    fn fmul(&self, rhs: &Self) -> Self {
        let prod = field::poly_mul(&self.coords, &rhs.coords);
        self.field.element(&RatPoly::new(prod))
    }
    fn fneg(&self) -> Self {
        NFElement {
            field: self.field.clone(),
            coords: self.coords.iter().map(|a| -a).collect(),
        }
    }
    fn finv(&self) -> Option<Self> {
        nf_inv(self).ok()
    }
}

/// Inverse via extended Euclid against the minimal polynomial.
pub fn nf_inv(a: &NFElement) -> Result<NFElement> {
    if a.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let (g, s, _) = a.to_poly().ext_gcd(a.field.minpoly())?;
    debug_assert!(g.is_constant());
    Ok(a.field.element(&s))
}

/// A square root of `d` in `L`, if one exists.
///
/// Writing `d = s * r^2` with `s` squarefree, `sqrt(s)` lies in `L` exactly
/// when the minimal polynomial of `L` factors over `Q(sqrt s)`; a factor
/// `g0 + g1 sqrt(s)` vanishing at the generator yields
/// `sqrt(s) = -g0(t) / g1(t)`.
pub fn nf_sqrt(d: &Rational, l: &NumberField) -> Option<NFElement> {
    if Zero::is_zero(d) {
        return Some(l.zero());
    }
    let (s, k) = squarefree_split(&(d.numer() * d.denom()));
    let r = Rational::new(k, d.denom().clone());
    if s.is_one() {
        return Some(l.from_rational(&r));
    }
    if l.degree() % 2 == 1 {
        return None;
    }
    let factors = nf_factor_over_quadratic(l.minpoly(), &s).ok()?;
    if factors.len() < 2 {
        return None;
    }
    let (g0, g1) = split_quadratic_poly(&factors[0]);
    let num = l.element(&g0);
    let den = l.element(&g1);
    let root = num.fneg().fmul(&nf_inv(&den).ok()?).scale(&r);
    let check = root.fmul(&root);
    debug_assert_eq!(check, l.from_rational(d));
    (check == l.from_rational(d)).then_some(root)
}

/// Splits a polynomial over `Q(sqrt d)` into its rational and irrational
/// parts `(A, B)` with `p = A + B sqrt d`.
pub fn split_quadratic_poly(p: &[NFElement]) -> (RatPoly, RatPoly) {
    let a = p.iter().map(|c| c.coords[0].clone()).collect();
    let b = p.iter().map(|c| c.coords[1].clone()).collect();
    (RatPoly::new(a), RatPoly::new(b))
}

/// `p(x + s)` for `p` over a number field.
fn shift_poly(p: &[NFElement], s: &NFElement) -> Vec<NFElement> {
    let lin = vec![s.clone(), s.one_like()];
    let mut acc: Vec<NFElement> = Vec::new();
    for c in p.iter().rev() {
        acc = field::poly_add(&field::poly_mul(&acc, &lin), std::slice::from_ref(c));
    }
    acc
}

/// Degree first, then coefficients lowest degree first, each compared by
/// its coordinates.
pub fn nf_poly_cmp(a: &[NFElement], b: &[NFElement]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| {
        for (x, y) in a.iter().zip(b) {
            let o = x.coords.cmp(&y.coords);
            if o != Ordering::Equal {
                return o;
            }
        }
        Ordering::Equal
    })
}

/// Complete factorization of a monic squarefree `p` over `Q(sqrt d)` by
/// Trager's norm method. Factors are monic and sorted by [`nf_poly_cmp`];
/// an irreducible `p` comes back as the single factor `[p]`.
pub fn nf_factor_over_quadratic(p: &RatPoly, d: &BigInt) -> Result<Vec<Vec<NFElement>>> {
    if is_square(d) {
        return Err(Error::DegenerateInput(format!("{d} is a square")));
    }
    if !p.is_monic() || p.deg() == 0 {
        return Err(Error::PreconditionViolation(format!("{p} is not monic nonconstant")));
    }
    if !p.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let k_field = NumberField::quadratic(d);
    let lifted: Vec<NFElement> = p.coeffs().iter().map(|c| k_field.from_rational(c)).collect();
    if p.deg() == 1 {
        return Ok(vec![lifted]);
    }
    let sqrt_d = k_field.gen();
    let dq = Rational::from_integer(d.clone());
    for k in 0i64.. {
        let shift = sqrt_d.scale(&int(k));
        let shifted = shift_poly(&lifted, &shift.fneg());
        let (a, b) = split_quadratic_poly(&shifted);
        let norm = &(&a * &a) - &(&b * &b).scale(&dq);
        if !norm.is_squarefree() {
            continue;
        }
        let fac = rp_factor(&norm)?;
        if fac.factors.len() == 1 {
            return Ok(vec![lifted]);
        }
        let mut out: Vec<Vec<NFElement>> = fac
            .factors
            .iter()
            .map(|(h, _)| {
                let h_k: Vec<NFElement> =
                    h.coeffs().iter().map(|c| k_field.from_rational(c)).collect();
                let g = field::poly_gcd(&h_k, &shifted);
                shift_poly(&g, &shift)
            })
            .collect();
        out.sort_by(|x, y| nf_poly_cmp(x, y));
        return Ok(out);
    }
    unreachable!()
}

/// Norm of `a` down to `Q`.
pub fn nf_norm(a: &NFElement) -> Rational {
    let c = a.charpoly().coeff(0);
    if a.field.degree() % 2 == 0 {
        c
    } else {
        -c
    }
}

/// Newton interpolation through `(x_i, y_i)` with distinct `x_i`.
fn interpolate(xs: &[Rational], ys: &[Rational]) -> RatPoly {
    let n = xs.len();
    let mut coef = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            coef[i] = (&coef[i] - &coef[i - 1]) / (&xs[i] - &xs[i - j]);
        }
    }
    let mut acc = RatPoly::zero();
    for i in (0..n).rev() {
        let lin = RatPoly::new(vec![-xs[i].clone(), Rational::one()]);
        acc = &(&acc * &lin) + &RatPoly::constant(coef[i].clone());
    }
    acc
}

/// Norm to `Q[y]` of a polynomial over `L`, by evaluation and interpolation.
fn nf_poly_norm(h: &[NFElement]) -> RatPoly {
    let n = h[0].field.degree();
    let points = (h.len() - 1) * n + 1;
    let xs: Vec<Rational> = (0..points as i64).map(int).collect();
    let ys: Vec<Rational> = xs
        .iter()
        .map(|x| nf_norm(&field::poly_eval(h, &h[0].from_rational_like(x))))
        .collect();
    interpolate(&xs, &ys)
}

/// Distinct roots in `L` of a nonzero squarefree polynomial over `L`, found
/// by Trager's method: shift until the norm is squarefree, then read roots
/// off the linear gcds with the rational irreducible factors of the norm.
pub fn nf_poly_roots(h: &[NFElement]) -> Result<Vec<NFElement>> {
    if h.is_empty() {
        return Err(Error::DegenerateInput("roots of the zero polynomial".into()));
    }
    if h.len() == 1 {
        return Ok(Vec::new());
    }
    let l = h[0].field.clone();
    let h = field::poly_monic(h);
    let theta = l.gen();
    for k in 0i64.. {
        let shift = theta.scale(&int(k));
        // roots of h(y - k t) are r + k t
        let shifted = shift_poly(&h, &shift.fneg());
        let norm = nf_poly_norm(&shifted);
        if !norm.is_squarefree() {
            if k > 64 {
                return Err(Error::NotSquarefree);
            }
            continue;
        }
        let mut roots = Vec::new();
        for (g, _) in rp_factor(&norm)?.factors {
            if g.deg() > l.degree() {
                continue;
            }
            let g_l: Vec<NFElement> = g.coeffs().iter().map(|c| l.from_rational(c)).collect();
            let common = field::poly_gcd(&g_l, &shifted);
            if common.len() == 2 {
                roots.push(common[0].fneg().fsub(&shift));
            }
        }
        return Ok(roots);
    }
    unreachable!()
}

/// A square root of an element of `L`, if it has one.
pub fn nf_sqrt_element(c: &NFElement) -> Result<Option<NFElement>> {
    if c.is_zero() {
        return Ok(Some(c.clone()));
    }
    let h = vec![c.fneg(), c.zero_like(), c.one_like()];
    Ok(nf_poly_roots(&h)?.into_iter().next())
}

/// All squarefree `d != 1` with `Q(sqrt d)` contained in `L`, ordered by
/// increasing `|d|`, positive before negative.
pub fn nf_quadratic_subfields(l: &NumberField) -> Vec<BigInt> {
    l.0.quadratic_subfields
        .get_or_init(|| compute_quadratic_subfields(l))
        .clone()
}

fn compute_quadratic_subfields(l: &NumberField) -> Vec<BigInt> {
    if l.degree() % 2 == 1 {
        return Vec::new();
    }
    let (_, f) = l.integral_minpoly();
    let disc = rp_discriminant(&RatPoly::from_integers(&f))
        .expect("nonconstant")
        .to_integer();
    let primes = prime_divisors(&(disc * 2));
    let mut candidates = Vec::new();
    for mask in 0u64..(1 << primes.len()) {
        let mut d = BigInt::one();
        for (i, p) in primes.iter().enumerate() {
            if mask >> i & 1 == 1 {
                d *= p;
            }
        }
        if !d.is_one() {
            candidates.push(d.clone());
        }
        candidates.push(-d);
    }
    candidates.sort_by(|a, b| a.abs().cmp(&b.abs()).then(b.cmp(a)));
    let parity = l.residue_parity();
    candidates
        .into_iter()
        .filter(|d| {
            // sqrt(d) in L forces d to be a square in every residue field of
            // odd degree over F_q
            !parity
                .iter()
                .any(|&(q, odd)| odd && legendre(d, &BigInt::from(q)) == -1)
        })
        .filter(|d| nf_sqrt(&Rational::from_integer(d.clone()), l).is_some())
        .collect()
}

/// True iff `(alpha, beta / Q) ⊗ L` is isomorphic to `M_2(L)`: every place
/// of `L` above a ramified place of the algebra has even local degree.
pub fn nf_splits_quaternion(alpha: &Rational, beta: &Rational, l: &NumberField) -> Result<bool> {
    let ramified = quadform::ramified_places(alpha, beta);
    if ramified.is_empty() {
        return Err(Error::SplitAlgebra {
            alpha: alpha.to_string(),
            beta: beta.to_string(),
        });
    }
    if l.degree() % 2 == 1 {
        return Ok(false);
    }
    for place in ramified.iter() {
        let split = nf_local_splitting(l, &place);
        if split.local_degrees().iter().any(|d| d % 2 == 1) {
            return Ok(false);
        }
    }
    Ok(true)
}
