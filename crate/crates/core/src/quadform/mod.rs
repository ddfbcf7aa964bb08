//! Rational quadratic forms: Hilbert symbols, ramification of quaternion
//! algebras, isotropic vectors of diagonal forms, and representations by
//! the pure part of a norm form.

mod zerodiv;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::integer::{
    is_square, legendre, prime_divisors, sqrt_mod_squarefree, squarefree_split, valuation,
};
use crate::arith::Rational;
use crate::error::{Error, Result};

pub use zerodiv::{find_zero_divisor, CertificateRecord, ZeroDivisorCertificate, DEFAULT_MAX_HEIGHT};

/// A place of `Q`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Place {
    Finite(BigInt),
    Infinite,
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Finite(p) => write!(f, "{p}"),
            Place::Infinite => write!(f, "inf"),
        }
    }
}

/// A finite set of places, e.g. where a quaternion algebra ramifies.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PlaceSet {
    pub finite_primes: Vec<BigInt>,
    pub infinite: bool,
}

impl PlaceSet {
    pub fn is_empty(&self) -> bool {
        self.finite_primes.is_empty() && !self.infinite
    }

    pub fn len(&self) -> usize {
        self.finite_primes.len() + usize::from(self.infinite)
    }

    pub fn contains(&self, place: &Place) -> bool {
        match place {
            Place::Finite(p) => self.finite_primes.contains(p),
            Place::Infinite => self.infinite,
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = Place> + '_ {
        self.finite_primes
            .iter()
            .cloned()
            .map(Place::Finite)
            .chain(self.infinite.then_some(Place::Infinite))
    }
}

/// An integer in the same square class as `q`.
fn square_class_integer(q: &Rational) -> BigInt {
    q.numer() * q.denom()
}

/// Hilbert symbol `(a, b)_v`: `+1` iff `z^2 = a x^2 + b y^2` has a nonzero
/// solution over `Q_v`. Both arguments must be nonzero.
pub fn hilbert_symbol(a: &Rational, b: &Rational, place: &Place) -> i32 {
    assert!(!a.is_zero() && !b.is_zero(), "Hilbert symbol of zero");
    let a = square_class_integer(a);
    let b = square_class_integer(b);
    match place {
        Place::Infinite => {
            if a.is_negative() && b.is_negative() {
                -1
            } else {
                1
            }
        }
        Place::Finite(p) => hilbert_finite(&a, &b, p),
    }
}

fn hilbert_finite(a: &BigInt, b: &BigInt, p: &BigInt) -> i32 {
    let (va, u) = valuation(a, p);
    let (vb, v) = valuation(b, p);
    if *p == BigInt::from(2) {
        let eps = |x: &BigInt| -> u32 { u32::from(x.mod_floor(&BigInt::from(4)) == BigInt::from(3)) };
        let omega = |x: &BigInt| -> u32 {
            let r = x.mod_floor(&BigInt::from(8));
            u32::from(r == BigInt::from(3) || r == BigInt::from(5))
        };
        let e = eps(&u) * eps(&v) + va * omega(&v) + vb * omega(&u);
        if e % 2 == 0 {
            1
        } else {
            -1
        }
    } else {
        let mut s = 1;
        let eps_p = ((p - 1u32) / 2u32).is_odd();
        if va % 2 == 1 && vb % 2 == 1 && eps_p {
            s = -s;
        }
        if vb % 2 == 1 {
            s *= legendre(&u, p);
        }
        if va % 2 == 1 {
            s *= legendre(&v, p);
        }
        s
    }
}

/// Primes at which a symbol involving these rationals can be `-1`.
fn candidate_primes(values: &[&Rational]) -> Vec<BigInt> {
    let mut out = vec![BigInt::from(2)];
    for q in values {
        for n in [q.numer(), q.denom()] {
            if !n.is_zero() && !n.abs().is_one() {
                out.extend(prime_divisors(n));
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Places where `(alpha, beta / Q)` ramifies.
pub fn ramified_places(alpha: &Rational, beta: &Rational) -> PlaceSet {
    let finite_primes = candidate_primes(&[alpha, beta])
        .into_iter()
        .filter(|p| hilbert_symbol(alpha, beta, &Place::Finite(p.clone())) == -1)
        .collect();
    PlaceSet {
        finite_primes,
        infinite: hilbert_symbol(alpha, beta, &Place::Infinite) == -1,
    }
}

/// True iff `(alpha, beta / Q)` is a division algebra.
pub fn is_division(alpha: &Rational, beta: &Rational) -> bool {
    !ramified_places(alpha, beta).is_empty()
}

/// A diagonal quadratic form `sum c_i x_i^2` with nonzero coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct DiagonalForm {
    coeffs: Vec<Rational>,
}

impl DiagonalForm {
    pub fn new(coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.iter().any(|c| c.is_zero()) {
            return Err(Error::DegenerateInput("diagonal form with a zero coefficient".into()));
        }
        Ok(DiagonalForm { coeffs })
    }

    pub fn from_ints(coeffs: &[i64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn eval(&self, v: &[BigInt]) -> Rational {
        self.coeffs
            .iter()
            .zip(v)
            .map(|(c, x)| c * Rational::from_integer(x * x))
            .sum()
    }

    /// Form with squarefree integer coefficients equivalent up to scaling
    /// and substitution `x_i -> x_i / k_i`; returns the `k_i`.
    fn integral_squarefree(&self) -> (Vec<BigInt>, Vec<BigInt>) {
        let den = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        self.coeffs
            .iter()
            .map(|c| squarefree_split(&(c * Rational::from_integer(den.clone())).to_integer()))
            .unzip()
    }
}

/// Outcome of an isotropy query.
#[derive(Debug, Clone, PartialEq)]
pub enum Isotropy {
    /// A primitive integer vector on which the form vanishes.
    Isotropic(Vec<BigInt>),
    /// The form has no nontrivial zero over the completion at this place.
    Anisotropic(Place),
}

impl Isotropy {
    pub fn vector(&self) -> Option<&[BigInt]> {
        match self {
            Isotropy::Isotropic(v) => Some(v),
            Isotropy::Anisotropic(_) => None,
        }
    }
}

/// Zeros of diagonal forms are closed under sign changes of single
/// coordinates, so the canonical representative is nonnegative and primitive.
fn primitive(v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    v.into_iter().map(|x| (x / &g).abs()).collect()
}

fn primitive_rational(v: &[Rational]) -> Vec<BigInt> {
    let den = v.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    primitive(
        v.iter()
            .map(|c| (c * Rational::from_integer(den.clone())).to_integer())
            .collect(),
    )
}

/// The first place where `<a, b, c>` is anisotropic, if any.
fn ternary_obstruction(a: &Rational, b: &Rational, c: &Rational) -> Option<Place> {
    // <a,b,c> isotropic iff z^2 = (-a/c) x^2 + (-b/c) y^2 is solvable
    let s = -(a * c);
    let t = -(b * c);
    candidate_primes(&[a, b, c])
        .into_iter()
        .map(Place::Finite)
        .chain(std::iter::once(Place::Infinite))
        .find(|v| hilbert_symbol(&s, &t, v) == -1)
}

/// A nonzero zero of the ternary form, decided first by Hilbert symbols and
/// then found by Legendre descent.
pub fn ternary_isotropic(f: &DiagonalForm) -> Result<Isotropy> {
    if f.coeffs.len() != 3 {
        return Err(Error::PreconditionViolation("ternary form needs three coefficients".into()));
    }
    let [a, b, c] = [&f.coeffs[0], &f.coeffs[1], &f.coeffs[2]];
    if let Some(place) = ternary_obstruction(a, b, c) {
        return Ok(Isotropy::Anisotropic(place));
    }
    for v in small_vectors(3, 2) {
        let v: Vec<BigInt> = v.into_iter().map(BigInt::from).collect();
        if f.eval(&v).is_zero() {
            return Ok(Isotropy::Isotropic(primitive(v)));
        }
    }
    let (sf, k) = f.integral_squarefree();
    // sf0 x^2 + sf1 y^2 + sf2 z^2 = 0  <=>  (sf2 z)^2 = A x^2 + B y^2
    let big_a = -(&sf[0] * &sf[2]);
    let big_b = -(&sf[1] * &sf[2]);
    let (z2, x, y) = legendre_solve(&big_a, &big_b).ok_or_else(|| {
        Error::InternalInvariantViolation("Legendre descent failed on a soluble equation".into())
    })?;
    let sol = [
        x / Rational::from_integer(k[0].clone()),
        y / Rational::from_integer(k[1].clone()),
        z2 / Rational::from_integer(&sf[2] * &k[2]),
    ];
    let v = primitive_rational(&sol);
    debug_assert!(f.eval(&v).is_zero());
    Ok(Isotropy::Isotropic(v))
}

/// Nonzero rational `(X, Y, Z)` with `X^2 = a Y^2 + b Z^2`, by Lagrange's
/// descent. `None` if the descent hits an insoluble equation.
fn legendre_solve(a: &BigInt, b: &BigInt) -> Option<(Rational, Rational, Rational)> {
    let r = |n: &BigInt| Rational::from_integer(n.clone());
    let one = Rational::one;
    let zero = Rational::zero;
    let (a0, ka) = squarefree_split(a);
    let (b0, kb) = squarefree_split(b);
    // X^2 = a0 (ka Y)^2 + b0 (kb Z)^2
    let (x, y, z) = if a0.is_one() {
        (one(), one(), zero())
    } else if b0.is_one() {
        (one(), zero(), one())
    } else if a0 == -&b0 {
        (zero(), one(), one())
    } else if a0.is_negative() && b0.is_negative() {
        return None;
    } else if a0.abs() > b0.abs() {
        let (x, z, y) = legendre_solve(&b0, &a0)?;
        (x, y, z)
    } else {
        let bb = b0.abs();
        let t = sqrt_mod_squarefree(&a0, &bb)?;
        let m = (&t * &t - &a0) / &b0;
        if m.is_zero() {
            return None;
        }
        let (m0, km) = squarefree_split(&m);
        let (x1, y1, z1) = legendre_solve(&a0, &m0)?;
        // norms from Q(sqrt a0) multiply:
        // (t^2 - a0)(x1^2 - a0 y1^2) = b0 (m0 km z1)^2
        let x = r(&t) * &x1 + r(&a0) * &y1;
        let y = r(&t) * &y1 + &x1;
        let z = r(&m0) * r(&km) * &z1;
        (x, y, z)
    };
    Some((x, y / r(&ka), z / r(&kb)))
}

fn local_square(d: &BigInt, p: &BigInt) -> bool {
    let (v, u) = valuation(d, p);
    if v % 2 == 1 {
        return false;
    }
    if *p == BigInt::from(2) {
        u.mod_floor(&BigInt::from(8)).is_one()
    } else {
        legendre(&u, p) == 1
    }
}

/// The first place where the quaternary form is anisotropic, if any.
fn quaternary_obstruction(c: &[Rational]) -> Option<Place> {
    let pos = c.iter().filter(|x| x.is_positive()).count();
    if pos == 0 || pos == 4 {
        return Some(Place::Infinite);
    }
    let d_int = square_class_integer(&c.iter().product::<Rational>());
    let refs: Vec<&Rational> = c.iter().collect();
    let m1 = -Rational::one();
    for p in candidate_primes(&refs) {
        let place = Place::Finite(p.clone());
        if !local_square(&d_int, &p) {
            continue;
        }
        let mut hasse = 1;
        for i in 0..4 {
            for j in i + 1..4 {
                hasse *= hilbert_symbol(&c[i], &c[j], &place);
            }
        }
        // with square discriminant, anisotropic iff the Hasse invariant
        // differs from (-1,-1)_p
        if hasse != hilbert_symbol(&m1, &m1, &place) {
            return Some(place);
        }
    }
    None
}

/// Search order for small vectors: by max-norm, then absolute values
/// lexicographically, then positive signs first.
fn small_vectors(dim: usize, bound: i64) -> Vec<Vec<i64>> {
    let side = 2 * bound + 1;
    let mut out: Vec<Vec<i64>> = Vec::new();
    let total = (side as u64).pow(dim as u32);
    for idx in 0..total {
        let mut v = Vec::with_capacity(dim);
        let mut r = idx;
        for _ in 0..dim {
            v.push((r % side as u64) as i64 - bound);
            r /= side as u64;
        }
        if v.iter().all(|&x| x == 0) {
            continue;
        }
        v.reverse();
        out.push(v);
    }
    out.sort_by_key(|v| {
        let m = v.iter().map(|x| x.abs()).max().unwrap();
        let abs: Vec<i64> = v.iter().map(|x| x.abs()).collect();
        let signs: Vec<bool> = v.iter().map(|&x| x < 0).collect();
        (m, abs, signs)
    });
    out
}

/// Solution of `a x^2 + b y^2 = 0` when `-ab` is a square.
fn binary_zero(a: &Rational, b: &Rational) -> Option<(Rational, Rational)> {
    let prod = -(a * b);
    let n = square_class_integer(&prod);
    if !is_square(&n) {
        return None;
    }
    // -ab = (s / den(prod))^2 ... with n = num*den: -ab = n / den^2
    let s = Rational::new(n.sqrt(), prod.denom().clone());
    Some((s, a.clone()))
}

/// A nonzero zero of the quaternary form, or the place where none exists.
pub fn quaternary_isotropic(f: &DiagonalForm) -> Result<Isotropy> {
    let c = &f.coeffs;
    if c.len() != 4 {
        return Err(Error::PreconditionViolation("quaternary form needs four coefficients".into()));
    }
    if let Some(place) = quaternary_obstruction(c) {
        return Ok(Isotropy::Anisotropic(place));
    }
    let zero = Rational::zero;
    if let Some((x, y)) = binary_zero(&c[0], &c[1]) {
        return Ok(Isotropy::Isotropic(primitive_rational(&[x, y, zero(), zero()])));
    }
    if let Some((z, w)) = binary_zero(&c[2], &c[3]) {
        return Ok(Isotropy::Isotropic(primitive_rational(&[zero(), zero(), z, w])));
    }
    for v in small_vectors(4, 2) {
        let v: Vec<BigInt> = v.into_iter().map(BigInt::from).collect();
        if f.eval(&v).is_zero() {
            return Ok(Isotropy::Isotropic(primitive(v)));
        }
    }
    // a value t = c0 u^2 + c1 v^2 that <c2, c3> represents as -t
    for uv in small_vectors(2, 40) {
        let (u, v) = (Rational::from_integer(uv[0].into()), Rational::from_integer(uv[1].into()));
        let t = &c[0] * &u * &u + &c[1] * &v * &v;
        if t.is_zero() {
            continue;
        }
        let ternary = DiagonalForm::new(vec![c[2].clone(), c[3].clone(), t])?;
        if let Isotropy::Isotropic(sol) = ternary_isotropic(&ternary)? {
            let s = Rational::from_integer(sol[2].clone());
            let out = primitive_rational(&[
                &u * &s,
                &v * &s,
                Rational::from_integer(sol[0].clone()),
                Rational::from_integer(sol[1].clone()),
            ]);
            debug_assert!(f.eval(&out).is_zero());
            return Ok(Isotropy::Isotropic(out));
        }
    }
    Err(Error::InternalInvariantViolation(
        "locally isotropic quaternary form without a small common value".into(),
    ))
}

/// Rational `(x, y, z)` with `alpha x^2 + beta y^2 - alpha beta z^2 = d`,
/// i.e. `(x i + y j + z k)^2 = d`.
pub fn represent_pure(alpha: &Rational, beta: &Rational, d: &Rational) -> Result<[Rational; 3]> {
    if alpha.is_zero() || beta.is_zero() || d.is_zero() {
        return Err(Error::DegenerateInput("represent_pure needs nonzero inputs".into()));
    }
    let gamma = -(alpha * beta);
    let q = |x: &Rational, y: &Rational, z: &Rational| alpha * x * x + beta * y * y + &gamma * z * z;
    let mut small = small_vectors(3, 2);
    // prefer solutions with few, early coordinates: (|z|, |y|, |x|)
    small.sort_by_key(|v| {
        let m = v.iter().map(|x| x.abs()).max().unwrap();
        (m, v[2].abs(), v[1].abs(), v[0].abs(), v.iter().map(|&x| x < 0).collect::<Vec<_>>())
    });
    for v in small {
        let r: Vec<Rational> = v.iter().map(|&x| Rational::from_integer(x.into())).collect();
        if q(&r[0], &r[1], &r[2]) == *d {
            return Ok([r[0].clone(), r[1].clone(), r[2].clone()]);
        }
    }
    let form = DiagonalForm::new(vec![alpha.clone(), beta.clone(), gamma.clone(), -d])?;
    let sol = match quaternary_isotropic(&form)? {
        Isotropy::Isotropic(v) => v,
        Isotropy::Anisotropic(_) => return Err(Error::NotRepresented),
    };
    let r: Vec<Rational> = sol.iter().cloned().map(Rational::from_integer).collect();
    if !r[3].is_zero() {
        return Ok([&r[0] / &r[3], &r[1] / &r[3], &r[2] / &r[3]]);
    }
    // The ternary part is isotropic (split algebra): move along the
    // isotropic line from a vector with nonzero pairing.
    let iso = [r[0].clone(), r[1].clone(), r[2].clone()];
    let coeffs = [alpha.clone(), beta.clone(), gamma.clone()];
    let idx = (0..3).find(|&i| !iso[i].is_zero()).unwrap();
    let mut u = [Rational::zero(), Rational::zero(), Rational::zero()];
    u[idx] = Rational::one();
    let pairing = &coeffs[idx] * &iso[idx];
    let s = (d - &coeffs[idx]) / (Rational::from_integer(2.into()) * pairing);
    let out = [
        &u[0] + &s * &iso[0],
        &u[1] + &s * &iso[1],
        &u[2] + &s * &iso[2],
    ];
    debug_assert_eq!(q(&out[0], &out[1], &out[2]), *d);
    Ok(out)
}

/// True iff `a` is a nonzero square in `Q_v`.
pub fn is_local_square(a: &Rational, place: &Place) -> bool {
    if a.is_zero() {
        return false;
    }
    let n = square_class_integer(a);
    match place {
        Place::Infinite => n.is_positive(),
        Place::Finite(p) => local_square(&n, p),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    fn fin(p: i64) -> Place {
        Place::Finite(BigInt::from(p))
    }

    #[test]
    fn symbols_of_hamilton_quaternions() {
        let m1 = int(-1);
        assert_eq!(hilbert_symbol(&m1, &m1, &fin(2)), -1);
        assert_eq!(hilbert_symbol(&m1, &m1, &Place::Infinite), -1);
        assert_eq!(hilbert_symbol(&m1, &m1, &fin(5)), 1);
        assert_eq!(hilbert_symbol(&int(2), &int(3), &fin(3)), -1);
        assert_eq!(hilbert_symbol(&rat(1, 2), &rat(-1, 3), &fin(5)), 1);
    }

    #[test]
    fn ramification() {
        let b = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        let r = ramified_places(&int(-1), &int(-1));
        assert_eq!((r.finite_primes.clone(), r.infinite), (b(&[2]), true));
        assert!(ramified_places(&int(-1), &int(2)).is_empty());
        let r = ramified_places(&int(-1), &int(-3));
        assert_eq!((r.finite_primes, r.infinite), (b(&[3]), true));
        assert!(is_division(&int(-1), &int(-1)));
        assert!(!is_division(&int(1), &int(5)));
        assert!(!is_division(&int(-1), &int(2)));
    }

    #[test]
    fn ternary_examples() {
        let f = DiagonalForm::from_ints(&[1, 1, -2]).unwrap();
        assert_eq!(ternary_isotropic(&f).unwrap(), Isotropy::Isotropic(vec![1.into(), 1.into(), 1.into()]));
        let f = DiagonalForm::from_ints(&[1, -2, -3]).unwrap();
        assert!(matches!(ternary_isotropic(&f).unwrap(), Isotropy::Anisotropic(_)));
        let f = DiagonalForm::from_ints(&[2, 3, -5]).unwrap();
        let v = ternary_isotropic(&f).unwrap();
        assert!(f.eval(v.vector().unwrap()).is_zero());
        let f = DiagonalForm::new(vec![rat(3, 7), int(-5), rat(-1, 2)]).unwrap();
        if let Isotropy::Isotropic(v) = ternary_isotropic(&f).unwrap() {
            assert!(f.eval(&v).is_zero());
        }
    }

    #[test]
    fn quaternary_examples() {
        let f = DiagonalForm::from_ints(&[1, -1, -1, 1]).unwrap();
        assert_eq!(
            quaternary_isotropic(&f).unwrap(),
            Isotropy::Isotropic(vec![1.into(), 1.into(), 0.into(), 0.into()])
        );
        let f = DiagonalForm::from_ints(&[1, 1, 1, 1]).unwrap();
        assert_eq!(quaternary_isotropic(&f).unwrap(), Isotropy::Anisotropic(Place::Infinite));
        let f = DiagonalForm::from_ints(&[-1, -1, -1, 2]).unwrap();
        assert_eq!(
            quaternary_isotropic(&f).unwrap(),
            Isotropy::Isotropic(vec![0.into(), 1.into(), 1.into(), 1.into()])
        );
        // 7 is not a sum of three rational squares: anisotropic at 2 only
        let f = DiagonalForm::from_ints(&[1, 1, 1, -7]).unwrap();
        assert_eq!(quaternary_isotropic(&f).unwrap(), Isotropy::Anisotropic(fin(2)));
        // needs the reduction to a ternary form: no zero of height <= 2
        let f = DiagonalForm::from_ints(&[1, 1, -3, -31]).unwrap();
        let v = quaternary_isotropic(&f).unwrap();
        assert!(f.eval(v.vector().unwrap()).is_zero());
    }

    #[test]
    fn pure_quaternion_squares() {
        let m1 = int(-1);
        assert_eq!(represent_pure(&m1, &m1, &int(-1)).unwrap(), [int(1), int(0), int(0)]);
        assert_eq!(represent_pure(&m1, &m1, &int(-2)).unwrap(), [int(1), int(1), int(0)]);
        assert_eq!(represent_pure(&m1, &m1, &int(2)), Err(Error::NotRepresented));
        assert_eq!(represent_pure(&m1, &m1, &int(-7)), Err(Error::NotRepresented));
        let [x, y, z] = represent_pure(&m1, &m1, &int(-14)).unwrap();
        assert_eq!(-(&x * &x) - &y * &y - &z * &z, int(-14));
        // split algebra (1, 1): everything is represented
        let [x, y, z] = represent_pure(&int(1), &int(1), &int(5)).unwrap();
        assert_eq!(&x * &x + &y * &y - &z * &z, int(5));
    }

    #[test]
    fn local_squares() {
        assert!(is_local_square(&int(17), &fin(2)));
        assert!(!is_local_square(&int(5), &fin(2)));
        assert!(is_local_square(&int(-1), &fin(5)));
        assert!(!is_local_square(&int(-1), &Place::Infinite));
        assert!(is_local_square(&rat(4, 9), &fin(3)));
    }
}
