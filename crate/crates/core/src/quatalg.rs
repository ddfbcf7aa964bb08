//! Quaternion algebras `(alpha, beta / Q)` with `i^2 = alpha`, `j^2 = beta`,
//! `ij = k = -ji`, and their scalar extensions to number fields.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::field::Field;
use crate::arith::{format_rational, RatPoly, Rational};
use crate::error::{Error, Result};
use crate::numberfield::NFElement;
use crate::quadform::{is_division, represent_pure};

#[derive(Debug, PartialEq, Eq)]
struct AlgebraInner {
    alpha: Rational,
    beta: Rational,
}

/// The algebra `(alpha, beta / Q)`. Cheap to clone.
#[derive(Clone)]
pub struct QuaternionAlgebra(Arc<AlgebraInner>);

impl QuaternionAlgebra {
    /// Accepts only division algebras.
    pub fn new(alpha: Rational, beta: Rational) -> Result<Self> {
        let a = Self::new_unchecked(alpha, beta)?;
        if !is_division(a.alpha(), a.beta()) {
            return Err(Error::SplitAlgebra {
                alpha: format_rational(a.alpha()),
                beta: format_rational(a.beta()),
            });
        }
        Ok(a)
    }

    /// Any nonzero `alpha`, `beta`, split or not.
    pub fn new_unchecked(alpha: Rational, beta: Rational) -> Result<Self> {
        if alpha.is_zero() || beta.is_zero() {
            return Err(Error::DegenerateInput("alpha and beta must be nonzero".into()));
        }
        Ok(QuaternionAlgebra(Arc::new(AlgebraInner { alpha, beta })))
    }

    pub fn alpha(&self) -> &Rational {
        &self.0.alpha
    }

    pub fn beta(&self) -> &Rational {
        &self.0.beta
    }

    pub fn element(&self, t: Rational, x: Rational, y: Rational, z: Rational) -> Quaternion {
        Quaternion::from_coords(self, [t, x, y, z])
    }

    pub fn from_ints(&self, c: [i64; 4]) -> Quaternion {
        Quaternion::from_coords(self, c.map(|v| Rational::from_integer(v.into())))
    }

    pub fn scalar(&self, t: Rational) -> Quaternion {
        self.element(t, Rational::zero(), Rational::zero(), Rational::zero())
    }

    pub fn zero(&self) -> Quaternion {
        self.scalar(Rational::zero())
    }

    pub fn one(&self) -> Quaternion {
        self.scalar(Rational::one())
    }

    pub fn i(&self) -> Quaternion {
        self.from_ints([0, 1, 0, 0])
    }

    pub fn j(&self) -> Quaternion {
        self.from_ints([0, 0, 1, 0])
    }

    pub fn k(&self) -> Quaternion {
        self.from_ints([0, 0, 0, 1])
    }
}

impl PartialEq for QuaternionAlgebra {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for QuaternionAlgebra {}

impl fmt::Debug for QuaternionAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {} / Q)", self.alpha(), self.beta())
    }
}

/// `t + x i + y j + z k` with coordinates in `Q` or in a number field.
#[derive(Clone, PartialEq)]
pub struct Quaternion<F: Field = Rational> {
    alg: QuaternionAlgebra,
    c: [F; 4],
}

impl<F: Field> Quaternion<F> {
    pub fn from_coords(alg: &QuaternionAlgebra, c: [F; 4]) -> Self {
        Quaternion { alg: alg.clone(), c }
    }

    pub fn algebra(&self) -> &QuaternionAlgebra {
        &self.alg
    }

    pub fn coords(&self) -> &[F; 4] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.fis_zero())
    }

    /// Central means `x = y = z = 0`.
    pub fn is_central(&self) -> bool {
        self.c[1..].iter().all(|x| x.fis_zero())
    }

    fn alpha_f(&self) -> F {
        self.c[0].from_rational_like(self.alg.alpha())
    }

    fn beta_f(&self) -> F {
        self.c[0].from_rational_like(self.alg.beta())
    }

    pub fn zero_like(&self) -> Self {
        let z = self.c[0].zero_like();
        Quaternion::from_coords(&self.alg, [z.clone(), z.clone(), z.clone(), z])
    }

    pub fn one_like(&self) -> Self {
        let z = self.c[0].zero_like();
        Quaternion::from_coords(&self.alg, [self.c[0].one_like(), z.clone(), z.clone(), z])
    }

    pub fn scalar_like(&self, t: F) -> Self {
        let z = self.c[0].zero_like();
        Quaternion::from_coords(&self.alg, [t, z.clone(), z.clone(), z])
    }

    pub fn conj(&self) -> Self {
        Quaternion::from_coords(
            &self.alg,
            [self.c[0].clone(), self.c[1].fneg(), self.c[2].fneg(), self.c[3].fneg()],
        )
    }

    /// Reduced norm `t^2 - alpha x^2 - beta y^2 + alpha beta z^2`.
    pub fn norm(&self) -> F {
        let [t, x, y, z] = &self.c;
        let a = self.alpha_f();
        let b = self.beta_f();
        t.fmul(t)
            .fsub(&a.fmul(&x.fmul(x)))
            .fsub(&b.fmul(&y.fmul(y)))
            .fadd(&a.fmul(&b).fmul(&z.fmul(z)))
    }

    /// Reduced trace `2t`.
    pub fn trace(&self) -> F {
        self.c[0].fadd(&self.c[0])
    }

    pub fn scale(&self, s: &F) -> Self {
        Quaternion::from_coords(&self.alg, self.c.clone().map(|x| x.fmul(s)))
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.alg == other.alg {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    fn mul_unchecked(&self, b: &Self) -> Self {
        let [a0, a1, a2, a3] = &self.c;
        let [b0, b1, b2, b3] = &b.c;
        let al = self.alpha_f();
        let be = self.beta_f();
        let ab = al.fmul(&be);
        let c0 = a0
            .fmul(b0)
            .fadd(&al.fmul(&a1.fmul(b1)))
            .fadd(&be.fmul(&a2.fmul(b2)))
            .fsub(&ab.fmul(&a3.fmul(b3)));
        let c1 = a0
            .fmul(b1)
            .fadd(&a1.fmul(b0))
            .fsub(&be.fmul(&a2.fmul(b3)))
            .fadd(&be.fmul(&a3.fmul(b2)));
        let c2 = a0
            .fmul(b2)
            .fadd(&a2.fmul(b0))
            .fadd(&al.fmul(&a1.fmul(b3)))
            .fsub(&al.fmul(&a3.fmul(b1)));
        let c3 = a0
            .fmul(b3)
            .fadd(&a3.fmul(b0))
            .fadd(&a1.fmul(b2))
            .fsub(&a2.fmul(b1));
        Quaternion::from_coords(&self.alg, [c0, c1, c2, c3])
    }
}

/// Product in the common algebra.
pub fn q_mul<F: Field>(a: &Quaternion<F>, b: &Quaternion<F>) -> Result<Quaternion<F>> {
    a.check_same(b)?;
    Ok(a.mul_unchecked(b))
}

/// Inverse `conj(a) / N(a)`. Over a field that splits the algebra a
/// nonzero element of norm zero has no inverse; it is reported with its
/// coordinates as a witness.
pub fn q_inv<F: Field>(a: &Quaternion<F>) -> Result<Quaternion<F>> {
    if a.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let n = a.norm();
    match n.finv() {
        Some(inv) => Ok(a.conj().scale(&inv)),
        None => Err(Error::ZeroDivisorEncountered {
            witness: a.c.iter().map(|x| vec![format!("{x:?}")]).collect(),
        }),
    }
}

impl Quaternion<Rational> {
    /// `x^2 - Tr(a) x + N(a)`.
    pub fn charpoly(&self) -> RatPoly {
        let cp = CharPoly::of(self);
        cp.to_ratpoly()
    }

    /// Coordinates lifted into a number field.
    pub fn extend(&self, sample: &NFElement) -> Quaternion<NFElement> {
        Quaternion::from_coords(&self.alg, self.c.clone().map(|x| sample.from_rational_like(&x)))
    }
}

/// The pair `(trace, norm)`, i.e. the polynomial `x^2 - trace x + norm`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharPoly {
    pub trace: Rational,
    pub norm: Rational,
}

impl CharPoly {
    pub fn of(a: &Quaternion) -> Self {
        CharPoly { trace: a.trace(), norm: a.norm() }
    }

    pub fn to_ratpoly(&self) -> RatPoly {
        RatPoly::new(vec![self.norm.clone(), -self.trace.clone(), Rational::one()])
    }
}

/// Dickson: two non-central quaternions are conjugate iff they share trace
/// and norm; a central element is conjugate only to itself.
pub fn is_conjugate(a: &Quaternion, b: &Quaternion) -> Result<bool> {
    a.check_same(b)?;
    Ok(match (a.is_central(), b.is_central()) {
        (true, true) => a == b,
        (false, false) => a.trace() == b.trace() && a.norm() == b.norm(),
        _ => false,
    })
}

/// A pure quaternion `a` with `a^2 = d`, realizing `Q(sqrt d)` inside the
/// algebra via `u + v sqrt d -> u + v a`.
pub fn embed_quadratic(alg: &QuaternionAlgebra, d: &BigInt) -> Result<Quaternion> {
    let dq = Rational::from_integer(d.clone());
    match represent_pure(alg.alpha(), alg.beta(), &dq) {
        Ok([x, y, z]) => Ok(alg.element(Rational::zero(), x, y, z)),
        Err(Error::NotRepresented) => Err(Error::EmbeddingObstructed { d: d.to_string() }),
        Err(e) => Err(e),
    }
}

impl<F: Field> Add for &Quaternion<F> {
    type Output = Quaternion<F>;
    fn add(self, rhs: Self) -> Quaternion<F> {
        debug_assert!(self.alg == rhs.alg);
        Quaternion::from_coords(
            &self.alg,
            [
                self.c[0].fadd(&rhs.c[0]),
                self.c[1].fadd(&rhs.c[1]),
                self.c[2].fadd(&rhs.c[2]),
                self.c[3].fadd(&rhs.c[3]),
            ],
        )
    }
}

impl<F: Field> Sub for &Quaternion<F> {
    type Output = Quaternion<F>;
    fn sub(self, rhs: Self) -> Quaternion<F> {
        debug_assert!(self.alg == rhs.alg);
        Quaternion::from_coords(
            &self.alg,
            [
                self.c[0].fsub(&rhs.c[0]),
                self.c[1].fsub(&rhs.c[1]),
                self.c[2].fsub(&rhs.c[2]),
                self.c[3].fsub(&rhs.c[3]),
            ],
        )
    }
}

/// Panics on mismatched algebras; use [`q_mul`] for a checked product.
impl<F: Field> Mul for &Quaternion<F> {
    type Output = Quaternion<F>;
    fn mul(self, rhs: Self) -> Quaternion<F> {
        assert!(self.alg == rhs.alg, "quaternions from different algebras");
        self.mul_unchecked(rhs)
    }
}

impl<F: Field> Neg for &Quaternion<F> {
    type Output = Quaternion<F>;
    fn neg(self) -> Quaternion<F> {
        Quaternion::from_coords(&self.alg, self.c.clone().map(|x| x.fneg()))
    }
}

impl<F: Field> Neg for Quaternion<F> {
    type Output = Quaternion<F>;
    fn neg(self) -> Quaternion<F> {
        -&self
    }
}

impl<F: Field> fmt::Debug for Quaternion<F>
where
    Quaternion<F>: fmt::Display,
{
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Quaternion<Rational> {
    /// `1+k`, `-2+i-j-2k`, `3/2i`, `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = ["", "i", "j", "k"];
        let mut first = true;
        for (c, name) in self.c.iter().zip(names) {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if neg {
                write!(f, "-")?;
            } else if !first {
                write!(f, "+")?;
            }
            if name.is_empty() || !a.is_one() {
                write!(f, "{a}")?;
            }
            write!(f, "{name}")?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Display for Quaternion<NFElement> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}) + ({})i + ({})j + ({})k",
            self.c[0], self.c[1], self.c[2], self.c[3]
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};
    use crate::numberfield::NumberField;
    use proptest::prelude::*;

    fn hamilton() -> QuaternionAlgebra {
        QuaternionAlgebra::new(int(-1), int(-1)).unwrap()
    }

    #[test]
    fn basis_relations() {
        let a = hamilton();
        assert_eq!(&a.i() * &a.j(), a.k());
        assert_eq!(&a.j() * &a.i(), -a.k());
        let s = &a.i() + &a.j();
        assert_eq!(&s * &s, a.scalar(int(-2)));
        let b = QuaternionAlgebra::new(int(-1), int(-3)).unwrap();
        assert_eq!(&b.k() * &b.k(), b.scalar(int(-3)));
        assert_eq!(&b.j() * &b.k(), b.from_ints([0, 3, 0, 0]));
        assert_eq!(&b.k() * &b.i(), b.from_ints([0, 0, 1, 0]));
    }

    #[test]
    fn split_algebras_are_refused() {
        assert!(matches!(
            QuaternionAlgebra::new(int(1), int(1)),
            Err(Error::SplitAlgebra { .. })
        ));
        assert!(QuaternionAlgebra::new_unchecked(int(1), int(1)).is_ok());
        assert!(QuaternionAlgebra::new_unchecked(int(0), int(1)).is_err());
    }

    #[test]
    fn mismatched_algebras() {
        let a = hamilton();
        let b = QuaternionAlgebra::new(int(-1), int(-3)).unwrap();
        assert_eq!(q_mul(&a.i(), &b.i()), Err(Error::AlgebraMismatch));
        assert_eq!(is_conjugate(&a.i(), &b.i()), Err(Error::AlgebraMismatch));
    }

    #[test]
    fn inverses() {
        let a = hamilton();
        assert_eq!(q_inv(&a.i()).unwrap(), -a.i());
        let x = &a.one() + &a.k();
        assert_eq!(q_inv(&x).unwrap(), a.element(rat(1, 2), int(0), int(0), rat(-1, 2)));
        assert_eq!(q_inv(&a.scalar(int(2))).unwrap(), a.scalar(rat(1, 2)));
        assert_eq!(q_inv(&a.zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn inverse_over_splitting_field_finds_zero_divisor() {
        let a = hamilton();
        let l = NumberField::new(RatPoly::from_ints(&[1, 0, 1])).unwrap();
        // t + i has norm t^2 + 1 = 0 in Q(t)
        let z = l.zero();
        let w = Quaternion::from_coords(&a, [l.gen(), l.one(), z.clone(), z]);
        assert!(w.norm().is_zero());
        assert!(matches!(q_inv(&w), Err(Error::ZeroDivisorEncountered { .. })));
    }

    #[test]
    fn characteristic_polynomials() {
        let a = hamilton();
        assert_eq!(a.i().charpoly(), RatPoly::from_ints(&[1, 0, 1]));
        assert_eq!(a.from_ints([2, 0, 1, 0]).charpoly(), RatPoly::from_ints(&[5, -4, 1]));
        assert_eq!(a.scalar(int(3)).charpoly(), RatPoly::from_ints(&[9, -6, 1]));
    }

    #[test]
    fn conjugacy() {
        let a = hamilton();
        assert!(is_conjugate(&a.i(), &a.j()).unwrap());
        assert!(!is_conjugate(&a.i(), &a.from_ints([0, 2, 0, 0])).unwrap());
        assert!(is_conjugate(&a.scalar(int(3)), &a.scalar(int(3))).unwrap());
        assert!(!is_conjugate(&a.scalar(int(3)), &a.from_ints([3, 1, 0, 0])).unwrap());
    }

    #[test]
    fn quadratic_embeddings() {
        let a = hamilton();
        assert_eq!(embed_quadratic(&a, &BigInt::from(-1)).unwrap(), a.i());
        assert_eq!(embed_quadratic(&a, &BigInt::from(-2)).unwrap(), &a.i() + &a.j());
        assert_eq!(
            embed_quadratic(&a, &BigInt::from(2)),
            Err(Error::EmbeddingObstructed { d: "2".into() })
        );
    }

    #[test]
    fn display() {
        let a = hamilton();
        assert_eq!(a.from_ints([1, 0, 0, 1]).to_string(), "1+k");
        assert_eq!(a.from_ints([-2, 1, -1, -2]).to_string(), "-2+i-j-2k");
        assert_eq!(a.element(int(0), rat(3, 2), int(0), int(0)).to_string(), "3/2i");
        assert_eq!(a.zero().to_string(), "0");
    }

    fn algebra() -> impl Strategy<Value = QuaternionAlgebra> {
        prop_oneof![
            Just(QuaternionAlgebra::new(int(-1), int(-1)).unwrap()),
            Just(QuaternionAlgebra::new(int(-1), int(-3)).unwrap()),
            Just(QuaternionAlgebra::new(int(3), int(-5)).unwrap()),
        ]
    }

    fn elem(a: &QuaternionAlgebra) -> impl Strategy<Value = Quaternion> {
        let a = a.clone();
        prop::array::uniform4(-9i64..=9).prop_map(move |c| a.from_ints(c))
    }

    fn pair() -> impl Strategy<Value = (QuaternionAlgebra, Quaternion, Quaternion)> {
        algebra().prop_flat_map(|a| (Just(a.clone()), elem(&a), elem(&a)))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn norm_and_trace((_a, x, y) in pair()) {
            let xy = &x * &y;
            prop_assert_eq!(xy.norm(), x.norm() * y.norm());
            prop_assert_eq!((&x + &y).trace(), x.trace() + y.trace());
            prop_assert_eq!(xy.conj(), &y.conj() * &x.conj());
            prop_assert_eq!(x.conj().conj(), x.clone());
            prop_assert_eq!(&x * &x.conj(), x.scalar_like(x.norm()));
            let cp = x.charpoly();
            let val = &(&(&x * &x) - &x.scale(&x.trace())) + &x.scalar_like(x.norm());
            prop_assert!(val.is_zero());
            prop_assert_eq!(cp.deg(), 2);
        }

        #[test]
        fn central_products_commute((_a, x, _y) in pair(), c in -9i64..=9) {
            prop_assume!(!x.is_zero());
            let y = x.conj().scale(&int(c));
            let xy = &x * &y;
            prop_assert!(xy.is_central());
            prop_assert_eq!(&xy, &(&y * &x));
            prop_assert_eq!(y.scale(&x.norm()), &xy * &x.conj());
        }

        #[test]
        fn conjugacy_classes((_a, x, g) in pair(), h in prop::array::uniform4(-9i64..=9)) {
            prop_assume!(!g.is_zero());
            let gx = &(&g * &x) * &q_inv(&g).unwrap();
            prop_assert!(is_conjugate(&x, &gx).unwrap());
            prop_assert!(is_conjugate(&x, &x).unwrap());
            let z = x.algebra().from_ints(h);
            prop_assert_eq!(is_conjugate(&x, &z).unwrap(), is_conjugate(&z, &x).unwrap());
            if is_conjugate(&x, &gx).unwrap() && is_conjugate(&gx, &z).unwrap() {
                prop_assert!(is_conjugate(&x, &z).unwrap());
            }
        }

        #[test]
        fn inverse_is_two_sided((_a, x, _y) in pair()) {
            prop_assume!(!x.is_zero());
            let v = q_inv(&x).unwrap();
            prop_assert_eq!(&x * &v, x.one_like());
            prop_assert_eq!(&v * &x, x.one_like());
        }
    }

    #[test]
    fn embeddings_square_to_d() {
        for a in [
            QuaternionAlgebra::new(int(-1), int(-1)).unwrap(),
            QuaternionAlgebra::new(int(-1), int(-3)).unwrap(),
            QuaternionAlgebra::new(int(3), int(-5)).unwrap(),
        ] {
            for d in -30i64..=30 {
                let db = BigInt::from(d);
                if d == 0 || crate::arith::integer::is_square(&db) {
                    continue;
                }
                if let Ok(e) = embed_quadratic(&a, &db) {
                    assert_eq!(&e * &e, a.scalar(int(d)));
                }
            }
        }
    }
}
