//! Prime decomposition in number fields: a p-maximal order by Round 2,
//! then the splitting of `O/pO` into local components.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use super::hnf::hnf_basis;
use super::NumberField;
use crate::arith::field;
use crate::arith::modp::{Fp, MatP};
use crate::arith::{rp_discriminant, rp_real_root_count, RatPoly, Rational};
use crate::quadform::Place;

/// How a place of `Q` decomposes in `L`. Each entry is `(e, f)`; at the
/// infinite place a real embedding is `(1, 1)` and a complex pair `(2, 1)`,
/// so the local degree is always `e * f`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplittingType {
    pub place: Place,
    pub local_factors: Vec<(u32, u32)>,
}

impl SplittingType {
    pub fn local_degrees(&self) -> Vec<u32> {
        self.local_factors.iter().map(|(e, f)| e * f).collect()
    }
}

/// Decomposition of `place` in `L`. Finite primes must fit in 62 bits.
pub fn nf_local_splitting(l: &NumberField, place: &Place) -> SplittingType {
    let local_factors = match place {
        Place::Infinite => {
            let n = l.degree();
            let r = rp_real_root_count(l.minpoly()).expect("minimal polynomial is squarefree");
            let mut v = vec![(1, 1); r];
            v.extend(std::iter::repeat((2, 1)).take((n - r) / 2));
            v
        }
        Place::Finite(p) => {
            let p = p.to_u64().filter(|&p| p < 1 << 62).expect("prime below 2^62");
            finite_splitting(l, p)
        }
    };
    SplittingType { place: place.clone(), local_factors }
}

type Table = Vec<Vec<Vec<BigInt>>>;

/// An order given by a basis in power coordinates of the integral generator.
struct Order {
    f: RatPoly,
    basis: Vec<Vec<Rational>>,
    inverse: Vec<Vec<Rational>>,
}

impl Order {
    fn new(f: RatPoly, basis: Vec<Vec<Rational>>) -> Self {
        let inverse = invert(&basis);
        Order { f, basis, inverse }
    }

    fn n(&self) -> usize {
        self.basis.len()
    }

    fn to_basis(&self, v: &[Rational]) -> Vec<Rational> {
        let n = self.n();
        (0..n)
            .map(|j| {
                let mut acc = Rational::zero();
                for (i, vi) in v.iter().enumerate() {
                    if !vi.is_zero() {
                        acc += vi * &self.inverse[i][j];
                    }
                }
                acc
            })
            .collect()
    }

    fn table(&self) -> Table {
        let n = self.n();
        let mut t = vec![vec![Vec::new(); n]; n];
        for i in 0..n {
            for j in i..n {
                let prod = field::poly_mul(&self.basis[i], &self.basis[j]);
                let mut r = field::poly_rem(&prod, self.f.coeffs());
                r.resize(n, Rational::zero());
                let c: Vec<BigInt> = self
                    .to_basis(&r)
                    .into_iter()
                    .map(|q| {
                        debug_assert!(q.is_integer(), "structure constants must be integral");
                        q.to_integer()
                    })
                    .collect();
                t[i][j] = c.clone();
                t[j][i] = c;
            }
        }
        t
    }
}

fn invert(m: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    for c in 0..n {
        let pr = (c..n).find(|&i| !a[i][c].is_zero()).expect("nonsingular basis");
        a.swap(c, pr);
        let inv = a[c][c].recip();
        a[c].iter_mut().for_each(|x| *x *= &inv);
        for i in 0..n {
            if i != c && !a[i][c].is_zero() {
                let factor = a[i][c].clone();
                for j in 0..2 * n {
                    let s = &factor * &a[c][j];
                    a[i][j] -= s;
                }
            }
        }
    }
    a.into_iter().map(|r| r[n..].to_vec()).collect()
}

/// `O/pO` through its structure constants.
struct ResidueAlgebra {
    fp: Fp,
    table: Vec<Vec<Vec<u64>>>,
    one: Vec<u64>,
}

impl ResidueAlgebra {
    fn new(order: &Order, table: &Table, p: u64) -> Self {
        let fp = Fp::new(p);
        let table = table
            .iter()
            .map(|row| row.iter().map(|v| v.iter().map(|c| fp.reduce(c)).collect()).collect())
            .collect();
        let mut unit = vec![Rational::zero(); order.n()];
        unit[0] = Rational::one();
        let one = order
            .to_basis(&unit)
            .iter()
            .map(|c| fp.reduce(&c.to_integer()))
            .collect();
        ResidueAlgebra { fp, table, one }
    }

    fn n(&self) -> usize {
        self.table.len()
    }

    fn mul(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        let n = self.n();
        let mut out = vec![0u64; n];
        for i in 0..n {
            if x[i] == 0 {
                continue;
            }
            for j in 0..n {
                if y[j] == 0 {
                    continue;
                }
                let c = self.fp.mul(x[i], y[j]);
                for (o, t) in out.iter_mut().zip(&self.table[i][j]) {
                    *o = self.fp.add(*o, self.fp.mul(c, *t));
                }
            }
        }
        out
    }

    fn pow(&self, x: &[u64], mut e: u128) -> Vec<u64> {
        let mut acc = self.one.clone();
        let mut base = x.to_vec();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    fn unit(&self, i: usize) -> Vec<u64> {
        let mut e = vec![0u64; self.n()];
        e[i] = 1;
        e
    }

    /// Matrix (acting on columns) of the additive map `x -> x^e`, valid when
    /// `e` is a power of `p`.
    fn frobenius_matrix(&self, e: u128) -> MatP {
        let n = self.n();
        let cols: Vec<Vec<u64>> = (0..n).map(|i| self.pow(&self.unit(i), e)).collect();
        transpose(&cols)
    }

    fn mult_matrix(&self, v: &[u64]) -> MatP {
        let n = self.n();
        let cols: Vec<Vec<u64>> = (0..n).map(|i| self.mul(v, &self.unit(i))).collect();
        transpose(&cols)
    }

    /// Smallest power of `p` that is at least `n`.
    fn radical_exponent(&self) -> u128 {
        let p = self.fp.p as u128;
        let mut q = p;
        while q < self.n() as u128 {
            q *= p;
        }
        q
    }

    /// Basis of the nilradical, the kernel of a large Frobenius power.
    fn radical(&self) -> MatP {
        self.fp.kernel(&self.frobenius_matrix(self.radical_exponent()))
    }
}

fn transpose(m: &[Vec<u64>]) -> MatP {
    if m.is_empty() {
        return Vec::new();
    }
    (0..m[0].len())
        .map(|j| m.iter().map(|row| row[j]).collect())
        .collect()
}

fn finite_splitting(l: &NumberField, p: u64) -> Vec<(u32, u32)> {
    let (_, f_int) = l.integral_minpoly();
    let f = RatPoly::from_integers(&f_int);
    let n = l.degree();
    let basis: Vec<Vec<Rational>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect())
        .collect();
    let mut order = Order::new(f.clone(), basis);
    let disc = rp_discriminant(&f).expect("nonconstant").to_integer();
    let pb = BigInt::from(p);
    if (disc % (&pb * &pb)).is_zero() {
        order = p_maximal(order, p);
    }
    decompose(&ResidueAlgebra::new(&order, &order.table(), p))
}

/// Round 2: enlarge the order to its p-radical's multiplier ring until
/// that ring stops growing.
fn p_maximal(mut order: Order, p: u64) -> Order {
    let n = order.n();
    let pb = BigInt::from(p);
    loop {
        let table = order.table();
        let alg = ResidueAlgebra::new(&order, &table, p);
        let fp = alg.fp;
        let rad = alg.radical();
        if rad.is_empty() {
            return order;
        }
        // I_p = pO + lifts of the radical, in coordinates of the order basis
        let mut gens: Vec<Vec<BigInt>> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { pb.clone() } else { BigInt::zero() }).collect())
            .collect();
        gens.extend(rad.iter().map(|v| v.iter().map(|&c| BigInt::from(c)).collect()));
        let ideal = hnf_basis(gens, n);
        let ideal_q: Vec<Vec<Rational>> = ideal
            .iter()
            .map(|r| r.iter().cloned().map(Rational::from_integer).collect())
            .collect();
        let ideal_inv = invert(&ideal_q);
        // x in O/pO  ->  (x * gamma_k in I-coordinates mod p)_k
        let mut rows: MatP = Vec::with_capacity(n * n);
        for gamma in &ideal {
            let mut cols: Vec<Vec<u64>> = Vec::with_capacity(n);
            for row in table.iter() {
                let mut prod = vec![BigInt::zero(); n];
                for (l, g) in gamma.iter().enumerate() {
                    if g.is_zero() {
                        continue;
                    }
                    for (acc, t) in prod.iter_mut().zip(&row[l]) {
                        *acc += g * t;
                    }
                }
                let coords: Vec<u64> = (0..n)
                    .map(|j| {
                        let mut acc = Rational::zero();
                        for (k, c) in prod.iter().enumerate() {
                            if !c.is_zero() {
                                acc += Rational::from_integer(c.clone()) * &ideal_inv[k][j];
                            }
                        }
                        debug_assert!(acc.is_integer());
                        fp.reduce(&acc.to_integer())
                    })
                    .collect();
                cols.push(coords);
            }
            rows.extend(transpose(&cols));
        }
        let kernel = fp.kernel(&rows);
        if kernel.is_empty() {
            return order;
        }
        let mut gens: Vec<Vec<BigInt>> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { pb.clone() } else { BigInt::zero() }).collect())
            .collect();
        gens.extend(kernel.iter().map(|v| v.iter().map(|&c| BigInt::from(c)).collect()));
        let h = hnf_basis(gens, n);
        let inv_p = Rational::new(BigInt::one(), pb.clone());
        let basis: Vec<Vec<Rational>> = h
            .iter()
            .map(|coeffs| {
                let mut v = vec![Rational::zero(); n];
                for (c, b) in coeffs.iter().zip(&order.basis) {
                    if c.is_zero() {
                        continue;
                    }
                    let c = Rational::from_integer(c.clone()) * &inv_p;
                    for (acc, x) in v.iter_mut().zip(b) {
                        *acc += &c * x;
                    }
                }
                v
            })
            .collect();
        order = Order::new(order.f.clone(), basis);
    }
}

/// `(e, f)` of each prime above `p` from the structure of `O/pO` for a
/// p-maximal order `O`.
fn decompose(alg: &ResidueAlgebra) -> Vec<(u32, u32)> {
    let fp = alg.fp;
    let n = alg.n();
    let rad_exp = alg.radical_exponent();
    let big_frob = alg.frobenius_matrix(rad_exp);
    let radical = fp.kernel(&big_frob);
    // x with x^p - x nilpotent
    let mut frob_minus_id = alg.frobenius_matrix(fp.p as u128);
    for (i, row) in frob_minus_id.iter_mut().enumerate() {
        row[i] = fp.sub(row[i], 1);
    }
    let separating = fp.kernel(&fp.mat_mul(&big_frob, &frob_minus_id));

    let mut components: Vec<MatP> = vec![fp.identity(n)];
    for v in &separating {
        if components.len() == separating.len() - radical.len() {
            break;
        }
        let m = alg.mult_matrix(v);
        let eigenvalues = fp.roots(&fp.charpoly(&m));
        let mut next = Vec::new();
        for w in &components {
            for &lambda in &eigenvalues {
                let mut shifted = m.clone();
                for (i, row) in shifted.iter_mut().enumerate() {
                    row[i] = fp.sub(row[i], lambda);
                }
                let mut power = shifted.clone();
                for _ in 1..n {
                    power = fp.mat_mul(&power, &shifted);
                }
                let generalized = fp.kernel(&power);
                let part = intersect(&fp, w, &generalized, n);
                if !part.is_empty() {
                    next.push(part);
                }
            }
        }
        components = next;
    }
    let mut out: Vec<(u32, u32)> = components
        .iter()
        .map(|w| {
            let dim = w.len() as u32;
            let f = dim - intersect(&fp, w, &radical, n).len() as u32;
            (dim / f, f)
        })
        .collect();
    debug_assert_eq!(out.iter().map(|(e, f)| e * f).sum::<u32>() as usize, n);
    out.sort_unstable();
    out
}

/// Basis of the intersection of two subspaces given by bases.
fn intersect(fp: &Fp, a: &[Vec<u64>], b: &[Vec<u64>], n: usize) -> MatP {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut m = vec![Vec::with_capacity(a.len() + b.len()); n];
    for (r, row) in m.iter_mut().enumerate() {
        row.extend(a.iter().map(|v| v[r]));
        row.extend(b.iter().map(|v| fp.neg(v[r])));
    }
    fp.kernel(&m)
        .into_iter()
        .map(|k| {
            let mut v = vec![0u64; n];
            for (c, av) in k.iter().zip(a) {
                if *c == 0 {
                    continue;
                }
                for (o, x) in v.iter_mut().zip(av) {
                    *o = fp.add(*o, fp.mul(*c, *x));
                }
            }
            v
        })
        .collect()
}
