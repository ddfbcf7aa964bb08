//! Hermite normal form of integer row lattices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Upper-triangular basis of the lattice spanned by `rows`, which must have
/// full rank `n`. Diagonal entries are positive and entries above the
/// diagonal are reduced modulo the diagonal entry of their column.
pub fn hnf_basis(rows: Vec<Vec<BigInt>>, n: usize) -> Vec<Vec<BigInt>> {
    let mut pending = rows;
    let mut out: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for col in 0..n {
        let mut pivot: Option<Vec<BigInt>> = None;
        let mut rest = Vec::new();
        for r in pending.drain(..) {
            if r[col].is_zero() {
                rest.push(r);
                continue;
            }
            pivot = Some(match pivot {
                None => r,
                Some(p) => {
                    let e = p[col].extended_gcd(&r[col]);
                    let (a, b) = (&p[col] / &e.gcd, &r[col] / &e.gcd);
                    let combined: Vec<BigInt> =
                        p.iter().zip(&r).map(|(x, y)| &e.x * x + &e.y * y).collect();
                    let cleared: Vec<BigInt> =
                        p.iter().zip(&r).map(|(x, y)| &b * x - &a * y).collect();
                    if cleared.iter().any(|c| !c.is_zero()) {
                        rest.push(cleared);
                    }
                    combined
                }
            });
        }
        let mut p = pivot.expect("lattice must have full rank");
        if p[col].is_negative() {
            p.iter_mut().for_each(|c| *c = -&*c);
        }
        out.push(p);
        pending = rest;
    }
    for col in 0..n {
        let d = out[col][col].clone();
        for r in 0..col {
            let q = out[r][col].div_floor(&d);
            if !q.is_zero() {
                let sub: Vec<BigInt> = out[col].iter().map(|c| c * &q).collect();
                for (x, y) in out[r].iter_mut().zip(sub) {
                    *x -= y;
                }
            }
        }
    }
    out
}
