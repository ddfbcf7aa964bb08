//! Zero divisors of `(alpha, beta / Q) ⊗ L` and their certificate files.

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::represent_pure;
use crate::arith::field::Field;
use crate::arith::integer::{self, legendre};
use crate::arith::modp::Fp;
use crate::arith::{format_rational, int, parse_rational, RatPoly, Rational};
use crate::error::{Error, Result};
use crate::numberfield::{
    nf_quadratic_subfields, nf_splits_quaternion, nf_sqrt, nf_sqrt_element, NFElement, NumberField,
};

/// Height bound used when the caller does not choose one.
pub const DEFAULT_MAX_HEIGHT: u32 = 2;

const ATTEMPTS_PER_HEIGHT: usize = 64;

/// Coordinates `q0 + q1 i + q2 j + q3 k` of an element of `A ⊗ L`, each
/// `q_r` a polynomial of degree `< deg p` read modulo `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroDivisorCertificate {
    pub q: [RatPoly; 4],
}

impl ZeroDivisorCertificate {
    pub fn new(q0: RatPoly, q1: RatPoly, q2: RatPoly, q3: RatPoly) -> Self {
        ZeroDivisorCertificate { q: [q0, q1, q2, q3] }
    }

    /// `q0^2 - alpha q1^2 - beta q2^2 + alpha beta q3^2` as a polynomial.
    pub fn norm_form(&self, alpha: &Rational, beta: &Rational) -> RatPoly {
        let [q0, q1, q2, q3] = &self.q;
        let sq = |p: &RatPoly| p * p;
        &(&(&sq(q0) - &sq(q1).scale(alpha)) - &sq(q2).scale(beta)) + &sq(q3).scale(&(alpha * beta))
    }

    /// Checks degrees, nonvanishing, and that the norm is divisible by `p`.
    pub fn verify(&self, alpha: &Rational, beta: &Rational, p: &RatPoly) -> Result<()> {
        let n = p.deg();
        if self.q.iter().any(|q| !q.is_zero() && q.deg() >= n) {
            return Err(Error::InvalidCertificate(format!(
                "coordinates must have degree below {n}"
            )));
        }
        if self.q.iter().all(|q| q.is_zero()) {
            return Err(Error::InvalidCertificate("all coordinates vanish".into()));
        }
        if !self.norm_form(alpha, beta).rem(p).is_zero() {
            return Err(Error::InvalidCertificate(format!("norm is not divisible by {p}")));
        }
        Ok(())
    }
}

/// A certificate together with the data identifying what it certifies;
/// this is the on-disk JSON format.
#[derive(Debug, Clone, PartialEq)]
pub struct CertificateRecord {
    pub alpha: Rational,
    pub beta: Rational,
    pub minpoly: RatPoly,
    pub certificate: ZeroDivisorCertificate,
}

#[derive(Serialize, Deserialize)]
struct RecordJson {
    alpha: String,
    beta: String,
    minpoly: Vec<String>,
    q0: Vec<String>,
    q1: Vec<String>,
    q2: Vec<String>,
    q3: Vec<String>,
}

fn poly_to_strings(p: &RatPoly) -> Vec<String> {
    p.coeffs().iter().map(format_rational).collect()
}

fn poly_from_strings(v: &[String]) -> Result<RatPoly> {
    Ok(RatPoly::new(v.iter().map(|s| parse_rational(s)).collect::<Result<_>>()?))
}

impl CertificateRecord {
    pub fn to_json(&self) -> String {
        let [q0, q1, q2, q3] = &self.certificate.q;
        let rec = RecordJson {
            alpha: format_rational(&self.alpha),
            beta: format_rational(&self.beta),
            minpoly: poly_to_strings(&self.minpoly),
            q0: poly_to_strings(q0),
            q1: poly_to_strings(q1),
            q2: poly_to_strings(q2),
            q3: poly_to_strings(q3),
        };
        serde_json::to_string_pretty(&rec).expect("plain strings serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let rec: RecordJson =
            serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
        Ok(CertificateRecord {
            alpha: parse_rational(&rec.alpha)?,
            beta: parse_rational(&rec.beta)?,
            minpoly: poly_from_strings(&rec.minpoly)?,
            certificate: ZeroDivisorCertificate::new(
                poly_from_strings(&rec.q0)?,
                poly_from_strings(&rec.q1)?,
                poly_from_strings(&rec.q2)?,
                poly_from_strings(&rec.q3)?,
            ),
        })
    }
}

/// An element of `(alpha, beta / Q) ⊗ L` with vanishing reduced norm.
///
/// Tries, in order: the supplied certificate; a quadratic subfield
/// `Q(sqrt d)` of `L` that embeds in the algebra (giving `sqrt d - a` with
/// `a^2 = d`); a seeded search over pure quaternions `w` with coordinates in
/// `L` of height at most `max_height` whose square is a square `s^2` in `L`
/// (giving `s - w`).
pub fn find_zero_divisor(
    alpha: &Rational,
    beta: &Rational,
    l: &NumberField,
    cert: Option<&ZeroDivisorCertificate>,
    seed: u64,
    max_height: u32,
) -> Result<ZeroDivisorCertificate> {
    let p = l.minpoly();
    if let Some(c) = cert {
        c.verify(alpha, beta, p)?;
        return Ok(c.clone());
    }
    if !nf_splits_quaternion(alpha, beta, l)? {
        return Err(Error::PreconditionViolation(format!(
            "the field Q[x]/({p}) does not split the algebra"
        )));
    }
    let found = from_subfield(alpha, beta, l)?.map_or_else(
        || seeded_search(alpha, beta, l, seed, max_height),
        |c| Ok(Some(c)),
    )?;
    match found {
        Some(c) => {
            c.verify(alpha, beta, p)?;
            Ok(c)
        }
        None => Err(Error::SearchExhausted { factor: p.clone() }),
    }
}

fn from_subfield(
    alpha: &Rational,
    beta: &Rational,
    l: &NumberField,
) -> Result<Option<ZeroDivisorCertificate>> {
    for d in nf_quadratic_subfields(l) {
        let dq = Rational::from_integer(d);
        let [x, y, z] = match represent_pure(alpha, beta, &dq) {
            Ok(v) => v,
            Err(Error::NotRepresented) => continue,
            Err(e) => return Err(e),
        };
        let s = nf_sqrt(&dq, l).ok_or_else(|| {
            Error::InternalInvariantViolation("listed subfield without a square root".into())
        })?;
        let c = |q: Rational| RatPoly::constant(-q);
        return Ok(Some(ZeroDivisorCertificate::new(s.to_poly(), c(x), c(y), c(z))));
    }
    Ok(None)
}

/// Primes `q` with a root `r` of the minimal polynomial mod `q`: a square
/// of `L` maps to a square of `F_q` under `t -> r`.
fn split_primes(l: &NumberField, count: usize) -> Vec<(u64, u64)> {
    let f = l.minpoly();
    let den = f.denominator_lcm();
    let mut out = Vec::new();
    for q in integer::primes_from(3) {
        if out.len() == count || q > 5000 {
            break;
        }
        if (&den % BigInt::from(q)).is_zero() {
            continue;
        }
        let fp = Fp::new(q);
        let coeffs: Vec<u64> = f.coeffs().iter().map(|c| reduce_rational(&fp, c)).collect();
        if let Some(&r) = fp.roots(&coeffs).first() {
            out.push((q, r));
        }
    }
    out
}

fn reduce_rational(fp: &Fp, c: &Rational) -> u64 {
    fp.mul(fp.reduce(c.numer()), fp.inv(fp.reduce(c.denom())))
}

fn maybe_square(c: &NFElement, primes: &[(u64, u64)]) -> bool {
    primes.iter().all(|&(q, r)| {
        let fp = Fp::new(q);
        if c.coords().iter().any(|x| (x.denom() % BigInt::from(q)).is_zero()) {
            return true;
        }
        let coeffs: Vec<u64> = c.coords().iter().map(|x| reduce_rational(&fp, x)).collect();
        let v = fp.poly_eval(&coeffs, r);
        legendre(&BigInt::from(v), &BigInt::from(q)) != -1
    })
}

fn seeded_search(
    alpha: &Rational,
    beta: &Rational,
    l: &NumberField,
    seed: u64,
    max_height: u32,
) -> Result<Option<ZeroDivisorCertificate>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let primes = split_primes(l, 12);
    let n = l.degree();
    let ab = alpha * beta;
    for height in 1..=max_height as i64 {
        for _ in 0..ATTEMPTS_PER_HEIGHT {
            let mut w: Vec<NFElement> = (0..3)
                .map(|_| {
                    let coords = (0..n).map(|_| int(rng.gen_range(-height..=height))).collect();
                    l.from_coords(coords).expect("degree matches")
                })
                .collect();
            if w.iter().all(|a| a.is_zero()) {
                continue;
            }
            let sq = |a: &NFElement| a.fmul(a);
            let c = sq(&w[0])
                .scale(alpha)
                .fadd(&sq(&w[1]).scale(beta))
                .fsub(&sq(&w[2]).scale(&ab));
            let s = if c.is_zero() {
                // w itself is a zero divisor: w^2 = 0
                l.zero()
            } else if !maybe_square(&c, &primes) {
                continue;
            } else {
                match nf_sqrt_element(&c)? {
                    Some(s) => s,
                    None => continue,
                }
            };
            for a in w.iter_mut() {
                *a = a.fneg();
            }
            return Ok(Some(ZeroDivisorCertificate::new(
                s.to_poly(),
                w[0].to_poly(),
                w[1].to_poly(),
                w[2].to_poly(),
            )));
        }
    }
    Ok(None)
}
