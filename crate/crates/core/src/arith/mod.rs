//! Exact arithmetic over the integers and rationals: polynomials in `Q[x]`,
//! their factorization, and arithmetic modulo small primes.

pub mod factor;
pub mod field;
pub mod integer;
pub mod modp;
pub mod ratpoly;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};

pub use factor::{rp_factor, RatFactorization};
pub use field::Field;
pub use ratpoly::{
    rp_discriminant, rp_gcd, rp_real_root_count, rp_resultant, squarefree_decomposition, RatPoly,
};

pub type Rational = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Always `num/den`, e.g. `6/1`, `-3/4`.
pub fn format_rational(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Accepts `n` or `n/d` with optional sign.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Format(format!("not a rational number: {s:?}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}
