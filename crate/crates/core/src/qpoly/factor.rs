use num_bigint::BigInt;

use super::{
    beck_decompose, qp_conj, qp_gcrd, qp_lclm, qp_norm, qp_right_div_exact, QPoly,
};
use crate::arith::{rp_factor, RatPoly, Rational};
use crate::error::{Error, Result};
use crate::numberfield::{
    nf_factor_over_quadratic, nf_quadratic_subfields, nf_splits_quaternion, NumberField,
};
use crate::quadform::{is_division, CertificateRecord, ZeroDivisorCertificate};
use crate::quatalg::{embed_quadratic, q_inv, Quaternion, QuaternionAlgebra};

/// `leading * factors[0] * ... * factors[n-1]`, factors monic irreducible.
#[derive(Debug, Clone, PartialEq)]
pub struct Factorization {
    pub leading: Quaternion,
    pub factors: Vec<QPoly>,
}

impl Factorization {
    pub fn expand(&self) -> QPoly {
        self.factors
            .iter()
            .fold(QPoly::constant(&self.leading), |acc, f| &acc * f)
    }
}

/// Zero-divisor certificates keyed by `(alpha, beta, central factor)`.
#[derive(Debug, Clone, Default)]
pub struct CertStore {
    records: Vec<CertificateRecord>,
}

impl CertStore {
    pub fn new() -> Self {
        Self::default()
    }

    /// A later record for the same key replaces an earlier one.
    pub fn insert(&mut self, rec: CertificateRecord) {
        self.records
            .retain(|r| !(r.alpha == rec.alpha && r.beta == rec.beta && r.minpoly == rec.minpoly));
        self.records.push(rec);
    }

    pub fn get(
        &self,
        alpha: &Rational,
        beta: &Rational,
        p: &RatPoly,
    ) -> Option<&ZeroDivisorCertificate> {
        self.records
            .iter()
            .find(|r| &r.alpha == alpha && &r.beta == beta && &r.minpoly == p)
            .map(|r| &r.certificate)
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }
}

/// How a central irreducible factor was handled.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CentralRoute {
    /// `Q[x]/(p)` does not split the algebra, so `p` stays irreducible.
    Irreducible,
    /// Factored over the embedded field `Q(sqrt d)`.
    Subfield(BigInt),
    /// Degree reduction starting from a zero divisor.
    ZeroDivisor,
}

/// Intermediate data of the degree-reduction loop.
#[derive(Debug, Clone, PartialEq)]
pub struct CentralTrace {
    pub route: CentralRoute,
    /// The cofactor `q = N(P)/p` for each polynomial `P` of the loop,
    /// starting with the one lifted from the zero divisor.
    pub q_sequence: Vec<RatPoly>,
}

fn check_monic_irreducible(p: &RatPoly) -> Result<()> {
    if p.degree().unwrap_or(0) == 0 || !p.is_monic() {
        return Err(Error::PreconditionViolation(format!("{p} is not monic nonconstant")));
    }
    if !rp_factor(p)?.is_irreducible() {
        return Err(Error::PreconditionViolation(format!("{p} is reducible over Q")));
    }
    Ok(())
}

fn subfield_factor_in(
    p: &RatPoly,
    alg: &QuaternionAlgebra,
    l: &NumberField,
) -> Result<Option<(BigInt, QPoly, QPoly)>> {
    for d in nf_quadratic_subfields(l) {
        if !nf_splits_quaternion(alg.alpha(), alg.beta(), &NumberField::quadratic(&d))? {
            continue;
        }
        let a = match embed_quadratic(alg, &d) {
            Ok(a) => a,
            Err(Error::EmbeddingObstructed { .. }) => continue,
            Err(e) => return Err(e),
        };
        let facs = nf_factor_over_quadratic(p, &d)?;
        if facs.len() < 2 {
            continue;
        }
        let coeffs = facs[0]
            .iter()
            .map(|c| &alg.scalar(c.coords()[0].clone()) + &a.scale(&c.coords()[1]))
            .collect();
        let q = QPoly::new(alg, coeffs);
        let qbar = qp_conj(&q);
        return Ok(Some((d, q, qbar)));
    }
    Ok(None)
}

/// `p = q * conj(q)` with `q` over a quadratic subfield of `Q[x]/(p)`
/// embedded in the algebra; `None` when no such subfield exists.
pub fn subfield_factor(p: &RatPoly, alg: &QuaternionAlgebra) -> Result<Option<(QPoly, QPoly)>> {
    check_monic_irreducible(p)?;
    if p.deg() < 2 {
        return Err(Error::PreconditionViolation("degree must be at least 2".into()));
    }
    let l = NumberField::new_unchecked(p.clone());
    Ok(subfield_factor_in(p, alg, &l)?.map(|(_, q, qb)| (q, qb)))
}

pub fn factor_central_irreducible(
    p: &RatPoly,
    alg: &QuaternionAlgebra,
    cert: Option<&ZeroDivisorCertificate>,
    seed: u64,
    max_height: u32,
) -> Result<Factorization> {
    Ok(factor_central_irreducible_traced(p, alg, cert, seed, max_height)?.0)
}

/// Factorization of a monic irreducible `p` in `Q[x]` over the algebra,
/// together with the route taken and the loop's cofactors.
pub fn factor_central_irreducible_traced(
    p: &RatPoly,
    alg: &QuaternionAlgebra,
    cert: Option<&ZeroDivisorCertificate>,
    seed: u64,
    max_height: u32,
) -> Result<(Factorization, CentralTrace)> {
    check_monic_irreducible(p)?;
    let unchanged = |route| {
        (
            Factorization { leading: alg.one(), factors: vec![QPoly::from_central(alg, p)] },
            CentralTrace { route, q_sequence: Vec::new() },
        )
    };
    let l = NumberField::new_unchecked(p.clone());
    if !nf_splits_quaternion(alg.alpha(), alg.beta(), &l)? {
        return Ok(unchanged(CentralRoute::Irreducible));
    }
    if let Some((d, q, qbar)) = subfield_factor_in(p, alg, &l)? {
        return Ok((
            Factorization { leading: alg.one(), factors: vec![q, qbar] },
            CentralTrace { route: CentralRoute::Subfield(d), q_sequence: Vec::new() },
        ));
    }
    let zd = crate::quadform::find_zero_divisor(alg.alpha(), alg.beta(), &l, cert, seed, max_height)?;
    let norm_cofactor = |pp: &QPoly| {
        qp_norm(pp).div_exact(p).ok_or_else(|| {
            Error::InternalInvariantViolation("p does not divide the norm".into())
        })
    };
    let mut pp = QPoly::from_coords(alg, &zd.q);
    let mut q = norm_cofactor(&pp)?;
    let mut qs = vec![q.clone()];
    while q.deg() > 0 {
        let r = pp.rem_central(&q);
        let prod = &pp * &qp_conj(&r);
        pp = prod.div_central_exact(&q).ok_or_else(|| {
            Error::InternalInvariantViolation("q does not divide P conj(r)".into())
        })?;
        pp = pp.scale_rational(&pp.rational_content().recip());
        let next = norm_cofactor(&pp)?;
        debug_assert!(next.deg() < q.deg(), "degree of q must drop");
        debug_assert_eq!(&next * p, qp_norm(&pp));
        if next.deg() >= q.deg() {
            return Err(Error::InternalInvariantViolation("degree of q did not drop".into()));
        }
        q = next;
        qs.push(q.clone());
    }
    let c = pp.lc();
    let f1 = pp.scale_right(&q_inv(&c)?);
    let f2 = qp_conj(&pp).scale_left(&q_inv(&c.conj())?);
    if &f1 * &f2 != QPoly::from_central(alg, p) {
        return Err(Error::InternalInvariantViolation("factors do not multiply back".into()));
    }
    Ok((
        Factorization { leading: alg.one(), factors: vec![f1, f2] },
        CentralTrace { route: CentralRoute::ZeroDivisor, q_sequence: qs },
    ))
}

/// Irreducibility in `A[x]`: a central polynomial is irreducible iff it is
/// irreducible over `Q` and its stem field does not split the algebra; a
/// polynomial without central factor iff its norm is irreducible over `Q`.
pub fn is_irreducible(p: &QPoly) -> Result<bool> {
    if p.deg() == 0 {
        return Err(Error::DegenerateInput("constant polynomial".into()));
    }
    let b = beck_decompose(p)?;
    let alg = p.algebra();
    if b.central_free.deg() == 0 {
        let c = &b.central;
        if !rp_factor(c)?.is_irreducible() {
            return Ok(false);
        }
        if c.deg() % 2 == 1 {
            return Ok(true);
        }
        let l = NumberField::new_unchecked(c.clone());
        return Ok(!nf_splits_quaternion(alg.alpha(), alg.beta(), &l)?);
    }
    if b.central.deg() == 0 {
        return Ok(rp_factor(&qp_norm(&b.central_free))?.is_irreducible());
    }
    Ok(false)
}

/// For monic irreducible `p`, `q` with coprime norms, `(q1, p1)` with
/// `q1 p1 = p q`, `N p1 = N p` and `N q1 = N q`.
pub fn swap_factors(p: &QPoly, q: &QPoly) -> Result<(QPoly, QPoly)> {
    let np = qp_norm(p);
    let nq = qp_norm(q);
    let (g, _s, t) = np.ext_gcd(&nq)?;
    if g.deg() > 0 {
        return Err(Error::PreconditionViolation("norms are not coprime".into()));
    }
    // s Np + t Nq = 1, so with q* = conj(q) t we get q q* = 1 - s Np.
    let q_star = qp_conj(q).mul_central(&t);
    let l = qp_lclm(p, &q_star)?;
    let p1 = qp_right_div_exact(&l, &q_star)?.monic()?;
    let q1 = qp_right_div_exact(&(p * q), &p1)?;
    Ok((q1, p1))
}

/// Complete factorization `p = c * f_1 * ... * f_n` into monic irreducibles.
/// Factors of the norm of the central-free part are extracted right to left;
/// the factors of the central part follow.
pub fn factor(
    p: &QPoly,
    certs: Option<&CertStore>,
    seed: u64,
    max_height: u32,
) -> Result<Factorization> {
    if p.is_zero() {
        return Err(Error::DegenerateInput("zero polynomial".into()));
    }
    let alg = p.algebra();
    if !is_division(alg.alpha(), alg.beta()) {
        return Err(Error::SplitAlgebra {
            alpha: alg.alpha().to_string(),
            beta: alg.beta().to_string(),
        });
    }
    let b = beck_decompose(p)?;
    let mut tail = Vec::new();
    if b.central.deg() > 0 {
        for (r, e) in rp_factor(&b.central)?.factors {
            let cert = certs.and_then(|s| s.get(alg.alpha(), alg.beta(), &r));
            let f = factor_central_irreducible(&r, alg, cert, seed, max_height)?;
            for _ in 0..e {
                tail.extend(f.factors.iter().cloned());
            }
        }
    }
    let mut head = Vec::new();
    let mut rest = b.central_free;
    if rest.deg() > 0 {
        let mut nf = rp_factor(&qp_norm(&rest))?.factors;
        while rest.deg() > 0 {
            let Some((qk, eps)) = nf.last_mut() else {
                return Err(Error::InternalInvariantViolation("norm factors exhausted".into()));
            };
            let r = qp_gcrd(&rest, &QPoly::from_central(alg, qk))?;
            if r.deg() == 0 {
                return Err(Error::InternalInvariantViolation(format!(
                    "trivial gcrd with norm factor {qk}"
                )));
            }
            rest = qp_right_div_exact(&rest, &r)?;
            head.push(r);
            *eps -= 1;
            if *eps == 0 {
                nf.pop();
            }
        }
        if !rest.is_monic() {
            return Err(Error::InternalInvariantViolation("cofactor is not 1".into()));
        }
    }
    head.reverse();
    head.extend(tail);
    let out = Factorization { leading: b.leading, factors: head };
    debug_assert_eq!(&out.expand(), p);
    Ok(out)
}
