use super::{beck_decompose, qp_gcrd, qp_norm, subfield_factor, QPoly};
use crate::arith::rp_factor;
use crate::error::{Error, Result};
use crate::quatalg::{is_conjugate, Quaternion};

/// One root from each conjugacy class of roots.
#[derive(Debug, Clone, PartialEq)]
pub struct RootSet {
    pub representatives: Vec<Quaternion>,
}

impl RootSet {
    fn add(&mut self, a: Quaternion) -> Result<()> {
        for r in &self.representatives {
            if is_conjugate(r, &a)? {
                return Ok(());
            }
        }
        self.representatives.push(a);
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }
}

/// Roots up to conjugacy: rational roots and quadratic factors of the
/// central part, then linear right divisors of the central-free part cut
/// out by the quadratic factors of its norm.
pub fn roots(p: &QPoly) -> Result<RootSet> {
    if p.is_zero() {
        return Err(Error::DegenerateInput("zero polynomial".into()));
    }
    let alg = p.algebra();
    let mut out = RootSet { representatives: Vec::new() };
    if p.deg() == 0 {
        return Ok(out);
    }
    let b = beck_decompose(p)?;
    if b.central.deg() > 0 {
        let fac = rp_factor(&b.central)?;
        for (r, _) in &fac.factors {
            if r.deg() == 1 {
                out.add(alg.scalar(-r.coeff(0)))?;
            }
        }
        for (r, _) in &fac.factors {
            if r.deg() == 2 {
                if let Some((f, _)) = subfield_factor(r, alg)? {
                    out.add(-f.coeff(0))?;
                }
            }
        }
    }
    let q = &b.central_free;
    if q.deg() > 0 {
        for (qj, _) in rp_factor(&qp_norm(q))?.factors {
            if qj.deg() != 2 {
                continue;
            }
            let g = qp_gcrd(&QPoly::from_central(alg, &qj), q)?;
            if g.deg() != 1 {
                return Err(Error::InternalInvariantViolation(format!(
                    "gcrd with norm factor {qj} has degree {}",
                    g.deg()
                )));
            }
            out.add(-g.coeff(0))?;
        }
    }
    Ok(out)
}
