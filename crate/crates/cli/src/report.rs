//! Human-readable and JSON renderings of a command result. Rationals are
//! written as `num/den` strings so the JSON form is exact.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use quatfact::arith::{format_rational, parse_rational, RatPoly};
use quatfact::qpoly::{BeckDecomposition, Factorization, QPoly};
use quatfact::quatalg::{Quaternion, QuaternionAlgebra};

pub type QuatJson = [String; 4];
pub type PolyJson = Vec<QuatJson>;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AlgebraJson {
    pub alpha: String,
    pub beta: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub algebra: AlgebraJson,
    pub input: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub second: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub leading: Option<QuatJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub factors: Option<Vec<PolyJson>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub roots: Option<Vec<QuatJson>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub irreducible: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub central_free: Option<PolyJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub central: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gcrd: Option<PolyJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value: Option<QuatJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verified: Option<bool>,
    pub seed: u64,
    pub elapsed_ms: f64,
}

pub enum Payload {
    Factor(Factorization),
    Roots(Vec<Quaternion>),
    Irreducible(bool),
    Beck(BeckDecomposition),
    Gcrd(QPoly),
    Eval(Quaternion),
}

pub fn quat_to_json(q: &Quaternion) -> QuatJson {
    q.coords().clone().map(|c| format_rational(&c))
}

pub fn poly_to_json(p: &QPoly) -> PolyJson {
    p.coeffs().iter().map(quat_to_json).collect()
}

pub fn quat_from_json(alg: &QuaternionAlgebra, v: &QuatJson) -> quatfact::Result<Quaternion> {
    let [t, x, y, z] = v;
    Ok(alg.element(parse_rational(t)?, parse_rational(x)?, parse_rational(y)?, parse_rational(z)?))
}

pub fn poly_from_json(alg: &QuaternionAlgebra, v: &PolyJson) -> quatfact::Result<QPoly> {
    Ok(QPoly::new(alg, v.iter().map(|q| quat_from_json(alg, q)).collect::<quatfact::Result<_>>()?))
}

impl Report {
    pub fn new(alg: &QuaternionAlgebra, seed: u64) -> Self {
        Report {
            command: String::new(),
            algebra: AlgebraJson {
                alpha: format_rational(alg.alpha()),
                beta: format_rational(alg.beta()),
            },
            input: String::new(),
            second: None,
            leading: None,
            factors: None,
            roots: None,
            irreducible: None,
            central_free: None,
            central: None,
            gcrd: None,
            value: None,
            verified: None,
            seed,
            elapsed_ms: 0.0,
        }
    }

    pub fn set_payload(&mut self, p: Payload) {
        match p {
            Payload::Factor(f) => {
                self.command = "factor".into();
                self.leading = Some(quat_to_json(&f.leading));
                self.factors = Some(f.factors.iter().map(poly_to_json).collect());
            }
            Payload::Roots(r) => {
                self.command = "roots".into();
                self.roots = Some(r.iter().map(quat_to_json).collect());
            }
            Payload::Irreducible(b) => {
                self.command = "irreducible".into();
                self.irreducible = Some(b);
            }
            Payload::Beck(b) => {
                self.command = "beck".into();
                self.leading = Some(quat_to_json(&b.leading));
                self.central_free = Some(poly_to_json(&b.central_free));
                self.central = Some(b.central.coeffs().iter().map(format_rational).collect());
            }
            Payload::Gcrd(g) => {
                self.command = "gcrd".into();
                self.gcrd = Some(poly_to_json(&g));
            }
            Payload::Eval(v) => {
                self.command = "eval".into();
                self.value = Some(quat_to_json(&v));
            }
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let alpha = parse_rational(&self.algebra.alpha).expect("stored by us");
        let beta = parse_rational(&self.algebra.beta).expect("stored by us");
        let alg = QuaternionAlgebra::new_unchecked(alpha.clone(), beta.clone()).expect("nonzero");
        let quat = |v: &QuatJson| quat_from_json(&alg, v).expect("stored by us");
        let poly = |v: &PolyJson| poly_from_json(&alg, v).expect("stored by us");
        let mut s = String::new();
        let _ = writeln!(s, "algebra: ({alpha}, {beta})");
        let _ = writeln!(s, "input: {}", self.input);
        if let Some(v) = &self.second {
            let _ = writeln!(s, "second: {v}");
        }
        if let Some(v) = &self.leading {
            let _ = writeln!(s, "leading: {}", quat(v));
        }
        if let Some(fs) = &self.factors {
            let _ = writeln!(s, "factors: {}", fs.len());
            for f in fs {
                let _ = writeln!(s, "  {}", poly(f));
            }
        }
        if let Some(rs) = &self.roots {
            if rs.is_empty() {
                let _ = writeln!(s, "roots: none");
            } else {
                let _ = writeln!(s, "roots: {}", rs.len());
                for r in rs {
                    let q = quat(r);
                    let _ = writeln!(s, "  {}    charpoly {}", q, q.charpoly());
                }
            }
        }
        if let Some(b) = self.irreducible {
            let _ = writeln!(s, "irreducible: {b}");
        }
        if let Some(q) = &self.central_free {
            let _ = writeln!(s, "central-free part: {}", poly(q));
        }
        if let Some(c) = &self.central {
            let p = RatPoly::new(c.iter().map(|x| parse_rational(x).expect("stored by us")).collect());
            let _ = writeln!(s, "central part: {p}");
        }
        if let Some(g) = &self.gcrd {
            let _ = writeln!(s, "gcrd: {}", poly(g));
        }
        if let Some(v) = &self.value {
            let _ = writeln!(s, "value: {}", quat(v));
        }
        if let Some(v) = self.verified {
            let _ = writeln!(s, "verification: {}", if v { "PASS" } else { "FAIL" });
        }
        let _ = write!(s, "time: {:.2} ms", self.elapsed_ms);
        s
    }
}
