//! Ring-level operations on QK(X)_q: finite integer combinations of basis
//! elements q^d O^mu, the quantum Pieri products, the undeformed product and
//! the line-neighborhood operator psi for LG.

use crate::coeffs::{coeff_a, coeff_b, with_engine};
use crate::error::{Error, Result};
use crate::family::Family;
use crate::shape::QuantumShape;
use std::collections::BTreeMap;
use std::fmt;

/// A finite integer linear combination of basis elements.  Keys are canonical
/// shapes; zero coefficients are never stored.  Term order: ascending q-shift,
/// then descending partition lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QKClass {
    family: Family,
    terms: BTreeMap<QuantumShape, i64>,
}

impl QKClass {
    pub fn zero(family: Family) -> Self {
        QKClass { family, terms: BTreeMap::new() }
    }

    pub fn basis(shape: QuantumShape) -> Self {
        let mut terms = BTreeMap::new();
        let family = shape.family();
        terms.insert(shape, 1);
        QKClass { family, terms }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn terms(&self) -> impl Iterator<Item = (&QuantumShape, i64)> {
        self.terms.iter().map(|(s, &c)| (s, c))
    }

    pub fn coefficient(&self, shape: &QuantumShape) -> i64 {
        self.terms.get(shape).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, shape: QuantumShape, coeff: i64) {
        if coeff == 0 {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(shape) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if *o.get() == 0 {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &QKClass) -> Result<QKClass> {
        if self.family != other.family {
            return Err(Error::Domain("classes from different families".into()));
        }
        let mut out = self.clone();
        for (s, c) in other.terms() {
            out.add_term(s.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &QKClass) -> Result<QKClass> {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, k: i64) -> QKClass {
        if k == 0 {
            return QKClass::zero(self.family);
        }
        QKClass {
            family: self.family,
            terms: self.terms.iter().map(|(s, &c)| (s.clone(), c * k)).collect(),
        }
    }

    /// Multiply by q^steps: shift every key.
    pub fn mul_q(&self, steps: i64) -> Result<QKClass> {
        self.map_shapes(|s| s.shifted(steps, false))
    }

    /// Apply a shape map term-wise (used by the Seidel action and psi).
    pub fn map_shapes(&self, f: impl Fn(&QuantumShape) -> Result<QuantumShape>) -> Result<QKClass> {
        let mut out = QKClass::zero(self.family);
        for (s, c) in self.terms() {
            out.add_term(f(s)?, c);
        }
        Ok(out)
    }

    /// Keep only the q^0 part.
    pub fn classical_part(&self) -> QKClass {
        QKClass {
            family: self.family,
            terms: self.terms.iter().filter(|(s, _)| s.shift() == 0).map(|(s, &c)| (s.clone(), c)).collect(),
        }
    }

    /// q-exponents carrying non-zero terms.
    pub fn q_support(&self) -> Vec<i64> {
        let mut v: Vec<i64> = self.terms.keys().map(|s| s.shift()).collect();
        v.sort();
        v.dedup();
        v
    }

    /// The q-exponents of non-zero terms form an integer interval.
    pub fn q_support_is_interval(&self) -> bool {
        let s = self.q_support();
        match (s.first(), s.last()) {
            (Some(&lo), Some(&hi)) => (hi - lo + 1) as usize == s.len(),
            _ => true,
        }
    }

    // ----- JSON -------------------------------------------------------------

    pub fn to_json(&self) -> serde_json::Value {
        use serde_json::json;
        let terms: Vec<serde_json::Value> = self
            .terms()
            .map(|(s, c)| json!({ "q": s.shift(), "partition": s.mu(), "coeff": c }))
            .collect();
        match self.family {
            Family::GrA { m, n } => json!({ "family": "GrA", "m": m, "n": n, "terms": terms }),
            Family::OG { n } => json!({ "family": "OG", "n": n, "terms": terms }),
            Family::LG { n } => json!({ "family": "LG", "n": n, "terms": terms }),
        }
    }

    pub fn from_json(value: &serde_json::Value) -> Result<QKClass> {
        let obj = value.as_object().ok_or_else(|| Error::Parse("expected a JSON object".into()))?;
        let fam_name = obj.get("family").and_then(|v| v.as_str()).ok_or_else(|| Error::Parse("missing family".into()))?;
        let get_u32 = |name: &str| -> Result<u32> {
            obj.get(name)
                .and_then(|v| v.as_u64())
                .map(|x| x as u32)
                .ok_or_else(|| Error::Parse(format!("missing {name}")))
        };
        let family = match fam_name {
            "GrA" => Family::gr(get_u32("m")?, get_u32("n")?)?,
            "OG" => Family::og(get_u32("n")?)?,
            "LG" => Family::lg(get_u32("n")?)?,
            other => return Err(Error::Parse(format!("unknown family {other:?}"))),
        };
        let mut out = QKClass::zero(family);
        let terms = obj.get("terms").and_then(|v| v.as_array()).ok_or_else(|| Error::Parse("missing terms".into()))?;
        for t in terms {
            let q = t.get("q").and_then(|v| v.as_i64()).ok_or_else(|| Error::Parse("missing q".into()))?;
            let mu: Vec<u32> = t
                .get("partition")
                .and_then(|v| v.as_array())
                .ok_or_else(|| Error::Parse("missing partition".into()))?
                .iter()
                .map(|x| x.as_u64().map(|y| y as u32).ok_or_else(|| Error::Parse("bad partition".into())))
                .collect::<Result<_>>()?;
            let coeff = t.get("coeff").and_then(|v| v.as_i64()).ok_or_else(|| Error::Parse("missing coeff".into()))?;
            out.add_term(QuantumShape::new(family, q, mu)?, coeff);
        }
        Ok(out)
    }
}

impl fmt::Display for QKClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (s, c) in self.terms() {
            let mag = c.abs();
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut parts: Vec<String> = Vec::new();
            if mag != 1 {
                parts.push(mag.to_string());
            }
            match s.shift() {
                0 => {}
                1 => parts.push("q".into()),
                d => parts.push(format!("q^{d}")),
            }
            if !s.mu().is_empty() {
                let inner: Vec<String> = s.mu().iter().map(|x| x.to_string()).collect();
                parts.push(format!("O[{}]", inner.join(",")));
            }
            if parts.is_empty() {
                parts.push("1".into());
            }
            write!(f, "{}", parts.join("·"))?;
        }
        Ok(())
    }
}

/// Quantum Pieri product O^p * O^lambda.
pub fn pieri(p: i64, lam: &QuantumShape) -> Result<QKClass> {
    let family = lam.family();
    if p < 1 || p > family.max_special() as i64 {
        return Err(Error::Domain(format!(
            "p = {p} is outside the special range 1..={} of {family}",
            family.max_special()
        )));
    }
    let mut out = QKClass::zero(family);
    for nu in lam.candidates_above() {
        let theta = nu.skew(lam)?;
        let c = match family {
            Family::GrA { .. } => coeff_a(&theta, p)?,
            Family::OG { .. } => coeff_b(&theta, p)?,
            Family::LG { .. } => with_engine(|eng| eng.n_coeff(&theta, p))?,
        };
        out.add_term(nu, c);
    }
    Ok(out)
}

/// Linear extension of the Pieri product to classes.
pub fn pieri_class(p: i64, class: &QKClass) -> Result<QKClass> {
    let mut out = QKClass::zero(class.family());
    for (s, c) in class.terms() {
        out = out.add(&pieri(p, s)?.scale(c))?;
    }
    Ok(out)
}

/// Undeformed Pieri product O^p (.) O^mu for LG, truncated to the candidate
/// interval [mu, mu[1]].  The full undeformed product is an infinite q-series
/// whose tail telescopes away in (1 - q psi); every coefficient on the
/// interval is exact.
pub fn undeformed_pieri_lg(p: i64, mu: &QuantumShape) -> Result<QKClass> {
    let family = mu.family();
    let Family::LG { .. } = family else {
        return Err(Error::Unsupported("the undeformed product is implemented for LG".into()));
    };
    if p < 1 || p > family.max_special() as i64 {
        return Err(Error::Domain(format!(
            "p = {p} is outside the special range 1..={} of {family}",
            family.max_special()
        )));
    }
    let mut out = QKClass::zero(family);
    for nu in mu.candidates_above() {
        let theta = nu.skew(mu)?;
        let c = if theta.is_empty() {
            0
        } else {
            with_engine(|eng| eng.h_coeff(&theta, p))?
        };
        out.add_term(nu, c);
    }
    Ok(out)
}

/// Line neighborhood operator: q psi(O^lambda) = O^{lambda+}, extended
/// linearly.  Exponents may go negative.
pub fn psi(class: &QKClass) -> Result<QKClass> {
    let Family::LG { .. } = class.family() else {
        return Err(Error::Unsupported("psi is implemented for LG".into()));
    };
    class.map_shapes(|s| s.lambda_plus()?.shifted(-1, false))
}
