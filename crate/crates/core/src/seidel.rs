//! The Seidel group action.  Multiplication by a Seidel class permutes the
//! basis of QK(X)_q, acting on the strip/cylinder by a rigid motion.

use crate::error::{Error, Result};
use crate::family::Family;
use crate::ring::QKClass;
use crate::shape::{gra_canonical_box, gra_rotate_back_once, gra_rotate_once, QuantumShape};

/// A Seidel class in normal form.
///
/// * GrA: sigma^s q^d with 0 <= s < n, using sigma^n = q^{n-m} and
///   tau = sigma^{n-1} q^{1-(n-m)}.
/// * OG: row^k point^e with row = [X^{n-1}], row^2 = q, point^2 = row^n.
/// * LG: q^d point^e with point^2 = q^n.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeidelElement {
    GrA { m: u32, n: u32, sigma: u32, q: i64 },
    OG { n: u32, row: i64, point: bool },
    LG { n: u32, q: i64, point: bool },
}

/// Generator names accepted by the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    Sigma,
    Tau,
    Point,
    Row,
    Q,
}

impl SeidelElement {
    pub fn identity(family: Family) -> Self {
        match family {
            Family::GrA { m, n } => SeidelElement::GrA { m, n, sigma: 0, q: 0 },
            Family::OG { n } => SeidelElement::OG { n, row: 0, point: false },
            Family::LG { n } => SeidelElement::LG { n, q: 0, point: false },
        }
    }

    pub fn family(&self) -> Family {
        match *self {
            SeidelElement::GrA { m, n, .. } => Family::GrA { m, n },
            SeidelElement::OG { n, .. } => Family::OG { n },
            SeidelElement::LG { n, .. } => Family::LG { n },
        }
    }

    pub fn generator(family: Family, gen: Generator) -> Result<Self> {
        match (family, gen) {
            (Family::GrA { m, n }, Generator::Sigma) => Ok(SeidelElement::GrA { m, n, sigma: 1, q: 0 }),
            (Family::GrA { m, n }, Generator::Tau) => {
                // tau = sigma^{-1} q
                Ok(SeidelElement::GrA { m, n, sigma: n - 1, q: 1 - (n as i64 - m as i64) })
            }
            (Family::GrA { m, n }, Generator::Point) => Ok(SeidelElement::GrA { m, n, sigma: m, q: 0 }),
            (Family::GrA { m, n }, Generator::Q) => Ok(SeidelElement::GrA { m, n, sigma: 0, q: 1 }),
            (Family::OG { n }, Generator::Row) => Ok(SeidelElement::OG { n, row: 1, point: false }),
            (Family::OG { n }, Generator::Point) => Ok(SeidelElement::OG { n, row: 0, point: true }),
            (Family::OG { n }, Generator::Q) => Ok(SeidelElement::OG { n, row: 2, point: false }),
            (Family::LG { n }, Generator::Point) => Ok(SeidelElement::LG { n, q: 0, point: true }),
            (Family::LG { n }, Generator::Q) => Ok(SeidelElement::LG { n, q: 1, point: false }),
            _ => Err(Error::Unsupported(format!("{gen:?} is not a Seidel generator of {family}"))),
        }
    }

    pub fn compose(&self, other: &SeidelElement) -> Result<SeidelElement> {
        match (*self, *other) {
            (SeidelElement::GrA { m, n, sigma: s1, q: d1 }, SeidelElement::GrA { m: m2, n: n2, sigma: s2, q: d2 })
                if m == m2 && n == n2 =>
            {
                let mut s = s1 + s2;
                let mut d = d1 + d2;
                if s >= n {
                    s -= n;
                    d += n as i64 - m as i64; // sigma^n = q^{n-m}
                }
                Ok(SeidelElement::GrA { m, n, sigma: s, q: d })
            }
            (SeidelElement::OG { n, row: k1, point: e1 }, SeidelElement::OG { n: n2, row: k2, point: e2 }) if n == n2 => {
                let carry = if e1 && e2 { n as i64 } else { 0 }; // point^2 = row^n
                Ok(SeidelElement::OG { n, row: k1 + k2 + carry, point: e1 ^ e2 })
            }
            (SeidelElement::LG { n, q: d1, point: e1 }, SeidelElement::LG { n: n2, q: d2, point: e2 }) if n == n2 => {
                let carry = if e1 && e2 { n as i64 } else { 0 }; // point^2 = q^n
                Ok(SeidelElement::LG { n, q: d1 + d2 + carry, point: e1 ^ e2 })
            }
            _ => Err(Error::Domain("Seidel elements from different families".into())),
        }
    }

    pub fn inverse(&self) -> SeidelElement {
        match *self {
            SeidelElement::GrA { m, n, sigma, q } => {
                if sigma == 0 {
                    SeidelElement::GrA { m, n, sigma: 0, q: -q }
                } else {
                    SeidelElement::GrA { m, n, sigma: n - sigma, q: -q - (n as i64 - m as i64) }
                }
            }
            SeidelElement::OG { n, row, point } => {
                let k = if point { -row - n as i64 } else { -row };
                SeidelElement::OG { n, row: k, point }
            }
            SeidelElement::LG { n, q, point } => {
                let d = if point { -q - n as i64 } else { -q };
                SeidelElement::LG { n, q: d, point }
            }
        }
    }

    pub fn pow(&self, e: i64) -> SeidelElement {
        match *self {
            SeidelElement::GrA { m, n, sigma, q } => {
                let total = sigma as i64 * e;
                let s = total.rem_euclid(n as i64);
                let carry = (total - s) / n as i64 * (n as i64 - m as i64);
                SeidelElement::GrA { m, n, sigma: s as u32, q: q * e + carry }
            }
            SeidelElement::OG { n, row, point } => {
                let carry = if point { e.div_euclid(2) * n as i64 } else { 0 };
                SeidelElement::OG { n, row: row * e + carry, point: point && e.rem_euclid(2) == 1 }
            }
            SeidelElement::LG { n, q, point } => {
                let carry = if point { e.div_euclid(2) * n as i64 } else { 0 };
                SeidelElement::LG { n, q: q * e + carry, point: point && e.rem_euclid(2) == 1 }
            }
        }
    }

    /// Image of a box under the rigid motion of the strip/cylinder.
    pub fn act_on_box(&self, i: i64, j: i64) -> Result<(i64, i64)> {
        match *self {
            SeidelElement::GrA { m, n, sigma, q } => {
                let (ci, cj) = gra_canonical_box(m, n, i + sigma as i64 + q, j + q);
                Ok((ci, cj))
            }
            SeidelElement::OG { n, row, point } => {
                if !self.family().in_strip(i, j) {
                    return Err(Error::BoxOutsideStrip(i, j));
                }
                let (i, j) = if point { (j, i + n as i64) } else { (i, j) };
                Ok((i + row, j + row))
            }
            SeidelElement::LG { n, q, point } => {
                if !self.family().in_strip(i, j) {
                    return Err(Error::BoxOutsideStrip(i, j));
                }
                let (i, j) = if point { (j, i + n as i64) } else { (i, j) };
                Ok((i + q, j + q))
            }
        }
    }

    /// Image of a quantum shape (the ideal maps to an ideal).
    pub fn act_on_shape(&self, shape: &QuantumShape) -> Result<QuantumShape> {
        if shape.family() != self.family() {
            return Err(Error::Domain("Seidel element and shape families differ".into()));
        }
        match *self {
            SeidelElement::GrA { m, n, sigma, q } => {
                let mut seq = shape.gra_seq();
                let t = sigma as i64 + q;
                for _ in 0..t.abs() {
                    seq = if t > 0 {
                        gra_rotate_once(self.family(), &seq)
                    } else {
                        gra_rotate_back_once(self.family(), &seq)
                    };
                }
                for x in seq.iter_mut() {
                    *x += q;
                }
                QuantumShape::from_gra_boundary(m, n, &seq)
            }
            SeidelElement::OG { row, point, .. } => {
                let s = if point { shape.reflected()? } else { shape.clone() };
                s.shifted(row, true)
            }
            SeidelElement::LG { q, point, .. } => {
                let s = if point { shape.reflected()? } else { shape.clone() };
                s.shifted(q, false)
            }
        }
    }

    /// Multiply a QK class by this Seidel class: each basis term maps to a
    /// single basis term with the same coefficient.
    pub fn multiply(&self, class: &QKClass) -> Result<QKClass> {
        class.map_shapes(|shape| self.act_on_shape(shape))
    }

    /// Classical Schubert shape of this element, if it is q^0 times a
    /// Schubert class.
    pub fn classical_shape(&self) -> Result<QuantumShape> {
        let img = self.act_on_shape(&QuantumShape::identity(self.family()))?;
        if img.shift() != 0 {
            return Err(Error::Unsupported(format!("{self:?} is not a classical Seidel class")));
        }
        Ok(img)
    }

    /// q-exponent of the single-term product with a classical class, from the
    /// codimension balance deg_q * d = codim(w) + codim(u) - codim(wu).
    pub fn degree_on(&self, u: &QuantumShape) -> Result<i64> {
        if !u.is_classical() {
            return Err(Error::Domain("seidel_degree expects a classical shape".into()));
        }
        let w = self.classical_shape()?;
        let img = self.act_on_shape(u)?;
        let c1 = self.family().c1_degree();
        let num = w.size() + u.size() - img.size();
        if num % c1 != 0 {
            return Err(Error::Internal(format!(
                "codimension balance {num} is not divisible by the line degree {c1}"
            )));
        }
        let d = num / c1;
        if d != img.shift() {
            return Err(Error::Internal(format!(
                "codimension balance gives q^{d} but the poset action gives q^{}",
                img.shift()
            )));
        }
        Ok(d)
    }
}

/// Parse a word in the generators, e.g. "sigma^2*q^-1" or "point row^3".
pub fn parse_word(family: Family, word: &str) -> Result<SeidelElement> {
    let mut acc = SeidelElement::identity(family);
    for token in word.split(|c| c == '*' || c == ' ').filter(|t| !t.is_empty()) {
        let (name, exp) = match token.split_once('^') {
            Some((n, e)) => {
                let e: i64 = e.parse().map_err(|_| Error::Parse(format!("bad exponent in {token:?}")))?;
                (n, e)
            }
            None => (token, 1),
        };
        let gen = match name {
            "sigma" => Generator::Sigma,
            "tau" => Generator::Tau,
            "point" => Generator::Point,
            "row" => Generator::Row,
            "q" => Generator::Q,
            _ => return Err(Error::Parse(format!("unknown Seidel generator {name:?}"))),
        };
        let g = SeidelElement::generator(family, gen)?;
        acc = acc.compose(&g.pow(exp))?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn og_point_on_box() {
        let fam = Family::og(5).unwrap();
        let p = SeidelElement::generator(fam, Generator::Point).unwrap();
        assert_eq!(p.act_on_box(0, 4).unwrap(), (4, 5));
    }

    #[test]
    fn lg_q_translates() {
        let fam = Family::lg(4).unwrap();
        let q = SeidelElement::generator(fam, Generator::Q).unwrap();
        assert_eq!(q.act_on_box(1, 3).unwrap(), (2, 4));
    }

    #[test]
    fn identity_acts_trivially() {
        let fam = Family::gr(3, 7).unwrap();
        let e = SeidelElement::identity(fam);
        assert_eq!(e.act_on_box(2, 5).unwrap(), (2, 5));
        let s = QuantumShape::classical(fam, vec![3, 3, 1]).unwrap();
        assert_eq!(e.act_on_shape(&s).unwrap(), s);
    }

    #[test]
    fn gr24_sigma_on_shape() {
        let fam = Family::gr(2, 4).unwrap();
        let sigma = SeidelElement::generator(fam, Generator::Sigma).unwrap();
        let s = QuantumShape::classical(fam, vec![2, 1]).unwrap();
        let img = sigma.act_on_shape(&s).unwrap();
        assert_eq!((img.shift(), img.mu()), (1, &[1][..]));
        assert_eq!(sigma.degree_on(&s).unwrap(), 1);
    }

    #[test]
    fn group_relations_hold() {
        // GrA: sigma^m = tau^{n-m} = point, sigma*tau = q
        for (m, n) in [(2u32, 4u32), (2, 5), (3, 7)] {
            let fam = Family::gr(m, n).unwrap();
            let sigma = SeidelElement::generator(fam, Generator::Sigma).unwrap();
            let tau = SeidelElement::generator(fam, Generator::Tau).unwrap();
            let point = SeidelElement::generator(fam, Generator::Point).unwrap();
            let q = SeidelElement::generator(fam, Generator::Q).unwrap();
            assert_eq!(sigma.pow(m as i64), point);
            assert_eq!(tau.pow((n - m) as i64), point);
            assert_eq!(sigma.compose(&tau).unwrap(), q);
        }
        // OG: row^2 = q, point^2 = row^n
        for n in [4u32, 5, 8] {
            let fam = Family::og(n).unwrap();
            let row = SeidelElement::generator(fam, Generator::Row).unwrap();
            let point = SeidelElement::generator(fam, Generator::Point).unwrap();
            let q = SeidelElement::generator(fam, Generator::Q).unwrap();
            assert_eq!(row.pow(2), q);
            assert_eq!(point.pow(2), row.pow(n as i64));
        }
        // LG: point^2 = q^n
        for n in [2u32, 3, 7] {
            let fam = Family::lg(n).unwrap();
            let point = SeidelElement::generator(fam, Generator::Point).unwrap();
            let q = SeidelElement::generator(fam, Generator::Q).unwrap();
            assert_eq!(point.pow(2), q.pow(n as i64));
        }
    }

    #[test]
    fn degree_examples() {
        // identity element: d = 0 on anything classical
        let fam = Family::lg(4).unwrap();
        let e = SeidelElement::identity(fam);
        let u = QuantumShape::classical(fam, vec![3, 1]).unwrap();
        assert_eq!(e.degree_on(&u).unwrap(), 0);
        // LG point class: d = 0 on the identity, d = n on the point
        let point = SeidelElement::generator(fam, Generator::Point).unwrap();
        assert_eq!(point.degree_on(&QuantumShape::identity(fam)).unwrap(), 0);
        let top = QuantumShape::classical(fam, vec![4, 3, 2, 1]).unwrap();
        assert_eq!(point.degree_on(&top).unwrap(), 4);
        // q-powers are not classical Seidel classes
        let q = SeidelElement::generator(fam, Generator::Q).unwrap();
        assert!(q.degree_on(&u).is_err());
    }

    #[test]
    fn word_parsing() {
        let fam = Family::gr(2, 4).unwrap();
        let w = parse_word(fam, "sigma^2*q^-1").unwrap();
        let s = SeidelElement::generator(fam, Generator::Sigma).unwrap();
        let q = SeidelElement::generator(fam, Generator::Q).unwrap();
        assert_eq!(w, s.pow(2).compose(&q.pow(-1)).unwrap());
        assert!(parse_word(fam, "row").is_err());
    }
}
