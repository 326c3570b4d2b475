//! Schubert symbols for symplectic Grassmannians SG(m,2n), the matrix
//! diagram of a Richardson variety with its combinatorial statistics, the
//! perpendicular-image descriptor, curve-neighborhood symbols, and the
//! Pieri-type Gromov-Witten invariant of LG(n,2n).

use crate::coeffs::h;
use crate::error::{Error, Result};
use crate::family::Family;
use crate::shape::QuantumShape;

/// A Schubert symbol for SG(m,2n): an m-subset of [1,2n] with no two
/// elements summing to 2n+1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SchubertSymbol {
    n: u32,
    elems: Vec<u32>,
}

impl SchubertSymbol {
    pub fn new(n: u32, elems: Vec<u32>) -> Result<Self> {
        let mut elems = elems;
        elems.sort_unstable();
        let two_n = 2 * n;
        if elems.iter().any(|&p| p < 1 || p > two_n) {
            return Err(Error::Domain(format!("symbol entries must lie in [1,{two_n}]")));
        }
        if elems.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Domain("symbol entries must be distinct".into()));
        }
        for (k, &a) in elems.iter().enumerate() {
            for &b in &elems[k..] {
                if a + b == two_n + 1 {
                    return Err(Error::Domain(format!("{a} + {b} = 2n+1 is forbidden in a Schubert symbol")));
                }
            }
        }
        Ok(SchubertSymbol { n, elems })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn m(&self) -> usize {
        self.elems.len()
    }

    pub fn elems(&self) -> &[u32] {
        &self.elems
    }

    /// Bruhat order: componentwise comparison.
    pub fn leq(&self, other: &SchubertSymbol) -> Result<bool> {
        if self.n != other.n || self.m() != other.m() {
            return Err(Error::Domain("symbols of different types".into()));
        }
        Ok(self.elems.iter().zip(&other.elems).all(|(a, b)| a <= b))
    }

    /// Length: sum (p_i - i) - #{ i<j : p_i + p_j > 2n+1 }.
    pub fn length(&self) -> i64 {
        let two_n1 = 2 * self.n as i64 + 1;
        let base: i64 = self.elems.iter().enumerate().map(|(i, &p)| p as i64 - (i as i64 + 1)).sum();
        let mut cross = 0i64;
        for i in 0..self.elems.len() {
            for j in i + 1..self.elems.len() {
                if self.elems[i] as i64 + self.elems[j] as i64 > two_n1 {
                    cross += 1;
                }
            }
        }
        base - cross
    }
}

/// Border-path encoding: the Schubert symbol of the shape lambda in LG(n,2n).
pub fn shape_to_symbol(n: u32, lam: &[u32]) -> Result<SchubertSymbol> {
    if lam.windows(2).any(|w| w[0] <= w[1]) || lam.first().map_or(false, |&x| x > n) || lam.last().map_or(false, |&x| x == 0) {
        return Err(Error::InvalidPartition(format!("{lam:?} is not a strict partition with parts <= {n}")));
    }
    if lam.len() > n as usize {
        return Err(Error::InvalidPartition(format!("{lam:?} has more than {n} parts")));
    }
    let mut steps: Vec<bool> = Vec::with_capacity(n as usize); // true = horizontal
    let mut c = n as i64;
    for (k, &part) in lam.iter().enumerate() {
        let corner = part as i64 + k as i64; // lam_i + i - 1 with i = k+1
        for _ in corner..c {
            steps.push(true);
        }
        steps.push(false);
        c = corner;
    }
    // trailing horizontals down to the diagonal
    let ell = lam.len() as i64;
    for _ in ell..c {
        steps.push(true);
    }
    debug_assert_eq!(steps.len(), n as usize);
    let mut elems = Vec::with_capacity(n as usize);
    for (idx, &horizontal) in steps.iter().enumerate() {
        let k = idx as u32 + 1;
        elems.push(if horizontal { k } else { 2 * n + 1 - k });
    }
    SchubertSymbol::new(n, elems)
}

/// Inverse of `shape_to_symbol`; requires a symbol of SG(n,2n).
pub fn symbol_to_shape(sym: &SchubertSymbol) -> Result<Vec<u32>> {
    let n = sym.n;
    if sym.m() != n as usize {
        return Err(Error::Domain("shape decoding needs a symbol for SG(n,2n)".into()));
    }
    let mut lam = Vec::new();
    let mut c = n as i64;
    let mut row = 0i64;
    for k in 1..=n {
        if sym.elems.binary_search(&k).is_ok() {
            c -= 1;
        } else {
            row += 1;
            lam.push((c - row + 1) as u32);
        }
    }
    Ok(lam)
}

/// The matrix diagram M_P^Q of a Richardson variety and its statistics.
#[derive(Debug, Clone)]
pub struct MatrixDiagram {
    pub p: SchubertSymbol,
    pub q: SchubertSymbol,
    pub correlated_pairs: Vec<(usize, usize)>,
    pub dimension: i64,
    pub cuts: Vec<u32>,
    pub double_cuts: Vec<u32>,
    pub lone_stars: Vec<u32>,
    /// Components (a,b) in [0,n], in increasing order.
    pub components: Vec<(u32, u32)>,
    pub quadratic_components: Vec<(u32, u32)>,
    /// movable[k]: strictly fewer constraints than unassigned entries in row k.
    pub movable: Vec<bool>,
    pub solvable: Vec<bool>,
}

pub fn diagram(p: &SchubertSymbol, q: &SchubertSymbol) -> Result<MatrixDiagram> {
    if !q.leq(p)? {
        return Err(Error::Domain("diagram needs Q <= P in Bruhat order".into()));
    }
    let n = p.n;
    let two_n = 2 * n;
    let two_n1 = two_n as i64 + 1;
    let m = p.m();
    let ps = &p.elems;
    let qs = &q.elems;

    let mut correlated_pairs = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            if (qs[i] as i64 + qs[j] as i64) < two_n1 && two_n1 < (ps[i] as i64 + ps[j] as i64) {
                correlated_pairs.push((i, j));
            }
        }
    }
    let span: i64 = (0..m).map(|i| ps[i] as i64 - qs[i] as i64).sum();
    let dimension = span - correlated_pairs.len() as i64;

    let cuts: Vec<u32> = (0..=two_n)
        .filter(|&c| (0..m).all(|i| ps[i] <= c || c < qs[i]))
        .collect();
    let double_cuts: Vec<u32> = cuts.iter().cloned().filter(|&c| cuts.binary_search(&(two_n - c)).is_ok()).collect();
    let lone_stars: Vec<u32> = (0..m).filter(|&i| ps[i] == qs[i]).map(|i| ps[i]).collect();

    let inner: Vec<u32> = double_cuts.iter().cloned().filter(|&c| c <= n).collect();
    let mut components = Vec::new();
    for w in inner.windows(2) {
        components.push((w[0], w[1]));
    }
    if let Some(&last) = inner.last() {
        if last < n {
            components.push((last, n));
        }
    }

    let row_in_component = |i: usize, (a, b): (u32, u32)| -> bool {
        let (qi, pi) = (qs[i], ps[i]);
        if a < qi && pi <= b {
            return true;
        }
        if two_n - b < qi && pi <= two_n - a {
            return true;
        }
        b == n && a < qi && pi <= two_n - a
    };
    let quadratic_components: Vec<(u32, u32)> = components
        .iter()
        .cloned()
        .filter(|&(a, b)| {
            double_cuts.binary_search(&b).is_ok()
                && b - a >= 2
                && (0..m).filter(|&i| row_in_component(i, (a, b))).count() == (b - a) as usize
        })
        .collect();

    let constraints: Vec<usize> = (0..m)
        .map(|k| correlated_pairs.iter().filter(|&&(i, j)| i == k || j == k).count())
        .collect();
    let movable: Vec<bool> = (0..m).map(|k| (constraints[k] as i64) < ps[k] as i64 - qs[k] as i64).collect();
    let solvable: Vec<bool> = (0..m).map(|k| (constraints[k] as i64) <= ps[k] as i64 - qs[k] as i64).collect();

    Ok(MatrixDiagram {
        p: p.clone(),
        q: q.clone(),
        correlated_pairs,
        dimension,
        cuts,
        double_cuts,
        lone_stars,
        components,
        quadratic_components,
        movable,
        solvable,
    })
}

/// The complete-intersection descriptor of the perpendicular image: one
/// linear coordinate 2n+1-s per lone star s, one quadric per quadratic
/// component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PpqDescriptor {
    pub linear: Vec<u32>,
    pub quadratic: Vec<(u32, u32)>,
}

pub fn ppq_descriptor(p: &SchubertSymbol, q: &SchubertSymbol) -> Result<PpqDescriptor> {
    let d = diagram(p, q)?;
    let two_n1 = 2 * p.n + 1;
    let mut linear: Vec<u32> = d.lone_stars.iter().map(|&s| two_n1 - s).collect();
    linear.sort_unstable();
    Ok(PpqDescriptor { linear, quadratic: d.quadratic_components })
}

/// Curve-neighborhood symbols: Gamma_d(X_lambda, X^mu) = X_{P'}^{Q'} in
/// SG(n-d, 2n), with P' = {p_{d+1},...,p_n} and Q' = {q_1,...,q_{n-d}}.
pub fn curve_nbhd_symbols(lam: &[u32], mu: &[u32], d: i64, n: u32) -> Result<(SchubertSymbol, SchubertSymbol)> {
    if d < 0 || d > n as i64 {
        return Err(Error::Domain(format!("degree {d} outside [0,{n}]")));
    }
    let fam = Family::lg(n)?;
    let lam_shape = QuantumShape::classical(fam, lam.to_vec())?.shifted(d, false)?;
    let mu_shape = QuantumShape::classical(fam, mu.to_vec())?;
    if !lam_shape.contains(&mu_shape)? {
        return Err(Error::Domain("empty curve neighborhood: mu is not contained in lambda[d]".into()));
    }
    let p = shape_to_symbol(n, lam)?;
    let q = shape_to_symbol(n, mu)?;
    let d = d as usize;
    let p_prime = SchubertSymbol::new(n, p.elems[d..].to_vec())?;
    let q_prime = SchubertSymbol::new(n, q.elems[..n as usize - d].to_vec())?;
    if !q_prime.leq(&p_prime)? {
        return Err(Error::Internal("curve-neighborhood symbols violate Q' <= P'".into()));
    }
    Ok((p_prime, q_prime))
}

/// Pieri-type K-theoretic Gromov-Witten invariant of LG(n,2n):
/// I_d(O_lambda, O^mu, O^p) = h(N(theta), R(theta) - p) with
/// theta = lambda[d]/mu, and 1 when R(theta) = n+1.
pub fn gw_pieri(lam: &[u32], mu: &[u32], d: i64, p: i64, n: u32) -> Result<i64> {
    if p < 1 || p > n as i64 {
        return Err(Error::Domain(format!("p = {p} outside the special range 1..={n}")));
    }
    if d < 0 {
        return Err(Error::Domain("gw_pieri needs d >= 0".into()));
    }
    let fam = Family::lg(n)?;
    let lam_shape = QuantumShape::classical(fam, lam.to_vec())?.shifted(d, false)?;
    let mu_shape = QuantumShape::classical(fam, mu.to_vec())?;
    if !lam_shape.contains(&mu_shape)? {
        return Ok(0);
    }
    let theta = lam_shape.skew(&mu_shape)?;
    let r = theta.max_rim() as i64;
    if r == n as i64 + 1 {
        return Ok(1);
    }
    let nn = theta.n_both_diagonals()? as i64;
    h(nn, r - p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symbol_validation() {
        assert!(SchubertSymbol::new(6, vec![2, 3, 8, 9]).is_ok());
        // 4 + 9 = 13 = 2n+1 for n = 6
        assert!(SchubertSymbol::new(6, vec![4, 9]).is_err());
    }

    #[test]
    fn lg714_symbol_example() {
        let sym = shape_to_symbol(7, &[7, 4, 2, 1]).unwrap();
        assert_eq!(sym.elems(), &[2, 3, 5, 8, 9, 11, 14]);
        assert_eq!(symbol_to_shape(&sym).unwrap(), vec![7, 4, 2, 1]);
        assert_eq!(sym.length(), 14);
    }

    #[test]
    fn empty_and_point_symbols() {
        // The empty shape indexes the full variety: codim 0, symbol {1..n}.
        let sym = shape_to_symbol(5, &[]).unwrap();
        assert_eq!(sym.elems(), &[1, 2, 3, 4, 5]);
        assert_eq!(sym.length(), 0);
        // The full staircase is the point class.
        let sym = shape_to_symbol(4, &[4, 3, 2, 1]).unwrap();
        assert_eq!(sym.elems(), &[5, 6, 7, 8]);
        assert_eq!(sym.length(), Family::lg(4).unwrap().dim());
    }

    #[test]
    fn round_trip_all_shapes() {
        for n in 1..=8u32 {
            let fam = Family::lg(n).unwrap();
            for s in QuantumShape::all_classical(fam) {
                let sym = shape_to_symbol(n, s.mu()).unwrap();
                assert_eq!(symbol_to_shape(&sym).unwrap(), s.mu());
                assert_eq!(sym.length(), s.size());
            }
        }
    }

    #[test]
    fn sg412_dimension_example() {
        let q = SchubertSymbol::new(6, vec![2, 3, 8, 9]).unwrap();
        let p = SchubertSymbol::new(6, vec![5, 7, 10, 12]).unwrap();
        let d = diagram(&p, &q).unwrap();
        let span: i64 = (0..4).map(|i| p.elems()[i] as i64 - q.elems()[i] as i64).sum();
        assert_eq!(span, 12);
        assert_eq!(d.correlated_pairs.len(), 4);
        assert_eq!(d.dimension, 8);
    }

    #[test]
    fn sg820_components_example() {
        let q = SchubertSymbol::new(10, vec![1, 2, 4, 6, 9, 11, 16, 18]).unwrap();
        let p = SchubertSymbol::new(10, vec![2, 3, 7, 8, 11, 12, 16, 20]).unwrap();
        let d = diagram(&p, &q).unwrap();
        assert_eq!(d.components, vec![(0, 3), (3, 8), (8, 10)]);
        assert_eq!(d.lone_stars, vec![16]);
        assert_eq!(d.quadratic_components, vec![(0, 3)]);
        let desc = ppq_descriptor(&p, &q).unwrap();
        assert_eq!(desc.linear, vec![5]);
        assert_eq!(desc.quadratic, vec![(0, 3)]);
    }

    #[test]
    fn equal_symbols_give_dimension_zero() {
        let p = SchubertSymbol::new(6, vec![2, 3, 8, 9]).unwrap();
        let d = diagram(&p, &p).unwrap();
        assert_eq!(d.dimension, 0);
        assert_eq!(d.lone_stars.len(), 4);
        assert!(d.lone_stars.iter().all(|&s| p.elems().contains(&s)));
    }

    #[test]
    fn skew2m_curve_neighborhood() {
        let (p, q) = curve_nbhd_symbols(&[11, 8, 6, 3, 1], &[12, 11, 9, 6, 5], 2, 12).unwrap();
        assert_eq!(p.elems(), &[4, 6, 8, 9, 11, 13, 15, 18, 20, 23]);
        assert_eq!(q.elems(), &[3, 5, 6, 9, 10, 11, 12, 17, 18, 21]);
        let d = diagram(&p, &q).unwrap();
        assert_eq!(d.lone_stars, vec![9]);
        assert_eq!(d.quadratic_components, vec![(4, 8)]);
        let movable: Vec<usize> = d.movable.iter().enumerate().filter(|(_, &b)| b).map(|(k, _)| k + 1).collect();
        assert_eq!(movable, vec![6, 7, 10]);
    }

    #[test]
    fn curve_nbhd_degenerate_degrees() {
        // d = 0 keeps the symbols; d = n empties them.
        let (p, q) = curve_nbhd_symbols(&[2, 1], &[2, 1], 0, 3).unwrap();
        assert_eq!(p, shape_to_symbol(3, &[2, 1]).unwrap());
        assert_eq!(q, shape_to_symbol(3, &[2, 1]).unwrap());
        let (p, q) = curve_nbhd_symbols(&[2, 1], &[3, 2, 1], 3, 3).unwrap();
        assert_eq!(p.m(), 0);
        assert_eq!(q.m(), 0);
    }

    #[test]
    fn gw_pieri_values() {
        // LG(12,24) example: R = 10, N = 1.
        assert_eq!(gw_pieri(&[11, 8, 6, 3, 1], &[12, 11, 9, 6, 5], 2, 10, 12).unwrap(), 2);
        assert_eq!(gw_pieri(&[11, 8, 6, 3, 1], &[12, 11, 9, 6, 5], 2, 11, 12).unwrap(), 0);
        // mu = lambda, d = 0: h(0, -p) = 0
        assert_eq!(gw_pieri(&[3, 1], &[3, 1], 0, 1, 4).unwrap(), 0);
        // mu not contained in lambda[d]
        assert_eq!(gw_pieri(&[1], &[4, 3], 0, 1, 4).unwrap(), 0);
        // large d gives a full rim: invariant 1
        assert_eq!(gw_pieri(&[1], &[1], 3, 2, 3).unwrap(), 1);
    }

    #[test]
    fn bruhat_antisymmetry() {
        let p = SchubertSymbol::new(6, vec![2, 3, 8, 9]).unwrap();
        let q = SchubertSymbol::new(6, vec![2, 3, 8, 9]).unwrap();
        assert!(p.leq(&q).unwrap() && q.leq(&p).unwrap() && p == q);
    }
}
