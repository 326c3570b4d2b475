//! Skew shapes (finite differences of quantum shapes) and their statistics.

use crate::error::{Error, Result};
use std::collections::{BTreeSet, HashMap, VecDeque};

pub type BoxPos = (i64, i64);

/// Where a skew shape lives.  `LgInf` is the half-plane { i <= j } with only
/// the south-west diagonal; it hosts the coefficients that ignore the
/// north-east diagonal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Ambient {
    GrA { m: u32, n: u32 },
    OG { n: u32 },
    LG { n: u32 },
    LgInf,
}

impl Ambient {
    fn sw_offset(&self) -> Option<i64> {
        match *self {
            Ambient::LG { .. } | Ambient::LgInf => Some(0),
            Ambient::OG { .. } => Some(1),
            Ambient::GrA { .. } => None,
        }
    }

    fn ne_offset(&self) -> Option<i64> {
        match *self {
            Ambient::LG { n } => Some(n as i64),
            Ambient::OG { n } => Some(n as i64 - 1),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewShape {
    ambient: Ambient,
    boxes: BTreeSet<BoxPos>,
}

/// Full statistics record returned by `stats`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewStats {
    pub size: usize,
    pub is_rim: bool,
    pub components: usize,
    pub r_rows: usize,
    pub is_horizontal_strip: bool,
    /// Size of a maximal rim; None for GrA (no diagonal statistics).
    pub max_rim: Option<usize>,
    /// Components disjoint from both diagonals; None for GrA/LgInf.
    pub n_both: Option<usize>,
    /// Components disjoint from the SW diagonal; None for GrA.
    pub n_prime: Option<usize>,
    /// max(n_prime - 1, 0); None for GrA or when empty.
    pub n_prime_q: Option<usize>,
}

/// The north-east arm decomposition of a non-empty skew shape.
#[derive(Debug, Clone)]
pub struct NeArm {
    pub psi: SkewShape,
    pub theta_hat: SkewShape,
    pub arm_is_row: bool,
    pub arm_is_column: bool,
    pub connected: bool,
}

impl SkewShape {
    /// Build from explicit boxes, checking order-convexity (the defining
    /// property of differences of ideals) and strip membership.
    pub fn from_boxes(ambient: Ambient, boxes: BTreeSet<BoxPos>) -> Result<Self> {
        for &(i, j) in &boxes {
            let ok = match ambient {
                Ambient::GrA { m, .. } => i >= 1 && i <= m as i64,
                Ambient::OG { n } => i < j && j < i + n as i64,
                Ambient::LG { n } => i <= j && j <= i + n as i64,
                Ambient::LgInf => i <= j,
            };
            if !ok {
                return Err(Error::BoxOutsideStrip(i, j));
            }
        }
        if !matches!(ambient, Ambient::GrA { .. }) {
            for &a in &boxes {
                for &b in &boxes {
                    if a.0 <= b.0 && a.1 <= b.1 {
                        for i in a.0..=b.0 {
                            for j in a.1..=b.1 {
                                let in_strip = match ambient {
                                    Ambient::OG { n } => i < j && j < i + n as i64,
                                    Ambient::LG { n } => i <= j && j <= i + n as i64,
                                    Ambient::LgInf => i <= j,
                                    Ambient::GrA { .. } => unreachable!(),
                                };
                                if in_strip && !boxes.contains(&(i, j)) {
                                    return Err(Error::InvalidIdeal(format!(
                                        "box set is not order-convex at ({i},{j})"
                                    )));
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(SkewShape { ambient, boxes })
    }

    pub(crate) fn from_boxes_unchecked(ambient: Ambient, boxes: BTreeSet<BoxPos>) -> Result<Self> {
        Ok(SkewShape { ambient, boxes })
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn boxes(&self) -> &BTreeSet<BoxPos> {
        &self.boxes
    }

    pub fn size(&self) -> usize {
        self.boxes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boxes.is_empty()
    }

    /// Reinterpret an LG skew shape inside the half-plane (drops the NE diagonal).
    pub fn forget_ne_diagonal(&self) -> SkewShape {
        SkewShape { ambient: Ambient::LgInf, boxes: self.boxes.clone() }
    }

    fn with_boxes(&self, boxes: BTreeSet<BoxPos>) -> SkewShape {
        SkewShape { ambient: self.ambient, boxes }
    }

    // ----- diagonals ------------------------------------------------------

    pub fn on_sw_diagonal(&self, b: BoxPos) -> bool {
        match self.ambient.sw_offset() {
            Some(off) => b.1 - b.0 == off,
            None => false,
        }
    }

    pub fn on_ne_diagonal(&self, b: BoxPos) -> bool {
        match self.ambient.ne_offset() {
            Some(off) => b.1 - b.0 == off,
            None => false,
        }
    }

    pub fn meets_sw_diagonal(&self) -> bool {
        self.boxes.iter().any(|&b| self.on_sw_diagonal(b))
    }

    pub fn ne_diag_box_count(&self) -> usize {
        self.boxes.iter().filter(|&&b| self.on_ne_diagonal(b)).count()
    }

    // ----- components and rims ---------------------------------------------

    /// Connected components under edge-adjacency (|di| + |dj| = 1).
    pub fn components(&self) -> Vec<BTreeSet<BoxPos>> {
        let mut seen: BTreeSet<BoxPos> = BTreeSet::new();
        let mut out = Vec::new();
        for &start in &self.boxes {
            if seen.contains(&start) {
                continue;
            }
            let mut comp = BTreeSet::new();
            let mut queue = VecDeque::new();
            queue.push_back(start);
            seen.insert(start);
            while let Some((i, j)) = queue.pop_front() {
                comp.insert((i, j));
                for nb in [(i - 1, j), (i + 1, j), (i, j - 1), (i, j + 1)] {
                    if self.boxes.contains(&nb) && seen.insert(nb) {
                        queue.push_back(nb);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    /// No box strictly south and strictly east of another box.
    pub fn is_rim(&self) -> bool {
        let v: Vec<BoxPos> = self.boxes.iter().cloned().collect();
        for (k, &a) in v.iter().enumerate() {
            for &b in &v[k + 1..] {
                if a.0 < b.0 && a.1 < b.1 {
                    return false;
                }
            }
        }
        true
    }

    /// Size of a maximal rim contained in the shape (max antichain for the
    /// strict south-east order, via minimum chain cover).
    pub fn max_rim(&self) -> usize {
        let v: Vec<BoxPos> = self.boxes.iter().cloned().collect();
        let k = v.len();
        if k == 0 {
            return 0;
        }
        let adj: Vec<Vec<usize>> = v
            .iter()
            .map(|&a| {
                v.iter()
                    .enumerate()
                    .filter(|(_, &b)| a.0 < b.0 && a.1 < b.1)
                    .map(|(idx, _)| idx)
                    .collect()
            })
            .collect();
        let mut match_right: Vec<Option<usize>> = vec![None; k];
        let mut matched = 0usize;
        for u in 0..k {
            let mut visited = vec![false; k];
            if kuhn(u, &adj, &mut visited, &mut match_right) {
                matched += 1;
            }
        }
        k - matched
    }

    pub fn r_rows(&self) -> usize {
        self.boxes.iter().map(|&(i, _)| i).collect::<BTreeSet<_>>().len()
    }

    /// At most one box per column; GrA columns are the cylinder columns
    /// (residues of j modulo n-m), LG/OG columns are plain columns.
    pub fn is_horizontal_strip(&self) -> bool {
        match self.ambient {
            Ambient::GrA { m, n } => {
                let width = (n - m) as i64;
                let classes: BTreeSet<i64> = self.boxes.iter().map(|&(_, j)| j.rem_euclid(width)).collect();
                classes.len() == self.boxes.len()
            }
            _ => {
                let cols: BTreeSet<i64> = self.boxes.iter().map(|&(_, j)| j).collect();
                cols.len() == self.boxes.len()
            }
        }
    }

    fn count_components_disjoint(&self, sw: bool, ne: bool) -> usize {
        self.components()
            .iter()
            .filter(|comp| {
                let hits_sw = sw && comp.iter().any(|&b| self.on_sw_diagonal(b));
                let hits_ne = ne && comp.iter().any(|&b| self.on_ne_diagonal(b));
                !hits_sw && !hits_ne
            })
            .count()
    }

    /// Components disjoint from both diagonals (LG/OG ambient required).
    pub fn n_both_diagonals(&self) -> Result<usize> {
        match self.ambient {
            Ambient::LG { .. } | Ambient::OG { .. } => Ok(self.count_components_disjoint(true, true)),
            _ => Err(Error::Domain("N(theta) needs a strip with two diagonals".into())),
        }
    }

    /// Components disjoint from the SW diagonal.
    pub fn n_prime(&self) -> Result<usize> {
        match self.ambient {
            Ambient::GrA { .. } => Err(Error::Domain("N'(theta) is undefined for GrA".into())),
            _ => Ok(self.count_components_disjoint(true, false)),
        }
    }

    pub fn n_prime_q(&self) -> Result<usize> {
        Ok(self.n_prime()?.saturating_sub(1))
    }

    pub fn stats(&self) -> SkewStats {
        let gra = matches!(self.ambient, Ambient::GrA { .. });
        SkewStats {
            size: self.size(),
            is_rim: self.is_rim(),
            components: self.components().len(),
            r_rows: self.r_rows(),
            is_horizontal_strip: self.is_horizontal_strip(),
            max_rim: if gra { None } else { Some(self.max_rim()) },
            n_both: match self.ambient {
                Ambient::LG { .. } | Ambient::OG { .. } => Some(self.count_components_disjoint(true, true)),
                _ => None,
            },
            n_prime: if gra { None } else { Some(self.count_components_disjoint(true, false)) },
            n_prime_q: if gra || self.is_empty() {
                None
            } else {
                Some(self.count_components_disjoint(true, false).saturating_sub(1))
            },
        }
    }

    // ----- derived subshapes ------------------------------------------------

    /// Maximal boxes; for skew shapes these are exactly the boxes with no box
    /// immediately right or below.
    pub fn maximal_boxes(&self) -> Vec<BoxPos> {
        self.boxes
            .iter()
            .cloned()
            .filter(|&(i, j)| !self.boxes.contains(&(i + 1, j)) && !self.boxes.contains(&(i, j + 1)))
            .collect()
    }

    /// Remove all south-east corners.
    pub fn theta_prime(&self) -> SkewShape {
        let max: BTreeSet<BoxPos> = self.maximal_boxes().into_iter().collect();
        self.with_boxes(self.boxes.difference(&max).cloned().collect())
    }

    /// theta' plus the north-east box Q.
    pub fn theta_prime_q(&self) -> Result<SkewShape> {
        let q = self.ne_box().ok_or_else(|| Error::Domain("theta'_q needs a non-empty shape".into()))?;
        let mut boxes = self.theta_prime().boxes;
        boxes.insert(q);
        Ok(self.with_boxes(boxes))
    }

    /// Remove all maximal boxes that are not on the NE diagonal.
    pub fn theta_circ(&self) -> Result<SkewShape> {
        if self.ambient.ne_offset().is_none() {
            return Err(Error::Domain("theta-circ needs a strip with an NE diagonal".into()));
        }
        let remove: BTreeSet<BoxPos> = self
            .maximal_boxes()
            .into_iter()
            .filter(|&b| !self.on_ne_diagonal(b))
            .collect();
        Ok(self.with_boxes(self.boxes.difference(&remove).cloned().collect()))
    }

    /// Remove the maximal box on the NE diagonal, if any, plus the boxes in
    /// its row that have no box immediately below them.
    pub fn theta_minus(&self) -> Result<SkewShape> {
        if self.ambient.ne_offset().is_none() {
            return Err(Error::Domain("theta-minus needs a strip with an NE diagonal".into()));
        }
        let diag_max = self.maximal_boxes().into_iter().find(|&b| self.on_ne_diagonal(b));
        let Some((qi, qj)) = diag_max else {
            return Ok(self.clone());
        };
        let mut remove: BTreeSet<BoxPos> = BTreeSet::new();
        remove.insert((qi, qj));
        for &(i, j) in &self.boxes {
            if i == qi && !self.boxes.contains(&(i + 1, j)) {
                remove.insert((i, j));
            }
        }
        Ok(self.with_boxes(self.boxes.difference(&remove).cloned().collect()))
    }

    // ----- north-east arm ----------------------------------------------------

    /// The unique box with minimal row, then maximal column.
    pub fn ne_box(&self) -> Option<BoxPos> {
        self.boxes.iter().cloned().min_by_key(|&(i, j)| (i, -j))
    }

    pub fn ne_arm(&self) -> Result<NeArm> {
        let q = self.ne_box().ok_or_else(|| Error::Domain("north-east arm of the empty shape".into()))?;
        let (qi, qj) = q;
        let max_i = self.boxes.iter().map(|b| b.0).max().unwrap();
        let min_j = self.boxes.iter().map(|b| b.1).min().unwrap();
        let max_side = (max_i - qi).max(qj - min_j) + 2;
        let mut best: BTreeSet<BoxPos> = [q].into_iter().collect();
        for s in 2..=max_side {
            let inter: BTreeSet<BoxPos> = self
                .boxes
                .iter()
                .cloned()
                .filter(|&(i, j)| i >= qi && i <= qi + s - 1 && j <= qj && j >= qj - s + 1)
                .collect();
            let rows: BTreeSet<i64> = inter.iter().map(|b| b.0).collect();
            let cols: BTreeSet<i64> = inter.iter().map(|b| b.1).collect();
            if rows.len() > 1 && cols.len() > 1 {
                break;
            }
            best = inter;
        }
        let psi = self.with_boxes(best.clone());
        let hat = self.with_boxes(self.boxes.difference(&best).cloned().collect());
        let connected = psi.boxes.iter().any(|&(i, j)| {
            [(i - 1, j), (i + 1, j), (i, j - 1), (i, j + 1)]
                .iter()
                .any(|nb| hat.boxes.contains(nb))
        });
        Ok(NeArm {
            psi,
            theta_hat: hat,
            arm_is_row: !self.boxes.contains(&(qi + 1, qj)),
            arm_is_column: !self.boxes.contains(&(qi, qj - 1)),
            connected,
        })
    }

    /// All lower order ideals phi of this shape (as a poset) with
    /// floor <= phi, optionally excluding the full shape.
    pub fn lower_ideals_containing(&self, floor: &SkewShape, proper: bool) -> Vec<SkewShape> {
        let extra: Vec<BoxPos> = self.boxes.difference(&floor.boxes).cloned().collect();
        let mut out = Vec::new();
        let k = extra.len();
        for mask in 0u64..(1u64 << k) {
            if proper && mask == (1u64 << k) - 1 {
                continue;
            }
            let mut boxes = floor.boxes.clone();
            for (idx, &b) in extra.iter().enumerate() {
                if mask & (1 << idx) != 0 {
                    boxes.insert(b);
                }
            }
            // downward closed within the shape
            let ok = boxes.iter().all(|&(i, j)| {
                let below_ok = !(self.boxes.contains(&(i - 1, j)) && !boxes.contains(&(i - 1, j)));
                let left_ok = !(self.boxes.contains(&(i, j - 1)) && !boxes.contains(&(i, j - 1)));
                below_ok && left_ok
            });
            if ok {
                out.push(self.with_boxes(boxes));
            }
        }
        out
    }

    /// Translation-normalized boxes, for memo keys.  Diagonal translation
    /// preserves both diagonal distances.
    pub fn normalized_key(&self) -> Vec<BoxPos> {
        let t = self.boxes.iter().map(|b| b.0).min().unwrap_or(0);
        self.boxes.iter().map(|&(i, j)| (i - t, j - t)).collect()
    }

    /// A row of boxes (all in one row)?
    pub fn is_single_row(&self) -> bool {
        self.boxes.iter().map(|b| b.0).collect::<BTreeSet<_>>().len() <= 1
    }

    pub fn is_single_column(&self) -> bool {
        self.boxes.iter().map(|b| b.1).collect::<BTreeSet<_>>().len() <= 1
    }

    /// Boxes ordered along the rim from north-east to south-west.
    pub fn rim_order(&self) -> Vec<BoxPos> {
        let mut v: Vec<BoxPos> = self.boxes.iter().cloned().collect();
        v.sort_by_key(|&(i, j)| (i, -j));
        v
    }
}

fn kuhn(u: usize, adj: &[Vec<usize>], visited: &mut [bool], match_right: &mut [Option<usize>]) -> bool {
    for &w in &adj[u] {
        if visited[w] {
            continue;
        }
        visited[w] = true;
        if match_right[w].is_none() || kuhn(match_right[w].unwrap(), adj, visited, match_right) {
            match_right[w] = Some(u);
            return true;
        }
    }
    false
}

/// Index map box -> position in rim order; used by the tableau enumerator.
pub(crate) fn index_map(order: &[BoxPos]) -> HashMap<BoxPos, usize> {
    order.iter().enumerate().map(|(k, &b)| (b, k)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lg_shape(n: u32, boxes: &[BoxPos]) -> SkewShape {
        SkewShape::from_boxes(Ambient::LG { n }, boxes.iter().cloned().collect()).unwrap()
    }

    #[test]
    fn empty_stats() {
        let s = lg_shape(5, &[]);
        let st = s.stats();
        assert_eq!(st.size, 0);
        assert_eq!(st.components, 0);
        assert_eq!(st.max_rim, Some(0));
        assert_eq!(st.n_both, Some(0));
    }

    #[test]
    fn two_by_two_square_is_not_a_rim() {
        let s = lg_shape(8, &[(1, 3), (1, 4), (2, 3), (2, 4)]);
        assert!(!s.is_rim());
        assert_eq!(s.max_rim(), 3);
    }

    #[test]
    fn skew2m_example_stats() {
        // LG(12,24), theta = (11,8,6,3,1)[2] / (12,11,9,6,5): R = 10, N = 1.
        use crate::{Family, QuantumShape};
        let fam = Family::lg(12).unwrap();
        let lam = QuantumShape::classical(fam, vec![11, 8, 6, 3, 1]).unwrap().shifted(2, false).unwrap();
        let mu = QuantumShape::classical(fam, vec![12, 11, 9, 6, 5]).unwrap();
        let theta = lam.skew(&mu).unwrap();
        assert_eq!(theta.size(), 12);
        assert_eq!(theta.max_rim(), 10);
        assert_eq!(theta.n_both_diagonals().unwrap(), 1);
    }

    #[test]
    fn max_rim_matches_brute_force() {
        // exponential oracle on all subsets
        fn brute(s: &SkewShape) -> usize {
            let v: Vec<BoxPos> = s.boxes().iter().cloned().collect();
            let mut best = 0;
            for mask in 0u32..(1 << v.len()) {
                let sel: Vec<BoxPos> = v
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask & (1 << k) != 0)
                    .map(|(_, &b)| b)
                    .collect();
                let rim = sel.iter().all(|&a| sel.iter().all(|&b| !(a.0 < b.0 && a.1 < b.1)));
                if rim {
                    best = best.max(sel.len());
                }
            }
            best
        }
        let shapes = [
            lg_shape(6, &[(1, 3), (1, 4), (2, 3), (2, 4), (3, 3)]),
            lg_shape(6, &[(1, 5), (2, 4), (2, 5), (3, 3), (3, 4), (4, 4)]),
            lg_shape(12, &[(1, 6), (1, 7), (2, 5), (2, 6), (2, 7), (3, 5), (3, 6), (4, 5)]),
        ];
        for s in &shapes {
            assert_eq!(s.max_rim(), brute(s), "shape {:?}", s.boxes());
        }
    }

    #[test]
    fn derived_subshape_examples() {
        // single box off both diagonals
        let s = lg_shape(6, &[(1, 3)]);
        assert!(s.theta_prime().is_empty());
        assert!(s.theta_circ().unwrap().is_empty());
        assert_eq!(s.theta_minus().unwrap(), s);
        // single box on the NE diagonal
        let s = lg_shape(6, &[(1, 7)]);
        assert_eq!(s.theta_circ().unwrap(), s);
        assert!(s.theta_minus().unwrap().is_empty());
        // row of 3 ending on the NE diagonal, nothing below
        let s = lg_shape(6, &[(1, 5), (1, 6), (1, 7)]);
        assert!(s.theta_minus().unwrap().is_empty());
        // theta'_q on the empty shape errors
        assert!(lg_shape(6, &[]).theta_prime_q().is_err());
    }

    #[test]
    fn ne_arm_examples() {
        // single box: both row and column
        let s = lg_shape(6, &[(2, 4)]);
        let arm = s.ne_arm().unwrap();
        assert!(arm.arm_is_row && arm.arm_is_column);
        assert!(arm.theta_hat.is_empty());
        // column of 2 atop row of 2, Q at top, no box left of Q
        let s = lg_shape(8, &[(0, 5), (1, 5), (2, 4), (2, 5)]);
        let arm = s.ne_arm().unwrap();
        assert!(arm.arm_is_column && !arm.arm_is_row);
        assert_eq!(arm.psi.size(), 2);
        assert!(arm.connected);
        // non-rim: neither row nor column
        let s = lg_shape(8, &[(1, 3), (1, 4), (2, 3), (2, 4)]);
        let arm = s.ne_arm().unwrap();
        assert!(!arm.arm_is_row && !arm.arm_is_column);
    }

    #[test]
    fn gra_horizontal_strip_uses_cylinder_columns() {
        // Gr(3,7): (1,6) and (3,2) share a cylinder column (mod 4)
        let amb = Ambient::GrA { m: 3, n: 7 };
        let s = SkewShape::from_boxes(amb, [(1, 4), (1, 5), (1, 6), (3, 2)].into_iter().collect()).unwrap();
        assert!(!s.is_horizontal_strip());
        let s = SkewShape::from_boxes(amb, [(1, 4), (1, 5), (3, 2)].into_iter().collect()).unwrap();
        assert!(s.is_horizontal_strip());
        assert_eq!(s.r_rows(), 2);
    }
}
