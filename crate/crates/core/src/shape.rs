//! Quantum shapes: lower order ideals in the strip/cylinder poset, stored in
//! the canonical form (q-shift d, classical partition mu).

use crate::error::{Error, Result};
use crate::family::Family;
use crate::skew::{Ambient, SkewShape};
use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

/// A quantum shape, i.e. the order ideal of the basis element q^d O^mu.
///
/// * GrA: `mu` is a partition in the m x (n-m) rectangle.
/// * OG:  `mu` is a strict partition with mu_1 <= n-1.
/// * LG:  `mu` is a strict partition with mu_1 <= n.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuantumShape {
    family: Family,
    shift: i64,
    mu: Vec<u32>,
}

fn is_strict(mu: &[u32]) -> bool {
    mu.windows(2).all(|w| w[0] > w[1]) && mu.last().map_or(true, |&x| x > 0)
}

fn is_weakly_decreasing(mu: &[u32]) -> bool {
    mu.windows(2).all(|w| w[0] >= w[1])
}

impl QuantumShape {
    pub fn new(family: Family, shift: i64, mu: Vec<u32>) -> Result<Self> {
        let mut mu = mu;
        while mu.last() == Some(&0) {
            mu.pop();
        }
        match family {
            Family::GrA { m, n } => {
                if !is_weakly_decreasing(&mu) || mu.len() > m as usize || mu.first().map_or(false, |&x| x > n - m) {
                    return Err(Error::InvalidPartition(format!(
                        "{mu:?} does not fit in the {m} x {} rectangle",
                        n - m
                    )));
                }
            }
            Family::OG { n } => {
                if !is_strict(&mu) || mu.first().map_or(false, |&x| x > n - 1) {
                    return Err(Error::InvalidPartition(format!(
                        "{mu:?} is not a strict partition with parts <= {}",
                        n - 1
                    )));
                }
            }
            Family::LG { n } => {
                if !is_strict(&mu) || mu.first().map_or(false, |&x| x > n) {
                    return Err(Error::InvalidPartition(format!(
                        "{mu:?} is not a strict partition with parts <= {n}"
                    )));
                }
            }
        }
        Ok(QuantumShape { family, shift, mu })
    }

    pub fn classical(family: Family, mu: Vec<u32>) -> Result<Self> {
        Self::new(family, 0, mu)
    }

    pub fn identity(family: Family) -> Self {
        QuantumShape { family, shift: 0, mu: Vec::new() }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn mu(&self) -> &[u32] {
        &self.mu
    }

    pub fn is_classical(&self) -> bool {
        self.shift == 0
    }

    /// Codimension of the corresponding Schubert variety when classical.
    pub fn size(&self) -> i64 {
        self.mu.iter().map(|&x| x as i64).sum()
    }

    // ----- LG/OG row geometry -------------------------------------------

    /// Index below which every row of the ideal is full (LG: d, OG: 2d).
    fn full_cut(&self) -> i64 {
        match self.family {
            Family::LG { .. } => self.shift,
            Family::OG { .. } => 2 * self.shift,
            Family::GrA { .. } => unreachable!(),
        }
    }

    /// Rightmost occupied column of row `i`; `row_start(i) - 1` when empty.
    pub fn row_end(&self, i: i64) -> i64 {
        let fam = self.family;
        let cut = self.full_cut();
        if i <= cut {
            return fam.row_full_end(i);
        }
        let k = (i - cut) as usize;
        let occupied = if k >= 1 && k <= self.mu.len() { self.mu[k - 1] as i64 } else { 0 };
        fam.row_start(i) + occupied - 1
    }

    fn last_nonempty_row(&self) -> i64 {
        self.full_cut() + self.mu.len() as i64
    }

    /// Membership test for a strip box.
    pub fn contains_box(&self, i: i64, j: i64) -> Result<bool> {
        match self.family {
            Family::GrA { m, n } => {
                let (ci, cj) = gra_canonical_box(m, n, i, j);
                let seq = self.gra_seq();
                Ok(cj <= seq[(ci - 1) as usize])
            }
            _ => {
                if !self.family.in_strip(i, j) {
                    return Err(Error::BoxOutsideStrip(i, j));
                }
                Ok(j <= self.row_end(i))
            }
        }
    }

    // ----- GrA boundary sequences ---------------------------------------

    /// Boundary sequence of the ideal on canonical cylinder rows 1..m.
    ///
    /// A q-step is one rotation plus one east translation, and m rotations
    /// add n-m to every entry, so d steps reduce to d mod m rotations plus a
    /// constant shift.
    pub fn gra_seq(&self) -> Vec<i64> {
        let Family::GrA { m, n } = self.family else { panic!("gra_seq on {}", self.family) };
        let mut seq: Vec<i64> = (0..m as usize)
            .map(|i| self.mu.get(i).copied().unwrap_or(0) as i64)
            .collect();
        let d = self.shift;
        let r = d.rem_euclid(m as i64);
        let add = d + (d - r) / m as i64 * (n as i64 - m as i64);
        for _ in 0..r {
            seq = gra_rotate_once(self.family, &seq);
        }
        for x in seq.iter_mut() {
            *x += add;
        }
        seq
    }

    /// Canonical form of a cylinder ideal given by its boundary sequence.
    pub fn from_gra_boundary(m: u32, n: u32, seq: &[i64]) -> Result<Self> {
        let family = Family::gr(m, n)?;
        if seq.len() != m as usize {
            return Err(Error::InvalidIdeal(format!("expected {m} rows, got {}", seq.len())));
        }
        if !seq.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::InvalidIdeal(format!("{seq:?} is not weakly decreasing")));
        }
        if seq[0] - seq[m as usize - 1] > (n - m) as i64 {
            return Err(Error::InvalidIdeal(format!(
                "{seq:?} violates the cylinder bound first - last <= {}",
                n - m
            )));
        }
        let width = (n - m) as i64;
        let mut seq = seq.to_vec();
        let mut shift = 0i64;
        loop {
            if seq[0] > width {
                seq = gra_unshift_once(family, &seq);
                shift += 1;
            } else if seq[m as usize - 1] < 0 {
                seq = gra_shift_once(family, &seq);
                shift -= 1;
            } else {
                break;
            }
        }
        let mu: Vec<u32> = seq.iter().map(|&x| x as u32).collect();
        QuantumShape::new(family, shift, mu)
    }

    // ----- LG/OG canonicalization from a window of row ends --------------

    /// Canonical form of an ideal from explicit row data.  `full_row` must be
    /// the index of a row known to be full; `ends[k]` is the rightmost
    /// occupied column of row `full_row + 1 + k` (`row_start - 1` if empty).
    /// Rows after the window are empty.
    pub fn from_row_ends(family: Family, full_row: i64, ends: &[i64]) -> Result<Self> {
        if matches!(family, Family::GrA { .. }) {
            return Err(Error::Unsupported("row-end windows apply to LG/OG".into()));
        }
        // Longest full prefix.
        let mut t = full_row;
        let mut idx = 0usize;
        while idx < ends.len() && ends[idx] == family.row_full_end(full_row + 1 + idx as i64) {
            t = full_row + 1 + idx as i64;
            idx += 1;
        }
        let mut mu: Vec<u32> = Vec::new();
        let mut prev_end = family.row_full_end(t);
        let mut seen_empty = false;
        for (k, &e) in ends.iter().enumerate().skip(idx) {
            let row = full_row + 1 + k as i64;
            let lo = family.row_start(row) - 1;
            let hi = family.row_full_end(row);
            if e < lo || e > hi {
                return Err(Error::InvalidIdeal(format!("row {row} end {e} out of range [{lo},{hi}]")));
            }
            if e == hi {
                return Err(Error::InvalidIdeal(format!("full row {row} after a non-full row")));
            }
            let occupied = e - lo;
            if occupied == 0 {
                seen_empty = true;
                continue;
            }
            if seen_empty {
                return Err(Error::InvalidIdeal(format!("non-empty row {row} below an empty row")));
            }
            if e > prev_end {
                return Err(Error::InvalidIdeal(format!("row {row} extends past row {}", row - 1)));
            }
            prev_end = e;
            mu.push(occupied as u32);
        }
        let shift = match family {
            Family::LG { .. } => t,
            Family::OG { .. } => {
                if t.rem_euclid(2) == 1 {
                    // Odd full cut: the first full non-prefix row becomes mu_1 = n-1.
                    let Family::OG { n } = family else { unreachable!() };
                    mu.insert(0, n - 1);
                    (t - 1) / 2
                } else {
                    t / 2
                }
            }
            Family::GrA { .. } => unreachable!(),
        };
        QuantumShape::new(family, shift, mu)
    }

    /// Window of rows on which this ideal can differ from full/empty.
    fn window(&self) -> (i64, i64) {
        (self.full_cut(), self.last_nonempty_row())
    }

    /// Translate the ideal by `t` diagonal (1,1) steps (LG/OG).
    fn translate(&self, t: i64) -> Result<Self> {
        match self.family {
            Family::LG { .. } => QuantumShape::new(self.family, self.shift + t, self.mu.clone()),
            Family::OG { .. } => {
                if t % 2 == 0 {
                    return QuantumShape::new(self.family, self.shift + t / 2, self.mu.clone());
                }
                let (lo, hi) = self.window();
                let full_row = lo + t;
                let ends: Vec<i64> = (1..=(hi - lo + 1)).map(|k| self.row_end(lo + k) + t).collect();
                QuantumShape::from_row_ends(self.family, full_row, &ends)
            }
            Family::GrA { .. } => unreachable!(),
        }
    }

    /// q-shift (full steps), or the OG half-step translation when `half`.
    pub fn shifted(&self, steps: i64, half: bool) -> Result<Self> {
        match self.family {
            Family::GrA { .. } => {
                if half {
                    return Err(Error::Unsupported("half-steps exist only for OG".into()));
                }
                QuantumShape::new(self.family, self.shift + steps, self.mu.clone())
            }
            Family::LG { .. } => {
                if half {
                    return Err(Error::Unsupported("half-steps exist only for OG".into()));
                }
                QuantumShape::new(self.family, self.shift + steps, self.mu.clone())
            }
            Family::OG { .. } => {
                let t = if half { steps } else { 2 * steps };
                self.translate(t)
            }
        }
    }

    /// Reflection (i,j) -> (j, i+n): the point-class action for LG/OG.
    pub(crate) fn reflected(&self) -> Result<Self> {
        let n = match self.family {
            Family::LG { n } | Family::OG { n } => n as i64,
            Family::GrA { .. } => return Err(Error::Unsupported("no reflection for GrA".into())),
        };
        let (lo, hi) = self.window();
        // Row r of the image is full iff row r of the ideal is non-empty,
        // which holds for all r <= hi; so rows <= lo are certainly full.
        let full_row = lo;
        let r_hi = self.row_end(lo) + 1; // columns beyond row lo's full end are empty
        let mut ends = Vec::new();
        for r in (lo + 1)..=r_hi {
            // bottom of column r in the old ideal
            let mut bottom: Option<i64> = None;
            for i in (lo..=hi.min(r)).rev() {
                if i < lo {
                    break;
                }
                let i_ok = self.family.row_start(i) <= r && r <= self.family.row_full_end(i);
                if i_ok && self.row_end(i) >= r {
                    bottom = Some(i);
                    break;
                }
            }
            if bottom.is_none() && r <= self.family.row_full_end(lo) && self.family.row_start(lo) <= r {
                bottom = Some(lo);
            }
            let end = match bottom {
                Some(b) => n + b,
                None => self.family.row_start(r) - 1,
            };
            ends.push(end);
        }
        QuantumShape::from_row_ends(self.family, full_row, &ends)
    }

    // ----- containment, skew, lattice ------------------------------------

    pub fn contains(&self, other: &QuantumShape) -> Result<bool> {
        if self.family != other.family {
            return Err(Error::Domain("shapes from different families".into()));
        }
        match self.family {
            Family::GrA { .. } => {
                let a = self.gra_seq();
                let b = other.gra_seq();
                Ok(a.iter().zip(&b).all(|(x, y)| x >= y))
            }
            _ => {
                let lo = self.full_cut().min(other.full_cut()) - 1;
                let hi = self.last_nonempty_row().max(other.last_nonempty_row()) + 1;
                Ok((lo..=hi).all(|i| self.row_end(i) >= other.row_end(i)))
            }
        }
    }

    /// The skew shape `self \ lam`; errors unless `lam` is contained in `self`.
    pub fn skew(&self, lam: &QuantumShape) -> Result<SkewShape> {
        if !self.contains(lam)? {
            return Err(Error::NotContained);
        }
        let mut boxes = BTreeSet::new();
        match self.family {
            Family::GrA { m, n } => {
                let a = self.gra_seq();
                let b = lam.gra_seq();
                for i in 1..=m as i64 {
                    for j in (b[(i - 1) as usize] + 1)..=a[(i - 1) as usize] {
                        boxes.insert((i, j));
                    }
                }
                SkewShape::from_boxes_unchecked(Ambient::GrA { m, n }, boxes)
            }
            Family::LG { n } => {
                let lo = lam.full_cut();
                let hi = self.last_nonempty_row();
                for i in lo..=hi {
                    for j in (lam.row_end(i) + 1)..=self.row_end(i) {
                        boxes.insert((i, j));
                    }
                }
                SkewShape::from_boxes_unchecked(Ambient::LG { n }, boxes)
            }
            Family::OG { n } => {
                let lo = lam.full_cut();
                let hi = self.last_nonempty_row();
                for i in lo..=hi {
                    for j in (lam.row_end(i) + 1)..=self.row_end(i) {
                        boxes.insert((i, j));
                    }
                }
                SkewShape::from_boxes_unchecked(Ambient::OG { n }, boxes)
            }
        }
    }

    /// Union of ideals (join in the lattice of shapes).
    pub fn join(&self, other: &QuantumShape) -> Result<QuantumShape> {
        self.lattice_op(other, true)
    }

    /// Intersection of ideals (meet).
    pub fn meet(&self, other: &QuantumShape) -> Result<QuantumShape> {
        self.lattice_op(other, false)
    }

    fn lattice_op(&self, other: &QuantumShape, max: bool) -> Result<QuantumShape> {
        if self.family != other.family {
            return Err(Error::Domain("shapes from different families".into()));
        }
        match self.family {
            Family::GrA { m, n } => {
                let a = self.gra_seq();
                let b = other.gra_seq();
                let seq: Vec<i64> = a
                    .iter()
                    .zip(&b)
                    .map(|(&x, &y)| if max { x.max(y) } else { x.min(y) })
                    .collect();
                QuantumShape::from_gra_boundary(m, n, &seq)
            }
            _ => {
                let lo = self.full_cut().min(other.full_cut());
                let hi = self.last_nonempty_row().max(other.last_nonempty_row());
                let full_row = lo - 1;
                let ends: Vec<i64> = ((lo)..=hi)
                    .map(|i| {
                        let (x, y) = (self.row_end(i), other.row_end(i));
                        if max {
                            x.max(y)
                        } else {
                            x.min(y)
                        }
                    })
                    .collect();
                QuantumShape::from_row_ends(self.family, full_row, &ends)
            }
        }
    }

    /// Smallest shape containing `self` plus one more north-east diagonal box
    /// (LG only): lambda union I(q^{d+1}).
    pub fn lambda_plus(&self) -> Result<QuantumShape> {
        match self.family {
            Family::LG { .. } => {
                let tail = if self.mu.is_empty() { Vec::new() } else { self.mu[1..].to_vec() };
                QuantumShape::new(self.family, self.shift + 1, tail)
            }
            _ => Err(Error::Unsupported("lambda_plus is defined for LG".into())),
        }
    }

    /// All shapes nu >= self that can carry a non-zero Pieri coefficient.
    ///
    /// LG: nu inside self[1]; OG: inside the half-step translate; GrA: row
    /// intervals nu_i in [lam_i, lam_{i-1}] cyclically.
    pub fn candidates_above(&self) -> Vec<QuantumShape> {
        let mut out = match self.family {
            Family::GrA { m, n } => {
                let lam = self.gra_seq();
                let mut out = Vec::new();
                let mut nu = lam.clone();
                loop {
                    out.push(QuantumShape::from_gra_boundary(m, n, &nu).expect("interval candidate"));
                    // odometer over nu_i in [lam_i, hi_i]
                    let hi = |i: usize| -> i64 {
                        if i == 0 {
                            lam[m as usize - 1] + (n - m) as i64
                        } else {
                            lam[i - 1]
                        }
                    };
                    let mut i = m as usize;
                    loop {
                        if i == 0 {
                            return {
                                out.sort();
                                out.dedup();
                                out
                            };
                        }
                        i -= 1;
                        if nu[i] < hi(i) {
                            nu[i] += 1;
                            for k in (i + 1)..m as usize {
                                nu[k] = lam[k];
                            }
                            break;
                        }
                    }
                }
            }
            _ => {
                let upper = match self.family {
                    Family::LG { .. } => self.shifted(1, false).expect("shift"),
                    Family::OG { .. } => self.shifted(1, true).expect("half shift"),
                    Family::GrA { .. } => unreachable!(),
                };
                let lo = self.full_cut();
                let hi = upper.last_nonempty_row().max(lo);
                let rows: Vec<i64> = ((lo + 1)..=hi).collect();
                let mut out = Vec::new();
                let mut chosen: Vec<i64> = Vec::with_capacity(rows.len());
                fn rec(
                    fam: Family,
                    lamref: &QuantumShape,
                    upper: &QuantumShape,
                    rows: &[i64],
                    k: usize,
                    prefix_full: bool,
                    prev_end: i64,
                    chosen: &mut Vec<i64>,
                    lo: i64,
                    out: &mut Vec<QuantumShape>,
                ) {
                    if k == rows.len() {
                        let shape = QuantumShape::from_row_ends(fam, lo, chosen).expect("candidate ideal");
                        out.push(shape);
                        return;
                    }
                    let i = rows[k];
                    let min_e = lamref.row_end(i);
                    let max_e = upper.row_end(i);
                    for e in min_e..=max_e {
                        let full = e == fam.row_full_end(i);
                        if full && !prefix_full {
                            continue;
                        }
                        if !full && e > prev_end {
                            continue;
                        }
                        chosen.push(e);
                        rec(fam, lamref, upper, rows, k + 1, prefix_full && full, if full { fam.row_full_end(i) } else { e }, chosen, lo, out);
                        chosen.pop();
                    }
                }
                // prev_end for the first window row: row `lo` is full.
                rec(
                    self.family,
                    self,
                    &upper,
                    &rows,
                    0,
                    true,
                    self.family.row_full_end(lo),
                    &mut chosen,
                    lo,
                    &mut out,
                );
                out
            }
        };
        out.sort();
        out.dedup();
        out
    }

    /// All classical shapes of the family, in canonical order.
    pub fn all_classical(family: Family) -> Vec<QuantumShape> {
        let mut out = Vec::new();
        match family {
            Family::GrA { m, n } => {
                fn rec(m: usize, width: u32, row: usize, max: u32, cur: &mut Vec<u32>, fam: Family, out: &mut Vec<QuantumShape>) {
                    if row == m {
                        out.push(QuantumShape::classical(fam, cur.clone()).unwrap());
                        return;
                    }
                    for v in (0..=max).rev() {
                        cur.push(v);
                        rec(m, width, row + 1, v, cur, fam, out);
                        cur.pop();
                    }
                }
                rec(m as usize, n - m, 0, n - m, &mut Vec::new(), family, &mut out);
            }
            Family::OG { n } => {
                strict_partitions(n - 1, &mut Vec::new(), &mut |mu| {
                    out.push(QuantumShape::classical(family, mu.to_vec()).unwrap())
                });
            }
            Family::LG { n } => {
                strict_partitions(n, &mut Vec::new(), &mut |mu| {
                    out.push(QuantumShape::classical(family, mu.to_vec()).unwrap())
                });
            }
        }
        out.sort();
        out.dedup();
        out
    }
}

fn strict_partitions(max_part: u32, cur: &mut Vec<u32>, f: &mut impl FnMut(&[u32])) {
    f(cur);
    let hi = cur.last().map_or(max_part, |&x| x - 1);
    for v in (1..=hi).rev() {
        cur.push(v);
        strict_partitions(max_part, cur, f);
        cur.pop();
    }
}

/// Canonical representative of a cylinder box class: row in [1, m].
pub fn gra_canonical_box(m: u32, n: u32, i: i64, j: i64) -> (i64, i64) {
    let m = m as i64;
    let ci = (i - 1).rem_euclid(m) + 1;
    let a = (ci - i) / m; // i + a*m = ci
    (ci, j + a * (m - n as i64))
}

/// One q-step on a GrA boundary sequence.
pub(crate) fn gra_shift_once(family: Family, seq: &[i64]) -> Vec<i64> {
    let Family::GrA { m, n } = family else { unreachable!() };
    let m = m as usize;
    let mut out = Vec::with_capacity(m);
    out.push(seq[m - 1] + (n as i64 - m as i64) + 1);
    for i in 0..m - 1 {
        out.push(seq[i] + 1);
    }
    out
}

pub(crate) fn gra_unshift_once(family: Family, seq: &[i64]) -> Vec<i64> {
    let Family::GrA { m, n } = family else { unreachable!() };
    let m = m as usize;
    let mut out = Vec::with_capacity(m);
    for i in 1..m {
        out.push(seq[i] - 1);
    }
    out.push(seq[0] - (n as i64 - m as i64) - 1);
    out
}

/// Rotate the boundary one row south: the sigma generator for GrA.
pub(crate) fn gra_rotate_once(family: Family, seq: &[i64]) -> Vec<i64> {
    let Family::GrA { m, n } = family else { unreachable!() };
    let m = m as usize;
    let mut out = Vec::with_capacity(m);
    out.push(seq[m - 1] + (n as i64 - m as i64));
    for i in 0..m - 1 {
        out.push(seq[i]);
    }
    out
}

pub(crate) fn gra_rotate_back_once(family: Family, seq: &[i64]) -> Vec<i64> {
    let Family::GrA { m, n } = family else { unreachable!() };
    let m = m as usize;
    let mut out = Vec::with_capacity(m);
    for i in 1..m {
        out.push(seq[i]);
    }
    out.push(seq[0] - (n as i64 - m as i64));
    out
}

// Order: ascending q-shift, then descending partition lexicographically.
impl Ord for QuantumShape {
    fn cmp(&self, other: &Self) -> Ordering {
        self.family
            .cmp(&other.family)
            .then(self.shift.cmp(&other.shift))
            .then_with(|| {
                let mut a = self.mu.iter();
                let mut b = other.mu.iter();
                loop {
                    match (a.next(), b.next()) {
                        (None, None) => return Ordering::Equal,
                        (None, Some(_)) => return Ordering::Greater,
                        (Some(_), None) => return Ordering::Less,
                        (Some(x), Some(y)) => match y.cmp(x) {
                            Ordering::Equal => continue,
                            ord => return ord,
                        },
                    }
                }
            })
    }
}

impl PartialOrd for QuantumShape {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

// ----- shape literals: "3,3,1@d0", "7,5,4,2@d1", OG half-shift "4,2@h3" -----

impl fmt::Display for QuantumShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mu.is_empty() {
            write!(f, "0")?;
        } else {
            let parts: Vec<String> = self.mu.iter().map(|x| x.to_string()).collect();
            write!(f, "{}", parts.join(","))?;
        }
        if self.shift != 0 {
            write!(f, "@d{}", self.shift)?;
        }
        Ok(())
    }
}

impl QuantumShape {
    pub fn parse(family: Family, literal: &str) -> Result<Self> {
        let (part, suffix) = match literal.split_once('@') {
            Some((p, s)) => (p, Some(s)),
            None => (literal, None),
        };
        let part = part.trim();
        let mu: Vec<u32> = if part.is_empty() || part == "0" {
            Vec::new()
        } else {
            part.split(',')
                .map(|tok| {
                    tok.trim()
                        .parse::<u32>()
                        .map_err(|_| Error::Parse(format!("bad partition entry {tok:?}")))
                })
                .collect::<Result<_>>()?
        };
        let base = QuantumShape::classical(family, mu).map_err(|e| Error::Parse(e.to_string()))?;
        match suffix {
            None => Ok(base),
            Some(s) if s.starts_with('d') => {
                let d: i64 = s[1..].parse().map_err(|_| Error::Parse(format!("bad shift {s:?}")))?;
                base.shifted(d, false).map_err(|e| Error::Parse(e.to_string()))
            }
            Some(s) if s.starts_with('h') => {
                let k: i64 = s[1..].parse().map_err(|_| Error::Parse(format!("bad half-shift {s:?}")))?;
                base.shifted(k, true).map_err(|e| Error::Parse(e.to_string()))
            }
            Some(s) => Err(Error::Parse(format!("unknown shape suffix {s:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lg(n: u32) -> Family {
        Family::lg(n).unwrap()
    }

    #[test]
    fn lg_membership_examples() {
        // I(1): row 0 full, rows >= 1 empty.
        let s = QuantumShape::identity(lg(6));
        assert!(s.contains_box(0, 3).unwrap());
        assert!(!s.contains_box(1, 1).unwrap());
        // row 2 of (7,4,2,1) covers columns [2, 2+4-1].
        let s = QuantumShape::classical(lg(7), vec![7, 4, 2, 1]).unwrap();
        assert!(s.contains_box(2, 5).unwrap());
        assert!(!s.contains_box(2, 6).unwrap());
        assert!(s.contains_box(0, 7).unwrap());
        assert!(s.contains_box(1, 7).unwrap());
        assert!(!s.contains_box(1, 8).unwrap());
        assert!(s.contains_box(-3, -1).unwrap());
    }

    #[test]
    fn membership_outside_strip_errors() {
        let s = QuantumShape::identity(lg(4));
        assert!(matches!(s.contains_box(3, 1), Err(Error::BoxOutsideStrip(3, 1))));
    }

    #[test]
    fn gra_canonicalize_oracle_values() {
        // (5,1,1) in Gr(3,7): one rim-hook of size 7, leaving the empty shape.
        let s = QuantumShape::from_gra_boundary(3, 7, &[5, 1, 1]).unwrap();
        assert_eq!((s.shift(), s.mu()), (1, &[][..]));
        let s = QuantumShape::from_gra_boundary(2, 4, &[0, 0]).unwrap();
        assert_eq!((s.shift(), s.mu()), (0, &[][..]));
    }

    #[test]
    fn gra_shift_boundary() {
        let s = QuantumShape::identity(Family::gr(2, 5).unwrap());
        let q = s.shifted(1, false).unwrap();
        assert_eq!(q.gra_seq(), vec![4, 1]);
        assert_eq!((q.shift(), q.mu()), (1, &[][..]));
    }

    #[test]
    fn lg_shift_pure_translation() {
        let fam = lg(5);
        let ideal = QuantumShape::from_row_ends(fam, 2, &[2, 3]).unwrap();
        // rows <= 2 full, rows >= 3 empty
        assert_eq!((ideal.shift(), ideal.mu()), (2, &[][..]));
        let s = QuantumShape::classical(fam, vec![3, 1]).unwrap().shifted(1, false).unwrap();
        assert_eq!(s.shift(), 1);
        assert_eq!(s.mu(), &[3, 1]);
        assert!(s.contains_box(2, 4).unwrap());
    }

    #[test]
    fn og_half_shift_canonical_forms() {
        let fam = Family::og(5).unwrap();
        let one = QuantumShape::identity(fam);
        let h = one.shifted(1, true).unwrap();
        assert_eq!((h.shift(), h.mu()), (0, &[4][..]));
        let h2 = h.shifted(1, true).unwrap();
        assert_eq!((h2.shift(), h2.mu()), (1, &[][..]));
        // (4,2) half-shifted = q * (2)
        let s = QuantumShape::classical(fam, vec![4, 2]).unwrap().shifted(1, true).unwrap();
        assert_eq!((s.shift(), s.mu()), (1, &[2][..]));
    }

    #[test]
    fn skew_examples() {
        let fam = lg(7);
        let nu = QuantumShape::classical(fam, vec![7, 5, 3, 2]).unwrap().shifted(1, false).unwrap();
        let lam = QuantumShape::classical(fam, vec![7, 5, 4, 2]).unwrap();
        let theta = nu.skew(&lam).unwrap();
        assert_eq!(theta.size(), 7);
        assert!(theta.meets_sw_diagonal());
        assert_eq!(theta.ne_diag_box_count(), 1);
        // empty skew
        assert_eq!(lam.skew(&lam).unwrap().size(), 0);
        // containment failure
        assert!(matches!(lam.skew(&nu), Err(Error::NotContained)));
        // Example with 12 boxes in LG(12,24)
        let fam = lg(12);
        let big = QuantumShape::classical(fam, vec![11, 8, 6, 3, 1]).unwrap().shifted(2, false).unwrap();
        let mu = QuantumShape::classical(fam, vec![12, 11, 9, 6, 5]).unwrap();
        assert_eq!(big.skew(&mu).unwrap().size(), 12);
    }

    #[test]
    fn lambda_plus_examples() {
        let fam = lg(3);
        let id = QuantumShape::identity(fam);
        let p = id.lambda_plus().unwrap();
        assert_eq!((p.shift(), p.mu()), (1, &[][..]));
        let full_row = QuantumShape::classical(fam, vec![3]).unwrap();
        let p = full_row.lambda_plus().unwrap();
        assert_eq!((p.shift(), p.mu()), (1, &[][..]));
        let s = QuantumShape::classical(fam, vec![3, 1]).unwrap();
        let p = s.lambda_plus().unwrap();
        assert!(p.contains(&s).unwrap());
        // exactly one new box, on the NE diagonal: (n+1) - mu_1 = 1
        assert_eq!(p.skew(&s).unwrap().size(), 1);
        assert_eq!(p.skew(&s).unwrap().ne_diag_box_count(), 1);
    }

    #[test]
    fn candidates_contain_interval() {
        let fam = lg(7);
        let lam = QuantumShape::classical(fam, vec![7, 5, 4, 2]).unwrap();
        let cands = lam.candidates_above();
        assert!(cands.contains(&lam));
        let target = QuantumShape::classical(fam, vec![7, 5, 3, 2]).unwrap().shifted(1, false).unwrap();
        assert!(cands.contains(&target));
        for nu in &cands {
            assert!(nu.contains(&lam).unwrap());
        }
    }

    #[test]
    fn gra_candidates_examples() {
        let fam = Family::gr(3, 7).unwrap();
        let lam = QuantumShape::classical(fam, vec![3, 3, 1]).unwrap();
        let cands = lam.candidates_above();
        for mu in [vec![4, 3, 2], vec![4, 3, 3]] {
            assert!(cands.contains(&QuantumShape::classical(fam, mu).unwrap()));
        }
        for mu in [vec![2, 1], vec![2, 2]] {
            let q_term = QuantumShape::classical(fam, mu).unwrap().shifted(1, false).unwrap();
            assert!(cands.contains(&q_term));
        }
    }

    #[test]
    fn half_shift_only_for_og() {
        assert!(QuantumShape::identity(lg(4)).shifted(1, true).is_err());
        assert!(QuantumShape::identity(Family::gr(2, 5).unwrap()).shifted(1, true).is_err());
    }

    #[test]
    fn row_end_windows_reject_non_ideals() {
        let fam = lg(4);
        // row extends past the row above
        assert!(QuantumShape::from_row_ends(fam, 0, &[2, 3]).is_err());
        // full row below a non-full row
        assert!(QuantumShape::from_row_ends(fam, 0, &[3, 2 + 4]).is_err());
        // non-empty row below an empty one
        assert!(QuantumShape::from_row_ends(fam, 0, &[0, 2]).is_err());
        // boundary sequence violating the cylinder bound
        assert!(QuantumShape::from_gra_boundary(2, 4, &[5, 1]).is_err());
        assert!(QuantumShape::from_gra_boundary(2, 4, &[1, 2]).is_err());
    }

    #[test]
    fn literal_round_trip() {
        let fam = lg(7);
        let s = QuantumShape::parse(fam, "7,5,4,2@d1").unwrap();
        assert_eq!(s.to_string(), "7,5,4,2@d1");
        let s = QuantumShape::parse(fam, "0").unwrap();
        assert_eq!(s, QuantumShape::identity(fam));
        let og = Family::og(5).unwrap();
        let h = QuantumShape::parse(og, "0@h3").unwrap();
        assert_eq!(h, QuantumShape::identity(og).shifted(3, true).unwrap());
    }
}
