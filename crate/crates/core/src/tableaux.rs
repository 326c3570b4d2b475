//! KOG-, KLG- and QKLG-tableaux on rims: the witness objects behind the
//! Pieri coefficients of OG and LG.

use crate::error::{Error, Result};
use crate::skew::{index_map, BoxPos, SkewShape};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableauKind {
    Kog,
    Klg,
    Qklg,
}

/// A possibly primed positive integer, ordered 1' < 1 < 2' < 2 < ...
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Label {
    pub value: u32,
    pub primed: bool,
}

impl Label {
    pub fn new(value: u32, primed: bool) -> Self {
        Label { value, primed }
    }

    /// Position in the ordered alphabet; primes come first.
    pub fn encode(&self) -> u32 {
        2 * self.value - u32::from(self.primed)
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.value, if self.primed { "'" } else { "" })
    }
}

/// Clause of the tableau definitions violated first, if any.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Violation {
    /// (i) a row is not strictly increasing
    RowStrict,
    /// (ii) a column is not strictly increasing
    ColumnStrict,
    /// (iii) KOG: a box is neither <= nor >= all boxes south-west of it;
    /// KLG: an unprimed box is not >= all boxes south-west of it
    SouthWest,
    /// (iv) a primed box is not <= all boxes south-west of it
    PrimedSouthWest,
    /// (v) a SW-diagonal box is primed
    PrimedOnDiagonal,
    /// (vi) a primed non-terminal quantum box is repeated
    QuantumRepeated,
    /// (vii) a terminal quantum box is unprimed
    TerminalUnprimed,
}

impl Violation {
    pub fn clause(&self) -> &'static str {
        match self {
            Violation::RowStrict => "i",
            Violation::ColumnStrict => "ii",
            Violation::SouthWest => "iii",
            Violation::PrimedSouthWest => "iv",
            Violation::PrimedOnDiagonal => "v",
            Violation::QuantumRepeated => "vi",
            Violation::TerminalUnprimed => "vii",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tableau {
    kind: TableauKind,
    shape: SkewShape,
    /// Boxes in rim order (north-east to south-west) with their labels.
    boxes: Vec<BoxPos>,
    labels: Vec<Label>,
}

impl Tableau {
    pub fn new(kind: TableauKind, shape: SkewShape, entries: &BTreeMap<BoxPos, Label>) -> Result<Self> {
        if !shape.is_rim() {
            return Err(Error::Domain("tableaux live on rims".into()));
        }
        let boxes = shape.rim_order();
        if boxes.len() != entries.len() || !boxes.iter().all(|b| entries.contains_key(b)) {
            return Err(Error::Domain("entries do not match the shape".into()));
        }
        let labels = boxes.iter().map(|b| entries[b]).collect();
        Ok(Tableau { kind, shape, boxes, labels })
    }

    pub fn kind(&self) -> TableauKind {
        self.kind
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn label_at(&self, b: BoxPos) -> Option<Label> {
        self.boxes.iter().position(|&x| x == b).map(|k| self.labels[k])
    }

    pub fn labels_in_rim_order(&self) -> &[Label] {
        &self.labels
    }

    /// Set of values appearing (ignoring primes).
    pub fn content(&self) -> BTreeSet<u32> {
        self.labels.iter().map(|l| l.value).collect()
    }

    /// A box with a repeated value (ignoring primes)?
    fn repeated(&self, k: usize) -> bool {
        let v = self.labels[k].value;
        self.labels.iter().enumerate().any(|(j, l)| j != k && l.value == v)
    }

    /// Terminal: not on the SW diagonal, no box immediately left or below.
    fn terminal(&self, b: BoxPos) -> bool {
        !self.shape.on_sw_diagonal(b)
            && !self.shape.boxes().contains(&(b.0, b.1 - 1))
            && !self.shape.boxes().contains(&(b.0 + 1, b.1))
    }

    /// Quantum boxes: least fixed point seeded by the NE diagonal, growing
    /// through edge-adjacency to unrepeated quantum boxes.
    pub fn quantum_boxes(&self) -> BTreeSet<BoxPos> {
        let idx = index_map(&self.boxes);
        let mut quantum: BTreeSet<BoxPos> =
            self.boxes.iter().cloned().filter(|&b| self.shape.on_ne_diagonal(b)).collect();
        loop {
            let mut grew = false;
            for &(i, j) in self.shape.boxes() {
                if quantum.contains(&(i, j)) {
                    continue;
                }
                let adj_unrepeated_quantum = [(i - 1, j), (i + 1, j), (i, j - 1), (i, j + 1)]
                    .iter()
                    .any(|nb| quantum.contains(nb) && !self.repeated(idx[nb]));
                if adj_unrepeated_quantum {
                    quantum.insert((i, j));
                    grew = true;
                }
            }
            if !grew {
                return quantum;
            }
        }
    }

    /// Check every clause of the kind, reporting the first violated one.
    pub fn validate(&self) -> std::result::Result<(), Violation> {
        let boxes = &self.boxes;
        let get = |b: BoxPos| -> Option<u32> { self.label_at(b).map(|l| l.encode()) };
        // (i) rows strictly increase west -> east
        for &(i, j) in boxes {
            if let (Some(a), Some(b)) = (get((i, j - 1)), get((i, j))) {
                if a >= b {
                    return Err(Violation::RowStrict);
                }
            }
        }
        // (ii) columns strictly increase north -> south
        for &(i, j) in boxes {
            if let (Some(a), Some(b)) = (get((i - 1, j)), get((i, j))) {
                if a >= b {
                    return Err(Violation::ColumnStrict);
                }
            }
        }
        // south-west comparisons: b' is SW of b when b'.row >= b.row and
        // b'.col <= b.col, b' != b.
        let sw_pairs = |k: usize| -> Vec<u32> {
            let (i, j) = boxes[k];
            boxes
                .iter()
                .enumerate()
                .filter(|(t, &(i2, j2))| *t != k && i2 >= i && j2 <= j)
                .map(|(t, _)| self.labels[t].encode())
                .collect()
        };
        match self.kind {
            TableauKind::Kog => {
                for k in 0..boxes.len() {
                    if self.labels[k].primed {
                        return Err(Violation::SouthWest);
                    }
                    let sw = sw_pairs(k);
                    let e = self.labels[k].encode();
                    if !(sw.iter().all(|&x| e <= x) || sw.iter().all(|&x| e >= x)) {
                        return Err(Violation::SouthWest);
                    }
                }
            }
            TableauKind::Klg | TableauKind::Qklg => {
                // (iii) unprimed >= all SW
                for k in 0..boxes.len() {
                    if !self.labels[k].primed && !sw_pairs(k).iter().all(|&x| self.labels[k].encode() >= x) {
                        return Err(Violation::SouthWest);
                    }
                }
                // (iv) primed <= all SW
                for k in 0..boxes.len() {
                    if self.labels[k].primed && !sw_pairs(k).iter().all(|&x| self.labels[k].encode() <= x) {
                        return Err(Violation::PrimedSouthWest);
                    }
                }
                // (v) no primed SW-diagonal box
                for k in 0..boxes.len() {
                    if self.labels[k].primed && self.shape.on_sw_diagonal(boxes[k]) {
                        return Err(Violation::PrimedOnDiagonal);
                    }
                }
            }
        }
        if self.kind == TableauKind::Qklg {
            let quantum = self.quantum_boxes();
            // (vi) every primed non-terminal quantum box is unrepeated
            for k in 0..boxes.len() {
                let b = boxes[k];
                if quantum.contains(&b) && self.labels[k].primed && !self.terminal(b) && self.repeated(k) {
                    return Err(Violation::QuantumRepeated);
                }
            }
            // (vii) every terminal quantum box is primed
            for k in 0..boxes.len() {
                let b = boxes[k];
                if quantum.contains(&b) && self.terminal(b) && !self.labels[k].primed {
                    return Err(Violation::TerminalUnprimed);
                }
            }
        }
        Ok(())
    }
}

/// All valid tableaux of the kind with shape `theta` and content exactly
/// {1,...,p}.  Non-rim shapes give the empty list; so do p < 0, and p = 0
/// unless the shape is empty.
pub fn enumerate(kind: TableauKind, theta: &SkewShape, p: i64) -> Vec<Tableau> {
    if !theta.is_rim() || p < 0 {
        return Vec::new();
    }
    let boxes = theta.rim_order();
    let k = boxes.len();
    if p == 0 || k == 0 {
        return if p == 0 && k == 0 {
            vec![Tableau { kind, shape: theta.clone(), boxes, labels: Vec::new() }]
        } else {
            Vec::new()
        };
    }
    if p as usize > k {
        return Vec::new();
    }
    let p = p as u32;
    let idx = index_map(&boxes);
    let mut labels: Vec<Label> = vec![Label::new(1, false); k];
    let mut out: Vec<Tableau> = Vec::new();
    let full_mask: u64 = (1u64 << p) - 1;

    // Fill from the south-west end of the rim order; every box south-west of
    // boxes[t] is exactly boxes[t+1..].
    fn rec(
        kind: TableauKind,
        theta: &SkewShape,
        boxes: &[BoxPos],
        idx: &std::collections::HashMap<BoxPos, usize>,
        t: isize,
        p: u32,
        mask: u64,
        suffix_min: u32,
        suffix_max: u32,
        labels: &mut Vec<Label>,
        out: &mut Vec<Tableau>,
        full_mask: u64,
    ) {
        if t < 0 {
            if mask != full_mask {
                return;
            }
            let tab = Tableau {
                kind,
                shape: theta.clone(),
                boxes: boxes.to_vec(),
                labels: labels.clone(),
            };
            if tab.validate().is_ok() {
                out.push(tab);
            }
            return;
        }
        let t_us = t as usize;
        // missing values must fit in the remaining boxes
        let missing = p - (mask & full_mask).count_ones();
        if missing as usize > t_us + 1 {
            return;
        }
        let (i, j) = boxes[t_us];
        let south = idx.get(&(i + 1, j)).map(|&s| labels[s].encode());
        let west = idx.get(&(i, j - 1)).map(|&s| labels[s].encode());
        let primed_options: &[bool] = match kind {
            TableauKind::Kog => &[false],
            _ => &[false, true],
        };
        for v in 1..=p {
            for &primed in primed_options {
                let lbl = Label::new(v, primed);
                let e = lbl.encode();
                if let Some(s) = south {
                    if e >= s {
                        continue;
                    }
                }
                if let Some(w) = west {
                    if w >= e {
                        continue;
                    }
                }
                let sw_ok = if t_us + 1 >= boxes.len() {
                    true
                } else {
                    match kind {
                        TableauKind::Kog => e <= suffix_min || e >= suffix_max,
                        _ => {
                            if primed {
                                e <= suffix_min
                            } else {
                                e >= suffix_max
                            }
                        }
                    }
                };
                if !sw_ok {
                    continue;
                }
                if primed && theta.on_sw_diagonal((i, j)) {
                    continue;
                }
                labels[t_us] = lbl;
                rec(
                    kind,
                    theta,
                    boxes,
                    idx,
                    t - 1,
                    p,
                    mask | (1 << (v - 1)),
                    suffix_min.min(e),
                    suffix_max.max(e),
                    labels,
                    out,
                    full_mask,
                );
            }
        }
    }

    rec(
        kind,
        theta,
        &boxes,
        &idx,
        k as isize - 1,
        p,
        0,
        u32::MAX,
        0,
        &mut labels,
        &mut out,
        full_mask,
    );
    out.sort_by_key(|t| t.labels.iter().map(|l| l.encode()).collect::<Vec<_>>());
    out
}

impl fmt::Display for Tableau {
    /// NW-justified grid of labels, one row per strip row, "." for absent.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.boxes.is_empty() {
            return write!(f, "(empty)");
        }
        let rows: Vec<i64> = {
            let set: BTreeSet<i64> = self.boxes.iter().map(|b| b.0).collect();
            set.into_iter().collect()
        };
        let min_col = self.boxes.iter().map(|b| b.1).min().unwrap();
        let max_col = self.boxes.iter().map(|b| b.1).max().unwrap();
        let mut lines = Vec::new();
        for &i in &rows {
            let mut cells = Vec::new();
            for j in min_col..=max_col {
                match self.label_at((i, j)) {
                    Some(l) => cells.push(l.to_string()),
                    None => cells.push(".".into()),
                }
            }
            while cells.last().map(|c| c.as_str()) == Some(".") {
                cells.pop();
            }
            lines.push(cells.join(" "));
        }
        write!(f, "{}", lines.join("\n"))
    }
}
