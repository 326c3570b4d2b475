use crate::error::{Error, Result};
use std::fmt;

/// One of the three classical cominuscule Grassmannian families.
///
/// The strip geometry per family:
/// * `GrA(m,n)`: the cylinder Z^2 / Z(m, m-n); canonical boxes have row in [1,m].
/// * `OG(n)`: the strip { (i,j) : i < j < i+n }, n-1 boxes per row.
/// * `LG(n)`: the strip { (i,j) : i <= j <= i+n }, n+1 boxes per row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    GrA { m: u32, n: u32 },
    OG { n: u32 },
    LG { n: u32 },
}

impl Family {
    pub fn gr(m: u32, n: u32) -> Result<Self> {
        if m == 0 || m >= n {
            return Err(Error::Domain(format!("Gr({m},{n}) requires 0 < m < n")));
        }
        Ok(Family::GrA { m, n })
    }

    pub fn og(n: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::Domain(format!("OG({n},{}) requires n >= 2", 2 * n)));
        }
        Ok(Family::OG { n })
    }

    pub fn lg(n: u32) -> Result<Self> {
        if n < 1 {
            return Err(Error::Domain("LG(n,2n) requires n >= 1".into()));
        }
        Ok(Family::LG { n })
    }

    /// Degree of c1(T_X) on a line.
    pub fn c1_degree(&self) -> i64 {
        match *self {
            Family::GrA { n, .. } => n as i64,
            Family::OG { n } => 2 * n as i64 - 2,
            Family::LG { n } => n as i64 + 1,
        }
    }

    /// Largest p for which O^p is a special Schubert class.
    pub fn max_special(&self) -> u32 {
        match *self {
            Family::GrA { m, n } => n - m,
            Family::OG { n } => n - 1,
            Family::LG { n } => n,
        }
    }

    pub fn dim(&self) -> i64 {
        match *self {
            Family::GrA { m, n } => m as i64 * (n - m) as i64,
            Family::OG { n } => n as i64 * (n as i64 - 1) / 2,
            Family::LG { n } => n as i64 * (n as i64 + 1) / 2,
        }
    }

    /// Leftmost column of strip row `i` (LG/OG only).
    pub fn row_start(&self, i: i64) -> i64 {
        match *self {
            Family::LG { .. } => i,
            Family::OG { .. } => i + 1,
            Family::GrA { .. } => unreachable!("cylinder rows are unbounded"),
        }
    }

    /// Rightmost column of strip row `i` (LG/OG only).
    pub fn row_full_end(&self, i: i64) -> i64 {
        match *self {
            Family::LG { n } => i + n as i64,
            Family::OG { n } => i + n as i64 - 1,
            Family::GrA { .. } => unreachable!("cylinder rows are unbounded"),
        }
    }

    pub fn in_strip(&self, i: i64, j: i64) -> bool {
        match *self {
            Family::GrA { .. } => true,
            Family::LG { .. } | Family::OG { .. } => self.row_start(i) <= j && j <= self.row_full_end(i),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::GrA { m, n } => write!(f, "Gr({m},{n})"),
            Family::OG { n } => write!(f, "OG({n},{})", 2 * n),
            Family::LG { n } => write!(f, "LG({n},{})", 2 * n),
        }
    }
}
