//! Scalar coefficient functions.  Each coefficient is computable by every
//! route the theory provides: closed alternating sums over sub-ideals,
//! recursions on the north-east arm, and signed tableau counts.

use crate::error::{Error, Result};
use crate::skew::{Ambient, SkewShape};
use crate::tableaux::{enumerate, TableauKind};
use std::collections::HashMap;

/// Evaluation route for coefficients that have several.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    ClosedSum,
    Recursion,
    Tableau,
}

pub fn binom(a: i64, k: i64) -> i64 {
    if k < 0 || k > a || a < 0 {
        return 0;
    }
    let mut r: i64 = 1;
    for t in 0..k {
        r = r * (a - t) / (t + 1);
    }
    r
}

/// Euler characteristic of a b-dimensional complete intersection of `a`
/// quadrics: sum_{j=0}^{b} (-1)^j 2^{a-j} binom(a,j).
pub fn h(a: i64, b: i64) -> Result<i64> {
    if a < 0 {
        return Err(Error::Domain(format!("h({a},{b}) needs a >= 0")));
    }
    if b < 0 {
        return Ok(0);
    }
    if b >= a {
        return Ok(1);
    }
    let mut sum = 0i64;
    for j in 0..=b.min(a) {
        let term = (1i64 << (a - j)) * binom(a, j);
        sum += if j % 2 == 0 { term } else { -term };
    }
    Ok(sum)
}

fn chi(c: bool) -> i64 {
    i64::from(c)
}

fn delta(a: i64, b: i64) -> i64 {
    chi(a == b)
}

/// Type-A Pieri coefficient: signed binomial on horizontal strips.
pub fn coeff_a(theta: &SkewShape, p: i64) -> Result<i64> {
    let Ambient::GrA { .. } = theta.ambient() else {
        return Err(Error::Domain("coeff A needs a GrA skew shape".into()));
    };
    if theta.is_empty() {
        return Ok(chi(p <= 0));
    }
    if !theta.is_horizontal_strip() {
        return Ok(0);
    }
    let size = theta.size() as i64;
    let r = theta.r_rows() as i64;
    let b = binom(r - 1, size - p);
    Ok(if (size - p).rem_euclid(2) == 0 { b } else { -b })
}

/// OG Pieri coefficient: signed count of KOG-tableaux.
pub fn coeff_b(theta: &SkewShape, p: i64) -> Result<i64> {
    let Ambient::OG { .. } = theta.ambient() else {
        return Err(Error::Domain("coeff B needs an OG skew shape".into()));
    };
    if theta.is_empty() {
        return Ok(chi(p <= 0));
    }
    if !theta.is_rim() {
        return Ok(0);
    }
    let count = enumerate(TableauKind::Kog, theta, p).len() as i64;
    let size = theta.size() as i64;
    Ok(if (size - p).rem_euclid(2) == 0 { count } else { -count })
}

fn signed_count(theta: &SkewShape, p: i64, kind: TableauKind) -> i64 {
    if theta.is_empty() {
        return chi(p <= 0);
    }
    let count = enumerate(kind, theta, p).len() as i64;
    let size = theta.size() as i64;
    if (size - p).rem_euclid(2) == 0 {
        count
    } else {
        -count
    }
}

type Key = (Vec<(i64, i64)>, i64);

/// Memoizing engine for the recursive coefficient functions.
#[derive(Default)]
pub struct CoeffEngine {
    c_memo: HashMap<Key, i64>,
    hq_memo: HashMap<Key, i64>,
    nq_memo: HashMap<Key, i64>,
}

impl CoeffEngine {
    pub fn new() -> Self {
        Self::default()
    }

    // ----- C: the classical KLG structure constant -------------------------

    /// Recursive route (Pieri recursion on the north-east arm).
    pub fn c(&mut self, theta: &SkewShape, p: i64) -> i64 {
        if theta.is_empty() {
            return chi(p <= 0);
        }
        if !theta.is_rim() {
            return 0;
        }
        let key = (theta.normalized_key(), p);
        if let Some(&v) = self.c_memo.get(&key) {
            return v;
        }
        let arm = theta.ne_arm().expect("non-empty");
        let a = arm.psi.size() as i64;
        let size = theta.size() as i64;
        let v = if arm.theta_hat.is_empty() {
            if theta.meets_sw_diagonal() {
                if theta.is_single_row() {
                    delta(p, size)
                } else {
                    delta(p, size) - delta(p, size - 1)
                }
            } else {
                2 * delta(p, size) - chi(p >= 1) * delta(p, size - 1)
            }
        } else if arm.connected {
            self.c(&arm.theta_hat, p - a) - self.c(&arm.theta_hat, p - a + 1)
        } else if a == 1 {
            2 * self.c(&arm.theta_hat, p - a) - 2 * self.c(&arm.theta_hat, p - a + 1)
        } else {
            2 * self.c(&arm.theta_hat, p - a) - 3 * self.c(&arm.theta_hat, p - a + 1)
                + self.c(&arm.theta_hat, p - a + 2)
        };
        self.c_memo.insert(key, v);
        v
    }

    /// Closed sum over sub-ideals between theta' and theta.
    pub fn c_closed(&mut self, theta: &SkewShape, p: i64) -> Result<i64> {
        let floor = theta.theta_prime();
        let mut sum = 0i64;
        for phi in theta.lower_ideals_containing(&floor, false) {
            let sign = if (theta.size() - phi.size()) % 2 == 0 { 1 } else { -1 };
            let np = phi.n_prime()? as i64;
            let r = phi.max_rim() as i64;
            sum += sign * h(np, r - p)?;
        }
        Ok(sum)
    }

    /// Signed KLG-tableau count.
    pub fn c_tableau(&mut self, theta: &SkewShape, p: i64) -> i64 {
        signed_count(theta, p, TableauKind::Klg)
    }

    pub fn c_route(&mut self, theta: &SkewShape, p: i64, route: Route) -> Result<i64> {
        match route {
            Route::Recursion => Ok(self.c(theta, p)),
            Route::ClosedSum => self.c_closed(theta, p),
            Route::Tableau => Ok(self.c_tableau(theta, p)),
        }
    }

    // ----- H_q: undeformed structure constant on the NE diagonal -----------

    pub fn hq(&mut self, theta: &SkewShape, p: i64) -> Result<i64> {
        if theta.is_empty() {
            return Err(Error::Domain("H_q needs a non-empty skew shape".into()));
        }
        if !theta.is_rim() {
            return Ok(0);
        }
        let key = (theta.normalized_key(), p);
        if let Some(&v) = self.hq_memo.get(&key) {
            return Ok(v);
        }
        let arm = theta.ne_arm()?;
        let a = arm.psi.size() as i64;
        let size = theta.size() as i64;
        let v = if arm.theta_hat.is_empty() {
            if theta.is_single_row() {
                chi(p <= size)
            } else {
                delta(p, size)
            }
        } else if arm.connected {
            if arm.arm_is_row || p >= size {
                self.hq(&arm.theta_hat, p - a)?
            } else {
                self.c(&arm.theta_hat, p - a) - self.hq(&arm.theta_hat, p - a)?
                    + self.hq(&arm.theta_hat, p - a + 1)?
            }
        } else if arm.arm_is_row {
            self.c(&arm.theta_hat, p - a)
        } else {
            self.c(&arm.theta_hat, p - a) - self.c(&arm.theta_hat, p - a + 1)
        };
        self.hq_memo.insert(key, v);
        Ok(v)
    }

    /// Closed sum with theta'_q = theta' + Q and N'_q = max(N'-1, 0).
    pub fn hq_closed(&mut self, theta: &SkewShape, p: i64) -> Result<i64> {
        if theta.is_empty() {
            return Err(Error::Domain("H_q needs a non-empty skew shape".into()));
        }
        let floor = theta.theta_prime_q()?;
        let mut sum = 0i64;
        for phi in theta.lower_ideals_containing(&floor, false) {
            let sign = if (theta.size() - phi.size()) % 2 == 0 { 1 } else { -1 };
            let nq = phi.n_prime_q()? as i64;
            let r = phi.max_rim() as i64;
            sum += sign * h(nq, r - p)?;
        }
        Ok(sum)
    }

    pub fn hq_route(&mut self, theta: &SkewShape, p: i64, route: Route) -> Result<i64> {
        match route {
            Route::Recursion => self.hq(theta, p),
            Route::ClosedSum => self.hq_closed(theta, p),
            Route::Tableau => Err(Error::Unsupported("H_q has no tableau route".into())),
        }
    }

    // ----- N_q: quantum structure constant on the NE diagonal --------------

    pub fn nq(&mut self, theta: &SkewShape, p: i64) -> Result<i64> {
        if theta.is_empty() {
            return Err(Error::Domain("N_q needs a non-empty skew shape".into()));
        }
        if !theta.is_rim() {
            return Ok(0);
        }
        let key = (theta.normalized_key(), p);
        if let Some(&v) = self.nq_memo.get(&key) {
            return Ok(v);
        }
        let arm = theta.ne_arm()?;
        let a = arm.psi.size() as i64;
        let size = theta.size() as i64;
        let v = if arm.theta_hat.is_empty() {
            if theta.meets_sw_diagonal() {
                delta(p, size)
            } else if theta.is_single_column() {
                delta(p, size)
            } else {
                delta(p, size) - delta(p, size - 1)
            }
        } else if arm.connected {
            if arm.arm_is_column {
                self.nq(&arm.theta_hat, p - a)?
            } else {
                self.nq(&arm.theta_hat, p - a)? - self.c(&arm.theta_hat, p - a + 1)
            }
        } else if arm.arm_is_column {
            self.c(&arm.theta_hat, p - a) - self.c(&arm.theta_hat, p - a + 1)
        } else {
            self.c(&arm.theta_hat, p - a) - 2 * self.c(&arm.theta_hat, p - a + 1)
                + self.c(&arm.theta_hat, p - a + 2)
        };
        self.nq_memo.insert(key, v);
        Ok(v)
    }

    /// Signed QKLG-tableau count; requires the NE diagonal context.
    pub fn n_tableau(&mut self, theta: &SkewShape, p: i64) -> Result<i64> {
        match theta.ambient() {
            Ambient::LG { .. } => Ok(signed_count(theta, p, TableauKind::Qklg)),
            _ => Err(Error::Domain("QKLG counts need an LG strip".into())),
        }
    }

    // ----- H: undeformed product coefficient in the full strip -------------

    /// Closed definition of H via theta-circ pruning; handles any number of
    /// NE-diagonal boxes.
    pub fn h_closed(&mut self, theta: &SkewShape, p: i64) -> Result<i64> {
        let floor = theta.theta_circ()?;
        let mut sum = 0i64;
        for phi in theta.lower_ideals_containing(&floor, false) {
            let sign = if (theta.size() - phi.size()) % 2 == 0 { 1 } else { -1 };
            let n = phi.n_both_diagonals()? as i64;
            let r = phi.max_rim() as i64;
            sum += sign * h(n, r - p)?;
        }
        Ok(sum)
    }

    /// H with the C / H_q dispatch when at most one NE-diagonal box is
    /// present, falling back to the closed sum otherwise.
    pub fn h_coeff(&mut self, theta: &SkewShape, p: i64) -> Result<i64> {
        match theta.ne_diag_box_count() {
            0 => Ok(self.c(theta, p)),
            1 => self.hq(theta, p),
            _ => self.h_closed(theta, p),
        }
    }

    // ----- N-hat and the quantum Pieri coefficient N ------------------------

    /// N-hat(theta, p) = H(theta, p) - sum over proper lower ideals phi with
    /// theta-minus <= phi < theta of H(phi, p).
    pub fn nhat(&mut self, theta: &SkewShape, p: i64) -> Result<i64> {
        let floor = theta.theta_minus()?;
        let mut v = self.h_coeff(theta, p)?;
        for phi in theta.lower_ideals_containing(&floor, true) {
            v -= self.h_coeff(&phi, p)?;
        }
        Ok(v)
    }

    /// The LG quantum Pieri coefficient: C off the NE diagonal, 0 with two or
    /// more NE-diagonal boxes, otherwise the signed QKLG count computed by
    /// the N_q recursion.
    pub fn n_coeff(&mut self, theta: &SkewShape, p: i64) -> Result<i64> {
        if theta.is_empty() {
            return Ok(chi(p <= 0));
        }
        match theta.ne_diag_box_count() {
            0 => Ok(self.c(theta, p)),
            1 => self.nq(theta, p),
            _ => Ok(0),
        }
    }
}

thread_local! {
    static ENGINE: std::cell::RefCell<CoeffEngine> = std::cell::RefCell::new(CoeffEngine::new());
}

/// Run `f` with the thread-local coefficient engine.
pub fn with_engine<T>(f: impl FnOnce(&mut CoeffEngine) -> T) -> T {
    ENGINE.with(|e| f(&mut e.borrow_mut()))
}
