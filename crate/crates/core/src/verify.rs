//! Named verification suites.  Each suite runs a family of exhaustive or
//! randomized cross-checks and reports per-check case counts and failures.

use crate::coeffs::{coeff_a, h, CoeffEngine};
use crate::error::Result;
use crate::family::Family;
use crate::ring::{pieri, pieri_class, psi, undeformed_pieri_lg, QKClass};
use crate::seidel::{Generator, SeidelElement};
use crate::shape::QuantumShape;
use crate::skew::{Ambient, BoxPos, SkewShape};
use crate::symplectic::{curve_nbhd_symbols, diagram, gw_pieri, SchubertSymbol};
use crate::tableaux::{enumerate, Label, Tableau, TableauKind, Violation};
use std::collections::{BTreeMap, BTreeSet};

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: String,
    pub cases: u64,
    pub failures: Vec<String>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.cases > 0
    }
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(|c| c.passed())
    }

    pub fn total_cases(&self) -> u64 {
        self.checks.iter().map(|c| c.cases).sum()
    }
}

struct Check {
    name: String,
    cases: u64,
    failures: Vec<String>,
}

impl Check {
    fn new(name: &str) -> Self {
        Check { name: name.into(), cases: 0, failures: Vec::new() }
    }

    fn case(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failures.len() < 16 {
            self.failures.push(detail());
        }
    }

    fn finish(self) -> CheckResult {
        CheckResult { name: self.name, cases: self.cases, failures: self.failures }
    }
}

/// Every rim skew shape embeddable in the LG(n,2n) strip with at most
/// `max_boxes` boxes, normalized so the top row is row 1.
pub fn enumerate_rims(n: u32, max_boxes: usize) -> Vec<SkewShape> {
    let ambient = Ambient::LG { n };
    let n = n as i64;
    let mut out = Vec::new();
    let mut boxes: Vec<BoxPos> = Vec::new();

    fn emit(ambient: Ambient, boxes: &[BoxPos], out: &mut Vec<SkewShape>) {
        let set: BTreeSet<BoxPos> = boxes.iter().cloned().collect();
        out.push(SkewShape::from_boxes(ambient, set).expect("rim path is a skew shape"));
    }

    fn extend(ambient: Ambient, n: i64, boxes: &mut Vec<BoxPos>, max_boxes: usize, out: &mut Vec<SkewShape>) {
        emit(ambient, boxes, out);
        if boxes.len() == max_boxes {
            return;
        }
        let &(i, j) = boxes.last().unwrap();
        // west
        if j - 1 >= i {
            boxes.push((i, j - 1));
            extend(ambient, n, boxes, max_boxes, out);
            boxes.pop();
        }
        // south
        if j >= i + 1 {
            boxes.push((i + 1, j));
            extend(ambient, n, boxes, max_boxes, out);
            boxes.pop();
        }
        // strict south-west jumps
        for i2 in (i + 1)..=(j - 1) {
            for j2 in i2..=(j - 1).min(i2 + n) {
                boxes.push((i2, j2));
                extend(ambient, n, boxes, max_boxes, out);
                boxes.pop();
            }
        }
    }

    for c in 1..=(1 + n) {
        boxes.push((1, c));
        extend(ambient, n, &mut boxes, max_boxes, &mut out);
        boxes.pop();
    }
    out
}

/// Route agreement: closed sums, recursions and signed tableau counts agree
/// on every rim in the sweep.
pub fn route_agreement(max_n: u32, max_boxes: usize) -> Result<SuiteReport> {
    let mut eng = CoeffEngine::new();
    let mut c_routes = Check::new("C: recursion = closed sum = signed KLG count");
    let mut hq_routes = Check::new("H_q: recursion = closed sum");
    let mut nq_tab = Check::new("N_q recursion = signed QKLG count on NE-touching rims");
    let mut nhat_nq = Check::new("N-hat = N_q on NE-touching rims, = C off the diagonal");
    for n in 2..=max_n {
        for theta in enumerate_rims(n, max_boxes) {
            let size = theta.size() as i64;
            for p in -2..=size + 2 {
                let c_rec = eng.c(&theta, p);
                let c_closed = eng.c_closed(&theta, p)?;
                let c_tab = eng.c_tableau(&theta, p);
                c_routes.case(c_rec == c_closed && c_rec == c_tab, || {
                    format!("C mismatch on {:?} (n={n}, p={p}): rec={c_rec} closed={c_closed} tab={c_tab}", theta.boxes())
                });
                let hq_rec = eng.hq(&theta, p)?;
                let hq_closed = eng.hq_closed(&theta, p)?;
                hq_routes.case(hq_rec == hq_closed, || {
                    format!("H_q mismatch on {:?} (n={n}, p={p}): rec={hq_rec} closed={hq_closed}", theta.boxes())
                });
                let nhat = eng.nhat(&theta, p)?;
                if theta.ne_diag_box_count() == 1 {
                    let nq = eng.nq(&theta, p)?;
                    let ntab = eng.n_tableau(&theta, p)?;
                    nq_tab.case(nq == ntab, || {
                        format!("N_q mismatch on {:?} (n={n}, p={p}): rec={nq} tab={ntab}", theta.boxes())
                    });
                    nhat_nq.case(nhat == nq, || {
                        format!("N-hat mismatch on {:?} (n={n}, p={p}): nhat={nhat} nq={nq}", theta.boxes())
                    });
                } else {
                    nhat_nq.case(nhat == c_rec, || {
                        format!("N-hat mismatch off diagonal on {:?} (n={n}, p={p}): nhat={nhat} c={c_rec}", theta.boxes())
                    });
                }
            }
        }
    }
    Ok(SuiteReport {
        suite: "route-agreement".into(),
        checks: vec![c_routes.finish(), hq_routes.finish(), nq_tab.finish(), nhat_nq.finish()],
    })
}

/// The recursion lemmas: boundary values, the two difference identities, the
/// undeformed-vs-quantum comparison, and the binomial identity for h.
pub fn recursions(max_n: u32, max_boxes: usize) -> Result<SuiteReport> {
    let mut eng = CoeffEngine::new();
    let mut hbinom = Check::new("h(a+1,b) + h(a,b-1) = 2 h(a,b)");
    for a in 0..=10 {
        for b in -2..=12 {
            hbinom.case(h(a + 1, b)? + h(a, b - 1)? == 2 * h(a, b)?, || format!("a={a} b={b}"));
        }
    }
    let mut basic = Check::new("boundary values: vanishing and 2^N' at p = |theta|");
    let mut nncc = Check::new("2 N_q(p) - N_q(p+1) vs C");
    let mut hhcn = Check::new("H_q(p) - H_q(p+1) = C(p) - N_q(p)");
    let mut odot = Check::new("H_q - N_q = sum of C over ideals below the arm");
    for n in 2..=max_n {
        for theta in enumerate_rims(n, max_boxes) {
            let size = theta.size() as i64;
            let np = theta.n_prime()? as u32;
            let npq = theta.n_prime_q()? as u32;
            // (a) vanishing at p <= 0, (b) top values, (c) vanishing past |theta|
            for p in [-2, -1, 0] {
                let single_row = theta.is_single_row();
                basic.case(
                    eng.c(&theta, p) == 0
                        && eng.nq(&theta, p)? == 0
                        && eng.hq(&theta, p)? == i64::from(single_row),
                    || format!("rec:basic(a) fails on {:?} (n={n}, p={p})", theta.boxes()),
                );
            }
            basic.case(
                eng.c(&theta, size) == 1 << np
                    && eng.nq(&theta, size)? == 1 << npq
                    && eng.hq(&theta, size)? == 1 << npq,
                || format!("rec:basic(b) fails on {:?} (n={n})", theta.boxes()),
            );
            for p in [size + 1, size + 2] {
                basic.case(
                    eng.c(&theta, p) == 0 && eng.nq(&theta, p)? == 0 && eng.hq(&theta, p)? == 0,
                    || format!("rec:basic(c) fails on {:?} (n={n}, p={p})", theta.boxes()),
                );
            }
            let arm = theta.ne_arm()?;
            // the lemma excludes arms that are disconnected single boxes,
            // which includes single-box shapes (the arm is vacuously
            // disconnected from the empty complement)
            let arm_single_disconnected = arm.psi.size() == 1 && !arm.connected;
            for p in -2..size {
                if !arm_single_disconnected && (arm.arm_is_row || arm.arm_is_column) {
                    let lhs = 2 * eng.nq(&theta, p)? - eng.nq(&theta, p + 1)?;
                    let rhs = if arm.arm_is_row {
                        eng.c(&theta, p) - eng.c(&theta, p + 1)
                    } else {
                        eng.c(&theta, p)
                    };
                    nncc.case(lhs == rhs, || {
                        format!("rec:nncc fails on {:?} (n={n}, p={p}): lhs={lhs} rhs={rhs}", theta.boxes())
                    });
                }
                let lhs = eng.hq(&theta, p)? - eng.hq(&theta, p + 1)?;
                let rhs = eng.c(&theta, p) - eng.nq(&theta, p)?;
                hhcn.case(lhs == rhs, || {
                    format!("rec:hhcn fails on {:?} (n={n}, p={p}): lhs={lhs} rhs={rhs}", theta.boxes())
                });
            }
            for p in -2..=size + 2 {
                let lhs = eng.hq(&theta, p)? - eng.nq(&theta, p)?;
                let rhs = if arm.arm_is_row {
                    let mut sum = 0;
                    for phi in theta.lower_ideals_containing(&arm.theta_hat, true) {
                        sum += eng.c(&phi, p);
                    }
                    sum
                } else {
                    0
                };
                odot.case(lhs == rhs, || {
                    format!("rec:odot fails on {:?} (n={n}, p={p}): lhs={lhs} rhs={rhs}", theta.boxes())
                });
            }
        }
    }
    Ok(SuiteReport {
        suite: "recursions".into(),
        checks: vec![hbinom.finish(), basic.finish(), nncc.finish(), hhcn.finish(), odot.finish()],
    })
}

/// The worked product examples, exactly.
pub fn pieri_examples() -> Result<SuiteReport> {
    let mut golden = Check::new("golden Pieri products");
    // Gr(3,7): O^3 * O^{(3,3,1)} = O^{(4,3,3)} + q O^{(2,1)} - q O^{(2,2)}
    {
        let fam = Family::gr(3, 7)?;
        let lam = QuantumShape::classical(fam, vec![3, 3, 1])?;
        let got = pieri(3, &lam)?;
        let mut want = QKClass::zero(fam);
        want.add_term(QuantumShape::classical(fam, vec![4, 3, 3])?, 1);
        want.add_term(QuantumShape::classical(fam, vec![2, 1])?.shifted(1, false)?, 1);
        want.add_term(QuantumShape::classical(fam, vec![2, 2])?.shifted(1, false)?, -1);
        golden.case(got == want, || format!("Gr(3,7): got {got}"));
    }
    // OG(5,10): O^2 * O^{(4,2)} = 2 O^{(4,3,1)} - O^{(4,3,2)} + q - 2q O^1 + q O^2
    {
        let fam = Family::og(5)?;
        let lam = QuantumShape::classical(fam, vec![4, 2])?;
        let got = pieri(2, &lam)?;
        let mut want = QKClass::zero(fam);
        want.add_term(QuantumShape::classical(fam, vec![4, 3, 1])?, 2);
        want.add_term(QuantumShape::classical(fam, vec![4, 3, 2])?, -1);
        want.add_term(QuantumShape::identity(fam).shifted(1, false)?, 1);
        want.add_term(QuantumShape::classical(fam, vec![1])?.shifted(1, false)?, -2);
        want.add_term(QuantumShape::classical(fam, vec![2])?.shifted(1, false)?, 1);
        golden.case(got == want, || format!("OG(5,10): got {got}"));
    }
    // LG(7,14) coefficient of q O^{(7,5,3,2)} in O^6 * O^{(7,5,4,2)} is -4
    {
        let fam = Family::lg(7)?;
        let lam = QuantumShape::classical(fam, vec![7, 5, 4, 2])?;
        let got = pieri(6, &lam)?;
        let target = QuantumShape::classical(fam, vec![7, 5, 3, 2])?.shifted(1, false)?;
        golden.case(got.coefficient(&target) == -4, || {
            format!("LG(7,14): coefficient {}", got.coefficient(&target))
        });
    }
    // Gr(2,4): [X^(2)] * O^{(2,1)} = q O^{(1)} via pieri, seidel action and degree
    let mut seidel_routes = Check::new("Gr(2,4) point product via Pieri, Seidel action and degree");
    {
        let fam = Family::gr(2, 4)?;
        let lam = QuantumShape::classical(fam, vec![2, 1])?;
        let want = QKClass::basis(QuantumShape::classical(fam, vec![1])?.shifted(1, false)?);
        let via_pieri = pieri(2, &lam)?;
        seidel_routes.case(via_pieri == want, || format!("pieri route gave {via_pieri}"));
        let sigma = SeidelElement::generator(fam, Generator::Sigma)?;
        let via_action = sigma.multiply(&QKClass::basis(lam.clone()))?;
        seidel_routes.case(via_action == want, || format!("seidel action gave {via_action}"));
        let d = sigma.degree_on(&lam)?;
        let wu = sigma.act_on_shape(&lam)?;
        seidel_routes.case(d == 1 && wu.shift() == 1 && wu.mu() == [1], || {
            format!("seidel degree gave q^{d} O^{:?}", wu.mu())
        });
    }
    // LG(7,14) QKLG enumeration: exactly the 4 valid fillings; the
    // 5 near-miss KLG fillings fail with the expected clauses.
    let mut qklg = Check::new("LG(7,14) QKLG witnesses and violated clauses");
    {
        let (theta, valid, invalid) = lg714_fillings()?;
        let tabs = enumerate(TableauKind::Qklg, &theta, 6);
        qklg.case(tabs.len() == 4, || format!("expected 4 QKLG tableaux, got {}", tabs.len()));
        for (k, t) in valid.iter().enumerate() {
            qklg.case(t.validate().is_ok(), || format!("valid filling {k} rejected: {:?}", t.validate()));
            qklg.case(tabs.contains(t), || format!("valid filling {k} missing from enumeration"));
        }
        for (k, (t, clause)) in invalid.iter().enumerate() {
            let got = t.validate();
            qklg.case(got == Err(*clause), || format!("invalid filling {k}: expected {clause:?}, got {got:?}"));
        }
        let klg = enumerate(TableauKind::Klg, &theta, 6);
        qklg.case(klg.len() == 9, || format!("expected 9 KLG tableaux, got {}", klg.len()));
    }
    // OG(5,10): seven KOG-tableaux in total across the candidate shapes
    let mut kog = Check::new("OG(5,10) KOG witnesses across the product");
    {
        let fam = Family::og(5)?;
        let lam = QuantumShape::classical(fam, vec![4, 2])?;
        let mut total = 0usize;
        for nu in lam.candidates_above() {
            let theta = nu.skew(&lam)?;
            if !theta.is_empty() {
                total += enumerate(TableauKind::Kog, &theta, 2).len();
            }
        }
        kog.case(total == 7, || format!("expected 7 KOG tableaux, got {total}"));
    }
    Ok(SuiteReport {
        suite: "pieri-examples".into(),
        checks: vec![golden.finish(), seidel_routes.finish(), qklg.finish(), kog.finish()],
    })
}

/// The LG(7,14) example shape with its 4 valid QKLG fillings and the 5
/// KLG fillings that violate the quantum conditions.
pub fn lg714_fillings() -> Result<(SkewShape, Vec<Tableau>, Vec<(Tableau, Violation)>)> {
    let fam = Family::lg(7)?;
    let nu = QuantumShape::classical(fam, vec![7, 5, 3, 2])?.shifted(1, false)?;
    let lam = QuantumShape::classical(fam, vec![7, 5, 4, 2])?;
    let theta = nu.skew(&lam)?;
    let boxes = [(1, 8), (2, 7), (2, 8), (3, 7), (4, 6), (5, 5), (5, 6)];
    let build = |labels: [(u32, bool); 7]| -> Result<Tableau> {
        let entries: BTreeMap<BoxPos, Label> = boxes
            .iter()
            .cloned()
            .zip(labels.iter().map(|&(v, p)| Label::new(v, p)))
            .collect();
        Tableau::new(TableauKind::Qklg, theta.clone(), &entries)
    };
    let pr = true;
    let un = false;
    let valid = vec![
        build([(1, pr), (2, pr), (6, un), (3, pr), (4, pr), (4, un), (5, un)])?,
        build([(1, pr), (2, pr), (6, un), (3, pr), (3, pr), (4, un), (5, un)])?,
        build([(1, pr), (2, pr), (6, un), (3, pr), (4, pr), (5, un), (6, un)])?,
        build([(1, pr), (2, pr), (6, un), (6, un), (3, pr), (4, un), (5, un)])?,
    ];
    let invalid = vec![
        (build([(1, pr), (2, pr), (6, un), (5, un), (3, pr), (3, un), (4, un)])?, Violation::TerminalUnprimed),
        (build([(1, pr), (2, pr), (6, un), (5, un), (3, pr), (4, un), (5, un)])?, Violation::TerminalUnprimed),
        (build([(1, pr), (2, pr), (6, un), (5, un), (2, pr), (3, un), (4, un)])?, Violation::QuantumRepeated),
        (build([(1, pr), (1, pr), (6, un), (2, pr), (3, pr), (4, un), (5, un)])?, Violation::QuantumRepeated),
        (build([(1, pr), (1, pr), (6, un), (5, un), (2, pr), (3, un), (4, un)])?, Violation::QuantumRepeated),
    ];
    Ok((theta, valid, invalid))
}

fn families_for_seidel(max_n: u32) -> Vec<Family> {
    let mut fams = Vec::new();
    for n in 2..=max_n {
        for m in 1..n {
            fams.push(Family::GrA { m, n });
        }
    }
    for n in 2..=max_n {
        fams.push(Family::OG { n });
    }
    for n in 1..=max_n {
        fams.push(Family::LG { n });
    }
    fams
}

/// Group relations, order-automorphism behaviour and the single-term law.
pub fn seidel_suite(max_n: u32) -> Result<SuiteReport> {
    let mut relations = Check::new("group relations as shape maps");
    let mut order = Check::new("box action preserves the strip order");
    let mut single = Check::new("Seidel products have a single unit term");
    for fam in families_for_seidel(max_n) {
        let shapes: Vec<QuantumShape> = QuantumShape::all_classical(fam)
            .into_iter()
            .flat_map(|s| [-1i64, 0, 1].into_iter().filter_map(move |d| s.shifted(d, false).ok()))
            .collect();
        let rels: Vec<(SeidelElement, SeidelElement)> = match fam {
            Family::GrA { m, n } => {
                let sigma = SeidelElement::generator(fam, Generator::Sigma)?;
                let tau = SeidelElement::generator(fam, Generator::Tau)?;
                let point = SeidelElement::generator(fam, Generator::Point)?;
                let q = SeidelElement::generator(fam, Generator::Q)?;
                vec![
                    (sigma.pow(m as i64), point),
                    (tau.pow((n - m) as i64), point),
                    (sigma.compose(&tau)?, q),
                ]
            }
            Family::OG { n } => {
                let row = SeidelElement::generator(fam, Generator::Row)?;
                let point = SeidelElement::generator(fam, Generator::Point)?;
                let q = SeidelElement::generator(fam, Generator::Q)?;
                vec![(row.pow(2), q), (point.pow(2), row.pow(n as i64))]
            }
            Family::LG { n } => {
                let point = SeidelElement::generator(fam, Generator::Point)?;
                let q = SeidelElement::generator(fam, Generator::Q)?;
                vec![(point.pow(2), q.pow(n as i64))]
            }
        };
        for (a, b) in &rels {
            for s in &shapes {
                relations.case(a.act_on_shape(s)? == b.act_on_shape(s)?, || {
                    format!("{fam}: {a:?} and {b:?} differ on {s}")
                });
            }
        }
        // order preservation on a window of boxes
        let gens: Vec<SeidelElement> = match fam {
            Family::GrA { .. } => vec![
                SeidelElement::generator(fam, Generator::Sigma)?,
                SeidelElement::generator(fam, Generator::Tau)?,
            ],
            Family::OG { .. } => vec![
                SeidelElement::generator(fam, Generator::Row)?,
                SeidelElement::generator(fam, Generator::Point)?,
            ],
            Family::LG { .. } => vec![
                SeidelElement::generator(fam, Generator::Q)?,
                SeidelElement::generator(fam, Generator::Point)?,
            ],
        };
        let window: Vec<BoxPos> = match fam {
            Family::GrA { m, .. } => (1..=m as i64).flat_map(|i| (-3..=6).map(move |j| (i, j))).collect(),
            _ => (-2..=4)
                .flat_map(|i| (i - 2..=i + 10).map(move |j| (i, j)))
                .filter(|&(i, j)| fam.in_strip(i, j))
                .collect(),
        };
        for g in &gens {
            for &a in &window {
                for &b in &window {
                    let leq = box_leq(fam, a, b);
                    let ga = g.act_on_box(a.0, a.1)?;
                    let gb = g.act_on_box(b.0, b.1)?;
                    order.case(leq == box_leq(fam, ga, gb), || {
                        format!("{fam}: {g:?} breaks order on {a:?} <= {b:?}")
                    });
                }
            }
        }
        // single-term property (and consistency with the degree route)
        let elements: Vec<SeidelElement> = gens.iter().map(|g| g.pow(1)).chain(gens.iter().map(|g| g.pow(2))).collect();
        for s in &elements {
            for u in &shapes {
                let img = s.multiply(&QKClass::basis(u.clone()))?;
                single.case(img.num_terms() == 1 && img.terms().next().map(|(_, c)| c) == Some(1), || {
                    format!("{fam}: {s:?} * {u} = {img}")
                });
            }
            if s.classical_shape().is_ok() {
                for u in QuantumShape::all_classical(fam) {
                    let d = s.degree_on(&u)?;
                    let img = s.act_on_shape(&u)?;
                    single.case(d == img.shift(), || format!("{fam}: degree mismatch for {s:?} * {u}"));
                }
            }
        }
    }
    Ok(SuiteReport {
        suite: "seidel".into(),
        checks: vec![relations.finish(), order.finish(), single.finish()],
    })
}

fn box_leq(fam: Family, a: BoxPos, b: BoxPos) -> bool {
    match fam {
        Family::GrA { m, n } => (-2..=2).any(|k| {
            let (i, j) = (a.0 + k * m as i64, a.1 + k * (m as i64 - n as i64));
            i <= b.0 && j <= b.1
        }),
        _ => a.0 <= b.0 && a.1 <= b.1,
    }
}

/// Deterministic splitmix64 stream.
struct SplitMix(u64);

impl SplitMix {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    fn below(&mut self, n: u64) -> u64 {
        self.next() % n
    }
}

fn random_strict_partition(rng: &mut SplitMix, n: u32) -> Vec<u32> {
    let mut mu = Vec::new();
    let mut part = n;
    while part >= 1 {
        if rng.below(2) == 0 {
            mu.push(part);
        }
        part -= 1;
    }
    mu
}

/// Connector correspondence and dimension bookkeeping between skew-shape
/// statistics and matrix diagrams, plus rook-strip reconstruction of the
/// undeformed coefficients from Gromov-Witten values.
pub fn gw_diagram(samples: u64, max_n: u32, seed: u64) -> Result<SuiteReport> {
    let mut rng = SplitMix(seed);
    let mut connector = Check::new("lone stars = n - R - N and quadratic components = N");
    let mut dimdiff = Check::new("dimension drop per row matches the constraint count");
    let mut tried = 0u64;
    while connector.cases < samples && tried < samples * 400 {
        tried += 1;
        let n = 2 + (rng.below((max_n - 1) as u64) as u32);
        let lam = random_strict_partition(&mut rng, n);
        let mu = random_strict_partition(&mut rng, n);
        let d = rng.below(n as u64 + 1) as i64;
        let fam = Family::lg(n)?;
        let lam_shape = QuantumShape::classical(fam, lam.clone())?.shifted(d, false)?;
        let mu_shape = QuantumShape::classical(fam, mu.clone())?;
        if !lam_shape.contains(&mu_shape)? {
            continue;
        }
        let theta = lam_shape.skew(&mu_shape)?;
        let r = theta.max_rim() as i64;
        if r > n as i64 {
            continue;
        }
        let nn = theta.n_both_diagonals()? as i64;
        let (p_sym, q_sym) = curve_nbhd_symbols(&lam, &mu, d, n)?;
        let dia = diagram(&p_sym, &q_sym)?;
        connector.case(
            dia.lone_stars.len() as i64 == n as i64 - r - nn && dia.quadratic_components.len() as i64 == nn,
            || {
                format!(
                    "connector counts fail for lambda={lam:?} mu={mu:?} d={d} n={n}: stars={} quads={} R={r} N={nn}",
                    dia.lone_stars.len(),
                    dia.quadratic_components.len()
                )
            },
        );
        // dimension differences, for every row of the diagram
        let m = p_sym.m();
        for k in 0..m {
            let mut pe = p_sym.elems().to_vec();
            let mut qe = q_sym.elems().to_vec();
            let (pk, qk) = (pe.remove(k), qe.remove(k));
            let p2 = SchubertSymbol::new(n, pe)?;
            let q2 = SchubertSymbol::new(n, qe)?;
            let drop = dia.dimension - diagram(&p2, &q2)?.dimension;
            let constraints = dia.correlated_pairs.iter().filter(|&&(i, j)| i == k || j == k).count() as i64;
            dimdiff.case(drop == (pk as i64 - qk as i64) - constraints, || {
                format!("dimension drop fails at row {k} for lambda={lam:?} mu={mu:?} d={d} n={n}")
            });
        }
    }
    // Rook-strip duality: H(nu[d]/mu, p) equals the signed sum of GW values
    // over rook-strip subshapes, for small LG.
    let mut rook = Check::new("rook-strip reconstruction of undeformed coefficients");
    let mut eng = CoeffEngine::new();
    for n in 1..=4u32 {
        let fam = Family::lg(n)?;
        let classical = QuantumShape::all_classical(fam);
        for nu in &classical {
            for mu in &classical {
                for d in 0..=(n as i64 + 2) {
                    let nu_d = nu.shifted(d, false)?;
                    if !nu_d.contains(mu)? {
                        continue;
                    }
                    let theta = nu_d.skew(mu)?;
                    for p in 1..=n as i64 {
                        let lhs = eng.h_closed(&theta, p)?;
                        let lhs_dispatch = eng.h_coeff(&theta, p)?;
                        let mut rhs = 0i64;
                        for kappa in rook_strip_subshapes(nu.mu()) {
                            let sign_len: i64 = nu.size() - kappa.iter().map(|&x| x as i64).sum::<i64>();
                            let term = gw_pieri(&kappa, mu.mu(), d, p, n)?;
                            rhs += if sign_len % 2 == 0 { term } else { -term };
                        }
                        rook.case(lhs == rhs && lhs_dispatch == lhs, || {
                            format!(
                                "rook-strip fails for nu={:?} mu={:?} d={d} p={p} n={n}: H={lhs} dispatch={lhs_dispatch} sum={rhs}",
                                nu.mu(),
                                mu.mu()
                            )
                        });
                    }
                }
            }
        }
    }
    Ok(SuiteReport {
        suite: "gw-diagram".into(),
        checks: vec![connector.finish(), dimdiff.finish(), rook.finish()],
    })
}

/// All strict kappa <= nu with nu/kappa a rook strip (at most one box per row
/// and per column of the shifted diagram).
fn rook_strip_subshapes(nu: &[u32]) -> Vec<Vec<u32>> {
    let ell = nu.len();
    let mut out = Vec::new();
    'mask: for mask in 0u32..(1 << ell) {
        let mut kappa: Vec<u32> = nu.to_vec();
        let mut removed_cols = BTreeSet::new();
        for (row, k) in kappa.iter_mut().enumerate() {
            if mask & (1 << row) != 0 {
                // removed box sits at column (row+1) + nu_row - 1
                let col = row as u32 + *k;
                if !removed_cols.insert(col) {
                    continue 'mask;
                }
                *k -= 1;
            }
        }
        while kappa.last() == Some(&0) {
            kappa.pop();
        }
        if kappa.windows(2).all(|w| w[0] > w[1]) && kappa.iter().all(|&x| x > 0) {
            out.push(kappa);
        }
    }
    out
}

/// Ring-level properties: commuting Pieri operators, the undeformed
/// reconstruction, the q-interval property, classical limits and Seidel
/// compatibility.
pub fn ring_commute() -> Result<SuiteReport> {
    let families = vec![
        Family::gr(2, 4)?,
        Family::gr(2, 5)?,
        Family::gr(3, 6)?,
        Family::og(4)?,
        Family::og(5)?,
        Family::lg(2)?,
        Family::lg(3)?,
    ];
    let mut commute = Check::new("Pieri operators commute");
    let mut interval = Check::new("q-exponents form an interval");
    let mut classical = Check::new("q^0 part equals the K-theory Pieri product");
    let mut seidel_compat = Check::new("Pieri commutes with the Seidel action");
    for fam in &families {
        let shapes = QuantumShape::all_classical(*fam);
        let pmax = fam.max_special() as i64;
        for lam in &shapes {
            for p in 1..=pmax {
                let first = pieri(p, lam)?;
                interval.case(first.q_support_is_interval(), || format!("{fam}: O^{p} * {lam}"));
                classical.case(first.classical_part() == classical_pieri(*fam, p, lam)?, || {
                    format!("{fam}: classical limit of O^{p} * {lam}")
                });
                for r in p..=pmax {
                    let a = pieri_class(r, &first)?;
                    let b = pieri_class(p, &pieri(r, lam)?)?;
                    commute.case(a == b, || format!("{fam}: [O^{p}, O^{r}] on {lam}"));
                }
            }
        }
        let gens: Vec<SeidelElement> = match fam {
            Family::GrA { .. } => vec![
                SeidelElement::generator(*fam, Generator::Sigma)?,
                SeidelElement::generator(*fam, Generator::Tau)?,
                SeidelElement::generator(*fam, Generator::Point)?,
            ],
            Family::OG { .. } => vec![
                SeidelElement::generator(*fam, Generator::Row)?,
                SeidelElement::generator(*fam, Generator::Point)?,
            ],
            Family::LG { .. } => vec![
                SeidelElement::generator(*fam, Generator::Q)?,
                SeidelElement::generator(*fam, Generator::Point)?,
            ],
        };
        for s in &gens {
            for lam in &shapes {
                for p in 1..=pmax {
                    let lhs = pieri_class(p, &s.multiply(&QKClass::basis(lam.clone()))?)?;
                    let rhs = s.multiply(&pieri(p, lam)?)?;
                    seidel_compat.case(lhs == rhs, || format!("{fam}: {s:?} vs O^{p} on {lam}"));
                }
            }
        }
    }
    // Undeformed reconstruction: O^p * O^mu = (1 - q psi)(O^p (.) O^mu) on
    // the candidate interval, for LG(n <= 4).
    let mut nhatcoef = Check::new("star = odot - q psi(odot) on the candidate interval");
    for n in 1..=4u32 {
        let fam = Family::lg(n)?;
        for mu in QuantumShape::all_classical(fam) {
            for p in 1..=n as i64 {
                let star = pieri(p, &mu)?;
                let odot = undeformed_pieri_lg(p, &mu)?;
                let rhs = odot.sub(&psi(&odot)?.mul_q(1)?)?;
                let cands = mu.candidates_above();
                let all_match = cands.iter().all(|nu| star.coefficient(nu) == rhs.coefficient(nu));
                let support_ok = star.terms().all(|(s, _)| cands.contains(s));
                nhatcoef.case(all_match && support_ok, || {
                    format!("LG({n}): O^{p} (.) O^{mu} reconstruction")
                });
            }
        }
    }
    Ok(SuiteReport {
        suite: "ring-commute".into(),
        checks: vec![
            commute.finish(),
            interval.finish(),
            classical.finish(),
            seidel_compat.finish(),
            nhatcoef.finish(),
        ],
    })
}

/// Classical K-theory Pieri product, computed directly inside P_X; the
/// independent oracle for the q^0 part of the quantum product.
pub fn classical_pieri(fam: Family, p: i64, lam: &QuantumShape) -> Result<QKClass> {
    let mut out = QKClass::zero(fam);
    if !lam.is_classical() {
        return Err(crate::error::Error::Domain("classical Pieri needs a classical shape".into()));
    }
    for nu in QuantumShape::all_classical(fam) {
        if !nu.contains(lam)? {
            continue;
        }
        let theta = nu.skew(lam)?;
        if theta.is_empty() {
            continue;
        }
        let sign = if (theta.size() as i64 - p).rem_euclid(2) == 0 { 1 } else { -1 };
        let c = match fam {
            Family::GrA { .. } => coeff_a(&theta, p)?,
            Family::OG { .. } => sign * enumerate(TableauKind::Kog, &theta, p).len() as i64,
            Family::LG { .. } => {
                sign * enumerate(TableauKind::Klg, &theta.forget_ne_diagonal(), p).len() as i64
            }
        };
        out.add_term(nu, c);
    }
    Ok(out)
}

/// Run a named suite with a size budget.
pub fn run_suite(name: &str, max_size: u32) -> Result<SuiteReport> {
    match name {
        "route-agreement" => route_agreement(max_size.clamp(2, 6), 8),
        "recursions" => recursions(max_size.clamp(2, 6), 8),
        "pieri-examples" => pieri_examples(),
        "seidel" => seidel_suite(max_size.clamp(2, 8)),
        "gw-diagram" => gw_diagram(500, max_size.clamp(3, 8), 0x5eed),
        "ring-commute" => ring_commute(),
        other => Err(crate::error::Error::Domain(format!("unknown suite {other:?}"))),
    }
}

pub const SUITES: &[&str] = &[
    "route-agreement",
    "recursions",
    "pieri-examples",
    "seidel",
    "gw-diagram",
    "ring-commute",
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rim_enumeration_small() {
        // every enumerated shape is a rim with top row 1
        for theta in enumerate_rims(3, 4) {
            assert!(theta.is_rim());
            assert_eq!(theta.boxes().iter().map(|b| b.0).min(), Some(1));
        }
    }

    #[test]
    fn rims_with_one_box() {
        let rims = enumerate_rims(4, 1);
        assert_eq!(rims.len(), 5); // (1,1) .. (1,5)
    }

    #[test]
    fn rook_strips_of_staircase() {
        // (1,2) and (2,2) share a column, so removing both is not a rook
        // strip, and removing only (1,2) breaks strictness.
        let subs = rook_strip_subshapes(&[2, 1]);
        assert!(subs.contains(&vec![2, 1]));
        assert!(subs.contains(&vec![2]));
        assert_eq!(subs.len(), 2);
        // (3,1): removable boxes sit in distinct columns
        let subs = rook_strip_subshapes(&[3, 1]);
        assert!(subs.contains(&vec![3, 1]));
        assert!(subs.contains(&vec![2, 1]));
        assert!(subs.contains(&vec![3]));
        assert!(subs.contains(&vec![2]));
        assert_eq!(subs.len(), 4);
    }
}
