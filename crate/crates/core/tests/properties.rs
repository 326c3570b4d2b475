//! Module invariants: order-isomorphism sanity, canonical-form round trips,
//! the candidate enumeration bound, lattice laws, rim-hook confluence, sign
//! alternation, and serialization round trips.

use proptest::prelude::*;
use qk_core::coeffs::CoeffEngine;
use qk_core::ring::{pieri, QKClass};
use qk_core::shape::QuantumShape;
use qk_core::skew::BoxPos;
use qk_core::verify::enumerate_rims;
use qk_core::Family;
use std::collections::BTreeSet;

fn sweep_families() -> Vec<Family> {
    let mut fams = Vec::new();
    for n in 2..=5 {
        fams.push(Family::lg(n).unwrap());
        fams.push(Family::og(n).unwrap());
    }
    for (m, n) in [(1u32, 4u32), (1, 7), (2, 4), (2, 5), (2, 7), (2, 10), (3, 4), (3, 6), (4, 5)] {
        fams.push(Family::gr(m, n).unwrap());
    }
    fams
}

fn shapes_with_shifts(fam: Family, shifts: std::ops::RangeInclusive<i64>) -> Vec<QuantumShape> {
    QuantumShape::all_classical(fam)
        .into_iter()
        .flat_map(|s| shifts.clone().map(move |d| s.shifted(d, false).unwrap()))
        .collect()
}

/// Box-wise containment over a window, independent of the canonical-form
/// comparison that `contains` uses.
fn boxwise_contains(a: &QuantumShape, b: &QuantumShape) -> bool {
    match a.family() {
        Family::GrA { m, n } => {
            let seq = b.gra_seq();
            for i in 1..=m as i64 {
                let hi = seq[(i - 1) as usize];
                for j in (hi - n as i64)..=hi {
                    if b.contains_box(i, j).unwrap() && !a.contains_box(i, j).unwrap() {
                        return false;
                    }
                }
            }
            true
        }
        fam => {
            for i in -12..=14i64 {
                for j in i..=(i + fam.max_special() as i64 + 2) {
                    if !fam.in_strip(i, j) {
                        continue;
                    }
                    if b.contains_box(i, j).unwrap() && !a.contains_box(i, j).unwrap() {
                        return false;
                    }
                }
            }
            true
        }
    }
}

#[test]
fn order_isomorphism_sanity() {
    for fam in sweep_families() {
        let shapes = shapes_with_shifts(fam, -2..=2);
        for a in &shapes {
            for b in &shapes {
                assert_eq!(
                    a.contains(b).unwrap(),
                    boxwise_contains(a, b),
                    "{fam}: containment mismatch between {a} and {b}"
                );
            }
        }
        // lambda[e] <= lambda[d] iff e <= d; equal shifts compare partitions
        for s in QuantumShape::all_classical(fam) {
            for e in -2..=2i64 {
                for d in -2..=2i64 {
                    let le = s.shifted(d, false).unwrap().contains(&s.shifted(e, false).unwrap()).unwrap();
                    assert_eq!(le, e <= d, "{fam}: shift comparison fails for {s}");
                }
            }
        }
        let classical = QuantumShape::all_classical(fam);
        for a in &classical {
            for b in &classical {
                let comp = b.mu().iter().enumerate().all(|(k, &x)| a.mu().get(k).copied().unwrap_or(0) >= x);
                assert_eq!(a.contains(b).unwrap(), comp, "{fam}: partition containment fails");
            }
        }
    }
}

#[test]
fn canonical_form_round_trip() {
    for fam in sweep_families() {
        for s in shapes_with_shifts(fam, -2..=2) {
            match fam {
                Family::GrA { m, n } => {
                    let seq = s.gra_seq();
                    let back = QuantumShape::from_gra_boundary(m, n, &seq).unwrap();
                    assert_eq!(back, s, "{fam}: boundary round trip fails for {s}");
                }
                _ => {
                    // rebuild from a window of row ends
                    let lo = -12i64;
                    let ends: Vec<i64> = ((lo + 1)..=14).map(|i| s.row_end(i)).collect();
                    let back = QuantumShape::from_row_ends(fam, lo, &ends).unwrap();
                    assert_eq!(back, s, "{fam}: row-end round trip fails for {s}");
                }
            }
        }
    }
}

#[test]
fn rims_stay_inside_one_step() {
    // A rim skew shape nu/lambda forces nu inside lambda[1] (half-step for
    // OG); this is what justifies candidates_above.
    for fam in [Family::lg(3).unwrap(), Family::lg(4).unwrap(), Family::og(4).unwrap(), Family::og(5).unwrap()] {
        let shapes = shapes_with_shifts(fam, 0..=1);
        for lam in &shapes {
            let upper = match fam {
                Family::OG { .. } => lam.shifted(1, true).unwrap(),
                _ => lam.shifted(1, false).unwrap(),
            };
            for nu in &shapes {
                if !nu.contains(lam).unwrap() {
                    continue;
                }
                let theta = nu.skew(lam).unwrap();
                if !theta.is_empty() && theta.is_rim() && theta.size() <= 12 {
                    assert!(
                        upper.contains(nu).unwrap(),
                        "{fam}: rim {nu} / {lam} escapes the one-step bound"
                    );
                }
            }
        }
        // and candidates_above lists exactly the ideals of the interval
        for lam in QuantumShape::all_classical(fam) {
            let cands = lam.candidates_above();
            assert!(cands.contains(&lam));
            let upper = match fam {
                Family::OG { .. } => lam.shifted(1, true).unwrap(),
                _ => lam.shifted(1, false).unwrap(),
            };
            for nu in &cands {
                assert!(nu.contains(&lam).unwrap() && upper.contains(nu).unwrap());
            }
            for nu in &shapes {
                if nu.contains(&lam).unwrap() && upper.contains(nu).unwrap() {
                    assert!(cands.contains(nu), "{fam}: interval ideal {nu} missing from candidates");
                }
            }
        }
    }
}

#[test]
fn lattice_laws() {
    for fam in [Family::lg(4).unwrap(), Family::og(4).unwrap(), Family::gr(2, 5).unwrap()] {
        let shapes = shapes_with_shifts(fam, -1..=1);
        for a in &shapes {
            for b in &shapes {
                let join = a.join(b).unwrap();
                let meet = a.meet(b).unwrap();
                assert!(join.contains(a).unwrap() && join.contains(b).unwrap());
                assert!(a.contains(&meet).unwrap() && b.contains(&meet).unwrap());
                // absorption
                assert_eq!(a.join(&a.meet(b).unwrap()).unwrap(), *a);
                assert_eq!(a.meet(&a.join(b).unwrap()).unwrap(), *a);
                for c in shapes.iter().step_by(7) {
                    // distributivity
                    let lhs = a.meet(&b.join(c).unwrap()).unwrap();
                    let rhs = a.meet(b).unwrap().join(&a.meet(c).unwrap()).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
}

/// Independent rim-hook oracle for GrA canonicalization: explore every order
/// of beta-number hook removals and check the terminal result is unique.
fn rim_hook_oracle(m: u32, n: u32, seq: &[i64]) -> (i64, Vec<u32>) {
    let width = (n - m) as i64;
    fn explore(betas: &[i64], width: i64, n: i64, d: i64, out: &mut BTreeSet<(i64, Vec<i64>)>) {
        let m = betas.len();
        let mut sorted = betas.to_vec();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        let fits = sorted
            .iter()
            .enumerate()
            .all(|(i, &b)| {
                let mu = b - (m as i64 - 1 - i as i64);
                (0..=width).contains(&mu)
            });
        if fits {
            out.insert((d, sorted));
            return;
        }
        for i in 0..m {
            let nb = betas[i] - n;
            if nb >= 0 && !betas.contains(&nb) {
                let mut next = betas.to_vec();
                next[i] = nb;
                explore(&next, width, n, d + 1, out);
            }
        }
    }
    let m_us = m as usize;
    let betas: Vec<i64> = (0..m_us).map(|i| seq[i] + (m_us - 1 - i) as i64).collect();
    let mut out = BTreeSet::new();
    explore(&betas, width, n as i64, 0, &mut out);
    assert_eq!(out.len(), 1, "rim-hook removal is not confluent on {seq:?}");
    let (d, sorted) = out.into_iter().next().unwrap();
    let m_i = m as i64;
    let mu: Vec<u32> = sorted
        .iter()
        .enumerate()
        .map(|(i, &b)| (b - (m_i - 1 - i as i64)) as u32)
        .filter(|&x| x > 0)
        .collect();
    (d, mu)
}

#[test]
fn gra_canonicalization_matches_rim_hook_oracle() {
    for (m, n) in [(2u32, 4u32), (2, 5), (3, 7), (3, 5)] {
        let width = (n - m) as i64;
        // all valid boundary sequences with entries in [0, width + m]
        let hi = width + m as i64;
        let mut stack: Vec<Vec<i64>> = vec![Vec::new()];
        let mut seqs = Vec::new();
        while let Some(cur) = stack.pop() {
            if cur.len() == m as usize {
                if cur[0] - cur[m as usize - 1] <= width {
                    seqs.push(cur);
                }
                continue;
            }
            let max = cur.last().copied().unwrap_or(hi);
            for v in 0..=max {
                let mut next = cur.clone();
                next.push(v);
                stack.push(next);
            }
        }
        for seq in seqs {
            let got = QuantumShape::from_gra_boundary(m, n, &seq).unwrap();
            let (d, mu) = rim_hook_oracle(m, n, &seq);
            assert_eq!((got.shift(), got.mu().to_vec()), (d, mu), "Gr({m},{n}) on {seq:?}");
        }
    }
}

#[test]
fn sign_alternation_on_rims() {
    // (-1)^{|theta|-p} C and N are non-negative: they count tableaux.
    let mut eng = CoeffEngine::new();
    for n in 2..=4u32 {
        for theta in enumerate_rims(n, 6) {
            let size = theta.size() as i64;
            for p in 0..=size + 1 {
                let sign = if (size - p).rem_euclid(2) == 0 { 1 } else { -1 };
                assert!(sign * eng.c(&theta, p) >= 0);
                if theta.ne_diag_box_count() == 1 {
                    assert!(sign * eng.nq(&theta, p).unwrap() >= 0);
                }
            }
        }
    }
}

#[test]
fn max_rim_matches_exponential_oracle_on_random_skews() {
    // deterministic small sweep over skew shapes with at most 10 boxes
    let fam = Family::lg(4).unwrap();
    let shapes = shapes_with_shifts(fam, 0..=1);
    let mut checked = 0usize;
    for lam in &shapes {
        for nu in &shapes {
            if !nu.contains(lam).unwrap() {
                continue;
            }
            let theta = nu.skew(lam).unwrap();
            if theta.size() > 10 {
                continue;
            }
            let v: Vec<BoxPos> = theta.boxes().iter().cloned().collect();
            let mut best = 0usize;
            for mask in 0u32..(1 << v.len()) {
                let sel: Vec<BoxPos> = v
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask & (1 << k) != 0)
                    .map(|(_, &b)| b)
                    .collect();
                if sel.iter().all(|&a| sel.iter().all(|&b| !(a.0 < b.0 && a.1 < b.1))) {
                    best = best.max(sel.len());
                }
            }
            assert_eq!(theta.max_rim(), best);
            checked += 1;
        }
    }
    assert!(checked > 200);
}

fn arb_family() -> impl Strategy<Value = Family> {
    prop_oneof![
        (1u32..=4, 2u32..=9).prop_filter_map("need m < n", |(m, n)| Family::gr(m, n).ok()),
        (2u32..=8).prop_map(|n| Family::og(n).unwrap()),
        (1u32..=8).prop_map(|n| Family::lg(n).unwrap()),
    ]
}

fn arb_shape() -> impl Strategy<Value = QuantumShape> {
    (arb_family(), any::<u64>(), -3i64..=3).prop_map(|(fam, bits, d)| {
        let all = QuantumShape::all_classical(fam);
        let s = all[(bits % all.len() as u64) as usize].clone();
        s.shifted(d, false).unwrap()
    })
}

proptest! {
    #[test]
    fn seidel_action_is_a_group_action(
        shape in arb_shape(),
        picks in proptest::collection::vec((any::<u8>(), -3i64..=3), 1..4),
    ) {
        use qk_core::seidel::Generator;
        use qk_core::SeidelElement;
        let fam = shape.family();
        let gens: Vec<Generator> = match fam {
            Family::GrA { .. } => vec![Generator::Sigma, Generator::Tau, Generator::Point, Generator::Q],
            Family::OG { .. } => vec![Generator::Row, Generator::Point, Generator::Q],
            Family::LG { .. } => vec![Generator::Point, Generator::Q],
        };
        let elems: Vec<SeidelElement> = picks
            .iter()
            .map(|&(pick, e)| SeidelElement::generator(fam, gens[pick as usize % gens.len()]).unwrap().pow(e))
            .collect();
        // composite element acting once = factors acting in sequence
        let mut word = SeidelElement::identity(fam);
        let mut stepwise = shape.clone();
        for s in &elems {
            word = s.compose(&word).unwrap();
            stepwise = s.act_on_shape(&stepwise).unwrap();
        }
        prop_assert_eq!(word.act_on_shape(&shape).unwrap(), stepwise);
        // inverse really inverts
        let back = word.inverse().act_on_shape(&word.act_on_shape(&shape).unwrap()).unwrap();
        prop_assert_eq!(back, shape);
    }

    #[test]
    fn seidel_box_and_shape_actions_agree(shape in arb_shape(), pick in any::<u8>(), e in -2i64..=2) {
        use qk_core::seidel::Generator;
        use qk_core::SeidelElement;
        let fam = shape.family();
        let gens: Vec<Generator> = match fam {
            Family::GrA { .. } => vec![Generator::Sigma, Generator::Tau, Generator::Point, Generator::Q],
            Family::OG { .. } => vec![Generator::Row, Generator::Point, Generator::Q],
            Family::LG { .. } => vec![Generator::Q, Generator::Point],
        };
        let s = SeidelElement::generator(fam, gens[pick as usize % gens.len()]).unwrap().pow(e);
        let image = s.act_on_shape(&shape).unwrap();
        // membership commutes with the box action over a window
        match fam {
            Family::GrA { m, .. } => {
                let seq = shape.gra_seq();
                for i in 1..=m as i64 {
                    for dj in -2..=2 {
                        let j = seq[(i - 1) as usize] + dj;
                        let (gi, gj) = s.act_on_box(i, j).unwrap();
                        prop_assert_eq!(
                            shape.contains_box(i, j).unwrap(),
                            image.contains_box(gi, gj).unwrap()
                        );
                    }
                }
            }
            _ => {
                for i in -6..=8i64 {
                    for j in i..=(i + fam.max_special() as i64 + 1) {
                        if !fam.in_strip(i, j) {
                            continue;
                        }
                        let (gi, gj) = s.act_on_box(i, j).unwrap();
                        prop_assert_eq!(
                            shape.contains_box(i, j).unwrap(),
                            image.contains_box(gi, gj).unwrap()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn literal_round_trip(shape in arb_shape()) {
        let lit = shape.to_string();
        let back = QuantumShape::parse(shape.family(), &lit).unwrap();
        prop_assert_eq!(back, shape);
    }

    #[test]
    fn json_round_trip(shape in arb_shape(), p in 1i64..=3) {
        let p = p.min(shape.family().max_special() as i64);
        let class = pieri(p, &shape).unwrap();
        let text = serde_json::to_string(&class.to_json()).unwrap();
        let parsed: serde_json::Value = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(QKClass::from_json(&parsed).unwrap(), class);
    }

    #[test]
    fn shift_composes(shape in arb_shape(), a in -2i64..=2, b in -2i64..=2) {
        let one = shape.shifted(a, false).unwrap().shifted(b, false).unwrap();
        let two = shape.shifted(a + b, false).unwrap();
        prop_assert_eq!(one, two);
    }
}
