//! Acceptance suite. Each test prints one `[PASS]` or `[FAIL]` line to
//! stderr (bypassing the test harness capture) and then asserts.

use std::io::Write;
use std::time::Instant;

use circulant_total::graph::{admissible_pairs, OffsetClass};
use circulant_total::schemes::{self, NineOddCase, SchemeId, Triple, TripleTable};
use circulant_total::solver::{exists_total_coloring_with, ChiStatus, Decision, SymmetryBreaking};
use circulant_total::{
    total_chromatic_number, verify, CirculantGraph, Color, Error, SearchBudget, TotalColoring,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Colors in a Type I coloring of a 4-regular graph.
const TYPE_I_COLORS: usize = 5;
const COMPARATOR_SAMPLES: usize = 10_000;
const COMPARATOR_MAX_N: usize = 20;
const SYMMETRY_MAX_N: usize = 8;
const SYMMETRY_MAX_K: usize = 7;
const AGREEMENT_MAX_N: usize = 12;
const AUDIT_MAX_N: usize = 90;
const SEED: u64 = 0x5eed_c1c7;

fn report(id: &str, title: &str, failures: &[String], started: Instant) {
    let verdict = if failures.is_empty() { "PASS" } else { "FAIL" };
    let mut err = std::io::stderr().lock();
    let _ = writeln!(err, "[{verdict}] {id} {title} ({:.1}s)", started.elapsed().as_secs_f64());
    for f in failures {
        let _ = writeln!(err, "       {f}");
    }
}

fn finish(id: &str, title: &str, failures: Vec<String>, started: Instant) {
    report(id, title, &failures, started);
    assert!(failures.is_empty(), "{id}: {} failure(s), first: {}", failures.len(), failures[0]);
}

/// Every color in `0..5` appears in the closed star of every vertex.
fn closed_stars_full(g: &CirculantGraph, c: &TotalColoring) -> bool {
    (0..g.n()).all(|i| {
        let mut seen = [false; TYPE_I_COLORS];
        for x in std::iter::once(c.vertex(i)).chain(g.incident_edges(i).map(|e| c.edge(e))) {
            seen[x as usize] = true;
        }
        seen.iter().all(|&s| s)
    })
}

#[test]
fn ac1_five_p_audit() {
    let started = Instant::now();
    let mut failures = Vec::new();
    let mut checked = 0;
    for p in 1..=10 {
        let n = 5 * p;
        for (a, b) in admissible_pairs(n) {
            if a % 5 == 0 || b % 5 == 0 {
                continue;
            }
            let g = CirculantGraph::new(n, a, b).unwrap();
            checked += 1;
            let id = schemes::select_scheme(&g);
            if !matches!(id, SchemeId::FivePCase1 | SchemeId::FivePCase2 | SchemeId::FivePCase3) {
                failures.push(format!("{g}: selected {id}"));
                continue;
            }
            match schemes::apply(&g, id) {
                Ok(c) => {
                    let r = verify(&g, &c).unwrap();
                    if !r.valid || r.colors_used != TYPE_I_COLORS {
                        failures.push(format!("{g}: {} conflicts, {} colors", r.conflicts.len(), r.colors_used));
                    }
                }
                Err(e) => failures.push(format!("{g}: {e}")),
            }
        }
    }
    assert!(checked > 0);
    finish("AC1", &format!("5p audit, {checked} instances n = 5..50"), failures, started);
}

/// The emitted triple (vertex, in-edge, out-edge) at vertex `i` of C_n(1,k).
fn triple_at(g: &CirculantGraph, c: &TotalColoring, i: usize) -> Triple {
    let n = g.n();
    let k = g.b();
    Triple {
        vertex: c.vertex(i),
        in_edge: c.edge(g.edge_id(OffsetClass::B, (i + n - k) % n)),
        out_edge: c.edge(g.edge_id(OffsetClass::B, i)),
    }
}

#[test]
fn ac2_nine_p_table_fidelity() {
    let started = Instant::now();
    let mut failures = Vec::new();
    let mut checked = 0;
    for p in [1, 3, 5] {
        let n = 9 * p;
        for k in 2..=(n - 1) / 2 {
            let g = CirculantGraph::new(n, 1, k).unwrap();
            let Some(case) = schemes::nine_p_route(&g).and_then(|id| {
                [NineOddCase::K1, NineOddCase::K4, NineOddCase::K7].into_iter().find(|c| c.scheme() == id)
            }) else {
                continue;
            };
            checked += 1;
            let c = match schemes::color_9p_odd(&g, case) {
                Ok(c) => c,
                Err(e) => {
                    failures.push(format!("{g}: completion failed: {e}"));
                    continue;
                }
            };
            let r = verify(&g, &c).unwrap();
            if !r.valid || r.colors_used != TYPE_I_COLORS {
                failures.push(format!("{g}: {} conflicts, {} colors", r.conflicts.len(), r.colors_used));
            }
            let published = TripleTable::published(case);
            let mismatched: Vec<usize> =
                (0..9).filter(|&x| (0..n).filter(|i| i % 9 == x).any(|i| triple_at(&g, &c, i) != published.entry(i))).collect();
            for x in mismatched {
                let e = triple_at(&g, &c, x);
                let t = published.entry(x);
                failures.push(format!(
                    "{g}: x = {x} emits ({},{},{}), table has ({},{},{})",
                    e.vertex, e.in_edge, e.out_edge, t.vertex, t.in_edge, t.out_edge
                ));
            }
        }
    }
    assert!(checked > 0);
    finish("AC2", &format!("9p odd table fidelity and completion, {checked} instances"), failures, started);
}

#[test]
fn ac3_nine_p_case1_and_six_p_audit() {
    let started = Instant::now();
    let mut failures = Vec::new();
    let mut verified = 0;
    let mut covered = 0;
    for n in 5..=AUDIT_MAX_N {
        for (a, b) in admissible_pairs(n) {
            let g = CirculantGraph::new(n, a, b).unwrap();
            let mut ids = Vec::new();
            if schemes::nine_p_route(&g) == Some(SchemeId::NinePEvenK0Mod3) {
                ids.push(SchemeId::NinePEvenK0Mod3);
            }
            if schemes::six_p_applies(&g) {
                ids.push(SchemeId::SixP);
            }
            for id in ids {
                covered += 1;
                match schemes::apply(&g, id) {
                    Ok(c) => {
                        let r = verify(&g, &c).unwrap();
                        if r.valid && r.colors_used == TYPE_I_COLORS {
                            verified += 1;
                        } else {
                            failures.push(format!("{g} {id}: unverified coloring returned"));
                        }
                    }
                    Err(Error::SchemeInvalid { scheme, detail, .. }) => {
                        failures.push(format!("{g} {scheme}: scheme invalid: {detail}"))
                    }
                    Err(e) => failures.push(format!("{g} {id}: {e}")),
                }
            }
        }
    }
    assert!(covered > 0);
    finish(
        "AC3",
        &format!("9p even-k0 and 6p audit n <= {AUDIT_MAX_N}, {verified}/{covered} verify"),
        failures,
        started,
    );
}

#[test]
fn ac4_power_of_cycle_classification() {
    let started = Instant::now();
    let mut failures = Vec::new();
    for n in 5..=12 {
        let g = CirculantGraph::new(n, 1, 2).unwrap();
        let expected = if n == 7 { 6 } else { 5 };
        let chi = total_chromatic_number(&g, SearchBudget::default());
        if chi.status != ChiStatus::Exact || chi.chi_total != Some(expected) {
            failures.push(format!("{g}: expected {expected} exact, got {:?} {:?}", chi.chi_total, chi.status));
            continue;
        }
        let w = chi.witness.as_ref().expect("exact result carries a witness");
        if !verify(&g, w).unwrap().valid || w.distinct_colors().len() != expected {
            failures.push(format!("{g}: witness does not verify with {expected} colors"));
        }
    }
    finish("AC4", "chi''(C_7(1,2)) = 6, chi''(C_n(1,2)) = 5 otherwise", failures, started);
}

#[test]
fn ac5_scheme_solver_agreement() {
    let started = Instant::now();
    let mut failures = Vec::new();
    let mut checked = 0;
    for n in 5..=AGREEMENT_MAX_N {
        for (a, b) in admissible_pairs(n) {
            let g = CirculantGraph::new(n, a, b).unwrap();
            if schemes::color(&g).is_err() {
                continue;
            }
            checked += 1;
            let chi = total_chromatic_number(&g, SearchBudget::default());
            if chi.status != ChiStatus::Exact || chi.chi_total != Some(TYPE_I_COLORS) {
                failures.push(format!("{g}: solver gives {:?} {:?}", chi.chi_total, chi.status));
            }
        }
    }
    assert!(checked > 0);
    finish("AC5", &format!("scheme/solver agreement, {checked} instances n <= {AGREEMENT_MAX_N}"), failures, started);
}

/// Quadratic reference: list every conflicting pair among the 3n elements,
/// using only the raw color arrays and circular distances.
fn reference_conflicts(n: usize, a: usize, b: usize, c: &TotalColoring) -> Vec<(&'static str, Color)> {
    let dist = |u: usize, v: usize| {
        let d = (u + n - v) % n;
        d.min(n - d)
    };
    let endpoints = |id: usize| if id < n { [id, (id + a) % n] } else { [id - n, (id - n + b) % n] };
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let d = dist(u, v);
            if (d == a || d == b) && c.vertex(u) == c.vertex(v) {
                out.push(("vertex-vertex", c.vertex(u)));
            }
        }
        for e in 0..2 * n {
            if endpoints(e).contains(&u) && c.vertex(u) == c.edge(e) {
                out.push(("vertex-edge", c.edge(e)));
            }
        }
    }
    for e in 0..2 * n {
        for f in e + 1..2 * n {
            let (x, y) = (endpoints(e), endpoints(f));
            if x.iter().any(|p| y.contains(p)) && c.edge(e) == c.edge(f) {
                out.push(("edge-edge", c.edge(e)));
            }
        }
    }
    out.sort();
    out
}

fn random_graph(rng: &mut ChaCha8Rng, max_n: usize) -> CirculantGraph {
    loop {
        let n = rng.gen_range(5..=max_n);
        let pairs = admissible_pairs(n);
        if !pairs.is_empty() {
            let (a, b) = pairs[rng.gen_range(0..pairs.len())];
            return CirculantGraph::new(n, a, b).unwrap();
        }
    }
}

/// Mix of uniform noise, valid colorings, and valid colorings with a few
/// elements recolored, so both verdicts are well represented.
fn random_coloring(rng: &mut ChaCha8Rng, g: &CirculantGraph) -> TotalColoring {
    let k = rng.gen_range(3..=7usize);
    let base = match schemes::color(g) {
        Ok((_, c)) if rng.gen_bool(0.6) => Some(c),
        _ => None,
    };
    match base {
        Some(c) => {
            let mut vs = c.vertex_colors().to_vec();
            let mut es = c.edge_colors().to_vec();
            for _ in 0..rng.gen_range(0..=2) {
                if rng.gen_bool(0.5) {
                    let i = rng.gen_range(0..vs.len());
                    vs[i] = rng.gen_range(0..5);
                } else {
                    let i = rng.gen_range(0..es.len());
                    es[i] = rng.gen_range(0..5);
                }
            }
            TotalColoring::new(vs, es, 5).unwrap()
        }
        None => {
            let vs = (0..g.n()).map(|_| rng.gen_range(0..k) as Color).collect();
            let es = (0..g.edge_count()).map(|_| rng.gen_range(0..k) as Color).collect();
            TotalColoring::new(vs, es, k).unwrap()
        }
    }
}

fn found(d: &Decision) -> Option<bool> {
    match d {
        Decision::Found(_) => Some(true),
        Decision::None => Some(false),
        Decision::BudgetExceeded => None,
    }
}

#[test]
fn ac6_property_suites() {
    let started = Instant::now();
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);

    // verifier against the quadratic reference
    let mut valid_seen = 0;
    for s in 0..COMPARATOR_SAMPLES {
        let g = random_graph(&mut rng, COMPARATOR_MAX_N);
        let c = random_coloring(&mut rng, &g);
        let r = verify(&g, &c).unwrap();
        let mut ours: Vec<(&str, Color)> = r.conflicts.iter().map(|x| (x.kind(), x.color())).collect();
        ours.sort();
        let reference = reference_conflicts(g.n(), g.a(), g.b(), &c);
        if r.valid != reference.is_empty() || ours != reference {
            failures.push(format!("sample {s} on {g}: verifier {} conflicts, reference {}", ours.len(), reference.len()));
        }
        if r.conflicts.iter().any(|x| !x.holds_in(&g, &c)) {
            failures.push(format!("sample {s} on {g}: reported conflict does not re-check"));
        }
        valid_seen += usize::from(r.valid);

        // palette permutation leaves the verdict unchanged
        let k = c.palette_size();
        let mut perm: Vec<Color> = (0..k as Color).collect();
        for i in (1..k).rev() {
            perm.swap(i, rng.gen_range(0..=i));
        }
        let rp = verify(&g, &c.permuted(&perm).unwrap()).unwrap();
        if rp.valid != r.valid || rp.conflicts.len() != r.conflicts.len() || rp.colors_used != r.colors_used {
            failures.push(format!("sample {s} on {g}: verdict changed under permutation {perm:?}"));
        }
    }
    if valid_seen == 0 || valid_seen == COMPARATOR_SAMPLES {
        failures.push(format!("comparator samples are one-sided: {valid_seen} valid"));
    }

    // closed-star pigeonhole on every valid 5-coloring we produce
    let mut stars = 0;
    for n in 5..=AUDIT_MAX_N {
        for (a, b) in admissible_pairs(n) {
            let g = CirculantGraph::new(n, a, b).unwrap();
            if let Ok((id, c)) = schemes::color(&g) {
                stars += 1;
                if !closed_stars_full(&g, &c) {
                    failures.push(format!("{g} {id}: a closed star misses a color"));
                }
            }
        }
    }
    for n in 5..=SYMMETRY_MAX_N {
        for (a, b) in admissible_pairs(n) {
            let g = CirculantGraph::new(n, a, b).unwrap();
            if let Decision::Found(c) =
                exists_total_coloring_with(&g, 5, SearchBudget::default(), SymmetryBreaking::ClosedStarOfZero).decision
            {
                stars += 1;
                if !closed_stars_full(&g, &c) {
                    failures.push(format!("{g} solver witness: a closed star misses a color"));
                }
            }
        }
    }

    // broken and unbroken search agree
    let mut pairs = 0;
    for n in 5..=SYMMETRY_MAX_N {
        for (a, b) in admissible_pairs(n) {
            let g = CirculantGraph::new(n, a, b).unwrap();
            for k in 1..=SYMMETRY_MAX_K {
                pairs += 1;
                let budget = SearchBudget::default();
                let broken = found(&exists_total_coloring_with(&g, k, budget, SymmetryBreaking::ClosedStarOfZero).decision);
                let plain = found(&exists_total_coloring_with(&g, k, budget, SymmetryBreaking::None).decision);
                if broken.is_none() || plain.is_none() || broken != plain {
                    failures.push(format!("{g} k = {k}: broken {broken:?}, unbroken {plain:?}"));
                }
            }
        }
    }

    finish(
        "AC6",
        &format!(
            "properties: {COMPARATOR_SAMPLES} comparator samples ({valid_seen} valid), {stars} closed-star checks, {pairs} symmetry pairs"
        ),
        failures,
        started,
    );
}
