//! One test per acceptance criterion. Each prints a single
//! `criterion N: PASS|FAIL ...` line; thresholds are pinned below.
//!
//! Reference values come from small oracles written against the raw
//! operation tables, not from the lattice machinery under test.

use std::collections::BTreeSet;
use std::sync::Arc;
use std::time::{Duration, Instant};

use pblring::algebra::{all_hold, check_pseudo_bl, ideal_algebra};
use pblring::classify::{self, check_pblr1, is_multiplication_ring, is_pseudo_bl_ring};
use pblring::props::{self, build_corpus, CatalogOptions, CorpusEntry, CorpusKind, Tag, CATALOG};
use pblring::report::{self, Document, Report};
use pblring::{matrix_ideal, matrix_ring, quotient, zmod, FiniteRing, IdealLattice};

const SUBSET_ORACLE_MAX_ORDER: usize = 16;
const SUBSET_ORACLE_BUDGET: Duration = Duration::from_secs(60);
const QUOTIENT_MAX_ORDER: usize = 12;
const CATALOG_BUDGET: Duration = Duration::from_secs(600);
const MIN_CORPUS: usize = 40;

type Set = BTreeSet<usize>;

fn report(n: u32, ok: bool, detail: &str) {
    println!(
        "criterion {n}: {} {detail}",
        if ok { "PASS" } else { "FAIL" }
    );
}

fn corpus() -> Vec<CorpusEntry> {
    build_corpus(CorpusKind::Default)
}

fn members(lat: &IdealLattice, i: usize) -> Set {
    lat.members(i).iter().collect()
}

fn is_ideal_oracle(r: &FiniteRing, s: &Set) -> bool {
    s.contains(&r.zero())
        && s.iter().all(|&a| {
            s.iter().all(|&b| s.contains(&r.sub(a, b)))
                && r.elements()
                    .all(|x| s.contains(&r.mul(x, a)) && s.contains(&r.mul(a, x)))
        })
}

fn additive_closure(r: &FiniteRing, seeds: impl IntoIterator<Item = usize>) -> Set {
    let mut s: Set = std::iter::once(r.zero()).chain(seeds).collect();
    loop {
        let next: Set = s
            .iter()
            .flat_map(|&a| s.iter().map(move |&b| r.add(a, b)))
            .chain(s.iter().copied())
            .collect();
        if next.len() == s.len() {
            return s;
        }
        s = next;
    }
}

fn product_oracle(r: &FiniteRing, i: &Set, j: &Set) -> Set {
    additive_closure(
        r,
        i.iter().flat_map(|&a| j.iter().map(move |&b| r.mul(a, b))),
    )
}

/// `{x : xJ ⊆ K}`
fn rimp_oracle(r: &FiniteRing, j: &Set, k: &Set) -> Set {
    r.elements()
        .filter(|&x| j.iter().all(|&y| k.contains(&r.mul(x, y))))
        .collect()
}

/// `{x : Jx ⊆ K}`
fn limp_oracle(r: &FiniteRing, j: &Set, k: &Set) -> Set {
    r.elements()
        .filter(|&x| j.iter().all(|&y| k.contains(&r.mul(y, x))))
        .collect()
}

#[test]
fn c01_ideal_enumeration_matches_subset_oracle() {
    let start = Instant::now();
    let mut checked = 0;
    let mut bad = Vec::new();
    for e in corpus()
        .iter()
        .filter(|e| e.ring.order() <= SUBSET_ORACLE_MAX_ORDER)
    {
        let r = &e.ring;
        let n = r.order();
        let mut expected: BTreeSet<Set> = BTreeSet::new();
        for mask in 0u32..(1u32 << n) {
            if mask & (1 << r.zero()) == 0 {
                continue;
            }
            let s: Set = (0..n).filter(|&x| mask & (1 << x) != 0).collect();
            if is_ideal_oracle(r, &s) {
                expected.insert(s);
            }
        }
        let lat = IdealLattice::new(r.clone());
        let got: BTreeSet<Set> = lat.indices().map(|i| members(&lat, i)).collect();
        if got != expected || lat.len() != expected.len() {
            bad.push(e.name.clone());
        }
        checked += 1;
    }
    let elapsed = start.elapsed();
    let ok = bad.is_empty() && checked > 0 && elapsed < SUBSET_ORACLE_BUDGET;
    report(
        1,
        ok,
        &format!(
            "{checked} rings of order <= {SUBSET_ORACLE_MAX_ORDER}, {} mismatches, {elapsed:.2?}",
            bad.len()
        ),
    );
    assert!(ok, "mismatches: {bad:?}");
}

#[test]
fn c02_product_residual_adjointness() {
    let mut triples = 0u64;
    let mut bad = Vec::new();
    for e in &corpus() {
        let r = &e.ring;
        let lat = IdealLattice::new(r.clone());
        let sets: Vec<Set> = lat.indices().map(|i| members(&lat, i)).collect();
        // Operations themselves against the oracles.
        for i in lat.indices() {
            for j in lat.indices() {
                if members(&lat, lat.product(i, j)) != product_oracle(r, &sets[i], &sets[j])
                    || members(&lat, lat.rimp(i, j)) != rimp_oracle(r, &sets[i], &sets[j])
                    || members(&lat, lat.limp(i, j)) != limp_oracle(r, &sets[i], &sets[j])
                {
                    bad.push(format!("{}: operation on ({i},{j})", e.name));
                }
            }
        }
        for x in lat.indices() {
            for y in lat.indices() {
                let xy = &sets[lat.product(x, y)];
                for z in lat.indices() {
                    triples += 1;
                    let lhs = xy.is_subset(&sets[z]);
                    let right = sets[x].is_subset(&sets[lat.rimp(y, z)]);
                    let left = sets[y].is_subset(&sets[lat.limp(x, z)]);
                    if lhs != right || lhs != left {
                        bad.push(format!("{}: ({x},{y},{z})", e.name));
                    }
                }
            }
        }
    }
    report(
        2,
        bad.is_empty(),
        &format!("{triples} ideal triples, {} failures", bad.len()),
    );
    assert!(bad.is_empty(), "{:?}", &bad[..bad.len().min(10)]);
}

/// `I = J·K = K'·J` solvable for every `I ⊆ J`, straight from the sets.
fn multiplication_oracle(lat: &IdealLattice) -> bool {
    let r = lat.ring();
    let sets: Vec<Set> = lat.indices().map(|i| members(lat, i)).collect();
    sets.iter().all(|i| {
        sets.iter().filter(|j| i.is_subset(j)).all(|j| {
            sets.iter().any(|k| &product_oracle(r, j, k) == i)
                && sets.iter().any(|k| &product_oracle(r, k, j) == i)
        })
    })
}

#[test]
fn c03_multiplication_ring_iff_pblr1() {
    let corpus = corpus();
    let mut bad = Vec::new();
    for e in &corpus {
        let lat = IdealLattice::new(e.ring.clone());
        let definitional = is_multiplication_ring(&lat).holds;
        let pblr1 = check_pblr1(&lat).holds;
        let oracle = if lat.len() <= 20 {
            multiplication_oracle(&lat)
        } else {
            definitional
        };
        if definitional != pblr1 || oracle != definitional {
            bad.push(e.name.clone());
        }
    }
    let ok = bad.is_empty();
    report(
        3,
        ok,
        &format!(
            "{} of {} rings agree",
            corpus.len() - bad.len(),
            corpus.len()
        ),
    );
    assert!(ok, "{bad:?}");
}

#[test]
fn c04_pseudo_bl_ring_iff_ideal_algebra_axioms() {
    let corpus = corpus();
    let mut bad = Vec::new();
    let mut positives = 0;
    for e in &corpus {
        let lat = IdealLattice::new(e.ring.clone());
        let ring_side = is_pseudo_bl_ring(&lat).holds;
        let algebra_side = all_hold(&check_pseudo_bl(&ideal_algebra(&lat)));
        positives += usize::from(ring_side);
        if ring_side != algebra_side {
            bad.push(e.name.clone());
        }
    }
    let ok = bad.is_empty();
    report(
        4,
        ok,
        &format!(
            "{} of {} rings agree ({positives} pseudo BL-rings)",
            corpus.len() - bad.len(),
            corpus.len()
        ),
    );
    assert!(ok, "{bad:?}");
}

#[test]
fn c05_matrix_ring_lattice_correspondence() {
    let start = Instant::now();
    let mut bad = Vec::new();
    for n in [2, 3, 4] {
        let base = Arc::new(zmod(n).unwrap());
        let m = matrix_ring(&base, 2).unwrap();
        let blat = IdealLattice::new(base.clone());
        let mlat = IdealLattice::new(m.ring().clone());
        let map: Vec<usize> = blat
            .indices()
            .map(|i| {
                let mi = matrix_ideal(&m, &blat.ideal(i));
                // Oracle: exactly the matrices with every entry in I.
                let expected: Set = m
                    .ring()
                    .elements()
                    .filter(|&x| m.entries(x).iter().all(|&a| blat.members(i).contains(a)))
                    .collect();
                if mi.members().iter().collect::<Set>() != expected {
                    bad.push(format!("M2(Z{n}): M({i}) has wrong members"));
                }
                mlat.position(&mi).expect("M(I) is an ideal")
            })
            .collect();
        let image: BTreeSet<usize> = map.iter().copied().collect();
        if image.len() != blat.len() || mlat.len() != blat.len() {
            bad.push(format!("M2(Z{n}): not a bijection"));
            continue;
        }
        for i in blat.indices() {
            for j in blat.indices() {
                let (a, b) = (map[i], map[j]);
                let ops = [
                    ("order", blat.leq(i, j) == mlat.leq(a, b)),
                    ("meet", map[blat.meet(i, j)] == mlat.meet(a, b)),
                    ("join", map[blat.join(i, j)] == mlat.join(a, b)),
                    ("product", map[blat.product(i, j)] == mlat.product(a, b)),
                    ("rimp", map[blat.rimp(i, j)] == mlat.rimp(a, b)),
                    ("limp", map[blat.limp(i, j)] == mlat.limp(a, b)),
                ];
                for (op, holds) in ops {
                    if !holds {
                        bad.push(format!("M2(Z{n}): {op} at ({i},{j})"));
                    }
                }
            }
        }
    }
    let ok = bad.is_empty();
    report(
        5,
        ok,
        &format!(
            "Z2, Z3, Z4 with k=2, {} failures, {:.2?}",
            bad.len(),
            start.elapsed()
        ),
    );
    assert!(ok, "{bad:?}");
}

#[test]
fn c06_quotient_annihilators() {
    let mut pairs = 0;
    let mut bad = Vec::new();
    for e in corpus()
        .iter()
        .filter(|e| e.ring.order() <= QUOTIENT_MAX_ORDER)
    {
        let lat = IdealLattice::new(e.ring.clone());
        for i in lat.indices() {
            let q = quotient(&e.ring, &lat.ideal(i));
            let qr = q.ring();
            for j in lat.indices().filter(|&j| lat.leq(i, j)) {
                pairs += 1;
                let jq: Set = lat.members(j).iter().map(|x| q.project(x)).collect();
                let zero: Set = [qr.zero()].into();
                // Annihilators computed inside R/I from its tables.
                let star_q = rimp_oracle(qr, &jq, &zero);
                let minus_q = limp_oracle(qr, &jq, &zero);
                let star_r: Set = lat
                    .members(lat.rimp(j, i))
                    .iter()
                    .map(|x| q.project(x))
                    .collect();
                let minus_r: Set = lat
                    .members(lat.limp(j, i))
                    .iter()
                    .map(|x| q.project(x))
                    .collect();
                if star_q != star_r || minus_q != minus_r {
                    bad.push(format!("{}: I={i} J={j}", e.name));
                }
            }
        }
    }
    let ok = bad.is_empty();
    report(
        6,
        ok,
        &format!(
            "{pairs} pairs I <= J over rings of order <= {QUOTIENT_MAX_ORDER}, {} failures",
            bad.len()
        ),
    );
    assert!(ok, "{bad:?}");
}

fn primes_oracle(lat: &IdealLattice) -> Vec<Set> {
    let r = lat.ring();
    let sets: Vec<Set> = lat.indices().map(|i| members(lat, i)).collect();
    sets.iter()
        .filter(|p| p.len() < r.order())
        .filter(|p| {
            sets.iter().all(|i| {
                sets.iter().all(|j| {
                    !product_oracle(r, i, j).is_subset(p) || i.is_subset(p) || j.is_subset(p)
                })
            })
        })
        .cloned()
        .collect()
}

#[test]
fn c07_prime_kernels_intersect_to_zero() {
    let mut considered = 0;
    let mut bad = Vec::new();
    for e in &corpus() {
        let r = &e.ring;
        if !r.generated_by_idempotents().holds {
            continue;
        }
        let lat = IdealLattice::new(r.clone());
        let primes = primes_oracle(&lat);
        if primes.is_empty() {
            continue;
        }
        considered += 1;
        let killed = |p: &Set, right: bool| -> Set {
            r.elements()
                .filter(|&x| {
                    r.elements().filter(|s| !p.contains(s)).any(|s| {
                        r.mul(if right { x } else { s }, if right { s } else { x }) == r.zero()
                    })
                })
                .collect()
        };
        let mut star: Set = r.elements().collect();
        let mut minus = star.clone();
        for p in &primes {
            star = star.intersection(&killed(p, true)).copied().collect();
            minus = minus.intersection(&killed(p, false)).copied().collect();
        }
        let zero: Set = [r.zero()].into();
        let oracle = star == zero && minus == zero;
        let lib = classify::check_lemma_4_4(&lat);
        if lib.holds != oracle {
            panic!(
                "{}: library says {} but oracle says {oracle}",
                e.name, lib.holds
            );
        }
        if !oracle {
            bad.push(format!(
                "{} (|N*|={}, |N-|={})",
                e.name,
                star.len(),
                minus.len()
            ));
        }
    }
    let ok = bad.is_empty();
    report(
        7,
        ok,
        &format!("{considered} rings, {} failures", bad.len()),
    );
    if !ok {
        println!("  intersection is nonzero on: {}", bad.join(", "));
    }
    assert!(ok, "{bad:?}");
}

/// Intersection of all nonzero ideals, straight from the sets.
fn heart_oracle(lat: &IdealLattice) -> Option<Set> {
    let sets: Vec<Set> = lat.indices().map(|i| members(lat, i)).collect();
    let mut nonzero = sets.iter().filter(|s| s.len() > 1);
    let first = nonzero.next()?.clone();
    let h: Set = nonzero.fold(first, |acc, s| acc.intersection(s).copied().collect());
    (h.len() > 1).then_some(h)
}

#[test]
fn c08_subdirect_decomposition() {
    let mut rings = 0;
    let mut factors = 0;
    let mut bad = Vec::new();
    for e in &corpus() {
        let lat = IdealLattice::new(e.ring.clone());
        if !is_pseudo_bl_ring(&lat).holds || e.ring.is_zero_ring() {
            continue;
        }
        rings += 1;
        let dec = classify::subdirect_decomposition(&lat);
        let kernels: Vec<Set> = dec
            .choices
            .iter()
            .map(|c| members(&lat, c.kernel))
            .collect();
        // Every K_x is maximal among ideals missing x.
        for c in &dec.choices {
            if lat.members(c.kernel).contains(c.element) {
                bad.push(format!(
                    "{}: K_{} contains {}",
                    e.name, c.element, c.element
                ));
            }
        }
        let all: Set = e.ring.elements().collect();
        let meet = kernels
            .iter()
            .fold(all, |acc, k| acc.intersection(k).copied().collect());
        if meet != [e.ring.zero()].into() || !dec.intersection_is_zero {
            bad.push(format!("{}: kernels intersect to {meet:?}", e.name));
        }
        for (k, q) in classify::decomposition_factors(&lat) {
            factors += 1;
            let flat = IdealLattice::new(q.ring().clone());
            let si = heart_oracle(&flat).is_some();
            let pbl = all_hold(&check_pseudo_bl(&ideal_algebra(&flat)));
            let checks = classify::check_theorem_4_8_factor(&flat);
            if !si || !pbl || !checks.all_hold() {
                let failing: Vec<&str> = checks
                    .named()
                    .iter()
                    .filter(|(_, c)| !c.holds)
                    .map(|(n, _)| *n)
                    .collect();
                bad.push(format!(
                    "{}: R/{k} si={si} pbl={pbl} failing={failing:?}",
                    e.name
                ));
            }
        }
        if !dec.sound() {
            bad.push(format!("{}: library reports unsound decomposition", e.name));
        }
    }
    let ok = bad.is_empty() && rings > 0;
    report(
        8,
        ok,
        &format!(
            "{rings} pseudo BL-rings, {factors} factors, {} failures",
            bad.len()
        ),
    );
    assert!(ok, "{bad:?}");
}

#[test]
fn c09_full_catalog() {
    let start = Instant::now();
    let corpus = corpus();
    let matrix = props::run_catalog(&corpus, &CatalogOptions::default()).unwrap();
    let elapsed = start.elapsed();
    let quotient_rows = corpus
        .iter()
        .filter(|e| e.name.starts_with("quotient("))
        .count();
    let ids: BTreeSet<&str> = matrix.properties.iter().map(|p| p.id.as_str()).collect();
    let complete = CATALOG.iter().all(|p| ids.contains(p.id));
    let skipped: usize = (0..matrix.properties.len())
        .map(|c| matrix.tally(c).skipped)
        .sum();
    let theorem = matrix.theorem_failures();
    let ok = theorem.is_empty()
        && corpus.len() >= MIN_CORPUS
        && quotient_rows > 0
        && complete
        && skipped == 0
        && elapsed < CATALOG_BUDGET;
    let theorems = matrix
        .properties
        .iter()
        .filter(|p| p.tag == Tag::Theorem)
        .count();
    report(
        9,
        ok,
        &format!(
            "{} rings ({quotient_rows} quotients), {theorems} theorem properties, {} theorem failures, {skipped} skipped, {elapsed:.2?}",
            corpus.len(),
            theorem.len()
        ),
    );
    let mut by_property: Vec<(String, usize)> = Vec::new();
    for f in &theorem {
        match by_property.iter_mut().find(|(p, _)| *p == f.property) {
            Some((_, n)) => *n += 1,
            None => by_property.push((f.property.clone(), 1)),
        }
    }
    for (p, n) in &by_property {
        let first = theorem.iter().find(|f| &f.property == p).unwrap();
        println!(
            "  {p}: fails on {n} rings, first {} ({})",
            first.ring, first.detail
        );
    }
    assert!(ok, "theorem failures: {by_property:?}");
}

fn snapshot() -> Vec<String> {
    let corpus = corpus();
    let opts = CatalogOptions::default();
    let mut out = vec![Document::new(Report::Props(report::PropsReport {
        corpus: "default".into(),
        matrix: props::run_catalog(&corpus, &opts).unwrap(),
    }))
    .to_json()];
    for e in &corpus {
        let lat = IdealLattice::new(e.ring.clone());
        let ideals = Report::Ideals(report::ideals_report(&lat));
        out.push(ideals.to_dot().unwrap());
        out.push(Document::new(ideals).to_json());
        out.push(Document::new(Report::Check(classify::classify(&lat).unwrap())).to_json());
        out.push(Document::new(Report::Decompose(report::decompose_report(&lat))).to_json());
    }
    out
}

#[test]
fn c10_determinism() {
    let a = snapshot();
    let b = snapshot();
    let differing = a.iter().zip(&b).filter(|(x, y)| x != y).count();
    let reparsed = a
        .iter()
        .filter(|s| s.starts_with('{'))
        .all(|s| Document::from_json(s).unwrap().to_json() == *s);
    let ok = a.len() == b.len() && differing == 0 && reparsed;
    report(
        10,
        ok,
        &format!(
            "{} documents, {differing} differ between runs, JSON round-trip {}",
            a.len(),
            if reparsed { "exact" } else { "lossy" }
        ),
    );
    assert!(ok);
}
