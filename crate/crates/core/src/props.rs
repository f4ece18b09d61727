//! A ring corpus and a catalog of structural properties evaluated over it.
//!
//! Each property has a hypothesis filter (rings outside it are `vacuous`)
//! and a tag: `theorem` properties are expected to hold on every ring,
//! `informational` ones record outcomes of statements whose reading is
//! ambiguous, and `probe` ones test converses that need not hold.

use std::cell::OnceCell;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{self, ideal_algebra};
use crate::classify::{self, Check, Decomposition, PseudoBlVerdict};
use crate::construct::{matrix_ideal, matrix_ring, quotient, MatrixRing, QuotientRing};
use crate::ideal::{Ideal, IdealLattice};
use crate::ring::FiniteRing;
use crate::spec::RingSpec;

/// Matrix properties build `M_2(R)` for rings up to this order.
pub const MATRIX_BASE_LIMIT: usize = 4;
/// Largest direct product placed in the default corpus.
pub const PRODUCT_LIMIT: usize = 256;
pub const DEFAULT_BUDGET: Duration = Duration::from_secs(10);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Tag {
    Theorem,
    Informational,
    Probe,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum Outcome {
    Pass,
    Fail { witness: Vec<usize>, detail: String },
    Vacuous,
    SkippedTooLarge { reason: String },
}

impl Outcome {
    pub fn is_fail(&self) -> bool {
        matches!(self, Outcome::Fail { .. })
    }

    pub fn label(&self) -> &'static str {
        match self {
            Outcome::Pass => "pass",
            Outcome::Fail { .. } => "fail",
            Outcome::Vacuous => "vacuous",
            Outcome::SkippedTooLarge { .. } => "skipped",
        }
    }
}

fn fail(witness: Vec<usize>, detail: impl Into<String>) -> Outcome {
    Outcome::Fail {
        witness,
        detail: detail.into(),
    }
}

fn from_check(c: &Check, detail: &str) -> Outcome {
    if c.holds {
        Outcome::Pass
    } else {
        fail(c.witness.clone(), detail)
    }
}

/// One ring of the corpus. `factors` is non-empty for direct products.
#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub name: String,
    pub ring: Arc<FiniteRing>,
    pub factors: Vec<Arc<FiniteRing>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorpusKind {
    Default,
    None,
}

fn base_specs() -> Vec<RingSpec> {
    let mut v: Vec<RingSpec> = (1..=24).map(RingSpec::Zmod).collect();
    v.push(RingSpec::Poly(2, vec![0, 0]));
    v.push(RingSpec::Poly(4, vec![0, 2]));
    v.push(RingSpec::Poly(4, vec![2, 0]));
    for n in [2, 3, 4] {
        v.push(RingSpec::Matrix(Box::new(RingSpec::Zmod(n)), 2));
    }
    v.push(RingSpec::Triangular(Box::new(RingSpec::Zmod(2)), 2));
    v.push(RingSpec::Null(2));
    v
}

fn product_pool() -> Vec<RingSpec> {
    let mut v: Vec<RingSpec> = [2, 3, 4, 5, 6, 8, 9].map(RingSpec::Zmod).to_vec();
    v.push(RingSpec::Poly(2, vec![0, 0]));
    v.push(RingSpec::Triangular(Box::new(RingSpec::Zmod(2)), 2));
    v.push(RingSpec::Null(2));
    v.push(RingSpec::Matrix(Box::new(RingSpec::Zmod(2)), 2));
    v
}

/// Builds the corpus: named base rings, products of pairs from a pool, and
/// every quotient of each, deduplicated by operation tables and sorted by
/// (order, name).
pub fn build_corpus(kind: CorpusKind) -> Vec<CorpusEntry> {
    if kind == CorpusKind::None {
        return Vec::new();
    }
    let mut seeds: Vec<CorpusEntry> = base_specs()
        .into_iter()
        .map(|s| CorpusEntry {
            name: s.to_string(),
            ring: s.build().expect("corpus specs are within bounds"),
            factors: Vec::new(),
        })
        .collect();
    let pool = product_pool();
    let built: Vec<Arc<FiniteRing>> = pool.iter().map(|s| s.build().unwrap()).collect();
    for i in 0..pool.len() {
        for j in i..pool.len() {
            if built[i].order() * built[j].order() > PRODUCT_LIMIT {
                continue;
            }
            let spec = RingSpec::Product(vec![pool[i].clone(), pool[j].clone()]);
            seeds.push(CorpusEntry {
                name: spec.to_string(),
                ring: spec.build().unwrap(),
                factors: vec![built[i].clone(), built[j].clone()],
            });
        }
    }
    let quotients: Vec<Vec<CorpusEntry>> = seeds
        .par_iter()
        .map(|e| {
            let lat = IdealLattice::new(e.ring.clone());
            lat.indices()
                .filter(|&k| k != lat.bottom())
                .map(|k| {
                    let q = quotient(&e.ring, &lat.ideal(k));
                    CorpusEntry {
                        name: format!("quotient({},{:?})", e.name, lat.generators(k))
                            .replace(' ', ""),
                        ring: q.ring().clone(),
                        factors: Vec::new(),
                    }
                })
                .collect()
        })
        .collect();
    let mut out: Vec<CorpusEntry> = Vec::new();
    for e in seeds.into_iter().chain(quotients.into_iter().flatten()) {
        if !out.iter().any(|o| *o.ring == *e.ring) {
            out.push(e);
        }
    }
    out.sort_by(|a, b| {
        a.ring
            .order()
            .cmp(&b.ring.order())
            .then_with(|| a.name.cmp(&b.name))
    });
    out
}

/// Per-ring cache shared by all properties.
pub struct Ctx<'a> {
    pub entry: &'a CorpusEntry,
    pub lat: IdealLattice,
    pbl: OnceCell<PseudoBlVerdict>,
    mult: OnceCell<Check>,
    pblr3: OnceCell<Check>,
    quotients: OnceCell<Vec<QuotientView>>,
    matrix: OnceCell<Option<(MatrixRing, IdealLattice)>>,
    decomposition: OnceCell<Decomposition>,
}

/// `R/K` with its lattice and the image of every ideal of `R`.
pub struct QuotientView {
    pub kernel: usize,
    pub ring: QuotientRing,
    pub lat: IdealLattice,
    /// `image[j]` = index of `(J+K)/K` in `lat`.
    pub image: Vec<usize>,
}

impl<'a> Ctx<'a> {
    pub fn new(entry: &'a CorpusEntry) -> Ctx<'a> {
        Ctx {
            entry,
            lat: IdealLattice::new(entry.ring.clone()),
            pbl: OnceCell::new(),
            mult: OnceCell::new(),
            pblr3: OnceCell::new(),
            quotients: OnceCell::new(),
            matrix: OnceCell::new(),
            decomposition: OnceCell::new(),
        }
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.entry.ring
    }

    pub fn pbl(&self) -> &PseudoBlVerdict {
        self.pbl
            .get_or_init(|| classify::is_pseudo_bl_ring(&self.lat))
    }

    pub fn mult(&self) -> &Check {
        self.mult
            .get_or_init(|| classify::is_multiplication_ring(&self.lat))
    }

    pub fn pblr3(&self) -> &Check {
        self.pblr3.get_or_init(|| classify::check_pblr3(&self.lat))
    }

    pub fn quotients(&self) -> &[QuotientView] {
        self.quotients.get_or_init(|| {
            self.lat
                .indices()
                .map(|k| {
                    let ring = quotient(&self.entry.ring, &self.lat.ideal(k));
                    let lat = IdealLattice::new(ring.ring().clone());
                    let image = self
                        .lat
                        .indices()
                        .map(|j| {
                            lat.position(&ring.project_ideal(&self.lat.ideal(j)))
                                .expect("images of ideals are ideals")
                        })
                        .collect();
                    QuotientView {
                        kernel: k,
                        ring,
                        lat,
                        image,
                    }
                })
                .collect()
        })
    }

    pub fn matrix(&self) -> Option<&(MatrixRing, IdealLattice)> {
        self.matrix
            .get_or_init(|| {
                (self.ring().order() <= MATRIX_BASE_LIMIT).then(|| {
                    let m = matrix_ring(&self.entry.ring, 2).expect("small base ring");
                    let lat = IdealLattice::new(m.ring().clone());
                    (m, lat)
                })
            })
            .as_ref()
    }

    pub fn decomposition(&self) -> &Decomposition {
        self.decomposition
            .get_or_init(|| classify::subdirect_decomposition(&self.lat))
    }
}

pub struct Property {
    pub id: &'static str,
    pub tag: Tag,
    pub hypothesis: &'static str,
    pub eval: fn(&Ctx) -> Outcome,
}

fn all_pairs(lat: &IdealLattice) -> impl Iterator<Item = (usize, usize)> + '_ {
    lat.indices()
        .flat_map(move |i| lat.indices().map(move |j| (i, j)))
}

fn all_triples(lat: &IdealLattice) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
    all_pairs(lat).flat_map(move |(i, j)| lat.indices().map(move |k| (i, j, k)))
}

fn first_bad_pair(lat: &IdealLattice, bad: impl Fn(usize, usize) -> bool, detail: &str) -> Outcome {
    match all_pairs(lat).find(|&(i, j)| bad(i, j)) {
        Some((i, j)) => fail(vec![i, j], detail),
        None => Outcome::Pass,
    }
}

fn iff(a: bool, b: bool, detail: &str) -> Outcome {
    if a == b {
        Outcome::Pass
    } else {
        fail(Vec::new(), format!("{detail}: {a} vs {b}"))
    }
}

fn adjointness(c: &Ctx) -> Outcome {
    let l = &c.lat;
    match all_triples(l).find(|&(i, j, k)| {
        let a = l.leq(l.product(i, j), k);
        a != l.leq(i, l.rimp(j, k)) || a != l.leq(j, l.limp(i, k))
    }) {
        Some((i, j, k)) => fail(vec![i, j, k], "IJ ⊆ K, I ⊆ J→K, J ⊆ I⇝K disagree"),
        None => Outcome::Pass,
    }
}

fn l3_2(c: &Ctx) -> Outcome {
    let l = &c.lat;
    first_bad_pair(
        l,
        |i, j| {
            let m = l.meet(i, j);
            let s = l.join(i, j);
            l.rimp(i, j) != l.rimp(i, m)
                || l.limp(i, j) != l.limp(i, m)
                || l.rimp(s, j) != l.rimp(i, j)
                || l.rimp(s, i) != l.rimp(j, i)
                || l.limp(s, j) != l.limp(i, j)
                || l.limp(s, i) != l.limp(j, i)
        },
        "residual identity fails",
    )
}

fn l3_3(c: &Ctx) -> Outcome {
    let l = &c.lat;
    first_bad_pair(
        l,
        |i, j| {
            let m = l.meet(i, j);
            !l.leq(l.product(l.rimp(i, j), i), m) || !l.leq(l.product(i, l.limp(i, j)), m)
        },
        "(I→J)·I or I·(I⇝J) escapes I∩J",
    )
}

fn p3_4_1(c: &Ctx) -> Outcome {
    let l = &c.lat;
    let inclusions = all_pairs(l).all(|(i, j)| {
        let m = l.meet(i, j);
        l.leq(m, l.product(l.rimp(i, j), i)) && l.leq(m, l.product(i, l.limp(i, j)))
    });
    iff(
        c.pbl().pblr1.holds,
        inclusions,
        "pblr1 vs reverse inclusions",
    )
}

fn unital_only(c: &Ctx, f: impl FnOnce() -> Outcome) -> Outcome {
    if c.ring().is_unital() {
        f()
    } else {
        Outcome::Vacuous
    }
}

fn p3_4_2(c: &Ctx) -> Outcome {
    unital_only(c, || {
        let l = &c.lat;
        let right = all_triples(l)
            .all(|(i, j, k)| l.rimp(l.meet(i, j), k) == l.join(l.rimp(i, k), l.rimp(j, k)));
        let left = all_triples(l)
            .all(|(i, j, k)| l.limp(l.meet(i, j), k) == l.join(l.limp(i, k), l.limp(j, k)));
        let p2 = c.pbl().pblr2.holds;
        if p2 == right && p2 == left {
            Outcome::Pass
        } else {
            fail(
                Vec::new(),
                format!("pblr2 {p2}, right {right}, left {left}"),
            )
        }
    })
}

fn p3_4_3(c: &Ctx) -> Outcome {
    unital_only(c, || {
        let l = &c.lat;
        let right = all_triples(l)
            .all(|(i, j, k)| l.rimp(i, l.join(j, k)) == l.join(l.rimp(i, j), l.rimp(i, k)));
        let left = all_triples(l)
            .all(|(i, j, k)| l.limp(i, l.join(j, k)) == l.join(l.limp(i, j), l.limp(i, k)));
        let p2 = c.pbl().pblr2.holds;
        if p2 == right && p2 == left {
            Outcome::Pass
        } else {
            fail(
                Vec::new(),
                format!("pblr2 {p2}, right {right}, left {left}"),
            )
        }
    })
}

fn p3_5(c: &Ctx) -> Outcome {
    iff(
        c.mult().holds,
        c.pbl().pblr1.holds,
        "multiplication-ring vs pblr1",
    )
}

fn p3_6(c: &Ctx) -> Outcome {
    let reports = algebra::check_pseudo_bl(&ideal_algebra(&c.lat));
    let axioms = algebra::all_hold(&reports);
    let pbl = c.pbl();
    if axioms && !(pbl.pblr1.holds && pbl.pblr2.holds) {
        return fail(Vec::new(), "axioms hold but pblr1/pblr2 fail");
    }
    iff(
        pbl.holds,
        axioms && pbl.generated_by_idempotents.holds,
        "pseudo-bl-ring vs axioms ∧ generated-by-idempotents",
    )
}

fn matrix_only(c: &Ctx, f: impl FnOnce(&MatrixRing, &IdealLattice) -> Outcome) -> Outcome {
    match c.matrix() {
        Some((m, ml)) => f(m, ml),
        None => Outcome::Vacuous,
    }
}

fn l3_8(c: &Ctx) -> Outcome {
    if !c.mult().holds {
        return Outcome::Vacuous;
    }
    matrix_only(c, |_, ml| {
        from_check(
            &classify::is_multiplication_ring(ml),
            "M_2(R) is not a multiplication ring",
        )
    })
}

fn l3_9(c: &Ctx) -> Outcome {
    if !c.mult().holds {
        return Outcome::Vacuous;
    }
    matrix_only(c, |_, ml| {
        from_check(&classify::check_pblr1(ml), "M_2(R) fails pblr1")
    })
}

/// Index of `M_2(I)` in the matrix lattice for every ideal `I`.
fn matrix_images(c: &Ctx, m: &MatrixRing, ml: &IdealLattice) -> Vec<usize> {
    c.lat
        .indices()
        .map(|i| {
            ml.position(&matrix_ideal(m, &c.lat.ideal(i)))
                .expect("M_n(I) is an ideal")
        })
        .collect()
}

fn l3_10(c: &Ctx) -> Outcome {
    unital_only(c, || {
        matrix_only(c, |m, ml| {
            let img = matrix_images(c, m, ml);
            let mut sorted = img.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != ml.len() {
                return fail(Vec::new(), "I ↦ M_2(I) is not a bijection onto the ideals");
            }
            let l = &c.lat;
            first_bad_pair(
                l,
                |i, j| {
                    img[l.join(i, j)] != ml.join(img[i], img[j])
                        || img[l.meet(i, j)] != ml.meet(img[i], img[j])
                        || img[l.product(i, j)] != ml.product(img[i], img[j])
                        || img[l.rimp(i, j)] != ml.rimp(img[i], img[j])
                        || img[l.limp(i, j)] != ml.limp(img[i], img[j])
                },
                "M_2(-) does not preserve an operation",
            )
        })
    })
}

fn ex3_11(c: &Ctx) -> Outcome {
    let mult = c.mult().holds;
    let luk = c.pbl().lukasiewicz;
    if !(mult || luk) {
        return Outcome::Vacuous;
    }
    matrix_only(c, |_, ml| {
        let v = classify::is_pseudo_bl_ring(ml);
        if v.holds {
            Outcome::Pass
        } else {
            fail(Vec::new(), "M_2(R) is not a pseudo BL-ring")
        }
    })
}

fn l3_12(c: &Ctx) -> Outcome {
    let l = &c.lat;
    for q in c.quotients() {
        let k = q.kernel;
        let ql = &q.lat;
        let above: Vec<usize> = l.indices().filter(|&j| l.leq(k, j)).collect();
        for &j in &above {
            let jq = q.image[j];
            if ql.ann_star(jq) != q.image[l.rimp(j, k)] || ql.ann_minus(jq) != q.image[l.limp(j, k)]
            {
                return fail(vec![k, j], "(J/I)* ≠ (J→I)/I");
            }
            for &h in &above {
                let hq = q.image[h];
                if ql.rimp(jq, hq) != q.image[l.rimp(j, h)]
                    || ql.limp(jq, hq) != q.image[l.limp(j, h)]
                {
                    return fail(vec![k, j, h], "(J/I)→(K/I) ≠ (J→K)/I");
                }
            }
        }
    }
    Outcome::Pass
}

fn p3_13(c: &Ctx) -> Outcome {
    if !c.pbl().pblr2.holds {
        return Outcome::Vacuous;
    }
    from_check(c.pblr3(), "pblr2 holds but pblr3 fails")
}

fn quotients_pblr3(c: &Ctx) -> Option<usize> {
    c.quotients()
        .iter()
        .find(|q| !classify::check_pblr3(&q.lat).holds)
        .map(|q| q.kernel)
}

fn p3_14(c: &Ctx) -> Outcome {
    let bad = quotients_pblr3(c);
    let p2 = c.pbl().pblr2.holds;
    if p2 == bad.is_none() {
        Outcome::Pass
    } else {
        fail(
            bad.into_iter().collect(),
            format!("pblr2 {p2} but quotients-pblr3 {}", bad.is_none()),
        )
    }
}

fn p3_15(c: &Ctx) -> Outcome {
    if !c.mult().holds {
        return Outcome::Vacuous;
    }
    match c
        .quotients()
        .iter()
        .find(|q| !classify::is_multiplication_ring(&q.lat).holds)
    {
        Some(q) => fail(vec![q.kernel], "quotient is not a multiplication ring"),
        None => Outcome::Pass,
    }
}

fn p3_16(c: &Ctx) -> Outcome {
    if !c.mult().holds || quotients_pblr3(c).is_some() {
        return Outcome::Vacuous;
    }
    from_check(c.pblr3(), "pblr3 fails")
}

fn c3_16a(c: &Ctx) -> Outcome {
    if !c.mult().holds {
        return Outcome::Vacuous;
    }
    p3_14(c)
}

fn c3_17(c: &Ctx) -> Outcome {
    if !c.pbl().holds {
        return Outcome::Vacuous;
    }
    match c
        .quotients()
        .iter()
        .filter(|q| q.kernel != c.lat.top())
        .find(|q| !classify::is_pseudo_bl_ring(&q.lat).holds)
    {
        Some(q) => fail(vec![q.kernel], "quotient is not a pseudo BL-ring"),
        None => Outcome::Pass,
    }
}

fn p3_18(c: &Ctx) -> Outcome {
    if !c.pbl().holds {
        return Outcome::Vacuous;
    }
    from_check(
        &classify::check_prime_maximal(&c.lat),
        "prime ideal is not maximal",
    )
}

fn p3_19(c: &Ctx) -> Outcome {
    if !c.pbl().holds {
        return Outcome::Vacuous;
    }
    let l = &c.lat;
    let b = l.bottom();
    for i in l.indices() {
        if l.meet(i, l.ann_star(i)) != b || l.meet(i, l.ann_minus(i)) != b {
            continue;
        }
        let sub = c.ring().subring(&l.members(i).to_vec());
        if !classify::is_pseudo_bl_ring(&IdealLattice::new(Arc::new(sub))).holds {
            return fail(vec![i], "the ideal as a ring is not pseudo-BL");
        }
    }
    Outcome::Pass
}

fn p3_20(c: &Ctx) -> Outcome {
    let factors = &c.entry.factors;
    let product_case = !factors.is_empty()
        && factors
            .iter()
            .all(|f| classify::is_pseudo_bl_ring(&IdealLattice::new(f.clone())).holds);
    if product_case && !c.pbl().holds {
        return fail(Vec::new(), "product of pseudo BL-rings is not pseudo-BL");
    }
    if !c.pbl().holds {
        return if product_case {
            Outcome::Pass
        } else {
            Outcome::Vacuous
        };
    }
    match c
        .quotients()
        .iter()
        .find(|q| !classify::is_pseudo_bl_ring(&q.lat).holds)
    {
        Some(q) => fail(vec![q.kernel], "homomorphic image is not pseudo-BL"),
        None => Outcome::Pass,
    }
}

fn l3_22(c: &Ctx) -> Outcome {
    let l = &c.lat;
    first_bad_pair(
        l,
        |i, j| l.meet(i, j) == l.bottom() && !(l.leq(i, l.ann_star(j)) && l.leq(i, l.ann_minus(j))),
        "I∩J = 0 but I ⊄ J* or I ⊄ J⁻",
    )
}

fn p3_23(c: &Ctx) -> Outcome {
    if !(c.ring().is_unital() && c.ring().is_reduced()) {
        return Outcome::Vacuous;
    }
    iff(
        c.pblr3().holds,
        classify::is_baer(&c.lat).holds,
        "pblr3 vs baer",
    )
}

/// Principal ideal of every element.
fn principal(c: &Ctx) -> Vec<usize> {
    c.ring()
        .elements()
        .map(|a| {
            c.lat
                .position(&Ideal::generated(&c.entry.ring, [a]).unwrap())
                .unwrap()
        })
        .collect()
}

/// Ideals `I` with `⟨a⟩*+I = ⟨b⟩*+I` and `⟨a⟩⁻+I = ⟨b⟩⁻+I` whenever `a−b ∈ I`.
fn baer_ideals(c: &Ctx) -> Vec<usize> {
    let l = &c.lat;
    let r = c.ring();
    let p = principal(c);
    l.indices()
        .filter(|&i| {
            let m = l.members(i);
            r.elements().all(|a| {
                r.elements().all(|b| {
                    !m.contains(r.sub(a, b))
                        || (l.join(l.ann_star(p[a]), i) == l.join(l.ann_star(p[b]), i)
                            && l.join(l.ann_minus(p[a]), i) == l.join(l.ann_minus(p[b]), i))
                })
            })
        })
        .collect()
}

fn p3_24(c: &Ctx) -> Outcome {
    if !classify::is_baer(&c.lat).holds {
        return Outcome::Vacuous;
    }
    let l = &c.lat;
    let ids = baer_ideals(c);
    for &i in &ids {
        for &j in &ids {
            if l.join(l.rimp(i, j), l.rimp(j, i)) != l.top()
                || l.join(l.limp(i, j), l.limp(j, i)) != l.top()
            {
                return fail(vec![i, j], "Baer-ideals violate prelinearity");
            }
        }
    }
    Outcome::Pass
}

fn p3_25(c: &Ctx) -> Outcome {
    if !classify::is_baer(&c.lat).holds {
        return Outcome::Vacuous;
    }
    let ids = baer_ideals(c);
    for q in c.quotients() {
        if !ids.contains(&q.kernel) {
            continue;
        }
        if !classify::is_multiplication_ring(&q.lat).holds || !classify::is_baer(&q.lat).holds {
            return fail(vec![q.kernel], "quotient is not a multiplication Baer ring");
        }
    }
    Outcome::Pass
}

fn von_neumann(c: &Ctx) -> bool {
    classify::is_von_neumann(&c.lat).is_ok_and(|v| v.holds)
}

fn l3_26(c: &Ctx) -> Outcome {
    if !von_neumann(c) {
        return Outcome::Vacuous;
    }
    from_check(c.mult(), "Von Neumann ring is not a multiplication ring")
}

fn p3_27(c: &Ctx) -> Outcome {
    if !von_neumann(c) {
        return Outcome::Vacuous;
    }
    let l = &c.lat;
    let primes = l.primes();
    let condition = all_pairs(l).all(|(i, j)| {
        primes
            .iter()
            .all(|&p| !(l.leq(i, p) && l.leq(j, p)) || l.join(l.rimp(i, j), p) == l.top())
    });
    iff(
        c.pbl().holds,
        condition,
        "pseudo-bl-ring vs prime condition",
    )
}

fn l4_4(c: &Ctx) -> Outcome {
    let k = classify::check_lemma_4_4(&c.lat);
    if !k.generated_by_idempotents || k.is_vacuous() {
        return Outcome::Vacuous;
    }
    if k.holds {
        Outcome::Pass
    } else {
        let mut w = k.star_intersection.clone();
        w.retain(|&x| x != c.ring().zero());
        if w.is_empty() {
            w = k.minus_intersection.clone();
            w.retain(|&x| x != c.ring().zero());
        }
        fail(w, "nonzero elements in every N*(P) or every N⁻(P)")
    }
}

fn l4_4_ideal(c: &Ctx) -> Outcome {
    let k = classify::check_lemma_4_4(&c.lat);
    if k.is_vacuous() {
        return Outcome::Vacuous;
    }
    if k.all_ideals {
        Outcome::Pass
    } else {
        fail(Vec::new(), "some N*(P) or N⁻(P) is not an ideal")
    }
}

fn si_pbl(c: &Ctx) -> Option<usize> {
    if c.pbl().holds {
        classify::is_subdirectly_irreducible(&c.lat)
    } else {
        None
    }
}

fn p4_7_1(c: &Ctx) -> Outcome {
    let Some(heart) = si_pbl(c) else {
        return Outcome::Vacuous;
    };
    if c.lat.is_annihilator_ideal(heart).holds() {
        Outcome::Pass
    } else {
        fail(vec![heart], "the minimal ideal is not an annihilator ideal")
    }
}

fn p4_7_2(c: &Ctx) -> Outcome {
    if si_pbl(c).is_none() {
        return Outcome::Vacuous;
    }
    let l = &c.lat;
    let parts = algebra::annihilator_parts(l);
    let ann: Vec<usize> = l
        .indices()
        .filter(|&i| l.is_annihilator_ideal(i).holds())
        .collect();
    for set in [&ann, &parts.an_star, &parts.an_minus] {
        for &a in set.iter() {
            for &b in set.iter() {
                if !l.leq(a, b) && !l.leq(b, a) {
                    return fail(vec![a, b], "incomparable annihilator ideals");
                }
            }
        }
    }
    Outcome::Pass
}

fn factor_check(c: &Ctx, pick: impl Fn(&classify::FactorReport) -> bool, detail: &str) -> Outcome {
    if !c.pbl().holds {
        return Outcome::Vacuous;
    }
    match c.decomposition().factors.iter().find(|f| !pick(f)) {
        Some(f) => fail(vec![f.kernel], detail),
        None => Outcome::Pass,
    }
}

fn t4_8_2(c: &Ctx) -> Outcome {
    factor_check(
        c,
        |f| f.checks.annihilator_or_dense.holds,
        "factor has an ideal neither annihilator nor dense",
    )
}

fn t4_8_4(c: &Ctx) -> Outcome {
    factor_check(
        c,
        |f| f.checks.pseudo_bl_algebra.holds && f.checks.unique_atom.holds,
        "factor algebra is not pseudo-BL with a unique atom",
    )
}

fn t4_8_order(c: &Ctx) -> Outcome {
    factor_check(
        c,
        |f| f.checks.annihilators_below_dense.holds && f.checks.annihilator_chains.holds,
        "factor annihilators not a chain below the dense ideals",
    )
}

fn t4_8_sd(c: &Ctx) -> Outcome {
    if !c.pbl().holds {
        return Outcome::Vacuous;
    }
    if c.decomposition().sound() {
        Outcome::Pass
    } else {
        fail(Vec::new(), "subdirect decomposition is not sound")
    }
}

fn si_bl(c: &Ctx) -> bool {
    c.pbl().bl && classify::is_subdirectly_irreducible(&c.lat).is_some()
}

fn c4_9_1(c: &Ctx) -> Outcome {
    if !si_bl(c) {
        return Outcome::Vacuous;
    }
    from_check(
        &classify::check_theorem_4_8_factor(&c.lat).dense_residuals_fix,
        "J→I ≠ I for annihilator I below dense J",
    )
}

fn c4_9_2(c: &Ctx) -> Outcome {
    if !si_bl(c) {
        return Outcome::Vacuous;
    }
    from_check(
        &classify::check_theorem_4_8_factor(&c.lat).dense_residual_split,
        "neither residual pair is dense",
    )
}

fn probe_pblr1_pblr2(c: &Ctx) -> Outcome {
    let p = c.pbl();
    if !p.pblr1.holds {
        return Outcome::Vacuous;
    }
    from_check(&p.pblr2, "pblr1 holds but pblr2 fails")
}

fn probe_baer_reduced(c: &Ctx) -> Outcome {
    if !classify::is_baer(&c.lat).holds {
        return Outcome::Vacuous;
    }
    match c.ring().nilpotent_witness() {
        Some(x) => fail(vec![x], "Baer ring with a nonzero nilpotent"),
        None => Outcome::Pass,
    }
}

/// The property catalog in id order.
pub static CATALOG: &[Property] = &[
    Property {
        id: "adjointness",
        tag: Tag::Theorem,
        hypothesis: "all rings",
        eval: adjointness,
    },
    Property {
        id: "L3.2",
        tag: Tag::Theorem,
        hypothesis: "all rings",
        eval: l3_2,
    },
    Property {
        id: "L3.3",
        tag: Tag::Theorem,
        hypothesis: "all rings",
        eval: l3_3,
    },
    Property {
        id: "P3.4(1)",
        tag: Tag::Theorem,
        hypothesis: "all rings",
        eval: p3_4_1,
    },
    Property {
        id: "P3.4(2)",
        tag: Tag::Theorem,
        hypothesis: "unital rings",
        eval: p3_4_2,
    },
    Property {
        id: "P3.4(3)",
        tag: Tag::Theorem,
        hypothesis: "unital rings",
        eval: p3_4_3,
    },
    Property {
        id: "P3.5",
        tag: Tag::Theorem,
        hypothesis: "all rings",
        eval: p3_5,
    },
    Property {
        id: "P3.6",
        tag: Tag::Theorem,
        hypothesis: "all rings",
        eval: p3_6,
    },
    Property {
        id: "L3.8",
        tag: Tag::Theorem,
        hypothesis: "multiplication rings of order ≤ 4",
        eval: l3_8,
    },
    Property {
        id: "L3.9",
        tag: Tag::Theorem,
        hypothesis: "multiplication rings of order ≤ 4",
        eval: l3_9,
    },
    Property {
        id: "L3.10",
        tag: Tag::Theorem,
        hypothesis: "unital rings of order ≤ 4",
        eval: l3_10,
    },
    Property {
        id: "Ex3.11",
        tag: Tag::Theorem,
        hypothesis: "multiplication or Łukasiewicz rings of order ≤ 4",
        eval: ex3_11,
    },
    Property {
        id: "L3.12",
        tag: Tag::Theorem,
        hypothesis: "all rings, all I ⊆ J, K",
        eval: l3_12,
    },
    Property {
        id: "P3.13",
        tag: Tag::Theorem,
        hypothesis: "rings satisfying pblr2",
        eval: p3_13,
    },
    Property {
        id: "P3.14",
        tag: Tag::Theorem,
        hypothesis: "all rings",
        eval: p3_14,
    },
    Property {
        id: "P3.15",
        tag: Tag::Theorem,
        hypothesis: "multiplication rings",
        eval: p3_15,
    },
    Property {
        id: "P3.16",
        tag: Tag::Theorem,
        hypothesis: "multiplication rings whose quotients satisfy pblr3",
        eval: p3_16,
    },
    Property {
        id: "C3.16a",
        tag: Tag::Theorem,
        hypothesis: "multiplication rings",
        eval: c3_16a,
    },
    Property {
        id: "C3.17",
        tag: Tag::Theorem,
        hypothesis: "pseudo BL-rings",
        eval: c3_17,
    },
    Property {
        id: "P3.18",
        tag: Tag::Theorem,
        hypothesis: "pseudo BL-rings",
        eval: p3_18,
    },
    Property {
        id: "P3.19",
        tag: Tag::Theorem,
        hypothesis: "pseudo BL-rings, ideals with I∩I* = I∩I⁻ = 0",
        eval: p3_19,
    },
    Property {
        id: "P3.20",
        tag: Tag::Theorem,
        hypothesis: "products of pseudo BL-rings; pseudo BL-rings",
        eval: p3_20,
    },
    Property {
        id: "L3.22",
        tag: Tag::Theorem,
        hypothesis: "all rings",
        eval: l3_22,
    },
    Property {
        id: "P3.23",
        tag: Tag::Theorem,
        hypothesis: "unital reduced rings",
        eval: p3_23,
    },
    Property {
        id: "P3.24",
        tag: Tag::Informational,
        hypothesis: "Baer rings",
        eval: p3_24,
    },
    Property {
        id: "P3.25",
        tag: Tag::Informational,
        hypothesis: "Baer rings",
        eval: p3_25,
    },
    Property {
        id: "L3.26",
        tag: Tag::Theorem,
        hypothesis: "Von Neumann rings",
        eval: l3_26,
    },
    Property {
        id: "P3.27",
        tag: Tag::Informational,
        hypothesis: "Von Neumann rings",
        eval: p3_27,
    },
    Property {
        id: "L4.4",
        tag: Tag::Theorem,
        hypothesis: "idempotent-generated rings with a prime",
        eval: l4_4,
    },
    Property {
        id: "L4.4-ideal",
        tag: Tag::Informational,
        hypothesis: "rings with a prime",
        eval: l4_4_ideal,
    },
    Property {
        id: "P4.7(1)",
        tag: Tag::Theorem,
        hypothesis: "subdirectly irreducible pseudo BL-rings",
        eval: p4_7_1,
    },
    Property {
        id: "P4.7(2)",
        tag: Tag::Theorem,
        hypothesis: "subdirectly irreducible pseudo BL-rings",
        eval: p4_7_2,
    },
    Property {
        id: "T4.8-2",
        tag: Tag::Theorem,
        hypothesis: "pseudo BL-rings",
        eval: t4_8_2,
    },
    Property {
        id: "T4.8-4",
        tag: Tag::Theorem,
        hypothesis: "pseudo BL-rings",
        eval: t4_8_4,
    },
    Property {
        id: "T4.8-order",
        tag: Tag::Theorem,
        hypothesis: "pseudo BL-rings",
        eval: t4_8_order,
    },
    Property {
        id: "T4.8-sd",
        tag: Tag::Theorem,
        hypothesis: "pseudo BL-rings",
        eval: t4_8_sd,
    },
    Property {
        id: "C4.9(1)",
        tag: Tag::Theorem,
        hypothesis: "subdirectly irreducible BL-rings",
        eval: c4_9_1,
    },
    Property {
        id: "C4.9(2)",
        tag: Tag::Theorem,
        hypothesis: "subdirectly irreducible BL-rings",
        eval: c4_9_2,
    },
    Property {
        id: "pblr1-implies-pblr2",
        tag: Tag::Probe,
        hypothesis: "rings satisfying pblr1",
        eval: probe_pblr1_pblr2,
    },
    Property {
        id: "baer-implies-reduced",
        tag: Tag::Probe,
        hypothesis: "Baer rings",
        eval: probe_baer_reduced,
    },
];

pub fn property(id: &str) -> Option<&'static Property> {
    CATALOG.iter().find(|p| p.id == id)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PropsError {
    #[error("unknown property id {0:?}")]
    UnknownProperty(String),
    #[error("cannot start worker pool: {0}")]
    Pool(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyInfo {
    pub id: String,
    pub tag: Tag,
    pub hypothesis: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingRow {
    pub ring: String,
    pub order: usize,
    pub ideals: usize,
    /// Aligned with [`CatalogMatrix::properties`].
    pub outcomes: Vec<Outcome>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogMatrix {
    pub properties: Vec<PropertyInfo>,
    pub rows: Vec<RingRow>,
}

/// A failing (ring, property) cell.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub ring: String,
    pub property: String,
    pub tag: Tag,
    pub witness: Vec<usize>,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    pub pass: usize,
    pub fail: usize,
    pub vacuous: usize,
    pub skipped: usize,
}

impl CatalogMatrix {
    pub fn failures(&self) -> Vec<Failure> {
        let mut out = Vec::new();
        for row in &self.rows {
            for (p, o) in self.properties.iter().zip(&row.outcomes) {
                if let Outcome::Fail { witness, detail } = o {
                    out.push(Failure {
                        ring: row.ring.clone(),
                        property: p.id.clone(),
                        tag: p.tag,
                        witness: witness.clone(),
                        detail: detail.clone(),
                    });
                }
            }
        }
        out
    }

    pub fn theorem_failures(&self) -> Vec<Failure> {
        self.failures()
            .into_iter()
            .filter(|f| f.tag == Tag::Theorem)
            .collect()
    }

    pub fn tally(&self, column: usize) -> Tally {
        let mut t = Tally::default();
        for row in &self.rows {
            match row.outcomes[column] {
                Outcome::Pass => t.pass += 1,
                Outcome::Fail { .. } => t.fail += 1,
                Outcome::Vacuous => t.vacuous += 1,
                Outcome::SkippedTooLarge { .. } => t.skipped += 1,
            }
        }
        t
    }
}

#[derive(Debug, Clone)]
pub struct CatalogOptions {
    /// Restrict to these ids; `None` runs everything.
    pub only: Option<Vec<String>>,
    pub budget: Duration,
    /// Worker threads; `0` lets the pool decide.
    pub jobs: usize,
}

impl Default for CatalogOptions {
    fn default() -> Self {
        CatalogOptions {
            only: None,
            budget: DEFAULT_BUDGET,
            jobs: 0,
        }
    }
}

fn select(only: &Option<Vec<String>>) -> Result<Vec<&'static Property>, PropsError> {
    match only {
        None => Ok(CATALOG.iter().collect()),
        Some(ids) => ids
            .iter()
            .map(|id| property(id).ok_or_else(|| PropsError::UnknownProperty(id.clone())))
            .collect(),
    }
}

fn evaluate_row(entry: &CorpusEntry, props: &[&Property], budget: Duration) -> RingRow {
    let start = Instant::now();
    let ctx = Ctx::new(entry);
    let outcomes = props
        .iter()
        .map(|p| {
            if start.elapsed() > budget {
                Outcome::SkippedTooLarge {
                    reason: format!("ring exceeded the {}s budget", budget.as_secs_f64()),
                }
            } else {
                (p.eval)(&ctx)
            }
        })
        .collect();
    RingRow {
        ring: entry.name.clone(),
        order: entry.ring.order(),
        ideals: ctx.lat.len(),
        outcomes,
    }
}

/// Evaluates the selected properties on every ring. Rows follow corpus
/// order and columns follow catalog order, whatever the thread count.
pub fn run_catalog(
    corpus: &[CorpusEntry],
    opts: &CatalogOptions,
) -> Result<CatalogMatrix, PropsError> {
    let props = select(&opts.only)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs)
        .build()
        .map_err(|e| PropsError::Pool(e.to_string()))?;
    let rows = pool.install(|| {
        corpus
            .par_iter()
            .map(|e| evaluate_row(e, &props, opts.budget))
            .collect()
    });
    Ok(CatalogMatrix {
        properties: props
            .iter()
            .map(|p| PropertyInfo {
                id: p.id.to_string(),
                tag: p.tag,
                hypothesis: p.hypothesis.to_string(),
            })
            .collect(),
        rows,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub property: String,
    pub ring: String,
    pub order: usize,
    pub witness: Vec<usize>,
    pub detail: String,
    /// Ideals of the ring, so lattice-index witnesses can be read back.
    pub ideals: Vec<Vec<usize>>,
}

/// First ring in corpus order where `id` fails.
pub fn find_counterexample(
    id: &str,
    corpus: &[CorpusEntry],
) -> Result<Option<Counterexample>, PropsError> {
    let p = property(id).ok_or_else(|| PropsError::UnknownProperty(id.to_string()))?;
    for entry in corpus {
        let ctx = Ctx::new(entry);
        if let Outcome::Fail { witness, detail } = (p.eval)(&ctx) {
            return Ok(Some(Counterexample {
                property: id.to_string(),
                ring: entry.name.clone(),
                order: entry.ring.order(),
                witness,
                detail,
                ideals: ctx
                    .lat
                    .indices()
                    .map(|i| ctx.lat.members(i).to_vec())
                    .collect(),
            }));
        }
    }
    Ok(None)
}
