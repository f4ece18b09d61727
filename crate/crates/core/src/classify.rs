//! Ring classes defined through the ideal lattice, plus the subdirect
//! decomposition of a ring into subdirectly irreducible quotients.
//!
//! Every predicate works on a finished [`IdealLattice`]; witnesses are
//! lattice indices unless stated otherwise.

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{self, ideal_algebra};
use crate::construct::{quotient, QuotientRing};
use crate::elemset::ElemSet;
use crate::ideal::IdealLattice;
use crate::ring::Elem;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("the ring has no two-sided identity")]
    NonUnital,
    #[error("ideal {0} is not prime")]
    NotPrime(usize),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

/// A verdict with the first offending (or justifying) tuple.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub holds: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub witness: Vec<usize>,
}

impl Check {
    pub fn pass() -> Check {
        Check {
            holds: true,
            witness: Vec::new(),
        }
    }

    pub fn fail(witness: Vec<usize>) -> Check {
        Check {
            holds: false,
            witness,
        }
    }

    fn first_failure(w: Option<Vec<usize>>) -> Check {
        w.map_or_else(Check::pass, Check::fail)
    }
}

fn first_pair(lat: &IdealLattice, bad: impl Fn(usize, usize) -> bool) -> Option<Vec<usize>> {
    lat.indices()
        .flat_map(|i| lat.indices().map(move |j| (i, j)))
        .find(|&(i, j)| bad(i, j))
        .map(|(i, j)| vec![i, j])
}

/// `I∩J = I·(I⇝J) = (I→J)·I` for all ideals.
pub fn check_pblr1(lat: &IdealLattice) -> Check {
    Check::first_failure(first_pair(lat, |i, j| {
        let m = lat.meet(i, j);
        lat.product(i, lat.limp(i, j)) != m || lat.product(lat.rimp(i, j), i) != m
    }))
}

/// `(I→J)+(J→I) = (I⇝J)+(J⇝I) = R` for all ideals.
pub fn check_pblr2(lat: &IdealLattice) -> Check {
    let top = lat.top();
    Check::first_failure(first_pair(lat, |i, j| {
        lat.join(lat.rimp(i, j), lat.rimp(j, i)) != top
            || lat.join(lat.limp(i, j), lat.limp(j, i)) != top
    }))
}

/// `I∩J = {0}` forces `I*+J* = R` and `I⁻+J⁻ = R`.
pub fn check_pblr3(lat: &IdealLattice) -> Check {
    let (bottom, top) = (lat.bottom(), lat.top());
    Check::first_failure(first_pair(lat, |i, j| {
        lat.meet(i, j) == bottom
            && (lat.join(lat.ann_star(i), lat.ann_star(j)) != top
                || lat.join(lat.ann_minus(i), lat.ann_minus(j)) != top)
    }))
}

/// Definitional test: each `I ⊆ J` factors as `J·K` and as `K′·J`.
pub fn is_multiplication_ring(lat: &IdealLattice) -> Check {
    Check::first_failure(first_pair(lat, |i, j| {
        lat.leq(i, j)
            && !(lat.indices().any(|k| lat.product(j, k) == i)
                && lat.indices().any(|k| lat.product(k, j) == i))
    }))
}

/// Composite pseudo-BL verdict with its ingredients.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PseudoBlVerdict {
    pub holds: bool,
    pub generated_by_idempotents: Check,
    pub pblr1: Check,
    pub pblr2: Check,
    /// Pseudo-BL and the ideal algebra is a BL-algebra.
    pub bl: bool,
    /// Pseudo-BL and the ideal algebra is a pseudo MV-algebra.
    pub lukasiewicz: bool,
}

pub fn is_pseudo_bl_ring(lat: &IdealLattice) -> PseudoBlVerdict {
    let cover = lat.ring().generated_by_idempotents();
    let gen = Check {
        holds: cover.holds,
        witness: cover.uncovered().into_iter().collect(),
    };
    let pblr1 = check_pblr1(lat);
    let pblr2 = check_pblr2(lat);
    let holds = gen.holds && pblr1.holds && pblr2.holds;
    let (bl, lukasiewicz) = if holds {
        let alg = ideal_algebra(lat);
        (
            algebra::all_hold(&algebra::check_bl(&alg)),
            algebra::all_hold(&algebra::check_pseudo_mv(&alg)),
        )
    } else {
        (false, false)
    };
    PseudoBlVerdict {
        holds,
        generated_by_idempotents: gen,
        pblr1,
        pblr2,
        bl,
        lukasiewicz,
    }
}

/// Unital ring whose quotient by every prime ideal is a division ring.
/// The witness is the first prime with a non-division quotient.
pub fn is_von_neumann(lat: &IdealLattice) -> Result<Check, ClassifyError> {
    if !lat.ring().is_unital() {
        return Err(ClassifyError::NonUnital);
    }
    Ok(Check::first_failure(
        lat.primes()
            .into_iter()
            .find(|&p| {
                !quotient(lat.ring(), &lat.ideal(p))
                    .ring()
                    .is_division_ring()
            })
            .map(|p| vec![p]),
    ))
}

/// Idempotents generating the annihilators of one ideal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BaerGenerators {
    pub ideal: usize,
    /// `I* = eR`.
    pub e: Elem,
    /// `I⁻ = Re′`.
    pub e_prime: Elem,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BaerVerdict {
    pub holds: bool,
    /// First ideal whose annihilators are not idempotent-generated.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub failing_ideal: Option<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub generators: Vec<BaerGenerators>,
}

pub fn is_baer(lat: &IdealLattice) -> BaerVerdict {
    let r = lat.ring();
    let n = r.order();
    let idem = r.idempotents();
    let right: Vec<ElemSet> = idem
        .iter()
        .map(|&e| ElemSet::from_elems(n, r.elements().map(|x| r.mul(e, x))))
        .collect();
    let left: Vec<ElemSet> = idem
        .iter()
        .map(|&e| ElemSet::from_elems(n, r.elements().map(|x| r.mul(x, e))))
        .collect();
    let mut generators = Vec::new();
    for i in lat.indices() {
        let star = lat.members(lat.ann_star(i));
        let minus = lat.members(lat.ann_minus(i));
        let e = right.iter().position(|s| s == star);
        let f = left.iter().position(|s| s == minus);
        match (e, f) {
            (Some(e), Some(f)) => generators.push(BaerGenerators {
                ideal: i,
                e: idem[e],
                e_prime: idem[f],
            }),
            _ => {
                return BaerVerdict {
                    holds: false,
                    failing_ideal: Some(i),
                    generators: Vec::new(),
                }
            }
        }
    }
    BaerVerdict {
        holds: true,
        failing_ideal: None,
        generators,
    }
}

/// The heart (intersection of all nonzero ideals) when it is nonzero.
/// The zero ring has no nonzero ideals and is not subdirectly irreducible.
pub fn is_subdirectly_irreducible(lat: &IdealLattice) -> Option<usize> {
    let bottom = lat.bottom();
    let heart = lat
        .indices()
        .filter(|&i| i != bottom)
        .reduce(|a, b| lat.meet(a, b))?;
    (heart != bottom).then_some(heart)
}

/// Atoms of the lattice: minimal nonzero ideals.
pub fn atoms(lat: &IdealLattice) -> Vec<usize> {
    let bottom = lat.bottom();
    lat.indices()
        .filter(|&i| {
            i != bottom
                && !lat
                    .indices()
                    .any(|j| j != bottom && j != i && lat.leq(j, i))
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecialPrimary {
    pub holds: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub maximal: Option<usize>,
    /// `M, M², …` until the powers stabilize.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub powers: Vec<usize>,
    /// First proper ideal that is not a power of `M`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub non_power: Option<usize>,
}

pub fn is_special_primary(lat: &IdealLattice) -> SpecialPrimary {
    let maximals = lat.maximals();
    let [m] = maximals[..] else {
        return SpecialPrimary {
            holds: false,
            maximal: None,
            powers: Vec::new(),
            non_power: None,
        };
    };
    let mut powers = vec![m];
    loop {
        let next = lat.product(*powers.last().unwrap(), m);
        if powers.contains(&next) {
            break;
        }
        powers.push(next);
    }
    let non_power = lat
        .indices()
        .find(|&i| i != lat.top() && !powers.contains(&i));
    SpecialPrimary {
        holds: non_power.is_none(),
        maximal: Some(m),
        powers,
        non_power,
    }
}

fn require_prime(lat: &IdealLattice, p: usize) -> Result<&ElemSet, ClassifyError> {
    if !lat.is_prime(p) {
        return Err(ClassifyError::NotPrime(p));
    }
    Ok(lat.members(p))
}

/// `N*(P) = {x : xs = 0 for some s ∉ P}`.
pub fn n_star(lat: &IdealLattice, p: usize) -> Result<ElemSet, ClassifyError> {
    let pm = require_prime(lat, p)?;
    let r = lat.ring();
    let outside: Vec<Elem> = r.elements().filter(|&s| !pm.contains(s)).collect();
    Ok(ElemSet::from_elems(
        r.order(),
        r.elements()
            .filter(|&x| outside.iter().any(|&s| r.mul(x, s) == r.zero())),
    ))
}

/// `N⁻(P) = {x : sx = 0 for some s ∉ P}`.
pub fn n_minus(lat: &IdealLattice, p: usize) -> Result<ElemSet, ClassifyError> {
    let pm = require_prime(lat, p)?;
    let r = lat.ring();
    let outside: Vec<Elem> = r.elements().filter(|&s| !pm.contains(s)).collect();
    Ok(ElemSet::from_elems(
        r.order(),
        r.elements()
            .filter(|&x| outside.iter().any(|&s| r.mul(s, x) == r.zero())),
    ))
}

/// Intersections of `N*(P)` and `N⁻(P)` over all primes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeKernels {
    pub holds: bool,
    pub generated_by_idempotents: bool,
    pub primes: Vec<usize>,
    pub star_intersection: Vec<Elem>,
    pub minus_intersection: Vec<Elem>,
    /// Whether every `N*(P)`/`N⁻(P)` is a two-sided ideal.
    pub all_ideals: bool,
}

impl PrimeKernels {
    /// No prime ideals: the check holds vacuously.
    pub fn is_vacuous(&self) -> bool {
        self.primes.is_empty()
    }
}

pub fn check_lemma_4_4(lat: &IdealLattice) -> PrimeKernels {
    let r = lat.ring();
    let primes = lat.primes();
    let mut star = ElemSet::full(r.order());
    let mut minus = ElemSet::full(r.order());
    let mut all_ideals = true;
    for &p in &primes {
        let s = n_star(lat, p).expect("listed primes are prime");
        let m = n_minus(lat, p).expect("listed primes are prime");
        all_ideals &= crate::ideal::is_ideal(r, &s) && crate::ideal::is_ideal(r, &m);
        star = star.intersection(&s);
        minus = minus.intersection(&m);
    }
    let zero_only = |s: &ElemSet| s.len() == 1 && s.contains(r.zero());
    PrimeKernels {
        holds: primes.is_empty() || (zero_only(&star) && zero_only(&minus)),
        generated_by_idempotents: r.generated_by_idempotents().holds,
        primes,
        star_intersection: star.to_vec(),
        minus_intersection: minus.to_vec(),
        all_ideals,
    }
}

/// Every prime ideal is maximal; the witness is a non-maximal prime.
pub fn check_prime_maximal(lat: &IdealLattice) -> Check {
    Check::first_failure(
        lat.primes()
            .into_iter()
            .find(|&p| !lat.is_maximal(p))
            .map(|p| vec![p]),
    )
}

/// Structural checks on a subdirectly irreducible factor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorChecks {
    /// (a) every ideal is an annihilator ideal or dense on both sides.
    pub annihilator_or_dense: Check,
    /// (b) exactly one atom.
    pub unique_atom: Check,
    /// (c) `AN*` and `AN⁻` are chains.
    pub annihilator_chains: Check,
    /// (d) the heart is an annihilator ideal.
    pub heart_is_annihilator: Check,
    /// Annihilator ideals other than `R` lie below every dense ideal.
    pub annihilators_below_dense: Check,
    /// (e) `J→I = J⇝I = I` for annihilator `I ≠ R` and dense `J ⊇ I`.
    pub dense_residuals_fix: Check,
    /// (f) `I→J, I⇝J` both dense, or `J→I, J⇝I` both dense.
    pub dense_residual_split: Check,
    /// The ideal algebra passes the pseudo-BL axioms.
    pub pseudo_bl_algebra: Check,
}

impl FactorChecks {
    pub fn all_hold(&self) -> bool {
        self.named().iter().all(|(_, c)| c.holds)
    }

    pub fn named(&self) -> [(&'static str, &Check); 8] {
        [
            ("annihilator-or-dense", &self.annihilator_or_dense),
            ("unique-atom", &self.unique_atom),
            ("annihilator-chains", &self.annihilator_chains),
            ("heart-is-annihilator", &self.heart_is_annihilator),
            ("annihilators-below-dense", &self.annihilators_below_dense),
            ("dense-residuals-fix", &self.dense_residuals_fix),
            ("dense-residual-split", &self.dense_residual_split),
            ("pseudo-bl-algebra", &self.pseudo_bl_algebra),
        ]
    }
}

fn is_chain(lat: &IdealLattice, xs: &[usize]) -> Option<Vec<usize>> {
    xs.iter()
        .flat_map(|&a| xs.iter().map(move |&b| (a, b)))
        .find(|&(a, b)| !lat.leq(a, b) && !lat.leq(b, a))
        .map(|(a, b)| vec![a, b])
}

pub fn check_theorem_4_8_factor(lat: &IdealLattice) -> FactorChecks {
    let top = lat.top();
    let dense = |i: usize| lat.is_dense(i).both();
    let annihilator = |i: usize| lat.is_annihilator_ideal(i).holds();
    let parts = algebra::annihilator_parts(lat);

    let annihilator_or_dense = Check::first_failure(
        lat.indices()
            .find(|&i| !annihilator(i) && !dense(i))
            .map(|i| vec![i]),
    );
    let atoms = atoms(lat);
    let unique_atom = if atoms.len() == 1 {
        Check {
            holds: true,
            witness: atoms.clone(),
        }
    } else {
        Check::fail(atoms.clone())
    };
    let annihilator_chains = Check::first_failure(
        is_chain(lat, &parts.an_star).or_else(|| is_chain(lat, &parts.an_minus)),
    );
    let heart_is_annihilator = match is_subdirectly_irreducible(lat) {
        Some(h) if annihilator(h) => Check {
            holds: true,
            witness: vec![h],
        },
        Some(h) => Check::fail(vec![h]),
        None => Check::fail(Vec::new()),
    };
    let below = |an: &[usize], d: &[usize]| {
        an.iter()
            .filter(|&&i| i != top)
            .flat_map(|&i| d.iter().map(move |&j| (i, j)))
            .find(|&(i, j)| !lat.leq(i, j))
            .map(|(i, j)| vec![i, j])
    };
    let annihilators_below_dense = Check::first_failure(
        below(&parts.an_star, &parts.d_star).or_else(|| below(&parts.an_minus, &parts.d_minus)),
    );
    let dense_residuals_fix = Check::first_failure(first_pair(lat, |i, j| {
        i != top
            && annihilator(i)
            && dense(j)
            && lat.leq(i, j)
            && (lat.rimp(j, i) != i || lat.limp(j, i) != i)
    }));
    let dense_residual_split = Check::first_failure(first_pair(lat, |i, j| {
        let forward = dense(lat.rimp(i, j)) && dense(lat.limp(i, j));
        let backward = dense(lat.rimp(j, i)) && dense(lat.limp(j, i));
        !forward && !backward
    }));
    let axioms = algebra::check_pseudo_bl(&ideal_algebra(lat));
    let pseudo_bl_algebra =
        Check::first_failure(axioms.iter().find(|r| !r.holds).map(|r| r.witness.clone()));
    FactorChecks {
        annihilator_or_dense,
        unique_atom,
        annihilator_chains,
        heart_is_annihilator,
        annihilators_below_dense,
        dense_residuals_fix,
        dense_residual_split,
        pseudo_bl_algebra,
    }
}

/// The kernel chosen for one nonzero element.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KernelChoice {
    pub element: Elem,
    pub kernel: usize,
    /// All maximal ideals avoiding `element`, in canonical order.
    pub candidates: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorReport {
    pub kernel: usize,
    pub kernel_members: Vec<Elem>,
    pub order: usize,
    pub ideals: usize,
    pub subdirectly_irreducible: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub heart: Option<usize>,
    pub pseudo_bl_ring: bool,
    pub checks: FactorChecks,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub pseudo_bl_input: bool,
    pub choices: Vec<KernelChoice>,
    /// `∩ K_x = {0}`.
    pub intersection_is_zero: bool,
    /// `x ↦ (x + K_x)_x` separates elements.
    pub embedding_injective: bool,
    /// One factor per distinct kernel, in canonical kernel order.
    pub factors: Vec<FactorReport>,
}

impl Decomposition {
    pub fn sound(&self) -> bool {
        self.intersection_is_zero
            && self.embedding_injective
            && self
                .factors
                .iter()
                .all(|f| f.subdirectly_irreducible && (!self.pseudo_bl_input || f.pseudo_bl_ring))
    }
}

/// Maximal members of `{I : x ∉ I}`.
pub fn maximal_excluders(lat: &IdealLattice, x: Elem) -> Vec<usize> {
    let avoid: Vec<usize> = lat
        .indices()
        .filter(|&i| !lat.members(i).contains(x))
        .collect();
    avoid
        .iter()
        .copied()
        .filter(|&i| !avoid.iter().any(|&j| j != i && lat.leq(i, j)))
        .collect()
}

/// Distinct kernels `K_x` of the subdirect decomposition with their
/// quotient rings, in canonical kernel order.
pub fn decomposition_factors(lat: &IdealLattice) -> Vec<(usize, QuotientRing)> {
    let mut kernels: Vec<usize> = lat
        .ring()
        .elements()
        .filter(|&x| x != lat.ring().zero())
        .map(|x| maximal_excluders(lat, x)[0])
        .collect();
    kernels.sort_unstable();
    kernels.dedup();
    kernels
        .into_iter()
        .map(|k| (k, quotient(lat.ring(), &lat.ideal(k))))
        .collect()
}

pub fn subdirect_decomposition(lat: &IdealLattice) -> Decomposition {
    let r = lat.ring();
    let choices: Vec<KernelChoice> = r
        .elements()
        .filter(|&x| x != r.zero())
        .map(|x| {
            let candidates = maximal_excluders(lat, x);
            KernelChoice {
                element: x,
                kernel: candidates[0],
                candidates,
            }
        })
        .collect();
    let intersection = choices
        .iter()
        .fold(lat.top(), |acc, c| lat.meet(acc, c.kernel));
    let factors = decomposition_factors(lat);
    let images: Vec<Vec<Elem>> = r
        .elements()
        .map(|x| factors.iter().map(|(_, q)| q.project(x)).collect())
        .collect();
    let mut sorted = images.clone();
    sorted.sort();
    sorted.dedup();
    let factors = factors
        .into_iter()
        .map(|(k, q)| {
            let flat = IdealLattice::new(q.ring().clone());
            let heart = is_subdirectly_irreducible(&flat);
            FactorReport {
                kernel: k,
                kernel_members: lat.members(k).to_vec(),
                order: q.ring().order(),
                ideals: flat.len(),
                subdirectly_irreducible: heart.is_some(),
                heart,
                pseudo_bl_ring: is_pseudo_bl_ring(&flat).holds,
                checks: check_theorem_4_8_factor(&flat),
            }
        })
        .collect();
    Decomposition {
        pseudo_bl_input: is_pseudo_bl_ring(lat).holds,
        choices,
        intersection_is_zero: intersection == lat.bottom(),
        embedding_injective: sorted.len() == r.order(),
        factors,
    }
}

/// One named verdict of a classification.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Predicate {
    pub name: String,
    pub verdict: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub witness: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub notes: Option<String>,
}

/// Names reported by [`classify`], in report order.
pub const PREDICATES: [&str; 15] = [
    "generated-by-idempotents",
    "multiplication-ring",
    "pblr1",
    "pblr2",
    "pblr3",
    "pseudo-bl-ring",
    "bl-ring",
    "lukasiewicz-ring",
    "reduced",
    "baer",
    "von-neumann",
    "prime-ring",
    "subdirectly-irreducible",
    "special-primary",
    "degenerate",
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub ring: String,
    pub order: usize,
    pub ideals: usize,
    pub commutative: bool,
    pub unital: bool,
    pub predicates: Vec<Predicate>,
}

impl ClassificationReport {
    pub fn verdict(&self, name: &str) -> Option<bool> {
        self.predicates
            .iter()
            .find(|p| p.name == name)
            .map(|p| p.verdict)
    }
}

fn predicate(name: &str, check: &Check, notes: Option<&str>) -> Predicate {
    Predicate {
        name: name.to_string(),
        verdict: check.holds,
        witness: check.witness.clone(),
        notes: notes
            .filter(|_| !check.witness.is_empty())
            .map(str::to_string),
    }
}

/// Runs every predicate. Fails only when the definitional multiplication
/// test and PBLR-1 disagree, which would indicate a bug.
pub fn classify(lat: &IdealLattice) -> Result<ClassificationReport, ClassifyError> {
    let r: &Arc<_> = lat.ring();
    let mult = is_multiplication_ring(lat);
    let pbl = is_pseudo_bl_ring(lat);
    if mult.holds != pbl.pblr1.holds {
        return Err(ClassifyError::Invariant(format!(
            "multiplication-ring = {} but pblr1 = {}",
            mult.holds, pbl.pblr1.holds
        )));
    }
    let degenerate = r.is_zero_ring();
    let mut out = vec![
        predicate(
            "generated-by-idempotents",
            &pbl.generated_by_idempotents,
            Some("witness: an element no idempotent fixes on both sides"),
        ),
        predicate("multiplication-ring", &mult, None),
        predicate("pblr1", &pbl.pblr1, None),
        predicate("pblr2", &pbl.pblr2, None),
        predicate("pblr3", &check_pblr3(lat), None),
        Predicate {
            name: "pseudo-bl-ring".into(),
            verdict: pbl.holds,
            witness: Vec::new(),
            notes: degenerate.then(|| "zero ring: satisfied vacuously".to_string()),
        },
        Predicate {
            name: "bl-ring".into(),
            verdict: pbl.bl,
            witness: Vec::new(),
            notes: None,
        },
        Predicate {
            name: "lukasiewicz-ring".into(),
            verdict: pbl.lukasiewicz,
            witness: Vec::new(),
            notes: None,
        },
        Predicate {
            name: "reduced".into(),
            verdict: r.is_reduced(),
            witness: r.nilpotent_witness().into_iter().collect(),
            notes: r
                .nilpotent_witness()
                .map(|_| "witness: a nonzero nilpotent element".into()),
        },
    ];
    let baer = is_baer(lat);
    out.push(Predicate {
        name: "baer".into(),
        verdict: baer.holds,
        witness: baer.failing_ideal.into_iter().collect(),
        notes: None,
    });
    out.push(match is_von_neumann(lat) {
        Ok(c) => predicate(
            "von-neumann",
            &c,
            Some("witness: a prime ideal whose quotient is not a division ring"),
        ),
        Err(_) => Predicate {
            name: "von-neumann".into(),
            verdict: false,
            witness: Vec::new(),
            notes: Some("not unital".into()),
        },
    });
    out.push(Predicate {
        name: "prime-ring".into(),
        verdict: lat.is_prime(lat.bottom()),
        witness: Vec::new(),
        notes: None,
    });
    let heart = is_subdirectly_irreducible(lat);
    out.push(Predicate {
        name: "subdirectly-irreducible".into(),
        verdict: heart.is_some(),
        witness: heart.into_iter().collect(),
        notes: heart.map(|_| "witness: the heart".to_string()),
    });
    let sp = is_special_primary(lat);
    out.push(Predicate {
        name: "special-primary".into(),
        verdict: sp.holds,
        witness: sp.non_power.into_iter().collect(),
        notes: None,
    });
    out.push(Predicate {
        name: "degenerate".into(),
        verdict: degenerate,
        witness: Vec::new(),
        notes: None,
    });
    debug_assert!(out.iter().map(|p| p.name.as_str()).eq(PREDICATES));
    Ok(ClassificationReport {
        ring: r.provenance().unwrap_or("tables").to_string(),
        order: r.order(),
        ideals: lat.len(),
        commutative: r.is_commutative(),
        unital: r.is_unital(),
        predicates: out,
    })
}
