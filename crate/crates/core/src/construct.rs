//! Ring constructors and ideal transport across them.
//!
//! Element numbering is fixed so that reports and diagrams are reproducible:
//!
//! * `Z_n`: residue `r` is element `r`.
//! * `M_k(R)`: entries read row-major, index `Σ e_p · n^(k²-1-p)` with `n =
//!   |R|`, so the first entry is the most significant digit.
//! * `R_1 × … × R_m`: tuples in mixed radix, first coordinate most significant.
//! * `R/I`: cosets ordered by their least element; that element is the
//!   coset's representative.
//! * `Z_n[x]/(f)`: coefficient vectors, index `Σ a_i n^i` (constant term least
//!   significant).

use std::sync::Arc;

use thiserror::Error;

use crate::elemset::ElemSet;
use crate::ideal::Ideal;
use crate::ring::{Elem, FiniteRing, MAX_ORDER};

/// Largest modulus accepted by [`zmod`].
pub const MAX_MODULUS: usize = 256;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("{what} would have order {order}, above the limit {limit}")]
    TooLarge {
        what: String,
        order: u128,
        limit: usize,
    },
    #[error("invalid construction: {0}")]
    Invalid(String),
}

fn check_size(what: &str, order: u128, limit: usize) -> Result<usize, ConstructError> {
    if order > limit as u128 || order > MAX_ORDER as u128 {
        return Err(ConstructError::TooLarge {
            what: what.to_string(),
            order,
            limit: limit.min(MAX_ORDER),
        });
    }
    Ok(order as usize)
}

/// Integers modulo `n`, `1 ≤ n ≤ 256`.
pub fn zmod(n: usize) -> Result<FiniteRing, ConstructError> {
    if n == 0 {
        return Err(ConstructError::Invalid(
            "zmod modulus must be at least 1".into(),
        ));
    }
    check_size(&format!("zmod({n})"), n as u128, MAX_MODULUS)?;
    let add = (0..n * n).map(|i| (i / n + i % n) % n).collect();
    let mul = (0..n * n).map(|i| (i / n) * (i % n) % n).collect();
    Ok(FiniteRing::from_trusted(n, add, mul, 0).with_provenance(format!("zmod({n})")))
}

/// `Z_n` with the zero multiplication.
pub fn null_ring(n: usize) -> Result<FiniteRing, ConstructError> {
    if n == 0 {
        return Err(ConstructError::Invalid("modulus must be at least 1".into()));
    }
    check_size("null ring", n as u128, MAX_MODULUS)?;
    let add = (0..n * n).map(|i| (i / n + i % n) % n).collect();
    Ok(FiniteRing::from_trusted(n, add, vec![0; n * n], 0))
}

/// `Z_n[x]/(x^d + c_{d-1} x^{d-1} + … + c_0)` with `coeffs = [c_0, …, c_{d-1}]`.
pub fn monic_quotient(n: usize, coeffs: &[usize]) -> Result<FiniteRing, ConstructError> {
    let d = coeffs.len();
    if n == 0 || d == 0 {
        return Err(ConstructError::Invalid(
            "polynomial quotient needs a modulus and a positive degree".into(),
        ));
    }
    let order = check_size("polynomial quotient", (n as u128).pow(d as u32), MAX_ORDER)?;
    let decode = |mut i: usize| -> Vec<usize> {
        (0..d)
            .map(|_| {
                let c = i % n;
                i /= n;
                c
            })
            .collect()
    };
    let encode = |v: &[usize]| v.iter().rev().fold(0, |acc, &c| acc * n + c);
    let polys: Vec<Vec<usize>> = (0..order).map(decode).collect();
    let mut add = Vec::with_capacity(order * order);
    let mut mul = Vec::with_capacity(order * order);
    for a in &polys {
        for b in &polys {
            let s: Vec<usize> = a.iter().zip(b).map(|(x, y)| (x + y) % n).collect();
            add.push(encode(&s));
            let mut prod = vec![0usize; 2 * d - 1];
            for (i, x) in a.iter().enumerate() {
                for (j, y) in b.iter().enumerate() {
                    prod[i + j] = (prod[i + j] + x * y) % n;
                }
            }
            // x^d ≡ -(c_0 + … + c_{d-1} x^{d-1})
            for top in (d..2 * d - 1).rev() {
                let lead = prod[top];
                prod[top] = 0;
                for (k, c) in coeffs.iter().enumerate() {
                    let idx = top - d + k;
                    prod[idx] = (prod[idx] + n * n - (lead * c) % n) % n;
                }
            }
            mul.push(encode(&prod[..d]));
        }
    }
    Ok(FiniteRing::from_trusted(order, add, mul, 0))
}

/// `k×k` upper triangular matrices over `base`, upper-triangle entries read
/// row-major with the first most significant.
pub fn upper_triangular(base: &FiniteRing, k: usize) -> Result<FiniteRing, ConstructError> {
    if k == 0 {
        return Err(ConstructError::Invalid(
            "matrix size must be at least 1".into(),
        ));
    }
    let slots: Vec<(usize, usize)> = (0..k).flat_map(|i| (i..k).map(move |j| (i, j))).collect();
    let n = base.order();
    let order = check_size(
        "upper triangular ring",
        (n as u128).pow(slots.len() as u32),
        MAX_ORDER,
    )?;
    let full = |i: usize| -> Vec<Vec<Elem>> {
        let mut m = vec![vec![base.zero(); k]; k];
        let mut rest = i;
        for &(r, c) in slots.iter().rev() {
            m[r][c] = rest % n;
            rest /= n;
        }
        m
    };
    let encode = |m: &[Vec<Elem>]| slots.iter().fold(0, |acc, &(r, c)| acc * n + m[r][c]);
    let mats: Vec<Vec<Vec<Elem>>> = (0..order).map(full).collect();
    let (add, mul) = matrix_tables(base, k, &mats, encode);
    Ok(FiniteRing::from_trusted(
        order,
        add,
        mul,
        encode(&vec![vec![base.zero(); k]; k]),
    ))
}

fn matrix_tables(
    base: &FiniteRing,
    k: usize,
    mats: &[Vec<Vec<Elem>>],
    encode: impl Fn(&[Vec<Elem>]) -> usize,
) -> (Vec<Elem>, Vec<Elem>) {
    let order = mats.len();
    let mut add = Vec::with_capacity(order * order);
    let mut mul = Vec::with_capacity(order * order);
    let mut s = vec![vec![base.zero(); k]; k];
    let mut p = vec![vec![base.zero(); k]; k];
    for a in mats {
        for b in mats {
            for i in 0..k {
                for j in 0..k {
                    s[i][j] = base.add(a[i][j], b[i][j]);
                    let mut acc = base.zero();
                    for t in 0..k {
                        acc = base.add(acc, base.mul(a[i][t], b[t][j]));
                    }
                    p[i][j] = acc;
                }
            }
            add.push(encode(&s));
            mul.push(encode(&p));
        }
    }
    (add, mul)
}

/// `M_k(R)` together with the entry coding.
#[derive(Debug, Clone)]
pub struct MatrixRing {
    ring: Arc<FiniteRing>,
    base: Arc<FiniteRing>,
    k: usize,
}

impl MatrixRing {
    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn base(&self) -> &Arc<FiniteRing> {
        &self.base
    }

    pub fn size(&self) -> usize {
        self.k
    }

    /// Entries of matrix `m`, row-major.
    pub fn entries(&self, m: Elem) -> Vec<Elem> {
        let n = self.base.order();
        let mut out = vec![0; self.k * self.k];
        let mut rest = m;
        for slot in out.iter_mut().rev() {
            *slot = rest % n;
            rest /= n;
        }
        out
    }

    pub fn encode(&self, entries: &[Elem]) -> Elem {
        let n = self.base.order();
        entries.iter().fold(0, |acc, &e| acc * n + e)
    }
}

pub fn matrix_ring(base: &Arc<FiniteRing>, k: usize) -> Result<MatrixRing, ConstructError> {
    matrix_ring_limited(base, k, MAX_ORDER)
}

pub(crate) fn matrix_ring_limited(
    base: &Arc<FiniteRing>,
    k: usize,
    limit: usize,
) -> Result<MatrixRing, ConstructError> {
    if k == 0 {
        return Err(ConstructError::Invalid(
            "matrix size must be at least 1".into(),
        ));
    }
    let n = base.order();
    let order = check_size(
        &format!("{k}x{k} matrices over a ring of order {n}"),
        (n as u128).checked_pow((k * k) as u32).unwrap_or(u128::MAX),
        limit,
    )?;
    let full = |i: usize| -> Vec<Vec<Elem>> {
        let mut m = vec![vec![0; k]; k];
        let mut rest = i;
        for p in (0..k * k).rev() {
            m[p / k][p % k] = rest % n;
            rest /= n;
        }
        m
    };
    let encode = |m: &[Vec<Elem>]| m.iter().flatten().fold(0, |acc, &e| acc * n + e);
    let mats: Vec<Vec<Vec<Elem>>> = (0..order).map(full).collect();
    let (add, mul) = matrix_tables(base, k, &mats, encode);
    let zero = encode(&vec![vec![base.zero(); k]; k]);
    Ok(MatrixRing {
        ring: Arc::new(FiniteRing::from_trusted(order, add, mul, zero)),
        base: base.clone(),
        k,
    })
}

/// `M_k(I)`: matrices with every entry in `ideal`.
pub fn matrix_ideal(m: &MatrixRing, ideal: &Ideal) -> Ideal {
    assert!(
        **ideal.ring() == *m.base,
        "ideal does not belong to the base ring of the matrix ring"
    );
    let members = ElemSet::from_elems(
        m.ring.order(),
        m.ring
            .elements()
            .filter(|&x| m.entries(x).iter().all(|&e| ideal.contains(e))),
    );
    Ideal::from_trusted(&m.ring, members)
}

/// `R/I` with its projection.
#[derive(Debug, Clone)]
pub struct QuotientRing {
    ring: Arc<FiniteRing>,
    parent: Arc<FiniteRing>,
    kernel: Ideal,
    projection: Vec<Elem>,
    representatives: Vec<Elem>,
}

impl QuotientRing {
    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn parent(&self) -> &Arc<FiniteRing> {
        &self.parent
    }

    pub fn kernel(&self) -> &Ideal {
        &self.kernel
    }

    pub fn project(&self, x: Elem) -> Elem {
        self.projection[x]
    }

    pub fn projection(&self) -> &[Elem] {
        &self.projection
    }

    pub fn representative(&self, coset: Elem) -> Elem {
        self.representatives[coset]
    }

    /// Image `J/I = {x + I : x ∈ J}` of an ideal of the parent ring.
    pub fn project_ideal(&self, j: &Ideal) -> Ideal {
        assert!(
            **j.ring() == *self.parent,
            "ideal does not belong to the parent ring"
        );
        let members = ElemSet::from_elems(
            self.ring.order(),
            j.members().iter().map(|x| self.projection[x]),
        );
        Ideal::from_trusted(&self.ring, members)
    }

    /// Full preimage of an ideal of the quotient.
    pub fn lift_ideal(&self, q: &Ideal) -> Ideal {
        let members = ElemSet::from_elems(
            self.parent.order(),
            self.parent
                .elements()
                .filter(|&x| q.contains(self.projection[x])),
        );
        Ideal::from_trusted(&self.parent, members)
    }
}

pub fn quotient(parent: &Arc<FiniteRing>, kernel: &Ideal) -> QuotientRing {
    assert!(
        **kernel.ring() == **parent,
        "ideal does not belong to the ring being factored"
    );
    let r: &FiniteRing = parent;
    let n = r.order();
    let members = kernel.members().to_vec();
    let mut rep_of = vec![usize::MAX; n];
    let mut representatives = Vec::new();
    for x in r.elements() {
        if rep_of[x] != usize::MAX {
            continue;
        }
        // x is the least element of its coset since earlier elements are all assigned
        representatives.push(x);
        for &i in &members {
            rep_of[r.add(x, i)] = x;
        }
    }
    let mut coset_index = vec![0; n];
    for (c, &rep) in representatives.iter().enumerate() {
        coset_index[rep] = c;
    }
    let projection: Vec<Elem> = (0..n).map(|x| coset_index[rep_of[x]]).collect();
    let m = representatives.len();
    let mut add = Vec::with_capacity(m * m);
    let mut mul = Vec::with_capacity(m * m);
    for &a in &representatives {
        for &b in &representatives {
            add.push(projection[r.add(a, b)]);
            mul.push(projection[r.mul(a, b)]);
        }
    }
    let ring = FiniteRing::from_trusted(m, add, mul, projection[r.zero()]);
    QuotientRing {
        ring: Arc::new(ring),
        parent: parent.clone(),
        kernel: kernel.clone(),
        projection,
        representatives,
    }
}

/// `R_1 × … × R_m` with coordinate maps.
#[derive(Debug, Clone)]
pub struct DirectProduct {
    ring: Arc<FiniteRing>,
    factors: Vec<Arc<FiniteRing>>,
}

impl DirectProduct {
    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn factors(&self) -> &[Arc<FiniteRing>] {
        &self.factors
    }

    pub fn coords(&self, x: Elem) -> Vec<Elem> {
        let mut out = vec![0; self.factors.len()];
        let mut rest = x;
        for (slot, f) in out.iter_mut().zip(&self.factors).rev() {
            *slot = rest % f.order();
            rest /= f.order();
        }
        out
    }

    pub fn encode(&self, coords: &[Elem]) -> Elem {
        coords
            .iter()
            .zip(&self.factors)
            .fold(0, |acc, (&c, f)| acc * f.order() + c)
    }

    /// Coordinate embedding of factor `i`: `a ↦ (0, …, a, …, 0)`.
    pub fn embed(&self, i: usize, a: Elem) -> Elem {
        let mut c: Vec<Elem> = self.factors.iter().map(|f| f.zero()).collect();
        c[i] = a;
        self.encode(&c)
    }

    pub fn project(&self, i: usize, x: Elem) -> Elem {
        self.coords(x)[i]
    }

    /// `I_1 × … × I_m`.
    pub fn product_ideal(&self, parts: &[Ideal]) -> Ideal {
        assert_eq!(parts.len(), self.factors.len());
        let members = ElemSet::from_elems(
            self.ring.order(),
            self.ring.elements().filter(|&x| {
                self.coords(x)
                    .iter()
                    .zip(parts)
                    .all(|(&c, part)| part.contains(c))
            }),
        );
        Ideal::from_trusted(&self.ring, members)
    }
}

pub fn direct_product(factors: &[Arc<FiniteRing>]) -> Result<DirectProduct, ConstructError> {
    direct_product_limited(factors, MAX_ORDER)
}

pub(crate) fn direct_product_limited(
    factors: &[Arc<FiniteRing>],
    limit: usize,
) -> Result<DirectProduct, ConstructError> {
    if factors.is_empty() {
        return Err(ConstructError::Invalid(
            "product needs at least one factor".into(),
        ));
    }
    let order = check_size(
        "direct product",
        factors
            .iter()
            .try_fold(1u128, |acc, f| acc.checked_mul(f.order() as u128))
            .unwrap_or(u128::MAX),
        limit,
    )?;
    let shell = DirectProduct {
        ring: Arc::new(FiniteRing::from_trusted(1, vec![0], vec![0], 0)),
        factors: factors.to_vec(),
    };
    let tuples: Vec<Vec<Elem>> = (0..order).map(|x| shell.coords(x)).collect();
    let mut add = Vec::with_capacity(order * order);
    let mut mul = Vec::with_capacity(order * order);
    let mut s = vec![0; factors.len()];
    let mut p = vec![0; factors.len()];
    for a in &tuples {
        for b in &tuples {
            for (k, f) in factors.iter().enumerate() {
                s[k] = f.add(a[k], b[k]);
                p[k] = f.mul(a[k], b[k]);
            }
            add.push(shell.encode(&s));
            mul.push(shell.encode(&p));
        }
    }
    let zero = shell.encode(&factors.iter().map(|f| f.zero()).collect::<Vec<_>>());
    Ok(DirectProduct {
        ring: Arc::new(FiniteRing::from_trusted(order, add, mul, zero)),
        factors: factors.to_vec(),
    })
}
