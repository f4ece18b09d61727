use std::path::PathBuf;
use std::sync::Arc;

use pblring::{
    direct_product, matrix_ring, quotient, zmod, FiniteRing, Ideal, IdealLattice, RingSpec,
};

fn arc(r: FiniteRing) -> Arc<FiniteRing> {
    Arc::new(r)
}

fn is_hom(src: &FiniteRing, dst: &FiniteRing, f: impl Fn(usize) -> usize) -> bool {
    src.elements().all(|x| {
        src.elements().all(|y| {
            f(src.add(x, y)) == dst.add(f(x), f(y)) && f(src.mul(x, y)) == dst.mul(f(x), f(y))
        })
    })
}

#[test]
fn product_projections_and_embeddings() {
    let factors = [arc(zmod(4).unwrap()), arc(zmod(3).unwrap())];
    let p = direct_product(&factors).unwrap();
    assert_eq!(p.ring().order(), 12);
    for (i, f) in factors.iter().enumerate() {
        assert!(is_hom(p.ring(), f, |x| p.project(i, x)));
        for a in f.elements() {
            assert_eq!(p.project(i, p.embed(i, a)), a);
        }
    }
    // First coordinate is most significant.
    assert_eq!(p.coords(5), vec![1, 2]);
    assert_eq!(p.encode(&[1, 2]), 5);
}

#[test]
fn matrix_multiplication_matches_entries() {
    let base = arc(zmod(3).unwrap());
    let m = matrix_ring(&base, 2).unwrap();
    let r = m.ring();
    for x in (0..r.order()).step_by(7) {
        for y in (0..r.order()).step_by(5) {
            let (a, b) = (m.entries(x), m.entries(y));
            let want: Vec<usize> = (0..2)
                .flat_map(|i| (0..2).map(move |j| (i, j)))
                .map(|(i, j)| (a[2 * i] * b[j] + a[2 * i + 1] * b[2 + j]) % 3)
                .collect();
            assert_eq!(m.entries(r.mul(x, y)), want);
        }
    }
    assert_eq!(m.entries(r.one().unwrap()), vec![1, 0, 0, 1]);
}

#[test]
fn quotient_projection_is_a_surjective_homomorphism() {
    let r = arc(zmod(12).unwrap());
    let k = Ideal::generated(&r, [4]).unwrap();
    let q = quotient(&r, &k);
    assert_eq!(q.ring().order(), 4);
    assert!(is_hom(&r, q.ring(), |x| q.project(x)));
    for c in q.ring().elements() {
        let rep = q.representative(c);
        assert_eq!(q.project(rep), c);
        // Representatives are the least element of their coset.
        assert!(r
            .elements()
            .filter(|&x| q.project(x) == c)
            .all(|x| x >= rep));
    }
}

#[test]
fn spec_constructions_agree_with_direct_ones() {
    let via_spec = RingSpec::parse("quotient(zmod(12),[4])")
        .unwrap()
        .build()
        .unwrap();
    let r = arc(zmod(12).unwrap());
    let direct = quotient(&r, &Ideal::generated(&r, [4]).unwrap());
    assert_eq!(via_spec.add_table(), direct.ring().add_table());
    assert_eq!(via_spec.mul_table(), direct.ring().mul_table());
}

#[test]
fn shipped_table_file_loads() {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data/z2xy_sq.tbl");
    let r = RingSpec::TablesFile(path).build().unwrap();
    assert_eq!(r.order(), 8);
    assert!(r.is_commutative() && r.is_unital() && !r.is_reduced());
    let lat = IdealLattice::new(r);
    assert_eq!(lat.len(), 6);
    assert_eq!(lat.maximals().len(), 1);
}

#[test]
fn bounds_are_checked_before_building() {
    let huge = RingSpec::parse("matrix(zmod(16),2)").unwrap();
    assert_eq!(huge.predicted_order(), Some(65536));
    assert!(huge.build_with_limit(256).is_err());
    let nested = RingSpec::parse("product(matrix(zmod(4),2),matrix(zmod(4),2))").unwrap();
    assert!(nested.build_with_limit(4096).is_err());
}
