use partscat::gf::{Embedding, FElem, FieldCtx, SubfieldCoords};
use proptest::prelude::*;

fn fields() -> Vec<FieldCtx> {
    let mut out = Vec::new();
    for (p, d) in [(2u64, 1u32), (2, 2), (2, 3), (2, 4), (2, 5), (2, 6), (3, 1), (3, 2), (3, 3), (3, 4), (5, 2), (7, 2)] {
        out.push(FieldCtx::make_field(p, d, None).unwrap().with_tower(p, 1, d).unwrap());
    }
    out
}

#[test]
fn subfield_intersections_follow_gcd() {
    for k in fields() {
        let n = k.n();
        let divs: Vec<u32> = (1..=n).filter(|m| n % m == 0).collect();
        for &a in &divs {
            let sa = k.subfield_elements(a).unwrap();
            assert_eq!(sa.len() as u64, (k.p() as u64).pow(a));
            for &b in &divs {
                let g = partscat::gf::gcd_u32(a, b);
                let both = sa.iter().filter(|&&x| k.in_subfield(x, b).unwrap()).count() as u64;
                assert_eq!(both, (k.p() as u64).pow(g));
            }
        }
    }
}

#[test]
fn norm_and_trace_are_transitive() {
    for k in fields() {
        let n = k.n();
        for m in (1..=n).filter(|m| n % m == 0) {
            for l in (1..=m).filter(|l| m % l == 0) {
                for x in k.elements() {
                    let nm = k.rel_norm(x, n, m).unwrap();
                    assert!(k.in_subfield(nm, m).unwrap());
                    assert_eq!(k.rel_norm(nm, m, l).unwrap(), k.rel_norm(x, n, l).unwrap());
                    let tm = k.rel_trace(x, n, m).unwrap();
                    assert_eq!(k.rel_trace(tm, m, l).unwrap(), k.rel_trace(x, n, l).unwrap());
                }
            }
        }
    }
}

#[test]
fn embeddings_are_homomorphisms() {
    for (small, big) in [((2u64, 2u32), (2u64, 4u32)), ((2, 3), (2, 6)), ((3, 2), (3, 4))] {
        let s = FieldCtx::make_field(small.0, small.1, None).unwrap();
        let b = FieldCtx::make_field(big.0, big.1, None).unwrap();
        let emb = Embedding::build(&s, &b).unwrap();
        let els: Vec<FElem> = s.elements().collect();
        let mut images: Vec<u32> = els.iter().map(|&x| emb.apply(x).unwrap().raw()).collect();
        for &x in &els {
            for &y in &els {
                assert_eq!(emb.apply(s.add(x, y)).unwrap(), b.add(emb.apply(x).unwrap(), emb.apply(y).unwrap()));
                assert_eq!(emb.apply(s.mul(x, y)).unwrap(), b.mul(emb.apply(x).unwrap(), emb.apply(y).unwrap()));
            }
        }
        images.sort();
        images.dedup();
        assert_eq!(images.len(), els.len());
    }
}

#[test]
fn subfield_coordinates_round_trip() {
    let k = FieldCtx::tower_field(2, 2, 3).unwrap();
    for m in [1, 2, 3] {
        let sc = SubfieldCoords::new(&k, m).unwrap();
        let basis = sc.basis();
        for x in k.elements() {
            let c = sc.coords(x).unwrap();
            let back = c.iter().zip(&basis).fold(k.zero(), |acc, (&a, &b)| k.add(acc, k.mul(a, b)));
            assert_eq!(back, x);
            assert!(c.iter().all(|&a| k.in_subfield(a, m).unwrap()));
        }
    }
}

proptest! {
    #[test]
    fn field_axioms(fi in 0usize..12, a in any::<u32>(), b in any::<u32>(), c in any::<u32>()) {
        let k = &fields()[fi];
        let pick = |r: u32| k.from_raw(r % k.size()).unwrap();
        let (a, b, c) = (pick(a), pick(b), pick(c));
        prop_assert_eq!(k.mul(a, k.add(b, c)), k.add(k.mul(a, b), k.mul(a, c)));
        prop_assert_eq!(k.mul(k.mul(a, b), c), k.mul(a, k.mul(b, c)));
        prop_assert_eq!(k.add(a, k.neg(a)), k.zero());
        if !a.is_zero() {
            prop_assert_eq!(k.mul(a, k.inv(a).unwrap()), k.one());
            prop_assert_eq!(k.pow(a, k.size() as u64 - 1), k.one());
        }
        prop_assert_eq!(k.frob_q(k.mul(a, b), 1), k.mul(k.frob_q(a, 1), k.frob_q(b, 1)));
        prop_assert_eq!(k.frob_q(k.add(a, b), 1), k.add(k.frob_q(a, 1), k.frob_q(b, 1)));
    }

    #[test]
    fn text_forms_round_trip(fi in 0usize..12, a in any::<u32>()) {
        let k = &fields()[fi];
        let x = k.from_raw(a % k.size()).unwrap();
        prop_assert_eq!(k.parse_elem(&k.fmt_elem(x)).unwrap(), x);
        prop_assert_eq!(k.parse_elem(&k.fmt_coords(x)).unwrap(), x);
    }
}
