use partscat::gf::FieldCtx;
use partscat::linpoly::LinPoly;
use partscat::scatter::*;
use partscat::suites::{random_poly, rng_for, SuiteConfig};

fn f16_binomials(k: &FieldCtx) -> Vec<LinPoly> {
    let els: Vec<_> = k.elements().collect();
    let mut out = Vec::new();
    for &a in &els {
        for &b in &els {
            out.push(LinPoly::from_terms(k, &[(1, a), (3, b)]).unwrap());
        }
    }
    out
}

#[test]
fn fast_oracle_matches_pair_loop_on_f16() {
    let k = FieldCtx::tower_field(2, 2, 2).unwrap();
    for f in f16_binomials(&k).iter().step_by(7) {
        for prop in [Property::Scattered, Property::LPartial, Property::RPartial] {
            for ell in 0..4 {
                let fast = oracle_report(f, prop, 2, ell).unwrap();
                let slow = naive_oracle(f, prop, 2, ell).unwrap();
                assert_eq!(fast.holds, slow.holds, "{} {prop} ell={ell}", f.to_text());
                assert!(witness_replays(f, &fast).unwrap());
            }
        }
    }
}

#[test]
fn criterion_matches_oracle_on_f81_binomials() {
    let k = FieldCtx::tower_field(3, 2, 2).unwrap();
    let els: Vec<_> = k.elements().collect();
    for &a in els.iter().step_by(5) {
        for &b in els.iter().step_by(3) {
            let f = LinPoly::from_terms(&k, &[(1, a), (3, b)]).unwrap();
            for prop in [Property::Scattered, Property::LPartial, Property::RPartial] {
                let c = criterion_report(&f, prop, 2).unwrap();
                assert_eq!(c.holds, oracle_report(&f, prop, 2, 0).unwrap().holds, "{} {prop}", f.to_text());
                if let Some((y, z)) = c.witness {
                    assert!(violates(&f, prop, 2, 0, y, z).unwrap());
                }
            }
        }
    }
}

#[test]
fn scattered_is_l_and_r() {
    let k = FieldCtx::tower_field(2, 2, 3).unwrap();
    let mut rng = rng_for(&SuiteConfig::default(), 7);
    for _ in 0..150 {
        let f = random_poly(&k, &mut rng);
        for t in [1, 2, 3, 6] {
            for ell in [0, 1] {
                let s = is_scattered_oracle(&f, ell).unwrap().holds;
                let l = is_l_partial_oracle(&f, t, ell).unwrap().holds;
                let r = is_r_partial_oracle(&f, t, ell).unwrap().holds;
                assert_eq!(s, l && r, "{} t={t} ell={ell}", f.to_text());
            }
        }
    }
}

#[test]
fn monotonicity_in_t() {
    let k = FieldCtx::tower_field(2, 1, 6).unwrap();
    let els: Vec<_> = k.elements().collect();
    for &a in els.iter().step_by(3) {
        for (i, j) in [(1u32, 2u32), (1, 4), (2, 5)] {
            let f = LinPoly::from_terms(&k, &[(i, a), (j, k.one())]).unwrap();
            let l: Vec<bool> = [1, 2, 3, 6].iter().map(|&t| is_l_partial_oracle(&f, t, 0).unwrap().holds).collect();
            let r: Vec<bool> = [1, 2, 3, 6].iter().map(|&t| is_r_partial_oracle(&f, t, 0).unwrap().holds).collect();
            // indices: t = 1, 2, 3, 6
            for (small, big) in [(0, 1), (0, 2), (0, 3), (1, 3), (2, 3)] {
                assert!(!l[small] || l[big]);
                assert!(!r[big] || r[small]);
            }
        }
    }
}

#[test]
fn curve_agrees_with_oracle() {
    let k = FieldCtx::tower_field(2, 2, 2).unwrap();
    for f in f16_binomials(&k).iter().step_by(11) {
        for ell in 0..2 {
            assert_eq!(
                l_partial_via_curve(f, 2, ell).unwrap().holds,
                is_l_partial_oracle(f, 2, ell).unwrap().holds
            );
        }
    }
}

#[test]
fn inequality_is_consistent_with_exhaustive_search() {
    assert!(check_l_inequality(2, 4, 3, 2, 0, 1, LShape::General).unwrap());
    assert!(!check_l_inequality(2, 4, 2, 2, 0, 1, LShape::General).unwrap());
    assert!(!check_l_inequality(2, 40, 2, 2, 0, 1, LShape::General).unwrap());
    assert!(check_l_degree_bound(4, 3, 2, 0));
    assert!(!check_l_degree_bound(20, 2, 2, 1));
}
