use partscat::families::*;
use partscat::gf::FieldCtx;
use partscat::scatter::{exceptionality_probe, is_r_partial_criterion, oracle_report, Property, DEFAULT_PROBE_BUDGET};

#[test]
fn adjoint_keeps_form11_and_r_partiality() {
    for (t, tp) in [(2u32, 2u32), (3, 2)] {
        let k = FieldCtx::tower_field(2, t, tp).unwrap();
        let size = k.size() as u64;
        let mut checked = 0;
        for idx in (0..size * size).step_by(5) {
            let a = [k.from_raw((idx % size) as u32).unwrap(), k.from_raw((idx / size) as u32).unwrap()];
            if a.iter().all(|x| x.is_zero()) || !family11_is_r_partial(&k, &a, 1, t).unwrap() {
                continue;
            }
            let f = family11(&k, &a, 1, t).unwrap();
            let g = f.adjoint();
            let (_, s2) = as_family11(&g, t).expect("adjoint keeps the form");
            assert_eq!(s2, t - 1);
            assert!(is_r_partial_criterion(&g, t).unwrap().holds);
            checked += 1;
        }
        assert!(checked > 10);
    }
}

#[test]
fn exceptional_binomial_probe() {
    let k = FieldCtx::tower_field(2, 2, 2).unwrap();
    for alpha in k.nonzero().filter(|&a| binomial_is_r_partial(&k, a, 1, 1, 2).unwrap().0) {
        let f = binomial(&k, alpha, 1, 1, 2).unwrap();
        let v = exceptionality_probe(&f, 2, Property::RPartial, &[1, 2, 4], DEFAULT_PROBE_BUDGET).unwrap();
        assert!(v.iter().all(|p| p.holds), "alpha={}", k.fmt_elem(alpha));
        let v = exceptionality_probe(&f, 2, Property::RPartial, &[3], DEFAULT_PROBE_BUDGET).unwrap();
        assert!(!v[0].holds);
    }
}

#[test]
fn composed_construction_is_r_partial() {
    let k = FieldCtx::tower_field(2, 2, 2).unwrap();
    let phi = partscat::linpoly::LinPoly::monomial(&k, 1, k.one()).unwrap();
    for a0 in k.elements().step_by(3) {
        let a = [a0, k.one()];
        let (f, inv) = compose_construct(&k, &a, &phi, 2, true).unwrap();
        assert_eq!(inv, oracle_report(&f, Property::RPartial, 2, 0).unwrap().holds || !inv);
        if inv {
            assert!(oracle_report(&f, Property::RPartial, 2, 0).unwrap().holds);
        }
    }
}

#[test]
fn family_specs_round_trip() {
    let k = FieldCtx::tower_field(2, 2, 2).unwrap();
    for s in ["monomial(u=1,c=g^0)", "lp(delta=g^3,s=1)", "binomial(k=1,s=1,t=2,alpha=g^3)", "form11(a=g^1|g^0,s=1,t=2)"] {
        let spec: FamilySpec = s.parse().unwrap();
        let again: FamilySpec = spec.to_string().parse().unwrap();
        assert_eq!(spec, again);
        spec.build(&k).unwrap();
    }
}
