use partscat::gf::{FElem, FieldCtx};
use partscat::linpoly::LinPoly;
use proptest::prelude::*;

fn ctx() -> FieldCtx {
    FieldCtx::tower_field(2, 2, 3).unwrap()
}

fn poly_strategy() -> impl Strategy<Value = Vec<u32>> {
    proptest::collection::vec(0u32..64, 6)
}

fn build(k: &FieldCtx, raw: &[u32]) -> LinPoly {
    LinPoly::new(k, raw.iter().map(|&r| k.from_raw(r).unwrap()).collect()).unwrap()
}

fn trace(k: &FieldCtx, x: FElem) -> FElem {
    k.rel_trace(x, k.n(), 1).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn evaluation_is_additive(raw in poly_strategy(), x in 0u32..64, y in 0u32..64) {
        let k = ctx();
        let f = build(&k, &raw);
        let (x, y) = (k.from_raw(x).unwrap(), k.from_raw(y).unwrap());
        prop_assert_eq!(f.eval(k.add(x, y)).unwrap(), k.add(f.eval(x).unwrap(), f.eval(y).unwrap()));
    }

    #[test]
    fn composition_matches_evaluation_and_dickson(a in poly_strategy(), b in poly_strategy()) {
        let k = ctx();
        let (f, g) = (build(&k, &a), build(&k, &b));
        let fg = f.compose(&g).unwrap();
        for x in k.elements() {
            prop_assert_eq!(fg.eval(x).unwrap(), f.eval(g.eval(x).unwrap()).unwrap());
        }
        let (df, dg, dfg) = (f.dickson_matrix(1).unwrap(), g.dickson_matrix(1).unwrap(), fg.dickson_matrix(1).unwrap());
        for i in 0..6 {
            for j in 0..6 {
                let v = (0..6).fold(k.zero(), |acc, l| k.add(acc, k.mul(df[i][l], dg[l][j])));
                prop_assert_eq!(v, dfg[i][j]);
            }
        }
    }

    #[test]
    fn adjoint_is_an_involution_and_trace_dual(raw in poly_strategy(), y in 0u32..64, z in 0u32..64) {
        let k = ctx();
        let f = build(&k, &raw);
        let g = f.adjoint();
        prop_assert_eq!(g.adjoint(), f.clone());
        let (y, z) = (k.from_raw(y).unwrap(), k.from_raw(z).unwrap());
        prop_assert_eq!(trace(&k, k.mul(y, f.eval(z).unwrap())), trace(&k, k.mul(z, g.eval(y).unwrap())));
    }

    #[test]
    fn invertibility_matches_kernel(raw in poly_strategy()) {
        let k = ctx();
        let f = build(&k, &raw);
        prop_assert_eq!(f.is_invertible(), f.kernel_dim() == 0);
        prop_assert_eq!(f.kernel_dim(), f.kernel_dim_by_rank());
        if f.is_invertible() {
            let inv = f.inverse().unwrap();
            for x in k.elements() {
                prop_assert_eq!(inv.eval(f.eval(x).unwrap()).unwrap(), x);
            }
        }
    }

    #[test]
    fn text_round_trip(raw in poly_strategy()) {
        let k = ctx();
        let f = build(&k, &raw);
        prop_assert_eq!(LinPoly::parse(&k, &f.to_text()).unwrap(), f);
    }

    #[test]
    fn normalization_is_monic_and_clears_index(raw in poly_strategy(), ell in 0u32..6) {
        let k = ctx();
        let f = build(&k, &raw);
        if let Ok((g, new_ell)) = f.normalize(ell) {
            prop_assert!(new_ell < 6);
            if !g.is_zero() {
                prop_assert_eq!(g.coeff(g.q_degree().unwrap()), k.one());
            }
        }
    }
}
