use proptest::prelude::*;

use arcstrip::arcset::ArcSet;
use arcstrip::classify::{classify_report, is_cotorsion, left_approx_summands, LeftApprox};
use arcstrip::oracle::{brute_tau_basis, window_arcs, Window};
use arcstrip::presentation::{parse_presentation, serialize_presentation};
use arcstrip::Arc;

fn arc_set() -> impl Strategy<Value = Vec<Arc>> {
    let pool = window_arcs(Window::new(-4, 4).unwrap());
    prop::sample::subsequence(pool, 0..6)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn nc_is_a_galois_closure(arcs in arc_set()) {
        let t = ArcSet::from_arcs(&arcs);
        let nc = t.nc();
        prop_assert!(nc.nc().nc().equals(&nc).unwrap());
        prop_assert!(t.is_subset(&nc.nc()).unwrap());
        prop_assert!(t.tau(3).nc().equals(&nc.tau(3)).unwrap());
        prop_assert!(t.rotate().nc().equals(&nc.rotate()).unwrap());
    }

    #[test]
    fn closure_is_idempotent_and_finite_diagrams_are_compact(arcs in arc_set()) {
        let c = ArcSet::from_arcs(&arcs).ptolemy_closure().unwrap();
        prop_assert!(c.ptolemy_closure().unwrap().equals(&c).unwrap());
        let r = classify_report(&c).unwrap();
        prop_assert!(r.is_ptolemy && r.tau_compact && r.tau_inv_compact);
        prop_assert!(is_cotorsion(&c, &c.nc()).unwrap());
    }

    #[test]
    fn left_approximations_of_finite_sets(arcs in arc_set(), pick in 0usize..200) {
        let y = ArcSet::from_arcs(&arcs);
        let all = window_arcs(Window::new(-4, 4).unwrap());
        let u = all[pick % all.len()];
        let omega = y.crossers(&u.tau(1)).unwrap().arcs().unwrap();
        match left_approx_summands(&y, &u).unwrap() {
            LeftApprox::Summands(s) => prop_assert!(brute_tau_basis(&s, &omega).unwrap()),
            LeftApprox::NoApproximation => prop_assert!(false, "finite sets always approximate"),
        }
    }

    #[test]
    fn presentations_round_trip(arcs in arc_set(), p in -3i64..3) {
        let mut t = parse_presentation(&format!("L>={p}\nfan C from=R({p}) a<=0")).unwrap();
        for a in &arcs {
            t.insert(a);
        }
        let back = parse_presentation(&serialize_presentation(&t)).unwrap();
        prop_assert!(back.equals(&t).unwrap());
    }
}
