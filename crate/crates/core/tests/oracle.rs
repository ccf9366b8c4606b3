mod common;

use proptest::prelude::*;

use stsys::library;
use stsys::rational::{frac, Rational};
use stsys::stable_norm::{stable_systole, SearchStatus};

#[test]
fn lp_matches_brute_force_on_fixtures() {
    let fixtures = common::small_fixtures();
    assert!(fixtures.len() >= 10);
    for f in fixtures {
        let lp = stable_systole(&f.complex, f.q, 5).unwrap();
        let oracle = common::brute_force_systole(&f.complex, f.q, 3);
        assert_eq!(lp.value(), oracle.as_ref(), "{}", f.name);
        assert_ne!(lp.status(), Some(SearchStatus::BoundedSearch(5)), "{}", f.name);
    }
}

#[test]
fn independent_rank_agrees_with_homology() {
    for f in common::small_fixtures() {
        let h = stsys::homology(&f.complex);
        for g in h.generators(f.q) {
            let ints: Vec<i64> = g.coeffs.iter().map(|c| c.to_integer().try_into().unwrap()).collect();
            assert!(!common::is_boundary(&f.complex, f.q, &ints), "{}", f.name);
            assert!(!common::BoundarySpace::new(&f.complex, f.q).contains(&ints), "{}", f.name);
        }
    }
}

fn weight() -> impl Strategy<Value = Rational> {
    (1i64..=6, 1i64..=3).prop_map(|(n, d)| frac(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn weighted_circles(ws in prop::collection::vec(weight(), 3..7)) {
        let k = library::circle_with_lengths(&ws).unwrap();
        let total: Rational = ws.iter().sum();
        prop_assert_eq!(stable_systole(&k, 1, 5).unwrap().value().cloned(), Some(total));
    }

    #[test]
    fn weighted_theta_graphs(ws in prop::collection::vec(weight(), 3)) {
        let k = library::graph(2, &[(0, 1), (0, 1), (0, 1)], &ws).unwrap();
        let lp = stable_systole(&k, 1, 5).unwrap();
        prop_assert_eq!(lp.value().cloned(), common::brute_force_systole(&k, 1, 3));
    }

    #[test]
    fn weighted_tori(a in prop::collection::vec(weight(), 3), b in prop::collection::vec(weight(), 2)) {
        let x = library::circle_with_lengths(&a).unwrap();
        let y = library::graph(2, &[(0, 1), (1, 0)], &b).unwrap();
        let k = x.product(&y);
        for q in 1..=2 {
            let lp = stable_systole(&k, q, 5).unwrap();
            prop_assert_eq!(lp.value().cloned(), common::brute_force_systole(&k, q, 3), "q = {}", q);
        }
    }
}
