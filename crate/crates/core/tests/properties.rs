mod common;

use std::collections::BTreeSet;

use num_traits::{One, Signed};
use proptest::prelude::*;

use stsys::category::{catstsys_bounds, enumerate_partitions, DimensionProfile, product_of};
use stsys::complex::{mass, Chain, Scaling};
use stsys::library;
use stsys::matrix::Matrix;
use stsys::rational::{frac, rat, Rational};
use stsys::snf::smith_normal_form;

fn scale() -> impl Strategy<Value = Rational> {
    (1i64..=9, 1i64..=9).prop_map(|(n, d)| frac(n, d))
}

proptest! {
    #[test]
    fn mass_is_a_norm(a in prop::collection::vec(-5i64..=5, 12), b in prop::collection::vec(-5i64..=5, 12), m in -4i64..=4) {
        let k = library::flat_torus(2, frac(2, 3));
        let n = k.num_cells(1);
        let ca = Chain::from_integers(&k, 1, &a[..n]).unwrap();
        let cb = Chain::from_integers(&k, 1, &b[..n]).unwrap();
        let ma = mass(&ca, &k).unwrap();
        prop_assert!(mass(&ca.add(&cb), &k).unwrap() <= &ma + mass(&cb, &k).unwrap());
        prop_assert_eq!(mass(&ca.scale(&rat(m)), &k).unwrap(), rat(m.abs()) * &ma);
        prop_assert_eq!(ma.is_positive(), a[..n].iter().any(|&x| x != 0));
    }

    #[test]
    fn rescale_round_trip(t in scale()) {
        for k in [library::torus9(), library::cubical_sphere(2), library::circle(3).product(&library::circle(4))] {
            let back = k.rescale(&t, Scaling::Uniform).unwrap().rescale(&t.recip(), Scaling::Uniform).unwrap();
            prop_assert_eq!(&back, &k);
        }
        let p = library::circle(3).product(&library::cubical_circle(2, rat(1)));
        let back = p.rescale(&t, Scaling::FactorTagged).unwrap().rescale(&t.recip(), Scaling::FactorTagged).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn smith_form_factorizes(rows in 1usize..5, cols in 1usize..5, seed in prop::collection::vec(-6i64..=6, 16)) {
        let m = Matrix::from_rows(
            (0..rows).map(|i| (0..cols).map(|j| num_bigint::BigInt::from(seed[i * cols + j])).collect()).collect(),
        );
        let s = smith_normal_form(&m);
        prop_assert_eq!(s.u.mul(&s.d).mul(&s.v), m.clone());
        prop_assert_eq!(s.u.mul(&s.u_inv), Matrix::identity(rows));
        prop_assert_eq!(s.v.mul(&s.v_inv), Matrix::identity(cols));
        let f = s.invariant_factors();
        for w in f.windows(2) {
            prop_assert!((&w[1] % &w[0]).sign() == num_bigint::Sign::NoSign);
        }
        for i in 0..rows {
            for j in 0..cols {
                if i != j {
                    prop_assert!(s.d[(i, j)] == num_bigint::BigInt::from(0));
                }
            }
        }
    }

    #[test]
    fn partitions_are_valid_and_complete(n in 1u32..14, mask in 1u32..(1 << 6)) {
        let admissible: BTreeSet<u32> = (1..=6).filter(|d| mask >> (d - 1) & 1 == 1).collect();
        let parts = enumerate_partitions(n, &admissible);
        // independent count by dynamic programming over admissible parts
        let mut ways = vec![0u64; n as usize + 1];
        ways[0] = 1;
        for &d in &admissible {
            for s in d as usize..=n as usize {
                ways[s] += ways[s - d as usize];
            }
        }
        prop_assert_eq!(parts.len() as u64, ways[n as usize]);
        for p in &parts {
            prop_assert_eq!(p.total(), n);
            prop_assert!(p.parts().iter().all(|x| admissible.contains(x)));
            prop_assert!(p.parts().windows(2).all(|w| w[0] <= w[1]));
        }
        prop_assert!(parts.windows(2).all(|w| w[0].size() >= w[1].size()));
    }

    #[test]
    fn sphere_products_are_exact(dims in prop::collection::vec(1u32..8, 1..5)) {
        let spheres: Vec<DimensionProfile> = dims.iter().map(|&d| DimensionProfile::sphere(d)).collect();
        let p = product_of(&spheres).unwrap();
        let v = catstsys_bounds(&p).unwrap();
        prop_assert!(v.exact);
        prop_assert_eq!(v.lower as usize, dims.len());
    }

    #[test]
    fn factor_sum_is_a_lower_bound(dims in prop::collection::vec(1u32..6, 2..4), extra in 0u32..2) {
        // the lower bound for a product of maximal factors is at least the sum of theirs
        let mut factors: Vec<DimensionProfile> = dims.iter().map(|&d| DimensionProfile::sphere(d)).collect();
        if extra == 1 {
            factors.push(stsys::category::parse_product_expr("T2").unwrap());
        }
        let p = product_of(&factors).unwrap();
        let v = catstsys_bounds(&p).unwrap();
        let sum: u32 = factors.iter().map(|f| catstsys_bounds(f).unwrap().lower).sum();
        prop_assert!(v.lower >= sum);
        prop_assert!(v.lower <= v.upper);
    }
}

#[test]
fn rescale_inverse_uses_exact_arithmetic() {
    let k = library::circle_with_lengths(&[frac(1, 3), frac(2, 7), rat(5)]).unwrap();
    let t = frac(7, 3);
    let w = k.rescale(&t, Scaling::Uniform).unwrap().weights(1);
    let mut sorted = w.clone();
    sorted.sort();
    assert_eq!(sorted, vec![frac(2, 3), frac(7, 9), frac(35, 3)]);
    assert!(w.iter().zip(k.weights(1)).all(|(a, b)| *a == &b * &t && !a.is_one()));
}
