//! Integral and rational homology through Smith normal form.
//!
//! For each degree `q` the cycle group is read off the SNF of `d_q`, the boundaries are
//! re-expressed in that cycle basis, and a second SNF splits off torsion. The free part
//! comes with explicit integral generator chains and a projection that sends any rational
//! cycle to its coordinates in those generators.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::complex::{Chain, WeightedCellComplex};
use crate::error::{Error, Result};
use crate::matrix::{IntMatrix, RatMatrix};
use crate::rational::Rational;
use crate::snf::smith_normal_form;

#[derive(Clone, Debug)]
pub struct DegreeHomology {
    pub betti: usize,
    /// Invariant factors greater than one.
    pub torsion: Vec<BigInt>,
    /// Integral cycles whose classes form a basis of `H_q(K; Z)` modulo torsion.
    pub generators: Vec<Chain>,
    // betti x n_q rational map from chains to class coordinates
    projection: RatMatrix,
}

impl DegreeHomology {
    /// Coordinates of `lattice_basis` elements: the standard basis of `Q^betti`.
    pub fn lattice_basis(&self) -> Vec<Vec<Rational>> {
        (0..self.betti)
            .map(|i| (0..self.betti).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect())
            .collect()
    }
}

#[derive(Clone, Debug)]
pub struct HomologySummary {
    degrees: Vec<DegreeHomology>,
}

/// A degree-`q` class given by rational coordinates in the generator basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyClass {
    pub degree: usize,
    pub coords: Vec<Rational>,
    pub representative: Option<Chain>,
}

impl HomologyClass {
    pub fn new(degree: usize, coords: Vec<Rational>) -> Self {
        Self { degree, coords, representative: None }
    }

    pub fn from_integers(degree: usize, coords: &[i64]) -> Self {
        Self::new(degree, coords.iter().map(|&x| Rational::from_integer(x.into())).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }
}

impl HomologySummary {
    pub fn top_dim(&self) -> usize {
        self.degrees.len() - 1
    }

    pub fn degree(&self, q: usize) -> Result<&DegreeHomology> {
        self.degrees.get(q).ok_or(Error::DegreeOutOfRange { degree: q, top: self.top_dim() })
    }

    /// Betti number, zero above the top dimension.
    pub fn betti(&self, q: usize) -> usize {
        self.degrees.get(q).map_or(0, |d| d.betti)
    }

    pub fn betti_numbers(&self) -> Vec<usize> {
        self.degrees.iter().map(|d| d.betti).collect()
    }

    pub fn torsion(&self, q: usize) -> &[BigInt] {
        self.degrees.get(q).map_or(&[], |d| d.torsion.as_slice())
    }

    pub fn generators(&self, q: usize) -> &[Chain] {
        self.degrees.get(q).map_or(&[], |d| d.generators.as_slice())
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.degrees
            .iter()
            .enumerate()
            .map(|(q, d)| if q % 2 == 0 { d.betti as i64 } else { -(d.betti as i64) })
            .sum()
    }

    /// Rational coordinates of the class of cycle `z`; zero iff `z` bounds over Q.
    pub fn class_coordinates(&self, k: &WeightedCellComplex, z: &Chain) -> Result<Vec<Rational>> {
        if !z.is_cycle(k)? {
            return Err(Error::NotACycle(z.degree));
        }
        Ok(self.degree(z.degree)?.projection.mul_vec(&z.coeffs))
    }

    /// A representative cycle for rational coordinates `coords`.
    pub fn representative(&self, k: &WeightedCellComplex, class: &HomologyClass) -> Result<Chain> {
        let d = self.degree(class.degree)?;
        if class.coords.len() != d.betti {
            return Err(Error::CoordinateLength { got: class.coords.len(), expected: d.betti });
        }
        let mut z = Chain::zero(k, class.degree);
        for (g, c) in d.generators.iter().zip(&class.coords) {
            if !c.is_zero() {
                z = z.add(&g.scale(c));
            }
        }
        Ok(z)
    }

    /// The class of an explicit cycle, with the cycle kept as representative.
    pub fn class_of(&self, k: &WeightedCellComplex, z: &Chain) -> Result<HomologyClass> {
        let coords = self.class_coordinates(k, z)?;
        Ok(HomologyClass { degree: z.degree, coords, representative: Some(z.clone()) })
    }
}

/// Computes homology in every degree `0..=top_dim`.
pub fn homology(k: &WeightedCellComplex) -> HomologySummary {
    let degrees = (0..=k.top_dim()).map(|q| degree_homology(k, q)).collect();
    HomologySummary { degrees }
}

fn degree_homology(k: &WeightedCellComplex, q: usize) -> DegreeHomology {
    let n_q = k.num_cells(q);
    let d_q = k.boundary_matrix(q).expect("degree in range");
    let d_next = k.boundary_matrix(q + 1).expect("degree in range");

    // d_q = U D V: columns rank.. of V^-1 span ker d_q, and rows rank.. of V give coordinates.
    let s = smith_normal_form(&d_q);
    let rank = s.rank();
    let cycle_dim = n_q - rank;
    let kernel_coords = s.v.rows_from(rank); // cycle_dim x n_q
    let kernel_basis = s.v_inv.cols_from(rank); // n_q x cycle_dim

    // Boundaries in the cycle basis, then split off torsion.
    let b = kernel_coords.mul(&d_next); // cycle_dim x n_{q+1}
    let sb = smith_normal_form(&b);
    let brank = sb.rank();
    let torsion: Vec<BigInt> =
        sb.invariant_factors().into_iter().filter(|x| !x.is_one()).collect();
    let betti = cycle_dim - brank;

    let free_part = sb.u.cols_from(brank); // cycle_dim x betti
    let gen_matrix = kernel_basis.mul(&free_part); // n_q x betti
    let generators = (0..betti)
        .map(|j| Chain {
            degree: q,
            coeffs: gen_matrix.column(j).into_iter().map(Rational::from_integer).collect(),
        })
        .collect();
    let projection: IntMatrix = sb.u_inv.rows_from(brank).mul(&kernel_coords);
    DegreeHomology { betti, torsion, generators, projection: projection.to_rational() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::library;
    use crate::rational::rat;

    #[test]
    fn circle() {
        let k = library::circle(3);
        let h = homology(&k);
        assert_eq!(h.betti_numbers(), vec![1, 1]);
        assert!(h.torsion(1).is_empty());
    }

    #[test]
    fn rp2_torsion() {
        let k = library::rp2();
        let h = homology(&k);
        assert_eq!(h.betti_numbers(), vec![1, 0, 0]);
        assert_eq!(h.torsion(1), &[BigInt::from(2)]);
        assert!(h.torsion(0).is_empty() && h.torsion(2).is_empty());
    }

    #[test]
    fn rp2_second_boundary_has_invariant_factor_two() {
        let s = smith_normal_form(&library::rp2().boundary_matrix(2).unwrap());
        assert_eq!(s.invariant_factors().last(), Some(&BigInt::from(2)));
    }

    #[test]
    fn spheres_and_tori() {
        assert_eq!(homology(&library::sphere(2)).betti_numbers(), vec![1, 0, 1]);
        assert_eq!(homology(&library::sphere(3)).betti_numbers(), vec![1, 0, 0, 1]);
        assert_eq!(homology(&library::cubical_sphere(2)).betti_numbers(), vec![1, 0, 1]);
        assert_eq!(homology(&library::torus9()).betti_numbers(), vec![1, 2, 1]);
        assert_eq!(homology(&library::flat_torus(4, rat(1))).betti_numbers(), vec![1, 2, 1]);
        assert_eq!(homology(&library::point()).betti_numbers(), vec![1]);
    }

    #[test]
    fn s1_times_s2() {
        let k = library::circle(3).product(&library::cubical_sphere(2));
        let h = homology(&k);
        assert_eq!(h.betti_numbers(), vec![1, 1, 1, 1]);
        assert_eq!(h.euler_characteristic(), k.euler_characteristic());
    }

    #[test]
    fn generators_have_unit_coordinates() {
        for k in [library::torus9(), library::flat_torus(3, rat(1)), library::circle(4)] {
            let h = homology(&k);
            for q in 0..=k.top_dim() {
                for (i, g) in h.generators(q).iter().enumerate() {
                    assert!(g.is_integral());
                    let c = h.class_coordinates(&k, g).unwrap();
                    for (j, x) in c.iter().enumerate() {
                        assert_eq!(*x, if i == j { rat(1) } else { rat(0) });
                    }
                }
            }
        }
    }

    #[test]
    fn boundaries_have_zero_coordinates() {
        let k = library::torus9();
        let h = homology(&k);
        let y = Chain::from_integers(&k, 2, &(0..18).map(|i| i % 3 - 1).collect::<Vec<_>>()).unwrap();
        let z = y.boundary(&k).unwrap();
        assert!(h.class_coordinates(&k, &z).unwrap().iter().all(Zero::is_zero));
    }

    #[test]
    fn non_cycle_is_rejected() {
        let k = library::circle(3);
        let h = homology(&k);
        let c = Chain::from_integers(&k, 1, &[1, 0, 0]).unwrap();
        assert!(matches!(h.class_coordinates(&k, &c), Err(Error::NotACycle(1))));
    }
}
