//! Named constructors for standard complexes. All weights are 1 unless stated.

use crate::complex::{BoundaryColumn, Cell, CellKind, WeightedCellComplex};
use crate::error::{Error, Result};
use crate::rational::Rational;
use num_traits::One;

/// A single vertex.
pub fn point() -> WeightedCellComplex {
    WeightedCellComplex::from_facets(&[vec![0]]).expect("point is valid")
}

/// The boundary of the standard `(n+1)`-simplex.
pub fn sphere(n: usize) -> WeightedCellComplex {
    let verts: Vec<usize> = (0..n + 2).collect();
    let facets: Vec<Vec<usize>> = (0..n + 2)
        .map(|skip| verts.iter().copied().filter(|&v| v != skip).collect())
        .collect();
    WeightedCellComplex::from_facets(&facets).expect("simplex boundary is valid")
}

/// Simplicial circle with `k >= 3` edges `[i, i+1 mod k]`.
pub fn circle(k: usize) -> WeightedCellComplex {
    assert!(k >= 3, "a simplicial circle needs at least 3 edges");
    let facets: Vec<Vec<usize>> = (0..k).map(|i| vec![i, (i + 1) % k]).collect();
    WeightedCellComplex::from_facets(&facets).expect("circle is valid")
}

/// Simplicial circle with the given edge weights, edges listed as `[i, i+1 mod k]`.
pub fn circle_with_lengths(lengths: &[Rational]) -> Result<WeightedCellComplex> {
    let k = lengths.len();
    if k < 3 {
        return Err(Error::Malformed("a simplicial circle needs at least 3 edges".into()));
    }
    let c = circle(k);
    let mut w = vec![Rational::one(); k];
    for (i, len) in lengths.iter().enumerate() {
        let mut e = vec![i, (i + 1) % k];
        e.sort_unstable();
        let idx = c.simplex_index(&e).expect("edge exists");
        w[idx] = len.clone();
    }
    c.with_weights(1, w)
}

/// Cubical circle: `k >= 1` vertices and edges `e_i` with `d e_i = v_{i+1} - v_i`.
pub fn cubical_circle(k: usize, edge_weight: Rational) -> WeightedCellComplex {
    assert!(k >= 1);
    let cells = vec![
        (0..k).map(|i| Cell::new(format!("v{i}"), Rational::one())).collect(),
        (0..k).map(|i| Cell::new(format!("e{i}"), edge_weight.clone())).collect(),
    ];
    let cols: Vec<BoundaryColumn> = (0..k)
        .map(|i| if k == 1 { vec![] } else { vec![(i, -1), ((i + 1) % k, 1)] })
        .collect();
    WeightedCellComplex::new(CellKind::Cubical, cells, vec![vec![], cols]).expect("valid circle")
}

/// A 1-dimensional complex with arbitrary (multi-)edges `(tail, head)` and weights.
pub fn graph(
    num_vertices: usize,
    edges: &[(usize, usize)],
    weights: &[Rational],
) -> Result<WeightedCellComplex> {
    if edges.len() != weights.len() {
        return Err(Error::Malformed("one weight per edge".into()));
    }
    let cells = vec![
        (0..num_vertices).map(|i| Cell::new(format!("v{i}"), Rational::one())).collect(),
        weights.iter().enumerate().map(|(i, w)| Cell::new(format!("e{i}"), w.clone())).collect(),
    ];
    let cols = edges
        .iter()
        .map(|&(a, b)| if a == b { vec![] } else { vec![(a, -1), (b, 1)] })
        .collect();
    WeightedCellComplex::new(CellKind::General, cells, vec![vec![], cols])
}

/// Boundary of the `(n+1)`-cube as a cubical complex.
///
/// Cells are words over `{0, 1, *}` of length `n+1` other than all-`*`; a cell with free
/// coordinates `i_1 < ... < i_k` has boundary `sum_j (-1)^(j-1) ([i_j = 1] - [i_j = 0])`.
pub fn cubical_sphere(n: usize) -> WeightedCellComplex {
    let len = n + 1;
    #[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
    enum C {
        Zero,
        One,
        Free,
    }
    let mut words: Vec<Vec<C>> = vec![vec![]];
    for _ in 0..len {
        words = words
            .into_iter()
            .flat_map(|w| {
                [C::Zero, C::One, C::Free].into_iter().map(move |c| {
                    let mut w = w.clone();
                    w.push(c);
                    w
                })
            })
            .collect();
    }
    let degree = |w: &[C]| w.iter().filter(|&&c| c == C::Free).count();
    let mut levels: Vec<Vec<Vec<C>>> = vec![Vec::new(); len];
    for w in words {
        let d = degree(&w);
        if d < len {
            levels[d].push(w);
        }
    }
    let name = |w: &[C]| -> String {
        w.iter().map(|c| match c { C::Zero => '0', C::One => '1', C::Free => '*' }).collect()
    };
    let cells: Vec<Vec<Cell>> = levels
        .iter()
        .map(|lv| lv.iter().map(|w| Cell::new(name(w), Rational::one())).collect())
        .collect();
    let mut boundary: Vec<Vec<BoundaryColumn>> = vec![Vec::new()];
    for d in 1..len {
        let pos = |w: &Vec<C>| levels[d - 1].iter().position(|x| x == w).expect("face exists");
        let cols = levels[d]
            .iter()
            .map(|w| {
                let mut col = Vec::new();
                let free: Vec<usize> = (0..len).filter(|&i| w[i] == C::Free).collect();
                for (j, &i) in free.iter().enumerate() {
                    let sign = if j % 2 == 0 { 1 } else { -1 };
                    let mut hi = w.clone();
                    hi[i] = C::One;
                    let mut lo = w.clone();
                    lo[i] = C::Zero;
                    col.push((pos(&hi), sign));
                    col.push((pos(&lo), -sign));
                }
                col
            })
            .collect();
        boundary.push(cols);
    }
    WeightedCellComplex::new(CellKind::Cubical, cells, boundary).expect("cube boundary is valid")
}

/// Flat `k x k` square torus: the product of two cubical `k`-circles.
pub fn flat_torus(k: usize, edge_weight: Rational) -> WeightedCellComplex {
    let c = cubical_circle(k, edge_weight);
    c.product(&c)
}

/// The 9-vertex torus: a 3x3 grid with one diagonal per square.
pub fn torus9() -> WeightedCellComplex {
    let v = |i: usize, j: usize| 3 * (i % 3) + (j % 3);
    let mut facets = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            facets.push(vec![v(i, j), v(i + 1, j), v(i + 1, j + 1)]);
            facets.push(vec![v(i, j), v(i, j + 1), v(i + 1, j + 1)]);
        }
    }
    WeightedCellComplex::from_facets(&facets).expect("torus is valid")
}

/// Minimal 6-vertex triangulation of the real projective plane.
pub fn rp2() -> WeightedCellComplex {
    let facets = [
        [1, 2, 4], [1, 2, 6], [1, 3, 5], [1, 3, 6], [1, 4, 5],
        [2, 3, 4], [2, 3, 5], [2, 5, 6], [3, 4, 6], [4, 5, 6],
    ];
    let facets: Vec<Vec<usize>> = facets.iter().map(|f| f.iter().map(|v| v - 1).collect()).collect();
    WeightedCellComplex::from_facets(&facets).expect("rp2 is valid")
}

/// Looks up a library complex by a short name such as `circle:5`, `sphere:2`,
/// `cubical-sphere:2`, `torus:4`, `torus9`, `rp2`, `point`, or a product `a*b`.
pub fn by_name(name: &str) -> Result<WeightedCellComplex> {
    if let Some((a, b)) = name.split_once('*') {
        return Ok(by_name(a.trim())?.product(&by_name(b.trim())?));
    }
    let (base, arg) = match name.split_once(':') {
        Some((b, a)) => (b.trim(), Some(a.trim())),
        None => (name.trim(), None),
    };
    let num = |default: usize| -> Result<usize> {
        match arg {
            None => Ok(default),
            Some(a) => a.parse().map_err(|_| Error::Parse(format!("bad size `{a}` in `{name}`"))),
        }
    };
    let one = Rational::one;
    match base {
        "point" => Ok(point()),
        "circle" => {
            let k = num(3)?;
            if k < 3 {
                return Ok(cubical_circle(k, one()));
            }
            Ok(circle(k))
        }
        "cubical-circle" => Ok(cubical_circle(num(4)?.max(1), one())),
        "sphere" => Ok(sphere(num(2)?)),
        "cubical-sphere" => Ok(cubical_sphere(num(2)?)),
        "torus" => Ok(flat_torus(num(4)?.max(1), one())),
        "torus9" => Ok(torus9()),
        "rp2" => Ok(rp2()),
        _ => Err(Error::Parse(format!("unknown library complex `{name}`"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        let s = sphere(2);
        assert_eq!((s.num_cells(0), s.num_cells(1), s.num_cells(2)), (4, 6, 4));
        let c = cubical_sphere(2);
        assert_eq!((c.num_cells(0), c.num_cells(1), c.num_cells(2)), (8, 12, 6));
        let t = torus9();
        assert_eq!((t.num_cells(0), t.num_cells(1), t.num_cells(2)), (9, 27, 18));
        let r = rp2();
        assert_eq!((r.num_cells(0), r.num_cells(1), r.num_cells(2)), (6, 15, 10));
        assert_eq!(r.euler_characteristic(), 1);
    }

    #[test]
    fn names() {
        assert_eq!(by_name("circle:5").unwrap().num_cells(1), 5);
        assert_eq!(by_name("circle:2").unwrap().num_cells(1), 2);
        assert_eq!(by_name("circle:3 * cubical-sphere:2").unwrap().top_dim(), 3);
        assert!(by_name("klein").is_err());
    }

    #[test]
    fn weighted_circle() {
        let k = circle_with_lengths(&[Rational::one(), Rational::one(), Rational::from_integer(5.into())])
            .unwrap();
        // edge [2,0] is stored as [0,2], the second edge in lexicographic order
        assert_eq!(k.cells(1)[1].weight, Rational::from_integer(5.into()));
    }
}
