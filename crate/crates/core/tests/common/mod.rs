//! Test-side references that share no code path with the library's hull,
//! triangulation or facet data.

#![allow(dead_code)]

use num_traits::{Signed, Zero};
use polyval::harness::oracle::brute_force_facets;
use polyval::{Rat, Vector};

/// Volume of the hull of `points` (full-dimensional in their ambient space)
/// as a sum of pyramids from the last point over brute-force facets. Each
/// facet's area is obtained from its projection along a coordinate where the
/// facet normal is nonzero, recursively.
pub fn oracle_volume(points: &[Vector]) -> Rat {
    let n = points[0].dim();
    if n == 1 {
        let xs: Vec<&Rat> = points.iter().map(|p| &p[0]).collect();
        let hi = xs.iter().max().unwrap();
        let lo = xs.iter().min().unwrap();
        return (*hi).clone() - (*lo).clone();
    }
    let apex = points.last().unwrap();
    let mut total = Rat::zero();
    for (normal, support, ids) in brute_force_facets(points) {
        let height = &support - normal.dot(apex);
        if height.is_zero() {
            continue;
        }
        let k = (0..n).find(|&k| !normal[k].is_zero()).unwrap();
        let projected: Vec<Vector> = ids
            .iter()
            .map(|&i| {
                let c: Vec<Rat> = (0..n).filter(|&j| j != k).map(|j| points[i][j].clone()).collect();
                Vector::new(c)
            })
            .collect();
        let area = oracle_volume(&projected);
        total += height * area / normal[k].abs();
    }
    total / Rat::from_integer(n.into())
}

pub fn factorial(n: usize) -> Rat {
    Rat::from_integer((1..=n as i64).product::<i64>().into())
}
