mod common;

use std::cmp::Ordering;

use num_traits::{Signed, Zero};
use polyval::harness::oracle::{brute_force_facets, in_hull_of};
use polyval::harness::{random_polytope, RandomPolytopeOpts};
use polyval::linear::{int, rat};
use polyval::valuations::facet_vector;
use polyval::{Polytope, Rat, Vector, Zeta};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_points(n: usize, count: usize, seed: u64) -> Vec<Vector> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| Vector::new((0..n).map(|_| int(rng.gen_range(-4..=4))).collect()))
        .collect()
}

fn polytopes(n: usize, count: u64) -> Vec<Polytope> {
    (0..count)
        .map(|seed| {
            let opts = RandomPolytopeOpts { contains_origin: seed % 3 == 0, max_coord: 3, max_pts: n + 5 };
            random_polytope(n, 1000 + seed, opts).unwrap()
        })
        .collect()
}

#[test]
fn extreme_points_match_caratheodory_test() {
    for n in 2..=3 {
        for seed in 0..30 {
            let mut pts = random_points(n, n + 6, seed);
            pts.sort();
            pts.dedup();
            let expected: Vec<Vector> = pts
                .iter()
                .enumerate()
                .filter(|(i, p)| {
                    let others: Vec<Vector> =
                        pts.iter().enumerate().filter(|(j, _)| j != i).map(|(_, q)| q.clone()).collect();
                    !in_hull_of(p, &others)
                })
                .map(|(_, p)| p.clone())
                .collect();
            let hull = Polytope::hull(&pts).unwrap();
            assert_eq!(hull.vertices(), expected.as_slice(), "n={n} seed={seed}");
        }
    }
}

/// Exact polar-angle comparison around `c`.
fn by_angle(c: &Vector) -> impl Fn(&Vector, &Vector) -> Ordering + '_ {
    move |a, b| {
        let (da, db) = (a - c, b - c);
        let half = |d: &Vector| d[1].is_negative() || (d[1].is_zero() && d[0].is_negative());
        half(&da).cmp(&half(&db)).then_with(|| {
            let cross = &da[0] * &db[1] - &da[1] * &db[0];
            Rat::zero().cmp(&cross)
        })
    }
}

fn shoelace(cycle: &[Vector]) -> Rat {
    let m = cycle.len();
    (0..m)
        .map(|i| {
            let (a, b) = (&cycle[i], &cycle[(i + 1) % m]);
            &a[0] * &b[1] - &a[1] * &b[0]
        })
        .fold(Rat::zero(), |s, x| s + x)
        / int(2)
}

#[test]
fn planar_area_and_moment_match_shoelace() {
    for p in polytopes(2, 40) {
        let n = p.vertices().len();
        let c = p.vertices().iter().fold(Vector::zeros(2), |s, v| &s + v).scale(&rat(1, n as i64));
        let mut cycle = p.vertices().to_vec();
        cycle.sort_by(by_angle(&c));
        let area = shoelace(&cycle);
        assert_eq!(p.volume(), area);
        // moment from the fan about the centroid
        let mut moment = Vector::zeros(2);
        for i in 0..n {
            let (a, b) = (&cycle[i], &cycle[(i + 1) % n]);
            let tri = shoelace(&[c.clone(), a.clone(), b.clone()]);
            moment += &(&(&c + a) + b).scale(&(tri / int(3)));
        }
        assert_eq!(p.moment(), moment);
    }
}

#[test]
fn volumes_match_projection_oracle() {
    for n in 2..=4 {
        for p in polytopes(n, 15) {
            assert_eq!(p.volume(), common::oracle_volume(p.vertices()));
        }
    }
}

#[test]
fn facet_vectors_match_brute_force() {
    for n in 2..=3 {
        for (k, p) in polytopes(n, 20).into_iter().enumerate() {
            let z = Zeta::new(rat(k as i64 % 5 - 2, 3));
            let mut expected = Vector::zeros(n);
            for (normal, support, ids) in brute_force_facets(p.vertices()) {
                if support.is_zero() {
                    continue;
                }
                let mut cone: Vec<Vector> = ids.iter().map(|&i| p.vertices()[i].clone()).collect();
                cone.push(Vector::zeros(n));
                let weight = z.eval(&common::oracle_volume(&cone)).unwrap() / support.abs();
                expected += &normal.scale(&weight);
            }
            assert_eq!(facet_vector(&p, &z), expected);
        }
    }
}

#[test]
fn vector_areas_match_pyramid_heights() {
    for n in 2..=4 {
        for p in polytopes(n, 10) {
            let m = p.vertices().len() as i64;
            let apex = p.vertices().iter().fold(Vector::zeros(n), |s, v| &s + v).scale(&rat(1, m));
            for f in p.facets().unwrap() {
                let mut pyramid: Vec<Vector> = f.vertex_ids.iter().map(|&i| p.vertices()[i].clone()).collect();
                pyramid.push(apex.clone());
                // vol = <vector_area, x - apex> / n for any x on the facet
                let height = &f.support - f.normal.dot(&apex);
                let scale = common::oracle_volume(&pyramid) * Rat::from_integer(n.into()) / height;
                assert_eq!(p.vector_area(f), f.normal.scale(&scale));
            }
        }
    }
}
