//! Integer beneath-beyond convex hull kernel.
//!
//! Works on distinct integer points spanning `Z^k`. Callers project
//! lower-dimensional input into a coordinate frame and clear denominators
//! before calling in.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

pub(crate) type IntPoint = Vec<BigInt>;

#[derive(Clone, Debug)]
pub(crate) struct IntFacet {
    /// Primitive outer normal.
    pub normal: Vec<BigInt>,
    /// `max <x, normal>` over the point set.
    pub offset: BigInt,
    /// Sorted indices of the extreme points lying on this facet.
    pub vertices: Vec<usize>,
}

#[derive(Clone, Debug)]
pub(crate) struct IntHull {
    pub facets: Vec<IntFacet>,
    /// Sorted indices of the extreme points.
    pub extreme: Vec<usize>,
}

pub(crate) fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).fold(BigInt::zero(), |acc, (x, y)| acc + x * y)
}

fn diff(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Divides out the content of `v` (leaves the zero vector alone).
pub(crate) fn primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in &mut v {
            *x /= &g;
        }
    }
    v
}

/// Fraction-free (Bareiss) determinant.
pub(crate) fn det_int(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = t / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Rank of a list of integer vectors.
pub(crate) fn rank_int(vs: &[Vec<BigInt>]) -> usize {
    let Some(first) = vs.first() else {
        return 0;
    };
    let n = first.len();
    let mut a: Vec<Vec<BigInt>> = vs.to_vec();
    let mut row = 0;
    for col in 0..n {
        if row == a.len() {
            break;
        }
        let Some(p) = (row..a.len()).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(row, p);
        for r in row + 1..a.len() {
            if a[r][col].is_zero() {
                continue;
            }
            let (pv, f) = (a[row][col].clone(), a[r][col].clone());
            let reduced: Vec<BigInt> =
                (0..n).map(|j| &a[r][j] * &pv - &a[row][j] * &f).collect();
            a[r] = primitive(reduced);
        }
        row += 1;
    }
    row
}

/// Affine rank of the indexed points; `-1` for the empty set.
fn affine_rank(points: &[IntPoint], ids: &[usize]) -> isize {
    let Some((&first, rest)) = ids.split_first() else {
        return -1;
    };
    let diffs: Vec<Vec<BigInt>> = rest.iter().map(|&i| diff(&points[i], &points[first])).collect();
    rank_int(&diffs) as isize
}

/// Normal vector `N` of the hyperplane through `k` points in `Z^k`, with
/// `<N, x> = det[x - p_0, p_1 - p_0, ...]`. Zero when the points are dependent.
fn normal_through(points: &[IntPoint], ids: &[usize]) -> Vec<BigInt> {
    let k = points[ids[0]].len();
    let base = &points[ids[0]];
    let dirs: Vec<Vec<BigInt>> = ids[1..].iter().map(|&i| diff(&points[i], base)).collect();
    let n: Vec<BigInt> = (0..k)
        .map(|c| {
            let minor: Vec<Vec<BigInt>> = (0..k)
                .filter(|&r| r != c)
                .map(|r| dirs.iter().map(|d| d[r].clone()).collect())
                .collect();
            let d = det_int(minor);
            if c % 2 == 0 {
                d
            } else {
                -d
            }
        })
        .collect();
    primitive(n)
}

/// Picks a maximal affinely independent subset of `ids`, greedily in order.
fn independent_subset(points: &[IntPoint], ids: &[usize], want: usize) -> Vec<usize> {
    let mut chosen: Vec<usize> = Vec::with_capacity(want);
    let mut dirs: Vec<Vec<BigInt>> = Vec::new();
    for &i in ids {
        if chosen.len() == want {
            break;
        }
        if chosen.is_empty() {
            chosen.push(i);
            continue;
        }
        dirs.push(diff(&points[i], &points[chosen[0]]));
        if rank_int(&dirs) == dirs.len() {
            chosen.push(i);
        } else {
            dirs.pop();
        }
    }
    chosen
}

struct WorkFacet {
    normal: Vec<BigInt>,
    offset: BigInt,
    /// Inserted points lying on the hyperplane, sorted.
    members: Vec<usize>,
}

fn sorted_intersection(a: &[usize], b: &[usize]) -> Vec<usize> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

fn insert_sorted(v: &mut Vec<usize>, x: usize) {
    if let Err(pos) = v.binary_search(&x) {
        v.insert(pos, x);
    }
}

/// Oriented facet through `ids`, with the inserted points on its inner side.
fn make_facet(points: &[IntPoint], ids: &[usize], inserted: &[usize]) -> WorkFacet {
    let mut normal = normal_through(points, ids);
    let mut offset = dot(&normal, &points[ids[0]]);
    let off_plane = inserted
        .iter()
        .map(|&q| dot(&normal, &points[q]))
        .find(|v| *v != offset)
        .expect("inserted points span the space");
    if off_plane > offset {
        normal = normal.into_iter().map(|x| -x).collect();
        offset = -offset;
    }
    let mut members: Vec<usize> =
        inserted.iter().copied().filter(|&q| dot(&normal, &points[q]) == offset).collect();
    members.sort_unstable();
    WorkFacet { normal, offset, members }
}

/// Convex hull of distinct integer points affinely spanning `Z^k`, `k >= 1`.
pub(crate) fn full_dim_hull(points: &[IntPoint]) -> IntHull {
    let k = points[0].len();
    if k == 1 {
        return segment_hull(points);
    }
    let all: Vec<usize> = (0..points.len()).collect();
    let simplex = independent_subset(points, &all, k + 1);
    assert_eq!(simplex.len(), k + 1, "points must span the space");

    let mut inserted = simplex.clone();
    let mut facets: Vec<WorkFacet> = (0..=k)
        .map(|skip| {
            let ids: Vec<usize> =
                simplex.iter().enumerate().filter(|&(j, _)| j != skip).map(|(_, &i)| i).collect();
            make_facet(points, &ids, &inserted)
        })
        .collect();

    for p in 0..points.len() {
        if simplex.contains(&p) {
            continue;
        }
        let side: Vec<std::cmp::Ordering> =
            facets.iter().map(|f| dot(&f.normal, &points[p]).cmp(&f.offset)).collect();
        let visible: Vec<usize> =
            (0..facets.len()).filter(|&i| side[i] == std::cmp::Ordering::Greater).collect();
        if visible.is_empty() {
            for (f, s) in facets.iter_mut().zip(&side) {
                if s.is_eq() {
                    insert_sorted(&mut f.members, p);
                }
            }
            inserted.push(p);
            continue;
        }

        let mut ridges: Vec<Vec<usize>> = Vec::new();
        for &g in &visible {
            for (fi, f) in facets.iter().enumerate() {
                if side[fi].is_gt() {
                    continue;
                }
                let common = sorted_intersection(&facets[g].members, &f.members);
                if affine_rank(points, &common) == k as isize - 2 {
                    ridges.push(common);
                }
            }
        }

        let mut kept: Vec<WorkFacet> = Vec::with_capacity(facets.len());
        for (f, s) in facets.into_iter().zip(&side) {
            match s {
                std::cmp::Ordering::Greater => {}
                std::cmp::Ordering::Equal => {
                    let mut f = f;
                    insert_sorted(&mut f.members, p);
                    kept.push(f);
                }
                std::cmp::Ordering::Less => kept.push(f),
            }
        }
        inserted.push(p);
        for ridge in ridges {
            let mut ids = independent_subset(points, &ridge, k - 1);
            ids.push(p);
            let f = make_facet(points, &ids, &inserted);
            if kept.iter().all(|g| g.normal != f.normal) {
                kept.push(f);
            }
        }
        facets = kept;
    }

    // A point is extreme iff the normals of the facets through it span the space.
    let extreme: Vec<usize> = (0..points.len())
        .filter(|&i| {
            let normals: Vec<Vec<BigInt>> = facets
                .iter()
                .filter(|f| f.members.binary_search(&i).is_ok())
                .map(|f| f.normal.clone())
                .collect();
            normals.len() >= k && rank_int(&normals) == k
        })
        .collect();
    let facets = facets
        .into_iter()
        .map(|f| IntFacet {
            vertices: f.members.into_iter().filter(|i| extreme.binary_search(i).is_ok()).collect(),
            normal: f.normal,
            offset: f.offset,
        })
        .collect();
    IntHull { facets, extreme }
}

fn segment_hull(points: &[IntPoint]) -> IntHull {
    let (mut lo, mut hi) = (0, 0);
    for (i, p) in points.iter().enumerate() {
        if p[0] < points[lo][0] {
            lo = i;
        }
        if p[0] > points[hi][0] {
            hi = i;
        }
    }
    let mut extreme = vec![lo, hi];
    extreme.sort_unstable();
    let facets = vec![
        IntFacet { normal: vec![-BigInt::one()], offset: -points[lo][0].clone(), vertices: vec![lo] },
        IntFacet { normal: vec![BigInt::one()], offset: points[hi][0].clone(), vertices: vec![hi] },
    ];
    IntHull { facets, extreme }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(raw: &[&[i64]]) -> Vec<IntPoint> {
        raw.iter().map(|p| p.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn bareiss_matches_known_determinants() {
        let m = pts(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 1]]);
        assert_eq!(det_int(m), BigInt::from(0));
        let m = pts(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 2]]);
        assert_eq!(det_int(m), BigInt::from(6));
        let m = pts(&[&[0, 2, 1], &[3, 1, 2], &[1, 1, 2]]);
        assert_eq!(det_int(m), BigInt::from(-6));
        let m = pts(&[&[0, 1], &[1, 0]]);
        assert_eq!(det_int(m), BigInt::from(-1));
        assert_eq!(det_int(vec![]), BigInt::one());
    }

    #[test]
    fn square_with_interior_and_edge_points() {
        let p = pts(&[&[0, 0], &[2, 0], &[1, 1], &[0, 2], &[2, 2], &[1, 0], &[2, 1]]);
        let h = full_dim_hull(&p);
        assert_eq!(h.extreme, vec![0, 1, 3, 4]);
        assert_eq!(h.facets.len(), 4);
        for f in &h.facets {
            assert_eq!(f.vertices.len(), 2);
        }
    }

    #[test]
    fn cube_has_six_square_facets() {
        let mut raw = Vec::new();
        for x in 0..2 {
            for y in 0..2 {
                for z in 0..2 {
                    raw.push(vec![BigInt::from(x), BigInt::from(y), BigInt::from(z)]);
                }
            }
        }
        let h = full_dim_hull(&raw);
        assert_eq!(h.facets.len(), 6);
        assert!(h.facets.iter().all(|f| f.vertices.len() == 4));
        assert_eq!(h.extreme.len(), 8);
    }
}
