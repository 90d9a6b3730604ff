//! Canonical vertex representation of convex polytopes and the exact
//! geometry built on it: facets, support values, volumes, moments,
//! triangulations, hyperplane cuts and visibility from the origin.

use std::cmp::Ordering;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::hull::{self, IntPoint};
use crate::linear::{cross, det_of, echelon_pivots, Matrix, Rat, Vector};

/// A facet of a full-dimensional polytope.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Facet {
    /// Primitive integer outer normal.
    pub normal: Vector,
    /// `max <x, normal>` over the polytope.
    pub support: Rat,
    /// Indices into [`Polytope::vertices`] of the vertices on this facet.
    pub vertex_ids: Vec<usize>,
}

impl Facet {
    pub fn normal_ints(&self) -> Vec<BigInt> {
        self.normal.coords().iter().map(|x| x.to_integer()).collect()
    }
}

/// `{x : <x, normal> = offset}`, with halfspaces `H+` (`>=`) and `H-` (`<=`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hyperplane {
    normal: Vector,
    offset: Rat,
}

impl Hyperplane {
    pub fn new(normal: Vector, offset: Rat) -> Result<Self> {
        if normal.is_zero() {
            return Err(Error::ZeroDirection);
        }
        Ok(Hyperplane { normal, offset })
    }

    pub fn through_origin(normal: Vector) -> Result<Self> {
        Self::new(normal, Rat::zero())
    }

    pub fn normal(&self) -> &Vector {
        &self.normal
    }

    pub fn offset(&self) -> &Rat {
        &self.offset
    }

    /// Signed value `<x, normal> - offset`.
    pub fn eval(&self, x: &Vector) -> Rat {
        self.normal.dot(x) - &self.offset
    }
}

/// An ordered list of affinely independent points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Simplex {
    pub vertices: Vec<Vector>,
}

impl Simplex {
    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }

    /// `k`-dimensional volume when the simplex is full-dimensional in its
    /// ambient space; zero otherwise.
    pub fn volume(&self) -> Rat {
        let n = self.vertices[0].dim();
        if self.dim() != n {
            return Rat::zero();
        }
        let base = &self.vertices[0];
        let cols: Vec<Vector> = self.vertices[1..].iter().map(|v| v - base).collect();
        det_of(&cols).abs() / factorial(n)
    }

    pub fn centroid(&self) -> Vector {
        let n = self.vertices[0].dim();
        let mut s = Vector::zeros(n);
        for v in &self.vertices {
            s += v;
        }
        s.scale(&Rat::new(BigInt::one(), BigInt::from(self.vertices.len())))
    }
}

pub(crate) fn factorial(n: usize) -> Rat {
    Rat::from_integer((1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k)))
}

/// A nonempty convex polytope given by its vertices.
///
/// Vertices are the extreme points only, deduplicated and sorted
/// lexicographically, so two polytopes are equal iff they are the same set.
#[derive(Clone, Debug)]
pub struct Polytope {
    dim: usize,
    vertices: Vec<Vector>,
    aff_dim: usize,
    facets: OnceLock<Vec<Facet>>,
}

impl PartialEq for Polytope {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.vertices == other.vertices
    }
}

impl Eq for Polytope {}

/// Affine dimension and coordinate pivots of a point set. Projecting onto the
/// pivot coordinates is injective on the affine hull.
fn affine_frame(points: &[Vector]) -> Vec<usize> {
    let base = &points[0];
    let diffs: Vec<Vector> = points[1..].iter().map(|p| p - base).collect();
    echelon_pivots(&diffs)
}

/// Projects onto `pivots` and clears denominators.
fn to_integer_frame(points: &[Vector], pivots: &[usize]) -> Vec<IntPoint> {
    let lcm = points
        .iter()
        .flat_map(|p| pivots.iter().map(move |&c| p[c].denom().clone()))
        .fold(BigInt::one(), |acc, d| acc.lcm(&d));
    points
        .iter()
        .map(|p| pivots.iter().map(|&c| (&p[c] * &lcm).to_integer()).collect())
        .collect()
}

/// Indices of the extreme points of `points` (distinct), sorted.
fn extreme_indices(points: &[Vector]) -> (usize, Vec<usize>) {
    if points.len() == 1 {
        return (0, vec![0]);
    }
    let pivots = affine_frame(points);
    if pivots.is_empty() {
        return (0, vec![0]);
    }
    let ints = to_integer_frame(points, &pivots);
    (pivots.len(), hull::full_dim_hull(&ints).extreme)
}

/// Pulling triangulation of the polytope whose vertex list is `points`
/// (all extreme, in a fixed global order). Returns index tuples into `points`.
fn triangulate_indices(points: &[Vector]) -> Vec<Vec<usize>> {
    if points.len() == 1 {
        return vec![vec![0]];
    }
    let pivots = affine_frame(points);
    let k = pivots.len();
    if points.len() == k + 1 {
        return vec![(0..=k).collect()];
    }
    let ints = to_integer_frame(points, &pivots);
    let h = hull::full_dim_hull(&ints);
    let mut out = Vec::new();
    for f in &h.facets {
        if f.vertices.contains(&0) {
            continue;
        }
        let sub: Vec<Vector> = f.vertices.iter().map(|&i| points[i].clone()).collect();
        for s in triangulate_indices(&sub) {
            let mut simplex = Vec::with_capacity(k + 1);
            simplex.push(0);
            simplex.extend(s.into_iter().map(|i| f.vertices[i]));
            out.push(simplex);
        }
    }
    out
}

fn check_uniform(points: &[Vector]) -> Result<usize> {
    let first = points.first().ok_or(Error::EmptyPointSet)?;
    let n = first.dim();
    if n == 0 {
        return Err(Error::WrongDimension { expected: 1, got: 0 });
    }
    if let Some(p) = points.iter().find(|p| p.dim() != n) {
        return Err(Error::WrongDimension { expected: n, got: p.dim() });
    }
    Ok(n)
}

/// Canonical polytope spanned by `points`.
pub fn convex_hull(points: &[Vector]) -> Result<Polytope> {
    Polytope::hull(points)
}

impl Polytope {
    /// Canonical polytope whose vertices are the extreme points of `points`.
    pub fn hull(points: &[Vector]) -> Result<Polytope> {
        let dim = check_uniform(points)?;
        let mut pts = points.to_vec();
        pts.sort();
        pts.dedup();
        let (aff_dim, extreme) = extreme_indices(&pts);
        let vertices: Vec<Vector> = extreme.into_iter().map(|i| pts[i].clone()).collect();
        Ok(Polytope { dim, vertices, aff_dim, facets: OnceLock::new() })
    }

    /// Sorts `vertices` without a hull pass. Callers guarantee the points are
    /// exactly the extreme points of their hull.
    fn from_extreme(dim: usize, mut vertices: Vec<Vector>, aff_dim: usize) -> Polytope {
        vertices.sort();
        vertices.dedup();
        Polytope { dim, vertices, aff_dim, facets: OnceLock::new() }
    }

    pub fn point(p: Vector) -> Polytope {
        Polytope { dim: p.dim(), vertices: vec![p], aff_dim: 0, facets: OnceLock::new() }
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Vector] {
        &self.vertices
    }

    pub fn affine_dim(&self) -> usize {
        self.aff_dim
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.aff_dim == self.dim
    }

    /// Image under a linear map. Invertible maps send vertices to vertices.
    pub fn transform(&self, m: &Matrix) -> Polytope {
        let image: Vec<Vector> = self.vertices.iter().map(|v| m.apply(v)).collect();
        if m.det().is_zero() {
            Polytope::hull(&image).expect("nonempty")
        } else {
            Polytope::from_extreme(self.dim, image, self.aff_dim)
        }
    }

    pub fn translate(&self, t: &Vector) -> Polytope {
        let image = self.vertices.iter().map(|v| v + t).collect();
        Polytope::from_extreme(self.dim, image, self.aff_dim)
    }

    pub fn scale(&self, s: &Rat) -> Polytope {
        assert!(s.is_positive(), "scale factor must be positive");
        let image = self.vertices.iter().map(|v| v.scale(s)).collect();
        Polytope::from_extreme(self.dim, image, self.aff_dim)
    }

    /// Facets of a full-dimensional polytope, sorted by normal.
    pub fn facets(&self) -> Result<&[Facet]> {
        if !self.is_full_dimensional() {
            return Err(Error::NotFullDimensional);
        }
        Ok(self.facets.get_or_init(|| self.compute_facets()))
    }

    fn compute_facets(&self) -> Vec<Facet> {
        let pivots: Vec<usize> = (0..self.dim).collect();
        let lcm = self
            .vertices
            .iter()
            .flat_map(|p| p.coords().iter().map(|x| x.denom().clone()))
            .fold(BigInt::one(), |acc, d| acc.lcm(&d));
        let ints = to_integer_frame(&self.vertices, &pivots);
        let h = hull::full_dim_hull(&ints);
        let mut facets: Vec<Facet> = h
            .facets
            .into_iter()
            .map(|f| Facet {
                normal: Vector::new(f.normal.into_iter().map(Rat::from_integer).collect()),
                support: Rat::new(f.offset, lcm.clone()),
                vertex_ids: f.vertices,
            })
            .collect();
        facets.sort_by(|a, b| a.normal.cmp(&b.normal));
        facets
    }

    /// `max <v, m>` over the vertices.
    pub fn support(&self, m: &Vector) -> Result<Rat> {
        if m.dim() != self.dim {
            return Err(Error::WrongDimension { expected: self.dim, got: m.dim() });
        }
        if m.is_zero() {
            return Err(Error::ZeroDirection);
        }
        Ok(self.vertices.iter().map(|v| v.dot(m)).max().expect("nonempty"))
    }

    fn facet_points(&self, f: &Facet) -> Vec<Vector> {
        f.vertex_ids.iter().map(|&i| self.vertices[i].clone()).collect()
    }

    /// Volume of `conv({o} ∪ F)`.
    pub fn cone_volume(&self, f: &Facet) -> Rat {
        let pts = self.facet_points(f);
        let n = self.dim;
        let total = triangulate_indices(&pts).into_iter().fold(Rat::zero(), |acc, s| {
            let cols: Vec<Vector> = s.iter().map(|&i| pts[i].clone()).collect();
            acc + det_of(&cols).abs()
        });
        total / factorial(n)
    }

    /// `(n-1)`-volume of the facet times its outer unit normal, computed from
    /// generalised cross products of a facet triangulation.
    pub fn vector_area(&self, f: &Facet) -> Vector {
        let pts = self.facet_points(f);
        let n = self.dim;
        let mut total = Vector::zeros(n);
        for s in triangulate_indices(&pts) {
            let base = &pts[s[0]];
            let dirs: Vec<Vector> = s[1..].iter().map(|&i| &pts[i] - base).collect();
            let c = cross(&dirs);
            if c.dot(&f.normal).is_negative() {
                total = &total - &c;
            } else {
                total += &c;
            }
        }
        total.scale(&factorial(n - 1).recip())
    }

    /// Pulling triangulation into simplices of dimension `affine_dim`.
    pub fn triangulate(&self) -> Vec<Simplex> {
        triangulate_indices(&self.vertices)
            .into_iter()
            .map(|s| Simplex { vertices: s.into_iter().map(|i| self.vertices[i].clone()).collect() })
            .collect()
    }

    /// `n`-dimensional volume; zero when lower-dimensional.
    pub fn volume(&self) -> Rat {
        if !self.is_full_dimensional() {
            return Rat::zero();
        }
        self.triangulate().iter().map(Simplex::volume).fold(Rat::zero(), |a, b| a + b)
    }

    /// `∫_P x dx`.
    pub fn moment(&self) -> Vector {
        let mut m = Vector::zeros(self.dim);
        if !self.is_full_dimensional() {
            return m;
        }
        for s in self.triangulate() {
            m += &s.centroid().scale(&s.volume());
        }
        m
    }

    /// Exact membership test.
    pub fn contains(&self, x: &Vector) -> bool {
        if self.is_full_dimensional() {
            let facets = self.facets().expect("full-dimensional");
            return facets.iter().all(|f| f.normal.dot(x) <= f.support);
        }
        let mut pts = self.vertices.clone();
        pts.push(x.clone());
        Polytope::hull(&pts).map(|q| q == *self).unwrap_or(false)
    }

    pub fn contains_origin(&self) -> bool {
        self.contains(&Vector::zeros(self.dim))
    }

    /// Pairs of vertex indices spanning edges. Lower-dimensional input
    /// returns every pair, which is a superset.
    fn edge_candidates(&self) -> Vec<(usize, usize)> {
        let m = self.vertices.len();
        let pairs = (0..m).flat_map(|i| (i + 1..m).map(move |j| (i, j)));
        if !self.is_full_dimensional() || self.dim < 2 {
            return pairs.collect();
        }
        let facets = self.facets().expect("full-dimensional");
        pairs
            .filter(|&(i, j)| {
                let normals: Vec<Vector> = facets
                    .iter()
                    .filter(|f| f.vertex_ids.contains(&i) && f.vertex_ids.contains(&j))
                    .map(|f| f.normal.clone())
                    .collect();
                crate::linear::rank(&normals) == self.dim - 1
            })
            .collect()
    }

    /// `(P ∩ H+, P ∩ H-, P ∩ H)`, each absent when empty.
    pub fn cut(&self, h: &Hyperplane) -> Result<CutPieces> {
        if h.normal.dim() != self.dim {
            return Err(Error::WrongDimension { expected: self.dim, got: h.normal.dim() });
        }
        let vals: Vec<Rat> = self.vertices.iter().map(|v| h.eval(v)).collect();
        let mut crossings = Vec::new();
        for (i, j) in self.edge_candidates() {
            let (a, b) = (&vals[i], &vals[j]);
            if (a.is_positive() && b.is_negative()) || (a.is_negative() && b.is_positive()) {
                let t = a / (a - b);
                let p = &self.vertices[i] + &(&self.vertices[j] - &self.vertices[i]).scale(&t);
                crossings.push(p);
            }
        }
        let side = |keep: fn(&Rat) -> bool| -> Result<Option<Polytope>> {
            let mut pts: Vec<Vector> = self
                .vertices
                .iter()
                .zip(&vals)
                .filter(|(_, s)| keep(s))
                .map(|(v, _)| v.clone())
                .collect();
            pts.extend(crossings.iter().cloned());
            if pts.is_empty() {
                Ok(None)
            } else {
                Polytope::hull(&pts).map(Some)
            }
        };
        Ok(CutPieces {
            plus: side(|s| !s.is_negative())?,
            minus: side(|s| !s.is_positive())?,
            section: side(|s| s.is_zero())?,
        })
    }

    /// `conv({o} ∪ P)`.
    pub fn conv_with_origin(&self) -> Polytope {
        let mut pts = self.vertices.clone();
        pts.push(Vector::zeros(self.dim));
        Polytope::hull(&pts).expect("nonempty")
    }

    /// Vertices of a full-dimensional polygon in counter-clockwise order,
    /// starting from the first canonical vertex.
    pub fn ccw_cycle(&self) -> Result<Vec<Vector>> {
        if self.dim != 2 {
            return Err(Error::WrongDimension { expected: 2, got: self.dim });
        }
        let facets = self.facets()?;
        let m = self.vertices.len();
        let mut next = vec![usize::MAX; m];
        for f in facets {
            let (a, b) = (f.vertex_ids[0], f.vertex_ids[1]);
            let d = &self.vertices[b] - &self.vertices[a];
            // outward normal of a ccw edge a -> b is (d_y, -d_x)
            let along = &d[1] * &f.normal[0] - &d[0] * &f.normal[1];
            if along.is_positive() {
                next[a] = b;
            } else {
                next[b] = a;
            }
        }
        let mut out = Vec::with_capacity(m);
        let mut cur = 0;
        for _ in 0..m {
            out.push(self.vertices[cur].clone());
            cur = next[cur];
        }
        Ok(out)
    }

    /// Vertices `v` with `P ∩ relint[o, v] = ∅`, as a contiguous counter-clockwise
    /// boundary chain. Empty when `o ∈ P`.
    pub fn visible_vertices_ccw(&self) -> Result<Vec<Vector>> {
        if self.dim != 2 {
            return Err(Error::WrongDimension { expected: 2, got: self.dim });
        }
        if self.contains_origin() {
            return Ok(Vec::new());
        }
        match self.aff_dim {
            0 => Ok(self.vertices.clone()),
            1 => {
                let (a, b) = (&self.vertices[0], &self.vertices[1]);
                let collinear = det_of(&[a.clone(), b.clone()]).is_zero();
                // with o on the line, only the endpoint nearer to o is visible
                let visible = |p: &Vector, q: &Vector| !collinear || !(q - p).dot(p).is_negative();
                Ok([(a, b), (b, a)]
                    .into_iter()
                    .filter(|(p, q)| visible(p, q))
                    .map(|(p, _)| p.clone())
                    .collect())
            }
            _ => {
                let cycle = self.ccw_cycle()?;
                let facets = self.facets()?;
                // edge i runs from cycle[i] to cycle[i + 1]; it faces o iff its
                // facet has negative support. The visible vertices are those of
                // the facing edges, which form one contiguous run.
                let m = cycle.len();
                let facing: Vec<bool> = (0..m)
                    .map(|i| {
                        let (a, b) = (&cycle[i], &cycle[(i + 1) % m]);
                        facets.iter().any(|f| {
                            f.support.is_negative() && f.normal.dot(a) == f.support && f.normal.dot(b) == f.support
                        })
                    })
                    .collect();
                let start = (0..m)
                    .find(|&i| facing[i] && !facing[(i + m - 1) % m])
                    .expect("some edge faces o when o is outside");
                let run = (0..m).map(|k| (start + k) % m).take_while(|&i| facing[i]).count();
                Ok((0..=run)
                    .map(|k| cycle[(start + k) % m].clone())
                    .collect())
            }
        }
    }
}

/// Result of [`Polytope::cut`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutPieces {
    pub plus: Option<Polytope>,
    pub minus: Option<Polytope>,
    pub section: Option<Polytope>,
}

fn check_k(k: usize, n: usize, min: usize) -> Result<()> {
    if k < min || k > n {
        return Err(Error::OutOfRange(format!("simplex index k={k} must lie in [{min}, {n}]")));
    }
    Ok(())
}

/// `T^k = conv{o, e_1, ..., e_k}` in `R^n`.
pub fn standard_simplex(k: usize, n: usize) -> Result<Polytope> {
    check_k(k, n, 0)?;
    let mut pts = vec![Vector::zeros(n)];
    pts.extend((0..k).map(|i| Vector::basis(n, i)));
    Ok(Polytope::from_extreme(n, pts, k))
}

/// `conv{e_1, ..., e_k}` in `R^n`.
pub fn standard_facet_simplex(k: usize, n: usize) -> Result<Polytope> {
    check_k(k, n, 1)?;
    Ok(Polytope::from_extreme(n, (0..k).map(|i| Vector::basis(n, i)).collect(), k - 1))
}

/// `conv{o, e_1, e_3, ..., e_k}` in `R^n`.
pub fn hat_simplex(k: usize, n: usize) -> Result<Polytope> {
    check_k(k, n, 2)?;
    let mut pts = vec![Vector::zeros(n), Vector::basis(n, 0)];
    pts.extend((2..k).map(|i| Vector::basis(n, i)));
    Ok(Polytope::from_extreme(n, pts, k - 1))
}

/// Ordering helper used for deterministic output.
pub fn cmp_polytopes(a: &Polytope, b: &Polytope) -> Ordering {
    a.dim.cmp(&b.dim).then_with(|| a.vertices.cmp(&b.vertices))
}
