//! The facet vector and the SL(n) contravariant composites built from it,
//! together with the planar moment, edge and `v_o` vectors.

use std::fmt;

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linear::{cross, det_of, rank, rotate90, rotate90_inv, Rat, Vector};
use crate::polytope::Polytope;

/// An additive map `[0, inf) -> R`, fixed by its value at one.
///
/// Additive maps are linear over the rationals, and every argument this crate
/// produces is rational, so `ζ(q) = c q` covers all of them here.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Zeta {
    #[serde(with = "crate::linear::rat_string")]
    pub c: Rat,
}

impl Zeta {
    pub fn new(c: Rat) -> Self {
        Zeta { c }
    }

    pub fn identity() -> Self {
        Zeta::new(Rat::from_integer(1.into()))
    }

    pub fn zero() -> Self {
        Zeta::new(Rat::zero())
    }

    pub fn eval(&self, q: &Rat) -> Result<Rat> {
        if q.is_negative() {
            return Err(Error::NegativeArgument(q.to_string()));
        }
        Ok(&self.c * q)
    }

    /// Pointwise sum; again additive.
    pub fn plus(&self, other: &Zeta) -> Zeta {
        Zeta::new(&self.c + &other.c)
    }
}

impl fmt::Display for Zeta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ζ(1)={}", self.c)
    }
}

pub fn zeta_eval(z: &Zeta, q: &Rat) -> Result<Rat> {
    z.eval(q)
}

/// Parameters of the planar composite on all polygons.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Params2D {
    #[serde(with = "crate::linear::rat_string")]
    pub c1: Rat,
    #[serde(with = "crate::linear::rat_string")]
    pub c2: Rat,
    #[serde(with = "crate::linear::rat_string")]
    pub c1_tilde: Rat,
    #[serde(with = "crate::linear::rat_string")]
    pub c2_tilde: Rat,
    pub zeta1: Zeta,
    pub zeta2: Zeta,
}

impl Default for Params2D {
    fn default() -> Self {
        Params2D {
            c1: Rat::zero(),
            c2: Rat::zero(),
            c1_tilde: Rat::zero(),
            c2_tilde: Rat::zero(),
            zeta1: Zeta::zero(),
            zeta2: Zeta::zero(),
        }
    }
}

/// How the support value enters the facet-vector denominator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SupportConvention {
    /// `ζ(V) / |h|`: the defining convention.
    Absolute,
    /// `ζ(V) / h`: agrees with `Absolute` on polytopes containing the origin.
    Signed,
}

/// `Σ ζ(V(P,u)) / |h_P(u)| · u` over facets whose affine hull misses the origin.
///
/// Primitive integer normals are used in place of unit normals; the summand is
/// invariant under rescaling the normal. Lower-dimensional polytopes map to zero.
pub fn facet_vector(p: &Polytope, z: &Zeta) -> Vector {
    facet_vector_with(p, z, SupportConvention::Absolute)
}

/// Normal and offset of the affine hull of an `(n-1)`-dimensional polytope.
fn flat_normal(p: &Polytope) -> Option<(Vector, Rat)> {
    let base = &p.vertices()[0];
    let mut dirs: Vec<Vector> = Vec::new();
    for v in &p.vertices()[1..] {
        dirs.push(v - base);
        if rank(&dirs) < dirs.len() {
            dirs.pop();
        }
    }
    let u = cross(&dirs);
    let h = u.dot(base);
    (!u.is_zero()).then_some((u, h))
}

pub fn facet_vector_with(p: &Polytope, z: &Zeta, conv: SupportConvention) -> Vector {
    let n = p.ambient_dim();
    let mut out = Vector::zeros(n);
    let Ok(facets) = p.facets() else {
        // A flat polytope is its own facet for both normals ±u; with |h| the
        // two terms cancel, with signed h they add up.
        if conv == SupportConvention::Signed && p.affine_dim() + 1 == n {
            if let Some((u, h)) = flat_normal(p).filter(|(_, h)| !h.is_zero()) {
                let vol = p.conv_with_origin().volume();
                let weight = z.eval(&vol).expect("volumes are nonnegative") / h;
                out = u.scale(&(weight * Rat::from_integer(2.into())));
            }
        }
        return out;
    };
    for f in facets.iter().filter(|f| !f.support.is_zero()) {
        let h = match conv {
            SupportConvention::Absolute => f.support.abs(),
            SupportConvention::Signed => f.support.clone(),
        };
        let weight = z.eval(&p.cone_volume(f)).expect("cone volumes are nonnegative") / h;
        out += &f.normal.scale(&weight);
    }
    out
}

/// `∫_P x dx`.
pub fn moment_vector(p: &Polytope) -> Vector {
    p.moment()
}

/// The planar edge vector.
///
/// * `v + w` for a polygon with edges `[o,v]`, `[o,w]`, or with an edge `[v,w]`
///   having `o` in its relative interior;
/// * `2(v + w)` for a segment `[v,w]` containing `o`;
/// * zero otherwise.
pub fn edge_vector(p: &Polytope) -> Result<Vector> {
    if p.ambient_dim() != 2 {
        return Err(Error::WrongDimension { expected: 2, got: p.ambient_dim() });
    }
    let zero = Vector::zeros(2);
    if !p.contains_origin() {
        return Ok(zero);
    }
    match p.affine_dim() {
        1 => {
            let [v, w] = p.vertices() else { unreachable!("segment has two vertices") };
            Ok((v + w).scale(&Rat::from_integer(2.into())))
        }
        2 => {
            let cycle = p.ccw_cycle()?;
            let m = cycle.len();
            if let Some(i) = cycle.iter().position(Vector::is_zero) {
                return Ok(&cycle[(i + m - 1) % m] + &cycle[(i + 1) % m]);
            }
            let facets = p.facets()?;
            match facets.iter().find(|f| f.support.is_zero()) {
                Some(f) => {
                    let (a, b) = (f.vertex_ids[0], f.vertex_ids[1]);
                    Ok(&p.vertices()[a] + &p.vertices()[b])
                }
                None => Ok(zero),
            }
        }
        _ => Ok(zero),
    }
}

/// `Σ ζ(det(v_{i-1}, v_i)) / det(v_{i-1}, v_i) · (v_{i-1} - v_i)` over the
/// counter-clockwise boundary, skipping the edges through the origin.
pub fn vo_zeta(p: &Polytope, z: &Zeta) -> Result<Vector> {
    if p.ambient_dim() != 2 {
        return Err(Error::WrongDimension { expected: 2, got: p.ambient_dim() });
    }
    if !p.contains_origin() {
        return Err(Error::OriginNotContained);
    }
    if p.affine_dim() < 2 {
        return Ok(Vector::zeros(2));
    }
    let cycle = p.ccw_cycle()?;
    let m = cycle.len();
    let term = |a: &Vector, b: &Vector| -> Result<Vector> {
        let d = det_of(&[a.clone(), b.clone()]);
        Ok((a - b).scale(&(z.eval(&d)? / d)))
    };
    let mut out = Vector::zeros(2);
    // o on the boundary: label {o, v_1, ..., v_r} counter-clockwise, o first
    let chain: Option<Vec<Vector>> = if let Some(i) = cycle.iter().position(Vector::is_zero) {
        Some((1..m).map(|k| cycle[(i + k) % m].clone()).collect())
    } else {
        p.facets()?.iter().find(|f| f.support.is_zero()).map(|f| {
            // o sits inside the edge; start right after it
            let (a, b) = (&p.vertices()[f.vertex_ids[0]], &p.vertices()[f.vertex_ids[1]]);
            let ia = cycle.iter().position(|v| v == a).expect("vertex");
            let ib = cycle.iter().position(|v| v == b).expect("vertex");
            let start = if (ia + 1) % m == ib { ib } else { ia };
            (0..m).map(|k| cycle[(start + k) % m].clone()).collect()
        })
    };
    match chain {
        Some(vs) => {
            for w in vs.windows(2) {
                out += &term(&w[0], &w[1])?;
            }
        }
        None => {
            out += &term(&cycle[m - 1], &cycle[0])?;
            for w in cycle.windows(2) {
                out += &term(&w[0], &w[1])?;
            }
        }
    }
    Ok(out)
}

/// `fv_ζ(P) + c1 ρ mv(P) + c2 ρ ve(P)` on polygons containing the origin.
pub fn z_contra_2d_origin(p: &Polytope, z: &Zeta, c1: &Rat, c2: &Rat) -> Result<Vector> {
    if p.ambient_dim() != 2 {
        return Err(Error::WrongDimension { expected: 2, got: p.ambient_dim() });
    }
    if !p.contains_origin() {
        return Err(Error::OriginNotContained);
    }
    let mut out = facet_vector(p, z);
    out += &rotate90(&p.moment())?.scale(c1);
    out += &rotate90(&edge_vector(p)?)?.scale(c2);
    Ok(out)
}

/// `fv_{ζ1}(P) + fv_{ζ2}(conv{o, P})`.
pub fn z_contra_nd(p: &Polytope, z1: &Zeta, z2: &Zeta) -> Vector {
    &facet_vector(p, z1) + &facet_vector(&p.conv_with_origin(), z2)
}

/// The six-term planar composite on all polygons; the last term uses the
/// hull of the origin and the vertices visible from it.
pub fn z_contra_2d_general(p: &Polytope, params: &Params2D) -> Result<Vector> {
    if p.ambient_dim() != 2 {
        return Err(Error::WrongDimension { expected: 2, got: p.ambient_dim() });
    }
    let with_o = p.conv_with_origin();
    let mut visible_hull = p.visible_vertices_ccw()?;
    visible_hull.push(Vector::zeros(2));
    let visible_hull = Polytope::hull(&visible_hull)?;

    let mut out = facet_vector(p, &params.zeta1);
    out += &facet_vector(&with_o, &params.zeta2);
    out += &rotate90(&p.moment())?.scale(&params.c1);
    out += &rotate90(&with_o.moment())?.scale(&params.c1_tilde);
    out += &rotate90(&edge_vector(&with_o)?)?.scale(&params.c2);
    out += &rotate90(&edge_vector(&visible_hull)?)?.scale(&params.c2_tilde);
    Ok(out)
}

/// Which polytopes a valuation is defined on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Domain {
    /// Every polytope.
    All,
    /// Polytopes containing the origin.
    ContainsOrigin,
}

/// A named vector-valued function on polytopes, as exercised by the harness
/// and the CLI.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Valuation {
    FacetVector(Zeta),
    /// Facet vector with the signed support denominator.
    FacetVectorSigned(Zeta),
    Moment,
    /// `ρ ∘ mv`.
    RotatedMoment,
    /// `ρ⁻¹ ∘ fv_ζ`.
    UnrotatedFacetVector(Zeta),
    EdgeVector,
    Vo(Zeta),
    OriginComposite2D {
        zeta: Zeta,
        #[serde(with = "crate::linear::rat_string")]
        c1: Rat,
        #[serde(with = "crate::linear::rat_string")]
        c2: Rat,
    },
    GeneralComposite { zeta1: Zeta, zeta2: Zeta },
    GeneralComposite2D(Params2D),
    /// `P -> (#vertices) · 1`, not a valuation.
    VertexCount,
    Zero,
}

impl Valuation {
    pub fn eval(&self, p: &Polytope) -> Result<Vector> {
        match self {
            Valuation::FacetVector(z) => Ok(facet_vector(p, z)),
            Valuation::FacetVectorSigned(z) => {
                Ok(facet_vector_with(p, z, SupportConvention::Signed))
            }
            Valuation::Moment => Ok(p.moment()),
            Valuation::RotatedMoment => rotate90(&p.moment()),
            Valuation::UnrotatedFacetVector(z) => rotate90_inv(&facet_vector(p, z)),
            Valuation::EdgeVector => edge_vector(p),
            Valuation::Vo(z) => vo_zeta(p, z),
            Valuation::OriginComposite2D { zeta, c1, c2 } => z_contra_2d_origin(p, zeta, c1, c2),
            Valuation::GeneralComposite { zeta1, zeta2 } => Ok(z_contra_nd(p, zeta1, zeta2)),
            Valuation::GeneralComposite2D(params) => z_contra_2d_general(p, params),
            Valuation::VertexCount => {
                let k = Rat::from_integer(p.vertices().len().into());
                Ok(Vector::ones(p.ambient_dim()).scale(&k))
            }
            Valuation::Zero => Ok(Vector::zeros(p.ambient_dim())),
        }
    }

    pub fn domain(&self) -> Domain {
        match self {
            Valuation::EdgeVector | Valuation::Vo(_) | Valuation::OriginComposite2D { .. } => {
                Domain::ContainsOrigin
            }
            _ => Domain::All,
        }
    }

    /// Ambient dimension the valuation is restricted to, if any.
    pub fn planar_only(&self) -> bool {
        matches!(
            self,
            Valuation::RotatedMoment
                | Valuation::UnrotatedFacetVector(_)
                | Valuation::EdgeVector
                | Valuation::Vo(_)
                | Valuation::OriginComposite2D { .. }
                | Valuation::GeneralComposite2D(_)
        )
    }

    pub fn name(&self) -> String {
        match self {
            Valuation::FacetVector(z) => format!("fv[{z}]"),
            Valuation::FacetVectorSigned(z) => format!("fv_signed[{z}]"),
            Valuation::Moment => "mv".into(),
            Valuation::RotatedMoment => "rot90∘mv".into(),
            Valuation::UnrotatedFacetVector(z) => format!("rot90⁻¹∘fv[{z}]"),
            Valuation::EdgeVector => "ve".into(),
            Valuation::Vo(z) => format!("vo[{z}]"),
            Valuation::OriginComposite2D { zeta, c1, c2 } => {
                format!("thm12[{zeta}, c1={c1}, c2={c2}]")
            }
            Valuation::GeneralComposite { zeta1, zeta2 } => {
                format!("thm13[ζ1(1)={}, ζ2(1)={}]", zeta1.c, zeta2.c)
            }
            Valuation::GeneralComposite2D(p) => format!(
                "thm14[ζ1(1)={}, ζ2(1)={}, c1={}, c1~={}, c2={}, c2~={}]",
                p.zeta1.c, p.zeta2.c, p.c1, p.c1_tilde, p.c2, p.c2_tilde
            ),
            Valuation::VertexCount => "vertex_count".into(),
            Valuation::Zero => "zero".into(),
        }
    }
}
