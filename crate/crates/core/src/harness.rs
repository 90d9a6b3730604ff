//! Seeded property suites with exact equality checks.
//!
//! Every case draws its randomness from its own ChaCha stream keyed by
//! `(seed, case index)`, so reports do not depend on evaluation order and
//! cases run in parallel.

use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linear::{
    int, make_phi1, make_phi2, make_psi1, make_psi2, random_unimodular_with, rat, rotate90,
    sigma_library, Matrix, Rat, Vector,
};
use crate::polytope::{hat_simplex, standard_simplex, Hyperplane, Polytope};
use crate::valuations::{
    facet_vector, facet_vector_with, vo_zeta, Domain, Params2D, SupportConvention, Valuation, Zeta,
};

/// A failing case: what went in, what the identity demanded, what came out.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, PartialOrd, Ord)]
pub struct Witness {
    pub input: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub suite: String,
    pub seed: u64,
    pub cases: usize,
    pub failures: usize,
    pub witnesses: Vec<Witness>,
    /// Negative controls are expected to fail.
    pub expected_fail: bool,
}

impl CheckReport {
    /// True when the outcome matches expectation: no failures, or at least
    /// one failure for a negative control.
    pub fn passed(&self) -> bool {
        if self.expected_fail {
            self.failures > 0
        } else {
            self.failures == 0
        }
    }

    fn merge(suite: String, seed: u64, parts: Vec<CheckReport>) -> CheckReport {
        let mut witnesses: Vec<Witness> = parts.iter().flat_map(|r| r.witnesses.clone()).collect();
        witnesses.sort();
        CheckReport {
            suite,
            seed,
            cases: parts.iter().map(|r| r.cases).sum(),
            failures: witnesses.len(),
            witnesses,
            expected_fail: false,
        }
    }

    fn negated(mut self) -> CheckReport {
        self.expected_fail = true;
        self
    }
}

type CaseResult = std::result::Result<(), Witness>;

/// The RNG stream of case `index` under `seed`.
pub fn case_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

fn run_suite<F>(suite: String, seed: u64, cases: usize, case: F) -> CheckReport
where
    F: Fn(usize, &mut ChaCha8Rng) -> CaseResult + Sync,
{
    let mut witnesses: Vec<Witness> = (0..cases)
        .into_par_iter()
        .filter_map(|i| case(i, &mut case_rng(seed, i as u64)).err())
        .collect();
    witnesses.sort();
    CheckReport { suite, seed, cases, failures: witnesses.len(), witnesses, expected_fail: false }
}

fn describe(p: &Polytope) -> String {
    let vs: Vec<String> = p.vertices().iter().map(|v| v.to_string()).collect();
    format!("[{}]", vs.join(", "))
}

fn failure(input: String, expected: impl ToString, actual: impl ToString) -> Witness {
    Witness { input, expected: expected.to_string(), actual: actual.to_string() }
}

fn eval_or_witness(z: &Valuation, p: &Polytope, input: &str) -> std::result::Result<Vector, Witness> {
    z.eval(p).map_err(|e| failure(input.to_string(), "a value", format!("error: {e}")))
}

fn expect_eq(input: String, expected: Vector, actual: Vector) -> CaseResult {
    if expected == actual {
        Ok(())
    } else {
        Err(failure(input, expected, actual))
    }
}

/// Options for [`random_polytope`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RandomPolytopeOpts {
    pub contains_origin: bool,
    pub max_coord: i64,
    pub max_pts: usize,
}

impl Default for RandomPolytopeOpts {
    fn default() -> Self {
        RandomPolytopeOpts { contains_origin: false, max_coord: 3, max_pts: 7 }
    }
}

const MAX_ATTEMPTS: usize = 64;

/// Hull of seeded random integer or half-integer points in `[-max_coord, max_coord]^n`,
/// retried until full-dimensional.
pub fn random_polytope(n: usize, seed: u64, opts: RandomPolytopeOpts) -> Result<Polytope> {
    random_polytope_with(n, &mut ChaCha8Rng::seed_from_u64(seed), opts)
}

pub fn random_polytope_with<R: Rng>(n: usize, rng: &mut R, opts: RandomPolytopeOpts) -> Result<Polytope> {
    if !(2..=4).contains(&n) {
        return Err(Error::OutOfRange(format!("random polytopes need n in [2, 4], got {n}")));
    }
    if opts.max_pts < n + 1 || opts.max_coord < 1 {
        return Err(Error::OutOfRange("need max_pts >= n + 1 and max_coord >= 1".into()));
    }
    for _ in 0..MAX_ATTEMPTS {
        let count = rng.gen_range(n + 1..=opts.max_pts);
        let mut pts: Vec<Vector> = (0..count).map(|_| random_half_point(n, opts.max_coord, rng)).collect();
        if opts.contains_origin {
            pts.push(Vector::zeros(n));
        }
        let p = Polytope::hull(&pts)?;
        if p.is_full_dimensional() {
            return Ok(p);
        }
    }
    Err(Error::Degenerate(MAX_ATTEMPTS))
}

fn random_half_point<R: Rng>(n: usize, max_coord: i64, rng: &mut R) -> Vector {
    Vector::new((0..n).map(|_| rat(rng.gen_range(-2 * max_coord..=2 * max_coord), 2)).collect())
}

/// Nonzero rational with numerator in `[-5, 5]` and denominator in `[1, 4]`.
pub fn random_rat<R: Rng>(rng: &mut R) -> Rat {
    let mut num = rng.gen_range(-5i64..=4);
    if num >= 0 {
        num += 1;
    }
    rat(num, rng.gen_range(1..=4))
}

fn random_int_vector<R: Rng>(n: usize, bound: i64, rng: &mut R) -> Vector {
    loop {
        let v = Vector::new((0..n).map(|_| int(rng.gen_range(-bound..=bound))).collect());
        if !v.is_zero() {
            return v;
        }
    }
}

/// Strict convex combination of the vertices: an interior point of a
/// full-dimensional polytope.
fn random_interior_point<R: Rng>(p: &Polytope, rng: &mut R) -> Vector {
    let weights: Vec<i64> = p.vertices().iter().map(|_| rng.gen_range(1..=4)).collect();
    let total: i64 = weights.iter().sum();
    let mut c = Vector::zeros(p.ambient_dim());
    for (v, w) in p.vertices().iter().zip(&weights) {
        c += &v.scale(&rat(*w, total));
    }
    c
}

/// A hyperplane through an interior point of `p`; through the origin as well
/// when `through_origin` is set and `o ∈ P`.
fn random_splitting_hyperplane<R: Rng>(p: &Polytope, through_origin: bool, rng: &mut R) -> Hyperplane {
    let n = p.ambient_dim();
    let c = random_interior_point(p, rng);
    loop {
        let r = random_int_vector(n, 3, rng);
        if through_origin {
            // normal orthogonal to c, so H contains both o and c
            let m = &r.scale(&c.dot(&c)) - &c.scale(&r.dot(&c));
            if m.is_zero() {
                continue;
            }
            return Hyperplane::through_origin(m).expect("nonzero");
        }
        let offset = r.dot(&c);
        return Hyperplane::new(r, offset).expect("nonzero");
    }
}

fn opts_for(domain: Domain, rng: &mut impl Rng, n: usize) -> RandomPolytopeOpts {
    let contains_origin = match domain {
        Domain::ContainsOrigin => true,
        Domain::All => rng.gen_bool(0.5),
    };
    RandomPolytopeOpts { contains_origin, max_coord: 3, max_pts: n + 4 }
}

/// `Z(P) + Z(P ∩ H) = Z(P ∩ H+) + Z(P ∩ H-)` for random `P` and hyperplanes
/// through interior points.
pub fn check_valuation_cut(z: &Valuation, n: usize, seed: u64, cases: usize) -> CheckReport {
    check_valuation_cut_on(z, z.domain(), n, seed, cases)
}

/// As [`check_valuation_cut`], on an explicit domain. On polytopes containing
/// the origin every cut hyperplane passes through the origin.
pub fn check_valuation_cut_on(z: &Valuation, domain: Domain, n: usize, seed: u64, cases: usize) -> CheckReport {
    let suite = format!("valuation/{}/n={n}", z.name());
    run_suite(suite, seed, cases, |i, rng| {
        let opts = opts_for(domain, rng, n);
        let p = random_polytope_with(n, rng, opts)
            .map_err(|e| failure(format!("case {i}"), "a polytope", e))?;
        let through_origin = domain == Domain::ContainsOrigin || (opts.contains_origin && rng.gen_bool(0.5));
        let h = random_splitting_hyperplane(&p, through_origin, rng);
        let input = format!("case {i}: P={} H=<x,{}>={}", describe(&p), h.normal(), h.offset());
        let pieces = p.cut(&h).map_err(|e| failure(input.clone(), "cut", e))?;
        let (Some(plus), Some(minus), Some(section)) = (pieces.plus, pieces.minus, pieces.section) else {
            return Err(failure(input, "three nonempty pieces", "a missing piece"));
        };
        let lhs = &eval_or_witness(z, &p, &input)? + &eval_or_witness(z, &section, &input)?;
        let rhs = &eval_or_witness(z, &plus, &input)? + &eval_or_witness(z, &minus, &input)?;
        expect_eq(input, lhs, rhs)
    })
}

/// `Z(φP) = φ^{-t} Z(P)` (contravariant) or `Z(φP) = φ Z(P)` (covariant).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Variance {
    Contravariant,
    Covariant,
}

/// Random `P` against a random shear product and one matrix from the
/// determinant-one library per case.
pub fn check_contravariance(z: &Valuation, n: usize, seed: u64, cases: usize) -> CheckReport {
    check_variance_on(z, Variance::Contravariant, z.domain(), n, seed, cases)
}

pub fn check_variance_on(
    z: &Valuation,
    variance: Variance,
    domain: Domain,
    n: usize,
    seed: u64,
    cases: usize,
) -> CheckReport {
    let tag = match variance {
        Variance::Contravariant => "contravariance",
        Variance::Covariant => "covariance",
    };
    let sigmas = sigma_library(n);
    let suite = format!("{tag}/{}/n={n}", z.name());
    run_suite(suite, seed, cases, |i, rng| {
        let opts = opts_for(domain, rng, n);
        let p = random_polytope_with(n, rng, opts)
            .map_err(|e| failure(format!("case {i}"), "a polytope", e))?;
        let steps = rng.gen_range(1..=6);
        let shear = random_unimodular_with(n, steps, rng);
        let sigma = sigmas[i % sigmas.len()].clone();
        let base_input = format!("case {i}: P={}", describe(&p));
        let zp = eval_or_witness(z, &p, &base_input)?;
        for phi in [shear, sigma] {
            let input = format!("{base_input} phi={phi}");
            let image = eval_or_witness(z, &p.transform(&phi), &input)?;
            let expected = match variance {
                Variance::Contravariant => phi.inverse_transpose().expect("unimodular").apply(&zp),
                Variance::Covariant => phi.apply(&zp),
            };
            expect_eq(input, expected, image)?;
        }
        Ok(())
    })
}

/// Lower-dimensional polytope: random points in `R^k`, `k < n`, mapped by a
/// random unimodular matrix and translated.
fn random_lower_dim<R: Rng>(n: usize, rng: &mut R) -> Polytope {
    let k = rng.gen_range(0..n);
    let count = if k == 0 { 1 } else { rng.gen_range(k + 1..=k + 3) };
    let pts: Vec<Vector> = (0..count)
        .map(|_| {
            let mut coords = random_half_point(k.max(1), 3, rng).into_coords();
            coords.truncate(k);
            coords.resize(n, Rat::zero());
            Vector::new(coords)
        })
        .collect();
    let map = random_unimodular_with(n, rng.gen_range(0..=5), rng);
    let shift = if rng.gen_bool(0.5) { Vector::zeros(n) } else { random_half_point(n, 2, rng) };
    Polytope::hull(&pts).expect("nonempty").transform(&map).translate(&shift)
}

/// `fv_ζ(P) = 0` for lower-dimensional `P`, for every ζ in `zetas`.
pub fn check_simplicity(n: usize, seed: u64, cases: usize, zetas: &[Zeta]) -> CheckReport {
    check_simplicity_with(n, seed, cases, zetas, SupportConvention::Absolute)
}

pub fn check_simplicity_with(
    n: usize,
    seed: u64,
    cases: usize,
    zetas: &[Zeta],
    convention: SupportConvention,
) -> CheckReport {
    let suite = match convention {
        SupportConvention::Absolute => format!("simplicity/n={n}"),
        SupportConvention::Signed => format!("simplicity-signed/n={n}"),
    };
    run_suite(suite, seed, cases, |i, rng| {
        let p = random_lower_dim(n, rng);
        let input = format!("case {i}: P={} (dim {})", describe(&p), p.affine_dim());
        if p.is_full_dimensional() {
            return Err(failure(input, "lower-dimensional input", "full-dimensional"));
        }
        for z in zetas {
            expect_eq(format!("{input} {z}"), Vector::zeros(n), facet_vector_with(&p, z, convention))?;
        }
        Ok(())
    })
}

/// `Σ_F vector_area(P, F) = 0` on random full-dimensional polytopes.
pub fn check_minkowski(n: usize, seed: u64, cases: usize) -> CheckReport {
    run_suite(format!("minkowski/n={n}"), seed, cases, |i, rng| {
        let opts = RandomPolytopeOpts { contains_origin: rng.gen_bool(0.5), max_coord: 3, max_pts: n + 6 };
        let p = random_polytope_with(n, rng, opts)
            .map_err(|e| failure(format!("case {i}"), "a polytope", e))?;
        let facets = p.facets().expect("full-dimensional");
        let mut sum = Vector::zeros(n);
        for f in facets {
            sum += &p.vector_area(f);
        }
        expect_eq(format!("case {i}: P={}", describe(&p)), Vector::zeros(n), sum)
    })
}

fn sample_2d_with_origin<R: Rng>(kind: usize, rng: &mut R) -> Polytope {
    let two = |rng: &mut R| rat(rng.gen_range(1..=6), 2);
    loop {
        let mut pts: Vec<Vector> = match kind {
            // anywhere, plus the origin
            0 => (0..rng.gen_range(3..=6)).map(|_| random_half_point(2, 3, rng)).collect(),
            // closed first quadrant: o is a vertex
            1 => (0..rng.gen_range(2..=5))
                .map(|_| Vector::new(vec![rat(rng.gen_range(0..=6), 2), rat(rng.gen_range(0..=6), 2)]))
                .collect(),
            // upper half plane with o inside the bottom edge
            2 => {
                let mut v: Vec<Vector> = (0..rng.gen_range(1..=4))
                    .map(|_| Vector::new(vec![rat(rng.gen_range(-6..=6), 2), two(rng)]))
                    .collect();
                v.push(Vector::new(vec![-two(rng), Rat::zero()]));
                v.push(Vector::new(vec![two(rng), Rat::zero()]));
                v
            }
            // degenerate: {o}, a segment through o, or a segment ending at o
            _ => {
                let d = random_int_vector(2, 3, rng);
                match rng.gen_range(0..3) {
                    0 => vec![],
                    1 => vec![d.scale(&two(rng)), d.scale(&-two(rng))],
                    _ => vec![d],
                }
            }
        };
        pts.push(Vector::zeros(2));
        let p = Polytope::hull(&pts).expect("nonempty");
        if kind == 3 || p.is_full_dimensional() {
            let map = random_unimodular_with(2, rng.gen_range(0..=4), rng);
            return p.transform(&map);
        }
    }
}

/// `fv_ζ(P) = ½ ρ v_o,ζ(P)` on planar polytopes containing the origin.
pub fn check_hfv(seed: u64, cases: usize) -> CheckReport {
    run_suite("hfv/n=2".into(), seed, cases, |i, rng| {
        let p = sample_2d_with_origin(i % 4, rng);
        let z = Zeta::new(random_rat(rng));
        let input = format!("case {i}: P={} {z}", describe(&p));
        let vo = vo_zeta(&p, &z).map_err(|e| failure(input.clone(), "a value", e))?;
        let rhs = rotate90(&vo).expect("planar").scale(&rat(1, 2));
        expect_eq(input, facet_vector(&p, &z), rhs)
    })
}

/// `ρ ∘ mv` is contravariant and `ρ⁻¹ ∘ fv_ζ` is covariant.
pub fn check_cocontra(seed: u64, cases: usize) -> CheckReport {
    let z = Zeta::new(rat(3, 2));
    let parts = vec![
        check_variance_on(&Valuation::RotatedMoment, Variance::Contravariant, Domain::All, 2, seed, cases),
        check_variance_on(&Valuation::UnrotatedFacetVector(z), Variance::Covariant, Domain::All, 2, seed, cases),
    ];
    CheckReport::merge("cocontra/n=2".into(), seed, parts)
}

/// Each piece of the `φ₁/ψ₁` cut of `T^i`, both as raw inclusion-exclusion
/// and in the contravariant matrix form.
pub fn check_extk(z: &Valuation, n: usize, lambdas: &[Rat]) -> CheckReport {
    let mut witnesses = Vec::new();
    let mut cases = 0;
    for i in 2..n {
        for lambda in lambdas {
            cases += 1;
            if let Err(w) = extk_case(z, n, i, lambda) {
                witnesses.push(w);
            }
        }
    }
    witnesses.sort();
    CheckReport {
        suite: format!("extk/{}/n={n}", z.name()),
        seed: 0,
        cases,
        failures: witnesses.len(),
        witnesses,
        expected_fail: false,
    }
}

fn extk_case(z: &Valuation, n: usize, i: usize, lambda: &Rat) -> CaseResult {
    let input = format!("i={i} lambda={lambda}");
    let err = |e: Error| failure(input.clone(), "a value", e);
    let t = standard_simplex(i, n).map_err(err)?;
    let hat = hat_simplex(i, n).map_err(err)?;
    let phi = make_phi1(lambda, n).map_err(err)?;
    let psi = make_psi1(lambda, n).map_err(err)?;
    let pieces = t.cut(&splitting_plane(lambda, n)).map_err(err)?;
    check_pieces(&input, &pieces, &t.transform(&psi), &t.transform(&phi), &hat.transform(&phi))?;

    let zt = eval_or_witness(z, &t, &input)?;
    let zs = eval_or_witness(z, pieces.section.as_ref().expect("checked"), &input)?;
    let zp = eval_or_witness(z, pieces.plus.as_ref().expect("checked"), &input)?;
    let zm = eval_or_witness(z, pieces.minus.as_ref().expect("checked"), &input)?;
    expect_eq(format!("{input} inclusion-exclusion"), &zp + &zm, &zt + &zs)?;

    let phi_it = phi.inverse_transpose().expect("invertible");
    let psi_it = psi.inverse_transpose().expect("invertible");
    let lhs = phi_it.add(&psi_it).sub(&Matrix::identity(n)).apply(&zt);
    let rhs = phi_it.apply(&eval_or_witness(z, &hat, &input)?);
    expect_eq(format!("{input} matrix form"), rhs, lhs)
}

/// `H` with normal `(1-λ)e_1 - λe_2` through the origin.
fn splitting_plane(lambda: &Rat, n: usize) -> Hyperplane {
    let mut normal = vec![Rat::zero(); n];
    normal[0] = Rat::one() - lambda;
    normal[1] = -lambda.clone();
    Hyperplane::through_origin(Vector::new(normal)).expect("nonzero for lambda in (0,1)")
}

fn check_pieces(
    input: &str,
    pieces: &crate::polytope::CutPieces,
    plus: &Polytope,
    minus: &Polytope,
    section: &Polytope,
) -> CaseResult {
    let named = [("H+", &pieces.plus, plus), ("H-", &pieces.minus, minus), ("H", &pieces.section, section)];
    for (name, got, want) in named {
        match got {
            Some(g) if g == want => {}
            Some(g) => return Err(failure(format!("{input} piece {name}"), describe(want), describe(g))),
            None => return Err(failure(format!("{input} piece {name}"), describe(want), "empty")),
        }
    }
    Ok(())
}

/// The `φ₂/ψ₂` decomposition of `sT^n`:
/// `Z(sT^n) + Z(φ₂ s T̂^{n-1}) = Z(φ₂ sT^n) + Z(ψ₂ sT^n)`, evaluated both on
/// the transformed simplices and on the pieces returned by `cut`.
pub fn check_extn(z: &Valuation, n: usize, lambdas: &[Rat], scales: &[Rat]) -> CheckReport {
    let mut witnesses = Vec::new();
    let mut cases = 0;
    for lambda in lambdas {
        for s in scales {
            cases += 1;
            if let Err(w) = extn_case(z, n, lambda, s) {
                witnesses.push(w);
            }
        }
    }
    witnesses.sort();
    CheckReport {
        suite: format!("extn/{}/n={n}", z.name()),
        seed: 0,
        cases,
        failures: witnesses.len(),
        witnesses,
        expected_fail: false,
    }
}

fn extn_case(z: &Valuation, n: usize, lambda: &Rat, s: &Rat) -> CaseResult {
    let input = format!("lambda={lambda} s={s}");
    let err = |e: Error| failure(input.clone(), "a value", e);
    let t = standard_simplex(n, n).map_err(err)?.scale(s);
    let hat = hat_simplex(n, n).map_err(err)?.scale(s);
    let phi = make_phi2(lambda, n).map_err(err)?;
    let psi = make_psi2(lambda, n).map_err(err)?;
    let (phi_t, psi_t, phi_hat) = (t.transform(&phi), t.transform(&psi), hat.transform(&phi));
    let pieces = t.cut(&splitting_plane(lambda, n)).map_err(err)?;
    check_pieces(&input, &pieces, &psi_t, &phi_t, &phi_hat)?;

    let zt = eval_or_witness(z, &t, &input)?;
    let by_map = (
        &zt + &eval_or_witness(z, &phi_hat, &input)?,
        &eval_or_witness(z, &phi_t, &input)? + &eval_or_witness(z, &psi_t, &input)?,
    );
    expect_eq(format!("{input} transformed simplices"), by_map.1, by_map.0.clone())?;
    let by_cut = (
        &zt + &eval_or_witness(z, pieces.section.as_ref().expect("checked"), &input)?,
        &eval_or_witness(z, pieces.minus.as_ref().expect("checked"), &input)?
            + &eval_or_witness(z, pieces.plus.as_ref().expect("checked"), &input)?,
    );
    expect_eq(format!("{input} cut pieces"), by_cut.1, by_cut.0)
}

fn random_zeta<R: Rng>(rng: &mut R) -> Zeta {
    Zeta::new(random_rat(rng))
}

/// Parameter draws for the four classified families.
pub fn random_theorem_valuations(seed: u64) -> Vec<(Valuation, Domain, usize)> {
    let mut rng = case_rng(seed, u64::MAX);
    let r = &mut rng;
    vec![
        (Valuation::FacetVector(random_zeta(r)), Domain::ContainsOrigin, 3),
        (
            Valuation::OriginComposite2D { zeta: random_zeta(r), c1: random_rat(r), c2: random_rat(r) },
            Domain::ContainsOrigin,
            2,
        ),
        (Valuation::GeneralComposite { zeta1: random_zeta(r), zeta2: random_zeta(r) }, Domain::All, 3),
        (
            Valuation::GeneralComposite2D(Params2D {
                c1: random_rat(r),
                c2: random_rat(r),
                c1_tilde: random_rat(r),
                c2_tilde: random_rat(r),
                zeta1: random_zeta(r),
                zeta2: random_zeta(r),
            }),
            Domain::All,
            2,
        ),
    ]
}

/// Each composite passes the valuation and contravariance suites on its domain.
pub fn check_theorem_formulas(seed: u64, cases: usize) -> CheckReport {
    let parts = random_theorem_valuations(seed)
        .into_iter()
        .flat_map(|(z, domain, n)| {
            [
                check_valuation_cut_on(&z, domain, n, seed, cases),
                check_variance_on(&z, Variance::Contravariant, domain, n, seed, cases),
            ]
        })
        .collect();
    CheckReport::merge("theorems".into(), seed, parts)
}

/// Suites that must fail; a pass here means the positive suites are vacuous.
pub fn negative_controls(seed: u64, cases: usize) -> Vec<CheckReport> {
    let z = [Zeta::identity()];
    vec![
        check_valuation_cut(&Valuation::VertexCount, 2, seed, cases).negated(),
        check_valuation_cut(&Valuation::VertexCount, 3, seed, cases).negated(),
        check_contravariance(&Valuation::Moment, 2, seed, cases).negated(),
        check_contravariance(&Valuation::Moment, 3, seed, cases).negated(),
        check_simplicity_with(3, seed, cases, &z, SupportConvention::Signed).negated(),
    ]
}

pub mod oracle {
    //! Brute-force references, independent of the incremental hull.

    use super::*;
    use crate::linear::{cross, rank};

    /// Facets as `(primitive normal, support, sorted vertex indices)` by
    /// scanning every affinely independent `n`-subset of the vertices.
    pub fn brute_force_facets(vertices: &[Vector]) -> Vec<(Vector, Rat, Vec<usize>)> {
        let n = vertices[0].dim();
        let mut out: Vec<(Vector, Rat, Vec<usize>)> = Vec::new();
        for combo in combinations(vertices.len(), n) {
            let base = &vertices[combo[0]];
            let dirs: Vec<Vector> = combo[1..].iter().map(|&i| &vertices[i] - base).collect();
            let normal = primitive_rational(cross(&dirs));
            if normal.is_zero() {
                continue;
            }
            let h = normal.dot(base);
            let vals: Vec<Rat> = vertices.iter().map(|v| normal.dot(v) - &h).collect();
            let oriented = if vals.iter().all(|x| !x.is_positive()) {
                normal
            } else if vals.iter().all(|x| !x.is_negative()) {
                -normal
            } else {
                continue;
            };
            if out.iter().any(|(m, _, _)| *m == oriented) {
                continue;
            }
            let support = oriented.dot(base);
            let ids = (0..vertices.len()).filter(|&j| oriented.dot(&vertices[j]) == support).collect();
            out.push((oriented, support, ids));
        }
        out.sort_by(|a, b| a.0.cmp(&b.0));
        out
    }

    fn primitive_rational(v: Vector) -> Vector {
        use num_integer::Integer;
        let lcm = v.coords().iter().fold(num_bigint::BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let ints: Vec<num_bigint::BigInt> = v.coords().iter().map(|x| (x * &lcm).to_integer()).collect();
        let g = ints.iter().fold(num_bigint::BigInt::zero(), |g, x| g.gcd(x));
        if g.is_zero() {
            return v;
        }
        Vector::new(ints.into_iter().map(|x| Rat::from_integer(x / &g)).collect())
    }

    pub fn combinations(m: usize, k: usize) -> Vec<Vec<usize>> {
        fn go(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == k {
                out.push(cur.clone());
                return;
            }
            for i in start..m {
                cur.push(i);
                go(i + 1, m, k, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(0, m, k, &mut Vec::new(), &mut out);
        out
    }

    /// Volume as a sum of cones from the last vertex over every facet,
    /// `(1/n) Σ <a_F u_F, x_F - q>`.
    pub fn volume_from_last_vertex(p: &Polytope) -> Rat {
        let n = p.ambient_dim();
        let q = p.vertices().last().expect("nonempty");
        let mut total = Rat::zero();
        for f in p.facets().expect("full-dimensional") {
            let x = &p.vertices()[f.vertex_ids[0]];
            total += p.vector_area(f).dot(&(x - q));
        }
        total / Rat::from_integer(n.into())
    }

    /// Whether `p` is a convex combination of at most `dim + 1` points of `others`.
    pub fn in_hull_of(p: &Vector, others: &[Vector]) -> bool {
        let n = p.dim();
        for k in 1..=(n + 1).min(others.len()) {
            for combo in combinations(others.len(), k) {
                let pts: Vec<&Vector> = combo.iter().map(|&i| &others[i]).collect();
                if let Some(w) = barycentric(p, &pts) {
                    if w.iter().all(|x| !x.is_negative()) {
                        return true;
                    }
                }
            }
        }
        false
    }

    /// Affine weights of `p` over affinely independent `pts`, if `p` is in their span.
    fn barycentric(p: &Vector, pts: &[&Vector]) -> Option<Vec<Rat>> {
        let base = pts[0];
        let dirs: Vec<Vector> = pts[1..].iter().map(|v| *v - base).collect();
        if rank(&dirs) != dirs.len() {
            return None;
        }
        // least-squares normal equations have a unique solution; verify it exactly
        let k = dirs.len();
        let target = p - base;
        let mut a: Vec<Vec<Rat>> = (0..k)
            .map(|i| {
                let mut row: Vec<Rat> = (0..k).map(|j| dirs[i].dot(&dirs[j])).collect();
                row.push(dirs[i].dot(&target));
                row
            })
            .collect();
        for col in 0..k {
            let piv = (col..k).find(|&r| !a[r][col].is_zero())?;
            a.swap(col, piv);
            let pv = a[col][col].clone();
            for j in col..=k {
                a[col][j] = &a[col][j] / &pv;
            }
            for r in 0..k {
                if r != col && !a[r][col].is_zero() {
                    let f = a[r][col].clone();
                    for j in col..=k {
                        let t = &f * &a[col][j];
                        a[r][j] -= t;
                    }
                }
            }
        }
        let t: Vec<Rat> = (0..k).map(|i| a[i][k].clone()).collect();
        let mut recon = base.clone();
        for (d, ti) in dirs.iter().zip(&t) {
            recon += &d.scale(ti);
        }
        if recon != *p {
            return None;
        }
        let mut w = vec![Rat::one() - t.iter().fold(Rat::zero(), |a, b| a + b)];
        w.extend(t);
        Some(w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_polytopes_are_deterministic() {
        let opts = RandomPolytopeOpts::default();
        assert_eq!(random_polytope(2, 11, opts).unwrap(), random_polytope(2, 11, opts).unwrap());
        let with_o = RandomPolytopeOpts { contains_origin: true, ..opts };
        for seed in 0..10 {
            assert!(random_polytope(3, seed, with_o).unwrap().contains_origin());
        }
        let p = random_polytope(3, 5, RandomPolytopeOpts { max_pts: 8, ..opts }).unwrap();
        assert_eq!(p.affine_dim(), 3);
        assert!(random_polytope(5, 0, opts).is_err());
    }

    #[test]
    fn small_suites_pass() {
        let fv = Valuation::FacetVector(Zeta::identity());
        assert!(check_valuation_cut(&fv, 2, 1, 20).passed());
        assert!(check_valuation_cut(&Valuation::Moment, 2, 1, 20).passed());
        assert!(check_contravariance(&fv, 3, 1, 10).passed());
        assert!(check_minkowski(3, 1, 10).passed());
        assert!(check_hfv(1, 20).passed());
        assert!(check_simplicity(3, 1, 20, &[Zeta::identity()]).passed());
    }

    #[test]
    fn controls_fail() {
        for r in negative_controls(3, 20) {
            assert!(r.failures > 0, "{} did not fail", r.suite);
            assert!(r.passed());
        }
    }

    #[test]
    fn reports_are_reproducible() {
        let a = serde_json::to_string(&check_contravariance(&Valuation::Moment, 2, 9, 15)).unwrap();
        let b = serde_json::to_string(&check_contravariance(&Valuation::Moment, 2, 9, 15)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn brute_force_matches_on_triangle() {
        let t2 = standard_simplex(2, 2).unwrap();
        let f = oracle::brute_force_facets(t2.vertices());
        assert_eq!(f.len(), 3);
        assert_eq!(f[2].0, Vector::from_ints(&[1, 1]));
        assert_eq!(f[2].1, int(1));
        assert!(oracle::in_hull_of(&Vector::new(vec![rat(1, 4), rat(1, 4)]), t2.vertices()));
        assert!(!oracle::in_hull_of(&Vector::from_ints(&[1, 1]), t2.vertices()));
    }
}
