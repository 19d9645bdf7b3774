//! Random geodesic drawings: uniform points on the sphere joined by minor
//! great-circle arcs, and their antipodal quotient on the projective plane
//! joined by shortest paths.
//!
//! Estimates are plain Monte Carlo with double precision; the statistical
//! targets (`1/8` for the sphere, `1/pi^2` for the projective plane) come
//! with four-sigma tolerances, so floating point is appropriate here, unlike
//! in the combinatorial engine.
//!
//! Reproducibility: sampling runs on ChaCha8 streams derived from the user
//! seed, one stream per fixed-size batch (or per drawing), and results merge
//! by exact integer or pairwise float summation in batch order. The estimate
//! therefore depends only on `(model, samples, seed)`, not on thread count.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;
use thiserror::Error;

pub const MC_SCHEMA: &str = "projcross-mc/1";

const SAMPLE_BATCH: u64 = 8192;

/// Tolerance below which a configuration counts as degenerate and is
/// resampled: nearly coincident or antipodal arc endpoints, nearly identical
/// great circles, or a projective lift pair within `1e-12` of orthogonal.
pub const DEGENERACY_EPS: f64 = 1e-12;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GeodesicError {
    #[error("degenerate configuration (coincident/antipodal endpoints or aligned circles)")]
    Degenerate,
    #[error("at least one drawing is required")]
    NoDrawings,
    #[error("need at least 4 vertices, got {0}")]
    TooFewVertices(u32),
    #[error("at least one sample is required")]
    NoSamples,
}

/// Unit vector on the sphere.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpherePoint(pub [f64; 3]);

impl SpherePoint {
    /// Uniform point via a normalized 3-dimensional standard normal vector.
    pub fn sample<R: Rng + ?Sized>(rng: &mut R) -> SpherePoint {
        loop {
            let v = [
                rng.sample::<f64, _>(StandardNormal),
                rng.sample::<f64, _>(StandardNormal),
                rng.sample::<f64, _>(StandardNormal),
            ];
            let norm = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
            if norm > 1e-6 {
                return SpherePoint([v[0] / norm, v[1] / norm, v[2] / norm]);
            }
        }
    }

    pub fn dot(&self, other: &SpherePoint) -> f64 {
        let (a, b) = (self.0, other.0);
        a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
    }

    pub fn cross(&self, other: &SpherePoint) -> [f64; 3] {
        let (a, b) = (self.0, other.0);
        [
            a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0],
        ]
    }

    pub fn antipode(&self) -> SpherePoint {
        SpherePoint([-self.0[0], -self.0[1], -self.0[2]])
    }

    pub fn norm(&self) -> f64 {
        self.dot(self).sqrt()
    }
}

fn cross3(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn dot3(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn norm3(a: [f64; 3]) -> f64 {
    dot3(a, a).sqrt()
}

/// Point of the projective plane: an antipodal pair, stored through the
/// representative whose first nonzero coordinate is positive.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ProjectivePoint(SpherePoint);

impl ProjectivePoint {
    pub fn from_sphere(p: SpherePoint) -> ProjectivePoint {
        let v = p.0;
        for c in v {
            if c > 0.0 {
                return ProjectivePoint(p);
            }
            if c < 0.0 {
                return ProjectivePoint(p.antipode());
            }
        }
        ProjectivePoint(p)
    }

    pub fn representative(&self) -> SpherePoint {
        self.0
    }

    pub fn sample<R: Rng + ?Sized>(rng: &mut R) -> ProjectivePoint {
        ProjectivePoint::from_sphere(SpherePoint::sample(rng))
    }
}

/// Whether `q` lies strictly inside the minor arc from `a` to `b`, given the
/// arc's great-circle normal `n = a x b`.
fn strictly_inside_arc(q: [f64; 3], a: &SpherePoint, b: &SpherePoint, n: [f64; 3]) -> bool {
    dot3(cross3(a.0, q), n) > 0.0 && dot3(cross3(q, b.0), n) > 0.0
}

/// Whether the minor arcs `a1 b1` and `a2 b2` intersect.
///
/// The great circles of the arcs meet in the two directions `±(n1 x n2)`; the
/// arcs cross exactly when one of those directions lies strictly inside both.
/// Coincident great circles with disjoint arcs report no crossing; coincident
/// circles with touching or overlapping arcs are degenerate, as are
/// coincident or antipodal arc endpoints.
pub fn arcs_cross_sphere(
    a1: &SpherePoint,
    b1: &SpherePoint,
    a2: &SpherePoint,
    b2: &SpherePoint,
) -> Result<bool, GeodesicError> {
    let n1 = a1.cross(b1);
    let n2 = a2.cross(b2);
    if norm3(n1) < DEGENERACY_EPS || norm3(n2) < DEGENERACY_EPS {
        return Err(GeodesicError::Degenerate);
    }
    let d = cross3(n1, n2);
    let dn = norm3(d);
    if dn < DEGENERACY_EPS {
        // same great circle: disjoint arcs do not cross, anything else is a
        // tangential contact we refuse to classify
        let on_arc1 = |p: &SpherePoint| {
            strictly_inside_arc(p.0, a1, b1, n1)
        };
        if on_arc1(a2) || on_arc1(b2) || strictly_inside_arc(a1.0, a2, b2, n2) {
            return Err(GeodesicError::Degenerate);
        }
        return Ok(false);
    }
    let q = [d[0] / dn, d[1] / dn, d[2] / dn];
    let anti = [-q[0], -q[1], -q[2]];
    for cand in [q, anti] {
        if strictly_inside_arc(cand, a1, b1, n1) && strictly_inside_arc(cand, a2, b2, n2) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Lifts two projective points to sphere representatives at spherical
/// distance below `pi/2`.
fn lift_pair(p: &ProjectivePoint, q: &ProjectivePoint) -> Result<(SpherePoint, SpherePoint), GeodesicError> {
    let u = p.representative();
    let mut w = q.representative();
    let d = u.dot(&w);
    if d.abs() < DEGENERACY_EPS {
        return Err(GeodesicError::Degenerate);
    }
    if d < 0.0 {
        w = w.antipode();
    }
    Ok((u, w))
}

/// Whether the shortest projective paths `p1 q1` and `p2 q2` cross.
///
/// Each path lifts to a minor arc shorter than a quarter turn; two paths
/// cross on the quotient exactly when the first arc meets the second arc or
/// its antipodal image.
pub fn paths_cross_projective(
    p1: &ProjectivePoint,
    q1: &ProjectivePoint,
    p2: &ProjectivePoint,
    q2: &ProjectivePoint,
) -> Result<bool, GeodesicError> {
    let (a1, b1) = lift_pair(p1, q1)?;
    let (a2, b2) = lift_pair(p2, q2)?;
    if arcs_cross_sphere(&a1, &b1, &a2, &b2)? {
        return Ok(true);
    }
    arcs_cross_sphere(&a1, &b1, &a2.antipode(), &b2.antipode())
}

/// Which random model to sample.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Model {
    Sphere,
    Projective,
}

impl Model {
    pub fn name(self) -> &'static str {
        match self {
            Model::Sphere => "sphere",
            Model::Projective => "projective",
        }
    }

    /// Pair-crossing probability of the model.
    pub fn pair_probability(self) -> f64 {
        match self {
            Model::Sphere => 0.125,
            Model::Projective => 1.0 / (std::f64::consts::PI * std::f64::consts::PI),
        }
    }
}

/// A Monte Carlo estimate with its sampling configuration.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct McEstimate {
    pub model: &'static str,
    pub samples: u64,
    pub mean: f64,
    pub std_error: f64,
    pub seed: u64,
    /// Reference value the estimate should approach, when one is known.
    pub target: Option<f64>,
    /// Degenerate configurations that were redrawn.
    pub resamples: u64,
}

impl McEstimate {
    pub fn to_json(&self) -> serde_json::Value {
        let mut v = serde_json::to_value(self).expect("estimate serializes");
        insert_schema(&mut v);
        v
    }

    pub fn to_csv(&self) -> String {
        format!(
            "model,samples,mean,std_error,seed,target,resamples\n{},{},{},{},{},{},{}\n",
            self.model,
            self.samples,
            self.mean,
            self.std_error,
            self.seed,
            self.target.map_or(String::new(), |t| t.to_string()),
            self.resamples,
        )
    }

    /// Distance from the target measured in standard errors.
    pub fn sigmas_from_target(&self) -> Option<f64> {
        self.target
            .map(|t| (self.mean - t).abs() / self.std_error)
    }
}

fn insert_schema(v: &mut serde_json::Value) {
    if let serde_json::Value::Object(map) = v {
        map.insert("schema".into(), json!(MC_SCHEMA));
    }
}

/// One four-point crossing experiment; `Ok` is the indicator, `Err` asks for
/// a redraw.
fn trial<R: Rng + ?Sized>(model: Model, rng: &mut R) -> Result<bool, GeodesicError> {
    match model {
        Model::Sphere => {
            let pts: Vec<SpherePoint> = (0..4).map(|_| SpherePoint::sample(rng)).collect();
            arcs_cross_sphere(&pts[0], &pts[1], &pts[2], &pts[3])
        }
        Model::Projective => {
            let pts: Vec<ProjectivePoint> =
                (0..4).map(|_| ProjectivePoint::sample(rng)).collect();
            paths_cross_projective(&pts[0], &pts[1], &pts[2], &pts[3])
        }
    }
}

/// Estimates the probability that two independent random geodesics cross.
///
/// Deterministic for fixed `(model, samples, seed)` regardless of the number
/// of worker threads.
pub fn estimate_pair_probability(
    model: Model,
    samples: u64,
    seed: u64,
) -> Result<McEstimate, GeodesicError> {
    if samples == 0 {
        return Err(GeodesicError::NoSamples);
    }
    let batches = samples.div_ceil(SAMPLE_BATCH);
    let (hits, resamples) = (0..batches)
        .into_par_iter()
        .map(|batch| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(batch);
            let lo = batch * SAMPLE_BATCH;
            let hi = (lo + SAMPLE_BATCH).min(samples);
            let mut hits = 0u64;
            let mut resamples = 0u64;
            for _ in lo..hi {
                let crossed = loop {
                    match trial(model, &mut rng) {
                        Ok(c) => break c,
                        Err(_) => resamples += 1,
                    }
                };
                hits += u64::from(crossed);
            }
            (hits, resamples)
        })
        .reduce(|| (0, 0), |x, y| (x.0 + y.0, x.1 + y.1));

    let n = samples as f64;
    let mean = hits as f64 / n;
    let sample_var = if samples > 1 {
        mean * (1.0 - mean) * n / (n - 1.0)
    } else {
        0.0
    };
    Ok(McEstimate {
        model: model.name(),
        samples,
        mean,
        std_error: (sample_var / n).sqrt(),
        seed,
        target: Some(model.pair_probability()),
        resamples,
    })
}

/// Expected number of crossings over whole random drawings of `K_n`: draws
/// `drawings` independent drawings, counts crossings over all pairs of edges
/// with four distinct endpoints, and averages.
pub fn estimate_expected_crossings(
    model: Model,
    n: u32,
    drawings: u64,
    seed: u64,
) -> Result<McEstimate, GeodesicError> {
    if drawings == 0 {
        return Err(GeodesicError::NoDrawings);
    }
    if n < 4 {
        return Err(GeodesicError::TooFewVertices(n));
    }
    let counts: Vec<(u64, u64)> = (0..drawings)
        .into_par_iter()
        .map(|d| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(d);
            count_one_drawing(model, n, &mut rng)
        })
        .collect();

    let total_resamples: u64 = counts.iter().map(|&(_, r)| r).sum();
    let values: Vec<f64> = counts.iter().map(|&(c, _)| c as f64).collect();
    let dn = drawings as f64;
    let mean = values.iter().sum::<f64>() / dn;
    let var = if drawings > 1 {
        values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / (dn - 1.0)
    } else {
        0.0
    };
    let pairs = 3.0 * binom4(n);
    Ok(McEstimate {
        model: model.name(),
        samples: drawings,
        mean,
        std_error: (var / dn).sqrt(),
        seed,
        target: Some(pairs * model.pair_probability()),
        resamples: total_resamples,
    })
}

fn binom4(n: u32) -> f64 {
    let n = f64::from(n);
    n * (n - 1.0) * (n - 2.0) * (n - 3.0) / 24.0
}

fn count_one_drawing<R: Rng + ?Sized>(model: Model, n: u32, rng: &mut R) -> (u64, u64) {
    let n = n as usize;
    let mut resamples = 0u64;
    loop {
        let crossings = match model {
            Model::Sphere => {
                let pts: Vec<SpherePoint> = (0..n).map(|_| SpherePoint::sample(rng)).collect();
                count_drawing_crossings(n, |i, j, k, l| {
                    arcs_cross_sphere(&pts[i], &pts[j], &pts[k], &pts[l])
                })
            }
            Model::Projective => {
                let pts: Vec<ProjectivePoint> =
                    (0..n).map(|_| ProjectivePoint::sample(rng)).collect();
                count_drawing_crossings(n, |i, j, k, l| {
                    paths_cross_projective(&pts[i], &pts[j], &pts[k], &pts[l])
                })
            }
        };
        match crossings {
            Ok(c) => return (c, resamples),
            // measure-zero configuration somewhere in the drawing: redraw it
            Err(_) => resamples += 1,
        }
    }
}

fn count_drawing_crossings<F>(n: usize, mut cross: F) -> Result<u64, GeodesicError>
where
    F: FnMut(usize, usize, usize, usize) -> Result<bool, GeodesicError>,
{
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
        .collect();
    let mut total = 0u64;
    for (x, e1) in edges.iter().enumerate() {
        for e2 in &edges[x + 1..] {
            if e1.0 == e2.0 || e1.0 == e2.1 || e1.1 == e2.0 || e1.1 == e2.1 {
                continue;
            }
            if cross(e1.0, e1.1, e2.0, e2.1)? {
                total += 1;
            }
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(x: f64, y: f64, z: f64) -> SpherePoint {
        let n = (x * x + y * y + z * z).sqrt();
        SpherePoint([x / n, y / n, z / n])
    }

    #[test]
    fn crossing_example_straddle() {
        // second arc straddles the first arc's great circle near an interior
        // point of the first arc
        let a1 = sp(1.0, 0.0, 0.0);
        let b1 = sp(-1e-3, 1.0, 0.0);
        let a2 = sp(0.7, 0.7, 0.1);
        let b2 = sp(0.7, 0.7, -0.1);
        assert_eq!(arcs_cross_sphere(&a1, &b1, &a2, &b2), Ok(true));
    }

    #[test]
    fn disjoint_arcs_on_common_circle() {
        // both arcs lie on one great circle but far apart: no crossing
        let n = sp(0.0, 0.0, 1.0);
        let e = sp(1.0, 0.0, 0.0);
        let s = sp(0.0, 0.0, -1.0);
        let w = sp(-1.0, 0.0, 0.0);
        assert_eq!(arcs_cross_sphere(&n, &e, &s, &w), Ok(false));
    }

    #[test]
    fn coincident_endpoints_are_degenerate() {
        let a = sp(1.0, 0.0, 0.0);
        let b = sp(0.0, 1.0, 0.0);
        assert_eq!(
            arcs_cross_sphere(&a, &a, &a, &b),
            Err(GeodesicError::Degenerate)
        );
        assert_eq!(
            arcs_cross_sphere(&a, &a.antipode(), &a, &b),
            Err(GeodesicError::Degenerate)
        );
    }

    #[test]
    fn quotient_agrees_locally_with_sphere() {
        // all four points in a small cap: quotient adds nothing
        let p = [
            sp(0.9, 0.1, 0.4),
            sp(0.95, -0.05, 0.3),
            sp(0.92, 0.08, 0.35),
            sp(0.97, 0.02, 0.25),
        ];
        let q: Vec<ProjectivePoint> = p.iter().map(|&x| ProjectivePoint::from_sphere(x)).collect();
        let direct = arcs_cross_sphere(&p[0], &p[1], &p[2], &p[3]).unwrap();
        let quotient = paths_cross_projective(&q[0], &q[1], &q[2], &q[3]).unwrap();
        assert_eq!(direct, quotient);
    }

    #[test]
    fn rotation_invariance() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        // Rodrigues rotation around a fixed axis by a fixed angle
        let axis = sp(0.3, -0.5, 0.8);
        let theta = 1.234f64;
        let rotate = |p: &SpherePoint| {
            let (s, c) = theta.sin_cos();
            let kxp = cross3(axis.0, p.0);
            let kdp = dot3(axis.0, p.0);
            SpherePoint([
                p.0[0] * c + kxp[0] * s + axis.0[0] * kdp * (1.0 - c),
                p.0[1] * c + kxp[1] * s + axis.0[1] * kdp * (1.0 - c),
                p.0[2] * c + kxp[2] * s + axis.0[2] * kdp * (1.0 - c),
            ])
        };
        for _ in 0..200 {
            let pts: Vec<SpherePoint> = (0..4).map(|_| SpherePoint::sample(&mut rng)).collect();
            let base = arcs_cross_sphere(&pts[0], &pts[1], &pts[2], &pts[3]);
            let rot: Vec<SpherePoint> = pts.iter().map(&rotate).collect();
            let moved = arcs_cross_sphere(&rot[0], &rot[1], &rot[2], &rot[3]);
            assert_eq!(base.is_ok(), moved.is_ok());
            if let (Ok(x), Ok(y)) = (base, moved) {
                assert_eq!(x, y);
            }
        }
    }

    #[test]
    fn predicate_symmetric_in_the_arcs() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..500 {
            let p: Vec<SpherePoint> = (0..4).map(|_| SpherePoint::sample(&mut rng)).collect();
            let ab = arcs_cross_sphere(&p[0], &p[1], &p[2], &p[3]).unwrap();
            let ba = arcs_cross_sphere(&p[2], &p[3], &p[0], &p[1]).unwrap();
            assert_eq!(ab, ba);
        }
    }

    #[test]
    fn single_sample_is_indicator() {
        let e = estimate_pair_probability(Model::Sphere, 1, 3).unwrap();
        assert!(e.mean == 0.0 || e.mean == 1.0);
    }

    #[test]
    fn estimates_are_deterministic() {
        let a = estimate_pair_probability(Model::Projective, 20_000, 42).unwrap();
        let b = estimate_pair_probability(Model::Projective, 20_000, 42).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn sphere_estimate_near_eighth() {
        let e = estimate_pair_probability(Model::Sphere, 200_000, 42).unwrap();
        assert!((e.mean - 0.125).abs() < 4.0 * e.std_error, "{e:?}");
    }

    #[test]
    fn projective_estimate_near_inverse_pi_squared() {
        let e = estimate_pair_probability(Model::Projective, 200_000, 42).unwrap();
        let target = e.target.unwrap();
        assert!((target - 0.101321).abs() < 1e-6);
        assert!((e.mean - target).abs() < 4.0 * e.std_error, "{e:?}");
    }

    #[test]
    fn expected_crossings_k4_sphere() {
        let e = estimate_expected_crossings(Model::Sphere, 4, 4000, 5).unwrap();
        // 3 disjoint edge pairs, each crossing with probability 1/8
        assert!((e.mean - 0.375).abs() < 4.0 * e.std_error, "{e:?}");
        assert_eq!(
            estimate_expected_crossings(Model::Sphere, 4, 0, 5),
            Err(GeodesicError::NoDrawings)
        );
    }

    #[test]
    fn octant_occupancy_chi_square() {
        // df = 7; critical value at p = 0.001 is 24.322
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let samples = 1_000_000usize;
        let mut buckets = [0u64; 8];
        for _ in 0..samples {
            let p = SpherePoint::sample(&mut rng).0;
            let idx = usize::from(p[0] > 0.0)
                | (usize::from(p[1] > 0.0) << 1)
                | (usize::from(p[2] > 0.0) << 2);
            buckets[idx] += 1;
        }
        let expected = samples as f64 / 8.0;
        let chi2: f64 = buckets
            .iter()
            .map(|&o| {
                let d = o as f64 - expected;
                d * d / expected
            })
            .sum();
        assert!(chi2 < 24.322, "chi2 = {chi2}, buckets = {buckets:?}");
    }

    #[test]
    fn unit_norm_after_sampling() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..1000 {
            let p = SpherePoint::sample(&mut rng);
            assert!((p.norm() - 1.0).abs() < 1e-12);
        }
    }
}
