//! Pairwise exact crossing counting, the nine-type breakdown, good-drawing
//! verification, and per-vertex responsibility.
//!
//! The counting loop visits every unordered pair of vertex-disjoint edges and
//! sums the segment predicate over their segment pairs. The loop is a pure
//! reduction, so it is partitioned across threads with rayon and merged by
//! addition; the result does not depend on the partitioning.
//!
//! Counts for the projective drawing follow from the auxiliary ones by a
//! single adjustment: the identification merges the blue edges in pairs, and
//! with them their crossings, so the blue-blue count is halved. The engine
//! checks the evenness this relies on.

use rayon::prelude::*;
use serde_json::json;
use thiserror::Error;

use crate::drawing::{params_json, AuxEdge, AuxiliaryDrawing, Color};
use crate::params::{DClass, DVertex, Params};
use crate::segment::{decompose, segments_cross, Segment};

pub const COUNTS_SCHEMA: &str = "projcross-counts/1";
pub const RESPONSIBILITY_SCHEMA: &str = "projcross-responsibility/1";

/// The nine crossing types, i.e. the unordered colour pairs that can occur.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CrossingType {
    GreenGreen,
    RedRed,
    BrownBrown,
    BlueBlue,
    BlackBlack,
    RedGreen,
    RedBrown,
    BlueBrown,
    GreenBrown,
}

impl CrossingType {
    pub const ALL: [CrossingType; 9] = [
        CrossingType::GreenGreen,
        CrossingType::RedRed,
        CrossingType::BrownBrown,
        CrossingType::BlueBlue,
        CrossingType::BlackBlack,
        CrossingType::RedGreen,
        CrossingType::RedBrown,
        CrossingType::BlueBrown,
        CrossingType::GreenBrown,
    ];

    /// Type of a crossing between edges of the given colours, if such a
    /// crossing is geometrically possible at all.
    pub fn of(c1: Color, c2: Color) -> Option<CrossingType> {
        use Color::*;
        let (lo, hi) = if c1 <= c2 { (c1, c2) } else { (c2, c1) };
        match (lo, hi) {
            (Green, Green) => Some(CrossingType::GreenGreen),
            (Red, Red) => Some(CrossingType::RedRed),
            (Brown, Brown) => Some(CrossingType::BrownBrown),
            (Blue, Blue) => Some(CrossingType::BlueBlue),
            (Black, Black) => Some(CrossingType::BlackBlack),
            (Green, Red) => Some(CrossingType::RedGreen),
            (Red, Brown) => Some(CrossingType::RedBrown),
            (Brown, Blue) => Some(CrossingType::BlueBrown),
            (Green, Brown) => Some(CrossingType::GreenBrown),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            CrossingType::GreenGreen => "green-green",
            CrossingType::RedRed => "red-red",
            CrossingType::BrownBrown => "brown-brown",
            CrossingType::BlueBlue => "blue-blue",
            CrossingType::BlackBlack => "black-black",
            CrossingType::RedGreen => "red-green",
            CrossingType::RedBrown => "red-brown",
            CrossingType::BlueBrown => "blue-brown",
            CrossingType::GreenBrown => "green-brown",
        }
    }

    fn idx(self) -> usize {
        match self {
            CrossingType::GreenGreen => 0,
            CrossingType::RedRed => 1,
            CrossingType::BrownBrown => 2,
            CrossingType::BlueBlue => 3,
            CrossingType::BlackBlack => 4,
            CrossingType::RedGreen => 5,
            CrossingType::RedBrown => 6,
            CrossingType::BlueBrown => 7,
            CrossingType::GreenBrown => 8,
        }
    }
}

/// Per-type crossing counts of one auxiliary drawing, plus the derived totals
/// for the projective drawing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossingBreakdown {
    params: Params,
    counts: [u64; 9],
}

impl CrossingBreakdown {
    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn count(&self, t: CrossingType) -> u64 {
        self.counts[t.idx()]
    }

    pub fn total_auxiliary(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Blue-blue crossings after identification; the auxiliary count is even.
    pub fn blue_blue_identified(&self) -> u64 {
        self.count(CrossingType::BlueBlue) / 2
    }

    pub fn total_projective(&self) -> u64 {
        self.total_auxiliary() - self.blue_blue_identified()
    }

    /// Per-type count in the projective drawing (blue-blue halved).
    pub fn count_projective(&self, t: CrossingType) -> u64 {
        if t == CrossingType::BlueBlue {
            self.blue_blue_identified()
        } else {
            self.count(t)
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut per_type = serde_json::Map::new();
        for t in CrossingType::ALL {
            per_type.insert(
                t.name().to_string(),
                json!({
                    "auxiliary": self.count(t),
                    "projective": self.count_projective(t),
                }),
            );
        }
        json!({
            "schema": COUNTS_SCHEMA,
            "params": params_json(&self.params),
            "counts": per_type,
            "total_auxiliary": self.total_auxiliary(),
            "total_projective": self.total_projective(),
        })
    }

    /// One row per type: `type,auxiliary,projective`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("type,auxiliary,projective\n");
        for t in CrossingType::ALL {
            out.push_str(&format!(
                "{},{},{}\n",
                t.name(),
                self.count(t),
                self.count_projective(t)
            ));
        }
        out.push_str(&format!(
            "total,{},{}\n",
            self.total_auxiliary(),
            self.total_projective()
        ));
        out
    }
}

struct EdgeGeom {
    color: Color,
    ends: [u64; 2],
    d_ends: [DVertex; 2],
    segments: Vec<Segment>,
}

fn pack(v: crate::params::VertexId, m: u32) -> u64 {
    let class = match v.class {
        crate::params::VertexClass::U => 0u64,
        crate::params::VertexClass::V => 1,
        crate::params::VertexClass::W => 2,
    };
    class * u64::from(m) + u64::from(v.index)
}

fn geometry(aux: &AuxiliaryDrawing) -> Vec<EdgeGeom> {
    let p = aux.params();
    aux.edges()
        .iter()
        .map(|e| EdgeGeom {
            color: e.color,
            ends: [pack(e.endpoints[0], p.m()), pack(e.endpoints[1], p.m())],
            d_ends: [e.endpoints[0].identify(), e.endpoints[1].identify()],
            segments: decompose(e, p),
        })
        .collect()
}

fn adjacent(a: &EdgeGeom, b: &EdgeGeom) -> bool {
    a.ends[0] == b.ends[0]
        || a.ends[0] == b.ends[1]
        || a.ends[1] == b.ends[0]
        || a.ends[1] == b.ends[1]
}

fn pair_crossings(a: &EdgeGeom, b: &EdgeGeom, p: &Params) -> u32 {
    let mut x = 0;
    for s1 in &a.segments {
        for s2 in &b.segments {
            if segments_cross(s1, s2, p) {
                x += 1;
            }
        }
    }
    x
}

/// Counts all crossings of the auxiliary drawing, classified by type.
///
/// Panics if the drawing violates its own guarantees: an edge pair crossing
/// more than once, a crossing pair sharing an identified vertex, or an odd
/// blue-blue total. These are construction bugs, not data errors.
pub fn count_crossings(aux: &AuxiliaryDrawing) -> CrossingBreakdown {
    let p = *aux.params();
    let geoms = geometry(aux);
    let counts = (0..geoms.len())
        .into_par_iter()
        .fold(
            || [0u64; 9],
            |mut acc, i| {
                let a = &geoms[i];
                for b in &geoms[i + 1..] {
                    if adjacent(a, b) {
                        continue;
                    }
                    let x = pair_crossings(a, b, &p);
                    if x > 0 {
                        assert!(x == 1, "edge pair crosses {x} times");
                        let t = CrossingType::of(a.color, b.color)
                            .expect("crossing between colours that never meet");
                        assert!(
                            d_disjoint(a, b),
                            "crossing edges share an identified vertex"
                        );
                        acc[t.idx()] += 1;
                    }
                }
                acc
            },
        )
        .reduce(
            || [0u64; 9],
            |mut x, y| {
                for i in 0..9 {
                    x[i] += y[i];
                }
                x
            },
        );
    let breakdown = CrossingBreakdown { params: p, counts };
    assert!(
        breakdown.count(CrossingType::BlueBlue).is_multiple_of(2),
        "blue-blue crossings must pair up under the identification"
    );
    breakdown
}

fn d_disjoint(a: &EdgeGeom, b: &EdgeGeom) -> bool {
    a.d_ends
        .iter()
        .all(|x| b.d_ends.iter().all(|y| x != y))
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GoodDrawingError {
    #[error("adjacent edges {0:?} and {1:?} cross")]
    AdjacentCross(AuxEdge, AuxEdge),
    #[error("edges {0:?} and {1:?} cross {2} times")]
    MultipleCross(AuxEdge, AuxEdge, u32),
    #[error("crossing edges {0:?} and {1:?} share an identified vertex")]
    SharedIdentifiedVertex(AuxEdge, AuxEdge),
    #[error("blue-blue crossing count {0} is odd")]
    OddBlueBlue(u64),
}

/// Exhaustive good-drawing check. Unlike [`count_crossings`], this evaluates
/// the predicates on adjacent pairs too (they must report no crossing), and
/// returns violations instead of panicking.
pub fn verify_good_drawing(aux: &AuxiliaryDrawing) -> Result<(), GoodDrawingError> {
    let p = *aux.params();
    let geoms = geometry(aux);
    let edges = aux.edges();
    let blue_blue = (0..geoms.len())
        .into_par_iter()
        .map(|i| {
            let a = &geoms[i];
            let mut bb = 0u64;
            for (jrel, b) in geoms[i + 1..].iter().enumerate() {
                let j = i + 1 + jrel;
                let x = pair_crossings(a, b, &p);
                if x == 0 {
                    continue;
                }
                if adjacent(a, b) {
                    return Err(GoodDrawingError::AdjacentCross(edges[i], edges[j]));
                }
                if x > 1 {
                    return Err(GoodDrawingError::MultipleCross(edges[i], edges[j], x));
                }
                if !d_disjoint(a, b) {
                    return Err(GoodDrawingError::SharedIdentifiedVertex(
                        edges[i], edges[j],
                    ));
                }
                if a.color == Color::Blue && b.color == Color::Blue {
                    bb += 1;
                }
            }
            Ok(bb)
        })
        .try_reduce(|| 0u64, |x, y| Ok(x + y))?;
    if !blue_blue.is_multiple_of(2) {
        return Err(GoodDrawingError::OddBlueBlue(blue_blue));
    }
    Ok(())
}

/// Responsibility of every vertex of the projective drawing, with per-class
/// summary statistics.
#[derive(Debug, Clone, PartialEq)]
pub struct ResponsibilityReport {
    params: Params,
    /// `(vertex, crossings on incident edges)`, u-class first.
    pub per_vertex: Vec<(DVertex, u64)>,
}

impl ResponsibilityReport {
    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn class_values(&self, class: DClass) -> Vec<u64> {
        self.per_vertex
            .iter()
            .filter(|(v, _)| v.class == class)
            .map(|&(_, r)| r)
            .collect()
    }

    pub fn class_stats(&self, class: DClass) -> (u64, u64, f64) {
        let vals = self.class_values(class);
        let min = *vals.iter().min().expect("class is never empty");
        let max = *vals.iter().max().expect("class is never empty");
        let mean = vals.iter().sum::<u64>() as f64 / vals.len() as f64;
        (min, max, mean)
    }

    /// Sum of all responsibilities; equals four times the projective total,
    /// since every crossing lies on edges incident to four distinct vertices.
    pub fn total(&self) -> u64 {
        self.per_vertex.iter().map(|&(_, r)| r).sum()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let (umin, umax, umean) = self.class_stats(DClass::U);
        let (vmin, vmax, vmean) = self.class_stats(DClass::Vw);
        let n = f64::from(self.params.n());
        let cube = n * n * n;
        json!({
            "schema": RESPONSIBILITY_SCHEMA,
            "params": params_json(&self.params),
            "per_vertex": self.per_vertex.iter()
                .map(|(v, r)| json!({"vertex": v.to_string(), "responsibility": r}))
                .collect::<Vec<_>>(),
            "classes": {
                "u": {"min": umin, "max": umax, "mean": umean, "mean_over_n3": umean / cube},
                "vw": {"min": vmin, "max": vmax, "mean": vmean, "mean_over_n3": vmean / cube},
            },
            "sum": self.total(),
        })
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("vertex,responsibility\n");
        for (v, r) in &self.per_vertex {
            out.push_str(&format!("{v},{r}\n"));
        }
        out
    }
}

/// Weight of one auxiliary crossing in the projective drawing, in half units:
/// blue-blue crossings merge in pairs, every other type transfers as is.
fn weight_halves(c1: Color, c2: Color) -> u64 {
    if c1 == Color::Blue && c2 == Color::Blue {
        1
    } else {
        2
    }
}

/// Full per-vertex responsibility by the quadratic pair loop.
pub fn responsibility(aux: &AuxiliaryDrawing) -> ResponsibilityReport {
    let p = *aux.params();
    let geoms = geometry(aux);
    let m = p.m() as usize;
    // slot 0..m: u-class, slot m..2m: vw-class; accumulated in half units
    let halves = (0..geoms.len())
        .into_par_iter()
        .fold(
            || vec![0u64; 2 * m],
            |mut acc, i| {
                let a = &geoms[i];
                for b in &geoms[i + 1..] {
                    if adjacent(a, b) {
                        continue;
                    }
                    if pair_crossings(a, b, &p) > 0 {
                        let w = weight_halves(a.color, b.color);
                        for v in a.d_ends.iter().chain(b.d_ends.iter()) {
                            acc[slot(*v, m)] += w;
                        }
                    }
                }
                acc
            },
        )
        .reduce(
            || vec![0u64; 2 * m],
            |mut x, y| {
                for (xi, yi) in x.iter_mut().zip(y) {
                    *xi += yi;
                }
                x
            },
        );
    finish_report(p, halves)
}

fn slot(v: DVertex, m: usize) -> usize {
    match v.class {
        DClass::U => v.index as usize,
        DClass::Vw => m + v.index as usize,
    }
}

fn finish_report(p: Params, halves: Vec<u64>) -> ResponsibilityReport {
    let m = p.m();
    let per_vertex = halves
        .into_iter()
        .enumerate()
        .map(|(i, h)| {
            assert!(h % 2 == 0, "responsibility must be integral per vertex");
            let v = if (i as u32) < m {
                DVertex { class: DClass::U, index: i as u32 }
            } else {
                DVertex { class: DClass::Vw, index: i as u32 - m }
            };
            (v, h / 2)
        })
        .collect();
    ResponsibilityReport { params: p, per_vertex }
}

/// Responsibility via the rotational symmetry of the construction: one orbit
/// representative per class, every other vertex inherits its value. Reduces
/// the cost by a factor of `m` relative to [`responsibility`].
pub fn responsibility_symmetric(aux: &AuxiliaryDrawing) -> ResponsibilityReport {
    let p = *aux.params();
    let geoms = geometry(aux);
    let m = p.m() as usize;

    let rep = |target: DVertex| -> u64 {
        let incident: Vec<usize> = (0..geoms.len())
            .filter(|&i| geoms[i].d_ends.contains(&target))
            .collect();
        let incident_set: std::collections::HashSet<usize> = incident.iter().copied().collect();
        let halves: u64 = incident
            .par_iter()
            .map(|&i| {
                let a = &geoms[i];
                let mut acc = 0u64;
                for (j, b) in geoms.iter().enumerate() {
                    if j == i || (incident_set.contains(&j) && j < i) {
                        continue;
                    }
                    if adjacent(a, b) {
                        continue;
                    }
                    if pair_crossings(a, b, &p) > 0 {
                        acc += weight_halves(a.color, b.color);
                    }
                }
                acc
            })
            .sum();
        assert!(halves.is_multiple_of(2));
        halves / 2
    };

    let ru = rep(DVertex { class: DClass::U, index: 0 });
    let rvw = rep(DVertex { class: DClass::Vw, index: 0 });
    let per_vertex = (0..m as u32)
        .map(|i| (DVertex { class: DClass::U, index: i }, ru))
        .chain((0..m as u32).map(|i| (DVertex { class: DClass::Vw, index: i }, rvw)))
        .collect();
    ResponsibilityReport { params: p, per_vertex }
}
