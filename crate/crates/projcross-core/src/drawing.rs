//! Construction of the auxiliary drawing and its projective identification.
//!
//! The auxiliary drawing `A` lives in the plane on three concentric circles
//! `W`, `V`, `U`, each carrying `m = 4k + 1` vertices. Its edge set, by
//! colour (indices mod `m`, offsets measured as `j - i mod m`):
//!
//! * green: `v_i u_j` for signed offset in `[-a, a]`, the `2a + 1` nearest
//!   `u`-vertices of each `v`-vertex;
//! * red: `v_i v_j` for cyclic distance at most `b`;
//! * brown: `w_i u_j` for offset in `{a+1, ..., 4k-a}`, exactly the
//!   complement of the green offsets;
//! * blue: `w_i v_j` for offset in `{b+1, ..., 4k-b}`, exactly the
//!   complement of distance `<= b`;
//! * black: all pairs `u_i u_j`.
//!
//! Identifying `w_i` with `v_i` (and each blue edge `w_i v_j` with its
//! partner `w_j v_i`) yields a graph on `n = 8k + 2` vertices in which every
//! pair is joined exactly once, i.e. `K_n`. [`project`] performs that
//! bookkeeping and checks the completeness claim pair by pair.

use serde::{Deserialize, Serialize};
use serde_json::json;
use thiserror::Error;

use crate::params::{angle_of, DVertex, Params, VertexClass, VertexId};

pub const DRAWING_SCHEMA: &str = "projcross-drawing/1";

/// Edge colour of the auxiliary drawing, in canonical order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Green,
    Red,
    Brown,
    Blue,
    Black,
}

impl Color {
    pub const ALL: [Color; 5] = [
        Color::Green,
        Color::Red,
        Color::Brown,
        Color::Blue,
        Color::Black,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Color::Green => "green",
            Color::Red => "red",
            Color::Brown => "brown",
            Color::Blue => "blue",
            Color::Black => "black",
        }
    }
}

/// One coloured edge of the auxiliary drawing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuxEdge {
    pub color: Color,
    pub endpoints: [VertexId; 2],
}

impl AuxEdge {
    pub fn shares_vertex(&self, other: &AuxEdge) -> bool {
        self.endpoints
            .iter()
            .any(|v| other.endpoints.contains(v))
    }

    /// True when the two edges share a vertex after identification.
    pub fn shares_d_vertex(&self, other: &AuxEdge) -> bool {
        self.endpoints.iter().any(|v| {
            other
                .endpoints
                .iter()
                .any(|w| v.identify() == w.identify())
        })
    }
}

/// The complete auxiliary drawing: parameters plus the edge list in canonical
/// order (colour, then base index, then offset). Construction is pure, so two
/// builds of the same parameters are identical element for element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuxiliaryDrawing {
    params: Params,
    edges: Vec<AuxEdge>,
}

impl AuxiliaryDrawing {
    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn edges(&self) -> &[AuxEdge] {
        &self.edges
    }

    pub fn count_by_color(&self, color: Color) -> usize {
        self.edges.iter().filter(|e| e.color == color).count()
    }

    /// JSON document with schema `projcross-drawing/1`.
    pub fn to_json(&self) -> serde_json::Value {
        let p = &self.params;
        let vertices: Vec<_> = [VertexClass::W, VertexClass::V, VertexClass::U]
            .into_iter()
            .flat_map(|class| {
                (0..p.m()).map(move |index| VertexId { class, index })
            })
            .map(|v| {
                json!({
                    "class": match v.class {
                        VertexClass::U => "u",
                        VertexClass::V => "v",
                        VertexClass::W => "w",
                    },
                    "index": v.index,
                    "angle": angle_of(v, p).value(),
                })
            })
            .collect();
        let edges: Vec<_> = self
            .edges
            .iter()
            .map(|e| {
                json!({
                    "color": e.color.name(),
                    "endpoints": [e.endpoints[0].to_string(), e.endpoints[1].to_string()],
                })
            })
            .collect();
        json!({
            "schema": DRAWING_SCHEMA,
            "params": params_json(p),
            "vertices": vertices,
            "edges": edges,
        })
    }
}

pub fn params_json(p: &Params) -> serde_json::Value {
    json!({
        "k": p.k(),
        "n": p.n(),
        "m": p.m(),
        "a": p.level_a(),
        "b": p.level_b(),
        "alpha": crate::rational::to_fraction_string(&p.alpha()),
        "beta": crate::rational::to_fraction_string(&p.beta()),
    })
}

/// Builds the full edge set of the auxiliary drawing.
pub fn build_auxiliary(params: Params) -> AuxiliaryDrawing {
    let m = params.m();
    let k = params.k();
    let a = params.level_a();
    let b = params.level_b();
    let mut edges = Vec::new();

    for i in 0..m {
        for off in -(i64::from(a))..=i64::from(a) {
            let j = (i64::from(i) + off).rem_euclid(i64::from(m)) as u32;
            edges.push(AuxEdge {
                color: Color::Green,
                endpoints: [VertexId::v(i), VertexId::u(j)],
            });
        }
    }
    // each red pair once, as (i, i + d) for d = 1..=b
    for i in 0..m {
        for d in 1..=b {
            edges.push(AuxEdge {
                color: Color::Red,
                endpoints: [VertexId::v(i), VertexId::v((i + d) % m)],
            });
        }
    }
    for i in 0..m {
        for off in (a + 1)..=(4 * k - a) {
            edges.push(AuxEdge {
                color: Color::Brown,
                endpoints: [VertexId::w(i), VertexId::u((i + off) % m)],
            });
        }
    }
    for i in 0..m {
        for off in (b + 1)..=(4 * k - b) {
            edges.push(AuxEdge {
                color: Color::Blue,
                endpoints: [VertexId::w(i), VertexId::v((i + off) % m)],
            });
        }
    }
    for i in 0..m {
        for j in (i + 1)..m {
            edges.push(AuxEdge {
                color: Color::Black,
                endpoints: [VertexId::u(i), VertexId::u(j)],
            });
        }
    }

    AuxiliaryDrawing { params, edges }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ProjectionError {
    #[error("pair {0} {1} covered {2} times, expected exactly one edge")]
    BadCoverage(DVertex, DVertex, usize),
    #[error("blue edge {0}-{1} lacks its identified partner")]
    UnpairedBlue(VertexId, VertexId),
}

/// One edge of the projective drawing of `K_n`, with its originating
/// auxiliary edges (two of them for blue edges, one otherwise).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DEdge {
    pub endpoints: [DVertex; 2],
    pub color: Color,
    pub sources: Vec<usize>,
}

/// Adjacency structure of the projective drawing: every unordered vertex pair
/// with the colour and originating auxiliary edges of its unique edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectiveAdjacency {
    params: Params,
    edges: Vec<DEdge>,
}

impl ProjectiveAdjacency {
    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn edges(&self) -> &[DEdge] {
        &self.edges
    }

    pub fn degree(&self, v: DVertex) -> usize {
        self.edges
            .iter()
            .filter(|e| e.endpoints.contains(&v))
            .count()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let edges: Vec<_> = self
            .edges
            .iter()
            .map(|e| {
                json!({
                    "color": e.color.name(),
                    "endpoints": [e.endpoints[0].to_string(), e.endpoints[1].to_string()],
                    "sources": e.sources,
                })
            })
            .collect();
        json!({
            "schema": DRAWING_SCHEMA,
            "params": params_json(&self.params),
            "identified": true,
            "edges": edges,
        })
    }
}

fn d_pair_key(x: DVertex, y: DVertex, m: u32) -> usize {
    let flat = |v: DVertex| -> usize {
        match v.class {
            crate::params::DClass::U => v.index as usize,
            crate::params::DClass::Vw => (m + v.index) as usize,
        }
    };
    let (p, q) = (flat(x).min(flat(y)), flat(x).max(flat(y)));
    p * (2 * m as usize) + q
}

/// Applies the identification `w_i ~ v_i` to the auxiliary drawing and checks
/// that the result is the complete graph: every vertex pair covered exactly
/// once, with blue edges arising from exactly two auxiliary partners.
pub fn project(aux: &AuxiliaryDrawing) -> Result<ProjectiveAdjacency, ProjectionError> {
    let p = *aux.params();
    let m = p.m();
    let mut table: std::collections::BTreeMap<usize, DEdge> = std::collections::BTreeMap::new();

    for (idx, edge) in aux.edges().iter().enumerate() {
        let x = edge.endpoints[0].identify();
        let y = edge.endpoints[1].identify();
        let key = d_pair_key(x, y, m);
        match table.get_mut(&key) {
            None => {
                table.insert(
                    key,
                    DEdge {
                        endpoints: [x.min(y), x.max(y)],
                        color: edge.color,
                        sources: vec![idx],
                    },
                );
            }
            Some(existing) => {
                // only the two copies of a blue edge may coincide
                if edge.color != Color::Blue || existing.color != Color::Blue {
                    return Err(ProjectionError::BadCoverage(
                        x,
                        y,
                        existing.sources.len() + 1,
                    ));
                }
                existing.sources.push(idx);
            }
        }
    }

    let n = p.n() as usize;
    let expected_pairs = n * (n - 1) / 2;
    if table.len() != expected_pairs {
        // some pair of K_n is uncovered; find one for the error message
        let all: Vec<DVertex> = (0..m)
            .map(|i| DVertex {
                class: crate::params::DClass::U,
                index: i,
            })
            .chain((0..m).map(|i| DVertex {
                class: crate::params::DClass::Vw,
                index: i,
            }))
            .collect();
        for (i, &x) in all.iter().enumerate() {
            for &y in &all[i + 1..] {
                if !table.contains_key(&d_pair_key(x, y, m)) {
                    return Err(ProjectionError::BadCoverage(x, y, 0));
                }
            }
        }
    }
    for e in table.values() {
        let want = if e.color == Color::Blue { 2 } else { 1 };
        if e.sources.len() != want {
            if e.color == Color::Blue {
                let src = &aux.edges()[e.sources[0]];
                return Err(ProjectionError::UnpairedBlue(
                    src.endpoints[0],
                    src.endpoints[1],
                ));
            }
            return Err(ProjectionError::BadCoverage(
                e.endpoints[0],
                e.endpoints[1],
                e.sources.len(),
            ));
        }
    }

    Ok(ProjectiveAdjacency {
        params: p,
        edges: table.into_values().collect(),
    })
}
