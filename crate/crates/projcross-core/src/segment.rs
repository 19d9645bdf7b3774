//! Taut routing: edges decomposed into region-tagged segments, and the exact
//! integer predicates deciding whether two segments cross.
//!
//! Every edge follows its angularly short route, monotone between circles:
//!
//! * black edges are chords of the disk bounded by `U`;
//! * red edges are chords drawn shallowly against `V` along their short arc,
//!   so a segment descending into the annulus crosses a red chord exactly
//!   when it starts strictly inside the chord's arc;
//! * green edges span the annulus `VU` from `v_i` to `u_j`;
//! * blue edges span the annulus `WV` from `w_i` to `v_j`;
//! * brown edges pierce circle `V` at the gap midpoint between `v_{i+2k}` and
//!   `v_{i+2k+1}` (the odd angle shared with `w_i`), splitting into a radial
//!   `WV` piece and a `VU` spanner.
//!
//! A spanner is stored by its lifted endpoints `(x, x + delta)` with
//! `|delta| < m` (strictly less than a half turn). Two spanners of the same
//! annulus cross exactly when some lift of one separates the endpoints of the
//! other, which reduces to a sign test per candidate shift of `2m`; the bound
//! `|delta| < m` leaves at most one candidate. All ties (equal lifted
//! coordinates) count as non-crossings, which makes the predicates safe to
//! evaluate on adjacent edges as well: edges sharing an endpoint never
//! register a crossing.

use serde::Serialize;

use crate::drawing::{AuxEdge, Color};
use crate::params::{angle_of, signed_offset, Params, VertexClass};

/// A taut piece of an edge, tagged by the region it occupies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Segment {
    /// Chord of the disk bounded by `U`; endpoints are `u`-vertex indices.
    UDiskChord { a: u32, b: u32 },
    /// Shallow chord against `V`: short arc from `start` spanning `span`
    /// half-steps clockwise, `0 < span < m`.
    VuChord { start: i64, span: i64 },
    /// Spanner of annulus `VU`: lifted endpoints `(outer, outer + delta)`,
    /// outer on `V`, inner on `U`.
    VuSpanner { outer: i64, delta: i64 },
    /// Spanner of annulus `WV`: outer on `W`, inner on `V`. Radial pieces of
    /// brown edges have `delta = 0`.
    WvSpanner { outer: i64, delta: i64 },
}

/// Representative of `d` modulo `turn` in `(-turn/2, turn/2]`.
fn center_mod(d: i64, turn: i64) -> i64 {
    let half = turn / 2;
    (d + half - 1).rem_euclid(turn) - half + 1
}

/// Decomposes an edge into its taut segments (one, or two for brown edges).
pub fn decompose(edge: &AuxEdge, p: &Params) -> Vec<Segment> {
    let m = i64::from(p.m());
    let turn = 2 * m;
    let [e0, e1] = edge.endpoints;
    match edge.color {
        Color::Black => Segment::u_disk_chord(e0.index, e1.index),
        Color::Red => {
            // short arc from the smaller lift; red distance <= 2k < m/2 turns
            let d = signed_offset(e0.index, e1.index, p.m());
            let (base, span) = if d >= 0 { (e0.index, d) } else { (e1.index, -d) };
            vec![Segment::VuChord {
                start: i64::from(2 * base),
                span: 2 * span,
            }]
        }
        Color::Green => {
            let (v, u) = if e0.class == VertexClass::V { (e0, e1) } else { (e1, e0) };
            vec![Segment::VuSpanner {
                outer: i64::from(2 * v.index),
                delta: 2 * signed_offset(v.index, u.index, p.m()),
            }]
        }
        Color::Blue => {
            let (w, v) = if e0.class == VertexClass::W { (e0, e1) } else { (e1, e0) };
            let outer = angle_of(w, p).lifted();
            vec![Segment::WvSpanner {
                outer,
                delta: center_mod(i64::from(2 * v.index) - outer, turn),
            }]
        }
        Color::Brown => {
            let (w, u) = if e0.class == VertexClass::W { (e0, e1) } else { (e1, e0) };
            // pierces V at the gap angle 2i + m, the angle of w_i itself
            let gap = angle_of(w, p).lifted();
            vec![
                Segment::WvSpanner { outer: gap, delta: 0 },
                Segment::VuSpanner {
                    outer: gap,
                    delta: center_mod(i64::from(2 * u.index) - gap, turn),
                },
            ]
        }
    }
}

impl Segment {
    fn u_disk_chord(a: u32, b: u32) -> Vec<Segment> {
        vec![Segment::UDiskChord { a: a.min(b), b: a.max(b) }]
    }
}

/// Strict cyclic interleaving of chords `{a1, b1}` and `{a2, b2}` on a circle
/// of `modulus` positions. Shared endpoints never interleave.
fn chords_interleave(a1: i64, b1: i64, a2: i64, b2: i64, modulus: i64) -> bool {
    if a2 == a1 || a2 == b1 || b2 == a1 || b2 == b1 {
        return false;
    }
    let span = (b1 - a1).rem_euclid(modulus);
    let inside = |x: i64| {
        let d = (x - a1).rem_euclid(modulus);
        0 < d && d < span
    };
    inside(a2) != inside(b2)
}

/// Sign-flip test for two spanners of one annulus with lifts
/// `(x1, x1 + d1)` and `(x2, x2 + d2)`: they cross exactly when a multiple of
/// `turn` lies strictly between `x1 - x2` and `(x1 + d1) - (x2 + d2)`.
fn spanners_cross(x1: i64, d1: i64, x2: i64, d2: i64, turn: i64) -> bool {
    let start = x1 - x2;
    let end = start + d1 - d2;
    if start == end {
        return false;
    }
    let (lo, hi) = if start < end { (start, end) } else { (end, start) };
    debug_assert!(
        hi - lo < turn,
        "spanner displacements must stay below a half turn each"
    );
    (lo.div_euclid(turn) + 1) * turn < hi
}

/// Whether `angle` lies strictly inside the chord's short arc.
fn chord_contains(start: i64, span: i64, angle: i64, turn: i64) -> bool {
    let d = (angle - start).rem_euclid(turn);
    0 < d && d < span
}

/// Crossing predicate for two segments of edges with no shared vertex.
/// Segments of different regions never cross; ties resolve to no crossing.
pub fn segments_cross(s1: &Segment, s2: &Segment, p: &Params) -> bool {
    let m = i64::from(p.m());
    let turn = 2 * m;
    use Segment::*;
    match (s1, s2) {
        (UDiskChord { a: a1, b: b1 }, UDiskChord { a: a2, b: b2 }) => chords_interleave(
            i64::from(*a1),
            i64::from(*b1),
            i64::from(*a2),
            i64::from(*b2),
            m,
        ),
        (VuChord { start: s1, span: p1 }, VuChord { start: s2, span: p2 }) => {
            chords_interleave(*s1, (s1 + p1).rem_euclid(turn), *s2, (s2 + p2).rem_euclid(turn), turn)
        }
        (VuChord { start, span }, VuSpanner { outer, .. })
        | (VuSpanner { outer, .. }, VuChord { start, span }) => {
            chord_contains(*start, *span, *outer, turn)
        }
        (VuSpanner { outer: x1, delta: d1 }, VuSpanner { outer: x2, delta: d2 })
        | (WvSpanner { outer: x1, delta: d1 }, WvSpanner { outer: x2, delta: d2 }) => {
            spanners_cross(*x1, *d1, *x2, *d2, turn)
        }
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::{make_params, VertexId};
    use proptest::prelude::*;

    fn segs(edge: AuxEdge, p: &Params) -> Vec<Segment> {
        decompose(&edge, p)
    }

    #[test]
    fn brown_decomposition_k1() {
        let p = make_params(1, 1, 1).unwrap();
        let e = AuxEdge {
            color: Color::Brown,
            endpoints: [VertexId::w(0), VertexId::u(2)],
        };
        assert_eq!(
            segs(e, &p),
            vec![
                Segment::WvSpanner { outer: 5, delta: 0 },
                Segment::VuSpanner { outer: 5, delta: -1 },
            ]
        );
    }

    #[test]
    fn green_decomposition_k1() {
        let p = make_params(1, 1, 1).unwrap();
        let e = AuxEdge {
            color: Color::Green,
            endpoints: [VertexId::v(2), VertexId::u(3)],
        };
        assert_eq!(segs(e, &p), vec![Segment::VuSpanner { outer: 4, delta: 2 }]);
    }

    #[test]
    fn red_decomposition_k1() {
        let p = make_params(1, 1, 1).unwrap();
        let e = AuxEdge {
            color: Color::Red,
            endpoints: [VertexId::v(0), VertexId::v(1)],
        };
        assert_eq!(segs(e, &p), vec![Segment::VuChord { start: 0, span: 2 }]);
    }

    #[test]
    fn predicate_examples_k1() {
        let p = make_params(1, 1, 1).unwrap();
        let green = Segment::VuSpanner { outer: 4, delta: 2 };
        let brown_inner = Segment::VuSpanner { outer: 5, delta: -1 };
        assert!(segments_cross(&green, &brown_inner, &p));

        let blue = Segment::WvSpanner { outer: 5, delta: -1 };
        let brown_radial = Segment::WvSpanner { outer: 7, delta: 0 };
        assert!(!segments_cross(&blue, &brown_radial, &p));

        let red = Segment::VuChord { start: 4, span: 2 };
        assert!(segments_cross(&red, &brown_inner, &p));
    }

    #[test]
    fn different_regions_never_cross() {
        let p = make_params(1, 1, 1).unwrap();
        let chord = Segment::UDiskChord { a: 0, b: 2 };
        let spanner = Segment::VuSpanner { outer: 0, delta: 2 };
        let wv = Segment::WvSpanner { outer: 5, delta: -1 };
        assert!(!segments_cross(&chord, &spanner, &p));
        assert!(!segments_cross(&chord, &wv, &p));
        assert!(!segments_cross(&spanner, &wv, &p));
    }

    #[test]
    fn shared_coordinates_are_ties() {
        let p = make_params(2, 2, 2).unwrap();
        // same outer endpoint
        let s1 = Segment::VuSpanner { outer: 4, delta: 4 };
        let s2 = Segment::VuSpanner { outer: 4, delta: -2 };
        assert!(!segments_cross(&s1, &s2, &p));
        // same inner endpoint
        let s3 = Segment::VuSpanner { outer: 0, delta: 4 };
        let s4 = Segment::VuSpanner { outer: 6, delta: -2 };
        assert!(!segments_cross(&s3, &s4, &p));
        // chords sharing an endpoint
        let c1 = Segment::UDiskChord { a: 0, b: 3 };
        let c2 = Segment::UDiskChord { a: 0, b: 2 };
        assert!(!segments_cross(&c1, &c2, &p));
    }

    #[test]
    fn displacement_bounds_hold_for_all_edges() {
        for (k, a, b) in [(1u32, 0u32, 0u32), (2, 1, 2), (3, 0, 6), (3, 5, 1)] {
            let p = make_params(k, a, b).unwrap();
            let m = i64::from(p.m());
            for edge in crate::drawing::build_auxiliary(p).edges() {
                for seg in decompose(edge, &p) {
                    match seg {
                        Segment::VuSpanner { delta, .. } | Segment::WvSpanner { delta, .. } => {
                            assert!(delta.abs() < m, "{edge:?} -> {seg:?}");
                        }
                        Segment::VuChord { span, .. } => {
                            assert!(0 < span && span < m);
                        }
                        Segment::UDiskChord { .. } => {}
                    }
                }
            }
        }
    }

    proptest! {
        /// With displacements below a half turn, at most one shift can
        /// separate the lifted endpoints, so the predicate is 0/1 rather
        /// than a multiplicity.
        #[test]
        fn at_most_one_separating_shift(
            k in 1i64..60,
            x1 in 0i64..600, x2 in 0i64..600,
            d1 in -600i64..600, d2 in -600i64..600,
        ) {
            let m = 4 * k + 1;
            let turn = 2 * m;
            let x1 = x1 % turn;
            let x2 = x2 % turn;
            let d1 = d1 % m;
            let d2 = d2 % m;
            let start = x1 - x2;
            let end = start + d1 - d2;
            let (lo, hi) = if start < end { (start, end) } else { (end, start) };
            let mut flips = 0;
            let mut t = lo.div_euclid(turn);
            while t * turn <= hi {
                if lo < t * turn && t * turn < hi {
                    flips += 1;
                }
                t += 1;
            }
            prop_assert!(flips <= 1);
            prop_assert_eq!(
                flips == 1,
                spanners_cross(x1, d1, x2, d2, turn)
            );
        }
    }
}
