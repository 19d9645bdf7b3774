//! Drawing parameters and the integer angular coordinate system.
//!
//! A drawing is determined by `k >= 1` and two integer levels `a, b` in
//! `[0, 2k]`; the derived quantities are `n = 8k + 2` (vertices of the
//! complete graph), `m = 4k + 1` (vertices per circle) and the exact rational
//! parameters `alpha = a/k`, `beta = b/k` in `[0, 2]`.
//!
//! Angles are measured in *half-steps*: `1/(2m)` of a full turn, clockwise.
//! With this unit every vertex sits at an integer angle, `v_i` and `u_i` at
//! the even angle `2i` and `w_i` at the odd angle `2i + m (mod 2m)`, so no two
//! vertices of different circles ever share an angular coordinate.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rational::Rational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParamsError {
    #[error("k must be at least 1, got {0}")]
    KTooSmall(u32),
    #[error("level {name} = {value} outside [0, {max}] (alpha, beta must lie in [0, 2])")]
    LevelOutOfRange {
        name: &'static str,
        value: u32,
        max: u32,
    },
    #[error("{name} = {value} does not make {name}*k an integer for k = {k}")]
    NotIntegral {
        name: &'static str,
        value: Rational,
        k: u32,
    },
}

/// Validated parameter set of one drawing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Params {
    k: u32,
    a: u32,
    b: u32,
}

impl Params {
    pub fn new(k: u32, a: u32, b: u32) -> Result<Self, ParamsError> {
        if k < 1 {
            return Err(ParamsError::KTooSmall(k));
        }
        if a > 2 * k {
            return Err(ParamsError::LevelOutOfRange {
                name: "a",
                value: a,
                max: 2 * k,
            });
        }
        if b > 2 * k {
            return Err(ParamsError::LevelOutOfRange {
                name: "b",
                value: b,
                max: 2 * k,
            });
        }
        Ok(Params { k, a, b })
    }

    /// Builds parameters from exact rational `alpha`, `beta`; both `alpha * k`
    /// and `beta * k` must be integers.
    pub fn from_rationals(k: u32, alpha: &Rational, beta: &Rational) -> Result<Self, ParamsError> {
        let a = Self::level_from_rational(k, alpha, "alpha")?;
        let b = Self::level_from_rational(k, beta, "beta")?;
        Params::new(k, a, b)
    }

    fn level_from_rational(
        k: u32,
        value: &Rational,
        name: &'static str,
    ) -> Result<u32, ParamsError> {
        let scaled = value * Rational::from(BigInt::from(k));
        if !scaled.is_integer() {
            return Err(ParamsError::NotIntegral {
                name,
                value: value.clone(),
                k,
            });
        }
        let int = scaled.to_integer();
        u32::try_from(&int).map_err(|_| ParamsError::NotIntegral {
            name,
            value: value.clone(),
            k,
        })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Number of vertices of the complete graph, `8k + 2`.
    pub fn n(&self) -> u32 {
        8 * self.k + 2
    }

    /// Vertices per circle, `4k + 1`. Always odd.
    pub fn m(&self) -> u32 {
        4 * self.k + 1
    }

    /// Integer level `a = alpha * k`.
    pub fn level_a(&self) -> u32 {
        self.a
    }

    /// Integer level `b = beta * k`.
    pub fn level_b(&self) -> u32 {
        self.b
    }

    pub fn alpha(&self) -> Rational {
        Rational::new(BigInt::from(self.a), BigInt::from(self.k))
    }

    pub fn beta(&self) -> Rational {
        Rational::new(BigInt::from(self.b), BigInt::from(self.k))
    }

    /// Half-steps in a full turn, `2m`.
    pub fn turn(&self) -> u32 {
        2 * self.m()
    }
}

/// Validated constructor, the conventional entry point.
pub fn make_params(k: u32, a: u32, b: u32) -> Result<Params, ParamsError> {
    Params::new(k, a, b)
}

/// Canonical representative of `j - i (mod m)` in `[-(m-1)/2, (m-1)/2]`.
///
/// `m` must be odd, so the representative is unique.
pub fn signed_offset(i: u32, j: u32, m: u32) -> i64 {
    debug_assert!(m % 2 == 1, "modulus must be odd");
    debug_assert!(i < m && j < m);
    let m = i64::from(m);
    let half = (m - 1) / 2;
    let d = (i64::from(j) - i64::from(i)).rem_euclid(m);
    if d > half {
        d - m
    } else {
        d
    }
}

/// Which circle a vertex of the auxiliary drawing lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VertexClass {
    U,
    V,
    W,
}

/// A vertex of the auxiliary drawing: a class and an index modulo `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct VertexId {
    pub class: VertexClass,
    pub index: u32,
}

impl VertexId {
    pub fn u(index: u32) -> Self {
        VertexId {
            class: VertexClass::U,
            index,
        }
    }

    pub fn v(index: u32) -> Self {
        VertexId {
            class: VertexClass::V,
            index,
        }
    }

    pub fn w(index: u32) -> Self {
        VertexId {
            class: VertexClass::W,
            index,
        }
    }

    /// Image of this vertex after `w_i` and `v_i` are identified.
    pub fn identify(self) -> DVertex {
        match self.class {
            VertexClass::U => DVertex {
                class: DClass::U,
                index: self.index,
            },
            VertexClass::V | VertexClass::W => DVertex {
                class: DClass::Vw,
                index: self.index,
            },
        }
    }
}

impl std::fmt::Display for VertexId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let c = match self.class {
            VertexClass::U => 'u',
            VertexClass::V => 'v',
            VertexClass::W => 'w',
        };
        write!(f, "{}{}", c, self.index)
    }
}

/// Vertex class of the projective drawing, after identification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DClass {
    U,
    Vw,
}

/// A vertex of the projective drawing of `K_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct DVertex {
    pub class: DClass,
    pub index: u32,
}

impl std::fmt::Display for DVertex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.class {
            DClass::U => write!(f, "u{}", self.index),
            DClass::Vw => write!(f, "vw{}", self.index),
        }
    }
}

/// Integer angular coordinate in half-steps, reduced to `[0, 2m)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Angle(pub u32);

impl Angle {
    pub fn value(self) -> u32 {
        self.0
    }

    pub fn lifted(self) -> i64 {
        i64::from(self.0)
    }
}

/// Angular position of a vertex.
///
/// `v_i` and `u_i` sit at `2i`; `w_i` sits at `(2i + m) mod 2m`, the midpoint
/// of the gap between `v_{i+2k}` and `v_{i+2k+1}`. Hence all `v`/`u` angles
/// are even and all `w` angles are odd.
pub fn angle_of(vertex: VertexId, p: &Params) -> Angle {
    debug_assert!(vertex.index < p.m());
    let turn = p.turn();
    match vertex.class {
        VertexClass::U | VertexClass::V => Angle((2 * vertex.index) % turn),
        VertexClass::W => Angle((2 * vertex.index + p.m()) % turn),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn koman_case() {
        let p = make_params(1, 1, 1).unwrap();
        assert_eq!(p.n(), 10);
        assert_eq!(p.m(), 5);
        assert_eq!(p.alpha(), Rational::from(BigInt::from(1)));
    }

    #[test]
    fn rejects_out_of_range_levels() {
        assert!(matches!(
            make_params(1, 3, 0),
            Err(ParamsError::LevelOutOfRange { name: "a", .. })
        ));
        assert!(matches!(make_params(0, 0, 0), Err(ParamsError::KTooSmall(0))));
    }

    #[test]
    fn k10_alpha_1_1() {
        let p = make_params(10, 11, 10).unwrap();
        assert_eq!(p.n(), 82);
        assert_eq!(
            p.alpha(),
            Rational::new(BigInt::from(11), BigInt::from(10))
        );
        assert_eq!(p.beta(), Rational::from(BigInt::from(1)));
    }

    #[test]
    fn from_rationals_requires_integral_levels() {
        let alpha = Rational::new(BigInt::from(11), BigInt::from(10));
        let beta = Rational::from(BigInt::from(1));
        assert!(Params::from_rationals(10, &alpha, &beta).is_ok());
        assert!(matches!(
            Params::from_rationals(7, &alpha, &beta),
            Err(ParamsError::NotIntegral { name: "alpha", .. })
        ));
    }

    #[test]
    fn signed_offset_examples() {
        assert_eq!(signed_offset(0, 3, 5), -2);
        assert_eq!(signed_offset(4, 0, 5), 1);
        assert_eq!(signed_offset(2, 2, 9), 0);
    }

    #[test]
    fn angle_examples() {
        let p = make_params(1, 1, 1).unwrap();
        assert_eq!(angle_of(VertexId::v(0), &p), Angle(0));
        assert_eq!(angle_of(VertexId::w(0), &p), Angle(5));
        let p2 = make_params(2, 2, 2).unwrap();
        assert_eq!(angle_of(VertexId::u(3), &p2), Angle(6));
    }

    #[test]
    fn parity_split_of_angles() {
        for k in 1..=4u32 {
            let p = make_params(k, k, k).unwrap();
            for i in 0..p.m() {
                assert_eq!(angle_of(VertexId::w(i), &p).value() % 2, 1);
                assert_eq!(angle_of(VertexId::v(i), &p).value() % 2, 0);
                assert_eq!(
                    angle_of(VertexId::v(i), &p),
                    angle_of(VertexId::u(i), &p)
                );
            }
        }
    }

    /// The angular order around the circles realizes the identification
    /// polygon `w_0 v_{2k+1} w_1 v_{2k+2} ...`: consecutive polygon vertices
    /// occupy consecutive half-step angles starting at `m`.
    #[test]
    fn polygon_interleaving() {
        for k in 1..=4u32 {
            let p = make_params(k, k, k).unwrap();
            let m = p.m();
            let mut expected = angle_of(VertexId::w(0), &p).value();
            for i in 0..m {
                let w = angle_of(VertexId::w(i), &p).value();
                assert_eq!(w, expected);
                let v = angle_of(VertexId::v((i + 2 * k + 1) % m), &p).value();
                assert_eq!(v, (expected + 1) % p.turn());
                expected = (expected + 2) % p.turn();
            }
        }
    }

    proptest! {
        #[test]
        fn signed_offset_antisymmetric(k in 1u32..200, i in 0u32..1000, j in 0u32..1000) {
            let m = 4 * k + 1;
            let (i, j) = (i % m, j % m);
            let d = signed_offset(i, j, m);
            let e = signed_offset(j, i, m);
            prop_assert!((d + e).rem_euclid(i64::from(m)) == 0);
            prop_assert!(d.unsigned_abs() <= u64::from((m - 1) / 2));
            prop_assert_eq!((i64::from(i) + d).rem_euclid(i64::from(m)), i64::from(j));
        }
    }
}
