//! Minimization of the crossing density over `[0, 2]^2` and of the exact
//! projective totals over the integer level lattice.
//!
//! The continuous search is a deterministic grid scan in exact rational
//! arithmetic followed by box refinement: each round re-grids a box around
//! the incumbent and halves the box. The incumbent only ever improves, and
//! ties break toward the lexicographically smallest `(alpha, beta)`, so the
//! result is independent of evaluation order and thread count.
//!
//! Nothing here claims global optimality; the output is an upper-bound
//! certificate for the family's best density, which is all the headline
//! comparison against `1/(8 pi^2)` needs.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde_json::json;

use crate::density::f_eval;
use crate::formulas::pcr_exact;
use crate::params::Params;
use crate::rational::{to_decimal_string, to_fraction_string, Rational};

pub const MINIMIZE_SCHEMA: &str = "projcross-minimize/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    GridRefine,
    Lattice,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::GridRefine => "grid+refine",
            Method::Lattice => "lattice",
        }
    }
}

/// Outcome of a minimization run.
#[derive(Debug, Clone, PartialEq)]
pub struct MinimizationResult {
    pub method: Method,
    /// Best point found, `(alpha, beta)`.
    pub argmin: (Rational, Rational),
    /// Exact value at the best point: `f(argmin)` for the continuous search,
    /// the projective crossing total for the lattice search.
    pub min_value: Rational,
    pub evaluations: u64,
    /// Every argmin attaining the minimum (lattice search only reports ties;
    /// the continuous search reports the single lexicographic winner).
    pub tied_argmins: Vec<(Rational, Rational)>,
}

impl MinimizationResult {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "schema": MINIMIZE_SCHEMA,
            "method": self.method.name(),
            "argmin": {
                "alpha": to_fraction_string(&self.argmin.0),
                "beta": to_fraction_string(&self.argmin.1),
            },
            "min_value": to_fraction_string(&self.min_value),
            "min_value_decimal": to_decimal_string(&self.min_value, 12),
            "decimal_precision": 12,
            "evaluations": self.evaluations,
            "tied_argmins": self.tied_argmins.iter()
                .map(|(a, b)| json!([to_fraction_string(a), to_fraction_string(b)]))
                .collect::<Vec<_>>(),
        })
    }
}

fn clamp_unit_square(x: Rational) -> Rational {
    let zero = Rational::zero();
    let two = Rational::from(BigInt::from(2));
    if x.is_negative() {
        zero
    } else if x > two {
        two
    } else {
        x
    }
}

/// Evaluates `f` on a set of points and returns the best, ties broken toward
/// the lexicographically smallest point. Points must lie in the domain.
fn best_of(points: Vec<(Rational, Rational)>) -> ((Rational, Rational), Rational, u64) {
    let evals = points.len() as u64;
    let best = points
        .into_par_iter()
        .map(|(a, b)| {
            let v = f_eval(&a, &b).expect("grid points stay inside the domain");
            (v, a, b)
        })
        .reduce_with(|x, y| {
            // order by (value, alpha, beta)
            if (y.0.clone(), y.1.clone(), y.2.clone()) < (x.0.clone(), x.1.clone(), x.2.clone()) {
                y
            } else {
                x
            }
        })
        .expect("point set is never empty");
    ((best.1, best.2), best.0, evals)
}

/// Grid scan of `f` over `[0, 2]^2` at spacing `grid_step`, followed by
/// `refine_rounds` rounds of box refinement around the incumbent.
pub fn minimize_f(grid_step: &Rational, refine_rounds: u32) -> MinimizationResult {
    assert!(grid_step.is_positive(), "grid step must be positive");
    let two = Rational::from(BigInt::from(2));

    let mut points = Vec::new();
    let mut alpha = Rational::zero();
    while alpha <= two {
        let mut beta = Rational::zero();
        while beta <= two {
            points.push((alpha.clone(), beta.clone()));
            beta += grid_step;
        }
        alpha += grid_step;
    }
    let (mut argmin, mut min_value, mut evaluations) = best_of(points);

    // Refinement: sample a (2s+1)^2 grid over incumbent +- half_width,
    // halving the box each round. s = 4 keeps rounds cheap while the box
    // shrinks geometrically.
    const SUBDIV: i64 = 4;
    let mut half_width = grid_step.clone();
    for _ in 0..refine_rounds {
        let step = &half_width / Rational::from(BigInt::from(SUBDIV));
        let mut points = Vec::new();
        for i in -SUBDIV..=SUBDIV {
            for j in -SUBDIV..=SUBDIV {
                let a = clamp_unit_square(&argmin.0 + Rational::from(BigInt::from(i)) * &step);
                let b = clamp_unit_square(&argmin.1 + Rational::from(BigInt::from(j)) * &step);
                points.push((a, b));
            }
        }
        let (cand, value, evals) = best_of(points);
        evaluations += evals;
        if value < min_value || (value == min_value && cand < argmin) {
            argmin = cand;
            min_value = value;
        }
        half_width /= Rational::from(BigInt::from(2));
    }

    MinimizationResult {
        method: Method::GridRefine,
        argmin: argmin.clone(),
        min_value,
        evaluations,
        tied_argmins: vec![argmin],
    }
}

/// Exhaustive minimum of the exact projective crossing total over all
/// `(a, b)` levels admissible for the given `k`, with the full tie set.
pub fn minimize_lattice(k: u32) -> MinimizationResult {
    assert!(k >= 1);
    let levels: Vec<(u32, u32)> = (0..=2 * k)
        .flat_map(|a| (0..=2 * k).map(move |b| (a, b)))
        .collect();
    let evaluations = levels.len() as u64;
    let values: Vec<(BigInt, u32, u32)> = levels
        .into_par_iter()
        .map(|(a, b)| {
            let p = Params::new(k, a, b).expect("lattice points are admissible");
            (pcr_exact(&p), a, b)
        })
        .collect();
    let min = values
        .iter()
        .map(|(v, _, _)| v)
        .min()
        .expect("lattice is never empty")
        .clone();
    let tied: Vec<(u32, u32)> = values
        .iter()
        .filter(|(v, _, _)| *v == min)
        .map(|&(_, a, b)| (a, b))
        .collect();
    let to_ratio = |x: u32| Rational::new(BigInt::from(x), BigInt::from(k));
    let tied_argmins: Vec<_> = tied
        .iter()
        .map(|&(a, b)| (to_ratio(a), to_ratio(b)))
        .collect();
    let (a0, b0) = tied[0];
    MinimizationResult {
        method: Method::Lattice,
        argmin: (to_ratio(a0), to_ratio(b0)),
        min_value: Rational::from(min),
        evaluations,
        tied_argmins,
    }
}
