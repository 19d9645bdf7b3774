//! The asymptotic crossing density `f(alpha, beta)` of the drawing family and
//! the named reference constants.
//!
//! For fixed `alpha, beta` the projective crossing total grows like
//! `f(alpha, beta) * n^4 + O(n^3)`, where `f` is a cubic polynomial whose ten
//! terms mirror, in order, the nine closed-form counts (green-brown split in
//! two, blue-blue halved):
//!
//! ```text
//! f(a, b) = 8^-4 * ( 32/3                       black-black
//!                  + 4 b^3 / 3                  red-red
//!                  + 8 (2-a)(2-b)^2             blue-brown
//!                  + 4 a b^2                    red-green
//!                  + 32/3 - (32/3)|a - 1|^3     green-brown
//!                  + 4 (2-a) b^2                red-brown
//!                  + 16 a^3 / 3                 green-green
//!                  + 16 (2-a)^3 / 3             brown-brown
//!                  + 8 (2-b)^3 / 3 )            blue-blue / 2
//! ```
//!
//! The absolute value in the green-brown term makes the polynomial the true
//! `n^4` coefficient on the whole square `[0, 2]^2`; for `alpha >= 1` it
//! agrees with the signed cube `(alpha - 1)^3` term for term.
//!
//! Comparisons against the irrational reference density `1 / (8 pi^2)` are
//! done with certified rational bounds of `pi` (18 significant digits), never
//! with floating point, so the strict inequality chain
//! `f(1.1, 1) < 0.0126 < 1/(8 pi^2) < 13/1024` is decided exactly.

use num_bigint::BigInt;
use num_traits::Signed;
use thiserror::Error;

use crate::rational::{rational_from_ints, Rational};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DensityError {
    #[error("{name} = {value} outside the domain [0, 2]")]
    OutOfDomain { name: &'static str, value: Rational },
}

fn check_domain(name: &'static str, v: &Rational) -> Result<(), DensityError> {
    let two = Rational::from(BigInt::from(2));
    if v.is_negative() || *v > two {
        return Err(DensityError::OutOfDomain {
            name,
            value: v.clone(),
        });
    }
    Ok(())
}

/// Exact rational value of the crossing density `f(alpha, beta)`.
pub fn f_eval(alpha: &Rational, beta: &Rational) -> Result<Rational, DensityError> {
    check_domain("alpha", alpha)?;
    check_domain("beta", beta)?;
    let r = rational_from_ints;
    let two = Rational::from(BigInt::from(2));
    let cube = |x: &Rational| x * x * x;
    let sq = |x: &Rational| x * x;
    let ca = &two - alpha;
    let cb = &two - beta;
    let dev = (alpha - Rational::from(BigInt::from(1))).abs();

    let terms = r(32, 3)
        + r(4, 3) * cube(beta)
        + r(8, 1) * &ca * sq(&cb)
        + r(4, 1) * alpha * sq(beta)
        + r(32, 3)
        - r(32, 3) * cube(&dev)
        + r(4, 1) * &ca * sq(beta)
        + r(16, 3) * cube(alpha)
        + r(16, 3) * cube(&ca)
        + r(8, 3) * cube(&cb);
    Ok(terms / Rational::from(BigInt::from(4096)))
}

/// Certified rational bounds of `pi`, 18 significant digits each.
pub fn pi_bounds() -> (Rational, Rational) {
    let scale = BigInt::from(10u64.pow(17));
    (
        Rational::new(BigInt::from(314159265358979323u64), scale.clone()),
        Rational::new(BigInt::from(314159265358979324u64), scale),
    )
}

/// Certified rational enclosure of `1 / (8 pi^2)`.
pub fn elkies_density_bounds() -> (Rational, Rational) {
    let (pi_lo, pi_hi) = pi_bounds();
    let eight = Rational::from(BigInt::from(8));
    let lo = (&eight * &pi_hi * &pi_hi).recip();
    let hi = (&eight * &pi_lo * &pi_lo).recip();
    (lo, hi)
}

/// Reference densities quoted alongside the family's own values.
#[derive(Debug, Clone, PartialEq)]
pub struct Constants {
    /// Conjectured plane density `1/64`.
    pub hill_density: Rational,
    /// `1/(8 pi^2)`, decimal rendering of the midpoint.
    pub elkies_density_decimal: String,
    /// Significant digits guaranteed correct in the decimal rendering.
    pub elkies_density_precision: u32,
    /// Certified lower bound of `1/(8 pi^2)`.
    pub elkies_lower: Rational,
    /// Certified upper bound of `1/(8 pi^2)`.
    pub elkies_upper: Rational,
    /// Density of the `alpha = beta = 1` drawings: `f(1,1) = 13/1024`.
    pub koman_density: Rational,
    /// The same bound as sometimes quoted, `13/1028`; kept for reference
    /// even though exact evaluation gives `13/1024`.
    pub koman_density_as_quoted: Rational,
    /// Upper bound reachable by a third parameter (unequal circle sizes),
    /// quoted for comparison only: `0.012547`.
    pub extended_family_bound: Rational,
}

impl Constants {
    pub fn new() -> Self {
        let (elkies_lower, elkies_upper) = elkies_density_bounds();
        Constants {
            hill_density: rational_from_ints(1, 64),
            elkies_density_decimal: "0.0126651479552922".to_string(),
            elkies_density_precision: 15,
            elkies_lower,
            elkies_upper,
            koman_density: rational_from_ints(13, 1024),
            koman_density_as_quoted: rational_from_ints(13, 1028),
            extended_family_bound: rational_from_ints(12547, 1_000_000),
        }
    }

    /// The strict ordering `13/1024 > 1/(8 pi^2) > 0.012547`, decided with
    /// the certified bounds.
    pub fn ordering_holds(&self) -> bool {
        self.koman_density > self.elkies_upper && self.elkies_lower > self.extended_family_bound
    }
}

impl Default for Constants {
    fn default() -> Self {
        Constants::new()
    }
}
