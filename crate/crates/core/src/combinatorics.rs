//! Exact binomial arithmetic and the closed-form counts attached to powers of
//! the maximal ideal of a regular ambient ring.
//!
//! Everything here is a pure function of its arguments and works over
//! arbitrary-precision integers; nothing is ever rounded.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{require, Result};

/// Arbitrary-precision signed integer used for every count in the crate.
pub type ExactInt = BigInt;

/// `n choose m`, or zero when `m < 0` or `m > n`.
///
/// Computed with the multiplicative formula; every intermediate division is
/// exact because the running value is itself a binomial coefficient.
pub fn binom(n: u64, m: i64) -> ExactInt {
    if m < 0 || m as u64 > n {
        return ExactInt::zero();
    }
    let m = m as u64;
    let k = m.min(n - m);
    let mut acc = ExactInt::one();
    for j in 0..k {
        acc *= n - j;
        acc /= j + 1;
    }
    acc
}

/// Minimal number of generators of `m^k` in `d` variables: `C(k+d-1, d-1)`.
pub fn mu_power(d: u32, k: u64) -> ExactInt {
    assert!(d >= 1, "mu_power needs d >= 1");
    binom(k + u64::from(d) - 1, i64::from(d) - 1)
}

/// Length of `A/m^k` in `d` variables, i.e. the number of monomials of total
/// degree below `k`: `C(k+d-1, d)`.
pub fn colength_power(d: u32, k: u64) -> ExactInt {
    assert!(d >= 1, "colength_power needs d >= 1");
    if k == 0 {
        return ExactInt::zero();
    }
    binom(k + u64::from(d) - 1, i64::from(d))
}

/// `b = floor((d-2)/ell)`, the number of unit steps at the bottom of the
/// canonical ladder. Equal to `ceil((d-1)/ell) - 1`.
pub fn b_of(d: u32, ell: u32) -> u32 {
    assert!(d >= 2 && ell >= 1, "b_of needs d >= 2 and ell >= 1");
    let b = (d - 2) / ell;
    debug_assert_eq!(b, (d - 1).div_ceil(ell) - 1);
    b
}

/// The `k`-th forward difference at `start` of a sequence given by `f`.
pub fn forward_difference<F>(k: u32, start: u64, mut f: F) -> ExactInt
where
    F: FnMut(u64) -> ExactInt,
{
    let mut acc = ExactInt::zero();
    for j in 0..=k {
        let term = binom(u64::from(k), i64::from(j)) * f(start + u64::from(j));
        if (k - j).is_multiple_of(2) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// Multiplicity of `m^ell` in a regular ambient of dimension `d`, read off
/// as the `d`-th difference of `n -> colength(m^(ell n))` on `n = 1..=d+1`.
///
/// The colength is `C(ell n + d - 1, d)`, a polynomial of degree `d` in `n`
/// for every `n >= 0`, so the difference is exact.
pub fn power_multiplicity(d: u32, ell: u32) -> ExactInt {
    assert!(d >= 1 && ell >= 1);
    forward_difference(d, 1, |n| colength_power(d, u64::from(ell) * n))
}

/// Both sides of the binomial inequality that rules out almost Gorenstein
/// local Rees algebras of `m^ell` when `ell` does not divide `d - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IneqSides {
    pub d: u32,
    pub ell: u32,
    pub b: u32,
    /// `d - 2 - b*ell`, always in `0..ell`.
    pub i: u32,
    #[serde(serialize_with = "crate::serde_exact::ser")]
    pub lhs: ExactInt,
    #[serde(serialize_with = "crate::serde_exact::ser")]
    pub rhs: ExactInt,
    #[serde(serialize_with = "crate::serde_exact::ser")]
    pub gap: ExactInt,
}

fn check_ineq_hypothesis(d: u32, ell: u32) -> Result<()> {
    require(d >= 3, || format!("inequality needs d >= 3, got d = {d}"))?;
    require(ell >= 2, || format!("inequality needs ell >= 2, got ell = {ell}"))
}

/// Evaluates
/// `C((b+1)l+1, d-1) + C((b+2)l, d-1)` against
/// `C(l+d-1, d-1) + d C((b+1)l, d-1)` exactly.
pub fn ineq_sides(d: u32, ell: u32) -> Result<IneqSides> {
    check_ineq_hypothesis(d, ell)?;
    let b = b_of(d, ell);
    let i = d - 2 - b * ell;
    let (l, b64) = (u64::from(ell), u64::from(b));
    let top = i64::from(d) - 1;

    let lhs = binom((b64 + 1) * l + 1, top) + binom((b64 + 2) * l, top);
    let rhs = binom(l + u64::from(d) - 1, top) + ExactInt::from(d) * binom((b64 + 1) * l, top);
    let gap = &lhs - &rhs;
    Ok(IneqSides { d, ell, b, i, lhs, rhs, gap })
}

/// The same gap obtained by unrolling Pascal's rule:
/// `sum_{j=i+1}^{l-1} [C((b+1)l+j, d-2) - C((b+1)l, d-2)]`.
pub fn ineq_gap_telescoped(d: u32, ell: u32) -> Result<ExactInt> {
    check_ineq_hypothesis(d, ell)?;
    let b = b_of(d, ell);
    let i = d - 2 - b * ell;
    let base = u64::from(b + 1) * u64::from(ell);
    let m = i64::from(d) - 2;
    let floor = binom(base, m);
    let mut acc = ExactInt::zero();
    for j in (i + 1)..ell {
        acc += binom(base + u64::from(j), m) - &floor;
    }
    Ok(acc)
}

/// Bounds for a sweep of the binomial inequality over `3..=d_max` and
/// `2..=ell_max`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepBounds {
    pub d_max: u32,
    pub ell_max: u32,
}

impl Default for SweepBounds {
    fn default() -> Self {
        SweepBounds { d_max: 100, ell_max: 30 }
    }
}

/// What went wrong at one grid point of a sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum SweepViolation {
    NegativeGap { d: u32, ell: u32, gap: String },
    ZeroSetMismatch { d: u32, ell: u32, gap: String },
    TelescopeMismatch { d: u32, ell: u32, direct: String, telescoped: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepOutcome {
    pub points_checked: usize,
    pub zero_gap_points: usize,
    pub first_violation: Option<SweepViolation>,
}

impl SweepOutcome {
    pub fn holds(&self) -> bool {
        self.first_violation.is_none()
    }
}

/// Checks, over the whole grid, that the gap is non-negative, vanishes exactly
/// when `ell | d - 1`, and agrees with the telescoped sum.
pub fn sweep_inequality(bounds: SweepBounds) -> Result<SweepOutcome> {
    require(bounds.d_max >= 3 && bounds.ell_max >= 2, || {
        format!(
            "sweep bounds must be at least (3, 2), got ({}, {})",
            bounds.d_max, bounds.ell_max
        )
    })?;
    let mut outcome = SweepOutcome {
        points_checked: 0,
        zero_gap_points: 0,
        first_violation: None,
    };
    for d in 3..=bounds.d_max {
        for ell in 2..=bounds.ell_max {
            let sides = ineq_sides(d, ell)?;
            let telescoped = ineq_gap_telescoped(d, ell)?;
            outcome.points_checked += 1;
            let zero = sides.gap.is_zero();
            if zero {
                outcome.zero_gap_points += 1;
            }
            let violation = if sides.gap.is_negative() {
                Some(SweepViolation::NegativeGap { d, ell, gap: sides.gap.to_string() })
            } else if zero != ((d - 1) % ell == 0) {
                Some(SweepViolation::ZeroSetMismatch { d, ell, gap: sides.gap.to_string() })
            } else if telescoped != sides.gap {
                Some(SweepViolation::TelescopeMismatch {
                    d,
                    ell,
                    direct: sides.gap.to_string(),
                    telescoped: telescoped.to_string(),
                })
            } else {
                None
            };
            if outcome.first_violation.is_none() {
                outcome.first_violation = violation;
            }
        }
    }
    Ok(outcome)
}
