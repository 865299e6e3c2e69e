//! The graded canonical module of `R(m^ell)` over a regular ambient of
//! dimension `d`, and the generator counts derived from it.
//!
//! Degreewise the canonical module is the unit ideal in degrees `1..=b` and
//! `m^(n ell - d + 1)` in every degree `n > b`, where `b = floor((d-2)/ell)`.
//! It is therefore generated by `t, ..., t^b` and `J t^(b+1)` with
//! `J = m^((b+1) ell - d + 1)`, and the ladder is stored as just `b` and the
//! exponent of `J`.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::combinatorics::{b_of, ineq_sides, mu_power, power_multiplicity, ExactInt};
use crate::error::{require, Error, Result};
use crate::monomial::{maximal_power, MonomialIdeal};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CanonicalLadder {
    pub d: u32,
    pub ell: u32,
    pub b: u32,
    /// `e` with `J = m^e`.
    pub tail_exponent: u32,
    /// Always `-1`: the Rees algebras here have a-invariant `-1`.
    pub a_invariant: i32,
}

/// One graded piece of the canonical module, as an ideal of the ambient ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LadderComponent {
    Unit,
    MaximalPower(u32),
}

impl CanonicalLadder {
    /// The degree-`n` component; `None` for `n <= 0`, where the module
    /// vanishes.
    pub fn component(&self, n: u32) -> Option<LadderComponent> {
        if n == 0 {
            return None;
        }
        if n <= self.b {
            return Some(LadderComponent::Unit);
        }
        let e = n * self.ell + 1 - self.d;
        Some(if e == 0 { LadderComponent::Unit } else { LadderComponent::MaximalPower(e) })
    }

    /// The degree-`n` component as an explicit monomial ideal in `d`
    /// variables.
    pub fn materialize(&self, n: u32) -> MonomialIdeal {
        let dim = self.d as usize;
        match self.component(n) {
            None => MonomialIdeal::zero(dim),
            Some(LadderComponent::Unit) => MonomialIdeal::unit(dim),
            Some(LadderComponent::MaximalPower(e)) => maximal_power(dim, e),
        }
    }

    pub fn tail_is_unit(&self) -> bool {
        self.tail_exponent == 0
    }

    /// `b + mu(J)`: minimal generators of the canonical module.
    pub fn generator_count(&self) -> ExactInt {
        ExactInt::from(self.b) + mu_power(self.d, u64::from(self.tail_exponent))
    }
}

pub fn ladder(d: u32, ell: u32) -> Result<CanonicalLadder> {
    require(d >= 2, || format!("ladder needs d >= 2, got {d}"))?;
    require(ell >= 1, || format!("ladder needs ell >= 1, got {ell}"))?;
    let b = b_of(d, ell);
    let tail_exponent = (b + 1) * ell + 1 - d;
    Ok(CanonicalLadder { d, ell, b, tail_exponent, a_invariant: -1 })
}

fn hypothesis(d: u32, ell: u32) -> Result<CanonicalLadder> {
    require(d >= 3 && ell >= 2, || {
        format!("needs d >= 3 and ell >= 2, got d = {d}, ell = {ell}")
    })?;
    ladder(d, ell)
}

/// Minimal generators of the canonical module of `R(m^ell)`.
pub fn mu_k(d: u32, ell: u32) -> Result<ExactInt> {
    Ok(hypothesis(d, ell)?.generator_count())
}

/// Minimal generators of `M K`, with `M = m R + R_+`:
/// `b mu(m) + mu(m J) + mu(m^ell J)`.
pub fn mu_mk(d: u32, ell: u32) -> Result<ExactInt> {
    let lad = hypothesis(d, ell)?;
    let e = u64::from(lad.tail_exponent);
    Ok(ExactInt::from(lad.b) * ExactInt::from(d) + mu_power(d, e + 1) + mu_power(d, e + u64::from(ell)))
}

/// The generator-count inequality `mu(mJ) + mu(m^ell J) <= mu(m^ell) + d mu(J)`
/// that an almost Gorenstein local `R(m^ell)` must satisfy.
pub fn agl_inequality(d: u32, ell: u32) -> Result<bool> {
    let lad = hypothesis(d, ell)?;
    let e = u64::from(lad.tail_exponent);
    let lhs = mu_power(d, e + 1) + mu_power(d, e + u64::from(ell));
    let rhs = mu_power(d, u64::from(ell)) + ExactInt::from(d) * mu_power(d, e);
    Ok(lhs <= rhs)
}

/// Generator count and multiplicity of the cokernel `C` of `R -> K_R`
/// when the canonical module is `R t + ... + R t^(c+1)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UlrichNumbers {
    pub c: u32,
    #[serde(serialize_with = "crate::serde_exact::ser")]
    pub mu_c: ExactInt,
    #[serde(serialize_with = "crate::serde_exact::ser")]
    pub e_c: ExactInt,
}

impl UlrichNumbers {
    pub fn is_ulrich(&self) -> bool {
        self.mu_c == self.e_c
    }
}

/// For `ell | d - 1` the ladder has unit tail, so `C ≅ A^c` with
/// `c = (d-1)/ell - 1`; `mu(C) = mu(K) - 1` and `e(C) = e(A) rank(C)`.
pub fn ulrich_numbers(d: u32, ell: u32) -> Result<UlrichNumbers> {
    let lad = ladder(d, ell)?;
    require((d - 1).is_multiple_of(ell), || {
        format!("ladder tail is not the unit ideal: {ell} does not divide {}", d - 1)
    })?;
    debug_assert!(lad.tail_is_unit());
    let c = (d - 1) / ell - 1;
    let mu_c = lad.generator_count() - 1;
    // The unit steps t, ..., t^b survive in C, each a free A-module of rank 1.
    let e_c = ambient_multiplicity(d) * ExactInt::from(lad.b);
    let expected = ExactInt::from(c);
    if mu_c != expected || e_c != expected {
        return Err(Error::InvariantBreach(format!(
            "Ulrich numbers for d = {d}, ell = {ell}: mu(C) = {mu_c}, e(C) = {e_c}, expected {c}"
        )));
    }
    Ok(UlrichNumbers { c, mu_c, e_c })
}

/// Why `R(m^ell)` cannot be almost Gorenstein graded when `ell | d - 1`
/// and `ell != d - 1`: a graded Ulrich cokernel would need at most `b`
/// generators yet has multiplicity at least `e(m^ell) = ell^d`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Obstruction {
    #[serde(serialize_with = "crate::serde_exact::ser")]
    pub mu_bound: ExactInt,
    #[serde(serialize_with = "crate::serde_exact::ser")]
    pub e_bound: ExactInt,
}

pub fn notgraded_obstruction(d: u32, ell: u32) -> Result<Obstruction> {
    let lad = hypothesis(d, ell)?;
    require((d - 1).is_multiple_of(ell), || format!("{ell} does not divide {}", d - 1))?;
    require(ell != d - 1, || format!("ell = d - 1 = {ell} is the Gorenstein case"))?;

    let mu_bound = ExactInt::from(lad.b);
    let e_bound = power_multiplicity(d, ell);
    if e_bound != ExactInt::from(ell).pow(d) {
        return Err(Error::InvariantBreach(format!(
            "multiplicity of m^{ell} in dimension {d} is {e_bound}, not {ell}^{d}"
        )));
    }
    let b_plus_one = ExactInt::from(lad.b + 1);
    if !(e_bound > b_plus_one && b_plus_one > mu_bound) {
        return Err(Error::InvariantBreach(format!(
            "obstruction chain fails for d = {d}, ell = {ell}: e = {e_bound}, b + 1 = {b_plus_one}, mu bound = {mu_bound}"
        )));
    }
    Ok(Obstruction { mu_bound, e_bound })
}

/// In dimension two, checks degree by degree that the ladder component
/// `m^(n ell - 1)` equals `(m^ell)^(n-1) J` with `J = (x^ell, y^ell) : m^ell`
/// computed by the monomial engine, for `1 <= n <= n_max`.
pub fn ladder_cross_check(d: u32, ell: u32, n_max: u32) -> Result<bool> {
    require(d == 2, || format!("cross-check is only available for d = 2, got {d}"))?;
    require(ell >= 2, || format!("cross-check needs ell >= 2, got {ell}"))?;
    let lad = ladder(d, ell)?;
    let i = maximal_power(2, ell);
    let j = MonomialIdeal::pure_powers(2, ell).colon(&i)?;
    let mut power = MonomialIdeal::unit(2);
    for n in 1..=n_max {
        let expected = power.product(&j)?;
        if !lad.materialize(n).equals(&expected)? {
            return Ok(false);
        }
        power = power.product(&i)?;
    }
    Ok(true)
}

/// Everything the ladder says about one `(d, ell)` with `d >= 3`, `ell >= 2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LadderReport {
    pub d: u32,
    pub ell: u32,
    pub b: u32,
    pub tail_exponent: u32,
    #[serde(rename = "mu_K", serialize_with = "crate::serde_exact::ser")]
    pub mu_k: ExactInt,
    #[serde(rename = "mu_MK", serialize_with = "crate::serde_exact::ser")]
    pub mu_mk: ExactInt,
    #[serde(serialize_with = "crate::serde_exact::ser")]
    pub gap: ExactInt,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub obstruction: Option<Obstruction>,
}

pub fn ladder_report(d: u32, ell: u32) -> Result<LadderReport> {
    let lad = hypothesis(d, ell)?;
    let gap = ineq_sides(d, ell)?.gap;
    let obstruction = if gap.is_zero() && ell != d - 1 {
        Some(notgraded_obstruction(d, ell)?)
    } else {
        None
    };
    Ok(LadderReport {
        d,
        ell,
        b: lad.b,
        tail_exponent: lad.tail_exponent,
        mu_k: lad.generator_count(),
        mu_mk: mu_mk(d, ell)?,
        gap,
        obstruction,
    })
}

/// `e(A) = 1` for the regular ambient, from the colength of powers of `m`.
pub fn ambient_multiplicity(d: u32) -> ExactInt {
    let e = power_multiplicity(d, 1);
    debug_assert!(e.is_one());
    e
}
