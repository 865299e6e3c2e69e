//! Stability (`I^2 = QI`) and goodness (`I^2 = QI` and `Q : I = I`) of
//! monomial ideals against a caller-supplied monomial reduction `Q`.
//!
//! Goodness is decided through the finite colon test; no local cohomology is
//! computed. A parameter ideal is never good: `Q : Q` is the unit ideal.

use serde::Serialize;

use crate::classify::ClassLabel;
use crate::error::{require, Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StabilityCheck {
    pub stable: bool,
    /// A minimal generator of `I^2` outside `QI` when unstable.
    pub witness: Option<Monomial>,
}

/// Which test a witness refutes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "exponents", rename_all = "kebab-case")]
pub enum Witness {
    /// An element of `I^2` not in `QI`.
    Unstable(Monomial),
    /// An element of `Q : I` not in `I`.
    NotColonClosed(Monomial),
}

impl Witness {
    pub fn monomial(&self) -> &Monomial {
        match self {
            Witness::Unstable(m) | Witness::NotColonClosed(m) => m,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GoodIdealReport {
    pub stable: bool,
    pub colon_closed: bool,
    pub good: bool,
    /// `Q : I`.
    pub colon_result: MonomialIdeal,
    /// Present exactly when one of the two tests fails; the stability
    /// witness takes precedence.
    pub witness: Option<Witness>,
}

/// Among the generators of `big` outside `small`, the one involving the most
/// variables (ties go to the canonically first).
fn pick_witness(small: &MonomialIdeal, big: &MonomialIdeal) -> Option<Monomial> {
    let mut best: Option<&Monomial> = None;
    for g in big.gens() {
        if small.contains_monomial(g) {
            continue;
        }
        if best.is_none_or(|b| g.support_size() > b.support_size()) {
            best = Some(g);
        }
    }
    best.cloned()
}

fn check_reduction(i: &MonomialIdeal, q: &MonomialIdeal) -> Result<()> {
    if let Some(g) = i.first_outside(q)? {
        return Err(Error::ReductionNotContained { generator: g.to_string() });
    }
    Ok(())
}

pub fn is_stable(i: &MonomialIdeal, q: &MonomialIdeal) -> Result<StabilityCheck> {
    check_reduction(i, q)?;
    let square = i.power(2);
    let qi = q.product(i)?;
    // QI ⊆ I^2 always holds once Q ⊆ I.
    let witness = pick_witness(&qi, &square);
    Ok(StabilityCheck { stable: witness.is_none(), witness })
}

pub fn good_report(i: &MonomialIdeal, q: &MonomialIdeal) -> Result<GoodIdealReport> {
    let stability = is_stable(i, q)?;
    let colon_result = q.colon(i)?;
    let colon_closed = colon_result.equals(i)?;
    let witness = match stability.witness {
        Some(w) => Some(Witness::Unstable(w)),
        // I ⊆ Q : I always, so a failure shows up as a generator of Q : I.
        None => pick_witness(i, &colon_result).map(Witness::NotColonClosed),
    };
    Ok(GoodIdealReport {
        stable: stability.stable,
        colon_closed,
        good: stability.stable && colon_closed,
        colon_result,
        witness,
    })
}

/// What a good ideal in a regular ambient of dimension `d >= 3` forces on
/// its Rees algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HighGoodProfile {
    pub d: u32,
    /// Minimal generators of the canonical module, `d - 2`.
    #[serde(rename = "mu_K")]
    pub mu_k: u32,
    pub label: ClassLabel,
}

/// The canonical module of `R(I)` is `R t + ... + R t^(d-2)`, so it needs
/// `d - 2` generators. It is Gorenstein iff `d = 3`; otherwise it is almost
/// Gorenstein only after localizing.
pub fn high_good_profile(d: u32) -> Result<HighGoodProfile> {
    require(d >= 3, || format!("needs d >= 3, got {d}"))?;
    let mu_k = d - 2;
    let label = if mu_k == 1 {
        ClassLabel::GorensteinGraded
    } else {
        ClassLabel::AlmostGorensteinLocalOnly
    };
    Ok(HighGoodProfile { d, mu_k, label })
}
