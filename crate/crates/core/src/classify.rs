//! Which Rees algebras `R(m^ell)` over a `d`-dimensional regular local ring
//! are Gorenstein, almost Gorenstein graded, or only almost Gorenstein after
//! localizing at the graded maximal ideal.

use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::canonical::{ladder, notgraded_obstruction, Obstruction};
use crate::combinatorics::{ineq_sides, ExactInt};
use crate::error::{require, Error, Result};

/// Strongest property known to hold, ordered weakest to strongest.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum ClassLabel {
    #[serde(rename = "X")]
    None,
    #[serde(rename = "AGL")]
    AlmostGorensteinLocalOnly,
    #[serde(rename = "AG")]
    AlmostGorensteinGraded,
    #[serde(rename = "Gor")]
    GorensteinGraded,
}

impl ClassLabel {
    pub const ALL: [ClassLabel; 4] = [
        ClassLabel::None,
        ClassLabel::AlmostGorensteinLocalOnly,
        ClassLabel::AlmostGorensteinGraded,
        ClassLabel::GorensteinGraded,
    ];

    /// The short table symbol: `Gor`, `AG`, `AGL` or `X`.
    pub fn symbol(self) -> &'static str {
        match self {
            ClassLabel::None => "X",
            ClassLabel::AlmostGorensteinLocalOnly => "AGL",
            ClassLabel::AlmostGorensteinGraded => "AG",
            ClassLabel::GorensteinGraded => "Gor",
        }
    }

    pub fn from_symbol(s: &str) -> Option<ClassLabel> {
        ClassLabel::ALL.into_iter().find(|l| l.symbol() == s)
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// The rule that decided a cell. Each rule yields exactly one label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    /// `ell = d - 1`: the Rees algebra is Gorenstein. In dimension two this
    /// is the parameter ideal `m`, whose Rees algebra is a hypersurface.
    GorensteinDiagonal,
    /// `ell = 1`, `d >= 3`: `m` is a parameter ideal, and its Rees algebra is
    /// almost Gorenstein graded.
    ParameterIdeal,
    /// `d = 2`, `ell >= 2`: powers of `m` are integrally closed in a regular
    /// ring of dimension two, so the Rees algebra is almost Gorenstein graded.
    DimensionTwo,
    /// `ell | d - 1`, `ell != d - 1`: almost Gorenstein after localizing,
    /// but the multiplicity obstruction rules out the graded property.
    DivisorLocalOnly,
    /// `ell` does not divide `d - 1`: the binomial gap is positive, so not
    /// even the localization is almost Gorenstein.
    GapPositive,
}

impl Rule {
    pub fn label(self) -> ClassLabel {
        match self {
            Rule::GorensteinDiagonal => ClassLabel::GorensteinGraded,
            Rule::ParameterIdeal | Rule::DimensionTwo => ClassLabel::AlmostGorensteinGraded,
            Rule::DivisorLocalOnly => ClassLabel::AlmostGorensteinLocalOnly,
            Rule::GapPositive => ClassLabel::None,
        }
    }
}

/// Numbers backing a label. Always recomputed from scratch.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Evidence {
    pub d: u32,
    pub ell: u32,
    pub b: u32,
    #[serde(rename = "mu_K", serialize_with = "crate::serde_exact::ser")]
    pub mu_k: ExactInt,
    /// The binomial gap; only defined for `d >= 3`, `ell >= 2`.
    #[serde(serialize_with = "crate::serde_exact::ser_opt")]
    pub gap: Option<ExactInt>,
    pub rule: Rule,
    pub obstruction: Option<Obstruction>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Cell {
    pub d: u32,
    pub ell: u32,
    pub label: ClassLabel,
    pub evidence: Evidence,
}

pub fn classify(d: u32, ell: u32) -> Result<(ClassLabel, Evidence)> {
    require(d >= 2, || format!("classification needs d >= 2, got {d}"))?;
    require(ell >= 1, || format!("classification needs ell >= 1, got {ell}"))?;

    let lad = ladder(d, ell)?;
    let gap = if d >= 3 && ell >= 2 { Some(ineq_sides(d, ell)?.gap) } else { None };

    let rule = if ell == d - 1 {
        Rule::GorensteinDiagonal
    } else if ell == 1 {
        Rule::ParameterIdeal
    } else if d == 2 {
        Rule::DimensionTwo
    } else if gap.as_ref().is_some_and(Zero::is_zero) {
        Rule::DivisorLocalOnly
    } else {
        Rule::GapPositive
    };
    let obstruction = match rule {
        Rule::DivisorLocalOnly => Some(notgraded_obstruction(d, ell)?),
        _ => None,
    };
    let evidence = Evidence {
        d,
        ell,
        b: lad.b,
        mu_k: lad.generator_count(),
        gap,
        rule,
        obstruction,
    };
    Ok((rule.label(), evidence))
}

/// All cells with `2 <= d <= d_max` and `1 <= ell <= ell_max`, `d`-major.
pub fn table(d_max: u32, ell_max: u32) -> Result<Vec<Cell>> {
    require(d_max >= 2, || format!("table needs d_max >= 2, got {d_max}"))?;
    require(ell_max >= 1, || format!("table needs ell_max >= 1, got {ell_max}"))?;
    let mut cells = Vec::with_capacity(((d_max - 1) * ell_max) as usize);
    for d in 2..=d_max {
        for ell in 1..=ell_max {
            let (label, evidence) = classify(d, ell)?;
            cells.push(Cell { d, ell, label, evidence });
        }
    }
    Ok(cells)
}

/// Ties a label back to the ladder numbers: zero gap exactly for `Gor` and
/// `AGL`, `mu(K) = 1` exactly for `Gor`, and a valid obstruction for `AGL`.
pub fn cross_check(d: u32, ell: u32) -> Result<bool> {
    require(d >= 3 && ell >= 2, || {
        format!("cross-check needs d >= 3 and ell >= 2, got d = {d}, ell = {ell}")
    })?;
    let (label, ev) = classify(d, ell)?;
    let gap = ev
        .gap
        .as_ref()
        .ok_or_else(|| Error::InvariantBreach(format!("no gap recorded for d = {d}, ell = {ell}")))?;

    let zero_gap = matches!(label, ClassLabel::GorensteinGraded | ClassLabel::AlmostGorensteinLocalOnly);
    let gorenstein = label == ClassLabel::GorensteinGraded;
    let obstruction_ok = match label {
        ClassLabel::AlmostGorensteinLocalOnly => {
            ev.obstruction.is_some() && notgraded_obstruction(d, ell).is_ok()
        }
        _ => ev.obstruction.is_none(),
    };
    Ok(zero_gap == gap.is_zero() && gorenstein == ev.mu_k.is_one() && obstruction_ok)
}
