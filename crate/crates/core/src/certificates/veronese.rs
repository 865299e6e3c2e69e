//! The `r`-th Veronese subring `A = k[[s^r, s^(r-1) t, ..., t^r]]` of
//! `k[[s, t]]`, and monomial `A`-submodules of `k[[s, t]]`.
//!
//! `A` contains exactly the monomials `s^a t^b` with `r | a + b`, so a
//! monomial module is determined by its generators: `p` lies in the module
//! generated by `q` iff `p - q` is componentwise non-negative with degree
//! divisible by `r`. Inclusion of finitely generated modules is therefore
//! decided by checking each generator of the smaller one, and equality by
//! checking both ways.

use std::fmt;
use std::ops::Add;

use serde::Serialize;

use crate::error::{require, Result};

/// Exponents `(a, b)` of `s^a t^b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ExponentPair(pub u32, pub u32);

impl ExponentPair {
    pub fn degree(self) -> u32 {
        self.0 + self.1
    }

    pub fn scale(self, n: u32) -> ExponentPair {
        ExponentPair(self.0 * n, self.1 * n)
    }
}

impl Add for ExponentPair {
    type Output = ExponentPair;

    fn add(self, other: ExponentPair) -> ExponentPair {
        ExponentPair(
            self.0.checked_add(other.0).expect("exponent overflow"),
            self.1.checked_add(other.1).expect("exponent overflow"),
        )
    }
}

impl fmt::Display for ExponentPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let part = |name: &str, e: u32| match e {
            0 => None,
            1 => Some(name.to_string()),
            e => Some(format!("{name}^{e}")),
        };
        let parts: Vec<String> = [part("s", self.0), part("t", self.1)].into_iter().flatten().collect();
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join("*"))
        }
    }
}

/// A finitely generated monomial `A`-submodule of `k[[s, t]]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SemigroupModule {
    pub r: u32,
    gens: Vec<ExponentPair>,
}

impl SemigroupModule {
    /// Keeps only generators not reachable from another generator.
    pub fn new(r: u32, gens: impl IntoIterator<Item = ExponentPair>) -> Self {
        assert!(r >= 1);
        let mut all: Vec<ExponentPair> = gens.into_iter().collect();
        all.sort_by_key(|p| (p.degree(), std::cmp::Reverse(p.0)));
        all.dedup();
        let mut kept: Vec<ExponentPair> = Vec::new();
        for p in all {
            if !kept.iter().any(|&q| reaches(r, q, p)) {
                kept.push(p);
            }
        }
        SemigroupModule { r, gens: kept }
    }

    /// `A` itself.
    pub fn ring(r: u32) -> Self {
        SemigroupModule::new(r, [ExponentPair(0, 0)])
    }

    pub fn gens(&self) -> &[ExponentPair] {
        &self.gens
    }

    pub fn contains_point(&self, p: ExponentPair) -> bool {
        self.gens.iter().any(|&q| reaches(self.r, q, p))
    }

    pub fn contains(&self, other: &SemigroupModule) -> bool {
        assert_eq!(self.r, other.r);
        other.gens.iter().all(|&p| self.contains_point(p))
    }

    pub fn equals(&self, other: &SemigroupModule) -> bool {
        self.contains(other) && other.contains(self)
    }

    pub fn sum(&self, other: &SemigroupModule) -> SemigroupModule {
        assert_eq!(self.r, other.r);
        SemigroupModule::new(self.r, self.gens.iter().chain(&other.gens).copied())
    }

    pub fn product(&self, other: &SemigroupModule) -> SemigroupModule {
        assert_eq!(self.r, other.r);
        let gens = self
            .gens
            .iter()
            .flat_map(|&a| other.gens.iter().map(move |&b| a + b));
        SemigroupModule::new(self.r, gens)
    }

    /// `p * self`.
    pub fn shift(&self, p: ExponentPair) -> SemigroupModule {
        SemigroupModule::new(self.r, self.gens.iter().map(|&q| q + p))
    }

    pub fn power(&self, n: u32) -> SemigroupModule {
        let mut acc = SemigroupModule::ring(self.r);
        for _ in 0..n {
            acc = acc.product(self);
        }
        acc
    }

    pub fn max_generator_degree(&self) -> u32 {
        self.gens.iter().map(|p| p.degree()).max().unwrap_or(0)
    }
}

/// Whether `p` lies in `A q`.
fn reaches(r: u32, q: ExponentPair, p: ExponentPair) -> bool {
    p.0 >= q.0 && p.1 >= q.1 && (p.degree() - q.degree()).is_multiple_of(r)
}

/// Data of the Veronese example: the maximal ideal, the canonical ideal
/// `K = (s^(r-1) t, ..., s t^(r-1))`, and `x = s t^(r-1)`, `y = s^r`,
/// `z = t^r`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VeroneseInstance {
    pub r: u32,
    /// Ring generators of `A`; the same monomials generate `m`.
    pub a_gens: Vec<ExponentPair>,
    pub m_gens: Vec<ExponentPair>,
    pub k_gens: Vec<ExponentPair>,
    pub x: ExponentPair,
    pub y: ExponentPair,
    pub z: ExponentPair,
}

impl VeroneseInstance {
    /// Whether `s^a t^b` lies in `A`.
    pub fn in_ambient(&self, p: ExponentPair) -> bool {
        p.degree().is_multiple_of(self.r)
    }

    pub fn maximal_ideal(&self) -> SemigroupModule {
        SemigroupModule::new(self.r, self.m_gens.iter().copied())
    }

    pub fn canonical(&self) -> SemigroupModule {
        SemigroupModule::new(self.r, self.k_gens.iter().copied())
    }

    pub fn principal(&self, p: ExponentPair) -> SemigroupModule {
        SemigroupModule::new(self.r, [p])
    }
}

pub fn veronese_instance(r: u32) -> Result<VeroneseInstance> {
    require(r >= 2, || format!("Veronese instance needs r >= 2, got {r}"))?;
    let m_gens: Vec<ExponentPair> = (0..=r).rev().map(|a| ExponentPair(a, r - a)).collect();
    let k_gens = (1..r).rev().map(|a| ExponentPair(a, r - a)).collect();
    Ok(VeroneseInstance {
        r,
        a_gens: m_gens.clone(),
        m_gens,
        k_gens,
        x: ExponentPair(1, r - 1),
        y: ExponentPair(r, 0),
        z: ExponentPair(0, r),
    })
}

/// `m^2 = y m + z m`. Both sides are generated in degree `2r`, so generator
/// membership both ways settles it.
pub fn verify_minimal_multiplicity(inst: &VeroneseInstance) -> bool {
    let m = inst.maximal_ideal();
    let lhs = m.power(2);
    let rhs = m.shift(inst.y).sum(&m.shift(inst.z));
    lhs.equals(&rhs)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VeroneseClaimReport {
    pub r: u32,
    pub ell: u32,
    pub f: ExponentPair,
    pub g: ExponentPair,
    pub h: ExponentPair,
    /// `m^(ell+1) K = f m^ell K + m h`.
    pub identity_a: bool,
    /// `m^(2 ell) K = g m^ell K + m^ell h`.
    pub identity_b: bool,
    /// `m K = y K + x m`.
    pub precondition: bool,
    /// `m K = y m K + x m`, the variant with an extra factor of `m`.
    /// Holds only for `r = 2`.
    pub precondition_variant: bool,
    pub x_not_in_mk: bool,
    pub minimal_multiplicity: bool,
}

impl VeroneseClaimReport {
    pub fn holds(&self) -> bool {
        self.identity_a && self.identity_b && self.precondition && self.x_not_in_mk && self.minimal_multiplicity
    }
}

/// With `f = y`, `g = y^ell`, `h = x z^ell`, checks both claim identities
/// for `R(m^ell)` together with their preconditions.
pub fn good_agg_claim_report(inst: &VeroneseInstance, ell: u32) -> Result<VeroneseClaimReport> {
    require(ell >= 1, || format!("needs ell >= 1, got {ell}"))?;
    let m = inst.maximal_ideal();
    let k = inst.canonical();
    let f = inst.y;
    let g = inst.y.scale(ell);
    let h = inst.x + inst.z.scale(ell);

    let mk = m.product(&k);
    let m_ell = m.power(ell);
    let m_ell_k = m_ell.product(&k);

    let identity_a = m.power(ell + 1).product(&k).equals(&m_ell_k.shift(f).sum(&m.shift(h)));
    let identity_b = m.power(2 * ell).product(&k).equals(&m_ell_k.shift(g).sum(&m_ell.shift(h)));
    let x_m = m.shift(inst.x);
    let precondition = mk.equals(&k.shift(inst.y).sum(&x_m));
    let precondition_variant = mk.equals(&mk.shift(inst.y).sum(&x_m));

    Ok(VeroneseClaimReport {
        r: inst.r,
        ell,
        f,
        g,
        h,
        identity_a,
        identity_b,
        precondition,
        precondition_variant,
        x_not_in_mk: !mk.contains_point(inst.x),
        minimal_multiplicity: verify_minimal_multiplicity(inst),
    })
}

pub fn verify_good_agg_claim(inst: &VeroneseInstance, ell: u32) -> Result<bool> {
    let rep = good_agg_claim_report(inst, ell)?;
    Ok(rep.identity_a && rep.identity_b && rep.precondition)
}
