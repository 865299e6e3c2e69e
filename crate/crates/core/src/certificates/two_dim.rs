use serde::Serialize;

use crate::error::{Error, Result};
use crate::monomial::{maximal_power, Monomial, MonomialIdeal};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CertificateChecks {
    /// `m J = f J + m h`.
    #[serde(rename = "A")]
    pub identity_a: bool,
    /// `I J = g J + I h`.
    #[serde(rename = "B")]
    pub identity_b: bool,
}

/// Certificate for `R(m^ell)` over `k[x, y]`: with `I = m^ell`,
/// `Q = (x^ell, y^ell)` and `J = Q : I`, the elements `f = x`, `g = x^ell`,
/// `h = y^(ell-1)` satisfy both identities in [`CertificateChecks`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate2D {
    pub ell: u32,
    pub f: Monomial,
    pub g: Monomial,
    pub h: Monomial,
    pub i: MonomialIdeal,
    pub j: MonomialIdeal,
    pub checks: CertificateChecks,
}

impl Certificate2D {
    pub fn is_valid(&self) -> bool {
        self.checks.identity_a && self.checks.identity_b
    }
}

pub fn build_certificate_2dim(ell: u32) -> Result<Certificate2D> {
    if ell < 2 {
        return Err(Error::ParameterIdeal(format!(
            "ell = {ell} makes m^ell a parameter ideal; a certificate needs ell >= 2"
        )));
    }
    let m = MonomialIdeal::maximal(2);
    let i = maximal_power(2, ell);
    let j = MonomialIdeal::pure_powers(2, ell).colon(&i)?;
    let f = Monomial::var(2, 0);
    let g = Monomial::pure_power(2, 0, ell);
    let h = Monomial::pure_power(2, 1, ell - 1);

    let h_ideal = MonomialIdeal::new(2, [h.clone()])?;
    let identity_a = m.product(&j)?.equals(&j.scale(&f)?.sum(&m.scale(&h)?)?)?;
    let identity_b = i.product(&j)?.equals(&j.scale(&g)?.sum(&i.product(&h_ideal)?)?)?;

    Ok(Certificate2D {
        ell,
        f,
        g,
        h,
        i,
        j,
        checks: CertificateChecks { identity_a, identity_b },
    })
}

/// Per-degree outcome of the containment `M · JR ⊆ (f, g t) JR + R h`:
/// degree 0 checks `m J ⊆ f J + m h`, degree `n >= 1` checks
/// `I^n J ⊆ g J I^(n-1) + I^n h`. Both right-hand sides sit inside the
/// degree-`n` piece of `(f, g t) JR + R h`.
pub fn claim_containment_by_degree(cert: &Certificate2D, n_max: u32) -> Result<Vec<bool>> {
    let m = MonomialIdeal::maximal(2);
    let mut out = Vec::with_capacity(n_max as usize + 1);
    let lhs0 = m.product(&cert.j)?;
    let rhs0 = cert.j.scale(&cert.f)?.sum(&m.scale(&cert.h)?)?;
    out.push(rhs0.contains(&lhs0)?);

    let gj = cert.j.scale(&cert.g)?;
    let mut prev = MonomialIdeal::unit(2); // I^(n-1)
    for _ in 1..=n_max {
        let current = prev.product(&cert.i)?; // I^n
        let lhs = current.product(&cert.j)?;
        let rhs = gj.product(&prev)?.sum(&current.scale(&cert.h)?)?;
        out.push(rhs.contains(&lhs)?);
        prev = current;
    }
    Ok(out)
}

pub fn verify_claim_containment(cert: &Certificate2D, n_max: u32) -> Result<bool> {
    Ok(claim_containment_by_degree(cert, n_max)?.into_iter().all(|ok| ok))
}
