use super::ideal::{compositions, minimalize};
use super::{Monomial, MonomialIdeal};
use crate::error::{Error, Result};

/// A degree bound that makes [`brute_colon`] exact for `lhs : rhs`.
///
/// Every generator of `lhs : rhs` divides the lcm of the generators of
/// `lhs`, since its exponents are maxima of `max(g_i, m_i) - m_i <= g_i`.
pub fn sufficient_colon_bound(lhs: &MonomialIdeal) -> u64 {
    lhs.gens()
        .iter()
        .fold(Monomial::one(lhs.dim()), |acc, g| acc.lcm(g))
        .degree()
}

/// Exhaustive colon: every monomial `u` of degree at most `degree_bound`
/// with `u * rhs ⊆ lhs`, minimalized. Agrees with [`MonomialIdeal::colon`]
/// once the bound reaches [`sufficient_colon_bound`].
pub fn brute_colon(lhs: &MonomialIdeal, rhs: &MonomialIdeal, degree_bound: u64) -> Result<MonomialIdeal> {
    if lhs.dim() != rhs.dim() {
        return Err(Error::DimensionMismatch { left: lhs.dim(), right: rhs.dim() });
    }
    let dim = lhs.dim();
    let mut found = Vec::new();
    let mut scratch = vec![0u32; dim];
    for deg in 0..=degree_bound {
        let deg = u32::try_from(deg).expect("degree bound fits in u32");
        let mut layer = Vec::new();
        compositions(&mut scratch, 0, deg, &mut layer);
        found.extend(
            layer
                .into_iter()
                .filter(|u| rhs.gens().iter().all(|m| lhs.contains_monomial(&u.mul(m)))),
        );
    }
    Ok(MonomialIdeal::from_minimal(dim, minimalize(found)))
}
