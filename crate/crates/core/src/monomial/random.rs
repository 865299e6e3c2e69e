//! Seeded random monomial ideals for oracle comparisons.

use rand::Rng;

use super::{Monomial, MonomialIdeal};

/// A random ideal in `dim` variables with between one and `max_gens`
/// generators of degree at most `max_degree`.
pub fn random_ideal<R: Rng + ?Sized>(rng: &mut R, dim: usize, max_gens: usize, max_degree: u32) -> MonomialIdeal {
    assert!(dim >= 1 && max_gens >= 1);
    let count = rng.gen_range(1..=max_gens);
    let gens = (0..count).map(|_| random_monomial(rng, dim, max_degree));
    MonomialIdeal::new(dim, gens).expect("dimensions agree")
}

/// A random monomial of total degree at most `max_degree`.
pub fn random_monomial<R: Rng + ?Sized>(rng: &mut R, dim: usize, max_degree: u32) -> Monomial {
    let degree = rng.gen_range(0..=max_degree);
    let mut exps = vec![0u32; dim];
    for _ in 0..degree {
        exps[rng.gen_range(0..dim)] += 1;
    }
    Monomial::new(exps).expect("dim >= 1")
}
