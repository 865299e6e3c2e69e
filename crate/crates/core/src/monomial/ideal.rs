use std::collections::HashMap;
use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use super::Monomial;
use crate::combinatorics::{forward_difference, ExactInt};
use crate::error::{Error, Result};

/// A monomial ideal, held as its unique minimal generating set.
///
/// Generators are sorted by degree and then lexicographically descending, so
/// two ideals are equal exactly when their generator lists are. The empty
/// list is the zero ideal and `[1]` is the unit ideal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct MonomialIdeal {
    dim: usize,
    gens: Vec<Monomial>,
}

/// Reduces a list of same-dimension monomials to the divisibility-minimal
/// antichain, sorted canonically.
pub(crate) fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(|a, b| a.graded_cmp(b));
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    // kept[..lower] all have degree strictly below the current candidate;
    // a distinct monomial of the same degree can never divide it.
    let mut lower = 0;
    let mut current_degree = None;
    for g in gens {
        let deg = g.degree();
        if current_degree != Some(deg) {
            current_degree = Some(deg);
            lower = kept.len();
        }
        if !kept[..lower].iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept
}

fn same_dim(left: usize, right: usize) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { left, right })
    }
}

impl MonomialIdeal {
    /// The ideal generated by `gens` in `dim` variables.
    pub fn new(dim: usize, gens: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        let gens: Vec<Monomial> = gens.into_iter().collect();
        for g in &gens {
            same_dim(dim, g.dim())?;
        }
        Ok(MonomialIdeal { dim, gens: minimalize(gens) })
    }

    /// Convenience constructor from raw exponent vectors.
    pub fn from_exponents(dim: usize, exps: &[&[u32]]) -> Result<Self> {
        let gens = exps
            .iter()
            .map(|e| Monomial::new(e.to_vec()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(dim, gens)
    }

    pub(crate) fn from_minimal(dim: usize, gens: Vec<Monomial>) -> Self {
        MonomialIdeal { dim, gens }
    }

    pub fn zero(dim: usize) -> Self {
        assert!(dim >= 1);
        MonomialIdeal { dim, gens: Vec::new() }
    }

    pub fn unit(dim: usize) -> Self {
        MonomialIdeal { dim, gens: vec![Monomial::one(dim)] }
    }

    /// The maximal ideal `(x_1, ..., x_d)`.
    pub fn maximal(dim: usize) -> Self {
        maximal_power(dim, 1)
    }

    /// `(x_1^e, ..., x_d^e)`.
    pub fn pure_powers(dim: usize, e: u32) -> Self {
        let gens = (0..dim).map(|i| Monomial::pure_power(dim, i, e)).collect();
        if e == 0 {
            return Self::unit(dim);
        }
        MonomialIdeal { dim, gens }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(Monomial::is_one)
    }

    pub fn max_generator_degree(&self) -> u64 {
        self.gens.iter().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn member(&self, u: &Monomial) -> Result<bool> {
        same_dim(self.dim, u.dim())?;
        Ok(self.contains_monomial(u))
    }

    pub(crate) fn contains_monomial(&self, u: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(u))
    }

    /// Whether `other` is contained in `self`.
    pub fn contains(&self, other: &MonomialIdeal) -> Result<bool> {
        same_dim(self.dim, other.dim)?;
        Ok(other.gens.iter().all(|g| self.contains_monomial(g)))
    }

    /// The first generator of `other` lying outside `self`, if any.
    pub fn first_outside(&self, other: &MonomialIdeal) -> Result<Option<Monomial>> {
        same_dim(self.dim, other.dim)?;
        Ok(other.gens.iter().find(|g| !self.contains_monomial(g)).cloned())
    }

    pub fn equals(&self, other: &MonomialIdeal) -> Result<bool> {
        Ok(self.contains(other)? && other.contains(self)?)
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        same_dim(self.dim, other.dim)?;
        let gens = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(MonomialIdeal { dim: self.dim, gens: minimalize(gens) })
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        same_dim(self.dim, other.dim)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.mul(b));
            }
        }
        Ok(MonomialIdeal { dim: self.dim, gens: minimalize(gens) })
    }

    /// `u * self` for a single monomial `u`.
    pub fn scale(&self, u: &Monomial) -> Result<MonomialIdeal> {
        same_dim(self.dim, u.dim())?;
        let gens = self.gens.iter().map(|g| g.mul(u)).collect();
        Ok(MonomialIdeal { dim: self.dim, gens })
    }

    pub fn power(&self, n: u32) -> MonomialIdeal {
        let mut acc = MonomialIdeal::unit(self.dim);
        for _ in 0..n {
            acc = acc.product(self).expect("same dimension");
        }
        acc
    }

    pub fn intersection(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        same_dim(self.dim, other.dim)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.lcm(b));
            }
        }
        Ok(MonomialIdeal { dim: self.dim, gens: minimalize(gens) })
    }

    /// `self : (m)`, generated by `lcm(g, m) / m` over the generators `g`.
    pub fn colon_monomial(&self, m: &Monomial) -> Result<MonomialIdeal> {
        same_dim(self.dim, m.dim())?;
        let gens = self.gens.iter().map(|g| g.colon_by(m)).collect();
        Ok(MonomialIdeal { dim: self.dim, gens: minimalize(gens) })
    }

    /// `self : other = { u : u * other ⊆ self }`, the intersection of the
    /// colons by each generator of `other`.
    pub fn colon(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        same_dim(self.dim, other.dim)?;
        let (first, rest) = other.gens.split_first().ok_or(Error::ZeroDivisor)?;
        let mut acc = self.colon_monomial(first)?;
        for m in rest {
            if acc.is_zero() {
                break;
            }
            acc = acc.intersection(&self.colon_monomial(m)?)?;
        }
        Ok(acc)
    }

    /// For each variable, the smallest `e` with `x_i^e` in the ideal.
    fn pure_power_bounds(&self) -> Result<Vec<u32>> {
        if self.is_unit() {
            return Ok(vec![0; self.dim]);
        }
        let mut bounds: Vec<Option<u32>> = vec![None; self.dim];
        for g in &self.gens {
            if let Some(i) = g.pure_variable() {
                let e = g.exponents()[i];
                bounds[i] = Some(bounds[i].map_or(e, |b| b.min(e)));
            }
        }
        bounds
            .into_iter()
            .enumerate()
            .map(|(variable, b)| b.ok_or(Error::NotPrimary { variable }))
            .collect()
    }

    /// Whether some power of every variable lies in the ideal.
    pub fn is_primary(&self) -> bool {
        self.pure_power_bounds().is_ok()
    }

    /// Length of `A/I`: the number of standard monomials, i.e. monomials in
    /// the box `e_i < b_i` (with `x_i^{b_i}` the pure-power generators) that
    /// lie outside the ideal.
    ///
    /// The box is swept one slab of the last variable at a time: fixing
    /// `x_d^a`, the standard monomials of the slab are those of the ideal in
    /// `d - 1` variables generated by the generators with `d`-th exponent at
    /// most `a`. Slabs only change at exponents that occur in generators, and
    /// repeated slab ideals are memoized.
    pub fn colength(&self) -> Result<ExactInt> {
        self.pure_power_bounds()?;
        let mut memo = HashMap::new();
        Ok(standard_count(self.dim, &self.gens, &mut memo))
    }

    /// Multiplicity `e(I)`, the `d`-th forward difference of
    /// `n -> colength(I^n)` on `n = 1..=d+1`.
    ///
    /// Exact whenever the colength of powers agrees with its Hilbert-Samuel
    /// polynomial from `n = 1` on, which is the case for powers of the
    /// maximal ideal and for pure-power ideals.
    pub fn multiplicity(&self) -> Result<ExactInt> {
        self.pure_power_bounds()?;
        let d = self.dim as u32;
        let mut colengths = Vec::with_capacity(self.dim + 1);
        let mut power = self.clone();
        for n in 1..=d + 1 {
            if n > 1 {
                power = power.product(self)?;
            }
            colengths.push(power.colength()?);
        }
        Ok(forward_difference(d, 1, |n| colengths[(n - 1) as usize].clone()))
    }
}

/// Standard-monomial count of a primary ideal given by minimal generators.
fn standard_count(
    dim: usize,
    gens: &[Monomial],
    memo: &mut HashMap<Vec<Monomial>, ExactInt>,
) -> ExactInt {
    if gens.iter().any(Monomial::is_one) {
        return ExactInt::zero();
    }
    if dim == 1 {
        let e = gens.iter().map(|g| g.exponents()[0]).min().expect("primary");
        return ExactInt::from(e);
    }
    if let Some(v) = memo.get(gens) {
        return v.clone();
    }
    let last = dim - 1;
    let mut levels: Vec<u32> = gens.iter().map(|g| g.exponents()[last]).collect();
    levels.sort_unstable();
    levels.dedup();
    debug_assert_eq!(levels[0], 0);

    let mut by_level: Vec<&Monomial> = gens.iter().collect();
    by_level.sort_by_key(|g| g.exponents()[last]);

    let mut total = ExactInt::zero();
    let mut slab: Vec<Monomial> = Vec::new();
    let mut next = 0;
    for (k, &a) in levels.iter().enumerate() {
        while next < by_level.len() && by_level[next].exponents()[last] == a {
            slab.push(by_level[next].truncate_last());
            next += 1;
        }
        slab = minimalize(slab);
        // The top level holds the pure power of the last variable, whose
        // slab is the unit ideal.
        let Some(&upper) = levels.get(k + 1) else { break };
        let count = standard_count(dim - 1, &slab, memo);
        total += count * (upper - a);
    }
    memo.insert(gens.to_vec(), total.clone());
    total
}

/// `m^ell` in `dim` variables: every monomial of total degree `ell`.
pub fn maximal_power(dim: usize, ell: u32) -> MonomialIdeal {
    assert!(dim >= 1);
    let mut gens = Vec::new();
    let mut current = vec![0u32; dim];
    compositions(&mut current, 0, ell, &mut gens);
    MonomialIdeal::from_minimal(dim, gens)
}

/// Appends every exponent vector with the given remaining degree, first
/// coordinate descending.
pub(crate) fn compositions(current: &mut Vec<u32>, pos: usize, remaining: u32, out: &mut Vec<Monomial>) {
    if pos + 1 == current.len() {
        current[pos] = remaining;
        out.push(Monomial::from_vec(current.clone()));
        return;
    }
    for e in (0..=remaining).rev() {
        current[pos] = e;
        compositions(current, pos + 1, remaining - e, out);
    }
    current[pos] = 0;
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(dim: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(dim, gens).unwrap()
    }

    #[test]
    fn minimalize_examples() {
        assert_eq!(ideal(1, &[&[2], &[3]]), ideal(1, &[&[2]]));
        let i = ideal(2, &[&[1, 0], &[0, 1], &[1, 1]]);
        assert_eq!(i.gens().len(), 2);
        assert!(MonomialIdeal::new(2, []).unwrap().is_zero());
    }

    #[test]
    fn mixed_dimensions_rejected() {
        let gens = vec![Monomial::new(vec![1]).unwrap(), Monomial::new(vec![1, 0]).unwrap()];
        assert!(matches!(MonomialIdeal::new(1, gens), Err(Error::DimensionMismatch { .. })));
        let a = MonomialIdeal::maximal(2);
        let b = MonomialIdeal::maximal(3);
        assert!(a.product(&b).is_err());
        assert!(a.sum(&b).is_err());
        assert!(a.colon(&b).is_err());
        assert!(a.contains(&b).is_err());
        assert!(a.member(&Monomial::one(3)).is_err());
    }

    #[test]
    fn products_and_powers() {
        let x = ideal(2, &[&[1, 0]]);
        let y = ideal(2, &[&[0, 1]]);
        assert_eq!(x.product(&y).unwrap(), ideal(2, &[&[1, 1]]));
        assert_eq!(
            MonomialIdeal::maximal(2).power(2),
            ideal(2, &[&[2, 0], &[1, 1], &[0, 2]])
        );
        assert_eq!(x.power(0), MonomialIdeal::unit(2));
        assert_eq!(MonomialIdeal::zero(2).power(0), MonomialIdeal::unit(2));
        assert!(MonomialIdeal::zero(2).power(3).is_zero());
    }

    #[test]
    fn maximal_power_examples() {
        assert_eq!(maximal_power(2, 3), ideal(2, &[&[3, 0], &[2, 1], &[1, 2], &[0, 3]]));
        assert_eq!(maximal_power(4, 0), MonomialIdeal::unit(4));
        assert_eq!(maximal_power(3, 2).gens().len(), 6);
        // Already canonical: rebuilding does not reorder.
        let m = maximal_power(3, 4);
        assert_eq!(MonomialIdeal::new(3, m.gens().to_vec()).unwrap(), m);
    }

    #[test]
    fn colon_examples() {
        let q = ideal(2, &[&[2, 0], &[0, 2]]);
        let m = MonomialIdeal::maximal(2);
        assert_eq!(q.colon(&m).unwrap(), maximal_power(2, 2).sum(&q).unwrap());
        assert_eq!(q.colon(&m).unwrap(), ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]));
        assert_eq!(q.colon(&MonomialIdeal::unit(2)).unwrap(), q);
        let q3 = MonomialIdeal::pure_powers(2, 3);
        assert_eq!(q3.colon(&maximal_power(2, 3)).unwrap(), maximal_power(2, 2));
        assert_eq!(q.colon(&MonomialIdeal::zero(2)), Err(Error::ZeroDivisor));
        assert!(MonomialIdeal::zero(2).colon(&m).unwrap().is_zero());
    }

    #[test]
    fn membership() {
        let q = ideal(2, &[&[2, 0], &[0, 2]]);
        assert!(!q.member(&Monomial::new(vec![1, 1]).unwrap()).unwrap());
        assert!(maximal_power(3, 2).contains(&maximal_power(3, 3)).unwrap());
        assert!(!maximal_power(3, 3).contains(&maximal_power(3, 2)).unwrap());
    }

    #[test]
    fn colength_examples() {
        assert_eq!(maximal_power(2, 2).colength().unwrap(), ExactInt::from(3));
        for (a, b) in [(1, 1), (2, 5), (4, 3), (7, 1)] {
            let i = ideal(2, &[&[a, 0], &[0, b]]);
            assert_eq!(i.colength().unwrap(), ExactInt::from(a * b));
        }
        assert_eq!(MonomialIdeal::unit(3).colength().unwrap(), ExactInt::zero());
        assert_eq!(
            ideal(3, &[&[1, 0, 0], &[0, 2, 0]]).colength(),
            Err(Error::NotPrimary { variable: 2 })
        );
        assert_eq!(MonomialIdeal::zero(2).colength(), Err(Error::NotPrimary { variable: 0 }));
    }

    #[test]
    fn multiplicity_examples() {
        assert_eq!(maximal_power(2, 2).multiplicity().unwrap(), ExactInt::from(4));
        for (a, b) in [(1, 1), (2, 3), (5, 2)] {
            let i = ideal(2, &[&[a, 0], &[0, b]]);
            assert_eq!(i.multiplicity().unwrap(), ExactInt::from(a * b));
        }
        for d in 1..=5 {
            assert_eq!(MonomialIdeal::maximal(d).multiplicity().unwrap(), ExactInt::from(1));
        }
        assert!(ideal(2, &[&[1, 1]]).multiplicity().is_err());
    }

    #[test]
    fn display() {
        assert_eq!(maximal_power(2, 2).to_string(), "(x^2, x*y, y^2)");
        assert_eq!(MonomialIdeal::zero(2).to_string(), "()");
    }
}
