use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// A monomial `x_1^{e_1} ... x_d^{e_d}`, stored as its exponent vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Result<Self> {
        if exps.is_empty() {
            return Err(Error::ZeroDimension);
        }
        Ok(Monomial { exps })
    }

    pub(crate) fn from_vec(exps: Vec<u32>) -> Self {
        debug_assert!(!exps.is_empty());
        Monomial { exps }
    }

    pub fn one(dim: usize) -> Self {
        assert!(dim >= 1);
        Monomial { exps: vec![0; dim] }
    }

    /// `x_var^exp`.
    pub fn pure_power(dim: usize, var: usize, exp: u32) -> Self {
        assert!(var < dim);
        let mut exps = vec![0; dim];
        exps[var] = exp;
        Monomial { exps }
    }

    pub fn var(dim: usize, var: usize) -> Self {
        Self::pure_power(dim, var, 1)
    }

    pub fn dim(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Number of variables that actually occur.
    pub fn support_size(&self) -> usize {
        self.exps.iter().filter(|&&e| e > 0).count()
    }

    /// The unique variable this monomial is a power of, if any.
    pub fn pure_variable(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.dim(), other.dim());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.dim(), other.dim());
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
            .collect();
        Monomial { exps }
    }

    pub fn pow(&self, n: u32) -> Monomial {
        let exps = self
            .exps
            .iter()
            .map(|a| a.checked_mul(n).expect("exponent overflow"))
            .collect();
        Monomial { exps }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.dim(), other.dim());
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect();
        Monomial { exps }
    }

    /// `lcm(self, m) / m`, the generator of `(self) : m`.
    pub fn colon_by(&self, m: &Monomial) -> Monomial {
        debug_assert_eq!(self.dim(), m.dim());
        let exps = self.exps.iter().zip(&m.exps).map(|(a, b)| a.saturating_sub(*b)).collect();
        Monomial { exps }
    }

    /// Drops the last variable.
    pub(crate) fn truncate_last(&self) -> Monomial {
        Monomial { exps: self.exps[..self.exps.len() - 1].to_vec() }
    }

    /// Degree first, then lexicographically descending: `x^2 < xy < y^2`.
    pub fn graded_cmp(&self, other: &Monomial) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

/// `x, y, z, w` for up to four variables, `x1, x2, ...` beyond that.
pub fn variable_name(dim: usize, var: usize) -> String {
    const SHORT: [&str; 4] = ["x", "y", "z", "w"];
    if dim <= SHORT.len() {
        SHORT[var].to_string()
    } else {
        format!("x{}", var + 1)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(&variable_name(self.dim(), i))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec()).unwrap()
    }

    #[test]
    fn display() {
        assert_eq!(m(&[2, 0]).to_string(), "x^2");
        assert_eq!(m(&[1, 0]).to_string(), "x");
        assert_eq!(m(&[2, 2, 1, 1]).to_string(), "x^2*y^2*z*w");
        assert_eq!(m(&[0, 0, 0]).to_string(), "1");
        assert_eq!(m(&[0, 0, 0, 0, 3]).to_string(), "x5^3");
    }

    #[test]
    fn arithmetic() {
        let a = m(&[2, 1, 0]);
        let b = m(&[1, 3, 1]);
        assert_eq!(a.mul(&b), m(&[3, 4, 1]));
        assert_eq!(a.lcm(&b), m(&[2, 3, 1]));
        assert_eq!(a.colon_by(&b), m(&[1, 0, 0]));
        assert!(m(&[1, 1, 0]).divides(&a.lcm(&b)));
        assert!(!a.divides(&b));
        assert_eq!(a.pure_variable(), None);
        assert_eq!(m(&[0, 4, 0]).pure_variable(), Some(1));
        assert_eq!(Monomial::one(3).pure_variable(), None);
    }

    #[test]
    fn rejects_empty() {
        assert_eq!(Monomial::new(vec![]), Err(Error::ZeroDimension));
    }

    #[test]
    #[should_panic(expected = "exponent overflow")]
    fn overflow_is_loud() {
        m(&[u32::MAX]).mul(&m(&[1]));
    }
}
