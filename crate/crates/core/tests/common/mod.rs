//! Independent oracles: nothing here calls into the library's algorithms,
//! only its data types.
#![allow(dead_code)]

use agrees::monomial::{Monomial, MonomialIdeal};
use agrees::ExactInt;

/// Rows `0..=n` of Pascal's triangle by repeated addition.
pub fn pascal(n: usize) -> Vec<Vec<ExactInt>> {
    let mut rows: Vec<Vec<ExactInt>> = vec![vec![ExactInt::from(1)]];
    for i in 1..=n {
        let prev = &rows[i - 1];
        let mut row = vec![ExactInt::from(1); i + 1];
        for k in 1..i {
            row[k] = &prev[k - 1] + &prev[k];
        }
        rows.push(row);
    }
    rows
}

pub fn pascal_entry(rows: &[Vec<ExactInt>], n: usize, k: i64) -> ExactInt {
    if k < 0 || k as usize > n {
        ExactInt::from(0)
    } else {
        rows[n][k as usize].clone()
    }
}

/// Exponent vectors of total degree exactly `k` in `d` variables.
pub fn exponents_of_degree(d: usize, k: u32) -> Vec<Vec<u32>> {
    if d == 1 {
        return vec![vec![k]];
    }
    let mut out = Vec::new();
    for first in 0..=k {
        for mut rest in exponents_of_degree(d - 1, k - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Exponent vectors of total degree at most `k`.
pub fn exponents_up_to(d: usize, k: u32) -> Vec<Vec<u32>> {
    (0..=k).flat_map(|j| exponents_of_degree(d, j)).collect()
}

pub fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub fn in_ideal(gens: &[Vec<u32>], u: &[u32]) -> bool {
    gens.iter().any(|g| divides(g, u))
}

pub fn gens_of(ideal: &MonomialIdeal) -> Vec<Vec<u32>> {
    ideal.gens().iter().map(|m| m.exponents().to_vec()).collect()
}

/// Minimal elements under divisibility, sorted.
pub fn minimal(mut gens: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    gens.sort();
    gens.dedup();
    let keep: Vec<Vec<u32>> = gens
        .iter()
        .filter(|g| !gens.iter().any(|h| h != *g && divides(h, g)))
        .cloned()
        .collect();
    keep
}

pub fn product(a: &[Vec<u32>], b: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for x in a {
        for y in b {
            out.push(x.iter().zip(y).map(|(p, q)| p + q).collect());
        }
    }
    minimal(out)
}

/// `lhs : rhs` by testing every monomial of degree at most `bound`.
pub fn colon(lhs: &[Vec<u32>], rhs: &[Vec<u32>], d: usize, bound: u32) -> Vec<Vec<u32>> {
    let hits = exponents_up_to(d, bound)
        .into_iter()
        .filter(|u| {
            rhs.iter().all(|g| {
                let prod: Vec<u32> = u.iter().zip(g).map(|(p, q)| p + q).collect();
                in_ideal(lhs, &prod)
            })
        })
        .collect();
    minimal(hits)
}

/// Whether two generator sets define the same ideal.
pub fn same_ideal(a: &[Vec<u32>], b: &[Vec<u32>]) -> bool {
    a.iter().all(|g| in_ideal(b, g)) && b.iter().all(|g| in_ideal(a, g))
}

/// Colength of a primary ideal by counting every monomial in the box cut
/// out by its pure powers.
pub fn box_colength(gens: &[Vec<u32>], d: usize) -> u64 {
    let bounds: Vec<u32> = (0..d)
        .map(|i| {
            gens.iter()
                .filter(|g| g.iter().enumerate().all(|(j, &e)| j == i || e == 0))
                .map(|g| g[i])
                .min()
                .expect("primary ideal")
        })
        .collect();
    let mut count = 0u64;
    let mut cur = vec![0u32; d];
    loop {
        if !in_ideal(gens, &cur) {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == d {
                return count;
            }
            cur[i] += 1;
            if cur[i] < bounds[i] {
                break;
            }
            cur[i] = 0;
            i += 1;
        }
    }
}

pub fn ideal(d: usize, gens: &[Vec<u32>]) -> MonomialIdeal {
    MonomialIdeal::new(d, gens.iter().map(|g| Monomial::new(g.clone()).unwrap())).unwrap()
}
