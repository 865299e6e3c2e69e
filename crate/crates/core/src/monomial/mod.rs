//! Monomials and monomial ideals in a polynomial stand-in for a regular local
//! ring, with exact colon, colength and multiplicity computations.

mod brute;
mod ideal;
mod io;
mod term;
pub mod random;

pub use brute::{brute_colon, sufficient_colon_bound};
pub use ideal::{maximal_power, MonomialIdeal};
pub use io::{parse_ideal, render_ideal};
pub use term::{variable_name, Monomial};
