use super::{Monomial, MonomialIdeal};
use crate::error::{Error, Result};

/// Parses the plain-text ideal format: one generator per line as
/// whitespace-separated exponents, `#` comment lines and blank lines ignored.
///
/// The dimension comes from `dim` when given, otherwise from the first
/// generator. An empty file is the zero ideal and needs an explicit `dim`.
pub fn parse_ideal(text: &str, dim: Option<usize>) -> Result<MonomialIdeal> {
    let mut dim = dim;
    let mut gens = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let exps = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<u32>().map_err(|_| Error::Parse {
                    line: line_no,
                    reason: format!("invalid exponent '{tok}' (expected a non-negative integer)"),
                })
            })
            .collect::<Result<Vec<u32>>>()?;
        match dim {
            None => dim = Some(exps.len()),
            Some(d) if d != exps.len() => {
                return Err(Error::Parse {
                    line: line_no,
                    reason: format!("expected {d} exponents, found {}", exps.len()),
                })
            }
            Some(_) => {}
        }
        gens.push(Monomial::new(exps)?);
    }
    let dim = dim.ok_or(Error::Parse {
        line: 0,
        reason: "no generators and no dimension given".to_string(),
    })?;
    if dim == 0 {
        return Err(Error::ZeroDimension);
    }
    MonomialIdeal::new(dim, gens)
}

/// Inverse of [`parse_ideal`].
pub fn render_ideal(ideal: &MonomialIdeal) -> String {
    let mut out = format!("# {} generator(s) in {} variable(s)\n", ideal.gens().len(), ideal.dim());
    for g in ideal.gens() {
        let row: Vec<String> = g.exponents().iter().map(u32::to_string).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}
