//! Text renderings of classification tables.

use std::collections::BTreeMap;
use std::fmt::Write;

use crate::classify::{Cell, ClassLabel};
use crate::error::{Error, Result};

/// The grid layout: one row per `d`, one column per `ell`, cells holding the
/// symbols `Gor`, `AG`, `AGL` or `X`.
///
/// ```text
///  d\l |   1 |   2 |   3
/// -----+-----+-----+-----
///    2 | Gor |  AG |  AG
/// ```
pub fn table_ascii(cells: &[Cell]) -> String {
    let grid = to_grid(cells);
    let ells: Vec<u32> = match grid.values().next() {
        Some(row) => row.keys().copied().collect(),
        None => return String::new(),
    };
    let mut out = String::new();
    write!(out, "{:>4}", "d\\l").unwrap();
    for ell in &ells {
        write!(out, " |{ell:>4}").unwrap();
    }
    out.push('\n');
    out.push_str("----");
    for _ in &ells {
        out.push_str("-+----");
    }
    out.push('\n');
    for (d, row) in &grid {
        write!(out, "{d:>4}").unwrap();
        for label in row.values() {
            write!(out, " |{:>4}", label.symbol()).unwrap();
        }
        out.push('\n');
    }
    out
}

/// `d,ell,label` with one line per cell, `d`-major.
pub fn table_csv(cells: &[Cell]) -> String {
    let mut out = String::from("d,ell,label\n");
    for c in cells {
        writeln!(out, "{},{},{}", c.d, c.ell, c.label.symbol()).unwrap();
    }
    out
}

pub fn table_json(cells: &[Cell]) -> String {
    serde_json::to_string_pretty(cells).expect("cells serialize")
}

fn to_grid(cells: &[Cell]) -> BTreeMap<u32, BTreeMap<u32, ClassLabel>> {
    let mut grid: BTreeMap<u32, BTreeMap<u32, ClassLabel>> = BTreeMap::new();
    for c in cells {
        grid.entry(c.d).or_default().insert(c.ell, c.label);
    }
    grid
}

/// Reads back a grid written by [`table_ascii`] as `(d, ell) -> label`.
pub fn parse_table_ascii(text: &str) -> Result<BTreeMap<(u32, u32), ClassLabel>> {
    let bad = |line: usize, reason: String| Error::Parse { line, reason };
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (_, header) = lines.next().ok_or_else(|| bad(1, "empty table".into()))?;
    let ells = header
        .split('|')
        .skip(1)
        .map(|s| s.trim().parse::<u32>().map_err(|_| bad(1, format!("bad column header '{}'", s.trim()))))
        .collect::<Result<Vec<u32>>>()?;
    let mut out = BTreeMap::new();
    for (idx, line) in lines {
        if line.starts_with('-') {
            continue;
        }
        let mut fields = line.split('|').map(str::trim);
        let d = fields
            .next()
            .and_then(|s| s.parse::<u32>().ok())
            .ok_or_else(|| bad(idx + 1, "bad row header".into()))?;
        let symbols: Vec<&str> = fields.collect();
        if symbols.len() != ells.len() {
            return Err(bad(idx + 1, format!("expected {} cells, found {}", ells.len(), symbols.len())));
        }
        for (&ell, sym) in ells.iter().zip(symbols) {
            let label =
                ClassLabel::from_symbol(sym).ok_or_else(|| bad(idx + 1, format!("unknown symbol '{sym}'")))?;
            out.insert((d, ell), label);
        }
    }
    Ok(out)
}
