//! Text formats: permutation sets, block designs and bijection assignments.
//!
//! All three share the same conventions: `#` starts a comment line, blank
//! lines are ignored, and errors carry a 1-based line and column.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::path::Path;

use crate::constructions::design::{validate_design, BlockDesign};
use crate::constructions::product::BijectionAssignment;
use crate::error::{Error, Result};
use crate::perm::{parse_perm_at, PermSet, Permutation};

/// Non-comment, non-blank lines with their 1-based line numbers and the
/// column of their first non-space character.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let trimmed = raw.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            return None;
        }
        Some((i + 1, raw.len() - trimmed.len() + 1, trimmed.trim_end()))
    })
}

/// Reads `key value` pairs from a header line such as `n 7 k 3`.
fn parse_header(line: usize, col: usize, text: &str, keys: &[&str]) -> Result<Vec<usize>> {
    let words: Vec<&str> = text.split_whitespace().collect();
    if words.len() != 2 * keys.len() {
        let expected = keys.iter().map(|k| format!("{k} <{k}>")).collect::<Vec<_>>().join(" ");
        return Err(Error::parse(line, col, format!("expected header \"{expected}\"")));
    }
    let mut out = Vec::with_capacity(keys.len());
    for (pair, key) in words.chunks(2).zip(keys) {
        if pair[0] != *key {
            return Err(Error::parse(line, col, format!("expected \"{key}\", found {:?}", pair[0])));
        }
        let value = pair[1]
            .parse()
            .map_err(|_| Error::parse(line, col, format!("{key} must be a non-negative integer, found {:?}", pair[1])))?;
        out.push(value);
    }
    Ok(out)
}

/// Parses a permutation set file: a header `n <degree>` followed by one
/// permutation per line. Duplicates and empty sets are rejected.
pub fn parse_perm_file(text: &str) -> Result<PermSet> {
    let mut lines = content_lines(text);
    let (hl, hc, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, 1, "missing header \"n <degree>\""))?;
    let n = parse_header(hl, hc, header, &["n"])?[0];
    let mut seen: HashMap<Permutation, usize> = HashMap::new();
    let mut elements = Vec::new();
    for (line, col, body) in lines {
        let g = parse_perm_at(body, n, line, col)?;
        if let Some(first) = seen.insert(g.clone(), line) {
            return Err(Error::parse(line, col, format!("duplicate permutation {g} (first on line {first})")));
        }
        elements.push(g);
    }
    if elements.is_empty() {
        return Err(Error::EmptySet);
    }
    PermSet::new(n, elements)
}

/// Writes a set in cycle notation, one element per line, sorted.
pub fn write_perm_file(set: &PermSet, comment: Option<&str>) -> String {
    let mut out = String::new();
    if let Some(c) = comment {
        for line in c.lines() {
            let _ = writeln!(out, "# {line}");
        }
    }
    let _ = writeln!(out, "n {}", set.degree());
    for g in set {
        let _ = writeln!(out, "{g}");
    }
    out
}

fn parse_points(line: usize, col: usize, text: &str) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for word in text.split_whitespace() {
        let at = text[offset..].find(word).map_or(offset, |p| p + offset);
        offset = at + word.len();
        let v = word
            .parse()
            .map_err(|_| Error::parse(line, col + at, format!("expected a point, found {word:?}")))?;
        out.push(v);
    }
    Ok(out)
}

/// Parses a design file (`n <n> k <k>`, then one block per line) and
/// validates it; the strength is always recomputed.
pub fn parse_design_file(text: &str) -> Result<BlockDesign> {
    let mut lines = content_lines(text);
    let (hl, hc, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, 1, "missing header \"n <n> k <k>\""))?;
    let nk = parse_header(hl, hc, header, &["n", "k"])?;
    let (n, k) = (nk[0], nk[1]);
    let mut blocks = Vec::new();
    for (line, col, body) in lines {
        let block = parse_points(line, col, body)?;
        if block.len() != k {
            return Err(Error::parse(line, col, format!("block has {} points, expected {k}", block.len())));
        }
        if let Some(&x) = block.iter().find(|&&x| x == 0 || x > n) {
            return Err(Error::parse(line, col, format!("point {x} outside 1..{n}")));
        }
        blocks.push(block);
    }
    validate_design(n, k, &blocks, None)
}

pub fn write_design_file(design: &BlockDesign) -> String {
    let mut out = format!("n {} k {}\n", design.n(), design.k());
    for b in design.blocks() {
        let _ = writeln!(out, "{}", join(b));
    }
    out
}

/// Parses lines `b: p1 … pk | c1 … c(n-k)`. The part before `:` names the
/// block (any order); blocks not listed keep the ascending default.
pub fn parse_bijection_file(text: &str, design: &BlockDesign) -> Result<BijectionAssignment> {
    let mut bij = BijectionAssignment::ascending(design);
    for (line, col, body) in content_lines(text) {
        let (name, rest) = body
            .split_once(':')
            .ok_or_else(|| Error::parse(line, col, "expected \"block: phi | psi\""))?;
        let (phi, psi) = rest
            .split_once('|')
            .ok_or_else(|| Error::parse(line, col + name.len() + 1, "missing '|' between block and complement orders"))?;
        let mut block = parse_points(line, col, name)?;
        let phi_col = col + name.len() + 1;
        let phi = parse_points(line, phi_col, phi)?;
        let psi = parse_points(line, phi_col + phi.len() + 1, psi)?;
        block.sort_unstable();
        let mut sorted_phi = phi.clone();
        sorted_phi.sort_unstable();
        if block != sorted_phi {
            return Err(Error::parse(line, col, "block order does not list the named block"));
        }
        bij.set(design, phi, psi).map_err(|e| Error::parse(line, col, e.to_string()))?;
    }
    Ok(bij)
}

pub fn write_bijection_file(bij: &BijectionAssignment) -> String {
    let mut out = String::new();
    for (block, (phi, psi)) in bij.iter() {
        let _ = writeln!(out, "{}: {} | {}", join(block), join(phi), join(psi));
    }
    out
}

fn join(points: &[usize]) -> String {
    points.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

pub fn read_perm_file(path: &Path) -> Result<PermSet> {
    parse_perm_file(&std::fs::read_to_string(path)?)
}

pub fn read_design_file(path: &Path) -> Result<BlockDesign> {
    parse_design_file(&std::fs::read_to_string(path)?)
}

pub fn read_bijection_file(path: &Path, design: &BlockDesign) -> Result<BijectionAssignment> {
    parse_bijection_file(&std::fs::read_to_string(path)?, design)
}
