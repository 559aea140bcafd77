//! Upper-triangular matrices of forbidden ratios with the linkage property
//! `c_{1,i} * c_{i+1,j} = c_{1,j}`, the search for them, and the pigeonhole
//! walk that turns such a matrix of size `m` into a monochromatic solution
//! under any coloring with at most `m` colors.
//!
//! A linkage matrix of size `m` certifies that the equation is at least
//! `m`-regular, so `max_linkage` is a lower bound on the degree of
//! regularity.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::algebra::{
    forbidden_ratio_solution, forbidden_ratios, Equation, Rational, SolutionTuple,
};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LinkageError {
    #[error("implied entry at ({row},{col}) is {value}, not an available forbidden ratio")]
    NotLinked {
        row: usize,
        col: usize,
        value: Rational,
    },
    #[error("{value} is not a positive forbidden ratio of the equation")]
    NotARatio { value: Rational },
    #[error("first row must be nonempty")]
    EmptyRow,
    #[error("coloring uses {palette} colors on the walk values, more than the matrix size {m}")]
    PaletteTooLarge { palette: usize, m: usize },
    #[error("no color assigned to required walk value {value}")]
    IncompleteColoring { value: BigInt },
    #[error("x = {x} is not a positive multiple of the integrality base {base}")]
    BadWalkStart { x: BigInt, base: BigInt },
}

/// One matrix entry: a positive forbidden ratio together with the smallest
/// 1-based index `l` such that the entry equals `S_l`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkEntry {
    pub ratio: Rational,
    pub ratio_index: usize,
}

/// Upper-triangular `m x m` matrix of positive forbidden ratios with the
/// linkage property. Rows below the first are determined by the first row
/// (`c_{i+1,j} = c_{1,j} / c_{1,i}`), so the matrix is built from, and fully
/// reproducible from, its first row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkageMatrix {
    /// `rows[r]` holds the entries of 1-based row `r+1`, columns `r+1..=m`.
    rows: Vec<Vec<LinkEntry>>,
}

impl LinkageMatrix {
    pub fn size(&self) -> usize {
        self.rows.len()
    }

    /// Entry `c_{row,col}` with 1-based indices; `None` outside the upper
    /// triangle.
    pub fn entry(&self, row: usize, col: usize) -> Option<&LinkEntry> {
        if row < 1 || col < row || col > self.size() {
            return None;
        }
        Some(&self.rows[row - 1][col - row])
    }

    pub fn first_row(&self) -> &[LinkEntry] {
        &self.rows[0]
    }

    pub fn first_row_ratios(&self) -> Vec<Rational> {
        self.rows[0].iter().map(|e| e.ratio.clone()).collect()
    }

    /// Least positive `x` such that every entry times `x` is a positive
    /// integer: the lcm of all entry denominators.
    pub fn integrality_base(&self) -> BigInt {
        let mut base = BigInt::one();
        for row in &self.rows {
            for e in row {
                base = base.lcm(e.ratio.denom());
            }
        }
        base
    }
}

/// Whether a first row extends to a full linkage matrix over `ratio_set`:
/// every implied entry `c_{1,j} / c_{1,i}` (`i < j`) must itself belong to
/// the set. A single-entry row has no implied entries.
pub fn linkage_check(first_row: &[Rational], ratio_set: &BTreeSet<Rational>) -> bool {
    for i in 0..first_row.len() {
        for j in (i + 1)..first_row.len() {
            let implied = &first_row[j] / &first_row[i];
            if !ratio_set.contains(&implied) {
                return false;
            }
        }
    }
    true
}

fn positive_ratio_index(eq: &Equation) -> BTreeMap<Rational, usize> {
    let mut map = BTreeMap::new();
    for (i, s) in forbidden_ratios(eq).into_iter().enumerate() {
        if s.is_positive() {
            // Keep the smallest index for repeated values.
            map.entry(s).or_insert(i + 1);
        }
    }
    map
}

/// Builds the full matrix from a first row of positive forbidden ratios of
/// `eq`, recording for each entry the smallest `l` with entry `= S_l`.
pub fn build_matrix(eq: &Equation, first_row: &[Rational]) -> Result<LinkageMatrix, LinkageError> {
    if first_row.is_empty() {
        return Err(LinkageError::EmptyRow);
    }
    let index = positive_ratio_index(eq);
    for r in first_row {
        if !index.contains_key(r) {
            return Err(LinkageError::NotARatio { value: r.clone() });
        }
    }
    let m = first_row.len();
    let mut rows = Vec::with_capacity(m);
    let top: Vec<LinkEntry> = first_row
        .iter()
        .map(|r| LinkEntry {
            ratio: r.clone(),
            ratio_index: index[r],
        })
        .collect();
    rows.push(top);
    for r in 2..=m {
        // c_{r,c} = c_{1,c} / c_{1,r-1}
        let mut row = Vec::with_capacity(m - r + 1);
        for c in r..=m {
            let ratio = &first_row[c - 1] / &first_row[r - 2];
            let l = *index.get(&ratio).ok_or_else(|| LinkageError::NotLinked {
                row: r,
                col: c,
                value: ratio.clone(),
            })?;
            row.push(LinkEntry {
                ratio,
                ratio_index: l,
            });
        }
        rows.push(row);
    }
    Ok(LinkageMatrix { rows })
}

/// Searches for an `m`-entry first row over the positive forbidden ratios
/// of `eq` (ratio 1 excluded from candidates) whose implied entries all stay
/// inside the ratio set. Returns the matrix for the lexicographically least
/// valid row, ordering rationals by value, or `None` if no row exists.
pub fn linkage_search(eq: &Equation, m: usize) -> Option<LinkageMatrix> {
    if m == 0 {
        return None;
    }
    let index = positive_ratio_index(eq);
    let ratio_set: BTreeSet<Rational> = index.keys().cloned().collect();
    let candidates: Vec<Rational> = ratio_set.iter().filter(|r| !r.is_one()).cloned().collect();
    if candidates.is_empty() {
        return None;
    }
    let mut row: Vec<Rational> = Vec::with_capacity(m);
    if extend_row(&mut row, m, &candidates, &ratio_set) {
        Some(build_matrix(eq, &row).expect("searched row must build"))
    } else {
        None
    }
}

fn extend_row(
    row: &mut Vec<Rational>,
    m: usize,
    candidates: &[Rational],
    ratio_set: &BTreeSet<Rational>,
) -> bool {
    if row.len() == m {
        return true;
    }
    'next: for c in candidates {
        // New implied entries against every earlier position.
        for prev in row.iter() {
            if !ratio_set.contains(&(c / prev)) {
                continue 'next;
            }
        }
        row.push(c.clone());
        if extend_row(row, m, candidates, ratio_set) {
            return true;
        }
        row.pop();
    }
    false
}

/// Largest `m <= m_cap` for which `linkage_search` succeeds (0 if none).
/// Prefixes of valid rows are valid, so the first failing size ends the
/// scan. The result is a certified lower bound on the degree of regularity.
pub fn max_linkage(eq: &Equation, m_cap: usize) -> usize {
    for m in 1..=m_cap {
        if linkage_search(eq, m).is_none() {
            return m - 1;
        }
    }
    m_cap
}

/// Outcome of the pigeonhole walk: a same-colored pair of walk values, the
/// matrix entry linking them, and the monochromatic solution it yields.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkResult {
    /// `(u, v)` with `v / u` equal to the linking matrix entry.
    pub pair: (BigInt, BigInt),
    /// 1-based `(row, col)` of the linking entry.
    pub position: (usize, usize),
    pub ratio: Rational,
    /// The `l` with linking entry `= S_l`.
    pub ratio_index: usize,
    pub solution: SolutionTuple,
    pub color: u32,
}

/// Runs the pigeonhole argument on the `m + 1` walk values
/// `x, c_{1,1} x, ..., c_{1,m} x`. Any coloring of those values with at
/// most `m` colors repeats a color on some pair; the quotient of that pair
/// is a matrix entry `S_l`, and the degenerate solution for `S_l` scaled
/// from the smaller walk index is monochromatic.
///
/// Pairs are scanned in lexicographic order of walk indices, so the result
/// is deterministic for a given coloring.
pub fn pigeonhole_walk(
    eq: &Equation,
    mat: &LinkageMatrix,
    colors: &BTreeMap<BigInt, u32>,
    x: &BigInt,
) -> Result<WalkResult, LinkageError> {
    let base = mat.integrality_base();
    if x <= &BigInt::zero() || !(x % &base).is_zero() {
        return Err(LinkageError::BadWalkStart { x: x.clone(), base });
    }
    let m = mat.size();
    let mut values = Vec::with_capacity(m + 1);
    values.push(x.clone());
    for j in 1..=m {
        let v = &mat.entry(1, j).expect("first row").ratio * Rational::from_integer(x.clone());
        debug_assert!(v.is_integer());
        values.push(v.to_integer());
    }
    let mut assigned = Vec::with_capacity(m + 1);
    for v in &values {
        match colors.get(v) {
            Some(c) => assigned.push(*c),
            None => {
                return Err(LinkageError::IncompleteColoring { value: v.clone() });
            }
        }
    }
    let palette: BTreeSet<u32> = assigned.iter().copied().collect();
    if palette.len() > m {
        return Err(LinkageError::PaletteTooLarge {
            palette: palette.len(),
            m,
        });
    }
    for i in 0..=m {
        for j in (i + 1)..=m {
            if assigned[i] != assigned[j] {
                continue;
            }
            let position = if i == 0 { (1, j) } else { (i + 1, j) };
            let entry = mat.entry(position.0, position.1).expect("upper triangle");
            let solution = forbidden_ratio_solution(eq, entry.ratio_index, &values[i])
                .expect("walk quotient is a positive integral ratio");
            return Ok(WalkResult {
                pair: (values[i].clone(), values[j].clone()),
                position,
                ratio: entry.ratio.clone(),
                ratio_index: entry.ratio_index,
                solution,
                color: assigned[i],
            });
        }
    }
    unreachable!("pigeonhole: {} values with at most {} colors", m + 1, m)
}
