//! Finite `r`-colorings of the interval `[1, N]`: solution enumeration,
//! verification against monochromatic solutions, backtracking search for
//! solution-free colorings, and the least interval length at which no
//! solution-free coloring survives (the generalized Schur/Rado radius).

use std::collections::BTreeSet;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::algebra::{forbidden_ratios, Equation, Rational, SolutionTuple};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ColoringError {
    #[error("coloring file: {0}")]
    Parse(String),
    #[error("color {color} at position {position} outside palette 1..={r}")]
    ColorOutOfRange { position: usize, color: u32, r: u32 },
    #[error("palette size must be at least 1")]
    EmptyPalette,
    #[error("permutation is not a bijection on 1..={r}")]
    BadPermutation { r: u32 },
}

/// An `r`-coloring of `[1, N]`; `colors[i]` is the color of `i + 1`,
/// always in `1..=r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    r: u32,
    colors: Vec<u32>,
}

impl Coloring {
    pub fn new(r: u32, colors: Vec<u32>) -> Result<Coloring, ColoringError> {
        if r == 0 {
            return Err(ColoringError::EmptyPalette);
        }
        for (i, &c) in colors.iter().enumerate() {
            if c == 0 || c > r {
                return Err(ColoringError::ColorOutOfRange {
                    position: i + 1,
                    color: c,
                    r,
                });
            }
        }
        Ok(Coloring { r, colors })
    }

    /// Interval length `N`.
    pub fn n(&self) -> usize {
        self.colors.len()
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    /// Color of 1-based position `pos`; panics outside `[1, N]`.
    pub fn color(&self, pos: usize) -> u32 {
        self.colors[pos - 1]
    }

    pub fn get(&self, pos: usize) -> Option<u32> {
        if pos == 0 {
            return None;
        }
        self.colors.get(pos - 1).copied()
    }

    /// Parses the text format: first `N r`, then `N` colors, whitespace
    /// separated; lines beginning with `#` are comments.
    pub fn parse(text: &str) -> Result<Coloring, ColoringError> {
        let tokens: Vec<&str> = text
            .lines()
            .filter(|line| !line.trim_start().starts_with('#'))
            .flat_map(|line| line.split_whitespace())
            .collect();
        if tokens.len() < 2 {
            return Err(ColoringError::Parse(
                "expected a header line `N r`".to_string(),
            ));
        }
        let n: usize = tokens[0]
            .parse()
            .map_err(|_| ColoringError::Parse(format!("bad interval length `{}`", tokens[0])))?;
        let r: u32 = tokens[1]
            .parse()
            .map_err(|_| ColoringError::Parse(format!("bad palette size `{}`", tokens[1])))?;
        let rest = &tokens[2..];
        if rest.len() != n {
            return Err(ColoringError::Parse(format!(
                "expected {n} colors, found {}",
                rest.len()
            )));
        }
        let mut colors = Vec::with_capacity(n);
        for t in rest {
            let c: u32 = t
                .parse()
                .map_err(|_| ColoringError::Parse(format!("bad color `{t}`")))?;
            colors.push(c);
        }
        Coloring::new(r, colors)
    }

    pub fn to_file_string(&self) -> String {
        let body: Vec<String> = self.colors.iter().map(|c| c.to_string()).collect();
        format!("{} {}\n{}\n", self.n(), self.r, body.join(" "))
    }
}

/// Result of checking a coloring against all solutions in its interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerifyOutcome {
    Valid,
    Counterexample { tuple: SolutionTuple, color: u32 },
}

impl VerifyOutcome {
    pub fn is_valid(&self) -> bool {
        matches!(self, VerifyOutcome::Valid)
    }
}

/// Streams the solutions of `eq` inside `[1, bound]^n` that satisfy every
/// inequality row (`sum_i row[i] * x_i != 0`), in lexicographic order.
/// The last variable is solved exactly from the first `n - 1`, which loop
/// over the box.
pub fn enumerate_solutions<'a>(
    eq: &'a Equation,
    bound: usize,
    ineqs: &'a [Vec<BigInt>],
) -> impl Iterator<Item = SolutionTuple> + 'a {
    for row in ineqs {
        assert_eq!(row.len(), eq.arity(), "inequality row arity mismatch");
    }
    SolutionIter {
        eq,
        bound,
        ineqs,
        prefix: vec![1u64; eq.arity() - 1],
        done: bound == 0,
    }
}

struct SolutionIter<'a> {
    eq: &'a Equation,
    bound: usize,
    ineqs: &'a [Vec<BigInt>],
    prefix: Vec<u64>,
    done: bool,
}

impl SolutionIter<'_> {
    fn advance(&mut self) {
        let mut pos = self.prefix.len();
        loop {
            if pos == 0 {
                self.done = true;
                return;
            }
            pos -= 1;
            self.prefix[pos] += 1;
            if self.prefix[pos] <= self.bound as u64 {
                return;
            }
            self.prefix[pos] = 1;
        }
    }
}

impl Iterator for SolutionIter<'_> {
    type Item = SolutionTuple;

    fn next(&mut self) -> Option<SolutionTuple> {
        while !self.done {
            let coeffs = self.eq.coeffs();
            let n = self.eq.arity();
            let partial: BigInt = coeffs[..n - 1]
                .iter()
                .zip(&self.prefix)
                .map(|(a, &x)| a * BigInt::from(x))
                .sum();
            // a_n * x_n = -partial
            let (q, rem) = (-partial).div_rem(&coeffs[n - 1]);
            let mut found = None;
            if rem.is_zero() && q >= BigInt::one() && q <= BigInt::from(self.bound as u64) {
                let mut values: Vec<BigInt> =
                    self.prefix.iter().map(|&x| BigInt::from(x)).collect();
                values.push(q);
                let tuple = SolutionTuple::new(values).expect("positive entries");
                if self.ineqs.iter().all(|row| !row_dot(row, &tuple).is_zero()) {
                    found = Some(tuple);
                }
            }
            self.advance();
            if found.is_some() {
                return found;
            }
        }
        None
    }
}

fn row_dot(row: &[BigInt], t: &SolutionTuple) -> BigInt {
    row.iter().zip(t.values()).map(|(a, x)| a * x).sum()
}

/// Valid iff no enumerated solution is monochromatic; otherwise the
/// lexicographically first monochromatic solution.
pub fn verify_coloring(eq: &Equation, col: &Coloring, ineqs: &[Vec<BigInt>]) -> VerifyOutcome {
    for tuple in enumerate_solutions(eq, col.n(), ineqs) {
        let first = value_as_pos(&tuple.values()[0]);
        let c = col.color(first);
        if tuple
            .values()
            .iter()
            .all(|v| col.color(value_as_pos(v)) == c)
        {
            return VerifyOutcome::Counterexample { tuple, color: c };
        }
    }
    VerifyOutcome::Valid
}

fn value_as_pos(v: &BigInt) -> usize {
    use num_traits::ToPrimitive;
    v.to_usize().expect("solution entry fits the interval")
}

/// Options for the backtracking search.
#[derive(Debug, Clone)]
pub struct SearchOpts {
    /// Worker threads; the result is identical for every value.
    pub threads: usize,
    /// Forbidden-ratio pair pruning (sound, only affects speed); applied
    /// only when no inequalities are supplied.
    pub ratio_pruning: bool,
}

impl Default for SearchOpts {
    fn default() -> Self {
        SearchOpts {
            threads: 1,
            ratio_pruning: true,
        }
    }
}

/// Precomputed constraints for the interval `[1, n]`:
/// solutions and forced-difference pairs grouped by their largest element,
/// so the backtracker checks exactly the constraints completed by each
/// assignment.
struct SearchContext {
    r: u32,
    n: usize,
    /// `by_max[p]`: solutions (as position vectors) whose maximum is `p`.
    by_max: Vec<Vec<Vec<usize>>>,
    /// `pairs_by_max[p]`: positions `q < p` that must differ in color
    /// from `p` (forbidden-ratio pairs).
    pairs_by_max: Vec<Vec<usize>>,
}

fn build_context(
    eq: &Equation,
    r: u32,
    n: usize,
    ineqs: &[Vec<BigInt>],
    ratio_pruning: bool,
) -> SearchContext {
    let mut by_max = vec![Vec::new(); n + 1];
    for tuple in enumerate_solutions(eq, n, ineqs) {
        let vals: Vec<usize> = tuple.values().iter().map(value_as_pos).collect();
        let max = *vals.iter().max().expect("nonempty tuple");
        by_max[max].push(vals);
    }
    let mut pairs_by_max = vec![Vec::new(); n + 1];
    if ratio_pruning && ineqs.is_empty() {
        let mut seen = BTreeSet::new();
        for s in forbidden_ratios(eq) {
            if !s.is_positive() || s.is_one() {
                continue;
            }
            for y in 1..=n {
                let scaled = &s * Rational::from_integer(BigInt::from(y as u64));
                if !scaled.is_integer() {
                    continue;
                }
                let z = scaled.to_integer();
                if z < BigInt::one() || z > BigInt::from(n as u64) {
                    continue;
                }
                let z = value_as_pos(&z);
                let (lo, hi) = (y.min(z), y.max(z));
                if lo != hi && seen.insert((lo, hi)) {
                    pairs_by_max[hi].push(lo);
                }
            }
        }
    }
    SearchContext {
        r,
        n,
        by_max,
        pairs_by_max,
    }
}

impl SearchContext {
    /// Checks every constraint completed by the assignment at `pos`.
    fn consistent(&self, colors: &[u32], pos: usize) -> bool {
        let c = colors[pos - 1];
        for &q in &self.pairs_by_max[pos] {
            if colors[q - 1] == c {
                return false;
            }
        }
        'sol: for sol in &self.by_max[pos] {
            for &v in sol {
                if colors[v - 1] != c {
                    continue 'sol;
                }
            }
            return false;
        }
        true
    }
}

fn dfs(ctx: &SearchContext, colors: &mut [u32], pos: usize) -> bool {
    if pos > ctx.n {
        return true;
    }
    let top = if pos == 1 { 1 } else { ctx.r };
    for c in 1..=top {
        colors[pos - 1] = c;
        if ctx.consistent(colors, pos) && dfs(ctx, colors, pos + 1) {
            return true;
        }
    }
    false
}

/// Lexicographically least solution-free coloring of `[1, n]` with
/// `color(1) = 1`, or `None` if every coloring has a monochromatic
/// solution. Fixing the first color loses no generality: validity is
/// invariant under color permutation.
pub fn search_coloring(eq: &Equation, r: u32, n: usize, ineqs: &[Vec<BigInt>]) -> Option<Coloring> {
    search_coloring_opts(eq, r, n, ineqs, &SearchOpts::default())
}

pub fn search_coloring_opts(
    eq: &Equation,
    r: u32,
    n: usize,
    ineqs: &[Vec<BigInt>],
    opts: &SearchOpts,
) -> Option<Coloring> {
    assert!(r >= 1 && n >= 1);
    let ctx = build_context(eq, r, n, ineqs, opts.ratio_pruning);
    if opts.threads >= 2 && n >= 3 && r >= 2 {
        return parallel_search(&ctx, opts.threads);
    }
    let mut colors = vec![0u32; n];
    if dfs(&ctx, &mut colors, 1) {
        Some(Coloring::new(r, colors).expect("search palette"))
    } else {
        None
    }
}

/// Splits the subtrees under the assignments of positions 2 and 3 across
/// workers. Selection is by branch order, not completion order, so the
/// result equals the sequential one for any worker count.
fn parallel_search(ctx: &SearchContext, threads: usize) -> Option<Coloring> {
    let mut branches = Vec::new();
    for c2 in 1..=ctx.r {
        for c3 in 1..=ctx.r {
            branches.push((c2, c3));
        }
    }
    let next = AtomicUsize::new(0);
    let winner = AtomicUsize::new(usize::MAX);
    let results: Vec<Mutex<Option<Vec<u32>>>> = branches.iter().map(|_| Mutex::new(None)).collect();
    let workers = threads.min(branches.len());
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let idx = next.fetch_add(1, Ordering::SeqCst);
                if idx >= branches.len() {
                    return;
                }
                if idx > winner.load(Ordering::SeqCst) {
                    continue; // an earlier branch already found a coloring
                }
                let (c2, c3) = branches[idx];
                let mut colors = vec![0u32; ctx.n];
                colors[0] = 1;
                colors[1] = c2;
                colors[2] = c3;
                let ok = ctx.consistent(&colors, 1)
                    && ctx.consistent(&colors, 2)
                    && ctx.consistent(&colors, 3)
                    && dfs(ctx, &mut colors, 4);
                if ok {
                    winner.fetch_min(idx, Ordering::SeqCst);
                    *results[idx].lock().unwrap() = Some(colors);
                }
            });
        }
    });
    for slot in &results {
        if let Some(colors) = slot.lock().unwrap().take() {
            return Some(Coloring::new(ctx.r, colors).expect("search palette"));
        }
    }
    None
}

/// Outcome of the radius computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RadiusOutcome {
    /// Least `R <= cap` such that no solution-free coloring of `[1, R]`
    /// exists; `witness` is the least valid coloring of `[1, R - 1]`.
    Radius { radius: usize, witness: Coloring },
    /// Valid colorings exist at every length up to `cap`; `witness` has
    /// length `cap`.
    Unknown { cap: usize, witness: Coloring },
}

/// Computes the least interval length that forces a monochromatic solution,
/// up to `cap`. A single depth-first pass over the coloring tree serves all
/// lengths at once: a valid coloring of `[1, N]` restricted to `[1, N - 1]`
/// stays valid, so the deepest reachable level is the last solvable length.
pub fn rado_radius(eq: &Equation, r: u32, cap: usize, ineqs: &[Vec<BigInt>]) -> RadiusOutcome {
    assert!(r >= 1 && cap >= 1);
    let ctx = build_context(eq, r, cap, ineqs, ineqs.is_empty());
    let mut colors = vec![0u32; cap];
    let mut best: (usize, Vec<u32>) = (0, Vec::new());
    let reached_cap = radius_dfs(&ctx, &mut colors, 1, &mut best);
    let witness = Coloring::new(r, best.1).expect("radius witness palette");
    if reached_cap {
        RadiusOutcome::Unknown { cap, witness }
    } else {
        RadiusOutcome::Radius {
            radius: best.0 + 1,
            witness,
        }
    }
}

fn radius_dfs(
    ctx: &SearchContext,
    colors: &mut [u32],
    pos: usize,
    best: &mut (usize, Vec<u32>),
) -> bool {
    let top = if pos == 1 { 1 } else { ctx.r };
    for c in 1..=top {
        colors[pos - 1] = c;
        if ctx.consistent(colors, pos) {
            if pos > best.0 {
                *best = (pos, colors[..pos].to_vec());
            }
            if pos == ctx.n || radius_dfs(ctx, colors, pos + 1, best) {
                return true;
            }
        }
    }
    false
}

/// Pointwise relabeling by a permutation of `{1..r}`, given as
/// `perm[c - 1] = image of color c`.
pub fn permute_colors(col: &Coloring, perm: &[u32]) -> Result<Coloring, ColoringError> {
    let r = col.r();
    let mut seen = vec![false; r as usize];
    if perm.len() != r as usize {
        return Err(ColoringError::BadPermutation { r });
    }
    for &p in perm {
        if p == 0 || p > r || seen[(p - 1) as usize] {
            return Err(ColoringError::BadPermutation { r });
        }
        seen[(p - 1) as usize] = true;
    }
    let colors = col
        .colors()
        .iter()
        .map(|&c| perm[(c - 1) as usize])
        .collect();
    Coloring::new(r, colors)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eq(coeffs: &[i64]) -> Equation {
        Equation::from_coeffs(coeffs.iter().copied()).unwrap()
    }

    fn parity(n: usize) -> Coloring {
        Coloring::new(2, (1..=n).map(|v| if v % 2 == 1 { 1 } else { 2 }).collect()).unwrap()
    }

    fn row(entries: &[i64]) -> Vec<BigInt> {
        entries.iter().map(|&v| BigInt::from(v)).collect()
    }

    fn tuples(it: impl Iterator<Item = SolutionTuple>) -> Vec<Vec<i64>> {
        use num_traits::ToPrimitive;
        it.map(|t| t.values().iter().map(|v| v.to_i64().unwrap()).collect())
            .collect()
    }

    #[test]
    fn enumerate_in_lex_order() {
        let e = eq(&[1, 1, -1]);
        assert_eq!(
            tuples(enumerate_solutions(&e, 3, &[])),
            vec![vec![1, 1, 2], vec![1, 2, 3], vec![2, 1, 3]]
        );
        let distinct = [row(&[1, -1, 0])];
        assert_eq!(
            tuples(enumerate_solutions(&e, 3, &distinct)),
            vec![vec![1, 2, 3], vec![2, 1, 3]]
        );
    }

    #[test]
    fn enumerate_finds_small_solutions_of_sparse_equations() {
        // x + y = 3z has the easily-missed solutions (1,2,1) and (2,1,1)
        // already inside [1,2].
        let e = eq(&[1, 1, -3]);
        assert_eq!(
            tuples(enumerate_solutions(&e, 2, &[])),
            vec![vec![1, 2, 1], vec![2, 1, 1]]
        );
    }

    #[test]
    fn verify_parity_coloring_counterexample() {
        let e = eq(&[1, 1, -1]);
        match verify_coloring(&e, &parity(10), &[]) {
            VerifyOutcome::Counterexample { tuple, color } => {
                assert_eq!(tuple, SolutionTuple::from_ints([2, 2, 4]).unwrap());
                assert_eq!(color, 2);
            }
            VerifyOutcome::Valid => panic!("parity coloring has (2,2,4)"),
        }
    }

    #[test]
    fn verify_examples() {
        let e = eq(&[1, 1, -1]);
        let col = Coloring::new(2, vec![1, 2, 2, 1]).unwrap();
        assert!(verify_coloring(&e, &col, &[]).is_valid());

        let col = Coloring::new(1, vec![1, 1]).unwrap();
        let distinct = [row(&[1, -1, 0])];
        assert!(verify_coloring(&e, &col, &distinct).is_valid());
        assert!(!verify_coloring(&e, &col, &[]).is_valid());
    }

    #[test]
    fn search_examples() {
        let e = eq(&[1, 1, -1]);
        let col = search_coloring(&e, 2, 4, &[]).unwrap();
        assert_eq!(col.colors(), &[1, 2, 2, 1]);
        assert!(search_coloring(&e, 2, 5, &[]).is_none());
        assert!(search_coloring(&e, 1, 2, &[]).is_none());
    }

    #[test]
    fn search_agrees_across_thread_counts_and_pruning() {
        let e = eq(&[1, 1, -1]);
        for n in [4usize, 5, 8] {
            let base = search_coloring(&e, 2, n, &[]);
            for threads in [2usize, 4] {
                let opts = SearchOpts {
                    threads,
                    ratio_pruning: true,
                };
                assert_eq!(search_coloring_opts(&e, 2, n, &[], &opts), base);
            }
            let unpruned = SearchOpts {
                threads: 1,
                ratio_pruning: false,
            };
            assert_eq!(search_coloring_opts(&e, 2, n, &[], &unpruned), base);
        }
    }

    #[test]
    fn schur_radius_two_colors() {
        let e = eq(&[1, 1, -1]);
        match rado_radius(&e, 2, 10, &[]) {
            RadiusOutcome::Radius { radius, witness } => {
                assert_eq!(radius, 5);
                assert_eq!(witness.colors(), &[1, 2, 2, 1]);
                assert!(verify_coloring(&e, &witness, &[]).is_valid());
            }
            RadiusOutcome::Unknown { .. } => panic!("Schur radius is 5"),
        }
    }

    #[test]
    fn one_color_radius() {
        let e = eq(&[1, 1, -1]);
        match rado_radius(&e, 1, 10, &[]) {
            RadiusOutcome::Radius { radius, witness } => {
                assert_eq!(radius, 2);
                assert_eq!(witness.colors(), &[1]);
            }
            RadiusOutcome::Unknown { .. } => panic!("radius is 2"),
        }
    }

    #[test]
    fn radius_of_triple_sum_equation_is_finite() {
        // x + y = 3z: forced chain 1-2, 3-2, 4-2, 9 vs {3,4}, 6-4 collapses
        // every 2-coloring by N = 9, and (1,2,1,1,2,2,1,2) survives at 8.
        let e = eq(&[1, 1, -3]);
        match rado_radius(&e, 2, 50, &[]) {
            RadiusOutcome::Radius { radius, witness } => {
                assert_eq!(radius, 9);
                assert_eq!(witness.n(), 8);
                assert!(verify_coloring(&e, &witness, &[]).is_valid());
            }
            RadiusOutcome::Unknown { .. } => panic!("radius of x+y=3z is 9"),
        }
        // Ground truth at the boundary: exhaustive over all 2^(N-1)
        // colorings with color(1) = 1.
        assert!(exhaustive_has_valid(&e, 2, 8));
        assert!(!exhaustive_has_valid(&e, 2, 9));
    }

    fn exhaustive_has_valid(e: &Equation, r: u32, n: usize) -> bool {
        let mut colors = vec![1u32; n];
        loop {
            let col = Coloring::new(r, colors.clone()).unwrap();
            if verify_coloring(e, &col, &[]).is_valid() {
                return true;
            }
            let mut pos = n;
            loop {
                if pos <= 1 {
                    return false;
                }
                pos -= 1;
                colors[pos] += 1;
                if colors[pos] <= r {
                    break;
                }
                colors[pos] = 1;
            }
        }
    }

    #[test]
    fn unknown_outcome_for_three_colorable_equation() {
        // 7x = 6y + 4z is 2-regular but not 3-regular, so valid 3-colorings
        // exist at every length and the cap is always reached.
        let e = eq(&[7, -6, -4]);
        match rado_radius(&e, 3, 15, &[]) {
            RadiusOutcome::Unknown { cap, witness } => {
                assert_eq!(cap, 15);
                assert_eq!(witness.n(), 15);
                assert!(verify_coloring(&e, &witness, &[]).is_valid());
            }
            RadiusOutcome::Radius { radius, .. } => {
                panic!("no 3-color radius should exist, got {radius}")
            }
        }
    }

    #[test]
    fn at3_two_color_radius_is_tiny() {
        // Any 2-coloring of {1, 2, 4} repeats a color, and each repeated
        // pair is linked by a forbidden ratio of 7x = 6y + 4z.
        let e = eq(&[7, -6, -4]);
        match rado_radius(&e, 2, 20, &[]) {
            RadiusOutcome::Radius { radius, .. } => assert_eq!(radius, 4),
            RadiusOutcome::Unknown { .. } => panic!("2-color radius is 4"),
        }
    }

    #[test]
    fn radius_with_inequalities() {
        // Distinct x and y: the weak Schur bound moves the radius from 5
        // to 9.
        let e = eq(&[1, 1, -1]);
        let distinct = [row(&[1, -1, 0])];
        match rado_radius(&e, 2, 20, &distinct) {
            RadiusOutcome::Radius { radius, witness } => {
                assert_eq!(radius, 9);
                assert!(verify_coloring(&e, &witness, &distinct).is_valid());
            }
            RadiusOutcome::Unknown { .. } => panic!("weak radius is 9"),
        }
    }

    #[test]
    fn permute_examples() {
        let col = Coloring::new(2, vec![1, 2, 2, 1]).unwrap();
        let swapped = permute_colors(&col, &[2, 1]).unwrap();
        assert_eq!(swapped.colors(), &[2, 1, 1, 2]);
        assert_eq!(permute_colors(&col, &[1, 2]).unwrap(), col);
        let twice = permute_colors(&permute_colors(&col, &[2, 1]).unwrap(), &[2, 1]).unwrap();
        assert_eq!(twice, col);
        assert!(permute_colors(&col, &[1, 1]).is_err());
        assert!(permute_colors(&col, &[1]).is_err());
    }

    #[test]
    fn file_format_round_trip() {
        let col = Coloring::new(2, vec![1, 2, 2, 1]).unwrap();
        let text = col.to_file_string();
        assert_eq!(text, "4 2\n1 2 2 1\n");
        assert_eq!(Coloring::parse(&text).unwrap(), col);
        let commented = "# a valid Schur coloring\n4 2\n# palette {1,2}\n1 2 2 1\n";
        assert_eq!(Coloring::parse(commented).unwrap(), col);
        assert!(Coloring::parse("4 2\n1 2 2\n").is_err());
        assert!(Coloring::parse("4 2\n1 2 2 3\n").is_err());
        assert!(Coloring::parse("").is_err());
    }
}
