//! Exact arithmetic and the basic objects: equations, solution tuples,
//! Rado's regularity condition, forbidden ratios, and the
//! Alexeev–Tsimerman coefficient family.
//!
//! All quantities are exact: coefficients are arbitrary-precision integers
//! and ratios are arbitrary-precision rationals. Variable and ratio indices
//! in the public API are 1-based, matching the usual mathematical notation
//! for `a_1 x_1 + ... + a_n x_n = 0`.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Exact rational number, always in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("an equation needs at least two coefficients, got {0}")]
    TooFewCoefficients(usize),
    #[error("coefficient at position {position} is zero")]
    ZeroCoefficient { position: usize },
    #[error("arity mismatch: expected {expected} entries, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("index {index} out of range 1..={arity}")]
    IndexOutOfRange { index: usize, arity: usize },
    #[error("S_{index}*{y} = {value} is not an integer")]
    NotIntegral {
        index: usize,
        y: BigInt,
        value: Rational,
    },
    #[error("forbidden ratio S_{index} = {value} is not positive")]
    NonpositiveRatio { index: usize, value: Rational },
    #[error("cannot parse `{token}` as an integer or rational p/q")]
    ParseCoefficient { token: String },
    #[error("entry at position {position} is {value}, must be >= 1")]
    NonpositiveEntry { position: usize, value: BigInt },
}

/// A single linear homogeneous equation `a_1 x_1 + ... + a_n x_n = 0`.
///
/// Canonical form: every coefficient nonzero, the vector is primitive
/// (gcd of absolute values is 1), and the first coefficient is positive.
/// [`normalize`] is the only way to construct one, so every `Equation`
/// satisfies these invariants.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Equation {
    coeffs: Vec<BigInt>,
}

impl Equation {
    /// Convenience constructor from machine integers, via [`normalize`].
    pub fn from_coeffs<I>(ints: I) -> Result<Equation, AlgebraError>
    where
        I: IntoIterator<Item = i64>,
    {
        let raw: Vec<Rational> = ints
            .into_iter()
            .map(|v| Rational::from_integer(BigInt::from(v)))
            .collect();
        normalize(&raw)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Number of variables `n`.
    pub fn arity(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff_sum(&self) -> BigInt {
        self.coeffs.iter().sum()
    }
}

impl fmt::Display for Equation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Equation {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        normalize(&parse_coeffs(s)?)
    }
}

/// A candidate solution `(x_1, ..., x_n)` in positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SolutionTuple {
    values: Vec<BigInt>,
}

impl SolutionTuple {
    pub fn new(values: Vec<BigInt>) -> Result<SolutionTuple, AlgebraError> {
        for (i, v) in values.iter().enumerate() {
            if v < &BigInt::one() {
                return Err(AlgebraError::NonpositiveEntry {
                    position: i + 1,
                    value: v.clone(),
                });
            }
        }
        Ok(SolutionTuple { values })
    }

    pub fn from_ints<I>(ints: I) -> Result<SolutionTuple, AlgebraError>
    where
        I: IntoIterator<Item = i64>,
    {
        SolutionTuple::new(ints.into_iter().map(BigInt::from).collect())
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Dilation by a positive integer `t`; solutions of a homogeneous
    /// equation stay solutions under this map.
    pub fn scale(&self, t: &BigInt) -> Result<SolutionTuple, AlgebraError> {
        if t < &BigInt::one() {
            return Err(AlgebraError::NonpositiveEntry {
                position: 0,
                value: t.clone(),
            });
        }
        SolutionTuple::new(self.values.iter().map(|v| v * t).collect())
    }
}

impl fmt::Display for SolutionTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Parses a comma-separated coefficient list such as `-7/3,2,4/3`.
/// Entries are integers or rationals `p/q`; whitespace is ignored.
pub fn parse_coeffs(s: &str) -> Result<Vec<Rational>, AlgebraError> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    compact
        .split(',')
        .map(|token| {
            Rational::from_str(token).map_err(|_| AlgebraError::ParseCoefficient {
                token: token.to_string(),
            })
        })
        .collect()
}

/// Canonicalizes a nonzero rational coefficient vector into the unique
/// primitive integer vector with positive first entry that is a rational
/// multiple of it. Order is preserved.
pub fn normalize(raw: &[Rational]) -> Result<Equation, AlgebraError> {
    if raw.len() < 2 {
        return Err(AlgebraError::TooFewCoefficients(raw.len()));
    }
    for (i, q) in raw.iter().enumerate() {
        if q.is_zero() {
            return Err(AlgebraError::ZeroCoefficient { position: i + 1 });
        }
    }
    // Clear denominators, then divide out the common content.
    let mut denom_lcm = BigInt::one();
    for q in raw {
        denom_lcm = denom_lcm.lcm(q.denom());
    }
    let mut ints: Vec<BigInt> = raw
        .iter()
        .map(|q| (q * Rational::from_integer(denom_lcm.clone())).to_integer())
        .collect();
    let mut content = BigInt::zero();
    for v in &ints {
        content = content.gcd(v);
    }
    for v in &mut ints {
        *v /= &content;
    }
    if ints[0].is_negative() {
        for v in &mut ints {
            *v = -&*v;
        }
    }
    Ok(Equation { coeffs: ints })
}

/// Rado's single-equation condition: the equation is partition regular
/// iff some nonempty subset of its coefficients sums to zero. Subsets are
/// index subsets, so repeated coefficient values count separately.
///
/// Works over the set of reachable subset sums rather than enumerating
/// subsets, so equal sums collapse.
pub fn rado_regular(eq: &Equation) -> bool {
    let mut sums: HashSet<BigInt> = HashSet::new();
    for a in eq.coeffs() {
        let mut next = sums.clone();
        next.insert(a.clone());
        for s in &sums {
            next.insert(s + a);
        }
        if next.contains(&BigInt::zero()) {
            return true;
        }
        sums = next;
    }
    false
}

/// The lexicographically first (by subset bitmask) nonempty set of 1-based
/// indices whose coefficients sum to zero, if any. `rado_regular` is true
/// exactly when this returns `Some`.
pub fn zero_sum_subset(eq: &Equation) -> Option<Vec<usize>> {
    let n = eq.arity();
    debug_assert!(n < 64, "exhaustive subset scan is meant for small arity");
    for mask in 1u64..(1u64 << n) {
        let mut sum = BigInt::zero();
        for (i, a) in eq.coeffs().iter().enumerate() {
            if mask & (1 << i) != 0 {
                sum += a;
            }
        }
        if sum.is_zero() {
            return Some(
                (0..n)
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| i + 1)
                    .collect(),
            );
        }
    }
    None
}

/// Forbidden ratios `S_l = -((a_1 + ... + a_n) - a_l) / a_l` for
/// `l = 1..=n`, in index order. In any coloring free of monochromatic
/// solutions, `x` and `S_l x` must receive different colors whenever
/// `S_l x` is a positive integer.
pub fn forbidden_ratios(eq: &Equation) -> Vec<Rational> {
    let total = eq.coeff_sum();
    eq.coeffs()
        .iter()
        .map(|a| Rational::new(-(&total - a), a.clone()))
        .collect()
}

/// The degenerate solution witnessing a forbidden ratio: all entries equal
/// to `y` except position `l`, which carries `S_l * y`. Requires `S_l > 0`
/// and `S_l * y` integral.
pub fn forbidden_ratio_solution(
    eq: &Equation,
    l: usize,
    y: &BigInt,
) -> Result<SolutionTuple, AlgebraError> {
    let n = eq.arity();
    if l < 1 || l > n {
        return Err(AlgebraError::IndexOutOfRange { index: l, arity: n });
    }
    if y < &BigInt::one() {
        return Err(AlgebraError::NonpositiveEntry {
            position: 0,
            value: y.clone(),
        });
    }
    let ratio = &forbidden_ratios(eq)[l - 1];
    if !ratio.is_positive() {
        return Err(AlgebraError::NonpositiveRatio {
            index: l,
            value: ratio.clone(),
        });
    }
    let pivot = ratio * Rational::from_integer(y.clone());
    if !pivot.is_integer() {
        return Err(AlgebraError::NotIntegral {
            index: l,
            y: y.clone(),
            value: pivot,
        });
    }
    let values: Vec<BigInt> = (1..=n)
        .map(|i| {
            if i == l {
                pivot.to_integer()
            } else {
                y.clone()
            }
        })
        .collect();
    SolutionTuple::new(values)
}

/// Exact check of `a_1 x_1 + ... + a_n x_n = 0`.
pub fn check_solution(eq: &Equation, t: &SolutionTuple) -> Result<bool, AlgebraError> {
    if t.len() != eq.arity() {
        return Err(AlgebraError::ArityMismatch {
            expected: eq.arity(),
            got: t.len(),
        });
    }
    let sum: BigInt = eq.coeffs().iter().zip(t.values()).map(|(a, x)| a * x).sum();
    Ok(sum.is_zero())
}

/// The Alexeev–Tsimerman family: the canonical form of
/// `(1 - sum_{i=1}^{n-1} 2^i/(2^i - 1), 2/1, 4/3, ..., 2^{n-1}/(2^{n-1}-1))`.
/// Its n-th member is (n-1)-regular but not n-regular.
pub fn at_family(n: usize) -> Result<Equation, AlgebraError> {
    if n < 2 {
        return Err(AlgebraError::TooFewCoefficients(n));
    }
    let mut raw = Vec::with_capacity(n);
    let mut tail_sum = Rational::zero();
    let mut tail = Vec::with_capacity(n - 1);
    for i in 1..n {
        let num = BigInt::one() << i; // 2^i
        let term = Rational::new(num.clone(), num - BigInt::one());
        tail_sum += &term;
        tail.push(term);
    }
    raw.push(Rational::one() - tail_sum);
    raw.extend(tail);
    normalize(&raw)
}

/// Whether `row` equals a *nonzero* rational multiple of the equation's
/// coefficient vector. The zero row is not a nonzero multiple.
pub fn is_multiple_of(row: &[BigInt], eq: &Equation) -> Result<bool, AlgebraError> {
    if row.len() != eq.arity() {
        return Err(AlgebraError::ArityMismatch {
            expected: eq.arity(),
            got: row.len(),
        });
    }
    let a = eq.coeffs();
    // A nonzero multiple q = row_1/a_1 exists iff row_1 != 0 and all
    // cross-products agree.
    if row[0].is_zero() {
        return Ok(false);
    }
    Ok(row.iter().zip(a).all(|(r, c)| r * &a[0] == &row[0] * c))
}
