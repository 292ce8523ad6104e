//! The built-in infinite domain: positive integers and their definable subsets.
//!
//! Formulas are boolean combinations of primality, divisibility, congruence
//! and comparison atoms. A formula without the primality atom is eventually
//! periodic, so its natural density is an exact rational computed from one
//! full period. Formulas mentioning primality fall back to a deterministic
//! prefix-ratio estimator backed by a sieve.

use std::fmt;

use num_rational::Ratio;
use thiserror::Error;

/// Largest sieve bound accepted unless the caller overrides the cap.
pub const DEFAULT_SIEVE_CAP: u64 = 100_000_000;

/// Default convergence tolerance for the ratio estimator.
pub const DEFAULT_EPSILON: f64 = 0.005;

/// Largest period / enumeration window the exact-density scan will walk.
const MAX_ENUMERATION: u64 = 10_000_000;

/// Default checkpoint schedule for density estimation.
pub fn default_schedule() -> Vec<u64> {
    vec![1_000, 10_000, 100_000, 1_000_000]
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ArithError {
    #[error("formula contains the primality atom and is not eventually periodic")]
    NotEventuallyPeriodic,
    #[error("bound {requested} exceeds the configured cap {cap}")]
    BoundTooLarge { requested: u64, cap: u64 },
    #[error("invalid schedule: {0}")]
    InvalidSchedule(String),
}

/// Comparison operators over the domain variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CmpOp {
    Lt,
    Le,
    Gt,
    Ge,
}

impl fmt::Display for CmpOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CmpOp::Lt => write!(f, "<"),
            CmpOp::Le => write!(f, "<="),
            CmpOp::Gt => write!(f, ">"),
            CmpOp::Ge => write!(f, ">="),
        }
    }
}

/// A definable subset of the positive integers.
///
/// Invariants (enforced by the parser, expected from direct constructors):
/// divisors are >= 1, moduli are >= 1 and residues lie below their modulus.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ArithFormula {
    Prime,
    /// `k | n`: n is a multiple of k.
    Divides(u64),
    /// `n mod m == r`.
    Congruence { modulus: u64, residue: u64 },
    /// `n OP c`.
    Compare(CmpOp, u64),
    Not(Box<ArithFormula>),
    And(Box<ArithFormula>, Box<ArithFormula>),
    Or(Box<ArithFormula>, Box<ArithFormula>),
}

impl ArithFormula {
    #[allow(clippy::should_implement_trait)]
    pub fn not(f: ArithFormula) -> ArithFormula {
        ArithFormula::Not(Box::new(f))
    }

    pub fn and(a: ArithFormula, b: ArithFormula) -> ArithFormula {
        ArithFormula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: ArithFormula, b: ArithFormula) -> ArithFormula {
        ArithFormula::Or(Box::new(a), Box::new(b))
    }

    pub fn contains_prime(&self) -> bool {
        match self {
            ArithFormula::Prime => true,
            ArithFormula::Divides(_)
            | ArithFormula::Congruence { .. }
            | ArithFormula::Compare(_, _) => false,
            ArithFormula::Not(g) => g.contains_prime(),
            ArithFormula::And(a, b) | ArithFormula::Or(a, b) => {
                a.contains_prime() || b.contains_prime()
            }
        }
    }

    /// Pointwise evaluation at n >= 1, with primality by trial division.
    pub fn eval(&self, n: u64) -> bool {
        self.eval_with(n, &is_prime)
    }

    pub(crate) fn eval_with(&self, n: u64, prime: &dyn Fn(u64) -> bool) -> bool {
        match self {
            ArithFormula::Prime => prime(n),
            ArithFormula::Divides(k) => *k >= 1 && n.is_multiple_of(*k),
            ArithFormula::Congruence { modulus, residue } => {
                *modulus >= 1 && n % modulus == *residue
            }
            ArithFormula::Compare(op, c) => match op {
                CmpOp::Lt => n < *c,
                CmpOp::Le => n <= *c,
                CmpOp::Gt => n > *c,
                CmpOp::Ge => n >= *c,
            },
            ArithFormula::Not(g) => !g.eval_with(n, prime),
            ArithFormula::And(a, b) => a.eval_with(n, prime) && b.eval_with(n, prime),
            ArithFormula::Or(a, b) => a.eval_with(n, prime) || b.eval_with(n, prime),
        }
    }

    /// Least common multiple of every modulus and divisor in the formula.
    fn period(&self) -> Option<u64> {
        match self {
            ArithFormula::Prime | ArithFormula::Compare(_, _) => Some(1),
            ArithFormula::Divides(k) => Some((*k).max(1)),
            ArithFormula::Congruence { modulus, .. } => Some((*modulus).max(1)),
            ArithFormula::Not(g) => g.period(),
            ArithFormula::And(a, b) | ArithFormula::Or(a, b) => {
                lcm_checked(a.period()?, b.period()?)
            }
        }
    }

    /// Largest comparison constant appearing anywhere in the formula.
    fn max_compare_constant(&self) -> u64 {
        match self {
            ArithFormula::Compare(_, c) => *c,
            ArithFormula::Prime
            | ArithFormula::Divides(_)
            | ArithFormula::Congruence { .. } => 0,
            ArithFormula::Not(g) => g.max_compare_constant(),
            ArithFormula::And(a, b) | ArithFormula::Or(a, b) => {
                a.max_compare_constant().max(b.max_compare_constant())
            }
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            ArithFormula::Or(_, _) => 1,
            ArithFormula::And(_, _) => 2,
            ArithFormula::Not(_) => 3,
            _ => 4,
        }
    }
}

impl fmt::Display for ArithFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn child(
            f: &mut fmt::Formatter<'_>,
            node: &ArithFormula,
            min_prec: u8,
        ) -> fmt::Result {
            if node.precedence() < min_prec {
                write!(f, "(")?;
                write!(f, "{node}")?;
                write!(f, ")")
            } else {
                write!(f, "{node}")
            }
        }
        match self {
            ArithFormula::Prime => write!(f, "prime"),
            ArithFormula::Divides(k) => write!(f, "({k} | n)"),
            ArithFormula::Congruence { modulus, residue } => {
                write!(f, "n mod {modulus} == {residue}")
            }
            ArithFormula::Compare(op, c) => write!(f, "n {op} {c}"),
            ArithFormula::Not(g) => {
                write!(f, "!")?;
                child(f, g, 3)
            }
            ArithFormula::And(a, b) => {
                child(f, a, 2)?;
                write!(f, " & ")?;
                child(f, b, 3)
            }
            ArithFormula::Or(a, b) => {
                child(f, a, 1)?;
                write!(f, " | ")?;
                child(f, b, 2)
            }
        }
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn lcm_checked(a: u64, b: u64) -> Option<u64> {
    if a == 0 || b == 0 {
        return Some(a.max(b).max(1));
    }
    (a / gcd(a, b)).checked_mul(b)
}

/// Trial-division primality. 1 is not prime.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Bit-packed sieve of Eratosthenes over [0, limit].
pub struct Sieve {
    limit: u64,
    words: Vec<u64>,
}

impl Sieve {
    pub fn new(limit: u64) -> Sieve {
        let n = limit as usize;
        let mut words = vec![u64::MAX; n / 64 + 1];
        let clear = |words: &mut Vec<u64>, i: usize| words[i / 64] &= !(1u64 << (i % 64));
        clear(&mut words, 0);
        if n >= 1 {
            clear(&mut words, 1);
        }
        let mut i = 2usize;
        while i * i <= n {
            if words[i / 64] >> (i % 64) & 1 == 1 {
                let mut j = i * i;
                while j <= n {
                    clear(&mut words, j);
                    j += i;
                }
            }
            i += 1;
        }
        Sieve {
            limit,
            words,
        }
    }

    pub fn is_prime(&self, n: u64) -> bool {
        debug_assert!(n <= self.limit);
        self.words[(n / 64) as usize] >> (n % 64) & 1 == 1
    }

    pub fn count_upto(&self, n: u64) -> u64 {
        debug_assert!(n <= self.limit);
        let full_words = (n + 1) / 64;
        let mut count: u64 = 0;
        for w in 0..full_words as usize {
            count += self.words[w].count_ones() as u64;
        }
        let rem = (n + 1) % 64;
        if rem > 0 {
            let mask = (1u64 << rem) - 1;
            count += (self.words[full_words as usize] & mask).count_ones() as u64;
        }
        count
    }
}

/// Exact number of primes in [1, N].
pub fn sieve_count(n: u64, cap: u64) -> Result<u64, ArithError> {
    if n > cap {
        return Err(ArithError::BoundTooLarge {
            requested: n,
            cap,
        });
    }
    if n < 2 {
        return Ok(0);
    }
    Ok(Sieve::new(n).count_upto(n))
}

/// One checkpoint of a prefix-ratio estimate: exactly `count` of the first
/// `bound` positive integers satisfy the formula.
#[derive(Debug, Clone, PartialEq)]
pub struct RatioPoint {
    pub bound: u64,
    pub count: u64,
    pub ratio: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub enum DensityKind {
    /// True natural density as a rational in lowest terms.
    Exact(Ratio<u64>),
    /// Prefix ratios along a checkpoint schedule.
    Estimated {
        points: Vec<RatioPoint>,
        converged: bool,
    },
    DivergentOrUnknown,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DensityResult {
    pub kind: DensityKind,
    /// Largest n examined while producing the result.
    pub sample_bound: u64,
}

impl DensityResult {
    pub fn exact(&self) -> Option<Ratio<u64>> {
        match &self.kind {
            DensityKind::Exact(r) => Some(*r),
            _ => None,
        }
    }

    pub fn last_ratio(&self) -> Option<f64> {
        match &self.kind {
            DensityKind::Estimated { points, .. } => points.last().map(|p| p.ratio),
            _ => None,
        }
    }
}

/// True natural density of a primality-free formula.
///
/// Such a formula is eventually periodic: beyond T = (largest comparison
/// constant), every atom is either constant or periodic with period L =
/// lcm of the moduli and divisors. The density is the satisfaction count
/// over one full period [T+1, T+L], divided by L.
pub fn exact_density(f: &ArithFormula) -> Result<DensityResult, ArithError> {
    let (ratio, threshold, period) = exact_density_parts(f)?;
    Ok(DensityResult {
        kind: DensityKind::Exact(ratio),
        sample_bound: threshold + period,
    })
}

fn exact_density_parts(f: &ArithFormula) -> Result<(Ratio<u64>, u64, u64), ArithError> {
    if f.contains_prime() {
        return Err(ArithError::NotEventuallyPeriodic);
    }
    let period = f.period().ok_or(ArithError::BoundTooLarge {
        requested: u64::MAX,
        cap: MAX_ENUMERATION,
    })?;
    if period > MAX_ENUMERATION {
        return Err(ArithError::BoundTooLarge {
            requested: period,
            cap: MAX_ENUMERATION,
        });
    }
    let threshold = f.max_compare_constant();
    threshold
        .checked_add(period)
        .ok_or(ArithError::BoundTooLarge {
            requested: u64::MAX,
            cap: MAX_ENUMERATION,
        })?;
    let count = (threshold + 1..=threshold + period)
        .filter(|&n| f.eval(n))
        .count() as u64;
    Ok((Ratio::new(count, period), threshold, period))
}

/// Exact prefix counts and ratios of `f` along the checkpoint schedule.
///
/// Deterministic: a single forward pass counts satisfying integers, and the
/// last three ratios decide convergence (fewer than three checkpoints never
/// converge). Primality lookups use one shared sieve built up to the final
/// checkpoint.
pub fn estimate_density(
    f: &ArithFormula,
    schedule: &[u64],
    epsilon: f64,
    cap: u64,
) -> Result<DensityResult, ArithError> {
    if schedule.is_empty() {
        return Err(ArithError::InvalidSchedule("schedule is empty".into()));
    }
    if schedule.windows(2).any(|w| w[0] >= w[1]) {
        return Err(ArithError::InvalidSchedule(
            "schedule must be strictly increasing".into(),
        ));
    }
    if schedule[0] == 0 {
        return Err(ArithError::InvalidSchedule(
            "checkpoints must be >= 1".into(),
        ));
    }
    let max = *schedule.last().unwrap();
    if max > cap {
        return Err(ArithError::BoundTooLarge {
            requested: max,
            cap,
        });
    }
    let sieve = if f.contains_prime() {
        Some(Sieve::new(max))
    } else {
        None
    };
    let prime_at = |n: u64| match &sieve {
        Some(s) => s.is_prime(n),
        None => is_prime(n),
    };

    let mut points = Vec::with_capacity(schedule.len());
    let mut count: u64 = 0;
    let mut next = 0usize;
    for n in 1..=max {
        if f.eval_with(n, &prime_at) {
            count += 1;
        }
        if n == schedule[next] {
            points.push(RatioPoint {
                bound: n,
                count,
                ratio: count as f64 / n as f64,
            });
            next += 1;
        }
    }
    let converged = ratios_converged(
        &points.iter().map(|p| p.ratio).collect::<Vec<_>>(),
        epsilon,
    );
    Ok(DensityResult {
        kind: DensityKind::Estimated {
            points,
            converged,
        },
        sample_bound: max,
    })
}

pub(crate) fn ratios_converged(ratios: &[f64], epsilon: f64) -> bool {
    if ratios.len() < 3 {
        return false;
    }
    let tail = &ratios[ratios.len() - 3..];
    tail.iter().enumerate().all(|(i, a)| {
        tail[i + 1..].iter().all(|b| (a - b).abs() <= epsilon)
    })
}

/// Size classification of the set defined by a formula.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Cardinality {
    Finite(u64),
    CountablyInfinite,
    /// No certificate either way; `count` members were found up to the probe.
    UnknownBeyondProbe { probe_bound: u64, count: u64 },
}

impl fmt::Display for Cardinality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cardinality::Finite(c) => write!(f, "finite({c})"),
            Cardinality::CountablyInfinite => write!(f, "countably infinite"),
            Cardinality::UnknownBeyondProbe { probe_bound, count } => {
                write!(f, "unknown beyond probe {probe_bound} ({count} found)")
            }
        }
    }
}

/// Classify the cardinality of the set defined by `f`.
///
/// Primality-free formulas are fully decided through their exact density
/// (zero density plus eventual periodicity certifies finiteness). With the
/// primality atom, a conjoined upper comparison gives an exact finite count,
/// and a conservative analysis certifies infinitude when a disjunct is known
/// infinite modulo a finite or cofinite correction (the primes and the
/// composites are both known infinite). Everything else is reported as
/// unknown beyond the probe bound.
pub fn cardinality_class(f: &ArithFormula, probe_bound: u64) -> Cardinality {
    if !f.contains_prime() {
        if let Ok((density, threshold, _)) = exact_density_parts(f) {
            if density > Ratio::new(0, 1) {
                return Cardinality::CountablyInfinite;
            }
            // Zero density with eventual periodicity: every member is <= threshold.
            if threshold <= MAX_ENUMERATION {
                let count = (1..=threshold).filter(|&n| f.eval(n)).count() as u64;
                return Cardinality::Finite(count);
            }
        }
        return probe(f, probe_bound);
    }
    if let Some(bound) = syntactic_upper_bound(f) {
        if bound <= MAX_ENUMERATION {
            let sieve = Sieve::new(bound.max(2));
            let count = (1..=bound)
                .filter(|&n| f.eval_with(n, &|m| sieve.is_prime(m)))
                .count() as u64;
            return Cardinality::Finite(count);
        }
    }
    let (infinite, _) = inf_cofin(f, false);
    if infinite {
        return Cardinality::CountablyInfinite;
    }
    probe(f, probe_bound)
}

fn probe(f: &ArithFormula, probe_bound: u64) -> Cardinality {
    let limit = probe_bound.min(MAX_ENUMERATION);
    let sieve = if f.contains_prime() {
        Some(Sieve::new(limit.max(2)))
    } else {
        None
    };
    let count = (1..=limit)
        .filter(|&n| {
            f.eval_with(n, &|m| match &sieve {
                Some(s) => s.is_prime(m),
                None => is_prime(m),
            })
        })
        .count() as u64;
    Cardinality::UnknownBeyondProbe {
        probe_bound: limit,
        count,
    }
}

/// Smallest upper bound implied by comparisons conjoined at the top level.
fn syntactic_upper_bound(f: &ArithFormula) -> Option<u64> {
    match f {
        ArithFormula::Compare(CmpOp::Lt, c) => Some(c.saturating_sub(1)),
        ArithFormula::Compare(CmpOp::Le, c) => Some(*c),
        ArithFormula::And(a, b) => match (syntactic_upper_bound(a), syntactic_upper_bound(b)) {
            (Some(x), Some(y)) => Some(x.min(y)),
            (Some(x), None) | (None, Some(x)) => Some(x),
            (None, None) => None,
        },
        _ => None,
    }
}

/// Returns (certainly infinite, certainly cofinite) for the set defined by
/// `f`, negated when `neg` is set. Sound but incomplete.
fn inf_cofin(f: &ArithFormula, neg: bool) -> (bool, bool) {
    match f {
        // The primes and their complement are both infinite, neither cofinite.
        ArithFormula::Prime => (true, false),
        ArithFormula::Divides(k) => {
            if !neg {
                (*k >= 1, *k == 1)
            } else {
                (*k > 1, false)
            }
        }
        ArithFormula::Congruence { modulus, .. } => {
            if !neg {
                (*modulus >= 1, *modulus == 1)
            } else {
                (*modulus > 1, false)
            }
        }
        ArithFormula::Compare(op, _) => {
            let upward = matches!(op, CmpOp::Gt | CmpOp::Ge);
            if upward != neg {
                (true, true)
            } else {
                (false, false)
            }
        }
        ArithFormula::Not(g) => inf_cofin(g, !neg),
        ArithFormula::And(a, b) => {
            if !neg {
                meet(inf_cofin(a, false), inf_cofin(b, false))
            } else {
                join(inf_cofin(a, true), inf_cofin(b, true))
            }
        }
        ArithFormula::Or(a, b) => {
            if !neg {
                join(inf_cofin(a, false), inf_cofin(b, false))
            } else {
                meet(inf_cofin(a, true), inf_cofin(b, true))
            }
        }
    }
}

fn meet((ia, ca): (bool, bool), (ib, cb): (bool, bool)) -> (bool, bool) {
    ((ia && cb) || (ca && ib), ca && cb)
}

fn join((ia, ca): (bool, bool), (ib, cb): (bool, bool)) -> (bool, bool) {
    (ia || ib, ca || cb)
}
