//! Code-size bounds and the perfect-code feasibility pipeline.
//!
//! Upper bounds are floored and lower bounds are ceiled, with the exact
//! rational retained next to the rounded integer.  The feasibility verdict
//! for perfect t-error-correcting permutation codes applies the cheapest
//! firing rule in the order: trivial parameters, explicit sphere-size
//! comparison (t = 1, 2, 3), then the overlap ratio `F(n, t) > 1`.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::numeric::{factorial, multiperm_count};
use crate::perm::check_divides;
use crate::spheres::sphere_size_perm_closed;

/// Which bound a report carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    SingletonUpper,
    SpherePackingUpper,
    PerfectLower,
    GvLower,
    BinaryPerfectLower,
    BinaryGvLower,
}

impl BoundKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            BoundKind::SingletonUpper => "singleton-upper",
            BoundKind::SpherePackingUpper => "sphere-packing-upper",
            BoundKind::PerfectLower => "perfect-lower",
            BoundKind::GvLower => "gv-lower",
            BoundKind::BinaryPerfectLower => "binary-perfect-lower",
            BoundKind::BinaryGvLower => "binary-gv-lower",
        }
    }

    pub fn is_upper(&self) -> bool {
        matches!(self, BoundKind::SingletonUpper | BoundKind::SpherePackingUpper)
    }
}

/// A bound on code size: the exact rational and its directional rounding
/// (floor for upper bounds, ceiling for lower bounds).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub kind: BoundKind,
    pub n: usize,
    pub r: usize,
    pub d: Option<usize>,
    pub value: BigUint,
    pub raw: BigRational,
}

fn report(kind: BoundKind, n: usize, r: usize, d: Option<usize>, raw: BigRational) -> BoundReport {
    let rounded = if kind.is_upper() { raw.floor() } else { raw.ceil() };
    let value = rounded
        .to_integer()
        .to_biguint()
        .unwrap_or_else(BigUint::zero);
    BoundReport {
        kind,
        n,
        r,
        d,
        value,
        raw,
    }
}

fn ratio(num: BigUint, den: BigUint) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Upper bound `(n - d + 1)!` on a permutation code with minimum distance
/// `d`.  The maximum Ulam distance on n positions is `n - 1`, so `d` must
/// lie in `1..=n-1`.
pub fn singleton_upper(n: usize, d: usize) -> Result<BoundReport> {
    if n < 2 || d < 1 || d > n - 1 {
        return Err(Error::InvalidParameter(format!(
            "minimum distance d={d} out of range 1..={} for n={n}",
            n.saturating_sub(1)
        )));
    }
    let raw = ratio(factorial(n - d + 1), BigUint::one());
    Ok(report(BoundKind::SingletonUpper, n, 1, Some(d), raw))
}

/// The overlap ratio `F(n, t) = ((n-t)!)^2 t! / (n! (n-2t)!)`.  A value
/// exceeding 1 rules out nontrivial perfect t-error-correcting permutation
/// codes.  Defined for `n >= 2t`.
pub fn overlap_ratio(n: usize, t: usize) -> Result<BigRational> {
    if n < 2 * t {
        return Err(Error::InvalidParameter(format!(
            "overlap ratio needs n >= 2t, got n={n}, t={t}"
        )));
    }
    let num = factorial(n - t) * factorial(n - t) * factorial(t);
    let den = factorial(n) * factorial(n - 2 * t);
    Ok(ratio(num, den))
}

/// Smallest `n` for which the overlap ratio exceeds 1, scanning upward from
/// `n = 2t` (the ratio is monotone in `n`).  For `t = 1` the ratio is
/// `(n-1)/n < 1` for every `n`, so there is no such value.
pub fn min_overlap_n(t: usize) -> Option<usize> {
    if t <= 1 {
        return None;
    }
    let one = BigRational::one();
    (2 * t..=2 * t + 10_000).find(|&n| overlap_ratio(n, t).expect("n >= 2t") > one)
}

/// Outcome of the perfect-code feasibility check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// Parameters only admit trivial perfect codes (whole space or a single
    /// codeword): `t = 0`, `t >= n-1`, or `n <= 2t+1`.
    TrivialForced,
    /// Ruled out because the required size `n!/|S(e,t)|` exceeds the
    /// distance-`2t+1` upper bound `(n-2t)!`.
    ExplicitSphereExcluded,
    /// Ruled out by the overlap ratio exceeding 1.
    OverlapExcluded,
    NotExcluded,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::TrivialForced => "trivial-forced",
            Verdict::ExplicitSphereExcluded => "explicit-sphere-excluded",
            Verdict::OverlapExcluded => "overlap-excluded",
            Verdict::NotExcluded => "not-excluded",
        }
    }
}

/// Feasibility verdict for nontrivial perfect t-error-correcting
/// permutation codes in `S_n`, with the inequality that fired.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FeasibilityVerdict {
    pub n: usize,
    pub t: usize,
    pub verdict: Verdict,
    pub witness: String,
}

pub fn perfect_code_feasibility(n: usize, t: usize) -> Result<FeasibilityVerdict> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    let done = |verdict: Verdict, witness: String| FeasibilityVerdict {
        n,
        t,
        verdict,
        witness,
    };

    if t == 0 {
        return Ok(done(
            Verdict::TrivialForced,
            "radius 0: only the whole space is perfect".into(),
        ));
    }
    if t >= n - 1 {
        return Ok(done(
            Verdict::TrivialForced,
            format!("t={t} >= n-1={}: one sphere covers everything", n - 1),
        ));
    }
    if n <= 2 * t + 1 {
        return Ok(done(
            Verdict::TrivialForced,
            format!("n={n} <= 2t+1={}: spheres of distinct codewords overlap", 2 * t + 1),
        ));
    }
    if (1..=3).contains(&t) {
        let sphere = sphere_size_perm_closed(n, t)?;
        // A perfect code would have size n!/|S(e,t)|, but minimum distance
        // 2t+1 caps the size at (n-2t)!.
        let required = ratio(factorial(n), sphere.clone());
        let cap = ratio(factorial(n - 2 * t), BigUint::one());
        if required > cap {
            return Ok(done(
                Verdict::ExplicitSphereExcluded,
                format!(
                    "required size n!/|S(e,{t})| = {}/{} exceeds (n-2t)! = {}",
                    factorial(n),
                    sphere,
                    factorial(n - 2 * t)
                ),
            ));
        }
    }
    if n >= 2 * t {
        let f = overlap_ratio(n, t)?;
        if f > BigRational::one() {
            return Ok(done(
                Verdict::OverlapExcluded,
                format!("overlap ratio F({n},{t}) = {f} > 1"),
            ));
        }
    }
    Ok(done(
        Verdict::NotExcluded,
        "no rule fired; existence not ruled out by these checks".into(),
    ))
}

/// Sphere-packing upper bound for single-error-correcting codes:
/// `n! / ((r!)^(n/r) (1 + (n-1)(n/r - 1)))`, floored.
pub fn sphere_packing_upper(n: usize, r: usize) -> Result<BoundReport> {
    check_divides(n, r)?;
    let min_sphere = BigUint::from(1 + (n - 1) * (n / r - 1));
    let raw = ratio(multiperm_count(n, r), min_sphere);
    Ok(report(BoundKind::SpherePackingUpper, n, r, None, raw))
}

fn max_sphere_nonbinary(n: usize, r: usize) -> Result<BigUint> {
    if n / r == 2 {
        return Err(Error::WrongRegime(format!(
            "n/r = 2 is the binary case; use the binary bounds (n={n}, r={r})"
        )));
    }
    if n / r < 2 {
        return Err(Error::WrongRegime(format!(
            "lower bounds need at least two symbols, got n/r = {} (n={n}, r={r})",
            n / r
        )));
    }
    Ok(BigUint::from(1 + (n - 1) * (n - 1) - (r - 1) * n))
}

/// Lower bound on a maximal code with minimum distance `d` outside the
/// binary case: `n! / ((r!)^(n/r) (1 + (n-1)^2 - (r-1)n)^(d-1))`, ceiled.
pub fn gv_lower(n: usize, r: usize, d: usize) -> Result<BoundReport> {
    check_divides(n, r)?;
    if d < 1 {
        return Err(Error::InvalidParameter("d must be at least 1".into()));
    }
    let max_sphere = max_sphere_nonbinary(n, r)?;
    let raw = ratio(multiperm_count(n, r), max_sphere.pow(d as u32 - 1));
    Ok(report(BoundKind::GvLower, n, r, Some(d), raw))
}

/// Lower bound on a perfect single-error-correcting code outside the binary
/// case: `n! / ((r!)^(n/r) (1 + (n-1)^2 - (r-1)n))`, ceiled.
pub fn perfect_lower(n: usize, r: usize) -> Result<BoundReport> {
    check_divides(n, r)?;
    let max_sphere = max_sphere_nonbinary(n, r)?;
    let raw = ratio(multiperm_count(n, r), max_sphere);
    Ok(report(BoundKind::PerfectLower, n, r, None, raw))
}

fn binary_envelope_rational(r: usize) -> Result<BigRational> {
    let u = crate::binarycuts::sphere_upper_bound(r as u64)?;
    let rat = BigRational::from_float(u).ok_or_else(|| {
        Error::InvalidParameter(format!("envelope U({r}) is not finite"))
    })?;
    if !rat.is_positive() {
        return Err(Error::InvalidParameter(format!(
            "envelope U({r}) = {u} is not positive"
        )));
    }
    Ok(rat)
}

/// Binary-case lower bound on a maximal code with minimum distance `d`:
/// `n! / ((r!)^2 U(r)^(d-1))`, ceiled.  `U(r)` is the real-valued envelope
/// evaluated in double precision; the rational actually divided by is
/// retained in `raw`.
pub fn binary_gv_lower(r: usize, d: usize) -> Result<BoundReport> {
    if d < 1 {
        return Err(Error::InvalidParameter("d must be at least 1".into()));
    }
    let n = 2 * r;
    let u = binary_envelope_rational(r)?;
    let mut denom = BigRational::one();
    for _ in 1..d {
        denom *= &u;
    }
    let raw = ratio(multiperm_count(n, r), BigUint::one()) / denom;
    Ok(report(BoundKind::BinaryGvLower, n, r, Some(d), raw))
}

/// Binary-case lower bound on a perfect single-error-correcting code:
/// `n! / ((r!)^2 U(r))`, ceiled.
pub fn binary_perfect_lower(r: usize) -> Result<BoundReport> {
    let n = 2 * r;
    let u = binary_envelope_rational(r)?;
    let raw = ratio(multiperm_count(n, r), BigUint::one()) / u;
    Ok(report(BoundKind::BinaryPerfectLower, n, r, None, raw))
}

/// Rows of the non-feasibility table: for each `t` in `1..=tmax`, the
/// smallest `n` whose overlap ratio exceeds 1 (none for `t = 1`).
pub fn nonfeasibility_table(tmax: usize) -> Vec<(usize, Option<usize>)> {
    (1..=tmax).map(|t| (t, min_overlap_n(t))).collect()
}
