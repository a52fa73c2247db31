//! Ulam sphere sizes.
//!
//! Four routes are implemented and cross-checked against one another:
//!
//! 1. closed-form polynomials for permutation spheres of radius 1..=3;
//! 2. the tableaux sum `sum f^lambda * K^lambda_r` over shapes with first
//!    part at least `n - t`, valid for any radius around the sorted center;
//! 3. the radius-1 duplication formula `1 + (n-1)^2 - |SD| - |AD|`, valid
//!    for any center;
//! 4. brute-force enumeration of the sphere under the translocation action,
//!    gated by explicit size caps.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::perm::{check_divides, Multipermutation, Translocation};
use crate::tableaux::{count_content_r, count_syt, partitions_first_part_at_least};

pub use crate::perm::all_multipermutations;

/// Size caps for brute-force sphere enumeration.  Radius-1 spheres need only
/// `n^2` actions, so they are allowed for larger `n` than deep enumeration.
#[derive(Debug, Clone, Copy)]
pub struct EnumerationCaps {
    /// Largest `n` admitted when the radius is 2 or more.
    pub max_n: usize,
    /// Largest `n` admitted when the radius is 0 or 1.
    pub max_radius1_n: usize,
}

impl Default for EnumerationCaps {
    fn default() -> Self {
        Self {
            max_n: 8,
            max_radius1_n: 64,
        }
    }
}

/// How a sphere size was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SphereMethod {
    ClosedForm,
    TableauxSum,
    DuplicationFormula,
    BruteForce,
}

impl SphereMethod {
    pub fn as_str(&self) -> &'static str {
        match self {
            SphereMethod::ClosedForm => "closed-form",
            SphereMethod::TableauxSum => "tableaux-sum",
            SphereMethod::DuplicationFormula => "duplication-formula",
            SphereMethod::BruteForce => "brute-force",
        }
    }
}

/// Center of a reported sphere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SphereCenter {
    /// The sorted multipermutation (projection of the identity).
    Identity { n: usize, r: usize },
    Explicit(Multipermutation),
    /// Any binary multipermutation whose cuts follow the balanced profile
    /// with the given cut count; all such centers share one sphere size.
    BalancedCuts { n: usize, cuts: usize },
}

impl SphereCenter {
    pub fn label(&self) -> String {
        match self {
            SphereCenter::Identity { .. } => "identity".to_string(),
            SphereCenter::Explicit(m) => m.to_string(),
            SphereCenter::BalancedCuts { cuts, .. } => {
                format!("balanced binary word with {cuts} cuts")
            }
        }
    }
}

/// Breakdown of the radius-1 formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DuplicationBreakdown {
    /// `1 + (n-1)^2`, the number of distinct translocations.
    pub translocations: u128,
    /// Size of the standard duplication set.
    pub standard: u128,
    /// Size of the alternating duplication set.
    pub alternating: u128,
}

/// A sphere size together with how it was computed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SphereReport {
    pub center: SphereCenter,
    pub n: usize,
    pub r: usize,
    pub radius: usize,
    pub size: BigUint,
    pub method: SphereMethod,
    pub components: Option<DuplicationBreakdown>,
}

/// `1 + (n-1)^2`: the number of distinct translocations on `n` positions
/// once the redundant delete-at-i/insert-at-(i-1) forms are dropped.
pub fn translocation_count(n: usize) -> u128 {
    let m = n as u128 - 1;
    1 + m * m
}

/// The canonical duplicate-free set of translocations: one identity plus
/// every `(i, j)` with `i != j` and `i - j != 1`.  Acting on a permutation
/// with this set yields each radius-1 neighbor exactly once.
pub fn unique_translocations(n: usize) -> Vec<Translocation> {
    let mut out = Vec::with_capacity(translocation_count(n) as usize);
    out.push(Translocation::new(n, 1, 1).expect("identity in range"));
    for i in 1..=n {
        for j in 1..=n {
            if i != j && i != j + 1 {
                out.push(Translocation::new(n, i, j).expect("in range"));
            }
        }
    }
    out
}

/// `floor((k-2)^2 / 4)`: the number of even-length alternating substrings of
/// length at least 4 inside an alternating string of length `k`.
pub fn psi(k: usize) -> u64 {
    let d = k as i64 - 2;
    ((d * d) / 4) as u64
}

/// Sum of [`psi`] over a tuple of lengths.
pub fn psi_sum(lengths: &[u32]) -> u64 {
    lengths.iter().map(|&l| psi(l as usize)).sum()
}

/// Size of the standard duplication set by the counting rule: `(n-2)` per
/// position repeating its left neighbor, `(r-1)` per position that starts a
/// fresh symbol (including position 1).
pub fn sd_size(m: &Multipermutation) -> u64 {
    let n = m.n();
    let s = m.symbols();
    let repeats = (1..n).filter(|&i| s[i] == s[i - 1]).count() as u64;
    let fresh = n as u64 - repeats;
    let wide = if n >= 2 { (n as u64 - 2) * repeats } else { 0 };
    wide + (m.r() as u64 - 1) * fresh
}

/// The maximal alternating substrings of a sequence, as 0-based inclusive
/// `(start, end)` ranges.  Adjacent runs may share a single boundary
/// position.  A substring is alternating when it uses at most two symbols in
/// strict alternation; singletons count.
pub fn maximal_alternating_runs(s: &[u32]) -> Vec<(usize, usize)> {
    let n = s.len();
    if n == 0 {
        return Vec::new();
    }
    // reach[i] = largest j such that s[i..=j] is alternating.
    let mut reach = vec![0usize; n];
    reach[n - 1] = n - 1;
    for i in (0..n - 1).rev() {
        reach[i] = if s[i] == s[i + 1] {
            i
        } else if i + 2 < n && s[i + 2] == s[i] {
            reach[i + 1]
        } else {
            i + 1
        };
    }
    (0..n)
        .filter(|&i| i == 0 || reach[i - 1] < reach[i])
        .map(|i| (i, reach[i]))
        .collect()
}

/// Size of the alternating duplication set: the sum of [`psi`] over the
/// lengths of all maximal alternating substrings.
pub fn ad_size(m: &Multipermutation) -> u64 {
    maximal_alternating_runs(m.symbols())
        .iter()
        .map(|&(a, b)| psi(b - a + 1))
        .sum()
}

/// Exact radius-1 sphere size around an arbitrary center:
/// `1 + (n-1)^2 - |SD| - |AD|`, with the breakdown attached.
pub fn sphere_size_radius_one(m: &Multipermutation) -> SphereReport {
    let n = m.n();
    let t_n = translocation_count(n);
    let sd = sd_size(m) as u128;
    let ad = ad_size(m) as u128;
    SphereReport {
        center: SphereCenter::Explicit(m.clone()),
        n,
        r: m.r(),
        radius: 1,
        size: BigUint::from(t_n - sd - ad),
        method: SphereMethod::DuplicationFormula,
        components: Some(DuplicationBreakdown {
            translocations: t_n,
            standard: sd,
            alternating: ad,
        }),
    }
}

/// Sphere size around the sorted center for any radius `0 <= t <= n - r`,
/// as the tableaux sum `sum f^lambda * K^lambda_r` over partitions of `n`
/// with first part at least `n - t`.
pub fn sphere_size_identity(n: usize, r: usize, t: usize) -> Result<BigUint> {
    check_divides(n, r)?;
    if t > n - r {
        return Err(Error::InvalidParameter(format!(
            "radius t={t} out of range 0..={}",
            n - r
        )));
    }
    let mut sum = BigUint::zero();
    for lam in partitions_first_part_at_least(n, n - t) {
        let f = count_syt(&lam);
        if r == 1 {
            sum += &f * &f;
        } else {
            sum += &f * count_content_r(&lam, r)?;
        }
    }
    Ok(sum)
}

/// [`sphere_size_identity`] wrapped in a report.
pub fn sphere_report_identity(n: usize, r: usize, t: usize) -> Result<SphereReport> {
    Ok(SphereReport {
        center: SphereCenter::Identity { n, r },
        n,
        r,
        radius: t,
        size: sphere_size_identity(n, r, t)?,
        method: SphereMethod::TableauxSum,
        components: None,
    })
}

/// Closed-form permutation sphere sizes for radius 1, 2, or 3.
///
/// Radius 2 requires `n > 3` and radius 3 requires `n > 5`; below those
/// thresholds the closed forms do not apply.
pub fn sphere_size_perm_closed(n: usize, t: usize) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    let big = |x: usize| BigUint::from(x);
    let sq = |x: BigUint| &x * &x;
    let radius1 = big(1) + sq(big(n - 1));
    match t {
        1 => Ok(radius1),
        2 => {
            if n <= 3 {
                return Err(Error::InvalidParameter(format!(
                    "radius-2 closed form needs n > 3, got n={n}"
                )));
            }
            Ok(radius1
                + sq(big(n) * big(n - 3) / big(2))
                + sq(big(n - 1) * big(n - 2) / big(2)))
        }
        3 => {
            if n <= 5 {
                return Err(Error::InvalidParameter(format!(
                    "radius-3 closed form needs n > 5, got n={n}"
                )));
            }
            let r2 = sphere_size_perm_closed(n, 2)?;
            Ok(r2
                + sq(big(n) * big(n - 1) * big(n - 5) / big(6))
                + sq(big(n) * big(n - 2) * big(n - 4) / big(3))
                + sq(big(n - 1) * big(n - 2) * big(n - 3) / big(6)))
        }
        _ => Err(Error::InvalidParameter(format!(
            "no closed form for radius t={t}; supported t = 1, 2, 3"
        ))),
    }
}

/// Brute-force sphere: every multipermutation reachable from `m` by at most
/// `t` translocations, realized directly from the definition.  Used as the
/// oracle that every formula above is checked against.
pub fn sphere_enumerate(
    m: &Multipermutation,
    t: usize,
    caps: &EnumerationCaps,
) -> Result<BTreeSet<Multipermutation>> {
    let n = m.n();
    let cap = if t <= 1 { caps.max_radius1_n } else { caps.max_n };
    if n > cap {
        return Err(Error::CapExceeded {
            what: if t <= 1 {
                "radius-1 sphere enumeration"
            } else {
                "sphere enumeration"
            },
            size: n,
            cap,
        });
    }
    let mut sphere = BTreeSet::new();
    sphere.insert(m.clone());
    if t == 0 {
        return Ok(sphere);
    }
    let moves: Vec<Translocation> = unique_translocations(n)
        .into_iter()
        .filter(|phi| !phi.is_identity())
        .collect();
    let mut frontier: Vec<Multipermutation> = vec![m.clone()];
    for _ in 0..t {
        let mut next = Vec::new();
        for x in &frontier {
            for phi in &moves {
                let y = x.act(phi).expect("same n");
                if sphere.insert(y.clone()) {
                    next.push(y);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    Ok(sphere)
}
