//! The binary case `n/r = 2`: two-symbol multipermutations.
//!
//! Here the whole radius-1 sphere size is governed by the decomposition of
//! the word into cuts (maximal alternating substrings).  For a fixed cut
//! count `c` the alternating duplications are minimized by making all cut
//! lengths as equal as possible, and the optimal cut count itself sits next
//! to `sqrt(r)`.  Everything except the real-valued envelopes `U(r)` and
//! `L(r)` is exact integer arithmetic; in particular comparisons against
//! `sqrt(r)` are done via `r <= floor^2 + floor`, never through floats.

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::numeric::isqrt;
use crate::perm::Multipermutation;
use crate::spheres::{
    maximal_alternating_runs, psi, psi_sum, translocation_count, DuplicationBreakdown,
    SphereCenter, SphereMethod, SphereReport,
};

/// A decomposition of an even-length binary word into `c` cut lengths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutProfile {
    n: u32,
    lengths: Vec<u32>,
}

impl CutProfile {
    pub fn new(n: usize, lengths: Vec<u32>) -> Result<Self> {
        if n == 0 || n % 2 != 0 {
            return Err(Error::InvalidParameter(format!(
                "binary words need even positive n, got {n}"
            )));
        }
        if lengths.is_empty() || lengths.len() > n - 1 {
            return Err(Error::InvalidParameter(format!(
                "cut count {} out of range 1..={}",
                lengths.len(),
                n - 1
            )));
        }
        if lengths.iter().any(|&l| l == 0) {
            return Err(Error::InvalidParameter("zero-length cut".into()));
        }
        let total: u64 = lengths.iter().map(|&l| l as u64).sum();
        if total != n as u64 {
            return Err(Error::InvalidParameter(format!(
                "cut lengths sum to {total}, expected n={n}"
            )));
        }
        Ok(Self {
            n: n as u32,
            lengths,
        })
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn r(&self) -> usize {
        self.n as usize / 2
    }

    pub fn cut_count(&self) -> usize {
        self.lengths.len()
    }

    pub fn lengths(&self) -> &[u32] {
        &self.lengths
    }

    pub fn has_even_length(&self) -> bool {
        self.lengths.iter().any(|&l| l % 2 == 0)
    }
}

/// The balanced cut profile for `c` cuts: with `n = c*q + rem`, the lengths
/// are `rem` copies of `q+1` followed by `c-rem` copies of `q` — except when
/// `q` is odd and `rem = 0`, where `(q+1, q, ..., q, q-1)` is used so that
/// an even length is present and the profile stays realizable.
pub fn balanced_profile(n: usize, c: usize) -> Result<CutProfile> {
    check_binary_params(n, c)?;
    let q = (n / c) as u32;
    let rem = (n % c) as u32;
    let lengths = if q % 2 == 1 && rem == 0 {
        let mut v = Vec::with_capacity(c);
        v.push(q + 1);
        v.extend(std::iter::repeat(q).take(c - 2));
        v.push(q - 1);
        v
    } else {
        let mut v = Vec::with_capacity(c);
        v.extend(std::iter::repeat(q + 1).take(rem as usize));
        v.extend(std::iter::repeat(q).take(c - rem as usize));
        v
    };
    CutProfile::new(n, lengths)
}

/// Sum of [`psi`] over the balanced profile, in O(1) arithmetic.
pub fn balanced_profile_psi(n: u64, c: u64) -> u64 {
    let q = (n / c) as usize;
    let rem = n % c;
    if q % 2 == 1 && rem == 0 {
        psi(q + 1) + (c - 2) * psi(q) + psi(q - 1)
    } else {
        rem * psi(q + 1) + (c - rem) * psi(q)
    }
}

/// Builds a binary multipermutation whose cuts have exactly the profile's
/// lengths.  The cuts are laid out as: half of the odd lengths, one even
/// pivot, the remaining odd lengths, then the remaining even lengths —
/// which balances the two symbols.  Profiles with no even entry are not
/// realizable by any binary multipermutation.
pub fn realize_profile(profile: &CutProfile) -> Result<Multipermutation> {
    if !profile.has_even_length() {
        return Err(Error::UnrealizableProfile(profile.lengths.clone()));
    }
    let odd: Vec<u32> = profile
        .lengths
        .iter()
        .copied()
        .filter(|l| l % 2 == 1)
        .collect();
    let even: Vec<u32> = profile
        .lengths
        .iter()
        .copied()
        .filter(|l| l % 2 == 0)
        .collect();
    debug_assert!(odd.len() % 2 == 0, "even n forces an even number of odd cuts");
    let half = odd.len() / 2;
    let order: Vec<u32> = odd[..half]
        .iter()
        .chain(std::iter::once(&even[0]))
        .chain(odd[half..].iter())
        .chain(even[1..].iter())
        .copied()
        .collect();

    let mut symbols = Vec::with_capacity(profile.n());
    let mut start = 1u32;
    for &len in &order {
        for k in 0..len {
            symbols.push(if k % 2 == 0 { start } else { 3 - start });
        }
        start = *symbols.last().expect("cut is nonempty");
    }
    Multipermutation::from_symbols_with_r(symbols, profile.r())
}

/// The cut lengths of a binary multipermutation, in order of appearance.
pub fn cut_lengths(m: &Multipermutation) -> Result<Vec<u32>> {
    if m.alphabet() != 2 {
        return Err(Error::WrongRegime(format!(
            "cut decomposition needs a binary word, got {} symbols",
            m.alphabet()
        )));
    }
    Ok(maximal_alternating_runs(m.symbols())
        .iter()
        .map(|&(a, b)| (b - a + 1) as u32)
        .collect())
}

/// Standard duplication count of any binary multipermutation with `c` cuts:
/// `c(r-1) + (n-1)(r-1)`.  Depends only on the cut count.
pub fn binary_sd_size(n: usize, c: usize) -> Result<u64> {
    check_binary_params(n, c)?;
    let r = (n / 2) as u64;
    Ok((r - 1) * (c as u64 + n as u64 - 1))
}

/// Minimum alternating duplication count over all binary multipermutations
/// with exactly `c` cuts, attained by the balanced profile.
pub fn binary_min_ad_size(n: usize, c: usize) -> Result<u64> {
    check_binary_params(n, c)?;
    Ok(balanced_profile_psi(n as u64, c as u64))
}

/// The optimal number of cuts for maximizing the radius-1 sphere size.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CutCountChoice {
    pub cuts: u64,
    /// Set exactly when `r = f^2 + f` for `f = floor(sqrt(r))`; both `f` and
    /// `f + 1` cuts then yield the same maximal sphere size and `f` is
    /// reported.
    pub tie: bool,
}

/// Chooses between `floor(sqrt(r))` and `ceil(sqrt(r))` cuts in exact
/// integer arithmetic: the floor wins iff `r <= f^2 + f`.
pub fn optimal_cut_count(r: u64) -> Result<CutCountChoice> {
    if r == 0 {
        return Err(Error::InvalidParameter("r must be positive".into()));
    }
    let f = isqrt(r);
    if r <= f * f + f {
        Ok(CutCountChoice {
            cuts: f,
            tie: r == f * f + f,
        })
    } else {
        Ok(CutCountChoice {
            cuts: f + 1,
            tie: false,
        })
    }
}

/// The exact maximum radius-1 sphere size over all binary multipermutations
/// with `n = 2r`: `1 + (n-1)^2` minus the minimized duplication total
/// `c(r-1) + (n-1)(r-1) + psi(q_c)` over `c` in `{floor, ceil}(sqrt(r))`.
pub fn max_sphere_binary(r: u64) -> Result<SphereReport> {
    if r == 0 {
        return Err(Error::InvalidParameter("r must be positive".into()));
    }
    let n = 2 * r;
    let f = isqrt(r);
    let mut best: Option<(u64, u128, u128)> = None;
    for c in [f, f + 1] {
        if c == 0 || c > n - 1 {
            continue;
        }
        let sd = (r as u128 - 1) * (c as u128 + n as u128 - 1);
        let ad = balanced_profile_psi(n, c) as u128;
        let total = sd + ad;
        match best {
            Some((_, _, t)) if t <= total => {}
            _ => best = Some((c, sd, total)),
        }
    }
    let (c, sd, total) = best.expect("at least one admissible cut count");
    let t_n = translocation_count(n as usize);
    Ok(SphereReport {
        center: SphereCenter::BalancedCuts {
            n: n as usize,
            cuts: c as usize,
        },
        n: n as usize,
        r: r as usize,
        radius: 1,
        size: BigUint::from(t_n - total),
        method: SphereMethod::DuplicationFormula,
        components: Some(DuplicationBreakdown {
            translocations: t_n,
            standard: sd,
            alternating: total - sd,
        }),
    })
}

/// Real-valued upper envelope on the maximal binary radius-1 sphere size:
/// with `chat = sqrt(r)` and `n = 2r`,
/// `U(r) = 1 + (n-1)^2 - ((chat-1)(r-1) + (n-1)(r-1)
///          + (chat-1)((r/(chat+1) - 1)^2 - 1/4))`.
pub fn sphere_upper_bound(r: u64) -> Result<f64> {
    if r < 1 {
        return Err(Error::InvalidParameter("r must be positive".into()));
    }
    let rf = r as f64;
    let n = 2.0 * rf;
    let chat = rf.sqrt();
    let dup = (chat - 1.0) * (rf - 1.0)
        + (n - 1.0) * (rf - 1.0)
        + (chat - 1.0) * ((rf / (chat + 1.0) - 1.0).powi(2) - 0.25);
    Ok(1.0 + (n - 1.0).powi(2) - dup)
}

/// Real-valued lower envelope on the maximal binary radius-1 sphere size:
/// `L(r) = 1 + (n-1)^2 - ((chat+1)(r-1) + (n-1)(r-1)
///          + (chat+1)(r/(chat-1) - 1/2)^2)`.
/// Needs `r >= 2` so that `chat - 1 > 0`.
pub fn sphere_lower_bound(r: u64) -> Result<f64> {
    if r < 2 {
        return Err(Error::InvalidParameter(
            "lower envelope needs r >= 2 (sqrt(r) - 1 must be positive)".into(),
        ));
    }
    let rf = r as f64;
    let n = 2.0 * rf;
    let chat = rf.sqrt();
    let dup = (chat + 1.0) * (rf - 1.0)
        + (n - 1.0) * (rf - 1.0)
        + (chat + 1.0) * (rf / (chat - 1.0) - 0.5).powi(2);
    Ok(1.0 + (n - 1.0).powi(2) - dup)
}

/// Checks of the floor-of-half-square identities used throughout the cut
/// analysis, on a concrete pair `(a, b)` with `a - b >= 2` and `b >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FloorIdentityReport {
    /// `floor((x/2)^2)` equals `(x/2)^2` for even `x` and `(x/2)^2 - 1/4`
    /// for odd `x`, checked at `a` and `b`.
    pub half_square_ok: bool,
    /// `floor((x/2)^2) - floor(((x-1)/2)^2)` equals `x/2` (even) or
    /// `(x-1)/2` (odd), checked at `a` and `b`.
    pub difference_ok: bool,
    /// `floor(((a-2)/2)^2) + floor(((b-2)/2)^2)
    ///   >= floor(((a-3)/2)^2) + floor(((b-1)/2)^2)`:
    /// pulling two cut lengths one step closer never increases the
    /// alternating-duplication total.
    pub rebalance_holds: bool,
    /// Whether the rebalance inequality is tight on this pair.
    pub rebalance_is_equality: bool,
    /// Tightness occurs exactly when `a - b = 2` with `a` and `b` both odd.
    pub equality_condition_ok: bool,
}

impl FloorIdentityReport {
    pub fn all_ok(&self) -> bool {
        self.half_square_ok
            && self.difference_ok
            && self.rebalance_holds
            && self.equality_condition_ok
    }
}

fn floor_half_square(x: i64) -> i64 {
    (x * x) / 4
}

pub fn verify_floor_identities(a: i64, b: i64) -> Result<FloorIdentityReport> {
    if b < 1 || a - b < 2 {
        return Err(Error::InvalidParameter(format!(
            "need b >= 1 and a - b >= 2, got a={a}, b={b}"
        )));
    }
    let half_square = |x: i64| {
        if x % 2 == 0 {
            4 * floor_half_square(x) == x * x
        } else {
            4 * floor_half_square(x) == x * x - 1
        }
    };
    let difference = |x: i64| {
        let d = floor_half_square(x) - floor_half_square(x - 1);
        if x % 2 == 0 {
            d == x / 2
        } else {
            d == (x - 1) / 2
        }
    };
    let lhs = floor_half_square(a - 2) + floor_half_square(b - 2);
    let rhs = floor_half_square(a - 3) + floor_half_square(b - 1);
    let is_eq = lhs == rhs;
    Ok(FloorIdentityReport {
        half_square_ok: half_square(a) && half_square(b),
        difference_ok: difference(a) && difference(b),
        rebalance_holds: lhs >= rhs,
        rebalance_is_equality: is_eq,
        equality_condition_ok: is_eq == (a - b == 2 && a % 2 == 1 && b % 2 == 1),
    })
}

fn check_binary_params(n: usize, c: usize) -> Result<()> {
    if n == 0 || n % 2 != 0 {
        return Err(Error::InvalidParameter(format!(
            "binary words need even positive n, got {n}"
        )));
    }
    if c == 0 || c > n - 1 {
        return Err(Error::InvalidParameter(format!(
            "cut count {c} out of range 1..={}",
            n - 1
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spheres::{sphere_enumerate, sphere_size_radius_one, EnumerationCaps};

    #[test]
    fn balanced_profiles() {
        assert_eq!(balanced_profile(30, 4).unwrap().lengths(), &[8, 8, 7, 7]);
        assert_eq!(balanced_profile(34, 3).unwrap().lengths(), &[12, 11, 11]);
        assert_eq!(balanced_profile(20, 4).unwrap().lengths(), &[6, 5, 5, 4]);
        assert_eq!(balanced_profile(30, 5).unwrap().lengths(), &[6, 6, 6, 6, 6]);
        assert_eq!(balanced_profile(12, 1).unwrap().lengths(), &[12]);
        assert!(balanced_profile(30, 0).is_err());
        assert!(balanced_profile(30, 30).is_err());
        assert!(balanced_profile(7, 2).is_err());
    }

    #[test]
    fn balanced_profiles_always_realizable() {
        for n in (2..=40usize).step_by(2) {
            for c in 1..n {
                let p = balanced_profile(n, c).unwrap();
                assert!(p.has_even_length(), "n={n} c={c} profile {:?}", p.lengths());
                assert_eq!(
                    psi_sum(p.lengths()),
                    balanced_profile_psi(n as u64, c as u64),
                    "n={n} c={c}"
                );
                let m = realize_profile(&p).unwrap();
                let mut got = cut_lengths(&m).unwrap();
                let mut want = p.lengths().to_vec();
                got.sort_unstable();
                want.sort_unstable();
                assert_eq!(got, want, "n={n} c={c}");
            }
        }
    }

    #[test]
    fn realize_examples() {
        let single = CutProfile::new(6, vec![6]).unwrap();
        assert_eq!(
            realize_profile(&single).unwrap().symbols(),
            &[1, 2, 1, 2, 1, 2]
        );
        let two = CutProfile::new(12, vec![6, 6]).unwrap();
        assert_eq!(
            realize_profile(&two).unwrap().symbols(),
            &[1, 2, 1, 2, 1, 2, 2, 1, 2, 1, 2, 1]
        );
        let all_odd = CutProfile::new(6, vec![3, 3]).unwrap();
        assert!(matches!(
            realize_profile(&all_odd),
            Err(Error::UnrealizableProfile(_))
        ));
    }

    #[test]
    fn sd_formula() {
        assert_eq!(binary_sd_size(30, 4).unwrap(), 462);
        assert_eq!(binary_sd_size(34, 3).unwrap(), 576);
        // One fully alternating cut: (n-1)(r-1) + (r-1).
        for n in (4..=20usize).step_by(2) {
            let r = n / 2;
            assert_eq!(
                binary_sd_size(n, 1).unwrap(),
                ((n - 1) * (r - 1) + (r - 1)) as u64
            );
        }
        // Against the general counting rule on realized words.
        for n in (4..=16usize).step_by(2) {
            for c in 1..n {
                let m = realize_profile(&balanced_profile(n, c).unwrap()).unwrap();
                assert_eq!(
                    binary_sd_size(n, c).unwrap(),
                    crate::spheres::sd_size(&m),
                    "n={n} c={c}"
                );
            }
        }
    }

    #[test]
    fn min_ad_values() {
        assert_eq!(binary_min_ad_size(30, 4).unwrap(), 30);
        assert_eq!(binary_min_ad_size(30, 5).unwrap(), 20);
        assert_eq!(binary_min_ad_size(12, 1).unwrap(), 25);
    }

    #[test]
    fn min_ad_certified_by_exhaustive_profiles() {
        // Over every composition of n into c positive parts with an even
        // entry, the balanced profile minimizes the psi total.
        fn compositions(n: u32, c: u32) -> Vec<Vec<u32>> {
            if c == 1 {
                return vec![vec![n]];
            }
            let mut out = Vec::new();
            for first in 1..=(n - c + 1) {
                for mut rest in compositions(n - first, c - 1) {
                    rest.insert(0, first);
                    out.push(rest);
                }
            }
            out
        }
        for n in (4..=16u32).step_by(2) {
            for c in 1..n {
                let best = compositions(n, c)
                    .into_iter()
                    .filter(|comp| comp.iter().any(|&l| l % 2 == 0))
                    .map(|comp| psi_sum(&comp))
                    .min();
                if let Some(best) = best {
                    assert_eq!(
                        binary_min_ad_size(n as usize, c as usize).unwrap(),
                        best,
                        "n={n} c={c}"
                    );
                }
            }
        }
    }

    #[test]
    fn optimal_cut_counts() {
        assert_eq!(
            optimal_cut_count(11).unwrap(),
            CutCountChoice { cuts: 3, tie: false }
        );
        for r in 13..=16u64 {
            assert_eq!(optimal_cut_count(r).unwrap().cuts, 4, "r={r}");
        }
        assert_eq!(
            optimal_cut_count(12).unwrap(),
            CutCountChoice { cuts: 3, tie: true }
        );
        for r in 9..=12u64 {
            assert_eq!(optimal_cut_count(r).unwrap().cuts, 3, "r={r}");
        }
    }

    #[test]
    fn tie_means_equal_totals() {
        for f in 1..=40u64 {
            let r = f * f + f;
            let n = 2 * r;
            let total = |c: u64| {
                (r as u128 - 1) * (c as u128 + n as u128 - 1)
                    + balanced_profile_psi(n, c) as u128
            };
            assert_eq!(total(f), total(f + 1), "r={r}");
            assert!(optimal_cut_count(r).unwrap().tie);
        }
    }

    #[test]
    fn max_sphere_values() {
        assert_eq!(max_sphere_binary(10).unwrap().size, BigUint::from(148u32));
        assert_eq!(
            max_sphere_binary(100).unwrap().size,
            BigUint::from(18_101u32)
        );
        assert_eq!(
            max_sphere_binary(1000).unwrap().size,
            BigUint::from(1_937_753u32)
        );
        let rep = max_sphere_binary(15).unwrap();
        let comp = rep.components.unwrap();
        // n=30, c=4: 462 standard + 30 alternating.
        assert_eq!(comp.standard, 462);
        assert_eq!(comp.alternating, 30);
        assert_eq!(rep.size, BigUint::from(1u32 + 29 * 29 - 492));
    }

    #[test]
    fn max_sphere_certified_exhaustively_small() {
        // Up to n = 12 in the unit test (n <= 16 runs in the acceptance
        // suite): the formula equals the true maximum over every binary
        // multipermutation.
        let caps = EnumerationCaps::default();
        for r in 1..=6u64 {
            let n = (2 * r) as usize;
            let best_true = crate::perm::all_multipermutations(n, r as usize)
                .unwrap()
                .iter()
                .map(|m| sphere_enumerate(m, 1, &caps).unwrap().len())
                .max()
                .unwrap();
            assert_eq!(
                max_sphere_binary(r).unwrap().size,
                BigUint::from(best_true),
                "r={r}"
            );
        }
    }

    #[test]
    fn realized_optimum_attains_the_maximum() {
        for r in [10u64, 15, 100] {
            let rep = max_sphere_binary(r).unwrap();
            let cuts = match rep.center {
                SphereCenter::BalancedCuts { cuts, .. } => cuts,
                _ => unreachable!(),
            };
            let center =
                realize_profile(&balanced_profile(2 * r as usize, cuts).unwrap()).unwrap();
            assert_eq!(sphere_size_radius_one(&center).size, rep.size, "r={r}");
            assert_eq!(cuts as u64, optimal_cut_count(r).unwrap().cuts, "r={r}");
        }
    }

    #[test]
    fn envelopes_bracket_the_maximum() {
        for r in [2u64, 5, 10, 100, 1000, 1999] {
            let max: f64 = max_sphere_binary(r).unwrap().size.to_string().parse().unwrap();
            let u = sphere_upper_bound(r).unwrap();
            let l = sphere_lower_bound(r).unwrap();
            assert!(l < max, "L({r}) = {l} !< {max}");
            assert!(max < u, "max({r}) = {max} !< {u}");
        }
        assert!(sphere_lower_bound(1).is_err());
    }

    #[test]
    fn envelope_table_values() {
        assert_eq!(sphere_upper_bound(10).unwrap().round(), 168.0);
        assert_eq!(sphere_upper_bound(100).unwrap().round(), 18_423.0);
        assert_eq!(sphere_upper_bound(1000).unwrap().round(), 1_941_489.0);
    }

    #[test]
    fn floor_identities() {
        for a in [4i64, 6, 8, 10] {
            let rep = verify_floor_identities(a, a - 2).unwrap();
            assert!(rep.all_ok());
            assert!(!rep.rebalance_is_equality, "even pair a={a}");
        }
        let odd_pair = verify_floor_identities(7, 5).unwrap();
        assert!(odd_pair.all_ok());
        assert!(odd_pair.rebalance_is_equality);
        let wide = verify_floor_identities(9, 3).unwrap();
        assert!(wide.all_ok());
        assert!(!wide.rebalance_is_equality);
        assert!(verify_floor_identities(5, 4).is_err());
        assert!(verify_floor_identities(3, 0).is_err());
        // Sweep all hypotheses in a small box.
        for b in 1..=30i64 {
            for a in (b + 2)..=40 {
                assert!(verify_floor_identities(a, b).unwrap().all_ok(), "a={a} b={b}");
            }
        }
    }

    #[test]
    fn cut_count_tracks_adjacent_repeats() {
        for n in (4..=14usize).step_by(2) {
            for c in 1..n {
                let m = realize_profile(&balanced_profile(n, c).unwrap()).unwrap();
                let repeats = (1..n)
                    .filter(|&i| m.symbols()[i] == m.symbols()[i - 1])
                    .count();
                assert_eq!(repeats + 1, c, "n={n} c={c}");
            }
        }
    }
}
