//! Permutations, r-regular multipermutations, translocations, and the
//! Ulam distance.
//!
//! A permutation is written as its image sequence `[s(1), ..., s(n)]` and a
//! multipermutation as a tuple over `1..=n/r` in which every symbol occurs
//! exactly `r` times.  All values crossing the API boundary are 1-based.
//! Every type here is immutable after construction and all operations are
//! pure, so everything is safe to share across threads.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Default size cap for the breadth-first translocation-count oracle.
pub const DEFAULT_BFS_CAP: usize = 8;

/// Default cap on the number of permutations an equivalence class may hold
/// before [`equivalence_class`] refuses to enumerate it.
pub const DEFAULT_CLASS_CAP: usize = 1_000_000;

/// A permutation of `1..=n`, stored as its image sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    /// The identity permutation `[1, 2, ..., n]`.
    pub fn identity(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("n must be positive".into()));
        }
        Ok(Self {
            images: (1..=n as u32).collect(),
        })
    }

    /// The reversal `[n, n-1, ..., 1]`, the unique permutation at maximal
    /// Ulam distance `n-1` from the identity.
    pub fn reversal(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("n must be positive".into()));
        }
        Ok(Self {
            images: (1..=n as u32).rev().collect(),
        })
    }

    /// The block-interleaving permutation: position `i` maps to
    /// `((i-1) mod (n/r)) * r + ceil(i*r/n)`.  Its projection by `r` cycles
    /// through all `n/r` symbols with period `n/r`; for `n/r > 2` that
    /// projection attains the maximal radius-1 sphere size.
    pub fn interleaving(n: usize, r: usize) -> Result<Self> {
        check_divides(n, r)?;
        let k = n / r;
        let images = (1..=n)
            .map(|i| (((i - 1) % k) * r + (i * r).div_ceil(n)) as u32)
            .collect();
        Ok(Self { images })
    }

    /// Builds a permutation from a 1-based image sequence, validating that it
    /// is a bijection on `1..=n`.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::InvalidPermutation {
                n,
                reason: "empty sequence".into(),
            });
        }
        let mut seen = vec![false; n];
        for &v in &images {
            if v == 0 || v as usize > n {
                return Err(Error::InvalidPermutation {
                    n,
                    reason: format!("value {v} outside 1..={n}"),
                });
            }
            if seen[v as usize - 1] {
                return Err(Error::InvalidPermutation {
                    n,
                    reason: format!("value {v} repeated"),
                });
            }
            seen[v as usize - 1] = true;
        }
        Ok(Self { images })
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// Image of `i` (1-based).
    pub fn image(&self, i: usize) -> u32 {
        self.images[i - 1]
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// Composition `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.n() != other.n() {
            return Err(Error::LengthMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        let images = other
            .images
            .iter()
            .map(|&v| self.images[v as usize - 1])
            .collect();
        Ok(Permutation { images })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.n()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v as usize - 1] = i as u32 + 1;
        }
        Permutation { images }
    }

    /// Projects onto the r-regular multipermutation whose i-th symbol is the
    /// block index `j` with `(j-1)r + 1 <= self(i) <= jr`.
    pub fn project(&self, r: usize) -> Result<Multipermutation> {
        check_divides(self.n(), r)?;
        let symbols = self
            .images
            .iter()
            .map(|&v| ((v as usize - 1) / r + 1) as u32)
            .collect();
        Ok(Multipermutation {
            symbols,
            r: r as u32,
        })
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_seq(f, &self.images)
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Permutation::from_images(parse_sequence(s)?)
    }
}

/// An r-regular multipermutation: a length-n tuple over `1..=n/r` in which
/// every symbol occurs exactly `r` times.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multipermutation {
    symbols: Vec<u32>,
    r: u32,
}

impl Multipermutation {
    /// Validates r-regularity and infers `r`: the symbols must be exactly
    /// `1..=k`, each occurring the same number of times.
    pub fn from_symbols(symbols: Vec<u32>) -> Result<Self> {
        let n = symbols.len();
        if n == 0 {
            return Err(Error::InvalidMultipermutation("empty sequence".into()));
        }
        let k = *symbols.iter().max().unwrap() as usize;
        if n % k != 0 {
            return Err(Error::InvalidMultipermutation(format!(
                "largest symbol {k} does not divide length {n}"
            )));
        }
        let r = n / k;
        let mut counts = vec![0usize; k];
        for &s in &symbols {
            if s == 0 {
                return Err(Error::InvalidMultipermutation("symbol 0 present".into()));
            }
            counts[s as usize - 1] += 1;
        }
        if counts.iter().any(|&c| c != r) {
            return Err(Error::InvalidMultipermutation(format!(
                "symbol counts {counts:?} are not all equal"
            )));
        }
        Ok(Self {
            symbols,
            r: r as u32,
        })
    }

    /// Same as [`from_symbols`](Self::from_symbols) but also checks the
    /// inferred regularity against an expected one.
    pub fn from_symbols_with_r(symbols: Vec<u32>, r: usize) -> Result<Self> {
        let m = Self::from_symbols(symbols)?;
        if m.r() != r {
            return Err(Error::RegularityMismatch { left: m.r(), right: r });
        }
        Ok(m)
    }

    /// The projection of the identity: `(1,...,1,2,...,2,...)`, each symbol
    /// `r` times in sorted order.  This center minimizes the radius-1 sphere.
    pub fn sorted(n: usize, r: usize) -> Result<Self> {
        check_divides(n, r)?;
        let symbols = (1..=(n / r) as u32)
            .flat_map(|j| std::iter::repeat(j).take(r))
            .collect();
        Ok(Self { symbols, r: r as u32 })
    }

    /// The cycling tuple `(1,2,...,k,1,2,...,k,...)` with `k = n/r`, the
    /// projection of [`Permutation::interleaving`].
    pub fn cyclic(n: usize, r: usize) -> Result<Self> {
        check_divides(n, r)?;
        let k = (n / r) as u32;
        let symbols = (0..n).map(|i| (i as u32 % k) + 1).collect();
        Ok(Self { symbols, r: r as u32 })
    }

    pub fn n(&self) -> usize {
        self.symbols.len()
    }

    pub fn r(&self) -> usize {
        self.r as usize
    }

    /// Number of distinct symbols, `n/r`.
    pub fn alphabet(&self) -> usize {
        self.n() / self.r()
    }

    /// Symbol at 1-based position `i`.
    pub fn symbol(&self, i: usize) -> u32 {
        self.symbols[i - 1]
    }

    pub fn symbols(&self) -> &[u32] {
        &self.symbols
    }

    /// Right action by a translocation: delete the symbol at position `i`
    /// and reinsert it at position `j`.  Well-defined on projection classes:
    /// acting on the projection equals projecting the composed permutation.
    pub fn act(&self, phi: &Translocation) -> Result<Multipermutation> {
        if phi.n() != self.n() {
            return Err(Error::LengthMismatch {
                left: self.n(),
                right: phi.n(),
            });
        }
        let mut symbols = self.symbols.clone();
        let moved = symbols.remove(phi.source() - 1);
        symbols.insert(phi.target() - 1, moved);
        Ok(Multipermutation { symbols, r: self.r })
    }

    /// Right action by an arbitrary permutation: position `i` of the result
    /// holds the symbol at position `pi(i)`.
    pub fn apply(&self, pi: &Permutation) -> Result<Multipermutation> {
        if pi.n() != self.n() {
            return Err(Error::LengthMismatch {
                left: self.n(),
                right: pi.n(),
            });
        }
        let symbols = pi
            .images()
            .iter()
            .map(|&v| self.symbols[v as usize - 1])
            .collect();
        Ok(Multipermutation { symbols, r: self.r })
    }
}

impl fmt::Display for Multipermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_seq(f, &self.symbols)
    }
}

impl FromStr for Multipermutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Multipermutation::from_symbols(parse_sequence(s)?)
    }
}

/// The delete/insert operation on positions `(i, j)` of a length-n sequence:
/// remove the entry at position `i` and reinsert it at position `j`.
/// `i = j` is the identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Translocation {
    source: u32,
    target: u32,
    n: u32,
}

impl Translocation {
    pub fn new(n: usize, i: usize, j: usize) -> Result<Self> {
        for idx in [i, j] {
            if idx == 0 || idx > n {
                return Err(Error::IndexOutOfRange { index: idx, n });
            }
        }
        Ok(Self {
            source: i as u32,
            target: j as u32,
            n: n as u32,
        })
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn source(&self) -> usize {
        self.source as usize
    }

    pub fn target(&self) -> usize {
        self.target as usize
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target
    }

    /// The permutation realizing this delete/insert when composed on the
    /// right: for `i < j` it is `[1,..,i-1, i+1,..,j, i, j+1,..,n]` and for
    /// `i > j` it is `[1,..,j-1, i, j,..,i-1, i+1,..,n]`.
    pub fn as_permutation(&self) -> Permutation {
        let (n, i, j) = (self.n as usize, self.source as usize, self.target as usize);
        let mut images = Vec::with_capacity(n);
        if i <= j {
            images.extend(1..i as u32);
            images.extend(i as u32 + 1..=j as u32);
            images.push(i as u32);
            images.extend(j as u32 + 1..=n as u32);
        } else {
            images.extend(1..j as u32);
            images.push(i as u32);
            images.extend(j as u32..i as u32);
            images.extend(i as u32 + 1..=n as u32);
        }
        Permutation { images }
    }
}

/// Convenience constructor mirroring [`Translocation::as_permutation`].
pub fn translocation_perm(n: usize, i: usize, j: usize) -> Result<Permutation> {
    Ok(Translocation::new(n, i, j)?.as_permutation())
}

/// Length of the longest common subsequence of two integer sequences,
/// by the standard quadratic dynamic program (correct with repeated values).
pub fn lcs_length(x: &[u32], y: &[u32]) -> usize {
    if x.is_empty() || y.is_empty() {
        return 0;
    }
    let mut prev = vec![0usize; y.len() + 1];
    let mut cur = vec![0usize; y.len() + 1];
    for &xv in x {
        for (j, &yv) in y.iter().enumerate() {
            cur[j + 1] = if xv == yv {
                prev[j] + 1
            } else {
                cur[j].max(prev[j + 1])
            };
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    prev[y.len()]
}

/// The Ulam distance between two r-regular multipermutations:
/// `n` minus the length of their longest common subsequence.  Equals the
/// minimum number of translocations transforming one into the other.
pub fn ulam_distance(x: &Multipermutation, y: &Multipermutation) -> Result<usize> {
    if x.n() != y.n() {
        return Err(Error::LengthMismatch {
            left: x.n(),
            right: y.n(),
        });
    }
    if x.r() != y.r() {
        return Err(Error::RegularityMismatch {
            left: x.r(),
            right: y.r(),
        });
    }
    Ok(x.n() - lcs_length(x.symbols(), y.symbols()))
}

/// Ulam distance between two permutations (the 1-regular case).
pub fn ulam_distance_perms(x: &Permutation, y: &Permutation) -> Result<usize> {
    if x.n() != y.n() {
        return Err(Error::LengthMismatch {
            left: x.n(),
            right: y.n(),
        });
    }
    Ok(x.n() - lcs_length(x.images(), y.images()))
}

/// Breadth-first search for the minimum number of translocations taking `x`
/// to `y`.  This is an oracle for [`ulam_distance`], not a production path;
/// it refuses instances with `n > cap`.
pub fn min_translocation_count(
    x: &Multipermutation,
    y: &Multipermutation,
    cap: usize,
) -> Result<usize> {
    if x.n() != y.n() {
        return Err(Error::LengthMismatch {
            left: x.n(),
            right: y.n(),
        });
    }
    if x.r() != y.r() {
        return Err(Error::RegularityMismatch {
            left: x.r(),
            right: y.r(),
        });
    }
    let n = x.n();
    if n > cap {
        return Err(Error::CapExceeded {
            what: "translocation-count search",
            size: n,
            cap,
        });
    }
    if x == y {
        return Ok(0);
    }
    let moves: Vec<Translocation> = (1..=n)
        .flat_map(|i| (1..=n).map(move |j| (i, j)))
        .filter(|&(i, j)| i != j)
        .map(|(i, j)| Translocation::new(n, i, j).expect("in range"))
        .collect();
    let mut dist: HashMap<Multipermutation, usize> = HashMap::new();
    dist.insert(x.clone(), 0);
    let mut queue = VecDeque::new();
    queue.push_back(x.clone());
    while let Some(cur) = queue.pop_front() {
        let d = dist[&cur];
        for phi in &moves {
            let next = cur.act(phi).expect("same n");
            if next == *y {
                return Ok(d + 1);
            }
            if !dist.contains_key(&next) {
                dist.insert(next.clone(), d + 1);
                queue.push_back(next);
            }
        }
    }
    unreachable!("the translocation action is transitive on multipermutations")
}

/// All permutations projecting to the same multipermutation as `sigma`:
/// within each symbol block the `r` values may be arranged freely, so the
/// class has `(r!)^(n/r)` members.  Fails if that count exceeds `cap`.
pub fn equivalence_class(
    sigma: &Permutation,
    r: usize,
    cap: usize,
) -> Result<Vec<Permutation>> {
    check_divides(sigma.n(), r)?;
    let n = sigma.n();
    let k = n / r;
    let mut size: usize = 1;
    let r_fact: usize = (1..=r).product();
    for _ in 0..k {
        size = size.checked_mul(r_fact).ok_or(Error::CapExceeded {
            what: "equivalence-class enumeration",
            size: usize::MAX,
            cap,
        })?;
        if size > cap {
            return Err(Error::CapExceeded {
                what: "equivalence-class enumeration",
                size,
                cap,
            });
        }
    }

    // positions[j] lists the 1-based positions holding symbols of block j+1.
    let m = sigma.project(r)?;
    let mut positions: Vec<Vec<usize>> = vec![Vec::new(); k];
    for i in 1..=n {
        positions[m.symbol(i) as usize - 1].push(i);
    }
    let block_orders: Vec<Vec<Vec<u32>>> = (0..k)
        .map(|j| {
            let vals: Vec<u32> = ((j * r + 1) as u32..=((j + 1) * r) as u32).collect();
            permutations_of(&vals)
        })
        .collect();

    let mut out = Vec::with_capacity(size);
    let mut odometer = vec![0usize; k];
    loop {
        let mut images = vec![0u32; n];
        for j in 0..k {
            let order = &block_orders[j][odometer[j]];
            for (slot, &pos) in positions[j].iter().enumerate() {
                images[pos - 1] = order[slot];
            }
        }
        out.push(Permutation { images });
        let mut carry = k;
        for j in 0..k {
            odometer[j] += 1;
            if odometer[j] < block_orders[j].len() {
                carry = j;
                break;
            }
            odometer[j] = 0;
        }
        if carry == k {
            break;
        }
    }
    Ok(out)
}

fn permutations_of(vals: &[u32]) -> Vec<Vec<u32>> {
    if vals.len() <= 1 {
        return vec![vals.to_vec()];
    }
    let mut out = Vec::new();
    for (i, &v) in vals.iter().enumerate() {
        let mut rest = vals.to_vec();
        rest.remove(i);
        for mut tail in permutations_of(&rest) {
            tail.insert(0, v);
            out.push(tail);
        }
    }
    out
}

/// Iterator over all r-regular multipermutations of length `n` in
/// lexicographic order, starting from the sorted tuple.
///
/// Uses the standard next-permutation step on the underlying multiset, so
/// each element is produced exactly once.
pub struct MultisetPermutations {
    next: Option<Multipermutation>,
}

impl MultisetPermutations {
    pub fn new(n: usize, r: usize) -> Result<Self> {
        Ok(Self {
            next: Some(Multipermutation::sorted(n, r)?),
        })
    }
}

impl Iterator for MultisetPermutations {
    type Item = Multipermutation;

    fn next(&mut self) -> Option<Multipermutation> {
        let cur = self.next.take()?;
        let mut s = cur.symbols.clone();
        // Find the longest non-increasing suffix; the element before it is
        // the pivot to bump.
        let n = s.len();
        let mut i = n - 1;
        while i > 0 && s[i - 1] >= s[i] {
            i -= 1;
        }
        if i > 0 {
            let mut j = n - 1;
            while s[j] <= s[i - 1] {
                j -= 1;
            }
            s.swap(i - 1, j);
            s[i..].reverse();
            self.next = Some(Multipermutation { symbols: s, r: cur.r });
        }
        Some(cur)
    }
}

/// Collects the whole space of r-regular multipermutations of length `n`,
/// in lexicographic order.
pub fn all_multipermutations(n: usize, r: usize) -> Result<Vec<Multipermutation>> {
    Ok(MultisetPermutations::new(n, r)?.collect())
}

/// Parses a whitespace- or comma-separated list of 1-based integers.
pub fn parse_sequence(s: &str) -> Result<Vec<u32>> {
    let cleaned = s.replace(',', " ");
    let vals: Vec<u32> = cleaned
        .split_whitespace()
        .map(|tok| {
            tok.parse::<u32>()
                .map_err(|_| Error::Parse(format!("cannot read `{tok}` as a positive integer")))
        })
        .collect::<Result<_>>()?;
    if vals.is_empty() {
        return Err(Error::Parse("empty sequence".into()));
    }
    Ok(vals)
}

fn write_seq(f: &mut fmt::Formatter<'_>, seq: &[u32]) -> fmt::Result {
    for (i, v) in seq.iter().enumerate() {
        if i > 0 {
            write!(f, " ")?;
        }
        write!(f, "{v}")?;
    }
    Ok(())
}

pub(crate) fn check_divides(n: usize, r: usize) -> Result<()> {
    if n == 0 || r == 0 {
        return Err(Error::InvalidParameter(
            "n and r must be positive".into(),
        ));
    }
    if n % r != 0 {
        return Err(Error::NotDivisible { n, r });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn mperm(s: &str) -> Multipermutation {
        s.parse().unwrap()
    }

    #[test]
    fn identity_basics() {
        assert_eq!(Permutation::identity(3).unwrap().images(), &[1, 2, 3]);
        assert_eq!(Permutation::identity(1).unwrap().images(), &[1]);
        assert!(Permutation::identity(0).is_err());
    }

    #[test]
    fn compose_matches_worked_product() {
        let a = perm("2 1 5 4 3");
        let b = perm("5 1 4 2 3");
        assert_eq!(a.compose(&b).unwrap(), perm("3 2 4 1 5"));
    }

    #[test]
    fn compose_identity_and_inverse() {
        let e = Permutation::identity(5).unwrap();
        let s = perm("4 2 5 1 3");
        assert_eq!(s.compose(&e).unwrap(), s);
        assert_eq!(e.compose(&s).unwrap(), s);
        assert_eq!(s.compose(&s.inverse()).unwrap(), e);
        assert_eq!(s.inverse().compose(&s).unwrap(), e);
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_images(vec![1, 1, 3]).is_err());
        assert!(Permutation::from_images(vec![1, 4, 2]).is_err());
        assert!(Permutation::from_images(vec![0, 1]).is_err());
    }

    #[test]
    fn translocation_moves_one_entry() {
        let sigma = perm("6 2 8 5 4 1 3 9 7");
        let fwd = translocation_perm(9, 1, 9).unwrap();
        assert_eq!(sigma.compose(&fwd).unwrap(), perm("2 8 5 4 1 3 9 7 6"));
        let back = translocation_perm(9, 7, 4).unwrap();
        assert_eq!(sigma.compose(&back).unwrap(), perm("6 2 8 3 5 4 1 9 7"));
        assert_eq!(
            translocation_perm(5, 3, 3).unwrap(),
            Permutation::identity(5).unwrap()
        );
        assert!(translocation_perm(5, 0, 3).is_err());
        assert!(translocation_perm(5, 2, 6).is_err());
    }

    #[test]
    fn projection_blocks() {
        assert_eq!(
            perm("1 5 2 4 3 6").project(2).unwrap(),
            mperm("1 3 1 2 2 3")
        );
        assert_eq!(
            perm("6 2 8 5 4 1 3 9 7").project(3).unwrap(),
            mperm("2 1 3 2 2 1 1 3 3")
        );
        let s = perm("4 2 5 1 3");
        assert_eq!(s.project(1).unwrap().symbols(), s.images());
        assert!(perm("1 2 3").project(2).is_err());
    }

    #[test]
    fn action_by_translocation() {
        let m = mperm("2 1 3 2 2 1 1 3 3");
        let t1 = Translocation::new(9, 1, 9).unwrap();
        assert_eq!(m.act(&t1).unwrap(), mperm("1 3 2 2 1 1 3 3 2"));
        let t2 = Translocation::new(9, 7, 4).unwrap();
        assert_eq!(m.act(&t2).unwrap(), mperm("2 1 3 1 2 2 1 3 3"));
        let id = Translocation::new(9, 5, 5).unwrap();
        assert_eq!(m.act(&id).unwrap(), m);
    }

    #[test]
    fn action_well_defined_on_classes() {
        // Acting on the projection agrees with projecting the composition,
        // exhaustively for n <= 6 over all divisors r and all translocations.
        for n in 2..=6usize {
            for sigma in all_perms(n) {
                for r in (1..=n).filter(|r| n % r == 0) {
                    let m = sigma.project(r).unwrap();
                    for i in 1..=n {
                        for j in 1..=n {
                            let phi = Translocation::new(n, i, j).unwrap();
                            let via_action = m.act(&phi).unwrap();
                            let via_compose = sigma
                                .compose(&phi.as_permutation())
                                .unwrap()
                                .project(r)
                                .unwrap();
                            assert_eq!(via_action, via_compose);
                        }
                    }
                }
            }
        }
    }

    fn all_perms(n: usize) -> Vec<Permutation> {
        let vals: Vec<u32> = (1..=n as u32).collect();
        permutations_of(&vals)
            .into_iter()
            .map(|v| Permutation::from_images(v).unwrap())
            .collect()
    }

    #[test]
    fn adjacent_swap_redundancy() {
        // Deleting at i and inserting at i-1 equals deleting at i-1 and
        // inserting at i.
        let m = mperm("1 2 2 4 2 4 3 1 3");
        for i in 2..=9 {
            let a = Translocation::new(9, i, i - 1).unwrap();
            let b = Translocation::new(9, i - 1, i).unwrap();
            assert_eq!(m.act(&a).unwrap(), m.act(&b).unwrap());
        }
    }

    #[test]
    fn lcs_examples() {
        assert_eq!(lcs_length(&[3, 1, 2, 1, 2, 3], &[1, 1, 2, 2, 3, 3]), 4);
        assert_eq!(lcs_length(&[1, 2, 3], &[1, 2, 3]), 3);
        assert_eq!(lcs_length(&[1, 2, 3], &[3, 2, 1]), 1);
        assert_eq!(lcs_length(&[], &[1]), 0);
    }

    #[test]
    fn distance_examples() {
        for n in 2..=7 {
            let e = Permutation::identity(n).unwrap();
            let w = Permutation::reversal(n).unwrap();
            assert_eq!(ulam_distance_perms(&e, &w).unwrap(), n - 1);
        }
        let m = mperm("1 3 1 2 2 3");
        assert_eq!(ulam_distance(&m, &m).unwrap(), 0);
        for i in 1..=6 {
            for j in 1..=6 {
                let phi = Translocation::new(6, i, j).unwrap();
                assert!(ulam_distance(&m, &m.act(&phi).unwrap()).unwrap() <= 1);
            }
        }
    }

    #[test]
    fn distance_parameter_mismatch() {
        let a = mperm("1 1 2 2");
        let b = mperm("1 2 1 2 1 2");
        assert!(ulam_distance(&a, &b).is_err());
        let c = mperm("1 2 3 4");
        let d = mperm("1 1 2 2");
        assert!(ulam_distance(&c, &d).is_err());
    }

    #[test]
    fn bfs_matches_distance_small() {
        let m = mperm("1 2 1 2");
        assert_eq!(min_translocation_count(&m, &m, DEFAULT_BFS_CAP).unwrap(), 0);
        let phi = Translocation::new(4, 1, 4).unwrap();
        let shifted = m.act(&phi).unwrap();
        assert_eq!(
            min_translocation_count(&m, &shifted, DEFAULT_BFS_CAP).unwrap(),
            1
        );
        let big = Multipermutation::sorted(12, 2).unwrap();
        assert!(matches!(
            min_translocation_count(&big, &big, DEFAULT_BFS_CAP),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn bfs_equals_lcs_distance_exhaustively() {
        // Every pair of multipermutations over small spaces: the search
        // oracle agrees with the subsequence formula.
        for (n, r) in [(4usize, 1usize), (4, 2), (5, 1), (6, 3)] {
            let space = all_multipermutations(n, r).unwrap();
            for x in &space {
                for y in &space {
                    assert_eq!(
                        min_translocation_count(x, y, DEFAULT_BFS_CAP).unwrap(),
                        ulam_distance(x, y).unwrap(),
                        "n={n} r={r} x={x} y={y}"
                    );
                }
            }
        }
    }

    #[test]
    fn equivalence_class_sizes() {
        let s = perm("3 1 4 2");
        assert_eq!(equivalence_class(&s, 1, 10).unwrap(), vec![s.clone()]);
        let class = equivalence_class(&s, 2, 100).unwrap();
        assert_eq!(class.len(), 4);
        for p in &class {
            assert_eq!(p.project(2).unwrap(), s.project(2).unwrap());
        }
        assert!(matches!(
            equivalence_class(&perm("1 2 3 4 5 6 7 8"), 4, 100),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn class_minimum_matches_multiperm_distance() {
        // The distance between projections equals the minimum permutation
        // distance over the two equivalence classes.
        for (n, r) in [(4usize, 2usize), (6, 2), (6, 3)] {
            let sigma = Permutation::reversal(n).unwrap();
            let pi = Permutation::interleaving(n, r).unwrap();
            let ms = sigma.project(r).unwrap();
            let mp = pi.project(r).unwrap();
            let direct = ulam_distance(&ms, &mp).unwrap();
            let class_min = equivalence_class(&sigma, r, 100_000)
                .unwrap()
                .iter()
                .flat_map(|s| {
                    equivalence_class(&pi, r, 100_000)
                        .unwrap()
                        .into_iter()
                        .map(move |p| ulam_distance_perms(s, &p).unwrap())
                })
                .min()
                .unwrap();
            assert_eq!(direct, class_min, "n={n} r={r}");
        }
    }

    #[test]
    fn interleaving_example() {
        let w = Permutation::interleaving(12, 3).unwrap();
        assert_eq!(w.images(), &[1, 4, 7, 10, 2, 5, 8, 11, 3, 6, 9, 12]);
        assert_eq!(
            w.project(3).unwrap(),
            Multipermutation::cyclic(12, 3).unwrap()
        );
    }

    #[test]
    fn multiset_permutations_cover_space() {
        // n=6, r=2: 6!/(2!)^3 = 90 tuples, strictly increasing lexicographically.
        let all = all_multipermutations(6, 2).unwrap();
        assert_eq!(all.len(), 90);
        assert_eq!(all[0], Multipermutation::sorted(6, 2).unwrap());
        for w in all.windows(2) {
            assert!(w[0].symbols() < w[1].symbols());
        }
        assert_eq!(all_multipermutations(4, 1).unwrap().len(), 24);
        assert_eq!(all_multipermutations(8, 4).unwrap().len(), 70);
        assert_eq!(all_multipermutations(3, 3).unwrap().len(), 1);
    }

    #[test]
    fn parse_roundtrip() {
        let p = perm("6 2 8 5 4 1 3 9 7");
        assert_eq!(p.to_string().parse::<Permutation>().unwrap(), p);
        let m = mperm("2 1 3 2 2 1 1 3 3");
        assert_eq!(m.to_string().parse::<Multipermutation>().unwrap(), m);
        assert!("1 2 x".parse::<Permutation>().is_err());
        assert!("".parse::<Multipermutation>().is_err());
        assert!("1 1 2".parse::<Multipermutation>().is_err());
    }
}
