//! Integer partitions, Young diagrams, and tableau counting.
//!
//! Provides the hook-length count of standard Young tableaux, the number of
//! semistandard tableaux with rectangular content (each symbol exactly `r`
//! times), and RSK row insertion for multipermutations.  All counts are
//! exact big integers.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numeric::factorial;
use crate::perm::Multipermutation;

/// A partition of `n`: weakly decreasing positive parts summing to `n`.
/// Serializes as comma-separated parts, e.g. `4,3,3,2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidParameter("partition has no parts".into()));
        }
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(Error::InvalidParameter(format!(
                    "parts {parts:?} are not weakly decreasing"
                )));
            }
        }
        if parts.last() == Some(&0) {
            return Err(Error::InvalidParameter("zero part".into()));
        }
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Total number of cells, the `n` being partitioned.
    pub fn n(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    /// The first (longest) part.
    pub fn first_part(&self) -> usize {
        self.parts[0] as usize
    }

    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    /// Whether 1-based cell `(i, j)` lies in the diagram.
    pub fn contains(&self, i: usize, j: usize) -> bool {
        i >= 1 && j >= 1 && i <= self.rows() && j <= self.parts[i - 1] as usize
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<u32> = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("cannot read `{tok}` as a part")))
            })
            .collect::<Result<_>>()?;
        Partition::new(parts)
    }
}

/// Iterates every partition of `n` whose first part is at least `min_first`,
/// in reverse-lexicographic order (so `(n)` comes first and first parts are
/// non-increasing along the stream).
///
/// The iteration stops as soon as the first part drops below `min_first`,
/// so asking for a large `min_first` never enumerates the full partition
/// list of `n`.
pub fn partitions_first_part_at_least(n: usize, min_first: usize) -> PartitionIter {
    PartitionIter {
        current: if n == 0 {
            None
        } else {
            Some(vec![n as u32])
        },
        min_first: min_first as u32,
    }
}

pub struct PartitionIter {
    current: Option<Vec<u32>>,
    min_first: u32,
}

impl Iterator for PartitionIter {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let cur = self.current.take()?;
        if cur[0] < self.min_first.max(1) {
            return None;
        }
        // Reverse-lexicographic successor: shrink the rightmost part
        // exceeding 1 and refill the freed cells greedily.
        if let Some(k) = cur.iter().rposition(|&p| p > 1) {
            let mut next = cur.clone();
            let mut rem: u32 = next[k..].iter().sum();
            let d = next[k] - 1;
            next.truncate(k);
            while rem > 0 {
                let take = d.min(rem);
                next.push(take);
                rem -= take;
            }
            self.current = Some(next);
        }
        Some(Partition { parts: cur })
    }
}

/// Hook length of cell `(i, j)`: the number of cells directly below or to
/// the right, counting the cell itself.
pub fn hook_length(lambda: &Partition, i: usize, j: usize) -> Result<usize> {
    if !lambda.contains(i, j) {
        return Err(Error::InvalidParameter(format!(
            "cell ({i},{j}) outside diagram {lambda}"
        )));
    }
    let arm = lambda.parts()[i - 1] as usize - j;
    let leg = lambda.parts()[i..]
        .iter()
        .take_while(|&&p| p as usize >= j)
        .count();
    Ok(arm + leg + 1)
}

/// Number of standard Young tableaux of shape `lambda`, by the hook-length
/// formula `n! / prod h(i,j)`.
pub fn count_syt(lambda: &Partition) -> BigUint {
    let n = lambda.n();
    let mut hooks = BigUint::one();
    for i in 1..=lambda.rows() {
        for j in 1..=lambda.parts()[i - 1] as usize {
            hooks *= BigUint::from(hook_length(lambda, i, j).expect("cell in diagram"));
        }
    }
    factorial(n) / hooks
}

/// Number of Young tableaux of shape `lambda` in which each symbol
/// `1..=n/r` appears exactly `r` times (a Kostka number with rectangular
/// content).  Computed by peeling one horizontal strip of size `r` per
/// symbol, largest symbol first, memoizing on the intermediate shape.
pub fn count_content_r(lambda: &Partition, r: usize) -> Result<BigUint> {
    let n = lambda.n();
    crate::perm::check_divides(n, r)?;
    let mut memo: HashMap<Vec<u32>, BigUint> = HashMap::new();
    Ok(strip_count(lambda.parts(), r, &mut memo))
}

fn strip_count(shape: &[u32], r: usize, memo: &mut HashMap<Vec<u32>, BigUint>) -> BigUint {
    if shape.is_empty() {
        return BigUint::one();
    }
    if let Some(v) = memo.get(shape) {
        return v.clone();
    }
    // Sum over all sub-shapes mu obtained by removing a horizontal strip of
    // exactly r cells: lambda[i+1] <= mu[i] <= lambda[i] rowwise.
    let mut total = BigUint::zero();
    let mut mu: Vec<u32> = Vec::with_capacity(shape.len());
    enumerate_strips(shape, 0, r as u32, &mut mu, &mut total, memo, r);
    memo.insert(shape.to_vec(), total.clone());
    total
}

fn enumerate_strips(
    shape: &[u32],
    row: usize,
    remaining: u32,
    mu: &mut Vec<u32>,
    total: &mut BigUint,
    memo: &mut HashMap<Vec<u32>, BigUint>,
    r: usize,
) {
    if row == shape.len() {
        if remaining == 0 {
            let trimmed: Vec<u32> = mu.iter().copied().filter(|&p| p > 0).collect();
            *total += strip_count(&trimmed, r, memo);
        }
        return;
    }
    let hi = shape[row];
    let lo = if row + 1 < shape.len() { shape[row + 1] } else { 0 };
    // Cells removed from this row: between 0 and hi - lo, bounded by what is
    // still needed.
    let max_remove = (hi - lo).min(remaining);
    for remove in 0..=max_remove {
        // Removing more cells than remain in lower rows cannot reach total r;
        // the loop bound already enforces the strip condition.
        mu.push(hi - remove);
        enumerate_strips(shape, row + 1, remaining - remove, mu, total, memo, r);
        mu.pop();
    }
}

/// The tableau pair produced by RSK row insertion: `p` has weakly
/// increasing rows and strictly increasing columns over the input symbols,
/// `q` is a standard filling by insertion order, and both share `shape`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableauPair {
    pub p: Vec<Vec<u32>>,
    pub q: Vec<Vec<u32>>,
    pub shape: Partition,
}

impl TableauPair {
    /// Rows weakly increase and columns strictly increase in `p`.
    pub fn p_is_semistandard(&self) -> bool {
        rows_weak_cols_strict(&self.p)
    }

    /// `q` is standard: rows and columns strictly increase and the entries
    /// are exactly `1..=n`.
    pub fn q_is_standard(&self) -> bool {
        let n: usize = self.q.iter().map(|r| r.len()).sum();
        let mut seen = vec![false; n];
        for row in &self.q {
            for w in row.windows(2) {
                if w[0] >= w[1] {
                    return false;
                }
            }
            for &v in row {
                if v == 0 || v as usize > n || seen[v as usize - 1] {
                    return false;
                }
                seen[v as usize - 1] = true;
            }
        }
        cols_strict(&self.q)
    }
}

fn rows_weak_cols_strict(t: &[Vec<u32>]) -> bool {
    for row in t {
        for w in row.windows(2) {
            if w[0] > w[1] {
                return false;
            }
        }
    }
    cols_strict(t)
}

fn cols_strict(t: &[Vec<u32>]) -> bool {
    for i in 1..t.len() {
        for j in 0..t[i].len() {
            if j >= t[i - 1].len() || t[i - 1][j] >= t[i][j] {
                return false;
            }
        }
    }
    true
}

/// RSK row insertion of a multipermutation.  The first part of the common
/// shape equals the length of the longest non-decreasing subsequence of the
/// input.
pub fn rsk(m: &Multipermutation) -> TableauPair {
    let mut p: Vec<Vec<u32>> = Vec::new();
    let mut q: Vec<Vec<u32>> = Vec::new();
    for (step, &x) in m.symbols().iter().enumerate() {
        let mut val = x;
        let mut row = 0;
        loop {
            if row == p.len() {
                p.push(vec![val]);
                q.push(vec![step as u32 + 1]);
                break;
            }
            // Bump the leftmost entry strictly greater than val.
            let pos = p[row].partition_point(|&e| e <= val);
            if pos == p[row].len() {
                p[row].push(val);
                q[row].push(step as u32 + 1);
                break;
            }
            std::mem::swap(&mut val, &mut p[row][pos]);
            row += 1;
        }
    }
    let shape = Partition::new(p.iter().map(|r| r.len() as u32).collect())
        .expect("row lengths of an insertion tableau weakly decrease");
    let pair = TableauPair { p, q, shape };
    debug_assert!(pair.p_is_semistandard());
    debug_assert!(pair.q_is_standard());
    pair
}
