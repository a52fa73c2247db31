//! Greedy code construction, minimum-distance verification, and a seeded
//! translocation-channel simulator.
//!
//! The greedy scan admits every multipermutation (in lexicographic order)
//! lying at distance at least `d` from everything admitted so far.  The
//! output is maximal, which is exactly the hypothesis behind the
//! Gilbert–Varshamov-type lower bounds in [`crate::bounds`], so greedy
//! sizes always meet those bounds.
//!
//! Randomness: each trial derives its own ChaCha8 stream from
//! `(seed, trial index)` through a SplitMix64 mix, so results are identical
//! no matter how trials are partitioned across workers.

use std::io::{BufRead, Write};

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::perm::{
    check_divides, lcs_length, parse_sequence, Multipermutation, MultisetPermutations,
    Translocation,
};

/// Default cap on `n` for the greedy scan (it enumerates the whole space).
pub const DEFAULT_GREEDY_CAP: usize = 10;

/// An ordered collection of distinct codewords with a claimed minimum
/// distance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Codebook {
    n: usize,
    r: usize,
    d: usize,
    codewords: Vec<Multipermutation>,
}

/// First pair violating the claimed minimum distance, if any.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceViolation {
    pub first: usize,
    pub second: usize,
    pub distance: usize,
}

impl Codebook {
    /// Builds a codebook and verifies the claimed minimum distance over all
    /// pairs.
    pub fn new(n: usize, r: usize, d: usize, codewords: Vec<Multipermutation>) -> Result<Self> {
        let book = Self::new_unchecked(n, r, d, codewords)?;
        if let Some(v) = book.verify_min_distance() {
            return Err(Error::InvalidParameter(format!(
                "codewords {} and {} are at distance {} < d={}",
                v.first, v.second, v.distance, book.d
            )));
        }
        Ok(book)
    }

    fn new_unchecked(
        n: usize,
        r: usize,
        d: usize,
        codewords: Vec<Multipermutation>,
    ) -> Result<Self> {
        check_divides(n, r)?;
        if d < 1 {
            return Err(Error::InvalidParameter("d must be at least 1".into()));
        }
        if codewords.is_empty() {
            return Err(Error::InvalidParameter("codebook has no codewords".into()));
        }
        for w in &codewords {
            if w.n() != n || w.r() != r {
                return Err(Error::InvalidParameter(format!(
                    "codeword {w} does not match (n={n}, r={r})"
                )));
            }
        }
        Ok(Self { n, r, d, codewords })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// The claimed minimum distance.
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn len(&self) -> usize {
        self.codewords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codewords.is_empty()
    }

    pub fn codewords(&self) -> &[Multipermutation] {
        &self.codewords
    }

    /// All-pairs check of the claimed minimum distance; `None` means the
    /// codebook is clean, otherwise the first offending pair is named.
    pub fn verify_min_distance(&self) -> Option<DistanceViolation> {
        for i in 0..self.codewords.len() {
            for j in (i + 1)..self.codewords.len() {
                let dist = self.n
                    - lcs_length(self.codewords[i].symbols(), self.codewords[j].symbols());
                if dist < self.d {
                    return Some(DistanceViolation {
                        first: i,
                        second: j,
                        distance: dist,
                    });
                }
            }
        }
        None
    }

    /// Writes the codebook in its text format: a header line `n r d`, then
    /// one codeword per line as whitespace-separated symbols.
    pub fn write_to(&self, w: &mut impl Write) -> std::io::Result<()> {
        writeln!(w, "{} {} {}", self.n, self.r, self.d)?;
        for word in &self.codewords {
            writeln!(w, "{word}")?;
        }
        Ok(())
    }

    /// Reads the text format produced by [`write_to`](Self::write_to) and
    /// verifies the minimum distance.
    pub fn read_from(reader: &mut impl BufRead) -> Result<Self> {
        let mut lines = reader.lines();
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty codebook file".into()))?
            .map_err(|e| Error::Parse(e.to_string()))?;
        let head = parse_sequence(&header)?;
        if head.len() != 3 {
            return Err(Error::Parse(format!(
                "codebook header must be `n r d`, got `{header}`"
            )));
        }
        let (n, r, d) = (head[0] as usize, head[1] as usize, head[2] as usize);
        let mut codewords = Vec::new();
        for line in lines {
            let line = line.map_err(|e| Error::Parse(e.to_string()))?;
            if line.trim().is_empty() {
                continue;
            }
            codewords.push(Multipermutation::from_symbols_with_r(
                parse_sequence(&line)?,
                r,
            )?);
        }
        Codebook::new(n, r, d, codewords)
    }
}

/// Greedy maximal code: scans all r-regular multipermutations of length `n`
/// in lexicographic order and admits each one at distance at least `d` from
/// every codeword admitted so far.  Refuses `n > cap` since the scan visits
/// the whole space.
pub fn greedy_code(n: usize, r: usize, d: usize, cap: usize) -> Result<Codebook> {
    check_divides(n, r)?;
    if d < 1 || d > n - r + 1 {
        return Err(Error::InvalidParameter(format!(
            "minimum distance d={d} out of range 1..={}",
            n - r + 1
        )));
    }
    if n > cap {
        return Err(Error::CapExceeded {
            what: "greedy code construction",
            size: n,
            cap,
        });
    }
    let mut codewords: Vec<Multipermutation> = Vec::new();
    let keep_lcs = n.saturating_sub(d); // distance >= d  <=>  lcs <= n - d
    for cand in MultisetPermutations::new(n, r)? {
        let admit = d == 1
            || codewords
                .iter()
                .all(|c| lcs_length(cand.symbols(), c.symbols()) <= keep_lcs);
        if admit {
            codewords.push(cand);
        }
    }
    Codebook::new_unchecked(n, r, d, codewords)
}

/// Result of a seeded channel run.  Identical seeds give identical counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChannelRun {
    pub seed: u64,
    pub trials: u64,
    /// Translocations applied per trial.
    pub errors_per_trial: usize,
    pub successes: u64,
}

impl ChannelRun {
    pub fn failures(&self) -> u64 {
        self.trials - self.successes
    }
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^ (x >> 31)
}

fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(splitmix64(seed ^ splitmix64(trial)))
}

/// Sends `trials` random codewords through a channel applying `t` uniform
/// random translocations each, then decodes by minimum Ulam distance.
/// A decoding tie counts as a failure, which makes the `d >= 2t+1`
/// correction guarantee falsifiable.  Translocations are drawn as uniform
/// `(i, j)` pairs over the square, redrawing the redundant `i - j = 1`
/// forms.
pub fn simulate_channel(code: &Codebook, t: usize, trials: u64, seed: u64) -> ChannelRun {
    let n = code.n();
    let mut successes = 0u64;
    for trial in 0..trials {
        let mut rng = trial_rng(seed, trial);
        let sent_idx = rng.gen_range(0..code.len());
        let mut word = code.codewords()[sent_idx].clone();
        for _ in 0..t {
            let phi = loop {
                let i = rng.gen_range(1..=n);
                let j = rng.gen_range(1..=n);
                if i != j + 1 {
                    break Translocation::new(n, i, j).expect("in range");
                }
            };
            word = word.act(&phi).expect("same n");
        }
        if decode(code, &word) == Some(sent_idx) {
            successes += 1;
        }
    }
    ChannelRun {
        seed,
        trials,
        errors_per_trial: t,
        successes,
    }
}

/// Minimum-distance decoding; `None` on a tie.
pub fn decode(code: &Codebook, received: &Multipermutation) -> Option<usize> {
    let n = code.n();
    let mut best = usize::MAX;
    let mut best_idx = 0usize;
    let mut tied = false;
    for (idx, c) in code.codewords().iter().enumerate() {
        let dist = n - lcs_length(received.symbols(), c.symbols());
        if dist < best {
            best = dist;
            best_idx = idx;
            tied = false;
        } else if dist == best {
            tied = true;
        }
    }
    if tied {
        None
    } else {
        Some(best_idx)
    }
}
