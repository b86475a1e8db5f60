//! Dyck path enumeration and brute-force `UD`/`UUD` factor statistics.
//!
//! Paths are packed into a `u64`, bit `i` set when step `i` is an up step, so
//! semilengths up to [`HARD_LIMIT`] are representable. Enumeration is lazy and
//! lexicographic with `U < D`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::polyarith::Int;

/// Default refusal threshold for enumeration; `C_16` is about 35 million paths.
pub const DEFAULT_CAP: u32 = 16;

/// Largest semilength a packed path can hold.
pub const HARD_LIMIT: u32 = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    Up,
    Down,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct DyckPath {
    semilength: u32,
    ups: u64,
}

impl DyckPath {
    pub fn empty() -> DyckPath {
        DyckPath { semilength: 0, ups: 0 }
    }

    /// Validates the balance and prefix conditions.
    pub fn from_steps(steps: &[Step]) -> Option<DyckPath> {
        if !steps.len().is_multiple_of(2) || steps.len() > 2 * HARD_LIMIT as usize {
            return None;
        }
        let mut height: i64 = 0;
        let mut ups = 0u64;
        for (i, s) in steps.iter().enumerate() {
            match s {
                Step::Up => {
                    height += 1;
                    ups |= 1 << i;
                }
                Step::Down => height -= 1,
            }
            if height < 0 {
                return None;
            }
        }
        (height == 0).then_some(DyckPath {
            semilength: (steps.len() / 2) as u32,
            ups,
        })
    }

    /// Parses a word over `{U, D}`.
    pub fn parse(word: &str) -> Option<DyckPath> {
        let steps = word
            .chars()
            .map(|c| match c {
                'U' | 'u' => Some(Step::Up),
                'D' | 'd' => Some(Step::Down),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()?;
        DyckPath::from_steps(&steps)
    }

    pub fn semilength(&self) -> u32 {
        self.semilength
    }

    pub fn len(&self) -> usize {
        2 * self.semilength as usize
    }

    pub fn is_empty(&self) -> bool {
        self.semilength == 0
    }

    pub fn step(&self, i: usize) -> Step {
        if self.ups >> i & 1 == 1 {
            Step::Up
        } else {
            Step::Down
        }
    }

    pub fn steps(&self) -> impl Iterator<Item = Step> + '_ {
        (0..self.len()).map(|i| self.step(i))
    }

    pub fn stats(&self) -> FactorStats {
        count_factors(self)
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in self.steps() {
            f.write_str(match s {
                Step::Up => "U",
                Step::Down => "D",
            })?;
        }
        Ok(())
    }
}

impl fmt::Debug for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DyckPath({self})")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FactorStats {
    pub n: u32,
    /// Occurrences of `UD`.
    pub k: u32,
    /// Occurrences of `UUD`.
    pub m: u32,
}

/// Counts `UD` and `UUD` occurrences at every start index.
pub fn count_factors(path: &DyckPath) -> FactorStats {
    let len = path.len();
    if len == 0 {
        return FactorStats { n: 0, k: 0, m: 0 };
    }
    let mask = if len == 64 { u64::MAX } else { (1u64 << len) - 1 };
    let up = path.ups & mask;
    let down = !path.ups & mask;
    // bit i of `ud` is set iff step i is U and step i+1 is D
    let ud = up & (down >> 1);
    let uud = up & (up >> 1) & (down >> 2);
    FactorStats {
        n: path.semilength,
        k: ud.count_ones(),
        m: uud.count_ones(),
    }
}

/// Lexicographic iterator over the Dyck paths of one semilength that share a
/// fixed prefix.
#[derive(Debug, Clone)]
pub struct DyckPaths {
    semilength: u32,
    prefix_len: usize,
    current: Option<u64>,
}

impl DyckPaths {
    fn with_prefix(semilength: u32, prefix: &[Step]) -> DyckPaths {
        let n = semilength as usize;
        let mut ups = 0u64;
        let mut up_count = 0usize;
        let mut height = 0i64;
        let mut valid = prefix.len() <= 2 * n;
        for (i, s) in prefix.iter().enumerate() {
            match s {
                Step::Up => {
                    ups |= 1 << i;
                    up_count += 1;
                    height += 1;
                }
                Step::Down => height -= 1,
            }
            valid &= height >= 0 && up_count <= n;
        }
        let current = valid.then(|| fill_smallest(ups, prefix.len(), n - up_count));
        DyckPaths {
            semilength,
            prefix_len: prefix.len(),
            current,
        }
    }

    fn successor(&self, ups: u64) -> Option<u64> {
        let n = self.semilength as usize;
        let mut height = 0i64;
        let mut up_count = 0usize;
        let mut pivot = None;
        for i in 0..2 * n {
            let is_up = ups >> i & 1 == 1;
            if is_up && height >= 1 && i >= self.prefix_len {
                pivot = Some((i, up_count));
            }
            if is_up {
                height += 1;
                up_count += 1;
            } else {
                height -= 1;
            }
        }
        let (i, ups_before) = pivot?;
        let kept = ups & ((1u64 << i) - 1);
        Some(fill_smallest(kept, i + 1, n - ups_before))
    }
}

// Leaves positions `from..` as `remaining_ups` up steps followed by down steps.
fn fill_smallest(ups: u64, from: usize, remaining_ups: usize) -> u64 {
    let block = if remaining_ups == 0 {
        0
    } else {
        ((1u64 << remaining_ups) - 1) << from
    };
    ups | block
}

impl Iterator for DyckPaths {
    type Item = DyckPath;

    fn next(&mut self) -> Option<DyckPath> {
        let ups = self.current?;
        self.current = self.successor(ups);
        Some(DyckPath {
            semilength: self.semilength,
            ups,
        })
    }
}

fn check_cap(n: u32, cap: u32) -> Result<()> {
    let cap = cap.min(HARD_LIMIT);
    if n > cap {
        Err(Error::CapExceeded { n, cap })
    } else {
        Ok(())
    }
}

/// Every Dyck path of semilength `n`, lexicographic with `U < D`.
pub fn enumerate_paths(n: u32) -> Result<DyckPaths> {
    enumerate_paths_capped(n, DEFAULT_CAP)
}

pub fn enumerate_paths_capped(n: u32, cap: u32) -> Result<DyckPaths> {
    check_cap(n, cap)?;
    Ok(DyckPaths::with_prefix(n, &[]))
}

/// Which computation produced a [`CoeffTriangle`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Provenance {
    Oracle,
    Formula,
    RecFixedK,
    RecFixedN,
}

impl Provenance {
    pub fn as_str(&self) -> &'static str {
        match self {
            Provenance::Oracle => "oracle",
            Provenance::Formula => "formula",
            Provenance::RecFixedK => "rec-k",
            Provenance::RecFixedN => "rec-n",
        }
    }
}

/// The numbers `w_{n,k,m}` for one `n`, keyed by `(k, m)`; zero entries are
/// not stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffTriangle {
    pub n: u32,
    pub provenance: Provenance,
    entries: BTreeMap<(u32, u32), Int>,
}

impl CoeffTriangle {
    pub fn new(n: u32, provenance: Provenance) -> CoeffTriangle {
        CoeffTriangle {
            n,
            provenance,
            entries: BTreeMap::new(),
        }
    }

    /// Stores `value` at `(k, m)`; zeros remove the entry.
    pub fn set(&mut self, k: u32, m: u32, value: Int) {
        if value.is_zero() {
            self.entries.remove(&(k, m));
        } else {
            self.entries.insert((k, m), value);
        }
    }

    pub fn get(&self, k: u32, m: u32) -> Int {
        self.entries.get(&(k, m)).cloned().unwrap_or_default()
    }

    /// Nonzero entries in `(k, m)` order.
    pub fn entries(&self) -> impl Iterator<Item = (u32, u32, &Int)> {
        self.entries.iter().map(|(&(k, m), v)| (k, m, v))
    }

    pub fn total(&self) -> Int {
        self.entries.values().sum()
    }

    pub fn row_sum(&self, k: u32) -> Int {
        self.entries.range((k, 0)..=(k, u32::MAX)).map(|(_, v)| v).sum()
    }

    /// Same values regardless of provenance.
    pub fn same_entries(&self, other: &CoeffTriangle) -> bool {
        self.n == other.n && self.entries == other.entries
    }

    /// `(k, m, self, other)` for every position where the two tables differ.
    pub fn diff(&self, other: &CoeffTriangle) -> Vec<(u32, u32, Int, Int)> {
        let keys: std::collections::BTreeSet<_> = self.entries.keys().chain(other.entries.keys()).collect();
        keys.into_iter()
            .filter_map(|&(k, m)| {
                let (a, b) = (self.get(k, m), other.get(k, m));
                (a != b).then_some((k, m, a, b))
            })
            .collect()
    }
}

fn tally(n: u32, paths: impl Iterator<Item = DyckPath>, counts: &mut [u64]) {
    let width = n as usize + 1;
    for p in paths {
        let s = count_factors(&p);
        counts[s.k as usize * width + s.m as usize] += 1;
    }
}

fn triangle_from_counts(n: u32, counts: &[u64]) -> CoeffTriangle {
    let width = n as usize + 1;
    let mut t = CoeffTriangle::new(n, Provenance::Oracle);
    for (idx, &c) in counts.iter().enumerate() {
        if c > 0 {
            t.set((idx / width) as u32, (idx % width) as u32, Int::from(c));
        }
    }
    t
}

/// Brute-force table: enumerates every path and tallies its statistics.
pub fn oracle_triangle(n: u32) -> Result<CoeffTriangle> {
    oracle_triangle_capped(n, DEFAULT_CAP)
}

pub fn oracle_triangle_capped(n: u32, cap: u32) -> Result<CoeffTriangle> {
    let paths = enumerate_paths_capped(n, cap)?;
    let width = n as usize + 1;
    let mut counts = vec![0u64; width * width];
    tally(n, paths, &mut counts);
    Ok(triangle_from_counts(n, &counts))
}

/// All valid prefixes of a given length, in lexicographic order.
fn prefixes(n: u32, len: usize) -> Vec<Vec<Step>> {
    fn extend(n: usize, len: usize, cur: &mut Vec<Step>, h: usize, u: usize, out: &mut Vec<Vec<Step>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        if u < n {
            cur.push(Step::Up);
            extend(n, len, cur, h + 1, u + 1, out);
            cur.pop();
        }
        if h > 0 {
            cur.push(Step::Down);
            extend(n, len, cur, h - 1, u, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    extend(n as usize, len, &mut Vec::new(), 0, 0, &mut out);
    out
}

/// Same table as [`oracle_triangle_capped`], split by path prefix across the
/// current rayon pool.
pub fn oracle_triangle_parallel(n: u32, cap: u32) -> Result<CoeffTriangle> {
    check_cap(n, cap)?;
    let width = n as usize + 1;
    let prefix_len = (2 * n as usize).min(12);
    let counts = prefixes(n, prefix_len)
        .into_par_iter()
        .map(|prefix| {
            let mut local = vec![0u64; width * width];
            tally(n, DyckPaths::with_prefix(n, &prefix), &mut local);
            local
        })
        .reduce(
            || vec![0u64; width * width],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
    Ok(triangle_from_counts(n, &counts))
}
