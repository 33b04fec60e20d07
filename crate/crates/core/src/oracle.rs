//! Brute-force enumeration of the combinatorial models behind r-Whitney numbers.
//!
//! Every count here visits each structure once; nothing is multiplied out in
//! closed form except where noted. The algebraic paths in [`crate::triangles`]
//! and [`crate::grammar`] are checked against these.

use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};

/// Default bound on `n + r` labels.
pub const DEFAULT_CAP: usize = 12;

/// Environment variable overriding [`DEFAULT_CAP`].
pub const CAP_ENV: &str = "WHITNEY_ORACLE_CAP";

pub fn label_cap() -> usize {
    std::env::var(CAP_ENV)
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_CAP)
}

fn check_cap(labels: usize) -> Result<()> {
    let cap = label_cap();
    if labels > cap {
        return Err(Error::InstanceTooLarge { labels, cap });
    }
    Ok(())
}

fn check_m(m: u32) -> Result<()> {
    if m == 0 {
        return Err(Error::InvalidParameter("m must be positive".into()));
    }
    Ok(())
}

/// A block with a color in `1..=m` per element; the minimum has color 1.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColoredBlock {
    /// Ascending.
    pub elements: Vec<u32>,
    /// `colors[i]` belongs to `elements[i]`.
    pub colors: Vec<u32>,
}

impl ColoredBlock {
    pub fn is_valid(&self, m: u32) -> bool {
        !self.elements.is_empty()
            && self.elements.len() == self.colors.len()
            && self.elements.windows(2).all(|w| w[0] < w[1])
            && self.colors[0] == 1
            && self.colors.iter().all(|&c| (1..=m).contains(&c))
    }
}

impl fmt::Display for ColoredBlock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .elements
            .iter()
            .zip(&self.colors)
            .map(|(e, c)| format!("{e}^{c}"))
            .collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Colored partial partition of `[n]` with `k` blocks, plus a weak
/// `r`-composition of the uncovered elements.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WhitneyPair {
    /// Ordered by minima.
    pub blocks: Vec<ColoredBlock>,
    pub composition: Vec<Vec<u32>>,
}

impl WhitneyPair {
    /// Checks the structural invariants against `n`, `k`, `m`, `r`.
    pub fn is_valid(&self, n: u32, k: usize, m: u32, r: usize) -> bool {
        if self.blocks.len() != k || self.composition.len() != r {
            return false;
        }
        if !self.blocks.iter().all(|b| b.is_valid(m)) {
            return false;
        }
        let mut seen: Vec<u32> = self
            .blocks
            .iter()
            .flat_map(|b| b.elements.iter().copied())
            .chain(self.composition.iter().flatten().copied())
            .collect();
        seen.sort_unstable();
        seen == (1..=n).collect::<Vec<_>>()
    }
}

impl fmt::Display for WhitneyPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> = self.blocks.iter().map(ToString::to_string).collect();
        let comp: Vec<String> = self
            .composition
            .iter()
            .map(|s| {
                if s.is_empty() {
                    "{}".to_string()
                } else {
                    let e: Vec<String> = s.iter().map(ToString::to_string).collect();
                    format!("{{{}}}", e.join(","))
                }
            })
            .collect();
        write!(f, "({{{}}}, ({}))", blocks.join(","), comp.join(","))
    }
}

/// Where the current element of a pair goes.
#[derive(Clone, Copy, Debug)]
enum Move {
    NewBlock,
    Join { block: usize, color: u32 },
    Part(usize),
}

struct PairSearch {
    n: u32,
    k: usize,
    m: u32,
    r: usize,
}

impl PairSearch {
    /// Moves available to element `e` given `blocks` blocks so far.
    fn moves(&self, e: u32, blocks: usize) -> Vec<Move> {
        let remaining = (self.n - e) as usize;
        let mut out = Vec::new();
        if blocks < self.k {
            out.push(Move::NewBlock);
        }
        // Without a new block here, the rest must still be able to reach k.
        if blocks + remaining >= self.k {
            for block in 0..blocks {
                for color in 1..=self.m {
                    out.push(Move::Join { block, color });
                }
            }
            out.extend((0..self.r).map(Move::Part));
        }
        out
    }

    fn count_from(&self, e: u32, blocks: usize) -> u64 {
        if e > self.n {
            return u64::from(blocks == self.k);
        }
        self.moves(e, blocks)
            .into_iter()
            .map(|mv| match mv {
                Move::NewBlock => self.count_from(e + 1, blocks + 1),
                _ => self.count_from(e + 1, blocks),
            })
            .sum()
    }

    fn list_from(&self, e: u32, cur: &mut WhitneyPair, out: &mut Vec<WhitneyPair>) {
        if e > self.n {
            if cur.blocks.len() == self.k {
                out.push(cur.clone());
            }
            return;
        }
        for mv in self.moves(e, cur.blocks.len()) {
            match mv {
                Move::NewBlock => {
                    cur.blocks.push(ColoredBlock {
                        elements: vec![e],
                        colors: vec![1],
                    });
                    self.list_from(e + 1, cur, out);
                    cur.blocks.pop();
                }
                Move::Join { block, color } => {
                    cur.blocks[block].elements.push(e);
                    cur.blocks[block].colors.push(color);
                    self.list_from(e + 1, cur, out);
                    cur.blocks[block].elements.pop();
                    cur.blocks[block].colors.pop();
                }
                Move::Part(j) => {
                    cur.composition[j].push(e);
                    self.list_from(e + 1, cur, out);
                    cur.composition[j].pop();
                }
            }
        }
    }
}

/// Number of [`WhitneyPair`]s; equals `W_{m,r}(n,k)`.
///
/// Elements are placed in increasing order, so a new block is always opened
/// by its minimum (color 1) and blocks come out ordered by minima. The
/// branches for element 1 run in parallel.
pub fn count_whitney_pairs(n: usize, k: usize, m: u32, r: usize) -> Result<u64> {
    check_m(m)?;
    check_cap(n + r)?;
    if k > n {
        return Ok(0);
    }
    let search = PairSearch {
        n: n as u32,
        k,
        m,
        r,
    };
    if n == 0 {
        return Ok(u64::from(k == 0));
    }
    Ok(search
        .moves(1, 0)
        .into_par_iter()
        .map(|mv| match mv {
            Move::NewBlock => search.count_from(2, 1),
            _ => search.count_from(2, 0),
        })
        .sum())
}

/// All [`WhitneyPair`]s, in the search order.
pub fn list_whitney_pairs(n: usize, k: usize, m: u32, r: usize) -> Result<Vec<WhitneyPair>> {
    check_m(m)?;
    check_cap(n + r)?;
    let search = PairSearch {
        n: n as u32,
        k,
        m,
        r,
    };
    let mut out = Vec::new();
    let mut cur = WhitneyPair {
        blocks: Vec::new(),
        composition: vec![Vec::new(); r],
    };
    if k <= n {
        search.list_from(1, &mut cur, &mut out);
    }
    Ok(out)
}

/// Partitions of `{1..n+r}` into `k + r` blocks with `1..r` in distinct
/// blocks, where every element of a non-special block except its maximum
/// carries one of `m` colors.
///
/// Elements `r+1..` are inserted in increasing order. Joining a non-special
/// block demotes its current maximum, which then receives a color; each
/// color choice is a separate branch.
pub fn count_mr_partitions(n: usize, k: usize, m: u32, r: usize) -> Result<u64> {
    check_m(m)?;
    check_cap(n + r)?;
    fn go(left: usize, blocks: usize, k: usize, m: u32, r: usize) -> u64 {
        if left == 0 {
            return u64::from(blocks == k);
        }
        let mut total = 0;
        if blocks < k {
            total += go(left - 1, blocks + 1, k, m, r);
        }
        if blocks + left > k {
            for _special in 0..r {
                total += go(left - 1, blocks, k, m, r);
            }
            for _block in 0..blocks {
                for _color in 0..m {
                    total += go(left - 1, blocks, k, m, r);
                }
            }
        }
        total
    }
    Ok(go(n, 0, k, m, r))
}

/// Pairs of a partition of some `A ⊆ [n]` into `k` blocks and a weak
/// `r`-composition of `[n] \ A`; equals `W_{1,r}(n,k)`.
///
/// Runs subset first: every `A` is visited, its partitions enumerated as
/// restricted growth strings, and the compositions of the complement counted
/// as `r^|complement|` functions.
pub fn count_r_stirling_pairs(n: usize, k: usize, r: usize) -> Result<u64> {
    check_cap(n + r)?;
    let total = (0u32..1 << n)
        .into_par_iter()
        .map(|mask| {
            let size = mask.count_ones() as usize;
            let rest = (n - size) as u32;
            partitions_into(size, k) * (r as u64).pow(rest)
        })
        .sum();
    Ok(total)
}

/// Restricted growth strings of length `size` with maximum `k - 1`.
fn partitions_into(size: usize, k: usize) -> u64 {
    fn go(left: usize, used: usize, k: usize) -> u64 {
        if used > k {
            return 0;
        }
        if left == 0 {
            return u64::from(used == k);
        }
        (0..=used)
            .map(|label| go(left - 1, used.max(label + 1), k))
            .sum()
    }
    go(size, 0, k)
}

/// Counts pairs after relabeling `[n]` by `perm` (a permutation of `1..=n`):
/// the listing is mapped through `perm`, re-canonicalized, deduplicated, and
/// checked for validity. Returns the number of distinct structures.
pub fn count_relabeled_pairs(n: usize, k: usize, m: u32, r: usize, perm: &[u32]) -> Result<usize> {
    if perm.len() != n {
        return Err(Error::InvalidParameter(
            "permutation length must equal n".into(),
        ));
    }
    let pairs = list_whitney_pairs(n, k, m, r)?;
    let mut relabeled: Vec<WhitneyPair> = pairs
        .iter()
        .map(|p| relabel(p, perm))
        .filter(|p| p.is_valid(n as u32, k, m, r))
        .collect();
    relabeled.sort();
    relabeled.dedup();
    Ok(relabeled.len())
}

/// Maps labels through `perm` and restores canonical form. Colors travel with
/// their elements except that each block's new minimum trades colors with the
/// old one, keeping the "minimum has color 1" rule.
fn relabel(p: &WhitneyPair, perm: &[u32]) -> WhitneyPair {
    let map = |e: u32| perm[(e - 1) as usize];
    let mut blocks: Vec<ColoredBlock> = p
        .blocks
        .iter()
        .map(|b| {
            let mut pairs: Vec<(u32, u32)> = b
                .elements
                .iter()
                .zip(&b.colors)
                .map(|(&e, &c)| (map(e), c))
                .collect();
            let min_pos = pairs
                .iter()
                .enumerate()
                .min_by_key(|(_, (e, _))| *e)
                .map(|(i, _)| i)
                .expect("nonempty block");
            let old_min_color = pairs[0].1;
            let displaced = pairs[min_pos].1;
            pairs[0].1 = displaced;
            pairs[min_pos].1 = old_min_color;
            pairs.sort_unstable();
            ColoredBlock {
                elements: pairs.iter().map(|x| x.0).collect(),
                colors: pairs.iter().map(|x| x.1).collect(),
            }
        })
        .collect();
    blocks.sort_by_key(|b| b.elements[0]);
    let composition = p
        .composition
        .iter()
        .map(|s| {
            let mut t: Vec<u32> = s.iter().map(|&e| map(e)).collect();
            t.sort_unstable();
            t
        })
        .collect();
    WhitneyPair {
        blocks,
        composition,
    }
}
