use rayon::prelude::*;

use super::certificate::{check_with, Verdict};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::rational::{ratio, Rational};
use crate::symbolic::SymbolicCache;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScanOptions {
    pub max_m: u32,
    pub max_r: u32,
    /// Fill cells implied by monotonicity instead of computing them.
    pub shortcuts: bool,
    /// Worker threads for precomputing powers; 0 or 1 means sequential.
    pub threads: usize,
}

impl ScanOptions {
    pub fn new(max_m: u32, max_r: u32) -> Self {
        Self {
            max_m,
            max_r,
            shortcuts: true,
            threads: 1,
        }
    }
}

/// One grid cell. `inferred` marks verdicts filled in by monotonicity; an
/// inferred not-contained cell reuses the witness of the cell it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanCell {
    pub m: u32,
    pub r: u32,
    pub verdict: Verdict,
    pub witness: Option<Monomial>,
    pub inferred: bool,
}

impl ScanCell {
    pub fn ratio(&self) -> Rational {
        ratio(self.m.into(), self.r.into())
    }
}

/// Verdicts on the grid `1 <= m <= max_m`, `1 <= r <= max_r`. The best ratio
/// is a certified lower bound for the resurgence, never its value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanReport {
    pub ideal: MonomialIdeal,
    pub max_m: u32,
    pub max_r: u32,
    pub shortcuts: bool,
    /// Row-major: `m` outer, `r` inner.
    pub cells: Vec<ScanCell>,
    pub best_ratio: Option<Rational>,
}

impl ScanReport {
    pub fn cell(&self, m: u32, r: u32) -> Option<&ScanCell> {
        if m == 0 || r == 0 || m > self.max_m || r > self.max_r {
            return None;
        }
        self.cells.get(((m - 1) * self.max_r + (r - 1)) as usize)
    }

    /// Not-contained cells whose ratio equals the best ratio, in grid order.
    pub fn best_cells(&self) -> impl Iterator<Item = &ScanCell> {
        self.cells.iter().filter(move |c| {
            c.verdict == Verdict::NotContained && self.best_ratio.as_ref() == Some(&c.ratio())
        })
    }

    pub fn verdicts_match(&self, other: &ScanReport) -> bool {
        self.cells.len() == other.cells.len()
            && self
                .cells
                .iter()
                .zip(&other.cells)
                .all(|(a, b)| (a.m, a.r, a.verdict) == (b.m, b.r, b.verdict))
    }
}

/// Scans the containment grid in increasing `m`, then `r`. With shortcuts on,
/// containment at `(m, r)` fills `(m', r)` for `m' > m` and non-containment
/// fills `(m, r')` for `r' > r`. Threads only precompute the powers, so the
/// report is the same for every thread count.
pub fn scan(ideal: &MonomialIdeal, options: ScanOptions) -> Result<ScanReport> {
    let ScanOptions {
        max_m,
        max_r,
        shortcuts,
        threads,
    } = options;
    if max_m == 0 || max_r == 0 {
        return Err(Error::InvalidArgument("scan bounds must be at least 1".into()));
    }
    ideal.require_proper_nonzero()?;
    let cache = SymbolicCache::new();
    if threads > 1 {
        prefetch(&cache, ideal, max_m, max_r, threads)?;
    }

    let width = max_r as usize;
    let mut grid: Vec<Option<ScanCell>> = vec![None; max_m as usize * width];
    let at = |m: u32, r: u32| (m as usize - 1) * width + (r as usize - 1);
    for m in 1..=max_m {
        for r in 1..=max_r {
            if grid[at(m, r)].is_some() {
                continue;
            }
            let cert = check_with(&cache, ideal, m, r)?;
            if shortcuts {
                match cert.verdict {
                    Verdict::Contained => {
                        for m2 in m + 1..=max_m {
                            grid[at(m2, r)].get_or_insert_with(|| ScanCell {
                                m: m2,
                                r,
                                verdict: Verdict::Contained,
                                witness: None,
                                inferred: true,
                            });
                        }
                    }
                    Verdict::NotContained => {
                        for r2 in r + 1..=max_r {
                            grid[at(m, r2)].get_or_insert_with(|| ScanCell {
                                m,
                                r: r2,
                                verdict: Verdict::NotContained,
                                witness: cert.witness.clone(),
                                inferred: true,
                            });
                        }
                    }
                }
            }
            grid[at(m, r)] = Some(ScanCell {
                m,
                r,
                verdict: cert.verdict,
                witness: cert.witness,
                inferred: false,
            });
        }
    }

    let cells: Vec<ScanCell> = grid.into_iter().map(|c| c.expect("every cell is filled")).collect();
    let best_ratio = cells
        .iter()
        .filter(|c| c.verdict == Verdict::NotContained)
        .map(ScanCell::ratio)
        .max();
    Ok(ScanReport {
        ideal: ideal.clone(),
        max_m,
        max_r,
        shortcuts,
        cells,
        best_ratio,
    })
}

fn prefetch(cache: &SymbolicCache, ideal: &MonomialIdeal, max_m: u32, max_r: u32, threads: usize) -> Result<()> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::InvalidArgument(format!("cannot start {threads} threads: {e}")))?;
    cache.power(ideal, max_m.max(max_r))?;
    cache.maximal_primes(ideal)?;
    pool.install(|| {
        (1..=max_m)
            .into_par_iter()
            .try_for_each(|m| cache.symbolic_power(ideal, m).map(drop))
    })
}
