//! Brute-force enumerator of cylindric partitions: the ground truth that
//! every generating-function computation in this crate is tested against.
//!
//! A cylindric partition with profile (c_1, ..., c_k) is a k-tuple of
//! partitions with the cyclically wrapped dominance conditions
//! `row_i[j] >= row_{i+1}[j + c_{i+1}]` and `row_k[j] >= row_1[j + c_1]`.
//! Enumeration fills rows top to bottom and parts left to right, pruning
//! as soon as a prefix violates either inequality chain; the wrap-around
//! condition is checked incrementally against the already-fixed first row.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::profiles::Profile;
use crate::qalg::{QSeries, ZQSeries};

/// Default cap on recursion states; the oracle is for desk-scale windows.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Exact counts of cylindric partitions by largest part and size:
/// `counts[m][n]` is the number with max(Lambda) = m and |Lambda| = n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountTable {
    pub max_bound: usize,
    pub size_bound: usize,
    pub counts: Vec<Vec<u64>>,
}

impl CountTable {
    /// Totals over the largest part: the q-series counts at z = 1.
    pub fn size_totals(&self) -> Vec<u64> {
        (0..=self.size_bound)
            .map(|n| (0..=self.max_bound).map(|m| self.counts[m][n]).sum())
            .collect()
    }
}

/// Enumerate all cylindric partitions with profile `c`, largest part at most
/// `max_part` and size at most `max_size`, with the default state budget.
pub fn enumerate(c: &Profile, max_part: usize, max_size: usize) -> Result<CountTable> {
    enumerate_with_budget(c, max_part, max_size, DEFAULT_BUDGET)
}

pub fn enumerate_with_budget(
    c: &Profile,
    max_part: usize,
    max_size: usize,
    budget: u64,
) -> Result<CountTable> {
    let mut e = Enumerator {
        c,
        max_part,
        max_size,
        budget,
        visited: 0,
        rows: vec![Vec::new(); c.k()],
        size: 0,
        counts: vec![vec![0; max_size + 1]; max_part + 1],
    };
    e.fill_row(0)?;
    Ok(CountTable {
        max_bound: max_part,
        size_bound: max_size,
        counts: e.counts,
    })
}

/// The enumerated table repackaged as a bivariate series: the z^m q^n
/// coefficient is `counts[m][n]`. z-degree max_part+1, order max_size+1.
pub fn oracle_f(c: &Profile, max_part: usize, max_size: usize) -> Result<ZQSeries> {
    let table = enumerate(c, max_part, max_size)?;
    let order = max_size + 1;
    let zcoeffs = (0..=max_part)
        .map(|m| {
            QSeries::from_coeffs((0..order).map(|n| BigInt::from(table.counts[m][n])).collect())
        })
        .collect();
    Ok(ZQSeries::from_zcoeffs(zcoeffs))
}

struct Enumerator<'a> {
    c: &'a Profile,
    max_part: usize,
    max_size: usize,
    budget: u64,
    visited: u64,
    rows: Vec<Vec<usize>>,
    size: usize,
    counts: Vec<Vec<u64>>,
}

impl Enumerator<'_> {
    fn fill_row(&mut self, r: usize) -> Result<()> {
        if r == self.c.k() {
            let max = self.rows.iter().filter_map(|row| row.first()).max();
            self.counts[max.copied().unwrap_or(0)][self.size] += 1;
            return Ok(());
        }
        self.fill_part(r, 0)
    }

    fn fill_part(&mut self, r: usize, pos: usize) -> Result<()> {
        self.visited += 1;
        if self.visited > self.budget {
            return Err(Error::BudgetExceeded { budget: self.budget });
        }
        let k = self.c.k();
        let last_row = r == k - 1 && k > 1;

        // Ending the row here is legal unless the wrap-around condition still
        // demands a part: the first row may not extend past pos + c_1.
        let wrap_lower = if last_row {
            let c1 = self.c.part(1);
            self.rows[0].get(pos + c1).copied().unwrap_or(0)
        } else {
            0
        };
        if wrap_lower == 0 {
            self.fill_row(r + 1)?;
        }

        // Upper bound for a part at this position: the row stays weakly
        // decreasing and sits below row r-1 shifted by c_r.
        let mut upper = self.max_part.min(self.max_size - self.size);
        if pos > 0 {
            upper = upper.min(self.rows[r][pos - 1]);
        }
        if r > 0 {
            let shift = self.c.part(r + 1);
            if pos >= shift {
                upper = upper.min(self.rows[r - 1].get(pos - shift).copied().unwrap_or(0));
            }
        }
        let lower = wrap_lower.max(1);
        for p in lower..=upper {
            self.rows[r].push(p);
            self.size += p;
            self.fill_part(r, pos + 1)?;
            self.size -= p;
            self.rows[r].pop();
        }
        Ok(())
    }
}
