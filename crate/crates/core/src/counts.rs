//! Counting conjugacy classes of 3-braids by trace and exponent sum, and
//! checking the class-number identity
//!
//! ```text
//! h(t) = Σ_{j=0}^{11} (p_{t,n+j} + M_{t,n+j})
//! ```
//!
//! The left side is the number of form classes of discriminant `t² - 4`. On
//! the right, `|X_{t,n}|` (braid classes with trace `t` and exponent `n`) is
//! read off from the exponent residues mod 12 of the trace-`t` classes in
//! `SL₂(ℤ)`, `M` comes from [`crate::birman_menasco`], and `p = |X| - M`.

use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::birman_menasco::m_full;
use crate::braid3::Letter;
use crate::error::{Error, Result};
use crate::quadforms::{self, check_trace, FormClass, FormClassKey};
use crate::sl2z::Mat2Z;

/// A trace-`t` conjugacy class of `SL₂(ℤ)`, with its form class and the
/// residue mod 12 of the exponent sum of its braid lifts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassWithExponent {
    pub class: FormClass,
    pub trace: i64,
    pub matrix: Mat2Z,
    pub residue: u8,
}

/// One `(t, n)` cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CountsRow {
    pub t: i64,
    pub n: i64,
    pub x_count: u64,
    pub m: u64,
    /// `x_count - m`; negative only if the bookkeeping is broken.
    pub p: i64,
}

pub fn y_classes(t: i64) -> Result<Vec<ClassWithExponent>> {
    quadforms::enumerate_classes(t)?
        .into_iter()
        .map(|class| {
            let matrix = quadforms::ccc_matrix(&class.key.repr, t)?;
            Ok(ClassWithExponent { residue: matrix.exponent_mod12(), matrix, trace: t, class })
        })
        .collect()
}

/// Per-trace data shared by every cell with that trace.
#[derive(Clone, Debug)]
pub struct TraceCounts {
    t: i64,
    classes: Vec<ClassWithExponent>,
    residue_counts: [u64; 12],
}

impl TraceCounts {
    pub fn new(t: i64) -> Result<Self> {
        let classes = y_classes(t)?;
        let mut residue_counts = [0u64; 12];
        for c in &classes {
            residue_counts[usize::from(c.residue)] += 1;
        }
        Ok(Self { t, classes, residue_counts })
    }

    pub fn t(&self) -> i64 {
        self.t
    }

    pub fn classes(&self) -> &[ClassWithExponent] {
        &self.classes
    }

    /// `h(t)`.
    pub fn class_number(&self) -> u64 {
        self.classes.len() as u64
    }

    pub fn residue_counts(&self) -> [u64; 12] {
        self.residue_counts
    }

    pub fn x_count(&self, n: i64) -> u64 {
        self.residue_counts[n.rem_euclid(12) as usize]
    }

    pub fn row(&self, n: i64) -> CountsRow {
        let x_count = self.x_count(n);
        let m = m_full(self.t, n);
        CountsRow { t: self.t, n, x_count, m, p: x_count as i64 - m as i64 }
    }

    pub fn p_count(&self, n: i64) -> Result<u64> {
        let row = self.row(n);
        u64::try_from(row.p).map_err(|_| Error::NegativeCount { t: self.t, n, x_count: row.x_count, m: row.m })
    }

    /// Rows `n, n+1, …, n+11`.
    pub fn window(&self, n: i64) -> Vec<CountsRow> {
        (n..n + 12).map(|k| self.row(k)).collect()
    }

    /// `Σ_{j=0}^{11} p_{t,n+j}`.
    pub fn p_window_sum(&self, n: i64) -> Result<u64> {
        (n..n + 12).map(|k| self.p_count(k)).sum()
    }
}

pub fn x_count(t: i64, n: i64) -> Result<u64> {
    Ok(TraceCounts::new(t)?.x_count(n))
}

/// `|X_{t,n}| - M_{t,n}`, the number of braid-index-3 links with writhe `n`
/// and special value `iⁿ(t - 2)`.
pub fn p_count(t: i64, n: i64) -> Result<u64> {
    TraceCounts::new(t)?.p_count(n)
}

pub fn counts_row(t: i64, n: i64) -> Result<CountsRow> {
    Ok(TraceCounts::new(t)?.row(n))
}

/// Both sides of the class-number identity for one window.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MainReport {
    pub t: i64,
    pub n: i64,
    pub h_lhs: u64,
    pub window_rhs: i64,
    pub nonnegative: bool,
    pub pass: bool,
    pub rows: Vec<CountsRow>,
}

impl MainReport {
    pub fn x_total(&self) -> u64 {
        self.rows.iter().map(|r| r.x_count).sum()
    }
    pub fn m_total(&self) -> u64 {
        self.rows.iter().map(|r| r.m).sum()
    }
    pub fn p_total(&self) -> i64 {
        self.rows.iter().map(|r| r.p).sum()
    }
}

/// Checks `h(t) = Σ_{j=0}^{11} (p_{t,n+j} + M_{t,n+j})`; the left side is
/// recounted from the form enumeration.
pub fn verify_main(t: i64, n: i64) -> Result<MainReport> {
    let h_lhs = quadforms::class_number_h(t)?;
    Ok(main_report(&TraceCounts::new(t)?, h_lhs, n))
}

pub(crate) fn main_report(tc: &TraceCounts, h_lhs: u64, n: i64) -> MainReport {
    let rows = tc.window(n);
    let window_rhs = rows.iter().map(|r| r.p + r.m as i64).sum();
    let nonnegative = rows.iter().all(|r| r.p >= 0);
    MainReport {
        t: tc.t(),
        n,
        h_lhs,
        window_rhs,
        nonnegative,
        pass: nonnegative && window_rhs == h_lhs as i64,
        rows,
    }
}

/// The writhe `n = -|t - 3| - 24`, safely below every exceptional cell.
pub fn default_window_start(t: i64) -> i64 {
    -(t - 3).abs() - 24
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymmetryReport {
    pub t: i64,
    pub n: i64,
    pub lhs: u64,
    pub rhs: u64,
    pub pass: bool,
}

/// Checks `Σ_{j=0}^{11} p_{t,n+j} = Σ_{j=0}^{11} p_{-t,n+6+j}` for
/// `n < -|t + 3| - 17`.
pub fn verify_symmetry(t: i64, n: i64) -> Result<SymmetryReport> {
    check_trace(t)?;
    if n >= -(t + 3).abs() - 17 {
        return Err(Error::InvalidParameters(format!(
            "symmetry needs n < -|t + 3| - 17 = {}, got n = {n}",
            -(t + 3).abs() - 17
        )));
    }
    let lhs = TraceCounts::new(t)?.p_window_sum(n)?;
    let rhs = TraceCounts::new(-t)?.p_window_sum(n + 6)?;
    Ok(SymmetryReport { t, n, lhs, rhs, pass: lhs == rhs })
}

/// Distinct braid conjugacy classes found by enumerating every word up to a
/// given length, bucketed by `(trace, exponent)`.
///
/// Two words with the same exponent sum are conjugate in `B₃` exactly when
/// their images are conjugate in `SL₂(ℤ)`, so each bucket is keyed by the form
/// class of the image. Every count is a lower bound for `|X_{t,n}|`.
#[derive(Clone, Debug)]
pub struct Census {
    max_len: usize,
    cells: BTreeMap<(i64, i64), HashSet<FormClassKey>>,
}

impl Census {
    /// Enumerates all words of length `≤ max_len` in `σ₁^{±1}, σ₂^{±1}`
    /// and keeps those with `|trace| ≤ t_bound` and exponent in
    /// `n_range`. Sharded over the first two letters.
    pub fn run(max_len: usize, t_bound: i64, n_range: (i64, i64)) -> Result<Self> {
        if max_len == 0 {
            return Err(Error::InvalidParameters("census length must be at least 1".into()));
        }
        let mut prefixes: Vec<Vec<Letter>> = vec![vec![]];
        for l in Letter::ALL {
            prefixes.push(vec![l]);
            if max_len >= 2 {
                for l2 in Letter::ALL {
                    prefixes.push(vec![l, l2]);
                }
            }
        }
        let filter = CensusFilter { max_len, t_bound, n_lo: n_range.0, n_hi: n_range.1 };
        let found: HashSet<(i64, Mat2Z)> = prefixes
            .par_iter()
            .map(|prefix| {
                let mut out = HashSet::new();
                let mut m = Mat2Z::IDENTITY;
                let mut eps = 0;
                for l in prefix {
                    m = m.try_mul(&l.matrix())?;
                    eps += l.exponent();
                }
                // Only prefixes of full shard length recurse; shorter ones
                // contribute themselves.
                let shard_len = max_len.min(2);
                if prefix.len() < shard_len {
                    filter.record(&mut out, &m, eps)?;
                } else {
                    filter.descend(&mut out, m, eps, prefix.len())?;
                }
                Ok(out)
            })
            .try_reduce(HashSet::new, |mut a, b| {
                a.extend(b);
                Ok(a)
            })?;

        let mut cells: BTreeMap<(i64, i64), HashSet<FormClassKey>> = BTreeMap::new();
        for (eps, m) in found {
            let key = quadforms::reduce(&quadforms::ccc_form(&m)?)?;
            cells.entry((m.trace()?, eps)).or_default().insert(key);
        }
        Ok(Self { max_len, cells })
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    pub fn count(&self, t: i64, n: i64) -> u64 {
        self.cells.get(&(t, n)).map_or(0, |s| s.len() as u64)
    }

    pub fn cells(&self) -> impl Iterator<Item = ((i64, i64), u64)> + '_ {
        self.cells.iter().map(|(&k, v)| (k, v.len() as u64))
    }
}

struct CensusFilter {
    max_len: usize,
    t_bound: i64,
    n_lo: i64,
    n_hi: i64,
}

impl CensusFilter {
    fn record(&self, out: &mut HashSet<(i64, Mat2Z)>, m: &Mat2Z, eps: i64) -> Result<()> {
        let t = m.trace()?;
        if (self.n_lo..=self.n_hi).contains(&eps) && t.abs() <= self.t_bound && t != 2 && t != -2 {
            out.insert((eps, *m));
        }
        Ok(())
    }

    fn descend(&self, out: &mut HashSet<(i64, Mat2Z)>, m: Mat2Z, eps: i64, len: usize) -> Result<()> {
        let remaining = (self.max_len - len) as i64;
        if eps - remaining > self.n_hi || eps + remaining < self.n_lo {
            return Ok(());
        }
        self.record(out, &m, eps)?;
        if remaining == 0 {
            return Ok(());
        }
        for l in Letter::ALL {
            self.descend(out, m.try_mul(&l.matrix())?, eps + l.exponent(), len + 1)?;
        }
        Ok(())
    }
}

/// Lower bound for `|X_{t,n}|` from all words of length `≤ max_len`.
pub fn braid_census(t: i64, n: i64, max_len: usize) -> Result<u64> {
    check_trace(t)?;
    Ok(Census::run(max_len, t.abs(), (n, n))?.count(t, n))
}
