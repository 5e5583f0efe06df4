//! Low-weight dual codewords from column dependencies.
//!
//! A dual codeword with support exactly S is a dependency among the columns in S with all
//! coefficients nonzero. The number of such codewords follows by inclusion-exclusion over
//! subsets T of S, since the dependencies supported inside T form a space of dimension
//! |T| - rank(T). Sets of independent columns carry none and are skipped after one
//! incremental rank update.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{EnumOptions, LinearCode};
use crate::error::{Error, Result};
use crate::gf::{Elem, FieldCtx};
use crate::linalg;

/// Largest number of column subsets a search may visit.
pub const MAX_SUBSETS: u128 = 100_000_000;

/// Largest weight the subset search handles.
pub const MAX_DUAL_WEIGHT: u32 = 5;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualLowWeightReport {
    pub n: usize,
    pub w_max: u32,
    /// Least w <= w_max carrying a dual codeword; None if d^perp > w_max.
    pub d_perp: Option<u32>,
    /// A^perp_w for w = 1..=w_max.
    pub counts: BTreeMap<u32, u128>,
    /// Distinct supports for each w with A^perp_w > 0.
    pub supports: BTreeMap<u32, Vec<Vec<u32>>>,
    /// Largest number of projective dual codewords sharing one support.
    pub max_per_support: u128,
}

impl DualLowWeightReport {
    pub fn count(&self, w: u32) -> u128 {
        self.counts.get(&w).copied().unwrap_or(0)
    }

    /// Counts A^perp_1..A^perp_w_max in order, for the moment solver.
    pub fn count_vec(&self) -> Vec<u128> {
        (1..=self.w_max).map(|w| self.count(w)).collect()
    }
}

pub(crate) fn binom(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) / (i + 1))
}

/// Incremental echelon form of column vectors.
#[derive(Clone)]
struct Echelon {
    rows: Vec<(usize, Vec<Elem>)>,
}

impl Echelon {
    fn insert(&mut self, f: &FieldCtx, v: &[Elem]) -> bool {
        let mut v = v.to_vec();
        for (piv, row) in &self.rows {
            let c = v[*piv];
            if c.is_zero() {
                continue;
            }
            let nc = f.neg(c);
            for (x, &r) in v.iter_mut().zip(row) {
                *x = f.add(*x, f.mul(nc, r));
            }
        }
        match v.iter().position(|x| !x.is_zero()) {
            Some(piv) => {
                let inv = f.inv(v[piv]).expect("nonzero pivot");
                for x in v.iter_mut() {
                    *x = f.mul(*x, inv);
                }
                self.rows.push((piv, v));
                true
            }
            None => false,
        }
    }
}

/// Dual codewords whose support is exactly `set`.
fn exact_support_count(f: &FieldCtx, cols: &[Vec<Elem>], set: &[usize]) -> i128 {
    let q = f.order() as i128;
    let w = set.len();
    let mut total: i128 = 0;
    for mask in 0u32..(1 << w) {
        let sub: Vec<&[Elem]> = (0..w).filter(|i| mask >> i & 1 == 1).map(|i| cols[set[i]].as_slice()).collect();
        let size = sub.len();
        let nullity = size - linalg::column_rank(f, &sub);
        let term = q.pow(nullity as u32);
        if (w - size) % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

struct Found {
    count: u128,
    max_per_support: u128,
    supports: Vec<Vec<u32>>,
}

fn search_exact(code: &LinearCode, w: usize, pool: &rayon::ThreadPool) -> Found {
    let f = code.field();
    let n = code.n();
    let cols: Vec<Vec<Elem>> = (0..n).map(|j| code.column(j)).collect();
    let q1 = code.alphabet_size() as u128 - 1;

    fn dfs(
        f: &FieldCtx,
        cols: &[Vec<Elem>],
        w: usize,
        start: usize,
        chosen: &mut Vec<usize>,
        ech: &Echelon,
        independent: bool,
        out: &mut Vec<(Vec<u32>, u128)>,
    ) {
        if chosen.len() == w {
            if !independent {
                let c = exact_support_count(f, cols, chosen);
                if c > 0 {
                    out.push((chosen.iter().map(|&i| i as u32).collect(), c as u128));
                }
            }
            return;
        }
        let n = cols.len();
        for j in start..=n - (w - chosen.len()) {
            let mut next = ech.clone();
            let still = independent && next.insert(f, &cols[j]);
            chosen.push(j);
            dfs(f, cols, w, j + 1, chosen, &next, still, out);
            chosen.pop();
        }
    }

    let hits: Vec<(Vec<u32>, u128)> = pool.install(|| {
        (0..=n - w)
            .into_par_iter()
            .flat_map_iter(|first| {
                let mut ech = Echelon { rows: Vec::new() };
                let indep = ech.insert(f, &cols[first]);
                let mut out = Vec::new();
                let mut chosen = vec![first];
                dfs(f, &cols, w, first + 1, &mut chosen, &ech, indep, &mut out);
                out
            })
            .collect()
    });
    let count = hits.iter().map(|(_, c)| c).sum();
    let max_per_support = hits.iter().map(|(_, c)| c / q1).max().unwrap_or(0);
    let supports = hits.into_iter().map(|(s, _)| s).collect();
    Found { count, max_per_support, supports }
}

fn check_subset_bound(n: usize, w_max: u32) -> Result<()> {
    let needed: u128 = (1..=w_max as u128).map(|w| binom(n as u128, w)).sum();
    if needed > MAX_SUBSETS {
        return Err(Error::EnumerationBound { needed, limit: MAX_SUBSETS });
    }
    Ok(())
}

/// All dual codewords of weight at most `w_max`, found by column-subset search.
pub fn dual_low_weight_search(code: &LinearCode, w_max: u32, opts: &EnumOptions) -> Result<DualLowWeightReport> {
    if w_max == 0 || w_max > MAX_DUAL_WEIGHT {
        return Err(Error::InvalidParameters(format!("w_max must be in 1..={MAX_DUAL_WEIGHT}")));
    }
    let n = code.n();
    let w_max = w_max.min(n as u32);
    check_subset_bound(n, w_max)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.workers.max(1))
        .build()
        .map_err(|e| Error::InvalidParameters(format!("thread pool: {e}")))?;
    let mut report = DualLowWeightReport {
        n,
        w_max,
        d_perp: None,
        counts: BTreeMap::new(),
        supports: BTreeMap::new(),
        max_per_support: 0,
    };
    for w in 1..=w_max {
        let found = search_exact(code, w as usize, &pool);
        report.counts.insert(w, found.count);
        if found.count > 0 {
            report.d_perp.get_or_insert(w);
            report.max_per_support = report.max_per_support.max(found.max_per_support);
            report.supports.insert(w, found.supports);
        }
    }
    Ok(report)
}

/// d^perp by searching weights 1, 2, ... up to `w_max`, stopping at the first hit.
pub fn dual_min_distance(code: &LinearCode, w_max: u32, opts: &EnumOptions) -> Result<Option<u32>> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.workers.max(1))
        .build()
        .map_err(|e| Error::InvalidParameters(format!("thread pool: {e}")))?;
    for w in 1..=w_max.min(MAX_DUAL_WEIGHT).min(code.n() as u32) {
        check_subset_bound(code.n(), w)?;
        if search_exact(code, w as usize, &pool).count > 0 {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::{weight_distribution_per_codeword, WeightDistribution};
    use crate::gf::FieldCtx;
    use std::sync::Arc;

    fn dual_code(code: &LinearCode) -> LinearCode {
        let f = FieldCtx::new(code.field().p(), code.field().m(), Some(&code.field().spec().modulus)).unwrap();
        LinearCode::from_generator(Arc::new(f), code.parity_check().clone()).unwrap()
    }

    fn low_counts(d: &WeightDistribution, w_max: u32) -> Vec<u128> {
        (1..=w_max).map(|w| d.get(w)).collect()
    }

    #[test]
    fn matches_enumeration_of_the_dual() {
        // duals small enough to enumerate directly
        for code in [
            LinearCode::extended(2, 3, 1).unwrap(),
            LinearCode::extended(2, 3, 2).unwrap(),
            LinearCode::extended(3, 2, 1).unwrap(),
        ] {
            let rep = dual_low_weight_search(&code, 5, &EnumOptions::default()).unwrap();
            let full = weight_distribution_per_codeword(&dual_code(&code), &EnumOptions::default()).unwrap();
            assert_eq!(rep.count_vec(), low_counts(&full, 5), "{:?}", code.family());
            assert_eq!(rep.d_perp, full.min_distance().filter(|&d| d <= 5));
        }
    }

    #[test]
    fn table_values() {
        let o = EnumOptions::with_workers(2);
        let rep = dual_low_weight_search(&LinearCode::extended(2, 4, 2).unwrap(), 4, &o).unwrap();
        assert_eq!(rep.d_perp, Some(4));
        assert_eq!(rep.count(4), 16 * 15 * 15 * 14 / 24);
        assert_eq!(rep.supports[&4].len(), 140);
        assert_eq!(rep.max_per_support, 1);

        let rep = dual_low_weight_search(&LinearCode::extended(3, 3, 2).unwrap(), 3, &o).unwrap();
        assert_eq!(rep.d_perp, Some(3));
        assert_eq!(rep.count(3), 3042);

        let rep = dual_low_weight_search(&LinearCode::circle(3, 2, 1).unwrap(), 4, &o).unwrap();
        assert_eq!(rep.d_perp, Some(4));
        assert_eq!(rep.count(4), 100 * 9 * 64 / 24);
        assert_eq!(dual_min_distance(&LinearCode::circle(3, 2, 1).unwrap(), 5, &o).unwrap(), Some(4));
    }

    #[test]
    fn bounds() {
        let code = LinearCode::extended(2, 4, 2).unwrap();
        assert!(dual_low_weight_search(&code, 6, &EnumOptions::default()).is_err());
        assert!(dual_low_weight_search(&code, 0, &EnumOptions::default()).is_err());
        assert_eq!(binom(243, 3), 2_362_041);
    }
}
