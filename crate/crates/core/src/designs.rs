//! Support designs: extraction, t-design verification, the dependency constructions for the
//! dual codes, and the Assmus-Mattson test.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::codes::{
    dual_low_weight_search, extended_labels, supports_of_weight, weight_distribution_brute, DualLowWeightReport,
    EnumOptions, LinearCode, WeightDistribution,
};
use crate::error::{Error, Result};
use crate::gf::{Elem, FieldCtx};

/// Largest number of t-subsets a verification will tabulate.
pub const MAX_T_SUBSETS: u64 = 100_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Design {
    pub n_points: usize,
    pub kappa: usize,
    pub blocks: Vec<Vec<u32>>,
    pub t: u32,
    pub lambda: Option<u64>,
    pub verified: bool,
}

/// Result of counting t-subset containments.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum TCheck {
    Holds { lambda: u64 },
    /// `subset` lies in `count` blocks while the first t-subset lies in `expected`.
    Fails { subset: Vec<u32>, count: u64, expected: u64 },
}

impl TCheck {
    pub fn lambda(&self) -> Option<u64> {
        match self {
            TCheck::Holds { lambda } => Some(*lambda),
            TCheck::Fails { .. } => None,
        }
    }
}

fn binom_table(n: usize, t: usize) -> Vec<Vec<u64>> {
    let mut c = vec![vec![0u64; t + 1]; n + 1];
    for row in c.iter_mut() {
        row[0] = 1;
    }
    for i in 1..=n {
        for j in 1..=t {
            c[i][j] = c[i - 1][j - 1] + c[i - 1][j];
        }
    }
    c
}

pub fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

fn rank_subset(c: &[Vec<u64>], s: &[u32]) -> usize {
    s.iter().enumerate().map(|(i, &x)| c[x as usize][i + 1]).sum::<u64>() as usize
}

fn unrank_subset(c: &[Vec<u64>], mut idx: u64, t: usize) -> Vec<u32> {
    let mut out = vec![0u32; t];
    for i in (1..=t).rev() {
        let mut x = i - 1;
        while x + 1 < c.len() && c[x + 1][i] <= idx {
            x += 1;
        }
        idx -= c[x][i];
        out[i - 1] = x as u32;
    }
    out
}

fn for_each_subset(block: &[u32], t: usize, start: usize, cur: &mut Vec<u32>, f: &mut impl FnMut(&[u32])) {
    if cur.len() == t {
        f(cur);
        return;
    }
    for i in start..=block.len() - (t - cur.len()) {
        cur.push(block[i]);
        for_each_subset(block, t, i + 1, cur, f);
        cur.pop();
    }
}

/// Counts, for every t-subset of the points, how many blocks contain it.
pub fn verify_t_design(blocks: &[Vec<u32>], n_points: usize, t: u32) -> Result<TCheck> {
    let t = t as usize;
    let Some(first) = blocks.first() else {
        return Err(Error::InvalidDesign("no blocks".into()));
    };
    let kappa = first.len();
    if blocks.iter().any(|b| b.len() != kappa) {
        return Err(Error::NonUniformBlocks);
    }
    if t == 0 || t > kappa {
        return Err(Error::InvalidDesign(format!("need 1 <= t <= block size {kappa}")));
    }
    for b in blocks {
        if b.windows(2).any(|w| w[0] >= w[1]) || b.iter().any(|&x| x as usize >= n_points) {
            return Err(Error::InvalidDesign("blocks must be sorted, repetition-free and in range".into()));
        }
    }
    let total = binom(n_points as u64, t as u64);
    if total > MAX_T_SUBSETS {
        return Err(Error::EnumerationBound { needed: total as u128, limit: MAX_T_SUBSETS as u128 });
    }
    let c = binom_table(n_points, t);
    let mut counts = vec![0u32; total as usize];
    let mut cur = Vec::with_capacity(t);
    for b in blocks {
        for_each_subset(b, t, 0, &mut cur, &mut |s| counts[rank_subset(&c, s)] += 1);
    }
    let expected = counts[0] as u64;
    if let Some(bad) = counts.iter().position(|&x| x as u64 != expected) {
        return Ok(TCheck::Fails { subset: unrank_subset(&c, bad as u64, t), count: counts[bad] as u64, expected });
    }
    if expected == 0 {
        let subset = unrank_subset(&c, 0, t);
        return Ok(TCheck::Fails { subset, count: 0, expected: 0 });
    }
    Ok(TCheck::Holds { lambda: expected })
}

pub fn is_simple(blocks: &[Vec<u32>]) -> bool {
    let set: BTreeSet<&Vec<u32>> = blocks.iter().collect();
    set.len() == blocks.len()
}

impl Design {
    /// Verifies `blocks` at strength t and records the outcome.
    pub fn from_blocks(n_points: usize, mut blocks: Vec<Vec<u32>>, t: u32) -> Result<Self> {
        for b in blocks.iter_mut() {
            b.sort_unstable();
        }
        blocks.sort();
        if !is_simple(&blocks) {
            return Err(Error::InvalidDesign("repeated blocks".into()));
        }
        let kappa = blocks.first().map_or(0, |b| b.len());
        let check = verify_t_design(&blocks, n_points, t)?;
        Ok(Self { n_points, kappa, blocks, t, lambda: check.lambda(), verified: check.lambda().is_some() })
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Header "t k n lambda", then one block per line.
    pub fn to_block_text(&self) -> String {
        let lambda = self.lambda.map_or_else(|| "?".to_string(), |l| l.to_string());
        let mut s = format!("{} {} {} {}\n", self.t, self.kappa, self.n_points, lambda);
        for b in &self.blocks {
            let line: Vec<String> = b.iter().map(|x| x.to_string()).collect();
            s.push_str(&line.join(" "));
            s.push('\n');
        }
        s
    }

    /// Parses the block-list text format and re-verifies the design.
    pub fn from_block_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header: Vec<&str> = lines
            .next()
            .ok_or_else(|| Error::InvalidDesign("empty input".into()))?
            .split_whitespace()
            .collect();
        let parse = |s: &str| s.parse::<u64>().map_err(|_| Error::InvalidDesign(format!("bad number {s:?}")));
        if header.len() != 4 {
            return Err(Error::InvalidDesign("header must be \"t k n lambda\"".into()));
        }
        let t = parse(header[0])? as u32;
        let n = parse(header[2])? as usize;
        let blocks = lines
            .map(|l| l.split_whitespace().map(|x| parse(x).map(|v| v as u32)).collect::<Result<Vec<u32>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::from_blocks(n, blocks, t)
    }

    /// JSON with each point index mapped to its field-element label.
    pub fn to_json(&self, labels: &[Elem]) -> serde_json::Value {
        serde_json::json!({
            "t": self.t,
            "kappa": self.kappa,
            "n_points": self.n_points,
            "lambda": self.lambda,
            "verified": self.verified,
            "column_labels": labels.iter().map(|x| x.0).collect::<Vec<_>>(),
            "blocks": self.blocks,
        })
    }

    /// The block-count relations |B| (Q-1) = A_kappa and lambda C(n,t) = C(kappa,t) |B|.
    pub fn block_count_relation(&self, a_kappa: u128, alphabet: u64) -> bool {
        let b = self.blocks.len() as u128;
        let first = b * (alphabet as u128 - 1) == a_kappa;
        let second = self.lambda.is_some_and(|l| {
            l as u128 * binom(self.n_points as u64, self.t as u64) as u128
                == binom(self.kappa as u64, self.t as u64) as u128 * b
        });
        first && second
    }
}

/// Supports of the weight-w codewords, verified at strength t.
pub fn support_design(code: &LinearCode, w: u32, t: u32, opts: &EnumOptions) -> Result<Design> {
    let blocks = supports_of_weight(code, w, opts)?;
    if blocks.is_empty() {
        return Err(Error::InvalidDesign(format!("no codewords of weight {w}")));
    }
    Design::from_blocks(code.n(), blocks, t)
}

/// Weight-w supports of the dual, verified at strength t.
pub fn dual_support_design(code: &LinearCode, w: u32, t: u32, opts: &EnumOptions) -> Result<Design> {
    let rep = dual_low_weight_search(code, w, opts)?;
    let blocks = rep.supports.get(&w).cloned().unwrap_or_default();
    if blocks.is_empty() {
        return Err(Error::InvalidDesign(format!("no dual codewords of weight {w}")));
    }
    Design::from_blocks(code.n(), blocks, t)
}

fn label_positions(f: &FieldCtx) -> Vec<u32> {
    let mut pos = vec![0u32; f.order() as usize];
    for (i, x) in extended_labels(f).iter().enumerate() {
        pos[x.0 as usize] = i as u32;
    }
    pos
}

/// Blocks {x1, x2, x3, x1+x2+x3} over GF(2^m), indexed like the extended code's columns.
pub fn steiner_blocks_binary(m: u32) -> Result<Design> {
    if m < 2 {
        return Err(Error::InvalidParameters("need q = 2^m with m >= 2".into()));
    }
    let f = FieldCtx::conway(2, m)?;
    let q = f.order();
    let pos = label_positions(&f);
    let mut blocks = BTreeSet::new();
    for x1 in 0..q {
        for x2 in x1 + 1..q {
            for x3 in x2 + 1..q {
                let x4 = x1 ^ x2 ^ x3;
                if x4 > x3 {
                    let mut b = vec![pos[x1 as usize], pos[x2 as usize], pos[x3 as usize], pos[x4 as usize]];
                    b.sort_unstable();
                    blocks.insert(b);
                }
            }
        }
    }
    Design::from_blocks(q as usize, blocks.into_iter().collect(), 3)
}

/// Blocks {x1, x2, a x1 + (1-a) x2} for a in GF(p) \ {0, 1}, indexed like the extended code's columns.
pub fn triple_blocks_odd(p: u32, m: u32) -> Result<Design> {
    if p == 2 {
        return Err(Error::InvalidParameters("the triple construction needs p odd".into()));
    }
    let f = FieldCtx::conway(p, m)?;
    let pos = label_positions(&f);
    let mut blocks = BTreeSet::new();
    for x1 in f.elements() {
        for x2 in f.elements().filter(|&x| x > x1) {
            for a in 2..p {
                let a = Elem(a);
                let one_minus_a = f.sub(Elem::ONE, a);
                let x3 = f.add(f.mul(a, x1), f.mul(one_minus_a, x2));
                let mut b = vec![pos[x1.0 as usize], pos[x2.0 as usize], pos[x3.0 as usize]];
                b.sort_unstable();
                blocks.insert(b);
            }
        }
    }
    Design::from_blocks(f.order() as usize, blocks.into_iter().collect(), 2)
}

/// Weight-4 supports of the unit-circle code's dual, verified as a 3-design.
pub fn circle_dual_design(p: u32, m: u32, s: u32, opts: &EnumOptions) -> Result<Design> {
    let code = LinearCode::circle(p, m, s)?;
    dual_support_design(&code, 4, 3, opts)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AmReport {
    pub n: usize,
    pub d: u32,
    pub d_perp: u32,
    pub w: u32,
    pub w_perp: u32,
    /// Largest t < d passing the weight-count condition.
    pub t_max: Option<u32>,
    /// Weights of C in [d, w] whose supports hold t_max-designs.
    pub design_weights: Vec<u32>,
    /// Weights of the dual in [d_perp, w_perp] known to carry codewords.
    pub design_weights_dual: Vec<u32>,
}

/// Largest w <= n with w - floor((w + Q - 1)/(Q - 2)) < d. For Q = 2 every w qualifies.
pub fn am_bound(n: u32, d: u32, alphabet: u64) -> u32 {
    if alphabet == 2 {
        return n;
    }
    let q = alphabet as i64;
    (0..=n)
        .rev()
        .find(|&w| (w as i64) - (w as i64 + q - 1) / (q - 2) < d as i64)
        .unwrap_or(0)
}

pub fn assmus_mattson(
    primal: &WeightDistribution,
    dual: &DualLowWeightReport,
    d: u32,
    d_perp: u32,
    alphabet: u64,
) -> Result<AmReport> {
    if primal.n != dual.n {
        return Err(Error::DimensionMismatch { expected: primal.n, got: dual.n });
    }
    if alphabet < 2 {
        return Err(Error::InvalidParameters("alphabet must have at least 2 elements".into()));
    }
    let n = primal.n as u32;
    let weights = primal.nonzero_weights();
    let t_max = (1..d)
        .filter(|&t| {
            let s = weights.iter().filter(|&&w| w <= n - t).count() as i64;
            s <= d_perp as i64 - t as i64
        })
        .max();
    let w = am_bound(n, d, alphabet);
    let w_perp = am_bound(n, d_perp, alphabet);
    let design_weights = weights.iter().copied().filter(|&x| x >= d && x <= w).collect();
    let design_weights_dual = dual
        .counts
        .iter()
        .filter(|(&x, &c)| c > 0 && x >= d_perp && x <= w_perp)
        .map(|(&x, _)| x)
        .collect();
    Ok(AmReport { n: n as usize, d, d_perp, w, w_perp, t_max, design_weights, design_weights_dual })
}

/// Outcome of the 3-design probe on minimum-weight supports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProbeReport {
    pub p: u32,
    pub m: u32,
    pub h: u32,
    pub n: usize,
    pub min_weight: u32,
    pub blocks: usize,
    pub check: TCheck,
}

pub fn min_weight_design_probe(p: u32, m: u32, h: u32, opts: &EnumOptions) -> Result<ProbeReport> {
    if p != 2 {
        return Err(Error::InvalidParameters("the probe concerns the binary-characteristic family".into()));
    }
    let code = LinearCode::extended(p, m, h)?;
    let wd = weight_distribution_brute(&code, opts)?;
    let d = wd.min_distance().expect("nonzero code");
    let blocks = supports_of_weight(&code, d, opts)?;
    let check = verify_t_design(&blocks, code.n(), 3)?;
    Ok(ProbeReport { p, m, h, n: code.n(), min_weight: d, blocks: blocks.len(), check })
}

/// Strength-2 verdict for the supports of every nonzero weight.
pub fn two_designs_all_weights(code: &LinearCode, opts: &EnumOptions) -> Result<Vec<(u32, TCheck)>> {
    let wd = weight_distribution_brute(code, opts)?;
    wd.nonzero_weights()
        .into_iter()
        .map(|w| {
            let blocks = supports_of_weight(code, w, opts)?;
            Ok((w, verify_t_design(&blocks, code.n(), 2)?))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_subsets(n: u32, k: usize) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        let pts: Vec<u32> = (0..n).collect();
        for_each_subset(&pts, k, 0, &mut Vec::new(), &mut |s| out.push(s.to_vec()));
        out
    }

    #[test]
    fn complete_design() {
        let blocks = all_subsets(7, 4);
        for t in 1..=4u32 {
            let lambda = binom(7 - t as u64, 4 - t as u64);
            assert_eq!(verify_t_design(&blocks, 7, t).unwrap(), TCheck::Holds { lambda });
        }
    }

    #[test]
    fn combinadic_round_trip() {
        let c = binom_table(10, 3);
        let mut seen = vec![false; 120];
        for s in all_subsets(10, 3) {
            let i = rank_subset(&c, &s);
            assert!(!seen[i]);
            seen[i] = true;
            assert_eq!(unrank_subset(&c, i as u64, 3), s);
        }
    }

    #[test]
    fn failures_are_reported() {
        let blocks = vec![vec![0, 1, 2], vec![0, 1, 3]];
        match verify_t_design(&blocks, 4, 2).unwrap() {
            TCheck::Fails { count, expected, .. } => assert_ne!(count, expected),
            other => panic!("{other:?}"),
        }
        assert_eq!(verify_t_design(&[vec![0, 1], vec![0, 1, 2]], 3, 1), Err(Error::NonUniformBlocks));
        assert!(Design::from_blocks(4, vec![vec![0, 1], vec![1, 0]], 1).is_err());
    }

    #[test]
    fn steiner_q8() {
        let d = steiner_blocks_binary(3).unwrap();
        assert_eq!(d.block_count(), 14);
        assert_eq!(d.lambda, Some(1));
        let code = LinearCode::extended(2, 3, 2).unwrap();
        let dual = dual_support_design(&code, 4, 3, &EnumOptions::default()).unwrap();
        assert_eq!(dual.blocks, d.blocks);
    }

    #[test]
    fn triples_q9() {
        let d = triple_blocks_odd(3, 2).unwrap();
        assert_eq!((d.block_count(), d.lambda), (12, Some(1)));
        assert!(triple_blocks_odd(2, 3).is_err());
    }

    #[test]
    fn example21_designs() {
        let o = EnumOptions::default();
        let code = LinearCode::circle(3, 2, 1).unwrap();
        let d = support_design(&code, 6, 3, &o).unwrap();
        assert_eq!((d.block_count(), d.lambda), (30, Some(5)));
        assert!(d.block_count_relation(2400, 81));
        let dual = circle_dual_design(3, 2, 1, &o).unwrap();
        assert_eq!((dual.block_count(), dual.lambda), (30, Some(1)));
    }

    #[test]
    fn assmus_mattson_example21() {
        let o = EnumOptions::default();
        let code = LinearCode::circle(3, 2, 1).unwrap();
        let wd = weight_distribution_brute(&code, &o).unwrap();
        let rep = dual_low_weight_search(&code, 4, &o).unwrap();
        let am = assmus_mattson(&wd, &rep, 6, 4, 81).unwrap();
        assert_eq!(am.t_max, Some(3));
        assert!(am.design_weights.contains(&6));
        assert_eq!(am.design_weights_dual, vec![4]);
    }

    #[test]
    fn assmus_mattson_fails_when_too_many_weights() {
        let wd = WeightDistribution {
            n: 10,
            counts: [(0, 1), (4, 1), (5, 1), (6, 1)].into_iter().collect(),
            source: crate::codes::WeightSource::BruteForce,
        };
        let dual = DualLowWeightReport {
            n: 10,
            w_max: 2,
            d_perp: Some(2),
            counts: [(1, 0), (2, 1)].into_iter().collect(),
            supports: Default::default(),
            max_per_support: 1,
        };
        assert_eq!(assmus_mattson(&wd, &dual, 4, 2, 4).unwrap().t_max, None);
    }

    #[test]
    fn am_bound_values() {
        assert_eq!(am_bound(16, 12, 16), 13);
        assert_eq!(am_bound(16, 4, 16), 4);
        assert_eq!(am_bound(8, 4, 2), 8);
    }

    #[test]
    fn block_text_round_trip() {
        let d = steiner_blocks_binary(3).unwrap();
        let text = d.to_block_text();
        assert!(text.starts_with("3 4 8 1\n"));
        assert_eq!(Design::from_block_text(&text).unwrap(), d);
        let labels = extended_labels(&FieldCtx::conway(2, 3).unwrap());
        assert_eq!(d.to_json(&labels)["blocks"].as_array().unwrap().len(), 14);
    }

    #[test]
    fn probe_base_case() {
        let r = min_weight_design_probe(2, 4, 2, &EnumOptions::default()).unwrap();
        // (q-4)(q-5)(q-6)/24 at q = 16
        assert_eq!(r.check, TCheck::Holds { lambda: 12 * 11 * 10 / 24 });
        assert_eq!(r.min_weight, 12);
    }
}
