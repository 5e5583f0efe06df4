//! Exhaustive weight enumeration.
//!
//! Every path walks projective representatives only (first nonzero coordinate 1) and scales
//! by Q-1 at the end. For the two structured families it goes further and groups all codewords
//! sharing a normalized non-constant part:
//!
//! * family 1: the roots of c + L(x) form a coset of ker L when -c lies in the image of L, so
//!   one GF(p)-rank per normalized L fixes the weights of all q(q-1) codewords c + lambda L;
//! * unit circle: c + lambda g(x) vanishes exactly where g takes the value -c/lambda, so one
//!   histogram of g over U_{q+1} fixes the weights of all Q(Q-1) codewords built on g.
//!
//! Both reduce the per-class cost from "encode and count" to "one small rank or histogram"
//! and shrink the number of classes by a factor of the alphabet size.

use std::collections::BTreeSet;

use rayon::prelude::*;

use super::{Family, LinearCode, WeightDistribution, WeightSource};
use crate::error::{Error, Result};
use crate::gf::{Elem, FieldCtx};
use crate::linalg;
use crate::linearized::{binary_rank, kernel_of_images, span_elements, Span};

/// Default cap on the number of projective message classes an enumeration may cover.
pub const MAX_ENUMERATION: u128 = 1 << 34;

const CHUNK: u64 = 1 << 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumOptions {
    /// Worker threads; 1 runs on a single thread.
    pub workers: usize,
    /// Maximum number of projective message classes.
    pub limit: u128,
}

impl Default for EnumOptions {
    fn default() -> Self {
        Self { workers: 1, limit: MAX_ENUMERATION }
    }
}

impl EnumOptions {
    pub fn with_workers(workers: usize) -> Self {
        Self { workers: workers.max(1), ..Self::default() }
    }

    fn pool(&self) -> Result<rayon::ThreadPool> {
        rayon::ThreadPoolBuilder::new()
            .num_threads(self.workers.max(1))
            .build()
            .map_err(|e| Error::InvalidParameters(format!("thread pool: {e}")))
    }
}

/// (Q^k - 1)/(Q - 1), saturating.
pub fn projective_classes(alphabet: u64, k: usize) -> u128 {
    let q = alphabet as u128;
    let mut total: u128 = 0;
    let mut pw: u128 = 1;
    for _ in 0..k {
        total = total.saturating_add(pw);
        pw = pw.saturating_mul(q);
    }
    total
}

fn check_bound(code: &LinearCode, opts: &EnumOptions) -> Result<()> {
    let needed = projective_classes(code.alphabet_size(), code.k());
    if needed > opts.limit {
        return Err(Error::EnumerationBound { needed, limit: opts.limit });
    }
    Ok(())
}

/// Normalized vectors of length `len` over an alphabet of size `q`, indexed 0..count.
#[derive(Clone, Copy)]
struct Normalized {
    q: u64,
    len: usize,
}

impl Normalized {
    fn count(&self) -> u64 {
        projective_classes(self.q, self.len) as u64
    }

    fn decode(&self, mut idx: u64, out: &mut [Elem]) {
        let mut t = 0;
        loop {
            let block = self.q.pow((self.len - 1 - t) as u32);
            if idx < block {
                break;
            }
            idx -= block;
            t += 1;
        }
        out[..t].fill(Elem::ZERO);
        out[t] = Elem::ONE;
        for j in (t + 1..self.len).rev() {
            out[j] = Elem((idx % self.q) as u32);
            idx /= self.q;
        }
    }

    /// Parallel fold over all normalized vectors.
    fn fold<T, I, F, M>(&self, pool: &rayon::ThreadPool, init: I, f: F, merge: M) -> T
    where
        T: Send,
        I: Fn() -> T + Sync + Send,
        F: Fn(&mut T, &[Elem]) + Sync + Send,
        M: Fn(T, T) -> T + Sync + Send,
    {
        let total = self.count();
        let chunks = total.div_ceil(CHUNK);
        let this = *self;
        pool.install(|| {
            (0..chunks)
                .into_par_iter()
                .fold(&init, |mut acc, c| {
                    let mut v = vec![Elem::ZERO; this.len];
                    for i in c * CHUNK..total.min((c + 1) * CHUNK) {
                        this.decode(i, &mut v);
                        f(&mut acc, &v);
                    }
                    acc
                })
                .reduce(&init, &merge)
        })
    }
}

fn add_vecs<T: std::ops::AddAssign + Copy>(mut a: Vec<T>, b: Vec<T>) -> Vec<T> {
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
    a
}

fn union<T: Ord>(mut a: BTreeSet<T>, mut b: BTreeSet<T>) -> BTreeSet<T> {
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    a.extend(b);
    a
}

/// x^(p^i) for each polynomial-basis element x = p^j: `table[i][j]`.
fn frobenius_table(f: &FieldCtx, terms: usize) -> Vec<Vec<Elem>> {
    let p = f.p();
    (0..terms)
        .map(|i| (0..f.m()).map(|j| f.frobenius(Elem(p.pow(j)), i as u32)).collect())
        .collect()
}

fn images(f: &FieldCtx, frob: &[Vec<Elem>], a: &[Elem], out: &mut [Elem]) {
    out.fill(Elem::ZERO);
    for (&ai, row) in a.iter().zip(frob) {
        if ai.is_zero() {
            continue;
        }
        for (o, &x) in out.iter_mut().zip(row) {
            *o = f.add(*o, f.mul(ai, x));
        }
    }
}

fn image_rank(f: &FieldCtx, imgs: &[Elem]) -> u32 {
    if f.p() == 2 {
        binary_rank(imgs.iter().map(|x| x.0))
    } else {
        let mut span = Span::new(f);
        for &v in imgs {
            span.insert(v);
        }
        span.rank()
    }
}

/// Number of normalized linear parts of each GF(p)-rank, indexed by rank.
fn linear_rank_histogram(f: &FieldCtx, terms: usize, pool: &rayon::ThreadPool) -> Vec<u64> {
    let m = f.m() as usize;
    let frob = frobenius_table(f, terms);
    let norm = Normalized { q: f.order() as u64, len: terms };
    norm.fold(
        pool,
        || vec![0u64; m + 1],
        |hist, a| {
            let mut img = [Elem::ZERO; 32];
            images(f, &frob, a, &mut img[..m]);
            hist[image_rank(f, &img[..m]) as usize] += 1;
        },
        add_vecs,
    )
}

/// Exact weight distribution, choosing the grouped path for the structured families.
pub fn weight_distribution_brute(code: &LinearCode, opts: &EnumOptions) -> Result<WeightDistribution> {
    check_bound(code, opts)?;
    let pool = opts.pool()?;
    let n = code.n();
    let mut a = vec![0u128; n + 1];
    match code.family() {
        Family::ExtendedPrimitive { p, m, h } | Family::PuncturedCyclic { p, m, h } => {
            let punctured = matches!(code.family(), Family::PuncturedCyclic { .. });
            let f = code.field();
            let q = f.order() as u128;
            let hist = linear_rank_histogram(f, h as usize + 1, &pool);
            for (r, &cnt) in hist.iter().enumerate() {
                if cnt == 0 {
                    continue;
                }
                let cnt = cnt as u128 * (q - 1);
                let image = (p as u128).pow(r as u32);
                let roots = (p as u128).pow(m - r as u32);
                let qn = q as usize;
                if punctured {
                    a[qn - roots as usize] += cnt;
                    a[qn - 1 - roots as usize] += cnt * (image - 1);
                    a[qn - 1] += cnt * (q - image);
                } else {
                    a[qn - roots as usize] += cnt * image;
                    a[qn] += cnt * (q - image);
                }
            }
            a[n] += q - 1;
        }
        Family::UnitCircle { s, .. } => {
            let t = code.tower().expect("circle code carries its tower");
            let e = t.ext();
            let big_q = e.order() as u128;
            let xs = t.unit_circle();
            let xps: Vec<Elem> = xs.iter().map(|&x| e.frobenius(x, s)).collect();
            let xps1: Vec<Elem> = xs.iter().zip(&xps).map(|(&x, &y)| e.mul(x, y)).collect();
            let norm = Normalized { q: big_q as u64, len: 3 };
            let per_root = norm.fold(
                &pool,
                || vec![0u128; n + 2],
                |acc, abc| {
                    let mut vals: Vec<Elem> = (0..n)
                        .map(|i| e.sum([e.mul(abc[0], xs[i]), e.mul(abc[1], xps[i]), e.mul(abc[2], xps1[i])]))
                        .collect();
                    vals.sort_unstable();
                    let mut distinct = 0u128;
                    for run in vals.chunk_by(|x, y| x == y) {
                        acc[run.len()] += 1;
                        distinct += 1;
                    }
                    // values never taken: slot n + 1 collects "zero roots"
                    acc[n + 1] += big_q - distinct;
                },
                add_vecs,
            );
            for (mu, &cnt) in per_root.iter().enumerate().take(n + 1).skip(1) {
                a[n - mu] += cnt * (big_q - 1);
            }
            a[n] += per_root[n + 1] * (big_q - 1);
            a[n] += big_q - 1;
        }
        Family::Generic => return weight_distribution_per_codeword(code, opts),
    }
    a[0] = 1;
    Ok(finish(n, a))
}

fn finish(n: usize, a: Vec<u128>) -> WeightDistribution {
    let counts = a.into_iter().enumerate().filter(|(_, c)| *c > 0).map(|(w, c)| (w as u32, c)).collect();
    WeightDistribution { n, counts, source: WeightSource::BruteForce }
}

/// One encode per projective class. Works for any code; used as an independent cross-check.
pub fn weight_distribution_per_codeword(code: &LinearCode, opts: &EnumOptions) -> Result<WeightDistribution> {
    check_bound(code, opts)?;
    let pool = opts.pool()?;
    let f = code.field();
    let n = code.n();
    let q = code.alphabet_size() as u128;
    let norm = Normalized { q: q as u64, len: code.k() };
    let hist = norm.fold(
        &pool,
        || vec![0u128; n + 1],
        |acc, msg| {
            let w = linalg::vec_mat(f, msg, code.generator());
            acc[linalg::hamming_weight(&w) as usize] += 1;
        },
        add_vecs,
    );
    let mut a: Vec<u128> = hist.into_iter().map(|c| c * (q - 1)).collect();
    a[0] += 1;
    Ok(finish(n, a))
}

type Block = Vec<u32>;

fn complement(n: usize, zeros: &[u32]) -> Block {
    let mut mark = vec![false; n];
    for &z in zeros {
        mark[z as usize] = true;
    }
    (0..n as u32).filter(|&i| !mark[i as usize]).collect()
}

/// Distinct supports of the weight-w codewords, as sorted column-index lists in sorted order.
pub fn supports_of_weight(code: &LinearCode, w: u32, opts: &EnumOptions) -> Result<Vec<Block>> {
    let n = code.n();
    if w == 0 || w as usize > n {
        return Ok(Vec::new());
    }
    check_bound(code, opts)?;
    let pool = opts.pool()?;
    let zeros_wanted = n - w as usize;
    let zero_sets: BTreeSet<Block> = match code.family() {
        Family::ExtendedPrimitive { p, m, h } => {
            let f = code.field();
            if zeros_wanted == 0 {
                // constants are always present
                return Ok(vec![(0..n as u32).collect()]);
            }
            let Some(kd) = (0..=m).find(|&d| (p as usize).pow(d) == zeros_wanted) else {
                return Ok(Vec::new());
            };
            let mm = m as usize;
            let frob = frobenius_table(f, h as usize + 1);
            let norm = Normalized { q: f.order() as u64, len: h as usize + 1 };
            let kernels: BTreeSet<Block> = norm.fold(
                &pool,
                BTreeSet::new,
                |set, a| {
                    let mut img = [Elem::ZERO; 32];
                    images(f, &frob, a, &mut img[..mm]);
                    if m - image_rank(f, &img[..mm]) == kd {
                        let basis = kernel_of_images(f, &img[..mm]);
                        let mut ker: Block = span_elements(f, &basis).iter().map(|x| x.0).collect();
                        ker.sort_unstable();
                        set.insert(ker);
                    }
                },
                union,
            );
            let pos = label_index(code);
            let mut cosets = BTreeSet::new();
            for ker in &kernels {
                for shift in f.elements() {
                    let mut z: Block = ker.iter().map(|&k| pos[f.add(Elem(k), shift).0 as usize]).collect();
                    z.sort_unstable();
                    cosets.insert(z);
                }
            }
            cosets
        }
        Family::UnitCircle { s, .. } => {
            if zeros_wanted == 0 {
                return Ok(vec![(0..n as u32).collect()]);
            }
            let t = code.tower().expect("circle code carries its tower");
            let e = t.ext();
            let xs = t.unit_circle();
            let xps: Vec<Elem> = xs.iter().map(|&x| e.frobenius(x, s)).collect();
            let xps1: Vec<Elem> = xs.iter().zip(&xps).map(|(&x, &y)| e.mul(x, y)).collect();
            let norm = Normalized { q: e.order() as u64, len: 3 };
            norm.fold(
                &pool,
                BTreeSet::new,
                |set, abc| {
                    let mut vals: Vec<(Elem, u32)> = (0..n)
                        .map(|i| {
                            let v = e.sum([e.mul(abc[0], xs[i]), e.mul(abc[1], xps[i]), e.mul(abc[2], xps1[i])]);
                            (v, i as u32)
                        })
                        .collect();
                    vals.sort_unstable();
                    for run in vals.chunk_by(|x, y| x.0 == y.0) {
                        if run.len() == zeros_wanted {
                            set.insert(run.iter().map(|&(_, i)| i).collect());
                        }
                    }
                },
                union,
            )
        }
        Family::PuncturedCyclic { .. } | Family::Generic => {
            let f = code.field();
            let norm = Normalized { q: code.alphabet_size(), len: code.k() };
            norm.fold(
                &pool,
                BTreeSet::new,
                |set, msg| {
                    let word = linalg::vec_mat(f, msg, code.generator());
                    if linalg::hamming_weight(&word) == w {
                        set.insert((0..n as u32).filter(|&i| word[i as usize].is_zero()).collect());
                    }
                },
                union,
            )
        }
    };
    let mut out: Vec<Block> = zero_sets.iter().map(|z| complement(n, z)).collect();
    out.sort_unstable();
    Ok(out)
}

/// Column index of each field element, for codes whose labels cover the whole field.
fn label_index(code: &LinearCode) -> Vec<u32> {
    let mut pos = vec![u32::MAX; code.field().order() as usize];
    for (i, x) in code.column_labels().iter().enumerate() {
        pos[x.0 as usize] = i as u32;
    }
    pos
}
