//! Pless power moments solved exactly over the rationals.
//!
//! For r >= 0,
//!   sum_j j^r A_j = sum_{j=0}^{r} (-1)^j B_j sum_{v=j}^{r} v! S(r,v) Q^(k-v) (Q-1)^(v-j) C(n-j, n-v)
//! where B is the dual distribution and S the Stirling numbers of the second kind.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{dual_low_weight_search, EnumOptions, Family, LinearCode, WeightDistribution, WeightSource};
use crate::error::{Error, Result};

fn stirling2(r: usize) -> Vec<Vec<BigInt>> {
    let mut s = vec![vec![BigInt::zero(); r + 1]; r + 1];
    s[0][0] = BigInt::one();
    for i in 1..=r {
        for j in 1..=i {
            s[i][j] = BigInt::from(j) * &s[i - 1][j] + &s[i - 1][j - 1];
        }
    }
    s
}

fn binom(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

fn factorial(v: usize) -> BigInt {
    (1..=v).fold(BigInt::one(), |a, i| a * BigInt::from(i))
}

/// Right-hand side of the r-th moment. `dual[j]` is B_j, with `dual[0] = 1`.
pub fn pless_moment_rhs(n: u64, k: u32, alphabet: u64, r: usize, dual: &[BigInt]) -> Result<BigRational> {
    if dual.len() <= r.min(n as usize) {
        return Err(Error::MissingDualCounts { needed: r, got: dual.len().saturating_sub(1) });
    }
    let qq = BigRational::from_integer(BigInt::from(alphabet));
    let q1 = BigInt::from(alphabet - 1);
    let s = stirling2(r);
    let mut total = BigRational::zero();
    for j in 0..=r.min(n as usize) {
        let mut inner = BigRational::zero();
        for v in j..=r {
            if v as u64 > n {
                break;
            }
            let coef = factorial(v)
                * &s[r][v]
                * num_traits::pow(q1.clone(), v - j)
                * binom(n - j as u64, n - v as u64);
            let qpow = pow_signed(&qq, k as i64 - v as i64);
            inner += BigRational::from_integer(coef) * qpow;
        }
        let term = inner * BigRational::from_integer(dual[j].clone());
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    Ok(total)
}

fn pow_signed(x: &BigRational, e: i64) -> BigRational {
    if e >= 0 {
        num_traits::pow(x.clone(), e as usize)
    } else {
        num_traits::pow(x.recip(), (-e) as usize)
    }
}

/// Solves for A_w over the candidate nonzero `weights`, given B_1, B_2, ... in `dual_counts`.
///
/// Uses as many moments as unknowns; any further supplied dual counts are used to check
/// the extra moments for consistency.
pub fn solve_moments(
    n: usize,
    k: u32,
    alphabet: u64,
    weights: &[u32],
    dual_counts: &[u128],
) -> Result<WeightDistribution> {
    let mut ws: Vec<u32> = weights.to_vec();
    ws.sort_unstable();
    ws.dedup();
    if ws.len() != weights.len() || ws.iter().any(|&w| w == 0 || w as usize > n) {
        return Err(Error::InvalidParameters("weights must be distinct and in 1..=n".into()));
    }
    let u = ws.len();
    if u == 0 {
        return Err(Error::InvalidParameters("no candidate weights".into()));
    }
    if dual_counts.len() + 1 < u {
        return Err(Error::MissingDualCounts { needed: u - 1, got: dual_counts.len() });
    }
    let dual: Vec<BigInt> = std::iter::once(BigInt::one())
        .chain(dual_counts.iter().map(|&c| BigInt::from(c)))
        .collect();
    let rows = dual_counts.len().min(n) + 1;
    let mut system: Vec<(Vec<BigRational>, BigRational)> = Vec::with_capacity(rows);
    for r in 0..rows.max(u) {
        let lhs: Vec<BigRational> = ws
            .iter()
            .map(|&w| BigRational::from_integer(num_traits::pow(BigInt::from(w), r)))
            .collect();
        let mut rhs = pless_moment_rhs(n as u64, k, alphabet, r, &dual)?;
        if r == 0 {
            rhs -= BigRational::one();
        }
        system.push((lhs, rhs));
    }
    let sol = solve_square(&system[..u])?;
    for (lhs, rhs) in &system[u..] {
        let got: BigRational = lhs.iter().zip(&sol).map(|(a, x)| a * x).sum();
        if &got != rhs {
            return Err(Error::Hypothesis("moment system is inconsistent with the supplied dual counts".into()));
        }
    }
    let mut counts = BTreeMap::from([(0u32, 1u128)]);
    for (&w, a) in ws.iter().zip(&sol) {
        if !a.is_integer() || a.is_negative() {
            return Err(Error::NonIntegral(format!("A_{w} = {a}")));
        }
        let v = a
            .to_integer()
            .to_u128()
            .ok_or_else(|| Error::InvalidParameters(format!("A_{w} exceeds 128 bits")))?;
        if v > 0 {
            counts.insert(w, v);
        }
    }
    Ok(WeightDistribution { n, counts, source: WeightSource::MomentSolve })
}

fn solve_square(system: &[(Vec<BigRational>, BigRational)]) -> Result<Vec<BigRational>> {
    let u = system.len();
    let mut a: Vec<Vec<BigRational>> = system
        .iter()
        .map(|(l, r)| {
            let mut row = l.clone();
            row.push(r.clone());
            row
        })
        .collect();
    for c in 0..u {
        let piv = (c..u).find(|&i| !a[i][c].is_zero()).ok_or(Error::SingularSystem)?;
        a.swap(c, piv);
        let inv = a[c][c].recip();
        for x in a[c].iter_mut() {
            *x = &*x * &inv;
        }
        let prow = a[c].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == c || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&prow) {
                *x = &*x - &f * y;
            }
        }
    }
    Ok(a.into_iter().map(|row| row[u].clone()).collect())
}

/// Candidate nonzero weights from the root-count structure of the family.
///
/// Extended codes: q - p^j for j = 0..=h, and q. Unit-circle codes: q - p^l, q - 1, q, q + 1.
pub fn candidate_weights(family: Family) -> Result<Vec<u32>> {
    match family {
        Family::ExtendedPrimitive { p, m, h } => {
            let q = p.pow(m);
            let mut ws: Vec<u32> = (0..=h).map(|j| q - p.pow(j)).collect();
            ws.push(q);
            ws.sort_unstable();
            Ok(ws)
        }
        Family::UnitCircle { p, m, s } => {
            let q = p.pow(m);
            let pl = p.pow(num_integer::gcd(m, s));
            Ok(vec![q - pl, q - 1, q, q + 1])
        }
        _ => Err(Error::Hypothesis("no candidate weight set for this family".into())),
    }
}

/// Weight distribution from the moment identities, with the needed dual counts measured by
/// column-subset search.
pub fn weight_distribution_moments(code: &LinearCode, opts: &EnumOptions) -> Result<WeightDistribution> {
    let ws = candidate_weights(code.family())?;
    let w_max = (ws.len() as u32 - 1).max(1);
    let dual = dual_low_weight_search(code, w_max, opts)?;
    solve_moments(code.n(), code.k() as u32, code.alphabet_size(), &ws, &dual.count_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::{weight_distribution_closed, EnumeratorForm};

    #[test]
    fn first_moments_match_textbook() {
        // r = 1: Q^(k-1) ((Q-1) n - B_1)
        let dual = vec![BigInt::one(), BigInt::from(5)];
        let got = pless_moment_rhs(10, 3, 4, 1, &dual).unwrap();
        assert_eq!(got, BigRational::from_integer(BigInt::from(16 * (3 * 10 - 5))));
        let got = pless_moment_rhs(10, 3, 4, 0, &dual).unwrap();
        assert_eq!(got, BigRational::from_integer(BigInt::from(64)));
    }

    #[test]
    fn circle_q9() {
        let d = solve_moments(10, 4, 81, &[6, 8, 9, 10], &[0, 0, 0]).unwrap();
        let c = weight_distribution_closed(EnumeratorForm::Circle, 3, 2, 1).unwrap();
        assert!(d.same_counts(&c));
        assert_eq!(d.source, WeightSource::MomentSolve);
    }

    #[test]
    fn t17_and_t16() {
        let q: u128 = 16;
        let a4 = q * (q - 1) * (q - 1) * (q - 2) / 24;
        let d = solve_moments(16, 5, 16, &[8, 12, 14, 15, 16], &[0, 0, 0, a4]).unwrap();
        assert!(d.same_counts(&weight_distribution_closed(EnumeratorForm::BinaryH3, 2, 4, 3).unwrap()));
        let q: u128 = 27;
        let a3 = q * (q - 1) * (q - 1) / 6;
        let d = solve_moments(27, 4, 27, &[18, 24, 26, 27], &[0, 0, a3]).unwrap();
        assert!(d.same_counts(&weight_distribution_closed(EnumeratorForm::OddH2, 3, 3, 2).unwrap()));
    }

    #[test]
    fn wrong_inputs_are_rejected() {
        // a wrong dual count gives a non-integral or negative answer
        assert!(solve_moments(10, 4, 81, &[6, 8, 9, 10], &[0, 0, 1]).is_err());
        assert!(matches!(
            solve_moments(10, 4, 81, &[6, 8, 9, 10], &[0, 0]),
            Err(Error::MissingDualCounts { .. })
        ));
        assert!(solve_moments(10, 4, 81, &[6, 6], &[0]).is_err());
        // an extra dual count that contradicts the solution
        assert!(matches!(
            solve_moments(10, 4, 81, &[6, 8, 9, 10], &[0, 0, 0, 1]),
            Err(Error::Hypothesis(_))
        ));
    }
}
