//! Closed-form weight enumerators, evaluated in exact rational arithmetic.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::{Family, WeightDistribution, WeightSource};
use crate::error::{Error, Result};
use crate::gf::poly::is_prime;

/// Which enumerator formula to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EnumeratorForm {
    /// p = 2, h = 2: the [q, 4, q-4] code.
    BinaryH2,
    /// p odd, h = 2.
    OddH2,
    /// p = 2, h = 3: the [q, 5, q-8] code.
    BinaryH3,
    /// The unit-circle code, any s.
    Circle,
}

impl EnumeratorForm {
    /// The form covering an extended code with these parameters, if any.
    pub fn for_extended(p: u32, m: u32, h: u32) -> Option<Self> {
        match (p, h) {
            (2, 2) if m > 2 => Some(Self::BinaryH2),
            (2, 3) if m > 3 => Some(Self::BinaryH3),
            (p, 2) if p > 2 && m > 2 => Some(Self::OddH2),
            _ => None,
        }
    }
}

impl fmt::Display for EnumeratorForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            EnumeratorForm::BinaryH2 => "binary-h2",
            EnumeratorForm::OddH2 => "odd-h2",
            EnumeratorForm::BinaryH3 => "binary-h3",
            EnumeratorForm::Circle => "circle",
        };
        f.write_str(s)
    }
}

fn big(x: u64) -> BigInt {
    BigInt::from(x)
}

fn frac(num: BigInt, den: BigInt) -> BigRational {
    BigRational::new(num, den)
}

/// Evaluates the enumerator. `j` is h for the extended-code forms and s for the circle form.
pub fn weight_distribution_closed(form: EnumeratorForm, p: u32, m: u32, j: u32) -> Result<WeightDistribution> {
    if !is_prime(p as u64) {
        return Err(Error::NotPrime(p as u64));
    }
    let hyp = |ok: bool, what: &str| -> Result<()> {
        if ok {
            Ok(())
        } else {
            Err(Error::Hypothesis(format!("{form} needs {what}; got p = {p}, m = {m}, parameter = {j}")))
        }
    };
    let q64 = (p as u64)
        .checked_pow(m)
        .ok_or_else(|| Error::InvalidParameters("q overflows".into()))?;
    let q = big(q64);
    let pp = big(p as u64);
    let one = BigInt::one();
    let (n, k, terms): (u64, u32, Vec<(u64, BigRational)>) = match form {
        EnumeratorForm::BinaryH2 => {
            hyp(p == 2 && j == 2 && m > 2, "p = 2, h = 2, m > 2")?;
            let q1 = &q - &one;
            let terms = vec![
                (q64 - 4, frac(&q * &q1 * &q1 * (&q - 2), big(24))),
                (q64 - 2, frac(&q * &q1 * &q1 * (&q + 4), big(4))),
                (q64 - 1, frac(&q * &q1 * (&q * &q + 8), big(3))),
                (q64, frac(&q1 * (3 * &q * &q * &q + 3 * &q * &q - 6 * &q + 8), big(8))),
            ];
            (q64, 4, terms)
        }
        EnumeratorForm::OddH2 => {
            hyp(p > 2 && j == 2 && m > 2, "p odd, h = 2, m > 2")?;
            let q1 = &q - &one;
            let p1 = &pp - &one;
            let p2 = &pp * &pp;
            let p3 = &p2 * &pp;
            let qq = &q * &q;
            let terms = vec![
                (
                    q64 - (p as u64).pow(2),
                    frac(&q * (&q - &pp) * &q1 * &q1, &p3 * &p1 * &p1 * (&pp + 1)),
                ),
                (
                    q64 - p as u64,
                    frac(&q * &q1 * &q1 * (&p2 * &q + &p2 - &q - &pp * &q), &p2 * &p1 * &p1),
                ),
                (
                    q64 - 1,
                    frac(
                        &q * &q1
                            * (&p3 * &qq + &p3 * &q + &p3 - 2 * &p2 * &qq - &p2 * &q - &pp * &qq - 2 * &pp * &q
                                + 3 * &qq),
                        &p1 * &p1 * (&pp + 1),
                    ),
                ),
                (
                    q64,
                    frac(&q1 * (&p3 + &p2 * &qq * &q - &p2 * &q + &pp * &qq - &pp * &q - &qq * &q + &qq), p3.clone()),
                ),
            ];
            (q64, 4, terms)
        }
        EnumeratorForm::BinaryH3 => {
            hyp(p == 2 && j == 3 && m > 3, "p = 2, h = 3, m > 3")?;
            let q1 = &q - &one;
            let qq = &q * &q;
            let terms = vec![
                (q64 - 8, frac(&q * &q1 * &q1 * (&q - 2) * (&q - 4), big(1344))),
                (q64 - 4, frac(&q * &q1 * &q1 * (&q - 2) * (3 * &q + 8), big(96))),
                (q64 - 2, frac(&q * &q1 * &q1 * (7 * &qq + 12 * &q + 32), big(24))),
                (q64 - 1, frac(2 * &q * &q1 * (3 * &qq * &q + 7 * &qq + 32), big(21))),
                (
                    q64,
                    frac(&q1 * (25 * &qq * &qq + 9 * &qq * &q + 22 * &qq - 56 * &q + 64), big(64)),
                ),
            ];
            (q64, 5, terms)
        }
        EnumeratorForm::Circle => {
            hyp(p > 2 && m >= 2 && j >= 1 && j < m, "p odd, m >= 2, 1 <= s <= m - 1")?;
            let l = num_integer::gcd(m, j);
            let big_p = big((p as u64).pow(l));
            let q1 = &q - &one;
            let qp1 = &q + &one;
            let qq = &q * &q;
            let q4 = &qq * &qq;
            let pl = (p as u64).pow(l);
            let terms = vec![
                (
                    q64 + 1,
                    frac(
                        &qp1 * &q * &q1 * &q1 * (&big_p - &q + &big_p * &qq + 2 * &big_p * &q4 + &qq + 2 * &q4),
                        2 * (&big_p + 1),
                    ),
                ),
                (
                    q64,
                    frac(
                        &qp1 * &qp1 * &q1
                            * (&big_p - &big_p * &q - &q + &big_p * &qq - &big_p * &qq * &q + &big_p * &q4 + &qq),
                        big_p.clone(),
                    ),
                ),
                (
                    q64 - 1,
                    frac(&qp1 * &qp1 * &q * &q1 * (&big_p - &q + &big_p * &qq - &qq), 2 * (&big_p - 1)),
                ),
                (q64 - pl, frac(&qp1 * &qp1 * &q * &q1 * &q1, &big_p * (&big_p * &big_p - 1))),
            ];
            (q64 + 1, 4, terms)
        }
    };
    let alphabet = if form == EnumeratorForm::Circle { &q * &q } else { q.clone() };
    let mut counts = BTreeMap::from([(0u32, 1u128)]);
    let mut total = BigInt::one();
    for (w, a) in terms {
        if !a.is_integer() || a.is_negative() {
            return Err(Error::NonIntegral(format!("{form}: A_{w} = {a}")));
        }
        let a = a.to_integer();
        total += &a;
        let v = a
            .to_u128()
            .ok_or_else(|| Error::InvalidParameters(format!("{form}: A_{w} exceeds 128 bits")))?;
        if !v.is_zero() {
            *counts.entry(w as u32).or_default() += v;
        }
    }
    if total != num_traits::pow(alphabet, k as usize) {
        return Err(Error::NonIntegral(format!("{form}: coefficients do not sum to the code size")));
    }
    Ok(WeightDistribution { n: n as usize, counts, source: WeightSource::ClosedForm { form } })
}

/// The closed form covering a code family, evaluated; errors when none applies.
pub fn weight_distribution_closed_for(family: Family) -> Result<WeightDistribution> {
    match family {
        Family::ExtendedPrimitive { p, m, h } => match EnumeratorForm::for_extended(p, m, h) {
            Some(form) => weight_distribution_closed(form, p, m, h),
            None => Err(Error::Hypothesis(format!("no closed-form enumerator for p = {p}, m = {m}, h = {h}"))),
        },
        Family::UnitCircle { p, m, s } => weight_distribution_closed(EnumeratorForm::Circle, p, m, s),
        _ => Err(Error::Hypothesis("no closed-form enumerator for this family".into())),
    }
}
