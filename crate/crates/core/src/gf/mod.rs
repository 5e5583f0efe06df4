//! Finite fields GF(p^m) with table-driven arithmetic.
//!
//! Elements are indices in `[0, q)`: the base-p digits of an index are the coefficients
//! of the element in the polynomial basis, constant term in the least significant digit.
//! So the prime subfield is exactly the indices `0..p`, and for p = 2 addition is XOR.
//!
//! Multiplication goes through exp/log tables and addition through Zech logarithms,
//! which makes every operation O(1) once the context is built.

pub mod conway;
pub mod poly;
mod tower;

pub use tower::TowerCtx;

use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::{Error, Result};

/// Largest field order for which tables are built.
pub const MAX_FIELD_ORDER: u64 = 1 << 20;

const NO_LOG: u32 = u32::MAX;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Elem(pub u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    #[inline]
    pub fn index(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Debug for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// `{p, m, modulus}` with the modulus listed constant term first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u32,
    pub m: u32,
    pub modulus: Vec<u32>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
    Inv,
    Neg,
    /// Raise the first operand to the exponent carried by the second operand's index.
    Pow,
}

pub struct FieldCtx {
    spec: FieldSpec,
    q: u32,
    alpha: Elem,
    conway: bool,
    // exp has length 2(q-1) so products of two logs never need a reduction
    exp: Vec<u32>,
    log: Vec<u32>,
    // zech[k] = log(1 + alpha^k), NO_LOG when 1 + alpha^k = 0
    zech: Vec<u32>,
}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldCtx")
            .field("spec", &self.spec)
            .field("alpha", &self.alpha)
            .finish()
    }
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        self.spec == other.spec && self.alpha == other.alpha
    }
}

impl Eq for FieldCtx {}

impl FieldCtx {
    /// Builds GF(p^m). Without a modulus the bundled Conway polynomial is used and the
    /// primitive element is the class of x; with a modulus, the least index of
    /// multiplicative order q - 1 is chosen.
    pub fn new(p: u32, m: u32, modulus: Option<&[u32]>) -> Result<Self> {
        if !poly::is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        if m == 0 {
            return Err(Error::ZeroDegree);
        }
        let order = (p as u64).checked_pow(m).unwrap_or(u64::MAX);
        if order > MAX_FIELD_ORDER {
            return Err(Error::FieldTooLarge { order, limit: MAX_FIELD_ORDER });
        }
        let conway = conway::lookup(p, m);
        let modulus = match modulus {
            Some(c) => {
                let well_formed = c.len() == m as usize + 1
                    && c.last() == Some(&1)
                    && c.iter().all(|&x| x < p);
                if !well_formed {
                    return Err(Error::MalformedModulus { p, degree: m });
                }
                if !poly::is_irreducible(c, p) {
                    return Err(Error::ReducibleModulus { p });
                }
                c.to_vec()
            }
            None => conway.clone().ok_or(Error::NoConwayPolynomial { p, m })?,
        };
        let is_conway = conway.as_deref() == Some(modulus.as_slice());
        let spec = FieldSpec { p, m, modulus };
        let alpha = if is_conway { Elem(if m == 1 { conway_root(&spec) } else { p }) } else { least_primitive(&spec) };
        Ok(Self::with_tables(spec, alpha, is_conway))
    }

    pub fn conway(p: u32, m: u32) -> Result<Self> {
        Self::new(p, m, None)
    }

    fn with_tables(spec: FieldSpec, alpha: Elem, conway: bool) -> Self {
        let q = (spec.p as u64).pow(spec.m) as u32;
        let n = (q - 1) as usize;
        let mut exp = vec![0u32; 2 * n.max(1)];
        let mut log = vec![NO_LOG; q as usize];
        let alpha_digits = to_digits(alpha.0, spec.p, spec.m);
        let mut cur = vec![0u32; spec.m as usize];
        cur[0] = 1;
        for i in 0..n {
            let idx = from_digits(&cur, spec.p);
            exp[i] = idx;
            exp[i + n] = idx;
            debug_assert_eq!(log[idx as usize], NO_LOG, "alpha is not primitive");
            log[idx as usize] = i as u32;
            cur = if alpha.0 == spec.p && spec.m > 1 {
                times_x(&cur, &spec)
            } else {
                digits_mul(&cur, &alpha_digits, &spec)
            };
        }
        let mut zech = vec![NO_LOG; n];
        for (k, z) in zech.iter_mut().enumerate() {
            let plus_one = add_one(exp[k], spec.p);
            if plus_one != 0 {
                *z = log[plus_one as usize];
            }
        }
        Self { spec, q, alpha, conway, exp, log, zech }
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.spec.p
    }

    #[inline]
    pub fn m(&self) -> u32 {
        self.spec.m
    }

    #[inline]
    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    /// The fixed primitive element.
    pub fn alpha(&self) -> Elem {
        self.alpha
    }

    pub fn uses_conway(&self) -> bool {
        self.conway
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..self.q).map(Elem)
    }

    pub fn element(&self, index: u32) -> Result<Elem> {
        if index < self.q {
            Ok(Elem(index))
        } else {
            Err(Error::ElementOutOfRange { index, order: self.q })
        }
    }

    /// The element j·1 of the prime subfield.
    #[inline]
    pub fn from_int(&self, j: i64) -> Elem {
        Elem(j.rem_euclid(self.spec.p as i64) as u32)
    }

    pub fn digits(&self, x: Elem) -> Vec<u32> {
        to_digits(x.0, self.spec.p, self.spec.m)
    }

    pub fn from_coeffs(&self, digits: &[u32]) -> Elem {
        Elem(from_digits(digits, self.spec.p))
    }

    /// alpha^k for any integer k.
    #[inline]
    pub fn alpha_pow(&self, k: i64) -> Elem {
        let n = (self.q - 1) as i64;
        Elem(self.exp[k.rem_euclid(n) as usize])
    }

    /// Discrete log base alpha; `None` for zero.
    #[inline]
    pub fn log(&self, x: Elem) -> Option<u32> {
        let l = self.log[x.0 as usize];
        (l != NO_LOG).then_some(l)
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        if self.spec.p == 2 {
            return Elem(a.0 ^ b.0);
        }
        if a.0 == 0 {
            return b;
        }
        if b.0 == 0 {
            return a;
        }
        let n = self.q - 1;
        let la = self.log[a.0 as usize];
        let lb = self.log[b.0 as usize];
        let d = if lb >= la { lb - la } else { lb + n - la };
        let z = self.zech[d as usize];
        if z == NO_LOG {
            Elem::ZERO
        } else {
            Elem(self.exp[(la + z) as usize])
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        if self.spec.p == 2 || a.0 == 0 {
            return a;
        }
        // -1 = alpha^((q-1)/2) for odd characteristic
        let la = self.log[a.0 as usize];
        Elem(self.exp[(la + (self.q - 1) / 2) as usize])
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.0 == 0 || b.0 == 0 {
            return Elem::ZERO;
        }
        Elem(self.exp[(self.log[a.0 as usize] + self.log[b.0 as usize]) as usize])
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        let n = self.q - 1;
        Ok(Elem(self.exp[((n - self.log[a.0 as usize]) % n) as usize]))
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    #[inline]
    pub fn pow(&self, a: Elem, e: u64) -> Elem {
        if e == 0 {
            return Elem::ONE;
        }
        if a.0 == 0 {
            return Elem::ZERO;
        }
        let n = (self.q - 1) as u64;
        let l = self.log[a.0 as usize] as u64 * (e % n) % n;
        Elem(self.exp[l as usize])
    }

    /// x^(p^i).
    #[inline]
    pub fn frobenius(&self, x: Elem, i: u32) -> Elem {
        if x.0 == 0 {
            return x;
        }
        let n = (self.q - 1) as u64;
        let mut e = 1u64;
        for _ in 0..(i % self.spec.m) {
            e = e * self.spec.p as u64 % n.max(1);
        }
        self.pow(x, e)
    }

    /// Absolute trace to GF(p); the result is an index below p.
    pub fn trace(&self, x: Elem) -> Elem {
        (0..self.spec.m).fold(Elem::ZERO, |acc, i| self.add(acc, self.frobenius(x, i)))
    }

    /// Range-checked arithmetic. For `Pow` the second operand's index is the exponent.
    pub fn apply(&self, op: ArithOp, a: Elem, b: Elem) -> Result<Elem> {
        self.element(a.0)?;
        if op != ArithOp::Pow {
            self.element(b.0)?;
        }
        Ok(match op {
            ArithOp::Add => self.add(a, b),
            ArithOp::Sub => self.sub(a, b),
            ArithOp::Mul => self.mul(a, b),
            ArithOp::Div => self.div(a, b)?,
            ArithOp::Inv => self.inv(a)?,
            ArithOp::Neg => self.neg(a),
            ArithOp::Pow => self.pow(a, b.0 as u64),
        })
    }

    /// Multiplicative order of a nonzero element.
    pub fn mul_order(&self, a: Elem) -> Option<u64> {
        let l = self.log(a)? as u64;
        let n = (self.q - 1) as u64;
        Some(n / num_integer::gcd(l, n))
    }

    /// Sum over a slice.
    pub fn sum(&self, xs: impl IntoIterator<Item = Elem>) -> Elem {
        xs.into_iter().fold(Elem::ZERO, |acc, x| self.add(acc, x))
    }
}

fn to_digits(mut idx: u32, p: u32, m: u32) -> Vec<u32> {
    (0..m)
        .map(|_| {
            let d = idx % p;
            idx /= p;
            d
        })
        .collect()
}

fn from_digits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

fn add_one(idx: u32, p: u32) -> u32 {
    let low = idx % p;
    idx - low + (low + 1) % p
}

fn times_x(cur: &[u32], spec: &FieldSpec) -> Vec<u32> {
    let m = spec.m as usize;
    let p = spec.p;
    let top = cur[m - 1];
    let mut next = vec![0u32; m];
    next[1..m].copy_from_slice(&cur[..m - 1]);
    if top != 0 {
        for (i, c) in next.iter_mut().enumerate() {
            *c = (*c + p - top * spec.modulus[i] % p) % p;
        }
    }
    next
}

fn digits_mul(a: &[u32], b: &[u32], spec: &FieldSpec) -> Vec<u32> {
    let mut r = poly::mul_mod(a, b, &spec.modulus, spec.p);
    r.resize(spec.m as usize, 0);
    r
}

/// For m = 1 the Conway polynomial is x - g; the class of x is g.
fn conway_root(spec: &FieldSpec) -> u32 {
    (spec.p - spec.modulus[0]) % spec.p
}

fn least_primitive(spec: &FieldSpec) -> Elem {
    let q = (spec.p as u64).pow(spec.m);
    let n = (q - 1) as u128;
    let factors = poly::prime_factors(n as u64);
    (1..q as u32)
        .find(|&idx| {
            let a = to_digits(idx, spec.p, spec.m);
            let a = poly::trim(a);
            poly::pow_mod(&a, n, &spec.modulus, spec.p) == vec![1]
                && factors
                    .iter()
                    .all(|&r| poly::pow_mod(&a, n / r as u128, &spec.modulus, spec.p) != vec![1])
        })
        .map(Elem)
        .expect("a finite field always has a primitive element")
}
