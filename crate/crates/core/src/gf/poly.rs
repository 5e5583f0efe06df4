//! Dense polynomials over a prime field GF(p), coefficients stored constant term first.
//!
//! Only what field construction needs: reduction, modular exponentiation, gcd and the
//! irreducibility / primitivity tests used to validate moduli.

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 {
        return false;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Distinct prime factors in increasing order.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub fn degree(a: &[u32]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

fn inv_mod(a: u32, p: u32) -> u32 {
    // p is prime, so a^(p-2) is the inverse
    let mut r = 1u64;
    let mut b = a as u64 % p as u64;
    let mut e = p as u64 - 2;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p as u64;
        }
        b = b * b % p as u64;
        e >>= 1;
    }
    r as u32
}

pub fn sub(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(out)
}

/// Remainder of `a` modulo a nonzero `m`.
pub fn rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let dm = degree(m).expect("nonzero modulus");
    let lead_inv = inv_mod(m[dm], p) as u64;
    let mut r = trim(a.to_vec());
    while let Some(dr) = degree(&r) {
        if dr < dm {
            break;
        }
        let f = r[dr] as u64 * lead_inv % p as u64;
        let shift = dr - dm;
        for (i, &c) in m.iter().enumerate().take(dm + 1) {
            let t = (f * c as u64 % p as u64) as u32;
            r[i + shift] = (r[i + shift] + p - t) % p;
        }
        r = trim(r);
    }
    r
}

pub fn mul_mod(a: &[u32], b: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    let prod: Vec<u32> = prod.into_iter().map(|c| c as u32).collect();
    rem(&prod, m, p)
}

pub fn pow_mod(base: &[u32], mut e: u128, m: &[u32], p: u32) -> Vec<u32> {
    let mut result = rem(&[1], m, p);
    let mut b = rem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            result = mul_mod(&result, &b, m, p);
        }
        b = mul_mod(&b, &b, m, p);
        e >>= 1;
    }
    result
}

pub fn gcd(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    // normalize to monic
    if let Some(d) = degree(&a) {
        let inv = inv_mod(a[d], p) as u64;
        for c in a.iter_mut() {
            *c = (*c as u64 * inv % p as u64) as u32;
        }
    }
    a
}

/// Evaluates `f` at the residue class `x` modulo `m` (Horner).
pub fn compose_mod(f: &[u32], x: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut acc: Vec<u32> = Vec::new();
    for &c in f.iter().rev() {
        acc = mul_mod(&acc, x, m, p);
        let mut with_c = acc.clone();
        if with_c.is_empty() {
            with_c.push(0);
        }
        with_c[0] = (with_c[0] + c) % p;
        acc = trim(with_c);
    }
    acc
}

/// Rabin's test: `f` (monic, degree m) is irreducible over GF(p) iff
/// x^(p^m) = x mod f and gcd(x^(p^(m/r)) - x, f) = 1 for every prime r | m.
pub fn is_irreducible(f: &[u32], p: u32) -> bool {
    let Some(m) = degree(f) else { return false };
    if m == 0 {
        return false;
    }
    let x = [0u32, 1];
    let frob = |k: u32| -> Vec<u32> {
        let mut y = rem(&x, f, p);
        for _ in 0..k {
            y = pow_mod(&y, p as u128, f, p);
        }
        y
    };
    if sub(&frob(m as u32), &rem(&x, f, p), p) != Vec::<u32>::new() {
        return false;
    }
    for r in prime_factors(m as u64) {
        let y = frob(m as u32 / r as u32);
        let g = gcd(&sub(&y, &x, p), f, p);
        if degree(&g) != Some(0) {
            return false;
        }
    }
    true
}

/// True when the class of x has multiplicative order p^m - 1 modulo `f`.
/// This implies `f` is irreducible.
pub fn is_primitive(f: &[u32], p: u32) -> bool {
    let Some(m) = degree(f) else { return false };
    if m == 0 || f[0] == 0 {
        return false;
    }
    let order = (p as u128).pow(m as u32) - 1;
    let x = [0u32, 1];
    if pow_mod(&x, order, f, p) != vec![1] {
        return false;
    }
    prime_factors(order as u64)
        .into_iter()
        .all(|r| pow_mod(&x, order / r as u128, f, p) != vec![1])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_and_factors() {
        assert!(is_prime(2) && is_prime(3) && is_prime(1_048_573));
        assert!(!is_prime(1) && !is_prime(9) && !is_prime(1 << 20));
        assert_eq!(prime_factors(80), vec![2, 5]);
        assert_eq!(prime_factors(242), vec![2, 11]);
    }

    #[test]
    fn irreducibility() {
        // x^4 + x + 1 irreducible and primitive over GF(2)
        assert!(is_irreducible(&[1, 1, 0, 0, 1], 2));
        assert!(is_primitive(&[1, 1, 0, 0, 1], 2));
        // x^4 + x^3 + x^2 + x + 1 irreducible, x has order 5
        assert!(is_irreducible(&[1, 1, 1, 1, 1], 2));
        assert!(!is_primitive(&[1, 1, 1, 1, 1], 2));
        // x^2 + 1 = (x + 1)^2 over GF(2)
        assert!(!is_irreducible(&[1, 0, 1], 2));
        // x^2 + 1 irreducible over GF(3), not primitive
        assert!(is_irreducible(&[1, 0, 1], 3));
        assert!(!is_primitive(&[1, 0, 1], 3));
    }

    #[test]
    fn compose_evaluates() {
        // f(y) = y^2 + 1 at y = x mod x^2 + 1 over GF(3) gives 0
        assert!(compose_mod(&[1, 0, 1], &[0, 1], &[1, 0, 1], 3).is_empty());
    }
}
