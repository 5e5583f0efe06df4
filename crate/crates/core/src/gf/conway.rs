//! Conway polynomials: the lexicographically least primitive polynomials that are
//! compatible with the Conway polynomials of every subfield.
//!
//! The bundled table is generated by [`search`] (see `examples/conway_table.rs`) and
//! cross-checked against it in the tests.

use super::poly;

/// Coefficients constant term first, monic.
pub fn lookup(p: u32, m: u32) -> Option<Vec<u32>> {
    TABLE
        .iter()
        .find(|(tp, tm, _)| *tp == p && *tm == m)
        .map(|(_, _, c)| c.to_vec())
}

pub fn bundled() -> impl Iterator<Item = (u32, u32, &'static [u32])> {
    TABLE.iter().map(|&(p, m, c)| (p, m, c))
}

/// Checks the two defining properties apart from lexicographic minimality: `f` is
/// primitive, and for every proper divisor d of m the norm-down of x is a root of the
/// degree-d Conway polynomial.
pub fn is_compatible_primitive(f: &[u32], p: u32, subfield: impl Fn(u32) -> Option<Vec<u32>>) -> bool {
    let Some(m) = poly::degree(f) else { return false };
    if !poly::is_primitive(f, p) {
        return false;
    }
    let m = m as u32;
    let pm = (p as u128).pow(m) - 1;
    for d in (1..m).filter(|d| m % d == 0) {
        let Some(sub) = subfield(d) else { return false };
        let r = pm / ((p as u128).pow(d) - 1);
        let y = poly::pow_mod(&[0, 1], r, f, p);
        if !poly::compose_mod(&sub, &y, f, p).is_empty() {
            return false;
        }
    }
    true
}

/// Finds the Conway polynomial of degree m over GF(p) by walking candidates in Conway
/// order. `subfield(d)` must return the Conway polynomial of each proper divisor degree.
pub fn search(p: u32, m: u32, subfield: impl Fn(u32) -> Option<Vec<u32>>) -> Option<Vec<u32>> {
    let count = (p as u64).checked_pow(m)?;
    for n in 0..count {
        let mut f = vec![0u32; m as usize + 1];
        f[m as usize] = 1;
        let mut rest = n;
        for (i, c) in f.iter_mut().enumerate().take(m as usize) {
            let a = (rest % p as u64) as u32;
            rest /= p as u64;
            *c = if (m as usize - i) % 2 == 0 { a } else { (p - a) % p };
        }
        if f[0] == 0 {
            continue;
        }
        if is_compatible_primitive(&f, p, &subfield) {
            return Some(f);
        }
    }
    None
}

/// Searches degrees 1..=max_m in order so each step can see its subfields.
pub fn search_chain(p: u32, max_m: u32) -> Vec<(u32, Vec<u32>)> {
    let mut found: Vec<(u32, Vec<u32>)> = Vec::new();
    for m in 1..=max_m {
        let known = found.clone();
        let sub = move |d: u32| known.iter().find(|(k, _)| *k == d).map(|(_, c)| c.clone());
        match search(p, m, sub) {
            Some(f) => found.push((m, f)),
            None => break,
        }
    }
    found
}

#[rustfmt::skip]
static TABLE: &[(u32, u32, &[u32])] = &include!("conway_table.in");

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(p: u32, m: u32) -> Vec<u32> {
        lookup(p, m).unwrap_or_else(|| panic!("missing ({p},{m})"))
    }

    #[test]
    fn matches_reference_values() {
        // Values from the standard reference tables.
        let known: &[(u32, u32, &[u32])] = &[
            (2, 1, &[1, 1]),
            (2, 2, &[1, 1, 1]),
            (2, 3, &[1, 1, 0, 1]),
            (2, 4, &[1, 1, 0, 0, 1]),
            (2, 5, &[1, 0, 1, 0, 0, 1]),
            (2, 6, &[1, 1, 0, 1, 1, 0, 1]),
            (2, 8, &[1, 0, 1, 1, 1, 0, 0, 0, 1]),
            (3, 1, &[1, 1]),
            (3, 2, &[2, 2, 1]),
            (3, 3, &[1, 2, 0, 1]),
            (3, 4, &[2, 0, 0, 2, 1]),
            (3, 5, &[1, 2, 0, 0, 0, 1]),
            (3, 6, &[2, 2, 1, 0, 2, 0, 1]),
            (5, 1, &[3, 1]),
            (5, 2, &[2, 4, 1]),
            (5, 3, &[3, 3, 0, 1]),
            (5, 4, &[2, 4, 4, 0, 1]),
            (7, 2, &[3, 6, 1]),
        ];
        for (p, m, c) in known {
            assert_eq!(parse(*p, *m), c.to_vec(), "C({p},{m})");
        }
    }

    #[test]
    fn every_entry_is_primitive_and_compatible() {
        for (p, m, c) in bundled() {
            assert!(
                is_compatible_primitive(c, p, |d| lookup(p, d)),
                "C({p},{m}) fails primitivity/compatibility"
            );
        }
    }

    #[test]
    fn search_reproduces_small_entries() {
        for (p, max_m) in [(2u32, 10u32), (3, 6), (5, 4), (7, 3), (11, 2), (13, 2)] {
            for (m, f) in search_chain(p, max_m) {
                assert_eq!(f, parse(p, m), "search disagrees at ({p},{m})");
            }
        }
    }
}
