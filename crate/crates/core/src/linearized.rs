//! Affine polynomials c + sum a_i x^(p^i) over GF(p^m) and root counting.
//!
//! The linear part x -> sum a_i x^(p^i) is GF(p)-linear, so its roots form a subspace and
//! the roots of the affine polynomial are either empty or a coset of that subspace.
//! Counting therefore reduces to one rank computation over GF(p) on the m images of the
//! polynomial basis, never a scan of the field.
//!
//! The unit-circle polynomials a x + b x^(p^s) + c x^(p^s+1) + u have no such structure
//! and are counted by evaluation over U_{q+1}.

use crate::error::{Error, Result};
use crate::gf::{Elem, FieldCtx, TowerCtx};

#[derive(Clone, Debug)]
pub struct AffinePoly<'f> {
    field: &'f FieldCtx,
    constant: Elem,
    coeffs: Vec<Elem>,
}

impl<'f> AffinePoly<'f> {
    /// `coeffs[i]` multiplies x^(p^i); the polynomial has h = coeffs.len() - 1 < m.
    pub fn new(field: &'f FieldCtx, constant: Elem, coeffs: Vec<Elem>) -> Result<Self> {
        if coeffs.is_empty() || coeffs.len() > field.m() as usize {
            return Err(Error::InvalidParameters(format!(
                "need 1 <= h + 1 <= m = {}, got {} coefficients",
                field.m(),
                coeffs.len()
            )));
        }
        field.element(constant.0)?;
        for a in &coeffs {
            field.element(a.0)?;
        }
        Ok(Self { field, constant, coeffs })
    }

    pub fn field(&self) -> &'f FieldCtx {
        self.field
    }

    pub fn constant(&self) -> Elem {
        self.constant
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn h(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn linear_is_zero(&self) -> bool {
        self.coeffs.iter().all(|a| a.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.linear_is_zero()
    }

    pub fn eval(&self, x: Elem) -> Elem {
        let f = self.field;
        self.coeffs
            .iter()
            .enumerate()
            .fold(self.constant, |acc, (i, &a)| f.add(acc, f.mul(a, f.frobenius(x, i as u32))))
    }

    /// Images of the polynomial basis 1, x, ..., x^(m-1) under the linear part.
    pub fn basis_images(&self) -> Vec<Elem> {
        let f = self.field;
        let p = f.p();
        let mut basis = Elem(1);
        let mut out = Vec::with_capacity(f.m() as usize);
        for _ in 0..f.m() {
            out.push(self.coeffs.iter().enumerate().fold(Elem::ZERO, |acc, (i, &a)| {
                f.add(acc, f.mul(a, f.frobenius(basis, i as u32)))
            }));
            basis = Elem(basis.0 * p);
        }
        out
    }
}

/// Dimension over GF(p) of the root space of the linear part.
pub fn linearized_kernel_dim(f: &AffinePoly<'_>) -> Result<u32> {
    if f.linear_is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let images = f.basis_images();
    Ok(f.field.m() - span_rank(f.field, &images))
}

/// Number of roots in GF(q): 0 or p^(kernel dim), decided by one solvability check.
pub fn affine_root_count(f: &AffinePoly<'_>) -> Result<u64> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.linear_is_zero() {
        return Ok(0);
    }
    let field = f.field;
    let images = f.basis_images();
    let mut span = Span::new(field);
    for &v in &images {
        span.insert(v);
    }
    let kernel = field.m() - span.rank();
    if span.contains(f.constant) {
        Ok((field.p() as u64).pow(kernel))
    } else {
        Ok(0)
    }
}

/// Root count by evaluating at every field element.
pub fn brute_root_count(f: &AffinePoly<'_>) -> u64 {
    f.field.elements().filter(|&x| f.eval(x).is_zero()).count() as u64
}

/// GF(p)-basis of the kernel of the linear part, as field elements.
pub fn kernel_basis(f: &AffinePoly<'_>) -> Vec<Elem> {
    let images = f.basis_images();
    kernel_of_images(f.field, &images)
}

/// Kernel of the GF(p)-linear map sending the j-th basis vector (index p^j) to `images[j]`.
pub fn kernel_of_images(field: &FieldCtx, images: &[Elem]) -> Vec<Elem> {
    let p = field.p();
    let m = field.m() as usize;
    // augmented rows: image digits followed by the combination that produced them
    let mut rows: Vec<(usize, Vec<u32>)> = Vec::new();
    let mut kernel = Vec::new();
    for (j, &img) in images.iter().enumerate() {
        let mut v = field.digits(img);
        v.resize(2 * m, 0);
        v[m + j] = 1;
        reduce(&rows, &mut v, p);
        match v[..m].iter().position(|&d| d != 0) {
            Some(pivot) => {
                normalize(&mut v, pivot, p);
                rows.push((pivot, v));
            }
            None => kernel.push(field.from_coeffs(&v[m..])),
        }
    }
    kernel
}

/// All GF(p)-combinations of a basis.
pub fn span_elements(field: &FieldCtx, basis: &[Elem]) -> Vec<Elem> {
    let mut out = vec![Elem::ZERO];
    for &b in basis {
        let mut next = Vec::with_capacity(out.len() * field.p() as usize);
        for c in 0..field.p() {
            let cb = field.mul(Elem(c), b);
            next.extend(out.iter().map(|&x| field.add(x, cb)));
        }
        out = next;
    }
    out
}

pub fn span_rank(field: &FieldCtx, vectors: &[Elem]) -> u32 {
    if field.p() == 2 {
        return binary_rank(vectors.iter().map(|v| v.0));
    }
    let mut span = Span::new(field);
    for &v in vectors {
        span.insert(v);
    }
    span.rank()
}

/// Rank over GF(2) of bit vectors.
pub fn binary_rank(vectors: impl IntoIterator<Item = u32>) -> u32 {
    let mut basis = [0u32; 32];
    let mut rank = 0;
    for mut v in vectors {
        while v != 0 {
            let top = 31 - v.leading_zeros() as usize;
            if basis[top] == 0 {
                basis[top] = v;
                rank += 1;
                break;
            }
            v ^= basis[top];
        }
    }
    rank
}

/// Incremental row echelon form over GF(p) for field elements viewed as digit vectors.
pub struct Span<'f> {
    field: &'f FieldCtx,
    rows: Vec<(usize, Vec<u32>)>,
}

impl<'f> Span<'f> {
    pub fn new(field: &'f FieldCtx) -> Self {
        Self { field, rows: Vec::new() }
    }

    pub fn rank(&self) -> u32 {
        self.rows.len() as u32
    }

    /// Returns true if `v` was independent of the current rows.
    pub fn insert(&mut self, v: Elem) -> bool {
        let p = self.field.p();
        let mut d = self.field.digits(v);
        reduce(&self.rows, &mut d, p);
        match d.iter().position(|&x| x != 0) {
            Some(pivot) => {
                normalize(&mut d, pivot, p);
                self.rows.push((pivot, d));
                true
            }
            None => false,
        }
    }

    pub fn contains(&self, v: Elem) -> bool {
        let mut d = self.field.digits(v);
        reduce(&self.rows, &mut d, self.field.p());
        d.iter().all(|&x| x == 0)
    }
}

fn reduce(rows: &[(usize, Vec<u32>)], v: &mut [u32], p: u32) {
    for (pivot, row) in rows {
        let c = v[*pivot];
        if c == 0 {
            continue;
        }
        for (x, &r) in v.iter_mut().zip(row) {
            *x = ((*x as u64 + (p - c) as u64 * r as u64) % p as u64) as u32;
        }
    }
}

fn normalize(v: &mut [u32], pivot: usize, p: u32) {
    let lead = v[pivot] as u64;
    let inv = (1..p as u64).find(|&i| i * lead % p as u64 == 1).unwrap_or(1);
    for x in v.iter_mut() {
        *x = (*x as u64 * inv % p as u64) as u32;
    }
}

/// a x + b x^(p^s) + c x^(p^s + 1) + u over GF(q^2), evaluated on U_{q+1}.
#[derive(Clone, Debug)]
pub struct CirclePoly<'t> {
    tower: &'t TowerCtx,
    s: u32,
    pub a: Elem,
    pub b: Elem,
    pub c: Elem,
    pub u: Elem,
}

impl<'t> CirclePoly<'t> {
    pub fn new(tower: &'t TowerCtx, s: u32, a: Elem, b: Elem, c: Elem, u: Elem) -> Result<Self> {
        let m = tower.base().m();
        if s == 0 || s >= m {
            return Err(Error::InvalidParameters(format!("need 1 <= s <= m - 1 = {}, got s = {s}", m - 1)));
        }
        for e in [a, b, c, u] {
            tower.ext().element(e.0)?;
        }
        Ok(Self { tower, s, a, b, c, u })
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    /// gcd(m, s).
    pub fn l(&self) -> u32 {
        num_integer::gcd(self.tower.base().m(), self.s)
    }

    pub fn is_zero(&self) -> bool {
        [self.a, self.b, self.c, self.u].iter().all(|e| e.is_zero())
    }

    pub fn eval(&self, x: Elem) -> Elem {
        let e = self.tower.ext();
        let xs = e.frobenius(x, self.s);
        let terms = [e.mul(self.a, x), e.mul(self.b, xs), e.mul(self.c, e.mul(xs, x)), self.u];
        e.sum(terms)
    }
}

pub fn circle_root_count(f: &CirclePoly<'_>) -> Result<u64> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(f.tower.unit_circle().into_iter().filter(|&x| f.eval(x).is_zero()).count() as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn a(f: &FieldCtx, k: i64) -> Elem {
        f.alpha_pow(k)
    }

    #[test]
    fn zero_linear_part_evaluates_to_constant() {
        let f = FieldCtx::conway(2, 4).unwrap();
        let g = AffinePoly::new(&f, Elem::ZERO, vec![Elem::ZERO; 3]).unwrap();
        assert!(f.elements().all(|x| g.eval(x).is_zero()));
        let one = AffinePoly::new(&f, Elem::ONE, vec![Elem::ZERO; 3]).unwrap();
        assert_eq!(affine_root_count(&one).unwrap(), 0);
        assert_eq!(affine_root_count(&g), Err(Error::ZeroPolynomial));
        assert_eq!(linearized_kernel_dim(&g), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn subfield_polynomial() {
        // x^(p^h) - x with h | m vanishes exactly on GF(p^h)
        for (p, m, h) in [(2u32, 4u32, 2usize), (3, 4, 2), (2, 6, 3), (5, 2, 1)] {
            let f = FieldCtx::conway(p, m).unwrap();
            let mut coeffs = vec![Elem::ZERO; h + 1];
            coeffs[0] = f.neg(Elem::ONE);
            coeffs[h] = Elem::ONE;
            let g = AffinePoly::new(&f, Elem::ZERO, coeffs).unwrap();
            let sub = (f.order() - 1) / ((p as u32).pow(h as u32) - 1);
            for x in f.elements() {
                let in_sub = x.is_zero() || f.log(x).unwrap() % sub == 0;
                assert_eq!(g.eval(x).is_zero(), in_sub);
            }
            assert_eq!(linearized_kernel_dim(&g).unwrap(), h as u32);
            assert_eq!(affine_root_count(&g).unwrap(), (p as u64).pow(h as u32));
        }
    }

    #[test]
    fn trace_polynomial() {
        for (p, m) in [(2u32, 5u32), (3, 4), (5, 3)] {
            let f = FieldCtx::conway(p, m).unwrap();
            let g = AffinePoly::new(&f, Elem::ZERO, vec![Elem::ONE; m as usize]).unwrap();
            for x in f.elements() {
                assert_eq!(g.eval(x), f.trace(x));
            }
            assert_eq!(affine_root_count(&g).unwrap(), (p as u64).pow(m - 1));
        }
    }

    #[test]
    fn constant_only_has_no_roots_and_homogeneous_has_zero() {
        let f = FieldCtx::conway(3, 3).unwrap();
        let g = AffinePoly::new(&f, Elem::ZERO, vec![a(&f, 3), a(&f, 7)]).unwrap();
        assert!(affine_root_count(&g).unwrap() >= 1);
    }

    #[test]
    fn kernel_matches_brute_force_exhaustively_small() {
        // every linear part with h = 1 over GF(16) and GF(27)
        for (p, m) in [(2u32, 4u32), (3, 3)] {
            let f = FieldCtx::conway(p, m).unwrap();
            for a0 in f.elements() {
                for a1 in f.elements() {
                    let g = AffinePoly::new(&f, Elem::ZERO, vec![a0, a1]).unwrap();
                    if g.linear_is_zero() {
                        continue;
                    }
                    let k = linearized_kernel_dim(&g).unwrap();
                    assert_eq!(brute_root_count(&g), (p as u64).pow(k));
                    let kb = kernel_basis(&g);
                    assert_eq!(kb.len() as u32, k);
                    let elems = span_elements(&f, &kb);
                    assert!(elems.iter().all(|&x| g.eval(x).is_zero()));
                }
            }
        }
    }

    #[test]
    fn circle_trivial_cases() {
        let t = TowerCtx::new(FieldCtx::conway(3, 2).unwrap()).unwrap();
        let e = t.ext();
        let u = t.unit_circle();
        let c = CirclePoly::new(&t, 1, Elem::ZERO, Elem::ZERO, Elem::ZERO, Elem::ONE).unwrap();
        assert_eq!(circle_root_count(&c).unwrap(), 0);
        let lin = CirclePoly::new(&t, 1, Elem::ONE, Elem::ZERO, Elem::ZERO, e.neg(u[3])).unwrap();
        assert_eq!(circle_root_count(&lin).unwrap(), 1);
        let zero = CirclePoly::new(&t, 1, Elem::ZERO, Elem::ZERO, Elem::ZERO, Elem::ZERO).unwrap();
        assert_eq!(circle_root_count(&zero), Err(Error::ZeroPolynomial));
        assert!(CirclePoly::new(&t, 2, Elem::ONE, Elem::ZERO, Elem::ZERO, Elem::ZERO).is_err());
    }

    #[test]
    fn circle_root_counts_take_allowed_values() {
        let t = TowerCtx::new(FieldCtx::conway(3, 2).unwrap()).unwrap();
        let q2 = t.ext().order();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..2000 {
            let [a, b, c, u] = [0; 4].map(|_| Elem(rng.gen_range(0..q2)));
            let f = CirclePoly::new(&t, 1, a, b, c, u).unwrap();
            if f.is_zero() {
                continue;
            }
            assert!([0, 1, 2, 4].contains(&circle_root_count(&f).unwrap()));
        }
    }
}
