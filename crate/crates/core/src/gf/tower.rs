use super::{Elem, FieldCtx};
use crate::error::{Error, Result};

/// Largest base field order for which the quadratic extension is tabulated.
pub const MAX_TOWER_BASE: u32 = 1 << 10;

/// GF(q) together with GF(q^2) and an explicit embedding of the former in the latter.
#[derive(Debug)]
pub struct TowerCtx {
    base: FieldCtx,
    ext: FieldCtx,
    embed: Vec<Elem>,
}

impl TowerCtx {
    pub fn new(base: FieldCtx) -> Result<Self> {
        let q = base.order();
        if q > MAX_TOWER_BASE {
            return Err(Error::FieldTooLarge { order: q as u64 * q as u64, limit: super::MAX_FIELD_ORDER });
        }
        let ext = FieldCtx::conway(base.p(), 2 * base.m())?;
        // Subfield elements are the (q+1)-th powers; look for a root of the base modulus
        // there, preferring gamma^(q+1) which is the compatible choice for Conway moduli.
        let modulus: Vec<Elem> = base.spec().modulus.iter().map(|&c| Elem(c)).collect();
        let eval = |y: Elem| -> Elem {
            modulus.iter().rev().fold(Elem::ZERO, |acc, &c| ext.add(ext.mul(acc, y), c))
        };
        let root = (1..q as i64)
            .map(|j| ext.alpha_pow(j * (q as i64 + 1)))
            .find(|&y| eval(y).is_zero())
            .ok_or_else(|| Error::Hypothesis("base modulus has no root in GF(q^2)".into()))?;
        let powers: Vec<Elem> = (0..base.m()).map(|i| ext.pow(root, i as u64)).collect();
        let embed = base
            .elements()
            .map(|x| {
                let digits = base.digits(x);
                digits
                    .iter()
                    .zip(&powers)
                    .fold(Elem::ZERO, |acc, (&d, &r)| ext.add(acc, ext.mul(Elem(d), r)))
            })
            .collect();
        Ok(Self { base, ext, embed })
    }

    pub fn base(&self) -> &FieldCtx {
        &self.base
    }

    pub fn ext(&self) -> &FieldCtx {
        &self.ext
    }

    #[inline]
    pub fn embed(&self, x: Elem) -> Elem {
        self.embed[x.0 as usize]
    }

    /// Elements of GF(q^2) with x^(q+1) = 1, listed as beta^0, beta^1, ..., beta^q where
    /// beta = gamma^(q-1) for the extension's primitive element gamma.
    pub fn unit_circle(&self) -> Vec<Elem> {
        let q = self.base.order() as i64;
        (0..=q).map(|i| self.ext.alpha_pow(i * (q - 1))).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf9_in_gf81() {
        let t = TowerCtx::new(FieldCtx::conway(3, 2).unwrap()).unwrap();
        assert_eq!(t.ext().order(), 81);
        let (b, e) = (t.base(), t.ext());
        assert_eq!(t.embed(Elem::ONE), Elem::ONE);
        for x in b.elements() {
            assert_eq!(e.pow(t.embed(x), 9), t.embed(x));
            for y in b.elements() {
                assert_eq!(t.embed(b.add(x, y)), e.add(t.embed(x), t.embed(y)));
                assert_eq!(t.embed(b.mul(x, y)), e.mul(t.embed(x), t.embed(y)));
            }
        }
        let mut image: Vec<Elem> = b.elements().map(|x| t.embed(x)).collect();
        image.sort();
        image.dedup();
        assert_eq!(image.len(), 9);
    }

    #[test]
    fn user_modulus_base_embeds() {
        let base = FieldCtx::new(3, 2, Some(&[1, 0, 1])).unwrap();
        let t = TowerCtx::new(base).unwrap();
        let (b, e) = (t.base(), t.ext());
        for x in b.elements() {
            for y in b.elements() {
                assert_eq!(t.embed(b.mul(x, y)), e.mul(t.embed(x), t.embed(y)));
                assert_eq!(t.embed(b.add(x, y)), e.add(t.embed(x), t.embed(y)));
            }
        }
    }

    #[test]
    fn unit_circle_q9() {
        let t = TowerCtx::new(FieldCtx::conway(3, 2).unwrap()).unwrap();
        let u = t.unit_circle();
        assert_eq!(u.len(), 10);
        assert_eq!(u[0], Elem::ONE);
        let e = t.ext();
        let mut sorted = u.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 10);
        for &x in &u {
            assert_eq!(e.pow(x, 10), Elem::ONE);
        }
        // product of all elements of a cyclic group of even order is its unique element
        // of order 2, here -1
        let prod = u.iter().fold(Elem::ONE, |acc, &x| e.mul(acc, x));
        assert_eq!(prod, e.neg(Elem::ONE));
    }

    #[test]
    fn unit_circle_closed_under_multiplication() {
        for (p, m) in [(3, 2), (5, 2), (3, 3)] {
            let t = TowerCtx::new(FieldCtx::conway(p, m).unwrap()).unwrap();
            let u = t.unit_circle();
            for &x in &u {
                for &y in &u {
                    assert!(u.contains(&t.ext().mul(x, y)));
                }
            }
        }
    }

    #[test]
    fn rejects_large_base() {
        let base = FieldCtx::conway(2, 11).unwrap();
        assert!(matches!(TowerCtx::new(base), Err(Error::FieldTooLarge { .. })));
    }
}
