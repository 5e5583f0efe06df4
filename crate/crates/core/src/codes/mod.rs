//! The two code families and generic linear-code machinery.
//!
//! * Extended primitive codes: rows 1, x, x^p, ..., x^(p^h) evaluated at
//!   alpha^1, ..., alpha^(q-1), 0 over GF(q). Deleting the last column gives the
//!   primitive cyclic code.
//! * Unit-circle codes: rows 1, x, x^(p^s), x^(p^s+1) evaluated on U_{q+1} over GF(q^2).

mod closed;
mod dual;
mod enumerate;
mod moments;

pub use closed::{weight_distribution_closed, weight_distribution_closed_for, EnumeratorForm};
pub use dual::{dual_low_weight_search, dual_min_distance, DualLowWeightReport};
pub use enumerate::{
    projective_classes, supports_of_weight, weight_distribution_brute, weight_distribution_per_codeword,
    EnumOptions, MAX_ENUMERATION,
};
pub use moments::{candidate_weights, pless_moment_rhs, solve_moments, weight_distribution_moments};

use std::collections::BTreeMap;
use std::sync::Arc;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::{Elem, FieldCtx, FieldSpec, TowerCtx, MAX_FIELD_ORDER};
use crate::linalg::{self, Matrix};
use crate::linearized::{affine_root_count, circle_root_count, AffinePoly, CirclePoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Family {
    ExtendedPrimitive { p: u32, m: u32, h: u32 },
    PuncturedCyclic { p: u32, m: u32, h: u32 },
    UnitCircle { p: u32, m: u32, s: u32 },
    Generic,
}

#[derive(Clone, Debug)]
enum Alphabet {
    Field(Arc<FieldCtx>),
    Tower(Arc<TowerCtx>),
}

#[derive(Clone, Debug)]
pub struct LinearCode {
    alphabet: Alphabet,
    n: usize,
    k: usize,
    gen: Matrix,
    parity: Matrix,
    family: Family,
    labels: Vec<Elem>,
}

/// Serializable generator matrix with its field header.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorExport {
    pub field: FieldSpec,
    pub family: Family,
    pub n: usize,
    pub k: usize,
    pub column_labels: Vec<u32>,
    pub rows: Vec<Vec<u32>>,
}

/// A monomial (x -> u x + v) acting on column labels.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AffineMap {
    pub u: Elem,
    pub v: Elem,
}

fn check_ext_params(p: u32, m: u32, h: u32) -> Result<()> {
    if h == 0 || h >= m {
        return Err(Error::InvalidParameters(format!("need 1 <= h < m, got h = {h}, m = {m}")));
    }
    let order = (p as u64).checked_pow(m).unwrap_or(u64::MAX);
    if order > MAX_FIELD_ORDER {
        return Err(Error::FieldTooLarge { order, limit: MAX_FIELD_ORDER });
    }
    Ok(())
}

impl LinearCode {
    /// The (h+2) x q matrix with columns labelled alpha^1, ..., alpha^(q-1), 0.
    pub fn extended(p: u32, m: u32, h: u32) -> Result<Self> {
        check_ext_params(p, m, h)?;
        let field = Arc::new(FieldCtx::conway(p, m)?);
        Self::extended_over(field, h)
    }

    /// Same construction over an explicit field.
    pub fn extended_over(field: Arc<FieldCtx>, h: u32) -> Result<Self> {
        let (p, m) = (field.p(), field.m());
        check_ext_params(p, m, h)?;
        let labels = extended_labels(&field);
        let gen = poly_rows(&field, &labels, h);
        Self::assemble(Alphabet::Field(field), gen, Family::ExtendedPrimitive { p, m, h }, labels)
    }

    /// The extended matrix with its last (x = 0) column removed.
    pub fn punctured_cyclic(p: u32, m: u32, h: u32) -> Result<Self> {
        check_ext_params(p, m, h)?;
        let field = Arc::new(FieldCtx::conway(p, m)?);
        let mut labels = extended_labels(&field);
        labels.pop();
        let gen = poly_rows(&field, &labels, h);
        Self::assemble(Alphabet::Field(field), gen, Family::PuncturedCyclic { p, m, h }, labels)
    }

    /// Rows 1, x, x^(p^s), x^(p^s+1) over U_{q+1}, q = p^m with p odd.
    pub fn circle(p: u32, m: u32, s: u32) -> Result<Self> {
        if p == 2 {
            return Err(Error::InvalidParameters("the unit-circle family needs an odd prime".into()));
        }
        if m < 2 || s == 0 || s >= m {
            return Err(Error::InvalidParameters(format!("need m >= 2 and 1 <= s <= m - 1, got m = {m}, s = {s}")));
        }
        let base = FieldCtx::conway(p, m)?;
        let tower = Arc::new(TowerCtx::new(base)?);
        let labels = tower.unit_circle();
        let e = tower.ext();
        let gen = vec![
            vec![Elem::ONE; labels.len()],
            labels.clone(),
            labels.iter().map(|&x| e.frobenius(x, s)).collect(),
            labels.iter().map(|&x| e.mul(e.frobenius(x, s), x)).collect(),
        ];
        Self::assemble(Alphabet::Tower(tower), gen, Family::UnitCircle { p, m, s }, labels)
    }

    /// A code given by an arbitrary full-rank generator matrix.
    pub fn from_generator(field: Arc<FieldCtx>, gen: Matrix) -> Result<Self> {
        let n = gen.first().map_or(0, |r| r.len());
        if gen.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch { expected: n, got: gen.iter().map(|r| r.len()).find(|&l| l != n).unwrap_or(0) });
        }
        for row in &gen {
            for x in row {
                field.element(x.0)?;
            }
        }
        let labels = (0..n as u32).map(Elem).collect();
        Self::assemble(Alphabet::Field(field), gen, Family::Generic, labels)
    }

    fn assemble(alphabet: Alphabet, gen: Matrix, family: Family, labels: Vec<Elem>) -> Result<Self> {
        let field = match &alphabet {
            Alphabet::Field(f) => f.as_ref(),
            Alphabet::Tower(t) => t.ext(),
        };
        let n = gen.first().map_or(0, |r| r.len());
        let k = linalg::rank(field, &gen);
        if k != gen.len() {
            return Err(Error::InvalidParameters(format!(
                "generator has {} rows but rank {k}",
                gen.len()
            )));
        }
        let parity = linalg::null_space(field, &gen);
        Ok(Self { alphabet, n, k, gen, parity, family, labels })
    }

    /// The alphabet field (GF(q^2) for unit-circle codes).
    pub fn field(&self) -> &FieldCtx {
        match &self.alphabet {
            Alphabet::Field(f) => f,
            Alphabet::Tower(t) => t.ext(),
        }
    }

    pub fn tower(&self) -> Option<&TowerCtx> {
        match &self.alphabet {
            Alphabet::Tower(t) => Some(t),
            Alphabet::Field(_) => None,
        }
    }

    pub fn alphabet_size(&self) -> u64 {
        self.field().order() as u64
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn generator(&self) -> &Matrix {
        &self.gen
    }

    pub fn parity_check(&self) -> &Matrix {
        &self.parity
    }

    pub fn column_labels(&self) -> &[Elem] {
        &self.labels
    }

    pub fn column(&self, j: usize) -> Vec<Elem> {
        self.gen.iter().map(|r| r[j]).collect()
    }

    pub fn encode(&self, msg: &[Elem]) -> Result<Vec<Elem>> {
        if msg.len() != self.k {
            return Err(Error::DimensionMismatch { expected: self.k, got: msg.len() });
        }
        for x in msg {
            self.field().element(x.0)?;
        }
        Ok(linalg::vec_mat(self.field(), msg, &self.gen))
    }

    pub fn is_codeword(&self, word: &[Elem]) -> Result<bool> {
        if word.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, got: word.len() });
        }
        let f = self.field();
        Ok(self.parity.iter().all(|h| linalg::dot(f, h, word).is_zero()))
    }

    /// Weight through root counting of the message polynomial.
    pub fn codeword_weight_fast(&self, msg: &[Elem]) -> Result<u32> {
        if msg.len() != self.k {
            return Err(Error::DimensionMismatch { expected: self.k, got: msg.len() });
        }
        if msg.iter().all(|x| x.is_zero()) {
            return Err(Error::ZeroPolynomial);
        }
        match self.family {
            Family::ExtendedPrimitive { .. } => {
                let f = AffinePoly::new(self.field(), msg[0], msg[1..].to_vec())?;
                Ok(self.n as u32 - affine_root_count(&f)? as u32)
            }
            Family::PuncturedCyclic { .. } => {
                let f = AffinePoly::new(self.field(), msg[0], msg[1..].to_vec())?;
                let zero_is_root = msg[0].is_zero();
                Ok(self.n as u32 - (affine_root_count(&f)? as u32 - zero_is_root as u32))
            }
            Family::UnitCircle { s, .. } => {
                let t = self.tower().expect("circle code carries its tower");
                let f = CirclePoly::new(t, s, msg[1], msg[2], msg[3], msg[0])?;
                Ok(self.n as u32 - circle_root_count(&f)? as u32)
            }
            Family::Generic => Err(Error::InvalidParameters("no fast weight path for a generic code".into())),
        }
    }

    pub fn random_message<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<Elem> {
        let q = self.field().order();
        (0..self.k).map(|_| Elem(rng.gen_range(0..q))).collect()
    }

    /// Column index of each label, for permutation checks.
    fn label_positions(&self) -> BTreeMap<Elem, usize> {
        self.labels.iter().enumerate().map(|(i, &x)| (x, i)).collect()
    }

    /// Moves the symbol at label x to label u x + v.
    pub fn permute_affine(&self, word: &[Elem], map: AffineMap) -> Result<Vec<Elem>> {
        if word.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, got: word.len() });
        }
        let f = self.field();
        let pos = self.label_positions();
        let mut out = vec![Elem::ZERO; self.n];
        for (i, &x) in self.labels.iter().enumerate() {
            let y = f.add(f.mul(map.u, x), map.v);
            let j = *pos.get(&y).ok_or_else(|| Error::InvalidParameters("affine map leaves the label set".into()))?;
            out[j] = word[i];
        }
        Ok(out)
    }

    /// Samples affine maps and codewords and checks every permuted word stays in the code.
    pub fn affine_invariance_check<R: Rng + ?Sized>(&self, trials: usize, rng: &mut R) -> Result<bool> {
        if !matches!(self.family, Family::ExtendedPrimitive { .. }) {
            return Err(Error::InvalidParameters("affine invariance applies to the extended family".into()));
        }
        let q = self.field().order();
        for _ in 0..trials {
            let map = AffineMap { u: Elem(rng.gen_range(1..q)), v: Elem(rng.gen_range(0..q)) };
            let word = self.encode(&self.random_message(rng))?;
            if !self.is_codeword(&self.permute_affine(&word, map)?)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// True if the cyclic shift of every generator row is a codeword.
    pub fn is_cyclic(&self) -> bool {
        self.gen.iter().all(|row| {
            let mut shifted = Vec::with_capacity(self.n);
            shifted.push(row[self.n - 1]);
            shifted.extend_from_slice(&row[..self.n - 1]);
            self.is_codeword(&shifted).unwrap_or(false)
        })
    }

    pub fn export(&self) -> GeneratorExport {
        GeneratorExport {
            field: self.field().spec().clone(),
            family: self.family,
            n: self.n,
            k: self.k,
            column_labels: self.labels.iter().map(|x| x.0).collect(),
            rows: self.gen.iter().map(|r| r.iter().map(|x| x.0).collect()).collect(),
        }
    }
}

/// Column labels alpha^1, ..., alpha^(q-1), 0 of the extended family.
pub fn extended_labels(field: &FieldCtx) -> Vec<Elem> {
    let q = field.order() as i64;
    let mut labels: Vec<Elem> = (1..q).map(|i| field.alpha_pow(i)).collect();
    labels.push(Elem::ZERO);
    labels
}

/// Exact minimum distance of an extended code without enumeration.
///
/// A nonzero c + L(x) of degree at most p^h has at most p^h roots, so d >= q - p^h; the
/// bound is met by x^(p^h) - x when h | m and by the trace polynomial when h = m - 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceCertificate {
    pub lower_bound: u32,
    pub witness: Option<Vec<u32>>,
    pub witness_weight: Option<u32>,
    pub exact: bool,
}

impl LinearCode {
    pub fn distance_certificate(&self) -> Result<DistanceCertificate> {
        let Family::ExtendedPrimitive { p, m, h } = self.family else {
            return Err(Error::InvalidParameters("distance certificates apply to the extended family".into()));
        };
        let f = self.field();
        let q = f.order();
        let lower_bound = q - p.pow(h);
        let mut msg = vec![Elem::ZERO; self.k];
        if m % h == 0 {
            msg[1] = f.neg(Elem::ONE);
            msg[h as usize + 1] = Elem::ONE;
        } else if h == m - 1 {
            msg[1..].fill(Elem::ONE);
        } else {
            return Ok(DistanceCertificate { lower_bound, witness: None, witness_weight: None, exact: false });
        }
        let weight = linalg::hamming_weight(&self.encode(&msg)?);
        Ok(DistanceCertificate {
            lower_bound,
            witness: Some(msg.iter().map(|x| x.0).collect()),
            witness_weight: Some(weight),
            exact: weight == lower_bound,
        })
    }
}

fn poly_rows(field: &FieldCtx, labels: &[Elem], h: u32) -> Matrix {
    let mut gen = vec![vec![Elem::ONE; labels.len()]];
    for i in 0..=h {
        gen.push(labels.iter().map(|&x| field.frobenius(x, i)).collect());
    }
    gen
}

/// Weight distribution with provenance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightDistribution {
    pub n: usize,
    /// Nonzero counts only, keyed by weight.
    pub counts: BTreeMap<u32, u128>,
    pub source: WeightSource,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum WeightSource {
    BruteForce,
    ClosedForm { form: EnumeratorForm },
    MomentSolve,
}

impl WeightDistribution {
    pub fn get(&self, w: u32) -> u128 {
        self.counts.get(&w).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u128 {
        self.counts.values().sum()
    }

    pub fn min_distance(&self) -> Option<u32> {
        self.counts.iter().find(|(&w, &c)| w > 0 && c > 0).map(|(&w, _)| w)
    }

    pub fn nonzero_weights(&self) -> Vec<u32> {
        self.counts.iter().filter(|(&w, &c)| w > 0 && c > 0).map(|(&w, _)| w).collect()
    }

    /// Compares counts ignoring provenance.
    pub fn same_counts(&self, other: &WeightDistribution) -> bool {
        let strip = |d: &WeightDistribution| -> Vec<(u32, u128)> {
            d.counts.iter().filter(|(_, &c)| c > 0).map(|(&w, &c)| (w, c)).collect()
        };
        self.n == other.n && strip(self) == strip(other)
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("weight,count\n");
        for (w, c) in &self.counts {
            s.push_str(&format!("{w},{c}\n"));
        }
        s
    }

    /// 1 + A_d z^d + ... in the usual notation.
    pub fn enumerator_string(&self) -> String {
        self.counts
            .iter()
            .map(|(&w, &c)| match w {
                0 => c.to_string(),
                _ => format!("{c}z^{w}"),
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn extended_dimensions() {
        for (p, m, h) in [(2, 3, 2), (2, 4, 2), (3, 3, 2), (2, 2, 1), (3, 4, 3)] {
            let c = LinearCode::extended(p, m, h).unwrap();
            assert_eq!(c.n(), (p as usize).pow(m));
            assert_eq!(c.k(), h as usize + 2);
            assert_eq!(c.parity_check().len(), c.n() - c.k());
        }
        assert!(LinearCode::extended(2, 2, 3).is_err());
        assert!(LinearCode::extended(2, 21, 3).is_err());
    }

    #[test]
    fn punctured_is_cyclic() {
        let c = LinearCode::punctured_cyclic(2, 3, 1).unwrap();
        assert!(c.is_cyclic());
        assert_eq!((c.n(), c.k()), (7, 3));
        let c = LinearCode::punctured_cyclic(2, 3, 2).unwrap();
        assert_eq!((c.n(), c.k()), (7, 4));
        let c = LinearCode::punctured_cyclic(3, 3, 1).unwrap();
        assert_eq!((c.n(), c.k()), (26, 3));
        assert!(c.is_cyclic());
        // the extended code is not cyclic in this column order
        assert!(!LinearCode::extended(2, 3, 1).unwrap().is_cyclic());
    }

    #[test]
    fn circle_code_shape() {
        let c = LinearCode::circle(3, 2, 1).unwrap();
        assert_eq!((c.n(), c.k(), c.alphabet_size()), (10, 4, 81));
        assert!(c.is_cyclic());
        assert!(LinearCode::circle(2, 3, 1).is_err());
        assert!(LinearCode::circle(3, 2, 2).is_err());
    }

    #[test]
    fn encode_matches_polynomial_evaluation() {
        let c = LinearCode::extended(3, 3, 2).unwrap();
        let f = c.field();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..50 {
            let msg = c.random_message(&mut rng);
            let word = c.encode(&msg).unwrap();
            let poly = AffinePoly::new(f, msg[0], msg[1..].to_vec()).unwrap();
            for (j, &x) in c.column_labels().iter().enumerate() {
                assert_eq!(word[j], poly.eval(x));
            }
            assert!(c.is_codeword(&word).unwrap());
        }
        assert!(c.encode(&[Elem::ONE]).is_err());
    }

    #[test]
    fn special_codewords() {
        let c = LinearCode::extended(2, 4, 2).unwrap();
        let zero = c.encode(&[Elem::ZERO; 4]).unwrap();
        assert!(zero.iter().all(|x| x.is_zero()));
        let ones = c.encode(&[Elem::ONE, Elem::ZERO, Elem::ZERO, Elem::ZERO]).unwrap();
        assert_eq!(linalg::hamming_weight(&ones), 16);
        // x^4 - x vanishes on GF(4)
        let f = c.field();
        let msg = [Elem::ZERO, f.neg(Elem::ONE), Elem::ZERO, Elem::ONE];
        assert_eq!(linalg::hamming_weight(&c.encode(&msg).unwrap()), 12);
        assert_eq!(c.codeword_weight_fast(&msg).unwrap(), 12);
    }

    #[test]
    fn fast_weight_agrees_with_encoding_exhaustively() {
        let c = LinearCode::extended(2, 3, 2).unwrap();
        let q = 8u32;
        let mut seen = std::collections::BTreeSet::new();
        for idx in 1..q.pow(4) {
            let msg: Vec<Elem> = (0..4).map(|i| Elem(idx / q.pow(i) % q)).collect();
            let w = c.codeword_weight_fast(&msg).unwrap();
            assert_eq!(w, linalg::hamming_weight(&c.encode(&msg).unwrap()));
            seen.insert(w);
        }
        assert!(seen.iter().all(|w| [8, 7, 6, 4].contains(w)));
    }

    #[test]
    fn fast_weight_punctured_and_circle() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for c in [LinearCode::punctured_cyclic(3, 3, 2).unwrap(), LinearCode::circle(3, 2, 1).unwrap()] {
            for _ in 0..300 {
                let msg = c.random_message(&mut rng);
                if msg.iter().all(|x| x.is_zero()) {
                    continue;
                }
                let w = c.codeword_weight_fast(&msg).unwrap();
                assert_eq!(w, linalg::hamming_weight(&c.encode(&msg).unwrap()));
                if matches!(c.family(), Family::UnitCircle { .. }) {
                    assert!([6, 8, 9, 10].contains(&w));
                }
            }
        }
    }

    #[test]
    fn affine_invariance() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        for (p, m, h) in [(2, 4, 2), (3, 3, 2)] {
            let c = LinearCode::extended(p, m, h).unwrap();
            assert!(c.affine_invariance_check(100, &mut rng).unwrap());
        }
        let c = LinearCode::extended(2, 4, 2).unwrap();
        let w = c.encode(&c.random_message(&mut rng)).unwrap();
        assert_eq!(c.permute_affine(&w, AffineMap { u: Elem::ONE, v: Elem::ZERO }).unwrap(), w);
    }

    #[test]
    fn generic_code_from_matrix() {
        let f = Arc::new(FieldCtx::conway(2, 1).unwrap());
        let gen = vec![vec![Elem(1), Elem(0), Elem(1)], vec![Elem(0), Elem(1), Elem(1)]];
        let c = LinearCode::from_generator(f.clone(), gen).unwrap();
        assert_eq!((c.n(), c.k()), (3, 2));
        assert!(c.is_codeword(&[Elem(1), Elem(1), Elem(0)]).unwrap());
        assert!(!c.is_codeword(&[Elem(1), Elem(0), Elem(0)]).unwrap());
        assert!(c.codeword_weight_fast(&[Elem(1), Elem(0)]).is_err());
        let singular = vec![vec![Elem(1), Elem(1)], vec![Elem(1), Elem(1)]];
        assert!(LinearCode::from_generator(f, singular).is_err());
    }

    #[test]
    fn certificates() {
        for (p, m, h) in [(3, 5, 4), (2, 4, 2), (2, 6, 3), (2, 5, 4), (3, 3, 2)] {
            let c = LinearCode::extended(p, m, h).unwrap();
            let cert = c.distance_certificate().unwrap();
            assert!(cert.exact, "{p} {m} {h}");
            assert_eq!(cert.lower_bound, (p as u32).pow(m) - (p as u32).pow(h));
        }
        let cert = LinearCode::extended(2, 5, 2).unwrap().distance_certificate().unwrap();
        assert!(!cert.exact && cert.witness.is_none());
        assert!(LinearCode::circle(3, 2, 1).unwrap().distance_certificate().is_err());
    }

    #[test]
    fn export_round_trips_through_json() {
        let c = LinearCode::extended(2, 3, 1).unwrap();
        let ex = c.export();
        let back: GeneratorExport = serde_json::from_str(&serde_json::to_string(&ex).unwrap()).unwrap();
        assert_eq!(back, ex);
        assert_eq!(back.column_labels.last(), Some(&0));
    }
}
