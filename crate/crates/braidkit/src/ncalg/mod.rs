//! Noncommutative polynomials over Q(q) modulo quadratic relations.

mod braid;
mod relations;
mod text;

pub(crate) use braid::braid_words as braid_words_pub;
pub use braid::{reduce_tensor, braided_antipode, braided_antipode_halftwist, braiding, check_hexagon, metric_square, NCTensor};
pub use relations::{check_confluence, Orientation, RelationSet};
pub use text::{parse_ncpoly, render};

use crate::qcoeff::QRat;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

/// Monomial as a sequence of 1-based generator indices.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Word(pub Vec<u8>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_slice(s: &[u8]) -> Self {
        Word(s.to_vec())
    }

    pub fn letter(i: usize) -> Self {
        Word(vec![i as u8])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, o: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + o.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&o.0);
        Word(v)
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }
}

/// Degree-lexicographic with x1 < x2 < ... .
impl Ord for Word {
    fn cmp(&self, o: &Self) -> Ordering {
        self.0.len().cmp(&o.0.len()).then_with(|| self.0.cmp(&o.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.0.iter().map(|i| format!("x{i}")).collect();
        write!(f, "{}", parts.join("."))
    }
}

/// Finite Q(q)-combination of words, no zero coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct NCPoly {
    terms: BTreeMap<Word, QRat>,
}

impl NCPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Word::empty(), QRat::one())
    }

    pub fn constant(c: QRat) -> Self {
        Self::monomial(Word::empty(), c)
    }

    pub fn monomial(w: Word, c: QRat) -> Self {
        let mut p = Self::zero();
        p.add_term(w, &c);
        p
    }

    pub fn word(w: &[u8]) -> Self {
        Self::monomial(Word::from_slice(w), QRat::one())
    }

    /// The generator x_i.
    pub fn x(i: usize) -> Self {
        Self::monomial(Word::letter(i), QRat::one())
    }

    pub fn add_term(&mut self, w: Word, c: &QRat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            Entry::Occupied(mut e) => {
                let s = e.get() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, o: &NCPoly, c: &QRat) {
        if c.is_zero() {
            return;
        }
        for (w, v) in &o.terms {
            self.add_term(w.clone(), &(v * c));
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &QRat)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Word, QRat)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, w: &Word) -> QRat {
        self.terms.get(w).cloned().unwrap_or_else(QRat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest word length present (0 for zero).
    pub fn degree(&self) -> usize {
        self.terms.keys().map(|w| w.len()).max().unwrap_or(0)
    }

    /// True when every term has length d (vacuous for zero).
    pub fn is_homogeneous(&self, d: usize) -> bool {
        self.terms.keys().all(|w| w.len() == d)
    }

    pub fn scale(&self, c: &QRat) -> NCPoly {
        let mut out = NCPoly::zero();
        out.add_scaled(self, c);
        out
    }

    /// Concatenation product without reduction.
    pub fn mul(&self, o: &NCPoly) -> NCPoly {
        let mut out = NCPoly::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &o.terms {
                out.add_term(w1.concat(w2), &(c1 * c2));
            }
        }
        out
    }

    /// Apply f to each coefficient, dropping zeros.
    pub fn map_coeffs<E>(&self, f: impl Fn(&QRat) -> Result<QRat, E>) -> Result<NCPoly, E> {
        let mut out = NCPoly::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), &f(c)?);
        }
        Ok(out)
    }
}

impl std::ops::Add<&NCPoly> for &NCPoly {
    type Output = NCPoly;
    fn add(self, o: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        out.add_scaled(o, &QRat::one());
        out
    }
}

impl std::ops::Sub<&NCPoly> for &NCPoly {
    type Output = NCPoly;
    fn sub(self, o: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        out.add_scaled(o, &QRat::from_int(-1));
        out
    }
}

impl std::ops::Neg for &NCPoly {
    type Output = NCPoly;
    fn neg(self) -> NCPoly {
        self.scale(&QRat::from_int(-1))
    }
}

impl fmt::Display for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", render(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deglex_order() {
        let a = Word::from_slice(&[2]);
        let b = Word::from_slice(&[1, 1]);
        let c = Word::from_slice(&[1, 2]);
        assert!(a < b && b < c);
        assert!(Word::empty() < a);
    }

    #[test]
    fn cancellation_drops_terms() {
        let p = &NCPoly::x(1) - &NCPoly::x(1);
        assert!(p.is_zero());
    }

    #[test]
    fn concatenation_product() {
        let p = NCPoly::x(1).mul(&(&NCPoly::x(2) + &NCPoly::one()));
        assert_eq!(p.coeff(&Word::from_slice(&[1, 2])), QRat::one());
        assert_eq!(p.coeff(&Word::from_slice(&[1])), QRat::one());
        assert_eq!(p.degree(), 2);
    }
}
