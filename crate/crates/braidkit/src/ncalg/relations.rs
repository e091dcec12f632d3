//! Echelonized quadratic relations and rewriting to normal form.

use super::{NCPoly, Word};
use crate::qcoeff::{QMatrix, QRat};
use crate::report::VerificationReport;
use crate::rtensor::RMatrix;
use std::collections::HashMap;
use std::sync::RwLock;
use std::time::Instant;

/// Which of the three algebras built from R' the relations describe.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    /// x_i x_j = x_b x_a R'^a_i^b_j
    Covector,
    /// c_j c_i = c_a c_b R'^a_i^b_j
    Opposite,
    /// p^i p^j = R'^i_a^j_b p^b p^a
    Vector,
}

#[derive(Debug)]
pub struct RelationSet {
    n: usize,
    orientation: Orientation,
    /// Reduced echelon rows, each with its pivot (largest) word first.
    rows: Vec<(Word, NCPoly)>,
    /// pivot pair -> replacement (pivot = replacement in the algebra)
    rules: HashMap<[u8; 2], Vec<(Word, QRat)>>,
    memo: RwLock<HashMap<Word, NCPoly>>,
}

impl Clone for RelationSet {
    fn clone(&self) -> Self {
        RelationSet {
            n: self.n,
            orientation: self.orientation,
            rows: self.rows.clone(),
            rules: self.rules.clone(),
            memo: RwLock::new(HashMap::new()),
        }
    }
}

impl RelationSet {
    /// Spanning relations from R', echelonized with the largest word as pivot.
    pub fn build(r_prime: &RMatrix, orientation: Orientation) -> Self {
        let n = r_prime.n();
        let mut spanning = Vec::new();
        for i in 1..=n {
            for j in 1..=n {
                let mut p = NCPoly::zero();
                match orientation {
                    Orientation::Covector => {
                        p.add_term(Word(vec![i as u8, j as u8]), &QRat::one());
                        for a in 1..=n {
                            for b in 1..=n {
                                let v = r_prime.get(a, i, b, j);
                                p.add_term(Word(vec![b as u8, a as u8]), &-v);
                            }
                        }
                    }
                    Orientation::Opposite => {
                        p.add_term(Word(vec![j as u8, i as u8]), &QRat::one());
                        for a in 1..=n {
                            for b in 1..=n {
                                let v = r_prime.get(a, i, b, j);
                                p.add_term(Word(vec![a as u8, b as u8]), &-v);
                            }
                        }
                    }
                    Orientation::Vector => {
                        p.add_term(Word(vec![i as u8, j as u8]), &QRat::one());
                        for a in 1..=n {
                            for b in 1..=n {
                                let v = r_prime.get(i, a, j, b);
                                p.add_term(Word(vec![b as u8, a as u8]), &-v);
                            }
                        }
                    }
                }
                if !p.is_zero() {
                    spanning.push(p);
                }
            }
        }
        Self::from_spanning(n, orientation, spanning)
    }

    /// Echelonize arbitrary homogeneous quadratic relations.
    pub fn from_spanning(n: usize, orientation: Orientation, spanning: Vec<NCPoly>) -> Self {
        // columns ordered from the largest degree-2 word down, so rref pivots are leading words
        let mut cols: Vec<Word> = Vec::new();
        for i in 1..=n {
            for j in 1..=n {
                cols.push(Word(vec![i as u8, j as u8]));
            }
        }
        cols.sort();
        cols.reverse();
        let col_of: HashMap<&Word, usize> = cols.iter().enumerate().map(|(c, w)| (w, c)).collect();
        let mut m = QMatrix::zeros(spanning.len(), cols.len());
        for (r, p) in spanning.iter().enumerate() {
            for (w, v) in p.terms() {
                assert_eq!(w.len(), 2, "relations must be homogeneous quadratic");
                m.set(r, col_of[w], v.clone());
            }
        }
        let pivots = m.rref();
        let mut rows = Vec::new();
        let mut rules = HashMap::new();
        for (r, &pc) in pivots.iter().enumerate() {
            let mut p = NCPoly::zero();
            let mut rest = Vec::new();
            for (c, w) in cols.iter().enumerate() {
                let v = m.get(r, c);
                if v.is_zero() {
                    continue;
                }
                p.add_term(w.clone(), v);
                if c != pc {
                    rest.push((w.clone(), -v));
                }
            }
            let piv = cols[pc].clone();
            rules.insert([piv.0[0], piv.0[1]], rest);
            rows.push((piv, p));
        }
        RelationSet {
            n,
            orientation,
            rows,
            rules,
            memo: RwLock::new(HashMap::new()),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    /// Dimension of the relation space.
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Echelon rows (pivot word, full relation with pivot coefficient 1).
    pub fn relations(&self) -> &[(Word, NCPoly)] {
        &self.rows
    }

    pub fn is_pivot(&self, a: u8, b: u8) -> bool {
        self.rules.contains_key(&[a, b])
    }

    fn first_pivot(&self, w: &Word) -> Option<usize> {
        (0..w.len().saturating_sub(1)).find(|&k| self.is_pivot(w.0[k], w.0[k + 1]))
    }

    fn rewrite_at(&self, w: &Word, k: usize) -> NCPoly {
        let mut out = NCPoly::zero();
        for (rep, c) in &self.rules[&[w.0[k], w.0[k + 1]]] {
            let mut v = w.0[..k].to_vec();
            v.extend_from_slice(&rep.0);
            v.extend_from_slice(&w.0[k + 2..]);
            out.add_term(Word(v), c);
        }
        out
    }

    /// Normal form of a single word (leftmost pivot first).
    pub fn reduce_word(&self, w: &Word) -> NCPoly {
        if let Some(p) = self.memo.read().unwrap().get(w) {
            return p.clone();
        }
        let res = match self.first_pivot(w) {
            None => NCPoly::monomial(w.clone(), QRat::one()),
            Some(k) => self.reduce(&self.rewrite_at(w, k)),
        };
        self.memo.write().unwrap().insert(w.clone(), res.clone());
        res
    }

    pub fn reduce(&self, p: &NCPoly) -> NCPoly {
        let mut out = NCPoly::zero();
        for (w, c) in p.terms() {
            out.add_scaled(&self.reduce_word(w), c);
        }
        out
    }

    pub fn is_normal(&self, w: &Word) -> bool {
        self.first_pivot(w).is_none()
    }

    /// Normal words of length d in increasing order.
    pub fn normal_words(&self, d: usize) -> Vec<Word> {
        let mut out = vec![Vec::new()];
        for _ in 0..d {
            let mut next = Vec::new();
            for w in &out {
                for i in 1..=self.n as u8 {
                    if w.last().is_some_and(|&l| self.is_pivot(l, i)) {
                        continue;
                    }
                    let mut v: Vec<u8> = w.clone();
                    v.push(i);
                    next.push(v);
                }
            }
            out = next;
        }
        let mut ws: Vec<Word> = out.into_iter().map(Word).collect();
        ws.sort();
        ws
    }

    /// Normal words of every length up to d.
    pub fn normal_words_upto(&self, d: usize) -> Vec<Word> {
        (0..=d).flat_map(|k| self.normal_words(k)).collect()
    }
}

fn all_words(n: usize, d: usize) -> Vec<Word> {
    let mut out = vec![Vec::new()];
    for _ in 0..d {
        out = out
            .into_iter()
            .flat_map(|w: Vec<u8>| {
                (1..=n as u8).map(move |i| {
                    let mut v = w.clone();
                    v.push(i);
                    v
                })
            })
            .collect();
    }
    out.into_iter().map(Word).collect()
}

/// Every word of the given length gives the same normal form from every first rewrite.
pub fn check_confluence(rels: &RelationSet, degree: usize) -> VerificationReport {
    let start = Instant::now();
    let mut witness = None;
    let mut ambiguous = 0;
    for w in all_words(rels.n, degree) {
        let sites: Vec<usize> = (0..degree.saturating_sub(1))
            .filter(|&k| rels.is_pivot(w.0[k], w.0[k + 1]))
            .collect();
        if sites.len() < 2 {
            continue;
        }
        ambiguous += 1;
        let first = rels.reduce(&rels.rewrite_at(&w, sites[0]));
        for &k in &sites[1..] {
            let other = rels.reduce(&rels.rewrite_at(&w, k));
            if other != first {
                witness = Some(format!("word {w}: {} vs {}", first, other));
                break;
            }
        }
        if witness.is_some() {
            break;
        }
    }
    VerificationReport::from_witness("confluence", witness)
        .param("degree", degree)
        .note(format!("{ambiguous} overlapping words checked"))
        .timed(start)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rtensor::{build_euclidean_gauge, standard_su2};

    #[test]
    fn identity_r_prime_gives_commutative_relations() {
        let rels = RelationSet::build(&RMatrix::identity(3), Orientation::Covector);
        assert_eq!(rels.dim(), 3);
        let p = rels.reduce(&NCPoly::word(&[2, 1]));
        assert_eq!(p, NCPoly::word(&[1, 2]));
    }

    #[test]
    fn permutation_r_prime_gives_free_algebra() {
        let rels = RelationSet::build(&RMatrix::permutation(3), Orientation::Covector);
        assert_eq!(rels.dim(), 0);
        assert_eq!(rels.normal_words(2).len(), 9);
    }

    #[test]
    fn euclidean_relation_count_and_hilbert_series() {
        let pair = build_euclidean_gauge(&standard_su2()).unwrap();
        let rels = RelationSet::build(&pair.r_prime, Orientation::Covector);
        assert_eq!(rels.dim(), 6);
        let counts: Vec<usize> = (0..5).map(|d| rels.normal_words(d).len()).collect();
        assert_eq!(counts, vec![1, 4, 10, 20, 35]);
        assert!(check_confluence(&rels, 3).passed());
    }

    #[test]
    fn relations_reduce_to_zero() {
        let pair = build_euclidean_gauge(&standard_su2()).unwrap();
        for o in [Orientation::Covector, Orientation::Opposite, Orientation::Vector] {
            let rels = RelationSet::build(&pair.r_prime, o);
            for (_, r) in rels.relations() {
                assert!(rels.reduce(r).is_zero());
            }
        }
    }

    #[test]
    fn non_confluent_relations_are_reported() {
        // x2x1 = x1x1, x3x2 = x2x2 ... overlap x3x2x1 rewrites two ways
        let rels = RelationSet::from_spanning(
            3,
            Orientation::Covector,
            vec![
                &NCPoly::word(&[2, 1]) - &NCPoly::word(&[1, 1]),
                &NCPoly::word(&[3, 2]) - &NCPoly::word(&[2, 2]),
            ],
        );
        let rep = check_confluence(&rels, 3);
        assert!(!rep.passed());
        assert!(rep.witness.unwrap().contains("x3.x2.x1"));
    }
}
