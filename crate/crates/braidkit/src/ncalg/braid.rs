//! Braiding of q-spacetime tensors, braided antipode, and the quadratic element x.x.

use super::{NCPoly, RelationSet, Word};
use crate::qcoeff::QRat;
use crate::report::VerificationReport;
use crate::rtensor::{MetricData, RMatrix};
use std::collections::BTreeMap;

/// Element of A (x) A, keyed by (left word, right word).
pub type NCTensor = BTreeMap<(Word, Word), QRat>;

pub(crate) fn tensor_add(t: &mut NCTensor, a: Word, b: Word, c: &QRat) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match t.entry((a, b)) {
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

pub(crate) type Letters = BTreeMap<Vec<u8>, QRat>;

/// One crossing at (pos, pos+1): x_i x_j -> x_b x_a R^a_i^b_j.
fn cross(v: &Letters, pos: usize, r: &RMatrix) -> Letters {
    let mut out = Letters::new();
    for (key, c) in v {
        for (a, b, rv) in r.column(key[pos] as usize, key[pos + 1] as usize) {
            let mut k = key.clone();
            k[pos] = *b;
            k[pos + 1] = *a;
            crate::rtensor::add_into(&mut out, k, &(c * rv));
        }
    }
    out
}

/// Braid the letters of v leftwards across those of u; returns raw letter sequences.
pub(crate) fn braid_words(u: &Word, v: &Word, r: &RMatrix) -> Letters {
    let m = u.len();
    let mut cur: Letters = [(u.concat(v).0, QRat::one())].into();
    for t in 0..v.len() {
        for pos in (t..m + t).rev() {
            cur = cross(&cur, pos, r);
        }
    }
    cur
}

/// Psi(a (x) b), both output slots reduced.
pub fn braiding(a: &NCPoly, b: &NCPoly, r: &RMatrix, rels: &RelationSet) -> NCTensor {
    let mut raw = NCTensor::new();
    for (u, cu) in a.terms() {
        for (v, cv) in b.terms() {
            let k = v.len();
            for (letters, c) in braid_words(u, v, r) {
                let left = Word(letters[..k].to_vec());
                let right = Word(letters[k..].to_vec());
                tensor_add(&mut raw, left, right, &(&c * &(cu * cv)));
            }
        }
    }
    reduce_tensor(&raw, rels)
}

pub fn reduce_tensor(t: &NCTensor, rels: &RelationSet) -> NCTensor {
    let mut out = NCTensor::new();
    for ((a, b), c) in t {
        let ra = rels.reduce_word(a);
        if ra.is_zero() {
            continue;
        }
        let rb = rels.reduce_word(b);
        for (wa, ca) in ra.terms() {
            for (wb, cb) in rb.terms() {
                tensor_add(&mut out, wa.clone(), wb.clone(), &(c * &(ca * cb)));
            }
        }
    }
    out
}

/// S(x_i u) = -.Psi(x_i (x) S(u)), reducing after each step.
pub fn braided_antipode(p: &NCPoly, r: &RMatrix, rels: &RelationSet) -> NCPoly {
    let mut out = NCPoly::zero();
    for (w, c) in p.terms() {
        out.add_scaled(&antipode_word(w, r, rels), c);
    }
    out
}

fn antipode_word(w: &Word, r: &RMatrix, rels: &RelationSet) -> NCPoly {
    if w.is_empty() {
        return NCPoly::one();
    }
    let rest = antipode_word(&Word(w.0[1..].to_vec()), r, rels);
    let head = Word(vec![w.0[0]]);
    let mut out = NCPoly::zero();
    for (u, cu) in rest.terms() {
        // multiply Psi(x_i (x) u): the letters of u move left past x_i
        for (letters, c) in braid_words(&head, u, r) {
            out.add_term(Word(letters), &-(&c * cu));
        }
    }
    rels.reduce(&out)
}

/// Independent path: (-1)^d times the full reversing braid on the unreduced word, then reduce.
pub fn braided_antipode_halftwist(p: &NCPoly, r: &RMatrix, rels: &RelationSet) -> NCPoly {
    let mut out = NCPoly::zero();
    for (w, c) in p.terms() {
        let mut cur: Letters = [(w.0.clone(), QRat::one())].into();
        for t in 1..w.len() {
            for pos in (0..t).rev() {
                cur = cross(&cur, pos, r);
            }
        }
        let sign = if w.len() % 2 == 0 { QRat::one() } else { QRat::from_int(-1) };
        for (letters, v) in cur {
            out.add_term(Word(letters), &(&v * &(c * &sign)));
        }
    }
    rels.reduce(&out)
}

/// x.x = x_a x_b eta^{ba}, required to be central.
pub fn metric_square(eta: &MetricData, rels: &RelationSet) -> Result<NCPoly, String> {
    let n = eta.n;
    let mut p = NCPoly::zero();
    for a in 1..=n {
        for b in 1..=n {
            p.add_term(Word(vec![a as u8, b as u8]), eta.upper(b, a));
        }
    }
    let xx = rels.reduce(&p);
    for i in 1..=n {
        let xi = NCPoly::x(i);
        let comm = rels.reduce(&(&xx.mul(&xi) - &xi.mul(&xx)));
        if !comm.is_zero() {
            return Err(format!("x.x not central: [x.x, x{i}] = {comm}"));
        }
    }
    Ok(xx)
}

/// (Psi x id)(id x Psi)(Psi x id) = (id x Psi)(Psi x id)(id x Psi) on generator triples.
pub fn check_hexagon(r: &RMatrix) -> VerificationReport {
    let n = r.n() as u8;
    let mut witness = None;
    'o: for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                let e: Letters = [(vec![i, j, k], QRat::one())].into();
                let lhs = cross(&cross(&cross(&e, 0, r), 1, r), 0, r);
                let rhs = cross(&cross(&cross(&e, 1, r), 0, r), 1, r);
                if lhs != rhs {
                    witness = Some(format!("generators x{i} x{j} x{k}"));
                    break 'o;
                }
            }
        }
    }
    VerificationReport::from_witness("braid-hexagon", witness).param("matrix", &r.name)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::Orientation;
    use crate::rtensor::{build_euclidean_gauge, standard_su2};

    fn setup() -> (RMatrix, RelationSet) {
        let pair = build_euclidean_gauge(&standard_su2()).unwrap();
        let rels = RelationSet::build(&pair.r_prime, Orientation::Covector);
        (pair.r, rels)
    }

    #[test]
    fn unit_braids_trivially() {
        let (r, rels) = setup();
        let b = NCPoly::x(3);
        let t = braiding(&NCPoly::one(), &b, &r, &rels);
        assert_eq!(t.len(), 1);
        assert_eq!(t[&(Word::letter(3), Word::empty())], QRat::one());
    }

    #[test]
    fn generator_braiding_is_tensor_lookup() {
        let (r, rels) = setup();
        for i in 1..=4 {
            for j in 1..=4 {
                let t = braiding(&NCPoly::x(i), &NCPoly::x(j), &r, &rels);
                let mut want = NCTensor::new();
                for a in 1..=4 {
                    for b in 1..=4 {
                        tensor_add(&mut want, Word::letter(b), Word::letter(a), r.get(a, i, b, j));
                    }
                }
                assert_eq!(t, want);
            }
        }
    }

    #[test]
    fn antipode_low_degree() {
        let (r, rels) = setup();
        assert_eq!(braided_antipode(&NCPoly::one(), &r, &rels), NCPoly::one());
        assert_eq!(braided_antipode(&NCPoly::x(2), &r, &rels), -&NCPoly::x(2));
        // S(x_i x_j) = x_b x_a R^a_i^b_j
        let (i, j) = (2, 3);
        let mut want = NCPoly::zero();
        for a in 1..=4 {
            for b in 1..=4 {
                want.add_term(Word(vec![b as u8, a as u8]), r.get(a, i, b, j));
            }
        }
        let got = braided_antipode(&NCPoly::word(&[i as u8, j as u8]), &r, &rels);
        assert_eq!(got, rels.reduce(&want));
    }

    #[test]
    fn antipode_paths_agree_to_degree_three() {
        let (r, rels) = setup();
        for w in rels.normal_words_upto(3) {
            let p = NCPoly::monomial(w, QRat::one());
            assert_eq!(
                braided_antipode(&p, &r, &rels),
                braided_antipode_halftwist(&p, &r, &rels)
            );
        }
    }

    #[test]
    fn hexagon_holds_for_gauge_matrix() {
        let (r, _) = setup();
        assert!(check_hexagon(&r).passed());
    }
}
