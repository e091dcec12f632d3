//! Quantum metric: centrality of x.x and its braiding scale.

use super::{MetricData, PairData, RError};
use crate::ncalg::{braiding, metric_square, NCPoly, RelationSet, Word};
use crate::qcoeff::{QMatrix, QRat};
use crate::report::VerificationReport;
use std::collections::HashMap;
use std::time::Instant;

/// Solve for eta^{ba}: x.x central modulo the relations, and
/// Psi(x_a x_b (x) x_i) eta^{ba} = lambda^{-2} x_i (x) x_a x_b eta^{ba} as free tensors.
pub fn find_metric(pair: &PairData, rels: &RelationSet) -> Result<MetricData, RError> {
    let n = pair.n();
    let unknown = |b: usize, a: usize| (b - 1) * n + (a - 1);
    let lam2 = pair.lambda.pow(-2);
    let mut eqs: Vec<HashMap<usize, QRat>> = Vec::new();

    for i in 1..=n {
        let mut acc: HashMap<(Vec<u8>, usize), HashMap<usize, QRat>> = HashMap::new();
        let mut put = |key: Vec<u8>, split: usize, u: usize, c: QRat| {
            let e = acc.entry((key, split)).or_default().entry(u).or_insert_with(QRat::zero);
            *e = &*e + &c;
        };
        for a in 1..=n {
            for b in 1..=n {
                let u = unknown(b, a);
                let ab = Word(vec![a as u8, b as u8]);
                for (letters, c) in crate::ncalg::braid_words_pub(&ab, &Word::letter(i), &pair.r) {
                    put(letters, 1, u, c);
                }
                put(vec![i as u8, a as u8, b as u8], 1, u, -&lam2);
            }
        }
        eqs.extend(acc.into_values());
    }

    for i in 1..=n {
        let mut acc: HashMap<Word, HashMap<usize, QRat>> = HashMap::new();
        for a in 1..=n {
            for b in 1..=n {
                let mut p = NCPoly::word(&[a as u8, b as u8, i as u8]);
                p.add_term(Word(vec![i as u8, a as u8, b as u8]), &QRat::from_int(-1));
                for (w, c) in rels.reduce(&p).into_terms() {
                    acc.entry(w).or_default().insert(unknown(b, a), c);
                }
            }
        }
        eqs.extend(acc.into_values());
    }

    let eqs: Vec<_> = eqs
        .into_iter()
        .filter(|e| e.values().any(|v| !v.is_zero()))
        .collect();
    let mut m = QMatrix::zeros(eqs.len(), n * n);
    for (r, e) in eqs.iter().enumerate() {
        for (&u, v) in e {
            m.set(r, u, v.clone());
        }
    }
    let ns = m.nullspace();
    match ns.len() {
        0 => return Err(RError::NoMetric),
        1 => {}
        d => return Err(RError::MetricNotUnique(d)),
    }
    let mut upper = QMatrix::zeros(n, n);
    for b in 1..=n {
        for a in 1..=n {
            upper.set(b - 1, a - 1, ns[0][unknown(b, a)].clone());
        }
    }
    let raw = MetricData::from_upper(upper).map_err(|_| RError::NoMetric)?;
    // scale so the first nonzero lower entry (row-major) is 1
    let mut lead = QRat::one();
    'f: for r in 0..n {
        for c in 0..n {
            if !raw.eta_lower.get(r, c).is_zero() {
                lead = raw.eta_lower.get(r, c).clone();
                break 'f;
            }
        }
    }
    let inv = lead.inv()?;
    let mut lower = raw.eta_lower.clone();
    for r in 0..n {
        for c in 0..n {
            lower.set(r, c, raw.eta_lower.get(r, c) * &inv);
        }
    }
    MetricData::from_lower(lower)
}

/// Re-verify both metric conditions through the reduced algebra and the braiding operator.
pub fn check_metric(pair: &PairData, rels: &RelationSet, eta: &MetricData) -> VerificationReport {
    let start = Instant::now();
    let check = |w: Option<String>| VerificationReport::from_witness("metric", w);
    let ident = eta.eta_lower.transpose().mul(&eta.eta_upper);
    if ident != QMatrix::identity(eta.n) {
        return check(Some("eta^{ij} is not the transposed inverse of eta_{ij}".into())).timed(start);
    }
    let xx = match metric_square(eta, rels) {
        Ok(p) => p,
        Err(e) => return check(Some(e)).timed(start),
    };
    let lam2 = pair.lambda.pow(-2);
    for i in 1..=pair.n() {
        let xi = NCPoly::x(i);
        let lhs = braiding(&xx, &xi, &pair.r, rels);
        for ((a, b), c) in &lhs {
            let want = if a.len() == 1 && a.0[0] as usize == i {
                &xx.coeff(b) * &lam2
            } else {
                QRat::zero()
            };
            if *c != want {
                return check(Some(format!("Psi(x.x (x) x{i}) has coefficient {c} on {a} (x) {b}")))
                    .timed(start);
            }
        }
        if lhs.len() != xx.len() {
            return check(Some(format!("Psi(x.x (x) x{i}) has the wrong support"))).timed(start);
        }
    }
    check(None).note(format!("x.x = {xx}")).timed(start)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::Orientation;
    use crate::rtensor::{build_euclidean_gauge, standard_su2, RMatrix, Reality};

    #[test]
    fn euclidean_metric_is_the_q_antidiagonal() {
        let pair = build_euclidean_gauge(&standard_su2()).unwrap();
        let rels = RelationSet::build(&pair.r_prime, Orientation::Covector);
        let eta = find_metric(&pair, &rels).unwrap();
        let qi = QRat::q_pow(-1);
        let want = [
            [0, 0, 0, 1].map(QRat::from_int),
            [QRat::zero(), QRat::zero(), -&qi, QRat::zero()],
            [QRat::zero(), -QRat::q(), QRat::zero(), QRat::zero()],
            [1, 0, 0, 0].map(QRat::from_int),
        ];
        for (r, row) in want.iter().enumerate() {
            for (c, v) in row.iter().enumerate() {
                assert_eq!(eta.eta_lower.get(r, c), v, "eta_lower[{r}][{c}]");
            }
        }
        assert!(check_metric(&pair, &rels, &eta).passed());
    }

    #[test]
    fn classical_case_is_not_unique() {
        let id = RMatrix::identity(2);
        let pair = PairData::new(id.clone(), id, QRat::one(), Reality::None).unwrap();
        let rels = RelationSet::build(&pair.r_prime, Orientation::Covector);
        assert_eq!(find_metric(&pair, &rels).unwrap_err(), RError::MetricNotUnique(4));
    }
}
