//! Standard su2 data and the two spinorial gauges built from a small Hecke R.

use super::{check_hecke, check_ybe, Gauge, PairData, RError, RMatrix, Reality};
use crate::qcoeff::QRat;

/// diag(q,1,1,q) plus q - q^{-1} at row (1,2), column (2,1).
pub fn standard_su2() -> RMatrix {
    RMatrix::from_entries(
        2,
        "su2",
        [
            ([1, 1, 1, 1], QRat::q()),
            ([1, 1, 2, 2], QRat::one()),
            ([2, 2, 1, 1], QRat::one()),
            ([2, 2, 2, 2], QRat::q()),
            ([1, 2, 2, 1], QRat::qdiff()),
        ],
    )
}

fn split(i: usize, s: usize) -> (usize, usize) {
    ((i - 1) / s + 1, (i - 1) % s + 1)
}

/// ((R^{t2})^{-1})^{t2}
pub fn second_inverse(r: &RMatrix) -> Result<RMatrix, RError> {
    let t = r
        .partial_transpose2()
        .inverse()
        .map_err(|_| RError::NoSecondInverse)?;
    let mut out = t.partial_transpose2();
    out.name = format!("{}~", r.name);
    Ok(out)
}

fn require_hecke(r: &RMatrix) -> Result<(), RError> {
    let h = check_hecke(r);
    match h.passed() {
        true => Ok(()),
        false => Err(RError::NotHecke(h.witness.unwrap_or_default())),
    }
}

fn build_big(s: usize, name: &str, f: impl Fn([usize; 2], [usize; 2], [usize; 2], [usize; 2]) -> QRat) -> RMatrix {
    let n = s * s;
    let mut e = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                for l in 1..=n {
                    let (i0, i1) = split(i, s);
                    let (j0, j1) = split(j, s);
                    let (k0, k1) = split(k, s);
                    let (l0, l1) = split(l, s);
                    let v = f([i0, i1], [j0, j1], [k0, k1], [l0, l1]);
                    if !v.is_zero() {
                        e.push(([i, j, k, l], v));
                    }
                }
            }
        }
    }
    RMatrix::from_entries(n, name, e)
}

/// Euclidean gauge: n = s^2 with multi-index i = (i0, i1) flattened row-major.
pub fn build_euclidean_gauge(small: &RMatrix) -> Result<PairData, RError> {
    require_hecke(small)?;
    let s = small.n();
    let ri = small.inverse()?;
    let rp = build_big(s, "R'_euc", |[i0, i1], [j0, j1], [k0, k1], [l0, l1]| {
        ri.get(l0, k0, j0, i0) * small.get(i1, j1, k1, l1)
    });
    let rb = build_big(s, "R_euc", |[i0, i1], [j0, j1], [k0, k1], [l0, l1]| {
        small.get(j0, i0, l0, k0) * small.get(i1, j1, k1, l1)
    });
    let mut pair = PairData::new(rp, rb, QRat::q_pow(-1), Reality::TypeI)?;
    pair.spinor = Some((small.clone(), Gauge::Euclidean));
    Ok(pair)
}

/// sum_{a,b,c,d} F(d,k0,j0,a) R(k1,b,a,i0) R(i1,c,b,l1) R~(c,j1,l0,d)
fn mink_entry(
    small: &RMatrix,
    rt: &RMatrix,
    first: impl Fn(usize, usize, usize, usize) -> QRat,
    [i0, i1]: [usize; 2],
    [j0, j1]: [usize; 2],
    [k0, k1]: [usize; 2],
    [l0, l1]: [usize; 2],
) -> QRat {
    let s = small.n();
    let mut acc = QRat::zero();
    for a in 1..=s {
        for b in 1..=s {
            let x = small.get(k1, b, a, i0);
            if x.is_zero() {
                continue;
            }
            for c in 1..=s {
                let y = small.get(i1, c, b, l1);
                if y.is_zero() {
                    continue;
                }
                for d in 1..=s {
                    let z = rt.get(c, j1, l0, d);
                    if z.is_zero() {
                        continue;
                    }
                    let f = first(d, k0, j0, a);
                    if !f.is_zero() {
                        acc += &(&(&f * x) * &(y * z));
                    }
                }
            }
        }
    }
    acc
}

/// Minkowski gauge: four-factor contractions with the second inverse of R.
pub fn build_minkowski_gauge(small: &RMatrix) -> Result<PairData, RError> {
    require_hecke(small)?;
    let s = small.n();
    let ri = small.inverse()?;
    let rt = second_inverse(small)?;
    let rp = build_big(s, "R'_mink", |i, j, k, l| {
        mink_entry(small, &rt, |d, k0, j0, a| ri.get(d, k0, j0, a).clone(), i, j, k, l)
    });
    let rb = build_big(s, "R_mink", |i, j, k, l| {
        mink_entry(small, &rt, |d, k0, j0, a| small.get(j0, a, d, k0).clone(), i, j, k, l)
    });
    for m in [&rb, &rp] {
        let rep = check_ybe(m);
        if !rep.passed() {
            return Err(RError::NotYbe(rep.witness.unwrap_or_default()));
        }
    }
    let mut pair = PairData::new(rp, rb, QRat::q_pow(-1), Reality::None)?;
    pair.spinor = Some((small.clone(), Gauge::Minkowski));
    Ok(pair)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn su2_entries() {
        let r = standard_su2();
        assert_eq!(r.get(1, 1, 1, 1), &QRat::q());
        assert_eq!(r.get(1, 2, 2, 1), &QRat::qdiff());
        assert_eq!(r.get(2, 1, 1, 2), &QRat::zero());
        assert_eq!(r.nnz(), 5);
    }

    #[test]
    fn flattening_is_row_major() {
        assert_eq!(split(1, 2), (1, 1));
        assert_eq!(split(2, 2), (1, 2));
        assert_eq!(split(3, 2), (2, 1));
        assert_eq!(split(4, 2), (2, 2));
    }

    #[test]
    fn euclidean_gauge_shape() {
        let p = build_euclidean_gauge(&standard_su2()).unwrap();
        assert_eq!(p.n(), 4);
        assert_eq!(p.lambda, QRat::q_pow(-1));
        // tensor product of two 5-entry patterns
        assert_eq!(p.r.nnz(), 25);
        assert_eq!(p.r_prime.nnz(), 25);
        assert!(check_ybe(&p.r).passed());
        assert!(check_ybe(&p.r_prime).passed());
    }

    #[test]
    fn euclidean_gauge_entry_oracle() {
        // R(1111) = R(1,1,1,1)_small^2
        let p = build_euclidean_gauge(&standard_su2()).unwrap();
        assert_eq!(p.r.get(1, 1, 1, 1), &QRat::q_pow(2));
    }

    #[test]
    fn minkowski_gauge_passes_ybe() {
        let p = build_minkowski_gauge(&standard_su2()).unwrap();
        assert_eq!(p.n(), 4);
        assert_eq!(p.r.nnz(), 38);
        assert_eq!(p.r_prime.nnz(), 37);
    }

    #[test]
    fn gauges_reject_non_hecke() {
        let id = RMatrix::identity(2);
        assert!(matches!(build_euclidean_gauge(&id), Err(RError::NotHecke(_))));
        assert!(matches!(build_minkowski_gauge(&id), Err(RError::NotHecke(_))));
    }
}
