//! R-matrix data, validity predicates and the spinorial gauge constructions.

mod gauge;
mod io;
mod metric;

pub use gauge::{build_euclidean_gauge, build_minkowski_gauge, second_inverse, standard_su2};
pub use io::{load_metric, load_rmatrix, metric_to_json, parse_metric, parse_rmatrix, FileError, RMatrixFile};
pub use metric::{check_metric, find_metric};

use crate::qcoeff::{QError, QMatrix, QRat};
use crate::report::VerificationReport;
use std::collections::BTreeMap;
use std::time::Instant;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RError {
    #[error("R-matrix is singular")]
    Singular,
    #[error("R-matrix is not q-Hecke: {0}")]
    NotHecke(String),
    #[error("second inverse does not exist (singular partial transpose)")]
    NoSecondInverse,
    #[error("constructed matrix fails the Yang-Baxter equation: {0}")]
    NotYbe(String),
    #[error("no reality type declared")]
    NoReality,
    #[error("no quantum metric")]
    NoMetric,
    #[error("metric not unique ({0}-dimensional solution space)")]
    MetricNotUnique(usize),
    #[error("index {0} out of range 1..={1}")]
    Index(usize, usize),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("involution is not its own inverse")]
    BadInvolution,
    #[error(transparent)]
    Arith(#[from] QError),
}

/// Sparse n^2 x n^2 tensor R^i_j^k_l, rows (i,k), columns (j,l), indices 1-based.
#[derive(Clone, Debug)]
pub struct RMatrix {
    n: usize,
    pub name: String,
    entries: BTreeMap<[u8; 4], QRat>,
    dense: Vec<QRat>,
    // nonzeros by column (j,l): list of (i, k, value)
    cols: Vec<Vec<(u8, u8, QRat)>>,
}

impl PartialEq for RMatrix {
    fn eq(&self, o: &Self) -> bool {
        self.n == o.n && self.entries == o.entries
    }
}

impl RMatrix {
    pub fn from_entries<I>(n: usize, name: impl Into<String>, it: I) -> Self
    where
        I: IntoIterator<Item = ([usize; 4], QRat)>,
    {
        let mut entries = BTreeMap::new();
        for (idx, v) in it {
            assert!(idx.iter().all(|&x| (1..=n).contains(&x)), "index out of range");
            if !v.is_zero() {
                entries.insert(idx.map(|x| x as u8), v);
            }
        }
        let mut dense = vec![QRat::zero(); n.pow(4)];
        let mut cols = vec![Vec::new(); n * n];
        for (&[i, j, k, l], v) in &entries {
            let (i, j, k, l) = (i as usize, j as usize, k as usize, l as usize);
            dense[Self::offset(n, i, j, k, l)] = v.clone();
            cols[(j - 1) * n + (l - 1)].push((i as u8, k as u8, v.clone()));
        }
        RMatrix {
            n,
            name: name.into(),
            entries,
            dense,
            cols,
        }
    }

    fn offset(n: usize, i: usize, j: usize, k: usize, l: usize) -> usize {
        (((i - 1) * n + (j - 1)) * n + (k - 1)) * n + (l - 1)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize, k: usize, l: usize) -> &QRat {
        &self.dense[Self::offset(self.n, i, j, k, l)]
    }

    /// Nonzero entries in index order.
    pub fn entries(&self) -> impl Iterator<Item = ([usize; 4], &QRat)> {
        self.entries.iter().map(|(k, v)| (k.map(|x| x as usize), v))
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    /// Nonzero (i, k, R^i_j^k_l) for fixed column (j, l).
    pub fn column(&self, j: usize, l: usize) -> &[(u8, u8, QRat)] {
        &self.cols[(j - 1) * self.n + (l - 1)]
    }

    pub fn identity(n: usize) -> Self {
        let mut e = Vec::new();
        for i in 1..=n {
            for k in 1..=n {
                e.push(([i, i, k, k], QRat::one()));
            }
        }
        Self::from_entries(n, "identity", e)
    }

    /// P^i_j^k_l = delta^i_l delta^k_j
    pub fn permutation(n: usize) -> Self {
        let mut e = Vec::new();
        for i in 1..=n {
            for k in 1..=n {
                e.push(([i, k, k, i], QRat::one()));
            }
        }
        Self::from_entries(n, "permutation", e)
    }

    pub fn scaled(&self, c: &QRat) -> Self {
        Self::from_entries(
            self.n,
            self.name.clone(),
            self.entries().map(|(k, v)| (k, v * c)),
        )
    }

    pub fn map_indices(&self, name: &str, f: impl Fn([usize; 4]) -> [usize; 4]) -> Self {
        Self::from_entries(self.n, name, self.entries().map(|(k, v)| (f(k), v.clone())))
    }

    /// R_21: (R_21)^i_j^k_l = R^k_l^i_j
    pub fn r21(&self) -> Self {
        self.map_indices(&format!("{}_21", self.name), |[i, j, k, l]| [k, l, i, j])
    }

    /// Transpose in the second tensor factor: (R^{t2})^i_j^k_l = R^i_j^l_k.
    pub fn partial_transpose2(&self) -> Self {
        self.map_indices(&format!("{}^t2", self.name), |[i, j, k, l]| [i, j, l, k])
    }

    pub fn to_matrix(&self) -> QMatrix {
        let n = self.n;
        let mut m = QMatrix::zeros(n * n, n * n);
        for ([i, j, k, l], v) in self.entries() {
            m.set((i - 1) * n + (k - 1), (j - 1) * n + (l - 1), v.clone());
        }
        m
    }

    pub fn from_matrix(n: usize, name: impl Into<String>, m: &QMatrix) -> Self {
        let mut e = Vec::new();
        for i in 1..=n {
            for k in 1..=n {
                for j in 1..=n {
                    for l in 1..=n {
                        let v = m.get((i - 1) * n + (k - 1), (j - 1) * n + (l - 1));
                        if !v.is_zero() {
                            e.push(([i, j, k, l], v.clone()));
                        }
                    }
                }
            }
        }
        Self::from_entries(n, name, e)
    }

    /// Inverse as an n^2 x n^2 matrix.
    pub fn inverse(&self) -> Result<Self, RError> {
        let inv = self.to_matrix().inverse().map_err(|_| RError::Singular)?;
        Ok(Self::from_matrix(self.n, format!("{}^-1", self.name), &inv))
    }

    /// Apply R as an operator on tensor slots (s, t) of every key in `v`:
    /// e_{..j@s..l@t..} -> sum R^i_j^k_l e_{..i@s..k@t..}.
    pub fn apply_slots(&self, v: &TensorVec, s: usize, t: usize) -> TensorVec {
        let mut out = TensorVec::new();
        for (key, c) in v {
            for (i, k, r) in self.column(key[s] as usize, key[t] as usize) {
                let mut nk = key.clone();
                nk[s] = *i;
                nk[t] = *k;
                add_into(&mut out, nk, &(c * r));
            }
        }
        out
    }
}

/// Sparse vector in a tensor power of the fundamental space, keyed by 1-based index tuples.
pub type TensorVec = BTreeMap<Vec<u8>, QRat>;

pub(crate) fn add_into(v: &mut TensorVec, key: Vec<u8>, c: &QRat) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match v.entry(key) {
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

/// Metric with eta_upper the transposed inverse of eta_lower.
#[derive(Clone, Debug, PartialEq)]
pub struct MetricData {
    pub n: usize,
    pub eta_lower: QMatrix,
    pub eta_upper: QMatrix,
}

impl MetricData {
    pub fn from_lower(eta_lower: QMatrix) -> Result<Self, RError> {
        let inv = eta_lower.inverse().map_err(|_| RError::Singular)?;
        Ok(MetricData {
            n: eta_lower.rows,
            eta_upper: inv.transpose(),
            eta_lower,
        })
    }

    pub fn from_upper(eta_upper: QMatrix) -> Result<Self, RError> {
        let inv = eta_upper.inverse().map_err(|_| RError::Singular)?;
        Ok(MetricData {
            n: eta_upper.rows,
            eta_lower: inv.transpose(),
            eta_upper,
        })
    }

    /// eta_{ij}, 1-based
    pub fn lower(&self, i: usize, j: usize) -> &QRat {
        self.eta_lower.get(i - 1, j - 1)
    }

    /// eta^{ij}, 1-based
    pub fn upper(&self, i: usize, j: usize) -> &QRat {
        self.eta_upper.get(i - 1, j - 1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Reality {
    TypeI,
    /// Index involution i -> bar i, stored 1-based at position i-1.
    TypeII(Vec<usize>),
    None,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Gauge {
    Euclidean,
    Minkowski,
}

/// The data (R', R) with normalization, metric and reality type.
#[derive(Clone, Debug)]
pub struct PairData {
    pub r_prime: RMatrix,
    pub r: RMatrix,
    pub lambda: QRat,
    pub metric: Option<MetricData>,
    pub reality: Reality,
    /// Small Hecke R and gauge when built spinorially.
    pub spinor: Option<(RMatrix, Gauge)>,
}

impl PairData {
    pub fn new(r_prime: RMatrix, r: RMatrix, lambda: QRat, reality: Reality) -> Result<Self, RError> {
        if r.n() != r_prime.n() {
            return Err(RError::Dimension(format!("R' has n={}, R has n={}", r_prime.n(), r.n())));
        }
        if lambda.is_zero() {
            return Err(RError::Arith(QError::DivisionByZero));
        }
        if let Reality::TypeII(inv) = &reality {
            check_involution(inv, r.n())?;
        }
        Ok(PairData {
            r_prime,
            r,
            lambda,
            metric: None,
            reality,
            spinor: None,
        })
    }

    pub fn n(&self) -> usize {
        self.r.n()
    }
}

fn check_involution(inv: &[usize], n: usize) -> Result<(), RError> {
    if inv.len() != n {
        return Err(RError::Dimension(format!("involution has length {}, expected {n}", inv.len())));
    }
    for (i, &b) in inv.iter().enumerate() {
        if !(1..=n).contains(&b) {
            return Err(RError::Index(b, n));
        }
        if inv[b - 1] != i + 1 {
            return Err(RError::BadInvolution);
        }
    }
    Ok(())
}

fn idx_str(k: &[u8]) -> String {
    k.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// R12 R13 R23 - R23 R13 R12 on the triple tensor power.
pub fn check_ybe(r: &RMatrix) -> VerificationReport {
    let start = Instant::now();
    let n = r.n() as u8;
    let mut witness = None;
    'outer: for j in 1..=n {
        for l in 1..=n {
            for p in 1..=n {
                let e: TensorVec = [(vec![j, l, p], QRat::one())].into();
                let lhs = r.apply_slots(&r.apply_slots(&r.apply_slots(&e, 1, 2), 0, 2), 0, 1);
                let rhs = r.apply_slots(&r.apply_slots(&r.apply_slots(&e, 0, 1), 0, 2), 1, 2);
                let mut diff = lhs;
                for (k, v) in rhs {
                    add_into(&mut diff, k, &-v);
                }
                if let Some((k, v)) = diff.into_iter().next() {
                    witness = Some(format!(
                        "residual[row {} ; col {}] = {}",
                        idx_str(&k),
                        idx_str(&[j, l, p]),
                        v
                    ));
                    break 'outer;
                }
            }
        }
    }
    VerificationReport::from_witness("ybe", witness)
        .param("matrix", &r.name)
        .param("n", r.n())
        .timed(start)
}

/// (PR - q)(PR + q^{-1}) = 0
pub fn check_hecke(r: &RMatrix) -> VerificationReport {
    let start = Instant::now();
    let pr = r.map_indices("PR", |[i, j, k, l]| [k, j, i, l]).to_matrix();
    let n2 = pr.rows;
    let mut a = pr.clone();
    let mut b = pr;
    for d in 0..n2 {
        a.set(d, d, a.get(d, d) - &QRat::q());
        b.set(d, d, b.get(d, d) + &QRat::q_pow(-1));
    }
    let prod = a.mul(&b);
    let mut witness = None;
    'o: for rr in 0..n2 {
        for c in 0..n2 {
            if !prod.get(rr, c).is_zero() {
                witness = Some(format!("residual[{},{}] = {}", rr + 1, c + 1, prod.get(rr, c)));
                break 'o;
            }
        }
    }
    VerificationReport::from_witness("hecke", witness)
        .param("matrix", &r.name)
        .timed(start)
}

/// Reality conditions on R and, when present, the metric (real q: conjugation is trivial on Q(q)).
pub fn check_reality(pair: &PairData) -> Result<VerificationReport, RError> {
    let start = Instant::now();
    let r = &pair.r;
    let n = r.n();
    let mut witness = None;
    match &pair.reality {
        Reality::None => return Err(RError::NoReality),
        Reality::TypeI => {
            for i in 1..=n {
                for j in 1..=n {
                    for k in 1..=n {
                        for l in 1..=n {
                            if witness.is_none() && r.get(i, j, k, l) != r.get(l, k, j, i) {
                                witness = Some(format!(
                                    "R({i},{j},{k},{l}) = {} but R({l},{k},{j},{i}) = {}",
                                    r.get(i, j, k, l),
                                    r.get(l, k, j, i)
                                ));
                            }
                        }
                    }
                }
            }
            if let (None, Some(m)) = (&witness, &pair.metric) {
                'm: for i in 1..=n {
                    for j in 1..=n {
                        if m.lower(i, j) != m.upper(j, i) {
                            witness = Some(format!("eta_{i}{j} != eta^{j}{i}"));
                            break 'm;
                        }
                    }
                }
            }
        }
        Reality::TypeII(bar) => {
            let b = |x: usize| bar[x - 1];
            'o: for i in 1..=n {
                for j in 1..=n {
                    for k in 1..=n {
                        for l in 1..=n {
                            if r.get(i, j, k, l) != r.get(b(j), b(l), b(i), b(k)) {
                                witness = Some(format!(
                                    "R({i},{j},{k},{l}) != R({},{},{},{})",
                                    b(j),
                                    b(l),
                                    b(i),
                                    b(k)
                                ));
                                break 'o;
                            }
                        }
                    }
                }
            }
            if let (None, Some(m)) = (&witness, &pair.metric) {
                'm: for i in 1..=n {
                    for j in 1..=n {
                        if m.lower(i, j) != m.lower(b(j), b(i)) {
                            witness = Some(format!("eta_{i}{j} != eta_{}{}", b(j), b(i)));
                            break 'm;
                        }
                    }
                }
            }
        }
    }
    let kind = match pair.reality {
        Reality::TypeI => "I",
        _ => "II",
    };
    Ok(VerificationReport::from_witness("reality", witness)
        .param("type", kind)
        .timed(start))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_solves_ybe_but_not_hecke() {
        let id = RMatrix::identity(2);
        assert!(check_ybe(&id).passed());
        assert!(!check_hecke(&id).passed());
    }

    #[test]
    fn scaled_identity_is_not_hecke() {
        let r = RMatrix::identity(2).scaled(&QRat::q());
        assert!(!check_hecke(&r).passed());
    }

    #[test]
    fn standard_su2_is_hecke_and_ybe() {
        let r = standard_su2();
        assert!(check_ybe(&r).passed());
        assert!(check_hecke(&r).passed());
    }

    #[test]
    fn broken_su2_fails_ybe_with_witness() {
        let r = standard_su2();
        let bad = RMatrix::from_entries(
            2,
            "broken",
            r.entries().map(|(k, v)| (k, if k == [1, 2, 2, 1] { QRat::one() } else { v.clone() })),
        );
        let rep = check_ybe(&bad);
        assert!(!rep.passed());
        assert!(rep.witness.unwrap().starts_with("residual"));
    }

    #[test]
    fn inverse_round_trip() {
        let r = standard_su2();
        let ri = r.inverse().unwrap();
        let prod = r.to_matrix().mul(&ri.to_matrix());
        assert_eq!(prod, QMatrix::identity(4));
    }

    #[test]
    fn symmetric_diagonal_is_type_one_real() {
        let r = RMatrix::identity(2).scaled(&QRat::q());
        let pair = PairData::new(r.clone(), r, QRat::one(), Reality::TypeI).unwrap();
        assert!(check_reality(&pair).unwrap().passed());
    }

    #[test]
    fn type_two_identity_involution_can_fail() {
        // R^1_1^2_2 = q but the pattern demands it equal R^1_2^1_2 = 0
        let r = RMatrix::from_entries(2, "t", [([1, 1, 2, 2], QRat::q()), ([2, 2, 1, 1], QRat::one())]);
        let pair = PairData::new(r.clone(), r, QRat::one(), Reality::TypeII(vec![1, 2])).unwrap();
        assert!(!check_reality(&pair).unwrap().passed());
    }

    #[test]
    fn bad_involution_rejected() {
        let r = RMatrix::identity(3);
        let e = PairData::new(r.clone(), r, QRat::one(), Reality::TypeII(vec![2, 3, 1]));
        assert_eq!(e.unwrap_err(), RError::BadInvolution);
    }

    #[test]
    fn no_reality_is_an_error() {
        let r = RMatrix::identity(2);
        let pair = PairData::new(r.clone(), r, QRat::one(), Reality::None).unwrap();
        assert_eq!(check_reality(&pair).unwrap_err(), RError::NoReality);
    }
}
