//! Action of the conformal generators on q-spacetime.

mod checks;
mod table;

pub use checks::{
    check_c_two_paths, check_intertwining, check_spinorial, classical_limit_table, compare_example_table,
    example_table, verify_cross_relations, verify_gaussian, verify_metric_scaling, ClassicalTable,
    ExampleComparison, GaussianConvention,
};
pub use table::OperatorTable;
pub(crate) use checks::operator_sweep;

use crate::ncalg::{Orientation, RelationSet, Word};
use crate::ncalg::NCPoly;
use crate::qcoeff::{QError, QMatrix, QRat};
use crate::rtensor::{find_metric, Gauge, MetricData, PairData, RError, RMatrix};
use std::collections::HashMap;
use std::fmt;
use std::sync::RwLock;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ActionError {
    #[error(transparent)]
    Arith(#[from] QError),
    #[error(transparent)]
    Matrix(#[from] RError),
    #[error("index {0} out of range 1..={1}")]
    Index(usize, usize),
    #[error("spinorial action needs a Euclidean-gauge context")]
    NotSpinorial,
    #[error("no quantum metric in this context")]
    NoMetric,
}

/// A generator of the conformal algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    P(usize),
    Lplus(usize, usize),
    Lminus(usize, usize),
    Varsigma(i32),
    C(usize),
}

/// Letters of operator words on q-spacetime: generators, the formal antipodes of l,
/// and left multiplication by a coordinate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Op {
    Gen(Generator),
    SLplus(usize, usize),
    SLminus(usize, usize),
    X(usize),
}

impl From<Generator> for Op {
    fn from(g: Generator) -> Self {
        Op::Gen(g)
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::P(i) => write!(f, "p{i}"),
            Generator::Lplus(i, j) => write!(f, "l+{i}{j}"),
            Generator::Lminus(i, j) => write!(f, "l-{i}{j}"),
            Generator::Varsigma(1) => write!(f, "s"),
            Generator::Varsigma(e) => write!(f, "s^{e}"),
            Generator::C(i) => write!(f, "c{i}"),
        }
    }
}

impl fmt::Display for Op {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Op::Gen(g) => g.fmt(f),
            Op::SLplus(i, j) => write!(f, "S(l+{i}{j})"),
            Op::SLminus(i, j) => write!(f, "S(l-{i}{j})"),
            Op::X(i) => write!(f, "x{i}"),
        }
    }
}

impl std::str::FromStr for Generator {
    type Err = String;
    /// `p1`, `c2`, `s`, `s^-1`, `s^2`, `l+12`, `l-21`.
    fn from_str(s: &str) -> Result<Self, String> {
        let bad = || format!("bad generator '{s}' (expected p<i>, c<i>, l+<i><j>, l-<i><j>, s or s^<k>)");
        let num = |t: &str| t.parse::<usize>().map_err(|_| bad());
        if let Some(r) = s.strip_prefix("l+") {
            let (i, j) = two_digits(r).ok_or_else(bad)?;
            return Ok(Generator::Lplus(i, j));
        }
        if let Some(r) = s.strip_prefix("l-") {
            let (i, j) = two_digits(r).ok_or_else(bad)?;
            return Ok(Generator::Lminus(i, j));
        }
        if s == "s" {
            return Ok(Generator::Varsigma(1));
        }
        if let Some(r) = s.strip_prefix("s^") {
            return r.parse::<i32>().map(Generator::Varsigma).map_err(|_| bad());
        }
        if let Some(r) = s.strip_prefix('p') {
            return Ok(Generator::P(num(r)?));
        }
        if let Some(r) = s.strip_prefix('c') {
            return Ok(Generator::C(num(r)?));
        }
        Err(bad())
    }
}

fn two_digits(s: &str) -> Option<(usize, usize)> {
    if let Some((a, b)) = s.split_once(',') {
        return Some((a.parse().ok()?, b.parse().ok()?));
    }
    let b = s.as_bytes();
    if b.len() == 2 && b.iter().all(u8::is_ascii_digit) {
        return Some(((b[0] - b'0') as usize, (b[1] - b'0') as usize));
    }
    None
}

/// Which matrix drives the c action.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum CKind {
    Closed,
    Recursive,
    Conjugate,
    Spinorial,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Key {
    P(u8, Word),
    L(bool, u8, u8, Word),
    SL(bool, u8, u8, Word),
    C(CKind, u8, Word),
}

/// Everything the actions need: the pair, its spacetime relations, R^{-1}, R_21^{-1}, metric.
pub struct Context {
    pub pair: PairData,
    pub rels: RelationSet,
    pub rinv: RMatrix,
    pub r21inv: RMatrix,
    pub metric: Option<MetricData>,
    lambda_inv: QRat,
    // (S l)^i_j on x_k = sum_a x_a sl[sign][(i,a),(j,k)]
    sl: [QMatrix; 2],
    memo: RwLock<HashMap<Key, NCPoly>>,
}

impl fmt::Debug for Context {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Context").field("r", &self.pair.r.name).field("n", &self.n()).finish()
    }
}

impl Context {
    /// Builds relations and inverses; the metric is taken from the pair or solved for
    /// (absent when the solver finds none or several).
    pub fn new(pair: PairData) -> Result<Self, RError> {
        let rels = RelationSet::build(&pair.r_prime, Orientation::Covector);
        let rinv = pair.r.inverse()?;
        let r21inv = rinv.r21();
        let metric = match &pair.metric {
            Some(m) => Some(m.clone()),
            None => find_metric(&pair, &rels).ok(),
        };
        let lambda_inv = pair.lambda.inv()?;
        let mut ctx = Context {
            pair,
            rels,
            rinv,
            r21inv,
            metric,
            lambda_inv,
            sl: [QMatrix::zeros(0, 0), QMatrix::zeros(0, 0)],
            memo: RwLock::new(HashMap::new()),
        };
        ctx.sl = [ctx.antipode_block(true)?, ctx.antipode_block(false)?];
        Ok(ctx)
    }

    pub fn n(&self) -> usize {
        self.pair.n()
    }

    pub fn lambda(&self) -> &QRat {
        &self.pair.lambda
    }

    pub fn metric(&self) -> Result<&MetricData, ActionError> {
        self.metric.as_ref().ok_or(ActionError::NoMetric)
    }

    pub fn reduce(&self, p: &NCPoly) -> NCPoly {
        self.rels.reduce(p)
    }

    fn check_index(&self, i: usize) -> Result<(), ActionError> {
        if (1..=self.n()).contains(&i) {
            Ok(())
        } else {
            Err(ActionError::Index(i, self.n()))
        }
    }

    fn cached(&self, k: &Key) -> Option<NCPoly> {
        self.memo.read().unwrap().get(k).cloned()
    }

    fn store(&self, k: Key, v: &NCPoly) {
        self.memo.write().unwrap().insert(k, v.clone());
    }

    fn linear<F>(&self, m: &NCPoly, mut f: F) -> Result<NCPoly, ActionError>
    where
        F: FnMut(&Word) -> Result<NCPoly, ActionError>,
    {
        let mut out = NCPoly::zero();
        for (w, c) in m.terms() {
            out.add_scaled(&f(w)?, c);
        }
        Ok(out)
    }

    // ---- momentum ----

    /// Braided derivative: p^i |> x_j = -delta^i_j, Leibniz rule twisted by R_21^{-1}.
    pub fn act_p(&self, i: usize, m: &NCPoly) -> NCPoly {
        let out = self.linear(m, |w| Ok(self.p_word(i, w))).unwrap();
        debug_assert!(out.terms().all(|(w, _)| m.terms().any(|(u, _)| u.len() == w.len() + 1)));
        out
    }

    fn p_word(&self, i: usize, w: &Word) -> NCPoly {
        if w.is_empty() {
            return NCPoly::zero();
        }
        let key = Key::P(i as u8, w.clone());
        if let Some(v) = self.cached(&key) {
            return v;
        }
        let k = w.0[0] as usize;
        let u = Word(w.0[1..].to_vec());
        let mut out = NCPoly::zero();
        if i == k {
            out.add_term(u.clone(), &QRat::from_int(-1));
        }
        let n = self.n();
        for b in 1..=n {
            let inner = self.p_word(b, &u);
            if inner.is_zero() {
                continue;
            }
            for a in 1..=n {
                let c = self.rinv.get(i, b, a, k);
                if !c.is_zero() {
                    out.add_scaled(&NCPoly::x(a).mul(&inner), c);
                }
            }
        }
        let out = self.reduce(&out);
        self.store(key, &out);
        out
    }

    // ---- rotations and dilaton ----

    /// l+^i_j |> x_k = lambda x_a R^a_k^i_j, l-^i_j |> x_k = lambda^{-1} x_a R^{-1 i}_j^a_k,
    /// matrix coproduct on products.
    pub fn act_l(&self, plus: bool, i: usize, j: usize, m: &NCPoly) -> NCPoly {
        self.linear(m, |w| Ok(self.l_word(plus, i, j, w))).unwrap()
    }

    fn l_gen(&self, plus: bool, i: usize, c: usize, k: usize) -> Vec<(usize, QRat)> {
        (1..=self.n())
            .filter_map(|a| {
                let v = if plus {
                    &self.pair.lambda * self.pair.r.get(a, k, i, c)
                } else {
                    &self.lambda_inv * self.rinv.get(i, c, a, k)
                };
                (!v.is_zero()).then_some((a, v))
            })
            .collect()
    }

    fn l_word(&self, plus: bool, i: usize, j: usize, w: &Word) -> NCPoly {
        if w.is_empty() {
            return if i == j { NCPoly::one() } else { NCPoly::zero() };
        }
        let key = Key::L(plus, i as u8, j as u8, w.clone());
        if let Some(v) = self.cached(&key) {
            return v;
        }
        let k = w.0[0] as usize;
        let u = Word(w.0[1..].to_vec());
        let mut out = NCPoly::zero();
        for c in 1..=self.n() {
            let head = self.l_gen(plus, i, c, k);
            if head.is_empty() {
                continue;
            }
            let tail = self.l_word(plus, c, j, &u);
            for (a, v) in head {
                out.add_scaled(&NCPoly::x(a).mul(&tail), &v);
            }
        }
        let out = self.reduce(&out);
        self.store(key, &out);
        out
    }

    /// Block matrix of l on generators, rows (i,a), columns (j,k); its inverse represents S(l).
    fn antipode_block(&self, plus: bool) -> Result<QMatrix, RError> {
        let n = self.n();
        let mut m = QMatrix::zeros(n * n, n * n);
        for i in 1..=n {
            for j in 1..=n {
                for k in 1..=n {
                    for (a, v) in self.l_gen(plus, i, j, k) {
                        m.set((i - 1) * n + a - 1, (j - 1) * n + k - 1, v);
                    }
                }
            }
        }
        m.inverse().map_err(|_| RError::Singular)
    }

    /// Antipode of l through the inverse fundamental representation; anti-coalgebra on products.
    pub fn act_sl(&self, plus: bool, i: usize, j: usize, m: &NCPoly) -> NCPoly {
        self.linear(m, |w| Ok(self.sl_word(plus, i, j, w))).unwrap()
    }

    fn sl_word(&self, plus: bool, i: usize, j: usize, w: &Word) -> NCPoly {
        if w.is_empty() {
            return if i == j { NCPoly::one() } else { NCPoly::zero() };
        }
        let key = Key::SL(plus, i as u8, j as u8, w.clone());
        if let Some(v) = self.cached(&key) {
            return v;
        }
        let n = self.n();
        let blk = &self.sl[if plus { 0 } else { 1 }];
        let k = w.0[0] as usize;
        let u = Word(w.0[1..].to_vec());
        let mut out = NCPoly::zero();
        // (S l^i_j)(x_k u) = sum_c (S l^c_j |> x_k)(S l^i_c |> u)
        for c in 1..=n {
            let tail = self.sl_word(plus, i, c, &u);
            if tail.is_zero() {
                continue;
            }
            for a in 1..=n {
                let v = blk.get((c - 1) * n + a - 1, (j - 1) * n + k - 1);
                if !v.is_zero() {
                    out.add_scaled(&NCPoly::x(a).mul(&tail), v);
                }
            }
        }
        let out = self.reduce(&out);
        self.store(key, &out);
        out
    }

    /// s^e |> w = lambda^{e deg w} w.
    pub fn act_varsigma(&self, e: i32, m: &NCPoly) -> NCPoly {
        let mut out = NCPoly::zero();
        for (w, c) in m.terms() {
            out.add_term(w.clone(), &(c * &self.pair.lambda.pow(e * w.len() as i32)));
        }
        out
    }

    // ---- special conformal ----

    /// Closed form: (w x_i - (PR)_12 ... (PR)_{d,d+1} w x_i)/(q - q^{-1}), reduced before dividing.
    pub fn act_c(&self, i: usize, m: &NCPoly) -> Result<NCPoly, ActionError> {
        self.check_index(i)?;
        self.linear(m, |w| self.c_closed(CKind::Closed, i, w))
    }

    /// Same closed form with R_21^{-1} in place of R.
    pub fn act_c_conjugate(&self, i: usize, m: &NCPoly) -> Result<NCPoly, ActionError> {
        self.check_index(i)?;
        self.linear(m, |w| self.c_closed(CKind::Conjugate, i, w))
    }

    /// Right braided derivation: c_i |> (u x_k) = u (c_i |> x_k) + (c_a |> u) x_b R^b_k^a_i.
    pub fn act_c_recursive(&self, i: usize, m: &NCPoly) -> Result<NCPoly, ActionError> {
        self.check_index(i)?;
        self.linear(m, |w| self.c_recursive(CKind::Recursive, i, w))
    }

    /// Spinorial generator formula c_J |> x_I = -x_{(i0,b1)} x_{(j0,a1)} R^{a1}_{i1}^{b1}_{j1},
    /// extended by the same right derivation rule.
    pub fn act_c_spinorial(&self, i: usize, m: &NCPoly) -> Result<NCPoly, ActionError> {
        self.check_index(i)?;
        match &self.pair.spinor {
            Some((_, Gauge::Euclidean)) => {}
            _ => return Err(ActionError::NotSpinorial),
        }
        self.linear(m, |w| self.c_recursive(CKind::Spinorial, i, w))
    }

    fn c_matrix(&self, kind: CKind) -> &RMatrix {
        match kind {
            CKind::Conjugate => &self.r21inv,
            _ => &self.pair.r,
        }
    }

    fn c_closed(&self, kind: CKind, i: usize, w: &Word) -> Result<NCPoly, ActionError> {
        if w.is_empty() {
            return Ok(NCPoly::zero());
        }
        let key = Key::C(kind, i as u8, w.clone());
        if let Some(v) = self.cached(&key) {
            return Ok(v);
        }
        let r = self.c_matrix(kind);
        let mut start = w.0.clone();
        start.push(i as u8);
        let mut vec: crate::rtensor::TensorVec = [(start.clone(), QRat::one())].into();
        // rightmost factor (PR)_{d,d+1} acts first; (PR)^{ab}_{st} = R^b_s^a_t
        for pos in (0..w.len()).rev() {
            let mut next = crate::rtensor::TensorVec::new();
            for (key, c) in &vec {
                for (b, a, v) in r.column(key[pos] as usize, key[pos + 1] as usize) {
                    let mut k = key.clone();
                    k[pos] = *a;
                    k[pos + 1] = *b;
                    crate::rtensor::add_into(&mut next, k, &(c * v));
                }
            }
            vec = next;
        }
        let mut num = NCPoly::word(&start);
        for (k, c) in vec {
            num.add_term(Word(k), &-c);
        }
        let out = self.reduce(&num).map_coeffs(QRat::div_qdiff_exact)?;
        self.store(key, &out);
        Ok(out)
    }

    fn c_generator(&self, kind: CKind, i: usize, k: usize) -> Result<NCPoly, ActionError> {
        match kind {
            CKind::Spinorial => {
                let (small, _) = self.pair.spinor.as_ref().ok_or(ActionError::NotSpinorial)?;
                let s = small.n();
                let (j0, j1) = split(i, s);
                let (i0, i1) = split(k, s);
                let mut out = NCPoly::zero();
                for a1 in 1..=s {
                    for b1 in 1..=s {
                        let v = small.get(a1, i1, b1, j1);
                        if !v.is_zero() {
                            let w = [flat(i0, b1, s) as u8, flat(j0, a1, s) as u8];
                            out.add_term(Word(w.to_vec()), &-v);
                        }
                    }
                }
                Ok(self.reduce(&out))
            }
            _ => self.c_closed(CKind::Closed, i, &Word::letter(k)),
        }
    }

    fn c_recursive(&self, kind: CKind, i: usize, w: &Word) -> Result<NCPoly, ActionError> {
        if w.is_empty() {
            return Ok(NCPoly::zero());
        }
        if w.len() == 1 {
            return self.c_generator(kind, i, w.0[0] as usize);
        }
        let key = Key::C(kind, i as u8, w.clone());
        if let Some(v) = self.cached(&key) {
            return Ok(v);
        }
        let d = w.len();
        let k = w.0[d - 1] as usize;
        let u = Word(w.0[..d - 1].to_vec());
        let mut out = NCPoly::monomial(u.clone(), QRat::one()).mul(&self.c_generator(kind, i, k)?);
        for a in 1..=self.n() {
            let cu = self.c_recursive(kind, a, &u)?;
            if cu.is_zero() {
                continue;
            }
            for b in 1..=self.n() {
                let v = self.pair.r.get(b, k, a, i);
                if !v.is_zero() {
                    out.add_scaled(&cu.mul(&NCPoly::x(b)), v);
                }
            }
        }
        let out = self.reduce(&out);
        self.store(key, &out);
        Ok(out)
    }

    // ---- dispatch ----

    pub fn act(&self, g: &Generator, m: &NCPoly) -> Result<NCPoly, ActionError> {
        match *g {
            Generator::P(i) => {
                self.check_index(i)?;
                Ok(self.act_p(i, m))
            }
            Generator::Lplus(i, j) => {
                self.check_index(i)?;
                self.check_index(j)?;
                Ok(self.act_l(true, i, j, m))
            }
            Generator::Lminus(i, j) => {
                self.check_index(i)?;
                self.check_index(j)?;
                Ok(self.act_l(false, i, j, m))
            }
            Generator::Varsigma(e) => Ok(self.act_varsigma(e, m)),
            Generator::C(i) => self.act_c(i, m),
        }
    }

    pub fn act_op(&self, op: &Op, m: &NCPoly) -> Result<NCPoly, ActionError> {
        match *op {
            Op::Gen(ref g) => self.act(g, m),
            Op::SLplus(i, j) => Ok(self.act_sl(true, i, j, m)),
            Op::SLminus(i, j) => Ok(self.act_sl(false, i, j, m)),
            Op::X(i) => {
                self.check_index(i)?;
                Ok(self.reduce(&NCPoly::x(i).mul(m)))
            }
        }
    }

    /// Compose along a word, rightmost letter first.
    pub fn act_word(&self, word: &[Op], m: &NCPoly) -> Result<NCPoly, ActionError> {
        let mut cur = m.clone();
        for op in word.iter().rev() {
            if cur.is_zero() {
                break;
            }
            cur = self.act_op(op, &cur)?;
        }
        Ok(cur)
    }

    /// Sum of coefficient-weighted words applied to m.
    pub fn act_sum(&self, terms: &[(Vec<Op>, QRat)], m: &NCPoly) -> Result<NCPoly, ActionError> {
        let mut out = NCPoly::zero();
        for (w, c) in terms {
            out.add_scaled(&self.act_word(w, m)?, c);
        }
        Ok(out)
    }

    /// Normal words of degree <= d.
    pub fn basis_upto(&self, d: usize) -> Vec<Word> {
        self.rels.normal_words_upto(d)
    }
}

pub(crate) fn split(i: usize, s: usize) -> (usize, usize) {
    ((i - 1) / s + 1, (i - 1) % s + 1)
}

pub(crate) fn flat(a0: usize, a1: usize, s: usize) -> usize {
    s * (a0 - 1) + a1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::parse_ncpoly;
    use crate::rtensor::{build_euclidean_gauge, standard_su2};

    pub(crate) fn euclid() -> Context {
        Context::new(build_euclidean_gauge(&standard_su2()).unwrap()).unwrap()
    }

    fn poly(ctx: &Context, s: &str) -> NCPoly {
        ctx.reduce(&parse_ncpoly(s).unwrap())
    }

    #[test]
    fn p_on_generators_and_constants() {
        let ctx = euclid();
        assert_eq!(ctx.act_p(1, &NCPoly::x(1)), NCPoly::constant(QRat::from_int(-1)));
        assert!(ctx.act_p(1, &NCPoly::x(2)).is_zero());
        assert!(ctx.act_p(3, &NCPoly::one()).is_zero());
    }

    #[test]
    fn p_on_degree_two_matches_expanded_formula() {
        let ctx = euclid();
        // p^i |> (x_k x_j) = -delta^i_k x_j - x_a R^{-1 i}_j^a_k
        for i in 1..=4 {
            for k in 1..=4 {
                for j in 1..=4 {
                    let mut want = NCPoly::zero();
                    if i == k {
                        want.add_term(Word::letter(j), &QRat::from_int(-1));
                    }
                    for a in 1..=4 {
                        want.add_term(Word::letter(a), &-ctx.rinv.get(i, j, a, k));
                    }
                    let got = ctx.act_p(i, &NCPoly::word(&[k as u8, j as u8]));
                    assert_eq!(got, want, "p{i} on x{k}x{j}");
                }
            }
        }
    }

    #[test]
    fn varsigma_scales_by_degree() {
        let ctx = euclid();
        let m = poly(&ctx, "x1.x4 + x2");
        let got = ctx.act_varsigma(1, &m);
        let want = poly(&ctx, "q^-2*x1.x4 + q^-1*x2");
        assert_eq!(got, want);
        assert_eq!(ctx.act_varsigma(1, &NCPoly::one()), NCPoly::one());
        assert_eq!(ctx.act_varsigma(-1, &got), m);
    }

    #[test]
    fn l_on_generators() {
        let ctx = euclid();
        for (i, j, k) in [(1, 1, 1), (2, 3, 4), (4, 1, 2)] {
            let got = ctx.act_l(true, i, j, &NCPoly::x(k));
            let mut want = NCPoly::zero();
            for a in 1..=4 {
                want.add_term(Word::letter(a), &(ctx.lambda() * ctx.pair.r.get(a, k, i, j)));
            }
            assert_eq!(got, want);
        }
        assert_eq!(ctx.act_l(false, 2, 2, &NCPoly::one()), NCPoly::one());
        assert!(ctx.act_l(false, 2, 3, &NCPoly::one()).is_zero());
    }

    #[test]
    fn antipode_of_l_inverts() {
        let ctx = euclid();
        // sum_a S(l^i_a) l^a_j = delta^i_j on a degree-2 word
        let m = poly(&ctx, "x2.x3");
        for plus in [true, false] {
            for i in 1..=4 {
                for j in 1..=4 {
                    let mut acc = NCPoly::zero();
                    for a in 1..=4 {
                        acc = &acc + &ctx.act_sl(plus, i, a, &ctx.act_l(plus, a, j, &m));
                    }
                    let want = if i == j { m.clone() } else { NCPoly::zero() };
                    assert_eq!(acc, want);
                }
            }
        }
    }

    #[test]
    fn c_on_constants_and_alpha_on_a() {
        let ctx = euclid();
        assert!(ctx.act_c(2, &NCPoly::one()).unwrap().is_zero());
        // alpha |> a: the R-commutator gives -q a^2 in this normalization
        assert_eq!(ctx.act_c(1, &NCPoly::x(1)).unwrap(), poly(&ctx, "(-q)*x1.x1"));
    }

    #[test]
    fn c_closed_and_recursive_agree_to_degree_three() {
        let ctx = euclid();
        for w in ctx.basis_upto(3) {
            let m = NCPoly::monomial(w.clone(), QRat::one());
            for i in 1..=4 {
                assert_eq!(ctx.act_c(i, &m).unwrap(), ctx.act_c_recursive(i, &m).unwrap(), "c{i} on {w}");
            }
        }
    }

    #[test]
    fn spinorial_matches_big_r_on_generators() {
        let ctx = euclid();
        for i in 1..=4 {
            for k in 1..=4 {
                let x = NCPoly::x(k);
                assert_eq!(ctx.act_c_spinorial(i, &x).unwrap(), ctx.act_c(i, &x).unwrap(), "c{i} x{k}");
            }
        }
    }

    #[test]
    fn generator_parsing() {
        assert_eq!("p3".parse::<Generator>().unwrap(), Generator::P(3));
        assert_eq!("l+12".parse::<Generator>().unwrap(), Generator::Lplus(1, 2));
        assert_eq!("l-4,1".parse::<Generator>().unwrap(), Generator::Lminus(4, 1));
        assert_eq!("s^-1".parse::<Generator>().unwrap(), Generator::Varsigma(-1));
        assert!("z1".parse::<Generator>().is_err());
    }
}
