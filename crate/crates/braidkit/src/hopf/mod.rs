//! Coproducts, antipodes and counits of the conformal algebra, checked through the action.

mod exp;
mod star;

pub use exp::{conjugate_coproduct, 
    braided_exp_truncated, check_exp_inverse, gram_matrix, pairing, pairing_bases, verify_conjugation_identity,
    BraidedExp,
};
pub use star::{check_star_involution, star_element, star_poly, StarContext};

use crate::actions::{ActionError, Context, Generator, Op};
use crate::ncalg::{NCPoly, NCTensor, Word};
use crate::qcoeff::QRat;
use crate::report::VerificationReport;
use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HopfError {
    #[error(transparent)]
    Action(#[from] ActionError),
    #[error("{0} is not available here")]
    Unsupported(String),
    #[error("degenerate pairing at degree {0}")]
    DegeneratePairing(usize),
    #[error("a Type I star structure needs a quantum metric")]
    NoMetric,
    #[error("no reality type declared")]
    NoReality,
}

pub type UWord = Vec<Op>;

fn add_to<K: Ord>(m: &mut BTreeMap<K, QRat>, k: K, c: &QRat) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match m.entry(k) {
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

fn fmt_word(f: &mut fmt::Formatter<'_>, w: &[Op]) -> fmt::Result {
    if w.is_empty() {
        return write!(f, "1");
    }
    for (k, op) in w.iter().enumerate() {
        if k > 0 {
            write!(f, ".")?;
        }
        write!(f, "{op}")?;
    }
    Ok(())
}

/// Formal linear combination of operator words. No normal form: equality is structural,
/// identities are certified through the action.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct UElement {
    terms: BTreeMap<UWord, QRat>,
}

impl UElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::word(vec![])
    }

    pub fn word(w: UWord) -> Self {
        let mut e = Self::zero();
        e.add_term(w, &QRat::one());
        e
    }

    pub fn gen(g: Generator) -> Self {
        Self::word(vec![Op::Gen(g)])
    }

    pub fn add_term(&mut self, w: UWord, c: &QRat) {
        add_to(&mut self.terms, w, c);
    }

    pub fn terms(&self) -> impl Iterator<Item = (&UWord, &QRat)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &QRat) -> Self {
        let mut out = Self::zero();
        for (w, v) in &self.terms {
            out.add_term(w.clone(), &(v * c));
        }
        out
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero();
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                let mut w = a.clone();
                w.extend_from_slice(b);
                out.add_term(w, &(x * y));
            }
        }
        out
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (w, v) in &o.terms {
            out.add_term(w.clone(), v);
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&QRat::from_int(-1)))
    }

    pub fn to_sum(&self) -> Vec<(UWord, QRat)> {
        self.terms.iter().map(|(w, c)| (w.clone(), c.clone())).collect()
    }
}

impl fmt::Display for UElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if !c.is_one() {
                write!(f, "({c})*")?;
            }
            fmt_word(f, w)?;
        }
        Ok(())
    }
}

/// Element of U (x) U as word pairs; products are taken legwise.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct UTensor {
    terms: BTreeMap<(UWord, UWord), QRat>,
}

impl UTensor {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        let mut t = Self::zero();
        t.add_term(vec![], vec![], &QRat::one());
        t
    }

    pub fn add_term(&mut self, a: UWord, b: UWord, c: &QRat) {
        add_to(&mut self.terms, (a, b), c);
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(UWord, UWord), &QRat)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero();
        for ((a, b), x) in &self.terms {
            for ((c, d), y) in &o.terms {
                let mut l = a.clone();
                l.extend_from_slice(c);
                let mut r = b.clone();
                r.extend_from_slice(d);
                out.add_term(l, r, &(x * y));
            }
        }
        out
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for ((a, b), v) in &o.terms {
            out.add_term(a.clone(), b.clone(), v);
        }
        out
    }

    /// Apply legwise to a tensor of spacetime elements, right leg first.
    pub fn act(&self, ctx: &Context, t: &NCTensor) -> Result<NCTensor, ActionError> {
        let mut out = NCTensor::new();
        for ((a, b), c) in t {
            let pa = NCPoly::monomial(a.clone(), QRat::one());
            let pb = NCPoly::monomial(b.clone(), QRat::one());
            for ((u, v), k) in &self.terms {
                let rb = ctx.act_word(v, &pb)?;
                if rb.is_zero() {
                    continue;
                }
                let ra = ctx.act_word(u, &pa)?;
                let coef = c * k;
                for (wa, ca) in ra.terms() {
                    for (wb, cb) in rb.terms() {
                        add_to(&mut out, (wa.clone(), wb.clone()), &(&coef * &(ca * cb)));
                    }
                }
            }
        }
        Ok(out)
    }
}

impl fmt::Display for UTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, ((a, b), c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if !c.is_one() {
                write!(f, "({c})*")?;
            }
            fmt_word(f, a)?;
            write!(f, " (x) ")?;
            fmt_word(f, b)?;
        }
        Ok(())
    }
}

fn gen(g: Generator) -> Op {
    Op::Gen(g)
}

/// Coproduct of a letter: Dp = p (x) 1 + s l- (x) p, Dc = c (x) l+ s^-1 + 1 (x) c,
/// matrix coproduct on l, group-like s; S(l) is anti-coalgebra.
pub fn coproduct_op(op: &Op, n: usize) -> Result<UTensor, HopfError> {
    let one = QRat::one();
    let mut t = UTensor::zero();
    match *op {
        Op::Gen(Generator::P(i)) => {
            t.add_term(vec![gen(Generator::P(i))], vec![], &one);
            for a in 1..=n {
                t.add_term(
                    vec![gen(Generator::Varsigma(1)), gen(Generator::Lminus(i, a))],
                    vec![gen(Generator::P(a))],
                    &one,
                );
            }
        }
        Op::Gen(Generator::C(i)) => {
            for a in 1..=n {
                t.add_term(
                    vec![gen(Generator::C(a))],
                    vec![gen(Generator::Lplus(a, i)), gen(Generator::Varsigma(-1))],
                    &one,
                );
            }
            t.add_term(vec![], vec![gen(Generator::C(i))], &one);
        }
        Op::Gen(Generator::Lplus(i, j)) => {
            for a in 1..=n {
                t.add_term(vec![gen(Generator::Lplus(i, a))], vec![gen(Generator::Lplus(a, j))], &one);
            }
        }
        Op::Gen(Generator::Lminus(i, j)) => {
            for a in 1..=n {
                t.add_term(vec![gen(Generator::Lminus(i, a))], vec![gen(Generator::Lminus(a, j))], &one);
            }
        }
        Op::Gen(Generator::Varsigma(e)) => {
            t.add_term(vec![gen(Generator::Varsigma(e))], vec![gen(Generator::Varsigma(e))], &one);
        }
        Op::SLplus(i, j) => {
            for a in 1..=n {
                t.add_term(vec![Op::SLplus(a, j)], vec![Op::SLplus(i, a)], &one);
            }
        }
        Op::SLminus(i, j) => {
            for a in 1..=n {
                t.add_term(vec![Op::SLminus(a, j)], vec![Op::SLminus(i, a)], &one);
            }
        }
        Op::X(_) => return Err(HopfError::Unsupported("coproduct of a spacetime coordinate".into())),
    }
    Ok(t)
}

pub fn coproduct(g: &Generator, n: usize) -> UTensor {
    coproduct_op(&Op::Gen(*g), n).expect("generators have coproducts")
}

/// Multiplicative extension to a word.
pub fn coproduct_word(w: &[Op], n: usize) -> Result<UTensor, HopfError> {
    let mut t = UTensor::one();
    for op in w {
        t = t.mul(&coproduct_op(op, n)?);
    }
    Ok(t)
}

pub fn coproduct_element(u: &UElement, n: usize) -> Result<UTensor, HopfError> {
    let mut out = UTensor::zero();
    for (w, c) in u.terms() {
        for ((a, b), v) in coproduct_word(w, n)?.terms() {
            out.add_term(a.clone(), b.clone(), &(c * v));
        }
    }
    Ok(out)
}

/// Sc = -c s S(l+), Sp = -S(l-) s^-1 p, S(l) formal, Ss = s^-1.
pub fn antipode_op(op: &Op, n: usize) -> Result<UElement, HopfError> {
    let m1 = QRat::from_int(-1);
    let mut u = UElement::zero();
    match *op {
        Op::Gen(Generator::C(i)) => {
            for a in 1..=n {
                u.add_term(vec![gen(Generator::C(a)), gen(Generator::Varsigma(1)), Op::SLplus(a, i)], &m1);
            }
        }
        Op::Gen(Generator::P(i)) => {
            for a in 1..=n {
                u.add_term(vec![Op::SLminus(i, a), gen(Generator::Varsigma(-1)), gen(Generator::P(a))], &m1);
            }
        }
        Op::Gen(Generator::Lplus(i, j)) => u = UElement::word(vec![Op::SLplus(i, j)]),
        Op::Gen(Generator::Lminus(i, j)) => u = UElement::word(vec![Op::SLminus(i, j)]),
        Op::Gen(Generator::Varsigma(e)) => u = UElement::gen(Generator::Varsigma(-e)),
        Op::SLplus(..) | Op::SLminus(..) => {
            return Err(HopfError::Unsupported("antipode of S(l)".into()))
        }
        Op::X(_) => return Err(HopfError::Unsupported("antipode of a spacetime coordinate".into())),
    }
    Ok(u)
}

/// Antimultiplicative extension.
pub fn antipode_word(w: &[Op], n: usize) -> Result<UElement, HopfError> {
    let mut u = UElement::one();
    for op in w {
        u = antipode_op(op, n)?.mul(&u);
    }
    Ok(u)
}

pub fn antipode(g: &Generator, n: usize) -> UElement {
    antipode_op(&Op::Gen(*g), n).expect("generators have antipodes")
}

pub fn counit_op(op: &Op) -> QRat {
    match *op {
        Op::Gen(Generator::P(_)) | Op::Gen(Generator::C(_)) | Op::X(_) => QRat::zero(),
        Op::Gen(Generator::Varsigma(_)) => QRat::one(),
        Op::Gen(Generator::Lplus(i, j)) | Op::Gen(Generator::Lminus(i, j)) | Op::SLplus(i, j) | Op::SLminus(i, j) => {
            if i == j {
                QRat::one()
            } else {
                QRat::zero()
            }
        }
    }
}

pub fn counit(g: &Generator) -> QRat {
    counit_op(&Op::Gen(*g))
}

pub fn counit_word(w: &[Op]) -> QRat {
    w.iter().fold(QRat::one(), |acc, op| &acc * &counit_op(op))
}

/// Acts by composing generator actions right to left along each word.
pub fn act_u(ctx: &Context, u: &UElement, m: &NCPoly) -> Result<NCPoly, ActionError> {
    ctx.act_sum(&u.to_sum(), m)
}

/// Every generator letter of the algebra for dimension n.
pub fn all_generators(n: usize) -> Vec<Generator> {
    let mut out = Vec::new();
    for i in 1..=n {
        out.push(Generator::P(i));
        out.push(Generator::C(i));
        for j in 1..=n {
            out.push(Generator::Lplus(i, j));
            out.push(Generator::Lminus(i, j));
        }
    }
    out.push(Generator::Varsigma(1));
    out.push(Generator::Varsigma(-1));
    out
}

fn words_by_degree(ctx: &Context, d: usize) -> Vec<Word> {
    ctx.basis_upto(d)
}

/// g |> (ab) = (g(1) |> a)(g(2) |> b) for all normal a, b with deg a + deg b <= d.
pub fn verify_module_algebra(ctx: &Context, g: &Generator, d: usize) -> VerificationReport {
    let start = Instant::now();
    let check = format!("module-algebra {g}");
    let delta = coproduct(g, ctx.n());
    let basis = words_by_degree(ctx, d);
    let mut cases = 0usize;
    for a in &basis {
        for b in &basis {
            if a.len() + b.len() > d {
                continue;
            }
            cases += 1;
            let res = (|| -> Result<(NCPoly, NCPoly), ActionError> {
                let ab = ctx.reduce(&NCPoly::monomial(a.concat(b), QRat::one()));
                let lhs = ctx.act(g, &ab)?;
                let t: NCTensor = [((a.clone(), b.clone()), QRat::one())].into();
                let mut rhs = NCPoly::zero();
                for ((x, y), c) in delta.act(ctx, &t)? {
                    rhs.add_term(x.concat(&y), &c);
                }
                Ok((lhs, ctx.reduce(&rhs)))
            })();
            match res {
                Ok((l, r)) if l == r => {}
                Ok((l, r)) => {
                    return VerificationReport::fail(check, format!("a={a}, b={b}: residual {}", &l - &r))
                        .param("degree", d)
                        .timed(start)
                }
                Err(e) => return VerificationReport::error(check, e.to_string()).timed(start),
            }
        }
    }
    VerificationReport::pass(check).param("degree", d).param("cases", cases).timed(start)
}

/// Module-algebra property for every generator.
pub fn verify_module_algebra_all(ctx: &Context, d: usize) -> VerificationReport {
    let start = Instant::now();
    let gens = all_generators(ctx.n());
    for g in &gens {
        let r = verify_module_algebra(ctx, g, d);
        if !r.passed() {
            let mut out = VerificationReport::combine("module-algebra", vec![r]);
            out.notes.clear();
            return out.param("degree", d).timed(start);
        }
    }
    VerificationReport::pass("module-algebra")
        .param("degree", d)
        .param("generators", gens.len())
        .note(format!("all {} generators verified up to total degree {d}", gens.len()))
        .timed(start)
}

type Tensor3 = BTreeMap<(UWord, UWord, UWord), QRat>;

/// Formal coassociativity and counit axioms on every generator, and the antipode axiom
/// through the action on normal words up to degree d.
pub fn verify_hopf_axioms(ctx: &Context, d: usize) -> VerificationReport {
    let start = Instant::now();
    let n = ctx.n();
    let check = "hopf-axioms";
    for g in all_generators(n) {
        let delta = coproduct(&g, n);
        let mut left = Tensor3::new();
        let mut right = Tensor3::new();
        for ((a, b), c) in delta.terms() {
            for ((a1, a2), v) in coproduct_word(a, n).expect("U words").terms() {
                add_to(&mut left, (a1.clone(), a2.clone(), b.clone()), &(c * v));
            }
            for ((b1, b2), v) in coproduct_word(b, n).expect("U words").terms() {
                add_to(&mut right, (a.clone(), b1.clone(), b2.clone()), &(c * v));
            }
        }
        if left != right {
            return VerificationReport::fail(check, format!("coassociativity fails on {g}")).timed(start);
        }
        let mut l = UElement::zero();
        let mut r = UElement::zero();
        for ((a, b), c) in delta.terms() {
            l.add_term(b.clone(), &(c * &counit_word(a)));
            r.add_term(a.clone(), &(c * &counit_word(b)));
        }
        if l != UElement::gen(g) || r != UElement::gen(g) {
            return VerificationReport::fail(check, format!("counit axiom fails on {g}: {l} | {r}")).timed(start);
        }
    }
    // antipode axiom: S(g(1)) g(2) = e(g) = g(1) S(g(2)) as operators
    let basis = words_by_degree(ctx, d);
    for g in all_generators(n) {
        let delta = coproduct(&g, n);
        let mut left = UElement::zero();
        let mut right = UElement::zero();
        for ((a, b), c) in delta.terms() {
            let sa = antipode_word(a, n).expect("generator legs");
            let sb = antipode_word(b, n).expect("generator legs");
            left = left.add(&sa.mul(&UElement::word(b.clone())).scale(c));
            right = right.add(&UElement::word(a.clone()).mul(&sb).scale(c));
        }
        let eps = counit(&g);
        for w in &basis {
            let m = NCPoly::monomial(w.clone(), QRat::one());
            for (side, u) in [("S(g1) g2", &left), ("g1 S(g2)", &right)] {
                match act_u(ctx, u, &m) {
                    Ok(v) if v == m.scale(&eps) => {}
                    Ok(v) => {
                        return VerificationReport::fail(check, format!("antipode axiom {side} for {g} on {w}: {v}"))
                            .timed(start)
                    }
                    Err(e) => return VerificationReport::error(check, e.to_string()).timed(start),
                }
            }
        }
    }
    VerificationReport::pass(check)
        .param("degree", d)
        .note(format!("antipode axiom verified as operator identities up to degree {d}"))
        .timed(start)
}

fn w(ops: &[Op]) -> UWord {
    ops.to_vec()
}

/// The defining relations of the conformal algebra, each as an expression that must act as zero.
pub fn relation_suite(ctx: &Context) -> Vec<(String, Vec<(UWord, QRat)>)> {
    let n = ctx.n();
    let r = &ctx.pair.r;
    let rp = &ctx.pair.r_prime;
    let ri = &ctx.rinv;
    let lam = ctx.lambda().clone();
    let lam_inv = lam.inv().expect("lambda is nonzero");
    let h_inv = QRat::qdiff().inv().expect("q - q^-1 is nonzero");
    let one = QRat::one();
    let m1 = QRat::from_int(-1);
    let p = |i| gen(Generator::P(i));
    let c = |i| gen(Generator::C(i));
    let lp = |i, j| gen(Generator::Lplus(i, j));
    let lm = |i, j| gen(Generator::Lminus(i, j));
    let s = |e| gen(Generator::Varsigma(e));
    let mut out: Vec<(String, Vec<(UWord, QRat)>)> = Vec::new();

    for i in 1..=n {
        for j in 1..=n {
            out.push((
                format!("[p{i}, c{j}] = (l+{i}{j} s^-1 - l-{i}{j} s)/(q-q^-1)"),
                vec![
                    (w(&[p(i), c(j)]), one.clone()),
                    (w(&[c(j), p(i)]), m1.clone()),
                    (w(&[lp(i, j), s(-1)]), -&h_inv),
                    (w(&[lm(i, j), s(1)]), h_inv.clone()),
                ],
            ));
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                let mut ep = vec![(w(&[lp(i, j), c(k)]), one.clone())];
                let mut em = vec![(w(&[lm(i, j), c(k)]), one.clone())];
                let mut fp = vec![(w(&[lp(i, j), p(k)]), one.clone())];
                let mut fm = vec![(w(&[lm(i, j), p(k)]), one.clone())];
                for a in 1..=n {
                    for b in 1..=n {
                        let v = r.get(b, k, a, j);
                        if !v.is_zero() {
                            ep.push((w(&[c(b), lp(i, a)]), -(&lam * v)));
                        }
                        let v = ri.get(a, j, b, k);
                        if !v.is_zero() {
                            em.push((w(&[c(b), lm(i, a)]), -(&lam_inv * v)));
                        }
                        let v = ri.get(k, b, i, a);
                        if !v.is_zero() {
                            fp.push((w(&[p(b), lp(a, j)]), -(&lam_inv * v)));
                        }
                        let v = r.get(i, a, k, b);
                        if !v.is_zero() {
                            fm.push((w(&[p(b), lm(a, j)]), -(&lam * v)));
                        }
                    }
                }
                out.push((format!("l+{i}{j} c{k} = lambda c l+ R"), ep));
                out.push((format!("l-{i}{j} c{k} = lambda^-1 c l- R^-1"), em));
                out.push((format!("l+{i}{j} p{k} = lambda^-1 R^-1 p l+"), fp));
                out.push((format!("l-{i}{j} p{k} = lambda R p l-"), fm));
            }
        }
    }
    for k in 1..=n {
        out.push((
            format!("s c{k} = lambda c{k} s"),
            vec![(w(&[s(1), c(k)]), one.clone()), (w(&[c(k), s(1)]), -&lam)],
        ));
        out.push((
            format!("s p{k} = lambda^-1 p{k} s"),
            vec![(w(&[s(1), p(k)]), one.clone()), (w(&[p(k), s(1)]), -&lam_inv)],
        ));
    }
    for i in 1..=n {
        for j in 1..=n {
            let mut ec = vec![(w(&[c(j), c(i)]), one.clone())];
            let mut ep = vec![(w(&[p(i), p(j)]), one.clone())];
            for a in 1..=n {
                for b in 1..=n {
                    let v = rp.get(a, i, b, j);
                    if !v.is_zero() {
                        ec.push((w(&[c(a), c(b)]), -v));
                    }
                    let v = rp.get(i, a, j, b);
                    if !v.is_zero() {
                        ep.push((w(&[p(b), p(a)]), -v));
                    }
                }
            }
            out.push((format!("c{j} c{i} = c c R'"), ec));
            out.push((format!("p{i} p{j} = R' p p"), ep));
            out.push((
                format!("[l+{i}{j}, s] = 0"),
                vec![(w(&[lp(i, j), s(1)]), one.clone()), (w(&[s(1), lp(i, j)]), m1.clone())],
            ));
            out.push((
                format!("[l-{i}{j}, s] = 0"),
                vec![(w(&[lm(i, j), s(1)]), one.clone()), (w(&[s(1), lm(i, j)]), m1.clone())],
            ));
        }
    }
    // FRT with the R_21 convention: R_21 l1 l2 = l2 l1 R_21 for (l+, l+), (l-, l-), (l+, l-)
    type LFn = fn(usize, usize) -> Op;
    let pairs: [(&str, LFn, LFn); 3] = [
        ("l+ l+", |i, j| Op::Gen(Generator::Lplus(i, j)), |i, j| Op::Gen(Generator::Lplus(i, j))),
        ("l- l-", |i, j| Op::Gen(Generator::Lminus(i, j)), |i, j| Op::Gen(Generator::Lminus(i, j))),
        ("l+ l-", |i, j| Op::Gen(Generator::Lplus(i, j)), |i, j| Op::Gen(Generator::Lminus(i, j))),
    ];
    for (name, f1, f2) in pairs {
        for i in 1..=n {
            for j in 1..=n {
                for k in 1..=n {
                    for l in 1..=n {
                        let mut e = Vec::new();
                        for a in 1..=n {
                            for b in 1..=n {
                                let v = r.get(k, b, i, a);
                                if !v.is_zero() {
                                    e.push((w(&[f1(a, j), f2(b, l)]), v.clone()));
                                }
                                let v = r.get(b, l, a, j);
                                if !v.is_zero() {
                                    e.push((w(&[f2(k, b), f1(i, a)]), -v));
                                }
                            }
                        }
                        out.push((format!("FRT {name} ({i}{j}{k}{l})"), e));
                    }
                }
            }
        }
    }
    out
}

/// All relations as operator identities on normal words up to degree d.
pub fn verify_relations(ctx: &Context, d: usize) -> VerificationReport {
    let exprs = relation_suite(ctx);
    crate::actions::operator_sweep(ctx, "relations", &exprs, d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rtensor::{build_euclidean_gauge, standard_su2};

    pub(crate) fn euclid() -> Context {
        Context::new(build_euclidean_gauge(&standard_su2()).unwrap()).unwrap()
    }

    #[test]
    fn varsigma_is_group_like() {
        let t = coproduct(&Generator::Varsigma(1), 4);
        assert_eq!(t.to_string(), "s (x) s");
        assert_eq!(counit(&Generator::Varsigma(1)), QRat::one());
        assert_eq!(antipode(&Generator::Varsigma(1), 4), UElement::gen(Generator::Varsigma(-1)));
        assert!(counit(&Generator::C(2)).is_zero());
    }

    #[test]
    fn product_coproduct_has_four_kinds_of_terms() {
        let t = coproduct_word(&[gen(Generator::P(1)), gen(Generator::C(2))], 4).unwrap();
        let manual = coproduct(&Generator::P(1), 4).mul(&coproduct(&Generator::C(2), 4));
        assert_eq!(t, manual);
        // (1 + 4) * (4 + 1) word pairs
        assert_eq!(t.len(), 25);
        assert_eq!(coproduct_word(&[], 4).unwrap(), UTensor::one());
    }

    #[test]
    fn act_u_basics() {
        let ctx = euclid();
        let pc = UElement::word(vec![gen(Generator::P(1)), gen(Generator::C(2))]);
        assert!(act_u(&ctx, &pc, &NCPoly::one()).unwrap().is_zero());
        let ss = UElement::word(vec![gen(Generator::Varsigma(1)), gen(Generator::Varsigma(-1))]);
        let m = ctx.reduce(&NCPoly::word(&[2, 3, 1]));
        assert_eq!(act_u(&ctx, &ss, &m).unwrap(), m);
    }

    #[test]
    fn module_algebra_for_p_and_c() {
        let ctx = euclid();
        for g in [Generator::P(2), Generator::C(3), Generator::Lminus(1, 4), Generator::Varsigma(-1)] {
            let r = verify_module_algebra(&ctx, &g, 2);
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn axioms_hold() {
        let ctx = euclid();
        let r = verify_hopf_axioms(&ctx, 2);
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn relations_degree_two() {
        let ctx = euclid();
        let r = verify_relations(&ctx, 2);
        assert!(r.passed(), "{r}");
    }
}
