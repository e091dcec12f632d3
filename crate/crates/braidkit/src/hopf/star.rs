//! Star structures of Type I (metric) and Type II (index involution).

use super::{HopfError, UElement, UWord};
use crate::actions::{Context, Generator, Op};
use crate::ncalg::{NCPoly, Word};
use crate::qcoeff::QRat;
use crate::report::VerificationReport;
use crate::rtensor::{MetricData, Reality};
use std::time::Instant;

/// Reality data the star map needs.
#[derive(Debug, Clone)]
pub enum StarContext {
    TypeI(MetricData),
    TypeII(Vec<usize>),
}

impl StarContext {
    pub fn from_context(ctx: &Context) -> Result<Self, HopfError> {
        match &ctx.pair.reality {
            Reality::TypeI => Ok(StarContext::TypeI(ctx.metric.clone().ok_or(HopfError::NoMetric)?)),
            Reality::TypeII(bar) => Ok(StarContext::TypeII(bar.clone())),
            Reality::None => Err(HopfError::NoReality),
        }
    }

    fn n(&self) -> usize {
        match self {
            StarContext::TypeI(m) => m.n,
            StarContext::TypeII(b) => b.len(),
        }
    }

    /// Star of one letter as a sum of letters.
    fn letter(&self, op: &Op) -> Result<Vec<(Op, QRat)>, HopfError> {
        let n = self.n();
        let g = Op::Gen;
        Ok(match (self, *op) {
            (_, Op::Gen(Generator::Varsigma(e))) => vec![(g(Generator::Varsigma(-e)), QRat::one())],
            (StarContext::TypeI(m), Op::Gen(Generator::P(i))) => {
                (1..=n).map(|a| (g(Generator::P(a)), m.lower(i, a).clone())).collect()
            }
            (StarContext::TypeI(m), Op::Gen(Generator::C(i))) => {
                (1..=n).map(|a| (g(Generator::C(a)), m.upper(i, a).clone())).collect()
            }
            (StarContext::TypeI(m), Op::X(i)) => (1..=n).map(|a| (Op::X(a), m.upper(i, a).clone())).collect(),
            (StarContext::TypeI(m), Op::Gen(Generator::Lplus(i, j))) => type_i_l(m, i, j, Generator::Lminus),
            (StarContext::TypeI(m), Op::Gen(Generator::Lminus(i, j))) => type_i_l(m, i, j, Generator::Lplus),
            (StarContext::TypeII(b), Op::Gen(Generator::P(i))) => vec![(g(Generator::P(b[i - 1])), QRat::one())],
            (StarContext::TypeII(b), Op::Gen(Generator::C(i))) => vec![(g(Generator::C(b[i - 1])), QRat::one())],
            (StarContext::TypeII(b), Op::X(i)) => vec![(Op::X(b[i - 1]), QRat::one())],
            (StarContext::TypeII(b), Op::Gen(Generator::Lplus(i, j))) => {
                vec![(g(Generator::Lminus(b[i - 1], b[j - 1])), QRat::one())]
            }
            (StarContext::TypeII(b), Op::Gen(Generator::Lminus(i, j))) => {
                vec![(g(Generator::Lplus(b[i - 1], b[j - 1])), QRat::one())]
            }
            (_, Op::SLplus(..) | Op::SLminus(..)) => {
                return Err(HopfError::Unsupported("star of S(l)".into()))
            }
        }
        .into_iter()
        .filter(|(_, c)| !c.is_zero())
        .collect())
    }
}

// l^i_j* = eta_{ib} l'^b_a eta^{ja}
fn type_i_l(m: &MetricData, i: usize, j: usize, other: fn(usize, usize) -> Generator) -> Vec<(Op, QRat)> {
    let mut out = Vec::new();
    for b in 1..=m.n {
        for a in 1..=m.n {
            let c = m.lower(i, b) * m.upper(j, a);
            if !c.is_zero() {
                out.push((Op::Gen(other(b, a)), c));
            }
        }
    }
    out
}

fn star_word(sc: &StarContext, w: &UWord) -> Result<UElement, HopfError> {
    let mut out = UElement::one();
    for op in w.iter() {
        let mut s = UElement::zero();
        for (o, c) in sc.letter(op)? {
            s.add_term(vec![o], &c);
        }
        out = s.mul(&out);
    }
    Ok(out)
}

/// Antilinear (trivially, q real) and antimultiplicative.
pub fn star_element(sc: &StarContext, u: &UElement) -> Result<UElement, HopfError> {
    let mut out = UElement::zero();
    for (w, c) in u.terms() {
        out = out.add(&star_word(sc, w)?.scale(c));
    }
    Ok(out)
}

/// Star on q-spacetime, reduced.
pub fn star_poly(sc: &StarContext, ctx: &Context, p: &NCPoly) -> Result<NCPoly, HopfError> {
    let mut out = NCPoly::zero();
    for (w, c) in p.terms() {
        let ops: UWord = w.0.iter().map(|&i| Op::X(i as usize)).collect();
        for (sw, v) in star_word(sc, &ops)?.terms() {
            let letters: Vec<u8> = sw
                .iter()
                .map(|o| match o {
                    Op::X(i) => *i as u8,
                    _ => unreachable!("coordinates star to coordinates"),
                })
                .collect();
            out.add_term(Word(letters), &(c * v));
        }
    }
    Ok(ctx.reduce(&out))
}

/// Involutive on generators and coordinates; antimultiplicative on length-2 words.
pub fn check_star_involution(ctx: &Context) -> VerificationReport {
    let start = Instant::now();
    let check = "star";
    let sc = match StarContext::from_context(ctx) {
        Ok(s) => s,
        Err(e) => return VerificationReport::error(check, e.to_string()),
    };
    let n = ctx.n();
    let gens: Vec<Op> = super::all_generators(n)
        .into_iter()
        .map(Op::Gen)
        .chain((1..=n).map(Op::X))
        .collect();
    for op in &gens {
        let u = UElement::word(vec![*op]);
        let twice = star_element(&sc, &u).and_then(|s| star_element(&sc, &s));
        match twice {
            Ok(t) if t == u => {}
            Ok(t) => return VerificationReport::fail(check, format!("({op}*)* = {t}")).timed(start),
            Err(e) => return VerificationReport::error(check, e.to_string()),
        }
    }
    for a in &gens {
        for b in &gens {
            let ab = UElement::word(vec![*a, *b]);
            let lhs = star_element(&sc, &ab).expect("generator letters");
            let rhs = star_element(&sc, &UElement::word(vec![*b]))
                .expect("generator letters")
                .mul(&star_element(&sc, &UElement::word(vec![*a])).expect("generator letters"));
            if lhs != rhs {
                return VerificationReport::fail(check, format!("({a} {b})* is not {b}* {a}*")).timed(start);
            }
        }
    }
    for i in 1..=n {
        let x = NCPoly::x(i);
        match star_poly(&sc, ctx, &x).and_then(|s| star_poly(&sc, ctx, &s)) {
            Ok(t) if t == x => {}
            Ok(t) => return VerificationReport::fail(check, format!("(x{i}*)* = {t}")).timed(start),
            Err(e) => return VerificationReport::error(check, e.to_string()),
        }
    }
    VerificationReport::pass(check).timed(start)
}
