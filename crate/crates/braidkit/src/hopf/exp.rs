//! Pairing between the momentum and special conformal sectors, the truncated braided
//! exponential, and the conjugation identity it implements.

use super::{coproduct, coproduct_element, star_element, HopfError, StarContext, UElement, UTensor, UWord};
use crate::actions::{ActionError, Context, Generator, Op};
use crate::ncalg::{braided_antipode, NCPoly, NCTensor, Orientation, RelationSet, Word};
use crate::qcoeff::{QMatrix, QRat};
use crate::report::VerificationReport;
use std::time::Instant;

fn p_ops(u: &Word) -> UWord {
    u.0.iter().map(|&k| Op::Gen(Generator::P(k as usize))).collect()
}

fn c_ops(w: &Word) -> UWord {
    w.0.iter().map(|&k| Op::Gen(Generator::C(k as usize))).collect()
}

/// Bases of degree d: normal words of the momentum algebra, and c-words taken as the
/// reversals of normal spacetime words.
pub fn pairing_bases(ctx: &Context, d: usize) -> (Vec<Word>, Vec<Word>) {
    let prels = RelationSet::build(&ctx.pair.r_prime, Orientation::Vector);
    let pw = prels.normal_words(d);
    let cw = ctx.rels.normal_words(d).iter().map(Word::reversed).collect();
    (pw, cw)
}

/// ev(p_u, c_w) = (q-q^{-1})^{-|w|} times the constant term of p_u |> S(x_{rev w}),
/// with S the braided antipode of spacetime and c_i identified with x_i/(q-q^{-1}).
pub fn pairing(ctx: &Context, u: &Word, w: &Word) -> Result<QRat, ActionError> {
    if u.len() != w.len() {
        return Ok(QRat::zero());
    }
    let x = braided_antipode(&NCPoly::monomial(w.reversed(), QRat::one()), &ctx.pair.r, &ctx.rels);
    let res = ctx.act_word(&p_ops(u), &x)?;
    let h = QRat::qdiff().pow(-(w.len() as i32));
    Ok(&res.coeff(&Word::empty()) * &h)
}

/// G[u][b] = ev(p_u, c_b) on the degree-d bases.
pub fn gram_matrix(ctx: &Context, d: usize) -> Result<QMatrix, ActionError> {
    let (pw, cw) = pairing_bases(ctx, d);
    let mut g = QMatrix::zeros(pw.len(), cw.len());
    for (r, u) in pw.iter().enumerate() {
        for (c, w) in cw.iter().enumerate() {
            g.set(r, c, pairing(ctx, u, w)?);
        }
    }
    Ok(g)
}

/// exp = sum e_a (x) f^a to a fixed degree, with its inverse sum S(e_a) (x) f^a.
#[derive(Debug, Clone)]
pub struct BraidedExp {
    pub degree: usize,
    pub exp: UTensor,
    pub inv: UTensor,
}

pub fn braided_exp_truncated(ctx: &Context, degree: usize) -> Result<BraidedExp, HopfError> {
    let mut exp = UTensor::zero();
    let mut inv = UTensor::zero();
    for d in 0..=degree {
        let (pw, cw) = pairing_bases(ctx, d);
        let g = gram_matrix(ctx, d)?;
        let dual = g.inverse().map_err(|_| HopfError::DegeneratePairing(d))?;
        for (a, w) in cw.iter().enumerate() {
            // S(c_w) is transported from S(x_{rev w}) and read back as reversed c-words
            let s = braided_antipode(&NCPoly::monomial(w.reversed(), QRat::one()), &ctx.pair.r, &ctx.rels);
            for (k, u) in pw.iter().enumerate() {
                let f = dual.get(a, k);
                if f.is_zero() {
                    continue;
                }
                exp.add_term(c_ops(w), p_ops(u), f);
                for (xw, v) in s.terms() {
                    inv.add_term(c_ops(&xw.reversed()), p_ops(u), &(f * v));
                }
            }
        }
    }
    Ok(BraidedExp { degree, exp, inv })
}

fn basis_pairs(ctx: &Context, d: usize) -> Vec<(Word, Word)> {
    let basis = ctx.basis_upto(d);
    let mut out = Vec::new();
    for a in &basis {
        for b in &basis {
            if a.len() + b.len() <= d {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    out
}

fn unit(a: &Word, b: &Word) -> NCTensor {
    [((a.clone(), b.clone()), QRat::one())].into()
}

/// exp^{-1} exp and exp exp^{-1} act as the identity on a (x) b, deg a + deg b <= d.
pub fn check_exp_inverse(ctx: &Context, e: &BraidedExp, d: usize) -> VerificationReport {
    let start = Instant::now();
    let check = "exp-inverse";
    for (a, b) in basis_pairs(ctx, d) {
        let t = unit(&a, &b);
        let res = (|| -> Result<(NCTensor, NCTensor), ActionError> {
            Ok((e.inv.act(ctx, &e.exp.act(ctx, &t)?)?, e.exp.act(ctx, &e.inv.act(ctx, &t)?)?))
        })();
        match res {
            Ok((x, y)) if x == t && y == t => {}
            Ok(_) => return VerificationReport::fail(check, format!("on {a} (x) {b}")).timed(start),
            Err(err) => return VerificationReport::error(check, err.to_string()).timed(start),
        }
    }
    VerificationReport::pass(check).param("degree", d).timed(start)
}

/// Dbar c_i = c_a (x) l-^a_i s + 1 (x) c_i.
pub fn conjugate_coproduct(i: usize, n: usize) -> UTensor {
    let mut t = UTensor::zero();
    for a in 1..=n {
        t.add_term(
            vec![Op::Gen(Generator::C(a))],
            vec![Op::Gen(Generator::Lminus(a, i)), Op::Gen(Generator::Varsigma(1))],
            &QRat::one(),
        );
    }
    t.add_term(vec![], vec![Op::Gen(Generator::C(i))], &QRat::one());
    t
}

/// Move s past l letters to the right ([l, s] = 0) and merge powers of s.
fn canonical_word(w: &UWord) -> UWord {
    let mut w = w.clone();
    let is_s = |o: &Op| matches!(o, Op::Gen(Generator::Varsigma(_)));
    let is_l = |o: &Op| matches!(o, Op::Gen(Generator::Lplus(..) | Generator::Lminus(..)));
    let mut changed = true;
    while changed {
        changed = false;
        for k in 0..w.len().saturating_sub(1) {
            if is_s(&w[k]) && is_l(&w[k + 1]) {
                w.swap(k, k + 1);
                changed = true;
            }
        }
    }
    let mut out: UWord = Vec::new();
    for op in w {
        if let (Some(Op::Gen(Generator::Varsigma(a))), Op::Gen(Generator::Varsigma(b))) = (out.last(), op) {
            let e = a + b;
            out.pop();
            if e != 0 {
                out.push(Op::Gen(Generator::Varsigma(e)));
            }
        } else {
            out.push(op);
        }
    }
    out
}

fn canonical(t: &UTensor) -> UTensor {
    let mut out = UTensor::zero();
    for ((a, b), c) in t.terms() {
        out.add_term(canonical_word(a), canonical_word(b), c);
    }
    out
}

fn star_tensor(sc: &StarContext, t: &UTensor) -> Result<UTensor, HopfError> {
    let mut out = UTensor::zero();
    for ((a, b), c) in t.terms() {
        let sa = star_element(sc, &UElement::word(a.clone()))?;
        let sb = star_element(sc, &UElement::word(b.clone()))?;
        for (x, u) in sa.terms() {
            for (y, v) in sb.terms() {
                out.add_term(x.clone(), y.clone(), &(c * &(u * v)));
            }
        }
    }
    Ok(out)
}

/// (1) (* (x) *) D (c_i*) equals Dbar c_i symbolically; (2) exp^{-1} (D c_i) exp and Dbar c_i
/// agree on a (x) b for deg a + deg b <= d.
pub fn verify_conjugation_identity(ctx: &Context, d: usize) -> VerificationReport {
    let start = Instant::now();
    let check = "conjugation";
    let n = ctx.n();
    let sc = match StarContext::from_context(ctx) {
        Ok(s) => s,
        Err(e) => return VerificationReport::error(check, e.to_string()),
    };
    for i in 1..=n {
        let closed = (|| -> Result<UTensor, HopfError> {
            let cs = star_element(&sc, &UElement::gen(Generator::C(i)))?;
            Ok(canonical(&star_tensor(&sc, &coproduct_element(&cs, n)?)?))
        })();
        match closed {
            Ok(t) if t == canonical(&conjugate_coproduct(i, n)) => {}
            Ok(t) => return VerificationReport::fail(check, format!("(*(x)*) D c{i}* = {t}")).timed(start),
            Err(e) => return VerificationReport::error(check, e.to_string()).timed(start),
        }
    }
    // the p-legs of exp^{-1} meet at most degree d + 1 after D c_i
    let e = match braided_exp_truncated(ctx, d + 1) {
        Ok(e) => e,
        Err(err) => return VerificationReport::error(check, err.to_string()).timed(start),
    };
    let mut cases = 0;
    for (a, b) in basis_pairs(ctx, d) {
        let t = unit(&a, &b);
        for i in 1..=n {
            cases += 1;
            let delta = coproduct(&Generator::C(i), n);
            let res = (|| -> Result<(NCTensor, NCTensor), ActionError> {
                let lhs = e.inv.act(ctx, &delta.act(ctx, &e.exp.act(ctx, &t)?)?)?;
                let rhs = conjugate_coproduct(i, n).act(ctx, &t)?;
                Ok((lhs, rhs))
            })();
            match res {
                Ok((l, r)) if l == r => {}
                Ok((l, r)) => {
                    return VerificationReport::fail(
                        check,
                        format!("c{i} on {a} (x) {b}: {} vs {} terms", l.len(), r.len()),
                    )
                    .timed(start)
                }
                Err(err) => return VerificationReport::error(check, err.to_string()).timed(start),
            }
        }
    }
    VerificationReport::pass(check)
        .param("degree", d)
        .param("exp_degree", d + 1)
        .param("cases", cases)
        .note(format!("closed form for all {n} c_i; operator identity verified up to degree {d}"))
        .timed(start)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::tests::euclid;

    #[test]
    fn unit_and_degree_one_pairing() {
        let ctx = euclid();
        assert_eq!(pairing(&ctx, &Word::empty(), &Word::empty()).unwrap(), QRat::one());
        let h_inv = QRat::qdiff().inv().unwrap();
        for i in 1..=4 {
            for j in 1..=4 {
                let want = if i == j { h_inv.clone() } else { QRat::zero() };
                assert_eq!(pairing(&ctx, &Word::letter(i), &Word::letter(j)).unwrap(), want);
            }
        }
        assert!(pairing(&ctx, &Word::letter(1), &Word::empty()).unwrap().is_zero());
    }

    #[test]
    fn degree_two_gram_is_invertible() {
        let ctx = euclid();
        let g = gram_matrix(&ctx, 2).unwrap();
        assert_eq!((g.rows, g.cols), (10, 10));
        assert!(g.inverse().is_ok());
    }

    #[test]
    fn degree_one_term_of_exp() {
        let ctx = euclid();
        let e = braided_exp_truncated(&ctx, 1).unwrap();
        let h = QRat::qdiff();
        let mut want = UTensor::one();
        for j in 1..=4 {
            want.add_term(vec![Op::Gen(Generator::C(j))], vec![Op::Gen(Generator::P(j))], &h);
        }
        assert_eq!(e.exp, want);
    }

    #[test]
    fn closed_form_conjugation() {
        let ctx = euclid();
        let r = verify_conjugation_identity(&ctx, 1);
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn inverse_to_degree_two() {
        let ctx = euclid();
        let e = braided_exp_truncated(&ctx, 2).unwrap();
        let r = check_exp_inverse(&ctx, &e, 2);
        assert!(r.passed(), "{r}");
    }
}
