//! Matrices of generator actions on the graded normal-word basis.

use super::{ActionError, Context, Op};
use crate::ncalg::NCPoly;
use crate::qcoeff::{QMatrix, QRat};

/// Matrix of one operator per input degree: columns are the normal words of degree d,
/// rows the normal words of the output degree.
#[derive(Debug, Clone)]
pub struct OperatorTable {
    pub op: Op,
    /// (input degree, output degree, matrix)
    pub blocks: Vec<(usize, usize, QMatrix)>,
}

impl OperatorTable {
    pub fn build(ctx: &Context, op: Op, max_degree: usize) -> Result<Self, ActionError> {
        let shift: isize = match op {
            Op::Gen(super::Generator::P(_)) => -1,
            Op::Gen(super::Generator::C(_)) | Op::X(_) => 1,
            _ => 0,
        };
        let mut blocks = Vec::new();
        for d in 0..=max_degree {
            let out_d = d as isize + shift;
            let cols = ctx.rels.normal_words(d);
            let rows = if out_d < 0 { Vec::new() } else { ctx.rels.normal_words(out_d as usize) };
            let mut m = QMatrix::zeros(rows.len(), cols.len());
            for (c, w) in cols.iter().enumerate() {
                let img = ctx.act_op(&op, &NCPoly::monomial(w.clone(), QRat::one()))?;
                for (u, v) in img.terms() {
                    let r = rows
                        .binary_search(u)
                        .unwrap_or_else(|_| panic!("{op} on {w} left degree {out_d}: {u}"));
                    m.set(r, c, v.clone());
                }
            }
            blocks.push((d, out_d.max(0) as usize, m));
        }
        Ok(OperatorTable { op, blocks })
    }

    pub fn block(&self, d: usize) -> Option<&QMatrix> {
        self.blocks.get(d).map(|b| &b.2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::actions::tests::euclid;
    use crate::actions::Generator;

    #[test]
    fn dimensions_follow_normal_word_counts() {
        let ctx = euclid();
        let t = OperatorTable::build(&ctx, Op::Gen(Generator::C(2)), 2).unwrap();
        let dims: Vec<_> = t.blocks.iter().map(|(_, _, m)| (m.rows, m.cols)).collect();
        assert_eq!(dims, vec![(4, 1), (10, 4), (20, 10)]);
        let p = OperatorTable::build(&ctx, Op::Gen(Generator::P(1)), 2).unwrap();
        assert_eq!((p.blocks[2].2.rows, p.blocks[2].2.cols), (4, 10));
    }

    #[test]
    fn heisenberg_relation_as_matrices() {
        // p^i x_k - x_a R^{-1 i}_b^a_k p^b = -delta^i_k on degree 1
        let ctx = euclid();
        let p1 = OperatorTable::build(&ctx, Op::Gen(Generator::P(1)), 2).unwrap();
        let x1 = OperatorTable::build(&ctx, Op::X(1), 1).unwrap();
        let prod = p1.block(2).unwrap().mul(x1.block(1).unwrap());
        let mut acc = prod.clone();
        for a in 1..=4 {
            for b in 1..=4 {
                let c = ctx.rinv.get(1, b, a, 1);
                if c.is_zero() {
                    continue;
                }
                let xa = OperatorTable::build(&ctx, Op::X(a), 0).unwrap();
                let pb = OperatorTable::build(&ctx, Op::Gen(Generator::P(b)), 1).unwrap();
                let t = xa.block(0).unwrap().mul(pb.block(1).unwrap());
                for r in 0..acc.rows {
                    for col in 0..acc.cols {
                        let v = acc.get(r, col) - &(c * t.get(r, col));
                        acc.set(r, col, v);
                    }
                }
            }
        }
        let mut want = QMatrix::zeros(4, 4);
        for r in 0..4 {
            want.set(r, r, QRat::from_int(-1));
        }
        assert_eq!(acc, want);
    }
}
