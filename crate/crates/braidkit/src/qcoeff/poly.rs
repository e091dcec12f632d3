//! Dense integer polynomials in q.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Integer polynomial, coefficients in ascending degree, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct QPoly {
    coeffs: Vec<BigInt>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// c * q^k
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut v = vec![BigInt::zero(); k];
        v.push(c);
        Self::from_coeffs(v)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn from_i64s(cs: &[i64]) -> Self {
        Self::from_coeffs(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree; zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn lead(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Lowest power of q with a nonzero coefficient.
    pub fn low_order(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// True when the polynomial is c*q^k for a single term.
    pub fn is_monomial(&self) -> bool {
        !self.is_zero() && self.low_order() == self.degree()
    }

    pub fn shift_down(&self, k: usize) -> Self {
        debug_assert!(k <= self.low_order() || self.is_zero());
        QPoly {
            coeffs: self.coeffs[k.min(self.coeffs.len())..].to_vec(),
        }
    }

    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![BigInt::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        QPoly { coeffs: v }
    }

    pub fn neg(&self) -> Self {
        QPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i);
            let b = other.coeffs.get(i);
            v.push(match (a, b) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Self::from_coeffs(v)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut v = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    v[i + j] += a * b;
                }
            }
        }
        Self::from_coeffs(v)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QPoly {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Divide every coefficient by c, which must divide them all.
    pub fn div_scalar_exact(&self, c: &BigInt) -> Self {
        QPoly {
            coeffs: self.coeffs.iter().map(|x| x / c).collect(),
        }
    }

    /// gcd of the coefficients (nonnegative).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.lead().unwrap().is_negative() {
            c = -c;
        }
        self.div_scalar_exact(&c)
    }

    /// Pseudo-remainder of self by d (d nonzero).
    pub fn pseudo_rem(&self, d: &Self) -> Self {
        let mut r = self.clone();
        let dl = d.lead().expect("pseudo_rem by zero").clone();
        let dd = d.degree();
        while !r.is_zero() && r.degree() >= dd {
            let rl = r.lead().unwrap().clone();
            let shift = r.degree() - dd;
            // r <- dl*r - rl*q^shift*d
            let g = dl.gcd(&rl);
            let (a, b) = (&dl / &g, &rl / &g);
            r = r.scale(&a).sub(&d.scale(&b).shift_up(shift));
        }
        r
    }

    /// Exact division; panics if d does not divide self over Z.
    pub fn div_exact(&self, d: &Self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let dd = d.degree();
        let dl = d.lead().expect("division by zero polynomial");
        let mut r = self.clone();
        let mut quo = vec![BigInt::zero(); self.degree() + 1 - dd.min(self.degree())];
        while !r.is_zero() {
            assert!(r.degree() >= dd, "inexact polynomial division");
            let (t, rem) = r.lead().unwrap().div_rem(dl);
            assert!(rem.is_zero(), "inexact polynomial division");
            let shift = r.degree() - dd;
            r = r.sub(&d.scale(&t).shift_up(shift));
            quo[shift] = t;
        }
        Self::from_coeffs(quo)
    }

    /// Primitive gcd with positive leading coefficient (content ignored).
    pub fn gcd_primitive(a: &Self, b: &Self) -> Self {
        if a.is_zero() {
            return b.primitive();
        }
        if b.is_zero() {
            return a.primitive();
        }
        let k = a.low_order().min(b.low_order());
        let mut x = a.shift_down(a.low_order()).primitive();
        let mut y = b.shift_down(b.low_order()).primitive();
        if x.degree() < y.degree() {
            std::mem::swap(&mut x, &mut y);
        }
        while !y.is_zero() {
            if y.degree() == 0 {
                x = Self::one();
                break;
            }
            let r = x.pseudo_rem(&y).primitive();
            x = y;
            y = r;
        }
        x.primitive().shift_up(k)
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + bigint_to_f64(c);
        }
        acc
    }
}

pub(crate) fn bigint_to_f64(c: &BigInt) -> f64 {
    c.to_string().parse::<f64>().unwrap_or(f64::NAN)
}

fn write_term(f: &mut fmt::Formatter<'_>, c: &BigInt, k: i64, first: bool) -> fmt::Result {
    let neg = c.is_negative();
    let a = c.abs();
    if first {
        if neg {
            write!(f, "-")?;
        }
    } else {
        write!(f, "{}", if neg { "-" } else { "+" })?;
    }
    match k {
        0 => write!(f, "{a}"),
        _ => {
            if !a.is_one() {
                write!(f, "{a}*")?;
            }
            if k == 1 {
                write!(f, "q")
            } else {
                write!(f, "q^{k}")
            }
        }
    }
}

/// Writes sum_i c_i q^(i - shift), highest power first.
pub(crate) fn fmt_laurent(f: &mut fmt::Formatter<'_>, p: &QPoly, shift: usize) -> fmt::Result {
    if p.is_zero() {
        return write!(f, "0");
    }
    let mut first = true;
    for (i, c) in p.coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        write_term(f, c, i as i64 - shift as i64, first)?;
        first = false;
    }
    Ok(())
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_laurent(f, self, 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_of_cyclotomic_products() {
        // (q-1)(q+1) and (q-1)(q^2+1)
        let a = QPoly::from_i64s(&[-1, 0, 1]);
        let b = QPoly::from_i64s(&[-1, 1, -1, 1]);
        assert_eq!(QPoly::gcd_primitive(&a, &b), QPoly::from_i64s(&[-1, 1]));
    }

    #[test]
    fn gcd_keeps_common_q_power() {
        let a = QPoly::from_i64s(&[0, 0, 2]);
        let b = QPoly::from_i64s(&[0, 3, 3]);
        assert_eq!(QPoly::gcd_primitive(&a, &b), QPoly::from_i64s(&[0, 1]));
    }

    #[test]
    fn exact_division() {
        let a = QPoly::from_i64s(&[-1, 0, 0, 1]);
        let d = QPoly::from_i64s(&[-1, 1]);
        assert_eq!(a.div_exact(&d), QPoly::from_i64s(&[1, 1, 1]));
    }

    #[test]
    fn display_is_descending() {
        assert_eq!(QPoly::from_i64s(&[-1, 0, 1]).to_string(), "q^2-1");
        assert_eq!(QPoly::from_i64s(&[0, -2]).to_string(), "-2*q");
    }
}
