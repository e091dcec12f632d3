//! Exact arithmetic in the field Q(q).

mod linalg;
mod parse;
mod poly;

pub use linalg::QMatrix;
pub use parse::parse_qrat;
pub use poly::QPoly;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::atomic::{AtomicU64, Ordering};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QError {
    #[error("division by zero polynomial")]
    ZeroDenominator,
    #[error("division by zero element")]
    DivisionByZero,
    #[error("pole at q=1")]
    PoleAtOne,
    #[error("braided integer not divisible: {0}")]
    NotDivisible(String),
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

/// Canonical element num/den of Q(q).
///
/// Invariants: den is nonzero with positive leading coefficient,
/// num and den share no polynomial factor and no integer content,
/// and zero is stored as 0/1.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QRat {
    num: QPoly,
    den: QPoly,
}

impl QRat {
    pub fn new(num: QPoly, den: QPoly) -> Result<Self, QError> {
        if den.is_zero() {
            return Err(QError::ZeroDenominator);
        }
        Ok(Self::normalize(num, den))
    }

    fn normalize(num: QPoly, den: QPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let k = num.low_order().min(den.low_order());
        let (mut num, mut den) = (num.shift_down(k), den.shift_down(k));
        // Laurent-type inputs have a monomial denominator after the shift;
        // only the integer content is left to cancel then.
        let cancel_poly = !(den.is_monomial() || num.is_monomial());
        if cancel_poly {
            let g = QPoly::gcd_primitive(&num, &den);
            if g.degree() > 0 {
                num = num.div_exact(&g);
                den = den.div_exact(&g);
            }
        }
        let c = num.content().gcd(&den.content());
        let c = if den.lead().unwrap().is_negative() { -c } else { c };
        if !c.is_one() {
            num = num.div_scalar_exact(&c);
            den = den.div_scalar_exact(&c);
        }
        QRat { num, den }
    }

    pub fn zero() -> Self {
        QRat {
            num: QPoly::zero(),
            den: QPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_bigint(BigInt::from(c))
    }

    pub fn from_bigint(c: BigInt) -> Self {
        QRat {
            num: QPoly::constant(c),
            den: QPoly::one(),
        }
    }

    pub fn from_ratio(r: &BigRational) -> Self {
        Self::new(QPoly::constant(r.numer().clone()), QPoly::constant(r.denom().clone()))
            .expect("rational denominators are nonzero")
    }

    pub fn from_poly(p: QPoly) -> Self {
        QRat {
            num: p,
            den: QPoly::one(),
        }
    }

    /// The deformation parameter q.
    pub fn q() -> Self {
        Self::q_pow(1)
    }

    /// q^k for any integer k.
    pub fn q_pow(k: i32) -> Self {
        let m = QPoly::monomial(BigInt::one(), k.unsigned_abs() as usize);
        if k >= 0 {
            Self::from_poly(m)
        } else {
            QRat {
                num: QPoly::one(),
                den: m,
            }
        }
    }

    /// q - q^{-1}
    pub fn qdiff() -> Self {
        Self::normalize(QPoly::from_i64s(&[-1, 0, 1]), QPoly::from_i64s(&[0, 1]))
    }

    pub fn num(&self) -> &QPoly {
        &self.num
    }

    pub fn den(&self) -> &QPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// Denominator is a pure power of q.
    pub fn is_laurent(&self) -> bool {
        self.den.is_monomial() && self.den.lead().unwrap().is_one()
    }

    pub fn inv(&self) -> Result<Self, QError> {
        if self.is_zero() {
            return Err(QError::DivisionByZero);
        }
        Ok(Self::normalize(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, QError> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, e: i32) -> Self {
        let base = if e < 0 {
            self.inv().expect("negative power of zero")
        } else {
            self.clone()
        };
        let mut acc = Self::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        acc
    }

    /// Value at q = 1 of the canonical form.
    pub fn eval_q1(&self) -> Result<BigRational, QError> {
        let one = BigInt::one();
        let d = self.den.eval_int(&one);
        if d.is_zero() {
            return Err(QError::PoleAtOne);
        }
        Ok(BigRational::new(self.num.eval_int(&one), d))
    }

    /// Floating-point value, used only by numeric spot checks.
    pub fn eval_f64(&self, x: f64) -> f64 {
        self.num.eval_f64(x) / self.den.eval_f64(x)
    }

    /// Divide by q - q^{-1}, requiring the numerator to carry the factor q^2 - 1.
    pub fn div_qdiff_exact(&self) -> Result<Self, QError> {
        DIVISIONS.fetch_add(1, Ordering::Relaxed);
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let q2m1 = QPoly::from_i64s(&[-1, 0, 1]);
        if !self.num.pseudo_rem(&q2m1).is_zero() {
            NONDIVISIBLE.fetch_add(1, Ordering::Relaxed);
            return Err(QError::NotDivisible(self.to_string()));
        }
        Ok(Self::normalize(self.num.div_exact(&q2m1).shift_up(1), self.den.clone()))
    }
}

static DIVISIONS: AtomicU64 = AtomicU64::new(0);
static NONDIVISIBLE: AtomicU64 = AtomicU64::new(0);

/// Process-wide counts of (q - q^{-1}) quotients taken and of those that were not exact.
pub fn division_stats() -> (u64, u64) {
    (
        DIVISIONS.load(Ordering::Relaxed),
        NONDIVISIBLE.load(Ordering::Relaxed),
    )
}

impl Default for QRat {
    fn default() -> Self {
        Self::zero()
    }
}

impl Zero for QRat {
    fn zero() -> Self {
        QRat::zero()
    }
    fn is_zero(&self) -> bool {
        QRat::is_zero(self)
    }
}

impl One for QRat {
    fn one() -> Self {
        QRat::one()
    }
}

impl From<i64> for QRat {
    fn from(c: i64) -> Self {
        QRat::from_int(c)
    }
}

impl Add<&QRat> for &QRat {
    type Output = QRat;
    fn add(self, o: &QRat) -> QRat {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            return QRat::normalize(self.num.add(&o.num), self.den.clone());
        }
        QRat::normalize(
            self.num.mul(&o.den).add(&o.num.mul(&self.den)),
            self.den.mul(&o.den),
        )
    }
}

impl Sub<&QRat> for &QRat {
    type Output = QRat;
    fn sub(self, o: &QRat) -> QRat {
        self + &(-o)
    }
}

impl Mul<&QRat> for &QRat {
    type Output = QRat;
    fn mul(self, o: &QRat) -> QRat {
        if self.is_zero() || o.is_zero() {
            return QRat::zero();
        }
        if self.is_one() {
            return o.clone();
        }
        if o.is_one() {
            return self.clone();
        }
        QRat::normalize(self.num.mul(&o.num), self.den.mul(&o.den))
    }
}

impl Div<&QRat> for &QRat {
    type Output = QRat;
    fn div(self, o: &QRat) -> QRat {
        self.checked_div(o).expect("division by zero element")
    }
}

impl Neg for &QRat {
    type Output = QRat;
    fn neg(self) -> QRat {
        QRat {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

impl Neg for QRat {
    type Output = QRat;
    fn neg(self) -> QRat {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<QRat> for QRat {
            type Output = QRat;
            fn $m(self, o: QRat) -> QRat {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a QRat> for QRat {
            type Output = QRat;
            fn $m(self, o: &QRat) -> QRat {
                (&self).$m(o)
            }
        }
        impl $tr<QRat> for &QRat {
            type Output = QRat;
            fn $m(self, o: QRat) -> QRat {
                self.$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&QRat> for QRat {
    fn add_assign(&mut self, o: &QRat) {
        *self = &*self + o;
    }
}

impl SubAssign<&QRat> for QRat {
    fn sub_assign(&mut self, o: &QRat) {
        *self = &*self - o;
    }
}

impl MulAssign<&QRat> for QRat {
    fn mul_assign(&mut self, o: &QRat) {
        *self = &*self * o;
    }
}

impl fmt::Display for QRat {
    /// Laurent form when the denominator is a power of q, otherwise (num)/(den).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_laurent() {
            return poly::fmt_laurent(f, &self.num, self.den.degree());
        }
        write!(f, "({})/({})", self.num, self.den)
    }
}

/// Wire integer: a JSON number when it fits in i64, a decimal string otherwise.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum WireInt {
    Small(i64),
    Big(String),
}

fn to_wire(p: &QPoly) -> Vec<WireInt> {
    p.coeffs()
        .iter()
        .map(|c| match i64::try_from(c) {
            Ok(v) => WireInt::Small(v),
            Err(_) => WireInt::Big(c.to_string()),
        })
        .collect()
}

fn from_wire(v: Vec<WireInt>) -> Result<QPoly, String> {
    v.into_iter()
        .map(|w| match w {
            WireInt::Small(v) => Ok(BigInt::from(v)),
            WireInt::Big(s) => s.parse().map_err(|_| format!("bad integer {s:?}")),
        })
        .collect::<Result<Vec<_>, _>>()
        .map(QPoly::from_coeffs)
}

#[derive(Serialize, Deserialize)]
struct QRatWire {
    num: Vec<WireInt>,
    den: Vec<WireInt>,
}

impl Serialize for QRat {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        QRatWire {
            num: to_wire(&self.num),
            den: to_wire(&self.den),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for QRat {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let w = QRatWire::deserialize(d)?;
        let num = from_wire(w.num).map_err(D::Error::custom)?;
        let den = from_wire(w.den).map_err(D::Error::custom)?;
        QRat::new(num, den).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> QPoly {
        QPoly::from_i64s(cs)
    }

    #[test]
    fn normalize_cancels_common_factor() {
        let r = QRat::new(p(&[-1, 0, 1]), p(&[-1, 1])).unwrap();
        assert_eq!(r.num(), &p(&[1, 1]));
        assert_eq!(r.den(), &p(&[1]));
    }

    #[test]
    fn zero_is_unique() {
        let r = QRat::new(QPoly::zero(), p(&[0, 0, 0, 1])).unwrap();
        assert_eq!(r, QRat::zero());
        assert_eq!(r.den(), &p(&[1]));
    }

    #[test]
    fn normalize_over_qdiff_gives_minus_q() {
        // (1 - q^2) / ((q^2 - 1)/q) = -q
        let a = QRat::from_poly(p(&[1, 0, -1]));
        let b = QRat::new(p(&[-1, 0, 1]), p(&[0, 1])).unwrap();
        assert_eq!(&a / &b, -QRat::q());
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(QRat::new(p(&[1]), QPoly::zero()), Err(QError::ZeroDenominator));
        assert_eq!(QRat::zero().inv(), Err(QError::DivisionByZero));
    }

    #[test]
    fn sign_lives_in_numerator() {
        let r = QRat::new(p(&[1]), p(&[0, -2])).unwrap();
        assert_eq!(r.den(), &p(&[0, 2]));
        assert_eq!(r.num(), &p(&[-1]));
    }

    #[test]
    fn q_plus_inverse() {
        let r = QRat::q() + QRat::q_pow(-1);
        assert_eq!(r, QRat::new(p(&[1, 0, 1]), p(&[0, 1])).unwrap());
        assert_eq!(QRat::qdiff().inv().unwrap() * QRat::qdiff(), QRat::one());
    }

    #[test]
    fn metric_scaling_coefficient_values() {
        // (1 - q^{2m}) / (q - q^{-1})
        for (m, want) in [(1, -1i64), (2, -2), (3, -3)] {
            let c = (QRat::one() - QRat::q_pow(2 * m)) / QRat::qdiff();
            assert_eq!(c.eval_q1().unwrap(), BigRational::from_integer(want.into()));
            if m == 1 {
                assert_eq!(c, -QRat::q());
            }
        }
    }

    #[test]
    fn eval_at_one() {
        let r = QRat::new(p(&[-1, 0, 1]), p(&[-1, 1])).unwrap();
        assert_eq!(r.eval_q1().unwrap(), BigRational::from_integer(2.into()));
        assert_eq!(QRat::qdiff().inv().unwrap().eval_q1(), Err(QError::PoleAtOne));
    }

    #[test]
    fn exact_qdiff_division() {
        let a = QRat::one() - QRat::q_pow(2);
        assert_eq!(a.div_qdiff_exact().unwrap(), -QRat::q());
        assert!(QRat::q().div_qdiff_exact().is_err());
    }

    #[test]
    fn display_forms() {
        assert_eq!(QRat::qdiff().to_string(), "q-q^-1");
        assert_eq!((-QRat::q()).to_string(), "-q");
        assert_eq!(QRat::from_int(-1).to_string(), "-1");
        let r = QRat::new(p(&[1]), p(&[1, 0, 1])).unwrap();
        assert_eq!(r.to_string(), "(1)/(q^2+1)");
    }

    #[test]
    fn serde_round_trip() {
        let r = QRat::new(p(&[-1, 0, 1]), p(&[0, 1])).unwrap();
        let s = serde_json::to_string(&r).unwrap();
        assert_eq!(s, r#"{"num":[-1,0,1],"den":[0,1]}"#);
        let back: QRat = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn braided_integer_limit_matches_numeric_spot_check() {
        let m3 = &(QRat::one() - QRat::q_pow(6)) / &QRat::qdiff();
        assert_eq!(m3.eval_q1().unwrap(), BigRational::from_integer((-3).into()));
        let raw = |x: f64| (1.0 - x.powi(6)) / (x - 1.0 / x);
        for x in [1.0 - 1e-6, 1.0 + 1e-6] {
            assert!((raw(x) + 3.0).abs() < 1e-4);
            assert!((m3.eval_f64(x) - raw(x)).abs() < 1e-6);
        }
    }
}
