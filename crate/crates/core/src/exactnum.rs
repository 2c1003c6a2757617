//! Exact arithmetic in `Q(√N)` and dilated Chebyshev polynomials.
//!
//! `√N` is kept formal: `(√N)² = N` even when `N` is a perfect square, so
//! `0 + 1*sqrt(9)` and `3` are distinct values. Each value carries its own
//! base and mixing bases is an error.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use num_traits::{One, Signed, Zero};

use crate::scalar::{pow_u, Scalar};
use crate::{Error, Integer, Rational, Result};

/// `rat_part + surd_part * √surd_base`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QNum<T = Rational> {
    pub rat_part: T,
    pub surd_part: T,
    pub surd_base: u64,
}

impl<T: Scalar> QNum<T> {
    pub fn new(rat_part: T, surd_part: T, surd_base: u64) -> Self {
        assert!(surd_base >= 1, "surd base must be positive");
        QNum {
            rat_part,
            surd_part,
            surd_base,
        }
    }

    pub fn from_rat(r: T, surd_base: u64) -> Self {
        Self::new(r, T::zero(), surd_base)
    }

    pub fn zero(surd_base: u64) -> Self {
        Self::from_rat(T::zero(), surd_base)
    }

    pub fn one(surd_base: u64) -> Self {
        Self::from_rat(T::one(), surd_base)
    }

    /// `√N` itself.
    pub fn sqrt_n(surd_base: u64) -> Self {
        Self::new(T::zero(), T::one(), surd_base)
    }

    /// `(√N)^e`.
    pub fn sqrt_n_pow(e: u32, surd_base: u64) -> Self {
        let n = T::from_u64(surd_base).expect("base fits scalar");
        let half = pow_u(&n, e / 2);
        if e % 2 == 0 {
            Self::from_rat(half, surd_base)
        } else {
            Self::new(T::zero(), half, surd_base)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.rat_part.is_zero() && self.surd_part.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.surd_part.is_zero()
    }

    /// The rational value, if the surd part vanishes.
    pub fn to_rational(&self) -> Option<T> {
        self.is_rational().then(|| self.rat_part.clone())
    }

    fn base_t(&self) -> T {
        T::from_u64(self.surd_base).expect("base fits scalar")
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.surd_base != other.surd_base {
            return Err(Error::BaseMismatch {
                left: self.surd_base,
                right: other.surd_base,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(QNum {
            rat_part: self.rat_part.clone() + other.rat_part.clone(),
            surd_part: self.surd_part.clone() + other.surd_part.clone(),
            surd_base: self.surd_base,
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(QNum {
            rat_part: self.rat_part.clone() - other.rat_part.clone(),
            surd_part: self.surd_part.clone() - other.surd_part.clone(),
            surd_base: self.surd_base,
        })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let (a, b) = (&self.rat_part, &self.surd_part);
        let (c, d) = (&other.rat_part, &other.surd_part);
        Ok(QNum {
            rat_part: a.clone() * c.clone() + b.clone() * d.clone() * self.base_t(),
            surd_part: a.clone() * d.clone() + b.clone() * c.clone(),
            surd_base: self.surd_base,
        })
    }

    /// `a - b√N`.
    pub fn conjugate(&self) -> Self {
        QNum {
            rat_part: self.rat_part.clone(),
            surd_part: T::zero() - self.surd_part.clone(),
            surd_base: self.surd_base,
        }
    }

    /// `a² - b²N`.
    pub fn norm(&self) -> T {
        self.rat_part.clone() * self.rat_part.clone()
            - self.surd_part.clone() * self.surd_part.clone() * self.base_t()
    }

    /// Division through the conjugate. A zero norm (zero, or a zero divisor
    /// when `N` is a square) is reported as division by zero.
    pub fn try_div(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let nrm = other.norm();
        if nrm.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let num = self.try_mul(&other.conjugate())?;
        Ok(QNum {
            rat_part: num.rat_part / nrm.clone(),
            surd_part: num.surd_part / nrm,
            surd_base: self.surd_base,
        })
    }

    pub fn scale(&self, r: &T) -> Self {
        QNum {
            rat_part: self.rat_part.clone() * r.clone(),
            surd_part: self.surd_part.clone() * r.clone(),
            surd_base: self.surd_base,
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.surd_base);
        for _ in 0..e {
            acc = acc.try_mul(self).expect("same base");
        }
        acc
    }
}

impl<T: Scalar> Add for QNum<T> {
    type Output = QNum<T>;
    /// Panics on mismatched bases; use `try_add` to handle that case.
    fn add(self, rhs: Self) -> Self {
        self.try_add(&rhs).expect("QNum base mismatch")
    }
}

impl<T: Scalar> Sub for QNum<T> {
    type Output = QNum<T>;
    fn sub(self, rhs: Self) -> Self {
        self.try_sub(&rhs).expect("QNum base mismatch")
    }
}

impl<T: Scalar> Mul for QNum<T> {
    type Output = QNum<T>;
    fn mul(self, rhs: Self) -> Self {
        self.try_mul(&rhs).expect("QNum base mismatch")
    }
}

impl<T: Scalar> Neg for QNum<T> {
    type Output = QNum<T>;
    fn neg(self) -> Self {
        QNum {
            rat_part: T::zero() - self.rat_part,
            surd_part: T::zero() - self.surd_part,
            surd_base: self.surd_base,
        }
    }
}

impl QNum<Rational> {
    pub fn from_int(v: i64, surd_base: u64) -> Self {
        Self::from_rat(Rational::from_integer(v.into()), surd_base)
    }

    pub fn to_f64(&self) -> f64 {
        crate::scalar::rational_to_f64(&self.rat_part)
            + crate::scalar::rational_to_f64(&self.surd_part) * (self.surd_base as f64).sqrt()
    }
}

impl<T: Scalar + fmt::Display + Signed> fmt::Display for QNum<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.surd_part.is_zero() {
            return write!(f, "{}", self.rat_part);
        }
        let sign = if self.surd_part.is_negative() {
            '-'
        } else {
            '+'
        };
        write!(
            f,
            "{} {} {}*sqrt({})",
            self.rat_part,
            sign,
            self.surd_part.abs(),
            self.surd_base
        )
    }
}

fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::parse(format!("bad rational {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: Integer = n.trim().parse().map_err(|_| bad())?;
            let d: Integer = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

impl QNum<Rational> {
    /// Parses `a`, `a + b*sqrt(N)` or `a - b*sqrt(N)`. A bare rational
    /// takes the supplied default base.
    pub fn parse(s: &str, default_base: u64) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let Some(star) = t.find("*sqrt(") else {
            return Ok(Self::from_rat(parse_rational(&t)?, default_base));
        };
        let tail = &t[star + 6..];
        let base_str = tail
            .strip_suffix(')')
            .ok_or_else(|| Error::parse(format!("unterminated sqrt in {s:?}")))?;
        let base: u64 = base_str
            .parse()
            .map_err(|_| Error::parse(format!("bad surd base in {s:?}")))?;
        if base == 0 {
            return Err(Error::parse("surd base must be positive"));
        }
        let head = &t[..star];
        // split at the last sign that is not the leading sign of the rational part
        let split = head
            .char_indices()
            .skip(1)
            .filter(|&(i, c)| (c == '+' || c == '-') && !head[..i].ends_with(['/', '+', '-']))
            .map(|(i, _)| i)
            .last()
            .ok_or_else(|| Error::parse(format!("expected 'a + b*sqrt(N)' in {s:?}")))?;
        let a = parse_rational(&head[..split])?;
        let sign = &head[split..split + 1];
        let mut rest = &head[split + 1..];
        // tolerate "a + -b*sqrt(N)"
        let mut b_neg = sign == "-";
        if let Some(r) = rest.strip_prefix('-') {
            b_neg = !b_neg;
            rest = r;
        }
        let mut b = parse_rational(rest)?;
        if b_neg {
            b = -b;
        }
        Ok(Self::new(a, b, base))
    }
}

impl FromStr for QNum<Rational> {
    type Err = Error;
    /// Bare rationals get base 1.
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s, 1)
    }
}

/// `N^(exp4/4)`, used where quarter powers occur before cancelling.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NPow {
    pub exp4: i64,
}

impl NPow {
    pub const ONE: NPow = NPow { exp4: 0 };

    pub fn sqrt_n_pow(e: i64) -> Self {
        NPow { exp4: 2 * e }
    }

    pub fn n_pow(e: i64) -> Self {
        NPow { exp4: 4 * e }
    }

    pub fn times(self, other: NPow) -> NPow {
        NPow {
            exp4: self.exp4 + other.exp4,
        }
    }

    pub fn inv(self) -> NPow {
        NPow { exp4: -self.exp4 }
    }

    /// Value in `Q(√N)` when the exponent is a half-integer multiple.
    pub fn to_qnum(self, n: u64) -> Option<QNum> {
        if self.exp4 % 2 != 0 {
            return None;
        }
        let e = self.exp4 / 2;
        let p = QNum::<Rational>::sqrt_n_pow(e.unsigned_abs() as u32, n);
        if e >= 0 {
            Some(p)
        } else {
            p.try_div_from_one()
        }
    }
}

impl QNum<Rational> {
    fn try_div_from_one(&self) -> Option<Self> {
        QNum::one(self.surd_base).try_div(self).ok()
    }
}

impl fmt::Display for NPow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = Rational::new(self.exp4.into(), 4.into());
        if r.is_zero() {
            write!(f, "1")
        } else if r.is_one() {
            write!(f, "N")
        } else {
            write!(f, "N^({r})")
        }
    }
}

/// Polynomial with integer coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPoly {
    pub coefficients: Vec<Integer>,
}

/// Dilated Chebyshev polynomials share the integer polynomial type.
pub type ChebPoly = IntPoly;

impl IntPoly {
    pub fn new(mut coefficients: Vec<Integer>) -> Self {
        while coefficients.last().is_some_and(Zero::is_zero) {
            coefficients.pop();
        }
        IntPoly { coefficients }
    }

    pub fn from_i64(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&v| v.into()).collect())
    }

    pub fn constant(c: Integer) -> Self {
        Self::new(vec![c])
    }

    pub fn x() -> Self {
        Self::from_i64(&[0, 1])
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Integer {
        self.coefficients.get(i).cloned().unwrap_or_default()
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coefficients.len().max(o.coefficients.len());
        Self::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.coefficients.len().max(o.coefficients.len());
        Self::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.coefficients.is_empty() || o.coefficients.is_empty() {
            return Self::new(vec![]);
        }
        let mut c = vec![Integer::zero(); self.coefficients.len() + o.coefficients.len() - 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            for (j, b) in o.coefficients.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Self::new(c)
    }

    pub fn scale(&self, s: &Integer) -> Self {
        Self::new(self.coefficients.iter().map(|c| c * s).collect())
    }

    pub fn eval<T>(&self, x: &T) -> T
    where
        T: Scalar + From<Integer>,
    {
        self.coefficients
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + T::from(c.clone()))
    }

    pub fn eval_int(&self, x: &Integer) -> Integer {
        self.eval(x)
    }

    /// Evaluates at `√N` in `Q(√N)`.
    pub fn eval_sqrt_n(&self, n: u64) -> QNum {
        let nn = Integer::from(n);
        let mut rat = Integer::zero();
        let mut surd = Integer::zero();
        let mut pow = Integer::one();
        for (i, c) in self.coefficients.iter().enumerate() {
            if i % 2 == 0 {
                rat += c * &pow;
            } else {
                surd += c * &pow;
                pow *= &nn;
            }
        }
        QNum::new(Rational::from_integer(rat), Rational::from_integer(surd), n)
    }

    /// Rewrites `P(Y)` with only even powers as `Q(X)` where `X = Y²`.
    pub fn even_part_in_square(&self) -> Option<Self> {
        if self
            .coefficients
            .iter()
            .skip(1)
            .step_by(2)
            .any(|c| !c.is_zero())
        {
            return None;
        }
        Some(Self::new(
            self.coefficients.iter().step_by(2).cloned().collect(),
        ))
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coefficients.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coefficients.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match i {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}*")?;
                    }
                    if i == 1 {
                        write!(f, "X")?;
                    } else {
                        write!(f, "X^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

static CHEB_MEMO: OnceLock<Mutex<Vec<ChebPoly>>> = OnceLock::new();

/// `A_l`, from `A_0 = 1`, `A_1 = X`, `A_1 A_k = A_{k+1} + A_{k-1}`.
pub fn cheb_a(l: usize) -> ChebPoly {
    let memo = CHEB_MEMO.get_or_init(|| Mutex::new(vec![IntPoly::from_i64(&[1]), IntPoly::x()]));
    let mut table = memo.lock().unwrap_or_else(|e| e.into_inner());
    while table.len() <= l {
        let k = table.len();
        let next = IntPoly::x().mul(&table[k - 1]).sub(&table[k - 2]);
        table.push(next);
    }
    table[l].clone()
}

/// `A_l(√N)`.
pub fn cheb_eval_sqrt_n(l: usize, n: u64) -> QNum {
    cheb_a(l).eval_sqrt_n(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(a: i64, b: i64, n: u64) -> QNum {
        QNum::new(
            Rational::from_integer(a.into()),
            Rational::from_integer(b.into()),
            n,
        )
    }

    #[test]
    fn surd_squares_to_base() {
        assert_eq!(q(0, 1, 4) * q(0, 1, 4), q(4, 0, 4));
        assert_eq!(q(1, 1, 2) * q(1, -1, 2), q(-1, 0, 2));
        assert_eq!(q(0, 1, 5).try_div(&q(0, 1, 5)).unwrap(), q(1, 0, 5));
    }

    #[test]
    fn base_mismatch_and_zero_division() {
        assert!(matches!(
            q(1, 0, 2).try_add(&q(1, 0, 3)),
            Err(Error::BaseMismatch { left: 2, right: 3 })
        ));
        assert_eq!(q(1, 1, 2).try_div(&q(0, 0, 2)), Err(Error::DivisionByZero));
        // 2 - √4 is a zero divisor in the formal ring
        assert_eq!(q(1, 0, 4).try_div(&q(2, -1, 4)), Err(Error::DivisionByZero));
    }

    #[test]
    fn rational_round_trip() {
        let r = Rational::new(7.into(), (-3).into());
        let v = QNum::from_rat(r.clone(), 6);
        assert_eq!(v.to_rational(), Some(r));
        assert_eq!(q(0, 1, 6).to_rational(), None);
    }

    #[test]
    fn chebyshev_low_degrees() {
        assert_eq!(cheb_a(0), IntPoly::from_i64(&[1]));
        assert_eq!(cheb_a(2), IntPoly::from_i64(&[-1, 0, 1]));
        assert_eq!(cheb_a(3), IntPoly::from_i64(&[0, -2, 0, 1]));
        assert_eq!(cheb_a(4), IntPoly::from_i64(&[1, 0, -3, 0, 1]));
    }

    #[test]
    fn chebyshev_evaluations() {
        assert_eq!(cheb_eval_sqrt_n(2, 4), q(3, 0, 4));
        assert_eq!(cheb_eval_sqrt_n(1, 9), q(0, 1, 9));
        assert_eq!(cheb_eval_sqrt_n(4, 4), q(5, 0, 4));
        for l in (0..=20).step_by(2) {
            assert!(cheb_eval_sqrt_n(l, 7).is_rational());
        }
    }

    #[test]
    fn chebyshev_shape_and_recursion() {
        for l in 0..=20usize {
            let a = cheb_a(l);
            assert_eq!(a.degree(), Some(l));
            assert!(a.coeff(l).is_one());
            for (i, c) in a.coefficients.iter().enumerate() {
                if (i + l) % 2 == 1 {
                    assert!(c.is_zero(), "A_{l} has wrong-parity term X^{i}");
                }
            }
            if l >= 1 {
                assert_eq!(cheb_a(1).mul(&a), cheb_a(l + 1).add(&cheb_a(l - 1)));
            }
            assert_eq!(a.eval_int(&2.into()), Integer::from(l as i64 + 1));
        }
    }

    #[test]
    fn memo_is_thread_safe() {
        let handles: Vec<_> = (0..8)
            .map(|t| std::thread::spawn(move || cheb_a(10 + t)))
            .collect();
        for (t, h) in handles.into_iter().enumerate() {
            assert_eq!(h.join().unwrap().degree(), Some(10 + t));
        }
    }

    #[test]
    fn render_and_parse() {
        let cases = [
            (q(4, 0, 4), "4"),
            (q(0, 1, 9), "0 + 1*sqrt(9)"),
            (q(1, -1, 2), "1 - 1*sqrt(2)"),
            (
                QNum::new(
                    Rational::new(1.into(), 2.into()),
                    Rational::new((-3).into(), 4.into()),
                    5,
                ),
                "1/2 - 3/4*sqrt(5)",
            ),
        ];
        for (v, s) in cases {
            assert_eq!(v.to_string(), s);
            assert_eq!(QNum::parse(s, v.surd_base).unwrap(), v);
        }
        assert_eq!(
            QNum::parse("-1/2+-3*sqrt(7)", 1).unwrap(),
            QNum::new(
                Rational::new((-1).into(), 2.into()),
                Rational::from_integer((-3).into()),
                7
            )
        );
        assert!(QNum::parse("1 + 2*sqrt(", 1).is_err());
        assert!(QNum::parse("x", 1).is_err());
    }

    #[test]
    fn npow_values() {
        assert_eq!(NPow::n_pow(1).to_qnum(5), Some(q(5, 0, 5)));
        assert_eq!(NPow::sqrt_n_pow(1).to_qnum(5), Some(q(0, 1, 5)));
        assert_eq!(NPow { exp4: 1 }.to_qnum(5), None);
        let inv = NPow::sqrt_n_pow(-1).to_qnum(4).unwrap();
        assert_eq!(inv * q(0, 1, 4), q(1, 0, 4));
    }

    #[test]
    fn poly_display() {
        assert_eq!(IntPoly::from_i64(&[-1, 0, 1]).to_string(), "X^2 - 1");
        assert_eq!(IntPoly::from_i64(&[0, -2, 0, 1]).to_string(), "X^3 - 2*X");
        assert_eq!(IntPoly::from_i64(&[]).to_string(), "0");
        assert_eq!(IntPoly::from_i64(&[0, 3]).to_string(), "3*X");
    }

    #[test]
    fn generic_over_f64() {
        let a = QNum::<f64>::new(1.0, 1.0, 2);
        let b = a.try_mul(&a.conjugate()).unwrap();
        assert!((b.rat_part + 1.0).abs() < 1e-12 && b.surd_part == 0.0);
    }

    fn arb_q() -> impl Strategy<Value = QNum> {
        (-20i64..20, 1i64..6, -20i64..20, 1i64..6).prop_map(|(a, da, b, db)| {
            QNum::new(
                Rational::new(a.into(), da.into()),
                Rational::new(b.into(), db.into()),
                3,
            )
        })
    }

    proptest! {
        #[test]
        fn ring_laws(a in arb_q(), b in arb_q(), c in arb_q()) {
            prop_assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
            prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a.clone() * (b.clone() * c.clone()));
            prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c.clone());
            prop_assert_eq!((a.clone() + b.clone()) + c.clone(), a.clone() + (b.clone() + c.clone()));
            if !b.is_zero() {
                prop_assert_eq!(a.try_div(&b).unwrap() * b.clone(), a.clone());
            }
        }

        #[test]
        fn display_parse_round_trip(a in arb_q()) {
            prop_assert_eq!(QNum::parse(&a.to_string(), 3).unwrap(), a);
        }
    }
}
