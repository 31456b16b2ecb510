use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::poly::QPoly;
use crate::LinalgError;

/// An element of Q or of the rational function field Q(q).
///
/// Rational functions are kept reduced with a monic denominator, and any that
/// reduce to a constant are stored as `Rat`, so derived equality is equality
/// of field elements.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Scalar {
    Rat(BigRational),
    Fun(RatFun),
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFun {
    num: QPoly,
    den: QPoly,
}

impl RatFun {
    pub fn numerator(&self) -> &QPoly {
        &self.num
    }

    pub fn denominator(&self) -> &QPoly {
        &self.den
    }
}

fn normalize(num: QPoly, den: QPoly) -> Scalar {
    assert!(!den.is_zero(), "rational function with zero denominator");
    if num.is_zero() {
        return Scalar::zero();
    }
    let g = num.gcd(&den);
    let (mut num, mut den) = if g.is_constant() {
        (num, den)
    } else {
        (num.div_rem(&g).0, den.div_rem(&g).0)
    };
    let lead = den.leading().expect("nonzero").clone();
    if !lead.is_one() {
        let inv = lead.recip();
        num = num.scale(&inv);
        den = den.scale(&inv);
    }
    if den.is_constant() && num.is_constant() {
        Scalar::Rat(num.constant_term())
    } else {
        Scalar::Fun(RatFun { num, den })
    }
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar::Rat(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::Rat(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        assert!(d != 0, "zero denominator");
        Scalar::Rat(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    /// The indeterminate `q` of Q(q).
    pub fn q() -> Self {
        Scalar::Fun(RatFun {
            num: QPoly::monomial(BigRational::one(), 1),
            den: QPoly::one(),
        })
    }

    pub fn from_poly(p: QPoly) -> Self {
        normalize(p, QPoly::one())
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Scalar::Rat(r) if r.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Scalar::Rat(r) if r.is_one())
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, Scalar::Rat(_))
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rat(r) => Some(r),
            Scalar::Fun(_) => None,
        }
    }

    fn parts(&self) -> (QPoly, QPoly) {
        match self {
            Scalar::Rat(r) => (QPoly::constant(r.clone()), QPoly::one()),
            Scalar::Fun(f) => (f.num.clone(), f.den.clone()),
        }
    }

    pub fn checked_inv(&self) -> Option<Self> {
        match self {
            Scalar::Rat(r) if r.is_zero() => None,
            Scalar::Rat(r) => Some(Scalar::Rat(r.recip())),
            Scalar::Fun(f) => Some(normalize(f.den.clone(), f.num.clone())),
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Self {
        self.checked_inv().expect("inverse of zero scalar")
    }

    pub fn pow(&self, exp: i64) -> Self {
        if exp < 0 {
            return self.inv().pow(-exp);
        }
        let mut base = self.clone();
        let mut acc = Scalar::one();
        let mut e = exp as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Evaluate a rational function at a rational point; `None` on a pole.
    pub fn eval_at(&self, point: &BigRational) -> Option<BigRational> {
        match self {
            Scalar::Rat(r) => Some(r.clone()),
            Scalar::Fun(f) => {
                let d = f.den.eval(point);
                if d.is_zero() {
                    None
                } else {
                    Some(f.num.eval(point) / d)
                }
            }
        }
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<BigRational> for Scalar {
    fn from(r: BigRational) -> Self {
        Scalar::Rat(r)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            _ => {
                let (an, ad) = self.parts();
                let (bn, bd) = rhs.parts();
                if ad == bd {
                    normalize(an.add(&bn), ad)
                } else {
                    normalize(an.mul(&bd).add(&bn.mul(&ad)), ad.mul(&bd))
                }
            }
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Rat(a), Scalar::Fun(_)) | (Scalar::Fun(_), Scalar::Rat(a)) if a.is_zero() => {
                Scalar::zero()
            }
            (Scalar::Rat(a), Scalar::Fun(f)) | (Scalar::Fun(f), Scalar::Rat(a)) => {
                Scalar::Fun(RatFun {
                    num: f.num.scale(a),
                    den: f.den.clone(),
                })
            }
            _ => {
                let (an, ad) = self.parts();
                let (bn, bd) = rhs.parts();
                normalize(an.mul(&bn), ad.mul(&bd))
            }
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Fun(f) => Scalar::Fun(RatFun {
                num: f.num.neg(),
                den: f.den.clone(),
            }),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a - b),
            _ => self + &(-rhs),
        }
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => {
                assert!(!b.is_zero(), "division by zero scalar");
                Scalar::Rat(a / b)
            }
            _ => self * &rhs.inv(),
        }
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &'a Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
owned_binop!(Div, div);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        match (&mut *self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => *a += b,
            _ => *self = &*self + rhs,
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        match (&mut *self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => *a -= b,
            _ => *self = &*self - rhs,
        }
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        match (&mut *self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => *a *= b,
            _ => *self = &*self * rhs,
        }
    }
}

impl Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        let mut acc = Scalar::zero();
        for x in iter {
            acc += &x;
        }
        acc
    }
}

fn fmt_rat(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => write!(f, "{}", fmt_rat(r)),
            Scalar::Fun(rf) => {
                if rf.den.is_constant() {
                    write!(f, "{}", rf.num)
                } else {
                    write!(f, "({})/({})", rf.num, rf.den)
                }
            }
        }
    }
}

impl FromStr for Scalar {
    type Err = LinalgError;

    /// Accepts integers, fractions `a/b`, and the symbol `q`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t == "q" {
            return Ok(Scalar::q());
        }
        let bad = || LinalgError::Parse(t.to_string());
        let (n, d) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (t, "1"),
        };
        let n: BigInt = n.parse().map_err(|_| bad())?;
        let d: BigInt = d.parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        Ok(Scalar::Rat(BigRational::new(n, d)))
    }
}

impl Scalar {
    /// True for nonzero rationals that are negative; rational functions report false.
    pub fn is_negative_rational(&self) -> bool {
        matches!(self, Scalar::Rat(r) if r.is_negative())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ratfun_reduces_to_constant() {
        let q = Scalar::q();
        let x = &(&q * &q) - &Scalar::one();
        let y = &q - &Scalar::one();
        let r = &x / &(&y * &(&q + &Scalar::one()));
        assert_eq!(r, Scalar::one());
        assert!(r.is_rational());
    }

    #[test]
    fn q_power_round_trip() {
        let q = Scalar::q();
        assert_eq!(&q.pow(5) * &q.pow(-5), Scalar::one());
        assert_eq!(q.pow(2).to_string(), "q^2");
        assert_eq!(q.pow(-2).to_string(), "(1)/(q^2)");
    }

    #[test]
    fn quantum_commutator_denominator() {
        // (q^2 - q^-2)/(q - q^-1) = q + q^-1
        let q = Scalar::q();
        let lhs = &(&q.pow(2) - &q.pow(-2)) / &(&q - &q.inv());
        let rhs = &q + &q.inv();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("-3/6".parse::<Scalar>().unwrap(), Scalar::from_ratio(-1, 2));
        assert_eq!(Scalar::from_ratio(-1, 2).to_string(), "-1/2");
        assert!("1/0".parse::<Scalar>().is_err());
        assert!("abc".parse::<Scalar>().is_err());
        assert_eq!("q".parse::<Scalar>().unwrap(), Scalar::q());
    }

    #[test]
    fn evaluation_matches_rational_arithmetic() {
        let q = Scalar::q();
        let f = &(&q + &Scalar::from_int(3)) / &(&q.pow(2) + &Scalar::one());
        let two = BigRational::from_integer(2.into());
        assert_eq!(f.eval_at(&two).unwrap(), BigRational::new(5.into(), 5.into()));
    }
}
