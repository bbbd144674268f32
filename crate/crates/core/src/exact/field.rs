use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::Value;

use crate::error::{input, Error, Result};

/// The scalar field of a computation: the rationals, or a prime field of odd order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct FieldSpec {
    modulus: Option<u64>,
}

impl FieldSpec {
    pub const RATIONAL: FieldSpec = FieldSpec { modulus: None };

    /// The prime field of order `p`. Rejects composites and `p = 2`.
    pub fn prime(p: u64) -> Result<FieldSpec> {
        if p == 2 {
            return input("the field of order 2 is excluded (needs three parallel lines)");
        }
        if p > u32::MAX as u64 {
            return input(format!("modulus {p} exceeds the supported 32-bit range"));
        }
        if !is_prime(p) {
            return input(format!("{p} is not a prime"));
        }
        Ok(FieldSpec { modulus: Some(p) })
    }

    pub fn modulus(&self) -> Option<u64> {
        self.modulus
    }

    pub fn is_rational(&self) -> bool {
        self.modulus.is_none()
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self.modulus {
            None => Scalar(Repr::Rat(BigRational::from_integer(BigInt::from(v)))),
            Some(p) => Scalar(Repr::Res {
                value: v.rem_euclid(p as i64) as u64,
                p,
            }),
        }
    }

    /// Residue of a non-negative integer; the value must already be reduced.
    pub fn residue(&self, v: u64) -> Result<Scalar> {
        match self.modulus {
            Some(p) if v < p => Ok(Scalar(Repr::Res { value: v, p })),
            Some(p) => input(format!("residue {v} is not below the modulus {p}")),
            None => Ok(self.from_i64(v as i64)),
        }
    }

    /// Parses a literal: `"a/b"` or `"a"` over the rationals, `"k"` with `0 <= k < p` over a prime field.
    pub fn parse(&self, s: &str) -> Result<Scalar> {
        let s = s.trim();
        match self.modulus {
            None => parse_rational(s).map(|r| Scalar(Repr::Rat(r))),
            Some(p) => {
                let v: u64 = s
                    .parse()
                    .map_err(|_| Error::Format(format!("bad residue literal {s:?}")))?;
                self.residue(v).map_err(|_| Error::Format(format!("residue {v} not below {p}")))
            }
        }
    }

    /// Reads a scalar from JSON: a string literal, or an integer.
    pub fn scalar_from_json(&self, v: &Value) -> Result<Scalar> {
        match v {
            Value::String(s) => self.parse(s),
            Value::Number(n) => match (n.as_i64(), self.modulus) {
                (Some(i), None) => Ok(self.from_i64(i)),
                (Some(i), Some(_)) if i >= 0 => self.residue(i as u64),
                _ => Err(Error::Format(format!("bad scalar literal {n}"))),
            },
            other => Err(Error::Format(format!("expected a scalar literal, got {other}"))),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.modulus {
            None => write!(f, "Q"),
            Some(p) => write!(f, "Z{p}"),
        }
    }
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Format(format!("bad rational literal {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::Format(format!("zero denominator in {s:?}")));
    }
    Ok(BigRational::new(num, den))
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
enum Repr {
    Rat(BigRational),
    Res { value: u64, p: u64 },
}

/// An exact field element. Rationals are kept in lowest terms with a positive
/// denominator; residues are kept in `0..p`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Scalar(Repr);

impl Scalar {
    pub fn from_rational(r: BigRational) -> Scalar {
        Scalar(Repr::Rat(r))
    }

    pub fn field(&self) -> FieldSpec {
        match self.0 {
            Repr::Rat(_) => FieldSpec::RATIONAL,
            Repr::Res { p, .. } => FieldSpec { modulus: Some(p) },
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Rat(r) => r.is_zero(),
            Repr::Res { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.0 {
            Repr::Rat(r) => r.is_one(),
            Repr::Res { value, .. } => *value == 1,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.0 {
            Repr::Rat(r) => Some(r),
            Repr::Res { .. } => None,
        }
    }

    pub fn residue(&self) -> Option<u64> {
        match self.0 {
            Repr::Res { value, .. } => Some(value),
            Repr::Rat(_) => None,
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match &self.0 {
            Repr::Rat(r) => Scalar(Repr::Rat(r.recip())),
            Repr::Res { value, p } => Scalar(Repr::Res {
                value: pow_mod(*value, *p - 2, *p),
                p: *p,
            }),
        })
    }

    pub fn pow(&self, e: u32) -> Scalar {
        let mut acc = self.field().one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Maps a rational into a prime field. Fails when the denominator vanishes mod `p`.
    pub fn reduce_into(&self, target: FieldSpec) -> Result<Scalar> {
        match (&self.0, target.modulus) {
            (_, None) => match &self.0 {
                Repr::Rat(_) => Ok(self.clone()),
                Repr::Res { .. } => input("cannot lift a residue to the rationals"),
            },
            (Repr::Res { p, .. }, Some(q)) if *p == q => Ok(self.clone()),
            (Repr::Res { p, .. }, Some(q)) => input(format!("cannot map Z{p} into Z{q}")),
            (Repr::Rat(r), Some(p)) => {
                let m = BigInt::from(p);
                let num = r.numer().mod_floor(&m).to_u64().unwrap();
                let den = r.denom().mod_floor(&m).to_u64().unwrap();
                if den == 0 {
                    return input(format!("denominator of {r} vanishes mod {p}"));
                }
                let inv = pow_mod(den, p - 2, p);
                Ok(Scalar(Repr::Res {
                    value: num * inv % p,
                    p,
                }))
            }
        }
    }

    /// JSON form: rational literal string, or integer residue.
    pub fn to_json(&self) -> Value {
        match &self.0 {
            Repr::Rat(_) => Value::String(self.to_string()),
            Repr::Res { value, .. } => Value::from(*value),
        }
    }

    fn check_same(&self, other: &Scalar) {
        let (a, b) = (self.field(), other.field());
        assert!(a == b, "scalar field mismatch: {a} vs {b}");
    }
}

fn pow_mod(mut base: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Rat(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Repr::Rat(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Repr::Res { value, .. } => write!(f, "{value}"),
        }
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Numeric order on rationals, residue order on residues; rationals sort first.
impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Rat(a), Repr::Rat(b)) => a.cmp(b),
            (Repr::Res { value: a, p: pa }, Repr::Res { value: b, p: pb }) => (pa, a).cmp(&(pb, b)),
            (Repr::Rat(_), Repr::Res { .. }) => Ordering::Less,
            (Repr::Res { .. }, Repr::Rat(_)) => Ordering::Greater,
        }
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        self.check_same(rhs);
        match (&self.0, &rhs.0) {
            (Repr::Rat(a), Repr::Rat(b)) => Scalar(Repr::Rat(a + b)),
            (Repr::Res { value: a, p }, Repr::Res { value: b, .. }) => Scalar(Repr::Res {
                value: (a + b) % p,
                p: *p,
            }),
            _ => unreachable!(),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        self.check_same(rhs);
        match (&self.0, &rhs.0) {
            (Repr::Rat(a), Repr::Rat(b)) => Scalar(Repr::Rat(a - b)),
            (Repr::Res { value: a, p }, Repr::Res { value: b, .. }) => Scalar(Repr::Res {
                value: (a + p - b) % p,
                p: *p,
            }),
            _ => unreachable!(),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        self.check_same(rhs);
        match (&self.0, &rhs.0) {
            (Repr::Rat(a), Repr::Rat(b)) => Scalar(Repr::Rat(a * b)),
            (Repr::Res { value: a, p }, Repr::Res { value: b, .. }) => Scalar(Repr::Res {
                value: a * b % p,
                p: *p,
            }),
            _ => unreachable!(),
        }
    }
}

/// Panics on division by zero, like integer division.
impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &'a Scalar) -> Scalar {
        let inv = rhs.inv().expect("division by zero scalar");
        self * &inv
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match &self.0 {
            Repr::Rat(a) => Scalar(Repr::Rat(-a)),
            Repr::Res { value, p } => Scalar(Repr::Res {
                value: (p - value) % p,
                p: *p,
            }),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &'a Scalar) -> Scalar { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul, Div::div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Scalar {
    /// Absolute value for rationals; identity on residues.
    pub fn abs(&self) -> Scalar {
        match &self.0 {
            Repr::Rat(r) => Scalar(Repr::Rat(r.abs())),
            Repr::Res { .. } => self.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_two_and_composites() {
        assert!(FieldSpec::prime(2).is_err());
        assert!(FieldSpec::prime(9).is_err());
        assert!(FieldSpec::prime(1).is_err());
        assert!(FieldSpec::prime(13).is_ok());
    }

    #[test]
    fn rationals_stay_normalized() {
        let q = FieldSpec::RATIONAL;
        let a = q.parse("2/4").unwrap();
        let b = q.parse("-1/-2").unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_string(), "1/2");
        let c = &a + &q.parse("1/3").unwrap();
        assert_eq!(c.to_string(), "5/6");
        assert_eq!(q.parse("6/-3").unwrap().to_string(), "-2");
        assert!(q.parse("1/0").is_err());
        let big = q.parse("123456789012345678901234567891/2").unwrap();
        assert_eq!(big.to_string(), "123456789012345678901234567891/2");
    }

    #[test]
    fn residue_arithmetic() {
        let f = FieldSpec::prime(7).unwrap();
        let two = f.from_i64(2);
        assert_eq!((&two * &two.inv().unwrap()), f.one());
        assert_eq!(f.from_i64(-1).residue(), Some(6));
        assert_eq!(two.pow(3), f.one());
        assert!(f.parse("7").is_err());
        assert_eq!(f.parse("6").unwrap(), -f.one());
    }

    #[test]
    fn reduce_rational_mod_p() {
        let f = FieldSpec::prime(5).unwrap();
        let half = FieldSpec::RATIONAL.parse("1/2").unwrap();
        assert_eq!(half.reduce_into(f).unwrap().residue(), Some(3));
        let fifth = FieldSpec::RATIONAL.parse("1/5").unwrap();
        assert!(fifth.reduce_into(f).is_err());
    }

    #[test]
    #[should_panic(expected = "field mismatch")]
    fn mixed_fields_panic() {
        let _ = FieldSpec::RATIONAL.one() + FieldSpec::prime(3).unwrap().one();
    }
}
