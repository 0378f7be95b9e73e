//! Exact field elements: arbitrary-precision rationals and prime-field residues.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The ground field of an algebra.
///
/// `Prime` can only be built through [`Field::prime`] (or deserialization,
/// which goes through the same check), so the modulus is always prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "FieldSpec", into = "FieldSpec")]
pub enum Field {
    Rational,
    Prime(u64),
}

/// Wire form of a [`Field`]: `{"type":"rational"}` or `{"type":"prime","p":7}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum FieldSpec {
    Rational,
    Prime { p: u64 },
}

impl TryFrom<FieldSpec> for Field {
    type Error = Error;

    fn try_from(spec: FieldSpec) -> Result<Self> {
        match spec {
            FieldSpec::Rational => Ok(Field::Rational),
            FieldSpec::Prime { p } => Field::prime(p),
        }
    }
}

impl From<Field> for FieldSpec {
    fn from(field: Field) -> Self {
        match field {
            Field::Rational => FieldSpec::Rational,
            Field::Prime(p) => FieldSpec::Prime { p },
        }
    }
}

impl Field {
    pub fn prime(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(Field::Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => *p,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => f.write_str("Q"),
            Field::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    /// `rational`, `Q`, or a prime modulus such as `7`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "rational" | "Q" | "q" => Ok(Field::Rational),
            _ => {
                let p = s
                    .strip_prefix("GF(")
                    .and_then(|r| r.strip_suffix(')'))
                    .unwrap_or(s)
                    .parse::<u64>()
                    .map_err(|_| Error::InvalidParameter(format!("unknown field {s:?}")))?;
                Field::prime(p)
            }
        }
    }
}

/// Deterministic Miller-Rabin, exact for every `u64`.
pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &w in &WITNESSES {
        if n.is_multiple_of(w) {
            return n == w;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'outer: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

fn reduce_bigint(n: &BigInt, p: u64) -> u64 {
    n.mod_floor(&BigInt::from(p)).to_u64().expect("residue fits in u64")
}

/// An exact element of a [`Field`].
///
/// Rationals are always normalized (positive denominator, lowest terms).
/// Arithmetic between scalars of different fields is a logic error and
/// panics; values entering the library through parsing or constructors are
/// checked before they get here.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Prime { value: u64, p: u64 },
}

impl Scalar {
    pub fn zero(field: Field) -> Self {
        match field {
            Field::Rational => Scalar::Rational(BigRational::zero()),
            Field::Prime(p) => Scalar::Prime { value: 0, p },
        }
    }

    pub fn one(field: Field) -> Self {
        Self::from_i64(field, 1)
    }

    pub fn from_i64(field: Field, n: i64) -> Self {
        match field {
            Field::Rational => Scalar::Rational(BigRational::from_integer(n.into())),
            Field::Prime(p) => Scalar::Prime {
                value: reduce_bigint(&BigInt::from(n), p),
                p,
            },
        }
    }

    /// Maps a rational number into `field`; fails when the denominator
    /// vanishes modulo the characteristic.
    pub fn from_rational(field: Field, q: &BigRational) -> Result<Self> {
        match field {
            Field::Rational => Ok(Scalar::Rational(q.clone())),
            Field::Prime(p) => {
                let num = reduce_bigint(q.numer(), p);
                let den = reduce_bigint(q.denom(), p);
                if den == 0 {
                    return Err(Error::NotInField {
                        value: q.to_string(),
                        field,
                    });
                }
                let inv = pow_mod(den, p - 2, p);
                Ok(Scalar::Prime {
                    value: mul_mod(num, inv, p),
                    p,
                })
            }
        }
    }

    /// Parses `[+-]digits[/digits]` into `field`.
    pub fn parse(field: Field, text: &str) -> Result<Self> {
        Self::from_rational(field, &parse_rational(text)?)
    }

    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Prime { p, .. } => Field::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Prime { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Prime { value, .. } => *value == 1,
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Prime { value, p } => Scalar::Prime {
                value: pow_mod(*value, p - 2, *p),
                p: *p,
            },
        })
    }

    pub fn div(&self, other: &Scalar) -> Option<Self> {
        other.inv().map(|inv| self * &inv)
    }

    /// The rational value, if this is a rational scalar.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(q) => Some(q),
            Scalar::Prime { .. } => None,
        }
    }
}

/// Parses the scalar text syntax into a field-free rational.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let malformed = || Error::MalformedScalar(text.to_string());
    let s = text.trim();
    let (negative, rest) = match s.as_bytes().first() {
        Some(b'-') => (true, &s[1..]),
        Some(b'+') => (false, &s[1..]),
        _ => (false, s),
    };
    let (num, den) = match rest.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (rest, None),
    };
    let digits = |t: &str| -> Result<BigInt> {
        if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
            return Err(malformed());
        }
        t.parse::<BigInt>().map_err(|_| malformed())
    };
    let mut num = digits(num)?;
    if negative {
        num = -num;
    }
    let den = match den {
        Some(d) => digits(d)?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(malformed());
    }
    Ok(BigRational::new(num, den))
}

fn same_prime(a: u64, b: u64) -> u64 {
    assert_eq!(a, b, "arithmetic between different prime fields");
    a
}

impl Add for &Scalar {
    type Output = Scalar;

    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Prime { value: a, p }, Scalar::Prime { value: b, p: q }) => {
                let p = same_prime(*p, *q);
                Scalar::Prime {
                    value: ((*a as u128 + *b as u128) % p as u128) as u64,
                    p,
                }
            }
            _ => panic!("arithmetic between scalars of different fields"),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;

    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;

    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Prime { value: a, p }, Scalar::Prime { value: b, p: q }) => {
                let p = same_prime(*p, *q);
                Scalar::Prime {
                    value: mul_mod(*a, *b, p),
                    p,
                }
            }
            _ => panic!("arithmetic between scalars of different fields"),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Prime { value, p } => Scalar::Prime {
                value: if *value == 0 { 0 } else { p - value },
                p: *p,
            },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        -&self
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) if q.denom().is_one() => write!(f, "{}", q.numer()),
            Scalar::Rational(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            Scalar::Prime { value, .. } => write!(f, "{value}"),
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Scalar {
        Scalar::parse(Field::Rational, s).unwrap()
    }

    #[test]
    fn parses_signed_fractions() {
        assert_eq!(q("-2/3").to_string(), "-2/3");
        assert_eq!(q("+5").to_string(), "5");
        assert_eq!(q("4/6").to_string(), "2/3");
        assert_eq!(q("0/7"), Scalar::zero(Field::Rational));
        assert_eq!(q(" 3 ").to_string(), "3");
    }

    #[test]
    fn rejects_malformed_scalars() {
        for bad in ["", "-", "1/0", "1/-2", "1.5", "a", "1//2", "--1", "1/", "/2", "1 /2"] {
            assert!(
                matches!(Scalar::parse(Field::Rational, bad), Err(Error::MalformedScalar(_))),
                "{bad:?} should be rejected"
            );
        }
    }

    #[test]
    fn prime_field_reduces_rational_syntax() {
        let f7 = Field::prime(7).unwrap();
        assert_eq!(Scalar::parse(f7, "-1").unwrap().to_string(), "6");
        assert_eq!(Scalar::parse(f7, "1/2").unwrap().to_string(), "4");
        assert_eq!(Scalar::parse(f7, "15").unwrap().to_string(), "1");
        assert!(matches!(Scalar::parse(f7, "1/14"), Err(Error::NotInField { .. })));
    }

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..60).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]);
        assert!(is_prime(18_446_744_073_709_551_557));
        assert!(!is_prime(3_215_031_751));
        assert!(matches!(Field::prime(1), Err(Error::NotPrime(1))));
        assert!(matches!(Field::prime(91), Err(Error::NotPrime(91))));
    }

    #[test]
    fn prime_inverse() {
        let f = Field::prime(101).unwrap();
        for n in 1..101 {
            let a = Scalar::from_i64(f, n);
            assert!((&a * &a.inv().unwrap()).is_one());
        }
        assert!(Scalar::zero(f).inv().is_none());
    }

    #[test]
    fn field_json_forms() {
        let f: Field = serde_json::from_str(r#"{"type":"prime","p":5}"#).unwrap();
        assert_eq!(f, Field::Prime(5));
        assert!(serde_json::from_str::<Field>(r#"{"type":"prime","p":6}"#).is_err());
        assert_eq!(
            serde_json::to_string(&Field::Rational).unwrap(),
            r#"{"type":"rational"}"#
        );
        assert_eq!("GF(3)".parse::<Field>().unwrap(), Field::Prime(3));
        assert_eq!("rational".parse::<Field>().unwrap(), Field::Rational);
    }
}
