//! Exact scalars over the rationals or a prime field GF(p).
//!
//! Every algebra fixes one ground field at construction time. Scalars carry
//! their field so invariants can be checked, but mixing fields in arithmetic
//! is a programming error and panics.

use crate::error::Error;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Largest supported prime modulus. Residues stay below 2^31 so products of
/// two residues fit in a u64 without overflow.
pub const MAX_MODULUS: u64 = 1 << 31;

/// Ground field descriptor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    Prime(u64),
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl Field {
    /// Builds the prime field GF(p), rejecting composite or oversized moduli.
    pub fn prime(p: u64) -> Result<Field, Error> {
        if p >= MAX_MODULUS {
            return Err(Error::ModulusTooLarge(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Field::Prime(p))
    }

    pub fn zero(&self) -> Scalar {
        self.integer(0)
    }

    pub fn one(&self) -> Scalar {
        self.integer(1)
    }

    /// The image of the integer `k` in this field.
    pub fn integer(&self, k: i64) -> Scalar {
        match *self {
            Field::Rational => Scalar::Rational(BigRational::from(BigInt::from(k))),
            Field::Prime(p) => {
                let r = k.rem_euclid(p as i64) as u64;
                Scalar::Modular { value: r, modulus: p }
            }
        }
    }

    /// Parses a scalar literal. Rationals accept `p`, `-p`, and `p/q` in
    /// lowest or non-lowest terms; GF(p) accepts the same shapes and reduces
    /// modulo p (the denominator must be invertible).
    pub fn parse(&self, text: &str) -> Result<Scalar, Error> {
        let bad = || Error::ScalarParse {
            text: text.to_string(),
            field: self.to_string(),
        };
        let text = text.trim();
        match *self {
            Field::Rational => {
                let r: BigRational = text.parse().map_err(|_| bad())?;
                Ok(Scalar::Rational(r))
            }
            Field::Prime(p) => {
                let (num_str, den_str) = match text.split_once('/') {
                    Some((n, d)) => (n, Some(d)),
                    None => (text, None),
                };
                let num: i64 = num_str.parse().map_err(|_| bad())?;
                let mut s = self.integer(num);
                if let Some(d) = den_str {
                    let den: i64 = d.parse().map_err(|_| bad())?;
                    let den = self.integer(den);
                    let inv = den.inverse().ok_or_else(bad)?;
                    s = &s * &inv;
                }
                let _ = p;
                Ok(s)
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

/// An exact field element. Rationals are kept in lowest terms with a positive
/// denominator; GF(p) residues are kept in `0..p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Modular { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Modular { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Modular { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Modular { value, .. } => *value == 1,
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inverse(&self) -> Option<Scalar> {
        match self {
            Scalar::Rational(r) => {
                if r.is_zero() {
                    None
                } else {
                    Some(Scalar::Rational(r.recip()))
                }
            }
            Scalar::Modular { value, modulus } => {
                if *value == 0 {
                    None
                } else {
                    Some(Scalar::Modular {
                        value: mod_pow(*value, modulus - 2, *modulus),
                        modulus: *modulus,
                    })
                }
            }
        }
    }

    /// Rational constructor for test and construction code.
    pub fn ratio(num: i64, den: i64) -> Scalar {
        assert!(den != 0, "zero denominator");
        Scalar::Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// The GF(p) residue, for prime-field scalars only.
    pub fn residue(&self) -> Option<u64> {
        match self {
            Scalar::Rational(_) => None,
            Scalar::Modular { value, .. } => Some(*value),
        }
    }
}

fn mod_pow(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

fn check_fields(a: &Scalar, b: &Scalar) {
    assert!(
        a.field() == b.field(),
        "scalar arithmetic across fields: {} vs {}",
        a.field(),
        b.field()
    );
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        check_fields(self, rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Modular { value: a, modulus }, Scalar::Modular { value: b, .. }) => {
                Scalar::Modular {
                    value: (a + b) % modulus,
                    modulus: *modulus,
                }
            }
            _ => unreachable!(),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        check_fields(self, rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            (Scalar::Modular { value: a, modulus }, Scalar::Modular { value: b, .. }) => {
                Scalar::Modular {
                    value: (a + modulus - b) % modulus,
                    modulus: *modulus,
                }
            }
            _ => unreachable!(),
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        check_fields(self, rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Modular { value: a, modulus }, Scalar::Modular { value: b, .. }) => {
                Scalar::Modular {
                    value: a * b % modulus,
                    modulus: *modulus,
                }
            }
            _ => unreachable!(),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }
}

impl Scalar {
    /// Division; panics on a zero divisor.
    pub fn div(&self, rhs: &Scalar) -> Scalar {
        check_fields(self, rhs);
        let inv = rhs.inverse().expect("division by zero scalar");
        self * &inv
    }
}

/// Total order used only for deterministic output; comparing scalars from
/// different fields orders rationals first.
impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use std::cmp::Ordering;
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => a.cmp(b),
            (Scalar::Modular { value: a, .. }, Scalar::Modular { value: b, .. }) => a.cmp(b),
            (Scalar::Rational(_), Scalar::Modular { .. }) => Ordering::Less,
            (Scalar::Modular { .. }, Scalar::Rational(_)) => Ordering::Greater,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else if r.numer().is_negative() {
                    write!(f, "-{}/{}", r.numer().magnitude(), r.denom())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Modular { value, .. } => write!(f, "{value}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_parse_reduces_to_lowest_terms() {
        let f = Field::Rational;
        assert_eq!(f.parse("2/4").unwrap(), Scalar::ratio(1, 2));
        assert_eq!(f.parse("-3/6").unwrap(), Scalar::ratio(-1, 2));
        assert_eq!(f.parse("7").unwrap(), f.integer(7));
        assert!(f.parse("1/0").is_err());
        assert!(f.parse("x").is_err());
    }

    #[test]
    fn rational_display_omits_unit_denominator() {
        assert_eq!(Scalar::ratio(3, 4).to_string(), "3/4");
        assert_eq!(Scalar::ratio(-3, 4).to_string(), "-3/4");
        assert_eq!(Scalar::ratio(8, 4).to_string(), "2");
        assert_eq!(Scalar::ratio(0, 1).to_string(), "0");
    }

    #[test]
    fn display_parse_round_trip() {
        let f = Field::Rational;
        for s in ["0", "1", "-1", "3/4", "-22/7", "100"] {
            let v = f.parse(s).unwrap();
            assert_eq!(f.parse(&v.to_string()).unwrap(), v);
        }
        let g = Field::prime(5).unwrap();
        for s in ["0", "1", "2", "3", "4"] {
            let v = g.parse(s).unwrap();
            assert_eq!(v.to_string(), s);
        }
    }

    #[test]
    fn prime_field_reduces_and_inverts() {
        let g = Field::prime(3).unwrap();
        assert_eq!(g.parse("5").unwrap(), g.integer(2));
        assert_eq!(g.parse("-1").unwrap(), g.integer(2));
        // 1/2 = 2 over GF(3)
        assert_eq!(g.parse("1/2").unwrap(), g.integer(2));
        assert!(g.parse("1/3").is_err());
        let two = g.integer(2);
        assert_eq!(two.inverse().unwrap(), two);
        assert!(g.integer(0).inverse().is_none());
    }

    #[test]
    fn composite_or_huge_moduli_are_rejected() {
        assert!(matches!(Field::prime(6), Err(Error::NotPrime(6))));
        assert!(matches!(Field::prime(1), Err(Error::NotPrime(1))));
        assert!(matches!(
            Field::prime(1 << 32),
            Err(Error::ModulusTooLarge(_))
        ));
        assert!(Field::prime(2).is_ok());
        assert!(Field::prime(1_000_003).is_ok());
    }

    #[test]
    fn arithmetic_matches_field_semantics() {
        let g = Field::prime(5).unwrap();
        let a = g.integer(3);
        let b = g.integer(4);
        assert_eq!(&a + &b, g.integer(2));
        assert_eq!(&a - &b, g.integer(4));
        assert_eq!(&a * &b, g.integer(2));
        assert_eq!(-&a, g.integer(2));
        assert_eq!(a.div(&b), g.integer(2)); // 3 * 4^{-1} = 3 * 4 = 12 = 2

        let x = Scalar::ratio(1, 2);
        let y = Scalar::ratio(1, 3);
        assert_eq!(&x + &y, Scalar::ratio(5, 6));
        assert_eq!(&x * &y, Scalar::ratio(1, 6));
        assert_eq!(x.div(&y), Scalar::ratio(3, 2));
    }

    #[test]
    #[should_panic(expected = "scalar arithmetic across fields")]
    fn mixed_field_arithmetic_panics() {
        let _ = &Scalar::ratio(1, 2) + &Field::prime(3).unwrap().integer(1);
    }
}
