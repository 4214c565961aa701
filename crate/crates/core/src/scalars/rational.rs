use alloc::string::String;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, RngCore};

use super::InvolutiveSemiring;

/// An exact rational number, always in lowest terms with a positive
/// denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ParseRationalError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid rational literal {0:?}")]
    Invalid(String),
    #[error("rational literal {0:?} is not in canonical form")]
    NotCanonical(String),
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
}

impl Rational {
    /// Builds `numer/denom` in lowest terms.
    ///
    /// Panics if `denom` is zero.
    pub fn new(numer: i64, denom: i64) -> Self {
        Rational(BigRational::new(numer.into(), denom.into()))
    }

    pub fn from_integer(n: i64) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn from_bigints(numer: BigInt, denom: BigInt) -> Option<Self> {
        if denom.is_zero() {
            return None;
        }
        Some(Rational(BigRational::new(numer, denom)))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn recip(&self) -> Option<Self> {
        (!self.is_zero()).then(|| Rational(self.0.recip()))
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_digits(s: &str, whole: &str) -> Result<BigInt, ParseRationalError> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(ParseRationalError::Invalid(whole.into()));
    }
    if s.len() > 1 && s.starts_with('0') {
        return Err(ParseRationalError::NotCanonical(whole.into()));
    }
    s.parse::<BigInt>().map_err(|_| ParseRationalError::Invalid(whole.into()))
}

/// Parses the canonical text form `p` or `p/q`.
///
/// Non-canonical spellings (`2/4`, `3/1`, `-0`, `007`, `1/-2`) are rejected so
/// that parsing and printing are mutually inverse.
impl FromStr for Rational {
    type Err = ParseRationalError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        if text.is_empty() {
            return Err(ParseRationalError::Empty);
        }
        let (negative, body) = match text.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, text),
        };
        let (num_text, den_text) = match body.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (body, None),
        };
        let mut numer = parse_digits(num_text, text)?;
        if negative {
            if numer.is_zero() {
                return Err(ParseRationalError::NotCanonical(text.into()));
            }
            numer = -numer;
        }
        let denom = match den_text {
            None => BigInt::one(),
            Some(d) => {
                let d = parse_digits(d, text)?;
                if d.is_zero() {
                    return Err(ParseRationalError::ZeroDenominator(text.into()));
                }
                if d.is_one() || !numer.gcd(&d).is_one() {
                    return Err(ParseRationalError::NotCanonical(text.into()));
                }
                d
            }
        };
        Ok(Rational(BigRational::new_raw(numer, denom)))
    }
}

impl Add for &Rational {
    type Output = Rational;
    fn add(self, rhs: &Rational) -> Rational {
        Rational(&self.0 + &rhs.0)
    }
}

impl Sub for &Rational {
    type Output = Rational;
    fn sub(self, rhs: &Rational) -> Rational {
        Rational(&self.0 - &rhs.0)
    }
}

impl Mul for &Rational {
    type Output = Rational;
    fn mul(self, rhs: &Rational) -> Rational {
        Rational(&self.0 * &rhs.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

/// The rationals with the identity conjugation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Rationals {
    pub(crate) fn sample_small(rng: &mut dyn RngCore) -> Rational {
        let numer = rng.random_range(-6i64..=6);
        let denom = rng.random_range(1i64..=4);
        Rational::new(numer, denom)
    }
}

impl InvolutiveSemiring for Rationals {
    type Elem = Rational;

    fn name(&self) -> &str {
        "rat"
    }
    fn zero(&self) -> Rational {
        Rational::zero()
    }
    fn one(&self) -> Rational {
        Rational::one()
    }
    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }
    fn conj(&self, a: &Rational) -> Rational {
        a.clone()
    }
    fn sample(&self, rng: &mut dyn RngCore) -> Rational {
        Self::sample_small(rng)
    }
    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }
    fn has_trivial_conj(&self) -> bool {
        true
    }
    fn inverse(&self, a: &Rational) -> Option<Rational> {
        a.recip()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use proptest::prelude::*;

    #[test]
    fn adds_fractions() {
        assert_eq!(&Rational::new(1, 2) + &Rational::new(1, 3), Rational::new(5, 6));
        assert_eq!(Rational::new(5, 6).to_string(), "5/6");
        assert_eq!(Rational::new(4, 2).to_string(), "2");
        assert_eq!(Rational::new(1, -2).to_string(), "-1/2");
    }

    #[test]
    fn parse_rejects_non_canonical() {
        for bad in ["2/4", "3/1", "-0", "007", "1/-2", "1/0", "", "x", "1/", "+1", "0/5"] {
            assert!(bad.parse::<Rational>().is_err(), "{bad}");
        }
        assert_eq!("-7/3".parse::<Rational>().unwrap(), Rational::new(-7, 3));
        assert_eq!("0".parse::<Rational>().unwrap(), Rational::zero());
    }

    #[test]
    fn arbitrary_precision() {
        let big = Rational::from_integer(i64::MAX);
        let sq = &big * &big;
        assert_eq!(sq.to_string(), "85070591730234615847396907784232501249");
    }

    proptest! {
        #[test]
        fn print_parse_roundtrip(n in -1000i64..1000, d in 1i64..1000) {
            let r = Rational::new(n, d);
            let text = r.to_string();
            let back: Rational = text.parse().unwrap();
            prop_assert_eq!(&back, &r);
            prop_assert_eq!(back.to_string(), text);
        }
    }
}
