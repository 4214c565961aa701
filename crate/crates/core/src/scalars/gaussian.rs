use core::fmt;

use rand::RngCore;

use super::{InvolutiveSemiring, Rational, Rationals};

/// `re + i·im` with rational parts.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        Self { re, im }
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        Self::new(Rational::from_integer(re), Rational::from_integer(im))
    }

    pub fn real(re: Rational) -> Self {
        Self::new(re, Rational::zero())
    }

    pub fn i() -> Self {
        Self::from_ints(0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

fn write_coeff(f: &mut fmt::Formatter<'_>, c: &Rational) -> fmt::Result {
    if *c == Rational::one() {
        Ok(())
    } else if *c == Rational::from_integer(-1) {
        f.write_str("-")
    } else if c.denom() == &num_bigint::BigInt::from(1) {
        write!(f, "{c}")
    } else {
        write!(f, "({c})")
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => {
                write_coeff(f, &self.im)?;
                f.write_str("i")
            }
            (false, false) => {
                write!(f, "{}", self.re)?;
                if self.im.is_negative() {
                    f.write_str("-")?;
                    write_coeff(f, &-&self.im)?;
                } else {
                    f.write_str("+")?;
                    write_coeff(f, &self.im)?;
                }
                f.write_str("i")
            }
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Gaussian rationals `ℚ(i)` with complex conjugation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GaussianRationals;

impl InvolutiveSemiring for GaussianRationals {
    type Elem = GaussianRational;

    fn name(&self) -> &str {
        "gauss"
    }
    fn zero(&self) -> GaussianRational {
        GaussianRational::default()
    }
    fn one(&self) -> GaussianRational {
        GaussianRational::from_ints(1, 0)
    }
    fn add(&self, a: &GaussianRational, b: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&a.re + &b.re, &a.im + &b.im)
    }
    fn mul(&self, a: &GaussianRational, b: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&(&a.re * &b.re) - &(&a.im * &b.im), &(&a.re * &b.im) + &(&a.im * &b.re))
    }
    fn conj(&self, a: &GaussianRational) -> GaussianRational {
        GaussianRational::new(a.re.clone(), -&a.im)
    }
    fn sample(&self, rng: &mut dyn RngCore) -> GaussianRational {
        GaussianRational::new(Rationals::sample_small(rng), Rationals::sample_small(rng))
    }
    fn is_zero(&self, a: &GaussianRational) -> bool {
        a.is_zero()
    }
    fn inverse(&self, a: &GaussianRational) -> Option<GaussianRational> {
        // a⁻¹ = conj(a) / |a|²
        let norm = &(&a.re * &a.re) + &(&a.im * &a.im);
        let r = norm.recip()?;
        Some(GaussianRational::new(&a.re * &r, -&(&a.im * &r)))
    }
}
