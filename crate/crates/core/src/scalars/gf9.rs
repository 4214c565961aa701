use alloc::vec::Vec;
use core::fmt;

use super::InvolutiveSemiring;

/// An element `re + i·im` of `GF(9) = (ℤ/3)[i]`, `i² = −1`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Gf9 {
    re: u8,
    im: u8,
}

impl Gf9 {
    /// Reduces both parts modulo 3.
    pub fn new(re: i64, im: i64) -> Self {
        Self { re: re.rem_euclid(3) as u8, im: im.rem_euclid(3) as u8 }
    }

    pub fn re(self) -> u8 {
        self.re
    }

    pub fn im(self) -> u8 {
        self.im
    }

    /// Index in `0..9`, `3·re + im`.
    pub fn index(self) -> usize {
        3 * self.re as usize + self.im as usize
    }

    pub fn from_index(i: usize) -> Self {
        Self { re: (i / 3 % 3) as u8, im: (i % 3) as u8 }
    }
}

impl fmt::Display for Gf9 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re, self.im) {
            (r, 0) => write!(f, "{r}"),
            (0, 1) => f.write_str("i"),
            (0, m) => write!(f, "{m}i"),
            (r, 1) => write!(f, "{r}+i"),
            (r, m) => write!(f, "{r}+{m}i"),
        }
    }
}

impl fmt::Debug for Gf9 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The field with nine elements; conjugation `a + ib ↦ a − ib` is the
/// Frobenius map.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Gf9Field;

pub fn mk_gf9() -> Gf9Field {
    Gf9Field
}

impl InvolutiveSemiring for Gf9Field {
    type Elem = Gf9;

    fn name(&self) -> &str {
        "gf9"
    }
    fn zero(&self) -> Gf9 {
        Gf9::new(0, 0)
    }
    fn one(&self) -> Gf9 {
        Gf9::new(1, 0)
    }
    fn add(&self, a: &Gf9, b: &Gf9) -> Gf9 {
        Gf9 { re: (a.re + b.re) % 3, im: (a.im + b.im) % 3 }
    }
    fn mul(&self, a: &Gf9, b: &Gf9) -> Gf9 {
        // (a + ib)(c + id) = (ac − bd) + i(ad + bc); −bd ≡ 2bd mod 3
        let re = a.re * b.re + 2 * a.im * b.im;
        let im = a.re * b.im + a.im * b.re;
        Gf9 { re: re % 3, im: im % 3 }
    }
    fn conj(&self, a: &Gf9) -> Gf9 {
        Gf9 { re: a.re, im: (3 - a.im) % 3 }
    }
    fn elements(&self) -> Option<Vec<Gf9>> {
        Some((0..9).map(Gf9::from_index).collect())
    }
    fn index_of(&self, a: &Gf9) -> Option<usize> {
        Some(a.index())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nine_elements() {
        assert_eq!(mk_gf9().elements().unwrap().len(), 9);
    }

    #[test]
    fn conj_of_one_plus_i() {
        assert_eq!(Gf9Field.conj(&Gf9::new(1, 1)), Gf9::new(1, 2));
    }

    #[test]
    fn square_matches_integer_oracle() {
        // oracle: expand over ℤ, then reduce mod 3
        let (a, b) = (1i64, 1i64);
        let (re, im) = (a * a - b * b, 2 * a * b);
        assert_eq!(Gf9Field.mul(&Gf9::new(1, 1), &Gf9::new(1, 1)), Gf9::new(re, im));
        assert_eq!(Gf9::new(re, im), Gf9::new(0, 2));
    }

    #[test]
    fn multiplication_matches_integer_oracle_everywhere() {
        let f = Gf9Field;
        for x in f.elements().unwrap() {
            for y in f.elements().unwrap() {
                let (a, b, c, d) = (x.re as i64, x.im as i64, y.re as i64, y.im as i64);
                assert_eq!(f.mul(&x, &y), Gf9::new(a * c - b * d, a * d + b * c));
            }
        }
    }

    #[test]
    fn conj_has_exactly_three_fixed_points() {
        let f = Gf9Field;
        let fixed: Vec<Gf9> = f.elements().unwrap().into_iter().filter(|x| f.conj(x) == *x).collect();
        assert_eq!(fixed, [Gf9::new(0, 0), Gf9::new(1, 0), Gf9::new(2, 0)]);
        for x in f.elements().unwrap() {
            assert_eq!(f.conj(&f.conj(&x)), x);
        }
    }
}
