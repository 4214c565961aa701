//! Involutive commutative semirings.
//!
//! A semiring `S` here is commutative and carries a conjugation `s ↦ s⁻` that
//! is a semiring homomorphism of order two. All shipped instances compute
//! exactly and keep their elements in canonical form, so `==` is the
//! mathematical equality.

mod gaussian;
mod gf9;
mod rational;

pub use gaussian::{GaussianRational, GaussianRationals};
pub use gf9::{mk_gf9, Gf9, Gf9Field};
pub use rational::{ParseRationalError, Rational, Rationals};

use alloc::format;
use alloc::vec::Vec;
use core::fmt::{Debug, Display};
use rand::{Rng, RngCore};

use crate::report::{Checker, Report};

/// A commutative semiring with a conjugation that is an involutive semiring
/// homomorphism.
///
/// Instances are values rather than bare types so that the same element type
/// can back differently behaved structures (tests inject broken ones).
pub trait InvolutiveSemiring {
    type Elem: Clone + Eq + Ord + Debug + Display;

    /// Short identifier used in reports and JSON (`"gauss"`, `"gf9"`, ...).
    fn name(&self) -> &str;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn conj(&self, a: &Self::Elem) -> Self::Elem;

    /// Every element, when the carrier is finite.
    fn elements(&self) -> Option<Vec<Self::Elem>> {
        None
    }

    /// Draws an element; enumerable instances draw uniformly.
    fn sample(&self, rng: &mut dyn RngCore) -> Self::Elem {
        match self.elements() {
            Some(all) => all[rng.random_range(0..all.len())].clone(),
            None => self.one(),
        }
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn is_enumerable(&self) -> bool {
        self.elements().is_some()
    }

    /// Position of `a` in [`elements`](Self::elements).
    fn index_of(&self, a: &Self::Elem) -> Option<usize> {
        self.elements()?.iter().position(|e| e == a)
    }

    /// Whether the conjugation is the identity on every element.
    fn has_trivial_conj(&self) -> bool {
        false
    }

    /// Multiplicative inverse, if `a` is a unit. Enumerable instances search.
    fn inverse(&self, a: &Self::Elem) -> Option<Self::Elem> {
        let one = self.one();
        self.elements()?.into_iter().find(|e| self.mul(a, e) == one)
    }

    fn sum<'a, I>(&self, items: I) -> Self::Elem
    where
        I: IntoIterator<Item = &'a Self::Elem>,
        Self::Elem: 'a,
    {
        items.into_iter().fold(self.zero(), |acc, x| self.add(&acc, x))
    }
}

impl<S: InvolutiveSemiring + ?Sized> InvolutiveSemiring for &S {
    type Elem = S::Elem;
    fn name(&self) -> &str {
        (**self).name()
    }
    fn zero(&self) -> Self::Elem {
        (**self).zero()
    }
    fn one(&self) -> Self::Elem {
        (**self).one()
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        (**self).add(a, b)
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        (**self).mul(a, b)
    }
    fn conj(&self, a: &Self::Elem) -> Self::Elem {
        (**self).conj(a)
    }
    fn elements(&self) -> Option<Vec<Self::Elem>> {
        (**self).elements()
    }
    fn sample(&self, rng: &mut dyn RngCore) -> Self::Elem {
        (**self).sample(rng)
    }
    fn index_of(&self, a: &Self::Elem) -> Option<usize> {
        (**self).index_of(a)
    }
    fn has_trivial_conj(&self) -> bool {
        (**self).has_trivial_conj()
    }
    fn inverse(&self, a: &Self::Elem) -> Option<Self::Elem> {
        (**self).inverse(a)
    }
}

/// The Boolean semiring `({false, true}, ∨, ∧)` with identity conjugation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Booleans;

impl InvolutiveSemiring for Booleans {
    type Elem = bool;

    fn name(&self) -> &str {
        "bool"
    }
    fn zero(&self) -> bool {
        false
    }
    fn one(&self) -> bool {
        true
    }
    fn add(&self, a: &bool, b: &bool) -> bool {
        *a || *b
    }
    fn mul(&self, a: &bool, b: &bool) -> bool {
        *a && *b
    }
    fn conj(&self, a: &bool) -> bool {
        *a
    }
    fn elements(&self) -> Option<Vec<bool>> {
        Some(alloc::vec![false, true])
    }
    fn index_of(&self, a: &bool) -> Option<usize> {
        Some(*a as usize)
    }
    fn has_trivial_conj(&self) -> bool {
        true
    }
}

/// Checks every involutive-semiring law.
///
/// Enumerable instances are checked on all triples; otherwise `sample_budget`
/// seeded triples are drawn from `rng`.
pub fn law_check_involutive_semiring<S: InvolutiveSemiring>(
    s: &S,
    sample_budget: usize,
    rng: &mut dyn RngCore,
) -> Report {
    let instance = match s.elements() {
        Some(_) => format!("{}-exhaustive", s.name()),
        None => format!("{}-sampled", s.name()),
    };
    let mut c = Checker::new("semiring", instance);
    let laws = SemiringLawIds::register(&mut c);

    let zero = s.zero();
    let one = s.one();
    c.check("conj_zero", s.conj(&zero) == zero, || format!("conj(0) = {}", s.conj(&zero)));
    c.check("conj_one", s.conj(&one) == one, || format!("s=1: conj(1) = {}", s.conj(&one)));

    match s.elements() {
        Some(all) => {
            for a in &all {
                for b in &all {
                    for d in &all {
                        check_triple(s, &mut c, &laws, a, b, d);
                    }
                }
            }
        }
        None => {
            for _ in 0..sample_budget.max(1) {
                let a = s.sample(rng);
                let b = s.sample(rng);
                let d = s.sample(rng);
                check_triple(s, &mut c, &laws, &a, &b, &d);
            }
        }
    }
    c.finish()
}

struct SemiringLawIds {
    add_assoc: crate::report::LawId,
    add_comm: crate::report::LawId,
    add_unit: crate::report::LawId,
    mul_assoc: crate::report::LawId,
    mul_comm: crate::report::LawId,
    mul_unit: crate::report::LawId,
    distrib: crate::report::LawId,
    annihilate: crate::report::LawId,
    involution: crate::report::LawId,
    conj_add: crate::report::LawId,
    conj_mul: crate::report::LawId,
}

impl SemiringLawIds {
    fn register(c: &mut Checker) -> Self {
        Self {
            add_assoc: c.law("add_assoc"),
            add_comm: c.law("add_comm"),
            add_unit: c.law("add_unit"),
            mul_assoc: c.law("mul_assoc"),
            mul_comm: c.law("mul_comm"),
            mul_unit: c.law("mul_unit"),
            distrib: c.law("distributive"),
            annihilate: c.law("zero_annihilates"),
            involution: c.law("conj_involution"),
            conj_add: c.law("conj_additive"),
            conj_mul: c.law("conj_multiplicative"),
        }
    }
}

fn check_triple<S: InvolutiveSemiring>(
    s: &S,
    c: &mut Checker,
    l: &SemiringLawIds,
    a: &S::Elem,
    b: &S::Elem,
    d: &S::Elem,
) {
    let zero = s.zero();
    let one = s.one();
    c.record(l.add_assoc, s.add(a, &s.add(b, d)) == s.add(&s.add(a, b), d), || {
        format!("s={a}, t={b}, r={d}")
    });
    c.record(l.add_comm, s.add(a, b) == s.add(b, a), || format!("s={a}, t={b}"));
    c.record(l.add_unit, s.add(a, &zero) == *a, || format!("s={a}"));
    c.record(l.mul_assoc, s.mul(a, &s.mul(b, d)) == s.mul(&s.mul(a, b), d), || {
        format!("s={a}, t={b}, r={d}")
    });
    c.record(l.mul_comm, s.mul(a, b) == s.mul(b, a), || format!("s={a}, t={b}"));
    c.record(l.mul_unit, s.mul(a, &one) == *a, || format!("s={a}"));
    c.record(l.distrib, s.mul(a, &s.add(b, d)) == s.add(&s.mul(a, b), &s.mul(a, d)), || {
        format!("s={a}, t={b}, r={d}")
    });
    c.record(l.annihilate, s.mul(a, &zero) == zero, || format!("s={a}"));
    c.record(l.involution, s.conj(&s.conj(a)) == *a, || format!("s={a}"));
    c.record(l.conj_add, s.conj(&s.add(a, b)) == s.add(&s.conj(a), &s.conj(b)), || {
        format!("s={a}, t={b}")
    });
    c.record(l.conj_mul, s.conj(&s.mul(a, b)) == s.mul(&s.conj(a), &s.conj(b)), || {
        format!("s={a}, t={b}")
    });
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng_from_seed;

    /// Conjugation sends 1 to 0; everything else is GF(9).
    struct BrokenOne;

    impl InvolutiveSemiring for BrokenOne {
        type Elem = Gf9;
        fn name(&self) -> &str {
            "broken"
        }
        fn zero(&self) -> Gf9 {
            Gf9Field.zero()
        }
        fn one(&self) -> Gf9 {
            Gf9Field.one()
        }
        fn add(&self, a: &Gf9, b: &Gf9) -> Gf9 {
            Gf9Field.add(a, b)
        }
        fn mul(&self, a: &Gf9, b: &Gf9) -> Gf9 {
            Gf9Field.mul(a, b)
        }
        fn conj(&self, a: &Gf9) -> Gf9 {
            if *a == Gf9Field.one() {
                Gf9Field.zero()
            } else {
                Gf9Field.conj(a)
            }
        }
        fn elements(&self) -> Option<Vec<Gf9>> {
            Gf9Field.elements()
        }
    }

    #[test]
    fn boolean_is_idempotent() {
        assert!(Booleans.add(&true, &true));
        assert!(Booleans.conj(&true));
        assert!(!Booleans.mul(&true, &false));
    }

    #[test]
    fn gf9_passes_exhaustively() {
        let r = law_check_involutive_semiring(&mk_gf9(), 1, &mut rng_from_seed(0));
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.law("mul_assoc").unwrap().checked, 729);
    }

    #[test]
    fn booleans_pass() {
        let r = law_check_involutive_semiring(&Booleans, 1, &mut rng_from_seed(0));
        assert!(r.passed());
        assert_eq!(r.law("distributive").unwrap().checked, 8);
    }

    #[test]
    fn gaussian_sampled_pass() {
        let r = law_check_involutive_semiring(&GaussianRationals, 200, &mut rng_from_seed(7));
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.law("conj_multiplicative").unwrap().checked, 200);
    }

    #[test]
    fn broken_conj_one_is_caught() {
        let r = law_check_involutive_semiring(&BrokenOne, 1, &mut rng_from_seed(0));
        assert!(!r.passed());
        let e = r.law("conj_one").unwrap();
        assert!(!e.verdict.is_pass());
        assert!(e.witness.as_deref().unwrap().starts_with("s=1"));
    }
}
