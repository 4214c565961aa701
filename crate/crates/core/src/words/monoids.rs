use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt::Debug;

use num_bigint::BigInt;

use super::{Alphabet, Mode, SignedWord};
use crate::scalars::InvolutiveSemiring;

/// A monoid with an involution `x ↦ x⁻` that fixes the unit.
pub trait InvolutiveMonoid {
    type Elem: Clone + Eq + Debug;

    fn unit(&self) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn involve(&self, a: &Self::Elem) -> Self::Elem;
    fn mode(&self) -> Mode;

    fn is_commutative(&self) -> bool {
        false
    }

    /// In a commutative monoid both involution laws coincide.
    fn supports(&self, mode: Mode) -> bool {
        self.is_commutative() || self.mode() == mode
    }

    fn elements(&self) -> Option<Vec<Self::Elem>> {
        None
    }
}

/// `(ℤ, +, 0)` with negation.
#[derive(Clone, Copy, Debug, Default)]
pub struct IntAdd;

impl InvolutiveMonoid for IntAdd {
    type Elem = BigInt;

    fn unit(&self) -> BigInt {
        BigInt::from(0)
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn involve(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn mode(&self) -> Mode {
        Mode::Reversing
    }
    fn is_commutative(&self) -> bool {
        true
    }
}

/// The multiplicative monoid of an involutive semiring, with conjugation.
#[derive(Clone, Copy, Debug, Default)]
pub struct MultiplicativeMonoid<S>(pub S);

impl<S: InvolutiveSemiring> InvolutiveMonoid for MultiplicativeMonoid<S> {
    type Elem = S::Elem;

    fn unit(&self) -> S::Elem {
        self.0.one()
    }
    fn mul(&self, a: &S::Elem, b: &S::Elem) -> S::Elem {
        self.0.mul(a, b)
    }
    fn involve(&self, a: &S::Elem) -> S::Elem {
        self.0.conj(a)
    }
    fn mode(&self) -> Mode {
        Mode::NonReversing
    }
    fn is_commutative(&self) -> bool {
        true
    }
    fn elements(&self) -> Option<Vec<S::Elem>> {
        self.0.elements()
    }
}

/// A finite monoid given by its Cayley table, with an involution table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableMonoid {
    table: Vec<Vec<usize>>,
    unit: usize,
    involution: Vec<usize>,
    mode: Mode,
}

impl TableMonoid {
    pub fn new(table: Vec<Vec<usize>>, unit: usize, involution: Vec<usize>, mode: Mode) -> Self {
        Self { table, unit, involution, mode }
    }

    /// A group (identity at index 0) with inversion as reversing involution.
    pub fn from_group_table(table: Vec<Vec<usize>>) -> Self {
        let n = table.len();
        let involution = (0..n).map(|g| (0..n).find(|&h| table[g][h] == 0).unwrap_or(g)).collect();
        Self::new(table, 0, involution, Mode::Reversing)
    }

    /// `{1, g}` with `g² = 1`.
    pub fn z2_group() -> Self {
        Self::from_group_table(cyclic_group_table(2))
    }

    pub fn s3_group() -> Self {
        Self::from_group_table(symmetric_group_table(3))
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }
}

impl InvolutiveMonoid for TableMonoid {
    type Elem = usize;

    fn unit(&self) -> usize {
        self.unit
    }
    fn mul(&self, a: &usize, b: &usize) -> usize {
        self.table[*a][*b]
    }
    fn involve(&self, a: &usize) -> usize {
        self.involution[*a]
    }
    fn mode(&self) -> Mode {
        self.mode
    }
    fn is_commutative(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.table[a][b] == self.table[b][a]))
    }
    fn elements(&self) -> Option<Vec<usize>> {
        Some((0..self.order()).collect())
    }
}

/// The free involutive monoid itself, seen as a target.
#[derive(Clone, Debug)]
pub struct FreeInvolutiveMonoid {
    pub alphabet: Arc<Alphabet>,
    pub mode: Mode,
}

impl InvolutiveMonoid for FreeInvolutiveMonoid {
    type Elem = SignedWord;

    fn unit(&self) -> SignedWord {
        SignedWord::unit(&self.alphabet)
    }
    fn mul(&self, a: &SignedWord, b: &SignedWord) -> SignedWord {
        let mut letters = a.raw_letters().to_vec();
        letters.extend_from_slice(b.raw_letters());
        SignedWord::from_indices(&self.alphabet, letters)
    }
    fn involve(&self, a: &SignedWord) -> SignedWord {
        a.involve(self.mode)
    }
    fn mode(&self) -> Mode {
        self.mode
    }
}

/// `ℤ/n` under addition, identity at index 0.
pub fn cyclic_group_table(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect()
}

/// The symmetric group on `n` points; permutations in lexicographic order,
/// so the identity is index 0, and `table[p][q]` is `p ∘ q`.
pub fn symmetric_group_table(n: usize) -> Vec<Vec<usize>> {
    let perms = permutations(n);
    let index = |p: &[usize]| perms.iter().position(|q| q.as_slice() == p).unwrap();
    perms
        .iter()
        .map(|p| {
            perms
                .iter()
                .map(|q| {
                    let composed: Vec<usize> = (0..n).map(|x| p[q[x]]).collect();
                    index(&composed)
                })
                .collect()
        })
        .collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return alloc::vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 0..n {
        for rest in permutations(n - 1) {
            let mut p = alloc::vec![first];
            p.extend(rest.into_iter().map(|x| if x >= first { x + 1 } else { x }));
            out.push(p);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3_is_noncommutative_group() {
        let g = TableMonoid::s3_group();
        assert_eq!(g.order(), 6);
        assert!(!g.is_commutative());
        for a in 0..6 {
            assert_eq!(g.mul(&a, &g.involve(&a)), 0);
            assert_eq!(g.involve(&g.involve(&a)), a);
        }
        assert!(g.supports(Mode::Reversing));
        assert!(!g.supports(Mode::NonReversing));
    }

    #[test]
    fn z2_supports_both_modes() {
        let g = TableMonoid::z2_group();
        assert!(g.is_commutative());
        assert_eq!(g.mul(&1, &1), 0);
        assert!(g.supports(Mode::NonReversing));
    }
}
