//! Exhaustive checks of the free involutive monoid and its universal property.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use super::{all_words, Alphabet, InvolutiveMonoid, Mode, Sign, SignedWord, WordError};
use crate::report::{Checker, Report};

/// Checks both involutions on every word of length `≤ max_len`.
///
/// Verifies the explicit index formulas, that each is an involution fixing
/// the unit, and the mode law on every pair whose concatenation fits the
/// bound.
pub fn check_free_involutions(alphabet_size: usize, max_len: usize) -> Report {
    let alphabet = Alphabet::standard(alphabet_size);
    let words = all_words(&alphabet, max_len);
    let mut c = Checker::new("words", format!("free-{alphabet_size}-len{max_len}"));
    for mode in [Mode::Reversing, Mode::NonReversing] {
        let formula = c.law(&format!("{mode}/formula"));
        let invol = c.law(&format!("{mode}/involution"));
        let unit = c.law(&format!("{mode}/unit_fixed"));
        let square = c.law(&format!("{mode}/mode_law"));
        let u = SignedWord::unit(&alphabet);
        c.record(unit, u.involve(mode) == u, || format!("{:?}", u.involve(mode)));
        for w in &words {
            let letters = w.raw_letters();
            let n = letters.len();
            // ⟨(−b₁,v₁),…⟩ or ⟨(−bₙ,vₙ),…,(−b₁,v₁)⟩, position by position
            let expected: Vec<(Sign, usize)> = (0..n)
                .map(|k| {
                    let src = match mode {
                        Mode::NonReversing => k,
                        Mode::Reversing => n - 1 - k,
                    };
                    (letters[src].0.negate(), letters[src].1)
                })
                .collect();
            let got = w.involve(mode);
            c.record(formula, got.raw_letters() == expected.as_slice(), || format!("w={w:?}"));
            c.record(invol, got.involve(mode) == *w, || format!("w={w:?}"));
            for v in &words {
                if w.len() + v.len() > max_len {
                    continue;
                }
                let wv = w.concat(v).expect("same alphabet");
                let rhs = match mode {
                    Mode::Reversing => v.involve(mode).concat(&w.involve(mode)),
                    Mode::NonReversing => w.involve(mode).concat(&v.involve(mode)),
                }
                .expect("same alphabet");
                c.record(square, wv.involve(mode) == rhs, || format!("w1={w:?}, w2={v:?}"));
            }
        }
    }
    c.finish()
}

/// Verifies the universal property of the free involutive monoid on
/// `alphabet_size` generators with respect to an enumerable target.
///
/// For every map `f: V → M` the extension `f̂` must preserve unit,
/// multiplication and involution on all words up to `max_len`, and satisfy
/// `f̂ ∘ η = f`. Uniqueness is checked by comparing `f̂` against the value
/// forced on each word by the homomorphism laws alone: a generator `v` must go
/// to `f(v)`, its involute to `f(v)⁻`, and a word to the product of its halves.
pub fn word_universal_check<M: InvolutiveMonoid>(
    alphabet_size: usize,
    target: &M,
    mode: Mode,
    max_len: usize,
) -> Result<Report, WordError> {
    word_universal_check_with(alphabet_size, target, mode, max_len, |m, f, w| {
        standard_extension(m, f, w)
    })
}

fn standard_extension<M: InvolutiveMonoid>(m: &M, f: &[M::Elem], w: &SignedWord) -> M::Elem {
    w.raw_letters().iter().fold(m.unit(), |acc, &(b, v)| {
        let x = match b {
            Sign::Plus => f[v].clone(),
            Sign::Minus => m.involve(&f[v]),
        };
        m.mul(&acc, &x)
    })
}

/// Like [`word_universal_check`], but with a caller-supplied extension
/// `ext(M, f, w)`; `f` is indexed by symbol position.
pub fn word_universal_check_with<M, E>(
    alphabet_size: usize,
    target: &M,
    mode: Mode,
    max_len: usize,
    ext: E,
) -> Result<Report, WordError>
where
    M: InvolutiveMonoid,
    E: Fn(&M, &[M::Elem], &SignedWord) -> M::Elem,
{
    let elements = target.elements().ok_or(WordError::NotEnumerable)?;
    if !target.supports(mode) {
        return Err(WordError::ModeMismatch(mode));
    }
    let alphabet = Alphabet::standard(alphabet_size);
    let words = all_words(&alphabet, max_len);
    let mut c = Checker::new("words", format!("universal-{alphabet_size}-{mode}-len{max_len}"));
    let unit_law = c.law("hom_unit");
    let eta_law = c.law("extends_f");
    let mul_law = c.law("hom_mul");
    let inv_law = c.law("hom_involution");
    let unique_law = c.law("uniqueness");

    let index: BTreeMap<&[(Sign, usize)], usize> =
        words.iter().enumerate().map(|(i, w)| (w.raw_letters(), i)).collect();
    let maps = all_maps(elements.len(), alphabet_size);
    for choice in maps {
        let f: Vec<M::Elem> = choice.iter().map(|&i| elements[i].clone()).collect();
        let values: Vec<M::Elem> = words.iter().map(|w| ext(target, &f, w)).collect();
        let value_of = |w: &SignedWord| -> M::Elem {
            match index.get(w.raw_letters()) {
                Some(&i) => values[i].clone(),
                None => ext(target, &f, w),
            }
        };
        c.record(unit_law, values[0] == target.unit(), || format!("f={f:?}: f̂(1) = {:?}", values[0]));
        for v in 0..alphabet_size {
            let eta = SignedWord::eta(&alphabet, alphabet.symbol(v)).expect("standard symbol");
            let got = value_of(&eta);
            c.record(eta_law, got == f[v], || format!("f={f:?}, v={}: f̂(η v) = {got:?}", alphabet.symbol(v)));
        }
        for (i, w) in words.iter().enumerate() {
            let invw = w.involve(mode);
            let lhs = value_of(&invw);
            let rhs = target.involve(&values[i]);
            c.record(inv_law, lhs == rhs, || format!("f={f:?}, w={w:?}: {lhs:?} ≠ {rhs:?}"));

            let forced = forced_value(target, &f, w.raw_letters());
            c.record(unique_law, values[i] == forced, || {
                format!("f={f:?}, w={w:?}: f̂(w) = {:?}, forced {forced:?}", values[i])
            });

            for (j, v) in words.iter().enumerate() {
                if w.len() + v.len() > max_len {
                    continue;
                }
                let wv = w.concat(v).expect("same alphabet");
                let lhs = value_of(&wv);
                let rhs = target.mul(&values[i], &values[j]);
                c.record(mul_law, lhs == rhs, || format!("f={f:?}, w1={w:?}, w2={v:?}"));
            }
        }
    }
    Ok(c.finish())
}

/// Value any homomorphism extending `f` must take, by balanced splitting.
fn forced_value<M: InvolutiveMonoid>(m: &M, f: &[M::Elem], letters: &[(Sign, usize)]) -> M::Elem {
    match letters {
        [] => m.unit(),
        [(Sign::Plus, v)] => f[*v].clone(),
        [(Sign::Minus, v)] => m.involve(&f[*v]),
        _ => {
            let mid = letters.len() / 2;
            m.mul(&forced_value(m, f, &letters[..mid]), &forced_value(m, f, &letters[mid..]))
        }
    }
}

/// Every function `{0..k} → {0..n}` as a value list.
fn all_maps(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = alloc::vec![Vec::new()];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..n).map(move |x| {
                    let mut p = prefix.clone();
                    p.push(x);
                    p
                })
            })
            .collect();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::mk_gf9;
    use crate::words::{MultiplicativeMonoid, TableMonoid};

    #[test]
    fn free_involutions_len3() {
        let r = check_free_involutions(2, 3);
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn z2_both_modes() {
        let g = TableMonoid::z2_group();
        for mode in [Mode::Reversing, Mode::NonReversing] {
            let r = word_universal_check(1, &g, mode, 4).unwrap();
            assert!(r.passed(), "{r:?}");
        }
    }

    #[test]
    fn s3_reversing_only() {
        let g = TableMonoid::s3_group();
        let r = word_universal_check(2, &g, Mode::Reversing, 3).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(
            word_universal_check(2, &g, Mode::NonReversing, 3).unwrap_err(),
            WordError::ModeMismatch(Mode::NonReversing)
        );
    }

    #[test]
    fn gf9_multiplicative_nonreversing() {
        let m = MultiplicativeMonoid(mk_gf9());
        let r = word_universal_check(2, &m, Mode::NonReversing, 3).unwrap();
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn sign_skipping_extension_is_rejected() {
        let m = MultiplicativeMonoid(mk_gf9());
        let r = word_universal_check_with(1, &m, Mode::NonReversing, 2, |m, f, w| {
            w.raw_letters().iter().fold(m.unit(), |acc, &(_, v)| m.mul(&acc, &f[v]))
        })
        .unwrap();
        assert!(!r.passed());
        assert!(!r.law("hom_involution").unwrap().verdict.is_pass());
        assert!(!r.law("uniqueness").unwrap().verdict.is_pass());
        assert!(r.law("uniqueness").unwrap().witness.is_some());
    }

    #[test]
    fn non_enumerable_target_is_an_error() {
        let r = word_universal_check(1, &crate::words::IntAdd, Mode::Reversing, 2);
        assert_eq!(r.unwrap_err(), WordError::NotEnumerable);
    }

    #[test]
    fn map_enumeration() {
        assert_eq!(all_maps(9, 2).len(), 81);
        assert_eq!(all_maps(2, 0).len(), 1);
    }
}
