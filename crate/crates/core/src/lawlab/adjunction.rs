//! Self-conjugates on finite sets and the free/cofree self-conjugate
//! adjunctions.

use alloc::format;
use alloc::vec::Vec;

use super::{FinMap, LawlabError, ScObject};
use crate::report::{Checker, Report};

/// Largest set for [`enumerate_selfconj`].
pub const MAX_SELFCONJ_SIZE: usize = 8;

/// Every involution of `{0..n}`, as maps. The smallest unmatched point is
/// either fixed or swapped with a later one.
pub fn involutions(n: usize) -> Vec<FinMap> {
    fn go(map: &mut Vec<usize>, out: &mut Vec<FinMap>) {
        let n = map.len();
        let Some(first) = map.iter().position(|&v| v == usize::MAX) else {
            out.push(FinMap::new(map.clone(), n).expect("in range"));
            return;
        };
        map[first] = first;
        go(map, out);
        for other in first + 1..n {
            if map[other] == usize::MAX {
                map[first] = other;
                map[other] = first;
                go(map, out);
                map[other] = usize::MAX;
            }
        }
        map[first] = usize::MAX;
    }
    let mut out = Vec::new();
    go(&mut alloc::vec![usize::MAX; n], &mut out);
    out
}

/// All self-conjugates on an `n`-element set with the trivial involution,
/// i.e. the self-inverse endomaps.
pub fn enumerate_selfconj(n: usize) -> Result<Vec<ScObject<usize, FinMap>>, LawlabError> {
    if n > MAX_SELFCONJ_SIZE {
        return Err(LawlabError::TooLarge { what: "set size", size: n, max: MAX_SELFCONJ_SIZE });
    }
    Ok(involutions(n).into_iter().map(|j| ScObject { object: n, j }).collect())
}

/// Number of involutions of an `n`-set by `a(n) = a(n−1) + (n−1)·a(n−2)`.
pub fn involution_count(n: usize) -> u64 {
    let (mut prev, mut cur) = (1u64, 1u64);
    for k in 2..=n as u64 {
        let next = cur + (k - 1) * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Counts from [`check_adjunction_34`], with its report.
#[derive(Clone, Debug)]
pub struct AdjunctionCounts {
    /// Maps of self-conjugates `(X+X, swap) → Y`.
    pub free_homs: usize,
    /// Maps of self-conjugates `Y → (X×X, swap)`.
    pub cofree_homs: usize,
    /// Plain maps `X → Y`.
    pub maps_into: usize,
    /// Plain maps `Y → X`.
    pub maps_from: usize,
    pub report: Report,
}

const MAX_X: usize = 3;
const MAX_Y: usize = 4;

/// The free self-conjugate `(X+X, [κ₂, κ₁])` and the cofree one
/// `(X×X, ⟨π₂, π₁⟩)` on a finite set `X`, verified by full enumeration
/// against a target self-conjugate `Y`.
///
/// A map of self-conjugates `f: X+X → Y` is determined by `f∘κ₁`, with
/// `f∘κ₂ = j∘f∘κ₁`; dually `h: Y → X×X` is determined by `π₁∘h`, with
/// `π₂∘h = π₁∘h∘j`. Both transposes are checked to be mutually inverse
/// bijections.
pub fn check_adjunction_34(x_size: usize, target: &ScObject<usize, FinMap>) -> Result<AdjunctionCounts, LawlabError> {
    if x_size > MAX_X {
        return Err(LawlabError::TooLarge { what: "|X|", size: x_size, max: MAX_X });
    }
    let y = target.object;
    if y > MAX_Y {
        return Err(LawlabError::TooLarge { what: "|Y|", size: y, max: MAX_Y });
    }
    let j = &target.j;
    let n = x_size;
    let mut c = Checker::new("adjunction34", format!("X{n}-Y{y}{:?}", j));
    c.check("target_valid", j.dom() == y && j.is_involution(), || format!("j = {j:?}"));

    // X + X: κ₁(i) = i, κ₂(i) = n + i
    let swap_sum = FinMap::new((0..2 * n).map(|p| (p + n) % (2 * n).max(1)).collect(), 2 * n).expect("in range");
    c.check("free_valid", swap_sum.is_involution(), || format!("{swap_sum:?}"));
    // X × X: (a, b) ↦ a·n + b
    let swap_prod = FinMap::new((0..n * n).map(|p| (p % n) * n + p / n).collect(), n * n).expect("in range");
    c.check("cofree_valid", swap_prod.is_involution(), || format!("{swap_prod:?}"));

    let kappa1 = FinMap::new((0..n).collect(), 2 * n).expect("in range");
    let free_sc = c.law("free_transpose_roundtrip");
    let free_ext = c.law("free_extension");
    let mut free_homs = 0;
    for f in FinMap::all(2 * n, y) {
        if f.after(&swap_sum) != j.after(&f) {
            continue;
        }
        free_homs += 1;
        let g = f.after(&kappa1);
        let back = copair(&g, &j.after(&g));
        c.record(free_sc, back == f, || format!("f={f:?}"));
    }
    let maps_into = FinMap::all(n, y).len();
    for g in FinMap::all(n, y) {
        let f = copair(&g, &j.after(&g));
        let ok = f.after(&swap_sum) == j.after(&f) && f.after(&kappa1) == g;
        c.record(free_ext, ok, || format!("g={g:?}"));
    }
    c.check("free_count", free_homs == maps_into, || format!("{free_homs} maps of self-conjugates, {maps_into} maps"));

    let pi1 = FinMap::new((0..n * n).map(|p| p / n).collect(), n).expect("in range");
    let cofree_sc = c.law("cofree_transpose_roundtrip");
    let cofree_ext = c.law("cofree_extension");
    let mut cofree_homs = 0;
    for h in FinMap::all(y, n * n) {
        if h.after(j) != swap_prod.after(&h) {
            continue;
        }
        cofree_homs += 1;
        let g = pi1.after(&h);
        let back = pair(&g, &g.after(j), n);
        c.record(cofree_sc, back == h, || format!("h={h:?}"));
    }
    let maps_from = FinMap::all(y, n).len();
    for g in FinMap::all(y, n) {
        let h = pair(&g, &g.after(j), n);
        let ok = h.after(j) == swap_prod.after(&h) && pi1.after(&h) == g;
        c.record(cofree_ext, ok, || format!("g={g:?}"));
    }
    c.check("cofree_count", cofree_homs == maps_from, || format!("{cofree_homs} maps of self-conjugates, {maps_from} maps"));

    Ok(AdjunctionCounts { free_homs, cofree_homs, maps_into, maps_from, report: c.finish() })
}

/// `[f, g]: X + X → Y`.
fn copair(f: &FinMap, g: &FinMap) -> FinMap {
    FinMap::new(f.map().iter().chain(g.map()).copied().collect(), f.cod()).expect("in range")
}

/// `⟨f, g⟩: Y → X × X`.
fn pair(f: &FinMap, g: &FinMap, n: usize) -> FinMap {
    FinMap::new(f.map().iter().zip(g.map()).map(|(&a, &b)| a * n + b).collect(), n * n).expect("in range")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn involution_counts_match_recursion() {
        let expected = [1u64, 1, 2, 4, 10, 26, 76, 232, 764];
        for n in 0..=8 {
            assert_eq!(involutions(n).len() as u64, expected[n], "n={n}");
            assert_eq!(involution_count(n), expected[n]);
        }
        assert!(enumerate_selfconj(9).is_err());
        assert!(involutions(4).iter().all(FinMap::is_involution));
    }

    #[test]
    fn adjunction_examples() {
        let swap = ScObject { object: 2, j: FinMap::new(alloc::vec![1, 0], 2).unwrap() };
        let a = check_adjunction_34(1, &swap).unwrap();
        assert!(a.report.passed());
        assert_eq!((a.free_homs, a.maps_into), (2, 2));

        let point = ScObject { object: 1, j: FinMap::identity(1) };
        let a = check_adjunction_34(2, &point).unwrap();
        assert_eq!((a.free_homs, a.maps_into, a.cofree_homs, a.maps_from), (1, 1, 2, 2));

        let t01 = ScObject { object: 3, j: FinMap::new(alloc::vec![1, 0, 2], 3).unwrap() };
        let a = check_adjunction_34(2, &t01).unwrap();
        assert!(a.report.passed());
        assert_eq!((a.free_homs, a.maps_into), (9, 9));
        assert_eq!((a.cofree_homs, a.maps_from), (8, 8));

        assert!(check_adjunction_34(4, &point).is_err());
    }
}
