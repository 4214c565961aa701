//! The involutive multiset monad `M_S` on sets.
//!
//! A multiset over `X` is a finitely supported function `X → S`, written as a
//! formal sum `s₁x₁ + … + sₖxₖ`. Entries with multiplicity zero are never
//! stored, so structural equality is equality of functions.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use rand::{Rng, RngCore};

use crate::report::{Checker, Report};
use crate::scalars::InvolutiveSemiring;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Multiset<K: Ord, E> {
    entries: BTreeMap<K, E>,
}

impl<K: Ord, E> Default for Multiset<K, E> {
    fn default() -> Self {
        Self { entries: BTreeMap::new() }
    }
}

impl<K: Ord + Clone, E: Clone> Multiset<K, E> {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Collects entries, adding the multiplicities of repeated keys and
    /// dropping keys whose total is zero.
    pub fn from_entries<S, I>(s: &S, entries: I) -> Self
    where
        S: InvolutiveSemiring<Elem = E>,
        I: IntoIterator<Item = (K, E)>,
    {
        let mut map: BTreeMap<K, E> = BTreeMap::new();
        for (k, v) in entries {
            match map.get_mut(&k) {
                Some(existing) => *existing = s.add(existing, &v),
                None => {
                    map.insert(k, v);
                }
            }
        }
        map.retain(|_, v| !s.is_zero(v));
        Self { entries: map }
    }

    pub fn get(&self, key: &K) -> Option<&E> {
        self.entries.get(key)
    }

    /// Multiplicity of `key`, zero when absent.
    pub fn coeff<S: InvolutiveSemiring<Elem = E>>(&self, s: &S, key: &K) -> E {
        self.entries.get(key).cloned().unwrap_or_else(|| s.zero())
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &E)> {
        self.entries.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &K> {
        self.entries.keys()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Pointwise sum.
    pub fn plus<S: InvolutiveSemiring<Elem = E>>(&self, s: &S, other: &Self) -> Self {
        Self::from_entries(s, self.iter().chain(other.iter()).map(|(k, v)| (k.clone(), v.clone())))
    }

    /// Multiplies every multiplicity by `c`.
    pub fn scale<S: InvolutiveSemiring<Elem = E>>(&self, s: &S, c: &E) -> Self {
        Self::from_entries(s, self.iter().map(|(k, v)| (k.clone(), s.mul(c, v))))
    }
}

impl<K: Ord + fmt::Debug, E: fmt::Display> fmt::Debug for Multiset<K, E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (k, v)) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{k:?}: {v}")?;
        }
        f.write_str("}")
    }
}

/// `x ↦ 1·x`.
pub fn eta<S: InvolutiveSemiring, K: Ord + Clone>(s: &S, x: K) -> Multiset<K, S::Elem> {
    Multiset::from_entries(s, [(x, s.one())])
}

/// Functor action: pushes multiplicities forward along `f`, adding collisions.
pub fn map<S, K, L, F>(s: &S, f: F, phi: &Multiset<K, S::Elem>) -> Multiset<L, S::Elem>
where
    S: InvolutiveSemiring,
    K: Ord + Clone,
    L: Ord + Clone,
    F: Fn(&K) -> L,
{
    Multiset::from_entries(s, phi.iter().map(|(k, v)| (f(k), v.clone())))
}

/// Monad multiplication, `μ(Σᵢ sᵢ·φᵢ)(x) = Σᵢ sᵢ·φᵢ(x)`.
pub fn mu<S, K>(s: &S, outer: &Multiset<Multiset<K, S::Elem>, S::Elem>) -> Multiset<K, S::Elem>
where
    S: InvolutiveSemiring,
    K: Ord + Clone,
{
    Multiset::from_entries(
        s,
        outer.iter().flat_map(|(inner, c)| inner.iter().map(move |(k, v)| (k.clone(), s.mul(c, v)))),
    )
}

/// The involution `ν(Σᵢ sᵢxᵢ) = Σᵢ sᵢ⁻xᵢ`.
pub fn nu<S: InvolutiveSemiring, K: Ord + Clone>(s: &S, phi: &Multiset<K, S::Elem>) -> Multiset<K, S::Elem> {
    Multiset::from_entries(s, phi.iter().map(|(k, v)| (k.clone(), s.conj(v))))
}

/// Double strength, `(φ, ψ) ↦ Σ_{x,y} φ(x)·ψ(y)·(x, y)`.
pub fn dst<S, K, L>(s: &S, phi: &Multiset<K, S::Elem>, psi: &Multiset<L, S::Elem>) -> Multiset<(K, L), S::Elem>
where
    S: InvolutiveSemiring,
    K: Ord + Clone,
    L: Ord + Clone,
{
    Multiset::from_entries(
        s,
        phi.iter()
            .flat_map(|(x, a)| psi.iter().map(move |(y, b)| ((x.clone(), y.clone()), s.mul(a, b)))),
    )
}

/// A candidate for the distributive law `ν`, generic in the key type.
pub trait MultisetConjugation<S: InvolutiveSemiring> {
    fn apply<K: Ord + Clone>(&self, s: &S, phi: &Multiset<K, S::Elem>) -> Multiset<K, S::Elem>;
}

/// The standard `ν`.
#[derive(Clone, Copy, Debug, Default)]
pub struct Nu;

impl<S: InvolutiveSemiring> MultisetConjugation<S> for Nu {
    fn apply<K: Ord + Clone>(&self, s: &S, phi: &Multiset<K, S::Elem>) -> Multiset<K, S::Elem> {
        nu(s, phi)
    }
}

/// Keys of the two- or three-point carrier used by the law checks.
type Point = char;

/// Monad, functor, strength and distributive-law checks for `M_S` with the
/// standard `ν`. See [`law_check_with`].
pub fn law_check<S: InvolutiveSemiring>(s: &S, sample_budget: usize, rng: &mut dyn RngCore) -> Report {
    law_check_with(s, &Nu, sample_budget, rng)
}

/// Checks the monad laws of `M_S` and the three distributive-law diagrams
/// (trivial involution on sets): `ν∘η = η`, `ν∘μ = μ∘ν∘M(ν)`, `ν∘ν = id`.
///
/// With an enumerable `S` the carrier is `{x, y}`: every multiset, every
/// second-level multiset with support at most two, and every endomap of the
/// carrier are checked. Third-level associativity is sampled. Otherwise all
/// cases are drawn from `rng` over `{x, y, z}`.
pub fn law_check_with<S, N>(s: &S, nu_impl: &N, sample_budget: usize, rng: &mut dyn RngCore) -> Report
where
    S: InvolutiveSemiring,
    N: MultisetConjugation<S>,
{
    let exhaustive = s.elements().is_some();
    let instance = if exhaustive { format!("{}-exhaustive", s.name()) } else { format!("{}-sampled", s.name()) };
    let mut c = Checker::new("multiset", instance);
    let budget = sample_budget.max(1);

    let points: Vec<Point> = if exhaustive { alloc::vec!['x', 'y'] } else { alloc::vec!['x', 'y', 'z'] };
    let level1: Vec<Multiset<Point, S::Elem>> = match s.elements() {
        Some(all) => all_multisets(s, &points, &all),
        None => (0..budget).map(|_| random_multiset(s, &points, 3, rng)).collect(),
    };

    // ν∘η = η
    for &x in &points {
        let lhs = nu_impl.apply(s, &eta(s, x));
        c.check("nu_eta", lhs == eta(s, x), || format!("x={x:?}: ν(η x) = {lhs:?}"));
    }

    let endomaps = all_endomaps(points.len());
    let unit_left = c.law("monad_unit_left");
    let unit_right = c.law("monad_unit_right");
    let nu_nu = c.law("nu_nu");
    let natural = c.law("nu_natural");
    let functor_id = c.law("functor_identity");
    let functor_comp = c.law("functor_composition");
    for phi in &level1 {
        c.record(unit_left, mu(s, &eta(s, phi.clone())) == *phi, || format!("φ={phi:?}"));
        c.record(unit_right, mu(s, &map(s, |k| eta(s, *k), phi)) == *phi, || format!("φ={phi:?}"));
        let twice = nu_impl.apply(s, &nu_impl.apply(s, phi));
        c.record(nu_nu, twice == *phi, || format!("φ={phi:?}: ν(ν φ) = {twice:?}"));
        c.record(functor_id, map(s, |k| *k, phi) == *phi, || format!("φ={phi:?}"));
        for f in &endomaps {
            let apply = |k: &Point| points[f[points.iter().position(|p| p == k).unwrap()]];
            let lhs = nu_impl.apply(s, &map(s, apply, phi));
            let rhs = map(s, apply, &nu_impl.apply(s, phi));
            c.record(natural, lhs == rhs, || format!("f={f:?}, φ={phi:?}"));
            for g in &endomaps {
                let apply_g = |k: &Point| points[g[points.iter().position(|p| p == k).unwrap()]];
                let lhs = map(s, |k| apply_g(&apply(k)), phi);
                let rhs = map(s, apply_g, &map(s, apply, phi));
                c.record(functor_comp, lhs == rhs, || format!("f={f:?}, g={g:?}, φ={phi:?}"));
            }
        }
    }

    // ν∘μ = μ∘ν∘M(ν) on second-level multisets
    let level2: Vec<Multiset<Multiset<Point, S::Elem>, S::Elem>> = match s.elements() {
        Some(all) => {
            let nonzero: Vec<S::Elem> = all.iter().filter(|e| !s.is_zero(e)).cloned().collect();
            small_support_multisets(s, &level1, &nonzero)
        }
        None => (0..budget).map(|_| random_level2(s, &points, rng)).collect(),
    };
    let nu_mu = c.law("nu_mu");
    for big in &level2 {
        let lhs = nu_impl.apply(s, &mu(s, big));
        let rhs = mu(s, &nu_impl.apply(s, &map(s, |inner| nu_impl.apply(s, inner), big)));
        c.record(nu_mu, lhs == rhs, || format!("Φ={big:?}: {lhs:?} ≠ {rhs:?}"));
    }

    // μ∘μ = μ∘M(μ), sampled on third-level multisets
    let assoc = c.law("monad_assoc");
    for _ in 0..budget {
        let n = rng.random_range(0..=2usize);
        let entries: Vec<_> = (0..n).map(|_| (random_level2(s, &points, rng), s.sample(rng))).collect();
        let big = Multiset::from_entries(s, entries);
        let lhs = mu(s, &mu(s, &big));
        let rhs = mu(s, &map(s, |inner| mu(s, inner), &big));
        c.record(assoc, lhs == rhs, || format!("Φ={big:?}"));
    }

    // strength and additivity
    let dst_unit = c.law("dst_unit");
    for &x in &points {
        for &y in &points {
            c.record(dst_unit, dst(s, &eta(s, x), &eta(s, y)) == eta(s, (x, y)), || format!("x={x:?}, y={y:?}"));
        }
    }
    let dst_nu = c.law("nu_dst");
    let additive = c.law("nu_additive");
    let pairs: Vec<(usize, usize)> = if exhaustive {
        (0..level1.len()).flat_map(|i| (0..level1.len()).map(move |j| (i, j))).collect()
    } else {
        (0..level1.len()).map(|i| (i, (i * 7 + 3) % level1.len())).collect()
    };
    for (i, j) in pairs {
        let (phi, psi) = (&level1[i], &level1[j]);
        let lhs = nu_impl.apply(s, &dst(s, phi, psi));
        let rhs = dst(s, &nu_impl.apply(s, phi), &nu_impl.apply(s, psi));
        c.record(dst_nu, lhs == rhs, || format!("φ={phi:?}, ψ={psi:?}"));
        let lhs = nu_impl.apply(s, &phi.plus(s, psi));
        let rhs = nu_impl.apply(s, phi).plus(s, &nu_impl.apply(s, psi));
        c.record(additive, lhs == rhs, || format!("φ={phi:?}, ψ={psi:?}"));
    }

    c.finish()
}

/// Every multiset over `points` with multiplicities from `elems`.
pub fn all_multisets<S, K>(s: &S, points: &[K], elems: &[S::Elem]) -> Vec<Multiset<K, S::Elem>>
where
    S: InvolutiveSemiring,
    K: Ord + Clone,
{
    let mut out = alloc::vec![Vec::new()];
    for p in points {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<(K, S::Elem)>| {
                elems.iter().map(move |e| {
                    let mut next = prefix.clone();
                    next.push((p.clone(), e.clone()));
                    next
                })
            })
            .collect();
    }
    out.into_iter().map(|entries| Multiset::from_entries(s, entries)).collect()
}

/// Every multiset over `keys` with support of size at most two and
/// multiplicities from `nonzero`.
pub fn small_support_multisets<S, K>(s: &S, keys: &[K], nonzero: &[S::Elem]) -> Vec<Multiset<K, S::Elem>>
where
    S: InvolutiveSemiring,
    K: Ord + Clone,
{
    let mut out = alloc::vec![Multiset::empty()];
    for (i, a) in keys.iter().enumerate() {
        for ca in nonzero {
            out.push(Multiset::from_entries(s, [(a.clone(), ca.clone())]));
            for b in &keys[i + 1..] {
                for cb in nonzero {
                    out.push(Multiset::from_entries(s, [(a.clone(), ca.clone()), (b.clone(), cb.clone())]));
                }
            }
        }
    }
    out
}

fn random_multiset<S: InvolutiveSemiring>(
    s: &S,
    points: &[Point],
    max_support: usize,
    rng: &mut dyn RngCore,
) -> Multiset<Point, S::Elem> {
    let n = rng.random_range(0..=max_support);
    let entries: Vec<_> = (0..n).map(|_| (points[rng.random_range(0..points.len())], s.sample(rng))).collect();
    Multiset::from_entries(s, entries)
}

fn random_level2<S: InvolutiveSemiring>(
    s: &S,
    points: &[Point],
    rng: &mut dyn RngCore,
) -> Multiset<Multiset<Point, S::Elem>, S::Elem> {
    let n = rng.random_range(0..=2usize);
    let entries: Vec<_> = (0..n).map(|_| (random_multiset(s, points, 2, rng), s.sample(rng))).collect();
    Multiset::from_entries(s, entries)
}

fn all_endomaps(n: usize) -> Vec<Vec<usize>> {
    let mut out = alloc::vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|p: Vec<usize>| {
                (0..n).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng_from_seed;
    use crate::scalars::{Booleans, GaussianRational, GaussianRationals, Gf9Field, Rational, Rationals};

    type Q = Rationals;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    #[test]
    fn eta_is_singleton() {
        let m = eta(&Q::default(), "x");
        assert_eq!(m.len(), 1);
        assert_eq!(m.get(&"x"), Some(&q(1)));
        assert_eq!(eta(&Booleans, 'x').get(&'x'), Some(&true));
        assert_eq!(nu(&GaussianRationals, &eta(&GaussianRationals, 'x')), eta(&GaussianRationals, 'x'));
    }

    #[test]
    fn map_adds_collisions() {
        let s = Q::default();
        let phi = Multiset::from_entries(&s, [("x", q(2)), ("y", q(3))]);
        let collapsed = map(&s, |_| "z", &phi);
        assert_eq!(collapsed, Multiset::from_entries(&s, [("z", q(5))]));
        assert_eq!(map(&s, |k| *k, &phi), phi);
    }

    #[test]
    fn map_drops_cancelled_entries() {
        let g = GaussianRationals;
        let phi = Multiset::from_entries(&g, [("x", GaussianRational::from_ints(0, 1)), ("y", GaussianRational::from_ints(0, -1))]);
        assert!(map(&g, |_| "z", &phi).is_empty());
    }

    #[test]
    fn mu_examples() {
        let s = Q::default();
        let x = eta(&s, "x");
        assert_eq!(mu(&s, &Multiset::from_entries(&s, [(x.clone(), q(2))])), Multiset::from_entries(&s, [("x", q(2))]));
        assert_eq!(mu(&s, &eta(&s, x.clone())), x);
        let xy = Multiset::from_entries(&s, [("x", q(1)), ("y", q(1))]);
        let big = Multiset::from_entries(&s, [(xy, q(3)), (x, q(1))]);
        assert_eq!(mu(&s, &big), Multiset::from_entries(&s, [("x", q(4)), ("y", q(3))]));
    }

    #[test]
    fn nu_conjugates_multiplicities() {
        let g = GaussianRationals;
        let phi = Multiset::from_entries(&g, [("x", GaussianRational::from_ints(0, 1)), ("y", GaussianRational::from_ints(2, -1))]);
        let expected =
            Multiset::from_entries(&g, [("x", GaussianRational::from_ints(0, -1)), ("y", GaussianRational::from_ints(2, 1))]);
        assert_eq!(nu(&g, &phi), expected);
        assert_eq!(nu(&g, &nu(&g, &phi)), phi);
        let b = Multiset::from_entries(&Booleans, [("x", true)]);
        assert_eq!(nu(&Booleans, &b), b);
    }

    #[test]
    fn dst_expands_products() {
        let s = Q::default();
        let phi = eta(&s, "x");
        let psi = Multiset::from_entries(&s, [("y", q(2)), ("z", q(3))]);
        let expected = Multiset::from_entries(&s, [(("x", "y"), q(2)), (("x", "z"), q(3))]);
        assert_eq!(dst(&s, &phi, &psi), expected);
        assert_eq!(dst(&s, &eta(&s, "x"), &eta(&s, "y")), eta(&s, ("x", "y")));
    }

    #[test]
    fn canonical_under_permutation() {
        let s = Q::default();
        let a = Multiset::from_entries(&s, [("b", q(1)), ("a", q(2)), ("c", q(0))]);
        let b = Multiset::from_entries(&s, [("a", q(2)), ("b", q(1))]);
        assert_eq!(a, b);
    }

    #[test]
    fn gaussian_sampled_laws() {
        let r = law_check(&GaussianRationals, 150, &mut rng_from_seed(3));
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn gf9_exhaustive_laws() {
        let r = law_check(&Gf9Field, 100, &mut rng_from_seed(0));
        assert!(r.passed(), "{r:?}");
        assert!(r.law("nu_mu").unwrap().checked > 200_000);
    }

    #[test]
    fn small_support_count() {
        let s = Gf9Field;
        let all = s.elements().unwrap();
        let level1 = all_multisets(&s, &['x', 'y'], &all);
        assert_eq!(level1.len(), 81);
        let nonzero: Vec<_> = all.iter().filter(|e| !s.is_zero(e)).cloned().collect();
        let level2 = small_support_multisets(&s, &level1, &nonzero);
        assert_eq!(level2.len(), 1 + 81 * 8 + 81 * 80 / 2 * 64);
    }

    struct FirstEntryOnly;

    impl<S: InvolutiveSemiring> MultisetConjugation<S> for FirstEntryOnly {
        fn apply<K: Ord + Clone>(&self, s: &S, phi: &Multiset<K, S::Elem>) -> Multiset<K, S::Elem> {
            Multiset::from_entries(
                s,
                phi.iter().enumerate().map(|(i, (k, v))| (k.clone(), if i == 0 { s.conj(v) } else { v.clone() })),
            )
        }
    }

    #[test]
    fn first_entry_fault_breaks_middle_diagram() {
        let r = law_check_with(&Gf9Field, &FirstEntryOnly, 50, &mut rng_from_seed(1));
        assert!(!r.law("nu_mu").unwrap().verdict.is_pass());
        assert!(r.law("nu_eta").unwrap().verdict.is_pass());
        assert!(r.law("nu_nu").unwrap().verdict.is_pass());
    }
}
