//! Involutive monads and their algebras: the writer monad `M ⊗ (−)`, the
//! two readings of an involutive module as an algebra of the multiset monad,
//! and the involutive monoidal structure of the free-algebra functor.

use alloc::format;
use alloc::vec::Vec;

use rand::{Rng, RngCore};

use super::{FinInvCat, InvFunctor, ModSConj, WriterFunctor};
use crate::fmod::{add_coords, all_coords, random_coords, scale_coords, Matrix, SelfConjugate};
use crate::multiset::{self, all_multisets, dst, eta, mu, nu, small_support_multisets, Multiset};
use crate::report::{Checker, Report};
use crate::scalars::InvolutiveSemiring;
use crate::staralg::{StarAlgebra, StarError};

/// The monad `T = M ⊗ (−)` with `η = u ⊗ id`, `μ = m ⊗ id` and
/// `ν = conj(J_M) ⊗ id`: the three distributive-law diagrams
/// (`ν∘η = η̄`, `ν∘μ = μ̄∘ν∘T(ν)`, `ν̄∘ν∘T(ι) = ι`), the monad laws, and
/// naturality of `η`, `μ` on sampled maps, for `X` of dimension
/// `1..=max_dim`. All are matrix identities, so checking them on
/// matrices covers every vector.
pub fn check_writer_monad<S: InvolutiveSemiring + Clone>(
    alg: &StarAlgebra<S>,
    max_dim: usize,
    budget: usize,
    rng: &mut dyn RngCore,
) -> Result<Report, StarError> {
    let s = alg.scalars();
    let cat = ModSConj::new(s.clone(), max_dim);
    let w = WriterFunctor::new(alg.clone(), cat.clone())?;
    let m = alg.dim();
    let mult = alg.mult_matrix();
    let unit = Matrix::from_flat(m, 1, alg.unit().to_vec());
    let id = |k: usize| Matrix::identity(s, k);
    let eta_at = |k: usize| unit.kron(s, &id(k));
    let mu_at = |k: usize| mult.kron(s, &id(k));

    let mut c = Checker::new("nu", format!("writer-monad-{}", alg.name()));
    for n in 1..=max_dim {
        let tn = m * n;
        // ν ∘ η_X̄ = η̄_X
        let lhs = w.nu(&n).mul(s, &eta_at(n));
        let rhs = eta_at(n).conj(s);
        c.check("nu_eta", lhs == rhs, || format!("dim {n}: ν∘η = {lhs:?}, η̄ = {rhs:?}"));
        // ν ∘ μ_X̄ = μ̄_X ∘ ν_{TX} ∘ T(ν_X)
        let lhs = w.nu(&n).mul(s, &mu_at(n));
        let rhs = mu_at(n).conj(s).mul(s, &w.nu(&tn)).mul(s, &w.mor(&w.nu(&n)));
        c.check("nu_mu", lhs == rhs, || format!("dim {n}: {lhs:?} vs {rhs:?}"));
        // ν̄_X ∘ ν_X̄ ∘ T(ι_X) = ι_{TX}
        let lhs = w.nu(&n).conj(s).mul(s, &w.nu(&n)).mul(s, &w.mor(&cat.iota(&n)));
        c.check("nu_involutive", lhs == cat.iota(&tn), || format!("dim {n}: {lhs:?}"));

        let left = mu_at(n).mul(s, &eta_at(tn));
        let right = mu_at(n).mul(s, &w.mor(&eta_at(n)));
        c.check("monad_unit_left", left.is_identity(s), || format!("dim {n}: {left:?}"));
        c.check("monad_unit_right", right.is_identity(s), || format!("dim {n}: {right:?}"));
        let lhs = mu_at(n).mul(s, &mu_at(tn));
        let rhs = mu_at(n).mul(s, &w.mor(&mu_at(n)));
        c.check("monad_assoc", lhs == rhs, || format!("dim {n}"));

        for n2 in 1..=max_dim {
            for f in cat.homs(&n, &n2, budget, rng).maps.iter().take(budget.max(1)) {
                let lhs = w.mor(f).mul(s, &eta_at(n));
                let rhs = eta_at(n2).mul(s, f);
                c.check("eta_natural", lhs == rhs, || format!("f={f:?}"));
                let lhs = w.mor(f).mul(s, &mu_at(n));
                let rhs = mu_at(n2).mul(s, &w.mor(&w.mor(f)));
                c.check("mu_natural", lhs == rhs, || format!("f={f:?}"));
            }
        }
    }
    Ok(c.finish())
}

/// How the involution of the module acts in [`check_prop63`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModuleInvolution {
    /// `x ↦ J·conj(x)`, the self-conjugate.
    Antilinear,
    /// `x ↦ J·x`: a deliberately wrong, linear involution.
    LinearFault,
}

type Vector<S> = Vec<<S as InvolutiveSemiring>::Elem>;

fn evaluate<S: InvolutiveSemiring>(s: &S, n: usize, phi: &Multiset<Vector<S>, S::Elem>) -> Vector<S> {
    phi.iter().fold(alloc::vec![s.zero(); n], |acc, (x, c)| add_coords(s, &acc, &scale_coords(s, c, x)))
}

fn random_small_multiset<S: InvolutiveSemiring, K: Ord + Clone>(
    s: &S,
    keys: &[K],
    rng: &mut dyn RngCore,
) -> Multiset<K, S::Elem> {
    let k = rng.random_range(0..=2usize);
    let entries: Vec<_> = (0..k).map(|_| (keys[rng.random_range(0..keys.len())].clone(), s.sample(rng))).collect();
    Multiset::from_entries(s, entries)
}

/// An involutive module `(S^n, j)` read as an algebra `a: M_S(X) → X`
/// (evaluation of formal sums), checked two ways: the structure map is a
/// map of self-conjugates, `a ∘ M(j) ∘ ν = j ∘ a`; and `j` is an algebra map
/// out of the conjugate algebra `a ∘ ν`, `j ∘ a ∘ ν = a ∘ M(j)`. The two
/// verdicts are compared case by case (route one at `φ` against route two
/// at `ν(φ)`), and the conjugate algebra is checked to satisfy the algebra
/// laws.
///
/// On enumerable scalars every multiset of vectors with support at most two
/// is used; otherwise `budget` random ones.
pub fn check_prop63<S: InvolutiveSemiring + Clone>(
    s: &S,
    sc: &SelfConjugate<S::Elem>,
    map: ModuleInvolution,
    budget: usize,
    rng: &mut dyn RngCore,
) -> Report {
    let n = sc.dim();
    let label = match map {
        ModuleInvolution::Antilinear => "",
        ModuleInvolution::LinearFault => "-linear-fault",
    };
    let mut c = Checker::new("prop63", format!("{}-dim{n}{:?}{label}", s.name(), sc.j()));
    let j = |x: &Vector<S>| -> Vector<S> {
        match map {
            ModuleInvolution::Antilinear => sc.apply(s, x),
            ModuleInvolution::LinearFault => sc.j().apply(s, x),
        }
    };
    let a = |phi: &Multiset<Vector<S>, S::Elem>| evaluate(s, n, phi);

    let (keys, phis) = match s.elements() {
        Some(all) => {
            let keys = all_coords(&all, n);
            let nonzero: Vec<S::Elem> = all.iter().filter(|e| !s.is_zero(e)).cloned().collect();
            let phis = small_support_multisets(s, &keys, &nonzero);
            (keys, phis)
        }
        None => {
            let keys: Vec<Vector<S>> = (0..budget.max(1)).map(|_| random_coords(s, n, rng)).collect();
            let phis = (0..budget.max(1)).map(|_| random_small_multiset(s, &keys, rng)).collect();
            (keys, phis)
        }
    };

    let route1 = c.law("route1_structure_map_is_sc_morphism");
    let route2 = c.law("route2_j_is_algebra_map");
    let agree = c.law("routes_agree");
    for phi in &phis {
        let nphi = nu(s, phi);
        let r1 = a(&multiset::map(s, |x| j(x), &nphi)) == j(&a(phi));
        let r2 = j(&a(&nphi)) == a(&multiset::map(s, |x| j(x), phi));
        c.record(route1, r1, || format!("φ={phi:?}"));
        c.record(route2, r2, || format!("φ={phi:?}"));
        // route two at ν(φ) is route one at φ
        let r2_at_nu = j(&a(&nu(s, &nphi))) == a(&multiset::map(s, |x| j(x), &nphi));
        c.record(agree, r1 == r2_at_nu, || format!("φ={phi:?}: route one {r1}, route two at ν(φ) {r2_at_nu}"));
    }

    let conj_alg = |phi: &Multiset<Vector<S>, S::Elem>| a(&nu(s, phi));
    let unit_law = c.law("conjugate_algebra_unit");
    for x in &keys {
        c.record(unit_law, conj_alg(&eta(s, x.clone())) == *x, || format!("x={x:?}"));
    }
    let assoc = c.law("conjugate_algebra_assoc");
    for _ in 0..budget.max(1) {
        let inner: Vec<Multiset<Vector<S>, S::Elem>> = (0..3).map(|_| random_small_multiset(s, &keys, rng)).collect();
        let big = random_small_multiset(s, &inner, rng);
        let lhs = conj_alg(&mu(s, &big));
        let rhs = conj_alg(&multiset::map(s, |phi| conj_alg(phi), &big));
        c.record(assoc, lhs == rhs, || format!("Φ={big:?}"));
    }
    c.finish()
}

/// Runs [`check_prop63`] with the linear fault and reports whether both
/// routes reject it and agree case by case.
pub fn check_prop63_fault<S: InvolutiveSemiring + Clone>(
    s: &S,
    sc: &SelfConjugate<S::Elem>,
    budget: usize,
    rng: &mut dyn RngCore,
) -> Report {
    let inner = check_prop63(s, sc, ModuleInvolution::LinearFault, budget, rng);
    let verdict = |law: &str| inner.law(law).map(|e| e.verdict.is_pass());
    let mut c = Checker::new("prop63", format!("{}-dim{}-linear-fault", s.name(), sc.dim()));
    let r1 = verdict("route1_structure_map_is_sc_morphism");
    let r2 = verdict("route2_j_is_algebra_map");
    c.check("fault_rejected_by_route1", r1 == Some(false), || format!("route one {r1:?}"));
    c.check("fault_rejected_by_route2", r2 == Some(false), || format!("route two {r2:?}"));
    c.check("routes_agree", verdict("routes_agree") == Some(true), || {
        inner.law("routes_agree").and_then(|e| e.witness.clone()).unwrap_or_default()
    });
    c.finish()
}

/// The free-algebra functor `X ↦ (M_S(X), μ)` as an involutive monoidal
/// functor, on carriers of size `1..=max_size`:
///
/// * its involution `ν` satisfies `ν∘ν = id` and is an algebra map into the
///   conjugate algebra (`ν∘μ = μ∘ν∘M(ν)`, `ν(c·φ) = c̄·ν(φ)`, additive);
/// * `ζ^Alg = ν ∘ M(ζ)` sends `c·∗` to `c̄·∗`, and `ν ∘ η = η` on the unit;
/// * `ξ^Alg`, built from its defining property on generators and extended
///   along the conjugate scalar action, satisfies `ξ^Alg ∘ ⊗̄ = ⊗̄ ∘ ξ`;
/// * the tensor square: `ν(φ ⊗ ψ) = ξ^Alg(ν(φ) ⊗ ν(ψ))`.
///
/// Enumerable scalars use every multiset on each carrier; otherwise
/// `budget` random ones.
pub fn check_def43_free_adjunction<S: InvolutiveSemiring + Clone>(
    s: &S,
    max_size: usize,
    budget: usize,
    rng: &mut dyn RngCore,
) -> Report {
    let exhaustive = s.elements().is_some();
    let mode = if exhaustive { "exhaustive" } else { "sampled" };
    let mut c = Checker::new("def43", format!("{}-{mode}", s.name()));
    let scalars: Vec<S::Elem> = match s.elements() {
        Some(all) => all,
        None => (0..8).map(|_| s.sample(rng)).collect(),
    };
    let level1 = |n: usize, rng: &mut dyn RngCore| -> Vec<Multiset<usize, S::Elem>> {
        let keys: Vec<usize> = (0..n).collect();
        match s.elements() {
            Some(all) => all_multisets(s, &keys, &all),
            None => (0..budget.max(1)).map(|_| random_small_multiset(s, &keys, rng)).collect(),
        }
    };
    let carriers: Vec<Vec<Multiset<usize, S::Elem>>> = (1..=max_size).map(|n| level1(n, rng)).collect();

    let involutive = c.law("nu_involutive");
    let antilinear = c.law("nu_conjugate_linear");
    let additive = c.law("nu_additive");
    let alg_map = c.law("nu_algebra_map");
    for (idx, phis) in carriers.iter().enumerate() {
        let n = idx + 1;
        for phi in phis {
            c.record(involutive, nu(s, &nu(s, phi)) == *phi, || format!("φ={phi:?}"));
            for k in scalars.iter().take(4) {
                let ok = nu(s, &phi.scale(s, k)) == nu(s, phi).scale(s, &s.conj(k));
                c.record(antilinear, ok, || format!("c={k}, φ={phi:?}"));
            }
        }
        for _ in 0..budget.min(phis.len() * phis.len()).max(1) {
            let (p, q) = (&phis[rng.random_range(0..phis.len())], &phis[rng.random_range(0..phis.len())]);
            c.record(additive, nu(s, &p.plus(s, q)) == nu(s, p).plus(s, &nu(s, q)), || format!("φ={p:?}, ψ={q:?}"));
        }
        // second level over the scaled generators c·x
        let keys: Vec<usize> = (0..n).collect();
        let generators: Vec<Multiset<usize, S::Elem>> = keys
            .iter()
            .flat_map(|&x| scalars.iter().filter(|k| !s.is_zero(k)).map(move |k| (x, k.clone())))
            .map(|(x, k)| Multiset::from_entries(s, [(x, k)]))
            .collect();
        let nonzero: Vec<S::Elem> = scalars.iter().filter(|k| !s.is_zero(k)).cloned().collect();
        let level2 = if exhaustive {
            small_support_multisets(s, &generators, &nonzero)
        } else {
            (0..budget.max(1)).map(|_| random_small_multiset(s, &generators, rng)).collect()
        };
        for big in &level2 {
            let lhs = nu(s, &mu(s, big));
            let rhs = mu(s, &nu(s, &multiset::map(s, |inner| nu(s, inner), big)));
            c.record(alg_map, lhs == rhs, || format!("Φ={big:?}"));
        }
    }

    let zeta = c.law("zeta_alg");
    for k in &scalars {
        let point = Multiset::from_entries(s, [((), k.clone())]);
        let z = nu(s, &multiset::map(s, |_: &()| (), &point));
        c.record(zeta, z == Multiset::from_entries(s, [((), s.conj(k))]), || format!("c={k}"));
    }
    c.check("unit_square", nu(s, &eta(s, ())) == eta(s, ()), || "ν(η ∗) ≠ η ∗".into());

    // ξ^Alg on M_S(X × Y): write χ = Σ d ·̄ η(x, y) with d = conj(χ(x, y)),
    // then send each generator to φ ⊗ ψ of its generators.
    let xi_alg = |chi: &Multiset<(usize, usize), S::Elem>| -> Multiset<(usize, usize), S::Elem> {
        chi.iter().fold(Multiset::empty(), |acc, (&(x, y), coeff)| {
            let d = s.conj(coeff);
            let image = dst(s, &eta(s, x), &eta(s, y));
            acc.plus(s, &image.scale(s, &s.conj(&d)))
        })
    };
    let characterised = c.law("xi_alg_characterisation");
    let square = c.law("tensor_square");
    for (i, phis) in carriers.iter().enumerate() {
        for psis in &carriers[i..] {
            let all_pairs = phis.len() * psis.len() <= 20_000;
            let count = if all_pairs { phis.len() * psis.len() } else { budget.max(1) };
            for t in 0..count {
                let (phi, psi) = if all_pairs {
                    (&phis[t / psis.len()], &psis[t % psis.len()])
                } else {
                    (&phis[rng.random_range(0..phis.len())], &psis[rng.random_range(0..psis.len())])
                };
                let tensor = dst(s, phi, psi);
                c.record(characterised, xi_alg(&tensor) == tensor, || format!("φ={phi:?}, ψ={psi:?}"));
                let lhs = nu(s, &tensor);
                let rhs = xi_alg(&dst(s, &nu(s, phi), &nu(s, psi)));
                c.record(square, lhs == rhs, || format!("φ={phi:?}, ψ={psi:?}"));
            }
        }
    }
    c.finish()
}
