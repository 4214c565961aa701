//! Named suites and their default instances, as run by `involute laws`.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use rand::RngCore;

use super::*;
use crate::fmod::{biproduct_selfconj, bilinear_universal_check, check_conjugation_laws, structured_selfconjs, Matrix};
use crate::fmod::{std_selfconj, FreeModule, SelfConjugate};
use crate::gns::{roundtrip_check, scalar_codomain};
use crate::report::{Checker, LawResult, Report, Verdict};
use crate::scalars::{law_check_involutive_semiring, Booleans, GaussianRationals, Gf9Field, InvolutiveSemiring, Rationals};
use crate::staralg::{
    check_lemma52, check_star_laws, entrywise_matrix_algebra, function_algebra, group_algebra, matrix_algebra, perturb,
    GroupTable, StarAlgebra,
};
use crate::words::{
    check_free_involutions, cyclic_group_table, symmetric_group_table, word_universal_check, Mode,
    MultiplicativeMonoid, TableMonoid,
};
use crate::{multiset, rng_from_seed};

/// Every suite name, in run order.
pub const SUITES: &[&str] = &[
    "semiring",
    "words",
    "multiset",
    "fmod",
    "bilinear",
    "star",
    "lemma52",
    "gns",
    "iota",
    "nu",
    "adjunction34",
    "scproduct",
    "sclift",
    "monoidal7",
    "prop63",
    "def43",
];

type RunFn = Box<dyn Fn(&mut dyn RngCore, usize) -> Report + Send + Sync>;

/// One default instance of one suite.
pub struct RegistryEntry {
    pub suite: &'static str,
    pub instance: String,
    run: RunFn,
}

impl RegistryEntry {
    fn new(suite: &'static str, instance: impl Into<String>, run: impl Fn(&mut dyn RngCore, usize) -> Report + Send + Sync + 'static) -> Self {
        Self { suite, instance: instance.into(), run: Box::new(run) }
    }

    /// Runs the checks and labels every result with this entry's suite and
    /// instance. When the checks report several inner instances, each law is
    /// prefixed with its own.
    pub fn run(&self, rng: &mut dyn RngCore, budget: usize) -> Report {
        let raw = (self.run)(rng, budget);
        let first = raw.entries().first().map(|e| e.instance.clone());
        let mixed = raw.entries().iter().any(|e| Some(&e.instance) != first.as_ref());
        let mut out = Report::new();
        for e in raw.into_entries() {
            let law = if mixed && e.instance != self.instance { format!("{}/{}", e.instance, e.law) } else { e.law };
            out.push(LawResult { suite: self.suite.to_string(), instance: self.instance.clone(), law, ..e });
        }
        out
    }
}

/// A failed `setup` law carrying a construction error.
fn setup_failure(suite: &str, instance: &str, err: impl core::fmt::Display) -> Report {
    let mut r = Report::new();
    r.push(LawResult {
        suite: suite.into(),
        law: "setup".into(),
        instance: instance.into(),
        verdict: Verdict::Fail,
        witness: Some(err.to_string()),
        checked: 1,
    });
    r
}

fn fnv1a(text: &str) -> u64 {
    text.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ b as u64).wrapping_mul(0x0000_0100_0000_01b3))
}

/// Runs the selected suites (all when `suites` is empty), optionally only
/// the named instance. Each entry draws from its own generator derived from
/// `seed` and its name, so results do not depend on which other entries run.
pub fn run(suites: &[&str], instance: Option<&str>, seed: u64, budget: usize) -> Result<Report, LawlabError> {
    if let Some(bad) = suites.iter().find(|s| !SUITES.contains(s)) {
        return Err(LawlabError::UnknownSuite((*bad).into()));
    }
    let selected: Vec<RegistryEntry> = registry()
        .into_iter()
        .filter(|e| suites.is_empty() || suites.contains(&e.suite))
        .filter(|e| instance.is_none_or(|i| e.instance == i))
        .collect();
    if selected.is_empty() {
        return Err(LawlabError::UnknownInstance {
            suite: suites.join(","),
            instance: instance.unwrap_or_default().into(),
        });
    }
    let mut out = Report::new();
    for e in &selected {
        let mut rng = rng_from_seed(seed ^ fnv1a(&format!("{}/{}", e.suite, e.instance)));
        out.extend(e.run(&mut rng, budget));
    }
    Ok(out)
}

/// Every default instance of every suite, in [`SUITES`] order.
pub fn registry() -> Vec<RegistryEntry> {
    let mut out = Vec::new();
    semiring_entries(&mut out);
    word_entries(&mut out);
    multiset_entries(&mut out);
    module_entries(&mut out);
    algebra_entries(&mut out);
    gns_entries(&mut out);
    iota_entries(&mut out);
    nu_entries(&mut out);
    adjunction_entries(&mut out);
    product_entries(&mut out);
    lift_entries(&mut out);
    monoidal_entries(&mut out);
    module_algebra_entries(&mut out);
    free_algebra_entries(&mut out);
    out
}

fn semiring_entries(out: &mut Vec<RegistryEntry>) {
    out.push(RegistryEntry::new("semiring", "bool-exhaustive", |r, b| law_check_involutive_semiring(&Booleans, b, r)));
    out.push(RegistryEntry::new("semiring", "gf9-exhaustive", |r, b| law_check_involutive_semiring(&Gf9Field, b, r)));
    out.push(RegistryEntry::new("semiring", "rat-sampled", |r, b| law_check_involutive_semiring(&Rationals, b, r)));
    out.push(RegistryEntry::new("semiring", "gauss-sampled", |r, b| {
        law_check_involutive_semiring(&GaussianRationals, b, r)
    }));
}

fn word_entries(out: &mut Vec<RegistryEntry>) {
    out.push(RegistryEntry::new("words", "free-2-len3", |_, _| check_free_involutions(2, 3)));
    for mode in [Mode::Reversing, Mode::NonReversing] {
        let name = format!("z2-{mode}");
        out.push(RegistryEntry::new("words", name.clone(), move |_, _| {
            word_universal_check(2, &TableMonoid::z2_group(), mode, 4)
                .unwrap_or_else(|e| setup_failure("words", &name, e))
        }));
        let name = format!("gf9-mul-{mode}");
        out.push(RegistryEntry::new("words", name.clone(), move |_, _| {
            word_universal_check(2, &MultiplicativeMonoid(Gf9Field), mode, 4)
                .unwrap_or_else(|e| setup_failure("words", &name, e))
        }));
    }
}

fn multiset_entries(out: &mut Vec<RegistryEntry>) {
    out.push(RegistryEntry::new("multiset", "bool-exhaustive", |r, b| multiset::law_check(&Booleans, b, r)));
    out.push(RegistryEntry::new("multiset", "gf9-exhaustive", |r, b| multiset::law_check(&Gf9Field, b, r)));
    out.push(RegistryEntry::new("multiset", "rat-sampled", |r, b| multiset::law_check(&Rationals, b, r)));
    out.push(RegistryEntry::new("multiset", "gauss-sampled", |r, b| multiset::law_check(&GaussianRationals, b, r)));
}

fn module_entries(out: &mut Vec<RegistryEntry>) {
    out.push(RegistryEntry::new("fmod", "gauss-sampled", |r, b| check_conjugation_laws(&GaussianRationals, 3, b, r)));
    out.push(RegistryEntry::new("fmod", "gf9-sampled", |r, b| check_conjugation_laws(&Gf9Field, 3, b, r)));
    out.push(RegistryEntry::new("fmod", "rat-sampled", |r, b| check_conjugation_laws(&Rationals, 3, b, r)));
    for (dx, dy, dz) in [(1, 1, 1), (1, 2, 2), (2, 2, 1), (2, 2, 2)] {
        out.push(RegistryEntry::new("bilinear", format!("bool-{dx}x{dy}->{dz}"), move |r, b| {
            bilinear_universal_check(&Booleans, dx, dy, dz, b, r)
        }));
    }
    for (dx, dy, dz) in [(1, 1, 1), (1, 2, 1), (2, 1, 2), (2, 2, 1)] {
        out.push(RegistryEntry::new("bilinear", format!("gf9-{dx}x{dy}->{dz}"), move |r, b| {
            bilinear_universal_check(&Gf9Field, dx, dy, dz, b, r)
        }));
    }
    out.push(RegistryEntry::new("bilinear", "gauss-2x2->2", |r, b| {
        bilinear_universal_check(&GaussianRationals, 2, 2, 2, b, r)
    }));
}

fn shipped_algebras() -> Vec<StarAlgebra<GaussianRationals>> {
    let s = GaussianRationals;
    let group = |t: Vec<Vec<usize>>| GroupTable::new(t).expect("shipped group tables are groups");
    let mut algs = vec![
        matrix_algebra(&s, 2),
        matrix_algebra(&s, 3),
        group_algebra(&s, &group(cyclic_group_table(2))),
        group_algebra(&s, &group(cyclic_group_table(3))),
        group_algebra(&s, &group(symmetric_group_table(3))).with_name("s3-gauss"),
        entrywise_matrix_algebra(&s, 2),
    ];
    algs.extend((1..=3).map(|k| function_algebra(&s, k)));
    algs
}

fn algebra_entries(out: &mut Vec<RegistryEntry>) {
    for alg in shipped_algebras() {
        let name = alg.name().to_string();
        out.push(RegistryEntry::new("star", name, move |r, b| check_star_laws(&alg, true, b, r)));
    }
    let non_reversing: Vec<_> = shipped_algebras().into_iter().filter(|a| a.mode() == Mode::NonReversing).collect();
    for alg in &non_reversing {
        let a = alg.clone();
        out.push(RegistryEntry::new("lemma52", a.name().to_string(), move |_, _| match check_lemma52(&a) {
            Ok(l) => l.into_report(),
            Err(e) => setup_failure("lemma52", a.name(), e),
        }));
    }
    // ten seeded faults, cycling through the non-reversing algebras
    for k in 0..10 {
        let base = non_reversing[k % non_reversing.len()].clone();
        let name = format!("{}-fault{k}", base.name());
        out.push(RegistryEntry::new("lemma52", name.clone(), move |r, _| {
            let faulty = perturb(&base, r);
            let mut c = Checker::new("lemma52", name.clone());
            match check_lemma52(&faulty) {
                Ok(l) => {
                    let (d, m) = (l.diagrams.verdict(), l.morphisms.verdict());
                    c.check("routes_agree", l.agree(), || format!("diagrams {d}, morphisms {m}"));
                    c.check("fault_detected", !l.diagrams.passed(), || "the perturbed algebra passed".into());
                }
                Err(e) => {
                    c.check("setup", false, || e.to_string());
                }
            }
            c.finish()
        }));
    }
}

fn gns_entries(out: &mut Vec<RegistryEntry>) {
    out.push(RegistryEntry::new("gns", "mat2-gauss", |r, b| {
        let s = GaussianRationals;
        let alg = Arc::new(matrix_algebra(&s, 2));
        roundtrip_check(&alg, &Arc::new(scalar_codomain(&s)), b.min(100), r)
            .unwrap_or_else(|e| setup_failure("gns", "mat2-gauss", e))
    }));
    out.push(RegistryEntry::new("gns", "fun2-gf9", |r, b| {
        let s = Gf9Field;
        let alg = Arc::new(function_algebra(&s, 2));
        roundtrip_check(&alg, &Arc::new(scalar_codomain(&s)), b, r).unwrap_or_else(|e| setup_failure("gns", "fun2-gf9", e))
    }));
    out.push(RegistryEntry::new("gns", "group2-gf9", |r, b| {
        let s = Gf9Field;
        let alg = Arc::new(group_algebra(&s, &GroupTable::new(cyclic_group_table(2)).expect("group")));
        roundtrip_check(&alg, &Arc::new(scalar_codomain(&s)), b, r)
            .unwrap_or_else(|e| setup_failure("gns", "group2-gf9", e))
    }));
}

fn iota_entries(out: &mut Vec<RegistryEntry>) {
    out.push(RegistryEntry::new("iota", "finset4", |r, b| check_iota_coherence(&FinSetTriv::up_to(4), b, r)));
    out.push(RegistryEntry::new("iota", "chains4", |r, b| check_iota_coherence(&FinPosetRev::chains(4), b, r)));
    out.push(RegistryEntry::new("iota", "posets", |r, b| check_iota_coherence(&FinPosetRev::standard(), b, r)));
    out.push(RegistryEntry::new("iota", "mod-gauss", |r, b| {
        check_iota_coherence(&ModSConj::new(GaussianRationals, 3), b, r)
    }));
    out.push(RegistryEntry::new("iota", "mod-gf9", |r, b| check_iota_coherence(&ModSConj::new(Gf9Field, 2), b, r)));
    out.push(RegistryEntry::new("iota", "sc-finset3", |r, b| {
        check_iota_coherence(&ScCat::new(FinSetTriv::up_to(3)), b, r)
    }));
    out.push(RegistryEntry::new("iota", "sc-chains3", |r, b| {
        check_iota_coherence(&ScCat::new(FinPosetRev::chains(3)), b, r)
    }));
    out.push(RegistryEntry::new("iota", "sc-mod-gf9", |r, b| {
        check_iota_coherence(&ScCat::new(ModSConj::new(Gf9Field, 2)), b, r)
    }));
}

fn nu_entries(out: &mut Vec<RegistryEntry>) {
    out.push(RegistryEntry::new("nu", "id-finset3", |r, b| {
        check_functor_involutive(&IdentityFunctor::new(FinSetTriv::up_to(3)), b, r)
    }));
    out.push(RegistryEntry::new("nu", "id-mod-gauss", |r, b| {
        check_functor_involutive(&IdentityFunctor::new(ModSConj::new(GaussianRationals, 2)), b, r)
    }));
    out.push(RegistryEntry::new("nu", "forget-finset3", |r, b| {
        check_functor_involutive(&Forgetful::new(ScCat::new(FinSetTriv::up_to(3))), b, r)
    }));
    out.push(RegistryEntry::new("nu", "forget-mod-gf9", |r, b| {
        check_functor_involutive(&Forgetful::new(ScCat::new(ModSConj::new(Gf9Field, 2))), b, r)
    }));
    out.push(RegistryEntry::new("nu", "multiset-gf9", |r, b| {
        let f = MultisetFunctor::new(Gf9Field, FinSetTriv::up_to(2)).expect("enumerable");
        check_functor_involutive(&f, b, r)
    }));
    out.push(RegistryEntry::new("nu", "multiset-bool", |r, b| {
        let f = MultisetFunctor::new(Booleans, FinSetTriv::up_to(3)).expect("enumerable");
        check_functor_involutive(&f, b, r)
    }));
    for alg in [function_algebra(&Gf9Field, 2), function_algebra(&Gf9Field, 1)] {
        let name = format!("writer-{}", alg.name());
        let a = alg.clone();
        out.push(RegistryEntry::new("nu", name.clone(), move |r, b| {
            match WriterFunctor::new(a.clone(), ModSConj::new(Gf9Field, 2)) {
                Ok(w) => check_functor_involutive(&w, b, r),
                Err(e) => setup_failure("nu", &name, e),
            }
        }));
        let name = format!("writer-monad-{}", alg.name());
        out.push(RegistryEntry::new("nu", name.clone(), move |r, b| {
            check_writer_monad(&alg, 2, b, r).unwrap_or_else(|e| setup_failure("nu", &name, e))
        }));
    }
    let ew = entrywise_matrix_algebra(&GaussianRationals, 2);
    out.push(RegistryEntry::new("nu", "writer-monad-entrywise2-gauss", move |r, b| {
        check_writer_monad(&ew, 2, b.min(8), r).unwrap_or_else(|e| setup_failure("nu", "writer-monad-entrywise2-gauss", e))
    }));
}

fn adjunction_entries(out: &mut Vec<RegistryEntry>) {
    out.push(RegistryEntry::new("adjunction34", "involution-counts", |_, _| {
        let mut c = Checker::new("adjunction34", "involution-counts");
        for n in 0..=8 {
            let got = enumerate_selfconj(n).map(|v| v.len() as u64);
            c.check("count_matches_recursion", got == Ok(involution_count(n)), || {
                format!("n={n}: enumerated {got:?}, recursion {}", involution_count(n))
            });
        }
        c.check("size_limit", enumerate_selfconj(9).is_err(), || "n=9 accepted".into());
        c.finish()
    }));
    for x in 1..=3 {
        let name = format!("X{x}-all-Y");
        out.push(RegistryEntry::new("adjunction34", name.clone(), move |_, _| {
            let mut report = Report::new();
            for y in 1..=4 {
                for target in enumerate_selfconj(y).expect("small") {
                    match check_adjunction_34(x, &target) {
                        Ok(a) => report.extend(a.report),
                        Err(e) => report.extend(setup_failure("adjunction34", &name, e)),
                    }
                }
            }
            report
        }));
    }
}

fn swap2() -> ScObject<usize, FinMap> {
    ScObject { object: 2, j: FinMap::new(vec![1, 0], 2).expect("in range") }
}

fn fixed(n: usize) -> ScObject<usize, FinMap> {
    ScObject { object: n, j: FinMap::identity(n) }
}

fn product_entries(out: &mut Vec<RegistryEntry>) {
    out.push(RegistryEntry::new("scproduct", "finset-swap-x-id", |r, b| {
        check_sc_product(&ScCat::new(FinSetTriv::up_to(2)), &swap2(), &fixed(2), b, r)
    }));
    out.push(RegistryEntry::new("scproduct", "finset-swap-x-swap", |r, b| {
        check_sc_product(&ScCat::new(FinSetTriv::up_to(2)), &swap2(), &swap2(), b, r)
    }));
    out.push(RegistryEntry::new("scproduct", "finset-singletons", |r, b| {
        let sc = ScCat::new(FinSetTriv::up_to(2));
        let mut rep = check_sc_product(&sc, &fixed(1), &fixed(1), b, r);
        let mut c = Checker::new("scproduct", "finset-singletons");
        let p = sc.product(&fixed(1), &fixed(1));
        c.check("product_is_singleton", p == fixed(1), || format!("{p:?}"));
        rep.extend(c.finish());
        rep
    }));
    out.push(RegistryEntry::new("scproduct", "chains-reversal", |r, b| {
        let chain = Poset::chain(2);
        let rev = FinMap::new(vec![1, 0], 2).expect("in range");
        let sc = ScCat::new(FinPosetRev::new(vec![Poset::discrete(1), chain.clone()]));
        let o = ScObject { object: chain, j: rev };
        check_sc_product(&sc, &o, &o, b, r)
    }));
    out.push(RegistryEntry::new("scproduct", "mod-gf9", |r, b| {
        let s = Gf9Field;
        let sc = ScCat::new(ModSConj::new(s, 1));
        let mut rep = Report::new();
        let objs = sc.objects();
        for c1 in &objs {
            for c2 in &objs {
                rep.extend(check_sc_product(&sc, c1, c2, b, r));
                let mut c = Checker::new("scproduct", "mod-gf9");
                let p = sc.product(c1, c2);
                let m = |o: &ScObject<usize, Matrix<_>>| {
                    SelfConjugate::new_unchecked(FreeModule::standard(o.object), o.j.clone())
                };
                let expected = biproduct_selfconj(&s, &m(c1), &m(c2));
                c.check("matches_biproduct_selfconj", p.j == *expected.j(), || format!("{p:?}"));
                rep.extend(c.finish());
            }
        }
        rep
    }));
}

fn lift_entries(out: &mut Vec<RegistryEntry>) {
    out.push(RegistryEntry::new("sclift", "multiset-bool-swap", |r, b| {
        let s = Booleans;
        let f = MultisetFunctor::new(s, FinSetTriv::up_to(2)).expect("enumerable");
        let objects = vec![swap2(), fixed(2), fixed(1)];
        // φ ↦ ψ with ψ(k) = conj(φ(j(k))), built coefficient by coefficient
        let expected = |o: &ScObject<usize, FinMap>| -> FinMap {
            let n = o.object;
            let size = 2usize.pow(n as u32);
            let map = (0..size)
                .map(|code| {
                    let digits: Vec<usize> = (0..n).map(|k| (code >> k) & 1).collect();
                    (0..n).map(|k| digits[o.j.at(k)] << k).sum()
                })
                .collect();
            FinMap::new(map, size).expect("in range")
        };
        check_sc_lift(&f, &objects, Some(&expected), b, r)
    }));
    out.push(RegistryEntry::new("sclift", "multiset-gf9", |r, b| {
        let f = MultisetFunctor::new(Gf9Field, FinSetTriv::up_to(2)).expect("enumerable");
        check_sc_lift(&f, &[swap2(), fixed(2), fixed(1)], None, b, r)
    }));
    out.push(RegistryEntry::new("sclift", "id-finset3", |r, b| {
        let f = IdentityFunctor::new(FinSetTriv::up_to(3));
        let objects = enumerate_selfconj(3).expect("small");
        let expected = |o: &ScObject<usize, FinMap>| o.j.clone();
        check_sc_lift(&f, &objects, Some(&expected), b, r)
    }));
    out.push(RegistryEntry::new("sclift", "writer-fun2-gf9", |r, b| {
        let s = Gf9Field;
        let alg = function_algebra(&s, 2);
        let jm = alg.j().clone();
        let f = match WriterFunctor::new(alg, ModSConj::new(s, 2)) {
            Ok(f) => f,
            Err(e) => return setup_failure("sclift", "writer-fun2-gf9", e),
        };
        let objects: Vec<_> = (1..=2)
            .flat_map(|n| structured_selfconjs(&s, n))
            .map(|c| ScObject { object: c.dim(), j: c.j().clone() })
            .collect();
        // (J_M ⊗ J_X) entry by entry
        let expected = |o: &ScObject<usize, Matrix<_>>| {
            let (m, n) = (jm.rows(), o.object);
            Matrix::from_fn(m * n, m * n, |row, col| s.mul(jm.get(row / n, col / n), o.j.get(row % n, col % n)))
        };
        check_sc_lift(&f, &objects, Some(&expected), b, r)
    }));
}

fn monoidal_entries(out: &mut Vec<RegistryEntry>) {
    out.push(RegistryEntry::new("monoidal7", "finset3", |r, b| check_monoidal_7(&FinSetTriv::up_to(3), b, r)));
    out.push(RegistryEntry::new("monoidal7", "posets", |r, b| check_monoidal_7(&FinPosetRev::standard(), b, r)));
    out.push(RegistryEntry::new("monoidal7", "mod-gf9", |r, b| check_monoidal_7(&ModSConj::new(Gf9Field, 2), b, r)));
    out.push(RegistryEntry::new("monoidal7", "mod-gauss", |r, b| {
        check_monoidal_7(&ModSConj::new(GaussianRationals, 2), b, r)
    }));
    out.push(RegistryEntry::new("monoidal7", "sc-finset2", |r, b| {
        check_monoidal_7(&ScCat::new(FinSetTriv::up_to(2)), b, r)
    }));
    out.push(RegistryEntry::new("monoidal7", "sc-chains2", |r, b| {
        check_monoidal_7(&ScCat::new(FinPosetRev::chains(2)), b, r)
    }));
    out.push(RegistryEntry::new("monoidal7", "sc-mod-gf9", |r, b| {
        check_monoidal_7(&ScCat::new(ModSConj::new(Gf9Field, 2)), b, r)
    }));
}

fn swap_selfconj<S: InvolutiveSemiring>(s: &S) -> SelfConjugate<S::Elem> {
    SelfConjugate::new_unchecked(FreeModule::standard(2), Matrix::permutation(s, &[1, 0]))
}

fn module_algebra_entries(out: &mut Vec<RegistryEntry>) {
    let s = Gf9Field;
    out.push(RegistryEntry::new("prop63", "gf9-dim2-std", move |r, b| {
        check_prop63(&s, &std_selfconj(&s, FreeModule::standard(2)), ModuleInvolution::Antilinear, b, r)
    }));
    out.push(RegistryEntry::new("prop63", "gf9-dim2-swap", move |r, b| {
        check_prop63(&s, &swap_selfconj(&s), ModuleInvolution::Antilinear, b, r)
    }));
    out.push(RegistryEntry::new("prop63", "gf9-dim2-linear-fault", move |r, b| {
        check_prop63_fault(&s, &std_selfconj(&s, FreeModule::standard(2)), b, r)
    }));
    out.push(RegistryEntry::new("prop63", "bool-dim1", |r, b| {
        check_prop63(&Booleans, &std_selfconj(&Booleans, FreeModule::standard(1)), ModuleInvolution::Antilinear, b, r)
    }));
    out.push(RegistryEntry::new("prop63", "gauss-dim2-swap", |r, b| {
        let s = GaussianRationals;
        check_prop63(&s, &swap_selfconj(&s), ModuleInvolution::Antilinear, b.min(200), r)
    }));
}

fn free_algebra_entries(out: &mut Vec<RegistryEntry>) {
    out.push(RegistryEntry::new("def43", "gf9-exhaustive", |r, b| check_def43_free_adjunction(&Gf9Field, 2, b, r)));
    out.push(RegistryEntry::new("def43", "bool-exhaustive", |r, b| check_def43_free_adjunction(&Booleans, 2, b, r)));
    out.push(RegistryEntry::new("def43", "rat-sampled", |r, b| {
        check_def43_free_adjunction(&Rationals, 2, b.min(200), r)
    }));
    out.push(RegistryEntry::new("def43", "gauss-sampled", |r, b| {
        check_def43_free_adjunction(&GaussianRationals, 2, b.min(200), r)
    }));
}
