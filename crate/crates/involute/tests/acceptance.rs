//! Acceptance run: one PASS/FAIL line per criterion, with exact arithmetic
//! and wall-clock limits. Runs without the libtest harness so the lines are
//! always printed.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::{Command, ExitCode};
use std::sync::Arc;
use std::time::{Duration, Instant};

use involute_core::fmod::{bilinear_universal_check, check_conjugation_laws};
use involute_core::gns::{check_condition_a, check_condition_b, roundtrip_check, scalar_codomain, state2ip};
use involute_core::gns::{HermitianFunctional, SesquiForm};
use involute_core::lawlab::{self, check_adjunction_34, check_writer_monad, enumerate_selfconj, involution_count, involutions};
use involute_core::multiset;
use involute_core::scalars::{law_check_involutive_semiring, Booleans, GaussianRational, GaussianRationals, Gf9, Gf9Field, Rational};
use involute_core::staralg::{
    check_lemma52, check_star_laws, entrywise_matrix_algebra, function_algebra, group_algebra,
    matrix_algebra, perturb, GroupTable, StarAlgebra,
};
use involute_core::words::{check_free_involutions, cyclic_group_table, symmetric_group_table, word_universal_check, Mode, MultiplicativeMonoid, TableMonoid};
use involute_core::{rng_from_seed, InvolutiveSemiring, Report};
use serde_json::Value;

const SEED: u64 = 0;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok { Ok(()) } else { Err(msg()) }
}

fn passed(r: &Report) -> Result<(), String> {
    match r.failures().next() {
        None => Ok(()),
        Some(f) => Err(format!("{} {} {}: {}", f.suite, f.instance, f.law, f.witness.clone().unwrap_or_default())),
    }
}

fn count(r: &Report, law: &str) -> u64 {
    r.law(law).map_or(0, |e| e.checked)
}

fn expect_count(r: &Report, law: &str, n: u64) -> Result<(), String> {
    let got = count(r, law);
    ensure(got == n, || format!("{law}: {got} cases, expected {n}"))
}

/// GF(9) as pairs mod 3 with i² = −1, kept apart from the library type.
fn gf9_oracle() -> Result<(), String> {
    let f = Gf9Field;
    let elems = f.elements().expect("enumerable");
    ensure(elems.len() == 9, || format!("{} elements", elems.len()))?;
    let pair = |x: &Gf9| (x.re() as i64, x.im() as i64);
    for x in &elems {
        let (a, b) = pair(x);
        ensure(pair(&f.conj(x)) == (a, (3 - b) % 3), || format!("conj {x}"))?;
        for y in &elems {
            let (c, d) = pair(y);
            let sum = ((a + c) % 3, (b + d) % 3);
            let prod = ((a * c - b * d).rem_euclid(3), (a * d + b * c) % 3);
            ensure(pair(&f.add(x, y)) == sum, || format!("{x} + {y}"))?;
            ensure(pair(&f.mul(x, y)) == prod, || format!("{x} * {y}"))?;
        }
    }
    Ok(())
}

fn semiring_suite() -> Outcome {
    gf9_oracle()?;
    let mut rng = rng_from_seed(SEED);
    let gf9 = law_check_involutive_semiring(&Gf9Field, 1000, &mut rng);
    passed(&gf9)?;
    for law in ["add_assoc", "mul_assoc", "distributive"] {
        expect_count(&gf9, law, 9 * 9 * 9)?;
    }
    let gauss = law_check_involutive_semiring(&GaussianRationals, 1000, &mut rng);
    passed(&gauss)?;
    for law in ["add_assoc", "mul_assoc", "distributive", "conj_multiplicative"] {
        expect_count(&gauss, law, 1000)?;
    }
    Ok(format!("{} GF(9) laws exhaustive, {} Gaussian laws sampled", gf9.len(), gauss.len()))
}

fn word_suite() -> Outcome {
    let free = check_free_involutions(2, 3);
    passed(&free)?;
    // signed words of length ≤ 3 over 2 symbols: 1 + 4 + 16 + 64
    for mode in ["reversing", "non-reversing"] {
        expect_count(&free, &format!("{mode}/formula"), 85)?;
        expect_count(&free, &format!("{mode}/involution"), 85)?;
    }
    // maps × words of length ≤ 4, with 1 + 4 + 16 + 64 + 256 = 341 words
    let words = 341;
    let mut total = 0;
    for mode in [Mode::Reversing, Mode::NonReversing] {
        let z2 = word_universal_check(2, &TableMonoid::z2_group(), mode, 4).map_err(|e| e.to_string())?;
        passed(&z2)?;
        expect_count(&z2, "hom_unit", 2 * 2)?;
        expect_count(&z2, "uniqueness", 2 * 2 * words)?;
        let gf9 = word_universal_check(2, &MultiplicativeMonoid(Gf9Field), mode, 4).map_err(|e| e.to_string())?;
        passed(&gf9)?;
        expect_count(&gf9, "hom_unit", 9 * 9)?;
        expect_count(&gf9, "uniqueness", 9 * 9 * words)?;
        total += z2.checked() + gf9.checked();
    }
    Ok(format!("85 words per mode; {total} universal-property cases"))
}

fn monad_suite() -> Outcome {
    let mut rng = rng_from_seed(SEED);
    let m = multiset::law_check(&Gf9Field, 1000, &mut rng);
    passed(&m)?;
    // 81 multisets on {x, y}; second level with support ≤ 2:
    // 1 + 81·8 + C(81, 2)·8²
    expect_count(&m, "nu_nu", 81)?;
    expect_count(&m, "nu_mu", 1 + 81 * 8 + 81 * 80 / 2 * 64)?;
    expect_count(&m, "nu_eta", 2)?;
    let fun2 = function_algebra(&Gf9Field, 2);
    let w = check_writer_monad(&fun2, 2, 1000, &mut rng).map_err(|e| e.to_string())?;
    passed(&w)?;
    for law in ["nu_eta", "nu_mu", "nu_involutive"] {
        ensure(count(&w, law) > 0, || format!("writer {law} not checked"))?;
    }
    Ok(format!("{} multiset cases, {} writer cases", m.checked(), w.checked()))
}

fn module_suite() -> Outcome {
    let mut rng = rng_from_seed(SEED);
    let r = check_conjugation_laws(&GaussianRationals, 3, 1000, &mut rng);
    passed(&r)?;
    for law in ["conj_vector_scalar", "selfconj_antilinear", "biproduct_conj", "tensor_conj"] {
        expect_count(&r, law, 1000)?;
    }
    // hand-computed instance: (i·(1, 2+i))⁻ = −i·(1, 2−i)
    let s = GaussianRationals;
    let g = GaussianRational::from_ints;
    let scaled: Vec<_> = [g(1, 0), g(2, 1)].iter().map(|x| s.conj(&s.mul(&g(0, 1), x))).collect();
    ensure(scaled == [g(0, -1), g(-1, -2)], || format!("{scaled:?}"))?;
    Ok(format!("{} cases on dimensions ≤ 3", r.checked()))
}

fn star_suite() -> Outcome {
    let s = GaussianRationals;
    let group = |t| GroupTable::new(t).map_err(|e: involute_core::staralg::StarError| e.to_string());
    let mut algs: Vec<StarAlgebra<GaussianRationals>> = vec![
        matrix_algebra(&s, 2),
        matrix_algebra(&s, 3),
        group_algebra(&s, &group(cyclic_group_table(2))?),
        group_algebra(&s, &group(cyclic_group_table(3))?),
        group_algebra(&s, &group(symmetric_group_table(3))?),
        entrywise_matrix_algebra(&s, 2),
    ];
    algs.extend((1..=3).map(|k| function_algebra(&s, k)));
    let mut rng = rng_from_seed(SEED);
    let mut routes = 0;
    for a in &algs {
        let r = check_star_laws(a, true, 100, &mut rng);
        passed(&r)?;
        let n = a.dim() as u64;
        expect_count(&r, "assoc", n * n * n)?;
        if a.mode() == Mode::NonReversing {
            let l = check_lemma52(a).map_err(|e| e.to_string())?;
            ensure(l.agree() && l.diagrams.passed(), || format!("{}: routes disagree", a.name()))?;
            routes += 1;
        }
    }
    let non_reversing: Vec<_> = algs.iter().filter(|a| a.mode() == Mode::NonReversing).collect();
    for k in 0..10 {
        let faulty = perturb(non_reversing[k % non_reversing.len()], &mut rng);
        let l = check_lemma52(&faulty).map_err(|e| e.to_string())?;
        ensure(l.agree(), || format!("fault {k}: routes disagree"))?;
        ensure(!l.diagrams.passed(), || format!("fault {k} went undetected"))?;
    }
    Ok(format!("{} algebras, {routes} two-route checks, 10 faults detected", algs.len()))
}

fn half() -> GaussianRational {
    GaussianRational::real(Rational::new(1, 2))
}

fn gns_suite() -> Outcome {
    let s = GaussianRationals;
    let mat2 = Arc::new(matrix_algebra(&s, 2));
    let scalars = Arc::new(scalar_codomain(&s));
    let mut rng = rng_from_seed(SEED);
    let r = roundtrip_check(&mat2, &scalars, 100, &mut rng).map_err(|e| e.to_string())?;
    passed(&r)?;
    expect_count(&r, "forward_condition_a", 100)?;
    expect_count(&r, "forward_condition_b", 100)?;
    expect_count(&r, "roundtrip_functional", 100)?;
    ensure(count(&r, "roundtrip_form") > 0, || "no form round trips".into())?;

    let f = Gf9Field;
    let fun2 = Arc::new(function_algebra(&f, 2));
    let r = roundtrip_check(&fun2, &Arc::new(scalar_codomain(&f)), 0, &mut rng).map_err(|e| e.to_string())?;
    passed(&r)?;
    expect_count(&r, "hermitian_iff_condition_a", 81)?;
    expect_count(&r, "image_equals_conditions", 1)?;
    // δᵢ⁻·δⱼ = [i = j]·δᵢ, so the forms meeting both conditions are exactly
    // the diagonal Grams with self-conjugate entries, i.e. entries in GF(3)
    let elems = f.elements().expect("enumerable");
    let gf3: Vec<Gf9> = (0..3).map(|a| Gf9::new(a, 0)).collect();
    let expected: BTreeSet<Vec<Gf9>> =
        gf3.iter().flat_map(|a| gf3.iter().map(move |d| vec![*a, Gf9::new(0, 0), Gf9::new(0, 0), *d])).collect();
    let mut found = BTreeSet::new();
    for a in &elems {
        for b in &elems {
            for c in &elems {
                for d in &elems {
                    let p = SesquiForm::scalar(fun2.clone(), vec![vec![*a, *b], vec![*c, *d]]).map_err(|e| e.to_string())?;
                    if check_condition_a(&p).passed() && check_condition_b(&p).passed() {
                        found.insert(vec![*a, *b, *c, *d]);
                    }
                }
            }
        }
    }
    ensure(found == expected, || format!("{} Grams satisfy both conditions, expected 9", found.len()))?;

    let z = GaussianRational::from_ints(0, 0);
    let trace = HermitianFunctional::scalar(mat2.clone(), vec![half(), z.clone(), z.clone(), half()]).map_err(|e| e.to_string())?;
    let p = state2ip(&trace).map_err(|e| e.to_string())?;
    let want: Vec<Vec<GaussianRational>> =
        (0..16).map(|k| vec![if k / 4 == k % 4 { half() } else { z.clone() }]).collect();
    ensure(p.gram() == want.as_slice(), || "Gram of the normalized trace is not I/2".into())?;
    Ok("100 sampled functionals, 81 functionals and 6561 Grams exhaustive, trace Gram = I/2".into())
}

fn coherence_suite() -> Outcome {
    let suites = ["iota", "nu", "adjunction34", "scproduct", "sclift", "monoidal7", "prop63", "def43"];
    let r = lawlab::run(&suites, None, SEED, 1000).map_err(|e| e.to_string())?;
    passed(&r)?;
    for suite in suites {
        ensure(r.entries().iter().any(|e| e.suite == suite), || format!("{suite} ran no laws"))?;
    }
    let expected = [1u64, 2, 4, 10, 26, 76];
    for (n, &want) in (1..=6).zip(&expected) {
        let got = involutions(n).len() as u64;
        ensure(got == want && involution_count(n) == want, || format!("n = {n}: {got} involutions, expected {want}"))?;
    }
    // every self-conjugate target with |Y| ≤ 4, against |X| ≤ 3
    let mut pairs = 0;
    for x in 1..=3usize {
        for y in 0..=4usize {
            for target in enumerate_selfconj(y).map_err(|e| e.to_string())? {
                let a = check_adjunction_34(x, &target).map_err(|e| e.to_string())?;
                passed(&a.report)?;
                let (into, from) = (y.pow(x as u32), x.pow(y as u32));
                ensure(a.free_homs == into && a.maps_into == into, || format!("|X| = {x}, {target:?}: free side"))?;
                ensure(a.cofree_homs == from && a.maps_from == from, || format!("|X| = {x}, {target:?}: cofree side"))?;
                pairs += 1;
            }
        }
    }
    ensure(pairs == 3 * 18, || format!("{pairs} (X, Y) pairs"))?;
    Ok(format!("{} laws over {} suites, {pairs} adjunction pairs", r.len(), suites.len()))
}

fn bilinear_suite() -> Outcome {
    let mut rng = rng_from_seed(SEED);
    let (mut cases, mut maps) = (0, 0);
    for dims in [1, 2].iter().flat_map(|&x| [1, 2].iter().flat_map(move |&y| [1, 2].map(move |z| (x, y, z)))) {
        let (dx, dy, dz) = dims;
        for r in [
            bilinear_universal_check(&Booleans, dx, dy, dz, 100, &mut rng),
            bilinear_universal_check(&Gf9Field, dx, dy, dz, 100, &mut rng),
        ] {
            passed(&r)?;
            let inst = &r.entries()[0].instance;
            ensure(inst.ends_with("exhaustive"), || format!("{inst} was sampled"))?;
            cases += r.checked();
        }
        maps += 2u64.pow((dx * dy * dz) as u32) + 9u64.pow((dx * dy * dz) as u32);
    }
    Ok(format!("{maps} linear maps enumerated, {cases} recorded checks"))
}

fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

fn cli_suite() -> Outcome {
    let text = std::fs::read_to_string(fixtures().join("commands.json")).map_err(|e| e.to_string())?;
    let cases: Vec<Value> = serde_json::from_str(&text).map_err(|e| e.to_string())?;
    let run = |args: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_involute")).current_dir(fixtures()).env_remove("INVOLUTE_SEED").args(args).output()
    };
    let mut sets = BTreeSet::new();
    for case in &cases {
        let set = case["set"].as_str().unwrap_or_default();
        let mut args = vec!["--seed", "11", "--budget", "200"];
        args.extend(case["args"].as_array().into_iter().flatten().filter_map(Value::as_str));
        let want = match set {
            "pass" => 0,
            "violation" => 1,
            "malformed" => 2,
            other => return Err(format!("unknown fixture set {other}")),
        };
        let a = run(&args).map_err(|e| e.to_string())?;
        let b = run(&args).map_err(|e| e.to_string())?;
        ensure(a.status.code() == Some(want), || format!("{args:?}: exit {:?}, expected {want}", a.status.code()))?;
        ensure(a.stdout == b.stdout && a.stderr == b.stderr && a.status == b.status, || format!("{args:?} is not deterministic"))?;
        sets.insert(set.to_string());
    }
    ensure(sets.len() == 3, || format!("fixture sets {sets:?}"))?;
    Ok(format!("{} commands run twice", cases.len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, Option<u64>, fn() -> Outcome); 9] = [
        ("involutive semirings", Some(5), semiring_suite),
        ("free involutive monoids", Some(30), word_suite),
        ("involutive monads", Some(60), monad_suite),
        ("conjugate modules", None, module_suite),
        ("star-algebras", None, star_suite),
        ("state/inner-product bijection", Some(60), gns_suite),
        ("coherence suites", None, coherence_suite),
        ("bilinear factorization", Some(120), bilinear_suite),
        ("CLI determinism and exit codes", None, cli_suite),
    ];
    let mut failed = 0;
    for (k, (name, limit, body)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = body();
        let took = start.elapsed();
        let outcome = match (outcome, limit) {
            (Ok(_), Some(secs)) if took > Duration::from_secs(secs) => Err(format!("took {took:.2?}, limit {secs} s")),
            (o, _) => o,
        };
        let limit = limit.map_or(String::new(), |s| format!(" of {s} s"));
        match outcome {
            Ok(detail) => println!("PASS criterion {}: {name}: {detail} [{took:.2?}{limit}]", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {name}: {why} [{took:.2?}{limit}]", k + 1);
            }
        }
    }
    println!("acceptance: {} of 9 criteria passed", 9 - failed);
    if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
