//! Hermitian functionals and the sesquilinear forms they induce.
//!
//! On a reversing involutive algebra `A` with values in a self-conjugate
//! `(X, j_X)`, a linear `f: A → X` induces `⟨a|b⟩ = f(a⁻·b)`. Conversely a
//! form `p` gives `f(a) = p(u, a)`. The two directions are mutually inverse
//! between hermitian functionals, `f(a⁻) = j_X(f(a))`, and forms satisfying
//!
//! * (a) `j_X(p(u, a)) = p(a, u)`,
//! * (b) `p(a·b, c) = p(b, a⁻·c)`.
//!
//! Everything is evaluated on basis tuples, which is exact by
//! sesquilinearity.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use rand::RngCore;
use thiserror::Error;

use crate::fmod::{add_coords, all_coords, random_coords, scale_coords, show_coords, std_selfconj, FreeModule, SelfConjugate};
use crate::report::{Checker, Report};
use crate::scalars::InvolutiveSemiring;
use crate::staralg::StarAlgebra;
use crate::words::Mode;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum GnsError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("the algebra must be reversing or commutative")]
    NotReversing,
    #[error("functional is not hermitian at {basis}: {detail}")]
    NotHermitian { basis: String, detail: String },
    #[error("condition (a) fails at {witness}")]
    ConditionA { witness: String },
    #[error("condition (b) fails at {witness}")]
    ConditionB { witness: String },
    #[error("the codomain is not the scalars")]
    CodomainNotScalars,
}

/// The scalars as a self-conjugate: `S¹` with plain conjugation.
pub fn scalar_codomain<S: InvolutiveSemiring>(s: &S) -> SelfConjugate<S::Elem> {
    std_selfconj(s, FreeModule::new(["1"]).expect("single name"))
}

fn require_reversing<S: InvolutiveSemiring + Clone>(alg: &StarAlgebra<S>) -> Result<(), GnsError> {
    if alg.mode() == Mode::Reversing || alg.is_commutative() {
        Ok(())
    } else {
        Err(GnsError::NotReversing)
    }
}

/// A linear functional `A → X`, given by its values on the basis of `A`.
/// Hermiticity is not enforced on construction; see [`Self::is_hermitian`].
#[derive(Clone)]
pub struct HermitianFunctional<S: InvolutiveSemiring> {
    algebra: Arc<StarAlgebra<S>>,
    codomain: Arc<SelfConjugate<S::Elem>>,
    values: Vec<Vec<S::Elem>>,
}

impl<S: InvolutiveSemiring + Clone> HermitianFunctional<S> {
    pub fn new(
        algebra: Arc<StarAlgebra<S>>,
        codomain: Arc<SelfConjugate<S::Elem>>,
        values: Vec<Vec<S::Elem>>,
    ) -> Result<Self, GnsError> {
        if values.len() != algebra.dim() {
            return Err(GnsError::Shape(format!("{} values for an algebra of dimension {}", values.len(), algebra.dim())));
        }
        if let Some(v) = values.iter().find(|v| v.len() != codomain.dim()) {
            return Err(GnsError::Shape(format!("value of length {} in a codomain of dimension {}", v.len(), codomain.dim())));
        }
        Ok(Self { algebra, codomain, values })
    }

    /// Scalar-valued functional.
    pub fn scalar(algebra: Arc<StarAlgebra<S>>, values: Vec<S::Elem>) -> Result<Self, GnsError> {
        let codomain = Arc::new(scalar_codomain(algebra.scalars()));
        Self::new(algebra, codomain, values.into_iter().map(|v| alloc::vec![v]).collect())
    }

    pub fn algebra(&self) -> &Arc<StarAlgebra<S>> {
        &self.algebra
    }

    pub fn codomain(&self) -> &Arc<SelfConjugate<S::Elem>> {
        &self.codomain
    }

    pub fn values(&self) -> &[Vec<S::Elem>] {
        &self.values
    }

    /// `f(a) = Σᵢ aᵢ·f(eᵢ)`.
    pub fn eval(&self, a: &[S::Elem]) -> Vec<S::Elem> {
        let s = self.algebra.scalars();
        a.iter()
            .zip(&self.values)
            .fold(alloc::vec![s.zero(); self.codomain.dim()], |acc, (c, v)| add_coords(s, &acc, &scale_coords(s, c, v)))
    }

    /// First basis element where `f(eᵢ⁻) ≠ j_X(f(eᵢ))`.
    pub fn hermitian_defect(&self) -> Option<(usize, Vec<S::Elem>, Vec<S::Elem>)> {
        let s = self.algebra.scalars();
        (0..self.algebra.dim()).find_map(|i| {
            let lhs = self.eval(&self.algebra.involve(&self.algebra.basis_vector(i)));
            let rhs = self.codomain.apply(s, &self.values[i]);
            (lhs != rhs).then_some((i, lhs, rhs))
        })
    }

    pub fn is_hermitian(&self) -> bool {
        self.hermitian_defect().is_none()
    }
}

impl<S: InvolutiveSemiring> PartialEq for HermitianFunctional<S> {
    fn eq(&self, other: &Self) -> bool {
        self.values == other.values
    }
}

impl<S: InvolutiveSemiring> core::fmt::Debug for HermitianFunctional<S> {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str("f[")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str(&show_value(v))?;
        }
        f.write_str("]")
    }
}

fn show_value<E: core::fmt::Display>(v: &[E]) -> String {
    if v.len() == 1 { format!("{}", v[0]) } else { show_coords(v) }
}

/// A sesquilinear form by its Gram array `G[i][j] = p(eᵢ, eⱼ)`.
#[derive(Clone)]
pub struct SesquiForm<S: InvolutiveSemiring> {
    algebra: Arc<StarAlgebra<S>>,
    codomain: Arc<SelfConjugate<S::Elem>>,
    gram: Vec<Vec<S::Elem>>,
}

impl<S: InvolutiveSemiring + Clone> SesquiForm<S> {
    /// `gram` is row-major, `n²` codomain vectors.
    pub fn new(
        algebra: Arc<StarAlgebra<S>>,
        codomain: Arc<SelfConjugate<S::Elem>>,
        gram: Vec<Vec<S::Elem>>,
    ) -> Result<Self, GnsError> {
        let n = algebra.dim();
        if gram.len() != n * n {
            return Err(GnsError::Shape(format!("{} Gram entries for an algebra of dimension {n}", gram.len())));
        }
        if let Some(v) = gram.iter().find(|v| v.len() != codomain.dim()) {
            return Err(GnsError::Shape(format!("Gram entry of length {} in a codomain of dimension {}", v.len(), codomain.dim())));
        }
        Ok(Self { algebra, codomain, gram })
    }

    /// Scalar-valued form from an `n×n` array.
    pub fn scalar(algebra: Arc<StarAlgebra<S>>, rows: Vec<Vec<S::Elem>>) -> Result<Self, GnsError> {
        let n = algebra.dim();
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(GnsError::Shape(format!("Gram must be {n}x{n}")));
        }
        let codomain = Arc::new(scalar_codomain(algebra.scalars()));
        Self::new(algebra, codomain, rows.into_iter().flatten().map(|v| alloc::vec![v]).collect())
    }

    pub fn algebra(&self) -> &Arc<StarAlgebra<S>> {
        &self.algebra
    }

    pub fn codomain(&self) -> &Arc<SelfConjugate<S::Elem>> {
        &self.codomain
    }

    pub fn gram(&self) -> &[Vec<S::Elem>] {
        &self.gram
    }

    pub fn entry(&self, i: usize, j: usize) -> &[S::Elem] {
        &self.gram[i * self.algebra.dim() + j]
    }

    /// Gram as an `n×n` array of codomain vectors.
    pub fn gram_rows(&self) -> Vec<Vec<Vec<S::Elem>>> {
        let n = self.algebra.dim();
        self.gram.chunks(n.max(1)).map(<[_]>::to_vec).collect()
    }

    /// `p(x, y) = Σ conj(xᵢ)·yⱼ·G[i][j]`.
    pub fn eval(&self, x: &[S::Elem], y: &[S::Elem]) -> Vec<S::Elem> {
        let s = self.algebra.scalars();
        let n = self.algebra.dim();
        let mut acc = alloc::vec![s.zero(); self.codomain.dim()];
        for (i, xi) in x.iter().enumerate() {
            if s.is_zero(xi) {
                continue;
            }
            let cx = s.conj(xi);
            for (j, yj) in y.iter().enumerate() {
                if s.is_zero(yj) {
                    continue;
                }
                acc = add_coords(s, &acc, &scale_coords(s, &s.mul(&cx, yj), &self.gram[i * n + j]));
            }
        }
        acc
    }
}

impl<S: InvolutiveSemiring> PartialEq for SesquiForm<S> {
    fn eq(&self, other: &Self) -> bool {
        self.gram == other.gram
    }
}

impl<S: InvolutiveSemiring> core::fmt::Debug for SesquiForm<S> {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str("G[")?;
        for (i, v) in self.gram.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str(&show_value(v))?;
        }
        f.write_str("]")
    }
}

/// Gram of `⟨a|b⟩ = f(a⁻·b)` without checking hermiticity.
pub fn induced_form<S: InvolutiveSemiring + Clone>(f: &HermitianFunctional<S>) -> SesquiForm<S> {
    let alg = &f.algebra;
    let n = alg.dim();
    let mut gram = Vec::with_capacity(n * n);
    for i in 0..n {
        let ei_bar = alg.involve(&alg.basis_vector(i));
        for j in 0..n {
            gram.push(f.eval(&alg.mul(&ei_bar, &alg.basis_vector(j))));
        }
    }
    SesquiForm { algebra: alg.clone(), codomain: f.codomain.clone(), gram }
}

/// `⟨a|b⟩ = f(a⁻·b)` for a hermitian `f`.
pub fn state2ip<S: InvolutiveSemiring + Clone>(f: &HermitianFunctional<S>) -> Result<SesquiForm<S>, GnsError> {
    require_reversing(&f.algebra)?;
    if let Some((i, lhs, rhs)) = f.hermitian_defect() {
        return Err(GnsError::NotHermitian {
            basis: f.algebra.module().basis()[i].clone(),
            detail: format!("f(a⁻) = {}, j(f(a)) = {}", show_value(&lhs), show_value(&rhs)),
        });
    }
    Ok(induced_form(f))
}

/// `f(a) = p(u, a)` without checking (a) or (b).
pub fn extract_functional<S: InvolutiveSemiring + Clone>(p: &SesquiForm<S>) -> HermitianFunctional<S> {
    let alg = &p.algebra;
    let values = (0..alg.dim()).map(|i| p.eval(alg.unit(), &alg.basis_vector(i))).collect();
    HermitianFunctional { algebra: alg.clone(), codomain: p.codomain.clone(), values }
}

/// `f(a) = p(u, a)` for a form satisfying (a) and (b).
pub fn ip2state<S: InvolutiveSemiring + Clone>(p: &SesquiForm<S>) -> Result<HermitianFunctional<S>, GnsError> {
    require_reversing(&p.algebra)?;
    if let Some(w) = first_witness(&check_condition_a(p)) {
        return Err(GnsError::ConditionA { witness: w });
    }
    if let Some(w) = first_witness(&check_condition_b(p)) {
        return Err(GnsError::ConditionB { witness: w });
    }
    let f = extract_functional(p);
    if let Some((i, lhs, rhs)) = f.hermitian_defect() {
        // unreachable when (a) and (b) hold
        return Err(GnsError::NotHermitian {
            basis: f.algebra.module().basis()[i].clone(),
            detail: format!("f(a⁻) = {}, j(f(a)) = {}", show_value(&lhs), show_value(&rhs)),
        });
    }
    Ok(f)
}

fn first_witness(r: &Report) -> Option<String> {
    r.failures().next().map(|e| e.witness.clone().unwrap_or_default())
}

fn form_instance<S: InvolutiveSemiring + Clone>(p: &SesquiForm<S>) -> String {
    String::from(p.algebra.name())
}

/// (a): `j_X(p(u, eᵢ)) = p(eᵢ, u)` for every basis element.
pub fn check_condition_a<S: InvolutiveSemiring + Clone>(p: &SesquiForm<S>) -> Report {
    let alg = &p.algebra;
    let s = alg.scalars();
    let names = alg.module().basis();
    let mut c = Checker::new("gns", form_instance(p));
    let law = c.law("condition_a");
    for i in 0..alg.dim() {
        let e = alg.basis_vector(i);
        let lhs = p.codomain.apply(s, &p.eval(alg.unit(), &e));
        let rhs = p.eval(&e, alg.unit());
        c.record(law, lhs == rhs, || {
            format!("a={}: j(p(u,a)) = {}, p(a,u) = {}", names[i], show_value(&lhs), show_value(&rhs))
        });
    }
    c.finish()
}

/// (b): `p(eᵢ·eⱼ, eₖ) = p(eⱼ, eᵢ⁻·eₖ)` for every basis triple.
pub fn check_condition_b<S: InvolutiveSemiring + Clone>(p: &SesquiForm<S>) -> Report {
    condition_b_with(p, "condition_b", |alg, a, b, c| (alg.mul(a, b), c.to_vec(), b.to_vec(), alg.mul(&alg.involve(a), c)))
}

/// The reading `p(eᵢ·eⱼ, eₖ) = p(eᵢ, eⱼ⁻·eₖ)`. It holds for induced forms
/// on commutative algebras but not in general; kept for comparison.
pub fn check_condition_b_literal<S: InvolutiveSemiring + Clone>(p: &SesquiForm<S>) -> Report {
    condition_b_with(p, "condition_b_literal", |alg, a, b, c| {
        (alg.mul(a, b), c.to_vec(), a.to_vec(), alg.mul(&alg.involve(b), c))
    })
}

type Sides<E> = (Vec<E>, Vec<E>, Vec<E>, Vec<E>);

fn condition_b_with<S, F>(p: &SesquiForm<S>, law_name: &str, sides: F) -> Report
where
    S: InvolutiveSemiring + Clone,
    F: Fn(&StarAlgebra<S>, &[S::Elem], &[S::Elem], &[S::Elem]) -> Sides<S::Elem>,
{
    let alg = &p.algebra;
    let n = alg.dim();
    let names = alg.module().basis();
    let mut c = Checker::new("gns", form_instance(p));
    let law = c.law(law_name);
    for i in 0..n {
        let a = alg.basis_vector(i);
        for j in 0..n {
            let b = alg.basis_vector(j);
            for k in 0..n {
                let d = alg.basis_vector(k);
                let (l1, l2, r1, r2) = sides(alg, &a, &b, &d);
                let lhs = p.eval(&l1, &l2);
                let rhs = p.eval(&r1, &r2);
                c.record(law, lhs == rhs, || {
                    format!(
                        "(a, b, c) = ({}, {}, {}): lhs = {}, rhs = {}",
                        names[i],
                        names[j],
                        names[k],
                        show_value(&lhs),
                        show_value(&rhs)
                    )
                });
            }
        }
    }
    c.finish()
}

/// `f(u) = 1`. Only defined for scalar-valued functionals.
pub fn is_state<S: InvolutiveSemiring + Clone>(f: &HermitianFunctional<S>) -> Result<bool, GnsError> {
    let s = f.algebra.scalars();
    if f.codomain.dim() != 1 || !f.codomain.j().is_identity(s) {
        return Err(GnsError::CodomainNotScalars);
    }
    Ok(f.eval(f.algebra.unit()) == [s.one()])
}

/// A random hermitian functional: `f(a) = g(a) + j_X(g(a⁻))` for a random
/// linear `g`.
pub fn random_hermitian<S: InvolutiveSemiring + Clone>(
    algebra: &Arc<StarAlgebra<S>>,
    codomain: &Arc<SelfConjugate<S::Elem>>,
    rng: &mut dyn RngCore,
) -> HermitianFunctional<S> {
    let s = algebra.scalars();
    let n = algebra.dim();
    let g = HermitianFunctional {
        algebra: algebra.clone(),
        codomain: codomain.clone(),
        values: (0..n).map(|_| random_coords(s, codomain.dim(), rng)).collect(),
    };
    let values = (0..n)
        .map(|i| {
            let e = algebra.basis_vector(i);
            add_coords(s, &g.eval(&e), &codomain.apply(s, &g.eval(&algebra.involve(&e))))
        })
        .collect();
    HermitianFunctional { algebra: algebra.clone(), codomain: codomain.clone(), values }
}

/// Functionals are enumerated when there are at most this many.
pub const MAX_FUNCTIONALS: usize = 100_000;
/// Gram arrays are enumerated when there are at most this many.
pub const MAX_GRAMS: usize = 1_000_000;

fn count(base: usize, exp: usize, limit: usize) -> Option<usize> {
    (0..exp).try_fold(1usize, |acc, _| acc.checked_mul(base).filter(|&v| v <= limit))
}

/// Both round trips, the forward conditions, derived symmetry and unitality
/// transfer. On enumerable scalars with few enough functionals and Grams,
/// every functional and every Gram is enumerated and the set of induced
/// forms is compared with the set of forms satisfying (a) and (b).
/// Otherwise `budget` random hermitian functionals and random Grams are used.
pub fn roundtrip_check<S: InvolutiveSemiring + Clone>(
    algebra: &Arc<StarAlgebra<S>>,
    codomain: &Arc<SelfConjugate<S::Elem>>,
    budget: usize,
    rng: &mut dyn RngCore,
) -> Result<Report, GnsError> {
    require_reversing(algebra)?;
    let s = algebra.scalars();
    let n = algebra.dim();
    let dx = codomain.dim();
    let elems = s.elements();
    let sizes = elems.as_ref().and_then(|e| {
        Some((count(e.len(), n * dx, MAX_FUNCTIONALS)?, count(e.len(), n * n * dx, MAX_GRAMS)?))
    });
    let exhaustive = sizes.is_some();
    let mut instance = String::from(algebra.name());
    if dx != 1 || !codomain.j().is_identity(s) {
        instance.push_str(&format!("-X{dx}"));
    }
    instance.push_str(if exhaustive { "-exhaustive" } else { "-sampled" });
    let mut c = Checker::new("gns", instance);
    let forward_a = c.law("forward_condition_a");
    let forward_b = c.law("forward_condition_b");
    let rt_f = c.law("roundtrip_functional");
    let rt_p = c.law("roundtrip_form");
    let symmetric = c.law("hermitian_symmetry");
    let unital = c.law("unitality_transfer");
    let hermitian_iff_a = c.law("hermitian_iff_condition_a");
    let names = algebra.module().basis();

    let check_functional = |c: &mut Checker, f: &HermitianFunctional<S>| -> Option<Vec<Vec<S::Elem>>> {
        let p = induced_form(f);
        let herm = f.is_hermitian();
        let a_ok = check_condition_a(&p).passed();
        c.record(hermitian_iff_a, herm == a_ok, || format!("f={f:?}: hermitian {herm}, condition (a) {a_ok}"));
        if !herm {
            return None;
        }
        c.record(forward_a, a_ok, || format!("f={f:?}"));
        let b = check_condition_b(&p);
        c.record(forward_b, b.passed(), || format!("f={f:?}: {}", first_witness(&b).unwrap_or_default()));
        let back = extract_functional(&p);
        c.record(rt_f, back == *f, || format!("f={f:?}, back={back:?}"));
        let fu = f.eval(algebra.unit());
        let puu = p.eval(algebra.unit(), algebra.unit());
        c.record(unital, fu == puu, || format!("f={f:?}: f(u) = {}, p(u,u) = {}", show_value(&fu), show_value(&puu)));
        for i in 0..n {
            for j in 0..n {
                let lhs = codomain.apply(s, p.entry(i, j));
                c.record(symmetric, lhs == p.entry(j, i), || format!("f={f:?}, (a, b) = ({}, {})", names[i], names[j]));
            }
        }
        Some(p.gram)
    };
    let check_form = |c: &mut Checker, gram: Vec<Vec<S::Elem>>| -> Option<Vec<Vec<S::Elem>>> {
        let p = SesquiForm { algebra: algebra.clone(), codomain: codomain.clone(), gram };
        if !(check_condition_a(&p).passed() && check_condition_b(&p).passed()) {
            return None;
        }
        let f = extract_functional(&p);
        let again = induced_form(&f);
        c.record(rt_p, again == p && f.is_hermitian(), || format!("p={p:?}, f={f:?}"));
        Some(p.gram)
    };

    match (sizes, elems) {
        (Some(_), Some(elems)) => {
            let mut image = BTreeSet::new();
            let mut hermitian = 0usize;
            for flat in all_coords(&elems, n * dx) {
                let values = flat.chunks(dx.max(1)).map(<[_]>::to_vec).collect();
                let f = HermitianFunctional { algebra: algebra.clone(), codomain: codomain.clone(), values };
                if let Some(g) = check_functional(&mut c, &f) {
                    hermitian += 1;
                    image.insert(g);
                }
            }
            let mut satisfying = BTreeSet::new();
            for flat in all_coords(&elems, n * n * dx) {
                let gram = flat.chunks(dx.max(1)).map(<[_]>::to_vec).collect();
                if let Some(g) = check_form(&mut c, gram) {
                    satisfying.insert(g);
                }
            }
            c.check("induced_injective", image.len() == hermitian, || {
                format!("{hermitian} hermitian functionals give {} forms", image.len())
            });
            let missing = satisfying.difference(&image).next().cloned();
            let extra = image.difference(&satisfying).next().cloned();
            c.check("image_equals_conditions", missing.is_none() && extra.is_none(), || match (missing, extra) {
                (Some(g), _) => format!("form satisfies (a) and (b) but is not induced: {}", show_gram(&g)),
                (_, Some(g)) => format!("induced form fails (a) or (b): {}", show_gram(&g)),
                _ => String::new(),
            });
        }
        _ => {
            for _ in 0..budget.max(1) {
                let f = random_hermitian(algebra, codomain, rng);
                if let Some(gram) = check_functional(&mut c, &f) {
                    check_form(&mut c, gram);
                }
                let g = HermitianFunctional {
                    algebra: algebra.clone(),
                    codomain: codomain.clone(),
                    values: (0..n).map(|_| random_coords(s, dx, rng)).collect(),
                };
                check_functional(&mut c, &g);
                check_form(&mut c, (0..n * n).map(|_| random_coords(s, dx, rng)).collect());
            }
        }
    }
    Ok(c.finish())
}

fn show_gram<E: core::fmt::Display>(g: &[Vec<E>]) -> String {
    let parts: Vec<String> = g.iter().map(|v| show_value(v)).collect();
    format!("[{}]", parts.join(", "))
}

/// Lets callers match a Gram from JSON with a specific codomain.
pub fn form_from_gram<S: InvolutiveSemiring + Clone>(
    algebra: Arc<StarAlgebra<S>>,
    codomain: Arc<SelfConjugate<S::Elem>>,
    rows: Vec<Vec<Vec<S::Elem>>>,
) -> Result<SesquiForm<S>, GnsError> {
    let n = algebra.dim();
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(GnsError::Shape(format!("Gram must be {n}x{n}")));
    }
    SesquiForm::new(algebra, codomain, rows.into_iter().flatten().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fmod::Matrix;
    use crate::rng_from_seed;
    use crate::scalars::{GaussianRational, GaussianRationals, Gf9Field, Rational};
    use crate::staralg::{function_algebra, group_algebra, matrix_algebra, GroupTable};
    use crate::words::symmetric_group_table;

    fn g(re: Rational, im: i64) -> GaussianRational {
        GaussianRational::new(re, Rational::from_integer(im))
    }

    fn half() -> GaussianRational {
        g(Rational::new(1, 2), 0)
    }

    fn zero() -> GaussianRational {
        GaussianRational::from_ints(0, 0)
    }

    fn mat2() -> Arc<StarAlgebra<GaussianRationals>> {
        Arc::new(matrix_algebra(&GaussianRationals, 2))
    }

    fn trace_half(alg: &Arc<StarAlgebra<GaussianRationals>>) -> HermitianFunctional<GaussianRationals> {
        HermitianFunctional::scalar(alg.clone(), alloc::vec![half(), zero(), zero(), half()]).unwrap()
    }

    // Independent oracle: the Gram of ½·tr(a*·b) from explicit 2×2 matrices.
    fn trace_oracle(i: usize, j: usize) -> GaussianRational {
        let unit = |p: usize| -> [[i64; 2]; 2] {
            let mut m = [[0; 2]; 2];
            m[p / 2][p % 2] = 1;
            m
        };
        let (a, b) = (unit(i), unit(j));
        let a_star = [[a[0][0], a[1][0]], [a[0][1], a[1][1]]];
        let mut tr = 0;
        for r in 0..2 {
            for k in 0..2 {
                tr += a_star[r][k] * b[k][r];
            }
        }
        g(Rational::new(tr, 2), 0)
    }

    #[test]
    fn trace_half_gram_is_half_identity() {
        let alg = mat2();
        let p = state2ip(&trace_half(&alg)).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                let expected = if i == j { half() } else { zero() };
                assert_eq!(p.entry(i, j), &[expected.clone()]);
                assert_eq!(p.entry(i, j), &[trace_oracle(i, j)]);
            }
        }
        let f = ip2state(&p).unwrap();
        assert_eq!(f.values()[0], alloc::vec![half()]);
        assert_eq!(f.values()[1], alloc::vec![zero()]);
        assert_eq!(is_state(&trace_half(&alg)), Ok(true));
    }

    #[test]
    fn zero_functional_and_form() {
        let alg = mat2();
        let f = HermitianFunctional::scalar(alg.clone(), alloc::vec![zero(); 4]).unwrap();
        let p = state2ip(&f).unwrap();
        assert!(p.gram().iter().all(|v| v == &[zero()]));
        assert_eq!(ip2state(&p).unwrap(), f);
        assert!(check_condition_a(&p).passed());
        assert_eq!(is_state(&f), Ok(false));
    }

    #[test]
    fn unnormalised_trace_is_not_a_state() {
        let alg = mat2();
        let one = GaussianRational::from_ints(1, 0);
        let f = HermitianFunctional::scalar(alg, alloc::vec![one.clone(), zero(), zero(), one]).unwrap();
        assert_eq!(is_state(&f), Ok(false));
    }

    #[test]
    fn function_algebra_point_evaluation() {
        let s = GaussianRationals;
        let alg = Arc::new(function_algebra(&s, 2));
        let one = GaussianRational::from_ints(1, 0);
        let f = HermitianFunctional::scalar(alg, alloc::vec![one.clone(), zero()]).unwrap();
        let p = state2ip(&f).unwrap();
        let gram: Vec<_> = p.gram().iter().map(|v| v[0].clone()).collect();
        assert_eq!(gram, alloc::vec![one, zero(), zero(), zero()]);
    }

    #[test]
    fn condition_b_example_and_literal_counterexample() {
        let alg = mat2();
        let p = state2ip(&trace_half(&alg)).unwrap();
        let e = |name: &str| alg.basis_vector(alg.module().index_of(name).unwrap());
        // p(E11·E12, E21) = 0 = p(E11, E21·E21)
        assert_eq!(p.eval(&alg.mul(&e("E11"), &e("E12")), &e("E21")), alloc::vec![zero()]);
        assert_eq!(p.eval(&e("E11"), &alg.mul(&e("E21"), &e("E21"))), alloc::vec![zero()]);
        assert!(check_condition_b(&p).passed());
        // The literal reading fails: p(E12·E21, E11) = ½ but p(E12, E12·E11) = 0.
        assert_eq!(p.eval(&alg.mul(&e("E12"), &e("E21")), &e("E11")), alloc::vec![half()]);
        assert_eq!(p.eval(&e("E12"), &alg.mul(&alg.involve(&e("E21")), &e("E11"))), alloc::vec![zero()]);
        assert!(!check_condition_b_literal(&p).passed());
    }

    #[test]
    fn tampered_gram_is_rejected() {
        let alg = mat2();
        let p = state2ip(&trace_half(&alg)).unwrap();
        let mut rows = p.gram_rows();
        rows[0][1] = alloc::vec![GaussianRational::from_ints(0, 1)];
        let bad = form_from_gram(alg.clone(), p.codomain().clone(), rows).unwrap();
        assert!(matches!(ip2state(&bad), Err(GnsError::ConditionA { .. }) | Err(GnsError::ConditionB { .. })));
        assert!(!check_condition_a(&bad).passed());
    }

    #[test]
    fn non_hermitian_array_fails_condition_a() {
        let alg = mat2();
        let mut rows = alloc::vec![alloc::vec![zero(); 4]; 4];
        rows[0][0] = GaussianRational::from_ints(0, 1);
        let p = SesquiForm::scalar(alg, rows).unwrap();
        let r = check_condition_a(&p);
        assert!(!r.passed());
        assert!(r.failures().next().unwrap().witness.as_ref().unwrap().starts_with("a=E11"));
    }

    #[test]
    fn non_hermitian_functional_is_rejected() {
        let alg = mat2();
        let f = HermitianFunctional::scalar(alg, alloc::vec![GaussianRational::from_ints(0, 1), zero(), zero(), zero()])
            .unwrap();
        assert!(matches!(state2ip(&f), Err(GnsError::NotHermitian { .. })));
    }

    #[test]
    fn exhaustive_function_algebra_gf9() {
        let s = Gf9Field;
        let alg = Arc::new(function_algebra(&s, 2));
        let r = roundtrip_check(&alg, &Arc::new(scalar_codomain(&s)), 10, &mut rng_from_seed(0)).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.law("hermitian_iff_condition_a").unwrap().checked, 81);
        // 9 hermitian functionals, each giving one round-trip check per direction
        assert_eq!(r.law("roundtrip_functional").unwrap().checked, 9);
        assert_eq!(r.law("roundtrip_form").unwrap().checked, 9);
    }

    #[test]
    fn sampled_roundtrips() {
        let alg = mat2();
        let r = roundtrip_check(&alg, &Arc::new(scalar_codomain(&GaussianRationals)), 30, &mut rng_from_seed(5)).unwrap();
        assert!(r.passed(), "{r:?}");
        let s3 = Arc::new(group_algebra(&Gf9Field, &GroupTable::new(symmetric_group_table(3)).unwrap()));
        let r = roundtrip_check(&s3, &Arc::new(scalar_codomain(&Gf9Field)), 20, &mut rng_from_seed(5)).unwrap();
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn vector_valued_codomain() {
        let s = GaussianRationals;
        let rows = alloc::vec![
            alloc::vec![GaussianRational::from_ints(0, 0), GaussianRational::from_ints(0, 1)],
            alloc::vec![GaussianRational::from_ints(0, 1), GaussianRational::from_ints(0, 0)],
        ];
        let x = SelfConjugate::new(&s, FreeModule::standard(2), Matrix::from_rows(rows).unwrap()).unwrap();
        let r = roundtrip_check(&mat2(), &Arc::new(x), 20, &mut rng_from_seed(8)).unwrap();
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn noncommutative_non_reversing_is_refused() {
        let alg = Arc::new(crate::staralg::entrywise_matrix_algebra(&GaussianRationals, 2));
        let f = HermitianFunctional::scalar(alg, alloc::vec![zero(); 4]).unwrap();
        assert_eq!(state2ip(&f), Err(GnsError::NotReversing));
    }
}
