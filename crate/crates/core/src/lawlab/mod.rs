//! Coherence laws of involutive categories, checked on finite instances.
//!
//! An instance is anything implementing [`FinInvCat`]: finite sets with the
//! trivial involution, finite posets with order reversal, and free modules
//! over an involutive semiring with conjugation. Self-conjugates over any
//! instance form a new instance, [`ScCat`], so the same generic checks run on
//! `C` and on `SC(C)`.
//!
//! Module conventions follow [`crate::fmod`]: a morphism `X̄ → Y` is stored
//! by the matrix acting on conjugated coordinates, so a self-conjugate
//! `j: X̄ → X` is its matrix `J` and `f̄` is `conj(F)`.

mod adjunction;
mod algebras;
mod checks;
mod functors;
mod instances;
mod registry;

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use rand::RngCore;
use thiserror::Error;

pub use adjunction::{check_adjunction_34, enumerate_selfconj, involution_count, involutions, AdjunctionCounts};
pub use algebras::{check_def43_free_adjunction, check_prop63, check_prop63_fault, check_writer_monad, ModuleInvolution};
pub use checks::{
    check_functor_involutive, check_iota_coherence, check_monoidal_7, check_sc_lift, check_sc_product,
    is_self_conjugate, nu_inverse_formula, xi_inverse_formula, zeta_inverse_formula,
};
pub use functors::{Forgetful, IdentityFunctor, InvFunctor, MultisetFunctor, WriterFunctor};
pub use instances::{FinMap, FinPosetRev, FinSetTriv, ModSConj, Poset, ScCat};
pub use registry::{registry, run, RegistryEntry, SUITES};

/// Hom-sets with at most this many candidate maps are enumerated.
pub const HOM_LIMIT: usize = 4096;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum LawlabError {
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("suite `{suite}` has no instance `{instance}`")]
    UnknownInstance { suite: String, instance: String },
    #[error("{what} is {size}, the maximum is {max}")]
    TooLarge { what: &'static str, size: usize, max: usize },
}

/// An object together with a self-conjugate structure `j: X̄ → X`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ScObject<O, M> {
    pub object: O,
    pub j: M,
}

impl<O: fmt::Debug, M: fmt::Debug> fmt::Debug for ScObject<O, M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, j={:?})", self.object, self.j)
    }
}

/// A hom-set or a sample of one.
#[derive(Clone, Debug)]
pub struct Homs<M> {
    pub maps: Vec<M>,
    pub exhaustive: bool,
}

pub type ObjOf<C> = <C as FinInvCat>::Obj;
pub type MorOf<C> = <C as FinInvCat>::Mor;
pub type ScObj<C> = ScObject<ObjOf<C>, MorOf<C>>;

/// A finite involutive category: an involution functor `X ↦ X̄` with a
/// natural isomorphism `ι: X → X̄̄`.
///
/// Morphisms do not carry their objects; callers pass domain and codomain
/// where it matters.
pub trait FinInvCat {
    type Obj: Clone + PartialEq + fmt::Debug;
    type Mor: Clone + PartialEq + fmt::Debug;

    fn name(&self) -> String;
    /// Objects the checks range over.
    fn objects(&self) -> Vec<Self::Obj>;
    fn conj_obj(&self, x: &Self::Obj) -> Self::Obj;
    fn conj_mor(&self, f: &Self::Mor) -> Self::Mor;
    fn identity(&self, x: &Self::Obj) -> Self::Mor;
    /// `g ∘ f`.
    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Self::Mor;
    fn is_hom(&self, f: &Self::Mor, dom: &Self::Obj, cod: &Self::Obj) -> bool;
    /// All maps when there are at most [`HOM_LIMIT`] candidates, otherwise
    /// about `budget` sampled ones.
    fn homs(&self, dom: &Self::Obj, cod: &Self::Obj, budget: usize, rng: &mut dyn RngCore) -> Homs<Self::Mor>;
    /// `ι_X: X → X̄̄`.
    fn iota(&self, x: &Self::Obj) -> Self::Mor;
    fn iota_inv(&self, x: &Self::Obj) -> Self::Mor;
    /// Inverse found directly from the representation, if `f` is invertible.
    fn invert(&self, f: &Self::Mor, dom: &Self::Obj, cod: &Self::Obj) -> Option<Self::Mor>;
    /// Candidate self-conjugates `X̄ → X` on `x`.
    fn self_conjugates(&self, x: &Self::Obj) -> Vec<Self::Mor>;

    fn is_object(&self, _x: &Self::Obj) -> bool {
        true
    }

    /// Morphisms `(X, j_X) → (Y, j_Y)` of self-conjugates.
    fn sc_homs(
        &self,
        dom: &ScObject<Self::Obj, Self::Mor>,
        cod: &ScObject<Self::Obj, Self::Mor>,
        budget: usize,
        rng: &mut dyn RngCore,
    ) -> Homs<Self::Mor> {
        let all = self.homs(&dom.object, &cod.object, budget, rng);
        let maps = all
            .maps
            .into_iter()
            .filter(|f| self.compose(f, &dom.j) == self.compose(&cod.j, &self.conj_mor(f)))
            .collect();
        Homs { maps, exhaustive: all.exhaustive }
    }
}

/// Monoidal structure with `ζ: I → Ī` and `ξ: X̄ ⊗ Ȳ → (X ⊗ Y)‾`.
pub trait MonoidalInvCat: FinInvCat {
    fn unit(&self) -> Self::Obj;
    fn tensor(&self, x: &Self::Obj, y: &Self::Obj) -> Self::Obj;
    fn tensor_mor(&self, f: &Self::Mor, g: &Self::Mor) -> Self::Mor;
    fn zeta(&self) -> Self::Mor;
    fn xi(&self, x: &Self::Obj, y: &Self::Obj) -> Self::Mor;
    /// `X ⊗ (Y ⊗ Z) → (X ⊗ Y) ⊗ Z`.
    fn alpha(&self, x: &Self::Obj, y: &Self::Obj, z: &Self::Obj) -> Self::Mor;
    /// `I ⊗ X → X`.
    fn lambda(&self, x: &Self::Obj) -> Self::Mor;
    /// `X ⊗ I → X`.
    fn rho(&self, x: &Self::Obj) -> Self::Mor;
    /// `X ⊗ Y → Y ⊗ X`.
    fn gamma(&self, x: &Self::Obj, y: &Self::Obj) -> Self::Mor;
}

/// Binary products.
pub trait CartesianInvCat: FinInvCat {
    fn product(&self, x: &Self::Obj, y: &Self::Obj) -> Self::Obj;
    /// Projection `X × Y → X` (`k = 0`) or `→ Y` (`k = 1`).
    fn proj(&self, x: &Self::Obj, y: &Self::Obj, k: usize) -> Self::Mor;
    /// `⟨f, g⟩: Z → X × Y`.
    fn pair(&self, f: &Self::Mor, g: &Self::Mor, x: &Self::Obj, y: &Self::Obj) -> Self::Mor;
}
