//! Involutive functors `F` with their distributive laws `ν: F(X̄) → F(X)‾`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{FinInvCat, FinMap, FinSetTriv, ModSConj, MorOf, ObjOf, ScCat, ScObj};
use crate::fmod::Matrix;
use crate::multiset::{self, Multiset};
use crate::scalars::InvolutiveSemiring;
use crate::staralg::{StarAlgebra, StarError};
use crate::words::Mode;

pub trait InvFunctor {
    type Dom: FinInvCat;
    type Cod: FinInvCat;

    fn name(&self) -> String;
    fn dom(&self) -> &Self::Dom;
    fn cod(&self) -> &Self::Cod;
    fn obj(&self, x: &ObjOf<Self::Dom>) -> ObjOf<Self::Cod>;
    fn mor(&self, f: &MorOf<Self::Dom>) -> MorOf<Self::Cod>;
    /// `ν_X: F(X̄) → F(X)‾`.
    fn nu(&self, x: &ObjOf<Self::Dom>) -> MorOf<Self::Cod>;
}

/// The identity functor with `ν = id`.
#[derive(Clone, Debug)]
pub struct IdentityFunctor<C> {
    cat: C,
}

impl<C: FinInvCat> IdentityFunctor<C> {
    pub fn new(cat: C) -> Self {
        Self { cat }
    }
}

impl<C: FinInvCat> InvFunctor for IdentityFunctor<C> {
    type Dom = C;
    type Cod = C;

    fn name(&self) -> String {
        format!("id-{}", self.cat.name())
    }
    fn dom(&self) -> &C {
        &self.cat
    }
    fn cod(&self) -> &C {
        &self.cat
    }
    fn obj(&self, x: &C::Obj) -> C::Obj {
        x.clone()
    }
    fn mor(&self, f: &C::Mor) -> C::Mor {
        f.clone()
    }
    fn nu(&self, x: &C::Obj) -> C::Mor {
        self.cat.identity(&self.cat.conj_obj(x))
    }
}

/// The forgetful functor `SC(C) → C`, involutive via the identity.
#[derive(Clone)]
pub struct Forgetful<C: FinInvCat> {
    sc: ScCat<C>,
}

impl<C: FinInvCat> Forgetful<C> {
    pub fn new(sc: ScCat<C>) -> Self {
        Self { sc }
    }
}

impl<C: FinInvCat> InvFunctor for Forgetful<C> {
    type Dom = ScCat<C>;
    type Cod = C;

    fn name(&self) -> String {
        format!("forget-{}", self.sc.name())
    }
    fn dom(&self) -> &ScCat<C> {
        &self.sc
    }
    fn cod(&self) -> &C {
        self.sc.base()
    }
    fn obj(&self, x: &ScObj<C>) -> C::Obj {
        x.object.clone()
    }
    fn mor(&self, f: &C::Mor) -> C::Mor {
        f.clone()
    }
    fn nu(&self, x: &ScObj<C>) -> C::Mor {
        let b = self.sc.base();
        b.identity(&b.conj_obj(&x.object))
    }
}

/// The multiset functor `M_S` on finite sets for an enumerable `S`.
///
/// `M_S({0..n})` is the finite set of `|S|^n` multisets, each encoded by its
/// coefficient digits in base `|S|` (key 0 least significant). `F(f)` and
/// `ν` are computed by decoding, applying [`multiset::map`] or
/// [`multiset::nu`], and encoding again.
#[derive(Clone, Debug)]
pub struct MultisetFunctor<S: InvolutiveSemiring> {
    s: S,
    elems: Vec<S::Elem>,
    dom: FinSetTriv,
    cod: FinSetTriv,
}

impl<S: InvolutiveSemiring + Clone> MultisetFunctor<S> {
    /// `None` unless `S` is enumerable.
    pub fn new(s: S, dom: FinSetTriv) -> Option<Self> {
        let elems = s.elements()?;
        let q = elems.len();
        let sizes = dom.objects().into_iter().map(|n| q.pow(n as u32)).collect();
        Some(Self { s, elems, dom, cod: FinSetTriv::new(sizes) })
    }

    pub fn scalars(&self) -> &S {
        &self.s
    }

    pub fn decode(&self, n: usize, mut code: usize) -> Multiset<usize, S::Elem> {
        let q = self.elems.len();
        let entries = (0..n).map(|k| {
            let digit = code % q;
            code /= q;
            (k, self.elems[digit].clone())
        });
        Multiset::from_entries(&self.s, entries.collect::<Vec<_>>())
    }

    pub fn encode(&self, n: usize, phi: &Multiset<usize, S::Elem>) -> usize {
        let q = self.elems.len();
        (0..n).rev().fold(0, |acc, k| {
            let c = phi.coeff(&self.s, &k);
            acc * q + self.elems.iter().position(|e| *e == c).expect("enumerated scalar")
        })
    }

    fn size(&self, n: usize) -> usize {
        self.elems.len().pow(n as u32)
    }
}

impl<S: InvolutiveSemiring + Clone> InvFunctor for MultisetFunctor<S> {
    type Dom = FinSetTriv;
    type Cod = FinSetTriv;

    fn name(&self) -> String {
        format!("multiset-{}-{}", self.s.name(), self.dom.name())
    }
    fn dom(&self) -> &FinSetTriv {
        &self.dom
    }
    fn cod(&self) -> &FinSetTriv {
        &self.cod
    }
    fn obj(&self, x: &usize) -> usize {
        self.size(*x)
    }
    fn mor(&self, f: &FinMap) -> FinMap {
        let map = (0..self.size(f.dom()))
            .map(|code| {
                let phi = self.decode(f.dom(), code);
                self.encode(f.cod(), &multiset::map(&self.s, |k: &usize| f.at(*k), &phi))
            })
            .collect();
        FinMap::new(map, self.size(f.cod())).expect("codes in range")
    }
    fn nu(&self, x: &usize) -> FinMap {
        let map = (0..self.size(*x)).map(|code| self.encode(*x, &multiset::nu(&self.s, &self.decode(*x, code)))).collect();
        FinMap::new(map, self.size(*x)).expect("codes in range")
    }
}

/// The writer functor `M ⊗ (−)` on free modules for a non-reversing
/// involutive algebra `M`, with `ν_X = ξ ∘ (j⁻¹ ⊗ id)`, whose matrix is
/// `conj(J_M) ⊗ I`.
#[derive(Clone, Debug)]
pub struct WriterFunctor<S: InvolutiveSemiring> {
    alg: StarAlgebra<S>,
    cat: ModSConj<S>,
}

impl<S: InvolutiveSemiring + Clone> WriterFunctor<S> {
    pub fn new(alg: StarAlgebra<S>, cat: ModSConj<S>) -> Result<Self, StarError> {
        if alg.mode() != Mode::NonReversing {
            return Err(StarError::RequiresNonReversing("the writer monad"));
        }
        Ok(Self { alg, cat })
    }

    pub fn algebra(&self) -> &StarAlgebra<S> {
        &self.alg
    }
}

impl<S: InvolutiveSemiring + Clone> InvFunctor for WriterFunctor<S> {
    type Dom = ModSConj<S>;
    type Cod = ModSConj<S>;

    fn name(&self) -> String {
        format!("writer-{}", self.alg.name())
    }
    fn dom(&self) -> &ModSConj<S> {
        &self.cat
    }
    fn cod(&self) -> &ModSConj<S> {
        &self.cat
    }
    fn obj(&self, x: &usize) -> usize {
        self.alg.dim() * x
    }
    fn mor(&self, f: &Matrix<S::Elem>) -> Matrix<S::Elem> {
        let s = self.alg.scalars();
        Matrix::identity(s, self.alg.dim()).kron(s, f)
    }
    fn nu(&self, x: &usize) -> Matrix<S::Elem> {
        let s = self.alg.scalars();
        self.alg.j().conj(s).kron(s, &Matrix::identity(s, *x))
    }
}
