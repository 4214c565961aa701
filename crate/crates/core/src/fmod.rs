//! Finite-dimensional free modules over an involutive semiring.
//!
//! The conjugate module `V̄` has the same vectors as `V` with scalar action
//! twisted by conjugation. Here it is never materialised: a vector of `V̄` is
//! stored by its coordinates in `V`, and conjugation is pushed into maps. With
//! that convention a self-conjugate `j: V̄ → V` is a matrix `J` with
//! `J·conj(J) = I`, acting as `x ↦ J·conj(x)`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use rand::{Rng, RngCore};
use thiserror::Error;

use crate::report::{Checker, Report};
use crate::scalars::InvolutiveSemiring;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum FmodError {
    #[error("shape mismatch: expected {expected}, found {found}")]
    ShapeMismatch { expected: String, found: String },
    #[error("duplicate basis name `{0}`")]
    DuplicateBasis(String),
    #[error("not a self-conjugate: J·conj(J) ≠ I at ({row}, {col})")]
    NotSelfConjugate { row: usize, col: usize },
    #[error("ragged matrix: row {row} has {found} entries, expected {expected}")]
    Ragged { row: usize, expected: usize, found: usize },
}

fn shape_err(expected: impl fmt::Display, found: impl fmt::Display) -> FmodError {
    FmodError::ShapeMismatch { expected: expected.to_string(), found: found.to_string() }
}

/// A free module, identified by its ordered basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FreeModule {
    basis: Arc<[String]>,
}

impl FreeModule {
    pub fn new<I, T>(basis: I) -> Result<Self, FmodError>
    where
        I: IntoIterator<Item = T>,
        T: Into<String>,
    {
        let basis: Vec<String> = basis.into_iter().map(Into::into).collect();
        for (i, b) in basis.iter().enumerate() {
            if basis[..i].contains(b) {
                return Err(FmodError::DuplicateBasis(b.clone()));
            }
        }
        Ok(Self { basis: basis.into() })
    }

    /// Basis `e1, …, en`.
    pub fn standard(dim: usize) -> Self {
        Self { basis: (1..=dim).map(|i| format!("e{i}")).collect::<Vec<_>>().into() }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.basis.iter().position(|b| b == name)
    }
}

impl fmt::Debug for FreeModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FreeModule{:?}", &*self.basis)
    }
}

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone + Eq> Matrix<E> {
    pub fn from_rows(rows: Vec<Vec<E>>) -> Result<Self, FmodError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != c {
                return Err(FmodError::Ragged { row: i, expected: c, found: row.len() });
            }
            data.extend(row);
        }
        Ok(Self { rows: r, cols: c, data })
    }

    /// Panics if `data.len() != rows * cols`.
    pub fn from_flat(rows: usize, cols: usize, data: Vec<E>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data length");
        Self { rows, cols, data }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> E) -> Self {
        Self { rows, cols, data: (0..rows * cols).map(|k| f(k / cols.max(1), k % cols.max(1))).collect() }
    }

    pub fn zeros<S: InvolutiveSemiring<Elem = E>>(s: &S, rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: alloc::vec![s.zero(); rows * cols] }
    }

    pub fn identity<S: InvolutiveSemiring<Elem = E>>(s: &S, n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { s.one() } else { s.zero() })
    }

    /// The matrix sending `e_j` to `e_{perm[j]}`.
    pub fn permutation<S: InvolutiveSemiring<Elem = E>>(s: &S, perm: &[usize]) -> Self {
        let n = perm.len();
        Self::from_fn(n, n, |i, j| if perm[j] == i { s.one() } else { s.zero() })
    }

    pub fn diagonal<S: InvolutiveSemiring<Elem = E>>(s: &S, diag: &[E]) -> Self {
        Self::from_fn(diag.len(), diag.len(), |i, j| if i == j { diag[i].clone() } else { s.zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: E) {
        self.data[i * self.cols + j] = v;
    }

    pub fn as_flat(&self) -> &[E] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<E>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<E> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Panics on a shape mismatch.
    pub fn mul<S: InvolutiveSemiring<Elem = E>>(&self, s: &S, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix product shape");
        let mut data = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = s.zero();
                for k in 0..self.cols {
                    let a = self.get(i, k);
                    if s.is_zero(a) {
                        continue;
                    }
                    acc = s.add(&acc, &s.mul(a, other.get(k, j)));
                }
                data.push(acc);
            }
        }
        Self { rows: self.rows, cols: other.cols, data }
    }

    /// Matrix-vector product. Panics on a shape mismatch.
    pub fn apply<S: InvolutiveSemiring<Elem = E>>(&self, s: &S, x: &[E]) -> Vec<E> {
        assert_eq!(self.cols, x.len(), "matrix-vector shape");
        (0..self.rows)
            .map(|i| {
                let mut acc = s.zero();
                for (a, b) in self.row(i).iter().zip(x) {
                    if !s.is_zero(a) && !s.is_zero(b) {
                        acc = s.add(&acc, &s.mul(a, b));
                    }
                }
                acc
            })
            .collect()
    }

    /// Entrywise sum. Panics on a shape mismatch.
    pub fn add<S: InvolutiveSemiring<Elem = E>>(&self, s: &S, other: &Self) -> Self {
        assert_eq!(self.shape(), other.shape(), "matrix sum shape");
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| s.add(a, b)).collect(),
        }
    }

    pub fn scale<S: InvolutiveSemiring<Elem = E>>(&self, s: &S, c: &E) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| s.mul(c, a)).collect() }
    }

    /// Entrywise conjugation.
    pub fn conj<S: InvolutiveSemiring<Elem = E>>(&self, s: &S) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| s.conj(a)).collect() }
    }

    /// Kronecker product; row `(i, k)` of the result is `i * other.rows + k`.
    pub fn kron<S: InvolutiveSemiring<Elem = E>>(&self, s: &S, other: &Self) -> Self {
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        Self::from_fn(r, c, |i, j| {
            s.mul(self.get(i / other.rows, j / other.cols), other.get(i % other.rows, j % other.cols))
        })
    }

    pub fn block_diag<S: InvolutiveSemiring<Elem = E>>(&self, s: &S, other: &Self) -> Self {
        let (r, c) = (self.rows + other.rows, self.cols + other.cols);
        Self::from_fn(r, c, |i, j| {
            if i < self.rows && j < self.cols {
                self.get(i, j).clone()
            } else if i >= self.rows && j >= self.cols {
                other.get(i - self.rows, j - self.cols).clone()
            } else {
                s.zero()
            }
        })
    }

    pub fn is_identity<S: InvolutiveSemiring<Elem = E>>(&self, s: &S) -> bool {
        self.rows == self.cols && *self == Self::identity(s, self.rows)
    }

    /// First entry where `self` differs from the identity.
    pub fn identity_defect<S: InvolutiveSemiring<Elem = E>>(&self, s: &S) -> Option<(usize, usize)> {
        let (one, zero) = (s.one(), s.zero());
        (0..self.rows)
            .flat_map(|i| (0..self.cols).map(move |j| (i, j)))
            .find(|&(i, j)| *self.get(i, j) != if i == j { one.clone() } else { zero.clone() })
    }
}

impl<E: fmt::Display> fmt::Debug for Matrix<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self.data[i * self.cols + j])?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

/// Formats a coordinate list as `(a, b, c)`.
pub fn show_coords<E: fmt::Display>(x: &[E]) -> String {
    let mut out = String::from("(");
    for (i, e) in x.iter().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        out.push_str(&e.to_string());
    }
    out.push(')');
    out
}

/// The `i`-th standard basis vector of `S^n`.
pub fn basis_vector<S: InvolutiveSemiring>(s: &S, n: usize, i: usize) -> Vec<S::Elem> {
    (0..n).map(|k| if k == i { s.one() } else { s.zero() }).collect()
}

pub fn conj_coords<S: InvolutiveSemiring>(s: &S, x: &[S::Elem]) -> Vec<S::Elem> {
    x.iter().map(|a| s.conj(a)).collect()
}

pub fn add_coords<S: InvolutiveSemiring>(s: &S, x: &[S::Elem], y: &[S::Elem]) -> Vec<S::Elem> {
    x.iter().zip(y).map(|(a, b)| s.add(a, b)).collect()
}

pub fn scale_coords<S: InvolutiveSemiring>(s: &S, c: &S::Elem, x: &[S::Elem]) -> Vec<S::Elem> {
    x.iter().map(|a| s.mul(c, a)).collect()
}

/// Kronecker product of coordinate vectors, `(x ⊗ y)[i·|y| + k] = x[i]·y[k]`.
pub fn kron_coords<S: InvolutiveSemiring>(s: &S, x: &[S::Elem], y: &[S::Elem]) -> Vec<S::Elem> {
    x.iter().flat_map(|a| y.iter().map(move |b| s.mul(a, b))).collect()
}

pub fn random_coords<S: InvolutiveSemiring>(s: &S, n: usize, rng: &mut dyn RngCore) -> Vec<S::Elem> {
    (0..n).map(|_| s.sample(rng)).collect()
}

/// Every coordinate vector of `S^n` for an enumerable `S`.
pub fn all_coords<E: Clone>(elems: &[E], n: usize) -> Vec<Vec<E>> {
    let mut out = alloc::vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|p: Vec<E>| {
                elems.iter().map(move |e| {
                    let mut q = p.clone();
                    q.push(e.clone());
                    q
                })
            })
            .collect();
    }
    out
}

#[derive(Clone, PartialEq, Eq)]
pub struct Vector<E> {
    module: FreeModule,
    coords: Vec<E>,
}

impl<E: Clone + Eq> Vector<E> {
    pub fn new(module: FreeModule, coords: Vec<E>) -> Result<Self, FmodError> {
        if coords.len() != module.dim() {
            return Err(shape_err(format!("{} coordinates", module.dim()), coords.len()));
        }
        Ok(Self { module, coords })
    }

    pub fn module(&self) -> &FreeModule {
        &self.module
    }

    pub fn coords(&self) -> &[E] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<E> {
        self.coords
    }

    pub fn scale<S: InvolutiveSemiring<Elem = E>>(&self, s: &S, c: &E) -> Self {
        Self { module: self.module.clone(), coords: scale_coords(s, c, &self.coords) }
    }
}

impl<E: fmt::Display> fmt::Debug for Vector<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&show_coords(&self.coords))
    }
}

/// Same vector read in the conjugate module: coordinates conjugated.
pub fn conj_vector<S: InvolutiveSemiring>(s: &S, x: &Vector<S::Elem>) -> Vector<S::Elem> {
    Vector { module: x.module.clone(), coords: conj_coords(s, &x.coords) }
}

/// A linear map; the matrix has one row per codomain basis vector.
#[derive(Clone, PartialEq, Eq)]
pub struct LinMap<E> {
    dom: FreeModule,
    cod: FreeModule,
    matrix: Matrix<E>,
}

impl<E: Clone + Eq> LinMap<E> {
    pub fn new(dom: FreeModule, cod: FreeModule, matrix: Matrix<E>) -> Result<Self, FmodError> {
        if matrix.shape() != (cod.dim(), dom.dim()) {
            return Err(shape_err(
                format!("{}x{}", cod.dim(), dom.dim()),
                format!("{}x{}", matrix.rows(), matrix.cols()),
            ));
        }
        Ok(Self { dom, cod, matrix })
    }

    pub fn identity<S: InvolutiveSemiring<Elem = E>>(s: &S, m: &FreeModule) -> Self {
        Self { dom: m.clone(), cod: m.clone(), matrix: Matrix::identity(s, m.dim()) }
    }

    pub fn dom(&self) -> &FreeModule {
        &self.dom
    }

    pub fn cod(&self) -> &FreeModule {
        &self.cod
    }

    pub fn matrix(&self) -> &Matrix<E> {
        &self.matrix
    }

    pub fn apply<S: InvolutiveSemiring<Elem = E>>(&self, s: &S, x: &Vector<E>) -> Result<Vector<E>, FmodError> {
        if x.module != self.dom {
            return Err(shape_err(format!("{:?}", self.dom), format!("{:?}", x.module)));
        }
        Ok(Vector { module: self.cod.clone(), coords: self.matrix.apply(s, &x.coords) })
    }

    /// `self ∘ first`.
    pub fn compose<S: InvolutiveSemiring<Elem = E>>(&self, s: &S, first: &Self) -> Result<Self, FmodError> {
        if first.cod != self.dom {
            return Err(shape_err(format!("{:?}", self.dom), format!("{:?}", first.cod)));
        }
        Ok(Self { dom: first.dom.clone(), cod: self.cod.clone(), matrix: self.matrix.mul(s, &first.matrix) })
    }
}

impl<E: fmt::Display> fmt::Debug for LinMap<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.matrix)
    }
}

/// `f̄: V̄ → W̄`, the entrywise conjugate matrix.
pub fn conj_linmap<S: InvolutiveSemiring>(s: &S, f: &LinMap<S::Elem>) -> LinMap<S::Elem> {
    LinMap { dom: f.dom.clone(), cod: f.cod.clone(), matrix: f.matrix.conj(s) }
}

/// A module with a self-conjugate structure `j = J·conj(−)`.
#[derive(Clone, PartialEq, Eq)]
pub struct SelfConjugate<E> {
    module: FreeModule,
    j: Matrix<E>,
}

impl<E: Clone + Eq> SelfConjugate<E> {
    /// Validates `J·conj(J) = I`.
    pub fn new<S: InvolutiveSemiring<Elem = E>>(s: &S, module: FreeModule, j: Matrix<E>) -> Result<Self, FmodError> {
        let n = module.dim();
        if j.shape() != (n, n) {
            return Err(shape_err(format!("{n}x{n}"), format!("{}x{}", j.rows(), j.cols())));
        }
        if let Some((row, col)) = j.mul(s, &j.conj(s)).identity_defect(s) {
            return Err(FmodError::NotSelfConjugate { row, col });
        }
        Ok(Self { module, j })
    }

    /// Skips validation; used to build deliberately broken instances.
    pub fn new_unchecked(module: FreeModule, j: Matrix<E>) -> Self {
        Self { module, j }
    }

    pub fn module(&self) -> &FreeModule {
        &self.module
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    pub fn j(&self) -> &Matrix<E> {
        &self.j
    }

    pub fn is_valid<S: InvolutiveSemiring<Elem = E>>(&self, s: &S) -> bool {
        self.j.mul(s, &self.j.conj(s)).is_identity(s)
    }

    /// `x ↦ J·conj(x)`. On carriers this map is its own inverse.
    pub fn apply<S: InvolutiveSemiring<Elem = E>>(&self, s: &S, x: &[E]) -> Vec<E> {
        self.j.apply(s, &conj_coords(s, x))
    }

    /// `F` is a morphism of self-conjugates `self → cod` iff `F·J = J'·conj(F)`.
    pub fn is_morphism<S: InvolutiveSemiring<Elem = E>>(&self, s: &S, cod: &Self, f: &Matrix<E>) -> bool {
        f.shape() == (cod.dim(), self.dim()) && f.mul(s, &self.j) == cod.j.mul(s, &f.conj(s))
    }
}

impl<E: fmt::Display> fmt::Debug for SelfConjugate<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SelfConjugate(J={:?})", self.j)
    }
}

/// Coordinatewise conjugation, `J = I`.
pub fn std_selfconj<S: InvolutiveSemiring>(s: &S, module: FreeModule) -> SelfConjugate<S::Elem> {
    let n = module.dim();
    SelfConjugate { module, j: Matrix::identity(s, n) }
}

/// The involution of the category of self-conjugates: `(X, J) ↦ (X̄, conj J)`.
pub fn sc_involution<S: InvolutiveSemiring>(s: &S, c: &SelfConjugate<S::Elem>) -> SelfConjugate<S::Elem> {
    SelfConjugate { module: c.module.clone(), j: c.j.conj(s) }
}

/// Tensor product with basis `a⊗b` in row-major order and `J = J₁ ⊗ J₂`.
pub fn tensor<S: InvolutiveSemiring>(
    s: &S,
    c1: &SelfConjugate<S::Elem>,
    c2: &SelfConjugate<S::Elem>,
) -> SelfConjugate<S::Elem> {
    SelfConjugate { module: tensor_module(&c1.module, &c2.module), j: c1.j.kron(s, &c2.j) }
}

pub fn tensor_module(m1: &FreeModule, m2: &FreeModule) -> FreeModule {
    let basis: Vec<String> =
        m1.basis().iter().flat_map(|a| m2.basis().iter().map(move |b| format!("{a}⊗{b}"))).collect();
    FreeModule { basis: basis.into() }
}

/// Biproduct `M₁ ⊕ M₂` with its injections and projections.
#[derive(Clone)]
pub struct Biproduct<E> {
    pub module: FreeModule,
    pub injections: [LinMap<E>; 2],
    pub projections: [LinMap<E>; 2],
}

/// Basis names are kept when disjoint, otherwise prefixed with `1.` and `2.`.
pub fn biproduct<S: InvolutiveSemiring>(s: &S, m1: &FreeModule, m2: &FreeModule) -> Biproduct<S::Elem> {
    let disjoint = m1.basis().iter().all(|b| m2.index_of(b).is_none());
    let basis: Vec<String> = if disjoint {
        m1.basis().iter().chain(m2.basis()).cloned().collect()
    } else {
        m1.basis().iter().map(|b| format!("1.{b}")).chain(m2.basis().iter().map(|b| format!("2.{b}"))).collect()
    };
    let module = FreeModule { basis: basis.into() };
    let (d1, d2) = (m1.dim(), m2.dim());
    let one_at = |i: usize, j: usize| if i == j { s.one() } else { s.zero() };
    let k1 = Matrix::from_fn(d1 + d2, d1, &one_at);
    let k2 = Matrix::from_fn(d1 + d2, d2, |i, j| one_at(i, j + d1));
    let p1 = k1.transpose();
    let p2 = k2.transpose();
    Biproduct {
        injections: [
            LinMap { dom: m1.clone(), cod: module.clone(), matrix: k1 },
            LinMap { dom: m2.clone(), cod: module.clone(), matrix: k2 },
        ],
        projections: [
            LinMap { dom: module.clone(), cod: m1.clone(), matrix: p1 },
            LinMap { dom: module.clone(), cod: m2.clone(), matrix: p2 },
        ],
        module,
    }
}

/// Self-conjugate on a biproduct: block-diagonal `J`.
pub fn biproduct_selfconj<S: InvolutiveSemiring>(
    s: &S,
    c1: &SelfConjugate<S::Elem>,
    c2: &SelfConjugate<S::Elem>,
) -> SelfConjugate<S::Elem> {
    let b = biproduct(s, &c1.module, &c2.module);
    SelfConjugate { module: b.module, j: c1.j.block_diag(s, &c2.j) }
}

/// Self-conjugate on `Hom(X, Y)`.
///
/// A map `F` (a `dY×dX` matrix) is stored row-major, entry `(r, c)` having
/// basis name `x_c->y_r`. The involution is `F ↦ J_Y·conj(F)·conj(J_X)`,
/// whose matrix on row-major coordinates is `J_Y ⊗ conj(J_X)ᵀ`.
pub fn hom_selfconj<S: InvolutiveSemiring>(
    s: &S,
    cx: &SelfConjugate<S::Elem>,
    cy: &SelfConjugate<S::Elem>,
) -> SelfConjugate<S::Elem> {
    let basis: Vec<String> = cy
        .module
        .basis()
        .iter()
        .flat_map(|y| cx.module.basis().iter().map(move |x| format!("{x}->{y}")))
        .collect();
    SelfConjugate { module: FreeModule { basis: basis.into() }, j: cy.j.kron(s, &cx.j.conj(s).transpose()) }
}

/// The hom involution applied directly to a matrix.
pub fn hom_involution<S: InvolutiveSemiring>(
    s: &S,
    cx: &SelfConjugate<S::Elem>,
    cy: &SelfConjugate<S::Elem>,
    f: &Matrix<S::Elem>,
) -> Matrix<S::Elem> {
    cy.j.mul(s, &f.conj(s)).mul(s, &cx.j.conj(s))
}

/// Which side carries the conjugation for an [`AntilinearMap`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum View {
    /// A linear map `X̄ → Y`; its input is read in the conjugate module.
    FromConjugate,
    /// An antilinear map `X → Y`, `x ↦ M·conj(x)`.
    Antilinear,
}

/// A map that is linear out of a conjugate module, or equivalently
/// antilinear out of the module itself. Transposition flips the reading;
/// the matrix never changes.
#[derive(Clone, PartialEq, Eq)]
pub struct AntilinearMap<E> {
    pub matrix: Matrix<E>,
    pub view: View,
}

impl<E: fmt::Display> fmt::Debug for AntilinearMap<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}({:?})", self.view, self.matrix)
    }
}

impl<E: Clone + Eq> AntilinearMap<E> {
    pub fn transpose(&self) -> Self {
        let view = match self.view {
            View::FromConjugate => View::Antilinear,
            View::Antilinear => View::FromConjugate,
        };
        Self { matrix: self.matrix.clone(), view }
    }

    /// Applies the map in its current reading.
    pub fn apply<S: InvolutiveSemiring<Elem = E>>(&self, s: &S, x: &[E]) -> Vec<E> {
        match self.view {
            View::FromConjugate => self.matrix.apply(s, x),
            View::Antilinear => self.matrix.apply(s, &conj_coords(s, x)),
        }
    }
}

/// A random valid self-conjugate on `S^n`: `J = P·D` for a random
/// involutive permutation `P` and a diagonal `D` of norm-one scalars
/// constant on the orbits of `P`. Falls back to `J = I` when no non-trivial
/// norm-one scalar is found.
pub fn random_selfconj<S: InvolutiveSemiring>(s: &S, n: usize, rng: &mut dyn RngCore) -> SelfConjugate<S::Elem> {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut free: Vec<usize> = (0..n).collect();
    while free.len() >= 2 {
        let a = free.swap_remove(rng.random_range(0..free.len()));
        if rng.random_bool(0.5) {
            let b = free.swap_remove(rng.random_range(0..free.len()));
            perm.swap(a, b);
        }
    }
    let units: Vec<S::Elem> = match s.elements() {
        Some(all) => all.into_iter().filter(|u| s.mul(u, &s.conj(u)) == s.one()).collect(),
        None => (0..64).map(|_| s.sample(rng)).filter(|u| s.mul(u, &s.conj(u)) == s.one()).collect(),
    };
    let mut diag = alloc::vec![s.one(); n];
    for k in 0..n {
        if perm[k] >= k && !units.is_empty() {
            let d = units[rng.random_range(0..units.len())].clone();
            diag[perm[k]] = d.clone();
            diag[k] = d;
        }
    }
    let j = Matrix::permutation(s, &perm).mul(s, &Matrix::diagonal(s, &diag));
    let module = FreeModule::standard(n);
    match SelfConjugate::new(s, module.clone(), j) {
        Ok(c) => c,
        Err(_) => std_selfconj(s, module),
    }
}

/// Checks that linear maps `X⊗Y → Z` correspond exactly to bilinear maps
/// `X×Y → Z` given by their values on basis pairs.
///
/// When `|S|^(dX·dY·dZ)` is at most [`EXHAUSTIVE_LIMIT`] every linear map is enumerated,
/// its restriction to basis tensors is computed through the Kronecker
/// product, and the restriction map is verified to be a bijection onto all
/// basis assignments. Otherwise `budget` bilinear maps are sampled, the
/// factorisation is built and its uniqueness follows from the basis tensors
/// being distinct standard basis vectors. In both modes the factorisation is
/// compared with the bilinear extension on random vector pairs.
pub fn bilinear_universal_check<S: InvolutiveSemiring>(
    s: &S,
    dx: usize,
    dy: usize,
    dz: usize,
    budget: usize,
    rng: &mut dyn RngCore,
) -> Report {
    let cells = dx * dy * dz;
    let elems = s.elements();
    let total = elems.as_ref().and_then(|e| checked_pow(e.len(), cells)).filter(|&t| t <= EXHAUSTIVE_LIMIT);
    let mode = if total.is_some() { "exhaustive" } else { "sampled" };
    let mut c = Checker::new("bilinear", format!("{}-{dx}x{dy}->{dz}-{mode}", s.name()));
    let exists = c.law("factorisation_exists");
    let unique = c.law("factorisation_unique");
    let agrees = c.law("extension_agrees");

    // basis tensors are distinct standard basis vectors of X⊗Y
    let n = dx * dy;
    let tensors: Vec<Vec<S::Elem>> = (0..dx)
        .flat_map(|i| (0..dy).map(move |k| (i, k)))
        .map(|(i, k)| kron_coords(s, &basis_vector(s, dx, i), &basis_vector(s, dy, k)))
        .collect();
    let spans = tensors.iter().enumerate().all(|(p, t)| *t == basis_vector(s, n, p));
    c.record(unique, spans, || "basis tensors are not the standard basis of X⊗Y".into());

    let restrict = |h: &Matrix<S::Elem>| -> Vec<Vec<S::Elem>> { tensors.iter().map(|t| h.apply(s, t)).collect() };
    let agreement = |c: &mut Checker, beta: &[Vec<S::Elem>], h: &Matrix<S::Elem>, rng: &mut dyn RngCore| {
        let x = random_coords(s, dx, rng);
        let y = random_coords(s, dy, rng);
        let lhs = h.apply(s, &kron_coords(s, &x, &y));
        let mut rhs = alloc::vec![s.zero(); dz];
        for i in 0..dx {
            for k in 0..dy {
                let coeff = s.mul(&x[i], &y[k]);
                rhs = add_coords(s, &rhs, &scale_coords(s, &coeff, &beta[i * dy + k]));
            }
        }
        c.record(agrees, lhs == rhs, || format!("x={}, y={}", show_coords(&x), show_coords(&y)));
    };

    match (total, elems) {
        (Some(total), Some(elems)) => {
            // Table-driven so the 9^8 maps of the largest GF(9) case stay fast;
            // restrictions are still computed by applying h to basis tensors.
            let base = elems.len();
            let table = |op: &dyn Fn(&S::Elem, &S::Elem) -> S::Elem| -> Vec<usize> {
                elems.iter().flat_map(|a| elems.iter().map(move |b| (a, b))).map(|(a, b)| position(&elems, &op(a, b))).collect()
            };
            let add_t = table(&|a, b| s.add(a, b));
            let mul_t = table(&|a, b| s.mul(a, b));
            let zero = position(&elems, &s.zero());
            let t_idx: Vec<Vec<usize>> = tensors.iter().map(|t| t.iter().map(|e| position(&elems, e)).collect()).collect();
            let mut samples: Vec<usize> = (0..budget.max(1)).map(|_| rng.random_range(0..total)).collect();
            samples.sort_unstable();
            samples.dedup();
            let mut next_sample = 0;
            let mut seen = alloc::vec![0u64; total.div_ceil(64)];
            let mut hits = 0usize;
            let mut duplicate: Option<Vec<usize>> = None;
            let mut digits = alloc::vec![0usize; cells];
            for code in 0..total {
                let mut idx = 0usize;
                for col in 0..dz {
                    let row = &digits[col * n..(col + 1) * n];
                    for t in &t_idx {
                        let mut acc = zero;
                        for (h, e) in row.iter().zip(t) {
                            acc = add_t[acc * base + mul_t[h * base + e]];
                        }
                        idx = idx * base + acc;
                    }
                }
                let (word, bit) = (idx / 64, 1u64 << (idx % 64));
                if seen[word] & bit != 0 {
                    duplicate.get_or_insert_with(|| digits.clone());
                } else {
                    seen[word] |= bit;
                    hits += 1;
                }
                if samples.get(next_sample) == Some(&code) {
                    next_sample += 1;
                    let h = Matrix::from_flat(dz, n, digits.iter().map(|&d| elems[d].clone()).collect());
                    let beta = restrict(&h);
                    agreement(&mut c, &beta, &h, rng);
                }
                for d in digits.iter_mut().rev() {
                    *d += 1;
                    if *d < base {
                        break;
                    }
                    *d = 0;
                }
            }
            c.record(unique, duplicate.is_none(), || {
                let d = duplicate.clone().unwrap_or_default();
                let h = Matrix::from_flat(dz, n, d.iter().map(|&k| elems[k].clone()).collect());
                format!("two linear maps share a restriction, e.g. h={h:?}")
            });
            c.record(exists, hits == total, || format!("{} of {total} bilinear maps have no factorisation", total - hits));
        }
        _ => {
            for _ in 0..budget.max(1) {
                let beta: Vec<Vec<S::Elem>> = (0..n).map(|_| random_coords(s, dz, rng)).collect();
                let h = Matrix::from_fn(dz, n, |r, p| beta[p][r].clone());
                let back = restrict(&h);
                c.record(exists, back == beta, || format!("β={beta:?}"));
                agreement(&mut c, &beta, &h, rng);
            }
        }
    }
    c.finish()
}

/// Largest number of linear maps enumerated by [`bilinear_universal_check`].
pub const EXHAUSTIVE_LIMIT: usize = 1 << 27;

fn checked_pow(base: usize, exp: usize) -> Option<usize> {
    (0..exp).try_fold(1usize, |acc, _| acc.checked_mul(base))
}

fn position<E: PartialEq>(elems: &[E], e: &E) -> usize {
    elems.iter().position(|x| x == e).expect("closed under the operations")
}

/// Conjugation laws for vectors, maps and self-conjugate constructions on
/// dimensions `1..=max_dim`, with random instances drawn from `rng`.
pub fn check_conjugation_laws<S: InvolutiveSemiring>(
    s: &S,
    max_dim: usize,
    budget: usize,
    rng: &mut dyn RngCore,
) -> Report {
    let mut c = Checker::new("fmod", format!("{}-sampled", s.name()));
    let conj_twice = c.law("conj_vector_involution");
    let scalar_action = c.law("conj_vector_scalar");
    let functorial = c.law("conj_linmap_functor");
    let valid = c.law("selfconj_valid");
    let antilinear = c.law("selfconj_antilinear");
    let sc_twice = c.law("sc_involution_involution");
    let kron_valid = c.law("tensor_valid");
    let bilinear = c.law("tensor_bilinear");
    let kron_conj = c.law("tensor_conj");
    let biproduct_eqs = c.law("biproduct_equations");
    let biproduct_conj = c.law("biproduct_conj");
    let hom_eval = c.law("hom_evaluation");
    let hom_twice = c.law("hom_involution_involution");
    let transpose_law = c.law("transpose_roundtrip");

    for _ in 0..budget.max(1) {
        let d1 = rng.random_range(1..=max_dim.max(1));
        let d2 = rng.random_range(1..=max_dim.max(1));
        let x = random_coords(s, d1, rng);
        let y = random_coords(s, d1, rng);
        let a = s.sample(rng);
        let b = s.sample(rng);
        c.record(conj_twice, conj_coords(s, &conj_coords(s, &x)) == x, || show_coords(&x));
        let lhs = conj_coords(s, &scale_coords(s, &a, &x));
        let rhs = scale_coords(s, &s.conj(&a), &conj_coords(s, &x));
        c.record(scalar_action, lhs == rhs, || format!("s={a}, x={}", show_coords(&x)));

        let f = Matrix::from_fn(d2, d1, |_, _| s.sample(rng));
        let g = Matrix::from_fn(d1, d2, |_, _| s.sample(rng));
        let ok = g.mul(s, &f).conj(s) == g.conj(s).mul(s, &f.conj(s))
            && Matrix::identity(s, d1).conj(s) == Matrix::identity(s, d1);
        c.record(functorial, ok, || format!("f={f:?}, g={g:?}"));

        let c1 = random_selfconj(s, d1, rng);
        let c2 = random_selfconj(s, d2, rng);
        c.record(valid, c1.is_valid(s) && c2.is_valid(s), || format!("{c1:?}, {c2:?}"));
        let lhs = c1.apply(s, &add_coords(s, &scale_coords(s, &a, &x), &scale_coords(s, &b, &y)));
        let rhs = add_coords(
            s,
            &scale_coords(s, &s.conj(&a), &c1.apply(s, &x)),
            &scale_coords(s, &s.conj(&b), &c1.apply(s, &y)),
        );
        c.record(antilinear, lhs == rhs, || format!("{c1:?}, s={a}, t={b}"));
        c.record(sc_twice, sc_involution(s, &sc_involution(s, &c1)) == c1, || format!("{c1:?}"));

        let t = tensor(s, &c1, &c2);
        c.record(kron_valid, t.is_valid(s), || format!("{c1:?} ⊗ {c2:?}"));
        let z = random_coords(s, d2, rng);
        let lhs = kron_coords(s, &scale_coords(s, &a, &x), &z);
        let rhs = scale_coords(s, &a, &kron_coords(s, &x, &z));
        let lhs2 = kron_coords(s, &add_coords(s, &x, &y), &z);
        let rhs2 = add_coords(s, &kron_coords(s, &x, &z), &kron_coords(s, &y, &z));
        c.record(bilinear, lhs == rhs && lhs2 == rhs2, || format!("s={a}, x={}, y={}", show_coords(&x), show_coords(&z)));
        let ok = conj_coords(s, &kron_coords(s, &x, &z)) == kron_coords(s, &conj_coords(s, &x), &conj_coords(s, &z))
            && f.kron(s, &g).conj(s) == f.conj(s).kron(s, &g.conj(s))
            && t.j.conj(s) == c1.j.conj(s).kron(s, &c2.j.conj(s));
        c.record(kron_conj, ok, || format!("x={}, z={}", show_coords(&x), show_coords(&z)));

        let m1 = FreeModule::standard(d1);
        let m2 = FreeModule::standard(d2);
        let bp = biproduct(s, &m1, &m2);
        let pk = |p: usize, k: usize| bp.projections[p].matrix.mul(s, &bp.injections[k].matrix);
        let ok = pk(0, 0).is_identity(s)
            && pk(1, 1).is_identity(s)
            && pk(0, 1) == Matrix::zeros(s, d1, d2)
            && pk(1, 0) == Matrix::zeros(s, d2, d1)
            && bp.injections[0].matrix.mul(s, &bp.projections[0].matrix).add(
                s,
                &bp.injections[1].matrix.mul(s, &bp.projections[1].matrix),
            ) == Matrix::identity(s, d1 + d2);
        c.record(biproduct_eqs, ok, || format!("dims {d1}⊕{d2}"));
        let sum = biproduct_selfconj(s, &c1, &c2);
        let ok = sum.is_valid(s)
            && sum.j.conj(s) == c1.j.conj(s).block_diag(s, &c2.j.conj(s))
            && bp.injections.iter().all(|k| conj_linmap(s, k) == *k)
            && bp.projections.iter().all(|p| conj_linmap(s, p) == *p)
            && sum.is_morphism(s, &c1, &bp.projections[0].matrix)
            && c2.is_morphism(s, &sum, &bp.injections[1].matrix);
        c.record(biproduct_conj, ok, || format!("{c1:?} ⊕ {c2:?}"));

        let h = hom_selfconj(s, &c1, &c2);
        let fy = Matrix::from_fn(d2, d1, |_, _| s.sample(rng));
        let jf = hom_involution(s, &c1, &c2, &fy);
        let xv = random_coords(s, d1, rng);
        let lhs = jf.apply(s, &xv);
        let rhs = c2.apply(s, &fy.apply(s, &c1.apply(s, &xv)));
        let via_j = h.apply(s, fy.as_flat()) == jf.as_flat();
        c.record(hom_eval, lhs == rhs && via_j, || format!("F={fy:?}, x={}", show_coords(&xv)));
        c.record(hom_twice, h.is_valid(s) && hom_involution(s, &c1, &c2, &jf) == fy, || format!("F={fy:?}"));

        let am = AntilinearMap { matrix: f.clone(), view: View::FromConjugate };
        let tr = am.transpose();
        let ok = tr.transpose() == am
            && tr.matrix == am.matrix
            && tr.apply(s, &x) == am.apply(s, &conj_coords(s, &x));
        c.record(transpose_law, ok, || format!("M={f:?}, x={}", show_coords(&x)));
    }
    c.finish()
}

/// Exhaustive evaluation check for the hom self-conjugate: every pair of
/// self-conjugates on dimensions `1..=max_dim` of the form `P·D` built from
/// involutive permutations and norm-one scalars, every basis map `F` and
/// every vector `x`.
pub fn check_hom_evaluation_exhaustive<S: InvolutiveSemiring>(s: &S, max_dim: usize) -> Option<Report> {
    let elems = s.elements()?;
    let mut c = Checker::new("fmod", format!("{}-hom-exhaustive", s.name()));
    let law = c.law("hom_evaluation");
    for dx in 1..=max_dim {
        for dy in 1..=max_dim {
            for cx in structured_selfconjs(s, dx) {
                for cy in structured_selfconjs(s, dy) {
                    for r in 0..dy {
                        for col in 0..dx {
                            let f = Matrix::from_fn(dy, dx, |i, j| if (i, j) == (r, col) { s.one() } else { s.zero() });
                            let g = hom_involution(s, &cx, &cy, &f);
                            for x in all_coords(&elems, dx) {
                                let ok = g.apply(s, &x) == cy.apply(s, &f.apply(s, &cx.apply(s, &x)));
                                c.record(law, ok, || format!("J_X={:?}, J_Y={:?}, F={f:?}", cx.j, cy.j));
                            }
                        }
                    }
                }
            }
        }
    }
    Some(c.finish())
}

/// All self-conjugates `J = P·D` on `S^n` (`n ≤ 2`) with `P` an involutive
/// permutation and `D` a norm-one diagonal constant on orbits.
pub fn structured_selfconjs<S: InvolutiveSemiring>(s: &S, n: usize) -> Vec<SelfConjugate<S::Elem>> {
    let units: Vec<S::Elem> = match s.elements() {
        Some(all) => all.into_iter().filter(|u| s.mul(u, &s.conj(u)) == s.one()).collect(),
        None => alloc::vec![s.one()],
    };
    let module = FreeModule::standard(n);
    let mut out = Vec::new();
    let perms: Vec<Vec<usize>> = match n {
        0 => alloc::vec![Vec::new()],
        1 => alloc::vec![alloc::vec![0]],
        _ => alloc::vec![(0..n).collect(), {
            let mut p: Vec<usize> = (0..n).collect();
            p.swap(0, 1);
            p
        }],
    };
    for perm in perms {
        for diag in all_coords(&units, n) {
            let j = Matrix::permutation(s, &perm).mul(s, &Matrix::diagonal(s, &diag));
            if let Ok(c) = SelfConjugate::new(s, module.clone(), j) {
                if !out.contains(&c) {
                    out.push(c);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng_from_seed;
    use crate::scalars::{Booleans, GaussianRational, GaussianRationals, Gf9, Gf9Field, Rationals};

    type G = GaussianRational;

    fn gi(re: i64, im: i64) -> G {
        G::from_ints(re, im)
    }

    #[test]
    fn conj_vector_examples() {
        let s = GaussianRationals;
        let v = Vector::new(FreeModule::standard(2), alloc::vec![gi(0, 1), gi(2, 0)]).unwrap();
        assert_eq!(conj_vector(&s, &v).coords(), &[gi(0, -1), gi(2, 0)]);
        assert_eq!(conj_vector(&s, &conj_vector(&s, &v)), v);
        let c = gi(1, 1);
        assert_eq!(conj_vector(&s, &v.scale(&s, &c)), conj_vector(&s, &v).scale(&s, &s.conj(&c)));
        assert!(Vector::new(FreeModule::standard(2), alloc::vec![gi(0, 1)]).is_err());
    }

    #[test]
    fn conj_linmap_examples() {
        let s = GaussianRationals;
        let m = FreeModule::standard(1);
        let f = LinMap::new(m.clone(), m.clone(), Matrix::from_rows(alloc::vec![alloc::vec![gi(0, 1)]]).unwrap()).unwrap();
        assert_eq!(conj_linmap(&s, &f).matrix().get(0, 0), &gi(0, -1));
        let id = LinMap::identity(&s, &m);
        assert_eq!(conj_linmap(&s, &id), id);
        let g = f.compose(&s, &f).unwrap();
        assert_eq!(conj_linmap(&s, &g), conj_linmap(&s, &f).compose(&s, &conj_linmap(&s, &f)).unwrap());
    }

    #[test]
    fn std_selfconj_conjugates_coordinates() {
        let s = GaussianRationals;
        let c = std_selfconj(&s, FreeModule::standard(2));
        assert_eq!(c.apply(&s, &[gi(1, 1), gi(0, 0)]), alloc::vec![gi(1, -1), gi(0, 0)]);
        assert!(c.is_valid(&s));
        let r = std_selfconj(&Rationals::default(), FreeModule::standard(2));
        let x = alloc::vec![crate::scalars::Rational::new(1, 2), crate::scalars::Rational::new(-3, 1)];
        assert_eq!(r.apply(&Rationals::default(), &x), x);
    }

    #[test]
    fn sc_involution_examples() {
        let s = GaussianRationals;
        let std = std_selfconj(&s, FreeModule::standard(2));
        assert_eq!(sc_involution(&s, &std), std);

        let rows = alloc::vec![alloc::vec![gi(0, 0), gi(0, 1)], alloc::vec![gi(0, -1), gi(0, 0)]];
        let j = Matrix::from_rows(rows).unwrap();
        // This J squares to −I under J·conj(J), so it is rejected.
        assert_eq!(
            SelfConjugate::new(&s, FreeModule::standard(2), j.clone()),
            Err(FmodError::NotSelfConjugate { row: 0, col: 0 })
        );
        let raw = SelfConjugate::new_unchecked(FreeModule::standard(2), j);
        let expected = Matrix::from_rows(alloc::vec![alloc::vec![gi(0, 0), gi(0, -1)], alloc::vec![gi(0, 1), gi(0, 0)]]).unwrap();
        assert_eq!(sc_involution(&s, &raw).j(), &expected);

        let rows = alloc::vec![alloc::vec![gi(0, 0), gi(0, 1)], alloc::vec![gi(0, 1), gi(0, 0)]];
        let valid = SelfConjugate::new(&s, FreeModule::standard(2), Matrix::from_rows(rows).unwrap()).unwrap();
        assert!(sc_involution(&s, &valid).is_valid(&s));
        assert_eq!(sc_involution(&s, &sc_involution(&s, &valid)), valid);
    }

    #[test]
    fn tensor_examples() {
        let s = GaussianRationals;
        let t = tensor(&s, &std_selfconj(&s, FreeModule::standard(2)), &std_selfconj(&s, FreeModule::standard(3)));
        assert_eq!(t.dim(), 6);
        assert!(t.j().is_identity(&s));
        assert_eq!(t.module().basis()[1], "e1⊗e2");
        assert_eq!(t.module().basis()[3], "e2⊗e1");
    }

    #[test]
    fn biproduct_examples() {
        let s = Gf9Field;
        let b = biproduct(&s, &FreeModule::standard(2), &FreeModule::standard(3));
        assert_eq!(b.module.dim(), 5);
        assert_eq!(b.module.basis()[0], "1.e1");
        let p1k1 = b.projections[0].compose(&s, &b.injections[0]).unwrap();
        assert!(p1k1.matrix().is_identity(&s));
        let p1k2 = b.projections[0].compose(&s, &b.injections[1]).unwrap();
        assert_eq!(p1k2.matrix(), &Matrix::zeros(&s, 2, 3));
        let named = biproduct(&s, &FreeModule::new(["a"]).unwrap(), &FreeModule::new(["b"]).unwrap());
        assert_eq!(named.module.basis(), &["a".to_string(), "b".to_string()]);
    }

    #[test]
    fn hom_examples() {
        let s = GaussianRationals;
        let one = std_selfconj(&s, FreeModule::standard(1));
        let f = Matrix::from_rows(alloc::vec![alloc::vec![gi(0, 1)]]).unwrap();
        assert_eq!(hom_involution(&s, &one, &one, &f).get(0, 0), &gi(0, -1));
        let h = hom_selfconj(&s, &one, &one);
        assert_eq!(h.apply(&s, &[gi(0, 1)]), alloc::vec![gi(0, -1)]);
        assert_eq!(h.module().basis()[0], "e1->e1");
    }

    #[test]
    fn hom_evaluation_exhaustive_gf9() {
        let r = check_hom_evaluation_exhaustive(&Gf9Field, 2).unwrap();
        assert!(r.passed(), "{r:?}");
        // four norm-one elements in GF(9)
        assert_eq!(structured_selfconjs(&Gf9Field, 1).len(), 4);
    }

    #[test]
    fn transpose_roundtrip() {
        let s = GaussianRationals;
        let m = Matrix::from_rows(alloc::vec![alloc::vec![gi(1, 2), gi(0, 1)]]).unwrap();
        let a = AntilinearMap { matrix: m.clone(), view: View::Antilinear };
        let t = a.transpose();
        assert_eq!(t.matrix, m);
        assert_eq!(t.transpose(), a);
        let x = [gi(3, -1), gi(0, 2)];
        assert_eq!(a.apply(&s, &x), t.apply(&s, &conj_coords(&s, &x)));
    }

    #[test]
    fn bilinear_examples() {
        let r = bilinear_universal_check(&Gf9Field, 1, 1, 1, 20, &mut rng_from_seed(0));
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.entries()[0].instance, "gf9-1x1->1-exhaustive");
        let r = bilinear_universal_check(&Booleans, 2, 2, 1, 20, &mut rng_from_seed(0));
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.law("factorisation_unique").unwrap().checked, 2);
        let r = bilinear_universal_check(&Gf9Field, 2, 2, 1, 50, &mut rng_from_seed(0));
        assert!(r.passed(), "{r:?}");
        let r = bilinear_universal_check(&Gf9Field, 2, 2, 2, 50, &mut rng_from_seed(0));
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.entries()[0].instance, "gf9-2x2->2-exhaustive");
        let r = bilinear_universal_check(&GaussianRationals, 2, 2, 2, 50, &mut rng_from_seed(0));
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn zero_bilinear_has_zero_factorisation() {
        let s = Gf9Field;
        let h = Matrix::zeros(&s, 1, 4);
        let t = kron_coords(&s, &[Gf9::new(1, 2), Gf9::new(0, 1)], &[Gf9::new(2, 2), Gf9::new(1, 0)]);
        assert_eq!(h.apply(&s, &t), alloc::vec![Gf9::new(0, 0)]);
    }

    #[test]
    fn conjugation_laws_hold() {
        for seed in 0..3 {
            assert!(check_conjugation_laws(&GaussianRationals, 3, 60, &mut rng_from_seed(seed)).passed());
            assert!(check_conjugation_laws(&Gf9Field, 3, 60, &mut rng_from_seed(seed)).passed());
            assert!(check_conjugation_laws(&Booleans, 3, 30, &mut rng_from_seed(seed)).passed());
        }
    }

    #[test]
    fn kron_convention() {
        let s = Rationals::default();
        let q = |n| crate::scalars::Rational::from_integer(n);
        let x = [q(1), q(2)];
        let y = [q(3), q(5), q(7)];
        assert_eq!(kron_coords(&s, &x, &y), alloc::vec![q(3), q(5), q(7), q(6), q(10), q(14)]);
        let a = Matrix::from_rows(alloc::vec![alloc::vec![q(1), q(2)], alloc::vec![q(3), q(4)]]).unwrap();
        let b = Matrix::identity(&s, 2);
        let k = a.kron(&s, &b);
        assert_eq!(k.get(0, 2), &q(2));
        assert_eq!(k.get(3, 1), &q(3));
    }
}
