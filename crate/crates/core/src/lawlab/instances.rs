//! The concrete instances: finite sets, finite posets, free modules, and
//! self-conjugates over any of them.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use rand::{Rng, RngCore};

use super::checks::{is_self_conjugate, xi_inverse_formula, zeta_inverse_formula};
use super::{CartesianInvCat, FinInvCat, Homs, MonoidalInvCat, ScObj, ScObject, HOM_LIMIT};
use crate::fmod::{all_coords, biproduct, structured_selfconjs, FreeModule, Matrix};
use crate::scalars::InvolutiveSemiring;

/// A function `{0..dom} → {0..cod}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FinMap {
    map: Vec<usize>,
    cod: usize,
}

impl FinMap {
    pub fn new(map: Vec<usize>, cod: usize) -> Option<Self> {
        map.iter().all(|&v| v < cod).then_some(Self { map, cod })
    }

    pub fn identity(n: usize) -> Self {
        Self { map: (0..n).collect(), cod: n }
    }

    pub fn dom(&self) -> usize {
        self.map.len()
    }

    pub fn cod(&self) -> usize {
        self.cod
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn at(&self, i: usize) -> usize {
        self.map[i]
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &FinMap) -> FinMap {
        FinMap { map: first.map.iter().map(|&i| self.map[i]).collect(), cod: self.cod }
    }

    pub fn is_involution(&self) -> bool {
        self.dom() == self.cod && self.map.iter().enumerate().all(|(i, &v)| self.map[v] == i)
    }

    pub fn invert(&self) -> Option<FinMap> {
        if self.dom() != self.cod {
            return None;
        }
        let mut inv = alloc::vec![usize::MAX; self.cod];
        for (i, &v) in self.map.iter().enumerate() {
            if inv[v] != usize::MAX {
                return None;
            }
            inv[v] = i;
        }
        Some(FinMap { map: inv, cod: self.dom() })
    }

    /// Every map `dom → cod`, in lexicographic order.
    pub fn all(dom: usize, cod: usize) -> Vec<FinMap> {
        let mut out = alloc::vec![Vec::new()];
        for _ in 0..dom {
            out = out
                .into_iter()
                .flat_map(|p: Vec<usize>| {
                    (0..cod).map(move |v| {
                        let mut q = p.clone();
                        q.push(v);
                        q
                    })
                })
                .collect();
        }
        out.into_iter().map(|map| FinMap { map, cod }).collect()
    }

    pub fn random(dom: usize, cod: usize, rng: &mut dyn RngCore) -> Option<FinMap> {
        if cod == 0 && dom > 0 {
            return None;
        }
        Some(FinMap { map: (0..dom).map(|_| rng.random_range(0..cod)).collect(), cod })
    }
}

impl fmt::Debug for FinMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.map)
    }
}

fn count_maps(dom: usize, cod: usize) -> Option<usize> {
    (0..dom).try_fold(1usize, |acc, _| acc.checked_mul(cod).filter(|&v| v <= HOM_LIMIT))
}

fn finite_homs(
    dom: usize,
    cod: usize,
    budget: usize,
    rng: &mut dyn RngCore,
    keep: impl Fn(&FinMap) -> bool,
) -> Homs<FinMap> {
    match count_maps(dom, cod) {
        Some(_) => Homs { maps: FinMap::all(dom, cod).into_iter().filter(|f| keep(f)).collect(), exhaustive: true },
        None => {
            let maps = (0..budget).filter_map(|_| FinMap::random(dom, cod, rng)).filter(|f| keep(f)).collect();
            Homs { maps, exhaustive: false }
        }
    }
}

// Products of finite sets are indexed row-major: (a, b) ↦ a·|Y| + b.

fn tensor_maps(f: &FinMap, g: &FinMap) -> FinMap {
    let map = (0..f.dom() * g.dom()).map(|p| f.at(p / g.dom()) * g.cod() + g.at(p % g.dom())).collect();
    FinMap { map, cod: f.cod() * g.cod() }
}

fn swap_map(x: usize, y: usize) -> FinMap {
    FinMap { map: (0..x * y).map(|p| (p % y) * x + p / y).collect(), cod: x * y }
}

fn proj_map(x: usize, y: usize, k: usize) -> FinMap {
    let map = (0..x * y).map(|p| if k == 0 { p / y } else { p % y }).collect();
    FinMap { map, cod: if k == 0 { x } else { y } }
}

fn pair_maps(f: &FinMap, g: &FinMap, y: usize) -> FinMap {
    FinMap { map: f.map.iter().zip(&g.map).map(|(&a, &b)| a * y + b).collect(), cod: f.cod * y }
}

/// Finite sets with the identity involution; objects are sizes.
#[derive(Clone, Debug)]
pub struct FinSetTriv {
    sizes: Vec<usize>,
}

impl FinSetTriv {
    pub fn new(sizes: Vec<usize>) -> Self {
        Self { sizes }
    }

    /// Sizes `1..=n`.
    pub fn up_to(n: usize) -> Self {
        Self { sizes: (1..=n).collect() }
    }
}

impl FinInvCat for FinSetTriv {
    type Obj = usize;
    type Mor = FinMap;

    fn name(&self) -> String {
        format!("finset{}", self.sizes.iter().max().copied().unwrap_or(0))
    }
    fn objects(&self) -> Vec<usize> {
        self.sizes.clone()
    }
    fn conj_obj(&self, x: &usize) -> usize {
        *x
    }
    fn conj_mor(&self, f: &FinMap) -> FinMap {
        f.clone()
    }
    fn identity(&self, x: &usize) -> FinMap {
        FinMap::identity(*x)
    }
    fn compose(&self, g: &FinMap, f: &FinMap) -> FinMap {
        g.after(f)
    }
    fn is_hom(&self, f: &FinMap, dom: &usize, cod: &usize) -> bool {
        f.dom() == *dom && f.cod() == *cod
    }
    fn homs(&self, dom: &usize, cod: &usize, budget: usize, rng: &mut dyn RngCore) -> Homs<FinMap> {
        finite_homs(*dom, *cod, budget, rng, |_| true)
    }
    fn iota(&self, x: &usize) -> FinMap {
        FinMap::identity(*x)
    }
    fn iota_inv(&self, x: &usize) -> FinMap {
        FinMap::identity(*x)
    }
    fn invert(&self, f: &FinMap, _dom: &usize, _cod: &usize) -> Option<FinMap> {
        f.invert()
    }
    fn self_conjugates(&self, x: &usize) -> Vec<FinMap> {
        super::involutions(*x)
    }
}

impl MonoidalInvCat for FinSetTriv {
    fn unit(&self) -> usize {
        1
    }
    fn tensor(&self, x: &usize, y: &usize) -> usize {
        x * y
    }
    fn tensor_mor(&self, f: &FinMap, g: &FinMap) -> FinMap {
        tensor_maps(f, g)
    }
    fn zeta(&self) -> FinMap {
        FinMap::identity(1)
    }
    fn xi(&self, x: &usize, y: &usize) -> FinMap {
        FinMap::identity(x * y)
    }
    fn alpha(&self, x: &usize, y: &usize, z: &usize) -> FinMap {
        // x·(|Y||Z|) + (y·|Z| + z) = (x·|Y| + y)·|Z| + z
        FinMap::identity(x * y * z)
    }
    fn lambda(&self, x: &usize) -> FinMap {
        FinMap::identity(*x)
    }
    fn rho(&self, x: &usize) -> FinMap {
        FinMap::identity(*x)
    }
    fn gamma(&self, x: &usize, y: &usize) -> FinMap {
        swap_map(*x, *y)
    }
}

impl CartesianInvCat for FinSetTriv {
    fn product(&self, x: &usize, y: &usize) -> usize {
        x * y
    }
    fn proj(&self, x: &usize, y: &usize, k: usize) -> FinMap {
        proj_map(*x, *y, k)
    }
    fn pair(&self, f: &FinMap, g: &FinMap, _x: &usize, y: &usize) -> FinMap {
        pair_maps(f, g, *y)
    }
}

/// A finite partial order on `{0..n}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poset {
    leq: Vec<Vec<bool>>,
}

impl Poset {
    /// Validates reflexivity, antisymmetry and transitivity.
    pub fn new(leq: Vec<Vec<bool>>) -> Option<Self> {
        let n = leq.len();
        if leq.iter().any(|r| r.len() != n) {
            return None;
        }
        for a in 0..n {
            if !leq[a][a] {
                return None;
            }
            for b in 0..n {
                if a != b && leq[a][b] && leq[b][a] {
                    return None;
                }
                for c in 0..n {
                    if leq[a][b] && leq[b][c] && !leq[a][c] {
                        return None;
                    }
                }
            }
        }
        Some(Self { leq })
    }

    pub fn discrete(n: usize) -> Self {
        Self { leq: (0..n).map(|a| (0..n).map(|b| a == b).collect()).collect() }
    }

    /// `0 ≤ 1 ≤ … ≤ n−1`.
    pub fn chain(n: usize) -> Self {
        Self { leq: (0..n).map(|a| (0..n).map(|b| a <= b).collect()).collect() }
    }

    /// Every partial order on `{0..n}` (labelled).
    pub fn all(n: usize) -> Vec<Poset> {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (0..n).filter(move |&b| b != a).map(move |b| (a, b))).collect();
        let mut out = Vec::new();
        for mask in 0u64..(1u64 << pairs.len()) {
            let mut leq: Vec<Vec<bool>> = (0..n).map(|a| (0..n).map(|b| a == b).collect()).collect();
            for (bit, &(a, b)) in pairs.iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    leq[a][b] = true;
                }
            }
            if let Some(p) = Poset::new(leq) {
                out.push(p);
            }
        }
        out
    }

    pub fn size(&self) -> usize {
        self.leq.len()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    /// The opposite order.
    pub fn reversed(&self) -> Poset {
        let n = self.size();
        Poset { leq: (0..n).map(|a| (0..n).map(|b| self.leq[b][a]).collect()).collect() }
    }

    /// Componentwise order on `X × Y`, indexed row-major.
    pub fn product(&self, other: &Poset) -> Poset {
        let (n, m) = (self.size(), other.size());
        let leq = (0..n * m)
            .map(|p| (0..n * m).map(|q| self.leq[p / m][q / m] && other.leq[p % m][q % m]).collect())
            .collect();
        Poset { leq }
    }

    pub fn is_monotone(&self, f: &FinMap, cod: &Poset) -> bool {
        f.dom() == self.size()
            && f.cod() == cod.size()
            && (0..self.size()).all(|a| (0..self.size()).all(|b| !self.leq[a][b] || cod.leq[f.at(a)][f.at(b)]))
    }
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.size();
        let strict: Vec<String> = (0..n)
            .flat_map(|a| (0..n).filter(move |&b| a != b).map(move |b| (a, b)))
            .filter(|&(a, b)| self.leq[a][b])
            .map(|(a, b)| format!("{a}<{b}"))
            .collect();
        write!(f, "P{n}{{{}}}", strict.join(","))
    }
}

/// Finite posets with order reversal as involution.
#[derive(Clone, Debug)]
pub struct FinPosetRev {
    objects: Vec<Poset>,
}

impl FinPosetRev {
    pub fn new(objects: Vec<Poset>) -> Self {
        Self { objects }
    }

    /// All posets of size at most three and the chains of size four.
    pub fn standard() -> Self {
        let mut objects: Vec<Poset> = (1..=3).flat_map(Poset::all).collect();
        objects.push(Poset::chain(4));
        Self { objects }
    }

    /// Chains of length `1..=n`.
    pub fn chains(n: usize) -> Self {
        Self { objects: (1..=n).map(Poset::chain).collect() }
    }
}

impl FinInvCat for FinPosetRev {
    type Obj = Poset;
    type Mor = FinMap;

    fn name(&self) -> String {
        format!("poset{}", self.objects.len())
    }
    fn objects(&self) -> Vec<Poset> {
        self.objects.clone()
    }
    fn conj_obj(&self, x: &Poset) -> Poset {
        x.reversed()
    }
    fn conj_mor(&self, f: &FinMap) -> FinMap {
        f.clone()
    }
    fn identity(&self, x: &Poset) -> FinMap {
        FinMap::identity(x.size())
    }
    fn compose(&self, g: &FinMap, f: &FinMap) -> FinMap {
        g.after(f)
    }
    fn is_hom(&self, f: &FinMap, dom: &Poset, cod: &Poset) -> bool {
        dom.is_monotone(f, cod)
    }
    fn homs(&self, dom: &Poset, cod: &Poset, budget: usize, rng: &mut dyn RngCore) -> Homs<FinMap> {
        finite_homs(dom.size(), cod.size(), budget, rng, |f| dom.is_monotone(f, cod))
    }
    fn iota(&self, x: &Poset) -> FinMap {
        FinMap::identity(x.size())
    }
    fn iota_inv(&self, x: &Poset) -> FinMap {
        FinMap::identity(x.size())
    }
    fn invert(&self, f: &FinMap, _dom: &Poset, _cod: &Poset) -> Option<FinMap> {
        f.invert()
    }
    /// Antitone involutions of `X`, i.e. monotone `X̄ → X` with `j∘j = id`.
    fn self_conjugates(&self, x: &Poset) -> Vec<FinMap> {
        let rev = x.reversed();
        super::involutions(x.size()).into_iter().filter(|j| rev.is_monotone(j, x)).collect()
    }
}

impl MonoidalInvCat for FinPosetRev {
    fn unit(&self) -> Poset {
        Poset::chain(1)
    }
    fn tensor(&self, x: &Poset, y: &Poset) -> Poset {
        x.product(y)
    }
    fn tensor_mor(&self, f: &FinMap, g: &FinMap) -> FinMap {
        tensor_maps(f, g)
    }
    fn zeta(&self) -> FinMap {
        FinMap::identity(1)
    }
    fn xi(&self, x: &Poset, y: &Poset) -> FinMap {
        FinMap::identity(x.size() * y.size())
    }
    fn alpha(&self, x: &Poset, y: &Poset, z: &Poset) -> FinMap {
        FinMap::identity(x.size() * y.size() * z.size())
    }
    fn lambda(&self, x: &Poset) -> FinMap {
        FinMap::identity(x.size())
    }
    fn rho(&self, x: &Poset) -> FinMap {
        FinMap::identity(x.size())
    }
    fn gamma(&self, x: &Poset, y: &Poset) -> FinMap {
        swap_map(x.size(), y.size())
    }
}

impl CartesianInvCat for FinPosetRev {
    fn product(&self, x: &Poset, y: &Poset) -> Poset {
        x.product(y)
    }
    fn proj(&self, x: &Poset, y: &Poset, k: usize) -> FinMap {
        proj_map(x.size(), y.size(), k)
    }
    fn pair(&self, f: &FinMap, g: &FinMap, _x: &Poset, y: &Poset) -> FinMap {
        pair_maps(f, g, y.size())
    }
}

/// Free modules `S^n` with conjugation; objects are dimensions and
/// morphisms are matrices.
#[derive(Clone, Debug)]
pub struct ModSConj<S> {
    s: S,
    dims: Vec<usize>,
}

impl<S: InvolutiveSemiring + Clone> ModSConj<S> {
    /// Dimensions `1..=max_dim`.
    pub fn new(s: S, max_dim: usize) -> Self {
        Self { s, dims: (1..=max_dim).collect() }
    }

    pub fn with_dims(s: S, dims: Vec<usize>) -> Self {
        Self { s, dims }
    }

    pub fn scalars(&self) -> &S {
        &self.s
    }

    fn random_matrix(&self, rows: usize, cols: usize, rng: &mut dyn RngCore) -> Matrix<S::Elem> {
        Matrix::from_fn(rows, cols, |_, _| self.s.sample(rng))
    }
}

/// Inverse of a matrix with exactly one unit entry in each row and column.
pub(super) fn monomial_inverse<S: InvolutiveSemiring>(s: &S, f: &Matrix<S::Elem>) -> Option<Matrix<S::Elem>> {
    let n = f.rows();
    if f.cols() != n {
        return None;
    }
    let mut inv = Matrix::zeros(s, n, n);
    for j in 0..n {
        let mut nonzero = (0..n).filter(|&i| !s.is_zero(f.get(i, j)));
        let i = nonzero.next()?;
        if nonzero.next().is_some() {
            return None;
        }
        inv.set(j, i, s.inverse(f.get(i, j))?);
    }
    (inv.mul(s, f).is_identity(s) && f.mul(s, &inv).is_identity(s)).then_some(inv)
}

impl<S: InvolutiveSemiring + Clone> FinInvCat for ModSConj<S> {
    type Obj = usize;
    type Mor = Matrix<S::Elem>;

    fn name(&self) -> String {
        format!("mod-{}", self.s.name())
    }
    fn objects(&self) -> Vec<usize> {
        self.dims.clone()
    }
    fn conj_obj(&self, x: &usize) -> usize {
        *x
    }
    fn conj_mor(&self, f: &Matrix<S::Elem>) -> Matrix<S::Elem> {
        f.conj(&self.s)
    }
    fn identity(&self, x: &usize) -> Matrix<S::Elem> {
        Matrix::identity(&self.s, *x)
    }
    fn compose(&self, g: &Matrix<S::Elem>, f: &Matrix<S::Elem>) -> Matrix<S::Elem> {
        g.mul(&self.s, f)
    }
    fn is_hom(&self, f: &Matrix<S::Elem>, dom: &usize, cod: &usize) -> bool {
        f.shape() == (*cod, *dom)
    }
    fn homs(&self, dom: &usize, cod: &usize, budget: usize, rng: &mut dyn RngCore) -> Homs<Matrix<S::Elem>> {
        let cells = dom * cod;
        if let Some(elems) = self.s.elements() {
            if count_maps(cells, elems.len()).is_some() {
                let maps = all_coords(&elems, cells).into_iter().map(|v| Matrix::from_flat(*cod, *dom, v)).collect();
                return Homs { maps, exhaustive: true };
            }
        }
        let mut maps = alloc::vec![Matrix::zeros(&self.s, *cod, *dom)];
        maps.extend((0..budget).map(|_| self.random_matrix(*cod, *dom, rng)));
        Homs { maps, exhaustive: false }
    }
    fn iota(&self, x: &usize) -> Matrix<S::Elem> {
        Matrix::identity(&self.s, *x)
    }
    fn iota_inv(&self, x: &usize) -> Matrix<S::Elem> {
        Matrix::identity(&self.s, *x)
    }
    fn invert(&self, f: &Matrix<S::Elem>, _dom: &usize, _cod: &usize) -> Option<Matrix<S::Elem>> {
        monomial_inverse(&self.s, f)
    }
    fn self_conjugates(&self, x: &usize) -> Vec<Matrix<S::Elem>> {
        if *x <= 2 {
            return structured_selfconjs(&self.s, *x).into_iter().map(|c| c.j().clone()).collect();
        }
        let mut swap: Vec<usize> = (0..*x).collect();
        swap.swap(0, 1);
        alloc::vec![Matrix::identity(&self.s, *x), Matrix::permutation(&self.s, &swap)]
    }

    /// Sampled hom-sets are pushed into the self-conjugate maps by
    /// `F ↦ F + J_Y·conj(F)·conj(J_X)`.
    fn sc_homs(
        &self,
        dom: &ScObj<Self>,
        cod: &ScObj<Self>,
        budget: usize,
        rng: &mut dyn RngCore,
    ) -> Homs<Matrix<S::Elem>> {
        let s = &self.s;
        let all = self.homs(&dom.object, &cod.object, budget, rng);
        let is_sc = |f: &Matrix<S::Elem>| f.mul(s, &dom.j) == cod.j.mul(s, &f.conj(s));
        if all.exhaustive {
            return Homs { maps: all.maps.into_iter().filter(|f| is_sc(f)).collect(), exhaustive: true };
        }
        let maps = all
            .maps
            .into_iter()
            .map(|f| f.add(s, &cod.j.mul(s, &f.conj(s)).mul(s, &dom.j.conj(s))))
            .filter(|f| is_sc(f))
            .collect();
        Homs { maps, exhaustive: false }
    }
}

impl<S: InvolutiveSemiring + Clone> MonoidalInvCat for ModSConj<S> {
    fn unit(&self) -> usize {
        1
    }
    fn tensor(&self, x: &usize, y: &usize) -> usize {
        x * y
    }
    fn tensor_mor(&self, f: &Matrix<S::Elem>, g: &Matrix<S::Elem>) -> Matrix<S::Elem> {
        f.kron(&self.s, g)
    }
    fn zeta(&self) -> Matrix<S::Elem> {
        Matrix::identity(&self.s, 1)
    }
    fn xi(&self, x: &usize, y: &usize) -> Matrix<S::Elem> {
        Matrix::identity(&self.s, x * y)
    }
    fn alpha(&self, x: &usize, y: &usize, z: &usize) -> Matrix<S::Elem> {
        Matrix::identity(&self.s, x * y * z)
    }
    fn lambda(&self, x: &usize) -> Matrix<S::Elem> {
        Matrix::identity(&self.s, *x)
    }
    fn rho(&self, x: &usize) -> Matrix<S::Elem> {
        Matrix::identity(&self.s, *x)
    }
    fn gamma(&self, x: &usize, y: &usize) -> Matrix<S::Elem> {
        Matrix::permutation(&self.s, swap_map(*x, *y).map())
    }
}

impl<S: InvolutiveSemiring + Clone> CartesianInvCat for ModSConj<S> {
    /// The biproduct.
    fn product(&self, x: &usize, y: &usize) -> usize {
        x + y
    }
    fn proj(&self, x: &usize, y: &usize, k: usize) -> Matrix<S::Elem> {
        let b = biproduct(&self.s, &FreeModule::standard(*x), &FreeModule::standard(*y));
        b.projections[k].matrix().clone()
    }
    fn pair(&self, f: &Matrix<S::Elem>, g: &Matrix<S::Elem>, x: &usize, _y: &usize) -> Matrix<S::Elem> {
        Matrix::from_fn(f.rows() + g.rows(), f.cols(), |i, j| if i < *x { f.get(i, j).clone() } else { g.get(i - x, j).clone() })
    }
}

/// The category `SC(C)` of self-conjugates in `C`, with the involution
/// `(X, j) ↦ (X̄, j̄)` and the same `ι`.
#[derive(Clone)]
pub struct ScCat<C: FinInvCat> {
    base: C,
    objects: Vec<ScObj<C>>,
}

impl<C: FinInvCat> ScCat<C> {
    /// Every valid self-conjugate on every object of `base`.
    pub fn new(base: C) -> Self {
        let objects = base
            .objects()
            .into_iter()
            .flat_map(|x| {
                base.self_conjugates(&x).into_iter().map(move |j| ScObject { object: x.clone(), j })
            })
            .filter(|o| is_self_conjugate(&base, &o.object, &o.j))
            .collect();
        Self { base, objects }
    }

    pub fn with_objects(base: C, objects: Vec<ScObj<C>>) -> Self {
        Self { base, objects }
    }

    pub fn base(&self) -> &C {
        &self.base
    }
}

impl<C: FinInvCat> FinInvCat for ScCat<C> {
    type Obj = ScObj<C>;
    type Mor = C::Mor;

    fn name(&self) -> String {
        format!("sc-{}", self.base.name())
    }
    fn objects(&self) -> Vec<ScObj<C>> {
        self.objects.clone()
    }
    fn conj_obj(&self, x: &ScObj<C>) -> ScObj<C> {
        ScObject { object: self.base.conj_obj(&x.object), j: self.base.conj_mor(&x.j) }
    }
    fn conj_mor(&self, f: &C::Mor) -> C::Mor {
        self.base.conj_mor(f)
    }
    fn identity(&self, x: &ScObj<C>) -> C::Mor {
        self.base.identity(&x.object)
    }
    fn compose(&self, g: &C::Mor, f: &C::Mor) -> C::Mor {
        self.base.compose(g, f)
    }
    /// A map of self-conjugates: `f ∘ j_X = j_Y ∘ f̄`.
    fn is_hom(&self, f: &C::Mor, dom: &ScObj<C>, cod: &ScObj<C>) -> bool {
        let b = &self.base;
        b.is_hom(f, &dom.object, &cod.object) && b.compose(f, &dom.j) == b.compose(&cod.j, &b.conj_mor(f))
    }
    fn homs(&self, dom: &ScObj<C>, cod: &ScObj<C>, budget: usize, rng: &mut dyn RngCore) -> Homs<C::Mor> {
        self.base.sc_homs(dom, cod, budget, rng)
    }
    fn iota(&self, x: &ScObj<C>) -> C::Mor {
        self.base.iota(&x.object)
    }
    fn iota_inv(&self, x: &ScObj<C>) -> C::Mor {
        self.base.iota_inv(&x.object)
    }
    fn invert(&self, f: &C::Mor, dom: &ScObj<C>, cod: &ScObj<C>) -> Option<C::Mor> {
        self.base.invert(f, &dom.object, &cod.object)
    }
    fn self_conjugates(&self, x: &ScObj<C>) -> Vec<C::Mor> {
        let conj = self.conj_obj(x);
        self.base.self_conjugates(&x.object).into_iter().filter(|k| self.is_hom(k, &conj, x)).collect()
    }
    fn is_object(&self, x: &ScObj<C>) -> bool {
        self.base.is_object(&x.object) && is_self_conjugate(&self.base, &x.object, &x.j)
    }
}

impl<C: MonoidalInvCat> MonoidalInvCat for ScCat<C> {
    /// `(I, ζ⁻¹)`.
    fn unit(&self) -> ScObj<C> {
        ScObject { object: self.base.unit(), j: zeta_inverse_formula(&self.base) }
    }
    /// `(X ⊗ Y, (j_X ⊗ j_Y) ∘ ξ⁻¹)`.
    fn tensor(&self, x: &ScObj<C>, y: &ScObj<C>) -> ScObj<C> {
        let b = &self.base;
        let j = b.compose(&b.tensor_mor(&x.j, &y.j), &xi_inverse_formula(b, &x.object, &y.object));
        ScObject { object: b.tensor(&x.object, &y.object), j }
    }
    fn tensor_mor(&self, f: &C::Mor, g: &C::Mor) -> C::Mor {
        self.base.tensor_mor(f, g)
    }
    fn zeta(&self) -> C::Mor {
        self.base.zeta()
    }
    fn xi(&self, x: &ScObj<C>, y: &ScObj<C>) -> C::Mor {
        self.base.xi(&x.object, &y.object)
    }
    fn alpha(&self, x: &ScObj<C>, y: &ScObj<C>, z: &ScObj<C>) -> C::Mor {
        self.base.alpha(&x.object, &y.object, &z.object)
    }
    fn lambda(&self, x: &ScObj<C>) -> C::Mor {
        self.base.lambda(&x.object)
    }
    fn rho(&self, x: &ScObj<C>) -> C::Mor {
        self.base.rho(&x.object)
    }
    fn gamma(&self, x: &ScObj<C>, y: &ScObj<C>) -> C::Mor {
        self.base.gamma(&x.object, &y.object)
    }
}

impl<C: CartesianInvCat> CartesianInvCat for ScCat<C> {
    /// `(X × Y, (j_X × j_Y) ∘ ⟨π̄₁, π̄₂⟩)`.
    fn product(&self, x: &ScObj<C>, y: &ScObj<C>) -> ScObj<C> {
        let b = &self.base;
        let (xo, yo) = (&x.object, &y.object);
        let (xc, yc) = (b.conj_obj(xo), b.conj_obj(yo));
        let pairing = b.pair(&b.conj_mor(&b.proj(xo, yo, 0)), &b.conj_mor(&b.proj(xo, yo, 1)), &xc, &yc);
        let jx_p = b.compose(&x.j, &b.proj(&xc, &yc, 0));
        let jy_p = b.compose(&y.j, &b.proj(&xc, &yc, 1));
        let jxy = b.pair(&jx_p, &jy_p, xo, yo);
        ScObject { object: b.product(xo, yo), j: b.compose(&jxy, &pairing) }
    }
    fn proj(&self, x: &ScObj<C>, y: &ScObj<C>, k: usize) -> C::Mor {
        self.base.proj(&x.object, &y.object, k)
    }
    fn pair(&self, f: &C::Mor, g: &C::Mor, x: &ScObj<C>, y: &ScObj<C>) -> C::Mor {
        self.base.pair(f, g, &x.object, &y.object)
    }
}
