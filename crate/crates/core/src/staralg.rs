//! Finite-dimensional involutive algebras presented by structure constants.
//!
//! An algebra has basis `e₁ … eₙ`, multiplication `eᵢ·eⱼ = Σₖ c[i][j][k]·eₖ`,
//! a unit vector `u`, and an involution `a ↦ J·conj(a)` stored as a
//! [`SelfConjugate`]. Law checks run on basis tuples, which is exact by
//! multilinearity and antilinearity, with random vectors as spot checks.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use rand::{Rng, RngCore};
use thiserror::Error;

use crate::fmod::{
    add_coords, basis_vector, kron_coords, random_coords, scale_coords, show_coords, std_selfconj,
    tensor, FmodError, FreeModule, Matrix, SelfConjugate,
};
use crate::report::{Checker, Report};
use crate::scalars::InvolutiveSemiring;
use crate::words::Mode;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum StarError {
    #[error(transparent)]
    Module(#[from] FmodError),
    #[error("structure constants: expected {expected} entries, found {found}")]
    StructureShape { expected: usize, found: usize },
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("{0} requires a non-reversing algebra")]
    RequiresNonReversing(&'static str),
    #[error("action: expected {expected} matrices of size {dim}x{dim}")]
    ActionShape { expected: usize, dim: usize },
}

/// Involutive algebra over `S`.
#[derive(Clone, PartialEq, Eq)]
pub struct StarAlgebra<S: InvolutiveSemiring> {
    scalars: S,
    name: String,
    module: FreeModule,
    unit: Vec<S::Elem>,
    structconst: Vec<S::Elem>,
    invol: SelfConjugate<S::Elem>,
    mode: Mode,
}

impl<S: InvolutiveSemiring + Clone> StarAlgebra<S> {
    /// Checks shapes only; the algebra laws are left to [`check_star_laws`],
    /// so malformed-but-well-shaped inputs can still be diagnosed.
    pub fn new(
        scalars: S,
        name: impl Into<String>,
        module: FreeModule,
        unit: Vec<S::Elem>,
        structconst: Vec<S::Elem>,
        j: Matrix<S::Elem>,
        mode: Mode,
    ) -> Result<Self, StarError> {
        let n = module.dim();
        if unit.len() != n {
            return Err(FmodError::ShapeMismatch { expected: format!("unit of length {n}"), found: format!("{}", unit.len()) }
                .into());
        }
        if structconst.len() != n * n * n {
            return Err(StarError::StructureShape { expected: n * n * n, found: structconst.len() });
        }
        if j.shape() != (n, n) {
            return Err(FmodError::ShapeMismatch {
                expected: format!("J of size {n}x{n}"),
                found: format!("{}x{}", j.rows(), j.cols()),
            }
            .into());
        }
        let invol = SelfConjugate::new_unchecked(module.clone(), j);
        Ok(Self { scalars, name: name.into(), module, unit, structconst, invol, mode })
    }

    pub fn scalars(&self) -> &S {
        &self.scalars
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn module(&self) -> &FreeModule {
        &self.module
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    pub fn unit(&self) -> &[S::Elem] {
        &self.unit
    }

    pub fn involution(&self) -> &SelfConjugate<S::Elem> {
        &self.invol
    }

    pub fn j(&self) -> &Matrix<S::Elem> {
        self.invol.j()
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    /// `c[i][j][k]`.
    pub fn constant(&self, i: usize, j: usize, k: usize) -> &S::Elem {
        let n = self.dim();
        &self.structconst[(i * n + j) * n + k]
    }

    pub fn structconst_flat(&self) -> &[S::Elem] {
        &self.structconst
    }

    /// `[[[c[i][j][k]]_k]_j]_i`.
    pub fn structconst_nested(&self) -> Vec<Vec<Vec<S::Elem>>> {
        let n = self.dim();
        (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| self.constant(i, j, k).clone()).collect()).collect()).collect()
    }

    pub fn basis_vector(&self, i: usize) -> Vec<S::Elem> {
        basis_vector(&self.scalars, self.dim(), i)
    }

    /// Bilinear extension of the structure constants. Panics if either
    /// vector has the wrong length.
    pub fn mul(&self, x: &[S::Elem], y: &[S::Elem]) -> Vec<S::Elem> {
        let s = &self.scalars;
        let n = self.dim();
        assert!(x.len() == n && y.len() == n, "vector length");
        let mut out = alloc::vec![s.zero(); n];
        for (i, a) in x.iter().enumerate() {
            if s.is_zero(a) {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if s.is_zero(b) {
                    continue;
                }
                let ab = s.mul(a, b);
                for (k, slot) in out.iter_mut().enumerate() {
                    let c = self.constant(i, j, k);
                    if !s.is_zero(c) {
                        *slot = s.add(slot, &s.mul(&ab, c));
                    }
                }
            }
        }
        out
    }

    /// `a ↦ J·conj(a)`.
    pub fn involve(&self, x: &[S::Elem]) -> Vec<S::Elem> {
        self.invol.apply(&self.scalars, x)
    }

    /// The `n × n²` matrix of `m: M⊗M → M`, column `i·n + j` holding `eᵢ·eⱼ`.
    pub fn mult_matrix(&self) -> Matrix<S::Elem> {
        let n = self.dim();
        Matrix::from_fn(n, n * n, |k, col| self.constant(col / n, col % n, k).clone())
    }

    /// Whether `eᵢ·eⱼ = eⱼ·eᵢ` for all basis pairs.
    pub fn is_commutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| self.constant(i, j, k) == self.constant(j, i, k))))
    }
}

impl<S: InvolutiveSemiring> fmt::Debug for StarAlgebra<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "StarAlgebra({}, dim {}, {})", self.name, self.module.dim(), self.mode.as_str())
    }
}

fn matrix_unit_name(n: usize, i: usize, j: usize) -> String {
    if n < 10 {
        format!("E{}{}", i + 1, j + 1)
    } else {
        format!("E{}_{}", i + 1, j + 1)
    }
}

fn matrix_units<S: InvolutiveSemiring + Clone>(s: &S, n: usize) -> (FreeModule, Vec<S::Elem>, Vec<S::Elem>) {
    let d = n * n;
    let names: Vec<String> = (0..d).map(|p| matrix_unit_name(n, p / n, p % n)).collect();
    let module = FreeModule::new(names).expect("matrix unit names are distinct");
    let mut c = alloc::vec![s.zero(); d * d * d];
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                // E_ij · E_jl = E_il
                let (a, b, k) = (i * n + j, j * n + l, i * n + l);
                c[(a * d + b) * d + k] = s.one();
            }
        }
    }
    let unit = (0..d).map(|p| if p / n == p % n { s.one() } else { s.zero() }).collect();
    (module, unit, c)
}

/// `n×n` matrices with conjugate transpose, basis `E11, E12, …` row-major.
pub fn matrix_algebra<S: InvolutiveSemiring + Clone>(s: &S, n: usize) -> StarAlgebra<S> {
    let (module, unit, c) = matrix_units(s, n);
    let transpose: Vec<usize> = (0..n * n).map(|p| (p % n) * n + p / n).collect();
    let j = Matrix::permutation(s, &transpose);
    StarAlgebra::new(s.clone(), format!("mat{n}-{}", s.name()), module, unit, c, j, Mode::Reversing)
        .expect("matrix algebra shapes")
}

/// `n×n` matrices with entrywise conjugation and no transpose.
pub fn entrywise_matrix_algebra<S: InvolutiveSemiring + Clone>(s: &S, n: usize) -> StarAlgebra<S> {
    let (module, unit, c) = matrix_units(s, n);
    let j = Matrix::identity(s, n * n);
    StarAlgebra::new(s.clone(), format!("entrywise{n}-{}", s.name()), module, unit, c, j, Mode::NonReversing)
        .expect("matrix algebra shapes")
}

/// `S^k` with pointwise operations, basis `p1 … pk`. Commutative, stored
/// as non-reversing.
pub fn function_algebra<S: InvolutiveSemiring + Clone>(s: &S, k: usize) -> StarAlgebra<S> {
    let module = FreeModule::new((1..=k).map(|i| format!("p{i}"))).expect("distinct names");
    let mut c = alloc::vec![s.zero(); k * k * k];
    for i in 0..k {
        c[(i * k + i) * k + i] = s.one();
    }
    let unit = alloc::vec![s.one(); k];
    StarAlgebra::new(s.clone(), format!("fun{k}-{}", s.name()), module, unit, c, Matrix::identity(s, k), Mode::NonReversing)
        .expect("function algebra shapes")
}

/// A validated group multiplication table with identity at index 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    table: Vec<Vec<usize>>,
    inverse: Vec<usize>,
}

impl GroupTable {
    /// Checks closure, identity, associativity and inverses, then computes
    /// the inverse of every element.
    pub fn new(table: Vec<Vec<usize>>) -> Result<Self, StarError> {
        let n = table.len();
        if n == 0 {
            return Err(StarError::NotAGroup("empty table".into()));
        }
        for (a, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(StarError::NotAGroup(format!("row {a} has {} entries, expected {n}", row.len())));
            }
            if let Some(&v) = row.iter().find(|&&v| v >= n) {
                return Err(StarError::NotAGroup(format!("entry {v} in row {a} is out of range")));
            }
        }
        for a in 0..n {
            if table[0][a] != a || table[a][0] != a {
                return Err(StarError::NotAGroup(format!("element 0 is not an identity for {a}")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(StarError::NotAGroup(format!("not associative at ({a}, {b}, {c})")));
                    }
                }
            }
        }
        let mut inverse = Vec::with_capacity(n);
        for a in 0..n {
            match (0..n).find(|&b| table[a][b] == 0 && table[b][a] == 0) {
                Some(b) => inverse.push(b),
                None => return Err(StarError::NotAGroup(format!("element {a} has no inverse"))),
            }
        }
        Ok(Self { table, inverse })
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }
}

/// The group algebra `S[G]`, basis `g0 … g(n-1)`, with `g⁻ = g⁻¹`.
pub fn group_algebra<S: InvolutiveSemiring + Clone>(s: &S, group: &GroupTable) -> StarAlgebra<S> {
    let n = group.order();
    let module = FreeModule::new((0..n).map(|g| format!("g{g}"))).expect("distinct names");
    let mut c = alloc::vec![s.zero(); n * n * n];
    for a in 0..n {
        for b in 0..n {
            c[(a * n + b) * n + group.mul(a, b)] = s.one();
        }
    }
    let j = Matrix::permutation(s, &group.inverse);
    StarAlgebra::new(s.clone(), format!("group{n}-{}", s.name()), module, basis_vector(s, n, 0), c, j, Mode::Reversing)
        .expect("group algebra shapes")
}

/// First basis pair `(i, j)` where the square for `mode` fails.
pub fn mode_square_witness<S: InvolutiveSemiring + Clone>(alg: &StarAlgebra<S>, mode: Mode) -> Option<(usize, usize)> {
    let n = alg.dim();
    (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).find(|&(i, j)| !mode_square_holds(alg, mode, i, j))
}

/// `(eᵢ·eⱼ)⁻ = eⱼ⁻·eᵢ⁻` (reversing) or `eᵢ⁻·eⱼ⁻` (non-reversing).
pub fn mode_square_holds<S: InvolutiveSemiring + Clone>(alg: &StarAlgebra<S>, mode: Mode, i: usize, j: usize) -> bool {
    let (ei, ej) = (alg.basis_vector(i), alg.basis_vector(j));
    let lhs = alg.involve(&alg.mul(&ei, &ej));
    let (ii, jj) = (alg.involve(&ei), alg.involve(&ej));
    let rhs = match mode {
        Mode::Reversing => alg.mul(&jj, &ii),
        Mode::NonReversing => alg.mul(&ii, &jj),
    };
    lhs == rhs
}

/// Report with one law, `mode_square`, for the given mode.
pub fn check_mode_square<S: InvolutiveSemiring + Clone>(alg: &StarAlgebra<S>, mode: Mode) -> Report {
    let mut c = Checker::new("star", format!("{}-{}", alg.name(), mode.as_str()));
    let law = c.law("mode_square");
    let n = alg.dim();
    for i in 0..n {
        for j in 0..n {
            c.record(law, mode_square_holds(alg, mode, i, j), || {
                format!("({}, {})", alg.module().basis()[i], alg.module().basis()[j])
            });
        }
    }
    c.finish()
}

/// Involutive monoid laws. With `exhaustive_basis` every basis pair and
/// triple is checked; otherwise `budget` random basis tuples. In both cases
/// `budget` random vector tuples are spot-checked as well.
pub fn check_star_laws<S: InvolutiveSemiring + Clone>(
    alg: &StarAlgebra<S>,
    exhaustive_basis: bool,
    budget: usize,
    rng: &mut dyn RngCore,
) -> Report {
    let s = alg.scalars();
    let n = alg.dim();
    let names = alg.module().basis();
    let mut c = Checker::new("star", alg.name());
    let assoc = c.law("assoc");
    let unit_left = c.law("unit_left");
    let unit_right = c.law("unit_right");
    let j_valid = c.law("j_selfconjugate");
    let unit_fixed = c.law("unit_fixed");
    let square = c.law("mode_square");
    let twice = c.law("involution_involutive");
    let spot = c.law("spot_vectors");

    let jj = alg.j().mul(s, &alg.j().conj(s));
    c.record(j_valid, jj.is_identity(s), || format!("J·conj(J) = {jj:?}"));
    let u = alg.unit().to_vec();
    let ju = alg.involve(&u);
    c.record(unit_fixed, ju == u, || format!("u⁻ = {}", show_coords(&ju)));

    let triples: Vec<(usize, usize, usize)> = if exhaustive_basis {
        (0..n).flat_map(|i| (0..n).flat_map(move |j| (0..n).map(move |k| (i, j, k)))).collect()
    } else if n == 0 {
        Vec::new()
    } else {
        (0..budget.max(1)).map(|_| (rng.random_range(0..n), rng.random_range(0..n), rng.random_range(0..n))).collect()
    };
    for &(i, j, k) in &triples {
        let (a, b, d) = (alg.basis_vector(i), alg.basis_vector(j), alg.basis_vector(k));
        let ok = alg.mul(&alg.mul(&a, &b), &d) == alg.mul(&a, &alg.mul(&b, &d));
        c.record(assoc, ok, || format!("({}, {}, {})", names[i], names[j], names[k]));
    }
    let singles: Vec<usize> = if exhaustive_basis { (0..n).collect() } else { triples.iter().map(|t| t.0).collect() };
    for &i in &singles {
        let a = alg.basis_vector(i);
        c.record(unit_left, alg.mul(&u, &a) == a, || names[i].clone());
        c.record(unit_right, alg.mul(&a, &u) == a, || names[i].clone());
        c.record(twice, alg.involve(&alg.involve(&a)) == a, || names[i].clone());
    }
    let pairs: Vec<(usize, usize)> = if exhaustive_basis {
        (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect()
    } else {
        triples.iter().map(|t| (t.0, t.1)).collect()
    };
    for &(i, j) in &pairs {
        c.record(square, mode_square_holds(alg, alg.mode(), i, j), || format!("({}, {})", names[i], names[j]));
    }

    for _ in 0..budget {
        let x = random_coords(s, n, rng);
        let y = random_coords(s, n, rng);
        let z = random_coords(s, n, rng);
        let mut ok = alg.mul(&alg.mul(&x, &y), &z) == alg.mul(&x, &alg.mul(&y, &z));
        ok &= alg.mul(&u, &x) == x && alg.mul(&x, &u) == x;
        let lhs = alg.involve(&alg.mul(&x, &y));
        let rhs = match alg.mode() {
            Mode::Reversing => alg.mul(&alg.involve(&y), &alg.involve(&x)),
            Mode::NonReversing => alg.mul(&alg.involve(&x), &alg.involve(&y)),
        };
        ok &= lhs == rhs;
        let t = s.sample(rng);
        ok &= alg.involve(&add_coords(s, &scale_coords(s, &t, &x), &y))
            == add_coords(s, &scale_coords(s, &s.conj(&t), &alg.involve(&x)), &alg.involve(&y));
        c.record(spot, ok, || format!("x={}, y={}, z={}", show_coords(&x), show_coords(&y), show_coords(&z)));
    }
    c.finish()
}

/// Verdicts of the two independent readings of a non-reversing involutive
/// algebra: the monoid-with-involution diagrams on elements, and unit and
/// multiplication being morphisms of self-conjugates (matrix identities).
#[derive(Clone, Debug)]
pub struct TwoRoutes {
    pub diagrams: Report,
    pub morphisms: Report,
}

impl TwoRoutes {
    pub fn agree(&self) -> bool {
        self.diagrams.passed() == self.morphisms.passed()
    }

    /// Both route reports plus a `routes_agree` law.
    pub fn into_report(self) -> Report {
        let agree = self.agree();
        let (d, m) = (self.diagrams.verdict(), self.morphisms.verdict());
        let instance = self.diagrams.entries().first().map(|e| e.instance.clone()).unwrap_or_default();
        let mut out = Report::new();
        out.extend(self.diagrams);
        out.extend(self.morphisms);
        let mut c = Checker::new("lemma52", instance);
        c.check("routes_agree", agree, || format!("diagrams {d}, morphisms {m}"));
        out.extend(c.finish());
        out
    }
}

/// Runs both routes on a non-reversing algebra. The routes share no code
/// beyond matrix arithmetic: route one evaluates products of basis vectors,
/// route two compares matrices built from `m`, `u` and `J`.
pub fn check_lemma52<S: InvolutiveSemiring + Clone>(alg: &StarAlgebra<S>) -> Result<TwoRoutes, StarError> {
    if alg.mode() != Mode::NonReversing {
        return Err(StarError::RequiresNonReversing("the self-conjugate reading"));
    }
    let s = alg.scalars();
    let n = alg.dim();
    let names = alg.module().basis();

    let mut c = Checker::new("lemma52", format!("{}-diagrams", alg.name()));
    let u = alg.unit().to_vec();
    c.check("unit_fixed", alg.involve(&u) == u, || show_coords(&alg.involve(&u)));
    let jj = alg.j().mul(s, &alg.j().conj(s));
    c.check("involution_iso", jj.is_identity(s), || format!("J·conj(J) = {jj:?}"));
    let assoc = c.law("assoc");
    let unit = c.law("unit");
    let square = c.law("mode_square");
    for i in 0..n {
        let a = alg.basis_vector(i);
        c.record(unit, alg.mul(&u, &a) == a && alg.mul(&a, &u) == a, || names[i].clone());
        for j in 0..n {
            let b = alg.basis_vector(j);
            let lhs = alg.involve(&alg.mul(&a, &b));
            let rhs = alg.mul(&alg.involve(&a), &alg.involve(&b));
            c.record(square, lhs == rhs, || format!("({}, {})", names[i], names[j]));
            for k in 0..n {
                let d = alg.basis_vector(k);
                let ok = alg.mul(&alg.mul(&a, &b), &d) == alg.mul(&a, &alg.mul(&b, &d));
                c.record(assoc, ok, || format!("({}, {}, {})", names[i], names[j], names[k]));
            }
        }
    }
    let diagrams = c.finish();

    let mut c = Checker::new("lemma52", format!("{}-morphisms", alg.name()));
    let m = alg.mult_matrix();
    let unit_col = Matrix::from_flat(n, 1, u.clone());
    let id = Matrix::identity(s, n);
    let sc_m = alg.involution().clone();
    let sc_i = std_selfconj(s, FreeModule::standard(1));
    let sc_mm = tensor(s, &sc_m, &sc_m);
    c.check("selfconjugate_valid", sc_m.is_valid(s), || format!("J = {:?}", sc_m.j()));
    c.check("unit_morphism", sc_i.is_morphism(s, &sc_m, &unit_col), || format!("u = {unit_col:?}"));
    c.check("mult_morphism", sc_mm.is_morphism(s, &sc_m, &m), || format!("m = {m:?}"));
    let assoc_lhs = m.mul(s, &m.kron(s, &id));
    let assoc_rhs = m.mul(s, &id.kron(s, &m));
    c.check("assoc_matrix", assoc_lhs == assoc_rhs, || format!("m(m⊗1) = {assoc_lhs:?}, m(1⊗m) = {assoc_rhs:?}"));
    let left = m.mul(s, &unit_col.kron(s, &id));
    let right = m.mul(s, &id.kron(s, &unit_col));
    c.check("unit_matrix", left.is_identity(s) && right.is_identity(s), || {
        format!("m(u⊗1) = {left:?}, m(1⊗u) = {right:?}")
    });
    let morphisms = c.finish();
    Ok(TwoRoutes { diagrams, morphisms })
}

/// Changes one entry of `J`, the unit or the structure constants, chosen
/// by `rng`, to a different scalar. The result is renamed `<name>-fault`.
pub fn perturb<S: InvolutiveSemiring + Clone>(alg: &StarAlgebra<S>, rng: &mut dyn RngCore) -> StarAlgebra<S> {
    let s = alg.scalars();
    let n = alg.dim();
    let mut out = alg.clone().with_name(format!("{}-fault", alg.name()));
    let other = |old: &S::Elem, rng: &mut dyn RngCore| -> S::Elem {
        match s.elements() {
            Some(all) => {
                let choices: Vec<_> = all.into_iter().filter(|e| e != old).collect();
                choices[rng.random_range(0..choices.len())].clone()
            }
            None => {
                let bump = s.add(old, &s.one());
                if bump != *old { bump } else { s.zero() }
            }
        }
    };
    match rng.random_range(0..3u8) {
        0 => {
            let (i, j) = (rng.random_range(0..n), rng.random_range(0..n));
            let mut m = out.j().clone();
            let v = other(m.get(i, j), rng);
            m.set(i, j, v);
            out.invol = SelfConjugate::new_unchecked(out.module.clone(), m);
        }
        1 => {
            let i = rng.random_range(0..n);
            out.unit[i] = other(&out.unit[i], rng);
        }
        _ => {
            let p = rng.random_range(0..n * n * n);
            out.structconst[p] = other(&out.structconst[p], rng);
        }
    }
    out
}

/// Like [`perturb`] but always changes an entry of `J`.
pub fn perturb_j<S: InvolutiveSemiring + Clone>(alg: &StarAlgebra<S>, rng: &mut dyn RngCore) -> StarAlgebra<S> {
    let s = alg.scalars();
    let n = alg.dim();
    let mut out = alg.clone().with_name(format!("{}-fault", alg.name()));
    let (i, j) = (rng.random_range(0..n), rng.random_range(0..n));
    let mut m = out.j().clone();
    let old = m.get(i, j).clone();
    let new = match s.elements() {
        Some(all) => {
            let choices: Vec<_> = all.into_iter().filter(|e| *e != old).collect();
            choices[rng.random_range(0..choices.len())].clone()
        }
        None => s.add(&old, &s.one()),
    };
    m.set(i, j, new);
    out.invol = SelfConjugate::new_unchecked(out.module.clone(), m);
    out
}

/// An action `a: A⊗X → X` of a non-reversing algebra on a self-conjugate,
/// given as one `dX×dX` matrix per basis element of `A`.
#[derive(Clone)]
pub struct InvolutiveAction<S: InvolutiveSemiring> {
    algebra: StarAlgebra<S>,
    space: SelfConjugate<S::Elem>,
    act: Vec<Matrix<S::Elem>>,
}

impl<S: InvolutiveSemiring + Clone> InvolutiveAction<S> {
    pub fn new(
        algebra: StarAlgebra<S>,
        space: SelfConjugate<S::Elem>,
        act: Vec<Matrix<S::Elem>>,
    ) -> Result<Self, StarError> {
        if algebra.mode() != Mode::NonReversing {
            return Err(StarError::RequiresNonReversing("an involutive action"));
        }
        let d = space.dim();
        if act.len() != algebra.dim() || act.iter().any(|m| m.shape() != (d, d)) {
            return Err(StarError::ActionShape { expected: algebra.dim(), dim: d });
        }
        Ok(Self { algebra, space, act })
    }

    pub fn algebra(&self) -> &StarAlgebra<S> {
        &self.algebra
    }

    pub fn space(&self) -> &SelfConjugate<S::Elem> {
        &self.space
    }

    /// The operator of `a`, `Σᵢ aᵢ·actᵢ`.
    pub fn operator(&self, a: &[S::Elem]) -> Matrix<S::Elem> {
        let s = self.algebra.scalars();
        let d = self.space.dim();
        a.iter().zip(&self.act).fold(Matrix::zeros(s, d, d), |acc, (c, m)| acc.add(s, &m.scale(s, c)))
    }

    pub fn act(&self, a: &[S::Elem], x: &[S::Elem]) -> Vec<S::Elem> {
        self.operator(a).apply(self.algebra.scalars(), x)
    }
}

/// Unit, associativity and compatibility `j_X(a·x) = a⁻·j_X(x)` on basis
/// elements of the algebra and of the space.
pub fn check_action<S: InvolutiveSemiring + Clone>(action: &InvolutiveAction<S>) -> Report {
    let alg = action.algebra();
    let s = alg.scalars();
    let n = alg.dim();
    let d = action.space().dim();
    let names = alg.module().basis();
    let mut c = Checker::new("action", alg.name());
    let unit_op = action.operator(alg.unit());
    c.check("unit", unit_op.is_identity(s), || format!("u acts as {unit_op:?}"));
    let assoc = c.law("assoc");
    let compat = c.law("compatible");
    for i in 0..n {
        let a = alg.basis_vector(i);
        for j in 0..n {
            let b = alg.basis_vector(j);
            let lhs = action.operator(&alg.mul(&a, &b));
            let rhs = action.operator(&a).mul(s, &action.operator(&b));
            c.record(assoc, lhs == rhs, || format!("({}, {})", names[i], names[j]));
        }
        for k in 0..d {
            let x = basis_vector(s, d, k);
            let lhs = action.space().apply(s, &action.act(&a, &x));
            let rhs = action.act(&alg.involve(&a), &action.space().apply(s, &x));
            c.record(compat, lhs == rhs, || format!("a={}, x=e{}", names[i], k + 1));
        }
    }
    c.finish()
}

/// Entrywise-conjugation matrices acting on columns `S^n` with coordinatewise
/// conjugation.
pub fn matrix_column_action<S: InvolutiveSemiring + Clone>(s: &S, n: usize) -> InvolutiveAction<S> {
    let alg = entrywise_matrix_algebra(s, n);
    let act = (0..n * n)
        .map(|p| Matrix::from_fn(n, n, |r, col| if (r, col) == (p / n, p % n) { s.one() } else { s.zero() }))
        .collect();
    InvolutiveAction::new(alg, std_selfconj(s, FreeModule::standard(n)), act).expect("non-reversing")
}

/// `S^k` acting on itself pointwise.
pub fn function_self_action<S: InvolutiveSemiring + Clone>(s: &S, k: usize) -> InvolutiveAction<S> {
    let alg = function_algebra(s, k);
    let act = (0..k).map(|i| Matrix::diagonal(s, &basis_vector(s, k, i))).collect();
    InvolutiveAction::new(alg, std_selfconj(s, FreeModule::standard(k)), act).expect("non-reversing")
}

/// `x ⊗ y` followed by `m`; agrees with [`StarAlgebra::mul`].
pub fn mul_via_matrix<S: InvolutiveSemiring + Clone>(alg: &StarAlgebra<S>, x: &[S::Elem], y: &[S::Elem]) -> Vec<S::Elem> {
    let s = alg.scalars();
    alg.mult_matrix().apply(s, &kron_coords(s, x, y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng_from_seed;
    use crate::scalars::{GaussianRational, GaussianRationals, Gf9Field, Rationals};
    use crate::words::{cyclic_group_table, symmetric_group_table};

    fn gi(re: i64, im: i64) -> GaussianRational {
        GaussianRational::from_ints(re, im)
    }

    fn unit_vec<S: InvolutiveSemiring + Clone>(alg: &StarAlgebra<S>, name: &str) -> Vec<S::Elem> {
        alg.basis_vector(alg.module().index_of(name).unwrap())
    }

    #[test]
    fn matrix_units_multiply() {
        let a = matrix_algebra(&GaussianRationals, 2);
        assert_eq!(a.dim(), 4);
        assert_eq!(a.unit(), &[gi(1, 0), gi(0, 0), gi(0, 0), gi(1, 0)]);
        assert_eq!(a.mul(&unit_vec(&a, "E12"), &unit_vec(&a, "E21")), unit_vec(&a, "E11"));
        assert_eq!(a.mul(&unit_vec(&a, "E21"), &unit_vec(&a, "E21")), alloc::vec![gi(0, 0); 4]);
        assert_eq!(a.involve(&unit_vec(&a, "E12")), unit_vec(&a, "E21"));
        assert_eq!(a.involve(&unit_vec(&a, "E11")), unit_vec(&a, "E11"));
        let x = scale_coords(&GaussianRationals, &gi(0, 1), &unit_vec(&a, "E11"));
        assert_eq!(a.involve(&x), scale_coords(&GaussianRationals, &gi(0, -1), &unit_vec(&a, "E11")));
        assert_eq!(a.involve(&a.involve(&x)), x);
        assert_eq!(mul_via_matrix(&a, &x, &unit_vec(&a, "E12")), a.mul(&x, &unit_vec(&a, "E12")));
    }

    #[test]
    fn matrix_algebra_passes_and_mislabel_fails() {
        let a = matrix_algebra(&GaussianRationals, 2);
        let r = check_star_laws(&a, true, 30, &mut rng_from_seed(0));
        assert!(r.passed(), "{r:?}");
        let wrong = StarAlgebra::new(
            GaussianRationals,
            "mislabeled",
            a.module().clone(),
            a.unit().to_vec(),
            a.structconst_flat().to_vec(),
            a.j().clone(),
            Mode::NonReversing,
        )
        .unwrap();
        let r = check_star_laws(&wrong, true, 0, &mut rng_from_seed(0));
        assert!(!r.law("mode_square").unwrap().verdict.is_pass());
        let (e12, e21) = (a.module().index_of("E12").unwrap(), a.module().index_of("E21").unwrap());
        assert!(!mode_square_holds(&a, Mode::NonReversing, e12, e21));
        for n in 2..=3 {
            assert!(mode_square_witness(&matrix_algebra(&Gf9Field, n), Mode::NonReversing).is_some());
        }
    }

    #[test]
    fn function_algebra_is_commutative() {
        let s = GaussianRationals;
        let f = function_algebra(&s, 2);
        assert_eq!(f.mul(&[gi(1, 0), gi(0, 1)], &[gi(1, 0), gi(0, -1)]), alloc::vec![gi(1, 0), gi(1, 0)]);
        let f3 = function_algebra(&s, 3);
        assert!(check_star_laws(&f3, true, 20, &mut rng_from_seed(1)).passed());
        assert!(check_mode_square(&f3, Mode::Reversing).passed());
        assert!(check_mode_square(&f3, Mode::NonReversing).passed());
        let one = function_algebra(&s, 1);
        assert_eq!(one.mul(&[gi(2, 1)], &[gi(0, 3)]), alloc::vec![s.mul(&gi(2, 1), &gi(0, 3))]);
        assert_eq!(one.involve(&[gi(2, 1)]), alloc::vec![gi(2, -1)]);
    }

    #[test]
    fn group_algebras() {
        let s = GaussianRationals;
        let z2 = group_algebra(&s, &GroupTable::new(cyclic_group_table(2)).unwrap());
        assert_eq!(z2.dim(), 2);
        assert_eq!(z2.mul(&z2.basis_vector(1), &z2.basis_vector(1)), z2.basis_vector(0));
        assert_eq!(z2.involve(&z2.basis_vector(1)), z2.basis_vector(1));
        assert_eq!(z2.involve(&z2.basis_vector(0)), z2.basis_vector(0));

        let s3 = group_algebra(&s, &GroupTable::new(symmetric_group_table(3)).unwrap());
        assert_eq!(s3.dim(), 6);
        assert!(!s3.is_commutative());
        assert!(check_mode_square(&s3, Mode::Reversing).passed());
        assert!(!check_mode_square(&s3, Mode::NonReversing).passed());
        assert!(check_star_laws(&s3, true, 20, &mut rng_from_seed(2)).passed());

        let z3 = group_algebra(&s, &GroupTable::new(cyclic_group_table(3)).unwrap());
        let ig = scale_coords(&s, &gi(0, 1), &z3.basis_vector(1));
        assert_eq!(z3.involve(&ig), scale_coords(&s, &gi(0, -1), &z3.basis_vector(2)));
    }

    #[test]
    fn group_table_validation() {
        assert!(GroupTable::new(alloc::vec![alloc::vec![0, 1], alloc::vec![1, 1]]).is_err());
        assert!(GroupTable::new(alloc::vec![alloc::vec![1, 0], alloc::vec![0, 1]]).is_err());
        assert!(GroupTable::new(alloc::vec![alloc::vec![0, 2], alloc::vec![1, 0]]).is_err());
        assert!(GroupTable::new(Vec::new()).is_err());
        // a monoid {0, 1} with 1·1 = 1 has no inverse for 1
        assert!(matches!(
            GroupTable::new(alloc::vec![alloc::vec![0, 1], alloc::vec![1, 1]]),
            Err(StarError::NotAGroup(_))
        ));
        let g = GroupTable::new(symmetric_group_table(3)).unwrap();
        assert!((0..6).all(|a| g.mul(a, g.inverse(a)) == 0));
    }

    #[test]
    fn two_routes_agree() {
        for alg in [entrywise_matrix_algebra(&Gf9Field, 2), function_algebra(&Gf9Field, 2)] {
            let l = check_lemma52(&alg).unwrap();
            assert!(l.diagrams.passed() && l.morphisms.passed(), "{l:?}");
        }
        let base = entrywise_matrix_algebra(&GaussianRationals, 2);
        let mut rng = rng_from_seed(9);
        for _ in 0..10 {
            let bad = perturb_j(&base, &mut rng);
            let l = check_lemma52(&bad).unwrap();
            assert!(l.agree(), "{l:?}");
            assert!(!l.diagrams.passed());
        }
        for _ in 0..20 {
            let bad = perturb(&function_algebra(&Gf9Field, 2), &mut rng);
            assert!(check_lemma52(&bad).unwrap().agree());
        }
        assert!(matches!(check_lemma52(&matrix_algebra(&Gf9Field, 2)), Err(StarError::RequiresNonReversing(_))));
    }

    #[test]
    fn actions() {
        assert!(check_action(&matrix_column_action(&GaussianRationals, 2)).passed());
        assert!(check_action(&function_self_action(&Gf9Field, 3)).passed());
        let s = GaussianRationals;
        let a = matrix_algebra(&s, 2);
        let act = (0..4).map(|_| Matrix::identity(&s, 2)).collect();
        assert!(matches!(
            InvolutiveAction::new(a, std_selfconj(&s, FreeModule::standard(2)), act),
            Err(StarError::RequiresNonReversing(_))
        ));
    }

    #[test]
    fn entrywise_over_trivial_scalars() {
        let s = Rationals;
        let a = entrywise_matrix_algebra(&s, 2);
        let x = random_coords(&s, 4, &mut rng_from_seed(4));
        assert_eq!(a.involve(&x), x);
        assert!(check_star_laws(&a, true, 10, &mut rng_from_seed(4)).passed());
        assert!(check_mode_square(&a, Mode::NonReversing).passed());
    }
}
