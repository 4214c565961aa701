//! Generic law checks over any finite involutive category.

use alloc::format;
use alloc::vec::Vec;

use rand::{Rng, RngCore};

use super::{CartesianInvCat, FinInvCat, InvFunctor, MonoidalInvCat, MorOf, ObjOf, ScObj, ScObject};
use crate::report::{Checker, Report};

/// Object tuples above this count are sampled.
const TUPLE_LIMIT: usize = 4096;
/// Morphisms drawn per hom-set for composition checks.
const PER_HOMSET: usize = 3;

/// `j: X̄ → X` with `j ∘ j̄ = ι⁻¹`.
pub fn is_self_conjugate<C: FinInvCat + ?Sized>(c: &C, x: &C::Obj, j: &C::Mor) -> bool {
    c.is_hom(j, &c.conj_obj(x), x) && c.compose(j, &c.conj_mor(j)) == c.iota_inv(x)
}

/// `ζ⁻¹ = ι⁻¹ ∘ ζ̄ : Ī → I`.
pub fn zeta_inverse_formula<C: MonoidalInvCat + ?Sized>(c: &C) -> C::Mor {
    c.compose(&c.iota_inv(&c.unit()), &c.conj_mor(&c.zeta()))
}

/// `ξ⁻¹ = ι⁻¹ ∘ ξ̄ ∘ (ι ⊗ ι)‾ : (X ⊗ Y)‾ → X̄ ⊗ Ȳ`.
pub fn xi_inverse_formula<C: MonoidalInvCat + ?Sized>(c: &C, x: &C::Obj, y: &C::Obj) -> C::Mor {
    let (xc, yc) = (c.conj_obj(x), c.conj_obj(y));
    let iotas = c.conj_mor(&c.tensor_mor(&c.iota(x), &c.iota(y)));
    let xi_bar = c.conj_mor(&c.xi(&xc, &yc));
    c.compose(&c.iota_inv(&c.tensor(&xc, &yc)), &c.compose(&xi_bar, &iotas))
}

/// `ν⁻¹ = ι⁻¹ ∘ ν̄ ∘ F(ι)‾ : F(X)‾ → F(X̄)`.
pub fn nu_inverse_formula<F: InvFunctor>(f: &F, x: &ObjOf<F::Dom>) -> MorOf<F::Cod> {
    let (d, c) = (f.dom(), f.cod());
    let xc = d.conj_obj(x);
    let step1 = c.conj_mor(&f.mor(&d.iota(x)));
    let step2 = c.conj_mor(&f.nu(&xc));
    c.compose(&c.iota_inv(&f.obj(&xc)), &c.compose(&step2, &step1))
}

fn pairs<T: Clone>(objs: &[T], budget: usize, rng: &mut dyn RngCore) -> Vec<(T, T)> {
    let n = objs.len();
    if n == 0 {
        return Vec::new();
    }
    if n * n <= TUPLE_LIMIT {
        return objs.iter().flat_map(|a| objs.iter().map(move |b| (a.clone(), b.clone()))).collect();
    }
    (0..budget).map(|_| (objs[rng.random_range(0..n)].clone(), objs[rng.random_range(0..n)].clone())).collect()
}

fn triples<T: Clone>(objs: &[T], budget: usize, rng: &mut dyn RngCore) -> Vec<(T, T, T)> {
    let n = objs.len();
    if n == 0 {
        return Vec::new();
    }
    if n * n * n <= budget.max(1) {
        let mut out = Vec::new();
        for a in objs {
            for b in objs {
                for c in objs {
                    out.push((a.clone(), b.clone(), c.clone()));
                }
            }
        }
        return out;
    }
    (0..budget)
        .map(|_| {
            let pick = |rng: &mut dyn RngCore| objs[rng.random_range(0..n)].clone();
            (pick(rng), pick(rng), pick(rng))
        })
        .collect()
}

fn pick<M: Clone>(maps: &[M], k: usize, rng: &mut dyn RngCore) -> Vec<M> {
    if maps.len() <= k {
        return maps.to_vec();
    }
    (0..k).map(|_| maps[rng.random_range(0..maps.len())].clone()).collect()
}

/// `ι_X̄ = ῑ_X`, `ι` invertible and natural, functoriality of the
/// involution, and the transposition bijection `Hom(X̄, Y) ≅ Hom(X, Ȳ)`
/// (`f ↦ f̄ ∘ ι`, `g ↦ ι⁻¹ ∘ ḡ`) composing to identities both ways.
pub fn check_iota_coherence<C: FinInvCat>(c: &C, budget: usize, rng: &mut dyn RngCore) -> Report {
    let mut ch = Checker::new("iota", c.name());
    let iota_hom = ch.law("iota_hom");
    let iota_inv = ch.law("iota_inverse");
    let eq1 = ch.law("iota_conj_equals_conj_iota");
    let conj_id = ch.law("conj_identity");
    let conj_hom = ch.law("conj_hom");
    let conj_comp = ch.law("conj_composition");
    let natural = ch.law("iota_natural");
    let transpose = ch.law("transpose_roundtrip");
    let objs = c.objects();
    for x in &objs {
        let xc = c.conj_obj(x);
        let xcc = c.conj_obj(&xc);
        let i = c.iota(x);
        let ii = c.iota_inv(x);
        ch.record(iota_hom, c.is_hom(&i, x, &xcc) && c.is_hom(&ii, &xcc, x), || format!("X={x:?}"));
        let ok = c.compose(&ii, &i) == c.identity(x) && c.compose(&i, &ii) == c.identity(&xcc);
        ch.record(iota_inv, ok, || format!("X={x:?}"));
        let lhs = c.iota(&xc);
        let rhs = c.conj_mor(&i);
        ch.record(eq1, lhs == rhs, || format!("X={x:?}: ι_X̄ = {lhs:?}, ῑ_X = {rhs:?}"));
        ch.record(conj_id, c.conj_mor(&c.identity(x)) == c.identity(&xc), || format!("X={x:?}"));
    }
    for (x, y) in pairs(&objs, budget, rng) {
        let (xc, yc) = (c.conj_obj(&x), c.conj_obj(&y));
        for f in c.homs(&x, &y, budget, rng).maps {
            ch.record(conj_hom, c.is_hom(&c.conj_mor(&f), &xc, &yc), || format!("f={f:?}: {x:?} → {y:?}"));
            let lhs = c.compose(&c.conj_mor(&c.conj_mor(&f)), &c.iota(&x));
            let rhs = c.compose(&c.iota(&y), &f);
            ch.record(natural, lhs == rhs, || format!("f={f:?}: {x:?} → {y:?}"));
        }
        for f in c.homs(&xc, &y, budget, rng).maps {
            let hat = c.compose(&c.conj_mor(&f), &c.iota(&x));
            let back = c.compose(&c.iota_inv(&y), &c.conj_mor(&hat));
            let ok = c.is_hom(&hat, &x, &yc) && back == f;
            ch.record(transpose, ok, || format!("f={f:?}: X̄ → Y, X={x:?}, Y={y:?}"));
        }
        for g in c.homs(&x, &yc, budget, rng).maps {
            let hat = c.compose(&c.iota_inv(&y), &c.conj_mor(&g));
            let back = c.compose(&c.conj_mor(&hat), &c.iota(&x));
            let ok = c.is_hom(&hat, &xc, &y) && back == g;
            ch.record(transpose, ok, || format!("g={g:?}: X → Ȳ, X={x:?}, Y={y:?}"));
        }
    }
    for (x, y, z) in triples(&objs, budget, rng) {
        let fs = c.homs(&x, &y, budget, rng).maps;
        let gs = c.homs(&y, &z, budget, rng).maps;
        for f in pick(&fs, PER_HOMSET, rng) {
            for g in pick(&gs, PER_HOMSET, rng) {
                let lhs = c.conj_mor(&c.compose(&g, &f));
                let rhs = c.compose(&c.conj_mor(&g), &c.conj_mor(&f));
                ch.record(conj_comp, lhs == rhs, || format!("f={f:?}, g={g:?}"));
            }
        }
    }
    ch.finish()
}

/// `ι` is monoidal, naturality of `ξ` and its compatibility with
/// `α, λ, ρ, γ`, that the structure maps are morphisms, and the closed
/// inverse formulas for `ζ` and `ξ` compared with directly computed inverses.
pub fn check_monoidal_7<C: MonoidalInvCat>(c: &C, budget: usize, rng: &mut dyn RngCore) -> Report {
    let mut ch = Checker::new("monoidal7", c.name());
    let unit = c.unit();
    let unit_c = c.conj_obj(&unit);
    let zeta = c.zeta();
    ch.check("zeta_hom", c.is_hom(&zeta, &unit, &unit_c), || format!("ζ = {zeta:?}"));
    ch.check("unit_object", c.is_object(&unit), || format!("I = {unit:?}"));
    let lhs = c.compose(&c.conj_mor(&zeta), &zeta);
    ch.check("iota_unit", lhs == c.iota(&unit), || format!("ζ̄∘ζ = {lhs:?}, ι_I = {:?}", c.iota(&unit)));
    let zi = zeta_inverse_formula(c);
    let ok = c.compose(&zi, &zeta) == c.identity(&unit) && c.compose(&zeta, &zi) == c.identity(&unit_c);
    ch.check("zeta_inverse_formula", ok, || format!("ι⁻¹∘ζ̄ = {zi:?}"));
    let direct = c.invert(&zeta, &unit, &unit_c);
    ch.check("zeta_inverse_matches", direct.as_ref() == Some(&zi), || format!("formula {zi:?}, direct {direct:?}"));

    let objs = c.objects();
    let tensor_obj = ch.law("tensor_object");
    let xi_hom = ch.law("xi_hom");
    let iota_tensor = ch.law("iota_tensor");
    let xi_inv = ch.law("xi_inverse_formula");
    let xi_inv_direct = ch.law("xi_inverse_matches");
    let xi_gamma = ch.law("xi_gamma");
    let xi_lambda = ch.law("xi_lambda");
    let xi_rho = ch.law("xi_rho");
    let structure_homs = ch.law("structure_maps_hom");
    let xi_natural = ch.law("xi_natural");
    for (x, y) in pairs(&objs, budget, rng) {
        let (xc, yc) = (c.conj_obj(&x), c.conj_obj(&y));
        let xy = c.tensor(&x, &y);
        let xy_c = c.conj_obj(&xy);
        let xcyc = c.tensor(&xc, &yc);
        ch.record(tensor_obj, c.is_object(&xy), || format!("X={x:?}, Y={y:?}: X⊗Y = {xy:?}"));
        let xi = c.xi(&x, &y);
        ch.record(xi_hom, c.is_hom(&xi, &xcyc, &xy_c), || format!("X={x:?}, Y={y:?}: ξ = {xi:?}"));
        // ι_{X⊗Y} = ξ̄ ∘ ξ_{X̄,Ȳ} ∘ (ι ⊗ ι)
        let rhs = c.compose(
            &c.conj_mor(&xi),
            &c.compose(&c.xi(&xc, &yc), &c.tensor_mor(&c.iota(&x), &c.iota(&y))),
        );
        ch.record(iota_tensor, rhs == c.iota(&xy), || format!("X={x:?}, Y={y:?}: {rhs:?}"));
        let inv = xi_inverse_formula(c, &x, &y);
        let ok = c.compose(&inv, &xi) == c.identity(&xcyc) && c.compose(&xi, &inv) == c.identity(&xy_c);
        ch.record(xi_inv, ok, || format!("X={x:?}, Y={y:?}: {inv:?}"));
        let direct = c.invert(&xi, &xcyc, &xy_c);
        ch.record(xi_inv_direct, direct.as_ref() == Some(&inv), || format!("X={x:?}, Y={y:?}: formula {inv:?}, direct {direct:?}"));
        // γ̄ ∘ ξ_{X,Y} = ξ_{Y,X} ∘ γ_{X̄,Ȳ}
        let lhs = c.compose(&c.conj_mor(&c.gamma(&x, &y)), &xi);
        let rhs = c.compose(&c.xi(&y, &x), &c.gamma(&xc, &yc));
        ch.record(xi_gamma, lhs == rhs, || format!("X={x:?}, Y={y:?}"));
        let yx = c.tensor(&y, &x);
        ch.record(structure_homs, c.is_hom(&c.gamma(&x, &y), &xy, &yx), || format!("γ on X={x:?}, Y={y:?}"));
        let xs = c.homs(&x, &x, budget, rng).maps;
        let ys = c.homs(&y, &y, budget, rng).maps;
        for f in pick(&xs, PER_HOMSET, rng) {
            for g in pick(&ys, PER_HOMSET, rng) {
                let lhs = c.compose(&xi, &c.tensor_mor(&c.conj_mor(&f), &c.conj_mor(&g)));
                let rhs = c.compose(&c.conj_mor(&c.tensor_mor(&f, &g)), &xi);
                ch.record(xi_natural, lhs == rhs, || format!("f={f:?}, g={g:?}"));
            }
        }
    }
    for x in &objs {
        let xc = c.conj_obj(x);
        // λ̄ ∘ ξ_{I,X} ∘ (ζ ⊗ id) = λ_X̄
        let lhs = c.compose(
            &c.conj_mor(&c.lambda(x)),
            &c.compose(&c.xi(&unit, x), &c.tensor_mor(&zeta, &c.identity(&xc))),
        );
        ch.record(xi_lambda, lhs == c.lambda(&xc), || format!("X={x:?}: {lhs:?}"));
        let lhs = c.compose(
            &c.conj_mor(&c.rho(x)),
            &c.compose(&c.xi(x, &unit), &c.tensor_mor(&c.identity(&xc), &zeta)),
        );
        ch.record(xi_rho, lhs == c.rho(&xc), || format!("X={x:?}: {lhs:?}"));
        let ok = c.is_hom(&c.lambda(x), &c.tensor(&unit, x), x) && c.is_hom(&c.rho(x), &c.tensor(x, &unit), x);
        ch.record(structure_homs, ok, || format!("λ, ρ on X={x:?}"));
    }
    let xi_alpha = ch.law("xi_alpha");
    for (x, y, z) in triples(&objs, budget, rng) {
        let (xc, yc, zc) = (c.conj_obj(&x), c.conj_obj(&y), c.conj_obj(&z));
        // ᾱ ∘ ξ_{X,Y⊗Z} ∘ (id ⊗ ξ_{Y,Z}) = ξ_{X⊗Y,Z} ∘ (ξ_{X,Y} ⊗ id) ∘ α_{X̄,Ȳ,Z̄}
        let yz = c.tensor(&y, &z);
        let xy = c.tensor(&x, &y);
        let lhs = c.compose(
            &c.conj_mor(&c.alpha(&x, &y, &z)),
            &c.compose(&c.xi(&x, &yz), &c.tensor_mor(&c.identity(&xc), &c.xi(&y, &z))),
        );
        let rhs = c.compose(
            &c.xi(&xy, &z),
            &c.compose(&c.tensor_mor(&c.xi(&x, &y), &c.identity(&zc)), &c.alpha(&xc, &yc, &zc)),
        );
        ch.record(xi_alpha, lhs == rhs, || format!("X={x:?}, Y={y:?}, Z={z:?}"));
        let dom = c.tensor(&x, &yz);
        let cod = c.tensor(&xy, &z);
        ch.record(structure_homs, c.is_hom(&c.alpha(&x, &y, &z), &dom, &cod), || format!("α on {x:?}, {y:?}, {z:?}"));
    }
    ch.finish()
}

/// Products in `SC(C)` for the pair `c1, c2`: the product self-conjugate is
/// valid, the projections are maps of self-conjugates, and pairing is a
/// bijection onto the product hom-set for every test object `Z`.
pub fn check_sc_product<C: CartesianInvCat>(
    sc: &C,
    c1: &C::Obj,
    c2: &C::Obj,
    budget: usize,
    rng: &mut dyn RngCore,
) -> Report {
    let mut ch = Checker::new("scproduct", format!("{}:{c1:?}x{c2:?}", sc.name()));
    let p = sc.product(c1, c2);
    ch.check("product_valid", sc.is_object(&p), || format!("{p:?}"));
    let (p1, p2) = (sc.proj(c1, c2, 0), sc.proj(c1, c2, 1));
    ch.check("projections_hom", sc.is_hom(&p1, &p, c1) && sc.is_hom(&p2, &p, c2), || format!("{p1:?}, {p2:?}"));
    let pair_hom = ch.law("pair_hom");
    let beta = ch.law("pair_projections");
    let eta = ch.law("pair_unique");
    let count = ch.law("hom_count");
    for z in sc.objects() {
        let fs = sc.homs(&z, c1, budget, rng);
        let gs = sc.homs(&z, c2, budget, rng);
        let hs = sc.homs(&z, &p, budget, rng);
        let mut pair_count = 0usize;
        for f in &fs.maps {
            for g in &gs.maps {
                pair_count += 1;
                let h = sc.pair(f, g, c1, c2);
                ch.record(pair_hom, sc.is_hom(&h, &z, &p), || format!("Z={z:?}, f={f:?}, g={g:?}"));
                let ok = sc.compose(&p1, &h) == *f && sc.compose(&p2, &h) == *g;
                ch.record(beta, ok, || format!("Z={z:?}, f={f:?}, g={g:?}"));
            }
        }
        for h in &hs.maps {
            let back = sc.pair(&sc.compose(&p1, h), &sc.compose(&p2, h), c1, c2);
            ch.record(eta, back == *h, || format!("Z={z:?}, h={h:?}"));
        }
        if fs.exhaustive && gs.exhaustive && hs.exhaustive {
            ch.record(count, pair_count == hs.maps.len(), || {
                format!("Z={z:?}: {pair_count} pairs, {} maps into the product", hs.maps.len())
            });
        }
    }
    ch.finish()
}

/// The triangle `ν̄ ∘ ν ∘ F(ι) = ι`, the closed inverse formula for `ν`
/// (against the inverse computed from the representation), naturality of
/// `ν` and functoriality.
pub fn check_functor_involutive<F: InvFunctor>(f: &F, budget: usize, rng: &mut dyn RngCore) -> Report {
    let (d, c) = (f.dom(), f.cod());
    let mut ch = Checker::new("nu", f.name());
    let nu_hom = ch.law("nu_hom");
    let diagram3 = ch.law("diagram3");
    let inv_formula = ch.law("nu_inverse_formula");
    let inv_direct = ch.law("nu_inverse_matches");
    let functor_id = ch.law("functor_identity");
    let natural = ch.law("nu_natural");
    let functor_hom = ch.law("functor_hom");
    let functor_comp = ch.law("functor_composition");
    let objs = d.objects();
    for x in &objs {
        let xc = d.conj_obj(x);
        let fx = f.obj(x);
        let fxc = f.obj(&xc);
        let fx_c = c.conj_obj(&fx);
        let nu = f.nu(x);
        ch.record(nu_hom, c.is_hom(&nu, &fxc, &fx_c), || format!("X={x:?}"));
        // ν̄_X ∘ ν_X̄ ∘ F(ι_X) = ι_{F X}
        let lhs = c.compose(&c.conj_mor(&nu), &c.compose(&f.nu(&xc), &f.mor(&d.iota(x))));
        ch.record(diagram3, lhs == c.iota(&fx), || format!("X={x:?}: {lhs:?}"));
        let inv = nu_inverse_formula(f, x);
        let ok = c.compose(&inv, &nu) == c.identity(&fxc) && c.compose(&nu, &inv) == c.identity(&fx_c);
        ch.record(inv_formula, ok, || format!("X={x:?}: {inv:?}"));
        let direct = c.invert(&nu, &fxc, &fx_c);
        ch.record(inv_direct, direct.as_ref() == Some(&inv), || format!("X={x:?}: direct {direct:?}"));
        ch.record(functor_id, f.mor(&d.identity(x)) == c.identity(&fx), || format!("X={x:?}"));
    }
    for (x, y) in pairs(&objs, budget, rng) {
        let (fx, fy) = (f.obj(&x), f.obj(&y));
        for g in d.homs(&x, &y, budget, rng).maps {
            let fg = f.mor(&g);
            ch.record(functor_hom, c.is_hom(&fg, &fx, &fy), || format!("f={g:?}"));
            // F(g)‾ ∘ ν_X = ν_Y ∘ F(ḡ)
            let lhs = c.compose(&c.conj_mor(&fg), &f.nu(&x));
            let rhs = c.compose(&f.nu(&y), &f.mor(&d.conj_mor(&g)));
            ch.record(natural, lhs == rhs, || format!("f={g:?}: {x:?} → {y:?}"));
        }
    }
    for (x, y, z) in triples(&objs, budget, rng) {
        let gs = d.homs(&x, &y, budget, rng).maps;
        let hs = d.homs(&y, &z, budget, rng).maps;
        for g in pick(&gs, PER_HOMSET, rng) {
            for h in pick(&hs, PER_HOMSET, rng) {
                let lhs = f.mor(&d.compose(&h, &g));
                let rhs = c.compose(&f.mor(&h), &f.mor(&g));
                ch.record(functor_comp, lhs == rhs, || format!("f={g:?}, g={h:?}"));
            }
        }
    }
    ch.finish()
}

/// The lift to self-conjugates on the given objects: `SC(F)(X, j) = F(j) ∘ ν⁻¹`
/// is a self-conjugate on `F(X)`, `F` sends maps of self-conjugates to maps
/// of the lifted ones (so forgetting commutes with lifting), and the
/// comultiplication `(X, j) ↦ ((X, j), j)` is a self-conjugate in
/// `SC(SC(C))` whose underlying object is `(X, j)`.
///
/// When `expected` is given the lifted structure is compared with it.
pub fn check_sc_lift<F, C>(
    f: &F,
    objects: &[ScObj<C>],
    expected: Option<&dyn Fn(&ScObj<C>) -> MorOf<C>>,
    budget: usize,
    rng: &mut dyn RngCore,
) -> Report
where
    C: FinInvCat + Clone,
    F: InvFunctor<Dom = C, Cod = C>,
{
    let c = f.cod();
    let mut ch = Checker::new("sclift", f.name());
    let valid = ch.law("lift_valid");
    let counit = ch.law("lift_counit");
    let matches = expected.map(|_| ch.law("lift_expected"));
    let comult = ch.law("comultiplication_valid");
    let comult_counit = ch.law("comultiplication_counit");
    let lift = |o: &ScObj<C>| -> ScObj<C> {
        ScObject { object: f.obj(&o.object), j: c.compose(&f.mor(&o.j), &nu_inverse_formula(f, &o.object)) }
    };
    let sc = super::ScCat::with_objects(c.clone(), objects.to_vec());
    for o in objects {
        let lifted = lift(o);
        ch.record(valid, is_self_conjugate(c, &lifted.object, &lifted.j), || format!("{o:?} ↦ {lifted:?}"));
        if let (Some(e), Some(matches)) = (expected, matches) {
            let want = e(o);
            ch.record(matches, lifted.j == want, || format!("{o:?}: lifted {:?}, expected {want:?}", lifted.j));
        }
        let oc = sc.conj_obj(o);
        let ok = sc.is_hom(&o.j, &oc, o) && is_self_conjugate(&sc, o, &o.j);
        ch.record(comult, ok, || format!("{o:?}"));
        let delta = ScObject { object: o.clone(), j: o.j.clone() };
        ch.record(comult_counit, delta.object == *o, || format!("{o:?}"));
    }
    for (a, b) in pairs(objects, budget, rng) {
        let (la, lb) = (lift(&a), lift(&b));
        for h in sc.homs(&a, &b, budget, rng).maps {
            let fh = f.mor(&h);
            let ok = c.is_hom(&fh, &la.object, &lb.object)
                && c.compose(&fh, &la.j) == c.compose(&lb.j, &c.conj_mor(&fh));
            ch.record(counit, ok, || format!("h={h:?}: {a:?} → {b:?}"));
        }
    }
    ch.finish()
}
